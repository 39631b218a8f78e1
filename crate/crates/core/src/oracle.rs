//! Brute-force verification of the rules engine.
//!
//! Nothing in here goes through [`Board::winner`] or its row/transpose
//! machinery except the code under test: lines are read off a hardcoded table
//! of coordinate triples, boards are generated from base-3 digits, and the
//! layered census decides terminal states with the triple scan alone.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::board::{Board, CellMark, GameStatus, Player, WinLine, CELLS, SIZE};

/// The eight lines as explicit coordinate triples, in reporting priority.
const TRIPLES: [(WinLine, [(usize, usize); 3]); 8] = [
    (WinLine::row(0), [(0, 0), (0, 1), (0, 2)]),
    (WinLine::row(1), [(1, 0), (1, 1), (1, 2)]),
    (WinLine::row(2), [(2, 0), (2, 1), (2, 2)]),
    (WinLine::column(0), [(0, 0), (1, 0), (2, 0)]),
    (WinLine::column(1), [(0, 1), (1, 1), (2, 1)]),
    (WinLine::column(2), [(0, 2), (1, 2), (2, 2)]),
    (WinLine::main_diagonal(), [(0, 0), (1, 1), (2, 2)]),
    (WinLine::anti_diagonal(), [(0, 2), (1, 1), (2, 0)]),
];

/// Number of distinct boards over `{Empty, X, O}`.
pub const BOARD_COUNT: usize = 19_683;

/// Every `(player, line)` whose three cells all carry that player's mark.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LineScanResult {
    /// In scan (priority) order, no duplicates.
    pub winning_lines: Vec<(Player, WinLine)>,
}

impl LineScanResult {
    pub fn is_empty(&self) -> bool {
        self.winning_lines.is_empty()
    }

    pub fn len(&self) -> usize {
        self.winning_lines.len()
    }

    pub fn contains(&self, entry: &(Player, WinLine)) -> bool {
        self.winning_lines.contains(entry)
    }

    /// Highest-priority winning line.
    pub fn first(&self) -> Option<(Player, WinLine)> {
        self.winning_lines.first().copied()
    }

    pub fn has_winner(&self, player: Player) -> bool {
        self.winning_lines.iter().any(|&(p, _)| p == player)
    }
}

/// Naive scan of all eight coordinate triples.
pub fn brute_force_lines(b: &Board) -> LineScanResult {
    let cells = b.cells();
    let winning_lines = TRIPLES
        .iter()
        .filter_map(|&(line, [p, q, r])| {
            let m = cells[p.0][p.1];
            let uniform = m == cells[q.0][q.1] && m == cells[r.0][r.1];
            match m {
                CellMark::X if uniform => Some((Player::X, line)),
                CellMark::O if uniform => Some((Player::O, line)),
                _ => None,
            }
        })
        .collect();
    LineScanResult { winning_lines }
}

/// Decode `n` in `0..3^9` as a board, most significant digit first.
/// Digit 0 is empty, 1 is X, 2 is O.
pub fn board_from_index(mut n: usize) -> Board {
    assert!(n < BOARD_COUNT, "board index out of range");
    let mut cells = [[CellMark::Empty; SIZE]; SIZE];
    for k in (0..CELLS).rev() {
        cells[k / SIZE][k % SIZE] = match n % 3 {
            0 => CellMark::Empty,
            1 => CellMark::X,
            _ => CellMark::O,
        };
        n /= 3;
    }
    Board::from_cells(cells)
}

/// All 3^9 boards.
pub fn all_boards() -> impl Iterator<Item = Board> {
    (0..BOARD_COUNT).map(board_from_index)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub board: Board,
    /// What the triple scan says should be reported.
    pub expected: Option<(Player, WinLine)>,
    /// What the checker under test reported.
    pub actual: Option<(Player, WinLine)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub boards_checked: usize,
    pub mismatches: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

/// Check [`Board::winner`] against the triple scan on every board.
pub fn verify_equivalence() -> EquivalenceReport {
    verify_equivalence_with(Board::winner)
}

/// Check an arbitrary winner function against the triple scan on every board.
///
/// A board matches when the checker reports a win exactly when the scan finds
/// one, and the reported win is the scan's highest-priority line.
pub fn verify_equivalence_with<F>(checker: F) -> EquivalenceReport
where
    F: Fn(&Board) -> Option<(Player, WinLine)>,
{
    let mut report = EquivalenceReport {
        boards_checked: 0,
        mismatches: 0,
        first_mismatch: None,
    };
    for board in all_boards() {
        report.boards_checked += 1;
        let expected = brute_force_lines(&board).first();
        let actual = checker(&board);
        if expected != actual {
            report.mismatches += 1;
            report.first_mismatch.get_or_insert(Mismatch {
                board,
                expected,
                actual,
            });
        }
    }
    report
}

/// Outcome counts over every complete game, where a game is a distinct move
/// sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationReport {
    pub total_games: u64,
    pub x_wins: u64,
    pub o_wins: u64,
    pub draws: u64,
    /// Distinct boards reachable by legal play, the empty board and terminal
    /// boards included.
    pub legal_positions: u64,
    pub earliest_win_ply: u32,
}

/// Census values, frozen after [`enumerate_games`] and
/// [`enumerate_games_layered`] agreed on them exactly.
pub const GOLDEN_CENSUS: EnumerationReport = EnumerationReport {
    total_games: 255_168,
    x_wins: 131_184,
    o_wins: 77_904,
    draws: 46_080,
    legal_positions: 5_478,
    earliest_win_ply: 5,
};

impl fmt::Display for EnumerationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "total_games: {}", self.total_games)?;
        writeln!(f, "x_wins: {}", self.x_wins)?;
        writeln!(f, "o_wins: {}", self.o_wins)?;
        writeln!(f, "draws: {}", self.draws)?;
        writeln!(f, "legal_positions: {}", self.legal_positions)?;
        write!(f, "earliest_win_ply: {}", self.earliest_win_ply)
    }
}

/// One move of an enumerated game.
pub type Move = (Player, usize, usize);

type GameVisitor<'a> = &'a mut dyn FnMut(&[Move], GameStatus);

struct Walk<'a> {
    positions: HashSet<Board>,
    report: EnumerationReport,
    path: Vec<Move>,
    on_game: Option<GameVisitor<'a>>,
}

impl Walk<'_> {
    fn descend(&mut self, board: Board, status: GameStatus) {
        self.positions.insert(board);
        let turn = match status {
            GameStatus::InProgress { turn } => turn,
            terminal => {
                self.record(terminal);
                return;
            }
        };
        for row in 0..SIZE {
            for col in 0..SIZE {
                if board[(row, col)].is_empty() {
                    let next = board.with_mark(row, col, turn.mark());
                    self.path.push((turn, row, col));
                    self.descend(next, next.status(turn.opponent()));
                    self.path.pop();
                }
            }
        }
    }

    fn record(&mut self, terminal: GameStatus) {
        let r = &mut self.report;
        r.total_games += 1;
        match terminal {
            GameStatus::Won { winner, .. } => {
                match winner {
                    Player::X => r.x_wins += 1,
                    Player::O => r.o_wins += 1,
                }
                r.earliest_win_ply = r.earliest_win_ply.min(self.path.len() as u32);
            }
            GameStatus::Draw => r.draws += 1,
            GameStatus::InProgress { .. } => unreachable!("record called on a live game"),
        }
        if let Some(f) = self.on_game.as_mut() {
            f(&self.path, terminal);
        }
    }
}

fn walk(on_game: Option<GameVisitor<'_>>) -> EnumerationReport {
    let mut w = Walk {
        positions: HashSet::new(),
        report: EnumerationReport {
            total_games: 0,
            x_wins: 0,
            o_wins: 0,
            draws: 0,
            legal_positions: 0,
            earliest_win_ply: u32::MAX,
        },
        path: Vec::with_capacity(CELLS),
        on_game,
    };
    let start = Board::empty();
    w.descend(start, start.status(Player::X));
    w.report.legal_positions = w.positions.len() as u64;
    w.report
}

/// Depth-first walk over every legal move sequence from the empty board.
pub fn enumerate_games() -> EnumerationReport {
    walk(None)
}

/// Like [`enumerate_games`], calling `f` with each complete game's moves and
/// terminal status, in a fixed order.
pub fn for_each_game<F>(mut f: F) -> EnumerationReport
where
    F: FnMut(&[Move], GameStatus),
{
    walk(Some(&mut f))
}

/// Breadth-first census over positions, carrying for each board the number of
/// move sequences that reach it. Terminal states are decided by the triple
/// scan and an empty-cell count only.
pub fn enumerate_games_layered() -> EnumerationReport {
    let mut report = EnumerationReport {
        total_games: 0,
        x_wins: 0,
        o_wins: 0,
        draws: 0,
        legal_positions: 0,
        earliest_win_ply: u32::MAX,
    };
    let mut layer: HashMap<Board, u64> = HashMap::from([(Board::empty(), 1)]);
    for ply in 0..=CELLS {
        report.legal_positions += layer.len() as u64;
        let mover = if ply % 2 == 0 { Player::X } else { Player::O };
        let mut next: HashMap<Board, u64> = HashMap::new();
        for (board, &paths) in &layer {
            let scan = brute_force_lines(board);
            if let Some((winner, _)) = scan.first() {
                report.total_games += paths;
                match winner {
                    Player::X => report.x_wins += paths,
                    Player::O => report.o_wins += paths,
                }
                report.earliest_win_ply = report.earliest_win_ply.min(ply as u32);
                continue;
            }
            let empties: Vec<(usize, usize)> = (0..CELLS)
                .map(|k| (k / SIZE, k % SIZE))
                .filter(|&(r, c)| board.cells()[r][c] == CellMark::Empty)
                .collect();
            if empties.is_empty() {
                report.total_games += paths;
                report.draws += paths;
                continue;
            }
            for (r, c) in empties {
                *next.entry(board.with_mark(r, c, mover.mark())).or_default() += paths;
            }
        }
        layer = next;
    }
    debug_assert!(layer.is_empty());
    report
}

/// Winner checks built on the literal two-valued reading of the mark
/// encoding, kept to prove the harness catches it.
pub mod faults {
    use crate::board::{Board, CellMark, Player, WinLine, SIZE};

    /// X is 1 and both O and empty are 0, so an empty line reads as an O win.
    pub fn literal_binary_winner(b: &Board) -> Option<(Player, WinLine)> {
        let bits = b.cells().map(|row| {
            row.map(|m| match m {
                CellMark::X => 1u8,
                CellMark::O | CellMark::Empty => 0,
            })
        });
        let decode = |bit: u8| if bit == 1 { Player::X } else { Player::O };
        let row_hit = |g: &[[u8; SIZE]; SIZE]| {
            g.iter()
                .position(|r| r[0] == r[1] && r[1] == r[2])
                .map(|i| (decode(g[i][0]), i))
        };
        if let Some((p, i)) = row_hit(&bits) {
            return Some((p, WinLine::row(i)));
        }
        let mut transposed = [[0u8; SIZE]; SIZE];
        for (r, row) in bits.iter().enumerate() {
            for (c, &bit) in row.iter().enumerate() {
                transposed[c][r] = bit;
            }
        }
        if let Some((p, i)) = row_hit(&transposed) {
            return Some((p, WinLine::column(i)));
        }
        if bits[0][0] == bits[1][1] && bits[1][1] == bits[2][2] {
            return Some((decode(bits[1][1]), WinLine::main_diagonal()));
        }
        if bits[0][2] == bits[1][1] && bits[1][1] == bits[2][0] {
            return Some((decode(bits[1][1]), WinLine::anti_diagonal()));
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::parse_board;

    #[test]
    fn triple_table_matches_line_coords() {
        for (line, coords) in TRIPLES {
            assert_eq!(line.coords(), coords);
        }
    }

    #[test]
    fn brute_force_examples() {
        assert!(brute_force_lines(&Board::empty()).is_empty());

        let all_x = parse_board("XXXXXXXXX").unwrap();
        let scan = brute_force_lines(&all_x);
        assert_eq!(scan.len(), 8);
        assert!(scan.winning_lines.iter().all(|&(p, _)| p == Player::X));

        let fig = parse_board("XXX.OO.O.").unwrap();
        assert_eq!(
            brute_force_lines(&fig).winning_lines,
            vec![(Player::X, WinLine::row(0))]
        );
    }

    #[test]
    fn board_indexing_covers_every_board_once() {
        let set: HashSet<Board> = all_boards().collect();
        assert_eq!(set.len(), BOARD_COUNT);
        assert_eq!(board_from_index(0), Board::empty());
        assert_eq!(board_from_index(1).to_string(), "........X");
        assert_eq!(board_from_index(BOARD_COUNT - 1).to_string(), "OOOOOOOOO");
    }

    #[test]
    fn draw_board_has_no_winner_either_way() {
        let b = parse_board("XOXXOOOXX").unwrap();
        assert!(brute_force_lines(&b).is_empty());
        assert_eq!(b.winner(), None);
    }

    #[test]
    fn equivalence_on_correct_build() {
        let report = verify_equivalence();
        assert_eq!(report.boards_checked, BOARD_COUNT);
        assert_eq!(report.mismatches, 0);
        assert!(report.first_mismatch.is_none());
    }

    #[test]
    fn equivalence_flags_literal_binary_encoding() {
        let report = verify_equivalence_with(faults::literal_binary_winner);
        assert!(report.mismatches > 0);
        let first = report.first_mismatch.unwrap();
        // board index 0 is the empty board: every line is empty and reads as O
        assert_eq!(first.board, Board::empty());
        assert_eq!(first.expected, None);
        assert_eq!(first.actual, Some((Player::O, WinLine::row(0))));
    }

    #[test]
    fn census_traversals_agree() {
        let dfs = enumerate_games();
        let bfs = enumerate_games_layered();
        assert_eq!(dfs, bfs);
        assert_eq!(dfs, GOLDEN_CENSUS);
    }

    #[test]
    fn report_renders_in_stable_order() {
        let text = GOLDEN_CENSUS.to_string();
        let keys: Vec<&str> = text.lines().map(|l| l.split(':').next().unwrap()).collect();
        assert_eq!(
            keys,
            [
                "total_games",
                "x_wins",
                "o_wins",
                "draws",
                "legal_positions",
                "earliest_win_ply"
            ]
        );
    }
}
