//! Board representation and the pure rules of tic-tac-toe.
//!
//! A [`Board`] is a fixed 3x3 row-major grid of [`CellMark`]s. Row 0 is the
//! top row and column 0 the leftmost column. Every function here is total over
//! all 3^9 boards, including ones that can never arise in legal play; use
//! [`Board::is_legal_position`] to tell the two apart.
//!
//! Winner detection follows the row/transpose/diagonal scheme: marks are
//! encoded numerically, rows are scanned for three equal non-empty codes,
//! columns are found by scanning the rows of the transposed board, and the two
//! diagonals are checked last.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use thiserror::Error;

/// Side length of the board.
pub const SIZE: usize = 3;

/// Number of cells on the board.
pub const CELLS: usize = SIZE * SIZE;

/// Numeric code of an empty cell. Anything outside `{0, 1}` works; it must
/// never collide with a player's code.
pub const EMPTY_CODE: i8 = -1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    X,
    O,
}

impl Player {
    pub const fn opponent(self) -> Player {
        match self {
            Player::X => Player::O,
            Player::O => Player::X,
        }
    }

    pub const fn mark(self) -> CellMark {
        match self {
            Player::X => CellMark::X,
            Player::O => CellMark::O,
        }
    }

    pub const fn symbol(self) -> char {
        match self {
            Player::X => 'X',
            Player::O => 'O',
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Content of one cell.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellMark {
    #[default]
    Empty,
    X,
    O,
}

impl CellMark {
    pub const fn player(self) -> Option<Player> {
        match self {
            CellMark::Empty => None,
            CellMark::X => Some(Player::X),
            CellMark::O => Some(Player::O),
        }
    }

    pub const fn is_empty(self) -> bool {
        matches!(self, CellMark::Empty)
    }

    /// Character used in the board string format.
    pub const fn symbol(self) -> char {
        match self {
            CellMark::Empty => '.',
            CellMark::X => 'X',
            CellMark::O => 'O',
        }
    }

    pub const fn from_symbol(c: char) -> Option<CellMark> {
        match c {
            '.' => Some(CellMark::Empty),
            'X' => Some(CellMark::X),
            'O' => Some(CellMark::O),
            _ => None,
        }
    }
}

impl From<Player> for CellMark {
    fn from(p: Player) -> Self {
        p.mark()
    }
}

/// Numeric form of a mark: X is 1, O is 0 and an empty cell is [`EMPTY_CODE`].
pub const fn encode_mark(mark: CellMark) -> i8 {
    match mark {
        CellMark::X => 1,
        CellMark::O => 0,
        CellMark::Empty => EMPTY_CODE,
    }
}

const fn decode_player(code: i8) -> Option<Player> {
    match code {
        1 => Some(Player::X),
        0 => Some(Player::O),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineKind {
    Row,
    Column,
    MainDiagonal,
    AntiDiagonal,
}

/// One of the eight three-cell lines.
///
/// The derived ordering is the reporting priority used when several lines win
/// at once: rows 0..2, then columns 0..2, then the main diagonal, then the
/// anti-diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WinLine {
    kind: LineKind,
    index: u8,
}

impl WinLine {
    /// All eight lines in priority order.
    pub const ALL: [WinLine; 8] = [
        WinLine::row(0),
        WinLine::row(1),
        WinLine::row(2),
        WinLine::column(0),
        WinLine::column(1),
        WinLine::column(2),
        WinLine::main_diagonal(),
        WinLine::anti_diagonal(),
    ];

    /// # Panics
    /// If `index >= 3`.
    pub const fn row(index: usize) -> WinLine {
        assert!(index < SIZE, "row index out of range");
        WinLine {
            kind: LineKind::Row,
            index: index as u8,
        }
    }

    /// # Panics
    /// If `index >= 3`.
    pub const fn column(index: usize) -> WinLine {
        assert!(index < SIZE, "column index out of range");
        WinLine {
            kind: LineKind::Column,
            index: index as u8,
        }
    }

    pub const fn main_diagonal() -> WinLine {
        WinLine {
            kind: LineKind::MainDiagonal,
            index: 0,
        }
    }

    pub const fn anti_diagonal() -> WinLine {
        WinLine {
            kind: LineKind::AntiDiagonal,
            index: 0,
        }
    }

    pub const fn kind(self) -> LineKind {
        self.kind
    }

    /// Row or column index; always 0 for diagonals.
    pub const fn index(self) -> usize {
        self.index as usize
    }

    /// The three `(row, col)` cells of the line, in reading order.
    pub const fn coords(self) -> [(usize, usize); 3] {
        let i = self.index as usize;
        match self.kind {
            LineKind::Row => [(i, 0), (i, 1), (i, 2)],
            LineKind::Column => [(0, i), (1, i), (2, i)],
            LineKind::MainDiagonal => [(0, 0), (1, 1), (2, 2)],
            LineKind::AntiDiagonal => [(0, 2), (1, 1), (2, 0)],
        }
    }
}

impl fmt::Display for WinLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LineKind::Row => write!(f, "row {}", self.index),
            LineKind::Column => write!(f, "column {}", self.index),
            LineKind::MainDiagonal => f.write_str("main diagonal"),
            LineKind::AntiDiagonal => f.write_str("anti-diagonal"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GameStatus {
    InProgress { turn: Player },
    Won { winner: Player, line: WinLine },
    Draw,
}

impl GameStatus {
    pub const fn is_terminal(self) -> bool {
        !matches!(self, GameStatus::InProgress { .. })
    }

    pub const fn turn(self) -> Option<Player> {
        match self {
            GameStatus::InProgress { turn } => Some(turn),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseBoardError {
    #[error("board string must be exactly 9 characters, got {0}")]
    BadLength(usize),
    #[error("invalid character {ch:?} at position {index}; expected one of 'X', 'O', '.'")]
    BadChar { ch: char, index: usize },
}

/// A 3x3 tic-tac-toe grid.
///
/// `Display` and `FromStr` use the nine-character row-major format over the
/// alphabet `X`, `O`, `.`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Board {
    cells: [[CellMark; SIZE]; SIZE],
}

impl Board {
    pub const fn empty() -> Board {
        Board {
            cells: [[CellMark::Empty; SIZE]; SIZE],
        }
    }

    pub const fn from_cells(cells: [[CellMark; SIZE]; SIZE]) -> Board {
        Board { cells }
    }

    pub const fn cells(&self) -> &[[CellMark; SIZE]; SIZE] {
        &self.cells
    }

    /// Returns `None` when `(row, col)` is off the board.
    pub fn get(&self, row: usize, col: usize) -> Option<CellMark> {
        self.cells.get(row).and_then(|r| r.get(col)).copied()
    }

    /// Copy of this board with `(row, col)` set to `mark`.
    ///
    /// # Panics
    /// If `(row, col)` is off the board.
    #[must_use]
    pub fn with_mark(mut self, row: usize, col: usize, mark: CellMark) -> Board {
        self.cells[row][col] = mark;
        self
    }

    pub fn count(&self, mark: CellMark) -> usize {
        self.cells.iter().flatten().filter(|&&m| m == mark).count()
    }

    pub fn is_full(&self) -> bool {
        self.cells.iter().flatten().all(|m| !m.is_empty())
    }

    /// Cell `(r, c)` of the result is cell `(c, r)` of `self`.
    #[must_use]
    pub fn transpose(&self) -> Board {
        let mut out = Board::empty();
        for (r, row) in self.cells.iter().enumerate() {
            for (c, &mark) in row.iter().enumerate() {
                out.cells[c][r] = mark;
            }
        }
        out
    }

    fn encoded(&self) -> [[i8; SIZE]; SIZE] {
        self.cells.map(|row| row.map(encode_mark))
    }

    /// Lowest-index row holding three equal non-empty marks.
    pub fn check_rows(&self) -> Option<(Player, usize)> {
        self.encoded().iter().enumerate().find_map(|(i, row)| {
            let [a, b, c] = *row;
            if a == b && b == c && a != EMPTY_CODE {
                decode_player(a).map(|p| (p, i))
            } else {
                None
            }
        })
    }

    /// Main diagonal first, then the anti-diagonal.
    pub fn check_diagonals(&self) -> Option<(Player, WinLine)> {
        let g = self.encoded();
        let uniform = |a: i8, b: i8, c: i8| (a == b && b == c && a != EMPTY_CODE).then_some(a);
        if let Some(p) = uniform(g[0][0], g[1][1], g[2][2]).and_then(decode_player) {
            return Some((p, WinLine::main_diagonal()));
        }
        uniform(g[0][2], g[1][1], g[2][0])
            .and_then(decode_player)
            .map(|p| (p, WinLine::anti_diagonal()))
    }

    /// The winning player and line, if any line is complete.
    ///
    /// Rows are checked first, then columns (as rows of the transposed board),
    /// then diagonals; the first hit is reported.
    pub fn winner(&self) -> Option<(Player, WinLine)> {
        if let Some((p, i)) = self.check_rows() {
            return Some((p, WinLine::row(i)));
        }
        if let Some((p, i)) = self.transpose().check_rows() {
            return Some((p, WinLine::column(i)));
        }
        self.check_diagonals()
    }

    /// Status of this board when `next_turn` is the player due to move.
    pub fn status(&self, next_turn: Player) -> GameStatus {
        match self.winner() {
            Some((winner, line)) => GameStatus::Won { winner, line },
            None if self.is_full() => GameStatus::Draw,
            None => GameStatus::InProgress { turn: next_turn },
        }
    }

    /// Whether the board can be reached by alternating play starting with X
    /// and stopping at the first win.
    pub fn is_legal_position(&self) -> bool {
        let xs = self.count(CellMark::X);
        let os = self.count(CellMark::O);
        if xs != os && xs != os + 1 {
            return false;
        }
        let wins_for = |p: Player| {
            WinLine::ALL
                .iter()
                .any(|line| line.coords().iter().all(|&(r, c)| self.cells[r][c] == p.mark()))
        };
        let (x_wins, o_wins) = (wins_for(Player::X), wins_for(Player::O));
        !(x_wins && xs == os) && !(o_wins && xs == os + 1) && !(x_wins && o_wins)
    }
}

impl Index<(usize, usize)> for Board {
    type Output = CellMark;

    fn index(&self, (row, col): (usize, usize)) -> &CellMark {
        &self.cells[row][col]
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use fmt::Write;
        for mark in self.cells.iter().flatten() {
            f.write_char(mark.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for Board {
    type Err = ParseBoardError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let len = s.chars().count();
        if len != CELLS {
            return Err(ParseBoardError::BadLength(len));
        }
        let mut board = Board::empty();
        for (index, ch) in s.chars().enumerate() {
            let mark = CellMark::from_symbol(ch).ok_or(ParseBoardError::BadChar { ch, index })?;
            board.cells[index / SIZE][index % SIZE] = mark;
        }
        Ok(board)
    }
}

/// Free-function form of [`Board::empty`].
pub const fn empty_board() -> Board {
    Board::empty()
}

/// Parse a nine-character board string.
pub fn parse_board(s: &str) -> Result<Board, ParseBoardError> {
    s.parse()
}

/// Nine-character board string; exact inverse of [`parse_board`].
pub fn format_board(b: &Board) -> String {
    b.to_string()
}

/// Free-function form of [`Board::status`].
pub fn status_of(b: &Board, next_turn: Player) -> GameStatus {
    b.status(next_turn)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn board(s: &str) -> Board {
        parse_board(s).unwrap()
    }

    #[test]
    fn empty_board_basics() {
        let b = empty_board();
        assert!(b.cells().iter().flatten().all(|m| m.is_empty()));
        assert_eq!(format_board(&b), ".........");
        assert!(!b.is_full());
    }

    #[test]
    fn mark_encoding() {
        assert_eq!(encode_mark(CellMark::X), 1);
        assert_eq!(encode_mark(CellMark::O), 0);
        assert_eq!(encode_mark(CellMark::Empty), -1);
    }

    #[test]
    fn player_embeds_into_marks() {
        assert_eq!(CellMark::from(Player::X), CellMark::X);
        assert_eq!(CellMark::from(Player::O), CellMark::O);
        assert_eq!(CellMark::Empty.player(), None);
        assert_eq!(Player::X.opponent(), Player::O);
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(empty_board().transpose(), empty_board());
        assert_eq!(board("..X......").transpose(), board("......X.."));
        let b = board("XO..X...O");
        assert_eq!(b.transpose().transpose(), b);
    }

    #[test]
    fn check_rows_examples() {
        assert_eq!(board("XXX.OO.O.").check_rows(), Some((Player::X, 0)));
        assert_eq!(board(".........").check_rows(), None);
        assert_eq!(board("OOO.XXX..").check_rows(), Some((Player::O, 0)));
        assert_eq!(board("OOOXXX...").check_rows(), Some((Player::O, 0)));
    }

    #[test]
    fn empty_rows_never_win() {
        // an all-empty row would collide with O if empty shared O's code
        assert_eq!(board("XX.O.O...").check_rows(), None);
        assert_eq!(board("XX.O.O...").winner(), None);
    }

    #[test]
    fn check_diagonals_examples() {
        assert_eq!(
            board("XO.OX...X").check_diagonals(),
            Some((Player::X, WinLine::main_diagonal()))
        );
        assert_eq!(
            board("..O.O.O..").check_diagonals(),
            Some((Player::O, WinLine::anti_diagonal()))
        );
        assert_eq!(empty_board().check_diagonals(), None);
    }

    #[test]
    fn winner_examples() {
        assert_eq!(board("XXX.OO.O.").winner(), Some((Player::X, WinLine::row(0))));
        assert_eq!(board("XOXXO..O.").winner(), Some((Player::O, WinLine::column(1))));
        assert_eq!(board("XOXXOOOXX").winner(), None);
    }

    #[test]
    fn winner_prefers_rows_then_columns_then_diagonals() {
        // X completes row 0 and column 0 and the main diagonal at once
        assert_eq!(board("XXXXX.XOO").winner(), Some((Player::X, WinLine::row(0))));
        assert_eq!(board("XOOXX.X.X").winner(), Some((Player::X, WinLine::column(0))));
        assert_eq!(
            board("XO.OXOX.X").winner(),
            Some((Player::X, WinLine::main_diagonal()))
        );
    }

    #[test]
    fn is_full_examples() {
        assert!(!empty_board().is_full());
        assert!(board("XOXXOOOXX").is_full());
        assert!(!board("XOXXOOOX.").is_full());
    }

    #[test]
    fn status_examples() {
        assert_eq!(
            status_of(&empty_board(), Player::X),
            GameStatus::InProgress { turn: Player::X }
        );
        assert_eq!(
            status_of(&board("XXX.OO.O."), Player::O),
            GameStatus::Won {
                winner: Player::X,
                line: WinLine::row(0)
            }
        );
        assert_eq!(status_of(&board("XOXXOOOXX"), Player::O), GameStatus::Draw);
    }

    #[test]
    fn legality_examples() {
        assert!(empty_board().is_legal_position());
        assert!(!board("XXX......").is_legal_position());
        assert!(board("XXXOO....").is_legal_position());
        // O ahead of X
        assert!(!board("O........").is_legal_position());
        // X won but O moved afterwards
        assert!(!board("XXXOOO...").is_legal_position());
        // O won but X moved afterwards
        assert!(!board("OOOXX.X.X").is_legal_position());
    }

    #[test]
    fn parse_examples() {
        assert_eq!(board("........."), empty_board());
        assert_eq!(board("X........")[(0, 0)], CellMark::X);
        assert_eq!(board("X........").count(CellMark::X), 1);
        assert_eq!(parse_board("XO..X...O."), Err(ParseBoardError::BadLength(10)));
        assert_eq!(parse_board(""), Err(ParseBoardError::BadLength(0)));
        assert_eq!(
            parse_board("XO..x...O"),
            Err(ParseBoardError::BadChar { ch: 'x', index: 4 })
        );
    }

    #[test]
    fn format_examples() {
        let b = empty_board()
            .with_mark(0, 0, CellMark::X)
            .with_mark(1, 1, CellMark::O);
        assert_eq!(format_board(&b), "X...O....");
        assert_eq!(format_board(&board("XOXXOOOXX")), "XOXXOOOXX");
    }

    #[test]
    fn win_lines_are_distinct_and_consistent() {
        let mut all = WinLine::ALL.to_vec();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 8);
        assert_eq!(all, WinLine::ALL.to_vec());
        assert_eq!(WinLine::column(2).coords(), [(0, 2), (1, 2), (2, 2)]);
        assert_eq!(WinLine::anti_diagonal().coords(), [(0, 2), (1, 1), (2, 0)]);
    }

    #[test]
    fn get_is_bounds_checked() {
        assert_eq!(empty_board().get(2, 2), Some(CellMark::Empty));
        assert_eq!(empty_board().get(3, 0), None);
    }
}
