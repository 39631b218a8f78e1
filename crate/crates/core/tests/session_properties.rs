//! Session invariants over random playouts and every enumerated game.

use std::collections::HashSet;

use proptest::prelude::*;
use ttt_core::oracle::{enumerate_games, enumerate_games_layered, for_each_game};
use ttt_core::{Board, CellMark, GameSession, GameStatus, MoveError, Player};

/// Play cells in `order` until the game ends, also firing each entry of
/// `junk` as an extra attempt before the corresponding ply.
fn check_playout(order: &[usize], junk: &[(bool, usize, usize)]) -> Result<(), TestCaseError> {
    let mut s = GameSession::new("p");
    for (i, &cell) in order.iter().enumerate() {
        if s.status().is_terminal() {
            break;
        }
        let turn = s.status().turn().unwrap();

        if let Some(&(as_opponent, r, c)) = junk.get(i) {
            let who = if as_opponent { turn.opponent() } else { turn };
            let before = s.clone();
            if s.apply_move(who, r, c).is_err() {
                prop_assert_eq!(&s, &before);
            }
        }

        let next = s.apply_move(turn, cell / 3, cell % 3).unwrap();
        let filled = 9 - next.board().count(CellMark::Empty);
        prop_assert_eq!(filled, next.history().len());
        prop_assert_eq!(filled, s.history().len() + 1);

        let xs = next.board().count(CellMark::X);
        let os = next.board().count(CellMark::O);
        match turn {
            Player::X => prop_assert_eq!(xs, os + 1),
            Player::O => prop_assert_eq!(xs, os),
        }
        for (k, rec) in next.history().iter().enumerate() {
            prop_assert_eq!(rec.ply, k + 1);
            prop_assert_eq!(rec.player, if k % 2 == 0 { Player::X } else { Player::O });
        }

        match next.status() {
            GameStatus::Won { winner, .. } => {
                prop_assert!(next.ply() >= 5);
                prop_assert_eq!(next.history().last().unwrap().player, winner);
            }
            GameStatus::Draw => prop_assert_eq!(next.ply(), 9),
            GameStatus::InProgress { turn: t } => prop_assert_eq!(t, turn.opponent()),
        }
        s = next;
    }

    prop_assert!(s.status().is_terminal());
    for p in [Player::X, Player::O] {
        for cell in 0..9 {
            prop_assert_eq!(s.apply_move(p, cell / 3, cell % 3), Err(MoveError::GameOver));
        }
    }
    prop_assert_eq!(
        GameSession::replay("p", s.moves().collect::<Vec<_>>()).unwrap(),
        s
    );
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn random_playouts_uphold_invariants(
        order in Just((0..9).collect::<Vec<usize>>()).prop_shuffle(),
        junk in prop::collection::vec((prop::bool::ANY, 0usize..4, 0usize..4), 9),
    ) {
        check_playout(&order, &junk)?;
    }
}

#[test]
fn every_enumerated_game_replays_to_the_same_status() {
    let mut games = 0u64;
    let report = for_each_game(|moves, status| {
        games += 1;
        let s = GameSession::replay("e", moves.iter().copied()).expect("enumerated game must replay");
        assert_eq!(s.status(), status);
        assert!((5..=9).contains(&moves.len()));
    });
    assert_eq!(games, report.total_games);
    assert_eq!(report.x_wins + report.o_wins + report.draws, report.total_games);
    assert_eq!(report.earliest_win_ply, 5);
}

#[test]
fn reachable_boards_are_legal() {
    let mut boards = HashSet::new();
    for_each_game(|moves, _| {
        let mut b = Board::empty();
        boards.insert(b);
        for &(p, r, c) in moves {
            b = b.with_mark(r, c, p.mark());
            boards.insert(b);
        }
    });
    assert_eq!(boards.len() as u64, enumerate_games().legal_positions);
    for b in &boards {
        assert!(b.is_legal_position(), "board {b}");
    }
}

#[test]
fn enumeration_is_deterministic() {
    assert_eq!(enumerate_games(), enumerate_games());
    assert_eq!(enumerate_games_layered(), enumerate_games_layered());
    let mut first = Vec::new();
    let mut second = Vec::new();
    for_each_game(|m, _| first.push(m.to_vec()));
    for_each_game(|m, _| second.push(m.to_vec()));
    assert_eq!(first, second);
}
