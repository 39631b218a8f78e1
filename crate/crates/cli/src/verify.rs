//! `ttt verify`: exhaustive checks of the rules engine.

use std::io::{self, Write};

use ttt_core::oracle::{self, GOLDEN_CENSUS};
use ttt_core::{Board, Player, WinLine};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;

pub fn run_verify(full: bool, out: &mut impl Write, err: &mut impl Write) -> io::Result<u8> {
    run_verify_with(Board::winner, full, out, err)
}

/// Verify `checker` against the brute-force oracle and, when `full`, run the
/// game census. Report lines are `name: value`.
pub fn run_verify_with<F>(
    checker: F,
    full: bool,
    out: &mut impl Write,
    err: &mut impl Write,
) -> io::Result<u8>
where
    F: Fn(&Board) -> Option<(Player, WinLine)>,
{
    let mut ok = true;
    if full {
        let census = oracle::enumerate_games();
        writeln!(out, "{census}")?;
        if census != GOLDEN_CENSUS {
            ok = false;
            writeln!(err, "census differs from the frozen values:\n{GOLDEN_CENSUS}")?;
        }
    }
    let report = oracle::verify_equivalence_with(checker);
    writeln!(out, "mismatches: {}", report.mismatches)?;
    if let Some(m) = &report.first_mismatch {
        ok = false;
        writeln!(
            err,
            "first mismatch on board {}: expected {:?}, got {:?}",
            m.board, m.expected, m.actual
        )?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
}
