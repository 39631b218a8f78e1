//! Library half of the `ttt` binary, split out so the play loop and verify
//! report can be driven from tests.

pub mod args;
pub mod play;
pub mod verify;

/// Startup or configuration failure, including an unbindable port.
pub const EXIT_STARTUP_FAILED: u8 = 2;
