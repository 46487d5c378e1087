//! Exact P/N analysis of two-heap subtraction games whose heaps are confined
//! to a cone with rational slopes.
//!
//! * [`game`]: matrix constants, positions, move sets and game definitions.
//! * [`lattice`]: the terminal set, the map onto the canonical game and the
//!   class decomposition.
//! * [`solver`]: outcome tables, the equivalence verifier, convergent
//!   estimates and table exports.
//! * [`closedform`]: Beatty-sequence generators of P-positions.
//! * [`cli`]: builtin games, rendering and the `rhg` command line.

pub mod cli;
pub mod closedform;
pub mod error;
pub mod game;
pub mod lattice;
pub mod solver;

pub use error::{Error, Result};
pub use game::{GameConstants, GameDef, MoveKind, MoveSet, Position, Region, Window};
pub use solver::{Outcome, OutcomeTable};
