//! Exhaustive check that a matrix subtraction game and its canonical game
//! agree through `phi_q`, in both directions.

use std::fmt;

use super::{solve_auto, Outcome, SolveConfig};
use crate::error::Result;
use crate::game::{GameConstants, GameDef, MoveSet, Position, Window};
use crate::lattice::{phi_q, recompose, terminal_set};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Counterexample {
    /// `position` and its image `phi_q(position)` have different outcomes.
    Image { position: Position, image: Position, bounded: Outcome, canonical: Outcome },
    /// The canonical position `(a, b)` and its translate in `class` differ.
    Translate { class: Position, canonical: Position, position: Position, bounded: Outcome, expected: Outcome },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Counterexample::Image { position, image, bounded, canonical } => {
                write!(f, "{position} is {bounded:?} but its image {image} is {canonical:?} in the canonical game")
            }
            Counterexample::Translate { class, canonical, position, bounded, expected } => write!(
                f,
                "canonical {canonical} is {expected:?} but its translate {position} in class {class} is {bounded:?}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub constants: GameConstants,
    pub window: Window,
    /// Window of the canonical game that covers every image.
    pub canonical_window: Window,
    pub images_checked: u64,
    pub translates_checked: u64,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

pub fn verify_equivalence(c: &GameConstants, moves: &MoveSet, window: Window) -> Result<VerificationReport> {
    verify_equivalence_with(c, moves, window, &SolveConfig::default())
}

pub fn verify_equivalence_with(
    c: &GameConstants,
    moves: &MoveSet,
    window: Window,
    config: &SolveConfig,
) -> Result<VerificationReport> {
    let bounded = solve_auto(&GameDef::q_subtraction(*c, moves.clone()), window, config)?;
    // phi_q(X, Y) <= (X*q2 / det, Y*p1 / det) componentwise
    let det = c.det();
    let canonical_window = Window::new(window.max_x * c.q2() / det, window.max_y * c.p1() / det);
    let canonical = solve_auto(&GameDef::canonical(moves.clone()), canonical_window, config)?;

    let mut report = VerificationReport {
        constants: *c,
        window,
        canonical_window,
        images_checked: 0,
        translates_checked: 0,
        counterexample: None,
    };

    for (position, outcome) in bounded.cells() {
        let image = phi_q(c, position)?;
        let expected = canonical.outcome(image).expect("canonical window covers every image");
        report.images_checked += 1;
        if outcome != expected {
            report.counterexample =
                Some(Counterexample::Image { position, image, bounded: outcome, canonical: expected });
            return Ok(report);
        }
    }

    for class in terminal_set(c) {
        for a in 0..=canonical_window.max_x {
            for b in 0..=canonical_window.max_y {
                let position = recompose(c, class, a, b);
                // both coordinates grow with b
                if !window.contains(position) {
                    break;
                }
                let expected = canonical.outcome(Position::new(a, b)).expect("inside canonical window");
                let got = bounded.outcome(position).expect("translates stay in the region");
                report.translates_checked += 1;
                if got != expected {
                    report.counterexample = Some(Counterexample::Translate {
                        class,
                        canonical: Position::new(a, b),
                        position,
                        bounded: got,
                        expected,
                    });
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}
