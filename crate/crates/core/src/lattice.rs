//! The terminal set, the floor-quotient map onto the canonical region, and
//! the unique decomposition of bounded-region positions.
//!
//! Every position `(X, Y)` of the bounded region is written uniquely as
//! `(x + A*p1 + B*p2, y + A*q1 + B*q2)` with `(x, y)` in the terminal set and
//! `A, B >= 0`; `(A, B)` is recovered by [`phi_q`].

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::game::{GameConstants, GameDef, Position};

pub fn in_region(g: &GameDef, p: Position) -> bool {
    g.in_region(p)
}

/// Membership in the terminal set: `(x, y)` in the bounded region with
/// `p1(y - q2) < q1(x - p2)` and `p2(y - q1) > q2(x - p1)`.
pub fn is_terminal(c: &GameConstants, p: Position) -> bool {
    if !c.contains(p.x, p.y) {
        return false;
    }
    let [p1, q1, p2, q2] = c.entries().map(|v| v as i64);
    let (x, y) = (p.x as i64, p.y as i64);
    p1 * (y - q2) < q1 * (x - p2) && p2 * (y - q1) > q2 * (x - p1)
}

/// All terminal positions of the matrix subtraction game, lexicographically
/// ordered. Its size is always `det Q`.
///
/// Members satisfy `x < p1 + p2` and `y < q1 + q2`; each column of that box
/// is filtered by solving the defining inequalities for `y`.
pub fn terminal_set(c: &GameConstants) -> Vec<Position> {
    let [p1, q1, p2, q2] = c.entries().map(|v| v as i64);
    let mut out = Vec::with_capacity(c.det() as usize);
    for x in 0..p1 + p2 {
        // p1*y < p1*q2 + q1*(x - p2)
        let mut hi = Integer::div_ceil(&(p1 * q2 + q1 * (x - p2)), &p1) - 1;
        // region: x*q1 <= y*p1
        let mut lo = Integer::div_ceil(&(x * q1), &p1).max(0);
        if p2 > 0 {
            // p2*y > p2*q1 + q2*(x - p1)
            lo = lo.max(Integer::div_floor(&(p2 * q1 + q2 * (x - p1)), &p2) + 1);
            // region: y*p2 <= x*q2
            hi = hi.min(Integer::div_floor(&(x * q2), &p2));
        } else if x >= p1 {
            // with p2 = 0 the second inequality reads 0 > q2*(x - p1)
            continue;
        }
        hi = hi.min(q1 + q2 - 1);
        for y in lo..=hi {
            out.push(Position::new(x as u64, y as u64));
        }
    }
    assert_eq!(out.len() as u64, c.det(), "terminal set of {c} has the wrong cardinality");
    debug_assert!(out.iter().all(|&p| is_terminal(c, p)));
    out
}

/// `(floor((X*q2 - Y*p2) / det), floor((Y*p1 - X*q1) / det))`.
pub fn phi_q(c: &GameConstants, p: Position) -> Result<Position> {
    if !c.contains(p.x, p.y) {
        return Err(Error::OutOfRegion(p));
    }
    let det = c.det();
    Ok(Position::new((p.x * c.q2() - p.y * c.p2()) / det, (p.y * c.p1() - p.x * c.q1()) / det))
}

/// Inverse of [`decompose`].
pub fn recompose(c: &GameConstants, class: Position, a: u64, b: u64) -> Position {
    let (dx, dy) = c.transform(a, b);
    Position::new(class.x + dx, class.y + dy)
}

/// Splits `p` into its terminal-set class and canonical coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub class: Position,
    pub a: u64,
    pub b: u64,
}

pub fn decompose(c: &GameConstants, p: Position) -> Result<Decomposition> {
    let ab = phi_q(c, p)?;
    let (dx, dy) = c.transform(ab.x, ab.y);
    let class = Position::new(p.x - dx, p.y - dy);
    assert!(is_terminal(c, class), "decomposition of {p} under {c} left {class} outside the terminal set");
    debug_assert_eq!(recompose(c, class, ab.x, ab.y), p);
    Ok(Decomposition { class, a: ab.x, b: ab.y })
}

pub fn class_of(c: &GameConstants, p: Position) -> Result<Position> {
    decompose(c, p).map(|d| d.class)
}
