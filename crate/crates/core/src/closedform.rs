//! Closed-form P-positions: the golden-ratio Beatty pairs of Wythoff Nim and
//! their images for the rational Nim and rational Wythoff games.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::game::{GameConstants, Position, Window};
use crate::lattice::terminal_set;

/// Largest index accepted by [`beatty`]; `5 * n^2` must fit in `u64`.
pub const MAX_BEATTY_INDEX: u64 = 1_000_000_000;

/// The golden ratio.
pub const PHI: f64 = 1.618_033_988_749_895;

/// `(floor(phi*n), floor(phi^2*n))` for index `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BeattyPair {
    pub n: u64,
    pub lo: u64,
    pub hi: u64,
}

/// Computes `floor(phi*n)` as `floor((n + isqrt(5*n^2)) / 2)`, no floating
/// point involved; `floor(phi^2*n) = floor(phi*n) + n`.
pub fn beatty(n: u64) -> Result<BeattyPair> {
    if n > MAX_BEATTY_INDEX {
        return Err(Error::Overflow(format!("Beatty index {n} exceeds {MAX_BEATTY_INDEX}")));
    }
    let lo = (n + (5 * n * n).isqrt()) / 2;
    Ok(BeattyPair { n, lo, hi: lo + n })
}

fn sorted(mut v: Vec<Position>) -> Vec<Position> {
    v.sort_unstable();
    v.dedup();
    v
}

/// Wythoff Nim P-positions `(lo, hi)` and `(hi, lo)` inside the window.
pub fn wythoff_p(window: Window) -> Vec<Position> {
    let mut out = Vec::new();
    let reach = window.max_x.max(window.max_y);
    for n in 0.. {
        let BeattyPair { lo, hi, .. } = beatty(n).expect("window limits keep n small");
        if lo > reach {
            break;
        }
        for p in [Position::new(lo, hi), Position::new(hi, lo)] {
            if window.contains(p) {
                out.push(p);
            }
        }
    }
    sorted(out)
}

/// Rational Nim P-positions: every terminal position translated by
/// multiples of the period `(p1 + p2, q1 + q2)`.
pub fn rn_p(c: &GameConstants, window: Window) -> Vec<Position> {
    let (dx, dy) = c.transform(1, 1);
    let mut out = Vec::new();
    for t in terminal_set(c) {
        let mut p = t;
        while window.contains(p) {
            out.push(p);
            p = Position::new(p.x + dx, p.y + dy);
        }
    }
    sorted(out)
}

/// Rational Wythoff P-positions: for each terminal position `(x, y)` and
/// each Beatty pair, the two positions
/// `(x, y) + lo-on-p2/q2 + hi-on-p1/q1` and `(x, y) + lo-on-p1/q1 + hi-on-p2/q2`.
pub fn rw_p(c: &GameConstants, window: Window) -> Vec<Position> {
    let mut out = Vec::new();
    for t in terminal_set(c) {
        for n in 0.. {
            let BeattyPair { lo, hi, .. } = beatty(n).expect("window limits keep n small");
            let mut any = false;
            for (a, b) in [(hi, lo), (lo, hi)] {
                let (dx, dy) = c.transform(a, b);
                let p = Position::new(t.x + dx, t.y + dy);
                if window.contains(p) {
                    out.push(p);
                    any = true;
                }
            }
            // both coordinates are non-decreasing in n
            if !any {
                break;
            }
        }
    }
    sorted(out)
}

/// Asymptotic ratios `Y/X` of the P-positions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitRatios {
    /// Rational Nim: `(q1 + q2) / (p1 + p2)`.
    pub rn: Ratio<u64>,
    /// Rational Wythoff, lower branch: `(q1 + phi(q1+q2)) / (p1 + phi(p1+p2))`.
    pub rw_lower: f64,
    /// Rational Wythoff, upper branch: `(q2 + phi(q1+q2)) / (p2 + phi(p1+p2))`.
    pub rw_upper: f64,
}

pub fn limit_ratios(c: &GameConstants) -> LimitRatios {
    let [p1, q1, p2, q2] = c.entries().map(|v| v as f64);
    LimitRatios {
        rn: Ratio::new(c.q1() + c.q2(), c.p1() + c.p2()),
        rw_lower: (q1 + PHI * (q1 + q2)) / (p1 + PHI * (p1 + p2)),
        rw_upper: (q2 + PHI * (q1 + q2)) / (p2 + PHI * (p1 + p2)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: u64, y: u64) -> Position {
        Position::new(x, y)
    }

    #[test]
    fn beatty_examples() {
        assert_eq!(beatty(0).unwrap(), BeattyPair { n: 0, lo: 0, hi: 0 });
        assert_eq!(beatty(1).unwrap(), BeattyPair { n: 1, lo: 1, hi: 2 });
        assert_eq!(beatty(2).unwrap(), BeattyPair { n: 2, lo: 3, hi: 5 });
        assert_eq!(beatty(3).unwrap(), BeattyPair { n: 3, lo: 4, hi: 7 });
        assert_eq!(beatty(10).unwrap(), BeattyPair { n: 10, lo: 16, hi: 26 });
        assert!(beatty(MAX_BEATTY_INDEX).is_ok());
        assert!(beatty(MAX_BEATTY_INDEX + 1).is_err());
    }

    #[test]
    fn beatty_matches_exact_definition() {
        // lo = floor(phi*n) iff lo^2 ... checked via (2lo - n)^2 <= 5n^2 < (2lo - n + 2)^2
        for n in (0..2000).chain(MAX_BEATTY_INDEX - 2000..=MAX_BEATTY_INDEX) {
            let b = beatty(n).unwrap();
            let s = (2 * b.lo - n) as u128;
            let five = 5 * (n as u128) * (n as u128);
            assert!(s * s <= five && five < (s + 2) * (s + 2), "n={n}");
        }
    }

    #[test]
    fn wythoff_small_windows() {
        assert_eq!(wythoff_p(Window::square(3)), vec![p(0, 0), p(1, 2), p(2, 1)]);
        let w = wythoff_p(Window::square(8));
        assert_eq!(w, vec![p(0, 0), p(1, 2), p(2, 1), p(3, 5), p(4, 7), p(5, 3), p(7, 4)]);
    }

    #[test]
    fn rn_forms() {
        let nim = rn_p(&GameConstants::identity(), Window::square(5));
        assert_eq!(nim, (0..=5).map(|k| p(k, k)).collect::<Vec<_>>());
        let c = GameConstants::new(1, 1, 0, 1).unwrap();
        assert_eq!(rn_p(&c, Window::square(10)), (0..=5).map(|k| p(k, 2 * k)).collect::<Vec<_>>());
    }

    #[test]
    fn rw_forms() {
        let w = Window::square(500);
        assert_eq!(rw_p(&GameConstants::identity(), w), wythoff_p(w));

        let c = GameConstants::new(1, 1, 0, 1).unwrap();
        let mut expected = Vec::new();
        for n in 0..500 {
            let b = beatty(n).unwrap();
            expected.push(p(b.lo, b.lo + b.hi));
            expected.push(p(b.hi, b.lo + b.hi));
        }
        let expected = sorted(expected.into_iter().filter(|&q| w.contains(q)).collect());
        assert_eq!(rw_p(&c, w), expected);
        assert_eq!(
            &rw_p(&c, Window::square(12))[..7],
            &[p(0, 0), p(1, 3), p(2, 3), p(3, 8), p(4, 11), p(5, 8), p(7, 11)]
        );
    }

    #[test]
    fn limit_examples() {
        let l = limit_ratios(&GameConstants::identity());
        assert_eq!(l.rn, Ratio::new(1, 1));
        assert!((l.rw_lower - 1.0 / PHI).abs() < 1e-12);
        assert!((l.rw_upper - PHI).abs() < 1e-12);

        let l = limit_ratios(&GameConstants::new(1, 1, 0, 1).unwrap());
        assert_eq!(l.rn, Ratio::new(2, 1));
        assert!((l.rw_lower - PHI).abs() < 1e-12);
        assert!((l.rw_upper - PHI * PHI).abs() < 1e-12);

        let l = limit_ratios(&GameConstants::new(7, 2, 1, 10).unwrap());
        assert_eq!(l.rn, Ratio::new(3, 2));
        assert!(l.rw_lower < 1.5 && l.rw_upper > 1.5);
    }
}
