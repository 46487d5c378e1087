//! Line-accelerated sweep for move sets made only of rays.
//!
//! For a ray with heap-space direction `d`, the options of a cell along `d`
//! are the earlier lattice points of the line `cell - t*d`. Because the
//! region is convex, those that are in the region are exactly the in-region
//! points of that line visited so far in the sweep. A cell is therefore N
//! iff one of its lines has already produced a P-cell, and one flag per
//! line replaces the scan.

use num_integer::Integer;

use super::grid::BitSet;
use super::{OutcomeTable, SolveConfig};
use crate::error::{Error, Result};
use crate::game::{GameDef, Window};

/// Flags for the lattice lines `{(x, y) + t*(a, b)}` meeting a window.
///
/// A line is identified by `(b*x - a*y) / g` (with `g = gcd(a, b)`) and by
/// which of the `g` step-`(a, b)` sublattices of the primitive line it is.
struct LineFlags {
    a: u64,
    b: u64,
    g: u64,
    max_y: u64,
    seen: BitSet,
}

impl LineFlags {
    fn len_for(a: u64, b: u64, window: Window) -> u64 {
        let g = a.gcd(&b);
        ((b * window.max_x + a * window.max_y) / g + 1) * g
    }

    fn new(a: u64, b: u64, window: Window) -> Self {
        Self { a, b, g: a.gcd(&b), max_y: window.max_y, seen: BitSet::new(Self::len_for(a, b, window)) }
    }

    #[inline]
    fn index(&self, x: u64, y: u64) -> u64 {
        let (a, b, g) = (self.a, self.b, self.g);
        let line = (b * x + a * (self.max_y - y)) / g;
        let sub = if a > 0 { (x % a) / (a / g) } else { (y % b) / (b / g) };
        line * g + sub
    }
}

pub fn solve_fast(g: &GameDef, window: Window) -> Result<OutcomeTable> {
    solve_fast_with(g, window, &SolveConfig::default())
}

pub fn solve_fast_with(g: &GameDef, window: Window, config: &SolveConfig) -> Result<OutcomeTable> {
    if !g.moves().is_rays_only() {
        return Err(Error::UnsupportedMoveSet("the line-accelerated solver handles ray moves only".into()));
    }
    g.check_window(window)?;
    let rays = g.ray_vectors();
    let line_bytes =
        rays.iter().map(|&(a, b)| BitSet::bytes_for(LineFlags::len_for(a, b, window))).fold(0u64, u64::saturating_add);
    let mut table = OutcomeTable::empty(g, window, config, line_bytes)?;
    let mut lines: Vec<LineFlags> = rays.iter().map(|&(a, b)| LineFlags::new(a, b, window)).collect();
    let mut idx = vec![0u64; lines.len()];

    for x in 0..=window.max_x {
        let Some((lo, hi)) = table.column_range(x) else { continue };
        for (i, l) in lines.iter().enumerate() {
            idx[i] = l.index(x, lo);
        }
        for y in lo..=hi {
            let p = !lines.iter().zip(&idx).any(|(l, &i)| l.seen.get(i));
            if p {
                table.p_cells.set(x, y);
                for (l, &i) in lines.iter_mut().zip(&idx) {
                    l.seen.set(i);
                }
            }
            if y == hi {
                break;
            }
            for (l, i) in lines.iter().zip(idx.iter_mut()) {
                if l.a > 0 {
                    // moving up one cell shifts the line key by -a
                    *i -= l.a;
                } else if l.b > 1 {
                    *i = l.index(x, y + 1);
                }
            }
        }
    }
    Ok(table)
}
