//! P/N outcome computation on finite windows.
//!
//! Every move vector is non-negative and non-zero, so each option of a cell
//! is lexicographically smaller and lies inside any window that contains the
//! cell. Sweeping the window in lexicographic order therefore decides every
//! cell exactly, with no boundary effects.

mod convergents;
mod export;
mod fast;
mod grid;
mod verify;

pub use convergents::{convergents, convergents_with, Cluster, ConvergentConfig, ConvergentReport};
pub use export::{export_binary, export_csv, import_binary, import_csv, positions_csv};
pub use fast::{solve_fast, solve_fast_with};
pub use verify::{verify_equivalence, verify_equivalence_with, Counterexample, VerificationReport};

use crate::error::{Error, Result};
use crate::game::{GameDef, Position, Region, Window};
use grid::BitGrid;

/// Default memory cap for a single table: 2 GiB.
pub const DEFAULT_MEM_CAP: u64 = 2 << 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// Previous player wins.
    P,
    /// Next player wins.
    N,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveConfig {
    pub mem_cap_bytes: u64,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self { mem_cap_bytes: DEFAULT_MEM_CAP }
    }
}

impl SolveConfig {
    /// Reads `RHG_MEM_CAP_MB`, falling back to the default cap.
    pub fn from_env() -> Result<Self> {
        match std::env::var("RHG_MEM_CAP_MB") {
            Ok(v) => {
                let mb: u64 = v.trim().parse().map_err(|e| Error::Parse(format!("RHG_MEM_CAP_MB={v:?}: {e}")))?;
                Ok(Self { mem_cap_bytes: mb.saturating_mul(1 << 20) })
            }
            Err(_) => Ok(Self::default()),
        }
    }

    fn check(&self, needed: u64) -> Result<()> {
        if needed > self.mem_cap_bytes {
            return Err(Error::Capacity { needed, cap: self.mem_cap_bytes });
        }
        Ok(())
    }
}

/// Outcomes of every in-region position of a window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutcomeTable {
    game: GameDef,
    window: Window,
    p_cells: BitGrid,
}

impl OutcomeTable {
    fn empty(game: &GameDef, window: Window, config: &SolveConfig, extra: u64) -> Result<Self> {
        game.check_window(window)?;
        let cells = window.cell_count().ok_or(Error::Capacity { needed: u64::MAX, cap: config.mem_cap_bytes })?;
        config.check(grid::BitSet::bytes_for(cells).saturating_add(extra))?;
        Ok(Self { game: game.clone(), window, p_cells: BitGrid::new(window.width(), window.height()) })
    }

    pub(crate) fn from_p_cells(
        game: &GameDef,
        window: Window,
        p_cells: impl IntoIterator<Item = Position>,
    ) -> Result<Self> {
        let mut t = Self::empty(game, window, &SolveConfig::default(), 0)?;
        for p in p_cells {
            if !t.window.contains(p) || !t.game.in_region(p) {
                return Err(Error::Parse(format!("{p} is not an in-region cell")));
            }
            t.p_cells.set(p.x, p.y);
        }
        Ok(t)
    }

    pub fn game(&self) -> &GameDef {
        &self.game
    }

    pub fn window(&self) -> Window {
        self.window
    }

    /// Outcome of `p`, or `None` if `p` is outside the window or the region.
    pub fn outcome(&self, p: Position) -> Option<Outcome> {
        if !self.window.contains(p) || !self.game.in_region(p) {
            return None;
        }
        Some(if self.p_cells.get(p.x, p.y) { Outcome::P } else { Outcome::N })
    }

    #[inline]
    pub fn is_p(&self, p: Position) -> bool {
        self.outcome(p) == Some(Outcome::P)
    }

    /// In-region cells of column `x` as an inclusive `y` range.
    pub(crate) fn column_range(&self, x: u64) -> Option<(u64, u64)> {
        column_range(&self.game, self.window, x)
    }

    /// All in-region cells in lexicographic order.
    pub fn cells(&self) -> impl Iterator<Item = (Position, Outcome)> + '_ {
        (0..=self.window.max_x).flat_map(move |x| {
            let (lo, hi) = self.column_range(x).unwrap_or((1, 0));
            (lo..=hi).map(move |y| {
                let o = if self.p_cells.get(x, y) { Outcome::P } else { Outcome::N };
                (Position::new(x, y), o)
            })
        })
    }

    /// All P-cells in lexicographic order.
    pub fn p_positions(&self) -> Vec<Position> {
        self.cells().filter(|c| c.1 == Outcome::P).map(|c| c.0).collect()
    }
}

/// The in-region `y` range of column `x`, clipped to the window.
pub(crate) fn column_range(game: &GameDef, window: Window, x: u64) -> Option<(u64, u64)> {
    let (lo, hi) = match game.region() {
        Region::CanonicalB => (0, window.max_y),
        Region::BoundedBQ => {
            let c = game.constants();
            let lo = (x * c.q1()).div_ceil(c.p1());
            let hi = if c.p2() == 0 { window.max_y } else { (x * c.q2() / c.p2()).min(window.max_y) };
            (lo, hi)
        }
    };
    (lo <= hi).then_some((lo, hi))
}

pub fn p_positions(t: &OutcomeTable) -> Vec<Position> {
    t.p_positions()
}

/// Exact outcomes by direct enumeration of every option.
pub fn solve(g: &GameDef, window: Window) -> Result<OutcomeTable> {
    solve_with(g, window, &SolveConfig::default())
}

pub fn solve_with(g: &GameDef, window: Window, config: &SolveConfig) -> Result<OutcomeTable> {
    let mut table = OutcomeTable::empty(g, window, config, 0)?;
    let finite = g.finite_vectors();
    let rays = g.ray_vectors();
    for x in 0..=window.max_x {
        let Some((lo, hi)) = table.column_range(x) else { continue };
        for y in lo..=hi {
            if !has_p_option(&table, x, y, &finite, &rays) {
                table.p_cells.set(x, y);
            }
        }
    }
    Ok(table)
}

fn has_p_option(t: &OutcomeTable, x: u64, y: u64, finite: &[(u64, u64)], rays: &[(u64, u64)]) -> bool {
    let is_p = |ox: u64, oy: u64| {
        let o = Position::new(ox, oy);
        debug_assert!(t.window.contains(o));
        t.game.in_region(o) && t.p_cells.get(ox, oy)
    };
    for &(a, b) in finite {
        if a <= x && b <= y && is_p(x - a, y - b) {
            return true;
        }
    }
    for &(a, b) in rays {
        let (mut ox, mut oy) = (x, y);
        // The region is convex and contains (x, y), so the in-region
        // options along a ray form an initial run of t = 1, 2, ...
        while a <= ox && b <= oy {
            ox -= a;
            oy -= b;
            if !t.game.in_region(Position::new(ox, oy)) {
                break;
            }
            if t.p_cells.get(ox, oy) {
                return true;
            }
        }
    }
    false
}

/// [`solve_fast`] when the move set is rays only, [`solve`] otherwise.
pub fn solve_auto(g: &GameDef, window: Window, config: &SolveConfig) -> Result<OutcomeTable> {
    if g.moves().is_rays_only() {
        fast::solve_fast_with(g, window, config)
    } else {
        solve_with(g, window, config)
    }
}

/// Compares the P-cell sets of two tables over the same window and region.
/// Returns `None` when they agree, else the lexicographically first
/// position where they differ.
pub fn compare_psets(t1: &OutcomeTable, t2: &OutcomeTable) -> Result<Option<Position>> {
    if t1.window != t2.window {
        return Err(Error::Mismatch(format!("windows differ: {:?} vs {:?}", t1.window, t2.window)));
    }
    if !t1.game.same_region(&t2.game) {
        return Err(Error::Mismatch("regions differ".into()));
    }
    Ok(t1.cells().zip(t2.cells()).find(|(a, b)| a.1 != b.1).map(|(a, _)| a.0))
}
