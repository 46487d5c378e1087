//! Finite-sample estimates of the limiting ratios `Y/X` along P-positions.
//!
//! Positions are split at a rational boundary into a lower subsequence
//! (ratio strictly below it) and an upper one (ratio at or above it). Each
//! subsequence is summarised by the mean ratio over its last quarter.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::game::Position;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergentConfig {
    /// Fraction of each subsequence, counted from its end, that is averaged.
    pub tail_fraction: f64,
    /// Two tails closer than this are reported as a single cluster.
    pub merge_tolerance: f64,
    /// Minimum number of usable positions.
    pub min_positions: usize,
}

impl Default for ConvergentConfig {
    fn default() -> Self {
        Self { tail_fraction: 0.25, merge_tolerance: 1e-2, min_positions: 10 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cluster {
    /// Tail-averaged ratio.
    pub estimate: f64,
    pub members: usize,
    /// Ratio of the lexicographically last member.
    pub last_ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergentReport {
    pub boundary: Ratio<u64>,
    /// One cluster, or two ordered lower then upper.
    pub clusters: Vec<Cluster>,
}

impl ConvergentReport {
    pub fn estimates(&self) -> Vec<f64> {
        self.clusters.iter().map(|c| c.estimate).collect()
    }
}

fn ratio(p: &Position) -> f64 {
    p.y as f64 / p.x as f64
}

fn summarise(ps: &[Position], tail_fraction: f64) -> Option<Cluster> {
    let last = ps.last()?;
    let tail = ((ps.len() as f64 * tail_fraction).ceil() as usize).clamp(1, ps.len());
    let estimate = ps[ps.len() - tail..].iter().map(ratio).sum::<f64>() / tail as f64;
    Some(Cluster { estimate, members: ps.len(), last_ratio: ratio(last) })
}

pub fn convergents(ps: &[Position], boundary: Ratio<u64>) -> Result<ConvergentReport> {
    convergents_with(ps, boundary, &ConvergentConfig::default())
}

/// `ps` must be in lexicographic order. Positions with `X = 0` carry no
/// ratio and are skipped.
pub fn convergents_with(ps: &[Position], boundary: Ratio<u64>, config: &ConvergentConfig) -> Result<ConvergentReport> {
    debug_assert!(ps.windows(2).all(|w| w[0] < w[1]), "positions must be sorted");
    let usable: Vec<Position> = ps.iter().copied().filter(|p| p.x > 0).collect();
    if usable.len() < config.min_positions {
        return Err(Error::InsufficientData { usable: usable.len(), required: config.min_positions });
    }
    let (num, den) = (*boundary.numer() as u128, *boundary.denom() as u128);
    // y/x < num/den, exactly
    let (lower, upper): (Vec<Position>, Vec<Position>) =
        usable.iter().partition(|p| (p.y as u128) * den < num * (p.x as u128));

    let clusters = match (summarise(&lower, config.tail_fraction), summarise(&upper, config.tail_fraction)) {
        (Some(l), Some(u)) if (l.estimate - u.estimate).abs() > config.merge_tolerance => vec![l, u],
        (Some(_), Some(_)) => vec![summarise(&usable, config.tail_fraction).expect("non-empty")],
        (Some(c), None) | (None, Some(c)) => vec![c],
        (None, None) => unreachable!("usable is non-empty"),
    };
    Ok(ConvergentReport { boundary, clusters })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::{rn_p, rw_p, PHI};
    use crate::game::{GameConstants, Window};

    #[test]
    fn single_convergent_two() {
        let c = GameConstants::new(1, 1, 0, 1).unwrap();
        let r = convergents(&rn_p(&c, Window::square(4000)), Ratio::new(2, 1)).unwrap();
        assert_eq!(r.clusters.len(), 1);
        assert!((r.clusters[0].estimate - 2.0).abs() < 1e-12);
    }

    #[test]
    fn golden_pair() {
        let c = GameConstants::new(1, 1, 0, 1).unwrap();
        let r = convergents(&rw_p(&c, Window::square(20000)), Ratio::new(2, 1)).unwrap();
        let e = r.estimates();
        assert_eq!(e.len(), 2);
        assert!((e[0] - PHI).abs() < 1e-3, "{e:?}");
        assert!((e[1] - PHI * PHI).abs() < 1e-3, "{e:?}");
        assert!(e[0] < 2.0 && e[1] >= 2.0);
    }

    #[test]
    fn boundary_ties_go_upper() {
        let ps: Vec<Position> = (1..=20).map(|k| Position::new(k, 2 * k)).collect();
        let r = convergents(&ps, Ratio::new(2, 1)).unwrap();
        assert_eq!(r.clusters.len(), 1);
        assert_eq!(r.clusters[0].members, 20);
        let r = convergents(&ps, Ratio::new(3, 1)).unwrap();
        assert_eq!(r.clusters[0].members, 20);
        assert_eq!(r.clusters[0].last_ratio, 2.0);
    }

    #[test]
    fn insufficient_data() {
        let ps: Vec<Position> = (0..10).map(|k| Position::new(0, k)).chain([Position::new(1, 1)]).collect();
        let mut sorted = ps.clone();
        sorted.sort();
        assert_eq!(convergents(&sorted, Ratio::new(1, 1)), Err(Error::InsufficientData { usable: 1, required: 10 }));
    }

    #[test]
    fn close_tails_merge() {
        let mut ps = Vec::new();
        for k in 1..=50u64 {
            ps.push(Position::new(100 * k, 100 * k - 1));
            ps.push(Position::new(100 * k + 1, 100 * k + 1));
        }
        let r = convergents(&ps, Ratio::new(1, 1)).unwrap();
        assert_eq!(r.clusters.len(), 1);
        assert_eq!(r.clusters[0].members, 100);
    }
}
