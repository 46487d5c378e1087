//! Domain types: game constants, positions, move sets and game definitions.
//!
//! A game is played on two heaps `(X, Y)`. Either every pair of non-negative
//! heap sizes is allowed (the canonical region), or the heaps are confined to
//! the cone between the rays of slope `q1/p1` and `q2/p2` (the bounded
//! region). Moves either subtract a listed pair directly, or subtract the
//! image of a listed pair `(s, t)` under the constant matrix, i.e.
//! `(p1*s + p2*t, q1*s + q2*t)`.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest accepted matrix entry.
pub const MAX_CONSTANT: u64 = 1 << 20;

/// Largest accepted heap size or move component. Together with
/// [`MAX_CONSTANT`] this keeps every product `entry * coordinate` and every
/// sum of two such products below 2^62.
pub const MAX_COORD: u64 = 1 << 40;

/// The matrix `Q = (p1 q1; p2 q2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GameConstants {
    p1: u64,
    q1: u64,
    p2: u64,
    q2: u64,
}

impl GameConstants {
    pub fn new(p1: u64, q1: u64, p2: u64, q2: u64) -> Result<Self> {
        if p1 == 0 || q2 == 0 {
            return Err(Error::InvalidConstants(format!("p1 and q2 must be positive, got p1={p1} q2={q2}")));
        }
        if [p1, q1, p2, q2].iter().any(|&v| v > MAX_CONSTANT) {
            return Err(Error::InvalidConstants(format!("entries must not exceed {MAX_CONSTANT}")));
        }
        if p1 * q2 <= q1 * p2 {
            return Err(Error::InvalidConstants(format!(
                "determinant p1*q2 - q1*p2 must be positive, got {}",
                p1 as i64 * q2 as i64 - q1 as i64 * p2 as i64
            )));
        }
        Ok(Self { p1, q1, p2, q2 })
    }

    /// The identity matrix; the bounded region then coincides with the
    /// canonical one.
    pub fn identity() -> Self {
        Self { p1: 1, q1: 0, p2: 0, q2: 1 }
    }

    /// Parses `p1,q1,p2,q2`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|v| v.trim().parse::<u64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse(format!("bad matrix {s:?}: {e}")))?;
        match parts[..] {
            [p1, q1, p2, q2] => Self::new(p1, q1, p2, q2),
            _ => Err(Error::Parse(format!("matrix needs four comma-separated entries, got {s:?}"))),
        }
    }

    pub fn p1(&self) -> u64 {
        self.p1
    }
    pub fn q1(&self) -> u64 {
        self.q1
    }
    pub fn p2(&self) -> u64 {
        self.p2
    }
    pub fn q2(&self) -> u64 {
        self.q2
    }

    pub fn entries(&self) -> [u64; 4] {
        [self.p1, self.q1, self.p2, self.q2]
    }

    pub fn det(&self) -> u64 {
        self.p1 * self.q2 - self.q1 * self.p2
    }

    /// Whether `(x, y)` lies in the bounded region: `x*q1 <= y*p1` and
    /// `y*p2 <= x*q2`.
    #[inline]
    pub fn contains(&self, x: u64, y: u64) -> bool {
        x * self.q1 <= y * self.p1 && y * self.p2 <= x * self.q2
    }

    /// Image of `(s, t)` under the matrix: `(p1*s + p2*t, q1*s + q2*t)`.
    #[inline]
    pub fn transform(&self, s: u64, t: u64) -> (u64, u64) {
        (self.p1 * s + self.p2 * t, self.q1 * s + self.q2 * t)
    }

    /// Rejects windows whose coordinates could overflow the exact arithmetic.
    pub fn check_window(&self, window: Window) -> Result<()> {
        window.check()
    }
}

impl fmt::Display for GameConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.p1, self.q1, self.p2, self.q2)
    }
}

/// A pair of heap sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Position {
    pub x: u64,
    pub y: u64,
}

impl Position {
    pub const fn new(x: u64, y: u64) -> Self {
        Self { x, y }
    }
}

impl From<(u64, u64)> for Position {
    fn from((x, y): (u64, u64)) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Inclusive rectangular bounds `0..=max_x` by `0..=max_y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Window {
    pub max_x: u64,
    pub max_y: u64,
}

impl Window {
    pub const fn new(max_x: u64, max_y: u64) -> Self {
        Self { max_x, max_y }
    }

    pub const fn square(max: u64) -> Self {
        Self { max_x: max, max_y: max }
    }

    /// Parses `N` or `N,M`.
    pub fn parse(s: &str) -> Result<Self> {
        let parse = |v: &str| v.trim().parse::<u64>().map_err(|e| Error::Parse(format!("bad window {s:?}: {e}")));
        let window = match s.split_once(',') {
            Some((a, b)) => Self::new(parse(a)?, parse(b)?),
            None => Self::square(parse(s)?),
        };
        window.check()?;
        Ok(window)
    }

    pub fn check(&self) -> Result<()> {
        if self.max_x > MAX_COORD || self.max_y > MAX_COORD {
            return Err(Error::Overflow(format!(
                "window {}x{} exceeds the coordinate limit {MAX_COORD}",
                self.max_x, self.max_y
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn contains(&self, p: Position) -> bool {
        p.x <= self.max_x && p.y <= self.max_y
    }

    pub fn width(&self) -> u64 {
        self.max_x + 1
    }

    pub fn height(&self) -> u64 {
        self.max_y + 1
    }

    /// Number of cells, or `None` if it does not fit in `u64`.
    pub fn cell_count(&self) -> Option<u64> {
        self.width().checked_mul(self.height())
    }
}

/// Finite move pairs plus ray families `{(a*t, b*t) : t >= 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MoveSet {
    finite: Vec<(u64, u64)>,
    rays: Vec<(u64, u64)>,
}

fn on_ray(m: (u64, u64), ray: (u64, u64)) -> bool {
    // m = t * ray for some integer t >= 1
    let t = m.0.checked_div(ray.0).unwrap_or_else(|| m.1 / ray.1);
    t >= 1 && ray.0 * t == m.0 && ray.1 * t == m.1
}

impl MoveSet {
    pub fn new(finite: Vec<(u64, u64)>, rays: Vec<(u64, u64)>) -> Result<Self> {
        for &(a, b) in finite.iter().chain(&rays) {
            if a == 0 && b == 0 {
                return Err(Error::InvalidMoveSet("(0,0) is not a move".into()));
            }
            if a > MAX_COORD || b > MAX_COORD {
                return Err(Error::InvalidMoveSet(format!("move ({a},{b}) exceeds the coordinate limit")));
            }
        }
        for (i, m) in finite.iter().enumerate() {
            if finite[..i].contains(m) {
                return Err(Error::InvalidMoveSet(format!("duplicate move ({},{})", m.0, m.1)));
            }
            if let Some(r) = rays.iter().find(|&&r| on_ray(*m, r)) {
                return Err(Error::InvalidMoveSet(format!(
                    "move ({},{}) already lies on ray ({},{})",
                    m.0, m.1, r.0, r.1
                )));
            }
        }
        for (i, r) in rays.iter().enumerate() {
            if rays[..i].contains(r) {
                return Err(Error::InvalidMoveSet(format!("duplicate ray ({},{})", r.0, r.1)));
            }
        }
        Ok(Self { finite, rays })
    }

    pub fn rays_only(rays: &[(u64, u64)]) -> Self {
        Self::new(Vec::new(), rays.to_vec()).expect("static ray set is valid")
    }

    /// Nim: `{(t,0), (0,t)}`.
    pub fn nim() -> Self {
        Self::rays_only(&[(1, 0), (0, 1)])
    }

    /// Wythoff Nim: Nim plus `(t,t)`.
    pub fn wythoff() -> Self {
        Self::rays_only(&[(1, 0), (0, 1), (1, 1)])
    }

    /// Wythoff Nim plus `(t,2t)` and `(2t,t)`.
    pub fn gdwn() -> Self {
        Self::rays_only(&[(1, 0), (0, 1), (1, 1), (1, 2), (2, 1)])
    }

    pub fn finite(&self) -> &[(u64, u64)] {
        &self.finite
    }

    pub fn rays(&self) -> &[(u64, u64)] {
        &self.rays
    }

    pub fn is_rays_only(&self) -> bool {
        self.finite.is_empty()
    }

    /// Membership test for a concrete pair (finite entry or ray instance).
    pub fn contains(&self, m: (u64, u64)) -> bool {
        self.finite.contains(&m) || self.rays.iter().any(|&r| on_ray(m, r))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    /// All pairs of non-negative heap sizes.
    #[serde(rename = "B")]
    CanonicalB,
    /// The cone `x*q1 <= y*p1`, `y*p2 <= x*q2`.
    #[serde(rename = "BQ")]
    BoundedBQ,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    /// Subtract the listed pair.
    #[serde(rename = "direct")]
    Direct,
    /// Subtract the image of the listed pair under the matrix.
    #[serde(rename = "qtransformed")]
    QTransformed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameDef {
    constants: GameConstants,
    region: Region,
    move_kind: MoveKind,
    moves: MoveSet,
}

impl GameDef {
    pub fn new(constants: GameConstants, region: Region, move_kind: MoveKind, moves: MoveSet) -> Result<Self> {
        if move_kind == MoveKind::QTransformed && region != Region::BoundedBQ {
            return Err(Error::InvalidGame("matrix-transformed moves require the bounded region".into()));
        }
        Ok(Self { constants, region, move_kind, moves })
    }

    /// The canonical subtraction game `G(M)`.
    pub fn canonical(moves: MoveSet) -> Self {
        Self { constants: GameConstants::identity(), region: Region::CanonicalB, move_kind: MoveKind::Direct, moves }
    }

    /// The matrix subtraction game `G_Q(M)`.
    pub fn q_subtraction(constants: GameConstants, moves: MoveSet) -> Self {
        Self { constants, region: Region::BoundedBQ, move_kind: MoveKind::QTransformed, moves }
    }

    pub fn constants(&self) -> GameConstants {
        self.constants
    }
    pub fn region(&self) -> Region {
        self.region
    }
    pub fn move_kind(&self) -> MoveKind {
        self.move_kind
    }
    pub fn moves(&self) -> &MoveSet {
        &self.moves
    }

    #[inline]
    pub fn in_region(&self, p: Position) -> bool {
        match self.region {
            Region::CanonicalB => true,
            Region::BoundedBQ => self.constants.contains(p.x, p.y),
        }
    }

    /// The heap decrement produced by the move pair `m`.
    #[inline]
    pub fn move_vector(&self, m: (u64, u64)) -> (u64, u64) {
        match self.move_kind {
            MoveKind::Direct => m,
            MoveKind::QTransformed => self.constants.transform(m.0, m.1),
        }
    }

    /// Heap decrements of the finite moves.
    pub fn finite_vectors(&self) -> Vec<(u64, u64)> {
        self.moves.finite.iter().map(|&m| self.move_vector(m)).collect()
    }

    /// Heap-space directions of the ray families.
    pub fn ray_vectors(&self) -> Vec<(u64, u64)> {
        self.moves.rays.iter().map(|&r| self.move_vector(r)).collect()
    }

    /// Whether two games share the same set of positions.
    pub fn same_region(&self, other: &GameDef) -> bool {
        match (self.region, other.region) {
            (Region::CanonicalB, Region::CanonicalB) => true,
            (Region::BoundedBQ, Region::BoundedBQ) => self.constants == other.constants,
            _ => false,
        }
    }

    /// Rejects windows whose coordinates or move images could overflow.
    pub fn check_window(&self, window: Window) -> Result<()> {
        window.check()?;
        for v in self.finite_vectors().into_iter().chain(self.ray_vectors()) {
            if v.0 > 1 << 61 || v.1 > 1 << 61 {
                return Err(Error::Overflow(format!("move vector ({},{}) too large", v.0, v.1)));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GameSpecFile::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GameSpecFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.try_into()
    }

    pub fn from_json_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

/// On-disk JSON layout of a game definition.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GameSpecFile {
    #[serde(rename = "Q")]
    q: [u64; 4],
    region: Region,
    #[serde(rename = "moveKind")]
    move_kind: MoveKind,
    #[serde(default)]
    finite: Vec<[u64; 2]>,
    #[serde(default)]
    rays: Vec<[u64; 2]>,
}

impl From<&GameDef> for GameSpecFile {
    fn from(g: &GameDef) -> Self {
        Self {
            q: g.constants.entries(),
            region: g.region,
            move_kind: g.move_kind,
            finite: g.moves.finite.iter().map(|&(a, b)| [a, b]).collect(),
            rays: g.moves.rays.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<GameSpecFile> for GameDef {
    type Error = Error;

    fn try_from(f: GameSpecFile) -> Result<Self> {
        let [p1, q1, p2, q2] = f.q;
        let constants = GameConstants::new(p1, q1, p2, q2)?;
        let pairs = |v: Vec<[u64; 2]>| v.into_iter().map(|[a, b]| (a, b)).collect();
        let moves = MoveSet::new(pairs(f.finite), pairs(f.rays))?;
        GameDef::new(constants, f.region, f.move_kind, moves)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_validation() {
        assert!(GameConstants::new(7, 2, 1, 10).is_ok());
        assert_eq!(GameConstants::new(7, 2, 1, 10).unwrap().det(), 68);
        assert!(GameConstants::new(0, 0, 0, 1).is_err());
        assert!(GameConstants::new(1, 0, 0, 0).is_err());
        // det = 0 and det < 0
        assert!(GameConstants::new(1, 1, 1, 1).is_err());
        assert!(GameConstants::new(1, 2, 1, 1).is_err());
        assert!(GameConstants::new(MAX_CONSTANT + 1, 0, 0, 1).is_err());
    }

    #[test]
    fn region_membership() {
        let id = GameConstants::identity();
        assert!(id.contains(5, 0));
        let q = GameConstants::new(7, 2, 1, 10).unwrap();
        assert!(q.contains(7, 2));
        assert!(!q.contains(7, 1));
        let q = GameConstants::new(1, 1, 0, 1).unwrap();
        assert!(q.contains(2, 3));
        assert!(!q.contains(3, 2));
    }

    #[test]
    fn move_vectors() {
        let id =
            GameDef::new(GameConstants::identity(), Region::BoundedBQ, MoveKind::QTransformed, MoveSet::nim()).unwrap();
        assert_eq!(id.move_vector((3, 5)), (3, 5));
        let g = GameDef::q_subtraction(GameConstants::new(7, 2, 1, 10).unwrap(), MoveSet::nim());
        assert_eq!(g.move_vector((1, 0)), (7, 2));
        assert_eq!(g.move_vector((1, 1)), (8, 12));
    }

    #[test]
    fn move_set_guards() {
        assert!(MoveSet::new(vec![(0, 0)], vec![]).is_err());
        assert!(MoveSet::new(vec![], vec![(0, 0)]).is_err());
        assert!(MoveSet::new(vec![(1, 2), (1, 2)], vec![]).is_err());
        assert!(MoveSet::new(vec![], vec![(1, 1), (1, 1)]).is_err());
        // (3,3) lies on the ray (1,1)
        assert!(MoveSet::new(vec![(3, 3)], vec![(1, 1)]).is_err());
        assert!(MoveSet::new(vec![(3, 4)], vec![(1, 1), (0, 1)]).is_ok());
        assert!(MoveSet::new(vec![(0, 5)], vec![(1, 0)]).is_ok());
        assert!(MoveSet::new(vec![(0, 5)], vec![(0, 2)]).is_ok());
        assert!(MoveSet::new(vec![(0, 4)], vec![(0, 2)]).is_err());
    }

    #[test]
    fn q_moves_need_bounded_region() {
        let r = GameDef::new(GameConstants::identity(), Region::CanonicalB, MoveKind::QTransformed, MoveSet::nim());
        assert!(matches!(r, Err(Error::InvalidGame(_))));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"Q":[7,2,1,10],"region":"BQ","moveKind":"direct",
                       "finite":[[3,4]],"rays":[[7,2],[1,10],[4,6]]}"#;
        let g = GameDef::from_json(text).unwrap();
        assert_eq!(g.region(), Region::BoundedBQ);
        assert_eq!(g.move_kind(), MoveKind::Direct);
        assert_eq!(g.moves().rays(), &[(7, 2), (1, 10), (4, 6)]);
        assert_eq!(GameDef::from_json(&g.to_json()).unwrap(), g);

        assert!(GameDef::from_json(r#"{"Q":[1,1,1,1],"region":"BQ","moveKind":"direct"}"#).is_err());
        assert!(GameDef::from_json(r#"{"Q":[1,0,0,1],"region":"B","moveKind":"qtransformed"}"#).is_err());
        assert!(GameDef::from_json(r#"{"Q":[1,0,0,1],"region":"X","moveKind":"direct"}"#).is_err());
    }

    #[test]
    fn parsing_helpers() {
        assert_eq!(GameConstants::parse("7,2,1,10").unwrap().det(), 68);
        assert!(GameConstants::parse("7,2,1").is_err());
        assert!(GameConstants::parse("a,b,c,d").is_err());
        assert_eq!(Window::parse("10").unwrap(), Window::square(10));
        assert_eq!(Window::parse("10,20").unwrap(), Window::new(10, 20));
        assert!(Window::parse(&format!("{}", MAX_COORD + 1)).is_err());
    }
}
