//! Shorthand game names and move-set specs accepted on the command line.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::game::{GameConstants, GameDef, MoveKind, MoveSet, Region};

/// Matrix of the (2/7, 10/1) games that the `ext-*` shorthands extend.
pub const EXTENSION_BASE: [u64; 4] = [7, 2, 1, 10];

pub const BUILTIN_NAMES: &[&str] =
    &["nim", "wythoff", "gdwn", "rn:P1,Q1,P2,Q2", "rw:P1,Q1,P2,Q2", "ext-a", "ext-b", "ext-c"];

/// Rational Nim on `base` with its matrix moves written as direct rays,
/// plus the direct ray `extra`.
fn extension(extra: (u64, u64)) -> GameDef {
    let [p1, q1, p2, q2] = EXTENSION_BASE;
    let c = GameConstants::new(p1, q1, p2, q2).expect("valid base matrix");
    let moves = MoveSet::new(Vec::new(), vec![c.transform(1, 0), c.transform(0, 1), extra])
        .expect("extension rays are distinct");
    GameDef::new(c, Region::BoundedBQ, MoveKind::Direct, moves).expect("direct moves are always valid")
}

/// Expands a shorthand, or returns `None` if `spec` is not one.
pub fn builtin(spec: &str) -> Option<Result<GameDef>> {
    let game = match spec {
        "nim" => GameDef::canonical(MoveSet::nim()),
        "wythoff" => GameDef::canonical(MoveSet::wythoff()),
        "gdwn" => GameDef::canonical(MoveSet::gdwn()),
        "ext-a" => extension((4, 6)),
        "ext-b" => extension((4, 4)),
        "ext-c" => extension((8, 4)),
        _ => {
            let (kind, q) = spec.split_once(':')?;
            let moves = match kind {
                "rn" => MoveSet::nim(),
                "rw" => MoveSet::wythoff(),
                _ => return None,
            };
            return Some(GameConstants::parse(q).map(|c| GameDef::q_subtraction(c, moves)));
        }
    };
    Some(Ok(game))
}

/// A shorthand name or a path to a JSON game definition.
pub fn parse_game(spec: &str) -> Result<GameDef> {
    match builtin(spec) {
        Some(game) => game,
        None if Path::new(spec).exists() => GameDef::from_json_file(Path::new(spec)),
        None => {
            Err(Error::Parse(format!("{spec:?} is neither a builtin game ({}) nor a file", BUILTIN_NAMES.join(", "))))
        }
    }
}

/// `k` distinct random move pairs with both entries at most `max_entry`.
pub fn random_moveset(seed: u64, k: usize, max_entry: u64) -> Result<MoveSet> {
    let room = ((max_entry + 1) * (max_entry + 1) - 1) as usize;
    if k == 0 || k > room {
        return Err(Error::InvalidMoveSet(format!("cannot draw {k} distinct moves with entries <= {max_entry}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut moves = Vec::with_capacity(k);
    while moves.len() < k {
        let m = (rng.gen_range(0..=max_entry), rng.gen_range(0..=max_entry));
        if m != (0, 0) && !moves.contains(&m) {
            moves.push(m);
        }
    }
    MoveSet::new(moves, Vec::new())
}

/// `nim`, `wythoff`, `gdwn`, `random:seed=S,k=K[,max=M]`, or a JSON file
/// holding `{"finite": [...], "rays": [...]}`.
pub fn parse_moveset(spec: &str, default_seed: u64) -> Result<MoveSet> {
    match spec {
        "nim" => return Ok(MoveSet::nim()),
        "wythoff" => return Ok(MoveSet::wythoff()),
        "gdwn" => return Ok(MoveSet::gdwn()),
        _ => {}
    }
    if let Some(rest) = spec.strip_prefix("random") {
        let (mut seed, mut k, mut max) = (default_seed, 5usize, 6u64);
        for kv in rest.trim_start_matches(':').split(',').filter(|s| !s.is_empty()) {
            let (key, value) =
                kv.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {kv:?}")))?;
            let bad = |e: std::num::ParseIntError| Error::Parse(format!("{kv:?}: {e}"));
            match key {
                "seed" => seed = value.parse().map_err(bad)?,
                "k" => k = value.parse().map_err(bad)?,
                "max" => max = value.parse().map_err(bad)?,
                _ => return Err(Error::Parse(format!("unknown key {key:?}"))),
            }
        }
        return random_moveset(seed, k, max);
    }
    let text = std::fs::read_to_string(spec).map_err(|e| Error::Parse(format!("move set {spec:?}: {e}")))?;
    #[derive(serde::Deserialize)]
    #[serde(deny_unknown_fields)]
    struct MovesFile {
        #[serde(default)]
        finite: Vec<[u64; 2]>,
        #[serde(default)]
        rays: Vec<[u64; 2]>,
    }
    let f: MovesFile = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let pairs = |v: Vec<[u64; 2]>| v.into_iter().map(|[a, b]| (a, b)).collect();
    MoveSet::new(pairs(f.finite), pairs(f.rays))
}

/// The matrix of a rational Nim or rational Wythoff game, with a flag
/// telling which of the two it is (`true` for Wythoff).
pub fn rational_form(g: &GameDef) -> Option<(GameConstants, bool)> {
    let c = g.constants();
    if *g == GameDef::q_subtraction(c, MoveSet::nim()) {
        return Some((c, false));
    }
    if *g == GameDef::q_subtraction(c, MoveSet::wythoff()) {
        return Some((c, true));
    }
    if *g == GameDef::canonical(MoveSet::nim()) {
        return Some((GameConstants::identity(), false));
    }
    if *g == GameDef::canonical(MoveSet::wythoff()) {
        return Some((GameConstants::identity(), true));
    }
    None
}
