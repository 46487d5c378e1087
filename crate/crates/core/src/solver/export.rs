//! Table exports.
//!
//! CSV: a header `X,Y,outcome` followed by one `X,Y,P|N` row per in-region
//! cell in lexicographic order.
//!
//! Binary: the magic `RHGO`, a version byte, `max_x` and `max_y` as
//! little-endian `u64`, then one bit per in-region cell in lexicographic
//! order (1 = P), packed least-significant bit first and zero-padded to a
//! whole byte.

use super::{Outcome, OutcomeTable};
use crate::error::{Error, Result};
use crate::game::{GameDef, Position, Window};

pub const MAGIC: &[u8; 4] = b"RHGO";
pub const VERSION: u8 = 1;
const HEADER_LEN: usize = 4 + 1 + 8 + 8;

fn outcome_str(o: Outcome) -> &'static str {
    match o {
        Outcome::P => "P",
        Outcome::N => "N",
    }
}

pub fn export_csv(t: &OutcomeTable) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["X", "Y", "outcome"]).expect("in-memory write");
    for (p, o) in t.cells() {
        w.write_record([p.x.to_string(), p.y.to_string(), outcome_str(o).to_string()]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii")
}

/// Headerless `X,Y` lines.
pub fn positions_csv(ps: &[Position]) -> String {
    let mut out = String::with_capacity(ps.len() * 8);
    for p in ps {
        out.push_str(&format!("{},{}\n", p.x, p.y));
    }
    out
}

/// Rebuilds a table for `game` over `window` from CSV. The rows must list
/// exactly the in-region cells of the window, in order.
pub fn import_csv(game: &GameDef, window: Window, text: &str) -> Result<OutcomeTable> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().map_err(|e| Error::Parse(e.to_string()))?;
    if header != vec!["X", "Y", "outcome"] {
        return Err(Error::Parse(format!("unexpected CSV header {header:?}")));
    }
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
        let num = |i: usize| -> Result<u64> {
            rec.get(i).unwrap_or_default().parse().map_err(|e| Error::Parse(format!("row {rec:?}: {e}")))
        };
        let o = match rec.get(2) {
            Some("P") => Outcome::P,
            Some("N") => Outcome::N,
            other => return Err(Error::Parse(format!("bad outcome {other:?}"))),
        };
        rows.push((Position::new(num(0)?, num(1)?), o));
    }
    let t = OutcomeTable::from_p_cells(game, window, rows.iter().filter(|r| r.1 == Outcome::P).map(|r| r.0))?;
    if !t.cells().eq(rows.iter().copied()) {
        return Err(Error::Parse("rows do not cover the in-region cells in order".into()));
    }
    Ok(t)
}

pub fn export_binary(t: &OutcomeTable) -> Vec<u8> {
    let mut out = Vec::with_capacity(HEADER_LEN);
    out.extend_from_slice(MAGIC);
    out.push(VERSION);
    out.extend_from_slice(&t.window().max_x.to_le_bytes());
    out.extend_from_slice(&t.window().max_y.to_le_bytes());
    let (mut byte, mut used) = (0u8, 0);
    for (_, o) in t.cells() {
        if o == Outcome::P {
            byte |= 1 << used;
        }
        used += 1;
        if used == 8 {
            out.push(byte);
            (byte, used) = (0, 0);
        }
    }
    if used > 0 {
        out.push(byte);
    }
    out
}

pub fn import_binary(game: &GameDef, bytes: &[u8]) -> Result<OutcomeTable> {
    if bytes.len() < HEADER_LEN || &bytes[..4] != MAGIC {
        return Err(Error::Parse("missing RHGO header".into()));
    }
    if bytes[4] != VERSION {
        return Err(Error::Parse(format!("unsupported version {}", bytes[4])));
    }
    let word = |at: usize| u64::from_le_bytes(bytes[at..at + 8].try_into().expect("8 bytes"));
    let window = Window::new(word(5), word(13));
    let body = &bytes[HEADER_LEN..];

    let mut t = OutcomeTable::from_p_cells(game, window, [])?;
    let count = t.cells().count();
    if body.len() != count.div_ceil(8) {
        return Err(Error::Parse(format!("expected {} payload bytes, found {}", count.div_ceil(8), body.len())));
    }
    let bit = |i: usize| body[i / 8] >> (i % 8) & 1 == 1;
    if (count..count.div_ceil(8) * 8).any(bit) {
        return Err(Error::Parse("non-zero padding bits".into()));
    }
    let p_cells: Vec<Position> = t.cells().enumerate().filter(|&(i, _)| bit(i)).map(|(_, (p, _))| p).collect();
    for p in p_cells {
        t.p_cells.set(p.x, p.y);
    }
    Ok(t)
}
