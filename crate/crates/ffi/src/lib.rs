//! C ABI over the `rhg` solver.
//!
//! Games and tables are opaque handles owned by the caller and released
//! with [`rhg_game_free`] / [`rhg_table_free`]. Every fallible function
//! returns an [`RhgStatus`]; on failure [`rhg_last_error`] describes the
//! most recent error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rhg::cli::builtin::builtin;
use rhg::closedform::beatty;
use rhg::lattice::{phi_q, terminal_set};
use rhg::solver::{solve_fast_with, solve_with, SolveConfig};
use rhg::{Error, GameConstants, GameDef, Outcome, OutcomeTable, Position, Window};

/// Result codes. The input, capacity and insufficient-data values match the
/// `rhg` command's exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhgStatus {
    Ok = 0,
    /// A required pointer was null or a string was not UTF-8.
    InvalidArgument = 1,
    /// Invalid constants, move set, game definition or window.
    InputError = 2,
    /// The table would exceed the memory cap.
    Capacity = 3,
    InsufficientData = 4,
    /// The fast solver was asked to handle finite moves.
    Unsupported = 5,
    /// The queried position lies outside the table's region or window.
    OutOfRegion = 6,
    /// The output buffer is too small; the required length was written.
    BufferTooSmall = 7,
    /// A Rust panic was caught at the boundary.
    Internal = 8,
}

/// A game definition.
pub struct RhgGame(GameDef);

/// A solved outcome table with its P-positions in lexicographic order.
pub struct RhgTable {
    table: OutcomeTable,
    p_positions: Vec<Position>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: RhgStatus, msg: impl Into<String>) -> RhgStatus {
    set_error(msg.into());
    status
}

fn from_error(e: Error) -> RhgStatus {
    let status = match e {
        Error::Capacity { .. } | Error::PixelCap { .. } => RhgStatus::Capacity,
        Error::InsufficientData { .. } => RhgStatus::InsufficientData,
        Error::UnsupportedMoveSet(_) => RhgStatus::Unsupported,
        Error::OutOfRegion(_) => RhgStatus::OutOfRegion,
        _ => RhgStatus::InputError,
    };
    fail(status, e.to_string())
}

/// Runs `f`, turning panics into [`RhgStatus::Internal`].
fn guard(f: impl FnOnce() -> RhgStatus) -> RhgStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(RhgStatus::Internal, "internal panic"))
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, RhgStatus> {
    if s.is_null() {
        return Err(fail(RhgStatus::InvalidArgument, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(RhgStatus::InvalidArgument, "string is not UTF-8"))
}

fn constants(p1: u64, q1: u64, p2: u64, q2: u64) -> Result<GameConstants, RhgStatus> {
    GameConstants::new(p1, q1, p2, q2).map_err(from_error)
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! non_null {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail(RhgStatus::InvalidArgument, concat!("null pointer: ", stringify!($p)));
        })+
    };
}

fn new_game(out: *mut *mut RhgGame, game: rhg::Result<GameDef>) -> RhgStatus {
    let game = try_status!(game.map_err(from_error));
    // SAFETY: callers check `out` for null.
    unsafe { *out = Box::into_raw(Box::new(RhgGame(game))) };
    RhgStatus::Ok
}

/// Parses a JSON game definition.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rhg_game_from_json(json: *const c_char, out: *mut *mut RhgGame) -> RhgStatus {
    guard(|| {
        non_null!(out);
        let text = try_status!(str_arg(json));
        new_game(out, GameDef::from_json(text))
    })
}

/// Builds a named game: `nim`, `wythoff`, `gdwn`, `ext-a`, `ext-b`,
/// `ext-c`, `rn:P1,Q1,P2,Q2` or `rw:P1,Q1,P2,Q2`.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rhg_game_from_builtin(name: *const c_char, out: *mut *mut RhgGame) -> RhgStatus {
    guard(|| {
        non_null!(out);
        let name = try_status!(str_arg(name));
        match builtin(name) {
            Some(game) => new_game(out, game),
            None => fail(RhgStatus::InputError, format!("unknown game {name:?}")),
        }
    })
}

/// Releases a game. Null is ignored.
///
/// # Safety
/// `game` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rhg_game_free(game: *mut RhgGame) {
    if !game.is_null() {
        drop(Box::from_raw(game));
    }
}

/// Solves `game` on the window `[0, max_x] x [0, max_y]`. `fast` selects
/// the line-accelerated solver, which only accepts ray moves. The memory
/// cap is read from `RHG_MEM_CAP_MB` (default 2 GiB).
///
/// # Safety
/// `game` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rhg_solve(
    game: *const RhgGame,
    max_x: u64,
    max_y: u64,
    fast: bool,
    out: *mut *mut RhgTable,
) -> RhgStatus {
    guard(|| {
        non_null!(game, out);
        let game = &(*game).0;
        let config = try_status!(SolveConfig::from_env().map_err(from_error));
        let window = Window::new(max_x, max_y);
        let solved = if fast { solve_fast_with(game, window, &config) } else { solve_with(game, window, &config) };
        let table = try_status!(solved.map_err(from_error));
        let p_positions = table.p_positions();
        *out = Box::into_raw(Box::new(RhgTable { table, p_positions }));
        RhgStatus::Ok
    })
}

/// Releases a table. Null is ignored.
///
/// # Safety
/// `table` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rhg_table_free(table: *mut RhgTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Writes 1 to `is_p` for a P-position and 0 for an N-position.
///
/// # Safety
/// `table` must be a live handle and `is_p` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rhg_table_outcome(table: *const RhgTable, x: u64, y: u64, is_p: *mut i32) -> RhgStatus {
    guard(|| {
        non_null!(table, is_p);
        let p = Position::new(x, y);
        match (*table).table.outcome(p) {
            Some(o) => {
                *is_p = (o == Outcome::P) as i32;
                RhgStatus::Ok
            }
            None => fail(RhgStatus::OutOfRegion, format!("{p} is outside the table")),
        }
    })
}

/// Number of P-positions in the table.
///
/// # Safety
/// `table` must be a live handle and `count` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rhg_table_p_count(table: *const RhgTable, count: *mut u64) -> RhgStatus {
    guard(|| {
        non_null!(table, count);
        *count = (*table).p_positions.len() as u64;
        RhgStatus::Ok
    })
}

/// Copies the P-positions as interleaved `x, y` pairs into `xy`, which
/// holds `capacity` pairs. `written` receives the number of pairs copied,
/// or the number needed when the result is [`RhgStatus::BufferTooSmall`].
///
/// # Safety
/// `xy` must point to `2 * capacity` writable values (it may be null when
/// `capacity` is 0); `table` and `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn rhg_table_p_positions(
    table: *const RhgTable,
    xy: *mut u64,
    capacity: usize,
    written: *mut usize,
) -> RhgStatus {
    guard(|| {
        non_null!(table, written);
        let ps = &(*table).p_positions;
        *written = ps.len();
        if ps.len() > capacity {
            return fail(RhgStatus::BufferTooSmall, format!("{} pairs needed", ps.len()));
        }
        if !ps.is_empty() {
            non_null!(xy);
            let out = std::slice::from_raw_parts_mut(xy, 2 * ps.len());
            for (pair, p) in out.chunks_exact_mut(2).zip(ps) {
                pair[0] = p.x;
                pair[1] = p.y;
            }
        }
        RhgStatus::Ok
    })
}

/// Maps `(x, y)` in the region of `Q = (p1 q1; p2 q2)` to its canonical
/// coordinates `(a, b)`.
///
/// # Safety
/// `a` and `b` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn rhg_phi_q(
    p1: u64,
    q1: u64,
    p2: u64,
    q2: u64,
    x: u64,
    y: u64,
    a: *mut u64,
    b: *mut u64,
) -> RhgStatus {
    guard(|| {
        non_null!(a, b);
        let c = try_status!(constants(p1, q1, p2, q2));
        let p = try_status!(phi_q(&c, Position::new(x, y)).map_err(from_error));
        *a = p.x;
        *b = p.y;
        RhgStatus::Ok
    })
}

/// Number of terminal positions of the games on `Q = (p1 q1; p2 q2)`.
///
/// # Safety
/// `count` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rhg_terminal_count(p1: u64, q1: u64, p2: u64, q2: u64, count: *mut u64) -> RhgStatus {
    guard(|| {
        non_null!(count);
        let c = try_status!(constants(p1, q1, p2, q2));
        *count = terminal_set(&c).len() as u64;
        RhgStatus::Ok
    })
}

/// The `n`-th Wythoff pair `(floor(n phi), floor(n phi^2))`.
///
/// # Safety
/// `lo` and `hi` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn rhg_beatty(n: u64, lo: *mut u64, hi: *mut u64) -> RhgStatus {
    guard(|| {
        non_null!(lo, hi);
        let pair = try_status!(beatty(n).map_err(from_error));
        *lo = pair.lo;
        *hi = pair.hi;
        RhgStatus::Ok
    })
}

/// Message for the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rhg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
