use thiserror::Error;

use crate::game::Position;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid game constants: {0}")]
    InvalidConstants(String),

    #[error("invalid move set: {0}")]
    InvalidMoveSet(String),

    #[error("invalid game definition: {0}")]
    InvalidGame(String),

    #[error("position ({}, {}) is outside the region", .0.x, .0.y)]
    OutOfRegion(Position),

    #[error("arithmetic headroom exceeded: {0}")]
    Overflow(String),

    #[error("capacity exceeded: need {needed} bytes, cap is {cap} bytes")]
    Capacity { needed: u64, cap: u64 },

    #[error("pixel cap exceeded: image needs {needed} pixels, cap is {cap}")]
    PixelCap { needed: u64, cap: u64 },

    #[error("unsupported move set: {0}")]
    UnsupportedMoveSet(String),

    #[error("insufficient data: {usable} usable positions, need at least {required}")]
    InsufficientData { usable: usize, required: usize },

    #[error("window or region mismatch: {0}")]
    Mismatch(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
