//! The standard picture set: one image per named game.

use super::builtin::parse_game;
use super::render::{render, ImageFormat, RenderSpec};
use crate::error::Result;
use crate::game::Window;
use crate::solver::{solve_auto, SolveConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Figure {
    /// File stem of the rendered image.
    pub name: &'static str,
    pub game: &'static str,
    pub window: u64,
    pub cell_size: u32,
    pub bounds: bool,
}

pub const FIGURES: &[Figure] = &[
    Figure { name: "nim", game: "nim", window: 30, cell_size: 8, bounds: false },
    Figure { name: "wythoff", game: "wythoff", window: 30, cell_size: 8, bounds: false },
    Figure { name: "rn-7-2-1-10", game: "rn:7,2,1,10", window: 200, cell_size: 1, bounds: true },
    Figure { name: "rw-7-2-1-10", game: "rw:7,2,1,10", window: 200, cell_size: 1, bounds: true },
    Figure { name: "rn-1-1-0-1", game: "rn:1,1,0,1", window: 40, cell_size: 6, bounds: true },
    Figure { name: "rw-1-1-0-1", game: "rw:1,1,0,1", window: 40, cell_size: 6, bounds: true },
    Figure { name: "ext-a", game: "ext-a", window: 200, cell_size: 1, bounds: true },
    Figure { name: "ext-b", game: "ext-b", window: 200, cell_size: 1, bounds: true },
    Figure { name: "ext-c", game: "ext-c", window: 200, cell_size: 1, bounds: true },
];

impl Figure {
    pub fn render(&self, format: ImageFormat) -> Result<Vec<u8>> {
        let game = parse_game(self.game)?;
        let window = Window::square(self.window);
        let table = solve_auto(&game, window, &SolveConfig::default())?;
        render(&table, &RenderSpec::new(window, self.cell_size, format, self.bounds))
    }

    pub fn file_name(&self, format: ImageFormat) -> String {
        match format {
            ImageFormat::Ppm => format!("{}.ppm", self.name),
            ImageFormat::Svg => format!("{}.svg", self.name),
        }
    }
}
