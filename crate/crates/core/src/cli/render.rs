//! Raster (binary PPM) and SVG pictures of outcome tables, origin at the
//! lower left.

use std::fmt::Write as _;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::game::{Region, Window};
use crate::solver::{Outcome, OutcomeTable};

/// Default limit on the number of pixels of one image.
pub const DEFAULT_PIXEL_CAP: u64 = 1 << 26;

pub type Rgb = [u8; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Palette {
    pub p: Rgb,
    pub n: Rgb,
    pub outside: Rgb,
    pub guide: Rgb,
}

impl Default for Palette {
    fn default() -> Self {
        Self { p: [204, 0, 0], n: [255, 255, 255], outside: [224, 224, 224], guide: [0, 0, 204] }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImageFormat {
    Ppm,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    pub window: Window,
    pub cell_size: u32,
    pub palette: Palette,
    pub format: ImageFormat,
    /// Draw the two boundary rays of a bounded region.
    pub draw_bounds: bool,
    pub pixel_cap: u64,
}

impl RenderSpec {
    pub fn new(window: Window, cell_size: u32, format: ImageFormat, draw_bounds: bool) -> Self {
        Self { window, cell_size, palette: Palette::default(), format, draw_bounds, pixel_cap: DEFAULT_PIXEL_CAP }
    }

    fn size(&self) -> Result<(u64, u64)> {
        if self.cell_size == 0 {
            return Err(Error::Parse("cell size must be at least 1".into()));
        }
        let cs = self.cell_size as u64;
        let w = self.window.width().checked_mul(cs);
        let h = self.window.height().checked_mul(cs);
        match (w, h) {
            (Some(w), Some(h)) if w.checked_mul(h).is_some_and(|n| n <= self.pixel_cap) => Ok((w, h)),
            _ => Err(Error::PixelCap {
                needed: w.zip(h).and_then(|(w, h)| w.checked_mul(h)).unwrap_or(u64::MAX),
                cap: self.pixel_cap,
            }),
        }
    }
}

/// Renders `table` in the format chosen by `spec`.
pub fn render(table: &OutcomeTable, spec: &RenderSpec) -> Result<Vec<u8>> {
    match spec.format {
        ImageFormat::Ppm => render_ppm(table, spec),
        ImageFormat::Svg => render_svg(table, spec).map(String::into_bytes),
    }
}

fn check_window(table: &OutcomeTable, spec: &RenderSpec) -> Result<()> {
    let (t, w) = (table.window(), spec.window);
    if w.max_x > t.max_x || w.max_y > t.max_y {
        return Err(Error::Mismatch(format!("render window {w:?} exceeds table window {t:?}")));
    }
    Ok(())
}

/// Boundary ray directions to draw, if any.
fn guides(table: &OutcomeTable, spec: &RenderSpec) -> Vec<(u64, u64)> {
    let g = table.game();
    if !spec.draw_bounds || g.region() != Region::BoundedBQ {
        return Vec::new();
    }
    let c = g.constants();
    vec![(c.p1(), c.q1()), (c.p2(), c.q2())]
}

pub fn render_ppm(table: &OutcomeTable, spec: &RenderSpec) -> Result<Vec<u8>> {
    check_window(table, spec)?;
    let (w, h) = spec.size()?;
    let cs = spec.cell_size as u64;
    let pal = spec.palette;
    let mut pixels = vec![pal.outside; (w * h) as usize];
    // `up` counts rows from the bottom edge
    let mut put = |u: u64, up: u64, rgb: Rgb| {
        pixels[((h - 1 - up) * w + u) as usize] = rgb;
    };
    for (p, o) in table.cells() {
        if !spec.window.contains(p) {
            continue;
        }
        let rgb = if o == Outcome::P { pal.p } else { pal.n };
        for du in 0..cs {
            for dv in 0..cs {
                put(p.x * cs + du, p.y * cs + dv, rgb);
            }
        }
    }
    // Lines through the cell centres of the origin and of multiples of
    // (dx, dy), stepped one pixel at a time along the dominant axis.
    for (dx, dy) in guides(table, spec) {
        let (major, minor, major_len, minor_len) = if dx >= dy { (dx, dy, w, h) } else { (dy, dx, h, w) };
        let (cs, major, minor) = (cs as i64, major as i64, minor as i64);
        for s in 0..major_len as i64 {
            // doubled offsets from the origin cell centre, in units of cs
            let along = 2 * s + 1 - cs;
            let across = Integer::div_floor(&(along * minor), &major);
            let t = Integer::div_floor(&(across + cs), &2);
            if (0..minor_len as i64).contains(&t) {
                let (u, up) = if dx >= dy { (s, t) } else { (t, s) };
                put(u as u64, up as u64, pal.guide);
            }
        }
    }
    let mut out = format!("P6\n{w} {h}\n255\n").into_bytes();
    out.reserve(pixels.len() * 3);
    for px in pixels {
        out.extend_from_slice(&px);
    }
    Ok(out)
}

fn hex(rgb: Rgb) -> String {
    format!("#{:02x}{:02x}{:02x}", rgb[0], rgb[1], rgb[2])
}

pub fn render_svg(table: &OutcomeTable, spec: &RenderSpec) -> Result<String> {
    check_window(table, spec)?;
    let (w, h) = spec.size()?;
    let cs = spec.cell_size as u64;
    let pal = spec.palette;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" shape-rendering="crispEdges">"#
    );
    let _ = writeln!(s, r#"<rect width="{w}" height="{h}" fill="{}"/>"#, hex(pal.outside));
    for x in 0..=spec.window.max_x {
        let Some((lo, hi)) = table.column_range(x) else { continue };
        let hi = hi.min(spec.window.max_y);
        if lo > hi {
            continue;
        }
        let _ = writeln!(
            s,
            r#"<rect x="{}" y="{}" width="{cs}" height="{}" fill="{}"/>"#,
            x * cs,
            h - (hi + 1) * cs,
            (hi - lo + 1) * cs,
            hex(pal.n)
        );
    }
    let _ = writeln!(s, r#"<g fill="{}">"#, hex(pal.p));
    for p in table.p_positions() {
        if spec.window.contains(p) {
            let _ = writeln!(s, r#"<rect x="{}" y="{}" width="{cs}" height="{cs}"/>"#, p.x * cs, h - (p.y + 1) * cs);
        }
    }
    let _ = writeln!(s, "</g>");
    for (dx, dy) in guides(table, spec) {
        // run from the origin cell centre to the window edge
        let (mx, my) = (spec.window.max_x as f64, spec.window.max_y as f64);
        let t = match (dx, dy) {
            (0, _) => my / dy as f64,
            (_, 0) => mx / dx as f64,
            _ => (mx / dx as f64).min(my / dy as f64),
        };
        let half = cs as f64 / 2.0;
        let (x2, y2) = (t * dx as f64 * cs as f64 + half, t * dy as f64 * cs as f64 + half);
        let _ = writeln!(
            s,
            r#"<line x1="{half:.3}" y1="{:.3}" x2="{x2:.3}" y2="{:.3}" stroke="{}" stroke-width="1"/>"#,
            h as f64 - half,
            h as f64 - y2,
            hex(pal.guide)
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{GameConstants, GameDef, MoveSet};
    use crate::solver::solve;

    fn pixel(img: &[u8], w: usize, h: usize, u: usize, up: usize) -> Rgb {
        let header = format!("P6\n{w} {h}\n255\n").len();
        let i = header + ((h - 1 - up) * w + u) * 3;
        [img[i], img[i + 1], img[i + 2]]
    }

    #[test]
    fn nim_diagonal_is_red() {
        let t = solve(&GameDef::canonical(MoveSet::nim()), Window::square(9)).unwrap();
        let spec = RenderSpec::new(Window::square(9), 3, ImageFormat::Ppm, false);
        let img = render_ppm(&t, &spec).unwrap();
        let pal = Palette::default();
        assert!(img.starts_with(b"P6\n30 30\n255\n"));
        for x in 0..10 {
            for y in 0..10 {
                let want = if x == y { pal.p } else { pal.n };
                assert_eq!(pixel(&img, 30, 30, x * 3 + 1, y * 3 + 1), want);
            }
        }
        assert_eq!(render_ppm(&t, &spec).unwrap(), img);
    }

    #[test]
    fn bounded_region_and_guides() {
        let c = GameConstants::new(1, 1, 0, 1).unwrap();
        let t = solve(&GameDef::q_subtraction(c, MoveSet::nim()), Window::square(9)).unwrap();
        let pal = Palette::default();
        let spec = RenderSpec::new(Window::square(9), 1, ImageFormat::Ppm, false);
        let img = render_ppm(&t, &spec).unwrap();
        // x > y is outside the region
        assert_eq!(pixel(&img, 10, 10, 5, 2), pal.outside);
        assert_eq!(pixel(&img, 10, 10, 2, 4), pal.p);
        let spec = RenderSpec { draw_bounds: true, ..spec };
        let img = render_ppm(&t, &spec).unwrap();
        // the diagonal and the y axis
        for k in 0..10 {
            assert_eq!(pixel(&img, 10, 10, k, k), pal.guide);
            assert_eq!(pixel(&img, 10, 10, 0, k), pal.guide);
        }
        let svg = render_svg(&t, &RenderSpec { format: ImageFormat::Svg, ..spec }).unwrap();
        assert_eq!(svg.matches("<line").count(), 2);
        assert_eq!(svg.matches("<rect").count(), 1 + 10 + t.p_positions().len());
    }

    #[test]
    fn caps_and_windows() {
        let t = solve(&GameDef::canonical(MoveSet::nim()), Window::square(9)).unwrap();
        let mut spec = RenderSpec::new(Window::square(9), 4, ImageFormat::Ppm, false);
        spec.pixel_cap = 100;
        assert!(matches!(render(&t, &spec), Err(Error::PixelCap { needed: 1600, cap: 100 })));
        let spec = RenderSpec::new(Window::square(10), 1, ImageFormat::Ppm, false);
        assert!(matches!(render(&t, &spec), Err(Error::Mismatch(_))));
        let spec = RenderSpec::new(Window::square(9), 0, ImageFormat::Svg, false);
        assert!(render(&t, &spec).is_err());
    }
}
