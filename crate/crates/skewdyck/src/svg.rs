//! Static SVG drawing of a path: one `<line>` per step, red steps in red.

use std::fmt::Write;

use skewdyck_core::path::{SkewPath, Step};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorMap {
    pub up: String,
    pub down_black: String,
    pub down_red: String,
}

impl Default for ColorMap {
    fn default() -> Self {
        ColorMap {
            up: "black".into(),
            down_black: "black".into(),
            down_red: "red".into(),
        }
    }
}

impl ColorMap {
    fn stroke(&self, step: Step) -> &str {
        match step {
            Step::Up => &self.up,
            Step::DownBlack => &self.down_black,
            Step::DownRed => &self.down_red,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SvgOptions {
    /// Pixels per lattice unit. Must be positive.
    pub unit_px: u32,
    pub colors: ColorMap,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            unit_px: 20,
            colors: ColorMap::default(),
        }
    }
}

/// Renders `path` as a standalone SVG 1.1 document. Output depends only on
/// the inputs.
pub fn render_svg(path: &SkewPath, options: &SvgOptions) -> String {
    let unit = options.unit_px.max(1) as usize;
    let margin = unit;
    let width = path.len().max(1) * unit + 2 * margin;
    let height = path.max_level().max(1) * unit + 2 * margin;
    let top = path.max_level().max(1);
    let x = |i: usize| margin + i * unit;
    let y = |level: usize| margin + (top - level) * unit;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(
        out,
        "  <line x1=\"0\" y1=\"{0}\" x2=\"{width}\" y2=\"{0}\" stroke=\"#cccccc\" \
         stroke-width=\"1\" class=\"axis\"/>",
        y(0)
    );
    let levels = path.levels();
    for (i, &step) in path.steps().iter().enumerate() {
        let _ = writeln!(
            out,
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" \
             stroke-width=\"2\" class=\"step\"/>",
            x(i),
            y(levels[i]),
            x(i + 1),
            y(levels[i + 1]),
            options.colors.stroke(step)
        );
    }
    out.push_str("</svg>\n");
    out
}
