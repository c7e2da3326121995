//! Static plots of sweep results: an SVG file for reports and a compact
//! ASCII chart for the terminal.
//!
//! Both render the measured (lossy) force in gram-force against endpoint
//! height in millimeters, with the nominal force marked as a horizontal
//! line and the nearly-constant design range (100–300 mm) shaded so the
//! flat region is visible at a glance.

use std::fmt::Write as _;

use crate::statics::SweepResult;
use crate::units::newtons_to_gram_force;

/// Lower edge of the shaded design range, meters.
const DESIGN_RANGE_LOW: f64 = 0.100;
/// Upper edge of the shaded design range, meters.
const DESIGN_RANGE_HIGH: f64 = 0.300;

struct Frame {
    height_min: f64,
    height_max: f64,
    force_max: f64,
}

impl Frame {
    fn from(result: &SweepResult, nominal: f64) -> Self {
        let height_min = result.rows.first().map_or(0.0, |r| r.height);
        let height_max = result.rows.last().map_or(1.0, |r| r.height);
        let mut force_max = newtons_to_gram_force(nominal);
        for row in &result.rows {
            force_max = force_max.max(newtons_to_gram_force(row.force_lossy));
        }
        Self {
            height_min,
            height_max,
            force_max: (force_max * 1.15).max(1.0),
        }
    }
}

/// Render a force–height sweep as a standalone SVG document.
///
/// `nominal` is the design-point force in Newtons (drawn as a dashed line).
pub fn sweep_svg(result: &SweepResult, nominal: f64) -> String {
    const WIDTH: f64 = 720.0;
    const HEIGHT: f64 = 440.0;
    const LEFT: f64 = 70.0;
    const RIGHT: f64 = 690.0;
    const TOP: f64 = 40.0;
    const BOTTOM: f64 = 390.0;

    let frame = Frame::from(result, nominal);
    let span = (frame.height_max - frame.height_min).max(1e-9);
    let x_of = |height: f64| LEFT + (height - frame.height_min) / span * (RIGHT - LEFT);
    let y_of = |gf: f64| BOTTOM - (gf / frame.force_max) * (BOTTOM - TOP);

    let mut svg = String::new();
    let _ = write!(
        svg,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"##
    );
    let _ = write!(
        svg,
        r##"<rect width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>"##
    );
    let _ = write!(
        svg,
        r##"<text x="{:.1}" y="24" font-family="sans-serif" font-size="16" fill="#222222" text-anchor="middle">contact force vs endpoint height</text>"##,
        (LEFT + RIGHT) / 2.0
    );

    // Shaded design range, clipped to the data span.
    let shade_low = DESIGN_RANGE_LOW.max(frame.height_min);
    let shade_high = DESIGN_RANGE_HIGH.min(frame.height_max);
    if shade_high > shade_low {
        let _ = write!(
            svg,
            r##"<rect x="{:.1}" y="{TOP}" width="{:.1}" height="{:.1}" fill="#e8f0fe"/>"##,
            x_of(shade_low),
            x_of(shade_high) - x_of(shade_low),
            BOTTOM - TOP
        );
        let _ = write!(
            svg,
            r##"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="12" fill="#5b7bb5" text-anchor="middle">design range</text>"##,
            (x_of(shade_low) + x_of(shade_high)) / 2.0,
            TOP + 16.0
        );
    }

    // Axes.
    let _ = write!(
        svg,
        r##"<line x1="{LEFT}" y1="{BOTTOM}" x2="{RIGHT}" y2="{BOTTOM}" stroke="#222222" stroke-width="1"/>"##
    );
    let _ = write!(
        svg,
        r##"<line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{BOTTOM}" stroke="#222222" stroke-width="1"/>"##
    );

    // Horizontal ticks every 50 mm of height.
    let mut tick_mm = (frame.height_min * 1000.0 / 50.0).ceil() as i64 * 50;
    while tick_mm as f64 / 1000.0 <= frame.height_max + 1e-9 {
        let x = x_of(tick_mm as f64 / 1000.0);
        let _ = write!(
            svg,
            r##"<line x1="{x:.1}" y1="{BOTTOM}" x2="{x:.1}" y2="{:.1}" stroke="#222222" stroke-width="1"/>"##,
            BOTTOM + 5.0
        );
        let _ = write!(
            svg,
            r##"<text x="{x:.1}" y="{:.1}" font-family="sans-serif" font-size="12" fill="#222222" text-anchor="middle">{tick_mm}</text>"##,
            BOTTOM + 20.0
        );
        tick_mm += 50;
    }
    let _ = write!(
        svg,
        r##"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="13" fill="#222222" text-anchor="middle">endpoint height (mm)</text>"##,
        (LEFT + RIGHT) / 2.0,
        BOTTOM + 42.0
    );

    // Vertical ticks every 50 gf.
    let mut tick_gf = 0i64;
    while (tick_gf as f64) <= frame.force_max {
        let y = y_of(tick_gf as f64);
        let _ = write!(
            svg,
            r##"<line x1="{:.1}" y1="{y:.1}" x2="{LEFT}" y2="{y:.1}" stroke="#222222" stroke-width="1"/>"##,
            LEFT - 5.0
        );
        let _ = write!(
            svg,
            r##"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="12" fill="#222222" text-anchor="end">{tick_gf}</text>"##,
            LEFT - 9.0,
            y + 4.0
        );
        tick_gf += 50;
    }
    let _ = write!(
        svg,
        r##"<text x="20" y="{:.1}" font-family="sans-serif" font-size="13" fill="#222222" text-anchor="middle" transform="rotate(-90 20 {:.1})">contact force (gf)</text>"##,
        (TOP + BOTTOM) / 2.0,
        (TOP + BOTTOM) / 2.0
    );

    // Nominal force line.
    let nominal_gf = newtons_to_gram_force(nominal);
    let y_nominal = y_of(nominal_gf);
    let _ = write!(
        svg,
        r##"<line x1="{LEFT}" y1="{y_nominal:.1}" x2="{RIGHT}" y2="{y_nominal:.1}" stroke="#888888" stroke-width="1" stroke-dasharray="6 4"/>"##
    );
    let _ = write!(
        svg,
        r##"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="12" fill="#888888" text-anchor="end">nominal {:.0} gf</text>"##,
        RIGHT - 4.0,
        y_nominal - 6.0,
        nominal_gf
    );

    // The measured curve.
    let mut points = String::new();
    for row in &result.rows {
        let _ = write!(
            points,
            "{:.1},{:.1} ",
            x_of(row.height),
            y_of(newtons_to_gram_force(row.force_lossy))
        );
    }
    let _ = write!(
        svg,
        r##"<polyline points="{}" fill="none" stroke="#c0392b" stroke-width="2"/>"##,
        points.trim_end()
    );
    for row in &result.rows {
        let _ = write!(
            svg,
            r##"<circle cx="{:.1}" cy="{:.1}" r="3.5" fill="#c0392b"/>"##,
            x_of(row.height),
            y_of(newtons_to_gram_force(row.force_lossy))
        );
    }

    svg.push_str("</svg>\n");
    svg
}

/// Render a force–height sweep as a small ASCII chart for the terminal.
pub fn sweep_ascii(result: &SweepResult, nominal: f64) -> String {
    const ROWS: usize = 12;
    let frame = Frame::from(result, nominal);
    let columns = result.rows.len();
    let row_of = |gf: f64| {
        let clamped = gf.clamp(0.0, frame.force_max);
        // Row 0 is the top of the chart.
        (((frame.force_max - clamped) / frame.force_max) * (ROWS - 1) as f64).round() as usize
    };

    let nominal_row = row_of(newtons_to_gram_force(nominal));
    let mut grid = vec![vec![' '; columns]; ROWS];
    for (column, row) in result.rows.iter().enumerate() {
        let r = row_of(newtons_to_gram_force(row.force_lossy));
        grid[r][column] = '*';
    }

    let mut out = String::new();
    out.push_str("contact force (gf) vs endpoint height (mm)\n");
    for (r, cells) in grid.iter().enumerate() {
        let axis_gf = frame.force_max * (ROWS - 1 - r) as f64 / (ROWS - 1) as f64;
        let _ = write!(out, "{axis_gf:6.0} |");
        for &cell in cells {
            if cell == ' ' && r == nominal_row {
                out.push_str(" v- ");
            } else {
                out.push(' ');
                out.push(cell);
                out.push_str("  ");
            }
        }
        out.push('\n');
    }
    out.push_str("       +");
    out.push_str(&"-".repeat(4 * columns));
    out.push('\n');
    out.push_str("        ");
    for row in &result.rows {
        let _ = write!(out, "{:<4.0}", row.height * 1000.0);
    }
    out.push('\n');
    let _ = writeln!(
        out,
        "        nominal {:.1} gf marked v-",
        newtons_to_gram_force(nominal)
    );
    out
}
