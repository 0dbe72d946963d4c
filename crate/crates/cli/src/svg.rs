//! Static SVG plots: one polyline per selected compartment, axes with
//! ticks, and a legend. Output depends only on the inputs, so repeated
//! runs are byte-identical.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};

use infowave_core::analysis::Compartment;
use infowave_core::solvers::Trajectory;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 150.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 50.0;
/// Polylines are thinned to at most this many points.
const MAX_POINTS: usize = 2000;

const PALETTE: [&str; 7] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf",
];

/// Renders the selected compartments of a trajectory as an SVG string.
pub fn plot_svg_string(trajectory: &Trajectory, selection: &[Compartment]) -> Result<String> {
    if selection.is_empty() {
        bail!("plot selection must name at least one compartment");
    }
    if trajectory.states.is_empty() {
        bail!("trajectory holds no nodes");
    }
    let t_max = trajectory.grid.t_end().max(f64::MIN_POSITIVE);
    let mut y_max = 0.0f64;
    for state in &trajectory.states {
        let x = state.as_array();
        for compartment in selection {
            y_max = y_max.max(x[compartment.index()]);
        }
    }
    if y_max <= 0.0 {
        y_max = 1.0;
    }
    y_max *= 1.05;

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let to_x = |t: f64| MARGIN_LEFT + t / t_max * plot_w;
    let to_y = |v: f64| MARGIN_TOP + (1.0 - v / y_max) * plot_h;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="monospace" font-size="12">"#
    );
    let _ = writeln!(
        out,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );

    // axes
    let x0 = MARGIN_LEFT;
    let y0 = MARGIN_TOP + plot_h;
    let _ = writeln!(
        out,
        r#"<line x1="{x0:.2}" y1="{y0:.2}" x2="{:.2}" y2="{y0:.2}" stroke="black"/>"#,
        x0 + plot_w
    );
    let _ = writeln!(
        out,
        r#"<line x1="{x0:.2}" y1="{y0:.2}" x2="{x0:.2}" y2="{MARGIN_TOP:.2}" stroke="black"/>"#
    );
    for k in 0..=5 {
        let frac = k as f64 / 5.0;
        let xt = to_x(frac * t_max);
        let _ = writeln!(
            out,
            r#"<line x1="{xt:.2}" y1="{y0:.2}" x2="{xt:.2}" y2="{:.2}" stroke="black"/>"#,
            y0 + 5.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{xt:.2}" y="{:.2}" text-anchor="middle">{:.1}</text>"#,
            y0 + 20.0,
            frac * t_max
        );
        let yt = to_y(frac * y_max);
        let _ = writeln!(
            out,
            r#"<line x1="{:.2}" y1="{yt:.2}" x2="{x0:.2}" y2="{yt:.2}" stroke="black"/>"#,
            x0 - 5.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{:.3}</text>"#,
            x0 - 8.0,
            yt + 4.0,
            frac * y_max
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">t</text>"#,
        x0 + plot_w / 2.0,
        y0 + 38.0
    );

    let stride = (trajectory.states.len() / MAX_POINTS).max(1);
    for (slot, compartment) in selection.iter().enumerate() {
        let color = PALETTE[compartment.index()];
        let mut points = String::new();
        let last = trajectory.states.len() - 1;
        for (k, (t, state)) in trajectory.nodes().enumerate() {
            if k % stride != 0 && k != last {
                continue;
            }
            let _ = write!(
                points,
                "{:.2},{:.2} ",
                to_x(t),
                to_y(state.as_array()[compartment.index()])
            );
        }
        let _ = writeln!(
            out,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
            points.trim_end()
        );
        // legend entry
        let ly = MARGIN_TOP + 18.0 * slot as f64 + 10.0;
        let lx = MARGIN_LEFT + plot_w + 12.0;
        let _ = writeln!(
            out,
            r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="3"/>"#,
            lx + 20.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}">{}</text>"#,
            lx + 26.0,
            ly + 4.0,
            compartment.label()
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

pub fn emit_plot_svg(
    trajectory: &Trajectory,
    path: &Path,
    selection: &[Compartment],
) -> Result<()> {
    let text = plot_svg_string(trajectory, selection)?;
    std::fs::write(path, text).with_context(|| format!("writing SVG {}", path.display()))
}
