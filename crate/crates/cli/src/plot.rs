//! Static SVG plot: one horizontal bar pair (observed, predicted) per
//! observation, with the fitted coefficients annotated. Pixel placement is
//! presentation only and carries no numeric contract.

use crate::pipeline::AnalysisOutcome;
use std::fmt::Write as _;

const WIDTH: f64 = 760.0;
const ROW_HEIGHT: f64 = 64.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 30.0;
const MARGIN_TOP: f64 = 70.0;

pub fn render(outcome: &AnalysisOutcome) -> String {
    let n = outcome.comparisons.len();
    let height = MARGIN_TOP + ROW_HEIGHT * n as f64 + 50.0;

    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for c in &outcome.comparisons {
        lo = lo.min(c.observed.lower()).min(c.predicted.lower());
        hi = hi.max(c.observed.upper()).max(c.predicted.upper());
    }
    let span = (hi - lo).max(1e-9);
    let plot_width = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let x = |v: f64| MARGIN_LEFT + (v - lo) / span * plot_width;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" viewBox="0 0 {WIDTH} {height}">"##
    );
    let _ = writeln!(
        s,
        r##"<rect x="0" y="0" width="{WIDTH}" height="{height}" fill="white"/>"##
    );
    let _ = writeln!(
        s,
        r##"<text x="{MARGIN_LEFT}" y="24" font-family="sans-serif" font-size="16">Observed vs predicted intervals</text>"##
    );
    let coefs = outcome
        .fit
        .coefficients
        .iter()
        .enumerate()
        .map(|(j, c)| format!("A{} = [{:.4}, {:.4}]", j + 1, c.lower, c.upper))
        .collect::<Vec<_>>()
        .join("   ");
    let _ = writeln!(
        s,
        r##"<text x="{MARGIN_LEFT}" y="44" font-family="sans-serif" font-size="12" fill="#444">{coefs}</text>"##
    );

    for (i, c) in outcome.comparisons.iter().enumerate() {
        let top = MARGIN_TOP + ROW_HEIGHT * i as f64;
        let obs_y = top + 10.0;
        let pred_y = top + 32.0;
        let _ = writeln!(
            s,
            r##"<text x="10" y="{}" font-family="sans-serif" font-size="13">{}</text>"##,
            top + 28.0,
            c.label
        );
        let _ = writeln!(
            s,
            r##"<rect x="{:.2}" y="{obs_y}" width="{:.2}" height="14" fill="#4878a8"/>"##,
            x(c.observed.lower()),
            (x(c.observed.upper()) - x(c.observed.lower())).max(1.0),
        );
        let _ = writeln!(
            s,
            r##"<rect x="{:.2}" y="{pred_y}" width="{:.2}" height="14" fill="none" stroke="#d2691e" stroke-width="2"/>"##,
            x(c.predicted.lower()),
            (x(c.predicted.upper()) - x(c.predicted.lower())).max(1.0),
        );
    }

    // Axis line and end labels.
    let axis_y = MARGIN_TOP + ROW_HEIGHT * n as f64 + 10.0;
    let _ = writeln!(
        s,
        r##"<line x1="{MARGIN_LEFT}" y1="{axis_y}" x2="{:.2}" y2="{axis_y}" stroke="#888"/>"##,
        WIDTH - MARGIN_RIGHT
    );
    let _ = writeln!(
        s,
        r##"<text x="{MARGIN_LEFT}" y="{}" font-family="sans-serif" font-size="11" fill="#444">{lo:.2}</text>"##,
        axis_y + 16.0
    );
    let _ = writeln!(
        s,
        r##"<text x="{:.2}" y="{}" font-family="sans-serif" font-size="11" fill="#444" text-anchor="end">{hi:.2}</text>"##,
        WIDTH - MARGIN_RIGHT,
        axis_y + 16.0
    );
    let _ = writeln!(
        s,
        r##"<text x="{}" y="{}" font-family="sans-serif" font-size="11" fill="#4878a8">filled: observed</text>"##,
        MARGIN_LEFT,
        axis_y + 34.0
    );
    let _ = writeln!(
        s,
        r##"<text x="{}" y="{}" font-family="sans-serif" font-size="11" fill="#d2691e">outline: predicted</text>"##,
        MARGIN_LEFT + 140.0,
        axis_y + 34.0
    );
    let _ = writeln!(s, "</svg>");
    s
}
