//! SVG drawings of chord diagrams.
//!
//! Fixed 400x400 canvas. Positions are equally spaced on the circle,
//! position 0 at the top, increasing counterclockwise.

use std::fmt::Write;

use arcnum::{ChordDiagram, ChordId};

const SIZE: f64 = 400.0;
const CENTER: f64 = SIZE / 2.0;
const RADIUS: f64 = 150.0;
const TICK: f64 = 12.0;
const WITNESS_COLOR: &str = "#d62728";

#[derive(Debug, Default, Clone)]
pub struct Overlays<'a> {
    pub cuts: Option<&'a [usize]>,
    pub witness: Option<&'a [ChordId]>,
}

fn point(angle_deg: f64, radius: f64) -> (f64, f64) {
    let theta = angle_deg.to_radians();
    (CENTER + radius * theta.cos(), CENTER - radius * theta.sin())
}

fn position_angle(p: f64, size: usize) -> f64 {
    90.0 + 360.0 * p / size as f64
}

pub fn render_svg(diagram: &ChordDiagram, overlays: &Overlays<'_>) -> String {
    let size = diagram.num_positions();
    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(
        svg,
        r#"  <circle class="circle" cx="{CENTER}" cy="{CENTER}" r="{RADIUS}" fill="none" stroke="black" stroke-width="1.5"/>"#
    )
    .unwrap();

    let highlighted = |c: ChordId| overlays.witness.is_some_and(|w| w.contains(&c));
    for c in diagram.chords() {
        let (p, q) = diagram.chord_ends(c);
        let (x1, y1) = point(position_angle(p as f64, size), RADIUS);
        let (x2, y2) = point(position_angle(q as f64, size), RADIUS);
        let (class, stroke, width) = if highlighted(c) {
            ("chord witness", WITNESS_COLOR, 2.5)
        } else {
            ("chord", "#555555", 1.2)
        };
        writeln!(
            svg,
            r#"  <line class="{class}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{stroke}" stroke-width="{width}"/>"#
        )
        .unwrap();
    }

    for p in 0..size {
        let angle = position_angle(p as f64, size);
        let (x, y) = point(angle, RADIUS);
        writeln!(
            svg,
            r#"  <circle class="position" cx="{x:.2}" cy="{y:.2}" r="3.5" fill="black"/>"#
        )
        .unwrap();
        let (lx, ly) = point(angle, RADIUS + 18.0);
        writeln!(
            svg,
            r#"  <text class="label" x="{lx:.2}" y="{ly:.2}" font-family="sans-serif" font-size="12" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
            diagram.label(diagram.chord_at(p))
        )
        .unwrap();
    }

    if size > 0 {
        for &g in overlays.cuts.unwrap_or_default() {
            let angle = position_angle(g as f64 + 0.5, size);
            let (x1, y1) = point(angle, RADIUS - TICK);
            let (x2, y2) = point(angle, RADIUS + TICK);
            writeln!(
                svg,
                r##"  <line class="cut" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#1f77b4" stroke-width="3"/>"##
            )
            .unwrap();
        }
    }
    svg.push_str("</svg>\n");
    svg
}
