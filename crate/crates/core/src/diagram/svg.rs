//! Schematic SVG of a symmetric union: the partial fraction's twist boxes on
//! the left, their mirror images (negated, reversed) on the right, and the
//! inserted twist on a dashed vertical axis. No strands are drawn.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use crate::scalar::Scalar;
use crate::symunion::SymmetricUnionPresentation;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvgLayout {
    pub width: u32,
    pub min_height: u32,
    pub box_width: u32,
    pub box_height: u32,
    pub gap: u32,
    pub boxes_per_row: usize,
}

impl Default for SvgLayout {
    fn default() -> Self {
        SvgLayout {
            width: 800,
            min_height: 400,
            box_width: 60,
            box_height: 40,
            gap: 20,
            boxes_per_row: 4,
        }
    }
}

struct TwistBox {
    x: u32,
    y: u32,
    label: String,
    class: &'static str,
}

fn layout_boxes<T: Scalar>(
    pres: &SymmetricUnionPresentation<T>,
    lay: &SvgLayout,
) -> (Vec<TwistBox>, u32) {
    let entries = pres.partial_cf.entries();
    let per_row = lay.boxes_per_row.max(1);
    let rows = entries.len().div_ceil(per_row).max(1) as u32;
    let pitch_x = lay.box_width + lay.gap;
    let pitch_y = lay.box_height + lay.gap;
    let top = 60;
    let height = lay.min_height.max(top + rows * pitch_y + 40);
    let axis = lay.width / 2;
    // left block ends one gap plus half a box before the axis
    let left_edge = axis - lay.box_width / 2 - lay.gap - per_row as u32 * pitch_x + lay.gap;

    let mut boxes = Vec::with_capacity(2 * entries.len() + 1);
    for (i, a) in entries.iter().enumerate() {
        let (row, col) = ((i / per_row) as u32, (i % per_row) as u32);
        let x = left_edge + col * pitch_x;
        let y = top + row * pitch_y;
        boxes.push(TwistBox {
            x,
            y,
            label: a.to_string(),
            class: "twist partial",
        });
        boxes.push(TwistBox {
            x: lay.width - x - lay.box_width,
            y,
            label: (-a.clone()).to_string(),
            class: "twist mirror",
        });
    }
    let epsilon = match pres.insertion.epsilon {
        Some(e) => format!("ε={e}"),
        None => "ε".to_string(),
    };
    boxes.push(TwistBox {
        x: axis - lay.box_width / 2,
        y: top + rows * pitch_y - lay.gap / 2,
        label: epsilon,
        class: "twist axis",
    });
    (boxes, height)
}

pub fn render_svg<T: Scalar>(pres: &SymmetricUnionPresentation<T>) -> String {
    let lay = SvgLayout::default();
    let (boxes, height) = layout_boxes(pres, &lay);
    let axis = lay.width / 2;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{height}" viewBox="0 0 {w} {height}">"#,
        w = lay.width
    );
    let _ = writeln!(
        out,
        r#"  <title>{} as a symmetric union over {} ({})</title>"#,
        pres.result, pres.partial_knot, pres.provenance.tag
    );
    let _ = writeln!(
        out,
        r#"  <line class="axis" x1="{axis}" y1="20" x2="{axis}" y2="{}" stroke="black" stroke-dasharray="6 4"/>"#,
        height - 20
    );
    for b in &boxes {
        let _ = writeln!(out, r#"  <g class="{}">"#, b.class);
        let _ = writeln!(
            out,
            r#"    <rect x="{}" y="{}" width="{}" height="{}" fill="white" stroke="black"/>"#,
            b.x, b.y, lay.box_width, lay.box_height
        );
        let _ = writeln!(
            out,
            r#"    <text class="label" x="{}" y="{}" text-anchor="middle" dominant-baseline="middle" font-family="sans-serif" font-size="16">{}</text>"#,
            b.x + lay.box_width / 2,
            b.y + lay.box_height / 2,
            b.label
        );
        let _ = writeln!(out, "  </g>");
    }
    out.push_str("</svg>\n");
    out
}

pub fn write_svg<T: Scalar>(pres: &SymmetricUnionPresentation<T>, path: &Path) -> io::Result<()> {
    std::fs::write(path, render_svg(pres))
}
