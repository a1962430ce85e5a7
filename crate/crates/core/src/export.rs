//! CSV and SVG export of integer point sets.
//!
//! CSV is the interchange format: header `x,y`, one signed decimal pair per
//! line, LF endings, already in the set's canonical order — identical
//! inputs always serialize to identical bytes.
//!
//! SVG is presentation-only. Plots use mathematical orientation (y grows
//! upward; internally cy = −y) and the view box always includes the
//! origin, so a full set — symmetric by construction — comes out centered
//! on the origin while a quadrant-only slice sits against its lower-left
//! corner. `OneToOne` maps one lattice unit to one pixel and sizes the
//! canvas from the data; `Fit` scales the data into a fixed canvas,
//! preserving aspect ratio.

use std::fmt::Write as _;
use std::io::{self, BufWriter, Write};

use crate::error::{Error, Result};

/// Serializes points as CSV.
pub fn points_csv_string(points: &[(i64, i64)]) -> String {
    let mut out = String::with_capacity(4 + points.len() * 12);
    out.push_str("x,y\n");
    for &(x, y) in points {
        let _ = writeln!(out, "{x},{y}");
    }
    out
}

/// Streams points as CSV; the writer is buffered internally.
pub fn write_points_csv<W: Write>(writer: W, points: &[(i64, i64)]) -> io::Result<()> {
    let mut writer = BufWriter::new(writer);
    writer.write_all(b"x,y\n")?;
    for &(x, y) in points {
        writeln!(writer, "{x},{y}")?;
    }
    writer.flush()
}

/// How lattice units map to pixels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScaleMode {
    /// Scale the data into the canvas, preserving aspect ratio.
    #[default]
    Fit,
    /// One lattice unit per pixel; the data dictates the canvas size.
    OneToOne,
}

/// Rendering parameters for [`render_points_svg`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlotConfig {
    /// Canvas width in pixels. `Fit` defaults to 1000; `OneToOne` derives
    /// the width from the data unless a larger one is requested here.
    pub width: Option<u32>,
    /// Canvas height in pixels; same rules as `width`.
    pub height: Option<u32>,
    /// Marker radius in pixels.
    pub point_radius: f64,
    /// Unit-to-pixel mapping.
    pub scale: ScaleMode,
    /// Draw the coordinate axes under the points.
    pub axes: bool,
}

impl Default for PlotConfig {
    fn default() -> Self {
        Self {
            width: None,
            height: None,
            point_radius: 1.0,
            scale: ScaleMode::Fit,
            axes: false,
        }
    }
}

/// Renders points as a standalone SVG 1.1 document with one `circle` per
/// point. Output bytes depend only on the inputs.
pub fn render_points_svg(points: &[(i64, i64)], config: &PlotConfig) -> Result<String> {
    if !(config.point_radius > 0.0 && config.point_radius.is_finite()) {
        return Err(Error::OutOfRange {
            what: format!("point radius must be positive, got {}", config.point_radius),
        });
    }
    if config.width == Some(0) || config.height == Some(0) {
        return Err(Error::OutOfRange {
            what: "canvas dimensions must be positive".to_string(),
        });
    }

    // Bounding box over the points and the origin, in math coordinates.
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (0i64, 0i64, 0i64, 0i64);
    for &(x, y) in points {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let pad = config.point_radius.ceil() as i64 + 1;

    // SVG user coordinates: u = x, v = −y.
    let mut vb_u = min_x - pad;
    let mut vb_v = -max_y - pad;
    let mut vb_w = (max_x - min_x) + 2 * pad;
    let mut vb_h = (max_y - min_y) + 2 * pad;

    let (canvas_w, canvas_h, units_per_px) = match config.scale {
        ScaleMode::OneToOne => {
            if let Some(req) = config.width {
                let req = i64::from(req);
                if req < vb_w {
                    return Err(Error::OutOfRange {
                        what: format!("1:1 scale needs width >= {vb_w}px here, got {req}"),
                    });
                }
                vb_u -= (req - vb_w) / 2;
                vb_w = req;
            }
            if let Some(req) = config.height {
                let req = i64::from(req);
                if req < vb_h {
                    return Err(Error::OutOfRange {
                        what: format!("1:1 scale needs height >= {vb_h}px here, got {req}"),
                    });
                }
                vb_v -= (req - vb_h) / 2;
                vb_h = req;
            }
            (vb_w, vb_h, 1.0)
        }
        ScaleMode::Fit => {
            let canvas_w = i64::from(config.width.unwrap_or(1000));
            let canvas_h = i64::from(config.height.unwrap_or(1000));
            let units_per_px = f64::max(
                vb_w as f64 / canvas_w as f64,
                vb_h as f64 / canvas_h as f64,
            );
            (canvas_w, canvas_h, units_per_px)
        }
    };

    let radius = config.point_radius * units_per_px;
    let mut svg = String::with_capacity(256 + points.len() * 40);
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{canvas_w}\" height=\"{canvas_h}\" viewBox=\"{vb_u} {vb_v} {vb_w} {vb_h}\">",
    );
    let _ = writeln!(
        svg,
        "<rect x=\"{vb_u}\" y=\"{vb_v}\" width=\"{vb_w}\" height=\"{vb_h}\" fill=\"white\"/>",
    );
    if config.axes {
        let stroke = units_per_px;
        let _ = writeln!(
            svg,
            "<line x1=\"{vb_u}\" y1=\"0\" x2=\"{}\" y2=\"0\" stroke=\"#999999\" stroke-width=\"{stroke}\"/>",
            vb_u + vb_w,
        );
        let _ = writeln!(
            svg,
            "<line x1=\"0\" y1=\"{vb_v}\" x2=\"0\" y2=\"{}\" stroke=\"#999999\" stroke-width=\"{stroke}\"/>",
            vb_v + vb_h,
        );
    }
    for &(x, y) in points {
        let _ = writeln!(svg, "<circle cx=\"{x}\" cy=\"{}\" r=\"{radius}\" fill=\"black\"/>", -y);
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
