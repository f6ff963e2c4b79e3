//! SVG drawings of a domain, points, spokes and balls.
//!
//! The domain's bounding box is fit into an 800x800 canvas with a 5% margin
//! and the y axis pointing up.

use std::fmt::Write;

use crate::balls::{spokes, MetricBall};
use crate::error::Result;
use crate::geom::{ClipResult, ConvexPolygon, Point2};
use crate::metrics::MetricKind;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 0.05 * SIZE;

pub fn color(kind: MetricKind) -> &'static str {
    match kind {
        MetricKind::Hilbert => "red",
        MetricKind::Funk => "blue",
        MetricKind::ReverseFunk => "green",
        MetricKind::Thompson => "purple",
    }
}

struct View {
    min: Point2,
    scale: f64,
    offset: Point2,
}

impl View {
    fn fit(omega: &ConvexPolygon) -> Self {
        let v = omega.vertices();
        let (mut lo, mut hi) = (v[0], v[0]);
        for p in v {
            lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        let (w, h) = (hi.x - lo.x, hi.y - lo.y);
        let inner = SIZE - 2.0 * MARGIN;
        let scale = inner / w.max(h);
        // Center the shorter side.
        let offset = Point2::new(
            MARGIN + 0.5 * (inner - w * scale),
            MARGIN + 0.5 * (inner - h * scale),
        );
        Self {
            min: lo,
            scale,
            offset,
        }
    }

    fn map(&self, p: Point2) -> (f64, f64) {
        let x = self.offset.x + (p.x - self.min.x) * self.scale;
        let y = self.offset.y + (p.y - self.min.y) * self.scale;
        (x, SIZE - y)
    }
}

/// A picture under construction.
pub struct Drawing {
    view: View,
    omega: ConvexPolygon,
    body: String,
}

impl Drawing {
    pub fn new(omega: &ConvexPolygon) -> Self {
        let mut d = Self {
            view: View::fit(omega),
            omega: omega.clone(),
            body: String::new(),
        };
        d.path(omega.vertices(), "black", 2.0, true);
        d
    }

    fn path(&mut self, pts: &[Point2], stroke: &str, width: f64, closed: bool) {
        let mut data = String::new();
        for (i, &p) in pts.iter().enumerate() {
            let (x, y) = self.view.map(p);
            let cmd = if i == 0 { 'M' } else { 'L' };
            let _ = write!(data, "{cmd}{x:.3},{y:.3} ");
        }
        if closed {
            data.push('Z');
        }
        let _ = writeln!(
            self.body,
            r#"  <path d="{}" fill="none" stroke="{stroke}" stroke-width="{width}"/>"#,
            data.trim_end()
        );
    }

    fn line(&mut self, a: Point2, b: Point2, stroke: &str) {
        let (x1, y1) = self.view.map(a);
        let (x2, y2) = self.view.map(b);
        let _ = writeln!(
            self.body,
            r#"  <line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{stroke}" stroke-width="0.5"/>"#
        );
    }

    pub fn point(&mut self, p: Point2) -> &mut Self {
        let (x, y) = self.view.map(p);
        let _ = writeln!(
            self.body,
            r#"  <circle cx="{x:.3}" cy="{y:.3}" r="3" fill="black"/>"#
        );
        self
    }

    pub fn points(&mut self, pts: &[Point2]) -> &mut Self {
        for &p in pts {
            self.point(p);
        }
        self
    }

    /// Spokes of `omega` through `p`, as thin gray lines.
    pub fn spokes(&mut self, p: Point2) -> Result<&mut Self> {
        for s in spokes(&self.omega, p)? {
            self.line(s.chord.backward.point, s.chord.forward.point, "gray");
        }
        Ok(self)
    }

    /// Outline of a ball in the color of its metric; a zero-radius ball is
    /// drawn as its center.
    pub fn ball(&mut self, ball: &MetricBall) -> &mut Self {
        let stroke = color(ball.kind);
        match &ball.shape {
            ClipResult::Empty => {}
            ClipResult::Point(p) => {
                self.point(*p);
            }
            ClipResult::Segment(s) => self.path(&[s.a, s.b], stroke, 1.5, false),
            ClipResult::Polygon(poly) => self.path(poly.vertices(), stroke, 1.5, true),
        }
        self
    }

    pub fn finish(&self) -> String {
        format!(
            concat!(
                "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" ",
                "width=\"{s}\" height=\"{s}\" viewBox=\"0 0 {s} {s}\">\n",
                "  <rect width=\"{s}\" height=\"{s}\" fill=\"white\"/>\n",
                "{body}</svg>\n"
            ),
            s = SIZE,
            body = self.body
        )
    }
}
