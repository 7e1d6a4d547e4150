//! Static SVG figures for planar sets, normal cones and separating lines.
//!
//! Geometry is clipped exactly to a square viewport before any conversion to
//! floating point, and vertices are ordered with exact cross products, so the
//! output bytes depend only on the input.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_traits::{Signed, Zero};

use crate::cone::PolyhedralCone;
use crate::error::{Error, Result};
use crate::polyhedron::{intersect, ConvexSet, HRep, Row};
use crate::rational::{dot, int, sub, to_f64, Point, Rational, Vector};

const PX_PER_UNIT: f64 = 50.0;
const MARGIN: f64 = 20.0;
const PALETTE: [&str; 6] = ["#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee", "#aa3377"];

enum Item {
    Set { label: String, set: ConvexSet },
    Cone { label: String, at: Point, cone: PolyhedralCone },
    Separator { label: String, functional: Vector, level: Rational },
}

/// A figure under construction. Items are drawn in insertion order.
pub struct Plot {
    half_width: Rational,
    items: Vec<Item>,
}

impl Default for Plot {
    fn default() -> Self {
        Plot::new()
    }
}

fn planar(what: &str, dim: usize) -> Result<()> {
    if dim != 2 {
        return Err(Error::Precondition(format!(
            "only planar objects can be plotted; `{what}` has dimension {dim}"
        )));
    }
    Ok(())
}

impl Plot {
    /// Viewport `[-4, 4]²`.
    pub fn new() -> Self {
        Plot::with_viewport(int(4)).expect("positive half width")
    }

    pub fn with_viewport(half_width: Rational) -> Result<Self> {
        if !half_width.is_positive() {
            return Err(Error::Input("viewport half width must be positive".into()));
        }
        Ok(Plot { half_width, items: Vec::new() })
    }

    pub fn add_set(&mut self, label: &str, set: &ConvexSet) -> Result<()> {
        planar(label, set.dim())?;
        self.items.push(Item::Set { label: label.into(), set: set.clone() });
        Ok(())
    }

    /// Arrow fan for `cone` drawn from `at`.
    pub fn add_cone(&mut self, label: &str, at: &[Rational], cone: &PolyhedralCone) -> Result<()> {
        planar(label, cone.dim)?;
        planar(label, at.len())?;
        self.items.push(Item::Cone { label: label.into(), at: at.to_vec(), cone: cone.clone() });
        Ok(())
    }

    /// Dashed line `{x : ⟨functional, x⟩ = level}`.
    pub fn add_separator(&mut self, label: &str, functional: &[Rational], level: &Rational) -> Result<()> {
        planar(label, functional.len())?;
        if functional.iter().all(Zero::is_zero) {
            return Err(Error::Input(format!("separator `{label}` has a zero functional")));
        }
        self.items.push(Item::Separator {
            label: label.into(),
            functional: functional.to_vec(),
            level: level.clone(),
        });
        Ok(())
    }

    fn viewport(&self) -> Result<ConvexSet> {
        let w = &self.half_width;
        ConvexSet::boxed(&[-w.clone(), -w.clone()], &[w.clone(), w.clone()])
    }

    fn px(&self, p: &[Rational]) -> (f64, f64) {
        let w = to_f64(&self.half_width);
        (
            MARGIN + (to_f64(&p[0]) + w) * PX_PER_UNIT,
            MARGIN + (w - to_f64(&p[1])) * PX_PER_UNIT,
        )
    }

    pub fn render(&self) -> Result<String> {
        let side = 2.0 * to_f64(&self.half_width) * PX_PER_UNIT + 2.0 * MARGIN;
        let mut out = String::new();
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{side:.0}" height="{side:.0}" viewBox="0 0 {side:.0} {side:.0}">"#
        );
        let _ = writeln!(
            out,
            r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="black"/></marker></defs>"#
        );
        self.axes(&mut out);
        let viewport = self.viewport()?;
        for (k, item) in self.items.iter().enumerate() {
            let color = PALETTE[k % PALETTE.len()];
            match item {
                Item::Set { label, set } => self.draw_set(&mut out, label, set, &viewport, color)?,
                Item::Cone { label, at, cone } => self.draw_cone(&mut out, label, at, cone, color),
                Item::Separator { label, functional, level } => {
                    self.draw_separator(&mut out, label, functional, level, &viewport)?
                }
            }
        }
        out.push_str("</svg>\n");
        Ok(out)
    }

    fn axes(&self, out: &mut String) {
        let w = &self.half_width;
        let (x0, y0) = self.px(&[-w.clone(), Rational::zero()]);
        let (x1, _) = self.px(&[w.clone(), Rational::zero()]);
        let (xa, ya) = self.px(&[Rational::zero(), -w.clone()]);
        let (_, yb) = self.px(&[Rational::zero(), w.clone()]);
        let _ = writeln!(
            out,
            r##"<g stroke="#bbbbbb" stroke-width="1"><line x1="{x0:.2}" y1="{y0:.2}" x2="{x1:.2}" y2="{y0:.2}"/><line x1="{xa:.2}" y1="{ya:.2}" x2="{xa:.2}" y2="{yb:.2}"/></g>"##
        );
    }

    fn draw_set(
        &self,
        out: &mut String,
        label: &str,
        set: &ConvexSet,
        viewport: &ConvexSet,
        color: &str,
    ) -> Result<()> {
        let clipped = intersect(set, viewport)?;
        let _ = writeln!(out, r#"<g id="set-{}">"#, escape(label));
        if clipped.is_empty()? {
            let _ = writeln!(out, "<!-- {} misses the viewport -->", escape(label));
            out.push_str("</g>\n");
            return Ok(());
        }
        let ring = convex_ring(clipped.vrep()?.vertices.clone());
        let pts: Vec<(f64, f64)> = ring.iter().map(|p| self.px(p)).collect();
        match pts.len() {
            1 => {
                let _ = writeln!(out, r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="{color}"/>"#, pts[0].0, pts[0].1);
            }
            2 => {
                let _ = writeln!(
                    out,
                    r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-width="3"/>"#,
                    pts[0].0, pts[0].1, pts[1].0, pts[1].1
                );
            }
            _ => {
                let coords: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
                let _ = writeln!(
                    out,
                    r#"<polygon points="{}" fill="{color}" fill-opacity="0.3" stroke="{color}" stroke-width="2"/>"#,
                    coords.join(" ")
                );
            }
        }
        let h = set.hrep()?;
        if ring.len() >= 2 {
            for k in 0..ring.len() {
                let (p, q) = (&ring[k], &ring[(k + 1) % ring.len()]);
                if ring.len() == 2 && k == 1 {
                    break;
                }
                if let Some(outward) = self.open_side(p, q, h) {
                    self.hatch(out, p, q, outward, color);
                }
            }
        }
        let (lx, ly) = pts[0];
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12" fill="{color}">{}</text>"#,
            lx + 4.0,
            ly - 4.0,
            escape(label)
        );
        out.push_str("</g>\n");
        Ok(())
    }

    /// Outward direction of the viewport side containing edge `pq`, when
    /// that edge is an artifact of clipping rather than part of the set's
    /// own boundary.
    fn open_side(&self, p: &[Rational], q: &[Rational], h: &HRep) -> Option<(f64, f64)> {
        let w = &self.half_width;
        let mut side = None;
        for axis in 0..2 {
            for sign in [1i64, -1] {
                let bound = if sign > 0 { w.clone() } else { -w.clone() };
                if p[axis] == bound && q[axis] == bound {
                    side = Some(if axis == 0 { (sign as f64, 0.0) } else { (0.0, -(sign as f64)) });
                }
            }
        }
        let side = side?;
        let tight = |r: &Row| dot(&r.normal, p) == r.rhs && dot(&r.normal, q) == r.rhs;
        if h.ineqs.iter().any(tight) || !h.eqs.is_empty() {
            return None;
        }
        Some(side)
    }

    fn hatch(&self, out: &mut String, p: &[Rational], q: &[Rational], outward: (f64, f64), color: &str) {
        let (a, b) = (self.px(p), self.px(q));
        let len = ((b.0 - a.0).powi(2) + (b.1 - a.1).powi(2)).sqrt();
        let ticks = (len / 8.0).floor() as usize;
        let _ = write!(out, r#"<path stroke="{color}" stroke-width="1" fill="none" d=""#);
        for i in 0..=ticks {
            let s = if ticks == 0 { 0.5 } else { i as f64 / ticks as f64 };
            let x = a.0 + s * (b.0 - a.0);
            let y = a.1 + s * (b.1 - a.1);
            // ticks lean inward at 45 degrees from the open side
            let (ix, iy) = (-outward.0, -outward.1);
            let _ = write!(out, "M{x:.2},{y:.2} l{:.2},{:.2} ", 6.0 * (ix - iy), 6.0 * (iy + ix));
        }
        out.push_str("\"/>\n");
    }

    fn draw_cone(&self, out: &mut String, label: &str, at: &[Rational], cone: &PolyhedralCone, color: &str) {
        let (x, y) = self.px(at);
        let _ = writeln!(out, r#"<g id="cone-{}" stroke="{color}" stroke-width="2">"#, escape(label));
        let mut dirs: Vec<Vector> = cone.generators.clone();
        for l in &cone.lineality {
            dirs.push(l.clone());
            dirs.push(l.iter().map(|c| -c).collect());
        }
        if dirs.is_empty() {
            let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="none"/>"#);
        }
        // label sits past the tip of the first arrow so fans at a shared point stay legible
        let mut anchor = (x + 6.0, y + 14.0);
        for (k, d) in dirs.iter().enumerate() {
            let (dx, dy) = (to_f64(&d[0]), to_f64(&d[1]));
            let norm = (dx * dx + dy * dy).sqrt();
            let (ex, ey) = (x + PX_PER_UNIT * dx / norm, y - PX_PER_UNIT * dy / norm);
            let _ = writeln!(
                out,
                r#"<line x1="{x:.2}" y1="{y:.2}" x2="{ex:.2}" y2="{ey:.2}" marker-end="url(#arrow)"/>"#
            );
            if k == 0 {
                anchor = (ex + 6.0 * dx / norm + 2.0, ey - 6.0 * dy / norm + 4.0);
            }
        }
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12" stroke="none" fill="{color}">{}</text>"#,
            anchor.0,
            anchor.1,
            escape(label)
        );
        out.push_str("</g>\n");
    }

    fn draw_separator(
        &self,
        out: &mut String,
        label: &str,
        functional: &[Rational],
        level: &Rational,
        viewport: &ConvexSet,
    ) -> Result<()> {
        let line = ConvexSet::from_hrep(HRep::new(
            2,
            Vec::new(),
            vec![Row::new(functional.to_vec(), level.clone())],
        )?);
        let clipped = intersect(&line, viewport)?;
        let _ = writeln!(out, r#"<g id="separator-{}">"#, escape(label));
        if !clipped.is_empty()? {
            let ring = convex_ring(clipped.vrep()?.vertices.clone());
            let a = self.px(&ring[0]);
            let b = self.px(ring.last().expect("nonempty"));
            let _ = writeln!(
                out,
                r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="1.5" stroke-dasharray="8 5"/>"#,
                a.0, a.1, b.0, b.1
            );
        }
        out.push_str("</g>\n");
        Ok(())
    }
}

/// Vertices of a planar polytope in counterclockwise order, starting from the
/// lexicographically smallest one. Duplicates are dropped.
fn convex_ring(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let pivot = pts[0].clone();
    let mut rest = pts.split_off(1);
    rest.sort_by(|a, b| {
        let (u, v) = (sub(a, &pivot), sub(b, &pivot));
        let cross = &u[0] * &v[1] - &u[1] * &v[0];
        match cross.cmp(&Rational::zero()) {
            Ordering::Greater => Ordering::Less,
            Ordering::Less => Ordering::Greater,
            Ordering::Equal => dot(&u, &u).cmp(&dot(&v, &v)),
        }
    });
    pts.extend(rest);
    pts
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::normal_cone;
    use crate::rational::{vec_of, zeros};

    fn halfplane(a: &[i64]) -> ConvexSet {
        ConvexSet::from_hrep(HRep::new(2, vec![Row::new(vec_of(a), int(0))], vec![]).unwrap())
    }

    #[test]
    fn ring_is_counterclockwise() {
        let ring = convex_ring(vec![vec_of(&[1, 1]), vec_of(&[0, 0]), vec_of(&[1, 0]), vec_of(&[0, 1])]);
        assert_eq!(ring, vec![vec_of(&[0, 0]), vec_of(&[1, 0]), vec_of(&[1, 1]), vec_of(&[0, 1])]);
    }

    #[test]
    fn halfplane_gets_hatched_open_edges() {
        let mut plot = Plot::new();
        plot.add_set("upper", &halfplane(&[0, -1])).unwrap();
        let svg = plot.render().unwrap();
        assert!(svg.contains("<polygon"));
        // three viewport sides are open, the x-axis edge is not
        assert_eq!(svg.matches(r#"fill="none" d="#).count(), 3);
    }

    #[test]
    fn separator_is_dashed_and_output_is_stable() {
        let build = || {
            let mut plot = Plot::new();
            plot.add_set("lower", &halfplane(&[0, 1])).unwrap();
            let n = normal_cone(&halfplane(&[0, 1]), &zeros(2)).unwrap();
            plot.add_cone("N", &zeros(2), &n).unwrap();
            plot.add_separator("sep", &vec_of(&[0, 1]), &int(0)).unwrap();
            plot.render().unwrap()
        };
        let svg = build();
        assert!(svg.contains(r#"y1="220.00" x2="420.00" y2="220.00" stroke="black" stroke-width="1.5" stroke-dasharray"#));
        assert_eq!(svg, build());
    }

    #[test]
    fn rejects_non_planar_objects() {
        let cube = ConvexSet::boxed(&zeros(3), &vec_of(&[1, 1, 1])).unwrap();
        assert!(Plot::new().add_set("cube", &cube).is_err());
    }
}
