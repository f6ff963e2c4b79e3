//! Funk, reverse-Funk, Hilbert and Thompson distances on the interior of a
//! convex polygon, and the inverse problem along a ray.
//!
//! All four distances read off the same chord. With `p` the base point,
//! `L = |q - p|`, `D+` the distance from `p` to the boundary in the direction
//! of `q` and `D-` the distance in the opposite direction:
//!
//! ```text
//! F(p,q)  = ln(D+ / (D+ - L))
//! rF(p,q) = F(q,p) = ln((D- + L) / D-)
//! H(p,q)  = (F + rF) / 2
//! T(p,q)  = max(F, rF)
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geom::{
    chord_frame, chord_through, coincidence_tol, require_interior, ConvexPolygon, Point2,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MetricKind {
    Funk,
    ReverseFunk,
    Hilbert,
    Thompson,
}

impl MetricKind {
    pub const ALL: [MetricKind; 4] = [
        MetricKind::Funk,
        MetricKind::ReverseFunk,
        MetricKind::Hilbert,
        MetricKind::Thompson,
    ];

    /// Hilbert and Thompson are metrics; Funk and reverse Funk are weak metrics.
    pub fn is_symmetric(self) -> bool {
        matches!(self, MetricKind::Hilbert | MetricKind::Thompson)
    }

    /// The metric `d'` with `d'(p, q) = d(q, p)`.
    pub fn reversed(self) -> MetricKind {
        match self {
            MetricKind::Funk => MetricKind::ReverseFunk,
            MetricKind::ReverseFunk => MetricKind::Funk,
            k => k,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MetricKind::Funk => "funk",
            MetricKind::ReverseFunk => "reverse_funk",
            MetricKind::Hilbert => "hilbert",
            MetricKind::Thompson => "thompson",
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MetricKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "funk" => Ok(MetricKind::Funk),
            "reverse_funk" => Ok(MetricKind::ReverseFunk),
            "hilbert" => Ok(MetricKind::Hilbert),
            "thompson" => Ok(MetricKind::Thompson),
            other => Err(format!("unknown metric {other:?}")),
        }
    }
}

/// Checks both points and returns their separation, or `None` when they
/// coincide.
fn separation(omega: &ConvexPolygon, p: Point2, q: Point2) -> Result<Option<f64>> {
    require_interior(omega, p)?;
    require_interior(omega, q)?;
    let sep = p.dist(q);
    Ok((sep > coincidence_tol(omega)).then_some(sep))
}

pub fn funk_distance(omega: &ConvexPolygon, p: Point2, q: Point2) -> Result<f64> {
    let Some(sep) = separation(omega, p, q)? else {
        return Ok(0.0);
    };
    let fwd = chord_through(omega, p, q - p)?.forward_len();
    if !(fwd > sep) {
        return Err(Error::NotInterior);
    }
    Ok(-(-sep / fwd).ln_1p())
}

pub fn reverse_funk_distance(omega: &ConvexPolygon, p: Point2, q: Point2) -> Result<f64> {
    funk_distance(omega, q, p)
}

pub fn hilbert_distance(omega: &ConvexPolygon, p: Point2, q: Point2) -> Result<f64> {
    if separation(omega, p, q)?.is_none() {
        return Ok(0.0);
    }
    let f = chord_frame(omega, p, q)?;
    let sep = f.separation();
    // ln(d_qp / d_pp) + ln(d_pq / d_qq), written to stay accurate for small sep.
    Ok(0.5 * ((sep / f.d_pp).ln_1p() - (-sep / f.d_pq).ln_1p()))
}

pub fn thompson_distance(omega: &ConvexPolygon, p: Point2, q: Point2) -> Result<f64> {
    Ok(funk_distance(omega, p, q)?.max(funk_distance(omega, q, p)?))
}

pub fn distance(omega: &ConvexPolygon, kind: MetricKind, p: Point2, q: Point2) -> Result<f64> {
    match kind {
        MetricKind::Funk => funk_distance(omega, p, q),
        MetricKind::ReverseFunk => reverse_funk_distance(omega, p, q),
        MetricKind::Hilbert => hilbert_distance(omega, p, q),
        MetricKind::Thompson => thompson_distance(omega, p, q),
    }
}

/// Euclidean offset `u` along a chord at which `kind`-distance `r` is reached,
/// given forward and backward boundary distances. Infinite when unreachable.
pub(crate) fn offset_for_radius(kind: MetricKind, fwd: f64, back: f64, r: f64) -> f64 {
    match kind {
        MetricKind::Funk => fwd * -(-r).exp_m1(),
        MetricKind::ReverseFunk => {
            let u = back * r.exp_m1();
            if u < fwd {
                u
            } else {
                f64::INFINITY
            }
        }
        MetricKind::Hilbert => {
            // (k-1) D- D+ / (D+ + k D-) with k = e^{2r}.
            let km1 = (2.0 * r).exp_m1();
            if km1.is_infinite() {
                return fwd;
            }
            km1 * back * fwd / (fwd + back + km1 * back)
        }
        MetricKind::Thompson => offset_for_radius(MetricKind::Funk, fwd, back, r)
            .min(offset_for_radius(MetricKind::ReverseFunk, fwd, back, r)),
    }
}

/// The point `q` on the ray from `p` along `dir` with `distance(kind, p, q) = r`.
pub fn point_at_distance(
    omega: &ConvexPolygon,
    kind: MetricKind,
    p: Point2,
    dir: Point2,
    r: f64,
) -> Result<Point2> {
    require_interior(omega, p)?;
    if !(r >= 0.0) || !r.is_finite() {
        return Err(Error::Degenerate("radius must be finite and non-negative"));
    }
    if r == 0.0 {
        return Ok(p);
    }
    let chord = chord_through(omega, p, dir)?;
    let u = offset_for_radius(kind, chord.forward_len(), chord.backward_len(), r);
    if !u.is_finite() {
        return Err(Error::Unreachable);
    }
    let q = chord.at(u);
    if !omega.strictly_contains(q) {
        return Err(Error::Unreachable);
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TIGHT: f64 = 1e-12;

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    #[test]
    fn funk_fixtures() {
        let sq = ConvexPolygon::unit_square();
        let d = funk_distance(&sq, p(0.5, 0.5), p(0.75, 0.5)).unwrap();
        assert!((d - 2f64.ln()).abs() < TIGHT);
        assert_eq!(funk_distance(&sq, p(0.3, 0.4), p(0.3, 0.4)).unwrap(), 0.0);
        let d = funk_distance(&sq, p(0.75, 0.5), p(0.5, 0.5)).unwrap();
        assert!((d - 1.5f64.ln()).abs() < TIGHT);
    }

    #[test]
    fn reverse_funk_fixtures() {
        let sq = ConvexPolygon::unit_square();
        let (a, b) = (p(0.5, 0.5), p(0.75, 0.5));
        let d = reverse_funk_distance(&sq, a, b).unwrap();
        assert!((d - 1.5f64.ln()).abs() < TIGHT);
        assert_eq!(reverse_funk_distance(&sq, a, a).unwrap(), 0.0);
        let (c, e) = (p(0.2, 0.7), p(0.9, 0.15));
        assert_eq!(
            reverse_funk_distance(&sq, c, e).unwrap(),
            funk_distance(&sq, e, c).unwrap()
        );
    }

    #[test]
    fn hilbert_fixtures() {
        let sq = ConvexPolygon::unit_square();
        let d = hilbert_distance(&sq, p(0.5, 0.5), p(0.75, 0.5)).unwrap();
        assert!((d - 0.5 * 3f64.ln()).abs() < TIGHT);
        assert_eq!(
            hilbert_distance(&sq, p(0.5, 0.5), p(0.5, 0.5)).unwrap(),
            0.0
        );
        let d = hilbert_distance(&sq, p(0.25, 0.5), p(0.75, 0.5)).unwrap();
        assert!((d - 3f64.ln()).abs() < TIGHT);
    }

    #[test]
    fn thompson_fixtures() {
        let sq = ConvexPolygon::unit_square();
        let d = thompson_distance(&sq, p(0.5, 0.5), p(0.75, 0.5)).unwrap();
        assert!((d - 2f64.ln()).abs() < TIGHT);
        assert_eq!(
            thompson_distance(&sq, p(0.1, 0.5), p(0.1, 0.5)).unwrap(),
            0.0
        );
        let d = thompson_distance(&sq, p(0.25, 0.5), p(0.75, 0.5)).unwrap();
        assert!((d - 3f64.ln()).abs() < TIGHT);
    }

    #[test]
    fn dispatch_identities() {
        let sq = ConvexPolygon::unit_square();
        let (a, b) = (p(0.31, 0.62), p(0.77, 0.2));
        assert_eq!(distance(&sq, MetricKind::Hilbert, a, a).unwrap(), 0.0);
        let f = distance(&sq, MetricKind::Funk, a, b).unwrap();
        let rf = distance(&sq, MetricKind::ReverseFunk, a, b).unwrap();
        let t = distance(&sq, MetricKind::Thompson, a, b).unwrap();
        let h = distance(&sq, MetricKind::Hilbert, a, b).unwrap();
        assert_eq!(t, f.max(rf));
        assert!((h - 0.5 * (f + rf)).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_interior() {
        let sq = ConvexPolygon::unit_square();
        for kind in MetricKind::ALL {
            assert_eq!(
                distance(&sq, kind, p(0.5, 0.5), p(1.5, 0.5)),
                Err(Error::NotInterior)
            );
            assert_eq!(
                distance(&sq, kind, p(0.0, 0.5), p(0.5, 0.5)),
                Err(Error::NotInterior)
            );
        }
    }

    #[test]
    fn point_at_distance_fixtures() {
        let sq = ConvexPolygon::unit_square();
        let c = p(0.5, 0.5);
        let q = point_at_distance(&sq, MetricKind::Hilbert, c, p(1., 0.), 0.5 * 3f64.ln()).unwrap();
        assert!(q.dist(p(0.75, 0.5)) < TIGHT);
        for kind in MetricKind::ALL {
            assert_eq!(
                point_at_distance(&sq, kind, c, p(0.3, -1.0), 0.0).unwrap(),
                c
            );
        }
        let q = point_at_distance(&sq, MetricKind::Funk, c, p(1., 0.), 2f64.ln()).unwrap();
        assert!(q.dist(p(0.75, 0.5)) < TIGHT);
    }

    #[test]
    fn reverse_funk_can_be_unreachable() {
        let sq = ConvexPolygon::unit_square();
        // Backward room 0.8, forward room 0.2: e^r - 1 = 1 asks for u = 0.8.
        let r = point_at_distance(
            &sq,
            MetricKind::ReverseFunk,
            p(0.8, 0.5),
            p(1., 0.),
            2f64.ln(),
        );
        assert_eq!(r, Err(Error::Unreachable));
        // Thompson takes the smaller offset, which is always reachable.
        assert!(
            point_at_distance(&sq, MetricKind::Thompson, p(0.8, 0.5), p(1., 0.), 2f64.ln()).is_ok()
        );
    }

    #[test]
    fn parses_names() {
        for kind in MetricKind::ALL {
            assert_eq!(kind.name().parse::<MetricKind>().unwrap(), kind);
        }
        assert!("euclid".parse::<MetricKind>().is_err());
        assert!(!MetricKind::Funk.is_symmetric());
        assert!(MetricKind::Thompson.is_symmetric());
    }
}
