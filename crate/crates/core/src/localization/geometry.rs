//! The curves `Re z = 1/2`, `L`, `A1`, `A2` and nearest-curve labels.

use std::fmt;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurveLabel {
    MidLine,
    RayL,
    ArcA1,
    ArcA2,
    Off,
}

impl CurveLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            CurveLabel::MidLine => "MidLine",
            CurveLabel::RayL => "RayL",
            CurveLabel::ArcA1 => "ArcA1",
            CurveLabel::ArcA2 => "ArcA2",
            CurveLabel::Off => "Off",
        }
    }
}

impl fmt::Display for CurveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CurveLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Which curves a root may be assigned to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveFamily {
    /// The full line `Re z = 1/2`.
    Line,
    /// `L`, `A1`, `A2`.
    RaysAndArcs,
    /// All four; on ties `RayL` beats `MidLine` beats the arcs.
    Any,
}

impl CurveFamily {
    fn candidates(self) -> &'static [CurveLabel] {
        match self {
            CurveFamily::Line => &[CurveLabel::MidLine],
            CurveFamily::RaysAndArcs => &[CurveLabel::RayL, CurveLabel::ArcA1, CurveLabel::ArcA2],
            CurveFamily::Any => &[
                CurveLabel::RayL,
                CurveLabel::MidLine,
                CurveLabel::ArcA1,
                CurveLabel::ArcA2,
            ],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurveGeometry {
    pub omega: Complex64,
}

impl Default for CurveGeometry {
    fn default() -> Self {
        CurveGeometry {
            omega: Complex64::new(0.5, 3f64.sqrt() / 2.0),
        }
    }
}

impl CurveGeometry {
    fn endpoint_distance(&self, z: Complex64) -> f64 {
        (z - self.omega).norm().min((z - self.omega.conj()).norm())
    }

    pub fn distance(&self, label: CurveLabel, z: Complex64) -> f64 {
        match label {
            CurveLabel::MidLine => (z.re - 0.5).abs(),
            CurveLabel::RayL => {
                if z.im.abs() >= self.omega.im {
                    (z.re - 0.5).abs()
                } else {
                    self.endpoint_distance(z)
                }
            }
            CurveLabel::ArcA1 => {
                let one = Complex64::new(1.0, 0.0);
                let r = (z - one).norm();
                if r == 0.0 {
                    return 1.0;
                }
                let proj = one + (z - one) / r;
                if proj.re <= 0.5 {
                    (r - 1.0).abs()
                } else {
                    self.endpoint_distance(z)
                }
            }
            CurveLabel::ArcA2 => {
                let r = z.norm();
                if r == 0.0 {
                    return 1.0;
                }
                if (z / r).re >= 0.5 {
                    (r - 1.0).abs()
                } else {
                    self.endpoint_distance(z)
                }
            }
            CurveLabel::Off => f64::INFINITY,
        }
    }

    /// Nearest admissible curve, or `Off` when none is within `tol_c`.
    pub fn classify(&self, z: Complex64, family: CurveFamily, tol_c: f64) -> (CurveLabel, f64) {
        let mut best = (CurveLabel::Off, f64::INFINITY);
        for &label in family.candidates() {
            let d = self.distance(label, z);
            if d < best.1 {
                best = (label, d);
            }
        }
        if best.1 <= tol_c {
            best
        } else {
            (CurveLabel::Off, best.1)
        }
    }

    /// `count` points along each of `L` (truncated at `|Im| <= height`), `A1`
    /// and `A2`.
    pub fn samples(&self, count: usize, height: f64) -> Vec<(CurveLabel, Complex64)> {
        let mut out = Vec::new();
        let s = self.omega.im;
        let steps = count.max(2);
        for i in 0..steps {
            let t = i as f64 / (steps - 1) as f64;
            let y = s + t * (height - s).max(0.0);
            out.push((CurveLabel::RayL, Complex64::new(0.5, y)));
            out.push((CurveLabel::RayL, Complex64::new(0.5, -y)));
        }
        let third = std::f64::consts::FRAC_PI_3;
        for i in 0..steps {
            let t = i as f64 / (steps - 1) as f64;
            // A2: arguments in [-pi/3, pi/3]
            let phi = -third + 2.0 * third * t;
            out.push((CurveLabel::ArcA2, Complex64::from_polar(1.0, phi)));
            // A1: 1 + e^{i psi}, psi in [2pi/3, 4pi/3]
            let psi = 2.0 * third + 2.0 * third * t;
            out.push((
                CurveLabel::ArcA1,
                Complex64::new(1.0, 0.0) + Complex64::from_polar(1.0, psi),
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        let g = CurveGeometry::default();
        let (l, d) = g.classify(Complex64::new(0.5, 2.0), CurveFamily::Any, 1e-6);
        assert_eq!((l, d), (CurveLabel::RayL, 0.0));
        let (l, d) = g.classify(Complex64::new(1.0, 0.0), CurveFamily::Any, 1e-6);
        assert_eq!(l, CurveLabel::ArcA2);
        assert!(d < 1e-15);
        let (l, _) = g.classify(Complex64::new(0.3, 0.3), CurveFamily::Any, 1e-6);
        assert_eq!(l, CurveLabel::Off);
        assert_eq!(
            g.classify(Complex64::new(0.0, 0.0), CurveFamily::RaysAndArcs, 1e-6)
                .0,
            CurveLabel::ArcA1
        );
    }

    #[test]
    fn omega_lies_on_all_closures() {
        let g = CurveGeometry::default();
        for label in [
            CurveLabel::RayL,
            CurveLabel::ArcA1,
            CurveLabel::ArcA2,
            CurveLabel::MidLine,
        ] {
            assert!(g.distance(label, g.omega) < 1e-15);
            assert!(g.distance(label, g.omega.conj()) < 1e-15);
        }
    }

    #[test]
    fn samples_lie_on_their_curves() {
        let g = CurveGeometry::default();
        for (label, z) in g.samples(17, 5.0) {
            assert!(g.distance(label, z) < 1e-12, "{label} {z}");
        }
    }

    #[test]
    fn off_arc_points_measure_endpoint_distance() {
        let g = CurveGeometry::default();
        // on the circle |z| = 1 but left of Re = 1/2
        let z = Complex64::new(-1.0, 0.0);
        assert!((g.distance(CurveLabel::ArcA2, z) - g.endpoint_distance(z)).abs() < 1e-15);
        // below omega on the line, not on the ray
        let z = Complex64::new(0.5, 0.0);
        assert!((g.distance(CurveLabel::RayL, z) - g.omega.im).abs() < 1e-15);
    }
}
