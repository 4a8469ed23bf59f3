//! Simultaneous complex root finding (Aberth-Ehrlich).

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::polycore::IntPoly;

const MAX_ITERATIONS: usize = 2000;

/// A polynomial as seen by the root finder.
pub trait RootTarget {
    fn degree(&self) -> usize;

    /// Newton correction `p(z) / p'(z)`; zero at an exact root.
    fn newton(&self, z: Complex64) -> Complex64;

    /// `|p(z)|` divided by the natural magnitude of the terms at `z`.
    fn relative_residual(&self, z: Complex64) -> f64;

    /// Radius of the starting circle.
    fn initial_radius(&self) -> f64 {
        1.0
    }
}

/// Horner evaluation of the expanded coefficients.
pub struct HornerTarget {
    coeffs: Vec<f64>,
}

impl HornerTarget {
    pub fn new(p: &IntPoly) -> Result<Self> {
        if p.degree().unwrap_or(0) == 0 {
            return Err(Error::Precondition("root finding needs degree >= 1".into()));
        }
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect();
        Ok(HornerTarget { coeffs })
    }
}

impl RootTarget for HornerTarget {
    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn newton(&self, z: Complex64) -> Complex64 {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for &c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        if p.is_zero() {
            Complex64::zero()
        } else {
            p / dp
        }
    }

    fn relative_residual(&self, z: Complex64) -> f64 {
        let r = z.norm();
        let mut p = Complex64::zero();
        let mut scale = 0.0;
        for &c in self.coeffs.iter().rev() {
            p = p * z + c;
            scale = scale * r + c.abs();
        }
        p.norm() / scale
    }

    fn initial_radius(&self) -> f64 {
        let d = self.degree() as f64;
        let a0 = self
            .coeffs
            .iter()
            .find(|c| **c != 0.0)
            .map_or(1.0, |c| c.abs());
        let an = self.coeffs.last().unwrap().abs();
        (a0 / an).powf(1.0 / d).clamp(1e-3, 1e3)
    }
}

/// `x^n + (1-x)^n + a^n` divided by `x^mx (x-1)^my (x^2-x+1)^mc`, evaluated
/// without expanding. The expanded coefficients of large `n` lose most of
/// their precision to cancellation near the roots.
#[derive(Clone, Debug)]
pub struct FermatTarget {
    pub n: u32,
    pub a: f64,
    pub mult_x: u32,
    pub mult_xm1: u32,
    pub mult_cyc: u32,
}

impl FermatTarget {
    pub fn full(n: u32, a: f64) -> Self {
        FermatTarget {
            n,
            a,
            mult_x: 0,
            mult_xm1: 0,
            mult_cyc: 0,
        }
    }

    /// `z`, `1 - z` and `a` divided by the largest of their moduli, and
    /// that modulus. Keeps the `n`-th powers inside the f64 range.
    fn scaled(&self, z: Complex64) -> (Complex64, Complex64, f64, f64) {
        let w = Complex64::new(1.0, 0.0) - z;
        let s = z.norm().max(w.norm()).max(self.a.abs());
        (z / s, w / s, self.a / s, s)
    }

    fn base_degree(&self) -> usize {
        if self.n.is_multiple_of(2) {
            self.n as usize
        } else {
            self.n as usize - 1
        }
    }
}

impl RootTarget for FermatTarget {
    fn degree(&self) -> usize {
        self.base_degree() - (self.mult_x + self.mult_xm1 + 2 * self.mult_cyc) as usize
    }

    fn newton(&self, z: Complex64) -> Complex64 {
        let n = self.n as i32;
        let (zs, ws, a_s, s) = self.scaled(z);
        let k = zs.powi(n) + ws.powi(n) + a_s.powi(n);
        if k.is_zero() {
            return Complex64::zero();
        }
        let dk = (zs.powi(n - 1) - ws.powi(n - 1)) * (n as f64 / s);
        let mut log_d = dk / k;
        if self.mult_x > 0 {
            log_d -= self.mult_x as f64 / z;
        }
        if self.mult_xm1 > 0 {
            log_d -= self.mult_xm1 as f64 / (z - 1.0);
        }
        if self.mult_cyc > 0 {
            log_d -= (z * 2.0 - 1.0) * self.mult_cyc as f64 / (z * z - z + 1.0);
        }
        log_d.inv()
    }

    fn relative_residual(&self, z: Complex64) -> f64 {
        let n = self.n as i32;
        let (zs, ws, a_s, _) = self.scaled(z);
        let k = zs.powi(n) + ws.powi(n) + a_s.powi(n);
        let scale = zs.norm().powi(n) + ws.norm().powi(n) + a_s.abs().powi(n);
        k.norm() / scale
    }
}

/// All `degree` roots with multiplicity, each with relative residual below
/// `tol`. Deterministic for fixed input.
pub fn find_roots<T: RootTarget>(target: &T, tol: f64) -> Result<Vec<Complex64>> {
    if !(tol > 0.0) {
        return Err(Error::Precondition(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let d = target.degree();
    if d == 0 {
        return Ok(Vec::new());
    }
    let r = target.initial_radius();
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(r, std::f64::consts::TAU * k as f64 / d as f64 + 0.4))
        .collect();

    let mut iterations = 0;
    let mut settled = 0;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let mut max_step: f64 = 0.0;
        for k in 0..d {
            let newton = target.newton(z[k]);
            if newton.is_zero() {
                continue;
            }
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = newton / (Complex64::new(1.0, 0.0) - newton * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / z[k].norm().max(1.0));
            } else {
                max_step = f64::INFINITY;
            }
        }
        if max_step < 1e-14 {
            // a few extra sweeps polish roots that converged late
            settled += 1;
            if settled >= 3 {
                break;
            }
        } else {
            settled = 0;
        }
    }

    let worst = z
        .iter()
        .map(|&w| target.relative_residual(w))
        .fold(0.0, f64::max);
    if !(worst < tol) || z.iter().any(|w| !w.is_finite()) {
        return Err(Error::NoConvergence {
            iterations,
            worst_residual: worst,
            best: z,
        });
    }
    z.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(z)
}

/// Roots of an integer polynomial from its expanded coefficients.
pub fn complex_roots(p: &IntPoly, tol: f64) -> Result<Vec<Complex64>> {
    find_roots(&HornerTarget::new(p)?, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-9
    }

    #[test]
    fn quadratics() {
        let r = complex_roots(&IntPoly::from_i64s(&[1, 0, 1]), 1e-10).unwrap();
        assert!(close(r[0], Complex64::new(0.0, -1.0)) && close(r[1], Complex64::new(0.0, 1.0)));
        let r = complex_roots(&IntPoly::from_i64s(&[1, -1, 1]), 1e-10).unwrap();
        let s = 3f64.sqrt() / 2.0;
        assert!(close(r[0], Complex64::new(0.5, -s)) && close(r[1], Complex64::new(0.5, s)));
        assert!(complex_roots(&IntPoly::from_i64s(&[4]), 1e-10).is_err());
    }

    #[test]
    fn repeated_roots_are_found() {
        // (x - 2)^3 (x + 1)
        let p = IntPoly::from_i64s(&[-8, 4, 6, -5, 1]);
        let r = complex_roots(&p, 1e-8).unwrap();
        assert_eq!(r.len(), 4);
        assert!((r[0] + 1.0).norm() < 1e-9);
        for z in &r[1..] {
            assert!((z - 2.0).norm() < 1e-4);
        }
    }

    #[test]
    fn structured_matches_horner_on_small_degree() {
        let target = FermatTarget {
            n: 8,
            a: -1.0,
            mult_x: 0,
            mult_xm1: 0,
            mult_cyc: 1,
        };
        let structured = find_roots(&target, 1e-10).unwrap();
        let expanded =
            complex_roots(&IntPoly::from_i64s(&[1, -3, 10, -15, 10, -3, 1]), 1e-10).unwrap();
        assert_eq!(structured.len(), 6);
        for z in &structured {
            assert!(expanded.iter().any(|w| close(*z, *w)));
        }
    }

    #[test]
    fn far_roots_do_not_overflow() {
        // the outermost roots of K_92 sit near |z| = 30
        let target = FermatTarget::full(92, -1.0);
        let z = Complex64::new(-47.6, 12.4);
        assert!(target.newton(z).is_finite());
        assert!(target.relative_residual(z).is_finite());
        assert_eq!(find_roots(&target, 1e-9).unwrap().len(), 92);
    }
}
