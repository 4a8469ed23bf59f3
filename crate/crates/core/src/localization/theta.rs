//! Roots of `f_n(θ) = 2 cos nθ + (2a cos θ)^n` on `D = [θ0, π/2)`.
//!
//! `z = e^{iθ} / (2 cos θ)` runs along `Re z = 1/2` and
//! `(2 cos θ)^n K_{a,n}(z) = f_n(θ)`, so each zero of `f_n` is a root of
//! `K_{a,n}` on the line.

use std::f64::consts::PI;

use serde::Serialize;

use crate::polycore::RatScalar;

fn f_n(a: f64, n: u32, theta: f64) -> f64 {
    2.0 * (n as f64 * theta).cos() + (2.0 * a * theta.cos()).powi(n as i32)
}

/// `n θ0 / π` rounded up, with `θ0 = arccos min(1, 1/(2|a|))`.
///
/// Exact for `|a| <= 1/2` (θ0 = 0) and `|a| = 1` (θ0 = π/3); no other
/// rational `a` makes θ0 a rational multiple of π.
fn first_interval(a: &RatScalar, n: u32) -> i64 {
    if a.abs_at_most_half() {
        return 0;
    }
    if a.abs() == RatScalar::integer(1) {
        return (n as i64 + 2) / 3;
    }
    (n as f64 * theta0(a) / PI).ceil() as i64
}

pub fn theta0(a: &RatScalar) -> f64 {
    let x = 1.0 / (2.0 * a.abs().to_f64());
    x.min(1.0).acos()
}

/// `⌊n/2⌋ − ⌈(n/π) arccos min(1, 1/(2|a|))⌉`. May be negative for odd `n`.
pub fn count_lower_bound(a: &RatScalar, n: u32) -> i64 {
    (n / 2) as i64 - first_interval(a, n)
}

/// One zero of `f_n` in each `[kπ/n, (k+1)π/n] ⊂ D`, bisected to `1e-12`.
pub fn theta_roots(a: &RatScalar, n: u32) -> Vec<f64> {
    let af = a.to_f64();
    let step = PI / n as f64;
    let k0 = first_interval(a, n).max(0);
    let mut out = Vec::new();
    for k in k0..(n / 2) as i64 {
        let (mut lo, mut hi) = (k as f64 * step, (k + 1) as f64 * step);
        let f_lo = f_n(af, n, lo);
        debug_assert!(f_lo * f_n(af, n, hi) < 0.0);
        while hi - lo > 1e-12 {
            let mid = 0.5 * (lo + hi);
            if f_n(af, n, mid) * f_lo > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    out
}

/// The point on `Re z = 1/2` with argument θ.
pub fn theta_to_point(theta: f64) -> num_complex::Complex64 {
    num_complex::Complex64::from_polar(1.0 / (2.0 * theta.cos()), theta)
}

#[derive(Clone, Debug, Serialize)]
pub struct GapRow {
    pub n: u32,
    pub points: usize,
    pub max_gap: f64,
    pub bound: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DensityAudit {
    pub a: RatScalar,
    pub n_max: u32,
    pub domain: [f64; 2],
    pub rows: Vec<GapRow>,
    pub verdict: bool,
}

/// Largest gap between consecutive θ-roots of all `f_m`, `m <= n`,
/// together with the ends of `D`, for each `n` up to `n_max`. The verdict
/// compares the final row with `π / n_max`.
pub fn density_audit(a: &RatScalar, n_max: u32) -> DensityAudit {
    let lo = theta0(a);
    let hi = PI / 2.0;
    let mut union: Vec<f64> = Vec::new();
    let mut rows = Vec::new();
    for n in 2..=n_max {
        union.extend(theta_roots(a, n));
        let mut pts = union.clone();
        pts.push(lo);
        pts.push(hi);
        pts.sort_by(f64::total_cmp);
        let max_gap = pts.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max);
        rows.push(GapRow {
            n,
            points: union.len(),
            max_gap,
            bound: PI / n as f64,
        });
    }
    let verdict = rows
        .last()
        .is_some_and(|r| r.max_gap <= PI / n_max as f64 + 1e-9);
    DensityAudit {
        a: a.clone(),
        n_max,
        domain: [lo, hi],
        rows,
        verdict,
    }
}

/// `f_n(θ)` at a double-precision `a`.
pub fn f_n_value(a: &RatScalar, n: u32, theta: f64) -> f64 {
    f_n(a.to_f64(), n, theta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> RatScalar {
        RatScalar::new(n, d).unwrap()
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(count_lower_bound(&r(-1, 1), 12), 2);
        assert_eq!(count_lower_bound(&r(1, 2), 9), 4);
        assert_eq!(count_lower_bound(&r(-1, 1), 7), 0);
        for n in 2..=200 {
            let expected = crate::kfamily::d_n_formula(n) as i64 / 6;
            assert_eq!(count_lower_bound(&r(-1, 1), n), expected, "n = {n}");
        }
    }

    #[test]
    fn theta_root_counts() {
        assert_eq!(theta_roots(&r(-1, 1), 6).len(), 1);
        assert_eq!(theta_roots(&r(1, 2), 4).len(), 2);
        assert_eq!(theta_roots(&r(1, 2), 2).len(), 1);
        for n in 2..=40 {
            for a in [r(-1, 1), r(1, 2), r(-2, 5), r(3, 2), r(7, 3)] {
                let roots = theta_roots(&a, n);
                assert!(roots.len() as i64 >= count_lower_bound(&a, n));
                for t in roots {
                    assert!(f_n_value(&a, n, t).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn theta_roots_are_roots_of_the_polynomial() {
        let a = r(-1, 1);
        for t in theta_roots(&a, 12) {
            let z = theta_to_point(t);
            let w = num_complex::Complex64::new(1.0, 0.0) - z;
            let k = z.powi(12) + w.powi(12) + 1.0;
            assert!(k.norm() / (2.0 * z.norm().powi(12)) < 1e-9);
        }
    }

    #[test]
    fn density() {
        let audit = density_audit(&r(-1, 1), 30);
        assert!(audit.verdict);
        assert!(audit.rows.last().unwrap().max_gap <= PI / 30.0 + 1e-9);
        assert!(density_audit(&r(1, 2), 16).verdict);
    }
}
