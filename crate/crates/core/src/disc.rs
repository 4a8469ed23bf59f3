//! Discriminants of `K_{6m}` and the square factor `S`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kfamily::k_minus_one;
use crate::polycore::{discriminant, exact_sqrt, is_perfect_square};

/// Largest `m` for which the exact discriminant is computed.
pub const MAX_EXACT_M: u32 = 5;

#[derive(Clone, Debug, Serialize)]
pub struct DiscReport {
    pub m: u32,
    #[serde(serialize_with = "crate::report::big_as_string")]
    pub disc: BigInt,
    /// `(-1)^m (6m)^(6m) (2^(6m-1) + 1)`
    #[serde(serialize_with = "crate::report::big_as_string")]
    pub base: BigInt,
    /// `|S|` with `disc = base * S^2`
    #[serde(serialize_with = "crate::report::big_as_string")]
    pub s_abs: BigInt,
    /// `prod_{j=1}^{3m-1} (1 + (1 + ζ^j)^(6m-1))`, `ζ = e^(2πi/(6m-1))`
    pub s_numeric: f64,
    pub s_numeric_imag: f64,
    pub relative_gap: f64,
}

pub fn disc_base(m: u32) -> BigInt {
    let n = 6 * m as usize;
    let sign = if m.is_multiple_of(2) { 1 } else { -1 };
    let two_part: BigInt = (BigInt::from(1) << (n - 1)) + 1;
    BigInt::from(sign) * num_traits::pow(BigInt::from(n), n) * two_part
}

fn s_product(m: u32) -> Complex64 {
    let order = 6 * m as i32 - 1;
    let zeta = Complex64::from_polar(1.0, std::f64::consts::TAU / order as f64);
    (1..3 * m as i32)
        .map(|j| Complex64::new(1.0, 0.0) + (zeta.powi(j) + 1.0).powi(order))
        .product()
}

pub fn disc_report(m: u32) -> Result<DiscReport> {
    if !(1..=MAX_EXACT_M).contains(&m) {
        return Err(Error::Precondition(format!(
            "m must be in 1..={MAX_EXACT_M}, got {m}"
        )));
    }
    let disc = discriminant(&k_minus_one(6 * m))?;
    let base = disc_base(m);
    if !(&disc % &base).is_zero() {
        return Err(Error::Invariant(format!(
            "base {base} does not divide disc {disc}"
        )));
    }
    let quotient = &disc / &base;
    let s_abs = exact_sqrt(&quotient)
        .ok_or_else(|| Error::Invariant(format!("disc / base = {quotient} is not a square")))?;
    let s = s_product(m);
    let s_f = s_abs.to_f64().unwrap_or(f64::INFINITY);
    let relative_gap = (s.re.abs() - s_f).abs() / s_f;
    Ok(DiscReport {
        m,
        disc,
        base,
        s_abs,
        s_numeric: s.re,
        s_numeric_imag: s.im,
        relative_gap,
    })
}

/// The Galois group of `K_{6m}` contains an odd permutation: the
/// discriminant is not a square. Beyond the exact range the sufficient
/// condition "2^(6m-1) + 1 is not a square" is checked instead.
pub fn odd_permutation_check(m: u32) -> Result<bool> {
    if m == 0 {
        return Err(Error::Precondition("m must be positive".into()));
    }
    if m <= MAX_EXACT_M {
        let d = disc_report(m)?.disc;
        return Ok(d.is_negative() || !is_perfect_square(&d));
    }
    let two_part: BigInt = (BigInt::from(1) << (6 * m as usize - 1)) + 1;
    Ok(!is_perfect_square(&two_part))
}

#[derive(Clone, Debug, Serialize)]
pub struct CriticalPoint {
    pub j: u32,
    pub re: f64,
    pub im: f64,
    pub residual: f64,
}

/// `K'_{6m}` at `ζ^j / (1 + ζ^j)`, relative residuals.
pub fn critical_points(m: u32) -> Result<Vec<CriticalPoint>> {
    if !(1..=MAX_EXACT_M).contains(&m) {
        return Err(Error::Precondition(format!(
            "m must be in 1..={MAX_EXACT_M}, got {m}"
        )));
    }
    let n = 6 * m as i32;
    let order = n - 1;
    let zeta = Complex64::from_polar(1.0, std::f64::consts::TAU / order as f64);
    Ok((1..order)
        .map(|j| {
            let zj = zeta.powi(j);
            let z = zj / (zj + 1.0);
            let w = Complex64::new(1.0, 0.0) - z;
            let value = (z.powi(n - 1) - w.powi(n - 1)) * n as f64;
            let scale = n as f64 * (z.norm().powi(n - 1) + w.norm().powi(n - 1));
            CriticalPoint {
                j: j as u32,
                re: z.re,
                im: z.im,
                residual: value.norm() / scale,
            }
        })
        .collect())
}

pub fn critical_points_check(m: u32) -> Result<bool> {
    Ok(critical_points(m)?.iter().all(|c| c.residual < 1e-8))
}
