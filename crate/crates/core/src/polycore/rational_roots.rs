//! Rational roots of integer polynomials.
//!
//! A rational root `r/s` of a primitive polynomial has `s | lc`. Real roots
//! of the square-free part are isolated exactly with Descartes' rule of
//! signs (Vincent-Collins-Akritas bisection), each isolating interval is
//! shrunk below `1/lc^2`, and the simplest rational in the interval is the
//! only candidate with a small enough denominator. No integer factoring is
//! needed, so coefficient size does not matter.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{gcd::subresultant_gcd, IntPoly};
use crate::error::{Error, Result};

/// All distinct rational roots in ascending order, each verified by exact
/// evaluation.
pub fn rational_roots(p: &IntPoly) -> Result<Vec<BigRational>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("rational root scan"));
    }
    let mut roots = Vec::new();

    // strip x^k
    let first_nonzero = p.coeffs().iter().position(|c| !c.is_zero()).unwrap();
    if first_nonzero > 0 {
        roots.push(BigRational::zero());
    }
    let q = IntPoly::new(p.coeffs()[first_nonzero..].to_vec());
    if q.deg() == 0 {
        return Ok(roots);
    }
    // g is primitive, so the quotient is integral
    let g = subresultant_gcd(&q, &q.derivative())?;
    let sqf = q.div_exact(&g)?.primitive_part();

    let bound = sqf.lc().abs();
    let lc_sq = &bound * &bound;
    for neg in [true, false] {
        let poly = if neg {
            sqf.negate_variable()
        } else {
            sqf.clone()
        };
        for root in positive_rational_roots(&poly, &lc_sq) {
            let r = if neg { -root } else { root };
            debug_assert!(p.eval_rational(&r).is_zero());
            roots.push(r);
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// Rational roots in `(0, inf)` of a square-free primitive `p` with
/// `p(0) != 0`.
fn positive_rational_roots(p: &IntPoly, lc_sq: &BigInt) -> Vec<BigRational> {
    let d = p.deg();
    // Cauchy bound 1 + max |a_i / a_d|, rounded up to a power of two.
    let lc = p.lc().abs();
    let max_ratio = p
        .coeffs()
        .iter()
        .take(d)
        .map(|c| c.abs().div_ceil(&lc))
        .max()
        .unwrap_or_default();
    let mut k = 0u32;
    while BigInt::one() << k <= max_ratio.clone() + 1u32 {
        k += 1;
    }
    let scale = BigInt::one() << k;

    // Q(x) = P(scale * x), roots in (0, 1)
    let scaled = IntPoly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c * num_traits::pow(scale.clone(), i))
            .collect(),
    );

    let mut found = Vec::new();
    let mut intervals = Vec::new();
    // (poly on (0,1), c, depth): represents (c/2^depth, (c+1)/2^depth) of the
    // scaled variable
    let mut stack: Vec<(IntPoly, BigInt, u32)> = vec![(scaled, BigInt::zero(), 0)];
    while let Some((mut r, c, depth)) = stack.pop() {
        if r.coeff(0).is_zero() {
            // root exactly at the left endpoint c / 2^depth
            let x = BigRational::new(c.clone(), BigInt::one() << depth);
            found.push(x * BigRational::from_integer(scale.clone()));
            r = IntPoly::new(r.coeffs()[1..].to_vec());
        }
        match sign_variations_on_unit_interval(&r) {
            0 => {}
            1 => intervals.push((
                BigRational::new(c.clone(), BigInt::one() << depth),
                BigRational::new(c.clone() + 1u32, BigInt::one() << depth),
            )),
            _ => {
                let deg = r.deg();
                // left half: 2^deg R(x/2)
                let left = IntPoly::new(
                    r.coeffs()
                        .iter()
                        .enumerate()
                        .map(|(i, a)| a << (deg - i))
                        .collect(),
                );
                let right = left.taylor_shift(&BigInt::one());
                stack.push((right, 2 * &c + 1u32, depth + 1));
                stack.push((left, 2 * c, depth + 1));
            }
        }
    }

    let scale_q = BigRational::from_integer(scale);
    let threshold = BigRational::new(BigInt::one(), lc_sq.clone());
    for (lo, hi) in intervals {
        let (mut lo, mut hi) = (lo * &scale_q, hi * &scale_q);
        // sign just right of lo; p is square-free, so p' decides at a root
        let sign_lo = match sign(&p.eval_rational(&lo)) {
            0 => sign(&p.derivative().eval_rational(&lo)),
            s => s,
        };
        let mut exact = None;
        while &hi - &lo >= threshold {
            let mid = (&lo + &hi) / BigRational::from_integer(2.into());
            let s = sign(&p.eval_rational(&mid));
            if s == 0 {
                exact = Some(mid);
                break;
            }
            if s == sign_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        if let Some(x) = exact {
            found.push(x);
            continue;
        }
        let candidate = simplest_between(&lo, &hi);
        if p.eval_rational(&candidate).is_zero() {
            found.push(candidate);
        }
    }
    found
}

fn sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Descartes bound on the number of roots in `(0, 1)`: sign variations of
/// `(x+1)^d R(1/(x+1))`.
fn sign_variations_on_unit_interval(r: &IntPoly) -> usize {
    let t = r.reciprocal().taylor_shift(&BigInt::one());
    let mut last = 0i8;
    let mut count = 0;
    for c in t.coeffs() {
        let s = if c.is_zero() {
            continue;
        } else if c.is_positive() {
            1
        } else {
            -1
        };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// The rational with the smallest denominator in the closed interval
/// `[lo, hi]`, `lo <= hi`.
pub fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    debug_assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return BigRational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let next = &fl + BigRational::one();
    if &next <= hi {
        return next;
    }
    // fl < lo <= hi < fl + 1
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}
