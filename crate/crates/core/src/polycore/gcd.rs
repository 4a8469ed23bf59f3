//! Subresultant polynomial remainder sequences over the integers.
//!
//! All intermediate divisions are exact; coefficient growth stays
//! polynomial in the input size.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

/// One subresultant step: given `(a, b, g, h)` returns the next remainder
/// `prem(a, b) / (g h^delta)` and the updated `(g, h)`.
fn subresultant_step(
    a: &IntPoly,
    b: &IntPoly,
    g: &BigInt,
    h: &BigInt,
) -> (IntPoly, BigInt, BigInt) {
    let delta = (a.deg() - b.deg()) as u32;
    let r = a.pseudo_rem(b);
    let divisor = g * num_traits::pow(h.clone(), delta as usize);
    let r = r
        .div_scalar_exact(&divisor)
        .expect("subresultant division is exact");
    let g_next = b.lc().clone();
    let h_next = if delta == 0 {
        h.clone()
    } else {
        let num = num_traits::pow(g_next.clone(), delta as usize);
        let den = num_traits::pow(h.clone(), delta as usize - 1);
        debug_assert!((&num % &den).is_zero());
        num / den
    };
    (r, g_next, h_next)
}

/// Greatest common divisor in `Z[x]`, normalised to be primitive with a
/// positive leading coefficient.
///
/// `gcd(P, 0)` is the primitive part of `P`. Both arguments zero is an
/// error.
pub fn subresultant_gcd(p: &IntPoly, q: &IntPoly) -> Result<IntPoly> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => return Err(Error::ZeroPolynomial("gcd(0, 0)")),
        (false, true) => return Ok(p.primitive_part()),
        (true, false) => return Ok(q.primitive_part()),
        _ => {}
    }
    let (mut a, mut b) = if p.deg() >= q.deg() {
        (p.primitive_part(), q.primitive_part())
    } else {
        (q.primitive_part(), p.primitive_part())
    };
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        if b.is_constant() {
            return Ok(IntPoly::one());
        }
        let (r, g2, h2) = subresultant_step(&a, &b, &g, &h);
        if r.is_zero() {
            return Ok(b.primitive_part());
        }
        a = b;
        b = r;
        g = g2;
        h = h2;
    }
}

/// Resultant of two nonzero integer polynomials, via the subresultant PRS.
pub fn resultant(p: &IntPoly, q: &IntPoly) -> Result<BigInt> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial("resultant"));
    }
    let (dp, dq) = (p.deg(), q.deg());
    if dq == 0 {
        return Ok(num_traits::pow(q.lc().clone(), dp));
    }
    if dp == 0 {
        return Ok(num_traits::pow(p.lc().clone(), dq));
    }

    let mut a = p.clone();
    let mut b = q.clone();
    let mut sign_negative = false;
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
        if dp % 2 == 1 && dq % 2 == 1 {
            sign_negative = true;
        }
    }
    let ca = a.content()?;
    let cb = b.content()?;
    let t = num_traits::pow(ca.clone(), b.deg()) * num_traits::pow(cb.clone(), a.deg());
    a = a.div_scalar_exact(&ca)?;
    b = b.div_scalar_exact(&cb)?;

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            sign_negative = !sign_negative;
        }
        let (r, g2, h2) = subresultant_step(&a, &b, &g, &h);
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        a = b;
        b = r;
        g = g2;
        h = h2;
        if b.deg() == 0 {
            break;
        }
    }
    let da = a.deg();
    // h^(1 - da) * lc(b)^da, exact for da >= 1
    let num = num_traits::pow(b.lc().clone(), da);
    let den = num_traits::pow(h, da - 1);
    debug_assert!((&num % &den).is_zero());
    let res = t * (num / den);
    Ok(if sign_negative { -res } else { res })
}

/// `(-1)^(d(d-1)/2) res(P, P') / lc(P)`.
pub fn discriminant(p: &IntPoly) -> Result<BigInt> {
    let d = match p.degree() {
        None => return Err(Error::ZeroPolynomial("discriminant")),
        Some(0) => {
            return Err(Error::Precondition(
                "discriminant of a constant polynomial".into(),
            ))
        }
        Some(d) => d,
    };
    if d == 1 {
        return Ok(BigInt::one());
    }
    let res = resultant(p, &p.derivative())?;
    let lc = p.lc();
    if !(&res % lc).is_zero() {
        return Err(Error::InexactDivision(format!(
            "res(P, P') = {res} by lc = {lc}"
        )));
    }
    let q = res / lc;
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -q } else { q })
}

/// True iff `P` has no repeated factor over `Q`.
pub fn is_squarefree(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("square-freeness"));
    }
    let g = subresultant_gcd(p, &p.derivative())?;
    Ok(g.deg() == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn k(n: u32) -> IntPoly {
        crate::kfamily::k_minus_one(n)
    }

    #[test]
    fn gcd_of_k7_and_derivative() {
        // K7 = 7x(x-1)(x^2-x+1)^2
        let g = subresultant_gcd(&k(7), &k(7).derivative()).unwrap();
        assert_eq!(g, p(&[1, -1, 1]));
    }

    #[test]
    fn gcd_edge_cases() {
        let q = p(&[-4, 0, 6]);
        assert_eq!(
            subresultant_gcd(&q, &IntPoly::zero()).unwrap(),
            p(&[-2, 0, 3])
        );
        assert_eq!(
            subresultant_gcd(&k(6), &k(6).derivative()).unwrap(),
            IntPoly::one()
        );
        assert!(subresultant_gcd(&IntPoly::zero(), &IntPoly::zero()).is_err());
        // gcd((x-1)(x+2), (x-1)(2x+3)) = x - 1
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[3, 2]);
        assert_eq!(subresultant_gcd(&a, &b).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(
            resultant(&p(&[-2, 1]), &p(&[1, 0, 1])).unwrap(),
            BigInt::from(5)
        );
        let c = p(&[3]);
        let q = p(&[1, 2, 3, 4]);
        assert_eq!(resultant(&q, &c).unwrap(), BigInt::from(27));
        assert_eq!(resultant(&c, &q).unwrap(), BigInt::from(27));
        assert!(resultant(&IntPoly::zero(), &q).is_err());
        // common root gives zero
        assert!(resultant(&p(&[-1, 1]), &p(&[-1, 0, 1])).unwrap().is_zero());
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&p(&[1, -1, 1])).unwrap(), BigInt::from(-3));
        assert_eq!(discriminant(&p(&[-1, 0, 1])).unwrap(), BigInt::from(4));
        assert_eq!(discriminant(&k(6)).unwrap(), BigInt::from(-186_297_408i64));
        assert!(discriminant(&p(&[7])).is_err());
        // cubic: x^3 + x + 1 has disc -4 - 27 = -31
        assert_eq!(discriminant(&p(&[1, 1, 0, 1])).unwrap(), BigInt::from(-31));
    }

    #[test]
    fn squarefree_detection() {
        assert!(!is_squarefree(&p(&[0, 0, 1])).unwrap());
        assert!(!is_squarefree(&k(7)).unwrap());
        assert!(is_squarefree(&k(6)).unwrap());
    }
}
