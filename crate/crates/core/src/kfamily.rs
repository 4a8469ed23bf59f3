//! The family `K_{a,n}(x) = x^n + (1-x)^n + a^n` and its reduced form.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::modp::reduce;
use crate::polycore::{
    factorial, is_prime_u64, is_squarefree, linear_power, rational_roots, IntPoly, RatScalar,
};

/// Parameters `(a, n)` of `K_{a,n}`, with `n >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KFamilySpec {
    pub a: RatScalar,
    pub n: u32,
}

impl KFamilySpec {
    pub fn new(a: RatScalar, n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!(
                "n must be at least 2, got {n}"
            )));
        }
        Ok(KFamilySpec { a, n })
    }

    /// `a = -1`
    pub fn fermat(n: u32) -> Result<Self> {
        Self::new(RatScalar::integer(-1), n)
    }
}

/// Multiplicities of `x`, `x - 1`, `x^2 - x + 1` in `K_n`, and its content.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivialFactorLedger {
    pub mult_x: u32,
    pub mult_xm1: u32,
    pub mult_cyc: u32,
    #[serde(serialize_with = "crate::report::big_as_string")]
    pub content: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTildeRecord {
    pub n: u32,
    pub poly: IntPoly,
    pub ledger: TrivialFactorLedger,
    pub d_n: usize,
    pub b_n: usize,
}

/// `den^n K_{a,n}`, the smallest integer multiple.
pub fn k_general(spec: &KFamilySpec) -> IntPoly {
    let n = spec.n;
    let num = spec.a.num();
    let den = spec.a.den();
    let den_n = num_traits::pow(den.clone(), n as usize);
    let x_n = IntPoly::monomial(den_n.clone(), n as usize);
    let one_minus_x_n = linear_power(&BigInt::one(), &-BigInt::one(), n).scale(&den_n);
    let a_n = IntPoly::constant(num_traits::pow(num.clone(), n as usize));
    &(&x_n + &one_minus_x_n) + &a_n
}

/// `K_n = K_{-1,n}`. Panics for `n < 2`.
pub fn k_minus_one(n: u32) -> IntPoly {
    k_general(&KFamilySpec::fermat(n).expect("n >= 2"))
}

/// Closed formula for the degree of the reduced polynomial.
pub fn d_n_formula(n: u32) -> usize {
    if n % 6 == 1 {
        (n - 7) as usize
    } else {
        6 * (n / 6) as usize
    }
}

pub fn trivial_multiplicities(n: u32) -> Result<TrivialFactorLedger> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "n must be at least 2, got {n}"
        )));
    }
    let (mult_x, mult_xm1, mult_cyc) = match n % 6 {
        0 => (0, 0, 0),
        1 => (1, 1, 2),
        2 => (0, 0, 1),
        3 => (1, 1, 0),
        4 => (0, 0, 2),
        _ => (1, 1, 1),
    };
    Ok(TrivialFactorLedger {
        mult_x,
        mult_xm1,
        mult_cyc,
        content: k_minus_one(n).content()?,
    })
}

/// `K_n` with the factors `x`, `x - 1`, `x^2 - x + 1` and the content
/// divided out. Every division is checked to be exact.
pub fn k_tilde(n: u32) -> Result<KTildeRecord> {
    let ledger = trivial_multiplicities(n)?;
    let mut p = k_minus_one(n).div_scalar_exact(&ledger.content)?;
    let cyc = IntPoly::from_i64s(&[1, -1, 1]);
    for _ in 0..ledger.mult_x {
        p = p.div_exact(&IntPoly::x())?;
    }
    for _ in 0..ledger.mult_xm1 {
        p = p.div_exact(&IntPoly::from_i64s(&[-1, 1]))?;
    }
    for _ in 0..ledger.mult_cyc {
        p = p.div_exact(&cyc)?;
    }
    // the stated multiplicities are exact
    let trivial = [IntPoly::x(), IntPoly::from_i64s(&[-1, 1]), cyc];
    if let Some(f) = trivial.iter().find(|f| f.divides(&p)) {
        return Err(Error::Invariant(format!("K~_{n} still divisible by {f}")));
    }
    let d_n = p.deg();
    if d_n != d_n_formula(n) {
        return Err(Error::Invariant(format!(
            "deg K~_{n} = {d_n}, formula gives {}",
            d_n_formula(n)
        )));
    }
    Ok(KTildeRecord {
        n,
        poly: p,
        ledger,
        d_n,
        b_n: d_n / 6,
    })
}

/// Number of large primes tried before the exact subresultant test.
const MODULAR_ATTEMPTS: usize = 3;

/// A prime `q` with `deg(P mod q) = deg P` and `gcd(P, P') = 1` over `F_q`.
/// Its existence proves `P` square-free.
pub fn squarefree_witness(p: &IntPoly) -> Result<Option<u64>> {
    let Some(d) = p.degree().filter(|&d| d >= 1) else {
        return Ok(None);
    };
    let primes = (1u64 << 61..1u64 << 62)
        .rev()
        .filter(|&q| is_prime_u64(q))
        .take(MODULAR_ATTEMPTS);
    for q in primes {
        let f = reduce(p, q)?;
        if f.degree() == Some(d) && f.gcd(&f.derivative()).degree() == Some(0) {
            return Ok(Some(q));
        }
    }
    Ok(None)
}

/// Square-freeness: a modular witness when one exists among the first
/// few primes below `2^62`, otherwise the exact subresultant gcd.
pub fn is_squarefree_poly(p: &IntPoly) -> Result<bool> {
    if squarefree_witness(p)?.is_some() {
        return Ok(true);
    }
    is_squarefree(p)
}

/// All rational roots of `P`, each checked by exact evaluation.
pub fn rational_root_scan(p: &IntPoly) -> Result<Vec<RatScalar>> {
    Ok(rational_roots(p)?
        .into_iter()
        .map(RatScalar::from_ratio)
        .collect())
}

/// `6^b * b!` with `b = d_n / 6`.
pub fn galois_bound(n: u32) -> Result<BigInt> {
    let d = d_n_formula(n);
    if n < 2 || d == 0 {
        return Err(Error::Precondition(format!(
            "no nontrivial part for n = {n}"
        )));
    }
    let b = d / 6;
    Ok(num_traits::pow(BigInt::from(6), b) * factorial(b as u64))
}

/// `K~_n(0)`; zero only for the constant cases, which never happens.
pub fn k_tilde_at_zero(record: &KTildeRecord) -> BigInt {
    record
        .poly
        .coeffs()
        .first()
        .cloned()
        .unwrap_or_else(BigInt::zero)
}
