//! Exact arithmetic over `Z[x]`.

mod arith;
mod cyclotomic;
mod gcd;
mod intpoly;
mod rational;
mod rational_roots;

use num_bigint::BigInt;

pub use arith::{
    big_mod_u64, exact_sqrt, factorial, is_perfect_square, is_prime_u64, mul_mod, pow_mod,
    primes_in, require_prime, squarefree_integer,
};
pub use cyclotomic::{cyclotomic, divisors, euler_phi, CyclotomicTable};
pub use gcd::{discriminant, is_squarefree, resultant, subresultant_gcd};
pub use intpoly::{binomial_row, linear_power, IntPoly};
pub use rational::RatScalar;
pub use rational_roots::{rational_roots, simplest_between};

use crate::error::{Error, Result};
use crate::symmetry::Moebius;

/// Positive gcd of the coefficients.
pub fn content(p: &IntPoly) -> Result<BigInt> {
    p.content()
}

/// `(cx + d)^deg P * P((ax + b)/(cx + d))` for `M = (a b; c d)`.
///
/// Substitution is contravariant: substituting `M1` then `M2` equals
/// substituting the matrix product `M1 M2`, exactly whenever the degree is
/// preserved at each step.
pub fn substitute_pair(p: &IntPoly, m: &Moebius) -> Result<IntPoly> {
    if m.det() == 0 {
        return Err(Error::SingularMoebius);
    }
    let Some(n) = p.degree() else {
        return Ok(IntPoly::zero());
    };
    let u = IntPoly::linear(m.b, m.a);
    let v = IntPoly::linear(m.d, m.c);
    // T_k = T_{k-1} U + p_{n-k} V^k, so T_n = sum p_i U^i V^(n-i)
    let mut acc = IntPoly::constant(p.coeff(n));
    let mut v_pow = IntPoly::one();
    for k in 1..=n {
        v_pow = &v_pow * &v;
        acc = &(&acc * &u) + &v_pow.scale(&p.coeff(n - k));
    }
    Ok(acc)
}

/// `A(x, 1 - x)` where `A(x, y) = y^deg A * A(x / y)`.
pub fn homogenize_at_one_minus_x(p: &IntPoly) -> IntPoly {
    substitute_pair(p, &Moebius::new(1, 0, -1, 1)).expect("nonsingular")
}
