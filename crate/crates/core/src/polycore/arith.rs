//! Integer helpers: square-freeness, perfect squares, small primes,
//! modular exponentiation.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// True iff no prime square divides `|n|`. Trial division; meant for the
/// small values that occur as constant terms.
pub fn squarefree_integer(n: &BigInt) -> Result<bool> {
    if n.is_zero() {
        return Err(Error::Precondition("square-freeness of 0".into()));
    }
    let mut m = n.abs();
    if let Some(small) = m.to_u64() {
        return Ok(squarefree_u64(small));
    }
    let mut d = BigInt::from(2u32);
    while &d * &d <= m {
        if (&m % &d).is_zero() {
            m /= &d;
            if (&m % &d).is_zero() {
                return Ok(false);
            }
        }
        d += 1u32;
    }
    Ok(true)
}

fn squarefree_u64(mut m: u64) -> bool {
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return false;
            }
        }
        d += 1;
    }
    true
}

/// `Some(r)` with `r >= 0` and `r^2 = n`, else `None`.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    exact_sqrt(n).is_some()
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    // deterministic Miller-Rabin for 64-bit inputs
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn require_prime(p: u64) -> Result<()> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    result
}

/// Primes `p` with `lo <= p < hi`, by a sieve of Eratosthenes.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi <= 2 {
        return Vec::new();
    }
    let n = hi as usize;
    let mut composite = vec![false; n];
    let mut out = Vec::new();
    for i in 2..n {
        if composite[i] {
            continue;
        }
        if i as u64 >= lo {
            out.push(i as u64);
        }
        let mut j = i * i;
        while j < n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// `(x mod m)` in `[0, m)` for a signed big integer.
pub fn big_mod_u64(x: &BigInt, m: u64) -> u64 {
    let r = x % BigInt::from(m);
    let r = if r.is_negative() {
        r + BigInt::from(m)
    } else {
        r
    };
    r.to_u64().expect("residue fits in u64")
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}
