use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::IntPoly;
use crate::error::{Error, Result};

/// Memoised cyclotomic polynomials. `Phi_d` is obtained from `x^d - 1` by
/// exact division by `Phi_e` for every proper divisor `e` of `d`.
#[derive(Debug, Default, Clone)]
pub struct CyclotomicTable {
    cache: BTreeMap<u32, IntPoly>,
}

impl CyclotomicTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, d: u32) -> Result<&IntPoly> {
        if d == 0 {
            return Err(Error::Precondition("cyclotomic index must be >= 1".into()));
        }
        if !self.cache.contains_key(&d) {
            let mut p = &IntPoly::monomial(BigInt::one(), d as usize) - &IntPoly::one();
            for e in divisors(d).into_iter().filter(|&e| e < d) {
                let phi_e = self.get(e)?.clone();
                p = p.div_exact(&phi_e)?;
            }
            self.cache.insert(d, p);
        }
        Ok(&self.cache[&d])
    }
}

/// The `d`-th cyclotomic polynomial.
pub fn cyclotomic(d: u32) -> Result<IntPoly> {
    CyclotomicTable::new().get(d).cloned()
}

/// Positive divisors in ascending order.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u32;
    while (i as u64) * (i as u64) <= n as u64 {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2u32;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}
