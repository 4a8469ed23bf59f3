//! Polynomials over `F_p`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polycore::{big_mod_u64, mul_mod, pow_mod, require_prime, substitute_pair, IntPoly};
use crate::symmetry::Moebius;

/// Dense polynomial with residues in `[0, p)`, ascending degree, no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    /// Residues are reduced; `p` is trusted to be prime.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        ModPoly {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().expect("zero polynomial has no degree")
    }

    pub fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, self.p) + c) % self.p)
    }

    fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        pow_mod(a, self.p - 2, self.p)
    }

    pub fn add(&self, other: &ModPoly) -> ModPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        ModPoly::new(self.p, c)
    }

    pub fn sub(&self, other: &ModPoly) -> ModPoly {
        self.add(&other.scale(self.p - 1))
    }

    pub fn scale(&self, k: u64) -> ModPoly {
        ModPoly::new(
            self.p,
            self.coeffs.iter().map(|&c| mul_mod(c, k, self.p)).collect(),
        )
    }

    pub fn mul(&self, other: &ModPoly) -> ModPoly {
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(self.p);
        }
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        ModPoly::new(self.p, c)
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &ModPoly) -> (ModPoly, ModPoly) {
        let dd = divisor.deg();
        let inv_lc = self.inv(divisor.leading().unwrap());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (ModPoly::zero(self.p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = mul_mod(rem[k + dd], inv_lc, self.p);
            quot[k] = q;
            if q == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let t = mul_mod(q, d, self.p);
                rem[k + j] = (rem[k + j] + self.p - t) % self.p;
            }
        }
        rem.truncate(dd);
        (ModPoly::new(self.p, quot), ModPoly::new(self.p, rem))
    }

    pub fn rem(&self, divisor: &ModPoly) -> ModPoly {
        self.div_rem(divisor).1
    }

    pub fn monic(&self) -> ModPoly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(self.inv(lc)),
        }
    }

    pub fn gcd(&self, other: &ModPoly) -> ModPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> ModPoly {
        ModPoly::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    /// `self^e mod m`
    pub fn pow_mod(&self, mut e: u64, m: &ModPoly) -> ModPoly {
        let mut result = ModPoly::constant(self.p, 1).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        result
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (mod {})", self.p);
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        write!(f, " (mod {})", self.p)
    }
}

impl fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModPoly({self})")
    }
}

pub fn reduce(poly: &IntPoly, p: u64) -> Result<ModPoly> {
    require_prime(p)?;
    Ok(ModPoly::new(
        p,
        poly.coeffs().iter().map(|c| big_mod_u64(c, p)).collect(),
    ))
}

/// `(root, multiplicity)` pairs in ascending order of root.
pub fn roots_modp(f: &ModPoly) -> Result<Vec<(u64, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("roots mod p"));
    }
    let p = f.modulus();
    let mut out = Vec::new();
    let mut rest = f.clone();
    for r in 0..p {
        if rest.deg() == 0 {
            break;
        }
        if rest.eval(r) != 0 {
            continue;
        }
        let linear = ModPoly::new(p, vec![p - r % p, 1]);
        let mut mult = 0;
        loop {
            let (q, rem) = rest.div_rem(&linear);
            if !rem.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        debug_assert!(mult > 0);
        out.push((r, mult));
    }
    Ok(out)
}

/// Rabin's test: `x^(p^d) = x mod f` and `gcd(x^(p^(d/l)) - x, f) = 1` for
/// each prime `l | d`.
pub fn is_irreducible_modp(f: &ModPoly) -> Result<bool> {
    let d = match f.degree() {
        None | Some(0) => {
            return Err(Error::Precondition(
                "irreducibility needs degree >= 1".into(),
            ))
        }
        Some(d) => d,
    };
    if d == 1 {
        return Ok(true);
    }
    let p = f.modulus();
    let f = f.monic();
    let x = ModPoly::x(p);
    // frob[k] = x^(p^k) mod f
    let mut frob = vec![x.rem(&f)];
    for k in 1..=d {
        let next = frob[k - 1].pow_mod(p, &f);
        frob.push(next);
    }
    if frob[d] != x.rem(&f) {
        return Ok(false);
    }
    for l in prime_factors(d) {
        let g = frob[d / l].sub(&x).gcd(&f);
        if g.deg() > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn splits_completely(f: &ModPoly) -> Result<bool> {
    let d = match f.degree() {
        None | Some(0) => return Err(Error::Precondition("splitting needs degree >= 1".into())),
        Some(d) => d,
    };
    let total: u32 = roots_modp(f)?.iter().map(|&(_, m)| m).sum();
    Ok(total as usize == d)
}

/// Eisenstein's criterion at `p` for `P(x + shift)`.
pub fn eisenstein_check(poly: &IntPoly, p: u64, shift: &BigInt) -> Result<bool> {
    require_prime(p)?;
    if poly.degree().unwrap_or(0) == 0 {
        return Err(Error::Precondition(
            "Eisenstein check needs a nonconstant polynomial".into(),
        ));
    }
    let q = poly.taylor_shift(shift);
    Ok(eisenstein_shape(q.coeffs(), p))
}

/// The raw coefficient conditions, ascending order.
pub fn eisenstein_shape(coeffs: &[BigInt], p: u64) -> bool {
    let pb = BigInt::from(p);
    let p2 = &pb * &pb;
    let (lc, rest) = coeffs.split_last().expect("nonempty");
    !(lc % &pb).is_zero()
        && rest.iter().all(|c| (c % &pb).is_zero())
        && !(&coeffs[0] % &p2).is_zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Trichotomy {
    ZeroReduction,
    UnitTimesCyclotomicQuadratic,
    ReducibleModP,
}

/// Classifies the reduction of a polynomial with `f(x) = f(1-x) = f*(x)`.
pub fn symmetric_reduction_trichotomy(f: &IntPoly, p: u64) -> Result<Trichotomy> {
    require_prime(p)?;
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::Precondition(
            "trichotomy needs a nonconstant polynomial".into(),
        ));
    }
    let one_minus_x = Moebius::new(-1, 1, 0, 1);
    if substitute_pair(f, &one_minus_x)? != *f || !f.is_palindromic() {
        return Err(Error::HypothesisViolated(format!(
            "{f} is not invariant under x -> 1-x and reversal"
        )));
    }
    let fbar = reduce(f, p)?;
    if fbar.is_zero() {
        return Ok(Trichotomy::ZeroReduction);
    }
    if fbar.deg() == 0 {
        return Err(Error::Invariant(format!(
            "symmetric {f} reduced to a nonzero constant mod {p}"
        )));
    }
    if !is_irreducible_modp(&fbar)? {
        return Ok(Trichotomy::ReducibleModP);
    }
    let cyc = IntPoly::from_i64s(&[1, -1, 1]);
    let is_cyc_multiple = f.deg() == 2 && f.primitive_part() == cyc;
    if !is_cyc_multiple || p % 3 != 2 {
        return Err(Error::Invariant(format!(
            "{f} is irreducible mod {p} outside the quadratic case"
        )));
    }
    Ok(Trichotomy::UnitTimesCyclotomicQuadratic)
}

/// Image of `x` under a Moebius map over `F_p`; `None` at a pole.
pub fn moebius_apply_modp(m: &Moebius, x: u64, p: u64) -> Option<u64> {
    let r = |v: i64| v.rem_euclid(p as i64) as u64;
    let num = (mul_mod(r(m.a), x, p) + r(m.b)) % p;
    let den = (mul_mod(r(m.c), x, p) + r(m.d)) % p;
    (den != 0).then(|| mul_mod(num, pow_mod(den, p - 2, p), p))
}
