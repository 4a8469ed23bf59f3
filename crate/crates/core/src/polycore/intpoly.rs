use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial over the integers.
///
/// `coeffs[i]` is the coefficient of `x^i`. The highest stored coefficient
/// is always nonzero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `c0 + c1 x`
    pub fn linear(c0: impl Into<BigInt>, c1: impl Into<BigInt>) -> Self {
        Self::new(vec![c0.into(), c1.into()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial mapped to 0. Only use where the
    /// zero polynomial has been excluded or does not matter.
    pub(crate) fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub(crate) fn lc(&self) -> &BigInt {
        self.coeffs
            .last()
            .expect("leading coefficient of zero polynomial")
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        // Horner on num/den, clearing denominators: sum c_i num^i den^(d-i)
        let num = x.numer();
        let den = x.denom();
        let Some(d) = self.degree() else {
            return BigRational::zero();
        };
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        // den_pow = den^(d+1) now; the sum carries den^d
        BigRational::new(acc, num_traits::pow(den.clone(), d))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// gcd of all coefficients, always positive.
    pub fn content(&self) -> Result<BigInt> {
        if self.is_zero() {
            return Err(Error::ZeroContent);
        }
        Ok(self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c)))
    }

    /// `self / content`, with the sign chosen so the leading coefficient
    /// is positive. The zero polynomial maps to itself.
    pub fn primitive_part(&self) -> Self {
        let Ok(mut c) = self.content() else {
            return Self::zero();
        };
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
            .expect("content divides every coefficient")
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_ok_and(|c| c.is_one())
    }

    pub fn div_scalar_exact(&self, k: &BigInt) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::InexactDivision("division by zero scalar".into()));
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("{c} by {k}")));
            }
            out.push(q);
        }
        Ok(Self::new(out))
    }

    /// Quotient and remainder for a divisor whose leading coefficient
    /// divides every intermediate leading term. Fails otherwise.
    pub fn div_rem_exact(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::InexactDivision("division by zero polynomial".into()));
        };
        let lc = divisor.lc();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (q, r) = rem[i].div_rem(lc);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "leading term {} not divisible by {lc}",
                    rem[i]
                )));
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] -= &q * dc;
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Exact quotient; a nonzero remainder is an error.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.div_rem_exact(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!(
                "({self}) by ({divisor}) leaves remainder {r}"
            )));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &IntPoly) -> bool {
        // Work over Q: pseudo-remainder vanishes iff self | other in Q[x].
        !self.is_zero() && other.pseudo_rem(self).is_zero()
    }

    /// `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo-remainder by zero polynomial");
        let Some(da) = self.degree() else {
            return IntPoly::zero();
        };
        if da < db {
            return self.clone();
        }
        let lc = b.lc();
        let mut r = self.coeffs.clone();
        let mut top = da;
        loop {
            let t = r[top].clone();
            for c in r.iter_mut().take(top + 1) {
                *c *= lc;
            }
            if !t.is_zero() {
                for (j, bc) in b.coeffs.iter().enumerate() {
                    r[top - db + j] -= &t * bc;
                }
            }
            if top == db {
                break;
            }
            top -= 1;
        }
        r.truncate(db);
        IntPoly::new(r)
    }

    /// `P(x + shift)`, by repeated synthetic division.
    pub fn taylor_shift(&self, shift: &BigInt) -> IntPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        if shift.is_zero() || n < 2 {
            return self.clone();
        }
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let t = &c[j + 1] * shift;
                c[j] += t;
            }
        }
        IntPoly::new(c)
    }

    /// `x^d P(1/x)` with `d = degree`; the reciprocal polynomial.
    pub fn reciprocal(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::new(c)
    }

    /// `x^width P(1/x)` for an explicit `width >= degree`.
    pub fn reversed_with_width(&self, width: usize) -> IntPoly {
        assert!(self.deg() <= width || self.is_zero());
        let mut c = vec![BigInt::zero(); width + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[width - i] = a.clone();
        }
        IntPoly::new(c)
    }

    /// `P(-x)`
    pub fn negate_variable(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Binomial coefficients `C(n, 0..=n)`.
pub fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(c.clone());
    }
    row
}

/// `(c0 + c1 x)^n` expanded.
pub fn linear_power(c0: &BigInt, c1: &BigInt, n: u32) -> IntPoly {
    let row = binomial_row(n);
    let mut p0 = vec![BigInt::one(); n as usize + 1];
    let mut p1 = vec![BigInt::one(); n as usize + 1];
    for i in 1..=n as usize {
        p0[i] = &p0[i - 1] * c0;
        p1[i] = &p1[i - 1] * c1;
    }
    IntPoly::new(
        (0..=n as usize)
            .map(|i| &row[i] * &p1[i] * &p0[n as usize - i])
            .collect(),
    )
}
