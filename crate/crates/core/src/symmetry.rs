//! The order-6 group `H` of Moebius maps and the functional equations of
//! `K_n` and `K~_n`.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kfamily::{k_minus_one, k_tilde, k_tilde_at_zero, trivial_multiplicities};
use crate::polycore::{
    divisors, euler_phi, homogenize_at_one_minus_x, squarefree_integer, subresultant_gcd,
    substitute_pair, CyclotomicTable, IntPoly,
};

/// `x -> (a x + b) / (c x + d)`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Moebius {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Moebius {
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Moebius { a, b, c, d }
    }

    pub const fn identity() -> Self {
        Moebius::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    /// `self ∘ other`, i.e. `x -> self(other(x))`; the matrix product.
    pub fn compose(&self, other: &Moebius) -> Moebius {
        Moebius::new(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )
    }

    /// Same projective map: the matrices differ by a nonzero scalar.
    pub fn projectively_eq(&self, other: &Moebius) -> bool {
        let s = [self.a, self.b, self.c, self.d];
        let o = [other.a, other.b, other.c, other.d];
        (0..4).all(|i| (0..4).all(|j| s[i] * o[j] == s[j] * o[i]))
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        let num = z * self.a as f64 + self.b as f64;
        let den = z * self.c as f64 + self.d as f64;
        num / den
    }
}

impl fmt::Display for Moebius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = H_NAMES
            .iter()
            .zip(H_ELEMENTS.iter())
            .find(|(_, m)| m.projectively_eq(self))
            .map(|(n, _)| *n);
        match name {
            Some(n) => write!(f, "x -> {n}"),
            None => write!(
                f,
                "x -> ({}x + {})/({}x + {})",
                self.a, self.b, self.c, self.d
            ),
        }
    }
}

pub const H_ELEMENTS: [Moebius; 6] = [
    Moebius::new(1, 0, 0, 1),
    Moebius::new(-1, 1, 0, 1),
    Moebius::new(0, 1, 1, 0),
    Moebius::new(1, 0, 1, -1),
    Moebius::new(0, 1, -1, 1),
    Moebius::new(1, -1, 1, 0),
];

pub const H_NAMES: [&str; 6] = ["x", "1-x", "1/x", "x/(x-1)", "1/(1-x)", "(x-1)/x"];

#[derive(Clone, Debug, Serialize)]
pub struct HGroup {
    pub elements: [Moebius; 6],
    /// `cayley[i][j]` is the index of `elements[i] ∘ elements[j]`.
    pub cayley: [[usize; 6]; 6],
}

impl HGroup {
    pub fn build() -> Result<HGroup> {
        let mut cayley = [[0usize; 6]; 6];
        for (i, f) in H_ELEMENTS.iter().enumerate() {
            for (j, g) in H_ELEMENTS.iter().enumerate() {
                let fg = f.compose(g);
                cayley[i][j] = H_ELEMENTS
                    .iter()
                    .position(|h| h.projectively_eq(&fg))
                    .ok_or_else(|| Error::Invariant(format!("{f} ∘ {g} leaves H")))?;
            }
        }
        Ok(HGroup {
            elements: H_ELEMENTS,
            cayley,
        })
    }

    pub fn order_of(&self, i: usize) -> usize {
        let mut k = 1;
        let mut cur = i;
        while cur != 0 {
            cur = self.cayley[cur][i];
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..6).all(|i| (0..6).all(|j| self.cayley[i][j] == self.cayley[j][i]))
    }
}

/// Closure, inverses, non-commutativity, and the `S_3` element orders.
pub fn verify_h_group() -> bool {
    let Ok(h) = HGroup::build() else {
        return false;
    };
    let has_inverses = (0..6).all(|i| (0..6).any(|j| h.cayley[i][j] == 0 && h.cayley[j][i] == 0));
    let mut orders: Vec<usize> = (0..6).map(|i| h.order_of(i)).collect();
    orders.sort_unstable();
    has_inverses && !h.is_abelian() && orders == [1, 2, 2, 2, 3, 3]
}

fn require_nontrivial(n: u32) -> Result<IntPoly> {
    let r = k_tilde(n)?;
    if r.d_n == 0 {
        return Err(Error::Precondition(format!("K~_{n} is constant")));
    }
    Ok(r.poly)
}

/// `substitute_pair(K~_n, M) = K~_n` for all six `M`.
pub fn verify_sym_identity(n: u32) -> Result<bool> {
    let p = require_nontrivial(n)?;
    for m in &H_ELEMENTS {
        if substitute_pair(&p, m)? != p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `K_n(x) = K_n(1-x) = (-x)^n K_n(1/x)`.
pub fn eq_symkn_check(n: u32) -> Result<bool> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "n must be at least 2, got {n}"
        )));
    }
    let k = k_minus_one(n);
    let flipped = substitute_pair(&k, &H_ELEMENTS[1])?;
    let mut reversed = k.reversed_with_width(n as usize);
    if n % 2 == 1 {
        reversed = -reversed;
    }
    Ok(flipped == k && reversed == k)
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorSymmetryReport {
    pub n: u32,
    #[serde(serialize_with = "crate::report::big_as_string")]
    pub k_tilde_at_zero: BigInt,
    pub holds: bool,
    pub n_even: bool,
    pub n_squarefree: bool,
    pub n_prime_square: bool,
}

/// Whether `K~_n(0)` is square-free, plus the sufficient conditions on `n`.
pub fn factor_symmetry_hypothesis(n: u32) -> Result<FactorSymmetryReport> {
    require_nontrivial(n)?;
    let k0 = k_tilde_at_zero(&k_tilde(n)?);
    let root = (n as f64).sqrt().round() as u32;
    Ok(FactorSymmetryReport {
        n,
        holds: squarefree_integer(&k0)?,
        k_tilde_at_zero: k0,
        n_even: n.is_multiple_of(2),
        n_squarefree: squarefree_integer(&BigInt::from(n))?,
        n_prime_square: root * root == n && crate::polycore::is_prime_u64(root as u64),
    })
}

/// `gcd(K~_n, Phi_d) = 1` for every `1 <= d <= d_max`.
pub fn cyclotomic_coprime(n: u32, d_max: u32) -> Result<bool> {
    let p = require_nontrivial(n)?;
    let mut table = CyclotomicTable::new();
    for d in 1..=d_max {
        if subresultant_gcd(&p, table.get(d)?)?.deg() > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `x^(n-1) - (1-x)^(n-1) = prod_{d | n-1} Phi_d(x, 1-x)` and
/// `deg Phi_d(x, 1-x) = phi(d)` for each `d != 2`.
pub fn phi_homog_identities(n: u32) -> Result<bool> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "n must be at least 3, got {n}"
        )));
    }
    let m = n - 1;
    let mut table = CyclotomicTable::new();
    let mut product = IntPoly::one();
    for d in divisors(m) {
        let h = homogenize_at_one_minus_x(table.get(d)?);
        if d != 2 && h.deg() as u32 != euler_phi(d) {
            return Ok(false);
        }
        product = &product * &h;
    }
    let target = &IntPoly::monomial(BigInt::one(), m as usize)
        - &crate::polycore::linear_power(&BigInt::one(), &-BigInt::one(), m);
    Ok(product == target)
}

/// `deg Phi_d(x, 1-x)`.
pub fn homogenized_cyclotomic_degree(d: u32) -> Result<usize> {
    let mut table = CyclotomicTable::new();
    Ok(homogenize_at_one_minus_x(table.get(d)?)
        .degree()
        .unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdAnalysis {
    pub g: IntPoly,
    pub k: u32,
}

/// `G = gcd(K_n, K_n') = (x^2 - x + 1)^k`, with `G | x^(n-1) + (-1)^n`.
pub fn gcd_kprime_analysis(n: u32) -> Result<GcdAnalysis> {
    let kn = k_minus_one(n);
    let g = subresultant_gcd(&kn, &kn.derivative())?;
    let cyc = IntPoly::from_i64s(&[1, -1, 1]);
    let mut rest = g.clone();
    let mut k = 0u32;
    while rest.deg() > 0 {
        rest = rest.div_exact(&cyc).map_err(|_| {
            Error::Invariant(format!(
                "gcd(K_{n}, K_{n}') = {g} is not a power of x^2 - x + 1"
            ))
        })?;
        k += 1;
    }
    let sign = if n.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let target = &IntPoly::monomial(BigInt::one(), n as usize - 1) + &IntPoly::constant(sign);
    if !g.divides(&target) {
        return Err(Error::Invariant(format!("{g} does not divide {target}")));
    }
    let expected = trivial_multiplicities(n)?.mult_cyc.saturating_sub(1);
    if k != expected {
        return Err(Error::Invariant(format!(
            "n = {n}: k = {k}, expected {expected}"
        )));
    }
    Ok(GcdAnalysis { g, k })
}

/// Every image of every root under `H` lies within `tol` of some root.
pub fn h_orbit_closed(roots: &[Complex64], tol: f64) -> bool {
    roots.iter().all(|&z| {
        H_ELEMENTS.iter().all(|m| {
            let w = m.apply(z);
            w.is_finite() && roots.iter().any(|r| (r - w).norm() < tol)
        })
    })
}
