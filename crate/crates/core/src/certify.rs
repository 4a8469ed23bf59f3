//! Irreducibility certificates and the prime scanner.
//!
//! Every certificate carries enough evidence for [`Certificate::recheck`] to
//! confirm the verdict without repeating any search.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kfamily::k_minus_one;
use crate::modp::{eisenstein_shape, moebius_apply_modp, reduce, roots_modp, splits_completely};
use crate::polycore::{
    big_mod_u64, is_prime_u64, linear_power, pow_mod, primes_in, require_prime, squarefree_integer,
    IntPoly, RatScalar,
};
use crate::symmetry::{factor_symmetry_hypothesis, H_ELEMENTS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CertificateKind {
    HalfInteger2Adic,
    Eisenstein3Shift,
    TwoPowerMod2,
    PPowerCriterion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Evidence {
    Half {
        /// `L(x) = 2^n K_{a,n}(x/2) = x^n + (2-x)^n + (2a)^n`
        l_poly: IntPoly,
        lc_mod_4: u64,
        image_mod_2: Vec<u64>,
    },
    Eisenstein3 {
        /// `6m = 3^a + 3^b`
        decomposition: Option<(u32, u32)>,
        /// coefficients of `K_{6m}(x - 1)`, ascending
        shifted: IntPoly,
        constant_mod_9: u64,
    },
    TwoPower {
        /// `m = 2^(a-1)`
        a: Option<u32>,
        #[serde(serialize_with = "crate::report::big_as_string")]
        value_at_0: BigInt,
        #[serde(serialize_with = "crate::report::big_as_string")]
        value_at_1: BigInt,
        image_mod_2: Vec<u64>,
        #[serde(serialize_with = "crate::report::big_as_string")]
        reduced_at_0: BigInt,
    },
    PPower {
        /// roots of `K_6` mod `p`
        roots: Vec<u64>,
        alpha: Option<u64>,
        /// `K_{6p}(alpha) mod p^2`
        residue: Option<u64>,
        /// `K_{6p}(alpha)` when it is small enough to print
        #[serde(serialize_with = "crate::report::opt_big_as_string")]
        exact_value: Option<BigInt>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub params: BTreeMap<String, String>,
    pub evidence: Evidence,
    pub verdict: bool,
}

fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn param_u64(c: &Certificate, key: &str) -> Result<u64> {
    c.params
        .get(key)
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::Invariant(format!("certificate lacks parameter {key}")))
}

/// `x^n + (2-x)^n + s^n`
fn half_l_poly(sign: i64, n: u32) -> IntPoly {
    let x_n = IntPoly::monomial(BigInt::one(), n as usize);
    let two_minus_x = linear_power(&BigInt::from(2), &-BigInt::one(), n);
    let s_n = IntPoly::constant(num_traits::pow(BigInt::from(sign), n as usize));
    &(&x_n + &two_minus_x) + &s_n
}

fn image_mod(p: &IntPoly, m: u64) -> Result<Vec<u64>> {
    Ok(reduce(p, m)?.coeffs().to_vec())
}

/// `a = ±1/2`: the 2-adic shape of `2^n K_{a,n}(x/2)`.
pub fn certify_half(a: &RatScalar, n: u32) -> Result<Certificate> {
    let sign = if *a == RatScalar::new(1, 2)? {
        1
    } else if *a == RatScalar::new(-1, 2)? {
        -1
    } else {
        return Err(Error::Precondition(format!(
            "a must be 1/2 or -1/2, got {a}"
        )));
    };
    if n < 2 {
        return Err(Error::Precondition(format!(
            "n must be at least 2, got {n}"
        )));
    }
    let l_poly = half_l_poly(sign, n);
    let lc_mod_4 = big_mod_u64(l_poly.leading().expect("nonzero"), 4);
    let image_mod_2 = image_mod(&l_poly, 2)?;
    let verdict = lc_mod_4 == 2 && image_mod_2 == [1];
    Ok(Certificate {
        kind: CertificateKind::HalfInteger2Adic,
        params: params([("a", a.to_string()), ("n", n.to_string())]),
        evidence: Evidence::Half {
            l_poly,
            lc_mod_4,
            image_mod_2,
        },
        verdict,
    })
}

/// `(a, b)` with `1 <= a <= b` and `3^a + 3^b = target`.
pub fn three_power_decomposition(target: u64) -> Option<(u32, u32)> {
    let powers: Vec<(u32, u64)> = (1..)
        .map(|e| (e, 3u64.pow(e)))
        .take_while(|&(_, v)| v < target)
        .collect();
    powers.iter().find_map(|&(a, va)| {
        powers
            .iter()
            .find(|&&(b, vb)| b >= a && va + vb == target)
            .map(|&(b, _)| (a, b))
    })
}

/// `6m = 3^a + 3^b` and Eisenstein at 3 for `K_{6m}(x - 1)`.
pub fn certify_eisenstein3(m: u32) -> Result<Certificate> {
    if m == 0 {
        return Err(Error::Precondition("m must be positive".into()));
    }
    let decomposition = three_power_decomposition(6 * m as u64);
    let shifted = k_minus_one(6 * m).taylor_shift(&-BigInt::one());
    let constant_mod_9 = big_mod_u64(&shifted.coeff(0), 9);
    let verdict = decomposition.is_some() && eisenstein_shape(shifted.coeffs(), 3);
    Ok(Certificate {
        kind: CertificateKind::Eisenstein3Shift,
        params: params([("m", m.to_string())]),
        evidence: Evidence::Eisenstein3 {
            decomposition,
            shifted,
            constant_mod_9,
        },
        verdict,
    })
}

/// `x^(2^a) (x + 1)^(2^a)` over `F_2`.
fn two_power_image(a: u32) -> Vec<u64> {
    let e = 1usize << a;
    // (x + 1)^(2^a) = x^(2^a) + 1 in characteristic 2
    let mut c = vec![0u64; 2 * e + 1];
    c[e] = 1;
    c[2 * e] = 1;
    c
}

/// The hypotheses for `m = 2^(a-1)`: `K_{6m}(0) = K_{6m}(1) = 2`, the
/// image mod 2, and square-free `K~_{6m}(0)`.
pub fn certify_two_power(m: u32) -> Result<Certificate> {
    if m == 0 {
        return Err(Error::Precondition("m must be positive".into()));
    }
    let a = m.is_power_of_two().then(|| m.trailing_zeros() + 1);
    let k = k_minus_one(6 * m);
    let value_at_0 = k.coeff(0);
    let value_at_1 = k.eval(&BigInt::one());
    let image_mod_2 = image_mod(&k, 2)?;
    let symmetry = factor_symmetry_hypothesis(6 * m)?;
    let verdict = a.is_some_and(|a| image_mod_2 == two_power_image(a))
        && value_at_0 == BigInt::from(2)
        && value_at_1 == BigInt::from(2)
        && symmetry.holds
        && symmetry.n_even;
    Ok(Certificate {
        kind: CertificateKind::TwoPowerMod2,
        params: params([("m", m.to_string())]),
        evidence: Evidence::TwoPower {
            a,
            value_at_0,
            value_at_1,
            image_mod_2,
            reduced_at_0: symmetry.k_tilde_at_zero,
        },
        verdict,
    })
}

/// `K_n(x) mod m = x^n + (1 - x)^n + 1 mod m`, by modular exponentiation.
pub fn k_value_mod(x: u64, n: u64, m: u64) -> u64 {
    let x = x % m;
    let one_minus = (1 + m - x) % m;
    (pow_mod(x, n, m) + pow_mod(one_minus, n, m) + 1 % m) % m
}

fn exact_k_value(alpha: u64, n: u32) -> BigInt {
    k_minus_one(n).eval(&BigInt::from(alpha))
}

/// Largest `6p log2 p` for which the exact `K_{6p}(alpha)` is recorded.
const EXACT_VALUE_BITS: f64 = 512.0;

fn odd_prime(p: u64) -> Result<()> {
    require_prime(p)?;
    if p == 2 {
        return Err(Error::Precondition("p must be odd".into()));
    }
    Ok(())
}

/// The odd-prime criterion: some root `alpha` of `K_6` mod `p` with
/// `K_{6p}(alpha) != 0 mod p^2`. The conclusion covers `K_{6p^e}` for every
/// `e >= 1`.
pub fn certify_p_power(p: u64, e: u32) -> Result<Certificate> {
    odd_prime(p)?;
    if e == 0 {
        return Err(Error::Precondition("e must be positive".into()));
    }
    let roots: Vec<u64> = roots_modp(&reduce(&k_minus_one(6), p)?)?
        .into_iter()
        .map(|(r, _)| r)
        .collect();
    let p2 = p * p;
    let mut witness = None;
    for &alpha in &roots {
        let residue = k_value_mod(alpha, 6 * p, p2);
        // depends only on alpha mod p, and agrees for every power p^e
        if residue != k_value_mod(alpha + p, 6 * p, p2) {
            return Err(Error::Invariant(format!(
                "K_{{6p}}(alpha) mod p^2 changed under alpha -> alpha + p (p = {p})"
            )));
        }
        if let Some(n_e) = p.checked_pow(e).and_then(|pe| pe.checked_mul(6)) {
            if residue != k_value_mod(alpha, n_e, p2) {
                return Err(Error::Invariant(format!(
                    "K_{{6p^e}}(alpha) and K_{{6p}}(alpha) differ mod p^2 (p = {p}, e = {e})"
                )));
            }
        }
        if residue != 0 {
            witness = Some((alpha, residue));
            break;
        }
    }
    // report the first root when none passes
    let shown = witness.or_else(|| roots.first().map(|&r| (r, k_value_mod(r, 6 * p, p2))));
    let exact_value = shown.and_then(|(alpha, _)| {
        let bits = 6.0 * p as f64 * (p as f64).log2();
        (bits <= EXACT_VALUE_BITS).then(|| exact_k_value(alpha, 6 * p as u32))
    });
    Ok(Certificate {
        kind: CertificateKind::PPowerCriterion,
        params: params([("p", p.to_string()), ("e", e.to_string())]),
        evidence: Evidence::PPower {
            roots,
            alpha: shown.map(|s| s.0),
            residue: shown.map(|s| s.1),
            exact_value,
        },
        verdict: witness.is_some(),
    })
}

impl Certificate {
    /// Re-derives the verdict from the stored evidence and parameters.
    pub fn recheck(&self) -> Result<bool> {
        match &self.evidence {
            Evidence::Half {
                l_poly,
                lc_mod_4,
                image_mod_2,
            } => {
                let a: RatScalar = self.params["a"].parse()?;
                let n = param_u64(self, "n")? as u32;
                let sign = if a.num() == &BigInt::one() { 1 } else { -1 };
                let consistent = *l_poly == half_l_poly(sign, n)
                    && *lc_mod_4 == big_mod_u64(l_poly.leading().expect("nonzero"), 4)
                    && *image_mod_2 == image_mod(l_poly, 2)?;
                Ok(consistent && *lc_mod_4 == 2 && image_mod_2.as_slice() == [1])
            }
            Evidence::Eisenstein3 {
                decomposition,
                shifted,
                constant_mod_9,
            } => {
                let m = param_u64(self, "m")?;
                let Some((a, b)) = decomposition else {
                    return Ok(false);
                };
                let sums = 3u64.pow(*a) + 3u64.pow(*b) == 6 * m;
                let degree_ok = shifted.degree() == Some(6 * m as usize);
                let const_ok = *constant_mod_9 == big_mod_u64(&shifted.coeff(0), 9);
                // K(x-1) at x = 0 is K(-1) = 2^(6m) + 2
                let anchor =
                    shifted.coeff(0) == num_traits::pow(BigInt::from(2), 6 * m as usize) + 2;
                Ok(
                    sums && degree_ok
                        && const_ok
                        && anchor
                        && eisenstein_shape(shifted.coeffs(), 3),
                )
            }
            Evidence::TwoPower {
                a,
                value_at_0,
                value_at_1,
                image_mod_2,
                reduced_at_0,
            } => {
                let m = param_u64(self, "m")?;
                let Some(a) = a else {
                    return Ok(false);
                };
                Ok(1u64 << (a - 1) == m
                    && *image_mod_2 == two_power_image(*a)
                    && *value_at_0 == BigInt::from(2)
                    && *value_at_1 == BigInt::from(2)
                    && squarefree_integer(reduced_at_0)?)
            }
            Evidence::PPower {
                roots,
                alpha,
                residue,
                exact_value,
            } => {
                let p = param_u64(self, "p")?;
                if !is_prime_u64(p) || p == 2 {
                    return Ok(false);
                }
                let (Some(alpha), Some(residue)) = (alpha, residue) else {
                    return Ok(false);
                };
                let is_root = k_value_mod(*alpha, 6, p) == 0 && roots.contains(alpha);
                let recomputed = k_value_mod(*alpha, 6 * p, p * p) == *residue;
                let exact_ok = exact_value
                    .as_ref()
                    .is_none_or(|v| big_mod_u64(v, p * p) == *residue);
                Ok(is_root && recomputed && exact_ok && *residue != 0)
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SplittingReport {
    pub p: u64,
    pub roots: Vec<(u64, u32)>,
    pub splits: bool,
    /// images of the smallest root under the six maps of `H`
    pub orbit: Vec<u64>,
    pub verdict: bool,
}

/// If `K_6` has a root mod `p`, it splits and `H` permutes its roots
/// transitively.
pub fn splitting_prerequisite(p: u64) -> Result<SplittingReport> {
    odd_prime(p)?;
    let f = reduce(&k_minus_one(6), p)?;
    let roots = roots_modp(&f)?;
    let Some(&(first, _)) = roots.first() else {
        return Ok(SplittingReport {
            p,
            roots,
            splits: false,
            orbit: Vec::new(),
            verdict: true,
        });
    };
    let splits = splits_completely(&f)?;
    let mut orbit: Vec<u64> = H_ELEMENTS
        .iter()
        .filter_map(|m| moebius_apply_modp(m, first, p))
        .collect();
    orbit.sort_unstable();
    orbit.dedup();
    let distinct: Vec<u64> = roots.iter().map(|r| r.0).collect();
    let verdict = splits && orbit == distinct;
    Ok(SplittingReport {
        p,
        roots,
        splits,
        orbit,
        verdict,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanStatus {
    Certified,
    Exception,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanEntry {
    pub p: u64,
    pub status: ScanStatus,
    pub alpha: Option<u64>,
    pub residue: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    pub bound: u64,
    pub certified: Vec<u64>,
    pub exceptions: Vec<u64>,
    pub skipped: Vec<u64>,
    /// certified and exceptional primes with their witnesses
    pub evidence: Vec<ScanEntry>,
}

fn scan_one(p: u64) -> ScanEntry {
    let f = reduce(&k_minus_one(6), p).expect("p is prime");
    let roots = roots_modp(&f).expect("K_6 is nonzero mod p");
    if roots.is_empty() {
        return ScanEntry {
            p,
            status: ScanStatus::Skipped,
            alpha: None,
            residue: None,
        };
    }
    let p2 = p * p;
    let residues: Vec<(u64, u64)> = roots
        .iter()
        .map(|&(r, _)| (r, k_value_mod(r, 6 * p, p2)))
        .collect();
    match residues.iter().find(|(_, v)| *v != 0) {
        Some(&(alpha, residue)) => ScanEntry {
            p,
            status: ScanStatus::Certified,
            alpha: Some(alpha),
            residue: Some(residue),
        },
        None => ScanEntry {
            p,
            status: ScanStatus::Exception,
            alpha: Some(residues[0].0),
            residue: Some(0),
        },
    }
}

/// Classifies every odd prime below `bound`. `jobs` worker threads; the
/// result does not depend on it.
pub fn scan_primes(bound: u64, jobs: usize) -> Result<ScanResult> {
    if bound < 3 {
        return Err(Error::Precondition(format!(
            "bound must be at least 3, got {bound}"
        )));
    }
    if jobs == 0 {
        return Err(Error::Precondition("jobs must be positive".into()));
    }
    // p^2 must fit in a u64
    if bound > 1 << 31 {
        return Err(Error::Precondition(format!("bound {bound} is too large")));
    }
    let primes = primes_in(3, bound);
    let entries: Vec<ScanEntry> = if jobs == 1 {
        primes.iter().map(|&p| scan_one(p)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Precondition(format!("cannot start {jobs} workers: {e}")))?;
        pool.install(|| primes.par_iter().map(|&p| scan_one(p)).collect())
    };
    let pick = |s: ScanStatus| -> Vec<u64> {
        entries
            .iter()
            .filter(|e| e.status == s)
            .map(|e| e.p)
            .collect()
    };
    Ok(ScanResult {
        bound,
        certified: pick(ScanStatus::Certified),
        exceptions: pick(ScanStatus::Exception),
        skipped: pick(ScanStatus::Skipped),
        evidence: entries
            .iter()
            .filter(|e| e.status != ScanStatus::Skipped)
            .cloned()
            .collect(),
    })
}

impl ScanResult {
    /// One row per odd prime: `p,status,alpha,residue`.
    pub fn to_csv(&self) -> String {
        let mut rows: Vec<(u64, ScanStatus, Option<u64>, Option<u64>)> = self
            .evidence
            .iter()
            .map(|e| (e.p, e.status, e.alpha, e.residue))
            .collect();
        rows.extend(
            self.skipped
                .iter()
                .map(|&p| (p, ScanStatus::Skipped, None, None)),
        );
        rows.sort_by_key(|r| r.0);
        let mut out = String::from("p,status,alpha,residue\n");
        for (p, status, alpha, residue) in rows {
            let status = match status {
                ScanStatus::Certified => "certified",
                ScanStatus::Exception => "exception",
                ScanStatus::Skipped => "skipped",
            };
            let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
            let _ = writeln!(out, "{p},{status},{},{}", opt(alpha), opt(residue));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_examples() {
        let c = certify_half(&RatScalar::new(1, 2).unwrap(), 3).unwrap();
        assert!(c.verdict && c.recheck().unwrap());
        match &c.evidence {
            Evidence::Half { l_poly, .. } => assert_eq!(*l_poly, IntPoly::from_i64s(&[9, -12, 6])),
            _ => unreachable!(),
        }
        let c = certify_half(&RatScalar::new(-1, 2).unwrap(), 4).unwrap();
        assert!(c.verdict && c.recheck().unwrap());
        let c = certify_half(&RatScalar::new(1, 2).unwrap(), 2).unwrap();
        match &c.evidence {
            Evidence::Half { l_poly, .. } => assert_eq!(*l_poly, IntPoly::from_i64s(&[5, -4, 2])),
            _ => unreachable!(),
        }
        assert!(certify_half(&RatScalar::new(1, 3).unwrap(), 3).is_err());
    }

    #[test]
    fn eisenstein_family() {
        for m in [2, 3, 5] {
            let c = certify_eisenstein3(m).unwrap();
            assert!(c.verdict, "m = {m}");
            assert!(c.recheck().unwrap());
        }
        let c = certify_eisenstein3(4).unwrap();
        assert!(!c.verdict);
        assert_eq!(three_power_decomposition(12), Some((1, 2)));
        assert_eq!(three_power_decomposition(18), Some((2, 2)));
        assert_eq!(three_power_decomposition(24), None);
    }

    #[test]
    fn two_power_family() {
        let c = certify_two_power(1).unwrap();
        assert!(c.verdict && c.recheck().unwrap());
        match &c.evidence {
            Evidence::TwoPower { image_mod_2, .. } => assert_eq!(image_mod_2, &[0, 0, 1, 0, 1]),
            _ => unreachable!(),
        }
        let c = certify_two_power(2).unwrap();
        match &c.evidence {
            Evidence::TwoPower { image_mod_2, .. } => {
                assert_eq!(image_mod_2, &[0, 0, 0, 0, 1, 0, 0, 0, 1])
            }
            _ => unreachable!(),
        }
        assert!(!certify_two_power(3).unwrap().verdict);
        assert!(!certify_two_power(3).unwrap().recheck().unwrap());
    }

    #[test]
    fn p_power_examples() {
        let c = certify_p_power(11, 1).unwrap();
        assert!(c.verdict && c.recheck().unwrap());
        match &c.evidence {
            Evidence::PPower {
                alpha,
                residue,
                exact_value,
                ..
            } => {
                assert_eq!(*alpha, Some(2));
                assert_eq!(*residue, Some(11));
                assert_eq!(
                    exact_value.as_ref().unwrap().to_string(),
                    "73786976294838206466"
                );
            }
            _ => unreachable!(),
        }
        let c = certify_p_power(19, 2).unwrap();
        assert!(!c.verdict);
        match &c.evidence {
            Evidence::PPower { roots, .. } => assert!(roots.contains(&4)),
            _ => unreachable!(),
        }
        let c = certify_p_power(5, 1).unwrap();
        assert!(!c.verdict);
        assert_eq!(
            c.evidence,
            Evidence::PPower {
                roots: vec![],
                alpha: None,
                residue: None,
                exact_value: None
            }
        );
        assert!(certify_p_power(2, 1).is_err());
        assert!(certify_p_power(15, 1).is_err());
    }

    #[test]
    fn tampered_evidence_fails_recheck() {
        let mut c = certify_p_power(11, 1).unwrap();
        if let Evidence::PPower { residue, .. } = &mut c.evidence {
            *residue = Some(12);
        }
        assert!(!c.recheck().unwrap());
    }

    #[test]
    fn splitting() {
        let r = splitting_prerequisite(11).unwrap();
        assert!(r.verdict);
        assert_eq!(r.orbit, vec![2, 6, 10]);
        let r = splitting_prerequisite(3).unwrap();
        assert!(r.verdict);
        assert_eq!(r.roots, vec![(2, 6)]);
        let r = splitting_prerequisite(7).unwrap();
        assert!(r.verdict && r.roots.is_empty());
    }

    #[test]
    fn small_scans() {
        let s = scan_primes(10, 1).unwrap();
        assert_eq!(s.certified, vec![3]);
        assert!(s.exceptions.is_empty());
        assert_eq!(s.skipped, vec![5, 7]);
        let s = scan_primes(100, 2).unwrap();
        assert_eq!(&s.certified[..3], &[3, 11, 71]);
        assert_eq!(s.exceptions, vec![19]);
        assert_eq!(s, scan_primes(100, 1).unwrap());
    }
}
