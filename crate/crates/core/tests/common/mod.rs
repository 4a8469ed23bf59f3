//! Reference implementations used to cross-check the library. They share no
//! code with it: plain coefficient vectors, Bareiss determinants, Berlekamp
//! matrices.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Poly = Vec<BigInt>;

pub fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn ipow(base: i64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), e as usize)
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> Poly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn derivative(p: &[BigInt]) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect(),
    )
}

/// `(c0 + c1 x)^n` by the binomial theorem.
pub fn binomial_power(c0: i64, c1: i64, n: u32) -> Poly {
    trim(
        (0..=n)
            .map(|k| binomial(n, k) * ipow(c0, n - k) * ipow(c1, k))
            .collect(),
    )
}

/// `den^n (x^n + (1 - x)^n) + num^n`.
pub fn k_coeffs(num: i64, den: i64, n: u32) -> Poly {
    let scale = ipow(den, n);
    let mut p: Poly = binomial_power(1, -1, n)
        .into_iter()
        .map(|c| c * &scale)
        .collect();
    p.resize(n as usize + 1, BigInt::zero());
    p[n as usize] += &scale;
    p[0] += ipow(num, n);
    trim(p)
}

/// `K_n(x - 1) = (x - 1)^n + (2 - x)^n + 1`.
pub fn k_shifted_minus_one(n: u32) -> Poly {
    let mut p = add(&binomial_power(-1, 1, n), &binomial_power(2, -1, n));
    p[0] += 1;
    p
}

pub fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// `sum c_k x^k (1 - x)^(w - k)`.
pub fn homogenize_one_minus_x(p: &[BigInt], width: u32) -> Poly {
    let mut out = Vec::new();
    for (k, c) in p.iter().enumerate() {
        let term = mul(
            std::slice::from_ref(c),
            &mul(&monomial(k), &binomial_power(1, -1, width - k as u32)),
        );
        out = add(&out, &term);
    }
    out
}

pub fn monomial(k: usize) -> Poly {
    let mut p = vec![BigInt::zero(); k + 1];
    p[k] = BigInt::one();
    p
}

/// `sum c_k (1 - x)^k`.
pub fn compose_one_minus_x(p: &[BigInt]) -> Poly {
    let mut out = Vec::new();
    for (k, c) in p.iter().enumerate() {
        let term: Poly = binomial_power(1, -1, k as u32)
            .into_iter()
            .map(|t| t * c)
            .collect();
        out = add(&out, &term);
    }
    out
}

/// Fraction-free Gaussian elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

pub fn sylvester(p: &[BigInt], q: &[BigInt]) -> Vec<Vec<BigInt>> {
    let (dp, dq) = (p.len() - 1, q.len() - 1);
    let size = dp + dq;
    let mut rows = Vec::with_capacity(size);
    for (poly, shifts) in [(p, dq), (q, dp)] {
        let deg = poly.len() - 1;
        for s in 0..shifts {
            let mut row = vec![BigInt::zero(); size];
            for (i, c) in poly.iter().enumerate() {
                row[s + deg - i] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

pub fn resultant(p: &[BigInt], q: &[BigInt]) -> BigInt {
    bareiss_det(sylvester(p, q))
}

pub fn discriminant(p: &[BigInt]) -> BigInt {
    let d = p.len() - 1;
    let r = resultant(p, &derivative(p));
    let sign = if (d * (d - 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    };
    BigInt::from(sign) * r / p.last().unwrap()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

pub fn primes_below(bound: u64) -> Vec<u64> {
    (2..bound).filter(|&n| is_prime(n)).collect()
}

pub fn euler_phi(d: u32) -> u32 {
    (1..=d).filter(|&k| num_integer::gcd(k, d) == 1).count() as u32
}

fn moebius_mu(n: u32) -> i32 {
    let mut n = n;
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Exact quotient of polynomials with a monic divisor.
fn div_monic(a: &[BigInt], b: &[BigInt]) -> Poly {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].clone();
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    assert!(r.iter().all(|c| c.is_zero()), "inexact division");
    trim(q)
}

/// `Phi_d = prod_{e | d} (x^e - 1)^mu(d/e)`.
pub fn cyclotomic(d: u32) -> Poly {
    let x_e_minus_1 = |e: u32| {
        let mut p = monomial(e as usize);
        p[0] = BigInt::from(-1);
        p
    };
    let divs: Vec<u32> = (1..=d).filter(|e| d.is_multiple_of(*e)).collect();
    let mut num = vec![BigInt::one()];
    for &e in &divs {
        if moebius_mu(d / e) == 1 {
            num = mul(&num, &x_e_minus_1(e));
        }
    }
    for &e in &divs {
        if moebius_mu(d / e) == -1 {
            num = div_monic(&num, &x_e_minus_1(e));
        }
    }
    num
}

// ---- arithmetic over F_p, ascending u64 coefficients ----

fn pmod(c: &BigInt, p: u64) -> u64 {
    let r = c % BigInt::from(p);
    let r = if r.is_negative() {
        r + BigInt::from(p)
    } else {
        r
    };
    u64::try_from(r).unwrap()
}

pub fn reduce(f: &[BigInt], p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = f.iter().map(|c| pmod(c, p)).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn inv(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

fn powm(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn strip(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn rem_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let li = inv(b[db], p);
    while r.len() > db {
        let top = r.len() - 1;
        let c = r[top] * li % p;
        for (j, bj) in b.iter().enumerate() {
            let idx = top - db + j;
            r[idx] = (r[idx] + p - c * bj % p) % p;
        }
        r = strip(r);
    }
    r
}

fn gcd_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (strip(a.to_vec()), strip(b.to_vec()));
    while !b.is_empty() {
        let r = rem_p(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn mul_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    strip(out)
}

fn deriv_p(a: &[u64], p: u64) -> Vec<u64> {
    strip(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

/// Degree of `gcd(a mod p, b mod p)`, or `None` if either leading
/// coefficient vanishes mod `p`.
pub fn gcd_degree_modp(a: &[BigInt], b: &[BigInt], p: u64) -> Option<usize> {
    let (ra, rb) = (reduce(a, p), reduce(b, p));
    if ra.len() != a.len() || rb.len() != b.len() {
        return None;
    }
    Some(gcd_p(&ra, &rb, p).len() - 1)
}

/// A prime at which `a` and `b` keep their degrees and are coprime. Such a
/// prime proves `gcd(a, b) = 1` over `Q`.
pub fn coprime_witness(a: &[BigInt], b: &[BigInt]) -> Option<u64> {
    primes_below(2000)
        .into_iter()
        .find(|&p| gcd_degree_modp(a, b, p) == Some(0))
}

pub fn has_root_modp(f: &[BigInt], p: u64) -> bool {
    let r = reduce(f, p);
    (0..p).any(|x| r.iter().rev().fold(0, |acc, c| (acc * x + c) % p) == 0)
}

/// Number of irreducible factors of a square-free polynomial over `F_p`.
fn berlekamp_count(f: &[u64], p: u64) -> usize {
    let d = f.len() - 1;
    // x^p mod f, then rows x^(ip) mod f
    let mut xp = vec![1u64];
    let mut base = rem_p(&[0, 1], f, p);
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            xp = rem_p(&mul_p(&xp, &base, p), f, p);
        }
        base = rem_p(&mul_p(&base, &base, p), f, p);
        e >>= 1;
    }
    let mut rows = Vec::with_capacity(d);
    let mut cur = vec![1u64];
    for i in 0..d {
        let mut row = cur.clone();
        row.resize(d, 0);
        row[i] = (row[i] + p - 1) % p;
        rows.push(row);
        cur = rem_p(&mul_p(&cur, &xp, p), f, p);
    }
    d - rank_p(rows, p)
}

fn rank_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let (rows, cols) = (m.len(), m[0].len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let iv = inv(m[rank][c], p);
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c] * iv % p;
                for k in 0..cols {
                    m[r][k] = (m[r][k] + p - f * m[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Irreducibility of `f mod p` (units and zero count as not irreducible).
pub fn irreducible_modp(f: &[BigInt], p: u64) -> bool {
    let r = reduce(f, p);
    if r.len() < 2 {
        return false;
    }
    if gcd_p(&r, &deriv_p(&r, p), p).len() > 1 {
        return false;
    }
    berlekamp_count(&r, p) == 1
}
