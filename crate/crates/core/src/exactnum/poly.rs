//! Integer and rational univariate polynomials, just enough to build the
//! cyclotomic moduli and invert elements of a cyclotomic field.
//!
//! Coefficient vectors are stored lowest degree first and kept trimmed
//! (no trailing zeros), so the zero polynomial is the empty vector.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{NumError, Rational, MAX_CONDUCTOR};

/// The `N`-th cyclotomic polynomial Φ_N, monic with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycPolynomial {
    conductor: u32,
    coeffs: Vec<i64>,
}

impl CycPolynomial {
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Equals φ(N).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients, constant term first. The last entry is always 1.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }
}

/// Computes Φ_N as `(x^N - 1) / Π_{d | N, d < N} Φ_d`, dividing exactly and
/// recursing over the proper divisors.
pub fn cyclotomic_polynomial(n: u32) -> Result<CycPolynomial, NumError> {
    if n == 0 || n > MAX_CONDUCTOR {
        return Err(NumError::InvalidConductor(n));
    }
    let mut memo = BTreeMap::new();
    let coeffs = phi_memo(n, &mut memo);
    let coeffs = coeffs
        .iter()
        .map(|c| c.to_i64().expect("cyclotomic coefficients fit in i64 below the conductor cap"))
        .collect();
    Ok(CycPolynomial { conductor: n, coeffs })
}

fn phi_memo(n: u32, memo: &mut BTreeMap<u32, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut acc = vec![BigInt::zero(); n as usize + 1];
    acc[0] = -BigInt::one();
    acc[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = phi_memo(d, memo);
        let (q, r) = int_divrem_monic(&acc, &phi_d);
        debug_assert!(r.iter().all(Zero::is_zero));
        acc = q;
    }
    memo.insert(n, acc.clone());
    acc
}

pub(crate) fn divisors(n: u32) -> Vec<u32> {
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
pub fn totient(n: u32) -> u32 {
    let mut m = n;
    let mut out = n;
    let mut p = 2u32;
    while (p as u64) * (p as u64) <= m as u64 {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

/// Division of an integer polynomial by a monic integer polynomial.
fn int_divrem_monic(num: &[BigInt], den: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let dd = den.len() - 1;
    if num.len() <= dd {
        return (Vec::new(), num.to_vec());
    }
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            if !d.is_zero() {
                rem[k + i] -= &c * d;
            }
        }
        quot[k] = c;
    }
    rem.truncate(dd);
    (quot, rem)
}

/// Reduces `p` in place modulo the monic polynomial with coefficients
/// `modulus`, leaving exactly `deg(modulus)` coefficients.
pub(crate) fn reduce_mod(p: &mut Vec<Rational>, modulus: &[i64]) {
    let deg = modulus.len() - 1;
    while p.len() > deg {
        let top = p.pop().expect("nonempty");
        if top.is_zero() {
            continue;
        }
        let base = p.len() - deg;
        for (i, &m) in modulus[..deg].iter().enumerate() {
            match m {
                0 => {}
                1 => p[base + i] -= &top,
                -1 => p[base + i] += &top,
                _ => p[base + i] -= &top * BigInt::from(m),
            }
        }
    }
    p.resize(deg, Rational::zero());
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn sub_scaled_shift(a: &mut Vec<Rational>, b: &[Rational], c: &Rational, shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, Rational::zero());
    }
    for (i, bi) in b.iter().enumerate() {
        if !bi.is_zero() {
            a[i + shift] -= c * bi;
        }
    }
}

fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    trim(&mut out);
    out
}

fn divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let dd = den.len() - 1;
    let lead_inv = den[dd].recip();
    let mut rem = num.to_vec();
    trim(&mut rem);
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    while rem.len() > dd {
        let k = rem.len() - 1 - dd;
        let c = &rem[rem.len() - 1] * &lead_inv;
        sub_scaled_shift(&mut rem, den, &c, k);
        rem.pop();
        trim(&mut rem);
        quot[k] = c;
    }
    (quot, rem)
}

/// Returns `s` with `s * a ≡ 1 (mod modulus)`, or `None` when `a` and the
/// modulus share a factor (for an irreducible modulus: when `a ≡ 0`).
pub(crate) fn inverse_mod(a: &[Rational], modulus: &[i64]) -> Option<Vec<Rational>> {
    let mut r0: Vec<Rational> = modulus.iter().map(|&c| Rational::from_integer(c.into())).collect();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    if r1.is_empty() {
        return None;
    }
    // Invariant: s_i * a ≡ r_i (mod modulus).
    let mut s0: Vec<Rational> = Vec::new();
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let qs = mul(&q, &s1);
        let mut s2 = s0;
        sub_scaled_shift(&mut s2, &qs, &Rational::one(), 0);
        trim(&mut s2);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    Some(s0.into_iter().map(|x| x * &c).collect())
}

pub(crate) fn lcm_u32(a: u32, b: u32) -> u64 {
    (a as u64).lcm(&(b as u64))
}
