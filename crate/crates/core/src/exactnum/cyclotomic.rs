//! The cyclotomic field ℚ(ζ_N) in the power basis `1, ζ, …, ζ^{φ(N)-1}`.
//!
//! Every [`Cyclotomic`] carries a shared handle to its [`CycField`]. Binary
//! operations on values of different conductors lift both operands to the
//! least common multiple first, using `ζ_N ↦ ζ_M^{M/N}`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::poly::{self, CycPolynomial};
use super::{NumError, Rational, MAX_CONDUCTOR};

/// ℚ(ζ_N) together with its reduction modulus Φ_N.
#[derive(Debug, PartialEq, Eq)]
pub struct CycField {
    modulus: CycPolynomial,
}

impl CycField {
    pub fn new(conductor: u32) -> Result<Arc<Self>, NumError> {
        let modulus = poly::cyclotomic_polynomial(conductor)?;
        Ok(Arc::new(CycField { modulus }))
    }

    pub fn conductor(&self) -> u32 {
        self.modulus.conductor()
    }

    /// φ(N), the dimension over ℚ.
    pub fn degree(&self) -> usize {
        self.modulus.degree()
    }

    pub fn modulus(&self) -> &CycPolynomial {
        &self.modulus
    }
}

fn reduce_into(field: &Arc<CycField>, mut coeffs: Vec<Rational>) -> Cyclotomic {
    poly::reduce_mod(&mut coeffs, field.modulus.coeffs());
    Cyclotomic { field: field.clone(), coeffs }
}

pub trait FieldExt {
    fn zero(&self) -> Cyclotomic;
    fn one(&self) -> Cyclotomic;
    fn rational(&self, q: Rational) -> Cyclotomic;
    fn integer(&self, n: i64) -> Cyclotomic;
    /// ζ_N^k for any integer `k`; negative exponents wrap modulo N.
    fn zeta_pow(&self, k: i64) -> Cyclotomic;
    /// Builds `Σ q·ζ_N^k` from `(k, q)` terms with `0 ≤ k < N`.
    fn from_terms(&self, terms: &[(u64, Rational)]) -> Result<Cyclotomic, NumError>;
}

impl FieldExt for Arc<CycField> {
    fn zero(&self) -> Cyclotomic {
        Cyclotomic { field: self.clone(), coeffs: vec![Rational::zero(); self.degree()] }
    }

    fn one(&self) -> Cyclotomic {
        self.rational(Rational::one())
    }

    fn rational(&self, q: Rational) -> Cyclotomic {
        let mut z = self.zero();
        z.coeffs[0] = q;
        z
    }

    fn integer(&self, n: i64) -> Cyclotomic {
        self.rational(Rational::from_integer(BigInt::from(n)))
    }

    fn zeta_pow(&self, k: i64) -> Cyclotomic {
        let n = self.conductor() as i64;
        let e = k.rem_euclid(n) as usize;
        let mut c = vec![Rational::zero(); e + 1];
        c[e] = Rational::one();
        reduce_into(self, c)
    }

    fn from_terms(&self, terms: &[(u64, Rational)]) -> Result<Cyclotomic, NumError> {
        let n = self.conductor() as u64;
        let mut c = vec![Rational::zero(); self.conductor() as usize];
        for (k, q) in terms {
            if *k >= n {
                return Err(NumError::ExponentOutOfRange { exponent: *k, conductor: n as u32 });
            }
            c[*k as usize] += q;
        }
        Ok(reduce_into(self, c))
    }
}

/// An exact element of ℚ(ζ_N).
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CycField>,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    /// Power-basis coefficients; always `φ(N)` of them.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if this element lies in ℚ.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The nonzero power-basis terms `(k, q)`, suitable for the literal
    /// wire format.
    pub fn terms(&self) -> Vec<(u64, Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .map(|(k, q)| (k as u64, q.clone()))
            .collect()
    }

    /// Re-expresses this element in ℚ(ζ_M); requires `N | M`.
    pub fn lift_to(&self, target: &Arc<CycField>) -> Result<Cyclotomic, NumError> {
        let n = self.conductor();
        let m = target.conductor();
        if !m.is_multiple_of(n) {
            return Err(NumError::ConductorMismatch { from: n, to: m });
        }
        if Arc::ptr_eq(&self.field, target) || n == m {
            return Ok(Cyclotomic { field: target.clone(), coeffs: self.coeffs.clone() });
        }
        let step = (m / n) as usize;
        let mut c = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, q) in self.coeffs.iter().enumerate() {
            c[k * step] = q.clone();
        }
        Ok(reduce_into(target, c))
    }

    /// Brings two operands into a common field, reusing an existing field
    /// handle whenever one conductor divides the other.
    fn unify(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let (n, m) = (a.conductor(), b.conductor());
        if Arc::ptr_eq(&a.field, &b.field) || n == m {
            return (a.clone(), Cyclotomic { field: a.field.clone(), coeffs: b.coeffs.clone() });
        }
        let field = if m % n == 0 {
            b.field.clone()
        } else if n % m == 0 {
            a.field.clone()
        } else {
            let l = poly::lcm_u32(n, m);
            assert!(l <= MAX_CONDUCTOR as u64, "lifted conductor {l} exceeds the cap");
            CycField::new(l as u32).expect("conductor within cap")
        };
        (
            a.lift_to(&field).expect("divides lcm"),
            b.lift_to(&field).expect("divides lcm"),
        )
    }

    fn same_field(&self, other: &Cyclotomic) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.conductor() == other.conductor()
    }

    /// Complex conjugation, the automorphism `ζ ↦ ζ^{N-1}`.
    pub fn conj(&self) -> Cyclotomic {
        if self.to_rational().is_some() {
            return self.clone();
        }
        let n = self.conductor() as usize;
        let mut c = vec![Rational::zero(); n + 1];
        for (k, q) in self.coeffs.iter().enumerate() {
            if !q.is_zero() {
                c[(n - k) % n] += q;
            }
        }
        reduce_into(&self.field, c)
    }

    pub fn inverse(&self) -> Result<Cyclotomic, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(self.field.rational(q.recip()));
        }
        let s = poly::inverse_mod(&self.coeffs, self.field.modulus.coeffs())
            .ok_or(NumError::DivisionByZero)?;
        Ok(reduce_into(&self.field, s))
    }

    pub fn scale(&self, q: &Rational) -> Cyclotomic {
        Cyclotomic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Evaluation at ζ_N = exp(2πi/N). Diagnostics only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor() as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, q) in self.coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let v = rational_to_f64(q);
            let theta = 2.0 * core::f64::consts::PI * k as f64 / n;
            re += v * libm::cos(theta);
            im += v * libm::sin(theta);
        }
        (re, im)
    }

    fn mul_same(&self, other: &Cyclotomic) -> Cyclotomic {
        let d = self.coeffs.len();
        if let Some(q) = self.to_rational() {
            return other.scale(&q);
        }
        if let Some(q) = other.to_rational() {
            return self.scale(&q);
        }
        let mut c = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        reduce_into(&self.field, c)
    }
}

pub(crate) fn rational_to_f64(q: &Rational) -> f64 {
    match q.to_f64() {
        Some(v) => v,
        None => q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN),
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.same_field(other) {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Cyclotomic::unify(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [N={}]", self.conductor())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, q) in self.coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{q}")?,
                1 => write!(f, "({q})*z")?,
                _ => write!(f, "({q})*z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                let f: fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic = $body;
                if self.same_field(rhs) {
                    f(self, rhs)
                } else {
                    let (a, b) = Cyclotomic::unify(self, rhs);
                    f(&a, &b)
                }
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| Cyclotomic {
    field: a.field.clone(),
    coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
});
binop!(Sub, sub, |a, b| Cyclotomic {
    field: a.field.clone(),
    coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
});
binop!(Mul, mul, |a, b| a.mul_same(b));

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.same_field(rhs) {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                if !y.is_zero() {
                    *x += y;
                }
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        if self.same_field(rhs) {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                if !y.is_zero() {
                    *x -= y;
                }
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}
