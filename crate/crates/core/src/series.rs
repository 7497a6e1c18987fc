//! Exact truncated formal power series in one indeterminate.
//!
//! A [`TruncatedSeries`] stores the coefficients `c_0..=c_K` densely. Every
//! binary operation truncates to the smaller of the two operand orders, so all
//! identities hold exactly through the order of the result. Coefficients live
//! in one of two exact rings: [`Integer`] or [`ExactRational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision integer coefficient.
pub type Integer = BigInt;

/// Reduced arbitrary-precision fraction. `num_rational` keeps every value in
/// canonical form (positive denominator, coprime parts) after each operation.
pub type ExactRational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("a series needs at least one coefficient")]
    Empty,
    #[error("coefficient list has {len} entries but order {order} was requested")]
    OrderMismatch { len: usize, order: usize },
    #[error("constant term is not invertible in the coefficient ring")]
    NotInvertible,
    #[error("logarithm requires constant term 1")]
    LogConstantTerm,
    #[error("exponential requires constant term 0")]
    ExpConstantTerm,
}

/// A coefficient ring for [`TruncatedSeries`].
pub trait Coefficient:
    Clone + fmt::Debug + fmt::Display + PartialEq + Zero + One + Neg<Output = Self> + Send + Sync
{
    fn from_i64(v: i64) -> Self;

    /// Multiplicative inverse, if it exists in the ring.
    fn try_inverse(&self) -> Option<Self>;

    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;

    /// `self += a * b`
    fn add_product(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self = self.add_ref(&a.mul_ref(b));
        }
    }
}

macro_rules! ring_by_ref {
    () => {
        fn add_ref(&self, other: &Self) -> Self {
            self + other
        }
        fn sub_ref(&self, other: &Self) -> Self {
            self - other
        }
        fn mul_ref(&self, other: &Self) -> Self {
            self * other
        }
    };
}

impl Coefficient for Integer {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    ring_by_ref!();

    fn add_product(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self += a * b;
        }
    }
}

impl Coefficient for ExactRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    ring_by_ref!();
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    /// Builds a series of order `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<C>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(Self { coeffs })
    }

    /// Like [`new`](Self::new) but also checks the stated order.
    pub fn with_order(coeffs: Vec<C>, order: usize) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        if coeffs.len() != order + 1 {
            return Err(SeriesError::OrderMismatch {
                len: coeffs.len(),
                order,
            });
        }
        Ok(Self { coeffs })
    }

    /// Reads a polynomial as a series of the given order, padding with zeros
    /// or dropping terms above `order`.
    pub fn from_poly(poly: &[C], order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|k| poly.get(k).cloned().unwrap_or_else(C::zero))
            .collect();
        Self { coeffs }
    }

    pub fn from_i64s(values: &[i64]) -> Result<Self, SeriesError> {
        Self::new(values.iter().map(|&v| C::from_i64(v)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * z^power`; vanishes when `power > order`.
    pub fn monomial(c: C, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// `1 + r z + r^2 z^2 + ... + r^K z^K`
    pub fn geometric(r: &C, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = C::one();
        for _ in 0..=order {
            let next = power.mul_ref(r);
            coeffs.push(power);
            power = next;
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `z^k`; zero above the truncation order is *not* implied,
    /// so this returns `None` there.
    pub fn get(&self, k: usize) -> Option<&C> {
        self.coeffs.get(k)
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_poly(&self.coeffs, order)
    }

    pub fn scalar_mul(&self, c: &C) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x.mul_ref(c)).collect(),
        }
    }

    /// Multiplies by `z^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let coeffs = (0..=order)
            .map(|i| {
                if i >= k {
                    self.coeffs[i - k].clone()
                } else {
                    C::zero()
                }
            })
            .collect();
        Self { coeffs }
    }

    /// Substitutes `c z` for `z`: coefficient `c_k` becomes `c_k c^k`.
    pub fn scale_indeterminate(&self, c: &C) -> Self {
        let mut power = C::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            coeffs.push(x.mul_ref(&power));
            power = power.mul_ref(c);
        }
        Self { coeffs }
    }

    /// The operator `z d/dz`: coefficient `c_k` becomes `k c_k`.
    pub fn z_dz(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, x)| x.mul_ref(&C::from_i64(k as i64)))
            .collect();
        Self { coeffs }
    }

    /// Terms of even degree only.
    pub fn even_part(&self) -> Self {
        self.keep_parity(0)
    }

    /// Terms of odd degree only.
    pub fn odd_part(&self) -> Self {
        self.keep_parity(1)
    }

    fn keep_parity(&self, parity: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, x)| {
                if k % 2 == parity {
                    x.clone()
                } else {
                    C::zero()
                }
            })
            .collect();
        Self { coeffs }
    }

    /// The reciprocal series, exact through the order of `self`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0]
            .try_inverse()
            .ok_or(SeriesError::NotInvertible)?;
        let order = self.order();
        let mut out: Vec<C> = Vec::with_capacity(order + 1);
        out.push(inv0.clone());
        for k in 1..=order {
            let mut acc = C::zero();
            for j in 1..=k {
                acc.add_product(&self.coeffs[j], &out[k - j]);
            }
            out.push((-acc).mul_ref(&inv0));
        }
        Ok(Self { coeffs: out })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| f(a, b))
            .collect();
        Self { coeffs }
    }

    fn cauchy(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j].add_product(a, b);
            }
        }
        Self { coeffs }
    }
}

impl TruncatedSeries<ExactRational> {
    /// `log(a)` for a series with constant term 1, as
    /// `u - u^2/2 + u^3/3 - ...` with `u = a - 1`.
    pub fn log_series(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::LogConstantTerm);
        }
        let order = self.order();
        let mut u = self.clone();
        u.coeffs[0] = ExactRational::zero();

        let mut out = Self::zero(order);
        let mut power = u.clone();
        // u^j vanishes below degree j, so j runs only to the order.
        for j in 1..=order {
            let mut weight = ExactRational::new(BigInt::one(), BigInt::from(j));
            if j % 2 == 0 {
                weight = -weight;
            }
            for (acc, p) in out.coeffs.iter_mut().zip(&power.coeffs) {
                acc.add_product(p, &weight);
            }
            power = &power * &u;
        }
        Ok(out)
    }

    /// `exp(a)` for a series with constant term 0, from `k b_k = sum j a_j b_{k-j}`.
    pub fn exp_series(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ExpConstantTerm);
        }
        let order = self.order();
        let weighted = self.z_dz();
        let mut out: Vec<ExactRational> = Vec::with_capacity(order + 1);
        out.push(ExactRational::one());
        for k in 1..=order {
            let mut acc = ExactRational::zero();
            for j in 1..=k {
                acc.add_product(&weighted.coeffs[j], &out[k - j]);
            }
            out.push(acc / ExactRational::from_integer(BigInt::from(k)));
        }
        Ok(Self { coeffs: out })
    }
}

impl<C: Coefficient> Add for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn add(self, rhs: Self) -> TruncatedSeries<C> {
        self.zip_with(rhs, C::add_ref)
    }
}

impl<C: Coefficient> Sub for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn sub(self, rhs: Self) -> TruncatedSeries<C> {
        self.zip_with(rhs, C::sub_ref)
    }
}

impl<C: Coefficient> Mul for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn mul(self, rhs: Self) -> TruncatedSeries<C> {
        self.cauchy(rhs)
    }
}

impl<C: Coefficient> Neg for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn neg(self) -> TruncatedSeries<C> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| -x.clone()).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl<C: Coefficient> $tr for TruncatedSeries<C> {
            type Output = TruncatedSeries<C>;
            fn $method(self, rhs: Self) -> TruncatedSeries<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<C: Coefficient> Neg for TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn neg(self) -> TruncatedSeries<C> {
        -&self
    }
}

impl<C: Coefficient> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(z^{})]", self.order() + 1)
    }
}

impl<C: Coefficient> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}
