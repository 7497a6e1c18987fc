//! Partition generating functions obtained by taking the quantities to be the
//! geometric progression `n, n^2, n^3, ...`.
//!
//! Under that substitution the elementary functions become
//! `e_mu(n) = n^T(mu) / ((1-n)(1-n^2)...(1-n^mu))` with `T(mu) = mu(mu+1)/2`,
//! counting partitions into `mu` distinct parts, and the complete homogeneous
//! functions become `h_mu(n) = n^mu / ((1-n)...(1-n^mu))`, counting partitions
//! into exactly `mu` parts. Everything here is over the integers; the only
//! inversions divide by a constant term of 1.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::series::{Integer, SeriesError, TruncatedSeries};

pub type IntSeries = TruncatedSeries<Integer>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QSeriesError {
    #[error("number of parts must be at least 1")]
    ZeroParts,
    #[error("n-order {order} is below the required minimum {required}")]
    OrderTooSmall { order: usize, required: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// `mu (mu + 1) / 2`
pub fn triangular(mu: usize) -> usize {
    mu * (mu + 1) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistinctMethod {
    /// `n^T(mu) / prod_{i<=mu} (1 - n^i)` by series inversion.
    Closed,
    /// Previous series times `n^mu / (1 - n^mu)`, starting from `n / (1 - n)`.
    Stepwise,
    /// `c_m = c_{m-mu} + prev_{m-mu}` filled over one array.
    CoeffRecurrence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PentagonalMethod {
    Product,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionMethod {
    /// Reciprocal of the pentagonal series.
    Inverse,
    /// `p(m) = sum_x (-1)^(x+1) [p(m - (3x^2-x)/2) + p(m - (3x^2+x)/2)]`
    Recurrence,
}

/// `prod_{i=1..mu} (1 - n^i)` expanded exactly; degree `T(mu)`.
/// Coefficients are returned in ascending order.
pub fn denominator_poly(mu: usize) -> Vec<Integer> {
    let mut poly = vec![Integer::one()];
    for i in 1..=mu {
        let mut next = poly.clone();
        next.resize(poly.len() + i, Integer::zero());
        for (k, c) in poly.iter().enumerate() {
            next[k + i] -= c;
        }
        poly = next;
    }
    poly
}

/// `n^T(mu) / prod_{i=1..mu} (1 - n^i)` through order `K`: the coefficient of
/// `n^m` counts partitions of `m` into exactly `mu` distinct parts.
pub fn distinct_gf(
    mu: usize,
    order: usize,
    method: DistinctMethod,
) -> Result<IntSeries, QSeriesError> {
    if mu == 0 {
        return Err(QSeriesError::ZeroParts);
    }
    Ok(match method {
        DistinctMethod::Closed => {
            let denom = IntSeries::from_poly(&denominator_poly(mu), order);
            denom.invert()?.shift(triangular(mu))
        }
        DistinctMethod::Stepwise => {
            let mut current = IntSeries::one(order);
            for i in 1..=mu {
                current = &current * &geometric_step(i, order);
            }
            current
        }
        DistinctMethod::CoeffRecurrence => {
            let mut prev = vec![Integer::zero(); order + 1];
            prev[0] = Integer::one();
            for i in 1..=mu {
                let mut cur = vec![Integer::zero(); order + 1];
                for m in i..=order {
                    let value = &cur[m - i] + &prev[m - i];
                    cur[m] = value;
                }
                prev = cur;
            }
            IntSeries::new(prev)?
        }
    })
}

/// `n^i + n^{2i} + n^{3i} + ...` through order `K`, i.e. `n^i / (1 - n^i)`.
fn geometric_step(i: usize, order: usize) -> IntSeries {
    let mut coeffs = vec![Integer::zero(); order + 1];
    for m in (i..=order).step_by(i) {
        coeffs[m] = Integer::one();
    }
    IntSeries::from_poly(&coeffs, order)
}

/// `n^mu / prod_{i=1..mu} (1 - n^i)` through order `K`: the coefficient of
/// `n^m` counts partitions of `m` into exactly `mu` parts.
pub fn anypart_gf(mu: usize, order: usize) -> Result<IntSeries, QSeriesError> {
    if mu == 0 {
        return Err(QSeriesError::ZeroParts);
    }
    let denom = IntSeries::from_poly(&denominator_poly(mu), order);
    Ok(denom.invert()?.shift(mu))
}

/// A polynomial in `z` whose coefficients are series in `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateTruncation {
    z_degree: usize,
    n_order: usize,
    coefficients: Vec<IntSeries>,
}

impl BivariateTruncation {
    pub fn zero(z_degree: usize, n_order: usize) -> Self {
        Self {
            z_degree,
            n_order,
            coefficients: vec![IntSeries::zero(n_order); z_degree + 1],
        }
    }

    pub fn z_degree(&self) -> usize {
        self.z_degree
    }

    pub fn n_order(&self) -> usize {
        self.n_order
    }

    /// The series in `n` multiplying `z^mu`.
    pub fn coefficient(&self, mu: usize) -> &IntSeries {
        &self.coefficients[mu]
    }

    pub fn coefficients(&self) -> &[IntSeries] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(IntSeries::is_zero)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorSign {
    Plus,
    Minus,
}

/// `prod_{k=1..K} (1 +- n^k z)` truncated at `z^M` and `n^K`. Factors with
/// `k > K` contribute nothing at those orders.
pub fn bivariate_product(z_degree: usize, n_order: usize, sign: FactorSign) -> BivariateTruncation {
    let mut out = BivariateTruncation::zero(z_degree, n_order);
    out.coefficients[0] = IntSeries::one(n_order);
    for k in 1..=n_order {
        // multiply by (1 +- n^k z) in place, high z-powers first
        for mu in (1..=z_degree).rev() {
            let carried = out.coefficients[mu - 1].shift(k);
            out.coefficients[mu] = match sign {
                FactorSign::Plus => &out.coefficients[mu] + &carried,
                FactorSign::Minus => &out.coefficients[mu] - &carried,
            };
        }
    }
    out
}

/// `prod (1 + n^k z) - sum_{mu=0..M} z^mu n^T(mu) / prod_{i<=mu} (1 - n^i)`,
/// which must vanish identically.
pub fn product_to_sum_residual(
    z_degree: usize,
    n_order: usize,
) -> Result<BivariateTruncation, QSeriesError> {
    let required = triangular(z_degree);
    if n_order < required {
        return Err(QSeriesError::OrderTooSmall {
            order: n_order,
            required,
        });
    }
    let mut residual = bivariate_product(z_degree, n_order, FactorSign::Plus);
    residual.coefficients[0] = &residual.coefficients[0] - &IntSeries::one(n_order);
    for mu in 1..=z_degree {
        let sum_term = distinct_gf(mu, n_order, DistinctMethod::Closed)?;
        residual.coefficients[mu] = &residual.coefficients[mu] - &sum_term;
    }
    Ok(residual)
}

/// `e_mu(n) - n^{mu(mu-1)/2} h_mu(n)`, which must vanish.
pub fn shift_residual(mu: usize, order: usize) -> Result<IntSeries, QSeriesError> {
    if mu == 0 {
        return Err(QSeriesError::ZeroParts);
    }
    let required = triangular(mu);
    if order < required {
        return Err(QSeriesError::OrderTooSmall { order, required });
    }
    let distinct = distinct_gf(mu, order, DistinctMethod::Closed)?;
    let shifted = anypart_gf(mu, order)?.shift(triangular(mu - 1));
    Ok(&distinct - &shifted)
}

/// The pair of exponents `(3x^2 - x)/2`, `(3x^2 + x)/2` carrying sign `(-1)^x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PentagonalTerm {
    pub x: usize,
}

impl PentagonalTerm {
    pub fn exponents(&self) -> (usize, usize) {
        let x = self.x;
        ((3 * x * x - x) / 2, (3 * x * x + x) / 2)
    }

    pub fn sign(&self) -> i64 {
        if self.x.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Terms for `x = 1, 2, 3, ...` with smaller exponent at most `max_exponent`.
pub fn pentagonal_terms(max_exponent: usize) -> impl Iterator<Item = PentagonalTerm> {
    (1..)
        .map(|x| PentagonalTerm { x })
        .take_while(move |t| t.exponents().0 <= max_exponent)
}

/// `prod_{k>=1} (1 - n^k)` through order `K`.
pub fn pentagonal_series(order: usize, method: PentagonalMethod) -> IntSeries {
    match method {
        PentagonalMethod::Product => {
            let mut coeffs = vec![Integer::zero(); order + 1];
            coeffs[0] = Integer::one();
            for k in 1..=order {
                for m in (k..=order).rev() {
                    let carried = coeffs[m - k].clone();
                    coeffs[m] -= carried;
                }
            }
            IntSeries::from_poly(&coeffs, order)
        }
        PentagonalMethod::Closed => {
            let mut coeffs = vec![Integer::zero(); order + 1];
            coeffs[0] = Integer::one();
            for term in pentagonal_terms(order) {
                let (lo, hi) = term.exponents();
                coeffs[lo] = Integer::from(term.sign());
                if hi <= order {
                    coeffs[hi] = Integer::from(term.sign());
                }
            }
            IntSeries::from_poly(&coeffs, order)
        }
    }
}

/// `sum p(m) n^m` through order `K`.
pub fn partition_series(order: usize, method: PartitionMethod) -> IntSeries {
    match method {
        PartitionMethod::Inverse => pentagonal_series(order, PentagonalMethod::Closed)
            .invert()
            .expect("pentagonal series has constant term 1"),
        PartitionMethod::Recurrence => {
            let terms: Vec<PentagonalTerm> = pentagonal_terms(order).collect();
            let mut p: Vec<Integer> = Vec::with_capacity(order + 1);
            p.push(Integer::one());
            for m in 1..=order {
                let mut acc = Integer::zero();
                for term in &terms {
                    let (lo, hi) = term.exponents();
                    if lo > m {
                        break;
                    }
                    let mut pair = p[m - lo].clone();
                    if hi <= m {
                        pair += &p[m - hi];
                    }
                    // (-1)^(x+1) = -sign
                    if term.sign() < 0 {
                        acc += pair;
                    } else {
                        acc -= pair;
                    }
                }
                p.push(acc);
            }
            IntSeries::from_poly(&p, order)
        }
    }
}
