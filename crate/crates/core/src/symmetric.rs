//! Power sums `p_k`, elementary symmetric functions `e_k` and complete
//! homogeneous symmetric functions `h_k` of a finite list of rational
//! quantities, each computable by several independent routes, together with
//! the generating-function identities that tie the three families together.
//!
//! Generating functions (all in the indeterminate `z`):
//!
//! | name | definition            | expansion                  |
//! |------|-----------------------|----------------------------|
//! | `P`  | `sum a z/(1 - a z)`   | `sum p_k z^k`              |
//! | `Q`  | `sum a z/(1 + a z)`   | `sum (-1)^(k-1) p_k z^k`   |
//! | `R`  | `prod (1 + a z)`      | `sum e_k z^k`              |
//! | `S`  | `prod (1 - a z)`      | `sum (-1)^k e_k z^k`       |
//! | `T`  | `1/R`                 | `sum (-1)^k h_k z^k`       |
//! | `V`  | `1/S`                 | `sum h_k z^k`              |

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::series::{Coefficient, ExactRational, TruncatedSeries};

type RatSeries = TruncatedSeries<ExactRational>;

/// A finite list of quantities. Duplicates are allowed and order is irrelevant
/// to every derived value.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QuantitySet {
    values: Vec<ExactRational>,
}

impl QuantitySet {
    pub fn new(values: Vec<ExactRational>) -> Self {
        Self { values }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| ExactRational::from_i64(v)).collect())
    }

    /// Builds from `(numerator, denominator)` pairs. Panics on a zero denominator.
    pub fn from_fractions(values: &[(i64, i64)]) -> Self {
        Self::new(
            values
                .iter()
                .map(|&(n, d)| ExactRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        )
    }

    /// Up to `max_len` values with numerator and denominator drawn from
    /// `[-9, 9] \ {0}`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> Self {
        let len = rng.gen_range(0..=max_len);
        let mut small = || loop {
            let v: i64 = rng.gen_range(-9..=9);
            if v != 0 {
                return v;
            }
        };
        let values = (0..len)
            .map(|_| {
                let n = small();
                let d = small();
                ExactRational::new(BigInt::from(n), BigInt::from(d))
            })
            .collect();
        Self { values }
    }

    pub fn values(&self) -> &[ExactRational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementaryMethod {
    /// Expand `prod (1 + a z)` and read off coefficients.
    Direct,
    /// `k e_k = sum_{j=1..k} (-1)^(j-1) e_{k-j} p_j`
    Newton,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomogeneousMethod {
    /// Invert `prod (1 - a z)`.
    Direct,
    /// `k h_k = sum_{j=1..k} h_{k-j} p_j`
    FromPowerSums,
    /// `h_k = sum_{j=1..k} (-1)^(j-1) e_j h_{k-j}`
    FromElementary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenFn {
    P,
    Q,
    R,
    S,
    T,
    V,
}

/// Aligned `p`, `e`, `h` sequences through order `K`.
///
/// `p[k - 1]` holds `p_k` (there is no `p_0`); `e[k]` and `h[k]` hold `e_k`
/// and `h_k`, with `e[0] = h[0] = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymTriple {
    pub order: usize,
    pub p: Vec<ExactRational>,
    pub e: Vec<ExactRational>,
    pub h: Vec<ExactRational>,
}

impl SymTriple {
    /// Power sums by direct summation, `e` by Newton, `h` from `p`.
    pub fn compute(qs: &QuantitySet, order: usize) -> Self {
        let p = power_sums(qs, order);
        let e = newton_elementary(&p);
        let h = homogeneous_from_power_sums(&p);
        Self { order, p, e, h }
    }

    /// `sum_{k>=1} p_k z^k`
    pub fn power_sum_series(&self) -> RatSeries {
        let mut coeffs = vec![ExactRational::zero()];
        coeffs.extend(self.p.iter().cloned());
        RatSeries::from_poly(&coeffs, self.order)
    }

    /// `sum e_k z^k`
    pub fn elementary_series(&self) -> RatSeries {
        RatSeries::from_poly(&self.e, self.order)
    }

    /// `sum h_k z^k`
    pub fn homogeneous_series(&self) -> RatSeries {
        RatSeries::from_poly(&self.h, self.order)
    }
}

/// `p_1..p_K` by direct summation; `result[k - 1] = sum a^k`.
pub fn power_sums(qs: &QuantitySet, order: usize) -> Vec<ExactRational> {
    let mut sums = vec![ExactRational::zero(); order];
    for a in qs.values() {
        let mut power = a.clone();
        for slot in sums.iter_mut() {
            *slot += &power;
            power = &power * a;
        }
    }
    sums
}

/// `e_0..e_K`.
pub fn elementary(qs: &QuantitySet, order: usize, method: ElementaryMethod) -> Vec<ExactRational> {
    match method {
        ElementaryMethod::Direct => gen_fn(qs, order, GenFn::R).into_coeffs(),
        ElementaryMethod::Newton => newton_elementary(&power_sums(qs, order)),
    }
}

/// `h_0..h_K`.
pub fn homogeneous(
    qs: &QuantitySet,
    order: usize,
    method: HomogeneousMethod,
) -> Vec<ExactRational> {
    match method {
        HomogeneousMethod::Direct => gen_fn(qs, order, GenFn::V).into_coeffs(),
        HomogeneousMethod::FromPowerSums => homogeneous_from_power_sums(&power_sums(qs, order)),
        HomogeneousMethod::FromElementary => {
            homogeneous_from_elementary(&elementary(qs, order, ElementaryMethod::Newton))
        }
    }
}

/// Newton's identities: `e_0..e_K` from `p_1..p_K`.
pub fn newton_elementary(p: &[ExactRational]) -> Vec<ExactRational> {
    let order = p.len();
    let mut e = Vec::with_capacity(order + 1);
    e.push(ExactRational::one());
    for k in 1..=order {
        let mut acc = ExactRational::zero();
        for j in 1..=k {
            let term = &e[k - j] * &p[j - 1];
            if newton_sign_positive(j) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / ExactRational::from_i64(k as i64));
    }
    e
}

#[cfg(not(feature = "mutant-newton-sign"))]
fn newton_sign_positive(j: usize) -> bool {
    j % 2 == 1
}

// Deliberately wrong at j = 3: the suite must detect this.
#[cfg(feature = "mutant-newton-sign")]
fn newton_sign_positive(j: usize) -> bool {
    j % 2 == 1 && j != 3
}

/// `h_0..h_K` from `p_1..p_K` via `k h_k = sum h_{k-j} p_j`.
pub fn homogeneous_from_power_sums(p: &[ExactRational]) -> Vec<ExactRational> {
    let order = p.len();
    let mut h = Vec::with_capacity(order + 1);
    h.push(ExactRational::one());
    for k in 1..=order {
        let mut acc = ExactRational::zero();
        for j in 1..=k {
            acc += &h[k - j] * &p[j - 1];
        }
        h.push(acc / ExactRational::from_i64(k as i64));
    }
    h
}

/// `h_0..h_K` from `e_0..e_K` via `h_k = sum (-1)^(j-1) e_j h_{k-j}`.
pub fn homogeneous_from_elementary(e: &[ExactRational]) -> Vec<ExactRational> {
    let order = e.len() - 1;
    let mut h = Vec::with_capacity(order + 1);
    h.push(ExactRational::one());
    for k in 1..=order {
        let mut acc = ExactRational::zero();
        for j in 1..=k {
            let term = &e[j] * &h[k - j];
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        h.push(acc);
    }
    h
}

fn linear_factor_product(qs: &QuantitySet, order: usize, sign: i64) -> RatSeries {
    let sign = ExactRational::from_i64(sign);
    qs.values().iter().fold(RatSeries::one(order), |acc, a| {
        let factor = RatSeries::from_poly(&[ExactRational::one(), &sign * a], order);
        &acc * &factor
    })
}

/// One of the six generating functions, truncated at `order`.
pub fn gen_fn(qs: &QuantitySet, order: usize, which: GenFn) -> RatSeries {
    match which {
        GenFn::P | GenFn::Q => {
            // each a z / (1 - a z) resolved into a geometric progression
            let mut total = RatSeries::zero(order);
            for a in qs.values() {
                let r = if which == GenFn::P {
                    a.clone()
                } else {
                    -a.clone()
                };
                let geo = RatSeries::geometric(&r, order).shift(1).scalar_mul(a);
                total = &total + &geo;
            }
            total
        }
        GenFn::R => linear_factor_product(qs, order, 1),
        GenFn::S => linear_factor_product(qs, order, -1),
        GenFn::T => gen_fn(qs, order, GenFn::R)
            .invert()
            .expect("R has constant term 1"),
        GenFn::V => gen_fn(qs, order, GenFn::S)
            .invert()
            .expect("S has constant term 1"),
    }
}

/// One named residual series; the identity holds when it is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub name: &'static str,
    pub series: RatSeries,
}

impl Residual {
    pub fn holds(&self) -> bool {
        self.series.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub order: usize,
    pub residuals: Vec<Residual>,
}

impl IdentityReport {
    pub fn all_zero(&self) -> bool {
        self.residuals.iter().all(Residual::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Residual> {
        self.residuals.iter().filter(|r| !r.holds())
    }
}

/// Names of the residuals produced by [`verify_identities`], in report order.
pub const IDENTITY_NAMES: &[&str] = &[
    "elementary: direct = newton",
    "homogeneous: direct = from_p",
    "homogeneous: direct = from_e",
    "log-derivative: z R' - Q R",
    "log-derivative: z S' + P S",
    "log: log R - sum (-1)^(k-1) p_k z^k / k",
    "log: log V - sum p_k z^k / k",
    "exp: exp(log R) - R",
    "reciprocal: R T - 1",
    "reciprocal: S V - 1",
    "S(z) - R(-z)",
    "even/odd: (R + S)/2 - even(e)",
    "even/odd: (R - S)/2 - odd(e)",
    "even/odd: (R + S) - 2 R S even(h)",
    "even/odd: (R - S) - 2 R S odd(h)",
    "proportion: even(e) odd(h) - odd(e) even(h)",
    "quotient: R (1 - T) - (R - 1)",
    "quotient: S (V - 1) - (1 - S)",
    "coefficient-derivative: z V' - P V",
    "coefficient-derivative: -z T' - Q T",
    "quintuple R: e-series - R",
    "quintuple R: R h(-z) - 1",
    "quintuple R: R (h_1 z - h_2 z^2 + ...) - (e_1 z + e_2 z^2 + ...)",
    "quintuple R: R Q - (e_1 z + 2 e_2 z^2 + ...)",
    "quintuple R: R (h_1 z - 2 h_2 z^2 + ...) - Q",
    "quintuple S: e(-z) - S",
    "quintuple S: S h(z) - 1",
    "quintuple S: S (h_1 z + h_2 z^2 + ...) - (e_1 z - e_2 z^2 + ...)",
    "quintuple S: S P - (e_1 z - 2 e_2 z^2 + ...)",
    "quintuple S: S (h_1 z + 2 h_2 z^2 + ...) - P",
];

/// Evaluates every identity between `P, Q, R, S, T, V` and the `p/e/h`
/// families through order `K`.
///
/// `R` and `S` are built by multiplying out linear factors, `T` and `V` by
/// series inversion, `e` by Newton's identities and `h` from the power sums,
/// so each residual compares genuinely different computations. Quotients are
/// checked in cross-multiplied form.
pub fn verify_identities(qs: &QuantitySet, order: usize) -> IdentityReport {
    let triple = SymTriple::compute(qs, order);
    check_identities(qs, &triple)
}

/// As [`verify_identities`] but against a caller-supplied triple, so that a
/// corrupted triple can be shown to produce nonzero residuals.
pub fn check_identities(qs: &QuantitySet, triple: &SymTriple) -> IdentityReport {
    let order = triple.order;
    let minus_one = ExactRational::from_i64(-1);
    let two = ExactRational::from_i64(2);
    let one = RatSeries::one(order);

    let p_ser = gen_fn(qs, order, GenFn::P);
    let q_ser = gen_fn(qs, order, GenFn::Q);
    let r = gen_fn(qs, order, GenFn::R);
    let s = gen_fn(qs, order, GenFn::S);
    let t = r.invert().expect("R has constant term 1");
    let v = s.invert().expect("S has constant term 1");

    let e_ser = triple.elementary_series();
    let h_ser = triple.homogeneous_series();
    let e_neg = e_ser.scale_indeterminate(&minus_one);
    let h_neg = h_ser.scale_indeterminate(&minus_one);

    let powers = triple.power_sum_series();
    let powers_alt = powers
        .scale_indeterminate(&minus_one)
        .scalar_mul(&minus_one);
    let divided = |s: &RatSeries| {
        let coeffs: Vec<ExactRational> = s
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if k == 0 {
                    c.clone()
                } else {
                    c / ExactRational::from_i64(k as i64)
                }
            })
            .collect();
        RatSeries::new(coeffs).expect("nonempty")
    };

    let as_series = |v: Vec<ExactRational>| RatSeries::from_poly(&v, order);
    let e_direct = as_series(elementary(qs, order, ElementaryMethod::Direct));
    let h_direct = as_series(homogeneous(qs, order, HomogeneousMethod::Direct));
    let h_from_e = as_series(homogeneous_from_elementary(&triple.e));

    let log_r = r.log_series().expect("R has constant term 1");
    let log_v = v.log_series().expect("V has constant term 1");
    let rs2 = (&r * &s).scalar_mul(&two);
    let half = two.recip();

    let residuals = vec![
        &e_direct - &e_ser,
        &h_direct - &h_ser,
        &h_direct - &h_from_e,
        &r.z_dz() - &(&q_ser * &r),
        &s.z_dz() + &(&p_ser * &s),
        &log_r - &divided(&powers_alt),
        &log_v - &divided(&powers),
        &log_r.exp_series().expect("log has zero constant term") - &r,
        &(&r * &t) - &one,
        &(&s * &v) - &one,
        &s - &r.scale_indeterminate(&minus_one),
        &(&r + &s).scalar_mul(&half) - &e_ser.even_part(),
        &(&r - &s).scalar_mul(&half) - &e_ser.odd_part(),
        &(&r + &s) - &(&rs2 * &h_ser.even_part()),
        &(&r - &s) - &(&rs2 * &h_ser.odd_part()),
        &(&e_ser.even_part() * &h_ser.odd_part()) - &(&e_ser.odd_part() * &h_ser.even_part()),
        &(&r * &(&one - &t)) - &(&r - &one),
        &(&s * &(&v - &one)) - &(&one - &s),
        &v.z_dz() - &(&p_ser * &v),
        &(-&t.z_dz()) - &(&q_ser * &t),
        // five expressions for R
        &e_ser - &r,
        &(&r * &h_neg) - &one,
        &(&r * &(&one - &h_neg)) - &(&e_ser - &one),
        &(&r * &q_ser) - &e_ser.z_dz(),
        &(&r * &(-&h_neg.z_dz())) - &q_ser,
        // and for S, with -z in place of z
        &e_neg - &s,
        &(&s * &h_ser) - &one,
        &(&s * &(&h_ser - &one)) - &(&one - &e_neg),
        &(&s * &p_ser) - &(-&e_neg.z_dz()),
        &(&s * &h_ser.z_dz()) - &p_ser,
    ];

    debug_assert_eq!(residuals.len(), IDENTITY_NAMES.len());
    IdentityReport {
        order,
        residuals: IDENTITY_NAMES
            .iter()
            .zip(residuals)
            .map(|(&name, series)| Residual { name, series })
            .collect(),
    }
}
