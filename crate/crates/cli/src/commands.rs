use num_bigint::BigUint;
use qpart::qseries::{pentagonal_terms, DistinctMethod, PartitionMethod, PentagonalMethod};
use qpart::symmetric::IDENTITY_NAMES;
use qpart::{
    anypart_gf, count_any, count_distinct, denominator_poly, denumerant, distinct_gf, enumerate,
    partition_series, pentagonal_series, product_to_sum_residual, shift_residual, triangular,
    verify_identities, AnyCounter, DistinctCounter, IntSeries, Integer, PartitionCount,
    QuantitySet,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::record::{Check, CrossCheck, MethodValue, OutputRecord, Payload};
use crate::{params, CountMethod, SeriesKind, UsageError, TABLE_MAX_M};

/// Largest part count covered by the shift-relation and method-agreement checks.
const VERIFY_MAX_MU: usize = 8;
/// z-degree of the product-to-sum check.
const VERIFY_Z_DEGREE: usize = 6;
/// Minimum n-order of the q-series checks.
const VERIFY_MIN_N_ORDER: usize = 40;

fn series_coeff(s: &IntSeries, k: usize) -> PartitionCount {
    let c = s.coeff(k);
    PartitionCount::from(
        c.to_biguint()
            .expect("partition series coefficients are nonnegative"),
    )
}

fn route(
    method: CountMethod,
    m: usize,
    mu: usize,
    distinct: bool,
) -> Result<PartitionCount, UsageError> {
    let zero = || PartitionCount::from(BigUint::default());
    Ok(match (method, distinct) {
        (CountMethod::Recurrence, true) => count_distinct(m, mu),
        (CountMethod::Recurrence, false) => count_any(m, mu),
        (CountMethod::Conversion, true) => {
            let shift = mu.checked_sub(1).map_or(0, triangular);
            if m >= shift {
                count_any(m - shift, mu)
            } else {
                zero()
            }
        }
        (CountMethod::Conversion, false) => {
            let shift = mu.checked_sub(1).map_or(0, triangular);
            count_distinct(m + shift, mu)
        }
        (CountMethod::Denumerant, _) => {
            if mu == 0 {
                return Err(UsageError::MethodNeedsParts("denumerant"));
            }
            let base = if distinct { triangular(mu) } else { mu };
            if m >= base {
                denumerant(m - base, mu)?
            } else {
                zero()
            }
        }
        (CountMethod::Series, _) => {
            if mu == 0 {
                return Err(UsageError::MethodNeedsParts("series"));
            }
            let s = if distinct {
                distinct_gf(mu, m, DistinctMethod::CoeffRecurrence)
            } else {
                anypart_gf(mu, m)
            }
            .expect("mu >= 1");
            series_coeff(&s, m)
        }
        (CountMethod::All, _) => unreachable!("expanded by caller"),
    })
}

fn method_name(method: CountMethod) -> &'static str {
    match method {
        CountMethod::Recurrence => "recurrence",
        CountMethod::Series => "series",
        CountMethod::Denumerant => "denumerant",
        CountMethod::Conversion => "conversion",
        CountMethod::All => "all",
    }
}

pub fn count(
    m: usize,
    mu: usize,
    distinct: bool,
    method: CountMethod,
) -> Result<OutputRecord, UsageError> {
    let methods: Vec<CountMethod> = match method {
        CountMethod::All if mu == 0 => vec![CountMethod::Recurrence, CountMethod::Conversion],
        CountMethod::All => vec![
            CountMethod::Recurrence,
            CountMethod::Conversion,
            CountMethod::Denumerant,
            CountMethod::Series,
        ],
        single => vec![single],
    };
    let mut values = Vec::with_capacity(methods.len());
    for mth in methods {
        values.push(MethodValue {
            method: method_name(mth).to_string(),
            value: Payload::Scalar(route(mth, m, mu, distinct)?.to_string()),
        });
    }
    let cross_check = CrossCheck::from_agreement(&values);
    Ok(OutputRecord {
        operation: "count".into(),
        params: params([
            ("m", m.to_string()),
            ("mu", mu.to_string()),
            ("distinct", distinct.to_string()),
            ("method", method_name(method).to_string()),
        ]),
        result: values[0].value.clone(),
        methods: values,
        cross_check,
    })
}

fn coefficient_strings(s: &IntSeries) -> Vec<String> {
    s.coeffs().iter().map(Integer::to_string).collect()
}

pub fn series(
    kind: SeriesKind,
    mu: Option<usize>,
    order: usize,
) -> Result<OutputRecord, UsageError> {
    let need_mu = |name| match mu {
        None => Err(UsageError::MissingMu(name)),
        Some(0) => Err(UsageError::ZeroMu),
        Some(v) => Ok(v),
    };
    let (name, routes): (&str, Vec<(&str, IntSeries)>) = match kind {
        SeriesKind::Distinct => {
            let mu = need_mu("distinct")?;
            let run = |m| distinct_gf(mu, order, m).expect("mu >= 1");
            (
                "distinct",
                vec![
                    ("closed", run(DistinctMethod::Closed)),
                    ("stepwise", run(DistinctMethod::Stepwise)),
                    ("coeff-recurrence", run(DistinctMethod::CoeffRecurrence)),
                ],
            )
        }
        SeriesKind::Any => {
            let mu = need_mu("any")?;
            let closed = anypart_gf(mu, order).expect("mu >= 1");
            // the distinct series with exponents lowered by mu(mu-1)/2
            let shifted = {
                let d = distinct_gf(
                    mu,
                    order + triangular(mu - 1),
                    DistinctMethod::CoeffRecurrence,
                )
                .expect("mu >= 1");
                IntSeries::from_poly(&d.coeffs()[triangular(mu - 1)..], order)
            };
            (
                "any",
                vec![("closed", closed), ("shifted-distinct", shifted)],
            )
        }
        SeriesKind::Pentagonal => (
            "pentagonal",
            vec![
                (
                    "product",
                    pentagonal_series(order, PentagonalMethod::Product),
                ),
                ("closed", pentagonal_series(order, PentagonalMethod::Closed)),
            ],
        ),
        SeriesKind::Partition => (
            "partition",
            vec![
                ("inverse", partition_series(order, PartitionMethod::Inverse)),
                (
                    "recurrence",
                    partition_series(order, PartitionMethod::Recurrence),
                ),
            ],
        ),
    };
    let methods: Vec<MethodValue> = routes
        .iter()
        .map(|(m, s)| MethodValue {
            method: m.to_string(),
            value: Payload::List(coefficient_strings(s)),
        })
        .collect();
    let cross_check = CrossCheck::from_agreement(&methods);
    let mut p = params([("kind", name.to_string()), ("order", order.to_string())]);
    if let Some(mu) = mu {
        p.insert("mu".into(), mu.to_string());
    }
    Ok(OutputRecord {
        operation: "series".into(),
        params: p,
        result: methods[0].value.clone(),
        methods,
        cross_check,
    })
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

pub fn verify(order: usize, trials: usize, seed: u64) -> Result<OutputRecord, UsageError> {
    if order < 2 {
        return Err(UsageError::OrderTooSmall);
    }
    let mut checks = Vec::new();

    // symmetric-function identities over seeded random quantity sets
    let mut failures = vec![0usize; IDENTITY_NAMES.len()];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let qs = QuantitySet::random(&mut rng, 6);
        let report = verify_identities(&qs, order);
        for (slot, r) in failures.iter_mut().zip(&report.residuals) {
            if !r.holds() {
                *slot += 1;
            }
        }
    }
    for (name, failed) in IDENTITY_NAMES.iter().zip(failures) {
        let detail = if failed == 0 {
            format!("{trials} sets, order {order}")
        } else {
            format!("{failed} of {trials} sets nonzero, order {order}")
        };
        checks.push(check(*name, failed == 0, detail));
    }

    let n_order = order.max(VERIFY_MIN_N_ORDER);
    let z_degree = (1..=VERIFY_Z_DEGREE)
        .rev()
        .find(|&d| triangular(d) <= n_order)
        .unwrap_or(1);
    let residual = product_to_sum_residual(z_degree, n_order).expect("order checked");
    checks.push(check(
        "product to sum: prod (1 + n^k z) = sum z^mu n^T(mu) / prod (1 - n^i)",
        residual.is_zero(),
        format!("z-degree {z_degree}, n-order {n_order}"),
    ));

    for mu in 1..=VERIFY_MAX_MU {
        let ok = shift_residual(mu, n_order)
            .map(|r| r.is_zero())
            .unwrap_or(false);
        checks.push(check(
            format!("shift: e_{mu}(n) = n^{} h_{mu}(n)", triangular(mu - 1)),
            ok,
            format!("n-order {n_order}"),
        ));
    }

    let mut methods_ok = true;
    let mut denominators_ok = true;
    for mu in 1..=VERIFY_MAX_MU {
        let closed = distinct_gf(mu, n_order, DistinctMethod::Closed).expect("mu >= 1");
        methods_ok &= closed
            == distinct_gf(mu, n_order, DistinctMethod::Stepwise).expect("mu >= 1")
            && closed
                == distinct_gf(mu, n_order, DistinctMethod::CoeffRecurrence).expect("mu >= 1");
        let denom = IntSeries::from_poly(&denominator_poly(mu), n_order);
        denominators_ok &=
            &denom * &closed == IntSeries::monomial(Integer::from(1), triangular(mu), n_order);
    }
    checks.push(check(
        "distinct series: closed = stepwise = coefficient recurrence",
        methods_ok,
        format!("mu 1..={VERIFY_MAX_MU}, n-order {n_order}"),
    ));
    checks.push(check(
        "recurrent series: denominator * e_mu(n) = n^T(mu)",
        denominators_ok,
        format!("mu 1..={VERIFY_MAX_MU}, n-order {n_order}"),
    ));

    let pent = pentagonal_series(n_order, PentagonalMethod::Product);
    let pentagonal_count = pentagonal_terms(n_order).count();
    checks.push(check(
        "pentagonal: prod (1 - n^k) = sum over (3x^2 +- x)/2",
        pent == pentagonal_series(n_order, PentagonalMethod::Closed),
        format!("n-order {n_order}, {pentagonal_count} terms"),
    ));

    let inverse = partition_series(n_order, PartitionMethod::Inverse);
    checks.push(check(
        "partition numbers: 1/pentagonal = pentagonal recurrence",
        inverse == partition_series(n_order, PartitionMethod::Recurrence)
            && &inverse * &pent == IntSeries::one(n_order),
        format!("n-order {n_order}"),
    ));

    let all_pass = checks.iter().all(|c| c.passed);
    Ok(OutputRecord {
        operation: "verify".into(),
        params: params([
            ("order", order.to_string()),
            ("trials", trials.to_string()),
            ("seed", seed.to_string()),
        ]),
        result: Payload::Checks(checks),
        methods: Vec::new(),
        cross_check: if all_pass {
            CrossCheck::Pass
        } else {
            CrossCheck::Fail
        },
    })
}

pub fn table(max_m: usize, max_mu: usize, distinct: bool) -> Result<OutputRecord, UsageError> {
    if max_m > TABLE_MAX_M {
        return Err(UsageError::TableTooLarge);
    }
    if max_mu > max_m {
        return Err(UsageError::TableShape);
    }
    let mut header = vec!["m".to_string()];
    header.extend((1..=max_mu).map(|mu| format!("mu={mu}")));
    let mut rows = vec![header];

    let mut cell: Box<dyn FnMut(usize, usize) -> PartitionCount> = if distinct {
        let mut c = DistinctCounter::new();
        c.count(max_m, max_mu);
        Box::new(move |m, mu| c.count(m, mu))
    } else {
        let mut c = AnyCounter::new();
        c.count(max_m, max_mu);
        Box::new(move |m, mu| c.count(m, mu))
    };
    for m in 0..=max_m {
        let mut row = vec![m.to_string()];
        row.extend((1..=max_mu).map(|mu| cell(m, mu).to_string()));
        rows.push(row);
    }
    Ok(OutputRecord {
        operation: "table".into(),
        params: params([
            ("max_m", max_m.to_string()),
            ("max_mu", max_mu.to_string()),
            ("distinct", distinct.to_string()),
        ]),
        result: Payload::Table(rows),
        methods: vec![MethodValue {
            method: "recurrence".into(),
            value: Payload::Scalar("memoized".into()),
        }],
        cross_check: CrossCheck::Single,
    })
}

pub fn list(
    m: usize,
    mu: usize,
    distinct: bool,
    ascending: bool,
) -> Result<OutputRecord, UsageError> {
    let parts = enumerate(m, mu, distinct)?;
    let rendered: Vec<String> = parts
        .iter()
        .map(|p| {
            if ascending {
                p.ascending()
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join("+")
            } else {
                p.to_string()
            }
        })
        .collect();
    let expected = if distinct {
        count_distinct(m, mu)
    } else {
        count_any(m, mu)
    };
    let methods = vec![
        MethodValue {
            method: "enumeration".into(),
            value: Payload::Scalar(parts.len().to_string()),
        },
        MethodValue {
            method: "recurrence".into(),
            value: Payload::Scalar(expected.to_string()),
        },
    ];
    let cross_check = CrossCheck::from_agreement(&methods);
    Ok(OutputRecord {
        operation: "list".into(),
        params: params([
            ("m", m.to_string()),
            ("mu", mu.to_string()),
            ("distinct", distinct.to_string()),
            ("ascending", ascending.to_string()),
        ]),
        result: Payload::List(rendered),
        methods,
        cross_check,
    })
}
