//! End-to-end acceptance run: each criterion is timed against its limit and
//! reported on a single PASS/FAIL line. Run with `--nocapture` to see them.
//!
//! The criteria run sequentially inside one test so that wall-clock limits
//! are not distorted by sibling tests competing for cores.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use qpart::{
    anypart_gf, count_any, count_distinct, denominator_poly, denumerant, distinct_gf, elementary,
    enumerate, homogeneous, partition_number, partition_series, pentagonal_series,
    product_to_sum_residual, verify_identities, DistinctMethod, ElementaryMethod, ExactRational,
    HomogeneousMethod, IntSeries, Integer, PartitionMethod, PentagonalMethod, QuantitySet,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn uint(n: u64) -> BigUint {
    BigUint::from(n)
}

/// Coefficients listed as `(exponent, value)` pairs must all match.
fn matches_listing(s: &IntSeries, listing: &[(usize, i64)]) -> Check {
    for &(k, v) in listing {
        ensure(s.coeff(k) == &Integer::from(v), || {
            format!("coefficient of n^{k} is {}, expected {v}", s.coeff(k))
        })?;
    }
    Ok(())
}

fn run_of(start: usize, values: &[i64]) -> Vec<(usize, i64)> {
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| (start + i, v))
        .collect()
}

fn criterion_1() -> Check {
    let routes = [
        ("recurrence", count_distinct(50, 7).into_inner()),
        (
            "series",
            distinct_gf(7, 50, DistinctMethod::Closed)
                .map_err(|e| e.to_string())?
                .coeff(50)
                .to_biguint()
                .unwrap(),
        ),
        (
            "denumerant",
            denumerant(22, 7).map_err(|e| e.to_string())?.into_inner(),
        ),
        ("conversion", count_any(50 - 21, 7).into_inner()),
    ];
    for (name, v) in &routes {
        ensure(*v == uint(522), || format!("{name} gave {v}"))?;
    }
    Ok(())
}

fn criterion_2() -> Check {
    let routes = [
        ("recurrence", count_any(50, 7).into_inner()),
        ("conversion", count_distinct(71, 7).into_inner()),
        (
            "denumerant",
            denumerant(43, 7).map_err(|e| e.to_string())?.into_inner(),
        ),
        (
            "series",
            anypart_gf(7, 50)
                .map_err(|e| e.to_string())?
                .coeff(50)
                .to_biguint()
                .unwrap(),
        ),
    ];
    for (name, v) in &routes {
        ensure(*v == uint(8946), || format!("{name} gave {v}"))?;
    }
    Ok(())
}

fn criterion_3() -> Check {
    let distinct_listings: [(usize, Vec<(usize, i64)>); 7] = [
        (1, run_of(0, &[0, 1, 1, 1, 1, 1, 1, 1])),
        (2, run_of(0, &[0, 0, 0, 1, 1, 2, 2, 3, 3, 4, 4])),
        (3, run_of(0, &[0, 0, 0, 0, 0, 0, 1, 1, 2, 3, 4, 5, 7, 8])),
        (4, run_of(10, &[1, 1, 2, 3, 5, 6, 9])),
        (5, run_of(15, &[1, 1, 2, 3, 5, 7, 10])),
        (6, run_of(21, &[1, 1, 2, 3, 5, 7, 11])),
        (7, run_of(28, &[1, 1, 2, 3, 5, 7, 11])),
    ];
    for (mu, listing) in &distinct_listings {
        let order = listing.last().unwrap().0;
        for method in [
            DistinctMethod::Closed,
            DistinctMethod::Stepwise,
            DistinctMethod::CoeffRecurrence,
        ] {
            let s = distinct_gf(*mu, order, method).map_err(|e| e.to_string())?;
            matches_listing(&s, listing)
                .map_err(|e| format!("distinct mu={mu} {method:?}: {e}"))?;
            // nothing below the triangular number
            ensure(
                s.coeffs()[..qpart::triangular(*mu)]
                    .iter()
                    .all(Zero::is_zero),
                || format!("distinct mu={mu}: nonzero below leading term"),
            )?;
        }
    }

    let any_listings: [(usize, Vec<(usize, i64)>); 4] = [
        (1, run_of(0, &[0, 1, 1, 1, 1, 1])),
        (2, run_of(0, &[0, 0, 1, 1, 2, 2, 3, 3, 4, 4])),
        (3, run_of(0, &[0, 0, 0, 1, 1, 2, 3, 4, 5, 7])),
        (4, run_of(0, &[0, 0, 0, 0, 1, 1, 2, 3, 5, 6, 9])),
    ];
    for (mu, listing) in &any_listings {
        let order = listing.last().unwrap().0;
        let s = anypart_gf(*mu, order).map_err(|e| e.to_string())?;
        matches_listing(&s, listing).map_err(|e| format!("any mu={mu}: {e}"))?;
    }
    Ok(())
}

fn criterion_4() -> Check {
    let printed: [(usize, &[i64]); 5] = [
        (2, &[1, -1, -1, 1]),
        (3, &[1, -1, -1, 0, 1, 1, -1]),
        (4, &[1, -1, -1, 0, 0, 2, 0, 0, -1, -1, 1]),
        (5, &[1, -1, -1, 0, 0, 1, 1, 1, -1, -1, -1, 0, 0, 1, 1, -1]),
        (
            6,
            &[
                1, -1, -1, 0, 0, 1, 0, 2, 0, -1, -1, -1, -1, 0, 2, 0, 1, 0, 0, -1, -1, 1,
            ],
        ),
    ];
    for (mu, coeffs) in printed {
        let expected: Vec<Integer> = coeffs.iter().map(|&c| Integer::from(c)).collect();
        let got = denominator_poly(mu);
        ensure(got == expected, || format!("mu={mu}: got {got:?}"))?;
    }
    Ok(())
}

fn criterion_5() -> Check {
    let signs: [(usize, i64); 12] = [
        (0, 1),
        (1, -1),
        (2, -1),
        (5, 1),
        (7, 1),
        (12, -1),
        (15, -1),
        (22, 1),
        (26, 1),
        (35, -1),
        (40, -1),
        (51, 1),
    ];
    let product = pentagonal_series(51, PentagonalMethod::Product);
    let closed = pentagonal_series(51, PentagonalMethod::Closed);
    ensure(product == closed, || {
        "product and closed forms differ".into()
    })?;
    for k in 0..=51 {
        let expected = signs.iter().find(|(e, _)| *e == k).map_or(0, |&(_, s)| s);
        ensure(product.coeff(k) == &Integer::from(expected), || {
            format!("n^{k}: got {}, expected {expected}", product.coeff(k))
        })?;
    }
    Ok(())
}

fn criterion_6() -> Check {
    let inverse = partition_series(120, PartitionMethod::Inverse);
    let recurrence = partition_series(120, PartitionMethod::Recurrence);
    let first: Vec<Integer> = [1, 1, 2, 3, 5, 7, 11, 15, 22].map(Integer::from).to_vec();
    ensure(inverse.coeffs()[..9] == first[..], || {
        format!("leading coefficients {:?}", &inverse.coeffs()[..9])
    })?;
    ensure(inverse == recurrence, || {
        "inverse and recurrence routes differ".into()
    })?;
    for m in 0..=120usize {
        let summed = (0..=m).fold(BigUint::zero(), |acc, mu| {
            acc + count_any(m, mu).into_inner()
        });
        let from_series = inverse.coeff(m).to_biguint().unwrap();
        ensure(summed == from_series, || {
            format!("m={m}: {summed} vs {from_series}")
        })?;
        ensure(partition_number(m).into_inner() == summed, || {
            format!("p({m}) mismatch")
        })?;
    }
    Ok(())
}

/// e_k as the sum of products over k-subsets, independent of both library routes.
fn subset_elementary(values: &[ExactRational], order: usize) -> Vec<ExactRational> {
    let mut e = vec![ExactRational::zero(); order + 1];
    for mask in 0u32..(1 << values.len()) {
        let k = mask.count_ones() as usize;
        if k <= order {
            let prod = values
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .fold(ExactRational::one(), |acc, (_, v)| acc * v);
            e[k] += prod;
        }
    }
    e
}

fn criterion_7() -> Check {
    let order = 12;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..200 {
        let qs = QuantitySet::random(&mut rng, 6);
        let direct = elementary(&qs, order, ElementaryMethod::Direct);
        let newton = elementary(&qs, order, ElementaryMethod::Newton);
        let subsets = subset_elementary(qs.values(), order);
        ensure(direct == newton && direct == subsets, || {
            format!("trial {trial}: elementary routes differ for {qs:?}")
        })?;
        let h = homogeneous(&qs, order, HomogeneousMethod::Direct);
        for method in [
            HomogeneousMethod::FromPowerSums,
            HomogeneousMethod::FromElementary,
        ] {
            ensure(homogeneous(&qs, order, method) == h, || {
                format!("trial {trial}: homogeneous {method:?} differs for {qs:?}")
            })?;
        }
        let report = verify_identities(&qs, order);
        let failed: Vec<_> = report.failures().map(|r| r.name).collect();
        ensure(failed.is_empty(), || {
            format!("trial {trial}: {failed:?} for {qs:?}")
        })?;
    }
    Ok(())
}

fn criterion_8() -> Check {
    let residual = product_to_sum_residual(6, 40).map_err(|e| e.to_string())?;
    ensure(residual.is_zero(), || "nonzero residual".into())
}

fn criterion_9() -> Check {
    for m in 0..=30 {
        for mu in 0..=m {
            for distinct in [false, true] {
                let listed = enumerate(m, mu, distinct).map_err(|e| e.to_string())?;
                let count = if distinct {
                    count_distinct(m, mu)
                } else {
                    count_any(m, mu)
                };
                ensure(count == listed.len() as u64, || {
                    format!(
                        "m={m} mu={mu} distinct={distinct}: {} listed, count {count}",
                        listed.len()
                    )
                })?;
            }
        }
    }

    let printed: [(usize, usize, bool, Vec<&str>); 3] = [
        (
            16,
            4,
            true,
            vec![
                "1+2+3+10", "1+2+4+9", "1+2+5+8", "1+2+6+7", "1+3+4+8", "1+3+5+7", "1+4+5+6",
                "2+3+4+7", "2+3+5+6",
            ],
        ),
        (
            34,
            7,
            true,
            vec![
                "1+2+3+4+5+6+13",
                "1+2+3+4+5+7+12",
                "1+2+3+4+5+8+11",
                "1+2+3+4+5+9+10",
                "1+2+3+4+6+7+11",
                "1+2+3+4+6+8+10",
                "1+2+3+4+7+8+9",
                "1+2+3+5+6+7+10",
                "1+2+3+5+6+8+9",
                "1+2+4+5+6+7+9",
                "1+3+4+5+6+7+8",
            ],
        ),
        (
            9,
            3,
            false,
            vec![
                "1+1+7", "1+2+6", "1+3+5", "1+4+4", "2+2+5", "2+3+4", "3+3+3",
            ],
        ),
    ];
    for (m, mu, distinct, expected) in printed {
        let mut got: Vec<String> = enumerate(m, mu, distinct)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|p| {
                p.ascending()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("+")
            })
            .collect();
        got.sort_by(|a, b| {
            let key = |s: &str| {
                s.split('+')
                    .map(|x| x.parse::<usize>().unwrap())
                    .collect::<Vec<_>>()
            };
            key(a).cmp(&key(b))
        });
        ensure(got == expected, || format!("m={m} mu={mu}: {got:?}"))?;
    }
    Ok(())
}

fn criterion_10() -> Check {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_qpart"))
            .args(["verify", "--order", "12", "--trials", "50", "--seed", "1"])
            .output()
            .map_err(|e| e.to_string())
    };
    let first = run()?;
    let second = run()?;
    ensure(first.status.code() == Some(0), || {
        format!("exit code {:?}", first.status.code())
    })?;
    ensure(second.status.code() == Some(0), || {
        format!("exit code {:?} on rerun", second.status.code())
    })?;
    ensure(
        !first.stdout.is_empty() && first.stdout == second.stdout,
        || "stdout differs between runs".into(),
    )
}

#[test]
fn acceptance() {
    type Criterion = (u32, &'static str, Option<Duration>, fn() -> Check);
    let criteria: [Criterion; 10] = [
        (
            1,
            "522 distinct partitions of 50 into 7 parts, four routes",
            Some(Duration::from_secs(1)),
            criterion_1,
        ),
        (
            2,
            "8946 partitions of 50 into 7 parts, four routes",
            Some(Duration::from_secs(1)),
            criterion_2,
        ),
        (
            3,
            "printed distinct and any-part series coefficients",
            Some(Duration::from_secs(1)),
            criterion_3,
        ),
        (
            4,
            "recurrent-series denominators for mu = 2..6",
            None,
            criterion_4,
        ),
        (
            5,
            "pentagonal product through n^51",
            Some(Duration::from_secs(2)),
            criterion_5,
        ),
        (
            6,
            "partition function routes for m <= 120",
            Some(Duration::from_secs(5)),
            criterion_6,
        ),
        (
            7,
            "symmetric-function identities on 200 random sets, order 12",
            Some(Duration::from_secs(30)),
            criterion_7,
        ),
        (
            8,
            "product-to-sum identity at z-degree 6, n-order 40",
            Some(Duration::from_secs(5)),
            criterion_8,
        ),
        (
            9,
            "enumeration matches counts for m <= 30 and printed lists",
            Some(Duration::from_secs(60)),
            criterion_9,
        ),
        (
            10,
            "verify is deterministic and exits 0",
            None,
            criterion_10,
        ),
    ];

    let mut failures = Vec::new();
    for (id, label, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let outcome = match (result, limit) {
            (Err(e), _) => Err(e),
            (Ok(()), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
            (Ok(()), _) => Ok(()),
        };
        match outcome {
            Ok(()) => println!("PASS criterion {id}: {label} ({elapsed:.2?})"),
            Err(e) => {
                println!("FAIL criterion {id}: {label} ({elapsed:.2?}): {e}");
                failures.push(id);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
