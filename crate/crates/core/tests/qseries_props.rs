use num_traits::{One, Zero};
use qpart::qseries::pentagonal_terms;
use qpart::{
    anypart_gf, bivariate_product, count_distinct, denominator_poly, distinct_gf, partition_series,
    pentagonal_series, triangular, DistinctMethod, FactorSign, IntSeries, Integer, PartitionMethod,
    PentagonalMethod,
};

#[test]
fn distinct_methods_agree() {
    for mu in 1..=8 {
        for order in [0, 1, 7, 20, 36, 55, 80] {
            let closed = distinct_gf(mu, order, DistinctMethod::Closed).unwrap();
            assert_eq!(
                closed,
                distinct_gf(mu, order, DistinctMethod::Stepwise).unwrap()
            );
            assert_eq!(
                closed,
                distinct_gf(mu, order, DistinctMethod::CoeffRecurrence).unwrap()
            );
        }
    }
}

#[test]
fn leading_terms() {
    for mu in 1..=8 {
        let t = triangular(mu);
        let d = distinct_gf(mu, 80, DistinctMethod::Closed).unwrap();
        assert!(d.coeffs()[..t].iter().all(Zero::is_zero));
        assert!(d.coeff(t).is_one());

        let a = anypart_gf(mu, 80).unwrap();
        assert!(a.coeffs()[..mu].iter().all(Zero::is_zero));
        assert!(a.coeff(mu).is_one());
    }
}

#[test]
fn denominator_times_series_is_monomial() {
    for mu in 1..=8 {
        let order = 70;
        let denom = IntSeries::from_poly(&denominator_poly(mu), order);
        let d = distinct_gf(mu, order, DistinctMethod::CoeffRecurrence).unwrap();
        assert_eq!(
            &denom * &d,
            IntSeries::monomial(Integer::one(), triangular(mu), order)
        );
    }
}

#[test]
fn pentagonal_support() {
    let order = 300;
    let s = pentagonal_series(order, PentagonalMethod::Product);
    assert_eq!(s, pentagonal_series(order, PentagonalMethod::Closed));
    let mut support = vec![0usize];
    for t in pentagonal_terms(order) {
        let (lo, hi) = t.exponents();
        support.push(lo);
        if hi <= order {
            support.push(hi);
        }
    }
    support.sort_unstable();
    let nonzero: Vec<usize> = (0..=order).filter(|&k| !s.coeff(k).is_zero()).collect();
    assert_eq!(nonzero, support);
    for c in s.coeffs() {
        assert!(c.is_zero() || c.is_one() || *c == -Integer::one());
    }
}

#[test]
fn pentagonal_exponents_increase() {
    let mut last = 0;
    for t in pentagonal_terms(10_000) {
        let (lo, hi) = t.exponents();
        assert!(last < lo && lo < hi);
        last = hi;
    }
}

#[test]
fn partition_series_routes_and_growth() {
    let inverse = partition_series(150, PartitionMethod::Inverse);
    assert_eq!(inverse, partition_series(150, PartitionMethod::Recurrence));
    for m in 1..150 {
        assert!(inverse.coeff(m) > &Integer::zero());
        assert!(inverse.coeff(m) <= inverse.coeff(m + 1));
    }
}

#[test]
fn bivariate_matches_distinct_counts() {
    let order = 45;
    let plus = bivariate_product(8, order, FactorSign::Plus);
    let minus = bivariate_product(8, order, FactorSign::Minus);
    for mu in 0..=8 {
        for m in 0..=order {
            let expected = Integer::from(count_distinct(m, mu).into_inner());
            assert_eq!(plus.coefficient(mu).coeff(m), &expected, "z^{mu} n^{m}");
            let signed = if mu % 2 == 0 { expected } else { -expected };
            assert_eq!(minus.coefficient(mu).coeff(m), &signed);
        }
    }
}
