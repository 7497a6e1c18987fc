//! Exact arithmetic for power sums, elementary and complete homogeneous
//! symmetric functions, and the q-series that count integer partitions.
//!
//! * [`series`]: truncated formal power series over exact integers or rationals
//! * [`symmetric`]: the `p`, `e`, `h` families of a finite quantity set and
//!   the generating-function identities relating them
//! * [`qseries`]: the specialization to `n, n^2, n^3, ...`, giving partition
//!   generating functions, the pentagonal series and `p(m)`
//! * [`partitions`]: counting and enumerating partitions into a fixed number
//!   of parts

pub mod partitions;
pub mod qseries;
pub mod series;
pub mod symmetric;

pub use partitions::{
    count_any, count_distinct, denumerant, enumerate, partition_number, AnyCounter,
    DistinctCounter, Partition, PartitionCount, PartitionError, PartitionQuery,
};
pub use qseries::{
    anypart_gf, bivariate_product, denominator_poly, distinct_gf, partition_series,
    pentagonal_series, product_to_sum_residual, shift_residual, triangular, BivariateTruncation,
    DistinctMethod, FactorSign, IntSeries, PartitionMethod, PentagonalMethod, PentagonalTerm,
    QSeriesError,
};
pub use series::{Coefficient, ExactRational, Integer, SeriesError, TruncatedSeries};
pub use symmetric::{
    elementary, gen_fn, homogeneous, power_sums, verify_identities, ElementaryMethod, GenFn,
    HomogeneousMethod, IdentityReport, QuantitySet, SymTriple,
};
