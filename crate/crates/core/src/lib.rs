//! Classification of hyperspherical equivariant Slodowy slices `G×S_e` for
//! classical and exceptional groups, with exact-rational verification of the
//! coisotropy claims and a lookup of the S-dual Lie superalgebra.

pub mod classifier;
pub mod datasets;
pub mod exactlinalg;
pub mod liealg;
pub mod partitions;
pub mod realizations;
pub mod report;
pub mod superdual;
pub mod verifier;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Partition(#[from] partitions::PartitionError),
    #[error(transparent)]
    Lie(#[from] liealg::LieError),
    #[error(transparent)]
    Classify(#[from] classifier::ClassifyError),
    #[error(transparent)]
    Dual(#[from] superdual::DualError),
    #[error(transparent)]
    Dataset(#[from] datasets::DatasetError),
    #[error(transparent)]
    Linalg(#[from] exactlinalg::LinalgError),
    #[error(transparent)]
    Realization(#[from] realizations::RealizationError),
    #[error(transparent)]
    Verify(#[from] verifier::VerifyError),
}
