//! Structure-preserving decompositions of quaternion matrices.
//!
//! A quaternion matrix `Q = B0 + B1 i + B2 j + B3 k` is held as its four real
//! blocks. The algorithms work directly on those blocks:
//!
//! * [`hess_reduce`]: unitary reduction to upper Hessenberg form,
//! * [`hess_qr`] and [`qr_full`]: QR factorizations,
//! * [`quaternion_schur`] and [`jrs_schur`]: Schur form by implicit
//!   double-shift QR iteration,
//! * [`eigvals`]: standard eigenvalues.
//!
//! ```
//! use quatqr::{eigvals, QuatMatrix, Quaternion};
//!
//! let q = QuatMatrix::from_diagonal(&[Quaternion::J, Quaternion::real(2.0)]);
//! let spec = eigvals(&q, 1e-14, None).unwrap();
//! assert_eq!(spec.values.len(), 2);
//! ```

mod error;
mod kernels;
mod matrix;
mod quaternion;

pub mod factor;
pub mod hessenberg;
pub mod opcount;
pub mod qmat;
pub mod rotations;
pub mod schur;
pub mod spectra;
pub mod structure;

pub use error::{QuatError, Result};
pub use factor::{hess_qr, hess_qr_with, qr_full, qr_iteration_unshifted, QRResult};
pub use hessenberg::{hess_reduce, tridiag_hermitian, HessMethod, HessenbergResult};
pub use matrix::QuatMatrix;
pub use quaternion::Quaternion;
pub use rotations::{
    jrs_givens4, make_givens, make_householder, Givens2, GivensVariant, HouseholderQ, HouseholderVariant,
    JrsGivens4,
};
pub use schur::{
    francis_first_col, francis_step, jrs_schur, quaternion_schur, quaternion_schur_with, trailing_shift, PairPolicy,
    SchurOptions, SchurResult, ShiftPair,
};
pub use spectra::{
    eigs_from_schur, eigvals, oracle_eigvals, oracle_eigvals_capped, spectrum_distance, standardize, SpectrumReport,
    StdEigenvalue,
};
pub use structure::{check_structure, StructureKind, StructureReport};
