//! Paving matroids, their h-vectors, and pure multicomplex witnesses built
//! from monomial domination.

pub mod canonical;
pub mod designs;
pub mod domination;
pub mod error;
pub mod hvec;
pub mod io;
pub mod matroid;
pub mod monomial;
pub mod multicomplex;
pub mod paving;
pub mod subset;
pub mod tutte;

pub use canonical::{are_isomorphic, canonical_form, CanonicalForm};
pub use designs::{sparse_basis_bound, sparse_from_steiner, tutte_sparse_closed_form, verify_steiner, BlockDesign};
pub use domination::{
    conjecture_scan, f_bar, f_exact, necklaces_bruteforce, necklaces_l2, Budget, DominationInstance,
    DominationResult, FBar, ScanRow, ScanStatus,
};
pub use error::{Error, Result};
pub use hvec::{
    brown_colbourn_check, f_vector, h_from_f, h_vector, hibi_check, paving_h_vector, s_bound, FVector, HVector,
};
pub use matroid::{Matroid, Minor};
pub use monomial::Monomial;
pub use multicomplex::{certify_general_h, certify_paving_h, Multicomplex, OSequence};
pub use paving::{enumerate_paving, enumerate_sparse_paving, g, EnumFlags, GValue, PartitionFamily};
pub use subset::Mask;
pub use tutte::{tutte, TuttePolynomial};
pub use num_rational::Ratio;
