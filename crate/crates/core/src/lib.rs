//! Exact discrete Clifford analysis on the lattice `h·Zⁿ`.
//!
//! The crate provides:
//!
//! * exact rational scalars, the Clifford algebra `Cl(0,n)` and quaternions ([`clifford`], [`quaternion`]);
//! * one-dimensional and multi-index factorial powers, Stirling conversions and the
//!   discrete homogeneous powers ([`factorial`]);
//! * Clifford-valued polynomials in the factorial basis ([`polynomial`]);
//! * forward/backward difference operators, Dirac, Euler, Gamma and their relatives,
//!   together with exact matrix assembly ([`operators`], [`stencil`]);
//! * the Fischer inner product, monogenic kernels and Fischer decompositions ([`fischer`]);
//! * the mixed quaternionic Dirac operators on `h·Z³` ([`quaternion_dirac`]);
//! * a registry of machine-checked identities ([`claims`]);
//! * a text grammar and JSON forms for polynomials ([`io`]).
//!
//! Every computation is exact; there is no floating point in the library.

pub mod claims;
pub mod clifford;
pub mod decompose;
pub mod error;
pub mod factorial;
pub mod fischer;
pub mod io;
pub mod linalg;
pub mod operators;
pub mod polynomial;
pub mod quaternion;
pub mod quaternion_dirac;
pub mod random;
pub mod rational;
pub mod stencil;

pub use clifford::{Blade, CliffordElement, MultiIndex};
pub use error::{Error, Result};
pub use factorial::{FamilySign, Sign, StirlingKind, StirlingTable};
pub use fischer::{FischerResult, MonogenicBasis, Strategy};

pub use linalg::Matrix;
pub use operators::{DifferenceOperator, OperatorMatrix};
pub use polynomial::{GradedComponentBasis, LatticePolynomial, MonomialPolynomial};
pub use quaternion::Quaternion;
pub use quaternion_dirac::{MixedVariant, QuaternionLatticePolynomial};

pub use rational::Rational;
