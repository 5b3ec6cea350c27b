//! Extended Weyl groups, their twisted involutions, and the Hecke modules
//! built on them.
//!
//! The library constructs simply connected root data for the finite Cartan
//! types, the torus quotient obtained by tensoring the weight lattice with
//! the rationals mod one, and the semidirect product of the Weyl group with
//! that quotient.  On top of these it enumerates the twisted involutions of
//! the extended group, realizes the braid-group action on the module they
//! span with exact Laurent-polynomial coefficients, and computes the bar
//! involution together with its canonical basis.  Two independent oracles
//! (a blockwise transport of the action, and brute-force counting over small
//! quadratic field extensions) cross-validate the direct formulas.

pub mod barcanon;
pub mod coeff;
pub mod extweyl;
pub mod fforacle;
pub mod heckemod;
pub mod rootdata;
pub mod torusquot;
pub mod verify;
pub mod wire;

use thiserror::Error;

/// Errors surfaced by the library's fallible entry points.
///
/// Contract violations (bad Cartan strings, points outside the advertised
/// domain, operator inputs that escape the enumerated index set) are
/// reported here; internal consistency failures panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidCartanType(String),
    #[error("rank {rank} is not valid for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("point set is not closed under the Weyl group action")]
    NotWClosed,
    #[error("element does not lie in the little Weyl group of the given point")]
    NotInLittleWeyl,
    #[error("point does not satisfy the m-torsion condition (m^2 - 1)λ = 0")]
    NotMTorsion,
    #[error("pair is not an m-twisted involution: {0}")]
    NotTwistedInvolution(String),
    #[error("pair is not a block base point: {0}")]
    NotBlockBase(String),
    #[error("triple is not a groupoid arrow: {0}")]
    NotGroupoidArrow(String),
    #[error("module index escaped the enumerated basis: {0}")]
    IndexOutsideBasis(String),
    #[error("vector is not supported on the requested block")]
    SupportOutsideBlock,
    #[error("generator index {0} is not a simple reflection of the little Weyl group")]
    NotLittleSimple(usize),
    #[error("bar matrix is not unitriangular at {0}")]
    NotUnitriangular(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("prime {0} exceeds the configured cap of {1}")]
    PrimeTooLarge(u64, u64),
    #[error("finite-field identity precondition violated: {0}")]
    FieldPrecondition(String),
    #[error("index set of size {0} exceeds the configured cap of {1}")]
    IndexSetTooLarge(u128, u128),
}

pub type Result<T> = std::result::Result<T, Error>;
