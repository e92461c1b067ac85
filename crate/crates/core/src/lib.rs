//! Exact characters of the free Lie superalgebra and its higher Lie modules.
//!
//! The crate computes, with exact rational arithmetic throughout:
//!
//! - power-sum and Schur expansions of the bigraded pieces of the free Lie
//!   superalgebra ([`superlie`]),
//! - symmetric functions in one and two alphabets, plethysm and the
//!   Frobenius characteristic ([`symfunc`]),
//! - standard and super standard Young tableaux with their descent, major
//!   index and negative-entry statistics ([`tableau`]),
//! - characters of cyclic groups induced to symmetric groups ([`cyclic`]),
//! - quasisymmetric expansions, principal specializations, q,t-hook
//!   products and the residue-extraction operator ([`specialization`]).
//!
//! Every identity relating these objects is exposed as a check in
//! [`verify`], which the command-line tool and the acceptance suite share.

pub mod cyclic;
pub mod error;
pub mod exactalg;
pub mod par;
pub mod partition;
pub mod report;
pub mod specialization;
pub mod superlie;
pub mod symfunc;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use exactalg::{QTPoly, Rat};
pub use partition::Partition;
