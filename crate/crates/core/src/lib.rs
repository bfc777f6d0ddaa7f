//! Exact arithmetic in free Baxter (Rota–Baxter) algebras of arbitrary
//! weight, together with Stirling-number machinery and mechanical checks of
//! the identities and congruences that connect them.

pub mod coeff;
pub mod combinatorics;
pub mod congruences;
pub mod error;
pub mod free_baxter;
pub mod identities;
pub mod report;

pub use coeff::{Base, Coefficient, Ring, Weight};
pub use combinatorics::{Composition, StirlingKind, StirlingTable};
pub use error::{Error, Result};
pub use free_baxter::{Algebra, BaseAlgebra, BaxterElement, TensorWord};
pub use report::{IdentityId, ReportValue, VerificationReport};
