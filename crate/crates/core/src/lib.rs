//! Exact arithmetic for Zagier's modified Bernoulli numbers B*_n, their
//! denominators, and the asymptotic coefficients v_n of
//! `log z + ψ(z + 1/z)`, with verification sweeps for their identities.

pub mod classical;
pub mod error;
pub mod exactnum;
pub mod report;
pub mod series;
pub mod vcoeff;
pub mod zagier;

pub use error::{Error, Result};
pub use exactnum::{Integer, Rational};
pub use report::{Check, Status, VerifyReport};
