//! Gröbner bases of the binomial ideals attached to binary linear codes.
//!
//! Given a parity-check matrix, [`fglm::run_fglm`] computes the reduced
//! Gröbner basis, normal set, multiplication tables and border basis of the
//! code ideal in a single FGLM pass. [`decoder`] turns those structures into
//! a complete decoder up to the error-correcting capability, and [`oracle`]
//! checks everything against exhaustive enumeration for small codes.

pub mod cli;
pub mod code;
pub mod decoder;
pub mod fglm;
pub mod gf2;
pub mod monomial;
pub mod oracle;

pub use code::{BinaryCode, CodeError, Syndrome};
pub use decoder::{decode, DecodeError, DecodeOutcome, DecodeResult};
pub use fglm::{run_fglm, Binomial, Capability, FglmError, FglmOptions, FglmResult};
pub use gf2::{BitMatrix, BitVector, Gf2Error};
pub use monomial::{Monomial, MonomialError, TermOrdering};
