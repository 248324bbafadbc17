//! Canonical forms modulo the code ideal and complete syndrome decoding.
//!
//! Under a degree-compatible ordering the canonical form of the word of a
//! received vector is a minimum-weight member of its coset. When that weight
//! is at most `t` it is the error vector; otherwise the vector carries more
//! than `t` errors and no correction is attempted.

use thiserror::Error;

use crate::code::{CodeError, Syndrome};
use crate::fglm::{Capability, FglmResult, GroebnerBasis, MatphiSet, NormalSet};
use crate::gf2::BitVector;
use crate::monomial::{Monomial, MonomialError, TermOrdering};

const MAX_REWRITES: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("decoding needs a degree-compatible ordering, got {0}")]
    NotDegreeCompatible(TermOrdering),
    #[error("error-correcting capability unknown; run with t detection or supply t")]
    UnknownCapability,
    #[error("received vector has length {found}, code length is {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("rewriting did not terminate within {MAX_REWRITES} steps")]
    RewriteLimit,
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecodeOutcome {
    Decoded {
        error: BitVector,
        codeword: BitVector,
    },
    TooManyErrors,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    pub syndrome: Syndrome,
    pub outcome: DecodeOutcome,
    /// Weight of the canonical form, reported in both outcomes.
    pub canonical_weight: usize,
}

impl DecodeResult {
    pub fn is_decoded(&self) -> bool {
        matches!(self.outcome, DecodeOutcome::Decoded { .. })
    }

    pub fn error(&self) -> Option<&BitVector> {
        match &self.outcome {
            DecodeOutcome::Decoded { error, .. } => Some(error),
            DecodeOutcome::TooManyErrors => None,
        }
    }

    pub fn codeword(&self) -> Option<&BitVector> {
        match &self.outcome {
            DecodeOutcome::Decoded { codeword, .. } => Some(codeword),
            DecodeOutcome::TooManyErrors => None,
        }
    }
}

pub fn vector_to_monomial(y: &BitVector) -> Monomial {
    Monomial::from_support(y)
}

/// Reduces `w` by the basis until no lead divides it.
pub fn canonical_form_gb(w: &Monomial, gb: &GroebnerBasis) -> Result<Monomial, DecodeError> {
    let mut current = w.clone();
    for _ in 0..MAX_REWRITES {
        let Some((b, cofactor)) = gb.iter().find_map(|b| current.div(&b.lead).map(|q| (b, q)))
        else {
            return Ok(current);
        };
        current = b.tail.mul(&cofactor)?;
    }
    Err(DecodeError::RewriteLimit)
}

/// Walks the multiplication tables from `1`, one step per odd exponent.
pub fn canonical_form_matphi(w: &Monomial, normal_set: &NormalSet, matphi: &MatphiSet) -> Monomial {
    let idx = w
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e % 2 == 1)
        .fold(0, |i, (k, _)| matphi.apply(k, i));
    normal_set.term(idx).clone()
}

/// Canonical form through the tables when present, else by rewriting.
pub fn canonical_form(w: &Monomial, result: &FglmResult) -> Result<Monomial, DecodeError> {
    match &result.matphi {
        Some(phi) => Ok(canonical_form_matphi(w, &result.normal_set, phi)),
        None => canonical_form_gb(w, &result.gb),
    }
}

/// Decodes `y` with the capability detected during the run.
pub fn decode(y: &BitVector, result: &FglmResult) -> Result<DecodeResult, DecodeError> {
    let t = result.t_detected.ok_or(DecodeError::UnknownCapability)?;
    decode_with_capability(y, result, t)
}

pub fn decode_with_capability(
    y: &BitVector,
    result: &FglmResult,
    t: Capability,
) -> Result<DecodeResult, DecodeError> {
    if !result.ordering.is_degree_compatible() {
        return Err(DecodeError::NotDegreeCompatible(result.ordering));
    }
    let n = result.code.n();
    if y.len() != n {
        return Err(DecodeError::WrongLength {
            expected: n,
            found: y.len(),
        });
    }
    let syndrome = result.code.syndrome_vec(y)?;
    let can = canonical_form(&vector_to_monomial(y), result)?;
    let error = can.psi();
    let canonical_weight = error.weight();
    let outcome = if t.covers(canonical_weight) {
        let codeword = y.add(&error).map_err(CodeError::from)?;
        debug_assert!(result.code.is_codeword(&codeword).unwrap_or(false));
        DecodeOutcome::Decoded { error, codeword }
    } else {
        DecodeOutcome::TooManyErrors
    };
    Ok(DecodeResult {
        syndrome,
        outcome,
        canonical_weight,
    })
}
