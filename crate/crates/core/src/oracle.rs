//! Brute-force ground truth for small codes.
//!
//! Everything here is computed by exhaustive scans over `GF(2)^n` using only
//! the parity-check matrix and the bit-vector primitives. Results of the FGLM
//! engine are treated as data to be checked, never as inputs.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::code::BinaryCode;
use crate::decoder::{
    canonical_form_gb, canonical_form_matphi, decode_with_capability, vector_to_monomial,
};
use crate::fglm::{Capability, FglmResult};
use crate::gf2::{BitMatrix, BitVector};
use crate::monomial::Monomial;

/// Largest code length for which the coset table is built.
pub const MAX_TABLE_LENGTH: usize = 16;
/// Largest code length for the exhaustive decoding comparison.
pub const MAX_DECODING_CHECK_LENGTH: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("code length {n} exceeds the exhaustive limit {limit}")]
    TooLong { n: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetEntry {
    pub min_weight: usize,
    /// The minimum-weight member with the smallest little-endian encoding.
    pub leader: BitVector,
    /// How many members reach `min_weight`.
    pub leader_count: usize,
    pub size: usize,
}

/// Minimum weights and leaders of every coset, indexed by syndrome.
#[derive(Debug, Clone)]
pub struct CosetTable {
    n: usize,
    entries: Vec<CosetEntry>,
    min_distance: Option<usize>,
}

fn syndrome_index(h: &BitMatrix, y: &BitVector) -> usize {
    h.left_mul(y)
        .expect("length checked")
        .to_u64()
        .expect("r <= 64") as usize
}

impl CosetTable {
    pub fn build(code: &BinaryCode) -> Result<Self, OracleError> {
        let n = code.n();
        if n > MAX_TABLE_LENGTH {
            return Err(OracleError::TooLong {
                n,
                limit: MAX_TABLE_LENGTH,
            });
        }
        let h = code.parity_check();
        let mut slots: Vec<Option<CosetEntry>> = vec![None; 1 << h.cols()];
        let mut min_distance: Option<usize> = None;
        for raw in 0u64..(1u64 << n) {
            let y = BitVector::from_u64(n, raw);
            let w = y.weight();
            let s = syndrome_index(h, &y);
            if s == 0 && w > 0 {
                min_distance = Some(min_distance.map_or(w, |d| d.min(w)));
            }
            match &mut slots[s] {
                None => {
                    slots[s] = Some(CosetEntry {
                        min_weight: w,
                        leader: y,
                        leader_count: 1,
                        size: 1,
                    })
                }
                Some(e) => {
                    e.size += 1;
                    if w < e.min_weight {
                        e.min_weight = w;
                        e.leader = y;
                        e.leader_count = 1;
                    } else if w == e.min_weight {
                        e.leader_count += 1;
                    }
                }
            }
        }
        let entries = slots
            .into_iter()
            .map(|e| e.expect("full-rank H reaches every syndrome"))
            .collect();
        Ok(Self {
            n,
            entries,
            min_distance,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[CosetEntry] {
        &self.entries
    }

    /// Entry for the syndrome with little-endian encoding `index`.
    pub fn entry(&self, index: usize) -> &CosetEntry {
        &self.entries[index]
    }

    pub fn entry_for(&self, h: &BitMatrix, y: &BitVector) -> &CosetEntry {
        &self.entries[syndrome_index(h, y)]
    }

    /// Minimum nonzero codeword weight, `None` for the zero code.
    pub fn min_distance(&self) -> Option<usize> {
        self.min_distance
    }

    /// `floor((d - 1) / 2)`, or unbounded for the zero code.
    pub fn capability(&self) -> Capability {
        match self.min_distance {
            Some(d) => Capability::Radius((d - 1) / 2),
            None => Capability::Unbounded,
        }
    }
}

/// A list of violated properties; empty means the check passed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub violations: Vec<String>,
}

impl Report {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }

    fn fail(&mut self, msg: impl Into<String>) {
        self.violations.push(msg.into());
    }

    pub fn merge(&mut self, other: Report) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pass() {
            return writeln!(f, "PASS");
        }
        writeln!(f, "FAIL")?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

// Syndrome of a word straight from the odd exponents and the rows of H.
fn word_syndrome(h: &BitMatrix, w: &Monomial) -> BitVector {
    let mut s = BitVector::zeros(h.cols());
    for (i, &e) in w.exponents().iter().enumerate() {
        if e % 2 == 1 {
            s.add_assign(h.row(i)).expect("row length is r");
        }
    }
    s
}

// All exponent vectors componentwise below `w`.
fn all_divisors(w: &Monomial) -> Vec<Vec<u8>> {
    let mut out = vec![vec![0u8; w.nvars()]];
    for (i, &e) in w.exponents().iter().enumerate() {
        let base = out.len();
        for p in 1..=e {
            for j in 0..base {
                let mut d = out[j].clone();
                d[i] = p;
                out.push(d);
            }
        }
    }
    out
}

fn times_var(w: &Monomial, k: usize) -> Monomial {
    let mut e = w.exponents().to_vec();
    e[k] += 1;
    Monomial::from_exponents(e)
}

fn proper_divisors_by_one(w: &Monomial) -> Vec<Monomial> {
    (0..w.nvars())
        .filter(|&i| w.exponent(i) > 0)
        .map(|i| {
            let mut e = w.exponents().to_vec();
            e[i] -= 1;
            Monomial::from_exponents(e)
        })
        .collect()
}

/// Structural checks on a computed result: binomial soundness, reducedness,
/// completeness, the size and shape of the normal set, the multiplication
/// tables and the border basis.
pub fn verify_gb(result: &FglmResult) -> Report {
    let mut report = Report::default();
    let code = &result.code;
    let h = code.parity_check();
    let ord = result.ordering;
    let ns = &result.normal_set;
    let normal: HashSet<&Monomial> = ns.terms().iter().collect();

    let expected = 1usize << code.r();
    if ns.len() != expected {
        report.fail(format!(
            "normal set has {} terms, expected 2^{} = {expected}",
            ns.len(),
            code.r()
        ));
    }
    if ns.terms().first().is_none_or(|w| !w.is_one()) {
        report.fail("first normal monomial is not 1");
    }
    let mut seen = HashSet::new();
    for (i, w) in ns.terms().iter().enumerate() {
        let s = word_syndrome(h, w);
        if &s != ns.syndrome(i).bits() {
            report.fail(format!(
                "stored syndrome of {w} is {}, actual {s}",
                ns.syndrome(i)
            ));
        }
        if !seen.insert(s.clone()) {
            report.fail(format!("syndrome {s} of {w} repeats in the normal set"));
        }
        if !w.is_squarefree() {
            report.fail(format!("normal monomial {w} is not squarefree"));
        }
        for u in proper_divisors_by_one(w) {
            if !normal.contains(&u) {
                report.fail(format!("normal set is not an order ideal: {u} divides {w}"));
            }
        }
        if i > 0 && ord.compare(ns.term(i - 1), w).is_ge() {
            report.fail(format!("normal set not increasing at {w}"));
        }
    }

    let leads: Vec<&Monomial> = result.gb.leads().collect();
    let lead_exps: HashSet<&[u8]> = leads.iter().map(|l| l.exponents()).collect();
    let divisible_by_lead = |w: &Monomial, proper: bool| {
        all_divisors(w)
            .iter()
            .any(|d| lead_exps.contains(d.as_slice()) && !(proper && d.as_slice() == w.exponents()))
    };
    for (i, b) in result.gb.iter().enumerate() {
        if word_syndrome(h, &b.lead) != word_syndrome(h, &b.tail) {
            report.fail(format!("unsound binomial {b}: syndromes differ"));
        }
        if ord.compare(&b.tail, &b.lead).is_ge() {
            report.fail(format!("binomial {b}: tail is not smaller than lead"));
        }
        if !normal.contains(&b.tail) {
            report.fail(format!("binomial {b}: tail is not a normal monomial"));
        }
        if normal.contains(&b.lead) {
            report.fail(format!("binomial {b}: lead is a normal monomial"));
        }
        for u in proper_divisors_by_one(&b.lead) {
            if !normal.contains(&u) {
                report.fail(format!(
                    "binomial {b}: predecessor {u} of lead is not normal"
                ));
            }
        }
        if divisible_by_lead(&b.lead, true) {
            report.fail(format!("lead {} is a multiple of another lead", b.lead));
        }
        if i > 0 && ord.compare(leads[i - 1], &b.lead).is_ge() {
            report.fail(format!("basis not sorted by lead at {b}"));
        }
    }
    // completeness: every immediate multiple of N is in N or a multiple of a lead
    let mut border_terms = Vec::new();
    for u in ns.terms() {
        for k in 0..code.n() {
            let w = times_var(u, k);
            if normal.contains(&w) {
                continue;
            }
            if !divisible_by_lead(&w, false) {
                report.fail(format!("{w} is neither normal nor divisible by a lead"));
            }
            if proper_divisors_by_one(&w)
                .iter()
                .all(|p| normal.contains(p))
                && !border_terms.contains(&w)
            {
                border_terms.push(w);
            }
        }
    }

    if let Some(phi) = &result.matphi {
        report.merge(verify_matphi(result, phi));
    }

    if let Some(border) = &result.border {
        for b in border {
            if word_syndrome(h, &b.lead) != word_syndrome(h, &b.tail) {
                report.fail(format!("unsound border binomial {b}"));
            }
            if !normal.contains(&b.tail) {
                report.fail(format!("border binomial {b}: tail is not normal"));
            }
        }
        let got: HashSet<&Monomial> = border.iter().map(|b| &b.lead).collect();
        let want: HashSet<&Monomial> = border_terms.iter().collect();
        if got != want || got.len() != border.len() {
            report.fail(format!(
                "border has {} terms, expected the {} border terms of N",
                border.len(),
                border_terms.len()
            ));
        }
        for g in result.gb.iter() {
            if !border.contains(g) {
                report.fail(format!("basis element {g} missing from the border basis"));
            }
        }
    }
    report
}

fn verify_matphi(result: &FglmResult, phi: &crate::fglm::MatphiSet) -> Report {
    let mut report = Report::default();
    let h = result.code.parity_check();
    let ns = &result.normal_set;
    let s = ns.len();
    if phi.nvars() != result.code.n() {
        report.fail(format!(
            "{} multiplication tables for {} variables",
            phi.nvars(),
            result.code.n()
        ));
        return report;
    }
    for k in 0..phi.nvars() {
        let map = phi.phi(k);
        if map.len() != s || map.iter().any(|&j| j >= s) {
            report.fail(format!("phi({}) is not a map on {s} points", k + 1));
            continue;
        }
        let image: HashSet<usize> = map.iter().copied().collect();
        if image.len() != s {
            report.fail(format!("phi({}) is not a permutation", k + 1));
        }
        for i in 0..s {
            if map[map[i]] != i {
                report.fail(format!("phi({}) is not an involution at {}", k + 1, i + 1));
            }
            let mut target = word_syndrome(h, ns.term(i));
            target.add_assign(h.row(k)).expect("row length is r");
            if word_syndrome(h, ns.term(map[i])) != target {
                report.fail(format!(
                    "phi({})[{}] = {} but {}*x{} does not reduce to {}",
                    k + 1,
                    i + 1,
                    map[i] + 1,
                    ns.term(i),
                    k + 1,
                    ns.term(map[i])
                ));
            }
        }
    }
    for a in 0..phi.nvars() {
        for b in (a + 1)..phi.nvars() {
            if (0..s).any(|i| phi.apply(a, phi.apply(b, i)) != phi.apply(b, phi.apply(a, i))) {
                report.fail(format!("phi({}) and phi({}) do not commute", a + 1, b + 1));
            }
        }
    }
    report
}

/// Checks the detected capability against the brute-force minimum distance.
pub fn verify_capability(table: &CosetTable, result: &FglmResult) -> Report {
    let mut report = Report::default();
    if !result.ordering.is_degree_compatible() {
        return report;
    }
    let want = table.capability();
    match result.t_detected {
        Some(t) if t == want => {}
        got => report.fail(format!("detected t = {got:?}, brute force gives {want:?}")),
    }
    report
}

/// Exhaustive decoding comparison against the coset table over all of `GF(2)^n`.
pub fn verify_decoding(code: &BinaryCode, result: &FglmResult) -> Result<Report, OracleError> {
    let n = code.n();
    if n > MAX_DECODING_CHECK_LENGTH {
        return Err(OracleError::TooLong {
            n,
            limit: MAX_DECODING_CHECK_LENGTH,
        });
    }
    let table = CosetTable::build(code)?;
    let mut report = Report::default();
    if !result.ordering.is_degree_compatible() {
        report.fail(format!(
            "ordering {} cannot be used for decoding",
            result.ordering
        ));
        return Ok(report);
    }
    let Some(t) = result.t_detected else {
        report.fail("result carries no error-correcting capability");
        return Ok(report);
    };
    let true_t = table.capability();
    let h = code.parity_check();

    for raw in 0u64..(1u64 << n) {
        let y = BitVector::from_u64(n, raw);
        let entry = table.entry_for(h, &y);
        let w = vector_to_monomial(&y);
        if let Some(phi) = &result.matphi {
            match canonical_form_gb(&w, &result.gb) {
                Ok(a) if a == canonical_form_matphi(&w, &result.normal_set, phi) => {}
                _ => report.fail(format!(
                    "{}: rewriting and tables disagree",
                    y.to_bit_string()
                )),
            }
        }
        let d = match decode_with_capability(&y, result, t) {
            Ok(d) => d,
            Err(e) => {
                report.fail(format!("{}: decode failed: {e}", y.to_bit_string()));
                continue;
            }
        };
        if d.canonical_weight != entry.min_weight {
            report.fail(format!(
                "{}: canonical weight {} but coset minimum is {}",
                y.to_bit_string(),
                d.canonical_weight,
                entry.min_weight
            ));
        }
        if true_t.covers(entry.min_weight) {
            if entry.leader_count != 1 {
                report.fail(format!(
                    "{}: coset leader within t is not unique",
                    y.to_bit_string()
                ));
            }
            match d.error() {
                Some(e) if e == &entry.leader => {}
                Some(e) => report.fail(format!(
                    "{}: decoded error {} but coset leader is {}",
                    y.to_bit_string(),
                    e.to_bit_string(),
                    entry.leader.to_bit_string()
                )),
                None => report.fail(format!(
                    "{}: reported too many errors within t",
                    y.to_bit_string()
                )),
            }
        } else if d.is_decoded() {
            report.fail(format!(
                "{}: decoded although the coset minimum {} exceeds t",
                y.to_bit_string(),
                entry.min_weight
            ));
        }
        if let Some(c) = d.codeword() {
            if syndrome_index(h, c) != 0 {
                report.fail(format!(
                    "{}: decoded word is not a codeword",
                    y.to_bit_string()
                ));
            }
        }
    }
    Ok(report)
}
