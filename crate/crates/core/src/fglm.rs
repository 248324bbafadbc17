//! FGLM over the syndrome monoid of a binary code.
//!
//! The ideal `I(C)` of a code is generated by the binomials `w - u` whose
//! words share a syndrome. Its quotient has one class per syndrome, and the
//! syndrome of a word can be computed one variable at a time, so the usual
//! FGLM linear-dependency test collapses to a table lookup: a term either
//! hits a syndrome already owned by a normal monomial (and yields a basis
//! binomial) or it claims a fresh syndrome and joins the normal set.
//!
//! Terms are visited in increasing order from a queue seeded with `1`. Each
//! admitted normal monomial pushes its multiples `w·x_i` onto the queue, and
//! the queue counts how many times each key was pushed. A key whose count
//! equals the number of variables in its support has every predecessor in
//! the normal set, so no basis lead properly divides it; any other key is a
//! proper multiple of a lead and is skipped without touching a syndrome.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::code::{BinaryCode, CodeError, Syndrome};
use crate::monomial::{Monomial, MonomialError, TermOrdering};

/// Largest redundancy accepted by [`run_fglm`]; the normal set has `2^r` terms.
pub const MAX_REDUNDANCY: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FglmError {
    #[error("redundancy r={r} exceeds the limit {MAX_REDUNDANCY}")]
    TooManyChecks { r: usize },
    #[error("no predecessor of {0} is a normal monomial")]
    MissingPredecessor(Monomial),
    #[error("normal set is incomplete: syndrome {0} has no representative")]
    IncompleteNormalSet(Syndrome),
    #[error("ordering {0} is not degree compatible")]
    NotDegreeCompatible(TermOrdering),
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// A binomial `lead - tail` of the code ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    pub lead: Monomial,
    pub tail: Monomial,
}

impl Binomial {
    pub fn new(lead: Monomial, tail: Monomial) -> Self {
        Self { lead, tail }
    }

    /// Parses `lead - tail` over `nvars` variables.
    pub fn parse(s: &str, nvars: usize) -> Result<Self, MonomialError> {
        let (lead, tail) = s
            .split_once(" - ")
            .ok_or_else(|| MonomialError::Parse(s.to_string()))?;
        Ok(Self {
            lead: Monomial::parse(lead, nvars)?,
            tail: Monomial::parse(tail, nvars)?,
        })
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.tail)
    }
}

impl fmt::Debug for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A reduced Gröbner basis, sorted by increasing lead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub ordering: TermOrdering,
    pub elements: Vec<Binomial>,
}

impl GroebnerBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Binomial> {
        self.elements.iter()
    }

    pub fn leads(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().map(|b| &b.lead)
    }
}

/// The normal monomials `w_1 < w_2 < ... < w_s` with their syndromes.
///
/// Indices are zero-based here; text output shifts them by one.
#[derive(Debug, Clone)]
pub struct NormalSet {
    terms: Vec<Monomial>,
    syndromes: Vec<Syndrome>,
    by_syndrome: Vec<Option<u32>>,
    by_term: HashMap<Monomial, usize>,
}

impl NormalSet {
    /// An empty set able to hold every syndrome of length `r`.
    pub fn with_redundancy(r: usize) -> Self {
        Self {
            terms: Vec::new(),
            syndromes: Vec::new(),
            by_syndrome: vec![None; 1 << r],
            by_term: HashMap::new(),
        }
    }

    /// Builds a set from explicit parts, in the given order.
    ///
    /// Later entries with an already used syndrome or term are dropped, so a
    /// hand-edited set can be checked by the oracle without panicking here.
    pub fn from_parts(r: usize, parts: impl IntoIterator<Item = (Monomial, Syndrome)>) -> Self {
        let mut set = Self::with_redundancy(r);
        for (w, v) in parts {
            if set.member(&v).is_none() && !set.by_term.contains_key(&w) {
                set.push(w, v);
            }
        }
        set
    }

    pub(crate) fn push(&mut self, w: Monomial, v: Syndrome) -> usize {
        let idx = self.terms.len();
        self.by_syndrome[v.index()] = Some(idx as u32);
        self.by_term.insert(w.clone(), idx);
        self.terms.push(w);
        self.syndromes.push(v);
        idx
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn syndromes(&self) -> &[Syndrome] {
        &self.syndromes
    }

    pub fn term(&self, i: usize) -> &Monomial {
        &self.terms[i]
    }

    pub fn syndrome(&self, i: usize) -> &Syndrome {
        &self.syndromes[i]
    }

    /// Index of the normal monomial with syndrome `v`, if any.
    pub fn member(&self, v: &Syndrome) -> Option<usize> {
        self.by_syndrome
            .get(v.index())
            .copied()
            .flatten()
            .map(|i| i as usize)
    }

    pub fn index_of(&self, w: &Monomial) -> Option<usize> {
        self.by_term.get(w).copied()
    }

    pub fn contains(&self, w: &Monomial) -> bool {
        self.by_term.contains_key(w)
    }
}

/// Multiplication tables of the quotient algebra: `phi(k)[i] = j` when
/// `w_i · x_{k+1}` reduces to `w_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatphiSet {
    maps: Vec<Vec<usize>>,
}

impl MatphiSet {
    pub fn from_maps(maps: Vec<Vec<usize>>) -> Self {
        Self { maps }
    }

    /// Number of normal monomials each map acts on.
    pub fn size(&self) -> usize {
        self.maps.first().map_or(0, Vec::len)
    }

    pub fn nvars(&self) -> usize {
        self.maps.len()
    }

    pub fn phi(&self, k: usize) -> &[usize] {
        &self.maps[k]
    }

    pub fn apply(&self, k: usize, i: usize) -> usize {
        self.maps[k][i]
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }
}

/// Error-correcting radius found during the run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Capability {
    Radius(usize),
    /// The code is `{0}`: no two squarefree words share a syndrome, so every
    /// received vector decodes.
    Unbounded,
}

impl Capability {
    pub fn covers(self, weight: usize) -> bool {
        match self {
            Capability::Radius(t) => weight <= t,
            Capability::Unbounded => true,
        }
    }
}

impl fmt::Display for Capability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Capability::Radius(t) => write!(f, "{t}"),
            Capability::Unbounded => f.write_str("unbounded"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FglmOptions {
    pub want_matphi: bool,
    pub want_border: bool,
    pub want_t: bool,
    /// Re-check every skip decision against explicit divisibility by the
    /// leads found so far and count disagreements in the trace.
    pub cross_check_step4: bool,
    /// Keep a per-term log in [`RunTrace::events`].
    pub record_events: bool,
}

impl Default for FglmOptions {
    fn default() -> Self {
        Self {
            want_matphi: true,
            want_border: true,
            want_t: true,
            cross_check_step4: cfg!(debug_assertions),
            record_events: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermOutcome {
    /// A proper multiple of a lead; never looked at.
    Skipped,
    /// Syndrome already owned by normal monomial `tail`; emitted as a lead.
    Lead { tail: usize },
    /// Fresh syndrome; admitted to the normal set at `index`.
    Normal { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermEvent {
    pub term: Monomial,
    pub count: usize,
    pub outcome: TermOutcome,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunTrace {
    pub iterations: usize,
    pub skipped: usize,
    pub step4_checks: usize,
    pub step4_disagreements: usize,
    /// The first squarefree term that turned out to be a lead.
    pub first_squarefree_lead: Option<Monomial>,
    pub events: Vec<TermEvent>,
}

#[derive(Debug, Clone)]
pub struct FglmResult {
    pub code: BinaryCode,
    pub ordering: TermOrdering,
    pub gb: GroebnerBasis,
    pub normal_set: NormalSet,
    pub matphi: Option<MatphiSet>,
    pub border: Option<Vec<Binomial>>,
    pub t_detected: Option<Capability>,
    pub trace: RunTrace,
}

#[derive(Clone, PartialEq, Eq)]
struct QueueKey {
    ordering: TermOrdering,
    term: Monomial,
}

impl PartialOrd for QueueKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QueueKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ordering.compare(&self.term, &other.term)
    }
}

/// Pending terms, smallest first, each with the number of times it was pushed.
#[derive(Debug, Clone)]
pub struct TermQueue {
    ordering: TermOrdering,
    entries: BTreeMap<QueueKey, usize>,
}

impl fmt::Debug for QueueKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.term, f)
    }
}

impl TermQueue {
    pub fn new(ordering: TermOrdering) -> Self {
        Self {
            ordering,
            entries: BTreeMap::new(),
        }
    }

    /// A queue holding only `1`, with count zero.
    pub fn seeded(ordering: TermOrdering, nvars: usize) -> Self {
        let mut q = Self::new(ordering);
        q.entries.insert(
            QueueKey {
                ordering,
                term: Monomial::one(nvars),
            },
            0,
        );
        q
    }

    /// Pushes `w·x_i` for every variable, bumping the count of existing keys.
    pub fn insert_nexts(&mut self, w: &Monomial) -> Result<(), MonomialError> {
        for i in 0..w.nvars() {
            let key = QueueKey {
                ordering: self.ordering,
                term: w.mul_var(i)?,
            };
            *self.entries.entry(key).or_insert(0) += 1;
        }
        Ok(())
    }

    /// Removes and returns the smallest term with its count.
    pub fn next_term(&mut self) -> Option<(Monomial, usize)> {
        self.entries.pop_first().map(|(k, c)| (k.term, c))
    }

    pub fn count(&self, w: &Monomial) -> Option<usize> {
        self.entries
            .get(&QueueKey {
                ordering: self.ordering,
                term: w.clone(),
            })
            .copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.entries.keys().map(|k| &k.term)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A queued term must be examined only when every predecessor put it there.
pub fn step4_passes(w: &Monomial, count: usize) -> bool {
    count == w.support_size()
}

/// `ξ(w) = ξ(u) + g_i` for a predecessor `u = w / x_i` already in the normal set.
pub fn incremental_syndrome(
    w: &Monomial,
    normal_set: &NormalSet,
    code: &BinaryCode,
) -> Result<Syndrome, FglmError> {
    w.predecessors()
        .into_iter()
        .find_map(|(i, u)| {
            normal_set
                .index_of(&u)
                .map(|j| normal_set.syndrome(j).shifted(code.generator(i)))
        })
        .ok_or_else(|| FglmError::MissingPredecessor(w.clone()))
}

/// Runs the FGLM loop on `code` under `ordering`.
pub fn run_fglm(
    code: &BinaryCode,
    ordering: TermOrdering,
    options: FglmOptions,
) -> Result<FglmResult, FglmError> {
    if code.r() > MAX_REDUNDANCY {
        return Err(FglmError::TooManyChecks { r: code.r() });
    }
    let n = code.n();
    let mut queue = TermQueue::seeded(ordering, n);
    let mut normal_set = NormalSet::with_redundancy(code.r());
    let mut leads: Vec<Binomial> = Vec::new();
    let mut lead_set: HashSet<Monomial> = HashSet::new();
    let mut trace = RunTrace::default();

    while let Some((w, count)) = queue.next_term() {
        trace.iterations += 1;
        let passes = step4_passes(&w, count);
        if options.cross_check_step4 {
            trace.step4_checks += 1;
            let divisible = w.divisors().iter().any(|d| lead_set.contains(d));
            if divisible == passes {
                trace.step4_disagreements += 1;
            }
        }
        if !passes {
            trace.skipped += 1;
            if options.record_events {
                trace.events.push(TermEvent {
                    term: w,
                    count,
                    outcome: TermOutcome::Skipped,
                });
            }
            continue;
        }

        let v = if w.is_one() {
            Syndrome::zero(code.r())
        } else {
            incremental_syndrome(&w, &normal_set, code)?
        };
        let outcome = match normal_set.member(&v) {
            Some(j) => {
                if trace.first_squarefree_lead.is_none() && w.is_squarefree() {
                    trace.first_squarefree_lead = Some(w.clone());
                }
                if options.cross_check_step4 {
                    lead_set.insert(w.clone());
                }
                leads.push(Binomial::new(w.clone(), normal_set.term(j).clone()));
                TermOutcome::Lead { tail: j }
            }
            None => {
                queue.insert_nexts(&w)?;
                let index = normal_set.push(w.clone(), v);
                TermOutcome::Normal { index }
            }
        };
        if options.record_events {
            trace.events.push(TermEvent {
                term: w,
                count,
                outcome,
            });
        }
    }
    debug_assert_eq!(
        trace.step4_disagreements, 0,
        "step-4 count test disagrees with divisibility"
    );

    let matphi = if options.want_matphi || options.want_border {
        Some(compute_matphi(&normal_set, code)?)
    } else {
        None
    };
    let border = match (&matphi, options.want_border) {
        (Some(phi), true) => Some(compute_border_basis(&normal_set, phi, ordering)?),
        _ => None,
    };
    let t_detected = if options.want_t && ordering.is_degree_compatible() {
        Some(detect_t(&trace, ordering)?)
    } else {
        None
    };

    Ok(FglmResult {
        code: code.clone(),
        ordering,
        gb: GroebnerBasis {
            ordering,
            elements: leads,
        },
        normal_set,
        matphi: if options.want_matphi { matphi } else { None },
        border,
        t_detected,
        trace,
    })
}

/// Reads the multiplication tables off the completed normal set.
pub fn compute_matphi(normal_set: &NormalSet, code: &BinaryCode) -> Result<MatphiSet, FglmError> {
    let maps = (0..code.n())
        .map(|k| {
            let g = code.generator(k);
            normal_set
                .syndromes()
                .iter()
                .map(|v| {
                    let target = v.shifted(g);
                    normal_set
                        .member(&target)
                        .ok_or(FglmError::IncompleteNormalSet(target))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MatphiSet { maps })
}

/// The border binomials `w - Can(w)` for every `w = u·x_k` outside the normal
/// set whose predecessors all lie in it, sorted by increasing `w`.
pub fn compute_border_basis(
    normal_set: &NormalSet,
    matphi: &MatphiSet,
    ordering: TermOrdering,
) -> Result<Vec<Binomial>, FglmError> {
    let mut border: BTreeMap<QueueKey, Monomial> = BTreeMap::new();
    for (i, u) in normal_set.terms().iter().enumerate() {
        for k in 0..u.nvars() {
            let w = u.mul_var(k)?;
            if normal_set.contains(&w) {
                continue;
            }
            if !w.predecessors().iter().all(|(_, p)| normal_set.contains(p)) {
                continue;
            }
            let tail = normal_set.term(matphi.apply(k, i)).clone();
            border.insert(QueueKey { ordering, term: w }, tail);
        }
    }
    Ok(border
        .into_iter()
        .map(|(k, tail)| Binomial::new(k.term, tail))
        .collect())
}

/// The error-correcting radius implied by the first squarefree lead `w`:
/// `deg(w) - 1`. Only meaningful for degree-compatible orderings.
pub fn detect_t(trace: &RunTrace, ordering: TermOrdering) -> Result<Capability, FglmError> {
    if !ordering.is_degree_compatible() {
        return Err(FglmError::NotDegreeCompatible(ordering));
    }
    Ok(match &trace.first_squarefree_lead {
        Some(w) => Capability::Radius(w.psi().weight() - 1),
        None => Capability::Unbounded,
    })
}
