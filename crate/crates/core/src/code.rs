//! Binary linear codes given by a parity-check matrix.
//!
//! The matrix `H` is stored `n × r` (one row per code coordinate), so the
//! syndrome of a received row vector `y` is `y · H` and row `i` of `H` is the
//! syndrome of the single variable `x_{i+1}`.

use std::fmt;

use thiserror::Error;

use crate::gf2::{BitMatrix, BitVector, Gf2Error};
use crate::monomial::Monomial;

/// Largest code dimension `k` for which codewords are enumerated.
pub const MAX_ENUMERATION_DIMENSION: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("empty code file")]
    Empty,
    #[error("malformed header {0:?}, expected `n r`")]
    MalformedHeader(String),
    #[error("invalid dimensions n={n} r={r}, need 1 <= r <= n")]
    InvalidDimensions { n: usize, r: usize },
    #[error("line {line}: invalid matrix entry {token:?}")]
    InvalidEntry { line: usize, token: String },
    #[error("line {line}: expected {expected} entries, found {found}")]
    WrongRowLength {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("expected {expected} matrix rows, found {found}")]
    WrongRowCount { expected: usize, found: usize },
    #[error("parity-check matrix has rank {rank}, expected full rank {r}")]
    RankDeficient { rank: usize, r: usize },
    #[error("code dimension {k} exceeds the enumeration limit {MAX_ENUMERATION_DIMENSION}")]
    TooLargeToEnumerate { k: usize },
    #[error("the zero code has no minimum distance")]
    TrivialCode,
    #[error(transparent)]
    Dimension(#[from] Gf2Error),
}

/// A syndrome `y · H`, a vector of length `r`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Syndrome(BitVector);

impl Syndrome {
    pub fn zero(r: usize) -> Self {
        Syndrome(BitVector::zeros(r))
    }

    pub fn bits(&self) -> &BitVector {
        &self.0
    }

    pub fn into_bits(self) -> BitVector {
        self.0
    }

    /// Little-endian integer encoding, used as a dense table index.
    ///
    /// Panics when `r > 64`; the engine refuses such codes long before.
    pub fn index(&self) -> usize {
        self.0.to_u64().expect("syndrome wider than 64 bits") as usize
    }

    /// `self + g` where `g` is a generator syndrome (a row of `H`).
    pub fn shifted(&self, g: &BitVector) -> Syndrome {
        Syndrome(self.0.add(g).expect("syndrome length is fixed by the code"))
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// A binary `[n, n - r]` code with a full-rank `n × r` parity-check matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryCode {
    h: BitMatrix,
}

impl BinaryCode {
    pub fn new(h: BitMatrix) -> Result<Self, CodeError> {
        let (n, r) = (h.rows(), h.cols());
        if r == 0 || r > n {
            return Err(CodeError::InvalidDimensions { n, r });
        }
        let rank = h.rank();
        if rank != r {
            return Err(CodeError::RankDeficient { rank, r });
        }
        Ok(Self { h })
    }

    /// Accepts `H` in the `r × n` convention and transposes it.
    pub fn from_transposed(ht: &BitMatrix) -> Result<Self, CodeError> {
        Self::new(ht.transpose())
    }

    /// Parses the text format: a header line `n r` followed by the rows of
    /// `H` as whitespace-separated bits. Blank lines are ignored. With
    /// `transposed`, the file holds `r` rows of `n` bits instead.
    pub fn parse(text: &str, transposed: bool) -> Result<Self, CodeError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (_, header) = lines.next().ok_or(CodeError::Empty)?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| CodeError::MalformedHeader(header.to_string()))?;
        let [n, r] = dims[..] else {
            return Err(CodeError::MalformedHeader(header.to_string()));
        };
        if r == 0 || r > n {
            return Err(CodeError::InvalidDimensions { n, r });
        }
        let (nrows, ncols) = if transposed { (r, n) } else { (n, r) };

        let mut rows = Vec::with_capacity(nrows);
        for (line, text) in lines {
            let bits = text
                .split_whitespace()
                .map(|tok| match tok {
                    "0" => Ok(false),
                    "1" => Ok(true),
                    _ => Err(CodeError::InvalidEntry {
                        line,
                        token: tok.to_string(),
                    }),
                })
                .collect::<Result<Vec<bool>, _>>()?;
            if bits.len() != ncols {
                return Err(CodeError::WrongRowLength {
                    line,
                    expected: ncols,
                    found: bits.len(),
                });
            }
            rows.push(BitVector::from_bools(&bits));
        }
        if rows.len() != nrows {
            return Err(CodeError::WrongRowCount {
                expected: nrows,
                found: rows.len(),
            });
        }
        let m = BitMatrix::from_rows(ncols, rows)?;
        if transposed {
            Self::from_transposed(&m)
        } else {
            Self::new(m)
        }
    }

    /// Renders the code in the same format [`BinaryCode::parse`] reads.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.r());
        for i in 0..self.n() {
            let row: Vec<&str> = (0..self.r())
                .map(|j| if self.h.get(i, j) { "1" } else { "0" })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Code length.
    pub fn n(&self) -> usize {
        self.h.rows()
    }

    /// Redundancy `n - k`, the number of parity checks.
    pub fn r(&self) -> usize {
        self.h.cols()
    }

    /// Code dimension.
    pub fn k(&self) -> usize {
        self.n() - self.r()
    }

    pub fn parity_check(&self) -> &BitMatrix {
        &self.h
    }

    /// Syndrome of the variable `x_{i+1}`, i.e. row `i` of `H`.
    pub fn generator(&self, i: usize) -> &BitVector {
        self.h.row(i)
    }

    pub fn syndrome_vec(&self, y: &BitVector) -> Result<Syndrome, CodeError> {
        Ok(Syndrome(self.h.left_mul(y)?))
    }

    pub fn syndrome_word(&self, w: &Monomial) -> Result<Syndrome, CodeError> {
        self.syndrome_vec(&w.psi())
    }

    pub fn is_codeword(&self, y: &BitVector) -> Result<bool, CodeError> {
        Ok(self.syndrome_vec(y)?.bits().is_zero())
    }

    /// A basis of the code `{y : y · H = 0}`, from the reduced row echelon
    /// form of `H^T`.
    pub fn codeword_basis(&self) -> Vec<BitVector> {
        let n = self.n();
        let mut rows: Vec<BitVector> = (0..self.r())
            .map(|j| BitVector::from_bools(&(0..n).map(|i| self.h.get(i, j)).collect::<Vec<_>>()))
            .collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && row.get(col) {
                    row.add_assign(&pivot_row).expect("equal lengths");
                }
            }
            pivots.push(col);
            rank += 1;
        }
        (0..n)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut y = BitVector::unit(n, free);
                for (row, &p) in pivots.iter().enumerate() {
                    if rows[row].get(free) {
                        y.set(p, true);
                    }
                }
                y
            })
            .collect()
    }

    /// All `2^k` codewords, in Gray-code order starting from zero.
    pub fn enumerate_codewords(&self) -> Result<Vec<BitVector>, CodeError> {
        let k = self.k();
        if k > MAX_ENUMERATION_DIMENSION {
            return Err(CodeError::TooLargeToEnumerate { k });
        }
        let basis = self.codeword_basis();
        debug_assert_eq!(basis.len(), k);
        let mut out = Vec::with_capacity(1 << k);
        let mut c = BitVector::zeros(self.n());
        out.push(c.clone());
        for step in 1u64..(1u64 << k) {
            c.add_assign(&basis[step.trailing_zeros() as usize])?;
            out.push(c.clone());
        }
        Ok(out)
    }

    /// Minimum weight of a nonzero codeword.
    pub fn min_distance(&self) -> Result<usize, CodeError> {
        if self.k() == 0 {
            return Err(CodeError::TrivialCode);
        }
        Ok(self
            .enumerate_codewords()?
            .iter()
            .skip(1)
            .map(BitVector::weight)
            .min()
            .expect("k > 0 gives a nonzero codeword"))
    }

    /// `floor((d - 1) / 2)`.
    pub fn error_capability(&self) -> Result<usize, CodeError> {
        Ok((self.min_distance()? - 1) / 2)
    }
}

impl fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryCode[n={}, k={}] {:?}", self.n(), self.k(), self.h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    const EXAMPLE: &str = "6 3\n1 1 1\n1 0 1\n0 1 1\n1 0 0\n0 1 0\n0 0 1\n";

    fn example() -> BinaryCode {
        BinaryCode::parse(EXAMPLE, false).unwrap()
    }

    fn bits(s: &str) -> BitVector {
        BitVector::parse_bits(s).unwrap()
    }

    #[test]
    fn parse_example() {
        let c = example();
        assert_eq!((c.n(), c.r(), c.k()), (6, 3, 3));
        assert_eq!(c.to_text(), EXAMPLE);
    }

    #[test]
    fn parse_transposed() {
        let t = "6 3\n1 1 0 1 0 0\n1 0 1 0 1 0\n1 1 1 0 0 1\n";
        assert_eq!(BinaryCode::parse(t, true).unwrap(), example());
    }

    #[test]
    fn parse_smallest() {
        let c = BinaryCode::parse("1 1\n1\n", false).unwrap();
        assert_eq!((c.n(), c.r()), (1, 1));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(BinaryCode::parse("", false).unwrap_err(), CodeError::Empty);
        assert!(matches!(
            BinaryCode::parse("6\n", false),
            Err(CodeError::MalformedHeader(_))
        ));
        assert!(matches!(
            BinaryCode::parse("a b\n", false),
            Err(CodeError::MalformedHeader(_))
        ));
        assert!(matches!(
            BinaryCode::parse("2 3\n1 1 1\n0 1 1\n", false),
            Err(CodeError::InvalidDimensions { .. })
        ));
        assert!(matches!(
            BinaryCode::parse("2 0\n\n\n", false),
            Err(CodeError::InvalidDimensions { .. })
        ));
        assert!(matches!(
            BinaryCode::parse("2 1\n1\n2\n", false),
            Err(CodeError::InvalidEntry { line: 3, .. })
        ));
        assert!(matches!(
            BinaryCode::parse("2 1\n1 0\n1\n", false),
            Err(CodeError::WrongRowLength { line: 2, .. })
        ));
        assert_eq!(
            BinaryCode::parse("3 1\n1\n1\n", false).unwrap_err(),
            CodeError::WrongRowCount {
                expected: 3,
                found: 2
            }
        );
    }

    #[test]
    fn rank_deficient_matrix_is_rejected() {
        // third column is the sum of the first two
        let text = "6 3\n1 1 0\n1 0 1\n0 1 1\n1 0 1\n0 1 1\n1 1 0\n";
        assert_eq!(
            BinaryCode::parse(text, false).unwrap_err(),
            CodeError::RankDeficient { rank: 2, r: 3 }
        );
    }

    #[test]
    fn syndromes() {
        let c = example();
        let s = c.syndrome_vec(&bits("100000")).unwrap();
        assert_eq!(s.bits(), &bits("111"));
        assert!(c.syndrome_vec(&bits("000000")).unwrap().bits().is_zero());
        assert!(c.syndrome_vec(&bits("00000")).is_err());
        let w = |s: &str| Monomial::parse(s, 6).unwrap();
        assert_eq!(c.syndrome_word(&w("x1")).unwrap().bits(), &bits("111"));
        assert!(c.syndrome_word(&w("x1^2")).unwrap().bits().is_zero());
        assert_eq!(
            c.syndrome_word(&w("x1*x2")).unwrap(),
            c.syndrome_word(&w("x5")).unwrap()
        );
        assert_eq!(s.index(), 7);
        assert_eq!(c.syndrome_word(&w("x6")).unwrap().index(), 4);
    }

    #[test]
    fn example_codewords() {
        let c = example();
        let words: HashSet<String> = c
            .enumerate_codewords()
            .unwrap()
            .iter()
            .map(BitVector::to_bit_string)
            .collect();
        let expected: HashSet<String> = [
            "000000", "101100", "111001", "110010", "010101", "011110", "001011", "100111",
        ]
        .into_iter()
        .map(String::from)
        .collect();
        assert_eq!(words, expected);
        for w in c.enumerate_codewords().unwrap() {
            assert!(c.is_codeword(&w).unwrap());
        }
        assert_eq!(c.min_distance().unwrap(), 3);
        assert_eq!(c.error_capability().unwrap(), 1);
    }

    #[test]
    fn full_redundancy_has_only_zero() {
        let c = BinaryCode::new(BitMatrix::identity(4)).unwrap();
        assert_eq!(c.enumerate_codewords().unwrap(), vec![BitVector::zeros(4)]);
        assert_eq!(c.min_distance().unwrap_err(), CodeError::TrivialCode);
    }

    #[test]
    fn small_distances() {
        let parity = BinaryCode::parse("2 1\n1\n1\n", false).unwrap();
        assert_eq!(parity.min_distance().unwrap(), 2);
        assert_eq!(parity.error_capability().unwrap(), 0);
        let zero_row = BinaryCode::parse("3 2\n1 0\n0 0\n0 1\n", false).unwrap();
        assert_eq!(zero_row.min_distance().unwrap(), 1);
        assert_eq!(zero_row.error_capability().unwrap(), 0);
    }

    #[test]
    fn enumeration_guard() {
        let mut rows = vec![BitVector::zeros(1); 26];
        rows[0].set(0, true);
        let c = BinaryCode::new(BitMatrix::from_rows(1, rows).unwrap()).unwrap();
        assert_eq!(
            c.enumerate_codewords().unwrap_err(),
            CodeError::TooLargeToEnumerate { k: 25 }
        );
    }
}
