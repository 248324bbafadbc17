//! Dense linear algebra over GF(2).
//!
//! Vectors are packed into `u64` words, least significant bit first, so bit
//! `i` of a vector lives in word `i / 64` at position `i % 64`. Unused high
//! bits of the last word are always zero, which keeps equality, hashing and
//! weight a plain word comparison.

use std::fmt;

use thiserror::Error;

const WORD_BITS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf2Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid bit {0:?}, expected '0' or '1'")]
    InvalidBit(char),
    #[error("vector of length {0} does not fit in a 64-bit word")]
    TooWide(usize),
}

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Builds a vector from coordinates given as `0`/`1` integers.
    ///
    /// Any nonzero entry counts as one.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b != 0);
        }
        v
    }

    /// Parses a contiguous bit string such as `111010`, first coordinate first.
    pub fn parse_bits(s: &str) -> Result<Self, Gf2Error> {
        let s = s.trim();
        let mut v = Self::zeros(s.chars().count());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => return Err(Gf2Error::InvalidBit(other)),
            }
        }
        Ok(v)
    }

    /// Interprets `value` as a little-endian bit pattern: bit `i` is coordinate `i`.
    pub fn from_u64(len: usize, value: u64) -> Self {
        assert!(len <= WORD_BITS, "from_u64 supports at most 64 coordinates");
        let mut v = Self::zeros(len);
        if len > 0 {
            let mask = if len == WORD_BITS {
                u64::MAX
            } else {
                (1u64 << len) - 1
            };
            v.words[0] = value & mask;
        }
        v
    }

    /// Little-endian integer encoding, the inverse of [`BitVector::from_u64`].
    pub fn to_u64(&self) -> Result<u64, Gf2Error> {
        if self.len > WORD_BITS {
            return Err(Gf2Error::TooWide(self.len));
        }
        Ok(self.words.first().copied().unwrap_or(0))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Indices of the nonzero coordinates, increasing.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn add(&self, other: &BitVector) -> Result<BitVector, Gf2Error> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &BitVector) -> Result<(), Gf2Error> {
        if self.len != other.len {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        Ok(())
    }

    /// Row vector times matrix: `self · m`.
    pub fn mul_mat(&self, m: &BitMatrix) -> Result<BitVector, Gf2Error> {
        m.left_mul(self)
    }

    /// Contiguous `0`/`1` string, first coordinate first.
    pub fn to_bit_string(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..self.len {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A dense `rows × cols` matrix over GF(2), stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(size: usize) -> Self {
        Self {
            cols: size,
            rows: (0..size).map(|i| BitVector::unit(size, i)).collect(),
        }
    }

    /// Builds a matrix from its rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self, Gf2Error> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Gf2Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { cols, rows })
    }

    /// Convenience constructor from nested `0`/`1` arrays.
    pub fn from_bit_rows<R: AsRef<[u8]>>(cols: usize, rows: &[R]) -> Result<Self, Gf2Error> {
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| BitVector::from_bits(r.as_ref()))
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.support() {
                out.rows[j].set(i, true);
            }
        }
        out
    }

    /// `v · self`, the XOR of the rows selected by the support of `v`.
    pub fn left_mul(&self, v: &BitVector) -> Result<BitVector, Gf2Error> {
        if v.len() != self.rows() {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.rows(),
                found: v.len(),
            });
        }
        let mut out = BitVector::zeros(self.cols);
        for i in v.support() {
            for (a, b) in out.words.iter_mut().zip(&self.rows[i].words) {
                *a ^= b;
            }
        }
        Ok(out)
    }

    /// Rank over GF(2), by Gaussian elimination on a private copy.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && row.get(col) {
                    for (a, b) in row.words.iter_mut().zip(&pivot_row.words) {
                        *a ^= b;
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows(), self.cols)?;
        for row in &self.rows {
            writeln!(f, "  {}", row.to_bit_string())?;
        }
        f.write_str("]")
    }
}
