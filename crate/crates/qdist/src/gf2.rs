//! Dense linear algebra over GF(2) with bit-packed rows.
//!
//! Everything downstream — code constructions, CSS products, distance
//! oracles — reduces to a few primitives on [`BitMatrix`]: reduced row
//! echelon form, kernel bases, row-space membership, Kronecker products,
//! and systematic forms with tracked column permutations.
//!
//! Rows are packed least-significant-bit first into `u64` words. Bits past
//! the logical column count are kept at zero, so word-level XOR/AND and
//! popcounts never see garbage; the invariant is checked by debug
//! assertions after every mutating step.
//!
//! Vectors compare by *value order*: the total order on same-length
//! [`BitVec`]s obtained by reading a vector as an integer with coordinate 0
//! least significant. Oracles use it to break ties between equal-weight
//! witnesses, which keeps every reported witness deterministic.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// Mask selecting the valid bits of the last word of a `bits`-bit row.
#[inline]
fn tail_mask(bits: usize) -> u64 {
    let r = bits % WORD_BITS;
    if r == 0 {
        !0
    } else {
        (1u64 << r) - 1
    }
}

#[inline]
pub(crate) fn weight_of(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// Compare two equal-length word slices as little-endian integers.
#[inline]
pub(crate) fn value_cmp(a: &[u64], b: &[u64]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// A bit vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    /// The zero vector of the given length.
    #[must_use]
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Builds a vector with ones exactly at `support`.
    ///
    /// # Panics
    ///
    /// Panics if any index is out of range.
    #[must_use]
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = BitVec::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    /// Parses a string of `0`/`1` characters.
    pub fn parse(s: &str) -> Result<Self> {
        let mut v = BitVec::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => {
                    return Err(Error::Format {
                        line: 1,
                        msg: format!("invalid character {c:?} in bit string"),
                    })
                }
            }
        }
        Ok(v)
    }

    pub(crate) fn from_words(len: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        let v = BitVec { len, words };
        v.debug_check();
        v
    }

    #[inline]
    fn debug_check(&self) {
        if let Some(last) = self.words.last() {
            debug_assert_eq!(
                last & !tail_mask(self.len),
                0,
                "padding bits must stay zero"
            );
        }
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.len
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// # Panics
    ///
    /// Panics if `i >= len`.
    #[inline]
    #[must_use]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    /// # Panics
    ///
    /// Panics if `i >= len`.
    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    /// Hamming weight.
    #[must_use]
    pub fn weight(&self) -> usize {
        weight_of(&self.words)
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// # Panics
    ///
    /// Panics if lengths differ.
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "xor of vectors of different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Coordinate-wise OR, used for graph-state weights `wt(x ∨ z)`.
    ///
    /// # Panics
    ///
    /// Panics if lengths differ.
    #[must_use]
    pub fn or(&self, other: &BitVec) -> BitVec {
        assert_eq!(self.len, other.len, "or of vectors of different lengths");
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        BitVec::from_words(self.len, words)
    }

    /// Indices of the nonzero coordinates, ascending.
    #[must_use]
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(wi * WORD_BITS + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    /// Value order: `self` before `other` iff it is smaller as an integer
    /// with coordinate 0 least significant. Requires equal lengths.
    ///
    /// # Panics
    ///
    /// Panics if lengths differ.
    #[must_use]
    pub fn value_cmp(&self, other: &BitVec) -> Ordering {
        assert_eq!(self.len, other.len, "value_cmp on different lengths");
        value_cmp(&self.words, &other.words)
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

/// A dense matrix over GF(2) with bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    row_words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    /// The all-zero matrix. Zero rows and zero columns are both legal.
    #[must_use]
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let row_words = words_for(cols);
        BitMatrix {
            rows,
            cols,
            row_words,
            data: vec![0; rows * row_words],
        }
    }

    /// The n×n identity.
    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix entry by entry from `f(row, col)`.
    #[must_use]
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = BitMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Parses rows given as strings of `0`/`1`; handy in tests and parsers.
    ///
    /// All rows must have equal length; a matrix with zero rows cannot be
    /// built this way because its column count would be ambiguous.
    pub fn from_binary_rows(rows: &[&str]) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::Format {
                line: 1,
                msg: "no rows given".into(),
            });
        };
        let cols = first.len();
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Format {
                    line: i + 1,
                    msg: format!("expected {cols} columns, found {}", r.len()),
                });
            }
            for (j, c) in r.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    _ => {
                        return Err(Error::Format {
                            line: i + 1,
                            msg: format!("invalid character {c:?}"),
                        })
                    }
                }
            }
        }
        Ok(m)
    }

    /// Stacks the given vectors as rows. All must have length `cols`.
    ///
    /// # Panics
    ///
    /// Panics if some vector has a different length.
    #[must_use]
    pub fn from_rows(cols: usize, rows: &[BitVec]) -> Self {
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row {i} has wrong length");
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        m
    }

    #[must_use]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[must_use]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    fn debug_check(&self) {
        #[cfg(debug_assertions)]
        {
            let mask = tail_mask(self.cols);
            if !self.cols.is_multiple_of(WORD_BITS) && self.row_words > 0 {
                for i in 0..self.rows {
                    debug_assert_eq!(
                        self.data[i * self.row_words + self.row_words - 1] & !mask,
                        0,
                        "padding bits must stay zero in row {i}"
                    );
                }
            }
        }
    }

    /// # Panics
    ///
    /// Panics if out of range.
    #[inline]
    #[must_use]
    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(
            row < self.rows && col < self.cols,
            "({row}, {col}) out of range"
        );
        self.data[row * self.row_words + col / WORD_BITS] >> (col % WORD_BITS) & 1 == 1
    }

    /// # Panics
    ///
    /// Panics if out of range.
    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(
            row < self.rows && col < self.cols,
            "({row}, {col}) out of range"
        );
        let idx = row * self.row_words + col / WORD_BITS;
        let mask = 1u64 << (col % WORD_BITS);
        if value {
            self.data[idx] |= mask;
        } else {
            self.data[idx] &= !mask;
        }
    }

    #[inline]
    pub(crate) fn row_words(&self, row: usize) -> &[u64] {
        &self.data[row * self.row_words..(row + 1) * self.row_words]
    }

    #[inline]
    pub(crate) fn row_words_mut(&mut self, row: usize) -> &mut [u64] {
        &mut self.data[row * self.row_words..(row + 1) * self.row_words]
    }

    /// Copies out row `i`.
    #[must_use]
    pub fn row(&self, i: usize) -> BitVec {
        BitVec::from_words(self.cols, self.row_words(i).to_vec())
    }

    /// Hamming weight of row `i`.
    #[must_use]
    pub fn row_weight(&self, i: usize) -> usize {
        weight_of(self.row_words(i))
    }

    pub(crate) fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let (a, b) = (src * self.row_words, dst * self.row_words);
        for w in 0..self.row_words {
            let v = self.data[a + w];
            self.data[b + w] ^= v;
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.row_words {
            self.data
                .swap(a * self.row_words + w, b * self.row_words + w);
        }
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// The transpose.
    #[must_use]
    pub fn transposed(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            let row = self.row_words(i);
            for (wi, &w) in row.iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let j = wi * WORD_BITS + w.trailing_zeros() as usize;
                    t.set(j, i, true);
                    w &= w - 1;
                }
            }
        }
        t
    }

    /// Matrix product `self · other`.
    ///
    /// # Panics
    ///
    /// Panics if `self.cols() != other.rows()`.
    #[must_use]
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        self.mul_transpose(&other.transposed())
    }

    /// `self · otherᵀ`, the usual shape for orthogonality checks like `H·Gᵀ`.
    ///
    /// # Panics
    ///
    /// Panics if column counts differ.
    #[must_use]
    pub fn mul_transpose(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(
            self.cols, other.cols,
            "mul_transpose needs equal column counts"
        );
        let mut out = BitMatrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            let a = self.row_words(i);
            for j in 0..other.rows {
                let b = other.row_words(j);
                let parity = a
                    .iter()
                    .zip(b)
                    .fold(0u32, |acc, (x, y)| acc ^ ((x & y).count_ones() & 1));
                if parity == 1 {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    /// `self · vᵀ` as a length-`rows` vector (the syndrome map).
    ///
    /// # Panics
    ///
    /// Panics if `v.len() != self.cols()`.
    #[must_use]
    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.cols, "vector length must equal column count");
        let mut out = BitVec::zeros(self.rows);
        for i in 0..self.rows {
            let parity = self
                .row_words(i)
                .iter()
                .zip(v.words())
                .fold(0u32, |acc, (x, y)| acc ^ ((x & y).count_ones() & 1));
            if parity == 1 {
                out.set(i, true);
            }
        }
        out
    }

    /// `[self : other]` side by side.
    ///
    /// # Panics
    ///
    /// Panics if row counts differ.
    #[must_use]
    pub fn hconcat(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.rows, other.rows, "hconcat needs equal row counts");
        let mut out = BitMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            out.blit_row(i, 0, self.row_words(i), self.cols);
            out.blit_row(i, self.cols, other.row_words(i), other.cols);
        }
        out.debug_check();
        out
    }

    /// `self` stacked on top of `other`.
    ///
    /// # Panics
    ///
    /// Panics if column counts differ.
    #[must_use]
    pub fn vconcat(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols, "vconcat needs equal column counts");
        let mut out = BitMatrix::zeros(self.rows + other.rows, self.cols);
        out.data[..self.data.len()].copy_from_slice(&self.data);
        out.data[self.data.len()..].copy_from_slice(&other.data);
        out
    }

    /// Block diagonal `diag(self, other)`.
    #[must_use]
    pub fn block_diag(&self, other: &BitMatrix) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            out.blit_row(i, 0, self.row_words(i), self.cols);
        }
        for i in 0..other.rows {
            out.blit_row(self.rows + i, self.cols, other.row_words(i), other.cols);
        }
        out.debug_check();
        out
    }

    /// ORs `len` bits of `src` into row `row` starting at column `at`.
    fn blit_row(&mut self, row: usize, at: usize, src: &[u64], len: usize) {
        if len == 0 {
            return;
        }
        debug_assert!(at + len <= self.cols);
        let shift = at % WORD_BITS;
        let off = at / WORD_BITS;
        let base = row * self.row_words;
        let src_words = words_for(len);
        for (w, &v) in src.iter().take(src_words).enumerate() {
            self.data[base + off + w] |= v << shift;
            if shift != 0 && off + w + 1 < self.row_words {
                self.data[base + off + w + 1] |= v >> (WORD_BITS - shift);
            }
        }
    }

    /// Kronecker product `self ⊗ other`.
    ///
    /// Entry `((i1,i2),(j1,j2))` is `self[i1,j1] · other[i2,j2]` with the
    /// second index minor, matching the usual convention
    /// `(A ⊗ B)(u ⊗ v) = Au ⊗ Bv`.
    pub fn kron(&self, other: &BitMatrix) -> Result<BitMatrix> {
        let rows = self.rows.checked_mul(other.rows);
        let cols = self.cols.checked_mul(other.cols);
        let (Some(rows), Some(cols)) = (rows, cols) else {
            return Err(Error::SizeOverflow(format!(
                "kron of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        };
        const MAX_BITS: usize = 1 << 31;
        if rows.checked_mul(cols).is_none_or(|b| b > MAX_BITS) {
            return Err(Error::SizeOverflow(format!(
                "kron result {rows}x{cols} exceeds the {MAX_BITS}-bit cap"
            )));
        }
        let mut out = BitMatrix::zeros(rows, cols);
        for i1 in 0..self.rows {
            for j1 in self.row(i1).support() {
                for i2 in 0..other.rows {
                    out.blit_row(
                        i1 * other.rows + i2,
                        j1 * other.cols,
                        other.row_words(i2),
                        other.cols,
                    );
                }
            }
        }
        out.debug_check();
        Ok(out)
    }

    /// Reduced row echelon form, with pivot columns.
    #[must_use]
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c)) else {
                continue;
            };
            m.swap_rows(r, p);
            for i in 0..m.rows {
                if i != r && m.get(i, c) {
                    m.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.debug_check();
        Rref { matrix: m, pivots }
    }

    /// Rank over GF(2).
    #[must_use]
    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// A basis of `{x : self · xᵀ = 0}`, one row per free column of the
    /// reduced form, ordered by free column. `cols − rank` rows.
    #[must_use]
    pub fn kernel_basis(&self) -> BitMatrix {
        let rr = self.rref();
        let pivots = &rr.pivots;
        let mut is_pivot = vec![false; self.cols];
        for &p in pivots {
            is_pivot[p] = true;
        }
        let mut out = BitMatrix::zeros(self.cols - pivots.len(), self.cols);
        let mut row = 0;
        for (f, &fp) in is_pivot.iter().enumerate() {
            if fp {
                continue;
            }
            out.set(row, f, true);
            for (i, &p) in pivots.iter().enumerate() {
                if rr.matrix.get(i, f) {
                    out.set(row, p, true);
                }
            }
            row += 1;
        }
        out
    }

    /// Is `v` a GF(2) combination of the rows? Decided by rank: `v` lies in
    /// the row space iff appending it does not increase the rank.
    ///
    /// Errors on a length mismatch.
    pub fn rowspace_contains(&self, v: &BitVec) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against row space of width {}",
                v.len(),
                self.cols
            )));
        }
        Ok(self.rref().reduces_to_zero(v))
    }

    /// Reorders columns; entry `j` of the result is old column `perm[j]`.
    ///
    /// # Panics
    ///
    /// Panics if `perm` is not a permutation of `0..cols`.
    #[must_use]
    pub fn permute_cols(&self, perm: &ColPermutation) -> BitMatrix {
        assert_eq!(
            perm.len(),
            self.cols,
            "permutation length must equal column count"
        );
        let mut out = BitMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for (j, &old) in perm.new_to_old().iter().enumerate() {
                if self.get(i, old) {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    /// Columns `range` as a matrix, preserving order.
    ///
    /// # Panics
    ///
    /// Panics if the range exceeds the column count.
    #[must_use]
    pub fn column_block(&self, range: std::ops::Range<usize>) -> BitMatrix {
        assert!(range.end <= self.cols, "column range out of bounds");
        BitMatrix::from_fn(self.rows, range.len(), |i, j| self.get(i, range.start + j))
    }

    /// Systematic form of a full-row-rank matrix: a column permutation `π`
    /// and the block `P` such that reordering the columns by `π` and row
    /// reducing gives `[I : P]`. The permutation moves the pivot columns of
    /// the reduced form to the front, preserving relative order, so it is
    /// the identity exactly when the leading `rows` columns are already
    /// independent.
    ///
    /// Errors if the matrix does not have full row rank.
    pub fn systematic_form(&self) -> Result<(BitMatrix, ColPermutation)> {
        let rr = self.rref();
        let r = rr.pivots.len();
        if r != self.rows {
            return Err(Error::RankDeficient(format!(
                "systematic form needs full row rank, rank {r} < {} rows",
                self.rows
            )));
        }
        let mut is_pivot = vec![false; self.cols];
        for &p in &rr.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut order = rr.pivots.clone();
        order.extend_from_slice(&free);
        let p = BitMatrix::from_fn(r, free.len(), |i, j| rr.matrix.get(i, free[j]));
        Ok((p, ColPermutation::new(order)))
    }
}

impl serde::Serialize for BitMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BitMatrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        let data: Vec<String> = (0..self.rows).map(|i| self.row(i).to_string()).collect();
        st.serialize_field("data", &data)?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for BitMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            rows: usize,
            cols: usize,
            data: Vec<String>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.data.len() != raw.rows {
            return Err(serde::de::Error::custom(format!(
                "expected {} rows, found {}",
                raw.rows,
                raw.data.len()
            )));
        }
        let mut m = BitMatrix::zeros(raw.rows, raw.cols);
        for (i, line) in raw.data.iter().enumerate() {
            if line.len() != raw.cols {
                return Err(serde::de::Error::custom(format!(
                    "row {i} has {} columns, expected {}",
                    line.len(),
                    raw.cols
                )));
            }
            for (j, c) in line.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    _ => return Err(serde::de::Error::custom(format!("bad character {c:?}"))),
                }
            }
        }
        Ok(m)
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix({}x{}) [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// A matrix in reduced row echelon form together with its pivot columns.
pub struct Rref {
    pub matrix: BitMatrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    #[must_use]
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// True iff `v` reduces to zero against the pivot rows, i.e. lies in the
    /// row space. Cheap enough to call per candidate in oracle inner loops.
    #[must_use]
    pub fn reduces_to_zero(&self, v: &BitVec) -> bool {
        let mut words = v.words().to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if words[p / WORD_BITS] >> (p % WORD_BITS) & 1 == 1 {
                for (w, m) in words.iter_mut().zip(self.matrix.row_words(i)) {
                    *w ^= m;
                }
            }
        }
        words.iter().all(|&w| w == 0)
    }

    pub(crate) fn reduce_words_in_place(&self, words: &mut [u64]) -> bool {
        for (i, &p) in self.pivots.iter().enumerate() {
            if words[p / WORD_BITS] >> (p % WORD_BITS) & 1 == 1 {
                for (w, m) in words.iter_mut().zip(self.matrix.row_words(i)) {
                    *w ^= m;
                }
            }
        }
        words.iter().all(|&w| w == 0)
    }
}

/// A column permutation, stored as the list `new index → old index`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColPermutation {
    new_to_old: Vec<usize>,
}

impl ColPermutation {
    /// # Panics
    ///
    /// Panics if `order` is not a permutation of `0..order.len()`.
    #[must_use]
    pub fn new(order: Vec<usize>) -> Self {
        let mut seen = vec![false; order.len()];
        for &i in &order {
            assert!(i < order.len() && !seen[i], "not a permutation");
            seen[i] = true;
        }
        ColPermutation { new_to_old: order }
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        ColPermutation {
            new_to_old: (0..n).collect(),
        }
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.new_to_old.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.new_to_old.is_empty()
    }

    #[must_use]
    pub fn is_identity(&self) -> bool {
        self.new_to_old.iter().enumerate().all(|(i, &j)| i == j)
    }

    #[must_use]
    pub fn new_to_old(&self) -> &[usize] {
        &self.new_to_old
    }

    /// Maps a vector in original coordinates to permuted coordinates.
    ///
    /// # Panics
    ///
    /// Panics if lengths differ.
    #[must_use]
    pub fn apply(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.len());
        let mut out = BitVec::zeros(v.len());
        for (j, &old) in self.new_to_old.iter().enumerate() {
            if v.get(old) {
                out.set(j, true);
            }
        }
        out
    }

    /// Maps a vector in permuted coordinates back to original coordinates.
    ///
    /// # Panics
    ///
    /// Panics if lengths differ.
    #[must_use]
    pub fn unapply(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.len());
        let mut out = BitVec::zeros(v.len());
        for (j, &old) in self.new_to_old.iter().enumerate() {
            if v.get(j) {
                out.set(old, true);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming() -> BitMatrix {
        BitMatrix::from_binary_rows(&["1010101", "0110011", "0001111"]).unwrap()
    }

    #[test]
    fn rref_identity_is_fixed_point() {
        let i3 = BitMatrix::identity(3);
        let rr = i3.rref();
        assert_eq!(rr.matrix, i3);
        assert_eq!(rr.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_all_ones_collapses() {
        let m = BitMatrix::from_binary_rows(&["11", "11"]).unwrap();
        let rr = m.rref();
        assert_eq!(rr.rank(), 1);
        assert_eq!(rr.matrix.row(0).to_string(), "11");
        assert!(rr.matrix.row(1).is_zero());
    }

    #[test]
    fn rref_hamming_rank_and_pivots() {
        let rr = hamming().rref();
        assert_eq!(rr.rank(), 3);
        assert_eq!(rr.pivots, vec![0, 1, 3]);
    }

    #[test]
    fn kernel_of_hamming_has_four_rows() {
        let h = hamming();
        let k = h.kernel_basis();
        assert_eq!(k.rows(), 4);
        // Frozen from a hand reduction: free columns 2, 4, 5, 6.
        assert_eq!(k.row(0).to_string(), "1110000");
        assert_eq!(k.row(1).to_string(), "1001100");
        assert_eq!(k.row(2).to_string(), "0101010");
        assert_eq!(k.row(3).to_string(), "1101001");
        assert!(h.mul_transpose(&k).is_zero());
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert_eq!(BitMatrix::identity(4).kernel_basis().rows(), 0);
    }

    #[test]
    fn kernel_of_single_parity_row() {
        let m = BitMatrix::from_binary_rows(&["11"]).unwrap();
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 1);
        assert_eq!(k.row(0).to_string(), "11");
    }

    #[test]
    fn rowspace_membership() {
        let h = hamming();
        assert!(h
            .rowspace_contains(&BitVec::parse("1010101").unwrap())
            .unwrap());
        assert!(h
            .rowspace_contains(&BitVec::parse("1100110").unwrap())
            .unwrap());
        assert!(!h
            .rowspace_contains(&BitVec::parse("1110000").unwrap())
            .unwrap());
        assert!(h.rowspace_contains(&BitVec::zeros(7)).unwrap());
        assert!(h.rowspace_contains(&BitVec::zeros(6)).is_err());
    }

    #[test]
    fn kron_row_against_identity() {
        let a = BitMatrix::from_binary_rows(&["11"]).unwrap();
        let k = a.kron(&BitMatrix::identity(2)).unwrap();
        assert_eq!(k.rows(), 2);
        assert_eq!(k.cols(), 4);
        assert_eq!(k.row(0).to_string(), "1010");
        assert_eq!(k.row(1).to_string(), "0101");
    }

    #[test]
    fn kron_transpose_commutes() {
        let a = BitMatrix::from_binary_rows(&["110", "011"]).unwrap();
        let b = BitMatrix::from_binary_rows(&["10", "11", "01"]).unwrap();
        let lhs = a.kron(&b).unwrap().transposed();
        let rhs = a.transposed().kron(&b.transposed()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn kron_rejects_absurd_sizes() {
        let wide = BitMatrix::zeros(1, 1 << 20);
        assert!(matches!(wide.kron(&wide), Err(Error::SizeOverflow(_))));
    }

    #[test]
    fn systematic_form_of_hamming() {
        let (p, perm) = hamming().systematic_form().unwrap();
        assert_eq!(perm.new_to_old(), &[0, 1, 3, 2, 4, 5, 6]);
        assert_eq!(p.rows(), 3);
        assert_eq!(p.cols(), 4);
        // RREF is unique, so P is forced once the pivot order is fixed.
        assert_eq!(p.row(0).to_string(), "1101");
        assert_eq!(p.row(1).to_string(), "1011");
        assert_eq!(p.row(2).to_string(), "0111");
        // Independent check: [I : P] spans the same rows as the permuted H.
        let ip = BitMatrix::identity(3).hconcat(&p);
        let hp = hamming().permute_cols(&perm);
        assert_eq!(ip.rref().matrix, hp.rref().matrix);
    }

    #[test]
    fn systematic_form_identity_permutation() {
        let h = BitMatrix::from_binary_rows(&["101", "011"]).unwrap();
        let (p, perm) = h.systematic_form().unwrap();
        assert!(perm.is_identity());
        assert_eq!(p.row(0).to_string(), "1");
        assert_eq!(p.row(1).to_string(), "1");
    }

    #[test]
    fn systematic_form_swaps_leading_zero_column() {
        let h = BitMatrix::from_binary_rows(&["01"]).unwrap();
        let (p, perm) = h.systematic_form().unwrap();
        assert_eq!(perm.new_to_old(), &[1, 0]);
        assert_eq!(p.row(0).to_string(), "0");
    }

    #[test]
    fn systematic_form_rejects_rank_deficient() {
        let h = BitMatrix::from_binary_rows(&["11", "11"]).unwrap();
        assert!(matches!(h.systematic_form(), Err(Error::RankDeficient(_))));
    }

    #[test]
    fn permutation_roundtrip() {
        let perm = ColPermutation::new(vec![2, 0, 1]);
        let v = BitVec::parse("110").unwrap();
        assert_eq!(perm.unapply(&perm.apply(&v)), v);
        assert_eq!(perm.apply(&perm.unapply(&v)), v);
    }

    #[test]
    fn value_order_reads_coordinate_zero_as_lsb() {
        let a = BitVec::parse("100").unwrap(); // value 1
        let b = BitVec::parse("010").unwrap(); // value 2
        assert_eq!(a.value_cmp(&b), Ordering::Less);
        assert_eq!(b.value_cmp(&a), Ordering::Greater);
        assert_eq!(a.value_cmp(&a), Ordering::Equal);
    }

    #[test]
    fn blocks_and_concat() {
        let a = BitMatrix::identity(2);
        let b = BitMatrix::from_binary_rows(&["11", "01"]).unwrap();
        let h = a.hconcat(&b);
        assert_eq!(h.row(0).to_string(), "1011");
        assert_eq!(h.row(1).to_string(), "0101");
        let d = a.block_diag(&b);
        assert_eq!(d.rows(), 4);
        assert_eq!(d.row(2).to_string(), "0011");
        let v = a.vconcat(&b);
        assert_eq!(v.rows(), 4);
        assert_eq!(v.row(3).to_string(), "01");
        assert_eq!(h.column_block(2..4), b);
    }

    #[test]
    fn mul_agrees_with_mul_transpose() {
        let a = BitMatrix::from_binary_rows(&["110", "011"]).unwrap();
        let b = BitMatrix::from_binary_rows(&["10", "11", "01"]).unwrap();
        assert_eq!(a.mul(&b), a.mul_transpose(&b.transposed()));
        let v = BitVec::parse("101").unwrap();
        assert_eq!(a.mul_vec(&v).to_string(), "11");
    }
}
