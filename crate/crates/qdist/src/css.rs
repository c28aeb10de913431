//! CSS quantum codes and the hypergraph product construction.
//!
//! A CSS code is a pair of parity checks `(H_X, H_Z)` over the same
//! qubits with `H_X·H_Zᵀ = 0`. Writing `C₁ = ker H_X` and `C₂ = ker H_Z`,
//! it encodes `k = n − rank H_X − rank H_Z` logical qubits and its distance
//! is the least weight in `(C₁ ∖ C₂⊥) ∪ (C₂ ∖ C₁⊥)` — minimum-weight
//! logical operators, computed by [`crate::distance::css_distance`].
//!
//! The hypergraph product of two full-row-rank checks `H₁ (r₁×n₁)` and
//! `H₂ (r₂×n₂)` is the CSS pair
//!
//! ```text
//! H_X = [H₁ ⊗ I_{n₂} : I_{r₁} ⊗ H₂ᵀ]
//! H_Z = [I_{n₁} ⊗ H₂ : H₁ᵀ ⊗ I_{r₂}]
//! ```
//!
//! on `n₁n₂ + r₁r₂` qubits — the first `n₁n₂` coordinates are the
//! "vertical" qubits indexed by pairs `(i, j) ↦ i·n₂ + j`. It encodes
//! `k₁k₂` qubits with distance `min{d₁, d₂}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// A validated CSS code. Construction enforces `H_X·H_Zᵀ = 0`, so invalid
/// pairs are unrepresentable; redundant rows are kept as given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssCode {
    h_x: BitMatrix,
    h_z: BitMatrix,
    n: usize,
    k: usize,
    rank_x: usize,
    rank_z: usize,
}

impl CssCode {
    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of logical qubits, `n − rank H_X − rank H_Z`.
    #[must_use]
    pub fn k(&self) -> usize {
        self.k
    }

    #[must_use]
    pub fn h_x(&self) -> &BitMatrix {
        &self.h_x
    }

    #[must_use]
    pub fn h_z(&self) -> &BitMatrix {
        &self.h_z
    }

    #[must_use]
    pub fn rank_x(&self) -> usize {
        self.rank_x
    }

    #[must_use]
    pub fn rank_z(&self) -> usize {
        self.rank_z
    }

    /// `(n, k)`.
    #[must_use]
    pub fn params(&self) -> (usize, usize) {
        (self.n, self.k)
    }
}

/// Builds a CSS code from an X/Z check pair.
///
/// Errors if the column counts differ, either matrix has zero columns, or
/// some X row fails to commute with some Z row (the first offending pair is
/// named).
pub fn css_from_pair(h_x: BitMatrix, h_z: BitMatrix) -> Result<CssCode> {
    if h_x.cols() != h_z.cols() {
        return Err(Error::DimensionMismatch(format!(
            "H_X has {} columns but H_Z has {}",
            h_x.cols(),
            h_z.cols()
        )));
    }
    let n = h_x.cols();
    if n == 0 {
        return Err(Error::InvalidParameter(
            "CSS code needs at least one qubit".into(),
        ));
    }
    for i in 0..h_x.rows() {
        let a = h_x.row_words(i);
        for j in 0..h_z.rows() {
            let parity = a
                .iter()
                .zip(h_z.row_words(j))
                .fold(0u32, |acc, (x, y)| acc ^ ((x & y).count_ones() & 1));
            if parity == 1 {
                return Err(Error::CssOrthogonality { row_x: i, row_z: j });
            }
        }
    }
    let rank_x = h_x.rank();
    let rank_z = h_z.rank();
    let k = n - rank_x - rank_z;
    Ok(CssCode {
        h_x,
        h_z,
        n,
        k,
        rank_x,
        rank_z,
    })
}

/// The hypergraph product of two full-row-rank parity checks.
///
/// Errors if either input is rank deficient (full-rank-reduce first, e.g.
/// by taking it from a [`crate::codes::LinearCode`]).
pub fn hgp(h1: &BitMatrix, h2: &BitMatrix) -> Result<CssCode> {
    for (name, h) in [("H1", h1), ("H2", h2)] {
        if h.rank() != h.rows() {
            return Err(Error::RankDeficient(format!(
                "{name} must have full row rank for the hypergraph product"
            )));
        }
    }
    let (r1, n1) = (h1.rows(), h1.cols());
    let (r2, n2) = (h2.rows(), h2.cols());
    let h_x = h1
        .kron(&BitMatrix::identity(n2))?
        .hconcat(&BitMatrix::identity(r1).kron(&h2.transposed())?);
    let h_z = BitMatrix::identity(n1)
        .kron(h2)?
        .hconcat(&h1.transposed().kron(&BitMatrix::identity(r2))?);
    let css = css_from_pair(h_x, h_z)?;
    debug_assert_eq!(css.n(), n1 * n2 + r1 * r2);
    debug_assert_eq!(css.k(), (n1 - r1) * (n2 - r2));
    Ok(css)
}

impl Serialize for CssCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CssCode", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("h_x", &self.h_x)?;
        st.serialize_field("h_z", &self.h_z)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for CssCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            h_x: BitMatrix,
            h_z: BitMatrix,
        }
        let raw = Raw::deserialize(d)?;
        css_from_pair(raw.h_x, raw.h_z).map_err(serde::de::Error::custom)
    }
}
