//! Binary linear codes and the classical constructions the reductions use.
//!
//! A [`LinearCode`] is a subspace of GF(2)ⁿ held by a canonical (reduced,
//! full-row-rank) parity check or generator; whichever of the two was not
//! given is derived on demand as a kernel basis. Distances are never
//! cached — the oracles in [`crate::distance`] recompute them so that a
//! stored value can never mask a construction bug.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};

/// A binary linear code `[n, k]`.
#[derive(Clone)]
pub struct LinearCode {
    n: usize,
    k: usize,
    parity: OnceLock<BitMatrix>,
    generator: OnceLock<BitMatrix>,
}

impl LinearCode {
    /// Builds the code `{x : H·xᵀ = 0}`.
    ///
    /// `H` may contain redundant rows; it is row reduced and the zero rows
    /// dropped, so the stored parity check always has full row rank.
    /// Errors if `H` has zero columns.
    pub fn from_parity_check(h: BitMatrix) -> Result<Self> {
        if h.cols() == 0 {
            return Err(Error::InvalidParameter(
                "a code needs at least one coordinate".into(),
            ));
        }
        let n = h.cols();
        let rr = h.rref();
        let rank = rr.rank();
        let canonical = keep_rows(&rr.matrix, rank);
        let parity = OnceLock::new();
        parity.set(canonical).unwrap();
        Ok(LinearCode {
            n,
            k: n - rank,
            parity,
            generator: OnceLock::new(),
        })
    }

    /// Builds the code spanned by the rows of `G` (which may be dependent).
    ///
    /// Errors if `G` has zero columns.
    pub fn from_generator(g: BitMatrix) -> Result<Self> {
        if g.cols() == 0 {
            return Err(Error::InvalidParameter(
                "a code needs at least one coordinate".into(),
            ));
        }
        let n = g.cols();
        let rr = g.rref();
        let rank = rr.rank();
        let canonical = keep_rows(&rr.matrix, rank);
        let generator = OnceLock::new();
        generator.set(canonical).unwrap();
        Ok(LinearCode {
            n,
            k: rank,
            parity: OnceLock::new(),
            generator,
        })
    }

    /// Code length.
    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Code dimension.
    #[must_use]
    pub fn k(&self) -> usize {
        self.k
    }

    /// The canonical parity check: `n − k` independent rows in reduced row
    /// echelon form. Derived from the generator on first use if the code
    /// was built from one.
    #[must_use]
    pub fn parity_check(&self) -> &BitMatrix {
        self.parity.get_or_init(|| {
            let g = self.generator.get().expect("either side is always present");
            g.kernel_basis()
        })
    }

    /// A generator: `k` independent rows spanning the code, derived from
    /// the parity check on first use (one row per free column).
    #[must_use]
    pub fn generator(&self) -> &BitMatrix {
        self.generator.get_or_init(|| {
            let h = self.parity.get().expect("either side is always present");
            h.kernel_basis()
        })
    }

    /// The dual code `C⊥`; parity check and generator swap roles.
    #[must_use]
    pub fn dual(&self) -> LinearCode {
        LinearCode {
            n: self.n,
            k: self.n - self.k,
            parity: self.generator.clone(),
            generator: self.parity.clone(),
        }
    }

    /// Is `v` a codeword? Errors on a length mismatch.
    pub fn contains(&self, v: &BitVec) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against code of length {}",
                v.len(),
                self.n
            )));
        }
        Ok(self.parity_check().mul_vec(v).is_zero())
    }
}

impl PartialEq for LinearCode {
    /// Codes compare as subspaces: equal iff their canonical reduced parity
    /// checks agree.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.k == other.k
            && canonical_rref(self.parity_check()) == canonical_rref(other.parity_check())
    }
}

impl Eq for LinearCode {}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LinearCode[n={}, k={}]", self.n, self.k)
    }
}

impl Serialize for LinearCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("LinearCode", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("parity_check", self.parity_check())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for LinearCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            parity_check: BitMatrix,
        }
        let raw = Raw::deserialize(d)?;
        if raw.parity_check.cols() != raw.n {
            return Err(serde::de::Error::custom(
                "parity check width disagrees with n",
            ));
        }
        LinearCode::from_parity_check(raw.parity_check).map_err(serde::de::Error::custom)
    }
}

fn keep_rows(m: &BitMatrix, rows: usize) -> BitMatrix {
    BitMatrix::from_fn(rows, m.cols(), |i, j| m.get(i, j))
}

fn canonical_rref(m: &BitMatrix) -> BitMatrix {
    let rr = m.rref();
    let rank = rr.rank();
    keep_rows(&rr.matrix, rank)
}

/// The repetition code `[n, 1, n]`: parity rows force adjacent coordinates
/// equal. Errors for `n = 0`; `n = 1` gives the full line with an empty
/// parity check.
pub fn repetition_code(n: usize) -> Result<LinearCode> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "repetition code needs n ≥ 1".into(),
        ));
    }
    let mut h = BitMatrix::zeros(n - 1, n);
    for i in 0..n - 1 {
        h.set(i, i, true);
        h.set(i, i + 1, true);
    }
    LinearCode::from_parity_check(h)
}

/// The full space `[m, m, 1]` — an empty parity check. Errors for `m = 0`.
pub fn full_space(m: usize) -> Result<LinearCode> {
    if m == 0 {
        return Err(Error::InvalidParameter("full space needs m ≥ 1".into()));
    }
    LinearCode::from_parity_check(BitMatrix::zeros(0, m))
}

/// The tensor product code `C₁ ⊗ C₂`, generated by `G₁ ⊗ G₂`. Its
/// parameters are `[n₁n₂, k₁k₂, d₁d₂]`, and its dual has distance
/// `min{d(C₁⊥), d(C₂⊥)}`. Errors if either factor has dimension zero.
pub fn tensor_code(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode> {
    if c1.k() == 0 || c2.k() == 0 {
        return Err(Error::InvalidParameter(
            "tensor factors must have dimension ≥ 1".into(),
        ));
    }
    LinearCode::from_generator(c1.generator().kron(c2.generator())?)
}

/// Pads `c` with `n_new − n` always-zero coordinates: the parity check
/// becomes `H ⊕ I`. Length grows, `k` and the distance are unchanged, and
/// the dual distance drops to 1 as soon as any padding is added. Errors if
/// `n_new < n`.
pub fn elongate(c: &LinearCode, n_new: usize) -> Result<LinearCode> {
    if n_new < c.n() {
        return Err(Error::InvalidParameter(format!(
            "cannot elongate a length-{} code to length {n_new}",
            c.n()
        )));
    }
    let pad = BitMatrix::identity(n_new - c.n());
    LinearCode::from_parity_check(c.parity_check().block_diag(&pad))
}

/// The doubled code `π(C) = {(c, c) : c ∈ C}`, a self-orthogonal
/// `[2n, k, 2d]` code. Errors if `k = 0`.
pub fn double(c: &LinearCode) -> Result<LinearCode> {
    if c.k() == 0 {
        return Err(Error::InvalidParameter("cannot double a zero code".into()));
    }
    let g = c.generator();
    LinearCode::from_generator(g.hconcat(g))
}

/// Does `G·Gᵀ = 0`, i.e. is `C ⊆ C⊥`?
#[must_use]
pub fn is_self_orthogonal(c: &LinearCode) -> bool {
    let g = c.generator();
    g.mul_transpose(g).is_zero()
}

/// The promise-gap regime of a decision instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Gap {
    /// Plain decision: YES iff `d ≤ t`.
    None,
    /// NO instances promise `d > γ·t`.
    Multiplicative { gamma: f64 },
    /// NO instances promise `d > t + τ·n^ε`.
    Additive { tau: f64, eps: f64 },
}

/// A decision instance: is the minimum distance of `code` at most `t`,
/// possibly under a promise gap?
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecisionInstance {
    pub code: LinearCode,
    pub t: u64,
    pub gap: Gap,
}

impl DecisionInstance {
    /// Validates the gap parameters: `γ ≥ 1`, `τ ∈ (0, 1)`, `ε ∈ (0, 1]`.
    pub fn new(code: LinearCode, t: u64, gap: Gap) -> Result<Self> {
        match gap {
            Gap::None => {}
            Gap::Multiplicative { gamma } => {
                if gamma.is_nan() || gamma < 1.0 {
                    return Err(Error::InvalidParameter(format!(
                        "multiplicative gap needs γ ≥ 1, got {gamma}"
                    )));
                }
            }
            Gap::Additive { tau, eps } => {
                if !(tau > 0.0 && tau < 1.0) {
                    return Err(Error::InvalidParameter(format!(
                        "additive gap needs τ ∈ (0, 1), got {tau}"
                    )));
                }
                if !(eps > 0.0 && eps <= 1.0) {
                    return Err(Error::InvalidParameter(format!(
                        "additive gap needs ε ∈ (0, 1], got {eps}"
                    )));
                }
            }
        }
        Ok(DecisionInstance { code, t, gap })
    }
}
