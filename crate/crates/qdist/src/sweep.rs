//! Code families for exhaustive and randomized sweeps.
//!
//! Verification leans on two kinds of instance supply: *every* code of a
//! small length, and seeded random codes of moderate length.  Exhaustive
//! families are generated as canonical reduced-row-echelon parity-check
//! matrices, one per distinct code, so sweeps neither miss a code nor test
//! one twice.  Random families use a counter-seeded ChaCha stream so any
//! instance that misbehaves can be regenerated from its seed alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codes::LinearCode;
use crate::gf2::BitMatrix;

/// A deterministic RNG for sweep instances, from a bare seed.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All matrices with `n` columns, rank `r`, in reduced row-echelon form with
/// no zero rows.
///
/// Every rank-`r` row space over GF(2) has exactly one such representative,
/// so the result enumerates the `r`-dimensional subspaces of `F_2^n` — there
/// are Gaussian-binomial `[n choose r]_2` of them — without repetition.
/// Matrices appear in a fixed order: pivot sets in colexicographic order,
/// free entries in counter order within each pivot set.
pub fn rref_matrices(n: usize, r: usize) -> Vec<BitMatrix> {
    assert!(r <= n, "rank cannot exceed the column count");
    if r == 0 {
        return vec![BitMatrix::zeros(0, n)];
    }
    let mut out = Vec::new();
    let mut pivots = Vec::new();
    pivot_sets(n, r, &mut pivots, &mut |pivots| {
        // Free entries of an RREF with this pivot set: row i may be nonzero
        // at non-pivot columns right of its own pivot.
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for f in (p + 1)..n {
                if !pivots.contains(&f) {
                    free.push((i, f));
                }
            }
        }
        assert!(
            free.len() < 64,
            "free-entry count overflows the sweep counter"
        );
        for bits in 0u64..(1 << free.len()) {
            let mut m = BitMatrix::zeros(r, n);
            for (i, &p) in pivots.iter().enumerate() {
                m.set(i, p, true);
            }
            for (idx, &(i, f)) in free.iter().enumerate() {
                if (bits >> idx) & 1 == 1 {
                    m.set(i, f, true);
                }
            }
            out.push(m);
        }
    });
    out
}

/// Visits all sorted `r`-subsets of `0..n` in colexicographic order.
fn pivot_sets(n: usize, r: usize, acc: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if acc.len() == r {
        visit(acc);
        return;
    }
    let lo = acc.last().map_or(0, |&p| p + 1);
    let slots_left = r - acc.len();
    for p in lo..=(n - slots_left) {
        acc.push(p);
        pivot_sets(n, r, acc, visit);
        acc.pop();
    }
}

/// Every distinct `[n, k]` code with `1 <= k <= n`, each exactly once, keyed
/// by its canonical RREF parity-check matrix.
///
/// The count is the number of proper-or-full subspaces of `F_2^n` minus the
/// zero code: 15 for `n = 3`, 373 for `n = 5`, 2825 for `n = 6`.
pub fn all_codes(n: usize) -> Vec<LinearCode> {
    assert!(n >= 1);
    let mut out = Vec::new();
    // rank r of the parity check runs 0 (full space) to n - 1 (k = 1).
    for r in 0..n {
        for h in rref_matrices(n, r) {
            out.push(LinearCode::from_parity_check(h).expect("canonical RREF is well-formed"));
        }
    }
    out
}

/// A uniformly random `rows x cols` matrix from `rng`.
pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> BitMatrix {
    BitMatrix::from_fn(rows, cols, |_, _| rng.gen::<bool>())
}

/// A random code of length `n`: a parity check with `rows` uniform rows
/// (its rank, hence the code's dimension, varies).
pub fn random_code(rng: &mut impl Rng, rows: usize, n: usize) -> LinearCode {
    assert!(n >= 1);
    LinearCode::from_parity_check(random_matrix(rng, rows, n)).expect("n >= 1")
}

/// A random simple graph on `n` vertices with i.i.d. edges.
pub fn random_graph(rng: &mut impl Rng, n: usize) -> crate::graphs::Graph {
    let mut adj = BitMatrix::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen::<bool>() {
                adj.set(i, j, true);
                adj.set(j, i, true);
            }
        }
    }
    crate::graphs::Graph::from_adjacency(adj, false).expect("constructed symmetric and hollow")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn rref_counts_match_gaussian_binomials() {
        // [n choose r]_2 for n = 4: 1, 15, 35, 15, 1.
        let expect = [1usize, 15, 35, 15, 1];
        for (r, &e) in expect.iter().enumerate() {
            assert_eq!(rref_matrices(4, r).len(), e, "r = {r}");
        }
    }

    #[test]
    fn rref_matrices_are_distinct_row_spaces() {
        let mats = rref_matrices(5, 2);
        assert_eq!(mats.len(), 155);
        let mut seen = HashSet::new();
        for m in &mats {
            // The canonical form doubles as a row-space fingerprint.
            let key = format!("{m:?}");
            assert!(seen.insert(key), "duplicate RREF emitted");
            assert_eq!(m.rank(), 2);
        }
    }

    #[test]
    fn all_codes_counts() {
        assert_eq!(all_codes(3).len(), 15);
        assert_eq!(all_codes(5).len(), 373);
    }

    #[test]
    fn all_codes_are_pairwise_distinct() {
        let codes = all_codes(4);
        for (i, a) in codes.iter().enumerate() {
            for b in codes.iter().skip(i + 1) {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn seeded_streams_reproduce() {
        let a = random_matrix(&mut seeded_rng(7), 5, 9);
        let b = random_matrix(&mut seeded_rng(7), 5, 9);
        assert_eq!(a, b);
        let g = random_graph(&mut seeded_rng(3), 8);
        let h = random_graph(&mut seeded_rng(3), 8);
        assert_eq!(g.adjacency(), h.adjacency());
    }
}
