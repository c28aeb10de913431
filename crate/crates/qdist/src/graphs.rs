//! Simple graphs, polarity graphs of projective planes, and graph codes.
//!
//! The polarity (Erdős–Rényi) graph of PG(2, p) puts an edge between two
//! projective points `u ≠ v` exactly when `⟨u, v⟩ ≡ 0 (mod p)`. It has
//! `p² + p + 1` vertices, degrees in `{p, p+1}` (the `p+1` absolute points
//! lose their loop), and contains no `K₂,₂` — which is what forces the
//! column sums of its adjacency matrix to grow and gives the graph code
//! `[2n, n, d ≥ δ/2]` below its distance guarantee.

use serde::Deserialize;

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// An undirected graph held as a symmetric adjacency matrix. A diagonal one
/// is a loop; most constructions forbid them, but the graph-state targets
/// of the X-distance reduction use them on every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: BitMatrix,
    allows_loops: bool,
}

impl Graph {
    /// Wraps an adjacency matrix, checking that it is square and symmetric
    /// and — unless `allows_loops` — has a zero diagonal.
    pub fn from_adjacency(adj: BitMatrix, allows_loops: bool) -> Result<Self> {
        if adj.rows() != adj.cols() {
            return Err(Error::DimensionMismatch(format!(
                "adjacency matrix must be square, got {}x{}",
                adj.rows(),
                adj.cols()
            )));
        }
        for i in 0..adj.rows() {
            for j in i + 1..adj.cols() {
                if adj.get(i, j) != adj.get(j, i) {
                    return Err(Error::Asymmetric(i, j));
                }
            }
            if !allows_loops && adj.get(i, i) {
                return Err(Error::UnexpectedLoop(i));
            }
        }
        Ok(Graph { adj, allows_loops })
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.adj.rows()
    }

    #[must_use]
    pub fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    #[must_use]
    pub fn allows_loops(&self) -> bool {
        self.allows_loops
    }

    /// Degree of vertex `i`; a loop counts once.
    #[must_use]
    pub fn degree(&self, i: usize) -> usize {
        self.adj.row_weight(i)
    }
}

impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Graph", 2)?;
        st.serialize_field("adjacency", &self.adj)?;
        st.serialize_field("allows_loops", &self.allows_loops)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            adjacency: BitMatrix,
            allows_loops: bool,
        }
        let raw = Raw::deserialize(d)?;
        Graph::from_adjacency(raw.adjacency, raw.allows_loops).map_err(serde::de::Error::custom)
    }
}

/// Primality by trial division — ample for polarity-graph parameters.
#[must_use]
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The smallest prime `≥ lo`.
#[must_use]
pub fn next_prime(lo: u64) -> u64 {
    let mut p = lo.max(2);
    while !is_prime(p) {
        p += 1;
    }
    p
}

/// The polarity graph of the projective plane over F_p.
///
/// Vertices are the points of PG(2, p), normalized so the first nonzero
/// coordinate is 1 and listed lexicographically; `u ~ v` iff their inner
/// product vanishes mod p. Loops (absolute points) are dropped, so the
/// graph is simple with degrees in `{p, p+1}`.
///
/// Errors if `p` is not prime or exceeds the `2¹⁵` desk-scale cap.
pub fn polarity_graph(p: u64) -> Result<Graph> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p > 1 << 15 {
        return Err(Error::SizeOverflow(format!(
            "polarity graph prime {p} > 2^15"
        )));
    }
    let n = (p * p + p + 1) as usize;
    if n > 1 << 15 {
        return Err(Error::SizeOverflow(format!(
            "polarity graph on {n} vertices is beyond desk scale"
        )));
    }
    // Normalized points in lexicographic order: (0,0,1), (0,1,z), (1,y,z).
    let mut points: Vec<[u64; 3]> = Vec::with_capacity(n);
    points.push([0, 0, 1]);
    for z in 0..p {
        points.push([0, 1, z]);
    }
    for y in 0..p {
        for z in 0..p {
            points.push([1, y, z]);
        }
    }
    debug_assert_eq!(points.len(), n);
    let mut adj = BitMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let dot: u64 = points[i]
                .iter()
                .zip(&points[j])
                .map(|(a, b)| a * b % p)
                .sum();
            if dot.is_multiple_of(p) {
                adj.set(i, j, true);
                adj.set(j, i, true);
            }
        }
    }
    Graph::from_adjacency(adj, false)
}

/// The complete graph on `n ≥ 3` vertices minus the edge `{0, n−1}`. Its
/// minimum degree is `n − 2`, yet its graph-state distance is only 2.
pub fn complete_minus_edge(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "complete_minus_edge needs n ≥ 3, got {n}"
        )));
    }
    let adj = BitMatrix::from_fn(n, n, |i, j| {
        i != j && !(i == 0 && j == n - 1) && !(i == n - 1 && j == 0)
    });
    Graph::from_adjacency(adj, false)
}

/// Does the graph avoid `K₂,₂`, i.e. do all vertex pairs share at most one
/// neighbor? Decided from the adjacency rows by pairwise AND-popcount.
#[must_use]
pub fn is_k22_free(g: &Graph) -> bool {
    let a = g.adjacency();
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            let common: u32 = a
                .row_words(i)
                .iter()
                .zip(a.row_words(j))
                .map(|(x, y)| (x & y).count_ones())
                .sum();
            if common > 1 {
                return false;
            }
        }
    }
    true
}

/// Minimum vertex degree.
#[must_use]
pub fn min_degree(g: &Graph) -> usize {
    (0..g.n()).map(|i| g.degree(i)).min().unwrap_or(0)
}

/// The graph code of `G`: the `[2n, n]` code with parity check `[Iₙ : A_G]`.
/// Codewords are the pairs `(A_G·b, b)`, so its distance is
/// `min_b wt(b) + wt(A_G·b) ≥ ⌈δ/2⌉` for K₂,₂-free graphs, and because
/// `A_G` is symmetric the dual has the same distance.
#[must_use]
pub fn graph_code(g: &Graph) -> LinearCode {
    let h = BitMatrix::identity(g.n()).hconcat(g.adjacency());
    LinearCode::from_parity_check(h).expect("graph code parity check is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(g: &Graph) -> Vec<usize> {
        let mut d: Vec<usize> = (0..g.n()).map(|i| g.degree(i)).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn fano_polarity_graph() {
        let g = polarity_graph(2).unwrap();
        assert_eq!(g.n(), 7);
        // Three absolute points of degree p = 2, four of degree p + 1 = 3.
        assert_eq!(degrees(&g), vec![2, 2, 2, 3, 3, 3, 3]);
        assert!(is_k22_free(&g));
        assert_eq!(min_degree(&g), 2);
    }

    #[test]
    fn p3_polarity_graph() {
        let g = polarity_graph(3).unwrap();
        assert_eq!(g.n(), 13);
        // The conic x² + y² + z² = 0 over F₃ has 4 points: (1, ±1, ±1).
        assert_eq!(degrees(&g), vec![3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4]);
        assert!(is_k22_free(&g));
    }

    #[test]
    fn p5_polarity_graph() {
        let g = polarity_graph(5).unwrap();
        assert_eq!(g.n(), 31);
        assert!(is_k22_free(&g));
        assert_eq!(min_degree(&g), 5);
        let worst = (0..g.n()).map(|i| g.degree(i)).max().unwrap();
        assert_eq!(worst, 6);
    }

    #[test]
    fn polarity_rejects_composite_and_huge() {
        assert!(matches!(polarity_graph(4), Err(Error::NotPrime(4))));
        assert!(matches!(polarity_graph(1), Err(Error::NotPrime(1))));
        assert!(matches!(
            polarity_graph(65_537),
            Err(Error::SizeOverflow(_))
        ));
    }

    #[test]
    fn next_prime_examples() {
        assert_eq!(next_prime(0), 2);
        assert_eq!(next_prime(14), 17);
        assert_eq!(next_prime(17), 17);
    }

    #[test]
    fn complete_minus_edge_shape() {
        let g = complete_minus_edge(5).unwrap();
        assert_eq!(degrees(&g), vec![3, 3, 4, 4, 4]);
        assert!(!g.adjacency().get(0, 4));
        assert!(g.adjacency().get(0, 3));
        assert!(complete_minus_edge(2).is_err());
    }

    #[test]
    fn k22_detection() {
        // A 4-cycle is exactly a K₂,₂.
        let c4 = Graph::from_adjacency(
            BitMatrix::from_binary_rows(&["0101", "1010", "0101", "1010"]).unwrap(),
            false,
        )
        .unwrap();
        assert!(!is_k22_free(&c4));
        let path = Graph::from_adjacency(
            BitMatrix::from_binary_rows(&["010", "101", "010"]).unwrap(),
            false,
        )
        .unwrap();
        assert!(is_k22_free(&path));
    }

    #[test]
    fn adjacency_validation() {
        let bad = BitMatrix::from_binary_rows(&["01", "00"]).unwrap();
        assert!(matches!(
            Graph::from_adjacency(bad, false),
            Err(Error::Asymmetric(0, 1))
        ));
        let loopy = BitMatrix::from_binary_rows(&["10", "00"]).unwrap();
        assert!(matches!(
            Graph::from_adjacency(loopy.clone(), false),
            Err(Error::UnexpectedLoop(0))
        ));
        assert!(Graph::from_adjacency(loopy, true).is_ok());
        let rect = BitMatrix::zeros(2, 3);
        assert!(Graph::from_adjacency(rect, false).is_err());
    }

    #[test]
    fn graph_code_shape() {
        let g = polarity_graph(2).unwrap();
        let c = graph_code(&g);
        assert_eq!((c.n(), c.k()), (14, 7));
        // (A·b, b) is a codeword for b = e₀.
        let mut v = crate::gf2::BitVec::zeros(14);
        v.set(7, true);
        for j in g.adjacency().row(0).support() {
            v.set(j, true);
        }
        assert!(c.contains(&v).unwrap());
    }
}
