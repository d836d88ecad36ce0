//! From pairwise conic data to the graph G, its 150 components
//! ("decompositions"), the type functions and the strongly regular graphs
//! built on top of them.

mod alternative;
mod classify;

pub use alternative::*;
pub use classify::*;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{self, Graph, T7Labeling};
use crate::hermitian::CurveData;
use crate::projplane::{cubic_discriminant, pencil_coeffs, Matrix3};

/// Pairwise conic data: shared curve points, shared secants, transversality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairMatrices {
    n: usize,
    m0: Vec<u8>,
    m1: Vec<u8>,
    m2: Vec<u8>,
}

pub(crate) fn bitset(n: usize, members: &[usize]) -> Vec<u64> {
    let mut w = vec![0u64; n.div_ceil(64)];
    for &m in members {
        w[m / 64] |= 1 << (m % 64);
    }
    w
}

pub(crate) fn overlap(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

impl PairMatrices {
    pub fn compute(curve: &CurveData) -> Self {
        let f = curve.field();
        let n = curve.conics().len();
        let traces: Vec<Vec<u64>> =
            curve.conics().iter().map(|c| bitset(curve.points().len(), &c.trace)).collect();
        let secs: Vec<Vec<u64>> =
            curve.conics().iter().map(|c| bitset(curve.secants().len(), &c.secants)).collect();
        let mats: Vec<Matrix3> = curve.conics().iter().map(|c| c.conic.matrix(f)).collect();

        let rows: Vec<Vec<(u8, u8, u8)>> = (0..n)
            .into_par_iter()
            .map(|i| {
                (i + 1..n)
                    .map(|j| {
                        let disc = cubic_discriminant(f, &pencil_coeffs(f, &mats[i], &mats[j]));
                        (
                            overlap(&traces[i], &traces[j]) as u8,
                            overlap(&secs[i], &secs[j]) as u8,
                            !disc.is_zero() as u8,
                        )
                    })
                    .collect()
            })
            .collect();

        let mut m0 = vec![0u8; n * n];
        let mut m1 = vec![0u8; n * n];
        let mut m2 = vec![0u8; n * n];
        for (i, row) in rows.into_iter().enumerate() {
            m0[i * n + i] = curve.conics()[i].trace.len() as u8;
            m1[i * n + i] = curve.conics()[i].secants.len() as u8;
            for (off, (a, s, t)) in row.into_iter().enumerate() {
                let j = i + 1 + off;
                m0[i * n + j] = a;
                m0[j * n + i] = a;
                m1[i * n + j] = s;
                m1[j * n + i] = s;
                m2[i * n + j] = t;
                m2[j * n + i] = t;
            }
        }
        PairMatrices { n, m0, m1, m2 }
    }

    /// Rebuilds from raw row-major byte matrices.
    pub fn from_raw(n: usize, m0: Vec<u8>, m1: Vec<u8>, m2: Vec<u8>) -> Result<Self> {
        if [&m0, &m1, &m2].iter().any(|m| m.len() != n * n) {
            return Err(Error::InvalidInput(format!("matrices must have {} entries", n * n)));
        }
        Ok(PairMatrices { n, m0, m1, m2 })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// |Qᵢ ∩ Qⱼ ∩ Γ|.
    pub fn m0(&self, i: usize, j: usize) -> u8 {
        self.m0[i * self.n + j]
    }

    /// |S(Qᵢ) ∩ S(Qⱼ)|.
    pub fn m1(&self, i: usize, j: usize) -> u8 {
        self.m1[i * self.n + j]
    }

    /// Whether Qᵢ and Qⱼ meet in four distinct points.
    pub fn m2(&self, i: usize, j: usize) -> bool {
        self.m2[i * self.n + j] == 1
    }

    pub fn raw(&self) -> [&[u8]; 3] {
        [&self.m0, &self.m1, &self.m2]
    }
}

/// Type of a conic relative to a decomposition it does not belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConicType {
    #[serde(rename = "alpha")]
    Alpha,
    #[serde(rename = "beta")]
    Beta,
    #[serde(rename = "gamma")]
    Gamma,
}

impl fmt::Display for ConicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConicType::Alpha => "α",
            ConicType::Beta => "β",
            ConicType::Gamma => "γ",
        })
    }
}

/// Type of an ordered pair of distinct decompositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DecompType {
    #[serde(rename = "b21")]
    Beta21,
    #[serde(rename = "g21")]
    Gamma21,
    #[serde(rename = "a15g6")]
    Alpha15Gamma6,
    #[serde(rename = "a3g18")]
    Alpha3Gamma18,
}

impl DecompType {
    pub const ALL: [DecompType; 4] =
        [DecompType::Beta21, DecompType::Gamma21, DecompType::Alpha15Gamma6, DecompType::Alpha3Gamma18];
}

impl fmt::Display for DecompType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecompType::Beta21 => "β²¹",
            DecompType::Gamma21 => "γ²¹",
            DecompType::Alpha15Gamma6 => "α¹⁵γ⁶",
            DecompType::Alpha3Gamma18 => "α³γ¹⁸",
        })
    }
}

/// Edge iff the conics meet transversally and share exactly three secants.
pub fn build_g(m: &PairMatrices) -> Graph {
    Graph::from_fn(m.len(), |i, j| m.m2(i, j) && m.m1(i, j) == 3)
}

/// Classifies a conic against the conics of a decomposition it avoids, from
/// the tally of shared curve points.
pub fn type_t(m: &PairMatrices, conic: usize, decomposition: &[usize]) -> Result<ConicType> {
    if decomposition.contains(&conic) {
        return Err(Error::InvalidInput(format!("conic {conic} belongs to the decomposition")));
    }
    let mut tally = [0usize; 3];
    for &other in decomposition {
        match m.m0(conic, other) {
            a @ 0..=2 => tally[a as usize] += 1,
            a => {
                return Err(Error::TypeClassificationFailure(format!(
                    "conics {conic} and {other} share {a} curve points"
                )))
            }
        }
    }
    match tally {
        [18, 0, 3] => Ok(ConicType::Alpha),
        [16, 4, 1] => Ok(ConicType::Beta),
        [15, 6, 0] => Ok(ConicType::Gamma),
        [z, o, t] => Err(Error::TypeClassificationFailure(format!(
            "conic {conic}: {t} conics share two points, {o} share one, {z} share none"
        ))),
    }
}

/// Classifies a pair of decompositions from the conic types of the first
/// against the second.
pub fn type_big_t(types: impl IntoIterator<Item = ConicType>) -> Result<DecompType> {
    let mut tally = [0usize; 3];
    for t in types {
        tally[t as usize] += 1;
    }
    match tally {
        [0, 21, 0] => Ok(DecompType::Beta21),
        [0, 0, 21] => Ok(DecompType::Gamma21),
        [15, 0, 6] => Ok(DecompType::Alpha15Gamma6),
        [3, 0, 18] => Ok(DecompType::Alpha3Gamma18),
        [a, b, g] => Err(Error::TypeClassificationFailure(format!("profile α{a} β{b} γ{g}"))),
    }
}

/// The whole construction for q = 5, from curve data to the McLaughlin graph.
#[derive(Debug, Clone)]
pub struct Pipeline {
    curve: CurveData,
    matrices: PairMatrices,
    g: Graph,
    decompositions: Vec<Vec<usize>>,
    decomposition_of: Vec<usize>,
    labelings: Vec<T7Labeling>,
    conic_types: Vec<Option<ConicType>>,
    decomp_types: Vec<Option<DecompType>>,
    h: Graph,
    h_components: Vec<Vec<usize>>,
    h_prime: Graph,
    e1: Vec<(usize, usize)>,
    haemers: Graph,
    mclaughlin: Graph,
}

impl Pipeline {
    pub fn build(curve: CurveData) -> Result<Self> {
        let matrices = PairMatrices::compute(&curve);
        Pipeline::from_parts(curve, matrices)
    }

    pub fn from_parts(curve: CurveData, matrices: PairMatrices) -> Result<Self> {
        if curve.field().q() != 5 {
            return Err(Error::Config("the decomposition pipeline is specific to q = 5".into()));
        }
        if matrices.len() != curve.conics().len() {
            return Err(Error::InvalidInput("matrices do not match the conic list".into()));
        }
        let g = build_g(&matrices);
        let decompositions = graphs::components(&g);
        if decompositions.len() != 150 || decompositions.iter().any(|d| d.len() != 21) {
            return Err(Error::falsified(format!(
                "G has {} components of sizes {:?}",
                decompositions.len(),
                decompositions.iter().map(Vec::len).collect::<std::collections::BTreeSet<_>>()
            )));
        }
        let mut decomposition_of = vec![0; g.order()];
        for (d, members) in decompositions.iter().enumerate() {
            for &c in members {
                decomposition_of[c] = d;
            }
        }
        let labelings = decompositions
            .iter()
            .map(|d| graphs::t7_certificate(&g.induced(d)))
            .collect::<Result<Vec<_>>>()?;

        let nd = decompositions.len();
        let conic_types = (0..g.order())
            .into_par_iter()
            .map(|c| {
                (0..nd)
                    .map(|d| {
                        if decomposition_of[c] == d {
                            Ok(None)
                        } else {
                            type_t(&matrices, c, &decompositions[d]).map(Some)
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?
            .concat();

        let mut decomp_types = vec![None; nd * nd];
        for a in 0..nd {
            for b in 0..nd {
                if a != b {
                    let ts = decompositions[a].iter().map(|&c| conic_types[c * nd + b].expect("c ∉ b"));
                    decomp_types[a * nd + b] = Some(type_big_t(ts)?);
                }
            }
        }
        let big_t = |a: usize, b: usize| decomp_types[a * nd + b];

        let h = Graph::from_fn(nd, |a, b| big_t(a, b) == Some(DecompType::Alpha15Gamma6));
        let h_components = graphs::components(&h);
        if h_components.len() != 3 {
            return Err(Error::falsified(format!("H has {} components", h_components.len())));
        }
        let h_prime = Graph::from_fn(nd, |a, b| {
            matches!(big_t(a, b), Some(DecompType::Beta21 | DecompType::Alpha15Gamma6))
        });

        let e1: Vec<(usize, usize)> = h_components[0]
            .iter()
            .flat_map(|&a| h.neighbors(a).filter(move |&b| b > a).map(move |b| (a, b)))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        let haemers = Graph::from_fn(e1.len(), |x, y| edges_related(&h, e1[x], e1[y]));

        let outer: Vec<usize> = h_components[1].iter().chain(&h_components[2]).copied().collect();
        let ne = e1.len();
        let mclaughlin = Graph::from_fn(ne + outer.len(), |x, y| match (x < ne, y < ne) {
            (true, true) => haemers.has_edge(x, y),
            (true, false) => {
                let d = outer[y - ne];
                let (d1, d2) = e1[x];
                big_t(d1, d) == Some(DecompType::Alpha3Gamma18)
                    && big_t(d2, d) == Some(DecompType::Alpha3Gamma18)
            }
            (false, true) => unreachable!("from_fn visits x < y"),
            (false, false) => matches!(
                big_t(outer[x - ne], outer[y - ne]),
                Some(DecompType::Alpha15Gamma6 | DecompType::Alpha3Gamma18)
            ),
        });

        Ok(Pipeline {
            curve,
            matrices,
            g,
            decompositions,
            decomposition_of,
            labelings,
            conic_types,
            decomp_types,
            h,
            h_components,
            h_prime,
            e1,
            haemers,
            mclaughlin,
        })
    }

    pub fn curve(&self) -> &CurveData {
        &self.curve
    }

    pub fn matrices(&self) -> &PairMatrices {
        &self.matrices
    }

    pub fn g(&self) -> &Graph {
        &self.g
    }

    /// The components of G as sorted conic-index lists, ordered by least conic.
    pub fn decompositions(&self) -> &[Vec<usize>] {
        &self.decompositions
    }

    pub fn decomposition_of(&self, conic: usize) -> usize {
        self.decomposition_of[conic]
    }

    /// T(7) labeling of each decomposition, in local indices.
    pub fn labelings(&self) -> &[T7Labeling] {
        &self.labelings
    }

    /// The seven 6-cliques of a decomposition as global conic indices.
    pub fn cliques_of(&self, d: usize) -> Vec<Vec<usize>> {
        let members = &self.decompositions[d];
        self.labelings[d].cliques.iter().map(|k| k.iter().map(|&l| members[l]).collect()).collect()
    }

    /// t(Q, D); `None` when Q ∈ D.
    pub fn conic_type(&self, conic: usize, d: usize) -> Option<ConicType> {
        self.conic_types[conic * self.decompositions.len() + d]
    }

    /// T(D, D′); `None` on the diagonal.
    pub fn decomp_type(&self, a: usize, b: usize) -> Option<DecompType> {
        self.decomp_types[a * self.decompositions.len() + b]
    }

    pub fn h(&self) -> &Graph {
        &self.h
    }

    /// C₁, C₂, C₃ ordered by least member.
    pub fn h_components(&self) -> &[Vec<usize>] {
        &self.h_components
    }

    pub fn h_component_of(&self, d: usize) -> usize {
        self.h_components.iter().position(|c| c.contains(&d)).expect("components cover all vertices")
    }

    pub fn h_prime(&self) -> &Graph {
        &self.h_prime
    }

    /// H′ restricted to Cᵢ ∪ Cⱼ, vertices in the order Cᵢ then Cⱼ.
    pub fn h_prime_pair(&self, i: usize, j: usize) -> Graph {
        let vs: Vec<usize> = self.h_components[i].iter().chain(&self.h_components[j]).copied().collect();
        self.h_prime.induced(&vs)
    }

    /// H restricted to Cᵢ.
    pub fn hoffman_singleton(&self, i: usize) -> Graph {
        self.h.induced(&self.h_components[i])
    }

    /// g_k(D) = {D′ ∈ C_k : T(D, D′) = β²¹}.
    pub fn coclique_image(&self, k: usize, d: usize) -> Vec<usize> {
        self.h_components[k]
            .iter()
            .copied()
            .filter(|&e| self.decomp_type(d, e) == Some(DecompType::Beta21))
            .collect()
    }

    /// Edges of H|C₁ in lexicographic order.
    pub fn e1(&self) -> &[(usize, usize)] {
        &self.e1
    }

    pub fn haemers(&self) -> &Graph {
        &self.haemers
    }

    /// Vertices: E₁, then C₂, then C₃.
    pub fn mclaughlin(&self) -> &Graph {
        &self.mclaughlin
    }

    /// Serializable summary: decompositions, H components and the type matrix.
    pub fn summary(&self) -> PipelineSummary {
        let nd = self.decompositions.len();
        PipelineSummary {
            decompositions: self.decompositions.clone(),
            h_components: self.h_components.clone(),
            type_matrix: (0..nd)
                .map(|a| (0..nd).map(|b| self.decomp_type(a, b)).collect())
                .collect(),
            e1: self.e1.clone(),
        }
    }
}

/// Disjoint edges joined by an edge of `h`.
fn edges_related(h: &Graph, e: (usize, usize), f: (usize, usize)) -> bool {
    let disjoint = e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1;
    disjoint && [e.0, e.1].iter().any(|&u| h.has_edge(u, f.0) || h.has_edge(u, f.1))
}

#[derive(Debug, Clone, Serialize)]
pub struct PipelineSummary {
    pub decompositions: Vec<Vec<usize>>,
    pub h_components: Vec<Vec<usize>>,
    pub type_matrix: Vec<Vec<Option<DecompType>>>,
    pub e1: Vec<(usize, usize)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_t_profiles() {
        use ConicType::*;
        let rep = |a: usize, g: usize| std::iter::repeat_n(Alpha, a).chain(std::iter::repeat_n(Gamma, g));
        assert_eq!(type_big_t(rep(15, 6)), Ok(DecompType::Alpha15Gamma6));
        assert_eq!(type_big_t(rep(3, 18)), Ok(DecompType::Alpha3Gamma18));
        assert_eq!(type_big_t(rep(0, 21)), Ok(DecompType::Gamma21));
        assert_eq!(type_big_t(std::iter::repeat_n(Beta, 21)), Ok(DecompType::Beta21));
        assert!(type_big_t(rep(4, 17)).is_err());
    }

    #[test]
    fn edge_relation() {
        // path 0-1-2-3: {0,1} and {2,3} are joined by {1,2}
        let h = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(edges_related(&h, (0, 1), (2, 3)));
        assert!(!edges_related(&h, (0, 1), (1, 2)));
        assert!(!edges_related(&h, (0, 1), (3, 4)));
    }
}
