//! Other descriptions of the edges of H and H′: partner 6-cliques, secant
//! unions of decompositions and doubly tangential conic pairs.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};

use super::{bitset, overlap, DecompType, Pipeline};

/// The 6-cliques of G and their partners: the disjoint clique covering the
/// same 36 curve points.
#[derive(Debug, Clone, Serialize)]
pub struct CliquePairing {
    /// All 6-cliques as sorted conic lists, grouped by decomposition.
    pub cliques: Vec<Vec<usize>>,
    pub decomposition: Vec<usize>,
    pub union_size: Vec<usize>,
    pub partner: Vec<usize>,
}

impl CliquePairing {
    /// Each partner pair once, as (smaller clique index, larger).
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.cliques.len())
            .filter(|&k| k < self.partner[k])
            .map(|k| (k, self.partner[k]))
            .collect()
    }

    /// The decomposition pairs {D(K), D(K′)} of all partner pairs.
    pub fn decomposition_pairs(&self) -> BTreeSet<(usize, usize)> {
        self.pairs()
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (self.decomposition[a], self.decomposition[b]);
                (x.min(y), x.max(y))
            })
            .collect()
    }

    pub fn clique_containing(&self, conics: &[usize]) -> Vec<usize> {
        (0..self.cliques.len()).filter(|&k| conics.iter().all(|c| self.cliques[k].contains(c))).collect()
    }
}

pub fn six_clique_pairs(p: &Pipeline) -> Result<CliquePairing> {
    let npts = p.curve().points().len();
    let mut cliques = Vec::new();
    let mut decomposition = Vec::new();
    for d in 0..p.decompositions().len() {
        for k in p.cliques_of(d) {
            cliques.push(k);
            decomposition.push(d);
        }
    }
    let unions: Vec<Vec<u64>> = cliques
        .iter()
        .map(|k| {
            let pts: Vec<usize> =
                k.iter().flat_map(|&c| p.curve().conics()[c].trace.iter().copied()).collect();
            bitset(npts, &pts)
        })
        .collect();
    let union_size = unions.iter().map(|u| overlap(u, u)).collect();
    let mut by_union: HashMap<&[u64], Vec<usize>> = HashMap::new();
    for (k, u) in unions.iter().enumerate() {
        by_union.entry(u).or_default().push(k);
    }
    let partner = (0..cliques.len())
        .map(|k| {
            let disjoint: Vec<usize> = by_union[unions[k].as_slice()]
                .iter()
                .copied()
                .filter(|&o| cliques[o].iter().all(|c| !cliques[k].contains(c)))
                .collect();
            match disjoint[..] {
                [o] => Ok(o),
                _ => Err(Error::falsified(format!(
                    "clique {k} has {} disjoint cliques with the same point union",
                    disjoint.len()
                ))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CliquePairing { cliques, decomposition, union_size, partner })
}

/// S_D: the union of the secant sets of the conics of D, as a bitset.
pub fn secant_union(p: &Pipeline, d: usize) -> Vec<u64> {
    let secs: Vec<usize> =
        p.decompositions()[d].iter().flat_map(|&c| p.curve().conics()[c].secants.iter().copied()).collect();
    bitset(p.curve().secants().len(), &secs)
}

/// |S_D ∩ S_D′|.
pub fn secant_union_profile(p: &Pipeline, d: usize, e: usize) -> usize {
    overlap(&secant_union(p, d), &secant_union(p, e))
}

/// Whether the secants in S_D ∩ S_D′ have pairwise disjoint traces covering
/// every curve point.
pub fn secant_traces_partition_points(p: &Pipeline, d: usize, e: usize) -> bool {
    let (a, b) = (secant_union(p, d), secant_union(p, e));
    let common: Vec<usize> = crate::graphs::bits(&a)
        .filter(|&s| b[s / 64] >> (s % 64) & 1 == 1)
        .collect();
    let mut covered = vec![0u8; p.curve().points().len()];
    for s in common {
        for &pt in &p.curve().secants()[s].trace {
            covered[pt] += 1;
        }
    }
    covered.iter().all(|&c| c == 1)
}

/// R(Q): conics sharing exactly two curve points and one secant with Q.
pub fn doubly_tangential(p: &Pipeline, conic: usize) -> Vec<usize> {
    let m = p.matrices();
    (0..m.len()).filter(|&o| o != conic && m.m0(conic, o) == 2 && m.m1(conic, o) == 1).collect()
}

/// R_D: the union of R(Q) over Q ∈ D, sorted.
pub fn doubly_tangential_of(p: &Pipeline, d: usize) -> Vec<usize> {
    let set: BTreeSet<usize> = p.decompositions()[d].iter().flat_map(|&c| doubly_tangential(p, c)).collect();
    set.into_iter().collect()
}

/// For each conic, the H-component i with the conic in C̃ᵢ.
pub fn tilde_component(p: &Pipeline) -> Vec<usize> {
    (0..p.matrices().len()).map(|c| p.h_component_of(p.decomposition_of(c))).collect()
}

/// f_{D,D′}: for each conic of D (in order), the unique conic of D′ sharing two
/// curve points with it.
pub fn partner_map(p: &Pipeline, d: usize, e: usize) -> Result<Vec<usize>> {
    let m = p.matrices();
    let image = p.decompositions()[d]
        .iter()
        .map(|&c| {
            let hits: Vec<usize> = p.decompositions()[e].iter().copied().filter(|&o| m.m0(c, o) == 2).collect();
            match hits[..] {
                [o] => Ok(o),
                _ => Err(Error::falsified(format!("conic {c} has {} two-point partners in {e}", hits.len()))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let distinct: BTreeSet<usize> = image.iter().copied().collect();
    if distinct.len() != image.len() {
        return Err(Error::falsified(format!("partner map from {d} to {e} is not injective")));
    }
    Ok(image)
}

/// Checks that (Q, D′) ↦ f_{D,D′}(Q) over D′ ∈ N′(D) ∩ Cⱼ is a bijection onto
/// R_D ∩ C̃ⱼ, and that every f_{D,D′}(Q) lies in R(Q).
pub fn partner_blocks_partition(p: &Pipeline, d: usize, j: usize) -> Result<bool> {
    let tilde = tilde_component(p);
    let target: BTreeSet<usize> = doubly_tangential_of(p, d).into_iter().filter(|&c| tilde[c] == j).collect();
    let mut image = Vec::new();
    for &e in &p.h_components()[j] {
        if !p.h_prime().has_edge(d, e) {
            continue;
        }
        if p.decomp_type(d, e) != Some(DecompType::Beta21) {
            return Ok(false);
        }
        let f = partner_map(p, d, e)?;
        for (&q, &fq) in p.decompositions()[d].iter().zip(&f) {
            if !doubly_tangential(p, q).contains(&fq) {
                return Ok(false);
            }
        }
        image.extend(f);
    }
    let distinct: BTreeSet<usize> = image.iter().copied().collect();
    Ok(distinct.len() == image.len() && distinct == target)
}
