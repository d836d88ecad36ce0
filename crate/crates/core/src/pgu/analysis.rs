//! Group-theoretic descriptions of G, H and T, checked against the
//! geometric pipeline.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{components, srg_check, Graph, SrgCertificate};
use crate::projplane::Conic;
use crate::towers::{intersection_classes, IntersectionClass};
use crate::towers::{DecompType, Pipeline};

use super::{a7_generator_matrices, Elem, Pgu, SmallGroup, Subgroup};

/// A permutation of the seven T(7) labels.
pub type LabelPerm = [u8; 7];

fn compose7(a: &LabelPerm, b: &LabelPerm) -> LabelPerm {
    std::array::from_fn(|i| a[b[i] as usize])
}

fn inverse7(a: &LabelPerm) -> LabelPerm {
    let mut out = [0u8; 7];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u8;
    }
    out
}

pub fn is_even(p: &LabelPerm) -> bool {
    let mut seen = [false; 7];
    let mut transpositions = 0;
    for s in 0..7 {
        let mut x = s;
        let mut len = 0;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 0
}

/// The label permutation (a b)(c d) on 0-based labels.
pub fn double_transposition(a: u8, b: u8, c: u8, d: u8) -> LabelPerm {
    let mut p: LabelPerm = std::array::from_fn(|i| i as u8);
    p.swap(a as usize, b as usize);
    p.swap(c as usize, d as usize);
    p
}

/// Stabilizers of every conic and decomposition, shared by the checks below.
pub struct GroupAnalysis<'a> {
    pipeline: &'a Pipeline,
    group: &'a Pgu,
    base_conic: usize,
    conic_transversal: Vec<Elem>,
    conic_stabs: Vec<Subgroup>,
    decomp_stabs: Vec<Subgroup>,
}

impl<'a> GroupAnalysis<'a> {
    pub fn new(pipeline: &'a Pipeline, group: &'a Pgu) -> Result<Self> {
        let curve = pipeline.curve();
        let f = curve.field();
        let base_conic = curve
            .conic_index(&Conic::fermat(f))
            .ok_or_else(|| Error::falsified("x^2 + y^2 + z^2 is not totally tangent"))?;
        let conic_transversal = group.conic_transversal(curve, base_conic)?;
        let base_stab = group.stabilizer_of_conic(curve, base_conic);
        let conic_stabs: Vec<Subgroup> =
            conic_transversal.iter().map(|&t| group.conjugate_subgroup(t, &base_stab)).collect();
        let d0 = pipeline.decomposition_of(base_conic);
        let base_dstab = group.stabilizer_of_conic_set(curve, &pipeline.decompositions()[d0]);
        let decomp_stabs = pipeline
            .decompositions()
            .iter()
            .map(|members| group.conjugate_subgroup(conic_transversal[members[0]], &base_dstab))
            .collect();
        let analysis = GroupAnalysis { pipeline, group, base_conic, conic_transversal, conic_stabs, decomp_stabs };
        analysis.check_invariance()?;
        Ok(analysis)
    }

    pub fn pipeline(&self) -> &Pipeline {
        self.pipeline
    }

    pub fn group(&self) -> &Pgu {
        self.group
    }

    /// Index of the conic x² + y² + z² = 0.
    pub fn base_conic(&self) -> usize {
        self.base_conic
    }

    pub fn conic_stabilizer(&self, conic: usize) -> &Subgroup {
        &self.conic_stabs[conic]
    }

    pub fn decomposition_stabilizer(&self, d: usize) -> &Subgroup {
        &self.decomp_stabs[d]
    }

    /// An element mapping the base conic to `conic`.
    pub fn transversal(&self, conic: usize) -> Elem {
        self.conic_transversal[conic]
    }

    /// Image of a decomposition, checking that all 21 conics land in one.
    pub fn decomposition_image(&self, e: Elem, d: usize) -> Result<usize> {
        let p = self.pipeline;
        let members = &p.decompositions()[d];
        let target = p.decomposition_of(self.group.conic_image(p.curve(), e, members[0]));
        if members.iter().any(|&c| p.decomposition_of(self.group.conic_image(p.curve(), e, c)) != target) {
            return Err(Error::falsified(format!("element {e} splits decomposition {d}")));
        }
        Ok(target)
    }

    fn decomposition_image_fast(&self, e: Elem, d: usize) -> usize {
        let p = self.pipeline;
        p.decomposition_of(self.group.conic_image(p.curve(), e, p.decompositions()[d][0]))
    }

    /// G is preserved by a generating set of the group, so the action on
    /// decompositions is well defined.
    fn check_invariance(&self) -> Result<()> {
        let curve = self.pipeline.curve();
        let gens = generating_set(self.group);
        for &s in &gens {
            let img: Vec<usize> = (0..curve.conics().len()).map(|c| self.group.conic_image(curve, s, c)).collect();
            for (u, v) in self.pipeline.g().edges() {
                if !self.pipeline.g().has_edge(img[u], img[v]) {
                    return Err(Error::falsified("G is not invariant under the group"));
                }
            }
        }
        Ok(())
    }

    /// Whether stab(Q) ∩ stab(Q′) ≅ A₄.
    pub fn edge_rule_s5(&self, a: usize, b: usize) -> bool {
        let meet = self.conic_stabs[a].intersect(&self.conic_stabs[b]);
        meet.order() == 12 && self.group.identify(&meet) == Some(SmallGroup::A4)
    }

    /// The A₄ rule against adjacency in G over all unordered pairs.
    pub fn edge_rule_agreement(&self) -> EdgeRuleReport {
        let n = self.conic_stabs.len();
        let g = self.pipeline.g();
        let per_row: Vec<(usize, usize, Vec<(usize, usize)>)> = (0..n)
            .into_par_iter()
            .map(|a| {
                let mut a4 = 0;
                let mut twelve = 0;
                let mut bad = Vec::new();
                for b in a + 1..n {
                    let order = self.conic_stabs[a].intersection_order(&self.conic_stabs[b]);
                    let rule = order == 12 && self.edge_rule_s5(a, b);
                    twelve += usize::from(order == 12);
                    a4 += usize::from(rule);
                    if rule != g.has_edge(a, b) {
                        bad.push((a, b));
                    }
                }
                (a4, twelve, bad)
            })
            .collect();
        EdgeRuleReport {
            pairs: n * (n - 1) / 2,
            order_twelve_pairs: per_row.iter().map(|r| r.1).sum(),
            a4_pairs: per_row.iter().map(|r| r.0).sum(),
            adjacent_pairs: g.edge_count(),
            disagreements: per_row.into_iter().flat_map(|r| r.2).collect(),
        }
    }

    /// T(D, D′) read off from |stab(D) ∩ stab(D′)|.
    pub fn classify_t_by_group(&self, d: usize, e: usize) -> Result<DecompType> {
        type_from_order(self.decomp_stabs[d].intersection_order(&self.decomp_stabs[e]))
    }

    pub fn type_agreement(&self) -> Result<TypeAgreementReport> {
        let nd = self.decomp_stabs.len();
        let mut disagreements = Vec::new();
        let mut row_profiles = BTreeSet::new();
        for d in 0..nd {
            let mut profile = BTreeMap::new();
            for e in (0..nd).filter(|&e| e != d) {
                let order = self.decomp_stabs[d].intersection_order(&self.decomp_stabs[e]);
                *profile.entry(order).or_insert(0usize) += 1;
                if type_from_order(order).ok() != self.pipeline.decomp_type(d, e) {
                    disagreements.push((d, e));
                }
            }
            row_profiles.insert(profile.into_iter().collect::<Vec<_>>());
        }
        Ok(TypeAgreementReport { disagreements, row_profiles: row_profiles.into_iter().collect() })
    }

    /// The permutation of T(7) labels induced by `e` on decomposition `d`,
    /// for a labeling given as conic ↦ (i, j).
    pub fn label_permutation(&self, labels: &HashMap<usize, (u8, u8)>, e: Elem) -> Result<LabelPerm> {
        let curve = self.pipeline.curve();
        let mut perm = [u8::MAX; 7];
        for (k, slot) in perm.iter_mut().enumerate() {
            let mut common: Option<BTreeSet<u8>> = None;
            for (&c, &(i, j)) in labels {
                if i as usize != k && j as usize != k {
                    continue;
                }
                let (a, b) = *labels
                    .get(&self.group.conic_image(curve, e, c))
                    .ok_or_else(|| Error::falsified("element does not preserve the labeled decomposition"))?;
                let here: BTreeSet<u8> = [a, b].into();
                common = Some(match common {
                    None => here,
                    Some(s) => s.intersection(&here).copied().collect(),
                });
            }
            match common.map(|s| s.into_iter().collect::<Vec<_>>()).as_deref() {
                Some([x]) => *slot = *x,
                _ => return Err(Error::falsified(format!("label {k} has no well-defined image"))),
            }
        }
        if perm.iter().collect::<BTreeSet<_>>().len() != 7 {
            return Err(Error::falsified("label images are not a permutation"));
        }
        Ok(perm)
    }

    /// Conic ↦ label pair from the T(7) certificate of `d`.
    pub fn certificate_labels(&self, d: usize) -> HashMap<usize, (u8, u8)> {
        let members = &self.pipeline.decompositions()[d];
        members.iter().copied().zip(self.pipeline.labelings()[d].labels.iter().copied()).collect()
    }

    /// stab(D) → S₇ through the clique labels.
    pub fn a7_identification(&self, d: usize) -> Result<A7Identification> {
        let labels = self.certificate_labels(d);
        let elements = self.decomp_stabs[d].elements().to_vec();
        let images = elements
            .iter()
            .map(|&e| self.label_permutation(&labels, e))
            .collect::<Result<Vec<_>>>()?;
        let identity: LabelPerm = std::array::from_fn(|i| i as u8);
        let distinct: BTreeSet<LabelPerm> = images.iter().copied().collect();
        // homomorphism on a sample of pairs: image(xy) = image(x) image(y)
        let step = elements.len() / 50 + 1;
        let homomorphic = elements.iter().zip(&images).step_by(step).all(|(&x, ix)| {
            elements.iter().zip(&images).step_by(step).all(|(&y, iy)| {
                let xy = self.group.mul(x, y);
                let pos = elements.binary_search(&xy).expect("subgroup is closed");
                images[pos] == compose7(ix, iy)
            })
        });
        Ok(A7Identification {
            decomposition: d,
            order: elements.len(),
            image_size: distinct.len(),
            injective: distinct.len() == elements.len(),
            all_even: images.iter().all(is_even),
            kernel: elements.iter().zip(&images).filter(|(_, p)| **p == identity).count(),
            homomorphic,
            elements,
            images,
        })
    }

    /// Splits N_D = {D′ : T(D, D′) = β²¹} by A₇-conjugacy of the image of
    /// stab(D) ∩ stab(D′).
    pub fn sigma_b_split(&self, d: usize) -> Result<SigmaBSplit> {
        let ident = self.a7_identification(d)?;
        let image_of: HashMap<Elem, LabelPerm> = ident.elements.iter().copied().zip(ident.images.iter().copied()).collect();
        let neighbours: Vec<usize> = (0..self.decomp_stabs.len())
            .filter(|&e| e != d && self.pipeline.decomp_type(d, e) == Some(DecompType::Beta21))
            .collect();
        let image_subgroup = |e: usize| -> BTreeSet<LabelPerm> {
            self.decomp_stabs[d].intersect(&self.decomp_stabs[e]).elements().iter().map(|x| image_of[x]).collect()
        };
        let conj = |s: &LabelPerm, h: &BTreeSet<LabelPerm>| -> BTreeSet<LabelPerm> {
            let si = inverse7(s);
            h.iter().map(|x| compose7(&compose7(s, x), &si)).collect()
        };
        let conjugate_in_a7 =
            |h: &BTreeSet<LabelPerm>, k: &BTreeSet<LabelPerm>| ident.images.iter().any(|s| &conj(s, h) == k);

        let mut reps: Vec<BTreeSet<LabelPerm>> = Vec::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &e in &neighbours {
            let h = image_subgroup(e);
            match reps.iter().position(|r| conjugate_in_a7(r, &h)) {
                Some(i) => classes[i].push(e),
                None => {
                    reps.push(h);
                    classes.push(vec![e]);
                }
            }
        }
        if classes.len() != 2 || classes.iter().any(|c| c.len() != 15) {
            return Err(Error::falsified(format!(
                "β²¹ neighbours of {d} split into classes of sizes {:?}",
                classes.iter().map(Vec::len).collect::<Vec<_>>()
            )));
        }
        let geometric: BTreeSet<BTreeSet<usize>> = {
            let mut by_comp: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
            for &e in &neighbours {
                by_comp.entry(self.pipeline.h_component_of(e)).or_default().insert(e);
            }
            by_comp.into_values().collect()
        };
        let algebraic: BTreeSet<BTreeSet<usize>> = classes.iter().map(|c| c.iter().copied().collect()).collect();
        let mut swap: LabelPerm = std::array::from_fn(|i| i as u8);
        swap.swap(0, 1);
        let fused = conjugate_in_a7(&reps[1], &conj(&swap, &reps[0]));
        Ok(SigmaBSplit {
            decomposition: d,
            class_sizes: classes.iter().map(Vec::len).collect(),
            classes,
            matches_components: algebraic == geometric,
            fused_by_odd_permutation: fused,
        })
    }

    /// Orbits of stab(Q₁) on the other conics, grouped by intersection class
    /// and the isomorphism type of the pair stabilizer.
    pub fn pair_stabilizer_table(&self) -> Result<PairStabilizerTable> {
        let p = self.pipeline;
        let curve = p.curve();
        let base = self.base_conic;
        let classes = intersection_classes(curve, p.matrices(), base)?;
        let stab = &self.conic_stabs[base];
        let mut orbit_of = vec![usize::MAX; curve.conics().len()];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for c in 0..curve.conics().len() {
            if orbit_of[c] != usize::MAX {
                continue;
            }
            let members: BTreeSet<usize> =
                stab.elements().iter().map(|&e| self.group.conic_image(curve, e, c)).collect();
            for &m in &members {
                orbit_of[m] = orbits.len();
            }
            orbits.push(members.into_iter().collect());
        }
        let mut rows: BTreeMap<(Option<IntersectionClass>, SmallGroup, usize), (usize, Vec<usize>)> = BTreeMap::new();
        for orbit in &orbits {
            let rep = orbit[0];
            let meet = stab.intersect(&self.conic_stabs[rep]);
            let kind = self
                .group
                .identify(&meet)
                .ok_or_else(|| Error::TypeClassificationFailure(format!("pair stabilizer of {rep}")))?;
            let class = classes[rep];
            if orbit.iter().any(|&c| classes[c] != class) {
                return Err(Error::falsified("an orbit mixes intersection classes"));
            }
            let row = rows.entry((class, kind, meet.order())).or_default();
            row.0 += orbit.len();
            row.1.push(rep);
        }
        let rows: Vec<PairStabilizerRow> = rows
            .into_iter()
            .map(|((class, stabilizer, stab_order), (count, representatives))| PairStabilizerRow {
                class,
                stabilizer,
                stabilizer_order: stab_order,
                count,
                orbits: representatives.len(),
                orbit_rule_holds: representatives.len() * stab.order() == count * stab_order,
                representatives,
            })
            .collect();
        Ok(PairStabilizerTable { orbit_count: orbits.len(), rows })
    }

    /// |⟨stab(Q₁), stab(Q)⟩| for one Q per row of the pair-stabilizer table and orbit.
    pub fn join_orders(&self, table: &PairStabilizerTable) -> Vec<JoinOrder> {
        let base = self.base_conic;
        let base_gens = self.group.generators_of(&self.conic_stabs[base]);
        table
            .rows
            .iter()
            .flat_map(|row| row.representatives.iter().map(move |&q| (row, q)))
            .filter(|&(_, q)| q != base)
            .map(|(row, q)| {
                let t = self.conic_transversal[q];
                let mut gens = base_gens.clone();
                gens.extend(base_gens.iter().map(|&g| self.group.conjugate(t, g)));
                let order = self.group.generated_order(&gens);
                JoinOrder {
                    conic: q,
                    class: row.class,
                    stabilizer: row.stabilizer,
                    same_component: self.pipeline.decomposition_of(q) == self.pipeline.decomposition_of(base),
                    order,
                }
            })
            .collect()
    }

    /// The kernel of the action on {C₁, C₂, C₃} and its comparison with
    /// the image of SU₃.
    pub fn psu_check(&self) -> Result<PsuReport> {
        let comps = self.pipeline.h_components();
        let reps: Vec<usize> = comps.iter().map(|c| c[0]).collect();
        let kernel: Vec<Elem> = (0..self.group.order() as Elem)
            .filter(|&e| {
                reps.iter()
                    .enumerate()
                    .all(|(j, &d)| self.pipeline.h_component_of(self.decomposition_image_fast(e, d)) == j)
            })
            .collect();
        let special: Vec<Elem> = (0..self.group.order() as Elem).filter(|&e| self.group.is_special(e)).collect();
        let orbits_are_components = reps.iter().zip(comps).all(|(&d, comp)| {
            let orbit: BTreeSet<usize> = kernel.iter().map(|&e| self.decomposition_image_fast(e, d)).collect();
            orbit.into_iter().collect::<Vec<_>>() == *comp
        });
        Ok(PsuReport {
            kernel_order: kernel.len(),
            index: self.group.order() / kernel.len().max(1),
            equals_special_subgroup: kernel == special,
            orbits_are_components,
        })
    }

    /// Orbit sizes and stabilizer orders for a point, the base conic and its
    /// decomposition, plus kernels of the conic and decomposition actions.
    pub fn orbit_stabilizer(&self) -> OrbitStabilizer {
        let g = self.group;
        let curve = self.pipeline.curve();
        let all = 0..g.order() as Elem;
        let point_orbit: BTreeSet<usize> = all.clone().map(|e| g.image(e, 0)).collect();
        let d0 = self.pipeline.decomposition_of(self.base_conic);
        let decomp_orbit: BTreeSet<usize> = self.conic_transversal.iter().map(|&t| self.decomposition_image_fast(t, d0)).collect();
        let nconics = curve.conics().len();
        let conic_kernel = all
            .clone()
            .filter(|&e| (0..nconics).all(|c| g.conic_image(curve, e, c) == c))
            .count();
        let decomp_kernel = all
            .filter(|&e| (0..self.decomp_stabs.len()).all(|d| self.decomposition_image_fast(e, d) == d))
            .count();
        OrbitStabilizer {
            group_order: g.order(),
            point: (point_orbit.len(), g.stabilizer_of_point(0).order()),
            conic: (self.conic_transversal.len(), self.conic_stabs[self.base_conic].order()),
            decomposition: (decomp_orbit.len(), self.decomp_stabs[d0].order()),
            conic_kernel,
            decomposition_kernel: decomp_kernel,
        }
    }

    /// Whether the elements with ᵗM·M scalar are exactly stab(x² + y² + z² = 0).
    pub fn orthogonal_is_base_stabilizer(&self) -> bool {
        let f = self.group.field();
        let orthogonal: Vec<Elem> = (0..self.group.order() as Elem)
            .filter(|&e| {
                let m = self.group.matrix(e);
                let mtm = super::multiply_matrices(f, &transpose(&m), &m);
                let d = mtm[0][0];
                (0..9).all(|i| mtm[i / 3][i % 3] == if i % 4 == 0 { d } else { crate::gf::Fq2::ZERO })
            })
            .collect();
        orthogonal == self.conic_stabs[self.base_conic].elements()
    }

    /// Γ = ⟨g₂, …, g₆⟩, its conjugacy class 𝒱 and the graphs on 𝒱 given by
    /// intersection orders.
    pub fn fixed_a7_conjugates(&self) -> Result<ConjugateReport> {
        let g = self.group;
        let f = g.field();
        let gens = a7_generator_matrices(f)
            .iter()
            .map(|m| g.element_from_matrix(m))
            .collect::<Result<Vec<_>>>()?;
        let gamma = g.generated(&gens);
        let pgu_gens = generating_set(g);
        let mut conjugates = vec![gamma.clone()];
        let mut seen: BTreeSet<Subgroup> = [gamma.clone()].into();
        let mut head = 0;
        while head < conjugates.len() {
            let h = conjugates[head].clone();
            head += 1;
            for &s in &pgu_gens {
                let k = g.conjugate_subgroup(s, &h);
                if seen.insert(k.clone()) {
                    conjugates.push(k);
                }
            }
        }
        conjugates.sort();
        let n = conjugates.len();
        let mut orders = vec![0usize; n * n];
        for a in 0..n {
            for b in a + 1..n {
                let o = conjugates[a].intersection_order(&conjugates[b]);
                orders[a * n + b] = o;
                orders[b * n + a] = o;
            }
        }
        let mut order_counts: BTreeMap<usize, usize> = BTreeMap::new();
        for a in 0..n {
            for b in a + 1..n {
                *order_counts.entry(orders[a * n + b]).or_insert(0) += 1;
            }
        }
        let e360 = Graph::from_fn(n, |a, b| orders[a * n + b] == 360);
        let comps = components(&e360);
        let component_srgs = comps.iter().map(|c| srg_check(&e360.induced(c)).ok()).collect();
        let e360_168 = Graph::from_fn(n, |a, b| matches!(orders[a * n + b], 360 | 168));
        let mut pair_srgs = Vec::new();
        for i in 0..comps.len() {
            for j in i + 1..comps.len() {
                let vs: Vec<usize> = comps[i].iter().chain(&comps[j]).copied().collect();
                pair_srgs.push(srg_check(&e360_168.induced(&vs)).ok());
            }
        }
        let stabs: BTreeSet<&Subgroup> = self.decomp_stabs.iter().collect();
        let conjugates_are_decomposition_stabilizers =
            conjugates.len() == stabs.len() && conjugates.iter().all(|c| stabs.contains(c));

        // Δ = stab(x²+y²+z²); every γ⁻¹Δγ is the stabilizer of another conic
        let delta = &self.conic_stabs[self.base_conic];
        let delta_gens = g.generators_of(delta);
        let mut a4_partners = 0;
        let mut a4_partners_generating_gamma = 0;
        for q in 0..self.conic_stabs.len() {
            if q == self.base_conic || !self.edge_rule_s5(self.base_conic, q) {
                continue;
            }
            a4_partners += 1;
            let t = self.conic_transversal[q];
            let mut both = delta_gens.clone();
            both.extend(delta_gens.iter().map(|&x| g.conjugate(t, x)));
            if g.generated(&both) == gamma {
                a4_partners_generating_gamma += 1;
            }
        }
        Ok(ConjugateReport {
            gamma_order: gamma.order(),
            gamma_type: g.identify(&gamma),
            conjugate_count: n,
            intersection_orders: order_counts,
            e360_component_sizes: comps.iter().map(Vec::len).collect(),
            e360_component_srgs: component_srgs,
            e360_e168_pair_srgs: pair_srgs,
            conjugates_are_decomposition_stabilizers,
            a4_partners,
            a4_partners_generating_gamma,
        })
    }
}

fn transpose(m: &crate::projplane::Matrix3) -> crate::projplane::Matrix3 {
    std::array::from_fn(|r| std::array::from_fn(|c| m[c][r]))
}

/// A small generating set of the whole group, found greedily along a fixed
/// stride through the element list.
pub fn generating_set(g: &Pgu) -> Vec<Elem> {
    let n = g.order() as u64;
    let mut gens = Vec::new();
    let mut span = 1;
    let mut k = 1u64;
    while span < g.order() {
        let candidate = ((k * 7919) % n) as Elem;
        k += 1;
        let mut trial = gens.clone();
        trial.push(candidate);
        let order = g.generated_order(&trial);
        if order > span {
            gens = trial;
            span = order;
        }
    }
    gens
}

/// Intersection order of two decomposition stabilizers ↦ T.
pub fn type_from_order(order: usize) -> Result<DecompType> {
    match order {
        360 => Ok(DecompType::Alpha15Gamma6),
        168 => Ok(DecompType::Beta21),
        72 => Ok(DecompType::Alpha3Gamma18),
        60 => Ok(DecompType::Gamma21),
        _ => Err(Error::falsified(format!("unexpected stabilizer intersection order {order}"))),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeRuleReport {
    pub pairs: usize,
    pub order_twelve_pairs: usize,
    pub a4_pairs: usize,
    pub adjacent_pairs: usize,
    pub disagreements: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TypeAgreementReport {
    pub disagreements: Vec<(usize, usize)>,
    /// Distinct per-row histograms of intersection orders.
    pub row_profiles: Vec<Vec<(usize, usize)>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct A7Identification {
    pub decomposition: usize,
    pub order: usize,
    pub image_size: usize,
    pub injective: bool,
    pub all_even: bool,
    pub kernel: usize,
    pub homomorphic: bool,
    #[serde(skip)]
    pub elements: Vec<Elem>,
    #[serde(skip)]
    pub images: Vec<LabelPerm>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SigmaBSplit {
    pub decomposition: usize,
    pub class_sizes: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    pub matches_components: bool,
    pub fused_by_odd_permutation: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairStabilizerRow {
    /// `None` for the base conic itself.
    pub class: Option<IntersectionClass>,
    pub stabilizer: SmallGroup,
    pub stabilizer_order: usize,
    /// N: number of conics in the row.
    pub count: usize,
    pub orbits: usize,
    /// orbits · 120 = N · |stab(Q₁, Q)|
    pub orbit_rule_holds: bool,
    pub representatives: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairStabilizerTable {
    pub orbit_count: usize,
    pub rows: Vec<PairStabilizerRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct JoinOrder {
    pub conic: usize,
    pub class: Option<IntersectionClass>,
    pub stabilizer: SmallGroup,
    pub same_component: bool,
    pub order: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct PsuReport {
    pub kernel_order: usize,
    pub index: usize,
    pub equals_special_subgroup: bool,
    pub orbits_are_components: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitStabilizer {
    pub group_order: usize,
    /// (orbit size, stabilizer order)
    pub point: (usize, usize),
    pub conic: (usize, usize),
    pub decomposition: (usize, usize),
    pub conic_kernel: usize,
    pub decomposition_kernel: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjugateReport {
    pub gamma_order: usize,
    pub gamma_type: Option<SmallGroup>,
    pub conjugate_count: usize,
    pub intersection_orders: BTreeMap<usize, usize>,
    pub e360_component_sizes: Vec<usize>,
    pub e360_component_srgs: Vec<Option<SrgCertificate>>,
    pub e360_e168_pair_srgs: Vec<Option<SrgCertificate>>,
    pub conjugates_are_decomposition_stabilizers: bool,
    /// Conics Q with stab(Q₁) ∩ stab(Q) ≅ A₄.
    pub a4_partners: usize,
    /// Those for which ⟨stab(Q₁), stab(Q)⟩ = Γ.
    pub a4_partners_generating_gamma: usize,
}
