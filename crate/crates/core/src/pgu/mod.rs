//! PGU₃(F_{q²}) as an explicit list of elements, each stored with its
//! canonical matrix and its permutation of the curve points.
//!
//! Elements are `u32` indices into the store. Products are computed on a
//! base of points and looked up, so composition never touches matrices.

pub mod analysis;
pub mod schreier;
pub mod small;

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, Fq2};
use crate::hermitian::CurveData;
use crate::projplane::{Conic, Matrix3, Point};

pub use small::{Fingerprint, SmallGroup};

/// Index of an element in a [`Pgu`] store.
pub type Elem = u32;

/// Largest q for which the full element list is built.
pub const MAX_GROUP_Q: u32 = 5;

/// Field arithmetic on dense element codes.
struct Tables {
    size: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    inv: Vec<u8>,
    conj: Vec<u8>,
    norm: Vec<u8>,
}

impl Tables {
    fn new(f: &FieldCtx) -> Self {
        let size = f.size();
        let el: Vec<Fq2> = f.elements().collect();
        let table = |op: &dyn Fn(Fq2, Fq2) -> Fq2| -> Vec<u8> {
            el.iter().flat_map(|&x| el.iter().map(move |&y| f.code(op(x, y)) as u8)).collect()
        };
        Tables {
            size,
            add: table(&|x, y| f.add(x, y)),
            mul: table(&|x, y| f.mul(x, y)),
            inv: el.iter().map(|&x| f.inv(x).map(|y| f.code(y) as u8).unwrap_or(0)).collect(),
            conj: el.iter().map(|&x| f.code(f.conj(x)) as u8).collect(),
            norm: el.iter().map(|&x| f.norm(x) as u8).collect(),
        }
    }

    fn add(&self, x: u8, y: u8) -> u8 {
        self.add[x as usize * self.size + y as usize]
    }

    fn mul(&self, x: u8, y: u8) -> u8 {
        self.mul[x as usize * self.size + y as usize]
    }

    /// Σ conj(uᵢ)·vᵢ.
    fn herm(&self, u: &[u8; 3], v: &[u8; 3]) -> u8 {
        (0..3).fold(0, |acc, i| self.add(acc, self.mul(self.conj[u[i] as usize], v[i])))
    }
}

/// The full group with permutation data on the curve points.
pub struct Pgu {
    field: FieldCtx,
    npoints: usize,
    matrices: Vec<[u8; 9]>,
    perms: Vec<u8>,
    base: Vec<usize>,
    index: HashMap<u64, Elem>,
    identity: Elem,
    point_lookup: Vec<u8>,
    tables: Tables,
}

impl std::fmt::Debug for Pgu {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Pgu").field("q", &self.field.q()).field("order", &self.order()).finish()
    }
}

fn point_key(q: usize, v: &[u8; 3]) -> usize {
    let s = q * q;
    (v[0] as usize * s + v[1] as usize) * s + v[2] as usize
}

impl Pgu {
    /// Enumerates unitary matrices column by column (each column of norm 1,
    /// orthogonal to the previous ones) and keeps one representative per
    /// scalar class.
    pub fn enumerate(curve: &CurveData) -> Result<Self> {
        let f = *curve.field();
        if f.q() > MAX_GROUP_Q {
            return Err(Error::Config(format!(
                "the element list is built only for q <= {MAX_GROUP_Q}, got q = {}",
                f.q()
            )));
        }
        let t = Tables::new(&f);
        let size = t.size;
        let q = f.q() as usize;
        let one = f.code(Fq2::ONE) as u8;
        let npoints = curve.points().len();

        let mut point_lookup = vec![u8::MAX; size * size * size];
        for (i, p) in curve.points().iter().enumerate() {
            let v = p.coords().map(|c| f.code(c) as u8);
            point_lookup[point_key(q, &v)] = i as u8;
        }

        let vectors: Vec<[u8; 3]> = (0..size * size * size)
            .map(|c| [(c / (size * size)) as u8, (c / size % size) as u8, (c % size) as u8])
            .filter(|v| t.herm(v, v) == one)
            .collect();
        // units of norm 1, and for each element whether it is least in its coset
        let unit_circle: Vec<u8> = (1..size as u8).filter(|&x| t.norm[x as usize] == 1).collect();
        let coset_min: Vec<bool> = (0..size as u8)
            .map(|x| x != 0 && unit_circle.iter().all(|&z| t.mul(x, z) >= x))
            .collect();
        let by_norm: Vec<Vec<u8>> =
            (0..q as u8).map(|n| (1..size as u8).filter(|&x| t.norm[x as usize] == n).collect()).collect();

        let cross_conj = |u: &[u8; 3], v: &[u8; 3]| -> [u8; 3] {
            let c = |x: u8| t.conj[x as usize];
            let m = |a: u8, b: u8| t.mul(c(a), c(b));
            let neg = |x: u8| t.mul(f.code(f.from_int(-1)) as u8, x);
            [
                t.add(m(u[1], v[2]), neg(m(u[2], v[1]))),
                t.add(m(u[2], v[0]), neg(m(u[0], v[2]))),
                t.add(m(u[0], v[1]), neg(m(u[1], v[0]))),
            ]
        };

        let canonical: Vec<[u8; 9]> = vectors
            .par_iter()
            .flat_map_iter(|c1| {
                let mut out = Vec::new();
                for c2 in vectors.iter().filter(|c2| t.herm(c1, c2) == 0) {
                    let w = cross_conj(c1, c2);
                    // ⟨w, w⟩ lies in GF(q), whose codes are multiples of q
                    let nw = t.herm(&w, &w) as usize / q;
                    let inv_nw = (1..q as u8).find(|&k| (k as usize * nw) % q == 1).unwrap_or(0);
                    for &mu in &by_norm[inv_nw as usize] {
                        let c3 = w.map(|x| t.mul(mu, x));
                        // rows of M = [c1 c2 c3]
                        let m = [c1[0], c2[0], c3[0], c1[1], c2[1], c3[1], c1[2], c2[2], c3[2]];
                        let lead = *m.iter().find(|&&x| x != 0).expect("invertible");
                        if coset_min[lead as usize] {
                            let inv = t.inv[lead as usize];
                            out.push(m.map(|x| t.mul(inv, x)));
                        }
                    }
                }
                out.into_iter()
            })
            .collect();
        let mut matrices = canonical;
        matrices.sort_unstable();
        let before = matrices.len();
        matrices.dedup();
        if matrices.len() != before {
            return Err(Error::falsified("scalar classes were not separated by the coset rule"));
        }

        let perms: Vec<u8> = matrices
            .par_iter()
            .flat_map_iter(|m| {
                curve
                    .points()
                    .iter()
                    .map(|p| apply_matrix(&t, q, &point_lookup, m, &p.coords().map(|c| f.code(c) as u8)))
                    .collect::<Vec<_>>()
            })
            .collect::<Option<Vec<u8>>>()
            .ok_or_else(|| Error::falsified("a unitary matrix moved a curve point off the curve"))?;

        let id_mat: [u8; 9] = [one, 0, 0, 0, one, 0, 0, 0, one];
        let identity =
            matrices.binary_search(&id_mat).map_err(|_| Error::falsified("identity missing"))? as Elem;

        let mut g = Pgu {
            field: f,
            npoints,
            matrices,
            perms,
            base: Vec::new(),
            index: HashMap::new(),
            identity,
            point_lookup,
            tables: t,
        };
        g.base = g.greedy_base();
        if g.base.len() * 7 > 64 || npoints > 128 {
            return Err(Error::Config("base does not fit the element key".into()));
        }
        let mut index = HashMap::with_capacity(g.order());
        for e in 0..g.order() as Elem {
            if index.insert(g.key_of(e), e).is_some() {
                return Err(Error::falsified("two elements induce the same permutation"));
            }
        }
        g.index = index;
        Ok(g)
    }

    /// Points chosen until only the identity fixes all of them.
    fn greedy_base(&self) -> Vec<usize> {
        let mut base = Vec::new();
        let mut remaining: Vec<Elem> = (0..self.order() as Elem).filter(|&e| e != self.identity).collect();
        while let Some(&e) = remaining.first() {
            let moved = (0..self.npoints).find(|&x| self.image(e, x) != x).expect("non-identity");
            base.push(moved);
            remaining.retain(|&g| self.image(g, moved) == moved);
        }
        base
    }

    fn key_from(&self, images: impl Iterator<Item = usize>) -> u64 {
        images.fold(0u64, |acc, x| acc << 7 | x as u64)
    }

    fn key_of(&self, e: Elem) -> u64 {
        self.key_from(self.base.iter().map(|&b| self.image(e, b)))
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.matrices.len()
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    /// The points whose images determine an element.
    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn perm(&self, e: Elem) -> &[u8] {
        let n = self.npoints;
        &self.perms[e as usize * n..(e as usize + 1) * n]
    }

    /// Image of point index `x` under `e`.
    pub fn image(&self, e: Elem, x: usize) -> usize {
        self.perms[e as usize * self.npoints + x] as usize
    }

    /// Canonical matrix: the first nonzero entry in row-major order is 1.
    pub fn matrix(&self, e: Elem) -> Matrix3 {
        let m = &self.matrices[e as usize];
        std::array::from_fn(|r| std::array::from_fn(|c| self.field.from_code(m[3 * r + c] as usize)))
    }

    /// The element acting on points as `perm`, if any.
    pub fn lookup_perm(&self, perm: &[u8]) -> Option<Elem> {
        let key = self.key_from(self.base.iter().map(|&b| perm[b] as usize));
        self.index.get(&key).copied().filter(|&e| self.perm(e) == perm)
    }

    /// a·b, acting as b first and then a.
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let key = self.key_from(self.base.iter().map(|&x| self.image(a, self.image(b, x))));
        self.index[&key]
    }

    pub fn inv(&self, a: Elem) -> Elem {
        let p = self.perm(a);
        let key = self.key_from(self.base.iter().map(|&b| p.iter().position(|&y| y as usize == b).expect("bijection")));
        self.index[&key]
    }

    /// g·h·g⁻¹.
    pub fn conjugate(&self, g: Elem, h: Elem) -> Elem {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn element_order(&self, e: Elem) -> usize {
        let p = self.perm(e);
        let mut seen = vec![false; self.npoints];
        let mut ord = 1usize;
        for s in 0..self.npoints {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = p[x] as usize;
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// The element represented by a matrix, which must be unitary up to a scalar.
    pub fn element_from_matrix(&self, m: &Matrix3) -> Result<Elem> {
        let f = &self.field;
        let t = &self.tables;
        let codes: [u8; 9] = std::array::from_fn(|i| f.code(m[i / 3][i % 3]) as u8);
        // M†M must be a nonzero scalar matrix
        let col = |j: usize| [codes[j], codes[3 + j], codes[6 + j]];
        let gram: Vec<u8> = (0..9).map(|i| t.herm(&col(i / 3), &col(i % 3))).collect();
        let lambda = gram[0];
        if lambda == 0 || (0..9).any(|i| gram[i] != if i % 4 == 0 { lambda } else { 0 }) {
            return Err(Error::InvalidInput("matrix is not unitary up to a scalar".into()));
        }
        let q = f.q() as usize;
        let perm = (0..self.npoints)
            .map(|x| {
                let p = self.point_codes(x);
                apply_matrix(t, q, &self.point_lookup, &codes, &p)
            })
            .collect::<Option<Vec<u8>>>()
            .ok_or_else(|| Error::InvalidInput("matrix does not preserve the curve".into()))?;
        self.lookup_perm(&perm).ok_or_else(|| Error::falsified("unitary matrix missing from the element list"))
    }

    fn point_codes(&self, x: usize) -> [u8; 3] {
        let q = self.field.q() as usize;
        let key = self.point_lookup.iter().position(|&i| i as usize == x).expect("point is indexed");
        let s = q * q;
        [(key / (s * s)) as u8, (key / s % s) as u8, (key % s) as u8]
    }

    /// Image of a conic under the action p ↦ Mp, from its trace.
    pub fn conic_image(&self, curve: &CurveData, e: Elem, conic: usize) -> usize {
        let tr = &curve.conics()[conic].trace;
        curve
            .conic_through(self.image(e, tr[0]), self.image(e, tr[1]), self.image(e, tr[2]))
            .expect("the group preserves the set of totally tangent conics")
    }

    /// Image of a conic computed from matrices: F ↦ M⁻ᵀ F M⁻¹.
    pub fn conic_image_by_matrix(&self, e: Elem, conic: &Conic) -> Result<Conic> {
        let f = &self.field;
        let inv = invert3(f, &self.matrix(e))?;
        let fm = conic.matrix(f);
        let mut out = [[Fq2::ZERO; 3]; 3];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                for a in 0..3 {
                    for b in 0..3 {
                        let term = f.mul(f.mul(inv[a][r], fm[a][b]), inv[b][c]);
                        *cell = f.add(*cell, term);
                    }
                }
            }
        }
        Conic::from_matrix(f, &out)
    }

    /// Image of a point computed from the matrix.
    pub fn point_image_by_matrix(&self, e: Elem, p: &Point) -> Result<Point> {
        let f = &self.field;
        let m = self.matrix(e);
        let v = p.coords();
        let w: [Fq2; 3] = std::array::from_fn(|r| {
            (0..3).fold(Fq2::ZERO, |acc, c| f.add(acc, f.mul(m[r][c], v[c])))
        });
        Point::new(f, w)
    }

    pub fn all(&self) -> Subgroup {
        Subgroup((0..self.order() as Elem).collect())
    }

    pub fn stabilizer_of_point(&self, x: usize) -> Subgroup {
        Subgroup((0..self.order() as Elem).filter(|&e| self.image(e, x) == x).collect())
    }

    /// Elements mapping a set of point indices onto itself.
    pub fn setwise_stabilizer(&self, points: &[usize]) -> Subgroup {
        let mut inside = vec![false; self.npoints];
        for &p in points {
            inside[p] = true;
        }
        Subgroup(
            (0..self.order() as Elem)
                .into_par_iter()
                .filter(|&e| points.iter().all(|&p| inside[self.image(e, p)]))
                .collect(),
        )
    }

    /// A totally tangent conic is determined by its trace, so its stabilizer
    /// is the setwise stabilizer of the trace.
    pub fn stabilizer_of_conic(&self, curve: &CurveData, conic: usize) -> Subgroup {
        self.setwise_stabilizer(&curve.conics()[conic].trace)
    }

    /// Elements mapping every conic of `members` into `members`.
    pub fn stabilizer_of_conic_set(&self, curve: &CurveData, members: &[usize]) -> Subgroup {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        Subgroup(
            (0..self.order() as Elem)
                .into_par_iter()
                .filter(|&e| set.contains(&self.conic_image(curve, e, members[0])))
                .filter(|&e| members.iter().all(|&c| set.contains(&self.conic_image(curve, e, c))))
                .collect(),
        )
    }

    /// g·H·g⁻¹.
    pub fn conjugate_subgroup(&self, g: Elem, h: &Subgroup) -> Subgroup {
        let gi = self.inv(g);
        Subgroup::from_unsorted(h.0.iter().map(|&x| self.mul(self.mul(g, x), gi)).collect())
    }

    /// Closure of a generating set by breadth-first multiplication.
    pub fn generated(&self, gens: &[Elem]) -> Subgroup {
        let mut seen = vec![false; self.order()];
        let mut queue = vec![self.identity];
        seen[self.identity as usize] = true;
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push(y);
                }
            }
        }
        Subgroup::from_unsorted(queue)
    }

    /// |⟨gens⟩|.
    pub fn generated_order(&self, gens: &[Elem]) -> usize {
        self.generated(gens).order()
    }

    /// A small generating set of a subgroup, chosen greedily in element order.
    pub fn generators_of(&self, h: &Subgroup) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut span = Subgroup(vec![self.identity]);
        for &x in &h.0 {
            if span.order() == h.order() {
                break;
            }
            if !span.contains(x) {
                gens.push(x);
                span = self.generated(&gens);
            }
        }
        gens
    }

    pub fn fingerprint(&self, h: &Subgroup) -> Fingerprint {
        let mut element_orders = std::collections::BTreeMap::new();
        for &x in &h.0 {
            *element_orders.entry(self.element_order(x)).or_insert(0) += 1;
        }
        let gens = self.generators_of(h);
        let abelian = gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)));
        Fingerprint { order: h.order(), element_orders, abelian }
    }

    pub fn identify(&self, h: &Subgroup) -> Option<SmallGroup> {
        SmallGroup::identify(&self.fingerprint(h))
    }

    /// For each conic, an element mapping `base` to it.
    pub fn conic_transversal(&self, curve: &CurveData, base: usize) -> Result<Vec<Elem>> {
        let mut rep = vec![Elem::MAX; curve.conics().len()];
        for e in 0..self.order() as Elem {
            let c = self.conic_image(curve, e, base);
            if rep[c] == Elem::MAX {
                rep[c] = e;
            }
        }
        if rep.contains(&Elem::MAX) {
            return Err(Error::falsified("the group is not transitive on conics"));
        }
        Ok(rep)
    }

    /// Elements in the subgroup of index gcd(3, q+1) that is the image of SU₃.
    pub fn is_special(&self, e: Elem) -> bool {
        let f = &self.field;
        let m = self.matrix(e);
        // scale M to be unitary: M†M = λI with λ = N(μ)⁻¹ for the scaling μ
        let lambda = (0..3).fold(Fq2::ZERO, |acc, r| f.add(acc, f.mul(f.conj(m[r][0]), m[r][0])));
        let mu = f
            .elements()
            .find(|&x| !x.is_zero() && f.mul(f.from_int(f.norm(x) as i64), lambda) == Fq2::ONE)
            .expect("norm is surjective");
        let det = f.mul(f.pow(mu, 3), crate::projplane::det3(f, &m));
        // unitary determinants are the (q+1)-th roots of unity; SU scalars shift them by cubes
        let roots: Vec<Fq2> = f.elements().filter(|&x| f.norm(x) == 1).collect();
        roots.iter().any(|&z| f.pow(z, 3) == det)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    a / gcd(a, b) * b
}

fn apply_matrix(t: &Tables, q: usize, lookup: &[u8], m: &[u8; 9], v: &[u8; 3]) -> Option<u8> {
    let w: [u8; 3] = std::array::from_fn(|r| {
        (0..3).fold(0u8, |acc, c| t.add(acc, t.mul(m[3 * r + c], v[c])))
    });
    let lead = *w.iter().find(|&&x| x != 0)?;
    let inv = t.inv[lead as usize];
    let n = w.map(|x| t.mul(inv, x));
    let idx = lookup[point_key(q, &n)];
    (idx != u8::MAX).then_some(idx)
}

/// Plain matrix product.
pub fn multiply_matrices(f: &FieldCtx, a: &Matrix3, b: &Matrix3) -> Matrix3 {
    std::array::from_fn(|r| {
        std::array::from_fn(|c| (0..3).fold(Fq2::ZERO, |acc, k| f.add(acc, f.mul(a[r][k], b[k][c]))))
    })
}

pub(crate) fn invert3(f: &FieldCtx, m: &Matrix3) -> Result<Matrix3> {
    let det = crate::projplane::det3(f, m);
    let dinv = f.inv(det)?;
    let cof = |r: usize, c: usize| {
        let (r1, r2) = ((r + 1) % 3, (r + 2) % 3);
        let (c1, c2) = ((c + 1) % 3, (c + 2) % 3);
        f.sub(f.mul(m[r1][c1], m[r2][c2]), f.mul(m[r1][c2], m[r2][c1]))
    };
    // inverse = adjugate / det, adjugate = transpose of cofactors
    Ok(std::array::from_fn(|r| std::array::from_fn(|c| f.mul(cof(c, r), dinv))))
}

/// A subgroup as the sorted list of its element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subgroup(Vec<Elem>);

impl Subgroup {
    pub fn from_unsorted(mut v: Vec<Elem>) -> Self {
        v.sort_unstable();
        v.dedup();
        Subgroup(v)
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.0
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Subgroup(out)
    }

    /// |self ∩ other| without materializing the intersection.
    pub fn intersection_order(&self, other: &Subgroup) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }
}

/// The fixed generators g₂, …, g₆ of an A₇ inside PGU₃(F₂₅), with ω = 2 + 3α.
pub fn a7_generator_matrices(f: &FieldCtx) -> Vec<Matrix3> {
    let e = |a: i64| f.from_int(a);
    let omega = f.elem(2, 3);
    let omega_inv = f.inv(omega).expect("ω ≠ 0");
    let z = Fq2::ZERO;
    vec![
        [[e(1), z, z], [z, omega, z], [z, z, omega_inv]],
        [[e(1), e(3), e(2)], [e(3), e(1), e(2)], [e(2), e(2), e(1)]],
        [[z, e(1), z], [e(1), z, z], [z, z, e(4)]],
        [[e(1), z, z], [z, z, e(4)], [z, e(4), z]],
        [[z, e(1), z], [e(1), z, z], [z, z, e(1)]],
    ]
}
