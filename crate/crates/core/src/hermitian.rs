//! The Hermitian curve x^{q+1} + y^{q+1} + z^{q+1} = 0 over GF(q²), its
//! rational points, secant lines and the conics tangent to it at q+1 points.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, Fq2};
use crate::projplane::{all_points, dot, Conic, Line, Point};

/// Rational points of the curve in canonical order.
pub fn weierstrass_points(f: &FieldCtx) -> Vec<Point> {
    all_points(f).into_iter().filter(|p| on_curve(f, p)).collect()
}

pub fn on_curve(f: &FieldCtx, p: &Point) -> bool {
    hermitian_product(f, p.coords(), p.coords()).is_zero()
}

/// u·v̄ = u₀v̄₀ + u₁v̄₁ + u₂v̄₂.
pub fn hermitian_product(f: &FieldCtx, u: &[Fq2; 3], v: &[Fq2; 3]) -> Fq2 {
    dot(f, u, &v.map(|c| f.conj(c)))
}

/// The tangent line āx + b̄y + c̄z = 0 at a rational point (a : b : c).
pub fn tangent_line_at(f: &FieldCtx, p: &Point) -> Result<Line> {
    if !on_curve(f, p) {
        return Err(Error::InvalidInput(format!("{p} is not on the curve")));
    }
    Line::new(f, p.coords().map(|c| f.conj(c)))
}

/// κ-test: three distinct non-collinear rational points lie on a common
/// totally tangent conic iff κ₀₁κ₁₂κ₂₀ is a nonzero element of GF(q).
pub fn coconical_triple(f: &FieldCtx, p0: &Point, p1: &Point, p2: &Point) -> Result<bool> {
    for p in [p0, p1, p2] {
        if !on_curve(f, p) {
            return Err(Error::InvalidInput(format!("{p} is not on the curve")));
        }
    }
    if p0 == p1 || p1 == p2 || p0 == p2 {
        return Err(Error::DegenerateInput("repeated point".into()));
    }
    if Line::through(f, p0, p1)?.contains(f, p2) {
        return Err(Error::CollinearInput);
    }
    Ok(kappa_verdict(
        f,
        hermitian_product(f, p0.coords(), p1.coords()),
        hermitian_product(f, p1.coords(), p2.coords()),
        hermitian_product(f, p2.coords(), p0.coords()),
    ))
}

fn kappa_verdict(f: &FieldCtx, k01: Fq2, k12: Fq2, k20: Fq2) -> bool {
    let prod = f.mul(f.mul(k01, k12), k20);
    !prod.is_zero() && prod.is_in_base_field()
}

/// Kernel basis of a matrix over GF(q²) given by rows.
pub(crate) fn nullspace(f: &FieldCtx, mut rows: Vec<Vec<Fq2>>, ncols: usize) -> Vec<Vec<Fq2>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = f.inv(rows[r][col]).expect("pivot is nonzero");
        rows[r].iter_mut().for_each(|x| *x = f.mul(*x, inv));
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let c = row[col];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(c, *p));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Fq2::ZERO; ncols];
            v[free] = Fq2::ONE;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(rows[i][free]);
            }
            v
        })
        .collect()
}

/// The conic whose polar line at each Pᵢ is the curve's tangent line at Pᵢ.
pub fn conic_from_tangency_data(f: &FieldCtx, triple: [&Point; 3]) -> Result<Conic> {
    // unknowns: F00, F11, F22, F01, F12, F02 of the symmetric matrix F
    let slot = |r: usize, c: usize| match (r.min(c), r.max(c)) {
        (0, 0) => 0,
        (1, 1) => 1,
        (2, 2) => 2,
        (0, 1) => 3,
        (1, 2) => 4,
        _ => 5,
    };
    let mut rows = Vec::with_capacity(9);
    for p in triple {
        let v = p.coords();
        let l = v.map(|c| f.conj(c));
        // (F v) × l = 0, with (F v)_r = Σ_c F_rc v_c
        for (a, b) in [(1, 2), (2, 0), (0, 1)] {
            let mut row = vec![Fq2::ZERO; 6];
            for c in 0..3 {
                let sa = slot(a, c);
                row[sa] = f.add(row[sa], f.mul(v[c], l[b]));
                let sb = slot(b, c);
                row[sb] = f.sub(row[sb], f.mul(v[c], l[a]));
            }
            rows.push(row);
        }
    }
    let kernel = nullspace(f, rows, 6);
    if kernel.len() != 1 {
        return Err(Error::InconsistentTangencyData { kernel_dim: kernel.len() });
    }
    let k = &kernel[0];
    let m = [[k[0], k[3], k[5]], [k[3], k[1], k[4]], [k[5], k[4], k[2]]];
    let conic = Conic::from_matrix(f, &m)?;
    if !conic.is_nonsingular(f) {
        return Err(Error::SingularConic);
    }
    Ok(conic)
}

#[derive(Debug, Clone, Serialize)]
pub struct Secant {
    pub line: Line,
    /// Indices into [`CurveData::points`].
    pub trace: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TangentConic {
    pub conic: Conic,
    /// Indices of the q+1 curve points on the conic.
    pub trace: Vec<usize>,
    /// Indices of the C(q+1, 2) secants joining trace points.
    pub secants: Vec<usize>,
}

/// Points, secants and totally tangent conics of the curve, with fixed indices.
#[derive(Debug, Clone, Serialize)]
pub struct CurveData {
    #[serde(skip)]
    field: FieldCtx,
    q: u32,
    points: Vec<Point>,
    secants: Vec<Secant>,
    conics: Vec<TangentConic>,
    coconical_triples: usize,
    #[serde(skip)]
    point_index: HashMap<Point, usize>,
    #[serde(skip)]
    pair_secant: Vec<u32>,
    #[serde(skip)]
    triple_conic: HashMap<[u16; 3], u32>,
}

impl CurveData {
    pub fn build(f: &FieldCtx) -> Result<Self> {
        let points = weierstrass_points(f);
        let point_index: HashMap<Point, usize> =
            points.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let (secants, pair_secant) = special_secants(f, &points)?;
        let n = points.len();

        // Hermitian Gram matrix of the canonical representatives
        let gram: Vec<Fq2> = points
            .iter()
            .flat_map(|u| points.iter().map(|v| hermitian_product(f, u.coords(), v.coords())))
            .collect();

        let mut found: BTreeSet<Conic> = BTreeSet::new();
        let mut coconical = 0usize;
        let mut covered: HashSet<[u16; 3]> = HashSet::new();
        for i in 0..n {
            for j in i + 1..n {
                let sij = pair_secant[i * n + j];
                for k in j + 1..n {
                    if pair_secant[i * n + k] == sij {
                        continue;
                    }
                    if !kappa_verdict(f, gram[i * n + j], gram[j * n + k], gram[k * n + i]) {
                        continue;
                    }
                    coconical += 1;
                    if covered.contains(&[i as u16, j as u16, k as u16]) {
                        continue;
                    }
                    let conic = conic_from_tangency_data(f, [&points[i], &points[j], &points[k]])?;
                    let trace = trace_of(f, &conic, &points);
                    covered.extend(triples_of(&trace));
                    found.insert(conic);
                }
            }
        }

        let mut conics = Vec::with_capacity(found.len());
        let mut triple_conic = HashMap::new();
        for (idx, conic) in found.into_iter().enumerate() {
            let trace = trace_of(f, &conic, &points);
            if trace.len() != f.q() as usize + 1 {
                return Err(Error::falsified(format!(
                    "conic {conic} meets the curve in {} rational points",
                    trace.len()
                )));
            }
            for key in triples_of(&trace) {
                triple_conic.insert(key, idx as u32);
            }
            let secants = secants_of_trace(&trace, &pair_secant, n);
            conics.push(TangentConic { conic, trace, secants });
        }

        Ok(CurveData {
            field: *f,
            q: f.q(),
            points,
            secants,
            conics,
            coconical_triples: coconical,
            point_index,
            pair_secant,
            triple_conic,
        })
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn secants(&self) -> &[Secant] {
        &self.secants
    }

    pub fn conics(&self) -> &[TangentConic] {
        &self.conics
    }

    /// Number of unordered non-collinear triples passing the κ-test.
    pub fn coconical_triple_count(&self) -> usize {
        self.coconical_triples
    }

    pub fn point_index(&self, p: &Point) -> Option<usize> {
        self.point_index.get(p).copied()
    }

    pub fn conic_index(&self, c: &Conic) -> Option<usize> {
        self.conics.binary_search_by(|r| r.conic.cmp(c)).ok()
    }

    /// Index of the secant through two distinct curve points.
    pub fn secant_through(&self, i: usize, j: usize) -> usize {
        self.pair_secant[i * self.points.len() + j] as usize
    }

    /// The conic through three trace points, if any.
    pub fn conic_through(&self, i: usize, j: usize, k: usize) -> Option<usize> {
        let mut key = [i as u16, j as u16, k as u16];
        key.sort_unstable();
        self.triple_conic.get(&key).map(|&c| c as usize)
    }

    /// The C(q+1, 2) secants spanned by the trace of conic `idx`.
    pub fn secants_of(&self, idx: usize) -> &[usize] {
        &self.conics[idx].secants
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string(self).map_err(|e| Error::InvalidInput(e.to_string()))
    }
}

fn trace_of(f: &FieldCtx, conic: &Conic, points: &[Point]) -> Vec<usize> {
    (0..points.len()).filter(|&i| conic.eval(f, &points[i]).is_zero()).collect()
}

fn triples_of(trace: &[usize]) -> impl Iterator<Item = [u16; 3]> + '_ {
    (0..trace.len()).flat_map(move |a| {
        (a + 1..trace.len()).flat_map(move |b| {
            (b + 1..trace.len()).map(move |c| [trace[a] as u16, trace[b] as u16, trace[c] as u16])
        })
    })
}

fn secants_of_trace(trace: &[usize], pair_secant: &[u32], n: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0..trace.len())
        .flat_map(|a| (a + 1..trace.len()).map(move |b| (a, b)))
        .map(|(a, b)| pair_secant[trace[a] * n + trace[b]] as usize)
        .collect();
    out.sort_unstable();
    out
}

/// Lines through at least two curve points, sorted by dual coordinates, and
/// the n×n table mapping a point pair to its secant index.
pub fn special_secants(f: &FieldCtx, points: &[Point]) -> Result<(Vec<Secant>, Vec<u32>)> {
    let n = points.len();
    let mut lines = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            lines.insert(Line::through(f, &points[i], &points[j])?);
        }
    }
    let mut pair = vec![u32::MAX; n * n];
    let secants: Vec<Secant> = lines
        .into_iter()
        .enumerate()
        .map(|(idx, line)| {
            let trace: Vec<usize> = (0..n).filter(|&i| line.contains(f, &points[i])).collect();
            for &a in &trace {
                for &b in &trace {
                    if a != b {
                        pair[a * n + b] = idx as u32;
                    }
                }
            }
            Secant { line, trace }
        })
        .collect();
    Ok((secants, pair))
}
