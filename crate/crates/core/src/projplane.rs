//! Points, lines and conics of the projective plane over GF(q²).
//!
//! All objects are stored in a canonical representative whose first nonzero
//! entry is 1, so structural equality is projective equality.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, Fq2};
use crate::poly::{self, BinaryForm, Poly};

fn normalize<const N: usize>(f: &FieldCtx, raw: [Fq2; N]) -> Result<[Fq2; N]> {
    let lead = raw
        .iter()
        .copied()
        .find(|c| !c.is_zero())
        .ok_or_else(|| Error::InvalidInput("all coordinates are zero".into()))?;
    let inv = f.inv(lead)?;
    Ok(raw.map(|c| f.mul(inv, c)))
}

fn cross(f: &FieldCtx, u: &[Fq2; 3], v: &[Fq2; 3]) -> [Fq2; 3] {
    [
        f.sub(f.mul(u[1], v[2]), f.mul(u[2], v[1])),
        f.sub(f.mul(u[2], v[0]), f.mul(u[0], v[2])),
        f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0])),
    ]
}

pub(crate) fn dot(f: &FieldCtx, u: &[Fq2; 3], v: &[Fq2; 3]) -> Fq2 {
    let s = f.add(f.mul(u[0], v[0]), f.mul(u[1], v[1]));
    f.add(s, f.mul(u[2], v[2]))
}

/// A point (x : y : z).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point([Fq2; 3]);

impl Point {
    pub fn new(f: &FieldCtx, raw: [Fq2; 3]) -> Result<Self> {
        Ok(Point(normalize(f, raw)?))
    }

    pub fn coords(&self) -> &[Fq2; 3] {
        &self.0
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {} : {})", self.0[0], self.0[1], self.0[2])
    }
}

/// A line ux + vy + wz = 0, stored by its dual coordinates (u, v, w).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Line([Fq2; 3]);

impl Line {
    pub fn new(f: &FieldCtx, raw: [Fq2; 3]) -> Result<Self> {
        Ok(Line(normalize(f, raw)?))
    }

    pub fn coeffs(&self) -> &[Fq2; 3] {
        &self.0
    }

    /// The unique line through two distinct points.
    pub fn through(f: &FieldCtx, p: &Point, r: &Point) -> Result<Self> {
        if p == r {
            return Err(Error::DegenerateInput("line through a repeated point".into()));
        }
        Line::new(f, cross(f, &p.0, &r.0))
    }

    pub fn contains(&self, f: &FieldCtx, p: &Point) -> bool {
        dot(f, &self.0, &p.0).is_zero()
    }
}

/// Monomial order of the six conic coefficients.
pub const CONIC_MONOMIALS: [&str; 6] = ["x^2", "y^2", "z^2", "xy", "yz", "zx"];

/// A conic c₀x² + c₁y² + c₂z² + c₃xy + c₄yz + c₅zx = 0 up to scalar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Conic([Fq2; 6]);

pub type Matrix3 = [[Fq2; 3]; 3];

pub(crate) fn det3(f: &FieldCtx, m: &Matrix3) -> Fq2 {
    let minor = |a: Fq2, b: Fq2, c: Fq2, d: Fq2| f.sub(f.mul(a, d), f.mul(b, c));
    let t0 = f.mul(m[0][0], minor(m[1][1], m[1][2], m[2][1], m[2][2]));
    let t1 = f.mul(m[0][1], minor(m[1][0], m[1][2], m[2][0], m[2][2]));
    let t2 = f.mul(m[0][2], minor(m[1][0], m[1][1], m[2][0], m[2][1]));
    f.add(f.sub(t0, t1), t2)
}

impl Conic {
    pub fn new(f: &FieldCtx, raw: [Fq2; 6]) -> Result<Self> {
        Ok(Conic(normalize(f, raw)?))
    }

    pub fn coeffs(&self) -> &[Fq2; 6] {
        &self.0
    }

    /// x² + y² + z², the conic fixed by the orthogonal group.
    pub fn fermat(f: &FieldCtx) -> Self {
        let one = f.from_int(1);
        Conic([one, one, one, Fq2::ZERO, Fq2::ZERO, Fq2::ZERO])
    }

    /// Symmetric matrix F with the conic equal to xᵗFx = 0; cross terms are halved.
    pub fn matrix(&self, f: &FieldCtx) -> Matrix3 {
        let half = f.from_int(f.q().div_ceil(2) as i64);
        let c = &self.0;
        let (xy, yz, zx) = (f.mul(half, c[3]), f.mul(half, c[4]), f.mul(half, c[5]));
        [[c[0], xy, zx], [xy, c[1], yz], [zx, yz, c[2]]]
    }

    /// Inverse of [`Conic::matrix`]; the matrix is assumed symmetric.
    pub fn from_matrix(f: &FieldCtx, m: &Matrix3) -> Result<Self> {
        let two = |x: Fq2| f.add(x, x);
        Conic::new(f, [m[0][0], m[1][1], m[2][2], two(m[0][1]), two(m[1][2]), two(m[0][2])])
    }

    pub fn det(&self, f: &FieldCtx) -> Fq2 {
        det3(f, &self.matrix(f))
    }

    pub fn is_nonsingular(&self, f: &FieldCtx) -> bool {
        !self.det(f).is_zero()
    }

    /// Value of the quadratic form at the given coordinates.
    pub fn eval_coords(&self, f: &FieldCtx, v: &[Fq2; 3]) -> Fq2 {
        let c = &self.0;
        let terms = [
            f.mul(c[0], f.mul(v[0], v[0])),
            f.mul(c[1], f.mul(v[1], v[1])),
            f.mul(c[2], f.mul(v[2], v[2])),
            f.mul(c[3], f.mul(v[0], v[1])),
            f.mul(c[4], f.mul(v[1], v[2])),
            f.mul(c[5], f.mul(v[2], v[0])),
        ];
        terms.into_iter().fold(Fq2::ZERO, |acc, t| f.add(acc, t))
    }

    /// The quadratic form at the canonical representative of `p`.
    pub fn eval(&self, f: &FieldCtx, p: &Point) -> Fq2 {
        self.eval_coords(f, &p.0)
    }

    /// Parses equations such as `(2w+2)x^2 + (3w+2)y^2 + z^2` or `2z^2+xy=0`,
    /// where `w` stands for α.
    pub fn parse(f: &FieldCtx, text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let s = s.strip_suffix("=0").unwrap_or(&s);
        let mut coeffs = [Fq2::ZERO; 6];
        let mut rest = s;
        while !rest.is_empty() {
            rest = rest.strip_prefix('+').unwrap_or(rest);
            let (coef, after) = if let Some(inner) = rest.strip_prefix('(') {
                let close = inner
                    .find(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced parenthesis in `{text}`")))?;
                (f.parse(&inner[..close])?, &inner[close + 1..])
            } else {
                let end = rest.find(|c: char| "xyz".contains(c)).unwrap_or(rest.len());
                let lit = rest[..end].trim_end_matches('*');
                let c = if lit.is_empty() { Fq2::ONE } else { f.parse(lit)? };
                (c, &rest[end..])
            };
            let after = after.trim_start_matches('*');
            let (idx, len) = CONIC_MONOMIALS
                .iter()
                .enumerate()
                .find(|(_, m)| after.starts_with(*m))
                .map(|(i, m)| (i, m.len()))
                .or_else(|| {
                    // accept xz as a spelling of zx
                    after.starts_with("xz").then_some((5, 2))
                })
                .ok_or_else(|| Error::Parse(format!("expected a monomial in `{text}`")))?;
            coeffs[idx] = f.add(coeffs[idx], coef);
            rest = &after[len..];
        }
        Conic::new(f, coeffs)
    }

    /// Human-readable equation in the same notation accepted by [`Conic::parse`].
    pub fn equation(&self) -> String {
        let mut terms = Vec::new();
        for (c, m) in self.0.iter().zip(CONIC_MONOMIALS) {
            if c.is_zero() {
                continue;
            }
            let coef = match (c.a(), c.b()) {
                (1, 0) => String::new(),
                (a, 0) => a.to_string(),
                (0, 1) => "w".to_string(),
                (0, b) => format!("{b}w"),
                (a, 1) => format!("(w+{a})"),
                (a, b) => format!("({b}w+{a})"),
            };
            terms.push(format!("{coef}{m}"));
        }
        terms.join(" + ")
    }
}

impl fmt::Display for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0", self.equation())
    }
}

/// Every point of P²(GF(q²)) in canonical order; q⁴ + q² + 1 of them.
pub fn all_points(f: &FieldCtx) -> Vec<Point> {
    let elems: Vec<Fq2> = f.elements().collect();
    let mut out = Vec::with_capacity(elems.len() * elems.len() + elems.len() + 1);
    out.push(Point([Fq2::ZERO, Fq2::ZERO, Fq2::ONE]));
    for &z in &elems {
        out.push(Point([Fq2::ZERO, Fq2::ONE, z]));
    }
    for &y in &elems {
        for &z in &elems {
            out.push(Point([Fq2::ONE, y, z]));
        }
    }
    out
}

/// All rational points of a nonsingular conic; there are q² + 1 of them.
pub fn conic_points(f: &FieldCtx, c: &Conic) -> Result<Vec<Point>> {
    if !c.is_nonsingular(f) {
        return Err(Error::SingularConic);
    }
    Ok(all_points(f).into_iter().filter(|p| c.eval(f, p).is_zero()).collect())
}

/// A rational parametrization t ↦ (X(t) : Y(t) : Z(t)) of a nonsingular conic
/// by quadratic binary forms, with t ∈ GF(q²) ∪ {∞}.
#[derive(Debug, Clone)]
pub struct Parametrization {
    base: Point,
    coords: [Poly; 3],
}

impl Parametrization {
    /// The least point of the conic, through which the pencil of lines is taken.
    pub fn base_point(&self) -> &Point {
        &self.base
    }

    /// Coordinate polynomials in the chart s = 1, each of formal degree 2.
    pub fn coords(&self) -> &[Poly; 3] {
        &self.coords
    }

    /// The point at parameter `t`; `None` stands for t = ∞.
    pub fn point_at(&self, f: &FieldCtx, t: Option<Fq2>) -> Point {
        let v = match t {
            Some(t) => self.coords.each_ref().map(|c| poly::eval(f, c, t)),
            None => self.coords.each_ref().map(|c| c.coeff(2)),
        };
        Point::new(f, v).expect("parametrization never vanishes")
    }

    /// Images of all q² + 1 parameters, finite ones first in canonical order.
    pub fn points(&self, f: &FieldCtx) -> Vec<Point> {
        f.elements()
            .map(Some)
            .chain(std::iter::once(None))
            .map(|t| self.point_at(f, t))
            .collect()
    }
}

/// Parametrizes a nonsingular conic Q through its least point P₀: for w on a
/// coordinate line avoiding P₀, the second intersection of line P₀w with Q is
/// −Q(w)·P₀ + 2B(P₀, w)·w.
pub fn parametrize(f: &FieldCtx, c: &Conic) -> Result<Parametrization> {
    if !c.is_nonsingular(f) {
        return Err(Error::SingularConic);
    }
    let base = all_points(f)
        .into_iter()
        .find(|p| c.eval(f, p).is_zero())
        .ok_or_else(|| Error::falsified("nonsingular conic without rational points"))?;
    let m = c.matrix(f);
    let k = base.0.iter().position(|x| !x.is_zero()).expect("point is nonzero");
    let (i, j) = match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    // w(t) = e_i + t e_j
    let mut w: [Poly; 3] = [Poly::zero(), Poly::zero(), Poly::zero()];
    w[i] = Poly::constant(Fq2::ONE);
    w[j] = Poly::x();
    // B(P0, w) = P0ᵗ F w  (linear in t)
    let row: [Fq2; 3] = std::array::from_fn(|col| {
        (0..3).fold(Fq2::ZERO, |acc, r| f.add(acc, f.mul(base.0[r], m[r][col])))
    });
    let bilinear = poly::add(f, &poly::scale(f, row[i], &w[i]), &poly::scale(f, row[j], &w[j]));
    // Q(w) = F_ii + 2 F_ij t + F_jj t²
    let two_fij = f.add(m[i][j], m[i][j]);
    let quad = Poly::new(vec![m[i][i], two_fij, m[j][j]]);
    let two_b = poly::add(f, &bilinear, &bilinear);
    let coords = std::array::from_fn(|r| {
        let from_base = poly::scale(f, f.neg(base.0[r]), &quad);
        let from_w = poly::mul(f, &two_b, &w[r]);
        poly::add(f, &from_base, &from_w)
    });
    Ok(Parametrization { base, coords })
}

/// A homogeneous ternary form given by its monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryForm {
    degree: u32,
    terms: Vec<(Fq2, [u32; 3])>,
}

impl TernaryForm {
    pub fn new(degree: u32, terms: Vec<(Fq2, [u32; 3])>) -> Result<Self> {
        if terms.iter().any(|(_, e)| e.iter().sum::<u32>() != degree) {
            return Err(Error::InvalidInput("form is not homogeneous".into()));
        }
        Ok(TernaryForm { degree, terms })
    }

    /// x^{q+1} + y^{q+1} + z^{q+1}.
    pub fn hermitian(f: &FieldCtx) -> Self {
        let d = f.q() + 1;
        TernaryForm {
            degree: d,
            terms: vec![(Fq2::ONE, [d, 0, 0]), (Fq2::ONE, [0, d, 0]), (Fq2::ONE, [0, 0, d])],
        }
    }

    pub fn from_conic(c: &Conic) -> Self {
        let e = [[2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 0], [0, 1, 1], [1, 0, 1]];
        TernaryForm { degree: 2, terms: c.0.iter().copied().zip(e).collect() }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn eval(&self, f: &FieldCtx, v: &[Fq2; 3]) -> Fq2 {
        self.terms.iter().fold(Fq2::ZERO, |acc, (c, e)| {
            let m = (0..3).fold(*c, |m, k| f.mul(m, f.pow(v[k], e[k] as u64)));
            f.add(acc, m)
        })
    }
}

/// Pull-back of a ternary form along a conic parametrization: a binary form
/// of formal degree 2·deg.
pub fn restrict(f: &FieldCtx, form: &TernaryForm, param: &Parametrization) -> Result<BinaryForm> {
    let max_exp = form.terms.iter().flat_map(|(_, e)| e.iter().copied()).max().unwrap_or(0);
    let powers: Vec<Vec<Poly>> = param
        .coords
        .iter()
        .map(|c| {
            let mut pw = vec![Poly::constant(Fq2::ONE)];
            for e in 1..=max_exp as usize {
                pw.push(poly::mul(f, &pw[e - 1], c));
            }
            pw
        })
        .collect();
    let mut acc = Poly::zero();
    for (c, e) in &form.terms {
        let mono = poly::mul(
            f,
            &poly::mul(f, &powers[0][e[0] as usize], &powers[1][e[1] as usize]),
            &powers[2][e[2] as usize],
        );
        acc = poly::add(f, &acc, &poly::scale(f, *c, &mono));
    }
    if acc.is_zero() {
        return Err(Error::CurveContainsConic);
    }
    BinaryForm::from_poly(&acc, 2 * form.degree as usize)
}

/// det(s·F + t·F′) as a binary cubic.
pub fn pencil_cubic(f: &FieldCtx, c1: &Conic, c2: &Conic) -> Result<BinaryForm> {
    BinaryForm::new(pencil_coeffs(f, &c1.matrix(f), &c2.matrix(f)).to_vec(), 3)
}

/// Coefficients of s^{3−k} t^k in det(s·A + t·B).
pub fn pencil_coeffs(f: &FieldCtx, a: &Matrix3, b: &Matrix3) -> [Fq2; 4] {
    // coefficient of t^k collects the determinants with k columns taken from B
    let mut coeffs = [Fq2::ZERO; 4];
    for mask in 0u8..8 {
        let cols: Matrix3 = std::array::from_fn(|r| {
            std::array::from_fn(|col| if mask >> col & 1 == 1 { b[r][col] } else { a[r][col] })
        });
        let k = mask.count_ones() as usize;
        coeffs[k] = f.add(coeffs[k], det3(f, &cols));
    }
    coeffs
}

/// b²c² − 4ac³ − 4b³d − 27a²d² + 18abcd for a·s³ + b·s²t + c·st² + d·t³;
/// zero exactly when the cubic has a repeated linear factor.
pub fn cubic_discriminant(f: &FieldCtx, c: &[Fq2; 4]) -> Fq2 {
    let [a, b, cc, d] = *c;
    let m = |x: Fq2, y: Fq2| f.mul(x, y);
    let k = |n: i64| f.from_int(n);
    let terms = [
        m(m(b, b), m(cc, cc)),
        m(k(-4), m(a, m(cc, m(cc, cc)))),
        m(k(-4), m(m(b, m(b, b)), d)),
        m(k(-27), m(m(a, a), m(d, d))),
        m(k(18), m(m(a, b), m(cc, d))),
    ];
    terms.into_iter().fold(Fq2::ZERO, |acc, t| f.add(acc, t))
}

fn check_pair(f: &FieldCtx, c1: &Conic, c2: &Conic) -> Result<()> {
    if c1 == c2 {
        return Err(Error::DegenerateInput("the two conics coincide".into()));
    }
    if !c1.is_nonsingular(f) || !c2.is_nonsingular(f) {
        return Err(Error::SingularConic);
    }
    Ok(())
}

/// Two distinct nonsingular conics meet in four distinct points iff their
/// pencil cubic has no repeated root.
pub fn transverse(f: &FieldCtx, c1: &Conic, c2: &Conic) -> Result<bool> {
    check_pair(f, c1, c2)?;
    poly::form_is_squarefree(f, &pencil_cubic(f, c1, c2)?)
}

/// [ν₁, ν₂, ν₃, ν₄]: the number of intersection points of each multiplicity.
pub fn intersection_pattern(f: &FieldCtx, c1: &Conic, c2: &Conic) -> Result<[usize; 4]> {
    check_pair(f, c1, c2)?;
    let param = parametrize(f, c1)?;
    pattern_along(f, &param, c2)
}

/// Same as [`intersection_pattern`] with a precomputed parametrization of the first conic.
pub fn pattern_along(f: &FieldCtx, param: &Parametrization, other: &Conic) -> Result<[usize; 4]> {
    let quartic = restrict(f, &TernaryForm::from_conic(other), param)
        .map_err(|_| Error::DegenerateInput("the two conics coincide".into()))?;
    let mut nu = [0usize; 4];
    for m in poly::multiplicity_partition(f, &quartic)? {
        nu[m - 1] += 1;
    }
    Ok(nu)
}

/// True iff the curve meets the conic only in points of multiplicity exactly 2.
pub fn tangency_certificate(f: &FieldCtx, c: &Conic, curve: &TernaryForm) -> Result<bool> {
    let param = parametrize(f, c)?;
    let form = restrict(f, curve, &param)?;
    Ok(poly::multiplicity_partition(f, &form)?.iter().all(|&m| m == 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf25() -> FieldCtx {
        FieldCtx::new(5).unwrap()
    }

    fn pt(f: &FieldCtx, v: [i64; 3]) -> Point {
        Point::new(f, v.map(|c| f.from_int(c))).unwrap()
    }

    #[test]
    fn normalization() {
        let f = gf25();
        assert_eq!(pt(&f, [0, 2, 4]).coords(), &[0, 1, 2].map(|c| f.from_int(c)));
        assert_eq!(pt(&f, [1, 0, 2]).coords(), &[1, 0, 2].map(|c| f.from_int(c)));
        assert!(Point::new(&f, [Fq2::ZERO; 3]).is_err());
        let p = pt(&f, [3, 1, 4]);
        assert_eq!(Point::new(&f, *p.coords()).unwrap(), p);
    }

    #[test]
    fn lines_through_points() {
        let f = gf25();
        let l = Line::through(&f, &pt(&f, [1, 0, 0]), &pt(&f, [0, 1, 0])).unwrap();
        assert_eq!(l.coeffs(), &[0, 0, 1].map(|c| f.from_int(c)));
        let l = Line::through(&f, &pt(&f, [0, 1, 2]), &pt(&f, [0, 1, 3])).unwrap();
        assert_eq!(l.coeffs(), &[1, 0, 0].map(|c| f.from_int(c)));
        let p = pt(&f, [1, 2, 3]);
        assert!(Line::through(&f, &p, &p).is_err());
    }

    #[test]
    fn fermat_conic_values() {
        let f = gf25();
        let q1 = Conic::fermat(&f);
        assert!(q1.eval(&f, &pt(&f, [0, 1, 2])).is_zero());
        assert_eq!(q1.eval(&f, &pt(&f, [1, 0, 0])), Fq2::ONE);
        assert!(q1.eval(&f, &pt(&f, [1, 2, 0])).is_zero());
    }

    #[test]
    fn matrix_round_trip() {
        let f = gf25();
        let c = Conic::parse(&f, "(2w+3)x^2 + 4y^2 + (3w+3)z^2 + (2w+2)xy + (2w+3)yz + zx").unwrap();
        assert_eq!(Conic::from_matrix(&f, &c.matrix(&f)).unwrap(), c);
    }

    #[test]
    fn parse_and_print() {
        let f = gf25();
        let c = Conic::parse(&f, "(2w+2)x^2+(3w+2)y^2+z^2=0").unwrap();
        // stored scaled so that the leading coefficient is 1
        assert_eq!(c.equation(), "x^2 + (2w+2)y^2 + (3w+2)z^2");
        assert_eq!(Conic::parse(&f, &c.equation()).unwrap(), c);
        let d = Conic::parse(&f, "2z^2+xy").unwrap();
        assert_eq!(d.coeffs()[2], Fq2::ONE);
        assert_eq!(d.coeffs()[3], f.from_int(3));
        assert!(Conic::parse(&f, "3q^2").is_err());
    }

    #[test]
    fn point_count_of_plane() {
        let f = gf25();
        let pts = all_points(&f);
        assert_eq!(pts.len(), 651);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn singular_conic_rejected() {
        let f = gf25();
        let c = Conic::parse(&f, "xy").unwrap();
        assert!(!c.is_nonsingular(&f));
        assert_eq!(conic_points(&f, &c), Err(Error::SingularConic));
        assert!(parametrize(&f, &c).is_err());
    }

    #[test]
    fn pencil_cubic_end_coefficients() {
        let f = gf25();
        let a = Conic::fermat(&f);
        let b = Conic::parse(&f, "2z^2+xy").unwrap();
        let cubic = pencil_cubic(&f, &a, &b).unwrap();
        assert_eq!(cubic.coeffs()[0], a.det(&f));
        assert_eq!(cubic.coeffs()[3], b.det(&f));
        assert_eq!(transverse(&f, &a, &a), Err(Error::DegenerateInput("the two conics coincide".into())));
    }

    #[test]
    fn discriminant_detects_repeated_roots() {
        let f = gf25();
        let c = |v: [i64; 4]| v.map(|x| f.from_int(x));
        // s·t·(s + t): distinct roots
        assert!(!cubic_discriminant(&f, &c([0, 1, 1, 0])).is_zero());
        // s²t
        assert!(cubic_discriminant(&f, &c([0, 1, 0, 0])).is_zero());
        // (s + t)³ = s³ + 3s²t + 3st² + t³
        assert!(cubic_discriminant(&f, &c([1, 3, 3, 1])).is_zero());
    }

    #[test]
    fn hermitian_form_vanishes_on_curve_points() {
        let f = gf25();
        let h = TernaryForm::hermitian(&f);
        assert_eq!(h.degree(), 6);
        assert!(h.eval(&f, pt(&f, [0, 1, 2]).coords()).is_zero());
        assert!(!h.eval(&f, pt(&f, [1, 0, 0]).coords()).is_zero());
        assert!(TernaryForm::new(3, vec![(Fq2::ONE, [1, 1, 0])]).is_err());
    }
}
