//! Dense univariate polynomials and binary forms over GF(q²).
//!
//! Root multiplicities are read off the square-free decomposition, which in
//! characteristic p has to handle the case f' = 0 (f is a p-th power).

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, Fq2};

/// Polynomial with coefficients lowest degree first; never has trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Fq2>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Fq2>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Fq2) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial t.
    pub fn x() -> Self {
        Poly { coeffs: vec![Fq2::ZERO, Fq2::ONE] }
    }

    pub fn coeffs(&self) -> &[Fq2] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Fq2 {
        self.coeffs.last().copied().unwrap_or(Fq2::ZERO)
    }

    pub fn coeff(&self, i: usize) -> Fq2 {
        self.coeffs.get(i).copied().unwrap_or(Fq2::ZERO)
    }
}

pub fn add(f: &FieldCtx, a: &Poly, b: &Poly) -> Poly {
    let n = a.coeffs.len().max(b.coeffs.len());
    Poly::new((0..n).map(|i| f.add(a.coeff(i), b.coeff(i))).collect())
}

pub fn sub(f: &FieldCtx, a: &Poly, b: &Poly) -> Poly {
    let n = a.coeffs.len().max(b.coeffs.len());
    Poly::new((0..n).map(|i| f.sub(a.coeff(i), b.coeff(i))).collect())
}

pub fn scale(f: &FieldCtx, c: Fq2, a: &Poly) -> Poly {
    Poly::new(a.coeffs.iter().map(|&x| f.mul(c, x)).collect())
}

pub fn mul(f: &FieldCtx, a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![Fq2::ZERO; a.coeffs.len() + b.coeffs.len() - 1];
    for (i, &x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.coeffs.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    Poly::new(out)
}

pub fn pow(f: &FieldCtx, a: &Poly, e: u32) -> Poly {
    let mut acc = Poly::constant(Fq2::ONE);
    for _ in 0..e {
        acc = mul(f, &acc, a);
    }
    acc
}

pub fn eval(f: &FieldCtx, a: &Poly, x: Fq2) -> Fq2 {
    a.coeffs.iter().rev().fold(Fq2::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
}

pub fn derivative(f: &FieldCtx, a: &Poly) -> Poly {
    Poly::new(
        a.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.scale(i as u32, c))
            .collect(),
    )
}

/// Quotient and remainder of a by b.
pub fn div_rem(f: &FieldCtx, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
    let db = b.degree().ok_or(Error::DivisionByZero)?;
    let lead_inv = f.inv(b.leading())?;
    let mut rem = a.coeffs.clone();
    if rem.len() <= db {
        return Ok((Poly::zero(), a.clone()));
    }
    let mut quot = vec![Fq2::ZERO; rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = f.mul(rem[i + db], lead_inv);
        quot[i] = c;
        if c.is_zero() {
            continue;
        }
        for (j, &bc) in b.coeffs.iter().enumerate() {
            rem[i + j] = f.sub(rem[i + j], f.mul(c, bc));
        }
    }
    rem.truncate(db);
    Ok((Poly::new(quot), Poly::new(rem)))
}

/// Exact division; errors if b does not divide a.
pub fn div_exact(f: &FieldCtx, a: &Poly, b: &Poly) -> Result<Poly> {
    let (q, r) = div_rem(f, a, b)?;
    if !r.is_zero() {
        return Err(Error::InvalidInput("inexact polynomial division".into()));
    }
    Ok(q)
}

pub fn monic(f: &FieldCtx, a: &Poly) -> Poly {
    if a.is_zero() {
        return Poly::zero();
    }
    let inv = f.inv(a.leading()).expect("leading coefficient is nonzero");
    scale(f, inv, a)
}

/// Monic greatest common divisor by the Euclidean algorithm.
pub fn gcd(f: &FieldCtx, a: &Poly, b: &Poly) -> Result<Poly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::InvalidInput("gcd of two zero polynomials".into()));
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = div_rem(f, &x, &y)?;
        x = y;
        y = r;
    }
    Ok(monic(f, &x))
}

/// For f with f' = 0, returns g with g^p = f (q = p prime, so the p-th root
/// of a coefficient c ∈ GF(p²) is c^p).
fn pth_root(f: &FieldCtx, a: &Poly) -> Poly {
    let p = f.q() as usize;
    Poly::new(
        a.coeffs
            .iter()
            .step_by(p)
            .map(|&c| f.pow(c, p as u64))
            .collect(),
    )
}

/// Square-free decomposition: pairs (g_i, i) with f = lc · ∏ g_i^i, each g_i
/// monic, square-free, pairwise coprime and of positive degree.
pub fn squarefree_decomposition(f: &FieldCtx, a: &Poly) -> Result<Vec<(Poly, usize)>> {
    if a.is_zero() {
        return Err(Error::InvalidInput("square-free decomposition of zero".into()));
    }
    let mut out = Vec::new();
    sff(f, &monic(f, a), 1, &mut out)?;
    out.sort_by_key(|(_, m)| *m);
    Ok(out)
}

fn sff(f: &FieldCtx, a: &Poly, scale_mult: usize, out: &mut Vec<(Poly, usize)>) -> Result<()> {
    if a.degree() == Some(0) {
        return Ok(());
    }
    let p = f.q() as usize;
    let da = derivative(f, a);
    if da.is_zero() {
        return sff(f, &pth_root(f, a), scale_mult * p, out);
    }
    let mut c = gcd(f, a, &da)?;
    let mut w = div_exact(f, a, &c)?;
    let mut i = 1;
    while w.degree() != Some(0) {
        let y = gcd(f, &w, &c)?;
        let fac = div_exact(f, &w, &y)?;
        if fac.degree() != Some(0) {
            push_factor(f, out, fac, i * scale_mult)?;
        }
        i += 1;
        w = y;
        c = div_exact(f, &c, &w)?;
    }
    if c.degree() != Some(0) {
        sff(f, &pth_root(f, &c), scale_mult * p, out)?;
    }
    Ok(())
}

fn push_factor(f: &FieldCtx, out: &mut Vec<(Poly, usize)>, fac: Poly, mult: usize) -> Result<()> {
    // factors coming from different p-power levels can share a multiplicity
    if let Some(entry) = out.iter_mut().find(|(_, m)| *m == mult) {
        entry.0 = mul(f, &entry.0, &fac);
    } else {
        out.push((fac, mult));
    }
    Ok(())
}

/// True iff the polynomial has no repeated root over the algebraic closure.
pub fn is_squarefree(f: &FieldCtx, a: &Poly) -> Result<bool> {
    match a.degree() {
        None => Err(Error::InvalidInput("square-freeness of zero".into())),
        Some(0) => Ok(true),
        Some(_) => {
            let da = derivative(f, a);
            if da.is_zero() {
                return Ok(false);
            }
            Ok(gcd(f, a, &da)?.degree() == Some(0))
        }
    }
}

/// A binary form Σ cᵢ s^{d−i} tⁱ of formal degree d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Fq2>,
    degree: usize,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Fq2>, degree: usize) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::InvalidInput(format!(
                "binary form of degree {degree} needs {} coefficients, got {}",
                degree + 1,
                coeffs.len()
            )));
        }
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidInput("zero binary form".into()));
        }
        Ok(BinaryForm { coeffs, degree })
    }

    /// Homogenizes an affine polynomial in t to the given formal degree.
    pub fn from_poly(p: &Poly, degree: usize) -> Result<Self> {
        if p.degree().is_some_and(|d| d > degree) {
            return Err(Error::InvalidInput("polynomial exceeds formal degree".into()));
        }
        BinaryForm::new((0..=degree).map(|i| p.coeff(i)).collect(), degree)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Fq2] {
        &self.coeffs
    }

    /// The chart s = 1.
    pub fn dehomogenize(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    /// Multiplicity of the root s = 0, i.e. the point t = ∞.
    pub fn multiplicity_at_infinity(&self) -> usize {
        self.degree - self.dehomogenize().degree().unwrap_or(0)
    }
}

/// Root multiplicities of a binary form over the algebraic closure, sorted
/// ascending; they sum to the formal degree.
pub fn multiplicity_partition(f: &FieldCtx, form: &BinaryForm) -> Result<Vec<usize>> {
    let affine = form.dehomogenize();
    let mut parts = Vec::with_capacity(form.degree());
    for (factor, mult) in squarefree_decomposition(f, &affine)? {
        let roots = factor.degree().unwrap_or(0);
        parts.extend(std::iter::repeat_n(mult, roots));
    }
    let at_infinity = form.multiplicity_at_infinity();
    if at_infinity > 0 {
        parts.push(at_infinity);
    }
    parts.sort_unstable();
    Ok(parts)
}

/// A binary form is square-free iff it has no repeated root, counting t = ∞.
pub fn form_is_squarefree(f: &FieldCtx, form: &BinaryForm) -> Result<bool> {
    if form.multiplicity_at_infinity() > 1 {
        return Ok(false);
    }
    is_squarefree(f, &form.dehomogenize())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf25() -> FieldCtx {
        FieldCtx::new(5).unwrap()
    }

    fn p(f: &FieldCtx, ints: &[i64]) -> Poly {
        Poly::new(ints.iter().map(|&c| f.from_int(c)).collect())
    }

    #[test]
    fn gcd_with_zero_is_monic() {
        let f = gf25();
        let a = p(&f, &[1, 2, 3]);
        assert_eq!(gcd(&f, &a, &Poly::zero()).unwrap(), monic(&f, &a));
        assert!(gcd(&f, &Poly::zero(), &Poly::zero()).is_err());
    }

    #[test]
    fn gcd_shared_linear_factor() {
        let f = gf25();
        let a = p(&f, &[-1, 0, 1]);
        let b = p(&f, &[-1, 1]);
        assert_eq!(gcd(&f, &a, &b).unwrap(), b);
    }

    #[test]
    fn division_identity() {
        let f = gf25();
        let a = Poly::new(vec![f.elem(1, 2), f.elem(0, 3), f.elem(4, 4), f.elem(2, 0), Fq2::ONE]);
        let b = Poly::new(vec![f.elem(3, 1), f.elem(1, 1)]);
        let (q, r) = div_rem(&f, &a, &b).unwrap();
        assert_eq!(add(&f, &mul(&f, &q, &b), &r), a);
        assert!(r.degree().is_none_or(|d| d < 1));
    }

    #[test]
    fn squarefree_cases() {
        let f = gf25();
        assert!(is_squarefree(&f, &p(&f, &[1, 1, 0, 1])).unwrap());
        assert!(!is_squarefree(&f, &p(&f, &[1, -2, 1])).unwrap());
        // t^5 - c has zero derivative in characteristic 5
        assert!(!is_squarefree(&f, &p(&f, &[-2, 0, 0, 0, 0, 1])).unwrap());
        assert!(is_squarefree(&f, &Poly::constant(Fq2::ONE)).unwrap());
        assert!(is_squarefree(&f, &Poly::zero()).is_err());
    }

    #[test]
    fn partition_of_constructed_forms() {
        let f = gf25();
        // (s - t)^2 (s + t)^2 = (1 - t)^2 (1 + t)^2 in the chart s = 1
        let a = mul(&f, &p(&f, &[1, -1]), &p(&f, &[1, 1]));
        let form = BinaryForm::from_poly(&mul(&f, &a, &a), 4).unwrap();
        assert_eq!(multiplicity_partition(&f, &form).unwrap(), vec![2, 2]);
        // t^2 (t-1) seen as a quartic has a simple root at infinity
        let g = mul(&f, &p(&f, &[0, 0, 1]), &p(&f, &[-1, 1]));
        let form = BinaryForm::from_poly(&g, 4).unwrap();
        assert_eq!(multiplicity_partition(&f, &form).unwrap(), vec![1, 1, 2]);
        // s^4: one root at infinity of multiplicity 4
        let form = BinaryForm::from_poly(&Poly::constant(Fq2::ONE), 4).unwrap();
        assert_eq!(multiplicity_partition(&f, &form).unwrap(), vec![4]);
        assert!(!form_is_squarefree(&f, &form).unwrap());
    }

    #[test]
    fn partition_handles_pth_powers() {
        let f = gf25();
        // (t - 1)^5 (t - 2)^6 (t^2 - 2)^1: α is a root of the last factor
        let l1 = pow(&f, &p(&f, &[-1, 1]), 5);
        let l2 = pow(&f, &p(&f, &[-2, 1]), 6);
        let q = p(&f, &[-3, 0, 1]);
        let g = mul(&f, &mul(&f, &l1, &l2), &q);
        let form = BinaryForm::from_poly(&g, 13).unwrap();
        assert_eq!(multiplicity_partition(&f, &form).unwrap(), vec![1, 1, 5, 6]);
    }

    #[test]
    fn binary_form_validation() {
        let f = gf25();
        assert!(BinaryForm::new(vec![Fq2::ZERO; 3], 2).is_err());
        assert!(BinaryForm::new(vec![Fq2::ONE; 2], 2).is_err());
        assert!(BinaryForm::from_poly(&p(&f, &[1, 1, 1]), 1).is_err());
    }
}
