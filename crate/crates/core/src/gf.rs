//! Arithmetic in GF(q) and its quadratic extension GF(q²) = GF(q)[α]/(α² − n),
//! where q is an odd prime and n is the least quadratic nonresidue mod q.
//!
//! Elements are plain `Copy` values; every operation goes through a
//! [`FieldCtx`], which carries q and n.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported characteristic; both coordinates of an element fit in a byte.
pub const MAX_Q: u32 = 251;

/// An element a + bα of GF(q²). Ordered lexicographically on (a, b).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fq2 {
    a: u8,
    b: u8,
}

impl Fq2 {
    pub const ZERO: Fq2 = Fq2 { a: 0, b: 0 };
    pub const ONE: Fq2 = Fq2 { a: 1, b: 0 };

    /// The rational part a.
    pub fn a(self) -> u32 {
        self.a as u32
    }

    /// The α-coefficient b.
    pub fn b(self) -> u32 {
        self.b as u32
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_one(self) -> bool {
        self.a == 1 && self.b == 0
    }

    /// True iff the element lies in the prime subfield GF(q).
    pub fn is_in_base_field(self) -> bool {
        self.b == 0
    }
}

impl fmt::Display for Fq2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*w", self.a, self.b)
    }
}

impl Serialize for Fq2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a, self.b].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Fq2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[u8; 2]>::deserialize(d)?;
        Ok(Fq2 { a, b })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldCtx {
    q: u32,
    nonresidue: u32,
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl FieldCtx {
    /// Context for GF(q²); q must be an odd prime not exceeding [`MAX_Q`].
    pub fn new(q: u32) -> Result<Self> {
        if q.is_multiple_of(2) || !is_prime(q) {
            return Err(Error::Config(format!("q = {q} is not an odd prime")));
        }
        if q > MAX_Q {
            return Err(Error::Config(format!("q = {q} exceeds the supported maximum {MAX_Q}")));
        }
        let half = ((q - 1) / 2) as u64;
        let nonresidue = (2..q)
            .find(|&n| pow_mod(n as u64, half, q as u64) == (q - 1) as u64)
            .expect("every odd prime has a nonresidue");
        Ok(FieldCtx { q, nonresidue })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// The nonresidue n = α².
    pub fn nonresidue(&self) -> u32 {
        self.nonresidue
    }

    /// Number of elements of GF(q²).
    pub fn size(&self) -> usize {
        (self.q * self.q) as usize
    }

    /// Builds a + bα, reducing both integers mod q.
    pub fn elem(&self, a: i64, b: i64) -> Fq2 {
        let q = self.q as i64;
        Fq2 { a: a.rem_euclid(q) as u8, b: b.rem_euclid(q) as u8 }
    }

    pub fn from_int(&self, c: i64) -> Fq2 {
        self.elem(c, 0)
    }

    pub fn alpha(&self) -> Fq2 {
        self.elem(0, 1)
    }

    /// Dense code in `0..q²` that respects the canonical order.
    pub fn code(&self, x: Fq2) -> usize {
        (x.a as usize) * self.q as usize + x.b as usize
    }

    pub fn from_code(&self, c: usize) -> Fq2 {
        let q = self.q as usize;
        Fq2 { a: (c / q) as u8, b: (c % q) as u8 }
    }

    /// All q² elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Fq2> + '_ {
        (0..self.size()).map(move |c| self.from_code(c))
    }

    pub fn add(&self, x: Fq2, y: Fq2) -> Fq2 {
        let q = self.q;
        Fq2 {
            a: ((x.a as u32 + y.a as u32) % q) as u8,
            b: ((x.b as u32 + y.b as u32) % q) as u8,
        }
    }

    pub fn neg(&self, x: Fq2) -> Fq2 {
        let q = self.q;
        Fq2 { a: ((q - x.a as u32) % q) as u8, b: ((q - x.b as u32) % q) as u8 }
    }

    pub fn sub(&self, x: Fq2, y: Fq2) -> Fq2 {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: Fq2, y: Fq2) -> Fq2 {
        let q = self.q;
        let (a, b, c, d) = (x.a as u32, x.b as u32, y.a as u32, y.b as u32);
        let re = (a * c + self.nonresidue * (b * d % q)) % q;
        let im = (a * d + b * c) % q;
        Fq2 { a: re as u8, b: im as u8 }
    }

    /// Multiplication by an element of the prime field.
    pub fn scale(&self, c: u32, x: Fq2) -> Fq2 {
        let q = self.q;
        let c = c % q;
        Fq2 { a: (c * x.a as u32 % q) as u8, b: (c * x.b as u32 % q) as u8 }
    }

    pub fn square(&self, x: Fq2) -> Fq2 {
        self.mul(x, x)
    }

    /// Frobenius x ↦ x^q, which is a − bα for prime q.
    pub fn conj(&self, x: Fq2) -> Fq2 {
        Fq2 { a: x.a, b: ((self.q - x.b as u32) % self.q) as u8 }
    }

    /// Norm x·x̄ = a² − n b², an element of GF(q) returned as an integer.
    pub fn norm(&self, x: Fq2) -> u32 {
        let q = self.q;
        let (a, b) = (x.a as u32, x.b as u32);
        (a * a + (q - self.nonresidue) * (b * b % q)) % q
    }

    /// Inverse of a nonzero element of the prime field.
    pub fn base_inv(&self, c: u32) -> Result<u32> {
        let c = c % self.q;
        if c == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(pow_mod(c as u64, (self.q - 2) as u64, self.q as u64) as u32)
    }

    pub fn inv(&self, x: Fq2) -> Result<Fq2> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n_inv = self.base_inv(self.norm(x))?;
        Ok(self.scale(n_inv, self.conj(x)))
    }

    pub fn div(&self, x: Fq2, y: Fq2) -> Result<Fq2> {
        Ok(self.mul(x, self.inv(y)?))
    }

    pub fn pow(&self, x: Fq2, mut e: u64) -> Fq2 {
        let mut base = x;
        let mut acc = Fq2::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn is_in_base_field(&self, x: Fq2) -> bool {
        x.is_in_base_field()
    }

    /// Parses the `a+b*w` notation produced by `Display`, plus the shorter
    /// forms `a`, `b*w`, `w`, `bw+a`.
    pub fn parse(&self, text: &str) -> Result<Fq2> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty field element".into()));
        }
        let mut acc = Fq2::ZERO;
        for term in split_signed_terms(&cleaned) {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1i64, rest),
                None => (1i64, term.trim_start_matches('+')),
            };
            let body = body.replace('*', "");
            let value = if let Some(coef) = body.strip_suffix('w') {
                let c = if coef.is_empty() { 1 } else { parse_int(coef)? };
                self.elem(0, sign * c)
            } else {
                self.from_int(sign * parse_int(&body)?)
            };
            acc = self.add(acc, value);
        }
        Ok(acc)
    }
}

fn parse_int(s: &str) -> Result<i64> {
    s.parse::<i64>().map_err(|_| Error::Parse(format!("bad integer `{s}`")))
}

/// Splits `3+2w-1` into `["3", "+2w", "-1"]`.
pub(crate) fn split_signed_terms(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        if i > start && (ch == '+' || ch == '-') {
            out.push(&s[start..i]);
            start = i;
        }
    }
    out.push(&s[start..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf25() -> FieldCtx {
        FieldCtx::new(5).unwrap()
    }

    #[test]
    fn rejects_bad_characteristic() {
        assert!(FieldCtx::new(4).is_err());
        assert!(FieldCtx::new(2).is_err());
        assert!(FieldCtx::new(9).is_err());
        assert!(FieldCtx::new(257).is_err());
    }

    #[test]
    fn least_nonresidue() {
        assert_eq!(gf25().nonresidue(), 2);
        assert_eq!(FieldCtx::new(3).unwrap().nonresidue(), 2);
        assert_eq!(FieldCtx::new(7).unwrap().nonresidue(), 3);
    }

    #[test]
    fn identity_and_alpha_squared() {
        let f = gf25();
        for x in f.elements() {
            assert_eq!(f.mul(Fq2::ONE, x), x);
        }
        assert_eq!(f.square(f.alpha()), f.from_int(2));
    }

    #[test]
    fn alpha_sixth_power_by_repeated_squaring() {
        let f = gf25();
        let a = f.alpha();
        let a2 = f.mul(a, a);
        let a4 = f.mul(a2, a2);
        let a6 = f.mul(a4, a2);
        assert_eq!(a6, f.from_int(3));
        assert_eq!(f.pow(a, 6), f.from_int(3));
    }

    #[test]
    fn conjugation_matches_frobenius_power() {
        for q in [3, 5, 7] {
            let f = FieldCtx::new(q).unwrap();
            for x in f.elements() {
                assert_eq!(f.conj(x), f.pow(x, q as u64));
                assert_eq!(f.conj(f.conj(x)), x);
            }
        }
        let f = gf25();
        assert_eq!(f.conj(f.from_int(3)), f.from_int(3));
        assert_eq!(f.conj(f.alpha()), f.neg(f.alpha()));
    }

    #[test]
    fn norms_land_in_base_field_and_multiply() {
        let f = gf25();
        for x in f.elements() {
            assert!(f.mul(x, f.conj(x)).is_in_base_field());
            assert_eq!(f.mul(x, f.conj(x)), f.from_int(f.norm(x) as i64));
            for y in f.elements() {
                assert_eq!(f.norm(f.mul(x, y)), f.norm(x) * f.norm(y) % 5);
            }
        }
    }

    #[test]
    fn inverses() {
        let f = gf25();
        for x in f.elements().filter(|x| !x.is_zero()) {
            assert_eq!(f.mul(x, f.inv(x).unwrap()), Fq2::ONE);
        }
        assert_eq!(f.inv(Fq2::ZERO), Err(Error::DivisionByZero));
        assert_eq!(f.div(Fq2::ONE, Fq2::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn base_field_membership() {
        let f = gf25();
        assert!(f.is_in_base_field(Fq2::ZERO));
        assert!(!f.is_in_base_field(f.alpha()));
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let f = gf25();
        let all: Vec<Fq2> = f.elements().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(f.code(f.elem(2, 3)), 13);
    }

    #[test]
    fn display_and_parse() {
        let f = gf25();
        let x = f.elem(3, 2);
        assert_eq!(x.to_string(), "3+2*w");
        for x in f.elements() {
            assert_eq!(f.parse(&x.to_string()).unwrap(), x);
        }
        assert_eq!(f.parse("2w+3").unwrap(), x);
        assert_eq!(f.parse("w").unwrap(), f.alpha());
        assert_eq!(f.parse("-1").unwrap(), f.from_int(4));
        assert!(f.parse("x").is_err());
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, "[3,2]");
        assert_eq!(serde_json::from_str::<Fq2>(&json).unwrap(), x);
    }
}
