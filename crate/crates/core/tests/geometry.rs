use std::sync::OnceLock;

use proptest::prelude::*;

use unital_graphs::graphs::{self, Graph};
use unital_graphs::hermitian::{self, CurveData};
use unital_graphs::poly::{self, Poly};
use unital_graphs::projplane;
use unital_graphs::{Error, FieldCtx, Fq2};

fn field() -> &'static FieldCtx {
    static F: OnceLock<FieldCtx> = OnceLock::new();
    F.get_or_init(|| FieldCtx::new(5).unwrap())
}

fn curve() -> &'static CurveData {
    static C: OnceLock<CurveData> = OnceLock::new();
    C.get_or_init(|| CurveData::build(field()).unwrap())
}

fn elem() -> impl Strategy<Value = Fq2> {
    (0i64..5, 0i64..5).prop_map(|(a, b)| field().elem(a, b))
}

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec(elem(), 1..7).prop_map(Poly::new)
}

proptest! {
    #[test]
    fn field_axioms(x in elem(), y in elem(), z in elem()) {
        let f = field();
        prop_assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
        prop_assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        prop_assert_eq!(f.add(x, y), f.add(y, x));
        prop_assert_eq!(f.conj(f.mul(x, y)), f.mul(f.conj(x), f.conj(y)));
        prop_assert_eq!(f.conj(f.conj(x)), x);
        let n = f.mul(x, f.conj(x));
        prop_assert!(f.is_in_base_field(n));
        prop_assert_eq!(n, f.from_int(f.norm(x) as i64));
        if !y.is_zero() {
            prop_assert_eq!(f.mul(f.div(x, y).unwrap(), y), x);
        }
    }

    #[test]
    fn gcd_divides_both(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        let f = field();
        prop_assume!(!c.is_zero());
        let (ac, bc) = (poly::mul(f, &a, &c), poly::mul(f, &b, &c));
        prop_assume!(!ac.is_zero() || !bc.is_zero());
        let g = poly::gcd(f, &ac, &bc).unwrap();
        prop_assert!(poly::div_rem(f, &ac, &g).unwrap().1.is_zero());
        prop_assert!(poly::div_rem(f, &bc, &g).unwrap().1.is_zero());
        // the common factor survives
        prop_assert!(poly::div_rem(f, &g, &poly::monic(f, &c)).unwrap().1.is_zero());
    }

    #[test]
    fn squarefree_decomposition_multiplies_back(a in poly_strategy(), b in poly_strategy()) {
        let f = field();
        let p = poly::mul(f, &poly::pow(f, &a, 2), &b);
        prop_assume!(p.degree().is_some_and(|d| d > 0));
        let parts = poly::squarefree_decomposition(f, &p).unwrap();
        let product = parts
            .iter()
            .fold(Poly::constant(Fq2::ONE), |acc, (factor, e)| poly::mul(f, &acc, &poly::pow(f, factor, *e as u32)));
        prop_assert_eq!(poly::monic(f, &product), poly::monic(f, &p));
        for (factor, _) in &parts {
            prop_assert!(poly::is_squarefree(f, factor).unwrap());
        }
    }

    #[test]
    fn coconical_criterion_matches_traces(i in 0usize..126, j in 0usize..126, k in 0usize..126) {
        prop_assume!(i != j && j != k && i != k);
        let c = curve();
        let f = c.field();
        let pts = c.points();
        let on_secant = c.secants()[c.secant_through(i, j)].trace.contains(&k);
        let verdict = match hermitian::coconical_triple(f, &pts[i], &pts[j], &pts[k]) {
            Err(Error::CollinearInput) => {
                prop_assert!(on_secant);
                return Ok(());
            }
            other => other.unwrap(),
        };
        prop_assert!(!on_secant);
        // the verdict does not depend on the order of the points
        prop_assert_eq!(verdict, hermitian::coconical_triple(f, &pts[k], &pts[i], &pts[j]).unwrap());
        prop_assert_eq!(verdict, hermitian::coconical_triple(f, &pts[j], &pts[i], &pts[k]).unwrap());
        let on_some_conic = c.conics().iter().any(|q| {
            [i, j, k].iter().all(|&x| q.conic.eval(f, &pts[x]).is_zero())
        });
        prop_assert_eq!(verdict, on_some_conic);
    }

    #[test]
    fn coconical_verdict_ignores_representatives(
        i in 0usize..126, j in 0usize..126, k in 0usize..126,
        scales in prop::array::uniform3(elem()),
    ) {
        prop_assume!(i != j && j != k && i != k && scales.iter().all(|s| !s.is_zero()));
        let c = curve();
        let f = c.field();
        let pts = [i, j, k].map(|x| *c.points()[x].coords());
        let scaled: [[Fq2; 3]; 3] = std::array::from_fn(|r| pts[r].map(|x| f.mul(scales[r], x)));
        let verdict = |v: &[[Fq2; 3]; 3]| {
            let prod = (0..3).fold(Fq2::ONE, |acc, r| f.mul(acc, hermitian::hermitian_product(f, &v[r], &v[(r + 1) % 3])));
            !prod.is_zero() && f.is_in_base_field(prod)
        };
        prop_assert_eq!(verdict(&pts), verdict(&scaled));
    }

    #[test]
    fn transversality_is_symmetric(a in 0usize..3150, b in 0usize..3150) {
        prop_assume!(a != b);
        let c = curve();
        let f = c.field();
        let (x, y) = (&c.conics()[a].conic, &c.conics()[b].conic);
        prop_assert_eq!(projplane::transverse(f, x, y).unwrap(), projplane::transverse(f, y, x).unwrap());
        let pattern = projplane::intersection_pattern(f, x, y).unwrap();
        prop_assert_eq!(pattern.iter().enumerate().map(|(m, n)| (m + 1) * n).sum::<usize>(), 4);
    }

    #[test]
    fn graph6_round_trip(n in 0usize..80, seed in any::<u64>()) {
        // a cheap deterministic edge pattern from the seed
        let g = Graph::from_fn(n, |u, v| (seed.rotate_left((u * 7 + v * 13) as u32 % 64) ^ (u * v) as u64) & 1 == 1);
        let text = graphs::to_graph6(&g);
        let back = graphs::from_graph6(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(graphs::to_graph6(&back), text);
    }
}

#[test]
fn malformed_graph6_is_rejected() {
    assert!(graphs::from_graph6("").is_err());
    assert!(graphs::from_graph6("D?").is_err());
    assert!(graphs::from_graph6("A\u{7f}").is_err());
}
