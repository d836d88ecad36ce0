use std::sync::OnceLock;

use proptest::prelude::*;

use unital_graphs::hermitian::CurveData;
use unital_graphs::pgu::{a7_generator_matrices, multiply_matrices, Elem, Pgu};
use unital_graphs::FieldCtx;

struct Fixture {
    curve: CurveData,
    group: Pgu,
}

fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let curve = CurveData::build(&FieldCtx::new(5).unwrap()).unwrap();
        let group = Pgu::enumerate(&curve).unwrap();
        Fixture { curve, group }
    })
}

fn element() -> impl Strategy<Value = Elem> {
    (0u32..378000).prop_map(|e| e)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn permutation_product_matches_matrix_product(a in element(), b in element()) {
        let g = &fixture().group;
        // mul(a, b) applies b first
        let product = multiply_matrices(g.field(), &g.matrix(a), &g.matrix(b));
        prop_assert_eq!(g.element_from_matrix(&product).unwrap(), g.mul(a, b));
        for x in [0usize, 17, 125] {
            prop_assert_eq!(g.image(g.mul(a, b), x), g.image(a, g.image(b, x)));
        }
    }

    #[test]
    fn inverses_and_orders(a in element()) {
        let g = &fixture().group;
        prop_assert_eq!(g.mul(a, g.inv(a)), g.identity());
        let order = g.element_order(a);
        prop_assert!(order > 0 && 378000 % order == 0);
    }

    #[test]
    fn action_is_compatible_with_matrices(e in element(), x in 0usize..126, conic in 0usize..3150) {
        let Fixture { curve, group: g } = fixture();
        let by_matrix = g.point_image_by_matrix(e, &curve.points()[x]).unwrap();
        prop_assert_eq!(curve.point_index(&by_matrix), Some(g.image(e, x)));
        let image = g.conic_image_by_matrix(e, &curve.conics()[conic].conic).unwrap();
        prop_assert_eq!(curve.conic_index(&image), Some(g.conic_image(curve, e, conic)));
    }
}

#[test]
fn stabilizers_are_subgroups() {
    let Fixture { curve, group: g } = fixture();
    let stab = g.stabilizer_of_conic(curve, 0);
    assert_eq!(stab.order(), 120);
    for &a in stab.elements().iter().step_by(7) {
        for &b in stab.elements().iter().step_by(11) {
            assert!(stab.contains(g.mul(a, g.inv(b))));
        }
    }
    assert_eq!(g.generated_order(&g.generators_of(&stab)), 120);
}

#[test]
fn fixed_generators_generate_a_2520_subgroup() {
    let g = &fixture().group;
    let gens: Vec<Elem> =
        a7_generator_matrices(g.field()).iter().map(|m| g.element_from_matrix(m).unwrap()).collect();
    assert_eq!(gens.len(), 5);
    assert_eq!(g.generated_order(&gens), 2520);
}

#[test]
fn larger_fields_are_rejected() {
    let curve = CurveData::build(&FieldCtx::new(7).unwrap()).unwrap();
    assert!(Pgu::enumerate(&curve).is_err());
}
