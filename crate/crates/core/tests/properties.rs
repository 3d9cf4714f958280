use abelcanon::oracle::{
    apply, component_orbits, component_orbits_by_enumeration, elementary_generators,
};
use abelcanon::{
    are_equivalent, canonicalize, count_by_support_size, count_classes, count_classes_rf,
    count_last_nonzero, element_order, enumerate_representatives, gaps, is_representative,
    mixed_orbit, Element, ElementOrder, Group, Layer, Limits, PrimaryComponent, PrimarySchema,
    RepeatFreeVector,
};
use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

const MODULI: &[u64] = &[2, 3, 4, 5, 6, 8, 9, 10, 12, 16, 18, 25, 27, 32, 36, 64];

fn group_text(moduli: &[u64], free: usize) -> String {
    let mut parts: Vec<String> = moduli.iter().map(|m| format!("Z{m}")).collect();
    parts.extend(std::iter::repeat("Z".to_string()).take(free));
    if parts.is_empty() {
        "Z1".into()
    } else {
        parts.join(" x ")
    }
}

/// A group with up to four finite factors and `free` free factors, plus a
/// random element of it given in user coordinates.
fn group_and_element(
    free: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = (Group, Element)> {
    (
        prop::collection::vec(prop::sample::select(MODULI), 1..=4),
        free,
    )
        .prop_flat_map(|(moduli, free)| {
            let group = Group::parse(&group_text(&moduli, free)).unwrap();
            let n = moduli.len() + free;
            (Just(group), prop::collection::vec(-1000i64..1000, n))
        })
        .prop_map(|(group, values)| {
            let values: Vec<BigInt> = values.into_iter().map(BigInt::from).collect();
            let e = group.element_from_user(&values);
            (group, e)
        })
}

fn torsion_u64(e: &Element) -> Vec<Vec<u64>> {
    e.torsion
        .iter()
        .map(|t| t.iter().map(|x| x.to_u64().unwrap()).collect())
        .collect()
}

fn orders_divide(a: &ElementOrder, b: &ElementOrder) -> bool {
    match (a, b) {
        (_, ElementOrder::Infinite) => true,
        (ElementOrder::Infinite, ElementOrder::Finite(_)) => false,
        (ElementOrder::Finite(a), ElementOrder::Finite(b)) => (b % a).is_zero(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_form_is_idempotent((group, e) in group_and_element(0..=2)) {
        let schema = group.schema();
        let c = canonicalize(&e, schema).canonical;
        let again = canonicalize(&c.to_element(schema), schema).canonical;
        prop_assert_eq!(c, again);
    }

    #[test]
    fn canonical_form_preserves_order((group, e) in group_and_element(0..=2)) {
        let schema = group.schema();
        let c = canonicalize(&e, schema).canonical;
        prop_assert_eq!(element_order(&e, schema), element_order(&c.to_element(schema), schema));
    }

    #[test]
    fn finite_canonical_forms_are_representatives((group, e) in group_and_element(0..=0)) {
        let c = canonicalize(&e, group.schema()).canonical;
        prop_assert!(c.conforming);
        prop_assert!(is_representative(&c.components, &c.d));
    }

    #[test]
    fn multiples_have_dividing_order((group, e) in group_and_element(0..=1), n in -50i64..50) {
        let schema = group.schema();
        let ne = e.scale(&BigInt::from(n), schema);
        prop_assert!(orders_divide(&element_order(&ne, schema), &element_order(&e, schema)));
    }

    #[test]
    fn trace_replays_to_canonical_form((group, e) in group_and_element(0..=2)) {
        let schema = group.schema();
        let result = canonicalize(&e, schema);
        let replayed = result.trace.replay(&e, schema).unwrap();
        prop_assert_eq!(replayed, result.canonical.to_element(schema));
    }

    #[test]
    fn user_coordinates_round_trip((group, e) in group_and_element(0..=2)) {
        let user = group.user_coordinates(&e);
        prop_assert_eq!(group.element_from_user(&user), e.clone());
        for (x, m) in user.iter().zip(group.user_moduli()) {
            if let Some(m) = m {
                prop_assert!(x.sign() != num_bigint::Sign::Minus && *x < BigInt::from(m));
            }
        }
    }

    #[test]
    fn canonical_form_is_automorphism_invariant(
        (group, e) in group_and_element(0..=0),
        word in prop::collection::vec(any::<prop::sample::Index>(), 0..12),
    ) {
        let schema = group.schema();
        let gens: Vec<_> = schema.components.iter().map(elementary_generators).collect();
        let mut t = torsion_u64(&e);
        for (step, pick) in word.iter().enumerate() {
            let c = step % t.len();
            if gens[c].is_empty() {
                continue;
            }
            t[c] = apply(pick.get(&gens[c]), &t[c]).unwrap();
        }
        let image = Element::from_parts(t, vec![]);
        prop_assert_eq!(
            canonicalize(&e, schema).canonical,
            canonicalize(&image, schema).canonical
        );
        prop_assert!(are_equivalent(&e, &image, schema).equivalent);
    }

    #[test]
    fn canonical_form_is_invariant_under_mixed_automorphisms(
        (group, e) in group_and_element(1..=1),
        moves in prop::collection::vec((any::<prop::sample::Index>(), any::<bool>()), 0..8),
    ) {
        // translations t ↦ t + z·e_k and the sign flip (t, z) ↦ (t, -z)
        let schema = group.schema();
        let mut t = torsion_u64(&e);
        let mut z = e.free[0].to_i64().unwrap();
        for (pick, flip) in moves {
            if flip {
                z = -z;
                continue;
            }
            let slots: Vec<(usize, usize)> = t
                .iter()
                .enumerate()
                .flat_map(|(c, v)| (0..v.len()).map(move |k| (c, k)))
                .collect();
            let &(c, k) = pick.get(&slots);
            let component = &schema.components[c];
            let m = component.modulus(component.slot_exponents()[k]).to_u64().unwrap();
            t[c][k] = (t[c][k] + z.rem_euclid(m as i64) as u64) % m;
        }
        let image = Element::from_parts(t, vec![z]);
        prop_assert_eq!(
            canonicalize(&e, schema).canonical,
            canonicalize(&image, schema).canonical
        );
    }

    #[test]
    fn basic_reductions_are_confluent(
        exps in prop::collection::btree_set(1u32..8, 1..=5),
        raw in prop::collection::vec(prop::option::of(0u32..8), 5),
        order in prop::collection::vec(any::<prop::sample::Index>(), 0..32),
    ) {
        let exps: Vec<u32> = exps.into_iter().collect();
        let entries: Vec<Option<u32>> = exps
            .iter()
            .zip(&raw)
            .map(|(&r, l)| l.map(|l| l % r))
            .collect();
        let v = RepeatFreeVector::new(3, exps, entries).unwrap();
        let mut expect = v.clone();
        expect.reduce_fully();
        let mut w = v.clone();
        for pick in order {
            let pivots = w.nontrivial_pivots();
            if pivots.is_empty() {
                break;
            }
            w.reduce_about(*pick.get(&pivots)).unwrap();
        }
        w.reduce_fully();
        prop_assert_eq!(w, expect);
    }

    #[test]
    fn class_count_ignores_multiplicities(
        layers in prop::collection::btree_map(1u32..7, 1u32..4, 1..=4),
    ) {
        let with: Vec<Layer> = layers
            .iter()
            .map(|(&exponent, &multiplicity)| Layer { exponent, multiplicity })
            .collect();
        let without: Vec<Layer> = layers
            .keys()
            .map(|&exponent| Layer { exponent, multiplicity: 1 })
            .collect();
        let a = count_classes_rf(&gaps(&PrimaryComponent::new(5, with)));
        let b = count_classes_rf(&gaps(&PrimaryComponent::new(5, without)));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn histograms_sum_to_class_count(exps in prop::collection::btree_set(1u32..9, 1..=5)) {
        let layers: Vec<Layer> = exps.iter().map(|&exponent| Layer { exponent, multiplicity: 1 }).collect();
        let g = gaps(&PrimaryComponent::new(2, layers));
        let total = count_classes_rf(&g);
        let by_support: BigUint = count_by_support_size(&g).into_iter().sum();
        prop_assert_eq!(&by_support, &total);
        // zero or last nonzero entry in the first layer: r_1 + 1 classes
        let mut by_last = BigUint::from(g.r1) + 1u32;
        for j in 1..g.layers() {
            by_last += count_last_nonzero(&g, j).unwrap();
        }
        prop_assert_eq!(by_last, total);
    }
}

fn schema(text: &str) -> PrimarySchema {
    Group::parse(text).unwrap().schema().clone()
}

#[test]
fn generator_closure_matches_full_enumeration() {
    let limits = Limits::default();
    for text in [
        "Z4xZ2", "Z8xZ2", "Z8xZ4", "Z4xZ4", "Z2xZ4xZ8", "Z2xZ2xZ4", "Z9xZ3", "Z27xZ3", "Z25xZ5",
        "Z16xZ2",
    ] {
        let s = schema(text);
        let c = &s.components[0];
        let closure = component_orbits(c, &limits).unwrap();
        let enumerated = component_orbits_by_enumeration(c, &limits).unwrap();
        assert_eq!(closure, enumerated, "{text}");
    }
}

#[test]
fn enumerated_representatives_are_canonical_and_counted() {
    for text in [
        "Z2xZ8",
        "Z2xZ4xZ16",
        "Z8^3",
        "Z12",
        "Z4xZ8xZ9xZ27",
        "Z2xZ8xZ32xZ128",
    ] {
        let s = schema(text);
        let reps = enumerate_representatives(&s).unwrap();
        assert_eq!(
            BigUint::from(reps.len()),
            count_classes(&s).unwrap().total,
            "{text}"
        );
        for r in &reps {
            assert!(r.conforming);
            assert_eq!(&canonicalize(&r.to_element(&s), &s).canonical, r, "{text}");
        }
        let mut sorted = reps.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), reps.len(), "{text}");
    }
}

#[test]
fn last_nonzero_counts_match_enumeration() {
    for exps in [
        vec![1, 2, 4],
        vec![2, 3, 5],
        vec![1, 3, 4, 7],
        vec![1, 2, 3, 4, 5],
    ] {
        let layers: Vec<Layer> = exps
            .iter()
            .map(|&exponent| Layer {
                exponent,
                multiplicity: 1,
            })
            .collect();
        let component = PrimaryComponent::new(3, layers);
        let g = gaps(&component);
        let reps = abelcanon::counting::enumerate_component(&component);
        for j in 1..g.layers() {
            let found = reps
                .iter()
                .filter(|v| v.support().last() == Some(&j))
                .count();
            assert_eq!(
                BigUint::from(found),
                count_last_nonzero(&g, j).unwrap(),
                "{exps:?} j={j}"
            );
        }
    }
}

#[test]
fn mixed_orbits_are_symmetric_in_sign() {
    let limits = Limits::default();
    let s = schema("Z2xZ8");
    for z in 1..=12i64 {
        for t in [
            vec![vec![0, 0]],
            vec![vec![1, 0]],
            vec![vec![0, 2]],
            vec![vec![1, 4]],
        ] {
            let plus = mixed_orbit(&t, z, &s, &limits).unwrap();
            let minus = mixed_orbit(&t, -z, &s, &limits).unwrap();
            assert_eq!(plus, minus);
        }
    }
}

#[test]
fn worked_counts() {
    for (text, total) in [("Z2xZ8", 6u32), ("Z2xZ4xZ16", 12), ("Z8^3", 4), ("Z12", 6)] {
        assert_eq!(
            count_classes(&schema(text)).unwrap().total,
            BigUint::from(total),
            "{text}"
        );
    }
    assert!(count_classes(&schema("Z4xZ")).is_err());
}
