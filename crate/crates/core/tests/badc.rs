use badc::badc::{canonicalize, classify, expressiveness, expressiveness_cycle, BadcSpec, Cycle, DoubleCycle, Kind};
use badc::network::{cycle_polarity, Configuration, Sign};
use proptest::prelude::*;

const P: Sign = Sign::Positive;
const N: Sign = Sign::Negative;

/// Checks that `relabel` carries every asynchronous step of the source network
/// onto the matching step of the canonical one, evaluating both networks
/// directly.
fn assert_isomorphic(spec: &BadcSpec) {
    let source = spec.network().unwrap();
    let (canon, relabel) = canonicalize(spec).unwrap();
    assert_eq!(canon.kind(), classify(spec).unwrap());
    let target = canon.network();
    let len = source.count();
    let mut images = std::collections::BTreeSet::new();
    for x in Configuration::all(len).unwrap() {
        let rx = relabel.apply(&x);
        images.insert(rx.bits());
        for i in 0..len {
            let y = source.async_step(&x, i).unwrap();
            let ry = target.async_step(&rx, relabel.map_automaton(i)).unwrap();
            assert_eq!(relabel.apply(&y), ry, "step {i} from {x:?}");
        }
    }
    assert_eq!(images.len(), 1 << len);
}

#[test]
fn canonical_arc_signs() {
    for (kind, into_hub) in [
        (Kind::Positive, [P, P]),
        (Kind::Mixed, [N, P]),
        (Kind::Negative, [N, N]),
    ] {
        let d = DoubleCycle::canonical(kind, 3, 2).unwrap();
        let arcs = d.network().interaction_graph().unwrap();
        assert_eq!(arcs.len(), 5);
        let l = d.layout();
        let last_left = l.index(Cycle::Left, 2);
        let last_right = l.index(Cycle::Right, 1);
        for a in arcs {
            let expected = match (a.from, a.to) {
                (f, 0) if f == last_left => into_hub[0],
                (f, 0) if f == last_right => into_hub[1],
                _ => P,
            };
            assert_eq!(a.sign, expected, "{a:?}");
        }
        let polarity = cycle_polarity(&d.network().interaction_graph().unwrap());
        assert_eq!(polarity.positive, kind != Kind::Negative);
        assert_eq!(polarity.negative, kind != Kind::Positive);
    }
}

#[test]
fn canonical_step_examples() {
    let d = DoubleCycle::canonical(Kind::Negative, 2, 2).unwrap();
    let x = d.parse("(00,00)").unwrap();
    assert!(d.network().eval_local(&x, 0).unwrap());
    assert_eq!(d.format(&d.network().async_step(&x, 0).unwrap()), "(10,10)");
    let d = DoubleCycle::canonical(Kind::Positive, 4, 2).unwrap();
    let x = d.parse("(1000,10)").unwrap();
    assert_eq!(d.format(&d.network().async_step(&x, 1).unwrap()), "(1100,10)");
}

#[test]
fn classify_by_sign_products() {
    let spec = BadcSpec::with_signs(vec![N, N, P], vec![P, P]).unwrap();
    assert_eq!(classify(&spec).unwrap(), Kind::Positive);
    let spec = BadcSpec::with_signs(vec![P, P, P], vec![N, P]).unwrap();
    assert_eq!(classify(&spec).unwrap(), Kind::Mixed);
    let spec = BadcSpec::with_signs(vec![P, N, P], vec![P, N]).unwrap();
    assert_eq!(classify(&spec).unwrap(), Kind::Negative);
    assert!(classify(&BadcSpec::canonical(Kind::Mixed, 2, 2).unwrap()).is_err());
}

#[test]
fn canonical_spec_relabels_to_identity() {
    let spec = BadcSpec::with_signs(vec![P, P, N], vec![P, N]).unwrap();
    let (_, relabel) = canonicalize(&spec).unwrap();
    assert!(relabel.is_identity());
}

#[test]
fn positive_with_two_inner_negations() {
    let spec = BadcSpec::with_signs(vec![N, N, P], vec![P, P, P]).unwrap();
    let (canon, relabel) = canonicalize(&spec).unwrap();
    assert_eq!(canon.kind(), Kind::Positive);
    let l = spec.layout();
    assert_eq!(relabel.flips.iter().filter(|&&f| f).count(), 1);
    assert!(relabel.flips[l.index(Cycle::Left, 1)]);
    assert_isomorphic(&spec);
}

#[test]
fn negative_with_scattered_negations() {
    assert_isomorphic(&BadcSpec::with_signs(vec![N, P, P], vec![P, N]).unwrap());
    assert_isomorphic(&BadcSpec::with_signs(vec![P, N, N], vec![N, N]).unwrap());
}

#[test]
fn mixed_with_negative_right_cycle_swaps() {
    let spec = BadcSpec::with_signs(vec![P, P, P], vec![P, N]).unwrap();
    let (canon, relabel) = canonicalize(&spec).unwrap();
    assert!(relabel.swap_cycles);
    assert_eq!((canon.layout().n, canon.layout().m), (2, 3));
    assert_isomorphic(&spec);
}

#[test]
fn expressiveness_examples() {
    assert_eq!(expressiveness_cycle(&[false, false, false]), 0);
    assert_eq!(expressiveness_cycle(&[true, false, true, false]), 2);
    assert_eq!(expressiveness_cycle(&[true, false, false]), 1);
    let d = DoubleCycle::canonical(Kind::Negative, 4, 4).unwrap();
    let x = d.parse("(1010,1010)").unwrap();
    assert_eq!(expressiveness(&d.layout(), &x).unwrap(), 4);
}

#[test]
fn pair_syntax_rejects_mismatched_hubs() {
    let d = DoubleCycle::canonical(Kind::Negative, 3, 2).unwrap();
    assert!(d.parse("(101,01)").is_err());
    assert!(d.parse("(10,10)").is_err());
    assert_eq!(d.format(&d.parse("(101,10)").unwrap()), "(101,10)");
}

fn signs(max: usize) -> impl Strategy<Value = Vec<Sign>> {
    prop::collection::vec(prop_oneof![Just(P), Just(N)], 1..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonicalization_is_an_isomorphism(left in signs(4), right in signs(4)) {
        assert_isomorphic(&BadcSpec::with_signs(left, right).unwrap());
    }

    #[test]
    fn expressiveness_is_bounded_and_rotation_invariant(word in prop::collection::vec(any::<bool>(), 1..16), r in 0usize..16) {
        let e = expressiveness_cycle(&word);
        prop_assert!(e <= word.len() / 2);
        let mut rotated = word.clone();
        rotated.rotate_left(r % word.len());
        prop_assert_eq!(expressiveness_cycle(&rotated), e);
        if word.len() % 2 == 0 {
            let alt: Vec<bool> = (0..word.len()).map(|i| i % 2 == 0).collect();
            prop_assert_eq!(expressiveness_cycle(&alt), word.len() / 2);
        }
    }

    #[test]
    fn pair_text_round_trips(kind in prop_oneof![Just(Kind::Positive), Just(Kind::Negative)], n in 1usize..7, m in 1usize..7, bits in any::<u64>()) {
        let d = DoubleCycle::canonical(kind, n, m).unwrap();
        let len = d.layout().automata();
        let x = Configuration::from_bits(bits & ((1 << len) - 1), len).unwrap();
        prop_assert_eq!(d.parse(&d.format(&x)).unwrap(), x);
    }
}
