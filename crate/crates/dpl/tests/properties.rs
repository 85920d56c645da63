use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use dpl::catalog;
use dpl::chirotope::Chirotope;
use dpl::cocycle::{CocycleLabel, Token};
use dpl::mutation::{self, EnumerateOptions, MutationMove};
use dpl::{Arrangement, SignedIndex, SignedPermutation};

fn signed_perm(bases: Vec<u32>) -> impl Strategy<Value = SignedPermutation> {
    let n = bases.len();
    (Just(bases).prop_shuffle(), proptest::collection::vec(any::<bool>(), n)).prop_map(move |(imgs, signs)| {
        let domain: Vec<u32> = (1..=n as u32).collect();
        let images: Vec<SignedIndex> = imgs.iter().zip(signs).map(|(&b, s)| SignedIndex::new(b, s)).collect();
        SignedPermutation::from_images(&domain, &images).unwrap()
    })
}

fn fixture() -> impl Strategy<Value = Arrangement> {
    prop::sample::select(vec!["C04", "C15", "C25_1", "C64", "M1", "M2", "Upsilon", "Example2Right"])
        .prop_map(|n| catalog::arrangement(n).unwrap())
}

fn token() -> impl Strategy<Value = Token> {
    prop_oneof![
        (1u32..5, any::<bool>()).prop_map(|(base, negative)| Token::Index { base, negative }),
        Just(Token::Touch),
    ]
}

fn label() -> impl Strategy<Value = CocycleLabel> {
    proptest::collection::vec(
        (1u32..5, any::<bool>(), proptest::collection::vec(token(), 0..6)).prop_map(|(b, n, mut rest)| {
            rest.insert(0, Token::Index { base: b, negative: n });
            rest
        }),
        1..4,
    )
    .prop_map(|parts| CocycleLabel::new(parts).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn act_is_a_group_action((a, g, h) in fixture().prop_flat_map(|a| {
        let bases: Vec<u32> = (1..=a.n() as u32).collect();
        (Just(a), signed_perm(bases.clone()), signed_perm(bases))
    })) {
        let id = SignedPermutation::identity(a.indices());
        prop_assert_eq!(a.act(&id).unwrap(), a.clone());
        let lhs = a.act(&g).unwrap().act(&h).unwrap();
        let rhs = a.act(&h.compose(&g).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(a.act(&g).unwrap().act(&g.inverse()).unwrap(), a.clone());
        prop_assert_eq!(a.act(&g).unwrap().genus(), a.genus());
        prop_assert_eq!(a.act(&g).unwrap().face_vector(), a.face_vector());
    }

    #[test]
    fn restriction_commutes_with_act(g in signed_perm(vec![1, 2, 3, 4]), drop in 1u32..5) {
        let a = catalog::arrangement("M2").unwrap();
        let sub: Vec<u32> = (1..5).filter(|&x| x != drop).collect();
        let imgs: Vec<SignedIndex> = sub.iter().map(|&b| g.apply(SignedIndex::pos(b)).unwrap()).collect();
        let g_sub = SignedPermutation::from_images(&sub, &imgs).unwrap();
        let mut target: Vec<u32> = imgs.iter().map(|s| s.base).collect();
        target.sort_unstable();
        let lhs = a.act(&g).unwrap().restriction(&target).unwrap();
        let rhs = a.restriction(&sub).unwrap().act(&g_sub).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn chirotope_is_equivariant(g in signed_perm(vec![1, 2, 3, 4])) {
        for name in ["M1", "M2", "C64x4"] {
            let a = catalog::arrangement(name).unwrap();
            let chi = Chirotope::of(&a).unwrap();
            prop_assert_eq!(chi.act(&g).unwrap(), Chirotope::of(&a.act(&g).unwrap()).unwrap());
        }
    }

    #[test]
    fn text_round_trip(a in fixture(), g in signed_perm(vec![1, 2, 3])) {
        let b = if a.n() == 3 { a.act(&g).unwrap() } else { a };
        prop_assert_eq!(Arrangement::parse(&b.to_text()).unwrap(), b);
    }

    #[test]
    fn overline_reversal_is_an_involution(l in label()) {
        let r = l.overline_reversed();
        prop_assert_eq!(r.overline_reversed(), l.clone());
        prop_assert_eq!(r.normalize(), l.clone());
        prop_assert_eq!(l.normalize(), l.clone());
        let reparsed: CocycleLabel = l.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, l);
    }

    #[test]
    fn label_action_is_invertible(l in label(), g in signed_perm(vec![1, 2, 3, 4])) {
        prop_assert_eq!(l.act(&g).unwrap().act(&g.inverse()).unwrap(), l);
    }
}

/// Random walk over split and merge moves; every move must be undone by a
/// move of the other kind.
#[test]
fn merge_split_inverse_fuzz() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let seeds = [Arrangement::cyclic_thin(3).unwrap(), Arrangement::cyclic_thin(4).unwrap()];
    let mut a = seeds[0].clone();
    let mut moves = 0;
    while moves < 10_000 {
        if rng.gen_ratio(1, 50) {
            a = seeds[rng.gen_range(0..2)].clone();
        }
        let mut options = mutation::merges(&a);
        options.extend(mutation::splits(&a));
        if options.is_empty() {
            a = seeds[0].clone();
            continue;
        }
        let (mv, b) = options.swap_remove(rng.gen_range(0..options.len()));
        assert_eq!(mutation::apply(&a, &mv).unwrap(), b);
        let back = match mv {
            MutationMove::Merge { .. } => mutation::splits(&b).into_iter().any(|(_, c)| c == a),
            MutationMove::Split { .. } => mutation::merges(&b).into_iter().any(|(_, c)| c == a),
            MutationMove::Flip { .. } => unreachable!(),
        };
        assert!(back, "{mv:?} not undone on\n{}", a.to_text());
        moves += 1;
        if b.genus() == 1 {
            a = b;
        }
    }
}

#[test]
fn enumeration_is_order_independent() {
    for simple_only in [true, false] {
        let run = |seed| {
            let opts = EnumerateOptions { simple_only, shuffle_seed: Some(seed), ..Default::default() };
            mutation::explore(Arrangement::cyclic_thin(3).unwrap(), &opts).keys()
        };
        let a: BTreeSet<Vec<u8>> = run(1);
        assert_eq!(a, run(2));
    }
}
