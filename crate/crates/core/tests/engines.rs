use proptest::prelude::*;
use seaweed::kirillov::{index_via_form, SeaweedBasis};
use seaweed::reduction::{self, parabolic_index, seaweed_to_parabolic, Strategy as Rewrites};
use seaweed::search::enumerate_compositions;
use seaweed::{comp, Composition, Meander};

fn composition_of(n: u64) -> impl Strategy<Value = Composition> {
    let cuts = if n > 1 { (1u64 << (n - 1)) - 1 } else { 0 };
    (0..=cuts).prop_map(move |mask| {
        let mut parts = Vec::new();
        let mut run = 0;
        for j in 1..n {
            run += 1;
            if mask >> (j - 1) & 1 == 1 {
                parts.push(run);
                run = 0;
            }
        }
        parts.push(run + 1);
        Composition::normalize(&parts).unwrap()
    })
}

fn composition(max_n: u64) -> impl Strategy<Value = Composition> {
    (1..=max_n).prop_flat_map(composition_of)
}

fn pair(max_n: u64) -> impl Strategy<Value = (Composition, Composition)> {
    (1..=max_n).prop_flat_map(|n| (composition_of(n), composition_of(n)))
}

proptest! {
    #[test]
    fn engines_agree(a in composition(40)) {
        let m = Meander::parabolic(&a).unwrap();
        prop_assert_eq!(m.index(), parabolic_index(&a));
        prop_assert_eq!(
            parabolic_index(&a),
            reduction::index_via_reduction_with(&a, Rewrites::Shortcut).index
        );
    }

    #[test]
    fn seaweed_engines_agree((a, b) in pair(30)) {
        let m = Meander::new(&a, &b).unwrap();
        let embedded = seaweed_to_parabolic(&a, &b).unwrap();
        prop_assert_eq!(m.index(), parabolic_index(&embedded));
        prop_assert_eq!(m.index(), Meander::new(&b, &a).unwrap().index());
        prop_assert_eq!(
            m.equivalence_signature().iter().sum::<u64>(),
            m.index()
        );
    }

    #[test]
    fn index_is_at_least_one_and_at_most_n((a, b) in pair(30)) {
        let i = Meander::new(&a, &b).unwrap().index();
        prop_assert!(i >= 1 && i <= a.n());
    }

    #[test]
    fn scaling_multiplies_the_index(a in composition(14), alpha in 1u64..6) {
        let scaled = a.scale(alpha).unwrap();
        prop_assert_eq!(parabolic_index(&scaled), alpha * parabolic_index(&a));
        prop_assert_eq!(parabolic_index(&a) % a.gcd_all(), 0);
    }

    #[test]
    fn oracle_matches((a, b) in pair(6), seed in any::<u64>()) {
        let m = Meander::new(&a, &b).unwrap().index();
        prop_assert_eq!(index_via_form(&a, &b, 3, seed).unwrap(), m);
    }

    #[test]
    fn basis_dimension_is_symmetric((a, b) in pair(12)) {
        let sq = |c: &Composition| c.parts().iter().map(|x| x * x).sum::<u64>();
        let d = SeaweedBasis::new(&a, &b).unwrap().dim() as u64;
        prop_assert_eq!(d, SeaweedBasis::new(&b, &a).unwrap().dim() as u64);
        prop_assert_eq!(2 * d, sq(&a) + sq(&b));
    }
}

#[test]
fn large_compositions_reduce_quickly() {
    let c = comp![1_000_000_007, 998_244_353, 123_456_789, 987_654_321];
    let trace = reduction::index_via_reduction(&c);
    assert!(trace.index >= 1);
    assert!(trace.steps.len() < 200);
}

#[test]
fn oracle_on_every_small_pair() {
    for n in 1..=5 {
        let all: Vec<Composition> = enumerate_compositions(n).collect();
        for a in &all {
            for b in &all {
                let m = Meander::new(a, b).unwrap().index();
                assert_eq!(index_via_form(a, b, 2, 7).unwrap(), m, "{a}|{b}");
            }
        }
    }
}

#[test]
fn parabolic_and_opposite_dimensions() {
    for n in 1..=8 {
        for a in enumerate_compositions(n) {
            let single = Composition::single(n).unwrap();
            let p = SeaweedBasis::new(&a, &single).unwrap().dim() as u64;
            let opposite = SeaweedBasis::new(&single, &a).unwrap().dim() as u64;
            let sq: u64 = a.parts().iter().map(|x| x * x).sum();
            assert_eq!(p + opposite, n * n + sq, "{a}");
        }
    }
}
