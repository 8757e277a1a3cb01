//! Permutation-group facts checked against independent counts.

use galois_kit::permgroup::{aut_cyclic, solvable_via_abelian_chain, unit_group, PermGroup, Permutation};
use proptest::prelude::*;

fn orders(series: &[PermGroup]) -> Vec<usize> {
    series.iter().map(PermGroup::order).collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

#[test]
fn s4_derived_series() {
    let s4 = PermGroup::symmetric(4).unwrap();
    let (solvable, series) = s4.is_solvable();
    assert!(solvable);
    assert_eq!(orders(&series), vec![24, 12, 4, 1]);
    assert_eq!(series[1], PermGroup::alternating(4).unwrap());
    // the order-4 term is the Klein group: identity plus the three double transpositions
    assert!(series[2].elements().iter().all(|p| p.is_identity() || p.cycle_type() == vec![2, 2]));
    assert!(solvable_via_abelian_chain(&series).unwrap().accepted());
}

#[test]
fn a5_is_perfect() {
    let a5 = PermGroup::alternating(5).unwrap();
    assert_eq!(a5.derived_subgroup(), a5);
    let (solvable, series) = PermGroup::symmetric(5).unwrap().is_solvable();
    assert!(!solvable);
    assert_eq!(orders(&series), vec![120, 60, 60]);
}

#[test]
fn unit_group_orders_are_euler_phi() {
    assert!(unit_group(1).is_err());
    for n in 2..=30u64 {
        let phi = (1..=n).filter(|&k| gcd(k, n) == 1).count();
        assert_eq!(unit_group(n).unwrap().order(), phi, "U({n})");
        let (_, auts) = aut_cyclic(n).unwrap();
        assert_eq!(auts.len(), phi, "Aut(Z/{n})");
    }
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #[test]
    fn generated_groups_have_lagrange_orders(a in perm(5), b in perm(5)) {
        let g = PermGroup::generate(5, &[a.clone(), b]).unwrap();
        prop_assert_eq!(120 % g.order(), 0);
        let c = PermGroup::generate(5, &[a]).unwrap();
        prop_assert_eq!(g.order() % c.order(), 0);
        let d = g.derived_subgroup();
        prop_assert!(d.is_normal_in(&g).unwrap());
    }

    #[test]
    fn composition_is_associative(a in perm(6), b in perm(6), c in perm(6)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
    }
}
