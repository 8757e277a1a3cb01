//! Radical chains, their normalizations and the associated group chains.

use galois_kit::expr::parse_poly;
use galois_kit::galois::galois_group;
use galois_kit::permgroup::EmbeddingTarget;
use galois_kit::radical::{
    associated_group_chain, layer_embeddings, normalize_chain, realize_chain, verify_nested_normal_radical,
    RadicalSpec,
};
use galois_kit::splitting::splitting_field;
use galois_kit::Config;

fn specs(raw: &[(u32, &str)]) -> Vec<RadicalSpec> {
    raw.iter().map(|&(k, b)| RadicalSpec::new(k, b)).collect()
}

const CORPUS: &[&[(u32, &str)]] = &[
    &[(2, "2")],
    &[(3, "2")],
    &[(2, "2"), (2, "1 + r1")],
    &[(2, "3"), (3, "r1")],
    &[(4, "2")],
    &[(2, "-1"), (2, "r1")],
];

#[test]
fn normalized_towers_pass_every_condition() {
    let config = Config::default();
    for raw in CORPUS {
        let chain = realize_chain(&specs(raw), &config).unwrap();
        let t = normalize_chain(&chain, &config).unwrap();
        let report = verify_nested_normal_radical(&t, &config).unwrap();
        assert!(report.all_passed(), "{raw:?}: {:?}", report.failures().collect::<Vec<_>>());
        assert_eq!(t.n(), chain.lcm());
        // each E_i is normal: its Galois group has order [E_i : Q]
        for f in t.fields() {
            assert_eq!(galois_group(f).unwrap().order(), f.degree(), "{raw:?}");
        }
        // R_i embeds: the image of a_i is a k_i-th root of the image of b_i
        for (img, stage) in t.images().iter().zip(chain.stages()) {
            assert_eq!(img.root.pow(stage.k().into()), img.radicand, "{raw:?}");
        }
    }
}

#[test]
fn layers_are_abelian_and_embed() {
    let config = Config::default();
    for raw in CORPUS {
        let chain = realize_chain(&specs(raw), &config).unwrap();
        let t = normalize_chain(&chain, &config).unwrap();
        for l in layer_embeddings(&t).unwrap() {
            let emb = l.embedding.as_ref().unwrap_or_else(|| panic!("{raw:?}: {} has no embedding", l.layer));
            assert_eq!(emb.images.len(), l.group_order);
            // injective: distinct images
            let mut imgs: Vec<&Vec<u64>> = emb.images.iter().map(|(_, v)| v).collect();
            imgs.sort();
            imgs.dedup();
            assert_eq!(imgs.len(), l.group_order);
            // homomorphism on all pairs
            for (p, x) in &emb.images {
                for (q, y) in &emb.images {
                    let pq = p.compose(q);
                    let z = &emb.images.iter().find(|(r, _)| *r == pq).unwrap().1;
                    assert_eq!(*z, l.target.op(x, y));
                }
            }
            if let EmbeddingTarget::Units(n) = l.target {
                assert_eq!(n, t.n().max(2));
            }
        }
    }
}

#[test]
fn associated_chains_are_certified() {
    let config = Config::default();
    for raw in CORPUS {
        let chain = realize_chain(&specs(raw), &config).unwrap();
        let t = normalize_chain(&chain, &config).unwrap();
        let ac = associated_group_chain(&t).unwrap();
        assert!(ac.certificate.accepted(), "{raw:?}");
        assert_eq!(ac.groups.first().unwrap().order(), t.top().degree());
        assert!(ac.groups.last().unwrap().is_trivial());
    }
}

#[test]
fn polynomials_solved_by_a_chain_have_solvable_groups() {
    // each polynomial has all of its roots in the top field of the chain
    let cases: &[(&[(u32, &str)], &str)] = &[
        (&[(3, "2")], "x^3 - 2"),
        (&[(2, "2"), (2, "1 + r1")], "x^4 - 2*x^2 - 1"),
        (&[(4, "2")], "x^4 - 2"),
        (&[(2, "3"), (3, "r1")], "x^6 - 3"),
    ];
    let config = Config::default();
    for (raw, p) in cases {
        let chain = realize_chain(&specs(raw), &config).unwrap();
        let t = normalize_chain(&chain, &config).unwrap();
        let p = parse_poly(p).unwrap();
        let top = t.top().field();
        let lifted = top.lift_poly(&p);
        let f = galois_kit::numfield::factor_over_number_field(&lifted, &config).unwrap();
        assert!(f.factors().iter().all(|(h, _)| h.deg() == 1), "{p} does not split");
        let g = galois_group(&splitting_field(&p, &config).unwrap()).unwrap();
        assert!(g.perm_group().is_solvable().0, "{p}");
    }
}

#[test]
fn nested_square_root_tower_has_the_expected_shape() {
    let config = Config::default();
    let chain = realize_chain(&specs(&[(2, "2"), (2, "1 + r1")]), &config).unwrap();
    let t = normalize_chain(&chain, &config).unwrap();
    assert_eq!(t.degrees(), vec![1, 1, 2, 8]);
    assert_eq!(t.top().degree(), 8);
    let layer = t.layers().last().unwrap().rational_polynomial().unwrap().unwrap();
    assert_eq!(layer, parse_poly("x^4 - 2*x^2 - 1").unwrap());
}
