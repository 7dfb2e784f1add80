use std::sync::Arc;

use euler_trace::chi::{construct_g_rho, free_product_family, ElementRef, Evaluator, GroupExpr};
use euler_trace::fusion::{EdgeSpec, GraphOfGroups};
use euler_trace::group::zoo;
use euler_trace::ring::{augmentation_dim, hs_trace, restrict_matrix};
use euler_trace::sampling::{conjugate, random_elementary, random_graph, random_idempotent};
use euler_trace::{FiniteGroup, QExpr, Rational, Scalar};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

fn standard_group(i: usize) -> Arc<FiniteGroup> {
    let mut groups = zoo::standard();
    Arc::new(groups.swap_remove(i % groups.len()).1)
}

/// A random expression of type FP with a random finite-order element in it.
fn random_expr(rng: &mut ChaCha8Rng, depth: u32) -> (QExpr, ElementRef) {
    let leaf = depth == 0 || rng.gen_bool(0.4);
    if leaf {
        return match rng.gen_range(0..5) {
            0 => (GroupExpr::Trivial, ElementRef::Identity),
            1 => (GroupExpr::free(rng.gen_range(0..5)), ElementRef::Identity),
            2 | 3 => {
                let g = zoo::small(12).choose(rng).unwrap().clone();
                let x = rng.gen_range(0..g.order());
                (GroupExpr::finite(g), ElementRef::Elem(x))
            }
            _ => {
                let g = random_graph(rng, 12, 3, 1);
                let v = rng.gen_range(0..g.vertices().len());
                let x = rng.gen_range(0..g.vertices()[v].order());
                (GroupExpr::Graph(Arc::new(g)), ElementRef::Vertex { vertex: v, elem: x })
            }
        };
    }
    match rng.gen_range(0..3) {
        0 => {
            let (a, x) = random_expr(rng, depth - 1);
            let (b, y) = random_expr(rng, depth - 1);
            (GroupExpr::Product(vec![a, b]), ElementRef::Tuple(vec![x, y]))
        }
        1 => {
            let (a, x) = random_expr(rng, depth - 1);
            (GroupExpr::CrossZ(Box::new(a)), ElementRef::CrossZ(Box::new(x)))
        }
        _ => {
            let (a, _) = random_expr(rng, depth - 1);
            let (b, _) = random_expr(rng, depth - 1);
            (GroupExpr::free_product(a, b), ElementRef::Identity)
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hs_is_similarity_invariant(seed in any::<u64>(), gi in 0usize..6, size in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = standard_group(gi);
        let p = random_idempotent::<Rational, _>(&mut rng, &g, size, 1);
        let a = random_elementary(&mut rng, &g, size);
        let c = conjugate(&p, &a);
        prop_assert!(c.is_idempotent());
        prop_assert_eq!(hs_trace(&c).unwrap(), hs_trace(&p).unwrap());
    }

    #[test]
    fn class_sum_is_augmentation_rank(seed in any::<u64>(), gi in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = standard_group(gi);
        let p = random_idempotent::<Rational, _>(&mut rng, &g, 2, 2);
        prop_assert_eq!(hs_trace(&p).unwrap().sum(), augmentation_dim(&p).unwrap());
    }

    #[test]
    fn restriction_scales_by_centralizer_index(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = Arc::new(zoo::dihedral(4));
        let rotations = g.generated(&[g.elements().find(|&x| g.element_order(x) == 4).unwrap()]);
        let p = random_idempotent::<Rational, _>(&mut rng, &g, 2, 2);
        let r = restrict_matrix(&p, &rotations).unwrap();
        let small = hs_trace(&r.matrix).unwrap();
        let big = hs_trace(&p).unwrap();
        for (c, class) in r.subgroup.group().classes().iter().enumerate() {
            let s = r.subgroup.to_parent(class.representative);
            let index = r.centralizer_index(&g, class.representative) as i64;
            prop_assert_eq!(small.get(c), &(big.get(g.class_of(s)).clone() * q(index, 1)));
        }
    }

    #[test]
    fn fusion_class_sum_is_vertices_minus_edges(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, 24, 4, 2);
        let report = g.verify_fusion::<Rational>();
        prop_assert!(report.class_sum_ok);
        prop_assert!(report.identity_coherent);
        prop_assert!(report.rows.iter().all(|r| r.equal));
    }

    #[test]
    fn relabeling_preserves_complete_euler(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, 24, 3, 1);
        let v = rng.gen_range(0..g.vertices().len());
        let n = g.vertices()[v].order();
        let mut perm: Vec<usize> = (1..n).collect();
        perm.shuffle(&mut rng);
        perm.insert(0, 0);
        let vertices: Vec<FiniteGroup> = g
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, h)| if i == v { h.relabel(&perm).unwrap() } else { (**h).clone() })
            .collect();
        let remap = |w: usize, map: &[usize]| -> Vec<usize> {
            map.iter().map(|&x| if w == v { perm[x] } else { x }).collect()
        };
        let edges = g
            .edges()
            .iter()
            .map(|e| EdgeSpec {
                group: (*e.group).clone(),
                from: e.from,
                to: e.to,
                embed_from: remap(e.from, e.embed_from.map()),
                embed_to: remap(e.to, e.embed_to.map()),
            })
            .collect();
        let h = GraphOfGroups::new(vertices, edges).unwrap();
        let (tg, th) = (g.fusion_classes(), h.fusion_classes());
        let (eg, eh) = (g.complete_euler_char::<Rational>(&tg), h.complete_euler_char::<Rational>(&th));
        let old = &g.vertices()[v];
        let new = &h.vertices()[v];
        for x in old.elements() {
            let a = tg.class_of((v, old.class_of(x)));
            let b = th.class_of((v, new.class_of(perm[x])));
            prop_assert_eq!(eg.get(a), eh.get(b));
        }
        prop_assert_eq!(eg.sum(), eh.sum());
    }

    #[test]
    fn both_sides_agree_on_random_expressions(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (e, at) = random_expr(&mut rng, 3);
        let mut ev = Evaluator::new();
        let lhs = ev.complete_euler(&e, &at);
        let rhs = ev.chi2_centralizer(&e, &at);
        prop_assert!(lhs.is_ok(), "{:?}", lhs);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn chi2_is_coherent_and_multiplicative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, _) = random_expr(&mut rng, 2);
        let (b, _) = random_expr(&mut rng, 2);
        let mut ev = Evaluator::new();
        for x in [&a, &b] {
            if let Some(beta) = ev.eval_beta(x) {
                prop_assert_eq!(ev.eval_chi2(x).unwrap(), beta.alternating_sum());
            }
            prop_assert_eq!(ev.eval_e(x), ev.eval_chi2(x));
        }
        let product = GroupExpr::Product(vec![a.clone(), b.clone()]);
        let (ca, cb) = (ev.eval_chi2(&a).unwrap(), ev.eval_chi2(&b).unwrap());
        prop_assert_eq!(ev.eval_chi2(&product).unwrap(), ca * cb);
        if let (Some(x), Some(y)) = (ev.eval_beta(&a), ev.eval_beta(&b)) {
            prop_assert_eq!(ev.eval_beta(&product).unwrap(), x.convolve(&y));
        }
    }

    #[test]
    fn rho_round_trip(num in -40i64..40, den in 1i64..12) {
        let c = construct_g_rho::<Rational>(num, den).unwrap();
        prop_assert_eq!(c.evaluation.euler.clone(), Ok(q(num, den)));
        prop_assert_eq!(c.evaluation.chi2_centralizer.clone(), Ok(q(num, den)));
    }
}

#[test]
fn free_product_family_sweep() {
    for n in 0..=5 {
        for k in 0..=5 {
            for l in 1..=6 {
                let mut ev = Evaluator::new();
                let e = free_product_family::<Rational>(n, k, l);
                assert_eq!(ev.eval_chi2(&e), Ok(q(n as i64 - k as i64, l as i64)));
                assert_eq!(ev.eval_e(&e), Ok(q(n as i64 - k as i64, l as i64)));
            }
        }
    }
}
