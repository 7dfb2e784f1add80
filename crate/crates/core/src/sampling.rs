//! Random inputs for the property sweeps: idempotent matrices over `QG`
//! and graphs of finite groups.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::fusion::{EdgeSpec, GraphOfGroups};
use crate::group::{zoo, Element, FiniteGroup};
use crate::ring::{GroupRingElement, GroupRingMatrix};
use crate::scalar::Scalar;

/// A sparse element with small integer coefficients.
pub fn random_element<S: Scalar, R: Rng>(
    rng: &mut R,
    group: &Arc<FiniteGroup>,
    max_terms: usize,
) -> GroupRingElement<S> {
    let terms = rng.gen_range(1..=max_terms.max(1));
    let pairs: Vec<_> = (0..terms)
        .map(|_| {
            let g = rng.gen_range(0..group.order());
            let c = *[-2i64, -1, 1, 2].choose(rng).expect("non-empty");
            (g, S::from_i64(c))
        })
        .collect();
    GroupRingElement::from_terms(group.clone(), pairs).expect("elements in range")
}

/// The subgroup generated by one or two random elements.
pub fn random_subgroup<R: Rng>(rng: &mut R, group: &FiniteGroup) -> Vec<Element> {
    let k = rng.gen_range(1..=2);
    let gens: Vec<_> = (0..k).map(|_| rng.gen_range(0..group.order())).collect();
    group.generated(&gens)
}

/// `diag(d_1, ..., d_n)` with each `d_i` one of `0`, `1`, `e_K`, `1 - e_K`
/// for a random subgroup `K`.
pub fn random_block_idempotent<S: Scalar, R: Rng>(
    rng: &mut R,
    group: &Arc<FiniteGroup>,
    size: usize,
) -> GroupRingMatrix<S> {
    let diag: Vec<_> = (0..size)
        .map(|_| {
            let e_k = GroupRingElement::averaging(group.clone(), &random_subgroup(rng, group));
            match rng.gen_range(0..4) {
                0 => GroupRingElement::zero(group.clone()),
                1 => GroupRingElement::one(group.clone()),
                2 => e_k,
                _ => GroupRingElement::one(group.clone()).sub(&e_k).expect("same group"),
            }
        })
        .collect();
    GroupRingMatrix::diagonal(&diag).expect("non-empty diagonal")
}

/// An invertible matrix `A` with `A^{-1}`: either `I + x E_ij` with
/// inverse `I - x E_ij`, or a diagonal of group elements.
pub fn random_elementary<S: Scalar, R: Rng>(
    rng: &mut R,
    group: &Arc<FiniteGroup>,
    size: usize,
) -> (GroupRingMatrix<S>, GroupRingMatrix<S>) {
    if size >= 2 && rng.gen_bool(0.7) {
        let i = rng.gen_range(0..size);
        let j = (i + rng.gen_range(1..size)) % size;
        let x = random_element(rng, group, 2);
        let a = GroupRingMatrix::elementary(size, i, j, &x).expect("i != j");
        let b = GroupRingMatrix::elementary(size, i, j, &x.neg()).expect("i != j");
        (a, b)
    } else {
        let gs: Vec<_> = (0..size).map(|_| rng.gen_range(0..group.order())).collect();
        let unit = |g: Element| GroupRingElement::basis(group.clone(), g);
        let a = GroupRingMatrix::diagonal(&gs.iter().map(|&g| unit(g)).collect::<Vec<_>>());
        let b = GroupRingMatrix::diagonal(&gs.iter().map(|&g| unit(group.inv(g))).collect::<Vec<_>>());
        (a.expect("non-empty"), b.expect("non-empty"))
    }
}

/// `A P A^{-1}`.
pub fn conjugate<S: Scalar>(
    p: &GroupRingMatrix<S>,
    (a, a_inv): &(GroupRingMatrix<S>, GroupRingMatrix<S>),
) -> GroupRingMatrix<S> {
    a.mul(p).and_then(|ap| ap.mul(a_inv)).expect("matching sizes and groups")
}

/// A block idempotent conjugated by `steps` random elementary matrices.
pub fn random_idempotent<S: Scalar, R: Rng>(
    rng: &mut R,
    group: &Arc<FiniteGroup>,
    size: usize,
    steps: usize,
) -> GroupRingMatrix<S> {
    let mut p = random_block_idempotent(rng, group, size);
    for _ in 0..steps {
        let a = random_elementary(rng, group, size);
        p = conjugate(&p, &a);
    }
    p
}

fn random_edge<R: Rng>(
    rng: &mut R,
    vertices: &[FiniteGroup],
    from: usize,
    to: usize,
) -> EdgeSpec {
    let (a, b) = (&vertices[from], &vertices[to]);
    if a == b && rng.gen_bool(0.5) {
        // a subgroup, included on one side and conjugated into the other
        let sub = a.subgroup(&random_subgroup(rng, a)).expect("generated subgroup");
        let g = rng.gen_range(0..a.order());
        let embed_from: Vec<_> = sub.elements().to_vec();
        let embed_to = embed_from.iter().map(|&x| a.conjugate(g, x)).collect();
        return EdgeSpec {
            group: sub.group().clone(),
            from,
            to,
            embed_from,
            embed_to,
        };
    }
    // a cyclic subgroup generated by elements of equal order on each side
    let x = rng.gen_range(0..a.order());
    let d = a.element_order(x);
    let same: Vec<_> = b.elements().filter(|&y| b.element_order(y) == d).collect();
    let (d, x, y) = match same.choose(rng) {
        Some(&y) => (d, x, y),
        None => (1, 0, 0),
    };
    EdgeSpec {
        group: zoo::cyclic(d as usize),
        from,
        to,
        embed_from: (0..d).map(|k| a.pow(x, k)).collect(),
        embed_to: (0..d).map(|k| b.pow(y, k)).collect(),
    }
}

/// A connected graph on up to `max_vertices` zoo groups of order at most
/// `max_order`: a random spanning tree plus up to `extra_edges` edges that
/// close cycles or loops.
pub fn random_graph<R: Rng>(
    rng: &mut R,
    max_order: usize,
    max_vertices: usize,
    extra_edges: usize,
) -> GraphOfGroups {
    let pool = zoo::small(max_order);
    let n = rng.gen_range(1..=max_vertices.max(1));
    let vertices: Vec<FiniteGroup> = (0..n)
        .map(|_| pool.choose(rng).expect("non-empty pool").clone())
        .collect();
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push(random_edge(rng, &vertices, u, v));
    }
    for _ in 0..rng.gen_range(0..=extra_edges) {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        edges.push(random_edge(rng, &vertices, u, v));
    }
    GraphOfGroups::new(vertices, edges).expect("injective embeddings")
}
