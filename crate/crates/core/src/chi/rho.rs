//! Groups with prescribed L²-Euler characteristics, and a group of type FP
//! with an involution whose centralizer is not of type FP but still satisfies
//! `E(G)(s) = chi2(C_G(s))` with any prescribed rational value.

use num_integer::Integer;

use super::eval::{Evaluator, MarkEvaluation};
use super::expr::{
    CentralizerDecl, ElementRef, GroupExpr, MarkedElement, Opaque, OpaqueMark, SymbolicEdge,
    SymbolicGraph, SymbolicMark, Term,
};
use crate::error::{Error, Result};
use crate::group::zoo;
use crate::scalar::Scalar;

pub const NOT_FINITELY_GENERATED: &str =
    "centralizer is not finitely generated, hence not of type FP over C (declared)";

/// A group of type FP over `C` with an involution `s` whose centralizer is
/// not finitely generated. Only these properties are known.
pub fn fp_group_with_wild_involution<S: Scalar>() -> GroupExpr<S> {
    GroupExpr::Opaque(Opaque {
        name: "FP group with non-finitely-generated involution centralizer".into(),
        type_fp: true,
        beta: None,
        chi2: None,
        infinite_normal_amenable: false,
        marks: vec![OpaqueMark {
            name: "s".into(),
            order: 2,
            euler: None,
            chi2_centralizer: None,
            centralizer_type_fp: Some(false),
            note: Some(NOT_FINITELY_GENERATED.into()),
        }],
    })
}

/// `K = H *_<t> H` with `H = L x Z` and `t = (s, 0)`, marked at `t`.
///
/// In `C_K(t)` acting on the fixed tree, the vertex stabilizers are
/// centralizers of involutions of `H` (all Betti numbers vanish) and the one
/// edge orbit has stabilizer `<t>`.
pub fn amalgam_k<S: Scalar>() -> GroupExpr<S> {
    let h = || GroupExpr::CrossZ(Box::new(fp_group_with_wild_involution::<S>()));
    let t_in_h = || ElementRef::CrossZ(Box::new(ElementRef::Declared("s".into())));
    let involution = ElementRef::Elem(1);
    GroupExpr::SymbolicGraph(SymbolicGraph {
        vertices: vec![h(), h()],
        edges: vec![SymbolicEdge {
            from: 0,
            to: 1,
            group: GroupExpr::finite(zoo::cyclic(2)),
        }],
        marks: vec![SymbolicMark {
            name: "t".into(),
            order: 2,
            vertex_classes: vec![(0, t_in_h()), (1, t_in_h())],
            edge_classes: vec![(0, involution.clone())],
            centralizer: Some(CentralizerDecl {
                vertex_terms: vec![
                    Term::VertexCentralizer { vertex: 0, at: t_in_h() },
                    Term::VertexCentralizer { vertex: 1, at: t_in_h() },
                ],
                edge_terms: vec![Term::EdgeCentralizer { edge: 0, at: involution }],
            }),
            centralizer_type_fp: Some(false),
            note: Some(NOT_FINITELY_GENERATED.into()),
        }],
    })
}

/// `((F_2 x F_{n+1}) * F_k) x Z/l`, with the finite factor omitted for `l = 1`.
pub fn free_product_family<S: Scalar>(n: u64, k: u64, l: u64) -> GroupExpr<S> {
    let vertex = GroupExpr::Product(vec![GroupExpr::free(2), GroupExpr::free(n + 1)]);
    let graph = GroupExpr::free_product(vertex, GroupExpr::free(k));
    if l == 1 {
        graph
    } else {
        GroupExpr::Product(vec![graph, GroupExpr::finite(zoo::cyclic(l as usize))])
    }
}

/// A group with `chi2 = num/den`, from [`free_product_family`].
pub fn group_with_chi2<S: Scalar>(num: i64, den: i64) -> Result<GroupExpr<S>> {
    if den <= 0 {
        return Err(Error::InvalidInput(format!("denominator {den} must be positive")));
    }
    let g = num.gcd(&den);
    let (num, den) = (num / g, den / g);
    let n = num.max(0).unsigned_abs();
    let k = (-num).max(0).unsigned_abs();
    Ok(free_product_family(n, k, den as u64))
}

#[derive(Debug, Clone)]
pub struct RhoConstruction<S> {
    pub rho: (i64, i64),
    pub expr: GroupExpr<S>,
    pub mark: MarkedElement,
    pub evaluation: MarkEvaluation<S>,
}

/// `G(rho) = K x G_{-2 rho}` marked at `(t, 1)`, with both sides evaluated.
pub fn construct_g_rho<S: Scalar>(num: i64, den: i64) -> Result<RhoConstruction<S>> {
    if den <= 0 {
        return Err(Error::InvalidInput(format!("denominator {den} must be positive")));
    }
    let g = num.gcd(&den);
    let (num, den) = (num / g, den / g);
    let target = -2 * num;
    let expr = GroupExpr::Product(vec![amalgam_k(), group_with_chi2(target, den)?]);
    let mark = MarkedElement {
        name: "t".into(),
        order: 2,
        at: ElementRef::Tuple(vec![ElementRef::Declared("t".into()), ElementRef::Identity]),
    };
    let evaluation = Evaluator::new().evaluate_mark(&expr, &mark);
    Ok(RhoConstruction {
        rho: (num, den),
        expr,
        mark,
        evaluation,
    })
}
