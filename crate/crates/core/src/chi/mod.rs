//! Symbolic calculus of L²-Betti numbers, L²-Euler characteristics and
//! complete Euler characteristics on group expressions.
//!
//! Betti vectors are assigned by closed-form rules. An infinite node has
//! `b_0 = 0`, and a node with an infinite normal amenable subgroup has all
//! Betti numbers zero. Graph nodes carry only their alternating sum.

mod betti;
mod eval;
mod expr;
pub mod rho;

pub use betti::BettiVector;
pub use eval::{
    chi2_centralizer_symbolic, complete_euler_symbolic, eval_beta, eval_chi2, eval_e, BetaStatus,
    Eval, Evaluator, MarkEvaluation, Rule, Step, Undefined,
};
pub use expr::{
    CentralizerDecl, ElementRef, GroupExpr, MarkedElement, Opaque, OpaqueMark, SymbolicEdge,
    SymbolicGraph, SymbolicMark, Term,
};
pub use rho::{construct_g_rho, free_product_family, group_with_chi2, RhoConstruction};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fusion::models;
    use crate::group::zoo;
    use crate::{Rational, Scalar};

    type X = GroupExpr<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn betti(xs: &[i64]) -> BettiVector<Rational> {
        BettiVector::new(xs.iter().map(|&x| q(x, 1)).collect()).unwrap()
    }

    fn opaque(type_fp: bool, chi2: Option<Rational>) -> X {
        X::Opaque(Opaque {
            name: "L".into(),
            type_fp,
            beta: None,
            chi2,
            infinite_normal_amenable: false,
            marks: vec![],
        })
    }

    #[test]
    fn betti_rules() {
        assert_eq!(eval_beta(&X::free(3)), Some(betti(&[0, 2])));
        assert_eq!(
            eval_beta(&X::Product(vec![X::free(2), X::free(2)])),
            Some(betti(&[0, 0, 1]))
        );
        assert_eq!(eval_beta(&X::CrossZ(Box::new(opaque(false, None)))), Some(betti(&[0])));
        assert_eq!(eval_beta(&X::InfiniteCyclic), Some(betti(&[0])));
        assert_eq!(eval_beta(&X::Trivial), Some(betti(&[1])));
        assert_eq!(
            eval_beta(&X::finite(zoo::symmetric(3))),
            Some(BettiVector::point(q(1, 6)))
        );
        assert_eq!(eval_beta(&X::Graph(Arc::new(models::psl2z()))), None);
        assert_eq!(eval_beta(&opaque(true, None)), None);
    }

    #[test]
    fn chi2_rules() {
        assert_eq!(eval_chi2(&X::CrossZ(Box::new(opaque(true, None)))), Ok(q(0, 1)));
        assert_eq!(eval_chi2(&X::Graph(Arc::new(models::psl2z()))), Ok(q(-1, 6)));
        assert_eq!(eval_chi2(&opaque(false, Some(q(3, 5)))), Ok(q(3, 5)));
        let unknown = X::Product(vec![X::free(2), opaque(true, None)]);
        assert!(matches!(eval_chi2(&unknown), Err(Undefined::Hypothesis(_))));
        let vanishing = X::Product(vec![opaque(true, None), X::InfiniteCyclic]);
        assert_eq!(eval_chi2(&vanishing), Ok(q(0, 1)));
    }

    #[test]
    fn e_requires_type_fp() {
        assert_eq!(eval_e(&X::Graph(Arc::new(models::psl2z()))), Ok(q(-1, 6)));
        assert_eq!(eval_e(&X::finite(zoo::symmetric(3))), Ok(q(1, 6)));
        assert!(matches!(
            eval_e(&opaque(false, Some(q(1, 1)))),
            Err(Undefined::NotTypeFP(_))
        ));
    }

    #[test]
    fn finite_marks() {
        let s3 = X::finite(zoo::symmetric(3));
        let transposition = zoo::symmetric(3)
            .elements()
            .find(|&x| zoo::symmetric(3).element_order(x) == 2)
            .unwrap();
        let at = ElementRef::Elem(transposition);
        assert_eq!(chi2_centralizer_symbolic(&s3, &at), Ok(q(1, 2)));
        assert_eq!(complete_euler_symbolic(&s3, &at), Ok(q(1, 2)));
        let z4 = X::finite(zoo::cyclic(4));
        assert_eq!(complete_euler_symbolic(&z4, &ElementRef::Elem(2)), Ok(q(1, 4)));
        assert!(matches!(
            complete_euler_symbolic(&z4, &ElementRef::Elem(9)),
            Err(Undefined::BadMark(_))
        ));
    }

    #[test]
    fn graph_marks_delegate_to_fusion() {
        let sl2z = X::Graph(Arc::new(models::sl2z()));
        let central = ElementRef::Vertex { vertex: 0, elem: 2 };
        let mut ev = Evaluator::new();
        assert_eq!(ev.complete_euler(&sl2z, &central), Ok(q(-1, 12)));
        assert_eq!(ev.chi2_centralizer(&sl2z, &central), Ok(q(-1, 12)));
    }

    #[test]
    fn mark_orders_are_checked() {
        let z4 = X::finite(zoo::cyclic(4));
        let mark = MarkedElement {
            name: "x".into(),
            order: 4,
            at: ElementRef::Elem(2),
        };
        let ev = Evaluator::new().evaluate_mark(&z4, &mark);
        assert!(matches!(ev.euler, Err(Undefined::BadMark(_))));
        let ok = MarkedElement { order: 2, ..mark };
        let ev = Evaluator::new().evaluate_mark(&z4, &ok);
        assert!(ev.equal());
        assert!(ev.euler_rules.contains(&Rule::FiniteWallElement));
        assert!(ev.chi2_rules.contains(&Rule::FiniteCentralizer));
    }

    #[test]
    fn products_multiply_both_sides() {
        let s3 = zoo::symmetric(3);
        let e = X::Product(vec![
            X::Graph(Arc::new(models::psl2z())),
            X::finite(s3),
        ]);
        let at = ElementRef::Tuple(vec![ElementRef::Identity, ElementRef::Elem(1)]);
        let mut ev = Evaluator::new();
        let lhs = ev.complete_euler(&e, &at).unwrap();
        let rhs = ev.chi2_centralizer(&e, &at).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(ev.eval_chi2(&e), Ok(q(-1, 36)));
    }
}
