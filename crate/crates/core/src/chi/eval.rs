use std::collections::BTreeSet;
use std::fmt;

use super::betti::BettiVector;
use super::expr::{ElementRef, GroupExpr, MarkedElement, SymbolicGraph, Term};
use crate::group::FiniteGroup;
use crate::ring::wall_element_finite;
use crate::scalar::Scalar;

/// Why a quantity could not be certified. Undefined is a value, never a guess.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Undefined {
    #[error("not certified of type FP over C: {0}")]
    NotTypeFP(String),
    #[error("missing declaration: {0}")]
    MissingDeclaration(String),
    #[error("hypothesis not certified: {0}")]
    Hypothesis(String),
    #[error("element does not resolve: {0}")]
    BadMark(String),
}

pub type Eval<S> = std::result::Result<S, Undefined>;

/// What is known about the L²-Betti numbers of a node.
#[derive(Debug, Clone, PartialEq)]
pub enum BetaStatus<S: Scalar> {
    Known(BettiVector<S>),
    /// `sum_i b_i` converges and the alternating sum is determined, but the
    /// vector itself is not.
    Convergent,
    Unknown,
}

impl<S: Scalar> BetaStatus<S> {
    fn convergent(&self) -> bool {
        !matches!(self, BetaStatus::Unknown)
    }

    fn is_zero(&self) -> bool {
        matches!(self, BetaStatus::Known(b) if b.is_zero())
    }
}

/// The justification recorded for one evaluation step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    FiniteGroupBetti,
    FreeGroupBetti,
    CheegerGromovVanishing,
    KunnethConvolution,
    ProductMultiplicativity,
    GraphAlternatingSum,
    FiniteGraphFormula,
    Declared,
    FpChiEqualsE,
    FiniteCentralizer,
    FiniteWallElement,
    CentralizerSplitting,
    WallElementProduct,
    HTimesZWallVanishing,
    FusionPushforward,
    FusionFixedTree,
    FixedTreeAlternatingSum,
    IncidencePushforward,
}

impl Rule {
    pub fn tag(self) -> &'static str {
        match self {
            Rule::FiniteGroupBetti => "finite-group-betti",
            Rule::FreeGroupBetti => "free-group-betti",
            Rule::CheegerGromovVanishing => "cheeger-gromov-vanishing",
            Rule::KunnethConvolution => "kunneth-convolution",
            Rule::ProductMultiplicativity => "product-multiplicativity",
            Rule::GraphAlternatingSum => "graph-alternating-sum",
            Rule::FiniteGraphFormula => "finite-graph-euler-formula",
            Rule::Declared => "declared",
            Rule::FpChiEqualsE => "fp-chi-equals-e",
            Rule::FiniteCentralizer => "finite-centralizer-brute-force",
            Rule::FiniteWallElement => "finite-wall-element",
            Rule::CentralizerSplitting => "centralizer-splitting",
            Rule::WallElementProduct => "wall-element-product",
            Rule::HTimesZWallVanishing => "h-times-z-wall-vanishing",
            Rule::FusionPushforward => "fusion-pushforward",
            Rule::FusionFixedTree => "fusion-fixed-tree",
            Rule::FixedTreeAlternatingSum => "fixed-tree-alternating-sum",
            Rule::IncidencePushforward => "incidence-pushforward",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub rule: Rule,
    pub node: &'static str,
}

/// Both sides of `E(G)(s) = chi2(C_G(s))` at one marked element.
#[derive(Debug, Clone)]
pub struct MarkEvaluation<S> {
    pub mark: MarkedElement,
    pub euler: Eval<S>,
    pub chi2_centralizer: Eval<S>,
    /// `Some(false)` when a declaration says the centralizer is not of type FP.
    pub centralizer_type_fp: Option<bool>,
    pub notes: Vec<String>,
    pub euler_rules: Vec<Rule>,
    pub chi2_rules: Vec<Rule>,
}

impl<S: Scalar> MarkEvaluation<S> {
    pub fn equal(&self) -> bool {
        matches!((&self.euler, &self.chi2_centralizer), (Ok(a), Ok(b)) if a.same(b))
    }
}

/// Evaluates invariants of a [`GroupExpr`], recording which rule justified
/// each step.
#[derive(Debug, Default)]
pub struct Evaluator {
    ledger: Vec<Step>,
}

fn bad(msg: impl Into<String>) -> Undefined {
    Undefined::BadMark(msg.into())
}

fn finite_element(g: &FiniteGroup, at: &ElementRef) -> Eval<usize> {
    match at {
        ElementRef::Identity => Ok(g.identity()),
        ElementRef::Elem(x) if *x < g.order() => Ok(*x),
        other => Err(bad(format!("{other:?} in a finite group of order {}", g.order()))),
    }
}

fn tuple_parts(at: &ElementRef, factors: usize) -> Eval<Vec<&ElementRef>> {
    match at {
        ElementRef::Identity => Ok(vec![at; factors]),
        ElementRef::Tuple(parts) if parts.len() == factors => Ok(parts.iter().collect()),
        other => Err(bad(format!("{other:?} in a product of {factors} factors"))),
    }
}

fn cross_z_inner(at: &ElementRef) -> Eval<&ElementRef> {
    match at {
        ElementRef::Identity => Ok(at),
        ElementRef::CrossZ(inner) => Ok(inner),
        other => Err(bad(format!("{other:?} in H x Z"))),
    }
}

fn identity_only(at: &ElementRef, kind: &str) -> Eval<()> {
    match at {
        ElementRef::Identity => Ok(()),
        other => Err(bad(format!("{other:?}: {kind} has no non-trivial finite-order element"))),
    }
}

fn declared_name<'a>(at: &'a ElementRef, kind: &str) -> Eval<Option<&'a str>> {
    match at {
        ElementRef::Identity => Ok(None),
        ElementRef::Declared(name) => Ok(Some(name)),
        other => Err(bad(format!("{other:?} in a {kind} node; use a declared mark"))),
    }
}

fn graph_class(
    g: &crate::fusion::GraphOfGroups,
    table: &crate::fusion::FusionTable,
    at: &ElementRef,
) -> Eval<usize> {
    match at {
        ElementRef::Identity => Ok(table.identity_class()),
        ElementRef::Vertex { vertex, elem } => {
            let group = g
                .vertices()
                .get(*vertex)
                .ok_or_else(|| bad(format!("vertex {vertex} beyond the graph")))?;
            let x = finite_element(group, &ElementRef::Elem(*elem))?;
            Ok(table.class_of((*vertex, group.class_of(x))))
        }
        other => Err(bad(format!("{other:?} in a graph of finite groups"))),
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    use num_integer::Integer;
    a.lcm(&b)
}

impl Evaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ledger(&self) -> &[Step] {
        &self.ledger
    }

    /// Distinct rules used, in first-use order, and clears the ledger.
    pub fn take_rules(&mut self) -> Vec<Rule> {
        let mut seen = BTreeSet::new();
        let rules = self
            .ledger
            .drain(..)
            .filter_map(|s| seen.insert(s.rule).then_some(s.rule))
            .collect();
        rules
    }

    fn record<S>(&mut self, rule: Rule, e: &GroupExpr<S>) {
        self.ledger.push(Step {
            rule,
            node: e.kind(),
        });
    }

    /// True when `e` contains an infinite normal amenable subgroup by
    /// construction: `Z`, `H x Z`, a declared one, or a factor with one.
    pub fn has_infinite_normal_amenable<S>(e: &GroupExpr<S>) -> bool {
        match e {
            GroupExpr::InfiniteCyclic | GroupExpr::CrossZ(_) => true,
            GroupExpr::Opaque(o) => o.infinite_normal_amenable,
            GroupExpr::Product(fs) => fs.iter().any(Self::has_infinite_normal_amenable),
            _ => false,
        }
    }

    pub fn beta<S: Scalar>(&mut self, e: &GroupExpr<S>) -> BetaStatus<S> {
        if Self::has_infinite_normal_amenable(e) {
            self.record(Rule::CheegerGromovVanishing, e);
            return BetaStatus::Known(BettiVector::zero());
        }
        match e {
            GroupExpr::Trivial => {
                self.record(Rule::FiniteGroupBetti, e);
                BetaStatus::Known(BettiVector::point(S::one()))
            }
            GroupExpr::Finite(g) => {
                self.record(Rule::FiniteGroupBetti, e);
                BetaStatus::Known(BettiVector::point(S::recip(g.order())))
            }
            GroupExpr::Free(n) => {
                self.record(Rule::FreeGroupBetti, e);
                let b1 = S::from_i64(*n as i64 - 1);
                BetaStatus::Known(BettiVector::new(vec![S::zero(), b1]).expect("rank >= 1"))
            }
            GroupExpr::Product(fs) => {
                let parts: Vec<_> = fs.iter().map(|f| self.beta(f)).collect();
                if parts.iter().all(|p| matches!(p, BetaStatus::Known(_))) {
                    self.record(Rule::KunnethConvolution, e);
                    let mut acc = BettiVector::point(S::one());
                    for p in parts {
                        if let BetaStatus::Known(b) = p {
                            acc = acc.convolve(&b);
                        }
                    }
                    BetaStatus::Known(acc)
                } else if parts.iter().all(BetaStatus::convergent) {
                    self.record(Rule::KunnethConvolution, e);
                    BetaStatus::Convergent
                } else {
                    BetaStatus::Unknown
                }
            }
            GroupExpr::Graph(_) => {
                self.record(Rule::GraphAlternatingSum, e);
                BetaStatus::Convergent
            }
            GroupExpr::SymbolicGraph(g) => {
                if self.pieces_convergent(g) {
                    self.record(Rule::GraphAlternatingSum, e);
                    BetaStatus::Convergent
                } else {
                    BetaStatus::Unknown
                }
            }
            GroupExpr::Opaque(o) => match (&o.beta, &o.chi2) {
                (Some(b), _) => {
                    self.record(Rule::Declared, e);
                    BetaStatus::Known(b.clone())
                }
                (None, Some(_)) => {
                    self.record(Rule::Declared, e);
                    BetaStatus::Convergent
                }
                (None, None) => BetaStatus::Unknown,
            },
            GroupExpr::InfiniteCyclic | GroupExpr::CrossZ(_) => unreachable!("handled above"),
        }
    }

    fn pieces_convergent<S: Scalar>(&mut self, g: &SymbolicGraph<S>) -> bool {
        let vertices = g.vertices.iter().all(|v| self.beta(v).convergent());
        vertices && g.edges.iter().all(|ed| self.beta(&ed.group).convergent())
    }

    /// The Betti vector when it is determined; graphs carry only their
    /// alternating sum.
    pub fn eval_beta<S: Scalar>(&mut self, e: &GroupExpr<S>) -> Option<BettiVector<S>> {
        match self.beta(e) {
            BetaStatus::Known(b) => Some(b),
            _ => None,
        }
    }

    pub fn eval_chi2<S: Scalar>(&mut self, e: &GroupExpr<S>) -> Eval<S> {
        if let BetaStatus::Known(b) = self.beta(e) {
            return Ok(b.alternating_sum());
        }
        match e {
            GroupExpr::Graph(g) => {
                self.record(Rule::FiniteGraphFormula, e);
                Ok(g.e_of_graph())
            }
            GroupExpr::SymbolicGraph(g) => {
                if !self.pieces_convergent(g) {
                    return Err(Undefined::Hypothesis(
                        "a vertex or edge group has no convergent Betti sum".into(),
                    ));
                }
                self.record(Rule::GraphAlternatingSum, e);
                let mut acc = S::zero();
                for v in &g.vertices {
                    acc = acc + self.eval_chi2(v)?;
                }
                for ed in &g.edges {
                    acc = acc - self.eval_chi2(&ed.group)?;
                }
                Ok(acc)
            }
            GroupExpr::Product(fs) => {
                let statuses: Vec<_> = fs.iter().map(|f| self.beta(f)).collect();
                if statuses.iter().any(BetaStatus::is_zero) {
                    self.record(Rule::CheegerGromovVanishing, e);
                    return Ok(S::zero());
                }
                if !statuses.iter().all(BetaStatus::convergent) {
                    return Err(Undefined::Hypothesis(
                        "product factor without a convergent Betti sum".into(),
                    ));
                }
                self.record(Rule::ProductMultiplicativity, e);
                let mut acc = S::one();
                for f in fs {
                    acc = acc * self.eval_chi2(f)?;
                }
                Ok(acc)
            }
            GroupExpr::Opaque(o) => match &o.chi2 {
                Some(c) => {
                    self.record(Rule::Declared, e);
                    Ok(c.clone())
                }
                None => Err(Undefined::MissingDeclaration(format!(
                    "opaque group {} declares neither beta nor chi2",
                    o.name
                ))),
            },
            _ => unreachable!("every other node has a known Betti vector"),
        }
    }

    /// Type FP over `C` as certified by construction or declaration.
    pub fn is_type_fp<S>(e: &GroupExpr<S>) -> bool {
        match e {
            GroupExpr::Trivial
            | GroupExpr::Finite(_)
            | GroupExpr::Free(_)
            | GroupExpr::InfiniteCyclic
            | GroupExpr::Graph(_) => true,
            GroupExpr::Product(fs) => fs.iter().all(Self::is_type_fp),
            GroupExpr::CrossZ(inner) => Self::is_type_fp(inner),
            GroupExpr::SymbolicGraph(g) => {
                g.vertices.iter().all(Self::is_type_fp)
                    && g.edges.iter().all(|ed| Self::is_type_fp(&ed.group))
            }
            GroupExpr::Opaque(o) => o.type_fp,
        }
    }

    /// `e(G)`, which equals `chi2(G)` for groups of type FP over `C`.
    pub fn eval_e<S: Scalar>(&mut self, e: &GroupExpr<S>) -> Eval<S> {
        if !Self::is_type_fp(e) {
            return Err(Undefined::NotTypeFP(format!("{} node", e.kind())));
        }
        self.record(Rule::FpChiEqualsE, e);
        self.eval_chi2(e)
    }

    /// Order of the element at `at`, checking that it resolves in `e`.
    pub fn element_order<S>(e: &GroupExpr<S>, at: &ElementRef) -> Eval<u64> {
        match e {
            GroupExpr::Trivial | GroupExpr::Free(_) | GroupExpr::InfiniteCyclic => {
                identity_only(at, e.kind()).map(|_| 1)
            }
            GroupExpr::Finite(g) => finite_element(g, at).map(|x| g.element_order(x)),
            GroupExpr::Product(fs) => {
                let parts = tuple_parts(at, fs.len())?;
                fs.iter()
                    .zip(parts)
                    .try_fold(1, |acc, (f, p)| Ok(lcm(acc, Self::element_order(f, p)?)))
            }
            GroupExpr::CrossZ(inner) => Self::element_order(inner, cross_z_inner(at)?),
            GroupExpr::Graph(g) => {
                let table = g.fusion_classes();
                graph_class(g, &table, at).map(|c| table.classes()[c].element_order)
            }
            GroupExpr::SymbolicGraph(g) => match declared_name(at, "graph")? {
                None => Ok(1),
                Some(name) => g
                    .mark(name)
                    .map(|m| m.order)
                    .ok_or_else(|| bad(format!("no mark {name} on the graph"))),
            },
            GroupExpr::Opaque(o) => match declared_name(at, "opaque")? {
                None => Ok(1),
                Some(name) => o
                    .mark(name)
                    .map(|m| m.order)
                    .ok_or_else(|| bad(format!("no mark {name} on {}", o.name))),
            },
        }
    }

    /// `chi2(C_G(s))` by the structural recursion on centralizers.
    pub fn chi2_centralizer<S: Scalar>(&mut self, e: &GroupExpr<S>, at: &ElementRef) -> Eval<S> {
        match e {
            GroupExpr::Trivial | GroupExpr::Free(_) | GroupExpr::InfiniteCyclic => {
                identity_only(at, e.kind())?;
                self.eval_chi2(e)
            }
            GroupExpr::Finite(g) => {
                let x = finite_element(g, at)?;
                self.record(Rule::FiniteCentralizer, e);
                Ok(S::recip(g.centralizer_order(x)))
            }
            GroupExpr::Product(fs) => {
                let parts = tuple_parts(at, fs.len())?;
                self.record(Rule::CentralizerSplitting, e);
                self.record(Rule::ProductMultiplicativity, e);
                let mut acc = S::one();
                for (f, p) in fs.iter().zip(parts) {
                    acc = acc * self.chi2_centralizer(f, p)?;
                }
                Ok(acc)
            }
            GroupExpr::CrossZ(inner) => {
                Self::element_order(inner, cross_z_inner(at)?)?;
                self.record(Rule::CheegerGromovVanishing, e);
                Ok(S::zero())
            }
            GroupExpr::Graph(g) => {
                let table = g.fusion_classes();
                let class = graph_class(g, &table, at)?;
                self.record(Rule::FusionFixedTree, e);
                Ok(g.chi2_centralizer(&table, class))
            }
            GroupExpr::SymbolicGraph(g) => {
                let Some(name) = declared_name(at, "graph")? else {
                    return self.eval_chi2(e);
                };
                let mark = g
                    .mark(name)
                    .ok_or_else(|| bad(format!("no mark {name} on the graph")))?;
                let decl = mark.centralizer.as_ref().ok_or_else(|| {
                    Undefined::MissingDeclaration(format!("fixed-tree data for mark {name}"))
                })?;
                self.record(Rule::FixedTreeAlternatingSum, e);
                let mut acc = S::zero();
                for t in &decl.vertex_terms {
                    acc = acc + self.term(g, t)?;
                }
                for t in &decl.edge_terms {
                    acc = acc - self.term(g, t)?;
                }
                Ok(acc)
            }
            GroupExpr::Opaque(o) => {
                let Some(name) = declared_name(at, "opaque")? else {
                    return self.eval_chi2(e);
                };
                let mark = o
                    .mark(name)
                    .ok_or_else(|| bad(format!("no mark {name} on {}", o.name)))?;
                self.record(Rule::Declared, e);
                mark.chi2_centralizer.clone().ok_or_else(|| {
                    Undefined::MissingDeclaration(format!("chi2 of the centralizer of {name}"))
                })
            }
        }
    }

    fn term<S: Scalar>(&mut self, g: &SymbolicGraph<S>, t: &Term<S>) -> Eval<S> {
        match t {
            Term::Value(v) => Ok(v.clone()),
            Term::Group(expr) => self.eval_chi2(expr),
            Term::VertexCentralizer { vertex, at } => self.chi2_centralizer(&g.vertices[*vertex], at),
            Term::EdgeCentralizer { edge, at } => self.chi2_centralizer(&g.edges[*edge].group, at),
        }
    }

    /// `E(G)(s)` by the structural recursion on Wall elements.
    pub fn complete_euler<S: Scalar>(&mut self, e: &GroupExpr<S>, at: &ElementRef) -> Eval<S> {
        if !Self::is_type_fp(e) {
            return Err(Undefined::NotTypeFP(format!("{} node", e.kind())));
        }
        match e {
            GroupExpr::Trivial | GroupExpr::Free(_) | GroupExpr::InfiniteCyclic => {
                identity_only(at, e.kind())?;
                self.eval_e(e)
            }
            GroupExpr::Finite(g) => {
                let x = finite_element(g, at)?;
                self.record(Rule::FiniteWallElement, e);
                Ok(wall_element_finite::<S>(g).get(g.class_of(x)).clone())
            }
            GroupExpr::Product(fs) => {
                let parts = tuple_parts(at, fs.len())?;
                self.record(Rule::WallElementProduct, e);
                let mut acc = S::one();
                for (f, p) in fs.iter().zip(parts) {
                    acc = acc * self.complete_euler(f, p)?;
                }
                Ok(acc)
            }
            GroupExpr::CrossZ(inner) => {
                Self::element_order(inner, cross_z_inner(at)?)?;
                self.record(Rule::HTimesZWallVanishing, e);
                Ok(S::zero())
            }
            GroupExpr::Graph(g) => {
                let table = g.fusion_classes();
                let class = graph_class(g, &table, at)?;
                self.record(Rule::FusionPushforward, e);
                Ok(g.complete_euler_char::<S>(&table).get(class).clone())
            }
            GroupExpr::SymbolicGraph(g) => {
                self.record(Rule::IncidencePushforward, e);
                let (vertex_classes, edge_classes) = match declared_name(at, "graph")? {
                    None => (
                        (0..g.vertices.len()).map(|v| (v, ElementRef::Identity)).collect(),
                        (0..g.edges.len()).map(|i| (i, ElementRef::Identity)).collect(),
                    ),
                    Some(name) => {
                        let mark = g
                            .mark(name)
                            .ok_or_else(|| bad(format!("no mark {name} on the graph")))?;
                        (mark.vertex_classes.clone(), mark.edge_classes.clone())
                    }
                };
                let mut acc = S::zero();
                for (v, x) in &vertex_classes {
                    acc = acc + self.complete_euler(&g.vertices[*v], x)?;
                }
                for (i, y) in &edge_classes {
                    acc = acc - self.complete_euler(&g.edges[*i].group, y)?;
                }
                Ok(acc)
            }
            GroupExpr::Opaque(o) => {
                let Some(name) = declared_name(at, "opaque")? else {
                    return self.eval_e(e);
                };
                let mark = o
                    .mark(name)
                    .ok_or_else(|| bad(format!("no mark {name} on {}", o.name)))?;
                self.record(Rule::Declared, e);
                mark.euler.clone().ok_or_else(|| {
                    Undefined::MissingDeclaration(format!("E({})({name})", o.name))
                })
            }
        }
    }

    /// Declared type-FP status of `C_G(s)`: a product or `H x Z` inherits a
    /// declared failure from a factor, since it maps onto that factor's
    /// centralizer.
    pub fn centralizer_type_fp<S>(e: &GroupExpr<S>, at: &ElementRef) -> Option<bool> {
        match (e, at) {
            (GroupExpr::Finite(_), _) => Some(true),
            (_, ElementRef::Identity) => Some(Self::is_type_fp(e)).filter(|&fp| fp),
            (GroupExpr::Product(fs), ElementRef::Tuple(parts)) if parts.len() == fs.len() => {
                let each: Vec<_> = fs
                    .iter()
                    .zip(parts)
                    .map(|(f, p)| Self::centralizer_type_fp(f, p))
                    .collect();
                if each.contains(&Some(false)) {
                    Some(false)
                } else if each.iter().all(|x| *x == Some(true)) {
                    Some(true)
                } else {
                    None
                }
            }
            (GroupExpr::CrossZ(inner), ElementRef::CrossZ(x)) => {
                Self::centralizer_type_fp(inner, x)
            }
            (GroupExpr::SymbolicGraph(g), ElementRef::Declared(name)) => {
                g.mark(name).and_then(|m| m.centralizer_type_fp)
            }
            (GroupExpr::Opaque(o), ElementRef::Declared(name)) => {
                o.mark(name).and_then(|m| m.centralizer_type_fp)
            }
            _ => None,
        }
    }

    fn notes<S>(e: &GroupExpr<S>, at: &ElementRef, out: &mut Vec<String>) {
        match (e, at) {
            (GroupExpr::Product(fs), ElementRef::Tuple(parts)) => {
                for (f, p) in fs.iter().zip(parts) {
                    Self::notes(f, p, out);
                }
            }
            (GroupExpr::CrossZ(inner), ElementRef::CrossZ(x)) => Self::notes(inner, x, out),
            (GroupExpr::SymbolicGraph(g), ElementRef::Declared(name)) => {
                out.extend(g.mark(name).and_then(|m| m.note.clone()));
            }
            (GroupExpr::Opaque(o), ElementRef::Declared(name)) => {
                out.extend(o.mark(name).and_then(|m| m.note.clone()));
            }
            _ => {}
        }
    }

    /// Both sides at `mark`, after checking that its declared order matches
    /// the element it names.
    pub fn evaluate_mark<S: Scalar>(
        &mut self,
        e: &GroupExpr<S>,
        mark: &MarkedElement,
    ) -> MarkEvaluation<S> {
        let order_check = match Self::element_order(e, &mark.at) {
            Ok(o) if o == mark.order => Ok(()),
            Ok(o) => Err(bad(format!(
                "mark {} declares order {} but the element has order {o}",
                mark.name, mark.order
            ))),
            Err(u) => Err(u),
        };
        let (euler, euler_rules, chi2, chi2_rules) = match order_check {
            Err(u) => (Err(u.clone()), Vec::new(), Err(u), Vec::new()),
            Ok(()) => {
                self.ledger.clear();
                let euler = self.complete_euler(e, &mark.at);
                let euler_rules = self.take_rules();
                let chi2 = self.chi2_centralizer(e, &mark.at);
                let chi2_rules = self.take_rules();
                (euler, euler_rules, chi2, chi2_rules)
            }
        };
        let mut notes = Vec::new();
        Self::notes(e, &mark.at, &mut notes);
        MarkEvaluation {
            mark: mark.clone(),
            euler,
            chi2_centralizer: chi2,
            centralizer_type_fp: Self::centralizer_type_fp(e, &mark.at),
            notes,
            euler_rules,
            chi2_rules,
        }
    }
}

pub fn eval_beta<S: Scalar>(e: &GroupExpr<S>) -> Option<BettiVector<S>> {
    Evaluator::new().eval_beta(e)
}

pub fn eval_chi2<S: Scalar>(e: &GroupExpr<S>) -> Eval<S> {
    Evaluator::new().eval_chi2(e)
}

pub fn eval_e<S: Scalar>(e: &GroupExpr<S>) -> Eval<S> {
    Evaluator::new().eval_e(e)
}

pub fn chi2_centralizer_symbolic<S: Scalar>(e: &GroupExpr<S>, at: &ElementRef) -> Eval<S> {
    Evaluator::new().chi2_centralizer(e, at)
}

pub fn complete_euler_symbolic<S: Scalar>(e: &GroupExpr<S>, at: &ElementRef) -> Eval<S> {
    Evaluator::new().complete_euler(e, at)
}
