use std::sync::Arc;

use super::betti::BettiVector;
use crate::error::{Error, Result};
use crate::fusion::GraphOfGroups;
use crate::group::{Element, FiniteGroup};

/// A group built from finite groups, free groups, direct products, graphs of
/// groups, products with `Z`, and opaque groups known only through
/// declarations.
#[derive(Debug, Clone)]
pub enum GroupExpr<S> {
    Trivial,
    Finite(Arc<FiniteGroup>),
    /// Free group of rank at least 2; see [`GroupExpr::free`].
    Free(u64),
    InfiniteCyclic,
    Product(Vec<GroupExpr<S>>),
    /// Fundamental group of a graph of finite groups.
    Graph(Arc<GraphOfGroups>),
    /// Fundamental group of a finite graph of arbitrary groups.
    SymbolicGraph(SymbolicGraph<S>),
    /// `H x Z`.
    CrossZ(Box<GroupExpr<S>>),
    Opaque(Opaque<S>),
}

#[derive(Debug, Clone)]
pub struct SymbolicGraph<S> {
    pub vertices: Vec<GroupExpr<S>>,
    pub edges: Vec<SymbolicEdge<S>>,
    pub marks: Vec<SymbolicMark<S>>,
}

#[derive(Debug, Clone)]
pub struct SymbolicEdge<S> {
    pub from: usize,
    pub to: usize,
    pub group: GroupExpr<S>,
}

/// A finite-order element of a [`SymbolicGraph`] with its fused classes and
/// the orbit data of its centralizer acting on the fixed tree.
#[derive(Debug, Clone)]
pub struct SymbolicMark<S> {
    pub name: String,
    pub order: u64,
    /// Classes of vertex groups conjugate to the mark, one per vertex orbit.
    pub vertex_classes: Vec<(usize, ElementRef)>,
    /// Classes of edge groups conjugate to the mark.
    pub edge_classes: Vec<(usize, ElementRef)>,
    pub centralizer: Option<CentralizerDecl<S>>,
    pub centralizer_type_fp: Option<bool>,
    pub note: Option<String>,
}

/// Stabilizers of the centralizer acting on the fixed tree, one term per
/// vertex orbit and per edge orbit.
#[derive(Debug, Clone)]
pub struct CentralizerDecl<S> {
    pub vertex_terms: Vec<Term<S>>,
    pub edge_terms: Vec<Term<S>>,
}

/// The L²-Euler characteristic of one stabilizer.
#[derive(Debug, Clone)]
pub enum Term<S> {
    Value(S),
    Group(GroupExpr<S>),
    /// `C_{G_v}(x)` for `x` in the vertex group `v`.
    VertexCentralizer { vertex: usize, at: ElementRef },
    /// `C_{G_e}(y)` for `y` in the edge group `e`.
    EdgeCentralizer { edge: usize, at: ElementRef },
}

/// A group known only through declared properties.
#[derive(Debug, Clone)]
pub struct Opaque<S> {
    pub name: String,
    pub type_fp: bool,
    pub beta: Option<BettiVector<S>>,
    pub chi2: Option<S>,
    pub infinite_normal_amenable: bool,
    pub marks: Vec<OpaqueMark<S>>,
}

#[derive(Debug, Clone)]
pub struct OpaqueMark<S> {
    pub name: String,
    pub order: u64,
    pub euler: Option<S>,
    pub chi2_centralizer: Option<S>,
    pub centralizer_type_fp: Option<bool>,
    pub note: Option<String>,
}

/// Where an element lives, mirroring the shape of the expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementRef {
    Identity,
    /// An element of a `Finite` node.
    Elem(Element),
    /// One component per factor of a `Product`.
    Tuple(Vec<ElementRef>),
    /// `(x, 0)` in `H x Z`.
    CrossZ(Box<ElementRef>),
    /// An element of a vertex group of a `Graph` node.
    Vertex { vertex: usize, elem: Element },
    /// A mark declared on a `SymbolicGraph` or `Opaque` node.
    Declared(String),
}

impl ElementRef {
    /// The element at `path` (factor indices through products, `0` through
    /// `CrossZ`), identity in every other factor.
    pub fn at_path(expr: &GroupExpr<impl Sized>, path: &[usize], leaf: ElementRef) -> Result<Self> {
        let Some((&first, rest)) = path.split_first() else {
            return Ok(leaf);
        };
        match expr {
            GroupExpr::Product(factors) => {
                let child = factors.get(first).ok_or_else(|| {
                    Error::InvalidInput(format!("path index {first} beyond {} factors", factors.len()))
                })?;
                let mut parts = vec![ElementRef::Identity; factors.len()];
                parts[first] = Self::at_path(child, rest, leaf)?;
                Ok(ElementRef::Tuple(parts))
            }
            GroupExpr::CrossZ(inner) if first == 0 => {
                Ok(ElementRef::CrossZ(Box::new(Self::at_path(inner, rest, leaf)?)))
            }
            _ => Err(Error::InvalidInput(format!(
                "path index {first} does not enter a product or H x Z node"
            ))),
        }
    }
}

/// A named finite-order element of an expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedElement {
    pub name: String,
    pub order: u64,
    pub at: ElementRef,
}

impl<S> GroupExpr<S> {
    /// Free group of the given rank: trivial, `Z`, or `Free`.
    pub fn free(rank: u64) -> Self {
        match rank {
            0 => GroupExpr::Trivial,
            1 => GroupExpr::InfiniteCyclic,
            n => GroupExpr::Free(n),
        }
    }

    pub fn finite(group: FiniteGroup) -> Self {
        GroupExpr::Finite(Arc::new(group))
    }

    /// Free product `A * B` as a graph with a trivial edge.
    pub fn free_product(a: Self, b: Self) -> Self {
        GroupExpr::SymbolicGraph(SymbolicGraph {
            vertices: vec![a, b],
            edges: vec![SymbolicEdge {
                from: 0,
                to: 1,
                group: GroupExpr::Trivial,
            }],
            marks: Vec::new(),
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GroupExpr::Trivial => "trivial",
            GroupExpr::Finite(_) => "finite",
            GroupExpr::Free(_) => "free",
            GroupExpr::InfiniteCyclic => "infinite_cyclic",
            GroupExpr::Product(_) => "product",
            GroupExpr::Graph(_) => "graph",
            GroupExpr::SymbolicGraph(_) => "symbolic_graph",
            GroupExpr::CrossZ(_) => "cross_z",
            GroupExpr::Opaque(_) => "opaque",
        }
    }

    /// Structural invariants: free ranks at least 2, graph endpoints in
    /// range and connected, mark references in range.
    pub fn validate(&self) -> Result<()> {
        match self {
            GroupExpr::Free(n) if *n < 2 => Err(Error::InvalidInput(format!(
                "free group of rank {n}; use trivial or infinite_cyclic"
            ))),
            GroupExpr::Product(factors) => {
                if factors.is_empty() {
                    return Err(Error::InvalidInput("product with no factors".into()));
                }
                factors.iter().try_for_each(GroupExpr::validate)
            }
            GroupExpr::CrossZ(inner) => inner.validate(),
            GroupExpr::SymbolicGraph(g) => g.validate(),
            _ => Ok(()),
        }
    }
}

impl<S> SymbolicGraph<S> {
    fn validate(&self) -> Result<()> {
        let n = self.vertices.len();
        if n == 0 {
            return Err(Error::InvalidInput("symbolic graph has no vertices".into()));
        }
        let mut uf = crate::fusion::UnionFind::new(n);
        for (i, e) in self.edges.iter().enumerate() {
            if e.from >= n || e.to >= n {
                return Err(Error::InvalidInput(format!("symbolic edge {i} leaves the graph")));
            }
            uf.union(e.from, e.to);
            e.group.validate()?;
        }
        if (1..n).any(|v| uf.find(v) != uf.find(0)) {
            return Err(Error::Disconnected("symbolic graph".into()));
        }
        self.vertices.iter().try_for_each(GroupExpr::validate)?;
        for m in &self.marks {
            let bad_vertex = m.vertex_classes.iter().any(|(v, _)| *v >= n);
            let bad_edge = m.edge_classes.iter().any(|(e, _)| *e >= self.edges.len());
            let bad_term = m.centralizer.as_ref().is_some_and(|c| {
                c.vertex_terms.iter().chain(&c.edge_terms).any(|t| match t {
                    Term::VertexCentralizer { vertex, .. } => *vertex >= n,
                    Term::EdgeCentralizer { edge, .. } => *edge >= self.edges.len(),
                    _ => false,
                })
            });
            if bad_vertex || bad_edge || bad_term {
                return Err(Error::InvalidInput(format!(
                    "mark {} refers outside the graph",
                    m.name
                )));
            }
        }
        Ok(())
    }

    pub fn mark(&self, name: &str) -> Option<&SymbolicMark<S>> {
        self.marks.iter().find(|m| m.name == name)
    }
}

impl<S> Opaque<S> {
    pub fn mark(&self, name: &str) -> Option<&OpaqueMark<S>> {
        self.marks.iter().find(|m| m.name == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::zoo;

    type X = GroupExpr<crate::Rational>;

    #[test]
    fn free_ranks_normalize() {
        assert!(matches!(X::free(0), GroupExpr::Trivial));
        assert!(matches!(X::free(1), GroupExpr::InfiniteCyclic));
        assert!(matches!(X::free(3), GroupExpr::Free(3)));
        assert!(X::Free(1).validate().is_err());
    }

    #[test]
    fn symbolic_graph_validation() {
        let ok = X::free_product(X::free(2), X::finite(zoo::cyclic(2)));
        assert!(ok.validate().is_ok());
        let disconnected = X::SymbolicGraph(SymbolicGraph {
            vertices: vec![X::Trivial, X::Trivial],
            edges: vec![],
            marks: vec![],
        });
        assert!(matches!(disconnected.validate(), Err(Error::Disconnected(_))));
    }

    #[test]
    fn paths_build_tuples() {
        let e = X::Product(vec![X::free(2), X::CrossZ(Box::new(X::finite(zoo::cyclic(2))))]);
        let r = ElementRef::at_path(&e, &[1, 0], ElementRef::Elem(1)).unwrap();
        assert_eq!(
            r,
            ElementRef::Tuple(vec![
                ElementRef::Identity,
                ElementRef::CrossZ(Box::new(ElementRef::Elem(1)))
            ])
        );
        assert!(ElementRef::at_path(&e, &[2], ElementRef::Identity).is_err());
        assert!(ElementRef::at_path(&X::free(2), &[0], ElementRef::Identity).is_err());
    }
}
