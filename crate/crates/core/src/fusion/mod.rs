//! Graphs of finite groups and the conjugacy fusion their edges induce in
//! the fundamental group.
//!
//! Two finite-order elements of vertex groups are conjugate in the
//! fundamental group exactly when a chain of vertex-group conjugations and
//! edge-group identifications joins them. [`GraphOfGroups::fusion_classes`]
//! computes that closure with a union-find over `(vertex, class)` nodes.

mod euler;
mod union_find;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup, GroupHom};

pub use euler::{FusionReport, FusionRow, INFINITE_ORDER_NOTE};
pub use union_find::UnionFind;

/// An edge as supplied by the caller, before validation.
#[derive(Debug, Clone)]
pub struct EdgeSpec {
    pub group: FiniteGroup,
    pub from: usize,
    pub to: usize,
    pub embed_from: Vec<Element>,
    pub embed_to: Vec<Element>,
}

#[derive(Debug, Clone)]
pub struct Edge {
    pub group: Arc<FiniteGroup>,
    pub from: usize,
    pub to: usize,
    pub embed_from: GroupHom,
    pub embed_to: GroupHom,
}

/// A finite connected graph of finite groups with injective edge embeddings.
#[derive(Debug, Clone)]
pub struct GraphOfGroups {
    vertices: Vec<Arc<FiniteGroup>>,
    edges: Vec<Edge>,
    /// Edges closing a cycle of the underlying graph (loops included).
    cycle_edges: Vec<usize>,
}

/// `(vertex, conjugacy class of the vertex group)`.
pub type VertexClass = (usize, usize);
/// `(edge, conjugacy class of the edge group)`.
pub type EdgeClass = (usize, usize);

/// One conjugacy class of finite-order elements of the fundamental group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionClass {
    /// Lexicographically least member.
    pub representative: VertexClass,
    /// Sorted vertex classes fused into this class.
    pub vertex_classes: Vec<VertexClass>,
    /// Sorted edge classes whose images lie in this class.
    pub edge_classes: Vec<EdgeClass>,
    pub element_order: u64,
}

#[derive(Debug, Clone)]
pub struct FusionTable {
    node_offset: Vec<usize>,
    fusion_of_node: Vec<usize>,
    classes: Vec<FusionClass>,
}

impl FusionTable {
    pub fn classes(&self) -> &[FusionClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Fusion class containing the given vertex class.
    pub fn class_of(&self, (vertex, class): VertexClass) -> usize {
        self.fusion_of_node[self.node_offset[vertex] + class]
    }

    pub fn identity_class(&self) -> usize {
        self.class_of((0, 0))
    }
}

impl GraphOfGroups {
    /// Validates embeddings (injective homomorphisms) and connectivity.
    pub fn new(vertices: Vec<FiniteGroup>, edges: Vec<EdgeSpec>) -> Result<Self> {
        let vertices: Vec<Arc<FiniteGroup>> = vertices.into_iter().map(Arc::new).collect();
        if vertices.is_empty() {
            return Err(Error::InvalidInput("graph has no vertices".into()));
        }
        let mut checked = Vec::with_capacity(edges.len());
        for (e, spec) in edges.into_iter().enumerate() {
            for end in [spec.from, spec.to] {
                if end >= vertices.len() {
                    return Err(Error::InvalidInput(format!("edge {e} names vertex {end}")));
                }
            }
            let embed = |target: &FiniteGroup, map: Vec<Element>, side: &str| {
                let hom = GroupHom::new(&spec.group, target, map).map_err(|err| match err {
                    Error::NotHomomorphism(m) => {
                        Error::NotHomomorphism(format!("edge {e} ({side}): {m}"))
                    }
                    other => other,
                })?;
                if !hom.is_injective() {
                    return Err(Error::NotInjective(format!("edge {e} ({side})")));
                }
                Ok(hom)
            };
            let embed_from = embed(&vertices[spec.from], spec.embed_from, "from")?;
            let embed_to = embed(&vertices[spec.to], spec.embed_to, "to")?;
            checked.push(Edge {
                group: Arc::new(spec.group),
                from: spec.from,
                to: spec.to,
                embed_from,
                embed_to,
            });
        }
        let mut uf = UnionFind::new(vertices.len());
        let cycle_edges = checked
            .iter()
            .enumerate()
            .filter(|(_, e)| !uf.union(e.from, e.to))
            .map(|(i, _)| i)
            .collect();
        let root = uf.find(0);
        if let Some(v) = (0..vertices.len()).find(|&v| uf.find(v) != root) {
            return Err(Error::Disconnected(format!("vertex {v} is not reachable from vertex 0")));
        }
        Ok(GraphOfGroups {
            vertices,
            edges: checked,
            cycle_edges,
        })
    }

    pub fn vertices(&self) -> &[Arc<FiniteGroup>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edges outside a spanning tree: HNN-type, including loops.
    pub fn cycle_edges(&self) -> &[usize] {
        &self.cycle_edges
    }

    /// Glues, for every edge and every class of its group, the two image
    /// classes in the endpoint vertex groups.
    pub fn fusion_classes(&self) -> FusionTable {
        let mut node_offset = Vec::with_capacity(self.vertices.len());
        let mut nodes = Vec::new();
        for (v, g) in self.vertices.iter().enumerate() {
            node_offset.push(nodes.len());
            nodes.extend((0..g.num_classes()).map(|c| (v, c)));
        }
        let node = |(v, c): VertexClass| node_offset[v] + c;
        let image = |e: &Edge, y: Element| -> (VertexClass, VertexClass) {
            let a = (e.from, self.vertices[e.from].class_of(e.embed_from.apply(y)));
            let b = (e.to, self.vertices[e.to].class_of(e.embed_to.apply(y)));
            (a, b)
        };

        let mut uf = UnionFind::new(nodes.len());
        for e in &self.edges {
            for class in e.group.classes() {
                let (a, b) = image(e, class.representative);
                uf.union(node(a), node(b));
            }
        }

        // nodes are enumerated in lexicographic order, so the first node seen
        // in each block is its least member
        let mut block_of_root = vec![usize::MAX; nodes.len()];
        let mut fusion_of_node = vec![0; nodes.len()];
        let mut classes: Vec<FusionClass> = Vec::new();
        for (i, &vc) in nodes.iter().enumerate() {
            let root = uf.find(i);
            if block_of_root[root] == usize::MAX {
                block_of_root[root] = classes.len();
                let (v, c) = vc;
                let g = &self.vertices[v];
                classes.push(FusionClass {
                    representative: vc,
                    vertex_classes: Vec::new(),
                    edge_classes: Vec::new(),
                    element_order: g.element_order(g.classes()[c].representative),
                });
            }
            let id = block_of_root[root];
            fusion_of_node[i] = id;
            classes[id].vertex_classes.push(vc);
        }
        for (ei, e) in self.edges.iter().enumerate() {
            for (yc, class) in e.group.classes().iter().enumerate() {
                let (a, _) = image(e, class.representative);
                classes[fusion_of_node[node(a)]].edge_classes.push((ei, yc));
            }
        }
        FusionTable {
            node_offset,
            fusion_of_node,
            classes,
        }
    }

    /// Human-readable name of a fusion class: `v<vertex>:<element label>`.
    pub fn class_label(&self, table: &FusionTable, class: usize) -> String {
        let (v, c) = table.classes[class].representative;
        let g = &self.vertices[v];
        format!("v{v}:{}", g.label(g.classes()[c].representative))
    }
}

/// Alias of [`GraphOfGroups::new`].
pub fn validate_graph(vertices: Vec<FiniteGroup>, edges: Vec<EdgeSpec>) -> Result<GraphOfGroups> {
    GraphOfGroups::new(vertices, edges)
}

/// Standard small graphs of groups.
pub mod models {
    use super::*;
    use crate::group::zoo;

    /// `A * B`: one edge with trivial group.
    pub fn free_product(a: FiniteGroup, b: FiniteGroup) -> GraphOfGroups {
        let edge = EdgeSpec {
            group: FiniteGroup::trivial(),
            from: 0,
            to: 1,
            embed_from: vec![0],
            embed_to: vec![0],
        };
        GraphOfGroups::new(vec![a, b], vec![edge]).unwrap()
    }

    /// `Z/4 *_{Z/2} Z/6` with `x^2 = y^3`.
    pub fn sl2z() -> GraphOfGroups {
        let edge = EdgeSpec {
            group: zoo::cyclic(2),
            from: 0,
            to: 1,
            embed_from: vec![0, 2],
            embed_to: vec![0, 3],
        };
        GraphOfGroups::new(vec![zoo::cyclic(4), zoo::cyclic(6)], vec![edge]).unwrap()
    }

    /// `Z/2 * Z/3`.
    pub fn psl2z() -> GraphOfGroups {
        free_product(zoo::cyclic(2), zoo::cyclic(3))
    }

    /// `Z/2 * Z/2`.
    pub fn d_infinity() -> GraphOfGroups {
        free_product(zoo::cyclic(2), zoo::cyclic(2))
    }
}

#[cfg(test)]
mod tests {
    use super::models::*;
    use super::*;
    use crate::group::zoo;

    #[test]
    fn valid_free_product() {
        let g = psl2z();
        assert_eq!(g.vertices().len(), 2);
        assert!(g.cycle_edges().is_empty());
    }

    #[test]
    fn non_injective_edge() {
        let edge = EdgeSpec {
            group: zoo::cyclic(2),
            from: 0,
            to: 1,
            embed_from: vec![0, 0],
            embed_to: vec![0, 1],
        };
        let err = GraphOfGroups::new(vec![zoo::cyclic(2), zoo::cyclic(2)], vec![edge]).unwrap_err();
        assert!(matches!(err, Error::NotInjective(_)));
    }

    #[test]
    fn non_homomorphic_edge() {
        let edge = EdgeSpec {
            group: zoo::cyclic(2),
            from: 0,
            to: 1,
            embed_from: vec![0, 1],
            embed_to: vec![0, 1],
        };
        let err = GraphOfGroups::new(vec![zoo::cyclic(4), zoo::cyclic(2)], vec![edge]).unwrap_err();
        assert!(matches!(err, Error::NotHomomorphism(_)));
    }

    #[test]
    fn two_components() {
        let err = GraphOfGroups::new(vec![zoo::cyclic(2), zoo::cyclic(3)], vec![]).unwrap_err();
        assert!(matches!(err, Error::Disconnected(_)));
    }

    #[test]
    fn bad_vertex_reference() {
        let edge = EdgeSpec {
            group: FiniteGroup::trivial(),
            from: 0,
            to: 5,
            embed_from: vec![0],
            embed_to: vec![0],
        };
        assert!(GraphOfGroups::new(vec![zoo::cyclic(2)], vec![edge]).is_err());
        assert!(GraphOfGroups::new(vec![], vec![]).is_err());
    }

    fn labels(g: &GraphOfGroups) -> Vec<String> {
        let t = g.fusion_classes();
        (0..t.len()).map(|c| g.class_label(&t, c)).collect()
    }

    #[test]
    fn fusion_of_free_products() {
        assert_eq!(labels(&psl2z()), ["v0:e", "v0:a", "v1:a", "v1:a^2"]);
        assert_eq!(labels(&d_infinity()), ["v0:e", "v0:a", "v1:a"]);
    }

    #[test]
    fn fusion_of_amalgam() {
        let g = sl2z();
        let t = g.fusion_classes();
        assert_eq!(t.len(), 8);
        assert_eq!(
            labels(&g),
            ["v0:e", "v0:a", "v0:a^2", "v0:a^3", "v1:a", "v1:a^2", "v1:a^4", "v1:a^5"]
        );
        let central = t.class_of((0, 2));
        assert_eq!(central, t.class_of((1, 3)));
        assert_eq!(t.classes()[central].vertex_classes, vec![(0, 2), (1, 3)]);
        assert_eq!(t.classes()[central].edge_classes, vec![(0, 1)]);
        assert_eq!(t.classes()[t.identity_class()].edge_classes, vec![(0, 0)]);
        assert_eq!(t.classes()[central].element_order, 2);
    }

    #[test]
    fn loops_are_hnn_edges() {
        // Z/4 with the loop a -> a^3: a and a^3 are distinct classes of Z/4
        // and the stable letter conjugates one into the other
        let edge = EdgeSpec {
            group: zoo::cyclic(4),
            from: 0,
            to: 0,
            embed_from: vec![0, 1, 2, 3],
            embed_to: vec![0, 3, 2, 1],
        };
        let g = GraphOfGroups::new(vec![zoo::cyclic(4)], vec![edge]).unwrap();
        assert_eq!(g.cycle_edges(), &[0]);
        let t = g.fusion_classes();
        assert_eq!(t.len(), 3);
        assert_eq!(t.class_of((0, 1)), t.class_of((0, 3)));
    }
}
