//! Serde shapes of the input files. Rationals are `"p/q"` strings.

use serde::{Deserialize, Serialize};

/// An element named by index or label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemSpec {
    Index(usize),
    Label(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    /// Cayley table; row `a`, column `b` holds `a * b`, identity at `0`.
    Table {
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    /// Closure of permutations of `0..degree`.
    Perm {
        degree: usize,
        generators: Vec<Vec<u32>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    /// `Z/n`, `Dn`, `Sn`, `An`, `Q8`, `1`.
    Zoo { name: String },
}

/// A group given inline or as a path relative to the referring file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Path(String),
    Inline(GroupSpec),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffTerm {
    pub elem: ElemSpec,
    pub coeff: String,
}

/// `entries[i][j]` is the list of terms of the `(i, j)` entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixSpec {
    pub group: GroupRef,
    pub size: usize,
    pub entries: Vec<Vec<Vec<CoeffTerm>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeFileSpec {
    pub group: GroupRef,
    pub from: usize,
    pub to: usize,
    pub embed_from: Vec<ElemSpec>,
    pub embed_to: Vec<ElemSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: Vec<GroupRef>,
    pub edges: Vec<EdgeFileSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphRef {
    Path(String),
    Inline(GraphSpec),
}

/// `"identity"`, `{"elem": x}`, `{"tuple": [..]}`, `{"cross_z": ..}`,
/// `{"vertex": {"vertex": v, "elem": x}}` or `{"declared": name}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementRefSpec {
    Identity,
    Elem(ElemSpec),
    Tuple(Vec<ElementRefSpec>),
    CrossZ(Box<ElementRefSpec>),
    Vertex { vertex: usize, elem: ElemSpec },
    Declared(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TermSpec {
    Value(String),
    Group(ExprSpec),
    VertexCentralizer { vertex: usize, at: ElementRefSpec },
    EdgeCentralizer { edge: usize, at: ElementRefSpec },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentralizerSpec {
    #[serde(default)]
    pub vertex_terms: Vec<TermSpec>,
    #[serde(default)]
    pub edge_terms: Vec<TermSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymEdgeSpec {
    pub from: usize,
    pub to: usize,
    pub group: ExprSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymMarkSpec {
    pub name: String,
    pub order: u64,
    #[serde(default)]
    pub vertex_classes: Vec<(usize, ElementRefSpec)>,
    #[serde(default)]
    pub edge_classes: Vec<(usize, ElementRefSpec)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub centralizer: Option<CentralizerSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub centralizer_type_fp: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OpaqueMarkSpec {
    pub name: String,
    pub order: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi2_centralizer: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub centralizer_type_fp: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExprSpec {
    Trivial,
    Finite {
        group: GroupRef,
    },
    /// Rank 0 and 1 normalize to the trivial group and `Z`.
    Free {
        rank: u64,
    },
    InfiniteCyclic,
    Product {
        factors: Vec<ExprSpec>,
    },
    Graph {
        graph: GraphRef,
    },
    SymbolicGraph {
        vertices: Vec<ExprSpec>,
        edges: Vec<SymEdgeSpec>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        marks: Vec<SymMarkSpec>,
    },
    CrossZ {
        inner: Box<ExprSpec>,
    },
    Opaque {
        name: String,
        #[serde(default)]
        type_fp: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        beta: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        chi2: Option<String>,
        #[serde(default)]
        infinite_normal_amenable: bool,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        marks: Vec<OpaqueMarkSpec>,
    },
}

/// A mark given either directly by `at`, or by a `path` of factor indices
/// and the `element` found there.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MarkSpec {
    pub name: String,
    pub order: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at: Option<ElementRefSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<ElementRefSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExprFileSpec {
    pub expr: ExprSpec,
    #[serde(default)]
    pub marks: Vec<MarkSpec>,
}
