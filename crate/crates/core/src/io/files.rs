use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;

use super::spec::*;
use super::{format_rational, parse_rational};
use crate::chi::{
    BettiVector, CentralizerDecl, ElementRef, GroupExpr, MarkedElement, Opaque, OpaqueMark,
    SymbolicEdge, SymbolicGraph, SymbolicMark, Term,
};
use crate::error::{Error, Result};
use crate::fusion::{EdgeSpec, GraphOfGroups};
use crate::group::{zoo, BuildOptions, Element, FiniteGroup};
use crate::{GroupRingElement, QExpr, QMatrix, Rational};

/// An expression with its marked elements resolved.
#[derive(Debug, Clone)]
pub struct ExprFile {
    pub expr: QExpr,
    pub marks: Vec<MarkedElement>,
}

/// Resolves file references relative to `base` and builds groups under `opts`.
#[derive(Debug, Clone)]
pub struct Loader {
    base: PathBuf,
    opts: BuildOptions,
}

fn parse_json<T: DeserializeOwned>(text: &str, source: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!(
            "{source}: line {} column {}: {e}",
            e.line(),
            e.column()
        ))
    })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn parent_of(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

fn element(g: &FiniteGroup, e: &ElemSpec) -> Result<Element> {
    match e {
        ElemSpec::Index(i) if *i < g.order() => Ok(*i),
        ElemSpec::Index(i) => Err(Error::InvalidInput(format!(
            "element {i} outside a group of order {}",
            g.order()
        ))),
        ElemSpec::Label(l) => g
            .element_by_label(l)
            .ok_or_else(|| Error::InvalidInput(format!("no element labelled {l:?}"))),
    }
}

fn rational_field(s: &str, what: &str) -> Result<Rational> {
    parse_rational(s).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn subexpr<'a>(expr: &'a QExpr, path: &[usize]) -> Result<&'a QExpr> {
    let Some((&first, rest)) = path.split_first() else {
        return Ok(expr);
    };
    match expr {
        GroupExpr::Product(fs) if first < fs.len() => subexpr(&fs[first], rest),
        GroupExpr::CrossZ(inner) if first == 0 => subexpr(inner, rest),
        _ => Err(Error::InvalidInput(format!(
            "path index {first} does not enter a product or H x Z node"
        ))),
    }
}

/// Resolves labels against the node the reference points into.
fn resolve_ref(spec: &ElementRefSpec, expr: &QExpr) -> Result<ElementRef> {
    let mismatch = || {
        Error::InvalidInput(format!(
            "element reference {spec:?} does not fit a {} node",
            expr.kind()
        ))
    };
    Ok(match (spec, expr) {
        (ElementRefSpec::Identity, _) => ElementRef::Identity,
        (ElementRefSpec::Declared(n), _) => ElementRef::Declared(n.clone()),
        (ElementRefSpec::Elem(e), GroupExpr::Finite(g)) => ElementRef::Elem(element(g, e)?),
        (ElementRefSpec::Tuple(parts), GroupExpr::Product(fs)) if parts.len() == fs.len() => {
            ElementRef::Tuple(
                parts
                    .iter()
                    .zip(fs)
                    .map(|(p, f)| resolve_ref(p, f))
                    .collect::<Result<_>>()?,
            )
        }
        (ElementRefSpec::CrossZ(inner), GroupExpr::CrossZ(h)) => {
            ElementRef::CrossZ(Box::new(resolve_ref(inner, h)?))
        }
        (ElementRefSpec::Vertex { vertex, elem }, GroupExpr::Graph(g)) => {
            let group = g.vertices().get(*vertex).ok_or_else(mismatch)?;
            ElementRef::Vertex {
                vertex: *vertex,
                elem: element(group, elem)?,
            }
        }
        _ => return Err(mismatch()),
    })
}

impl Loader {
    pub fn new(base: impl Into<PathBuf>, opts: BuildOptions) -> Self {
        Loader {
            base: base.into(),
            opts,
        }
    }

    fn nested(&self, rel: &str) -> Result<(String, Loader, String)> {
        let path = self.base.join(rel);
        let text = read(&path)?;
        let loader = Loader::new(parent_of(&path), self.opts);
        Ok((text, loader, path.display().to_string()))
    }

    pub fn group(&self, r: &GroupRef) -> Result<FiniteGroup> {
        match r {
            GroupRef::Inline(spec) => self.group_spec(spec),
            GroupRef::Path(p) => {
                let (text, loader, source) = self.nested(p)?;
                loader.group_spec(&parse_json(&text, &source)?)
            }
        }
    }

    pub fn group_spec(&self, spec: &GroupSpec) -> Result<FiniteGroup> {
        match spec {
            GroupSpec::Table { table, labels } => {
                FiniteGroup::from_table(table, labels.clone(), &self.opts)
            }
            GroupSpec::Perm {
                degree,
                generators,
                labels,
            } => FiniteGroup::from_permutations(*degree, generators, labels.as_deref(), &self.opts),
            GroupSpec::Zoo { name } => {
                let g = zoo::by_name(name)
                    .ok_or_else(|| Error::InvalidInput(format!("unknown group name {name:?}")))?;
                if g.order() > self.opts.max_order {
                    return Err(Error::TooLarge {
                        order: g.order(),
                        cap: self.opts.max_order,
                    });
                }
                Ok(g)
            }
        }
    }

    pub fn matrix(&self, spec: &MatrixSpec) -> Result<QMatrix> {
        let group = Arc::new(self.group(&spec.group)?);
        if spec.entries.len() != spec.size {
            return Err(Error::SizeMismatch(format!(
                "{} rows declared size {}",
                spec.entries.len(),
                spec.size
            )));
        }
        let rows = spec
            .entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, terms)| {
                        let terms = terms
                            .iter()
                            .map(|t| {
                                Ok((
                                    element(&group, &t.elem)?,
                                    rational_field(&t.coeff, &format!("entry ({i}, {j})"))?,
                                ))
                            })
                            .collect::<Result<Vec<_>>>()?;
                        GroupRingElement::from_terms(group.clone(), terms)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        QMatrix::new(group, rows)
    }

    pub fn graph(&self, r: &GraphRef) -> Result<GraphOfGroups> {
        match r {
            GraphRef::Inline(spec) => self.graph_spec(spec),
            GraphRef::Path(p) => {
                let (text, loader, source) = self.nested(p)?;
                loader.graph_spec(&parse_json(&text, &source)?)
            }
        }
    }

    pub fn graph_spec(&self, spec: &GraphSpec) -> Result<GraphOfGroups> {
        let vertices = spec
            .vertices
            .iter()
            .map(|v| self.group(v))
            .collect::<Result<Vec<_>>>()?;
        let edges = spec
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let group = self.group(&e.group)?;
                let lookup = |v: usize, xs: &[ElemSpec]| -> Result<Vec<Element>> {
                    let target = vertices.get(v).ok_or_else(|| {
                        Error::InvalidInput(format!("edge {i} names missing vertex {v}"))
                    })?;
                    xs.iter().map(|x| element(target, x)).collect()
                };
                Ok(EdgeSpec {
                    embed_from: lookup(e.from, &e.embed_from)?,
                    embed_to: lookup(e.to, &e.embed_to)?,
                    group,
                    from: e.from,
                    to: e.to,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        GraphOfGroups::new(vertices, edges)
    }

    pub fn expr(&self, spec: &ExprSpec) -> Result<QExpr> {
        let e = self.expr_unchecked(spec)?;
        e.validate()?;
        Ok(e)
    }

    fn expr_unchecked(&self, spec: &ExprSpec) -> Result<QExpr> {
        Ok(match spec {
            ExprSpec::Trivial => GroupExpr::Trivial,
            ExprSpec::Finite { group } => GroupExpr::finite(self.group(group)?),
            ExprSpec::Free { rank } => GroupExpr::free(*rank),
            ExprSpec::InfiniteCyclic => GroupExpr::InfiniteCyclic,
            ExprSpec::Product { factors } => GroupExpr::Product(
                factors
                    .iter()
                    .map(|f| self.expr_unchecked(f))
                    .collect::<Result<_>>()?,
            ),
            ExprSpec::Graph { graph } => GroupExpr::Graph(Arc::new(self.graph(graph)?)),
            ExprSpec::CrossZ { inner } => GroupExpr::CrossZ(Box::new(self.expr_unchecked(inner)?)),
            ExprSpec::SymbolicGraph {
                vertices,
                edges,
                marks,
            } => self.symbolic_graph(vertices, edges, marks)?,
            ExprSpec::Opaque {
                name,
                type_fp,
                beta,
                chi2,
                infinite_normal_amenable,
                marks,
            } => {
                let beta = beta
                    .as_ref()
                    .map(|b| {
                        let entries = b
                            .iter()
                            .map(|x| rational_field(x, &format!("beta of {name}")))
                            .collect::<Result<Vec<_>>>()?;
                        BettiVector::new(entries)
                    })
                    .transpose()?;
                let opt = |x: &Option<String>, what: &str| {
                    x.as_ref().map(|s| rational_field(s, what)).transpose()
                };
                GroupExpr::Opaque(Opaque {
                    name: name.clone(),
                    type_fp: *type_fp,
                    beta,
                    chi2: opt(chi2, &format!("chi2 of {name}"))?,
                    infinite_normal_amenable: *infinite_normal_amenable,
                    marks: marks
                        .iter()
                        .map(|m| {
                            Ok(OpaqueMark {
                                name: m.name.clone(),
                                order: m.order,
                                euler: opt(&m.euler, &format!("euler of mark {}", m.name))?,
                                chi2_centralizer: opt(
                                    &m.chi2_centralizer,
                                    &format!("chi2_centralizer of mark {}", m.name),
                                )?,
                                centralizer_type_fp: m.centralizer_type_fp,
                                note: m.note.clone(),
                            })
                        })
                        .collect::<Result<_>>()?,
                })
            }
        })
    }

    fn symbolic_graph(
        &self,
        vertices: &[ExprSpec],
        edges: &[SymEdgeSpec],
        marks: &[SymMarkSpec],
    ) -> Result<QExpr> {
        let vertices = vertices
            .iter()
            .map(|v| self.expr_unchecked(v))
            .collect::<Result<Vec<_>>>()?;
        let edges = edges
            .iter()
            .map(|e| {
                Ok(SymbolicEdge {
                    from: e.from,
                    to: e.to,
                    group: self.expr_unchecked(&e.group)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let missing = |what: &str, i: usize| Error::InvalidInput(format!("mark refers to {what} {i}"));
        let at_vertex = |v: usize, r: &ElementRefSpec| {
            resolve_ref(r, vertices.get(v).ok_or_else(|| missing("vertex", v))?)
        };
        let at_edge = |e: usize, r: &ElementRefSpec| {
            resolve_ref(r, &edges.get(e).ok_or_else(|| missing("edge", e))?.group)
        };
        let term = |t: &TermSpec| -> Result<Term<Rational>> {
            Ok(match t {
                TermSpec::Value(v) => Term::Value(rational_field(v, "centralizer term")?),
                TermSpec::Group(g) => Term::Group(self.expr_unchecked(g)?),
                TermSpec::VertexCentralizer { vertex, at } => Term::VertexCentralizer {
                    vertex: *vertex,
                    at: at_vertex(*vertex, at)?,
                },
                TermSpec::EdgeCentralizer { edge, at } => Term::EdgeCentralizer {
                    edge: *edge,
                    at: at_edge(*edge, at)?,
                },
            })
        };
        let marks = marks
            .iter()
            .map(|m| {
                Ok(SymbolicMark {
                    name: m.name.clone(),
                    order: m.order,
                    vertex_classes: m
                        .vertex_classes
                        .iter()
                        .map(|(v, r)| Ok((*v, at_vertex(*v, r)?)))
                        .collect::<Result<_>>()?,
                    edge_classes: m
                        .edge_classes
                        .iter()
                        .map(|(e, r)| Ok((*e, at_edge(*e, r)?)))
                        .collect::<Result<_>>()?,
                    centralizer: m
                        .centralizer
                        .as_ref()
                        .map(|c| {
                            Ok(CentralizerDecl {
                                vertex_terms: c.vertex_terms.iter().map(term).collect::<Result<_>>()?,
                                edge_terms: c.edge_terms.iter().map(term).collect::<Result<_>>()?,
                            })
                        })
                        .transpose()?,
                    centralizer_type_fp: m.centralizer_type_fp,
                    note: m.note.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupExpr::SymbolicGraph(SymbolicGraph {
            vertices,
            edges,
            marks,
        }))
    }

    pub fn expr_file(&self, spec: &ExprFileSpec) -> Result<ExprFile> {
        let expr = self.expr(&spec.expr)?;
        let marks = spec
            .marks
            .iter()
            .map(|m| {
                let at = match (&m.at, &m.path, &m.element) {
                    (Some(at), None, None) => resolve_ref(at, &expr)?,
                    (None, Some(path), Some(el)) => {
                        let leaf = resolve_ref(el, subexpr(&expr, path)?)?;
                        ElementRef::at_path(&expr, path, leaf)?
                    }
                    _ => {
                        return Err(Error::InvalidInput(format!(
                            "mark {} needs either \"at\" or both \"path\" and \"element\"",
                            m.name
                        )))
                    }
                };
                Ok(MarkedElement {
                    name: m.name.clone(),
                    order: m.order,
                    at,
                })
            })
            .collect::<Result<_>>()?;
        Ok(ExprFile { expr, marks })
    }
}

pub fn parse_group(text: &str, base: &Path, opts: BuildOptions) -> Result<FiniteGroup> {
    Loader::new(base, opts).group_spec(&parse_json(text, "group")?)
}

pub fn parse_matrix(text: &str, base: &Path, opts: BuildOptions) -> Result<QMatrix> {
    Loader::new(base, opts).matrix(&parse_json(text, "matrix")?)
}

pub fn parse_graph(text: &str, base: &Path, opts: BuildOptions) -> Result<GraphOfGroups> {
    Loader::new(base, opts).graph_spec(&parse_json(text, "graph")?)
}

pub fn parse_expr(text: &str, base: &Path, opts: BuildOptions) -> Result<ExprFile> {
    Loader::new(base, opts).expr_file(&parse_json(text, "expression")?)
}

fn load<T: DeserializeOwned>(path: &Path) -> Result<(T, Loader)> {
    let text = read(path)?;
    let spec = parse_json(&text, &path.display().to_string())?;
    Ok((spec, Loader::new(parent_of(path), BuildOptions::from_env()?)))
}

/// Reads a group file; the order cap comes from the environment.
pub fn load_group(path: &Path) -> Result<FiniteGroup> {
    let (spec, loader) = load::<GroupSpec>(path)?;
    loader.group_spec(&spec)
}

pub fn load_matrix(path: &Path) -> Result<QMatrix> {
    let (spec, loader) = load::<MatrixSpec>(path)?;
    loader.matrix(&spec)
}

pub fn load_graph(path: &Path) -> Result<GraphOfGroups> {
    let (spec, loader) = load::<GraphSpec>(path)?;
    loader.graph_spec(&spec)
}

pub fn load_expr(path: &Path) -> Result<ExprFile> {
    let (spec, loader) = load::<ExprFileSpec>(path)?;
    loader.expr_file(&spec)
}

/// `zoo` when the table is exactly that of a zoo cyclic group, else the table.
pub fn group_to_spec(g: &FiniteGroup) -> GroupSpec {
    let n = g.order();
    if n <= 64 && *g == zoo::cyclic(n) {
        return GroupSpec::Zoo {
            name: if n == 1 { "1".into() } else { format!("Z/{n}") },
        };
    }
    GroupSpec::Table {
        table: g.table(),
        labels: g.labels().map(<[String]>::to_vec),
    }
}

pub fn graph_to_spec(g: &GraphOfGroups) -> GraphSpec {
    let idx = |xs: &[Element]| xs.iter().map(|&x| ElemSpec::Index(x)).collect();
    GraphSpec {
        vertices: g
            .vertices()
            .iter()
            .map(|v| GroupRef::Inline(group_to_spec(v)))
            .collect(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeFileSpec {
                group: GroupRef::Inline(group_to_spec(&e.group)),
                from: e.from,
                to: e.to,
                embed_from: idx(e.embed_from.map()),
                embed_to: idx(e.embed_to.map()),
            })
            .collect(),
    }
}

pub fn element_ref_to_spec(r: &ElementRef) -> ElementRefSpec {
    match r {
        ElementRef::Identity => ElementRefSpec::Identity,
        ElementRef::Elem(x) => ElementRefSpec::Elem(ElemSpec::Index(*x)),
        ElementRef::Tuple(parts) => {
            ElementRefSpec::Tuple(parts.iter().map(element_ref_to_spec).collect())
        }
        ElementRef::CrossZ(inner) => ElementRefSpec::CrossZ(Box::new(element_ref_to_spec(inner))),
        ElementRef::Vertex { vertex, elem } => ElementRefSpec::Vertex {
            vertex: *vertex,
            elem: ElemSpec::Index(*elem),
        },
        ElementRef::Declared(n) => ElementRefSpec::Declared(n.clone()),
    }
}

fn term_to_spec(t: &Term<Rational>) -> TermSpec {
    match t {
        Term::Value(v) => TermSpec::Value(format_rational(v)),
        Term::Group(g) => TermSpec::Group(expr_to_spec(g)),
        Term::VertexCentralizer { vertex, at } => TermSpec::VertexCentralizer {
            vertex: *vertex,
            at: element_ref_to_spec(at),
        },
        Term::EdgeCentralizer { edge, at } => TermSpec::EdgeCentralizer {
            edge: *edge,
            at: element_ref_to_spec(at),
        },
    }
}

pub fn expr_to_spec(e: &QExpr) -> ExprSpec {
    let q = |x: &Option<Rational>| x.as_ref().map(format_rational);
    match e {
        GroupExpr::Trivial => ExprSpec::Trivial,
        GroupExpr::Finite(g) => ExprSpec::Finite {
            group: GroupRef::Inline(group_to_spec(g)),
        },
        GroupExpr::Free(n) => ExprSpec::Free { rank: *n },
        GroupExpr::InfiniteCyclic => ExprSpec::InfiniteCyclic,
        GroupExpr::Product(fs) => ExprSpec::Product {
            factors: fs.iter().map(expr_to_spec).collect(),
        },
        GroupExpr::Graph(g) => ExprSpec::Graph {
            graph: GraphRef::Inline(graph_to_spec(g)),
        },
        GroupExpr::SymbolicGraph(g) => ExprSpec::SymbolicGraph {
            vertices: g.vertices.iter().map(expr_to_spec).collect(),
            edges: g
                .edges
                .iter()
                .map(|ed| SymEdgeSpec {
                    from: ed.from,
                    to: ed.to,
                    group: expr_to_spec(&ed.group),
                })
                .collect(),
            marks: g
                .marks
                .iter()
                .map(|m| SymMarkSpec {
                    name: m.name.clone(),
                    order: m.order,
                    vertex_classes: m
                        .vertex_classes
                        .iter()
                        .map(|(v, r)| (*v, element_ref_to_spec(r)))
                        .collect(),
                    edge_classes: m
                        .edge_classes
                        .iter()
                        .map(|(i, r)| (*i, element_ref_to_spec(r)))
                        .collect(),
                    centralizer: m.centralizer.as_ref().map(|c| CentralizerSpec {
                        vertex_terms: c.vertex_terms.iter().map(term_to_spec).collect(),
                        edge_terms: c.edge_terms.iter().map(term_to_spec).collect(),
                    }),
                    centralizer_type_fp: m.centralizer_type_fp,
                    note: m.note.clone(),
                })
                .collect(),
        },
        GroupExpr::CrossZ(inner) => ExprSpec::CrossZ {
            inner: Box::new(expr_to_spec(inner)),
        },
        GroupExpr::Opaque(o) => ExprSpec::Opaque {
            name: o.name.clone(),
            type_fp: o.type_fp,
            beta: o
                .beta
                .as_ref()
                .map(|b| b.entries().iter().map(format_rational).collect()),
            chi2: q(&o.chi2),
            infinite_normal_amenable: o.infinite_normal_amenable,
            marks: o
                .marks
                .iter()
                .map(|m| OpaqueMarkSpec {
                    name: m.name.clone(),
                    order: m.order,
                    euler: q(&m.euler),
                    chi2_centralizer: q(&m.chi2_centralizer),
                    centralizer_type_fp: m.centralizer_type_fp,
                    note: m.note.clone(),
                })
                .collect(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chi::{self, rho};
    use crate::Scalar;

    fn here() -> PathBuf {
        PathBuf::from(".")
    }

    #[test]
    fn group_forms() {
        let opts = BuildOptions::default();
        let t = parse_group(r#"{"kind":"table","table":[[0,1],[1,0]]}"#, &here(), opts).unwrap();
        assert_eq!(t.order(), 2);
        let p = parse_group(
            r#"{"kind":"perm","degree":3,"generators":[[1,0,2],[1,2,0]]}"#,
            &here(),
            opts,
        )
        .unwrap();
        assert_eq!(p.num_classes(), 3);
        let z = parse_group(r#"{"kind":"zoo","name":"Z/12"}"#, &here(), opts).unwrap();
        assert_eq!(z.num_classes(), 12);
        let bad = parse_group(r#"{"kind":"table","table":[[0,1],[1,1]]}"#, &here(), opts);
        assert!(matches!(bad, Err(Error::NotAGroup(_))));
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = parse_group("{\n \"kind\": \"table\",\n \"table\": [[0,]]\n}", &here(), BuildOptions::default())
            .unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }

    #[test]
    fn caps_apply_to_named_groups() {
        let opts = BuildOptions { max_order: 10 };
        let r = parse_group(r#"{"kind":"zoo","name":"S4"}"#, &here(), opts);
        assert!(matches!(r, Err(Error::TooLarge { order: 24, cap: 10 })));
    }

    #[test]
    fn matrix_with_labels() {
        let text = r#"{"group":{"kind":"zoo","name":"Q8"},"size":1,
            "entries":[[[{"elem":"1","coeff":"1/2"},{"elem":"-1","coeff":"1/2"}]]]}"#;
        let m = parse_matrix(text, &here(), BuildOptions::default()).unwrap();
        assert!(m.is_idempotent());
        assert_eq!(m.coeff(0, 0, 1), Rational::ratio(1, 2));
    }

    #[test]
    fn expression_with_path_marks() {
        let text = r#"{
          "expr": {"kind":"product","factors":[
              {"kind":"free","rank":2},
              {"kind":"cross_z","inner":{"kind":"finite","group":{"kind":"zoo","name":"S3"}}}]},
          "marks": [
              {"name":"x","order":2,"path":[1,0],"element":{"elem":"(0 1)"}},
              {"name":"one","order":1,"at":"identity"}]
        }"#;
        let f = parse_expr(text, &here(), BuildOptions::default()).unwrap();
        assert_eq!(f.marks.len(), 2);
        let ev = chi::Evaluator::new().evaluate_mark(&f.expr, &f.marks[0]);
        assert_eq!(ev.euler, Ok(Rational::ratio(0, 1)));
        assert!(ev.equal());
    }

    #[test]
    fn rho_expression_round_trips() {
        let c = rho::construct_g_rho::<Rational>(3, 7).unwrap();
        let spec = expr_to_spec(&c.expr);
        let json = serde_json::to_string(&ExprFileSpec {
            expr: spec,
            marks: vec![MarkSpec {
                name: "t".into(),
                order: 2,
                at: Some(element_ref_to_spec(&c.mark.at)),
                path: None,
                element: None,
            }],
        })
        .unwrap();
        let back = parse_expr(&json, &here(), BuildOptions::default()).unwrap();
        let ev = chi::Evaluator::new().evaluate_mark(&back.expr, &back.marks[0]);
        assert_eq!(ev.euler, Ok(Rational::ratio(3, 7)));
        assert_eq!(ev.chi2_centralizer, Ok(Rational::ratio(3, 7)));
    }
}
