//! The degeneration networks of the three- and four-dimensional real Lie
//! algebra varieties: catalog classes and parametric family regions as
//! nodes, transitions and parametric limits as directed edges, closed under
//! composition, with an oriented variant that splits non-selfdual classes
//! into right- and left-handed copies.

use crate::contract::{verify_transition_witness, ContractionFamily, WitnessOutcome};
use crate::ratfun::RatFun;
use lieclass_catalog::expr::{eval_expr, Env};
use lieclass_catalog::{Catalog, CatalogError};
use lieclass_classifier::classify;
use lieclass_core::matrix::Mat;
use lieclass_core::scalar::{qi, qr, Q};
use lieclass_core::tensor::BasisChange;
use lieclass_core::StructureConstants;
use num::Zero;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("no transition network is built for dimension {0}")]
    UnsupportedDimension(usize),
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("evidence check failed for edge {from} -> {to}: {reason}")]
    Evidence {
        from: String,
        to: String,
        reason: String,
    },
}

/// Handedness of an oriented copy of a non-selfdual node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Handed {
    R,
    L,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EdgeKind {
    /// A genuine degeneration: the target lies in the closure of the
    /// source's equivalence class.
    Transition,
    /// A limit reached by moving within the source's parameter region
    /// towards its boundary.
    ParametricLimit,
}

/// A node of the network: one catalog class, or one open region of a
/// parametric family (identified boundary points are separate nodes).
#[derive(Debug, Clone, Serialize)]
pub struct Node {
    pub name: String,
    pub class_id: String,
    /// Parameter-range description for family regions.
    pub region: Option<String>,
    /// Dimension of the node's parameter region.
    pub params: usize,
    pub selfdual: bool,
    /// Whether the node contains unimodular points.
    pub unimodular: bool,
    /// Dimension of the unimodular slice of the parameter region.
    pub unimodular_params: usize,
    pub abelian: bool,
    /// Whether the algebra has no one-dimensional central direct factor.
    pub essential: bool,
    /// Set on the split copies in the oriented variant.
    pub chirality: Option<Handed>,
    /// Parameter values of an interior sample point, in declaration order.
    #[serde(skip)]
    pub sample: Vec<Q>,
}

impl Node {
    /// A concrete member of the node's region.
    pub fn sample_tensor(&self) -> Result<StructureConstants, CatalogError> {
        Ok(Catalog::bundled()
            .instantiate(&self.class_id, &self.sample)?
            .tensor)
    }
}

/// How an edge is backed: a concrete singular basis-change family, or a
/// parameter boundary value whose tensor lands in the target class.
#[derive(Debug, Clone)]
pub enum EdgeEvidence {
    Family {
        /// Parameters instantiating the source class.
        params: Vec<Q>,
        family: ContractionFamily,
    },
    Boundary {
        /// Boundary parameter values of the source class.
        env: Vec<(String, Q)>,
        /// Parameter values the target classification must report.
        expect: Vec<(String, Q)>,
    },
}

#[derive(Debug, Clone)]
pub struct Edge {
    pub from: String,
    pub to: String,
    pub kind: EdgeKind,
    /// Short mathematical description of the degeneration mechanism.
    pub note: String,
    pub evidence: Option<EdgeEvidence>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetFilter {
    /// Every node.
    All,
    /// Non-abelian nodes.
    Star,
    /// Non-abelian nodes without a central one-dimensional factor.
    EssentialStar,
    /// Non-selfdual nodes.
    NonSelfdual,
    /// Nodes containing unimodular points.
    Unimodular,
}

impl SubsetFilter {
    pub fn admits(&self, n: &Node) -> bool {
        match self {
            SubsetFilter::All => true,
            SubsetFilter::Star => !n.abelian,
            SubsetFilter::EssentialStar => !n.abelian && n.essential,
            SubsetFilter::NonSelfdual => !n.selfdual,
            SubsetFilter::Unimodular => n.unimodular,
        }
    }
}

/// Relative topology of an ordered pair of nodes, induced by the
/// specialization order of the network.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairTopology {
    /// The first node degenerates to the second: the first is open, the
    /// second closed in the pair.
    FirstOpen,
    /// The reverse degeneration.
    SecondOpen,
    /// No degeneration either way: both points are closed.
    Discrete,
    /// Mutual degeneration: the points are topologically indistinguishable.
    Indiscrete,
}

#[derive(Debug, Clone)]
pub struct TransitionGraph {
    pub dim: usize,
    pub oriented: bool,
    nodes: Vec<Node>,
    base_edges: Vec<Edge>,
    /// Transitive closure over node indices, irreflexive.
    closure: BTreeSet<(usize, usize)>,
}

impl TransitionGraph {
    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn base_edges(&self) -> &[Edge] {
        &self.base_edges
    }

    pub fn node(&self, name: &str) -> Option<&Node> {
        self.nodes.iter().find(|n| n.name == name)
    }

    fn index(&self, name: &str) -> Result<usize, GraphError> {
        self.nodes
            .iter()
            .position(|n| n.name == name)
            .ok_or_else(|| GraphError::UnknownNode(name.to_string()))
    }

    /// Whether the target lies in the closure of the source (via any chain
    /// of base edges).
    pub fn has_transition(&self, from: &str, to: &str) -> Result<bool, GraphError> {
        let f = self.index(from)?;
        let t = self.index(to)?;
        Ok(self.closure.contains(&(f, t)))
    }

    pub fn has_base_edge(&self, from: &str, to: &str) -> bool {
        self.base_edges.iter().any(|e| e.from == from && e.to == to)
    }

    /// Names of all nodes reachable from `from` by at least one edge.
    pub fn reachable(&self, from: &str) -> Result<Vec<&str>, GraphError> {
        let f = self.index(from)?;
        Ok(self
            .nodes
            .iter()
            .enumerate()
            .filter(|(i, _)| self.closure.contains(&(f, *i)))
            .map(|(_, n)| n.name.as_str())
            .collect())
    }

    /// Nodes of the filtered subset with no outgoing transition staying
    /// inside the subset.
    pub fn atoms(&self, filter: SubsetFilter) -> Vec<&str> {
        self.nodes
            .iter()
            .enumerate()
            .filter(|(_, n)| filter.admits(n))
            .filter(|(i, _)| {
                !self.nodes.iter().enumerate().any(|(j, m)| {
                    j != *i && filter.admits(m) && self.closure.contains(&(*i, j))
                })
            })
            .map(|(_, n)| n.name.as_str())
            .collect()
    }

    /// Largest parameter-region dimension over the filtered subset; under
    /// the unimodular filter, the dimension of the unimodular slices.
    pub fn space_dimension(&self, filter: SubsetFilter) -> usize {
        self.nodes
            .iter()
            .filter(|n| filter.admits(n))
            .map(|n| {
                if filter == SubsetFilter::Unimodular {
                    n.unimodular_params
                } else {
                    n.params
                }
            })
            .max()
            .unwrap_or(0)
    }

    pub fn two_point_topology(&self, a: &str, b: &str) -> Result<PairTopology, GraphError> {
        let ab = self.has_transition(a, b)?;
        let ba = self.has_transition(b, a)?;
        Ok(match (ab, ba) {
            (true, true) => PairTopology::Indiscrete,
            (true, false) => PairTopology::FirstOpen,
            (false, true) => PairTopology::SecondOpen,
            (false, false) => PairTopology::Discrete,
        })
    }

    /// Check one edge's stored evidence: a family must reproduce the target
    /// class as a proper limit; a boundary value must instantiate into it.
    pub fn check_evidence(&self, edge: &Edge) -> Result<(), GraphError> {
        let fail = |reason: String| GraphError::Evidence {
            from: edge.from.clone(),
            to: edge.to.clone(),
            reason,
        };
        let Some(evidence) = &edge.evidence else {
            return Ok(());
        };
        let source = self
            .node(&edge.from)
            .ok_or_else(|| GraphError::UnknownNode(edge.from.clone()))?;
        let target = self
            .node(&edge.to)
            .ok_or_else(|| GraphError::UnknownNode(edge.to.clone()))?;
        let limit = match evidence {
            EdgeEvidence::Family { params, family } => {
                let sc = Catalog::bundled()
                    .instantiate(&source.class_id, params)?
                    .tensor;
                match verify_transition_witness(&sc, family)
                    .map_err(|e| fail(e.to_string()))?
                {
                    WitnessOutcome::Limit(c) => c,
                    WitnessOutcome::Improper(_) => {
                        return Err(fail("the family limit is improper".into()))
                    }
                    WitnessOutcome::NoLimit => {
                        return Err(fail("the family limit diverges".into()))
                    }
                }
            }
            EdgeEvidence::Boundary { env, expect } => {
                let env: Env = env.iter().cloned().collect();
                let sc = boundary_tensor(&source.class_id, &env)?;
                let c = classify(&sc).map_err(|e| fail(e.to_string()))?;
                for (name, want) in expect {
                    let got = c
                        .params
                        .get(name)
                        .and_then(|p| p.as_rational())
                        .ok_or_else(|| fail(format!("missing parameter `{name}`")))?;
                    if got != want {
                        return Err(fail(format!(
                            "parameter `{name}` is {} instead of {}",
                            lieclass_core::format_q(got),
                            lieclass_core::format_q(want)
                        )));
                    }
                }
                c
            }
        };
        if limit.id != target.class_id {
            return Err(fail(format!(
                "limit classifies as {} instead of {}",
                limit.id, target.class_id
            )));
        }
        Ok(())
    }

    /// DOT rendering of the base edges. Unimodular nodes are drawn as
    /// double circles; parametric regions and parametric-limit edges are
    /// dashed.
    pub fn to_dot(&self) -> String {
        fn ident(name: &str) -> String {
            if name
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                name.to_string()
            } else {
                format!("\"{name}\"")
            }
        }
        let mut out = String::new();
        out.push_str("digraph transitions {\n  rankdir=LR;\n  node [shape=circle];\n");
        for n in &self.nodes {
            let mut attrs = Vec::new();
            if n.unimodular {
                attrs.push("shape=doublecircle".to_string());
            }
            if n.params > 0 {
                attrs.push("style=dashed".to_string());
            }
            if let Some(c) = n.chirality {
                attrs.push(format!("color={}", if c == Handed::R { "blue" } else { "red" }));
            }
            if attrs.is_empty() {
                out.push_str(&format!("  {};\n", ident(&n.name)));
            } else {
                out.push_str(&format!("  {} [{}];\n", ident(&n.name), attrs.join(", ")));
            }
        }
        for e in &self.base_edges {
            let style = match e.kind {
                EdgeKind::Transition => String::new(),
                EdgeKind::ParametricLimit => " [style=dashed]".to_string(),
            };
            out.push_str(&format!(
                "  {} -> {}{};\n",
                ident(&e.from),
                ident(&e.to),
                style
            ));
        }
        out.push_str("}\n");
        out
    }

    /// JSON rendering: node metadata, annotated base edges, and the full
    /// closure as an ordered pair list.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<_> = self
            .base_edges
            .iter()
            .map(|e| {
                serde_json::json!({
                    "from": e.from,
                    "to": e.to,
                    "kind": match e.kind {
                        EdgeKind::Transition => "transition",
                        EdgeKind::ParametricLimit => "parametric-limit",
                    },
                    "note": e.note,
                    "witnessed": e.evidence.is_some(),
                })
            })
            .collect();
        let closure: Vec<_> = self
            .closure
            .iter()
            .map(|&(f, t)| {
                serde_json::json!([self.nodes[f].name, self.nodes[t].name])
            })
            .collect();
        serde_json::json!({
            "dim": self.dim,
            "oriented": self.oriented,
            "nodes": self.nodes,
            "base_edges": edges,
            "closure": closure,
        })
    }
}

/// Instantiate a class's bracket table at arbitrary parameter values,
/// bypassing the admissible-range checks: used for boundary points of a
/// family that the catalog assigns to a different class.
pub fn boundary_tensor(class_id: &str, env: &Env) -> Result<StructureConstants, CatalogError> {
    let class = Catalog::bundled()
        .get(class_id)
        .ok_or_else(|| CatalogError::UnknownClass(class_id.to_string()))?;
    let mut sc = StructureConstants::new(class.dim)?;
    for b in &class.brackets {
        for (k, coeff) in &b.terms {
            let c = eval_expr(coeff, env)?;
            if !c.is_zero() {
                sc.set(b.i, b.j, *k, c)?;
            }
        }
    }
    Ok(sc)
}

pub fn build_graph(dim: usize, oriented: bool) -> Result<TransitionGraph, GraphError> {
    let (nodes, edges) = match dim {
        3 => (k3_nodes(), k3_edges()),
        4 => (k4_nodes(), k4_edges()),
        other => return Err(GraphError::UnsupportedDimension(other)),
    };
    let (nodes, edges) = if oriented {
        orient(nodes, edges)
    } else {
        (nodes, edges)
    };
    let mut graph = TransitionGraph {
        dim,
        oriented,
        nodes,
        base_edges: edges,
        closure: BTreeSet::new(),
    };
    graph.closure = transitive_closure(&graph);
    Ok(graph)
}

fn transitive_closure(g: &TransitionGraph) -> BTreeSet<(usize, usize)> {
    let n = g.nodes.len();
    let idx: BTreeMap<&str, usize> = g
        .nodes
        .iter()
        .enumerate()
        .map(|(i, node)| (node.name.as_str(), i))
        .collect();
    let mut reach = vec![vec![false; n]; n];
    for e in &g.base_edges {
        reach[idx[e.from.as_str()]][idx[e.to.as_str()]] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    for (i, row) in reach.iter().enumerate() {
        for (j, &r) in row.iter().enumerate() {
            if r && i != j {
                out.insert((i, j));
            }
        }
    }
    out
}

/// Split every non-selfdual node into a right- and a left-handed copy.
/// Edges between non-selfdual nodes stay within one handedness; a selfdual
/// source reaches both copies of a non-selfdual target; a non-selfdual
/// source reaches a selfdual target from both copies.
fn orient(nodes: Vec<Node>, edges: Vec<Edge>) -> (Vec<Node>, Vec<Edge>) {
    let split: BTreeSet<String> = nodes
        .iter()
        .filter(|n| !n.selfdual)
        .map(|n| n.name.clone())
        .collect();
    let mut out_nodes = Vec::new();
    for n in nodes {
        if split.contains(&n.name) {
            for handed in [Handed::R, Handed::L] {
                let mut copy = n.clone();
                copy.name = format!("{}^{:?}", n.name, handed);
                copy.chirality = Some(handed);
                out_nodes.push(copy);
            }
        } else {
            out_nodes.push(n);
        }
    }
    let mut out_edges = Vec::new();
    for e in edges {
        let from_split = split.contains(&e.from);
        let to_split = split.contains(&e.to);
        let pairs: Vec<(String, String)> = match (from_split, to_split) {
            (false, false) => vec![(e.from.clone(), e.to.clone())],
            (true, false) => vec![
                (format!("{}^R", e.from), e.to.clone()),
                (format!("{}^L", e.from), e.to.clone()),
            ],
            (false, true) => vec![
                (e.from.clone(), format!("{}^R", e.to)),
                (e.from.clone(), format!("{}^L", e.to)),
            ],
            (true, true) => vec![
                (format!("{}^R", e.from), format!("{}^R", e.to)),
                (format!("{}^L", e.from), format!("{}^L", e.to)),
            ],
        };
        for (from, to) in pairs {
            out_edges.push(Edge {
                from,
                to,
                kind: e.kind,
                note: e.note.clone(),
                evidence: None,
            });
        }
    }
    (out_nodes, out_edges)
}

struct NodeSpec {
    name: &'static str,
    class_id: &'static str,
    region: Option<&'static str>,
    params: usize,
    unimodular: bool,
    unimodular_params: usize,
    abelian: bool,
    essential: bool,
    sample: Vec<Q>,
}

fn make_nodes(specs: Vec<NodeSpec>) -> Vec<Node> {
    let cat = Catalog::bundled();
    specs
        .into_iter()
        .map(|s| {
            let class = cat
                .get(s.class_id)
                .unwrap_or_else(|| panic!("unknown class {}", s.class_id));
            Node {
                name: s.name.to_string(),
                class_id: s.class_id.to_string(),
                region: s.region.map(str::to_string),
                params: s.params,
                selfdual: class.selfdual,
                unimodular: s.unimodular,
                unimodular_params: s.unimodular_params,
                abelian: s.abelian,
                essential: s.essential,
                chirality: None,
                sample: s.sample,
            }
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn spec(
    name: &'static str,
    class_id: &'static str,
    region: Option<&'static str>,
    params: usize,
    unimodular: bool,
    unimodular_params: usize,
    abelian: bool,
    essential: bool,
    sample: Vec<Q>,
) -> NodeSpec {
    NodeSpec {
        name,
        class_id,
        region,
        params,
        unimodular,
        unimodular_params,
        abelian,
        essential,
        sample,
    }
}

fn k3_nodes() -> Vec<Node> {
    make_nodes(vec![
        spec("I", "3A_1", None, 0, true, 0, true, false, vec![]),
        spec("II", "A_{3,1}", None, 0, true, 0, false, true, vec![]),
        spec("III", "A_1+A_2", None, 0, false, 0, false, false, vec![]),
        spec("IV", "A_{3,2}", None, 0, false, 0, false, true, vec![]),
        spec("V", "A_{3,3}", None, 0, false, 0, false, true, vec![]),
        spec("VI_0", "A_{3,4}", None, 0, true, 0, false, true, vec![]),
        spec(
            "VI_h",
            "A_{3,5}",
            Some("0 < |a| < 1"),
            1,
            false,
            0,
            false,
            true,
            vec![qr(1, 2)],
        ),
        spec("VII_0", "A_{3,6}", None, 0, true, 0, false, true, vec![]),
        spec(
            "VII_h",
            "A_{3,7}",
            Some("a > 0"),
            1,
            false,
            0,
            false,
            true,
            vec![qi(1)],
        ),
        spec("VIII", "A_{3,8}", None, 0, true, 0, false, true, vec![]),
        spec("IX", "A_{3,9}", None, 0, true, 0, false, true, vec![]),
    ])
}

fn edge(from: &'static str, to: &'static str, kind: EdgeKind, note: &'static str) -> Edge {
    Edge {
        from: from.to_string(),
        to: to.to_string(),
        kind,
        note: note.to_string(),
        evidence: None,
    }
}

fn with_family(mut e: Edge, params: Vec<Q>, family: ContractionFamily) -> Edge {
    e.evidence = Some(EdgeEvidence::Family { params, family });
    e
}

fn with_boundary(mut e: Edge, env: Vec<(&str, Q)>, expect: Vec<(&str, Q)>) -> Edge {
    e.evidence = Some(EdgeEvidence::Boundary {
        env: env.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        expect: expect.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
    });
    e
}

/// [[1, 1/t, 0], [0, -1, 0], [0, 0, t]]: mixes the two eigendirections of
/// the scaling generator while crushing the generator itself; the surviving
/// bracket is the commutator of the mixed direction with the generator.
fn shear_family() -> ContractionFamily {
    ContractionFamily::General {
        entries: vec![
            vec![RatFun::one(), RatFun::t_inv(), RatFun::zero()],
            vec![RatFun::zero(), RatFun::constant(qi(-1)), RatFun::zero()],
            vec![RatFun::zero(), RatFun::zero(), RatFun::t()],
        ],
    }
}

/// diag(1, -1/t, t): blows up one rotated direction against the crushed
/// rotation generator.
fn rotation_shear_family() -> ContractionFamily {
    ContractionFamily::General {
        entries: vec![
            vec![RatFun::one(), RatFun::zero(), RatFun::zero()],
            vec![RatFun::zero(), RatFun::t_inv().neg(), RatFun::zero()],
            vec![RatFun::zero(), RatFun::zero(), RatFun::t()],
        ],
    }
}

fn iw_with_rows(rows: Vec<Vec<i64>>, m: usize) -> ContractionFamily {
    let mat = Mat::from_rows(
        rows.into_iter()
            .map(|r| r.into_iter().map(qi).collect())
            .collect(),
    )
    .transpose();
    ContractionFamily::InonuWigner {
        basis: BasisChange::new(mat).expect("witness basis is invertible"),
        m,
    }
}

fn k3_edges() -> Vec<Edge> {
    use EdgeKind::{ParametricLimit, Transition};
    vec![
        with_family(
            edge("VI_h", "II", Transition, "shear limit mixing the two eigendirections"),
            vec![qr(1, 2)],
            shear_family(),
        ),
        with_family(
            edge("VII_h", "II", Transition, "shear limit of the rotating frame"),
            vec![qi(1)],
            rotation_shear_family(),
        ),
        edge(
            "VI_h",
            "IV",
            ParametricLimit,
            "eigenvalue ratio degenerates to a double eigenvalue with a single block",
        ),
        edge(
            "VII_h",
            "IV",
            ParametricLimit,
            "rotation part vanishes relative to the growing real part",
        ),
        with_boundary(
            edge("VI_h", "VI_0", ParametricLimit, "eigenvalue ratio tends to -1"),
            vec![("a", qi(-1))],
            vec![],
        ),
        with_boundary(
            edge("VII_h", "VII_0", ParametricLimit, "real part of the spiral tends to 0"),
            vec![("a", Q::zero())],
            vec![],
        ),
        with_boundary(
            edge("VI_h", "III", ParametricLimit, "one eigenvalue tends to 0"),
            vec![("a", Q::zero())],
            vec![],
        ),
        with_family(
            edge("IV", "II", Transition, "keeping the sheared direction, crushing the rest"),
            vec![],
            iw_with_rows(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]], 1),
        ),
        with_family(
            edge("IV", "V", Transition, "off-diagonal entry of the single block scales away"),
            vec![],
            ContractionFamily::General {
                entries: vec![
                    vec![RatFun::one(), RatFun::zero(), RatFun::zero()],
                    vec![RatFun::zero(), RatFun::t(), RatFun::zero()],
                    vec![RatFun::zero(), RatFun::zero(), RatFun::one()],
                ],
            },
        ),
        with_family(
            edge("II", "I", Transition, "uniform scaling kills the only bracket"),
            vec![],
            ContractionFamily::scaling(3),
        ),
        with_family(
            edge("V", "I", Transition, "uniform scaling kills all brackets"),
            vec![],
            ContractionFamily::scaling(3),
        ),
        edge(
            "III",
            "II",
            Transition,
            "shear limit of the plane with one scaled and one inert direction",
        ),
        with_family(
            edge("VIII", "VI_0", Transition, "keeping the split scaling generator"),
            vec![],
            ContractionFamily::Saletan {
                u: Mat::diagonal(&[Q::zero(), qi(1), Q::zero()]),
                v: Mat::diagonal(&[qi(1), Q::zero(), qi(1)]),
            },
        ),
        with_family(
            edge("VIII", "VII_0", Transition, "keeping an elliptic generator"),
            vec![],
            iw_with_rows(vec![vec![1, 0, -1], vec![0, 1, 0], vec![1, 0, 1]], 1),
        ),
        with_family(
            edge("IX", "VII_0", Transition, "keeping one rotation generator"),
            vec![],
            ContractionFamily::coordinate_split(3, 1).unwrap(),
        ),
        with_family(
            edge("VI_0", "II", Transition, "shear limit mixing the two eigendirections"),
            vec![],
            shear_family(),
        ),
        with_family(
            edge("VII_0", "II", Transition, "shear limit of the rotating frame"),
            vec![],
            rotation_shear_family(),
        ),
    ]
}

fn k4_nodes() -> Vec<Node> {
    make_nodes(vec![
        spec("4A_1", "4A_1", None, 0, true, 0, true, false, vec![]),
        spec("II+R", "A_1+A_{3,1}", None, 0, true, 0, false, false, vec![]),
        spec("III+R", "2A_1+A_2", None, 0, false, 0, false, false, vec![]),
        spec("IV+R", "A_1+A_{3,2}", None, 0, false, 0, false, false, vec![]),
        spec("V+R", "A_1+A_{3,3}", None, 0, false, 0, false, false, vec![]),
        spec("VI_0+R", "A_1+A_{3,4}", None, 0, true, 0, false, false, vec![]),
        spec(
            "VI_h+R",
            "A_1+A_{3,5}",
            Some("0 < |a| < 1"),
            1,
            false,
            0,
            false,
            false,
            vec![qr(1, 2)],
        ),
        spec("VII_0+R", "A_1+A_{3,6}", None, 0, true, 0, false, false, vec![]),
        spec(
            "VII_h+R",
            "A_1+A_{3,7}",
            Some("a > 0"),
            1,
            false,
            0,
            false,
            false,
            vec![qi(1)],
        ),
        spec("VIII+R", "A_1+A_{3,8}", None, 0, true, 0, false, false, vec![]),
        spec("IX+R", "A_1+A_{3,9}", None, 0, true, 0, false, false, vec![]),
        spec("2A_2", "2A_2", None, 0, false, 0, false, true, vec![]),
        spec("A_{4,1}", "A_{4,1}", None, 0, true, 0, false, true, vec![]),
        spec(
            "A_{4,2}",
            "A_{4,2}",
            Some("a not in {0, 1}"),
            1,
            true,
            0,
            false,
            true,
            vec![qi(3)],
        ),
        spec(
            "IV^(4)",
            "A_{4,2}",
            Some("a = 1"),
            0,
            false,
            0,
            false,
            true,
            vec![qi(1)],
        ),
        spec("A_{4,3}", "A_{4,3}", None, 0, false, 0, false, true, vec![]),
        spec("A_{4,4}", "A_{4,4}", None, 0, false, 0, false, true, vec![]),
        spec(
            "A_{4,5}",
            "A_{4,5}",
            Some("-1 <= a < b < 1, ab != 0"),
            2,
            true,
            1,
            false,
            true,
            vec![qr(-1, 3), qr(1, 2)],
        ),
        spec(
            "A^{1,b}_{4,5}",
            "A_{4,5}",
            Some("b = 1, two eigenvalues at the top"),
            1,
            false,
            0,
            false,
            true,
            vec![qr(1, 2), qi(1)],
        ),
        spec(
            "A^{a,a}_{4,5}",
            "A_{4,5}",
            Some("a = b < 1, double bottom eigenvalue"),
            1,
            true,
            0,
            false,
            true,
            vec![qr(1, 2), qr(1, 2)],
        ),
        spec(
            "V^(4)",
            "A_{4,5}",
            Some("a = b = 1"),
            0,
            false,
            0,
            false,
            true,
            vec![qi(1), qi(1)],
        ),
        spec(
            "A_{4,6}",
            "A_{4,6}",
            Some("a != 0, b >= 0"),
            2,
            true,
            1,
            false,
            true,
            vec![qi(2), qr(1, 3)],
        ),
        spec("A_{4,7}", "A_{4,7}", None, 0, false, 0, false, true, vec![]),
        spec("A_{4,8}", "A_{4,8}", None, 0, true, 0, false, true, vec![]),
        spec(
            "A^{-1<b<0}_{4,9}",
            "A_{4,9}",
            Some("-1 < b < 0"),
            1,
            false,
            0,
            false,
            true,
            vec![qr(-1, 2)],
        ),
        spec(
            "A^0_{4,9}",
            "A_{4,9}",
            Some("b = 0"),
            0,
            false,
            0,
            false,
            true,
            vec![Q::zero()],
        ),
        spec(
            "A^{0<b<1}_{4,9}",
            "A_{4,9}",
            Some("0 < b < 1"),
            1,
            false,
            0,
            false,
            true,
            vec![qr(1, 4)],
        ),
        spec(
            "A^1_{4,9}",
            "A_{4,9}",
            Some("b = 1"),
            0,
            false,
            0,
            false,
            true,
            vec![qi(1)],
        ),
        spec("A_{4,10}", "A_{4,10}", None, 0, true, 0, false, true, vec![]),
        spec(
            "A_{4,11}",
            "A_{4,11}",
            Some("a > 0"),
            1,
            false,
            0,
            false,
            true,
            vec![qi(3)],
        ),
        spec("A_{4,12}", "A_{4,12}", None, 0, false, 0, false, true, vec![]),
    ])
}

fn k4_edges() -> Vec<Edge> {
    use EdgeKind::{ParametricLimit, Transition};
    // Direct-sum embedding of every three-dimensional edge.
    let lift = |name: &str| -> String {
        if name == "I" {
            "4A_1".to_string()
        } else {
            format!("{name}+R")
        }
    };
    let mut edges: Vec<Edge> = k3_edges()
        .into_iter()
        .map(|e| Edge {
            from: lift(&e.from),
            to: lift(&e.to),
            kind: e.kind,
            note: format!("abelian-factor embedding: {}", e.note),
            evidence: None,
        })
        .collect();
    edges.extend(vec![
        with_family(
            edge(
                "V+R",
                "II+R",
                Transition,
                "central direction mixes into an eigendirection of the uniform scaling",
            ),
            vec![],
            ContractionFamily::General {
                entries: vec![
                    vec![RatFun::one(), RatFun::zero(), RatFun::zero(), RatFun::t_inv()],
                    vec![RatFun::zero(), RatFun::one(), RatFun::zero(), RatFun::zero()],
                    vec![RatFun::zero(), RatFun::zero(), RatFun::t(), RatFun::zero()],
                    vec![
                        RatFun::zero(),
                        RatFun::zero(),
                        RatFun::zero(),
                        RatFun::constant(qi(-1)),
                    ],
                ],
            },
        ),
        edge(
            "VI_0+R",
            "A_{4,1}",
            Transition,
            "central extension of the traceless scaling plane",
        ),
        edge(
            "VII_0+R",
            "A_{4,1}",
            Transition,
            "central extension of the rotation plane",
        ),
        with_family(
            edge("A_{4,1}", "II+R", Transition, "crushing the top of the nilpotent tower"),
            vec![],
            iw_with_rows(
                vec![
                    vec![1, 0, 0, 0],
                    vec![0, 1, 0, 0],
                    vec![0, 0, 0, 1],
                    vec![0, 0, 1, 0],
                ],
                3,
            ),
        ),
        edge(
            "VIII+R",
            "A_{4,8}",
            Transition,
            "central extension of the split form's scaling plane",
        ),
        edge(
            "VIII+R",
            "A_{4,10}",
            Transition,
            "central extension of an elliptic plane of the split form",
        ),
        edge(
            "IX+R",
            "A_{4,10}",
            Transition,
            "central extension of a rotation plane of the compact form",
        ),
        edge("2A_2", "VI_h+R", Transition, "merging the two scaling planes"),
        edge(
            "2A_2",
            "VI_0+R",
            Transition,
            "merging the two scaling planes with opposite weights",
        ),
        edge("2A_2", "A_{4,3}", Transition, "one plane degenerates to a shear"),
        edge(
            "2A_2",
            "A^0_{4,9}",
            Transition,
            "the two planes fuse through a central extension",
        ),
        edge(
            "A_{4,4}",
            "A_{4,1}",
            Transition,
            "single full-size block with the eigenvalue scaled away",
        ),
        edge(
            "A_{4,4}",
            "IV^(4)",
            ParametricLimit,
            "geometric multiplicity of the triple eigenvalue increases",
        ),
        with_boundary(
            edge("A_{4,2}", "IV+R", ParametricLimit, "isolated eigenvalue tends to 0"),
            vec![("a", Q::zero())],
            vec![],
        ),
        edge(
            "A_{4,2}",
            "A_{4,4}",
            ParametricLimit,
            "isolated eigenvalue joins the double one and the blocks merge",
        ),
        edge(
            "A_{4,2}",
            "A_{4,3}",
            ParametricLimit,
            "isolated eigenvalue dominates and the rest rescales to nilpotent",
        ),
        edge(
            "A_{4,2}",
            "A^{1,b}_{4,5}",
            Transition,
            "geometric multiplicity of the double eigenvalue increases",
        ),
        edge(
            "A_{4,2}",
            "A^{a,a}_{4,5}",
            Transition,
            "geometric multiplicity increases after renormalizing the dominant eigenvalue",
        ),
        edge("A_{4,2}", "A_{4,1}", Transition, "all eigenvalues scale away"),
        edge(
            "IV^(4)",
            "II+R",
            Transition,
            "triple eigenvalue scales away keeping one shear",
        ),
        edge(
            "IV^(4)",
            "V^(4)",
            Transition,
            "geometric multiplicity of the triple eigenvalue increases",
        ),
        edge("A_{4,3}", "A_{4,1}", Transition, "remaining eigenvalue scales away"),
        edge(
            "A_{4,3}",
            "III+R",
            Transition,
            "geometric multiplicity of the zero eigenvalue increases",
        ),
        edge(
            "A_{4,5}",
            "A_{4,2}",
            ParametricLimit,
            "two eigenvalues collide into a single block",
        ),
        edge(
            "A_{4,5}",
            "A_{4,4}",
            ParametricLimit,
            "all three eigenvalues collide into one block",
        ),
        edge(
            "A_{4,5}",
            "IV+R",
            ParametricLimit,
            "top eigenvalues collide while the bottom one vanishes",
        ),
        with_boundary(
            edge(
                "A_{4,5}",
                "VI_h+R",
                ParametricLimit,
                "one eigenvalue tends to 0, leaving a real scaling plane",
            ),
            vec![("a", qr(1, 2)), ("b", Q::zero())],
            vec![],
        ),
        with_boundary(
            edge(
                "A_{4,5}",
                "VI_0+R",
                ParametricLimit,
                "one eigenvalue tends to 0 and the others to opposite values",
            ),
            vec![("a", qi(-1)), ("b", Q::zero())],
            vec![],
        ),
        edge(
            "A_{4,5}",
            "A_{4,3}",
            ParametricLimit,
            "two eigenvalues tend to 0 and merge into a nilpotent block",
        ),
        edge("A_{4,5}", "A_{4,1}", Transition, "all eigenvalues scale away"),
        edge(
            "A^{1,b}_{4,5}",
            "IV^(4)",
            ParametricLimit,
            "remaining eigenvalue joins the double one",
        ),
        edge(
            "A^{1,b}_{4,5}",
            "V+R",
            ParametricLimit,
            "remaining eigenvalue tends to 0",
        ),
        edge(
            "A^{1,b}_{4,5}",
            "II+R",
            Transition,
            "double eigenvalue degenerates to a shear, the rest scales away",
        ),
        edge(
            "A^{a,a}_{4,5}",
            "IV^(4)",
            ParametricLimit,
            "double eigenvalue joins the dominant one",
        ),
        with_boundary(
            edge("A^{a,a}_{4,5}", "III+R", ParametricLimit, "double eigenvalue tends to 0"),
            vec![("a", Q::zero()), ("b", Q::zero())],
            vec![],
        ),
        edge(
            "A^{a,a}_{4,5}",
            "II+R",
            Transition,
            "eigenvalues degenerate to a shear and scale away",
        ),
        with_family(
            edge("V^(4)", "4A_1", Transition, "uniform scaling kills all brackets"),
            vec![qi(1), qi(1)],
            ContractionFamily::scaling(4),
        ),
        with_boundary(
            edge(
                "A_{4,6}",
                "VII_h+R",
                ParametricLimit,
                "real eigenvalue tends to 0, leaving a spiral plane",
            ),
            vec![("a", Q::zero()), ("b", qi(1))],
            vec![],
        ),
        with_boundary(
            edge(
                "A_{4,6}",
                "VII_0+R",
                ParametricLimit,
                "real eigenvalue and the spiral's real part both tend to 0",
            ),
            vec![("a", Q::zero()), ("b", Q::zero())],
            vec![],
        ),
        edge(
            "A_{4,6}",
            "A_{4,2}",
            ParametricLimit,
            "rotation dominates and flattens to a double real block",
        ),
        edge(
            "A_{4,6}",
            "A_{4,4}",
            ParametricLimit,
            "rotation dominates with matched real parts, giving one block",
        ),
        edge(
            "A_{4,6}",
            "A_{4,3}",
            ParametricLimit,
            "real eigenvalue dominates and the spiral rescales to nilpotent",
        ),
        edge(
            "A_{4,6}",
            "IV+R",
            ParametricLimit,
            "rotation dominates while the real eigenvalue stays bounded",
        ),
        edge("A_{4,6}", "A_{4,1}", Transition, "all eigenvalues scale away"),
        edge(
            "A_{4,7}",
            "A_{4,2}",
            Transition,
            "central bracket of the nilpotent ideal scales away",
        ),
        edge(
            "A_{4,7}",
            "A^1_{4,9}",
            Transition,
            "geometric multiplicity of the double eigenvalue increases",
        ),
        with_boundary(
            edge("A^{-1<b<0}_{4,9}", "A_{4,8}", ParametricLimit, "parameter tends to -1"),
            vec![("b", qi(-1))],
            vec![],
        ),
        with_boundary(
            edge("A^{-1<b<0}_{4,9}", "A^0_{4,9}", ParametricLimit, "parameter tends to 0"),
            vec![("b", Q::zero())],
            vec![("b", Q::zero())],
        ),
        edge(
            "A^{-1<b<0}_{4,9}",
            "A_{4,5}",
            Transition,
            "central bracket of the nilpotent ideal scales away",
        ),
        with_boundary(
            edge("A^{0<b<1}_{4,9}", "A^0_{4,9}", ParametricLimit, "parameter tends to 0"),
            vec![("b", Q::zero())],
            vec![("b", Q::zero())],
        ),
        edge(
            "A^{0<b<1}_{4,9}",
            "A_{4,7}",
            ParametricLimit,
            "parameter tends to 1 and the equal eigenvalues merge into a block",
        ),
        edge(
            "A^{0<b<1}_{4,9}",
            "A_{4,5}",
            Transition,
            "central bracket of the nilpotent ideal scales away",
        ),
        edge(
            "A^1_{4,9}",
            "A^{a,a}_{4,5}",
            Transition,
            "central bracket of the nilpotent ideal scales away",
        ),
        edge(
            "A_{4,8}",
            "VI_0+R",
            Transition,
            "central bracket of the nilpotent ideal scales away",
        ),
        edge(
            "A^0_{4,9}",
            "IV+R",
            Transition,
            "central bracket of the nilpotent ideal scales away",
        ),
        with_boundary(
            edge("A_{4,11}", "A_{4,10}", ParametricLimit, "parameter tends to 0"),
            vec![("a", Q::zero())],
            vec![],
        ),
        edge(
            "A_{4,11}",
            "A^1_{4,9}",
            ParametricLimit,
            "rotation becomes negligible against the growing real parts",
        ),
        edge(
            "A_{4,11}",
            "A_{4,6}",
            Transition,
            "central bracket of the nilpotent ideal scales away",
        ),
        edge(
            "A_{4,10}",
            "VII_0+R",
            Transition,
            "central bracket of the nilpotent ideal scales away",
        ),
        edge(
            "A_{4,12}",
            "V+R",
            Transition,
            "rotation generator scales away against the uniform scaling",
        ),
        edge(
            "A_{4,12}",
            "VII_h+R",
            Transition,
            "scaling and rotation generators merge into one spiral generator",
        ),
        edge(
            "A_{4,12}",
            "VII_0+R",
            Transition,
            "scaling generator scales away against the rotation",
        ),
        edge(
            "A_{4,12}",
            "A^0_{4,9}",
            Transition,
            "plane directions fuse through a central extension",
        ),
    ]);
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_node_resolves_and_instantiates() {
        for dim in [3, 4] {
            let g = build_graph(dim, false).unwrap();
            for n in g.nodes() {
                let sc = n.sample_tensor().unwrap();
                assert_eq!(sc.dim(), dim, "{}", n.name);
                let c = classify(&sc).unwrap();
                assert_eq!(c.id, n.class_id, "{}", n.name);
            }
        }
    }

    #[test]
    fn edges_reference_existing_nodes() {
        for dim in [3, 4] {
            for oriented in [false, true] {
                let g = build_graph(dim, oriented).unwrap();
                for e in g.base_edges() {
                    assert!(g.node(&e.from).is_some(), "{}", e.from);
                    assert!(g.node(&e.to).is_some(), "{}", e.to);
                }
            }
        }
    }

    #[test]
    fn closure_is_transitive_and_irreflexive() {
        for dim in [3, 4] {
            let g = build_graph(dim, false).unwrap();
            for a in g.nodes() {
                assert!(!g.has_transition(&a.name, &a.name).unwrap());
                for b in g.nodes() {
                    if !g.has_transition(&a.name, &b.name).unwrap() {
                        continue;
                    }
                    for c in g.nodes() {
                        if g.has_transition(&b.name, &c.name).unwrap() && b.name != c.name {
                            assert!(
                                g.has_transition(&a.name, &c.name).unwrap(),
                                "{} -> {} -> {}",
                                a.name,
                                b.name,
                                c.name
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dot_output_lists_base_edges() {
        let g = build_graph(3, false).unwrap();
        let dot = g.to_dot();
        assert!(dot.contains("IX -> VII_0"));
        assert!(!dot.contains("IX -> VI_0"));
        assert!(dot.contains("digraph"));
    }
}
