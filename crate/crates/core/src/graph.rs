//! Finite simplicial graphs: the single input every other module derives from.
//!
//! Vertices are kept in declaration order, and that order is the canonical
//! total order used for clique orientation, word normal forms and all
//! tie-breaking downstream.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: duplicate vertex `{name}`")]
    DuplicateVertex { line: usize, name: String },
    #[error("line {line}: edge references unknown vertex `{name}`")]
    UnknownVertex { line: usize, name: String },
    #[error("line {line}: self-loop at vertex `{name}`")]
    SelfLoop { line: usize, name: String },
    #[error("line {line}: duplicate edge `{u}` `{v}`")]
    DuplicateEdge { line: usize, u: String, v: String },
    #[error("line {line}: invalid vertex name `{name}` (expected [A-Za-z0-9_]+)")]
    InvalidName { line: usize, name: String },
    #[error("line {line}: cannot parse `{text}`")]
    Syntax { line: usize, text: String },
    #[error("invalid graph spec `{spec}`: {reason}")]
    BadSpec { spec: String, reason: String },
}

/// A finite simple graph with named vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialGraph {
    names: Vec<String>,
    adjacency: Vec<Vec<bool>>,
}

pub(crate) fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl SimplicialGraph {
    pub fn new() -> Self {
        SimplicialGraph { names: Vec::new(), adjacency: Vec::new() }
    }

    /// Graph on vertices `v0..v{n-1}` with the given edges (indices).
    ///
    /// Panics on self-loops or out-of-range endpoints; duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g =
            SimplicialGraph { names: (0..n).map(|i| format!("v{i}")).collect(), adjacency: vec![vec![false; n]; n] };
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range");
            assert_ne!(u, v, "self-loop at {u}");
            g.adjacency[u][v] = true;
            g.adjacency[v][u] = true;
        }
        g
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<usize, GraphError> {
        if !valid_name(name) {
            return Err(GraphError::InvalidName { line: 0, name: name.to_string() });
        }
        if self.index_of(name).is_some() {
            return Err(GraphError::DuplicateVertex { line: 0, name: name.to_string() });
        }
        for row in &mut self.adjacency {
            row.push(false);
        }
        self.names.push(name.to_string());
        self.adjacency.push(vec![false; self.names.len()]);
        Ok(self.names.len() - 1)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop { line: 0, name: self.names[u].clone() });
        }
        if self.adjacency[u][v] {
            return Err(GraphError::DuplicateEdge { line: 0, u: self.names[u].clone(), v: self.names[v].clone() });
        }
        self.adjacency[u][v] = true;
        self.adjacency[v][u] = true;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u][v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().enumerate().filter(|(_, &a)| a).map(|(i, _)| i)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.adjacency[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    /// Induced subgraph on `vertices`, kept in the order given (callers pass
    /// increasing indices to preserve the canonical order).
    pub fn induced(&self, vertices: &[usize]) -> SimplicialGraph {
        SimplicialGraph {
            names: vertices.iter().map(|&v| self.names[v].clone()).collect(),
            adjacency: vertices.iter().map(|&u| vertices.iter().map(|&v| self.adjacency[u][v]).collect()).collect(),
        }
    }

    /// Relabel: vertex `i` of the result is vertex `perm[i]` of `self`.
    /// Names are reset to `v0..`.
    pub fn permuted(&self, perm: &[usize]) -> SimplicialGraph {
        let mut g = self.induced(perm);
        g.names = (0..perm.len()).map(|i| format!("v{i}")).collect();
        g
    }

    fn with_default_names(mut self) -> Self {
        self.names = (0..self.vertex_count()).map(|i| format!("v{i}")).collect();
        self
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Option<Self> {
        if n < 3 {
            return None;
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Some(Self::from_edges(n, &edges))
    }

    pub fn disjoint_edges(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (2 * i, 2 * i + 1)).collect();
        Self::from_edges(2 * n, &edges)
    }

    /// Disjoint union; vertices renamed `v0..` with `self` first.
    pub fn disjoint_union(&self, other: &SimplicialGraph) -> SimplicialGraph {
        self.combine(other, false)
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &SimplicialGraph) -> SimplicialGraph {
        self.combine(other, true)
    }

    fn combine(&self, other: &SimplicialGraph, connect: bool) -> SimplicialGraph {
        let (a, b) = (self.vertex_count(), other.vertex_count());
        let n = a + b;
        let adjacency = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| match (u < a, v < a) {
                        (true, true) => self.adjacency[u][v],
                        (false, false) => other.adjacency[u - a][v - a],
                        _ => connect,
                    })
                    .collect()
            })
            .collect();
        SimplicialGraph { names: vec![String::new(); n], adjacency }.with_default_names()
    }

    /// Serialize to the line-oriented text format accepted by [`parse_graph`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for name in &self.names {
            out.push_str("vertex ");
            out.push_str(name);
            out.push('\n');
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("edge {} {}\n", self.names[u], self.names[v]));
        }
        out
    }
}

impl Default for SimplicialGraph {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Debug for SimplicialGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> =
            self.edges().into_iter().map(|(u, v)| format!("{}-{}", self.names[u], self.names[v])).collect();
        f.debug_struct("SimplicialGraph").field("vertices", &self.names).field("edges", &edges).finish()
    }
}

/// JSON echo of a graph: vertex names and edges as name pairs.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GraphEcho {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl From<&SimplicialGraph> for GraphEcho {
    fn from(g: &SimplicialGraph) -> Self {
        GraphEcho {
            vertices: g.names.clone(),
            edges: g.edges().into_iter().map(|(u, v)| [g.names[u].clone(), g.names[v].clone()]).collect(),
        }
    }
}

/// Parse a graph from either the line-oriented text format or a builtin
/// generator spec such as `complete:3` or `join:disjoint-edges:2,disjoint-edges:2`.
pub fn parse_graph(text: &str) -> Result<SimplicialGraph, GraphError> {
    let trimmed = text.trim();
    if looks_like_spec(trimmed) {
        return parse_spec(trimmed);
    }
    parse_graph_text(text)
}

fn looks_like_spec(s: &str) -> bool {
    !s.is_empty() && !s.contains(char::is_whitespace) && s.contains(':') && !s.starts_with('#')
}

fn parse_graph_text(text: &str) -> Result<SimplicialGraph, GraphError> {
    let mut g = SimplicialGraph::new();
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["vertex", name] => {
                if !valid_name(name) {
                    return Err(GraphError::InvalidName { line, name: name.to_string() });
                }
                if index.contains_key(*name) {
                    return Err(GraphError::DuplicateVertex { line, name: name.to_string() });
                }
                let v = g.add_vertex(name).expect("validated above");
                index.insert(name.to_string(), v);
            }
            ["edge", u, v] => {
                let lookup = |n: &str| {
                    index.get(n).copied().ok_or_else(|| GraphError::UnknownVertex { line, name: n.to_string() })
                };
                if u == v {
                    // a self-loop is reported even when the vertex is undeclared
                    return Err(GraphError::SelfLoop { line, name: u.to_string() });
                }
                let (a, b) = (lookup(u)?, lookup(v)?);
                g.add_edge(a, b).map_err(|e| match e {
                    GraphError::DuplicateEdge { u, v, .. } => GraphError::DuplicateEdge { line, u, v },
                    other => other,
                })?;
            }
            _ => return Err(GraphError::Syntax { line, text: content.to_string() }),
        }
    }
    Ok(g)
}

/// Parse a builtin generator spec. Grammar (recursive descent, binary combinators):
///
/// ```text
/// spec := complete:N | path:N | cycle:N | disjoint-edges:N
///       | disjoint:spec+spec | join:spec,spec
/// ```
pub fn parse_spec(spec: &str) -> Result<SimplicialGraph, GraphError> {
    let mut parser = SpecParser { src: spec, pos: 0 };
    let g = parser.graph()?;
    if parser.pos != spec.len() {
        return Err(parser.error(format!("trailing input `{}`", &spec[parser.pos..])));
    }
    Ok(g)
}

struct SpecParser<'a> {
    src: &'a str,
    pos: usize,
}

impl SpecParser<'_> {
    fn error(&self, reason: String) -> GraphError {
        GraphError::BadSpec { spec: self.src.to_string(), reason }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn expect(&mut self, token: char) -> Result<(), GraphError> {
        if self.rest().starts_with(token) {
            self.pos += token.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}` at offset {}", self.pos)))
        }
    }

    fn number(&mut self) -> Result<usize, GraphError> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error(format!("expected a number at offset {}", self.pos)));
        }
        let n = self.rest()[..digits].parse().map_err(|_| self.error("number out of range".to_string()))?;
        self.pos += digits;
        Ok(n)
    }

    fn graph(&mut self) -> Result<SimplicialGraph, GraphError> {
        let kind_len =
            self.rest().find(':').ok_or_else(|| self.error(format!("expected `kind:` at offset {}", self.pos)))?;
        let kind = self.rest()[..kind_len].to_string();
        self.pos += kind_len + 1;
        match kind.as_str() {
            "complete" => Ok(SimplicialGraph::complete(self.number()?)),
            "path" => Ok(SimplicialGraph::path(self.number()?)),
            "disjoint-edges" => Ok(SimplicialGraph::disjoint_edges(self.number()?)),
            "cycle" => {
                let n = self.number()?;
                SimplicialGraph::cycle(n).ok_or_else(|| self.error("cycle needs at least 3 vertices".to_string()))
            }
            "disjoint" => {
                let a = self.graph()?;
                self.expect('+')?;
                let b = self.graph()?;
                Ok(a.disjoint_union(&b))
            }
            "join" => {
                let a = self.graph()?;
                self.expect(',')?;
                let b = self.graph()?;
                Ok(a.join(&b))
            }
            other => Err(self.error(format!("unknown generator `{other}`"))),
        }
    }
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &SimplicialGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &SimplicialGraph) -> bool {
    components(g).len() <= 1
}

/// Number of ends of the right-angled Artin group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EndsClass {
    Zero,
    One,
    Two,
    Infinite,
}

pub fn ends(g: &SimplicialGraph) -> EndsClass {
    let comps = components(g).len();
    match (g.vertex_count(), comps) {
        (0, _) => EndsClass::Zero,
        (1, _) => EndsClass::Two,
        (_, 1) => EndsClass::One,
        _ => EndsClass::Infinite,
    }
}

/// A subgraph whose group is a free product of `n` copies of Z² and `m`
/// copies of Z, carrying all of H¹(π;Λ) under restriction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeProductSkeleton {
    /// At most one component: there is nothing to extract.
    pub connected: bool,
    pub n: usize,
    pub m: usize,
    pub witness: SimplicialGraph,
}

pub fn free_product_skeleton(g: &SimplicialGraph) -> FreeProductSkeleton {
    let comps = components(g);
    let mut keep = Vec::new();
    let mut chosen = Vec::new();
    let (mut n, mut m) = (0, 0);
    for comp in &comps {
        if comp.len() == 1 {
            m += 1;
            keep.push(comp[0]);
        } else {
            n += 1;
            // lowest edge in canonical order within this component
            let u = comp[0];
            let v = g.neighbors(u).next().expect("component with an edge");
            keep.extend([u, v]);
            chosen.push((u, v));
        }
    }
    keep.sort_unstable();
    let mut witness = SimplicialGraph::new();
    for &v in &keep {
        witness.add_vertex(g.name(v)).expect("distinct names");
    }
    for (u, v) in chosen {
        let a = keep.binary_search(&u).unwrap();
        let b = keep.binary_search(&v).unwrap();
        witness.add_edge(a, b).expect("fresh edge");
    }
    FreeProductSkeleton { connected: comps.len() <= 1, n, m, witness }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_vertex_and_edge_lines() {
        let g = parse_graph("vertex a\nvertex b\nedge a b").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(g.names(), ["a", "b"]);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let g = parse_graph(
            "# triangle\n\nvertex x\nvertex y\n  # indented comment\nvertex z\nedge x y\nedge y z\nedge x z\n",
        )
        .unwrap();
        assert_eq!(g, SimplicialGraph::complete(3).relabel_names(&["x", "y", "z"]));
    }

    #[test]
    fn builtin_complete() {
        let g = parse_graph("complete:3").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn self_loop_reported_with_line() {
        assert_eq!(parse_graph("vertex a\nedge a a"), Err(GraphError::SelfLoop { line: 2, name: "a".into() }));
        assert!(matches!(parse_graph("edge a a"), Err(GraphError::SelfLoop { line: 1, .. })));
    }

    #[test]
    fn validation_errors_carry_line_numbers() {
        assert_eq!(parse_graph("vertex a\nvertex a"), Err(GraphError::DuplicateVertex { line: 2, name: "a".into() }));
        assert_eq!(parse_graph("vertex a\n\nedge a b"), Err(GraphError::UnknownVertex { line: 3, name: "b".into() }));
        assert!(matches!(
            parse_graph("vertex a\nvertex b\nedge a b\nedge b a"),
            Err(GraphError::DuplicateEdge { line: 4, .. })
        ));
        assert!(matches!(parse_graph("vertex a-b"), Err(GraphError::InvalidName { line: 1, .. })));
        assert!(matches!(parse_graph("vertices a"), Err(GraphError::Syntax { line: 1, .. })));
    }

    #[test]
    fn text_round_trip() {
        for spec in ["complete:4", "cycle:5", "join:disjoint-edges:2,disjoint-edges:2", "disjoint:path:3+complete:1"] {
            let g = parse_graph(spec).unwrap();
            let text = g.to_text();
            let back = parse_graph(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(back.to_text(), text);
        }
    }

    #[test]
    fn builtin_specs() {
        assert_eq!(parse_spec("path:3").unwrap().edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(parse_spec("cycle:4").unwrap().edge_count(), 4);
        assert_eq!(parse_spec("disjoint-edges:3").unwrap().edges(), vec![(0, 1), (2, 3), (4, 5)]);
        let j = parse_spec("join:disjoint-edges:2,disjoint-edges:2").unwrap();
        assert_eq!((j.vertex_count(), j.edge_count()), (8, 2 + 2 + 16));
        let d = parse_spec("disjoint:complete:2+complete:1").unwrap();
        assert_eq!((d.vertex_count(), d.edges()), (3, vec![(0, 1)]));
        let nested = parse_spec("join:join:complete:1,complete:1,complete:1").unwrap();
        assert!(nested.is_complete());
        assert!(parse_spec("cycle:2").is_err());
        assert!(parse_spec("complete:").is_err());
        assert!(parse_spec("wheel:4").is_err());
        assert!(parse_spec("join:complete:1").is_err());
        assert!(parse_spec("complete:3x").is_err());
    }

    #[test]
    fn components_examples() {
        assert_eq!(components(&SimplicialGraph::complete(3)).len(), 1);
        let g = parse_spec("disjoint:complete:2+complete:1").unwrap();
        assert_eq!(components(&g), vec![vec![0, 1], vec![2]]);
        assert!(components(&SimplicialGraph::new()).is_empty());
    }

    #[test]
    fn ends_examples() {
        assert_eq!(ends(&SimplicialGraph::new()), EndsClass::Zero);
        assert_eq!(ends(&SimplicialGraph::complete(1)), EndsClass::Two);
        assert_eq!(ends(&SimplicialGraph::complete(3)), EndsClass::One);
        assert_eq!(ends(&SimplicialGraph::from_edges(2, &[])), EndsClass::Infinite);
    }

    #[test]
    fn free_product_skeleton_examples() {
        let g = parse_spec("disjoint:complete:2+complete:1").unwrap();
        let s = free_product_skeleton(&g);
        assert_eq!((s.connected, s.n, s.m), (false, 1, 1));
        assert_eq!(s.witness.vertex_count(), 3);
        assert_eq!(s.witness.edge_count(), 1);

        let three = parse_spec("disjoint:complete:3+disjoint:complete:3+complete:3").unwrap();
        let s = free_product_skeleton(&three);
        assert_eq!((s.n, s.m), (3, 0));
        assert_eq!(s.witness.edges(), vec![(0, 1), (2, 3), (4, 5)]);
        assert_eq!(s.witness.names(), ["v0", "v1", "v3", "v4", "v6", "v7"]);

        assert!(free_product_skeleton(&SimplicialGraph::complete(3)).connected);
    }

    impl SimplicialGraph {
        fn relabel_names(mut self, names: &[&str]) -> Self {
            self.names = names.iter().map(|s| s.to_string()).collect();
            self
        }
    }
}
