//! Sufficient criteria for tame cohomology, and generators of graphs that
//! satisfy them.
//!
//! π has tame cohomology when H²(π;Λ)* = 0, H³(π;Λ)* = 0 and
//! Ext¹_Λ(H³(π;Λ), Λ) = 0. Every check here is sufficient only: a negative
//! outcome is reported as unknown, never as a failure.
//!
//! "2-connected flag complex" is replaced throughout by the cohomological
//! facts the arguments actually use: H̃¹ = H̃² = 0, plus connectivity where it
//! is demanded.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::flag::{clique_counts, flag_complex, link, Simplex};
use crate::graph::{components, is_connected, SimplicialGraph};
use crate::homology::reduced_cohomology;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TameError {
    #[error("line {line}: {reason}")]
    Script { line: usize, reason: String },
    #[error("move {step}: unknown vertex `{name}`")]
    UnknownVertex { step: usize, name: String },
    #[error("move {step}: `{u}` and `{v}` are not adjacent")]
    NotAnEdge { step: usize, u: String, v: String },
    #[error("the separator criterion needs a connected graph")]
    Disconnected,
    #[error("torsion criterion needs degree at least 1, got {0}")]
    Degree(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "lowercase")]
pub enum ConditionStatus {
    Holds(String),
    Automatic(String),
    Unknown,
}

impl ConditionStatus {
    pub fn is_established(&self) -> bool {
        !matches!(self, ConditionStatus::Unknown)
    }
}

impl fmt::Display for ConditionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditionStatus::Holds(why) => write!(f, "holds: {why}"),
            ConditionStatus::Automatic(why) => write!(f, "automatic: {why}"),
            ConditionStatus::Unknown => f.write_str("unknown"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Overall {
    Tame,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TameVerdict {
    /// H²(π;Λ)* = 0.
    pub condition_i: ConditionStatus,
    /// H³(π;Λ)* = 0.
    pub condition_ii: ConditionStatus,
    /// Ext¹_Λ(H³(π;Λ), Λ) = 0.
    pub condition_iii: ConditionStatus,
    pub overall: Overall,
    /// Which stand-in for "2-connected" was evaluated.
    pub surrogate: &'static str,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

const SURROGATE: &str = "flag complex H̃¹ = H̃² = 0 in place of 2-connectivity";

fn cohomology_vanishes(g: &SimplicialGraph, i: isize) -> bool {
    reduced_cohomology(&flag_complex(g), i).is_zero()
}

/// Whether H̃^i(Γ̂) = 0, which forces Hom_Λ(H^{i+1}(π;Λ), Λ) = 0.
pub fn torsion_criterion(g: &SimplicialGraph, i: usize) -> Result<ConditionStatus, TameError> {
    if i == 0 {
        return Err(TameError::Degree(i));
    }
    Ok(if cohomology_vanishes(g, i as isize) {
        ConditionStatus::Holds(format!(
            "H̃{}(Γ̂) = 0, so H{}(π;Λ) is a torsion module",
            superscript(i),
            superscript(i + 1)
        ))
    } else {
        ConditionStatus::Unknown
    })
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).expect("decimal") as usize]).collect()
}

fn vertex_links_simply_acyclic(g: &SimplicialGraph) -> bool {
    let fc = flag_complex(g);
    (0..g.vertex_count()).all(|v| {
        let lk = link(&fc, &Simplex::new(vec![v])).expect("vertex is in the complex");
        reduced_cohomology(&lk, 1).is_zero()
    })
}

pub fn tame_sufficient(g: &SimplicialGraph) -> TameVerdict {
    let condition_i = torsion_criterion(g, 1).expect("degree 1");
    let cd = clique_counts(g).clique_number();
    let mut notes = Vec::new();
    let (condition_ii, condition_iii) = if cd <= 3 {
        let why = format!("cd π = {cd} ≤ 3 (no 4-clique): the top two conditions hold for every such group");
        (ConditionStatus::Automatic(why.clone()), ConditionStatus::Automatic(why))
    } else {
        notes
            .push(format!("cd = {cd}: the automatic degree-3 conditions for groups without 4-cliques are unavailable"));
        let h2 = cohomology_vanishes(g, 2);
        let ii = if h2 {
            ConditionStatus::Holds("H̃²(Γ̂) = 0, so H³(π;Λ) is a torsion module".to_string())
        } else {
            ConditionStatus::Unknown
        };
        let iii = if h2 && vertex_links_simply_acyclic(g) {
            ConditionStatus::Holds(
                "H̃²(Γ̂) = 0 and H̃¹(Lk v) = 0 for every vertex v, so only edge and face summands remain".to_string(),
            )
        } else {
            ConditionStatus::Unknown
        };
        (ii, iii)
    };
    let overall = if [&condition_i, &condition_ii, &condition_iii].iter().all(|c| c.is_established()) {
        Overall::Tame
    } else {
        Overall::Unknown
    };
    TameVerdict { condition_i, condition_ii, condition_iii, overall, surrogate: SURROGATE, notes }
}

/// One step of the tame-graph generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BuildMove {
    /// New vertex joined to `v`.
    EdgeAtVertex(String),
    /// Two new adjacent vertices, both joined to `v`.
    TriAtVertex(String),
    /// New vertex joined to both ends of the edge `uv`.
    TriAtEdge(String, String),
}

impl fmt::Display for BuildMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildMove::EdgeAtVertex(v) => write!(f, "edge-at-vertex {v}"),
            BuildMove::TriAtVertex(v) => write!(f, "tri-at-vertex {v}"),
            BuildMove::TriAtEdge(u, v) => write!(f, "tri-at-edge {u} {v}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BuildScript {
    pub moves: Vec<BuildMove>,
}

impl BuildScript {
    pub fn new(moves: Vec<BuildMove>) -> Self {
        BuildScript { moves }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

impl fmt::Display for BuildScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.moves {
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for BuildScript {
    type Err = TameError;

    /// One move per line; blank lines and `#` comments are skipped.
    fn from_str(text: &str) -> Result<Self, TameError> {
        let mut moves = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |reason: &str| TameError::Script { line: i + 1, reason: reason.to_string() };
            let words: Vec<&str> = line.split_whitespace().collect();
            let m = match words.as_slice() {
                ["edge-at-vertex", v] => BuildMove::EdgeAtVertex(v.to_string()),
                ["tri-at-vertex", v] => BuildMove::TriAtVertex(v.to_string()),
                ["tri-at-edge", u, v] => BuildMove::TriAtEdge(u.to_string(), v.to_string()),
                [kind, ..] if ["edge-at-vertex", "tri-at-vertex", "tri-at-edge"].contains(kind) => {
                    return Err(err("wrong number of arguments"))
                }
                _ => return Err(err(&format!("unknown move `{line}`"))),
            };
            moves.push(m);
        }
        Ok(BuildScript { moves })
    }
}

struct Builder {
    graph: SimplicialGraph,
}

impl Builder {
    fn start() -> Self {
        let mut graph = SimplicialGraph::new();
        graph.add_vertex("v0").expect("fresh name");
        Builder { graph }
    }

    fn fresh(&mut self) -> usize {
        let name = format!("v{}", self.graph.vertex_count());
        self.graph.add_vertex(&name).expect("fresh names never collide")
    }

    fn lookup(&self, step: usize, name: &str) -> Result<usize, TameError> {
        self.graph.index_of(name).ok_or_else(|| TameError::UnknownVertex { step, name: name.to_string() })
    }

    fn connect(&mut self, u: usize, v: usize) {
        self.graph.add_edge(u, v).expect("new vertices have no edges yet");
    }

    fn apply(&mut self, step: usize, m: &BuildMove) -> Result<(), TameError> {
        match m {
            BuildMove::EdgeAtVertex(v) => {
                let v = self.lookup(step, v)?;
                let w = self.fresh();
                self.connect(v, w);
            }
            BuildMove::TriAtVertex(v) => {
                let v = self.lookup(step, v)?;
                let (a, b) = (self.fresh(), self.fresh());
                self.connect(v, a);
                self.connect(v, b);
                self.connect(a, b);
            }
            BuildMove::TriAtEdge(un, vn) => {
                let (u, v) = (self.lookup(step, un)?, self.lookup(step, vn)?);
                if !self.graph.adjacent(u, v) {
                    return Err(TameError::NotAnEdge { step, u: un.clone(), v: vn.clone() });
                }
                let w = self.fresh();
                self.connect(u, w);
                self.connect(v, w);
            }
        }
        Ok(())
    }
}

/// Run a build script from the single vertex `v0`; fresh vertices are named
/// `v1, v2, …` in creation order. Moves are numbered from 1 in errors.
pub fn generate_tame(script: &BuildScript) -> Result<SimplicialGraph, TameError> {
    let mut b = Builder::start();
    for (i, m) in script.moves.iter().enumerate() {
        b.apply(i + 1, m)?;
    }
    Ok(b.graph)
}

/// A random script driven by `ChaCha8Rng::seed_from_u64(seed)`: each step picks
/// a move type uniformly among the legal ones, then a site uniformly among
/// vertices (or edges) in canonical order.
pub fn random_build_script(steps: usize, seed: u64) -> BuildScript {
    #[derive(Clone, Copy)]
    enum Kind {
        Edge,
        TriVertex,
        TriEdge,
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = Builder::start();
    let mut moves = Vec::with_capacity(steps);
    for step in 1..=steps {
        let g = &b.graph;
        let edges = g.edges();
        let mut kinds = vec![Kind::Edge, Kind::TriVertex];
        if !edges.is_empty() {
            kinds.push(Kind::TriEdge);
        }
        let kind = *kinds.choose(&mut rng).expect("nonempty");
        let m = match kind {
            Kind::Edge => BuildMove::EdgeAtVertex(g.name(rng.gen_range(0..g.vertex_count())).to_string()),
            Kind::TriVertex => BuildMove::TriAtVertex(g.name(rng.gen_range(0..g.vertex_count())).to_string()),
            Kind::TriEdge => {
                let (u, v) = edges[rng.gen_range(0..edges.len())];
                BuildMove::TriAtEdge(g.name(u).to_string(), g.name(v).to_string())
            }
        };
        b.apply(step, &m).expect("moves are drawn from legal sites");
        moves.push(m);
    }
    BuildScript { moves }
}

/// A decomposition Γ = Γ₁ ∪ Γ₂ with Γ₁ ∩ Γ₂ = Γ₀ discrete.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatorWitness {
    pub separator: Vec<String>,
    pub gamma1: Vec<String>,
    pub gamma2: Vec<String>,
    #[serde(skip)]
    pub separator_indices: Vec<usize>,
    #[serde(skip)]
    pub gamma1_indices: Vec<usize>,
    #[serde(skip)]
    pub gamma2_indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "witness", rename_all = "snake_case")]
pub enum SeparatorOutcome {
    Holds(SeparatorWitness),
    NotFound,
}

/// Whether an induced piece is usable as one side of a separator witness.
pub fn acceptable_half(g: &SimplicialGraph) -> bool {
    is_connected(g) && cohomology_vanishes(g, 1) && cohomology_vanishes(g, 2)
}

fn independent(g: &SimplicialGraph, s: &[usize]) -> bool {
    s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| !g.adjacent(u, v)))
}

fn subsets_of_size(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        for v in start..n {
            cur.push(v);
            if rec(n, k, v + 1, cur, visit) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(n, k, 0, &mut Vec::with_capacity(k), &mut visit)
}

/// Exhaustive search, in canonical order (by size, then lexicographic), for an
/// independent vertex set S with |S| ≤ `max_separator` splitting Γ into two
/// acceptable halves. Certifies H²(π;Λ)* = 0 when found.
pub fn separator_criterion(g: &SimplicialGraph, max_separator: usize) -> Result<SeparatorOutcome, TameError> {
    if !is_connected(g) {
        return Err(TameError::Disconnected);
    }
    let n = g.vertex_count();
    let mut found = None;
    for size in 1..=max_separator.min(n) {
        let hit = subsets_of_size(n, size, |s| {
            if !independent(g, s) {
                return false;
            }
            let rest: Vec<usize> = (0..n).filter(|v| !s.contains(v)).collect();
            let parts: Vec<Vec<usize>> =
                components(&g.induced(&rest)).into_iter().map(|c| c.into_iter().map(|i| rest[i]).collect()).collect();
            if parts.len() < 2 || parts.len() > 20 {
                return false;
            }
            // component 0 stays on the first side; masks choose the second
            for mask in 1u32..(1 << (parts.len() - 1)) {
                let mut a: Vec<usize> = s.to_vec();
                let mut b: Vec<usize> = s.to_vec();
                for (i, part) in parts.iter().enumerate() {
                    let side = if i > 0 && mask & (1 << (i - 1)) != 0 { &mut b } else { &mut a };
                    side.extend(part);
                }
                a.sort_unstable();
                b.sort_unstable();
                if acceptable_half(&g.induced(&a)) && acceptable_half(&g.induced(&b)) {
                    let names = |vs: &[usize]| vs.iter().map(|&v| g.name(v).to_string()).collect();
                    found = Some(SeparatorWitness {
                        separator: names(s),
                        gamma1: names(&a),
                        gamma2: names(&b),
                        separator_indices: s.to_vec(),
                        gamma1_indices: a,
                        gamma2_indices: b,
                    });
                    return true;
                }
            }
            false
        });
        if hit {
            break;
        }
    }
    Ok(found.map_or(SeparatorOutcome::NotFound, SeparatorOutcome::Holds))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cd3Report {
    pub clique_number: usize,
    pub no_four_clique: bool,
    /// Conditions (ii) and (iii) hold for free.
    pub conditions_ii_iii_automatic: bool,
    /// H^n(π;Λ)* = 0 and Ext¹_Λ(H^n(π;Λ), Λ) = 0 for n = cd π.
    pub top_degree: usize,
    pub top_degree_dual_and_ext1_vanish: bool,
    pub summary: String,
}

pub fn cd3_automatic(g: &SimplicialGraph) -> Cd3Report {
    let n = clique_counts(g).clique_number();
    let no_four_clique = n <= 3;
    let summary = if n == 0 {
        "trivial group: all cohomology with Λ coefficients vanishes outside degree 0".to_string()
    } else if no_four_clique {
        format!("cd π = {n} ≤ 3: H³(π;Λ)* = 0 and Ext¹_Λ(H³(π;Λ), Λ) = 0")
    } else {
        format!("cd π = {n}: H^{n}(π;Λ)* = 0 and Ext¹_Λ(H^{n}(π;Λ), Λ) = 0; nothing is claimed in degree 3")
    };
    Cd3Report {
        clique_number: n,
        no_four_clique,
        conditions_ii_iii_automatic: no_four_clique,
        top_degree: n,
        top_degree_dual_and_ext1_vanish: true,
        summary,
    }
}

/// H¹(π;Λ)* ≠ 0 exactly when Γ is disconnected and has an edge.
pub fn h1_dual_nonzero(g: &SimplicialGraph) -> bool {
    components(g).len() >= 2 && g.edge_count() >= 1
}
