//! Cliques, flag complexes and links.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::SimplicialGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("simplex {0:?} is not in the complex")]
    NotInComplex(Vec<usize>),
}

/// A simplex as a strictly increasing list of vertex indices; the empty list
/// is the empty simplex of dimension −1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    /// Sorts and dedups the given vertices.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The facet obtained by dropping the `j`-th vertex.
    pub fn facet(&self, j: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(j);
        Simplex(v)
    }

    pub fn names(&self, g: &SimplicialGraph) -> Vec<String> {
        self.0.iter().map(|&v| g.name(v).to_string()).collect()
    }

    pub fn is_clique_in(&self, g: &SimplicialGraph) -> bool {
        self.0.iter().all(|&v| v < g.vertex_count())
            && self.0.iter().enumerate().all(|(i, &u)| self.0[i + 1..].iter().all(|&v| g.adjacent(u, v)))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All cliques of `g`, grouped by size: entry `i` holds the `i`-cliques in
/// lexicographic order (entry 0 is the empty clique).
///
/// Built by extending each clique with larger adjacent vertices, so every
/// clique is produced exactly once and each level comes out sorted.
pub fn all_cliques(g: &SimplicialGraph) -> Vec<Vec<Simplex>> {
    let n = g.vertex_count();
    let mut levels = vec![vec![Simplex::empty()]];
    loop {
        let last = levels.last().unwrap();
        let mut next = Vec::new();
        for c in last {
            let start = c.0.last().map_or(0, |&v| v + 1);
            for v in start..n {
                if c.0.iter().all(|&u| g.adjacent(u, v)) {
                    let mut grown = c.0.clone();
                    grown.push(v);
                    next.push(Simplex(grown));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    levels
}

/// Clique counts `b_1..b_ω`; `b_0 = 1` is reported separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueCounts {
    counts: Vec<usize>,
}

impl CliqueCounts {
    pub fn b0(&self) -> usize {
        1
    }

    /// `b_i` for any `i`; zero above the clique number.
    pub fn b(&self, i: usize) -> usize {
        match i {
            0 => 1,
            _ => self.counts.get(i - 1).copied().unwrap_or(0),
        }
    }

    /// `b_1, …, b_ω`.
    pub fn as_slice(&self) -> &[usize] {
        &self.counts
    }

    pub fn clique_number(&self) -> usize {
        self.counts.len()
    }
}

pub fn clique_counts(g: &SimplicialGraph) -> CliqueCounts {
    CliqueCounts { counts: all_cliques(g).iter().skip(1).map(Vec::len).collect() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CohomologicalDimension {
    pub cd: usize,
    /// No 4-clique, equivalently H₄(π;Z) = 0.
    pub at_most_three: bool,
}

pub fn cohomological_dimension(g: &SimplicialGraph) -> CohomologicalDimension {
    let cd = clique_counts(g).clique_number();
    CohomologicalDimension { cd, at_most_three: cd <= 3 }
}

/// The flag complex of a graph, with simplices listed per dimension from −1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagComplex {
    graph: SimplicialGraph,
    simplices: Vec<Vec<Simplex>>,
}

pub fn flag_complex(g: &SimplicialGraph) -> FlagComplex {
    FlagComplex { graph: g.clone(), simplices: all_cliques(g) }
}

impl FlagComplex {
    pub fn graph(&self) -> &SimplicialGraph {
        &self.graph
    }

    /// Top dimension; −1 for the complex on the empty graph.
    pub fn dim(&self) -> isize {
        self.simplices.len() as isize - 2
    }

    /// Simplices of dimension `d` (empty slice outside `[-1, dim]`).
    pub fn simplices(&self, d: isize) -> &[Simplex] {
        if d < -1 {
            return &[];
        }
        self.simplices.get((d + 1) as usize).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, d: isize) -> usize {
        self.simplices(d).len()
    }

    /// All simplices including ∅, ordered by dimension then lexicographically.
    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter().flatten()
    }

    /// Position of `s` in its dimension's basis.
    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.simplices(s.dim()).binary_search(s).ok()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index_of(s).is_some()
    }

    /// Γ̂ is a single (possibly empty) simplex, i.e. the graph is complete.
    pub fn is_single_simplex(&self) -> bool {
        self.simplices.last().is_some_and(|top| top.len() == 1 && top[0].len() == self.graph.vertex_count())
    }

    /// Whether only the empty simplex is present.
    pub fn is_void(&self) -> bool {
        self.simplices.len() == 1
    }
}

/// Lk(s): the flag complex on the common neighbours of the vertices of `s`.
/// Lk(∅) is the whole complex.
pub fn link(k: &FlagComplex, s: &Simplex) -> Result<FlagComplex, ComplexError> {
    if !k.contains(s) {
        return Err(ComplexError::NotInComplex(s.vertices().to_vec()));
    }
    let g = k.graph();
    let common: Vec<usize> =
        (0..g.vertex_count()).filter(|&w| s.vertices().iter().all(|&v| g.adjacent(v, w))).collect();
    Ok(flag_complex(&g.induced(&common)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_spec;

    fn names(k: &FlagComplex) -> Vec<&str> {
        k.graph().names().iter().map(String::as_str).collect()
    }

    #[test]
    fn clique_counts_examples() {
        assert_eq!(clique_counts(&SimplicialGraph::complete(3)).as_slice(), [3, 3, 1]);
        let p = clique_counts(&SimplicialGraph::path(3));
        assert_eq!((p.b(1), p.b(2), p.b(3)), (3, 2, 0));
        let e = clique_counts(&SimplicialGraph::new());
        assert!(e.as_slice().is_empty());
        assert_eq!((e.b0(), e.b(1), e.b(4)), (1, 0, 0));
    }

    #[test]
    fn triangle_flag_complex() {
        let k = flag_complex(&SimplicialGraph::complete(3));
        assert_eq!(k.dim(), 2);
        assert_eq!((k.count(-1), k.count(0), k.count(1), k.count(2)), (1, 3, 3, 1));
        assert!(k.is_single_simplex());
    }

    #[test]
    fn four_cycle_has_no_triangles() {
        let k = flag_complex(&SimplicialGraph::cycle(4).unwrap());
        assert_eq!(k.dim(), 1);
        assert_eq!(k.count(1), 4);
        assert_eq!(k.count(2), 0);
        assert!(!k.is_single_simplex());
        let edge_and_point = flag_complex(&parse_spec("disjoint:complete:2+complete:1").unwrap());
        assert!(!edge_and_point.is_single_simplex());
        assert!(flag_complex(&SimplicialGraph::new()).is_single_simplex());
    }

    #[test]
    fn join_of_two_matchings_has_four_tetrahedra() {
        let g = parse_spec("join:disjoint-edges:2,disjoint-edges:2").unwrap();
        let k = flag_complex(&g);
        // brute force over all 4-subsets
        let n = g.vertex_count();
        let mut brute = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let s = Simplex::new(vec![a, b, c, d]);
                        if s.is_clique_in(&g) {
                            brute.push(s);
                        }
                    }
                }
            }
        }
        assert_eq!(brute.len(), 4);
        assert_eq!(k.simplices(3), brute.as_slice());
        assert_eq!(k.dim(), 3);
    }

    #[test]
    fn links_in_triangle() {
        let k = flag_complex(&parse_spec("complete:3").unwrap());
        let lv = link(&k, &Simplex::new(vec![0])).unwrap();
        assert_eq!(names(&lv), ["v1", "v2"]);
        assert_eq!(lv.count(1), 1);
        let le = link(&k, &Simplex::new(vec![0, 2])).unwrap();
        assert_eq!(names(&le), ["v1"]);
        assert_eq!(le.dim(), 0);
        let lt = link(&k, &Simplex::new(vec![0, 1, 2])).unwrap();
        assert!(lt.is_void());
        assert_eq!(link(&k, &Simplex::empty()).unwrap(), k);
    }

    #[test]
    fn link_of_missing_simplex_is_an_error() {
        let k = flag_complex(&SimplicialGraph::path(3));
        assert_eq!(link(&k, &Simplex::new(vec![0, 2])), Err(ComplexError::NotInComplex(vec![0, 2])));
    }

    #[test]
    fn cohomological_dimension_examples() {
        assert_eq!(
            cohomological_dimension(&SimplicialGraph::complete(3)),
            CohomologicalDimension { cd: 3, at_most_three: true }
        );
        assert_eq!(
            cohomological_dimension(&SimplicialGraph::complete(4)),
            CohomologicalDimension { cd: 4, at_most_three: false }
        );
        assert_eq!(cohomological_dimension(&SimplicialGraph::new()).cd, 0);
    }
}
