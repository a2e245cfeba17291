//! Independent oracles shared by the integration tests. Nothing here calls the
//! library's clique enumeration or Smith normal form.
#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use raag::{GroupRing, GroupRingElement, SimplicialGraph};
use rand::Rng;

pub fn adjacency_mask(g: &SimplicialGraph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|u| (0..g.vertex_count()).filter(|&v| g.adjacent(u, v)).fold(0, |m, v| m | 1 << v))
        .collect()
}

/// All vertex subsets that are cliques, as bitmasks, sorted by size then by
/// the sorted vertex list. The empty set comes first.
pub fn brute_cliques(g: &SimplicialGraph) -> Vec<u32> {
    let n = g.vertex_count();
    assert!(n <= 16);
    let adj = adjacency_mask(g);
    let mut out: Vec<u32> =
        (0u32..1 << n).filter(|&s| (0..n).filter(|&v| s >> v & 1 == 1).all(|v| s & !(1 << v) & !adj[v] == 0)).collect();
    out.sort_by_key(|&s| (s.count_ones(), vertices(s)));
    out
}

pub fn vertices(s: u32) -> Vec<usize> {
    (0..32).filter(|&v| s >> v & 1 == 1).collect()
}

/// `b_1, b_2, …` by subset enumeration.
pub fn brute_clique_counts(g: &SimplicialGraph) -> Vec<usize> {
    let cliques = brute_cliques(g);
    let top = cliques.iter().map(|s| s.count_ones()).max().unwrap_or(0) as usize;
    (1..=top).map(|k| cliques.iter().filter(|s| s.count_ones() as usize == k).count()).collect()
}

pub fn has_four_clique(g: &SimplicialGraph) -> bool {
    brute_clique_counts(g).len() >= 4
}

/// Augmented boundary matrices of the flag complex: entry `k` maps the
/// (k)-simplices (dimension k) to the (k−1)-simplices, starting at k = 0
/// (vertices → ∅). Also returns the simplex count per dimension from −1.
pub fn brute_boundaries(g: &SimplicialGraph) -> (Vec<usize>, Vec<Vec<Vec<i64>>>) {
    let cliques = brute_cliques(g);
    let top = cliques.iter().map(|s| s.count_ones()).max().unwrap_or(0) as usize;
    let by_size: Vec<Vec<u32>> =
        (0..=top).map(|k| cliques.iter().copied().filter(|s| s.count_ones() as usize == k).collect()).collect();
    let counts = by_size.iter().map(Vec::len).collect();
    let mut mats = Vec::new();
    for k in 1..=top {
        let (rows, cols) = (&by_size[k - 1], &by_size[k]);
        let mut m = vec![vec![0i64; cols.len()]; rows.len()];
        for (c, &s) in cols.iter().enumerate() {
            for (j, v) in vertices(s).into_iter().enumerate() {
                let face = s & !(1 << v);
                let r = rows.iter().position(|&x| x == face).unwrap();
                m[r][c] = if j % 2 == 0 { 1 } else { -1 };
            }
        }
        mats.push(m);
    }
    (counts, mats)
}

/// Rank over Q by fraction-exact Gaussian elimination.
pub fn rational_rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let f = &a[r][c] / &pivot;
                for k in c..cols {
                    let delta = &f * &a[rank][k];
                    a[r][k] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over F_p.
pub fn mod_p_rank(m: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let inv = |x: i64| (1..p).find(|&y| x * y % p == 1).unwrap();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, piv);
        let s = inv(a[rank][c]);
        for k in 0..cols {
            a[rank][k] = a[rank][k] * s % p;
        }
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                for k in 0..cols {
                    a[r][k] = (a[r][k] - f * a[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced Betti numbers b̃_d for d = −1, 0, 1, … over Q (`p = None`) or F_p.
pub fn brute_reduced_betti(g: &SimplicialGraph, p: Option<i64>) -> Vec<usize> {
    let (counts, mats) = brute_boundaries(g);
    let rank = |m: &Vec<Vec<i64>>| match p {
        None => rational_rank(m),
        Some(p) => mod_p_rank(m, p),
    };
    let ranks: Vec<usize> = mats.iter().map(rank).collect();
    (0..counts.len())
        .map(|k| {
            let out = if k == 0 { 0 } else { ranks[k - 1] };
            let incoming = ranks.get(k).copied().unwrap_or(0);
            counts[k] - out - incoming
        })
        .collect()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> SimplicialGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimplicialGraph::from_edges(n, &edges)
}

pub fn random_graph_without_four_clique(rng: &mut impl Rng, n: usize, p: f64) -> SimplicialGraph {
    loop {
        let g = random_graph(rng, n, p);
        if !has_four_clique(&g) {
            return g;
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class of graphs on `n` vertices.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<SimplicialGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let code = |edges: &[(usize, usize)], perm: &[usize]| -> u64 {
        let mut bits = 0u64;
        for &(u, v) in edges {
            let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
            bits |= 1 << pairs.iter().position(|&x| x == (a, b)).unwrap();
        }
        bits
    };
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let canonical = perms.iter().map(|p| code(&edges, p)).min().unwrap();
        if seen.insert(canonical) {
            out.push(SimplicialGraph::from_edges(n, &edges));
        }
    }
    out
}

pub fn random_element(ring: &GroupRing, rng: &mut impl Rng, max_terms: usize) -> GroupRingElement {
    let n = ring.graph().vertex_count();
    let mut x = ring.zero();
    for _ in 0..rng.gen_range(0..=max_terms) {
        let c: i64 = rng.gen_range(-3..=3);
        let len = if n == 0 { 0 } else { rng.gen_range(0..=3) };
        let letters: Vec<(usize, i64)> =
            (0..len).map(|_| (rng.gen_range(0..n), [-2, -1, 1, 2][rng.gen_range(0..4)])).collect();
        x = &x + &(&ring.integer(c) * &ring.word(&letters).unwrap());
    }
    x
}

/// a + ā for random a: self-conjugate with even ε₁.
pub fn random_even_diagonal(ring: &GroupRing, rng: &mut impl Rng) -> GroupRingElement {
    let a = random_element(ring, rng, 3);
    &a + &a.involute()
}

pub fn one() -> BigInt {
    BigInt::one()
}
