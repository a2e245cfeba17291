//! Integral (co)homology of finite simplicial complexes via Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use thiserror::Error;

use crate::flag::{FlagComplex, Simplex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("euler characteristic of the empty complex is undefined")]
    EmptyComplex,
}

/// Dense integer matrix, row-major, arbitrary precision entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntegerMatrix { rows: rows.len(), cols, data: rows.iter().flat_map(|r| r.iter().map(|&x| x.into())).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[target] += factor * row[source]
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let s = self.data[source * self.cols + j].clone();
            if !s.is_zero() {
                self.data[target * self.cols + j] += factor * s;
            }
        }
    }

    /// col[target] += factor * col[source]
    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let s = self.data[i * self.cols + source].clone();
            if !s.is_zero() {
                self.data[i * self.cols + target] += factor * s;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = &mut self.data[i * self.cols + j];
            *x = -std::mem::take(x);
        }
    }
}

impl fmt::Display for IntegerMatrix {
    /// Row-major, space-separated, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerMatrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    /// `min(rows, cols)` non-negative entries, nonzero ones first, each dividing the next.
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

impl SnfResult {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| **d > BigInt::one()).cloned().collect()
    }
}

/// Smith normal form together with unimodular `left`, `right` such that
/// `left · m · right` is the diagonal matrix.
#[derive(Debug, Clone)]
pub struct SnfDecomposition {
    pub snf: SnfResult,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SnfResult {
    reduce(m.clone(), None).0
}

pub fn smith_normal_form_with_transforms(m: &IntegerMatrix) -> SnfDecomposition {
    let transforms = (IntegerMatrix::identity(m.rows), IntegerMatrix::identity(m.cols));
    let (snf, t) = reduce(m.clone(), Some(transforms));
    let (left, right) = t.unwrap();
    SnfDecomposition { snf, left, right }
}

type Transforms = Option<(IntegerMatrix, IntegerMatrix)>;

fn reduce(mut a: IntegerMatrix, mut t: Transforms) -> (SnfResult, Transforms) {
    let (rows, cols) = (a.rows, a.cols);
    let steps = rows.min(cols);
    let mut rank = 0;
    for p in 0..steps {
        loop {
            // pivot of minimal absolute value in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in p..rows {
                for j in p..cols {
                    let x = a.get(i, j);
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(a, t, rank);
            };
            a.swap_rows(p, pi);
            a.swap_cols(p, pj);
            if let Some((l, r)) = t.as_mut() {
                l.swap_rows(p, pi);
                r.swap_cols(p, pj);
            }
            let pivot = a.get(p, p).clone();
            let mut clean = true;
            for i in p + 1..rows {
                if a.get(i, p).is_zero() {
                    continue;
                }
                let q = -(a.get(i, p).div_floor(&pivot));
                a.add_row(i, p, &q);
                if let Some((l, _)) = t.as_mut() {
                    l.add_row(i, p, &q);
                }
                clean &= a.get(i, p).is_zero();
            }
            for j in p + 1..cols {
                if a.get(p, j).is_zero() {
                    continue;
                }
                let q = -(a.get(p, j).div_floor(&pivot));
                a.add_col(j, p, &q);
                if let Some((_, r)) = t.as_mut() {
                    r.add_col(j, p, &q);
                }
                clean &= a.get(p, j).is_zero();
            }
            if !clean {
                continue;
            }
            // enforce divisibility of the trailing block by the pivot
            let offending = (p + 1..rows).find(|&i| (p + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
            if let Some(i) = offending {
                a.add_row(p, i, &BigInt::one());
                if let Some((l, _)) = t.as_mut() {
                    l.add_row(p, i, &BigInt::one());
                }
                continue;
            }
            if pivot.is_negative() {
                a.negate_row(p);
                if let Some((l, _)) = t.as_mut() {
                    l.negate_row(p);
                }
            }
            rank += 1;
            break;
        }
    }
    finish(a, t, rank)
}

fn finish(a: IntegerMatrix, t: Transforms, rank: usize) -> (SnfResult, Transforms) {
    let diagonal = (0..a.rows.min(a.cols)).map(|i| a.get(i, i).clone()).collect();
    (SnfResult { diagonal, rank }, t)
}

/// Finitely generated abelian group `Z^free_rank ⊕ ⊕ Z/d_i` with `d_1 | d_2 | …`, each `d_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FgAbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl FgAbelianGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

pub(crate) fn bigint_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

impl Serialize for FgAbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("FgAbelianGroup", 2)?;
        s.serialize_field("rank", &self.free_rank)?;
        let torsion: Vec<_> = self.torsion.iter().map(bigint_json).collect();
        s.serialize_field("torsion", &torsion)?;
        s.end()
    }
}

/// A finite chain complex of free abelian groups, indexed from `lowest_degree`.
#[derive(Debug, Clone)]
pub struct IntegerChainComplex {
    lowest_degree: isize,
    bases: Vec<Vec<Simplex>>,
    /// `boundaries[k]`: C_{lowest+k} → C_{lowest+k−1}; `boundaries[0]` has no rows.
    boundaries: Vec<IntegerMatrix>,
}

impl IntegerChainComplex {
    /// Assemble from bases and boundary maps `∂_d` for every degree above the lowest.
    pub fn new(lowest_degree: isize, bases: Vec<Vec<Simplex>>, upper_boundaries: Vec<IntegerMatrix>) -> Self {
        assert_eq!(upper_boundaries.len() + 1, bases.len().max(1), "one boundary per degree above the lowest");
        let mut boundaries = Vec::with_capacity(bases.len());
        boundaries.push(IntegerMatrix::zeros(0, bases.first().map_or(0, Vec::len)));
        for (k, m) in upper_boundaries.into_iter().enumerate() {
            assert_eq!(
                (m.rows(), m.cols()),
                (bases[k].len(), bases[k + 1].len()),
                "boundary shape in degree {}",
                lowest_degree + k as isize + 1
            );
            boundaries.push(m);
        }
        IntegerChainComplex { lowest_degree, bases, boundaries }
    }

    pub fn lowest_degree(&self) -> isize {
        self.lowest_degree
    }

    pub fn top_degree(&self) -> isize {
        self.lowest_degree + self.bases.len() as isize - 1
    }

    fn slot(&self, d: isize) -> Option<usize> {
        let k = d - self.lowest_degree;
        (k >= 0 && (k as usize) < self.bases.len()).then_some(k as usize)
    }

    pub fn rank(&self, d: isize) -> usize {
        self.slot(d).map_or(0, |k| self.bases[k].len())
    }

    pub fn basis(&self, d: isize) -> &[Simplex] {
        self.slot(d).map_or(&[], |k| self.bases[k].as_slice())
    }

    /// ∂_d : C_d → C_{d−1}; `None` outside the complex or at the lowest degree.
    pub fn boundary(&self, d: isize) -> Option<&IntegerMatrix> {
        match self.slot(d) {
            Some(0) | None => None,
            Some(k) => Some(&self.boundaries[k]),
        }
    }

    pub fn boundary_mut(&mut self, d: isize) -> Option<&mut IntegerMatrix> {
        match self.slot(d) {
            Some(0) | None => None,
            Some(k) => Some(&mut self.boundaries[k]),
        }
    }

    /// ∂_d ∘ ∂_{d+1} = 0 in every degree.
    pub fn is_complex(&self) -> bool {
        (self.lowest_degree + 1..self.top_degree()).all(|d| match (self.boundary(d), self.boundary(d + 1)) {
            (Some(a), Some(b)) => a.mul(b).is_zero(),
            _ => true,
        })
    }

    fn boundary_rank(&self, d: isize) -> usize {
        self.boundary(d).map_or(0, |m| smith_normal_form(m).rank)
    }

    /// H_d = ker ∂_d / im ∂_{d+1}.
    pub fn homology(&self, d: isize) -> FgAbelianGroup {
        let n = self.rank(d);
        if n == 0 {
            return FgAbelianGroup::zero();
        }
        let out = self.boundary_rank(d);
        let (incoming, torsion) = match self.boundary(d + 1) {
            Some(m) => {
                let snf = smith_normal_form(m);
                (snf.rank, snf.torsion())
            }
            None => (0, Vec::new()),
        };
        FgAbelianGroup { free_rank: n - out - incoming, torsion }
    }

    /// H^d = ker δ^d / im δ^{d−1} with δ^d = (∂_{d+1})ᵀ.
    pub fn cohomology(&self, d: isize) -> FgAbelianGroup {
        let n = self.rank(d);
        if n == 0 {
            return FgAbelianGroup::zero();
        }
        let coboundary_out = self.boundary(d + 1).map(IntegerMatrix::transpose);
        let coboundary_in = self.boundary(d).map(IntegerMatrix::transpose);
        let out = coboundary_out.as_ref().map_or(0, |m| smith_normal_form(m).rank);
        let (incoming, torsion) = match coboundary_in {
            Some(m) => {
                let snf = smith_normal_form(&m);
                (snf.rank, snf.torsion())
            }
            None => (0, Vec::new()),
        };
        FgAbelianGroup { free_rank: n - out - incoming, torsion }
    }
}

/// Simplicial chain complex of a flag complex with the canonical orientation
/// ∂[v₀…v_k] = Σ (−1)^j [v₀…v̂_j…v_k]. With `use_augmentation` the empty
/// simplex spans degree −1 and the complex computes reduced (co)homology.
pub fn boundary_matrices(k: &FlagComplex, use_augmentation: bool) -> IntegerChainComplex {
    let lowest: isize = if use_augmentation { -1 } else { 0 };
    let top = k.dim().max(lowest);
    let bases: Vec<Vec<Simplex>> = (lowest..=top).map(|d| k.simplices(d).to_vec()).collect();
    let mut upper = Vec::new();
    for d in lowest + 1..=top {
        let (rows, cols) = (k.simplices(d - 1), k.simplices(d));
        let mut m = IntegerMatrix::zeros(rows.len(), cols.len());
        for (c, s) in cols.iter().enumerate() {
            for j in 0..s.len() {
                let face = s.facet(j);
                let r = rows.binary_search(&face).expect("flag complex is closed under faces");
                m.set(r, c, if j % 2 == 0 { BigInt::one() } else { -BigInt::one() });
            }
        }
        upper.push(m);
    }
    IntegerChainComplex::new(lowest, bases, upper)
}

/// H̃_i(k; Z); degrees outside the complex give the zero group.
pub fn reduced_homology(k: &FlagComplex, i: isize) -> FgAbelianGroup {
    boundary_matrices(k, true).homology(i)
}

/// H̃^i(k; Z), computed from the transposed boundary maps.
pub fn reduced_cohomology(k: &FlagComplex, i: isize) -> FgAbelianGroup {
    boundary_matrices(k, true).cohomology(i)
}

/// Alternating count of simplices in dimensions ≥ 0.
pub fn euler_characteristic(k: &FlagComplex) -> Result<i64, HomologyError> {
    if k.is_void() {
        return Err(HomologyError::EmptyComplex);
    }
    Ok((0..=k.dim()).map(|d| if d % 2 == 0 { k.count(d) as i64 } else { -(k.count(d) as i64) }).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flag::flag_complex;
    use crate::graph::{parse_spec, SimplicialGraph};

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn triangle_boundary_signs() {
        let k = flag_complex(&SimplicialGraph::complete(3));
        let c = boundary_matrices(&k, false);
        let d2 = c.boundary(2).unwrap();
        assert_eq!(d2, &IntegerMatrix::from_rows(&[vec![1], vec![-1], vec![1]]));
        assert!(c.is_complex());
    }

    #[test]
    fn augmentation_of_a_point() {
        let k = flag_complex(&SimplicialGraph::complete(1));
        let c = boundary_matrices(&k, true);
        assert_eq!(c.boundary(0).unwrap(), &IntegerMatrix::from_rows(&[vec![1]]));
    }

    #[test]
    fn augmented_empty_complex() {
        let k = flag_complex(&SimplicialGraph::new());
        let c = boundary_matrices(&k, true);
        assert_eq!((c.lowest_degree(), c.top_degree(), c.rank(-1)), (-1, -1, 1));
        assert!(c.boundary(0).is_none());
    }

    #[test]
    fn snf_examples() {
        let m = IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.diagonal, big(&[1, 6]));
        // 1 | 6 and |det| preserved
        assert!((&s.diagonal[1] % &s.diagonal[0]).is_zero());
        assert_eq!(&s.diagonal[0] * &s.diagonal[1], BigInt::from(6));

        let z = smith_normal_form(&IntegerMatrix::zeros(2, 3));
        assert_eq!((z.rank, z.diagonal), (0, big(&[0, 0])));

        let id = smith_normal_form(&IntegerMatrix::identity(3));
        assert_eq!(id.diagonal, big(&[1, 1, 1]));
    }

    #[test]
    fn snf_transforms_reconstruct_diagonal() {
        let m = IntegerMatrix::from_rows(&[vec![4, 6, 2], vec![6, 9, -3], vec![2, 12, 8], vec![0, 0, 5]]);
        let d = smith_normal_form_with_transforms(&m);
        let prod = d.left.mul(&m).mul(&d.right);
        for i in 0..prod.rows() {
            for j in 0..prod.cols() {
                let expected = if i == j { d.snf.diagonal[i].clone() } else { BigInt::zero() };
                assert_eq!(prod.get(i, j), &expected, "entry ({i},{j})");
            }
        }
        for w in d.snf.diagonal[..d.snf.rank].windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn homology_examples() {
        let c4 = flag_complex(&SimplicialGraph::cycle(4).unwrap());
        assert_eq!(reduced_homology(&c4, 1), FgAbelianGroup::free(1));
        assert_eq!(reduced_homology(&c4, 0), FgAbelianGroup::zero());
        let tri = flag_complex(&SimplicialGraph::complete(3));
        for i in -1..4 {
            assert!(reduced_homology(&tri, i).is_zero());
        }
        let empty = flag_complex(&SimplicialGraph::new());
        assert_eq!(reduced_homology(&empty, -1), FgAbelianGroup::free(1));
        assert!(reduced_homology(&empty, 0).is_zero());
        assert!(reduced_homology(&tri, -7).is_zero());
    }

    #[test]
    fn cohomology_examples() {
        let c4 = flag_complex(&SimplicialGraph::cycle(4).unwrap());
        assert_eq!(reduced_cohomology(&c4, 1), FgAbelianGroup::free(1));
        let j = flag_complex(&parse_spec("join:disjoint-edges:2,disjoint-edges:2").unwrap());
        assert_eq!(reduced_cohomology(&j, 1), FgAbelianGroup::free(1));
        assert!(reduced_cohomology(&j, 2).is_zero());
        let empty = flag_complex(&SimplicialGraph::new());
        assert_eq!(reduced_cohomology(&empty, -1), FgAbelianGroup::free(1));
    }

    #[test]
    fn torsion_shifts_up_in_cohomology() {
        // hand-built complex Z --2--> Z: H_0 = Z/2, H^1 = Z/2
        let c = IntegerChainComplex::new(
            0,
            vec![vec![Simplex::new(vec![0])], vec![Simplex::new(vec![0, 1])]],
            vec![IntegerMatrix::from_rows(&[vec![2]])],
        );
        assert_eq!(c.homology(0), FgAbelianGroup { free_rank: 0, torsion: big(&[2]) });
        assert!(c.homology(1).is_zero());
        assert!(c.cohomology(0).is_zero());
        assert_eq!(c.cohomology(1), FgAbelianGroup { free_rank: 0, torsion: big(&[2]) });
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_characteristic(&flag_complex(&SimplicialGraph::complete(3))), Ok(1));
        assert_eq!(euler_characteristic(&flag_complex(&SimplicialGraph::cycle(4).unwrap())), Ok(0));
        assert_eq!(euler_characteristic(&flag_complex(&SimplicialGraph::from_edges(2, &[]))), Ok(2));
        assert_eq!(euler_characteristic(&flag_complex(&SimplicialGraph::new())), Err(HomologyError::EmptyComplex));
    }

    #[test]
    fn group_display() {
        assert_eq!(FgAbelianGroup::zero().to_string(), "0");
        assert_eq!(FgAbelianGroup { free_rank: 2, torsion: big(&[2, 4]) }.to_string(), "Z^2 + Z/2 + Z/4");
        assert_eq!(
            serde_json::to_string(&FgAbelianGroup { free_rank: 1, torsion: big(&[3]) }).unwrap(),
            r#"{"rank":1,"torsion":[3]}"#
        );
    }

    #[test]
    fn matrix_display_is_row_major() {
        let m = IntegerMatrix::from_rows(&[vec![1, -2], vec![0, 3]]);
        assert_eq!(m.to_string(), "1 -2\n0 3\n");
    }
}
