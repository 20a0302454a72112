//! Canonical subspaces of GF(q)^n, identifying vectors, echelon Ferrers forms
//! and Grassmannian enumeration.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::ff::FieldSpec;
use crate::matgf::{MatError, MatGF};

/// Default cap on the number of subspaces an enumeration may produce.
pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SubspaceError {
    #[error("vector length {got} does not match ambient dimension {n}")]
    LengthMismatch { n: usize, got: usize },
    #[error("nonzero entry at row {row}, column {col} lies outside the echelon Ferrers form")]
    ShapeViolation { row: usize, col: usize },
    #[error("invalid arguments: {0}")]
    BadArgs(&'static str),
    #[error("enumeration of {count} subspaces exceeds cap {cap}")]
    TooLarge { count: BigUint, cap: u64 },
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
    #[error(transparent)]
    Mat(#[from] MatError),
}

/// A subspace of GF(q)^n held by its reduced row echelon generator matrix.
#[derive(Clone)]
pub struct Subspace {
    gen: MatGF,
    pivots: Vec<usize>,
    /// GF(2), n <= 64: row r as bits, column c at bit c.
    bits: Option<Vec<u64>>,
}

impl Subspace {
    /// Canonicalize the row space of a matrix.
    pub fn from_matrix(m: &MatGF) -> Self {
        let r = m.rref();
        Self::from_rref(r.mat.truncate_rows(r.rank), r.pivots)
    }

    fn from_rref(gen: MatGF, pivots: Vec<usize>) -> Self {
        let bits = (gen.field().order() == 2 && gen.cols() <= 64).then(|| {
            (0..gen.rows())
                .map(|r| gen.row(r).iter().enumerate().fold(0u64, |acc, (c, &v)| acc | ((v as u64) << c)))
                .collect()
        });
        Subspace { gen, pivots, bits }
    }

    /// Span of a list of vectors; an empty list gives the zero subspace.
    pub fn from_span(field: Arc<FieldSpec>, n: usize, vectors: &[Vec<u32>]) -> Result<Self, SubspaceError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != n) {
            return Err(SubspaceError::LengthMismatch { n, got: v.len() });
        }
        Ok(Self::from_matrix(&MatGF::from_rows(field, n, vectors)?))
    }

    /// Parse a literal such as "1000;0101" (rows need not be reduced).
    pub fn parse(field: Arc<FieldSpec>, n: usize, lit: &str) -> Result<Self, SubspaceError> {
        Ok(Self::from_matrix(&MatGF::parse(field, n, lit)?))
    }

    pub fn zero(field: Arc<FieldSpec>, n: usize) -> Self {
        Self::from_rref(MatGF::zeros(field, 0, n), Vec::new())
    }

    pub fn whole(field: Arc<FieldSpec>, n: usize) -> Self {
        Self::from_rref(MatGF::identity(field, n), (0..n).collect())
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        self.gen.field()
    }

    pub fn q(&self) -> u32 {
        self.gen.field().order()
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn dim(&self) -> usize {
        self.gen.rows()
    }

    /// The k×n generator in reduced row echelon form.
    pub fn gen(&self) -> &MatGF {
        &self.gen
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn packed_rows(&self) -> Option<&[u64]> {
        self.bits.as_deref()
    }

    pub fn identifying_vector(&self) -> IdentifyingVector {
        let mut bits = vec![false; self.n()];
        for &p in &self.pivots {
            bits[p] = true;
        }
        IdentifyingVector { bits }
    }

    pub fn to_literal(&self) -> String {
        self.gen.to_literal()
    }

    /// v ∈ self, tested by rank invariance under appending v.
    pub fn contains(&self, v: &[u32]) -> bool {
        if v.iter().all(|&x| x == 0) {
            return true;
        }
        let row = MatGF::from_rows(self.field().clone(), self.n(), &[v.to_vec()]).expect("vector length");
        self.gen.vconcat(&row).expect("same ambient").rank() == self.dim()
    }

    /// Sum U + W.
    pub fn join(&self, other: &Self) -> Result<Self, SubspaceError> {
        self.check_ambient(other)?;
        Ok(Self::from_matrix(&self.gen.vconcat(&other.gen)?))
    }

    /// Intersection U ∩ W via the left kernel of the stacked generators.
    pub fn meet(&self, other: &Self) -> Result<Self, SubspaceError> {
        self.check_ambient(other)?;
        let stacked = self.gen.vconcat(&other.gen)?;
        let kernel = stacked.left_null_space();
        let coeffs = kernel.select_cols(&(0..self.dim()).collect::<Vec<_>>());
        Ok(Self::from_matrix(&coeffs.mul(&self.gen)?))
    }

    /// Whether U ⊆ W.
    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.n() == other.n() && other.join(self).map(|s| s.dim() == other.dim()).unwrap_or(false)
    }

    /// The subspace obtained by keeping only the first `m` coordinates of every vector.
    pub fn restrict(&self, m: usize) -> Self {
        Self::from_matrix(&self.gen.select_cols(&(0..m).collect::<Vec<_>>()))
    }

    pub(crate) fn check_ambient(&self, other: &Self) -> Result<(), SubspaceError> {
        if self.n() != other.n() || **self.field() != **other.field() {
            return Err(SubspaceError::AmbientMismatch);
        }
        Ok(())
    }

    /// Free entries of this subspace read in the row-major order of its Ferrers form.
    pub fn free_entries(&self) -> Vec<u32> {
        let shape = echelon_ferrers_shape(&self.identifying_vector());
        let mut out = Vec::with_capacity(shape.dot_count);
        for (r, cols) in shape.free.iter().enumerate() {
            out.extend(cols.iter().map(|&c| self.gen.get(r, c)));
        }
        out
    }
}

impl PartialEq for Subspace {
    fn eq(&self, o: &Self) -> bool {
        self.gen == o.gen
    }
}
impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.gen.cols().hash(state);
        self.gen.field().order().hash(state);
        self.gen.data().hash(state);
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.n(), self.dim(), self.gen.data()).cmp(&(o.n(), o.dim(), o.gen.data()))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(n={}, k={}, \"{}\")", self.n(), self.dim(), self.to_literal())
    }
}

/// Binary vector marking the pivot columns of a subspace.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IdentifyingVector {
    pub bits: Vec<bool>,
}

impl IdentifyingVector {
    pub fn new(bits: Vec<bool>) -> Self {
        IdentifyingVector { bits }
    }

    /// Parse a string of '0'/'1'.
    pub fn parse(s: &str) -> Option<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(IdentifyingVector::new)
    }

    /// 1^k 0^{n−k}.
    pub fn top(n: usize, k: usize) -> Self {
        IdentifyingVector { bits: (0..n).map(|i| i < k).collect() }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// 0-based positions of the ones.
    pub fn pivots(&self) -> Vec<usize> {
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
    }

    pub fn hamming(&self, other: &Self) -> usize {
        self.bits.iter().zip(&other.bits).filter(|(a, b)| a != b).count()
    }
}

impl fmt::Display for IdentifyingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for IdentifyingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialOrd for IdentifyingVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic with the first position most significant.
impl Ord for IdentifyingVector {
    fn cmp(&self, o: &Self) -> Ordering {
        self.bits.cmp(&o.bits)
    }
}

/// Free ("dot") region of the echelon Ferrers form of an identifying vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FerrersShape {
    pub id_vec: IdentifyingVector,
    /// Per row, ascending ambient columns of the free entries.
    pub free: Vec<Vec<usize>>,
    pub dot_count: usize,
}

impl FerrersShape {
    pub fn k(&self) -> usize {
        self.free.len()
    }

    pub fn n(&self) -> usize {
        self.id_vec.len()
    }

    pub fn row_dots(&self) -> Vec<usize> {
        self.free.iter().map(Vec::len).collect()
    }

    /// Ambient columns of the compressed diagram: the non-pivot columns right of the first pivot.
    pub fn diagram_columns(&self) -> Vec<usize> {
        let piv = self.id_vec.pivots();
        match piv.first() {
            None => Vec::new(),
            Some(&first) => (first + 1..self.n()).filter(|c| !self.id_vec.bits[*c]).collect(),
        }
    }

    /// Boolean k × w grid of the dots in compressed columns (right-justified, rows non-increasing).
    pub fn pattern(&self) -> Pattern {
        let cols = self.diagram_columns();
        let cells = self
            .free
            .iter()
            .map(|row| cols.iter().map(|c| row.contains(c)).collect())
            .collect();
        Pattern { cells }
    }
}

/// Zero/nonzero template of a rank-metric codeword matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    pub cells: Vec<Vec<bool>>,
}

impl Pattern {
    pub fn full(rows: usize, cols: usize) -> Self {
        Pattern { cells: vec![vec![true; cols]; rows] }
    }

    /// Rows with `zeros[i]` leading zeros in a rows × cols grid.
    pub fn from_leading_zeros(cols: usize, zeros: &[usize]) -> Self {
        Pattern { cells: zeros.iter().map(|&z| (0..cols).map(|c| c >= z).collect()).collect() }
    }

    pub fn rows(&self) -> usize {
        self.cells.len()
    }

    pub fn cols(&self) -> usize {
        self.cells.first().map_or(0, Vec::len)
    }

    pub fn dots(&self) -> usize {
        self.cells.iter().flatten().filter(|&&b| b).count()
    }

    /// Whether every nonzero entry of `m` sits on a dot.
    pub fn fits(&self, m: &MatGF) -> bool {
        m.rows() == self.rows()
            && m.cols() == self.cols()
            && (0..m.rows()).all(|r| (0..m.cols()).all(|c| self.cells[r][c] || m.get(r, c) == 0))
    }

    /// Dot positions, row-major.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, row) in self.cells.iter().enumerate() {
            for (c, &b) in row.iter().enumerate() {
                if b {
                    out.push((r, c));
                }
            }
        }
        out
    }
}

pub fn identifying_vector(u: &Subspace) -> IdentifyingVector {
    u.identifying_vector()
}

/// Row r is free in column c iff c lies right of the row's pivot and is not itself a pivot.
pub fn echelon_ferrers_shape(v: &IdentifyingVector) -> FerrersShape {
    let piv = v.pivots();
    let free: Vec<Vec<usize>> = piv
        .iter()
        .map(|&p| (p + 1..v.len()).filter(|&c| !v.bits[c]).collect())
        .collect();
    let dot_count = free.iter().map(Vec::len).sum();
    FerrersShape { id_vec: v.clone(), free, dot_count }
}

/// Dot count from pivot positions: kn − k(k−1)/2 − Σ i_j with 1-based pivots.
pub fn dot_count_formula(v: &IdentifyingVector) -> usize {
    let (n, k) = (v.len(), v.weight());
    let sum: usize = v.pivots().iter().map(|p| p + 1).sum();
    k * n - k * (k.saturating_sub(1)) / 2 - sum
}

/// Number of subspaces with identifying vector v: q^{dots}.
pub fn count_with_id(v: &IdentifyingVector, q: u32) -> BigUint {
    BigUint::from(q).pow(dot_count_formula(v) as u32)
}

/// The unique subspace with identifying vector v and the given free entries (row-major dot order).
pub fn fill_shape(field: Arc<FieldSpec>, v: &IdentifyingVector, values: &[u32]) -> Result<Subspace, SubspaceError> {
    let shape = echelon_ferrers_shape(v);
    if values.len() != shape.dot_count {
        return Err(SubspaceError::BadArgs("value count differs from dot count"));
    }
    if values.iter().any(|&x| x >= field.order()) {
        return Err(SubspaceError::BadArgs("value outside the field"));
    }
    let n = v.len();
    let piv = v.pivots();
    let mut gen = MatGF::zeros(field, piv.len(), n);
    let mut it = values.iter();
    for (r, cols) in shape.free.iter().enumerate() {
        gen.set(r, piv[r], 1);
        for &c in cols {
            gen.set(r, c, *it.next().expect("length checked"));
        }
    }
    Ok(Subspace::from_rref(gen, piv))
}

/// Plant a compressed-diagram matrix (k × diagram width) into EF(v).
pub fn fill_matrix(v: &IdentifyingVector, m: &MatGF) -> Result<Subspace, SubspaceError> {
    let shape = echelon_ferrers_shape(v);
    let cols = shape.diagram_columns();
    if m.rows() != shape.k() || m.cols() != cols.len() {
        return Err(SubspaceError::BadArgs("matrix does not match the diagram size"));
    }
    let piv = v.pivots();
    let mut gen = MatGF::zeros(m.field().clone(), piv.len(), v.len());
    for (r, &pr) in piv.iter().enumerate() {
        gen.set(r, pr, 1);
        for (j, &c) in cols.iter().enumerate() {
            let x = m.get(r, j);
            if x == 0 {
                continue;
            }
            if !shape.free[r].contains(&c) {
                return Err(SubspaceError::ShapeViolation { row: r, col: c });
            }
            gen.set(r, c, x);
        }
    }
    Ok(Subspace::from_rref(gen, piv))
}

/// Gaussian coefficient [n k]_q.
pub fn gaussian(n: usize, k: usize, q: u32) -> Result<BigUint, SubspaceError> {
    if k > n {
        return Err(SubspaceError::BadArgs("k > n"));
    }
    Ok(gaussian_or_zero(n as i64, k as i64, q))
}

/// [n k]_q, zero outside 0 <= k <= n.
pub fn gaussian_or_zero(n: i64, k: i64, q: u32) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    let qb = BigUint::from(q);
    let (mut num, mut den) = (BigUint::one(), BigUint::one());
    for i in 0..k as u32 {
        num *= qb.pow(n as u32 - i) - 1u32;
        den *= qb.pow(i + 1) - 1u32;
    }
    num / den
}

/// All weight-k vectors of length n, lexicographically descending.
pub fn weight_k_vectors_desc(n: usize, k: usize) -> Vec<IdentifyingVector> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut pos: Vec<usize> = (0..k).collect();
    loop {
        let mut bits = vec![false; n];
        for &p in &pos {
            bits[p] = true;
        }
        out.push(IdentifyingVector { bits });
        // next combination in lexicographic order of positions = descending bit order
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pos[i] < n - k + i {
                break;
            }
        }
        pos[i] += 1;
        for j in i + 1..k {
            pos[j] = pos[j - 1] + 1;
        }
    }
}

/// Iterator over G_q(n,k) in canonical order.
pub struct Grassmannian {
    field: Arc<FieldSpec>,
    ids: Vec<IdentifyingVector>,
    id_idx: usize,
    digits: Vec<u32>,
    started: bool,
}

impl Iterator for Grassmannian {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        let q = self.field.order();
        loop {
            let id = self.ids.get(self.id_idx)?;
            if !self.started {
                self.digits = vec![0; dot_count_formula(id)];
                self.started = true;
                return Some(fill_shape(self.field.clone(), id, &self.digits).expect("valid shape"));
            }
            // increment, last position least significant
            let mut i = self.digits.len();
            let mut carried_out = true;
            while i > 0 {
                i -= 1;
                self.digits[i] += 1;
                if self.digits[i] < q {
                    carried_out = false;
                    break;
                }
                self.digits[i] = 0;
            }
            if carried_out {
                self.id_idx += 1;
                self.started = false;
                continue;
            }
            return Some(fill_shape(self.field.clone(), id, &self.digits).expect("valid shape"));
        }
    }
}

pub fn enumerate_grassmannian(field: Arc<FieldSpec>, n: usize, k: usize, cap: u64) -> Result<Grassmannian, SubspaceError> {
    let count = gaussian(n, k, field.order())?;
    if count > BigUint::from(cap) {
        return Err(SubspaceError::TooLarge { count, cap });
    }
    Ok(Grassmannian { field, ids: weight_k_vectors_desc(n, k), id_idx: 0, digits: Vec::new(), started: false })
}

/// All of P_q(n), dimension by dimension.
pub fn enumerate_projective(field: Arc<FieldSpec>, n: usize, cap: u64) -> Result<Vec<Subspace>, SubspaceError> {
    let total: BigUint = (0..=n).map(|k| gaussian_or_zero(n as i64, k as i64, field.order())).sum();
    if total > BigUint::from(cap) {
        return Err(SubspaceError::TooLarge { count: total, cap });
    }
    let mut out = Vec::with_capacity(total.to_usize().unwrap_or(0));
    for k in 0..=n {
        out.extend(enumerate_grassmannian(field.clone(), n, k, cap)?);
    }
    Ok(out)
}

/// {x : x·u = 0 for all u ∈ U} under the standard bilinear form.
pub fn orthogonal_complement(u: &Subspace) -> Subspace {
    Subspace::from_matrix(&u.gen().null_space())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::field_of_order;
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn gf(q: u32) -> Arc<FieldSpec> {
        field_of_order(q).unwrap()
    }

    fn iv(s: &str) -> IdentifyingVector {
        IdentifyingVector::parse(s).unwrap()
    }

    // Oracle: all vectors of the span as integer codes.
    fn elements(u: &Subspace) -> BTreeSet<Vec<u32>> {
        let f = u.field();
        let mut span = BTreeSet::new();
        span.insert(vec![0; u.n()]);
        for r in 0..u.dim() {
            let cur: Vec<_> = span.iter().cloned().collect();
            for v in cur {
                for c in 1..f.order() {
                    span.insert(v.iter().zip(u.gen().row(r)).map(|(&a, &b)| f.add(a, f.mul(c, b))).collect());
                }
            }
        }
        span
    }

    #[test]
    fn from_span_examples() {
        let f = gf(2);
        let u = Subspace::from_span(f.clone(), 4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap();
        assert_eq!(u.to_literal(), "1000;0100");
        assert_eq!(u.dim(), 2);
        let z = Subspace::from_span(f.clone(), 4, &[]).unwrap();
        assert_eq!(z.dim(), 0);
        let w = Subspace::parse(f.clone(), 4, "1100;0110;1010").unwrap();
        assert_eq!(w.dim(), 2);
        assert_eq!(elements(&w).len(), 4);
        assert!(matches!(
            Subspace::from_span(f, 4, &[vec![1, 0]]),
            Err(SubspaceError::LengthMismatch { n: 4, got: 2 })
        ));
    }

    #[test]
    fn identifying_vector_examples() {
        let f = gf(2);
        let u = Subspace::parse(f.clone(), 4, "1000;0100").unwrap();
        let u1 = Subspace::parse(f.clone(), 4, "1000;0101").unwrap();
        assert_eq!(u.identifying_vector().to_string(), "1100");
        assert_eq!(u1.identifying_vector().to_string(), "1100");
        assert_ne!(u, u1);
        assert_eq!(Subspace::zero(f, 4).identifying_vector().to_string(), "0000");
    }

    #[test]
    fn ferrers_shape_examples() {
        let s = echelon_ferrers_shape(&iv("0110100"));
        assert_eq!(s.dot_count, 8);
        assert_eq!(s.row_dots(), vec![3, 3, 2]);
        assert_eq!(s.free, vec![vec![3, 5, 6], vec![3, 5, 6], vec![5, 6]]);
        let top = echelon_ferrers_shape(&IdentifyingVector::top(7, 3));
        assert_eq!(top.dot_count, 12);
        assert_eq!(echelon_ferrers_shape(&iv("0000111")).dot_count, 0);
    }

    #[test]
    fn count_with_id_examples() {
        assert_eq!(count_with_id(&iv("1100"), 2), BigUint::from(16u32));
        assert_eq!(count_with_id(&iv("0011"), 7), BigUint::one());
        // oracle: group an exhaustive G_2(7,3) listing by identifying vector
        let mut n = 0u32;
        for u in enumerate_grassmannian(gf(2), 7, 3, DEFAULT_ENUM_CAP).unwrap() {
            if u.identifying_vector() == iv("0110100") {
                n += 1;
            }
        }
        assert_eq!(n, 256);
        assert_eq!(count_with_id(&iv("0110100"), 2), BigUint::from(256u32));
    }

    #[test]
    fn fill_matrix_examples() {
        let f = gf(2);
        let v = iv("0110100");
        let m1 = MatGF::parse(f.clone(), 3, "111;110;011").unwrap();
        let u = fill_matrix(&v, &m1).unwrap();
        assert_eq!(u.to_literal(), "0101011;0011010;0000111");
        let m2 = MatGF::parse(f.clone(), 3, "110;110;111").unwrap();
        assert_eq!(fill_matrix(&v, &m2), Err(SubspaceError::ShapeViolation { row: 2, col: 3 }));
        let zero = fill_shape(f, &v, &[0; 8]).unwrap();
        assert_eq!(zero.to_literal(), "0100000;0010000;0000100");
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian(5, 0, 2).unwrap(), BigUint::one());
        assert_eq!(gaussian(5, 5, 3).unwrap(), BigUint::one());
        assert_eq!(gaussian(4, 2, 2).unwrap(), BigUint::from(35u32));
        assert_eq!(enumerate_grassmannian(gf(2), 4, 2, 100).unwrap().count(), 35);
        let by_ids: BigUint = weight_k_vectors_desc(6, 3).iter().map(|v| count_with_id(v, 2)).sum();
        assert_eq!(gaussian(6, 3, 2).unwrap(), by_ids);
        assert_eq!(by_ids, BigUint::from(1395u32));
        assert!(gaussian(2, 3, 2).is_err());
    }

    #[test]
    fn enumeration_order_and_distinctness() {
        let lits: Vec<String> = enumerate_grassmannian(gf(2), 2, 1, 10).unwrap().map(|u| u.to_literal()).collect();
        assert_eq!(lits, vec!["10", "11", "01"]);
        let all: Vec<Subspace> = enumerate_grassmannian(gf(2), 4, 2, 100).unwrap().collect();
        let set: BTreeSet<String> = all.iter().map(|u| u.to_literal()).collect();
        assert_eq!(set.len(), 35);
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert!(!crate::matgf::row_space_equal(a.gen(), b.gen()).unwrap());
            }
        }
        let zero: Vec<Subspace> = enumerate_grassmannian(gf(3), 5, 0, 10).unwrap().collect();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].dim(), 0);
        assert!(matches!(enumerate_grassmannian(gf(2), 12, 6, 1000), Err(SubspaceError::TooLarge { .. })));
    }

    #[test]
    fn complement_examples() {
        let f = gf(2);
        assert_eq!(orthogonal_complement(&Subspace::whole(f.clone(), 4)).dim(), 0);
        let u = Subspace::parse(f.clone(), 4, "1000;0100").unwrap();
        assert_eq!(orthogonal_complement(&u).to_literal(), "0010;0001");
        for u in enumerate_grassmannian(f, 5, 2, 1000).unwrap() {
            let c = orthogonal_complement(&u);
            assert_eq!(c.dim(), 3);
            assert_eq!(orthogonal_complement(&c), u);
        }
    }

    #[test]
    fn meet_and_join_match_element_sets() {
        let f = gf(3);
        let all: Vec<Subspace> = enumerate_projective(f, 3, 1000).unwrap();
        for a in all.iter().step_by(3) {
            for b in all.iter().step_by(5) {
                let (ea, eb) = (elements(a), elements(b));
                let inter: BTreeSet<_> = ea.intersection(&eb).cloned().collect();
                assert_eq!(elements(&a.meet(b).unwrap()), inter);
                let j = a.join(b).unwrap();
                assert_eq!(j.dim() + a.meet(b).unwrap().dim(), a.dim() + b.dim());
            }
        }
    }

    #[test]
    fn weight_vectors_descending() {
        let v: Vec<String> = weight_k_vectors_desc(4, 2).iter().map(|x| x.to_string()).collect();
        assert_eq!(v, vec!["1100", "1010", "1001", "0110", "0101", "0011"]);
    }

    #[test]
    fn shape_counting_identities() {
        for q in [2u32, 3] {
            for n in 0..=7usize {
                for k in 0..=n {
                    let s: BigUint = weight_k_vectors_desc(n, k).iter().map(|v| count_with_id(v, q)).sum();
                    assert_eq!(s, gaussian(n, k, q).unwrap(), "q={q} n={n} k={k}");
                    for v in weight_k_vectors_desc(n, k) {
                        let sh = echelon_ferrers_shape(&v);
                        assert_eq!(sh.dot_count, dot_count_formula(&v));
                        assert!(sh.row_dots().windows(2).all(|w| w[0] >= w[1]));
                    }
                }
            }
        }
    }

    #[test]
    fn gaussian_symmetry_and_size_bounds() {
        for n in 0..=12usize {
            for k in 0..=n {
                assert_eq!(gaussian(n, k, 2).unwrap(), gaussian(n, n - k, 2).unwrap());
            }
            for q in [2u32, 3, 4, 5] {
                for k in 1..n {
                    let g = gaussian(n, k, q).unwrap();
                    let lo = BigUint::from(q).pow((k * (n - k)) as u32);
                    assert!(lo < g && g < lo * 4u32, "q={q} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn fill_read_round_trip() {
        for (q, n, k) in [(2u32, 6usize, 3usize), (3, 5, 2), (4, 4, 2), (2, 7, 2)] {
            let f = gf(q);
            for u in enumerate_grassmannian(f.clone(), n, k, 100_000).unwrap() {
                let back = fill_shape(f.clone(), &u.identifying_vector(), &u.free_entries()).unwrap();
                assert_eq!(back, u);
            }
        }
    }

    proptest! {
        #[test]
        fn contains_agrees_with_elements(rows in proptest::collection::vec(proptest::collection::vec(0u32..3, 4), 0..3), v in proptest::collection::vec(0u32..3, 4)) {
            let u = Subspace::from_span(gf(3), 4, &rows).unwrap();
            prop_assert_eq!(u.contains(&v), elements(&u).contains(&v));
        }
    }
}
