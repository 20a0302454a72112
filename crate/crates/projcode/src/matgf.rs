//! Dense matrices over GF(q) and row reduction.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::ff::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(&'static str),
    #[error("matrices over different fields")]
    FieldMismatch,
    #[error("entry {value} is not an element of a field of order {order}")]
    BadEntry { value: u32, order: u32 },
    #[error("cannot parse matrix literal: {0}")]
    Parse(String),
}

/// Row-major matrix over a finite field.
#[derive(Clone)]
pub struct MatGF {
    field: Arc<FieldSpec>,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl PartialEq for MatGF {
    fn eq(&self, o: &Self) -> bool {
        self.rows == o.rows && self.cols == o.cols && self.data == o.data && *self.field == *o.field
    }
}
impl Eq for MatGF {}

impl fmt::Debug for MatGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}x{} {}]", self.rows, self.cols, self.to_literal())
    }
}

/// Result of row reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    /// Same shape as the input, zero rows last.
    pub mat: MatGF,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl MatGF {
    pub fn zeros(field: Arc<FieldSpec>, rows: usize, cols: usize) -> Self {
        MatGF { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Arc<FieldSpec>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(field: Arc<FieldSpec>, cols: usize, rows: &[Vec<u32>]) -> Result<Self, MatError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(MatError::ShapeMismatch("row length"));
            }
            if let Some(&value) = r.iter().find(|&&v| v >= field.order()) {
                return Err(MatError::BadEntry { value, order: field.order() });
            }
            data.extend_from_slice(r);
        }
        Ok(MatGF { field, rows: rows.len(), cols, data })
    }

    /// Build from a flat row-major buffer. Entries are trusted to lie in the field.
    pub fn from_flat(field: Arc<FieldSpec>, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        MatGF { field, rows, cols, data }
    }

    /// Parse rows of digits separated by ';', e.g. "1000;0101". Empty string is a 0-row matrix.
    pub fn parse(field: Arc<FieldSpec>, cols: usize, lit: &str) -> Result<Self, MatError> {
        let lit = lit.trim();
        if lit.is_empty() {
            return Ok(Self::zeros(field, 0, cols));
        }
        let mut rows = Vec::new();
        for part in lit.split(';') {
            let row: Result<Vec<u32>, MatError> = part
                .trim()
                .chars()
                .map(|c| {
                    c.to_digit(36).ok_or_else(|| MatError::Parse(alloc::format!("bad digit {c:?}")))
                })
                .collect();
            rows.push(row?);
        }
        Self::from_rows(field, cols, &rows)
    }

    /// Rows joined by ';', entries as base-36 digits.
    pub fn to_literal(&self) -> String {
        let mut s = String::new();
        for r in 0..self.rows {
            if r > 0 {
                s.push(';');
            }
            for &v in self.row(r) {
                s.push(core::char::from_digit(v, 36).unwrap_or('?'));
            }
        }
        s
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn vconcat(&self, other: &Self) -> Result<Self, MatError> {
        if *self.field != *other.field {
            return Err(MatError::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(MatError::ShapeMismatch("column counts differ"));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatGF { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatError::ShapeMismatch("addition operands"));
        }
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(MatGF { field: f.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatError::ShapeMismatch("subtraction operands"));
        }
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Ok(MatGF { field: f.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        MatGF { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatError> {
        if self.cols != other.rows {
            return Err(MatError::ShapeMismatch("product operands"));
        }
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Select rows by index.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        MatGF { field: self.field.clone(), rows: idx.len(), cols: self.cols, data }
    }

    /// Select columns by index.
    pub fn select_cols(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.rows);
        for r in 0..self.rows {
            data.extend(idx.iter().map(|&c| self.get(r, c)));
        }
        MatGF { field: self.field.clone(), rows: self.rows, cols: idx.len(), data }
    }

    /// Keep the first `n` rows.
    pub fn truncate_rows(&self, n: usize) -> Self {
        MatGF {
            field: self.field.clone(),
            rows: n,
            cols: self.cols,
            data: self.data[..n * self.cols].to_vec(),
        }
    }

    pub fn rref(&self) -> Rref {
        if self.field.order() == 2 {
            rref_gf2(self)
        } else {
            rref_generic(self)
        }
    }

    pub fn rank(&self) -> usize {
        if self.field.order() == 2 {
            let (_, piv) = packed_rref(self);
            piv.len()
        } else {
            rref_generic(self).rank
        }
    }

    /// Basis (as rows) of {x : self · x = 0}.
    pub fn null_space(&self) -> MatGF {
        let Rref { mat, rank, pivots } = self.rref();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = MatGF::zeros(f.clone(), free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, 1);
            for (r, &pc) in pivots.iter().enumerate().take(rank) {
                out.set(i, pc, f.neg(mat.get(r, fc)));
            }
        }
        out
    }

    /// Basis (as rows) of {y : y · self = 0}.
    pub fn left_null_space(&self) -> MatGF {
        self.transpose().null_space()
    }
}

/// True iff the two row spaces coincide.
pub fn row_space_equal(a: &MatGF, b: &MatGF) -> Result<bool, MatError> {
    if a.cols != b.cols {
        return Err(MatError::ShapeMismatch("column counts differ"));
    }
    if *a.field != *b.field {
        return Err(MatError::FieldMismatch);
    }
    let (ra, rb) = (a.rref(), b.rref());
    Ok(ra.rank == rb.rank && ra.mat.truncate_rows(ra.rank) == rb.mat.truncate_rows(rb.rank))
}

/// Field-generic Gauss–Jordan elimination.
pub fn rref_generic(m: &MatGF) -> Rref {
    let f = m.field.clone();
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(pr) = (r..a.rows).find(|&i| a.get(i, c) != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..a.cols {
                a.data.swap(pr * a.cols + j, r * a.cols + j);
            }
        }
        let inv = f.inv(a.get(r, c)).expect("nonzero pivot");
        for j in c..a.cols {
            let v = f.mul(a.get(r, j), inv);
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            let factor = a.get(i, c);
            if i == r || factor == 0 {
                continue;
            }
            for j in c..a.cols {
                let v = f.sub(a.get(i, j), f.mul(factor, a.get(r, j)));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { mat: a, rank: r, pivots }
}

fn rref_gf2(m: &MatGF) -> Rref {
    let (packed, pivots) = packed_rref(m);
    let wpr = words_per_row(m.cols);
    let mut out = MatGF::zeros(m.field.clone(), m.rows, m.cols);
    for r in 0..pivots.len() {
        for c in 0..m.cols {
            out.data[r * m.cols + c] = ((packed[r * wpr + c / 64] >> (c % 64)) & 1) as u32;
        }
    }
    Rref { mat: out, rank: pivots.len(), pivots }
}

#[inline]
pub fn words_per_row(cols: usize) -> usize {
    cols.div_ceil(64).max(1)
}

/// Pack a GF(2) matrix: bit `c % 64` of word `c / 64` holds column `c`.
pub fn pack_gf2(m: &MatGF) -> Vec<u64> {
    let wpr = words_per_row(m.cols);
    let mut out = vec![0u64; m.rows * wpr];
    for r in 0..m.rows {
        for c in 0..m.cols {
            if m.get(r, c) != 0 {
                out[r * wpr + c / 64] |= 1 << (c % 64);
            }
        }
    }
    out
}

fn packed_rref(m: &MatGF) -> (Vec<u64>, Vec<usize>) {
    let mut bits = pack_gf2(m);
    let pivots = bits::rref(&mut bits, words_per_row(m.cols), m.cols);
    (bits, pivots)
}

/// Word-parallel elimination on packed GF(2) rows.
pub mod bits {
    use alloc::vec::Vec;

    /// Reduce packed rows in place; nonzero rows end up first. Returns pivot columns.
    pub fn rref(rows: &mut [u64], wpr: usize, cols: usize) -> Vec<usize> {
        let nrows = rows.len() / wpr;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == nrows {
                break;
            }
            let (w, b) = (c / 64, 1u64 << (c % 64));
            let Some(pr) = (r..nrows).find(|&i| rows[i * wpr + w] & b != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..wpr {
                    rows.swap(pr * wpr + j, r * wpr + j);
                }
            }
            for i in 0..nrows {
                if i != r && rows[i * wpr + w] & b != 0 {
                    for j in w..wpr {
                        let v = rows[r * wpr + j];
                        rows[i * wpr + j] ^= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Rank of single-word rows (cols <= 64), destroying the input.
    pub fn rank64(rows: &mut [u64]) -> usize {
        let mut rank = 0;
        for i in 0..rows.len() {
            let v = rows[i];
            if v == 0 {
                continue;
            }
            let low = v & v.wrapping_neg();
            for r in rows[i + 1..].iter_mut() {
                if *r & low != 0 {
                    *r ^= v;
                }
            }
            rank += 1;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::make_field;
    use alloc::collections::BTreeSet;
    use proptest::prelude::*;

    fn gf(q: u32) -> Arc<FieldSpec> {
        crate::ff::field_of_order(q).unwrap()
    }

    // Oracle: size of the row span by closure over all combinations.
    fn span_size(m: &MatGF) -> usize {
        let f = m.field();
        let mut span: BTreeSet<Vec<u32>> = BTreeSet::new();
        span.insert(vec![0; m.cols()]);
        for r in 0..m.rows() {
            let cur: Vec<Vec<u32>> = span.iter().cloned().collect();
            for v in cur {
                for c in 1..f.order() {
                    let w: Vec<u32> = v.iter().zip(m.row(r)).map(|(&a, &b)| f.add(a, f.mul(c, b))).collect();
                    span.insert(w);
                }
            }
        }
        span.len()
    }

    fn log(q: usize, mut x: usize) -> usize {
        let mut k = 0;
        while x > 1 {
            x /= q;
            k += 1;
        }
        k
    }

    fn is_rref(r: &Rref) -> bool {
        let m = &r.mat;
        let mut last = None;
        for i in 0..m.rows() {
            let lead = (0..m.cols()).find(|&c| m.get(i, c) != 0);
            match (lead, i < r.rank) {
                (Some(c), true) => {
                    if m.get(i, c) != 1 || last.is_some_and(|l| c <= l) {
                        return false;
                    }
                    if (0..m.rows()).any(|j| j != i && m.get(j, c) != 0) {
                        return false;
                    }
                    if r.pivots[i] != c {
                        return false;
                    }
                    last = Some(c);
                }
                (None, false) => {}
                _ => return false,
            }
        }
        true
    }

    #[test]
    fn rref_examples() {
        let f = gf(2);
        let id = MatGF::identity(f.clone(), 4);
        let r = id.rref();
        assert_eq!(r.mat, id);
        assert_eq!(r.pivots, vec![0, 1, 2, 3]);
        let dup = MatGF::parse(f.clone(), 2, "10;10").unwrap();
        let r = dup.rref();
        assert_eq!(r.mat, MatGF::parse(f.clone(), 2, "10;00").unwrap());
        assert_eq!(r.rank, 1);
        let m = MatGF::parse(f.clone(), 4, "1000;0100;1000;0101").unwrap();
        assert_eq!(1usize << m.rank(), span_size(&m));
        assert_eq!(m.rank(), 3);
        let z = MatGF::zeros(f, 3, 4).rref();
        assert_eq!((z.rank, z.pivots.len()), (0, 0));
    }

    #[test]
    fn vconcat_examples() {
        let f = gf(2);
        let u = MatGF::parse(f.clone(), 4, "1000;0100").unwrap();
        let w = MatGF::parse(f.clone(), 4, "1000;0101").unwrap();
        let uw = u.vconcat(&w).unwrap();
        assert_eq!((uw.rows(), uw.cols()), (4, 4));
        assert_eq!(1usize << uw.rank(), span_size(&uw));
        assert_eq!(uw.rank(), 3);
        assert_eq!(u.vconcat(&u).unwrap().rank(), 2);
        let bad = MatGF::zeros(f, 1, 3);
        assert!(matches!(u.vconcat(&bad), Err(MatError::ShapeMismatch(_))));
    }

    #[test]
    fn row_space_equality() {
        let f = gf(2);
        let a = MatGF::parse(f.clone(), 4, "1000;0100").unwrap();
        let perm = MatGF::parse(f.clone(), 4, "0100;1000").unwrap();
        let other = MatGF::parse(f.clone(), 4, "1000;0101").unwrap();
        let summed = MatGF::parse(f.clone(), 4, "1100;0100").unwrap();
        assert!(row_space_equal(&a, &perm).unwrap());
        assert!(!row_space_equal(&a, &other).unwrap());
        assert!(row_space_equal(&a, &summed).unwrap());
    }

    #[test]
    fn null_space_is_kernel() {
        let f = gf(3);
        let m = MatGF::parse(f.clone(), 4, "1201;0112;1010").unwrap();
        let ns = m.null_space();
        assert_eq!(ns.rows() + m.rank(), 4);
        assert!(m.mul(&ns.transpose()).unwrap().is_zero());
        let lns = m.left_null_space();
        assert!(lns.mul(&m).unwrap().is_zero());
    }

    #[test]
    fn parse_rejects_out_of_field() {
        let f = gf(3);
        assert!(matches!(MatGF::parse(f.clone(), 2, "13"), Err(MatError::BadEntry { value: 3, .. })));
        assert!(matches!(MatGF::parse(f, 2, "1"), Err(MatError::ShapeMismatch(_))));
        let g4 = make_field(2, 2).unwrap();
        assert_eq!(MatGF::parse(g4, 3, "123").unwrap().to_literal(), "123");
    }

    fn arb_mat(q: u32, max_r: usize, max_c: usize) -> impl Strategy<Value = MatGF> {
        (0..=max_r, 1..=max_c).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(0..q, r * c)
                .prop_map(move |d| MatGF::from_flat(gf(q), r, c, d))
        })
    }

    proptest! {
        #[test]
        fn rank_matches_span_size(m in prop_oneof![arb_mat(2, 5, 6), arb_mat(3, 4, 4), arb_mat(4, 3, 3)]) {
            let q = m.field().order() as usize;
            let r = m.rref();
            prop_assert!(is_rref(&r));
            prop_assert_eq!(r.rank, log(q, span_size(&m)));
        }

        #[test]
        fn rank_of_transpose(m in prop_oneof![arb_mat(2, 7, 7), arb_mat(5, 5, 5), arb_mat(9, 4, 4)]) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn concat_rank_subadditive(a in arb_mat(3, 4, 5), seed in 0u64..1000) {
            let b = MatGF::from_flat(gf(3), 3, a.cols(), (0..3 * a.cols()).map(|i| ((seed >> (i % 32)) % 3) as u32).collect());
            prop_assert!(a.vconcat(&b).unwrap().rank() <= a.rank() + b.rank());
        }

        #[test]
        fn rref_is_idempotent_and_unique(m in prop_oneof![arb_mat(2, 6, 7), arb_mat(3, 4, 5)], mix in 0u32..1000) {
            let r = m.rref();
            prop_assert_eq!(&r.mat.rref().mat, &r.mat);
            // row-equivalent matrix: add a multiple of row 0 to row 1 and swap
            if m.rows() >= 2 {
                let f = m.field().clone();
                let mut m2 = m.clone();
                let c = 1 + mix % (f.order() - 1);
                for j in 0..m.cols() {
                    let v = f.add(m.get(1, j), f.mul(c, m.get(0, j)));
                    m2.set(1, j, v);
                }
                let m2 = m2.select_rows(&(0..m.rows()).rev().collect::<Vec<_>>());
                prop_assert_eq!(m2.rref().mat, r.mat);
            }
        }

        #[test]
        fn packed_agrees_with_generic(m in arb_mat(2, 9, 140)) {
            prop_assert_eq!(m.rref(), rref_generic(&m));
        }
    }
}
