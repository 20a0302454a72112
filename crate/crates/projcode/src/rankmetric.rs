//! Rank-metric codes: Gabidulin codes, the Ferrers-diagram size bound and
//! linear d=2 codes supported on a Ferrers diagram.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::ff::{ExtensionView, FieldError, FieldSpec};
use crate::matgf::MatGF;
use crate::subspace::{echelon_ferrers_shape, IdentifyingVector, Pattern};

/// Largest code materialized by enumeration helpers.
pub const ENUM_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RankError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(&'static str),
    #[error("invalid parameters: {0}")]
    BadParams(&'static str),
    #[error("elements are linearly dependent over the base field")]
    DependentElements,
    #[error("code of {0} codewords is too large to enumerate")]
    TooLarge(BigUint),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A vector over GF(q^m) together with its m×n expansion over GF(q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCodeword {
    pub coords: Vec<u32>,
    pub matrix: MatGF,
}

impl RankCodeword {
    pub fn new(view: &ExtensionView, coords: Vec<u32>) -> Self {
        let m = view.degree();
        let n = coords.len();
        let mut matrix = MatGF::zeros(view.base().clone(), m, n);
        for (j, &c) in coords.iter().enumerate() {
            for (i, x) in view.expand_coords(c).into_iter().enumerate() {
                matrix.set(i, j, x);
            }
        }
        RankCodeword { coords, matrix }
    }

    pub fn rank_norm(&self) -> usize {
        self.matrix.rank()
    }
}

/// rank(X − Y) of the expanded matrices.
pub fn rank_distance(x: &RankCodeword, y: &RankCodeword) -> Result<usize, RankError> {
    if x.matrix.rows() != y.matrix.rows() || x.matrix.cols() != y.matrix.cols() {
        return Err(RankError::ShapeMismatch("codeword lengths differ"));
    }
    Ok(x.matrix.sub(&y.matrix).expect("same shape").rank())
}

/// Gabidulin code of length n and design distance d over GF(q^m), generator rows g_j^{[i]}.
#[derive(Debug, Clone)]
pub struct GabidulinCode {
    pub view: ExtensionView,
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub g: Vec<u32>,
    pub generator: Vec<Vec<u32>>,
}

pub fn gabidulin(view: &ExtensionView, n: usize, d: usize) -> Result<GabidulinCode, RankError> {
    let m = view.degree();
    if n > m {
        return Err(RankError::BadParams("length exceeds extension degree"));
    }
    if d == 0 || d > n {
        return Err(RankError::BadParams("need 1 <= d <= n"));
    }
    let k = n - d + 1;
    let g: Vec<u32> = view.basis()[..n].to_vec();
    let generator = (0..k).map(|i| g.iter().map(|&gj| view.frobenius_pow(gj, i)).collect()).collect();
    Ok(GabidulinCode { view: view.clone(), n, d, k, g, generator })
}

impl GabidulinCode {
    /// q^{m(n−d+1)}.
    pub fn size(&self) -> BigUint {
        BigUint::from(self.view.base().order()).pow((self.view.degree() * self.k) as u32)
    }

    pub fn encode(&self, message: &[u32]) -> Result<RankCodeword, RankError> {
        if message.len() != self.k {
            return Err(RankError::ShapeMismatch("message length differs from k"));
        }
        let e = self.view.ext();
        let coords = (0..self.n)
            .map(|j| {
                message.iter().zip(&self.generator).fold(0, |acc, (&u, row)| e.add(acc, e.mul(u, row[j])))
            })
            .collect();
        Ok(RankCodeword::new(&self.view, coords))
    }

    pub fn enumerate(&self) -> Result<Vec<RankCodeword>, RankError> {
        let size = self.size();
        if size > BigUint::from(ENUM_CAP) {
            return Err(RankError::TooLarge(size));
        }
        let qm = self.view.ext().order();
        let mut msg = vec![0u32; self.k];
        let mut out = Vec::new();
        loop {
            out.push(self.encode(&msg)?);
            let mut i = 0;
            loop {
                if i == self.k {
                    return Ok(out);
                }
                msg[i] += 1;
                if msg[i] < qm {
                    break;
                }
                msg[i] = 0;
                i += 1;
            }
        }
    }

    /// GF(q)-basis of the code as m×n matrices: messages β·e_i for β in the polynomial basis.
    pub fn matrix_basis(&self) -> Vec<MatGF> {
        let mut out = Vec::new();
        for i in 0..self.k {
            for &b in self.view.basis() {
                let mut msg = vec![0; self.k];
                msg[i] = b;
                out.push(self.encode(&msg).expect("length k").matrix);
            }
        }
        out
    }
}

/// A linear rank-metric code over GF(q) whose codewords respect a zero pattern.
#[derive(Debug, Clone)]
pub struct FerrersRankCode {
    pub field: Arc<FieldSpec>,
    pub pattern: Pattern,
    /// Design (or verified) minimum rank distance.
    pub d: usize,
    pub basis: Vec<MatGF>,
}

impl FerrersRankCode {
    pub fn zero(field: Arc<FieldSpec>, pattern: Pattern, d: usize) -> Self {
        FerrersRankCode { field, pattern, d, basis: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn size(&self) -> BigUint {
        BigUint::from(self.field.order()).pow(self.basis.len() as u32)
    }

    pub fn rows(&self) -> usize {
        self.pattern.rows()
    }

    pub fn cols(&self) -> usize {
        self.pattern.cols()
    }

    /// Every codeword, coefficient vectors in increasing integer order.
    pub fn codewords(&self) -> Result<Vec<MatGF>, RankError> {
        let size = self.size();
        if size > BigUint::from(ENUM_CAP) {
            return Err(RankError::TooLarge(size));
        }
        let f = &self.field;
        let (r, c) = (self.rows(), self.cols());
        let q = f.order();
        let k = self.basis.len();
        let mut coef = vec![0u32; k];
        let mut out = Vec::new();
        loop {
            let mut data = vec![0u32; r * c];
            for (a, b) in coef.iter().zip(&self.basis) {
                if *a == 0 {
                    continue;
                }
                for (x, &y) in data.iter_mut().zip(b.data()) {
                    *x = f.add(*x, f.mul(*a, y));
                }
            }
            out.push(MatGF::from_flat(f.clone(), r, c, data));
            let mut i = k;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                coef[i] += 1;
                if coef[i] < q {
                    break;
                }
                coef[i] = 0;
            }
        }
    }

    /// Exhaustive minimum rank over nonzero codewords; `None` for the zero code.
    pub fn min_rank(&self) -> Result<Option<usize>, RankError> {
        Ok(self.codewords()?.iter().filter(|m| !m.is_zero()).map(MatGF::rank).min())
    }

    pub fn all_fit(&self) -> bool {
        self.basis.iter().all(|b| self.pattern.fits(b))
    }
}

/// Exponent of the size bound for a top-heavy pattern with minimum rank distance d:
/// the smaller of (dots outside the first d−1 rows) and (dots outside the last d−1 columns).
pub fn ferrers_bound(pattern: &Pattern, d: usize) -> usize {
    let skip = d.saturating_sub(1);
    let by_rows: usize = pattern.cells.iter().skip(skip).map(|r| r.iter().filter(|&&b| b).count()).sum();
    let cols = pattern.cols();
    let keep = cols.saturating_sub(skip);
    let by_cols: usize = pattern.cells.iter().map(|r| r[..keep].iter().filter(|&&b| b).count()).sum();
    by_rows.min(by_cols)
}

/// The pattern with all-empty rows and columns removed, plus the kept indices.
pub fn effective_pattern(p: &Pattern) -> (Pattern, Vec<usize>, Vec<usize>) {
    let rows: Vec<usize> = (0..p.rows()).filter(|&r| p.cells[r].iter().any(|&b| b)).collect();
    let cols: Vec<usize> = (0..p.cols()).filter(|&c| p.cells.iter().any(|r| r[c])).collect();
    let cells = rows.iter().map(|&r| cols.iter().map(|&c| p.cells[r][c]).collect()).collect();
    (Pattern { cells }, rows, cols)
}

/// Row and column coefficients of the map X ↦ Σ X_ij h_i β_j into GF(q^N).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubcodeBases {
    pub h: Vec<u32>,
    pub beta: Vec<u32>,
}

impl SubcodeBases {
    /// h_i = α^{i}, β_j = α^{j}.
    pub fn powers(view: &ExtensionView, rows: usize, cols: usize) -> Self {
        SubcodeBases { h: view.basis()[..rows].to_vec(), beta: view.basis()[..cols].to_vec() }
    }
}

/// Whether the given extension elements are independent over the base field.
pub fn independent(view: &ExtensionView, elems: &[u32]) -> bool {
    let rows: Vec<Vec<u32>> = elems.iter().map(|&e| view.expand_coords(e)).collect();
    MatGF::from_rows(view.base().clone(), view.degree(), &rows).expect("coordinate length").rank() == elems.len()
}

/// Extension of degree max(rows, cols) of the effective pattern, as used by the d=2 construction.
pub fn d2_extension(field: &Arc<FieldSpec>, pattern: &Pattern) -> Result<ExtensionView, RankError> {
    let (eff, _, _) = effective_pattern(pattern);
    let big_n = eff.rows().max(eff.cols()).max(1);
    Ok(ExtensionView::new(field.clone(), big_n as u32)?)
}

/// Linear code with minimum rank distance 2 on the pattern: the kernel of
/// X ↦ Σ X_ij h_i β_j ∈ GF(q^N), N = max(rows, cols) of the effective pattern.
pub fn ferrers_d2_code(field: &Arc<FieldSpec>, pattern: &Pattern) -> Result<FerrersRankCode, RankError> {
    let view = d2_extension(field, pattern)?;
    let (eff, _, _) = effective_pattern(pattern);
    let bases = SubcodeBases::powers(&view, eff.rows(), eff.cols());
    ferrers_d2_code_with(&view, pattern, &bases)
}

/// As [`ferrers_d2_code`] with caller-chosen independent h (one per effective row) and β (one per effective column).
pub fn ferrers_d2_code_with(view: &ExtensionView, pattern: &Pattern, bases: &SubcodeBases) -> Result<FerrersRankCode, RankError> {
    let field = view.base().clone();
    let (eff, rows, cols) = effective_pattern(pattern);
    if eff.rows() == 0 {
        return Ok(FerrersRankCode::zero(field, pattern.clone(), 2));
    }
    if bases.h.len() != eff.rows() || bases.beta.len() != eff.cols() {
        return Err(RankError::ShapeMismatch("one h per row and one β per column"));
    }
    if eff.rows().max(eff.cols()) > view.degree() {
        return Err(RankError::BadParams("extension degree below max(rows, cols)"));
    }
    if !independent(view, &bases.h) || !independent(view, &bases.beta) {
        return Err(RankError::DependentElements);
    }
    let e = view.ext();
    let dots = eff.positions();
    let images: Vec<Vec<u32>> = dots.iter().map(|&(r, c)| view.expand_coords(e.mul(bases.h[r], bases.beta[c]))).collect();
    let a = MatGF::from_rows(field.clone(), view.degree(), &images).expect("coordinate length");
    let kernel = a.left_null_space();
    let basis = (0..kernel.rows())
        .map(|i| {
            let mut m = MatGF::zeros(field.clone(), pattern.rows(), pattern.cols());
            for (t, &(r, c)) in dots.iter().enumerate() {
                m.set(rows[r], cols[c], kernel.get(i, t));
            }
            m
        })
        .collect();
    Ok(FerrersRankCode { field, pattern: pattern.clone(), d: 2, basis })
}

/// Maximum rank distance code on a full rows×cols rectangle; the zero code when d exceeds min(rows, cols).
pub fn mrd_rectangle(field: &Arc<FieldSpec>, rows: usize, cols: usize, d: usize) -> Result<FerrersRankCode, RankError> {
    let pattern = Pattern::full(rows, cols);
    let short = rows.min(cols);
    if d == 0 {
        return Err(RankError::BadParams("d must be positive"));
    }
    if d > short {
        return Ok(FerrersRankCode::zero(field.clone(), pattern, d));
    }
    let long = rows.max(cols);
    let view = ExtensionView::new(field.clone(), long as u32)?;
    let code = gabidulin(&view, short, d)?;
    let basis = code.matrix_basis().into_iter().map(|m| if rows >= cols { m } else { m.transpose() }).collect();
    Ok(FerrersRankCode { field: field.clone(), pattern, d, basis })
}

/// Linear span of explicit matrices; `d` is the exhaustive minimum rank when the span is small enough.
pub fn span_code(field: &Arc<FieldSpec>, basis: Vec<MatGF>) -> Result<FerrersRankCode, RankError> {
    let (r, c) = basis.first().map_or((0, 0), |m| (m.rows(), m.cols()));
    if basis.iter().any(|m| m.rows() != r || m.cols() != c) {
        return Err(RankError::ShapeMismatch("basis matrices differ in size"));
    }
    let mut cells = vec![vec![false; c]; r];
    for m in &basis {
        for (i, row) in cells.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell |= m.get(i, j) != 0;
            }
        }
    }
    // keep an independent subset
    let flat: Vec<Vec<u32>> = basis.iter().map(|m| m.data().to_vec()).collect();
    let red = MatGF::from_rows(field.clone(), r * c, &flat).expect("sizes checked").rref();
    let basis: Vec<MatGF> = (0..red.rank)
        .map(|i| MatGF::from_flat(field.clone(), r, c, red.mat.row(i).to_vec()))
        .collect();
    let mut code = FerrersRankCode { field: field.clone(), pattern: Pattern { cells }, d: 0, basis };
    if code.size() <= BigUint::from(ENUM_CAP) {
        code.d = code.min_rank()?.unwrap_or(0);
    }
    Ok(code)
}

/// Closed-form exponent kn − k(k−1)/2 − Σ i_j − b, b = max{n−k−i₁+1, k − #(ones before the last zero)}.
/// Differs from the construction for some vectors (00110 gives 1, the optimum is 0); report only.
pub fn closed_form_d2_exponent(v: &IdentifyingVector) -> i64 {
    let (n, k) = (v.len() as i64, v.weight() as i64);
    let piv: Vec<i64> = v.pivots().iter().map(|&p| p as i64 + 1).collect();
    let Some(&i1) = piv.first() else { return 0 };
    let last_zero = v.bits.iter().rposition(|&b| !b).map_or(0, |p| p as i64 + 1);
    let ones_before = piv.iter().filter(|&&p| p < last_zero).count() as i64;
    let b = (n - k - i1 + 1).max(k - ones_before);
    k * n - k * (k - 1) / 2 - piv.iter().sum::<i64>() - b
}

/// Size exponent of the optimal d=2 code in EF(v): dots − max(nonempty rows, nonempty columns).
pub fn d2_optimal_exponent(v: &IdentifyingVector) -> usize {
    let pattern = echelon_ferrers_shape(v).pattern();
    ferrers_bound(&pattern, 2)
}

/// Explicit minimum-distance-2 bases, as m×n GF(2) matrices.
pub mod fixtures {
    use super::*;
    use alloc::string::String;

    fn parse_all(field: &Arc<FieldSpec>, cols: usize, lits: &[&str]) -> Vec<MatGF> {
        lits.iter().map(|l| MatGF::parse(field.clone(), cols, l).expect("fixture literal")).collect()
    }

    /// 3×3, zero in the bottom-left corner; 5 matrices.
    pub fn basis_3x3(field: &Arc<FieldSpec>) -> Vec<MatGF> {
        parse_all(field, 3, &["011;001;000", "100;010;000", "100;000;001", "001;100;000", "001;000;010"])
    }

    /// 3×4, zero in the bottom-left corner; 7 matrices.
    pub fn basis_3x4(field: &Arc<FieldSpec>) -> Vec<MatGF> {
        parse_all(
            field,
            4,
            &["0011;0001;0000", "0100;0010;0000", "0100;0000;0001", "1000;0100;0000", "1000;0000;0010", "0001;1000;0000", "0001;0010;0100"],
        )
    }

    /// 3×n for n >= 4, zero in the bottom-left corner; 2n−1 matrices.
    pub fn basis_3xn(field: &Arc<FieldSpec>, n: usize) -> Vec<MatGF> {
        assert!(n >= 4, "the general 3×n family needs n >= 4");
        let build = |entries: &[(usize, usize)]| {
            let mut rows = vec![vec!['0'; n]; 3];
            for &(r, c) in entries {
                rows[r][c - 1] = '1';
            }
            let lit: Vec<String> = rows.into_iter().map(|r| r.into_iter().collect()).collect();
            MatGF::parse(field.clone(), n, &lit.join(";")).expect("fixture literal")
        };
        let mut out = vec![build(&[(0, n - 1), (0, n), (1, n)])];
        for c in (1..=n - 2).rev() {
            out.push(build(&[(0, c), (1, c + 1)]));
            out.push(build(&[(0, c), (2, c + 2)]));
        }
        out.push(build(&[(0, n), (1, 1)]));
        out.push(build(&[(0, n), (1, 3), (2, 2)]));
        out
    }

    /// 4×4, zero in the bottom-left corner; 11 matrices, kept verbatim (they span a rank-1 matrix).
    pub fn basis_4x4(field: &Arc<FieldSpec>) -> Vec<MatGF> {
        parse_all(
            field,
            4,
            &[
                "0011;0001;0000;0000",
                "0100;0010;0000;0000",
                "0100;0000;0001;0000",
                "1000;0100;0000;0000",
                "1000;0000;0010;0000",
                "1000;0000;0000;0001",
                "0001;1000;0000;0000",
                "0001;0000;0000;0010",
                "0001;0010;0100;0000",
                "0010;0100;1000;0000",
                "0000;0001;0010;0100",
            ],
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::{field_of_order, make_field};
    use crate::subspace::weight_k_vectors_desc;

    fn gf2() -> Arc<FieldSpec> {
        field_of_order(2).unwrap()
    }

    fn pat(v: &str) -> Pattern {
        echelon_ferrers_shape(&IdentifyingVector::parse(v).unwrap()).pattern()
    }

    #[test]
    fn rank_distance_examples() {
        let view = ExtensionView::new(gf2(), 3).unwrap();
        let x = RankCodeword::new(&view, vec![3, 5, 6]);
        assert_eq!(rank_distance(&x, &x).unwrap(), 0);
        let a = RankCodeword::new(&view, vec![5, 5, 5]);
        let z = RankCodeword::new(&view, vec![0, 0, 0]);
        assert_eq!(rank_distance(&a, &z).unwrap(), 1);
        // oracle: rank of the 3×3 expansion of the difference
        let e = view.ext();
        for (p, q) in [([1u32, 2, 4], [3u32, 3, 3]), ([7, 1, 0], [6, 6, 1])] {
            let (xp, xq) = (RankCodeword::new(&view, p.to_vec()), RankCodeword::new(&view, q.to_vec()));
            let diff: Vec<u32> = p.iter().zip(&q).map(|(&s, &t)| e.sub(s, t)).collect();
            assert_eq!(rank_distance(&xp, &xq).unwrap(), RankCodeword::new(&view, diff).matrix.rank());
        }
        let short = RankCodeword::new(&view, vec![1]);
        assert!(rank_distance(&x, &short).is_err());
    }

    #[test]
    fn gabidulin_small_exhaustive() {
        let view = ExtensionView::new(gf2(), 3).unwrap();
        let code = gabidulin(&view, 3, 2).unwrap();
        let words = code.enumerate().unwrap();
        assert_eq!(words.len(), 64);
        assert_eq!(code.size(), BigUint::from(64u32));
        let mut min = usize::MAX;
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                min = min.min(rank_distance(&words[i], &words[j]).unwrap());
            }
        }
        assert_eq!(min, 2);
        let full = gabidulin(&view, 3, 3).unwrap();
        let w = full.enumerate().unwrap();
        assert_eq!(w.len(), 8);
        assert!(w.iter().filter(|c| c.coords.iter().any(|&x| x != 0)).all(|c| c.rank_norm() == 3));
        assert!(matches!(gabidulin(&view, 4, 2), Err(RankError::BadParams(_))));
    }

    #[test]
    fn gabidulin_size_and_singleton_chain() {
        let view = ExtensionView::new(gf2(), 4).unwrap();
        let code = gabidulin(&view, 4, 2).unwrap();
        assert_eq!(code.size(), BigUint::from(1u32 << 12));
        assert_eq!(code.enumerate().unwrap().len(), 1 << 12);
        for (m, n, d) in [(3usize, 3usize, 2usize), (4, 3, 2), (4, 4, 3), (3, 2, 2)] {
            let view = ExtensionView::new(gf2(), m as u32).unwrap();
            let code = gabidulin(&view, n, d).unwrap();
            let words = code.enumerate().unwrap();
            let nz = words.iter().filter(|c| c.coords.iter().any(|&x| x != 0));
            let min_rank = nz.clone().map(RankCodeword::rank_norm).min().unwrap();
            let min_ham = nz.map(|c| c.coords.iter().filter(|&&x| x != 0).count()).min().unwrap();
            // |C| = q^{m k} so n − log_{q^m}|C| + 1 = n − k + 1
            assert!(min_rank <= min_ham && min_ham <= n - code.k + 1);
            assert_eq!(min_rank, d);
        }
    }

    #[test]
    fn gabidulin_over_gf4() {
        let base = make_field(2, 2).unwrap();
        let view = ExtensionView::new(base, 2).unwrap();
        let code = gabidulin(&view, 2, 2).unwrap();
        let words = code.enumerate().unwrap();
        assert_eq!(words.len(), 16);
        assert!(words.iter().filter(|c| c.coords.iter().any(|&x| x != 0)).all(|c| c.rank_norm() == 2));
    }

    #[test]
    fn ferrers_bound_examples() {
        assert_eq!(ferrers_bound(&pat("100110"), 2), 2);
        assert_eq!(ferrers_bound(&pat("001011"), 2), 0);
        for (k, w, d) in [(2usize, 3usize, 2usize), (3, 3, 2), (3, 4, 3), (2, 5, 2)] {
            assert_eq!(ferrers_bound(&Pattern::full(k, w), d), w * (k - d + 1));
        }
    }

    #[test]
    fn d2_code_sizes() {
        let f = gf2();
        let size = |v: &str| ferrers_d2_code(&f, &pat(v)).unwrap().size();
        assert_eq!(size("11000"), BigUint::from(8u32));
        assert_eq!(size("00110"), BigUint::from(1u32));
        assert_eq!(size("010101"), BigUint::from(2u32));
        assert_eq!(size("111000"), BigUint::from(64u32));
        assert_eq!(size("100110"), BigUint::from(4u32));
        assert_eq!(size("001011"), BigUint::from(1u32));
    }

    #[test]
    fn d2_codes_meet_bound_and_fit() {
        let f = gf2();
        for (n, k) in [(5usize, 2usize), (6, 3), (7, 3), (7, 4), (8, 4)] {
            for v in weight_k_vectors_desc(n, k) {
                let p = echelon_ferrers_shape(&v).pattern();
                let code = ferrers_d2_code(&f, &p).unwrap();
                assert_eq!(code.dim(), ferrers_bound(&p, 2), "{v}");
                assert_eq!(code.dim(), d2_optimal_exponent(&v));
                assert!(code.all_fit());
                if code.dim() <= 12 {
                    let m = code.min_rank().unwrap();
                    assert!(m.is_none() || m >= Some(2), "{v}");
                }
            }
        }
    }

    #[test]
    fn d2_code_over_gf3() {
        let f = field_of_order(3).unwrap();
        for v in weight_k_vectors_desc(5, 2) {
            let p = echelon_ferrers_shape(&v).pattern();
            let code = ferrers_d2_code(&f, &p).unwrap();
            assert_eq!(code.dim(), ferrers_bound(&p, 2));
            assert!(code.min_rank().unwrap().is_none_or(|m| m >= 2));
        }
    }

    #[test]
    fn closed_form_disagrees_on_00110() {
        let v = IdentifyingVector::parse("00110").unwrap();
        assert_eq!(closed_form_d2_exponent(&v), 1);
        assert_eq!(d2_optimal_exponent(&v), 0);
        let top = IdentifyingVector::parse("11000").unwrap();
        assert_eq!(closed_form_d2_exponent(&top), 3);
    }

    #[test]
    fn mrd_rectangles() {
        let f = gf2();
        let c = mrd_rectangle(&f, 2, 3, 2).unwrap();
        assert_eq!(c.dim(), 3);
        assert_eq!(c.min_rank().unwrap(), Some(2));
        let t = mrd_rectangle(&f, 3, 2, 2).unwrap();
        assert_eq!((t.rows(), t.cols(), t.dim()), (3, 2, 3));
        assert_eq!(t.min_rank().unwrap(), Some(2));
        let z = mrd_rectangle(&f, 2, 1, 2).unwrap();
        assert_eq!(z.dim(), 0);
        let sq = mrd_rectangle(&f, 3, 3, 3).unwrap();
        assert_eq!(sq.dim(), 3);
        assert_eq!(sq.min_rank().unwrap(), Some(3));
    }

    #[test]
    fn span_code_examples() {
        let f = gf2();
        let c = span_code(&f, fixtures::basis_3x3(&f)).unwrap();
        assert_eq!(c.size(), BigUint::from(32u32));
        assert_eq!(c.d, 2);
        let e = span_code(&f, Vec::new()).unwrap();
        assert_eq!(e.size(), BigUint::from(1u32));
        let c = span_code(&f, fixtures::basis_3x4(&f)).unwrap();
        assert_eq!((c.dim(), c.d), (7, 2));
        for n in 4..=7 {
            let c = span_code(&f, fixtures::basis_3xn(&f, n)).unwrap();
            assert_eq!((c.dim(), c.d), (2 * n - 1, 2));
        }
    }
}
