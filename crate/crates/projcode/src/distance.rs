//! Subspace distance d_s(U,W) = dim U + dim W − 2 dim(U ∩ W).

use alloc::vec::Vec;

use crate::matgf::MatGF;
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DistanceError {
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
    #[error("a code needs at least two codewords to have a minimum distance")]
    TooFewCodewords,
}

/// dim(U ∩ W) = k₁ + k₂ − rank(U*W).
pub fn dim_intersection(u: &Subspace, w: &Subspace) -> Result<usize, DistanceError> {
    u.check_ambient(w).map_err(|_| DistanceError::AmbientMismatch)?;
    let r = u.gen().vconcat(w.gen()).expect("same ambient").rank();
    Ok(u.dim() + w.dim() - r)
}

/// 2·rank(U*W) − k₁ − k₂.
pub fn distance_naive(u: &Subspace, w: &Subspace) -> Result<usize, DistanceError> {
    u.check_ambient(w).map_err(|_| DistanceError::AmbientMismatch)?;
    let r = u.gen().vconcat(w.gen()).expect("same ambient").rank();
    Ok(2 * r - u.dim() - w.dim())
}

/// Hamming distance of the identifying vectors, a lower bound on d_s.
pub fn id_hamming(u: &Subspace, w: &Subspace) -> usize {
    let (mut i, mut j, mut common) = (0, 0, 0);
    let (pu, pw) = (u.pivots(), w.pivots());
    while i < pu.len() && j < pw.len() {
        match pu[i].cmp(&pw[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    pu.len() + pw.len() - 2 * common
}

/// Order in which the exclusive pivot columns I ∪ J are cleared from the shared-pivot rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EliminationOrder {
    /// Smallest column first. One pass suffices: clearing column c only touches columns right of c.
    Increasing,
    /// Largest column first, single pass.
    Decreasing,
}

/// d_s via identifying vectors: d_H(U_id, W_id) + 2·rank(Ũ − W̃).
pub fn distance_fast(u: &Subspace, w: &Subspace) -> Result<usize, DistanceError> {
    u.check_ambient(w).map_err(|_| DistanceError::AmbientMismatch)?;
    if let (Some(a), Some(b)) = (u.packed_rows(), w.packed_rows()) {
        return Ok(fast_gf2(a, u.pivots(), b, w.pivots()));
    }
    Ok(fast_generic(u, w, EliminationOrder::Increasing))
}

/// The generic-field algorithm with an explicit elimination order.
pub fn distance_fast_with(u: &Subspace, w: &Subspace, order: EliminationOrder) -> Result<usize, DistanceError> {
    u.check_ambient(w).map_err(|_| DistanceError::AmbientMismatch)?;
    Ok(fast_generic(u, w, order))
}

fn fast_generic(u: &Subspace, w: &Subspace, order: EliminationOrder) -> usize {
    let (mut u, mut w) = (u, w);
    let excl_i = |a: &Subspace, b: &Subspace| -> Vec<usize> {
        a.pivots().iter().copied().filter(|p| !b.pivots().contains(p)).collect()
    };
    let (mut i_set, mut j_set) = (excl_i(u, w), excl_i(w, u));
    if let (Some(i1), Some(j1)) = (i_set.first(), j_set.first()) {
        if i1 > j1 {
            core::mem::swap(&mut u, &mut w);
            core::mem::swap(&mut i_set, &mut j_set);
        }
    }
    let s = i_set.len() + j_set.len();
    let common: Vec<usize> = u.pivots().iter().copied().filter(|p| w.pivots().contains(p)).collect();
    if common.is_empty() {
        return s;
    }
    let f = u.field().clone();
    let n = u.n();
    let row_of = |sub: &Subspace, col: usize| sub.pivots().iter().position(|&p| p == col).expect("pivot");
    let mut cols: Vec<usize> = i_set.iter().chain(&j_set).copied().collect();
    cols.sort_unstable();
    if order == EliminationOrder::Decreasing {
        cols.reverse();
    }
    let reduce = |mut x: Vec<u32>| -> Vec<u32> {
        for &c in &cols {
            let coef = x[c];
            if coef == 0 {
                continue;
            }
            let reducer = if i_set.contains(&c) { u.gen().row(row_of(u, c)) } else { w.gen().row(row_of(w, c)) };
            for (xv, &rv) in x.iter_mut().zip(reducer) {
                *xv = f.sub(*xv, f.mul(coef, rv));
            }
        }
        x
    };
    let mut diff = Vec::with_capacity(common.len() * n);
    for &l in &common {
        let ut = reduce(u.gen().row(row_of(u, l)).to_vec());
        let wt = reduce(w.gen().row(row_of(w, l)).to_vec());
        diff.extend(ut.iter().zip(&wt).map(|(&a, &b)| f.sub(a, b)));
    }
    s + 2 * MatGF::from_flat(f, common.len(), n, diff).rank()
}

/// GF(2), n <= 64. Reduction is linear, so the difference of the shared-pivot rows is reduced directly.
fn fast_gf2(u: &[u64], pu: &[usize], w: &[u64], pw: &[usize]) -> usize {
    let mask = |p: &[usize]| p.iter().fold(0u64, |m, &c| m | 1 << c);
    let (mu, mw) = (mask(pu), mask(pw));
    let excl = mu ^ mw;
    let s = excl.count_ones() as usize;
    let mut shared = mu & mw;
    if shared == 0 {
        return s;
    }
    let row_index = |m: u64, c: u32| (m & ((1u64 << c) - 1)).count_ones() as usize;
    let mut diffs = [0u64; 64];
    let mut nd = 0;
    while shared != 0 {
        let l = shared.trailing_zeros();
        shared &= shared - 1;
        let mut z = u[row_index(mu, l)] ^ w[row_index(mw, l)];
        let mut hit = z & excl;
        while hit != 0 {
            let c = hit.trailing_zeros();
            z ^= if mu >> c & 1 == 1 { u[row_index(mu, c)] } else { w[row_index(mw, c)] };
            hit = z & excl;
        }
        if z != 0 {
            diffs[nd] = z;
            nd += 1;
        }
    }
    s + 2 * crate::matgf::bits::rank64(&mut diffs[..nd])
}

/// Minimum pairwise distance of a code.
pub fn min_distance(code: &[Subspace]) -> Result<usize, DistanceError> {
    if code.len() < 2 {
        return Err(DistanceError::TooFewCodewords);
    }
    min_distance_rows(code, 0..code.len())
}

/// Minimum of d_s(code[i], code[j]) over i in `rows`, j > i. Lets callers split the pair scan.
pub fn min_distance_rows(code: &[Subspace], rows: core::ops::Range<usize>) -> Result<usize, DistanceError> {
    let mut best = usize::MAX;
    for i in rows {
        for j in i + 1..code.len() {
            best = best.min(distance_fast(&code[i], &code[j])?);
        }
    }
    Ok(best)
}
