//! Code constructions: lifting, multilevel (constant-weight code + Ferrers rank
//! codes), the block-shifted spread-like code, and puncturing into P_q(n−1).

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::distance::{min_distance, DistanceError};
use crate::ff::{ExtensionView, FieldSpec};
use crate::matgf::MatGF;
use crate::rankmetric::{
    d2_extension, effective_pattern, ferrers_bound, ferrers_d2_code, ferrers_d2_code_with, independent,
    mrd_rectangle, FerrersRankCode, RankError, SubcodeBases,
};
use crate::subspace::{echelon_ferrers_shape, fill_matrix, IdentifyingVector, Pattern, Subspace, SubspaceError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error("constant-weight code must contain 1^k 0^(n-k)")]
    MissingTopWord,
    #[error("no default rank code with distance {delta} for word {word}")]
    DeltaUnsupported { word: alloc::string::String, delta: usize },
    #[error("words must all have length {n} and weight {k}")]
    NotConstantWeight { n: usize, k: usize },
    #[error("words {a} and {b} are at Hamming distance {d}, below {dmin}")]
    DistanceTooSmall { a: alloc::string::String, b: alloc::string::String, d: usize, dmin: usize },
    #[error("the special vector lies in Q (its last coordinate is zero)")]
    SpecialVectorInQ,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(&'static str),
    #[error("duplicate codeword {0}")]
    Duplicate(alloc::string::String),
    #[error("invalid parameters: {0}")]
    BadParams(&'static str),
    #[error("no bases within {tries} tries give puncture profile {target:?} for word {word}")]
    ProfileNotFound { word: alloc::string::String, target: (u64, u64), tries: usize },
    #[error("unknown fixture {0}")]
    UnknownFixture(alloc::string::String),
    #[error(transparent)]
    Rank(#[from] RankError),
    #[error(transparent)]
    Subspace(#[from] SubspaceError),
    #[error(transparent)]
    Distance(#[from] DistanceError),
}

/// Binary constant-weight code with a minimum Hamming distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantWeightCode {
    pub n: usize,
    pub k: usize,
    pub dmin: usize,
    pub words: Vec<IdentifyingVector>,
}

impl ConstantWeightCode {
    pub fn new(words: Vec<IdentifyingVector>, dmin: usize) -> Result<Self, ConstructError> {
        let (n, k) = words.first().map_or((0, 0), |w| (w.len(), w.weight()));
        if words.iter().any(|w| w.len() != n || w.weight() != k) {
            return Err(ConstructError::NotConstantWeight { n, k });
        }
        for (i, a) in words.iter().enumerate() {
            for b in &words[i + 1..] {
                let d = a.hamming(b);
                if d < dmin {
                    return Err(ConstructError::DistanceTooSmall { a: a.to_string(), b: b.to_string(), d, dmin });
                }
            }
        }
        Ok(ConstantWeightCode { n, k, dmin, words })
    }

    pub fn parse(words: &[&str], dmin: usize) -> Result<Self, ConstructError> {
        let parsed = words
            .iter()
            .map(|w| IdentifyingVector::parse(w).ok_or(ConstructError::BadParams("words are binary strings")))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parsed, dmin)
    }

    /// Greedy lexicode: scan weight-k words in descending lexicographic order, keep each one far enough from those kept.
    pub fn lexicode(n: usize, k: usize, dmin: usize) -> Self {
        let mut words: Vec<IdentifyingVector> = Vec::new();
        for w in crate::subspace::weight_k_vectors_desc(n, k) {
            if words.iter().all(|x| x.hamming(&w) >= dmin) {
                words.push(w);
            }
        }
        ConstantWeightCode { n, k, dmin, words }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeKind {
    ConstantDimension,
    Projective,
}

/// A set of subspaces of a common ambient space, kept in construction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceCode {
    pub field: Arc<FieldSpec>,
    pub n: usize,
    pub kind: CodeKind,
    pub words: Vec<Subspace>,
}

impl SubspaceCode {
    pub fn new(field: Arc<FieldSpec>, n: usize, kind: CodeKind, words: Vec<Subspace>) -> Result<Self, ConstructError> {
        if words.iter().any(|w| w.n() != n || **w.field() != *field) {
            return Err(ConstructError::ShapeMismatch("codeword outside the ambient space"));
        }
        if kind == CodeKind::ConstantDimension {
            if let Some(first) = words.first() {
                if words.iter().any(|w| w.dim() != first.dim()) {
                    return Err(ConstructError::ShapeMismatch("constant-dimension code with mixed dimensions"));
                }
            }
        }
        let mut seen = BTreeSet::new();
        for w in &words {
            if !seen.insert(w) {
                return Err(ConstructError::Duplicate(w.to_literal()));
            }
        }
        Ok(SubspaceCode { field, n, kind, words })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    /// Dimensions present, ascending.
    pub fn dimensions(&self) -> Vec<usize> {
        let s: BTreeSet<usize> = self.words.iter().map(Subspace::dim).collect();
        s.into_iter().collect()
    }

    /// Largest codeword dimension.
    pub fn max_dim(&self) -> usize {
        self.words.iter().map(Subspace::dim).max().unwrap_or(0)
    }

    pub fn min_distance(&self) -> Result<usize, ConstructError> {
        Ok(min_distance(&self.words)?)
    }
}

/// Row spaces of [I | X] for k × (n−k) matrices X.
pub fn lift(field: &Arc<FieldSpec>, matrices: &[MatGF]) -> Result<SubspaceCode, ConstructError> {
    let (k, w) = matrices.first().map_or((0, 0), |m| (m.rows(), m.cols()));
    if matrices.iter().any(|m| m.rows() != k || m.cols() != w) {
        return Err(ConstructError::ShapeMismatch("all matrices must share a shape"));
    }
    let n = k + w;
    let words = matrices
        .iter()
        .map(|x| {
            let mut g = MatGF::zeros(field.clone(), k, n);
            for r in 0..k {
                g.set(r, r, 1);
                for c in 0..w {
                    g.set(r, k + c, x.get(r, c));
                }
            }
            Subspace::from_matrix(&g)
        })
        .collect();
    SubspaceCode::new(field.clone(), n, CodeKind::ConstantDimension, words)
}

/// Every matrix on the pattern: minimum rank distance 1.
fn all_matrices_code(field: &Arc<FieldSpec>, pattern: &Pattern) -> FerrersRankCode {
    let basis = pattern
        .positions()
        .into_iter()
        .map(|(r, c)| {
            let mut m = MatGF::zeros(field.clone(), pattern.rows(), pattern.cols());
            m.set(r, c, 1);
            m
        })
        .collect();
    FerrersRankCode { field: field.clone(), pattern: pattern.clone(), d: 1, basis }
}

/// MRD code of the k × λ rectangle formed by the rightmost λ columns (λ = dots in the last row), distance k.
fn last_row_rectangle_code(field: &Arc<FieldSpec>, pattern: &Pattern, k: usize) -> Result<FerrersRankCode, ConstructError> {
    let lam = pattern.cells.last().map_or(0, |r| r.iter().filter(|&&b| b).count());
    let rect = mrd_rectangle(field, pattern.rows(), lam, k)?;
    let off = pattern.cols() - lam;
    let basis = rect
        .basis
        .iter()
        .map(|b| {
            let mut m = MatGF::zeros(field.clone(), pattern.rows(), pattern.cols());
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    m.set(r, off + c, b.get(r, c));
                }
            }
            m
        })
        .collect();
    Ok(FerrersRankCode { field: field.clone(), pattern: pattern.clone(), d: k, basis })
}

/// Default Ferrers rank code for one word: MRD on the top word, the d=2 kernel code for δ=2,
/// the last-row rectangle for δ=k, all matrices for δ=1.
pub fn default_ferrers_code(field: &Arc<FieldSpec>, w: &IdentifyingVector, delta: usize) -> Result<FerrersRankCode, ConstructError> {
    let (n, k) = (w.len(), w.weight());
    let pattern = echelon_ferrers_shape(w).pattern();
    if *w == IdentifyingVector::top(n, k) {
        let mut c = mrd_rectangle(field, k, n - k, delta)?;
        c.pattern = pattern;
        return Ok(c);
    }
    match delta {
        1 => Ok(all_matrices_code(field, &pattern)),
        2 => Ok(ferrers_d2_code(field, &pattern)?),
        d if d == k => last_row_rectangle_code(field, &pattern, k),
        _ => Err(ConstructError::DeltaUnsupported { word: w.to_string(), delta }),
    }
}

/// ∪_w { fill(w, X) : X ∈ C_w }.
pub fn multilevel(field: &Arc<FieldSpec>, cw: &ConstantWeightCode, delta: usize, codes: &[FerrersRankCode]) -> Result<SubspaceCode, ConstructError> {
    if delta == 0 || cw.dmin < 2 * delta {
        return Err(ConstructError::BadParams("constant-weight code distance must be at least 2δ"));
    }
    if !cw.words.contains(&IdentifyingVector::top(cw.n, cw.k)) {
        return Err(ConstructError::MissingTopWord);
    }
    if codes.len() != cw.words.len() {
        return Err(ConstructError::ShapeMismatch("one rank code per constant-weight word"));
    }
    let mut words = Vec::new();
    for (w, code) in cw.words.iter().zip(codes) {
        for x in code.codewords()? {
            words.push(fill_matrix(w, &x)?);
        }
    }
    SubspaceCode::new(field.clone(), cw.n, CodeKind::ConstantDimension, words)
}

pub fn default_codes(field: &Arc<FieldSpec>, cw: &ConstantWeightCode, delta: usize) -> Result<Vec<FerrersRankCode>, ConstructError> {
    cw.words.iter().map(|w| default_ferrers_code(field, w, delta)).collect()
}

/// Multilevel construction with default per-word codes.
pub fn multilevel_default(field: &Arc<FieldSpec>, cw: &ConstantWeightCode, delta: usize) -> Result<SubspaceCode, ConstructError> {
    let codes = default_codes(field, cw, delta)?;
    multilevel(field, cw, delta, &codes)
}

/// Words 0^{(i−1)k} 1^k 0^{n−ik}, i = 1..⌊n/k⌋.
pub fn block_shifted_words(n: usize, k: usize) -> Vec<IdentifyingVector> {
    (0..n / k).map(|i| IdentifyingVector::new((0..n).map(|c| c >= i * k && c < (i + 1) * k).collect())).collect()
}

/// Multilevel code with distance 2k over the block-shifted words; size (q^n − q^{k+r} + q^k − 1)/(q^k − 1), r = n mod k.
pub fn spread_like(field: &Arc<FieldSpec>, n: usize, k: usize) -> Result<SubspaceCode, ConstructError> {
    if k == 0 || k > n {
        return Err(ConstructError::BadParams("need 1 <= k <= n"));
    }
    let words = block_shifted_words(n, k);
    let cw = ConstantWeightCode::new(words, 2 * k)?;
    let codes = cw
        .words
        .iter()
        .map(|w| {
            let pattern = echelon_ferrers_shape(w).pattern();
            last_row_rectangle_code(field, &pattern, k)
        })
        .collect::<Result<Vec<_>, _>>()?;
    multilevel(field, &cw, k, &codes)
}

/// (q^n − q^{k+r} + q^k − 1)/(q^k − 1).
pub fn spread_like_size(n: usize, k: usize, q: u32) -> BigUint {
    let qb = BigUint::from(q);
    let r = n % k;
    (qb.pow(n as u32) + qb.pow(k as u32) - qb.pow((k + r) as u32) - 1u32) / (qb.pow(k as u32) - 1u32)
}

/// 1 0…0 1.
pub fn default_special_vector(n: usize) -> Vec<u32> {
    (0..n).map(|i| (i == 0 || i == n - 1) as u32).collect()
}

/// 0^{k−1} 1 0…0 1.
pub fn alternate_special_vector(n: usize, k: usize) -> Vec<u32> {
    (0..n).map(|i| (i + 1 == k || i == n - 1) as u32).collect()
}

/// Projective code of length n−1: {c : c ⊆ Q} ∪ {c ∩ Q : v ∈ c}, Q the first n−1 coordinates.
pub fn puncture(code: &SubspaceCode, v: &[u32], append_extremes: bool) -> Result<SubspaceCode, ConstructError> {
    let n = code.n;
    if v.len() != n {
        return Err(ConstructError::ShapeMismatch("special vector length"));
    }
    if n == 0 || v[n - 1] == 0 {
        return Err(ConstructError::SpecialVectorInQ);
    }
    let q_space = Subspace::from_matrix(&MatGF::identity(code.field.clone(), n).truncate_rows(n - 1));
    let mut inside = Vec::new();
    let mut through = Vec::new();
    for c in &code.words {
        let last_col_zero = (0..c.dim()).all(|r| c.gen().get(r, n - 1) == 0);
        if last_col_zero {
            inside.push(c.restrict(n - 1));
        } else if c.contains(v) {
            through.push(c.meet(&q_space)?.restrict(n - 1));
        }
    }
    let mut words = inside;
    words.extend(through);
    if append_extremes {
        words.push(Subspace::zero(code.field.clone(), n - 1));
        words.push(Subspace::whole(code.field.clone(), n - 1));
    }
    SubspaceCode::new(code.field.clone(), n - 1, CodeKind::Projective, words)
}

/// (#{X : fill(w,X) ⊆ Q}, #{X : v ∈ fill(w,X)}) over a linear Ferrers code, by solving affine systems.
pub fn puncture_profile(w: &IdentifyingVector, code: &FerrersRankCode, v: &[u32]) -> (BigUint, BigUint) {
    let n = w.len();
    let shape = echelon_ferrers_shape(w);
    let cols = shape.diagram_columns();
    let piv = w.pivots();
    let f = &code.field;
    let t = code.basis.len();
    // each constraint: (coefficient of each basis element, rhs)
    let inside = if w.bits[n - 1] {
        None
    } else {
        let j = cols.iter().position(|&c| c == n - 1).expect("last column is free");
        Some((0..code.rows()).map(|r| (code.basis.iter().map(|b| b.get(r, j)).collect::<Vec<_>>(), 0)).collect::<Vec<_>>())
    };
    let mut through = Some(Vec::new());
    for c in 0..n {
        if w.bits[c] {
            continue;
        }
        match cols.iter().position(|&x| x == c) {
            None => {
                if v[c] != 0 {
                    through = None;
                    break;
                }
            }
            Some(j) => {
                let row: Vec<u32> = code
                    .basis
                    .iter()
                    .map(|b| piv.iter().enumerate().fold(0, |acc, (r, &p)| f.add(acc, f.mul(v[p], b.get(r, j)))))
                    .collect();
                if let Some(list) = through.as_mut() {
                    list.push((row, v[c]));
                }
            }
        }
    }
    let count = |sys: Option<Vec<(Vec<u32>, u32)>>| -> BigUint {
        let Some(sys) = sys else { return BigUint::zero() };
        let a: Vec<Vec<u32>> = sys.iter().map(|(r, _)| r.clone()).collect();
        let ab: Vec<Vec<u32>> = sys.iter().map(|(r, b)| r.iter().copied().chain([*b]).collect()).collect();
        let ra = if a.is_empty() { 0 } else { MatGF::from_rows(f.clone(), t, &a).expect("width t").rank() };
        let rab = if ab.is_empty() { 0 } else { MatGF::from_rows(f.clone(), t + 1, &ab).expect("width t+1").rank() };
        if ra != rab {
            BigUint::zero()
        } else {
            BigUint::from(f.order()).pow((t - ra) as u32)
        }
    };
    (count(inside), count(through))
}

/// Search (seeded, deterministic) for h, β giving a full-size d=2 code on EF(w) with the given puncture profile.
pub fn profiled_d2_code(
    field: &Arc<FieldSpec>,
    w: &IdentifyingVector,
    v: &[u32],
    target: (u64, u64),
    seed: u64,
    tries: usize,
) -> Result<(FerrersRankCode, SubcodeBases), ConstructError> {
    let pattern = echelon_ferrers_shape(w).pattern();
    let view = d2_extension(field, &pattern)?;
    let (eff, _, _) = effective_pattern(&pattern);
    let want = (BigUint::from(target.0), BigUint::from(target.1));
    let full = ferrers_bound(&pattern, 2);
    let fits = |bases: &SubcodeBases| -> Result<Option<FerrersRankCode>, ConstructError> {
        let code = ferrers_d2_code_with(&view, &pattern, bases)?;
        Ok((code.dim() == full && puncture_profile(w, &code, v) == want).then_some(code))
    };
    let powers = SubcodeBases::powers(&view, eff.rows(), eff.cols());
    if let Some(code) = fits(&powers)? {
        return Ok((code, powers));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pick = |rng: &mut ChaCha8Rng, len: usize, view: &ExtensionView| -> Vec<u32> {
        let mut out = vec![1u32];
        while out.len() < len {
            out.push(rng.gen_range(1..view.ext().order()));
        }
        out.truncate(len);
        out
    };
    for _ in 0..tries {
        let bases = SubcodeBases { h: pick(&mut rng, eff.rows(), &view), beta: pick(&mut rng, eff.cols(), &view) };
        if !independent(&view, &bases.h) || !independent(&view, &bases.beta) {
            continue;
        }
        if let Some(code) = fits(&bases)? {
            return Ok((code, bases));
        }
    }
    Err(ConstructError::ProfileNotFound { word: w.to_string(), target, tries })
}

/// Named constant-weight inputs with their expected per-word rank-code sizes.
#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    pub words: &'static [&'static str],
    pub sizes: &'static [u64],
    /// Special vector used when puncturing this code.
    pub special: Option<&'static str>,
    /// Per-word (inside Q, through the special vector) counts the per-word codes are chosen to realize.
    pub profile: Option<&'static [(u64, u64)]>,
}

pub const FIXTURES: &[Fixture] = &[
    Fixture { name: "ex-3.5.3.8", n: 5, k: 2, delta: 2, words: &["11000", "00110"], sizes: &[8, 1], special: None, profile: None },
    Fixture {
        name: "ex-3.5.3.9",
        n: 6,
        k: 3,
        delta: 2,
        words: &["111000", "100110", "010101", "001011"],
        sizes: &[64, 4, 2, 1],
        special: Some("001001"),
        profile: None,
    },
    Fixture {
        name: "ex-3.5.3.10-k3",
        n: 7,
        k: 3,
        delta: 2,
        words: &["1110000", "1001100", "0101010", "0010110", "0100101", "0011001", "1000011"],
        sizes: &[256, 16, 8, 2, 2, 4, 1],
        special: None,
        profile: None,
    },
    Fixture {
        name: "ex-3.5.3.10-k4",
        n: 7,
        k: 4,
        delta: 2,
        words: &["1111000", "1100110", "1010101", "1001011", "0101101", "0110011", "0011110"],
        sizes: &[256, 16, 8, 2, 2, 4, 1],
        special: None,
        profile: None,
    },
    Fixture {
        name: "ex-3.5.3.11",
        n: 8,
        k: 4,
        delta: 2,
        words: &[
            "11110000", "11001100", "10101010", "10010110", "01011010", "01100110", "00111100", "11000011", "10100101",
            "10011001", "01010101", "01101001", "00110011", "00001111",
        ],
        sizes: &[4096, 256, 64, 16, 16, 16, 16, 16, 16, 16, 8, 32, 4, 1],
        special: Some("10000001"),
        profile: Some(&[
                (256, 256),
                (16, 16),
                (8, 4),
                (2, 1),
                (2, 0),
                (4, 0),
                (1, 0),
                (0, 1),
                (0, 2),
                (0, 2),
                (0, 0),
                (0, 0),
                (0, 0),
                (0, 0),
        ]),
    },
];

pub fn fixture(name: &str) -> Result<&'static Fixture, ConstructError> {
    FIXTURES.iter().find(|f| f.name == name).ok_or_else(|| ConstructError::UnknownFixture(name.to_string()))
}

/// Tries per word when searching for puncture-profiled bases.
pub const PROFILE_TRIES: usize = 20_000;

/// Per-word rank codes for a fixture over GF(2): defaults, or bases matched to the recorded puncture profile.
pub fn fixture_codes(fx: &Fixture) -> Result<Vec<FerrersRankCode>, ConstructError> {
    let field = crate::ff::field_of_order(2).expect("GF(2)");
    let cw = ConstantWeightCode::parse(fx.words, 2 * fx.delta)?;
    match (fx.special, fx.profile) {
        (Some(special), Some(counts)) => {
            let v = parse_vector(special)?;
            cw.words
                .iter()
                .zip(counts)
                .enumerate()
                .map(|(i, (w, &target))| {
                    if *w == IdentifyingVector::top(cw.n, cw.k) || target == (0, 0) {
                        return default_ferrers_code(&field, w, fx.delta);
                    }
                    Ok(profiled_d2_code(&field, w, &v, target, 0x5eed + i as u64, PROFILE_TRIES)?.0)
                })
                .collect()
        }
        _ => default_codes(&field, &cw, fx.delta),
    }
}

/// Fixture's special vector, or 1 0…0 1.
pub fn fixture_special_vector(fx: &Fixture) -> Result<Vec<u32>, ConstructError> {
    fx.special.map_or_else(|| Ok(default_special_vector(fx.n)), parse_vector)
}

/// Digit string over GF(p) with p ≤ 10, e.g. "10000001".
pub fn parse_vector(s: &str) -> Result<Vec<u32>, ConstructError> {
    s.chars().map(|c| c.to_digit(10).ok_or(ConstructError::BadParams("vector must be a digit string"))).collect()
}

pub fn build_fixture(fx: &Fixture) -> Result<SubspaceCode, ConstructError> {
    let field = crate::ff::field_of_order(2).expect("GF(2)");
    let cw = ConstantWeightCode::parse(fx.words, 2 * fx.delta)?;
    let codes = fixture_codes(fx)?;
    multilevel(&field, &cw, fx.delta, &codes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::distance_fast;
    use crate::ff::{field_of_order, ExtensionView};
    use crate::rankmetric::gabidulin;
    use crate::subspace::fill_shape;
    use num_traits::ToPrimitive;

    fn gf2() -> Arc<FieldSpec> {
        field_of_order(2).unwrap()
    }

    #[test]
    fn lift_examples() {
        let f = gf2();
        let zero = MatGF::zeros(f.clone(), 3, 3);
        let c = lift(&f, &[zero]).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.words[0].to_literal(), "100000;010000;001000");
        let view = ExtensionView::new(f.clone(), 3).unwrap();
        let g = gabidulin(&view, 3, 2).unwrap();
        let mats: Vec<MatGF> = g.enumerate().unwrap().into_iter().map(|c| c.matrix).collect();
        let lifted = lift(&f, &mats).unwrap();
        assert_eq!(lifted.len(), 64);
        assert_eq!(lifted.min_distance().unwrap(), 4);
    }

    #[test]
    fn example_sizes_and_distances() {
        let f = gf2();
        for (name, size) in [("ex-3.5.3.8", 9usize), ("ex-3.5.3.9", 71)] {
            let fx = fixture(name).unwrap();
            let code = build_fixture(fx).unwrap();
            assert_eq!(code.len(), size);
            assert_eq!(code.min_distance().unwrap(), 4, "{name}");
            assert!(code.words.iter().all(|w| w.dim() == fx.k));
            let per_word: Vec<u64> =
                fixture_codes(fx).unwrap().iter().map(|c| c.size().to_u64().unwrap()).collect();
            assert_eq!(per_word, fx.sizes);
        }
        let cw = ConstantWeightCode::parse(&["11000", "00110"], 4).unwrap();
        assert_eq!(multilevel_default(&f, &cw, 2).unwrap().len(), 9);
    }

    #[test]
    fn fixture_word_sizes_match_d2_optimum() {
        for fx in FIXTURES {
            for (w, &s) in fx.words.iter().zip(fx.sizes) {
                let v = IdentifyingVector::parse(w).unwrap();
                let e = if v == IdentifyingVector::top(fx.n, fx.k) {
                    fx.k.max(fx.n - fx.k) * (fx.k.min(fx.n - fx.k) - fx.delta + 1)
                } else {
                    crate::rankmetric::d2_optimal_exponent(&v)
                };
                assert_eq!(1u64 << e, s, "{} {w}", fx.name);
            }
        }
    }

    #[test]
    fn identifying_vectors_follow_words() {
        let fx = fixture("ex-3.5.3.9").unwrap();
        let code = build_fixture(fx).unwrap();
        let mut start = 0;
        for (w, &s) in fx.words.iter().zip(fx.sizes) {
            for c in &code.words[start..start + s as usize] {
                assert_eq!(c.identifying_vector().to_string(), *w);
            }
            start += s as usize;
        }
    }

    #[test]
    fn multilevel_errors() {
        let f = gf2();
        let cw = ConstantWeightCode::parse(&["10100", "01010"], 4).unwrap();
        assert_eq!(multilevel_default(&f, &cw, 2), Err(ConstructError::MissingTopWord));
        let cw = ConstantWeightCode::parse(&["1110000", "1001100", "0100011"], 4).unwrap();
        assert!(matches!(multilevel_default(&f, &cw, 3), Err(ConstructError::BadParams(_))));
        assert!(matches!(ConstantWeightCode::parse(&["1100", "1010"], 4), Err(ConstructError::DistanceTooSmall { .. })));
        let cw = ConstantWeightCode::parse(&["11110000", "10001110"], 6).unwrap();
        assert!(matches!(default_ferrers_code(&f, &cw.words[1], 3), Err(ConstructError::DeltaUnsupported { .. })));
    }

    #[test]
    fn spread_like_examples() {
        let f = gf2();
        for (n, k, size, d) in [(6usize, 3usize, 9usize, 6usize), (4, 2, 5, 4), (5, 2, 9, 4), (7, 3, 17, 6), (6, 2, 21, 4)] {
            let c = spread_like(&f, n, k).unwrap();
            assert_eq!(c.len(), size, "({n},{k})");
            assert_eq!(BigUint::from(size), spread_like_size(n, k, 2));
            assert_eq!(c.min_distance().unwrap(), d);
        }
        let f3 = field_of_order(3).unwrap();
        let c = spread_like(&f3, 4, 2).unwrap();
        assert_eq!(c.len(), 10);
        assert_eq!(c.min_distance().unwrap(), 4);
    }

    #[test]
    fn puncture_71_to_18() {
        let code = build_fixture(fixture("ex-3.5.3.9").unwrap()).unwrap();
        assert_eq!(puncture(&code, &default_special_vector(6), false).unwrap().len(), 17);
        let v = fixture_special_vector(fixture("ex-3.5.3.9").unwrap()).unwrap();
        assert_eq!(v, alternate_special_vector(6, 3));
        {
            let p = puncture(&code, &v, false).unwrap();
            assert_eq!(p.len(), 18);
            assert_eq!(p.n, 5);
            assert_eq!(p.min_distance().unwrap(), 3);
            // cross-level distances between the two parts
            let (ins, thr): (Vec<_>, Vec<_>) = p.words.iter().partition(|w| w.dim() == 3);
            for a in &ins {
                for b in &thr {
                    assert!(distance_fast(a, b).unwrap() >= 3);
                }
            }
        }
    }

    #[test]
    fn puncture_edge_cases() {
        let code = build_fixture(fixture("ex-3.5.3.8").unwrap()).unwrap();
        let v = vec![1, 0, 0, 0, 0];
        assert_eq!(puncture(&code, &v, false), Err(ConstructError::SpecialVectorInQ));
        // nothing inside Q and nothing through v
        let f = gf2();
        let c = SubspaceCode::new(f.clone(), 3, CodeKind::ConstantDimension, vec![Subspace::parse(f, 3, "001").unwrap()]).unwrap();
        let p = puncture(&c, &[1, 0, 1], false).unwrap();
        assert!(p.is_empty());
    }

    #[test]
    fn profile_counts_match_enumeration() {
        let f = gf2();
        let v = default_special_vector(8);
        for w in ["11110000", "11001100", "10101010", "10010110", "01100110", "11000011", "10011001"] {
            let iv = IdentifyingVector::parse(w).unwrap();
            let code = default_ferrers_code(&f, &iv, 2).unwrap();
            let (mut ins, mut thr) = (0u64, 0u64);
            for x in code.codewords().unwrap() {
                let s = fill_matrix(&iv, &x).unwrap();
                if (0..s.dim()).all(|r| s.gen().get(r, 7) == 0) {
                    ins += 1;
                }
                if s.contains(&v) {
                    thr += 1;
                }
            }
            assert_eq!(puncture_profile(&iv, &code, &v), (BigUint::from(ins), BigUint::from(thr)), "{w}");
        }
    }

    #[test]
    fn fill_shape_agrees_with_fill_matrix() {
        let f = gf2();
        let iv = IdentifyingVector::parse("0110100").unwrap();
        let m = MatGF::parse(f.clone(), 3, "111;110;011").unwrap();
        let a = fill_matrix(&iv, &m).unwrap();
        let b = fill_shape(f, &iv, &a.free_entries()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn lexicode_contains_top_word() {
        let cw = ConstantWeightCode::lexicode(8, 4, 4);
        assert_eq!(cw.words[0], IdentifyingVector::top(8, 4));
        assert!(ConstantWeightCode::new(cw.words.clone(), 4).is_ok());
        assert_eq!(cw.words.len(), 14);
    }

    #[test]
    fn larger_fixtures_and_profiled_puncture() {
        for name in ["ex-3.5.3.10-k3", "ex-3.5.3.10-k4"] {
            let code = build_fixture(fixture(name).unwrap()).unwrap();
            assert_eq!(code.len(), 289);
            assert_eq!(code.min_distance().unwrap(), 4, "{name}");
        }
        let fx = fixture("ex-3.5.3.11").unwrap();
        let codes = fixture_codes(fx).unwrap();
        let v = fixture_special_vector(fx).unwrap();
        let cw = ConstantWeightCode::parse(fx.words, 4).unwrap();
        for ((w, code), (&size, &target)) in cw.words.iter().zip(&codes).zip(fx.sizes.iter().zip(fx.profile.unwrap())) {
            assert_eq!(code.size().to_u64().unwrap(), size, "{w}");
            let got = puncture_profile(w, code, &v);
            assert_eq!((got.0.to_u64().unwrap(), got.1.to_u64().unwrap()), target, "{w}");
        }
        let code = build_fixture(fx).unwrap();
        assert_eq!(code.len(), 4573);
        let p = puncture(&code, &v, true).unwrap();
        assert_eq!(p.len(), 573);
        assert_eq!(p.min_distance().unwrap(), 3);
    }
}
