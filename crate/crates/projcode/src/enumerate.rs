//! Indexing k-subspaces of GF(2)^n by binary vectors: box-partition counts, the
//! (k(n−k)+1)-bit extended encoding, and the (k(n−k)+2)-bit full encoding.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::ff::{field_of_order, FieldSpec};
use crate::subspace::{fill_shape, gaussian, weight_k_vectors_desc, IdentifyingVector, Subspace, SubspaceError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumError {
    #[error("invalid parameters: {0}")]
    BadParams(&'static str),
    #[error("expected {expected} bits, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("vector is not the image of any subspace: {0}")]
    NotACodeword(&'static str),
    #[error("{count} identifying vectors exceed the table cap {cap}")]
    TooLarge { count: BigUint, cap: u64 },
    #[error("subspace must be over GF(2)")]
    NotBinary,
    #[error("subspace has dimension {got}, expected {expected} in ambient {n}")]
    WrongShape { n: usize, expected: usize, got: usize },
    #[error(transparent)]
    Subspace(#[from] SubspaceError),
}

/// a_l = number of partitions of l fitting a k × (n−k) box, l = 0..k(n−k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxPartitionTable {
    pub k: usize,
    pub w: usize,
    pub coeffs: Vec<BigUint>,
}

impl BoxPartitionTable {
    /// Σ a_l q^l.
    pub fn evaluate(&self, q: u32) -> BigUint {
        let qb = BigUint::from(q);
        self.coeffs.iter().rev().fold(BigUint::zero(), |acc, a| acc * &qb + a)
    }
}

/// Coefficients of the Gaussian polynomial [n k], by [n k] = [n−1 k−1] + x^k [n−1 k].
pub fn box_partition_coeffs(n: usize, k: usize) -> Result<BoxPartitionTable, EnumError> {
    if k > n {
        return Err(EnumError::BadParams("k > n"));
    }
    // row[j] = coefficients of [m j] for the current m
    let mut row: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let len = j * (m - j) + 1;
            let mut c = vec![BigUint::zero(); len];
            if j >= 1 {
                for (l, a) in row[j - 1].iter().enumerate() {
                    c[l] += a;
                }
            }
            if j < m {
                for (l, a) in row[j].iter().enumerate() {
                    c[l + j] += a;
                }
            }
            next.push(c);
        }
        row = next;
    }
    Ok(BoxPartitionTable { k, w: n - k, coeffs: row.swap_remove(k) })
}

/// Number of unrestricted partitions of i, and the Fibonacci number F(i+1) (F(0)=0, F(1)=1).
pub fn partition_fib(i: usize) -> (BigUint, BigUint) {
    let mut p = vec![BigUint::zero(); i + 1];
    p[0] = BigUint::one();
    for part in 1..=i {
        for s in part..=i {
            let add = p[s - part].clone();
            p[s] += add;
        }
    }
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..i {
        let c = &a + &b;
        a = b;
        b = c;
    }
    (p.swap_remove(i), b)
}

/// V_{i−1}: length-(i−1) vectors that are all zero, or 0^a w with w starting and ending in 1 and free of "00".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixFamily {
    pub i: usize,
    /// Ascending by integer value, first bit most significant.
    pub vectors: Vec<Vec<bool>>,
}

fn is_suffix_vector(v: &[bool]) -> bool {
    match v.iter().position(|&b| b) {
        None => true,
        Some(a) => {
            let w = &v[a..];
            *w.last().expect("non-empty") && !w.windows(2).any(|p| !p[0] && !p[1])
        }
    }
}

/// Suffix family for deficit class i ≥ 1.
pub fn suffix_family(i: usize) -> Result<SuffixFamily, EnumError> {
    if i == 0 {
        return Err(EnumError::BadParams("suffix families start at i = 1"));
    }
    let len = i - 1;
    let mut vectors = Vec::new();
    // all-zero, then the w-forms grouped by leading-zero count, each generated in ascending order
    vectors.push(vec![false; len]);
    for a in (0..len).rev() {
        let wl = len - a;
        let mut ws = Vec::new();
        gen_no_double_zero(wl, &mut vec![true], &mut ws);
        for w in ws {
            let mut v = vec![false; a];
            v.extend(w);
            vectors.push(v);
        }
    }
    vectors.sort();
    debug_assert!(vectors.iter().all(|v| is_suffix_vector(v)));
    Ok(SuffixFamily { i, vectors })
}

fn gen_no_double_zero(len: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
    if cur.len() == len {
        if *cur.last().expect("starts with 1") {
            out.push(cur.clone());
        }
        return;
    }
    for b in [false, true] {
        if !b && !cur.last().expect("non-empty") {
            continue;
        }
        cur.push(b);
        gen_no_double_zero(len, cur, out);
        cur.pop();
    }
}

/// (q^{k(n−k)} < [n k]_q, [n k]_q < q^{k(n−k)+1}) for q > 2, or
/// (2^{k(n−k)+1} < [n k]_2, [n k]_2 < 2^{k(n−k)+2}) for q = 2.
pub fn gaussian_power_bounds(n: usize, k: usize, q: u32) -> Result<(bool, bool), EnumError> {
    if q < 2 || crate::ff::prime_power(q).is_none() {
        return Err(EnumError::BadParams("q must be a prime power"));
    }
    let e = (k * (n.saturating_sub(k))) as u32;
    let qb = BigUint::from(q);
    if q == 2 {
        if !(1 < k && k < n) {
            return Err(EnumError::BadParams("q = 2 needs 1 < k < n"));
        }
        let g = gaussian(n, k, 2)?;
        Ok((qb.pow(e + 1) < g, g < qb.pow(e + 2)))
    } else {
        if !(1 <= k && k < n) {
            return Err(EnumError::BadParams("need 1 <= k < n"));
        }
        let g = gaussian(n, k, q)?;
        Ok((qb.pow(e) < g, g < qb.pow(e + 1)))
    }
}

fn gf2() -> Arc<FieldSpec> {
    field_of_order(2).expect("GF(2)")
}

fn to_u32(bits: &[bool]) -> Vec<u32> {
    bits.iter().map(|&b| b as u32).collect()
}

fn to_bits(vals: &[u32]) -> Vec<bool> {
    vals.iter().map(|&x| x != 0).collect()
}

fn check_binary(u: &Subspace, n: usize, k: usize) -> Result<(), EnumError> {
    if u.q() != 2 {
        return Err(EnumError::NotBinary);
    }
    if u.n() != n || u.dim() != k {
        return Err(EnumError::WrongShape { n, expected: k, got: u.dim() });
    }
    Ok(())
}

/// Identifying vector from a pattern: `ones` then `mid` then zeros to length n.
fn id_from(n: usize, ones: usize, mid: &[bool]) -> IdentifyingVector {
    let mut bits = vec![true; ones];
    bits.extend_from_slice(mid);
    bits.resize(n, false);
    IdentifyingVector::new(bits)
}

/// The four (tail, identifying vector) pairs of the extended encoding.
fn extended_templates(n: usize, k: usize) -> [(&'static [bool], IdentifyingVector); 4] {
    [
        (&[true], id_from(n, k, &[])),
        (&[true, false], id_from(n, k - 1, &[false, true])),
        (&[true, false, false], id_from(n, k - 1, &[false, false, true])),
        (&[false, false, false], id_from(n, k - 2, &[false, true, true])),
    ]
}

fn check_extended(n: usize, k: usize) -> Result<(), EnumError> {
    if !(2 <= k && k + 2 <= n) {
        return Err(EnumError::BadParams("extended encoding needs 2 <= k <= n-2"));
    }
    Ok(())
}

/// Map a (k(n−k)+1)-bit vector to a k-subspace of GF(2)^n. The tail selects one of four
/// echelon classes; the leading bits fill its free entries row by row.
pub fn encode_extended(v: &[bool], n: usize, k: usize) -> Result<Subspace, EnumError> {
    check_extended(n, k)?;
    let len = k * (n - k) + 1;
    if v.len() != len {
        return Err(EnumError::BadLength { expected: len, got: v.len() });
    }
    for (tail, id) in extended_templates(n, k) {
        if v.ends_with(tail) {
            let data = &v[..len - tail.len()];
            let dots = crate::subspace::dot_count_formula(&id);
            // a three-bit tail leaves one bit more than the class holds; it must be part of the tail
            return Ok(fill_shape(gf2(), &id, &to_u32(&data[..dots]))?);
        }
    }
    unreachable!("every vector ends in 1, 10, 100 or 000")
}

/// Inverse of [`encode_extended`].
pub fn decode_extended(u: &Subspace, n: usize, k: usize) -> Result<Vec<bool>, EnumError> {
    check_extended(n, k)?;
    check_binary(u, n, k)?;
    let id = u.identifying_vector();
    let (tail, _) = extended_templates(n, k)
        .into_iter()
        .find(|(_, t)| *t == id)
        .ok_or(EnumError::NotACodeword("identifying vector outside the four extended classes"))?;
    let mut out = to_bits(&u.free_entries());
    out.extend_from_slice(tail);
    Ok(out)
}

/// Cap on C(n,k) for the class tables of the full encoding.
pub const CLASS_TABLE_CAP: u64 = 1_000_000;

/// Full encoding of G_2(n,k) into binary vectors of length k(n−k)+2.
#[derive(Debug, Clone)]
pub struct GrassmannIndex {
    pub n: usize,
    pub k: usize,
    /// classes[i]: identifying vectors with k(n−k) − i free entries, lexicographically descending.
    pub classes: Vec<Vec<IdentifyingVector>>,
    compact: Option<CompactTails>,
}

#[derive(Debug, Clone)]
struct CompactTails {
    x: usize,
    by_tail: BTreeMap<Vec<bool>, IdentifyingVector>,
    by_id: BTreeMap<IdentifyingVector, Vec<bool>>,
}

impl GrassmannIndex {
    /// Suffix `10` for the top class, `100 V` (V from the class's suffix family) otherwise.
    pub fn new(n: usize, k: usize) -> Result<Self, EnumError> {
        if k > n {
            return Err(EnumError::BadParams("k > n"));
        }
        let count = binomial(n, k);
        if count > BigUint::from(CLASS_TABLE_CAP) {
            return Err(EnumError::TooLarge { count, cap: CLASS_TABLE_CAP });
        }
        let top = k * (n - k);
        let mut classes = vec![Vec::new(); top + 1];
        for v in weight_k_vectors_desc(n, k) {
            let dots = crate::subspace::dot_count_formula(&v);
            classes[top - dots].push(v);
        }
        Ok(GrassmannIndex { n, k, classes, compact: None })
    }

    /// Hybrid: the standard suffixes for deficits i ≤ x−3; every other class gets its own
    /// x-bit tail not ending any standard vector, with its free entries left-aligned and zero-padded.
    /// x is the least value with C(n,k) − Σ_{i≤x−3} a_i ≤ 2^x − Σ_{i≤x−3} a_i 2^{x−2−i}.
    pub fn compact(n: usize, k: usize) -> Result<Self, EnumError> {
        let mut idx = Self::new(n, k)?;
        let total = binomial(n, k);
        let len = idx.len();
        let a: Vec<BigUint> = idx.classes.iter().map(|c| BigUint::from(c.len())).collect();
        let mut x = 2;
        loop {
            let std_classes = (x as isize - 2).max(0) as usize; // i in 0..std_classes
            let used: BigUint = a.iter().take(std_classes).sum();
            let used_tails: BigUint =
                a.iter().take(std_classes).enumerate().map(|(i, ai)| ai * (BigUint::one() << (x - 2 - i))).sum();
            if &total - &used + &used_tails <= BigUint::one() << x || x >= len {
                break;
            }
            x += 1;
        }
        let std_classes = x - 2;
        let mut taken = alloc::collections::BTreeSet::new();
        for i in 0..std_classes.min(idx.classes.len()) {
            for j in 0..idx.classes[i].len() {
                let suffix = idx.suffix(i, j)?;
                let free = x - suffix.len();
                for fill in 0..1u64 << free {
                    let mut t: Vec<bool> = (0..free).rev().map(|b| fill >> b & 1 == 1).collect();
                    t.extend_from_slice(&suffix);
                    taken.insert(t);
                }
            }
        }
        let mut free_tails = (0..1u64 << x)
            .map(|t| (0..x).rev().map(|b| t >> b & 1 == 1).collect::<Vec<bool>>())
            .filter(|t| !taken.contains(t));
        let (mut by_tail, mut by_id) = (BTreeMap::new(), BTreeMap::new());
        for class in idx.classes.iter().skip(std_classes) {
            for id in class {
                let tail = free_tails.next().ok_or(EnumError::BadParams("not enough compact tails"))?;
                by_tail.insert(tail.clone(), id.clone());
                by_id.insert(id.clone(), tail);
            }
        }
        idx.compact = Some(CompactTails { x, by_tail, by_id });
        Ok(idx)
    }

    /// Output length k(n−k)+2.
    pub fn len(&self) -> usize {
        self.k * (self.n - self.k) + 2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Tail length x of the compact mode.
    pub fn compact_threshold(&self) -> Option<usize> {
        self.compact.as_ref().map(|c| c.x)
    }

    /// Suffix of the j-th identifying vector in class i.
    fn suffix(&self, i: usize, j: usize) -> Result<Vec<bool>, EnumError> {
        if i == 0 {
            return Ok(vec![true, false]);
        }
        let fam = suffix_family(i)?;
        let v = fam.vectors.get(j).ok_or(EnumError::BadParams("class larger than its suffix family"))?;
        let mut s = vec![true, false, false];
        s.extend_from_slice(v);
        Ok(s)
    }

    pub fn encode(&self, u: &Subspace) -> Result<Vec<bool>, EnumError> {
        check_binary(u, self.n, self.k)?;
        let id = u.identifying_vector();
        let data = to_bits(&u.free_entries());
        if let Some(c) = &self.compact {
            if let Some(tail) = c.by_id.get(&id) {
                let mut out = data;
                out.resize(self.len() - c.x, false);
                out.extend_from_slice(tail);
                return Ok(out);
            }
        }
        let i = self.k * (self.n - self.k) - data.len();
        let j = self.classes[i].iter().position(|v| *v == id).expect("every weight-k vector is classed");
        let mut out = data;
        out.extend(self.suffix(i, j)?);
        Ok(out)
    }

    /// Recover the class index i from the suffix, parsing from the right.
    fn parse_class(&self, v: &[bool]) -> Result<(usize, Vec<bool>), EnumError> {
        let len = v.len();
        match (v[len - 2], v[len - 1]) {
            (true, false) => Ok((0, Vec::new())),
            (_, false) => {
                // 1 0^{i+1}
                let run = v.iter().rev().take_while(|&&b| !b).count();
                if run == len {
                    return Err(EnumError::NotACodeword("no suffix marker"));
                }
                Ok((run - 1, vec![false; run - 2]))
            }
            (_, true) => {
                let zz = (0..len - 1).rev().find(|&p| !v[p] && !v[p + 1]).ok_or(EnumError::NotACodeword("no 00 in suffix"))?;
                let mut start = zz;
                while start > 0 && !v[start - 1] {
                    start -= 1;
                }
                if start == 0 {
                    return Err(EnumError::NotACodeword("no suffix marker"));
                }
                let run = zz + 2 - start;
                let w = &v[zz + 2..];
                let i = run + w.len() - 1;
                let mut tail = vec![false; run - 2];
                tail.extend_from_slice(w);
                Ok((i, tail))
            }
        }
    }

    pub fn decode(&self, v: &[bool]) -> Result<Subspace, EnumError> {
        if v.len() != self.len() {
            return Err(EnumError::BadLength { expected: self.len(), got: v.len() });
        }
        let top = self.k * (self.n - self.k);
        if let Some(c) = &self.compact {
            if let Some(id) = c.by_tail.get(&v[v.len() - c.x..]) {
                let dots = crate::subspace::dot_count_formula(id);
                if v[dots..v.len() - c.x].iter().any(|&b| b) {
                    return Err(EnumError::NotACodeword("nonzero padding"));
                }
                return Ok(fill_shape(gf2(), id, &to_u32(&v[..dots]))?);
            }
        }
        let (i, suffix_v) = self.parse_class(v)?;
        if i > top {
            return Err(EnumError::NotACodeword("class index out of range"));
        }
        if let Some(c) = &self.compact {
            if i + 3 > c.x {
                return Err(EnumError::NotACodeword("class is encoded by a compact tail"));
            }
        }
        let j = if i == 0 {
            0
        } else {
            suffix_family(i)?
                .vectors
                .iter()
                .position(|x| *x == suffix_v)
                .ok_or(EnumError::NotACodeword("suffix outside its family"))?
        };
        let id = self.classes[i].get(j).ok_or(EnumError::NotACodeword("unused suffix"))?;
        Ok(fill_shape(gf2(), id, &to_u32(&v[..top - i]))?)
    }
}

/// C(n, k).
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub fn bits_to_string(v: &[bool]) -> String {
    v.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

pub fn parse_bits(s: &str) -> Option<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        })
        .collect()
}
