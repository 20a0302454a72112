//! Arithmetic in GF(p^m) and coordinate expansion of an extension over a subfield.
//!
//! Elements are plain `u32` representatives: the coefficient vector of the
//! polynomial-basis representation read as base-`p` digits, lowest degree first.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;
const TABLE_LIMIT: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("field order {p}^{m} exceeds 2^20")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("no extension view registered for this field")]
    NoExtensionView,
}

/// A finite field GF(p^m) with a fixed irreducible modulus.
pub struct FieldSpec {
    p: u32,
    m: u32,
    order: u32,
    /// Monic modulus, coefficients lowest degree first (length m + 1).
    modulus: Vec<u32>,
    primitive: u32,
    tables: Option<Tables>,
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.m)
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}
impl Eq for FieldSpec {}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Build GF(p^m) using the smallest irreducible monic modulus of degree m.
pub fn make_field(p: u32, m: u32) -> Result<Arc<FieldSpec>, FieldError> {
    FieldSpec::new(p, m).map(Arc::new)
}

/// Field of order q, for q a prime power.
pub fn field_of_order(q: u32) -> Result<Arc<FieldSpec>, FieldError> {
    let (p, m) = prime_power(q).ok_or(FieldError::NotPrime(q))?;
    make_field(p, m)
}

/// Split q = p^m; `None` when q is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let (mut r, mut m) = (q, 0);
    while r % p == 0 {
        r /= p;
        m += 1;
    }
    (r == 1).then_some((p, m))
}

// Dense polynomials over GF(p), lowest degree first, no trailing zeros.
fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = pow_mod(b[db], p - 2, p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &bi) in b.iter().enumerate() {
            let t = (c as u64 * bi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn pow_mod(mut b: u32, mut e: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut base = b as u64 % p as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    b = acc as u32;
    b
}

fn digits(mut x: u32, p: u32, len: usize) -> Vec<u32> {
    let mut d = vec![0; len];
    for slot in d.iter_mut() {
        *slot = x % p;
        x /= p;
    }
    d
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut g = digits(low as u32, p, d);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    pub fn new(p: u32, m: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let order = (p as u64).checked_pow(m).filter(|&o| o <= MAX_ORDER);
        let order = order.ok_or(FieldError::FieldTooLarge { p, m })? as u32;
        let modulus = (0..order)
            .map(|low| {
                let mut f = digits(low, p, m as usize);
                f.push(1);
                f
            })
            .find(|f| is_irreducible(f, p))
            .expect("an irreducible polynomial exists in every degree");
        let mut spec = FieldSpec { p, m, order, modulus, primitive: 0, tables: None };
        spec.primitive = spec.find_primitive();
        if order <= TABLE_LIMIT {
            spec.tables = Some(spec.build_tables());
        }
        Ok(spec)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive(&self) -> u32 {
        self.primitive
    }

    /// Residue class of x, the root of the modulus.
    pub fn alpha(&self) -> u32 {
        if self.m == 1 {
            // modulus x - c: its root is c
            (self.p - self.modulus[0]) % self.p
        } else {
            self.p
        }
    }

    pub fn is_prime_field(&self) -> bool {
        self.m == 1
    }

    pub fn contains(&self, x: u32) -> bool {
        x < self.order
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.m == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        while a > 0 || b > 0 {
            out += (a % self.p + b % self.p) % self.p * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        if self.m == 1 {
            return (self.p - a) % self.p;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += (self.p - a % self.p) % self.p * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.m == 1 {
            return (a as u64 * b as u64 % self.p as u64) as u32;
        }
        match &self.tables {
            Some(t) => t.exp[(t.log[a as usize] + t.log[b as usize]) as usize],
            None => self.poly_mul(a, b),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        match &self.tables {
            Some(t) if self.m > 1 => {
                let q1 = self.order - 1;
                Some(t.exp[((q1 - t.log[a as usize]) % q1) as usize])
            }
            _ => Some(self.pow(a, self.order as u64 - 2)),
        }
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Element with the given prime-field value (0 <= c < p).
    pub fn from_prime(&self, c: u32) -> u32 {
        c % self.p
    }

    /// Base-p digits of an element, lowest degree first.
    pub fn to_digits(&self, x: u32) -> Vec<u32> {
        digits(x, self.p, self.m as usize)
    }

    pub fn from_digits(&self, d: &[u32]) -> u32 {
        undigits(d, self.p)
    }

    fn poly_mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        let m = self.m as usize;
        let (da, db) = (digits(a, p, m), digits(b, p, m));
        let mut prod = vec![0u32; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
            }
        }
        let mut r = poly_rem(&prod, &self.modulus, p);
        r.resize(m, 0);
        undigits(&r, p)
    }

    fn find_primitive(&self) -> u32 {
        let q1 = self.order - 1;
        if q1 == 1 {
            return 1;
        }
        let mut factors = Vec::new();
        let (mut r, mut d) = (q1, 2);
        while d * d <= r {
            if r % d == 0 {
                factors.push(d);
                while r % d == 0 {
                    r /= d;
                }
            }
            d += 1;
        }
        if r > 1 {
            factors.push(r);
        }
        (2..self.order)
            .find(|&g| factors.iter().all(|&f| self.pow(g, (q1 / f) as u64) != 1))
            .expect("multiplicative group is cyclic")
    }

    fn build_tables(&self) -> Tables {
        let q1 = (self.order - 1) as usize;
        let mut exp = vec![0u32; 2 * q1.max(1)];
        let mut log = vec![0u32; self.order as usize];
        let mut x = 1u32;
        for i in 0..q1 {
            exp[i] = x;
            exp[i + q1] = x;
            log[x as usize] = i as u32;
            x = self.poly_mul(x, self.primitive);
        }
        if q1 == 1 {
            exp[1] = 1;
        }
        Tables { exp, log }
    }

    /// Wrap an element for operator-style arithmetic.
    pub fn elem(&self, repr: u32) -> FieldElement<'_> {
        debug_assert!(repr < self.order);
        FieldElement { spec: self, repr }
    }
}

/// An element bound to its field, for readable arithmetic in tests and examples.
#[derive(Clone, Copy)]
pub struct FieldElement<'a> {
    pub spec: &'a FieldSpec,
    pub repr: u32,
}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.repr)
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr && *self.spec == *other.spec
    }
}

impl<'a> core::ops::Add for FieldElement<'a> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.spec.elem(self.spec.add(self.repr, o.repr))
    }
}

impl<'a> core::ops::Sub for FieldElement<'a> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.spec.elem(self.spec.sub(self.repr, o.repr))
    }
}

impl<'a> core::ops::Mul for FieldElement<'a> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.spec.elem(self.spec.mul(self.repr, o.repr))
    }
}

impl<'a> core::ops::Neg for FieldElement<'a> {
    type Output = Self;
    fn neg(self) -> Self {
        self.spec.elem(self.spec.neg(self.repr))
    }
}

/// GF(q^m) seen as an m-dimensional space over GF(q) with basis {1, α, …, α^{m−1}},
/// α the root of the extension modulus.
#[derive(Debug, Clone)]
pub struct ExtensionView {
    base: Arc<FieldSpec>,
    ext: Arc<FieldSpec>,
    m: usize,
    basis: Vec<u32>,
    /// base element -> extension element
    embed: Vec<u32>,
    /// inverse of the GF(p) matrix whose columns are γ^i α^j (γ a root of the base modulus)
    inv_coords: Vec<Vec<u32>>,
}

impl ExtensionView {
    pub fn new(base: Arc<FieldSpec>, m: u32) -> Result<Self, FieldError> {
        let ext = make_field(base.p, base.m * m)?;
        Self::with_fields(base, ext)
    }

    /// View `ext` over `base`; `ext` must have degree a multiple of `base`'s.
    pub fn with_fields(base: Arc<FieldSpec>, ext: Arc<FieldSpec>) -> Result<Self, FieldError> {
        assert_eq!(base.p, ext.p, "fields of different characteristic");
        assert_eq!(ext.m % base.m, 0, "base degree must divide extension degree");
        let p = base.p;
        let mb = base.m as usize;
        let m = (ext.m / base.m) as usize;
        let gamma = if mb == 1 {
            1
        } else {
            (0..ext.order)
                .find(|&g| eval_prime_poly(&ext, &base.modulus, g) == 0)
                .expect("base field embeds in extension")
        };
        let mut gpow = vec![1u32; mb];
        for i in 1..mb {
            gpow[i] = ext.mul(gpow[i - 1], gamma);
        }
        let embed: Vec<u32> = (0..base.order)
            .map(|b| {
                base.to_digits(b).iter().zip(&gpow).fold(0, |acc, (&c, &g)| {
                    ext.add(acc, ext.mul(ext.from_prime(c), g))
                })
            })
            .collect();
        let alpha = ext.alpha();
        let basis: Vec<u32> = (0..m).map(|j| ext.pow(alpha, j as u64)).collect();
        let dim = mb * m;
        let mut cols = Vec::with_capacity(dim);
        for &bj in &basis {
            for &gi in &gpow {
                cols.push(ext.to_digits(ext.mul(gi, bj)));
            }
        }
        // column index = j * mb + i
        let mat: Vec<Vec<u32>> = (0..dim).map(|r| (0..dim).map(|c| cols[c][r]).collect()).collect();
        let inv_coords = invert_mod_p(&mat, p).expect("polynomial basis is independent");
        Ok(ExtensionView { base, ext, m, basis, embed, inv_coords })
    }

    pub fn base(&self) -> &Arc<FieldSpec> {
        &self.base
    }

    pub fn ext(&self) -> &Arc<FieldSpec> {
        &self.ext
    }

    /// Extension degree over the base field.
    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    /// Image of a base-field element in the extension.
    pub fn embed(&self, b: u32) -> u32 {
        self.embed[b as usize]
    }

    /// x^{q^{i mod m}}.
    pub fn frobenius_pow(&self, x: u32, i: usize) -> u32 {
        let q = self.base.order as u64;
        let mut y = x;
        for _ in 0..i % self.m {
            y = self.ext.pow(y, q);
        }
        y
    }

    /// Coordinates of x in the basis, as base-field elements.
    pub fn expand_coords(&self, x: u32) -> Vec<u32> {
        let p = self.base.p;
        let mb = self.base.m as usize;
        let xd = self.ext.to_digits(x);
        let d: Vec<u32> = self
            .inv_coords
            .iter()
            .map(|row| {
                (row.iter().zip(&xd).map(|(&a, &b)| a as u64 * b as u64).sum::<u64>() % p as u64)
                    as u32
            })
            .collect();
        (0..self.m).map(|j| undigits(&d[j * mb..(j + 1) * mb], p)).collect()
    }

    pub fn collapse_coords(&self, coords: &[u32]) -> u32 {
        coords.iter().zip(&self.basis).fold(0, |acc, (&c, &b)| {
            self.ext.add(acc, self.ext.mul(self.embed(c), b))
        })
    }
}

fn eval_prime_poly(f: &FieldSpec, coeffs: &[u32], x: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), f.from_prime(c)))
}

fn invert_mod_p(mat: &[Vec<u32>], p: u32) -> Option<Vec<Vec<u32>>> {
    let n = mat.len();
    let mut a: Vec<Vec<u32>> = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| (i == j) as u32));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, piv);
        let inv = pow_mod(a[col][col], p - 2, p);
        for v in a[col].iter_mut() {
            *v = (*v as u64 * inv as u64 % p as u64) as u32;
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, &y) in a[r].iter_mut().zip(&pivot_row) {
                    let t = (f as u64 * y as u64 % p as u64) as u32;
                    *x = (*x + p - t) % p;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}
