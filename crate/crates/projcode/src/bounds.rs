//! Upper and lower bounds on A_q(n, 2δ, k) and A_q(n, d), in exact arithmetic.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::subspace::gaussian_or_zero;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundsError {
    #[error("invalid parameters: {0}")]
    BadParams(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    pub sphere_packing_upper: BigUint,
    pub singleton_upper: BigUint,
    pub anticode_upper: BigUint,
    pub johnson_upper: BigUint,
    pub sphere_covering_lower: BigRational,
    /// Absent for δ = 1, where the expression exceeds |G_q(n,k)|.
    pub graham_sloane_lower: Option<BigRational>,
    /// Only for δ = k (after complement reduction): the known upper bound when k ∤ n.
    pub delta_k_upper: Option<BigUint>,
    /// Exact value when known (δ = k with k | n, or a trivial case).
    pub delta_k_exact: Option<BigUint>,
    /// Block-shift construction size for δ = k.
    pub delta_k_lower: Option<BigUint>,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn uppers(&self) -> Vec<BigUint> {
        let mut u = alloc::vec![
            self.sphere_packing_upper.clone(),
            self.singleton_upper.clone(),
            self.anticode_upper.clone(),
            self.johnson_upper.clone(),
        ];
        u.extend(self.delta_k_upper.clone());
        u.extend(self.delta_k_exact.clone());
        u
    }

    pub fn lowers(&self) -> Vec<BigRational> {
        let mut l = alloc::vec![self.sphere_covering_lower.clone()];
        l.extend(self.graham_sloane_lower.clone());
        l.extend(self.delta_k_lower.iter().chain(&self.delta_k_exact).map(|x| ratio(x.clone())));
        l
    }

    pub fn best_upper(&self) -> BigUint {
        self.uppers().into_iter().min().expect("non-empty")
    }

    /// max(1, ⌈best lower bound⌉).
    pub fn best_lower(&self) -> BigUint {
        let l = self.lowers().into_iter().max().expect("non-empty").ceil().to_integer();
        l.to_biguint().unwrap_or_default().max(BigUint::one())
    }
}

fn ratio(x: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn pow(q: u32, e: usize) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

fn g(n: usize, k: usize, q: u32) -> BigUint {
    gaussian_or_zero(n as i64, k as i64, q)
}

/// |S_{n,k}(t)| = Σ_{i≤t} q^{i²} [k i][n−k i].
pub fn sphere_volume(n: usize, k: usize, t: usize, q: u32) -> BigUint {
    (0..=t).map(|i| pow(q, i * i) * g(k, i, q) * g(n - k, i, q)).sum()
}

/// ⌊(q^n−1)/(q^k−1) ⌊(q^{n−1}−1)/(q^{k−1}−1) ⋯ ⌊(q^{n−k+δ}−1)/(q^δ−1)⌋⋯⌋⌋.
pub fn johnson_chain(n: usize, k: usize, delta: usize, q: u32) -> BigUint {
    let mut acc = BigUint::one();
    for j in delta..=k {
        let top = n - k + j;
        acc = ((pow(q, top) - 1u32) * acc) / (pow(q, j) - 1u32);
    }
    acc
}

/// Bounds on A_q(n, 2δ, k); k is replaced by n−k when k > n/2.
pub fn cdc_bounds(n: usize, k: usize, delta: usize, q: u32) -> Result<BoundReport, BoundsError> {
    if delta == 0 || delta > k || k > n {
        return Err(BoundsError::BadParams("need 1 <= delta <= k <= n"));
    }
    if crate::ff::prime_power(q).is_none() {
        return Err(BoundsError::BadParams("q must be a prime power"));
    }
    let orig_k = k;
    let k = k.min(n - k);
    let mut notes = Vec::new();
    if k != orig_k {
        notes.push(alloc::format!("evaluated at k = {k} via A_q(n,2δ,k) = A_q(n,2δ,n−k)"));
    }
    let one = BigUint::one();
    if delta > k {
        notes.push(String::from("δ exceeds min(k, n−k): any two k-subspaces are closer than 2δ, A = 1"));
        return Ok(BoundReport {
            q,
            n,
            k: orig_k,
            delta,
            sphere_packing_upper: one.clone(),
            singleton_upper: one.clone(),
            anticode_upper: one.clone(),
            johnson_upper: one.clone(),
            sphere_covering_lower: BigRational::one(),
            graham_sloane_lower: None,
            delta_k_upper: None,
            delta_k_exact: Some(one.clone()),
            delta_k_lower: None,
            notes,
        });
    }
    let total = g(n, k, q);
    let t = (delta - 1) / 2;
    let sphere_packing_upper = &total / sphere_volume(n, k, t, q);
    let singleton_upper = g(n - delta + 1, k - delta + 1, q);
    let anticode_upper = g(n, k - delta + 1, q) / g(k, k - delta + 1, q);
    let johnson_upper = johnson_chain(n, k, delta, q);
    let sphere_covering_lower =
        BigRational::new(BigInt::from(total.clone()), BigInt::from(sphere_volume(n, k, delta - 1, q)));
    let graham_sloane_lower = if delta >= 2 {
        let num = BigInt::from((q - 1) as u64) * BigInt::from(total.clone());
        let den = BigInt::from(pow(q, n) - 1u32) * BigInt::from(pow(q, n * (delta - 2)));
        Some(BigRational::new(num, den))
    } else {
        notes.push(String::from("Graham–Sloane lower bound omitted for δ = 1"));
        None
    };
    let (mut delta_k_upper, mut delta_k_exact, mut delta_k_lower) = (None, None, None);
    if delta == k {
        let qn1 = pow(q, n) - 1u32;
        let qk1 = pow(q, k) - 1u32;
        let (quot, rem) = qn1.div_rem(&qk1);
        if rem.is_zero() {
            delta_k_exact = Some(quot);
        } else {
            delta_k_upper = Some(quot - 1u32);
            let r = n % k;
            delta_k_lower = Some((pow(q, n) - pow(q, k) * (pow(q, r) - 1u32) - 1u32) / qk1);
        }
    }
    if delta == 1 {
        delta_k_exact = delta_k_exact.or_else(|| Some(total.clone()));
    }
    Ok(BoundReport {
        q,
        n,
        k: orig_k,
        delta,
        sphere_packing_upper,
        singleton_upper,
        anticode_upper,
        johnson_upper,
        sphere_covering_lower,
        graham_sloane_lower,
        delta_k_upper,
        delta_k_exact,
        delta_k_lower,
        notes,
    })
}

/// |P_q(n)| = Σ_k [n k]_q.
pub fn projective_size(n: usize, q: u32) -> BigUint {
    (0..=n).map(|k| g(n, k, q)).sum()
}

/// |P_q(n)|² / Σ_k Σ_{j<d} Σ_{i≤j} [n−k j−i][k i][n k] q^{i(j−i)}.
pub fn pspace_lower_bound(n: usize, d: usize, q: u32) -> Result<BigRational, BoundsError> {
    if d == 0 || d > n {
        return Err(BoundsError::BadParams("need 1 <= d <= n"));
    }
    let p = projective_size(n, q);
    let mut den = BigUint::zero();
    for k in 0..=n {
        let nk = g(n, k, q);
        for j in 0..d {
            for i in 0..=j {
                let a = gaussian_or_zero((n - k) as i64, (j - i) as i64, q);
                den += a * g(k, i, q) * &nk * pow(q, i * (j - i));
            }
        }
    }
    Ok(BigRational::new(BigInt::from(&p * &p), BigInt::from(den)))
}
