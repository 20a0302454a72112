//! Operator channel: erase ρ dimensions, add a t-dimensional error space, decode by minimum subspace distance.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::distance::{distance_fast, id_hamming};
use crate::matgf::MatGF;
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChannelError {
    #[error("infeasible channel parameters: {0}")]
    InfeasibleParams(&'static str),
    #[error("the code has no codewords")]
    EmptyCode,
}

/// Tries per error vector before giving up on finding one outside the current span.
pub const ERROR_RETRY_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChannelConfig {
    pub rho: usize,
    pub t: usize,
    pub seed: u64,
    pub trials: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialOutcome {
    pub index: usize,
    pub sent: Subspace,
    pub received: Subspace,
    pub decoded: Option<Subspace>,
    pub success: bool,
    /// d_s(sent, received).
    pub channel_distance: usize,
    /// d_s(received, decoded).
    pub decode_distance: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationReport {
    pub trials: usize,
    pub successes: usize,
    pub outcomes: Vec<TrialOutcome>,
}

impl SimulationReport {
    pub fn success_rate(&self) -> f64 {
        if self.trials == 0 {
            return 1.0;
        }
        self.successes as f64 / self.trials as f64
    }
}

fn random_matrix<R: Rng>(rng: &mut R, f: &alloc::sync::Arc<crate::ff::FieldSpec>, rows: usize, cols: usize) -> MatGF {
    let data = (0..rows * cols).map(|_| rng.gen_range(0..f.order())).collect();
    MatGF::from_flat(f.clone(), rows, cols, data)
}

/// H(V) ⊕ E with H(V) a uniformly random (dim V − ρ)-subspace of V and E a random t-space meeting it trivially.
pub fn transmit<R: Rng>(v: &Subspace, rho: usize, t: usize, rng: &mut R) -> Result<Subspace, ChannelError> {
    let (n, k) = (v.n(), v.dim());
    if rho > k {
        return Err(ChannelError::InfeasibleParams("more erasures than dimensions"));
    }
    let kept = k - rho;
    if t > n - kept {
        return Err(ChannelError::InfeasibleParams("error dimension exceeds the room left in the ambient space"));
    }
    let f = v.field().clone();
    let coeffs = loop {
        let a = random_matrix(rng, &f, kept, k);
        if a.rank() == kept {
            break a;
        }
    };
    let mut rows = coeffs.mul(v.gen()).expect("k columns");
    for _ in 0..t {
        let mut added = false;
        for _ in 0..ERROR_RETRY_CAP {
            let e = random_matrix(rng, &f, 1, n);
            let cand = rows.vconcat(&e).expect("n columns");
            if cand.rank() == rows.rank() + 1 {
                rows = cand;
                added = true;
                break;
            }
        }
        if !added {
            return Err(ChannelError::InfeasibleParams("no independent error vector within the retry cap"));
        }
    }
    Ok(Subspace::from_matrix(&rows))
}

/// Row space of the received packet matrix.
pub fn packets_to_subspace(received: &MatGF) -> Subspace {
    Subspace::from_matrix(received)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decoded {
    pub index: usize,
    pub distance: usize,
}

/// Nearest codeword, first in code order on ties. Codewords whose identifying vectors are already
/// at least the best distance away are skipped, since d_s ≥ d_H of identifying vectors.
pub fn min_distance_decode(code: &[Subspace], u: &Subspace) -> Option<Decoded> {
    let mut best: Option<Decoded> = None;
    for (index, c) in code.iter().enumerate() {
        if let Some(b) = best {
            if id_hamming(c, u) >= b.distance {
                continue;
            }
        }
        let distance = distance_fast(c, u).ok()?;
        if best.is_none_or(|b| distance < b.distance) {
            best = Some(Decoded { index, distance });
            if distance == 0 {
                break;
            }
        }
    }
    best
}

/// Full scan without the prefilter.
pub fn min_distance_decode_exhaustive(code: &[Subspace], u: &Subspace) -> Option<Decoded> {
    let mut best: Option<Decoded> = None;
    for (index, c) in code.iter().enumerate() {
        let distance = distance_fast(c, u).ok()?;
        if best.is_none_or(|b| distance < b.distance) {
            best = Some(Decoded { index, distance });
        }
    }
    best
}

/// RNG for trial r: the seed's ChaCha8 generator on stream r.
pub fn trial_rng(seed: u64, r: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(r);
    rng
}

/// Check that every codeword can pass through the channel with these parameters.
pub fn check_feasible(code: &[Subspace], rho: usize, t: usize) -> Result<(), ChannelError> {
    let first = code.first().ok_or(ChannelError::EmptyCode)?;
    let n = first.n();
    let min_dim = code.iter().map(Subspace::dim).min().expect("non-empty");
    let max_dim = code.iter().map(Subspace::dim).max().expect("non-empty");
    if rho > min_dim {
        return Err(ChannelError::InfeasibleParams("more erasures than the smallest codeword dimension"));
    }
    if t > n - (max_dim - rho) {
        return Err(ChannelError::InfeasibleParams("error dimension exceeds the room left in the ambient space"));
    }
    Ok(())
}

/// One trial: uniform codeword, transmit, decode.
pub fn run_trial(code: &[Subspace], cfg: &ChannelConfig, r: u64) -> Result<TrialOutcome, ChannelError> {
    let mut rng = trial_rng(cfg.seed, r);
    let index = rng.gen_range(0..code.len());
    let sent = code[index].clone();
    let received = transmit(&sent, cfg.rho, cfg.t, &mut rng)?;
    let dec = min_distance_decode(code, &received);
    let decoded = dec.map(|d| code[d.index].clone());
    let success = decoded.as_ref() == Some(&sent);
    let channel_distance = distance_fast(&sent, &received).expect("same ambient");
    Ok(TrialOutcome { index, sent, received, decoded, success, channel_distance, decode_distance: dec.map(|d| d.distance) })
}

pub fn simulate(code: &[Subspace], cfg: &ChannelConfig) -> Result<SimulationReport, ChannelError> {
    check_feasible(code, cfg.rho, cfg.t)?;
    let outcomes = (0..cfg.trials as u64).map(|r| run_trial(code, cfg, r)).collect::<Result<Vec<_>, _>>()?;
    Ok(summarize(outcomes))
}

/// Aggregate outcomes (in trial order).
pub fn summarize(outcomes: Vec<TrialOutcome>) -> SimulationReport {
    let successes = outcomes.iter().filter(|o| o.success).count();
    SimulationReport { trials: outcomes.len(), successes, outcomes }
}
