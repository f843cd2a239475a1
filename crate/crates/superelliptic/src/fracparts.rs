//! Fractional-part sums of residue sequences mod a prime, and an
//! exhaustive verifier for the bound they obey.
//!
//! For a prime `p` and residues `1 <= r_1 <= ... <= r_beta <= p-1` with
//! `p | sum r_j`, define
//!
//! ```text
//! H(k) = sum_j { k·r_j / p }        (fractional parts, 1 <= k <= p-1)
//! ```
//!
//! Each `H(k)` is a positive integer, and `H(k) + H(p-k) = beta`.  Let
//! `theta` be the largest `theta <= p-1` with `H(k) = 1` for all
//! `k <= theta` (zero when `H(1) != 1`).  The claim checked here: whenever
//! `theta >= 1`,
//!
//! ```text
//! beta <= p    and    theta <= floor(p / (beta - 1)).
//! ```
//!
//! [`verify_unit_fraction_lemma`] enumerates *every* admissible sequence
//! for the given `p` (optionally past `beta = p`, where the hypothesis is
//! vacuous) and reports per-`beta` statistics, the sequences attaining the
//! bound, and any counterexamples — of which there must be none.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::is_prime;
use crate::{Error, Result};

/// A nondecreasing sequence of nonzero residues mod a prime `p >= 3`,
/// summing to `0 mod p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueSequence {
    p: u64,
    r: Vec<u64>,
}

impl ResidueSequence {
    /// Validates and canonicalizes (sorts) the residues.
    ///
    /// Rejects `p < 3` or composite `p`, empty sequences, residues outside
    /// `1..p`, and sums not divisible by `p`.
    pub fn new(p: u64, mut r: Vec<u64>) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::invalid(format!("p must be a prime >= 3, got {p}")));
        }
        if r.is_empty() {
            return Err(Error::invalid("residue sequence must be nonempty"));
        }
        if let Some(&bad) = r.iter().find(|&&x| x == 0 || x >= p) {
            return Err(Error::invalid(format!(
                "residue must lie in 1..={}, got {bad}",
                p - 1
            )));
        }
        let sum: u64 = r.iter().sum();
        if sum % p != 0 {
            return Err(Error::invalid(format!(
                "residues sum to {sum}, not divisible by p = {p}"
            )));
        }
        r.sort_unstable();
        Ok(ResidueSequence { p, r })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn residues(&self) -> &[u64] {
        &self.r
    }

    pub fn beta(&self) -> u64 {
        self.r.len() as u64
    }
}

/// `H(k)` without the domain re-checks; `k` and all residues must be
/// nonzero mod `p`, which the callers guarantee.
fn h_raw(p: u64, residues: &[u64], k: u64) -> u64 {
    let numerator: u64 = residues.iter().map(|&r| (k * r) % p).sum();
    debug_assert_eq!(numerator % p, 0);
    numerator / p
}

/// The fractional-part sum `H(k) = sum_j { k·r_j / p }`, an exact integer.
/// Rejects `k` outside `1..p`.
pub fn h_value(s: &ResidueSequence, k: u64) -> Result<u64> {
    if k == 0 || k >= s.p {
        return Err(Error::invalid(format!(
            "k must lie in 1..={}, got {k}",
            s.p - 1
        )));
    }
    Ok(h_raw(s.p, &s.r, k))
}

/// The largest `theta <= p-1` with `H(k) = 1` for every `k <= theta`;
/// zero when already `H(1) != 1`.
pub fn theta_of(s: &ResidueSequence) -> u64 {
    theta_raw(s.p, &s.r)
}

fn theta_raw(p: u64, residues: &[u64]) -> u64 {
    // H(1) = (sum r_j)/p, so the hypothesis starts only at sum = p.
    let sum: u64 = residues.iter().sum();
    if sum != p {
        return 0;
    }
    let mut theta = 1;
    while theta < p - 1 && h_raw(p, residues, theta + 1) == 1 {
        theta += 1;
    }
    theta
}

/// Statistics for one sequence length `beta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerBeta {
    pub beta: u64,
    /// Number of admissible sequences of this length.
    pub sequences: u64,
    /// Largest `theta` observed.
    pub max_theta: u64,
    /// The claimed bound `floor(p/(beta-1))`.
    pub bound: u64,
    /// How many sequences attain `theta = bound` exactly.
    pub extremal_count: u64,
    /// The first few extremal sequences in lexicographic order (at most 5).
    pub extremal: Vec<Vec<u64>>,
}

/// Full verification record for one prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub p: u64,
    pub beta_max: u64,
    pub per_beta: Vec<PerBeta>,
    /// Sequences with `theta >= 1` violating `beta <= p` or
    /// `theta <= floor(p/(beta-1))`.  Empty on every verified prime.
    pub counterexamples: Vec<Vec<u64>>,
}

const EXTREMAL_CAP: usize = 5;

#[derive(Default)]
struct ChunkStats {
    sequences: u64,
    max_theta: u64,
    extremal_count: u64,
    extremal: Vec<Vec<u64>>,
    counterexamples: Vec<Vec<u64>>,
}

/// Enumerates every nondecreasing completion of `prefix` to length `beta`
/// over residues `>= min`, keeping only sums `== 0 mod p`, and folds each
/// admissible sequence into the chunk statistics.
fn scan_completions(
    p: u64,
    beta: usize,
    bound: u64,
    min: u64,
    prefix: &mut Vec<u64>,
    sum: u64,
    stats: &mut ChunkStats,
) {
    if prefix.len() == beta {
        if sum % p != 0 {
            return;
        }
        stats.sequences += 1;
        let theta = theta_raw(p, prefix);
        if theta > stats.max_theta {
            stats.max_theta = theta;
        }
        if theta >= 1 && (prefix.len() as u64 > p || theta > bound) {
            stats.counterexamples.push(prefix.clone());
        }
        if theta == bound {
            stats.extremal_count += 1;
            if stats.extremal.len() < EXTREMAL_CAP {
                stats.extremal.push(prefix.clone());
            }
        }
        return;
    }
    for r in min..p {
        prefix.push(r);
        scan_completions(p, beta, bound, r, prefix, sum + r, stats);
        prefix.pop();
    }
}

/// Exhaustively verifies the bound `theta <= floor(p/(beta-1))` (and
/// `beta <= p` for nonzero `theta`) over all admissible residue sequences
/// with `2 <= beta <= beta_max`.
///
/// `beta_max` defaults to `p`; larger values only confirm that the
/// hypothesis `theta >= 1` is unsatisfiable past `beta = p` (it forces
/// `sum r_j = p`, impossible for more than `p` positive residues).
/// Rejects composite or even `p` and `beta_max < 2`.
///
/// The search is chunked by `(beta, r_1)` and the chunks are scanned in
/// parallel; the merged report is deterministic because chunk order is
/// fixed and each chunk enumerates lexicographically.
pub fn verify_unit_fraction_lemma(p: u64, beta_max: Option<u64>) -> Result<LemmaReport> {
    if p < 3 || !is_prime(p) {
        return Err(Error::invalid(format!("p must be a prime >= 3, got {p}")));
    }
    let beta_max = beta_max.unwrap_or(p);
    if beta_max < 2 {
        return Err(Error::invalid(format!(
            "beta_max must be >= 2, got {beta_max}"
        )));
    }

    let mut chunks: Vec<(u64, u64)> = Vec::new();
    for beta in 2..=beta_max {
        for r1 in 1..p {
            chunks.push((beta, r1));
        }
    }

    let results: Vec<((u64, u64), ChunkStats)> = chunks
        .into_par_iter()
        .map(|(beta, r1)| {
            let bound = p / (beta - 1);
            let mut stats = ChunkStats::default();
            let mut prefix = vec![r1];
            scan_completions(p, beta as usize, bound, r1, &mut prefix, r1, &mut stats);
            ((beta, r1), stats)
        })
        .collect();

    let mut per_beta: Vec<PerBeta> = (2..=beta_max)
        .map(|beta| PerBeta {
            beta,
            sequences: 0,
            max_theta: 0,
            bound: p / (beta - 1),
            extremal_count: 0,
            extremal: Vec::new(),
        })
        .collect();
    let mut counterexamples = Vec::new();
    for ((beta, _r1), stats) in results {
        let entry = &mut per_beta[(beta - 2) as usize];
        entry.sequences += stats.sequences;
        entry.max_theta = entry.max_theta.max(stats.max_theta);
        entry.extremal_count += stats.extremal_count;
        for seq in stats.extremal {
            if entry.extremal.len() < EXTREMAL_CAP {
                entry.extremal.push(seq);
            }
        }
        counterexamples.extend(stats.counterexamples);
    }

    Ok(LemmaReport {
        p,
        beta_max,
        per_beta,
        counterexamples,
    })
}
