//! Eigenspace ranks of the Hodge bundle and the constraints on its
//! ample/flat decomposition.
//!
//! The cyclic group of order `n` acts on a family of covers `y^n = F(x)`,
//! splitting the Hodge bundle into `n - 1` eigenbundles.  The rank `e_i` of
//! the `i`-th eigenbundle is a pure function of `(n, alpha0)`:
//!
//! ```text
//! e_i = (n-i)·alpha0/n - 1          if n | (n-i)·alpha0,
//!       floor((n-i)·alpha0/n)       otherwise,
//! ```
//!
//! and the same numbers are computed independently by the general
//! branched-cover dimension formula [`cw_dimension`], which serves as the
//! oracle in the test suites.  Each eigenbundle further splits into an
//! ample part of rank `a_i` and a flat part of rank `f_i`; the admissible
//! `(a, f)` pairs are constrained by symmetry and vanishing rules that
//! [`validate_higgs`] checks one by one.

use serde::Serialize;

use crate::cover::SuperellipticDatum;
use crate::{Error, Result};

/// Rank of the `i`-th eigenspace of the Hodge bundle, `1 <= i <= n-1`.
pub fn eigen_rank(d: &SuperellipticDatum, i: u64) -> Result<u64> {
    if i == 0 || i >= d.n {
        return Err(Error::invalid(format!(
            "eigenspace index must lie in 1..={}, got {i}",
            d.n - 1
        )));
    }
    let m = (d.n - i) * d.alpha0;
    if m % d.n == 0 {
        Ok(m / d.n - 1)
    } else {
        Ok(m / d.n)
    }
}

/// The full vector `(e_1, ..., e_{n-1})` of eigenspace ranks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenRankVector {
    pub datum: SuperellipticDatum,
    /// `e[k]` is the rank of eigenspace `k + 1`.
    pub e: Vec<u64>,
}

impl EigenRankVector {
    /// Rank of eigenspace `i`, `1 <= i <= n-1`.
    ///
    /// # Panics
    ///
    /// Panics if `i` is out of range.
    pub fn get(&self, i: u64) -> u64 {
        self.e[(i - 1) as usize]
    }
}

/// Computes all eigenspace ranks and re-verifies the defining identity
/// `sum_i e_i = g`; a mismatch is an internal error, never a value.
pub fn eigen_rank_vector(d: &SuperellipticDatum) -> Result<EigenRankVector> {
    let e: Vec<u64> = (1..d.n)
        .map(|i| eigen_rank(d, i))
        .collect::<Result<_>>()?;
    let total: u64 = e.iter().sum();
    if total != d.g {
        return Err(Error::identity(format!(
            "eigenspace ranks sum to {total}, genus is {} for (n, alpha0) = ({}, {})",
            d.g, d.n, d.alpha0
        )));
    }
    Ok(EigenRankVector { datum: d.clone(), e })
}

/// Dimension of the `i`-th eigenspace of holomorphic differentials on the
/// cyclic cover of the line determined by branch residues `residues`
/// (each in `1..n`, summing to `0 mod n`):
///
/// ```text
/// dim_i = -1 + sum_j { -i·r_j / n }
/// ```
///
/// where `{x}` is the fractional part.  Rejects fewer than three branch
/// points, any residue outside `1..n`, residue sums not divisible by `n`,
/// and disconnected covers (residues sharing a factor with `n`), for which
/// the formula does not apply.
pub fn cw_dimension(n: u64, residues: &[u64], i: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::invalid(format!("n must be >= 2, got {n}")));
    }
    if i == 0 || i >= n {
        return Err(Error::invalid(format!(
            "character index must lie in 1..={}, got {i}",
            n - 1
        )));
    }
    if residues.len() < 3 {
        return Err(Error::invalid(format!(
            "need at least 3 branch points, got {}",
            residues.len()
        )));
    }
    let mut sum = 0u64;
    let mut common = n;
    for &r in residues {
        if r == 0 || r >= n {
            return Err(Error::invalid(format!(
                "residue must lie in 1..={}, got {r}",
                n - 1
            )));
        }
        sum += r;
        common = num::integer::gcd(common, r);
    }
    if sum % n != 0 {
        return Err(Error::invalid(format!(
            "residues sum to {sum}, not divisible by n = {n}"
        )));
    }
    if common != 1 {
        return Err(Error::invalid(format!(
            "residues share the factor {common} with n; the cover is disconnected"
        )));
    }
    // { -i·r/n } = ((n - i·r mod n) mod n) / n; accumulate the numerators.
    let numerator: u64 = residues.iter().map(|&r| (n - (i * r) % n) % n).sum();
    if numerator % n != 0 {
        return Err(Error::identity(format!(
            "fractional parts summed to {numerator}/{n}, which is not an integer"
        )));
    }
    (numerator / n)
        .checked_sub(1)
        .ok_or_else(|| Error::identity("dimension formula produced -1 on a connected cover"))
}

/// A failed constraint, reported rather than panicked so a caller can see
/// every defect of a candidate object at once.
///
/// `constraint` is an opaque stable label (e.g. `"3-102"`, `"orbit"`,
/// `"3-55"`), `i` the index at which the constraint failed when one
/// applies, and `detail` a human-readable account with the numbers in it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub constraint: String,
    pub i: Option<u64>,
    pub detail: String,
}

impl Violation {
    pub(crate) fn new(constraint: &str, i: Option<u64>, detail: String) -> Self {
        Violation {
            constraint: constraint.to_string(),
            i,
            detail,
        }
    }
}

/// A candidate splitting of each eigenspace into an ample part of rank
/// `a_i` and a flat part of rank `f_i`.
///
/// Entries are signed so that malformed candidates (e.g. parsed from a
/// hand-written document) can be represented and then rejected by
/// [`validate_higgs`] instead of being unrepresentable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HiggsRankDecomposition {
    pub ranks: EigenRankVector,
    /// `a[k]` is the ample rank at eigenspace `k + 1`.
    pub a: Vec<i64>,
    /// `f[k]` is the flat rank at eigenspace `k + 1`.
    pub f: Vec<i64>,
}

impl HiggsRankDecomposition {
    /// Pairs a rank vector with candidate ample/flat parts; the two vectors
    /// must cover exactly the indices `1..=n-1`.
    pub fn from_parts(ranks: EigenRankVector, a: Vec<i64>, f: Vec<i64>) -> Result<Self> {
        let want = ranks.e.len();
        if a.len() != want || f.len() != want {
            return Err(Error::invalid(format!(
                "expected {want} ample and flat entries (indices 1..={}), got {} and {}",
                ranks.datum.n - 1,
                a.len(),
                f.len()
            )));
        }
        Ok(HiggsRankDecomposition { ranks, a, f })
    }

    fn a_at(&self, i: u64) -> i64 {
        self.a[(i - 1) as usize]
    }

    fn f_at(&self, i: u64) -> i64 {
        self.f[(i - 1) as usize]
    }
}

/// Checks a candidate decomposition against every structural constraint:
///
/// * `nonneg` — all `a_i` and `f_i` are nonnegative;
/// * `a+f=e` — the parts fill each eigenspace exactly;
/// * `3-102` — ample ranks are symmetric, `a_i = a_{n-i}`;
/// * `3-171` — `e_i > e_{n-i}` forces a nonzero flat part `f_i > 0`;
/// * `3-172` — for `i >= n/2` the flat ranks satisfy `f_{n-i} >= f_i`.
///
/// Returns all violations; an admissible decomposition yields an empty
/// list.
pub fn validate_higgs(h: &HiggsRankDecomposition) -> Vec<Violation> {
    let n = h.ranks.datum.n;
    let mut out = Vec::new();
    for i in 1..n {
        let (a, f, e) = (h.a_at(i), h.f_at(i), h.ranks.get(i) as i64);
        if a < 0 || f < 0 {
            out.push(Violation::new(
                "nonneg",
                Some(i),
                format!("a_{i} = {a}, f_{i} = {f} must both be nonnegative"),
            ));
        }
        if a + f != e {
            out.push(Violation::new(
                "a+f=e",
                Some(i),
                format!("a_{i} + f_{i} = {} but e_{i} = {e}", a + f),
            ));
        }
        let j = n - i;
        if i < j && a != h.a_at(j) {
            out.push(Violation::new(
                "3-102",
                Some(i),
                format!("a_{i} = {a} differs from a_{j} = {}", h.a_at(j)),
            ));
        }
        if h.ranks.get(i) > h.ranks.get(j) && f <= 0 {
            out.push(Violation::new(
                "3-171",
                Some(i),
                format!(
                    "e_{i} = {} > e_{j} = {} forces f_{i} > 0, got {f}",
                    h.ranks.get(i),
                    h.ranks.get(j)
                ),
            ));
        }
        if 2 * i >= n && h.f_at(j) < f {
            out.push(Violation::new(
                "3-172",
                Some(i),
                format!("f_{j} = {} < f_{i} = {f} with i >= n/2", h.f_at(j)),
            ));
        }
    }
    out
}

/// Checks the orbit constraint on a candidate family of twist exponents
/// `t_1, ..., t_{n-1}`: whenever `i` and `j` lie in the same orbit of the
/// unit group `(Z/n)^*`, the sums `t_i + t_{n-i}` and `t_j + t_{n-j}` must
/// agree.  `t` must cover exactly the indices `1..=n-1`.
pub fn orbit_trivial_constraint(n: u64, t: &[u64]) -> Result<Vec<Violation>> {
    if n < 2 {
        return Err(Error::invalid(format!("n must be >= 2, got {n}")));
    }
    if t.len() as u64 != n - 1 {
        return Err(Error::invalid(format!(
            "expected {} entries (indices 1..={}), got {}",
            n - 1,
            n - 1,
            t.len()
        )));
    }
    let pair_sum = |i: u64| t[(i - 1) as usize] + t[(n - i - 1) as usize];
    let mut out = Vec::new();
    for orbit in crate::arith::unit_orbits(n) {
        let rep = orbit[0];
        let base = pair_sum(rep);
        for &i in &orbit[1..] {
            let s = pair_sum(i);
            if s != base {
                out.push(Violation::new(
                    "orbit",
                    Some(i),
                    format!(
                        "t_{i} + t_{} = {s} differs from t_{rep} + t_{} = {base} \
                         within one unit orbit",
                        n - i,
                        n - rep
                    ),
                ));
            }
        }
    }
    Ok(out)
}
