//! Semi-stable families of superelliptic curves: singularity index tables,
//! their exact relative invariants, and the slope bounds built from them.
//!
//! A semi-stable fibration of superelliptic curves degenerates over finitely
//! many points of the base.  Each singular fiber is described by local
//! indices `(gamma, ell, k)`: `gamma` counts the branch points colliding at
//! the node (`2 <= gamma <= floor(alpha/2)`), `ell` is the local cyclic
//! order determined by `gamma` — `ell = gcd(gamma, n)` for the plain count
//! `s_{gamma,ell}` (`k = 0`) and `ell = gcd(alpha - gamma, n)` for the
//! complementary count `s'_{gamma,ell}` (`k = 1`) — and the table records
//! how many fibers realize each index.  From the table alone the three
//! relative invariants
//!
//! ```text
//! omega^2   (relative self-intersection of the dualizing sheaf)
//! deg       (degree of the Hodge bundle)
//! delta     (total number of nodes)
//! ```
//!
//! are exact rationals, linked by the Noether identity
//! `12·deg = omega^2 + delta`, which this module re-verifies on every
//! computation.  Nodes further decompose by type (`delta_0` for
//! non-separating, `delta_1, delta_2, ...` by the genus split of the
//! separating ones), feeding the slope inequality
//! `omega^2 >= lambda·deg + 2·delta_1 + 3·delta_h`.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::Rational;
use crate::cover::SuperellipticDatum;
use crate::hodge::Violation;
use crate::{Error, Result};

/// Which slope constant applies: `Compact` for families whose base meets no
/// boundary point with unipotent monodromy of infinite order, `Noncompact`
/// for irregular families of degree 3 or 4 over a base with such points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Compact,
    Noncompact,
}

impl FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "compact" => Ok(Regime::Compact),
            "noncompact" => Ok(Regime::Noncompact),
            other => Err(Error::invalid(format!(
                "regime must be \"compact\" or \"noncompact\", got {other:?}"
            ))),
        }
    }
}

/// One cell of a singularity index table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexEntry {
    pub gamma: u64,
    pub ell: u64,
    pub count: u64,
}

/// Multiplicities of singular-fiber types for a family with a fixed cover
/// datum.
///
/// The table stores the nonzero counts `s_{gamma,ell}` and
/// `s'_{gamma,ell}`.  Construction is permissive — any cell can be written —
/// and [`validate_indices`] reports every admissibility defect; the
/// invariant computations reject tables with *structural* defects
/// (`gamma` out of range, `ell` not matching its gcd rule, complementary
/// counts present although `n | alpha`) but tolerate cells that merely fail
/// the realizability divisibility `n·s / ell^2 ∈ Z`, so that hypothetical
/// tables can still be evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityIndexTable {
    datum: SuperellipticDatum,
    s: BTreeMap<(u64, u64), u64>,
    s_prime: BTreeMap<(u64, u64), u64>,
}

impl SingularityIndexTable {
    /// An empty table (a smooth family) over the given datum.
    pub fn new(datum: SuperellipticDatum) -> Self {
        SingularityIndexTable {
            datum,
            s: BTreeMap::new(),
            s_prime: BTreeMap::new(),
        }
    }

    /// Builds a table from explicit `(gamma, ell, count)` cells; duplicate
    /// cells accumulate.
    pub fn from_parts(
        n: u64,
        alpha0: u64,
        s: &[(u64, u64, u64)],
        s_prime: &[(u64, u64, u64)],
    ) -> Result<Self> {
        let mut t = SingularityIndexTable::new(SuperellipticDatum::new(n, alpha0)?);
        for &(gamma, ell, count) in s {
            t.add_s(gamma, ell, count);
        }
        for &(gamma, ell, count) in s_prime {
            t.add_s_prime(gamma, ell, count);
        }
        Ok(t)
    }

    pub fn datum(&self) -> &SuperellipticDatum {
        &self.datum
    }

    /// Adds `count` fibers of plain index `(gamma, ell)`.
    pub fn add_s(&mut self, gamma: u64, ell: u64, count: u64) {
        if count > 0 {
            *self.s.entry((gamma, ell)).or_insert(0) += count;
        }
    }

    /// Adds `count` fibers of complementary index `(gamma, ell)`.
    pub fn add_s_prime(&mut self, gamma: u64, ell: u64, count: u64) {
        if count > 0 {
            *self.s_prime.entry((gamma, ell)).or_insert(0) += count;
        }
    }

    pub fn count_s(&self, gamma: u64, ell: u64) -> u64 {
        self.s.get(&(gamma, ell)).copied().unwrap_or(0)
    }

    pub fn count_s_prime(&self, gamma: u64, ell: u64) -> u64 {
        self.s_prime.get(&(gamma, ell)).copied().unwrap_or(0)
    }

    /// Nonzero plain cells in `(gamma, ell)` order.
    pub fn s_entries(&self) -> impl Iterator<Item = (u64, u64, u64)> + '_ {
        self.s.iter().map(|(&(g, l), &c)| (g, l, c))
    }

    /// Nonzero complementary cells in `(gamma, ell)` order.
    pub fn s_prime_entries(&self) -> impl Iterator<Item = (u64, u64, u64)> + '_ {
        self.s_prime.iter().map(|(&(g, l), &c)| (g, l, c))
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty() && self.s_prime.is_empty()
    }
}

impl Serialize for SingularityIndexTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let collect = |m: &BTreeMap<(u64, u64), u64>| -> Vec<IndexEntry> {
            m.iter()
                .map(|(&(gamma, ell), &count)| IndexEntry { gamma, ell, count })
                .collect()
        };
        let mut out = serializer.serialize_struct("SingularityIndexTable", 4)?;
        out.serialize_field("n", &self.datum.n)?;
        out.serialize_field("alpha0", &self.datum.alpha0)?;
        out.serialize_field("s", &collect(&self.s))?;
        out.serialize_field("s_prime", &collect(&self.s_prime))?;
        out.end()
    }
}

impl<'de> Deserialize<'de> for SingularityIndexTable {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: u64,
            alpha0: u64,
            #[serde(default)]
            s: Vec<IndexEntry>,
            #[serde(default)]
            s_prime: Vec<IndexEntry>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let s: Vec<(u64, u64, u64)> = raw.s.iter().map(|e| (e.gamma, e.ell, e.count)).collect();
        let sp: Vec<(u64, u64, u64)> = raw
            .s_prime
            .iter()
            .map(|e| (e.gamma, e.ell, e.count))
            .collect();
        SingularityIndexTable::from_parts(raw.n, raw.alpha0, &s, &sp)
            .map_err(serde::de::Error::custom)
    }
}

/// Checks every cell of the table and reports all defects:
///
/// * `gamma-range` — `gamma` outside `2 ..= floor(alpha/2)`;
/// * `3-44` — `ell` differs from `gcd(gamma, n)` (plain cells) or
///   `gcd(alpha - gamma, n)` (complementary cells);
/// * `3-54` — a complementary cell is present although `n | alpha`;
/// * `3-55` — the realizability divisibility fails: `n·count / ell^2` is
///   not an integer, so no actual family produces this cell multiplicity.
///
/// The first three are structural (the invariant formulas do not apply);
/// the last is a realizability defect that still permits evaluation.
pub fn validate_indices(t: &SingularityIndexTable) -> Vec<Violation> {
    let d = t.datum();
    let mut out = Vec::new();
    let mut check = |gamma: u64, ell: u64, count: u64, prime: bool| {
        let label = if prime { "s'" } else { "s" };
        if gamma < 2 || gamma > d.alpha / 2 {
            out.push(Violation::new(
                "gamma-range",
                Some(gamma),
                format!(
                    "{label}_{{{gamma},{ell}}}: gamma must lie in 2..={}, got {gamma}",
                    d.alpha / 2
                ),
            ));
        }
        let want = if prime {
            num::integer::gcd(d.alpha.saturating_sub(gamma), d.n)
        } else {
            num::integer::gcd(gamma, d.n)
        };
        if ell != want {
            out.push(Violation::new(
                "3-44",
                Some(gamma),
                format!("{label}_{{{gamma},{ell}}}: ell must equal {want}"),
            ));
        }
        if prime && d.alpha % d.n == 0 {
            out.push(Violation::new(
                "3-54",
                Some(gamma),
                format!(
                    "s'_{{{gamma},{ell}}} present although n = {} divides alpha = {}",
                    d.n, d.alpha
                ),
            ));
        }
        if ell >= 1 && (d.n * count) % (ell * ell) != 0 {
            out.push(Violation::new(
                "3-55",
                Some(gamma),
                format!(
                    "{label}_{{{gamma},{ell}}} = {count}: n·count = {} is not divisible by \
                     ell^2 = {}, so the multiplicity is not realizable",
                    d.n * count,
                    ell * ell
                ),
            ));
        }
    };
    for (gamma, ell, count) in t.s_entries() {
        check(gamma, ell, count, false);
    }
    for (gamma, ell, count) in t.s_prime_entries() {
        check(gamma, ell, count, true);
    }
    out
}

fn structural_violations(t: &SingularityIndexTable) -> Vec<Violation> {
    validate_indices(t)
        .into_iter()
        .filter(|v| v.constraint != "3-55")
        .collect()
}

fn require_structurally_admissible(t: &SingularityIndexTable) -> Result<()> {
    let bad = structural_violations(t);
    if bad.is_empty() {
        Ok(())
    } else {
        let details: Vec<String> = bad.iter().map(|v| v.detail.clone()).collect();
        Err(Error::invalid(format!(
            "inadmissible index table: {}",
            details.join("; ")
        )))
    }
}

/// The base coefficient of a singular fiber with `gamma` colliding branch
/// points:
///
/// ```text
/// b_gamma = (n^2 - 1)·gamma·(alpha - gamma)/(alpha - 1) - n^2
/// ```
///
/// Rejects `gamma` outside `2 ..= floor(alpha/2)`.
pub fn b_gamma(d: &SuperellipticDatum, gamma: u64) -> Result<Rational> {
    if gamma < 2 || gamma > d.alpha / 2 {
        return Err(Error::invalid(format!(
            "gamma must lie in 2..={}, got {gamma}",
            d.alpha / 2
        )));
    }
    let n2 = Rational::from(d.n * d.n);
    let num = Rational::from((d.n * d.n - 1) * gamma * (d.alpha - gamma));
    Ok(num / Rational::from(d.alpha - 1) - n2)
}

/// The three relative invariants of the family, with the node count split
/// by type.  All values are exact rationals; integrality of `delta` and its
/// parts reflects that they count nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelativeInvariants {
    pub omega2: Rational,
    pub deg_hodge: Rational,
    pub delta: Rational,
    pub delta0: Rational,
    pub delta1: Rational,
    pub deltah: Rational,
}

/// Node counts by type: `delta0` non-separating, `by_type[i]` separating
/// of type `i >= 1` (the partial normalization splits into genera `i` and
/// `g - i`), with `delta1 = by_type[1]` and `deltah` the sum over types
/// `>= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaDecomposition {
    pub delta0: u64,
    pub delta1: u64,
    pub deltah: u64,
    pub by_type: BTreeMap<u64, u64>,
}

/// Correction terms entering the invariant formulas when `n` does not
/// divide `alpha`; both vanish identically when `r_inf = n`.
fn corrections(d: &SuperellipticDatum, gamma: u64) -> (Rational, Rational) {
    let r2 = d.r_inf * d.r_inf;
    let scale = Rational::from(d.n * d.n - r2)
        / Rational::from(r2 * (d.alpha - 1) * (d.alpha - 2));
    let c = scale.clone() * Rational::from(gamma * (gamma - 1));
    let c_prime = scale * Rational::from((d.alpha - gamma) * (d.alpha - gamma - 1));
    (c, c_prime)
}

/// Computes `omega^2`, `deg` and `delta` for the family described by the
/// table, together with the node-type split.
///
/// For `n | alpha` each plain cell contributes `b_gamma·s/ell^2` to
/// `omega^2`, `(b_gamma + ell^2)·s/(12·ell^2)` to `deg`, and `s` to
/// `delta`; otherwise the coefficients acquire the correction terms
/// `C_gamma` (plain) and `C'_gamma` (complementary).  The Noether identity
/// `12·deg = omega^2 + delta` is re-verified and a mismatch aborts with an
/// internal error.
///
/// Rejects structurally inadmissible tables; see [`validate_indices`].
pub fn relative_invariants(t: &SingularityIndexTable) -> Result<RelativeInvariants> {
    require_structurally_admissible(t)?;
    let d = t.datum();
    let mut omega2 = Rational::zero();
    let mut deg12 = Rational::zero(); // 12 · deg
    let mut delta = Rational::zero();
    let exact = d.alpha % d.n == 0;
    let mut accumulate = |gamma: u64, ell: u64, count: u64, prime: bool| -> Result<()> {
        let b = b_gamma(d, gamma)?;
        let correction = if exact {
            Rational::zero()
        } else {
            let (c, c_prime) = corrections(d, gamma);
            if prime {
                c_prime
            } else {
                c
            }
        };
        let weight = Rational::from(count) / Rational::from(ell * ell);
        let cell = (b.clone() - correction) * weight.clone();
        omega2 = omega2.clone() + cell.clone();
        deg12 = deg12.clone() + cell + Rational::from(ell * ell) * weight;
        delta = delta.clone() + Rational::from(count);
        Ok(())
    };
    for (gamma, ell, count) in t.s_entries() {
        accumulate(gamma, ell, count, false)?;
    }
    for (gamma, ell, count) in t.s_prime_entries() {
        accumulate(gamma, ell, count, true)?;
    }
    let deg_hodge = deg12 / Rational::from(12u64);

    let noether = Rational::from(12u64) * deg_hodge.clone() - omega2.clone() - delta.clone();
    if !noether.is_zero() {
        return Err(Error::identity(format!(
            "Noether identity failed: 12·deg - omega^2 - delta = {noether}"
        )));
    }

    let dec = delta_decomposition(t)?;
    let parts = Rational::from(dec.delta0) + Rational::from(dec.delta1)
        + Rational::from(dec.deltah);
    if parts != delta {
        return Err(Error::identity(format!(
            "node-type split {parts} does not reassemble delta = {delta}"
        )));
    }

    Ok(RelativeInvariants {
        omega2,
        deg_hodge,
        delta,
        delta0: Rational::from(dec.delta0),
        delta1: Rational::from(dec.delta1),
        deltah: Rational::from(dec.deltah),
    })
}

/// Splits the node count by type.
///
/// Cells with `ell > 1` are non-separating (`delta0`).  A plain cell with
/// `ell = 1` separates off a component of genus `(n-1)(gamma-1)/2`; a
/// complementary cell with `ell = 1` separates off genus
/// `g - (n-1)(alpha-gamma-1)/2`, except that when `r_inf = n` the two
/// coincide and both land on the plain value.  Types are normalized to
/// `min(x, g - x)` so they index `1 ..= floor(g/2)`.
///
/// Rejects structurally inadmissible tables.
pub fn delta_decomposition(t: &SingularityIndexTable) -> Result<DeltaDecomposition> {
    require_structurally_admissible(t)?;
    let d = t.datum();
    let mut delta0 = 0u64;
    let mut by_type: BTreeMap<u64, u64> = BTreeMap::new();

    let mut separate = |raw: u64, count: u64| -> Result<()> {
        if raw == 0 || raw >= d.g {
            return Err(Error::identity(format!(
                "separating node of impossible genus split {raw} (g = {})",
                d.g
            )));
        }
        let ty = raw.min(d.g - raw);
        *by_type.entry(ty).or_insert(0) += count;
        Ok(())
    };

    for (gamma, ell, count) in t.s_entries() {
        if ell > 1 {
            delta0 += count;
        } else {
            separate((d.n - 1) * (gamma - 1) / 2, count)?;
        }
    }
    for (gamma, ell, count) in t.s_prime_entries() {
        if ell > 1 {
            delta0 += count;
        } else if d.r_inf == d.n {
            separate((d.n - 1) * (gamma - 1) / 2, count)?;
        } else {
            separate(d.g - (d.n - 1) * (d.alpha - gamma - 1) / 2, count)?;
        }
    }

    let delta1 = by_type.get(&1).copied().unwrap_or(0);
    let deltah = by_type
        .iter()
        .filter(|&(&ty, _)| ty >= 2)
        .map(|(_, &c)| c)
        .sum();
    Ok(DeltaDecomposition {
        delta0,
        delta1,
        deltah,
        by_type,
    })
}

/// The compact-regime slope constant, as a function of the adjusted branch
/// count `alpha` of the datum:
///
/// ```text
/// 12 - 9(alpha-1)/(2(alpha-3))                      n = 3, alpha >= 6
/// 12 - 3(alpha-1)/(alpha-3)                         n = 4, alpha = 4k+3
/// 12 - 48(alpha-1)/((n^2 - (n/d)^2)(alpha-3))       otherwise
/// ```
///
/// with `d = n` when `n | alpha` and `d = n/gcd(n, alpha0)` otherwise.
/// Rejects `alpha <= 3`, where the constant is undefined.
pub fn lambda_compact(d: &SuperellipticDatum) -> Result<Rational> {
    let alpha = d.alpha;
    if alpha <= 3 {
        return Err(Error::invalid(format!(
            "slope constant undefined for alpha = {alpha} <= 3"
        )));
    }
    let twelve = Rational::from(12u64);
    if d.n == 3 && alpha >= 6 {
        return Ok(twelve
            - Rational::from(9 * (alpha - 1)) / Rational::from(2 * (alpha - 3)));
    }
    if d.n == 4 && alpha % 4 == 3 && alpha >= 7 {
        return Ok(twelve - Rational::from(3 * (alpha - 1)) / Rational::from(alpha - 3));
    }
    let dd = if alpha % d.n == 0 {
        d.n
    } else {
        d.n / num::integer::gcd(d.n, d.alpha0)
    };
    let side = d.n / dd;
    let denom = (d.n * d.n - side * side) * (alpha - 3);
    debug_assert!(denom > 0);
    Ok(twelve - Rational::from(48 * (alpha - 1)) / Rational::from(denom))
}

/// The noncompact-regime slope constant for irregular families of degree 3
/// or 4, again as a function of `alpha`:
///
/// ```text
/// n = 3:  (6·alpha - 18)/(alpha - 2)       alpha = 3k+2, k >= 2
///         (15·alpha - 63)/(2(alpha - 3))   otherwise
/// n = 4:  (6·alpha - 16)/(alpha - 3)       alpha = 4k+2, k >= 1
///         (9·alpha - 33)/(alpha - 3)       otherwise
/// ```
///
/// Rejects `n` other than 3 or 4 and `alpha <= 3`.
pub fn lambda_noncompact(n: u64, alpha0: u64) -> Result<Rational> {
    if n != 3 && n != 4 {
        return Err(Error::invalid(format!(
            "noncompact slope constant only exists for n = 3 or 4, got {n}"
        )));
    }
    let d = SuperellipticDatum::new(n, alpha0)?;
    let alpha = d.alpha;
    if alpha <= 3 {
        return Err(Error::invalid(format!(
            "slope constant undefined for alpha = {alpha} <= 3"
        )));
    }
    let value = if n == 3 {
        if alpha % 3 == 2 && alpha >= 8 {
            Rational::from(6 * alpha - 18) / Rational::from(alpha - 2)
        } else {
            Rational::from(15 * alpha - 63) / Rational::from(2 * (alpha - 3))
        }
    } else if alpha % 4 == 2 && alpha >= 6 {
        Rational::from(6 * alpha - 16) / Rational::from(alpha - 3)
    } else {
        Rational::from(9 * alpha - 33) / Rational::from(alpha - 3)
    };
    Ok(value)
}

/// Slope deficit of the family:
///
/// ```text
/// omega^2 - lambda·deg - 2·delta_1 - 3·delta_h
/// ```
///
/// with `lambda` the constant of the chosen regime.  Nonnegativity of the
/// deficit is the slope inequality.  The compact regime requires
/// `delta_0 = 0` and `g >= n`; the noncompact regime requires `n` in
/// `{3, 4}` and `g >= 4`.
pub fn slope_deficit(t: &SingularityIndexTable, regime: Regime) -> Result<Rational> {
    let d = t.datum().clone();
    let lambda = match regime {
        Regime::Compact => {
            if d.g < d.n {
                return Err(Error::invalid(format!(
                    "compact regime requires g >= n, got g = {} < n = {}",
                    d.g, d.n
                )));
            }
            lambda_compact(&d)?
        }
        Regime::Noncompact => {
            if d.g < 4 {
                return Err(Error::invalid(format!(
                    "noncompact regime requires g >= 4, got g = {}",
                    d.g
                )));
            }
            lambda_noncompact(d.n, d.alpha0)?
        }
    };
    let inv = relative_invariants(t)?;
    if regime == Regime::Compact && !inv.delta0.is_zero() {
        return Err(Error::invalid(format!(
            "compact regime requires delta0 = 0, got {}",
            inv.delta0
        )));
    }
    Ok(inv.omega2
        - lambda * inv.deg_hodge
        - Rational::from(2u64) * inv.delta1
        - Rational::from(3u64) * inv.deltah)
}

/// Result of the irregular-fibration feasibility test: the two linear
/// inequalities a complementary count `s'_{2,n}` must satisfy against the
/// rest of the table, with `residual = rhs - lhs` for each (so feasibility
/// is `residual >= 0` on both).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrregularFeasibility {
    pub feasible: bool,
    pub residual1: Rational,
    pub residual2: Rational,
}

/// Checks the two inequalities constraining `s'_{2,n}`:
///
/// ```text
/// (4/n)·s'_{2,n} <= sum  n·gamma·(alpha-gamma)/(ell^2 (alpha-1)) · (s + s')
/// (1/n)·s'_{2,n} <= sum [n·gamma(gamma-1)·s + n·(alpha-gamma)(alpha-gamma-1)·s']
///                        / (ell^2 (alpha-1)(alpha-2))
/// ```
///
/// Rejects structurally inadmissible tables.
pub fn irregular_feasible(t: &SingularityIndexTable) -> Result<IrregularFeasibility> {
    require_structurally_admissible(t)?;
    let d = t.datum();
    let alpha = d.alpha;
    let x = Rational::from(t.count_s_prime(2, d.n));
    let mut rhs1 = Rational::zero();
    let mut rhs2 = Rational::zero();
    for (prime, iter) in [
        (false, t.s_entries().collect::<Vec<_>>()),
        (true, t.s_prime_entries().collect::<Vec<_>>()),
    ] {
        for (gamma, ell, count) in iter {
            let weight = Rational::from(count) / Rational::from(ell * ell);
            rhs1 = rhs1
                + Rational::from(d.n * gamma * (alpha - gamma))
                    / Rational::from(alpha - 1)
                    * weight.clone();
            let second = if prime {
                d.n * (alpha - gamma) * (alpha - gamma - 1)
            } else {
                d.n * gamma * (gamma - 1)
            };
            rhs2 = rhs2
                + Rational::from(second) / Rational::from((alpha - 1) * (alpha - 2)) * weight;
        }
    }
    let residual1 = rhs1 - Rational::from(4u64) * x.clone() / Rational::from(d.n);
    let residual2 = rhs2 - x / Rational::from(d.n);
    Ok(IrregularFeasibility {
        feasible: !residual1.is_negative() && !residual2.is_negative(),
        residual1,
        residual2,
    })
}

/// Upper bound `(4g - 4)/lambda` on the rank of the ample part of the
/// Higgs field for a family over a Shimura curve in the given regime.
///
/// Rejects data whose slope constant is undefined or nonpositive.
pub fn rank_a_upper_bound(d: &SuperellipticDatum, regime: Regime) -> Result<Rational> {
    let lambda = match regime {
        Regime::Compact => lambda_compact(d)?,
        Regime::Noncompact => lambda_noncompact(d.n, d.alpha0)?,
    };
    if !lambda.is_positive() {
        return Err(Error::invalid(format!(
            "slope constant {lambda} is not positive; no rank bound follows"
        )));
    }
    Ok(Rational::from(4 * d.g - 4) / lambda)
}

/// Upper bound on the normalized degree of the Hodge line subbundle of a
/// quotient family that degenerates (acquires a boundary point):
///
/// ```text
/// ell1 = gcd(alpha0 - 1, n)
///
/// ell1 = 1:  (n^2 - (n/r_inf)^2)(alpha0 - 2) / (6((n-1)·alpha0 - 2n))
/// ell1 > 1:  (n^2 - (n/r_inf)^2)/(6n) + (ell1^2 - 1)·alpha0/(6n(alpha0 - 2))
/// ```
///
/// Rejects data with `(n-1)·alpha0 <= 2n`, where the first branch is
/// undefined.
pub fn degenerate_quotient_bound(d: &SuperellipticDatum) -> Result<Rational> {
    let ell1 = num::integer::gcd(d.alpha0 - 1, d.n);
    let side = d.n / d.r_inf;
    let top = d.n * d.n - side * side;
    if ell1 == 1 {
        let denom = (d.n - 1) * d.alpha0;
        if denom <= 2 * d.n {
            return Err(Error::invalid(format!(
                "degenerate bound undefined: (n-1)·alpha0 = {denom} <= 2n = {}",
                2 * d.n
            )));
        }
        Ok(Rational::from(top * (d.alpha0 - 2)) / Rational::from(6 * (denom - 2 * d.n)))
    } else {
        Ok(Rational::from(top) / Rational::from(6 * d.n)
            + Rational::from((ell1 * ell1 - 1) * d.alpha0)
                / Rational::from(6 * d.n * (d.alpha0 - 2)))
    }
}
