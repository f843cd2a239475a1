//! The case engine: mechanical exclusion of superelliptic data as
//! candidates for special (Shimura-type) families.
//!
//! Every analysis produces an [`ExclusionReport`]: the datum, the named
//! structural assumptions in force, a list of exact inequality [`Step`]s,
//! and a [`Verdict`].  A step records one comparison `lhs cmp rhs` between
//! exact rationals together with its observed [`Outcome`]; the `anchor`
//! field is an opaque constraint label identifying which rule produced the
//! step, stable across versions so that traces can be diffed.  Steps whose
//! id starts with `note/` are supplementary: they document sub-cases
//! already closed (or left open) by other means and never influence the
//! verdict.
//!
//! Verdict semantics: `excluded` means the recorded steps close every
//! admissible configuration under the listed assumptions; `not-decided`
//! means at least one configuration survives this battery of tests (it
//! makes no claim of existence).
//!
//! Assumption vocabulary (each report lists the ones its steps rely on):
//!
//! * `shimura-curve` — the family is a nonconstant curve in a moduli space
//!   whose Hodge bundle decomposes into eigenspaces with flat/ample parts.
//! * `compact-base` — the base is compact, so compact-regime slope bounds
//!   apply.
//! * `flat-above-half-vanishes` — the rank accounting assumes the flat
//!   parts vanish in every eigenspace above the half index (the extremal
//!   pattern tested first).
//! * `endgame-fibration-structure` — a single flat summand surviving above
//!   the half index forces the auxiliary fibration structure whose branch
//!   data the endgame window enumerates.
//! * `fibration-genus-lemma` — the genus comparison for that auxiliary
//!   fibration, used to close top-index cases.
//! * `induction-on-divisors` — the analysis for a proper divisor of `n` is
//!   taken as already settled when its genus lies in the working window.
//! * `alpha0-four-structure` — structural facts special to `alpha0 = 4`
//!   (parity of the half eigenspace, shape of the rank pattern).
//! * `moonen-bound` — the classification window for `alpha0 = 3`, which
//!   requires `n <= g`.

use num::integer::gcd;
use num::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith::{euler_phi, is_prime, Rational};
use crate::cover::{genus, SuperellipticDatum};
use crate::family::{degenerate_quotient_bound, lambda_compact, rank_a_upper_bound, Regime};
use crate::hodge::{eigen_rank_vector, EigenRankVector};
use crate::{Error, Result};

const SHIMURA: &str = "shimura-curve";
const COMPACT: &str = "compact-base";
const FLAT_HALF: &str = "flat-above-half-vanishes";
const ENDGAME: &str = "endgame-fibration-structure";
const GENUS_LEMMA: &str = "fibration-genus-lemma";
const INDUCTION: &str = "induction-on-divisors";
const ALPHA0_FOUR: &str = "alpha0-four-structure";
const MOONEN: &str = "moonen-bound";

/// Final status of an analyzed datum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Every admissible configuration is closed by the recorded steps.
    Excluded,
    /// At least one configuration survives this battery of tests.
    NotDecided,
}

/// Observed status of a single inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Holds,
    Violated,
}

/// Comparison operator of a step, serialized as its symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cmp {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
}

impl Cmp {
    pub fn eval(&self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Cmp::Lt => lhs < rhs,
            Cmp::Le => lhs <= rhs,
            Cmp::Eq => lhs == rhs,
            Cmp::Ge => lhs >= rhs,
            Cmp::Gt => lhs > rhs,
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            Cmp::Lt => "<",
            Cmp::Le => "<=",
            Cmp::Eq => "=",
            Cmp::Ge => ">=",
            Cmp::Gt => ">",
        }
    }
}

impl std::fmt::Display for Cmp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.symbol())
    }
}

/// One exact comparison in an exclusion trace.
///
/// The recorded requirement is `lhs cmp rhs`; `outcome` states whether it
/// holds.  A `violated` requirement closes the sub-case the step belongs
/// to.  Steps with an id starting with `note/` are informational only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub id: String,
    pub anchor: String,
    pub lhs: Rational,
    pub rhs: Rational,
    pub cmp: Cmp,
    pub outcome: Outcome,
}

impl Step {
    /// Builds a step, computing the outcome from the exact comparison.
    pub fn check(
        id: impl Into<String>,
        anchor: impl Into<String>,
        lhs: Rational,
        cmp: Cmp,
        rhs: Rational,
    ) -> Step {
        let outcome = if cmp.eval(&lhs, &rhs) {
            Outcome::Holds
        } else {
            Outcome::Violated
        };
        Step {
            id: id.into(),
            anchor: anchor.into(),
            lhs,
            rhs,
            cmp,
            outcome,
        }
    }

    /// Whether this step is supplementary (never verdict-bearing).
    pub fn is_note(&self) -> bool {
        self.id.starts_with("note/")
    }

    /// Re-evaluates the comparison and confirms it matches the recorded
    /// outcome.
    pub fn replay(&self) -> bool {
        self.cmp.eval(&self.lhs, &self.rhs) == (self.outcome == Outcome::Holds)
    }
}

/// Full trace of one analysis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExclusionReport {
    pub datum: SuperellipticDatum,
    pub assumptions: Vec<String>,
    pub steps: Vec<Step>,
    pub verdict: Verdict,
}

/// How the analysis treats the half-index eigenspace of an even-degree
/// cover when estimating the minimal ample rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HalfMode {
    /// The degree-2 quotient stays in the same moduli regime; the half
    /// eigenspace contributes the smallest even rank at least half its
    /// dimension.
    ShimuraQuotient,
    /// The degree-2 quotient degenerates; the half eigenspace contributes
    /// nothing.
    DegenerateQuotient,
}

impl std::str::FromStr for HalfMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shimura-quotient" => Ok(HalfMode::ShimuraQuotient),
            "degenerate-quotient" => Ok(HalfMode::DegenerateQuotient),
            other => Err(Error::invalid(format!(
                "unknown half mode {other:?} (expected shimura-quotient or degenerate-quotient)"
            ))),
        }
    }
}

/// One entry of the composite exception table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuCell {
    pub n: u64,
    pub alpha0: u64,
    pub nu: Rational,
}

/// Outcome of the prime endgame scan: the window survivors and one report
/// per survivor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EndgameOutcome {
    /// Triples `(alpha0, beta, i_m)` passing every window filter.
    pub survivors: Vec<(u64, u64, u64)>,
    pub reports: Vec<ExclusionReport>,
}

/// Smallest even integer at least `e/2` — the minimal admissible ample
/// rank of a half-index eigenspace of dimension `e` whose quotient stays
/// in the same regime.
fn half_even_fill(e_half: u64) -> u64 {
    2 * ((e_half + 3) / 4)
}

/// Largest even integer at most `x` (for nonnegative `x`).
fn largest_even_at_most(x: &Rational) -> i64 {
    let f = x.floor_int().to_i64().expect("bound fits in i64");
    if f % 2 == 0 {
        f
    } else {
        f - 1
    }
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            return q;
        }
        q += 1;
    }
    n
}

/// The minimal ample rank an admissible Higgs decomposition can have when
/// every eigenspace above the half index is fully ample: twice the sum of
/// the eigenranks above `n/2`, plus the half-index contribution selected
/// by `mode` for even `n`.
pub fn assumed_ample_rank(d: &SuperellipticDatum, mode: HalfMode) -> Result<u64> {
    let ranks = eigen_rank_vector(d)?;
    let n = d.n;
    let mut rank: u64 = (n / 2 + 1..n).map(|i| 2 * ranks.get(i)).sum();
    if n % 2 == 0 {
        rank += match mode {
            HalfMode::ShimuraQuotient => half_even_fill(ranks.get(n / 2)),
            HalfMode::DegenerateQuotient => 0,
        };
    }
    Ok(rank)
}

/// The slope statistic `nu = 4(g-1) / assumed_ample_rank`.  Rejects data
/// whose assumed ample rank vanishes.
pub fn nu_statistic(d: &SuperellipticDatum, mode: HalfMode) -> Result<Rational> {
    let rank = assumed_ample_rank(d, mode)?;
    if rank == 0 {
        return Err(Error::invalid(format!(
            "assumed ample rank of (n, alpha0) = ({}, {}) is zero; nu is undefined",
            d.n, d.alpha0
        )));
    }
    Ok(Rational::from(4 * d.g as i64 - 4) / Rational::from(rank))
}

/// All composite data `(n, alpha0)` with `alpha0 >= 5` whose genus lies in
/// the working window (`g >= g_min`) while the genus of the quotient by
/// the largest proper divisor of `n` does not.  These are exactly the
/// composite cases no divisor induction settles.  Sorted by `(n, alpha0)`.
pub fn composite_candidates(g_min: u64) -> Result<Vec<(u64, u64)>> {
    if g_min < 2 {
        return Err(Error::invalid(format!(
            "g_min must be at least 2, got {g_min}"
        )));
    }
    // genus(n', 5) >= 3(n'-1)/2, so quotient degrees past 2*g_min/3 + 1
    // always land in the window; n = n' * spf <= n'^2 bounds the scan.
    let quot_cap = 2 * g_min / 3 + 1;
    let cap = quot_cap * quot_cap;
    let mut out = Vec::new();
    for n in 4..=cap {
        let spf = smallest_prime_factor(n);
        if spf == n {
            continue;
        }
        let quot = n / spf;
        // Quotient genus reaches g_min by alpha0 = 2*g_min + 2 at the
        // latest, so the range below always hits the break.
        for alpha0 in 5..=2 * g_min + 2 {
            if genus(quot, alpha0)? >= g_min {
                break;
            }
            if genus(n, alpha0)? >= g_min {
                out.push((n, alpha0));
            }
        }
    }
    Ok(out)
}

/// The `nu` statistic of every composite candidate cell (working window
/// `g >= 8`), in Shimura-quotient mode, sorted by `(n, alpha0)`.
pub fn nu_table() -> Result<Vec<NuCell>> {
    composite_candidates(8)?
        .into_iter()
        .map(|(n, alpha0)| {
            let d = SuperellipticDatum::new(n, alpha0)?;
            let nu = nu_statistic(&d, HalfMode::ShimuraQuotient)?;
            Ok(NuCell { n, alpha0, nu })
        })
        .collect()
}

fn prime_datum(p: u64, alpha0: u64) -> Result<SuperellipticDatum> {
    if p < 3 || !is_prime(p) {
        return Err(Error::invalid(format!("n must be a prime >= 3, got {p}")));
    }
    let d = SuperellipticDatum::new(p, alpha0)?;
    let floor = 8.max(p);
    if d.g < floor {
        return Err(Error::invalid(format!(
            "genus {} of ({p}, {alpha0}) is below the working window (need g >= {floor})",
            d.g
        )));
    }
    Ok(d)
}

fn step1_rank_step(d: &SuperellipticDatum) -> Result<Step> {
    let ranks = eigen_rank_vector(d)?;
    let rank: u64 = (d.n / 2 + 1..d.n).map(|i| 2 * ranks.get(i)).sum();
    let bound = rank_a_upper_bound(d, Regime::Compact)?;
    Ok(Step::check(
        "step1-rank",
        "3-34",
        Rational::from(rank),
        Cmp::Le,
        bound,
    ))
}

/// First rank test for a prime-degree cover: if every eigenspace above the
/// half index were fully ample, the ample rank would be twice the sum of
/// their dimensions, which must respect the slope bound.  The verdict is
/// `excluded` only when the test fails *and* `p | alpha0`, where the
/// failure closes every configuration outright; otherwise a violated test
/// only forces a flat summand above the half index, which the endgame
/// pursues separately.
pub fn prime_step1(p: u64, alpha0: u64) -> Result<ExclusionReport> {
    let d = prime_datum(p, alpha0)?;
    let step = step1_rank_step(&d)?;
    let verdict = if step.outcome == Outcome::Violated && alpha0 % p == 0 {
        Verdict::Excluded
    } else {
        Verdict::NotDecided
    };
    Ok(ExclusionReport {
        datum: d,
        assumptions: vec![SHIMURA.into(), COMPACT.into(), FLAT_HALF.into()],
        steps: vec![step],
        verdict,
    })
}

struct TripleAnalysis {
    beta: u64,
    i_m: u64,
    steps: Vec<Step>,
    closed: bool,
    used_top_kill: bool,
}

/// Enumerates the endgame window for one prime datum: branch counts
/// `beta` and flat indices `i_m` surviving the window filters.  Each
/// survivor carries its full kill analysis.
fn endgame_candidates(d: &SuperellipticDatum) -> Result<Vec<TripleAnalysis>> {
    let p = d.n;
    let ranks = eigen_rank_vector(d)?;
    debug_assert_eq!(2 * d.g % (p - 1), 0);
    let pair_sum = (2 * d.g / (p - 1)) as i64;
    let bound = rank_a_upper_bound(d, Regime::Compact)?;
    let mut out = Vec::new();
    for beta in 4..=p {
        if d.alpha <= 2 * (beta - 1) {
            continue;
        }
        let q = p / (beta - 1);
        let (lhs68, rhs68) = if d.alpha0 % p == 0 {
            (
                d.alpha0 as i64 + 4 - beta as i64,
                (2 * (q + 1) * (d.alpha0 / p)) as i64,
            )
        } else {
            (
                d.alpha0 as i64 + 3 - beta as i64,
                (2 * ((q + 1) * d.alpha0 / p)) as i64,
            )
        };
        if lhs68 > rhs68 {
            continue;
        }
        let i_lo = (p - 1 - q).max(p / 2 + 1);
        for i_m in i_lo..p {
            let e_im = ranks.get(i_m);
            if e_im == 0 {
                continue;
            }
            let flat_lhs = 2 * e_im as i64;
            let flat_rhs = pair_sum + 4 - beta as i64;
            if flat_lhs < flat_rhs {
                continue;
            }
            out.push(analyze_triple(
                d,
                &ranks,
                beta,
                i_m,
                q,
                (lhs68, rhs68),
                (flat_lhs, flat_rhs),
                &bound,
            ));
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn analyze_triple(
    d: &SuperellipticDatum,
    ranks: &EigenRankVector,
    beta: u64,
    i_m: u64,
    q: u64,
    s68: (i64, i64),
    flat: (i64, i64),
    bound: &Rational,
) -> TripleAnalysis {
    let p = d.n;
    let pre = format!("endgame-b{beta}-i{i_m}");
    let e_im = ranks.get(i_m);
    let e_co = ranks.get(p - i_m);
    let mut steps = vec![
        Step::check(
            format!("{pre}-branch-window"),
            "3-127-1",
            Rational::from(d.alpha),
            Cmp::Gt,
            Rational::from(2 * (beta as i64 - 1)),
        ),
        Step::check(
            format!("{pre}-branch-count"),
            "3-68",
            Rational::from(s68.0),
            Cmp::Le,
            Rational::from(s68.1),
        ),
        Step::check(
            format!("{pre}-window"),
            "3-126",
            Rational::from(i_m),
            Cmp::Ge,
            Rational::from(p as i64 - 1 - q as i64),
        ),
        Step::check(
            format!("{pre}-flat-pair"),
            "3-127-2",
            Rational::from(flat.0),
            Cmp::Ge,
            Rational::from(flat.1),
        ),
    ];
    // The ample rank of the flat eigenspace pair is pinned by the branch
    // count: e_{i_m} + e_{p-i_m} - 2a = beta - 2.
    let a = Rational::new(e_im as i64 + e_co as i64 + 2 - beta as i64, 2);
    let frac = {
        let floor = a.floor_int();
        a.clone() - Rational::from(floor)
    };
    steps.push(Step::check(
        format!("{pre}-ample-parity"),
        "3-205",
        frac,
        Cmp::Eq,
        Rational::zero(),
    ));
    steps.push(Step::check(
        format!("{pre}-ample-nonneg"),
        "3-205",
        a.clone(),
        Cmp::Ge,
        Rational::zero(),
    ));
    steps.push(Step::check(
        format!("{pre}-ample-mid"),
        "3-182",
        a.clone(),
        Cmp::Le,
        Rational::from(e_im as i64 - 1),
    ));
    let ample_closed = steps[4..]
        .iter()
        .any(|s| s.outcome == Outcome::Violated);
    let mut closed = ample_closed;
    if !ample_closed {
        let a_int = a.to_u64().expect("admissible ample rank is a small nonnegative integer");
        let tail: u64 = (i_m + 1..p).map(|i| ranks.get(i)).sum();
        let rank = 2 * (a_int + tail);
        let rank_step = Step::check(
            format!("{pre}-rank"),
            "3-101-2",
            Rational::from(rank),
            Cmp::Le,
            bound.clone(),
        );
        closed |= rank_step.outcome == Outcome::Violated;
        steps.push(rank_step);
    }
    let mut used_top_kill = false;
    if i_m == p - 1 {
        let top = Step::check(
            format!("{pre}-top-kill"),
            "3-131",
            Rational::from(d.g),
            Cmp::Lt,
            Rational::from(8u64),
        );
        closed |= top.outcome == Outcome::Violated;
        steps.push(top);
        used_top_kill = true;
    }
    TripleAnalysis {
        beta,
        i_m,
        steps,
        closed,
        used_top_kill,
    }
}

/// Scans the endgame window of a prime degree `p` over `alpha0` up to
/// `alpha0_max` (data below the working window are skipped) and returns
/// the surviving triples `(alpha0, beta, i_m)` with their kill reports.
pub fn compact_endgame(p: u64, alpha0_max: u64) -> Result<EndgameOutcome> {
    if p < 3 || !is_prime(p) {
        return Err(Error::invalid(format!("p must be a prime >= 3, got {p}")));
    }
    if alpha0_max < 3 {
        return Err(Error::invalid(format!(
            "alpha0_max must be at least 3, got {alpha0_max}"
        )));
    }
    let mut survivors = Vec::new();
    let mut reports = Vec::new();
    for alpha0 in 3..=alpha0_max {
        let d = SuperellipticDatum::new(p, alpha0)?;
        if d.g < 8.max(p) {
            continue;
        }
        for triple in endgame_candidates(&d)? {
            survivors.push((alpha0, triple.beta, triple.i_m));
            let mut assumptions: Vec<String> =
                vec![SHIMURA.into(), COMPACT.into(), ENDGAME.into()];
            if triple.used_top_kill {
                assumptions.push(GENUS_LEMMA.into());
            }
            reports.push(ExclusionReport {
                datum: d.clone(),
                assumptions,
                steps: triple.steps,
                verdict: if triple.closed {
                    Verdict::Excluded
                } else {
                    Verdict::NotDecided
                },
            });
        }
    }
    Ok(EndgameOutcome { survivors, reports })
}

/// Odd degrees `n <= n_max` with `alpha0 = 4` in the working window whose
/// extremal rank pattern survives the slope bound (non-strictly).  Even
/// degrees are settled separately by the half-eigenspace parity rule and
/// are not scanned.
pub fn alpha0_four_survivors(n_max: u64) -> Result<Vec<u64>> {
    if n_max < 5 {
        return Err(Error::invalid(format!(
            "n_max must be at least 5, got {n_max}"
        )));
    }
    let mut out = Vec::new();
    for n in (5..=n_max).filter(|n| n % 2 == 1) {
        let d = SuperellipticDatum::new(n, 4)?;
        if d.g < 8 {
            continue;
        }
        let ranks = eigen_rank_vector(&d)?;
        let rank: u64 = (n / 2 + 1..n).map(|i| 2 * ranks.get(i)).sum();
        let bound = rank_a_upper_bound(&d, Regime::Compact)?;
        if Rational::from(rank) <= bound {
            out.push(n);
        }
    }
    Ok(out)
}

/// The two genus constraints a fibration of a genus-`g` curve family over
/// a base of genus at least `g_base` must satisfy.  Both steps violated
/// means no such fibration exists.
pub fn fibration_constraints(g: u64, g_base: u64) -> Result<Vec<Step>> {
    if g < 2 {
        return Err(Error::invalid(format!("g must be at least 2, got {g}")));
    }
    Ok(vec![
        Step::check(
            "fibration-131",
            "3-131",
            Rational::from(2 * g as i64 - 2),
            Cmp::Ge,
            Rational::from(4 * g_base as i64 - 4),
        ),
        Step::check(
            "fibration-144",
            "3-144",
            Rational::from(g),
            Cmp::Ge,
            Rational::from(2 * g_base),
        ),
    ])
}

/// Lower bound `phi(n)/2 * (f_im + f_co)` for the base genus of the
/// fibration induced by a flat eigenspace pair of ranks `f_im`, `f_co`.
pub fn phi_genus_bound(n: u64, f_im: u64, f_co: u64) -> Result<Rational> {
    if n < 2 {
        return Err(Error::invalid(format!("n must be at least 2, got {n}")));
    }
    Ok(Rational::new(euler_phi(n) as i64, 2) * Rational::from(f_im + f_co))
}

fn alpha0_three_report(d: SuperellipticDatum) -> ExclusionReport {
    let step = Step::check(
        "alpha0-three",
        "moonen",
        Rational::from(d.n),
        Cmp::Le,
        Rational::from(d.g),
    );
    let verdict = if step.outcome == Outcome::Violated {
        Verdict::Excluded
    } else {
        Verdict::NotDecided
    };
    ExclusionReport {
        datum: d,
        assumptions: vec![SHIMURA.into(), MOONEN.into()],
        steps: vec![step],
        verdict,
    }
}

fn prime_report(d: SuperellipticDatum) -> Result<ExclusionReport> {
    let step1 = step1_rank_step(&d)?;
    let step1_violated = step1.outcome == Outcome::Violated;
    let mut steps = vec![step1];
    let triples = endgame_candidates(&d)?;
    let mut assumptions: Vec<String> = vec![SHIMURA.into(), COMPACT.into(), FLAT_HALF.into()];
    if !triples.is_empty() {
        assumptions.push(ENDGAME.into());
    }
    if triples.iter().any(|t| t.used_top_kill) {
        assumptions.push(GENUS_LEMMA.into());
    }
    let all_closed = triples.iter().all(|t| t.closed);
    for triple in triples {
        steps.extend(triple.steps);
    }
    let verdict = if step1_violated && all_closed {
        Verdict::Excluded
    } else {
        Verdict::NotDecided
    };
    Ok(ExclusionReport {
        datum: d,
        assumptions,
        steps,
        verdict,
    })
}

fn horn_report(d: SuperellipticDatum) -> Result<ExclusionReport> {
    let lambda = lambda_compact(&d)?;
    let nu = nu_statistic(&d, HalfMode::ShimuraQuotient)?;
    let nu_step = Step::check("nu-vs-lambda", "3-101-2", nu, Cmp::Ge, lambda);
    let mut closed = nu_step.outcome == Outcome::Violated;
    let mut steps = vec![nu_step];

    // Even degree with an even, non-divisible alpha0 admits the
    // degenerate-quotient alternative; it is closed separately via the
    // quotient degree bound, which must leave no room for a positive even
    // ample rank (the smallest being 2).
    if d.n % 2 == 0 && d.alpha0 % 2 == 0 && d.alpha0 % d.n != 0 {
        let b = degenerate_quotient_bound(&d)?;
        let deg_step = Step::check(
            "degenerate-quotient-bound",
            "3-153",
            Rational::from(2u64),
            Cmp::Le,
            b.clone(),
        );
        closed = closed && deg_step.outcome == Outcome::Violated;
        steps.push(deg_step);
        steps.push(Step::check(
            "note/degenerate-forced-rank",
            "evenrank",
            Rational::from(largest_even_at_most(&b)),
            Cmp::Ge,
            Rational::from(1u64),
        ));
    }

    // Supplementary notes: for each admissible flat index above the half,
    // document how the two flat sub-branches fare (fully flat pair vs a
    // positive ample part), plus the special routes for the top index and
    // a narrow branch window.
    let ranks = eigen_rank_vector(&d)?;
    let bound = rank_a_upper_bound(&d, Regime::Compact)?;
    for i_m in d.n / 2 + 1..d.n {
        let e_im = ranks.get(i_m);
        if e_im < 2 {
            continue;
        }
        if d.n % 3 == 0 && i_m == 2 * d.n / 3 {
            continue;
        }
        let e_co = ranks.get(d.n - i_m);
        let gb1 = phi_genus_bound(d.n, e_im, e_co)?;
        steps.push(Step::check(
            format!("note/i{i_m}-fibration-131"),
            "3-131",
            Rational::from(2 * d.g as i64 - 2),
            Cmp::Ge,
            gb1.clone() * Rational::from(4u64) - Rational::from(4u64),
        ));
        steps.push(Step::check(
            format!("note/i{i_m}-fibration-144"),
            "3-144",
            Rational::from(d.g),
            Cmp::Ge,
            gb1 * Rational::from(2u64),
        ));
        let mut rank2 = 2 * (1 + (i_m + 1..d.n).map(|i| ranks.get(i)).sum::<u64>());
        if d.n % 2 == 0 {
            rank2 += half_even_fill(ranks.get(d.n / 2));
        }
        steps.push(Step::check(
            format!("note/i{i_m}-rank-vs-bound"),
            "3-101-2",
            Rational::from(rank2),
            Cmp::Le,
            bound.clone(),
        ));
        if i_m == d.n - 1 {
            steps.push(Step::check(
                format!("note/i{i_m}-irregular-rank-half"),
                "3-101-2",
                Rational::new(d.g as i64, 2),
                Cmp::Le,
                bound.clone(),
            ));
        }
        if gcd(i_m, d.n) == 1 && d.alpha <= 6 {
            steps.push(Step::check(
                format!("note/i{i_m}-branch-window"),
                "3-127-1",
                Rational::from(d.alpha),
                Cmp::Gt,
                Rational::from(6u64),
            ));
        }
    }

    let verdict = if closed {
        Verdict::Excluded
    } else {
        Verdict::NotDecided
    };
    Ok(ExclusionReport {
        datum: d,
        assumptions: vec![SHIMURA.into(), COMPACT.into(), FLAT_HALF.into()],
        steps,
        verdict,
    })
}

fn alpha0_four_report(d: SuperellipticDatum) -> Result<ExclusionReport> {
    if d.n % 2 == 1 {
        let ranks = eigen_rank_vector(&d)?;
        let rank: u64 = (d.n / 2 + 1..d.n).map(|i| 2 * ranks.get(i)).sum();
        let bound = rank_a_upper_bound(&d, Regime::Compact)?;
        let step = Step::check(
            "alpha0-four-rank",
            "3-101-2",
            Rational::from(rank),
            Cmp::Le,
            bound,
        );
        let verdict = if step.outcome == Outcome::Violated {
            Verdict::Excluded
        } else {
            Verdict::NotDecided
        };
        Ok(ExclusionReport {
            datum: d,
            assumptions: vec![
                SHIMURA.into(),
                COMPACT.into(),
                FLAT_HALF.into(),
                ALPHA0_FOUR.into(),
            ],
            steps: vec![step],
            verdict,
        })
    } else {
        // For even degree and alpha0 = 4 the half eigenspace has rank one
        // and is forced entirely flat, which the structure of the half
        // quotient forbids; consistency would need the eigenspace to
        // vanish.
        let e_half = ranks_half(&d)?;
        let step = Step::check(
            "alpha0-four-parity",
            "3-208",
            Rational::from(e_half),
            Cmp::Eq,
            Rational::zero(),
        );
        let verdict = if step.outcome == Outcome::Violated {
            Verdict::Excluded
        } else {
            Verdict::NotDecided
        };
        Ok(ExclusionReport {
            datum: d,
            assumptions: vec![SHIMURA.into(), ALPHA0_FOUR.into()],
            steps: vec![step],
            verdict,
        })
    }
}

fn ranks_half(d: &SuperellipticDatum) -> Result<u64> {
    let ranks = eigen_rank_vector(d)?;
    Ok(ranks.get(d.n / 2))
}

fn induction_report(d: SuperellipticDatum) -> Result<ExclusionReport> {
    let quot = d.n / smallest_prime_factor(d.n);
    let gq = genus(quot, d.alpha0)?;
    if gq < 8 {
        return Err(Error::identity(format!(
            "composite dispatch fell through: quotient genus {gq} of ({}, {}) is below the induction window",
            quot, d.alpha0
        )));
    }
    let step = Step::check(
        "induction-quotient",
        "3-95",
        Rational::from(gq),
        Cmp::Lt,
        Rational::from(8u64),
    );
    let verdict = if step.outcome == Outcome::Violated {
        Verdict::Excluded
    } else {
        Verdict::NotDecided
    };
    Ok(ExclusionReport {
        datum: d,
        assumptions: vec![SHIMURA.into(), INDUCTION.into()],
        steps: vec![step],
        verdict,
    })
}

/// Runs the full battery of exclusion tests for one datum and returns the
/// trace.  Requires `n >= 3` and genus at least 8 (the working window).
///
/// Dispatch: `alpha0 = 3` goes through the classification-window rule for
/// any degree; prime degrees run the rank test plus the endgame window;
/// composite degrees in the candidate table run the slope comparison with
/// the degenerate-quotient alternative and supplementary notes; composite
/// degrees with `alpha0 = 4` use the rank or parity rule; every other
/// composite degree is settled by induction on a proper divisor (whose
/// genus provably lies in the window there).
pub fn run_exclusion(n: u64, alpha0: u64) -> Result<ExclusionReport> {
    if n < 3 {
        return Err(Error::invalid(format!("n must be at least 3, got {n}")));
    }
    let d = SuperellipticDatum::new(n, alpha0)?;
    if d.g < 8 {
        return Err(Error::invalid(format!(
            "genus {} of ({n}, {alpha0}) is below the working window (need g >= 8)",
            d.g
        )));
    }
    if alpha0 == 3 {
        return Ok(alpha0_three_report(d));
    }
    if is_prime(n) {
        return prime_report(d);
    }
    let candidates = composite_candidates(8)?;
    if candidates.binary_search(&(n, alpha0)).is_ok() {
        return horn_report(d);
    }
    if alpha0 == 4 {
        return alpha0_four_report(d);
    }
    induction_report(d)
}
