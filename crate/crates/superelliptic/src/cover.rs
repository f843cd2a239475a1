//! The cover datum `(n, alpha0)` and everything derived from it alone:
//! adjusted branch count, exponents at infinity, fiber genus, branch data,
//! and cyclic quotient covers.
//!
//! A datum describes the smooth projective model of `y^n = F(x)` where `F`
//! is separable of degree `alpha0 >= 3`.  Over `x = infinity` the cover is
//! branched exactly when `n` does not divide `alpha0`; the adjusted count
//! `alpha` includes that extra point:
//!
//! ```text
//! alpha = alpha0        if n | alpha0,
//!         alpha0 + 1    otherwise.
//! ```

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A superelliptic cover `y^n = F(x)`, `deg F = alpha0`, together with the
/// quantities derived from `(n, alpha0)` alone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperellipticDatum {
    /// Degree of the cyclic cover; `n >= 2`.
    pub n: u64,
    /// Number of finite branch points (degree of `F`); `alpha0 >= 3`.
    pub alpha0: u64,
    /// Branch count adjusted for infinity.
    pub alpha: u64,
    /// Ramification order over infinity: `n / gcd(n, alpha0)`.
    pub r_inf: u64,
    /// Monodromy residue at infinity; absent exactly when `n | alpha0`.
    pub a_inf: Option<u64>,
    /// Genus of the smooth fiber.
    pub g: u64,
}

impl SuperellipticDatum {
    /// Builds the datum, deriving `alpha`, `r_inf`, `a_inf` and `g`.
    ///
    /// Rejects `n < 2` and `alpha0 < 3`.
    pub fn new(n: u64, alpha0: u64) -> Result<Self> {
        let g = genus(n, alpha0)?;
        let alpha = if alpha0 % n == 0 { alpha0 } else { alpha0 + 1 };
        let r_inf = n / num::integer::gcd(n, alpha0);
        let a_inf = if alpha0 % n == 0 {
            None
        } else {
            // The residues of the alpha0 finite branch points are all 1, so
            // the residue at infinity is the unique value in 1..n completing
            // the sum to a multiple of n.
            let a = n * (alpha0 / n + 1) - alpha0;
            debug_assert!((1..n).contains(&a) && (a + alpha0) % n == 0);
            Some(a)
        };
        Ok(SuperellipticDatum {
            n,
            alpha0,
            alpha,
            r_inf,
            a_inf,
            g,
        })
    }
}

impl Serialize for SuperellipticDatum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SuperellipticDatum", 6)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("alpha0", &self.alpha0)?;
        s.serialize_field("alpha", &self.alpha)?;
        s.serialize_field("r_inf", &self.r_inf)?;
        s.serialize_field("a_inf", &self.a_inf)?;
        s.serialize_field("g", &self.g)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for SuperellipticDatum {
    /// Only `n` and `alpha0` are read; every derived field is recomputed, so
    /// a hand-edited document cannot smuggle in inconsistent exponents.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: u64,
            alpha0: u64,
        }
        let raw = Raw::deserialize(deserializer)?;
        SuperellipticDatum::new(raw.n, raw.alpha0).map_err(serde::de::Error::custom)
    }
}

/// Genus of the smooth superelliptic curve `y^n = F(x)`:
///
/// ```text
/// g = (n-1)(alpha0-2)/2                                  if n | alpha0,
///     ((n-1)(alpha0-2) + n - gcd(alpha0, n))/2           otherwise.
/// ```
///
/// Rejects `n < 2` and `alpha0 < 3`.
pub fn genus(n: u64, alpha0: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::invalid(format!("n must be >= 2, got {n}")));
    }
    if alpha0 < 3 {
        return Err(Error::invalid(format!(
            "alpha0 must be >= 3, got {alpha0}"
        )));
    }
    let twice = if alpha0 % n == 0 {
        (n - 1) * (alpha0 - 2)
    } else {
        (n - 1) * (alpha0 - 2) + n - num::integer::gcd(alpha0, n)
    };
    if twice % 2 != 0 {
        return Err(Error::identity(format!(
            "genus formula produced the odd value {twice} for (n, alpha0) = ({n}, {alpha0})"
        )));
    }
    Ok(twice / 2)
}

/// Branch data of the cover: the local monodromy residue at every branch
/// point of `y^n = F(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchDatum {
    pub n: u64,
    /// Residues at the `alpha0` finite branch points (each equal to 1).
    pub finite: Vec<u64>,
    /// Residue at infinity; `None` when the cover is unramified there.
    pub at_infinity: Option<u64>,
}

impl BranchDatum {
    /// All residues as one sequence, finite points first.
    pub fn residues(&self) -> Vec<u64> {
        let mut r = self.finite.clone();
        r.extend(self.at_infinity);
        r
    }
}

/// Branch datum of a cover: `alpha0` finite points of residue 1, plus the
/// point at infinity with residue `a_inf` when `n` does not divide
/// `alpha0`.  The residues always sum to `0 mod n`.
pub fn branch_datum(d: &SuperellipticDatum) -> BranchDatum {
    BranchDatum {
        n: d.n,
        finite: vec![1; d.alpha0 as usize],
        at_infinity: d.a_inf,
    }
}

/// Genus of the intermediate quotient cover `y^n1 = F(x)` for a divisor
/// `n1` of `n`.
///
/// The quotient of `y^n = F(x)` by the subgroup of order `n/n1` is again
/// superelliptic with the same branch polynomial, so its genus is
/// `genus(n1, alpha0)`.  Rejects `n1 < 2` and `n1` not dividing `n`.
pub fn quotient_genus(n: u64, n1: u64, alpha0: u64) -> Result<u64> {
    check_divisor(n, n1)?;
    genus(n1, alpha0)
}

/// Index transport along the quotient map: the `i`-th eigenspace of the
/// order-`n1` quotient pulls back to the `i * (n/n1)`-th eigenspace
/// upstairs.  Rejects `n1` not dividing `n` and `i` outside `1..n1`.
pub fn quotient_index_map(n: u64, n1: u64, i: u64) -> Result<u64> {
    check_divisor(n, n1)?;
    if i == 0 || i >= n1 {
        return Err(Error::invalid(format!(
            "eigenspace index must lie in 1..={}, got {i}",
            n1 - 1
        )));
    }
    Ok(i * (n / n1))
}

fn check_divisor(n: u64, n1: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::invalid(format!("n must be >= 2, got {n}")));
    }
    if n1 < 2 {
        return Err(Error::invalid(format!(
            "quotient degree must be >= 2, got {n1}"
        )));
    }
    if n % n1 != 0 {
        return Err(Error::invalid(format!("{n1} does not divide {n}")));
    }
    Ok(())
}

/// All `alpha0 >= 3` for which `genus(n, alpha0) == g`.
///
/// The genus is nondecreasing in `alpha0` with increments bounded by `n-1`,
/// and `genus(n, 2g + 2n + 4)` already exceeds any fixed `g`, so the scan
/// range `3 ..= 2g + 2n + 4` is exhaustive.  Rejects `n < 2` and `g < 2`.
pub fn feasible_alpha0(n: u64, g: u64) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::invalid(format!("n must be >= 2, got {n}")));
    }
    if g < 2 {
        return Err(Error::invalid(format!("g must be >= 2, got {g}")));
    }
    let mut out = Vec::new();
    for alpha0 in 3..=(2 * g + 2 * n + 4) {
        if genus(n, alpha0)? == g {
            out.push(alpha0);
        }
    }
    Ok(out)
}
