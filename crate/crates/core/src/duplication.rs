//! Numerical duplication `S ⋈ᵇ E = 2·S ∪ (2·E + b)`.
//!
//! For an integral relative ideal `E ⊆ S` and an odd `b ∈ S` this is the
//! value semigroup of the ring `R(I)_{0,-x^b}`. The parameter `a` of the
//! ring family is fixed to 0 here.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::{NumericalSemigroup, TABLE_LIMIT, VALUE_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TranslatePolicy {
    /// Reject ideals that are not contained in the base semigroup.
    None,
    /// Shift by the least `r >= 0` with `r + E ⊆ S`.
    #[default]
    Auto,
}

impl FromStr for TranslatePolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(TranslatePolicy::None),
            "auto" => Ok(TranslatePolicy::Auto),
            other => Err(Error::Parse(format!(
                "translate policy must be auto or none, got {other:?}"
            ))),
        }
    }
}

impl fmt::Display for TranslatePolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TranslatePolicy::None => "none",
            TranslatePolicy::Auto => "auto",
        })
    }
}

/// Validated parameters `(S, E, b)` of a duplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuplicationSpec {
    base: NumericalSemigroup,
    ideal: RelativeIdeal,
    b: i64,
    translate_policy: TranslatePolicy,
    shift: i64,
}

impl DuplicationSpec {
    /// Validate `(S, E, b)`. When `b` is `None` the smallest odd element of
    /// `S` is used.
    pub fn new(
        ideal: &RelativeIdeal,
        b: Option<i64>,
        translate_policy: TranslatePolicy,
    ) -> Result<Self> {
        let base = ideal.ambient().clone();
        let (ideal, shift) = match translate_policy {
            TranslatePolicy::Auto => {
                let moved = auto_translate(&base, ideal);
                let shift = moved.min() - ideal.min();
                (moved, shift)
            }
            TranslatePolicy::None if ideal.is_integral() => (ideal.clone(), 0),
            TranslatePolicy::None => return Err(Error::IdealNotIntegral),
        };
        let b = match b {
            Some(b) => b,
            None => valid_b_values(&base, 1)[0],
        };
        if b.rem_euclid(2) == 0 {
            return Err(Error::EvenB(b));
        }
        if !base.contains(b) {
            return Err(Error::BNotInS(b));
        }
        if b > VALUE_LIMIT {
            return Err(Error::Overflow { limit: VALUE_LIMIT });
        }
        // 2E + b is closed under adding 2S, and (2E+b) + (2E+b) lands in 2S.
        debug_assert!(ideal
            .gens()
            .iter()
            .all(|&e| ideal.gens().iter().all(|&f| base.contains(e + f + b))));
        Ok(DuplicationSpec {
            base,
            ideal,
            b,
            translate_policy,
            shift,
        })
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    /// The integral ideal actually used, after any translation.
    pub fn ideal(&self) -> &RelativeIdeal {
        &self.ideal
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn translate_policy(&self) -> TranslatePolicy {
        self.translate_policy
    }

    /// Shift applied to the ideal passed to [`DuplicationSpec::new`].
    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// `2·max_gap(E) + b`, which is the Frobenius number of the duplication.
    pub fn frobenius(&self) -> i64 {
        2 * self.ideal.max_gap() + self.b
    }

    /// Is `x` in `2·S ∪ (2·E + b)`?
    pub fn contains(&self, x: i64) -> bool {
        if x.rem_euclid(2) == 0 {
            self.base.contains(x.div_euclid(2))
        } else {
            self.ideal.contains((x - self.b).div_euclid(2))
        }
    }
}

/// Build `S ⋈ᵇ E` as a numerical semigroup.
pub fn duplicate(spec: &DuplicationSpec) -> Result<NumericalSemigroup> {
    let f = spec
        .ideal
        .max_gap()
        .checked_mul(2)
        .and_then(|v| v.checked_add(spec.b))
        .filter(|&v| v <= VALUE_LIMIT)
        .ok_or(Error::Overflow { limit: VALUE_LIMIT })?;
    if f > TABLE_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "frobenius number",
            limit: TABLE_LIMIT,
            requested: f,
        });
    }
    Ok(NumericalSemigroup::from_member_fn(f.max(-1) + 1, |x| {
        spec.contains(x)
    }))
}

/// The `count` smallest odd elements of `S`, ascending.
pub fn valid_b_values(s: &NumericalSemigroup, count: usize) -> Vec<i64> {
    (1i64..)
        .step_by(2)
        .filter(|&x| s.contains(x))
        .take(count)
        .collect()
}

/// `r + E` for the least `r >= 0` with `r + E ⊆ S`.
pub fn auto_translate(s: &NumericalSemigroup, e: &RelativeIdeal) -> RelativeIdeal {
    let fits = |r: i64| e.gens().iter().all(|&g| s.contains(g + r));
    // r = conductor(S) - min(E) always fits
    let r = (0..)
        .find(|&r| fits(r))
        .expect("a large enough shift always fits");
    e.translate(r)
}
