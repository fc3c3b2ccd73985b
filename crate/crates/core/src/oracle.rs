//! Brute-force ground truth computed on the duplication semigroup itself,
//! and corpus-wide agreement sweeps against the theorem routes.
//!
//! The `direct_*` functions look only at the membership of `T`; they never
//! consult `(S, E, b)` or any route from [`crate::classify`].

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    dup_canonical_model, dup_type_ag, dup_type_formula, is_ag_conditions, is_ag_ring_route,
    is_ci_dup, is_ci_semigroup, is_gorenstein_dup,
};
use crate::duplication::{
    auto_translate, duplicate, valid_b_values, DuplicationSpec, TranslatePolicy,
};
use crate::error::{Error, Result};
use crate::ideal::enumerate_normalized_ideals;
use crate::semigroup::NumericalSemigroup;
use crate::tree::enumerate_by_genus;

pub const SWEEP_GENUS_LIMIT: usize = 10;

/// Nonzero elements of `T` up to `hi`. Larger elements never change a
/// membership test on `[0, F]`.
fn small_nonzero(t: &NumericalSemigroup, hi: i64) -> Vec<i64> {
    (1..=hi).filter(|&x| t.contains(x)).collect()
}

/// `|{x ∉ T : x + m ∈ T for all m ∈ T \ {0}}|`, with `1` for `N`.
pub fn direct_type(t: &NumericalSemigroup) -> usize {
    let f = t.frobenius();
    if f < 0 {
        return 1;
    }
    let elems = small_nonzero(t, f);
    (1..=f)
        .filter(|&x| !t.contains(x) && elems.iter().all(|&m| t.contains(x + m)))
        .count()
}

/// Exactly one of `x`, `F - x` lies in `T`, for every integer `x`.
pub fn direct_symmetric(t: &NumericalSemigroup) -> bool {
    let f = t.frobenius();
    (0..=f).all(|x| t.contains(x) != t.contains(f - x))
}

/// `x + m ∈ T \ {0}` for every `x` with `F - x ∉ T` and every nonzero `m ∈ T`.
pub fn direct_almost_symmetric(t: &NumericalSemigroup) -> bool {
    let f = t.frobenius();
    let elems = small_nonzero(t, f + 1);
    (0..=f)
        .filter(|&x| !t.contains(f - x))
        .all(|x| elems.iter().all(|&m| t.contains(x + m)))
}

/// Minimal generators of `K(T) = {x : F - x ∉ T}`.
pub fn direct_canonical_gens(t: &NumericalSemigroup) -> Vec<i64> {
    let f = t.frobenius();
    let in_k = |x: i64| x >= 0 && !t.contains(f - x);
    let top = f + 1 + t.multiplicity();
    let elems = small_nonzero(t, top);
    (0..=top)
        .filter(|&x| in_k(x) && elems.iter().all(|&m| !in_k(x - m)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Observed {
    Bool(bool),
    Int(i64),
    Set(Vec<i64>),
    Failed(String),
}

impl From<bool> for Observed {
    fn from(v: bool) -> Self {
        Observed::Bool(v)
    }
}

impl From<usize> for Observed {
    fn from(v: usize) -> Self {
        Observed::Int(v as i64)
    }
}

impl From<i64> for Observed {
    fn from(v: i64) -> Self {
        Observed::Int(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub property: &'static str,
    pub theorem: Observed,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring_route: Option<Observed>,
    pub direct: Observed,
}

impl PropertyCheck {
    fn new(
        property: &'static str,
        theorem: impl Into<Observed>,
        direct: impl Into<Observed>,
    ) -> Self {
        PropertyCheck {
            property,
            theorem: theorem.into(),
            ring_route: None,
            direct: direct.into(),
        }
    }

    fn with_ring(mut self, ring: impl Into<Observed>) -> Self {
        self.ring_route = Some(ring.into());
        self
    }

    pub fn agrees(&self) -> bool {
        self.theorem == self.direct && self.ring_route.as_ref().is_none_or(|r| *r == self.direct)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Agree,
    Mismatch(Vec<&'static str>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AgreementReport {
    pub semigroup: Vec<i64>,
    pub ideal: Vec<i64>,
    pub b: i64,
    pub checks: Vec<PropertyCheck>,
    pub verdict: Verdict,
}

impl AgreementReport {
    pub fn agrees(&self) -> bool {
        self.verdict == Verdict::Agree
    }

    pub fn check(&self, property: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.property == property)
    }
}

/// Compare every theorem route for `(S, E)` with the direct computation on
/// `T = S ⋈ᵇ E`. Disagreement is reported in the verdict, not as an error.
pub fn verify_duplication(spec: &DuplicationSpec) -> Result<AgreementReport> {
    let t = duplicate(spec)?;
    let e = spec.ideal();
    let s = spec.base();

    let direct_ag = direct_almost_symmetric(&t);
    let dtype = direct_type(&t);
    let ag = is_ag_conditions(e);

    let mut type_check = PropertyCheck::new("type", dup_type_formula(e), dtype);
    if ag {
        type_check = type_check.with_ring(match dup_type_ag(e) {
            Ok(v) => Observed::from(v),
            Err(err) => Observed::Failed(err.to_string()),
        });
    }
    let canonical = match dup_canonical_model(spec) {
        Ok(d) => Observed::Set(d.normalize().gens().to_vec()),
        Err(err) => Observed::Failed(err.to_string()),
    };
    let mut checks = vec![
        type_check,
        PropertyCheck::new("almost_gorenstein", ag, direct_ag).with_ring(is_ag_ring_route(e).0),
        PropertyCheck::new("gorenstein", is_gorenstein_dup(e), direct_symmetric(&t)),
        PropertyCheck::new("complete_intersection", is_ci_dup(e), is_ci_semigroup(&t)),
        PropertyCheck::new(
            "canonical_ideal",
            canonical,
            Observed::Set(direct_canonical_gens(&t)),
        ),
        PropertyCheck::new("frobenius", spec.frobenius(), t.frobenius()),
    ];
    if direct_ag {
        let bound = 2 * s.cm_type() + 1;
        checks.push(PropertyCheck::new(
            "odd_type_bound",
            true,
            dtype % 2 == 1 && (1..=bound).contains(&dtype),
        ));
    }
    let failed: Vec<&'static str> = checks
        .iter()
        .filter(|c| !c.agrees())
        .map(|c| c.property)
        .collect();
    Ok(AgreementReport {
        semigroup: s.min_gens().to_vec(),
        ideal: e.gens().to_vec(),
        b: spec.b(),
        checks,
        verdict: if failed.is_empty() {
            Verdict::Agree
        } else {
            Verdict::Mismatch(failed)
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepParams {
    pub genus_max: usize,
    pub b_count: usize,
    pub ideal_limit: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct SweepSummary {
    pub genus_max: usize,
    pub b_count: usize,
    pub ideal_limit: Option<usize>,
    pub semigroups: usize,
    pub ideals: usize,
    pub duplications: usize,
    pub checks: usize,
    pub mismatches: Vec<AgreementReport>,
    /// Direct type of the duplication -> number of duplications.
    pub type_histogram: BTreeMap<usize, usize>,
    pub runtime_ms: u128,
}

impl SweepSummary {
    fn merge(&mut self, other: SweepSummary) {
        self.semigroups += other.semigroups;
        self.ideals += other.ideals;
        self.duplications += other.duplications;
        self.checks += other.checks;
        self.mismatches.extend(other.mismatches);
        for (k, v) in other.type_histogram {
            *self.type_histogram.entry(k).or_default() += v;
        }
    }
}

fn sweep_one(s: &NumericalSemigroup, params: &SweepParams) -> Result<SweepSummary> {
    let mut out = SweepSummary {
        semigroups: 1,
        ..Default::default()
    };
    let limit = params.ideal_limit.unwrap_or(usize::MAX);
    let bs = valid_b_values(s, params.b_count);
    for normalized in enumerate_normalized_ideals(s).take(limit) {
        out.ideals += 1;
        let e = auto_translate(s, &normalized);
        for &b in &bs {
            let spec = DuplicationSpec::new(&e, Some(b), TranslatePolicy::None)?;
            let report = verify_duplication(&spec)?;
            out.duplications += 1;
            out.checks += report.checks.len();
            if let Some(PropertyCheck {
                direct: Observed::Int(t),
                ..
            }) = report.check("type")
            {
                *out.type_histogram.entry(*t as usize).or_default() += 1;
            }
            if !report.agrees() {
                out.mismatches.push(report);
            }
        }
    }
    Ok(out)
}

/// Verify every duplication over the genus tree up to `genus_max`, every
/// normalized ideal (auto-translated into `S`) and the `b_count` smallest
/// odd `b`. `jobs` sets the worker count; `None` uses the rayon default.
pub fn sweep(params: SweepParams, jobs: Option<usize>) -> Result<SweepSummary> {
    if params.genus_max > SWEEP_GENUS_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "sweep genus",
            limit: SWEEP_GENUS_LIMIT as i64,
            requested: params.genus_max as i64,
        });
    }
    let start = Instant::now();
    let corpus: Vec<NumericalSemigroup> = enumerate_by_genus(params.genus_max)?.collect();
    let run = || -> Result<Vec<SweepSummary>> {
        corpus.par_iter().map(|s| sweep_one(s, &params)).collect()
    };
    let parts = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::InternalMismatch(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    let mut summary = SweepSummary {
        genus_max: params.genus_max,
        b_count: params.b_count,
        ideal_limit: params.ideal_limit,
        ..Default::default()
    };
    for part in parts {
        summary.merge(part);
    }
    summary.runtime_ms = start.elapsed().as_millis();
    Ok(summary)
}
