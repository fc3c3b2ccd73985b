//! Decision procedures for the duplication `S ⋈ᵇ E`, computed from `(S, E)`
//! alone: Gorenstein, almost Gorenstein (two routes), Cohen-Macaulay type
//! (two formulas), the canonical ideal of the duplication, and complete
//! intersection.
//!
//! Every route here is invariant under translating `E`, and none of them
//! depends on `b` except [`dup_canonical_model`], which builds a set of
//! values of the duplication itself.

use serde::Serialize;

use crate::duplication::{duplicate, DuplicationSpec};
use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

pub use crate::ci::is_ci_semigroup;

/// Theorem-route classification of one duplication.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub gorenstein: bool,
    pub almost_gorenstein: bool,
    pub complete_intersection: bool,
    pub type_formula: usize,
    pub type_ag: Option<usize>,
    /// `min(E^∨)`, the value of the minimal reduction of the dual.
    pub z: i64,
    pub ring_witness: Option<NumericalSemigroup>,
    pub bounds_ok: bool,
}

/// Gorenstein iff `E` is a translate of the canonical ideal.
pub fn is_gorenstein_dup(e: &RelativeIdeal) -> bool {
    e.is_translate_of(&RelativeIdeal::canonical(e.ambient()))
}

/// `|((E-E) ∩ (S-M)) \ S| + |(E-M) \ E|`.
pub fn dup_type_formula(e: &RelativeIdeal) -> usize {
    let s = e.ambient();
    if s.is_naturals() {
        return 1;
    }
    let unit = RelativeIdeal::unit(s);
    let m = RelativeIdeal::maximal(s);
    let endo = e.colon(e).expect("same ambient");
    let socle = unit.colon(&m).expect("same ambient");
    let even = endo.intersect(&socle).expect("same ambient");
    let odd = e.colon(&m).expect("same ambient");
    RelativeIdeal::lambda_between(&even, &unit).expect("S ⊆ (E-E) ∩ (S-M)")
        + RelativeIdeal::lambda_between(&odd, e).expect("E ⊆ E-M")
}

/// With `D = E^∨` and `z = min(D)`: `E + D = z + E` and `z + M = M + D`.
pub fn is_ag_conditions(e: &RelativeIdeal) -> bool {
    let d = e.dual();
    let z = d.min();
    let m = RelativeIdeal::maximal(e.ambient());
    e.add(&d).expect("same ambient") == e.translate(z)
        && m.translate(z) == m.add(&d).expect("same ambient")
}

/// `W = E^∨ - z` is a numerical semigroup with `S ⊆ W ⊆ (M - M)`. Returns the
/// verdict and `W` whenever it is closed under addition.
pub fn is_ag_ring_route(e: &RelativeIdeal) -> (bool, Option<NumericalSemigroup>) {
    let s = e.ambient();
    let w = e.dual().normalize();
    debug_assert!(
        RelativeIdeal::unit(s).is_subset_of(&w).unwrap_or(false),
        "S ⊆ E^∨ - z always holds"
    );
    match w.as_semigroup() {
        Some(ring) => {
            let mm = s.m_minus_m();
            let inside = ring.min_gens().iter().all(|&g| mm.contains(g));
            (inside, Some(ring))
        }
        None => (false, None),
    }
}

/// Type of an almost Gorenstein duplication, by both length formulas
/// `2·|(E^∨ - z) \ S| + 1` and `2·|K \ (z + E)| + 1`.
pub fn dup_type_ag(e: &RelativeIdeal) -> Result<usize> {
    if !is_ag_conditions(e) {
        return Err(Error::NotAlmostGorenstein);
    }
    let s = e.ambient();
    let d = e.dual();
    let z = d.min();
    let over_ring = RelativeIdeal::lambda_between(&d.normalize(), &RelativeIdeal::unit(s))?;
    let over_canonical =
        RelativeIdeal::lambda_between(&RelativeIdeal::canonical(s), &e.translate(z))?;
    if over_ring != over_canonical {
        return Err(Error::InternalMismatch(format!(
            "length of (E^v - z)/S is {over_ring} but length of K/(z+E) is {over_canonical} for E = {e:?}"
        )));
    }
    Ok(2 * over_ring + 1)
}

/// Duplication of the maximal ideal: almost Gorenstein iff `S` is almost
/// symmetric, and then of type `2·type(S) + 1`.
pub fn classify_max_ideal_dup(s: &NumericalSemigroup) -> Result<(bool, Option<usize>)> {
    if s.is_naturals() {
        return Err(Error::ImproperSemigroup);
    }
    let symmetric_enough = s.is_almost_symmetric();
    let by_conditions = is_ag_conditions(&RelativeIdeal::maximal(s));
    if symmetric_enough != by_conditions {
        return Err(Error::InternalMismatch(format!(
            "{s:?}: almost symmetric = {symmetric_enough}, conditions on M = {by_conditions}"
        )));
    }
    Ok((
        symmetric_enough,
        symmetric_enough.then(|| 2 * s.cm_type() + 1),
    ))
}

/// The value set `{2(x - z) : x ∈ E^∨} ∪ {2(y - z) + b : y ∈ K}` as a relative
/// ideal of the duplication `T`. It is a canonical ideal of `T`.
pub fn dup_canonical_model(spec: &DuplicationSpec) -> Result<RelativeIdeal> {
    let t = duplicate(spec)?;
    let e = spec.ideal();
    let b = spec.b();
    let d = e.dual();
    let k = RelativeIdeal::canonical(e.ambient());
    let z = d.min();
    let lo = (2 * (d.min() - z)).min(2 * (k.min() - z) + b);
    let hi = (2 * (d.conductor() - z)).max(2 * (k.conductor() - z) + b);
    Ok(RelativeIdeal::from_member_fn(&t, lo, hi, |v| {
        if v.rem_euclid(2) == 0 {
            d.contains(v.div_euclid(2) + z)
        } else {
            k.contains((v - b).div_euclid(2) + z)
        }
    }))
}

/// Complete intersection iff `S` is one and `E` is principal.
pub fn is_ci_dup(e: &RelativeIdeal) -> bool {
    e.is_principal() && is_ci_semigroup(e.ambient())
}

/// Aggregate every theorem route for `E`. Fails loudly when routes that
/// must coincide do not.
pub fn full_report(e: &RelativeIdeal) -> Result<ClassificationReport> {
    let s = e.ambient();
    let gorenstein = is_gorenstein_dup(e);
    let almost_gorenstein = is_ag_conditions(e);
    let (by_ring, ring_witness) = is_ag_ring_route(e);
    if by_ring != almost_gorenstein {
        return Err(Error::InternalMismatch(format!(
            "{e:?}: conditions say {almost_gorenstein}, ring route says {by_ring}"
        )));
    }
    let type_formula = dup_type_formula(e);
    let type_ag = if almost_gorenstein {
        let t = dup_type_ag(e)?;
        if t != type_formula {
            return Err(Error::InternalMismatch(format!(
                "{e:?}: type formula {type_formula}, almost Gorenstein formula {t}"
            )));
        }
        Some(t)
    } else {
        None
    };
    let bounds_ok =
        !almost_gorenstein || (type_formula % 2 == 1 && type_formula <= 2 * s.cm_type() + 1);
    Ok(ClassificationReport {
        gorenstein,
        almost_gorenstein,
        complete_intersection: is_ci_dup(e),
        type_formula,
        type_ag,
        z: e.dual().min(),
        ring_witness,
        bounds_ok,
    })
}
