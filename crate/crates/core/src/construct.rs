//! Almost Gorenstein duplications from overrings.
//!
//! For every semigroup `A` with `S ⊆ A ⊆ (M - M)`, an integral translate of
//! `K - A` is an ideal whose duplication is almost Gorenstein of type
//! `2·|A \ S| + 1`.

use serde::Serialize;

use crate::duplication::auto_translate;
use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyEntry {
    pub overring: NumericalSemigroup,
    pub ideal: RelativeIdeal,
    pub expected_type: usize,
}

/// All semigroups between `S` and `(M - M)`, i.e. every `S ∪ P` with
/// `P ⊆ PF(S)` closed under addition. Ordered by subset bitmask of `PF(S)`,
/// so `S` comes first and `(M - M)` last.
pub fn intermediate_semigroups(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    let pf = s.pseudo_frobenius();
    assert!(pf.len() < 63, "type too large to enumerate overrings");
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pf.len()) {
        let chosen: Vec<i64> = pf
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        // x + m ∈ S for x ∈ PF(S), m ∈ M, so only sums inside P can escape
        let closed = chosen.iter().all(|&x| {
            chosen
                .iter()
                .all(|&y| s.contains(x + y) || chosen.contains(&(x + y)))
        });
        if closed {
            out.push(s.with_added(&chosen));
        }
    }
    out
}

fn is_intermediate(s: &NumericalSemigroup, a: &NumericalSemigroup) -> bool {
    let mm = s.m_minus_m();
    s.min_gens().iter().all(|&g| a.contains(g)) && a.min_gens().iter().all(|&g| mm.contains(g))
}

/// `r + (K - A)`. Without `r`, the least shift landing inside `S` is used.
pub fn ideal_from_overring(
    s: &NumericalSemigroup,
    a: &NumericalSemigroup,
    r: Option<i64>,
) -> Result<RelativeIdeal> {
    if !is_intermediate(s, a) {
        return Err(Error::NotIntermediate(format!("{a:?}")));
    }
    let dual = RelativeIdeal::canonical(s).colon(&RelativeIdeal::from_semigroup(s, a))?;
    match r {
        None => Ok(auto_translate(s, &dual)),
        Some(r) => {
            let e = dual.translate(r);
            if e.is_integral() {
                Ok(e)
            } else {
                Err(Error::NotIntegralShift(r))
            }
        }
    }
}

/// One entry per intermediate semigroup, with the type its duplication has.
pub fn ag_family(s: &NumericalSemigroup) -> Vec<FamilyEntry> {
    intermediate_semigroups(s)
        .into_iter()
        .map(|a| {
            let ideal = ideal_from_overring(s, &a, None).expect("intermediate by construction");
            let extra = a.genus().abs_diff(s.genus());
            FamilyEntry {
                overring: a,
                ideal,
                expected_type: 2 * extra + 1,
            }
        })
        .collect()
}
