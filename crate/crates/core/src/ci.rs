//! Complete-intersection test for numerical semigroups by Delorme gluings.
//!
//! `S` is a complete intersection iff `S = N`, or its minimal generators
//! split as `G1 ⊔ G2` with `d1 = gcd(G1)`, `d2 = gcd(G2)` coprime,
//! `d1 ∈ ⟨G2/d2⟩`, `d2 ∈ ⟨G1/d1⟩`, and both `⟨G1/d1⟩`, `⟨G2/d2⟩` complete
//! intersections.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::semigroup::{gcd, gcd_all, NumericalSemigroup};

const MEMO_CAP: usize = 1 << 16;

fn memo() -> &'static RwLock<HashMap<Vec<i64>, bool>> {
    static MEMO: OnceLock<RwLock<HashMap<Vec<i64>, bool>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Is `S` a complete intersection?
pub fn is_ci_semigroup(s: &NumericalSemigroup) -> bool {
    is_ci_gens(s.min_gens())
}

/// `x ∈ ⟨gens⟩`, by a reachability table up to `x`.
fn in_span(x: i64, gens: &[i64]) -> bool {
    if x < 0 {
        return false;
    }
    let n = x as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for i in 1..=n {
        reach[i] = gens
            .iter()
            .any(|&g| (g as usize) <= i && reach[i - g as usize]);
    }
    reach[n]
}

// `gens` must be the minimal generating set of a numerical semigroup.
fn is_ci_gens(gens: &[i64]) -> bool {
    if gens.len() <= 2 {
        return true;
    }
    if let Some(&known) = memo().read().expect("memo lock").get(gens) {
        return known;
    }
    let answer = decide(gens);
    let mut table = memo().write().expect("memo lock");
    if table.len() >= MEMO_CAP {
        table.clear();
    }
    table.insert(gens.to_vec(), answer);
    answer
}

fn decide(gens: &[i64]) -> bool {
    let s = NumericalSemigroup::from_generators(gens).expect("minimal generators");
    // complete intersections are symmetric
    if !s.is_symmetric() {
        return false;
    }
    let rest = &gens[1..];
    // gens[0] always sits in the first block, so each split is seen once
    for mask in 0u64..(1u64 << rest.len()) - 1 {
        let mut first = vec![gens[0]];
        let mut second = Vec::new();
        for (i, &g) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                first.push(g);
            } else {
                second.push(g);
            }
        }
        let d1 = gcd_all(&first);
        let d2 = gcd_all(&second);
        if gcd(d1, d2) != 1 {
            continue;
        }
        // a block with gcd 1 and more than one element can never glue
        if (d1 == 1 && first.len() > 1) || (d2 == 1 && second.len() > 1) {
            continue;
        }
        let reduced1: Vec<i64> = first.iter().map(|g| g / d1).collect();
        let reduced2: Vec<i64> = second.iter().map(|g| g / d2).collect();
        if in_span(d1, &reduced2)
            && in_span(d2, &reduced1)
            && is_ci_gens(&reduced1)
            && is_ci_gens(&reduced2)
        {
            return true;
        }
    }
    false
}
