//! Invariant checkers shared by the property suites and the acceptance run.
//! Each checker records every individual assertion in a [`Tally`].

#![allow(dead_code)]

use numdup::classify::{is_ag_conditions, is_ag_ring_route, is_ci_dup, is_gorenstein_dup};
use numdup::duplication::{duplicate, DuplicationSpec, TranslatePolicy};
use numdup::{NumericalSemigroup, RelativeIdeal};

#[derive(Debug, Default)]
pub struct Tally {
    pub passed: u64,
    pub failed: u64,
    /// The first few failure descriptions.
    pub failures: Vec<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < 20 {
                self.failures.push(what());
            }
        }
    }

    pub fn total(&self) -> u64 {
        self.passed + self.failed
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn assert_ok(&self) {
        assert!(self.ok(), "invariant failures: {:#?}", self.failures);
    }
}

fn subset(a: &RelativeIdeal, b: &RelativeIdeal) -> bool {
    a.is_subset_of(b).expect("same ambient")
}

/// Apéry, Frobenius, pseudo-Frobenius and closure identities.
pub fn semigroup_invariants(s: &NumericalSemigroup, t: &mut Tally) {
    let f = s.frobenius();
    let mut ns: Vec<i64> = s.min_gens().to_vec();
    ns.extend(s.elements_in(1, f + 3));
    ns.sort_unstable();
    ns.dedup();
    for n in ns.into_iter().filter(|&n| n > 0).take(8) {
        let ap = s.apery(n).expect("n is a nonzero element");
        t.check(ap.len() as i64 == n, || {
            format!("{s:?}: |Ap(S,{n})| = {}", ap.len())
        });
        t.check(ap.iter().max().copied().unwrap_or(0) - n == f, || {
            format!("{s:?}: max Ap(S,{n}) - {n} != F")
        });
    }

    let pf = s.pseudo_frobenius();
    t.check(pf.iter().all(|x| s.gaps().contains(x)), || {
        format!("{s:?}: PF not in gaps")
    });
    if !s.is_naturals() {
        t.check(pf.iter().max() == Some(&f), || {
            format!("{s:?}: max PF != F")
        });
        let mm = s.m_minus_m();
        let extra: Vec<i64> = (0..=f)
            .filter(|&x| mm.contains(x) && !s.contains(x))
            .collect();
        t.check(extra == pf, || format!("{s:?}: (M-M) \\ S != PF"));
        t.check(extra.len() == s.cm_type(), || {
            format!("{s:?}: |(M-M) \\ S| != type")
        });
    }
    t.check(s.is_symmetric() == (s.cm_type() == 1), || {
        format!("{s:?}: symmetric vs type 1")
    });
    t.check(s.gaps().len() == s.genus(), || format!("{s:?}: genus"));

    let small: Vec<i64> = s.elements_in(0, 2 * f + 3).collect();
    let closed = small
        .iter()
        .all(|&x| small.iter().all(|&y| s.contains(x + y)));
    t.check(closed, || format!("{s:?}: not closed under addition"));
}

/// Per-ideal identities: reflexivity, the minimum of the dual, and the
/// two single-ideal instances of the duality rule `A + B ⊆ C ⟺ A + C^∨ ⊆ B^∨`.
pub fn ideal_invariants(e: &RelativeIdeal, t: &mut Tally) {
    let s = e.ambient();
    let d = e.dual();
    t.check(d.dual() == *e, || format!("dual(dual({e})) != {e}"));
    t.check(d.min() == -e.min() + e.normalize().dual().min(), || {
        format!("min(dual({e}))")
    });

    let z = d.min();
    let m = RelativeIdeal::maximal(s);
    let k = RelativeIdeal::canonical(s);
    let zs = RelativeIdeal::principal(s, z);
    let ze = e.translate(z);
    let left = subset(&m.add(&d).unwrap(), &zs);
    let right = subset(&m.add(&k).unwrap(), &ze);
    t.check(left == right, || format!("duality rule (M, dual) on {e}"));

    let left = e.add(&d).unwrap() == ze;
    let right = d.add(&d).unwrap() == d.translate(z);
    t.check(left == right, || format!("duality rule (E, dual) on {e}"));

    t.check(e.normalize().min() == 0, || format!("normalize({e})"));
    t.check(e.is_translate_of(&e.translate(7)), || {
        format!("translate({e})")
    });
}

/// Pairwise identities: antitone duality, minimum of a sum, and lambda
/// additivity along `A ∩ B ⊆ B ⊆ A + B`.
pub fn ideal_pair_invariants(a: &RelativeIdeal, b: &RelativeIdeal, t: &mut Tally) {
    let sum = a.add(b).unwrap();
    t.check(sum.min() == a.min() + b.min(), || format!("min({a} + {b})"));
    if subset(a, b) {
        t.check(subset(&b.dual(), &a.dual()), || {
            format!("antitone on {a} ⊆ {b}")
        });
    }
    let meet = a.intersect(b).unwrap();
    let x_y = RelativeIdeal::lambda_between(&sum, b);
    let y_z = RelativeIdeal::lambda_between(b, &meet);
    let x_z = RelativeIdeal::lambda_between(&sum, &meet);
    if a.contains(0) {
        // b ⊆ a + b needs 0 ∈ a
        let (x_y, y_z, x_z) = (x_y.unwrap(), y_z.unwrap(), x_z.unwrap());
        t.check(x_z == x_y + y_z, || {
            format!("lambda additivity on {a}, {b}")
        });
    } else {
        t.check(y_z.is_ok(), || format!("{a} ∩ {b} ⊄ {b}"));
    }
}

/// The duality rule `A + B ⊆ C ⟺ A + C^∨ ⊆ B^∨` and colon associativity.
pub fn ideal_triple_invariants(
    a: &RelativeIdeal,
    b: &RelativeIdeal,
    c: &RelativeIdeal,
    t: &mut Tally,
) {
    let left = subset(&a.add(b).unwrap(), c);
    let right = subset(&a.add(&c.dual()).unwrap(), &b.dual());
    t.check(left == right, || format!("duality rule on {a}, {b}, {c}"));

    let lhs = a.colon(b).unwrap().colon(c).unwrap();
    let rhs = a.colon(&b.add(c).unwrap()).unwrap();
    t.check(lhs == rhs, || {
        format!("colon associativity on {a}, {b}, {c}")
    });
}

/// Membership split of `T`, its Frobenius number, and the classification
/// chain CI ⟹ Gorenstein ⟹ almost Gorenstein.
pub fn duplication_invariants(e: &RelativeIdeal, b: i64, t: &mut Tally) {
    let spec = DuplicationSpec::new(e, Some(b), TranslatePolicy::Auto).unwrap();
    let dup = duplicate(&spec).unwrap();
    let s = spec.base();
    let ie = spec.ideal();
    t.check(dup.frobenius() == 2 * ie.max_gap() + b, || {
        format!("F(T) for {e}, b={b}")
    });
    let split = (0..=dup.frobenius() + 2).all(|x| {
        let expected = if x % 2 == 0 {
            s.contains(x / 2)
        } else {
            ie.contains((x - b) / 2)
        };
        dup.contains(x) == expected
    });
    t.check(split, || format!("even/odd split for {e}, b={b}"));
    if is_ci_dup(ie) {
        t.check(is_gorenstein_dup(ie), || {
            format!("CI but not Gorenstein: {e}")
        });
    }
    if is_gorenstein_dup(ie) {
        t.check(is_ag_conditions(ie), || {
            format!("Gorenstein but not AG: {e}")
        });
    }
    t.check(is_ag_conditions(ie) == is_ag_ring_route(ie).0, || {
        format!("AG routes differ on {e}")
    });
}

/// Run every checker over `s`, its normalized ideals (plus negative
/// translates of the first four) and the two smallest odd `b`. Triples are limited to the
/// first `triple_cap` ideals.
pub fn exhaustive(s: &NumericalSemigroup, triple_cap: usize, t: &mut Tally) {
    semigroup_invariants(s, t);
    let mut ideals: Vec<RelativeIdeal> = numdup::enumerate_normalized_ideals(s).collect();
    let shifted: Vec<RelativeIdeal> = ideals.iter().take(4).map(|e| e.translate(-3)).collect();
    for e in &ideals {
        for b in numdup::duplication::valid_b_values(s, 2) {
            duplication_invariants(e, b, t);
        }
    }
    ideals.extend(shifted);
    for a in &ideals {
        ideal_invariants(a, t);
        for b in &ideals {
            ideal_pair_invariants(a, b, t);
        }
    }
    let few = &ideals[..ideals.len().min(triple_cap)];
    for a in few {
        for b in few {
            for c in few {
                ideal_triple_invariants(a, b, c, t);
            }
        }
    }
}
