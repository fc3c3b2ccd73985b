//! Relative ideals of a numerical semigroup.
//!
//! A relative ideal `E` of `S` is a subset of the integers, bounded below,
//! with `E + S ⊆ E`. It is stored by its minimal generators together with a
//! membership table over `[min(E), max_gap(E)]`; every integer above
//! `max_gap(E)` is a member.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::bits::BitTable;
use crate::error::{Error, Result};
use crate::semigroup::{NumericalSemigroup, VALUE_LIMIT};

#[derive(Clone)]
pub struct RelativeIdeal {
    ambient: NumericalSemigroup,
    gens: Vec<i64>,
    min: i64,
    conductor: i64,
    // bit i <=> min + i ∈ E, for min + i < conductor
    members: BitTable,
}

fn check_range(values: &[i64]) -> Result<()> {
    if values.iter().any(|v| v.abs() > VALUE_LIMIT) {
        return Err(Error::Overflow { limit: VALUE_LIMIT });
    }
    Ok(())
}

impl RelativeIdeal {
    /// `E = ⋃ (g + S)` for `g` in `gens`, with redundant generators removed.
    pub fn from_generators(ambient: &NumericalSemigroup, gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        check_range(gens)?;
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut minimal: Vec<i64> = Vec::with_capacity(sorted.len());
        for &g in &sorted {
            if minimal.iter().all(|&h| !ambient.contains(g - h)) {
                minimal.push(g);
            }
        }
        Ok(Self::from_minimal(ambient.clone(), minimal))
    }

    /// Parse the comma-separated generator format over `ambient`.
    pub fn parse(ambient: &NumericalSemigroup, text: &str) -> Result<Self> {
        Self::from_generators(ambient, &crate::parse::parse_int_list(text)?)
    }

    fn from_minimal(ambient: NumericalSemigroup, gens: Vec<i64>) -> Self {
        let min = gens[0];
        let hi = gens[gens.len() - 1] + ambient.conductor();
        let member = |z: i64| gens.iter().any(|&g| ambient.contains(z - g));
        let mut conductor = hi;
        while conductor > min && member(conductor - 1) {
            conductor -= 1;
        }
        let members = BitTable::from_fn((conductor - min) as usize, |i| member(min + i as i64));
        RelativeIdeal {
            ambient,
            gens,
            min,
            conductor,
            members,
        }
    }

    /// Build from a membership predicate that is known to describe an ideal:
    /// nothing below `lo` is a member and everything at or above `hi` is.
    pub(crate) fn from_member_fn(
        ambient: &NumericalSemigroup,
        lo: i64,
        hi: i64,
        member: impl Fn(i64) -> bool,
    ) -> Self {
        let hi = hi.max(lo);
        let inside = |z: i64| z >= hi || (z >= lo && member(z));
        let step = ambient.min_gens();
        let top = hi + ambient.multiplicity();
        let gens: Vec<i64> = (lo..=top)
            .filter(|&z| inside(z) && step.iter().all(|&g| !inside(z - g)))
            .collect();
        let ideal = Self::from_minimal(ambient.clone(), gens);
        debug_assert!(
            (lo - 1..=top).all(|z| ideal.contains(z) == inside(z)),
            "predicate does not describe an S-ideal"
        );
        ideal
    }

    /// The principal ideal `r + S`.
    pub fn principal(ambient: &NumericalSemigroup, r: i64) -> Self {
        Self::from_minimal(ambient.clone(), vec![r])
    }

    /// `S` itself, as an ideal.
    pub fn unit(ambient: &NumericalSemigroup) -> Self {
        Self::principal(ambient, 0)
    }

    /// The maximal ideal `M = S \ {0}`.
    pub fn maximal(ambient: &NumericalSemigroup) -> Self {
        Self::from_minimal(ambient.clone(), ambient.min_gens().to_vec())
    }

    /// Canonical ideal `K = {x : F - x ∉ S}`, normalized so `S ⊆ K ⊆ N`.
    pub fn canonical(ambient: &NumericalSemigroup) -> Self {
        let f = ambient.frobenius();
        Self::from_member_fn(ambient, 0, f + 1, |x| !ambient.contains(f - x))
    }

    /// An overring `S ⊆ V ⊆ N` viewed as a relative ideal of `S`.
    pub fn from_semigroup(ambient: &NumericalSemigroup, v: &NumericalSemigroup) -> Self {
        Self::from_member_fn(ambient, 0, v.conductor(), |x| v.contains(x))
    }

    pub fn ambient(&self) -> &NumericalSemigroup {
        &self.ambient
    }

    /// Minimal generators, ascending.
    pub fn gens(&self) -> &[i64] {
        &self.gens
    }

    pub fn min(&self) -> i64 {
        self.min
    }

    /// `max(Z \ E)`.
    pub fn max_gap(&self) -> i64 {
        self.conductor - 1
    }

    /// Smallest `c` with `[c, ∞) ⊆ E`.
    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    #[inline]
    pub fn contains(&self, z: i64) -> bool {
        if z < self.min {
            false
        } else if z >= self.conductor {
            true
        } else {
            self.members.get((z - self.min) as usize)
        }
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    /// `E ⊆ S`.
    pub fn is_integral(&self) -> bool {
        self.gens.iter().all(|&g| self.ambient.contains(g))
    }

    /// Members in `[min(E), max_gap(E)]`, ascending.
    pub fn small_elements(&self) -> impl Iterator<Item = i64> + '_ {
        self.members.ones().map(move |i| self.min + i as i64)
    }

    /// Non-members in `[min(E), max_gap(E)]`, ascending.
    pub fn holes(&self) -> impl Iterator<Item = i64> + '_ {
        self.members.zeros().map(move |i| self.min + i as i64)
    }

    fn same_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.gens.iter().all(|&g| other.contains(g)))
    }

    /// `E + F`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let mut sums = Vec::with_capacity(self.gens.len() * other.gens.len());
        for &a in &self.gens {
            for &b in &other.gens {
                sums.push(a + b);
            }
        }
        Self::from_generators(&self.ambient, &sums)
    }

    /// `E - F = {z : z + F ⊆ E}`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let lo = self.min - other.min;
        let hi = self.conductor - other.min;
        let probe = &other.gens;
        Ok(Self::from_member_fn(&self.ambient, lo, hi, |z| {
            probe.iter().all(|&g| self.contains(z + g))
        }))
    }

    /// `E ∩ F`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let lo = self.min.max(other.min);
        let hi = self.conductor.max(other.conductor);
        Ok(Self::from_member_fn(&self.ambient, lo, hi, |z| {
            self.contains(z) && other.contains(z)
        }))
    }

    /// `E^∨ = K - E` with `K` the canonical ideal of the ambient semigroup.
    pub fn dual(&self) -> Self {
        Self::canonical(&self.ambient)
            .colon(self)
            .expect("canonical ideal shares the ambient")
    }

    pub fn translate(&self, r: i64) -> Self {
        RelativeIdeal {
            ambient: self.ambient.clone(),
            gens: self.gens.iter().map(|g| g + r).collect(),
            min: self.min + r,
            conductor: self.conductor + r,
            members: self.members.clone(),
        }
    }

    /// Translate so that `min(E) = 0`.
    pub fn normalize(&self) -> Self {
        self.translate(-self.min)
    }

    pub fn is_translate_of(&self, other: &Self) -> bool {
        self.normalize() == other.normalize()
    }

    /// `|X \ Y|` for `Y ⊆ X`.
    pub fn lambda_between(x: &Self, y: &Self) -> Result<usize> {
        if !y.is_subset_of(x)? {
            return Err(Error::NotNested);
        }
        Ok((x.min..y.conductor)
            .filter(|&z| x.contains(z) && !y.contains(z))
            .count())
    }

    /// The set itself as a numerical semigroup, when `min(E) = 0` and it is
    /// closed under addition.
    pub fn as_semigroup(&self) -> Option<NumericalSemigroup> {
        if self.min != 0 {
            return None;
        }
        let small: Vec<i64> = self.small_elements().collect();
        let closed = small
            .iter()
            .all(|&x| small.iter().all(|&y| self.contains(x + y)));
        if !closed {
            return None;
        }
        Some(NumericalSemigroup::from_member_fn(self.conductor, |x| {
            self.contains(x)
        }))
    }
}

/// Every relative ideal `E` of `S` with `min(E) = 0`, i.e. every relative
/// ideal up to translation. Each is `S ∪ T` for a set of gaps `T` closed
/// under adding elements of `S`.
pub fn enumerate_normalized_ideals(s: &NumericalSemigroup) -> NormalizedIdeals {
    NormalizedIdeals {
        ambient: s.clone(),
        stack: vec![(0, vec![false; s.genus()])],
    }
}

/// Depth-first walk over closed gap subsets; see [`enumerate_normalized_ideals`].
pub struct NormalizedIdeals {
    ambient: NumericalSemigroup,
    // (next gap index, chosen gaps); gaps forced by a chosen one are marked eagerly
    stack: Vec<(usize, Vec<bool>)>,
}

impl Iterator for NormalizedIdeals {
    type Item = RelativeIdeal;

    fn next(&mut self) -> Option<RelativeIdeal> {
        let gaps = self.ambient.gaps();
        while let Some((i, chosen)) = self.stack.pop() {
            if i == gaps.len() {
                let s = &self.ambient;
                return Some(RelativeIdeal::from_member_fn(s, 0, s.conductor(), |x| {
                    s.contains(x) || gaps.binary_search(&x).is_ok_and(|j| chosen[j])
                }));
            }
            if chosen[i] {
                self.stack.push((i + 1, chosen));
                continue;
            }
            let mut with = chosen.clone();
            with[i] = true;
            for j in i + 1..gaps.len() {
                if self.ambient.contains(gaps[j] - gaps[i]) {
                    with[j] = true;
                }
            }
            self.stack.push((i + 1, with));
            self.stack.push((i + 1, chosen));
        }
        None
    }
}

impl PartialEq for RelativeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens && self.ambient == other.ambient
    }
}

impl Eq for RelativeIdeal {}

impl std::hash::Hash for RelativeIdeal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.gens.hash(state);
    }
}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::parse::write_int_list(f, &self.gens)
    }
}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}+{:?}", self.ambient)
    }
}

impl Serialize for RelativeIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.gens.serialize(serializer)
    }
}
