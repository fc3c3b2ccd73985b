//! Numerical semigroups: cofinite additive submonoids of the naturals.
//!
//! A [`NumericalSemigroup`] stores its minimal generators, its Frobenius
//! number and a membership bit table over `[0, frobenius]`. Every integer
//! above the Frobenius number is a member, every negative integer is not.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::bits::BitTable;
use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;

/// Largest admissible generator or element value. Leaves two bits of
/// headroom so that `2 * x + b` never wraps.
pub const VALUE_LIMIT: i64 = i64::MAX >> 2;

/// Largest Frobenius number we are willing to tabulate.
pub const TABLE_LIMIT: i64 = 1 << 26;

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn gcd_all(values: &[i64]) -> i64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

struct Inner {
    min_gens: Vec<i64>,
    frobenius: i64,
    members: BitTable,
    gaps: Vec<i64>,
}

/// An immutable numerical semigroup. Cloning is cheap (shared storage).
#[derive(Clone)]
pub struct NumericalSemigroup(Arc<Inner>);

impl NumericalSemigroup {
    /// The semigroup generated by `gens`, reduced to its minimal generating set.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(g));
        }
        if gens.iter().any(|&g| g > VALUE_LIMIT) {
            return Err(Error::Overflow { limit: VALUE_LIMIT });
        }
        let d = gcd_all(gens);
        if d != 1 {
            return Err(Error::GcdNotOne(d));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let m = sorted[0];
        if m == 1 {
            return Ok(Self::naturals());
        }
        if m > TABLE_LIMIT {
            return Err(Error::BudgetExceeded {
                what: "multiplicity",
                limit: TABLE_LIMIT,
                requested: m,
            });
        }

        // Apery set w.r.t. m by shortest paths on residues mod m.
        let apery = apery_by_dijkstra(&sorted, m)?;
        let frobenius = apery.iter().max().copied().unwrap_or(0) - m;
        let members = BitTable::from_fn((frobenius + 1) as usize, |x| {
            x as i64 >= apery[x % m as usize]
        });
        let mut inner = Inner {
            min_gens: Vec::new(),
            frobenius,
            members,
            gaps: Vec::new(),
        };
        inner.gaps = inner.members.zeros().map(|x| x as i64).collect();

        let probe = |x: i64| -> bool {
            x == 0 || (x > 0 && (x > frobenius || inner.members.get(x as usize)))
        };
        let mut min_gens: Vec<i64> = Vec::new();
        for &x in &sorted {
            if min_gens.iter().all(|&g| !probe(x - g)) {
                min_gens.push(x);
            }
        }
        inner.min_gens = min_gens;
        Ok(NumericalSemigroup(Arc::new(inner)))
    }

    /// Parse the comma-separated generator format, e.g. `"4,5,11"`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::from_generators(&crate::parse::parse_int_list(text)?)
    }

    /// The whole of the naturals, `⟨1⟩`.
    pub fn naturals() -> Self {
        NumericalSemigroup(Arc::new(Inner {
            min_gens: vec![1],
            frobenius: -1,
            members: BitTable::new(0),
            gaps: Vec::new(),
        }))
    }

    /// Build from a membership predicate known to describe a numerical
    /// semigroup with every integer `>= conductor` a member.
    pub(crate) fn from_member_fn(conductor: i64, member: impl Fn(i64) -> bool) -> Self {
        debug_assert!(conductor >= 0);
        let mut table = BitTable::from_fn(conductor.max(0) as usize, |x| member(x as i64));
        if conductor > 0 {
            table.set(0);
        }
        // Trim to the true Frobenius number.
        let mut frobenius = conductor - 1;
        while frobenius >= 0 && table.get(frobenius as usize) {
            frobenius -= 1;
        }
        let members = if frobenius < 0 {
            BitTable::new(0)
        } else {
            BitTable::from_fn((frobenius + 1) as usize, |x| table.get(x))
        };
        let contains = |x: i64| x == 0 || (x > 0 && (x > frobenius || members.get(x as usize)));
        let multiplicity = (1..).find(|&x| contains(x)).unwrap_or(1);
        let mut min_gens: Vec<i64> = Vec::new();
        for x in multiplicity..=frobenius + multiplicity + 1 {
            if contains(x) && min_gens.iter().all(|&g| !contains(x - g)) {
                min_gens.push(x);
            }
        }
        let gaps = members.zeros().map(|x| x as i64).collect();
        let s = NumericalSemigroup(Arc::new(Inner {
            min_gens,
            frobenius,
            members,
            gaps,
        }));
        debug_assert!(s.is_closed_on_window());
        s
    }

    pub fn min_gens(&self) -> &[i64] {
        &self.0.min_gens
    }

    /// Largest integer outside the semigroup; `-1` for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.0.frobenius
    }

    /// Smallest `c` such that every integer `>= c` is a member.
    pub fn conductor(&self) -> i64 {
        self.0.frobenius + 1
    }

    pub fn gaps(&self) -> &[i64] {
        &self.0.gaps
    }

    pub fn genus(&self) -> usize {
        self.0.gaps.len()
    }

    /// Smallest nonzero element (1 for the naturals).
    pub fn multiplicity(&self) -> i64 {
        self.0.min_gens[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.0.min_gens.len()
    }

    pub fn is_naturals(&self) -> bool {
        self.0.frobenius < 0
    }

    #[inline]
    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            false
        } else if z > self.0.frobenius {
            true
        } else {
            self.0.members.get(z as usize)
        }
    }

    /// Members in `[lo, hi]`, ascending.
    pub fn elements_in(&self, lo: i64, hi: i64) -> impl Iterator<Item = i64> + '_ {
        (lo.max(0)..=hi).filter(move |&x| self.contains(x))
    }

    /// Apery set with respect to `n`, indexed by residue class mod `n`.
    pub fn apery(&self, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::NotMember(n));
        }
        if n > TABLE_LIMIT {
            return Err(Error::BudgetExceeded {
                what: "apery modulus",
                limit: TABLE_LIMIT,
                requested: n,
            });
        }
        let mut out = vec![-1i64; n as usize];
        let mut missing = n as usize;
        let mut x = 0i64;
        while missing > 0 {
            let r = (x % n) as usize;
            if out[r] < 0 && self.contains(x) {
                out[r] = x;
                missing -= 1;
            }
            x += 1;
        }
        Ok(out)
    }

    /// `PF(S) = {x ∉ S : x + m ∈ S for all m ∈ S \ {0}}`, ascending. Empty for N.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        self.gaps()
            .iter()
            .copied()
            .filter(|&x| self.min_gens().iter().all(|&g| self.contains(x + g)))
            .collect()
    }

    /// Cohen-Macaulay type `|PF(S)|`, with the DVR convention `type(N) = 1`.
    pub fn cm_type(&self) -> usize {
        if self.is_naturals() {
            1
        } else {
            self.pseudo_frobenius().len()
        }
    }

    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius();
        (0..=f).all(|x| self.contains(x) != self.contains(f - x))
    }

    /// `K + M ⊆ M` with `K` the canonical ideal and `M = S \ {0}`.
    pub fn is_almost_symmetric(&self) -> bool {
        let k = RelativeIdeal::canonical(self);
        let m = RelativeIdeal::maximal(self);
        k.add(&m)
            .and_then(|km| km.is_subset_of(&m))
            .expect("same ambient")
    }

    /// `(M - M) = {z >= 0 : z + M ⊆ M} = S ∪ PF(S)`.
    pub fn m_minus_m(&self) -> NumericalSemigroup {
        if self.is_naturals() {
            return self.clone();
        }
        let pf = self.pseudo_frobenius();
        Self::from_member_fn(self.conductor(), |x| {
            self.contains(x) || pf.binary_search(&x).is_ok()
        })
    }

    /// `S ∪ extra` for a set of gaps that keeps the union closed.
    pub(crate) fn with_added(&self, extra: &[i64]) -> NumericalSemigroup {
        Self::from_member_fn(self.conductor(), |x| self.contains(x) || extra.contains(&x))
    }

    /// Minimal generators larger than the Frobenius number; removing one
    /// of them leaves a numerical semigroup of genus one more.
    pub fn effective_generators(&self) -> impl Iterator<Item = i64> + '_ {
        let f = self.frobenius();
        self.min_gens().iter().copied().filter(move |&g| g > f)
    }

    /// `S \ {g}` for an effective generator `g`.
    pub fn remove_generator(&self, g: i64) -> Option<NumericalSemigroup> {
        if g <= self.frobenius() || !self.min_gens().contains(&g) {
            return None;
        }
        Some(Self::from_member_fn(g + 1, |x| x != g && self.contains(x)))
    }

    /// Children in the genus tree, in increasing order of removed generator.
    pub fn children(&self) -> Vec<NumericalSemigroup> {
        self.effective_generators()
            .filter_map(|g| self.remove_generator(g))
            .collect()
    }

    fn is_closed_on_window(&self) -> bool {
        let bound = 2 * self.frobenius() + 2;
        let elems: Vec<i64> = self.elements_in(0, bound).collect();
        elems
            .iter()
            .all(|&x| elems.iter().all(|&y| self.contains(x + y)))
    }
}

fn apery_by_dijkstra(gens: &[i64], m: i64) -> Result<Vec<i64>> {
    let n = m as usize;
    let mut dist = vec![i64::MAX; n];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        if d > TABLE_LIMIT + m {
            return Err(Error::BudgetExceeded {
                what: "frobenius number",
                limit: TABLE_LIMIT,
                requested: d - m,
            });
        }
        for &g in &gens[1..] {
            let nd = d
                .checked_add(g)
                .ok_or(Error::Overflow { limit: VALUE_LIMIT })?;
            let nr = (r + (g % m) as usize) % n;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    Ok(dist)
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.min_gens == other.0.min_gens
    }
}

impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.min_gens.hash(state);
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.min_gens.cmp(&other.0.min_gens)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::parse::write_int_list(f, self.min_gens())
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{self}⟩")
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.min_gens().serialize(serializer)
    }
}
