//! The genus tree: every numerical semigroup arises exactly once from `N` by
//! repeatedly removing an effective generator (a minimal generator above
//! the Frobenius number).

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

pub const GENUS_LIMIT: usize = 20;

/// Every numerical semigroup of genus `<= g_max`, genus by genus. Within a
/// genus the order is that of the parents, each parent's children listed by
/// increasing removed generator.
pub fn enumerate_by_genus(g_max: usize) -> Result<GenusLevels> {
    if g_max > GENUS_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "genus",
            limit: GENUS_LIMIT as i64,
            requested: g_max as i64,
        });
    }
    Ok(GenusLevels {
        g_max,
        genus: 0,
        level: vec![NumericalSemigroup::naturals()],
        pos: 0,
    })
}

pub struct GenusLevels {
    g_max: usize,
    genus: usize,
    level: Vec<NumericalSemigroup>,
    pos: usize,
}

impl Iterator for GenusLevels {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        if self.pos == self.level.len() {
            if self.genus == self.g_max || self.level.is_empty() {
                return None;
            }
            self.level = self.level.iter().flat_map(|s| s.children()).collect();
            self.genus += 1;
            self.pos = 0;
        }
        let s = self.level.get(self.pos).cloned();
        self.pos += 1;
        s
    }
}
