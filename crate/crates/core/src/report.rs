//! Serializable summary of one duplication, the shape emitted by the CLI.

use serde::Serialize;

use crate::classify::{full_report, ClassificationReport};
use crate::duplication::{duplicate, DuplicationSpec, TranslatePolicy};
use crate::error::Result;
use crate::ideal::RelativeIdeal;
use crate::oracle::direct_type;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeRoutes {
    pub formula: usize,
    pub ag: Option<usize>,
    pub direct: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DuplicationReport {
    pub semigroup: NumericalSemigroup,
    pub ideal: RelativeIdeal,
    pub b: i64,
    pub translate: TranslatePolicy,
    pub shift: i64,
    pub duplication: NumericalSemigroup,
    pub frobenius: i64,
    pub genus: usize,
    #[serde(rename = "type")]
    pub cm_type: usize,
    pub gorenstein: bool,
    pub almost_gorenstein: bool,
    pub complete_intersection: bool,
    pub type_routes: TypeRoutes,
    pub z: i64,
    pub ring_witness: Option<NumericalSemigroup>,
    pub bounds_ok: bool,
}

impl DuplicationReport {
    pub fn build(spec: &DuplicationSpec) -> Result<Self> {
        let t = duplicate(spec)?;
        let ClassificationReport {
            gorenstein,
            almost_gorenstein,
            complete_intersection,
            type_formula,
            type_ag,
            z,
            ring_witness,
            bounds_ok,
        } = full_report(spec.ideal())?;
        Ok(DuplicationReport {
            semigroup: spec.base().clone(),
            ideal: spec.ideal().clone(),
            b: spec.b(),
            translate: spec.translate_policy(),
            shift: spec.shift(),
            frobenius: t.frobenius(),
            genus: t.genus(),
            cm_type: type_formula,
            gorenstein,
            almost_gorenstein,
            complete_intersection,
            type_routes: TypeRoutes {
                formula: type_formula,
                ag: type_ag,
                direct: direct_type(&t),
            },
            z,
            ring_witness,
            bounds_ok,
            duplication: t,
        })
    }
}
