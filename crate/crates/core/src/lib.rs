//! Numerical semigroups, their relative ideals, and the numerical
//! duplication `S ⋈ᵇ E = 2·S ∪ (2·E + b)`.
//!
//! The [`classify`] module decides Gorenstein, almost Gorenstein, type and
//! complete-intersection properties of a duplication from `(S, E)` alone;
//! the [`oracle`] module recomputes the same properties by brute force on
//! the duplication and sweeps whole corpora for disagreements.
//!
//! ```
//! use numdup::{duplicate, DuplicationSpec, NumericalSemigroup, RelativeIdeal, TranslatePolicy};
//!
//! let s = NumericalSemigroup::from_generators(&[4, 5, 11]).unwrap();
//! let e = RelativeIdeal::from_generators(&s, &[5, 8]).unwrap();
//! let spec = DuplicationSpec::new(&e, Some(5), TranslatePolicy::None).unwrap();
//! assert_eq!(duplicate(&spec).unwrap().min_gens(), &[8, 10, 15, 21, 22]);
//! assert_eq!(numdup::classify::dup_type_formula(&e), 3);
//! ```

mod bits;
mod ci;
pub mod classify;
pub mod construct;
pub mod duplication;
pub mod error;
pub mod ideal;
pub mod oracle;
pub mod parse;
pub mod report;
pub mod semigroup;
pub mod tree;

pub use classify::{full_report, ClassificationReport};
pub use duplication::{duplicate, DuplicationSpec, TranslatePolicy};
pub use error::{Error, Result};
pub use ideal::{enumerate_normalized_ideals, RelativeIdeal};
pub use report::DuplicationReport;
pub use semigroup::NumericalSemigroup;
pub use tree::enumerate_by_genus;
