//! Motives of towers of pure Tate fibre bundles.
//!
//! When `X → Y` is a Zariski locally trivial fibration whose fibre `F` is
//! pure Tate and satisfies Poincaré duality, the motive of `X` splits as
//! `M(Y) ⊗ M(F)`. This crate computes the resulting decompositions for
//! iterated towers whose fibres are projective spaces, Grassmannians,
//! projective homogeneous spaces `G/P`, or explicit cellular varieties, along
//! with Chow and higher Chow rank tables and Chow–Künneth assemblies. All
//! arithmetic is exact.
//!
//! ```
//! use motcalc::{FibreSpec, OrbitCap, TowerSpec};
//!
//! let tower = TowerSpec::over_point(vec!["Gr 2 4".parse()?, "P 1".parse()?]);
//! let motive = tower.motive(OrbitCap::DEFAULT)?;
//! assert_eq!(motive.to_string(), "1 + 2·L + 3·L^2 + 3·L^3 + 2·L^4 + L^5");
//! # Ok::<(), motcalc::Error>(())
//! ```
//!
//! Modules:
//! - [`tate`]: pure Tate motives as multiplicity vectors;
//! - [`weyl`]: root systems and minimal coset representatives `W^P`;
//! - [`cellular`]: fibre descriptions and their motives;
//! - [`tower`]: towers, Chow rank vectors, higher Chow tables, Chow–Künneth;
//! - [`verify`]: independent oracles and cross-check suites;
//! - [`cli`]: the `motcalc` command line.

pub mod cellular;
pub mod cli;
pub mod error;
pub mod tate;
pub mod tower;
pub mod verify;
pub mod weyl;

pub use cellular::FibreSpec;
pub use error::{Error, Result};
pub use tate::{TateMotive, Twist};
pub use tower::{ck_assemble, higher_chow_table, BaseSpec, CKComponent, RankTable, TowerSpec};
pub use verify::{run_suite, CellModel, Suite, SuiteReport};
pub use weyl::{
    coset_lengths, gp_motive, weyl_order, CosetLengthProfile, Family, OrbitCap, ParabolicSpec,
    RootSystem,
};
