//! Screening of Yetter-Drinfeld modules over `SL(2,q)` and `GL(2,q)` for
//! finite-dimensional Nichols algebras.

pub mod braid;
pub mod chars;
pub mod classify;
pub mod criteria;
pub mod ff;
pub mod grp2;
pub mod numth;
pub mod racks;

pub use braid::{BraidingMatrix, CommutingSubset, DynkinDiagram, PowerPair};
pub use chars::{AbelianStruct, Character, RootOfUnity};
pub use classify::{
    generation_check_a, screen_group, CheckMode, CheckStatus, ClassFlag, ClassReport, KnownCheck, Report,
    ScreeningVerdict, Subject, Verdict,
};
pub use criteria::{Criterion, CriterionVerdict, Outcome, Witness};
pub use ff::{Field, FieldSpec, FqElem};
pub use grp2::{ClassTag, ClassType, ConjClass, Group, GroupKind, GroupSpec, Mat2};
pub use numth::{euler_phi, lematec_check, snl_check, PhiCheck};
pub use racks::{named_rack, rack_from_class, rack_iso, NamedRack, Rack};
