//! Enumeration of the numerical semigroups with a fixed Frobenius number.
//!
//! `Sem(F)` is split into congruence classes keyed by the elements below
//! `F/2`. Each class has exactly one irreducible member (its maximum) and one
//! homogeneous member (its minimum), and every other member is recovered from
//! those two. All of it runs on Kunz-coordinates vectors with respect to
//! `F + 1`, which for these semigroups are simply gap indicators.
//!
//! ```
//! use nsg_core::{enumerate_all_sorted, KunzVector};
//!
//! let all: Vec<String> = enumerate_all_sorted(5).iter().map(KunzVector::to_string).collect();
//! assert_eq!(all, ["10101", "11001", "11011", "11101", "11111"]);
//! ```

mod bitset;
pub mod class;
pub mod enumerate;
pub mod error;
pub mod ip;
pub mod kunz;
pub mod oracle;
pub mod partition;
pub mod semigroup;

pub use class::{
    class_members_sorted, class_size, collect_class, enumerate_class, enumerate_class_setform,
    ClassIterator,
};
pub use enumerate::{
    count_all, enumerate_all, enumerate_all_sorted, enumerate_classes, enumerate_homogeneous_kunz,
    enumerate_irreducible_kunz, par_enumerate_classes, ClassMembers, CountReport,
};
pub use error::{Error, Result};
pub use ip::{build_ip_delta, ip_delta_solve, BinarySystem};
pub use kunz::{is_kunz, KunzVector};
pub use oracle::{
    brute_force_sem, brute_force_sem_with_ceiling, verify_partition, OracleResult,
    VerificationReport, DEFAULT_ORACLE_CEILING,
};
pub use partition::{
    class_max, class_min, d_set, delta, delta_inverse, delta_k, theta, ClassDescriptor, ThetaImage,
};
pub use semigroup::{AperySet, NumericalSemigroup};
