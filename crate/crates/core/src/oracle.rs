//! Brute-force ground truth for `Sem(F)`.
//!
//! Scans all `2^(F-1)` candidate vectors with `x_F = 1` and keeps those that
//! satisfy the superadditivity system. Shares nothing with the partition-based
//! enumerator beyond the `KunzVector` type.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::class::class_members_sorted;
use crate::enumerate::{enumerate_all, enumerate_irreducible_kunz};
use crate::error::{Error, Result};
use crate::kunz::KunzVector;
use crate::partition::delta_k;

pub const DEFAULT_ORACLE_CEILING: usize = 22;

/// Candidates are held as `u64` masks, so no ceiling may exceed this.
pub const MAX_ORACLE_CEILING: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub frobenius: usize,
    /// Strictly increasing by bitstring.
    pub members: Vec<KunzVector>,
    pub total: usize,
}

/// Bit `i - 1` of `mask` is `x_i`. Pairs are scanned by increasing `i + j`.
fn mask_is_kunz(mask: u64, f: usize) -> bool {
    let x = |i: usize| mask >> (i - 1) & 1 == 1;
    for s in 2..=f {
        if !x(s) {
            continue;
        }
        for i in 1..=s / 2 {
            if !x(i) && !x(s - i) {
                return false;
            }
        }
    }
    true
}

fn check_ceiling(f: usize, ceiling: usize) -> Result<()> {
    if f == 0 {
        return Err(Error::ZeroFrobenius);
    }
    let ceiling = ceiling.min(MAX_ORACLE_CEILING);
    if f > ceiling {
        return Err(Error::TooLarge {
            frobenius: f,
            ceiling,
        });
    }
    Ok(())
}

pub fn brute_force_sem(f: usize) -> Result<OracleResult> {
    brute_force_sem_with_ceiling(f, DEFAULT_ORACLE_CEILING)
}

pub fn brute_force_sem_with_ceiling(f: usize, ceiling: usize) -> Result<OracleResult> {
    check_ceiling(f, ceiling)?;
    let top = 1u64 << (f - 1);
    let mut members: Vec<KunzVector> = (0..top)
        .into_par_iter()
        .map(|free| free | top)
        .filter(|&mask| mask_is_kunz(mask, f))
        .map(|mask| {
            let bits = BitSet::from_bools((1..=f).map(|i| mask >> (i - 1) & 1 == 1));
            KunzVector::from_bitset_unchecked(bits)
        })
        .collect();
    members.sort_unstable();
    Ok(OracleResult {
        frobenius: f,
        total: members.len(),
        members,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub frobenius: usize,
    pub total: usize,
    pub groups: usize,
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "F = {}: {} semigroups in {} classes",
            self.frobenius, self.total, self.groups
        )?;
        for c in &self.checks {
            write!(f, "[{}] {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
            if let Some(ce) = &c.counterexample {
                write!(f, " (counterexample: {ce})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Collects the first failure of a check across all groups.
struct Check {
    name: &'static str,
    counterexample: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            counterexample: None,
        }
    }

    fn require(&mut self, ok: bool, ce: impl FnOnce() -> String) {
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(ce());
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name.to_string(),
            passed: self.counterexample.is_none(),
            counterexample: self.counterexample,
        }
    }
}

fn componentwise(group: &[KunzVector], take_max: bool) -> KunzVector {
    let mut bits = group[0].bitset().clone();
    for y in &group[1..] {
        if take_max {
            bits.union_with(y.bitset());
        } else {
            bits.intersect_with(y.bitset());
        }
    }
    KunzVector::from_bitset_unchecked(bits)
}

/// Cross-checks the partition machinery against the oracle for one `F`.
pub fn verify_partition(f: usize, ceiling: usize) -> Result<VerificationReport> {
    let oracle = brute_force_sem_with_ceiling(f, ceiling)?;

    let mut groups: BTreeMap<Vec<usize>, Vec<KunzVector>> = BTreeMap::new();
    for x in &oracle.members {
        groups.entry(x.theta_k()).or_default().push(x.clone());
    }

    let mut cover = Check::new("partition enumeration equals the oracle set, without duplicates");
    let streamed: Vec<KunzVector> = enumerate_all(f).collect();
    let distinct: HashSet<&KunzVector> = streamed.iter().collect();
    cover.require(distinct.len() == streamed.len(), || {
        "duplicate member emitted".into()
    });
    let oracle_set: HashSet<&KunzVector> = oracle.members.iter().collect();
    if let Some(extra) = distinct.iter().find(|y| !oracle_set.contains(*y)) {
        cover.require(false, || format!("{extra} not in oracle"));
    }
    if let Some(missing) = oracle_set.iter().find(|y| !distinct.contains(*y)) {
        cover.require(false, || format!("{missing} missing"));
    }

    let mut irreducibles =
        Check::new("irreducible stream equals oracle members of genus ceil((F+1)/2)");
    let stream: BTreeSet<KunzVector> = enumerate_irreducible_kunz(f).collect();
    let expected: BTreeSet<KunzVector> = oracle
        .members
        .iter()
        .filter(|x| x.popcount() == (f + 1).div_ceil(2))
        .cloned()
        .collect();
    irreducibles.require(stream == expected, || {
        format!("{} streamed vs {} expected", stream.len(), expected.len())
    });

    let mut unique_irr = Check::new("each class has one irreducible, its componentwise minimum");
    let mut unique_hom =
        Check::new("each class has one homogeneous member, its componentwise maximum");
    let mut closed = Check::new("each class is closed under meet and join");
    let mut reproduced = Check::new("each class is reproduced by enumerating its irreducible");
    let mut delta = Check::new("delta_k maps the irreducible to the homogeneous member");

    for (theta, group) in &groups {
        let label = || format!("theta {theta:?}");
        let irr: Vec<_> = group.iter().filter(|x| x.is_irreducible()).collect();
        let min = componentwise(group, false);
        unique_irr.require(irr.len() == 1 && *irr[0] == min, label);

        let hom: Vec<_> = group.iter().filter(|x| x.is_homogeneous()).collect();
        let max = componentwise(group, true);
        unique_hom.require(hom.len() == 1 && *hom[0] == max, label);

        let members: HashSet<&KunzVector> = group.iter().collect();
        'pairs: for a in group {
            for b in group {
                let ok = matches!(a.meet(b), Ok(m) if members.contains(&m))
                    && matches!(a.join(b), Ok(j) if members.contains(&j));
                if !ok {
                    closed.require(false, || format!("{a} and {b}"));
                    break 'pairs;
                }
            }
        }

        if let [x] = irr.as_slice() {
            let listed = class_members_sorted(x).unwrap_or_default();
            reproduced.require(listed == *group, || format!("class of {x}"));
            delta.require(hom.len() == 1 && delta_k(x).as_ref() == Ok(hom[0]), || {
                format!("class of {x}")
            });
        } else {
            reproduced.require(false, label);
            delta.require(false, label);
        }
    }

    Ok(VerificationReport {
        frobenius: f,
        total: oracle.total,
        groups: groups.len(),
        checks: [
            cover,
            irreducibles,
            unique_irr,
            unique_hom,
            closed,
            reproduced,
            delta,
        ]
        .into_iter()
        .map(Check::finish)
        .collect(),
    })
}
