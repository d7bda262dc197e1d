//! Enumeration of one congruence class `[x]` from its irreducible maximum.
//!
//! Members are `delta_k(x) - Σ_{i ∈ X} e_i` for the distinct closed sets
//! `X = T(B)`, `B ⊆ D(S_x)`. A subset of `D` is of that form exactly when it
//! is upward closed for `d ≼ e ⟺ e - d ∈ delta(S_x)`, and since `d ≼ e`
//! implies `d <= e` those sets can be generated by deciding `D` in ascending
//! order: including `d` forces `T(d)`, excluding it is allowed unless an
//! earlier inclusion forced it. Every branch of that walk ends in a distinct
//! member, so no deduplication is needed.

use std::collections::BTreeSet;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::kunz::KunzVector;
use crate::partition::{class_min, ClassDescriptor};
use crate::semigroup::NumericalSemigroup;

/// Walk over the closed subsets of `D`, in increasing lexicographic order of
/// the inclusion vector.
struct ClosedSetWalk {
    t_masks: Vec<BitSet>,
    included: Vec<bool>,
    /// `forced[k]`: union of `T(d_j)` over included `j < k`.
    forced: Vec<BitSet>,
    started: bool,
    done: bool,
}

impl ClosedSetWalk {
    fn new(desc: &ClassDescriptor) -> Self {
        let n = desc.d_set().len();
        ClosedSetWalk {
            t_masks: desc.t_masks(),
            included: vec![false; n],
            forced: vec![BitSet::zeros(n); n + 1],
            started: false,
            done: false,
        }
    }

    /// Fills positions `from..` with the default choice (include only when forced).
    fn fill_from(&mut self, from: usize) {
        for k in from..self.included.len() {
            let inc = self.forced[k].get(k);
            self.included[k] = inc;
            let mut next = self.forced[k].clone();
            if inc {
                next.union_with(&self.t_masks[k]);
            }
            self.forced[k + 1] = next;
        }
    }

    fn advance(&mut self) -> Option<&[bool]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_from(0);
            return Some(&self.included);
        }
        // An excluded position was never forced, so it may flip to included.
        let Some(k) = self.included.iter().rposition(|&inc| !inc) else {
            self.done = true;
            return None;
        };
        self.included[k] = true;
        let mut next = self.forced[k].clone();
        next.union_with(&self.t_masks[k]);
        self.forced[k + 1] = next;
        self.fill_from(k + 1);
        Some(&self.included)
    }
}

enum Walk {
    Single(Option<KunzVector>),
    Closed {
        base: BitSet,
        d: Vec<usize>,
        walk: ClosedSetWalk,
    },
}

/// Streams the members of `[x]`.
///
/// The first member is the class minimum `delta_k(x)` and the last is `x`
/// itself; in between, members come in decreasing lexicographic order of
/// their bitstrings. Use [`class_members_sorted`] for ascending order.
pub struct ClassIterator {
    walk: Walk,
}

impl ClassIterator {
    pub fn new(x: &KunzVector) -> Result<Self> {
        if x.is_singleton_class()? {
            return Ok(ClassIterator {
                walk: Walk::Single(Some(x.clone())),
            });
        }
        Ok(Self::from_descriptor(&ClassDescriptor::new(x)?))
    }

    pub fn from_descriptor(desc: &ClassDescriptor) -> Self {
        ClassIterator {
            walk: Walk::Closed {
                base: desc.min_homogeneous().bitset().clone(),
                d: desc.d_set().to_vec(),
                walk: ClosedSetWalk::new(desc),
            },
        }
    }
}

impl Iterator for ClassIterator {
    type Item = KunzVector;

    fn next(&mut self) -> Option<KunzVector> {
        match &mut self.walk {
            Walk::Single(x) => x.take(),
            Walk::Closed { base, d, walk } => {
                let included = walk.advance()?;
                let mut bits = base.clone();
                for (&i, _) in d.iter().zip(included).filter(|(_, &inc)| inc) {
                    bits.remove(i - 1);
                }
                Some(KunzVector::from_bitset_unchecked(bits))
            }
        }
    }
}

/// Members of `[x]` for an irreducible `x`, streamed.
pub fn enumerate_class(x: &KunzVector) -> Result<ClassIterator> {
    ClassIterator::new(x)
}

/// Members of `[x]`, failing with `LimitExceeded` if there are more than
/// `cap`. For partial output take from [`enumerate_class`] directly.
pub fn collect_class(x: &KunzVector, cap: Option<usize>) -> Result<Vec<KunzVector>> {
    let mut it = enumerate_class(x)?;
    match cap {
        None => Ok(it.collect()),
        Some(limit) => {
            let members: Vec<_> = it.by_ref().take(limit).collect();
            if it.next().is_some() {
                return Err(Error::LimitExceeded { limit });
            }
            Ok(members)
        }
    }
}

/// Members of `[x]`, ascending by bitstring.
pub fn class_members_sorted(x: &KunzVector) -> Result<Vec<KunzVector>> {
    let mut v: Vec<_> = enumerate_class(x)?.collect();
    v.reverse();
    debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
    Ok(v)
}

/// `|[x]|`, counted on the closed-set walk without building members.
pub fn class_size(x: &KunzVector) -> Result<usize> {
    if x.is_singleton_class()? {
        return Ok(1);
    }
    let desc = ClassDescriptor::new(x)?;
    let mut walk = ClosedSetWalk::new(&desc);
    let mut n = 0;
    while walk.advance().is_some() {
        n += 1;
    }
    Ok(n)
}

/// Largest `|D(S)|` accepted by the set-form path, which visits every subset.
pub const SETFORM_MAX_D: usize = 30;

/// Reference enumeration over integer sets: computes `delta(S)`, `D(S)`, then
/// `T(B)` for every `B ⊆ D(S)`, collapsing duplicates, and returns
/// `delta(S) ∪ X` for each distinct closed set `X`.
pub fn enumerate_class_setform(s: &NumericalSemigroup) -> Result<Vec<NumericalSemigroup>> {
    if !s.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    let f = s.frobenius();
    let min = class_min(s);
    let min_elems: BTreeSet<usize> = min.elements_up_to(f).into_iter().collect();
    let d: Vec<usize> = (1..=f)
        .filter(|&i| s.contains(i) && !min_elems.contains(&i))
        .collect();
    if d.len() > SETFORM_MAX_D {
        return Err(Error::LimitExceeded {
            limit: 1 << SETFORM_MAX_D,
        });
    }
    let t: Vec<BTreeSet<usize>> = d
        .iter()
        .map(|&di| {
            min_elems
                .iter()
                .map(|&m| di + m)
                .filter(|e| d.contains(e))
                .collect()
        })
        .collect();

    let mut family: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for mask in 0u64..(1u64 << d.len()) {
        let closed: BTreeSet<usize> = (0..d.len())
            .filter(|&k| mask >> k & 1 == 1)
            .flat_map(|k| t[k].iter().copied())
            .collect();
        family.insert(closed);
    }

    family
        .into_iter()
        .map(|x| {
            let gaps: Vec<usize> = (1..=f)
                .filter(|i| !min_elems.contains(i) && !x.contains(i))
                .collect();
            NumericalSemigroup::from_gaps(&gaps)
        })
        .collect()
}
