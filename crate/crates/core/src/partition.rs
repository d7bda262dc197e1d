//! The congruence that partitions `Sem(F)`.
//!
//! Two semigroups with Frobenius number `F` are congruent when they share the
//! same nonzero elements below `F/2` (their theta image). Each class is a
//! distributive lattice under union and intersection whose maximum is the
//! unique irreducible member and whose minimum is the unique homogeneous
//! member `<theta(S)> ∪ {F+1, ...}`.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::kunz::KunzVector;
use crate::semigroup::NumericalSemigroup;

/// `{s ∈ S \ {0} : s < F/2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaImage {
    frobenius: usize,
    members: Vec<usize>,
}

impl ThetaImage {
    pub fn frobenius(&self) -> usize {
        self.frobenius
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    fn of_kunz(x: &KunzVector) -> Self {
        ThetaImage {
            frobenius: x.frobenius(),
            members: x.theta_k(),
        }
    }
}

pub fn theta(s: &NumericalSemigroup) -> ThetaImage {
    let f = s.frobenius();
    let members = (1..)
        .take_while(|&i| 2 * i < f)
        .filter(|&i| s.contains(i))
        .collect::<Vec<_>>();
    debug_assert!(members.iter().all(|&n| !f.is_multiple_of(n)));
    ThetaImage {
        frobenius: f,
        members,
    }
}

/// Gap indicator over `[1, f]` of `<seeds> ∪ {f+1, ...}`: position `i` is a
/// gap unless `i` is a nonempty sum of seeds.
fn closure_gaps(f: usize, seeds: &[usize]) -> BitSet {
    let mut reach = vec![false; f + 1];
    reach[0] = true;
    for i in 1..=f {
        reach[i] = seeds.iter().any(|&g| g <= i && reach[i - g]);
    }
    BitSet::from_bools((1..=f).map(|i| !reach[i]))
}

/// Class maximum `S ∪ {x ∉ S : F - x ∉ S, x > F/2}`, the irreducible member of `[S]`.
pub fn class_max(s: &NumericalSemigroup) -> NumericalSemigroup {
    NumericalSemigroup::from_kunz(class_max_kunz(s.kunz()))
}

pub fn class_max_kunz(x: &KunzVector) -> KunzVector {
    let f = x.frobenius();
    let mut bits = x.bitset().clone();
    for i in (f / 2 + 1)..f {
        if x.get(i) && x.get(f - i) {
            bits.remove(i - 1);
        }
    }
    KunzVector::from_bitset_unchecked(bits)
}

/// Class minimum `<theta(S)> ∪ {F+1, ...}`, the homogeneous member of `[S]`.
/// `<∅>` is `{0}`.
pub fn class_min(s: &NumericalSemigroup) -> NumericalSemigroup {
    NumericalSemigroup::from_kunz(class_min_kunz(s.kunz()))
}

pub fn class_min_kunz(x: &KunzVector) -> KunzVector {
    KunzVector::from_bitset_unchecked(closure_gaps(x.frobenius(), &x.theta_k()))
}

/// Bijection from irreducible to homogeneous semigroups with the same `F`.
pub fn delta(s: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    if !s.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    Ok(class_min(s))
}

pub fn delta_inverse(s: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    if !s.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(class_max(s))
}

/// Kunz vector of `delta(S_x)`, by direct closure of `theta_k(x)`.
pub fn delta_k(x: &KunzVector) -> Result<KunzVector> {
    if !x.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    Ok(class_min_kunz(x))
}

/// `D(S_x) = {i : x_i = 0, y_i = 1}` with `y = delta_k(x)`.
pub fn d_set(x: &KunzVector, y: &KunzVector) -> Vec<usize> {
    (1..=x.frobenius())
        .filter(|&i| !x.get(i) && y.get(i))
        .collect()
}

/// Everything needed to enumerate one congruence class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDescriptor {
    theta: ThetaImage,
    max_irreducible: KunzVector,
    min_homogeneous: KunzVector,
    d_set: Vec<usize>,
}

impl ClassDescriptor {
    pub fn new(x: &KunzVector) -> Result<Self> {
        let y = delta_k(x)?;
        let d = d_set(x, &y);
        debug_assert!(d.iter().all(|&i| 2 * i > x.frobenius()));
        Ok(ClassDescriptor {
            theta: ThetaImage::of_kunz(x),
            max_irreducible: x.clone(),
            min_homogeneous: y,
            d_set: d,
        })
    }

    pub fn frobenius(&self) -> usize {
        self.max_irreducible.frobenius()
    }

    pub fn theta(&self) -> &ThetaImage {
        &self.theta
    }

    pub fn max_irreducible(&self) -> &KunzVector {
        &self.max_irreducible
    }

    pub fn min_homogeneous(&self) -> &KunzVector {
        &self.min_homogeneous
    }

    pub fn d_set(&self) -> &[usize] {
        &self.d_set
    }

    /// `0` or a member of `delta(S)` no larger than `F`.
    fn in_min(&self, delta: usize) -> bool {
        delta == 0 || !self.min_homogeneous.get(delta)
    }

    /// `T(d) = (d + delta(S)) ∩ D(S)`.
    pub fn t_closure(&self, d: usize) -> Result<Vec<usize>> {
        if self.d_set.binary_search(&d).is_err() {
            return Err(Error::NotInDSet { d });
        }
        Ok(self
            .d_set
            .iter()
            .copied()
            .filter(|&e| e >= d && self.in_min(e - d))
            .collect())
    }

    /// `T(B)`, the union of `T(b)` over `b ∈ B`, ascending.
    pub fn t_of_set(&self, b: &[usize]) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for &d in b {
            out.extend(self.t_closure(d)?);
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// `T(d_k)` as a mask over positions of `d_set`.
    pub(crate) fn t_masks(&self) -> Vec<BitSet> {
        let n = self.d_set.len();
        self.d_set
            .iter()
            .map(|&d| {
                let mut m = BitSet::zeros(n);
                for (j, &e) in self.d_set.iter().enumerate() {
                    if e >= d && self.in_min(e - d) {
                        m.insert(j);
                    }
                }
                m
            })
            .collect()
    }
}
