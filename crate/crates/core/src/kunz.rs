//! Kunz-coordinates vectors with respect to `F + 1`.
//!
//! For a semigroup `S` with Frobenius number `F` and modulus `F + 1`, every
//! Apéry element is either `i` or `i + F + 1`, so the Kunz vector is a 0-1
//! vector of length `F` whose `i`-th entry is `1` exactly when `i` is a gap.
//! Indices in this module's public API are 1-based to match that reading.

use std::fmt;
use std::str::FromStr;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A validated element of `Kunz(F)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KunzVector {
    bits: BitSet,
}

/// Returns `true` iff `bits` (entry `k` is `x_{k+1}`) lies in `Kunz(F)` for
/// `F = bits.len()`: `x_F = 1` and `x_i + x_j >= x_{i+j}` whenever `i + j <= F`.
pub fn is_kunz(bits: &[bool]) -> bool {
    first_violation(bits).is_none()
}

/// First failing condition, scanning pairs by increasing `i + j`.
fn first_violation(bits: &[bool]) -> Option<String> {
    let f = bits.len();
    if f == 0 {
        return Some("empty vector".into());
    }
    if !bits[f - 1] {
        return Some(format!("x_{f} must be 1"));
    }
    let x = |i: usize| bits[i - 1];
    for s in 2..=f {
        if !x(s) {
            continue;
        }
        for i in 1..=s / 2 {
            if !x(i) && !x(s - i) {
                return Some(format!("x_{i} + x_{} - x_{s} < 0", s - i));
            }
        }
    }
    None
}

impl KunzVector {
    pub fn new(bits: &[bool]) -> Result<Self> {
        if let Some(why) = first_violation(bits) {
            return Err(Error::InvalidKunz(why));
        }
        Ok(KunzVector {
            bits: BitSet::from_bools(bits.iter().copied()),
        })
    }

    /// Wraps a bitset already known to satisfy the Kunz system.
    pub(crate) fn from_bitset_unchecked(bits: BitSet) -> Self {
        debug_assert!(is_kunz(&bits.iter().collect::<Vec<_>>()));
        KunzVector { bits }
    }

    /// The vector of `{0, F+1, F+2, ...}`.
    pub fn all_ones(frobenius: usize) -> Result<Self> {
        if frobenius == 0 {
            return Err(Error::ZeroFrobenius);
        }
        Ok(KunzVector {
            bits: BitSet::ones(frobenius),
        })
    }

    pub fn frobenius(&self) -> usize {
        self.bits.len()
    }

    /// Entry `x_i`, `1 <= i <= F`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.bits.get(i - 1)
    }

    pub(crate) fn bitset(&self) -> &BitSet {
        &self.bits
    }

    pub fn to_bools(&self) -> Vec<bool> {
        self.bits.iter().collect()
    }

    /// Number of ones, i.e. the genus of `S_x`.
    pub fn popcount(&self) -> usize {
        self.bits.count_ones()
    }

    /// Indices `i` with `x_i = 1`, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones().map(|k| k + 1)
    }

    /// Kunz coordinates of `s` with respect to `F(S) + 1`, read off the Apéry set.
    pub fn from_semigroup(s: &NumericalSemigroup) -> Self {
        let f = s.frobenius();
        let n = f + 1;
        let ap = s
            .apery_set(n)
            .expect("F + 1 always belongs to a semigroup with Frobenius number F");
        let bits = BitSet::from_bools(ap.elements()[1..].iter().enumerate().map(|(k, &w)| {
            let i = k + 1;
            let coord = (w - i) / n;
            debug_assert!(coord <= 1 && (w - i) % n == 0);
            coord == 1
        }));
        KunzVector { bits }
    }

    pub fn to_semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_kunz(self.clone())
    }

    /// The generating system `<F+1, (F+1)x_1 + 1, ..., (F+1)x_F + F>`.
    pub fn phi_generators(&self) -> Vec<usize> {
        let n = self.frobenius() + 1;
        std::iter::once(n)
            .chain((1..n).map(|i| n * usize::from(self.get(i)) + i))
            .collect()
    }

    fn check_same_frobenius(&self, other: &KunzVector) -> Result<()> {
        if self.frobenius() != other.frobenius() {
            return Err(Error::FrobeniusMismatch {
                left: self.frobenius(),
                right: other.frobenius(),
            });
        }
        Ok(())
    }

    /// Componentwise maximum: the vector of `S_x ∩ S_y`.
    pub fn meet(&self, other: &KunzVector) -> Result<KunzVector> {
        self.check_same_frobenius(other)?;
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Ok(KunzVector { bits })
    }

    /// Componentwise minimum: the vector of `S_x ∪ S_y`. Only defined inside
    /// one congruence class.
    pub fn join(&self, other: &KunzVector) -> Result<KunzVector> {
        self.check_same_frobenius(other)?;
        if self.theta_k() != other.theta_k() {
            return Err(Error::NotSameClass);
        }
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Ok(KunzVector { bits })
    }

    /// Indices `i <= ceil(F/2) - 1` with `x_i = 0`.
    pub fn theta_k(&self) -> Vec<usize> {
        let bound = self.frobenius().div_ceil(2).saturating_sub(1);
        (1..=bound).filter(|&i| !self.get(i)).collect()
    }

    pub fn is_irreducible(&self) -> bool {
        self.popcount() == (self.frobenius() + 1).div_ceil(2)
    }

    /// `i` is a minimal generator of `S_x` iff `x_i = 0` and no split
    /// `i = j + (i - j)` has both parts in `S_x \ {0}`.
    pub fn is_minimal_generator(&self, i: usize) -> bool {
        if i == 0 || i > self.frobenius() || self.get(i) {
            return false;
        }
        (1..i).all(|j| self.get(j) || self.get(i - j))
    }

    /// No minimal generator in the open interval `]F/2, F[`.
    pub fn is_homogeneous(&self) -> bool {
        let f = self.frobenius();
        (f / 2 + 1..f).all(|i| !self.is_minimal_generator(i))
    }

    /// `[x] = {x}` for an irreducible `x`: every `i > F/2` is a gap or splits
    /// into two nonzero elements of `S_x`.
    pub fn is_singleton_class(&self) -> Result<bool> {
        if !self.is_irreducible() {
            return Err(Error::NotIrreducible);
        }
        let f = self.frobenius();
        Ok(
            (f / 2 + 1..=f)
                .all(|i| self.get(i) || (1..i).any(|j| !self.get(j) && !self.get(i - j))),
        )
    }
}

impl fmt::Display for KunzVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.bits, f)
    }
}

impl fmt::Debug for KunzVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KunzVector({:?})", self.bits)
    }
}

impl FromStr for KunzVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidKunz(format!(
                    "unexpected character {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        KunzVector::new(&bits)
    }
}
