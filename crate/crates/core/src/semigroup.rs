//! Numerical semigroups stored by their gap set.
//!
//! A semigroup with Frobenius number `F` is kept as the bitset of its gaps in
//! `[1, F]`; everything above `F` is implicitly a member. That bitset is the
//! Kunz-coordinates vector with respect to `F + 1`, so the two representations
//! share storage.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::kunz::KunzVector;

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub struct NumericalSemigroup {
    kunz: KunzVector,
    min_generators: OnceLock<Vec<usize>>,
}

impl NumericalSemigroup {
    /// The semigroup `<gens>`, with its gap set computed exactly.
    ///
    /// Membership is propagated upward from `0`; once `min(gens)` consecutive
    /// members have been seen every larger integer is a member, and the last
    /// non-member is the Frobenius number.
    pub fn from_generators(gens: &[usize]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::NotCoprime { gcd: g });
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let m = gens[0];
        if m == 1 {
            return Err(Error::TrivialSemigroup);
        }

        let mut member = vec![true];
        let mut run = 1;
        let mut n = 0;
        while run < m {
            n += 1;
            let is_member = gens.iter().take_while(|&&g| g <= n).any(|&g| member[n - g]);
            member.push(is_member);
            run = if is_member { run + 1 } else { 0 };
        }
        let frobenius = n - run;
        let bits = BitSet::from_bools((1..=frobenius).map(|i| !member[i]));
        Ok(Self::from_kunz(KunzVector::from_bitset_unchecked(bits)))
    }

    /// Builds the semigroup whose gaps are exactly `gaps`; fails unless the
    /// complement is closed under addition.
    pub fn from_gaps(gaps: &[usize]) -> Result<Self> {
        let frobenius = *gaps.iter().max().ok_or(Error::TrivialSemigroup)?;
        if gaps.contains(&0) {
            return Err(Error::InvalidGapSet("0 cannot be a gap".into()));
        }
        let mut bits = vec![false; frobenius];
        for &g in gaps {
            bits[g - 1] = true;
        }
        let kunz = KunzVector::new(&bits).map_err(|e| match e {
            Error::InvalidKunz(why) => Error::InvalidGapSet(why),
            other => other,
        })?;
        Ok(Self::from_kunz(kunz))
    }

    pub fn from_kunz(kunz: KunzVector) -> Self {
        NumericalSemigroup {
            kunz,
            min_generators: OnceLock::new(),
        }
    }

    pub fn frobenius(&self) -> usize {
        self.kunz.frobenius()
    }

    pub fn genus(&self) -> usize {
        self.kunz.popcount()
    }

    pub fn gaps(&self) -> Vec<usize> {
        self.kunz.ones().collect()
    }

    /// Gap indicator as a Kunz vector with respect to `F + 1`.
    pub fn kunz(&self) -> &KunzVector {
        &self.kunz
    }

    pub fn contains(&self, s: usize) -> bool {
        s == 0 || s > self.frobenius() || !self.kunz.get(s)
    }

    /// `Ap(S, n)`: `w_i` is the least member congruent to `i` modulo `n`.
    pub fn apery_set(&self, n: usize) -> Result<AperySet> {
        if n == 0 || !self.contains(n) {
            return Err(Error::NotMember { n });
        }
        let elements = (0..n)
            .map(|i| (i..).step_by(n).find(|&s| self.contains(s)).unwrap())
            .collect();
        Ok(AperySet {
            modulus: n,
            elements,
        })
    }

    /// Unique minimal generating system, ascending. Every minimal generator
    /// lies in `[1, 2F + 1]`.
    pub fn minimal_generators(&self) -> &[usize] {
        self.min_generators.get_or_init(|| {
            let f = self.frobenius();
            (1..=2 * f + 1)
                .filter(|&s| {
                    if s <= f {
                        self.kunz.is_minimal_generator(s)
                    } else {
                        (1..=s / 2).all(|a| !(self.contains(a) && self.contains(s - a)))
                    }
                })
                .collect()
        })
    }

    pub fn is_homogeneous(&self) -> bool {
        let f = self.frobenius();
        !self
            .minimal_generators()
            .iter()
            .any(|&g| 2 * g > f && g < f)
    }

    /// Irreducible iff the genus is `ceil((F + 1) / 2)`.
    pub fn is_irreducible(&self) -> bool {
        self.genus() == (self.frobenius() + 1).div_ceil(2)
    }

    /// `S \ {x}` for a minimal generator `x`.
    pub fn remove_minimal_generator(&self, x: usize) -> Result<NumericalSemigroup> {
        if self.minimal_generators().binary_search(&x).is_err() {
            return Err(Error::NotMinimalGenerator { x });
        }
        let f = self.frobenius().max(x);
        let mut bits = BitSet::zeros(f);
        for i in 1..=f {
            bits.set(i - 1, i == x || !self.contains(i));
        }
        Ok(Self::from_kunz(KunzVector::from_bitset_unchecked(bits)))
    }

    /// Members in `[0, bound]`, ascending.
    pub fn elements_up_to(&self, bound: usize) -> Vec<usize> {
        (0..=bound).filter(|&s| self.contains(s)).collect()
    }
}

impl Clone for NumericalSemigroup {
    fn clone(&self) -> Self {
        NumericalSemigroup {
            kunz: self.kunz.clone(),
            min_generators: self.min_generators.clone(),
        }
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.kunz == other.kunz
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.kunz.hash(state);
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders the minimal generators as `<3,8,10>`.
impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .minimal_generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        write!(f, "<{}>", gens.join(","))
    }
}

/// Apéry set `{w_0, ..., w_{n-1}}` of a semigroup with respect to `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperySet {
    modulus: usize,
    elements: Vec<usize>,
}

impl AperySet {
    /// Checks the shape constraints `w_0 = 0` and `w_i ≡ i (mod n)`.
    pub fn new(modulus: usize, elements: Vec<usize>) -> Result<Self> {
        if modulus == 0 || elements.len() != modulus {
            return Err(Error::CorruptAperySet(format!(
                "expected {modulus} elements, got {}",
                elements.len()
            )));
        }
        if elements[0] != 0 {
            return Err(Error::CorruptAperySet("w_0 must be 0".into()));
        }
        if let Some(i) = (0..modulus).find(|&i| elements[i] % modulus != i) {
            return Err(Error::CorruptAperySet(format!(
                "w_{i} is not congruent to {i}"
            )));
        }
        Ok(AperySet { modulus, elements })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Selmer: `g(S) = (1/n) Σ w - (n - 1) / 2`.
    pub fn genus_selmer(&self) -> Result<usize> {
        let n = self.modulus;
        let twice = 2 * self.elements.iter().sum::<usize>();
        let offset = n * (n - 1);
        if twice < offset || !(twice - offset).is_multiple_of(2 * n) {
            return Err(Error::CorruptAperySet(
                "Selmer genus is not a nonnegative integer".into(),
            ));
        }
        Ok((twice - offset) / (2 * n))
    }

    /// Selmer: `F(S) = max(Ap(S, n)) - n`.
    pub fn frobenius(&self) -> Result<usize> {
        let max = *self.elements.iter().max().unwrap();
        max.checked_sub(self.modulus).ok_or(Error::TrivialSemigroup)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[usize]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn closure_examples() {
        let s = sg(&[3, 5]);
        assert_eq!(s.gaps(), vec![1, 2, 4, 7]);
        assert_eq!(s.frobenius(), 7);
        assert_eq!(
            NumericalSemigroup::from_generators(&[1]),
            Err(Error::TrivialSemigroup)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[2, 4]),
            Err(Error::NotCoprime { gcd: 2 })
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 3]),
            Err(Error::ZeroGenerator)
        );
        assert_eq!(sg(&[5, 3, 5, 8]), sg(&[3, 5]));
    }

    #[test]
    fn membership() {
        let s = sg(&[3, 5]);
        assert!(s.contains(0));
        assert!(!s.contains(7));
        assert!(s.contains(8));
        assert!(s.contains(6));
        assert_eq!(s.elements_up_to(10), vec![0, 3, 5, 6, 8, 9, 10]);
    }

    #[test]
    fn apery_examples() {
        let s = sg(&[3, 5]);
        assert_eq!(s.apery_set(3).unwrap().elements(), &[0, 10, 5]);
        assert_eq!(
            s.apery_set(8).unwrap().elements(),
            &[0, 9, 10, 3, 12, 5, 6, 15]
        );
        assert_eq!(s.apery_set(4), Err(Error::NotMember { n: 4 }));
        assert_eq!(s.apery_set(0), Err(Error::NotMember { n: 0 }));
    }

    #[test]
    fn selmer_examples() {
        let ap = sg(&[3, 5]).apery_set(3).unwrap();
        assert_eq!(ap.genus_selmer(), Ok(4));
        assert_eq!(ap.frobenius(), Ok(7));
        let trivial = AperySet::new(1, vec![0]).unwrap();
        assert_eq!(trivial.genus_selmer(), Ok(0));
        assert_eq!(trivial.frobenius(), Err(Error::TrivialSemigroup));
        let ap = AperySet::new(2, vec![0, 7]).unwrap();
        assert_eq!(ap.genus_selmer(), Ok(3));
        assert_eq!(ap.frobenius(), Ok(5));
        assert!(AperySet::new(2, vec![0, 6]).is_err());
        assert!(AperySet::new(3, vec![0, 4]).is_err());
    }

    #[test]
    fn minimal_generator_examples() {
        let s = NumericalSemigroup::from_gaps(&[1, 2, 4, 5, 7]).unwrap();
        assert_eq!(s.minimal_generators(), &[3, 8, 10]);
        let s = NumericalSemigroup::from_gaps(&[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(s.minimal_generators(), &[6, 7, 8, 9, 10, 11]);
        let s = NumericalSemigroup::from_gaps(&[1]).unwrap();
        assert_eq!(s.minimal_generators(), &[2, 3]);
        assert_eq!(s.to_string(), "<2,3>");
        assert!(matches!(
            NumericalSemigroup::from_gaps(&[2, 5]),
            Err(Error::InvalidGapSet(_))
        ));
        assert!(NumericalSemigroup::from_gaps(&[]).is_err());
    }

    #[test]
    fn homogeneous_and_irreducible() {
        let s38 = NumericalSemigroup::from_gaps(&[1, 2, 4, 5, 7]).unwrap();
        assert!(s38.is_homogeneous());
        assert!(!sg(&[3, 5]).is_homogeneous());
        assert!(sg(&[2, 7]).is_homogeneous());

        assert!(sg(&[3, 5]).is_irreducible());
        assert!(sg(&[2, 7]).is_irreducible());
        assert!(!NumericalSemigroup::from_gaps(&[1, 2, 3, 4, 5])
            .unwrap()
            .is_irreducible());
    }

    #[test]
    fn remove_generator_examples() {
        let s = sg(&[3, 5]).remove_minimal_generator(5).unwrap();
        assert_eq!(s.gaps(), vec![1, 2, 4, 5, 7]);
        assert_eq!(s.minimal_generators(), &[3, 8, 10]);
        assert_eq!(
            sg(&[3, 5]).remove_minimal_generator(6),
            Err(Error::NotMinimalGenerator { x: 6 })
        );
        let s = sg(&[2, 3]).remove_minimal_generator(3).unwrap();
        assert_eq!(s, sg(&[2, 5]));
        assert_eq!(s.frobenius(), 3);
    }
}
