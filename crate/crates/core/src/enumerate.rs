//! Enumeration of `Sem(F)`: irreducible representatives by backtracking,
//! then one class per representative.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::class::{class_size, enumerate_class, ClassIterator};
use crate::kunz::KunzVector;
use crate::partition::delta_k;

/// One decision of the search: a complementary pair `(i, F - i)` with
/// `i < F/2`, or the middle index `F/2` for even `F`.
#[derive(Debug, Clone, Copy)]
enum Slot {
    Pair(usize, usize),
    Middle(usize),
}

const PAIR_OPTIONS: [(bool, bool); 3] = [(false, true), (true, false), (true, true)];
const MIDDLE_OPTIONS: [bool; 2] = [false, true];

impl Slot {
    fn options(self) -> usize {
        match self {
            Slot::Pair(..) => PAIR_OPTIONS.len(),
            Slot::Middle(_) => MIDDLE_OPTIONS.len(),
        }
    }
}

/// Partial assignment for the irreducible system.
struct SearchState {
    frobenius: usize,
    /// 1-based; index 0 unused.
    partial: Vec<Option<bool>>,
    remaining_ones: usize,
    unassigned: usize,
}

impl SearchState {
    fn new(f: usize) -> Self {
        let mut partial = vec![None; f + 1];
        partial[f] = Some(true);
        SearchState {
            frobenius: f,
            partial,
            remaining_ones: (f + 1).div_ceil(2) - 1,
            unassigned: f - 1,
        }
    }

    fn assign(&mut self, i: usize, v: bool) -> bool {
        debug_assert!(self.partial[i].is_none());
        if v {
            if self.remaining_ones == 0 {
                return false;
            }
            self.remaining_ones -= 1;
        }
        self.partial[i] = Some(v);
        self.unassigned -= 1;
        true
    }

    fn unassign(&mut self, i: usize) {
        if self.partial[i].take() == Some(true) {
            self.remaining_ones += 1;
        }
        self.unassigned += 1;
    }

    /// Every fully assigned superadditivity triple that touches `k` holds.
    fn consistent_at(&self, k: usize) -> bool {
        let f = self.frobenius;
        let x = |i: usize| self.partial[i];
        // k as the sum.
        if x(k) == Some(true) {
            for a in 1..=k / 2 {
                if let (Some(false), Some(false)) = (x(a), x(k - a)) {
                    return false;
                }
            }
        }
        // k as a summand.
        if x(k) == Some(false) {
            for j in 1..=f - k {
                if let (Some(false), Some(true)) = (x(j), x(k + j)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Streams `Kunz^I(F)` in ascending lexicographic order.
///
/// Variables are decided a complementary pair at a time, low index first and
/// `x_i = 0` first. Since `x_i + x_{F-i} >= x_F = 1` and the popcount budget
/// leaves exactly one `1` per pair, the low half determines the vector and the
/// search order is the output order.
pub struct IrreducibleIter {
    state: SearchState,
    slots: Vec<Slot>,
    stack: Vec<usize>,
    resume: usize,
    done: bool,
}

impl IrreducibleIter {
    pub fn new(f: usize) -> Self {
        assert!(f >= 1, "Frobenius number must be positive");
        let mut slots = Vec::new();
        if f.is_multiple_of(2) {
            slots.push(Slot::Middle(f / 2));
        }
        slots.extend((1..f.div_ceil(2)).map(|i| Slot::Pair(i, f - i)));
        IrreducibleIter {
            state: SearchState::new(f),
            slots,
            stack: Vec::new(),
            resume: 0,
            done: false,
        }
    }

    /// Assigns `slot` to option `opt`; leaves the state untouched on failure.
    fn apply(&mut self, slot: Slot, opt: usize) -> bool {
        let ok = match slot {
            Slot::Middle(m) => {
                if !self.state.assign(m, MIDDLE_OPTIONS[opt]) {
                    return false;
                }
                self.budget_ok() && self.state.consistent_at(m)
            }
            Slot::Pair(i, j) => {
                let (a, b) = PAIR_OPTIONS[opt];
                if !self.state.assign(i, a) {
                    return false;
                }
                if !self.state.assign(j, b) {
                    self.state.unassign(i);
                    return false;
                }
                self.budget_ok() && self.state.consistent_at(i) && self.state.consistent_at(j)
            }
        };
        if !ok {
            self.undo(slot);
        }
        ok
    }

    fn undo(&mut self, slot: Slot) {
        match slot {
            Slot::Middle(m) => self.state.unassign(m),
            Slot::Pair(i, j) => {
                self.state.unassign(i);
                self.state.unassign(j);
            }
        }
    }

    /// Each undecided pair still needs at least one `1`.
    fn budget_ok(&self) -> bool {
        let pairs_left = self.slots[self.stack.len() + 1..]
            .iter()
            .filter(|s| matches!(s, Slot::Pair(..)))
            .count();
        self.state.remaining_ones >= pairs_left
            && self.state.remaining_ones <= self.state.unassigned
    }

    fn leaf(&self) -> KunzVector {
        let bits = BitSet::from_bools(self.state.partial[1..].iter().map(|v| v.unwrap()));
        KunzVector::from_bitset_unchecked(bits)
    }
}

impl Iterator for IrreducibleIter {
    type Item = KunzVector;

    fn next(&mut self) -> Option<KunzVector> {
        while !self.done {
            let depth = self.stack.len();
            if depth == self.slots.len() {
                let out = self.leaf();
                debug_assert_eq!(self.state.remaining_ones, 0);
                self.backtrack();
                return Some(out);
            }
            let slot = self.slots[depth];
            let start = std::mem::take(&mut self.resume);
            let mut placed = false;
            for opt in start..slot.options() {
                if self.apply(slot, opt) {
                    self.stack.push(opt);
                    placed = true;
                    break;
                }
            }
            if !placed {
                self.backtrack();
            }
        }
        None
    }
}

impl IrreducibleIter {
    fn backtrack(&mut self) {
        match self.stack.pop() {
            Some(opt) => {
                let slot = self.slots[self.stack.len()];
                self.undo(slot);
                self.resume = opt + 1;
            }
            None => self.done = true,
        }
    }
}

pub fn enumerate_irreducible_kunz(f: usize) -> IrreducibleIter {
    IrreducibleIter::new(f)
}

/// `Kunz^Ho(F)` as the image of the irreducibles under `delta_k`.
pub fn enumerate_homogeneous_kunz(f: usize) -> impl Iterator<Item = KunzVector> {
    enumerate_irreducible_kunz(f).map(|x| {
        let y = delta_k(&x).expect("irreducible stream");
        debug_assert!(y.is_homogeneous());
        y
    })
}

/// `(irreducible, members of its class)` for every class of `Sem(F)`.
pub fn enumerate_classes(f: usize) -> impl Iterator<Item = (KunzVector, ClassIterator)> {
    enumerate_irreducible_kunz(f).map(|x| {
        let members = enumerate_class(&x).expect("irreducible stream");
        (x, members)
    })
}

/// All of `Kunz(F)`, class by class. Classes are disjoint, so nothing repeats.
pub fn enumerate_all(f: usize) -> impl Iterator<Item = KunzVector> {
    enumerate_classes(f).flat_map(|(_, members)| members)
}

/// All of `Kunz(F)` in ascending lexicographic order.
pub fn enumerate_all_sorted(f: usize) -> Vec<KunzVector> {
    let mut all: Vec<_> = enumerate_all(f).collect();
    all.sort_unstable();
    debug_assert!(all.windows(2).all(|w| w[0] != w[1]));
    all
}

/// One class with its members materialised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMembers {
    pub irreducible: KunzVector,
    pub members: Vec<KunzVector>,
}

/// Materialises every class on a pool of `jobs` threads. The result is in the
/// order of the irreducible stream regardless of `jobs`.
pub fn par_enumerate_classes(f: usize, jobs: usize) -> Vec<ClassMembers> {
    let irreducibles: Vec<_> = enumerate_irreducible_kunz(f).collect();
    let work = || {
        irreducibles
            .par_iter()
            .map(|x| ClassMembers {
                irreducible: x.clone(),
                members: enumerate_class(x).expect("irreducible stream").collect(),
            })
            .collect()
    };
    match rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
    {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub total: usize,
    pub irreducible_count: usize,
    /// class size -> number of classes of that size
    pub class_size_histogram: BTreeMap<usize, usize>,
}

pub fn count_all(f: usize) -> CountReport {
    let mut histogram = BTreeMap::new();
    let mut total = 0;
    let mut irreducible_count = 0;
    for x in enumerate_irreducible_kunz(f) {
        let size = class_size(&x).expect("irreducible stream");
        *histogram.entry(size).or_insert(0) += 1;
        total += size;
        irreducible_count += 1;
    }
    CountReport {
        total,
        irreducible_count,
        class_size_histogram: histogram,
    }
}
