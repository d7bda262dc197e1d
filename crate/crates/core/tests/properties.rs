//! Exhaustive and randomized invariants, checked against the brute-force oracle.

use std::collections::{BTreeSet, HashMap};

use nsg_core::partition::{class_max_kunz, class_min_kunz};
use nsg_core::*;
use proptest::prelude::*;

fn sem(f: usize) -> Vec<KunzVector> {
    brute_force_sem(f).unwrap().members
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Membership table of `<gens>` up to `bound`, by plain reachability.
fn naive_members(gens: &[usize], bound: usize) -> Vec<bool> {
    let mut m = vec![false; bound + 1];
    m[0] = true;
    for n in 1..=bound {
        m[n] = gens.iter().any(|&g| g <= n && m[n - g]);
    }
    m
}

fn classes(f: usize) -> HashMap<Vec<usize>, Vec<KunzVector>> {
    let mut out: HashMap<Vec<usize>, Vec<KunzVector>> = HashMap::new();
    for x in sem(f) {
        out.entry(x.theta_k()).or_default().push(x);
    }
    out
}

fn coprime_gens() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(2usize..40, 1..5)
        .prop_filter("coprime", |g| g.iter().fold(0, |a, &b| gcd(a, b)) == 1)
}

proptest! {
    #[test]
    fn closure_matches_naive_reachability(gens in coprime_gens()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let f = s.frobenius();
        let naive = naive_members(&gens, 2 * f + 2);
        prop_assert!(!naive[f]);
        prop_assert!(naive[f + 1..].iter().all(|&b| b));
        for (n, &member) in naive.iter().enumerate().take(f + 1) {
            prop_assert_eq!(s.contains(n), member);
        }
    }

    #[test]
    fn selmer_formulas_hold(gens in coprime_gens()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let f = s.frobenius();
        for n in (1..=2 * f + 1).filter(|&n| s.contains(n)) {
            let ap = s.apery_set(n).unwrap();
            prop_assert_eq!(ap.genus_selmer().unwrap(), s.gaps().len());
            prop_assert_eq!(ap.frobenius().unwrap(), f);
            for (i, &w) in ap.elements().iter().enumerate() {
                prop_assert!(s.contains(w));
                prop_assert_eq!(w % n, i);
                prop_assert!(w < n || !s.contains(w - n));
            }
        }
    }

    #[test]
    fn minimal_generators_are_a_subset(gens in coprime_gens()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let mins = s.minimal_generators().to_vec();
        let set: BTreeSet<usize> = gens.iter().copied().collect();
        prop_assert!(mins.iter().all(|g| set.contains(g)));
        // A is minimal iff no element lies in the semigroup generated by the rest.
        let is_minimal = set.iter().all(|&a| {
            let rest: Vec<usize> = set.iter().copied().filter(|&b| b != a).collect();
            !naive_members(&rest, a)[a]
        });
        prop_assert_eq!(is_minimal, mins.len() == set.len());
        let again = NumericalSemigroup::from_generators(&mins).unwrap();
        prop_assert_eq!(&again, &s);
    }

    #[test]
    fn remove_generator_round_trip(gens in coprime_gens(), pick in 0usize..8) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let mins = s.minimal_generators();
        let x = mins[pick % mins.len()];
        let t = s.remove_minimal_generator(x).unwrap();
        prop_assert!(!t.contains(x));
        prop_assert_eq!(t.frobenius(), s.frobenius().max(x));
        let rebuilt = NumericalSemigroup::from_generators(t.minimal_generators()).unwrap();
        prop_assert_eq!(rebuilt.gaps(), t.gaps());
    }
}

#[test]
fn irreducible_iff_maximal() {
    for f in 1..=12 {
        let all = sem(f);
        for x in &all {
            let s = x.to_semigroup();
            // S' ⊋ S in Sem(F) iff gaps(S') ⊊ gaps(S).
            let maximal = !all.iter().any(|y| y != x && y.ones().all(|i| x.get(i)));
            assert_eq!(s.is_irreducible(), maximal, "F = {f}, {x}");
            assert_eq!(x.is_irreducible(), maximal);
        }
    }
}

#[test]
fn kunz_round_trip_and_predicates() {
    for f in 1..=16 {
        for x in sem(f) {
            let s = x.to_semigroup();
            assert_eq!(KunzVector::from_semigroup(&s), x);
            assert_eq!(s.gaps(), x.ones().collect::<Vec<_>>());
            assert_eq!(x.is_irreducible(), s.is_irreducible());
            assert_eq!(x.is_homogeneous(), s.is_homogeneous());
            for i in 1..=f {
                let generator = s.minimal_generators().contains(&i);
                assert_eq!(x.is_minimal_generator(i), generator, "{x} at {i}");
            }
        }
    }
}

#[test]
fn validate_iff_phi_closes_to_itself() {
    for f in 1..=10 {
        for mask in 0u32..(1 << f) {
            let bits: Vec<bool> = (0..f).map(|k| mask >> k & 1 == 1).collect();
            let n = f + 1;
            let phi: Vec<usize> = std::iter::once(n)
                .chain((1..=f).map(|i| n * usize::from(bits[i - 1]) + i))
                .collect();
            let closes = match NumericalSemigroup::from_generators(&phi) {
                Ok(s) => s.frobenius() == f && s.kunz().to_bools() == bits,
                Err(_) => false,
            };
            assert_eq!(is_kunz(&bits), closes, "{bits:?}");
        }
    }
}

#[test]
fn lattice_laws_within_classes() {
    for f in 1..=12 {
        for group in classes(f).values() {
            for a in group {
                assert_eq!(&a.meet(a).unwrap(), a);
                assert_eq!(&a.join(a).unwrap(), a);
                for b in group {
                    assert_eq!(a.meet(b), b.meet(a));
                    assert_eq!(a.join(b), b.join(a));
                    assert_eq!(&a.meet(&a.join(b).unwrap()).unwrap(), a);
                    assert_eq!(&a.join(&a.meet(b).unwrap()).unwrap(), a);
                    for c in group {
                        let m = |p: &KunzVector, q: &KunzVector| p.meet(q).unwrap();
                        let j = |p: &KunzVector, q: &KunzVector| p.join(q).unwrap();
                        assert_eq!(m(a, &m(b, c)), m(&m(a, b), c));
                        assert_eq!(j(a, &j(b, c)), j(&j(a, b), c));
                        assert_eq!(m(a, &j(b, c)), j(&m(a, b), &m(a, c)));
                    }
                }
            }
        }
    }
}

#[test]
fn theta_is_a_homomorphism() {
    for f in 1..=12 {
        let all: Vec<_> = sem(f).into_iter().map(|x| x.to_semigroup()).collect();
        for a in &all {
            let ta: BTreeSet<usize> = theta(a).members().iter().copied().collect();
            assert!(ta.iter().all(|&n| 2 * n < f && f % n != 0));
            for b in &all {
                let tb: BTreeSet<usize> = theta(b).members().iter().copied().collect();
                let both = a.kunz().meet(b.kunz()).unwrap().to_semigroup();
                let tab: BTreeSet<usize> = theta(&both).members().iter().copied().collect();
                assert_eq!(tab, &ta & &tb);
            }
        }
    }
}

#[test]
fn class_extrema_and_sandwich() {
    for f in 1..=12 {
        let all = sem(f);
        for x in &all {
            let s = x.to_semigroup();
            let hi = class_max(&s);
            let lo = class_min(&s);
            assert!(hi.is_irreducible() && lo.is_homogeneous());
            assert_eq!(theta(&hi), theta(&s));
            assert_eq!(theta(&lo), theta(&s));
            // gaps(hi) ⊆ gaps(s) ⊆ gaps(lo)
            assert!(hi.gaps().iter().all(|&g| x.get(g)));
            assert!(x.ones().all(|g| lo.kunz().get(g)));
            assert_eq!(class_max_kunz(x), *hi.kunz());
            assert_eq!(class_min_kunz(x), *lo.kunz());
        }
        // S' ∈ [S] iff delta(S) ⊆ S' ⊆ S, for irreducible S.
        for x in all.iter().filter(|x| x.is_irreducible()) {
            let lo = delta_k(x).unwrap();
            for y in &all {
                let sandwiched = x.ones().all(|g| y.get(g)) && y.ones().all(|g| lo.get(g));
                assert_eq!(sandwiched, y.theta_k() == x.theta_k(), "{x} {y}");
            }
        }
    }
}

#[test]
fn delta_is_a_bijection() {
    for f in 1..=16 {
        let all = sem(f);
        let irr: Vec<_> = all.iter().filter(|x| x.is_irreducible()).collect();
        let hom: Vec<_> = all.iter().filter(|x| x.is_homogeneous()).collect();
        assert_eq!(irr.len(), hom.len(), "F = {f}");
        for x in irr {
            let s = x.to_semigroup();
            assert_eq!(delta_inverse(&delta(&s).unwrap()).unwrap(), s);
        }
        for y in hom {
            let s = y.to_semigroup();
            assert_eq!(delta(&delta_inverse(&s).unwrap()).unwrap(), s);
        }
    }
}

#[test]
fn enumerators_match_oracle() {
    for f in 1..=16 {
        let all = sem(f);
        let irr: Vec<_> = all.iter().filter(|x| x.is_irreducible()).cloned().collect();
        let streamed: Vec<_> = enumerate_irreducible_kunz(f).collect();
        // Oracle output is sorted, so this also pins the stream order.
        assert_eq!(streamed, irr, "F = {f}");
        let system = BinarySystem::irreducible(f);
        assert!(streamed.iter().all(|x| system.is_satisfied(&x.to_bools())));

        let hom: BTreeSet<_> = all.iter().filter(|x| x.is_homogeneous()).cloned().collect();
        let via_delta: BTreeSet<_> = enumerate_homogeneous_kunz(f).collect();
        assert_eq!(via_delta, hom, "F = {f}");

        assert_eq!(enumerate_all_sorted(f), all, "F = {f}");
        assert_eq!(count_all(f).total, all.len());
    }
}

#[test]
fn irreducible_and_homogeneous_counts_agree() {
    for f in 1..=20 {
        assert_eq!(
            enumerate_irreducible_kunz(f).count(),
            enumerate_homogeneous_kunz(f).collect::<BTreeSet<_>>().len(),
            "F = {f}"
        );
    }
}

#[test]
fn odd_irreducibles_split_every_pair() {
    for f in (1..=21).step_by(2) {
        for x in enumerate_irreducible_kunz(f) {
            for i in 1..f.div_ceil(2) {
                assert!(x.get(i) ^ x.get(f - i), "{x}");
            }
        }
    }
}

#[test]
fn class_members_are_valid_and_sandwiched() {
    for f in 1..=14 {
        for x in enumerate_irreducible_kunz(f) {
            let lo = delta_k(&x).unwrap();
            let members: Vec<_> = enumerate_class(&x).unwrap().collect();
            assert_eq!(members.first(), Some(&lo));
            assert_eq!(members.last(), Some(&x));
            for y in &members {
                assert!(is_kunz(&y.to_bools()));
                assert_eq!(y.theta_k(), x.theta_k());
                assert!(x.ones().all(|g| y.get(g)) && y.ones().all(|g| lo.get(g)));
            }
            assert_eq!(class_size(&x).unwrap(), members.len());

            let setform: BTreeSet<_> = enumerate_class_setform(&x.to_semigroup())
                .unwrap()
                .iter()
                .map(|s| s.kunz().clone())
                .collect();
            assert_eq!(setform, members.iter().cloned().collect(), "class of {x}");
        }
    }
}

#[test]
fn t_closure_is_a_closure() {
    for f in 1..=12 {
        for x in enumerate_irreducible_kunz(f) {
            let desc = ClassDescriptor::new(&x).unwrap();
            let d = desc.d_set().to_vec();
            assert!(d.iter().all(|&e| 2 * e > f));
            for mask in 0u32..(1 << d.len()) {
                let b: Vec<usize> = (0..d.len())
                    .filter(|&k| mask >> k & 1 == 1)
                    .map(|k| d[k])
                    .collect();
                let t = desc.t_of_set(&b).unwrap();
                assert!(b.iter().all(|e| t.contains(e)));
                assert_eq!(desc.t_of_set(&t).unwrap(), t);
            }
        }
    }
}

#[test]
fn singleton_iff_homogeneous() {
    for f in 1..=16 {
        for x in enumerate_irreducible_kunz(f) {
            assert_eq!(x.is_singleton_class().unwrap(), x.is_homogeneous(), "{x}");
        }
    }
}

#[test]
fn verify_partition_passes() {
    for f in 1..=12 {
        let report = verify_partition(f, DEFAULT_ORACLE_CEILING).unwrap();
        assert!(report.all_passed(), "{report}");
    }
}

#[test]
fn ip_matches_delta_k() {
    for f in 1..=12 {
        for x in enumerate_irreducible_kunz(f) {
            let z = ip_delta_solve(&build_ip_delta(&x)).unwrap();
            assert_eq!(z, delta_k(&x).unwrap().to_bools(), "{x}");
        }
    }
}
