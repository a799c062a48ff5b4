//! Predicates checked against their definitions, with family membership
//! decided by oracles that avoid the series code (unique Sylow subgroups for
//! nilpotency, commuting generators for abelianness).

use std::collections::BTreeSet;

use hamiltonia::catalog::{default_catalog, GroupRecipe};
use hamiltonia::predicates::{
    basic_flags, evaluate, is_biminimal_non, is_meta_hamiltonian, is_minimal_non, is_para_hamiltonian,
    FamilyProfile, GroupFamily,
};
use hamiltonia::structure::{p_part, prime_divisors, SubgroupLattice, TabulatedGroup};
use hamiltonia::verify::GroupData;
use hamiltonia::{PermGroup, Permutation};
use proptest::prelude::*;

fn oracle_abelian(l: &SubgroupLattice, i: usize) -> bool {
    let t = l.parent();
    let gens: Vec<&Permutation> = l.get(i).generators().iter().map(|&g| t.element(g)).collect();
    gens.iter().all(|a| gens.iter().all(|b| a.mul(b) == b.mul(a)))
}

fn oracle_nilpotent(l: &SubgroupLattice, i: usize) -> bool {
    let n = l.get(i).order() as u64;
    prime_divisors(n).into_iter().all(|p| {
        let q = p_part(n, p) as usize;
        l.subgroups_of(i).filter(|&j| l.get(j).order() == q).count() == 1
    })
}

fn oracle(l: &SubgroupLattice, family: GroupFamily, i: usize) -> bool {
    match family {
        GroupFamily::Abelian => oracle_abelian(l, i),
        GroupFamily::Nilpotent => oracle_nilpotent(l, i),
    }
}

fn definitional_minimal_non(l: &SubgroupLattice, f: GroupFamily, i: usize) -> bool {
    !oracle(l, f, i) && l.proper_subgroups_of(i).all(|j| oracle(l, f, j))
}

fn check_definitions(l: &SubgroupLattice, label: &str) {
    let top = l.top();
    for f in GroupFamily::ALL {
        let profile = FamilyProfile::new(l, f);
        for i in 0..l.len() {
            assert_eq!(profile.in_family(i), oracle(l, f, i), "{label} [{f}] membership of #{i}");
            assert_eq!(
                profile.minimal_non(i),
                definitional_minimal_non(l, f, i),
                "{label} [{f}] minimal non of #{i}"
            );
            if profile.in_family(i) {
                for j in l.subgroups_of(i) {
                    assert!(profile.in_family(j), "{label} [{f}] family not subgroup-closed");
                }
            }
        }
        let tame = |i: usize| oracle(l, f, i) || definitional_minimal_non(l, f, i);
        let minimal = definitional_minimal_non(l, f, top);
        let biminimal = !tame(top) && l.proper_subgroups_of(top).all(tame);
        let meta = (0..l.len()).all(|i| oracle(l, f, i) || l.is_normal(i));
        let para = !oracle(l, f, top) && (0..l.len()).all(|i| l.is_normal(i) || tame(i));
        assert_eq!(is_minimal_non(l, f), minimal, "{label} [{f}] minimal");
        assert_eq!(is_biminimal_non(l, f), biminimal, "{label} [{f}] biminimal");
        assert_eq!(is_meta_hamiltonian(l, f), meta, "{label} [{f}] meta");
        assert_eq!(is_para_hamiltonian(l, f), para, "{label} [{f}] para");

        let r = evaluate(label, l, &profile);
        for (flag, violates) in [
            (r.meta_hamiltonian, Box::new(|i: usize| !oracle(l, f, i) && !l.is_normal(i)) as Box<dyn Fn(usize) -> bool>),
            (r.para_hamiltonian, Box::new(|i: usize| i == top || (!l.is_normal(i) && !tame(i)))),
            (r.biminimal_non, Box::new(|i: usize| i == top || !tame(i))),
        ] {
            assert_eq!(flag.value, flag.witness.is_none(), "{label} [{f}] witness presence");
            if let Some(w) = flag.witness {
                assert!(violates(w), "{label} [{f}] witness #{w} is not a violation");
                assert!((0..w).all(|i| !violates(i) || i == top), "{label} [{f}] witness #{w} not first");
            }
        }
    }
}

#[test]
fn predicates_match_definitions_over_catalog() {
    for e in default_catalog().unwrap() {
        let d = GroupData::compute(e.label(), &e.group).unwrap();
        check_definitions(&d.lattice, e.label());
    }
}

#[test]
fn implications_over_catalog() {
    for e in default_catalog().unwrap() {
        let d = GroupData::compute(e.label(), &e.group).unwrap();
        let b = basic_flags(&d.lattice);
        assert_eq!(b, d.basic);
        assert!(!b.abelian || b.nilpotent);
        assert!(!b.nilpotent || b.soluble);
        assert!(!(b.soluble && b.perfect) || d.order() == 1);
        let ab = d.predicates(GroupFamily::Abelian);
        let nil = d.predicates(GroupFamily::Nilpotent);
        assert_eq!(ab.in_family.value, b.abelian);
        assert_eq!(nil.in_family.value, b.nilpotent);
        // a Dedekind group is meta-X for every X, and a meta-abelian group is meta-nilpotent
        if b.dedekind {
            assert!(ab.meta_hamiltonian.value && nil.meta_hamiltonian.value, "{}", e.label());
        }
        if ab.meta_hamiltonian.value {
            assert!(nil.meta_hamiltonian.value, "{}", e.label());
        }
        // Schmidt groups: minimal non-nilpotent groups are soluble with two prime divisors
        if nil.minimal_non.value {
            assert!(b.soluble && d.primes().len() == 2, "{}", e.label());
        }
    }
}

#[test]
fn dedekind_groups_in_catalog() {
    let nonabelian: BTreeSet<String> = default_catalog()
        .unwrap()
        .iter()
        .filter_map(|e| {
            let d = GroupData::compute(e.label(), &e.group).unwrap();
            (d.basic.dedekind && !d.basic.abelian).then(|| e.label().to_string())
        })
        .collect();
    let expected: BTreeSet<String> = ["Q8", "C2xQ8", "C3xQ8"].iter().map(|s| s.to_string()).collect();
    assert_eq!(nonabelian, expected);
}

#[test]
fn recipe_for_s3_times_c3_is_meta_nilpotent() {
    let e = hamiltonia::catalog::build(&GroupRecipe::product(GroupRecipe::symmetric(3), GroupRecipe::cyclic(3))).unwrap();
    let d = GroupData::compute(e.label(), &e.group).unwrap();
    let nil = d.predicates(GroupFamily::Nilpotent);
    assert!(nil.meta_hamiltonian.value);
    assert!(!nil.minimal_non.value);
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_subgroups_of_s5_match_definitions(gens in prop::collection::vec(perm(5), 1..3)) {
        let g = PermGroup::from_generators(5, gens).unwrap();
        let t = TabulatedGroup::new(g).unwrap();
        let l = SubgroupLattice::build(&t).unwrap();
        check_definitions(&l, "random");
    }
}
