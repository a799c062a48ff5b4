//! Independent oracles for the structural machinery: exhaustive closure
//! against stabilizer-chain orders, and backtracking closed-subset search
//! against the subgroup lattice.

mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use hamiltonia::catalog::{build, default_catalog, CatalogEntry, GroupRecipe, MatrixKind};
use hamiltonia::structure::{
    are_isomorphic, frattini_subgroup, is_nilpotent, is_normal, quotient_group, SubgroupLattice,
    TabulatedGroup,
};
use hamiltonia::{PermGroup, Permutation};
use proptest::prelude::*;

use common::oracles::{cayley, closed_subsets, closure_size};

fn members(set: &FixedBitSet) -> Vec<usize> {
    set.ones().collect()
}

fn tabulate(entry: &CatalogEntry) -> (Arc<TabulatedGroup>, SubgroupLattice) {
    let t = TabulatedGroup::new(entry.group.clone()).unwrap();
    let l = SubgroupLattice::build(&t).unwrap();
    (t, l)
}

#[test]
fn chain_order_matches_exhaustive_closure() {
    let mut scope = default_catalog().unwrap();
    for r in [
        GroupRecipe::symmetric(6),
        GroupRecipe::alternating(6),
        GroupRecipe::matrix(MatrixKind::PSL, 9),
        GroupRecipe::matrix(MatrixKind::PGL, 9),
        GroupRecipe::matrix(MatrixKind::SL, 9),
        GroupRecipe::matrix(MatrixKind::GL, 5),
        GroupRecipe::matrix(MatrixKind::PSL, 8),
        GroupRecipe::matrix(MatrixKind::SL, 7),
    ] {
        scope.push(build(&r).unwrap());
    }
    let mut checked = 0;
    for e in scope.iter().filter(|e| e.order() <= 2000) {
        assert_eq!(closure_size(&e.group) as u128, e.order(), "{}", e.label());
        checked += 1;
    }
    assert!(checked >= 90);
}

#[test]
fn lattice_matches_closed_subset_search() {
    for e in default_catalog().unwrap().iter().filter(|e| e.order() <= 24) {
        let (t, l) = tabulate(e);
        let elements: Vec<Permutation> = (0..t.size()).map(|i| t.element(i).clone()).collect();
        let mul = cayley(&elements);
        for (a, row) in mul.iter().enumerate() {
            for (b, &p) in row.iter().enumerate() {
                assert_eq!(t.mul(a, b), p, "{}: table entry ({a},{b})", e.label());
            }
        }
        let identity = elements.iter().position(|p| p.is_identity()).unwrap();
        let oracle = closed_subsets(&mul, identity);
        let ours: BTreeSet<Vec<usize>> = l.subgroups().iter().map(|h| members(h.members())).collect();
        assert_eq!(ours.len(), l.len(), "{}: duplicate subgroups", e.label());
        assert_eq!(ours, oracle, "{}", e.label());
    }
}

#[test]
fn reference_lattice_counts() {
    let cases = [
        (GroupRecipe::alternating(5), 59),
        (GroupRecipe::matrix(MatrixKind::SL, 5), 76),
        (GroupRecipe::symmetric(4), 30),
        (GroupRecipe::symmetric(5), 156),
        (GroupRecipe::matrix(MatrixKind::PSL, 7), 179),
        (GroupRecipe::matrix(MatrixKind::SL, 3), 15),
        (GroupRecipe::dicyclic(2), 6),
    ];
    for (r, expected) in cases {
        let e = build(&r).unwrap();
        let (_, l) = tabulate(&e);
        assert_eq!(l.len(), expected, "{}", e.label());
    }
}

#[test]
fn lattice_invariants_over_catalog() {
    for e in default_catalog().unwrap() {
        let (t, l) = tabulate(&e);
        let n = t.size();
        let frattini = frattini_subgroup(&l);
        assert!(is_normal(&frattini), "{}: Frattini not normal", e.label());
        assert!(is_nilpotent(&frattini), "{}: Frattini not nilpotent", e.label());
        for (i, h) in l.subgroups().iter().enumerate() {
            assert_eq!(n % h.order(), 0, "{}: Lagrange fails for #{i}", e.label());
            assert_eq!(l.is_normal(i), is_normal(h), "{}: normality of #{i}", e.label());
            if l.is_normal(i) && n <= 60 {
                let q = quotient_group(h).unwrap();
                assert_eq!(q.order() as usize, n / h.order(), "{}: quotient by #{i}", e.label());
            }
        }
        for c in l.conjugacy_classes() {
            let o = l.get(c[0]).order();
            assert!(c.iter().all(|&i| l.get(i).order() == o));
            assert_eq!(n % c.len(), 0);
        }
    }
}

#[test]
fn isomorphism_examples() {
    let g = |r: GroupRecipe| build(&r).unwrap().group;
    let a5 = g(GroupRecipe::alternating(5));
    assert!(are_isomorphic(&a5, &g(GroupRecipe::matrix(MatrixKind::PSL, 4))).unwrap());
    assert!(are_isomorphic(&a5, &g(GroupRecipe::matrix(MatrixKind::PSL, 5))).unwrap());
    assert!(are_isomorphic(
        &g(GroupRecipe::semidirect(7, 1, 3, 1, 1)),
        &g(GroupRecipe::cyclic(21))
    )
    .unwrap());
    assert!(are_isomorphic(
        &g(GroupRecipe::dihedral(6)),
        &g(GroupRecipe::symmetric(3))
    )
    .unwrap());
    assert!(!are_isomorphic(&g(GroupRecipe::cyclic(6)), &g(GroupRecipe::symmetric(3))).unwrap());
    assert!(!are_isomorphic(&g(GroupRecipe::dicyclic(2)), &g(GroupRecipe::dihedral(8))).unwrap());
    assert!(!are_isomorphic(
        &g(GroupRecipe::symmetric(4)),
        &g(GroupRecipe::matrix(MatrixKind::SL, 3))
    )
    .unwrap());
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_groups_chain_matches_closure(gens in prop::collection::vec(perm(6), 1..4)) {
        let g = PermGroup::from_generators(6, gens).unwrap();
        prop_assert_eq!(closure_size(&g) as u128, g.order());
        prop_assert_eq!(720 % g.order(), 0);
    }

    #[test]
    fn isomorphism_is_invariant_under_relabelling(
        gens in prop::collection::vec(perm(5), 1..3),
        relabel in perm(5),
    ) {
        let g = PermGroup::from_generators(5, gens.clone()).unwrap();
        let inv = relabel.invert();
        let conj: Vec<Permutation> = gens.iter().map(|x| inv.mul(x).mul(&relabel)).collect();
        let h = PermGroup::from_generators(5, conj).unwrap();
        prop_assert_eq!(g.order(), h.order());
        prop_assert!(are_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn subgroup_membership_is_consistent(gens in prop::collection::vec(perm(5), 1..3), x in perm(5)) {
        let g = PermGroup::from_generators(5, gens.clone()).unwrap();
        let closure_contains = {
            let bigger = PermGroup::from_generators(5, gens.iter().cloned().chain([x.clone()]).collect()).unwrap();
            bigger.order() == g.order()
        };
        prop_assert_eq!(g.contains(&x).unwrap(), closure_contains);
    }
}
