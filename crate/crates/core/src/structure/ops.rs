//! Normality data, centralizers, series, Frattini and Sylow subgroups,
//! quotients.

use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::lattice::SubgroupLattice;
use super::table::{SubgroupHandle, TabulatedGroup};
use crate::catalog::is_prime;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Debug, Clone)]
pub struct NormalityData {
    pub is_normal: bool,
    pub normal_closure: SubgroupHandle,
    pub core: SubgroupHandle,
}

/// Smallest subgroup of `ambient` containing `seed` that is normalized by
/// `ambient`.
pub fn normal_closure_in(seed: &[usize], ambient: &SubgroupHandle) -> SubgroupHandle {
    let parent = ambient.parent();
    let mut gens: Vec<usize> = seed.iter().copied().filter(|&x| x != 0).collect();
    let mut set = parent.closure(&gens);
    loop {
        let mut grew = false;
        for h in gens.clone() {
            for &g in ambient.generators() {
                let c = parent.conj(h, g);
                if !set.contains(c) {
                    gens.push(c);
                    set = parent.closure(&gens);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    parent.subgroup_from_members(set)
}

pub fn normal_closure(h: &SubgroupHandle) -> SubgroupHandle {
    normal_closure_in(h.generators(), &h.parent().whole())
}

/// Largest normal subgroup of the parent contained in `h`.
pub fn core(h: &SubgroupHandle) -> SubgroupHandle {
    let parent = h.parent();
    let mut orbit = vec![h.members().clone()];
    let mut core = h.members().clone();
    let mut k = 0;
    while k < orbit.len() {
        let current = orbit[k].clone();
        for &g in parent.generator_indices() {
            let c = parent.conjugate_set(&current, g);
            if !orbit.contains(&c) {
                core.intersect_with(&c);
                orbit.push(c);
            }
        }
        k += 1;
    }
    parent.subgroup_from_members(core)
}

pub fn is_normal(h: &SubgroupHandle) -> bool {
    let parent = h.parent();
    parent.generator_indices().iter().all(|&g| {
        h.generators().iter().all(|&x| h.contains(parent.conj(x, g)))
    })
}

pub fn normality_data(lattice: &SubgroupLattice, h: &SubgroupHandle) -> Result<NormalityData> {
    lattice.index_of(h)?;
    let normal_closure = normal_closure(h);
    let core = core(h);
    Ok(NormalityData {
        is_normal: normal_closure == *h,
        normal_closure,
        core,
    })
}

/// Elements `g` of the parent with `h^g = h`.
pub fn normalizer(h: &SubgroupHandle) -> SubgroupHandle {
    let parent = h.parent();
    let mut members = FixedBitSet::with_capacity(parent.size());
    for g in 0..parent.size() {
        if h.generators().iter().all(|&x| h.contains(parent.conj(x, g))) {
            members.insert(g);
        }
    }
    parent.subgroup_from_members(members)
}

/// Elements of the parent commuting with every element of `s`.
pub fn centralizer(s: &SubgroupHandle) -> SubgroupHandle {
    let parent = s.parent();
    let mut members = FixedBitSet::with_capacity(parent.size());
    for g in 0..parent.size() {
        if s.generators().iter().all(|&x| parent.mul(x, g) == parent.mul(g, x)) {
            members.insert(g);
        }
    }
    parent.subgroup_from_members(members)
}

pub fn centralizer_of_element(parent: &Arc<TabulatedGroup>, x: usize) -> SubgroupHandle {
    centralizer(&parent.subgroup_generated(&[x]))
}

pub fn center(parent: &Arc<TabulatedGroup>) -> SubgroupHandle {
    centralizer(&parent.whole())
}

/// `[a, b]` for subgroups normalized by `ambient`, closed up to normality in
/// `ambient`.
pub fn commutator_subgroup(a: &SubgroupHandle, b: &SubgroupHandle, ambient: &SubgroupHandle) -> Result<SubgroupHandle> {
    a.check_same_parent(b)?;
    a.check_same_parent(ambient)?;
    let parent = a.parent();
    let mut seed = FixedBitSet::with_capacity(parent.size());
    for x in a.elements() {
        for &y in b.generators() {
            seed.insert(parent.commutator(x, y));
        }
    }
    let seed_gens = parent.generators_for(&parent.closure(&seed.ones().collect::<Vec<_>>()));
    Ok(normal_closure_in(&seed_gens, ambient))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

#[derive(Debug, Clone)]
pub struct SeriesResult {
    pub kind: SeriesKind,
    /// Descending terms starting at the group itself. Ends at the trivial
    /// group, or repeats the stable nontrivial term once.
    pub terms: Vec<SubgroupHandle>,
    pub stabilized: bool,
    pub limit: SubgroupHandle,
}

impl SeriesResult {
    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.order()).collect()
    }

    /// `terms[i-1]`, i.e. γ_i or the (i-1)-th derived subgroup; saturates at
    /// the limit.
    pub fn term(&self, i: usize) -> &SubgroupHandle {
        self.terms.get(i.saturating_sub(1)).unwrap_or(&self.limit)
    }
}

/// Derived or lower central series of `h`, computed inside `h`.
pub fn series_of(h: &SubgroupHandle, kind: SeriesKind) -> SeriesResult {
    let mut terms = vec![h.clone()];
    loop {
        let last = terms.last().unwrap();
        if last.is_trivial() {
            break;
        }
        let next = match kind {
            SeriesKind::Derived => commutator_subgroup(last, last, last),
            SeriesKind::LowerCentral => commutator_subgroup(last, h, h),
        }
        .expect("same parent");
        let stable = next.order() == last.order();
        terms.push(next);
        if stable {
            break;
        }
    }
    let limit = terms.last().unwrap().clone();
    SeriesResult {
        kind,
        terms,
        stabilized: true,
        limit,
    }
}

pub fn series(parent: &Arc<TabulatedGroup>, kind: SeriesKind) -> SeriesResult {
    series_of(&parent.whole(), kind)
}

pub fn is_nilpotent(h: &SubgroupHandle) -> bool {
    series_of(h, SeriesKind::LowerCentral).limit.is_trivial()
}

pub fn is_soluble(h: &SubgroupHandle) -> bool {
    series_of(h, SeriesKind::Derived).limit.is_trivial()
}

pub fn is_perfect(h: &SubgroupHandle) -> bool {
    commutator_subgroup(h, h, h).expect("same parent").order() == h.order()
}

/// Intersection of the maximal subgroups of subgroup `j` of the lattice
/// (the subgroup itself when it has none).
pub fn frattini_of(lattice: &SubgroupLattice, j: usize) -> SubgroupHandle {
    let h = lattice.get(j);
    let mut members = h.members().clone();
    for &m in lattice.maximal_subgroups_of(j) {
        members.intersect_with(lattice.get(m).members());
    }
    h.parent().subgroup_from_members(members)
}

pub fn frattini_subgroup(lattice: &SubgroupLattice) -> SubgroupHandle {
    frattini_of(lattice, lattice.top())
}

pub fn p_part(n: u64, p: u64) -> u64 {
    let mut n = n;
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// First Sylow `p`-subgroup in lattice order.
pub fn sylow_subgroup(lattice: &SubgroupLattice, p: u64) -> Result<SubgroupHandle> {
    sylow_subgroup_of(lattice, lattice.top(), p)
}

/// First Sylow `p`-subgroup of subgroup `j`, in lattice order.
pub fn sylow_subgroup_of(lattice: &SubgroupLattice, j: usize, p: u64) -> Result<SubgroupHandle> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let target = p_part(lattice.get(j).order() as u64, p) as usize;
    let i = lattice
        .subgroups_of(j)
        .find(|&i| lattice.get(i).order() == target)
        .expect("Sylow subgroups exist");
    Ok(lattice.get(i).clone())
}

/// `G/N` as the permutation action of `G` on the right cosets of `N`.
pub fn quotient_group(n: &SubgroupHandle) -> Result<PermGroup> {
    quotient_of(&n.parent().whole(), n)
}

/// `H/N` for `N` normal in `H`, acting on the cosets of `N` in `H`.
pub fn quotient_of(h: &SubgroupHandle, n: &SubgroupHandle) -> Result<PermGroup> {
    h.check_same_parent(n)?;
    if !n.is_subgroup_of(h) {
        return Err(Error::NotNormal);
    }
    let parent = h.parent();
    if !h
        .generators()
        .iter()
        .all(|&g| n.generators().iter().all(|&x| n.contains(parent.conj(x, g))))
    {
        return Err(Error::NotNormal);
    }
    let mut coset = vec![usize::MAX; parent.size()];
    let mut reps = Vec::new();
    for x in h.elements() {
        if coset[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for y in n.elements() {
            coset[parent.mul(y, x)] = id;
        }
    }
    let degree = reps.len();
    let gens = h
        .generators()
        .iter()
        .map(|&g| {
            let images = reps.iter().map(|&r| coset[parent.mul(r, g)] as u32).collect();
            Permutation::from_images(images).expect("coset action is a permutation")
        })
        .filter(|p| !p.is_identity())
        .collect();
    PermGroup::with_caps(degree, gens, parent.group().caps())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, GroupRecipe, MatrixKind};

    fn tab(r: GroupRecipe) -> Arc<TabulatedGroup> {
        TabulatedGroup::new(build(&r).unwrap().group).unwrap()
    }

    fn lat(r: GroupRecipe) -> SubgroupLattice {
        SubgroupLattice::build(&tab(r)).unwrap()
    }

    fn sub_of_order(l: &SubgroupLattice, order: usize, normal: Option<bool>) -> SubgroupHandle {
        (0..l.len())
            .find(|&i| l.get(i).order() == order && normal.is_none_or(|n| l.is_normal(i) == n))
            .map(|i| l.get(i).clone())
            .unwrap()
    }

    #[test]
    fn s3_in_a5() {
        let l = lat(GroupRecipe::alternating(5));
        let s3 = sub_of_order(&l, 6, None);
        let d = normality_data(&l, &s3).unwrap();
        assert!(!d.is_normal);
        assert!(d.normal_closure.is_whole());
        assert!(d.core.is_trivial());
    }

    #[test]
    fn a4_in_s4_is_normal() {
        let l = lat(GroupRecipe::symmetric(4));
        let a4 = sub_of_order(&l, 12, None);
        let d = normality_data(&l, &a4).unwrap();
        assert!(d.is_normal);
        assert_eq!(d.normal_closure, a4);
        assert_eq!(d.core, a4);
    }

    #[test]
    fn sl23_in_sl25() {
        let l = lat(GroupRecipe::matrix(MatrixKind::SL, 5));
        assert_eq!(l.len(), 76);
        let h = sub_of_order(&l, 24, None);
        let d = normality_data(&l, &h).unwrap();
        assert!(!d.is_normal);
        assert!(d.normal_closure.is_whole());
        assert_eq!(d.core.order(), 2);
        assert_eq!(d.core, center(l.parent()));
    }

    #[test]
    fn foreign_handle() {
        let l = lat(GroupRecipe::symmetric(3));
        let other = tab(GroupRecipe::symmetric(3));
        assert!(matches!(normality_data(&l, &other.whole()), Err(Error::ForeignSubgroup)));
    }

    #[test]
    fn centers_and_normalizers() {
        assert_eq!(center(&tab(GroupRecipe::matrix(MatrixKind::SL, 5))).order(), 2);
        assert_eq!(center(&tab(GroupRecipe::alternating(5))).order(), 1);
        let l = lat(GroupRecipe::alternating(5));
        let p5 = sylow_subgroup(&l, 5).unwrap();
        assert_eq!(p5.order(), 5);
        assert_eq!(normalizer(&p5).order(), 10);
        let t = tab(GroupRecipe::symmetric(4));
        let x = t.index_of(&Permutation::parse("(1 2 3 4)", 4).unwrap()).unwrap();
        assert_eq!(centralizer_of_element(&t, x).order(), 4);
    }

    #[test]
    fn lower_central_examples() {
        let s3 = series(&tab(GroupRecipe::symmetric(3)), SeriesKind::LowerCentral);
        assert_eq!(s3.orders(), vec![6, 3, 3]);
        assert_eq!(s3.limit.order(), 3);
        let q8 = series(&tab(GroupRecipe::dicyclic(2)), SeriesKind::LowerCentral);
        assert_eq!(q8.orders(), vec![8, 2, 1]);
        assert!(q8.limit.is_trivial());
        let a5 = tab(GroupRecipe::alternating(5));
        assert_eq!(series(&a5, SeriesKind::LowerCentral).orders(), vec![60, 60]);
        assert_eq!(series(&a5, SeriesKind::Derived).orders(), vec![60, 60]);
        let s4 = series(&tab(GroupRecipe::symmetric(4)), SeriesKind::Derived);
        assert_eq!(s4.orders(), vec![24, 12, 4, 1]);
        assert_eq!(series(&tab(GroupRecipe::cyclic(1)), SeriesKind::Derived).orders(), vec![1]);
    }

    #[test]
    fn frattini_examples() {
        assert_eq!(frattini_subgroup(&lat(GroupRecipe::cyclic(8))).order(), 4);
        let sl = lat(GroupRecipe::matrix(MatrixKind::SL, 5));
        let phi = frattini_subgroup(&sl);
        assert_eq!(phi.order(), 2);
        assert_eq!(phi, center(sl.parent()));
        let d18 = lat(GroupRecipe::dihedral(18));
        let phi = frattini_subgroup(&d18);
        assert_eq!(phi.order(), 3);
        let q = quotient_group(&phi).unwrap();
        assert_eq!(q.order(), 6);
        assert!(frattini_subgroup(&lat(GroupRecipe::cyclic(1))).is_trivial());
    }

    #[test]
    fn sylow_examples() {
        assert_eq!(sylow_subgroup(&lat(GroupRecipe::alternating(5)), 2).unwrap().order(), 4);
        let sl = lat(GroupRecipe::matrix(MatrixKind::SL, 5));
        let p2 = sylow_subgroup(&sl, 2).unwrap();
        assert_eq!(p2.order(), 8);
        assert!(!p2.is_abelian());
        assert_eq!(sylow_subgroup(&lat(GroupRecipe::cyclic(6)), 3).unwrap().order(), 3);
        assert!(sylow_subgroup(&lat(GroupRecipe::cyclic(6)), 5).unwrap().is_trivial());
        assert!(matches!(sylow_subgroup(&lat(GroupRecipe::cyclic(6)), 4), Err(Error::NotPrime(4))));
    }

    #[test]
    fn quotients() {
        let sl = tab(GroupRecipe::matrix(MatrixKind::SL, 5));
        assert_eq!(quotient_group(&center(&sl)).unwrap().order(), 60);
        let l = lat(GroupRecipe::symmetric(4));
        let v4 = sub_of_order(&l, 4, Some(true));
        assert_eq!(quotient_group(&v4).unwrap().order(), 6);
        assert_eq!(quotient_group(&l.whole().clone()).unwrap().order(), 1);
        let s3 = sub_of_order(&l, 6, None);
        assert!(matches!(quotient_group(&s3), Err(Error::NotNormal)));
    }
}
