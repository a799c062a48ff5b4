//! Complete subgroup lattices of small tabulated groups.

use std::collections::HashMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::table::{SubgroupHandle, TabulatedGroup};
use crate::error::{Error, Result};

/// Hard limit on the number of subgroups materialized in one lattice.
pub const SUBGROUP_COUNT_CAP: usize = 50_000;

/// All subgroups of a parent group, with inclusion, conjugacy and normality.
///
/// Subgroups are sorted by order and then by their sorted element-index
/// lists; index 0 is the trivial subgroup and the last index is the whole
/// group.
#[derive(Debug)]
pub struct SubgroupLattice {
    parent: Arc<TabulatedGroup>,
    subgroups: Vec<SubgroupHandle>,
    index: HashMap<FixedBitSet, usize>,
    /// `subsets[j]` holds every `i` with subgroup `i` contained in `j`.
    subsets: Vec<FixedBitSet>,
    /// Maximal subgroups of each subgroup.
    maximal: Vec<Vec<usize>>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl SubgroupLattice {
    /// Enumerates every subgroup: cyclic subgroups first, then joins with
    /// cyclic subgroups until nothing new appears.
    pub fn build(parent: &Arc<TabulatedGroup>) -> Result<Self> {
        let caps = parent.group().caps();
        if parent.size() > caps.lattice_cap {
            return Err(Error::SizeCap {
                what: "lattice",
                order: parent.size() as u128,
                cap: caps.lattice_cap,
            });
        }
        let mut found: Vec<SubgroupHandle> = Vec::new();
        let mut index: HashMap<FixedBitSet, usize> = HashMap::new();

        let mut cyclic: Vec<usize> = Vec::new();
        for x in 0..parent.size() {
            let h = parent.subgroup_generated(&[x]);
            if !index.contains_key(h.members()) {
                index.insert(h.members().clone(), found.len());
                cyclic.push(found.len());
                found.push(h);
            }
        }
        let cyclic: Vec<SubgroupHandle> = cyclic.iter().map(|&i| found[i].clone()).collect();

        let mut k = 0;
        while k < found.len() {
            let h = found[k].clone();
            for c in &cyclic {
                if c.is_subgroup_of(&h) {
                    continue;
                }
                let j = h.join(c)?;
                if !index.contains_key(j.members()) {
                    if found.len() >= SUBGROUP_COUNT_CAP {
                        return Err(Error::SizeCap {
                            what: "subgroup count",
                            order: parent.size() as u128,
                            cap: SUBGROUP_COUNT_CAP,
                        });
                    }
                    index.insert(j.members().clone(), found.len());
                    found.push(j);
                }
            }
            k += 1;
        }
        Ok(Self::from_subgroups(parent, found))
    }

    /// Assembles a lattice from a complete, duplicate-free subgroup list.
    pub(crate) fn from_subgroups(parent: &Arc<TabulatedGroup>, mut subgroups: Vec<SubgroupHandle>) -> Self {
        subgroups.sort_by(|a, b| a.canonical_cmp(b));
        let index: HashMap<FixedBitSet, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, h)| (h.members().clone(), i))
            .collect();
        let n = subgroups.len();

        let mut subsets = vec![FixedBitSet::with_capacity(n); n];
        for j in 0..n {
            for i in 0..=j {
                if subgroups[i].is_subgroup_of(&subgroups[j]) {
                    subsets[j].insert(i);
                }
            }
        }

        // i is maximal in j iff it lies in no maximal subgroup of j of larger order
        let mut maximal = vec![Vec::new(); n];
        for j in 0..n {
            let mut maxes: Vec<usize> = Vec::new();
            for i in subsets[j].ones().collect::<Vec<_>>().into_iter().rev() {
                if i == j {
                    continue;
                }
                if maxes.iter().all(|&m| !subsets[m].contains(i)) {
                    maxes.push(i);
                }
            }
            maxes.sort_unstable();
            maximal[j] = maxes;
        }

        let gens = parent.generator_indices().to_vec();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = vec![start];
            class_of[start] = id;
            let mut k = 0;
            while k < class.len() {
                let members = subgroups[class[k]].members().clone();
                for &g in &gens {
                    let c = parent.conjugate_set(&members, g);
                    let ci = index[&c];
                    if class_of[ci] == usize::MAX {
                        class_of[ci] = id;
                        class.push(ci);
                    }
                }
                k += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }

        SubgroupLattice {
            parent: Arc::clone(parent),
            subgroups,
            index,
            subsets,
            maximal,
            classes,
            class_of,
        }
    }

    pub fn parent(&self) -> &Arc<TabulatedGroup> {
        &self.parent
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[SubgroupHandle] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &SubgroupHandle {
        &self.subgroups[i]
    }

    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn whole(&self) -> &SubgroupHandle {
        &self.subgroups[self.top()]
    }

    /// Position of a subgroup of the same parent.
    pub fn index_of(&self, h: &SubgroupHandle) -> Result<usize> {
        if !h.belongs_to(&self.parent) {
            return Err(Error::ForeignSubgroup);
        }
        self.index.get(h.members()).copied().ok_or(Error::ForeignSubgroup)
    }

    pub fn position_of_members(&self, members: &FixedBitSet) -> Option<usize> {
        self.index.get(members).copied()
    }

    /// Whether subgroup `i` is contained in subgroup `j`.
    pub fn is_contained(&self, i: usize, j: usize) -> bool {
        self.subsets[j].contains(i)
    }

    /// Indices of all subgroups of subgroup `j` (including `j`).
    pub fn subgroups_of(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.subsets[j].ones()
    }

    /// Proper subgroups of subgroup `j`.
    pub fn proper_subgroups_of(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.subsets[j].ones().filter(move |&i| i != j)
    }

    /// All pairs `(i, j)` with subgroup `i` contained in subgroup `j`.
    pub fn inclusion_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|j| self.subsets[j].ones().map(move |i| (i, j)))
            .collect()
    }

    pub fn maximal_subgroups_of(&self, j: usize) -> &[usize] {
        &self.maximal[j]
    }

    /// Whether `i` is a maximal subgroup of `j`.
    pub fn is_maximal_in(&self, i: usize, j: usize) -> bool {
        self.maximal[j].binary_search(&i).is_ok()
    }

    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.classes[self.class_of[i]].len() == 1
    }

    pub fn normal_flags(&self) -> Vec<bool> {
        (0..self.len()).map(|i| self.is_normal(i)).collect()
    }

    pub fn normal_subgroups(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_normal(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, GroupRecipe};

    fn lattice(r: GroupRecipe) -> SubgroupLattice {
        let t = TabulatedGroup::new(build(&r).unwrap().group).unwrap();
        SubgroupLattice::build(&t).unwrap()
    }

    #[test]
    fn cyclic_six_has_four_subgroups() {
        let l = lattice(GroupRecipe::cyclic(6));
        assert_eq!(l.len(), 4);
        assert!(l.normal_flags().iter().all(|&n| n));
        assert!(l.get(0).is_trivial());
        assert!(l.whole().is_whole());
    }

    #[test]
    fn s4_lattice() {
        let l = lattice(GroupRecipe::symmetric(4));
        assert_eq!(l.len(), 30);
        assert_eq!(l.conjugacy_classes().len(), 11);
        assert_eq!(l.normal_subgroups().len(), 4);
        let sizes: usize = l.conjugacy_classes().iter().map(|c| c.len()).sum();
        assert_eq!(sizes, l.len());
    }

    #[test]
    fn a5_lattice() {
        let l = lattice(GroupRecipe::alternating(5));
        assert_eq!(l.len(), 59);
        assert_eq!(l.conjugacy_classes().len(), 9);
        let mut by_order: std::collections::BTreeMap<usize, usize> = Default::default();
        for h in l.subgroups() {
            *by_order.entry(h.order()).or_default() += 1;
        }
        let expected: Vec<(usize, usize)> =
            vec![(1, 1), (2, 15), (3, 10), (4, 5), (5, 6), (6, 10), (10, 6), (12, 5), (60, 1)];
        assert_eq!(by_order.into_iter().collect::<Vec<_>>(), expected);
        // maximal subgroups: A4 x5, D10 x6, S3 x10
        let maxes = l.maximal_subgroups_of(l.top());
        assert_eq!(maxes.len(), 21);
    }

    #[test]
    fn lattice_cap_enforced() {
        let t = TabulatedGroup::new(build(&GroupRecipe::symmetric(6)).unwrap().group).unwrap();
        assert!(matches!(SubgroupLattice::build(&t), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn inclusion_is_a_partial_order() {
        let l = lattice(GroupRecipe::dihedral(12));
        let pairs: std::collections::HashSet<_> = l.inclusion_pairs().into_iter().collect();
        for i in 0..l.len() {
            assert!(pairs.contains(&(i, i)));
            for j in 0..l.len() {
                if i != j && pairs.contains(&(i, j)) {
                    assert!(!pairs.contains(&(j, i)));
                    for k in 0..l.len() {
                        if pairs.contains(&(j, k)) {
                            assert!(pairs.contains(&(i, k)));
                        }
                    }
                }
            }
        }
    }
}
