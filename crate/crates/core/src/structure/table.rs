use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{Caps, GroupElementTable, PermGroup};
use crate::perm::Permutation;

/// A group together with its Cayley table over the canonical element order.
///
/// Element 0 is the identity. Products are left-to-right, matching
/// [`Permutation::mul`].
pub struct TabulatedGroup {
    group: PermGroup,
    elements: Arc<GroupElementTable>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    generators: Vec<usize>,
}

impl fmt::Debug for TabulatedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TabulatedGroup")
            .field("order", &self.size())
            .field("degree", &self.group.degree())
            .finish()
    }
}

impl TabulatedGroup {
    pub fn new(group: PermGroup) -> Result<Arc<Self>> {
        let caps = *group.caps();
        Self::with_caps(group, &caps)
    }

    pub fn with_caps(group: PermGroup, caps: &Caps) -> Result<Arc<Self>> {
        let order = group.order();
        if order > caps.table_cap as u128 {
            return Err(Error::SizeCap {
                what: "table",
                order,
                cap: caps.table_cap,
            });
        }
        let elements = group.enumerate_elements()?;
        let n = elements.len();
        let mut mul = vec![0u32; n * n];
        for (i, a) in elements.elements().iter().enumerate() {
            for (j, b) in elements.elements().iter().enumerate() {
                let c = a.mul(b);
                mul[i * n + j] = elements.position(&c).expect("closed under products") as u32;
            }
        }
        let mut inv = vec![0u32; n];
        for i in 0..n {
            let j = (0..n).find(|&j| mul[i * n + j] == 0).expect("inverse exists");
            inv[i] = j as u32;
        }
        let mut orders = vec![1u32; n];
        for (i, slot) in orders.iter_mut().enumerate() {
            let mut x = i;
            let mut k = 1;
            while x != 0 {
                x = mul[x * n + i] as usize;
                k += 1;
            }
            *slot = k;
        }
        let generators = group
            .generators()
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| elements.position(g).expect("generator is an element"))
            .collect();
        Ok(Arc::new(TabulatedGroup {
            group,
            elements,
            mul,
            inv,
            orders,
            generators,
        }))
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.inv.len()
    }

    pub fn element(&self, i: usize) -> &Permutation {
        self.elements.get(i)
    }

    pub fn elements(&self) -> &GroupElementTable {
        &self.elements
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.elements.position(g)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// Element order of `a`.
    #[inline]
    pub fn order_of(&self, a: usize) -> usize {
        self.orders[a] as usize
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// Indices of the defining generators (identity generators dropped).
    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    /// Subgroup generated by the given elements, as a membership bitset.
    pub fn closure(&self, gens: &[usize]) -> FixedBitSet {
        let n = self.size();
        let mut set = FixedBitSet::with_capacity(n);
        set.insert(0);
        let mut queue = vec![0usize];
        let mut k = 0;
        while k < queue.len() {
            let x = queue[k];
            for &g in gens {
                let y = self.mul(x, g);
                if !set.contains(y) {
                    set.insert(y);
                    queue.push(y);
                }
            }
            k += 1;
        }
        set
    }

    /// Image of a set under conjugation by `g`.
    pub fn conjugate_set(&self, set: &FixedBitSet, g: usize) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.size());
        for x in set.ones() {
            out.insert(self.conj(x, g));
        }
        out
    }

    /// A small generating set for a subgroup given as a bitset: greedily
    /// picks elements of largest order first.
    pub fn generators_for(&self, set: &FixedBitSet) -> Vec<usize> {
        let mut candidates: Vec<usize> = set.ones().filter(|&x| x != 0).collect();
        candidates.sort_by_key(|&x| (std::cmp::Reverse(self.order_of(x)), x));
        let mut gens = Vec::new();
        let mut span = self.closure(&gens);
        for x in candidates {
            if span.count_ones(..) == set.count_ones(..) {
                break;
            }
            if !span.contains(x) {
                gens.push(x);
                span = self.closure(&gens);
            }
        }
        gens
    }

    pub fn whole(self: &Arc<Self>) -> SubgroupHandle {
        let mut members = FixedBitSet::with_capacity(self.size());
        members.insert_range(..);
        SubgroupHandle {
            parent: Arc::clone(self),
            generators: self.generators.clone(),
            order: self.size(),
            members,
        }
    }

    pub fn trivial(self: &Arc<Self>) -> SubgroupHandle {
        self.subgroup_generated(&[])
    }

    pub fn subgroup_generated(self: &Arc<Self>, gens: &[usize]) -> SubgroupHandle {
        let members = self.closure(gens);
        SubgroupHandle {
            parent: Arc::clone(self),
            order: members.count_ones(..),
            generators: gens.iter().copied().filter(|&g| g != 0).collect(),
            members,
        }
    }

    /// Wraps a bitset already known to be a subgroup.
    pub fn subgroup_from_members(self: &Arc<Self>, members: FixedBitSet) -> SubgroupHandle {
        let generators = self.generators_for(&members);
        SubgroupHandle {
            parent: Arc::clone(self),
            order: members.count_ones(..),
            generators,
            members,
        }
    }

    /// Checks that a bitset is a subgroup before wrapping it.
    pub fn try_subgroup(self: &Arc<Self>, members: FixedBitSet) -> Option<SubgroupHandle> {
        if members.len() != self.size() || !members.contains(0) {
            return None;
        }
        let handle = self.subgroup_from_members(members);
        (handle.parent.closure(&handle.generators) == handle.members).then_some(handle)
    }
}

/// A subgroup of a tabulated parent, stored as a bitset over the parent's
/// element indices.
#[derive(Clone)]
pub struct SubgroupHandle {
    parent: Arc<TabulatedGroup>,
    members: FixedBitSet,
    generators: Vec<usize>,
    order: usize,
}

impl fmt::Debug for SubgroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubgroupHandle")
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for SubgroupHandle {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.members == other.members
    }
}

impl Eq for SubgroupHandle {}

impl SubgroupHandle {
    pub fn parent(&self) -> &Arc<TabulatedGroup> {
        &self.parent
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.parent.size()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn belongs_to(&self, parent: &Arc<TabulatedGroup>) -> bool {
        Arc::ptr_eq(&self.parent, parent)
    }

    pub(crate) fn check_same_parent(&self, other: &SubgroupHandle) -> Result<()> {
        if Arc::ptr_eq(&self.parent, &other.parent) {
            Ok(())
        } else {
            Err(Error::ForeignSubgroup)
        }
    }

    pub fn is_subgroup_of(&self, other: &SubgroupHandle) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent)
            && other.order.is_multiple_of(self.order)
            && self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &SubgroupHandle) -> Result<SubgroupHandle> {
        self.check_same_parent(other)?;
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Ok(self.parent.subgroup_from_members(members))
    }

    pub fn join(&self, other: &SubgroupHandle) -> Result<SubgroupHandle> {
        self.check_same_parent(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().copied().filter(|g| !self.contains(*g)));
        Ok(self.parent.subgroup_generated(&gens))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().enumerate().all(|(i, &a)| {
            g[i + 1..]
                .iter()
                .all(|&b| self.parent.mul(a, b) == self.parent.mul(b, a))
        })
    }

    /// The subgroup as a standalone permutation group on the parent's points.
    pub fn to_perm_group(&self) -> PermGroup {
        let gens = self
            .generators
            .iter()
            .map(|&i| self.parent.element(i).clone())
            .collect();
        PermGroup::with_caps(self.parent.group().degree(), gens, self.parent.group().caps())
            .expect("subgroup of a capped group")
    }

    /// Canonical order: by order, then by sorted element-index list.
    pub fn canonical_cmp(&self, other: &SubgroupHandle) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }

    /// Sorted element indices.
    pub fn element_indices(&self) -> Vec<usize> {
        self.members.ones().collect()
    }
}
