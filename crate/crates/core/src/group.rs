//! Permutation groups backed by a deterministic stabilizer chain.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Size limits applied when building and analysing groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest order for which the full element list is materialized.
    pub element_cap: usize,
    /// Groups above this order are rejected outright.
    pub order_cap: u128,
    /// Largest order for which a subgroup lattice may be computed.
    pub lattice_cap: usize,
    /// Largest order for which a Cayley table is built (structure operations).
    pub table_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            element_cap: 20_000,
            order_cap: 10_000_000,
            lattice_cap: 400,
            table_cap: 2048,
        }
    }
}

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// `transversal[p]` maps the base point to `p`, for `p` in the orbit.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            transversal: vec![None; degree],
            orbit: Vec::new(),
        };
        level.rebuild_orbit();
        level
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        self.transversal = vec![None; degree];
        self.transversal[self.base] = Some(Permutation::identity(degree));
        self.orbit = vec![self.base];
        let mut k = 0;
        while k < self.orbit.len() {
            let p = self.orbit[k];
            for s in &self.gens {
                let q = s.apply(p);
                if self.transversal[q].is_none() {
                    let u = self.transversal[p].as_ref().unwrap().mul(s);
                    self.transversal[q] = Some(u);
                    self.orbit.push(q);
                }
            }
            k += 1;
        }
    }
}

/// Base points with transversals; answers order and membership queries.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Schreier-Sims with base points chosen as the smallest moved point of
    /// the element that forces a new level.
    fn build(degree: usize, gens: &[Permutation], order_cap: u128) -> Result<Self> {
        let mut levels: Vec<Level> = Vec::new();
        for s in gens {
            if levels.iter().all(|l| s.apply(l.base) == l.base) {
                if let Some(b) = s.first_moved_point() {
                    levels.push(Level::new(b, degree));
                }
            }
        }
        for i in 0..levels.len() {
            let fixed: Vec<usize> = levels[..i].iter().map(|l| l.base).collect();
            levels[i].gens = gens
                .iter()
                .filter(|s| !s.is_identity() && fixed.iter().all(|&b| s.apply(b) == b))
                .cloned()
                .collect();
            levels[i].rebuild_orbit();
        }
        let mut chain = StabilizerChain { degree, levels };
        chain.check_cap(order_cap)?;

        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            match chain.failing_schreier_generator(iu) {
                Some((h, j)) => {
                    if j == chain.levels.len() {
                        let b = h.first_moved_point().expect("nontrivial residue");
                        chain.levels.push(Level::new(b, degree));
                    }
                    for l in iu + 1..=j {
                        chain.levels[l].gens.push(h.clone());
                        chain.levels[l].rebuild_orbit();
                    }
                    chain.check_cap(order_cap)?;
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
        Ok(chain)
    }

    fn check_cap(&self, cap: u128) -> Result<()> {
        let order = self.order();
        if order > cap {
            return Err(Error::OrderCap { order, cap });
        }
        Ok(())
    }

    /// First Schreier generator of level `i` that does not sift through the
    /// levels below it, as (residue, level where sifting stopped).
    fn failing_schreier_generator(&self, i: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[i];
        for &p in &level.orbit {
            let up = level.transversal[p].as_ref().unwrap();
            for s in &level.gens {
                let q = s.apply(p);
                let uq = level.transversal[q].as_ref().unwrap();
                let schreier = up.mul(s).mul(&uq.invert());
                if schreier.is_identity() {
                    continue;
                }
                let (h, j) = self.sift(&schreier, i + 1);
                if !h.is_identity() {
                    return Some((h, j));
                }
            }
        }
        None
    }

    /// Strips `g` through levels `from..`; returns the residue and the level
    /// index where it left the orbit (or `levels.len()` if it went through).
    fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let beta = h.apply(level.base);
            match &level.transversal[beta] {
                None => return (h, l),
                Some(u) => h = h.mul(&u.invert()),
            }
        }
        (h, self.levels.len())
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g, 0).0.is_identity()
    }

    /// Every element, as products of one transversal element per level.
    fn all_elements(&self) -> Vec<Permutation> {
        let mut elems = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for x in &elems {
                for &p in &level.orbit {
                    next.push(x.mul(level.transversal[p].as_ref().unwrap()));
                }
            }
            elems = next;
        }
        elems
    }
}

/// All elements of a group in canonical order: sorted by image vector, so
/// the identity comes first.
#[derive(Debug)]
pub struct GroupElementTable {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl GroupElementTable {
    fn from_unsorted(mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        GroupElementTable { elements, index }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn position(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }
}

/// A permutation group given by generators, with exact order and membership.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabilizerChain,
    element_table: Option<Arc<GroupElementTable>>,
    caps: Caps,
}

impl PermGroup {
    /// Builds a group with the default caps.
    pub fn from_generators(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        Self::with_caps(degree, gens, &Caps::default())
    }

    pub fn with_caps(degree: usize, gens: Vec<Permutation>, caps: &Caps) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidRecipe("degree must be positive".into()));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let chain = StabilizerChain::build(degree, &gens, caps.order_cap)?;
        let element_table = if chain.order() <= caps.element_cap as u128 {
            Some(Arc::new(GroupElementTable::from_unsorted(
                chain.all_elements(),
            )))
        } else {
            None
        };
        Ok(PermGroup {
            degree,
            generators: gens,
            chain,
            element_table,
            caps: *caps,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_generators(degree, Vec::new()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        &self.chain
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        Ok(self.chain.contains(g))
    }

    pub fn element_table(&self) -> Option<&Arc<GroupElementTable>> {
        self.element_table.as_ref()
    }

    /// The canonical element list; fails when the group exceeds the element cap.
    pub fn enumerate_elements(&self) -> Result<Arc<GroupElementTable>> {
        self.element_table.clone().ok_or(Error::SizeCap {
            what: "element",
            order: self.order(),
            cap: self.caps.element_cap,
        })
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    /// Key identifying the group's presentation: degree and canonical
    /// generator text.
    pub fn canonical_generators(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_string()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    fn closure_size(gens: &[Permutation], n: usize) -> usize {
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut stack = vec![Permutation::identity(n)];
        seen.insert(Permutation::identity(n));
        while let Some(x) = stack.pop() {
            for g in gens {
                let y = x.mul(g);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn a5_order() {
        let gens = vec![p("(1 2 3 4 5)", 5), p("(1 2 3)", 5)];
        assert_eq!(closure_size(&gens, 5), 60);
        let g = PermGroup::from_generators(5, gens).unwrap();
        assert_eq!(g.order(), 60);
        assert!(g.contains(&p("(1 2 3)", 5)).unwrap());
        assert!(!g.contains(&p("(1 2)", 5)).unwrap());
        assert!(g.contains(&Permutation::identity(5)).unwrap());
    }

    #[test]
    fn trivial_and_s4() {
        assert_eq!(PermGroup::from_generators(4, vec![]).unwrap().order(), 1);
        let gens = vec![p("(1 2)", 4), p("(1 2 3 4)", 4)];
        assert_eq!(closure_size(&gens, 4), 24);
        assert_eq!(PermGroup::from_generators(4, gens).unwrap().order(), 24);
    }

    #[test]
    fn identity_generators_give_trivial_group() {
        let g = PermGroup::from_generators(3, vec![Permutation::identity(3)]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.enumerate_elements().unwrap().len(), 1);
    }

    #[test]
    fn degree_mismatch_rejected() {
        assert!(matches!(
            PermGroup::from_generators(4, vec![p("(1 2)", 3)]),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(p("(1 2)", 3).compose(&p("(1 2)", 3)).is_ok());
        let g = PermGroup::from_generators(3, vec![p("(1 2)", 3)]).unwrap();
        assert!(g.contains(&p("(1 2)", 4)).is_err());
    }

    #[test]
    fn order_cap_aborts() {
        let caps = Caps {
            order_cap: 100,
            ..Caps::default()
        };
        let gens = vec![p("(1 2)", 6), p("(1 2 3 4 5 6)", 6)];
        assert!(matches!(
            PermGroup::with_caps(6, gens, &caps),
            Err(Error::OrderCap { .. })
        ));
    }

    #[test]
    fn element_cap_skips_table() {
        let caps = Caps {
            element_cap: 10,
            ..Caps::default()
        };
        let gens = vec![p("(1 2)", 4), p("(1 2 3 4)", 4)];
        let g = PermGroup::with_caps(4, gens, &caps).unwrap();
        assert!(g.element_table().is_none());
        assert!(g.enumerate_elements().is_err());
    }

    #[test]
    fn enumeration_is_canonical() {
        let gens = vec![p("(1 2)", 3), p("(1 2 3)", 3)];
        let g = PermGroup::from_generators(3, gens.clone()).unwrap();
        let t = g.enumerate_elements().unwrap();
        assert_eq!(t.len(), 6);
        assert!(t.get(0).is_identity());
        assert!(t.elements().windows(2).all(|w| w[0] < w[1]));
        let again = PermGroup::from_generators(3, gens).unwrap();
        assert_eq!(t.elements(), again.enumerate_elements().unwrap().elements());
    }

    #[test]
    fn large_symmetric_group_order() {
        let gens = vec![p("(1 2)", 8), p("(1 2 3 4 5 6 7 8)", 8)];
        let g = PermGroup::from_generators(8, gens).unwrap();
        assert_eq!(g.order(), 40320);
        assert!(g.element_table().is_none());
        assert_eq!(g.chain().base()[0], 0);
    }
}
