//! Isomorphism testing: invariant screening, then backtracking over
//! generator images.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::ops::{center, series, SeriesKind};
use super::table::TabulatedGroup;
use crate::error::{Error, Result};
use crate::group::PermGroup;

#[derive(Debug, PartialEq, Eq)]
struct Invariants {
    order: usize,
    abelian: bool,
    order_histogram: BTreeMap<usize, usize>,
    center_order: usize,
    derived_orders: Vec<usize>,
}

fn invariants(g: &Arc<TabulatedGroup>) -> Invariants {
    let mut order_histogram = BTreeMap::new();
    for x in 0..g.size() {
        *order_histogram.entry(g.order_of(x)).or_insert(0) += 1;
    }
    Invariants {
        order: g.size(),
        abelian: g.whole().is_abelian(),
        order_histogram,
        center_order: center(g).order(),
        derived_orders: series(g, SeriesKind::Derived).orders(),
    }
}

/// Centralizer size of every element; a conjugation-invariant refinement of
/// element order used to prune candidate images.
fn centralizer_sizes(g: &TabulatedGroup) -> Vec<usize> {
    (0..g.size())
        .map(|x| (0..g.size()).filter(|&y| g.mul(x, y) == g.mul(y, x)).count())
        .collect()
}

struct Search<'a> {
    a: &'a TabulatedGroup,
    b: &'a TabulatedGroup,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    images: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl Search<'_> {
    /// Extends the map over <gens[..=depth]> by breadth-first search; fails on
    /// an inconsistency or a collision.
    fn consistent(&self, depth: usize) -> Option<Vec<usize>> {
        let (a, b) = (self.a, self.b);
        let mut phi = vec![UNSET; a.size()];
        let mut used = vec![false; b.size()];
        phi[0] = 0;
        used[0] = true;
        let mut queue = vec![0usize];
        let mut k = 0;
        while k < queue.len() {
            let x = queue[k];
            for i in 0..=depth {
                let y = a.mul(x, self.gens[i]);
                let image = b.mul(phi[x], self.images[i]);
                if phi[y] == UNSET {
                    if used[image] {
                        return None;
                    }
                    phi[y] = image;
                    used[image] = true;
                    queue.push(y);
                } else if phi[y] != image {
                    return None;
                }
            }
            k += 1;
        }
        Some(phi)
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.gens.len() {
            return true;
        }
        for c in self.candidates[depth].clone() {
            self.images[depth] = c;
            if self.consistent(depth).is_some() && self.run(depth + 1) {
                return true;
            }
        }
        false
    }
}

/// Whether two tabulated groups are isomorphic.
pub fn tabulated_isomorphic(a: &Arc<TabulatedGroup>, b: &Arc<TabulatedGroup>) -> bool {
    if a.size() != b.size() {
        return false;
    }
    if invariants(a) != invariants(b) {
        return false;
    }
    if a.size() == 1 {
        return true;
    }
    let ca = centralizer_sizes(a);
    let cb = centralizer_sizes(b);
    let gens = {
        let mut gens = a.generators_for(a.whole().members());
        gens.sort_by_key(|&x| (std::cmp::Reverse(a.order_of(x)), x));
        gens
    };
    let candidates = gens
        .iter()
        .map(|&x| {
            (0..b.size())
                .filter(|&y| b.order_of(y) == a.order_of(x) && cb[y] == ca[x])
                .collect()
        })
        .collect();
    let mut search = Search {
        a,
        b,
        images: vec![0; gens.len()],
        gens,
        candidates,
    };
    search.run(0)
}

/// Whether two permutation groups are isomorphic. Both must fit the lattice cap.
pub fn are_isomorphic(a: &PermGroup, b: &PermGroup) -> Result<bool> {
    for g in [a, b] {
        let cap = g.caps().lattice_cap;
        if g.order() > cap as u128 {
            return Err(Error::SizeCap {
                what: "isomorphism",
                order: g.order(),
                cap,
            });
        }
    }
    if a.order() != b.order() {
        return Ok(false);
    }
    let ta = TabulatedGroup::new(a.clone())?;
    let tb = TabulatedGroup::new(b.clone())?;
    Ok(tabulated_isomorphic(&ta, &tb))
}
