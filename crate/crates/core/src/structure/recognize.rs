//! Naming groups: structural fingerprints plus explicit isomorphism tests
//! against catalog builtins.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::iso::tabulated_isomorphic;
use super::ops::{center, is_perfect, normal_closure_in, p_part, prime_divisors, quotient_group};
use super::table::TabulatedGroup;
use crate::catalog::{build, is_prime, GroupRecipe, MatrixKind};
use crate::group::PermGroup;

fn reference(recipe: GroupRecipe) -> Option<Arc<TabulatedGroup>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<TabulatedGroup>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&recipe.label) {
        return Some(Arc::clone(t));
    }
    let t = TabulatedGroup::new(build(&recipe).ok()?.group).ok()?;
    cache
        .lock()
        .unwrap()
        .insert(recipe.label.clone(), Arc::clone(&t));
    Some(t)
}

fn matches(g: &Arc<TabulatedGroup>, recipe: GroupRecipe) -> bool {
    reference(recipe).is_some_and(|r| tabulated_isomorphic(g, &r))
}

/// No normal subgroups other than 1 and G, and G nontrivial.
pub fn is_simple(g: &Arc<TabulatedGroup>) -> bool {
    if g.size() == 1 {
        return false;
    }
    let whole = g.whole();
    let mut covered = fixedbitset::FixedBitSet::with_capacity(g.size());
    for x in 1..g.size() {
        if covered.contains(x) {
            continue;
        }
        let n = normal_closure_in(&[x], &whole);
        if !n.is_whole() {
            return false;
        }
        // conjugates of x have the same normal closure
        for y in 0..g.size() {
            covered.insert(g.conj(x, y));
        }
    }
    true
}

/// Invariant factors of an abelian group, ascending.
fn abelian_invariants(g: &TabulatedGroup) -> Vec<u64> {
    let n = g.size() as u64;
    let mut per_prime: Vec<(u64, Vec<u32>)> = Vec::new();
    for p in prime_divisors(n) {
        // at_least[k-1] = number of cyclic p-factors of exponent >= k
        let mut at_least: Vec<u32> = Vec::new();
        let mut prev_rank = 0;
        for k in 1.. {
            let count = (0..g.size())
                .filter(|&x| p.pow(k) % g.order_of(x) as u64 == 0)
                .count() as u64;
            let rank = count.ilog(p);
            if rank == prev_rank {
                break;
            }
            at_least.push(rank - prev_rank);
            prev_rank = rank;
        }
        let width = at_least.first().copied().unwrap_or(0);
        let exponents = (0..width)
            .map(|i| at_least.iter().take_while(|&&c| c > i).count() as u32)
            .collect();
        per_prime.push((p, exponents));
    }
    let width = per_prime.iter().map(|(_, f)| f.len()).max().unwrap_or(0);
    let mut invariants: Vec<u64> = (0..width)
        .map(|i| {
            per_prime
                .iter()
                .map(|(p, f)| f.get(i).map_or(1, |&e| p.pow(e)))
                .product()
        })
        .collect();
    invariants.sort_unstable();
    invariants
}

fn abelian_name(g: &TabulatedGroup) -> String {
    let inv = abelian_invariants(g);
    if inv.len() == 1 {
        return format!("C{}", inv[0]);
    }
    if inv.iter().all(|&x| x == inv[0]) && is_prime(inv[0]) {
        return format!("C{}^{}", inv[0], inv.len());
    }
    inv.iter()
        .map(|x| format!("C{x}"))
        .collect::<Vec<_>>()
        .join("x")
}

fn has_element_of_order(g: &TabulatedGroup, k: usize) -> bool {
    (0..g.size()).any(|x| g.order_of(x) == k)
}

/// Standard name of a tabulated group, when a fingerprint or a builtin
/// isomorphism matches.
pub fn recognize_tabulated(g: &Arc<TabulatedGroup>) -> Option<String> {
    let n = g.size();
    if n == 1 {
        return Some("C1".into());
    }
    if g.whole().is_abelian() {
        return Some(abelian_name(g));
    }
    if n == 60 && is_simple(g) {
        return Some("A5".into());
    }
    if n == 120 && is_perfect(&g.whole()) {
        let z = center(g);
        if z.order() == 2 {
            let q = quotient_group(&z).ok()?;
            if TabulatedGroup::new(q).ok().is_some_and(|t| is_simple(&t)) {
                return Some("SL(2,5)".into());
            }
        }
    }
    for (k, fact) in [(3u32, 6usize), (4, 24), (5, 120)] {
        if n == fact && matches(g, GroupRecipe::symmetric(k)) {
            return Some(format!("S{k}"));
        }
    }
    if n == 12 && matches(g, GroupRecipe::alternating(4)) {
        return Some("A4".into());
    }
    if n >= 6 && n.is_multiple_of(2) && has_element_of_order(g, n / 2) && matches(g, GroupRecipe::dihedral(n as u32)) {
        return Some(format!("D{n}"));
    }
    if n >= 8 && n.is_multiple_of(4) && has_element_of_order(g, n / 2) && matches(g, GroupRecipe::dicyclic((n / 4) as u32)) {
        return Some(format!("Q{n}"));
    }
    if n == 24 && matches(g, GroupRecipe::matrix(MatrixKind::SL, 3)) {
        return Some("SL(2,3)".into());
    }
    if n == 168 && is_simple(g) && matches(g, GroupRecipe::matrix(MatrixKind::PSL, 7)) {
        return Some("PSL(2,7)".into());
    }
    semidirect_cyclic_name(g)
}

/// `C{p^m}:C{q^n}` when |G| has two prime divisors, both Sylow subgroups are
/// cyclic and the Sylow p-subgroup is normal.
fn semidirect_cyclic_name(g: &TabulatedGroup) -> Option<String> {
    let n = g.size() as u64;
    let primes = prime_divisors(n);
    if primes.len() != 2 {
        return None;
    }
    let cyclic_sylow = |p: u64| has_element_of_order(g, p_part(n, p) as usize);
    // a Sylow p-subgroup is normal iff it is the only one, i.e. the p-elements
    // number exactly |G|_p
    let normal_sylow = |p: u64| {
        let part = p_part(n, p);
        let count = (0..g.size())
            .filter(|&x| part.is_multiple_of(g.order_of(x) as u64))
            .count() as u64;
        count == part
    };
    if !primes.iter().all(|&p| cyclic_sylow(p)) {
        return None;
    }
    let (p, q) = if normal_sylow(primes[1]) {
        (primes[1], primes[0])
    } else if normal_sylow(primes[0]) {
        (primes[0], primes[1])
    } else {
        return None;
    };
    Some(format!("C{}:C{}", p_part(n, p), p_part(n, q)))
}

/// Standard name of a group, or `None`. Groups beyond the lattice cap are
/// not examined.
pub fn recognize_group(g: &PermGroup) -> Option<String> {
    if g.order() > g.caps().lattice_cap as u128 {
        return None;
    }
    let t = TabulatedGroup::new(g.clone()).ok()?;
    recognize_tabulated(&t)
}
