//! Brute-force oracles shared by the structure tests and the acceptance run.

use std::collections::{BTreeSet, HashMap, HashSet};

use hamiltonia::{PermGroup, Permutation};

/// Order of a permutation group by exhaustive closure of its generators.
pub fn closure_size(group: &PermGroup) -> usize {
    let id = Permutation::identity(group.degree());
    let mut seen: HashSet<Vec<u32>> = HashSet::from([id.images().to_vec()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in group.generators() {
            let y = x.mul(g);
            if seen.insert(y.images().to_vec()) {
                frontier.push(y);
            }
        }
    }
    seen.len()
}

/// Multiplication table computed directly from the permutations.
pub fn cayley(elements: &[Permutation]) -> Vec<Vec<usize>> {
    let index: HashMap<&[u32], usize> =
        elements.iter().enumerate().map(|(i, p)| (p.images(), i)).collect();
    elements
        .iter()
        .map(|a| elements.iter().map(|b| index[a.mul(b).images()]).collect())
        .collect()
}

/// Every nonempty multiplicatively closed subset, found by deciding each
/// element in turn and propagating closure.
pub fn closed_subsets(mul: &[Vec<usize>], identity: usize) -> BTreeSet<Vec<usize>> {
    fn close(mul: &[Vec<usize>], inc: &mut [bool], exc: &[bool], x: usize) -> bool {
        let mut queue = vec![x];
        if inc[x] {
            return true;
        }
        if exc[x] {
            return false;
        }
        inc[x] = true;
        while let Some(a) = queue.pop() {
            for b in 0..inc.len() {
                if !inc[b] {
                    continue;
                }
                for p in [mul[a][b], mul[b][a]] {
                    if exc[p] {
                        return false;
                    }
                    if !inc[p] {
                        inc[p] = true;
                        queue.push(p);
                    }
                }
            }
        }
        true
    }
    fn search(mul: &[Vec<usize>], inc: Vec<bool>, mut exc: Vec<bool>, next: usize, out: &mut BTreeSet<Vec<usize>>) {
        let n = inc.len();
        let Some(x) = (next..n).find(|&i| !inc[i] && !exc[i]) else {
            out.insert((0..n).filter(|&i| inc[i]).collect());
            return;
        };
        let mut with = inc.clone();
        if close(mul, &mut with, &exc, x) {
            search(mul, with, exc.clone(), x + 1, out);
        }
        exc[x] = true;
        search(mul, inc, exc, x + 1, out);
    }
    let n = mul.len();
    let mut inc = vec![false; n];
    let exc = vec![false; n];
    assert!(close(mul, &mut inc, &exc, identity));
    let mut out = BTreeSet::new();
    search(mul, inc, exc, 0, &mut out);
    out
}
