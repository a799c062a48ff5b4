use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use serde_json::{json, Value};

use super::report::{ClaimReport, Instance, Status, Witness};
use super::{ClaimId, GroupData, Verifier};
use crate::catalog::{build, build_matrix_group, is_prime, GroupRecipe, MatrixKind};
use crate::error::{Error, Result};
use crate::predicates::{
    biminimal_non_flag, meta_hamiltonian_flag, non_family_intersection_with, para_hamiltonian_flag, FamilyProfile,
    GroupFamily,
};
use crate::structure::{
    center, is_soluble, normal_closure, quotient_of, series_of, sylow_subgroup, tabulated_isomorphic,
    SeriesKind, SubgroupHandle, SubgroupLattice, TabulatedGroup,
};

type Meta = BTreeMap<String, Value>;

struct Outcome {
    scope: Vec<String>,
    instances: Vec<Instance>,
    meta: Meta,
}

impl Outcome {
    fn new(scope: Vec<String>) -> Self {
        Outcome {
            scope,
            instances: Vec::new(),
            meta: Meta::new(),
        }
    }
}

pub(super) fn run(v: &Verifier, claim: ClaimId) -> Result<ClaimReport> {
    let started = Instant::now();
    let out = match claim {
        ClaimId::T2_1 => dickson_all()?,
        ClaimId::T2_2 => suzuki_all()?,
        ClaimId::T2_3 => minimal_simple_list(v)?,
        ClaimId::T2_4 => nilpotent_frattini(v)?,
        ClaimId::L3_1 => frattini_pq(v)?,
        ClaimId::L3_2 => frattini_in_subgroup(v)?,
        ClaimId::T3_3 => frattini_a5(v)?,
        ClaimId::L3_4 => minimal_simple_biminimal(v)?,
        ClaimId::T3_6 => insoluble_classification(v, ClaimId::T3_6)?,
        ClaimId::C3_7 => insoluble_classification(v, ClaimId::C3_7)?,
        ClaimId::C3_8 => insoluble_classification(v, ClaimId::C3_8)?,
        ClaimId::T3_10 => meta_soluble(v)?,
        ClaimId::L4_5 => maximal_in_closure(v)?,
        ClaimId::T4_8 => prime_bound(v)?,
        ClaimId::L5_4 => non_family_core(v)?,
    };
    Ok(ClaimReport::assemble(claim, out.scope, out.instances, out.meta, started))
}

fn recognize_handle(h: &SubgroupHandle) -> Option<String> {
    TabulatedGroup::new(h.to_perm_group())
        .ok()
        .and_then(|t| crate::structure::recognize_tabulated(&t))
}

fn is_cyclic(h: &SubgroupHandle) -> bool {
    let parent = h.parent();
    h.elements().any(|x| parent.order_of(x) == h.order())
}

/// Whether `k` is normalized by every generator of `h`.
fn normalized_by(k: &SubgroupHandle, h: &SubgroupHandle) -> bool {
    let parent = h.parent();
    h.generators()
        .iter()
        .all(|&g| parent.conjugate_set(k.members(), g) == *k.members())
}

fn primes_text(primes: &[u64]) -> String {
    let items: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn class_representatives(lattice: &SubgroupLattice) -> impl Iterator<Item = usize> + '_ {
    lattice.conjugacy_classes().iter().map(|c| c[0])
}

// PSL(2,q) subgroup audit

/// Subgroup types PSL(2,q) must contain (or lack) per the Dickson list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DicksonExpectation {
    pub q: u32,
    pub d: u32,
    pub dihedral_orders: [u32; 2],
    pub borel_order: u32,
    pub a4: bool,
    pub s4: bool,
    pub a5: bool,
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut n = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        n += 1;
    }
    (r == 1).then_some((p, n))
}

pub fn dickson_expectation(q: u32) -> Result<DicksonExpectation> {
    if ![4, 5, 7].contains(&q) {
        return Err(Error::InvalidRecipe(format!(
            "subgroup audit supports q in {{4, 5, 7}}, got {q}"
        )));
    }
    let (p, n) = prime_power(q).expect("supported q is a prime power");
    let d = if q % 2 == 1 { 2 } else { 1 };
    Ok(DicksonExpectation {
        q,
        d,
        dihedral_orders: [2 * (q - 1) / d, 2 * (q + 1) / d],
        borel_order: q * (q - 1) / d,
        a4: p != 2 || n % 2 == 0,
        s4: (q * q) % 16 == 1,
        a5: (q * (q * q - 1)).is_multiple_of(5),
    })
}

fn reference_table(recipe: &GroupRecipe) -> Result<Arc<TabulatedGroup>> {
    TabulatedGroup::new(build(recipe)?.group)
}

/// First class representative isomorphic to `reference`.
fn find_isomorphic(data: &GroupData, reference: &Arc<TabulatedGroup>) -> Option<usize> {
    class_representatives(&data.lattice)
        .filter(|&i| data.lattice.get(i).order() == reference.size())
        .find(|&i| {
            TabulatedGroup::new(data.lattice.get(i).to_perm_group())
                .is_ok_and(|t| tabulated_isomorphic(&t, reference))
        })
}

/// First class representative of order q(q-1)/d with a normal elementary
/// abelian subgroup of order q.
fn find_borel(data: &GroupData, e: &DicksonExpectation) -> Option<usize> {
    let l = &data.lattice;
    let p = prime_power(e.q).unwrap().0 as usize;
    class_representatives(l)
        .filter(|&i| l.get(i).order() == e.borel_order as usize)
        .find(|&i| {
            let h = l.get(i);
            l.subgroups_of(i).any(|k| {
                let k = l.get(k);
                k.order() == e.q as usize
                    && k.is_abelian()
                    && k.elements().skip(1).all(|x| data.table.order_of(x) == p)
                    && normalized_by(k, h)
            })
        })
}

fn dickson_instances(q: u32) -> Result<Vec<Instance>> {
    let e = dickson_expectation(q)?;
    let entry = build_matrix_group(MatrixKind::PSL, 2, q)?;
    let label = format!("PSL(2,{q})");
    let data = GroupData::compute(&label, &entry.group)?;
    let total = data.lattice.len();
    let clause = |check: &str, what: String, expected: bool, found: Option<usize>| {
        let word = |b: bool| if b { "present" } else { "absent" };
        let witness = match found {
            Some(i) => data.witness(i),
            None => Witness::note(format!("none among {total} subgroups")),
        };
        Instance::new(
            label.clone(),
            Instance::pass_if(expected == found.is_some()),
            format!("{what}: expected {}, found {}", word(expected), word(found.is_some())),
        )
        .with_check(check)
        .with_witness(witness)
    };
    let mut out = Vec::new();
    for k in e.dihedral_orders {
        let found = find_isomorphic(&data, &reference_table(&GroupRecipe::dihedral(k))?);
        out.push(clause("(i)", format!("dihedral of order {k}"), true, found));
    }
    out.push(clause(
        "(ii)",
        format!("order {} with normal elementary abelian subgroup of order {q}", e.borel_order),
        true,
        find_borel(&data, &e),
    ));
    for (check, name, expected, recipe) in [
        ("(iii)", "A4", e.a4, GroupRecipe::alternating(4)),
        ("(iv)", "S4", e.s4, GroupRecipe::symmetric(4)),
        ("(v)", "A5", e.a5, GroupRecipe::alternating(5)),
    ] {
        let found = find_isomorphic(&data, &reference_table(&recipe)?);
        out.push(clause(check, name.to_string(), expected, found));
    }
    Ok(out)
}

/// Audits the subgroup list of PSL(2,q) for one supported `q`.
pub fn dickson_audit(q: u32) -> Result<ClaimReport> {
    let started = Instant::now();
    let instances = dickson_instances(q)?;
    Ok(ClaimReport::assemble(
        ClaimId::T2_1,
        vec![format!("PSL(2,{q})")],
        instances,
        Meta::new(),
        started,
    ))
}

fn dickson_all() -> Result<Outcome> {
    let qs = [4, 5, 7];
    let mut out = Outcome::new(qs.iter().map(|q| format!("PSL(2,{q})")).collect());
    for q in qs {
        out.instances.extend(dickson_instances(q)?);
    }
    out.meta.insert(
        "scope_note".into(),
        json!("fixed scope: PSL(2,q) for q in {4,5,7} is built directly"),
    );
    Ok(out)
}

// Suzuki arithmetic

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn suzuki_instance(m: u32) -> Result<Instance> {
    if !(1..=31).contains(&m) {
        return Err(Error::InvalidRecipe(format!("Suzuki parameter m must be in 1..=31, got {m}")));
    }
    let q: u128 = 1 << (2 * m + 1);
    let r: u128 = 1 << m;
    let (a, b) = (q + 2 * r + 1, q - 2 * r + 1);
    let product_ok = a * b == q * q + 1;
    let odd = a % 2 == 1 && b % 2 == 1;
    let coprime = gcd(a, q - 1) == 1 && gcd(b, q - 1) == 1;
    let status = Instance::pass_if(product_ok && odd && coprime);
    let mut inst = Instance::new(
        format!("Sz({q})"),
        status,
        format!(
            "m={m}: q={q}, r={r}, ({a})({b}) = {} {} q^2+1 = {}; factors {}; {} to q-1 = {}",
            a * b,
            if product_ok { "=" } else { "!=" },
            q * q + 1,
            if odd { "odd" } else { "not both odd" },
            if coprime { "coprime" } else { "not coprime" },
            q - 1
        ),
    )
    .with_check(format!("m={m}"));
    if status == Status::Fail {
        inst = inst.with_witness(Witness::note(format!("factors {a} and {b}")));
    }
    Ok(inst)
}

/// Checks the Hall-order arithmetic for `q = 2^(2m+1)`, `r = 2^m`.
pub fn suzuki_arithmetic(m: u32) -> Result<ClaimReport> {
    let started = Instant::now();
    let inst = suzuki_instance(m)?;
    let scope = vec![inst.group.clone()];
    let mut meta = Meta::new();
    meta.insert("normalizer_index".into(), json!("|N(U_i):U_i| = 4 recorded, not checked"));
    Ok(ClaimReport::assemble(ClaimId::T2_2, scope, vec![inst], meta, started))
}

fn suzuki_all() -> Result<Outcome> {
    let instances: Vec<Instance> = (1..=3).map(suzuki_instance).collect::<Result<_>>()?;
    let mut out = Outcome::new(instances.iter().map(|i| i.group.clone()).collect());
    out.instances = instances;
    out.meta.insert("normalizer_index".into(), json!("|N(U_i):U_i| = 4 recorded, not checked"));
    out.meta.insert("scope_note".into(), json!("fixed scope: m in {1,2,3}; arithmetic only"));
    Ok(out)
}

// helpers over the scope

fn scope_data(v: &Verifier) -> Result<(Vec<String>, Vec<Arc<GroupData>>)> {
    Ok((v.scope_labels(), v.all_data()?))
}

/// First proper subgroup that is insoluble, if any.
fn insoluble_proper(d: &GroupData) -> Option<usize> {
    let top = d.lattice.top();
    d.lattice
        .proper_subgroups_of(top)
        .find(|&i| !is_soluble(d.lattice.get(i)))
}

fn is_nonabelian_simple(d: &GroupData) -> bool {
    d.basic.simple && !d.basic.abelian
}

/// The clause of Thompson's list that PSL(2,q) falls under, if any.
fn thompson_clause(q: u64) -> Option<&'static str> {
    let (p, n) = prime_power(q as u32)?;
    let (p, n) = (p as u64, n as u64);
    if p == 2 && is_prime(n) {
        Some("(a) PSL(2,2^p), p prime")
    } else if p == 3 && n % 2 == 1 && n > 1 && is_prime(n) {
        Some("(b) PSL(2,3^p), p odd prime")
    } else if n == 1 && p > 3 && (p * p + 1) % 5 == 0 {
        Some("(c) PSL(2,p), p > 3, p^2+1 = 0 mod 5")
    } else {
        None
    }
}

/// The field size of the PSL(2,q) a recognized minimal simple group is.
fn psl_field(name: &str) -> Option<u64> {
    match name {
        "A5" => Some(4),
        "PSL(2,7)" => Some(7),
        _ => None,
    }
}

// minimal simple groups

/// Instance for one group, and whether it was recognized as A5.
fn minimal_simple_instance(d: &GroupData, label: &str) -> (Instance, bool) {
    if !is_nonabelian_simple(d) {
        return (Instance::new(label, Status::Skip, "not nonabelian simple"), false);
    }
    if let Some(i) = insoluble_proper(d) {
        let inst = Instance::new(label, Status::Skip, "simple but not minimal simple").with_witness(d.witness(i));
        return (inst, false);
    }
    let name = d.display_name();
    let inst = match psl_field(name).and_then(|q| thompson_clause(q).map(|c| (q, c))) {
        Some((q, c)) => Instance::new(
            label,
            Status::Pass,
            format!("minimal simple; recognized {name} = PSL(2,{q}); list clause {c}"),
        ),
        None => Instance::new(label, Status::Fail, "minimal simple but not identified on the list")
            .with_witness(Witness::note(format!("recognized as {name}"))),
    };
    (inst, name == "A5")
}

fn minimal_simple_list(v: &Verifier) -> Result<Outcome> {
    let (scope, data) = scope_data(v)?;
    let mut out = Outcome::new(scope);
    let mut saw_a5 = false;
    for d in &data {
        let (inst, a5) = minimal_simple_instance(d, &d.label);
        saw_a5 |= a5;
        out.instances.push(inst);
    }
    if !saw_a5 {
        let a5 = GroupData::compute("A5", &build(&GroupRecipe::alternating(5))?.group)?;
        out.instances.push(minimal_simple_instance(&a5, "A5 (reference)").0);
    }
    Ok(out)
}

// nilpotent groups and the Frattini subgroup

fn nilpotent_frattini(v: &Verifier) -> Result<Outcome> {
    let (scope, data) = scope_data(v)?;
    let mut out = Outcome::new(scope);
    for d in &data {
        if !d.basic.nilpotent {
            out.instances.push(Instance::new(&d.label, Status::Skip, "not nilpotent"));
            continue;
        }
        let l = &d.lattice;
        let maxes = l.maximal_subgroups_of(l.top());
        let derived = series_of(l.whole(), SeriesKind::Derived).term(2).clone();
        let inst = if let Some(&m) = maxes.iter().find(|&&m| !l.is_normal(m)) {
            Instance::new(&d.label, Status::Fail, "maximal subgroup not normal").with_witness(d.witness(m))
        } else if !derived.is_subgroup_of(&d.frattini) {
            let i = l.index_of(&derived)?;
            Instance::new(&d.label, Status::Fail, "G' not contained in Phi(G)").with_witness(d.witness(i))
        } else {
            Instance::new(
                &d.label,
                Status::Pass,
                format!(
                    "{} maximal subgroups, all normal; |G'| = {} <= |Phi(G)| = {}",
                    maxes.len(),
                    derived.order(),
                    d.frattini.order()
                ),
            )
        };
        out.instances.push(inst);
    }
    Ok(out)
}

// Frattini quotient of order pq

fn frattini_pq(v: &Verifier) -> Result<Outcome> {
    let (scope, data) = scope_data(v)?;
    let mut out = Outcome::new(scope);
    for d in &data {
        let l = &d.lattice;
        let quotient = (d.order() / d.frattini.order()) as u64;
        let qprimes = crate::structure::prime_divisors(quotient);
        let derived = series_of(l.whole(), SeriesKind::Derived).term(2).clone();
        let nonabelian = !derived.is_subgroup_of(&d.frattini);
        if qprimes.len() != 2 || qprimes[0] * qprimes[1] != quotient || !nonabelian {
            out.instances.push(Instance::new(
                &d.label,
                Status::Skip,
                format!(
                    "G/Phi(G) of order {quotient} is {}",
                    if nonabelian { "not of order pq" } else { "abelian" }
                ),
            ));
            continue;
        }
        let (q, p) = (qprimes[0], qprimes[1]);
        let sp = sylow_subgroup(l, p)?;
        let sq = sylow_subgroup(l, q)?;
        let ip = l.index_of(&sp)?;
        let iq = l.index_of(&sq)?;
        let primes_ok = d.primes() == vec![q, p];
        let detail = format!(
            "G/Phi(G) nonabelian of order {p}*{q}; Sylow {p} of order {} {} and {}; Sylow {q} of order {} {}",
            sp.order(),
            if is_cyclic(&sp) { "cyclic" } else { "not cyclic" },
            if l.is_normal(ip) { "normal" } else { "not normal" },
            sq.order(),
            if is_cyclic(&sq) { "cyclic" } else { "not cyclic" },
        );
        let inst = if !primes_ok {
            Instance::new(&d.label, Status::Fail, detail)
                .with_witness(Witness::note(format!("pi(G) = {}", primes_text(&d.primes()))))
        } else if !is_cyclic(&sp) || !l.is_normal(ip) {
            Instance::new(&d.label, Status::Fail, detail).with_witness(d.witness(ip))
        } else if !is_cyclic(&sq) {
            Instance::new(&d.label, Status::Fail, detail).with_witness(d.witness(iq))
        } else {
            Instance::new(
                &d.label,
                Status::Pass,
                format!("{detail}; G = C{}:C{}", sp.order(), sq.order()),
            )
        };
        out.instances.push(inst);
    }
    Ok(out)
}

// Frattini subgroup inside minimal non-nilpotent subgroups

fn is_minimal_non_nilpotent_group(g: crate::group::PermGroup) -> Result<bool> {
    let t = TabulatedGroup::new(g)?;
    let l = SubgroupLattice::build(&t)?;
    Ok(crate::predicates::is_minimal_non(&l, GroupFamily::Nilpotent))
}

fn frattini_in_subgroup(v: &Verifier) -> Result<Outcome> {
    let (scope, data) = scope_data(v)?;
    let mut out = Outcome::new(scope);
    for d in &data {
        let l = &d.lattice;
        let nil = d.profile(GroupFamily::Nilpotent);
        let phi = &d.frattini;
        let mut any = false;
        for h in class_representatives(l) {
            let sub = l.get(h);
            if !nil.minimal_non(h) || !phi.is_subgroup_of(sub) {
                continue;
            }
            if !is_minimal_non_nilpotent_group(quotient_of(sub, phi)?)? {
                continue;
            }
            any = true;
            let phi_h = crate::structure::frattini_of(l, h);
            let w = d.witness(h);
            let name = w.name.clone().unwrap_or_else(|| format!("order {}", sub.order()));
            let class_size = l.conjugacy_classes()[l.class_of(h)].len();
            let ok = phi.is_subgroup_of(&phi_h);
            let mut inst = Instance::new(
                &d.label,
                Instance::pass_if(ok),
                format!(
                    "|Phi(G)| = {}, |Phi(H)| = {}, Phi(G) {} Phi(H)",
                    phi.order(),
                    phi_h.order(),
                    if ok { "<=" } else { "not <=" }
                ),
            )
            .with_check(format!("H = {name} (class of {class_size})"));
            if !ok {
                inst = inst.with_witness(w);
            }
            out.instances.push(inst);
        }
        if !any {
            out.instances.push(Instance::new(
                &d.label,
                Status::Skip,
                "no H >= Phi(G) with H and H/Phi(G) minimal non-nilpotent",
            ));
        }
    }
    Ok(out)
}

// Frattini quotient A5

fn frattini_a5(v: &Verifier) -> Result<Outcome> {
    let (scope, data) = scope_data(v)?;
    let mut out = Outcome::new(scope);
    let mut hypothesis = Vec::new();
    for d in &data {
        let quotient = d.order() / d.frattini.order();
        if quotient != 60 {
            out.instances.push(Instance::new(
                &d.label,
                Status::Skip,
                format!("G/Phi(G) has order {quotient}, not A5"),
            ));
            continue;
        }
        let qname = crate::structure::recognize_group(&quotient_of(d.lattice.whole(), &d.frattini)?);
        if qname.as_deref() != Some("A5") {
            out.instances.push(Instance::new(&d.label, Status::Skip, "G/Phi(G) of order 60 is not A5"));
            continue;
        }
        hypothesis.push(d.label.clone());
        let z = center(&d.table);
        let facts = format!(
            "G/Phi(G) = A5; |Phi(G)| = {}, |Z(G)| = {}, Phi(G) {} Z(G)",
            d.frattini.order(),
            z.order(),
            if z == d.frattini { "=" } else { "!=" }
        );
        let para = para_hamiltonian_flag(&d.lattice, d.profile(GroupFamily::Nilpotent));
        if !para.value {
            let w = para.witness.map(|i| d.witness(i)).unwrap_or_default();
            out.instances.push(
                Instance::new(&d.label, Status::Skip, format!("{facts}; not para-nilpotent-Hamiltonian"))
                    .with_witness(w),
            );
            continue;
        }
        let ok = matches!(d.display_name(), "A5" | "SL(2,5)");
        out.instances.push(Instance::new(
            &d.label,
            Instance::pass_if(ok),
            format!("{facts}; para-nilpotent-Hamiltonian; recognized {}", d.display_name()),
        ));
    }
    out.meta.insert("frattini_quotient_a5".into(), json!(hypothesis));
    Ok(out)
}

// biminimal minimal simple groups

fn minimal_simple_biminimal(v: &Verifier) -> Result<Outcome> {
    let (scope, data) = scope_data(v)?;
    let mut out = Outcome::new(scope);
    for d in &data {
        if !is_nonabelian_simple(d) {
            out.instances.push(Instance::new(&d.label, Status::Skip, "not nonabelian simple"));
            continue;
        }
        if let Some(i) = insoluble_proper(d) {
            out.instances.push(
                Instance::new(&d.label, Status::Skip, "not minimal simple").with_witness(d.witness(i)),
            );
            continue;
        }
        let flag = biminimal_non_flag(&d.lattice, d.profile(GroupFamily::Nilpotent));
        if !flag.value {
            let w = flag.witness.map(|i| d.witness(i)).unwrap_or_default();
            out.instances.push(
                Instance::new(
                    &d.label,
                    Status::Skip,
                    format!("minimal simple {} is not biminimal non-nilpotent", d.display_name()),
                )
                .with_witness(w),
            );
            continue;
        }
        let ok = d.display_name() == "A5";
        out.instances.push(Instance::new(
            &d.label,
            Instance::pass_if(ok),
            format!("minimal simple, biminimal non-nilpotent, recognized {}", d.display_name()),
        ));
    }
    out.meta.insert(
        "not_machine_checked".into(),
        json!([
            "PSL(2,2^p) for p > 2: arithmetic narrative on 2^p - 1 and 2^p + 1",
            "PSL(2,3^p): arithmetic narrative on the primality of (3^p - 1)/2 and (3^p + 1)/2",
            "PSL(2,p) for p > 7: arithmetic narrative on (p - 1)/2 and (p + 1)/2",
            "PSL(2,8) and PSL(3,3): beyond the lattice budget",
            "Sz(2^p): Frobenius normalizer argument; the group is not constructed"
        ]),
    );
    Ok(out)
}

// insoluble classifications

fn insoluble_classification(v: &Verifier, claim: ClaimId) -> Result<Outcome> {
    let (scope, data) = scope_data(v)?;
    let mut out = Outcome::new(scope);
    let (family, property, allowed): (GroupFamily, &str, &[&str]) = match claim {
        ClaimId::T3_6 => (GroupFamily::Nilpotent, "para-nilpotent-Hamiltonian", &["A5", "SL(2,5)"]),
        ClaimId::C3_7 => (GroupFamily::Nilpotent, "biminimal non-nilpotent", &["A5", "SL(2,5)"]),
        ClaimId::C3_8 => (GroupFamily::Abelian, "biminimal non-abelian", &["A5"]),
        _ => unreachable!("not a classification claim"),
    };
    let mut members = Vec::new();
    for d in &data {
        if d.basic.soluble {
            out.instances.push(Instance::new(&d.label, Status::Skip, "soluble"));
            continue;
        }
        let profile = d.profile(family);
        let flag = if claim == ClaimId::T3_6 {
            para_hamiltonian_flag(&d.lattice, profile)
        } else {
            biminimal_non_flag(&d.lattice, profile)
        };
        let name = d.display_name();
        let named = allowed.contains(&name);
        let mut ok = flag.value == named;
        let mut detail = format!(
            "{} {property}; recognized {name}",
            if flag.value { "is" } else { "not" }
        );
        if flag.value {
            members.push(d.label.clone());
            let primes = d.primes();
            detail.push_str(&format!("; pi(G) = {}", primes_text(&primes)));
            if claim == ClaimId::T3_6 {
                ok &= primes == vec![2, 3, 5];
            }
        }
        let witness = flag.witness.map(|i| d.witness(i));
        if claim == ClaimId::C3_8 && name == "SL(2,5)" {
            let required = flag.witness.is_some_and(|i| sl23_witness(d, profile, i));
            detail.push_str(if required {
                "; witness is a non-normal SL(2,3), not abelian and not minimal non-abelian"
            } else {
                "; witness is not the expected SL(2,3)"
            });
            ok &= required;
        }
        let mut inst = Instance::new(&d.label, Instance::pass_if(ok), detail);
        if let Some(w) = witness {
            inst = inst.with_witness(w);
        } else if !ok {
            inst = inst.with_witness(Witness::note(format!("{property} but recognized {name}")));
        }
        out.instances.push(inst);
    }
    out.meta.insert(format!("insoluble_{}", property.replace([' ', '-'], "_")), json!(members));
    Ok(out)
}

fn sl23_witness(d: &GroupData, profile: &FamilyProfile, i: usize) -> bool {
    let h = d.lattice.get(i);
    h.order() == 24
        && !d.lattice.is_normal(i)
        && !profile.in_family(i)
        && !profile.minimal_non(i)
        && recognize_handle(h).as_deref() == Some("SL(2,3)")
}

// meta-nilpotent-Hamiltonian solubility

fn meta_soluble(v: &Verifier) -> Result<Outcome> {
    let (scope, data) = scope_data(v)?;
    let mut out = Outcome::new(scope);
    let mut insoluble_meta = Vec::new();
    let mut insoluble_checked = 0;
    for d in &data {
        let flag = meta_hamiltonian_flag(&d.lattice, d.profile(GroupFamily::Nilpotent));
        if !d.basic.soluble {
            insoluble_checked += 1;
        }
        if !flag.value {
            let mut inst = Instance::new(&d.label, Status::Skip, "not meta-nilpotent-Hamiltonian");
            if !d.basic.soluble {
                inst.detail.push_str(" (insoluble)");
                if let Some(i) = flag.witness {
                    inst = inst.with_witness(d.witness(i));
                }
            }
            out.instances.push(inst);
            continue;
        }
        if !d.basic.soluble {
            insoluble_meta.push(d.label.clone());
        }
        let mut inst = Instance::new(
            &d.label,
            Instance::pass_if(d.basic.soluble),
            format!(
                "meta-nilpotent-Hamiltonian and {}",
                if d.basic.soluble { "soluble" } else { "insoluble" }
            ),
        );
        if !d.basic.soluble {
            inst = inst.with_witness(Witness::note("insoluble meta-nilpotent-Hamiltonian group"));
        }
        out.instances.push(inst);
    }
    let verdict = if insoluble_meta.is_empty() {
        format!("pass (vacuous, n=0); {insoluble_checked} insoluble groups examined, none meta-nilpotent-Hamiltonian")
    } else {
        format!("fail; {} insoluble meta-nilpotent-Hamiltonian groups", insoluble_meta.len())
    };
    out.meta.insert(
        "insoluble_and_meta".into(),
        json!({ "count": insoluble_meta.len(), "groups": insoluble_meta, "verdict": verdict }),
    );
    Ok(out)
}

// maximality in the normal closure

fn maximal_in_closure(v: &Verifier) -> Result<Outcome> {
    let (scope, data) = scope_data(v)?;
    let mut out = Outcome::new(scope);
    for d in &data {
        for family in GroupFamily::ALL {
            let profile = d.profile(family);
            let l = &d.lattice;
            if !para_hamiltonian_flag(l, profile).value {
                out.instances.push(
                    Instance::new(&d.label, Status::Skip, format!("not para-{family}-Hamiltonian"))
                        .with_family(family),
                );
                continue;
            }
            let mut checked = 0;
            let mut violation = None;
            for x in (0..l.len()).filter(|&x| !l.is_normal(x) && !profile.in_family(x)) {
                checked += 1;
                let closure = l.index_of(&normal_closure(l.get(x)))?;
                if !l.is_maximal_in(x, closure) {
                    violation = Some(x);
                    break;
                }
            }
            let mut inst = Instance::new(
                &d.label,
                Instance::pass_if(violation.is_none()),
                format!("{checked} non-normal non-{family} subgroups; each maximal in its normal closure"),
            )
            .with_family(family);
            if let Some(x) = violation {
                inst.detail = format!("subgroup #{x} is not maximal in its normal closure");
                inst = inst.with_witness(d.witness(x));
            }
            out.instances.push(inst);
        }
    }
    Ok(out)
}

// prime divisor bound

fn prime_bound(v: &Verifier) -> Result<Outcome> {
    let (scope, data) = scope_data(v)?;
    let mut out = Outcome::new(scope);
    for d in &data {
        if !biminimal_non_flag(&d.lattice, d.profile(GroupFamily::Nilpotent)).value {
            out.instances.push(Instance::new(&d.label, Status::Skip, "not biminimal non-nilpotent"));
            continue;
        }
        let primes = d.primes();
        let ok = primes.len() <= 3;
        let mut inst = Instance::new(
            &d.label,
            Instance::pass_if(ok),
            format!("biminimal non-nilpotent; pi(G) = {} ({} primes)", primes_text(&primes), primes.len()),
        );
        if !ok {
            inst = inst.with_witness(Witness::note(format!("|pi(G)| = {}", primes.len())));
        }
        out.instances.push(inst);
    }
    Ok(out)
}

// intersection of non-family subgroups

fn non_family_core(v: &Verifier) -> Result<Outcome> {
    let (scope, data) = scope_data(v)?;
    let mut out = Outcome::new(scope);
    for d in &data {
        let l = &d.lattice;
        let gamma3 = series_of(l.whole(), SeriesKind::LowerCentral).term(3).clone();
        for family in GroupFamily::ALL {
            let profile = d.profile(family);
            if !meta_hamiltonian_flag(l, profile).value {
                out.instances.push(
                    Instance::new(&d.label, Status::Skip, format!("not meta-{family}-Hamiltonian"))
                        .with_family(family),
                );
                continue;
            }
            let i = non_family_intersection_with(l, profile);
            let idx = l.index_of(&i)?;
            let contains = gamma3.is_subgroup_of(&i);
            let kind = if profile.in_family(idx) {
                Some(family.to_string())
            } else if profile.minimal_non(idx) {
                Some(format!("minimal non-{family}"))
            } else {
                None
            };
            let ok = contains && kind.is_some();
            let mut inst = Instance::new(
                &d.label,
                Instance::pass_if(ok),
                format!(
                    "|I| = {}, |gamma_3(G)| = {}, gamma_3(G) {} I, I is {}",
                    i.order(),
                    gamma3.order(),
                    if contains { "<=" } else { "not <=" },
                    kind.as_deref().unwrap_or("neither")
                ),
            )
            .with_family(family);
            if !ok {
                inst = inst.with_witness(d.witness(idx));
            }
            out.instances.push(inst);
        }
    }
    Ok(out)
}
