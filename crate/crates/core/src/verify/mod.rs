//! Claim verification over a scope of catalog groups.
//!
//! Each [`ClaimId`] has one checker. Checkers share a [`Workspace`] that
//! computes the lattice and predicate data of every scope group once.

mod census;
mod claims;
mod report;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::catalog::CatalogEntry;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::predicates::{basic_flags, evaluate, BasicFlags, FamilyProfile, GroupFamily, PredicateResult};
use crate::structure::cache::group_hash;
use crate::structure::{
    frattini_subgroup, prime_divisors, recognize_tabulated, SubgroupHandle, SubgroupLattice, TabulatedGroup,
};

pub use census::{census_violations, run_census, CensusRow, CensusTable, FamilyFlags};
pub use claims::{dickson_audit, dickson_expectation, suzuki_arithmetic, DicksonExpectation};
pub use report::{ClaimReport, Instance, Status, Verdict, Witness, REPORT_SCHEMA};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    T2_1,
    T2_2,
    T2_3,
    T2_4,
    L3_1,
    L3_2,
    T3_3,
    L3_4,
    T3_6,
    C3_7,
    C3_8,
    T3_10,
    L4_5,
    T4_8,
    L5_4,
}

impl ClaimId {
    pub const ALL: [ClaimId; 15] = [
        ClaimId::T2_1,
        ClaimId::T2_2,
        ClaimId::T2_3,
        ClaimId::T2_4,
        ClaimId::L3_1,
        ClaimId::L3_2,
        ClaimId::T3_3,
        ClaimId::L3_4,
        ClaimId::T3_6,
        ClaimId::C3_7,
        ClaimId::C3_8,
        ClaimId::T3_10,
        ClaimId::L4_5,
        ClaimId::T4_8,
        ClaimId::L5_4,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ClaimId::T2_1 => "T2.1",
            ClaimId::T2_2 => "T2.2",
            ClaimId::T2_3 => "T2.3",
            ClaimId::T2_4 => "T2.4",
            ClaimId::L3_1 => "L3.1",
            ClaimId::L3_2 => "L3.2",
            ClaimId::T3_3 => "T3.3",
            ClaimId::L3_4 => "L3.4",
            ClaimId::T3_6 => "T3.6",
            ClaimId::C3_7 => "C3.7",
            ClaimId::C3_8 => "C3.8",
            ClaimId::T3_10 => "T3.10",
            ClaimId::L4_5 => "L4.5",
            ClaimId::T4_8 => "T4.8",
            ClaimId::L5_4 => "L5.4",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            ClaimId::T2_1 => "subgroups of PSL(2,q) for q in {4,5,7} match the Dickson list clause by clause",
            ClaimId::T2_2 => "Suzuki Hall orders: (q+2r+1)(q-2r+1) = q^2+1 with odd factors coprime to q-1",
            ClaimId::T2_3 => "every minimal simple scope group is on Thompson's list; A5 is minimal simple",
            ClaimId::T2_4 => "nilpotent groups have normal maximal subgroups and G' <= Phi(G)",
            ClaimId::L3_1 => "G/Phi(G) nonabelian of order pq implies cyclic Sylows with a normal Sylow p",
            ClaimId::L3_2 => "Phi(G) <= H with H and H/Phi(G) minimal non-nilpotent implies Phi(G) <= Phi(H)",
            ClaimId::T3_3 => "G/Phi(G) = A5 and para-nilpotent-Hamiltonian implies G = A5 or SL(2,5)",
            ClaimId::L3_4 => "a biminimal non-nilpotent minimal simple group is A5",
            ClaimId::T3_6 => "insoluble groups are para-nilpotent-Hamiltonian exactly when A5 or SL(2,5)",
            ClaimId::C3_7 => "insoluble groups are biminimal non-nilpotent exactly when A5 or SL(2,5)",
            ClaimId::C3_8 => "insoluble groups are biminimal non-abelian exactly when A5",
            ClaimId::T3_10 => "meta-nilpotent-Hamiltonian groups are soluble",
            ClaimId::L4_5 => "in a para-X-Hamiltonian group every non-normal non-X subgroup is maximal in its normal closure",
            ClaimId::T4_8 => "biminimal non-nilpotent groups have at most three prime divisors",
            ClaimId::L5_4 => "in a meta-X-Hamiltonian group gamma_3(G) <= I and I is X or minimal non-X",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// Lattice and predicate data for one group, computed once and shared.
#[derive(Debug)]
pub struct GroupData {
    pub label: String,
    pub table: Arc<TabulatedGroup>,
    pub lattice: SubgroupLattice,
    pub basic: BasicFlags,
    pub name: Option<String>,
    pub frattini: SubgroupHandle,
    abelian: FamilyProfile,
    nilpotent: FamilyProfile,
}

impl GroupData {
    pub fn compute(label: &str, group: &PermGroup) -> Result<Self> {
        let cap = group.caps().lattice_cap;
        if group.order() > cap as u128 {
            return Err(Error::SizeCap {
                what: "lattice",
                order: group.order(),
                cap,
            });
        }
        let table = TabulatedGroup::new(group.clone())?;
        let lattice = SubgroupLattice::build(&table)?;
        Ok(Self::from_lattice(label, lattice))
    }

    pub fn from_lattice(label: &str, lattice: SubgroupLattice) -> Self {
        let table = Arc::clone(lattice.parent());
        GroupData {
            label: label.to_string(),
            basic: basic_flags(&lattice),
            name: recognize_tabulated(&table),
            frattini: frattini_subgroup(&lattice),
            abelian: FamilyProfile::new(&lattice, GroupFamily::Abelian),
            nilpotent: FamilyProfile::new(&lattice, GroupFamily::Nilpotent),
            table,
            lattice,
        }
    }

    pub fn order(&self) -> usize {
        self.table.size()
    }

    pub fn primes(&self) -> Vec<u64> {
        prime_divisors(self.order() as u64)
    }

    pub fn profile(&self, family: GroupFamily) -> &FamilyProfile {
        match family {
            GroupFamily::Abelian => &self.abelian,
            GroupFamily::Nilpotent => &self.nilpotent,
        }
    }

    pub fn predicates(&self, family: GroupFamily) -> PredicateResult {
        evaluate(&self.label, &self.lattice, self.profile(family))
    }

    /// Describes subgroup `i` of the lattice as a witness.
    pub fn witness(&self, i: usize) -> Witness {
        let h = self.lattice.get(i);
        let name = if h.is_whole() {
            self.name.clone()
        } else {
            TabulatedGroup::new(h.to_perm_group())
                .ok()
                .and_then(|t| recognize_tabulated(&t))
        };
        Witness {
            subgroup: Some(i),
            order: Some(h.order()),
            name,
            normal: Some(self.lattice.is_normal(i)),
            note: None,
        }
    }

    pub fn display_name(&self) -> &str {
        self.name.as_deref().unwrap_or("?")
    }
}

/// Shared per-group data, safe for concurrent readers; computed entries are
/// inserted under a write lock and the first insert wins.
#[derive(Default)]
pub struct Workspace {
    store: RwLock<HashMap<String, Arc<GroupData>>>,
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    fn key(entry: &CatalogEntry) -> String {
        format!("{}#{}", entry.label(), group_hash(&entry.group))
    }

    pub fn data(&self, entry: &CatalogEntry) -> Result<Arc<GroupData>> {
        let key = Self::key(entry);
        if let Some(d) = self.store.read().unwrap().get(&key) {
            return Ok(Arc::clone(d));
        }
        let d = Arc::new(GroupData::compute(entry.label(), &entry.group)?);
        let mut store = self.store.write().unwrap();
        Ok(Arc::clone(store.entry(key).or_insert(d)))
    }

    /// Computes data for every entry in parallel. Returns the first error in
    /// scope order.
    pub fn prepare(&self, scope: &[CatalogEntry]) -> Result<()> {
        let results: Vec<Result<()>> = scope.par_iter().map(|e| self.data(e).map(|_| ())).collect();
        results.into_iter().collect()
    }
}

/// Runs claims over a fixed scope, reusing lattices across claims.
pub struct Verifier {
    scope: Vec<CatalogEntry>,
    workspace: Workspace,
}

impl Verifier {
    pub fn new(scope: Vec<CatalogEntry>) -> Result<Self> {
        if scope.is_empty() {
            return Err(Error::EmptyScope);
        }
        Ok(Verifier {
            scope,
            workspace: Workspace::new(),
        })
    }

    pub fn scope(&self) -> &[CatalogEntry] {
        &self.scope
    }

    pub fn scope_labels(&self) -> Vec<String> {
        self.scope.iter().map(|e| e.label().to_string()).collect()
    }

    /// Data for every scope group, in scope order.
    pub fn all_data(&self) -> Result<Vec<Arc<GroupData>>> {
        self.workspace.prepare(&self.scope)?;
        self.scope.iter().map(|e| self.workspace.data(e)).collect()
    }

    pub fn check(&self, claim: ClaimId) -> Result<ClaimReport> {
        claims::run(self, claim)
    }

    /// Runs several claims concurrently; reports come back in input order.
    pub fn check_all(&self, claims: &[ClaimId]) -> Result<Vec<ClaimReport>> {
        self.workspace.prepare(&self.scope)?;
        let reports: Vec<Result<ClaimReport>> = claims.par_iter().map(|&c| self.check(c)).collect();
        reports.into_iter().collect()
    }
}

pub fn check_claim(claim: ClaimId, scope: &[CatalogEntry]) -> Result<ClaimReport> {
    Verifier::new(scope.to_vec())?.check(claim)
}
