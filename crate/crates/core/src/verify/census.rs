use serde::Serialize;

use super::{GroupData, Verifier, Workspace};
use crate::catalog::CatalogEntry;
use crate::error::Result;
use crate::predicates::{evaluate, BasicFlags, GroupFamily};
use crate::structure::prime_divisors;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyFlags {
    pub family: GroupFamily,
    pub in_family: bool,
    pub minimal_non: bool,
    pub biminimal_non: bool,
    pub meta_hamiltonian: bool,
    pub para_hamiltonian: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub label: String,
    pub order: u128,
    pub primes: Vec<u64>,
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flags: Option<BasicFlags>,
    pub families: Vec<FamilyFlags>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl CensusRow {
    pub fn family(&self, family: GroupFamily) -> Option<&FamilyFlags> {
        self.families.iter().find(|f| f.family == family)
    }

    fn from_data(d: &GroupData, families: &[GroupFamily]) -> Self {
        CensusRow {
            label: d.label.clone(),
            order: d.order() as u128,
            primes: d.primes(),
            name: d.name.clone(),
            flags: Some(d.basic),
            families: families
                .iter()
                .map(|&f| {
                    let r = evaluate(&d.label, &d.lattice, d.profile(f));
                    FamilyFlags {
                        family: f,
                        in_family: r.in_family.value,
                        minimal_non: r.minimal_non.value,
                        biminimal_non: r.biminimal_non.value,
                        meta_hamiltonian: r.meta_hamiltonian.value,
                        para_hamiltonian: r.para_hamiltonian.value,
                    }
                })
                .collect(),
            skipped: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusTable {
    pub rows: Vec<CensusRow>,
}

impl CensusTable {
    pub fn row(&self, label: &str) -> Option<&CensusRow> {
        self.rows.iter().find(|r| r.label == label)
    }
}

fn build_rows(workspace: &Workspace, scope: &[CatalogEntry], families: &[GroupFamily]) -> Result<CensusTable> {
    let mut families = families.to_vec();
    families.sort();
    families.dedup();
    // cap failures become skipped rows; warm the store first in parallel
    let _ = workspace.prepare(scope);
    let mut rows = Vec::with_capacity(scope.len());
    for entry in scope {
        match workspace.data(entry) {
            Ok(d) => rows.push(CensusRow::from_data(&d, &families)),
            Err(e) if e.is_cap() => rows.push(CensusRow {
                label: entry.label().to_string(),
                order: entry.order(),
                primes: prime_divisors(entry.order() as u64),
                name: None,
                flags: None,
                families: Vec::new(),
                skipped: Some(e.to_string()),
            }),
            Err(e) => return Err(e),
        }
    }
    rows.sort_by(|a, b| (a.order, &a.label).cmp(&(b.order, &b.label)));
    Ok(CensusTable { rows })
}

/// One row per scope group, sorted by order and label. Groups over a cap
/// get a skipped row instead of an error.
pub fn run_census(scope: &[CatalogEntry], families: &[GroupFamily]) -> Result<CensusTable> {
    build_rows(&Workspace::new(), scope, families)
}

impl Verifier {
    pub fn census(&self, families: &[GroupFamily]) -> Result<CensusTable> {
        build_rows(&self.workspace, &self.scope, families)
    }
}

/// Cross-predicate implications that every census row must satisfy.
/// Returns one message per violation.
pub fn census_violations(table: &CensusTable) -> Vec<String> {
    let mut out = Vec::new();
    let mut check = |ok: bool, row: &CensusRow, what: &str| {
        if !ok {
            out.push(format!("{}: {what}", row.label));
        }
    };
    for row in &table.rows {
        let Some(flags) = row.flags else { continue };
        check(!flags.abelian || flags.nilpotent, row, "abelian but not nilpotent");
        check(!flags.nilpotent || flags.soluble, row, "nilpotent but not soluble");
        for f in &row.families {
            check(!f.minimal_non || !f.in_family, row, "minimal non-X but in X");
            check(
                !f.biminimal_non || (!f.minimal_non && !f.in_family),
                row,
                "biminimal non-X but in X or minimal non-X",
            );
            check(!flags.dedekind || f.meta_hamiltonian, row, "Dedekind but not meta-X-Hamiltonian");
            check(!f.para_hamiltonian || !f.in_family, row, "para-X-Hamiltonian but in X");
        }
        if let (Some(a), Some(n)) = (row.family(GroupFamily::Abelian), row.family(GroupFamily::Nilpotent)) {
            check(!a.in_family || n.in_family, row, "abelian family member outside nilpotent family");
        }
        let mut expected = prime_divisors(row.order as u64);
        expected.sort_unstable();
        check(row.primes == expected, row, "prime divisors mismatch");
    }
    for pair in table.rows.windows(2) {
        if (pair[0].order, &pair[0].label) > (pair[1].order, &pair[1].label) {
            out.push(format!("rows out of order at {}", pair[1].label));
        }
    }
    out
}
