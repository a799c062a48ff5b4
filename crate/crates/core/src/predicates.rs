//! Group families and the Hamiltonian-type predicates over a subgroup lattice.
//!
//! Every quantifier ranges over the whole lattice, including the trivial
//! subgroup and the group itself; "proper" excludes only the group itself.
//! Witnesses are always the smallest violating index in canonical lattice
//! order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::structure::{is_nilpotent, is_soluble, SeriesKind, series_of, SubgroupHandle, SubgroupLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupFamily {
    Abelian,
    Nilpotent,
}

impl GroupFamily {
    pub const ALL: [GroupFamily; 2] = [GroupFamily::Abelian, GroupFamily::Nilpotent];

    pub fn name(self) -> &'static str {
        match self {
            GroupFamily::Abelian => "abelian",
            GroupFamily::Nilpotent => "nilpotent",
        }
    }

    pub fn contains(self, h: &SubgroupHandle) -> bool {
        match self {
            GroupFamily::Abelian => h.is_abelian(),
            GroupFamily::Nilpotent => is_nilpotent(h),
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "abelian" => Ok(GroupFamily::Abelian),
            "nilpotent" => Ok(GroupFamily::Nilpotent),
            other => Err(Error::Syntax(format!(
                "unknown family '{other}' (expected abelian or nilpotent)"
            ))),
        }
    }
}

/// Per-subgroup family membership and minimality over one lattice.
#[derive(Debug, Clone)]
pub struct FamilyProfile {
    family: GroupFamily,
    in_family: Vec<bool>,
    minimal_non: Vec<bool>,
}

impl FamilyProfile {
    pub fn new(lattice: &SubgroupLattice, family: GroupFamily) -> Self {
        let in_family: Vec<bool> = lattice.subgroups().iter().map(|h| family.contains(h)).collect();
        let minimal_non = (0..lattice.len())
            .map(|j| !in_family[j] && lattice.proper_subgroups_of(j).all(|i| in_family[i]))
            .collect();
        FamilyProfile {
            family,
            in_family,
            minimal_non,
        }
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn in_family(&self, i: usize) -> bool {
        self.in_family[i]
    }

    pub fn minimal_non(&self, i: usize) -> bool {
        self.minimal_non[i]
    }

    /// In the family or minimal non-family.
    pub fn tame(&self, i: usize) -> bool {
        self.in_family[i] || self.minimal_non[i]
    }
}

/// Outcome of one predicate: its value and, when false, the first
/// subgroup index that makes it false.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub value: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<usize>,
}

impl Flag {
    fn holds() -> Self {
        Flag {
            value: true,
            witness: None,
        }
    }

    fn fails(witness: usize) -> Self {
        Flag {
            value: false,
            witness: Some(witness),
        }
    }

    fn from_violation(violation: Option<usize>) -> Self {
        violation.map_or(Flag::holds(), Flag::fails)
    }
}

/// Whether the parent is minimal non-𝔛. Witness: the group itself when it
/// lies in the family, else the first proper subgroup outside it.
pub fn minimal_non_flag(lattice: &SubgroupLattice, profile: &FamilyProfile) -> Flag {
    let top = lattice.top();
    if profile.in_family(top) {
        return Flag::fails(top);
    }
    Flag::from_violation(lattice.proper_subgroups_of(top).find(|&i| !profile.in_family(i)))
}

/// Whether the parent is biminimal non-𝔛. Witness: the group itself when it
/// is in the family or minimal non-𝔛, else the first proper subgroup that is
/// neither.
pub fn biminimal_non_flag(lattice: &SubgroupLattice, profile: &FamilyProfile) -> Flag {
    let top = lattice.top();
    if profile.tame(top) {
        return Flag::fails(top);
    }
    Flag::from_violation(lattice.proper_subgroups_of(top).find(|&i| !profile.tame(i)))
}

/// Every subgroup outside the family is normal.
pub fn meta_hamiltonian_flag(lattice: &SubgroupLattice, profile: &FamilyProfile) -> Flag {
    Flag::from_violation((0..lattice.len()).find(|&i| !profile.in_family(i) && !lattice.is_normal(i)))
}

/// The group is outside the family and every non-normal subgroup is in the
/// family or minimal non-𝔛. Witness: the group itself when the leading
/// clause fails.
pub fn para_hamiltonian_flag(lattice: &SubgroupLattice, profile: &FamilyProfile) -> Flag {
    let top = lattice.top();
    if profile.in_family(top) {
        return Flag::fails(top);
    }
    Flag::from_violation((0..lattice.len()).find(|&i| !lattice.is_normal(i) && !profile.tame(i)))
}

pub fn is_minimal_non(lattice: &SubgroupLattice, family: GroupFamily) -> bool {
    minimal_non_flag(lattice, &FamilyProfile::new(lattice, family)).value
}

pub fn is_biminimal_non(lattice: &SubgroupLattice, family: GroupFamily) -> bool {
    biminimal_non_flag(lattice, &FamilyProfile::new(lattice, family)).value
}

pub fn is_meta_hamiltonian(lattice: &SubgroupLattice, family: GroupFamily) -> bool {
    meta_hamiltonian_flag(lattice, &FamilyProfile::new(lattice, family)).value
}

pub fn is_para_hamiltonian(lattice: &SubgroupLattice, family: GroupFamily) -> bool {
    para_hamiltonian_flag(lattice, &FamilyProfile::new(lattice, family)).value
}

/// Intersection of all subgroups outside the family; the whole group when
/// there are none.
pub fn non_family_intersection_with(lattice: &SubgroupLattice, profile: &FamilyProfile) -> SubgroupHandle {
    let whole = lattice.whole();
    let mut members = whole.members().clone();
    for i in (0..lattice.len()).filter(|&i| !profile.in_family(i)) {
        members.intersect_with(lattice.get(i).members());
    }
    whole.parent().subgroup_from_members(members)
}

pub fn non_family_intersection(lattice: &SubgroupLattice, family: GroupFamily) -> SubgroupHandle {
    non_family_intersection_with(lattice, &FamilyProfile::new(lattice, family))
}

/// Family-independent structural flags of the parent group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BasicFlags {
    pub abelian: bool,
    pub nilpotent: bool,
    pub soluble: bool,
    pub perfect: bool,
    pub simple: bool,
    pub dedekind: bool,
}

pub fn basic_flags(lattice: &SubgroupLattice) -> BasicFlags {
    let whole = lattice.whole();
    let derived = series_of(whole, SeriesKind::Derived);
    let normal = lattice.normal_subgroups().len();
    BasicFlags {
        abelian: whole.is_abelian(),
        nilpotent: is_nilpotent(whole),
        soluble: is_soluble(whole),
        perfect: derived.term(2).order() == whole.order(),
        simple: whole.order() > 1 && normal == 2,
        dedekind: normal == lattice.len(),
    }
}

/// All predicates for one group and one family, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateResult {
    pub subject: String,
    pub family: GroupFamily,
    pub in_family: Flag,
    pub soluble: bool,
    pub perfect: bool,
    pub simple: bool,
    pub dedekind: Flag,
    pub minimal_non: Flag,
    pub biminimal_non: Flag,
    pub meta_hamiltonian: Flag,
    pub para_hamiltonian: Flag,
}

pub fn evaluate(subject: &str, lattice: &SubgroupLattice, profile: &FamilyProfile) -> PredicateResult {
    let basic = basic_flags(lattice);
    let top = lattice.top();
    PredicateResult {
        subject: subject.to_string(),
        family: profile.family(),
        in_family: if profile.in_family(top) {
            Flag::holds()
        } else {
            Flag::fails(top)
        },
        soluble: basic.soluble,
        perfect: basic.perfect,
        simple: basic.simple,
        dedekind: Flag::from_violation((0..lattice.len()).find(|&i| !lattice.is_normal(i))),
        minimal_non: minimal_non_flag(lattice, profile),
        biminimal_non: biminimal_non_flag(lattice, profile),
        meta_hamiltonian: meta_hamiltonian_flag(lattice, profile),
        para_hamiltonian: para_hamiltonian_flag(lattice, profile),
    }
}
