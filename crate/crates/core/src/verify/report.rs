use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;

use super::ClaimId;
use crate::predicates::GroupFamily;

pub const REPORT_SCHEMA: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The claim's hypothesis does not apply to this instance.
    Skip,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

/// A concrete subgroup (or an explained absence) backing an instance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    pub fn note(text: impl Into<String>) -> Self {
        Witness {
            note: Some(text.into()),
            ..Default::default()
        }
    }

    fn summary(&self) -> String {
        let mut parts = Vec::new();
        if let Some(i) = self.subgroup {
            parts.push(format!("subgroup #{i}"));
        }
        if let Some(o) = self.order {
            parts.push(format!("order {o}"));
        }
        if let Some(n) = &self.name {
            parts.push(n.clone());
        }
        match self.normal {
            Some(true) => parts.push("normal".into()),
            Some(false) => parts.push("non-normal".into()),
            None => {}
        }
        if let Some(n) = &self.note {
            parts.push(n.clone());
        }
        parts.join(", ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<GroupFamily>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<String>,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Instance {
    pub fn new(group: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        Instance {
            group: group.into(),
            family: None,
            check: None,
            status,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn with_family(mut self, family: GroupFamily) -> Self {
        self.family = Some(family);
        self
    }

    pub fn with_check(mut self, check: impl Into<String>) -> Self {
        self.check = Some(check.into());
        self
    }

    pub fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn pass_if(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Result of one claim over one scope. `elapsed` is kept out of the
/// serialized body so reports are reproducible byte for byte.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub schema: &'static str,
    pub claim: ClaimId,
    pub description: &'static str,
    pub scope: Vec<String>,
    pub verdict: Verdict,
    pub instances: Vec<Instance>,
    pub meta: BTreeMap<String, Value>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ClaimReport {
    pub(crate) fn assemble(
        claim: ClaimId,
        scope: Vec<String>,
        instances: Vec<Instance>,
        mut meta: BTreeMap<String, Value>,
        started: Instant,
    ) -> Self {
        let checked = instances.iter().filter(|i| i.status != Status::Skip).count();
        let failed = instances.iter().filter(|i| i.status == Status::Fail).count();
        meta.insert("checked".into(), checked.into());
        meta.insert("failed".into(), failed.into());
        meta.insert("vacuous".into(), (checked == 0).into());
        ClaimReport {
            schema: REPORT_SCHEMA,
            claim,
            description: claim.description(),
            scope,
            verdict: if failed == 0 { Verdict::Pass } else { Verdict::Fail },
            instances,
            meta,
            elapsed: started.elapsed(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn checked(&self) -> usize {
        self.instances.iter().filter(|i| i.status != Status::Skip).count()
    }

    pub fn is_vacuous(&self) -> bool {
        self.checked() == 0
    }

    /// `pass`, `fail`, or `pass (vacuous, n=0)`.
    pub fn verdict_text(&self) -> String {
        match self.verdict {
            Verdict::Fail => "fail".into(),
            Verdict::Pass if self.is_vacuous() => "pass (vacuous, n=0)".into(),
            Verdict::Pass => "pass".into(),
        }
    }

    pub fn instances_for<'a>(&'a self, group: &'a str) -> impl Iterator<Item = &'a Instance> + 'a {
        self.instances.iter().filter(move |i| i.group == group)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}: {}", self.claim, self.verdict_text(), self.description);
        let _ = writeln!(
            out,
            "  scope: {} groups; checked {}, failed {}",
            self.scope.len(),
            self.checked(),
            self.instances.iter().filter(|i| i.status == Status::Fail).count()
        );
        for i in &self.instances {
            let mut head = i.group.clone();
            if let Some(f) = i.family {
                let _ = write!(head, " [{f}]");
            }
            if let Some(c) = &i.check {
                let _ = write!(head, " {c}");
            }
            let _ = write!(out, "  {}: {} - {}", head, i.status.as_str(), i.detail);
            if let Some(w) = &i.witness {
                let _ = write!(out, "; witness: {}", w.summary());
            }
            out.push('\n');
        }
        for (k, v) in &self.meta {
            let _ = writeln!(out, "  {k}: {v}");
        }
        out
    }
}
