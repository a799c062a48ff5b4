//! The line-oriented `.grp` group file format.
//!
//! ```text
//! # comment
//! name S3
//! degree 3
//! gen (1 2)
//! gen (1 2 3)
//! ```

use std::fmt::Write as _;
use std::path::Path;

use super::{CatalogEntry, GroupRecipe, Provenance, RecipeKind};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses `.grp` text into an optional name and a group.
pub fn parse_group_text(text: &str) -> Result<(Option<String>, PermGroup)> {
    let mut name = None;
    let mut degree: Option<(usize, usize)> = None;
    let mut gens: Vec<(usize, &str)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line
            .split_once(char::is_whitespace)
            .map(|(a, b)| (a, b.trim()))
            .unwrap_or((line, ""));
        match keyword {
            "name" => {
                if rest.is_empty() {
                    return Err(parse_error(line_no, "empty name"));
                }
                name = Some(rest.to_string());
            }
            "degree" => {
                if degree.is_some() {
                    return Err(parse_error(line_no, "duplicate degree line"));
                }
                let n: usize = rest
                    .parse()
                    .map_err(|_| parse_error(line_no, format!("bad degree {rest:?}")))?;
                if n == 0 {
                    return Err(parse_error(line_no, "degree must be positive"));
                }
                degree = Some((n, line_no));
            }
            "gen" => gens.push((line_no, rest)),
            other => return Err(parse_error(line_no, format!("unknown keyword {other:?}"))),
        }
    }
    let Some((degree, _)) = degree else {
        return Err(parse_error(0, "missing degree line"));
    };
    let mut perms = Vec::with_capacity(gens.len());
    for (line_no, text) in gens {
        let p = Permutation::parse(text, degree).map_err(|e| parse_error(line_no, e.to_string()))?;
        perms.push(p);
    }
    Ok((name, PermGroup::from_generators(degree, perms)?))
}

/// Loads a `.grp` file; the label defaults to the file stem.
pub fn load_group_file(path: impl AsRef<Path>) -> Result<CatalogEntry> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    let (name, group) = parse_group_text(&text)?;
    let mut recipe = GroupRecipe::new(RecipeKind::File(path.to_path_buf()));
    if let Some(name) = name {
        recipe.label = name;
    }
    Ok(CatalogEntry {
        recipe,
        group,
        provenance: Provenance::File(path.to_path_buf()),
    })
}

/// Canonical `.grp` text for a group.
pub fn write_group_text(name: Option<&str>, group: &PermGroup) -> String {
    let mut out = String::new();
    if let Some(name) = name {
        writeln!(out, "name {name}").unwrap();
    }
    writeln!(out, "degree {}", group.degree()).unwrap();
    for g in group.generators() {
        writeln!(out, "gen {g}").unwrap();
    }
    out
}
