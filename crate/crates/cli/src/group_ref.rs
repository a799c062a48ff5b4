//! Parsing of group references given on the command line.

use std::path::PathBuf;

use hamiltonia::catalog::{GroupRecipe, MatrixKind, RecipeKind};

/// A group named on the command line: either a builtin recipe such as
/// `psl:2:7` or a path to a `.grp` file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRef {
    pub source: String,
    pub recipe: GroupRecipe,
}

fn is_file(s: &str) -> bool {
    s.contains('/') || s.contains('\\') || s.ends_with(".grp")
}

fn number(s: &str, what: &str) -> Result<u32, String> {
    s.trim()
        .parse::<u32>()
        .map_err(|_| format!("expected a number for {what}, found '{s}'"))
}

/// `p^m`, or a bare prime meaning exponent 1.
fn prime_power(s: &str) -> Result<(u32, u32), String> {
    match s.split_once('^') {
        Some((p, m)) => Ok((number(p, "prime")?, number(m, "exponent")?)),
        None => Ok((number(s, "prime")?, 1)),
    }
}

fn matrix(kind: MatrixKind, args: &[&str], src: &str) -> Result<GroupRecipe, String> {
    match args {
        [dim, q] if dim.trim() == "2" => Ok(GroupRecipe::matrix(kind, number(q, "field size")?)),
        _ => Err(format!("'{src}': expected {}:2:q", kind.to_string().to_lowercase())),
    }
}

pub fn parse_recipe(s: &str) -> Result<GroupRecipe, String> {
    let s = s.trim();
    if is_file(s) {
        return Ok(GroupRecipe::new(RecipeKind::File(PathBuf::from(s))));
    }
    let (head, rest) = s
        .split_once(':')
        .ok_or_else(|| format!("'{s}' is neither a builtin spec nor a .grp path"))?;
    if head == "prod" {
        let (a, b) = rest
            .split_once(',')
            .ok_or_else(|| format!("'{s}': expected prod:<ref>,<ref>"))?;
        return Ok(GroupRecipe::product(parse_recipe(a)?, parse_recipe(b)?));
    }
    let args: Vec<&str> = rest.split(':').collect();
    let one = || -> Result<u32, String> {
        match args.as_slice() {
            [n] => number(n, head),
            _ => Err(format!("'{s}': expected {head}:n")),
        }
    };
    match head {
        "cyclic" => Ok(GroupRecipe::cyclic(one()?)),
        "dihedral" => {
            let n = one()?;
            if n < 4 || n % 2 == 1 {
                return Err(format!("'{s}': dihedral order must be even and at least 4"));
            }
            Ok(GroupRecipe::dihedral(n))
        }
        "dicyclic" => Ok(GroupRecipe::dicyclic(one()?)),
        "sym" => Ok(GroupRecipe::symmetric(one()?)),
        "alt" => Ok(GroupRecipe::alternating(one()?)),
        "sl" => matrix(MatrixKind::SL, &args, s),
        "gl" => matrix(MatrixKind::GL, &args, s),
        "psl" => matrix(MatrixKind::PSL, &args, s),
        "pgl" => matrix(MatrixKind::PGL, &args, s),
        "semidirect" => match args.as_slice() {
            [a, b, k] => {
                let (p, m) = prime_power(a)?;
                let (q, n) = prime_power(b)?;
                Ok(GroupRecipe::semidirect(p, m, q, n, number(k, "action order")?))
            }
            _ => Err(format!("'{s}': expected semidirect:p^m:q^n:k")),
        },
        other => Err(format!("unknown group kind '{other}'")),
    }
}

impl std::str::FromStr for GroupRef {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(GroupRef {
            source: s.to_string(),
            recipe: parse_recipe(s)?,
        })
    }
}
