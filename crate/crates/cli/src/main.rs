mod group_ref;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hamiltonia::catalog::{build, default_catalog, CatalogEntry};
use hamiltonia::predicates::{Flag, GroupFamily};
use hamiltonia::structure::cache::{load_or_build, CacheStatus};
use hamiltonia::structure::{center, series, SeriesKind, SubgroupLattice, TabulatedGroup};
use hamiltonia::verify::{census_violations, run_census, ClaimId, GroupData, Verifier, Witness, REPORT_SCHEMA};
use hamiltonia::Error;
use serde_json::{json, Value};

use group_ref::GroupRef;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "hamiltonia", version, about = "Finite permutation groups and Hamiltonian-type group families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Abelian,
    Nilpotent,
}

impl From<FamilyArg> for GroupFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Abelian => GroupFamily::Abelian,
            FamilyArg::Nilpotent => GroupFamily::Nilpotent,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CensusFamilies {
    All,
    Abelian,
    Nilpotent,
}

#[derive(Subcommand)]
enum Command {
    /// Order, prime divisors, recognized name, and every predicate with witnesses.
    Analyze {
        /// Builtin recipe (cyclic:n, dihedral:n, dicyclic:n, sym:n, alt:n, sl:2:p,
        /// psl:2:q, pgl:2:q, semidirect:p^m:q^n:k, prod:<ref>,<ref>) or a .grp path.
        group: GroupRef,
        #[arg(long, value_enum, default_value_t = FamilyArg::Nilpotent)]
        family: FamilyArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run claim checks and print their reports.
    Verify {
        /// `all` or a comma-separated list of claim ids.
        #[arg(long, default_value = "all")]
        claims: String,
        /// `default` for the builtin catalog, or group references; repeatable.
        #[arg(long, default_value = "default")]
        scope: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Predicate flags for every scope group up to an order bound.
    Census {
        #[arg(long)]
        max_order: Option<u128>,
        /// Fail with exit code 3 when a scope group exceeds a cap.
        #[arg(long)]
        strict: bool,
        #[arg(long, default_value = "default")]
        scope: Vec<String>,
        #[arg(long, value_enum, default_value_t = CensusFamilies::All)]
        family: CensusFamilies,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Subgroup lattice summary, cached on disk.
    Lattice {
        group: GroupRef,
        /// Cache directory; defaults to $HAMILTONIA_CACHE_DIR, then the user cache dir.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        #[arg(long)]
        no_cache: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// A failed command: the exit code and a message for stderr.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_cap() { EXIT_CAP } else { EXIT_USAGE };
        Failure(code, e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { group, family, format } => analyze(&group, family.into(), format),
        Command::Verify { claims, scope, format } => verify(&claims, &scope, format),
        Command::Census {
            max_order,
            strict,
            scope,
            family,
            format,
        } => census(max_order, strict, &scope, family, format),
        Command::Lattice {
            group,
            cache_dir,
            no_cache,
            format,
        } => lattice(&group, cache_dir, no_cache, format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn resolve(group: &GroupRef) -> Result<CatalogEntry, Failure> {
    Ok(build(&group.recipe)?)
}

fn resolve_scope(items: &[String]) -> Result<Vec<CatalogEntry>, Failure> {
    let mut out = Vec::new();
    for item in items {
        if item == "default" {
            out.extend(default_catalog()?);
        } else {
            let r: GroupRef = item.parse().map_err(|e| Failure(EXIT_USAGE, e))?;
            out.push(resolve(&r)?);
        }
    }
    Ok(out)
}

fn witness_json(w: &Witness) -> Value {
    serde_json::to_value(w).expect("serializable")
}

fn analyze(group: &GroupRef, family: GroupFamily, format: Format) -> Outcome {
    let entry = resolve(group)?;
    let data = GroupData::compute(entry.label(), &entry.group)?;
    let result = data.predicates(family);
    let flags: [(&str, Flag); 6] = [
        ("in_family", result.in_family),
        ("dedekind", result.dedekind),
        ("minimal_non", result.minimal_non),
        ("biminimal_non", result.biminimal_non),
        ("meta_hamiltonian", result.meta_hamiltonian),
        ("para_hamiltonian", result.para_hamiltonian),
    ];
    let witnesses: BTreeMap<&str, Witness> = flags
        .iter()
        .filter_map(|(k, f)| f.witness.map(|i| (*k, data.witness(i))))
        .collect();
    let derived = series(&data.table, SeriesKind::Derived).orders();
    let lower = series(&data.table, SeriesKind::LowerCentral).orders();
    let z = center(&data.table).order();
    match format {
        Format::Json => print_json(&json!({
            "schema": REPORT_SCHEMA,
            "group": data.label,
            "source": group.source,
            "order": data.order(),
            "degree": entry.group.degree(),
            "primes": data.primes(),
            "name": data.name,
            "subgroups": data.lattice.len(),
            "conjugacy_classes": data.lattice.conjugacy_classes().len(),
            "normal_subgroups": data.lattice.normal_subgroups().len(),
            "frattini_order": data.frattini.order(),
            "center_order": z,
            "derived_series": derived,
            "lower_central_series": lower,
            "basic": data.basic,
            "family": family,
            "predicates": result,
            "witnesses": witnesses.iter().map(|(k, w)| (k.to_string(), witness_json(w))).collect::<BTreeMap<_, _>>(),
        })),
        Format::Text => {
            let mut out = String::new();
            let b = data.basic;
            let _ = writeln!(out, "group: {} (degree {})", data.label, entry.group.degree());
            let _ = writeln!(out, "order: {}", data.order());
            let primes: Vec<String> = data.primes().iter().map(|p| p.to_string()).collect();
            let _ = writeln!(out, "primes: {{{}}}", primes.join(","));
            let _ = writeln!(out, "name: {}", data.name.as_deref().unwrap_or("unrecognized"));
            let _ = writeln!(
                out,
                "subgroups: {} in {} conjugacy classes, {} normal",
                data.lattice.len(),
                data.lattice.conjugacy_classes().len(),
                data.lattice.normal_subgroups().len()
            );
            let _ = writeln!(out, "frattini order: {}", data.frattini.order());
            let _ = writeln!(out, "center order: {z}");
            let _ = writeln!(out, "derived series orders: {derived:?}");
            let _ = writeln!(out, "lower central series orders: {lower:?}");
            let _ = writeln!(
                out,
                "abelian: {}, nilpotent: {}, soluble: {}, perfect: {}, simple: {}, dedekind: {}",
                b.abelian, b.nilpotent, b.soluble, b.perfect, b.simple, b.dedekind
            );
            let _ = writeln!(out, "family: {family}");
            for (k, f) in flags {
                let _ = write!(out, "  {k}: {}", f.value);
                if let Some(w) = witnesses.get(k) {
                    let _ = write!(
                        out,
                        " (witness subgroup #{}, order {}, {}{})",
                        w.subgroup.unwrap_or_default(),
                        w.order.unwrap_or_default(),
                        w.name.as_deref().unwrap_or("unrecognized"),
                        if w.normal == Some(true) { ", normal" } else { ", non-normal" }
                    );
                }
                out.push('\n');
            }
            print!("{out}");
        }
    }
    Ok(0)
}

fn parse_claims(claims: &str) -> Result<Vec<ClaimId>, Failure> {
    if claims.trim().eq_ignore_ascii_case("all") {
        return Ok(ClaimId::ALL.to_vec());
    }
    let mut out = Vec::new();
    for id in claims.split(',').filter(|s| !s.trim().is_empty()) {
        let c: ClaimId = id.parse()?;
        if !out.contains(&c) {
            out.push(c);
        }
    }
    if out.is_empty() {
        return Err(Failure(EXIT_USAGE, "no claim ids given".into()));
    }
    Ok(out)
}

fn verify(claims: &str, scope: &[String], format: Format) -> Outcome {
    let claims = parse_claims(claims)?;
    let verifier = Verifier::new(resolve_scope(scope)?)?;
    let reports = verifier.check_all(&claims)?;
    let passed = reports.iter().all(|r| r.passed());
    match format {
        Format::Json => print_json(&json!({
            "schema": REPORT_SCHEMA,
            "verdict": if passed { "pass" } else { "fail" },
            "reports": reports,
        })),
        Format::Text => {
            let mut out = String::new();
            for r in &reports {
                out.push_str(&r.to_text());
                let _ = writeln!(out, "  elapsed: {:.3}s\n", r.elapsed.as_secs_f64());
            }
            let _ = writeln!(out, "summary:");
            for r in &reports {
                let _ = writeln!(out, "  {:<6} {}", r.claim.id(), r.verdict_text());
            }
            let _ = writeln!(out, "overall: {}", if passed { "pass" } else { "fail" });
            print!("{out}");
        }
    }
    Ok(if passed { 0 } else { EXIT_FAIL })
}

fn census(
    max_order: Option<u128>,
    strict: bool,
    scope: &[String],
    family: CensusFamilies,
    format: Format,
) -> Outcome {
    let scope: Vec<CatalogEntry> = resolve_scope(scope)?
        .into_iter()
        .filter(|e| max_order.is_none_or(|m| e.order() <= m))
        .collect();
    let families: Vec<GroupFamily> = match family {
        CensusFamilies::All => GroupFamily::ALL.to_vec(),
        CensusFamilies::Abelian => vec![GroupFamily::Abelian],
        CensusFamilies::Nilpotent => vec![GroupFamily::Nilpotent],
    };
    let table = run_census(&scope, &families)?;
    if strict {
        if let Some(row) = table.rows.iter().find(|r| r.skipped.is_some()) {
            return Err(Failure(
                EXIT_CAP,
                format!("{}: {}", row.label, row.skipped.as_deref().unwrap_or_default()),
            ));
        }
    }
    let violations = census_violations(&table);
    for v in &violations {
        eprintln!("census violation: {v}");
    }
    match format {
        Format::Json => print_json(&json!({ "schema": REPORT_SCHEMA, "rows": table.rows })),
        Format::Text => {
            let mut out = String::new();
            let mut header = format!("{:<14} {:>5} {:<9} {:<12} ab nil sol prf smp ded", "label", "order", "primes", "name");
            for f in &families {
                let _ = write!(header, " | {f}: in min bimin meta para");
            }
            let _ = writeln!(out, "{header}");
            let yn = |b: bool| if b { "y" } else { "-" };
            for row in &table.rows {
                let primes: Vec<String> = row.primes.iter().map(|p| p.to_string()).collect();
                let mut line = format!(
                    "{:<14} {:>5} {:<9} {:<12}",
                    row.label,
                    row.order,
                    format!("{{{}}}", primes.join(",")),
                    row.name.as_deref().unwrap_or("?")
                );
                match (&row.flags, &row.skipped) {
                    (Some(b), _) => {
                        let _ = write!(
                            line,
                            " {:<2} {:<3} {:<3} {:<3} {:<3} {:<3}",
                            yn(b.abelian),
                            yn(b.nilpotent),
                            yn(b.soluble),
                            yn(b.perfect),
                            yn(b.simple),
                            yn(b.dedekind)
                        );
                        for f in &row.families {
                            let _ = write!(
                                line,
                                " | {}: {:<2} {:<3} {:<5} {:<4} {:<4}",
                                f.family,
                                yn(f.in_family),
                                yn(f.minimal_non),
                                yn(f.biminimal_non),
                                yn(f.meta_hamiltonian),
                                yn(f.para_hamiltonian)
                            );
                        }
                    }
                    (None, reason) => {
                        let _ = write!(line, " skipped: {}", reason.as_deref().unwrap_or_default());
                    }
                }
                let _ = writeln!(out, "{}", line.trim_end());
            }
            let _ = writeln!(out, "{} rows", table.rows.len());
            print!("{out}");
        }
    }
    Ok(if violations.is_empty() { 0 } else { EXIT_FAIL })
}

fn default_cache_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os("HAMILTONIA_CACHE_DIR") {
        return Some(PathBuf::from(dir));
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(dir).join("hamiltonia"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("hamiltonia"))
}

fn lattice(group: &GroupRef, cache_dir: Option<PathBuf>, no_cache: bool, format: Format) -> Outcome {
    let entry = resolve(group)?;
    let cap = entry.group.caps().lattice_cap;
    if entry.order() > cap as u128 {
        return Err(Error::SizeCap {
            what: "lattice",
            order: entry.order(),
            cap,
        }
        .into());
    }
    let table = TabulatedGroup::new(entry.group.clone())?;
    let dir = if no_cache { None } else { cache_dir.or_else(default_cache_dir) };
    let lattice = match dir {
        Some(dir) => match load_or_build(&dir, &table) {
            Ok((l, status)) => {
                match status {
                    CacheStatus::Rebuilt(reason) => eprintln!("warning: ignored cached lattice ({reason}); rebuilt"),
                    CacheStatus::Unsaved(reason) => eprintln!("warning: lattice cache not written ({reason})"),
                    CacheStatus::Hit | CacheStatus::Built => {}
                }
                l
            }
            Err(e) => return Err(e.into()),
        },
        None => SubgroupLattice::build(&table)?,
    };
    let normal = lattice.normal_subgroups();
    let mut by_order: BTreeMap<usize, usize> = BTreeMap::new();
    for h in lattice.subgroups() {
        *by_order.entry(h.order()).or_default() += 1;
    }
    match format {
        Format::Json => print_json(&json!({
            "schema": REPORT_SCHEMA,
            "group": entry.label(),
            "order": entry.order(),
            "subgroups": lattice.len(),
            "conjugacy_classes": lattice.conjugacy_classes().len(),
            "normal_subgroups": normal
                .iter()
                .map(|&i| json!({ "index": i, "order": lattice.get(i).order() }))
                .collect::<Vec<_>>(),
            "subgroups_by_order": by_order.iter().map(|(k, v)| (k.to_string(), *v)).collect::<BTreeMap<_, _>>(),
        })),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "group: {} (order {})", entry.label(), entry.order());
            let _ = writeln!(out, "subgroups: {}", lattice.len());
            let _ = writeln!(out, "conjugacy classes: {}", lattice.conjugacy_classes().len());
            let _ = writeln!(out, "normal subgroups: {}", normal.len());
            for &i in &normal {
                let _ = writeln!(out, "  #{i} order {}", lattice.get(i).order());
            }
            let counts: Vec<String> = by_order.iter().map(|(k, v)| format!("{k}:{v}")).collect();
            let _ = writeln!(out, "subgroups by order: {}", counts.join(" "));
            print!("{out}");
        }
    }
    Ok(0)
}
