//! Command-line front end: input loading, subcommands, and reports.

mod format;
mod report;

pub use format::{parse, render};
pub use report::{OutputFormat, Report, Section};

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use crate::arrangement::{
    display_point, enumerate_chambers, enumerate_chambers_with, enumerate_faces, Arrangement,
    ChamberStrategyRegistry, SignVector,
};
use crate::catalog;
use crate::certificate::{CertificateRegistry, CertificateReport};
use crate::delres::{build_p_sequence, normalize_for_restriction};
use crate::error::{Error, Result};
use crate::exactla::hnf;
use crate::kring::{ideal_generators, KRing, RingElement};
use crate::ormatroid::{minimal_infeasible_pairs, MatroidData};
use crate::ratk::k_dimensions;

#[derive(Debug, Parser)]
#[command(name = "arrkt", version, about = "Exact K-theory rings of real hyperplane arrangements")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: OutputFormat,
    /// Chamber enumeration strategy for `chambers`.
    #[arg(long, default_value = "incremental", global = true)]
    pub chamber_strategy: String,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Source {
    /// Arrangement file.
    pub path: Option<PathBuf>,
    /// Built-in example instead of a file.
    #[arg(long, conflicts_with = "path")]
    pub example: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chambers with witness points.
    Chambers(Source),
    /// Faces of a simple arrangement.
    Faces(Source),
    /// Circuits and minimal infeasible sign pairs.
    Circuits(Source),
    /// Broken circuits and nbc-sets.
    Nbc(Source),
    /// Generators of the relation ideal.
    Relations(Source),
    /// The nbc basis and its chamber images.
    Basis(Source),
    /// Product of two elements given by basis coordinates.
    Mult {
        #[command(flatten)]
        source: Source,
        /// Comma-separated coordinates, e.g. 0,0,1.
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// Products of all pairs of basis elements.
    Table(Source),
    /// The restriction to the last hyperplane and the map on bases.
    RestrictMap(Source),
    /// Relations vanish, basis images independent, products integral.
    CheckPl(Source),
    /// Image of the basis equals the face-condition lattice.
    CheckBa(Source),
    /// Exactness of both deletion-restriction sequences.
    CheckDelres {
        #[command(flatten)]
        source: Source,
        /// Reorient so the last hyperplane crosses the all-minus region first.
        #[arg(long)]
        normalize: bool,
    },
    /// Chamber-level decone identity for central arrangements.
    CheckDecone {
        #[command(flatten)]
        source: Source,
        /// 1-based index of the hyperplane sent to infinity.
        #[arg(long, default_value_t = 1)]
        base: usize,
    },
    /// Betti numbers and rational K, KO dimensions.
    Dims(Source),
    /// Flip the coorientation of one hyperplane.
    Reorient {
        #[command(flatten)]
        source: Source,
        /// 1-based hyperplane index.
        #[arg(long)]
        index: usize,
    },
    /// Reorient so that a chamber becomes the all-minus chamber.
    Normalize {
        #[command(flatten)]
        source: Source,
        /// Chamber index as listed by `chambers`, or its sign vector.
        #[arg(long)]
        chamber: String,
    },
}

/// What a process invocation prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (program name first) and runs the subcommand. Exit code 0
/// when every certificate passed, 1 when one failed, 2 on errors.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code: 2 }
            };
        }
    };
    match run(&cli) {
        Ok(report) => Outcome {
            stdout: report.render(cli.format),
            stderr: String::new(),
            code: if report.passed { 0 } else { 1 },
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: 2,
        },
    }
}

pub fn load(source: &Source) -> Result<Arrangement> {
    match (&source.example, &source.path) {
        (Some(name), _) => catalog::by_name(name),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
                line: 0,
                column: 0,
                message: format!("cannot read {}: {e}", path.display()),
            })?;
            parse(&text)
        }
        (None, None) => Err(Error::PreconditionFailed(
            "give an arrangement file or --example NAME".into(),
        )),
    }
}

fn source_of(command: &Command) -> &Source {
    match command {
        Command::Chambers(s)
        | Command::Faces(s)
        | Command::Circuits(s)
        | Command::Nbc(s)
        | Command::Relations(s)
        | Command::Basis(s)
        | Command::Table(s)
        | Command::RestrictMap(s)
        | Command::CheckPl(s)
        | Command::CheckBa(s)
        | Command::Dims(s) => s,
        Command::Mult { source, .. }
        | Command::CheckDelres { source, .. }
        | Command::CheckDecone { source, .. }
        | Command::Reorient { source, .. }
        | Command::Normalize { source, .. } => source,
    }
}

fn arrangement_section(name: &str, a: &Arrangement) -> Section {
    let mut section = Section::new(name);
    section.add("dim", a.dim()).add("hyperplanes", a.len());
    for (i, line) in render(a).lines().skip(1).enumerate() {
        section.add(format!("H{}", i + 1), line);
    }
    section
}

fn parse_coords(text: &str, len: usize) -> Result<RingElement> {
    let coords = text
        .split(',')
        .map(|t| {
            t.trim().parse::<BigInt>().map_err(|_| Error::Parse {
                line: 1,
                column: 1,
                message: format!("'{t}' is not an integer coordinate"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != len {
        return Err(Error::DimensionMismatch {
            expected: len,
            found: coords.len(),
        });
    }
    Ok(RingElement::new(coords))
}

fn certify(report: &mut Report, name: &str, a: &Arrangement) -> Result<CertificateReport> {
    let registry = CertificateRegistry::standard();
    let certificate = registry.get(name).ok_or_else(|| Error::Unknown {
        kind: "certificate",
        name: name.to_string(),
    })?;
    let result = certificate.certify(a)?;
    report.certificate(&result);
    Ok(result)
}

pub fn run(cli: &Cli) -> Result<Report> {
    let a = load(source_of(&cli.command))?;
    let mut report = Report::default();
    for (i, j) in a.repeated_hyperplanes() {
        report
            .warnings
            .push(format!("H{} and H{} define the same hyperplane", i + 1, j + 1));
    }
    match &cli.command {
        Command::Chambers(_) => {
            let registry = ChamberStrategyRegistry::standard();
            let strategy = registry.get(&cli.chamber_strategy).ok_or_else(|| Error::Unknown {
                kind: "chamber strategy",
                name: cli.chamber_strategy.clone(),
            })?;
            let chambers = enumerate_chambers_with(&a, strategy);
            let mut section = Section::new("chambers");
            section.add("strategy", strategy.name()).add("count", chambers.len());
            for c in &chambers {
                section.add(
                    format!("C{}", c.index),
                    format!("{} at {}", c.sign, display_point(&c.witness)),
                );
            }
            report.section(section);
        }
        Command::Faces(_) => {
            let faces = enumerate_faces(&a)?;
            let mut section = Section::new("faces");
            section.add("count", faces.len());
            for (k, f) in faces.iter().enumerate() {
                let cofaces: Vec<String> = f.cofaces.iter().map(|c| format!("C{c}")).collect();
                section.add(
                    format!("F{k}"),
                    format!("{} codim {} cofaces {}", f.sign, f.codim, cofaces.join(" ")),
                );
            }
            report.section(section);
        }
        Command::Circuits(_) => {
            let matroid = MatroidData::compute(&a)?;
            let mut section = Section::new("circuits");
            section.add("count", matroid.circuits.len());
            for (k, c) in matroid.circuits.iter().enumerate() {
                section.add(format!("c{}", k + 1), c);
            }
            report.section(section);
            let pairs = minimal_infeasible_pairs(&a);
            let mut section = Section::new("sign_pairs");
            section.add("count", pairs.len());
            for (k, p) in pairs.iter().enumerate() {
                section.add(format!("p{}", k + 1), p);
            }
            report.section(section);
        }
        Command::Nbc(_) => {
            let matroid = MatroidData::compute(&a)?;
            let mut section = Section::new("broken_circuits");
            section.add("count", matroid.broken_circuits.len());
            for (k, b) in matroid.broken_circuits.iter().enumerate() {
                section.add(format!("b{}", k + 1), crate::arrangement::display_set(b));
            }
            report.section(section);
            let mut section = Section::new("nbc");
            section
                .add("count", matroid.nbc_sets.len())
                .add("chambers", enumerate_chambers(&a).len());
            for (k, s) in matroid.nbc_sets.iter().enumerate() {
                section.add(format!("s{}", k + 1), crate::arrangement::display_set(s));
            }
            report.section(section);
        }
        Command::Relations(_) => {
            let generators = ideal_generators(&a)?;
            let mut section = Section::new("relations");
            section.add("count", generators.len());
            for family in 1..=5u8 {
                let count = generators.iter().filter(|g| g.family == family).count();
                section.add(format!("family{family}"), count);
            }
            for (k, g) in generators.iter().enumerate() {
                section.add(format!("g{}", k + 1), g);
            }
            report.section(section);
        }
        Command::Basis(_) => {
            let ring = KRing::new(&a)?;
            let mut section = Section::new("basis");
            section
                .add("rank", ring.rank())
                .add("chambers", ring.chamber_count());
            for (k, m) in ring.basis().elements().iter().enumerate() {
                section.add(format!("b{k}"), format!("{m} -> {}", ring.h_image(k)));
            }
            report.section(section);
        }
        Command::Mult { left, right, .. } => {
            let ring = KRing::new(&a)?;
            let u = parse_coords(left, ring.rank())?;
            let w = parse_coords(right, ring.rank())?;
            let product = ring.multiply(&u, &w)?;
            let coords: Vec<String> = product.coords.iter().map(ToString::to_string).collect();
            let mut section = Section::new("mult");
            section
                .add("left", u.render(ring.basis()))
                .add("right", w.render(ring.basis()))
                .add("product", product.render(ring.basis()))
                .add("coords", coords.join(","));
            report.section(section);
        }
        Command::Table(_) => {
            let ring = KRing::new(&a)?;
            let table = ring.structure_constants()?;
            let names = ring.basis().elements();
            let mut section = Section::new("table");
            section.add("rank", ring.rank());
            for j in 0..ring.rank() {
                for k in j..ring.rank() {
                    section.add(
                        format!("{}*{}", names[j], names[k]),
                        table[j][k].render(ring.basis()),
                    );
                }
            }
            report.section(section);
        }
        Command::RestrictMap(_) => {
            let maps = build_p_sequence(&a)?;
            report.section(arrangement_section("restriction", &maps.restriction.arrangement));
            let mut section = Section::new("index_map");
            for (i, entry) in maps.restriction.index_map.iter().enumerate() {
                let value = match entry {
                    Some(e) => format!(
                        "H''{}{}",
                        e.target + 1,
                        if e.agrees { "" } else { " (opposite coorientation)" }
                    ),
                    None => "none".to_string(),
                };
                section.add(format!("H{}", i + 1), value);
            }
            report.section(section);
            let mut section = Section::new("beta");
            for (m, row) in maps.ring.basis().elements().iter().zip(&maps.beta) {
                section.add(
                    m.to_string(),
                    RingElement::new(row.clone()).render(maps.restricted.basis()),
                );
            }
            report.section(section);
        }
        Command::CheckPl(_) => {
            certify(&mut report, "pl", &a)?;
        }
        Command::CheckBa(_) => {
            certify(&mut report, "pb", &a)?;
        }
        Command::CheckDelres { normalize, .. } => {
            certify(&mut report, "delres-p", &a)?;
            let target = if *normalize {
                let normalized = normalize_for_restriction(&a)?;
                report.section(arrangement_section("normalized", &normalized));
                normalized
            } else {
                a.clone()
            };
            match certify(&mut report, "delres-b", &target) {
                Ok(_) => {}
                Err(Error::NotSimple(why)) => {
                    let mut section = Section::new("delres-b");
                    section.add("status", format!("skipped (not simple: {why})"));
                    report.section(section);
                }
                Err(Error::PreconditionFailed(why)) => {
                    let mut section = Section::new("delres-b");
                    section
                        .add("status", format!("precondition failed: {why}"))
                        .add("hint", "rerun with --normalize");
                    report.section(section);
                    report.passed = false;
                }
                Err(e) => return Err(e),
            }
        }
        Command::CheckDecone { base, .. } => {
            let index = base.checked_sub(1).ok_or(Error::IndexOutOfRange {
                index: 0,
                len: a.len(),
            })?;
            if index == 0 {
                certify(&mut report, "decone", &a)?;
            } else {
                let result = crate::kring::certify_decone_identity(&a, index)?;
                report.certificate(&result);
            }
        }
        Command::Dims(_) => {
            let dims = k_dimensions(&a)?;
            let mut section = Section::new("betti");
            let b: Vec<String> = dims.profile.b.iter().map(ToString::to_string).collect();
            section
                .add("b", b.join(","))
                .add("chambers", dims.profile.chambers);
            report.section(section);
            let mut section = Section::new("dims");
            section
                .add("dimK", dims.dim_k)
                .add("dimKO", dims.dim_ko)
                .add("dimLineQ", dims.dim_line_q)
                .add("gap", dims.gap)
                .add("note", &dims.note);
            report.section(section);
            let mut section = Section::new("degrees");
            for row in &dims.degrees {
                section.add(
                    format!("k{}", row.degree),
                    format!(
                        "b={} K={} KO={}",
                        row.betti,
                        if row.in_k { "yes" } else { "no" },
                        if row.in_ko { "yes" } else { "no" }
                    ),
                );
            }
            report.section(section);
        }
        Command::Reorient { index, .. } => {
            let i = index.checked_sub(1).ok_or(Error::IndexOutOfRange {
                index: 0,
                len: a.len(),
            })?;
            let reoriented = a.reorient(i)?;
            report.section(arrangement_section("reoriented", &reoriented));
            let ring = KRing::new(&a)?;
            let target = KRing::new(&reoriented)?;
            let moved = ring
                .h_images()
                .iter()
                .map(|v| ring.transport_image(&target, i, v).map(|w| w.to_vector()))
                .collect::<Result<Vec<_>>>()?;
            let same = hnf(2 * target.chamber_count(), &moved) == *target.image_lattice();
            let mut section = Section::new("isomorphism");
            section.add(
                "lattice",
                if same { "image lattices correspond" } else { "image lattices differ" },
            );
            report.section(section);
            report.passed &= same;
        }
        Command::Normalize { chamber, .. } => {
            let chambers = enumerate_chambers(&a);
            let base = match chamber.trim_start_matches('C').parse::<usize>() {
                Ok(k) => chambers
                    .get(k)
                    .map(|c| c.sign.clone())
                    .ok_or(Error::IndexOutOfRange {
                        index: k,
                        len: chambers.len(),
                    })?,
                Err(_) => SignVector::parse(chamber).ok_or_else(|| Error::Parse {
                    line: 1,
                    column: 1,
                    message: format!("'{chamber}' is neither a chamber index nor a sign vector"),
                })?,
            };
            report.section(arrangement_section("normalized", &a.normalize_delta(&base)?));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        execute(std::iter::once("arrkt").chain(args.iter().copied()))
    }

    #[test]
    fn check_pl_point() {
        let out = run_args(&["check-pl", "--example", "point", "--format", "kv"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("pl.status = pass"));
        assert!(out.stdout.contains("rank 3"));
    }

    #[test]
    fn dims_generic_lines() {
        let out = run_args(&["dims", "--example", "generic-3-lines", "--format", "kv"]);
        assert!(out.stdout.contains("dims.dimK = 11"));
        assert!(out.stdout.contains("dims.dimLineQ = 8"));
        assert!(out.stdout.contains("dims.gap = 3"));
    }

    #[test]
    fn chambers_point() {
        let out = run_args(&["chambers", "--example", "point", "--format", "kv"]);
        assert!(out.stdout.contains("chambers.count = 2"));
        assert!(out.stdout.contains("chambers.C0 = - at (-1)"), "{}", out.stdout);
    }

    #[test]
    fn errors_exit_nonzero() {
        let out = run_args(&["faces", "--example", "concurrent-3-lines"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.starts_with("error:"));
        assert_eq!(out.stderr.lines().count(), 1);
        assert_eq!(run_args(&["chambers", "--example", "nowhere"]).code, 2);
        let out = run_args(&["check-delres", "--example", "two-points"]);
        assert_eq!(out.code, 1);
        let out = run_args(&["check-delres", "--example", "two-points", "--normalize"]);
        assert_eq!(out.code, 0, "{}", out.stdout);
    }

    #[test]
    fn mult_point() {
        let out = run_args(&["mult", "--example", "point", "--left", "0,0,1", "--right", "0,1,-1", "--format", "kv"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("mult.product = 0"), "{}", out.stdout);
    }
}
