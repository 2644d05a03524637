//! The `su3` command line.

pub mod expr;
pub mod suites;

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::amalgam::{decompose_matrix, normal_form, AmalgamId, Factor, Letter, Word};
use crate::error::{Error, Result};
use crate::exact_arith::{Field, Mat3, Place};
use crate::group_core::{member, GroupElem, SubgroupTag, P1};
use crate::homology_h1::{h1_of_amalgam, h1_value, vanishing_bound, SignatureInput};
use crate::tree::{dot_segment, reduce_with_letters, DomainTag, Vertex};

pub use crate::report::Report;
pub use expr::{parse_elem, parse_elem_expr, parse_scalar, ElemExpr, LExpr};

#[derive(Parser, Debug)]
#[command(name = "su3", about = "Exact checks for SU3 over F[√t] and its arithmetic subgroups")]
pub struct Cli {
    /// q or fp:<p>
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    pub field: Field,
    #[arg(long, global = true, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report as JSON to this path
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    /// Write the domain segment as DOT to this path
    #[arg(long, global = true)]
    pub dot: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 64)]
    pub max_degree: usize,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Run a verification suite, or all of them
    Verify { suite: String },
    /// Decide membership of an element in a subgroup
    Member {
        #[arg(long)]
        group: String,
        elem: String,
    },
    /// Reduce the vertex "<elem>@n" into the fundamental domain
    Reduce {
        #[arg(long)]
        group: String,
        #[arg(long)]
        vertex: String,
    },
    /// Normal form of the word in a word file
    Nf {
        #[arg(long)]
        amalgam: String,
        #[arg(long)]
        word: PathBuf,
    },
    /// Write the matrix in a matrix file as a word in the factors
    Decompose {
        #[arg(long)]
        group: String,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// First homology of a decomposition
    H1 {
        #[arg(long)]
        amalgam: String,
    },
    /// Degrees from which the number-field comparison maps are injective and bijective
    Bound {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        s: u64,
    },
}

pub fn parse_field(s: &str) -> std::result::Result<Field, String> {
    if s == "q" {
        return Ok(Field::Q);
    }
    let p = s
        .strip_prefix("fp:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| format!("expected q or fp:<p>, got {s}"))?;
    Field::prime(p).ok_or_else(|| format!("{p} is not an odd prime below 2^32"))
}

/// Parses `<Amalgam>.<factor>`, with factor L, R, x=<scalar> or x=inf.
pub fn parse_factor(s: &str, f: Field) -> Result<(AmalgamId, Factor)> {
    let (id, fac) = s
        .split_once('.')
        .ok_or_else(|| Error::Usage(format!("expected <amalgam>.<factor>, got {s}")))?;
    let id: AmalgamId = id.trim().parse()?;
    let fac = fac.trim();
    let factor = match fac {
        "L" => Factor::L,
        "R" => Factor::R,
        _ => {
            let x = fac
                .strip_prefix("x=")
                .ok_or_else(|| Error::Usage(format!("unknown factor {fac}")))?;
            if x.trim() == "inf" {
                Factor::Label(P1::Inf)
            } else {
                let v = parse_scalar(x, f)?;
                let c = v
                    .as_scalar()
                    .ok_or_else(|| Error::Usage(format!("label {x} is not in F")))?;
                Factor::Label(P1::Fin(c))
            }
        }
    };
    let ok = match id {
        AmalgamId::GammaTFree => matches!(factor, Factor::Label(_)),
        _ => !matches!(factor, Factor::Label(_)),
    };
    if !ok {
        return Err(Error::Usage(format!("{id} has no factor {fac}")));
    }
    Ok((id, factor))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn at_line(line: usize, e: Error) -> Error {
    match e {
        Error::Syntax { pos, msg } => Error::Syntax { pos, msg: format!("line {line}: {msg}") },
        other => Error::Usage(format!("line {line}: {other}")),
    }
}

/// Reads a word file: one `<amalgam>.<factor>: <expr>` per line.
pub fn parse_word(text: &str, id: AmalgamId, f: Field) -> Result<Word> {
    let mut out = Vec::new();
    for (n, line) in content_lines(text) {
        let (fac, e) = line
            .split_once(':')
            .ok_or_else(|| Error::Usage(format!("line {n}: expected <factor>: <expr>")))?;
        let (lid, factor) = parse_factor(fac, f).map_err(|e| at_line(n, e))?;
        if lid != id {
            return Err(Error::Usage(format!("line {n}: letter of {lid} in a word over {id}")));
        }
        let g = parse_elem(e, f).map_err(|e| at_line(n, e))?;
        if !id.in_factor(&factor, &g) {
            return Err(Error::NotMember(format!("line {n}: {g} is not in {id}.{factor}")));
        }
        out.push(Letter { factor, g });
    }
    Ok(out)
}

pub fn format_word(id: AmalgamId, w: &[Letter]) -> String {
    w.iter().map(|l| format!("{id}.{}: {}\n", l.factor, l.g)).collect()
}

/// Reads three lines of three `;`-separated entries.
pub fn parse_matrix(text: &str, f: Field) -> Result<GroupElem> {
    let lines: Vec<(usize, &str)> = content_lines(text).collect();
    if lines.len() != 3 {
        return Err(Error::Usage(format!("expected 3 rows, found {}", lines.len())));
    }
    let mut e = Vec::with_capacity(9);
    for (n, line) in lines {
        let cells: Vec<&str> = line.split(';').collect();
        if cells.len() != 3 {
            return Err(Error::Usage(format!("line {n}: expected 3 entries")));
        }
        for c in cells {
            e.push(parse_scalar(c, f).map_err(|e| at_line(n, e))?);
        }
    }
    GroupElem::new(Mat3::from_fn(|i, j| e[3 * i + j].clone()))
}

fn domain_tag(tag: SubgroupTag) -> Result<DomainTag> {
    Ok(match tag {
        SubgroupTag::Gamma => DomainTag::RayGamma,
        SubgroupTag::HatGamma => DomainTag::RayHatGamma,
        SubgroupTag::Gamma0 => DomainTag::ApartmentGamma0,
        SubgroupTag::GammaT => DomainTag::BouquetGammaT,
        other => return Err(Error::Usage(format!("no fundamental domain for {other}"))),
    })
}

fn write_out(path: &PathBuf, body: &str) -> Result<()> {
    fs::write(path, body).map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))
}

fn read_in(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))
}

fn emit_report(cli: &Cli, rep: &Report) -> Result<()> {
    for fl in &rep.failures {
        println!("FAIL {}: {}", fl.check, fl.input);
    }
    println!("{}", rep.summary());
    if let Some(p) = &cli.json {
        let body = serde_json::to_string_pretty(rep).expect("serializable");
        write_out(p, &(body + "\n"))?;
    }
    Ok(())
}

/// Runs a parsed command line, printing to stdout; `Ok(false)` means some
/// check failed.
pub fn execute(cli: &Cli) -> Result<bool> {
    let f = cli.field;
    match &cli.cmd {
        Cmd::Verify { suite } => {
            let rep = suites::run_suite(suite, f, cli.samples, cli.seed)?;
            emit_report(cli, &rep)?;
            Ok(rep.ok())
        }
        Cmd::Member { group, elem } => {
            let tag: SubgroupTag = group.parse()?;
            let g = parse_elem(elem, f)?;
            let m = member(tag, &g);
            println!("{m}");
            Ok(true)
        }
        Cmd::Reduce { group, vertex } => {
            let tag: SubgroupTag = group.parse()?;
            let (e, n) = vertex
                .rsplit_once('@')
                .ok_or_else(|| Error::Usage("expected --vertex \"<elem>@n\"".into()))?;
            let n: i64 = n.trim().parse().map_err(|_| Error::Usage(format!("bad index {n}")))?;
            let g = parse_elem(e, f)?;
            let v = Vertex::new(Place::Infinity, g, n);
            let r = reduce_with_letters(tag, &v, cli.max_degree)?;
            println!("point: {}", r.point);
            println!("gamma: {}", r.gamma);
            println!("letters: {}", r.letters.len());
            if let Some(p) = &cli.dot {
                let dt = domain_tag(tag)?;
                let labels: Vec<P1> = match &r.point.label {
                    Some(P1::Inf) | None => vec![P1::Inf],
                    Some(l) => vec![P1::Inf, l.clone()],
                };
                let hi = r.point.n.abs().max(3) + 1;
                write_out(p, &dot_segment(dt, -hi, hi, &labels))?;
            }
            Ok(true)
        }
        Cmd::Nf { amalgam, word } => {
            let id: AmalgamId = amalgam.parse()?;
            let w = parse_word(&read_in(word)?, id, f)?;
            let nf = normal_form(id, &w)?;
            println!("# edge prefix");
            println!("{}", format_word(id, &[Letter { factor: edge_factor(id), g: nf.prefix }]).trim_end());
            println!("# letters");
            print!("{}", format_word(id, &nf.letters));
            Ok(true)
        }
        Cmd::Decompose { group, matrix } => {
            let id: AmalgamId = group.parse()?;
            let g = parse_matrix(&read_in(matrix)?, f)?;
            let w = decompose_matrix(id, &g, cli.max_degree)?;
            print!("{}", format_word(id, &w));
            Ok(true)
        }
        Cmd::H1 { amalgam } => {
            let id: AmalgamId = amalgam.parse()?;
            let (v, rep) = h1_of_amalgam(id, f, cli.samples, cli.seed)?;
            let rel = h1_value(id);
            let comps: Vec<String> =
                rel.components.iter().map(|(t, h)| format!("{h:?} into {t}")).collect();
            println!("relation: {} -> {}", rel.edge, comps.join(", "));
            println!("H1({id}) = {v}");
            emit_report(cli, &rep)?;
            Ok(rep.ok())
        }
        Cmd::Bound { r, s } => {
            let (i, b) = vanishing_bound(SignatureInput { r: *r, s: *s });
            println!("inj_from={i} bij_from={b}");
            Ok(true)
        }
    }
}

/// The factor the edge prefix is printed under.
fn edge_factor(id: AmalgamId) -> Factor {
    match id {
        AmalgamId::GammaTFree => Factor::Label(P1::Inf),
        _ => Factor::L,
    }
}

/// Entry point for the binary: returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
