//! Command-line front end. Each command renders its whole output to a
//! string so the binary can emit it in one write.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::casestudy::{case_study, ss_width_gap_search, CLASSIFICATION_HEADER};
use crate::complex::{build_complex, LabeledComplex};
use crate::decomposition::{glued_resolution, linear_width, linear_width_strict, Family};
use crate::error::Error;
use crate::homology::FieldSpec;
use crate::hypergraph::{find_cointerval_labeling, find_strongly_stable_labeling, Hypergraph};
use crate::mixedsub::{export_geometry, restrict_to_graph};
use crate::perm::factorial;
use crate::resolution::{
    betti_from_downset_homology, betti_from_faces, betti_hochster, face_table, verify_resolution_over, BettiTable,
};

pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Debug, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn precondition(message: impl Into<String>) -> Self {
        CliError { code: EXIT_PRECONDITION, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Io(_) | Error::InvalidHypergraph(_) => EXIT_PARSE,
            Error::Precondition(_) | Error::UnknownVertex(_) | Error::Uniformity { .. } => EXIT_PRECONDITION,
            Error::TooLarge(_) => EXIT_RESOURCE,
            Error::Internal(_) => 1,
        };
        CliError { code, message: e.to_string() }
    }
}

type CliResult = std::result::Result<String, CliError>;

#[derive(Debug, Parser)]
#[command(name = "cellres", version, about = "Cellular resolutions of cointerval edge ideals")]
pub struct Cli {
    /// Accepted for harness compatibility; nothing here is random.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report cointerval and strong-stability flags.
    Check {
        input: PathBuf,
        /// Search all vertex orders when the given labels fail.
        #[arg(long)]
        find_labeling: bool,
    },
    /// Verify that X_H is a minimal resolution and print its Betti table.
    Resolve {
        input: PathBuf,
        #[arg(long, default_value = "2", value_parser = parse_field)]
        field: FieldSpec,
        /// Also verify over the rationals.
        #[arg(long)]
        confirm: bool,
        /// Write the complex dump of X_H here.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Betti tables by face counting, downset homology, or Hochster's formula.
    Betti {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        #[arg(long, default_value = "2", value_parser = parse_field)]
        field: FieldSpec,
    },
    /// Write the mixed-subdivision geometry of H.
    Embed {
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Linear width, a witness cover, and the glued resolution.
    Decompose {
        input: PathBuf,
        #[arg(long, default_value = "cointerval", value_parser = parse_family)]
        family: Family,
        /// Parts must lie in the family under the labels of the input.
        #[arg(long)]
        strict: bool,
    },
    /// Classify all d-graphs on [n] up to isomorphism.
    Casestudy {
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
    /// Check a complex dump for the resolution property.
    Verify {
        input: PathBuf,
        #[arg(long, default_value = "2", value_parser = parse_field)]
        field: FieldSpec,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Faces,
    Cellular,
    Hochster,
    All,
}

fn parse_field(s: &str) -> std::result::Result<FieldSpec, String> {
    FieldSpec::parse(s).map_err(|e| e.to_string())
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    Family::parse(s).map_err(|e| e.to_string())
}

pub fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Check { input, find_labeling } => check(&read_graph(input)?, *find_labeling),
        Command::Resolve { input, field, confirm, dump } => resolve(&read_graph(input)?, *field, *confirm, dump.as_deref()),
        Command::Betti { input, method, field } => betti(&read_graph(input)?, *method, *field),
        Command::Embed { input, out } => embed(&read_graph(input)?, out),
        Command::Decompose { input, family, strict } => decompose(&read_graph(input)?, *family, *strict),
        Command::Casestudy { d, n } => casestudy(*d, *n),
        Command::Verify { input, field } => verify(&std::fs::read_to_string(input).map_err(Error::from)?, *field),
    }
}

pub fn read_graph(path: &Path) -> Result<Hypergraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(Error::from)?;
    Ok(Hypergraph::from_text(&text)?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn require_cointerval(h: &Hypergraph) -> Result<(), CliError> {
    if h.is_cointerval() {
        Ok(())
    } else {
        Err(CliError::precondition("not cointerval under the given labels; try `decompose`"))
    }
}

pub fn check(h: &Hypergraph, find_labeling: bool) -> CliResult {
    let mut out = format!("d: {} n: {} edges: {}\n", h.d(), h.n(), h.edge_count());
    let labelings = factorial(h.n());
    if h.is_cointerval() {
        out.push_str("cointerval: yes (given labels)\n");
    } else if find_labeling {
        match find_cointerval_labeling(h) {
            Some(r) => writeln!(out, "cointerval: yes (labeling {r})").unwrap(),
            None => writeln!(out, "cointerval: no (all {labelings} labelings)").unwrap(),
        }
    } else {
        out.push_str("cointerval: no (given labels)\n");
    }
    let given = h.is_standard_range() && h.is_strongly_stable()?;
    if given {
        out.push_str("strongly-stable: yes\n");
    } else if find_labeling {
        match find_strongly_stable_labeling(h) {
            Some(r) => writeln!(out, "strongly-stable: yes (labeling {r})").unwrap(),
            None => writeln!(out, "strongly-stable: no (all {labelings} labelings)").unwrap(),
        }
    } else {
        out.push_str("strongly-stable: no\n");
    }
    Ok(out)
}

pub fn resolve(h: &Hypergraph, field: FieldSpec, confirm: bool, dump: Option<&Path>) -> CliResult {
    require_cointerval(h)?;
    let x = build_complex(h);
    if let Some(path) = dump {
        std::fs::write(path, x.to_dump()).map_err(Error::from)?;
    }
    let mut fields = vec![field];
    if confirm && field != FieldSpec::RATIONALS {
        fields.push(FieldSpec::RATIONALS);
    }
    let report = verify_resolution_over(&x, &fields)?;
    let table = betti_from_faces(h)?;
    let mut out = String::new();
    let f: Vec<String> = x.f_vector().iter().map(usize::to_string).collect();
    writeln!(out, "f-vector: {}", f.join(" ")).unwrap();
    write!(out, "{table}").unwrap();
    write!(out, "{report}").unwrap();
    Ok(out)
}

pub fn betti(h: &Hypergraph, method: Method, field: FieldSpec) -> CliResult {
    let faces = || -> Result<BettiTable, CliError> {
        require_cointerval(h)?;
        Ok(betti_from_faces(h)?)
    };
    let cellular = || -> Result<BettiTable, CliError> {
        require_cointerval(h)?;
        Ok(betti_from_downset_homology(&build_complex(h), field)?)
    };
    let hochster = || -> Result<BettiTable, CliError> { Ok(betti_hochster(h, field)?) };
    let mut out = String::new();
    match method {
        Method::Faces => write!(out, "{}", faces()?).unwrap(),
        Method::Cellular => write!(out, "{}", cellular()?).unwrap(),
        Method::Hochster => write!(out, "{}", hochster()?).unwrap(),
        Method::All => {
            let tables = [("faces", faces()?), ("cellular", cellular()?), ("hochster", hochster()?)];
            for (name, t) in &tables {
                writeln!(out, "method: {name}").unwrap();
                write!(out, "{t}").unwrap();
            }
            let agree = tables.windows(2).all(|w| w[0].1 == w[1].1);
            out.push_str(if agree { "AGREE\n" } else { "DISAGREE\n" });
        }
    }
    Ok(out)
}

pub fn embed(h: &Hypergraph, out_path: &Path) -> CliResult {
    if !h.is_standard_range() {
        return Err(CliError::precondition("embedding needs the vertex set [n]"));
    }
    let g = restrict_to_graph(h.d(), h.n(), h)?;
    export_geometry(&g, out_path)?;
    let f: Vec<String> = g.f_vector().iter().map(usize::to_string).collect();
    Ok(format!(
        "vertices: {}\nmaximal cells: {}\nf-vector: {}\nwritten: {}\n",
        g.vertices.len(),
        g.cells.len(),
        f.join(" "),
        out_path.display()
    ))
}

pub fn decompose(h: &Hypergraph, family: Family, strict: bool) -> CliResult {
    let (k, cover) = if strict { linear_width_strict(h, family)? } else { linear_width(h, family)? };
    let mut out = format!("family: {family}\nwidth: {k}\n");
    for (i, part) in cover.parts().iter().enumerate() {
        writeln!(out, "part {}:", i + 1).unwrap();
        out.push_str(&part.graph.to_text());
        writeln!(out, "labeling: {}", part.labeling).unwrap();
    }
    if cover.is_empty() {
        return Ok(out);
    }
    let (x, report) = glued_resolution(h, &cover)?;
    writeln!(out, "glued resolution: {}", yes_no(report.passed())).unwrap();
    writeln!(out, "glued minimal: {}", yes_no(report.minimal)).unwrap();
    out.push_str("ranks:\n");
    for ((i, j), r) in face_table(&x).coarse() {
        writeln!(out, "{i} | {j} | {r}").unwrap();
    }
    Ok(out)
}

pub fn casestudy(d: usize, n: usize) -> CliResult {
    let (rows, summary) = case_study(d, n)?;
    let mut out = format!("{CLASSIFICATION_HEADER}\n");
    for r in &rows {
        writeln!(out, "{r}").unwrap();
    }
    out.push_str(&summary.to_string());
    for r in ss_width_gap_search(&rows) {
        let edges: Vec<String> = r.graph.edges().map(|e| e.iter().map(|v| v.to_string()).collect()).collect();
        writeln!(out, "width-gap: {}", edges.join(" ")).unwrap();
    }
    Ok(out)
}

pub fn verify(dump: &str, field: FieldSpec) -> CliResult {
    let x = LabeledComplex::from_dump(dump)?;
    let mut fields = vec![field];
    if field != FieldSpec::RATIONALS {
        fields.push(FieldSpec::RATIONALS);
    }
    let report = verify_resolution_over(&x, &fields)?;
    let f: Vec<String> = x.f_vector().iter().map(usize::to_string).collect();
    Ok(format!("f-vector: {}\n{report}", f.join(" ")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Hypergraph {
        Hypergraph::on_range(2, 5, [[1, 2], [1, 3], [1, 4], [1, 5], [2, 4], [2, 5], [3, 5]]).unwrap()
    }

    #[test]
    fn check_output() {
        let out = check(&example(), false).unwrap();
        assert!(out.contains("cointerval: yes (given labels)\n"));
        assert!(out.contains("strongly-stable: no\n"));
        let two_k2 = Hypergraph::on_range(2, 4, [[1, 2], [3, 4]]).unwrap();
        assert!(check(&two_k2, true).unwrap().contains("cointerval: no (all 24 labelings)"));
        let empty = Hypergraph::on_range(2, 3, Vec::<Vec<i32>>::new()).unwrap();
        let out = check(&empty, false).unwrap();
        assert!(out.contains("cointerval: yes") && out.contains("strongly-stable: yes"));
    }

    #[test]
    fn resolve_and_betti() {
        let out = resolve(&example(), FieldSpec::GF2, true, None).unwrap();
        assert!(out.contains("totals: 7 11 6 1\n"));
        assert!(out.contains("resolution: yes\nminimal: yes\nfields: GF(2) QQ\n"));
        assert!(betti(&example(), Method::All, FieldSpec::GF2).unwrap().ends_with("AGREE\n"));
        let two_k2 = Hypergraph::on_range(2, 4, [[1, 2], [3, 4]]).unwrap();
        assert!(betti(&two_k2, Method::Hochster, FieldSpec::GF2).unwrap().contains("1 | 1 2 3 4 | 1\n"));
        assert_eq!(betti(&two_k2, Method::Faces, FieldSpec::GF2).unwrap_err().code, EXIT_PRECONDITION);
        assert_eq!(resolve(&two_k2, FieldSpec::GF2, false, None).unwrap_err().code, EXIT_PRECONDITION);
    }

    #[test]
    fn error_codes() {
        let big = Hypergraph::complete(2, 6).unwrap();
        assert_eq!(decompose(&big, Family::Cointerval, false).unwrap_err().code, EXIT_RESOURCE);
        assert_eq!(verify("0 | 1 ; x | 1 2\n", FieldSpec::GF2).unwrap_err().code, EXIT_PARSE);
    }
}
