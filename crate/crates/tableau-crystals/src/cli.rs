//! Command line front end. [`run`] returns the process exit status: 0 success, 1 domain error, 2 usage error.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use crate::checks;
use crate::crystal::{apply, Crystal};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::graph::{decompose, highest_weights, CrystalGraph};
use crate::grothendieck::{schur_expand, Bounds, Route};
use crate::hecke::{factorizations, hecke_words, pw, wg_direct, Permutation};
use crate::inflate::{deflate, inflate};
use crate::partition::Partition;
use crate::tableau::{AnyTableau, Family, FlaggedTableau, Letter, MultisetValuedTableau, Ssyt, Tableau, ValuedSetTableau};
use crate::uncrowd::{crowd, uncrowd};

#[derive(Parser, Debug)]
#[command(name = "tabcrys", version, about = "Crystals on tableau families, their bijections and Grothendieck expansions")]
struct Cli {
    /// Write output here instead of stdout (`-` is stdout).
    #[arg(long, global = true, default_value = "-")]
    output: String,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Truncated Schur expansion of a Grothendieck function.
    Expand {
        #[arg(long, value_enum)]
        family: Function,
        #[command(flatten)]
        space: Space,
        #[arg(long, value_enum, default_value_t = RouteArg::Crystal)]
        route: RouteArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Irreducible components and multiplicities of an enumerated family.
    Decompose {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[command(flatten)]
        space: Space,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Highest weight elements of an enumerated family.
    Hw {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[command(flatten)]
        space: Space,
        /// Keep only elements of this weight.
        #[arg(long, value_parser = parse_partition)]
        weight: Option<Partition>,
    },
    /// Apply a raising (`e`) or lowering (`f`) operator to a tableau read as JSON.
    Apply {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        i: Letter,
        #[arg(long, value_enum)]
        dir: Direction,
        #[command(flatten)]
        input: Input,
    },
    /// Multiset-valued tableau to its (semistandard, flagged) pair.
    Uncrowd(Input),
    /// Inverse of `uncrowd`.
    Crowd(Input),
    /// Valued-set tableau to its (semistandard, flagged) pair.
    Inflate(Input),
    /// Inverse of `inflate`.
    Deflate(Input),
    /// Hecke words, decreasing factorizations, increasing tableaux or the permutation series.
    Hecke {
        /// One-line notation, e.g. `3,1,2`.
        #[arg(long, value_parser = parse_permutation)]
        perm: Permutation,
        /// Word length.
        #[arg(long)]
        k: Option<usize>,
        /// Number of factors.
        #[arg(long, requires = "k")]
        m: Option<usize>,
        /// Strictly decreasing factors.
        #[arg(long, requires = "m")]
        strict: bool,
        /// Increasing tableaux of this shape whose reading word multiplies to the permutation.
        #[arg(long, value_parser = parse_partition, conflicts_with_all = ["k", "max_k"])]
        shape: Option<Partition>,
        /// Truncate the series at this word length.
        #[arg(long, conflicts_with = "k")]
        max_k: Option<usize>,
        #[arg(long, default_value_t = 2, requires = "max_k")]
        vars: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a family of exhaustive checks.
    Verify {
        #[arg(value_enum)]
        topic: Topic,
    },
    /// Graphviz export of the crystal graph on an enumerated family.
    Graph {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[command(flatten)]
        space: Space,
    },
}

#[derive(Args, Debug)]
struct Space {
    #[arg(long, value_parser = parse_partition)]
    shape: Partition,
    #[arg(long)]
    vars: usize,
    #[arg(long, default_value_t = 0)]
    max_excess: usize,
    #[arg(long, default_value_t = 0)]
    max_arm: usize,
    #[arg(long, default_value_t = 0)]
    max_leg: usize,
}

impl Space {
    fn bounds(&self) -> Bounds {
        Bounds { max_excess: self.max_excess, max_arm: self.max_arm, max_leg: self.max_leg }
    }
}

#[derive(Args, Debug)]
struct Input {
    /// JSON input file (`-` is stdin).
    #[arg(long, default_value = "-")]
    input: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Function {
    #[value(name = "G")]
    G,
    #[value(name = "wG")]
    WG,
    #[value(name = "hG")]
    HG,
    #[value(name = "dwG")]
    DwG,
    #[value(name = "s")]
    S,
}

impl Function {
    fn family(self) -> Family {
        match self {
            Function::G => Family::Svt,
            Function::WG => Family::Mvt,
            Function::HG => Family::Hvt,
            Function::DwG => Family::Vst,
            Function::S => Family::Ssyt,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Ssyt,
    Svt,
    Mvt,
    Hvt,
    Vst,
}

impl FamilyArg {
    fn family(self) -> Family {
        match self {
            FamilyArg::Ssyt => Family::Ssyt,
            FamilyArg::Svt => Family::Svt,
            FamilyArg::Mvt => Family::Mvt,
            FamilyArg::Hvt => Family::Hvt,
            FamilyArg::Vst => Family::Vst,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RouteArg {
    Crystal,
    Flagged,
    Gram,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Direction {
    E,
    F,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Topic {
    Stembridge,
    Bijections,
    Identities,
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

fn parse_permutation(s: &str) -> std::result::Result<Permutation, String> {
    Permutation::parse(s).map_err(|e| e.to_string())
}

#[derive(Deserialize)]
struct Pair {
    ssyt: Ssyt,
    flagged: FlaggedTableau,
}

impl Pair {
    fn parse(s: &str) -> Result<(Ssyt, FlaggedTableau)> {
        let pair: Pair = serde_json::from_str(s)?;
        pair.ssyt.check()?;
        pair.flagged.check()?;
        Ok((pair.ssyt, pair.flagged))
    }
}

fn pair_json(b: &Ssyt, f: &FlaggedTableau) -> String {
    json!({ "ssyt": b, "flagged": f }).to_string()
}

enum Failure {
    Domain(Error),
    Checks(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Parse `args` (program name first), execute, and report the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut buffer = Vec::new();
    let result = execute(cli.verb, stdin, &mut buffer);
    let written = if cli.output == "-" { stdout.write_all(&buffer) } else { fs::write(&cli.output, &buffer) };
    let result = result.and(written.map_err(Failure::from));
    match result {
        Ok(()) => 0,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "{}", json!({ "error": e.kind(), "message": e.to_string() }));
            1
        }
        Err(Failure::Checks(witness)) => {
            let _ = writeln!(stderr, "{witness}");
            1
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(stderr, "{}", json!({ "error": "io", "message": msg }));
            2
        }
    }
}

fn read_input(input: &Input, stdin: &mut dyn Read) -> std::result::Result<String, Failure> {
    let mut s = String::new();
    if input.input == "-" {
        stdin.read_to_string(&mut s)?;
    } else {
        s = fs::read_to_string(&input.input)?;
    }
    Ok(s)
}

/// Enumerate a family and hand the vertices to a generic consumer.
trait Visit {
    fn visit<T: Crystal + Tableau>(self, all: Vec<T>, n: usize) -> Result<String>;
}

fn visit_family(family: Family, space: &Space, v: impl Visit) -> Result<String> {
    let (lam, n) = (&space.shape, space.vars);
    match family {
        Family::Ssyt => v.visit(enumerate::ssyt(lam, n), n),
        Family::Svt => v.visit(enumerate::svt(lam, n, space.max_excess), n),
        Family::Mvt => v.visit(enumerate::mvt(lam, n, space.max_excess), n),
        Family::Hvt => v.visit(enumerate::hvt_up_to(lam, n, space.max_arm, space.max_leg), n),
        Family::Vst => v.visit(enumerate::vst(lam, n), n),
    }
}

struct DecomposeVisit(Format);

impl Visit for DecomposeVisit {
    fn visit<T: Crystal + Tableau>(self, all: Vec<T>, n: usize) -> Result<String> {
        let report = decompose(all, n)?;
        Ok(match self.0 {
            Format::Json => report.to_json() + "\n",
            Format::Table => {
                let width = report.multiplicities.keys().map(|mu| mu.to_string().len()).max().unwrap_or(2).max(2);
                let mut s = format!("{:<width$}  mult  size\n", "mu");
                for (mu, mult) in &report.multiplicities {
                    let size = report.components.iter().find(|c| &c.mu == mu).map_or(0, |c| c.size);
                    s.push_str(&format!("{:<width$}  {mult:>4}  {size:>4}\n", mu.to_string()));
                }
                s
            }
        })
    }
}

struct HwVisit(Option<Partition>);

impl Visit for HwVisit {
    fn visit<T: Crystal + Tableau>(self, all: Vec<T>, n: usize) -> Result<String> {
        let mut records = Vec::new();
        for t in highest_weights(&all, n) {
            let mu = Crystal::weight(&t, n)?.to_partition();
            if self.0.is_none() || mu == self.0 {
                records.push(json!({ "weight": mu, "tableau": t }));
            }
        }
        Ok(serde_json::Value::Array(records).to_string() + "\n")
    }
}

struct GraphVisit;

impl Visit for GraphVisit {
    fn visit<T: Crystal + Tableau>(self, all: Vec<T>, n: usize) -> Result<String> {
        Ok(CrystalGraph::from_vertices(all, n)?.to_dot())
    }
}

fn execute(verb: Verb, stdin: &mut dyn Read, out: &mut Vec<u8>) -> std::result::Result<(), Failure> {
    let text = match verb {
        Verb::Expand { family, space, route, format } => {
            let route = match route {
                RouteArg::Crystal => Route::Crystal,
                RouteArg::Flagged => Route::Flagged,
                RouteArg::Gram => Route::Gram,
            };
            let e = schur_expand(family.family(), &space.shape, space.vars, space.bounds(), route)?;
            match format {
                Format::Json => e.to_json() + "\n",
                Format::Table => e.to_string(),
            }
        }
        Verb::Decompose { family, space, format } => visit_family(family.family(), &space, DecomposeVisit(format))?,
        Verb::Hw { family, space, weight } => visit_family(family.family(), &space, HwVisit(weight))?,
        Verb::Graph { family, space } => visit_family(family.family(), &space, GraphVisit)?,
        Verb::Apply { family, i, dir, input } => {
            let t = AnyTableau::from_json(family.family(), &read_input(&input, stdin)?)?;
            match apply(&t, i, matches!(dir, Direction::E)) {
                Some(u) => u.to_json() + "\n",
                None => "null\n".into(),
            }
        }
        Verb::Uncrowd(input) => {
            let t = MultisetValuedTableau::from_json(&read_input(&input, stdin)?)?;
            let (b, f) = uncrowd(&t)?;
            pair_json(&b, &f) + "\n"
        }
        Verb::Crowd(input) => {
            let (b, f) = Pair::parse(&read_input(&input, stdin)?)?;
            crowd(&b, &f)?.to_json() + "\n"
        }
        Verb::Inflate(input) => {
            let t = ValuedSetTableau::from_json(&read_input(&input, stdin)?)?;
            let (b, f) = inflate(&t)?;
            pair_json(&b, &f) + "\n"
        }
        Verb::Deflate(input) => {
            let (b, f) = Pair::parse(&read_input(&input, stdin)?)?;
            deflate(&b, &f)?.to_json() + "\n"
        }
        Verb::Hecke { perm, k, m, strict, shape, max_k, vars, format } => hecke(&perm, k, m, strict, shape, max_k, vars, format),
        Verb::Verify { topic } => {
            let name = match topic {
                Topic::Stembridge => "stembridge",
                Topic::Bijections => "bijections",
                Topic::Identities => "identities",
            };
            let mut s = String::new();
            for check in checks::topic(name).expect("known topic") {
                if let Err(witness) = check.run() {
                    out.extend_from_slice(s.as_bytes());
                    out.extend_from_slice(format!("FAIL [{:>2}] {}\n", check.id, check.name).as_bytes());
                    return Err(Failure::Checks(witness));
                }
                s.push_str(&format!("PASS [{:>2}] {}\n", check.id, check.name));
            }
            s
        }
    };
    out.extend_from_slice(text.as_bytes());
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn hecke(
    w: &Permutation,
    k: Option<usize>,
    m: Option<usize>,
    strict: bool,
    shape: Option<Partition>,
    max_k: Option<usize>,
    vars: usize,
    format: Format,
) -> String {
    let value = if let Some(lam) = shape {
        json!(pw(w, &lam))
    } else if let Some(max_k) = max_k {
        let series = wg_direct(w, vars, max_k);
        if format == Format::Table {
            return format!("{series}\n");
        }
        series.to_json()
    } else if let (Some(k), Some(m)) = (k, m) {
        json!(factorizations(w, k, m, strict).into_iter().map(|f| f.factors).collect::<Vec<_>>())
    } else if let Some(k) = k {
        json!(hecke_words(w, k))
    } else {
        json!({ "perm": w.one_line(), "length": w.length(), "descents": w.descents(), "grassmannian": w.grassmannian_shape() })
    };
    value.to_string() + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("tabcrys").chain(args.iter().copied());
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&[], "").0, 2);
        assert_eq!(call(&["expand", "--family", "G"], "").0, 2);
        assert_eq!(call(&["decompose", "--family", "svt", "--shape", "2,x", "--vars", "3"], "").0, 2);
        assert_eq!(call(&["hecke", "--perm", "3,3,1"], "").0, 2);
        assert_eq!(call(&["--help"], "").0, 0);
    }

    #[test]
    fn malformed_tableau_exits_one() {
        let (code, out, err) = call(&["apply", "--family", "ssyt", "--i", "1", "--dir", "f"], r#"{"shape":[2],"rows":[[2,1]]}"#);
        assert_eq!(code, 1);
        assert!(out.is_empty());
        assert!(err.contains("\"error\":\"invalid\""), "{err}");
        assert_eq!(call(&["uncrowd"], "not json").0, 1);
    }

    #[test]
    fn decompose_table() {
        let (code, out, _) = call(&["decompose", "--family", "svt", "--shape", "2,2", "--vars", "3", "--max-excess", "2", "--format", "table"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "mu       mult  size\n(2,2)       1     6\n(2,2,1)     2     3\n(2,2,2)     1     1\n");
    }

    #[test]
    fn single_cell_hook_expansion() {
        let (code, out, _) = call(&["expand", "--family", "hG", "--shape", "1", "--vars", "2", "--max-arm", "0", "--max-leg", "0"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "[{\"mu\":[1],\"coeff\":{\"1\":\"1\"}}]\n");
    }

    #[test]
    fn operator_round_trip() {
        let hw = ValuedSetTableau::new(vec![vec![1, 1, 1], vec![2, 2, 2]], vec![vec![1, 2], vec![]]).unwrap();
        let (code, out, _) = call(&["apply", "--family", "vst", "--i", "2", "--dir", "f"], &hw.to_json());
        assert_eq!(code, 0);
        let want = ValuedSetTableau::new(vec![vec![1, 1, 1], vec![3, 3, 3]], vec![vec![1, 2], vec![]]).unwrap();
        assert_eq!(out.trim(), want.to_json());
        assert_eq!(call(&["apply", "--family", "vst", "--i", "1", "--dir", "e"], &hw.to_json()).1, "null\n");
    }

    #[test]
    fn bijection_verbs_round_trip() {
        let t = MultisetValuedTableau::new(vec![vec![vec![1, 1], vec![1], vec![1]], vec![vec![2], vec![2, 2]], vec![vec![3, 3]]]).unwrap();
        let (code, pair, _) = call(&["uncrowd"], &t.to_json());
        assert_eq!(code, 0);
        let (code, back, _) = call(&["crowd"], &pair);
        assert_eq!(code, 0);
        assert_eq!(back.trim(), t.to_json());
    }

    #[test]
    fn hecke_queries() {
        assert_eq!(call(&["hecke", "--perm", "3,2,1", "--k", "3"], "").1, "[[1,2,1],[2,1,2]]\n");
        assert_eq!(call(&["hecke", "--perm", "2,1", "--k", "1", "--m", "2"], "").1, "[[[],[1]],[[1],[]]]\n");
        assert_eq!(call(&["hecke", "--perm", "3,2,1", "--shape", "2,1"], "").1, format!("[{}]\n", Ssyt::new(vec![vec![1, 2], vec![2]]).unwrap().to_json()));
    }
}
