//! Command-line surface: graph generation, joins and their spectra,
//! spanning-tree / Kirchhoff comparisons, verification suites, and
//! cospectral family construction.
//!
//! Exit status contract: 0 on success / all-pass, 1 on a verification or
//! certification failure, 2 on usage or input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use subjoin::closed_form::{
    join_spectrum, se_kirchhoff, se_spanning_trees, sv_kirchhoff, sv_spanning_trees,
};
use subjoin::cospectral::{
    builtin_fixtures, compatible_partners, coronal_equal, enumerate_family, load_fixtures,
    run_cospectral_suite, CertifiedPair, CospectralSeedPair,
};
use subjoin::graph::{
    circulant, complete, complete_bipartite, cycle, erdos_renyi, path, petersen, Graph,
};
use subjoin::verify::{
    kirchhoff_oracle, run_suite, spanning_tree_oracle, Corpus, Tolerances, VerificationReport,
};
use subjoin::{JoinKind, MatrixKind};

#[derive(Parser)]
#[command(
    name = "subjoin",
    version,
    about = "Spectra of subdivision-vertex and subdivision-edge joins: closed forms, oracles, verification suites, cospectral families"
)]
struct Cli {
    /// Override every verification tolerance with one value
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Seed for all randomness (sample points, the Erdos-Renyi corpus member)
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Output format for spectra, scalars and reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Sv,
    Se,
}

impl From<KindArg> for JoinKind {
    fn from(k: KindArg) -> JoinKind {
        match k {
            KindArg::Sv => JoinKind::Sv,
            KindArg::Se => JoinKind::Se,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixArg {
    A,
    L,
    Q,
}

impl From<MatrixArg> for MatrixKind {
    fn from(m: MatrixArg) -> MatrixKind {
        match m {
            MatrixArg::A => MatrixKind::Adjacency,
            MatrixArg::L => MatrixKind::Laplacian,
            MatrixArg::Q => MatrixKind::SignlessLaplacian,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Graph,
    SpectrumClosed,
    SpectrumDirect,
    Charpoly,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Joins,
    Cospectral,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph and write it as canonical JSON
    ///
    /// Families: cycle N | path N | complete N | complete-bipartite P Q |
    /// petersen | circulant N S1,S2,... | erdos-renyi N P
    Gen {
        family: String,
        params: Vec<String>,
    },
    /// Build a join of two graph files, or emit its spectra / charpoly
    Join {
        #[arg(value_enum)]
        kind: KindArg,
        g1: PathBuf,
        g2: PathBuf,
        #[arg(long, value_enum, default_value_t = Emit::Graph)]
        emit: Emit,
        #[arg(long, value_enum, default_value_t = MatrixArg::A)]
        matrix: MatrixArg,
    },
    /// Spanning trees of a join: closed form, exact oracle, residual
    Trees {
        #[arg(value_enum)]
        kind: KindArg,
        g1: PathBuf,
        g2: PathBuf,
    },
    /// Kirchhoff index of a join: closed form, direct oracle, residual
    Kirchhoff {
        #[arg(value_enum)]
        kind: KindArg,
        g1: PathBuf,
        g2: PathBuf,
    },
    /// Run a verification suite; exits 0 iff every case passes
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::Joins)]
        suite: SuiteArg,
    },
    /// Enumerate and certify cospectral families from seed fixtures
    Cospectral {
        /// Fixture JSON (defaults to the built-in seed pairs)
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Partner graph files (defaults to a built-in partner list)
        #[arg(long)]
        partners: Vec<PathBuf>,
        /// Join kinds to enumerate
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = vec![KindArg::Sv, KindArg::Se])]
        kinds: Vec<KindArg>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    let tolerances = match cli.tol {
        Some(t) if t > 0.0 => Tolerances::uniform(t),
        Some(t) => return Err(format!("tolerance must be positive, got {t}")),
        None => Tolerances::default(),
    };
    let out = Output {
        path: cli.out.clone(),
        format: cli.format,
    };
    match cli.command {
        Command::Gen { family, params } => cmd_gen(&family, &params, cli.seed, &out),
        Command::Join {
            kind,
            g1,
            g2,
            emit,
            matrix,
        } => cmd_join(kind.into(), &g1, &g2, emit, matrix.into(), &out),
        Command::Trees { kind, g1, g2 } => cmd_trees(kind.into(), &g1, &g2, &tolerances, &out),
        Command::Kirchhoff { kind, g1, g2 } => {
            cmd_kirchhoff(kind.into(), &g1, &g2, &tolerances, &out)
        }
        Command::Verify { suite } => cmd_verify(suite, cli.seed, &tolerances, &out),
        Command::Cospectral {
            fixtures,
            partners,
            kinds,
        } => cmd_cospectral(fixtures.as_deref(), &partners, &kinds, cli.seed, &out),
    }
}

struct Output {
    path: Option<PathBuf>,
    format: Format,
}

impl Output {
    fn write(&self, content: &str) -> Result<(), String> {
        match &self.path {
            Some(p) => fs::write(p, content).map_err(|e| format!("cannot write {}: {e}", p.display())),
            None => {
                print!("{content}");
                if !content.ends_with('\n') {
                    println!();
                }
                Ok(())
            }
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Graph::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_gen(family: &str, params: &[String], seed: u64, out: &Output) -> Result<u8, String> {
    fn arg<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> Result<T, String>
    where
        T::Err: std::fmt::Display,
    {
        params
            .get(i)
            .ok_or_else(|| format!("missing parameter: {what}"))?
            .parse::<T>()
            .map_err(|e| format!("bad {what}: {e}"))
    }
    let graph = match family {
        "cycle" => cycle(arg(params, 0, "vertex count")?),
        "path" => path(arg(params, 0, "vertex count")?),
        "complete" => complete(arg(params, 0, "vertex count")?),
        "complete-bipartite" => {
            complete_bipartite(arg(params, 0, "first part size")?, arg(params, 1, "second part size")?)
        }
        "petersen" => petersen(),
        "circulant" => {
            let n = arg(params, 0, "vertex count")?;
            let offsets: Vec<usize> = params
                .get(1)
                .ok_or("missing parameter: offsets")?
                .split(',')
                .map(|s| s.parse().map_err(|e| format!("bad offset {s:?}: {e}")))
                .collect::<Result<_, _>>()?;
            circulant(n, &offsets)
        }
        "erdos-renyi" => erdos_renyi(arg(params, 0, "vertex count")?, arg(params, 1, "edge probability")?, seed),
        other => return Err(format!(
            "unknown family {other:?}; expected cycle, path, complete, complete-bipartite, petersen, circulant or erdos-renyi"
        )),
    }
    .map_err(|e| e.to_string())?;
    out.write(&graph.to_json_string())?;
    Ok(0)
}

fn render_spectrum(values: &[f64], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(values).expect("serializable"),
        Format::Csv => {
            let mut s = String::from("eigenvalue\n");
            for v in values {
                s.push_str(&format!("{v}\n"));
            }
            s
        }
        Format::Plain => values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn cmd_join(
    kind: JoinKind,
    g1_path: &Path,
    g2_path: &Path,
    emit: Emit,
    matrix: MatrixKind,
    out: &Output,
) -> Result<u8, String> {
    let g1 = load_graph(g1_path)?;
    let g2 = load_graph(g2_path)?;
    match emit {
        Emit::Graph => {
            let (join, _) = kind.build(&g1, &g2).map_err(|e| e.to_string())?;
            out.write(&join.to_json_string())?;
        }
        Emit::SpectrumDirect => {
            let (join, _) = kind.build(&g1, &g2).map_err(|e| e.to_string())?;
            let s = subjoin::verify::direct_spectrum(&join, matrix).map_err(|e| e.to_string())?;
            out.write(&render_spectrum(s.values(), out.format))?;
        }
        Emit::SpectrumClosed => {
            let regular = g1.as_regular().map_err(|e| e.to_string())?;
            let r = join_spectrum(kind, matrix, &regular, &g2).map_err(|e| e.to_string())?;
            out.write(&render_spectrum(r.spectrum.values(), out.format))?;
        }
        Emit::Charpoly => {
            let regular = g1.as_regular().map_err(|e| e.to_string())?;
            let r = join_spectrum(kind, matrix, &regular, &g2).map_err(|e| e.to_string())?;
            let coeffs = r.charpoly.coeffs();
            let rendered = match out.format {
                Format::Json => serde_json::to_string(&r.charpoly).expect("serializable"),
                Format::Csv => {
                    let mut s = String::from("degree,coefficient\n");
                    for (i, c) in coeffs.iter().enumerate() {
                        s.push_str(&format!("{i},{c}\n"));
                    }
                    s
                }
                Format::Plain => coeffs
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            };
            out.write(&rendered)?;
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct ScalarComparison {
    closed_form: f64,
    closed_form_exact: Option<String>,
    oracle: String,
    residual: f64,
    pass: bool,
}

fn render_scalar(c: &ScalarComparison, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(c).expect("serializable"),
        Format::Csv => format!(
            "closed_form,oracle,residual,pass\n{},{},{:e},{}\n",
            c.closed_form, c.oracle, c.residual, c.pass
        ),
        Format::Plain => format!(
            "closed-form: {}\noracle: {}\nresidual: {:e}\n{}",
            c.closed_form_exact.as_deref().map_or_else(
                || c.closed_form.to_string(),
                |e| e.to_string()
            ),
            c.oracle,
            c.residual,
            if c.pass { "pass" } else { "FAIL" }
        ),
    }
}

fn cmd_trees(
    kind: JoinKind,
    g1_path: &Path,
    g2_path: &Path,
    tolerances: &Tolerances,
    out: &Output,
) -> Result<u8, String> {
    let g1 = load_graph(g1_path)?;
    let g2 = load_graph(g2_path)?;
    let regular = g1.as_regular().map_err(|e| e.to_string())?;
    let closed = match kind {
        JoinKind::Sv => sv_spanning_trees(&regular, &g2),
        JoinKind::Se => se_spanning_trees(&regular, &g2),
    }
    .map_err(|e| e.to_string())?;
    let (join, _) = kind.build(&g1, &g2).map_err(|e| e.to_string())?;
    let oracle = spanning_tree_oracle(&join);
    let oracle_f: f64 = oracle.to_string().parse().unwrap_or(f64::INFINITY);
    let residual = (closed.value - oracle_f).abs() / oracle_f.max(1.0);
    let pass = closed.exact.as_ref() == Some(&oracle) && residual <= tolerances.trees_rel;
    let cmp = ScalarComparison {
        closed_form: closed.value,
        closed_form_exact: closed.exact.map(|e| e.to_string()),
        oracle: oracle.to_string(),
        residual,
        pass,
    };
    out.write(&render_scalar(&cmp, out.format))?;
    Ok(if pass { 0 } else { 1 })
}

fn cmd_kirchhoff(
    kind: JoinKind,
    g1_path: &Path,
    g2_path: &Path,
    tolerances: &Tolerances,
    out: &Output,
) -> Result<u8, String> {
    let g1 = load_graph(g1_path)?;
    let g2 = load_graph(g2_path)?;
    let regular = g1.as_regular().map_err(|e| e.to_string())?;
    let closed = match kind {
        JoinKind::Sv => sv_kirchhoff(&regular, &g2),
        JoinKind::Se => se_kirchhoff(&regular, &g2),
    }
    .map_err(|e| e.to_string())?;
    let (join, _) = kind.build(&g1, &g2).map_err(|e| e.to_string())?;
    let oracle = kirchhoff_oracle(&join).map_err(|e| e.to_string())?;
    let residual = (closed.value - oracle).abs() / oracle.abs();
    let pass = residual <= tolerances.kirchhoff_rel;
    let cmp = ScalarComparison {
        closed_form: closed.value,
        closed_form_exact: None,
        oracle: oracle.to_string(),
        residual,
        pass,
    };
    out.write(&render_scalar(&cmp, out.format))?;
    Ok(if pass { 0 } else { 1 })
}

fn render_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json_string(),
        Format::Csv => report.to_csv_string(),
        Format::Plain => {
            let mut s = format!(
                "{}\nseed: {}\ncases: {} passed, {} failed\n",
                report.corpus, report.seed, report.summary.passed, report.summary.failed
            );
            for c in report.cases.iter().filter(|c| !c.passed()) {
                s.push_str(&format!(
                    "FAIL {} join of ({}, {}), {}: residual {:e}\n",
                    c.kind, c.g1, c.g2, c.matrix, c.residual
                ));
            }
            s
        }
    }
}

fn cmd_verify(
    suite: SuiteArg,
    seed: u64,
    tolerances: &Tolerances,
    out: &Output,
) -> Result<u8, String> {
    let report = match suite {
        SuiteArg::Joins => run_suite(&Corpus::default_corpus(seed), seed, tolerances),
        SuiteArg::Cospectral => run_cospectral_suite(seed, tolerances).map_err(|e| e.to_string())?,
        SuiteArg::All => {
            let mut joins = run_suite(&Corpus::default_corpus(seed), seed, tolerances);
            let cospectral = run_cospectral_suite(seed, tolerances).map_err(|e| e.to_string())?;
            let mut cases = std::mem::take(&mut joins.cases);
            cases.extend(cospectral.cases);
            VerificationReport::from_cases(
                format!("{} + {}", joins.corpus, cospectral.corpus),
                seed,
                *tolerances,
                cases,
            )
        }
    };
    out.write(&render_report(&report, out.format))?;
    Ok(if report.all_passed() { 0 } else { 1 })
}

#[derive(Serialize)]
struct CertifiedRecord {
    partner: String,
    join: JoinKind,
    residual: f64,
    isomorphic: bool,
    j1: Graph,
    j2: Graph,
}

#[derive(Serialize)]
struct FamilyRecord {
    seed_index: usize,
    note: String,
    matrix: MatrixKind,
    regular: bool,
    refused_by_coronal: bool,
    certified: Vec<CertifiedRecord>,
    errors: Vec<String>,
}

fn cmd_cospectral(
    fixtures_path: Option<&Path>,
    partner_paths: &[PathBuf],
    kinds: &[KindArg],
    seed: u64,
    out: &Output,
) -> Result<u8, String> {
    let fixtures: Vec<CospectralSeedPair> = match fixtures_path {
        Some(p) => {
            let text =
                fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))?;
            match load_fixtures(&text) {
                Ok(f) => f,
                Err(e) => {
                    // a fixture that fails re-verification is a recorded
                    // certification failure, not a usage error
                    out.write(&format!("fixture verification failed: {e}\n"))?;
                    return Ok(1);
                }
            }
        }
        None => builtin_fixtures().map_err(|e| e.to_string())?,
    };
    let user_partners: Option<Vec<(String, Graph)>> = if partner_paths.is_empty() {
        None
    } else {
        let mut list = Vec::new();
        for p in partner_paths {
            let name = p
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| p.display().to_string());
            list.push((name, load_graph(p)?));
        }
        Some(list)
    };
    let joins: Vec<JoinKind> = kinds.iter().map(|&k| k.into()).collect();

    let mut records = Vec::new();
    let mut any_failure = false;
    for (i, pair) in fixtures.iter().enumerate() {
        let refused = !pair.regular
            && matches!(pair.kind, MatrixKind::Adjacency | MatrixKind::SignlessLaplacian)
            && !coronal_equal(&pair.h1, &pair.h2, pair.kind, seed).map_err(|e| e.to_string())?;
        if refused {
            records.push(FamilyRecord {
                seed_index: i,
                note: pair.note.clone(),
                matrix: pair.kind,
                regular: pair.regular,
                refused_by_coronal: true,
                certified: Vec::new(),
                errors: Vec::new(),
            });
            continue;
        }
        let partners = user_partners
            .clone()
            .unwrap_or_else(|| compatible_partners(pair));
        let family = enumerate_family(pair, &partners, &joins, seed);
        let errors: Vec<String> = family
            .errors
            .iter()
            .map(|e| format!("{} ({} join): {}", e.partner, e.join, e.message))
            .collect();
        any_failure = any_failure || !errors.is_empty();
        records.push(FamilyRecord {
            seed_index: i,
            note: pair.note.clone(),
            matrix: pair.kind,
            regular: pair.regular,
            refused_by_coronal: false,
            certified: family
                .certified
                .into_iter()
                .map(|(partner, built): (String, CertifiedPair)| CertifiedRecord {
                    partner,
                    join: built.join,
                    residual: built.residual,
                    isomorphic: built.isomorphic,
                    j1: built.j1,
                    j2: built.j2,
                })
                .collect(),
            errors,
        });
    }

    let rendered = match out.format {
        Format::Json | Format::Csv => {
            serde_json::to_string_pretty(&records).expect("serializable")
        }
        Format::Plain => {
            let mut s = String::new();
            for r in &records {
                let status = if r.refused_by_coronal {
                    "refused (coronal mismatch)".to_string()
                } else {
                    format!("{} certified, {} errors", r.certified.len(), r.errors.len())
                };
                s.push_str(&format!("seed {} [{}]: {}\n", r.seed_index, r.matrix, status));
                for e in &r.errors {
                    s.push_str(&format!("  error: {e}\n"));
                }
            }
            s
        }
    };
    out.write(&rendered)?;
    Ok(if any_failure { 1 } else { 0 })
}
