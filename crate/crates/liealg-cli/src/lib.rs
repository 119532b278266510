//! Command-line front end: algebra files or catalog entries in, deterministic
//! text or JSON reports out.
//!
//! Exit codes: 0 for pass/success, 1 for an analytic failure (a bracket table
//! failing Jacobi under `check`, a rejected contraction, a non-ideal quotient
//! subset), 2 for usage and parse errors.

pub mod report;

use clap::{Parser, Subcommand, ValueEnum};

use liealg_core::algebra::{check_jacobi, LieAlgebra};
use liealg_core::catalog::catalog;
use liealg_core::contraction::{contract_formula, contract_symbolic, quotient_algebra, SectorSplit};
use liealg_core::error::Error;
use liealg_core::fourdim::{
    alphazeta_identity_check, boost_bracket_signature_check, epsilon_delta_identity_check,
    eval_sigma, f_sim2, factorization_check, hat_brackets_3d_check, rep_consistency,
    solve_inhomogeneous, AlphaZeta, IndexedRep, LorentzTensor, Metric, Sim2Tensor,
};
use liealg_core::linalg::Matrix;
use liealg_core::projective::{generator_pairs, h2, r_sets, Cocycle};
use liealg_core::scalar::GaussianRational;
use liealg_core::textfmt::{emit_algebra, parse_algebra};

use report::{Report, Verdict};

type G = GaussianRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Parser)]
#[command(
    name = "liealg",
    version,
    about = "Exact structure-constant workbench for finite-dimensional Lie algebras"
)]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Formula,
    Symbolic,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum RepTarget {
    Lorentz,
    Sim2,
}

#[derive(Subcommand)]
enum Command {
    /// Load an algebra and run the exhaustive Jacobi sweep.
    Check { src: String },
    /// Contract with the normal-form split: first r generators kept, the
    /// rest scaled by epsilon.
    Contract {
        src: String,
        /// First-sector size r.
        #[arg(long)]
        split: usize,
        /// Path to an r×r mixing matrix in scalar tokens, one row per line.
        #[arg(long)]
        v: Option<String>,
        #[arg(long, value_enum, default_value_t = RouteArg::Both)]
        route: RouteArg,
    },
    /// Per-generator bracket-value spans and the generators lying outside
    /// the derived subalgebra.
    Rsets { src: String },
    /// Second Lie-algebra cohomology with canonical residual central charges.
    H2 { src: String },
    /// Verify a four-index structure-constant tensor against the abstract
    /// algebra, plus the associated identity sweeps.
    RepVerify {
        #[arg(value_enum)]
        target: RepTarget,
    },
    /// Solve the inhomogeneous-sector constraint system exactly.
    InhomSolve,
    /// Print a catalog algebra in the definition file format.
    Catalog { name: String },
    /// Quotient by the ideal spanned by the named generators.
    Quotient {
        src: String,
        /// Comma-separated generator names spanning the ideal.
        #[arg(long, value_delimiter = ',', required = true)]
        ideal: Vec<String>,
    },
}

struct UsageError(String);

/// Runs the CLI on argv (including the program name) and captures the output.
pub fn run<I, S>(args: I) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let cli = match Cli::try_parse_from(args.into_iter().map(Into::into)) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CliOutput { stdout: String::new(), stderr: rendered, code: 2 }
            } else {
                CliOutput { stdout: rendered, stderr: String::new(), code: 0 }
            };
        }
    };
    let format = cli.format;
    match dispatch(cli.command) {
        Ok(report) => {
            let rendered = match format {
                Format::Text => report.render_text(),
                Format::Machine => report.render_json(),
            };
            let code = if report.is_fail() { 1 } else { 0 };
            CliOutput { stdout: rendered, stderr: String::new(), code }
        }
        Err(UsageError(message)) => {
            CliOutput { stdout: String::new(), stderr: format!("error: {message}\n"), code: 2 }
        }
    }
}

fn dispatch(command: Command) -> Result<Report, UsageError> {
    match command {
        Command::Check { src } => {
            let (name, algebra) = load_algebra(&src)?;
            Ok(check_report(&name, &algebra))
        }
        Command::Contract { src, split, v, route } => {
            let (name, algebra) = load_algebra(&src)?;
            contract_report(&name, &algebra, split, v.as_deref(), route)
        }
        Command::Rsets { src } => {
            let (name, algebra) = load_algebra(&src)?;
            Ok(rsets_report(&name, &algebra))
        }
        Command::H2 { src } => {
            let (name, algebra) = load_algebra(&src)?;
            Ok(h2_report(&name, &algebra))
        }
        Command::RepVerify { target } => Ok(rep_verify_report(target)),
        Command::InhomSolve => Ok(inhom_report()),
        Command::Catalog { name } => {
            let algebra = catalog(&name).map_err(|e| UsageError(e.to_string()))?;
            Ok(Report::value(emit_algebra(&name, &algebra)))
        }
        Command::Quotient { src, ideal } => {
            let (name, algebra) = load_algebra(&src)?;
            quotient_report(&name, &algebra, &ideal)
        }
    }
}

/// Resolves `catalog:<name>` or a file path into an algebra.
fn load_algebra(src: &str) -> Result<(String, LieAlgebra), UsageError> {
    if let Some(name) = src.strip_prefix("catalog:") {
        let algebra = catalog(name).map_err(|e| UsageError(e.to_string()))?;
        return Ok((name.to_string(), algebra));
    }
    let text = std::fs::read_to_string(src).map_err(|e| UsageError(format!("{src}: {e}")))?;
    parse_algebra(&text).map_err(|e| UsageError(format!("{src}: {e}")))
}

/// A coefficient vector as `<scalar>*<generator>` terms, `0` when empty.
fn combination(names: &[String], coeffs: &[G]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| format!("{c}*{}", names[k]))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// A cocycle as `<scalar>*Xi(<a>,<b>)` terms over its support.
fn cocycle_terms(algebra: &LieAlgebra, cocycle: &Cocycle<'_>) -> String {
    let terms: Vec<String> = generator_pairs(algebra.dim())
        .into_iter()
        .zip(cocycle.pair_vector())
        .filter(|(_, v)| !v.is_zero())
        .map(|((i, j), v)| format!("{v}*Xi({},{})", algebra.name(i), algebra.name(j)))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn info_report() -> Report {
    Report { verdict: Verdict::Value, value: None, warnings: Vec::new(), sections: Vec::new() }
}

fn algebra_section(report: Report, name: &str, algebra: &LieAlgebra) -> Report {
    report.section(
        "algebra",
        vec![
            vec!["name".into(), name.to_string()],
            vec!["dimension".into(), algebra.dim().to_string()],
            vec!["generators".into(), algebra.names().join(" ")],
        ],
    )
}

fn jacobi_warning(report: Report, algebra: &LieAlgebra) -> Report {
    if algebra.jacobi_verified() {
        report
    } else {
        report.warn("bracket table fails the Jacobi identity")
    }
}

fn check_report(name: &str, algebra: &LieAlgebra) -> Report {
    let jacobi = check_jacobi(algebra);
    let report = if jacobi.passed() { Report::pass() } else { Report::fail() };
    let report = algebra_section(report, name, algebra);
    if jacobi.passed() {
        report.section("jacobi", vec![vec!["all generator triples satisfy the identity".into()]])
    } else {
        let rows = jacobi
            .violations()
            .iter()
            .map(|v| {
                vec![
                    algebra.name(v.triple.0).to_string(),
                    algebra.name(v.triple.1).to_string(),
                    algebra.name(v.triple.2).to_string(),
                    combination(algebra.names(), &v.residual),
                ]
            })
            .collect();
        report.section("jacobi violations", rows)
    }
}

fn parse_v_matrix(path: &str, r: usize) -> Result<Matrix, UsageError> {
    let text = std::fs::read_to_string(path).map_err(|e| UsageError(format!("{path}: {e}")))?;
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row: Result<Vec<G>, _> = line.split_whitespace().map(str::parse).collect();
        let row = row.map_err(|e| UsageError(format!("{path}: line {}: {e}", idx + 1)))?;
        rows.push(row);
    }
    if rows.len() != r || rows.iter().any(|row| row.len() != r) {
        return Err(UsageError(format!("{path}: expected a {r}x{r} matrix")));
    }
    Matrix::from_rows(rows).map_err(|e| UsageError(format!("{path}: {e}")))
}

fn contract_report(
    name: &str,
    algebra: &LieAlgebra,
    split_r: usize,
    v_path: Option<&str>,
    route: RouteArg,
) -> Result<Report, UsageError> {
    let split = match v_path {
        Some(path) => SectorSplit::with_v(split_r, parse_v_matrix(path, split_r)?),
        None => SectorSplit::new(split_r),
    };
    let outcome = match route {
        RouteArg::Formula | RouteArg::Both => contract_formula(algebra, &split),
        RouteArg::Symbolic => contract_symbolic(algebra, &split),
    };
    match outcome {
        Ok(result) => {
            let mut rows = vec![
                vec!["first sector size".into(), split_r.to_string()],
                vec![
                    "route".into(),
                    match route {
                        RouteArg::Formula => "formula".into(),
                        RouteArg::Symbolic => "symbolic".into(),
                        RouteArg::Both => "both".into(),
                    },
                ],
            ];
            if route == RouteArg::Both {
                rows.push(vec!["route agreement".into(), result.route_agreement.to_string()]);
            }
            Ok(jacobi_warning(Report::pass(), algebra)
                .section("contraction", rows)
                .section(
                    "contracted algebra",
                    emit_algebra(&format!("{name}-contracted"), &result.contracted)
                        .lines()
                        .map(|l| vec![l.to_string()])
                        .collect(),
                ))
        }
        Err(Error::NotContractible(triples)) => {
            let rows = triples
                .0
                .iter()
                .map(|&(i, j, k)| {
                    vec![
                        algebra.name(i).to_string(),
                        algebra.name(j).to_string(),
                        algebra.name(k).to_string(),
                    ]
                })
                .collect();
            Ok(jacobi_warning(Report::fail(), algebra).section("condition violations", rows))
        }
        Err(e) => Err(UsageError(e.to_string())),
    }
}

fn rsets_report(name: &str, algebra: &LieAlgebra) -> Report {
    let rset = r_sets(algebra);
    let mut span_rows = Vec::new();
    for (g, span) in rset.per_generator.iter().enumerate() {
        let mut row = vec![algebra.name(g).to_string()];
        if span.is_empty() {
            row.push("(empty)".into());
        } else {
            for v in span {
                row.push(combination(algebra.names(), v));
            }
        }
        span_rows.push(row);
    }
    let flagged_row = if rset.flagged.is_empty() {
        vec!["(none)".to_string()]
    } else {
        rset.flagged.iter().map(|&g| algebra.name(g).to_string()).collect()
    };
    let report = jacobi_warning(info_report(), algebra);
    algebra_section(report, name, algebra)
        .section("r-set spans", span_rows)
        .section("generators outside every r-set", vec![flagged_row])
}

fn h2_report(name: &str, algebra: &LieAlgebra) -> Report {
    let cohomology = match h2(algebra) {
        Ok(c) => c,
        Err(e) => {
            return Report::fail().section("error", vec![vec![e.to_string()]]);
        }
    };
    let dim_rows = vec![
        vec![format!("dim Z2 = {}", cohomology.dim_z2)],
        vec![format!("dim B2 = {}", cohomology.dim_b2)],
        vec![format!("dim H2 = {}", cohomology.dim_h2)],
    ];
    let residual_rows = if cohomology.residual_basis.is_empty() {
        vec![vec!["(none)".to_string()]]
    } else {
        cohomology.residual_basis.iter().map(|c| vec![cocycle_terms(algebra, c)]).collect()
    };
    let elimination_rows = if cohomology.elimination.is_empty() {
        vec![vec!["(none)".to_string()]]
    } else {
        cohomology
            .elimination
            .iter()
            .map(|(cocycle, lambda)| {
                vec![
                    cocycle_terms(algebra, cocycle),
                    "removed by".into(),
                    format!("Lambda = {}", combination(algebra.names(), lambda.coefficients())),
                ]
            })
            .collect()
    };
    algebra_section(info_report(), name, algebra)
        .section("dimensions", dim_rows)
        .section("residual central charges", residual_rows)
        .section("removable directions", elimination_rows)
}

fn rep_verify_report(target: RepTarget) -> Report {
    let metric = Metric::standard();
    let mut rows: Vec<(String, bool)> = Vec::new();
    match target {
        RepTarget::Lorentz => {
            let algebra = catalog("lorentz-jk").expect("catalog entry");
            let rep = IndexedRep::lorentz(&algebra).expect("lorentz labelling");
            let tensor = LorentzTensor { metric: metric.clone() };
            rows.push((
                "bracket table reproduces the abstract algebra (4^4 pairs)".into(),
                rep_consistency(&rep, &tensor).passed(),
            ));
            rows.push((
                "epsilon-delta expansion (3^6 tuples)".into(),
                epsilon_delta_identity_check(),
            ));
            rows.push((
                "metric signature pinned by the boost bracket".into(),
                boost_bracket_signature_check(&algebra, &metric)
                    && !boost_bracket_signature_check(&algebra, &Metric::flipped()),
            ));
        }
        RepTarget::Sim2 => {
            let algebra = catalog("sim2").expect("catalog entry");
            let rep = IndexedRep::sim2(&algebra).expect("sim2 labelling");
            rows.push((
                "bracket table reproduces the abstract algebra (4^4 pairs)".into(),
                rep_consistency(&rep, &Sim2Tensor::paper()).passed(),
            ));
            rows.push((
                "factorization through the Lorentz tensor (4^6 comparisons)".into(),
                factorization_check(),
            ));
            let az = AlphaZeta::paper();
            let mut vanishing = true;
            for mu in 0..4 {
                for nu in 0..4 {
                    for rho in 0..4 {
                        for sigma in 0..4 {
                            let t = f_sim2(&metric, &az, (mu, nu), (rho, sigma));
                            vanishing &= t.get(0, 3).is_zero() && t.get(1, 2).is_zero();
                        }
                    }
                }
            }
            rows.push(("target pairs (0,3) and (1,2) vanish identically".into(), vanishing));
            let mut sigma_ok = true;
            for gamma in 0..4 {
                for lambda in 0..4 {
                    let s = eval_sigma(&az, gamma, lambda);
                    for i in 0..4 {
                        sigma_ok &= s.get(i, 0).is_zero();
                    }
                    sigma_ok &= s.get(1, 2).is_zero();
                }
            }
            rows.push(("sigma blocks (i,0) and (1,2) vanish identically".into(), sigma_ok));
            rows.push(("alpha/zeta contraction identities".into(), alphazeta_identity_check(&az)));
            let lorentz = catalog("lorentz-jk").expect("catalog entry");
            rows.push((
                "three-dimensional hatted brackets".into(),
                hat_brackets_3d_check(&lorentz, &az),
            ));
        }
    }
    let all_pass = rows.iter().all(|(_, ok)| *ok);
    let table = rows
        .into_iter()
        .map(|(check, ok)| vec![check, if ok { "pass".into() } else { "fail".into() }])
        .collect();
    let report = if all_pass { Report::pass() } else { Report::fail() };
    report.section("checks", table)
}

fn inhom_report() -> Report {
    let metric = Metric::standard();
    let solution = match solve_inhomogeneous(&metric) {
        Ok(s) => s,
        Err(e) => return Report::fail().section("error", vec![vec![e.to_string()]]),
    };
    let linear_rows: Vec<Vec<String>> = (0..4)
        .map(|eta| (0..4).map(|rho| solution.c_linear.get(eta, rho).to_string()).collect())
        .collect();
    let cubic_rows: Vec<Vec<String>> = if solution.c_cubic.is_empty() {
        vec![vec!["(all zero)".to_string()]]
    } else {
        solution
            .c_cubic
            .iter()
            .map(|(&(mu, nu, rho, sigma), v)| {
                vec![format!("C[{mu}{nu}]^{rho}_{sigma}"), v.to_string()]
            })
            .collect()
    };
    info_report()
        .section("linear block (rows eta, columns rho)", linear_rows)
        .section("pair-indexed block, nonzero entries", cubic_rows)
        .section(
            "solution space",
            vec![vec![format!("nullspace dimension = {}", solution.nullspace.len())]],
        )
}

fn quotient_report(
    name: &str,
    algebra: &LieAlgebra,
    ideal: &[String],
) -> Result<Report, UsageError> {
    let mut indices = Vec::new();
    for gen in ideal {
        let idx = algebra
            .index_of(gen)
            .ok_or_else(|| UsageError(format!("unknown generator `{gen}`")))?;
        indices.push(idx);
    }
    match quotient_algebra(algebra, &indices) {
        Ok(quotient) => Ok(jacobi_warning(Report::pass(), algebra).section(
            "quotient algebra",
            emit_algebra(&format!("{name}-quotient"), &quotient)
                .lines()
                .map(|l| vec![l.to_string()])
                .collect(),
        )),
        Err(Error::NotAnIdeal) => Ok(jacobi_warning(Report::fail(), algebra).section(
            "error",
            vec![vec!["the given generators do not span an ideal".to_string()]],
        )),
        Err(e) => Err(UsageError(e.to_string())),
    }
}
