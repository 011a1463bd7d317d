use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use stablulc_core::factory::{self, CounterexampleSeed, CssCode, FactoryError};
use stablulc_core::gf2::BitMatrix;
use stablulc_core::graph::EmbeddedGraph;
use stablulc_core::matroid::{self, BinaryMatroid, MatroidError, ScreenOutcome};
use stablulc_core::oracle::{dlc_feasible, OracleError, QuadraticFormState, MAX_DENSE_QUBITS};
use stablulc_core::stabilizer::{msc_certificate, EnumCap, MscOutcome, StabilizerGroup};
use stablulc_core::surface::{
    grid_minimality_certificate, lulc_certificate, SurfaceCode, SurfaceError, SurfaceOutcome,
};

#[derive(Parser)]
#[command(
    name = "stablulc",
    version,
    about = "LU vs LC equivalence tooling for stabilizer states"
)]
struct Cli {
    /// Append build and run metadata after the report.
    #[arg(long, global = true)]
    stamp: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal support condition for a stabilizer state.
    AnalyzeState {
        #[arg(long)]
        state: PathBuf,
    },
    /// LU = LC certificate for a surface-code state on an embedded graph.
    SurfaceCertify {
        #[arg(long)]
        graph: PathBuf,
        /// Number of logical X operators added to the stabilizer.
        #[arg(long, default_value_t = 0)]
        l: usize,
        /// Also report which qubits every transversal logical gate forces Clifford.
        #[arg(long)]
        transversal: bool,
    },
    /// Minimality certificate for the cluster state on a grid.
    GridCertify {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
    /// Screens the CSS state with generator matrix G and parity-check matrix H.
    MatroidScreen {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: PathBuf,
    },
    /// Searches for a minor of one binary matroid in another.
    MatroidMinor {
        #[arg(long)]
        matroid: PathBuf,
        #[arg(long)]
        minor: PathBuf,
    },
    /// Code lengths reachable from a 27-qubit seed.
    FactoryLengths {
        #[arg(long, conflicts_with = "max")]
        n: Option<usize>,
        /// List every reachable length up to this bound.
        #[arg(long)]
        max: Option<usize>,
        /// Only use the distance-3 Reed-Muller codes.
        #[arg(long)]
        rm_only: bool,
    },
    /// Encodes one qubit of a seed pair with a CSS code.
    FactoryEncode {
        #[arg(long)]
        seed: PathBuf,
        /// 1-based qubit to encode.
        #[arg(long)]
        qubit: usize,
        #[arg(
            long,
            value_enum,
            conflicts_with = "code_file",
            required_unless_present = "code_file"
        )]
        code: Option<BuiltinCode>,
        #[arg(long)]
        code_file: Option<PathBuf>,
        /// Write the encoded seed here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Check the encoded pair with the dense oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Diagonal local Clifford feasibility for a seed or quadratic-form state.
    DlcCheck {
        #[arg(long)]
        seed: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BuiltinCode {
    Rep2,
    Rm15,
    Rm31,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    NoProof,
}

struct Report {
    text: String,
    status: Status,
}

impl Report {
    fn ok(text: String) -> Self {
        Self {
            text,
            status: Status::Ok,
        }
    }

    fn no_proof(text: String) -> Self {
        Self {
            text,
            status: Status::NoProof,
        }
    }
}

#[derive(Debug)]
struct InputError(String);

impl InputError {
    fn at(path: &Path, e: impl std::fmt::Display) -> Self {
        Self(format!("{}: {e}", path.display()))
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError::at(path, e))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            // Usage errors share the input-error code; exit 2 means "no proof".
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let cap = match EnumCap::from_env() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match run(&cli.command, cap) {
        Ok(report) => {
            print!("{}", report.text);
            if cli.stamp {
                print_stamp(cap);
            }
            match report.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::NoProof => ExitCode::from(2),
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn print_stamp(cap: EnumCap) {
    let secs = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map_or(0, |d| d.as_secs());
    println!("--- stamp");
    println!("version: {}", env!("CARGO_PKG_VERSION"));
    println!("enum-cap: {}", cap.0);
    println!("unix-time: {secs}");
}

fn run(command: &Command, cap: EnumCap) -> Result<Report, InputError> {
    match command {
        Command::AnalyzeState { state } => analyze_state(state, cap),
        Command::SurfaceCertify {
            graph,
            l,
            transversal,
        } => surface_certify(graph, *l, *transversal, cap),
        Command::GridCertify { rows, cols } => grid_certify(*rows, *cols, cap),
        Command::MatroidScreen { g, h } => matroid_screen(g, h, cap),
        Command::MatroidMinor { matroid, minor } => matroid_minor(matroid, minor),
        Command::FactoryLengths { n, max, rm_only } => factory_lengths(*n, *max, *rm_only),
        Command::FactoryEncode {
            seed,
            qubit,
            code,
            code_file,
            out,
            verify,
        } => factory_encode(
            seed,
            *qubit,
            *code,
            code_file.as_deref(),
            out.as_deref(),
            *verify,
            cap,
        ),
        Command::DlcCheck { seed } => dlc_check(seed),
    }
}

fn analyze_state(path: &Path, cap: EnumCap) -> Result<Report, InputError> {
    let s = StabilizerGroup::parse(&read(path)?).map_err(|e| InputError::at(path, e))?;
    let mut out = format!(
        "qubits: {}\nrank: {}\ncss: {}\n",
        s.num_qubits(),
        s.rank(),
        s.is_css()
    );
    if !s.is_state() {
        let _ = writeln!(out, "HYPOTHESIS_FAILED reason=not-a-state");
        return Ok(Report::no_proof(out));
    }
    match msc_certificate(&s, cap).map_err(|e| InputError::at(path, e))? {
        MscOutcome::Certified { hypothesis } => {
            let _ = writeln!(out, "CERTIFIED theorem=msc details=hypothesis={hypothesis}");
            Ok(Report::ok(out))
        }
        MscOutcome::Inconclusive(why) => {
            let _ = writeln!(
                out,
                "INCONCLUSIVE reason={}",
                why.to_string().replace(' ', ",")
            );
            Ok(Report::no_proof(out))
        }
    }
}

fn surface_certify(
    path: &Path,
    l: usize,
    transversal: bool,
    cap: EnumCap,
) -> Result<Report, InputError> {
    let graph = EmbeddedGraph::parse(&read(path)?).map_err(|e| InputError::at(path, e))?;
    let mut out = format!(
        "vertices: {}\nedges: {}\nfaces: {}\n",
        graph.num_vertices(),
        graph.num_edges(),
        graph.num_faces()
    );
    let code = match SurfaceCode::build(&graph) {
        Ok(c) => c,
        Err(SurfaceError::Hypothesis(r)) => return Ok(hypothesis_failed(out, &r)),
        Err(e) => return Err(InputError::at(path, e)),
    };
    let state = code.state(l).map_err(|e| InputError::at(path, e))?;
    let outcome = match lulc_certificate(&state, cap) {
        Ok(o) => o,
        Err(SurfaceError::Hypothesis(r)) => SurfaceOutcome::HypothesisFailed(r.replace(' ', "-")),
        Err(e) => return Err(InputError::at(path, e)),
    };
    let _ = writeln!(out, "{outcome}");
    if transversal && outcome.is_certified() {
        let cert = code
            .transversal_certificate(cap)
            .map_err(|e| InputError::at(path, e))?;
        let _ = writeln!(
            out,
            "transversal: forced-clifford={}/{} conclusion={}",
            cert.forced_clifford.weight(),
            cert.num_qubits,
            cert.conclusion().replace(' ', "-")
        );
    }
    Ok(if outcome.is_certified() {
        Report::ok(out)
    } else {
        Report::no_proof(out)
    })
}

fn hypothesis_failed(mut out: String, reason: &str) -> Report {
    let _ = writeln!(out, "HYPOTHESIS_FAILED reason={}", reason.replace(' ', "-"));
    Report::no_proof(out)
}

fn grid_certify(rows: usize, cols: usize, cap: EnumCap) -> Result<Report, InputError> {
    if rows == 0 || cols == 0 {
        return Err(InputError("grid dimensions must be positive".into()));
    }
    let outcome =
        grid_minimality_certificate(rows, cols, cap).map_err(|e| InputError(e.to_string()))?;
    let text = format!("{outcome}\n");
    Ok(if outcome.is_certified() {
        Report::ok(text)
    } else {
        Report::no_proof(text)
    })
}

fn read_matrix(path: &Path) -> Result<BitMatrix, InputError> {
    BitMatrix::parse(&read(path)?).map_err(|e| InputError::at(path, e))
}

fn matroid_screen(g_path: &Path, h_path: &Path, cap: EnumCap) -> Result<Report, InputError> {
    let g = read_matrix(g_path)?;
    let h = read_matrix(h_path)?;
    match matroid::css_counterexample_screen(&g, &h, cap) {
        Ok(outcome @ ScreenOutcome::RuledOut(_)) => Ok(Report::ok(format!("{outcome}\n"))),
        Ok(outcome @ ScreenOutcome::Inconclusive { .. }) => {
            let ScreenOutcome::Inconclusive { graphic, cographic } = &outcome else {
                unreachable!()
            };
            let mut out = format!("{outcome}\n");
            for (kind, (minor, w)) in [("graphic", graphic), ("cographic", cographic)] {
                let _ = writeln!(
                    out,
                    "not-{kind}: minor={minor} deleted={} contracted={}",
                    list(&w.deleted),
                    list(&w.contracted)
                );
            }
            Ok(Report::no_proof(out))
        }
        Err(MatroidError::Hypothesis(r)) => Ok(hypothesis_failed(String::new(), &r)),
        Err(MatroidError::NotOrthogonal) => {
            Ok(hypothesis_failed(String::new(), "G and H not orthogonal"))
        }
        Err(e) => Err(InputError(e.to_string())),
    }
}

fn list(labels: &[String]) -> String {
    if labels.is_empty() {
        "-".into()
    } else {
        labels.join(",")
    }
}

fn matroid_minor(m_path: &Path, n_path: &Path) -> Result<Report, InputError> {
    let m = BinaryMatroid::parse(&read(m_path)?).map_err(|e| InputError::at(m_path, e))?;
    let n = BinaryMatroid::parse(&read(n_path)?).map_err(|e| InputError::at(n_path, e))?;
    let found = m.find_minor(&n).map_err(|e| InputError(e.to_string()))?;
    Ok(Report::ok(match found {
        Some(w) => format!(
            "MINOR deleted={} contracted={}\n",
            list(&w.deleted),
            list(&w.contracted)
        ),
        None => "NO_MINOR\n".into(),
    }))
}

fn factory_lengths(
    n: Option<usize>,
    max: Option<usize>,
    rm_only: bool,
) -> Result<Report, InputError> {
    let plan = if rm_only {
        factory::length_plan_rm
    } else {
        factory::length_plan
    };
    match (n, max) {
        (Some(n), _) => Ok(Report::ok(match plan(n) {
            Some(p) => format!("{p}\n"),
            None => format!("n={n} NONE\n"),
        })),
        (None, Some(max)) => {
            let plans = if rm_only {
                factory::enumerate_rm_lengths(max)
            } else {
                factory::enumerate_lengths(max)
            };
            let mut out = String::new();
            for p in plans {
                let _ = writeln!(out, "{p}");
            }
            Ok(Report::ok(out))
        }
        (None, None) => Err(InputError("one of --n or --max is required".into())),
    }
}

fn factory_encode(
    seed_path: &Path,
    qubit: usize,
    builtin: Option<BuiltinCode>,
    code_file: Option<&Path>,
    out_path: Option<&Path>,
    verify: bool,
    cap: EnumCap,
) -> Result<Report, InputError> {
    let seed =
        CounterexampleSeed::parse(&read(seed_path)?).map_err(|e| InputError::at(seed_path, e))?;
    let code: CssCode = match (builtin, code_file) {
        (Some(BuiltinCode::Rep2), _) => factory::rep2(),
        (Some(BuiltinCode::Rm15), _) => factory::rm15(),
        (Some(BuiltinCode::Rm31), _) => factory::rm31(),
        (None, Some(p)) => CssCode::parse(&read(p)?).map_err(|e| InputError::at(p, e))?,
        (None, None) => {
            return Err(InputError(
                "one of --code or --code-file is required".into(),
            ))
        }
    };
    if qubit == 0 {
        return Err(InputError("qubits are numbered from 1".into()));
    }
    let encoded = match factory::encode_pair(&seed, qubit - 1, &code, cap) {
        Ok(e) => e,
        Err(e @ (FactoryError::NoTransversal { .. } | FactoryError::ConstantQubit(_))) => {
            return Ok(hypothesis_failed(String::new(), &e.to_string()));
        }
        Err(e) => return Err(InputError(e.to_string())),
    };
    let mut out = String::new();
    match out_path {
        Some(p) => {
            std::fs::write(p, encoded.to_text()).map_err(|e| InputError::at(p, e))?;
            let _ = writeln!(
                out,
                "wrote {} qubits to {}",
                encoded.num_qubits(),
                p.display()
            );
        }
        None => out.push_str(&encoded.to_text()),
    }
    if verify {
        if encoded.num_qubits() > MAX_DENSE_QUBITS {
            let _ = writeln!(out, "verify: skipped ({} qubits)", encoded.num_qubits());
        } else {
            let ok = encoded.verify().map_err(|e| InputError(e.to_string()))?;
            let _ = writeln!(out, "verify: dlu-pair={ok}");
        }
    }
    Ok(Report::ok(out))
}

fn dlc_check(path: &Path) -> Result<Report, InputError> {
    let text = read(path)?;
    // A bare quadratic-form state is accepted as well as a seed.
    let (form, seed) = match CounterexampleSeed::parse(&text) {
        Ok(s) => (s.form.clone(), Some(s)),
        Err(seed_err) => match QuadraticFormState::parse(&text) {
            Ok(f) => (f, None),
            Err(OracleError::Parse(_)) => return Err(InputError::at(path, seed_err)),
            Err(e) => return Err(InputError::at(path, e)),
        },
    };
    let mut out = format!("qubits: {}\ndim: {}\n", form.num_qubits(), form.dim());
    let assignment = dlc_feasible(&form).map_err(|e| InputError::at(path, e))?;
    match &assignment {
        Some(a) => {
            let a: Vec<String> = a.iter().map(u8::to_string).collect();
            let _ = writeln!(out, "DLC_FEASIBLE a={}", a.join(" "));
        }
        None => {
            let _ = writeln!(out, "DLC_INFEASIBLE");
        }
    }
    if let Some(seed) = seed {
        if seed.num_qubits() <= MAX_DENSE_QUBITS {
            let dlu = seed.verify().map_err(|e| InputError::at(path, e))?;
            let _ = writeln!(out, "dlu-pair: {dlu}");
            if dlu && assignment.is_none() {
                let _ = writeln!(out, "LU_NOT_LC");
            }
        } else {
            let _ = writeln!(out, "dlu-pair: unchecked ({} qubits)", seed.num_qubits());
        }
    }
    Ok(Report::ok(out))
}
