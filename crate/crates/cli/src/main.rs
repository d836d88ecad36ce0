use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use unital_graphs::graphs::{self, Format, Graph};
use unital_graphs::hermitian::CurveData;
use unital_graphs::pgu::analysis::GroupAnalysis;
use unital_graphs::pgu::Pgu;
use unital_graphs::projplane::Conic;
use unital_graphs::report::{self, VerifyReport};
use unital_graphs::towers::{self, PairMatrices, Pipeline};
use unital_graphs::{reference, Error, FieldCtx};

#[derive(Parser)]
#[command(name = "unital", version, about = "Strongly regular graphs from conics totally tangent to a Hermitian curve")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct RunConfig {
    /// Odd prime q; the field is GF(q^2).
    #[arg(long, global = true, default_value_t = 5)]
    q: u32,
    /// Output directory for artifacts.
    #[arg(long, global = true, env = "UNITAL_OUT", default_value = "out")]
    out: PathBuf,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Stages to run; repeat the flag to select several (default: all).
    #[arg(long, global = true, value_enum)]
    stage: Vec<Stage>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Stage {
    Curve,
    Conics,
    Matrices,
    Graphs,
    Group,
}

#[derive(Subcommand)]
enum Command {
    /// Compute and write all artifacts.
    Build,
    /// Run the verification suite and write verify_report.json.
    Verify,
    /// Write one graph in the requested format.
    Export {
        /// g, hs1, hs2, hs3, higman_sims_12, higman_sims_13, higman_sims_23, haemers or mclaughlin
        graph: String,
        /// graph6, adjacency-json or edge-list
        #[arg(long, default_value = "graph6")]
        format: String,
    },
    /// Print a table for x^2+y^2+z^2 and its component.
    Tables {
        /// 1 component equations, 2 T(7) labels, 3 intersection classes,
        /// 4 partner cliques, 5 pair stabilizers
        which: u8,
    },
}

enum CliError {
    Usage(String),
    Config(String),
    Io(PathBuf, std::io::Error),
    Core(Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// `println!` that exits quietly when stdout is closed early, as under `head`.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout().lock(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
        }
    }};
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.config.threads {
        if n == 0 {
            eprintln!("configuration error: --threads must be positive");
            return ExitCode::from(2);
        }
        // only fails if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let result = match &cli.command {
        Command::Build => cmd_build(&cli.config).map(|_| true),
        Command::Verify => cmd_verify(&cli.config),
        Command::Export { graph, format } => cmd_export(&cli.config, graph, format).map(|_| true),
        Command::Tables { which } => cmd_tables(&cli.config, *which).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("{e}");
            match e {
                CliError::Core(Error::Falsified(_)) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

impl RunConfig {
    fn wants(&self, stage: Stage) -> bool {
        self.stage.is_empty() || self.stage.contains(&stage)
    }

    fn field(&self) -> CliResult<FieldCtx> {
        Ok(FieldCtx::new(self.q)?)
    }

    fn ensure_out(&self) -> CliResult<()> {
        fs::create_dir_all(&self.out).map_err(|e| CliError::Io(self.out.clone(), e))
    }

    fn path(&self, name: &str) -> PathBuf {
        self.out.join(name)
    }
}

fn write(path: &Path, bytes: &[u8]) -> CliResult<()> {
    fs::write(path, bytes).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn to_json<T: serde::Serialize>(value: &T) -> CliResult<Vec<u8>> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Config(e.to_string()))?;
    s.push('\n');
    Ok(s.into_bytes())
}

const MATRIX_FILES: [&str; 3] = ["m0.bin", "m1.bin", "m2.bin"];

/// Reads the pair matrices from the output directory when all three files
/// are present with the right size.
fn load_matrices(config: &RunConfig, n: usize) -> Option<PairMatrices> {
    let read: Vec<Vec<u8>> = MATRIX_FILES
        .iter()
        .map(|name| fs::read(config.path(name)).ok().filter(|b| b.len() == n * n))
        .collect::<Option<_>>()?;
    let [m0, m1, m2]: [Vec<u8>; 3] = read.try_into().ok()?;
    PairMatrices::from_raw(n, m0, m1, m2).ok()
}

fn pipeline(config: &RunConfig, curve: CurveData) -> CliResult<Pipeline> {
    let n = curve.conics().len();
    let matrices = match load_matrices(config, n) {
        Some(m) => m,
        None => PairMatrices::compute(&curve),
    };
    Ok(Pipeline::from_parts(curve, matrices)?)
}

/// File name of each exported graph under `build`.
fn graph_file(name: &str) -> Option<String> {
    match name {
        "hs1" | "hs2" | "hs3" => Some(format!("hs_{}.g6", &name[2..])),
        "higman_sims_12" | "higman_sims_13" | "higman_sims_23" | "haemers" | "mclaughlin" => {
            Some(format!("{name}.g6"))
        }
        _ => None,
    }
}

fn cmd_build(config: &RunConfig) -> CliResult<()> {
    let f = config.field()?;
    config.ensure_out()?;
    let curve = CurveData::build(&f)?;
    if config.wants(Stage::Curve) || config.wants(Stage::Conics) {
        write(&config.path("curve.json"), curve.to_json()?.as_bytes())?;
    }
    let summary = format!(
        "points={} secants={} conics={}",
        curve.points().len(),
        curve.secants().len(),
        curve.conics().len()
    );
    if f.q() != 5 {
        // the decomposition pipeline exists only for q = 5
        if config.wants(Stage::Group) {
            let g = Pgu::enumerate(&curve)?;
            let base = curve
                .conic_index(&Conic::fermat(&f))
                .ok_or_else(|| Error::falsified("x^2 + y^2 + z^2 is not totally tangent"))?;
            let report = BTreeMap::from([
                ("order", g.order()),
                ("conic_stabilizer", g.stabilizer_of_conic(&curve, base).order()),
                ("conic_orbit", g.conic_transversal(&curve, base)?.len()),
            ]);
            write(&config.path("group_report.json"), &to_json(&report)?)?;
        }
        out!("{summary}");
        return Ok(());
    }
    let p = pipeline(config, curve)?;
    if config.wants(Stage::Matrices) {
        for (name, bytes) in MATRIX_FILES.iter().zip(p.matrices().raw()) {
            write(&config.path(name), bytes)?;
        }
    }
    if config.wants(Stage::Graphs) {
        write(&config.path("pipeline.json"), &to_json(&p.summary())?)?;
        for (name, graph) in report::named_graphs(&p) {
            if let Some(file) = graph_file(&name) {
                let mut text = graphs::to_graph6(&graph);
                text.push('\n');
                write(&config.path(&file), text.as_bytes())?;
            }
        }
    }
    if config.wants(Stage::Group) {
        let g = Pgu::enumerate(p.curve())?;
        let mut scratch = VerifyReport::new(5);
        let group = report::verify_group(&mut scratch, &p, &g)?;
        write(&config.path("group_report.json"), &to_json(&group)?)?;
    }
    out!("{summary} components={}", p.decompositions().len());
    Ok(())
}

fn cmd_verify(config: &RunConfig) -> CliResult<bool> {
    let f = config.field()?;
    config.ensure_out()?;
    let curve = CurveData::build(&f)?;
    let mut r = VerifyReport::new(f.q());
    report::verify_basics(&mut r, &curve)?;
    if f.q() == 5 {
        let p = pipeline(config, curve)?;
        report::verify_pipeline(&mut r, &p)?;
        let named = report::named_graphs(&p);
        report::verify_exports(&mut r, &named);
        for (name, graph) in &named {
            let Some(file) = graph_file(name) else { continue };
            let path = config.path(&file);
            match fs::read_to_string(&path) {
                Ok(text) => {
                    let parsed = graphs::from_graph6(text.trim_end());
                    r.flag(&format!("stored {file} decodes to the computed graph"), "export", parsed.as_ref() == Ok(graph));
                }
                Err(_) => {
                    let mut text = graphs::to_graph6(graph);
                    text.push('\n');
                    write(&path, text.as_bytes())?;
                }
            }
        }
        let g = Pgu::enumerate(p.curve())?;
        let group = report::verify_group(&mut r, &p, &g)?;
        write(&config.path("group_report.json"), &to_json(&group)?)?;
    } else {
        let g = Pgu::enumerate(&curve)?;
        report::verify_small_q(&mut r, &curve, &g)?;
    }
    r.finish();
    write(&config.path("verify_report.json"), &to_json(&r)?)?;
    for c in &r.checks {
        out!("{} [{}] {}: expected {}, observed {}", if c.pass { "PASS" } else { "FAIL" }, c.topic, c.name, c.expected, c.observed);
    }
    for missing in &r.missing_operations {
        out!("FAIL [coverage] operation not exercised: {missing}");
    }
    out!("{} of {} checks passed", r.checks.iter().filter(|c| c.pass).count(), r.checks.len());
    Ok(r.passed)
}

fn cmd_export(config: &RunConfig, name: &str, format: &str) -> CliResult<()> {
    let format: Format = format.parse().map_err(|e: Error| CliError::Usage(e.to_string()))?;
    let known = name == "g" || graph_file(name).is_some();
    if !known {
        return Err(CliError::Usage(format!("unknown graph `{name}`")));
    }
    let f = config.field()?;
    if f.q() != 5 {
        return Err(CliError::Config("graphs are built only for q = 5".into()));
    }
    config.ensure_out()?;
    let p = pipeline(config, CurveData::build(&f)?)?;
    let graph: Graph = report::named_graphs(&p)
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, g)| g)
        .ok_or_else(|| CliError::Usage(format!("unknown graph `{name}`")))?;
    let ext = match format {
        Format::Graph6 => "g6",
        Format::AdjacencyJson => "json",
        Format::EdgeList => "txt",
    };
    let path = config.path(&format!("{name}.{ext}"));
    let mut bytes = graphs::export(&graph, format)?;
    if format == Format::Graph6 {
        bytes.push(b'\n');
    }
    write(&path, &bytes)?;
    out!("{}", path.display());
    Ok(())
}

fn cmd_tables(config: &RunConfig, which: u8) -> CliResult<()> {
    if !(1..=5).contains(&which) {
        return Err(CliError::Usage(format!("unknown table {which}; choose 1 to 5")));
    }
    let f = config.field()?;
    if f.q() != 5 {
        return Err(CliError::Config("tables are defined for q = 5".into()));
    }
    let p = pipeline(config, CurveData::build(&f)?)?;
    let curve = p.curve();
    let base = curve
        .conic_index(&Conic::fermat(&f))
        .ok_or_else(|| Error::falsified("x^2 + y^2 + z^2 is not totally tangent"))?;
    let d = p.decomposition_of(base);
    let eq = |c: usize| curve.conics()[c].conic.equation();
    match which {
        1 => {
            for &c in &p.decompositions()[d] {
                out!("{c:>5}  {}", eq(c));
            }
            let published: std::collections::BTreeSet<Option<usize>> = reference::BASE_DECOMPOSITION
                .iter()
                .map(|(_, _, e)| Conic::parse(&f, e).ok().and_then(|c| curve.conic_index(&c)))
                .collect();
            let ours: std::collections::BTreeSet<Option<usize>> = p.decompositions()[d].iter().map(|&c| Some(c)).collect();
            out!("matches the published list: {}", if published == ours { "yes" } else { "no" });
        }
        2 => {
            let labeling = &p.labelings()[d];
            let mut rows: Vec<((u8, u8), usize)> =
                labeling.labels.iter().copied().zip(p.decompositions()[d].iter().copied()).collect();
            rows.sort();
            for ((i, j), c) in rows {
                out!("{{{},{}}}  {c:>5}  {}", i + 1, j + 1, eq(c));
            }
        }
        3 => {
            out!("{:>2} {:>2}  {:<12} {:>5}  example", "a", "s", "n", "N");
            out!("{:>2} {:>2}  {:<12} {:>5}  {}", "-", "-", "(self)", 1, eq(base));
            for row in towers::classification_table(curve, p.matrices(), base)? {
                let c = row.class;
                out!(
                    "{:>2} {:>2}  {:<12} {:>5}  {}",
                    c.shared_points,
                    c.shared_secants,
                    format!("{:?}", c.pattern),
                    row.count,
                    row.example.equation()
                );
            }
        }
        4 => {
            let pairing = towers::six_clique_pairs(&p)?;
            for (k, clique) in pairing.cliques.iter().enumerate().filter(|(_, k)| k.contains(&base)) {
                out!("clique: {clique:?}");
                for &c in &pairing.cliques[pairing.partner[k]] {
                    out!("  partner {c:>5}  {}", eq(c));
                }
            }
        }
        _ => {
            let g = Pgu::enumerate(curve)?;
            let a = GroupAnalysis::new(&p, &g)?;
            let table = a.pair_stabilizer_table()?;
            out!("{:>2} {:>2}  {:<12} {:<6} {:>5} {:>7}", "a", "s", "n", "stab", "N", "orbits");
            for row in &table.rows {
                let (a_, s_, n_) = match row.class {
                    Some(c) => (c.shared_points.to_string(), c.shared_secants.to_string(), format!("{:?}", c.pattern)),
                    None => ("-".into(), "-".into(), "(self)".into()),
                };
                out!("{a_:>2} {s_:>2}  {n_:<12} {:<6} {:>5} {:>7}", row.stabilizer.to_string(), row.count, row.orbits);
            }
            out!("orbits: {}", table.orbit_count);
        }
    }
    Ok(())
}
