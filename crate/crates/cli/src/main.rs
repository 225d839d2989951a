mod error;
mod schema;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use cleftlab::algebra::Algebra;
use cleftlab::cleft::{theta_extension, CleftInstance};
use cleftlab::harness::{
    catalog_bruteforce, instance_catalogs, interval_catalog, shipped_instance, verify, Outcome, Statement,
    VerificationReport, VerifyOptions, DEFAULT_CATALOG_BOUND, DEFAULT_ENUMERATION_BUDGET, SHIPPED, TOR_OBSTRUCTION,
};
use cleftlab::homology::{minimal_presentation, Presentation};
use cleftlab::rep::{IsoBudget, Module, ThetaData};
use cleftlab::silting::{
    is_cosilting, is_n_tilting, is_silting, is_support_tau_tilting_within, is_tau_rigid, support_presentation, Catalog,
};

use error::{CliError, Context};
use schema::{read_json, Artifact, BimoduleFile, ModuleFile, QuiverFile, ThetaFile};

/// Exact checks of silting-type predicates and of lifting/descent
/// statements along cleft extensions of finite-dimensional algebras.
#[derive(Parser, Debug)]
#[command(name = "cleftlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    config: RunConfig,
}

#[derive(Args, Debug, Clone)]
struct RunConfig {
    /// Prime field F_p, p ∈ {2, 3, 5, 7}.
    #[arg(long, global = true)]
    field: Option<u32>,
    /// Catalogs are complete up to this total dimension.
    #[arg(long, global = true, default_value_t = DEFAULT_CATALOG_BOUND)]
    catalog_bound: usize,
    /// Largest n accepted for n-tilting checks.
    #[arg(long, global = true, default_value_t = 4)]
    pd_bound: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest number of combinations swept by an isomorphism test.
    #[arg(long, global = true)]
    budget_iso: Option<u128>,
    /// Largest number of candidate modules generated by catalog enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
    budget_enum: u128,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

impl RunConfig {
    fn iso_budget(&self) -> IsoBudget {
        self.budget_iso.map(IsoBudget::with_limit).unwrap_or_default()
    }

    fn options(&self) -> VerifyOptions {
        VerifyOptions {
            seed: self.seed,
            iso_budget: self.iso_budget(),
            pd_bound: self.pd_bound,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build and validate an algebra or a θ-extension artifact.
    Build {
        /// Quiver with relations (JSON).
        #[arg(long)]
        quiver: PathBuf,
        /// R-R-bimodule M; with it the artifact is the instance R ⋉_θ M.
        #[arg(long)]
        bimodule: Option<PathBuf>,
        /// Structure constants of θ: M ⊗ M → M; zero when absent.
        #[arg(long, requires = "bimodule")]
        theta: Option<PathBuf>,
        #[arg(long, default_value = "instance")]
        name: String,
    },
    /// Decide a predicate for one module.
    Check {
        kind: CheckKind,
        /// Algebra artifact written by `build`.
        algebra: PathBuf,
        /// Module file (action or representation form).
        module: PathBuf,
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Presentation used by the silting check.
        #[arg(long, value_enum, default_value_t = PresentationKind::Support)]
        presentation: PresentationKind,
    },
    /// Check a statement exhaustively over catalog modules of an instance.
    Verify {
        statement: Statement,
        /// Instance artifact, or one of the shipped instance names.
        instance: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum CheckKind {
    TauRigid,
    Silting,
    SupportTauTilting,
    NTilting,
    Cosilting,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum PresentationKind {
    Minimal,
    Support,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(e.exit_code());
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("CLEFTLAB_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::schema("CLEFTLAB_THREADS", format!("expected a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::schema("CLEFTLAB_THREADS", e.to_string()))
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Build {
            quiver,
            bimodule,
            theta,
            name,
        } => cmd_build(cfg, quiver, bimodule.as_deref(), theta.as_deref(), name),
        Command::Check {
            kind,
            algebra,
            module,
            n,
            presentation,
        } => cmd_check(cfg, *kind, algebra, module, *n, *presentation),
        Command::Verify { statement, instance, n } => cmd_verify(cfg, *statement, instance, *n),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Missing(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Missing(format!("standard output: {e}")))
        }
    }
}

fn print_validation(label: &str, report: &cleftlab::algebra::ValidationReport) {
    for c in &report.checks {
        match &c.witness {
            None => eprintln!("ok    {label}: {}", c.name),
            Some(w) => eprintln!("FAIL  {label}: {}: {w}", c.name),
        }
    }
}

fn cmd_build(
    cfg: &RunConfig,
    quiver: &Path,
    bimodule: Option<&Path>,
    theta: Option<&Path>,
    name: &str,
) -> Result<u8, CliError> {
    let qloc = quiver.display().to_string();
    let qf: QuiverFile = read_json(quiver)?;
    let a = qf.build(cfg.field, &qloc)?;
    let report = a.validate();
    print_validation("algebra", &report);
    schema::ensure_valid(&report, &qloc)?;
    let artifact = match bimodule {
        None => {
            eprintln!("algebra of dimension {} with {} vertices", a.dim(), a.num_vertices());
            Artifact::Algebra { algebra: a.to_parts() }
        }
        Some(bpath) => {
            let r = Arc::new(a);
            let bloc = bpath.display().to_string();
            let bf: BimoduleFile = read_json(bpath)?;
            let m = bf.build(&r, &bloc)?;
            let tf: Option<ThetaFile> = theta.map(read_json).transpose()?;
            let th = match (&tf, theta) {
                (Some(t), Some(p)) => t.build(m, &p.display().to_string())?,
                _ => ThetaData::zero(m),
            };
            let c = theta_extension(name, &r, th).at(&bloc)?;
            let report = c.validate();
            print_validation("instance", &report);
            schema::ensure_valid(&report, name)?;
            eprintln!("instance {name}: dim R = {}, dim T = {}", c.base.dim(), c.total.dim());
            Artifact::Instance {
                name: name.to_string(),
                base: r.to_parts(),
                bimodule: bf,
                theta: tf,
                total: c.total.to_parts(),
            }
        }
    };
    let mut text = serde_json::to_string_pretty(&artifact).expect("artifact serializes");
    text.push('\n');
    emit(cfg.out.as_deref(), &text)?;
    Ok(0)
}

/// Catalog used by the catalog-based predicates: intervals for type A
/// quivers, brute force otherwise.
fn catalog_for(a: &Arc<Algebra>, cfg: &RunConfig) -> Result<Catalog, CliError> {
    match interval_catalog(a) {
        Ok(c) => Ok(c),
        Err(_) => catalog_bruteforce(a, cfg.catalog_bound, cfg.seed, cfg.budget_enum).at("catalog"),
    }
}

fn vertex_names(a: &Algebra, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| a.vertex_labels()[v].clone()).collect()
}

fn describe(a: &Algebra, p: &Presentation) -> serde_json::Value {
    json!({
        "p1": vertex_names(a, p.p1().vertices()),
        "p0": vertex_names(a, p.p0().vertices()),
        "minimal": p.minimal,
    })
}

fn cmd_check(
    cfg: &RunConfig,
    kind: CheckKind,
    algebra: &Path,
    module: &Path,
    n: usize,
    presentation: PresentationKind,
) -> Result<u8, CliError> {
    let a = schema::load_algebra(algebra)?;
    if let Some(p) = cfg.field {
        if p != a.field().p() {
            return Err(CliError::schema(
                algebra.display().to_string(),
                format!("algebra over F_{}, --field {p}", a.field().p()),
            ));
        }
    }
    let mloc = module.display().to_string();
    let mf: ModuleFile = read_json(module)?;
    let y: Module = mf.build(&a, &mloc)?;
    let mut evidence = serde_json::Map::new();
    evidence.insert("kind".into(), json!(kind));
    evidence.insert("module_dim".into(), json!(y.dim()));
    evidence.insert("dim_vector".into(), json!(y.dim_vector()));
    let verdict = match kind {
        CheckKind::TauRigid => {
            evidence.insert("presentation".into(), describe(&a, &minimal_presentation(&y)));
            is_tau_rigid(&y).at(&mloc)?
        }
        CheckKind::SupportTauTilting => {
            evidence.insert("seed".into(), json!(cfg.seed));
            is_support_tau_tilting_within(&y, cfg.seed, &cfg.iso_budget()).at(&mloc)?
        }
        CheckKind::NTilting => {
            if n > cfg.pd_bound {
                return Err(CliError::Inconclusive(format!(
                    "n = {n} exceeds --pd-bound {}",
                    cfg.pd_bound
                )));
            }
            evidence.insert("n".into(), json!(n));
            evidence.insert("pd_bound".into(), json!(cfg.pd_bound));
            is_n_tilting(&y, n).at(&mloc)?
        }
        CheckKind::Silting | CheckKind::Cosilting => {
            let cat = catalog_for(&a, cfg)?;
            let v = if kind == CheckKind::Silting {
                let p = match presentation {
                    PresentationKind::Minimal => minimal_presentation(&y),
                    PresentationKind::Support => support_presentation(&y),
                };
                evidence.insert("presentation".into(), describe(&a, &p));
                is_silting(&y, &p.sigma, &cat).at(&mloc)?
            } else {
                evidence.insert(
                    "presentation".into(),
                    json!("dual of the support presentation of D(module) over the opposite algebra"),
                );
                is_cosilting(&y, &cat).at(&mloc)?
            };
            evidence.insert("catalog".into(), json!(v.scope));
            evidence.insert("catalog_bound".into(), json!(cfg.catalog_bound));
            if let Some(w) = &v.witness {
                evidence.insert("witness".into(), json!(w));
            }
            v.holds
        }
    };
    evidence.insert("verdict".into(), json!(verdict));
    let mut text = serde_json::to_string(&evidence).expect("evidence serializes");
    text.push('\n');
    emit(cfg.out.as_deref(), &text)?;
    eprintln!(
        "{}: {verdict}",
        serde_json::to_value(kind).unwrap().as_str().unwrap_or_default()
    );
    Ok(0)
}

fn resolve_instance(cfg: &RunConfig, instance: &str) -> Result<CleftInstance, CliError> {
    let path = Path::new(instance);
    if path.exists() {
        return schema::load_instance(path);
    }
    if SHIPPED.contains(&instance) || instance == TOR_OBSTRUCTION {
        let f = schema::field(cfg.field.unwrap_or(2), "--field")?;
        return shipped_instance(instance, f).at(instance);
    }
    Err(CliError::Missing(format!(
        "{instance:?} is neither a file nor a shipped instance ({}, {TOR_OBSTRUCTION})",
        SHIPPED.join(", ")
    )))
}

fn cmd_verify(cfg: &RunConfig, statement: Statement, instance: &str, n: usize) -> Result<u8, CliError> {
    let start = Instant::now();
    let c = resolve_instance(cfg, instance)?;
    schema::ensure_valid(&c.validate(), &c.name)?;
    let (cat_r, cat_t) = instance_catalogs(
        &c,
        cfg.catalog_bound,
        cfg.seed,
        cfg.budget_enum,
        statement.needs_total_catalog(),
    )
    .at("catalog")?;
    let report: VerificationReport = verify(statement, &c, &cat_r, cat_t.as_ref(), n, &cfg.options()).at(&c.name)?;
    emit(cfg.out.as_deref(), &report.to_json_lines())?;
    eprint!("{}", report.render_summary());
    eprintln!("elapsed: {:.2?}", start.elapsed());
    Ok(match report.outcome() {
        Outcome::Pass => 0,
        Outcome::Vacuous => 1,
        Outcome::Fail => 4,
    })
}
