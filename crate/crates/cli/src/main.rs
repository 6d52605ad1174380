mod error;
mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gm_analyzer::table2::{builtin_presets, parse_presets, render_table, table2_run};
use gm_analyzer::{gm_check_family, GmOptions};
use group_engine::{generate_group, par};
use models::{parse_group_file, Family};
use scheme::{BuildOptions, OrbitalScheme, Verify};
use spectra::{dense_spectrum, format_spectrum, CharacterSums, DenseOptions, Graph, Q, SchemeEigenmatrix};

use crate::error::CliError;

#[derive(Parser)]
#[command(name = "schurian", version, about = "Orbital schemes of Sym(n), their spectra and coclique verdicts")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "SCHURIAN_THREADS")]
    threads: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Orbital scheme construction.
    Scheme {
        #[command(subcommand)]
        cmd: SchemeCmd,
    },
    /// Character-table eigenmatrix and orbital graph spectra.
    Spectra(SpectraArgs),
    /// Coclique and least-eigenvalue verdicts.
    Gm {
        #[command(subcommand)]
        cmd: GmCmd,
    },
    /// Runs the subgroup presets against their reference rows.
    Table2(Table2Args),
}

#[derive(Subcommand)]
enum SchemeCmd {
    /// Builds the scheme and writes its JSON document.
    Build(CommonArgs),
}

#[derive(Subcommand)]
enum GmCmd {
    /// Decides both questions for one scheme.
    Check(GmArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyLevel {
    Fast,
    Full,
}

#[derive(Args)]
struct CommonArgs {
    /// One of johnson, quasi-johnson, line3, line4, line5, uniform2, pm, qpm.
    #[arg(long, conflicts_with = "group_file", required_unless_present = "group_file")]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Subgroup H given by generators, one 1-based cycle word per line.
    #[arg(long)]
    group_file: Option<PathBuf>,
    /// Directory for JSON and CSV artifacts.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print JSON on standard output instead of the table.
    #[arg(long)]
    json: bool,
    #[arg(long, value_enum, default_value = "fast")]
    verify: VerifyLevel,
    #[command(flatten)]
    budgets: Budgets,
}

#[derive(Args, Clone)]
struct Budgets {
    #[arg(long, env = "SCHURIAN_MAX_DOMAIN", default_value_t = 200_000)]
    max_domain: usize,
    #[arg(long, env = "SCHURIAN_MAX_GROUP_ORDER", default_value_t = 10_000_000)]
    max_group_order: u64,
    /// Largest graph handed to the dense floating-point oracle.
    #[arg(long, env = "SCHURIAN_MAX_DENSE", default_value_t = 2000)]
    max_dense: usize,
}

#[derive(Args)]
struct SpectraArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Orbital labels whose union graph spectrum is printed, comma separated.
    #[arg(long, value_delimiter = ',')]
    orbitals: Vec<String>,
    /// Cross-check the union spectrum with the dense oracle.
    #[arg(long)]
    dense: bool,
}

#[derive(Args)]
struct GmArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Cross-check every orbital spectrum with the dense oracle.
    #[arg(long)]
    dense: bool,
}

#[derive(Args)]
struct Table2Args {
    /// Run only the preset with this name.
    #[arg(long)]
    only: Option<String>,
    /// Preset file (default: the built-in presets).
    #[arg(long)]
    presets: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    budgets: Budgets,
}

impl Budgets {
    fn check(&self) -> Result<(), CliError> {
        if self.max_domain == 0 || self.max_group_order == 0 || self.max_dense == 0 {
            return Err(CliError::Input("budgets must be positive".into()));
        }
        Ok(())
    }

    fn gm_options(&self, dense: bool, verify: VerifyLevel) -> GmOptions {
        GmOptions {
            max_domain: self.max_domain,
            dense_limit: if dense { self.max_dense } else { 0 },
            dense: DenseOptions { max_vertices: self.max_dense, ..DenseOptions::default() },
            second_representative: matches!(verify, VerifyLevel::Full),
        }
    }
}

fn family(args: &CommonArgs) -> Result<Family, CliError> {
    args.budgets.check()?;
    let Some(path) = &args.group_file else {
        let sel = args.family.as_deref().expect("clap requires --family or --group-file");
        return Ok(Family::from_selector(sel, args.n, args.k)?);
    };
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let (name, degree, generators) = parse_group_file(&text)?;
    if let Some(n) = args.n {
        if n != degree {
            return Err(CliError::Input(format!("--n {n} differs from the group file's degree {degree}")));
        }
    }
    generate_group(degree, generators.clone(), args.budgets.max_group_order)?;
    let name = name.unwrap_or_else(|| path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default());
    Ok(Family::Coset { name, degree, generators })
}

fn slug(id: &str) -> String {
    let s: String = id.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    s.split('_').filter(|p| !p.is_empty()).collect::<Vec<_>>().join("_")
}

fn write_artifact(dir: &Path, name: &str, contents: &str) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(name);
    std::fs::write(&path, contents)?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn scheme_build(args: &CommonArgs, seed: u64) -> Result<(), CliError> {
    let fam = family(args)?;
    let scheme = OrbitalScheme::from_family(&fam, args.budgets.max_domain)?;
    let verify = match args.verify {
        VerifyLevel::Fast => Verify::Fast,
        VerifyLevel::Full => Verify::Full,
    };
    let opts = BuildOptions { max_domain: args.budgets.max_domain, verify, seed, ..BuildOptions::default() };
    let doc = scheme.document(&opts)?;
    let json = doc.to_json();
    if let Some(dir) = &args.out {
        write_artifact(dir, &format!("{}.scheme.json", slug(&doc.id)), &json)?;
    }
    if args.json {
        println!("{json}");
    } else {
        print!("{}", render::scheme_summary(&doc));
    }
    Ok(())
}

fn spectra_cmd(args: &SpectraArgs) -> Result<(), CliError> {
    let c = &args.common;
    let fam = family(c)?;
    let scheme = OrbitalScheme::from_family(&fam, c.budgets.max_domain)?;
    let sums = CharacterSums::new(&scheme, matches!(c.verify, VerifyLevel::Full))?;
    let m = SchemeEigenmatrix::build(&sums)?;
    let mut union = None;
    if !args.orbitals.is_empty() {
        let idx: Vec<usize> = args
            .orbitals
            .iter()
            .map(|l| scheme.orbital_by_label(l).ok_or_else(|| CliError::Input(format!("no orbital labelled {l}"))))
            .collect::<Result<_, _>>()?;
        let spectrum = m.spectrum(&idx);
        let (least, by) = m.least(&idx);
        let mut dense_ok = None;
        if args.dense {
            let g = Graph::from_adjacency(scheme.graph(&idx))?;
            let cand: Vec<Q> = spectrum.keys().cloned().collect();
            let d = dense_spectrum(&g, &cand, &DenseOptions { max_vertices: c.budgets.max_dense, ..DenseOptions::default() })?;
            if d.spectrum != spectrum || !d.unmatched.is_empty() {
                return Err(CliError::Failure(format!("dense spectrum {} disagrees", format_spectrum(&d.spectrum))));
            }
            dense_ok = Some(d.rank_verified);
        }
        union = Some(serde_json::json!({
            "orbitals": args.orbitals,
            "spectrum": spectrum.iter().map(|(v, k)| (v.to_string(), k)).collect::<Vec<_>>(),
            "least": least,
            "least_afforded_by": by,
            "dense_rank_verified": dense_ok,
        }));
    }
    let doc = serde_json::json!({ "scheme": scheme.id(), "eigenmatrix": m, "union": union });
    let json = serde_json::to_string_pretty(&doc).expect("serializable");
    if let Some(dir) = &c.out {
        let stem = slug(scheme.id());
        write_artifact(dir, &format!("{stem}.eigenmatrix.csv"), &m.to_csv())?;
        write_artifact(dir, &format!("{stem}.spectra.json"), &json)?;
    }
    if c.json {
        println!("{json}");
        return Ok(());
    }
    println!("{}: rank {}, |Ω| = {}", scheme.id(), scheme.rank(), scheme.len());
    print!("{}", render::eigenmatrix(&m));
    if let Some(u) = union {
        let idx: Vec<usize> = args.orbitals.iter().filter_map(|l| scheme.orbital_by_label(l)).collect();
        println!("spectrum of {}: {}", args.orbitals.join(" ∪ "), format_spectrum(&m.spectrum(&idx)));
        let by: Vec<String> = m.least(&idx).1.iter().map(ToString::to_string).collect();
        println!("least eigenvalue {} afforded by {}", u["least"].as_str().unwrap_or("?"), by.join(", "));
        if let Some(v) = u["dense_rank_verified"].as_bool() {
            println!("dense oracle agrees (multiplicities verified by exact rank: {v})");
        }
    }
    Ok(())
}

fn gm_cmd(args: &GmArgs) -> Result<(), CliError> {
    let c = &args.common;
    let fam = family(c)?;
    let report = gm_check_family(&fam, &c.budgets.gm_options(args.dense, c.verify))?;
    let json = report.to_json();
    if let Some(dir) = &c.out {
        write_artifact(dir, &format!("{}.gm.json", slug(&report.scheme)), &json)?;
    }
    if c.json {
        println!("{json}");
    } else {
        print!("{}", render::gm_report(&report));
    }
    Ok(())
}

fn table2_cmd(args: &Table2Args) -> Result<(), CliError> {
    args.budgets.check()?;
    let presets = match &args.presets {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
            parse_presets(&text)?
        }
        None => builtin_presets(),
    };
    if presets.is_empty() {
        eprintln!("warning: no presets to run");
        return Ok(());
    }
    let rows = table2_run(&presets, args.only.as_deref(), &args.budgets.gm_options(false, VerifyLevel::Fast))?;
    let json = serde_json::to_string_pretty(&rows).expect("serializable");
    if let Some(dir) = &args.out {
        write_artifact(dir, "table2.json", &json)?;
    }
    if args.json {
        println!("{json}");
    } else {
        print!("{}", render_table(&rows));
        for r in &rows {
            for n in &r.notes {
                println!("  {}: {n}", r.name);
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    if cli.threads == Some(0) {
        return Err(CliError::Input("--threads must be positive".into()));
    }
    let seed = cli.seed;
    par::install(cli.threads, move || match &cli.command {
        Command::Scheme { cmd: SchemeCmd::Build(a) } => scheme_build(a, seed),
        Command::Spectra(a) => spectra_cmd(a),
        Command::Gm { cmd: GmCmd::Check(a) } => gm_cmd(a),
        Command::Table2(a) => table2_cmd(a),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
