//! `doubloid`: validate algebroids and their doubles from JSON files.
//!
//! Exit codes: 0 pass, 1 a verdict failed, 2 input error, 3 internal
//! inconsistency.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use doubloid::calculus::{base_poisson, check_bialgebroid, semidirect_e, semidirect_edual};
use doubloid::doubles::{
    check_bialgebra_twisted, check_manin, check_matched, drinfeld_double, matched_double, random_perturbation,
    LieBialgebraData, MatchedPairData,
};
use doubloid::dvs::{CotangentModel, DoubleVectorSpace};
use doubloid::{fixtures, int, io, CdoRep, CheckConfig, LieAlgebroid, Report};

#[derive(Parser)]
#[command(name = "doubloid", version, about = "Exact checks for Lie algebroids, matched pairs and their doubles")]
struct Cli {
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    #[arg(long, global = true, default_value_t = 2)]
    max_degree: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    report: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a .alg, .rep, .mp, .bialg or .dvs file.
    Validate { path: PathBuf },
    /// Build a double and write it as an algebroid file.
    Double {
        #[arg(value_enum)]
        kind: DoubleKind,
        path: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare the matched-pair, double and semidirect-bialgebroid verdicts.
    Equiv { path: PathBuf },
    /// Check the bialgebroid condition for a pair of algebroid files.
    Bialgebroid { e: PathBuf, estar: PathBuf },
    /// Double vector space checks.
    Dvs {
        #[command(subcommand)]
        command: DvsCommand,
    },
    /// Write the fixture corpus into a directory.
    Fixtures {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DoubleKind {
    Matched,
    Drinfeld,
}

#[derive(Subcommand)]
enum DvsCommand {
    /// Pairing of the two duals over the core dual.
    Pair { side_h: usize, side_v: usize, core: usize },
    /// The maps Z_V and Z_H.
    Zmaps { side_h: usize, side_v: usize, core: usize },
    /// The cotangent identity on A = Q^n.
    Vue { n: usize },
}

/// Failure classes mapped onto exit codes.
enum Failure {
    Input(anyhow::Error),
    Internal(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<doubloid::Error> for Failure {
    fn from(e: doubloid::Error) -> Self {
        Failure::Input(e.into())
    }
}

struct Outcome {
    command: String,
    reports: Vec<Report>,
    extra: serde_json::Value,
    code: u8,
}

impl Outcome {
    fn from_reports(command: &str, reports: Vec<Report>) -> Self {
        let code = if reports.iter().all(Report::passed) { 0 } else { 1 };
        Outcome { command: command.into(), reports, extra: serde_json::Value::Null, code }
    }
}

const MAX_DIM: usize = 64;

fn config(cli: &Cli) -> CheckConfig {
    CheckConfig { seed: cli.seed, samples: cli.samples as usize, max_degree: cli.max_degree }
}

fn extension(path: &Path) -> Result<&str, Failure> {
    path.extension()
        .and_then(|e| e.to_str())
        .ok_or_else(|| Failure::Input(anyhow!("{}: missing file extension", path.display())))
}

fn load<T>(path: &Path, parse: impl FnOnce(&str) -> doubloid::Result<T>) -> Result<T, Failure> {
    let text = io::read_file(path)?;
    parse(&text).with_context(|| format!("{}", path.display())).map_err(Failure::Input)
}

fn validate(path: &Path, cfg: &CheckConfig) -> Result<Outcome, Failure> {
    let reports = match extension(path)? {
        "alg" => vec![load(path, io::algebroid_from_json)?.validate(cfg)],
        "rep" => {
            let rep: CdoRep = load(path, io::rep_from_json)?;
            let mut r = Report::new("representation");
            r.absorb("algebroid", rep.algebroid().validate(cfg));
            r.absorb("rep", rep.validate(cfg));
            vec![r]
        }
        "mp" => vec![check_matched(&load(path, io::matched_from_json)?, cfg)],
        "bialg" => vec![check_bialgebra_twisted(&load(path, io::bialgebra_from_json)?, cfg)],
        "dvs" => {
            let d = load(path, io::dvs_from_json)?;
            dvs_dims(d.dims())?;
            vec![d.pair_check(cfg.seed, cfg.samples, 10), d.z_maps().check()]
        }
        other => return Err(Failure::Input(anyhow!("unknown file type .{other}"))),
    };
    Ok(Outcome::from_reports("validate", reports))
}

fn double(kind: DoubleKind, path: &Path, out: &Path, cfg: &CheckConfig) -> Result<Outcome, Failure> {
    match kind {
        DoubleKind::Matched => {
            let mp: MatchedPairData = load(path, io::matched_from_json)?;
            let pre = check_matched(&mp, cfg);
            if !pre.passed() {
                return Ok(Outcome::from_reports("double matched", vec![pre]));
            }
            let d = matched_double(&mp);
            let post = d.validate(cfg);
            if !post.passed() {
                return Err(Failure::Internal(anyhow!("double of a matched pair fails validation:\n{post}")));
            }
            io::write_file(out, &io::algebroid_to_json(&d))?;
            Ok(Outcome::from_reports("double matched", vec![pre, post]))
        }
        DoubleKind::Drinfeld => {
            let bi: LieBialgebraData = load(path, io::bialgebra_from_json)?;
            let mut pre = Report::new("bialgebra inputs");
            pre.absorb("g", bi.g().validate(cfg));
            pre.absorb("gstar", bi.gstar().validate(cfg));
            if !pre.passed() {
                return Ok(Outcome::from_reports("double drinfeld", vec![pre]));
            }
            let (d, pairing) = drinfeld_double(&bi);
            let n = bi.g().rank();
            let sub1: Vec<usize> = (0..n).collect();
            let sub2: Vec<usize> = (n..2 * n).collect();
            let mut manin = check_manin(&d, &pairing, &sub1, &sub2)?;
            manin.absorb("double", d.validate(cfg));
            if manin.passed() {
                io::write_file(out, &io::algebroid_to_json(&d))?;
                let pairing_json: Vec<Vec<String>> =
                    pairing.matrix().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
                let mut p = out.as_os_str().to_owned();
                p.push(".pairing.json");
                io::write_file(Path::new(&p), &format!("{}\n", serde_json::to_string_pretty(&pairing_json).expect("strings")))?;
            }
            Ok(Outcome::from_reports("double drinfeld", vec![pre, manin]))
        }
    }
}

fn equiv(path: &Path, cfg: &CheckConfig) -> Result<Outcome, Failure> {
    let mp: MatchedPairData = load(path, io::matched_from_json)?;
    let matched = check_matched(&mp, cfg);
    let mut dbl = matched_double(&mp).validate(cfg);
    dbl.subject = "matched_double".into();
    let mut semi = check_bialgebroid(&semidirect_e(&mp), &semidirect_edual(&mp), cfg)?;
    semi.subject = "semidirect_bialgebroid".into();
    let verdicts = [matched.passed(), dbl.passed(), semi.passed()];
    let agree = verdicts.iter().all(|v| *v == verdicts[0]);
    let mut out = Outcome::from_reports("equiv", vec![matched, dbl, semi]);
    out.extra = json!({ "verdicts": verdicts, "agree": agree });
    out.code = if agree { 0 } else { 3 };
    Ok(out)
}

fn bialgebroid(e: &Path, estar: &Path, cfg: &CheckConfig) -> Result<Outcome, Failure> {
    let a: LieAlgebroid = load(e, io::algebroid_from_json)?;
    let b: LieAlgebroid = load(estar, io::algebroid_from_json)?;
    let report = check_bialgebroid(&a, &b, cfg)?;
    let pi = base_poisson(&a, &b)?;
    let mut out = Outcome::from_reports("bialgebroid", vec![report]);
    let pi: Vec<Vec<String>> = pi.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    out.extra = json!({ "base_poisson": pi });
    Ok(out)
}

fn dvs_dims(dims: [usize; 3]) -> Result<DoubleVectorSpace, Failure> {
    if dims.iter().any(|&d| d > MAX_DIM) {
        return Err(Failure::Input(anyhow!("dimensions {dims:?} exceed {MAX_DIM}")));
    }
    Ok(DoubleVectorSpace::new(dims[0], dims[1], dims[2]))
}

fn dvs(cmd: &DvsCommand, cfg: &CheckConfig) -> Result<Outcome, Failure> {
    let reports = match *cmd {
        DvsCommand::Pair { side_h, side_v, core } => vec![dvs_dims([side_h, side_v, core])?.pair_check(cfg.seed, cfg.samples, 10)],
        DvsCommand::Zmaps { side_h, side_v, core } => vec![dvs_dims([side_h, side_v, core])?.z_maps().check()],
        DvsCommand::Vue { n } => {
            if n > MAX_DIM {
                return Err(Failure::Input(anyhow!("n = {n} exceeds {MAX_DIM}")));
            }
            vec![CotangentModel::new(n)?.check(cfg.seed, 100)]
        }
    };
    Ok(Outcome::from_reports("dvs", reports))
}

fn write(dir: &Path, name: &str, text: String) -> Result<String, Failure> {
    io::write_file(&dir.join(name), &text)?;
    Ok(name.to_string())
}

/// Emits the corpus; positives are checked first and never written failing.
fn write_fixtures(dir: &Path, cfg: &CheckConfig) -> Result<Outcome, Failure> {
    std::fs::create_dir_all(dir).with_context(|| dir.display().to_string())?;
    let mut written = Vec::new();
    let refuse = |name: &str, r: &Report| Failure::Internal(anyhow!("refusing to write failing positive fixture {name}:\n{r}"));

    let mut algebroids = vec![
        ("abelian", LieAlgebroid::abelian(doubloid::BaseSpace::point(), 3)),
        ("sl2", fixtures::sl2()),
        ("aff1", fixtures::aff1()),
        ("action_aff1_on_line", fixtures::action_aff1_on_line()),
        ("tangent_xy", fixtures::tangent_bundle(&["x", "y"])),
    ];
    for (name, a) in &algebroids {
        let r = a.validate(cfg);
        if !r.passed() {
            return Err(refuse(name, &r));
        }
        written.push(write(dir, &format!("{name}.alg"), io::algebroid_to_json(a))?);
    }
    // negatives: sl2_broken plus an antisymmetry break of the abelian algebra
    let mut broken_abelian = algebroids.remove(0).1;
    broken_abelian.set_structure_raw(0, 1, 0, doubloid::Polynomial::from_int(0, 1))?;
    for (name, a) in [("sl2_broken", fixtures::sl2_broken()), ("abelian_broken", broken_abelian)] {
        if a.validate(cfg).passed() {
            return Err(Failure::Internal(anyhow!("negative fixture {name} passes")));
        }
        written.push(write(dir, &format!("{name}.alg"), io::algebroid_to_json(&a))?);
    }

    let sl2 = fixtures::sl2();
    let mut bad_rep = CdoRep::adjoint(&sl2)?;
    bad_rep.perturb(1, 0, 0, &int(1));
    for (name, rep, positive) in [
        ("sl2_adjoint", CdoRep::adjoint(&sl2)?, true),
        ("sl2_coadjoint", CdoRep::coadjoint(&sl2)?, true),
        ("sl2_adjoint_perturbed", bad_rep, false),
    ] {
        let r = rep.validate(cfg);
        if r.passed() != positive {
            return Err(Failure::Internal(anyhow!("representation fixture {name} has the wrong verdict:\n{r}")));
        }
        written.push(write(dir, &format!("{name}.rep"), io::rep_to_json(&rep))?);
    }

    for (name, mp) in fixtures::matched_fixtures() {
        let r = check_matched(&mp, cfg);
        if !r.passed() {
            return Err(refuse(name, &r));
        }
        written.push(write(dir, &format!("{name}.mp"), io::matched_to_json(&mp))?);
        let bad = (0..64)
            .map(|seed| mp.perturbed(&random_perturbation(&mp, seed)).expect("indices in range"))
            .find(|p| !check_matched(p, cfg).passed())
            .ok_or_else(|| Failure::Internal(anyhow!("no failing perturbation of {name}")))?;
        written.push(write(dir, &format!("{name}_perturbed.mp"), io::matched_to_json(&bad))?);
    }

    for (name, bi) in fixtures::bialgebra_fixtures() {
        let r = check_bialgebra_twisted(&bi, cfg);
        if !r.passed() {
            return Err(refuse(name, &r));
        }
        written.push(write(dir, &format!("{name}.bialg"), io::bialgebra_to_json(&bi))?);
        let bad = bialgebra_negative(&bi, cfg)?;
        written.push(write(dir, &format!("{name}_perturbed.bialg"), io::bialgebra_to_json(&bad))?);
    }

    for dims in [[1, 1, 0], [2, 2, 1], [2, 3, 2]] {
        let d = DoubleVectorSpace::new(dims[0], dims[1], dims[2]);
        written.push(write(dir, &format!("dvs_{}{}{}.dvs", dims[0], dims[1], dims[2]), io::dvs_to_json(&d))?);
    }

    let mut out = Outcome::from_reports("fixtures", Vec::new());
    out.extra = json!({ "written": written });
    Ok(out)
}

/// A failing single-coefficient perturbation, preferring ones that keep both
/// algebras valid so only the compatibility breaks. Without such a
/// perturbation, the bracket of `g` loses antisymmetry in one slot.
fn bialgebra_negative(bi: &LieBialgebraData, cfg: &CheckConfig) -> Result<LieBialgebraData, Failure> {
    let n = bi.g().rank();
    let candidates: Vec<LieBialgebraData> = (0..n)
        .flat_map(|i| (i + 1..n).flat_map(move |j| (0..n).flat_map(move |k| [(true, i, j, k), (false, i, j, k)])))
        .map(|(d, i, j, k)| bi.perturbed(d, i, j, k, &int(1)).expect("indices in range"))
        .filter(|p| !check_bialgebra_twisted(p, cfg).passed())
        .collect();
    let both_valid = |p: &LieBialgebraData| p.g().validate(cfg).passed() && p.gstar().validate(cfg).passed();
    if let Some(p) = candidates.iter().find(|p| both_valid(p)).or(candidates.first()) {
        return Ok(p.clone());
    }
    let mut g = bi.g().clone();
    let slot = g.structure(1, 0, 0) + &doubloid::Polynomial::from_int(g.nvars(), 1);
    g.set_structure_raw(1, 0, 0, slot)?;
    let bad = LieBialgebraData::new(g, bi.gstar().clone())?;
    if check_bialgebra_twisted(&bad, cfg).passed() {
        return Err(Failure::Internal(anyhow!("no failing perturbation found")));
    }
    Ok(bad)
}

fn emit(cli: &Cli, out: &Outcome) {
    match cli.report {
        Format::Text => {
            for r in &out.reports {
                print!("{r}");
            }
            if !out.extra.is_null() {
                println!("{}", out.extra);
            }
            println!("exit {}", out.code);
        }
        Format::Structured => {
            let doc = json!({
                "command": out.command,
                "config": { "seed": cli.seed, "samples": cli.samples, "max_degree": cli.max_degree },
                "passed": out.code == 0,
                "exit_code": out.code,
                "reports": out.reports,
                "extra": out.extra,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json values serialize"));
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let cfg = config(cli);
    match &cli.command {
        Command::Validate { path } => validate(path, &cfg),
        Command::Double { kind, path, out } => double(*kind, path, out, &cfg),
        Command::Equiv { path } => equiv(path, &cfg),
        Command::Bialgebroid { e, estar } => bialgebroid(e, estar, &cfg),
        Command::Dvs { command } => dvs(command, &cfg),
        Command::Fixtures { out } => write_fixtures(out, &cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            emit(&cli, &out);
            ExitCode::from(out.code)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("internal error: {e:#}");
            ExitCode::from(3)
        }
    }
}
