//! The `kmagic` command line.
//!
//! Exit codes: 0 success, 1 a well-posed question with a negative answer,
//! 2 invalid input, 3 budget exceeded or undecided.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::factor::{f_factor_with, mod3_factor_with, two_factorization, FactorDecomposition, FactorOptions};
use crate::graph::{generate, text, Family, MultiGraph};
use crate::labeling::{construct_with, verify, ConstructOptions, LabelingFile, Status};
use crate::spectrum::{
    brute_force_spectrum, null_set, predict_spectrum_with, SolverBudget, SpectrumOptions, SpectrumSet,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "kmagic", version, about = "c-sum k-magic labelings of regular graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph in the text format.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyName,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Circulant jumps, comma separated; defaults to 1..=r/2, plus n/2 for odd r.
        #[arg(long, value_delimiter = ',')]
        jumps: Option<Vec<usize>>,
        /// Disjoint union parts such as `cycle:3,complete:5,petersen`.
        #[arg(long)]
        parts: Option<String>,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Construct a labeling with magic sum C over Z_K.
    Label {
        file: PathBuf,
        #[arg(long)]
        k: u64,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Print the magic sum of a labeling, or "not magic".
    Verify { file: PathBuf, labeling: PathBuf },
    /// Print the sum spectrum over Z_K.
    Spectrum {
        file: PathBuf,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value = "predict")]
        method: Method,
    },
    /// Write a factor decomposition as JSON.
    Factorize {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        h: Option<usize>,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Print every k <= KMAX whose spectrum contains 0.
    NullSet {
        file: PathBuf,
        #[arg(long)]
        kmax: u64,
    },
    /// Compare predicted and exhaustive spectra over a directory of graphs.
    Compare {
        #[arg(long)]
        corpus: PathBuf,
        /// Inclusive range `A..B`.
        #[arg(long)]
        k_range: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "snake_case")]
enum FamilyName {
    Cycle,
    Complete,
    CompleteBipartite,
    Circulant,
    Petersen,
    Prism,
    RandomRegular,
    DisjointUnion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Predict,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    TwoFactors,
    FFactor,
    Mod3,
}

/// A failed command: exit code plus message.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_UNDECIDED,
            _ => EXIT_INVALID,
        };
        Failure(code, e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the command line with process stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

/// Runs the command line writing to the given streams. The first argument
/// is the program name.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = if code == EXIT_OK { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    let budget = SolverBudget::from_env();
    let spectrum_opts = SpectrumOptions { budget, factor: FactorOptions::default() };
    match command {
        Command::Gen { family, n, r, seed, jumps, parts, output } => {
            let fam = family_of(family, n, r, jumps, parts.as_deref())?;
            let g = generate(&fam, seed)?;
            emit(out, output.as_deref(), &text::write(&g))?;
            Ok(EXIT_OK)
        }
        Command::Label { file, k, c, output } => {
            let g = read_graph(&file)?;
            let opts = ConstructOptions { budget, ..ConstructOptions::default() };
            let res = construct_with(&g, k, c, &opts)?;
            write_out(out, &res.trace.summary())?;
            match (res.status, res.labeling) {
                (Status::Built, Some(l)) => {
                    let sum = verify(&g, &l)?
                        .ok_or_else(|| Failure(EXIT_INVALID, "construction did not verify".into()))?;
                    write_out(out, &format!("magic sum {sum} over k = {k}\n"))?;
                    if let Some(path) = output {
                        write_file(&path, &LabelingFile::new(&l, sum, &res.trace).to_json())?;
                    }
                    Ok(EXIT_OK)
                }
                (Status::Undecided, _) => {
                    write_out(out, &format!("undecided: sum {c} over k = {k}\n"))?;
                    Ok(EXIT_UNDECIDED)
                }
                _ => {
                    write_out(out, &format!("no labeling with sum {c} over k = {k}\n"))?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Verify { file, labeling } => {
            let g = read_graph(&file)?;
            let l = LabelingFile::from_json(&read_text(&labeling)?)?.labeling()?;
            match verify(&g, &l)? {
                Some(s) => {
                    write_out(out, &format!("{s}\n"))?;
                    Ok(EXIT_OK)
                }
                None => {
                    write_out(out, "not magic\n")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Spectrum { file, k, method } => {
            let g = read_graph(&file)?;
            if method != Method::Predict && k < 2 {
                return Err(Failure(EXIT_INVALID, "the oracle needs k >= 2".into()));
            }
            let predicted = match method {
                Method::Oracle => None,
                _ => Some(predict_spectrum_with(&g, k, &spectrum_opts)?),
            };
            let oracle = match method {
                Method::Predict => None,
                _ => Some(brute_force_spectrum(&g, k, &budget)?),
            };
            match (predicted, oracle) {
                (Some(p), None) => {
                    write_out(out, &p.to_json())?;
                    Ok(if p.is_decided() { EXIT_OK } else { EXIT_UNDECIDED })
                }
                (None, Some(o)) => {
                    write_out(out, &o.to_json())?;
                    Ok(EXIT_OK)
                }
                (Some(p), Some(o)) => {
                    write_out(out, &p.to_json())?;
                    let verdict = if !p.is_decided() {
                        ("undecided", EXIT_UNDECIDED)
                    } else if p.members() == o.members() {
                        ("agree", EXIT_OK)
                    } else {
                        ("disagree", EXIT_NEGATIVE)
                    };
                    write_out(out, &format!("predict {}\noracle  {}\n{}\n", show(&p), show(&o), verdict.0))?;
                    Ok(verdict.1)
                }
                (None, None) => unreachable!(),
            }
        }
        Command::Factorize { file, mode, h, output } => {
            let g = read_graph(&file)?;
            let opts = FactorOptions::default();
            let found = match mode {
                Mode::TwoFactors => Some(two_factorization(&g)?),
                Mode::FFactor => {
                    let h = h.ok_or_else(|| Failure(EXIT_INVALID, "f-factor needs --h".into()))?;
                    f_factor_with(&g, h, &opts)?
                        .map(|f| FactorDecomposition { parts: vec![f], degrees: vec![h] })
                }
                Mode::Mod3 => mod3_factor_with(&g, &opts)?.map(|f| {
                    // degrees inside the factor are 1 mod 3 but need not be equal
                    let d = g.degrees_in(&f).into_iter().max().unwrap_or(0);
                    FactorDecomposition { parts: vec![f], degrees: vec![d] }
                }),
            };
            match found {
                Some(dec) => {
                    emit(out, output.as_deref(), &dec.to_json())?;
                    Ok(EXIT_OK)
                }
                None => {
                    write_out(out, "no such factor\n")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::NullSet { file, kmax } => {
            let g = read_graph(&file)?;
            let ns = null_set(&g, kmax, &spectrum_opts)?;
            write_out(out, &ns.to_json())?;
            Ok(if ns.undecided.is_empty() { EXIT_OK } else { EXIT_UNDECIDED })
        }
        Command::Compare { corpus, k_range } => compare(&corpus, &k_range, &spectrum_opts, out),
    }
}

fn compare(dir: &Path, range: &str, opts: &SpectrumOptions, out: &mut dyn Write) -> Outcome {
    let (a, b) = range
        .split_once("..")
        .and_then(|(a, b)| Some((a.trim().parse::<u64>().ok()?, b.trim().parse::<u64>().ok()?)))
        .filter(|&(a, b)| a >= 2 && a <= b)
        .ok_or_else(|| {
            Failure(EXIT_INVALID, format!("bad k range `{range}`, expected A..B with 2 <= A <= B"))
        })?;
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Failure(EXIT_INVALID, format!("{}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(Failure(EXIT_INVALID, format!("no .txt graphs in {}", dir.display())));
    }
    let mut table = format!("{:<24} {:>3}  {:<20} {:<20} result\n", "graph", "k", "predict", "oracle");
    let mut failed = false;
    for path in &files {
        let g = read_graph(path)?;
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        for k in a..=b {
            let p = predict_spectrum_with(&g, k, opts)?;
            let (oracle, result) = match brute_force_spectrum(&g, k, &opts.budget) {
                Ok(o) => {
                    let verdict = if !p.is_decided() {
                        "UNDECIDED"
                    } else if p.members() == o.members() {
                        "PASS"
                    } else {
                        failed = true;
                        "FAIL"
                    };
                    (show(&o), verdict)
                }
                Err(Error::BudgetExceeded { .. }) => ("over budget".to_string(), "UNDECIDED"),
                Err(e) => return Err(e.into()),
            };
            table.push_str(&format!("{name:<24} {k:>3}  {:<20} {oracle:<20} {result}\n", show(&p)));
        }
    }
    write_out(out, &table)?;
    Ok(if failed { EXIT_NEGATIVE } else { EXIT_OK })
}

/// `{0,2,4}`, with undecided residues marked `?`, or a symbolic tag.
fn show(s: &SpectrumSet) -> String {
    match s.members() {
        Some(m) => {
            let mut items: Vec<String> = m.iter().map(i64::to_string).collect();
            items.extend(s.undecided.iter().map(|c| format!("{c}?")));
            format!("{{{}}}", items.join(","))
        }
        None => s.report().symbolic.unwrap_or_default(),
    }
}

fn family_of(
    name: FamilyName,
    n: Option<usize>,
    r: Option<usize>,
    jumps: Option<Vec<usize>>,
    parts: Option<&str>,
) -> Result<Family, Failure> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Failure(EXIT_INVALID, format!("this family needs --{flag}")))
    };
    Ok(match name {
        FamilyName::Cycle => Family::Cycle { n: need(n, "n")? },
        FamilyName::Complete => Family::Complete { n: need(n, "n")? },
        FamilyName::CompleteBipartite => {
            let n = need(n, "n")?;
            Family::CompleteBipartite { a: n, b: n }
        }
        FamilyName::Circulant => {
            let n = need(n, "n")?;
            let jumps = match jumps {
                Some(j) => j,
                None => {
                    let r = need(r, "r")?;
                    let mut j: Vec<usize> = (1..=r / 2).collect();
                    if r % 2 == 1 {
                        j.push(n / 2);
                    }
                    j
                }
            };
            Family::Circulant { n, jumps }
        }
        FamilyName::Petersen => Family::Petersen,
        FamilyName::Prism => Family::Prism { n: need(n, "n")? },
        FamilyName::RandomRegular => Family::random_regular(need(n, "n")?, need(r, "r")?),
        FamilyName::DisjointUnion => {
            let list = parts.ok_or_else(|| Failure(EXIT_INVALID, "disjoint_union needs --parts".into()))?;
            Family::DisjointUnion { parts: list.split(',').map(part_of).collect::<Result<_, _>>()? }
        }
    })
}

/// One `name[:n[:r]]` item of `--parts`.
fn part_of(item: &str) -> Result<Family, Failure> {
    let mut fields = item.trim().split(':');
    let name = fields.next().unwrap_or_default();
    let nums = fields
        .map(|f| f.parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure(EXIT_INVALID, format!("bad part `{item}`")))?;
    let fam = FamilyName::from_str(name, true)
        .map_err(|_| Failure(EXIT_INVALID, format!("unknown family `{name}` in --parts")))?;
    if matches!(fam, FamilyName::RandomRegular | FamilyName::DisjointUnion) {
        return Err(Failure(EXIT_INVALID, format!("`{name}` cannot be a part")));
    }
    family_of(fam, nums.first().copied(), nums.get(1).copied(), None, None)
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(EXIT_INVALID, format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<MultiGraph, Failure> {
    text::parse(&read_text(path)?).map_err(|e| Failure(EXIT_INVALID, format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, body: &str) -> Result<(), Failure> {
    fs::write(path, body).map_err(|e| Failure(EXIT_INVALID, format!("{}: {e}", path.display())))
}

fn write_out(out: &mut dyn Write, body: &str) -> Result<(), Failure> {
    out.write_all(body.as_bytes()).map_err(|e| Failure(EXIT_INVALID, e.to_string()))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, body: &str) -> Result<(), Failure> {
    match path {
        Some(p) => write_file(p, body),
        None => write_out(out, body),
    }
}
