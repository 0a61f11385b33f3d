//! The `origami` command line: inspection, decompositions, twists,
//! Galois analysis, certificates and resumable family scans.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::algebra::{IntMatrix, IntPoly};
use crate::certify::{arithmeticity_certificate, verify_report, CertificateReport, CertifyOptions, Verdict};
use crate::cylinders::{decompose, multitwist, Direction};
use crate::error::Error;
use crate::galois::{
    dedekind_type, galois_group_quartic, hyperoctahedral_certificate, irreducibility_over_q, quintic_group_is_s5,
    real_split, trace_polynomial, DedekindType, DEFAULT_PRIME_BUDGET, DEFAULT_SEED,
};
use crate::homology::build_homology;
use crate::origami::{Family, FamilyMember, Origami};
use crate::report::{parse_rational, to_canonical_json, to_pretty_json};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISCONNECTED: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "origami", version, about = "Exact monodromy certificates for square-tiled surfaces")]
pub struct Cli {
    /// Print full matrices and reports.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Squares, connectivity, genus and stratum.
    Inspect(OrigamiArgs),
    /// Cylinder decomposition in a rational direction.
    Decompose {
        #[command(flatten)]
        origami: OrigamiArgs,
        #[arg(long, default_value = "1,0", allow_hyphen_values = true)]
        dir: Direction,
    },
    /// Multitwist matrix on the non-tautological homology.
    Twist {
        #[command(flatten)]
        origami: OrigamiArgs,
        #[arg(long, default_value = "1,0", allow_hyphen_values = true)]
        dir: Direction,
        /// Twist scale, an integer or "num/den"; defaults to the least
        /// scale with integral twist counts.
        #[arg(long)]
        scale: Option<String>,
    },
    /// Characteristic polynomial of a product of multitwists.
    Charpoly {
        #[command(flatten)]
        origami: OrigamiArgs,
        /// Directions, applied right to left; defaults to horizontal then
        /// vertical, at the family scales for family members.
        #[arg(long = "dir", allow_hyphen_values = true)]
        dirs: Vec<Direction>,
    },
    /// Galois analysis of an integer polynomial.
    Galois {
        /// Coefficients, constant term first, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = DEFAULT_PRIME_BUDGET)]
        prime_budget: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Density and arithmeticity certificate for one family member.
    Certify(CertifyArgs),
    /// Certify a range of family members into a JSONL file.
    Scan(ScanArgs),
}

#[derive(Args, Debug)]
pub struct OrigamiArgs {
    /// Horizontal gluing in cycle notation, e.g. "(1 2 3)".
    #[arg(long, requires = "v", conflicts_with = "family")]
    pub h: Option<String>,
    /// Vertical gluing in cycle notation.
    #[arg(long, requires = "h")]
    pub v: Option<String>,
    /// Stairs family by genus (4, 5 or 6).
    #[arg(long)]
    pub family: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    /// Override N (the family lock sets it from m).
    #[arg(long = "n-param", requires = "m_param")]
    pub n_param: Option<usize>,
    #[arg(long = "m-param", requires = "n_param")]
    pub m_param: Option<usize>,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    #[arg(long)]
    pub family: u32,
    #[arg(long)]
    pub m: usize,
    #[arg(long = "n-param", requires = "m_param")]
    pub n_param: Option<usize>,
    #[arg(long = "m-param", requires = "n_param")]
    pub m_param: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_PRIME_BUDGET)]
    pub prime_budget: u64,
    /// Write the full report here.
    #[arg(long)]
    pub json_out: Option<PathBuf>,
    /// Re-verify every witness after certifying.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[arg(long)]
    pub family: u32,
    #[arg(long, default_value_t = 1)]
    pub from: usize,
    #[arg(long)]
    pub to: usize,
    /// Keep m ≡ r mod q, given as "r:q"; repeatable. Defaults to the
    /// family's classes.
    #[arg(long = "congruence")]
    pub congruences: Vec<String>,
    /// Scan every m in the range.
    #[arg(long, conflicts_with = "congruences")]
    pub no_filter: bool,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_PRIME_BUDGET)]
    pub prime_budget: u64,
}

/// One line of a scan file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub family: u32,
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "M")]
    pub mm: usize,
    pub verdict: Verdict,
    pub witnesses: String,
    pub wall_ms: u64,
    pub tool_version: String,
    pub seed: u64,
}

struct CliError {
    code: i32,
    msg: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::InvalidPermutation(_)
            | Error::DegreeMismatch(..)
            | Error::BadParameters(_)
            | Error::BadDirection(..)
            | Error::BadScale(_) => EXIT_USAGE,
            Error::DisconnectedOrigami => EXIT_DISCONNECTED,
            _ => EXIT_FAIL,
        };
        CliError { code, msg: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError { code: EXIT_IO, msg: e.to_string() }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError { code: EXIT_IO, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError { code: EXIT_USAGE, msg: msg.into() }
}

/// Seed from the flag, then ORIGAMI_SEED, then the library default.
fn resolve_seed(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("ORIGAMI_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("ORIGAMI_SEED must be an integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

impl OrigamiArgs {
    fn member(&self) -> Result<Option<FamilyMember>, CliError> {
        let ov = self.n_param.zip(self.m_param);
        Ok(match self.family {
            Some(g) => Some(FamilyMember::new(g, self.m, ov)?),
            None => None,
        })
    }

    fn origami(&self) -> Result<Origami, CliError> {
        if let Some(f) = self.member()? {
            return Ok(f.origami);
        }
        match (&self.h, &self.v) {
            (Some(h), Some(v)) => Ok(Origami::parse(h, v)?),
            _ => Err(usage("give --h and --v, or --family")),
        }
    }
}

fn matrix_json(m: &IntMatrix) -> serde_json::Value {
    serde_json::to_value(m).unwrap_or_default()
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}").and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print_json(v: &impl Serialize) -> Result<(), CliError> {
    emit(&to_pretty_json(v)?)
}

fn cmd_inspect(a: &OrigamiArgs) -> Result<i32, CliError> {
    let o = a.origami()?;
    o.require_connected()?;
    let mut out = json!({
        "squares": o.n(),
        "connected": true,
        "genus": o.genus()?,
        "stratum": o.stratum()?,
        "h": o.h().to_string(),
        "v": o.v().to_string(),
    });
    if let Some(f) = a.member()? {
        out["N"] = json!(f.n_param);
        out["M"] = json!(f.m_param);
    }
    print_json(&out)?;
    Ok(EXIT_OK)
}

fn cmd_decompose(a: &OrigamiArgs, d: Direction) -> Result<i32, CliError> {
    let o = a.origami()?;
    o.require_connected()?;
    let cyls: Vec<_> = decompose(&o, d)
        .iter()
        .map(|c| {
            json!({
                "length": c.length,
                "height": c.height,
                "modulus": c.modulus().to_string(),
                "start_square": c.start.0 + 1,
            })
        })
        .collect();
    let area: usize = decompose(&o, d).iter().map(|c| c.length * c.height).sum();
    print_json(&json!({ "direction": d.to_string(), "cylinders": cyls, "area": area }))?;
    Ok(EXIT_OK)
}

fn cmd_twist(a: &OrigamiArgs, d: Direction, scale: Option<&str>) -> Result<i32, CliError> {
    let o = a.origami()?;
    let model = build_homology(&o)?;
    let scale = match scale {
        Some(s) => Some(parse_rational(s).ok_or_else(|| usage(format!("bad scale {s:?}")))?),
        None => None,
    };
    let t = multitwist(&model, d, scale)?;
    let twists: Vec<String> = t.twists.iter().map(BigInt::to_string).collect();
    print_json(&json!({
        "direction": d.to_string(),
        "scale": t.scale.to_string(),
        "twists": twists,
        "basis": model.h0_labels(),
        "matrix": matrix_json(&t.matrix),
    }))?;
    Ok(EXIT_OK)
}

fn cmd_charpoly(a: &OrigamiArgs, dirs: &[Direction]) -> Result<i32, CliError> {
    let o = a.origami()?;
    let model = build_homology(&o)?;
    let member = a.member()?;
    let mut product = IntMatrix::identity(model.h0_dim());
    let mut used = Vec::new();
    match (&member, dirs.is_empty()) {
        (Some(f), true) => {
            let (mh, mv, sh, sv) = crate::certify::family_twists(f, &model)?;
            product = &mh * &mv;
            used.push(json!({"direction": "1,0", "scale": sh.to_string()}));
            used.push(json!({"direction": "0,1", "scale": sv.to_string()}));
        }
        _ => {
            let dirs = if dirs.is_empty() { vec![Direction::HORIZONTAL, Direction::VERTICAL] } else { dirs.to_vec() };
            for d in dirs {
                let t = multitwist(&model, d, None)?;
                product = &product * &t.matrix;
                used.push(json!({"direction": d.to_string(), "scale": t.scale.to_string()}));
            }
        }
    }
    let p = product.charpoly()?;
    print_json(&json!({ "twists": used, "charpoly": p, "display": p.to_string() }))?;
    Ok(EXIT_OK)
}

fn parse_poly(s: &str) -> Result<IntPoly, CliError> {
    let coeffs: Result<Vec<BigInt>, _> = s.split(',').map(|c| c.trim().parse::<BigInt>()).collect();
    let p = IntPoly::new(coeffs.map_err(|_| usage(format!("bad coefficient list {s:?}")))?);
    if p.is_zero() {
        return Err(usage("zero polynomial"));
    }
    Ok(p)
}

fn cmd_galois(poly: &str, budget: u64, seed: u64) -> Result<i32, CliError> {
    let p = parse_poly(poly)?;
    let mut out = json!({
        "poly": p,
        "display": p.to_string(),
        "degree": p.deg(),
        "irreducible": irreducibility_over_q(&p, budget),
    });
    let types: Vec<_> = crate::galois::primes_up_to(60)
        .filter_map(|q| match dedekind_type(&p, q) {
            DedekindType::Valid(t) => Some(json!({"p": q, "type": t.to_string()})),
            DedekindType::Invalid => None,
        })
        .collect();
    out["dedekind_types"] = json!(types);
    match p.deg() {
        4 => {
            if let Ok(g) = galois_group_quartic(&p) {
                out["group"] = json!(g);
            }
        }
        5 => {
            if let Ok(ev) = quintic_group_is_s5(&p, budget) {
                out["quintic"] = serde_json::to_value(ev)?;
            }
        }
        _ => {}
    }
    if p.deg() % 2 == 0 && p.deg() >= 4 {
        if let Ok(pair) = trace_polynomial(&p) {
            out["trace_poly"] = json!(pair.q);
            out["real_split"] = json!(real_split(&pair)?);
            out["hyperoctahedral"] = serde_json::to_value(hyperoctahedral_certificate(&pair, budget, seed))?;
        }
    }
    print_json(&out)?;
    Ok(EXIT_OK)
}

fn certify_one(family: u32, m: usize, ov: Option<(usize, usize)>, budget: u64, seed: u64) -> Result<CertificateReport, Error> {
    arithmeticity_certificate(family, m, &CertifyOptions { prime_budget: budget, seed, overrides: ov })
}

fn summary(r: &CertificateReport) -> String {
    let mut parts = Vec::new();
    if let Some(h) = &r.density.pinching.hyperoctahedral {
        if let Some(p) = h.irreducibility_prime {
            parts.push(format!("irreducible mod {p}"));
        }
        if let Some((p, t)) = &h.type_witness {
            parts.push(format!("type {t} mod {p}"));
        }
    }
    if let Some(t) = &r.arithmeticity.triple {
        parts.push(format!("(a,b,c) = ({},{},{})", t.a, t.b, t.c));
    }
    if let Some(w) = &r.arithmeticity.witness {
        let word: Vec<String> = w.word.iter().map(|l| format!("R{}^{}", l.generator + 1, l.exponent)).collect();
        parts.push(format!("U = {}", word.join("·")));
    }
    if let Some(f) = r.failure() {
        parts.push(f);
    }
    parts.join("; ")
}

fn cmd_certify(a: &CertifyArgs, verbose: u8) -> Result<i32, CliError> {
    let seed = resolve_seed(a.seed)?;
    let r = certify_one(a.family, a.m, a.n_param.zip(a.m_param), a.prime_budget, seed)?;
    if let Some(path) = &a.json_out {
        std::fs::write(path, to_canonical_json(&r)? + "\n")?;
    }
    if verbose > 0 {
        print_json(&r)?;
    } else {
        emit(&format!(
            "genus {} m={} N={} M={}: density {}, arithmeticity {} -> {}\n  {}",
            a.family,
            a.m,
            r.origami.n_param,
            r.origami.m_param,
            r.density.outcome,
            r.arithmeticity.outcome,
            r.verdict.as_str(),
            summary(&r)
        ))?;
    }
    if a.verify {
        verify_report(&r)?;
        emit("  witnesses re-verified")?;
    }
    Ok(r.verdict.exit_code())
}

fn default_congruences(f: Family) -> Vec<(usize, usize)> {
    match f {
        Family::G4 => vec![(1, 11), (1, 13)],
        Family::G5 => vec![(1, 11), (1, 31)],
        Family::G6 => vec![(2, 17), (2, 19), (2, 29), (2, 89)],
    }
}

fn parse_congruence(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || usage(format!("congruence must look like \"r:q\", got {s:?}"));
    let (r, q) = s.split_once(':').ok_or_else(bad)?;
    let (r, q): (usize, usize) = (r.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?);
    if q == 0 {
        return Err(bad());
    }
    Ok((r % q, q))
}

/// The m in [from, to] passing every congruence.
pub fn scan_targets(from: usize, to: usize, congruences: &[(usize, usize)]) -> Vec<usize> {
    (from.max(1)..=to).filter(|m| congruences.iter().all(|&(r, q)| m % q == r)).collect()
}

/// Keys already present in a scan file; unreadable lines are skipped.
pub fn existing_records(path: &Path) -> std::io::Result<BTreeSet<(u32, usize)>> {
    let mut seen = BTreeSet::new();
    let f = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(seen),
        Err(e) => return Err(e),
    };
    for line in BufReader::new(f).lines() {
        if let Ok(r) = serde_json::from_str::<ScanRecord>(&line?) {
            seen.insert((r.family, r.m));
        }
    }
    Ok(seen)
}

fn scan_one(a: &ScanArgs, m: usize, seed: u64) -> ScanRecord {
    let t = Instant::now();
    let (verdict, witnesses, n, mm) = match certify_one(a.family, m, None, a.prime_budget, seed) {
        Ok(r) => (r.verdict, summary(&r), r.origami.n_param, r.origami.m_param),
        Err(e) => (Verdict::Fail, format!("error: {e}"), 0, 0),
    };
    ScanRecord {
        family: a.family,
        m,
        n,
        mm,
        verdict,
        witnesses,
        wall_ms: t.elapsed().as_millis() as u64,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        seed,
    }
}

fn cmd_scan(a: &ScanArgs) -> Result<i32, CliError> {
    let family = Family::from_genus(a.family)?;
    let seed = resolve_seed(a.seed)?;
    if a.to < a.from {
        return Err(usage("empty range"));
    }
    let cong = if a.no_filter {
        vec![]
    } else if a.congruences.is_empty() {
        default_congruences(family)
    } else {
        a.congruences.iter().map(|s| parse_congruence(s)).collect::<Result<_, _>>()?
    };
    let seen = existing_records(&a.out)?;
    let todo: Vec<usize> =
        scan_targets(a.from, a.to, &cong).into_iter().filter(|m| !seen.contains(&(a.family, *m))).collect();
    let mut file = OpenOptions::new().create(true).append(true).open(&a.out)?;

    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<ScanRecord>();
    let mut counts = std::collections::BTreeMap::<&'static str, usize>::new();
    let mut io_err = None;
    std::thread::scope(|s| {
        for _ in 0..a.jobs.max(1).min(todo.len().max(1)) {
            let tx = tx.clone();
            let (todo, next) = (&todo, &next);
            s.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&m) = todo.get(i) else { break };
                if tx.send(scan_one(a, m, seed)).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        for rec in rx {
            *counts.entry(rec.verdict.as_str()).or_default() += 1;
            let line = to_canonical_json(&rec).map_err(std::io::Error::other);
            if let Err(e) = line.and_then(|l| writeln!(file, "{l}").and_then(|_| file.flush())) {
                io_err.get_or_insert(e);
            }
        }
    });
    if let Some(e) = io_err {
        return Err(e.into());
    }
    let summary: Vec<String> = counts.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    emit(&format!(
        "{} new records ({} already present){}{}",
        todo.len(),
        seen.len(),
        if summary.is_empty() { "" } else { "; " },
        summary.join(", ")
    ))?;
    Ok(EXIT_OK)
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let res = match &cli.command {
        Command::Inspect(a) => cmd_inspect(a),
        Command::Decompose { origami, dir } => cmd_decompose(origami, *dir),
        Command::Twist { origami, dir, scale } => cmd_twist(origami, *dir, scale.as_deref()),
        Command::Charpoly { origami, dirs } => cmd_charpoly(origami, dirs),
        Command::Galois { poly, prime_budget, seed } => {
            resolve_seed(*seed).and_then(|s| cmd_galois(poly, *prime_budget, s))
        }
        Command::Certify(a) => cmd_certify(a, cli.verbose),
        Command::Scan(a) => cmd_scan(a),
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            eprintln!("origami: {}", e.msg);
            e.code
        }
    }
}
