//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;

use projcode::bounds::{cdc_bounds, projective_size, pspace_lower_bound};
use projcode::channel::{check_feasible, run_trial, summarize, ChannelConfig};
use projcode::construct::{
    build_fixture, fixture, fixture_codes, fixture_special_vector, lift, multilevel_default, parse_vector, puncture,
    puncture_profile, spread_like, ConstantWeightCode, FIXTURES,
};
use projcode::distance::{distance_fast, min_distance_rows};
use projcode::enumerate::{bits_to_string, decode_extended, encode_extended, parse_bits, GrassmannIndex};
use projcode::ff::field_of_order;
use projcode::rankmetric::{closed_form_d2_exponent, d2_optimal_exponent, mrd_rectangle};
use projcode::subspace::{weight_k_vectors_desc, IdentifyingVector, Subspace};

use crate::codefile::{load_code, save_code, to_text};
use crate::output::{Cell, Format, Table};
use crate::{CliError, SubspaceCode};

#[derive(Debug, Parser)]
#[command(name = "projcode", version, about = "Subspace codes in projective space over finite fields")]
pub struct Cli {
    /// Output format for tables.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the primary output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code and emit it as a code file.
    #[command(subcommand)]
    Construct(Construct),
    /// Bounds on A_q(n, 2δ, k), or with --d the projective-space lower bound on A_q(n, d).
    Bounds(BoundsArgs),
    /// Subspace distance between two subspaces given as RREF-or-spanning row literals.
    Distance(DistanceArgs),
    /// Binary indexing of G_2(n, k).
    #[command(subcommand)]
    Index(Index),
    /// Operator-channel simulation with minimum-distance decoding.
    Simulate(SimulateArgs),
    /// Recompute size and minimum distance of a code file.
    Verify(VerifyArgs),
    /// Exploratory reports.
    #[command(subcommand)]
    Experiment(Experiment),
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// Multilevel code from a named fixture, an explicit word list, or a lexicode.
    Multilevel(MultilevelArgs),
    /// Lifted maximum rank distance code: row spaces of [I | X].
    Lift(LiftArgs),
    /// Block-shifted multilevel code with distance 2k.
    Spread(SpreadArgs),
    /// Puncture a constant-dimension code into P_q(n−1).
    Puncture(PunctureArgs),
}

#[derive(Debug, Args)]
pub struct MultilevelArgs {
    #[arg(long, conflicts_with_all = ["words", "lexicode"])]
    pub fixture: Option<String>,
    /// Comma-separated constant-weight words.
    #[arg(long, value_delimiter = ',')]
    pub words: Option<Vec<String>>,
    /// Greedy lexicode with this length, weight and Hamming distance 2δ.
    #[arg(long, num_args = 2, value_names = ["N", "K"])]
    pub lexicode: Option<Vec<usize>>,
    #[arg(long, default_value_t = 2)]
    pub delta: usize,
    #[arg(long, default_value_t = 2)]
    pub q: u32,
}

#[derive(Debug, Args)]
pub struct LiftArgs {
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    /// Rows of the rank-metric matrices (the subspace dimension).
    #[arg(long)]
    pub k: usize,
    /// Columns of the rank-metric matrices (n − k).
    #[arg(long)]
    pub cols: usize,
    /// Minimum rank distance.
    #[arg(long)]
    pub d: usize,
}

#[derive(Debug, Args)]
pub struct SpreadArgs {
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct PunctureArgs {
    #[arg(long, conflicts_with = "fixture", required_unless_present = "fixture")]
    pub code: Option<PathBuf>,
    #[arg(long)]
    pub fixture: Option<String>,
    /// Special vector as a digit string; defaults to the fixture's, else 10…01.
    #[arg(long)]
    pub special: Option<String>,
    /// Append the zero subspace and the whole space.
    #[arg(long)]
    pub extremes: bool,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long, default_value = "2")]
    pub q: String,
    /// A value or an inclusive range a..b.
    #[arg(long)]
    pub n: String,
    /// Defaults to every k ≤ n/2.
    #[arg(long)]
    pub k: Option<String>,
    /// Defaults to every δ ≤ k.
    #[arg(long)]
    pub delta: Option<String>,
    /// Projective-space minimum distance; switches to the A_q(n, d) lower bound.
    #[arg(long, conflicts_with_all = ["k", "delta"])]
    pub d: Option<String>,
}

#[derive(Debug, Args)]
pub struct DistanceArgs {
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    pub u: String,
    pub w: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scheme {
    /// k(n−k)+2 bits covering all of G_2(n,k).
    Full,
    /// Full length with a shared x-bit tail for the small classes.
    Compact,
    /// k(n−k)+1 bits covering four echelon classes.
    Extended,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Radix {
    Bin,
    Hex,
}

#[derive(Debug, Subcommand)]
pub enum Index {
    /// Subspace literal to bit vector.
    Encode(IndexArgs),
    /// Bit vector (binary, or hex with a 0x prefix) to subspace literal.
    Decode(IndexArgs),
}

#[derive(Debug, Args)]
pub struct IndexArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value = "full")]
    pub scheme: Scheme,
    #[arg(long, value_enum, default_value = "bin")]
    pub radix: Radix,
    pub value: String,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, conflicts_with = "fixture", required_unless_present = "fixture")]
    pub code: Option<PathBuf>,
    #[arg(long)]
    pub fixture: Option<String>,
    #[arg(long)]
    pub t: usize,
    #[arg(long)]
    pub rho: usize,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// One row per trial instead of the summary.
    #[arg(long)]
    pub outcomes: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub code: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Experiment {
    /// Weight-4 words of the extended Hamming [8,4,4] code as a multilevel input.
    Hamming {
        /// Also check the minimum distance of the resulting code.
        #[arg(long)]
        check_distance: bool,
    },
    /// Per-word puncture counts of a fixture's rank codes.
    PunctureProfile {
        #[arg(long)]
        fixture: String,
        #[arg(long)]
        special: Option<String>,
    },
    /// Closed-form d=2 exponent against the construction, for all weight-k words.
    ClosedForm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

/// Parse a value or an inclusive range a..b.
fn range(s: &str) -> Result<std::ops::RangeInclusive<usize>, CliError> {
    let bad = || CliError::Usage(format!("expected a number or a range a..b, got {s:?}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (a.parse().map_err(|_| bad())?, b.trim_start_matches('=').parse().map_err(|_| bad())?);
            Ok(a..=b)
        }
        None => {
            let v = s.parse().map_err(|_| bad())?;
            Ok(v..=v)
        }
    }
}

pub struct Ctx {
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl Ctx {
    fn emit(&self, text: &str) -> Result<(), CliError> {
        match &self.out {
            Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
            None => {
                std::io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string()))?;
                Ok(())
            }
        }
    }

    fn table(&self, t: &Table) -> Result<(), CliError> {
        self.emit(&t.render(self.format))
    }
}

fn load_or_fixture(code: &Option<PathBuf>, fx: &Option<String>) -> Result<SubspaceCode, CliError> {
    match (code, fx) {
        (Some(p), _) => Ok(load_code(p)?),
        (None, Some(name)) => Ok(build_fixture(fixture(name)?)?),
        (None, None) => Err(CliError::Usage("give --code or --fixture".into())),
    }
}

/// Minimum distance over all pairs, split across threads by first index.
pub fn parallel_min_distance(code: &SubspaceCode) -> Result<Option<usize>, CliError> {
    if code.len() < 2 {
        return Ok(None);
    }
    let d = (0..code.len())
        .into_par_iter()
        .map(|i| min_distance_rows(&code.words, i..i + 1))
        .try_reduce(|| usize::MAX, |a, b| Ok(a.min(b)))?;
    Ok(Some(d))
}

fn code_summary(code: &SubspaceCode, min_distance: Option<usize>) -> Table {
    let mut t = Table::new(vec!["q", "n", "kind", "size", "dimensions", "min_distance"]);
    let kind = match code.kind {
        projcode::construct::CodeKind::ConstantDimension => "constant-dimension",
        projcode::construct::CodeKind::Projective => "projective",
    };
    t.push(vec![
        code.q().into(),
        code.n.into(),
        kind.into(),
        code.len().into(),
        Cell::List(code.dimensions()),
        min_distance.into(),
    ]);
    t
}

/// With --out, write the code file and print a summary; otherwise print the code file.
fn emit_code(ctx: &Ctx, code: &SubspaceCode) -> Result<(), CliError> {
    match &ctx.out {
        Some(p) => {
            save_code(code, p)?;
            let t = code_summary(code, None).render(ctx.format);
            std::io::stdout().write_all(t.as_bytes()).map_err(|e| CliError::Io(e.to_string()))?;
            Ok(())
        }
        None => ctx.emit(&to_text(code)?),
    }
}

fn construct(ctx: &Ctx, c: &Construct) -> Result<(), CliError> {
    let code = match c {
        Construct::Multilevel(a) => match (&a.fixture, &a.words, &a.lexicode) {
            (Some(name), _, _) => build_fixture(fixture(name)?)?,
            (None, Some(words), _) => {
                let field = field_of_order(a.q)?;
                let refs: Vec<&str> = words.iter().map(String::as_str).collect();
                let cw = ConstantWeightCode::parse(&refs, 2 * a.delta)?;
                multilevel_default(&field, &cw, a.delta)?
            }
            (None, None, Some(nk)) => {
                let field = field_of_order(a.q)?;
                let cw = ConstantWeightCode::lexicode(nk[0], nk[1], 2 * a.delta);
                multilevel_default(&field, &cw, a.delta)?
            }
            _ => return Err(CliError::Usage("give --fixture, --words or --lexicode".into())),
        },
        Construct::Lift(a) => {
            let field = field_of_order(a.q)?;
            let rank_code = mrd_rectangle(&field, a.k, a.cols, a.d)?;
            lift(&field, &rank_code.codewords()?)?
        }
        Construct::Spread(a) => spread_like(&field_of_order(a.q)?, a.n, a.k)?,
        Construct::Puncture(a) => {
            let code = load_or_fixture(&a.code, &a.fixture)?;
            let v = match (&a.special, &a.fixture) {
                (Some(s), _) => parse_vector(s)?,
                (None, Some(name)) => fixture_special_vector(fixture(name)?)?,
                (None, None) => projcode::construct::default_special_vector(code.n),
            };
            puncture(&code, &v, a.extremes)?
        }
    };
    emit_code(ctx, &code)
}

fn bounds(ctx: &Ctx, a: &BoundsArgs) -> Result<(), CliError> {
    let qs = range(&a.q)?;
    let ns = range(&a.n)?;
    if let Some(d) = &a.d {
        let mut t = Table::new(vec!["q", "n", "d", "projective_size", "gv_lower", "gv_lower_ceil"]);
        for q in qs {
            for n in ns.clone() {
                for d in range(d)? {
                    let b = pspace_lower_bound(n, d, q as u32)?;
                    let ceil = b.ceil().to_integer().to_biguint().unwrap_or_default();
                    t.push(vec![q.into(), n.into(), d.into(), projective_size(n, q as u32).into(), b.to_string().into(), ceil.into()]);
                }
            }
        }
        return ctx.table(&t);
    }
    let mut t = Table::new(vec![
        "q",
        "n",
        "k",
        "delta",
        "sphere_packing",
        "singleton",
        "anticode",
        "johnson",
        "delta_k_upper",
        "delta_k_exact",
        "delta_k_lower",
        "sphere_covering",
        "graham_sloane",
        "best_lower",
        "best_upper",
    ]);
    for q in qs {
        for n in ns.clone() {
            let ks = match &a.k {
                Some(k) => range(k)?,
                None => 1..=n / 2,
            };
            for k in ks {
                let ds = match &a.delta {
                    Some(d) => range(d)?,
                    None => 1..=k,
                };
                for delta in ds {
                    let r = cdc_bounds(n, k, delta, q as u32)?;
                    t.push(vec![
                        q.into(),
                        n.into(),
                        k.into(),
                        delta.into(),
                        r.sphere_packing_upper.clone().into(),
                        r.singleton_upper.clone().into(),
                        r.anticode_upper.clone().into(),
                        r.johnson_upper.clone().into(),
                        r.delta_k_upper.clone().into(),
                        r.delta_k_exact.clone().into(),
                        r.delta_k_lower.clone().into(),
                        r.sphere_covering_lower.to_string().into(),
                        r.graham_sloane_lower.as_ref().map(ToString::to_string).into(),
                        r.best_lower().into(),
                        r.best_upper().into(),
                    ]);
                }
            }
        }
    }
    ctx.table(&t)
}

fn parse_subspace(q: u32, lit: &str) -> Result<Subspace, CliError> {
    let field = field_of_order(q)?;
    let n = lit.split(';').next().map_or(0, |r| r.trim().chars().count());
    Ok(Subspace::parse(field, n, lit)?)
}

fn distance(ctx: &Ctx, a: &DistanceArgs) -> Result<(), CliError> {
    let (u, w) = (parse_subspace(a.q, &a.u)?, parse_subspace(a.q, &a.w)?);
    let d = distance_fast(&u, &w)?;
    ctx.emit(&format!("{d}\n"))
}

fn bits_out(bits: &[bool], radix: Radix) -> String {
    match radix {
        Radix::Bin => bits_to_string(bits),
        Radix::Hex => {
            let digits = bits.len().div_ceil(4);
            let mut value = BigUint::default();
            for &b in bits {
                value = (value << 1u32) | BigUint::from(b as u8);
            }
            format!("0x{:0>width$}", value.to_str_radix(16), width = digits)
        }
    }
}

fn bits_in(s: &str, len: usize) -> Result<Vec<bool>, CliError> {
    if let Some(hex) = s.strip_prefix("0x") {
        let v = BigUint::parse_bytes(hex.as_bytes(), 16).ok_or_else(|| CliError::Usage(format!("bad hex value {s:?}")))?;
        if v.bits() as usize > len {
            return Err(CliError::Usage(format!("{s} does not fit in {len} bits")));
        }
        return Ok((0..len).rev().map(|i| v.bit(i as u64)).collect());
    }
    parse_bits(s).ok_or_else(|| CliError::Usage(format!("expected a binary string or 0x-prefixed hex, got {s:?}")))
}

fn index(ctx: &Ctx, cmd: &Index) -> Result<(), CliError> {
    let (a, encode) = match cmd {
        Index::Encode(a) => (a, true),
        Index::Decode(a) => (a, false),
    };
    let len = match a.scheme {
        Scheme::Extended => a.k * a.n.saturating_sub(a.k) + 1,
        _ => a.k * a.n.saturating_sub(a.k) + 2,
    };
    let text = if encode {
        let u = Subspace::parse(field_of_order(2)?, a.n, &a.value)?;
        let bits = match a.scheme {
            Scheme::Full => GrassmannIndex::new(a.n, a.k)?.encode(&u)?,
            Scheme::Compact => GrassmannIndex::compact(a.n, a.k)?.encode(&u)?,
            Scheme::Extended => decode_extended(&u, a.n, a.k)?,
        };
        bits_out(&bits, a.radix)
    } else {
        let bits = bits_in(&a.value, len)?;
        let u = match a.scheme {
            Scheme::Full => GrassmannIndex::new(a.n, a.k)?.decode(&bits)?,
            Scheme::Compact => GrassmannIndex::compact(a.n, a.k)?.decode(&bits)?,
            Scheme::Extended => encode_extended(&bits, a.n, a.k)?,
        };
        u.to_literal()
    };
    ctx.emit(&format!("{text}\n"))
}

fn simulate(ctx: &Ctx, a: &SimulateArgs) -> Result<(), CliError> {
    let code = load_or_fixture(&a.code, &a.fixture)?;
    check_feasible(&code.words, a.rho, a.t)?;
    let cfg = ChannelConfig { rho: a.rho, t: a.t, seed: a.seed, trials: a.trials };
    let outcomes = (0..a.trials as u64)
        .into_par_iter()
        .map(|r| run_trial(&code.words, &cfg, r))
        .collect::<Result<Vec<_>, _>>()?;
    let report = summarize(outcomes);
    if a.outcomes {
        let mut t = Table::new(vec!["trial", "sent_index", "sent", "received", "decoded", "channel_distance", "decode_distance", "success"]);
        for (r, o) in report.outcomes.iter().enumerate() {
            t.push(vec![
                r.into(),
                o.index.into(),
                o.sent.to_literal().into(),
                o.received.to_literal().into(),
                o.decoded.as_ref().map(Subspace::to_literal).into(),
                o.channel_distance.into(),
                o.decode_distance.into(),
                o.success.into(),
            ]);
        }
        return ctx.table(&t);
    }
    let mut t = Table::new(vec!["size", "min_distance", "rho", "t", "seed", "trials", "successes", "success_rate", "guaranteed"]);
    let d = parallel_min_distance(&code)?;
    let guaranteed = d.map(|d| 2 * (a.t + a.rho) < d);
    t.push(vec![
        code.len().into(),
        d.into(),
        a.rho.into(),
        a.t.into(),
        a.seed.into(),
        report.trials.into(),
        report.successes.into(),
        report.success_rate().into(),
        guaranteed.into(),
    ]);
    ctx.table(&t)
}

fn verify(ctx: &Ctx, path: &Path) -> Result<(), CliError> {
    let code = load_code(path)?;
    let d = parallel_min_distance(&code)?;
    ctx.table(&code_summary(&code, d))
}

/// Weight-4 words of the extended Hamming [8,4,4] code, lexicographically descending.
pub fn hamming_weight4_words() -> Vec<IdentifyingVector> {
    let h = [[1u8, 1, 1, 1, 1, 1, 1, 1], [0, 0, 0, 0, 1, 1, 1, 1], [0, 0, 1, 1, 0, 0, 1, 1], [0, 1, 0, 1, 0, 1, 0, 1]];
    weight_k_vectors_desc(8, 4)
        .into_iter()
        .filter(|w| h.iter().all(|row| row.iter().zip(&w.bits).filter(|&(&a, &b)| a == 1 && b).count() % 2 == 0))
        .collect()
}

fn experiment(ctx: &Ctx, e: &Experiment) -> Result<(), CliError> {
    match e {
        Experiment::Hamming { check_distance } => {
            let words = hamming_weight4_words();
            let fx = fixture("ex-3.5.3.11")?;
            let mut fixture_words: Vec<&str> = fx.words.to_vec();
            fixture_words.sort_unstable();
            let mut ours: Vec<String> = words.iter().map(ToString::to_string).collect();
            ours.sort_unstable();
            let field = field_of_order(2)?;
            let cw = ConstantWeightCode::new(words.clone(), 4)?;
            let code = multilevel_default(&field, &cw, 2)?;
            let d = if *check_distance { parallel_min_distance(&code)? } else { None };
            let mut t = Table::new(vec!["words", "matches_fixture", "size", "min_distance"]);
            t.push(vec![
                words.len().into(),
                (ours == fixture_words).into(),
                code.len().into(),
                d.into(),
            ]);
            ctx.table(&t)
        }
        Experiment::PunctureProfile { fixture: name, special } => {
            let fx = fixture(name)?;
            let v = match special {
                Some(s) => parse_vector(s)?,
                None => fixture_special_vector(fx)?,
            };
            let codes = fixture_codes(fx)?;
            let mut t = Table::new(vec!["word", "size", "inside_q", "through_v"]);
            for (w, c) in fx.words.iter().zip(&codes) {
                let iv = IdentifyingVector::parse(w).ok_or_else(|| CliError::Usage(format!("bad word {w}")))?;
                let (a, b) = puncture_profile(&iv, c, &v);
                t.push(vec![(*w).into(), c.size().into(), a.into(), b.into()]);
            }
            ctx.table(&t)
        }
        Experiment::ClosedForm { n, k } => {
            let mut t = Table::new(vec!["word", "construction_exponent", "closed_form_exponent", "agree"]);
            for w in weight_k_vectors_desc(*n, *k) {
                let (a, b) = (d2_optimal_exponent(&w), closed_form_d2_exponent(&w));
                t.push(vec![w.to_string().into(), a.into(), b.to_string().into(), (a as i64 == b).into()]);
            }
            ctx.table(&t)
        }
    }
}

pub fn dispatch(cli: Cli) -> Result<(), CliError> {
    let ctx = Ctx { format: cli.format, out: cli.out };
    match &cli.command {
        Command::Construct(c) => construct(&ctx, c),
        Command::Bounds(a) => bounds(&ctx, a),
        Command::Distance(a) => distance(&ctx, a),
        Command::Index(i) => index(&ctx, i),
        Command::Simulate(a) => simulate(&ctx, a),
        Command::Verify(a) => verify(&ctx, &a.code),
        Command::Experiment(e) => experiment(&ctx, e),
    }
}

/// Parse and run; returns the process exit code (0 ok, 1 domain error, 2 usage error).
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Fixture names, for help text and tests.
pub fn fixture_names() -> Vec<&'static str> {
    FIXTURES.iter().map(|f| f.name).collect()
}
