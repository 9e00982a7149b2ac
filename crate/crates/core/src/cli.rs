//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 on a mismatch, 2 on a usage or
//! engine error. Nothing is written to stdout on exit 2. Orders are given in
//! powers of `q` and doubled internally.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bailey::{
    fine_identity_check, lovejoy_star, slater_e1, square_base, symmetrize_b, u_pair_chain, u_pair_closed, verify_pair,
    BaileyPair,
};
use crate::oracle::{enumerate, Family};
use crate::series::{HalfExp, Monomial, QSeries, Result, SeriesError};
use crate::theta::{theorem_rhs, Identity};
use crate::verify::{lhs_series, verify_theorem};

#[derive(Parser, Debug)]
#[command(name = "qbailey", about = "Exact q-series checks for Bailey pairs and partition identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run an identity, pair or Fine check.
    #[command(subcommand)]
    Verify(Verify),
    /// Print signed counts of a partition family.
    Enumerate(EnumerateArgs),
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    Theorem(TheoremArgs),
    Pair(PairArgs),
    Fine(FineArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PairName {
    E1,
    Star,
    Sym,
    Squared,
    UClosed,
    UChain,
}

fn order(s: &str) -> std::result::Result<u32, String> {
    let k: u32 = s.parse().map_err(|e| format!("{e}"))?;
    if k == 0 || k > 1 << 20 {
        return Err(format!("order must be between 1 and {}", 1 << 20));
    }
    Ok(k)
}

#[derive(Args, Debug)]
pub struct TheoremArgs {
    #[arg(long)]
    pub id: u32,
    /// Truncation order in powers of q.
    #[arg(long, default_value = "100", value_parser = order)]
    pub order: u32,
    /// Also compare against enumerated counts for n up to this bound.
    #[arg(long)]
    pub oracle: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Append a coefficient table of both sides (TSV only).
    #[arg(long)]
    pub dump: bool,
    /// Include elapsed_ms in JSON reports.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long, value_enum)]
    pub name: PairName,
    #[arg(long, default_value = "q^1/2", allow_hyphen_values = true)]
    pub b: Monomial,
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
    #[arg(long, default_value = "40", value_parser = order)]
    pub order: u32,
}

#[derive(Args, Debug)]
pub struct FineArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub b: Monomial,
    #[arg(long, allow_hyphen_values = true)]
    pub t: Monomial,
    #[arg(long, default_value = "60", value_parser = order)]
    pub order: u32,
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn done(passed: bool, stdout: String) -> Self {
        Outcome { code: if passed { 0 } else { 1 }, stdout, stderr: String::new() }
    }

    fn usage(msg: impl ToString) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: msg.to_string() }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) if !e.use_stderr() => Outcome { code: 0, stdout: e.to_string(), stderr: String::new() },
        Err(e) => Outcome::usage(e.render()),
    }
}

pub fn execute(cmd: Command) -> Outcome {
    let result = match cmd {
        Command::Verify(Verify::Theorem(a)) => theorem(&a),
        Command::Verify(Verify::Pair(a)) => pair(&a),
        Command::Verify(Verify::Fine(a)) => fine(&a),
        Command::Enumerate(a) => Ok(enumerate_cmd(&a)),
    };
    result.unwrap_or_else(|e| Outcome::usage(format!("error: {e}\n")))
}

fn theorem(a: &TheoremArgs) -> Result<Outcome> {
    let id = Identity::from_id(a.id).ok_or_else(|| SeriesError::InvalidArgument(format!("no identity {}", a.id)))?;
    let trunc = HalfExp::q(a.order);
    let reports = verify_theorem(id, trunc, a.oracle)?;
    let passed = reports.iter().all(|r| r.passed());

    let mut out = String::new();
    match a.format {
        Format::Json => {
            for r in &reports {
                writeln!(out, "{}", r.to_json(a.timing)).unwrap();
            }
        }
        Format::Tsv => {
            writeln!(out, "identity\tstatus\ttrunc\tfirst_mismatch\tlhs\trhs").unwrap();
            for r in &reports {
                let (at, l, rr) = match &r.first_mismatch {
                    Some(m) => (m.t_units.to_string(), m.lhs.to_string(), m.rhs.to_string()),
                    None => ("-".into(), "-".into(), "-".into()),
                };
                let status = if r.passed() { "pass" } else { "fail" };
                writeln!(out, "{}\t{status}\t{}\t{at}\t{l}\t{rr}", r.identity, r.trunc_t_units).unwrap();
            }
            if a.dump {
                out.push('\n');
                dump(&mut out, &lhs_series(id, trunc)?, &theorem_rhs(id, trunc)?, trunc);
            }
        }
    }
    Ok(Outcome::done(passed, out))
}

fn dump(out: &mut String, lhs: &QSeries, rhs: &QSeries, trunc: HalfExp) {
    writeln!(out, "exponent\tlhs_series\ttheorem_rhs").unwrap();
    for e in 0..=trunc.t_units() {
        let e = HalfExp::new(e);
        writeln!(out, "{e}\t{}\t{}", lhs.coeff(e), rhs.coeff(e)).unwrap();
    }
}

fn build_pair(name: PairName, b: Monomial) -> Result<BaileyPair> {
    match name {
        PairName::E1 => Ok(slater_e1()),
        PairName::Star => lovejoy_star(&slater_e1(), b),
        PairName::Sym => symmetrize_b(&slater_e1(), b),
        PairName::Squared => square_base(&symmetrize_b(&slater_e1(), b)?),
        PairName::UClosed => u_pair_closed(b),
        PairName::UChain => u_pair_chain(b),
    }
}

fn pair(a: &PairArgs) -> Result<Outcome> {
    let p = build_pair(a.name, a.b)?;
    let report = verify_pair(&p, a.n_max, HalfExp::q(a.order))?;
    let json = serde_json::to_string(&report).expect("report serializes");
    Ok(Outcome::done(report.status.passed(), json + "\n"))
}

fn fine(a: &FineArgs) -> Result<Outcome> {
    let report = fine_identity_check(a.b, a.t, HalfExp::q(a.order))?;
    Ok(Outcome::done(report.passed(), format!("{}\n", report.to_json(a.timing))))
}

fn enumerate_cmd(a: &EnumerateArgs) -> Outcome {
    let table = enumerate(a.family, a.n);
    let out = match a.format {
        Format::Json => serde_json::to_string(&table).expect("table serializes") + "\n",
        Format::Tsv => {
            let mut s = String::from("n\tcount\n");
            for (n, c) in table.counts.iter().enumerate() {
                writeln!(s, "{n}\t{c}").unwrap();
            }
            s
        }
    };
    Outcome::done(true, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(line: &str) -> Outcome {
        run(std::iter::once("qbailey").chain(line.split_whitespace()))
    }

    #[test]
    fn usage_errors_exit_2_silently() {
        for line in [
            "verify theorem --id 4",
            "verify theorem --id 1 --order 0",
            "verify theorem --id 1 --order 5 --oracle 6",
            "verify pair --name sym --b 1",
            "verify fine --b 1 --t q",
            "verify fine --b q --t 1",
            "enumerate --family X --n 3",
            "frobnicate",
        ] {
            let o = go(line);
            assert_eq!(o.code, 2, "{line}");
            assert!(o.stdout.is_empty(), "{line}");
            assert!(!o.stderr.is_empty(), "{line}");
        }
    }

    #[test]
    fn enumerate_rows() {
        let o = go("enumerate --family R --n 1");
        assert_eq!(o.code, 0);
        assert_eq!(o.stdout, "n\tcount\n0\t1\n1\t2\n");
    }

    #[test]
    fn negative_monomial_flag_values() {
        assert_eq!(go("verify fine --b -q --t q^2 --order 10").code, 0);
        assert_eq!(go("verify pair --name star --b -q^1/2 --n-max 3 --order 10").code, 0);
    }

    #[test]
    fn dump_lists_every_half_exponent() {
        let o = go("verify theorem --id 3 --order 2 --format tsv --dump");
        assert_eq!(o.code, 0);
        let tail: Vec<&str> = o.stdout.lines().rev().take(5).collect();
        assert_eq!(tail, ["2\t2\t2", "3/2\t0\t0", "1\t2\t2", "1/2\t0\t0", "0\t1\t1"]);
    }
}
