//! The `univ` command-line front end.
//!
//! Exit codes: 0 on success, 1 for usage and parse errors, 2 for domain
//! errors (rank out of range, symbol out of range, empty set, failed or
//! over-sized verification).

use std::ffi::OsString;
use std::io::{self, Write};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::arches::arch_factorize;
use crate::closed_forms::{count_arches, count_index_zero, count_one_universal, BigCount};
use crate::error::Error;
use crate::oracle;
use crate::ranking::rank;
use crate::universal_dp::{build_table, count_universal};
use crate::unranking::{enumerate, unrank};
use crate::words::{format_symbols, format_word, parse_word};

#[derive(Debug, Parser)]
#[command(
    name = "univ",
    about = "Count, rank, unrank and enumerate k-subsequence-universal words",
    version
)]
pub struct CliConfig {
    /// Emit one JSON object per result instead of plain text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of n-length k-universal words over {1..sigma}
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        sigma: u32,
    },
    /// 0-based rank of WORD among the k-universal words of its length
    Rank {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        sigma: u32,
        word: String,
    },
    /// The k-universal word with the given 0-based rank
    Unrank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        sigma: u32,
        rank: String,
    },
    /// Stream k-universal words in lexicographic order
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        sigma: u32,
        /// First rank to emit (0-based)
        #[arg(long)]
        from: Option<String>,
        /// Maximum number of words to emit
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Arch factorization and universality index of WORD
    Arch {
        #[arg(long)]
        sigma: u32,
        word: String,
    },
    /// Cross-check the fast algorithms against brute force
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        sigma: u32,
    },
    /// Counts of index-0 words, 1-universal words and arches of length n
    ClosedForms {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: u32,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::EmptyAlphabet => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CliResult = Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(config) => config,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = writeln!(err, "{}", one_line(&e.to_string()));
                    1
                }
            };
        }
    };
    match execute(&config, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn one_line(message: &str) -> String {
    message
        .lines()
        .take_while(|l| !l.starts_with("Usage:"))
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_rank(text: &str) -> Result<BigCount, Failure> {
    text.parse::<BigCount>().map_err(|_| {
        Failure::Usage(format!(
            "invalid rank {text:?}: expected a non-negative decimal"
        ))
    })
}

fn check_sigma(sigma: u32) -> Result<usize, Failure> {
    if sigma == 0 {
        return Err(Error::EmptyAlphabet.into());
    }
    Ok(sigma as usize)
}

fn emit(
    out: &mut dyn Write,
    json: bool,
    command: &str,
    params: Value,
    result: Value,
    text: &str,
) -> CliResult {
    if json {
        let object = json!({ "command": command, "params": params, "result": result });
        writeln!(out, "{object}")?;
    } else {
        writeln!(out, "{text}")?;
    }
    Ok(())
}

fn execute(config: &CliConfig, out: &mut dyn Write) -> CliResult {
    let json = config.json;
    match &config.command {
        &Command::Count { n, k, sigma } => {
            let s = check_sigma(sigma)?;
            let count = count_universal(n, k, s)?.to_string();
            let params = json!({ "n": n, "k": k, "sigma": sigma });
            emit(out, json, "count", params, json!(count), &count)
        }
        Command::Rank { k, sigma, word } => {
            let w = parse_word(word, *sigma)?;
            let table = build_table(w.len(), *k, *sigma as usize)?;
            let result = rank(&w, *k, &table)?;
            let r = result.rank.to_string();
            let params = json!({ "n": w.len(), "k": k, "sigma": sigma, "word": format_word(&w) });
            let value = json!({ "rank": r, "member": result.member });
            emit(
                out,
                json,
                "rank",
                params,
                value,
                &format!("{r}\nmember: {}", result.member),
            )
        }
        Command::Unrank { n, k, sigma, rank } => {
            let s = check_sigma(*sigma)?;
            let r = parse_rank(rank)?;
            let table = build_table(*n, *k, s)?;
            let word = format_word(&unrank(&r, &table)?);
            let params = json!({ "n": n, "k": k, "sigma": sigma, "rank": r.to_string() });
            emit(out, json, "unrank", params, json!(word), &word)
        }
        Command::Enum {
            n,
            k,
            sigma,
            from,
            limit,
        } => {
            let s = check_sigma(*sigma)?;
            let from = match from {
                Some(text) => parse_rank(text)?,
                None => BigCount::zero(),
            };
            let table = build_table(*n, *k, s)?;
            let mut cursor = enumerate(&table, from.clone(), *limit)?;
            let params =
                json!({ "n": n, "k": k, "sigma": sigma, "from": from.to_string(), "limit": limit });
            loop {
                let r = cursor.next_rank().clone();
                let Some(word) = cursor.next() else { break };
                let text = format_word(&word);
                let value = json!({ "rank": r.to_string(), "word": text });
                emit(out, json, "enum", params.clone(), value, &text)?;
            }
            Ok(())
        }
        Command::Arch { sigma, word } => {
            let w = parse_word(word, *sigma)?;
            let f = arch_factorize(&w);
            let factors: Vec<String> = f
                .factors(&w)
                .into_iter()
                .map(|s| format_symbols(s, w.alphabet()))
                .collect();
            let value = json!({
                "factors": factors,
                "arch_starts": f.arch_starts(),
                "suffix": format_symbols(f.suffix(&w), w.alphabet()),
                "suffix_start": f.suffix_start(),
                "index": f.arch_count(),
            });
            let params = json!({ "sigma": sigma, "word": format_word(&w) });
            let text = format!("{}\nindex: {}", f.display(&w), f.arch_count());
            emit(out, json, "arch", params, value, &text)
        }
        &Command::Verify { n, k, sigma } => verify(n, k, sigma, json, out),
        &Command::ClosedForms { n, sigma } => {
            let s = check_sigma(sigma)?;
            let zero = count_index_zero(n, s).to_string();
            let one = count_one_universal(n, s).to_string();
            let arches = count_arches(n, s).to_string();
            let value = json!({ "index_zero": zero, "one_universal": one, "arches": arches });
            let text = format!("index-zero: {zero}\none-universal: {one}\narches: {arches}");
            emit(
                out,
                json,
                "closed-forms",
                json!({ "n": n, "sigma": sigma }),
                value,
                &text,
            )
        }
    }
}

fn verify(n: usize, k: usize, sigma: u32, json: bool, out: &mut dyn Write) -> CliResult {
    let s = check_sigma(sigma)?;
    let members = oracle::brute_enumerate(n, k, sigma)?;
    let everything = oracle::all_words(n, sigma)?;
    let table = build_table(n, k, s)?;

    let mut checks: Vec<(&str, bool)> = Vec::new();
    let count = count_universal(n, k, s)?;
    checks.push(("count", count == BigCount::from(members.len())));

    let listed: Vec<_> = enumerate(&table, BigCount::zero(), None)?.collect();
    checks.push(("enum", listed == members));

    let mut rank_ok = true;
    for w in &everything {
        let got = rank(w, k, &table)?;
        let at = oracle::insertion_index(&members, w);
        let member = members.get(at) == Some(w);
        rank_ok &= got.rank == BigCount::from(at) && got.member == member;
    }
    checks.push(("rank", rank_ok));

    let mut unrank_ok = true;
    for (i, w) in members.iter().enumerate() {
        unrank_ok &= unrank(&BigCount::from(i), &table)? == *w;
    }
    checks.push(("unrank", unrank_ok));

    let pass = checks.iter().all(|(_, ok)| *ok);
    let verdict = |ok: bool| if ok { "pass" } else { "fail" };
    let mut text: Vec<String> = checks
        .iter()
        .map(|(name, ok)| format!("{name}: {}", verdict(*ok)))
        .collect();
    text.push(format!("members: {}", members.len()));
    text.push(format!("verify: {}", verdict(pass)));
    let value = json!({
        "members": members.len().to_string(),
        "checks": checks.iter().map(|(name, ok)| json!({ "name": name, "pass": ok })).collect::<Vec<_>>(),
        "pass": pass,
    });
    emit(
        out,
        json,
        "verify",
        json!({ "n": n, "k": k, "sigma": sigma }),
        value,
        &text.join("\n"),
    )?;
    if pass {
        Ok(())
    } else {
        Err(Failure::Domain("verification failed".into()))
    }
}
