use std::error::Error;
use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::time::Duration;

use clap::ValueEnum;
use zagier_core::zagier::alpha;
use zagier_core::Integer;

use crate::format::write_rows;
use crate::{Format, EXIT_FAIL, EXIT_USAGE};

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    Export,
    Compare,
}

pub const SNAPSHOT: &str = include_str!("../data/A216912.txt");
const BFILE_URL: &str = "https://oeis.org/A216912/b216912.txt";
const FETCH_TIMEOUT: Duration = Duration::from_secs(10);

/// a(n) = alpha_{2n}/4.
pub fn term(n: u64) -> zagier_core::Result<Integer> {
    Ok(alpha(2 * n)? / 4)
}

/// Parses b-file text: "n value" per line, `#` comments and blank lines
/// skipped.
pub fn parse_bfile(text: &str) -> Result<Vec<(u64, Integer)>, String> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let parsed = match (parts.next(), parts.next(), parts.next()) {
            (Some(n), Some(v), None) => n.parse::<u64>().ok().zip(v.parse::<Integer>().ok()),
            _ => None,
        };
        match parsed {
            Some(p) => out.push(p),
            None => {
                return Err(format!(
                    "line {}: expected \"n value\", got {line:?}",
                    i + 1
                ))
            }
        }
    }
    Ok(out)
}

fn fetch() -> Result<String, Box<dyn Error>> {
    let agent = ureq::AgentBuilder::new().timeout(FETCH_TIMEOUT).build();
    Ok(agent.get(BFILE_URL).call()?.into_string()?)
}

fn load(snapshot: Option<&Path>, fetch_live: bool) -> Result<String, String> {
    if fetch_live {
        match fetch() {
            Ok(text) => return Ok(text),
            Err(e) => eprintln!("warning: fetch failed ({e}); using the snapshot"),
        }
    }
    match snapshot {
        None => Ok(SNAPSHOT.to_string()),
        Some(p) => fs::read_to_string(p).map_err(|e| {
            format!(
                "cannot read snapshot {}: {e}; pass --snapshot with a b-file of A216912 or omit it to use the bundled copy",
                p.display()
            )
        }),
    }
}

/// Indices whose computed term differs from the reference, with both values.
pub fn mismatches(
    reference: &[(u64, Integer)],
) -> zagier_core::Result<Vec<(u64, Integer, Integer)>> {
    let mut bad = Vec::new();
    for (n, want) in reference {
        let got = term(*n)?;
        if &got != want {
            bad.push((*n, got, want.clone()));
        }
    }
    Ok(bad)
}

pub fn run(
    action: Action,
    max_n: Option<u64>,
    snapshot: Option<&Path>,
    fetch_live: bool,
) -> Result<u8, Box<dyn Error>> {
    match action {
        Action::Export => {
            let rows = (1..=max_n.unwrap_or(14))
                .map(|n| Ok((n, term(n)?.to_string())))
                .collect::<zagier_core::Result<Vec<_>>>()?;
            write_rows(&mut io::stdout().lock(), &rows, Format::Bfile)?;
            Ok(0)
        }
        Action::Compare => {
            let text = match load(snapshot, fetch_live) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(EXIT_USAGE);
                }
            };
            let mut reference = match parse_bfile(&text) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(EXIT_USAGE);
                }
            };
            if let Some(m) = max_n {
                reference.retain(|(n, _)| *n <= m);
            }
            let bad = mismatches(&reference)?;
            let mut out = io::stdout().lock();
            for (n, got, want) in &bad {
                writeln!(out, "mismatch at n={n}: computed {got}, reference {want}")?;
            }
            writeln!(
                out,
                "compared {} terms, {} mismatches",
                reference.len(),
                bad.len()
            )?;
            Ok(if bad.is_empty() { 0 } else { EXIT_FAIL })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snapshot_parses() {
        let r = parse_bfile(SNAPSHOT).unwrap();
        assert_eq!(r.len(), 14);
        assert_eq!(r[13], (14, Integer::from(7540)));
    }

    #[test]
    fn bad_lines_rejected() {
        assert!(parse_bfile("1 6\n2\n").is_err());
        assert!(parse_bfile("1 6 7\n").is_err());
        assert_eq!(
            parse_bfile("# c\n\n3 315\n").unwrap(),
            vec![(3, Integer::from(315))]
        );
    }

    #[test]
    fn first_terms() {
        let got: Vec<Integer> = (1..=6).map(|n| term(n).unwrap()).collect();
        let want: Vec<Integer> = [6, 20, 315, 280, 66, 3003]
            .iter()
            .map(|&v| Integer::from(v))
            .collect();
        assert_eq!(got, want);
    }
}
