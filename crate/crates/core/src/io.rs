//! Text format for colorings.
//!
//! ```text
//! # comment
//! Kn <n> <m>
//! c(0,1) c(0,2) ... c(0,n-1)
//! c(1,2) ... c(1,n-1)
//! ...
//! c(n-2,n-1)
//! ```
//!
//! Bipartite hosts use a `Kst <s> <t> <m>` header followed by `s` rows of `t`
//! colors (row `u`, column `v`).

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::host::{ColoredBipartite, ColoredComplete, Host};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_uint(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| parse_err(line, format!("expected {what}, found `{tok}`")))
}

/// Reads one coloring from `reader`.
pub fn read_coloring(reader: impl BufRead) -> Result<Host> {
    // Non-comment, non-blank lines with their 1-based line numbers.
    let mut lines = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        lines.push((i + 1, trimmed.to_owned()));
    }
    let mut it = lines.into_iter();
    let (hline, header) = it.next().ok_or_else(|| parse_err(0, "missing header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();

    let mut row = |expected: usize, what: String| -> Result<(usize, Vec<u32>)> {
        let (ln, text) = it
            .next()
            .ok_or_else(|| parse_err(0, format!("missing {what}")))?;
        let vals = text
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| parse_err(ln, format!("bad color `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if vals.len() != expected {
            return Err(parse_err(
                ln,
                format!("{what} has {} entries, expected {expected}", vals.len()),
            ));
        }
        Ok((ln, vals))
    };

    let host = match toks.as_slice() {
        ["Kn", n, m] => {
            let n = parse_uint(n, hline, "n")?;
            let m = parse_uint(m, hline, "m")?;
            if n < 2 {
                return Err(parse_err(hline, "n must be at least 2"));
            }
            let m = u16::try_from(m).map_err(|_| parse_err(hline, "m too large"))?;
            let mut rows = Vec::with_capacity(n - 1);
            for i in 0..n - 1 {
                let (ln, vals) = row(n - 1 - i, format!("row {}", i + 1))?;
                for &c in &vals {
                    if c == 0 || c > m as u32 {
                        return Err(parse_err(ln, format!("color {c} outside 1..={m}")));
                    }
                }
                rows.push(vals);
            }
            Host::Complete(ColoredComplete::from_fn(n, m, |u, v| rows[u][v - u - 1] as u16)?)
        }
        ["Kst", s, t, m] => {
            let s = parse_uint(s, hline, "s")?;
            let t = parse_uint(t, hline, "t")?;
            let m = parse_uint(m, hline, "m")?;
            if s == 0 || t == 0 {
                return Err(parse_err(hline, "s and t must be positive"));
            }
            let m = u16::try_from(m).map_err(|_| parse_err(hline, "m too large"))?;
            let mut rows = Vec::with_capacity(s);
            for i in 0..s {
                let (ln, vals) = row(t, format!("row {}", i + 1))?;
                for &c in &vals {
                    if c == 0 || c > m as u32 {
                        return Err(parse_err(ln, format!("color {c} outside 1..={m}")));
                    }
                }
                rows.push(vals);
            }
            Host::Bipartite(ColoredBipartite::from_fn(s, t, m, |u, v| rows[u][v] as u16)?)
        }
        _ => {
            return Err(parse_err(
                hline,
                format!("expected `Kn <n> <m>` or `Kst <s> <t> <m>`, found `{header}`"),
            ))
        }
    };
    if let Some((ln, _)) = it.next() {
        return Err(parse_err(ln, "trailing data after coloring"));
    }
    Ok(host)
}

pub fn read_coloring_str(text: &str) -> Result<Host> {
    read_coloring(text.as_bytes())
}

pub fn write_coloring(host: &Host, mut w: impl Write) -> Result<()> {
    match host {
        Host::Complete(c) => {
            let n = c.n();
            writeln!(w, "Kn {} {}", n, c.m())?;
            for u in 0..n - 1 {
                let row: Vec<String> = (u + 1..n).map(|v| c.get(u, v).to_string()).collect();
                writeln!(w, "{}", row.join(" "))?;
            }
        }
        Host::Bipartite(b) => {
            writeln!(w, "Kst {} {} {}", b.s(), b.t(), b.m())?;
            for u in 0..b.s() {
                let row: Vec<String> = (0..b.t()).map(|v| b.get(u, v).to_string()).collect();
                writeln!(w, "{}", row.join(" "))?;
            }
        }
    }
    Ok(())
}

pub fn write_coloring_string(host: &Host) -> String {
    let mut buf = Vec::new();
    write_coloring(host, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("ascii output")
}
