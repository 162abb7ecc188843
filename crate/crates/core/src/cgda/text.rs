use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use super::FreeCGDA;
use crate::error::{Error, Result};
use crate::poly::{is_ident_byte, Namespace, Polynomial};

fn parse_error(offset: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos: offset,
        msg: msg.into(),
    }
}

fn symbol_at(line: &str, offset: usize, word: Option<&str>) -> Result<String> {
    match word {
        Some(w) if !w.is_empty() && w.bytes().all(is_ident_byte) && !w.as_bytes()[0].is_ascii_digit() => {
            Ok(w.to_string())
        }
        Some(w) => Err(parse_error(offset, format!("bad symbol `{w}`"))),
        None => Err(parse_error(offset + line.len(), "missing symbol")),
    }
}

fn weight_at(line: &str, offset: usize, word: Option<&str>) -> Result<u32> {
    match word.map(str::parse::<u32>) {
        Some(Ok(w)) => Ok(w),
        _ => Err(parse_error(offset + line.len(), "expected a weight")),
    }
}

impl FreeCGDA {
    /// Reads the line format
    ///
    /// ```text
    /// even Q2 2
    /// odd z2 2
    /// d z2 = Q2
    /// ```
    ///
    /// Blank lines and `#` comments are ignored; odd generators without a
    /// `d` line have zero differential. Error positions are byte offsets.
    pub fn parse(text: &str) -> Result<FreeCGDA> {
        let mut even = Vec::new();
        let mut odd: Vec<(String, u32)> = Vec::new();
        let mut diffs: Vec<(usize, String, usize, String)> = Vec::new();
        let mut offset = 0;
        for raw in text.split_inclusive('\n') {
            let line = raw.split('#').next().unwrap_or("").trim_end();
            let mut words = line.split_whitespace();
            match words.next() {
                None => {}
                Some("even") => {
                    let s = symbol_at(line, offset, words.next())?;
                    even.push((s, weight_at(line, offset, words.next())?));
                }
                Some("odd") => {
                    let s = symbol_at(line, offset, words.next())?;
                    odd.push((s, weight_at(line, offset, words.next())?));
                }
                Some("d") => {
                    let s = symbol_at(line, offset, words.next())?;
                    let eq = line
                        .find('=')
                        .ok_or_else(|| parse_error(offset + line.len(), "expected `=`"))?;
                    diffs.push((offset, s, offset + eq + 1, line[eq + 1..].to_string()));
                }
                Some(w) => {
                    return Err(parse_error(
                        offset + line.find(w).unwrap_or(0),
                        format!("unknown keyword `{w}`"),
                    ))
                }
            }
            if words.next().is_some() && !line.trim_start().starts_with('d') {
                return Err(parse_error(offset, "trailing input"));
            }
            offset += raw.len();
        }
        let ns = Namespace::new(even.iter().map(|(s, _)| s.clone()));
        let mut differential: Vec<Polynomial> = odd.iter().map(|_| Polynomial::zero(&ns)).collect();
        for (at, s, body_at, body) in diffs {
            let i = odd
                .iter()
                .position(|(o, _)| *o == s)
                .ok_or_else(|| parse_error(at, format!("`{s}` is not an odd generator")))?;
            differential[i] = Polynomial::parse(&ns, &body).map_err(|e| match e {
                Error::Parse { pos, msg } => parse_error(body_at + pos, msg),
                other => other,
            })?;
        }
        FreeCGDA::new(even, odd, differential)
    }
}

/// Renders `c` in the format read by [`FreeCGDA::parse`].
pub fn format_cgda(c: &FreeCGDA) -> String {
    let mut out = String::new();
    for (s, w) in c.even_gens() {
        let _ = writeln!(out, "even {s} {w}");
    }
    for (s, w) in c.odd_gens() {
        let _ = writeln!(out, "odd {s} {w}");
    }
    for ((s, _), dz) in c.odd_gens().zip(c.differentials()) {
        if !dz.is_zero() {
            let _ = writeln!(out, "d {s} = {dz}");
        }
    }
    out
}
