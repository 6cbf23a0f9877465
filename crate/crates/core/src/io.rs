//! The `arr v1` text format.
//!
//! ```text
//! arr v1 n=3
//! # id a b c   (the line a·x + b·y = c)
//! 1 1 -1 1
//! 2 1 0 2
//! 3 1 1 4
//! ```
//!
//! Coefficients are integers or `p/q` rationals, never decimals. Ids must be
//! exactly `1..=n` and must already follow angle order.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exact::{cmp_angle, Line, Rat};
use crate::LineId;

fn bad(line: usize, msg: impl Into<String>) -> Error {
    Error::BadFile { line, msg: msg.into() }
}

fn parse_rat(tok: &str, line: usize) -> Result<Rat> {
    let int = |s: &str| -> Result<BigInt> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad(line, format!("not an integer or p/q rational: {tok:?}")));
        }
        s.parse().map_err(|_| bad(line, format!("bad number {tok:?}")))
    };
    match tok.split_once('/') {
        None => Ok(Rat::from_integer(int(tok)?)),
        Some((p, q)) => {
            let q = int(q)?;
            if q == BigInt::from(0) {
                return Err(bad(line, format!("zero denominator in {tok:?}")));
            }
            Ok(Rat::new(int(p)?, q))
        }
    }
}

/// Parses the format and builds the (normalized) arrangement.
pub fn parse_arr(text: &str) -> Result<Arrangement> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| bad(1, "missing header \"arr v1 n=<N>\""))?;
    let n: usize = header
        .strip_prefix("arr v1 n=")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| bad(hline, format!("expected header \"arr v1 n=<N>\", got {header:?}")))?;

    let mut records: Vec<Option<Line>> = vec![None; n];
    for (k, rec) in lines {
        let toks: Vec<&str> = rec.split_whitespace().collect();
        let [id, a, b, c] = toks[..] else {
            return Err(bad(k, format!("expected \"<id> <a> <b> <c>\", got {rec:?}")));
        };
        let id: LineId = id.parse().map_err(|_| bad(k, format!("bad id {id:?}")))?;
        if id == 0 || id > n {
            return Err(bad(k, format!("id {id} outside 1..={n}")));
        }
        if records[id - 1].is_some() {
            return Err(bad(k, format!("duplicate id {id}")));
        }
        let line = Line::new(parse_rat(a, k)?, parse_rat(b, k)?, parse_rat(c, k)?)?;
        records[id - 1] = Some(line);
    }
    let lines: Vec<Line> = records
        .into_iter()
        .enumerate()
        .map(|(k, l)| l.ok_or_else(|| bad(hline, format!("missing record for id {}", k + 1))))
        .collect::<Result<_>>()?;

    check_id_order(&lines)?;
    Arrangement::build(lines)
}

/// Rejects files whose ids disagree with angle order, suggesting the fix.
fn check_id_order(lines: &[Line]) -> Result<()> {
    let mut order: Vec<usize> = (0..lines.len()).collect();
    order.sort_by(|&x, &y| cmp_angle(&lines[x], &lines[y]));
    if order.iter().enumerate().all(|(k, &x)| k == x) {
        return Ok(());
    }
    // equal angles are reported by build as parallel lines
    if order.windows(2).any(|w| cmp_angle(&lines[w[0]], &lines[w[1]]) == Ordering::Equal) {
        return Ok(());
    }
    let mut new_id = vec![0; lines.len()];
    for (k, &x) in order.iter().enumerate() {
        new_id[x] = k + 1;
    }
    let suggestion = new_id
        .iter()
        .enumerate()
        .map(|(x, to)| format!("{}->{}", x + 1, to))
        .collect::<Vec<_>>()
        .join(" ");
    Err(Error::IdOrderMismatch { suggestion })
}

pub fn format_arr(arr: &Arrangement) -> String {
    let mut s = format!("arr v1 n={}\n", arr.n());
    for id in arr.ids() {
        let l = arr.line(id);
        writeln!(s, "{id} {} {} {}", l.a(), l.b(), l.c()).expect("writing to a String");
    }
    s
}

pub fn load_arr(path: impl AsRef<Path>) -> Result<Arrangement> {
    parse_arr(&std::fs::read_to_string(path)?)
}

pub fn save_arr(path: impl AsRef<Path>, arr: &Arrangement) -> Result<()> {
    Ok(std::fs::write(path, format_arr(arr))?)
}
