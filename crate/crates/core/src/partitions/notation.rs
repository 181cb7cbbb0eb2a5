//! Text notation: `3.2^2` for partitions, `-` for the empty partition,
//! `|` between components and `,` between charge entries.

use super::{Charge, ChargedMultipartition, Multipartition, Partition};
use crate::error::{Error, Result};

fn perr(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

/// Parses an unsigned integer starting at byte `start` of `s`.
fn uint(s: &str, start: usize) -> Result<(usize, usize)> {
    let digits = s[start..].bytes().take_while(u8::is_ascii_digit).count();
    if digits == 0 {
        return Err(perr(start, "expected an integer"));
    }
    let v = s[start..start + digits]
        .parse::<usize>()
        .map_err(|_| perr(start, "integer out of range"))?;
    Ok((v, start + digits))
}

fn partition_at(s: &str, offset: usize) -> Result<Partition> {
    let t = s.trim();
    let lead = offset + (s.len() - s.trim_start().len());
    if t == "-" {
        return Ok(Partition::empty());
    }
    if t.is_empty() {
        return Err(perr(lead, "empty partition text; use '-'"));
    }
    let mut parts = Vec::new();
    let mut i = 0;
    loop {
        let (v, j) = uint(t, i).map_err(|e| shift(e, lead))?;
        if v == 0 {
            return Err(perr(lead + i, "parts must be positive"));
        }
        let mut mult = 1;
        let mut k = j;
        if t[k..].starts_with('^') {
            let (m, k2) = uint(t, k + 1).map_err(|e| shift(e, lead))?;
            if m == 0 {
                return Err(perr(lead + k + 1, "multiplicity must be positive"));
            }
            mult = m;
            k = k2;
        }
        if let Some(&last) = parts.last() {
            if v > last {
                return Err(perr(lead + i, "parts must be weakly decreasing"));
            }
        }
        parts.extend(std::iter::repeat(v).take(mult));
        if k == t.len() {
            break;
        }
        if !t[k..].starts_with('.') {
            return Err(perr(lead + k, "expected '.', '^' or end of partition"));
        }
        i = k + 1;
    }
    Ok(Partition::from_vec_unchecked(parts))
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}

pub fn parse_partition(s: &str) -> Result<Partition> {
    partition_at(s, 0)
}

pub fn parse_multipartition(s: &str) -> Result<Multipartition> {
    let mut comps = Vec::new();
    let mut offset = 0;
    for piece in s.split('|') {
        comps.push(partition_at(piece, offset)?);
        offset += piece.len() + 1;
    }
    Ok(Multipartition::new(comps))
}

pub fn parse_charge(s: &str) -> Result<Charge> {
    let mut entries = Vec::new();
    let mut offset = 0;
    for piece in s.split(',') {
        let t = piece.trim();
        let lead = offset + (piece.len() - piece.trim_start().len());
        let v = t
            .parse::<i64>()
            .map_err(|_| perr(lead, format!("expected an integer, found {t:?}")))?;
        entries.push(v);
        offset += piece.len() + 1;
    }
    Ok(Charge::new(entries))
}

pub fn parse_charged(mp: &str, charge: &str) -> Result<ChargedMultipartition> {
    ChargedMultipartition::new(parse_multipartition(mp)?, parse_charge(charge)?)
}

pub(crate) fn format_partition(p: &Partition) -> String {
    if p.is_empty() {
        return "-".to_string();
    }
    p.multiplicities()
        .iter()
        .map(|&(v, m)| {
            if m == 1 {
                v.to_string()
            } else {
                format!("{v}^{m}")
            }
        })
        .collect::<Vec<_>>()
        .join(".")
}

pub(crate) fn format_multipartition(mp: &Multipartition) -> String {
    mp.components()
        .iter()
        .map(format_partition)
        .collect::<Vec<_>>()
        .join("|")
}

pub(crate) fn format_charge(c: &Charge) -> String {
    c.entries()
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
