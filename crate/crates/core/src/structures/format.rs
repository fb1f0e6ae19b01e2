//! Line-oriented text format for finite structures.
//!
//! ```text
//! # comment
//! name: Z/3
//! size: 3
//! zero: 0
//! one: 1
//! add:
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! mul:
//! 0 0 0
//! 0 1 2
//! 0 2 1
//! neg:
//! 0 2 1
//! inv:
//! 0 1 2
//! ```
//!
//! Row `r`, column `c` of `add`/`mul` holds `r + c` / `r * c`. The `inv`
//! section is optional.

use std::fmt::Write as _;

use super::{Elem, FiniteStructure, Tables};
use crate::error::{Error, Result};

fn format_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Format {
        line,
        msg: msg.into(),
    }
}

pub fn parse_structure(src: &str) -> Result<FiniteStructure> {
    let lines: Vec<(usize, &str)> = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();

    let mut name = None;
    let mut size: Option<usize> = None;
    let mut zero = None;
    let mut one = None;
    let mut tables: [Option<Vec<Elem>>; 4] = Default::default();
    const TABLES: [&str; 4] = ["add", "mul", "neg", "inv"];

    let scalar = |line: usize, v: &str| -> Result<usize> {
        v.parse::<usize>().map_err(|_| {
            format_err(
                line,
                format!("expected a non-negative integer, found `{v}`"),
            )
        })
    };

    let mut i = 0;
    while i < lines.len() {
        let (ln, text) = lines[i];
        i += 1;
        let Some((key, rest)) = text.split_once(':') else {
            return Err(format_err(ln, format!("expected `key:`, found `{text}`")));
        };
        let (key, rest) = (key.trim(), rest.trim());
        match key {
            "name" => name = Some(rest.to_string()),
            "size" => size = Some(scalar(ln, rest)?),
            "zero" => zero = Some(scalar(ln, rest)? as Elem),
            "one" => one = Some(scalar(ln, rest)? as Elem),
            _ => {
                let Some(slot) = TABLES.iter().position(|&t| t == key) else {
                    return Err(format_err(ln, format!("unknown key `{key}`")));
                };
                let n = size.ok_or_else(|| format_err(ln, "`size:` must precede the tables"))?;
                let expected = if slot < 2 { n * n } else { n };
                let mut values = Vec::with_capacity(expected);
                let push_row = |ln: usize, row: &str, values: &mut Vec<Elem>| -> Result<()> {
                    for tok in row.split_whitespace() {
                        if values.len() == expected {
                            return Err(format_err(ln, format!("too many entries for `{key}`")));
                        }
                        values.push(scalar(ln, tok)? as Elem);
                    }
                    Ok(())
                };
                push_row(ln, rest, &mut values)?;
                while values.len() < expected {
                    let Some(&(ln, row)) = lines.get(i) else {
                        return Err(format_err(ln, format!("`{key}` needs {expected} entries")));
                    };
                    if row.contains(':') {
                        return Err(format_err(
                            ln,
                            format!("`{key}` has {} of {expected} entries", values.len()),
                        ));
                    }
                    push_row(ln, row, &mut values)?;
                    i += 1;
                }
                if tables[slot].replace(values).is_some() {
                    return Err(format_err(ln, format!("duplicate `{key}` section")));
                }
            }
        }
    }

    let last = lines.last().map_or(0, |l| l.0);
    let missing = |what: &str| format_err(last, format!("missing `{what}:`"));
    let [add, mul, neg, inv] = tables;
    let t = Tables {
        size: size.ok_or_else(|| missing("size"))?,
        zero: zero.ok_or_else(|| missing("zero"))?,
        one: one.ok_or_else(|| missing("one"))?,
        add: add.ok_or_else(|| missing("add"))?,
        mul: mul.ok_or_else(|| missing("mul"))?,
        neg: neg.ok_or_else(|| missing("neg"))?,
        inv,
    };
    FiniteStructure::new(name.unwrap_or_else(|| "structure".into()), t)
}

fn write_row(out: &mut String, row: &[Elem]) {
    for (i, e) in row.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{e}");
    }
    out.push('\n');
}

pub fn write_structure(s: &FiniteStructure) -> String {
    let n = s.size();
    let mut out = String::new();
    let _ = writeln!(out, "name: {}", s.name());
    let _ = writeln!(out, "size: {n}");
    let _ = writeln!(out, "zero: {}", s.zero());
    let _ = writeln!(out, "one: {}", s.one());
    for (key, table) in [("add", s.add_table()), ("mul", s.mul_table())] {
        let _ = writeln!(out, "{key}:");
        for row in table.chunks(n) {
            write_row(&mut out, row);
        }
    }
    out.push_str("neg:\n");
    write_row(&mut out, s.neg_table());
    if let Some(inv) = s.inv_table() {
        out.push_str("inv:\n");
        write_row(&mut out, inv);
    }
    out
}
