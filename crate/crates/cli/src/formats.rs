//! Plain-text file formats.
//!
//! Clutter: `clutter <n>`, an optional `pairs u1 v1 u2 v2 …` line naming the
//! element pair of each cuboid coordinate (value-one element first), then one
//! member per line as element labels (`-` is the empty member).
//!
//! Graph: `p <vertices> <edges>` then one `e u v` line per edge.
//!
//! Matroid: `matroid <n>` then one 0/1 row of the representation per line.
//!
//! Blank lines and text after `#` are ignored everywhere.

use tangle_core::gf2::BitVector;
use tangle_core::{BinaryMatroid, Clutter, Error, Graph, Result};

/// A parsed clutter file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClutterFile {
    pub clutter: Clutter,
    /// Cuboid coordinate pairs, when declared.
    pub pairs: Option<Vec<(usize, usize)>>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Nonempty lines with comments removed, numbered from one.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn number(line: usize, token: &str, what: &str) -> Result<usize> {
    token.parse().map_err(|_| parse_err(line, format!("expected {what}, found {token:?}")))
}

fn header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, keyword: &str) -> Result<(usize, Vec<&'a str>)> {
    let (line, text) = lines.next().ok_or_else(|| parse_err(1, format!("empty file, expected `{keyword}` header")))?;
    let mut tokens = text.split_whitespace();
    if tokens.next() != Some(keyword) {
        return Err(parse_err(line, format!("expected `{keyword}` header")));
    }
    Ok((line, tokens.collect()))
}

pub fn parse_clutter(text: &str) -> Result<ClutterFile> {
    let mut lines = content_lines(text).peekable();
    let (line, args) = header(&mut lines, "clutter")?;
    let [n] = args[..] else {
        return Err(parse_err(line, "expected `clutter <n>`"));
    };
    let n = number(line, n, "ground set size")?;
    let mut pairs: Option<Vec<(usize, usize)>> = None;
    if let Some(&(line, text)) = lines.peek() {
        if let Some(rest) = text.strip_prefix("pairs") {
            lines.next();
            let labels = rest.split_whitespace().map(|t| number(line, t, "element label")).collect::<Result<Vec<_>>>()?;
            if labels.len() != n || n % 2 == 1 {
                return Err(parse_err(line, format!("pairs must list all {n} elements once")));
            }
            let mut seen = vec![false; n + 1];
            for &l in &labels {
                if l == 0 || l > n || std::mem::replace(&mut seen[l], true) {
                    return Err(parse_err(line, format!("pairs must list all {n} elements once")));
                }
            }
            pairs = Some(labels.chunks(2).map(|p| (p[0], p[1])).collect());
        }
    }
    let mut members = Vec::new();
    for (line, text) in lines {
        let member = if text == "-" {
            Vec::new()
        } else {
            text.split_whitespace().map(|t| number(line, t, "element label")).collect::<Result<Vec<_>>>()?
        };
        if let Some(&e) = member.iter().find(|&&e| e == 0 || e > n) {
            return Err(parse_err(line, format!("element {e} is outside 1..={n}")));
        }
        members.push((line, member));
    }
    let clutter = Clutter::new(n, members.iter().map(|(_, m)| m)).map_err(|e| {
        let line = members.last().map_or(1, |(l, _)| *l);
        match e {
            Error::NotAntichain { .. } => parse_err(line, e.to_string()),
            other => other,
        }
    })?;
    if let Some(pairs) = &pairs {
        for (i, m) in clutter.members().iter().enumerate() {
            if let Some(&(u, v)) = pairs.iter().find(|&&(u, v)| m.get(u - 1) == m.get(v - 1)) {
                return Err(Error::Parse {
                    line: members[0].0,
                    message: format!("member {:?} does not meet pair ({u}, {v}) exactly once", clutter.member_labels(i)),
                });
            }
        }
    }
    Ok(ClutterFile { clutter, pairs })
}

pub fn format_clutter(c: &Clutter) -> String {
    let mut out = format!("clutter {}\n", c.ground_size());
    for m in c.to_lists() {
        if m.is_empty() {
            out.push_str("-\n");
        } else {
            out.push_str(&join(&m));
            out.push('\n');
        }
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line, args) = header(&mut lines, "p")?;
    let [v, e] = args[..] else {
        return Err(parse_err(line, "expected `p <vertices> <edges>`"));
    };
    let (v, e) = (number(line, v, "vertex count")?, number(line, e, "edge count")?);
    let mut edges = Vec::with_capacity(e);
    let mut last = line;
    for (line, text) in lines {
        last = line;
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let ["e", a, b] = tokens[..] else {
            return Err(parse_err(line, "expected `e <u> <v>`"));
        };
        let (a, b) = (number(line, a, "vertex")?, number(line, b, "vertex")?);
        if a == 0 || a > v || b == 0 || b > v {
            return Err(parse_err(line, format!("vertex outside 1..={v}")));
        }
        edges.push((a, b));
    }
    if edges.len() != e {
        return Err(parse_err(last, format!("header announces {e} edges, found {}", edges.len())));
    }
    Graph::new(v, edges)
}

pub fn parse_matroid(text: &str) -> Result<BinaryMatroid> {
    let mut lines = content_lines(text);
    let (line, args) = header(&mut lines, "matroid")?;
    let [n] = args[..] else {
        return Err(parse_err(line, "expected `matroid <n>`"));
    };
    let n = number(line, n, "ground set size")?;
    let mut rows = Vec::new();
    for (line, text) in lines {
        let row: String = text.split_whitespace().collect();
        let v = BitVector::parse(&row).filter(|v| v.width() == n);
        rows.push(v.ok_or_else(|| parse_err(line, format!("expected a 0/1 row of length {n}")))?);
    }
    BinaryMatroid::from_representation(n, &rows)
}

pub fn format_matroid(m: &BinaryMatroid) -> String {
    let mut out = format!("matroid {}\n", m.len());
    for row in m.representation() {
        out.push_str(&row.to_string());
        out.push('\n');
    }
    out
}

pub fn join(items: &[usize]) -> String {
    items.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}
