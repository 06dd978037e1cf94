//! Plain-text LP format.
//!
//! ```text
//! lp min 3 2
//! obj 1 1 1
//! row 1 1 0 >= 1
//! row 0 1/2 1 <= 3/2
//! ```
//!
//! Variables are implicitly nonnegative. `#` starts a comment.

use super::{fmt_rational, parse_rational, Constraint, LpProblem, Rational, Relation, Sense};
use crate::error::{Error, Result};

pub(super) fn write(p: &LpProblem) -> String {
    let mut out = format!(
        "lp {} {} {}\n",
        match p.sense {
            Sense::Minimize => "min",
            Sense::Maximize => "max",
        },
        p.num_vars(),
        p.rows.len()
    );
    out.push_str("obj");
    for c in &p.objective {
        out.push(' ');
        out.push_str(&fmt_rational(c));
    }
    out.push('\n');
    for r in &p.rows {
        out.push_str("row");
        for a in &r.coeffs {
            out.push(' ');
            out.push_str(&fmt_rational(a));
        }
        out.push_str(&format!(" {} {}\n", r.relation.symbol(), fmt_rational(&r.rhs)));
    }
    out
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn numbers(line: usize, toks: &[&str]) -> Result<Vec<Rational>> {
    toks.iter()
        .map(|t| parse_rational(t).ok_or_else(|| err(line, format!("bad rational {t:?}"))))
        .collect()
}

pub(super) fn parse(s: &str) -> Result<LpProblem> {
    let mut header: Option<(Sense, usize, usize)> = None;
    let mut objective = None;
    let mut rows = Vec::new();
    let mut last = 0;
    for (idx, raw) in s.lines().enumerate() {
        let line = idx + 1;
        last = line;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let toks: Vec<&str> = text.split_whitespace().collect();
        match (toks[0], &header) {
            ("lp", None) => {
                if toks.len() != 4 {
                    return Err(err(line, "expected `lp <min|max> <vars> <rows>`"));
                }
                let sense = match toks[1] {
                    "min" => Sense::Minimize,
                    "max" => Sense::Maximize,
                    other => return Err(err(line, format!("unknown sense {other:?}"))),
                };
                let nv = toks[2].parse().map_err(|_| err(line, "bad variable count"))?;
                let nr = toks[3].parse().map_err(|_| err(line, "bad row count"))?;
                header = Some((sense, nv, nr));
            }
            (_, None) => return Err(err(line, "missing `lp` header")),
            ("obj", Some((_, nv, _))) => {
                let c = numbers(line, &toks[1..])?;
                if c.len() != *nv {
                    return Err(err(line, format!("expected {nv} objective coefficients")));
                }
                objective = Some(c);
            }
            ("row", Some((_, nv, _))) => {
                if toks.len() != nv + 3 {
                    return Err(err(line, format!("expected {nv} coefficients, a relation and a rhs")));
                }
                let coeffs = numbers(line, &toks[1..=*nv])?;
                let relation = match toks[nv + 1] {
                    "<=" => Relation::Le,
                    ">=" => Relation::Ge,
                    "=" => Relation::Eq,
                    other => return Err(err(line, format!("unknown relation {other:?}"))),
                };
                let rhs = numbers(line, &toks[nv + 2..])?.remove(0);
                rows.push(Constraint { coeffs, relation, rhs });
            }
            (other, _) => return Err(err(line, format!("unexpected keyword {other:?}"))),
        }
    }
    let Some((sense, _, nr)) = header else {
        return Err(err(last.max(1), "empty LP file"));
    };
    let objective = objective.ok_or_else(|| err(last, "missing `obj` line"))?;
    if rows.len() != nr {
        return Err(err(last, format!("expected {nr} rows, found {}", rows.len())));
    }
    Ok(LpProblem { sense, objective, rows })
}
