//! Line-oriented text formats.
//!
//! ```text
//! .mg   p mg <n> <m>      then m lines  e <u> <v>
//! .cyc  p cyc <k>         then k lines  c <len> <eid_1> ... <eid_len>
//! .fac  p fac <t> <count> then count lines  f <eid>   (strictly increasing)
//! .ori  p ori <m>         then m lines  o <eid> <head>
//! ```
//!
//! Lines starting with `#` are comments and blank lines are ignored. Every
//! error carries the 1-based line number it was detected on.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{CycleSet, EdgeId, Factor, Multigraph, Orientation};

struct Records<'a> {
    lines: std::iter::Enumerate<std::str::Lines<'a>>,
    last_line: usize,
}

impl<'a> Records<'a> {
    fn new(text: &'a str) -> Self {
        Records {
            lines: text.lines().enumerate(),
            last_line: 0,
        }
    }

    /// Next non-comment line as (line number, tokens).
    fn next_record(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, line) in self.lines.by_ref() {
            self.last_line = i + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            return Some((i + 1, trimmed.split_whitespace().collect()));
        }
        None
    }

    fn header(&mut self, kind: &str, arity: usize) -> Result<(usize, Vec<usize>)> {
        let (line, tokens) = self.next_record().ok_or_else(|| {
            Error::parse(self.last_line.max(1), format!("missing `p {kind}` header"))
        })?;
        if tokens.len() != arity + 2 || tokens[0] != "p" || tokens[1] != kind {
            return Err(Error::parse(
                line,
                format!("malformed header, expected `p {kind}` with {arity} fields"),
            ));
        }
        let values = tokens[2..]
            .iter()
            .map(|t| number(line, t))
            .collect::<Result<Vec<_>>>()?;
        Ok((line, values))
    }

    /// Exactly `count` records tagged `tag`, then end of input.
    fn body(&mut self, tag: &str, count: usize) -> Result<Vec<(usize, Vec<usize>)>> {
        let mut out = Vec::with_capacity(count);
        while let Some((line, tokens)) = self.next_record() {
            if tokens[0] != tag {
                return Err(Error::parse(
                    line,
                    format!("expected a `{tag}` line, found `{}`", tokens[0]),
                ));
            }
            if out.len() == count {
                return Err(Error::parse(
                    line,
                    format!("more than the declared {count} `{tag}` lines"),
                ));
            }
            let values = tokens[1..]
                .iter()
                .map(|t| number(line, t))
                .collect::<Result<Vec<_>>>()?;
            out.push((line, values));
        }
        if out.len() != count {
            return Err(Error::parse(
                self.last_line.max(1),
                format!("header declares {count} `{tag}` lines, found {}", out.len()),
            ));
        }
        Ok(out)
    }
}

fn number(line: usize, token: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("`{token}` is not a non-negative integer")))
}

pub fn parse_multigraph(text: &str) -> Result<Multigraph> {
    let mut records = Records::new(text);
    let (_, header) = records.header("mg", 2)?;
    let (n, m) = (header[0], header[1]);
    let mut g = Multigraph::with_vertices(n);
    for (line, fields) in records.body("e", m)? {
        let [u, v] = fields[..] else {
            return Err(Error::parse(line, "edge line must be `e <u> <v>`"));
        };
        g.add_edge(u, v).map_err(|err| match err {
            Error::Loop { vertex, .. } => Error::parse(line, format!("loop at vertex {vertex}")),
            Error::VertexOutOfRange { vertex, n, .. } => {
                Error::parse(line, format!("vertex {vertex} out of range (n = {n})"))
            }
            other => other,
        })?;
    }
    Ok(g)
}

/// Canonical `.mg` text; each comment becomes a `# ` line before the header.
pub fn write_multigraph(g: &Multigraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "p mg {} {}", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

pub fn parse_cycles(text: &str) -> Result<CycleSet> {
    let mut records = Records::new(text);
    let (_, header) = records.header("cyc", 1)?;
    let mut cycles = Vec::with_capacity(header[0]);
    for (line, fields) in records.body("c", header[0])? {
        match fields.split_first() {
            Some((&len, rest)) if rest.len() == len => cycles.push(rest.to_vec()),
            _ => {
                return Err(Error::parse(
                    line,
                    "cycle line must be `c <len>` followed by len edge ids",
                ))
            }
        }
    }
    Ok(CycleSet::new(cycles))
}

pub fn write_cycles(cycles: &CycleSet, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "p cyc {}", cycles.len());
    for c in cycles {
        let _ = write!(out, "c {}", c.len());
        for e in c {
            let _ = write!(out, " {e}");
        }
        out.push('\n');
    }
    out
}

pub fn parse_factor(text: &str) -> Result<Factor> {
    let mut records = Records::new(text);
    let (_, header) = records.header("fac", 2)?;
    let (t, count) = (header[0], header[1]);
    let mut edges: Vec<EdgeId> = Vec::with_capacity(count);
    for (line, fields) in records.body("f", count)? {
        let [e] = fields[..] else {
            return Err(Error::parse(line, "factor line must be `f <eid>`"));
        };
        if edges.last().is_some_and(|&prev| prev >= e) {
            return Err(Error::parse(line, "edge ids must be strictly increasing"));
        }
        edges.push(e);
    }
    Ok(Factor::new(t, edges))
}

pub fn write_factor(f: &Factor) -> String {
    let mut out = format!("p fac {} {}\n", f.t, f.len());
    for e in f.edges() {
        let _ = writeln!(out, "f {e}");
    }
    out
}

pub fn parse_orientation(text: &str, g: &Multigraph) -> Result<Orientation> {
    let mut records = Records::new(text);
    let (line, header) = records.header("ori", 1)?;
    if header[0] != g.edge_count() {
        return Err(Error::parse(
            line,
            format!(
                "orientation declares {} edges, graph has {}",
                header[0],
                g.edge_count()
            ),
        ));
    }
    let mut head = vec![usize::MAX; header[0]];
    for (line, fields) in records.body("o", header[0])? {
        let [e, h] = fields[..] else {
            return Err(Error::parse(
                line,
                "orientation line must be `o <eid> <head>`",
            ));
        };
        if e >= head.len() {
            return Err(Error::parse(line, format!("edge id {e} out of range")));
        }
        if head[e] != usize::MAX {
            return Err(Error::parse(line, format!("edge {e} oriented twice")));
        }
        if !g.is_incident(e, h) {
            return Err(Error::parse(
                line,
                format!("vertex {h} is not an endpoint of edge {e}"),
            ));
        }
        head[e] = h;
    }
    Orientation::new(g, head)
}

pub fn write_orientation(d: &Orientation) -> String {
    let mut out = format!("p ori {}\n", d.heads().len());
    for (e, h) in d.heads().iter().enumerate() {
        let _ = writeln!(out, "o {e} {h}");
    }
    out
}
