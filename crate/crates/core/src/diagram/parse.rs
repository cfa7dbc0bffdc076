//! Text formats: PD records `X a b c d` and braid words `B n: w1 w2 ...`,
//! with `#` comments and an optional `name:` line.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{Diagram, Side};
use crate::{Error, Result};

/// A braid on `strands` strands; generator `i` (or `-i`) crosses positions
/// `i - 1` and `i`, counted from the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Braid {
    pub strands: usize,
    pub word: Vec<i64>,
}

impl Braid {
    pub fn new(strands: usize, word: Vec<i64>) -> Result<Self> {
        for &g in &word {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(Error::BraidGenerator { generator: g, strands });
            }
        }
        Ok(Braid { strands, word })
    }

    /// Closure with all strands oriented upward and the closing arcs
    /// passing to the left, so the region right of the rightmost strand is
    /// unbounded.
    ///
    /// Generator `+i` puts the left strand over the right one, which is a
    /// positive crossing.
    pub fn closure(&self) -> Result<Diagram> {
        let n = self.strands;
        if self.word.is_empty() {
            return if n == 1 { Ok(Diagram::unknot()) } else { Err(Error::Disconnected) };
        }
        let mut cur: Vec<usize> = (0..n).collect();
        let mut next = n;
        let mut tuples = Vec::with_capacity(self.word.len());
        for &g in &self.word {
            let i = g.unsigned_abs() as usize - 1;
            let (l_in, r_in) = (cur[i], cur[i + 1]);
            let (l_out, r_out) = (next, next + 1);
            next += 2;
            tuples.push(if g > 0 { [r_in, l_out, r_out, l_in] } else { [l_in, r_in, l_out, r_out] });
            cur[i + 1] = l_out;
            cur[i] = r_out;
        }
        // Glue the top of each position to its bottom.
        let mut glue: Vec<usize> = (0..next).collect();
        for (p, &top) in cur.iter().enumerate() {
            if top == p {
                return Err(Error::Disconnected);
            }
            glue[top] = p;
        }
        let mut compact = vec![usize::MAX; next];
        let mut k = 0;
        for e in 0..next {
            if glue[e] == e {
                compact[e] = k;
                k += 1;
            }
        }
        let tuples: Vec<[usize; 4]> = tuples.iter().map(|t| t.map(|e| compact[glue[e]])).collect();
        Diagram::from_tuples(&tuples, Some((compact[n - 1], Side::Right)))
    }

    pub fn crossing_count(&self) -> usize {
        self.word.len()
    }

    /// Number of components of the closure (cycles of the permutation).
    pub fn component_count(&self) -> usize {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &g in &self.word {
            let i = g.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for s in 0..self.strands {
            if !seen[s] {
                count += 1;
                let mut t = s;
                while !seen[t] {
                    seen[t] = true;
                    t = perm[t];
                }
            }
        }
        count
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("B {}:", self.strands);
        for g in &self.word {
            out.push_str(&format!(" {g}"));
        }
        out
    }
}

/// A parsed input: the diagram, plus its braid when given as one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedInput {
    pub diagram: Diagram,
    pub braid: Option<Braid>,
}

struct Lines {
    name: Option<String>,
    body: Vec<(usize, String)>,
}

fn strip(text: &str) -> Lines {
    let mut name = None;
    let mut body = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("name:") {
            name = Some(rest.trim().to_string());
            continue;
        }
        body.push((i + 1, line.to_string()));
    }
    Lines { name, body }
}

/// Parses PD text. Labels may be any positive integers; each must occur
/// exactly twice. Labels are mapped to `0..2n` in increasing order.
pub fn parse_pd(text: &str) -> Result<Diagram> {
    let lines = strip(text);
    let mut records: Vec<[i64; 4]> = Vec::new();
    for (line, body) in &lines.body {
        for rec in body.split(';') {
            let toks: Vec<&str> = rec.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            if toks[0] != "X" {
                return Err(malformed(*line, format!("expected `X a b c d`, found `{}`", rec.trim())));
            }
            if toks.len() != 5 {
                return Err(malformed(*line, format!("crossing record needs 4 labels, got {}", toks.len() - 1)));
            }
            let mut labels = [0i64; 4];
            for (slot, tok) in toks[1..].iter().enumerate() {
                labels[slot] = tok
                    .parse::<i64>()
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| malformed(*line, format!("bad edge label `{tok}`")))?;
            }
            records.push(labels);
        }
    }
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for r in &records {
        for &l in r {
            *counts.entry(l).or_insert(0) += 1;
        }
    }
    if let Some((&label, &count)) = counts.iter().find(|(_, &c)| c != 2) {
        return Err(Error::EdgeMultiplicity { label, count });
    }
    let index: BTreeMap<i64, usize> = counts.keys().enumerate().map(|(i, &l)| (l, i)).collect();
    let tuples: Vec<[usize; 4]> = records.iter().map(|r| r.map(|l| index[&l])).collect();
    let d = Diagram::from_tuples(&tuples, None)?;
    Ok(match lines.name {
        Some(n) => d.with_name(n),
        None => d,
    })
}

fn parse_braid_word(lines: &Lines) -> Result<Braid> {
    let (line, first) = lines.body.first().ok_or_else(|| malformed(1, "empty braid text".into()))?;
    let rest = first
        .strip_prefix('B')
        .ok_or_else(|| malformed(*line, "braid text must start with `B <strands>:`".into()))?;
    let (n, word) = rest
        .split_once(':')
        .ok_or_else(|| malformed(*line, "missing `:` after strand count".into()))?;
    let strands: usize = n
        .trim()
        .parse()
        .ok()
        .filter(|&s| s > 0)
        .ok_or_else(|| malformed(*line, format!("bad strand count `{}`", n.trim())))?;
    let mut gens = Vec::new();
    let tail = lines.body[1..].iter().map(|(l, s)| (*l, s.as_str()));
    for (l, chunk) in core::iter::once((*line, word)).chain(tail) {
        for tok in chunk.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let g: i64 = tok.parse().map_err(|_| malformed(l, format!("bad generator `{tok}`")))?;
            gens.push(g);
        }
    }
    Braid::new(strands, gens)
}

/// Parses `B <strands>: i1 i2 ...` and returns the closure diagram.
pub fn parse_braid(text: &str) -> Result<Diagram> {
    let lines = strip(text);
    let d = parse_braid_word(&lines)?.closure()?;
    Ok(match lines.name {
        Some(n) => d.with_name(n),
        None => d,
    })
}

/// Parses either format, deciding by the first non-comment record.
pub fn parse_input(text: &str) -> Result<ParsedInput> {
    let lines = strip(text);
    let is_braid = lines.body.first().is_some_and(|(_, s)| s.starts_with('B'));
    if is_braid {
        let braid = parse_braid_word(&lines)?;
        let mut diagram = braid.closure()?;
        if let Some(n) = lines.name {
            diagram = diagram.with_name(n);
        }
        Ok(ParsedInput { diagram, braid: Some(braid) })
    } else {
        Ok(ParsedInput { diagram: parse_pd(text)?, braid: None })
    }
}

fn malformed(line: usize, message: String) -> Error {
    Error::Malformed { line, message }
}
