//! Text formats for graphs: graph6 and plain edge lists.
//!
//! graph6 stores the upper triangle of the adjacency matrix column by column
//! (x01, x02, x12, x03, ...), six bits per byte, most significant bit first,
//! each byte offset by 63. Orders up to 62 use a single length byte; 63 and
//! 64 use the long form `~` followed by three 6-bit chunks.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Optional first line of a graph6 file.
pub const GRAPH6_HEADER: &str = ">>graph6<<";

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. The `>>graph6<<` header may prefix it.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut data = text;
    if let Some(rest) = data.strip_prefix(GRAPH6_HEADER.as_bytes()) {
        data = rest;
    }
    while let [rest @ .., b'\n' | b'\r'] = data {
        data = rest;
    }
    if let Some(&bad) = data.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("byte {bad} outside the graph6 range")));
    }
    let (n, body) = match data {
        [] => return Err(Error::Parse("empty graph6 string".into())),
        [126, 126, ..] => {
            return Err(Error::SizeLimit(format!(
                "8-byte graph6 length form implies more than {MAX_VERTICES} vertices"
            )))
        }
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(Error::Parse("truncated graph6 length".into())),
        [first, rest @ ..] => (*first as usize - 63, rest),
    };
    if n == 0 {
        return Err(Error::Parse("graph6 order 0 is not a valid graph".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::SizeLimit(format!(
            "{n} vertices exceeds the limit of {MAX_VERTICES}"
        )));
    }
    if body.len() != payload_len(n) {
        return Err(Error::Parse(format!(
            "expected {} payload bytes for n = {n}, found {}",
            payload_len(n),
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph under its current labeling.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + payload_len(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.extend([
            126,
            (n >> 12) as u8 + 63,
            ((n >> 6) & 63) as u8 + 63,
            (n & 63) as u8 + 63,
        ]);
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses the edge-list format: a header line `n m` followed by `m` lines
/// `u v`. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let (n, m) = parse_pair(header)?;
    let mut pairs = Vec::with_capacity(m);
    for line in lines {
        pairs.push(parse_pair(line)?);
    }
    if pairs.len() != m {
        return Err(Error::Parse(format!(
            "header promises {m} edges, found {}",
            pairs.len()
        )));
    }
    Graph::from_edges(n, &pairs)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("not a non-negative integer: {t:?}")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::Parse(format!("expected two integers, got {line:?}"))),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        s.push_str(&format!("{} {}\n", e.u, e.v));
    }
    s
}

/// Reads every graph in `text`. Input starting with a digit is a single
/// edge list; anything else is treated as graph6, one graph per line.
pub fn read_graphs(text: &str) -> Result<Vec<Graph>> {
    let trimmed = text.trim_start();
    match trimmed.bytes().next() {
        None => Err(Error::Parse("no graph in input".into())),
        Some(b) if b.is_ascii_digit() || b == b'#' => Ok(vec![parse_edge_list(trimmed)?]),
        Some(_) => trimmed
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && l.trim() != GRAPH6_HEADER)
            .map(|(i, l)| {
                parse_graph6(l.trim().as_bytes()).map_err(|e| match e {
                    Error::Parse(msg) => Error::Parse(format!("line {}: {msg}", i + 1)),
                    other => other,
                })
            })
            .collect(),
    }
}
