//! Graph and labeling input formats.
//!
//! Graphs arrive as graph6 strings (short form, up to 62 vertices), edge
//! lists, or inline family descriptors like `P:4` and `Kst:3,3`. Labelings
//! are whitespace-separated digits. Parsers are strict: trailing bytes,
//! out-of-range values, and nonzero padding are rejected with positions.

use anyhow::{anyhow, bail, Context, Result};
use std::fs;
use std::path::Path;

use romdom::labeling::parse_labeling_text;
use romdom::{generate, Family, Graph, RomanLabeling};

/// Largest order the short graph6 form can carry.
pub const GRAPH6_MAX_ORDER: usize = 62;

fn graph6_value(byte: u8, offset: usize) -> Result<u8> {
    if !(63..=126).contains(&byte) {
        bail!(
            "invalid graph6 byte 0x{:02x} at byte offset {} (printable range is 63..=126)",
            byte,
            offset
        );
    }
    Ok(byte - 63)
}

/// Parses one short-form graph6 string: an order byte followed by the
/// upper triangle of the adjacency matrix, column by column, six bits per
/// byte, most significant bit first, zero padded.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        bail!("empty graph6 string");
    }
    if bytes[0] == b'~' {
        bail!("long-form graph6 at byte offset 0 is not supported (orders above 62)");
    }
    let n = graph6_value(bytes[0], 0)? as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if bytes.len() != 1 + need {
        bail!(
            "graph6 string on {} vertices needs {} payload bytes, found {} (at byte offset {})",
            n,
            need,
            bytes.len() - 1,
            bytes.len().min(1 + need)
        );
    }
    let mut bits = Vec::with_capacity(need * 6);
    for (i, &byte) in bytes[1..].iter().enumerate() {
        let value = graph6_value(byte, 1 + i)?;
        for shift in (0..6).rev() {
            bits.push((value >> shift) & 1 == 1);
        }
    }
    for (i, &bit) in bits[pairs..].iter().enumerate() {
        if bit {
            bail!(
                "nonzero graph6 padding bit at byte offset {}",
                1 + (pairs + i) / 6
            );
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Ok(Graph::build_from_edges(n, &edges)?)
}

/// Inverse of [`parse_graph6`] for graphs on at most 62 vertices.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        bail!(
            "graph on {} vertices does not fit the short graph6 form (max {})",
            n,
            GRAPH6_MAX_ORDER
        );
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    let mut out = String::new();
    out.push((63 + n as u8) as char);
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (i, &bit) in chunk.iter().enumerate() {
            if bit {
                value |= 1 << (5 - i);
            }
        }
        out.push((63 + value) as char);
    }
    Ok(out)
}

/// Parses an edge list: the first token is the order, every following
/// token pair is an edge. `#` starts a comment anywhere on a line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        for tok in line.split_whitespace() {
            tokens.push((i + 1, tok));
        }
    }
    let mut iter = tokens.into_iter();
    let (first_line, first) = iter
        .next()
        .ok_or_else(|| anyhow!("edge list contains no tokens"))?;
    let n: usize = first
        .parse()
        .with_context(|| format!("line {}: expected the vertex count, found {:?}", first_line, first))?;
    let rest: Vec<(usize, &str)> = iter.collect();
    if !rest.len().is_multiple_of(2) {
        let (line, tok) = rest[rest.len() - 1];
        bail!("line {}: endpoint {:?} has no partner", line, tok);
    }
    let mut edges = Vec::with_capacity(rest.len() / 2);
    for pair in rest.chunks(2) {
        let (lu, ut) = pair[0];
        let (lv, vt) = pair[1];
        let u: usize = ut
            .parse()
            .with_context(|| format!("line {}: bad vertex {:?}", lu, ut))?;
        let v: usize = vt
            .parse()
            .with_context(|| format!("line {}: bad vertex {:?}", lv, vt))?;
        if u >= n || v >= n {
            bail!(
                "line {}: edge ({}, {}) leaves the vertex range 0..{}",
                lv,
                u,
                v,
                n
            );
        }
        edges.push((u, v));
    }
    Ok(Graph::build_from_edges(n, &edges)?)
}

/// Builds a named family graph from a descriptor like `P:4`, `C:8`, `K:5`,
/// `Kst:3,3` or `Star:5` (a star with 5 leaves).
pub fn parse_family(desc: &str) -> Result<Graph> {
    let (name, params) = desc
        .split_once(':')
        .ok_or_else(|| anyhow!("family descriptor {:?} lacks a ':'", desc))?;
    let nums: Vec<usize> = params
        .split(',')
        .map(|p| {
            p.trim()
                .parse()
                .with_context(|| format!("bad family parameter {:?} in {:?}", p, desc))
        })
        .collect::<Result<_>>()?;
    let family = match (name, nums.as_slice()) {
        ("P", [n]) => Family::Path(*n),
        ("C", [n]) => Family::Cycle(*n),
        ("K", [n]) => Family::Complete(*n),
        ("Kst", [s, t]) => Family::CompleteBipartite(*s, *t),
        ("Star", [k]) => Family::Star(*k),
        _ => bail!(
            "unknown family descriptor {:?}; expected P:n, C:n, K:n, Kst:s,t or Star:k",
            desc
        ),
    };
    Ok(generate(family)?)
}

fn is_family_descriptor(input: &str) -> bool {
    matches!(
        input.split_once(':').map(|(name, _)| name),
        Some("P" | "C" | "K" | "Kst" | "Star")
    )
}

/// Loads a graph from a family descriptor, a file (`.g6` for graph6,
/// anything else as an edge list), or an inline graph6 string.
pub fn load_graph(input: &str) -> Result<Graph> {
    if is_family_descriptor(input) {
        return parse_family(input);
    }
    let path = Path::new(input);
    if path.exists() {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        if path.extension().is_some_and(|e| e == "g6") {
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| anyhow!("{} contains no graph6 line", path.display()))?;
            return parse_graph6(line.trim_end())
                .with_context(|| format!("parsing {}", path.display()));
        }
        return parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()));
    }
    if input.bytes().all(|b| (63..=126).contains(&b)) {
        return parse_graph6(input).with_context(|| format!("parsing inline graph6 {:?}", input));
    }
    bail!(
        "{:?} is neither a family descriptor, an existing file, nor a graph6 string",
        input
    )
}

/// Reads a labeling file: whitespace-separated digits 0/1/2, `#` comments.
pub fn load_labeling(path: &Path) -> Result<RomanLabeling> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let stripped: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect();
    Ok(parse_labeling_text(&stripped.join("\n"))?)
}

/// One corpus line: its 1-based line number, the raw graph6 text, and the
/// parsed graph.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub line: usize,
    pub text: String,
    pub graph: Graph,
}

/// Reads a graph6 corpus: one graph per non-empty line.
pub fn load_corpus(path: &Path) -> Result<Vec<CorpusEntry>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end();
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line).with_context(|| format!("{} line {}", path.display(), i + 1))?;
        graphs.push(CorpusEntry {
            line: i + 1,
            text: line.to_string(),
            graph: g,
        });
    }
    Ok(graphs)
}
