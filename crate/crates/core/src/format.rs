//! The line-oriented `.hkr` text format.
//!
//! ```text
//! # comment
//! hyperring NAME
//! m INT
//! n INT
//! elements L0 L1 ...
//! zero L
//! one L                     (optional)
//! commutative add           (optional)
//! commutative mul           (optional)
//! add a1 .. am -> b1 b2 ...
//! mul default -> b          (optional catch-all)
//! mul a1 .. an -> b
//! endo NAME: a->b c->d ...
//! ```
//!
//! Header lines may appear in any order; rows are resolved after all headers
//! are read. With a commutativity flag only non-decreasing tuples are
//! required; an explicit row for any other ordering overrides the value it
//! would otherwise inherit from its sorted form. Labels are single tokens
//! without `#`, `:`, `->` or top-level commas, and may not be `default`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::ops::ControlFlow;

use crate::elem::{for_each_tuple, Elem, ElemSet};
use crate::error::{Error, Result};
use crate::table::{HyperringTable, Signature};

/// An endomorphism line as written in a file; verified later.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoDecl {
    pub name: String,
    pub map: Vec<Elem>,
    pub line: usize,
}

#[derive(Clone, Debug)]
pub struct StructureFile {
    pub path: Option<String>,
    pub table: HyperringTable,
    pub endos: Vec<EndoDecl>,
    /// Line numbers of the header declarations, keyed by keyword.
    pub lines: HashMap<String, usize>,
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

struct Line<'a> {
    no: usize,
    raw: &'a str,
    tokens: Vec<&'a str>,
}

impl Line<'_> {
    fn column_of(&self, token_idx: usize) -> usize {
        let tok = self.tokens[token_idx];
        tok.as_ptr() as usize - self.raw.as_ptr() as usize + 1
    }

    fn err_at(&self, token_idx: usize, message: impl Into<String>) -> Error {
        let col = if token_idx < self.tokens.len() {
            self.column_of(token_idx)
        } else {
            self.raw.len() + 1
        };
        perr(self.no, col, message)
    }
}

/// Splits on `sep` occurrences outside parentheses and brackets.
pub fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn balanced(s: &str) -> bool {
    let mut stack = Vec::new();
    for c in s.chars() {
        match c {
            '(' | '[' | '{' => stack.push(c),
            ')' => {
                if stack.pop() != Some('(') {
                    return false;
                }
            }
            ']' => {
                if stack.pop() != Some('[') {
                    return false;
                }
            }
            '}'
                if stack.pop() != Some('{') => {
                    return false;
                }
            _ => {}
        }
    }
    stack.is_empty()
}

/// Why `label` cannot be used as an element label, if it cannot.
pub fn label_problem(label: &str) -> Option<&'static str> {
    if label.is_empty() {
        Some("empty label")
    } else if label.chars().any(char::is_whitespace) {
        Some("labels may not contain whitespace")
    } else if label.contains('#') || label.contains(':') || label.contains("->") {
        Some("labels may not contain `#`, `:` or `->`")
    } else if label == "default" {
        Some("`default` is reserved")
    } else if !balanced(label) {
        Some("unbalanced brackets in label")
    } else if split_top_level(label, ',').len() > 1 {
        Some("labels may not contain top-level commas")
    } else {
        None
    }
}

/// Parses a `.hkr` document.
pub fn parse_structure(text: &str) -> Result<StructureFile> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if !tokens.is_empty() {
            lines.push(Line {
                no: i + 1,
                raw,
                tokens,
            });
        }
    }

    let mut name = None;
    let mut m = None;
    let mut n = None;
    let mut labels: Option<Vec<String>> = None;
    let mut zero_tok = None;
    let mut one_tok = None;
    let mut comm_add = false;
    let mut comm_mul = false;
    let mut header_lines = HashMap::new();
    let mut rows = Vec::new();

    let once = |seen: &mut HashMap<String, usize>, key: &str, line: &Line| -> Result<()> {
        if let Some(prev) = seen.insert(key.to_string(), line.no) {
            return Err(line.err_at(0, format!("duplicate `{key}` declaration (first on line {prev})")));
        }
        Ok(())
    };

    for line in &lines {
        let kw = line.tokens[0];
        match kw {
            "hyperring" => {
                once(&mut header_lines, kw, line)?;
                if line.tokens.len() != 2 {
                    return Err(line.err_at(0, "expected `hyperring NAME`"));
                }
                name = Some(line.tokens[1].to_string());
            }
            "m" | "n" => {
                once(&mut header_lines, kw, line)?;
                if line.tokens.len() != 2 {
                    return Err(line.err_at(0, format!("expected `{kw} INT`")));
                }
                let v: usize = line.tokens[1]
                    .parse()
                    .map_err(|_| line.err_at(1, "expected an integer"))?;
                if v < 2 {
                    return Err(line.err_at(1, format!("arity {kw} must be at least 2")));
                }
                if kw == "m" {
                    m = Some(v);
                } else {
                    n = Some(v);
                }
            }
            "elements" => {
                once(&mut header_lines, kw, line)?;
                if line.tokens.len() < 2 {
                    return Err(line.err_at(0, "expected at least one element"));
                }
                let mut ls = Vec::new();
                for (i, tok) in line.tokens.iter().enumerate().skip(1) {
                    if let Some(p) = label_problem(tok) {
                        return Err(line.err_at(i, format!("bad label `{tok}`: {p}")));
                    }
                    if ls.iter().any(|l: &String| l == tok) {
                        return Err(line.err_at(i, format!("duplicate element `{tok}`")));
                    }
                    ls.push(tok.to_string());
                }
                labels = Some(ls);
            }
            "zero" | "one" => {
                once(&mut header_lines, kw, line)?;
                if line.tokens.len() != 2 {
                    return Err(line.err_at(0, format!("expected `{kw} LABEL`")));
                }
                if kw == "zero" {
                    zero_tok = Some((line, 1));
                } else {
                    one_tok = Some((line, 1));
                }
            }
            "commutative" => {
                if line.tokens.len() != 2 {
                    return Err(line.err_at(0, "expected `commutative add` or `commutative mul`"));
                }
                match line.tokens[1] {
                    "add" => {
                        once(&mut header_lines, "commutative add", line)?;
                        comm_add = true;
                    }
                    "mul" => {
                        once(&mut header_lines, "commutative mul", line)?;
                        comm_mul = true;
                    }
                    _ => return Err(line.err_at(1, "expected `add` or `mul`")),
                }
            }
            "add" | "mul" | "endo" => rows.push(line),
            _ => return Err(line.err_at(0, format!("unknown keyword `{kw}`"))),
        }
    }

    let end = lines.last().map_or(1, |l| l.no);
    let name = name.ok_or_else(|| perr(end, 1, "missing `hyperring NAME` declaration"))?;
    let m = m.ok_or_else(|| perr(end, 1, "missing `m` declaration"))?;
    let n = n.ok_or_else(|| perr(end, 1, "missing `n` declaration"))?;
    let labels = labels.ok_or_else(|| perr(end, 1, "missing `elements` declaration"))?;
    let lookup = |line: &Line, idx: usize| -> Result<Elem> {
        let tok = line.tokens[idx];
        labels
            .iter()
            .position(|l| l == tok)
            .ok_or_else(|| line.err_at(idx, format!("unknown element `{tok}`")))
    };
    let (zl, zi) = zero_tok.ok_or_else(|| perr(end, 1, "missing `zero` declaration"))?;
    let zero = lookup(zl, zi)?;
    let one = one_tok.map(|(l, i)| lookup(l, i)).transpose()?;
    let size = labels.len();

    let mut add_rows: HashMap<Vec<Elem>, (ElemSet, usize)> = HashMap::new();
    let mut mul_rows: HashMap<Vec<Elem>, (Elem, usize)> = HashMap::new();
    let mut mul_default: Option<Elem> = None;
    let mut endos = Vec::new();
    let mut last_add_line = end;
    let mut last_mul_line = end;

    for line in rows {
        let kw = line.tokens[0];
        if kw == "endo" {
            endos.push(parse_endo_line(line, &labels)?);
            continue;
        }
        let arrow = line
            .tokens
            .iter()
            .position(|&t| t == "->")
            .ok_or_else(|| line.err_at(0, "expected `->`"))?;
        let args = &line.tokens[1..arrow];
        let values = &line.tokens[arrow + 1..];
        if kw == "mul" && args == ["default"] {
            if mul_default.is_some() {
                return Err(line.err_at(1, "duplicate `mul default` row"));
            }
            if values.len() != 1 {
                return Err(line.err_at(arrow, "multiplication rows take exactly one value"));
            }
            mul_default = Some(lookup(line, arrow + 1)?);
            last_mul_line = line.no;
            continue;
        }
        let arity = if kw == "add" { m } else { n };
        if args.len() != arity {
            return Err(line.err_at(
                0,
                format!("arity mismatch: `{kw}` takes {arity} arguments, got {}", args.len()),
            ));
        }
        let tuple: Vec<Elem> = (1..arrow).map(|i| lookup(line, i)).collect::<Result<_>>()?;
        if values.is_empty() {
            return Err(line.err_at(arrow, "missing value after `->`"));
        }
        if kw == "add" {
            let mut set = ElemSet::EMPTY;
            for i in arrow + 1..line.tokens.len() {
                set.insert(lookup(line, i)?);
            }
            if let Some((_, prev)) = add_rows.insert(tuple.clone(), (set, line.no)) {
                return Err(line.err_at(0, format!(
                    "duplicate tuple {} (first on line {prev})",
                    plain_tuple(&labels, &tuple)
                )));
            }
            last_add_line = line.no;
        } else {
            if values.len() != 1 {
                return Err(line.err_at(arrow, "multiplication rows take exactly one value"));
            }
            let v = lookup(line, arrow + 1)?;
            if let Some((_, prev)) = mul_rows.insert(tuple.clone(), (v, line.no)) {
                return Err(line.err_at(0, format!(
                    "duplicate tuple {} (first on line {prev})",
                    plain_tuple(&labels, &tuple)
                )));
            }
            last_mul_line = line.no;
        }
    }

    let add = resolve_rows(size, m, comm_add, &add_rows, None, |t| {
        perr(last_add_line, 1, format!("missing tuple {} in addition table", plain_tuple(&labels, t)))
    })?;
    let mul = resolve_rows(size, n, comm_mul, &mul_rows, mul_default, |t| {
        perr(last_mul_line, 1, format!("missing tuple {} in multiplication table", plain_tuple(&labels, t)))
    })?;

    let sig = Signature {
        name,
        m,
        n,
        labels,
        zero,
        one,
        commutative_add: comm_add,
        commutative_mul: comm_mul,
    };
    let table = HyperringTable::from_dense(sig, add, mul)?;
    Ok(StructureFile {
        path: None,
        table,
        endos,
        lines: header_lines,
    })
}

fn resolve_rows<V: Copy>(
    size: usize,
    arity: usize,
    commutative: bool,
    rows: &HashMap<Vec<Elem>, (V, usize)>,
    default: Option<V>,
    missing: impl Fn(&[Elem]) -> Error,
) -> Result<Vec<V>> {
    let mut out = Vec::new();
    let mut sorted = vec![0; arity];
    let failure = for_each_tuple(size, arity, |t| {
        let v = match rows.get(t) {
            Some(&(v, _)) => Some(v),
            None if commutative && t.windows(2).any(|w| w[0] > w[1]) => {
                sorted.copy_from_slice(t);
                sorted.sort_unstable();
                rows.get(&sorted).map(|&(v, _)| v).or(default)
            }
            None => default,
        };
        match v {
            Some(v) => {
                out.push(v);
                ControlFlow::Continue(())
            }
            None => {
                sorted.copy_from_slice(t);
                if commutative {
                    sorted.sort_unstable();
                }
                ControlFlow::Break(missing(&sorted))
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Parses a file of `endo NAME: a->b ...` lines against `table`'s labels.
pub fn parse_endo_lines(table: &HyperringTable, text: &str) -> Result<Vec<EndoDecl>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let line = Line { no: i + 1, raw, tokens };
        if line.tokens[0] != "endo" {
            return Err(line.err_at(0, format!("expected `endo`, got `{}`", line.tokens[0])));
        }
        out.push(parse_endo_line(&line, table.labels())?);
    }
    Ok(out)
}

fn parse_endo_line(line: &Line, labels: &[String]) -> Result<EndoDecl> {
    // `endo NAME: a->b ...`; the colon may be attached to the name.
    let mut idx = 1;
    let name_tok = line
        .tokens
        .get(idx)
        .ok_or_else(|| line.err_at(0, "expected `endo NAME: a->b ...`"))?;
    let name = if let Some(stripped) = name_tok.strip_suffix(':') {
        idx += 1;
        stripped
    } else {
        idx += 1;
        if line.tokens.get(idx) != Some(&":") {
            return Err(line.err_at(idx.min(line.tokens.len()), "expected `:` after endomorphism name"));
        }
        idx += 1;
        name_tok
    };
    if name.is_empty() {
        return Err(line.err_at(1, "empty endomorphism name"));
    }
    let mut map: Vec<Option<Elem>> = vec![None; labels.len()];
    for i in idx..line.tokens.len() {
        let tok = line.tokens[i];
        let (a, b) = tok
            .split_once("->")
            .ok_or_else(|| line.err_at(i, format!("expected `a->b`, got `{tok}`")))?;
        let find = |l: &str| {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| line.err_at(i, format!("unknown element `{l}`")))
        };
        let (a, b) = (find(a)?, find(b)?);
        if map[a].replace(b).is_some() {
            return Err(line.err_at(i, format!("element `{}` mapped twice", labels[a])));
        }
    }
    let map = map
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| line.err_at(0, format!("endomorphism `{name}` does not map `{}`", labels[i])))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EndoDecl {
        name: name.to_string(),
        map,
        line: line.no,
    })
}

fn plain_tuple(labels: &[String], t: &[Elem]) -> String {
    let parts: Vec<&str> = t.iter().map(|&e| labels[e].as_str()).collect();
    format!("({})", parts.join(","))
}

/// Writes `table` (and any endomorphisms) in the canonical `.hkr` layout.
pub fn serialize(table: &HyperringTable, endos: &[(String, Vec<Elem>)]) -> String {
    let mut out = String::new();
    let l = |e: Elem| table.label(e);
    let _ = writeln!(out, "hyperring {}", table.name());
    let _ = writeln!(out, "m {}", table.m());
    let _ = writeln!(out, "n {}", table.n());
    let _ = writeln!(out, "elements {}", table.labels().join(" "));
    let _ = writeln!(out, "zero {}", l(table.zero()));
    if let Some(one) = table.one() {
        let _ = writeln!(out, "one {}", l(one));
    }
    if table.commutative_add() {
        out.push_str("commutative add\n");
    }
    if table.commutative_mul() {
        out.push_str("commutative mul\n");
    }

    let size = table.size();
    for_each_tuple::<()>(size, table.m(), |t| {
        if stored_row(t, table.commutative_add(), |x| table.add(x)) {
            let vals: Vec<&str> = table.add(t).iter().map(l).collect();
            let args: Vec<&str> = t.iter().map(|&e| l(e)).collect();
            let _ = writeln!(out, "add {} -> {}", args.join(" "), vals.join(" "));
        }
        ControlFlow::Continue(())
    });

    // Candidate rows, then a catch-all for the most frequent value.
    let mut candidates: Vec<Vec<Elem>> = Vec::new();
    for_each_tuple::<()>(size, table.n(), |t| {
        if stored_row(t, table.commutative_mul(), |x| table.mul(x)) {
            candidates.push(t.to_vec());
        }
        ControlFlow::Continue(())
    });
    let is_override = |t: &[Elem]| table.commutative_mul() && t.windows(2).any(|w| w[0] > w[1]);
    let mut counts = vec![0usize; size];
    for t in candidates.iter().filter(|t| !is_override(t)) {
        counts[table.mul(t)] += 1;
    }
    let (best, &best_count) = counts
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .expect("non-empty carrier");
    let default = (best_count >= 2).then_some(best);
    if let Some(d) = default {
        let _ = writeln!(out, "mul default -> {}", l(d));
    }
    for t in &candidates {
        let v = table.mul(t);
        if default == Some(v) && !is_override(t) {
            continue;
        }
        let args: Vec<&str> = t.iter().map(|&e| l(e)).collect();
        let _ = writeln!(out, "mul {} -> {}", args.join(" "), l(v));
    }

    for (name, map) in endos {
        let pairs: Vec<String> = map
            .iter()
            .enumerate()
            .map(|(a, &b)| format!("{}->{}", l(a), l(b)))
            .collect();
        let _ = writeln!(out, "endo {}: {}", name, pairs.join(" "));
    }
    out
}

/// Whether the row for `t` is written: every tuple without the flag; with
/// it, sorted tuples and those that disagree with their sorted form.
fn stored_row<V: PartialEq>(t: &[Elem], commutative: bool, value: impl Fn(&[Elem]) -> V) -> bool {
    if !commutative || t.windows(2).all(|w| w[0] <= w[1]) {
        return true;
    }
    let mut sorted = t.to_vec();
    sorted.sort_unstable();
    value(t) != value(&sorted)
}

/// Strips comments and blank lines and collapses runs of whitespace.
pub fn normalize(text: &str) -> String {
    let mut out = String::new();
    for raw in text.lines() {
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if !tokens.is_empty() {
            out.push_str(&tokens.join(" "));
            out.push('\n');
        }
    }
    out
}

/// `(a,b,c)` with the table's labels.
pub fn format_tuple(table: &HyperringTable, t: &[Elem]) -> String {
    plain_tuple(table.labels(), t)
}

/// `{a,b}` with members in declaration order.
pub fn format_set(table: &HyperringTable, s: ElemSet) -> String {
    let parts: Vec<&str> = s.iter().map(|e| table.label(e)).collect();
    format!("{{{}}}", parts.join(","))
}

fn strip_outer(s: &str, open: char, close: char) -> &str {
    let t = s.trim();
    if t.starts_with(open) && t.ends_with(close) && t.len() >= 2 {
        let inner = &t[1..t.len() - 1];
        if balanced(inner) {
            return inner;
        }
    }
    t
}

/// Parses `a,b,c` (optionally wrapped in `(..)`) into a tuple. A bare
/// compound label such as `(0,1)` reads as a 1-tuple when its parts are not
/// labels themselves.
pub fn parse_tuple(table: &HyperringTable, s: &str) -> Result<Vec<Elem>> {
    let inner = strip_outer(s, '(', ')');
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let split: Result<Vec<Elem>> = split_top_level(inner, ',')
        .into_iter()
        .map(|p| table.elem(p.trim()))
        .collect();
    match (split, table.elem(s.trim())) {
        (Ok(t), _) => Ok(t),
        (Err(_), Ok(e)) => Ok(vec![e]),
        (Err(err), Err(_)) => Err(err),
    }
}

/// Parses `a,b` (optionally wrapped in `{..}`) into an element set.
pub fn parse_set(table: &HyperringTable, s: &str) -> Result<ElemSet> {
    let inner = strip_outer(s, '{', '}');
    if inner.trim().is_empty() {
        return Ok(ElemSet::EMPTY);
    }
    split_top_level(inner, ',')
        .into_iter()
        .map(|p| table.elem(p.trim()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn bundled_fixtures_round_trip() {
        for (name, text) in fixtures::ALL_FILES {
            let parsed = parse_structure(text).unwrap_or_else(|e| panic!("{name}: {e}"));
            let endos: Vec<_> = parsed.endos.iter().map(|d| (d.name.clone(), d.map.clone())).collect();
            let written = serialize(&parsed.table, &endos);
            assert_eq!(written, normalize(text), "{name} does not round-trip");
            let again = parse_structure(&written).unwrap();
            assert_eq!(again.table, parsed.table);
        }
    }

    #[test]
    fn missing_row_is_located() {
        let text = fixtures::S4_HKR.replace("add 2 3 -> 1\n", "");
        let err = parse_structure(&text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("missing tuple (2,3)"), "{msg}");
        assert!(matches!(err, Error::Parse { line, .. } if line > 1));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let base = "hyperring t\nm 2\nn 2\nelements 0 1\nzero 0\ncommutative add\ncommutative mul\n";
        let rows = "add 0 0 -> 0\nadd 0 1 -> 1\nadd 1 1 -> 0\nmul default -> 0\nmul 1 1 -> 1\n";
        assert!(parse_structure(&format!("{base}{rows}")).is_ok());

        let dup = format!("{base}{rows}add 0 1 -> 1\n");
        assert!(matches!(parse_structure(&dup), Err(Error::Parse { line: 13, column: 1, .. })));

        let unknown = format!("{base}{rows}").replace("add 1 1 -> 0", "add 1 x -> 0");
        match parse_structure(&unknown) {
            Err(Error::Parse { line, column, message }) => {
                assert_eq!((line, column), (10, 7));
                assert!(message.contains("unknown element `x`"));
            }
            other => panic!("{other:?}"),
        }

        let arity = format!("{base}{rows}").replace("add 1 1 -> 0", "add 1 1 1 -> 0");
        let e = parse_structure(&arity).unwrap_err().to_string();
        assert!(e.contains("arity mismatch"), "{e}");

        let nozero = format!("{base}{rows}").replace("zero 0\n", "");
        let e = parse_structure(&nozero).unwrap_err().to_string();
        assert!(e.contains("missing `zero`"), "{e}");
    }

    #[test]
    fn endo_lines() {
        let p = parse_structure(fixtures::P_HKR).unwrap();
        let text = format!("{}endo inv: 0->0 1->1 u->w v->v w->u\n", fixtures::P_HKR);
        let f = parse_structure(&text).unwrap();
        assert_eq!(f.endos.len(), 1);
        assert_eq!(f.endos[0].name, "inv");
        let u = p.table.elem("u").unwrap();
        let w = p.table.elem("w").unwrap();
        assert_eq!(f.endos[0].map[u], w);

        let partial = format!("{}endo bad: 0->0 1->1\n", fixtures::P_HKR);
        let e = parse_structure(&partial).unwrap_err().to_string();
        assert!(e.contains("does not map"), "{e}");
    }

    #[test]
    fn standalone_endo_files() {
        let p = fixtures::p();
        let got = parse_endo_lines(&p, "# maps\nendo id: 0->0 1->1 u->u v->v w->w\n").unwrap();
        assert_eq!(got[0].map, vec![0, 1, 2, 3, 4]);
        assert_eq!(got[0].line, 2);
        let err = parse_endo_lines(&p, "add 0 0 -> 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, column: 1, .. }));
    }

    #[test]
    fn literals_with_compound_labels() {
        let pp = fixtures::p_squared();
        let t = parse_tuple(&pp, "((1,0),(0,1))").unwrap();
        assert_eq!(format_tuple(&pp, &t), "((1,0),(0,1))");
        let s = parse_set(&pp, "(0,0),(0,1)").unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(parse_set(&pp, &format_set(&pp, s)).unwrap(), s);
        let single = parse_tuple(&pp, "(1,0)").unwrap();
        assert_eq!(single, vec![pp.elem("(1,0)").unwrap()]);

        let s4 = fixtures::s4();
        assert_eq!(parse_tuple(&s4, "(1,2,3,3)").unwrap(), vec![1, 2, 3, 3]);
        assert_eq!(parse_set(&s4, "0,1").unwrap(), ElemSet::from_iter([0, 1]));
        assert!(parse_set(&s4, "0,9").is_err());
    }

    #[test]
    fn label_rules() {
        assert!(label_problem("(0,1)").is_none());
        assert!(label_problem("[0,1]").is_none());
        assert!(label_problem("a,b").is_some());
        assert!(label_problem("a->b").is_some());
        assert!(label_problem("default").is_some());
        assert!(label_problem("(a").is_some());
    }
}
