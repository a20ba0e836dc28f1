//! `.lie` and `.graph` text formats.
//!
//! ```text
//! # 3-dimensional Heisenberg algebra
//! dim 3
//! basis x y z
//! [1,2] = 1*3
//! ```
//!
//! Indices are 1-based. Each bracket line lists `[i,j]` with `i < j` and a
//! sum of `coefficient*target` terms; unlisted pairs are zero. Graph files
//! hold `vertices M` followed by `edge i j` lines.

use lieforge::catalog::GraphSpec;
use lieforge::lie::{default_names, AltBilinear, LieAlgebra};
use lieforge::linalg::{vector, Rational};
use lieforge::{LieError, Result};

fn parse_err(line: usize, message: impl Into<String>) -> LieError {
    LieError::Parse {
        line,
        message: message.into(),
    }
}

/// Lines with comments stripped, paired with 1-based line numbers; blank
/// lines are dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_index(s: &str, n: usize, line: usize) -> Result<usize> {
    let k: usize = s
        .parse()
        .map_err(|_| parse_err(line, format!("malformed index {s:?}")))?;
    if k == 0 || k > n {
        return Err(parse_err(line, format!("index {k} out of range 1..={n}")));
    }
    Ok(k - 1)
}

fn parse_rational(s: &str, line: usize) -> Result<Rational> {
    s.parse()
        .map_err(|_| parse_err(line, format!("malformed rational {s:?}")))
}

/// Parses `c1*k1 + c2*k2 - c3*k3` (whitespace already removed).
fn parse_terms(rhs: &str, n: usize, line: usize) -> Result<Vec<Rational>> {
    let mut out = vector::zeros(n);
    if rhs == "0" {
        return Ok(out);
    }
    let bytes = rhs.as_bytes();
    let mut pos = 0;
    let mut first = true;
    while pos < bytes.len() {
        let mut negate = false;
        if !first {
            match bytes[pos] {
                b'+' => {}
                b'-' => negate = true,
                _ => return Err(parse_err(line, format!("expected '+' or '-' in {rhs:?}"))),
            }
            pos += 1;
        }
        first = false;
        let start = pos;
        if pos < bytes.len() && (bytes[pos] == b'-' || bytes[pos] == b'+') {
            pos += 1;
        }
        while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
            pos += 1;
        }
        let term = &rhs[start..pos];
        let (c, k) = term
            .split_once('*')
            .ok_or_else(|| parse_err(line, format!("term {term:?} is not of the form c*k")))?;
        let mut c = parse_rational(c, line)?;
        if negate {
            c = -c;
        }
        let k = parse_index(k, n, line)?;
        out[k] += c;
    }
    Ok(out)
}

pub fn parse_lie(text: &str) -> Result<LieAlgebra> {
    let mut lines = content_lines(text);
    let (line, first) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty input: expected \"dim N\""))?;
    let n: usize = first
        .strip_prefix("dim")
        .filter(|rest| rest.starts_with(char::is_whitespace))
        .ok_or_else(|| parse_err(line, "expected \"dim N\" as the first line"))?
        .trim()
        .parse()
        .map_err(|_| parse_err(line, "malformed dimension"))?;
    if n == 0 {
        return Err(parse_err(line, "dimension must be positive"));
    }
    let mut names = default_names(n);
    let mut structure = AltBilinear::zero(n);
    let mut seen = vec![false; n * n];
    let mut saw_basis = false;
    let mut saw_bracket = false;
    for (line, text) in lines {
        if let Some(rest) = text.strip_prefix("basis") {
            if saw_basis || saw_bracket {
                return Err(parse_err(line, "\"basis\" must follow \"dim\" and appear once"));
            }
            let given: Vec<String> = rest.split_whitespace().map(String::from).collect();
            if given.len() != n {
                return Err(parse_err(
                    line,
                    format!("expected {n} basis names, found {}", given.len()),
                ));
            }
            for (i, name) in given.iter().enumerate() {
                if given[..i].contains(name) {
                    return Err(parse_err(line, format!("duplicate basis name {name:?}")));
                }
            }
            names = given;
            saw_basis = true;
            continue;
        }
        if !text.starts_with('[') {
            return Err(parse_err(line, format!("unrecognized line {text:?}")));
        }
        saw_bracket = true;
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let close = compact.find(']').ok_or_else(|| parse_err(line, "missing ']'"))?;
        let (i, j) = compact[1..close]
            .split_once(',')
            .ok_or_else(|| parse_err(line, "expected \"[i,j]\""))?;
        let i = parse_index(i, n, line)?;
        let j = parse_index(j, n, line)?;
        if i == j {
            return Err(parse_err(line, "diagonal pair"));
        }
        if i > j {
            return Err(parse_err(
                line,
                format!("pair [{},{}] must have i < j", i + 1, j + 1),
            ));
        }
        if std::mem::replace(&mut seen[i * n + j], true) {
            return Err(parse_err(line, format!("duplicate pair [{},{}]", i + 1, j + 1)));
        }
        let rhs = compact[close + 1..]
            .strip_prefix('=')
            .ok_or_else(|| parse_err(line, "expected '=' after the pair"))?;
        if rhs.is_empty() {
            return Err(parse_err(line, "missing right-hand side"));
        }
        structure.set(i, j, &parse_terms(rhs, n, line)?);
    }
    LieAlgebra::new(structure).with_names(names)
}

/// Canonical text: `dim`, a `basis` line when the names are not the
/// defaults, then nonzero pairs in lexicographic order with terms in
/// increasing target order.
pub fn emit_lie(l: &LieAlgebra) -> String {
    let n = l.dim();
    let mut out = format!("dim {n}\n");
    if l.names() != default_names(n).as_slice() {
        out.push_str("basis ");
        out.push_str(&l.names().join(" "));
        out.push('\n');
    }
    for (i, j, row) in l.structure().nonzero_pairs() {
        let terms: Vec<String> = row.iter().map(|(k, c)| format!("{c}*{}", k + 1)).collect();
        out.push_str(&format!("[{},{}] = {}\n", i + 1, j + 1, terms.join(" + ")));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<GraphSpec> {
    let mut lines = content_lines(text);
    let (line, first) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty input: expected \"vertices M\""))?;
    let m: usize = first
        .strip_prefix("vertices")
        .ok_or_else(|| parse_err(line, "expected \"vertices M\" as the first line"))?
        .trim()
        .parse()
        .map_err(|_| parse_err(line, "malformed vertex count"))?;
    let mut edges = Vec::new();
    for (line, text) in lines {
        let parts: Vec<&str> = text.split_whitespace().collect();
        let [kw, i, j] = parts.as_slice() else {
            return Err(parse_err(line, "expected \"edge i j\""));
        };
        if *kw != "edge" {
            return Err(parse_err(line, format!("unrecognized line {text:?}")));
        }
        let i = parse_index(i, m, line)? + 1;
        let j = parse_index(j, m, line)? + 1;
        if i >= j {
            return Err(parse_err(line, format!("edge ({i},{j}) must have i < j")));
        }
        if edges.contains(&(i, j)) {
            return Err(parse_err(line, format!("duplicate edge ({i},{j})")));
        }
        edges.push((i, j));
    }
    GraphSpec::new(m, &edges).map_err(|e| parse_err(line, e.to_string()))
}

pub fn emit_graph(g: &GraphSpec) -> String {
    let mut out = format!("vertices {}\n", g.vertices());
    for (i, j) in g.edges() {
        out.push_str(&format!("edge {i} {j}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use lieforge::catalog;

    fn err_message(text: &str) -> (usize, String) {
        match parse_lie(text) {
            Err(LieError::Parse { line, message }) => (line, message),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn heisenberg_transcription() {
        let l = parse_lie("dim 3\n[1,2] = 1*3\n").unwrap();
        assert_eq!(l.structure(), catalog::heisenberg(1).unwrap().structure());
        let a = parse_lie("dim 2\n[1,2] = 1*2\n").unwrap();
        assert_eq!(a.structure(), catalog::aff1().structure());
    }

    #[test]
    fn terms_with_signs_and_fractions() {
        let l =
            parse_lie("# comment\ndim 3\nbasis a b c\n[1,2] = 2*2 - 1/2*3 # tail\n[1,3] = -2*3\n").unwrap();
        assert_eq!(l.names(), ["a", "b", "c"]);
        assert_eq!(
            l.basis_bracket(0, 1),
            vec![Rational::zero(), Rational::from_int(2), Rational::new(-1, 2)]
        );
        assert_eq!(
            emit_lie(&l),
            "dim 3\nbasis a b c\n[1,2] = 2*2 + -1/2*3\n[1,3] = -2*3\n"
        );
    }

    #[test]
    fn rejections() {
        assert_eq!(err_message("dim 3\n[1,1] = 1*2\n"), (2, "diagonal pair".into()));
        assert!(err_message("dim 3\n[2,1] = 1*3\n").1.contains("i < j"));
        assert!(err_message("dim 3\n[1,2] = 1*3\n[1,2] = 1*3\n")
            .1
            .contains("duplicate"));
        assert!(err_message("dim 3\n[1,4] = 1*3\n").1.contains("out of range"));
        assert!(err_message("dim 3\n[1,2] = 1*7\n").1.contains("out of range"));
        assert!(err_message("dim 3\n[1,2] = 1/0*3\n")
            .1
            .contains("malformed rational"));
        assert!(err_message("dim 3\n[1,2] = x*3\n")
            .1
            .contains("malformed rational"));
        assert!(err_message("[1,2] = 1*3\n").1.contains("dim"));
        assert!(err_message("dim 2\nbasis a\n").1.contains("basis names"));
        assert_eq!(err_message("dim 3\n\n# c\nfoo\n").0, 4);
    }

    #[test]
    fn catalog_round_trip() {
        for (name, l) in catalog::standard_suite() {
            let text = emit_lie(&l);
            let back = parse_lie(&text).unwrap();
            assert_eq!(back.structure(), l.structure(), "{name}");
            assert_eq!(back.names(), l.names(), "{name}");
            assert_eq!(emit_lie(&back), text, "{name}");
        }
    }

    #[test]
    fn graphs() {
        let g = parse_graph("vertices 3\nedge 1 2\nedge 2 3\n").unwrap();
        assert_eq!(g, GraphSpec::path(3).unwrap());
        assert_eq!(emit_graph(&g), "vertices 3\nedge 1 2\nedge 2 3\n");
        assert!(parse_graph("vertices 3\nedge 2 1\n").is_err());
        assert!(parse_graph("vertices 3\nedge 1 2\nedge 1 2\n").is_err());
        assert!(parse_graph("vertices 2\nedge 1 3\n").is_err());
    }
}
