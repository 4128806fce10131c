//! Quivers with relations and their text format.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::linalg::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// `coeff * a1 * a2 * ...`, composed left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: i64,
    pub word: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub field: Field,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    pub pathlen_bound: Option<usize>,
}

impl QuiverPresentation {
    pub fn new(field: Field) -> QuiverPresentation {
        QuiverPresentation { field, vertices: Vec::new(), arrows: Vec::new(), relations: Vec::new(), pathlen_bound: None }
    }

    pub fn vertex(mut self, label: &str) -> Self {
        self.vertices.push(label.to_string());
        self
    }

    pub fn vertices(mut self, labels: &[&str]) -> Self {
        self.vertices.extend(labels.iter().map(|s| s.to_string()));
        self
    }

    /// Adds an arrow between vertex labels. Panics on unknown labels.
    pub fn arrow(mut self, name: &str, source: &str, target: &str) -> Self {
        let s = self.vertex_index(source).expect("unknown source vertex");
        let t = self.vertex_index(target).expect("unknown target vertex");
        self.arrows.push(Arrow { name: name.to_string(), source: s, target: t });
        self
    }

    /// Adds a relation written in the text syntax, e.g. `"a*b - c*d"`.
    pub fn relation(mut self, text: &str) -> Self {
        let rel = parse_relation(text, &self.arrow_map()).expect("bad relation");
        self.relations.push(rel);
        self
    }

    pub fn with_bound(mut self, n: usize) -> Self {
        self.pathlen_bound = Some(n);
        self
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    fn arrow_map(&self) -> HashMap<String, usize> {
        self.arrows.iter().enumerate().map(|(i, a)| (a.name.clone(), i)).collect()
    }

    /// Default path-length bound: twice the arrow count plus two.
    pub fn effective_bound(&self) -> usize {
        self.pathlen_bound.unwrap_or(2 * self.arrows.len() + 2)
    }

    /// Source and target of a nonempty word, if composable.
    pub fn word_ends(&self, word: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*word.first()?)?;
        let mut cur = first.target;
        for &a in &word[1..] {
            let arrow = self.arrows.get(a)?;
            if arrow.source != cur {
                return None;
            }
            cur = arrow.target;
        }
        Some((first.source, cur))
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if seen.insert(v.clone(), i).is_some() {
                return Err(Error::Presentation(format!("duplicate vertex {v}")));
            }
        }
        let mut names = HashMap::new();
        for a in &self.arrows {
            if a.source >= self.vertices.len() || a.target >= self.vertices.len() {
                return Err(Error::Presentation(format!("arrow {} has an unknown endpoint", a.name)));
            }
            if names.insert(a.name.clone(), ()).is_some() {
                return Err(Error::Presentation(format!("duplicate arrow {}", a.name)));
            }
        }
        for (ri, rel) in self.relations.iter().enumerate() {
            let mut ends = None;
            for t in &rel.terms {
                if t.word.len() < 2 {
                    return Err(Error::Presentation(format!("relation {ri} has a term of length < 2")));
                }
                let e = self
                    .word_ends(&t.word)
                    .ok_or_else(|| Error::Presentation(format!("relation {ri} has a non-composable term")))?;
                match ends {
                    None => ends = Some(e),
                    Some(prev) if prev != e => {
                        return Err(Error::Presentation(format!("relation {ri} mixes non-parallel paths")));
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    /// The presentation of the opposite algebra: arrows and words reversed.
    pub fn opposite(&self) -> QuiverPresentation {
        QuiverPresentation {
            field: self.field,
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| Relation {
                    terms: r
                        .terms
                        .iter()
                        .map(|t| Term { coeff: t.coeff, word: t.word.iter().rev().copied().collect() })
                        .collect(),
                })
                .collect(),
            pathlen_bound: self.pathlen_bound,
        }
    }

    pub fn word_name(&self, word: &[usize]) -> String {
        word.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
    }

    pub fn parse(text: &str) -> Result<QuiverPresentation> {
        let mut qp = QuiverPresentation::new(Field::Rational);
        let mut field_seen = false;
        for (ln, raw) in text.lines().enumerate() {
            let line_no = ln + 1;
            let line = raw.split('#').next().unwrap_or("");
            let indent = line.len() - line.trim_start().len();
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let err = |col: usize, msg: String| Error::Parse { line: line_no, col: indent + col + 1, msg };
            let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest_col = line.len() - rest.len();
            let rest = rest.trim();
            match kw {
                "field" => {
                    if field_seen {
                        return Err(err(0, "duplicate field declaration".into()));
                    }
                    field_seen = true;
                    qp.field = parse_field(rest).map_err(|m| err(rest_col, m))?;
                }
                "vertex" => {
                    if rest.is_empty() || rest.contains(char::is_whitespace) {
                        return Err(err(rest_col, "expected a single vertex label".into()));
                    }
                    if qp.vertex_index(rest).is_some() {
                        return Err(err(rest_col, format!("duplicate vertex {rest}")));
                    }
                    qp.vertices.push(rest.to_string());
                }
                "arrow" => {
                    let (name, ends) =
                        rest.split_once(':').ok_or_else(|| err(rest_col, "expected `name: src -> tgt`".into()))?;
                    let name = name.trim();
                    if name.is_empty() || !is_ident(name) {
                        return Err(err(rest_col, format!("bad arrow name `{name}`")));
                    }
                    let (s, t) =
                        ends.split_once("->").ok_or_else(|| err(rest_col, "expected `->` in arrow".into()))?;
                    let s = qp.vertex_index(s.trim()).ok_or_else(|| err(rest_col, format!("unknown vertex `{}`", s.trim())))?;
                    let t = qp.vertex_index(t.trim()).ok_or_else(|| err(rest_col, format!("unknown vertex `{}`", t.trim())))?;
                    if qp.arrows.iter().any(|a| a.name == name) {
                        return Err(err(rest_col, format!("duplicate arrow {name}")));
                    }
                    qp.arrows.push(Arrow { name: name.to_string(), source: s, target: t });
                }
                "relation" => {
                    let rel = parse_relation(rest, &qp.arrow_map()).map_err(|(c, m)| err(rest_col + c, m))?;
                    qp.relations.push(rel);
                }
                "pathlen_bound" => {
                    let n = rest.parse::<usize>().map_err(|_| err(rest_col, format!("bad bound `{rest}`")))?;
                    qp.pathlen_bound = Some(n);
                }
                other => return Err(err(0, format!("unknown declaration `{other}`"))),
            }
        }
        qp.validate()?;
        Ok(qp)
    }
}

fn is_ident(s: &str) -> bool {
    s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'') && !s.chars().all(|c| c.is_ascii_digit())
}

pub(crate) fn parse_field(s: &str) -> std::result::Result<Field, String> {
    let parts: Vec<_> = s.split_whitespace().collect();
    match parts.as_slice() {
        ["Q"] => Ok(Field::Rational),
        ["Fp", p] => {
            let p: u32 = p.parse().map_err(|_| format!("bad prime `{p}`"))?;
            Field::prime(p).map_err(|e| e.to_string())
        }
        _ => Err(format!("expected `Q` or `Fp <prime>`, got `{s}`")),
    }
}

fn parse_relation(text: &str, arrows: &HashMap<String, usize>) -> std::result::Result<Relation, (usize, String)> {
    let mut terms = Vec::new();
    let bytes: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut sign = 1i64;
    let mut expect_term = true;
    let mut leading_sign = false;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '+' || c == '-' {
            if !expect_term || (terms.is_empty() && !leading_sign) {
                leading_sign = true;
                sign = if c == '-' { -1 } else { 1 };
                expect_term = true;
                i += 1;
                continue;
            }
            return Err((i, "unexpected sign".into()));
        }
        if !expect_term {
            return Err((i, "expected `+` or `-` between terms".into()));
        }
        let start = i;
        while i < bytes.len() && !bytes[i].is_whitespace() && bytes[i] != '+' && bytes[i] != '-' {
            i += 1;
        }
        let tok: String = bytes[start..i].iter().collect();
        let mut coeff = 1i64;
        let mut word = Vec::new();
        for (k, part) in tok.split('*').enumerate() {
            if k == 0 && !part.is_empty() && part.chars().all(|c| c.is_ascii_digit()) {
                coeff = part.parse().map_err(|_| (start, format!("bad coefficient `{part}`")))?;
                continue;
            }
            let a = arrows.get(part).ok_or_else(|| (start, format!("unknown arrow `{part}`")))?;
            word.push(*a);
        }
        if word.is_empty() {
            return Err((start, "term without arrows".into()));
        }
        terms.push(Term { coeff: sign * coeff, word });
        sign = 1;
        expect_term = false;
    }
    if terms.is_empty() || expect_term {
        return Err((text.len(), "incomplete relation".into()));
    }
    Ok(Relation { terms })
}

impl fmt::Display for QuiverPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {}", self.field)?;
        for v in &self.vertices {
            writeln!(f, "vertex {v}")?;
        }
        for a in &self.arrows {
            writeln!(f, "arrow {}: {} -> {}", a.name, self.vertices[a.source], self.vertices[a.target])?;
        }
        for r in &self.relations {
            let mut s = String::new();
            for (k, t) in r.terms.iter().enumerate() {
                let mag = t.coeff.unsigned_abs();
                if k == 0 {
                    if t.coeff < 0 {
                        s.push('-');
                    }
                } else {
                    s.push_str(if t.coeff < 0 { " - " } else { " + " });
                }
                if mag != 1 {
                    let _ = write!(s, "{mag}*");
                }
                s.push_str(&self.word_name(&t.word));
            }
            writeln!(f, "relation {s}")?;
        }
        if let Some(n) = self.pathlen_bound {
            writeln!(f, "pathlen_bound {n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX44: &str = "field Q\nvertex 1\nvertex 2\nvertex 3\narrow a1: 1 -> 2\narrow b2: 2 -> 1\n\
                        arrow a2: 2 -> 3\narrow b1: 3 -> 2\nrelation a1*b2\nrelation a2*b1 - b2*a1\n";

    #[test]
    fn parse_print_roundtrip() {
        let qp = QuiverPresentation::parse(EX44).unwrap();
        assert_eq!(qp.vertices.len(), 3);
        assert_eq!(qp.relations[1].terms[1].coeff, -1);
        let printed = qp.to_string();
        assert_eq!(QuiverPresentation::parse(&printed).unwrap(), qp);
    }

    #[test]
    fn diagnostics_carry_position() {
        let e = QuiverPresentation::parse("vertex 1\narrow a: 1 -> 9\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        let e = QuiverPresentation::parse("vertex 1\nfoo\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, col: 1, .. }));
    }

    #[test]
    fn rejects_short_and_nonparallel_relations() {
        let base = "vertex 1\nvertex 2\nvertex 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 1 -> 3\n";
        assert!(QuiverPresentation::parse(&format!("{base}relation a*b\n")).is_ok());
        assert!(QuiverPresentation::parse(&format!("{base}relation c\n")).is_err());
        assert!(QuiverPresentation::parse(&format!("{base}relation a*b - a\n")).is_err());
        assert!(QuiverPresentation::parse(&format!("{base}relation b*a\n")).is_err());
    }

    #[test]
    fn coefficients_and_leading_sign() {
        let qp = QuiverPresentation::parse(
            "field Fp 3\nvertex x\narrow t: x -> x\nrelation -2*t*t + t*t*t\npathlen_bound 4\n",
        )
        .unwrap();
        assert_eq!(qp.field, Field::Prime(3));
        assert_eq!(qp.relations[0].terms[0].coeff, -2);
        assert_eq!(qp.pathlen_bound, Some(4));
        assert_eq!(QuiverPresentation::parse(&qp.to_string()).unwrap(), qp);
    }
}
