//! Module text format.
//!
//! ```text
//! module over ex44.alg
//! dim 1: 1
//! dim 2: 1
//! basis b2: [[1]]
//! ```
//! Only generator matrices are needed; omitted generators act by zero.

use std::fmt::Write as _;
use std::str::FromStr;

use num_rational::BigRational;

use super::module::Module;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Scalar};

/// Header path and the matrix declarations of a module file.
pub struct ModuleText {
    pub algebra_path: String,
    dims: Vec<(String, usize, usize)>,
    blocks: Vec<(String, String, usize)>,
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col: col + 1, msg: msg.into() }
}

impl ModuleText {
    pub fn parse(text: &str) -> Result<ModuleText> {
        let mut algebra_path = None;
        let mut dims = Vec::new();
        let mut blocks = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line_no = ln + 1;
            let line = raw.split('#').next().unwrap_or("");
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let indent = line.len() - line.trim_start().len();
            if let Some(rest) = trimmed.strip_prefix("module over ") {
                algebra_path = Some(rest.trim().to_string());
            } else if let Some(rest) = trimmed.strip_prefix("dim ") {
                let (v, n) = rest.split_once(':').ok_or_else(|| perr(line_no, indent, "expected `dim <vertex>: <n>`"))?;
                let n = n.trim().parse::<usize>().map_err(|_| perr(line_no, indent, "dimension is not a count"))?;
                dims.push((v.trim().to_string(), n, line_no));
            } else if let Some(rest) = trimmed.strip_prefix("basis ") {
                let (label, m) =
                    rest.split_once(':').ok_or_else(|| perr(line_no, indent, "expected `basis <label>: <matrix>`"))?;
                blocks.push((label.trim().to_string(), m.trim().to_string(), line_no));
            } else {
                return Err(perr(line_no, indent, format!("unknown declaration `{trimmed}`")));
            }
        }
        let algebra_path = algebra_path.ok_or_else(|| perr(1, 0, "missing `module over <file>` header"))?;
        Ok(ModuleText { algebra_path, dims, blocks })
    }

    /// Interprets the declarations over a loaded algebra.
    pub fn build(&self, algebra: &Algebra) -> Result<Module> {
        let field = algebra.field();
        let mut dims = vec![0; algebra.num_vertices()];
        for (v, n, line) in &self.dims {
            let i = algebra.vertex_index(v).ok_or_else(|| perr(*line, 4, format!("unknown vertex `{v}`")))?;
            dims[i] = *n;
        }
        let mut gens: Vec<Mat> = algebra
            .generators()
            .iter()
            .map(|&g| {
                let (s, t) = algebra.ends(g);
                Mat::zeros(field, dims[s], dims[t])
            })
            .collect();
        let mut full: Vec<Option<Mat>> = vec![None; algebra.dim()];
        for (label, text, line) in &self.blocks {
            let b = algebra.basis_index(label).ok_or_else(|| perr(*line, 6, format!("unknown basis element `{label}`")))?;
            let (s, t) = algebra.ends(b);
            let m = parse_matrix(text, field, dims[s], dims[t]).map_err(|msg| perr(*line, 6 + label.len() + 2, msg))?;
            match algebra.generators().iter().position(|&g| g == b) {
                Some(gi) => gens[gi] = m.clone(),
                None => {}
            }
            full[b] = Some(m);
        }
        let module = Module::from_generators(algebra, dims, gens)?;
        for (b, m) in full.iter().enumerate() {
            if let Some(m) = m {
                if m != module.act(b) {
                    return Err(Error::Module(format!(
                        "declared matrix for {} disagrees with the generator action",
                        algebra.label(b)
                    )));
                }
            }
        }
        Ok(module)
    }
}

fn parse_scalar(tok: &str, field: Field) -> std::result::Result<Scalar, String> {
    let q = BigRational::from_str(tok.trim()).map_err(|_| format!("bad scalar `{}`", tok.trim()))?;
    field.from_rational(&q).map_err(|e| e.to_string())
}

fn parse_matrix(text: &str, field: Field, rows: usize, cols: usize) -> std::result::Result<Mat, String> {
    let t = text.trim();
    let inner = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')).ok_or("matrix must be bracketed")?;
    let inner = inner.trim();
    let mut out = Vec::new();
    if !inner.is_empty() {
        let mut rest = inner;
        loop {
            rest = rest.trim_start();
            let body = rest.strip_prefix('[').ok_or("row must be bracketed")?;
            let end = body.find(']').ok_or("unterminated row")?;
            let row_text = &body[..end];
            let row: Vec<Scalar> = if row_text.trim().is_empty() {
                Vec::new()
            } else {
                row_text.split(',').map(|x| parse_scalar(x, field)).collect::<std::result::Result<_, _>>()?
            };
            if row.len() != cols {
                return Err(format!("row has {} entries, expected {cols}", row.len()));
            }
            out.push(row);
            rest = body[end + 1..].trim_start();
            if rest.is_empty() {
                break;
            }
            rest = rest.strip_prefix(',').ok_or("expected `,` between rows")?;
        }
    }
    if out.len() != rows {
        return Err(format!("matrix has {} rows, expected {rows}", out.len()));
    }
    Ok(Mat::from_rows(field, cols, out))
}

fn format_matrix(m: &Mat) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

/// Prints a module in the text format, listing generator matrices only.
pub fn print_module(m: &Module, algebra_path: &str) -> String {
    let alg = m.algebra();
    let mut out = String::new();
    writeln!(out, "module over {algebra_path}").unwrap();
    for v in 0..alg.num_vertices() {
        writeln!(out, "dim {}: {}", alg.vertex_label(v), m.dim_at(v)).unwrap();
    }
    for &g in alg.generators() {
        let (s, t) = alg.ends(g);
        if m.dim_at(s) > 0 && m.dim_at(t) > 0 {
            writeln!(out, "basis {}: {}", alg.label(g), format_matrix(m.act(g))).unwrap();
        }
    }
    out
}

/// Radical layers of an indecomposable, top first, e.g. `2|1` for a uniserial
/// module with top 2 and socle 1. Vertices within a layer are separated by spaces.
pub fn layer_label(m: &Module) -> String {
    let alg = m.algebra();
    let mut layers = Vec::new();
    let mut cur = m.clone();
    while !cur.is_zero() {
        let top = super::sub::top_dims(&cur);
        let mut names = Vec::new();
        for (v, &k) in top.iter().enumerate() {
            names.extend(std::iter::repeat(alg.vertex_label(v)).take(k));
        }
        layers.push(names.join(" "));
        cur = super::sub::submodule(&cur, &super::sub::radical_graded(&cur)).0;
    }
    if layers.is_empty() {
        return "0".into();
    }
    layers.join("|")
}

/// Labels of summands joined by ` (+) `.
pub fn sum_label(summands: &[Module]) -> String {
    if summands.is_empty() {
        return "0".into();
    }
    summands.iter().map(layer_label).collect::<Vec<_>>().join(" (+) ")
}
