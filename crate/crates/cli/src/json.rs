use nchess_core::inertia::Inertia;
use nchess_core::ncparse::print;
use nchess_core::{Matrix, NcPoly, Rational, Ring};
use serde_json::{json, Value};

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn matrix(m: &Matrix<Rational>) -> Value {
    Value::Array((0..m.rows()).map(|r| vector(m.row_slice(r))).collect())
}

pub fn poly<S: Ring>(p: &NcPoly<S>) -> Value {
    Value::String(print(p))
}

pub fn poly_matrix<S: Ring>(m: &Matrix<NcPoly<S>>) -> Value {
    Value::Array((0..m.rows()).map(|r| Value::Array(m.row_slice(r).iter().map(poly).collect())).collect())
}

pub fn inertia(i: &Inertia) -> Value {
    json!({ "plus": i.plus, "minus": i.minus, "zero": i.zero })
}

pub fn matrix_text(m: &Matrix<Rational>) -> Vec<String> {
    let cells: Vec<Vec<String>> = (0..m.rows()).map(|r| m.row_slice(r).iter().map(|c| c.to_string()).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|row| format!("  [{}]", row.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join(" ")))
        .collect()
}
