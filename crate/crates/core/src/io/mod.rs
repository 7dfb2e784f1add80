//! Canonical rational strings and the JSON file formats for groups,
//! matrices, graphs of groups and group expressions.

mod files;
mod spec;

pub use files::{
    element_ref_to_spec, expr_to_spec, graph_to_spec, group_to_spec, load_expr, load_graph,
    load_group, load_matrix, parse_expr, parse_graph, parse_group, parse_matrix, ExprFile, Loader,
};
pub use spec::{
    CentralizerSpec, CoeffTerm, EdgeFileSpec, ElemSpec, ElementRefSpec, ExprFileSpec, ExprSpec,
    GraphRef, GraphSpec, GroupRef, GroupSpec, MarkSpec, MatrixSpec, OpaqueMarkSpec, SymEdgeSpec,
    SymMarkSpec, TermSpec,
};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// `p/q` in lowest terms with `q > 0`, including `0/1` and `n/1`.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `p` or `p/q` with optional sign; rejects `q = 0`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let int = |x: &str| {
        x.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("not a rational: {s:?}")))
    };
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (int(n)?, int(d)?),
        None => (int(t)?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}
