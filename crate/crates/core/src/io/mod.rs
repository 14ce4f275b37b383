//! Expression parsing, serialization and the on-disk result cache.

pub mod cache;
pub mod parse;
pub mod serialize;

pub use cache::{cache_key, Cache, CACHE_ENV};
pub use parse::{
    parse_ast, parse_expr, parse_monomial, parse_poly, ExprAst, Flavor, FromAtoms, RingValue,
};
pub use serialize::{
    render_poly, render_series, series_json, series_latex, series_text, Format, Render,
};
