//! Exact monomial, polynomial and truncated-series arithmetic over the
//! variables `Y_{i,aq^s}`, `A_{i,aq^s}`, `Ψ_{i,aq^s}` and `e^β`.

pub mod convert;
pub mod expmap;
pub mod monomial;
pub mod poly;
pub mod series;

pub use convert::{
    a_expand_to_y, a_var_to_y, embed_y_as_lweight, usual_char_ca, usual_char_y, weyl_act_char,
    wt_degree, y_ratio_to_a, WtDegree,
};
pub use expmap::ExpMap;
pub use monomial::{
    CAMonomial, LWeightMonomial, Monomial, SpectralIndex, WeightMonomial, YMonomial,
};
pub use poly::SparsePoly;
pub use series::{graded_divide, GradedSeries};
