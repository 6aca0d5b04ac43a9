//! Gröbner bases of binomial edge ideals through admissible paths.

mod buchberger;
mod ideal;
mod matching;
mod paths;

pub use buchberger::{buchberger_oracle, ORACLE_MAX_VERTICES};
pub(crate) use ideal::bits;
pub use ideal::{Monomial, MonomialIdeal, MAX_IDEAL_N};
pub use matching::{
    max_induced_matching, paper_matching, verify_induced_matching, InducedMatching, MATCHING_CAP,
};
pub use paths::{enumerate_admissible_paths, initial_ideal, path_monomial, AdmissiblePath};
