//! Exact oracles: exhaustive coloring search, balanced sets, and the
//! fractional balanced chromatic number as a rational linear program.

mod balanced;
mod certificate;
mod lp;
mod search;

pub use balanced::{
    beta, enumerate_maximal_balanced_sets, enumerate_maximal_balanced_sets_with_cap, lp_cap, BalancedSetFamily,
    DEFAULT_LP_CAP,
};
pub use certificate::{realize_pq, Certificate};
pub use lp::{chi_fb_exact, chi_fb_exact_with_cap, solve_packing, ChiFb, PackingSolution};
pub use search::{search_coloring, search_coloring_with, SearchOptions};
