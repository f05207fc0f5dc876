//! Truncated power and Laurent series over the rationals and over Z/2^k.

mod checks;
mod expand;
mod laurent;
mod modseries;
mod period;
mod trunc;

pub use checks::{
    even_genfun_check, four_n_bstar_mod8, mod8_genfun_check, prop22_check, prop22_lhs, prop22_rhs,
    zagier_genfun_check, EVEN_REDERIVED, EVEN_STATED,
};
pub use expand::{expand_v, expand_zagier_genfun};
pub use laurent::LaurentSeries;
pub use modseries::{ratfunc_expand, ratfunc_expand_mod2k, ModSeries};
pub use period::detect_period;
pub use trunc::TruncSeries;
