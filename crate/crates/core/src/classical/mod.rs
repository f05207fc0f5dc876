//! Bernoulli numbers and polynomials, their classical congruences, and
//! Chebyshev polynomials.

mod bernoulli;
mod chebyshev;
mod congruence;
mod poly;

pub use bernoulli::{bernoulli_number, bernoulli_poly, bernoulli_prefix};
pub use chebyshev::{
    chebt_doubling_check, chebu_halfinteger_check, chebyshev_t, chebyshev_u, tshift_sum,
};
pub use congruence::{
    bernoulli_mod8, bernoulli_mod8_exact, classical_congruence_sweep, proof_scan_mod64,
    voronoi_check, voronoi_sum_mod64, vsc_congruence_check, vsc_denominator,
};
pub use poly::RatPoly;
