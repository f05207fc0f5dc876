//! The asymptotic coefficients v_n of V(z) = log z + ψ(z + 1/z) by every
//! available route, with the polynomial and combinatorial kernels behind
//! the two Laurent-series pipelines.

mod apoly;
mod bell;
mod cross;
mod faa;
mod hoppe;
mod methods;
mod recurrence;

pub use apoly::{
    a_poly_check, a_poly_explicit, a_poly_hypergeometric, a_poly_recurrence, nested_identity_check,
    nested_rhs_j0, nested_sum, polynomial_v_check,
};
pub use bell::{
    bell_der_check, bell_der_closed_form, bell_der_sweep, bell_identity_checks, bell_partial,
    bell_partial_by_partitions, lah_binomial, BellArgs,
};
pub use cross::{cross_check_all, v_by, VMethod, VMethodResult};
pub use faa::{ik_series, s_power, v_faa_di_bruno, w_derivative};
pub use hoppe::{
    fk_at_g, g_power_derivative, hoppe_coefficient_sum, hoppe_fk_coeff_check, hoppe_sum, p_nk,
    psi_expansion_check, psi_j_at_h, psi_j_direct, v_hoppe,
};
pub use methods::{v_cheb_umbral, v_parity, v_series, v_umbral, v_zagier_eval};
pub use recurrence::{
    f_half_sum, f_sum, f_sum_check, legendre_backward, legendre_forward, legendre_inversion_check,
    z_mod2_period_check, z_recurrence, z_recurrence_check,
};
