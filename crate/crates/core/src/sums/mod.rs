//! Exact evaluators for truncated multiple harmonic sums and their variants.

pub mod chain;
pub mod difference;
pub mod kawashima;
pub mod mzv;
pub mod scalar;
pub mod series;

pub use difference::{difference_check, f_g_h, f_n, g_n, h_n, h_via_f, h_via_g};
pub use kawashima::{
    connected_sum, connected_sum_up, connector, f_kawashima, g_kawashima, g_series, zeta_dia_param,
    Connector, SecondFlag,
};
pub use mzv::{
    eval_z_dia, eval_z_h, zeta_dia, zeta_dia_flat, zeta_dia_star, zeta_flat, zeta_flat_tworow, zeta_float,
    zeta_n, zeta_tworow,
};
pub use scalar::Scalar;
pub use series::TruncatedSeries;

/// Default non-integer sample points for `t`.
pub fn default_t_samples() -> alloc::vec::Vec<crate::algebra::Rational> {
    use crate::algebra::rat;
    alloc::vec![rat(7, 3), rat(-5, 2), rat(13, 7), rat(22, 9), rat(-31, 8)]
}
