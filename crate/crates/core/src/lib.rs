//! Asymptotic expansions of the partial theta functions
//! `f_b(t) = 2 sum_{n>=0} (-1)^n q^(n^2 + bn)` with `q = (1 - t)/(1 + t)`.
//!
//! Exact coefficients come from [`asymptotics`]; [`numeric`] and
//! [`combinatorics`] provide independent checks, and [`qseries`] verifies the
//! underlying q-series identities formally.

pub mod asymptotics;
pub mod powerseries;
pub mod qseries;
pub mod combinatorics;
pub mod numeric;
pub mod cli;
