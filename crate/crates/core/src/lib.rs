pub mod braid;
pub mod coefficients;
pub mod hecke;
pub mod invariants;
pub mod oracles;
pub mod specht;
pub mod trace;
