//! Exact counts of dormant indigenous bundles on generic curves in odd
//! characteristic, and the identities that tie them to Quot-scheme degrees,
//! Verlinde dimensions and root-of-unity sums.

pub mod cache;
pub mod cli;
pub mod cyclotomic;
pub mod exact;
pub mod formulas;
pub mod golden;
pub mod primes;
pub mod trig;
pub mod validate;
