//! End-to-end acceptance checks live in `tests/acceptance.rs`; this crate
//! has no library code.
