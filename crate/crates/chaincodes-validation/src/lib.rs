//! Acceptance checks for the chaincodes workspace live in `tests/acceptance.rs`.
