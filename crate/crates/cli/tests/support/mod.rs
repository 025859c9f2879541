//! Generators and independent oracles shared by the CLI-level test suites.

#![allow(dead_code)]

pub mod gen;
pub mod lattice;
pub mod univariate;

use std::fmt::Display;

/// Run one acceptance criterion, print a single PASS/FAIL line and fail the
/// test on error.
pub fn report(name: &str, check: impl FnOnce() -> Result<String, String>) {
    match check() {
        Ok(detail) => println!("[PASS] {name}: {detail}"),
        Err(why) => {
            println!("[FAIL] {name}: {why}");
            panic!("{name} failed: {why}");
        }
    }
}

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn ok<T, E: Display>(r: Result<T, E>, ctx: &str) -> Result<T, String> {
    r.map_err(|e| format!("{ctx}: {e}"))
}
