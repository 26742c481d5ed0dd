#![allow(dead_code)]

use std::path::PathBuf;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn fixture_str(name: &str) -> String {
    fixture(name).to_str().expect("utf-8 path").to_owned()
}

/// Runs the command line with `tanner` prepended.
pub fn tanner(args: &[&str]) -> (i32, String) {
    tanner::cli::run(std::iter::once("tanner").chain(args.iter().copied()))
}
