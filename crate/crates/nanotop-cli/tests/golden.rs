//! Byte-exact golden-file checks for every subcommand and both formats.
//!
//! Each golden rendering was frozen after its values were derived by hand;
//! any drift in computation, ordering, or formatting fails here.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .ancestors()
        .nth(2)
        .expect("crate lives two levels under the workspace root")
        .to_path_buf()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nanotop"))
        .args(args)
        .current_dir(workspace_root())
        .output()
        .expect("binary runs")
}

fn assert_golden(args: &[&str], golden: &str) {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} exited {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(golden);
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing golden {}: {e}", path.display()));
    let actual = String::from_utf8(out.stdout).expect("output is UTF-8");
    assert_eq!(actual, expected, "output drifted from {golden}");
}

#[test]
fn space_text_single_proper_open() {
    assert_golden(
        &["space", "fixtures/space_single_proper_open.json"],
        "space_single_proper_open.txt",
    );
}

#[test]
fn space_text_with_h_family() {
    assert_golden(
        &["space", "fixtures/space_point_open.json", "--show-hfamily"],
        "space_point_open_hfamily.txt",
    );
}

#[test]
fn space_json_two_proper_opens() {
    assert_golden(
        &["space", "fixtures/space_two_proper_opens.json", "--format", "json"],
        "space_two_proper_opens.json",
    );
}

#[test]
fn set_text_all_operators() {
    assert_golden(
        &["set", "fixtures/space_point_open.json", "b,c"],
        "set_point_open_bc.txt",
    );
}

#[test]
fn set_json_all_operators() {
    assert_golden(
        &["set", "fixtures/space_point_open.json", "b,c", "--format", "json"],
        "set_point_open_bc.json",
    );
}

#[test]
fn map_text_with_conditions() {
    assert_golden(
        &["map", "fixtures/map_relabeling_h_homeomorphism.json", "--conditions"],
        "map_relabeling_conditions.txt",
    );
}

#[test]
fn map_json_with_conditions() {
    assert_golden(
        &[
            "map",
            "fixtures/map_relabeling_h_homeomorphism.json",
            "--conditions",
            "--format",
            "json",
        ],
        "map_relabeling_conditions.json",
    );
}

#[test]
fn map_text_h_contra() {
    assert_golden(&["map", "fixtures/map_h_contra_not_contra.json"], "map_h_contra.txt");
}

#[test]
fn verify_json_small_sizes() {
    assert_golden(
        &["verify", "--max-space-size", "2", "--max-map-size", "2", "--format", "json"],
        "verify_small.json",
    );
}

#[test]
fn mine_text_finds_converse_witness() {
    assert_golden(
        &["mine", "h-continuous=>continuous", "2", "2"],
        "mine_h_continuous_converse.txt",
    );
}

#[test]
fn mine_json_finds_converse_witness() {
    assert_golden(
        &["mine", "h-continuous=>continuous", "2", "2", "--format", "json"],
        "mine_h_continuous_converse.json",
    );
}

#[test]
fn mine_text_forward_theorem_reports_none() {
    assert_golden(
        &["mine", "continuous=>h-continuous", "2", "2"],
        "mine_forward_none.txt",
    );
}
