//! End-to-end tests for the `gds` binary: file in, bytes out, exit codes.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn gds(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gds"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &Path, name: &str, content: &str) {
    fs::write(dir.join(name), content).unwrap();
}

#[test]
fn color_and_descents() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    write(dir, "p3.txt", "3 2\n1 2 3\n1 2\n2 3\n");

    let out = gds(&["color", "--graph", "p3.txt"], dir);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 2 1\n");

    write(dir, "c.txt", "2 1 2\n");
    let out = gds(&["descents", "--graph", "p3.txt", "--coloring", "c.txt"], dir);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 1 2 2\n");

    // A pre-coloring that conflicts with itself: coloring printed, exit 1.
    write(dir, "bad.txt", "1 1\n2 1\n");
    let out = gds(&["color", "--graph", "p3.txt", "--defining", "bad.txt"], dir);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn gdn_subcommands_and_exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    // C6 processed as v1 v4 v2 v5 v3 v6 has defining number 1.
    write(dir, "c6.txt", "6 6\n1 4 2 5 3 6\n1 2\n2 3\n3 4\n4 5\n5 6\n1 6\n");
    let out = gds(&["gdn", "--graph", "c6.txt"], dir);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("1"));
    assert_eq!(text.lines().count(), 2);

    let out = gds(&["forest-gdn", "--graph", "c6.txt"], dir);
    assert_eq!(out.status.code(), Some(2)); // cyclic input

    write(dir, "coloring.txt", "1 2 1 2 1 2\n");
    let out = gds(&["gdn-fixed", "--graph", "c6.txt", "--coloring", "coloring.txt"], dir);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().next(), Some("1"));

    // A clique beyond the coloring-enumeration guard exits 3.
    let mut k13 = String::from("13 78\n1 2 3 4 5 6 7 8 9 10 11 12 13\n");
    for u in 1..=13 {
        for v in u + 1..=13 {
            k13.push_str(&format!("{u} {v}\n"));
        }
    }
    write(dir, "k13.txt", &k13);
    let out = gds(&["gdn", "--graph", "k13.txt"], dir);
    assert_eq!(out.status.code(), Some(3));

    // Malformed files exit 2.
    write(dir, "broken.txt", "2 1\n1 2\n");
    let out = gds(&["gdn", "--graph", "broken.txt"], dir);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn forest_gdn_on_a_tree() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    // Leaves-first star: defining number 0.
    write(dir, "star.txt", "4 3\n1 2 3 4\n1 4\n2 4\n3 4\n");
    let out = gds(&["forest-gdn", "--graph", "star.txt"], dir);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn reduce_vc_emits_parseable_instances() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    write(dir, "p3.txt", "3 2\n1 2 3\n1 2\n2 3\n");
    let out = gds(
        &[
            "reduce-vc",
            "--graph",
            "p3.txt",
            "--construction",
            "incidence",
            "--out-graph",
            "inst.txt",
            "--out-coloring",
            "inst-coloring.txt",
            "--out-map",
            "inst-map.txt",
        ],
        dir,
    );
    assert!(out.status.success());
    // The emitted instance feeds straight back into gdn-fixed.
    let out = gds(
        &["gdn-fixed", "--graph", "inst.txt", "--coloring", "inst-coloring.txt"],
        dir,
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().next(), Some("1")); // min cover of P3

    let out = gds(&["gdn", "--graph", "inst.txt"], dir);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().next(), Some("1"));

    let map = fs::read_to_string(dir.join("inst-map.txt")).unwrap();
    assert!(map.lines().count() == 10); // 2*(3 vertices + 2 edges)
}

#[test]
fn latin_subcommands() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    write(dir, "l3.txt", "3\n1 2 3\n2 3 1\n3 1 2\n");

    let out = gds(&["latin-descents", "--square", "l3.txt"], dir);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2 2 3  2 3 1  3 2 1\n");

    let out = gds(&["latin-gds", "--square", "l3.txt", "--exact"], dir);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("1"));

    // Cover route: a minimum cover of the entry graph is {(2,3)} -> cell (2,3;1).
    let out = gds(&["latin-gds", "--square", "l3.txt", "--entries"], dir);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n3\n2 3 1\n");
    // The emitted defining set verifies against the square.
    write(dir, "cover-gds.txt", "3\n2 3 1\n");
    let out = gds(&["latin-verify", "--square", "l3.txt", "--defining", "cover-gds.txt"], dir);
    assert!(out.status.success());

    write(dir, "d.txt", "3\n2 2 3\n");
    let out = gds(&["latin-verify", "--square", "l3.txt", "--defining", "d.txt"], dir);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "true\n");

    write(dir, "empty3.txt", "3\n");
    let out = gds(&["latin-verify", "--square", "l3.txt", "--defining", "empty3.txt"], dir);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "false\n");

    let out = gds(&["latin-complete", "--partial", "empty3.txt"], dir);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "2 3\n");

    let out = gds(&["latin-complete", "--partial", "d.txt"], dir);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3\n1 2 3\n2 3 1\n3 1 2\n");

    let out = gds(&["latin-bound", "--square", "l3.txt", "--exact"], dir);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("cover=1"));
    assert!(text.contains("bound=7.1363"));
    assert!(text.contains("holds=true"));

    let out = gds(&["latin-g", "--n", "3"], dir);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");

    let out = gds(&["latin-g", "--n", "9"], dir);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn latin_random_is_reproducible() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    let a = gds(&["latin-random", "--n", "5", "--seed", "7"], dir);
    let b = gds(&["latin-random", "--n", "5", "--seed", "7"], dir);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let c = gds(&["latin-random", "--n", "5", "--seed", "8"], dir);
    assert_ne!(stdout(&a), stdout(&c));
}

#[test]
fn share_deal_reconstruct_audit() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    write(dir, "l3.txt", "3\n1 2 3\n2 3 1\n3 1 2\n");
    write(dir, "access.txt", "participants alice bob carol\nset s1 alice bob\nset s2 carol\n");

    let out = gds(
        &[
            "share-deal",
            "--square",
            "l3.txt",
            "--access",
            "access.txt",
            "--seed",
            "0",
            "--out-dir",
            "shares",
        ],
        dir,
    );
    assert!(out.status.success());
    let listed: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(listed.len(), 3); // alice+bob for s1, carol for s2

    let rerun = gds(
        &[
            "share-deal",
            "--square",
            "l3.txt",
            "--access",
            "access.txt",
            "--seed",
            "0",
            "--out-dir",
            "shares2",
        ],
        dir,
    );
    assert!(rerun.status.success());
    for name in ["share-s1-alice.txt", "share-s1-bob.txt", "share-s2-carol.txt"] {
        let a = fs::read_to_string(dir.join("shares").join(name)).unwrap();
        let b = fs::read_to_string(dir.join("shares2").join(name)).unwrap();
        assert_eq!(a, b, "share files must be seed-deterministic");
    }

    let out = gds(
        &["share-reconstruct", "shares/share-s1-alice.txt", "shares/share-s1-bob.txt"],
        dir,
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3\n1 2 3\n2 3 1\n3 1 2\n");

    // Mixing set ids is rejected.
    let out = gds(
        &["share-reconstruct", "shares/share-s1-alice.txt", "shares/share-s2-carol.txt"],
        dir,
    );
    assert_eq!(out.status.code(), Some(2));

    let out = gds(
        &["share-audit", "--square", "l3.txt", "--access", "access.txt", "--shares", "shares"],
        dir,
    );
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("set s1 size=2 reconstruct=ok"));
    assert!(text.contains("trivial=false"));

    // Deleting a share makes the audit fail with that set id.
    fs::remove_file(dir.join("shares").join("share-s1-bob.txt")).unwrap();
    let out = gds(
        &["share-audit", "--square", "l3.txt", "--access", "access.txt", "--shares", "shares"],
        dir,
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("s1"));
}

#[test]
fn usage_errors_exit_two() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    let out = gds(&["latin-verify", "--square", "missing.txt", "--defining", "x.txt"], dir);
    assert_eq!(out.status.code(), Some(2));
    let out = gds(&["no-such-command"], dir);
    assert_eq!(out.status.code(), Some(2));
}
