use std::path::PathBuf;
use std::process::Command;

use clap::Parser;
use tangle_cli::{run, Cli, Status};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn tangle(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_tangle")).args(args).output().expect("binary runs");
    (String::from_utf8(out.stdout).expect("utf-8 output"), out.status.code().expect("exit code"))
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(' ')))
        .unwrap_or_else(|| panic!("no `{key}` line in\n{text}"))
}

#[test]
fn analyze_q6() {
    let (out, code) = tangle(&["analyze", &fixture("q6.txt")]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "tau"), "2");
    assert_eq!(field(&out, "nu"), "1");
    assert_eq!(field(&out, "binary"), "true");
    assert_eq!(field(&out, "ideal"), "true");
    assert_eq!(field(&out, "chi"), "2");
    assert_eq!(field(&out, "intersecting"), "2:true 3:false 4:false 5:false");
}

#[test]
fn analyze_t30() {
    let (out, code) = tangle(&["analyze", &fixture("t30.txt")]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "n"), "30");
    assert_eq!(field(&out, "members"), "64");
    assert_eq!(field(&out, "binary"), "true");
    assert_eq!(field(&out, "intersecting"), "2:true 3:true 4:false 5:false");
    assert_eq!(field(&out, "ideal"), "skipped: cap");
}

#[test]
fn parse_errors_exit_one() {
    let empty = std::env::temp_dir().join(format!("tangle-empty-{}.txt", std::process::id()));
    std::fs::write(&empty, "").unwrap();
    let (out, code) = tangle(&["analyze", &empty.display().to_string()]);
    std::fs::remove_file(&empty).ok();
    assert_eq!(code, 1);
    assert!(out.contains("line 1"), "{out}");
    let (_, code) = tangle(&["analyze", &fixture("missing.txt")]);
    assert_eq!(code, 1);
    let (_, code) = tangle(&["analyze"]);
    assert_eq!(code, 1);
}

#[test]
fn petersen_covers() {
    let (out, code) = tangle(&["cover", &fixture("petersen.txt"), "--k", "2"]);
    assert_eq!((out.as_str(), code), ("none\n", 2));
    let (out, code) = tangle(&["cover", &fixture("petersen.txt")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("cycle")).count(), 3);
}

#[test]
fn seven_four_petersen() {
    let (out, code) = tangle(&["seven-four", &fixture("petersen.txt")]);
    assert_eq!(code, 0);
    let cycles: Vec<Vec<usize>> = out
        .lines()
        .filter_map(|l| l.strip_prefix("cycle "))
        .map(|l| l.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect();
    assert_eq!(cycles.len(), 7);
    for e in 1..=15 {
        assert_eq!(cycles.iter().filter(|c| c.contains(&e)).count(), 4, "edge {e}");
    }
    assert_eq!(field(&out, "verified"), "true");
}

#[test]
fn bridges_are_reported() {
    let (out, code) = tangle(&["seven-four", &fixture("bridged.txt")]);
    assert_eq!(code, 1);
    assert!(out.contains("bridge"), "{out}");
    let (out, code) = tangle(&["cover", &fixture("bridged.txt")]);
    assert_eq!(code, 2);
    assert_eq!(field(&out, "bridges"), "4");
}

#[test]
fn demo_pg() {
    let (out, code) = tangle(&["demo", "pg", "3"]);
    assert_eq!(code, 0);
    let cocycles: Vec<&str> = out.lines().filter_map(|l| l.strip_prefix("cocycle ")).collect();
    assert_eq!(cocycles.len(), 8);
    assert_eq!(cocycles.iter().filter(|c| c.matches('1').count() == 4).count(), 7);
    assert_eq!(field(&out, "cuboid-3-wise"), "true");
    let (_, code) = tangle(&["demo", "pg"]);
    assert_eq!(code, 1);
    let (_, code) = tangle(&["demo", "pg", "9"]);
    assert_eq!(code, 1);
}

#[test]
fn demos_run() {
    for d in ["petersen", "q6", "fano", "wagner"] {
        let (out, code) = tangle(&["demo", d]);
        assert_eq!(code, 0, "{d}: {out}");
    }
    let (out, _) = tangle(&["demo", "petersen"]);
    assert_eq!(field(&out, "2-cycle-cover"), "none");
    assert_eq!(field(&out, "t30-4-wise"), "false");
    let (out, _) = tangle(&["demo", "q6"]);
    assert_eq!(field(&out, "blocker-chi"), "3");
}

#[test]
fn pack_and_embed() {
    let (out, code) = tangle(&["pack", &fixture("q6.txt")]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "value"), "2");
    let (_, code) = tangle(&["pack", &fixture("t30.txt")]);
    assert_eq!(code, 1);
    let (out, code) = tangle(&["pack", "--assume-ideal", &fixture("t30.txt")]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "level"), "3");
    assert_eq!(field(&out, "idealness"), "assumed");
    let (out, code) = tangle(&["embed", &fixture("t30.txt")]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "geometry"), "PG(2,2)");
    let (out, code) = tangle(&["embed", "--max-level", "2", &fixture("t30.txt")]);
    assert_eq!((out.as_str(), code), ("none\n", 2));
}

#[test]
fn blocker_round_trips() {
    let (b, code) = tangle(&["blocker", &fixture("q6.txt")]);
    assert_eq!(code, 0);
    let path = std::env::temp_dir().join(format!("tangle-blocker-{}.txt", std::process::id()));
    std::fs::write(&path, &b).unwrap();
    let (bb, _) = tangle(&["blocker", &path.display().to_string()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(bb, std::fs::read_to_string(fixture("q6.txt")).unwrap());
}

#[test]
fn json_is_one_object_per_line() {
    let (out, code) = tangle(&["--json", "analyze", &fixture("q6.txt")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim_end()).unwrap();
    assert_eq!(v["tau"], "2");
    assert_eq!(v["intersecting"]["2"], true);
    let (out, _) = tangle(&["--json", "pack", "--fractional", &fixture("q6.txt")]);
    let v: serde_json::Value = serde_json::from_str(out.trim_end()).unwrap();
    assert_eq!(v["value"], "2");
    assert_eq!(v["weights"][0]["weight"], "1/2");
}

#[test]
fn batch_is_deterministic_across_jobs() {
    let files = [fixture("q6.txt"), fixture("t30.txt"), fixture("q6.txt"), fixture("t30.txt")];
    let args = |jobs: &str| -> Vec<String> {
        let mut a = vec!["--json".to_string(), "--jobs".into(), jobs.into(), "analyze".into()];
        a.extend(files.iter().cloned());
        a
    };
    let serial = Cli::try_parse_from(std::iter::once("tangle".to_string()).chain(args("1"))).unwrap();
    let parallel = Cli::try_parse_from(std::iter::once("tangle".to_string()).chain(args("3"))).unwrap();
    let (a, sa) = run(&serial);
    let (b, sb) = run(&parallel);
    assert_eq!((a.as_str(), sa), (b.as_str(), sb));
    assert_eq!(sa, Status::Ok);
    assert_eq!(a.lines().count(), 4);
    for line in a.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["file"].is_string() && v["report"].is_object());
    }
}

#[test]
fn batch_status_is_worst() {
    let (out, code) = tangle(&["cover", "--k", "2", &fixture("k4.txt"), &fixture("petersen.txt")]);
    assert_eq!(code, 2);
    assert_eq!(out.matches("== ").count(), 2);
}

#[test]
fn caps_are_validated() {
    assert!(Cli::try_parse_from(["tangle", "--jobs", "0", "demo", "q6"]).is_err());
    assert!(Cli::try_parse_from(["tangle", "--vertex-ground", "0", "demo", "q6"]).is_err());
    assert!(Cli::try_parse_from(["tangle", "cover", "--k", "4", "x"]).is_err());
    assert!(Cli::try_parse_from(["tangle", "embed", "--max-level", "4", "x"]).is_err());
    let (out, code) = tangle(&["--vertex-ground", "4", "analyze", &fixture("q6.txt")]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "ideal"), "skipped: cap");
}

#[test]
fn matroid_cover_fano() {
    let (out, code) = tangle(&["matroid-cover", &fixture("fano.txt")]);
    assert_eq!(code, 0);
    assert_eq!(out.trim_end().split(" | ").count(), 3);
}

#[test]
fn fixtures_match_files() {
    for name in ["q6", "t30", "petersen", "wagner", "k4", "fano"] {
        let (out, code) = tangle(&["fixture", name]);
        assert_eq!(code, 0);
        assert_eq!(out, std::fs::read_to_string(fixture(&format!("{name}.txt"))).unwrap(), "{name}");
    }
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("tangle-out-{}.txt", std::process::id()));
    let (out, code) = tangle(&["fixture", "q6", "--output", &path.display().to_string()]);
    assert_eq!((out.as_str(), code), ("", 0));
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(written, std::fs::read_to_string(fixture("q6.txt")).unwrap());
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(tangle(&["cover", "--k", "7", "x"]).1, 1);
    assert_eq!(tangle(&["frobnicate"]).1, 1);
    assert_eq!(tangle(&["--help"]).1, 0);
}
