use std::process::{Command, Output};

use serde_json::Value;

fn mstd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mstd"))
        .args(args)
        .env_remove("MSTD_FORMAT")
        .env_remove("MSTD_THREADS")
        .output()
        .expect("binary runs")
}

fn json_lines(out: &Output) -> Vec<Value> {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON record per line"))
        .collect()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Double-loop MSTD count over `Z/n`.
fn naive_cyclic_mstd(n: usize) -> usize {
    (0u32..1 << n)
        .filter(|&m| {
            let a: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
            let (mut sums, mut diffs) = (vec![false; n], vec![false; n]);
            for &x in &a {
                for &y in &a {
                    sums[(x + y) % n] = true;
                    diffs[(x + n - y) % n] = true;
                }
            }
            sums.iter().filter(|&&b| b).count() > diffs.iter().filter(|&&b| b).count()
        })
        .count()
}

#[test]
fn count_matches_double_loop() {
    let rec = &json_lines(&mstd(&["count", "-g", "12"]))[0];
    assert_eq!(rec["count"], naive_cyclic_mstd(12).to_string());
    assert_eq!(rec["total_subsets"], "4096");
    let rec = &json_lines(&mstd(&["count", "-g", "8"]))[0];
    assert_eq!(rec["count"], "0");
}

#[test]
fn count_is_thread_independent() {
    let a = &json_lines(&mstd(&["count", "-g", "6,2", "--threads", "4"]))[0];
    let b = &json_lines(&mstd(&["count", "-g", "6,2", "--threads", "1"]))[0];
    assert_eq!(a["count"], b["count"]);
    assert_eq!(a["thread_count"], 4);
}

#[test]
fn count_refuses_past_cap() {
    let out = mstd(&["count", "-g", "40"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("refusing"));
    assert!(out.stdout.is_empty());
}

#[test]
fn bad_group_is_an_error() {
    let out = mstd(&["count", "-g", "1,2"]);
    assert!(!out.status.success());
    assert!(!out.stderr.is_empty());
}

#[test]
fn bound_reports() {
    let r = &json_lines(&mstd(&["bound", "-g", "8"]))[0];
    assert_eq!(r["upper"], "224");
    assert_eq!(r["asymptotic"], "81");
    assert_eq!(r["parity"], "even");
    assert!(r["hypothesis"]["even_density_ok"].is_boolean());
    let rs = json_lines(&mstd(&["bound", "-g", "9", "-g", "9,3"]));
    assert_eq!(rs.len(), 2);
    assert!(rs.iter().all(|r| r["parity"] == "odd"));
    assert_eq!(rs[0]["upper"], "292");
    assert!(rs[1]["hypothesis"]["small_order_count"].is_number());
}

#[test]
fn bound_with_exact_count_sandwiches() {
    let r = &json_lines(&mstd(&["bound", "-g", "12", "--exact"]))[0];
    assert_eq!(r["exact"], "24");
    assert_eq!(r["sandwich"], true);
}

#[test]
fn forbid_figure_example() {
    let r = &json_lines(&mstd(&["forbid", "-g", "8", "-d", "1", "-s", "4", "--oracle"]))[0];
    assert_eq!(r["index"], "17");
    assert_eq!(r["oracle"], "17");
    assert_eq!(r["match"], true);
    assert_eq!(r["looped_vertices"], 2);
}

#[test]
fn forbid_prism_and_ladder() {
    let r = &json_lines(&mstd(&["forbid", "-g", "9", "-d", "3", "-s", "0"]))[0];
    assert_eq!(r["prisms"], 1);
    assert_eq!(r["ladders"], 1);
    assert_eq!(r["index"], "39");
}

#[test]
fn forbid_order_two_difference() {
    // four disjoint edges: 3^4
    let r = &json_lines(&mstd(&["forbid", "-g", "8", "-d", "4"]))[0];
    assert_eq!(r["index"], "81");
    assert_eq!(r["components"][0]["multiplicity"], 4);
}

#[test]
fn forbid_digit_notation() {
    // (1,0) and (1,2) in Z/2 x Z/4
    let r = &json_lines(&mstd(&["forbid", "-g", "2,4", "-d", "1:0,1:2", "--oracle"]))[0];
    assert_eq!(r["components"][0]["kind"], "C_4");
    assert_eq!(r["components"][0]["multiplicity"], 2);
    assert_eq!(r["index"], "49");
    assert_eq!(r["match"], true);
}

#[test]
fn forbid_edge_list() {
    let text = stdout(&mstd(&["forbid", "-g", "8", "-d", "1", "-s", "4", "--edges"]));
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines.contains(&"2 2") && lines.contains(&"6 6"));
    assert!(lines.contains(&"0 4") && lines.contains(&"1 3") && lines.contains(&"5 7"));
    assert_eq!(lines.len(), 8 + 3 + 2);
}

#[test]
fn verify_passes_and_sets_exit_code() {
    let out = mstd(&["verify", "--max-order", "10", "--format", "json"]);
    let recs = json_lines(&out);
    assert!(recs.len() > 20);
    assert!(recs.iter().all(|r| r["passed"] == true), "{recs:?}");
    let out = mstd(&["verify", "--only", "no-such-check"]);
    assert!(!out.status.success());
}

#[test]
fn verify_only_selects_checks() {
    let out = mstd(&["verify", "--only", "containment,appendix", "--max-order", "12", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "status,check,cases,detail");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("PASS,containment,"));
    assert!(lines[2].starts_with("PASS,appendix,"));
}

#[test]
fn table_csv_is_sorted_with_ratio_column() {
    let text = stdout(&mstd(&["table", "--family", "cyclic-even", "--min", "8", "--max", "16"]));
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert!(header.contains(&"ratio") && header.contains(&"exact") && header.contains(&"ratio_cap"));
    let orders: Vec<usize> = lines.map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
    assert_eq!(orders, vec![8, 10, 12, 14, 16]);
}

#[test]
fn table_blank_exact_past_cap() {
    let text = stdout(&mstd(&[
        "table", "--family", "cyclic-odd", "--min", "9", "--max", "13", "--exact-cap", "10",
    ]));
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[0].starts_with("9,9,odd,0,0,"));
    assert!(rows[1].starts_with("11,11,odd,0,,"));
}

#[test]
fn env_overrides_format() {
    let out = Command::new(env!("CARGO_BIN_EXE_mstd"))
        .args(["count", "-g", "6"])
        .env("MSTD_FORMAT", "csv")
        .output()
        .unwrap();
    assert!(stdout(&out).starts_with("group,order,total_subsets,count"));
}
