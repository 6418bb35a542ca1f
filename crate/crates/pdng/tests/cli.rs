//! End-to-end tests of the binary: exit codes, strict/tolerant ingestion,
//! determinism under worker counts, format agreement, and the documented
//! command examples.

use pdng::graph::VertexSet;
use pdng::graph6::parse_graph6;
use pdng::solvers::{gamma_p, is_power_dominating, zf_closure};
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn pdng(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pdng"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn exit_codes_cover_usage_and_parse_errors() {
    assert_eq!(pdng(&["--definitely-bogus"]).status.code(), Some(1));
    assert_eq!(pdng(&["compute"]).status.code(), Some(1), "missing input source");
    assert_eq!(
        pdng(&["compute", "--graph6", "A_", "--file", "x"]).status.code(),
        Some(1),
        "two input sources"
    );
    assert_eq!(pdng(&["--help"]).status.code(), Some(0));
    assert_eq!(pdng(&["compute", "--graph6", "A_"]).status.code(), Some(0));

    let bad_literal = pdng(&["compute", "--graph6", "B!"]);
    assert_eq!(bad_literal.status.code(), Some(2), "malformed graph6 literal");

    let fig3 = pdng(&["reconstruct", "fig3"]);
    assert_eq!(fig3.status.code(), Some(1), "fig3 without a catalog");
    assert!(stderr_str(&fig3).contains("geng 11"), "actionable hint expected");

    let too_big = pdng(&["ngcheck", "--enumerate", "99"]);
    assert_eq!(too_big.status.code(), Some(1));

    let bad_find = pdng(&["ngcheck", "--enumerate", "5", "--find", "frob=1"]);
    assert_eq!(bad_find.status.code(), Some(1));

    let bad_filter = pdng(&["ngcheck", "--enumerate", "5", "--filter", "nonsense"]);
    assert_eq!(bad_filter.status.code(), Some(1));
    assert!(
        stderr_str(&bad_filter).contains("all-components-ge3"),
        "error should list the known flags"
    );

    let bad_params = pdng(&["compute", "--graph6", "A_", "--params", "qq"]);
    assert_eq!(bad_params.status.code(), Some(1));
}

#[test]
fn strict_and_tolerant_file_ingestion() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("mixed.g6");
    std::fs::write(&path, "Bw\nB!\nBg\n").expect("writable");
    let path = path.to_str().expect("utf-8 path");

    let tolerant = pdng(&["compute", "--file", path]);
    assert_eq!(tolerant.status.code(), Some(0));
    assert_eq!(stdout_str(&tolerant).lines().count(), 2, "two good lines survive");
    assert!(stderr_str(&tolerant).contains("skipped 1 malformed"));

    let strict = pdng(&["compute", "--file", path, "--strict"]);
    assert_eq!(strict.status.code(), Some(2));

    let ng_tolerant = pdng(&["ngcheck", "--file", path]);
    assert_eq!(ng_tolerant.status.code(), Some(0));
    assert!(stderr_str(&ng_tolerant).contains("skipped 1 malformed"));

    let ng_strict = pdng(&["ngcheck", "--file", path, "--strict"]);
    assert_eq!(ng_strict.status.code(), Some(2));
}

#[test]
fn worker_count_never_changes_output_bytes() {
    let one = pdng(&["ngcheck", "--enumerate", "7", "--jobs", "1"]);
    let four = pdng(&["ngcheck", "--enumerate", "7", "--jobs", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(four.status.code(), Some(0));
    assert!(!one.stdout.is_empty());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn csv_and_jsonl_agree_on_shared_fields() {
    let jsonl = pdng(&["ngcheck", "--enumerate", "5", "--params", "g,z"]);
    let csv = pdng(&["ngcheck", "--enumerate", "5", "--params", "g,z", "--format", "csv"]);
    assert_eq!(jsonl.status.code(), Some(0));
    assert_eq!(csv.status.code(), Some(0));

    let json_lines: Vec<serde_json::Value> = stdout_str(&jsonl)
        .lines()
        .map(|l| serde_json::from_str(l).expect("valid JSON"))
        .collect();
    let csv_text = stdout_str(&csv);
    let mut csv_lines = csv_text.lines();
    assert_eq!(
        csv_lines.next(),
        Some("n,graph6,p,p_bar,sum,prod,g,g_bar,z,z_bar,flags")
    );
    let csv_rows: Vec<Vec<&str>> = csv_lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(json_lines.len(), 34, "all order-5 classes emitted");
    assert_eq!(csv_rows.len(), json_lines.len());

    for (j, row) in json_lines.iter().zip(&csv_rows) {
        assert_eq!(j["n"].as_u64().expect("n"), row[0].parse::<u64>().expect("n"));
        assert_eq!(j["graph6"].as_str().expect("graph6"), row[1]);
        for (key, col) in [("p", 2), ("p_bar", 3), ("sum", 4), ("prod", 5), ("g", 6), ("g_bar", 7), ("z", 8), ("z_bar", 9)] {
            assert_eq!(
                j[key].as_u64().expect(key),
                row[col].parse::<u64>().expect(key),
                "{key} differs on {}",
                row[1]
            );
        }
        let json_flags: Vec<&str> = j["flags"]
            .as_array()
            .expect("flags array")
            .iter()
            .map(|f| f.as_str().expect("flag string"))
            .collect();
        assert_eq!(json_flags.join(";"), row[10], "flags differ on {}", row[1]);
    }
}

#[test]
fn compute_witnesses_verify_against_the_library() {
    let out = pdng(&["compute", "--enumerate", "5", "--params", "g,z"]);
    assert_eq!(out.status.code(), Some(0));
    for line in stdout_str(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("valid JSON");
        let g = parse_graph6(v["graph6"].as_str().expect("graph6"), true).expect("parses");
        let set = |key: &str| {
            VertexSet::from_iter(
                v[key]
                    .as_array()
                    .expect("witness array")
                    .iter()
                    .map(|x| x.as_u64().expect("vertex") as usize),
            )
        };
        assert_eq!(v["p"].as_u64().expect("p") as usize, gamma_p(&g).value);
        assert!(is_power_dominating(&g, set("p_witness")).expect("in range"));
        assert_eq!(
            g.closed_neighborhood(set("g_witness")).expect("in range"),
            g.vertices()
        );
        assert_eq!(zf_closure(&g, set("z_witness")).expect("in range"), g.vertices());
    }
}

#[test]
fn summary_reports_classes_and_no_red_alerts() {
    let out = pdng(&[
        "ngcheck",
        "--enumerate",
        "6",
        "--filter",
        "all-components-ge3",
        "--format",
        "summary",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("graphs: 156 parsed"), "summary head:\n{text}");
    assert!(text.contains("red alerts: none"), "alert line:\n{text}");
    assert!(text.contains("all-components-ge3"), "class table:\n{text}");
    assert!(text.contains("no graph above the bound"), "conjecture probe:\n{text}");
    let class_line = text
        .lines()
        .find(|l| l.trim_start().starts_with("all-components-ge3"))
        .expect("class line present");
    assert!(class_line.contains("sum 2..4"), "order-6 extremes: {class_line}");
}

#[test]
fn documented_family_examples_hold() {
    let necklace = pdng(&["compute", "--family", "necklace:3"]);
    assert_eq!(necklace.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(stdout_str(&necklace).trim()).expect("valid JSON");
    assert_eq!(v["p"], 3);
    assert_eq!(v["n"], 12);

    let comb = pdng(&["compute", "--family", "comb:9", "--params", "gp"]);
    let v: serde_json::Value = serde_json::from_str(stdout_str(&comb).trim()).expect("valid JSON");
    assert_eq!(v["p"], 3);
    let spine_only = v["p_witness"]
        .as_array()
        .expect("witness")
        .iter()
        .all(|x| x.as_u64().expect("vertex") % 2 == 0);
    assert!(spine_only, "comb witness should sit on the spine: {}", v["p_witness"]);

    let k2 = pdng(&["compute", "--graph6", "A_", "--params", "gp,g,z"]);
    let v: serde_json::Value = serde_json::from_str(stdout_str(&k2).trim()).expect("valid JSON");
    assert_eq!((v["p"].as_u64(), v["g"].as_u64(), v["z"].as_u64()), (Some(1), Some(1), Some(1)));

    let rk3 = pdng(&["ngcheck", "--family", "rk3:4", "--format", "csv"]);
    let text = stdout_str(&rk3);
    let row: Vec<&str> = text.lines().nth(1).expect("one data row").split(',').collect();
    assert_eq!(row[4], "6", "sum column for the four-triangle union");

    let attainers = pdng(&[
        "ngcheck",
        "--enumerate",
        "8",
        "--filter",
        "both-connected",
        "--find",
        "sum=4",
        "--format",
        "csv",
    ]);
    assert_eq!(attainers.status.code(), Some(0));
    let text = stdout_str(&attainers);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert!(!rows.is_empty(), "at least one order-8 both-connected sum-4 attainer");
    for row in rows {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols[4], "4", "sum filter respected: {row}");
        assert!(cols[10].split(';').any(|f| f == "both-connected"), "flag present: {row}");
    }
}

#[test]
fn fig3_filter_accepts_the_open_twin_graph_only() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("order11.g6");
    // First line: open twin pairs with independent triples. Second line: the
    // closed-twin misreading, whose value drops to 2.
    std::fs::write(&path, "JFz_?AB_sE?\nJN~w?EB_{F_\n").expect("writable");
    let out = pdng(&["reconstruct", "fig3", "--file", path.to_str().expect("utf-8")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(
        text.lines().any(|l| l.starts_with("JFz_?AB_sE?")),
        "expected match line:\n{text}"
    );
    assert!(
        !text.lines().any(|l| l.starts_with("JN~w?EB_{F_")),
        "closed-twin variant must not match:\n{text}"
    );
    assert!(text.contains("1 match(es) among 2 graphs"), "tally line:\n{text}");
    assert!(text.contains("no uniqueness claim"), "honesty line:\n{text}");
}

#[test]
fn reconstructions_match_published_census() {
    let s4k3 = pdng(&["reconstruct", "s4k3"]);
    assert_eq!(s4k3.status.code(), Some(0), "stderr: {}", stderr_str(&s4k3));
    let text = stdout_str(&s4k3);
    assert!(text.contains("unique; gamma=3 and gamma_p=2 confirmed"), "{text}");

    let cubic = pdng(&["reconstruct", "cubic-diam2"]);
    assert_eq!(cubic.status.code(), Some(0), "stderr: {}", stderr_str(&cubic));
    let text = stdout_str(&cubic);
    assert!(text.contains("5 connected cubic graph(s) of diameter 2"), "{text}");
    assert!(text.contains("(K3,3)"), "{text}");
    assert!(text.contains("(Petersen)"), "{text}");

    let fig2 = pdng(&["reconstruct", "fig2"]);
    assert_eq!(fig2.status.code(), Some(0));
    let text = stdout_str(&fig2);
    let tally = text
        .lines()
        .find(|l| l.contains("graph(s) of order 8"))
        .expect("tally line");
    let count: usize = tally.split_whitespace().next().expect("count").parse().expect("number");
    assert!(count >= 1);
    assert_eq!(text.lines().count(), count + 1, "one line per hit plus the tally");
}

#[test]
fn gen_catalog_verifies_and_honors_the_env_override() {
    // The default cache (already built by other tests or a previous run).
    let cached = pdng(&["gen-catalog"]);
    assert_eq!(cached.status.code(), Some(0), "stderr: {}", stderr_str(&cached));
    let text = stdout_str(&cached);
    assert!(text.contains("graph9.g6: 274668 lines"), "{text}");
    assert!(text.contains("cubic10.g6: 21 lines"), "{text}");

    // Compare against the manifest the binary itself enforces.
    let manifest: serde_json::Value = serde_json::from_str(include_str!("../../../data/MANIFEST.json"))
        .expect("manifest parses");
    for name in ["graph9.g6", "cubic10.g6"] {
        let sha = manifest[name]["sha256"].as_str().expect("sha");
        assert!(text.contains(sha), "{name} digest missing from output");
    }

    // Seed a separate directory and reach it through the environment.
    let default_dir = pdng::catalog::data_dir();
    let dir = tempfile::tempdir().expect("tempdir");
    for name in ["graph9.g6", "cubic10.g6"] {
        std::fs::copy(default_dir.join(name), dir.path().join(name)).expect("cache present");
    }
    let via_env = Command::new(env!("CARGO_BIN_EXE_pdng"))
        .args(["gen-catalog", "--print-manifest"])
        .env("PDNG_DATA_DIR", dir.path())
        .output()
        .expect("binary runs");
    assert_eq!(via_env.status.code(), Some(0), "stderr: {}", stderr_str(&via_env));
    let text = stdout_str(&via_env);
    assert!(
        text.contains(dir.path().to_str().expect("utf-8 path")),
        "env directory not used:\n{text}"
    );
    let brace = text.find('{').expect("manifest JSON printed");
    let printed: serde_json::Value = serde_json::from_str(&text[brace..]).expect("valid JSON");
    assert_eq!(printed, manifest);
}

#[test]
fn stdin_and_output_file_round_trip() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pdng"))
        .args(["compute", "--file", "-", "--params", "g"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .expect("piped")
        .write_all(b"D~{\n")
        .expect("stdin accepts");
    let out = child.wait_with_output().expect("runs");
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).expect("valid JSON");
    assert_eq!(v["n"], 5);
    assert_eq!(v["p"], 1);
    assert_eq!(v["g"], 1);

    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("out.csv");
    let out = pdng(&[
        "compute",
        "--enumerate",
        "4",
        "--format",
        "csv",
        "--output",
        path.to_str().expect("utf-8"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).is_empty(), "report went to the file");
    let written = std::fs::read_to_string(&path).expect("file written");
    assert_eq!(written.lines().count(), 12, "header plus the eleven order-4 classes");
    assert!(written.starts_with("n,m,graph6,"));
}

#[test]
fn sweep_verify_reports_the_invariant() {
    let out = pdng(&["sweep-verify", "--enumerate", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("graphs swept: 156"), "{text}");
    assert!(text.contains("red alerts: none"), "{text}");
    let line = text
        .lines()
        .find(|l| l.starts_with("components >= 3 on both sides"))
        .expect("class line");
    assert!(line.contains("max sum 4"), "order-6 extreme: {line}");
}
