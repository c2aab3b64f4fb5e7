use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bondlab(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bondlab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_writes_graph6() {
    assert_eq!(stdout(&bondlab(&["gen", "complete", "4"], "")), "C~\n");
    assert_eq!(stdout(&bondlab(&["gen", "cycle", "4"], "")), "Cl\n");
    let rook = stdout(&bondlab(&["gen", "rook", "3"], ""));
    assert!(rook.starts_with('H'));
    assert_eq!(rook.trim().len(), 1 + 6);
    let a = bondlab(&["gen", "gnp", "12", "3", "10", "--seed", "7"], "");
    let b = bondlab(&["gen", "gnp", "12", "3", "10", "--seed", "7"], "");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn per_graph_commands() {
    assert_eq!(stdout(&bondlab(&["gamma"], "Cl\n")), "γ = 2  set: 0 1\n");
    assert_eq!(
        stdout(&bondlab(&["--format", "csv", "bondage"], "Cl\n"))
            .lines()
            .nth(1)
            .unwrap()
            .split(',')
            .next(),
        Some("3")
    );
    assert!(stdout(&bondlab(&["hr"], "4 3\n0 1\n1 2\n2 3\n")).starts_with("hr = 2"));
    assert_eq!(stdout(&bondlab(&["genus"], "D~{\n")), "h = 1  k = 1\n");
    let bounds = stdout(&bondlab(&["bounds"], "Cl\n"));
    assert!(bounds.contains("planar = 4") && bounds.ends_with("best = 3\n"));
}

#[test]
fn embedding_commands() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.emb");
    std::fs::write(&path, "0: 1 3 2\n1: 2 3 0\n2: 0 3 1\n3: 0 1 2\n").unwrap();
    let p = path.to_str().unwrap();
    let faces = stdout(&bondlab(&["faces", "--embedding", p], ""));
    assert!(faces.starts_with("4 faces on S_0"));
    let curv = bondlab(&["--format", "json", "curvature", "--embedding", p], "");
    let v: serde_json::Value = serde_json::from_slice(&curv.stdout).unwrap();
    assert_eq!(v[0]["sum_curvature"], "0/1");
    assert_eq!(v[0]["per_edge"][0]["w"], "2/3");
    // Without a file a minimum-genus embedding of the input graph is used.
    let k5 = stdout(&bondlab(&["faces"], "D~{\n"));
    assert!(k5.starts_with("5 faces on S_1"));
}

#[test]
fn constant_command() {
    let out = stdout(&bondlab(&["constant", "non-orientable", "464"], ""));
    assert!(out.starts_with("N_464: b(G) <= Δ(G) + 53"));
    assert_eq!(bondlab(&["constant", "n", "0"], "").status.code(), Some(2));
}

#[test]
fn survey_exit_codes_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("survey.csv");
    let corpus = "C~\nDhc\nEFz_\n";
    let out = bondlab(
        &[
            "--format",
            "csv",
            "--report",
            report.to_str().unwrap(),
            "survey",
        ],
        corpus,
    );
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(&report).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "name,n,m,delta,Delta,gamma,bondage,hr,h,k,bound_orient,bound_nonorient,bound_planar,bound_best,ok"
    );
    assert_eq!(lines.count(), 3);

    let again = bondlab(&["--format", "csv", "survey"], corpus);
    assert_eq!(stdout(&again), csv);

    let big = format!("{}\n", path_graph6(65));
    let out = bondlab(&["survey"], &big);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("size limit"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(bondlab(&["gamma"], "not a graph\n").status.code(), Some(2));
    assert_eq!(bondlab(&["gen", "wheel", "2"], "").status.code(), Some(2));
    assert_eq!(bondlab(&["frobnicate"], "").status.code(), Some(2));
    let missing = bondlab(&["gamma", "/nonexistent/graph.g6"], "");
    assert_eq!(missing.status.code(), Some(2));
}

/// graph6 for the path on `n` vertices in the long form, by hand.
fn path_graph6(n: usize) -> String {
    let mut bits = Vec::new();
    for v in 1..n {
        for u in 0..v {
            bits.push(u + 1 == v);
        }
    }
    let mut out = vec![b'~'];
    out.extend([12, 6, 0].map(|shift| 63 + (n >> shift & 63) as u8));
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            x |= (b as u8) << (5 - i);
        }
        out.push(63 + x);
    }
    String::from_utf8(out).unwrap()
}
