//! End-to-end CLI behavior: schema round-trips, batch equivalence, error
//! classification, and the self-test entry point.

use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bott-limit"))
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    use std::io::Write;
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary exits")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

const B2_JOB: &str = r#"{"root_system":{"family":"B","rank":2},"word":[2,1]}"#;

#[test]
fn reports_reparse_under_their_schema() {
    // Every command's output must deserialize back into a JSON object with
    // its command tag; sorted and unsorted renderings carry equal content.
    let jobs = [
        ("fan", B2_JOB),
        ("matrix", B2_JOB),
        ("classify", B2_JOB),
        (
            "ample",
            r#"{"root_system":{"family":"B","rank":2},"word":[2,1],
                "divisor":{"1+":1,"1-":1,"2+":1,"2-":1}}"#,
        ),
        (
            "nef",
            r#"{"root_system":{"family":"B","rank":2},"word":[2,1],
                "divisor":{"1+":1,"1-":1,"2+":1,"2-":1}}"#,
        ),
        ("mori", B2_JOB),
        (
            "intersect",
            r#"{"root_system":{"family":"A","rank":3},"word":[1,2,1],
                "walls":[{"signs":"++-","flip":1}]}"#,
        ),
        (
            "logfano",
            r#"{"root_system":{"family":"A","rank":3},"word":[1,2],
                "boundary":["1/3","0"]}"#,
        ),
        (
            "convert",
            r#"{"root_system":{"family":"A","rank":3},"word":[1,1],
                "divisor":{"2-":1}}"#,
        ),
    ];
    for (command, job) in jobs {
        let sorted = stdout_json(&run_with_stdin(
            &["--command", command, "--input", "-", "--sorted-keys"],
            job,
        ));
        let unsorted = stdout_json(&run_with_stdin(
            &["--command", command, "--input", "-"],
            job,
        ));
        assert_eq!(
            sorted, unsorted,
            "{command}: content differs across key order"
        );
        assert_eq!(sorted["command"], command);
    }
}

#[test]
fn divisor_verdicts_match_fixtures() {
    // -K on B2 (2,1): d = (0, 2), nef but not ample.
    let job = r#"{"root_system":{"family":"B","rank":2},"word":[2,1],
                  "divisor":{"1+":1,"1-":1,"2+":1,"2-":1}}"#;
    let ample = stdout_json(&run_with_stdin(
        &["--command", "ample", "--input", "-"],
        job,
    ));
    assert_eq!(ample["d_values"], serde_json::json!([0, 2]));
    assert_eq!(ample["verdict"], false);
    let nef = stdout_json(&run_with_stdin(&["--command", "nef", "--input", "-"], job));
    assert_eq!(nef["verdict"], true);
}

#[test]
fn convert_matches_fixture() {
    let job = r#"{"root_system":{"family":"A","rank":3},"word":[1,1],"divisor":{"2-":1}}"#;
    let doc = stdout_json(&run_with_stdin(
        &["--command", "convert", "--input", "-"],
        job,
    ));
    assert_eq!(doc["h_table"], serde_json::json!([[1, 0], [-2, 1]]));
    assert_eq!(doc["g_values"], serde_json::json!([-2, 1]));
}

#[test]
fn logfano_accepts_rational_boundary() {
    let job = r#"{"root_system":{"family":"A","rank":3},"word":[1,2],"boundary":["1/3","1/2"]}"#;
    let doc = stdout_json(&run_with_stdin(
        &["--command", "logfano", "--input", "-"],
        job,
    ));
    assert_eq!(doc["b"], serde_json::json!([2, 1]));
    // f_1 = (2+1+1/3) - (1+1+1/2) = 10/3 - 5/2 = 5/6, f_2 = 5/2.
    assert_eq!(doc["f"], serde_json::json!(["5/6", "5/2"]));
    assert_eq!(doc["log_fano"], true);
}

#[test]
fn explicit_cartan_matrices_are_accepted() {
    let job = r#"{"root_system":{"cartan":[[2,-1],[-2,2]]},"word":[2,1]}"#;
    let doc = stdout_json(&run_with_stdin(
        &["--command", "matrix", "--input", "-"],
        job,
    ));
    assert_eq!(doc["entries"], serde_json::json!([[2, -2], [-1, 2]]));
}

#[test]
fn batch_equals_independent_runs() {
    let jobs = [
        (
            "classify",
            r#"{"root_system":{"family":"B","rank":2},"word":[2,1]}"#,
        ),
        (
            "matrix",
            r#"{"root_system":{"family":"G2","rank":2},"word":[1,2]}"#,
        ),
        (
            "logfano",
            r#"{"root_system":{"family":"A","rank":3},"word":[1,2]}"#,
        ),
    ];
    let batch_input: String = jobs
        .iter()
        .map(|(command, job)| {
            let mut value: serde_json::Value = serde_json::from_str(job).unwrap();
            value["command"] = serde_json::json!(command);
            format!("{value}\n")
        })
        .collect();
    let batch = run_with_stdin(
        &["--command", "batch", "--input", "-", "--sorted-keys"],
        &batch_input,
    );
    assert!(batch.status.success());
    let batch_lines: Vec<serde_json::Value> = String::from_utf8_lossy(&batch.stdout)
        .lines()
        .map(|line| serde_json::from_str(line).unwrap())
        .collect();
    assert_eq!(batch_lines.len(), jobs.len());
    for ((command, job), line) in jobs.iter().zip(&batch_lines) {
        let single = stdout_json(&run_with_stdin(
            &["--command", command, "--input", "-", "--sorted-keys"],
            job,
        ));
        assert_eq!(
            &single, line,
            "batch line differs from a single {command} run"
        );
    }
}

#[test]
fn invalid_inputs_exit_one_and_name_the_violation() {
    let cases = [
        (
            // Letter out of range.
            r#"{"root_system":{"family":"A","rank":3},"word":[1,4]}"#,
            "classify",
            "outside 1..=3",
        ),
        (
            // Asymmetric zero pattern.
            r#"{"root_system":{"cartan":[[2,0],[-1,2]]},"word":[1]}"#,
            "classify",
            "zero pattern",
        ),
        (
            // G2 admits only rank 2.
            r#"{"root_system":{"family":"G2","rank":3},"word":[1]}"#,
            "fan",
            "does not admit rank",
        ),
        (
            // Missing divisor.
            r#"{"root_system":{"family":"A","rank":2},"word":[1]}"#,
            "ample",
            "divisor",
        ),
        (
            // Boundary coefficient outside [0, 1).
            r#"{"root_system":{"family":"A","rank":2},"word":[1],"boundary":["3/2"]}"#,
            "logfano",
            "outside [0, 1)",
        ),
        (
            // Positive off-diagonal entry.
            r#"{"root_system":{"cartan":[[2,1],[1,2]]},"word":[1]}"#,
            "matrix",
            "nonpositive",
        ),
    ];
    for (job, command, needle) in cases {
        let output = run_with_stdin(&["--command", command, "--input", "-"], job);
        assert_eq!(
            output.status.code(),
            Some(1),
            "{command} on {job}: expected exit 1"
        );
        let stderr = String::from_utf8_lossy(&output.stderr);
        assert!(
            stderr.contains(needle),
            "{command}: stderr {stderr:?} does not mention {needle:?}"
        );
    }
}

#[test]
fn oracle_cap_is_an_explicit_error() {
    let job = format!(
        r#"{{"root_system":{{"family":"A","rank":2}},"word":[{}]}}"#,
        vec!["1"; 17].join(",")
    );
    let output = run_with_stdin(&["--command", "classify", "--input", "-", "--oracle"], &job);
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("16"), "stderr: {stderr}");
}

#[test]
fn self_test_runs_clean_with_a_seed() {
    let output = bin()
        .args(["--self-test", "--seed", "3", "--format", "table"])
        .output()
        .expect("binary runs");
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("passed: true"), "stdout: {stdout}");
}
