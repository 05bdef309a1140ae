//! End-to-end checks of the binary: formats, exit codes, config handling,
//! determinism, and checkpoint kill/resume.

use std::path::Path;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gapkit"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn json_without_meta(s: &str) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(s).expect("valid json");
    v.as_object_mut().unwrap().remove("meta");
    v
}

#[test]
fn table_formats() {
    let (code, stdout, _) = run(&["table", "--count", "3", "--precision", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("1.71"));

    let (code, stdout, _) = run(&["--format", "csv", "table", "--count", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "n,p_n,root");
    assert_eq!(lines[1], "1,2,2.0000");
    assert_eq!(lines[3], "3,5,1.7100");

    let (code, stdout, _) = run(&["--format", "json", "table", "--count", "2"]);
    assert_eq!(code, 0);
    let v = json_without_meta(&stdout);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "table");
    assert_eq!(v["results"]["rows"][1]["root"], "1.7321");
}

#[test]
fn verify_exit_codes() {
    let (code, _, _) = run(&["verify", "andrica", "--preset", "andrica-small"]);
    assert_eq!(code, 0);

    // Below-domain probe fails: counterexample exit.
    let (code, stdout, _) = run(&["verify", "gap-log2-minus1", "--from", "9", "--to", "9"]);
    assert_eq!(code, 2);
    assert!(stdout.contains("FAIL n=9"));

    // Usage errors.
    let (code, _, _) = run(&["verify", "no-such-predicate", "--from", "1", "--to", "2"]);
    assert_eq!(code, 64);
    let (code, _, _) = run(&["verify", "rosser"]);
    assert_eq!(code, 64);
    let (code, _, _) = run(&[
        "verify",
        "rosser",
        "--from",
        "1",
        "--to",
        "2",
        "--preset",
        "andrica-small",
    ]);
    assert_eq!(code, 64);
    let (code, _, _) = run(&[
        "verify",
        "andrica",
        "--from",
        "1",
        "--to",
        "2",
        "--preset",
        "andrica-small",
    ]);
    assert_eq!(code, 64, "preset and explicit range conflict");
    let (code, _, _) = run(&["no-such-command"]);
    assert_eq!(code, 64);

    // Capacity cap.
    let (code, _, stderr) = run(&[
        "--max-prime",
        "1000",
        "verify",
        "rosser",
        "--from",
        "1",
        "--to",
        "100000",
    ]);
    assert_eq!(code, 65, "stderr: {stderr}");
}

#[test]
fn json_determinism_modulo_meta() {
    let args = [
        "--format", "json", "verify", "rosser", "--from", "1", "--to", "2000",
    ];
    let (c1, out1, _) = run(&args);
    let (c2, out2, _) = run(&args);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(json_without_meta(&out1), json_without_meta(&out2));
}

#[test]
fn worker_count_does_not_change_results() {
    let mut outputs = Vec::new();
    for w in ["1", "2", "8"] {
        let (code, stdout, _) = run(&[
            "--format",
            "json",
            "--workers",
            w,
            "verify",
            "dusart",
            "--from",
            "6",
            "--to",
            "20000",
        ]);
        assert_eq!(code, 0);
        let mut v = json_without_meta(&stdout);
        // params echo the worker count by design; results must not.
        v.as_object_mut().unwrap().remove("params");
        outputs.push(v);
    }
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);
}

#[test]
fn config_file_settings_and_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("gapkit.conf");
    std::fs::write(&cfg, "# settings\nformat = csv\nworkers = 2\n").unwrap();

    let (code, stdout, _) = run(&["--config", cfg.to_str().unwrap(), "table", "--count", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("n,p_n,root"), "config format respected");

    // Flag overrides the file.
    let (code, stdout, _) = run(&[
        "--config",
        cfg.to_str().unwrap(),
        "--format",
        "table",
        "table",
        "--count",
        "2",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("p_n^(1/n)"));

    // Unknown keys are usage errors.
    std::fs::write(&cfg, "no_such_key = 1\n").unwrap();
    let (code, _, _) = run(&["--config", cfg.to_str().unwrap(), "table"]);
    assert_eq!(code, 64);
}

#[test]
fn verify_out_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let (code, stdout, _) = run(&[
        "--format",
        "json",
        "verify",
        "rosser",
        "--from",
        "1",
        "--to",
        "100",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let on_disk = std::fs::read_to_string(&out).unwrap();
    assert_eq!(stdout, on_disk);
    assert_eq!(json_without_meta(&stdout)["results"]["holds_count"], 100);
}

#[test]
fn crossover_prints_threshold() {
    let (code, stdout, _) = run(&["crossover", "a-oppermann", "--lo", "2", "--hi", "200"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "75");

    let (code, stdout, _) = run(&[
        "--format",
        "json",
        "crossover",
        "a-andrica",
        "--lo",
        "2",
        "--hi",
        "500",
    ]);
    assert_eq!(code, 0);
    let v = json_without_meta(&stdout);
    assert_eq!(v["results"]["threshold_found"], 2);
    assert_eq!(v["results"]["last_failure"], serde_json::Value::Null);
}

#[test]
fn chain_reports_violation_count() {
    let (code, stdout, _) = run(&["chain", "--to", "500"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("0 violations"));
}

#[test]
fn simulate_defaults_to_json_and_echoes_seed() {
    let (code, stdout, _) = run(&["simulate", "--limit", "5000", "--seed", "1"]);
    assert_eq!(code, 0);
    let v = json_without_meta(&stdout);
    assert_eq!(v["results"]["sample"]["seed"], 1);
    assert_eq!(v["results"]["sample"]["limit"], 5000);

    // Deterministic seed-for-seed.
    let (_, again, _) = run(&["simulate", "--limit", "5000", "--seed", "1"]);
    assert_eq!(json_without_meta(&stdout), json_without_meta(&again));
}

#[test]
fn dump_primes_csv() {
    let (code, stdout, _) = run(&["dump", "primes", "--limit", "12"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "p\n2\n3\n5\n7\n11\n");
}

#[test]
fn stats_surface() {
    let (code, stdout, _) = run(&["--format", "csv", "stats", "records", "--to", "10"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "n,p_n,p_next,gap");
    assert_eq!(lines[1], "1,2,3,1");

    let (code, stdout, _) = run(&[
        "--format", "csv", "stats", "maier", "--x", "100", "--lambda", "2",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.lines().nth(1).unwrap().starts_with("100,2,5,"));

    let (code, _, _) = run(&["stats", "maier", "--x", "5", "--lambda", "2"]);
    assert_eq!(code, 64, "x < 10 is a domain error");
}

/// Kill a running campaign once its checkpoint exists, resume it, and
/// compare with an uninterrupted run.
#[test]
fn kill_and_resume_campaign() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("rosser.ckpt");
    let cp_str = cp.to_str().unwrap().to_string();

    let mut child = bin()
        .args([
            "--checkpoint",
            &cp_str,
            "verify",
            "rosser",
            "--from",
            "1",
            "--to",
            "3000000",
            "--checkpoint-interval",
            "50000",
        ])
        .stdout(Stdio::null())
        .stderr(Stdio::null())
        .spawn()
        .expect("spawn campaign");

    // Wait for a checkpoint to land, then kill mid-flight.
    let deadline = Instant::now() + Duration::from_secs(60);
    let mut saw_checkpoint = false;
    while Instant::now() < deadline {
        if cp.exists() {
            saw_checkpoint = true;
            break;
        }
        if let Some(_status) = child.try_wait().expect("try_wait") {
            break; // finished before we could kill it; resume still works
        }
        std::thread::sleep(Duration::from_millis(10));
    }
    let _ = child.kill();
    let _ = child.wait();
    assert!(
        saw_checkpoint || cp.exists(),
        "campaign never wrote a checkpoint"
    );

    let (code, resumed, _) = run(&[
        "--format",
        "json",
        "--checkpoint",
        &cp_str,
        "verify",
        "--resume",
    ]);
    assert_eq!(code, 0);

    let (code, fresh, _) = run(&[
        "--format", "json", "verify", "rosser", "--from", "1", "--to", "3000000",
    ]);
    assert_eq!(code, 0);

    let strip = |s: &str| {
        let mut v = json_without_meta(s);
        v.as_object_mut().unwrap().remove("params");
        v
    };
    assert_eq!(strip(&resumed), strip(&fresh));
}

#[test]
fn resume_rejects_corrupt_checkpoint() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("trunc.ckpt");
    std::fs::write(&cp, "{\"schema_version\":1,").unwrap();
    let (code, _, stderr) = run(&["--checkpoint", cp.to_str().unwrap(), "verify", "--resume"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("checkpoint"), "stderr: {stderr}");
    assert!(Path::new(&cp).exists(), "no silent restart");
}
