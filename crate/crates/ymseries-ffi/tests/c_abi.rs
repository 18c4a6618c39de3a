//! Compiles a C program against the generated header and the static library,
//! then checks its output against the Rust API.

use std::path::{Path, PathBuf};
use std::process::Command;

use ymseries::closedforms::sp_flat;
use ymseries::exactalg::series_expand;

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().expect("test executable path");
    exe.parent()
        .and_then(Path::parent)
        .expect("target directory")
        .to_path_buf()
}

#[test]
fn c_program_links_and_agrees() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = target_dir().join("libymseries_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let exe = std::env::temp_dir().join(format!("ymseries_smoke_{}", std::process::id()));
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe)
        .status()
        .unwrap_or_else(|e| panic!("cannot run {cc}: {e}"));
    assert!(status.success(), "C compilation failed");

    let output = Command::new(&exe).output().expect("run smoke program");
    let _ = std::fs::remove_file(&exe);
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(output.status.success(), "smoke program failed: {stderr}");

    let stdout = String::from_utf8(output.stdout).unwrap();
    let mut lines = stdout.lines();
    let want = sp_flat(1, 3).unwrap();
    assert_eq!(lines.next(), Some(want.to_text().as_str()));
    let coeffs: Vec<i64> = lines
        .next()
        .unwrap()
        .split(' ')
        .map(|x| x.parse().unwrap())
        .collect();
    assert_eq!(coeffs, series_expand(&want, 10).unwrap().to_i64().unwrap());
}
