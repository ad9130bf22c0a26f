//! Drives python/smoke_test.py against the freshly built extension module,
//! so the Python surface is exercised by `cargo test --workspace`.

use std::path::PathBuf;
use std::process::Command;

#[test]
#[cfg(target_os = "linux")]
fn python_smoke_test() {
    let exe = std::env::current_exe().expect("test executable path");
    let profile_dir = exe
        .parent()
        .and_then(|p| p.parent())
        .expect("target profile directory");
    let library = profile_dir.join("libfacschur_py.so");
    assert!(library.is_file(), "cdylib missing at {}", library.display());
    let script = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../python/smoke_test.py");
    let out = match Command::new("python3").arg(&script).arg(&library).output() {
        Ok(out) => out,
        Err(_) => {
            eprintln!("python3 not available; skipping");
            return;
        }
    };
    assert!(
        out.status.success(),
        "smoke test failed\nstdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr),
    );
}
