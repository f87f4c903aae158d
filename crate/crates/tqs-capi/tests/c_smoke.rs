//! Compile the C driver against the public header, link the static library,
//! and run it. This is the check that keeps `include/tqs.h` in sync with the
//! exported ABI: a missing or mistyped symbol fails at link time, a behavior
//! change fails at run time.

use std::path::PathBuf;
use std::process::Command;

#[test]
fn c_driver_compiles_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().expect("test executable path");
    let target_debug = exe
        .parent() // deps/
        .and_then(|p| p.parent()) // debug/
        .expect("target directory layout")
        .to_path_buf();
    let staticlib = target_debug.join("libtqs_capi.a");
    assert!(
        staticlib.exists(),
        "staticlib not found at {}",
        staticlib.display()
    );

    let out = target_debug.join("tqs_c_driver");
    let compile = Command::new("cc")
        .arg(manifest.join("tests/driver.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&out)
        .output()
        .expect("cc available");
    assert!(
        compile.status.success(),
        "compilation failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&out).output().expect("driver runs");
    assert!(
        run.status.success(),
        "driver failed:\nstdout: {}\nstderr: {}",
        String::from_utf8_lossy(&run.stdout),
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
