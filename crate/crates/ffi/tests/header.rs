use std::path::Path;
use std::process::Command;

const HEADER: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/include/pyth.h");

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(HEADER).unwrap();
    let src = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() > 15);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    for ty in ["PYTH_STATUS_OK", "PYTH_CLASS_K6", "PYTH_VERDICT_PASS", "typedef struct PythTriple PythTriple"] {
        assert!(header.contains(ty), "{ty} missing from header");
    }
}

#[test]
fn header_compiles_as_c() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let Ok(probe) = Command::new(&cc).arg("--version").output() else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(probe.status.success());
    let dir = std::env::temp_dir().join(format!("pyth-ffi-header-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let main = dir.join("use.c");
    std::fs::write(
        &main,
        "#include \"pyth.h\"\n\
         int main(void) {\n\
           PythTriple *t = 0;\n\
           if (pyth_triple_validate(3, 4, 5, &t) != PYTH_STATUS_OK) return 1;\n\
           PythClass k;\n\
           pyth_triple_classify(t, &k);\n\
           pyth_triple_free(t);\n\
           return k == PYTH_CLASS_K1 ? 0 : 1;\n\
         }\n",
    )
    .unwrap();
    let include = Path::new(HEADER).parent().unwrap();
    let out = Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(include)
        .arg(&main)
        .output()
        .unwrap();
    let _ = std::fs::remove_dir_all(&dir);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
