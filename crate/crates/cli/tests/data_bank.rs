use std::path::PathBuf;

use hopfwork::hopf::{hopf_to_json, parse_hopf_json};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

// Set WORKBENCH_REGEN=1 to rewrite the files instead of comparing.
#[test]
fn bank_files_match_the_builders() {
    let regen = std::env::var_os("WORKBENCH_REGEN").is_some();
    for (stem, h) in workbench::bank().unwrap() {
        let path = data_dir().join(format!("{stem}.json"));
        let want = hopf_to_json(&h);
        if regen {
            std::fs::write(&path, &want).unwrap();
            continue;
        }
        let have = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert!(have == want, "{stem}.json is stale");
        let back = parse_hopf_json(&have, None).unwrap();
        assert_eq!(hopf_to_json(&back), want, "{stem} round trip");
    }
}

#[test]
fn double_command_reproduces_the_bank() {
    for (src, dst) in [("sweedler_q", "double_h4"), ("kz2", "double_kz2")] {
        let hopf = data_dir().join(format!("{src}.json"));
        let out = workbench::run(["workbench", "double", "--hopf", hopf.to_str().unwrap()]);
        assert_eq!(out.code, 0, "{}", out.stdout);
        let want = std::fs::read_to_string(data_dir().join(format!("{dst}.json"))).unwrap();
        assert_eq!(out.json, want, "{dst}");
    }
}
