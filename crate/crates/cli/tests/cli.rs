use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use simplicial_resilience::complex::fixtures;
use simplicial_resilience::io::{parse_cofiltration_str, write_facets};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_resilience"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(
        dir.path(),
        "x.facets",
        &write_facets(&fixtures::butterfly()),
    );
    let bad = write(dir.path(), "bad.facets", "1 2\n3 x\n");
    let g = good.to_str().unwrap();

    assert_eq!(bin(&["betti", g]).status.code(), Some(0));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
    assert_eq!(bin(&["betti"]).status.code(), Some(1));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(bin(&["betti", g, "--field", "4"]).status.code(), Some(1));
    assert_eq!(bin(&["betti", g, "--format", "svg"]).status.code(), Some(1));
    assert_eq!(bin(&["betti", g, "--threads", "0"]).status.code(), Some(1));
    assert_eq!(
        bin(&["cohesive", g, "--strata", "2,0,0"]).status.code(),
        Some(1)
    );

    let out = bin(&["betti", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(
        bin(&["betti", "/nonexistent/x.facets"]).status.code(),
        Some(2)
    );
    let broken = write(
        dir.path(),
        "c.json",
        r#"{"steps": [{"facets": [[1,2]]}, {"facets": [[1,2,3]]}]}"#,
    );
    assert_eq!(
        bin(&["barcode", broken.to_str().unwrap(), "--degree", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn thick_and_cohesive_goldens() {
    let dir = tempfile::tempdir().unwrap();
    let l6 = write(dir.path(), "l6.facets", &write_facets(&fixtures::l6()));
    let v = json(&bin(&["thick", l6.to_str().unwrap(), "--format", "json"]));
    // betti[n][h]
    assert_eq!(v["betti"][0][2], 1);
    assert_eq!(v["betti"][1][2], 0);
    assert_eq!(v["betti"][1][0], 1);

    let bf = write(
        dir.path(),
        "bf.facets",
        &write_facets(&fixtures::butterfly()),
    );
    let text = stdout(&bin(&["cohesive", bf.to_str().unwrap(), "--strata", "0,2"]));
    assert!(
        text.contains("n=1 beta=0 cohesive=1 img=0 ker=0 coker=1"),
        "{text}"
    );
    let v = json(&bin(&[
        "betti",
        bf.to_str().unwrap(),
        "--format",
        "json",
        "--field",
        "3",
    ]));
    assert_eq!(v["field"], 3);
    assert_eq!(v["betti"][1], 0);
}

#[test]
fn attack_round_trips_into_sixpack() {
    let dir = tempfile::tempdir().unwrap();
    let tf = write(
        dir.path(),
        "tf.facets",
        &write_facets(&fixtures::triforce()),
    );
    let a = stdout(&bin(&[
        "attack",
        tf.to_str().unwrap(),
        "--steps",
        "2",
        "--seed",
        "7",
    ]));
    let c = parse_cofiltration_str(&a).unwrap();
    assert_eq!(c.seed(), Some(7));
    assert_eq!(c.len(), 3);

    let cp = write(dir.path(), "c.json", &a);
    let v = json(&bin(&[
        "sixpack",
        cp.to_str().unwrap(),
        "--degree",
        "1",
        "--thick",
        "2",
        "--format",
        "json",
    ]));
    for panel in ["bottom", "top", "image", "kernel", "cokernel"] {
        assert_eq!(v[panel]["seed"], 7, "{panel}");
        assert_eq!(v[panel]["degree"], 1);
    }
    let svg = stdout(&bin(&[
        "bigrid",
        cp.to_str().unwrap(),
        "--degree",
        "1",
        "--format",
        "svg",
    ]));
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let bf = write(
        dir.path(),
        "bf.facets",
        &write_facets(&fixtures::butterfly()),
    );
    let target = dir.path().join("out.txt");
    let out = bin(&[
        "betti",
        bf.to_str().unwrap(),
        "--output",
        target.to_str().unwrap(),
    ]);
    assert!(stdout(&out).is_empty());
    let direct = stdout(&bin(&["betti", bf.to_str().unwrap()]));
    assert_eq!(std::fs::read_to_string(target).unwrap(), direct);
}
