use std::process::{Command, Output};

use chimney::chimney::Chimney;
use chimney::coxeter::CoxeterSystem;
use chimney::gallery::GalleryType;
use chimney::oracle::{oracle_histogram, GateLabelRule, LabelAlphabets};
use chimney::parse::parse_element;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chimney"))
        .args(args)
        .env("CHIMNEY_NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8")
}

const SHADOW_ARGS: &[&str] = &[
    "shadow",
    "--type",
    "A2",
    "--J",
    "1",
    "--y",
    "",
    "--x",
    "s1 s2 s1 s0 s2 s0",
    "--format",
    "json",
];

#[test]
fn shadow_json_golden() {
    let out = run(SHADOW_ARGS);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        r#"{"kind":"alcove","elements":["s0 s2 s0","s1 s0 s2","s1 s2 s1","s2 s1 s0","s2 s1 s0 s2"]}"#
    );
}

#[test]
fn shadow_json_matches_oracle_and_is_stable() {
    let first = stdout(&run(SHADOW_ARGS));
    assert_eq!(first, stdout(&run(SHADOW_ARGS)));

    let sys = CoxeterSystem::from_label("A2").unwrap();
    let ch = Chimney::new(&sys, &[1], sys.identity()).unwrap();
    let x = parse_element(&sys, "s1 s2 s1 s0 s2 s0").unwrap();
    let alph = LabelAlphabets::uniform(&sys, 2, GateLabelRule::Zero).unwrap();
    let ends = oracle_histogram(&sys, &ch, &GalleryType::of_element(&sys, &x), &alph);
    let json: serde_json::Value = serde_json::from_str(&first).unwrap();
    let listed: Vec<_> = json["elements"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| parse_element(&sys, e.as_str().unwrap()).unwrap())
        .collect();
    assert_eq!(listed.len(), ends.len());
    assert!(listed.iter().all(|z| ends.contains_key(z)));
}

#[test]
fn count_at_q3_matches_oracle() {
    let out = run(&[
        "count", "--type", "A1", "--J", "", "--y", "", "--x", "s1 s0", "--z", "s1 s0", "--q", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let printed: u64 = stdout(&out).trim().parse().unwrap();

    let sys = CoxeterSystem::from_label("A1").unwrap();
    let ch = Chimney::antidominant(&sys);
    let x = parse_element(&sys, "s1 s0").unwrap();
    let alph = LabelAlphabets::uniform(&sys, 3, GateLabelRule::Zero).unwrap();
    let hist = oracle_histogram(&sys, &ch, &GalleryType::of_element(&sys, &x), &alph);
    assert_eq!(printed, hist[&x]);
    assert_eq!(printed, 1);
}

#[test]
fn count_json_and_polynomial_text() {
    let out = run(&[
        "count", "--type", "A1", "--x", "s1 s0", "--z", "s0", "--format", "json",
    ]);
    assert_eq!(
        stdout(&out).trim(),
        r#"{"monomials":[{"exps":[1,1],"coeff":1},{"exps":[1,0],"coeff":-1}]}"#
    );
    let out = run(&["count", "--type", "A1", "--x", "s1 s0", "--z", "s0"]);
    assert_eq!(stdout(&out).trim(), "q0*q1 - q0");
    let out = run(&[
        "count",
        "--type",
        "A1",
        "--x",
        "s1 s0",
        "--z",
        "s0",
        "--per-type-q",
        "2,5",
    ]);
    assert_eq!(stdout(&out).trim(), "8");
}

#[test]
fn vertex_count() {
    let out = run(&[
        "count", "--type", "A2", "--lambda", "[1,1]", "--mu", "[2,1]",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn verify_exits_zero() {
    let out = run(&["verify", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let checks = json["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn verify_text_has_no_color_when_disabled() {
    let out = run(&["verify", "--type", "A1", "--max-length", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(!text.contains('\x1b'));
    assert!(text.contains("PASS"));
}

#[test]
fn printed_elements_reparse() {
    let sys = CoxeterSystem::from_label("C2").unwrap();
    let out = run(&["shadow", "--type", "C2", "--J", "", "--x", "s0 s1 s2 s1 s0"]);
    for line in stdout(&out).lines() {
        let x = parse_element(&sys, line).unwrap();
        assert_eq!(sys.format_element(&x), line);
    }
    let out = run(&[
        "orientation",
        "--type",
        "C2",
        "--J",
        "2",
        "--y",
        "s1",
        "--x",
        "t[1,-1]*s2",
    ]);
    for line in stdout(&out).lines() {
        let gate = line.rsplit("gate ").next().unwrap();
        let g = parse_element(&sys, gate).unwrap();
        assert_eq!(sys.format_element(&g), gate);
    }
}

#[test]
fn orientation_json() {
    let out = run(&[
        "orientation",
        "--type",
        "A2",
        "--J",
        "all",
        "--x",
        "s0",
        "--format",
        "json",
    ]);
    assert_eq!(
        stdout(&out).trim(),
        r#"{"alcove":"s0","panels":[{"gate":"e","orientation":"+","type":0},{"gate":"s0","orientation":"-","type":1},{"gate":"s0","orientation":"-","type":2}]}"#
    );
}

#[test]
fn gallery_listing() {
    let out = run(&["gallery", "--type", "A1", "--x", "s1 s0", "--z", "s0"]);
    assert_eq!(
        stdout(&out).trim(),
        "+fold +cross  -> s0  weight q0*q1 - q0"
    );
}

#[test]
fn render_writes_identical_svg() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for path in [&a, &b] {
        let out = run(&[
            "render",
            "--type",
            "A2",
            "--J",
            "1",
            "--x",
            "t[-3,-3]",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let svg = std::fs::read_to_string(&a).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg, std::fs::read_to_string(&b).unwrap());
}

#[test]
fn render_falls_back_to_json_above_rank_two() {
    let out = run(&["render", "--type", "A3", "--J", "all", "--x", "s1 s2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        r#"{"kind":"alcove","elements":["s1 s2"]}"#
    );
    assert!(String::from_utf8_lossy(&out.stderr).contains("JSON"));
}

#[test]
fn input_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["shadow", "--type", "A2", "--x", "s7"],
        &["shadow", "--type", "A2", "--J", "5", "--x", "s1"],
        &["shadow", "--type", "Z9", "--x", "s1"],
        &["shadow", "--type", "A2", "--lambda", "[1,-1]"],
        &[
            "count", "--type", "A2", "--x", "s1", "--z", "e", "--sigma", "1",
        ],
        &["count", "--type", "A2", "--x", "s1", "--z", "e", "--q", "1"],
        &["count", "--type", "A2", "--x", "s1"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(!out.stderr.is_empty());
    }
    let out = run(&["shadow", "--type", "A2", "--x", "q1"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("s0 s1 s2"));
}
