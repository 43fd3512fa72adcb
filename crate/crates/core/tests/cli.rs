use std::process::{Command, Output};

fn ree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn omega_via_both_routes() {
    for via in ["formula", "hexagon"] {
        let o = ree(&["omega", "0,0,1", "--field", "1", "--via", via]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), "(1,0,2)\n");
    }
    let o = ree(&["omega", "inf", "--field", "3"]);
    assert_eq!(stdout(&o), "(0:0:0,0:0:0,0:0:0)\n");
    let a = ree(&["omega", "1", "0", "0", "--field", "3"]);
    let b = ree(&["omega", "1:0:0,0,0", "--field", "3", "--via", "hexagon"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn norm_prints_n_v_u() {
    let o = ree(&["norm", "1,0,0", "--field", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "N=2 v=2 u=2\n");
    assert_eq!(ree(&["norm", "inf", "--field", "1"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--fields", "9"][..],
        &["norm", "1,0,0", "--field", "2"],
        &["omega", "5,0,0", "--field", "1"],
        &["closure", "--field", "27"],
        &["closure", "--translations", "up"],
        &["frobnicate"],
    ] {
        assert_eq!(ree(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn closure_sides() {
    let left = ree(&["closure", "--field", "3"]);
    assert_eq!(left.status.code(), Some(0));
    assert_eq!(stdout(&left), "order=1512 derived=504\n");
    let right = ree(&["closure", "--translations", "right"]);
    assert_eq!(right.status.code(), Some(1));
    assert_eq!(stdout(&right), "order>6048 derived=?\n");
}

#[test]
fn hexagon_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hex.txt");
    let o = ree(&["hexagon", "--export", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "vertices=728 edges=1456 sides=364+364 degree=4 girth=12 diameter=6\n"
    );
    let text = std::fs::read_to_string(&path).unwrap();
    let (labels, adjacency): (Vec<&str>, Vec<&str>) =
        text.lines().partition(|l| l.starts_with('#'));
    assert_eq!(labels.len(), 728);
    assert_eq!(adjacency.len(), 728);
    for (i, line) in adjacency.iter().enumerate() {
        let (v, rest) = line.split_once(": ").unwrap();
        assert_eq!(v.parse::<usize>().unwrap(), i);
        assert_eq!(rest.split(' ').count(), 4);
    }
}

#[test]
fn verify_json_is_deterministic() {
    let run = || {
        let o = ree(&[
            "verify",
            "--fields",
            "3",
            "--samples",
            "100",
            "--seed",
            "7",
            "--json",
            "-",
        ]);
        assert_eq!(o.status.code(), Some(1));
        let text = stdout(&o);
        let json: serde_json::Value =
            serde_json::from_str(&text[text.find("\n{").unwrap()..]).unwrap();
        json
    };
    let (a, b) = (run(), run());
    assert_eq!(a["schema"], 1);
    assert_eq!(a["body"], b["body"]);
    assert_eq!(a["body"]["suite"], "ree-verify");
    assert_eq!(a["body"]["passed"], false);
    let failed: Vec<&str> = a["body"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(
        failed,
        [
            "symbolic.phi_homomorphism",
            "phi.homomorphism",
            "hexagon.m6_on_w10_as_stated",
            "closure.order"
        ]
    );
    assert!(a["timing_ms"].is_object() || a["timing_ms"].is_number());
}
