use super::*;

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn call(args: &[&str]) -> Outcome {
    run(std::iter::once("tanglehom").chain(args.iter().copied()))
}

#[test]
fn homology_json_for_twist_two() {
    let tp = data("tprime.tangle");
    let o = call(&["homology", "--algebra", "barnatan_pair", "--char", "2", "--t", "0", "--epsilon", "+1", &tp, "--format", "json"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["polynomial"], "A^2 + A^4 + t^2*A^10 + t^2*A^12");
    assert_eq!(v["homology"].as_array().unwrap().len(), 4);
}

#[test]
fn khovanov_pair_in_characteristic_three_fails_cardy() {
    let o = call(&["algebra-check", "--algebra", "khovanov_pair", "--char", "3"]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.lines().any(|l| l.to_ascii_lowercase().contains("cardy") && l.contains("FAIL")), "{}", o.stdout);
    let ok = call(&["algebra-check", "--algebra", "barnatan_pair"]);
    assert_eq!(ok.code, 0, "{}", ok.stdout);
}

#[test]
fn euler_of_the_unknot() {
    let o = call(&["euler", "--algebra", "c_ht", "--h", "0", "--t", "0", "--char", "2", &data("unknot.tangle")]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.stdout, "A^-2 + A^2\n");
}

#[test]
fn exit_codes() {
    let o = call(&["compose", "--algebra", "khovanov_pair", &data("tprime.tangle")]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.starts_with("error[compute]:"));
    assert_eq!(call(&["homology", "--algebra", "nope", &data("tprime.tangle")]).code, 2);
    assert_eq!(call(&["homology", "in 2 / XO 7"]).code, 2);
    assert_eq!(call(&["homology", "--char", "4", &data("tprime.tangle")]).code, 2);
    assert_eq!(call(&["oracle", "--algebra", "khovanov_pair", &data("tprime.tangle")]).code, 2);
    assert_eq!(call(&["frobnicate"]).code, 2);
    assert_eq!(call(&["--help"]).code, 0);
}

#[test]
fn inline_words_and_determinism() {
    let a = call(&["spectral", "--format", "json", "in 2 / orient u u / XO 1 / XO 1"]);
    let b = call(&["spectral", "--format", "json", &data("tprime.tangle")]);
    assert_eq!(a.code, 0);
    assert_eq!(a, b);
    let p = call(&["spectral", "--page", "1", "--epsilon", "-1", &data("tprime.tangle")]);
    assert!(p.stdout.contains("E_1"));
}

#[test]
fn compose_reports_boundary_actions() {
    let o = call(&["compose", "--format", "json", &data("r1_kink.tangle")]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["boundary_actions"].as_array().unwrap().len(), 2);
    assert_eq!(v["agrees_ungraded"], true);
}

#[test]
fn oracle_and_reidemeister_commands() {
    let o = call(&["oracle", "--algebra", "khovanov_pair", &data("trefoil.tangle")]);
    assert_eq!(o.code, 0, "{}{}", o.stdout, o.stderr);
    assert!(o.stdout.contains("agree: true"));
    let r = call(&["reidemeister", "--seed", "4", "--moves", "R1,R2", "--nmax", "4", "--pairs", "3"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("6 cases, 0 failed"));
    assert_eq!(call(&["reidemeister", "--moves", "R4"]).code, 2);
}
