use std::io::Write;

use wordhopf::json::{element_from_json, element_to_json, tensor_from_json, tensor_to_json};
use wordhopf::{ModuleElement, Phrase, RingMode, Tensor, Word};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("wordhopf").chain(args.iter().copied());
    let code = wordhopf_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out.trim_end().to_string()
}

#[test]
fn coprod_l_of_ab_c_has_eight_terms() {
    let out = ok(&["coprod-L", "--stable", "all", "(AB|C)"]);
    assert_eq!(
        out,
        "1 ⊗ (AB|C) + (A) ⊗ (B|C) + (B) ⊗ (A|C) + (C) ⊗ (AB) + (AB) ⊗ (C) + (A|C) ⊗ (B) + (B|C) ⊗ (A) + (AB|C) ⊗ 1"
    );
}

#[test]
fn tree_and_word_conversions() {
    assert_eq!(ok(&["tree2word", "A(B,C)"]), "ABBCCA");
    assert_eq!(ok(&["word2tree", "ABBCCA"]), "A(B,C)");
    assert_eq!(ok(&["tree2word", "."]), "~");
    let (code, _, err) = call(&["word2tree", "ABAB"]);
    assert_eq!(code, 2);
    assert!(err.contains("not unlaced"));
}

#[test]
fn check_passes_with_exit_zero() {
    let out = ok(&["check", "--law", "coassoc", "--coprod", "mu", "--pairing", "delta", "--alphabet", "AB", "--max-len", "6"]);
    assert!(out.starts_with("PASS coassociativity"));
    for law in ["pre-lie", "antipode", "duality", "comodule", "leading-term"] {
        ok(&["check", "--law", law, "--coprod", "L", "--stable", "divisible:A:2", "--alphabet", "AB", "--max-len", "4"]);
    }
    ok(&["check", "--law", "coassoc", "--coprod", "S", "--strong", "adjoin:zero:A", "--alphabet", "AB", "--max-len", "5"]);
}

#[test]
fn failing_law_exits_one_with_reproducible_seed() {
    // Unlaced phrases are closed only for the delta pairing.
    let args = [
        "check", "--law", "closure", "--coprod", "mu", "--pairing", "random:1:2", "--seed", "9", "--alphabet", "AB",
        "--max-len", "4", "--json",
    ];
    let (code, first, _) = call(&args);
    assert_eq!(code, 1);
    let (_, second, _) = call(&args);
    assert_eq!(first, second);
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["seed"], 9);
    assert!(v["counterexample"]["input"].is_string());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["no-such-command"],
        vec!["coprod-L", "(A|"],
        vec!["coprod-L", "--stable", "divisible:A:0", "A"],
        vec!["rho-L", "~"],
        vec!["coprod-L", "--ring", "mod:1", "A"],
        vec!["check", "--law", "closure", "--coprod", "S", "--alphabet", "AB"],
        vec!["check", "--law", "coassoc"],
        vec!["act", "--indicator", "fA", "--exp", "AB"],
        vec!["dual-mu", "--pairing", "delta", "(A)", "(B)"],
    ] {
        let (code, _, err) = call(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(err.starts_with("error"), "{args:?}: {err}");
    }
}

#[test]
fn parse_errors_report_positions() {
    let (_, _, err) = call(&["coprod-L", "(AB|C"]);
    assert!(err.contains("position 5"), "{err}");
    let (_, _, err) = call(&["tree2word", "A(B,"]);
    assert!(err.contains("position"), "{err}");
}

#[test]
fn caps_are_enforced() {
    let (code, _, err) = call(&["coprod-L", "--cut-cap", "3", "ABCD"]);
    assert_eq!(code, 2);
    assert!(err.contains("cap"), "{err}");
    let (code, _, err) = call(&["coprod-mu", "--inscription-cap", "2", "AAA"]);
    assert_eq!(code, 2);
    assert!(err.contains("cap"), "{err}");
}

#[test]
fn json_output_round_trips() {
    let text = ok(&["coprod-mu", "--json", "(ABBA|AA)"]);
    let x: ModuleElement<Tensor<Phrase, Phrase>> = tensor_from_json(&text, RingMode::Integer).unwrap();
    assert_eq!(tensor_to_json(&x), text);
    let text = ok(&["antipode-L", "--json", "--ring", "rat", "(ABC)"]);
    let x: ModuleElement<Phrase> = element_from_json(&text, RingMode::Rational).unwrap();
    assert_eq!(element_to_json(&x), text);
    let text = ok(&["act", "--json", "--indicator", "len", "--pairing", "delta", "ABACBA"]);
    let x: ModuleElement<Word> = element_from_json(&text, RingMode::Integer).unwrap();
    assert_eq!(x.to_string(), "-4 · ~ - 2 · AA - 2 · AB - CBA");
}

#[test]
fn pairing_and_indicator_files() {
    let mut pairing = tempfile::NamedTempFile::new().unwrap();
    write!(pairing, r#"[{{"a": "A", "b": "A", "coeff": "1"}}, {{"a": "B", "b": "B", "coeff": "1"}}]"#).unwrap();
    let path = pairing.path().to_str().unwrap();
    assert_eq!(ok(&["rho-mu", "--pairing", path, "ABBA"]), ok(&["rho-mu", "--pairing", "delta", "ABBA"]));
    assert_eq!(ok(&["dual-mu", "--pairing", path, "(~)", "(~)"]), "2 · (~|~) + (AA) + (BB)");

    let mut table = tempfile::NamedTempFile::new().unwrap();
    write!(table, r#"[{{"basis": "B", "coeff": "3"}}]"#).unwrap();
    let spec = format!("table:{}", table.path().to_str().unwrap());
    assert_eq!(ok(&["act", "--indicator", &spec, "--stable", "all", "ABB"]), "-6 · AB");

    let mut broken = tempfile::NamedTempFile::new().unwrap();
    write!(broken, "[{{").unwrap();
    let (code, _, err) = call(&["rho-mu", "--pairing", broken.path().to_str().unwrap(), "AA"]);
    assert_eq!(code, 2);
    assert!(err.to_lowercase().contains("json"), "{err}");
}

#[test]
fn multi_character_letters() {
    let out = ok(&["coprod-L", "--letters", "Ab,Cd", "(Ab,Cd)"]);
    assert_eq!(out, "1 ⊗ (Ab,Cd) + (Ab) ⊗ (Cd) + (Cd) ⊗ (Ab) + (Ab,Cd) ⊗ 1");
    let (code, _, _) = call(&["coprod-L", "--letters", "Ab,Cd", "(Ab,Ef)"]);
    assert_eq!(code, 2);
}

#[test]
fn indicator_actions_and_exponential() {
    assert_eq!(ok(&["act", "--indicator", "delta:A", "--stable", "all", "AB"]), "-B");
    assert_eq!(ok(&["act", "--indicator", "delta:A", "--exp", "--ring", "rat", "AB"]), "-B + AB");
    assert_eq!(ok(&["act", "--indicator", "fB", "--pairing", "delta", "ABACBA"]), "-2 · ~ - AB - CBA");
}

#[test]
fn remaining_subcommands() {
    assert_eq!(ok(&["rho-L", "ABA"]), "A ⊗ AB + A ⊗ BA + B ⊗ AA + AB ⊗ A + BA ⊗ A");
    assert_eq!(ok(&["shuffle-S", "--strong", "adjoin:zero:A", "AB"]), "~ ⊗ AB + B ⊗ A");
    assert_eq!(ok(&["dual-L", "(A)", "(B)"]), "(AB) + (BA) + (A|B) + (B|A)");
    assert!(ok(&["ck-check", "--max-edges", "3"]).starts_with("PASS"));
    assert!(ok(&["verify-stable", "--letters", "AB", "--stable", "weight:A=1,B=-1"]).starts_with("PASS"));
    assert!(ok(&["verify-stable", "--letters", "AB", "--strong", "all"]).starts_with("PASS"));
    assert!(ok(&["--help"]).contains("coprod-L"));
}
