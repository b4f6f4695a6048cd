use std::path::PathBuf;

use gradedk_cli::spec::{ComplexSpec, RingFile, SheafSpec, TwistedSpec};
use proptest::prelude::*;

fn data(name: &str) -> String {
    std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)).unwrap()
}

#[test]
fn sample_files_round_trip() {
    for name in ["laurent-Q.toml", "skew-swap.toml", "skew-3cycle-F5.toml", "leavitt-L2.toml", "relation.toml"] {
        let parsed = RingFile::parse(&data(name)).unwrap();
        let canonical = parsed.canonical();
        let again = RingFile::parse(&canonical).unwrap();
        assert_eq!(again, parsed, "{name}");
        assert_eq!(again.canonical(), canonical, "{name}");
    }
    for name in ["complex-unit.json", "complex-torsion.json", "complex-rge0.json"] {
        let parsed = ComplexSpec::parse(&data(name)).unwrap();
        assert_eq!(ComplexSpec::parse(&parsed.canonical()).unwrap().canonical(), parsed.canonical(), "{name}");
    }
    for name in ["twisted-id.json", "twisted-nilpotent.json"] {
        let parsed = TwistedSpec::parse(&data(name)).unwrap();
        assert_eq!(TwistedSpec::parse(&parsed.canonical()).unwrap(), parsed, "{name}");
    }
    for name in ["sheaf-O-1-0.json", "sheaf-psi.json", "sheaf-not-a-sheaf.json"] {
        let parsed = SheafSpec::parse(&data(name)).unwrap();
        assert_eq!(SheafSpec::parse(&parsed.canonical()).unwrap().canonical(), parsed.canonical(), "{name}");
    }
}

#[test]
fn defaults_are_made_explicit() {
    let parsed = RingFile::parse("[ring]\nfamily = \"laurent\"\n").unwrap();
    assert!(parsed.canonical().contains("base = \"Q\""));
    let parsed = SheafSpec::parse(r#"{"kind": "twisting", "k": 1, "l": 2}"#).unwrap();
    assert!(parsed.canonical().contains("\"base\": \"Q\""));
}

#[test]
fn malformed_inputs_are_rejected() {
    assert!(RingFile::parse("[ring]\nfamily = \"laurent\"\nfoo = 1\n").is_err());
    assert!(RingFile::parse("[ring]\nfamily = \"laurent\"\nbase = \"F4\"\n").is_err());
    let unknown = RingFile::parse("[ring]\nfamily = \"quaternion\"\n").unwrap().build().unwrap_err();
    assert!(unknown.0.contains("unknown family"));
    let err = ComplexSpec::parse("{\"ring_tag\": \"R\",\n \"bottom\": }").unwrap_err();
    assert!(err.0.contains("line 2"), "{}", err.0);
}

#[test]
fn entry_outside_the_ring_is_rejected() {
    let spec = ComplexSpec::parse(r#"{"ring_tag": "Rge0", "bottom": 0, "ranks": [1, 1], "differentials": [[["t^-1"]]]}"#).unwrap();
    assert!(spec.build().is_err());
}

fn literal() -> impl Strategy<Value = String> {
    (-3i64..=3, -2i64..=2, -3i64..=3).prop_map(|(a, e, b)| format!("({a})*t^{e} + ({b})"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_specs_round_trip(n in 1usize..6, shift in 0usize..6, base in prop::sample::select(vec!["Q", "Fp:3", "Z"])) {
        let sigma: Vec<usize> = (0..n).map(|i| (i + shift) % n + 1).collect();
        let text = format!("[ring]\nfamily = \"skew_laurent_perm\"\nbase = \"{base}\"\nsigma = {sigma:?}\n");
        let parsed = RingFile::parse(&text).unwrap();
        prop_assert!(parsed.build().is_ok());
        let canonical = parsed.canonical();
        prop_assert_eq!(RingFile::parse(&canonical).unwrap().canonical(), canonical);
    }

    #[test]
    fn complex_specs_round_trip(bottom in -3i64..3, a in literal(), b in literal()) {
        let spec = ComplexSpec {
            ring_tag: "R".into(),
            base: "Q".into(),
            bottom,
            ranks: vec![1, 2],
            differentials: vec![vec![vec![a, b]]],
        };
        let canonical = spec.canonical();
        let parsed = ComplexSpec::parse(&canonical).unwrap();
        prop_assert_eq!(&parsed, &spec);
        prop_assert_eq!(parsed.canonical(), canonical);
        prop_assert!(parsed.build().is_ok());
    }
}
