use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};

use gradedk::algebra::Support;
use gradedk::homology::{homology, is_acyclic, r0_finite_domination, ring_name, ChainComplex};
use gradedk::k_zero::{
    ft0_check, mv0_check, nk0, rk_minus1, shift_difference, stably_induced_obstruction, Induction, NilSign,
    ShiftChoice,
};
use gradedk::lifting::{lift_acyclic, make_induced, PadPolicy};
use gradedk::projective_line::{cohomology, h_equivalence_class, vect0_probe, SheafMorphism};
use gradedk::ring_kernel::{confluence_probe, parse_element, strong_grading_witness, GradedElement};
use gradedk::twisted_nil::{is_nilpotent, localized_half_torus_homology, nil_membership};
use gradedk::Error;

use crate::report::{
    complex_json, complex_text, homology_json, homology_rows, matrix_json, matrix_text, table, yes_no, Report, Verdict,
};
use crate::spec::{load_package, read, ComplexSpec, InputError, RingFile, SheafSpec, TwistedSpec};

/// Exit status 2 for bad input, 1 for a mathematical failure found while computing.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Math(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Math(m) => m,
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        CliError::Input(e.0)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotAcyclic(_) | Error::SheafCondition(_) | Error::Internal(_) => CliError::Math(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub type CliResult = Result<Report, CliError>;

fn pairs_json(pairs: &[(GradedElement, GradedElement)]) -> Value {
    Value::from(pairs.iter().map(|(x, y)| json!([x.render(), y.render()])).collect::<Vec<_>>())
}

pub fn ring_check(path: &Path, max_len: usize) -> CliResult {
    let file = RingFile::parse(&read(path)?)?;
    let ring = file.build()?;
    let mut elements = vec![];
    for (i, lit) in file.elements.iter().enumerate() {
        let e = parse_element(&ring, lit).map_err(|e| CliError::Input(format!("element {} ({lit:?}): {e}", i + 1)))?;
        elements.push((lit.clone(), e.render()));
    }
    let witness = strong_grading_witness(&ring)?;
    let verified = witness.verify().is_ok();
    let confluence = confluence_probe(&ring, max_len);
    let verdict = Verdict::from_bool(verified && confluence.all_agree);

    let json = json!({
        "command": "ring-check",
        "spec": file,
        "strong_grading": {"pos": pairs_json(&witness.pos), "neg": pairs_json(&witness.neg), "verified": verified},
        "confluence": confluence,
        "elements": elements.iter().map(|(l, n)| json!({"input": l, "normal_form": n})).collect::<Vec<_>>(),
        "pass": verdict == Verdict::Pass,
    });
    let mut text = vec![format!("ring family {} over {}", file.ring.family, file.ring.base)];
    let mut rows = vec![];
    for (sign, pairs) in [("+1", &witness.pos), ("-1", &witness.neg)] {
        for (x, y) in pairs {
            rows.push(vec![sign.to_string(), x.render(), y.render()]);
        }
    }
    text.push(table(&["degree", "x", "y"], &rows));
    text.push(format!("strong grading witness verified: {}", yes_no(verified)));
    text.push(format!(
        "confluence up to length {}: {} words, {} overlaps, {}",
        confluence.max_len,
        confluence.words_checked,
        confluence.overlaps.len(),
        if confluence.vacuous { "vacuous".into() } else { format!("all agree: {}", yes_no(confluence.all_agree)) }
    ));
    if !elements.is_empty() {
        let rows: Vec<Vec<String>> = elements.iter().map(|(l, n)| vec![l.clone(), n.clone()]).collect();
        text.push(table(&["input", "normal form"], &rows));
    }
    Ok(Report { verdict, json, text: text.join("\n") })
}

pub struct ObstructionQuery {
    pub class: Vec<i64>,
    pub along: String,
}

pub fn k0(path: &Path, query: Option<ObstructionQuery>) -> CliResult {
    let pkg = load_package(path)?;
    let sd = shift_difference(&pkg, ShiftChoice::MinusOne)?;
    let nk_minus = nk0(&pkg, NilSign::Minus)?.canonical();
    let nk_plus = nk0(&pkg, NilSign::Plus)?.canonical();
    let k_minus1 = rk_minus1(&pkg)?.cokernel.canonical();
    let groups = [
        ("K0(R0)", pkg.r0.canonical()),
        ("K0(R<=0)", pkg.neg.canonical()),
        ("K0(R>=0)", pkg.pos.canonical()),
        ("K0(R)", pkg.full.canonical()),
        ("sker", sd.sker.canonical()),
        ("scoker", sd.scoker.canonical()),
        ("NK-", nk_minus),
        ("NK+", nk_plus),
        ("K-1", k_minus1),
    ];
    let mut verdict = Verdict::Pass;
    let obstruction = match query {
        None => None,
        Some(q) => {
            let along = Induction::parse(&q.along)
                .ok_or_else(|| CliError::Input(format!("--along must be one of i-, i+, j-, j+, got {:?}", q.along)))?;
            let class: Vec<BigInt> = q.class.iter().map(|&c| BigInt::from(c)).collect();
            let ob = stably_induced_obstruction(&pkg, &class, along)?;
            verdict = Verdict::from_bool(ob.vanishes);
            Some((q.along, ob))
        }
    };
    let json = json!({
        "command": "k0",
        "package": pkg.name,
        "groups": groups.iter().map(|(n, g)| (n.to_string(), json!({"form": g.to_string(), "canonical": g}))).collect::<serde_json::Map<_, _>>(),
        "provenance": pkg.provenance,
        "obstruction": obstruction.as_ref().map(|(along, ob)| json!({"along": along, "result": ob})),
    });
    let rows: Vec<Vec<String>> = groups.iter().map(|(n, g)| vec![n.to_string(), g.to_string()]).collect();
    let mut text = vec![format!("K0 package {}", pkg.name), table(&["group", "canonical form"], &rows)];
    if let Some((along, ob)) = &obstruction {
        let coords: Vec<String> = ob.coordinates.iter().map(ToString::to_string).collect();
        text.push(format!(
            "obstruction along {along} in {}: [{}], {}",
            ob.group,
            coords.join(", "),
            if ob.vanishes { "vanishes (stably induced)" } else { "nonzero (not stably induced)" }
        ));
    }
    Ok(Report { verdict, json, text: text.join("\n") })
}

pub fn ft0(path: &Path) -> CliResult {
    let pkg = load_package(path)?;
    let cert = ft0_check(&pkg)?;
    let verdict = Verdict::from_bool(cert.passes());
    let json = json!({"command": "ft0", "sequence": cert.render(), "certificate": cert, "pass": cert.passes()});
    let rows = vec![
        vec!["NK-".into(), cert.nk_minus.to_string()],
        vec!["scoker".into(), cert.scoker.to_string()],
        vec!["NK+".into(), cert.nk_plus.to_string()],
        vec!["sker".into(), cert.sker.to_string()],
        vec!["K0(R)".into(), cert.k0_r.to_string()],
        vec!["K-1".into(), cert.k_minus1.to_string()],
        vec!["left map well defined".into(), yes_no(cert.left_well_defined)],
        vec!["left map injective".into(), yes_no(cert.left_injective)],
        vec!["exact at K0(R)".into(), yes_no(cert.exact_at_k0_r)],
        vec!["right map surjective".into(), yes_no(cert.right_surjective)],
    ];
    let mut text = vec![format!("ft0 for {}", pkg.name), cert.render(), table(&["item", "value"], &rows)];
    if let Some(w) = &cert.witness {
        text.push(format!("witness: {w}"));
    }
    text.push(pass_line(verdict));
    Ok(Report { verdict, json, text: text.join("\n") })
}

pub fn mv0(path: &Path) -> CliResult {
    let pkg = load_package(path)?;
    let cert = mv0_check(&pkg)?;
    let verdict = Verdict::from_bool(cert.passes());
    let json = json!({"command": "mv0", "certificate": cert, "pass": cert.passes()});
    let rows = vec![
        vec!["exact at K0(R<=0) + K0(R>=0)".into(), yes_no(cert.exact_at_halves)],
        vec!["exact at K0(R)".into(), yes_no(cert.exact_at_k0_r)],
        vec!["right map surjective".into(), yes_no(cert.right_surjective)],
    ];
    let mut text = vec![format!("mv0 for {}", pkg.name), table(&["item", "value"], &rows)];
    if let Some(w) = &cert.witness {
        text.push(format!("witness: {w}"));
    }
    text.push(pass_line(verdict));
    Ok(Report { verdict, json, text: text.join("\n") })
}

fn load_complex(path: &Path) -> Result<ChainComplex, CliError> {
    Ok(ComplexSpec::parse(&read(path)?)?.build()?)
}

pub fn homology_cmd(path: &Path, cap: u32) -> CliResult {
    let c = load_complex(path)?;
    let ring = c.ring();
    let h = homology(&c)?;
    let mut json = json!({
        "command": "homology",
        "complex": complex_json(&c),
        "homology": homology_json(&h),
        "acyclic": h.is_zero(),
    });
    let mut text = vec![complex_text(&c), table(&["degree", "homology"], &homology_rows(&h))];
    text.push(format!("acyclic: {}", yes_no(h.is_zero())));
    if ring.support == Support::NonNeg && ring.base.is_field() {
        let dom = r0_finite_domination(&c, cap)?;
        json["domination"] = json!({
            "dominated": dom.dominated,
            "witness_exponent": dom.witness,
            "cap": dom.cap,
            "laurent_homology": homology_json(&dom.laurent_homology),
        });
        let witness = match (dom.dominated, dom.witness) {
            (false, _) => String::new(),
            (true, Some(n)) => format!(", t^{n} null-homotopic"),
            (true, None) => format!(", unknown witness up to cap {}", dom.cap),
        };
        text.push(format!("R0-finitely dominated: {}{witness}", yes_no(dom.dominated)));
    }
    Ok(Report { verdict: Verdict::Pass, json, text: text.join("\n") })
}

pub fn lift(path: &Path, target: &str, policy: &str) -> CliResult {
    let c = load_complex(path)?;
    let support = match target {
        "Rle0" => Support::NonPos,
        "Rge0" => Support::NonNeg,
        other => return Err(CliError::Input(format!("--target must be Rle0 or Rge0, got {other:?}"))),
    };
    let policy = match policy {
        "minimal" => PadPolicy::Minimal,
        "proof" => PadPolicy::ProofStyle,
        other => return Err(CliError::Input(format!("--policy must be minimal or proof, got {other:?}"))),
    };
    if c.ring().support != Support::Full {
        return Err(CliError::Input(format!("lift needs a complex over R, got ring tag {}", c.ring().support.tag())));
    }
    let acyclic = is_acyclic(&c)?;
    let (method, pads, stabilized, lifted, iso) = if acyclic {
        let l = lift_acyclic(&c, support)?;
        ("lift_acyclic", l.pads, l.stabilized, l.lifted, l.iso)
    } else {
        let l = make_induced(&c, support, policy)?;
        ("make_induced", l.pads, l.stabilization.complex, l.truncation.lifted, l.truncation.iso)
    };
    let ring = c.ring();
    let iso_json: Vec<Value> = iso
        .components()
        .iter()
        .map(|(k, m)| json!({"degree": k, "matrix": matrix_json(m, &ring)}))
        .collect();
    let json = json!({
        "command": "lift",
        "method": method,
        "target": target,
        "pads": pads,
        "stabilized": complex_json(&stabilized),
        "lifted": complex_json(&lifted),
        "iso": iso_json,
    });
    let mut text = vec![
        format!("{method} to {}", ring_name(&lifted.ring())),
        format!("pads (level, rank): {pads:?}"),
        "lifted complex:".into(),
        complex_text(&lifted),
        "iso lifted (x) R -> stabilized:".into(),
    ];
    for (k, m) in iso.components() {
        text.push(format!("degree {k}:"));
        text.push(matrix_text(m, &ring));
    }
    Ok(Report { verdict: Verdict::Pass, json, text: text.join("\n") })
}

pub fn nil(path: &Path, bound: u32) -> CliResult {
    let e = TwistedSpec::parse(&read(path)?)?.build()?;
    let m = nil_membership(&e)?;
    let strict = is_nilpotent(&e, bound)?;
    let verdict = Verdict::from_bool(m.member && m.cross_check_agrees && m.half_torus_certified);
    let witness = if m.homotopy_nilpotent { None } else { Some(localized_half_torus_homology(&e)?) };
    let json = json!({
        "command": "nil",
        "membership": m,
        "strict_search": strict,
        "witness": witness.as_ref().map(|h| json!({
            "description": "homology of the mapping half-torus tensored up to R",
            "homology": homology_json(h),
        })),
    });
    let strict_text = match strict.index {
        Some(n) => format!("strictly nilpotent of index {n}"),
        None => format!("not strictly nilpotent up to {}", strict.bound),
    };
    let mut text = vec![
        format!("twisted endomorphism, sign {:?}", e.sign()).to_lowercase(),
        strict_text,
        if m.homotopy_nilpotent { "homotopy nilpotent".into() } else { "not homotopy nilpotent".into() },
        format!("member of the nil category: {}", yes_no(m.member)),
    ];
    if let Some(h) = &witness {
        text.push("witness: homology of the half-torus over R".into());
        text.push(table(&["degree", "homology"], &homology_rows(h)));
    }
    for f in &m.failures {
        text.push(format!("failure: {f}"));
    }
    Ok(Report { verdict, json, text: text.join("\n") })
}

pub fn sheaf_cohomology(path: &Path) -> CliResult {
    let y = SheafSpec::parse(&read(path)?)?.build()?;
    if let Err(v) = y.check_sheaf_condition() {
        let map = if v.map.starts_with("upsilon_minus") { y.upsilon_minus() } else { y.upsilon_plus() };
        let matrix = matrix_json(&map.component(v.degree), &y.ring());
        let json = json!({
            "command": "sheaf-cohomology",
            "sheaf_condition": {"holds": false, "map": v.map, "degree": v.degree, "reason": v.reason, "matrix": matrix},
        });
        let text = format!("sheaf condition fails: {} in chain degree {}: {}", v.map, v.degree, v.reason);
        return Ok(Report { verdict: Verdict::Fail, json, text });
    }
    let h = cohomology(&y)?;
    let classes = h_equivalence_class(&SheafMorphism::to_zero(&y)?)?;
    let json = json!({
        "command": "sheaf-cohomology",
        "sheaf_condition": {"holds": true},
        "twist": [y.twist_data().0, y.twist_data().1],
        "cohomology": h,
        "h0_total": h.h0_total(),
        "h1_total": h.h1_total(),
        "acyclic_components": classes,
    });
    let mut text = vec![table(
        &["chain degree", "H0", "H1"],
        &h.levels.iter().map(|l| vec![l.degree.to_string(), l.h0.to_string(), l.h1.to_string()]).collect::<Vec<_>>(),
    )];
    let mut rows = vec![];
    for l in &h.levels {
        for p in l.graded.iter().flatten().filter(|p| p.h0 + p.h1 > 0) {
            rows.push(vec![l.degree.to_string(), p.t_degree.to_string(), p.h0.to_string(), p.h1.to_string()]);
        }
    }
    if !rows.is_empty() {
        text.push("graded pieces (nonzero only):".into());
        text.push(table(&["chain degree", "t-degree", "rank H0", "rank H1"], &rows));
    }
    text.push(format!("total: H0 rank {}, H1 rank {}", h.h0_total(), h.h1_total()));
    Ok(Report { verdict: Verdict::Pass, json, text: text.join("\n") })
}

pub fn probe_vect0(path: &Path, window: i64) -> CliResult {
    let y = SheafSpec::parse(&read(path)?)?.build()?;
    let probe = vect0_probe(&y, window)?;
    let verdict = Verdict::from_bool(probe.pass);
    let json = json!({"command": "probe-vect0", "probe": probe});
    let failing: Vec<Vec<String>> = probe
        .points
        .iter()
        .filter(|p| !p.pass)
        .map(|p| vec![p.k.to_string(), p.l.to_string(), p.h1.to_string()])
        .collect();
    let mut text = vec![format!("checked {} twists with |k|, |l| <= {window} and k + l >= 0", probe.points.len())];
    if failing.is_empty() {
        text.push("H1 vanishes at every probed twist".into());
    } else {
        text.push(table(&["k", "l", "rank H1"], &failing));
    }
    text.push(probe.note.to_string());
    text.push(pass_line(verdict));
    Ok(Report { verdict, json, text: text.join("\n") })
}

fn pass_line(v: Verdict) -> String {
    match v {
        Verdict::Pass => "PASS".into(),
        Verdict::Fail => "FAIL".into(),
    }
}
