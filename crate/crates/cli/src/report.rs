use serde_json::Value;

use gradedk::algebra::{Laurent, LaurentRing, Matrix};
use gradedk::homology::{ring_name, ChainComplex, Homology};

/// Verdict of a command; a failing report still carries its certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
        }
    }
}

pub struct Report {
    pub verdict: Verdict,
    pub json: Value,
    pub text: String,
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = vec![line(header.to_vec())];
    out.push(line(widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().iter().map(String::as_str).collect()));
    for row in rows {
        out.push(line(row.iter().map(String::as_str).collect()));
    }
    out.join("\n")
}

pub fn matrix_json(m: &Matrix<Laurent>, ring: &LaurentRing) -> Value {
    Value::from(m.render(ring).into_iter().map(Value::from).collect::<Vec<_>>())
}

pub fn matrix_text(m: &Matrix<Laurent>, ring: &LaurentRing) -> String {
    if m.rows() == 0 || m.cols() == 0 {
        return format!("({}x{})", m.rows(), m.cols());
    }
    let rows = m.render(ring);
    let width = rows.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    rows.iter()
        .map(|r| format!("[ {} ]", r.iter().map(|s| format!("{s:>width$}")).collect::<Vec<_>>().join("  ")))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn complex_json(c: &ChainComplex) -> Value {
    let ring = c.ring();
    let diffs: Vec<Value> = c
        .degrees()
        .skip(1)
        .map(|k| serde_json::json!({"degree": k, "matrix": matrix_json(&c.d(k), &ring)}))
        .collect();
    serde_json::json!({
        "ring": ring_name(&ring),
        "bottom": c.bottom(),
        "ranks": c.ranks(),
        "differentials": diffs,
    })
}

pub fn complex_text(c: &ChainComplex) -> String {
    let ring = c.ring();
    let mut out = vec![format!("over {}, ranks {:?} from degree {}", ring_name(&ring), c.ranks(), c.bottom())];
    for k in c.degrees().skip(1) {
        out.push(format!("d_{k}:"));
        out.push(matrix_text(&c.d(k), &ring));
    }
    out.join("\n")
}

pub fn homology_json(h: &Homology) -> Value {
    Value::from(
        h.degrees
            .iter()
            .map(|d| {
                serde_json::json!({
                    "degree": d.degree,
                    "free_rank": d.free_rank,
                    "torsion": d.torsion.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "module": d.render(&h.ring),
                })
            })
            .collect::<Vec<_>>(),
    )
}

pub fn homology_rows(h: &Homology) -> Vec<Vec<String>> {
    h.degrees.iter().map(|d| vec![d.degree.to_string(), d.render(&h.ring)]).collect()
}

pub fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}
