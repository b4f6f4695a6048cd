use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

use super::spec::{Family, GradedRingSpec, Graph};

/// Bound on rewrite steps for one normal-form computation; exceeding it counts as a
/// failed resolution rather than a hang.
const STEP_LIMIT: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Letter {
    Vertex(usize),
    Edge(usize),
    Ghost(usize),
    Gen(usize),
}

type Word = Vec<Letter>;
type Combination = BTreeMap<Word, BigRational>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Overlap {
    pub word: String,
    pub left: String,
    pub right: String,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfluenceReport {
    pub family: String,
    pub max_len: usize,
    /// Words of length at most `max_len` in which two redexes were resolved.
    pub words_checked: usize,
    /// Length-3 words whose two redexes overlap in the middle letter.
    pub overlaps: Vec<Overlap>,
    pub all_agree: bool,
    /// True when the family has no rewriting to probe (commutative monomials).
    pub vacuous: bool,
}

struct System<'a> {
    family: &'a Family,
}

impl System<'_> {
    fn alphabet(&self) -> Vec<Letter> {
        match self.family {
            Family::Leavitt(g) => {
                let mut out: Vec<Letter> = (0..g.vertices()).map(Letter::Vertex).collect();
                out.extend((0..g.edges().len()).map(Letter::Edge));
                out.extend((0..g.edges().len()).map(Letter::Ghost));
                out
            }
            Family::Relation { .. } => (0..4).map(Letter::Gen).collect(),
            _ => vec![],
        }
    }

    /// Replacement for the two-letter redex `xy`, or `None` if `xy` is irreducible.
    fn rule(&self, x: Letter, y: Letter) -> Option<Vec<(Word, BigRational)>> {
        let one = BigRational::one;
        match self.family {
            Family::Relation { .. } => match (x, y) {
                (Letter::Gen(a), Letter::Gen(b)) if a > b => Some(vec![(vec![y, x], one())]),
                (Letter::Gen(0), Letter::Gen(1)) => Some(vec![
                    (vec![], one()),
                    (vec![Letter::Gen(2), Letter::Gen(3)], -one()),
                ]),
                _ => None,
            },
            Family::Leavitt(g) => leavitt_rule(g, x, y),
            _ => None,
        }
    }

    fn rewrite_at(&self, word: &Word, pos: usize) -> Option<Combination> {
        let rep = self.rule(word[pos], word[pos + 1])?;
        let mut out = Combination::new();
        for (mid, c) in rep {
            let mut w = word[..pos].to_vec();
            w.extend(mid);
            w.extend_from_slice(&word[pos + 2..]);
            *out.entry(w).or_default() += c;
        }
        out.retain(|_, c| !c.is_zero());
        Some(out)
    }

    fn redexes(&self, word: &Word) -> Vec<usize> {
        (0..word.len().saturating_sub(1)).filter(|&i| self.rule(word[i], word[i + 1]).is_some()).collect()
    }

    /// Leftmost-first normal form; `None` if the step limit is hit.
    fn normal_form(&self, start: &Combination) -> Option<Combination> {
        let mut pending: Vec<(Word, BigRational)> = start.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = Combination::new();
        let mut steps = 0;
        while let Some((w, c)) = pending.pop() {
            match self.redexes(&w).first() {
                None => *out.entry(w).or_default() += c,
                Some(&i) => {
                    steps += 1;
                    if steps > STEP_LIMIT {
                        return None;
                    }
                    for (v, k) in self.rewrite_at(&w, i).expect("redex") {
                        pending.push((v, &c * k));
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Some(out)
    }
}

fn leavitt_rule(g: &Graph, x: Letter, y: Letter) -> Option<Vec<(Word, BigRational)>> {
    use Letter::*;
    let one = BigRational::one();
    let keep = |w: Word| Some(vec![(w, BigRational::one())]);
    let cond = |ok: bool, w: Word| if ok { keep(w) } else { Some(vec![]) };
    match (x, y) {
        (Vertex(v), Vertex(w)) => cond(v == w, vec![x]),
        (Vertex(v), Edge(e)) => cond(g.source(e) == v, vec![y]),
        (Vertex(v), Ghost(e)) => cond(g.range(e) == v, vec![y]),
        (Edge(e), Vertex(v)) => cond(g.range(e) == v, vec![x]),
        (Ghost(e), Vertex(v)) => cond(g.source(e) == v, vec![x]),
        (Edge(e), Edge(f)) if g.range(e) != g.source(f) => Some(vec![]),
        (Ghost(e), Ghost(f)) if g.range(f) != g.source(e) => Some(vec![]),
        (Ghost(e), Edge(f)) => cond(e == f, vec![Vertex(g.range(e))]),
        (Edge(e), Ghost(f)) if g.range(e) != g.range(f) => Some(vec![]),
        (Edge(e), Ghost(f)) if e == f && g.special_edge(g.source(e)) == Some(e) => {
            let v = g.source(e);
            let mut out = vec![(vec![Vertex(v)], one)];
            for h in g.out_edges(v) {
                if h != e {
                    out.push((vec![Edge(h), Ghost(h)], -BigRational::one()));
                }
            }
            Some(out)
        }
        _ => None,
    }
}

fn render_letter(l: Letter) -> String {
    match l {
        Letter::Vertex(v) => format!("v{}", v + 1),
        Letter::Edge(e) => format!("e{}", e + 1),
        Letter::Ghost(e) => format!("e{}*", e + 1),
        Letter::Gen(i) => ["A", "B", "C", "D"][i].to_string(),
    }
}

fn render_word(w: &Word) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(|l| render_letter(*l)).collect::<Vec<_>>().join(" ")
    }
}

fn render_combination(c: &Option<Combination>) -> String {
    let Some(c) = c else { return "<step limit>".into() };
    if c.is_empty() {
        return "0".into();
    }
    c.iter()
        .map(|(w, k)| format!("({})*{}", crate::algebra::BaseRing::render_coeff(k), render_word(w)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Exhaustively resolves every pair of redexes in words up to `max_len` letters.
pub fn confluence_probe(ring: &GradedRingSpec, max_len: usize) -> ConfluenceReport {
    let sys = System { family: &ring.family };
    let alphabet = sys.alphabet();
    let mut report = ConfluenceReport {
        family: ring.family.name().into(),
        max_len,
        words_checked: 0,
        overlaps: vec![],
        all_agree: true,
        vacuous: alphabet.is_empty(),
    };
    if alphabet.is_empty() {
        return report;
    }
    let mut layer: Vec<Word> = vec![vec![]];
    for len in 1..=max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for &l in &alphabet {
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        layer = next;
        for w in &layer {
            let reds = sys.redexes(w);
            if reds.len() < 2 {
                continue;
            }
            report.words_checked += 1;
            let forms: Vec<Option<Combination>> = reds
                .iter()
                .map(|&i| sys.normal_form(&sys.rewrite_at(w, i).expect("redex")))
                .collect();
            let agree = forms.iter().all(|f| f.is_some() && *f == forms[0]);
            report.all_agree &= agree;
            if len == 3 && reds == [0, 1] {
                report.overlaps.push(Overlap {
                    word: render_word(w),
                    left: render_combination(&forms[0]),
                    right: render_combination(&forms[1]),
                    agree,
                });
            }
        }
    }
    report
}
