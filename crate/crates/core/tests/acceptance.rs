//! Acceptance criteria, one line per criterion with its time limit.
//!
//! Runs without the libtest harness so the lines always print; exits nonzero when any
//! criterion fails. `GK_SEED` overrides the instance seed.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::{env_seed, q, random_complex, random_laurent, rng, scramble};
use gradedk::algebra::laurent::lp;
use gradedk::algebra::{BaseRing, Laurent, LaurentRing, Matrix, Ring, Support};
use gradedk::homology::{
    base_change, homology, is_acyclic, mapping_cone, r0_finite_domination, stabilize, ChainComplex, ChainMap, RingMap,
    DEFAULT_WITNESS_CAP,
};
use gradedk::k_zero::{euler_class, ft0_check, mv0_check, shift_difference, K0Package, ShiftChoice};
use gradedk::lifting::{lift_acyclic, make_induced, PadPolicy};
use gradedk::projective_line::{cohomology, psi};
use gradedk::ring_kernel::{confluence_probe, parse_element, strong_grading_witness, GradedElement, GradedRingSpec, Graph};
use gradedk::twisted_nil::{
    characteristic_sequence, chi, chi_with_witness, is_homotopy_nilpotent, is_nilpotent, localized_half_torus_homology,
    Sign, TwistedEndomorphism,
};
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn q0() -> LaurentRing {
    LaurentRing::new(BaseRing::Rationals, Support::Zero)
}

fn full() -> LaurentRing {
    LaurentRing::new(BaseRing::Rationals, Support::Full)
}

fn half() -> LaurentRing {
    LaurentRing::new(BaseRing::Rationals, Support::NonNeg)
}

fn free(n: usize) -> String {
    match n {
        0 => "0".into(),
        1 => "Z".into(),
        n => format!("Z^{n}"),
    }
}

fn ft0_laurent() -> Outcome {
    let pkg = K0Package::laurent(BaseRing::Rationals);
    let cert = ft0_check(&pkg).map_err(err)?;
    let seen = [&cert.nk_minus, &cert.scoker, &cert.nk_plus, &cert.k0_r, &cert.k_minus1].map(ToString::to_string);
    ensure(seen == ["0", "Z", "0", "Z", "0"], || format!("groups NK-, scoker, NK+, K0(R), K-1 = {seen:?}"))?;
    ensure(cert.passes(), || format!("certificate fails: {cert:?}"))?;
    Ok(cert.render())
}

/// One permutation per cycle type of `n`, with the number of cycles read off the
/// partition.
fn cycle_types(n: usize) -> Vec<(Vec<usize>, usize)> {
    fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = vec![];
        for first in (1..=max.min(n)).rev() {
            for mut rest in partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    partitions(n, n)
        .into_iter()
        .map(|parts| {
            let mut sigma = vec![0; n];
            let mut start = 0;
            for &len in &parts {
                for i in 0..len {
                    sigma[start + i] = start + (i + 1) % len;
                }
                start += len;
            }
            (sigma, parts.len())
        })
        .collect()
}

fn shift_action() -> Outcome {
    let mut instances = 0;
    let mut slowest = Duration::ZERO;
    for n in 1..=5 {
        for (sigma, cycles) in cycle_types(n) {
            let started = Instant::now();
            let pkg = K0Package::skew_permutation(BaseRing::Rationals, sigma.clone()).map_err(err)?;
            let sd = shift_difference(&pkg, ShiftChoice::MinusOne).map_err(err)?;
            let cert = ft0_check(&pkg).map_err(err)?;
            let want = free(cycles);
            ensure(sd.sker.to_string_form() == want, || format!("{sigma:?}: sker {} != {want}", sd.sker.to_string_form()))?;
            ensure(sd.scoker.to_string_form() == want, || format!("{sigma:?}: scoker {} != {want}", sd.scoker.to_string_form()))?;
            ensure(cert.k0_r.to_string() == want, || format!("{sigma:?}: K0(R) {} != {want}", cert.k0_r))?;
            ensure(cert.passes(), || format!("{sigma:?}: ft0 fails"))?;
            ensure(mv0_check(&pkg).map_err(err)?.passes(), || format!("{sigma:?}: mv0 fails"))?;
            let took = started.elapsed();
            ensure(took < Duration::from_secs(1), || format!("{sigma:?} took {took:?}"))?;
            slowest = slowest.max(took);
            instances += 1;
        }
    }
    Ok(format!("{instances} cycle types, slowest {slowest:.2?}"))
}

fn gamma_psi() -> Outcome {
    let mut checked = 0;
    for r in 0..=3 {
        let p = ChainComplex::concentrated(q0(), 0, r);
        for k in -3i64..=3 {
            for l in -3i64..=3 {
                let h = cohomology(&psi(&p, k, l).map_err(err)?).map_err(err)?;
                let (h0, h1) = (h.h0_total() as i64, h.h1_total() as i64);
                let r = r as i64;
                let at = || format!("r={r}, k={k}, l={l}: H0={h0}, H1={h1}");
                ensure(h0 == r * (k + l + 1).max(0), at)?;
                ensure(k + l < -1 || h1 == 0, at)?;
                ensure(h0 - h1 == r * (k + l + 1), at)?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} sheaves"))
}

fn small_constant(r: &mut ChaCha8Rng, height: i64) -> Laurent {
    lp(&[(0, r.gen_range(-height..=height))])
}

fn constant_matrix(r: &mut ChaCha8Rng, rows: usize, cols: usize, height: i64) -> Matrix<Laurent> {
    Matrix::from_fn(rows, cols, |_, _| small_constant(r, height))
}

/// Zero differentials and an arbitrary `α`, strictly upper triangular when asked.
fn graded_endo(r: &mut ChaCha8Rng, sign: Sign, strict: bool) -> TwistedEndomorphism {
    let ranks: Vec<usize> = loop {
        let ranks: Vec<usize> = (0..r.gen_range(1..=3)).map(|_| r.gen_range(0..=3)).collect();
        if (1..=4).contains(&ranks.iter().sum::<usize>()) {
            break ranks;
        }
    };
    let diffs = (1..ranks.len()).map(|i| Matrix::zero(&q0(), ranks[i - 1], ranks[i])).collect();
    let c = ChainComplex::new(q0(), 0, ranks, diffs).unwrap();
    let comps = c
        .degrees()
        .map(|k| {
            let n = c.rank(k);
            let mut a = constant_matrix(r, n, n, 3);
            if strict {
                for i in 0..n {
                    for j in 0..=i {
                        a.set(i, j, Laurent::zero());
                    }
                }
            }
            (k, a)
        })
        .collect();
    TwistedEndomorphism::new(ChainMap::new(c.clone(), c, comps).unwrap(), sign).unwrap()
}

/// `α = c·id + d h + h d` on `c`, a chain map for any `h`.
fn homotopic_endo(r: &mut ChaCha8Rng, c: &ChainComplex, sign: Sign) -> TwistedEndomorphism {
    let ring = q0();
    let scale = r.gen_range(-1..=1);
    let h: BTreeMap<i64, Matrix<Laurent>> =
        (c.bottom() - 1..=c.top()).map(|k| (k, constant_matrix(r, c.rank(k + 1), c.rank(k), 1))).collect();
    let comps = c
        .degrees()
        .map(|k| {
            let homotopy = c.d(k + 1).mul(&ring, &h[&k]).add(&ring, &h[&(k - 1)].mul(&ring, &c.d(k)));
            (k, Matrix::scalar(&ring, c.rank(k), &lp(&[(0, scale)])).add(&ring, &homotopy))
        })
        .collect();
    TwistedEndomorphism::new(ChainMap::new(c.clone(), c.clone(), comps).unwrap(), sign).unwrap()
}

fn small_complex(r: &mut ChaCha8Rng, ring: LaurentRing, max_total: usize) -> ChainComplex {
    loop {
        let c = random_complex(r, ring, 0, 3, max_total);
        if c.total_rank() <= max_total {
            return c;
        }
    }
}

fn witnesses() -> Vec<gradedk::ring_kernel::StrongGradingWitness> {
    let ring = Arc::new(GradedRingSpec::laurent(BaseRing::Rationals));
    let el = |s: &str| parse_element(&ring, s).unwrap();
    vec![
        gradedk::ring_kernel::StrongGradingWitness {
            pos: vec![(el("2 t"), el("1/2 t^-1"))],
            neg: vec![(el("3 t^-1"), el("1/3 t"))],
        },
        gradedk::ring_kernel::StrongGradingWitness {
            pos: vec![(el("t"), el("1/4 t^-1")), (el("3 t"), el("1/4 t^-1"))],
            neg: vec![(el("t^-1"), el("t"))],
        },
    ]
}

fn characteristic(seed: u64) -> Outcome {
    let mut r = rng(seed);
    let alternates = witnesses();
    for w in &alternates {
        w.verify().map_err(err)?;
    }
    for i in 0..200 {
        let sign = if i % 2 == 0 { Sign::Positive } else { Sign::Negative };
        let e = if i % 4 < 2 {
            graded_endo(&mut r, sign, false)
        } else {
            let c = small_complex(&mut r, q0(), 4);
            homotopic_endo(&mut r, &c, sign)
        };
        let cert = characteristic_sequence(&e).map_err(err)?;
        ensure(cert.holds(), || format!("instance {i}: {cert:?}"))?;
        let base = chi(&e).map_err(err)?;
        for w in &alternates {
            ensure(chi_with_witness(&e, w).map_err(err)? == base, || format!("instance {i}: chi depends on the witness"))?;
        }
    }
    Ok(format!("200 instances, {} alternate witnesses", alternates.len()))
}

/// Rank of the constant part over Q by Gaussian elimination.
fn rational_rank(m: &Matrix<Laurent>) -> usize {
    let mut rows: Vec<Vec<BigRational>> = (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).coeff(0)).collect()).collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(rank, p);
        for i in 0..rows.len() {
            if i != rank && !rows[i][col].is_zero() {
                let f = &rows[i][col] / &rows[rank][col];
                let pivot = rows[rank].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn betti_total(c: &ChainComplex) -> usize {
    c.degrees().map(|k| c.rank(k) - rational_rank(&c.d(k)) - rational_rank(&c.d(k + 1))).sum()
}

fn trichotomy(seed: u64, acyclic: &mut Vec<ChainComplex>) -> Outcome {
    let mut r = rng(seed);
    let mut counts = [0; 3];
    for i in 0..100 {
        let sign = if r.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
        match i % 3 {
            0 => {
                let e = graded_endo(&mut r, sign, true);
                ensure(is_nilpotent(&e, 8).map_err(err)?.nilpotent, || format!("instance {i}: not strictly nilpotent"))?;
                ensure(is_homotopy_nilpotent(&e).map_err(err)?, || format!("instance {i}: nilpotent but not homotopy nilpotent"))?;
            }
            1 => {
                let c = loop {
                    let c = small_complex(&mut r, q0(), 4);
                    if betti_total(&c) > 0 {
                        break c;
                    }
                };
                let e = TwistedEndomorphism::new(ChainMap::identity(&c), sign).map_err(err)?;
                ensure(!is_homotopy_nilpotent(&e).map_err(err)?, || format!("instance {i}: identity is homotopy nilpotent"))?;
                let h = localized_half_torus_homology(&e).map_err(err)?;
                let factors: Vec<String> = h.degrees.iter().flat_map(|d| d.torsion.iter().map(ToString::to_string)).collect();
                let free: usize = h.degrees.iter().map(|d| d.free_rank).sum();
                ensure(free == 0 && factors.iter().all(|f| f == "t - 1"), || format!("instance {i}: witness {factors:?}"))?;
                ensure(factors.len() == betti_total(&c), || format!("instance {i}: {} copies of R/(t-1), Betti total {}", factors.len(), betti_total(&c)))?;
            }
            _ => {
                let x = small_complex(&mut r, q0(), 2);
                let c = mapping_cone(&ChainMap::identity(&x)).map_err(err)?;
                let e = homotopic_endo(&mut r, &c, sign);
                ensure(is_homotopy_nilpotent(&e).map_err(err)?, || format!("instance {i}: contractible but not homotopy nilpotent"))?;
                acyclic.push(c);
            }
        }
        counts[i % 3] += 1;
    }
    Ok(format!("{} strictly nilpotent, {} identities, {} contractible", counts[0], counts[1], counts[2]))
}

/// Determinant by cofactor expansion, independent of the Smith reduction.
fn det(ring: &LaurentRing, m: &Matrix<Laurent>) -> Laurent {
    let n = m.rows();
    if n == 0 {
        return ring.one();
    }
    let mut acc = ring.zero();
    for j in 0..n {
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let minor = Matrix::from_fn(n - 1, n - 1, |a, b| m.get(a + 1, cols[b]).clone());
        let term = ring.mul(m.get(0, j), &det(ring, &minor));
        acc = if j % 2 == 0 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
    }
    acc
}

/// `iso: source -> target` is a degreewise invertible chain map, checked entrywise.
fn check_iso(source: &ChainComplex, target: &ChainComplex, iso: &ChainMap) -> Result<(), String> {
    let ring = full();
    for k in source.bottom().min(target.bottom())..=source.top().max(target.top()) {
        let p = iso.component(k);
        ensure(source.rank(k) == target.rank(k), || format!("rank mismatch in degree {k}"))?;
        ensure(det(&ring, &p).as_monomial().is_some(), || format!("degree {k}: basis change not invertible"))?;
        let lhs = target.d(k).mul(&ring, &p);
        let rhs = iso.component(k - 1).mul(&ring, &source.d(k));
        ensure(lhs == rhs, || format!("degree {k}: iso does not commute with d"))?;
    }
    Ok(())
}

fn random_acyclic(r: &mut ChaCha8Rng) -> ChainComplex {
    loop {
        let mut d = ChainComplex::zero(full());
        for _ in 0..r.gen_range(1..=3) {
            let k = r.gen_range(1..=3);
            let unit = Laurent::monomial(q(r.gen_range(1..=3)), r.gen_range(-2..=2));
            let piece = ChainComplex::new(full(), k - 1, vec![1, 1], vec![Matrix::from_rows(vec![vec![unit]], 1)]).unwrap();
            d = d.direct_sum(&piece).unwrap();
        }
        if d.total_rank() <= 6 {
            return scramble(r, &d);
        }
    }
}

fn localize(target: Support) -> RingMap {
    if target == Support::NonPos {
        RingMap::LocalizeNonPos
    } else {
        RingMap::LocalizeNonNeg
    }
}

fn lifting(seed: u64, acyclic: &mut Vec<ChainComplex>) -> Outcome {
    let mut r = rng(seed);
    for i in 0..100 {
        let d = random_acyclic(&mut r);
        ensure(is_acyclic(&d).map_err(err)?, || format!("acyclic instance {i} has homology"))?;
        acyclic.push(d.clone());
        for target in [Support::NonPos, Support::NonNeg] {
            let lift = lift_acyclic(&d, target).map_err(err)?;
            ensure(is_acyclic(&lift.lifted).map_err(err)?, || format!("acyclic instance {i}: lift has homology"))?;
            let induced = base_change(localize(target), &lift.lifted).map_err(err)?;
            let expected = stabilize(&d, &lift.pads).map_err(err)?.complex;
            ensure(lift.stabilized == expected, || format!("acyclic instance {i}: stabilization differs"))?;
            check_iso(&induced, &expected, &lift.iso).map_err(|e| format!("acyclic instance {i}: {e}"))?;
            acyclic.push(lift.lifted);
            acyclic.push(expected);
        }
    }
    for i in 0..100 {
        let d = small_complex(&mut r, full(), 6);
        for target in [Support::NonPos, Support::NonNeg] {
            for policy in [PadPolicy::Minimal, PadPolicy::ProofStyle] {
                let lift = make_induced(&d, target, policy).map_err(err)?;
                let induced = base_change(localize(target), &lift.truncation.lifted).map_err(err)?;
                let expected = stabilize(&d, &lift.pads).map_err(err)?.complex;
                ensure(lift.stabilization.complex == expected, || format!("induced instance {i}: stabilization differs"))?;
                check_iso(&induced, &expected, &lift.truncation.iso).map_err(|e| format!("induced instance {i}: {e}"))?;
            }
        }
    }
    Ok("100 acyclic and 100 induced complexes, both halves".into())
}

/// Scrambled sum of one-step pieces over `R>=0`, mostly `c·t^j`, which become units in
/// `R`, so that dominated and non-dominated complexes both occur often.
fn half_line_complex(r: &mut ChaCha8Rng, max_total: usize) -> ChainComplex {
    let ring = half();
    let mut c = ChainComplex::zero(ring);
    while c.total_rank() + 2 <= max_total + 1 && (c.total_rank() == 0 || r.gen_bool(0.6)) {
        let k = r.gen_range(0..=2);
        let roll = r.gen_range(0..10);
        let piece = if roll < 7 {
            let entry = Laurent::monomial(q(r.gen_range(1..=3)), r.gen_range(0..=2));
            ChainComplex::new(ring, k, vec![1, 1], vec![Matrix::from_rows(vec![vec![entry]], 1)]).unwrap()
        } else if roll < 9 {
            let entry = Laurent::from_terms([(0, q(r.gen_range(1..=2))), (1, q(r.gen_range(1..=2)))]);
            ChainComplex::new(ring, k, vec![1, 1], vec![Matrix::from_rows(vec![vec![entry]], 1)]).unwrap()
        } else {
            ChainComplex::concentrated(ring, k, 1)
        };
        c = c.direct_sum(&piece).unwrap();
    }
    scramble(r, &c)
}

/// `X -f-> Y = X ⊕ Z`, with `f = t^a·c·id + d h + h d` on the `X` summand.
fn random_split_sequence(r: &mut ChaCha8Rng) -> (ChainComplex, ChainComplex, ChainComplex) {
    let ring = half();
    let x = half_line_complex(r, 3);
    let z = half_line_complex(r, 3);
    let y = x.direct_sum(&z).unwrap();
    let scale = Laurent::monomial(q(r.gen_range(0..=2)), r.gen_range(0..=1));
    let h: BTreeMap<i64, Matrix<Laurent>> = (x.bottom() - 1..=x.top())
        .map(|k| (k, Matrix::from_fn(x.rank(k + 1), x.rank(k), |_, _| random_laurent(r, 0, 1, 0.3))))
        .collect();
    let h_at = |k: i64| h.get(&k).cloned().unwrap_or_else(|| Matrix::zero(&ring, x.rank(k + 1), x.rank(k)));
    let comps = y
        .degrees()
        .map(|k| {
            let homotopy = x.d(k + 1).mul(&ring, &h_at(k)).add(&ring, &h_at(k - 1).mul(&ring, &x.d(k)));
            let on_x = Matrix::scalar(&ring, x.rank(k), &scale).add(&ring, &homotopy);
            (k, Matrix::from_blocks(&ring, &[vec![on_x], vec![Matrix::zero(&ring, z.rank(k), x.rank(k))]]))
        })
        .collect();
    let f = ChainMap::new(x.clone(), y.clone(), comps).unwrap();
    let cone = mapping_cone(&f).unwrap();
    (y, cone, x.suspension())
}

fn two_of_three(seed: u64) -> Outcome {
    let mut r = rng(seed);
    let mut tally = [0usize; 4];
    for i in 0..50 {
        let (a, b, c) = random_split_sequence(&mut r);
        let mut dominated = 0;
        for part in [&a, &b, &c] {
            let dom = r0_finite_domination(part, DEFAULT_WITNESS_CAP).map_err(err)?;
            if dom.dominated {
                ensure(dom.witness.is_some(), || format!("instance {i}: dominated without a witness exponent"))?;
                dominated += 1;
            }
        }
        ensure(dominated != 2, || format!("instance {i}: exactly two of three dominated"))?;
        tally[dominated] += 1;
    }
    ensure(tally[3] > 0 && tally[3] < 50, || format!("vacuous sample: dominated counts {tally:?}"))?;
    Ok(format!("50 sequences; 0/1/2/3 dominated: {tally:?}"))
}

fn euler(acyclic: &[ChainComplex]) -> Outcome {
    for (i, c) in acyclic.iter().enumerate() {
        ensure(homology(c).map_err(err)?.is_zero(), || format!("instance {i} is not acyclic"))?;
        ensure(euler_class(c) == 0, || format!("instance {i}: euler class {}", euler_class(c)))?;
    }
    Ok(format!("{} acyclic instances", acyclic.len()))
}

fn strong_grading() -> Outcome {
    let mut rings = vec![
        GradedRingSpec::laurent(BaseRing::Rationals),
        GradedRingSpec::laurent(BaseRing::Prime(3)),
        GradedRingSpec::skew_laurent_perm(BaseRing::Rationals, vec![1, 2, 0]).map_err(err)?,
        GradedRingSpec::skew_laurent_perm(BaseRing::Rationals, vec![1, 0, 3, 2]).map_err(err)?,
        GradedRingSpec::relation_default(BaseRing::Rationals),
    ];
    for n in 2..=4 {
        rings.push(GradedRingSpec::leavitt(BaseRing::Rationals, Graph::rose(n)).map_err(err)?);
    }
    let sink_free = Graph::new(3, vec![(0, 1), (1, 2), (2, 0), (0, 0)]).map_err(err)?;
    rings.push(GradedRingSpec::leavitt(BaseRing::Rationals, sink_free).map_err(err)?);
    for ring in rings {
        let ring = Arc::new(ring);
        let name = ring.family.name();
        let w = strong_grading_witness(&ring).map_err(err)?;
        w.verify().map_err(|e| format!("{name}: {e}"))?;
        for sign in [1, -1] {
            let mut sum = GradedElement::zero(&ring);
            for (x, y) in w.pairs(sign) {
                sum = sum.add(&x.mul(y).map_err(err)?).map_err(err)?;
            }
            ensure(sum == GradedElement::one(&ring), || format!("{name}: pairs of sign {sign} sum to {}", sum.render()))?;
        }
        let report = confluence_probe(&ring, 4);
        ensure(report.all_agree, || format!("{name}: confluence fails"))?;
    }
    Ok("10 rings, confluence at length 4".into())
}

fn main() -> ExitCode {
    let seed = env_seed(0x5eed);
    let mut acyclic = vec![];
    let mut failures = 0;
    let mut report = |n: u32, title: &str, limit: Option<Duration>, run: &mut dyn FnMut() -> Outcome| {
        let started = Instant::now();
        let outcome = run();
        let took = started.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(limit)) if took > limit => Err(format!("took {took:.2?}, limit {limit:?}")),
            (o, _) => o,
        };
        let limit = limit.map_or("exact".into(), |l| format!("limit {l:?}"));
        match outcome {
            Ok(detail) => println!("criterion {n}: PASS  {title} ({detail}; {took:.2?}, {limit})"),
            Err(why) => {
                failures += 1;
                println!("criterion {n}: FAIL  {title} ({why}; {took:.2?}, {limit})");
            }
        }
    };
    println!("acceptance seed {seed}");
    report(1, "K0 sequence for Q[t,t^-1]", Some(Duration::from_secs(1)), &mut ft0_laurent);
    report(2, "shift action on skew-permutation rings", None, &mut shift_action);
    report(3, "sections of canonical sheaves", Some(Duration::from_secs(5)), &mut gamma_psi);
    report(4, "characteristic sequence", Some(Duration::from_secs(30)), &mut || characteristic(seed));
    report(5, "nilpotency trichotomy", Some(Duration::from_secs(30)), &mut || trichotomy(seed + 1, &mut acyclic));
    report(6, "lifting round trip", Some(Duration::from_secs(60)), &mut || lifting(seed + 2, &mut acyclic));
    report(7, "two-of-three finite domination", Some(Duration::from_secs(60)), &mut || two_of_three(seed + 3));
    report(8, "Euler class of acyclic complexes", None, &mut || euler(&acyclic));
    report(9, "strong grading and confluence", Some(Duration::from_secs(10)), &mut strong_grading);
    if failures == 0 {
        println!("all 9 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("{failures} of 9 criteria fail");
        ExitCode::FAILURE
    }
}
