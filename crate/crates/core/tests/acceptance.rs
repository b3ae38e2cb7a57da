use std::process::ExitCode;
use std::time::{Duration, Instant};

use equitable::exactla::{constrained_endomorphism_space, flatten, ExactMatrix, ShapeKind, Subspace};
use equitable::modmodel::checks::{closed_form_suite, flag_suite, pairing_suite, shape_suite};
use equitable::modmodel::{make_spec, FreeScalars, ModuleSpec};
use equitable::recognize::{
    detect_b, irreducibility_certificate, recognize_triple, Branch, Hints, Recurrence, ShapeTriple,
};
use equitable::repkit::{
    build_canonical, dagger_transpose_check, verify_algebra, Axis, BasisId, CanonicalFamily, DecompId,
    RepMatrices, SpaceId, VerificationReport,
};
use equitable::scalars::{parse_ratfunc, QRing, RatFunc, Scalar};
use equitable::transit::{rotator_suite, transition_suite};
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

const LIMIT_LITERALS: Duration = Duration::from_secs(1);
const LIMIT_SYMBOLIC_ALGEBRA: Duration = Duration::from_secs(60);
const LIMIT_NUMERIC_ALGEBRA: Duration = Duration::from_secs(30);
const SEED: u64 = 0x5eed_0001;

type Outcome = Result<String, String>;

fn sym() -> QRing<RatFunc> {
    QRing::symbolic()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn summarize(label: &str, r: &VerificationReport) -> Outcome {
    match r.failures().next() {
        None => Ok(format!("{} checks", r.len())),
        Some(f) => Err(format!("{label}: {} of {} failed, first: {f:?}", r.failures().count(), r.len())),
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    if t <= limit {
        Ok(())
    } else {
        Err(format!("took {:.1}s, limit {}s", t.as_secs_f64(), limit.as_secs()))
    }
}

fn spec<S: Scalar>(d: usize, ring: QRing<S>, free: FreeScalars<S>) -> Result<ModuleSpec<S>, String> {
    make_spec(d, ring, free).map_err(|e| format!("d = {d}: {e}"))
}

fn literal(rows: [[&str; 4]; 4]) -> ExactMatrix<RatFunc> {
    ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|s| parse_ratfunc(s).unwrap()).collect()).collect())
        .unwrap()
}

fn band(sub: bool, entries: [&str; 3]) -> ExactMatrix<RatFunc> {
    let mut rows = [["0"; 4]; 4];
    for (k, e) in entries.into_iter().enumerate() {
        if sub {
            rows[k + 1][k] = e;
        } else {
            rows[k][k + 1] = e;
        }
    }
    literal(rows)
}

fn literal_families() -> Vec<(&'static str, ExactMatrix<RatFunc>)> {
    let b2 = "(q + q^-1)";
    let b3 = "(q^2 + 1 + q^-2)";
    let qm1b2 = format!("q^-1*{b2}");
    let qm2b3 = format!("q^-2*{b3}");
    let q1b2 = format!("q*{b2}");
    let q2b3 = format!("q^2*{b3}");
    let (qm1b2, qm2b3, q1b2, q2b3) = (qm1b2.as_str(), qm2b3.as_str(), q1b2.as_str(), q2b3.as_str());
    vec![
        (
            "K",
            literal([["q^3", "0", "0", "0"], ["0", "q", "0", "0"], ["0", "0", "q^-1", "0"], ["0", "0", "0", "q^-3"]]),
        ),
        (
            "E",
            literal([
                ["q^-3", "q^3 - q^-3", "0", "0"],
                ["0", "q^-1", "q^3 - q^-1", "0"],
                ["0", "0", "q", "q^3 - q"],
                ["0", "0", "0", "q^3"],
            ]),
        ),
        (
            "E_{q^-1}",
            literal([
                ["q^3", "q^-3 - q^3", "0", "0"],
                ["0", "q", "q^-3 - q", "0"],
                ["0", "0", "q^-1", "q^-3 - q^-1"],
                ["0", "0", "0", "q^-3"],
            ]),
        ),
        (
            "E^t",
            literal([
                ["q^-3", "0", "0", "0"],
                ["q^3 - q^-3", "q^-1", "0", "0"],
                ["0", "q^3 - q^-1", "q", "0"],
                ["0", "0", "q^3 - q", "q^3"],
            ]),
        ),
        (
            "E^t_{q^-1}",
            literal([
                ["q^3", "0", "0", "0"],
                ["q^-3 - q^3", "q", "0", "0"],
                ["0", "q^-3 - q", "q^-1", "0"],
                ["0", "0", "q^-3 - q^-1", "q^-3"],
            ]),
        ),
        (
            "ZEZ",
            literal([
                ["q^3", "0", "0", "0"],
                ["q^3 - q", "q", "0", "0"],
                ["0", "q^3 - q^-1", "q^-1", "0"],
                ["0", "0", "q^3 - q^-3", "q^-3"],
            ]),
        ),
        (
            "ZE_{q^-1}Z",
            literal([
                ["q^-3", "0", "0", "0"],
                ["q^-3 - q^-1", "q^-1", "0", "0"],
                ["0", "q^-3 - q", "q", "0"],
                ["0", "0", "q^-3 - q^3", "q^3"],
            ]),
        ),
        (
            "ZE^tZ",
            literal([
                ["q^3", "q^3 - q", "0", "0"],
                ["0", "q", "q^3 - q^-1", "0"],
                ["0", "0", "q^-1", "q^3 - q^-3"],
                ["0", "0", "0", "q^-3"],
            ]),
        ),
        (
            "ZE^t_{q^-1}Z",
            literal([
                ["q^-3", "q^-3 - q^-1", "0", "0"],
                ["0", "q^-1", "q^-3 - q", "0"],
                ["0", "0", "q", "q^-3 - q^3"],
                ["0", "0", "0", "q^3"],
            ]),
        ),
        ("N", band(true, ["1", qm1b2, qm2b3])),
        ("N_{q^-1}", band(true, ["1", q1b2, q2b3])),
        ("N^t", band(false, ["1", qm1b2, qm2b3])),
        ("N^t_{q^-1}", band(false, ["1", q1b2, q2b3])),
        ("ZNZ", band(false, [qm2b3, qm1b2, "1"])),
        ("ZN_{q^-1}Z", band(false, [q2b3, q1b2, "1"])),
        ("ZN^tZ", band(true, [qm2b3, qm1b2, "1"])),
        ("ZN^t_{q^-1}Z", band(true, [q2b3, q1b2, "1"])),
    ]
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let ring = sym();
    let families = literal_families();
    for (name, expected) in &families {
        let family: CanonicalFamily = name.parse().map_err(|e| format!("{name}: {e}"))?;
        let built = build_canonical(&ring, family, 3);
        if &built != expected {
            return Err(format!("{name}: built {built:?}"));
        }
        for a in built.entries() {
            let text = a.to_string();
            if parse_ratfunc(&text).as_ref() != Ok(a) {
                return Err(format!("{name}: entry {text} does not reparse to itself"));
            }
        }
    }
    within(LIMIT_LITERALS, start)?;
    Ok(format!("{} d=3 matrices match", families.len()))
}

fn algebra_suite<S: Scalar>(ring: &QRing<S>, d: usize) -> VerificationReport {
    let mut r = VerificationReport::new();
    for b in BasisId::all() {
        for space in [SpaceId::V, SpaceId::VDual] {
            r.extend(&format!("{space} {b}"), verify_algebra(ring, space, b, d));
        }
        r.extend(&format!("dagger {b}"), dagger_transpose_check(ring, b, d));
    }
    r
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for d in 0..=8 {
        let r = algebra_suite(&sym(), d);
        summarize(&format!("d = {d}"), &r)?;
        total += r.len();
    }
    within(LIMIT_SYMBOLIC_ALGEBRA, start)?;
    Ok(format!("{total} checks, d 0..8, {:.1}s", start.elapsed().as_secs_f64()))
}

fn criterion_3() -> Outcome {
    let mut total = 0;
    for d in 0..=8 {
        let r = rotator_suite(&sym(), d);
        summarize(&format!("d = {d}"), &r)?;
        total += r.len();
    }
    Ok(format!("{total} checks, d 0..8"))
}

fn criterion_4() -> Outcome {
    let mut total = 0;
    for d in 0..=8 {
        let r = transition_suite(&spec(d, sym(), FreeScalars::ones())?);
        summarize(&format!("d = {d}"), &r)?;
        total += r.len();
    }
    Ok(format!("{total} checks, d 0..8"))
}

fn random_nonzero(rng: &mut StdRng) -> BigRational {
    let n: i64 = rng.random_range(1..50);
    let d: i64 = rng.random_range(1..50);
    if rng.random_bool(0.5) {
        rat(-n, d)
    } else {
        rat(n, d)
    }
}

fn random_free(rng: &mut StdRng) -> FreeScalars<RatFunc> {
    let mut free = FreeScalars::ones();
    for key in ["xy", "yz", "zx", "yx", "zy"] {
        free.set(key, RatFunc::from_rational(random_nonzero(rng))).unwrap();
    }
    free
}

fn criterion_5() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut total = 0;
    for d in 0..=8 {
        for (label, free) in [("all ones", FreeScalars::ones()), ("random", random_free(&mut rng))] {
            let r = pairing_suite(&spec(d, sym(), free)?);
            summarize(&format!("d = {d}, {label}"), &r)?;
            total += r.len();
        }
    }
    Ok(format!("{total} checks, d 0..8, two scalar assignments"))
}

fn criterion_6() -> Outcome {
    let mut total = 0;
    for d in 0..=6 {
        let r = flag_suite(&spec(d, sym(), FreeScalars::ones())?, false);
        summarize(&format!("d = {d}"), &r)?;
        total += r.len();
    }
    Ok(format!("{total} checks, d 0..6"))
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED ^ 7);
    let mut total = 0;
    for d in 0..=6 {
        for free in [FreeScalars::ones(), random_free(&mut rng)] {
            let r = closed_form_suite(&spec(d, sym(), free)?);
            summarize(&format!("d = {d}"), &r)?;
            total += r.len();
        }
    }
    Ok(format!("{total} checks, d 0..6"))
}

fn criterion_8() -> Outcome {
    let mut total = 0;
    for d in 0..=6 {
        let s = spec(d, sym(), FreeScalars::ones())?;
        let r = shape_suite(&s);
        summarize(&format!("d = {d}"), &r)?;
        total += r.len();
        let n = d + 1;
        let (lo, hi) = (DecompId::new(Axis::X, false), DecompId::new(Axis::Z, false));
        let strict = constrained_endomorphism_space(
            n,
            &[s.shape_constraint(lo, ShapeKind::Lowering), s.shape_constraint(hi, ShapeKind::Raising)],
        )
        .map_err(|e| e.to_string())?;
        let quasi = constrained_endomorphism_space(
            n,
            &[s.shape_constraint(lo, ShapeKind::QuasiRaising), s.shape_constraint(hi, ShapeKind::QuasiLowering)],
        )
        .map_err(|e| e.to_string())?;
        let v = s.reps(SpaceId::V);
        if !strict.contains(&flatten(v.nil(Axis::Y))) {
            return Err(format!("d = {d}: n_y outside the lowering/raising space"));
        }
        if !quasi.contains(&flatten(v.equitable(Axis::Y))) || !quasi.contains(&flatten(&ExactMatrix::identity(n))) {
            return Err(format!("d = {d}: y or 1 outside the quasi space"));
        }
        let expected = if d == 0 { (0, 1) } else { (1, 2) };
        if (strict.dim(), quasi.dim()) != expected {
            return Err(format!("d = {d}: dimensions {} and {}", strict.dim(), quasi.dim()));
        }
        if d == 0 && quasi != Subspace::span(1, &[flatten(&ExactMatrix::identity(1))]) {
            return Err("d = 0: quasi space is not the scalars".into());
        }
    }
    Ok(format!("{total} checks, d 0..6; dimensions 1 and 2 for d >= 1, 0 and 1 at d = 0 where n_y = 0 and y = 1"))
}

fn affine(m: &ExactMatrix<BigRational>, a1: &BigRational, a2: &BigRational) -> ExactMatrix<BigRational> {
    m.scale(a2).add(&ExactMatrix::identity(m.rows()).scale(a1))
}

fn criterion_9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED ^ 9);
    let mut trials = 0;
    for d in 2..=6 {
        for q in [rat(2, 1), rat(3, 1)] {
            let ring = QRing::numeric(q.clone()).map_err(|e| e.to_string())?;
            let reps = RepMatrices::new(&ring, SpaceId::V, BasisId::row(Axis::X), d);
            for _ in 0..4 {
                let scrambled: Vec<_> = [&reps.x, &reps.y, &reps.z]
                    .into_iter()
                    .map(|m| {
                        let shift = rat(rng.random_range(-40..40), rng.random_range(1..40));
                        affine(m, &shift, &random_nonzero(&mut rng))
                    })
                    .collect();
                let t = ShapeTriple::new(scrambled[0].clone(), scrambled[1].clone(), scrambled[2].clone())
                    .map_err(|e| e.to_string())?;
                let res = recognize_triple(&t, &Hints::default()).map_err(|e| format!("d = {d}, q = {q}: {e}"))?;
                let b = rat(1, 1) / (q.clone() * &q);
                if res.b != Some(b) {
                    return Err(format!("d = {d}, q = {q}: b = {:?}", res.b));
                }
                if !matches!(&res.branch, Branch::Quantum { q: found } if *found == q || *found == rat(1, 1) / q.clone()) {
                    return Err(format!("d = {d}: branch {:?}", res.branch));
                }
                if !res.certificate.all_passed() {
                    return Err(format!("d = {d}, q = {q}: certificate {}", res.certificate));
                }
                let normalized = res.normalized.ok_or("no normalized triple")?;
                if !irreducibility_certificate(&normalized) {
                    return Err(format!("d = {d}, q = {q}: not irreducible"));
                }
                trials += 1;
            }
        }
    }

    let m = |rows: &[&[i64]]| {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&a| rat(a, 1)).collect()).collect()).unwrap()
    };
    let t = ShapeTriple::new(m(&[&[-1, 0], &[0, 1]]), m(&[&[1, 0], &[1, -1]]), m(&[&[1, -4], &[0, -1]]))
        .map_err(|e| e.to_string())?;
    let res = recognize_triple(&t, &Hints { q: None, b: Some(rat(1, 1)) }).map_err(|e| e.to_string())?;
    if res.branch != Branch::ClassicalSl2 || !res.certificate.all_passed() {
        return Err(format!("classical fixture: {:?}\n{}", res.branch, res.certificate));
    }

    let seq = |xs: &[(i64, i64)]| xs.iter().map(|&(n, d)| rat(n, d)).collect::<Vec<_>>();
    for short in [seq(&[(7, 1)]), seq(&[(-1, 1), (1, 1)])] {
        if detect_b(&short) != Ok(Recurrence::Indeterminate) {
            return Err(format!("{short:?} is not indeterminate"));
        }
    }
    if detect_b(&seq(&[(4, 1), (1, 1), (1, 4)])) != Ok(Recurrence::Determined(rat(1, 4))) {
        return Err("(4, 1, 1/4) does not give b = 1/4".into());
    }
    if detect_b(&seq(&[(3, 1), (1, 1), (-1, 1), (-3, 1)])) != Ok(Recurrence::Determined(rat(1, 1))) {
        return Err("(3, 1, -1, -3) does not give b = 1".into());
    }
    for bad in [seq(&[(1, 1), (1, 1), (2, 1)]), seq(&[(1, 1), (2, 1), (4, 1), (5, 1)])] {
        if detect_b(&bad).is_ok() {
            return Err(format!("{bad:?} was accepted"));
        }
    }
    Ok(format!("{trials} scrambled triples, classical fixture, recurrence fixtures"))
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let ring = QRing::numeric(rat(2, 1)).map_err(|e| e.to_string())?;
    let mut total = 0;
    for d in 0..=16 {
        let r = algebra_suite(&ring, d);
        summarize(&format!("d = {d}"), &r)?;
        total += r.len();
    }
    within(LIMIT_NUMERIC_ALGEBRA, start)?;
    Ok(format!("{total} checks at q = 2, d 0..16, {:.1}s", start.elapsed().as_secs_f64()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("canonical d=3 matrices", criterion_1),
        ("algebra suite, symbolic", criterion_2),
        ("rotator suite", criterion_3),
        ("transition suite", criterion_4),
        ("pairing suite", criterion_5),
        ("flag and decomposition suite", criterion_6),
        ("closed-form consistency", criterion_7),
        ("shape characterizations", criterion_8),
        ("recognition round trip", criterion_9),
        ("algebra suite, numeric", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
