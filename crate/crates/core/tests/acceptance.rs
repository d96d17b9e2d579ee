//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_8, PI};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use kaksynth::batch::{decompose_all, synthesize_all, Execution};
use kaksynth::blocksynth::controlled_u_basis;
use kaksynth::random::{haar_unitary2, haar_unitary4, unit_vector};
use kaksynth::{
    block_params, controlled_u_circuit, efficient_as_cnot, extract_zz, gates, kak_decompose,
    phase_distance, synth_zz_block, synthesize, tensor, upper_bound, AxisAngle, Circuit,
    ToleranceConfig, Unitary2, Unitary4, ZzCase, ZzResource,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn tol() -> ToleranceConfig {
    ToleranceConfig::default()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dressed<R: Rng>(core: &Unitary4, rng: &mut R) -> Unitary4 {
    tensor(&haar_unitary2(rng), &haar_unitary2(rng))
        * *core
        * tensor(&haar_unitary2(rng), &haar_unitary2(rng))
}

fn kak_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    let gates: Vec<_> = (0..1000).map(|_| haar_unitary4(&mut rng)).collect();
    let start = Instant::now();
    let out = decompose_all(&gates, &tol(), Execution::default());
    let elapsed = start.elapsed();
    let mut worst = 0.0f64;
    for (u, k) in gates.iter().zip(out) {
        let k = k.map_err(|e| format!("decomposition failed: {e}"))?;
        worst = worst.max(phase_distance(&k.reconstruct(), u));
        ensure(k.c.in_chamber(1e-12), || format!("outside chamber: {:?}", k.c))?;
    }
    ensure(worst < 1e-9, || format!("worst residual {worst:.3e}"))?;
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok(format!("worst residual {worst:.2e}, {elapsed:.2?}"))
}

fn landmarks() -> Outcome {
    let mut cases = vec![
        ("CNOT", gates::cnot(), [FRAC_PI_2, 0.0, 0.0]),
        ("SWAP", gates::swap(), [FRAC_PI_2; 3]),
        ("SQRT_SWAP", gates::sqrt_swap(), [FRAC_PI_4; 3]),
    ];
    for (name, phi) in [
        ("CPHASE(pi/5)", PI / 5.0),
        ("CPHASE(pi/2)", FRAC_PI_2),
        ("CPHASE(2pi/3)", 2.0 * FRAC_PI_3),
        ("CPHASE(pi)", PI),
    ] {
        cases.push((name, gates::cphase(phi), [phi / 2.0, 0.0, 0.0]));
    }
    let mut worst = 0.0f64;
    for (name, u, want) in cases {
        let c = kak_decompose(&u, &tol()).map_err(|e| format!("{name}: {e}"))?.c;
        let err = (0..3).map(|i| (c.as_array()[i] - want[i]).abs()).fold(0.0, f64::max);
        ensure(err < 1e-10, || format!("{name}: got {c:?}"))?;
        worst = worst.max(err);
    }
    Ok(format!("7 gates, worst coordinate error {worst:.2e}"))
}

fn prop1_corpus() -> Outcome {
    let corpus = [
        [FRAC_PI_2, 0.0, 0.0],
        [FRAC_PI_2, FRAC_PI_2, 0.0],
        [FRAC_PI_3, FRAC_PI_4, 0.0],
        [FRAC_PI_2, FRAC_PI_4, 0.0],
        [FRAC_PI_3, FRAC_PI_4, PI / 6.0],
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(3003);
    let mut worst = 0.0f64;
    for v in corpus {
        for _ in 0..10 {
            let e = dressed(&Unitary4::interaction(v[0], v[1], v[2]), &mut rng);
            let r = extract_zz(&e, &tol()).map_err(|err| format!("{v:?}: {err}"))?;
            ensure(r.gamma > 0.0 && r.gamma <= FRAC_PI_2 + 1e-12, || {
                format!("{v:?}: gamma {}", r.gamma)
            })?;
            ensure(r.entangler_count() <= 2, || format!("{v:?}: {} uses", r.entangler_count()))?;
            let err = phase_distance(&r.circuit.evaluate(&e), &Unitary4::zz(r.gamma));
            ensure(err < 1e-9, || format!("{v:?}: error {err:.3e}"))?;
            worst = worst.max(err);
        }
    }
    Ok(format!("50 dressed entanglers, worst error {worst:.2e}"))
}

fn exact_resource(gamma: f64) -> ZzResource {
    let mut circuit = Circuit::new();
    circuit.push_entangler();
    ZzResource {
        circuit,
        gamma,
        apps_per_unit: 1,
        repetitions: 1,
        case: ZzCase::PureX,
    }
}

fn prop2_grid() -> Outcome {
    let gammas = [FRAC_PI_4, FRAC_PI_3, 2.0 * PI / 5.0, FRAC_PI_2];
    let cs = [0.1, FRAC_PI_8, FRAC_PI_4, 3.0 * FRAC_PI_8, FRAC_PI_2];
    let (mut ident, mut block, mut points) = (0.0f64, 0.0f64, 0);
    for g in gammas {
        for c in cs.into_iter().filter(|&c| c <= 2.0 * g) {
            let bp = block_params(c, g).map_err(|e| format!("({c}, {g}): {e}"))?;
            let errs = [
                (bp.p * bp.p + bp.q * bp.q - 1.0).abs(),
                ((c / 2.0).sin() - g.sin() * (bp.b / 2.0).sin()).abs(),
                (bp.p * bp.q - (bp.b / 2.0).cos() / (2.0 * (c / 2.0).cos())).abs(),
            ];
            let e = errs.into_iter().fold(0.0, f64::max);
            ensure(e < 1e-12, || format!("(c {c}, gamma {g}): identity error {e:.3e}"))?;
            let circ = synth_zz_block(c, &exact_resource(g)).map_err(|e| e.to_string())?;
            let be = phase_distance(&circ.evaluate(&Unitary4::zz(g)), &Unitary4::zz(c));
            ensure(be < 1e-9, || format!("(c {c}, gamma {g}): block error {be:.3e}"))?;
            ident = ident.max(e);
            block = block.max(be);
            points += 1;
        }
    }
    Ok(format!(
        "{points} points, identities {ident:.2e}, blocks {block:.2e}"
    ))
}

fn gate_counts() -> Outcome {
    let t = tol();
    let count = |target: Unitary4, e: Unitary4| {
        synthesize(&target, &e, &t)
            .map(|(_, r)| (r.entangler_count, r.local_count))
            .map_err(|err| err.to_string())
    };
    let (a, _) = count(gates::cnot(), gates::zz(FRAC_PI_3))?;
    ensure(a == 2, || format!("CNOT from ZZ(pi/3): {a}"))?;
    let (b, _) = count(gates::cnot(), gates::zz(PI / 5.0))?;
    ensure(b == 4, || format!("CNOT from ZZ(pi/5): {b}"))?;
    let (c, l) = count(gates::sqrt_swap(), gates::cphase(2.0 * FRAC_PI_3))?;
    ensure((c, l) == (6, 7), || format!("SQRT_SWAP from CPHASE(2pi/3): {c}, {l} locals"))?;
    let ub = upper_bound(&gates::cnot(), &t).map_err(|e| e.to_string())?;
    ensure(ub.bound == 6, || format!("bound(CNOT) = {}", ub.bound))?;
    let ub = upper_bound(&gates::cphase(PI / 5.0), &t).map_err(|e| e.to_string())?;
    ensure((ub.n, ub.bound) == (3, 18), || {
        format!("bound(CPHASE(pi/5)) = {} with n = {}", ub.bound, ub.n)
    })?;
    Ok("2, 4, 6 (+7 locals), bounds 6 and 18".into())
}

/// Entangler from one of the four resource families, dressed with locals.
fn family_entangler<R: Rng>(family: usize, rng: &mut R) -> Unitary4 {
    let core = match family {
        0 => Unitary4::interaction(rng.random_range(0.05..=FRAC_PI_2), 0.0, 0.0),
        1 => Unitary4::interaction(FRAC_PI_2, FRAC_PI_2, 0.0),
        2 => {
            let c1 = rng.random_range(0.1..FRAC_PI_2);
            let c2 = rng.random_range(0.05..c1);
            if rng.random_bool(0.25) {
                Unitary4::interaction(FRAC_PI_2, c2, 0.0)
            } else {
                Unitary4::interaction(c1, c2, 0.0)
            }
        }
        _ => return haar_unitary4(rng),
    };
    dressed(&core, rng)
}

fn end_to_end() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6006);
    let t = tol();
    let jobs: Vec<_> = (0..200)
        .map(|i| (haar_unitary4(&mut rng), family_entangler(i % 4, &mut rng)))
        .collect();
    let start = Instant::now();
    let out = synthesize_all(&jobs, &t, Execution::default());
    let elapsed = start.elapsed();
    let (mut worst, mut max_count) = (0.0f64, 0);
    for ((target, e), res) in jobs.iter().zip(out) {
        let (circ, rep) = res.map_err(|err| format!("synthesis failed: {err}"))?;
        let residual = phase_distance(&circ.evaluate(e), target);
        ensure(residual < 1e-8, || format!("residual {residual:.3e}"))?;
        let bound = upper_bound(e, &t).map_err(|err| err.to_string())?.bound;
        ensure(circ.entangler_count() <= bound, || {
            format!("{} applications > bound {bound}", circ.entangler_count())
        })?;
        worst = worst.max(residual);
        max_count = max_count.max(rep.entangler_count);
    }
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "200 pairs, worst residual {worst:.2e}, max {max_count} applications, {elapsed:.2?}"
    ))
}

fn prop3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7007);
    let mut rotations: Vec<AxisAngle> = (0..100)
        .map(|_| AxisAngle::new(rng.random_range(0.01..PI), unit_vector(&mut rng)))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    for nz in [1.0, -1.0] {
        rotations.push(AxisAngle::new(0.7, [0.0, 0.0, nz]).map_err(|e| e.to_string())?);
    }
    ensure(controlled_u_basis([0.0, 0.0, 1.0]) == Unitary2::pauli(kaksynth::Pauli::X), || {
        "n_z = 1 branch".into()
    })?;
    ensure(controlled_u_basis([0.0, 0.0, -1.0]) == Unitary2::identity(), || {
        "n_z = -1 branch".into()
    })?;
    let (mut off, mut err) = (0.0f64, 0.0f64);
    for s in &rotations {
        let cu = controlled_u_circuit(s);
        let m = cu.circuit.evaluate(&cu.interaction);
        let o = m.block(0, 1).norm().max(m.block(1, 0).norm());
        let e = phase_distance(&m, &Unitary4::controlled(&s.unitary()));
        ensure(o < 1e-10 && e < 1e-10, || format!("{s:?}: off {o:.3e}, error {e:.3e}"))?;
        off = off.max(o);
        err = err.max(e);
    }
    Ok(format!(
        "{} rotations, off-diagonal {off:.2e}, error {err:.2e}",
        rotations.len()
    ))
}

fn half_interval() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8008);
    let samples = 10_000;
    let mut hits = 0;
    for _ in 0..samples {
        let g: f64 = rng.random_range(0.0..=FRAC_PI_2);
        let ok = efficient_as_cnot(&Unitary2::phase_gate(2.0 * g));
        let inside = (FRAC_PI_4..=FRAC_PI_2).contains(&g);
        let near_edge = (g - FRAC_PI_4).abs() < 1e-9;
        ensure(ok == inside || near_edge, || format!("gamma {g}: predicate {ok}"))?;
        hits += usize::from(ok);
    }
    for (g, want) in [(FRAC_PI_4, true), (FRAC_PI_2, true), (0.0, false), (FRAC_PI_8, false)] {
        ensure(efficient_as_cnot(&Unitary2::phase_gate(2.0 * g)) == want, || {
            format!("endpoint {g}")
        })?;
    }
    let frac = hits as f64 / samples as f64;
    ensure((frac - 0.5).abs() <= 0.02, || format!("fraction {frac}"))?;
    Ok(format!("fraction {frac:.4}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("KAK round trip", kak_round_trip),
        ("canonical landmarks", landmarks),
        ("ZZ extraction corpus", prop1_corpus),
        ("ZZ block identity grid", prop2_grid),
        ("gate counts", gate_counts),
        ("end-to-end soundness", end_to_end),
        ("controlled-U", prop3),
        ("half-interval", half_interval),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
