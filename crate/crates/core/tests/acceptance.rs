//! Acceptance criteria. Runs as a plain binary (`harness = false`) and prints
//! one PASS/FAIL line per criterion; exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stanley_critical::hilbert::{dim_degree, hilbert_series_numerator};
use stanley_critical::lex::lex_ideal_of;
use stanley_critical::monomial::monomials_of_degree;
use stanley_critical::{
    build_canonical, depth_ideal, depth_quotient, ideal_direct_sum, is_critical, is_o_sequence,
    macaulay_growth, minimal_generators, parse_ideal, sdepth_oracle, stanley_decomposition,
    stanleyize, verify_partition, CanonicalCriticalSpec, Limits, Mode, Monomial, MonomialIdeal,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// All canonical critical specs with n <= 4, each m_i of degree <= 2 in
/// K[x_i..x_n], deg m_t >= 1.
fn sweep() -> Vec<CanonicalCriticalSpec> {
    let mut out = Vec::new();
    for n in 1..=4usize {
        // choices[i]: monomials of degree <= 2 supported on x_{i+1}..x_n
        let choices: Vec<Vec<Monomial>> = (0..n)
            .map(|i| {
                (0..=2)
                    .flat_map(|d| monomials_of_degree(n - i, d))
                    .map(|m| {
                        let mut e = vec![0; i];
                        e.extend_from_slice(m.exponents());
                        Monomial::new(e)
                    })
                    .collect()
            })
            .collect();
        for t in 1..=n {
            let mut idx = vec![0usize; t];
            loop {
                let ms: Vec<Monomial> = (0..t).map(|i| choices[i][idx[i]].clone()).collect();
                if !ms[t - 1].is_one() {
                    out.push(CanonicalCriticalSpec::new(n, ms).expect("sweep spec is valid"));
                }
                let mut k = t;
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < choices[k].len() {
                        break;
                    }
                    idx[k] = 0;
                }
                if k == 0 && idx[0] == 0 {
                    break;
                }
            }
        }
    }
    out
}

struct SweepRow {
    spec: CanonicalCriticalSpec,
    ideal: MonomialIdeal,
    sdepth_quotient: usize,
    sdepth_ideal: usize,
    depth: usize,
}

fn sweep_rows(limits: &Limits) -> Result<Vec<SweepRow>, String> {
    sweep()
        .into_iter()
        .map(|spec| {
            let ideal = build_canonical(&spec).map_err(|e| format!("{spec}: {e}"))?;
            let sdepth_quotient = sdepth_oracle(&ideal, Mode::Quotient, limits).map_err(|e| format!("{spec}: {e}"))?;
            let sdepth_ideal = sdepth_oracle(&ideal, Mode::Ideal, limits).map_err(|e| format!("{spec}: {e}"))?;
            let depth = depth_quotient(&ideal, limits.prime, limits).map_err(|e| format!("{spec}: {e}"))?;
            Ok(SweepRow {
                spec,
                ideal,
                sdepth_quotient,
                sdepth_ideal,
                depth,
            })
        })
        .collect()
}

fn criterion_1(rows: &[SweepRow]) -> Outcome {
    for r in rows {
        let expected = r.spec.n() - r.spec.t();
        ensure!(r.ideal.num_generators() == r.spec.t(), "{}: |G(I)| = {}", r.spec, r.ideal.num_generators());
        ensure!(
            r.sdepth_quotient == expected && r.depth == expected,
            "{}: sdepth {} depth {} expected {expected}",
            r.spec,
            r.sdepth_quotient,
            r.depth
        );
    }
    Ok(format!("{} specs, sdepth(S/I) = depth(S/I) = n - t", rows.len()))
}

fn criterion_2(rows: &[SweepRow]) -> Outcome {
    for r in rows {
        let d = stanley_decomposition(&r.spec).map_err(|e| e.to_string())?;
        let check = verify_partition(&d, &r.ideal).map_err(|e| e.to_string())?;
        ensure!(check.ok, "{}: partition fails at {:?}", r.spec, check.counterexample);
        let expected = r.spec.n() - r.spec.t();
        ensure!(
            d.sdepth() == expected && d.sdepth() == r.sdepth_quotient,
            "{}: decomposition sdepth {} oracle {}",
            r.spec,
            d.sdepth(),
            r.sdepth_quotient
        );
    }
    Ok(format!("{} decompositions partition S/I with sdepth = oracle", rows.len()))
}

fn criterion_3(rows: &[SweepRow]) -> Outcome {
    for r in rows {
        let d = ideal_direct_sum(&r.spec).map_err(|e| e.to_string())?;
        let check = verify_partition(&d, &r.ideal).map_err(|e| e.to_string())?;
        ensure!(check.ok, "{}: ideal partition fails at {:?}", r.spec, check.counterexample);
    }
    Ok(format!("{} ideal direct sums verified", rows.len()))
}

fn criterion_4(rows: &[SweepRow]) -> Outcome {
    for r in rows {
        let bound = 1usize.max(r.spec.n() - r.spec.t() + 1);
        ensure!(
            r.sdepth_ideal >= 1 + r.sdepth_quotient && r.sdepth_ideal >= bound,
            "{}: sdepth(I) = {}, sdepth(S/I) = {}",
            r.spec,
            r.sdepth_ideal,
            r.sdepth_quotient
        );
    }
    Ok(format!("{} specs, sdepth(I) >= 1 + sdepth(S/I)", rows.len()))
}

/// Random ideals with n <= 4, at most 4 generators, exponents <= 2.
fn random_ideal(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    loop {
        let n = rng.gen_range(1..=4usize);
        let count = rng.gen_range(1..=4usize);
        let raw: Vec<Monomial> = (0..count)
            .map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..=2u32)).collect()))
            .filter(|m| !m.is_one())
            .collect();
        if let Ok(i) = minimal_generators(n, raw) {
            return i;
        }
    }
}

struct Population {
    critical: Vec<MonomialIdeal>,
    non_critical: Vec<MonomialIdeal>,
}

fn population(limits: &Limits) -> Result<Population, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    let mut pop = Population {
        critical: Vec::new(),
        non_critical: Vec::new(),
    };
    while pop.critical.len() < 200 || pop.non_critical.len() < 200 {
        let i = random_ideal(&mut rng);
        match is_critical(&i, limits.degree_ceiling).map_err(|e| format!("{i}: {e}"))? {
            true if pop.critical.len() < 200 => pop.critical.push(i),
            false if pop.non_critical.len() < 200 => pop.non_critical.push(i),
            _ => {}
        }
    }
    Ok(pop)
}

fn criterion_5(pop: &Population, limits: &Limits) -> Outcome {
    for i in &pop.critical {
        let sq = sdepth_oracle(i, Mode::Quotient, limits).map_err(|e| format!("{i}: {e}"))?;
        let si = sdepth_oracle(i, Mode::Ideal, limits).map_err(|e| format!("{i}: {e}"))?;
        let dq = depth_quotient(i, limits.prime, limits).map_err(|e| format!("{i}: {e}"))?;
        let di = depth_ideal(i, limits.prime, limits).map_err(|e| format!("{i}: {e}"))?;
        ensure!(sq >= dq && si >= di, "{i}: sdepth {sq}/{si} depth {dq}/{di}");
    }
    Ok(format!("{} critical ideals satisfy sdepth >= depth for S/I and I", pop.critical.len()))
}

fn criterion_6(pop: &Population, limits: &Limits) -> Outcome {
    let all = pop.critical.iter().map(|i| (i, true)).chain(pop.non_critical.iter().map(|i| (i, false)));
    let mut count = 0;
    for (i, critical) in all {
        let lex = lex_ideal_of(i, limits.degree_ceiling).map_err(|e| format!("{i}: {e}"))?;
        let h = hilbert_series_numerator(i);
        ensure!(
            lex.certified && hilbert_series_numerator(&lex.ideal).numerator == h.numerator,
            "{i}: lex ideal {:?} has a different Hilbert series",
            lex.ideal
        );
        let top = i.lcm_all().degree().max(lex.ideal.max_generator_degree()) + 2;
        let prefix = h.values(top).map_err(|e| e.to_string())?;
        ensure!(is_o_sequence(&prefix, i.n()).map_err(|e| e.to_string())?.ok, "{i}: {prefix:?} not an O-sequence");
        ensure!(
            (lex.ideal.num_generators() > i.n()) == !critical,
            "{i}: |G(I^lex)| = {} but critical = {critical}",
            lex.ideal.num_generators()
        );
        count += 1;
    }
    Ok(format!("{count} ideals: lex series equal, O-sequences, criticality consistent"))
}

/// a^{<d>} against the number of degree-(d+1) monomials outside the ideal
/// generated by the first dim S_d - a lex monomials of degree d.
fn criterion_7() -> Outcome {
    let mut checked = 0;
    for n in 1..=4usize {
        for d in 1..=4u32 {
            let all = monomials_of_degree(n, d);
            let next = monomials_of_degree(n, d + 1);
            let dim = dim_degree(n, d).map_err(|e| e.to_string())? as usize;
            ensure!(dim == all.len(), "dim S_{d} mismatch");
            for a in 0..=dim {
                let segment = &all[..dim - a];
                let brute = next.iter().filter(|m| !segment.iter().any(|s| s.divides(m))).count() as u64;
                let growth = macaulay_growth(a as u64, d).map_err(|e| e.to_string())?;
                ensure!(growth == brute, "n={n} d={d} a={a}: {growth} vs {brute}");
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (n, d, a) triples match the lex-segment count"))
}

fn criterion_8(pop: &Population, limits: &Limits) -> Outcome {
    let mut verified = 0;
    for i in &pop.non_critical[..100] {
        let cert = stanleyize(i, limits).map_err(|e| format!("{i}: {e}"))?;
        ensure!(cert.checks.hilbert_equal && cert.checks.depth_equal, "{i}: checks {:?}", cert.checks);
        match cert.checks.sdepth_ge_depth {
            Some(true) => verified += 1,
            Some(false) => return Err(format!("{i}: sdepth(S/L) < depth")),
            None => {}
        }
    }
    let coverage = verified as f64 / 100.0;
    ensure!(coverage >= 0.9, "sdepth check ran on only {verified} of 100");
    Ok(format!("100 non-critical ideals; sdepth check coverage {:.0}%", coverage * 100.0))
}

fn criterion_9(limits: &Limits) -> Outcome {
    let max3 = parse_ideal("n=3; x1, x2, x3").map_err(|e| e.to_string())?;
    let sd = sdepth_oracle(&max3, Mode::Ideal, limits).map_err(|e| e.to_string())?;
    ensure!(sd == 2, "sdepth((x1,x2,x3)) = {sd}");
    let p = parse_ideal("n=2; x1*x2").map_err(|e| e.to_string())?;
    let dq = depth_quotient(&p, limits.prime, limits).map_err(|e| e.to_string())?;
    ensure!(dq == 1, "depth(S/(x1x2)) = {dq}");
    let lex = lex_ideal_of(&p, limits.degree_ceiling).map_err(|e| e.to_string())?;
    ensure!(lex.ideal.to_string() == "n=2; x1^2", "(x1x2)^lex = {}", lex.ideal);
    Ok("sdepth((x1,x2,x3)) = 2, depth(S/(x1x2)) = 1, (x1x2)^lex = (x1^2)".into())
}

fn report(number: u32, elapsed: Duration, outcome: &Outcome) -> bool {
    match outcome {
        Ok(msg) => {
            println!("PASS criterion {number}: {msg} [{:.2?}]", elapsed);
            true
        }
        Err(msg) => {
            println!("FAIL criterion {number}: {msg} [{:.2?}]", elapsed);
            false
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn main() -> ExitCode {
    let limits = Limits::default();
    let mut ok = true;

    let (rows, sweep_time) = timed(|| sweep_rows(&limits));
    match rows {
        Ok(rows) => {
            let (o, t) = timed(|| criterion_1(&rows));
            ok &= report(1, t + sweep_time, &o);
            ok &= sweep_time < Duration::from_secs(120)
                || report(1, sweep_time, &Err("sweep exceeded 2 minutes".into()));
            let (o, t) = timed(|| criterion_2(&rows));
            ok &= report(2, t, &o);
            let (o, t) = timed(|| criterion_3(&rows));
            ok &= report(3, t, &o);
            let (o, t) = timed(|| criterion_4(&rows));
            ok &= report(4, t, &o);
        }
        Err(e) => {
            for c in 1..=4 {
                ok &= report(c, sweep_time, &Err(e.clone()));
            }
        }
    }

    let (pop, pop_time) = timed(|| population(&limits));
    let (c7, c7_time) = timed(criterion_7);
    let report_7 = |ok: &mut bool| {
        *ok &= report(7, c7_time, &c7);
        *ok &= c7_time < Duration::from_secs(30) || report(7, c7_time, &Err("exceeded 30 seconds".into()));
    };
    match pop {
        Ok(pop) => {
            let (o, t) = timed(|| criterion_5(&pop, &limits));
            ok &= report(5, t + pop_time, &o);
            let (o, t) = timed(|| criterion_6(&pop, &limits));
            ok &= report(6, t, &o);
            report_7(&mut ok);
            let (o, t) = timed(|| criterion_8(&pop, &limits));
            ok &= report(8, t, &o);
        }
        Err(e) => {
            for c in [5, 6] {
                ok &= report(c, pop_time, &Err(e.clone()));
            }
            report_7(&mut ok);
            ok &= report(8, pop_time, &Err(e));
        }
    }

    let (o, t) = timed(|| criterion_9(&limits));
    ok &= report(9, t, &o);

    if ok {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
