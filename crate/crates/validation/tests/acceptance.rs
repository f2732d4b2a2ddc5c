//! Acceptance criteria 1 to 9. Prints one line per criterion and exits
//! non-zero if any fails.

use std::time::Duration;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unimod::configsystem::{build_system, determinant, verify_theorem, Formulation, SystemSpec};
use unimod::exactmath::{format_rational, int, linalg, rat};
use unimod::harmonics::sphere_moment_const;
use unimod::latoracle::{enumerate_shell, power_sum, weighted_theta_sum, GramLattice};
use unimod::modforms::{cusp_leading, eisenstein_q, extremal_theta, EisensteinId};
use unimod::{PolyMatrix, PolyT, Rational};
use unimod_cli::{run, Command, FormulationArg};
use unimod_validation::{run_criterion, Outcome};

const SEED: u64 = 0x5eed_0040;

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn integer_coeffs(id: EisensteinId) -> Vec<BigInt> {
    eisenstein_q(id, 4).coeffs().iter().map(|c| c.to_integer()).collect()
}

fn c1_eisenstein() -> Result<String, String> {
    let e4 = integer_coeffs(EisensteinId::E4);
    let e6 = integer_coeffs(EisensteinId::E6);
    let want4: Vec<BigInt> = [1, 240, 2160, 6720].map(BigInt::from).to_vec();
    let want6: Vec<BigInt> = [1, -504, -16632, -122976].map(BigInt::from).to_vec();
    ensure(e4 == want4, || format!("E4 = {e4:?}"))?;
    ensure(e6 == want6, || format!("E6 = {e6:?}"))?;
    Ok("E4: 240, 2160, 6720; E6: -504, -16632, -122976".into())
}

fn printed_r1() -> PolyT {
    [
        PolyT::from_ints(&[-2, 1]),
        PolyT::t(),
        PolyT::from_ints(&[-13, 6]),
        PolyT::from_ints(&[77, -55, 10]),
    ]
    .iter()
    .fold(PolyT::one(), |acc, f| &acc * f)
}

fn c2_r1() -> Result<String, String> {
    let reference = printed_r1();
    let mut report = Vec::new();
    let mut matched = None;
    for f in Formulation::ALL {
        let det = determinant(SystemSpec::new(1, f).unwrap()).map_err(|e| e.to_string())?;
        match det.div_rem(&reference) {
            Ok((q, rem)) if rem.is_zero() && q.is_constant() && !q.is_zero() => {
                report.push(format!("{f}: constant {}", format_rational(&q.coeff(0))));
                matched.get_or_insert(f);
            }
            _ => report.push(format!("{f}: {} is not a multiple", det.primitive())),
        }
    }
    match matched {
        Some(f) => Ok(format!("matched under {f}; {}", report.join("; "))),
        None => Err(report.join("; ")),
    }
}

/// Primitive cofactor of `t(t − 2r)` in the determinant, as descending
/// decimal strings.
fn cofactor_digits(r: u32, f: Formulation) -> Result<Vec<String>, String> {
    let det = determinant(SystemSpec::new(r, f).unwrap()).map_err(|e| e.to_string())?;
    let structural = &PolyT::t() * &PolyT::from_ints(&[-2 * r as i64, 1]);
    let (q, rem) = det.div_rem(&structural).map_err(|e| e.to_string())?;
    if !rem.is_zero() {
        return Err(format!("t(t-{}) does not divide {}", 2 * r, det.primitive()));
    }
    let (_, ints) = q.primitive_part();
    Ok(ints.iter().rev().map(|c| c.to_string()).collect())
}

fn match_printed(r: u32, printed: &[&str]) -> Result<String, String> {
    let mut seen = Vec::new();
    for f in Formulation::ALL {
        match cofactor_digits(r, f) {
            Ok(digits) if digits == printed => return Ok(format!("all {} coefficients match under {f}", printed.len())),
            Ok(digits) => seen.push(format!("{f}: [{}]", digits.join(", "))),
            Err(e) => seen.push(format!("{f}: {e}")),
        }
    }
    Err(format!("expected [{}]; got {}", printed.join(", "), seen.join("; ")))
}

fn c3_r2() -> Result<String, String> {
    match_printed(2, &["10768", "-242280", "2202310", "-10101795", "23361877", "-21771246"])
}

fn c4_r3() -> Result<String, String> {
    match_printed(
        3,
        &[
            "19989882674056909935",
            "-892881426107875310430",
            "17258039601222654151533",
            "-187053310321121904306075",
            "1227398249908229181423784",
            "-4874010945909263810320032",
            "10840974078436271024624064",
            "-10414527769923133690990080",
        ],
    )
}

fn c5_verdicts() -> Result<String, String> {
    let mut lines = Vec::new();
    let mut ok = true;
    for r in 1..=3u32 {
        let report = verify_theorem(r).map_err(|e| e.to_string())?;
        let expected: Vec<Rational> = if r == 1 {
            vec![int(0), int(2), rat(13, 6)]
        } else {
            vec![int(0), int(2 * r)]
        };
        let accepted = report.verdicts.iter().find(|v| v.theorem_verified);
        let roots_ok = accepted.is_some_and(|v| v.rational_roots == expected);
        let code = run(&Command::Verify {
            r,
            formulation: FormulationArg::Both,
        })
        .exit_code;
        let pass = roots_ok && code == 0;
        ok &= pass;
        let detail: Vec<String> = report
            .verdicts
            .iter()
            .map(|v| {
                format!(
                    "{} verified={} factors={} roots={{{}}}",
                    v.formulation,
                    v.theorem_verified,
                    if v.factor_match.success { "matched" } else { "mismatch" },
                    v.rational_roots.iter().map(format_rational).collect::<Vec<_>>().join(", ")
                )
            })
            .collect();
        lines.push(format!("r={r} exit={code} [{}]", detail.join(" | ")));
    }
    if ok {
        Ok(lines.join("; "))
    } else {
        Err(lines.join("; "))
    }
}

fn c6_oracles() -> Result<String, String> {
    let lat = GramLattice::e8();
    let theta = extremal_theta(8, 5).map_err(|e| e.to_string())?;
    let shells: Vec<_> = [2, 4, 6]
        .iter()
        .map(|&m| enumerate_shell(&lat, m).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    for s in &shells[..2] {
        ensure(
            Some(BigInt::from(s.len())) == theta.shell_count(s.norm as u64),
            || format!("norm {} shell has {} vectors", s.norm, s.len()),
        )?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for trial in 0..50 {
        let centre = &shells[rng.gen_range(0..2)];
        let x0 = &centre.vectors[rng.gen_range(0..centre.len())];
        let shell = &shells[rng.gen_range(0..shells.len())];
        let k = rng.gen_range(1..=3u32);
        let got = int(power_sum(&lat, shell, x0, 2 * k));
        let predicted = int(shell.len() as i64)
            * sphere_moment_const(k, 8)
            * int(shell.norm as i64 * lat.norm(x0)).pow(k as i32);
        ensure(got == predicted, || {
            format!("trial {trial}: norm {}, k = {k}: {got} != {predicted}", shell.norm)
        })?;
    }
    for shell in &shells {
        for x0 in shells[0].vectors.iter().step_by(23) {
            for d in [2, 4] {
                let w = weighted_theta_sum(&lat, shell, x0, d).map_err(|e| e.to_string())?;
                ensure(w.is_zero(), || format!("degree {d} sum on norm {} is {w}", shell.norm))?;
            }
        }
    }
    Ok("shells 240, 2160; 50 seeded power-sum triples exact; degree 2 and 4 sums vanish on norms 2, 4, 6".into())
}

fn random_poly(rng: &mut ChaCha8Rng) -> PolyT {
    let degree = rng.gen_range(0..=3);
    PolyT::from_coeffs(
        (0..=degree)
            .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
            .collect(),
    )
}

fn c7_cross_algorithm() -> Result<String, String> {
    for r in 1..=3 {
        let m = build_system(SystemSpec::new(r, Formulation::Rigorous).unwrap())
            .map_err(|e| e.to_string())?
            .matrix;
        let a = m.det_interp(m.degree_bound()).map_err(|e| e.to_string())?;
        let b = m.det_bareiss().map_err(|e| e.to_string())?;
        ensure(a == b, || format!("theorem matrix r = {r} disagrees"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut nonzero = 0;
    for trial in 0..100 {
        let entries = (0..25).map(|_| random_poly(&mut rng)).collect();
        let m = PolyMatrix::new(5, 5, entries).map_err(|e| e.to_string())?;
        let a = m.det_interp(m.degree_bound()).map_err(|e| e.to_string())?;
        let b = m.det_bareiss().map_err(|e| e.to_string())?;
        ensure(a == b, || format!("random matrix {trial} disagrees"))?;
        nonzero += usize::from(!a.is_zero());
    }
    Ok(format!("3 theorem matrices and 100 random 5x5 (deg <= 3, {nonzero} nonsingular) agree exactly"))
}

fn c8_inconsistency() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    let mut checked = Vec::new();
    for r in 1..=3u32 {
        let sys = build_system(SystemSpec::new(r, Formulation::Rigorous).unwrap()).map_err(|e| e.to_string())?;
        let mut points = Vec::new();
        for _ in 0..20 {
            let t0 = rng.gen_range(2 * r as i64 + 2..=2 * r as i64 + 2000);
            let (a, b) = sys.scalar_system(&int(t0));
            let consistent = linalg::is_consistent(&a, &b).map_err(|e| e.to_string())?;
            ensure(!consistent, || format!("r = {r}: system solvable at t0 = {t0}"))?;
            points.push(t0);
        }
        points.sort_unstable();
        checked.push(format!("r={r}: t0 in [{}, {}]", points[0], points[19]));
    }
    Ok(format!("60 scalar systems inconsistent ({})", checked.join(", ")))
}

/// `q ∏ (1 − qⁿ)²⁴` and `E4`, each to `O(q^len)`, by integer convolution.
fn delta_and_e4(len: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut prod = vec![BigInt::zero(); len];
    prod[0] = BigInt::one();
    for n in 1..len {
        let mut f = vec![BigInt::zero(); len];
        f[0] = BigInt::one();
        f[n] = BigInt::from(-1);
        for _ in 0..24 {
            prod = convolve(&prod, &f);
        }
    }
    let mut delta = vec![BigInt::zero(); len];
    delta[1..].clone_from_slice(&prod[..len - 1]);
    let e4 = (0..len)
        .map(|n| {
            if n == 0 {
                BigInt::one()
            } else {
                (1..=n).filter(|d| n % d == 0).map(|d| BigInt::from(d).pow(3)).sum::<BigInt>() * 240
            }
        })
        .collect();
    (delta, e4)
}

fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let len = a.len();
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn c9_cusp_constants() -> Result<String, String> {
    let mut out = Vec::new();
    for (r, want) in [(1u32, (-48, 192)), (2, (-96, 144))] {
        let len = 2 * r as usize + 2;
        let (delta, e4) = delta_and_e4(len);
        let mut power = vec![BigInt::zero(); len];
        power[0] = BigInt::one();
        for _ in 0..2 * r {
            power = convolve(&power, &delta);
        }
        let with_e4 = convolve(&e4, &power);
        let lead = 2 * r as usize;
        let independent = (power[lead + 1].clone(), with_e4[lead + 1].clone());
        let lib = cusp_leading(r, len).map_err(|e| e.to_string())?;
        let want = (BigInt::from(want.0), BigInt::from(want.1));
        ensure(independent == want, || format!("r = {r}: convolution gives {independent:?}"))?;
        ensure(
            lib.c_4r == int(want.0.clone()) && lib.c_4r_plus_4 == int(want.1.clone()),
            || format!("r = {r}: library gives ({}, {})", lib.c_4r, lib.c_4r_plus_4),
        )?;
        out.push(format!("r={r}: ({}, {})", want.0, want.1));
    }
    Ok(out.join("; "))
}

fn main() {
    let outcomes: Vec<Outcome> = vec![
        run_criterion(1, "Eisenstein regression", secs(1), c1_eisenstein),
        run_criterion(2, "determinant match r=1", secs(10), c2_r1),
        run_criterion(3, "determinant match r=2", secs(60), c3_r2),
        run_criterion(4, "determinant match r=3", secs(600), c4_r3),
        run_criterion(5, "theorem verdicts r=1,2,3", None, c5_verdicts),
        run_criterion(6, "lattice oracle suite", secs(30), c6_oracles),
        run_criterion(7, "interpolation equals Bareiss", None, c7_cross_algorithm),
        run_criterion(8, "inconsistency at integers t0 >= 2r+2", None, c8_inconsistency),
        run_criterion(9, "cusp constants by convolution", None, c9_cusp_constants),
    ];
    let passed = outcomes.iter().filter(|o| o.passed).count();
    println!("acceptance: {passed}/{} criteria passed", outcomes.len());
    if passed != outcomes.len() {
        std::process::exit(1);
    }
}
