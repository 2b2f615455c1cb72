//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use wronski::algebra::{
    AnyAlgebra, AnyElement, DiffAlgebra, DiffPoly, DirectProduct, ProductElement,
    TruncSeriesRing, UniPoly, UniPolyRing,
};
use wronski::freelie::{evaluate, standard_identity, LiePoly, LieTerm};
use wronski::random::{diffpoly, seeded, small_rational, unipoly};
use wronski::rational::rat;
use wronski::specder::{
    compile_lie_to_diffpoly, verify_localization_grid, verify_model_action, wronskian_bracket,
    SpecialDerivation,
};
use wronski::structconst::{
    check_identity, reconstruction_check, rl_report, sl2, sl2_vector_fields_embedding, sl_n,
};
use wronski::taylor::{is_w1_identity, taylor_map, PointEvaluation};
use wronski::witness::{
    nonvanishing_witness, polarize_product, prime_character_search, mixed_algebra,
    DEFAULT_DEGREE_BUDGET, DEFAULT_MAX_N,
};
use wronski::Result;

type Check = fn() -> Result<(bool, String)>;

fn fail(msg: impl Into<String>) -> Result<(bool, String)> {
    Ok((false, msg.into()))
}

fn st5_compiles_to_zero() -> Result<(bool, String)> {
    let c = compile_lie_to_diffpoly(&standard_identity(5)?, 5)?;
    Ok((c.diff_poly.is_zero(), format!("p = {}", c.diff_poly)))
}

fn st4_is_not_an_identity() -> Result<(bool, String)> {
    let p = compile_lie_to_diffpoly(&standard_identity(4)?, 4)?.diff_poly;
    if p.is_zero() {
        return fail("St4 compiled to zero");
    }
    let r = nonvanishing_witness(&p, DEFAULT_DEGREE_BUDGET)?;
    let Some(a) = r.witness else {
        return fail("no witness within the degree budget");
    };
    let monomials = a.values().all(|u| u.coeffs().iter().filter(|c| **c != rat(0)).count() == 1);
    let value = p.substitute(&UniPolyRing::standard(), &a)?;
    let shown: Vec<String> = a.iter().map(|(i, u)| format!("x{} = {u}", i + 1)).collect();
    Ok((
        monomials && !value.is_zero(),
        format!("{} terms; {} gives {value}", p.len(), shown.join(", ")),
    ))
}

fn w1_decision() -> Result<(bool, String)> {
    let st5 = standard_identity(5)?;
    let st4 = standard_identity(4)?;
    let yes = is_w1_identity(&st5, 5)?;
    let no = is_w1_identity(&st4, 4)?;
    let Some(cert) = &no.certificate else {
        return fail("St4 judged an identity");
    };
    let ok = yes.holds
        && !no.holds
        && cert.verify(&st4)?
        && cert.value.valid_order().is_some()
        && !cert.value.is_zero();
    Ok((
        ok,
        format!(
            "St5 holds; St4 fails at truncation {} with value {}",
            cert.truncation, cert.value
        ),
    ))
}

fn wronskian_jacobi() -> Result<(bool, String)> {
    let g = LieTerm::generator;
    let br = LieTerm::bracket;
    let one = |t| LiePoly::term(rat(1), t);
    let jacobi = one(br(g(0), br(g(1), g(2))))
        .add(&one(br(g(1), br(g(2), g(0)))))
        .add(&one(br(g(2), br(g(0), g(1)))));
    let p = compile_lie_to_diffpoly(&jacobi, 3)?.diff_poly;
    Ok((p.is_zero(), format!("p = {p}")))
}

fn sl2_suite() -> Result<(bool, String)> {
    let l = sl2();
    let st5 = check_identity(&l, &standard_identity(5)?, &(0..5).collect())?;
    let report = rl_report(&l, 3);
    let b = l.basis();
    let rec = reconstruction_check(&l, &b[0], &b[1], &b[2]);
    let ok = st5.holds
        && report.commutative.passed
        && report.derivation_formula.passed
        && report.symmetry.passed
        && report.module_linearity.passed
        && rec.all_pass();
    Ok((
        ok,
        format!(
            "St5 on {} tuples; R(L) span {}; reconstruction {:?}",
            st5.tuples_checked,
            report.span_dim(),
            rec.per_basis
        ),
    ))
}

fn sl3_contrast() -> Result<(bool, String)> {
    let l = sl_n(3);
    let st5 = standard_identity(5)?;
    let check = check_identity(&l, &st5, &(0..5).collect())?;
    let Some(tuple) = &check.counterexample else {
        return fail("St5 held on sl3");
    };
    // re-evaluate at the reported tuple
    let assignment: BTreeMap<_, _> = tuple.iter().map(|&(v, i)| (v, l.basis_vector(i))).collect();
    let value = evaluate(&st5, &l, &assignment)?;
    let names: Vec<&str> = tuple.iter().map(|&(_, i)| l.basis_names()[i].as_str()).collect();
    Ok((
        !check.holds && !value.is_zero() && Some(&value) == check.value.as_ref(),
        format!("({}) gives {}", names.join(", "), l.format_vector(&value)),
    ))
}

fn localization_formula() -> Result<(bool, String)> {
    let model = verify_model_action()?;
    let grid = verify_localization_grid(3, 3)?;
    Ok((
        model.holds && grid.all_equal() && grid.checks.len() == 16,
        format!("model action {}; {} grid points", model.holds, grid.checks.len()),
    ))
}

fn sl2_embedding() -> Result<(bool, String)> {
    let emb = sl2_vector_fields_embedding();
    Ok((
        emb.all_hold() && emb.relations.len() == 3,
        format!("{} relations", emb.relations.len()),
    ))
}

fn semiprime_counterexample() -> Result<(bool, String)> {
    let alg = mixed_algebra();
    let a = ProductElement(vec![UniPoly::monomial(rat(1), 1), UniPoly::zero()]);
    let b = ProductElement(vec![UniPoly::zero(), UniPoly::one()]);
    let r = prime_character_search(&alg, &a, &b, DEFAULT_MAX_N)?;
    if r.found || !r.conclusive() {
        return fail("(a,0), (0,1) search did not conclude absence");
    }
    let mut rng = seeded(9);
    let mut semiprime = 0;
    while semiprime < 100 {
        let x = ProductElement(vec![unipoly(&mut rng, 3), unipoly(&mut rng, 3)]);
        if alg.is_zero(&x)? {
            continue;
        }
        if prime_character_search(&alg, &x, &x, DEFAULT_MAX_N)?.witness != Some(0) {
            return fail(format!("semiprime search failed at {x}"));
        }
        semiprime += 1;
    }
    for _ in 0..100 {
        let x = ProductElement(vec![unipoly(&mut rng, 4), unipoly(&mut rng, 4)]);
        let value = alg.mul(&a, &alg.derive(&x)?)?;
        if !alg.is_zero(&value)? {
            return fail(format!("(a,0)·x' is nonzero at {x}"));
        }
    }
    Ok((
        true,
        format!(
            "{}; 100 semiprime searches at n = 0; (a,0)·x' = 0 on 100 samples",
            r.stabilization.expect("conclusive")
        ),
    ))
}

fn taylor_homomorphism() -> Result<(bool, String)> {
    const N: usize = 8;
    let mut rng = seeded(2024);
    for i in 0..200 {
        let a = diffpoly(&mut rng, 2, 2, 3, 3);
        let b = diffpoly(&mut rng, 2, 2, 3, 3);
        let phi = PointEvaluation::random(&mut rng, 2, 2 + N as u32 + 1);
        let (ta, tb) = (taylor_map(&a, &phi, N), taylor_map(&b, &phi, N));
        if taylor_map(&(&a * &b), &phi, N) != ta.mul(&tb) {
            return fail(format!("multiplicativity fails on sample {i}"));
        }
        if !taylor_map(&a.derive(), &phi, N).agrees_with(&ta.derivative()) {
            return fail(format!("derivation compatibility fails on sample {i}"));
        }
    }
    Ok((true, "200 samples at N = 8".into()))
}

fn polarization() -> Result<(bool, String)> {
    let q = polarize_product(&DiffPoly::deriv_var(0, 2))?;
    let two = (&DiffPoly::deriv_var(0, 1) * &DiffPoly::deriv_var(1, 1)).scale(&rat(2));
    if q.q != two {
        return fail(format!("q(x'') = {}", q.q));
    }
    for n in 2..=6 {
        if !polarize_product(&DiffPoly::deriv_var(0, n))?.key_monomial_present {
            return fail(format!("key monomial missing for n = {n}"));
        }
    }
    Ok((true, format!("q(x'') = {}; n = 2..6 carry n·x^(n-1)·y'", q.q)))
}

fn direct_products() -> Result<(bool, String)> {
    let a = AnyAlgebra::Uni(UniPolyRing::standard());
    let b = AnyAlgebra::Series(TruncSeriesRing::new(8));
    let prod = DirectProduct::new(vec![a.clone(), b.clone()])?;
    let series = TruncSeriesRing::new(8);
    let mut rng = seeded(77);
    for i in 0..100 {
        let mut sample = || {
            AnyElement::Tuple(ProductElement(vec![
                AnyElement::Uni(unipoly(&mut rng, 4)),
                AnyElement::Series(series.from_coeffs((0..9).map(|_| small_rational(&mut rng)).collect())),
            ]))
        };
        let (x, y) = (sample(), sample());
        let (AnyElement::Tuple(xs), AnyElement::Tuple(ys)) = (&x, &y) else {
            unreachable!()
        };
        let whole = wronskian_bracket(
            &prod,
            &SpecialDerivation::new(xs.clone()),
            &SpecialDerivation::new(ys.clone()),
        )?
        .coeff;
        for (k, alg) in [&a, &b].into_iter().enumerate() {
            let part = wronskian_bracket(
                alg,
                &SpecialDerivation::new(xs.0[k].clone()),
                &SpecialDerivation::new(ys.0[k].clone()),
            )?
            .coeff;
            if !alg.equal(&whole.0[k], &part)? {
                return fail(format!("component {k} differs on sample {i}"));
            }
        }
    }
    Ok((true, "100 pairs in Diff(Q[t] x Q[[x]])".into()))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Duration, Check); 12] = [
        (1, "St5 compiles to zero", Duration::from_secs(10), st5_compiles_to_zero),
        (2, "St4 is not an identity", Duration::from_secs(10), st4_is_not_an_identity),
        (3, "W1 identity decision", Duration::from_secs(30), w1_decision),
        (4, "Wronskian Jacobi", Duration::from_secs(5), wronskian_jacobi),
        (5, "sl2 suite", Duration::from_secs(30), sl2_suite),
        (6, "sl3 contrast", Duration::from_secs(60), sl3_contrast),
        (7, "localization formula", Duration::from_secs(20), localization_formula),
        (8, "sl2 into vector fields", Duration::from_secs(1), sl2_embedding),
        (9, "semiprime counterexample", Duration::from_secs(10), semiprime_counterexample),
        (10, "Taylor homomorphism", Duration::from_secs(30), taylor_homomorphism),
        (11, "polarization", Duration::from_secs(5), polarization),
        (12, "direct products", Duration::from_secs(10), direct_products),
    ];
    let mut failures = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (passed, detail) = match outcome {
            Ok((ok, detail)) => (ok && elapsed <= limit, detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !passed {
            failures += 1;
        }
        println!(
            "criterion {id:>2} {} {name}: {detail} ({:.2?}, limit {:?})",
            if passed { "PASS" } else { "FAIL" },
            elapsed,
            limit
        );
    }
    println!("{} of 12 criteria passed", 12 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
