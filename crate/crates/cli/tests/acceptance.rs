//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every check compares two independently computed quantities.

use std::collections::BTreeMap;
use std::process::Command as Process;
use std::time::Instant;

use betapoly::job::{Command, FamilyTheory, OperatorMode};
use betapoly::{run, Format, JobSpec};
use betapoly_core::divdiff::{phi, FglOperators};
use betapoly_core::families::{
    beta_poly, beta_poly_along, beta_poly_with, bott_samelson_class, bott_samelson_trivial,
    words_from_top,
};
use betapoly_core::fgl::{additive_specialization, multiplicative_specialization};
use betapoly_core::hecke::{alternative_product, build_hxy, phi_element};
use betapoly_core::perm::{all_reduced_words, lex_smallest_reduced_word};
use betapoly_core::porteous::{
    check_rect_symmetry, from_elementary, specialize_nu, specialize_nu_padded, specialize_theory,
    thom_porteous, to_elementary, weighted_degree, RankTriple, Theory,
};
use betapoly_core::poly::elementary_symmetric;
use betapoly_core::{
    FlagRingPresentation, FormalGroupLaw, LawKind, Monomial, Permutation, Poly, Scalar, Var,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn beta() -> Poly {
    Poly::beta()
}

/// `Π_{i+j≤n}(x_i + y_j + β x_i y_j)` expanded one factor at a time.
fn top_product_oracle(n: usize) -> Poly {
    let mut acc = Poly::one();
    for i in 1..=n {
        for j in 1..=n {
            if i + j <= n {
                let (x, y) = (Poly::x(i), Poly::y(j));
                acc = acc * (&x + &y + beta() * x * y);
            }
        }
    }
    acc
}

fn swap_xy(p: &Poly) -> Poly {
    let mut map = BTreeMap::new();
    for v in p.vars() {
        match v {
            Var::X(i) => {
                map.insert(v, Poly::var(Var::Y(i)));
            }
            Var::Y(i) => {
                map.insert(v, Poly::var(Var::X(i)));
            }
            _ => {}
        }
    }
    p.substitute(&map)
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize, max_degree: u32, with_beta: bool) -> Poly {
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(1..=4) {
        let mut factors = Vec::new();
        let mut budget = rng.gen_range(0..=max_degree);
        for i in 1..=n {
            let k = rng.gen_range(0..=budget);
            budget -= k;
            factors.push((Var::x(i), k));
        }
        if with_beta && rng.gen_bool(0.3) {
            factors.push((Var::Beta, 1));
        }
        let c = rng.gen_range(-5i64..=5);
        terms.push((Monomial::from_factors(factors), Scalar::from(c)));
    }
    Poly::from_terms(terms)
}

fn c1_recursion_ground_truth() -> Check {
    for n in 1..=5 {
        let top = beta_poly(&Permutation::longest(n));
        ensure(top == top_product_oracle(n), || format!("h_w0 differs from the product at n={n}"))?;
    }
    for n in 1..=4 {
        let id = beta_poly(&Permutation::identity(n));
        ensure(id == Poly::one(), || format!("h_id = {id} at n={n}"))?;
    }
    Ok("h_w0 = product for n<=5; h_id = 1 for n<=4".into())
}

fn c2_well_definedness() -> Check {
    let mut words = 0;
    for w in Permutation::all(4) {
        let expected = beta_poly(&w);
        for word in words_from_top(&w) {
            words += 1;
            let got = beta_poly_along(4, &word).map_err(e)?;
            ensure(got == expected, || format!("{w}: word {word:?} gives a different polynomial"))?;
        }
    }
    Ok(format!("{words} reduced words over S_4 agree"))
}

fn c3_stability() -> Check {
    for w in Permutation::all(3) {
        let lifted = beta_poly(&w.embed(4));
        ensure(lifted == beta_poly(&w), || format!("{w} changes in S_4"))?;
    }
    Ok("S_3 -> S_4 stable".into())
}

fn c4_hecke_equivalence() -> Check {
    let h = build_hxy(4).map_err(e)?;
    for w in Permutation::all(4) {
        ensure(h.coefficient(&w) == beta_poly(&w), || format!("coefficient at {w} differs"))?;
    }
    Ok("24 coefficients match".into())
}

fn c5_alternative_product() -> Check {
    for n in 1..=4 {
        let (a, b) = (build_hxy(n).map_err(e)?, alternative_product(n).map_err(e)?);
        ensure(a == b, || format!("products differ at n={n}"))?;
    }
    Ok("n <= 4".into())
}

fn c6_operator_identity() -> Check {
    for n in 2..=3 {
        let h = build_hxy(n).map_err(e)?;
        for i in 1..n {
            let lhs = phi_element(i, &h).map_err(e)?;
            let rhs = h.mul_by_generator(i).map_err(e)?.sub(&h.scale(&beta())).map_err(e)?;
            ensure(lhs == rhs, || format!("n={n}, i={i}"))?;
        }
    }
    Ok("n <= 3, all i".into())
}

fn c7_duality_symmetry() -> Check {
    let perms = Permutation::all(4);
    let table: BTreeMap<&Permutation, Poly> = perms.iter().map(|w| (w, beta_poly(w))).collect();
    for w in &perms {
        let p = &table[w];
        ensure(table[&w.inverse()] == swap_xy(p), || format!("duality fails at {w}"))?;
        for i in 1..4 {
            if w.at(i) < w.at(i + 1) {
                ensure(p.swap_vars(Var::x(i), Var::x(i + 1)) == *p, || format!("x-symmetry at {w}, i={i}"))?;
            }
            let inv = w.inverse();
            if inv.at(i) < inv.at(i + 1) {
                ensure(p.swap_vars(Var::y(i), Var::y(i + 1)) == *p, || format!("y-symmetry at {w}, i={i}"))?;
            }
        }
    }
    Ok("all of S_4".into())
}

fn c8_operator_algebra() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let b = beta();
    let f = |i: usize, p: &Poly| phi(&b, i, p).map_err(e);
    for k in 0..500 {
        let p = random_poly(&mut rng, 4, 5, true);
        for i in 1..4 {
            let once = f(i, &p)?;
            ensure(f(i, &once)? == -(&b * &once), || format!("phi^2 at sample {k}, i={i}"))?;
        }
        for i in 1..3 {
            let l = f(i, &f(i + 1, &f(i, &p)?)?)?;
            let r = f(i + 1, &f(i, &f(i + 1, &p)?)?)?;
            ensure(l == r, || format!("braid at sample {k}, i={i}"))?;
        }
        ensure(f(1, &f(3, &p)?)? == f(3, &f(1, &p)?)?, || format!("commutation at sample {k}"))?;
    }
    Ok("500 samples at n=4".into())
}

fn c9_multiplicative_coincidence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    // F = u + v + βuv, i.e. the multiplicative law with b = -β.
    let kind = LawKind::Multiplicative { b: -beta() };
    let ops = FglOperators::new(&kind, 8).map_err(e)?;
    for k in 0..200 {
        let p = random_poly(&mut rng, 4, 5, false);
        for i in 1..4 {
            let a = ops.apply(i, &p, 8).map_err(e)?;
            ensure(a == phi(&beta(), i, &p).map_err(e)?, || format!("A_{i} differs at sample {k}"))?;
        }
    }
    let kind = LawKind::multiplicative_beta();
    let minus = -beta();
    for w in Permutation::all(3) {
        let start = Permutation::longest(3).compose(&w).map_err(e)?;
        let expected = beta_poly_with(&w, &minus);
        for word in all_reduced_words(&start) {
            let got = bott_samelson_class(&kind, &word, 3, 6).map_err(e)?;
            ensure(got == expected, || format!("B_{word:?} differs from h^(-b) at {w}"))?;
        }
        debug_assert_eq!(lex_smallest_reduced_word(&start).len(), start.length());
    }
    Ok("A_i = phi_i on 200 samples of degree <= 5; B^mult = h^(-b) on S_3".into())
}

fn c10_universal_braid_failure() -> Check {
    let ring = FlagRingPresentation::trivial(3);
    let mut witnesses = Vec::new();
    for bound in 3..=5u32 {
        let kind = LawKind::UniversalRational { generators: 5 };
        let a = ring.reduce(&bott_samelson_trivial(&kind, &[1, 2, 1], 3, bound).map_err(e)?);
        let b = ring.reduce(&bott_samelson_trivial(&kind, &[2, 1, 2], 3, bound).map_err(e)?);
        ensure(a != b, || format!("classes coincide at D={bound}"))?;
        ensure(a != Poly::one() && b != Poly::one(), || format!("a class equals 1 at D={bound}"))?;
        let diff = &a - &b;
        let (mono, coeff) = diff
            .terms()
            .iter()
            .filter(|(m, _)| m.exponent(Var::M(1)) > 0)
            .min_by_key(|(m, _)| m.degree())
            .ok_or_else(|| format!("no m1 term in the difference at D={bound}"))?;
        witnesses.push(format!("D={bound}: {coeff}*{mono} (degree {})", mono.degree()));
        for (name, map) in [
            ("additive", additive_specialization(5)),
            ("multiplicative", multiplicative_specialization(5, &beta())),
        ] {
            let sa = ring.reduce(&a.substitute(&map).truncate(bound));
            let sb = ring.reduce(&b.substitute(&map).truncate(bound));
            ensure(sa == sb, || format!("{name} substitution does not collapse at D={bound}"))?;
        }
    }
    Ok(format!("visible from D=3; lowest m1 witness per D: {}", witnesses.join(", ")))
}

fn c11_fgl_axioms() -> Check {
    let bound = 6;
    let laws = [
        ("additive", FormalGroupLaw::additive(bound)),
        ("multiplicative", FormalGroupLaw::multiplicative(beta(), bound).map_err(e)?),
        ("universal", FormalGroupLaw::universal_rational(6, bound).map_err(e)?),
    ];
    let (u, v, w) = (Poly::var(Var::U(1)), Poly::var(Var::U(2)), Poly::var(Var::U(3)));
    for (name, law) in &laws {
        let f = |a: &Poly, b: &Poly| law.sum(a, b).map_err(e);
        ensure(f(&u, &Poly::zero())? == u, || format!("{name}: unit"))?;
        ensure(f(&u, &v)? == f(&v, &u)?, || format!("{name}: commutativity"))?;
        let l = f(&f(&u, &v)?, &w)?.truncate(bound);
        let r = f(&u, &f(&v, &w)?)?.truncate(bound);
        ensure(l == r, || format!("{name}: associativity"))?;
        let chi = law.inverse(&u).map_err(e)?;
        ensure(f(&u, &chi)?.truncate(bound).is_zero(), || format!("{name}: inverse"))?;
        if let Some(log) = law.logarithm() {
            // log F(u,v) = log u + log v.
            let at = |p: &Poly| log.substitute_truncated(&BTreeMap::from([(Var::U(1), p.clone())]), bound);
            let lhs = at(&f(&u, &v)?);
            let rhs = at(&u) + log.substitute_truncated(&BTreeMap::from([(Var::U(1), v.clone())]), bound);
            ensure(lhs == rhs, || format!("{name}: logarithm is not additive"))?;
        }
    }
    Ok("additive, multiplicative, universal K=D=6".into())
}

fn c12_porteous() -> Check {
    let triples = RankTriple::all_up_to(3);
    for &t in &triples {
        let p = specialize_nu(t);
        ensure(check_rect_symmetry(&p, t.f, t.e), || format!("{t:?}: not block-symmetric"))?;
        let ck = to_elementary(&p, t.f, t.e).map_err(e)?;
        ensure(from_elementary(&ck, t.f, t.e) == p, || format!("{t:?}: round trip"))?;
        let (r, ef) = (t.r, (t.e - t.r) * (t.f - t.r));
        ensure(t.nu().length() == ef, || format!("{t:?}: length of nu"))?;
        ensure(weighted_degree(&ck) == Some(ef as i64), || format!("{t:?}: weighted degree"))?;
        ensure(r <= t.e.min(t.f), || format!("{t:?}: rank"))?;
        for (theory, b) in [(Theory::CH, Poly::zero()), (Theory::K0, Poly::constant(-1))] {
            // Direct route: numeric β from the start.
            let direct = beta_poly_with(&t.nu(), &b)
                .set_zero(|v| matches!(v, Var::X(i) if usize::from(i) > t.f))
                .set_zero(|v| matches!(v, Var::Y(j) if usize::from(j) > t.e));
            let direct = to_elementary(&direct, t.f, t.e).map_err(e)?;
            let direct = if theory == Theory::CH {
                let map = (1..=t.e).map(|j| (Var::D(j as u8), -Poly::var(Var::E(j as u8)))).collect();
                direct.substitute(&map)
            } else {
                direct
            };
            let via_ck = thom_porteous(t, theory).map_err(e)?.body;
            ensure(via_ck == direct, || format!("{t:?}: {theory:?} specialization"))?;
            ensure(specialize_theory(&ck, t, theory) == via_ck, || format!("{t:?}: {theory:?} body"))?;
        }
        ensure(specialize_nu_padded(t, 1) == p, || format!("{t:?}: padding"))?;
    }
    Ok(format!("{} triples with e,f <= 3", triples.len()))
}

fn c13_flag_ring() -> Check {
    for n in 1..=4 {
        let fact: usize = (1..=n).product();
        let trivial = FlagRingPresentation::trivial(n).normal_monomials().len();
        let symbolic = FlagRingPresentation::symbolic(n).normal_monomials().len();
        ensure(trivial == fact && symbolic == fact, || format!("rank at n={n}"))?;
        let ring = FlagRingPresentation::symbolic(n);
        let xs: Vec<Poly> = (1..=n).map(Poly::x).collect();
        for i in 1..=n {
            let c = ring.reduce(&elementary_symmetric(i, &xs));
            ensure(c == Poly::var(Var::V(i as u8)), || format!("e_{i} reduces to {c} at n={n}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for n in 2..=4 {
        let ring = FlagRingPresentation::symbolic(n);
        for k in 0..40 {
            let (p, q) = (random_poly(&mut rng, n, 4, false), random_poly(&mut rng, n, 4, false));
            let lhs = ring.reduce(&(&p * &q));
            let rhs = ring.reduce(&(&ring.reduce(&p) * &ring.reduce(&q)));
            ensure(lhs == rhs, || format!("multiplicativity at n={n}, sample {k}"))?;
        }
    }
    Ok("rank n! for n <= 4; e_i -> c_i; reduce is multiplicative".into())
}

fn c14_determinism() -> Check {
    let bin = env!("CARGO_BIN_EXE_betapoly");
    let invocations: [&[&str]; 4] = [
        &["braid", "--law", "universal", "--n", "3", "--trunc", "4", "--samples", "6", "--seed", "17", "--format", "json"],
        &["family", "--theory", "grothendieck", "--perm", "2 3 1", "--format", "latex"],
        &["porteous", "--e", "2", "--f", "2", "--r", "1", "--format", "json"],
        &["hecke", "verify", "--n", "3", "--format", "json"],
    ];
    for args in invocations {
        let once = Process::new(bin).args(args).output().map_err(e)?;
        let twice = Process::new(bin).args(args).output().map_err(e)?;
        ensure(once.status.success(), || format!("{args:?} exited with {}", once.status))?;
        ensure(once.stdout == twice.stdout && once.stderr == twice.stderr, || format!("{args:?} output differs"))?;
    }
    let mut spec = JobSpec::new(Command::Braid { law: OperatorMode::Beta, n: 4, samples: 10 });
    spec.seed = 3;
    spec.format = Format::Json;
    ensure(run(&spec).map_err(e)? == run(&spec).map_err(e)?, || "in-process braid run differs".into())?;
    let spec = JobSpec::new(Command::Family { theory: FamilyTheory::Beta, perm: Permutation::longest(3) });
    ensure(run(&spec).map_err(e)? == run(&spec).map_err(e)?, || "in-process family run differs".into())?;
    Ok("binary and in-process runs are byte-identical".into())
}

fn main() {
    let criteria: [Criterion; 14] = [
        ("recursion ground truth", c1_recursion_ground_truth),
        ("well-definedness over reduced words", c2_well_definedness),
        ("stability", c3_stability),
        ("Hecke coefficient equivalence", c4_hecke_equivalence),
        ("alternative product", c5_alternative_product),
        ("operator identity", c6_operator_identity),
        ("duality and symmetry", c7_duality_symmetry),
        ("operator algebra", c8_operator_algebra),
        ("multiplicative coincidence", c9_multiplicative_coincidence),
        ("universal braid failure", c10_universal_braid_failure),
        ("formal group law axioms", c11_fgl_axioms),
        ("Thom-Porteous coherence", c12_porteous),
        ("flag-ring presentation", c13_flag_ring),
        ("determinism", c14_determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({detail}) [{secs:.2}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why} [{secs:.2}s]", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
