//! Runs every acceptance criterion and prints one PASS/FAIL line for each.

mod common;

use std::time::Instant;

use arrkt::arrangement::{
    enumerate_chambers_with, is_simple, Arrangement, ExhaustiveSigns, SignVector,
};
use arrkt::catalog;
use arrkt::delres::{certify_exactness_b, certify_exactness_p, normalize_for_restriction};
use arrkt::exactla::hnf;
use arrkt::kring::{
    certify_decone_identity, family5_numerator, ideal_generators,
    KRing, LineValue, RingElement,
};
use arrkt::ormatroid::{minimal_infeasible_pairs, MatroidData};
use arrkt::ratk::{betti, k_dimensions};
use arrkt::subring::certify_pb;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(condition: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message())
    }
}

fn err<E: std::fmt::Display>(name: &str) -> impl Fn(E) -> String + '_ {
    move |e| format!("{name}: {e}")
}

/// Chamber count by testing every full sign vector, independent of the
/// incremental enumeration the rings use.
fn independent_chamber_count(a: &Arrangement) -> usize {
    enumerate_chambers_with(a, &ExhaustiveSigns).len()
}

fn ac1() -> Outcome {
    let a = catalog::point();
    let ring = KRing::new(&a).map_err(err("point"))?;
    let labels: Vec<String> = ring.basis().elements().iter().map(ToString::to_string).collect();
    ensure(labels == ["1", "x", "e{1}"], || format!("basis {labels:?}"))?;
    let x = ring.x();
    let e = ring.basis_element(2);
    let two_x = x.scale_by(2);
    let two_e = e.scale_by(2);
    let xx = ring.multiply(&x, &x).map_err(err("x*x"))?;
    ensure(xx == two_x, || format!("x^2 = {}", xx.render(ring.basis())))?;
    let ee = ring.multiply(&e, &e).map_err(err("e*e"))?;
    ensure(ee == two_e, || format!("e^2 = {}", ee.render(ring.basis())))?;
    let trivial = ring.multiply(&e, &x.sub(&e)).map_err(err("e(x-e)"))?;
    ensure(trivial.is_zero(), || format!("e(x-e) = {}", trivial.render(ring.basis())))?;
    let minus = ring.chamber_index(&SignVector::parse("-").unwrap()).unwrap();
    let plus = ring.chamber_index(&SignVector::parse("+").unwrap()).unwrap();
    let h = ring.h_image(2);
    ensure(h.values[minus] == LineValue::zero() && h.values[plus] == LineValue::x(), || {
        format!("h(e) = {h}")
    })?;
    Ok("basis {1, x, e}; x^2 = 2x, e^2 = 2e, e(x-e) = 0; h(e) = (0 on R-, x on R+)".into())
}

fn ac2(corpus: &[(String, Arrangement)]) -> Outcome {
    ensure(corpus.len() >= 12, || format!("corpus has only {} members", corpus.len()))?;
    for (name, a) in corpus {
        let ring = KRing::new(a).map_err(err(name))?;
        let r = independent_chamber_count(a);
        let rank = ring.image_lattice().rank();
        ensure(rank == r + 1, || format!("{name}: lattice rank {rank}, R = {r}"))?;
        ensure(ring.rank() == r + 1, || format!("{name}: basis size {}", ring.rank()))?;
    }
    Ok(format!("image lattice rank = R + 1 on {} arrangements", corpus.len()))
}

fn ac3(corpus: &[(String, Arrangement)]) -> Outcome {
    let mut total = 0;
    let mut families = [0usize; 5];
    for (name, a) in corpus {
        let ring = KRing::new(a).map_err(err(name))?;
        for g in ideal_generators(a).map_err(err(name))? {
            ensure(ring.evaluate(&g.poly).is_zero(), || format!("{name}: {g} does not vanish"))?;
            families[usize::from(g.family) - 1] += 1;
            total += 1;
        }
    }
    ensure(families.iter().all(|&k| k > 0), || format!("family counts {families:?}"))?;
    Ok(format!("{total} generators vanish, per family {families:?}"))
}

fn ac4(corpus: &[(String, Arrangement)]) -> Outcome {
    let mut products = 0;
    for (name, a) in corpus {
        let ring = KRing::new(a).map_err(err(name))?;
        let table = ring.structure_constants().map_err(err(name))?;
        products += table.len() * (table.len() + 1) / 2;
    }
    Ok(format!("{products} basis products integral over the basis"))
}

fn ac5(corpus: &[(String, Arrangement)]) -> Outcome {
    let mut divided = 0;
    for (name, a) in corpus {
        for pair in minimal_infeasible_pairs(a).into_iter().filter(|p| p.family5) {
            let numerator = family5_numerator(a.len(), &pair.plus, &pair.minus);
            for (m, _) in numerator.terms() {
                ensure(*m.0.last().unwrap() >= 1, || {
                    format!("{name}: {pair} has a monomial without x")
                })?;
            }
            numerator.divide_by_x().map_err(err(name))?;
            divided += 1;
        }
    }
    ensure(divided > 0, || "no family-5 pairs in the corpus".into())?;
    let quotient = family5_numerator(3, &[0, 1], &[2])
        .divide_by_x()
        .map_err(err("concurrent-3-lines"))?
        .to_string();
    let expected = "-e1*e2 + e1*e3 + e2*e3 - x*e3";
    let negated = "e1*e2 - e1*e3 - e2*e3 + x*e3";
    ensure(quotient == expected || quotient == negated, || {
        format!("concurrent quotient {quotient}")
    })?;
    Ok(format!("{divided} family-5 numerators divisible by x; concurrent quotient {quotient}"))
}

fn ac6(corpus: &[(String, Arrangement)]) -> Outcome {
    let mut certified = Vec::new();
    for (name, a) in corpus.iter().filter(|(_, a)| is_simple(a)) {
        let report = certify_pb(a).map_err(err(name))?;
        ensure(report.passed(), || format!("{name}:\n{report}"))?;
        certified.push(name.as_str());
    }
    ensure(certified.len() >= 5, || format!("only {} simple members", certified.len()))?;
    Ok(format!("lands, isomorphism, closure on {} simple arrangements", certified.len()))
}

fn ac7(corpus: &[(String, Arrangement)]) -> Outcome {
    let mut p = 0;
    let mut b = 0;
    for (name, a) in corpus.iter().filter(|(_, a)| !a.is_empty()) {
        let report = certify_exactness_p(a).map_err(err(name))?;
        ensure(report.passed(), || format!("{name}:\n{report}"))?;
        p += 1;
        if is_simple(a) {
            let normalized = normalize_for_restriction(a).map_err(err(name))?;
            let report = certify_exactness_b(&normalized).map_err(err(name))?;
            ensure(report.passed(), || format!("{name} (B):\n{report}"))?;
            b += 1;
        }
    }
    Ok(format!("P sequence exact on {p}, B sequence exact on {b} normalized simple arrangements"))
}

fn ac8(corpus: &[(String, Arrangement)]) -> Outcome {
    let mut checked = 0;
    for (name, a) in corpus.iter().filter(|(_, a)| a.len() >= 2 && a.is_central()) {
        let report = certify_decone_identity(a, 0).map_err(err(name))?;
        ensure(report.passed(), || format!("{name}:\n{report}"))?;
        checked += 1;
    }
    ensure(checked >= 3, || format!("only {checked} central members"))?;
    Ok(format!("opposite-sign rule holds on {checked} central arrangements"))
}

fn ac9(corpus: &[(String, Arrangement)]) -> Outcome {
    let mut cases = 0;
    for (name, a) in corpus {
        let ring = KRing::new(a).map_err(err(name))?;
        let table = ring.structure_constants().map_err(err(name))?;
        for i in 0..a.len() {
            let target = ring.reoriented(i).map_err(err(name))?;
            let moved = ring
                .h_images()
                .iter()
                .map(|v| ring.transport_image(&target, i, v).map(|w| w.to_vector()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err(name))?;
            ensure(hnf(2 * target.chamber_count(), &moved) == *target.image_lattice(), || {
                format!("{name}, i={}: lattices differ", i + 1)
            })?;

            let images: Vec<RingElement> = (0..ring.rank())
                .map(|k| ring.reorient_iso(&target, i, &ring.basis_element(k)))
                .collect::<Result<_, _>>()
                .map_err(err(name))?;
            // e_i ↦ x - e_i, other generators fixed
            for j in 0..a.len() {
                let e_j = RingElement::new(
                    target.to_basis(&target.generator_image(j)).map_err(err(name))?.coords,
                );
                let expected = if j == i { target.x().sub(&e_j) } else { e_j };
                let source = ring.to_basis(&ring.generator_image(j)).map_err(err(name))?;
                let got = ring.reorient_iso(&target, i, &source).map_err(err(name))?;
                ensure(got == expected, || format!("{name}: e{} maps to {got:?}", j + 1))?;
            }
            for j in 0..ring.rank() {
                for k in j..ring.rank() {
                    let lhs = ring.reorient_iso(&target, i, &table[j][k]).map_err(err(name))?;
                    let rhs = target.multiply(&images[j], &images[k]).map_err(err(name))?;
                    ensure(lhs == rhs, || format!("{name}, i={}: product {j},{k}", i + 1))?;
                }
            }
            cases += 1;
        }
    }
    Ok(format!("lattice bijection and structure constants agree for {cases} reorientations"))
}

fn ac10(corpus: &[(String, Arrangement)]) -> Outcome {
    let lines = k_dimensions(&catalog::generic_three_lines()).map_err(err("generic-3-lines"))?;
    ensure((lines.dim_k, lines.dim_line_q, lines.gap) == (11, 8, 3), || format!("{lines:?}"))?;
    let point = k_dimensions(&catalog::point()).map_err(err("point"))?;
    ensure((point.dim_k, point.dim_line_q, point.gap) == (3, 3, 0), || format!("{point:?}"))?;
    for (name, a) in corpus {
        let profile = betti(a).map_err(err(name))?;
        let r = independent_chamber_count(a);
        ensure(profile.total() == r, || format!("{name}: {profile}, counted R = {r}"))?;
    }
    Ok("generic-3-lines (11, 8, 3), point (3, 3, 0); sum of b[k] = R on the corpus".into())
}

fn ac11(corpus: &[(String, Arrangement)]) -> Outcome {
    for (name, a) in corpus {
        let nbc = MatroidData::compute(a).map_err(err(name))?.nbc_sets.len();
        let r = independent_chamber_count(a);
        ensure(nbc == r, || format!("{name}: {nbc} nbc-sets, {r} chambers"))?;
    }
    Ok(format!("#nbc = #chambers on {} arrangements", corpus.len()))
}

fn main() {
    let corpus = common::corpus();
    let criteria: Vec<Criterion> = vec![
        ("AC1 one-point example", Box::new(ac1)),
        ("AC2 rank law", Box::new(|| ac2(&corpus))),
        ("AC3 kernel containment", Box::new(|| ac3(&corpus))),
        ("AC4 closure and integrality", Box::new(|| ac4(&corpus))),
        ("AC5 family-5 exact division", Box::new(|| ac5(&corpus))),
        ("AC6 subring certification", Box::new(|| ac6(&corpus))),
        ("AC7 deletion-restriction exactness", Box::new(|| ac7(&corpus))),
        ("AC8 decone identity", Box::new(|| ac8(&corpus))),
        ("AC9 reorientation isomorphism", Box::new(|| ac9(&corpus))),
        ("AC10 rational dimensions", Box::new(|| ac10(&corpus))),
        ("AC11 nbc and chamber counts", Box::new(|| ac11(&corpus))),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail} ({elapsed:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why} ({elapsed:.2}s)");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
