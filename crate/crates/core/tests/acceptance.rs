//! Acceptance criteria, one line of output each. Runs without the libtest
//! harness so the lines show up in `cargo test` output.

use std::process::{Command, ExitCode};
use std::time::Instant;

use proptest::prelude::RngExt;
use proptest::test_runner::{RngAlgorithm, TestRng};

use syk::algebra::{Elem, Generator, MonomialOrder, Signature, Word, Yangian};
use syk::gauss::{check_gauss, Composition};
use syk::morphisms::{verify_morphism, MapKind, MorphismSpec};
use syk::pbw::{enumerate_pbw, gr_bracket_check, Family, PbwToolkit};
use syk::report::VerifyReport;
use syk::verify::Verifier;
use syk::Rational;

type Outcome = Result<String, String>;

fn sig(m: usize, n: usize) -> Signature {
    Signature::new(m, n).unwrap()
}

fn mu(s: &str) -> Composition {
    s.parse().unwrap()
}

fn expect_ok(what: &str, rep: &VerifyReport) -> Result<usize, String> {
    if rep.ok() && rep.total > 0 {
        Ok(rep.total)
    } else if rep.total == 0 {
        Err(format!("{what}: no checks ran"))
    } else {
        let first = rep.failures.first().map(|f| format!("{} {:?}", f.relation, f.indices)).unwrap_or_default();
        Err(format!("{what}: {}/{} failed, first {first}", rep.failed, rep.total))
    }
}

fn expect_relation(what: &str, rep: &VerifyReport, rel: &str) -> Result<(), String> {
    match rep.relations.get(rel) {
        Some(c) if c.total > 0 => Ok(()),
        _ => Err(format!("{what}: relation {rel} was not exercised")),
    }
}

fn random_element(rng: &mut TestRng, d: usize, k: usize) -> Elem {
    let mut x = Elem::zero();
    for _ in 0..rng.random_range(1..=3) {
        let len = rng.random_range(1..=2);
        let w: Word<Generator> = (0..len)
            .map(|_| Generator::new(rng.random_range(1..=d), rng.random_range(1..=d), rng.random_range(1..=k)))
            .collect();
        let c = Rational::new(rng.random_range(-3..=3), rng.random_range(1..=2));
        x.add_term(w, c);
    }
    x
}

/// The defining relation written out independently of the rewriting rule.
fn defining_rhs(y: &Yangian, (i, j, r): (usize, usize, usize), (h, k, s): (usize, usize, usize)) -> Elem {
    let p = |x: usize| y.signature().index_parity(x);
    let neg = (p(i) & p(j)) ^ (p(i) & p(h)) ^ (p(j) & p(h));
    let mut out = Elem::zero();
    for t in 0..r.min(s) {
        let hi = r + s - 1 - t;
        out.add_assign(&y.multiply(&y.t(h, j, t), &y.t(i, k, hi)));
        out.sub_assign(&y.multiply(&y.t(h, j, hi), &y.t(i, k, t)));
    }
    if neg {
        out.neg()
    } else {
        out
    }
}

fn criterion1() -> Outcome {
    let mut rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
    let mut pairs = 0;
    let mut quads = 0;
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let y = Yangian::new(sig(m, n));
        let d = m + n;
        for _ in 0..1000 {
            let a = random_element(&mut rng, d, 4);
            let b = random_element(&mut rng, d, 4);
            let lhs = y.normal_form(&a.concat(&b));
            let rhs = y.multiply(&y.normal_form(&a), &y.normal_form(&b));
            if lhs != rhs {
                return Err(format!("({m}|{n}): NF(ab) != NF(NF(a)NF(b)) for a = {a:?}, b = {b:?}"));
            }
            pairs += 1;
        }
        for x in y.generators(3) {
            for z in y.generators(3) {
                let lhs = y.super_commutator(&Elem::symbol(x), &Elem::symbol(z));
                let rhs = defining_rhs(&y, (x.i(), x.j(), x.r()), (z.i(), z.j(), z.r()));
                if lhs != rhs {
                    return Err(format!("({m}|{n}): defining relation fails for {x:?}, {z:?}"));
                }
                quads += 1;
            }
        }
    }
    Ok(format!("{pairs} random pairs, {quads} generator pairs"))
}

fn criterion2() -> Outcome {
    let mut comps = 0;
    let mut checks = 0;
    for total in 1..=4 {
        for m in 0..=total {
            let s = sig(m, total - m);
            let y = Yangian::new(s);
            for c in Composition::all(s) {
                let rep = check_gauss(&y, &c, 3).map_err(|e| format!("{c}: {e}"))?;
                checks += expect_ok(&format!("{c}"), &rep)?;
                if s.m == 1 && s.n == 1 {
                    expect_relation("1|1", &rep, "t-odd")?;
                }
                comps += 1;
            }
        }
    }
    Ok(format!("{comps} compositions, {checks} checks"))
}

fn criterion3() -> Outcome {
    let mut checks = 0;
    for s in ["1|1", "2|1", "1,1|1", "1|1,1", "2,1|1", "1,1|1,1", "2|2", "1,1|2"] {
        for order in [MonomialOrder::OrderFirst, MonomialOrder::IndexFirst] {
            let v = Verifier::with_order(&mu(s), 3, order).map_err(|e| e.to_string())?;
            let rep = v.thm73().map_err(|e| e.to_string())?;
            checks += expect_ok(&format!("{s} {order:?}"), &rep)?;
            for rel in ["d-bracket", "de-bracket", "df-bracket", "ee-bracket", "ff-bracket", "ef-bracket"] {
                expect_relation(s, &rep, rel)?;
            }
            if s == "1,1|1,1" {
                expect_relation(s, &rep, "eeee-quartic")?;
                expect_relation(s, &rep, "ffff-quartic")?;
            }
        }
    }
    Ok(format!("8 compositions in 2 monomial orders, {checks} checks"))
}

fn criterion4() -> Outcome {
    let mut checks = 0;
    for s in ["1|1", "2|1", "2|2"] {
        let rep = Verifier::new(&mu(s), 3).and_then(|v| v.mn11()).map_err(|e| e.to_string())?;
        checks += expect_ok(&format!("mn11 {s}"), &rep)?;
    }
    for s in ["1,1|1", "2,1|1"] {
        let rep = Verifier::new(&mu(s), 3).and_then(|v| v.m2n1()).map_err(|e| e.to_string())?;
        checks += expect_ok(&format!("m2n1 {s}"), &rep)?;
        for c in 'a'..='h' {
            expect_relation(s, &rep, &format!("cubic-{c}"))?;
        }
    }
    Ok(format!("{checks} checks"))
}

fn criterion5() -> Outcome {
    let mut checks = 0;
    let mut run = |kind: MapKind, m: usize, n: usize, must: &[&str]| -> Result<(), String> {
        let spec = MorphismSpec { kind, source: sig(m, n) };
        let what = format!("{kind} on ({m}|{n})");
        let rep = verify_morphism(&spec, 3).map_err(|e| format!("{what}: {e}"))?;
        checks += expect_ok(&what, &rep)?;
        for rel in must {
            expect_relation(&what, &rep, rel)?;
        }
        Ok(())
    };
    for (m, n) in [(1, 1), (2, 1)] {
        run(MapKind::Rho, m, n, &["involution"])?;
        run(MapKind::Omega, m, n, &["involution"])?;
        run(MapKind::Zeta, m, n, &["involution", "zeta-inverse", "zeta-d", "zeta-e-adjacent", "zeta-f-adjacent"])?;
    }
    for k in 1..=2 {
        for total in 1..=4 - k {
            for m in 0..=total {
                run(MapKind::Psi(k), m, total - m, &["psi-quasidet"])?;
            }
        }
    }
    Ok(format!("{checks} checks"))
}

fn criterion6() -> Outcome {
    let mut checks = 0;
    for s in ["1|1", "2|1", "1,1|1"] {
        let rep = gr_bracket_check(&mu(s), 2).map_err(|e| e.to_string())?;
        checks += expect_ok(&format!("graded {s}"), &rep)?;
    }
    let mut windows = vec![];
    for s in ["1|1", "1,1|1"] {
        let c = mu(s);
        let tk = PbwToolkit::new(&c, 4).map_err(|e| e.to_string())?;
        let monos = enumerate_pbw(&c, 1, 2, Family::Full);
        let r = tk.independence(&monos).map_err(|e| e.to_string())?;
        if !r.full_rank() {
            return Err(format!("{s}: rank {} of {}", r.rank, r.count));
        }
        let span = tk.spanning(1, 2).map_err(|e| e.to_string())?;
        expect_ok(&format!("span {s}"), &span)?;
        windows.push(format!("{s}: rank {}/{}, span {}/{}", r.rank, r.count, span.passed, span.total));
    }
    Ok(format!("{checks} graded checks; {}", windows.join("; ")))
}

fn criterion7() -> Outcome {
    let run = |workers: &str, m: &str| {
        Command::new(env!("CARGO_BIN_EXE_syk"))
            .env("SYK_WORKERS", workers)
            .args(["verify", "--suite", "all", "--mu", m, "-K", "3"])
            .output()
            .map_err(|e| e.to_string())
    };
    let mut bytes = 0;
    for m in ["1,1|1", "2|2"] {
        let (a, b) = (run("1", m)?, run("4", m)?);
        if a.status.code() != Some(0) || b.status.code() != Some(0) {
            return Err(format!("{m}: verify exited with {:?} / {:?}", a.status.code(), b.status.code()));
        }
        if a.stdout != b.stdout {
            return Err(format!("{m}: reports differ between 1 and 4 workers"));
        }
        bytes += a.stdout.len();
    }
    Ok(format!("2 compositions, {bytes} identical bytes"))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 7] = [
        ("defining-relation closure", criterion1),
        ("gauss consistency", criterion2),
        ("parabolic presentation", criterion3),
        ("special-case lemmas", criterion4),
        ("morphism suite", criterion5),
        ("graded and PBW", criterion6),
        ("determinism", criterion7),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let id = (n + 1).to_string();
        if !filter.is_empty() && !filter.iter().any(|x| *x == id || name.contains(x.as_str())) {
            continue;
        }
        let start = Instant::now();
        let out = f();
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(detail) => println!("acceptance {id} {name}: PASS ({detail}; {secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("acceptance {id} {name}: FAIL ({why}; {secs:.1}s)");
            }
        }
    }
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
