use hact_core::bialgebroid::*;
use hact_core::calculus::*;
use hact_core::es_backend::EsAlgebroid;
use hact_core::homogeneous::Homogeneous;
use hact_core::hopfalg::{verify_hopf, HopfAlgebra};
use hact_core::ncalg::presentation::builtin_presets;
use hact_core::ncalg::*;
use hact_core::report::Report;
use hact_core::smash_backend::{FreeHopfModule, SmashAlgebroid, SmashSurjection};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

static CHECKS: AtomicUsize = AtomicUsize::new(0);

type Outcome = Result<(), String>;

struct Fixtures {
    es: EsAlgebroid,
    desk: SmashAlgebroid,
    hs: Homogeneous,
}

fn fixtures() -> Fixtures {
    let mut lib = Library::with_dir(None);
    Fixtures {
        es: EsAlgebroid::load(&mut lib, "es_fibration").unwrap(),
        desk: SmashAlgebroid::load(&mut lib, "smash_desk").unwrap(),
        hs: Homogeneous::new(SmashSurjection::load(&mut lib, "smash_slq2").unwrap()),
    }
}

fn ensure(ok: bool, what: impl Into<String>) -> Outcome {
    CHECKS.fetch_add(1, Ordering::Relaxed);
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn passed(rep: &Report, what: &str) -> Outcome {
    CHECKS.fetch_add(rep.entries.len(), Ordering::Relaxed);
    match rep.failures().next() {
        None => ensure(!rep.entries.is_empty(), format!("{what}: empty report")),
        Some(e) => Err(format!("{what}: {} {} {:?} ({} failures)", e.id, e.element, e.witness, rep.failure_count())),
    }
}

const GENERATORS: [(&str, &str); 8] = [
    ("alpha", "a@d"),
    ("alphat", "-q^-1*a@b"),
    ("beta", "-q^-1*b@c"),
    ("betat", "d@c"),
    ("gamma", "-q^-1*c@b"),
    ("gammat", "c@d"),
    ("delta", "d@a"),
    ("deltat", "-q^-1*b@a"),
];

const COPRODUCTS: [(&str, &str); 8] = [
    ("alpha", "alpha@alpha + alphat@gammat"),
    ("beta", "q^2*beta@beta + deltat@betat"),
    ("gamma", "gamma@gamma + gammat@alphat"),
    ("delta", "delta@delta + q^2*betat@deltat"),
    ("alphat", "alpha@alphat + alphat@gamma"),
    ("betat", "q^2*betat@beta + delta@betat"),
    ("gammat", "gamma@gammat + gammat@alpha"),
    ("deltat", "deltat@delta + q^2*beta@deltat"),
];

const COUNITS: [(&str, &str); 8] = [
    ("alpha", "1 - q^2*B0"),
    ("beta", "B0"),
    ("gamma", "B0"),
    ("delta", "1 - B0"),
    ("alphat", "Bm"),
    ("betat", "q^-1*Bp"),
    ("gammat", "Bp"),
    ("deltat", "q^-1*Bm"),
];

const TRANSLATIONS: [(&str, &str); 8] = [
    ("alpha", "alpha@delta + q^2*gammat@deltat"),
    ("alphat", "alphat@delta + q^2*gamma@deltat"),
    ("beta", "beta@gamma + betat@alphat"),
    ("betat", "beta@gammat + betat@alpha"),
    ("gamma", "q^2*gamma@beta + alphat@betat"),
    ("gammat", "q^2*gammat@beta + alpha@betat"),
    ("delta", "delta@alpha + deltat@gammat"),
    ("deltat", "delta@alphat + deltat@gamma"),
];

fn es_tables(f: &Fixtures) -> Outcome {
    let e = &f.es;
    let s = e.sys();
    for (k, v) in GENERATORS {
        let want = parse_tensor(v, &[s, s]).unwrap();
        ensure(e.gen(k) == want, format!("generator {k}"))?;
    }
    for (k, v) in COPRODUCTS {
        ensure(compare(e, &e.delta(&e.gen(k)), &e.eval(v), &Pattern::tri2()).is_none(), format!("coproduct {k}"))?;
    }
    for (k, v) in COUNITS {
        ensure(e.counit(&e.gen(k)) == parse_poly(v, e.base()).unwrap(), format!("counit {k}"))?;
    }
    for (k, v) in TRANSLATIONS {
        ensure(compare(e, &e.translation(&e.gen(k)), &e.eval(v), &Pattern::blk2()).is_none(), format!("translation {k}"))?;
    }
    let w = Woronowicz::new(e, &[], 1).map_err(|x| x.to_string())?;
    let mut rows = (0, 0);
    for line in include_str!("fixtures/es_calculus.golden").lines() {
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let (lhs, rhs) = line.split_once(" = ").ok_or(line.to_string())?;
        let (kind, key) = lhs.split_once(' ').ok_or(line.to_string())?;
        let h = e.gen(key);
        let got = if kind == "d" {
            rows.0 += 1;
            w.d(&h)
        } else {
            rows.1 += 1;
            w.maurer_cartan(&pi_eps(e, &h)).map_err(|x| x.to_string())?
        };
        if let Some(diff) = w.differs(&got, &e.eval(rhs)) {
            return Err(format!("{kind} {key}: {diff}"));
        }
    }
    ensure(rows == (8, 4), format!("golden rows {rows:?}"))
}

fn axioms(f: &Fixtures) -> Outcome {
    let mut lib = Library::with_dir(None);
    for name in ["oq_sl2", "o_u1"] {
        let h = HopfAlgebra::load(&mut lib, name).map_err(|e| e.to_string())?;
        passed(&verify_hopf(&h), name)?;
    }
    let rep = verify_tch(&f.es, 2, 10, 17);
    passed(&rep, "tch es_fibration")?;
    for id in ["Tch1", "Tch2", "Tch3", "Tch4", "Tch5", "Tch6", "Tch7", "Tch8", "Tch9"] {
        ensure(rep.with_id(id).count() > 0, format!("es_fibration lacks {id}"))?;
    }
    passed(&verify_tch(&f.desk, 2, 10, 17), "tch smash_desk")?;
    passed(&verify_counit(&f.es, 2, 100, 23), "counit es_fibration")?;
    passed(&verify_counit(&f.desk, 2, 100, 23), "counit smash_desk")
}

fn confluence(f: &Fixtures) -> Outcome {
    let mut lib = Library::with_dir(None);
    for name in builtin_presets() {
        lib.load_preset(name).map_err(|e| e.to_string())?;
    }
    let mut systems: Vec<(String, std::sync::Arc<RewriteSystem>)> = Vec::new();
    for n in lib.names("algebra") {
        systems.push((n.clone(), lib.algebra(&n).map_err(|e| e.to_string())?.system));
    }
    for (name, alg) in [("smash_desk", &f.desk), ("smash_slq2", &f.hs.s.domain), ("smash_slq2 target", &f.hs.s.codomain)] {
        systems.push((name.to_string(), std::sync::Arc::new(alg.sys.clone())));
    }
    ensure(systems.len() >= 7, "too few systems")?;
    for (name, s) in systems {
        let rep = s.check_overlaps(4);
        ensure(rep.is_confluent(), format!("{name}: {:?}", rep.failures))?;
    }
    Ok(())
}

fn galois(f: &Fixtures) -> Outcome {
    passed(&check_galois_roundtrips(&f.es, 2), "galois es_fibration")?;
    passed(&check_galois_roundtrips(&f.hs.s.domain, 2), "galois smash_slq2")?;
    let rep = f.hs.check_chi_roundtrips(2);
    passed(&rep, "chi")?;
    ensure(rep.with_id("chi.explicit_after_map").count() > 0, "explicit inverse not exercised")?;
    ensure(rep.with_id("chi.map_after_explicit").count() > 0, "explicit inverse not exercised")
}

fn fundamental(f: &Fixtures) -> Outcome {
    let m = FreeHopfModule::new(&f.desk, vec![vec![], vec![NCPoly::letter(0)]]);
    let rep = m.check_fundamental(3);
    passed(&rep, "fundamental")?;
    for id in ["fundamental.xi_after_inverse", "fundamental.inverse_after_xi", "fundamental.coinvariants"] {
        ensure(rep.with_id(id).count() > 0, format!("{id} not exercised"))?;
    }
    // 1⊗V: {e0, e1} in degree 0, then x e0
    for (d, want) in [(0, 2), (1, 3), (2, 3), (3, 3)] {
        let mut span = Span::new();
        for c in m.coinvariants(d) {
            span.insert(m.linearize(&c).as_map().clone());
        }
        ensure(span.dim() == want, format!("degree {d}: {} coinvariants", span.dim()))?;
    }
    Ok(())
}

fn kernel(f: &Fixtures) -> Outcome {
    let h = &f.hs;
    let d = h.dom();
    let k = h.hopf_kernel(3);
    let oracle: Vec<Word> = d
        .sys
        .graded_basis(3)
        .into_iter()
        .filter(|w| h.s.g().alg.word_weight(&d.split(w).1) == 0)
        .collect();
    let dims: Vec<usize> = k.dims().iter().map(|x| x.1).collect();
    for deg in 0..=3 {
        let want = oracle.iter().filter(|w| w.len() <= deg).count();
        ensure(dims[deg] == want, format!("degree {deg}: dim B = {} vs {want}", dims[deg]))?;
    }
    let mut span = Span::new();
    for w in &oracle {
        span.insert(NCPoly::word(w.clone()).as_map().clone());
    }
    for b in &k.basis {
        ensure(span.contains(b.as_map()), format!("{} outside the oracle", b.to_text(d.alphabet())))?;
    }
    passed(&h.check_kernel(&h.hopf_kernel(2)), "kernel")?;
    let rep = h.check_hg_equivalence(3);
    passed(&rep, "hg")?;
    ensure(rep.with_id("hg.equal").count() == 4, "hg.equal per degree")
}

fn woronowicz(f: &Fixtures) -> Outcome {
    let d = &f.desk;
    for (name, gens) in [("I = 0", vec![]), ("I = H+", hplus(d, 3)), ("I = (x*t - x)", vec![d.parse("x*t - x")])] {
        let rep = classify_roundtrip(d, &gens, 3).map_err(|e| e.to_string())?;
        passed(&rep, name)?;
    }
    let c = HomogeneousCalculus::new(&f.hs, &[], 2).map_err(|e| e.to_string())?;
    let rep = c.check_xi();
    passed(&rep, "homogeneous xi")?;
    ensure(rep.with_id("xi.intertwines").count() > 0, "xi not exercised")
}

fn leibniz_pairs<A: Algebroid + ?Sized>(alg: &A, seed: u64) -> Vec<(Tensor, Tensor)> {
    let v = random_elements(alg, 1, 200, seed);
    v.chunks(2).map(|c| (c[0].clone(), c[1].clone())).collect()
}

fn with_unit<A: Algebroid + ?Sized>(alg: &A) -> Vec<(String, Tensor)> {
    let mut g = alg.generators();
    g.push(("1".into(), alg.one()));
    g
}

fn properties(f: &Fixtures) -> Outcome {
    let es = Woronowicz::new(&f.es, &[], 2).map_err(|e| e.to_string())?.with_coaction_quotient();
    let rep = es.check_leibniz(&leibniz_pairs(&f.es, 1));
    ensure(rep.entries.len() == 100, "es pair count")?;
    passed(&rep, "leibniz es_fibration")?;
    passed(&es.check_covariance(&with_unit(&f.es)), "covariance es_fibration")?;
    let slq2 = &f.hs.s.domain;
    let ws = Woronowicz::new(slq2, &[slq2.parse("b")], 2).map_err(|e| e.to_string())?.with_coaction_quotient();
    passed(&ws.check_leibniz(&leibniz_pairs(slq2, 2)), "leibniz smash_slq2")?;
    passed(&ws.check_covariance(&with_unit(slq2)), "covariance smash_slq2")?;
    let d = &f.desk;
    let wd = Woronowicz::new(d, &[d.parse("x*t - x")], 3).map_err(|e| e.to_string())?.with_coaction_quotient();
    passed(&wd.check_leibniz(&leibniz_pairs(d, 3)), "leibniz smash_desk")?;
    passed(&wd.check_covariance(&with_unit(d)), "covariance smash_desk")?;
    let rep = wd.check_ker_mc_left_ideal(&random_elements(d, 2, 20, 4));
    ensure(rep.entries.len() > 0, "no ker products in range")?;
    passed(&rep, "ker mc left ideal")
}

type Criterion = (&'static str, fn(&Fixtures) -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("ES tables", es_tables),
        ("axioms", axioms),
        ("confluence", confluence),
        ("Galois roundtrips", galois),
        ("fundamental theorem", fundamental),
        ("Hopf kernel and homogeneity", kernel),
        ("Woronowicz and Hermisson roundtrips", woronowicz),
        ("property suites", properties),
    ];
    let f = fixtures();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        CHECKS.store(0, Ordering::Relaxed);
        let out = catch_unwind(AssertUnwindSafe(|| run(&f))).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        let n = CHECKS.load(Ordering::Relaxed);
        match out {
            Ok(()) => println!("PASS {} {name} ({n} checks, {secs:.1}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {} {name} ({n} checks, {secs:.1}s): {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
