use crate::target::{hopf_algebras, Loaded, Target};
use crate::{Check, CliError};
use hact_core::bialgebroid::*;
use hact_core::calculus::*;
use hact_core::homogeneous::Homogeneous;
use hact_core::hopfalg::verify_hopf;
use hact_core::ncalg::Tensor;
use hact_core::report::Report;
use hact_core::smash_backend::FreeHopfModule;

const SEED: u64 = 0x4861_6374;

pub fn confluence(loaded: &Loaded, degree: usize) -> Report {
    let mut rep = Report::new("confluence");
    for (name, sys) in loaded.target.systems() {
        let o = sys.check_overlaps(degree.max(4));
        if o.is_confluent() {
            rep.pass("overlaps.resolved", format!("{name} ({} ambiguities)", o.checked));
        }
        for a in &o.failures {
            let al = sys.alphabet();
            rep.fail(
                "overlaps.resolved",
                format!("{name}: {}", hact_core::ncalg::NCPoly::word(a.word.clone()).to_text(al)),
                format!("{} vs {}", a.left.to_text(al), a.right.to_text(al)),
            );
        }
    }
    rep
}

/// Runs the requested suites; checks that do not apply to the target are
/// recorded as notes.
pub fn run(loaded: &mut Loaded, checks: &[Check], degree: usize) -> Result<Vec<Report>, CliError> {
    let mut out = vec![confluence(loaded, degree)];
    let mut skipped = Report::new("not applicable");
    for &check in checks {
        if check == Check::Hopf {
            let hs = hopf_algebras(loaded)?;
            if hs.is_empty() {
                skipped.note(check.name());
            }
            for h in hs {
                out.push(verify_hopf(&h));
            }
            continue;
        }
        let reps = match &loaded.target {
            Target::Es(e) => algebroid(e.as_ref(), check, degree, None),
            Target::Smash(s) => {
                if check == Check::Fundamental {
                    Some(vec![FreeHopfModule::new(s, vec![vec![]]).check_fundamental(degree)])
                } else {
                    algebroid(s.as_ref(), check, degree, None)
                }
            }
            Target::Surjection(h) => surjection(h, check, degree),
            Target::Algebra(_) | Target::Hopf(_) => None,
        };
        match reps {
            Some(r) => out.extend(r),
            None => skipped.note(check.name()),
        }
    }
    if !skipped.notes.is_empty() {
        out.push(skipped);
    }
    Ok(out)
}

fn with_unit<A: Algebroid + ?Sized>(alg: &A) -> Vec<(String, Tensor)> {
    let mut g = alg.generators();
    g.push(("1".into(), alg.one()));
    g
}

fn pairs<A: Algebroid + ?Sized>(alg: &A, degree: usize, count: usize) -> Vec<(Tensor, Tensor)> {
    let v = random_elements(alg, degree, 2 * count, SEED);
    v.chunks(2).map(|c| (c[0].clone(), c[1].clone())).collect()
}

/// Suites on a bare algebroid; `ideal` selects the calculus.
pub fn algebroid<A: Algebroid + ?Sized>(alg: &A, check: Check, degree: usize, ideal: Option<&[Tensor]>) -> Option<Vec<Report>> {
    let gens = ideal.unwrap_or(&[]);
    let half = degree.div_ceil(2).max(1);
    let calc = || Woronowicz::new(alg, gens, degree).expect("generators checked by the caller");
    Some(match check {
        Check::Tch => vec![verify_tch(alg, degree, 20, SEED)],
        Check::Takeuchi => {
            let mut rep = verify_structure(alg);
            for h in alg.basis(degree) {
                let w = takeuchi_defect(alg, &h).map(|(r, w)| format!("{r}: {w}"));
                rep.check("takeuchi", alg.text(&h), w);
            }
            vec![rep]
        }
        Check::Counit => vec![verify_counit(alg, degree, 100, SEED)],
        Check::Galois => vec![check_galois_roundtrips(alg, degree)],
        Check::Leibniz => vec![calc().check_leibniz(&pairs(alg, half.min(degree), 100))],
        Check::Covariance => vec![calc().with_coaction_quotient().check_covariance(&with_unit(alg))],
        Check::MaurerCartan => vec![calc().with_coaction_quotient().check_maurer_cartan(&alg.generators())],
        Check::Calculus => {
            let w = calc();
            let plus: Vec<Tensor> = alg.generators().iter().map(|(_, g)| pi_eps(alg, g)).collect();
            vec![w.check_recovery(&alg.basis(1), &plus), w.check_ker_mc_left_ideal(&alg.basis(1))]
        }
        Check::Roundtrip => vec![classify_roundtrip(alg, gens, degree).expect("generators checked by the caller")],
        Check::Hopf | Check::Fundamental | Check::Kernel => return None,
    })
}

fn surjection(h: &Homogeneous, check: Check, degree: usize) -> Option<Vec<Report>> {
    let dom = h.dom();
    Some(match check {
        Check::Kernel => {
            let k = h.hopf_kernel(degree);
            vec![h.check_kernel(&k), h.check_hg_equivalence(degree), h.check_coideal(degree.min(2))]
        }
        Check::Galois => {
            let mut v = algebroid(dom, check, degree, None)?;
            v.push(h.check_chi_roundtrips(degree));
            v.push(h.check_xi(degree));
            v
        }
        Check::Calculus => {
            let c = HomogeneousCalculus::new(h, &[], degree).expect("empty ideal");
            vec![c.check_fodc(), c.check_xi()]
        }
        Check::Roundtrip => {
            let c = HomogeneousCalculus::new(h, &[], degree).expect("empty ideal");
            vec![c.hermisson_roundtrip(), h.takeuchi_phi(degree)]
        }
        Check::Fundamental => vec![FreeHopfModule::new(&h.s.codomain, vec![vec![]]).check_fundamental(degree)],
        _ => algebroid(dom, check, degree, None)?,
    })
}
