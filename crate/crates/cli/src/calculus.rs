use crate::target::Target;
use crate::{load, pretty, render_reports, summary, tables, CliError, Common, Format, What};
use hact_core::bialgebroid::{random_elements, Algebroid};
use hact_core::calculus::{hplus, left_ideal, Woronowicz};
use hact_core::ncalg::{parse_poly, RewriteSystem, Tensor};
use hact_core::report::Report;
use serde_json::json;

fn parse(text: &str, sys: &RewriteSystem) -> Result<Tensor, CliError> {
    let p = parse_poly(text, sys).map_err(|e| CliError::Parse(text.to_string(), e.to_string()))?;
    Ok(Tensor::from_poly(&sys.normalize(&p)))
}

fn dims<A: Algebroid + ?Sized>(alg: &A, gens: &[Tensor], degree: usize) -> Vec<(usize, usize, usize)> {
    (0..=degree).map(|d| (d, hplus(alg, d).len(), left_ideal(alg, gens, d).len())).collect()
}

fn checks<A: Algebroid + ?Sized>(w: &Woronowicz<A>) -> Vec<Report> {
    let alg = w.alg;
    let v = random_elements(alg, 1, 200, 7);
    let pairs: Vec<_> = v.chunks(2).map(|c| (c[0].clone(), c[1].clone())).collect();
    let mut gens = alg.generators();
    gens.push(("1".into(), alg.one()));
    vec![w.check_leibniz(&pairs), w.check_covariance(&gens), w.check_ker_mc_left_ideal(&alg.basis(1))]
}

fn build<A: Algebroid + ?Sized>(alg: &A, gens: &[Tensor], degree: usize) -> Result<(Vec<Report>, Vec<(usize, usize, usize)>), CliError> {
    for g in gens {
        let k = alg.degree(g);
        if k > degree {
            return Err(CliError::Truncation(alg.text(g), k, degree));
        }
    }
    let w = Woronowicz::new(alg, gens, degree)?.with_coaction_quotient();
    Ok((checks(&w), dims(alg, gens, degree)))
}

pub fn run(c: &Common, ideal: &[String]) -> Result<bool, CliError> {
    let loaded = load(c)?;
    let degree = c.max_degree as usize;
    let (gens, (reports, dims)) = match &loaded.target {
        Target::Es(e) => {
            let mut gens = Vec::new();
            for t in ideal {
                gens.push(e.eval_symbolic(&parse(t, &e.symbols)?));
            }
            let r = build(e.as_ref(), &gens, degree)?;
            (gens, r)
        }
        Target::Smash(s) => {
            let gens = ideal.iter().map(|t| parse(t, &s.sys)).collect::<Result<Vec<_>, _>>()?;
            let r = build(s.as_ref(), &gens, degree)?;
            (gens, r)
        }
        Target::Surjection(h) => {
            let gens = ideal.iter().map(|t| parse(t, &h.dom().sys)).collect::<Result<Vec<_>, _>>()?;
            let r = build(h.dom(), &gens, degree)?;
            (gens, r)
        }
        _ => return Err(CliError::Unsupported(format!("a calculus on a {}", loaded.target.kind()))),
    };
    let whats = match c.what {
        Some(w) => vec![w],
        None => vec![What::D, What::MaurerCartan],
    };
    let mut ts = Vec::new();
    for w in whats {
        ts.push(tables::table(&loaded.target, w, &gens, degree)?);
    }
    let (n, fails) = summary(&reports);
    let text = match c.format {
        Format::Table => {
            let mut s = format!("{} calculus, ideal ({}), max degree {degree}\n", loaded.name, ideal.join(", "));
            for t in &ts {
                s.push_str(&t.text());
            }
            s.push_str("# dimensions\ndegree  H+  I  H+/I\n");
            for (d, p, i) in &dims {
                s.push_str(&format!("{d:>6}  {p:>2}  {i}  {}\n", p - i));
            }
            s + &render_reports(&reports)
        }
        Format::Report => {
            let dims: Vec<_> = dims.iter().map(|(d, p, i)| json!({"degree": d, "plus": p, "ideal": i, "forms": p - i})).collect();
            let tables: Vec<_> = ts.iter().map(|t| t.json()).collect();
            pretty(json!({
                "command": "calculus",
                "target": loaded.name,
                "ideal": ideal,
                "max_degree": degree,
                "tables": tables,
                "dimensions": dims,
                "checks": n,
                "failures": fails,
                "suites": reports,
            }))
        }
    };
    crate::emit(c, text)?;
    Ok(fails == 0)
}
