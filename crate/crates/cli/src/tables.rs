use crate::target::Target;
use crate::{CliError, What};
use hact_core::bialgebroid::{Algebroid, Pattern};
use hact_core::calculus::{pi_eps, Woronowicz};
use hact_core::es_backend::EsAlgebroid;
use hact_core::ncalg::Tensor;
use serde_json::json;

pub struct Row {
    pub key: String,
    pub value: String,
}

pub struct Table {
    pub title: String,
    pub rows: Vec<Row>,
}

impl Table {
    pub fn text(&self) -> String {
        let width = self.rows.iter().map(|r| r.key.chars().count()).max().unwrap_or(0);
        let mut s = format!("# {}\n", self.title);
        for r in &self.rows {
            let pad = width - r.key.chars().count();
            s.push_str(&format!("{}{} = {}\n", r.key, " ".repeat(pad), r.value));
        }
        s
    }

    pub fn json(&self) -> serde_json::Value {
        let rows: Vec<_> = self.rows.iter().map(|r| json!({"key": r.key, "value": r.value})).collect();
        json!({"title": self.title, "rows": rows})
    }
}

fn head(what: What) -> &'static str {
    match what {
        What::Delta => "Δ",
        What::Counit => "ε",
        What::Translation => "τ",
        What::D => "d",
        What::MaurerCartan => "ϖπ_ε",
    }
}

/// Printing of two-slot values: ES values are rewritten in the generator
/// symbols, smash values use the linearized normal form.
trait Printer: Algebroid {
    /// Whether one-forms print as their normal form modulo the ideal.
    const REDUCE: bool;
    fn two_slot(&self, t: &Tensor, pat: &Pattern, left_len: usize) -> String;
}

impl Printer for EsAlgebroid {
    const REDUCE: bool = false;
    fn two_slot(&self, t: &Tensor, pat: &Pattern, left_len: usize) -> String {
        match self.express(t, pat, &[left_len, 1]) {
            Some(sym) => self.symbol_text(&sym),
            None => self.text(t),
        }
    }
}

impl Printer for hact_core::smash_backend::SmashAlgebroid {
    const REDUCE: bool = true;
    fn two_slot(&self, t: &Tensor, pat: &Pattern, _: usize) -> String {
        self.text(&self.linearize(t, pat))
    }
}

fn algebroid_rows<A: Printer>(alg: &A, what: What, ideal: &[Tensor], degree: usize) -> Vec<Row> {
    let w = || Woronowicz::new(alg, ideal, degree).expect("ideal checked by the caller");
    let calc = matches!(what, What::D | What::MaurerCartan).then(w);
    alg.generators()
        .into_iter()
        .map(|(name, g)| {
            let value = match what {
                What::Delta => alg.two_slot(&alg.delta(&g), &Pattern::tri2(), 1),
                What::Translation => alg.two_slot(&alg.translation(&g), &Pattern::blk2(), 1),
                What::Counit => alg.base().normalize(&alg.counit(&g)).to_text(alg.base().alphabet()),
                What::D => {
                    let c = calc.as_ref().unwrap();
                    alg.two_slot(&reduced(c, &c.d(&g)), &Pattern::tri2(), 1)
                }
                What::MaurerCartan => {
                    let c = calc.as_ref().unwrap();
                    let mc = c.maurer_cartan(&pi_eps(alg, &g)).expect("projected");
                    alg.two_slot(&reduced(c, &mc), &Pattern::tri2(), 2)
                }
            };
            Row {
                key: format!("{}({name})", head(what)),
                value,
            }
        })
        .collect()
}

fn reduced<A: Printer>(c: &Woronowicz<A>, w: &Tensor) -> Tensor {
    if A::REDUCE && !c.ideal.is_empty() {
        c.reduce(w)
    } else {
        w.clone()
    }
}

pub fn table(target: &Target, what: What, ideal: &[Tensor], degree: usize) -> Result<Table, CliError> {
    let rows = match target {
        Target::Es(e) => {
            let mut rows = algebroid_rows(e.as_ref(), what, ideal, degree);
            for (r, g) in rows.iter_mut().zip(&e.gens) {
                r.key = format!("{}({})", head(what), g.1);
            }
            rows
        }
        Target::Smash(s) => algebroid_rows(s.as_ref(), what, ideal, degree),
        Target::Surjection(h) => algebroid_rows(h.dom(), what, ideal, degree),
        Target::Hopf(h) => {
            let al = h.alg.system.alphabet();
            let mut rows = Vec::new();
            for (i, name) in al.iter().enumerate() {
                let g = hact_core::ncalg::NCPoly::letter(i as hact_core::ncalg::Letter);
                let value = match what {
                    What::Delta => h.tensor_text(&h.delta(&g)),
                    What::Counit => h.counit(&g).to_text(),
                    _ => return Err(CliError::Unsupported(format!("--what {} on a Hopf algebra", what.name()))),
                };
                rows.push(Row {
                    key: format!("{}({name})", head(what)),
                    value,
                });
            }
            rows
        }
        Target::Algebra(_) => return Err(CliError::Unsupported("tables of a bare algebra".into())),
    };
    Ok(Table {
        title: what.name().to_string(),
        rows,
    })
}
