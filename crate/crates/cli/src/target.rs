use hact_core::es_backend::EsAlgebroid;
use hact_core::homogeneous::Homogeneous;
use hact_core::hopfalg::HopfAlgebra;
use hact_core::ncalg::{AlgebraDef, Library, PresentationError, RewriteSystem};
use hact_core::smash_backend::{SmashAlgebroid, SmashSurjection};
use std::path::Path;

pub enum Target {
    Algebra(AlgebraDef),
    Hopf(HopfAlgebra),
    Es(Box<EsAlgebroid>),
    Smash(Box<SmashAlgebroid>),
    Surjection(Box<Homogeneous>),
}

const KINDS: [&str; 4] = ["surjection", "bialgebroid", "hopf", "algebra"];

impl Target {
    pub fn kind(&self) -> &'static str {
        match self {
            Target::Algebra(_) => "algebra",
            Target::Hopf(_) => "hopf algebra",
            Target::Es(_) => "Ehresmann-Schauenburg algebroid",
            Target::Smash(_) => "smash algebroid",
            Target::Surjection(_) => "smash surjection",
        }
    }

    /// Every rewrite system the target is built from, labelled.
    pub fn systems(&self) -> Vec<(String, &RewriteSystem)> {
        match self {
            Target::Algebra(a) => vec![(a.name.clone(), &a.system)],
            Target::Hopf(h) => vec![(h.name.clone(), &h.alg.system)],
            Target::Es(e) => vec![
                (e.ext.total.name.clone(), &e.ext.total.system),
                (e.ext.hopf.name.clone(), &e.ext.hopf.alg.system),
                (e.ext.base.base.name.clone(), &e.ext.base.base.system),
            ],
            Target::Smash(s) => smash_systems(s),
            Target::Surjection(h) => {
                let mut v = smash_systems(&h.s.domain);
                v.extend(smash_systems(&h.s.codomain));
                v
            }
        }
    }
}

fn smash_systems(s: &SmashAlgebroid) -> Vec<(String, &RewriteSystem)> {
    vec![
        (s.name.clone(), &s.sys),
        (format!("{} base", s.name), s.yd.a()),
        (s.hopf().name.clone(), s.yd.h()),
    ]
}

pub struct Loaded {
    pub lib: Library,
    pub name: String,
    pub target: Target,
}

pub fn from_preset(name: &str) -> Result<Loaded, PresentationError> {
    let mut lib = Library::new();
    for kind in KINDS {
        match lib.section(kind, name) {
            Ok(_) => {
                let target = build(&mut lib, kind, name)?;
                return Ok(Loaded {
                    lib,
                    name: name.to_string(),
                    target,
                });
            }
            Err(PresentationError::NotFound(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(PresentationError::NotFound(name.to_string()))
}

/// The first section of the most structured kind present in the file.
pub fn from_file(path: &Path) -> Result<Loaded, PresentationError> {
    let mut lib = Library::new();
    lib.load_file(path)?;
    for kind in KINDS {
        if let Some(name) = lib.names(kind).into_iter().next() {
            let target = build(&mut lib, kind, &name)?;
            return Ok(Loaded { lib, name, target });
        }
    }
    Err(PresentationError::NotFound(format!("any presentation in {}", path.display())))
}

fn build(lib: &mut Library, kind: &str, name: &str) -> Result<Target, PresentationError> {
    Ok(match kind {
        "surjection" => Target::Surjection(Box::new(Homogeneous::new(SmashSurjection::load(lib, name)?))),
        "bialgebroid" => {
            let sec = lib.section("bialgebroid", name)?;
            match sec.get("kind") {
                Some("es") => Target::Es(Box::new(EsAlgebroid::load(lib, name)?)),
                _ => Target::Smash(Box::new(SmashAlgebroid::load(lib, name)?)),
            }
        }
        "hopf" => Target::Hopf(HopfAlgebra::load(lib, name)?),
        _ => Target::Algebra(lib.algebra(name)?),
    })
}

/// Hopf algebras referenced by the target, for the `hopf` suite.
pub fn hopf_algebras(loaded: &mut Loaded) -> Result<Vec<HopfAlgebra>, PresentationError> {
    let mut names: Vec<String> = Vec::new();
    let mut push = |n: &str| {
        if !names.iter().any(|m| m == n) {
            names.push(n.to_string());
        }
    };
    match &loaded.target {
        Target::Algebra(_) => {}
        Target::Hopf(h) => push(&h.name),
        Target::Es(e) => {
            push(&e.ext.hopf.name);
            push(&e.ext.total.name);
        }
        Target::Smash(s) => push(&s.hopf().name),
        Target::Surjection(h) => {
            push(&h.s.domain.hopf().name);
            push(&h.s.codomain.hopf().name);
        }
    }
    let mut out = Vec::new();
    for n in names {
        match HopfAlgebra::load(&mut loaded.lib, &n) {
            Ok(h) => out.push(h),
            Err(PresentationError::NotFound(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
