//! Presentation files: sectioned `key = value` text describing algebras,
//! Hopf algebras and bialgebroids, plus a name-resolving loader.
//!
//! ```text
//! [algebra oq_sl2]
//! generators = a b c d
//! relations = b*a = q^-1*a*b; c*a = q^-1*a*c
//! grading = a:1, b:-1, c:1, d:-1
//! ```
//!
//! Lines starting with whitespace continue the previous value. `#` starts a
//! comment. A name that is not defined in any loaded file is looked up as
//! `<name>.hact`, first in `$HACT_PRESET_DIR`, then among the built-in presets.

use super::parser::{parse_poly, ParseError};
use super::poly::{NCPoly, Word};
use super::rewrite::{RewriteError, RewriteSystem, Rule};
use std::collections::HashSet;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use thiserror::Error;

pub const PRESET_DIR_ENV: &str = "HACT_PRESET_DIR";

const BUILTIN: &[(&str, &str)] = &[
    ("oq_sl2", include_str!("../../presets/oq_sl2.hact")),
    ("o_u1", include_str!("../../presets/o_u1.hact")),
    ("podles", include_str!("../../presets/podles.hact")),
    ("es_fibration", include_str!("../../presets/es_fibration.hact")),
    ("smash_desk", include_str!("../../presets/smash_desk.hact")),
    ("smash_slq2", include_str!("../../presets/smash_slq2.hact")),
];

pub fn builtin_presets() -> impl Iterator<Item = &'static str> {
    BUILTIN.iter().map(|(n, _)| *n)
}

#[derive(Debug, Error)]
pub enum PresentationError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{origin}:{line}: {msg}")]
    Syntax {
        origin: String,
        line: usize,
        msg: String,
    },
    #[error("in [{section}] key {key}: {err}")]
    Expr {
        section: String,
        key: String,
        err: ParseError,
    },
    #[error("preset not found: {0}")]
    NotFound(String),
    #[error("section [{section}] lacks key {key}")]
    MissingKey { section: String, key: String },
    #[error("in [{section}]: {msg}")]
    Invalid { section: String, msg: String },
    #[error("in [{section}]: {err}")]
    Rewrite { section: String, err: RewriteError },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Section {
    pub kind: String,
    pub name: String,
    pub entries: Vec<(String, String)>,
}

impl Section {
    pub fn title(&self) -> String {
        if self.name.is_empty() {
            self.kind.clone()
        } else {
            format!("{} {}", self.kind, self.name)
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .rev()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn require(&self, key: &str) -> Result<&str, PresentationError> {
        self.get(key).ok_or_else(|| PresentationError::MissingKey {
            section: self.title(),
            key: key.to_string(),
        })
    }

    /// Entries whose key starts with `prefix.`, with the prefix stripped.
    pub fn with_prefix<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = (&'a str, &'a str)> {
        self.entries.iter().filter_map(move |(k, v)| {
            k.strip_prefix(prefix)
                .and_then(|r| r.strip_prefix('.'))
                .map(|r| (r, v.as_str()))
        })
    }

    pub fn invalid(&self, msg: impl Into<String>) -> PresentationError {
        PresentationError::Invalid {
            section: self.title(),
            msg: msg.into(),
        }
    }

    pub fn expr_err(&self, key: &str, err: ParseError) -> PresentationError {
        PresentationError::Expr {
            section: self.title(),
            key: key.to_string(),
            err,
        }
    }
}

pub fn parse_sections(text: &str, origin: &str) -> Result<Vec<Section>, PresentationError> {
    let mut out: Vec<Section> = Vec::new();
    let syntax = |line: usize, msg: &str| PresentationError::Syntax {
        origin: origin.to_string(),
        line,
        msg: msg.to_string(),
    };
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let continuation = line.starts_with(' ') || line.starts_with('\t');
        let line_t = line.trim();
        if line_t.starts_with('[') {
            let Some(inner) = line_t.strip_prefix('[').and_then(|s| s.strip_suffix(']')) else {
                return Err(syntax(lineno, "unterminated section header"));
            };
            let mut parts = inner.split_whitespace();
            let kind = parts.next().ok_or_else(|| syntax(lineno, "empty section header"))?;
            let name = parts.next().unwrap_or("");
            if parts.next().is_some() {
                return Err(syntax(lineno, "section header has too many words"));
            }
            out.push(Section {
                kind: kind.to_string(),
                name: name.to_string(),
                entries: Vec::new(),
            });
            continue;
        }
        let Some(sec) = out.last_mut() else {
            return Err(syntax(lineno, "entry outside any section"));
        };
        if continuation {
            let Some(last) = sec.entries.last_mut() else {
                return Err(syntax(lineno, "continuation line without a key"));
            };
            last.1.push(' ');
            last.1.push_str(line_t);
            continue;
        }
        let Some((k, v)) = line_t.split_once('=') else {
            return Err(syntax(lineno, "expected key = value"));
        };
        let k = k.trim();
        if k.is_empty() {
            return Err(syntax(lineno, "empty key"));
        }
        sec.entries.push((k.to_string(), v.trim().to_string()));
    }
    Ok(out)
}

/// An algebra given by generators, oriented relations and an optional
/// integer grading (weights on generators).
#[derive(Clone, Debug)]
pub struct AlgebraDef {
    pub name: String,
    pub system: Arc<RewriteSystem>,
    pub weights: Option<Vec<i64>>,
}

impl AlgebraDef {
    pub fn from_section(sec: &Section) -> Result<Self, PresentationError> {
        let gens: Vec<String> = sec
            .require("generators")?
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(str::to_string)
            .collect();
        if gens.is_empty() {
            return Err(sec.invalid("no generators"));
        }
        if gens.iter().any(|g| g == "q") {
            return Err(sec.invalid("q is reserved for the deformation parameter"));
        }
        let free = RewriteSystem::free(gens.clone());
        let mut rules = Vec::new();
        if let Some(rel) = sec.get("relations") {
            for r in rel.split(';').map(str::trim).filter(|s| !s.is_empty()) {
                let Some((l, rhs)) = r.split_once('=') else {
                    return Err(sec.invalid(format!("relation {r:?} lacks '='")));
                };
                let lp = parse_poly(l, &free).map_err(|e| sec.expr_err("relations", e))?;
                let lhs = single_word(&lp)
                    .ok_or_else(|| sec.invalid(format!("left side of {r:?} is not a word")))?;
                let rp = parse_poly(rhs, &free).map_err(|e| sec.expr_err("relations", e))?;
                rules.push(Rule { lhs, rhs: rp });
            }
        }
        let mut order = vec![0u32; gens.len()];
        if let Some(o) = sec.get("order_weights") {
            for (n, v) in name_values(sec, o, &gens)? {
                order[n] = u32::try_from(v).map_err(|_| sec.invalid("order weights must be nonnegative"))?;
            }
        }
        let system = RewriteSystem::with_order(gens.clone(), order, rules).map_err(|err| PresentationError::Rewrite {
            section: sec.title(),
            err,
        })?;
        let system = match sec.get("max_word_length") {
            None => system,
            Some(v) => system.with_max_len(
                v.trim()
                    .parse()
                    .map_err(|_| sec.invalid(format!("bad max_word_length {v:?}")))?,
            ),
        };
        let weights = match sec.get("grading") {
            None => None,
            Some(g) => {
                let mut w = vec![None; gens.len()];
                for (n, v) in name_values(sec, g, &gens)? {
                    w[n] = Some(v);
                }
                if w.iter().any(Option::is_none) {
                    return Err(sec.invalid("grading must cover every generator"));
                }
                Some(w.into_iter().map(Option::unwrap).collect())
            }
        };
        Ok(AlgebraDef {
            name: sec.name.clone(),
            system: Arc::new(system),
            weights,
        })
    }

    /// Weight of a word; zero when no grading is declared.
    pub fn word_weight(&self, w: &Word) -> i64 {
        match &self.weights {
            None => 0,
            Some(ws) => w.0.iter().map(|&l| ws[l as usize]).sum(),
        }
    }
}

/// Parses `name:value` items separated by commas or whitespace.
fn name_values(sec: &Section, text: &str, gens: &[String]) -> Result<Vec<(usize, i64)>, PresentationError> {
    let mut out = Vec::new();
    for item in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
        let Some((n, v)) = item.split_once(':') else {
            return Err(sec.invalid(format!("item {item:?} is not name:value")));
        };
        let idx = gens
            .iter()
            .position(|x| x == n)
            .ok_or_else(|| sec.invalid(format!("unknown generator {n}")))?;
        let v = v.parse::<i64>().map_err(|_| sec.invalid(format!("bad integer {v:?}")))?;
        out.push((idx, v));
    }
    Ok(out)
}

fn single_word(p: &NCPoly) -> Option<Word> {
    if p.len() != 1 {
        return None;
    }
    let (w, c) = p.terms().next()?;
    c.is_one().then(|| w.clone())
}

/// Collection of sections from loaded files, resolving unknown names through
/// the preset search path.
#[derive(Clone, Debug, Default)]
pub struct Library {
    sections: Vec<Section>,
    loaded: HashSet<String>,
    dir: Option<PathBuf>,
}

impl Library {
    /// Library using `$HACT_PRESET_DIR` when set.
    pub fn new() -> Self {
        Library {
            dir: std::env::var_os(PRESET_DIR_ENV).map(PathBuf::from),
            ..Default::default()
        }
    }

    pub fn with_dir(dir: Option<PathBuf>) -> Self {
        Library {
            dir,
            ..Default::default()
        }
    }

    pub fn add_text(&mut self, text: &str, origin: &str) -> Result<(), PresentationError> {
        let secs = parse_sections(text, origin)?;
        self.sections.extend(secs);
        Ok(())
    }

    pub fn load_file(&mut self, path: &Path) -> Result<(), PresentationError> {
        let text = std::fs::read_to_string(path).map_err(|source| PresentationError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
            self.loaded.insert(stem.to_string());
        }
        self.add_text(&text, &path.display().to_string())
    }

    /// Loads `<name>.hact` from the preset directory or the built-in set.
    pub fn load_preset(&mut self, name: &str) -> Result<(), PresentationError> {
        if !self.loaded.insert(name.to_string()) {
            return Ok(());
        }
        if let Some(dir) = &self.dir {
            let p = dir.join(format!("{name}.hact"));
            if p.is_file() {
                let text = std::fs::read_to_string(&p).map_err(|source| PresentationError::Io {
                    path: p.clone(),
                    source,
                })?;
                return self.add_text(&text, &p.display().to_string());
            }
        }
        match BUILTIN.iter().find(|(n, _)| *n == name) {
            Some((_, text)) => self.add_text(text, &format!("{name}.hact")),
            None => {
                self.loaded.remove(name);
                Err(PresentationError::NotFound(name.to_string()))
            }
        }
    }

    /// Preset names visible to this library: the directory first, then the
    /// built-in set.
    pub fn preset_names(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        if let Some(dir) = &self.dir {
            if let Ok(rd) = std::fs::read_dir(dir) {
                let mut found: Vec<String> = rd
                    .filter_map(|e| e.ok())
                    .map(|e| e.path())
                    .filter(|p| p.extension().is_some_and(|x| x == "hact"))
                    .filter_map(|p| p.file_stem().and_then(|s| s.to_str()).map(str::to_string))
                    .collect();
                found.sort();
                out.extend(found);
            }
        }
        for n in builtin_presets() {
            if !out.iter().any(|o| o == n) {
                out.push(n.to_string());
            }
        }
        out
    }

    pub fn sections(&self) -> &[Section] {
        &self.sections
    }

    /// Latest section of the given kind and name, loading the preset of that
    /// name on demand.
    pub fn section(&mut self, kind: &str, name: &str) -> Result<Section, PresentationError> {
        if let Some(s) = self.find(kind, name) {
            return Ok(s.clone());
        }
        match self.load_preset(name) {
            Ok(()) | Err(PresentationError::NotFound(_)) => {}
            Err(e) => return Err(e),
        }
        if self.find(kind, name).is_none() {
            // the section may live in a file named after something else
            for other in self.preset_names() {
                self.load_preset(&other)?;
            }
        }
        self.find(kind, name)
            .cloned()
            .ok_or_else(|| PresentationError::NotFound(format!("[{kind} {name}]")))
    }

    fn find(&self, kind: &str, name: &str) -> Option<&Section> {
        self.sections
            .iter()
            .rev()
            .find(|s| s.kind == kind && s.name == name)
    }

    pub fn algebra(&mut self, name: &str) -> Result<AlgebraDef, PresentationError> {
        let sec = self.section("algebra", name)?;
        AlgebraDef::from_section(&sec)
    }

    /// Names of all sections of one kind, in file order.
    pub fn names(&self, kind: &str) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for s in &self.sections {
            if s.kind == kind && !out.contains(&s.name) {
                out.push(s.name.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn continuation_and_comments() {
        let secs = parse_sections(
            "[algebra t]\ngenerators = x y # two\nrelations = y*x = x*y;\n  x*x = 0\n",
            "mem",
        )
        .unwrap();
        assert_eq!(secs.len(), 1);
        assert_eq!(secs[0].get("relations"), Some("y*x = x*y; x*x = 0"));
        let a = AlgebraDef::from_section(&secs[0]).unwrap();
        assert_eq!(a.system.rules().len(), 2);
    }

    #[test]
    fn entry_outside_section_is_an_error() {
        assert!(parse_sections("x = 1", "mem").is_err());
    }

    #[test]
    fn increasing_rule_is_rejected() {
        let secs = parse_sections("[algebra t]\ngenerators = x y\nrelations = x*y = y*x\n", "mem").unwrap();
        assert!(matches!(
            AlgebraDef::from_section(&secs[0]),
            Err(PresentationError::Rewrite { .. })
        ));
    }

    #[test]
    fn builtin_presets_resolve() {
        let mut lib = Library::with_dir(None);
        let a = lib.algebra("oq_sl2").unwrap();
        assert_eq!(a.system.alphabet().len(), 4);
        assert!(lib.algebra("no_such_thing").is_err());
    }
}
