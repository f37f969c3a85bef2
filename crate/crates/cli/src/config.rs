//! Analysis config files.
//!
//! ```text
//! # comment
//! observable x
//! observable T = px^2 + py^2 + pz^2
//! observable xb = x @particle B
//! rules extra_rules.txt
//! claims claims.txt
//! ```
//!
//! Relative paths resolve against the config file's directory.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use qramsey::catalog::{Catalog, ObservableSpec, DEFAULT_PARTICLE};
use qramsey::oplang::parse_operator;

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObservableLine {
    pub name: String,
    pub expression: Option<String>,
    pub particle: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnalysisConfig {
    pub observables: Vec<ObservableLine>,
    pub rule_overlays: Option<PathBuf>,
    pub claims: Option<PathBuf>,
}

fn bad(path: &Path, line: usize, msg: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("{}:{line}: {msg}", path.display()))
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl AnalysisConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let base = path.parent().unwrap_or(Path::new(""));
        Self::parse(&text, path, base)
    }

    pub fn parse(text: &str, path: &Path, base: &Path) -> Result<Self, CliError> {
        let mut cfg = Self::default();
        let mut seen = BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            let Some((keyword, rest)) = line.split_once(char::is_whitespace).or((!line.is_empty()).then_some((line, ""))) else {
                continue;
            };
            let rest = rest.trim();
            match keyword {
                "observable" => {
                    let obs = parse_observable(rest).map_err(|m| bad(path, line_no, m))?;
                    if !seen.insert(obs.name.clone()) {
                        return Err(bad(path, line_no, format!("observable `{}` listed twice", obs.name)));
                    }
                    cfg.observables.push(obs);
                }
                "rules" | "claims" => {
                    if rest.is_empty() {
                        return Err(bad(path, line_no, format!("`{keyword}` needs a path")));
                    }
                    let slot = if keyword == "rules" { &mut cfg.rule_overlays } else { &mut cfg.claims };
                    if slot.is_some() {
                        return Err(bad(path, line_no, format!("`{keyword}` given twice")));
                    }
                    *slot = Some(base.join(rest));
                }
                other => return Err(bad(path, line_no, format!("unknown keyword `{other}`"))),
            }
        }
        Ok(cfg)
    }

    /// Registers custom observables into `catalog` and returns the vertex
    /// list in file order.
    pub fn specs(&self, catalog: &mut Catalog) -> Result<Vec<ObservableSpec>, CliError> {
        let mut out = Vec::with_capacity(self.observables.len());
        for obs in &self.observables {
            let spec = match &obs.expression {
                Some(expr) => {
                    let poly = parse_operator(expr).map_err(|e| CliError::Usage(format!("observable `{}`: {e}", obs.name)))?;
                    let spec = ObservableSpec::symbolic(&obs.name, poly)?;
                    catalog.register(spec.clone())?;
                    spec
                }
                None if Catalog::is_builtin(&obs.name) => catalog.resolve(&obs.name)?,
                None => {
                    let spec = ObservableSpec::declared(&obs.name);
                    catalog.register(spec.clone())?;
                    spec
                }
            };
            out.push(spec.on_particle(obs.particle.as_deref().unwrap_or(DEFAULT_PARTICLE)));
        }
        Ok(out)
    }
}

fn parse_observable(rest: &str) -> Result<ObservableLine, String> {
    let (body, particle) = match rest.split_once("@particle") {
        Some((body, label)) => {
            let label = label.trim();
            if label.is_empty() || label.contains(char::is_whitespace) {
                return Err(format!("bad particle label `{label}`"));
            }
            (body.trim(), Some(label.to_string()))
        }
        None => (rest, None),
    };
    let (name, expression) = match body.split_once('=') {
        Some((n, e)) if e.trim().is_empty() => return Err(format!("observable `{}` has an empty expression", n.trim())),
        Some((n, e)) => (n.trim(), Some(e.trim().to_string())),
        None => (body.trim(), None),
    };
    if !valid_name(name) {
        return Err(format!("bad observable name `{name}`"));
    }
    Ok(ObservableLine {
        name: name.to_string(),
        expression,
        particle,
    })
}
