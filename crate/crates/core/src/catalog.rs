//! Observable registry and the pairwise commutation classifier.
//!
//! Polynomial observables are classified by computing their commutator.
//! Operators outside the polynomial algebra (the radius `r`, the radial
//! momentum `p_r`, and the two Hamiltonian variants) are *declared*: their
//! verdicts come from a rule table where every entry carries a citation.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::weyl::{commutator, is_hermitian, Builtin, OperatorPoly, BUILTIN_NAMES};

/// Particle label used when none is given.
pub const DEFAULT_PARTICLE: &str = "A";

/// Declared (non-polynomial) built-ins.
pub const DECLARED_NAMES: [&str; 4] = ["r", "p_r", "H_central", "H_generic"];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown observable `{0}`")]
    Unknown(String),
    #[error("observable `{0}` is not Hermitian")]
    NotHermitian(String),
    #[error("observable `{0}` is already defined")]
    Duplicate(String),
    #[error("unclassifiable pair ({0}, {1}): no rule in the table")]
    Unclassifiable(String, String),
    #[error("rule for ({0}, {1}) overrides a built-in entry; pass --allow-override to permit")]
    Override(String, String),
    #[error("rule file line {line}: {message}")]
    RuleSyntax { line: usize, message: String },
}

/// Edge color: red for commuting pairs, green otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeColor {
    Red,
    Green,
}

impl EdgeColor {
    pub fn from_commutes(commutes: bool) -> Self {
        if commutes {
            EdgeColor::Red
        } else {
            EdgeColor::Green
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EdgeColor::Red => "red",
            EdgeColor::Green => "green",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "red" => Some(EdgeColor::Red),
            "green" => Some(EdgeColor::Green),
            _ => None,
        }
    }
}

impl fmt::Display for EdgeColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObservableKind {
    Symbolic(OperatorPoly),
    /// Identified by its symbol; verdicts come from a [`RuleTable`].
    Declared(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObservableSpec {
    pub name: String,
    pub kind: ObservableKind,
    pub particle: String,
}

impl ObservableSpec {
    /// A symbolic observable; rejects non-Hermitian polynomials.
    pub fn symbolic(name: &str, poly: OperatorPoly) -> Result<Self, CatalogError> {
        if !is_hermitian(&poly) {
            return Err(CatalogError::NotHermitian(name.to_string()));
        }
        Ok(Self {
            name: name.to_string(),
            kind: ObservableKind::Symbolic(poly),
            particle: DEFAULT_PARTICLE.to_string(),
        })
    }

    pub fn declared(name: &str) -> Self {
        Self {
            name: name.to_string(),
            kind: ObservableKind::Declared(name.to_string()),
            particle: DEFAULT_PARTICLE.to_string(),
        }
    }

    pub fn on_particle(mut self, particle: &str) -> Self {
        self.particle = particle.to_string();
        self
    }

    pub fn poly(&self) -> Option<&OperatorPoly> {
        match &self.kind {
            ObservableKind::Symbolic(p) => Some(p),
            ObservableKind::Declared(_) => None,
        }
    }

    pub fn is_declared(&self) -> bool {
        matches!(self.kind, ObservableKind::Declared(_))
    }
}

/// How an edge color was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    Computed,
    Declared,
    CrossParticle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub color: EdgeColor,
    pub basis: Basis,
    pub citation: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub color: EdgeColor,
    pub citation: String,
}

fn pair_key(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

/// Commutation verdicts for pairs that cannot be computed symbolically.
/// Keys are unordered pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RuleTable {
    rules: BTreeMap<(String, String), Rule>,
}

const CITE_R: &str = "r depends on coordinates only and is rotation invariant (Messiah 2014; Landau & Lifshitz 1965)";
const CITE_PR: &str = "p_r = (r^-1)(r.p - i*hbar) is rotation invariant; [r, p_r] = i*hbar (Messiah 2014; Landau & Lifshitz 1965)";
const CITE_HC: &str = "central-field Hamiltonian p^2/2m + U(r) is rotation invariant (Messiah 2014; Landau & Lifshitz 1965)";
const CITE_HG: &str = "generic coordinate-dependent Hamiltonian commutes only with itself";

impl RuleTable {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Built-in central-field table.
    pub fn central_field() -> Self {
        use EdgeColor::{Green, Red};
        let mut t = Self::empty();
        let coords = ["x", "y", "z"];
        let momenta = ["p_x", "p_y", "p_z"];
        let angular = ["l_x", "l_y", "l_z", "L2"];

        for c in coords {
            t.insert("r", c, Red, CITE_R);
            t.insert("p_r", c, Green, CITE_PR);
            t.insert("H_central", c, Green, CITE_HC);
            t.insert("H_generic", c, Green, CITE_HG);
        }
        for p in momenta {
            t.insert("r", p, Green, CITE_R);
            t.insert("p_r", p, Green, CITE_PR);
            t.insert("H_central", p, Green, CITE_HC);
            t.insert("H_generic", p, Green, CITE_HG);
        }
        for l in angular {
            t.insert("r", l, Red, CITE_R);
            t.insert("p_r", l, Red, CITE_PR);
            t.insert("H_central", l, Red, CITE_HC);
            t.insert("H_generic", l, Green, CITE_HG);
        }
        t.insert("r", "p_r", Green, CITE_PR);
        t.insert("r", "H_central", Green, CITE_HC);
        t.insert("p_r", "H_central", Green, CITE_HC);
        t.insert("r", "H_generic", Green, CITE_HG);
        t.insert("p_r", "H_generic", Green, CITE_HG);
        t.insert("H_central", "H_generic", Green, CITE_HG);
        t
    }

    fn insert(&mut self, a: &str, b: &str, color: EdgeColor, citation: &str) {
        self.rules.insert(
            pair_key(a, b),
            Rule {
                color,
                citation: citation.to_string(),
            },
        );
    }

    pub fn lookup(&self, a: &str, b: &str) -> Option<&Rule> {
        self.rules.get(&pair_key(a, b))
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Applies an overlay in the line format
    /// `pair <a> <b> red|green "# citation"`. Blank lines and lines starting
    /// with `#` are skipped. Replacing an existing entry needs
    /// `allow_override`.
    pub fn with_overlay(mut self, text: &str, allow_override: bool) -> Result<Self, CatalogError> {
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let err = |message: &str| CatalogError::RuleSyntax {
                line,
                message: message.to_string(),
            };
            let (head, citation) = match trimmed.find('"') {
                Some(q) => {
                    let rest = &trimmed[q + 1..];
                    let end = rest.rfind('"').ok_or_else(|| err("unterminated citation"))?;
                    if !rest[end + 1..].trim().is_empty() {
                        return Err(err("trailing text after citation"));
                    }
                    (&trimmed[..q], rest[..end].trim_start_matches('#').trim())
                }
                None => return Err(err("missing quoted citation")),
            };
            let fields: Vec<&str> = head.split_whitespace().collect();
            let [kw, a, b, color] = fields[..] else {
                return Err(err("expected `pair <a> <b> red|green \"# citation\"`"));
            };
            if kw != "pair" {
                return Err(err("expected `pair`"));
            }
            let color = EdgeColor::parse(color).ok_or_else(|| err("color must be red or green"))?;
            let (a, b) = (canonical_name(a), canonical_name(b));
            if self.lookup(&a, &b).is_some() && !allow_override {
                return Err(CatalogError::Override(a, b));
            }
            self.insert(&a, &b, color, citation);
        }
        Ok(self)
    }
}

/// Canonical spelling of a built-in name (`px` becomes `p_x`); other names
/// pass through.
pub fn canonical_name(name: &str) -> String {
    Builtin::from_name(name)
        .map(|b| b.name().to_string())
        .unwrap_or_else(|| name.to_string())
}

/// Commutation verdict for one pair.
pub fn classify(a: &ObservableSpec, b: &ObservableSpec, rules: &RuleTable) -> Result<Classification, CatalogError> {
    if a.particle != b.particle {
        return Ok(Classification {
            color: EdgeColor::Red,
            basis: Basis::CrossParticle,
            citation: format!(
                "operators of particles {} and {} act on separate tensor factors",
                a.particle, b.particle
            ),
        });
    }
    if let (Some(pa), Some(pb)) = (a.poly(), b.poly()) {
        let c = commutator(pa, pb);
        return Ok(Classification {
            color: EdgeColor::from_commutes(c.is_zero()),
            basis: Basis::Computed,
            citation: format!("[{}, {}] = {}", a.name, b.name, c),
        });
    }
    if a.name == b.name {
        return Ok(Classification {
            color: EdgeColor::Red,
            basis: Basis::Declared,
            citation: "every operator commutes with itself".to_string(),
        });
    }
    let rule = rules
        .lookup(&a.name, &b.name)
        .ok_or_else(|| CatalogError::Unclassifiable(a.name.clone(), b.name.clone()))?;
    Ok(Classification {
        color: rule.color,
        basis: Basis::Declared,
        citation: rule.citation.clone(),
    })
}

/// Built-ins plus observables registered from configuration.
#[derive(Clone, Debug)]
pub struct Catalog {
    custom: BTreeMap<String, ObservableSpec>,
    rules: RuleTable,
}

impl Default for Catalog {
    fn default() -> Self {
        Self::new()
    }
}

impl Catalog {
    /// Built-in observables with the central-field rule table.
    pub fn new() -> Self {
        Self::with_rules(RuleTable::central_field())
    }

    pub fn with_rules(rules: RuleTable) -> Self {
        Self {
            custom: BTreeMap::new(),
            rules,
        }
    }

    pub fn rules(&self) -> &RuleTable {
        &self.rules
    }

    pub fn is_builtin(name: &str) -> bool {
        Builtin::from_name(name).is_some() || DECLARED_NAMES.contains(&name)
    }

    /// Registers a custom observable. Names must not clash with built-ins or
    /// earlier registrations.
    pub fn register(&mut self, spec: ObservableSpec) -> Result<(), CatalogError> {
        if Self::is_builtin(&spec.name) || self.custom.contains_key(&spec.name) {
            return Err(CatalogError::Duplicate(spec.name));
        }
        self.custom.insert(spec.name.clone(), spec);
        Ok(())
    }

    pub fn resolve(&self, name: &str) -> Result<ObservableSpec, CatalogError> {
        if let Some(b) = Builtin::from_name(name) {
            return Ok(ObservableSpec {
                name: b.name().to_string(),
                kind: ObservableKind::Symbolic(b.poly()),
                particle: DEFAULT_PARTICLE.to_string(),
            });
        }
        if DECLARED_NAMES.contains(&name) {
            return Ok(ObservableSpec::declared(name));
        }
        self.custom
            .get(name)
            .cloned()
            .ok_or_else(|| CatalogError::Unknown(name.to_string()))
    }

    pub fn classify(&self, a: &ObservableSpec, b: &ObservableSpec) -> Result<Classification, CatalogError> {
        classify(a, b, &self.rules)
    }
}

/// Every built-in name: the ten polynomial observables then the declared ones.
pub fn all_builtin_names() -> Vec<&'static str> {
    BUILTIN_NAMES.iter().chain(DECLARED_NAMES.iter()).copied().collect()
}
