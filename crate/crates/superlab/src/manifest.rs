//! The checked-in suite manifest: every verification check as data.
//!
//! ```toml
//! [[check]]
//! id = "alt.phi-exe"
//! suite = "alt"
//! criterion = 2
//! kind = "lemma"
//! origin = "published"
//! lemma = "alt_phi_b"
//! ```

use serde::Deserialize;

use crate::error::{Error, Result};

/// The manifest compiled into the binary.
pub const BUILTIN: &str = include_str!("../suites.toml");

/// Suites accepted by `verify --suite`.
pub const SUITES: &[&str] = &["all", "alt", "jordan", "malcev", "metabelian", "epsilon", "young", "transfer"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// `is_identity(A, f)` for each polynomial of the source.
    Identity,
    /// `is_superidentity(A, f)` for each polynomial of the source.
    Superidentity,
    /// Graded evaluation of `f` at an assignment, compared to `expect`.
    Evaluation,
    /// Dimension of the subalgebra generated by the entry's generators.
    Closure,
    /// Randomized envelope/superidentity equivalence.
    Transfer,
    /// `phi`/`psi` of a table and word, compared as text.
    Tableau,
    /// Skew/symmetry invariants of `phi`/`psi` on all small tables.
    TableauSymmetry,
    /// A named lemma computation.
    Lemma,
    /// Catalog conformance of every entry of a variety.
    Conformance,
    /// Derived identities on every entry of a variety.
    Derived,
    /// Randomized vanishing of the threshold-shape symmetrizers.
    EndVanishing,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Identity => "identity",
            Kind::Superidentity => "superidentity",
            Kind::Evaluation => "evaluation",
            Kind::Closure => "closure",
            Kind::Transfer => "transfer",
            Kind::Tableau => "tableau",
            Kind::TableauSymmetry => "tableau_symmetry",
            Kind::Lemma => "lemma",
            Kind::Conformance => "conformance",
            Kind::Derived => "derived",
            Kind::EndVanishing => "end_vanishing",
        }
    }
}

/// Where the expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// Stated in the published source.
    Published,
    /// Immediate from the definitions.
    Trivial,
    /// Computed here by an independent route.
    Derived,
}

impl Origin {
    pub fn name(self) -> &'static str {
        match self {
            Origin::Published => "published",
            Origin::Trivial => "trivial",
            Origin::Derived => "derived",
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckSpec {
    pub id: String,
    pub suite: String,
    pub kind: Kind,
    pub origin: Origin,
    /// Acceptance criterion the check belongs to, if any.
    #[serde(default)]
    pub criterion: Option<u32>,
    #[serde(default)]
    pub description: Option<String>,

    /// Algebra source (`catalog:...` or `file:...`).
    #[serde(default)]
    pub algebra: Option<String>,
    /// Polynomial source (`lib:`, `family:`, `file:` or text).
    #[serde(default)]
    pub poly: Option<String>,
    /// `holds`, `fails`, an element text, or a number, depending on kind.
    #[serde(default)]
    pub expect: Option<String>,
    /// Evaluation assignment, `1=e, 2=x`.
    #[serde(default)]
    pub assign: Option<String>,
    /// Overrides the permutation-degree cap for this check.
    #[serde(default)]
    pub max_degree: Option<usize>,

    /// `phi` or `psi` for tableau and end_vanishing checks.
    #[serde(default)]
    pub op: Option<String>,
    /// Table rows, e.g. `"1 2 / 3 4"`.
    #[serde(default)]
    pub table: Option<String>,
    #[serde(default)]
    pub word: Option<String>,
    /// Largest side for `tableau_symmetry`.
    #[serde(default)]
    pub max_side: Option<usize>,

    /// Lemma name and parameters.
    #[serde(default)]
    pub lemma: Option<String>,
    #[serde(default)]
    pub params: Vec<i64>,

    /// Variety filter for conformance and derived checks.
    #[serde(default)]
    pub variety: Option<String>,

    /// Random-run sizes.
    #[serde(default)]
    pub trials: Option<usize>,
    #[serde(default)]
    pub max_dim: Option<usize>,
    #[serde(default)]
    pub r: Option<usize>,
    #[serde(default)]
    pub s: Option<usize>,
}

impl CheckSpec {
    pub fn field<'a>(&'a self, v: &'a Option<String>, name: &str) -> Result<&'a str> {
        v.as_deref().ok_or_else(|| Error::Manifest(format!("check `{}` needs `{name}`", self.id)))
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub schema: u32,
    #[serde(rename = "check")]
    pub checks: Vec<CheckSpec>,
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Manifest> {
        let m: Manifest = toml::from_str(text).map_err(|e| Error::Manifest(e.to_string()))?;
        if m.schema != 1 {
            return Err(Error::Manifest(format!("unsupported schema {}", m.schema)));
        }
        let mut seen = std::collections::BTreeSet::new();
        for c in &m.checks {
            if !seen.insert(c.id.as_str()) {
                return Err(Error::Manifest(format!("duplicate check id `{}`", c.id)));
            }
            if !SUITES[1..].contains(&c.suite.as_str()) {
                return Err(Error::Manifest(format!("check `{}`: unknown suite `{}`", c.id, c.suite)));
            }
        }
        Ok(m)
    }

    pub fn builtin() -> Manifest {
        Manifest::parse(BUILTIN).expect("the built-in manifest is valid")
    }

    /// Checks of a suite in manifest order; `all` selects everything.
    pub fn suite(&self, name: &str) -> Result<Vec<CheckSpec>> {
        if !SUITES.contains(&name) {
            return Err(Error::Usage(format!("unknown suite `{name}` (expected one of {})", SUITES.join(", "))));
        }
        Ok(self.checks.iter().filter(|c| name == "all" || c.suite == name).cloned().collect())
    }

    pub fn criterion(&self, n: u32) -> Vec<CheckSpec> {
        self.checks.iter().filter(|c| c.criterion == Some(n)).cloned().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses_and_covers_every_suite() {
        let m = Manifest::builtin();
        for s in &SUITES[1..] {
            assert!(!m.suite(s).unwrap().is_empty(), "suite {s} is empty");
        }
        for n in 1..=9 {
            assert!(!m.criterion(n).is_empty(), "criterion {n} has no checks");
        }
        assert!(m.suite("nope").is_err());
    }

    #[test]
    fn rejects_bad_manifests() {
        assert!(Manifest::parse("schema = 2\ncheck = []").is_err());
        let one = "[[check]]\nid = \"a\"\nsuite = \"alt\"\nkind = \"closure\"\norigin = \"trivial\"\n";
        assert!(Manifest::parse(&format!("schema = 1\n{one}")).is_ok());
        assert!(Manifest::parse(&format!("schema = 1\n{one}{one}")).is_err());
        assert!(Manifest::parse(&format!("schema = 1\n{}", one.replace("alt", "other"))).is_err());
        assert!(Manifest::parse(&format!("schema = 1\n{}", one.replace("trivial", "invented"))).is_err());
    }
}
