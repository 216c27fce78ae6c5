//! Named superalgebras and polynomial families, with conformance checks.
//!
//! Every entry records the variety it belongs to and a generating set;
//! [`CatalogEntry::conformance`] checks grading, the superized defining
//! identities (plus metabelian), and that the generators span everything.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::extension::{complete, CompletionRule};
use crate::algebra::{
    is_superidentity, subalgebra_closure, Algebra, Element, Field, Homogeneity, SuperAlgebra,
    SuperAlgebraBuilder, Witness,
};
use crate::error::{Error, Result};
use crate::poly::{LibraryIdentity, MultilinearPoly, Parity};
use crate::scalars::QEps;

pub mod alternative;
pub mod derived;
pub mod epsilon;
pub mod jordan;
pub mod malcev;
pub mod metabelian;

pub use alternative::{alt_a, alt_b, alt_bp, nilalt_basis_words};
pub use derived::{derived_checks, DerivedCheck, DerivedMode};
pub use epsilon::{eps_a, eps_fkn, eps_fkn_assignment, eps_fkn_variables, EpsFknVars};
pub use jordan::{jord_a, jord_bn, jord_bn_full, jord_fn, jordan_assoc, jordan_basis_monomials};
pub use malcev::{malc_a, malc_an, malc_bar_an, malc_fn, malc_gn, malc_super_an};
pub use metabelian::{metab_ar, metab_as};

/// The variety whose (superized) defining identities an entry satisfies.
/// All catalog varieties are metabelian.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variety {
    Alternative,
    Jordan,
    Malcev,
    Metabelian,
    Eps(i8),
}

impl Variety {
    pub fn name(self) -> String {
        match self {
            Variety::Alternative => "alternative".into(),
            Variety::Jordan => "jordan".into(),
            Variety::Malcev => "malcev".into(),
            Variety::Metabelian => "metabelian".into(),
            Variety::Eps(e) => alloc::format!("eps({e:+})"),
        }
    }

    /// Library identities defining the variety inside metabelian algebras.
    pub fn library(self) -> Vec<LibraryIdentity> {
        match self {
            Variety::Alternative => alloc::vec![LibraryIdentity::Alternative],
            Variety::Jordan => alloc::vec![LibraryIdentity::Jordan],
            Variety::Malcev => alloc::vec![LibraryIdentity::Malcev],
            Variety::Metabelian => Vec::new(),
            Variety::Eps(e) => alloc::vec![LibraryIdentity::EpsSymm(e), LibraryIdentity::EpsNil2(e)],
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Catalog name with parameters, e.g. `jord_Bn(3)`.
    pub name: String,
    pub algebra: SuperAlgebra,
    pub variety: Variety,
    pub generators: Vec<Element>,
    /// Identities checked on top of the variety's (e.g. `nil3`).
    pub extra: Vec<LibraryIdentity>,
    pub description: &'static str,
}

/// Outcome of [`CatalogEntry::conformance`].
#[derive(Clone, Debug)]
pub struct Conformance {
    pub grading_ok: bool,
    /// Identity name and witness for every failing identity.
    pub failures: Vec<(String, Witness)>,
    pub closure_dim: usize,
    pub dim: usize,
}

impl Conformance {
    pub fn is_ok(&self) -> bool {
        self.grading_ok && self.failures.is_empty() && self.closure_dim == self.dim
    }
}

impl CatalogEntry {
    /// Names and polynomials of all identities the entry must satisfy as
    /// superidentities: the variety's, the extras, and metabelian.
    pub fn identity_suite(&self) -> Vec<(String, MultilinearPoly)> {
        let mut out = Vec::new();
        let libs = self
            .variety
            .library()
            .into_iter()
            .chain(self.extra.iter().copied())
            .chain(core::iter::once(LibraryIdentity::Metabelian));
        for lib in libs {
            for (k, f) in lib.identities().into_iter().enumerate() {
                out.push((alloc::format!("{lib}[{k}]"), f));
            }
        }
        out
    }

    pub fn conformance(&self) -> Conformance {
        let grading_ok = self.algebra.validate().is_ok();
        let mut failures = Vec::new();
        for (name, f) in self.identity_suite() {
            if let Some(w) = is_superidentity(&self.algebra, &f).witness() {
                failures.push((name, w.clone()));
            }
        }
        Conformance {
            grading_ok,
            failures,
            closure_dim: subalgebra_closure(&self.algebra, &self.generators).dim(),
            dim: self.algebra.dim(),
        }
    }

    pub fn element(&self, s: &str) -> Result<Element> {
        self.algebra.parse_element(s)
    }

    /// Numbers of even and odd generators, or `None` if a generator is
    /// not homogeneous.
    pub fn generator_parities(&self) -> Option<(usize, usize)> {
        let mut counts = (0, 0);
        for g in &self.generators {
            match g.homogeneity(&self.algebra) {
                Homogeneity::Homogeneous(p) if p.is_odd() => counts.1 += 1,
                Homogeneity::Homogeneous(_) => counts.0 += 1,
                _ => return None,
            }
        }
        Some(counts)
    }
}

/// Builder shorthand used by the constructors: products by label,
/// remembering which ones were given explicitly for symmetry completion.
pub(crate) struct Table {
    b: SuperAlgebraBuilder,
    explicit: Vec<(usize, usize)>,
}

impl Table {
    pub(crate) fn new(name: &str, field: Field) -> Self {
        Table { b: SuperAlgebra::builder(name).field(field), explicit: Vec::new() }
    }

    pub(crate) fn associative(mut self) -> Self {
        self.b = self.b.associative(true);
        self
    }

    pub(crate) fn add(&mut self, label: impl Into<String>, p: Parity) -> usize {
        self.b.add_basis(label, p)
    }

    pub(crate) fn idx(&self, label: &str) -> usize {
        self.b.index_of(label).unwrap_or_else(|_| panic!("catalog label `{label}` is defined"))
    }

    /// `l · r = Σ c·label`.
    pub(crate) fn set(&mut self, l: &str, r: &str, value: &[(QEps, &str)]) {
        let (i, j) = (self.idx(l), self.idx(r));
        let v = Element::from_pairs(value.iter().map(|(c, lab)| (self.idx(lab), c.clone())));
        self.set_idx(i, j, v);
    }

    pub(crate) fn set_idx(&mut self, i: usize, j: usize, v: Element) {
        self.b.set_product(i, j, v);
        if !self.explicit.contains(&(i, j)) {
            self.explicit.push((i, j));
        }
    }

    pub(crate) fn finish(mut self, rule: CompletionRule) -> SuperAlgebra {
        complete(&mut self.b, &self.explicit, rule).expect("catalog tables are consistent");
        self.b.build().expect("catalog labels are unique")
    }
}

pub(crate) fn one() -> QEps {
    QEps::one()
}

/// Parses a sum of labels such as `a1+x` against an entry's algebra.
pub(crate) fn gens(alg: &SuperAlgebra, list: &[&str]) -> Vec<Element> {
    list.iter()
        .map(|s| alg.parse_element(s).unwrap_or_else(|e| panic!("generator `{s}`: {e}")))
        .collect()
}

/// Catalog names accepted by [`entry`], with their parameter lists.
pub const ENTRY_NAMES: &[(&str, &str)] = &[
    ("alt_A", ""),
    ("alt_B", ""),
    ("alt_Bp", ""),
    ("jord_A", ""),
    ("jord_Bn", "n"),
    ("jord_Bn_full", "n"),
    ("malc_A", ""),
    ("malc_An", "n"),
    ("malc_superAn", "n"),
    ("malc_barAn", "n+1"),
    ("metab_Ar", "r"),
    ("metab_As", "s"),
    ("eps_A", "eps,N"),
];

fn expect_params(name: &str, params: &[i64], n: usize) -> Result<()> {
    if params.len() != n {
        return Err(Error::Arity { what: "catalog parameters", expected: n, got: params.len() });
    }
    let _ = name;
    Ok(())
}

fn positive(p: i64, min: i64, what: &str) -> Result<usize> {
    if p < min {
        return Err(Error::InvalidArgument(alloc::format!("{what} must be at least {min}")));
    }
    Ok(p as usize)
}

/// Builds a catalog entry by name, e.g. `entry("jord_Bn", &[3])`.
pub fn entry(name: &str, params: &[i64]) -> Result<CatalogEntry> {
    let need = ENTRY_NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?
        .1;
    let count = if need.is_empty() { 0 } else { need.split(',').count() };
    expect_params(name, params, count)?;
    Ok(match name {
        "alt_A" => alt_a(),
        "alt_B" => alt_b(),
        "alt_Bp" => alt_bp(),
        "jord_A" => jord_a(),
        "jord_Bn" => jord_bn(positive(params[0], 1, "n")?),
        "jord_Bn_full" => jord_bn_full(positive(params[0], 1, "n")?),
        "malc_A" => malc_a(),
        "malc_An" => malc_an(positive(params[0], 1, "n")?),
        "malc_superAn" => malc_super_an(positive(params[0], 1, "n")?),
        "malc_barAn" => malc_bar_an(positive(params[0], 2, "n+1")? - 1),
        "metab_Ar" => metab_ar(positive(params[0], 1, "r")?),
        "metab_As" => metab_as(positive(params[0], 1, "s")?),
        "eps_A" => {
            let e = params[0];
            if e != 1 && e != -1 {
                return Err(Error::InvalidArgument("eps must be +1 or -1".into()));
            }
            eps_a(e as i8, positive(params[1], 2, "N")?)
        }
        _ => unreachable!("name checked against ENTRY_NAMES"),
    })
}

/// The entries covered by the conformance suite.
pub fn conformance_entries() -> Vec<CatalogEntry> {
    let mut out = alloc::vec![alt_a(), alt_b(), alt_bp(), jord_a(), malc_a()];
    out.extend((1..=4).map(jord_bn));
    out.extend((1..=6).map(malc_an));
    out.extend((1..=5).map(malc_super_an));
    out.extend((1..=5).map(malc_bar_an));
    out.extend((1..=4).map(metab_ar));
    out.extend((1..=3).map(metab_as));
    for e in [1i8, -1] {
        out.extend((2..=10).map(|n| eps_a(e, n)));
    }
    out
}

/// Family names accepted by [`family`].
pub const FAMILY_NAMES: &[(&str, &str)] = &[
    ("jord_fn", "n"),
    ("malc_fn", "n"),
    ("malc_gn", "n"),
    ("eps_fkn", "k,n"),
    ("phi_row", "r,k"),
    ("psi_col", "s,k"),
];

/// Builds a single polynomial of a named family, e.g. `family("malc_fn", &[4])`.
/// `max_degree` caps the size of symmetric-group sums.
pub fn family(name: &str, params: &[i64], max_degree: usize) -> Result<MultilinearPoly> {
    let need = FAMILY_NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?
        .1;
    expect_params(name, params, need.split(',').count())?;
    let cap = |n: usize| {
        if n > max_degree {
            Err(Error::InvalidArgument(alloc::format!(
                "{name}: permutation degree {n} exceeds the cap {max_degree}"
            )))
        } else {
            Ok(n)
        }
    };
    use crate::tableaux::{rect_family, RectKind};
    match name {
        "jord_fn" => Ok(jord_fn(positive(params[0], 1, "n")?)),
        "malc_fn" => Ok(malc_fn(cap(positive(params[0], 2, "n")?)?)),
        "malc_gn" => Ok(malc_gn(cap(positive(params[0], 1, "n")?)?)),
        "eps_fkn" => {
            let (k, n) = (positive(params[0], 1, "k")?, positive(params[1], 1, "n")?);
            cap(k.max(n))?;
            Ok(eps_fkn(k, n))
        }
        "phi_row" => {
            let (r, k) = (positive(params[0], 1, "r")?, positive(params[1], 1, "k")?);
            cap(r.max(k))?;
            rect_family(RectKind::PhiRow { r, k })
        }
        "psi_col" => {
            let (s, k) = (positive(params[0], 1, "s")?, positive(params[1], 1, "k")?);
            cap(s.max(k))?;
            rect_family(RectKind::PsiCol { s, k })
        }
        _ => unreachable!("name checked against FAMILY_NAMES"),
    }
}

/// Label of a Grassmann word on the module side: `1`, `E1`, `E1E3`, ...
pub(crate) fn bold_label(mask: u32) -> String {
    if mask == 0 {
        return "1".into();
    }
    let mut s = String::new();
    for b in 0..32 {
        if mask >> b & 1 == 1 {
            s.push_str(&alloc::format!("E{}", b + 1));
        }
    }
    s
}

/// Nonempty subsets of `{1..n}` by size, then lexicographically.
pub(crate) fn masks(n: usize, with_empty: bool) -> Vec<u32> {
    let mut m: Vec<u32> = (0..(1u32 << n)).filter(|&m| with_empty || m != 0).collect();
    m.sort_by_key(|&m| {
        let bits: Vec<u32> = (0..32).filter(|b| m >> b & 1 == 1).collect();
        (m.count_ones(), bits)
    });
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_by_name() {
        assert_eq!(entry("jord_Bn", &[2]).unwrap().name, "jord_Bn(2)");
        assert!(matches!(entry("nope", &[]), Err(Error::UnknownName(_))));
        assert!(matches!(entry("jord_Bn", &[]), Err(Error::Arity { .. })));
        assert!(entry("eps_A", &[2, 4]).is_err());
        assert_eq!(family("malc_fn", &[4], 6).unwrap().len(), 24);
        assert!(family("malc_fn", &[7], 6).is_err());
    }

    #[test]
    fn small_entries_conform() {
        for e in [alt_a(), jord_a(), malc_a(), metab_ar(2), metab_as(2), eps_a(1, 3), eps_a(-1, 3)] {
            let c = e.conformance();
            assert!(c.is_ok(), "{}: {:?}", e.name, c);
        }
    }
}
