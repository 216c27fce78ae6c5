//! Split null extensions `U ∔ M` with symmetry completion of the action.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{parse_element_with, Algebra, Element, SuperAlgebra, SuperAlgebraBuilder};
use crate::error::{Error, Result};
use crate::poly::Parity;

/// How the unlisted side of a product is filled in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletionRule {
    /// Unlisted products are zero.
    None,
    /// `q·m = (-1)^{|q||m|} m·q`.
    Supersymmetric,
    /// `q·m = -(-1)^{|q||m|} m·q`.
    Superskew,
}

impl CompletionRule {
    /// Factor relating `b·a` to `a·b` for homogeneous `a`, `b`.
    pub fn factor(self, p: Parity, q: Parity) -> Option<i64> {
        let s = if p.is_odd() && q.is_odd() { -1 } else { 1 };
        match self {
            CompletionRule::None => None,
            CompletionRule::Supersymmetric => Some(s),
            CompletionRule::Superskew => Some(-s),
        }
    }
}

/// Explicit products `(left, right, value)` by labels of `U ∪ M`.
#[derive(Clone, Debug, Default)]
pub struct ActionTable {
    pub entries: Vec<(String, String, String)>,
}

impl ActionTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, l: impl Into<String>, r: impl Into<String>, value: impl Into<String>) {
        self.entries.push((l.into(), r.into(), value.into()));
    }
}

/// Applies `rule` to every explicit entry: the mirrored product is
/// filled in, and an explicit mirrored entry must agree with it.
pub(crate) fn complete(
    b: &mut SuperAlgebraBuilder,
    explicit: &[(usize, usize)],
    rule: CompletionRule,
) -> Result<()> {
    let is_explicit = |i: usize, j: usize| explicit.contains(&(i, j));
    for &(i, j) in explicit {
        let Some(f) = rule.factor(b.parity_of(i), b.parity_of(j)) else {
            continue;
        };
        let v = b.get_product(i, j).cloned().unwrap_or_default();
        let mirrored = v.scale(&crate::QEps::from_int(f));
        if is_explicit(j, i) {
            let w = b.get_product(j, i).cloned().unwrap_or_default();
            if w != mirrored {
                return Err(Error::Conflict {
                    left: b.labels_at(i),
                    right: b.labels_at(j),
                    msg: "explicit products on both sides violate the completion rule".into(),
                });
            }
        } else {
            b.set_product(j, i, mirrored);
        }
    }
    Ok(())
}

/// `U ∔ M`: basis of `U` followed by the basis of `M`; `U·U` from `U`,
/// `M·M = 0`, and the listed actions completed by `rule`.
pub fn split_null_extension(
    name: &str,
    u: &SuperAlgebra,
    m: &[(&str, Parity)],
    act: &ActionTable,
    rule: CompletionRule,
) -> Result<SuperAlgebra> {
    let mut b = SuperAlgebra::builder(name).field(u.field());
    for i in 0..u.dim() {
        b.add_basis(u.label(i), u.parity(i));
    }
    for (l, p) in m {
        b.add_basis(l.to_string(), *p);
    }
    for (i, j, e) in u.nonzero_products() {
        b.set_product(i, j, e.clone());
    }
    let mut explicit = Vec::new();
    for (l, r, v) in &act.entries {
        let i = b.index_of(l)?;
        let j = b.index_of(r)?;
        if explicit.contains(&(i, j)) {
            return Err(Error::Conflict {
                left: l.clone(),
                right: r.clone(),
                msg: "product listed twice".into(),
            });
        }
        let val: Element = parse_element_with(v, &|lab| b.index_of(lab))?;
        b.set_product(i, j, val);
        explicit.push((i, j));
    }
    complete(&mut b, &explicit, rule)?;
    b.build()
}

impl SuperAlgebraBuilder {
    pub(crate) fn labels_at(&self, i: usize) -> String {
        self.labels[i].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Parity::{Even, Odd};
    use alloc::string::ToString;

    fn null_u(labels: &[(&str, Parity)]) -> SuperAlgebra {
        let mut b = SuperAlgebra::builder("U");
        for (l, p) in labels {
            b.add_basis(*l, *p);
        }
        b.build().unwrap()
    }

    #[test]
    fn supersymmetric_fills_odd_sign() {
        let u = null_u(&[("x", Odd), ("y", Odd)]);
        let mut act = ActionTable::new();
        act.push("a", "x", "v");
        act.push("v", "y", "a");
        let a = split_null_extension("A", &u, &[("a", Even), ("v", Odd)], &act, CompletionRule::Supersymmetric)
            .unwrap();
        let (y, v) = (a.index_of("y").unwrap(), a.index_of("v").unwrap());
        assert_eq!(a.basis_product(y, v).display(&a).to_string(), "-1/1*a");
        let (x, aa) = (a.index_of("x").unwrap(), a.index_of("a").unwrap());
        assert_eq!(a.basis_product(x, aa).display(&a).to_string(), "1/1*v");
    }

    #[test]
    fn superskew_and_none() {
        let u = null_u(&[("y", Odd)]);
        let mut act = ActionTable::new();
        act.push("a", "y", "v");
        let a = split_null_extension("A", &u, &[("a", Even), ("v", Odd)], &act, CompletionRule::Superskew)
            .unwrap();
        let (y, aa) = (a.index_of("y").unwrap(), a.index_of("a").unwrap());
        assert_eq!(a.basis_product(y, aa).display(&a).to_string(), "-1/1*v");
        let n = split_null_extension("A", &u, &[("a", Even), ("v", Odd)], &act, CompletionRule::None)
            .unwrap();
        assert!(n.basis_product(y, aa).is_zero());
    }

    #[test]
    fn conflicting_sides_are_rejected() {
        let u = null_u(&[("y", Odd)]);
        let mut act = ActionTable::new();
        act.push("a", "y", "v");
        act.push("y", "a", "v");
        let r = split_null_extension("A", &u, &[("a", Even), ("v", Odd)], &act, CompletionRule::Superskew);
        assert!(matches!(r, Err(Error::Conflict { .. })));
        let ok = split_null_extension("A", &u, &[("a", Even), ("v", Odd)], &act, CompletionRule::Supersymmetric);
        assert!(ok.is_ok());
    }
}
