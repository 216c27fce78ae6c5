//! The `ε`-superalgebra on countably many odd generators, truncated at a
//! finite index, and the family `f_{k,n}` that does not vanish on it.

use alloc::string::String;
use alloc::vec::Vec;

use super::{gens, CatalogEntry, Table, Variety};
use crate::algebra::extension::CompletionRule;
use crate::algebra::{Element, Field};
use crate::poly::{MultilinearPoly, Parity::*, Poly, Tree};
use crate::scalars::QEps;
use crate::tableaux::YoungTable;

/// Odd `y_i`, even `a_i`, odd `w_i` for `i ≤ N`, with `y_i·a_i = w_{i+1}`,
/// `a_i·y_i = ε w_{i+1}` (for `i < N`) and `y_i·w_i = a_i`.
///
/// Dropping `w_{N+1}` is the quotient by the ideal spanned by all basis
/// vectors of index above `N`, so the truncation stays in the variety.
pub fn eps_a(eps: i8, n: usize) -> CatalogEntry {
    assert!(eps == 1 || eps == -1, "eps is +1 or -1");
    let name = alloc::format!("eps_A({eps:+},{n})");
    let mut t = Table::new(&name, Field::Q);
    for i in 1..=n {
        t.add(alloc::format!("y{i}"), Odd);
    }
    for i in 1..=n {
        t.add(alloc::format!("a{i}"), Even);
    }
    for i in 1..=n {
        t.add(alloc::format!("w{i}"), Odd);
    }
    let e = QEps::from_int(eps as i64);
    for i in 1..=n {
        let (y, a, w) = (alloc::format!("y{i}"), alloc::format!("a{i}"), alloc::format!("w{i}"));
        if i < n {
            let next = alloc::format!("w{}", i + 1);
            t.set(&y, &a, &[(QEps::one(), &next)]);
            t.set(&a, &y, &[(e.clone(), &next)]);
        }
        t.set(&y, &w, &[(QEps::one(), &a)]);
    }
    let alg = t.finish(CompletionRule::None);
    let mut g: Vec<String> = alloc::vec!["w1".into()];
    g.extend((1..=n).map(|i| alloc::format!("y{i}")));
    let refs: Vec<&str> = g.iter().map(String::as_str).collect();
    CatalogEntry {
        name,
        generators: gens(&alg, &refs),
        algebra: alg,
        variety: Variety::Eps(eps),
        extra: Vec::new(),
        description: "eps-superalgebra on odd generators, truncated at index N",
    }
}

/// Variable numbers of `f_{k,n}(u, v, x_1, z_1, ..., z_{kn-1}, x_{kn})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsFknVars {
    pub u: u32,
    pub v: u32,
    /// `x_1..x_{kn}`
    pub x: Vec<u32>,
    /// `z_1..z_{kn-1}`
    pub z: Vec<u32>,
}

/// `u = 1`, `v = 2`, then `x_i = 2i + 1` and `z_i = 2i + 2`, i.e. the
/// variables are numbered in the order they are listed.
pub fn eps_fkn_variables(k: usize, n: usize) -> EpsFknVars {
    let m = (k * n) as u32;
    EpsFknVars {
        u: 1,
        v: 2,
        x: (1..=m).map(|i| 2 * i + 1).collect(),
        z: (1..m).map(|i| 2 * i + 2).collect(),
    }
}

/// `f_{k,n} = (uv) Σ_{ρ∈R} Σ_{σ∈C_ρ} sgn(σ) L_{x_{σρ(1)}} L_{z_1} ... L_{z_{kn-1}} L_{x_{σρ(kn)}}`
/// over the row-major `k × n` table, where `wL_a = a·w`.
pub fn eps_fkn(k: usize, n: usize) -> MultilinearPoly {
    let vars = eps_fkn_variables(k, n);
    let mut p = Poly::zero();
    for (pi, s) in YoungTable::row_major(k, n).psi_terms() {
        let mut m = Tree::mul(Tree::x(vars.u), Tree::x(vars.v));
        for (slot, img) in pi.iter().enumerate() {
            if slot > 0 {
                m = m.l(vars.z[slot - 1]);
            }
            m = m.l(vars.x[*img]);
        }
        p.add_term(QEps::from_int(s), m);
    }
    p.into_multilinear().expect("multilinear by construction")
}

/// The substitution `u = y_1`, `v = w_1`, `x_i = y_i`, `z_i = y_{i+1}`
/// into an entry built by [`eps_a`] with `N ≥ kn + 1`.
pub fn eps_fkn_assignment(
    entry: &CatalogEntry,
    k: usize,
    n: usize,
) -> crate::error::Result<alloc::collections::BTreeMap<u32, Element>> {
    let vars = eps_fkn_variables(k, n);
    let mut out = alloc::collections::BTreeMap::new();
    out.insert(vars.u, entry.element("y1")?);
    out.insert(vars.v, entry.element("w1")?);
    for (i, &x) in vars.x.iter().enumerate() {
        out.insert(x, entry.element(&alloc::format!("y{}", i + 1))?);
    }
    for (i, &z) in vars.z.iter().enumerate() {
        out.insert(z, entry.element(&alloc::format!("y{}", i + 2))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use alloc::string::ToString;

    #[test]
    fn associators() {
        for eps in [1i8, -1] {
            let e = eps_a(eps, 4);
            let a = &e.algebra;
            let el = |s: &str| e.element(s).unwrap();
            let (y, w) = (el("y2"), el("w2"));
            let lhs = a.mul(&a.mul(&y, &w), &y);
            let rhs = a.mul(&y, &a.mul(&w, &y));
            let want = if eps == 1 { "1/1*w3" } else { "-1/1*w3" };
            assert_eq!(lhs.sub(&rhs).display(a).to_string(), want);
            // ⟨a, y⟩_ε = a·y - ε y·a
            let (ai, yi) = (el("a1"), el("y1"));
            let br = a.mul(&ai, &yi).sub(&a.mul(&yi, &ai).scale(&QEps::from_int(eps as i64)));
            assert!(br.is_zero());
        }
    }

    #[test]
    fn family_shape() {
        assert_eq!(eps_fkn(1, 1).to_string(), "1/1*(x3 (x1 x2))");
        for (k, n) in [(1, 2), (2, 1), (2, 2), (1, 3)] {
            let f = eps_fkn(k, n);
            assert_eq!(f.degree(), 2 + 2 * k * n - 1);
        }
        let v = eps_fkn_variables(2, 1);
        assert_eq!((v.x.clone(), v.z.clone()), (alloc::vec![3, 5], alloc::vec![4]));
    }
}
