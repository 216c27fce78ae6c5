//! Metabelian Jordan superalgebras: the 4-dimensional `jord_A`, the
//! split null extensions `B⁽ⁿ⁾`, and the polynomials used against them.

use alloc::string::String;
use alloc::vec::Vec;

use super::{gens, masks, one, CatalogEntry, Table, Variety};
use crate::algebra::extension::CompletionRule;
use crate::algebra::{Algebra, Element, Field, SuperAlgebra};
use crate::perm::inversion_sign;
use crate::poly::{MultilinearPoly, Parity, Parity::*, Poly, Tree};
use crate::scalars::QEps;

/// Odd `x`, `y` with null products, even `a`, odd `v`;
/// `a·x = v`, `v·y = a`, completed supersymmetrically.
pub fn jord_a() -> CatalogEntry {
    let mut t = Table::new("jord_A", Field::Q);
    t.add("x", Odd);
    t.add("y", Odd);
    t.add("a", Even);
    t.add("v", Odd);
    t.set("a", "x", &[(one(), "v")]);
    t.set("v", "y", &[(one(), "a")]);
    let alg = t.finish(CompletionRule::Supersymmetric);
    CatalogEntry {
        name: "jord_A".into(),
        generators: gens(&alg, &["v+x", "y"]),
        algebra: alg,
        variety: Variety::Jordan,
        extra: Vec::new(),
        description: "Jordan superalgebra on two odd generators",
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Letter {
    Y,
    E(u32),
}

/// Normal-form words of `A⁽ⁿ⁾`: `1`, `Y`, and
/// `Y^δ E_{i1} Y E_{i2} Y ... E_{ik} Y^δ'` with `i1 < ... < ik`.
fn normal_words(n: usize) -> Vec<Vec<Letter>> {
    let mut out = alloc::vec![Vec::new(), alloc::vec![Letter::Y]];
    for m in masks(n, false) {
        let idx: Vec<u32> = (0..n as u32).filter(|b| m >> b & 1 == 1).map(|b| b + 1).collect();
        for (lead, trail) in [(false, false), (true, false), (false, true), (true, true)] {
            let mut w = Vec::new();
            if lead {
                w.push(Letter::Y);
            }
            for (k, i) in idx.iter().enumerate() {
                if k > 0 {
                    w.push(Letter::Y);
                }
                w.push(Letter::E(*i));
            }
            if trail {
                w.push(Letter::Y);
            }
            out.push(w);
        }
    }
    out
}

fn word_label(w: &[Letter]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut s = String::new();
    for l in w {
        match l {
            Letter::Y => s.push('Y'),
            Letter::E(i) => s.push_str(&alloc::format!("E{i}")),
        }
    }
    s
}

/// Product of two normal words: concatenate, cancel `YY`, kill `EE` and
/// repeated indices, and sort the `E` indices with the permutation sign.
fn word_product(a: &[Letter], b: &[Letter]) -> Option<(i64, Vec<Letter>)> {
    let mut w: Vec<Letter> = a.to_vec();
    for &l in b {
        match (w.last(), l) {
            (Some(Letter::Y), Letter::Y) => {
                w.pop();
            }
            (Some(Letter::E(_)), Letter::E(_)) => return None,
            _ => w.push(l),
        }
    }
    let idx: Vec<u32> = w
        .iter()
        .filter_map(|l| match l {
            Letter::E(i) => Some(*i),
            Letter::Y => None,
        })
        .collect();
    let mut sorted = idx.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    let sign = inversion_sign(&idx);
    let mut it = sorted.into_iter();
    for l in w.iter_mut() {
        if let Letter::E(i) = l {
            *i = it.next().expect("same number of indices");
        }
    }
    Some((sign, w))
}

fn parity_of(w: &[Letter]) -> Parity {
    Parity::from_bit((w.iter().filter(|l| **l == Letter::Y).count() % 2) as u8)
}

/// The associative unital superalgebra `A⁽ⁿ⁾` on even `E1..En` and odd
/// `Y` with `E_iE_j = 0`, `Y² = 1`, `E_iYE_j = -E_jYE_i`, on its
/// normal-form basis (dimension `4·2ⁿ - 2`).
pub fn jordan_assoc(n: usize) -> SuperAlgebra {
    let words = normal_words(n);
    let labels: Vec<String> = words.iter().map(|w| word_label(w)).collect();
    let mut t = Table::new(&alloc::format!("A{n}"), Field::Q).associative();
    for (w, l) in words.iter().zip(&labels) {
        t.add(l.clone(), parity_of(w));
    }
    for (i, a) in words.iter().enumerate() {
        for (j, b) in words.iter().enumerate() {
            if let Some((s, w)) = word_product(a, b) {
                let k = t.idx(&word_label(&w));
                t.set_idx(i, j, Element::term(k, QEps::from_int(s)));
            }
        }
    }
    t.finish(CompletionRule::None)
}

/// `U⁽ⁿ⁾ ∔ A⁽ⁿ⁾` on the full normal-form basis: `a·e_i = aE_i` for
/// `a ≠ 1`, `1·e_i = 0`, `b·y = bY`, completed supersymmetrically.
pub fn jord_bn_full(n: usize) -> CatalogEntry {
    let a = jordan_assoc(n);
    let alg = extension_over(&a, n, &alloc::format!("jord_Bn_full({n})"), |_| true);
    let mut g = alloc::vec![alloc::string::String::from("1/1*1+e1")];
    g.extend((2..=n).map(|i| alloc::format!("e{i}")));
    g.push("y".into());
    g.extend((1..=n).map(|i| alloc::format!("E{i}")));
    let refs: Vec<&str> = g.iter().map(String::as_str).collect();
    CatalogEntry {
        name: alloc::format!("jord_Bn_full({n})"),
        generators: gens(&alg, &refs),
        algebra: alg,
        variety: Variety::Jordan,
        extra: Vec::new(),
        description: "Jordan split null extension over the whole of A(n)",
    }
}

/// The subalgebra of [`jord_bn_full`] generated by `1 + e1, e2, ..., en, y`.
///
/// Since `1·e_i = 0`, no product starts with `E_i`; the generated
/// subalgebra is spanned by `U⁽ⁿ⁾`, `1`, `Y` and the words starting with
/// `Y` (dimension `2^{n+1} + n + 1`).
pub fn jord_bn(n: usize) -> CatalogEntry {
    let a = jordan_assoc(n);
    let name = alloc::format!("jord_Bn({n})");
    let alg = extension_over(&a, n, &name, |w| !w.starts_with('E'));
    let mut g = alloc::vec![alloc::string::String::from("1/1*1+e1")];
    g.extend((2..=n).map(|i| alloc::format!("e{i}")));
    g.push("y".into());
    let refs: Vec<&str> = g.iter().map(String::as_str).collect();
    CatalogEntry {
        name,
        generators: gens(&alg, &refs),
        algebra: alg,
        variety: Variety::Jordan,
        extra: Vec::new(),
        description: "Jordan superalgebra on n even and one odd generator, not nilpotent",
    }
}

fn extension_over(a: &SuperAlgebra, n: usize, name: &str, keep: impl Fn(&str) -> bool) -> SuperAlgebra {
    let mut t = Table::new(name, Field::Q);
    for i in 1..=n {
        t.add(alloc::format!("e{i}"), Even);
    }
    t.add("y", Odd);
    let kept: Vec<usize> = (0..a.dim()).filter(|&i| keep(&a.label(i))).collect();
    for &i in &kept {
        t.add(a.label(i), a.parity(i));
    }
    let ybold = a.index_of("Y").expect("Y is a basis word");
    let right = |t: &mut Table, m: usize, u: &str, factor: usize| {
        let p = a.product(m, factor);
        let v = Element::from_pairs(p.coords().iter().map(|(k, c)| {
            let l = a.label(*k);
            assert!(keep(&l), "restricted basis is closed under the action");
            (t.idx(&l), c.clone())
        }));
        let (i, j) = (t.idx(&a.label(m)), t.idx(u));
        t.set_idx(i, j, v);
    };
    for &m in &kept {
        if a.label(m) != "1" {
            for i in 1..=n {
                let e = a.index_of(&alloc::format!("E{i}")).expect("E_i is a basis word");
                right(&mut t, m, &alloc::format!("e{i}"), e);
            }
        }
        right(&mut t, m, "y", ybold);
    }
    t.finish(CompletionRule::Supersymmetric)
}

/// `fₙ = (ab)(R_{x1}∘R_{x2})...(R_{x_{2n-1}}∘R_{x_{2n}})` with `a = x1`,
/// `b = x2`, `x_i = x_{i+2}`; `2ⁿ` terms.
pub fn jord_fn(n: usize) -> MultilinearPoly {
    let mut p = Poly::zero();
    for choice in 0u32..(1 << n) {
        let mut m = Tree::mul(Tree::x(1), Tree::x(2));
        for j in 0..n as u32 {
            let (first, second) = (2 * j + 3, 2 * j + 4);
            m = if choice >> j & 1 == 0 { m.r(first).r(second) } else { m.r(second).r(first) };
        }
        p.add_term(one(), m);
    }
    p.into_multilinear().expect("multilinear by construction")
}

/// Basis monomials `(x_k x_{i1}) R_{x_{j1}} R_{x_{i2}} R_{x_{j2}} ... R_{x_{it}} R'_{x_{jt}}`
/// of degree `n ≥ 2` with `k > i1 < ... < it`, `j1 < ... < jt`,
/// `t = ⌊n/2⌋`, and `R_{x_{jt}}` absent for even `n`.
/// Returned with the index triple `(k, I, J)`.
pub fn jordan_basis_monomials(n: usize) -> Vec<(Tree, u32, Vec<u32>, Vec<u32>)> {
    assert!(n >= 2, "basis monomials start in degree 2");
    let t = n / 2;
    let j_len = if n % 2 == 0 { t - 1 } else { t };
    let mut out = Vec::new();
    for im in masks(n, false).into_iter().filter(|m| m.count_ones() as usize == t) {
        let rest: Vec<u32> = (0..n as u32).filter(|b| im >> b & 1 == 0).map(|b| b + 1).collect();
        let i_set: Vec<u32> = (0..n as u32).filter(|b| im >> b & 1 == 1).map(|b| b + 1).collect();
        for jm in 0u32..(1 << rest.len()) {
            if jm.count_ones() as usize != j_len {
                continue;
            }
            let j_set: Vec<u32> =
                rest.iter().enumerate().filter(|(p, _)| jm >> p & 1 == 1).map(|(_, v)| *v).collect();
            let k = *rest.iter().enumerate().find(|(p, _)| jm >> p & 1 == 0).expect("one left").1;
            if k <= i_set[0] {
                continue;
            }
            let mut m = Tree::mul(Tree::x(k), Tree::x(i_set[0]));
            for s in 0..t {
                if s > 0 {
                    m = m.r(i_set[s]);
                }
                if s < j_set.len() {
                    m = m.r(j_set[s]);
                }
            }
            out.push((m, k, i_set.clone(), j_set));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::subalgebra_closure;
    use alloc::string::ToString;

    #[test]
    fn assoc_dimension_and_validity() {
        for n in 1..=3 {
            let a = jordan_assoc(n);
            assert_eq!(a.dim(), 4 * (1 << n) - 2);
            assert!(a.validate().is_ok(), "A({n})");
        }
        let a = jordan_assoc(2);
        let e2 = a.index_of("E2").unwrap();
        let y = a.index_of("Y").unwrap();
        let e1 = a.index_of("E1").unwrap();
        let ey = a.product(e2, y).clone();
        assert_eq!(a.mul(&ey, &Element::basis(e1)).display(&a).to_string(), "-1/1*E1YE2");
    }

    #[test]
    fn generated_subalgebra() {
        for n in 1..=3 {
            let full = jord_bn_full(n);
            let named = gens(&full.algebra, &{
                let mut g: Vec<String> = alloc::vec!["1/1*1+e1".into()];
                g.extend((2..=n).map(|i| alloc::format!("e{i}")));
                g.push("y".into());
                g
            }
            .iter()
            .map(String::as_str)
            .collect::<Vec<_>>());
            let c = subalgebra_closure(&full.algebra, &named);
            let sub = jord_bn(n);
            assert_eq!(c.dim(), sub.algebra.dim());
            assert_eq!(sub.algebra.dim(), (1 << (n + 1)) + n + 1);
            assert_eq!(full.algebra.dim(), n + 1 + 4 * (1 << n) - 2);
        }
    }

    #[test]
    fn jord_fn_shape() {
        let f = jord_fn(2);
        assert_eq!((f.degree(), f.len()), (6, 4));
        assert_eq!(jord_fn(1).to_string(), "1/1*(((x1 x2) x3) x4) + 1/1*(((x1 x2) x4) x3)");
    }

    #[test]
    fn basis_monomials() {
        let m3: Vec<String> = jordan_basis_monomials(3).iter().map(|m| m.0.to_string()).collect();
        assert_eq!(m3.len(), 3);
        for s in ["((x2 x1) x3)", "((x3 x1) x2)", "((x3 x2) x1)"] {
            assert!(m3.iter().any(|m| m == s), "{s} in {m3:?}");
        }
        let m2: Vec<String> = jordan_basis_monomials(2).iter().map(|m| m.0.to_string()).collect();
        assert_eq!(m2, ["(x2 x1)"]);
        for n in 2..=6 {
            for (m, ..) in jordan_basis_monomials(n) {
                assert!(m.is_multilinear() && m.degree() == n);
            }
        }
    }
}
