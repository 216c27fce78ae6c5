//! Metabelian Malcev (super)algebras built on Grassmann algebras, and the
//! polynomials `fₙ`, `gₙ` separating them.

use alloc::string::String;
use alloc::vec::Vec;

use super::{bold_label, gens, masks, one, CatalogEntry, Table, Variety};
use crate::algebra::extension::CompletionRule;
use crate::algebra::grassmann::mask_product;
use crate::algebra::{Element, Field};
use crate::poly::{signed_left_normed_sum, MultilinearPoly, Parity, Parity::*, Poly, Tree};
use crate::scalars::QEps;

/// Even `e`, odd `y` (null), even `a`, odd `v`, `w`;
/// `a·y = v`, `v·y = a`, `w·e = w`, completed superskew.
pub fn malc_a() -> CatalogEntry {
    let mut t = Table::new("malc_A", Field::Q);
    t.add("e", Even);
    t.add("y", Odd);
    t.add("a", Even);
    t.add("v", Odd);
    t.add("w", Odd);
    t.set("a", "y", &[(one(), "v")]);
    t.set("v", "y", &[(one(), "a")]);
    t.set("w", "e", &[(one(), "w")]);
    let alg = t.finish(CompletionRule::Superskew);
    CatalogEntry {
        name: "malc_A".into(),
        generators: gens(&alg, &["a+e", "w+y"]),
        algebra: alg,
        variety: Variety::Malcev,
        extra: Vec::new(),
        description: "Malcev superalgebra on one even and one odd generator",
    }
}

fn signed(neg: bool) -> QEps {
    if neg {
        -QEps::one()
    } else {
        QEps::one()
    }
}

/// `U_{n-1} ∔ G_{n-1}`: even null `e_1..e_{n-1}` acting on the unital
/// Grassmann algebra by `w·e_k = wE_k = -e_k·w`.
pub fn malc_an(n: usize) -> CatalogEntry {
    let m = n - 1;
    let name = alloc::format!("malc_An({n})");
    let mut t = Table::new(&name, Field::Q);
    for k in 1..=m {
        t.add(alloc::format!("e{k}"), Even);
    }
    let words = masks(m, true);
    for &w in &words {
        t.add(bold_label(w), Even);
    }
    for &w in &words {
        for k in 0..m {
            if let Some((neg, u)) = mask_product(w, 1 << k) {
                let v = Element::term(t.idx(&bold_label(u)), signed(neg));
                let (i, j) = (t.idx(&bold_label(w)), t.idx(&alloc::format!("e{}", k + 1)));
                t.set_idx(i, j, v);
            }
        }
    }
    let alg = t.finish(CompletionRule::Superskew);
    let mut g: Vec<String> = alloc::vec!["1/1*1".into()];
    g.extend((1..=m).map(|k| alloc::format!("e{k}")));
    let refs: Vec<&str> = g.iter().map(String::as_str).collect();
    CatalogEntry {
        name,
        generators: gens(&alg, &refs),
        algebra: alg,
        variety: Variety::Malcev,
        extra: Vec::new(),
        description: "n-generated metabelian Malcev algebra with f_n != 0",
    }
}

fn bar(w: u32) -> String {
    alloc::format!("{}_bar", bold_label(w))
}

/// `G⁽ⁿ⁾` and `Ḡ⁽ⁿ⁾` on top of odd null `y_1..y_n`.
fn super_an_table(n: usize, name: &str) -> Table {
    let mut t = Table::new(name, Field::Q);
    for k in 1..=n {
        t.add(alloc::format!("y{k}"), Odd);
    }
    let words = masks(n, true);
    for &w in &words {
        t.add(bold_label(w), Parity::from_bit((w.count_ones() % 2) as u8));
    }
    for &w in words.iter().filter(|&&w| w != 0) {
        t.add(bar(w), Parity::from_bit((w.count_ones() % 2) as u8 ^ 1));
    }
    for &w in &words {
        for k in 0..n {
            let y = t.idx(&alloc::format!("y{}", k + 1));
            if let Some((neg, u)) = mask_product(w, 1 << k) {
                let i = t.idx(&bold_label(w));
                let v = Element::term(t.idx(&bold_label(u)), signed(neg));
                t.set_idx(i, y, v);
                if w != 0 {
                    let i = t.idx(&bar(w));
                    let v = Element::term(t.idx(&bar(u)), signed(neg));
                    t.set_idx(i, y, v);
                }
            }
        }
    }
    t
}

/// `A⁽ⁿ⁾ = U⁽ⁿ⁾ ∔ (G⁽ⁿ⁾ + Ḡ⁽ⁿ⁾)` with `w·y_k = wE_k`,
/// `w̄·y_k = \overline{wE_k}`, completed superskew. Barred words have the
/// opposite parity of their length.
pub fn malc_super_an(n: usize) -> CatalogEntry {
    let name = alloc::format!("malc_superAn({n})");
    let alg = super_an_table(n, &name).finish(CompletionRule::Superskew);
    // neither the unit nor the barred letters are products
    let mut g: Vec<String> = alloc::vec!["1/1*1".into()];
    g.extend((1..=n).map(|k| alloc::format!("y{k}")));
    g.extend((0..n).map(|k| bar(1 << k)));
    let refs: Vec<&str> = g.iter().map(String::as_str).collect();
    CatalogEntry {
        name,
        generators: gens(&alg, &refs),
        algebra: alg,
        variety: Variety::Malcev,
        extra: Vec::new(),
        description: "Malcev superalgebra over the Grassmann algebra and its barred copy",
    }
}

/// `Ā⁽ⁿ⁺¹⁾`: [`malc_super_an`] plus odd `x` with `x² = 1`,
/// `x·y_i = y_i·x = Ē_i`, `x·w̄ = (-1)^{|w|} w̄·x = ½w`.
/// Generated by the `n + 1` odd elements `x, y_1, ..., y_n`.
pub fn malc_bar_an(n: usize) -> CatalogEntry {
    let name = alloc::format!("malc_barAn({})", n + 1);
    let mut t = super_an_table(n, &name);
    t.add("x", Odd);
    t.set("x", "x", &[(one(), "1")]);
    for k in 0..n {
        let y = alloc::format!("y{}", k + 1);
        t.set("x", &y, &[(one(), &bar(1 << k))]);
    }
    for &w in masks(n, false).iter() {
        t.set("x", &bar(w), &[(QEps::ratio(1, 2), &bold_label(w))]);
    }
    let alg = t.finish(CompletionRule::Superskew);
    let mut g: Vec<String> = alloc::vec!["x".into()];
    g.extend((1..=n).map(|k| alloc::format!("y{k}")));
    let refs: Vec<&str> = g.iter().map(String::as_str).collect();
    CatalogEntry {
        name,
        generators: gens(&alg, &refs),
        algebra: alg,
        variety: Variety::Malcev,
        extra: Vec::new(),
        description: "Malcev superalgebra on n+1 odd generators with g_n != 0",
    }
}

/// `fₙ = Σ_{σ∈Sₙ} sgn(σ) (x_{σ1}x_{σ2}) R_{x_{σ3}} ... R_{x_{σn}}`.
pub fn malc_fn(n: usize) -> MultilinearPoly {
    let vars: Vec<u32> = (1..=n as u32).collect();
    signed_left_normed_sum(&vars).into_multilinear().expect("multilinear by construction")
}

/// `gₙ = (ab) Σ_{σ∈Sₙ} R_{x_{σ1}} ... R_{x_{σn}}` with `a = x1`, `b = x2`,
/// `x_i = x_{i+2}`.
pub fn malc_gn(n: usize) -> MultilinearPoly {
    let mut p = Poly::zero();
    for perm in crate::perm::permutations(n) {
        let mut m = Tree::mul(Tree::x(1), Tree::x(2));
        for i in perm {
            m = m.r(i as u32 + 3);
        }
        p.add_term(one(), m);
    }
    p.into_multilinear().expect("multilinear by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use alloc::string::ToString;

    #[test]
    fn malc_a_products() {
        let e = malc_a();
        let a = &e.algebra;
        let p = |l: &str, r: &str| {
            a.mul(&e.element(l).unwrap(), &e.element(r).unwrap()).display(a).to_string()
        };
        assert_eq!(p("y", "a"), "-1/1*v");
        assert_eq!(p("y", "v"), "1/1*a");
        assert_eq!(p("e", "w"), "-1/1*w");
    }

    #[test]
    fn dimensions() {
        assert_eq!(malc_an(1).algebra.dim(), 1);
        assert_eq!(malc_an(4).algebra.dim(), 3 + 8);
        assert_eq!(malc_super_an(3).algebra.dim(), 3 + 8 + 7);
        assert_eq!(malc_bar_an(3).algebra.dim(), 3 + 8 + 7 + 1);
        assert_eq!(malc_bar_an(3).name, "malc_barAn(4)");
    }

    #[test]
    fn bar_an_products() {
        let e = malc_bar_an(2);
        let a = &e.algebra;
        let p = |l: &str, r: &str| {
            a.mul(&e.element(l).unwrap(), &e.element(r).unwrap()).display(a).to_string()
        };
        assert_eq!(p("y1", "x"), "1/1*E1_bar");
        assert_eq!(p("E1_bar", "x"), "-1/2*E1");
        assert_eq!(p("E1E2_bar", "x"), "1/2*E1E2");
        assert_eq!(p("E2_bar", "y1"), "-1/1*E1E2_bar");
        assert_eq!(p("x", "x"), "1/1*1");
    }

    #[test]
    fn family_shapes() {
        assert_eq!(malc_fn(3).len(), 6);
        assert_eq!(malc_gn(3).len(), 6);
        assert_eq!(malc_gn(3).degree(), 5);
        assert_eq!(malc_fn(2).to_string(), "1/1*(x1 x2) - 1/1*(x2 x1)");
    }
}
