//! Metabelian (super)algebras with a cyclic right action, separating the
//! varieties generated by `r` even or `s` odd elements.

use alloc::string::String;
use alloc::vec::Vec;

use super::{gens, one, CatalogEntry, Table, Variety};
use crate::algebra::extension::CompletionRule;
use crate::algebra::Field;
use crate::poly::Parity::{self, *};

/// Even null `e_1..e_r` acting on even `a_0..a_{r-1}` by
/// `a_n·e_i = a_{n+1 mod r}` iff `n ≡ i (mod r)`; left actions are zero.
pub fn metab_ar(r: usize) -> CatalogEntry {
    let name = alloc::format!("metab_Ar({r})");
    let mut t = Table::new(&name, Field::Q);
    for i in 1..=r {
        t.add(alloc::format!("e{i}"), Even);
    }
    for n in 0..r {
        t.add(alloc::format!("a{n}"), Even);
    }
    for n in 0..r {
        let i = if n == 0 { r } else { n };
        t.set(&alloc::format!("a{n}"), &alloc::format!("e{i}"), &[(one(), &alloc::format!("a{}", (n + 1) % r))]);
    }
    let alg = t.finish(CompletionRule::None);
    let mut g: Vec<String> = alloc::vec![alloc::format!("a0+e{r}")];
    g.extend((1..r).map(|i| alloc::format!("e{i}")));
    let refs: Vec<&str> = g.iter().map(String::as_str).collect();
    CatalogEntry {
        name,
        generators: gens(&alg, &refs),
        algebra: alg,
        variety: Variety::Metabelian,
        extra: Vec::new(),
        description: "metabelian algebra on r even generators outside M(r-1, s)",
    }
}

/// Odd null `y_1..y_s` acting on `a_0..a_{2s-1}` (parity `n mod 2`) by
/// `a_n·y_i = a_{n+1 mod 2s}` iff `n ≡ i (mod s)`; left actions are zero.
pub fn metab_as(s: usize) -> CatalogEntry {
    let name = alloc::format!("metab_As({s})");
    let mut t = Table::new(&name, Field::Q);
    for i in 1..=s {
        t.add(alloc::format!("y{i}"), Odd);
    }
    for n in 0..2 * s {
        t.add(alloc::format!("a{n}"), Parity::from_bit((n % 2) as u8));
    }
    for n in 0..2 * s {
        let i = if n % s == 0 { s } else { n % s };
        t.set(
            &alloc::format!("a{n}"),
            &alloc::format!("y{i}"),
            &[(one(), &alloc::format!("a{}", (n + 1) % (2 * s)))],
        );
    }
    let alg = t.finish(CompletionRule::None);
    let mut g: Vec<String> = alloc::vec!["a1+y1".into()];
    g.extend((2..=s).map(|i| alloc::format!("y{i}")));
    let refs: Vec<&str> = g.iter().map(String::as_str).collect();
    CatalogEntry {
        name,
        generators: gens(&alg, &refs),
        algebra: alg,
        variety: Variety::Metabelian,
        extra: Vec::new(),
        description: "metabelian superalgebra on s odd generators outside M(r, s-1)",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use alloc::string::ToString;

    #[test]
    fn cyclic_action() {
        let e = metab_ar(3);
        let a = &e.algebra;
        let p = |l: &str, r: &str| {
            a.mul(&e.element(l).unwrap(), &e.element(r).unwrap()).display(a).to_string()
        };
        assert_eq!(p("a0", "e3"), "1/1*a1");
        assert_eq!(p("a2", "e2"), "1/1*a0");
        assert_eq!(p("a1", "e2"), "0");
        assert_eq!(p("e1", "a1"), "0");
        let e = metab_as(2);
        let a = &e.algebra;
        let p = |l: &str, r: &str| {
            a.mul(&e.element(l).unwrap(), &e.element(r).unwrap()).display(a).to_string()
        };
        assert_eq!(p("a3", "y1"), "1/1*a0");
        assert_eq!(p("a2", "y2"), "1/1*a3");
        assert_eq!(a.dim(), 6);
    }
}
