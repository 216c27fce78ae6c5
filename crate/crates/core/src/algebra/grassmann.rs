//! Grassmann algebras and Grassmann envelopes.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::eval::check_on_domains;
use super::{Algebra, Element, Field, SuperAlgebra, Verdict};
use crate::error::{Error, Result};
use crate::poly::{MultilinearPoly, Parity};
use crate::scalars::QEps;

/// Subsets of `{1..n}` as bitmasks ordered by size, then lexicographically
/// by their sorted elements. The empty set is included iff `with_unit`.
fn ordered_masks(n: u32, with_unit: bool) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..(1u32 << n)).filter(|&m| with_unit || m != 0).collect();
    masks.sort_by_key(|&m| (m.count_ones(), bits(m)));
    masks
}

fn bits(m: u32) -> Vec<u32> {
    (0..32).filter(|b| m >> b & 1 == 1).collect()
}

/// `e1e2` for `{1,2}`, `1` for the empty set.
pub fn grassmann_label(mask: u32) -> String {
    if mask == 0 {
        return String::from("1");
    }
    let mut s = String::new();
    for b in bits(mask) {
        let _ = write!(s, "e{}", b + 1);
    }
    s
}

/// Product of two Grassmann monomials: `None` if they share a generator,
/// otherwise the sign of sorting the concatenation and the union.
pub(crate) fn mask_product(g: u32, h: u32) -> Option<(bool, u32)> {
    if g & h != 0 {
        return None;
    }
    // each generator of h passes the generators of g that are larger
    let mut inv = 0;
    let mut rest = h;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inv += (g >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    Some((inv % 2 == 1, g | h))
}

/// The Grassmann algebra on `n` anticommuting generators (with or without
/// the unit), as a superalgebra graded by word length.
pub fn grassmann(n: u32, with_unit: bool) -> SuperAlgebra {
    let masks = ordered_masks(n, with_unit);
    let mut index = alloc::vec![usize::MAX; 1 << n];
    for (i, m) in masks.iter().enumerate() {
        index[*m as usize] = i;
    }
    let name = if with_unit {
        alloc::format!("G{n}")
    } else {
        alloc::format!("G{n}_nonunital")
    };
    let mut b = SuperAlgebra::builder(name).associative(true).field(Field::Q);
    for m in &masks {
        b.add_basis(grassmann_label(*m), Parity::from_bit(m.count_ones() as u8));
    }
    for (i, g) in masks.iter().enumerate() {
        for (j, h) in masks.iter().enumerate() {
            if let Some((neg, u)) = mask_product(*g, *h) {
                let c = if neg { -QEps::one() } else { QEps::one() };
                b.set_product(i, j, Element::term(index[u as usize], c));
            }
        }
    }
    b.build().expect("grassmann labels are unique")
}

/// The Grassmann envelope `G_0 ⊗ A_0 + G_1 ⊗ A_1` of a superalgebra over
/// the unital Grassmann algebra on `n` generators. Products are computed
/// on demand from the two factors.
pub struct Envelope<'a, A: Algebra + ?Sized> {
    base: &'a A,
    n: u32,
    basis: Vec<(u32, usize)>,
    /// `index[mask * dim(A) + a]`, `usize::MAX` when parities differ.
    index: Vec<usize>,
}

impl<'a, A: Algebra + ?Sized> Envelope<'a, A> {
    pub fn new(base: &'a A, n: u32) -> Result<Self> {
        if n > 16 {
            return Err(Error::InvalidArgument(alloc::format!(
                "Grassmann truncation {n} is too large"
            )));
        }
        let d = base.dim();
        let mut basis = Vec::new();
        let mut index = alloc::vec![usize::MAX; (1usize << n) * d];
        for g in ordered_masks(n, true) {
            let pg = Parity::from_bit(g.count_ones() as u8);
            for a in 0..d {
                if base.parity(a) == pg {
                    index[g as usize * d + a] = basis.len();
                    basis.push((g, a));
                }
            }
        }
        Ok(Envelope { base, n, basis, index })
    }

    pub fn generators(&self) -> u32 {
        self.n
    }

    /// `(grassmann mask, base index)` of an envelope basis vector.
    pub fn leg(&self, i: usize) -> (u32, usize) {
        self.basis[i]
    }

    pub fn index_of_pair(&self, mask: u32, a: usize) -> Option<usize> {
        let i = *self.index.get(mask as usize * self.base.dim() + a)?;
        (i != usize::MAX).then_some(i)
    }

    /// Envelope identity check on one representative tuple family per
    /// parity pattern.
    ///
    /// The value at `(g_1⊗a_1, ..., g_d⊗a_d)` is `±(g_1...g_d) ⊗ f̃(a)`,
    /// zero when two legs share a generator. Relabeling generators is an
    /// automorphism of `G`, so for disjoint legs only the leg parities
    /// matter. It is therefore enough to give each odd slot one fresh
    /// generator and each even slot two fresh generators (or the unit when
    /// the budget is too small), and let the base elements range over the
    /// basis of matching parity. Patterns with more odd slots than
    /// generators vanish identically and are skipped.
    pub fn is_identity(&self, f: &MultilinearPoly) -> Verdict {
        let d = f.degree();
        for pattern in 0u32..(1 << d) {
            let odd: Vec<bool> = (0..d).map(|i| pattern >> i & 1 == 1).collect();
            let n_odd = odd.iter().filter(|&&o| o).count() as u32;
            if n_odd > self.n {
                continue;
            }
            let even_len = if n_odd + 2 * (d as u32 - n_odd) <= self.n { 2 } else { 0 };
            let mut next = 0u32;
            let mut domains = Vec::with_capacity(d);
            for &o in &odd {
                let len = if o { 1 } else { even_len };
                let mask = ((1u32 << len) - 1) << next;
                next += len;
                let p = if o { Parity::Odd } else { Parity::Even };
                domains.push(
                    (0..self.base.dim())
                        .filter(|&a| self.base.parity(a) == p)
                        .map(|a| self.index_of_pair(mask, a).expect("parities agree"))
                        .collect::<Vec<_>>(),
                );
            }
            if domains.iter().any(Vec::is_empty) {
                continue;
            }
            let v = check_on_domains(self, f, &domains, false);
            if !v.holds() {
                return v;
            }
        }
        Verdict::Holds
    }

    /// Materializes the structure constants (cubic in the dimension).
    pub fn to_superalgebra(&self, name: impl Into<String>) -> SuperAlgebra {
        let mut b = SuperAlgebra::builder(name).field(Field::QEps);
        for i in 0..self.dim() {
            b.add_basis(self.label(i), Parity::Even);
        }
        let mut uses_eps = false;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let e = self.basis_product(i, j);
                uses_eps |= e.coords().iter().any(|(_, c)| !c.is_rational());
                b.set_product(i, j, e);
            }
        }
        if !uses_eps {
            b = b.field(Field::Q);
        }
        b.build().expect("envelope labels are unique")
    }
}

impl<A: Algebra + ?Sized> Algebra for Envelope<'_, A> {
    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn parity(&self, _i: usize) -> Parity {
        Parity::Even
    }

    fn label(&self, i: usize) -> String {
        let (g, a) = self.basis[i];
        alloc::format!("{}|{}", grassmann_label(g), self.base.label(a))
    }

    fn for_each_product(&self, i: usize, j: usize, f: &mut dyn FnMut(usize, &QEps)) {
        let (g, a) = self.basis[i];
        let (h, b) = self.basis[j];
        let Some((neg, u)) = mask_product(g, h) else {
            return;
        };
        let d = self.base.dim();
        self.base.for_each_product(a, b, &mut |k, c| {
            let idx = self.index[u as usize * d + k];
            assert!(idx != usize::MAX, "base algebra product violates the grading");
            if neg {
                f(idx, &-c);
            } else {
                f(idx, c);
            }
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::is_identity;
    use crate::poly::{identity_library, Parity::*};
    use alloc::string::ToString;

    #[test]
    fn grassmann_basics() {
        let g = grassmann(3, true);
        assert_eq!(g.dim(), 8);
        assert!(g.validate().is_ok());
        let e1 = g.index_of("e1").unwrap();
        let e2 = g.index_of("e2").unwrap();
        assert_eq!(g.basis_product(e1, e2).display(&g).to_string(), "1/1*e1e2");
        assert_eq!(g.basis_product(e2, e1).display(&g).to_string(), "-1/1*e1e2");
        assert!(g.basis_product(e1, e1).is_zero());
        assert_eq!(g.labels()[..5], ["1", "e1", "e2", "e3", "e1e2"]);
        let g2 = grassmann(2, false);
        assert_eq!(g2.dim(), 3);
    }

    #[test]
    fn envelope_dimension_and_products() {
        let a = SuperAlgebra::builder("a")
            .basis("u", Odd)
            .basis("v", Odd)
            .basis("w", Even)
            .product_labels("u", "v", "1/1*w")
            .unwrap()
            .build()
            .unwrap();
        let env = Envelope::new(&a, 2).unwrap();
        // |G0| = 2 (1, e1e2), |G1| = 2
        assert_eq!(env.dim(), 2 * 1 + 2 * 2);
        let e1u = env.index_of_pair(0b01, 0).unwrap();
        let e2v = env.index_of_pair(0b10, 1).unwrap();
        let s = env
            .mul(&Element::basis(e1u), &Element::basis(e2v))
            .add(&env.mul(&Element::basis(e2v), &Element::basis(e1u)));
        // e1e2 ⊗ (uv - vu) = e1e2 ⊗ w
        assert_eq!(s.display(&env).to_string(), "1/1*e1e2|w");
        let unit_w = env.index_of_pair(0, 2).unwrap();
        assert!(env.mul(&Element::basis(unit_w), &Element::basis(e1u)).is_zero());
        let n0 = Envelope::new(&a, 0).unwrap();
        assert_eq!(n0.dim(), 1);
        assert_eq!(n0.label(0), "1|w");
    }

    #[test]
    fn reduced_check_agrees_with_exhaustive() {
                let a = SuperAlgebra::builder("a")
            .basis("u", Odd)
            .basis("w", Even)
            .product_labels("u", "u", "1/1*w")
            .unwrap()
            .build()
            .unwrap();
        let comm = crate::poly::bracket(crate::poly::BracketKind::Commutator, &[1, 2]).unwrap();
        let jord = crate::poly::bracket(crate::poly::BracketKind::Jordan, &[1, 2]).unwrap();
        let metab = identity_library("metabelian").unwrap().remove(0);
        let nil3 = identity_library("nil3").unwrap().remove(0);
        for n in 0..=4 {
            let env = Envelope::new(&a, n).unwrap();
            for f in [&comm, &jord, &metab, &nil3] {
                if f.degree() > 3 && n > 3 {
                    continue;
                }
                assert_eq!(
                    env.is_identity(f).holds(),
                    is_identity(&env, f).holds(),
                    "n = {n}, f = {f}"
                );
            }
        }
        let env = Envelope::new(&a, 4).unwrap();
        // u*u != 0 with u odd: the envelope is anticommutative, not commutative
        assert!(!env.is_identity(&comm).holds());
        assert!(env.is_identity(&jord).holds());
    }
}
