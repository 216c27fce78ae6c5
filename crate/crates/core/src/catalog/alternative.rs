//! Metabelian alternative superalgebras over `Q(eps)` and the basis words
//! of the nil-alternative multilinear components.

use alloc::vec::Vec;

use super::{gens, one, CatalogEntry, Table, Variety};
use crate::algebra::extension::CompletionRule;
use crate::algebra::Field;
use crate::poly::{LibraryIdentity, MultilinearPoly, OperatorWord, Parity::*, Poly, Side, Tree};
use crate::scalars::QEps;

/// `x` (odd), `a0` (even), `a1` (odd) with `a_i·x = a_{1-i}`,
/// `x·a_i = (i+eps) a_{1-i}`.
fn alt_a_table(name: &str) -> Table {
    let mut t = Table::new(name, Field::QEps);
    t.add("x", Odd);
    t.add("a0", Even);
    t.add("a1", Odd);
    t.set("a0", "x", &[(one(), "a1")]);
    t.set("a1", "x", &[(one(), "a0")]);
    t.set("x", "a0", &[(QEps::eps(), "a1")]);
    t.set("x", "a1", &[(QEps::one() + QEps::eps(), "a0")]);
    t
}

/// The 3-dimensional superalgebra generated by the single odd element
/// `a1 + x`; it satisfies `φ = 0` on top of the alternative identities.
pub fn alt_a() -> CatalogEntry {
    let alg = alt_a_table("alt_A").finish(CompletionRule::None);
    CatalogEntry {
        name: "alt_A".into(),
        generators: gens(&alg, &["a1+x"]),
        algebra: alg,
        variety: Variety::Alternative,
        extra: alloc::vec![LibraryIdentity::Nil3],
        description: "alternative superalgebra on one odd generator satisfying phi = 0",
    }
}

/// `alt_A` extended by even `e` and odd `ex`, `xe`, `exe`.
///
/// The odd generator of the `alt_A` part is `a1 + x` (the element `x`
/// alone generates only a 5-dimensional subalgebra together with `e`).
pub fn alt_b() -> CatalogEntry {
    let mut t = alt_a_table("alt_B");
    t.add("e", Even);
    t.add("ex", Odd);
    t.add("xe", Odd);
    t.add("exe", Odd);
    t.set("e", "x", &[(one(), "ex")]);
    t.set("x", "e", &[(one(), "xe")]);
    t.set("ex", "e", &[(one(), "exe")]);
    t.set("e", "xe", &[(one(), "exe")]);
    let alg = t.finish(CompletionRule::None);
    CatalogEntry {
        name: "alt_B".into(),
        generators: gens(&alg, &["e", "a1+x"]),
        algebra: alg,
        variety: Variety::Alternative,
        extra: Vec::new(),
        description: "alternative superalgebra where phi(e,x,e) = 2exe",
    }
}

/// `alt_A` extended by odd `y`, `z`, `yxz` and even `yx`, `xz`.
///
/// Generated by `a1 + x`, `y`, `z`; the elements `x`, `y`, `z` alone span
/// only a 6-dimensional subalgebra.
pub fn alt_bp() -> CatalogEntry {
    let mut t = alt_a_table("alt_Bp");
    t.add("y", Odd);
    t.add("z", Odd);
    t.add("yx", Even);
    t.add("xz", Even);
    t.add("yxz", Odd);
    t.set("y", "x", &[(one(), "yx")]);
    t.set("x", "z", &[(one(), "xz")]);
    t.set("yx", "z", &[(one(), "yxz")]);
    t.set("y", "xz", &[(one(), "yxz")]);
    let alg = t.finish(CompletionRule::None);
    CatalogEntry {
        name: "alt_Bp".into(),
        generators: gens(&alg, &["a1+x", "y", "z"]),
        algebra: alg,
        variety: Variety::Alternative,
        extra: Vec::new(),
        description: "alternative superalgebra where phi(y,x,z) = yxz",
    }
}

fn operator_word(seed: Tree, t: Side, tail: usize) -> Tree {
    let mut letters = alloc::vec![(t, None)];
    letters.extend(core::iter::repeat((Side::R, None)).take(tail));
    OperatorWord::new(seed, letters).expand().expect("implicit letters never collide")
}

/// Basis words of degree `n ≥ 3`, in order: `(x1x2)T R^{n-3}` for
/// `T = R, L`, then `(x1∘xi)T R^{n-3}` for `i = 2..n` and `T = R, L`.
/// Omitted operator indices are the unused ones in ascending order.
pub fn nilalt_basis_words(n: usize) -> Vec<MultilinearPoly> {
    assert!(n >= 3, "basis words start in degree 3");
    let mut out = Vec::new();
    let sides = [Side::R, Side::L];
    for t in sides {
        let m = operator_word(Tree::mul(Tree::x(1), Tree::x(2)), t, n - 3);
        out.push(Poly::monomial(m).into_multilinear().expect("multilinear word"));
    }
    for i in 2..=n as u32 {
        for t in sides {
            let a = operator_word(Tree::mul(Tree::x(1), Tree::x(i)), t, n - 3);
            let b = operator_word(Tree::mul(Tree::x(i), Tree::x(1)), t, n - 3);
            let p = Poly::monomial(a).add(&Poly::monomial(b));
            out.push(p.into_multilinear().expect("multilinear word"));
        }
    }
    out
}
