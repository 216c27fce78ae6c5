//! Randomized transfer-property runs: a multilinear `f` vanishes on the
//! Grassmann envelope of `A` exactly when `f̃` is a superidentity of `A`.
//!
//! The envelope side is checked by evaluating `f` itself on envelope
//! elements: a failing tuple is re-evaluated as a witness, and a claimed
//! identity is probed on random envelope elements whose Grassmann legs
//! may overlap.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use superlab_core::algebra::{eval_poly, is_superidentity, Algebra, Element, Envelope, Field, SuperAlgebra};
use superlab_core::poly::{MultilinearPoly, Parity, Poly, Tree};
use superlab_core::poly::LibraryIdentity;
use superlab_core::QEps;

/// One random pair and its two verdicts.
#[derive(Clone, Debug)]
pub struct TransferCase {
    pub poly: MultilinearPoly,
    pub algebra: SuperAlgebra,
    pub superidentity: bool,
    pub envelope_identity: bool,
    /// The direct envelope evaluation agreed with the envelope verdict.
    pub oracle_ok: bool,
}

impl TransferCase {
    pub fn agrees(&self) -> bool {
        self.superidentity == self.envelope_identity && self.oracle_ok
    }
}

#[derive(Clone, Debug, Default)]
pub struct TransferSummary {
    pub pairs: usize,
    pub holding: usize,
    pub failures: Vec<String>,
}

fn coeff(rng: &mut ChaCha8Rng) -> QEps {
    let a = rng.gen_range(-2i64..=2);
    if rng.gen_bool(0.2) {
        QEps::new(a.into(), rng.gen_range(-1i64..=1).into())
    } else {
        QEps::from_int(if a == 0 { 1 } else { a })
    }
}

/// A random graded algebra of dimension `dim`. Products are sparse;
/// about half the algebras are nilpotent (`b_i b_j` only involves basis
/// vectors of larger index) and some are completed to supercommutative
/// or superanticommutative tables, so that identities hold often enough
/// for both verdicts to occur.
pub fn random_algebra(rng: &mut ChaCha8Rng, dim: usize) -> SuperAlgebra {
    let parities: Vec<Parity> =
        (0..dim).map(|_| if rng.gen_bool(0.5) { Parity::Odd } else { Parity::Even }).collect();
    let nilpotent = rng.gen_bool(0.5);
    let symmetry = rng.gen_range(0..3); // none, supercommutative, superanticommutative
    let density = rng.gen_range(0.2..0.6);
    let mut b = SuperAlgebra::builder("random").field(Field::QEps);
    for (i, p) in parities.iter().enumerate() {
        b.add_basis(format!("b{}", i + 1), *p);
    }
    for i in 0..dim {
        for j in 0..dim {
            if symmetry != 0 && j < i {
                continue;
            }
            let target = parities[i].add(parities[j]);
            let lo = if nilpotent { i.max(j) + 1 } else { 0 };
            let mut pairs = Vec::new();
            for k in lo..dim {
                if parities[k] == target && rng.gen_bool(density) {
                    pairs.push((k, coeff(rng)));
                }
            }
            let v = Element::from_pairs(pairs);
            if symmetry != 0 {
                // b_j b_i = s · b_i b_j; a diagonal product with s = -1 vanishes
                let mut s = if parities[i].is_odd() && parities[j].is_odd() { -1 } else { 1 };
                if symmetry == 2 {
                    s = -s;
                }
                if i == j && s == -1 {
                    continue;
                }
                b.set_product(j, i, v.scale(&QEps::from_int(s)));
            }
            b.set_product(i, j, v);
        }
    }
    b.build().expect("generated labels are distinct")
}

fn random_tree(rng: &mut ChaCha8Rng, leaves: &[u32]) -> Tree {
    if leaves.len() == 1 {
        return Tree::x(leaves[0]);
    }
    let s = rng.gen_range(1..leaves.len());
    Tree::mul(random_tree(rng, &leaves[..s]), random_tree(rng, &leaves[s..]))
}

/// A random multilinear polynomial of degree `deg`: either a defining
/// identity from the library or a short random combination of monomials.
pub fn random_poly(rng: &mut ChaCha8Rng, deg: usize) -> MultilinearPoly {
    if rng.gen_bool(0.5) {
        let lib = [
            LibraryIdentity::Alternative,
            LibraryIdentity::Jordan,
            LibraryIdentity::Malcev,
            LibraryIdentity::Metabelian,
            LibraryIdentity::Nil3,
            LibraryIdentity::EpsSymm(1),
            LibraryIdentity::EpsSymm(-1),
            LibraryIdentity::EpsNil2(1),
        ];
        let fits: Vec<MultilinearPoly> =
            lib.iter().flat_map(|l| l.identities()).filter(|f| f.degree() == deg).collect();
        if let Some(f) = fits.choose(rng) {
            return f.clone();
        }
    }
    let vars: Vec<u32> = (1..=deg as u32).collect();
    loop {
        let mut p = Poly::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let mut order = vars.clone();
            order.shuffle(rng);
            let c = QEps::from_int(if rng.gen_bool(0.5) { 1 } else { -1 });
            p.add_term(c, random_tree(rng, &order));
        }
        if !p.is_zero() {
            return p.into_multilinear().expect("every monomial uses each variable once");
        }
    }
}

fn random_envelope_element<A: Algebra + ?Sized>(rng: &mut ChaCha8Rng, env: &A) -> Element {
    let n = rng.gen_range(1..=2);
    Element::from_pairs((0..n).map(|_| (rng.gen_range(0..env.dim()), coeff(rng))))
}

/// Checks one pair; the Grassmann truncation is `2·deg f`.
pub fn run_case(poly: MultilinearPoly, algebra: SuperAlgebra, rng: &mut ChaCha8Rng) -> TransferCase {
    let superidentity = is_superidentity(&algebra, &poly).holds();
    let env = Envelope::new(&algebra, 2 * poly.degree() as u32).expect("truncation at most 8");
    let verdict = env.is_identity(&poly);
    let oracle_ok = match verdict.witness() {
        Some(w) => {
            let a: BTreeMap<u32, Element> = w.tuple.iter().map(|(v, b)| (*v, Element::basis(*b))).collect();
            let value = eval_poly(poly.poly(), &env, &a).expect("all variables assigned");
            value == w.value && !value.is_zero()
        }
        None => (0..16).all(|_| {
            let a: BTreeMap<u32, Element> =
                poly.vars().iter().map(|v| (*v, random_envelope_element(rng, &env))).collect();
            eval_poly(poly.poly(), &env, &a).expect("all variables assigned").is_zero()
        }),
    };
    TransferCase { poly, algebra, superidentity, envelope_identity: verdict.holds(), oracle_ok }
}

/// `pairs` random pairs with `2 ≤ deg f ≤ max_degree` and
/// `1 ≤ dim A ≤ max_dim`.
pub fn run(seed: u64, pairs: usize, max_degree: usize, max_dim: usize) -> TransferSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = TransferSummary { pairs, ..Default::default() };
    for k in 0..pairs {
        let deg = rng.gen_range(2..=max_degree.max(2));
        let dim = rng.gen_range(1..=max_dim.max(1));
        let algebra = random_algebra(&mut rng, dim);
        let poly = random_poly(&mut rng, deg);
        let case = run_case(poly, algebra, &mut rng);
        if case.superidentity {
            out.holding += 1;
        }
        if !case.agrees() {
            out.failures.push(format!(
                "pair {k}: f = {}, superidentity {}, envelope identity {}, direct evaluation {}",
                case.poly,
                case.superidentity,
                case.envelope_identity,
                if case.oracle_ok { "consistent" } else { "inconsistent" }
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_algebras_are_graded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let d = rng.gen_range(1..=4);
            let a = random_algebra(&mut rng, d);
            assert!(a.validate().is_ok());
        }
    }

    #[test]
    fn both_verdicts_occur_and_agree() {
        let s = run(11, 40, 4, 4);
        assert!(s.failures.is_empty(), "{:?}", s.failures);
        assert!(s.holding > 0 && s.holding < s.pairs, "{} of {}", s.holding, s.pairs);
    }

    #[test]
    fn commutator_on_grassmann() {
        // G is supercommutative: [x1, x2] superizes to an identity, but
        // the envelope of G (commutative) also satisfies it.
        let g = superlab_core::algebra::grassmann(2, true);
        let f: MultilinearPoly = "1/1*(x1 x2) - 1/1*(x2 x1)".parse().unwrap();
        let c = run_case(f, g, &mut ChaCha8Rng::seed_from_u64(0));
        assert!(c.superidentity && c.envelope_identity && c.oracle_ok);
    }
}
