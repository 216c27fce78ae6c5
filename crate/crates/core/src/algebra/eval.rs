//! Evaluation of polynomials and exhaustive (super)identity checks.
//!
//! The exhaustive check never enumerates the full cartesian product of
//! basis tuples. For each monomial it builds the sparse tensor of nonzero
//! partial products bottom-up (shared subtrees are cached), so a tuple is
//! only ever extended while its partial product is nonzero.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec::Vec;

use super::{Algebra, Element, Homogeneity};
use crate::error::{Error, Result};
use crate::poly::{superize, MultilinearPoly, Parity, ParityAssignment, Poly, SuperPoly, Tree};

fn eval_tree<A: Algebra + ?Sized>(
    alg: &A,
    t: &Tree,
    assignment: &BTreeMap<u32, Element>,
) -> Result<Element> {
    match t {
        Tree::Leaf(i) => assignment.get(i).cloned().ok_or(Error::Unassigned(*i)),
        Tree::Node(a, b) => {
            let x = eval_tree(alg, a, assignment)?;
            if x.is_zero() {
                // still report unassigned variables on the right
                check_assigned(b, assignment)?;
                return Ok(x);
            }
            let y = eval_tree(alg, b, assignment)?;
            Ok(alg.mul(&x, &y))
        }
    }
}

fn check_assigned(t: &Tree, assignment: &BTreeMap<u32, Element>) -> Result<()> {
    for v in t.leaves() {
        if !assignment.contains_key(&v) {
            return Err(Error::Unassigned(v));
        }
    }
    Ok(())
}

/// Plain substitution into any polynomial (repeated variables allowed,
/// no parity checks and no signs).
pub fn eval_poly<A: Algebra + ?Sized>(
    p: &Poly,
    alg: &A,
    assignment: &BTreeMap<u32, Element>,
) -> Result<Element> {
    let mut acc = Element::zero();
    for (t, c) in p.iter() {
        acc = acc.add(&eval_tree(alg, t, assignment)?.scale(c));
    }
    Ok(acc)
}

/// Evaluates a superized polynomial at homogeneous elements whose
/// parities match the declared ones.
pub fn evaluate<A: Algebra + ?Sized>(
    s: &SuperPoly,
    alg: &A,
    assignment: &BTreeMap<u32, Element>,
) -> Result<Element> {
    for &v in s.base.vars() {
        let e = assignment.get(&v).ok_or(Error::Unassigned(v))?;
        let want = s.parities.get(v)?;
        match e.homogeneity(alg) {
            Homogeneity::Zero => {}
            Homogeneity::Mixed => return Err(Error::NonHomogeneous(v)),
            Homogeneity::Homogeneous(p) if p != want => {
                return Err(Error::ParityMismatch { var: v, expected: want.name() })
            }
            Homogeneity::Homogeneous(_) => {}
        }
    }
    eval_poly(s.base.poly(), alg, assignment)
}

/// Evaluates `f̃` with the parities read off the substituted elements
/// (zero counts as even); every element must be homogeneous.
pub fn evaluate_graded<A: Algebra + ?Sized>(
    f: &MultilinearPoly,
    alg: &A,
    assignment: &BTreeMap<u32, Element>,
) -> Result<Element> {
    let mut parities = ParityAssignment::new();
    for &v in f.vars() {
        let e = assignment.get(&v).ok_or(Error::Unassigned(v))?;
        let p = match e.homogeneity(alg) {
            Homogeneity::Zero => Parity::Even,
            Homogeneity::Homogeneous(p) => p,
            Homogeneity::Mixed => return Err(Error::NonHomogeneous(v)),
        };
        parities.set(v, p);
    }
    evaluate(&superize(f, &parities)?, alg, assignment)
}

/// A basis tuple on which a polynomial does not vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Parity of each variable, in ascending variable order.
    pub parities: Vec<(u32, Parity)>,
    /// Basis index substituted for each variable.
    pub tuple: Vec<(u32, usize)>,
    pub value: Element,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// Nonzero partial products of a subtree: basis indices of its leaves in
/// left-to-right order, and the value.
type Tensor = Vec<(Vec<u32>, Element)>;

struct TensorBuilder<'a, A: ?Sized> {
    alg: &'a A,
    domains: BTreeMap<u32, &'a [usize]>,
    cache: BTreeMap<Tree, Rc<Tensor>>,
    degree: usize,
}

impl<A: Algebra + ?Sized> TensorBuilder<'_, A> {
    fn tensor(&mut self, t: &Tree) -> Rc<Tensor> {
        if let Some(c) = self.cache.get(t) {
            return c.clone();
        }
        let out: Tensor = match t {
            Tree::Leaf(v) => self.domains[v]
                .iter()
                .map(|&b| (alloc::vec![b as u32], Element::basis(b)))
                .collect(),
            Tree::Node(a, b) => {
                let ta = self.tensor(a);
                let tb = self.tensor(b);
                let mut out = Vec::new();
                for (ka, va) in ta.iter() {
                    for (kb, vb) in tb.iter() {
                        let v = self.alg.mul(va, vb);
                        if !v.is_zero() {
                            let mut k = Vec::with_capacity(ka.len() + kb.len());
                            k.extend_from_slice(ka);
                            k.extend_from_slice(kb);
                            out.push((k, v));
                        }
                    }
                }
                out
            }
        };
        let out = Rc::new(out);
        if t.degree() < self.degree {
            self.cache.insert(t.clone(), out.clone());
        }
        out
    }
}

/// Exhaustive check of `f` with variable `vars[i]` ranging over
/// `domains[i]` (basis indices). With `superize`, each monomial is
/// multiplied by its Koszul sign for the parities of the substituted
/// basis elements. The witness is the lexicographically least failing
/// tuple in ascending variable order.
pub fn check_on_domains<A: Algebra + ?Sized>(
    alg: &A,
    f: &MultilinearPoly,
    domains: &[Vec<usize>],
    superize: bool,
) -> Verdict {
    let vars = f.vars();
    assert_eq!(vars.len(), domains.len(), "one domain per variable");
    let slot: BTreeMap<u32, usize> = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut tb = TensorBuilder {
        alg,
        domains: vars.iter().zip(domains).map(|(v, d)| (*v, d.as_slice())).collect(),
        cache: BTreeMap::new(),
        degree: vars.len(),
    };
    let mut acc: BTreeMap<Vec<u32>, Element> = BTreeMap::new();
    for (t, c) in f.iter() {
        let leaves = t.leaves();
        let tensor = tb.tensor(t);
        for (key, val) in tensor.iter() {
            let mut sign = 1i64;
            if superize {
                let mut inv = 0usize;
                for i in 0..leaves.len() {
                    if !alg.parity(key[i] as usize).is_odd() {
                        continue;
                    }
                    for j in i + 1..leaves.len() {
                        if leaves[j] < leaves[i] && alg.parity(key[j] as usize).is_odd() {
                            inv += 1;
                        }
                    }
                }
                if inv % 2 == 1 {
                    sign = -1;
                }
            }
            let mut full = alloc::vec![0u32; vars.len()];
            for (pos, v) in leaves.iter().enumerate() {
                full[slot[v]] = key[pos];
            }
            let coeff = if sign < 0 { -c } else { c.clone() };
            let term = val.scale(&coeff);
            match acc.get_mut(&full) {
                Some(e) => *e = e.add(&term),
                None => {
                    acc.insert(full, term);
                }
            }
        }
    }
    for (key, val) in acc {
        if !val.is_zero() {
            return Verdict::Fails(Witness {
                parities: vars
                    .iter()
                    .zip(&key)
                    .map(|(v, b)| (*v, alg.parity(*b as usize)))
                    .collect(),
                tuple: vars.iter().zip(&key).map(|(v, b)| (*v, *b as usize)).collect(),
                value: val,
            });
        }
    }
    Verdict::Holds
}

/// `true` iff `f̃ = 0` for every parity pattern and every basis tuple of
/// matching parities.
pub fn is_superidentity<A: Algebra + ?Sized>(alg: &A, f: &MultilinearPoly) -> Verdict {
    let all: Vec<usize> = (0..alg.dim()).collect();
    let domains = alloc::vec![all; f.degree()];
    check_on_domains(alg, f, &domains, true)
}

/// `true` iff `f = 0` on all basis tuples (no signs).
pub fn is_identity<A: Algebra + ?Sized>(alg: &A, f: &MultilinearPoly) -> Verdict {
    let all: Vec<usize> = (0..alg.dim()).collect();
    let domains = alloc::vec![all; f.degree()];
    check_on_domains(alg, f, &domains, false)
}
