//! Nonassociative polynomials: binary-tree monomials with `Q(eps)`
//! coefficients, multilinear polynomials, parities and superization.

mod library;
mod ops;
mod text;

pub use text::parse_tree;

pub use library::{identity_library, LibraryIdentity};
pub(crate) use library::{phi3, signed_left_normed_sum};
pub use ops::{
    bracket, linearize_full, linearize_partial, linearize_var, multilinearize, BracketKind,
    OperatorWord, Side,
};

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::inversion_sign;
use crate::scalars::QEps;

/// A nonassociative monomial: a full binary tree with variable leaves.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf(u32),
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn x(i: u32) -> Tree {
        Tree::Leaf(i)
    }

    pub fn mul(a: Tree, b: Tree) -> Tree {
        Tree::Node(Box::new(a), Box::new(b))
    }

    /// `self * x_i`, i.e. the operator `R_{x_i}`.
    pub fn r(self, i: u32) -> Tree {
        Tree::mul(self, Tree::x(i))
    }

    /// `x_i * self`, i.e. the operator `L_{x_i}`.
    pub fn l(self, i: u32) -> Tree {
        Tree::mul(Tree::x(i), self)
    }

    /// `((x_a x_b) x_c) ...`; panics on an empty slice.
    pub fn left_normed(vars: &[u32]) -> Tree {
        let mut t = Tree::x(vars[0]);
        for &v in &vars[1..] {
            t = t.r(v);
        }
        t
    }

    pub fn leaves(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.push_leaves(&mut out);
        out
    }

    fn push_leaves(&self, out: &mut Vec<u32>) {
        match self {
            Tree::Leaf(i) => out.push(*i),
            Tree::Node(a, b) => {
                a.push_leaves(out);
                b.push_leaves(out);
            }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn is_multilinear(&self) -> bool {
        let l = self.leaves();
        let s: BTreeSet<_> = l.iter().collect();
        s.len() == l.len()
    }

    pub fn rename(&self, f: &impl Fn(u32) -> u32) -> Tree {
        match self {
            Tree::Leaf(i) => Tree::Leaf(f(*i)),
            Tree::Node(a, b) => Tree::mul(a.rename(f), b.rename(f)),
        }
    }

    /// Replaces the `k`-th leaf (left to right) by `x_to`.
    pub(crate) fn replace_nth_leaf(&self, k: &mut usize, to: u32) -> Tree {
        match self {
            Tree::Leaf(i) => {
                let out = if *k == 0 { Tree::Leaf(to) } else { Tree::Leaf(*i) };
                *k = k.wrapping_sub(1);
                out
            }
            Tree::Node(a, b) => {
                let a = a.replace_nth_leaf(k, to);
                let b = b.replace_nth_leaf(k, to);
                Tree::mul(a, b)
            }
        }
    }

    /// Orders the two children of every node; the canonical form of the
    /// monomial modulo commutativity.
    pub fn commutative_normal(&self) -> Tree {
        match self {
            Tree::Leaf(_) => self.clone(),
            Tree::Node(a, b) => {
                let (a, b) = (a.commutative_normal(), b.commutative_normal());
                if b < a {
                    Tree::mul(b, a)
                } else {
                    Tree::mul(a, b)
                }
            }
        }
    }
}

/// Products sort before variables; within each kind, lexicographic.
impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Tree::Leaf(a), Tree::Leaf(b)) => a.cmp(b),
            (Tree::Node(..), Tree::Leaf(_)) => Ordering::Less,
            (Tree::Leaf(_), Tree::Node(..)) => Ordering::Greater,
            (Tree::Node(a1, b1), Tree::Node(a2, b2)) => a1.cmp(a2).then_with(|| b1.cmp(b2)),
        }
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(i) => write!(f, "x{i}"),
            Tree::Node(a, b) => write!(f, "({a} {b})"),
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A general nonassociative polynomial (leaves may repeat).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Tree, QEps>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn monomial(t: Tree) -> Self {
        Self::term(QEps::one(), t)
    }

    pub fn term(c: QEps, t: Tree) -> Self {
        let mut p = Poly::zero();
        p.add_term(c, t);
        p
    }

    pub fn x(i: u32) -> Self {
        Self::monomial(Tree::x(i))
    }

    pub fn add_term(&mut self, c: QEps, t: Tree) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Tree, QEps> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Tree, &QEps)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: &Tree) -> QEps {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(c.clone(), t.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-QEps::one()))
    }

    pub fn scale(&self, c: &QEps) -> Poly {
        let mut out = Poly::zero();
        if c.is_zero() {
            return out;
        }
        for (t, d) in &self.terms {
            out.add_term(c * d, t.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-QEps::one())
    }

    /// Bilinear product of polynomials (tree concatenation).
    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.add_term(c * d, Tree::mul(a.clone(), b.clone()));
            }
        }
        out
    }

    /// Applies the right multiplication operator `R_{x_i}`.
    pub fn r(&self, i: u32) -> Poly {
        self.mul(&Poly::x(i))
    }

    /// Applies the left multiplication operator `L_{x_i}`.
    pub fn l(&self, i: u32) -> Poly {
        Poly::x(i).mul(self)
    }

    pub fn rename(&self, f: &impl Fn(u32) -> u32) -> Poly {
        let mut out = Poly::zero();
        for (t, c) in &self.terms {
            out.add_term(c.clone(), t.rename(f));
        }
        out
    }

    /// All variable indices occurring in some monomial.
    pub fn variables(&self) -> BTreeSet<u32> {
        self.terms.keys().flat_map(|t| t.leaves()).collect()
    }

    /// Collects monomials equal modulo commutativity of the product.
    pub fn commutative_collect(&self) -> Poly {
        let mut out = Poly::zero();
        for (t, c) in &self.terms {
            out.add_term(c.clone(), t.commutative_normal());
        }
        out
    }

    pub fn into_multilinear(self) -> Result<MultilinearPoly> {
        MultilinearPoly::try_from(self)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A polynomial whose monomials are multilinear on one common variable set.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultilinearPoly {
    vars: Vec<u32>,
    poly: Poly,
}

impl TryFrom<Poly> for MultilinearPoly {
    type Error = Error;

    fn try_from(poly: Poly) -> Result<Self> {
        let mut vars: Option<Vec<u32>> = None;
        for t in poly.terms.keys() {
            let mut l = t.leaves();
            l.sort_unstable();
            if let Some(w) = l.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Multilinearity(w[0]));
            }
            match &vars {
                None => vars = Some(l),
                Some(v) if *v != l => return Err(Error::VarsetMismatch),
                Some(_) => {}
            }
        }
        Ok(MultilinearPoly { vars: vars.unwrap_or_default(), poly })
    }
}

impl MultilinearPoly {
    /// Zero polynomial on a declared variable set.
    pub fn zero_on(mut vars: Vec<u32>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        MultilinearPoly { vars, poly: Poly::zero() }
    }

    /// Sorted variable indices.
    pub fn vars(&self) -> &[u32] {
        &self.vars
    }

    pub fn degree(&self) -> usize {
        self.vars.len()
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn terms(&self) -> &BTreeMap<Tree, QEps> {
        &self.poly.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Tree, &QEps)> {
        self.poly.iter()
    }

    pub fn len(&self) -> usize {
        self.poly.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poly.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn combine(&self, other: &MultilinearPoly, p: Poly) -> Result<MultilinearPoly> {
        if !self.is_zero() && !other.is_zero() && self.vars != other.vars {
            return Err(Error::VarsetMismatch);
        }
        let vars = if self.is_zero() { other.vars.clone() } else { self.vars.clone() };
        Ok(MultilinearPoly { vars, poly: p })
    }

    pub fn add(&self, other: &MultilinearPoly) -> Result<MultilinearPoly> {
        self.combine(other, self.poly.add(&other.poly))
    }

    pub fn sub(&self, other: &MultilinearPoly) -> Result<MultilinearPoly> {
        self.combine(other, self.poly.sub(&other.poly))
    }

    pub fn scale(&self, c: &QEps) -> MultilinearPoly {
        MultilinearPoly { vars: self.vars.clone(), poly: self.poly.scale(c) }
    }

    /// Renames variables by an injective map.
    pub fn rename(&self, f: &impl Fn(u32) -> u32) -> Result<MultilinearPoly> {
        let mut out = MultilinearPoly::try_from(self.poly.rename(f))?;
        if out.is_zero() {
            out.vars = self.vars.iter().map(|&v| f(v)).collect();
            out.vars.sort_unstable();
        }
        Ok(out)
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

impl fmt::Debug for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

/// The `Z_2` degree of a homogeneous element or variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u8) -> Parity {
        if b % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Parity of a product.
    pub fn add(self, other: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ other.bit())
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parities of variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ParityAssignment(BTreeMap<u32, Parity>);

impl ParityAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn uniform(vars: &[u32], p: Parity) -> Self {
        ParityAssignment(vars.iter().map(|&v| (v, p)).collect())
    }

    pub fn all_even(vars: &[u32]) -> Self {
        Self::uniform(vars, Parity::Even)
    }

    pub fn all_odd(vars: &[u32]) -> Self {
        Self::uniform(vars, Parity::Odd)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, Parity)>) -> Self {
        ParityAssignment(pairs.into_iter().collect())
    }

    pub fn set(&mut self, var: u32, p: Parity) {
        self.0.insert(var, p);
    }

    pub fn get(&self, var: u32) -> Result<Parity> {
        self.0.get(&var).copied().ok_or(Error::MissingParity(var))
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, Parity)> + '_ {
        self.0.iter().map(|(v, p)| (*v, *p))
    }
}

/// `(-1)^t`, `t` the number of pairs of odd leaves standing out of
/// ascending index order in the left-to-right leaf sequence of `m`.
pub fn koszul_sign(m: &Tree, p: &ParityAssignment) -> Result<i64> {
    let mut odd = Vec::new();
    for v in m.leaves() {
        if p.get(v)?.is_odd() {
            odd.push(v);
        }
    }
    Ok(inversion_sign(&odd))
}

/// A multilinear polynomial with Koszul signs folded into its
/// coefficients, together with the parities that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperPoly {
    pub base: MultilinearPoly,
    pub parities: ParityAssignment,
}

/// Multiplies every coefficient of `f` by the Koszul sign of its monomial.
pub fn superize(f: &MultilinearPoly, p: &ParityAssignment) -> Result<SuperPoly> {
    for &v in f.vars() {
        p.get(v)?;
    }
    let mut out = Poly::zero();
    for (t, c) in f.iter() {
        let s = koszul_sign(t, p)?;
        out.add_term(if s < 0 { -c } else { c.clone() }, t.clone());
    }
    let mut base = MultilinearPoly::try_from(out)?;
    if base.is_zero() {
        base.vars = f.vars.clone();
    }
    Ok(SuperPoly { base, parities: p.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Parity::{Even, Odd};
    use alloc::string::ToString;

    fn t(s: &str) -> Tree {
        let p: Poly = s.parse().unwrap();
        p.terms().keys().next().unwrap().clone()
    }

    #[test]
    fn koszul_examples() {
        let odd = ParityAssignment::all_odd(&[1, 2, 3]);
        assert_eq!(koszul_sign(&t("((x1 x2) x3)"), &odd).unwrap(), 1);
        assert_eq!(koszul_sign(&t("((x2 x1) x3)"), &odd).unwrap(), -1);
        let p = ParityAssignment::from_pairs([(1, Even), (2, Odd), (3, Odd)]);
        assert_eq!(koszul_sign(&t("(x3 (x1 x2))"), &p).unwrap(), -1);
        assert_eq!(
            koszul_sign(&t("(x1 x2)"), &ParityAssignment::all_odd(&[1])),
            Err(Error::MissingParity(2))
        );
    }

    #[test]
    fn superize_commutator_and_jordan() {
        let odd = ParityAssignment::all_odd(&[1, 2]);
        let c = bracket(BracketKind::Commutator, &[1, 2]).unwrap();
        assert_eq!(superize(&c, &odd).unwrap().base.to_string(), "1/1*(x1 x2) + 1/1*(x2 x1)");
        let j = bracket(BracketKind::Jordan, &[1, 2]).unwrap();
        assert_eq!(superize(&j, &odd).unwrap().base.to_string(), "1/1*(x1 x2) - 1/1*(x2 x1)");
        let even = ParityAssignment::all_even(&[1, 2]);
        assert_eq!(superize(&c, &even).unwrap().base, c);
    }

    #[test]
    fn multilinearity_is_enforced() {
        let p: Poly = "1/1*(x1 x1)".parse().unwrap();
        assert_eq!(p.into_multilinear(), Err(Error::Multilinearity(1)));
        let q: Poly = "1/1*(x1 x2) + 1/1*(x1 x3)".parse().unwrap();
        assert_eq!(q.into_multilinear(), Err(Error::VarsetMismatch));
    }

    #[test]
    fn products_sort_before_variables() {
        let p: MultilinearPoly = "1/1*(x1 (x2 x3)) - 1/1*((x1 x2) x3)".parse().unwrap();
        assert_eq!(p.to_string(), "-1/1*((x1 x2) x3) + 1/1*(x1 (x2 x3))");
    }
}
