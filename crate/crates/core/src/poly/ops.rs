use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::{MultilinearPoly, Poly, Tree};
use crate::error::{Error, Result};
use crate::perm::permutations;
use crate::scalars::QEps;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BracketKind {
    /// `[x,y] = xy - yx`
    Commutator,
    /// `x∘y = xy + yx`
    Jordan,
    /// `(x,y,z) = xy·z - x·yz`
    Associator,
    /// `J(x,y,z) = xy·z + yz·x + zx·y`
    Jacobian,
    /// `<x,y>_eps = xy - eps·yx` for `eps = ±1`
    EpsBracket(i8),
}

impl BracketKind {
    pub fn arity(self) -> usize {
        match self {
            BracketKind::Associator | BracketKind::Jacobian => 3,
            _ => 2,
        }
    }
}

fn distinct(vars: &[u32]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &v in vars {
        if !seen.insert(v) {
            return Err(Error::Multilinearity(v));
        }
    }
    Ok(())
}

/// The named bracket on distinct variables.
pub fn bracket(kind: BracketKind, vars: &[u32]) -> Result<MultilinearPoly> {
    if vars.len() != kind.arity() {
        return Err(Error::Arity { what: "bracket", expected: kind.arity(), got: vars.len() });
    }
    distinct(vars)?;
    let x = |i: usize| Tree::x(vars[i]);
    let one = QEps::one();
    let mone = -QEps::one();
    let mut p = Poly::zero();
    match kind {
        BracketKind::Commutator => {
            p.add_term(one, Tree::mul(x(0), x(1)));
            p.add_term(mone, Tree::mul(x(1), x(0)));
        }
        BracketKind::Jordan => {
            p.add_term(one.clone(), Tree::mul(x(0), x(1)));
            p.add_term(one, Tree::mul(x(1), x(0)));
        }
        BracketKind::EpsBracket(e) => {
            if e != 1 && e != -1 {
                return Err(Error::InvalidArgument(format!("eps must be +1 or -1, got {e}")));
            }
            p.add_term(one, Tree::mul(x(0), x(1)));
            p.add_term(QEps::from_int(-(e as i64)), Tree::mul(x(1), x(0)));
        }
        BracketKind::Associator => {
            p.add_term(one, Tree::mul(Tree::mul(x(0), x(1)), x(2)));
            p.add_term(mone, Tree::mul(x(0), Tree::mul(x(1), x(2))));
        }
        BracketKind::Jacobian => {
            p.add_term(one.clone(), Tree::mul(Tree::mul(x(0), x(1)), x(2)));
            p.add_term(one.clone(), Tree::mul(Tree::mul(x(1), x(2)), x(0)));
            p.add_term(one, Tree::mul(Tree::mul(x(2), x(0)), x(1)));
        }
    }
    p.into_multilinear()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Right multiplication: `w R_x = w·x`.
    R,
    /// Left multiplication: `w L_x = x·w`.
    L,
}

/// A seed monomial followed by multiplication operators, applied left to
/// right. Letters without an index take the smallest indices not used by
/// the seed or by explicit letters, in ascending order of position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorWord {
    pub seed: Tree,
    pub letters: Vec<(Side, Option<u32>)>,
}

impl OperatorWord {
    pub fn new(seed: Tree, letters: Vec<(Side, Option<u32>)>) -> Self {
        OperatorWord { seed, letters }
    }

    pub fn expand(&self) -> Result<Tree> {
        let mut used: BTreeSet<u32> = BTreeSet::new();
        for v in self.seed.leaves() {
            if !used.insert(v) {
                return Err(Error::Multilinearity(v));
            }
        }
        for (_, i) in &self.letters {
            if let Some(i) = i {
                if !used.insert(*i) {
                    return Err(Error::IndexCollision(*i));
                }
            }
        }
        let mut next = 1u32;
        let mut t = self.seed.clone();
        for (side, i) in &self.letters {
            let v = match i {
                Some(i) => *i,
                None => {
                    while used.contains(&next) {
                        next += 1;
                    }
                    used.insert(next);
                    next
                }
            };
            t = match side {
                Side::R => t.r(v),
                Side::L => t.l(v),
            };
        }
        Ok(t)
    }
}

fn occurrences(t: &Tree, v: u32) -> usize {
    t.leaves().iter().filter(|&&x| x == v).count()
}

/// Replaces the occurrences of `var` in each monomial, in leaf order, by
/// every arrangement of `fresh` (so `k!` terms per monomial when `var`
/// occurs `k = fresh.len()` times). Other variables are left alone.
pub fn linearize_var(p: &Poly, var: u32, fresh: &[u32]) -> Result<Poly> {
    let vars = p.variables();
    for f in fresh {
        if vars.contains(f) && *f != var {
            return Err(Error::IndexCollision(*f));
        }
    }
    distinct(fresh)?;
    let mut out = Poly::zero();
    for (t, c) in p.iter() {
        let k = occurrences(t, var);
        if k != fresh.len() {
            return Err(Error::Linearization(format!(
                "x{var} occurs {k} times in a monomial but {} fresh variables were supplied",
                fresh.len()
            )));
        }
        for perm in permutations(k) {
            let mut tree = t.clone();
            // positions of `var` among the leaves of the current tree
            let positions: Vec<usize> = t
                .leaves()
                .iter()
                .enumerate()
                .filter(|(_, &x)| x == var)
                .map(|(i, _)| i)
                .collect();
            for (slot, &pos) in positions.iter().enumerate() {
                let mut k = pos;
                tree = tree.replace_nth_leaf(&mut k, fresh[perm[slot]]);
            }
            out.add_term(c.clone(), tree);
        }
    }
    Ok(out)
}

/// Full linearization of a polynomial in which exactly one variable is
/// repeated: its `k` occurrences are distributed over the `k` fresh
/// variables in all `k!` ways, without normalizing scalars.
pub fn linearize_full(p: &Poly, fresh: &[u32]) -> Result<MultilinearPoly> {
    let repeated: BTreeSet<u32> = p
        .iter()
        .flat_map(|(t, _)| {
            let l = t.leaves();
            l.iter().copied().filter(|&v| occurrences(t, v) > 1).collect::<Vec<_>>()
        })
        .collect();
    match repeated.len() {
        0 => Err(Error::Linearization("no repeated variable".into())),
        1 => linearize_var(p, *repeated.iter().next().unwrap(), fresh)?.into_multilinear(),
        _ => Err(Error::Linearization(format!(
            "more than one repeated variable: {:?}",
            repeated.iter().collect::<Vec<_>>()
        ))),
    }
}

/// Sum over replacing exactly one occurrence of `var` by `fresh`.
pub fn linearize_partial(p: &Poly, var: u32, fresh: u32) -> Result<Poly> {
    if !p.variables().contains(&var) {
        return Err(Error::Linearization(format!("x{var} does not occur")));
    }
    if p.variables().contains(&fresh) {
        return Err(Error::IndexCollision(fresh));
    }
    if p.iter().all(|(t, _)| occurrences(t, var) < 2) {
        return Err(Error::Linearization(format!("x{var} is not repeated")));
    }
    let mut out = Poly::zero();
    for (t, c) in p.iter() {
        for (pos, _) in t.leaves().iter().enumerate().filter(|(_, &x)| x == var) {
            let mut k = pos;
            out.add_term(c.clone(), t.replace_nth_leaf(&mut k, fresh));
        }
    }
    Ok(out)
}

/// Fully linearizes every repeated variable (in ascending index order)
/// and renames the result onto `x1..xd`, preserving the relative order
/// in which the variables were introduced.
pub fn multilinearize(p: &Poly) -> Result<MultilinearPoly> {
    let vars = p.variables();
    let mut next = vars.iter().max().copied().unwrap_or(0) + 1;
    let mut cur = p.clone();
    // map from final variable to its ordering key (original var, copy number)
    let mut order: Vec<(u32, (u32, u32))> = Vec::new();
    for &v in &vars {
        let k = p.iter().map(|(t, _)| occurrences(t, v)).max().unwrap_or(0);
        if k > 1 {
            let fresh: Vec<u32> = (next..next + k as u32).collect();
            next += k as u32;
            cur = linearize_var(&cur, v, &fresh)?;
            for (j, f) in fresh.iter().enumerate() {
                order.push((*f, (v, j as u32)));
            }
        } else {
            order.push((v, (v, 0)));
        }
    }
    order.sort_by_key(|(_, key)| *key);
    let rename: alloc::collections::BTreeMap<u32, u32> =
        order.iter().enumerate().map(|(i, (f, _))| (*f, i as u32 + 1)).collect();
    cur.rename(&|v| rename[&v]).into_multilinear()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn poly(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn brackets() {
        assert_eq!(
            bracket(BracketKind::Commutator, &[1, 2]).unwrap().to_string(),
            "1/1*(x1 x2) - 1/1*(x2 x1)"
        );
        assert_eq!(
            bracket(BracketKind::Associator, &[1, 2, 3]).unwrap().to_string(),
            "1/1*((x1 x2) x3) - 1/1*(x1 (x2 x3))"
        );
        assert_eq!(
            bracket(BracketKind::EpsBracket(1), &[1, 2]).unwrap(),
            bracket(BracketKind::Commutator, &[1, 2]).unwrap()
        );
        assert_eq!(bracket(BracketKind::Jacobian, &[1, 2, 3]).unwrap().len(), 3);
        assert_eq!(bracket(BracketKind::Commutator, &[1, 1]), Err(Error::Multilinearity(1)));
    }

    #[test]
    fn operator_words() {
        let seed = Tree::mul(Tree::x(2), Tree::x(4));
        let w = OperatorWord::new(seed, alloc::vec![(Side::L, None), (Side::R, None), (Side::R, None)]);
        assert_eq!(w.expand().unwrap().to_string(), "(((x1 (x2 x4)) x3) x5)");
        let s12 = Tree::mul(Tree::x(1), Tree::x(2));
        let r = OperatorWord::new(s12.clone(), alloc::vec![(Side::R, Some(3))]);
        assert_eq!(r.expand().unwrap().to_string(), "((x1 x2) x3)");
        let l = OperatorWord::new(s12.clone(), alloc::vec![(Side::L, Some(3))]);
        assert_eq!(l.expand().unwrap().to_string(), "(x3 (x1 x2))");
        let bad = OperatorWord::new(s12, alloc::vec![(Side::L, Some(2))]);
        assert_eq!(bad.expand(), Err(Error::IndexCollision(2)));
    }

    #[test]
    fn full_linearization_of_cube_is_phi() {
        let phi = linearize_full(&poly("1/1*((x9 x9) x9)"), &[1, 2, 3]).unwrap();
        assert_eq!(phi.len(), 6);
        for (t, c) in phi.iter() {
            assert!(c.is_one());
            assert!(matches!(t, Tree::Node(l, _) if matches!(**l, Tree::Node(..))));
        }
        let sq = linearize_full(&poly("2/1*(x5 x5)"), &[1, 2]).unwrap();
        assert_eq!(sq.to_string(), "2/1*(x1 x2) + 2/1*(x2 x1)");
        // x^2 R_y R_x with y = x4
        let j = linearize_full(&poly("1/1*(((x9 x9) x4) x9)"), &[1, 2, 3]).unwrap();
        assert_eq!(j.len(), 6);
        assert_eq!(j.vars(), &[1, 2, 3, 4]);
        assert!(linearize_full(&poly("1/1*((x1 x1) (x2 x2))"), &[3, 4]).is_err());
    }

    #[test]
    fn partial_linearization() {
        let p = poly("1/1*(((x1 x1) x2) x1)");
        let q = linearize_partial(&p, 1, 3).unwrap().commutative_collect();
        let expect = poly("2/1*(((x1 x3) x2) x1) + 1/1*(((x1 x1) x2) x3)").commutative_collect();
        assert_eq!(q, expect);
        assert!(linearize_partial(&poly("1/1*(x1 x2)"), 1, 3).is_err());
        assert!(linearize_partial(&poly("1/1*(x1 x2)"), 5, 3).is_err());
        assert_eq!(
            linearize_partial(&poly("1/1*(x1 x1)"), 1, 2).unwrap().to_string(),
            "1/1*(x1 x2) + 1/1*(x2 x1)"
        );
    }

    #[test]
    fn multilinearize_two_repeats() {
        // (xy) L_x R_y -> degree 4, 4 terms
        let p = poly("1/1*((x1 (x1 x2)) x2)");
        let m = multilinearize(&p).unwrap();
        assert_eq!(m.vars(), &[1, 2, 3, 4]);
        assert_eq!(m.len(), 4);
    }
}
