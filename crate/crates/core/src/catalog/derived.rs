//! Consequences of the defining identities that hold in every free
//! algebra of a variety, as smoke tests for the catalog entries.
//!
//! Identities with repeated variables are fully multilinearized. The
//! relations for superalgebras on odd generators are literal (no Koszul
//! signs): they are checked with plain substitution, odd elements for the
//! generator slots, on entries generated by odd elements only.

use alloc::vec::Vec;

use super::{CatalogEntry, Variety};
use crate::algebra::{check_on_domains, is_superidentity, Algebra, Homogeneity, Verdict};
use crate::poly::{multilinearize, MultilinearPoly, Poly, Tree};
use crate::scalars::QEps;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivedMode {
    /// Superidentity for every parity pattern.
    Identity,
    /// Literal relation: the variables in `any` range over the whole
    /// basis, the others over odd basis elements.
    Literal { any: Vec<u32> },
}

#[derive(Clone, Debug)]
pub struct DerivedCheck {
    pub name: &'static str,
    pub variety: Variety,
    pub poly: MultilinearPoly,
    pub mode: DerivedMode,
}

impl DerivedCheck {
    pub fn applies_to(&self, e: &CatalogEntry) -> bool {
        if e.variety != self.variety {
            return false;
        }
        match self.mode {
            DerivedMode::Identity => true,
            DerivedMode::Literal { .. } => e.generators.iter().all(|g| {
                matches!(g.homogeneity(&e.algebra), Homogeneity::Homogeneous(p) if p.is_odd())
            }),
        }
    }

    pub fn run(&self, e: &CatalogEntry) -> Verdict {
        let alg = &e.algebra;
        match &self.mode {
            DerivedMode::Identity => is_superidentity(alg, &self.poly),
            DerivedMode::Literal { any } => {
                let all: Vec<usize> = (0..alg.dim()).collect();
                let odd: Vec<usize> = all.iter().copied().filter(|&i| alg.parity(i).is_odd()).collect();
                let domains: Vec<Vec<usize>> = self
                    .poly
                    .vars()
                    .iter()
                    .map(|v| if any.contains(v) { all.clone() } else { odd.clone() })
                    .collect();
                check_on_domains(alg, &self.poly, &domains, false)
            }
        }
    }
}

fn x(i: u32) -> Tree {
    Tree::x(i)
}

fn m(a: Tree, b: Tree) -> Tree {
    Tree::mul(a, b)
}

/// `t R_{v1} R_{v2} ...`
fn rs(t: Tree, vs: &[u32]) -> Tree {
    vs.iter().fold(t, |t, &v| t.r(v))
}

fn poly(terms: Vec<(i64, Tree)>) -> Poly {
    let mut p = Poly::zero();
    for (c, t) in terms {
        p.add_term(QEps::from_int(c), t);
    }
    p
}

fn lin(p: Poly) -> MultilinearPoly {
    multilinearize(&p).expect("derived identities linearize")
}

fn ml(p: Poly) -> MultilinearPoly {
    p.into_multilinear().expect("multilinear as written")
}

/// All derived checks, grouped by variety.
pub fn derived_checks() -> Vec<DerivedCheck> {
    use DerivedMode::*;
    use Variety::*;
    let cube = || m(m(x(1), x(1)), x(1));
    let sq = |i| m(x(i), x(i));
    let check = |name, variety, poly, mode| DerivedCheck { name, variety, poly, mode };
    alloc::vec![
        // x³T_y = 0
        check("quasinil_R", Alternative, lin(poly(alloc::vec![(1, cube().r(2))])), Identity),
        check("quasinil_L", Alternative, lin(poly(alloc::vec![(1, cube().l(2))])), Identity),
        // (xy)T_xR_y = 0
        check("quadrnilp_R", Alternative, lin(poly(alloc::vec![(1, rs(m(x(1), x(2)), &[1, 2]))])), Identity),
        check(
            "quadrnilp_L",
            Alternative,
            lin(poly(alloc::vec![(1, m(x(1), x(2)).l(1).r(2))])),
            Identity
        ),
        // x²R_yR_x = 0
        check("JordR", Jordan, lin(poly(alloc::vec![(1, rs(sq(1), &[2, 1]))])), Identity),
        // 2(zx)R_yR_x + x²R_yR_z = 0
        check(
            "LinJordR",
            Jordan,
            lin(poly(alloc::vec![(2, rs(m(x(3), x(1)), &[2, 1])), (1, rs(sq(1), &[2, 3]))])),
            Identity
        ),
        // (zt)R_xR_yR_x = 0
        check("JordCos", Jordan, lin(poly(alloc::vec![(1, rs(m(x(3), x(4)), &[1, 2, 1]))])), Identity),
        // (zx)R_yR_xR_tR_z = 0
        check("JordKvNilp", Jordan, lin(poly(alloc::vec![(1, rs(m(x(3), x(1)), &[2, 1, 4, 3]))])), Identity),
        // R_xR_yR_z = -(-1)^{|x||y|+|x||z|+|y||z|} R_zR_yR_x on products
        check(
            "SupJordCos",
            Jordan,
            ml(poly(alloc::vec![(1, rs(m(x(1), x(2)), &[3, 4, 5])), (1, rs(m(x(1), x(2)), &[5, 4, 3]))])),
            Identity
        ),
        // wR_{x1}R_{x2}R_{x3} = wR_{x3}R_{x1}R_{x2} with w = ab
        check(
            "wSagle",
            Malcev,
            ml(poly(alloc::vec![(1, rs(m(x(1), x(2)), &[3, 4, 5])), (-1, rs(m(x(1), x(2)), &[5, 3, 4]))])),
            Identity
        ),
        // (xy)[R_x, R_y] = 0
        check(
            "SagleSqr",
            Malcev,
            lin(poly(alloc::vec![(1, rs(m(x(1), x(2)), &[1, 2])), (-1, rs(m(x(1), x(2)), &[2, 1]))])),
            Identity
        ),
        // (xy)ρR_xηR_y = (xy)ρR_yηR_x with ρ = R_u, η = R_v
        check(
            "SagleGen",
            Malcev,
            lin(poly(alloc::vec![
                (1, rs(m(x(1), x(2)), &[3, 1, 4, 2])),
                (-1, rs(m(x(1), x(2)), &[3, 2, 4, 1])),
            ])),
            Identity
        ),
        // wR_xR_yR_z = wR_zR_xR_y, x, y, z odd
        check(
            "SupwSagle",
            Malcev,
            ml(poly(alloc::vec![(1, rs(m(x(1), x(2)), &[3, 4, 5])), (-1, rs(m(x(1), x(2)), &[5, 3, 4]))])),
            Literal { any: alloc::vec![1, 2] }
        ),
        // (xy)ρR_xηR_y = (xy)ρR_yηR_x, all odd, polarized
        check(
            "SupSagleGen22",
            Malcev,
            lin(poly(alloc::vec![
                (1, rs(m(x(1), x(2)), &[3, 1, 4, 2])),
                (-1, rs(m(x(1), x(2)), &[3, 2, 4, 1])),
            ])),
            Literal { any: Vec::new() }
        ),
        // x²ρR_xηR_y = x²ρR_yηR_x, all odd, polarized
        check(
            "SupSagleGen31",
            Malcev,
            lin(poly(alloc::vec![(1, rs(sq(1), &[3, 1, 4, 2])), (-1, rs(sq(1), &[3, 2, 4, 1]))])),
            Literal { any: Vec::new() }
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        let d: Vec<(&str, usize)> = derived_checks().iter().map(|c| (c.name, c.poly.degree())).collect();
        for (name, deg) in [
            ("quasinil_R", 4),
            ("JordR", 4),
            ("JordCos", 5),
            ("JordKvNilp", 6),
            ("SagleGen", 6),
            ("SupSagleGen31", 6),
        ] {
            assert!(d.contains(&(name, deg)), "{name}");
        }
    }
}
