use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{bracket, linearize_full, BracketKind, MultilinearPoly, Poly, Tree};
use crate::error::{Error, Result};
use crate::perm::sign;
use crate::scalars::QEps;

/// Names of the defining identities known to [`identity_library`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LibraryIdentity {
    Alternative,
    Jordan,
    Malcev,
    Metabelian,
    Nil3,
    EpsSymm(i8),
    EpsNil2(i8),
}

impl fmt::Display for LibraryIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LibraryIdentity::Alternative => f.write_str("alternative"),
            LibraryIdentity::Jordan => f.write_str("jordan"),
            LibraryIdentity::Malcev => f.write_str("malcev"),
            LibraryIdentity::Metabelian => f.write_str("metabelian"),
            LibraryIdentity::Nil3 => f.write_str("nil3"),
            LibraryIdentity::EpsSymm(e) => write!(f, "eps_symm({e:+})"),
            LibraryIdentity::EpsNil2(e) => write!(f, "eps_nil2({e:+})"),
        }
    }
}

fn parse_eps(arg: &str) -> Result<i8> {
    match arg.trim() {
        "1" | "+1" => Ok(1),
        "-1" => Ok(-1),
        other => Err(Error::InvalidArgument(format!("eps must be +1 or -1, got `{other}`"))),
    }
}

impl FromStr for LibraryIdentity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let with_arg = |prefix: &str| -> Option<&str> {
            s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')
        };
        Ok(match s {
            "alternative" => LibraryIdentity::Alternative,
            "jordan" => LibraryIdentity::Jordan,
            "malcev" => LibraryIdentity::Malcev,
            "metabelian" => LibraryIdentity::Metabelian,
            "nil3" => LibraryIdentity::Nil3,
            _ => {
                if let Some(a) = with_arg("eps_symm") {
                    LibraryIdentity::EpsSymm(parse_eps(a)?)
                } else if let Some(a) = with_arg("eps_nil2") {
                    LibraryIdentity::EpsNil2(parse_eps(a)?)
                } else {
                    return Err(Error::UnknownName(String::from(s)));
                }
            }
        })
    }
}

fn x(i: u32) -> Tree {
    Tree::x(i)
}

/// `Σ_{σ∈S3} (x_{σ1} x_{σ2}) x_{σ3}`, the full linearization of `(xx)x`.
pub(crate) fn phi3() -> MultilinearPoly {
    let cube = Poly::monomial(Tree::mul(Tree::mul(x(0), x(0)), x(0)));
    linearize_full(&cube, &[1, 2, 3]).expect("cube linearizes")
}

/// `Σ_{σ∈C4} (x_{σ1} x_{σ2}) R_{x_{σ3}} R_{x_{σ4}}`.
pub(crate) fn sagle_cyclic() -> Poly {
    let mut p = Poly::zero();
    for k in 0..4u32 {
        let v = |i: u32| (i + k) % 4 + 1;
        p.add_term(QEps::one(), Tree::left_normed(&[v(0), v(1), v(2), v(3)]));
    }
    p
}

impl LibraryIdentity {
    /// The multilinear defining identities of the variety.
    pub fn identities(self) -> Vec<MultilinearPoly> {
        let one = QEps::one;
        match self {
            LibraryIdentity::Alternative => {
                let a = |i, j, k| bracket(BracketKind::Associator, &[i, j, k]).unwrap();
                vec![
                    a(1, 2, 3).add(&a(2, 1, 3)).unwrap(),
                    a(1, 2, 3).add(&a(1, 3, 2)).unwrap(),
                ]
            }
            LibraryIdentity::Jordan => {
                // (x^2, y, x) = (x^2 y) x - x^2 (y x) with y = x4
                let sq = || Tree::mul(x(0), x(0));
                let mut p = Poly::zero();
                p.add_term(one(), Tree::mul(Tree::mul(sq(), x(4)), x(0)));
                p.add_term(-one(), Tree::mul(sq(), Tree::mul(x(4), x(0))));
                vec![
                    bracket(BracketKind::Commutator, &[1, 2]).unwrap(),
                    linearize_full(&p, &[1, 2, 3]).unwrap(),
                ]
            }
            LibraryIdentity::Malcev => {
                let cyc = sagle_cyclic();
                let full = cyc.sub(&Poly::monomial(Tree::mul(
                    Tree::mul(x(1), x(3)),
                    Tree::mul(x(2), x(4)),
                )));
                vec![
                    bracket(BracketKind::Jordan, &[1, 2]).unwrap(),
                    full.into_multilinear().unwrap(),
                    cyc.into_multilinear().unwrap(),
                ]
            }
            LibraryIdentity::Metabelian => {
                vec![Poly::monomial(Tree::mul(Tree::mul(x(1), x(2)), Tree::mul(x(3), x(4))))
                    .into_multilinear()
                    .unwrap()]
            }
            LibraryIdentity::Nil3 => vec![phi3()],
            LibraryIdentity::EpsSymm(e) => {
                let a = |i, j, k| bracket(BracketKind::Associator, &[i, j, k]).unwrap();
                vec![a(1, 2, 3).sub(&a(1, 3, 2).scale(&QEps::from_int(e as i64))).unwrap()]
            }
            LibraryIdentity::EpsNil2(e) => {
                let eps = QEps::from_int(e as i64);
                let inner = bracket(BracketKind::EpsBracket(e), &[1, 2]).unwrap().into_poly();
                let p = inner.r(3).sub(&inner.l(3).scale(&eps));
                vec![p.into_multilinear().unwrap()]
            }
        }
    }
}

/// Looks up a library identity by name, e.g. `"malcev"` or `"eps_symm(-1)"`.
pub fn identity_library(name: &str) -> Result<Vec<MultilinearPoly>> {
    Ok(name.parse::<LibraryIdentity>()?.identities())
}

/// `Σ_{σ∈Sn} sgn(σ) (x_{σ1} x_{σ2}) R_{x_{σ3}} ... R_{x_{σn}}` on `vars`.
pub(crate) fn signed_left_normed_sum(vars: &[u32]) -> Poly {
    let mut p = Poly::zero();
    for perm in crate::perm::permutations(vars.len()) {
        let order: Vec<u32> = perm.iter().map(|&i| vars[i]).collect();
        p.add_term(QEps::from_int(sign(&perm)), Tree::left_normed(&order));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn metabelian_and_nil3() {
        let m = identity_library("metabelian").unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].to_string(), "1/1*((x1 x2) (x3 x4))");
        let n = identity_library("nil3").unwrap();
        assert_eq!(n[0].len(), 6);
        assert_eq!(n[0].degree(), 3);
    }

    #[test]
    fn malcev_reduced_sagle() {
        let m = identity_library("malcev").unwrap();
        assert_eq!(m.len(), 3);
        assert_eq!(
            m[2].to_string(),
            "1/1*(((x1 x2) x3) x4) + 1/1*(((x2 x3) x4) x1) + 1/1*(((x3 x4) x1) x2) + 1/1*(((x4 x1) x2) x3)"
        );
        assert_eq!(m[1].len(), 5);
    }

    #[test]
    fn jordan_linearization_has_twelve_terms() {
        let j = identity_library("jordan").unwrap();
        assert_eq!(j[1].len(), 12);
        assert_eq!(j[1].vars(), &[1, 2, 3, 4]);
    }

    #[test]
    fn names_round_trip() {
        for n in ["alternative", "jordan", "malcev", "metabelian", "nil3", "eps_symm(+1)", "eps_nil2(-1)"] {
            let id: LibraryIdentity = n.parse().unwrap();
            assert_eq!(id.to_string(), n);
        }
        assert_eq!("eps_symm(1)".parse::<LibraryIdentity>().unwrap(), LibraryIdentity::EpsSymm(1));
        assert!(identity_library("lie").is_err());
        assert!(identity_library("eps_symm(2)").is_err());
    }

    #[test]
    fn eps_identities() {
        let s = identity_library("eps_symm(-1)").unwrap();
        assert_eq!(s[0].len(), 4);
        let n = identity_library("eps_nil2(1)").unwrap();
        assert_eq!(n[0].len(), 4);
    }
}
