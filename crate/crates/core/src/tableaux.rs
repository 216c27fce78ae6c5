//! Rectangular Young tables, their row/column stabilizers, and the
//! endomorphisms `φ_τd`, `ψ_τd` on associative multilinear words.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::BlockPermutations;
use crate::poly::{MultilinearPoly, Parity, Poly, Tree};
use crate::scalars::QEps;

/// A rectangular `rows × cols` table filled with `1..rows*cols`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungTable {
    rows: usize,
    cols: usize,
    /// Row-major cell contents.
    cells: Vec<u32>,
}

impl YoungTable {
    /// From explicit rows; every row must have the same length and the
    /// entries must be exactly `1..=n`.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let k = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if k == 0 || m == 0 || rows.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidArgument("Young table must be a nonempty rectangle".into()));
        }
        let cells: Vec<u32> = rows.into_iter().flatten().collect();
        let mut seen = alloc::vec![false; cells.len()];
        for &c in &cells {
            let i = (c as usize).wrapping_sub(1);
            if i >= seen.len() || seen[i] {
                return Err(Error::InvalidArgument(alloc::format!(
                    "Young table entries must be a permutation of 1..{}",
                    seen.len()
                )));
            }
            seen[i] = true;
        }
        Ok(YoungTable { rows: k, cols: m, cells })
    }

    /// `1, 2, ...` down the first column, then down the second, ...
    pub fn column_major(rows: usize, cols: usize) -> Self {
        Self::with_filling(rows, cols, |r, c| (c * rows + r + 1) as u32)
    }

    /// `1, 2, ...` along the first row, then along the second, ...
    pub fn row_major(rows: usize, cols: usize) -> Self {
        Self::with_filling(rows, cols, |r, c| (r * cols + c + 1) as u32)
    }

    /// `τd`: the numbers `τ(1), ..., τ(n)` placed in column-major order.
    /// `tau` holds the images `τ(1..=n)`.
    pub fn from_permutation(rows: usize, cols: usize, tau: &[u32]) -> Result<Self> {
        if tau.len() != rows * cols {
            return Err(Error::Arity { what: "Young table filling", expected: rows * cols, got: tau.len() });
        }
        let mut filling = alloc::vec![alloc::vec![0; cols]; rows];
        for (pos, &v) in tau.iter().enumerate() {
            filling[pos % rows][pos / rows] = v;
        }
        Self::from_rows(filling)
    }

    fn with_filling(rows: usize, cols: usize, f: impl Fn(usize, usize) -> u32) -> Self {
        assert!(rows > 0 && cols > 0, "Young table must be nonempty");
        let mut cells = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                cells.push(f(r, c));
            }
        }
        YoungTable { rows, cols, cells }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> u32 {
        self.cells[r * self.cols + c]
    }

    /// `(row, col)` of the cell holding `v`.
    pub fn cell_of(&self, v: u32) -> Option<(usize, usize)> {
        let p = self.cells.iter().position(|&c| c == v)?;
        Some((p / self.cols, p % self.cols))
    }

    pub fn row_sets(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| (0..self.cols).map(|c| self.entry(r, c)).collect()).collect()
    }

    pub fn col_sets(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| (0..self.rows).map(|r| self.entry(r, c)).collect()).collect()
    }

    /// Row and column stabilizers as lazily enumerated groups acting on
    /// the points `0..n` (entry `v` is point `v - 1`).
    pub fn stabilizers(&self) -> (BlockPermutations, BlockPermutations) {
        let blocks = |sets: Vec<Vec<u32>>| {
            sets.into_iter()
                .map(|s| s.into_iter().map(|v| v as usize - 1).collect())
                .collect()
        };
        (
            BlockPermutations::new(self.size(), blocks(self.row_sets())),
            BlockPermutations::new(self.size(), blocks(self.col_sets())),
        )
    }

    /// The permutations `π` and signs of `φ_τd`, with `π = σρ` for
    /// `σ ∈ C_τd`, `ρ ∈ R_τd` (since `R_στd = σ R_τd σ⁻¹`).
    pub fn phi_terms(&self) -> Vec<(Vec<usize>, i64)> {
        let (rows, cols) = self.stabilizers();
        let rows: Vec<_> = rows.collect();
        let mut out = Vec::new();
        for (sigma, s) in cols {
            for (rho, _) in &rows {
                out.push((rho.iter().map(|&i| sigma[i]).collect(), s));
            }
        }
        out
    }

    /// The permutations `π = ρσ` and signs `sgn σ` of `ψ_τd`.
    pub fn psi_terms(&self) -> Vec<(Vec<usize>, i64)> {
        let (rows, cols) = self.stabilizers();
        let cols: Vec<_> = cols.collect();
        let mut out = Vec::new();
        for (rho, _) in rows {
            for (sigma, s) in &cols {
                out.push((sigma.iter().map(|&i| rho[i]).collect(), *s));
            }
        }
        out
    }
}

impl fmt::Display for YoungTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(" / ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
        }
        Ok(())
    }
}

/// An associative multilinear word: each of `1..=n` exactly once.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AssocWord(Vec<u32>);

impl AssocWord {
    pub fn new(vars: Vec<u32>) -> Result<Self> {
        let mut seen = alloc::vec![false; vars.len()];
        for &v in &vars {
            let i = (v as usize).wrapping_sub(1);
            if i >= seen.len() || seen[i] {
                return Err(Error::InvalidArgument(alloc::format!(
                    "word must be a permutation of 1..{}",
                    vars.len()
                )));
            }
            seen[i] = true;
        }
        Ok(AssocWord(vars))
    }

    pub fn identity(n: usize) -> Self {
        AssocWord((1..=n as u32).collect())
    }

    pub fn vars(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Linear combination of associative words (not necessarily multilinear,
/// so that products of partial words are representable).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AssocPoly {
    terms: BTreeMap<Vec<u32>, QEps>,
}

impl AssocPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(vars: &[u32]) -> Self {
        let mut p = Self::zero();
        p.add_term(QEps::one(), vars.to_vec());
        p
    }

    pub fn add_term(&mut self, c: QEps, w: Vec<u32>) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, QEps> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &AssocPoly) -> AssocPoly {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(c.clone(), w.clone());
        }
        out
    }

    pub fn sub(&self, o: &AssocPoly) -> AssocPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> AssocPoly {
        self.scale(&-QEps::one())
    }

    pub fn scale(&self, c: &QEps) -> AssocPoly {
        let mut out = AssocPoly::zero();
        for (w, d) in &self.terms {
            out.add_term(d * c, w.clone());
        }
        out
    }

    /// Concatenation product.
    pub fn mul(&self, o: &AssocPoly) -> AssocPoly {
        let mut out = AssocPoly::zero();
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(c * d, w);
            }
        }
        out
    }

    /// `ab + ba`.
    pub fn circ(&self, o: &AssocPoly) -> AssocPoly {
        self.mul(o).add(&o.mul(self))
    }

    /// `ab - ba`.
    pub fn commutator(&self, o: &AssocPoly) -> AssocPoly {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn rename(&self, f: impl Fn(u32) -> u32) -> AssocPoly {
        let mut out = AssocPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(c.clone(), w.iter().map(|&v| f(v)).collect());
        }
        out
    }

    /// The same polynomial with words written as left-normed products.
    pub fn to_poly(&self) -> Poly {
        let mut p = Poly::zero();
        for (w, c) in &self.terms {
            p.add_term(c.clone(), Tree::left_normed(w));
        }
        p
    }
}

impl fmt::Display for AssocPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

fn check_word(t: &YoungTable, w: &AssocWord) -> Result<()> {
    if w.len() < t.size() {
        return Err(Error::InvalidArgument(alloc::format!(
            "word of length {} is shorter than the table ({} cells)",
            w.len(),
            t.size()
        )));
    }
    Ok(())
}

fn apply_terms(terms: Vec<(Vec<usize>, i64)>, w: &AssocWord) -> AssocPoly {
    let mut out = AssocPoly::zero();
    for (pi, s) in terms {
        let word: Vec<u32> = w
            .vars()
            .iter()
            .map(|&v| match pi.get(v as usize - 1) {
                Some(&img) => img as u32 + 1,
                None => v,
            })
            .collect();
        out.add_term(QEps::from_int(s), word);
    }
    out
}

/// `φ_τd(w) = Σ_{σ∈C_τd} Σ_{ρ∈R_στd} sgn(σ) w(x_{ρσ(1)}, ...)`; variables
/// beyond the table are untouched.
pub fn phi(t: &YoungTable, w: &AssocWord) -> Result<AssocPoly> {
    check_word(t, w)?;
    Ok(apply_terms(t.phi_terms(), w))
}

/// `ψ_τd(w) = Σ_{ρ∈R_τd} Σ_{σ∈C_ρτd} sgn(σ) w(x_{σρ(1)}, ...)`.
pub fn psi(t: &YoungTable, w: &AssocWord) -> Result<AssocPoly> {
    check_word(t, w)?;
    Ok(apply_terms(t.psi_terms(), w))
}

/// A generator of the free associative superalgebra on `r` even
/// generators `e1..er` and `s` odd generators `y1..ys`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperGen {
    pub parity: Parity,
    pub index: u32,
}

impl SuperGen {
    pub fn even(index: u32) -> Self {
        SuperGen { parity: Parity::Even, index }
    }

    pub fn odd(index: u32) -> Self {
        SuperGen { parity: Parity::Odd, index }
    }
}

impl fmt::Display for SuperGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parity {
            Parity::Even => write!(f, "e{}", self.index),
            Parity::Odd => write!(f, "y{}", self.index),
        }
    }
}

/// Linear combination of words in the free associative superalgebra.
pub type FreeSuperPoly = BTreeMap<Vec<SuperGen>, QEps>;

/// Superizes `p` for the parities induced by `xi`, then substitutes
/// `xi(x)` for each variable and collects equal words.
///
/// The Koszul sign of a word is the sign of the order its odd variables
/// appear in, relative to ascending variable index.
pub fn substitute_super(p: &AssocPoly, xi: &BTreeMap<u32, SuperGen>) -> Result<FreeSuperPoly> {
    let mut out: FreeSuperPoly = BTreeMap::new();
    for (w, c) in p.terms() {
        let mut odd = Vec::new();
        let mut word = Vec::with_capacity(w.len());
        for v in w {
            let g = *xi.get(v).ok_or(Error::Unassigned(*v))?;
            if g.parity.is_odd() {
                odd.push(*v);
            }
            word.push(g);
        }
        let s = crate::perm::inversion_sign(&odd);
        let e = out.entry(word).or_insert_with(QEps::zero);
        *e += &(&QEps::from_int(s) * c);
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Renders a free-superalgebra polynomial, e.g. `1/1*e1y1 - 2/1*y1e1`.
pub fn format_free_super(p: &FreeSuperPoly) -> String {
    use core::fmt::Write;
    if p.is_empty() {
        return String::from("0");
    }
    let mut s = String::new();
    for (k, (w, c)) in p.iter().enumerate() {
        let neg = c.is_negative();
        let abs = if neg { -c } else { c.clone() };
        let sep = match (k, neg) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        let _ = write!(s, "{sep}{abs}*");
        for g in w {
            let _ = write!(s, "{g}");
        }
    }
    s
}

/// Which rectangular polynomial family to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RectKind {
    /// `(uv) Σ_{σ∈C} Σ_{ρ∈R_σ} sgn(σ) R_{x_{ρσ(1)}} ... R_{x_{ρσ(kr)}}` over
    /// the `r × k` table filled column by column.
    PhiRow { r: usize, k: usize },
    /// `(uv) Σ_{ρ∈R} Σ_{σ∈C_ρ} sgn(σ) R_{x_{σρ(1)}} ... R_{x_{σρ(ks)}}` over
    /// the `k × s` table filled row by row.
    PsiCol { s: usize, k: usize },
}

impl RectKind {
    pub fn table(self) -> YoungTable {
        match self {
            RectKind::PhiRow { r, k } => YoungTable::column_major(r, k),
            RectKind::PsiCol { s, k } => YoungTable::row_major(k, s),
        }
    }
}

/// The operator polynomial of `kind` with `u = x1`, `v = x2` and the
/// table variables `x_i = x_{i+2}`.
pub fn rect_family(kind: RectKind) -> Result<MultilinearPoly> {
    let (a, b) = match kind {
        RectKind::PhiRow { r, k } => (r, k),
        RectKind::PsiCol { s, k } => (s, k),
    };
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument("table dimensions must be at least 1".into()));
    }
    let t = kind.table();
    let terms = match kind {
        RectKind::PhiRow { .. } => t.phi_terms(),
        RectKind::PsiCol { .. } => t.psi_terms(),
    };
    let mut p = Poly::zero();
    for (pi, s) in terms {
        let mut m = Tree::mul(Tree::x(1), Tree::x(2));
        for img in pi {
            m = m.r(img as u32 + 3);
        }
        p.add_term(QEps::from_int(s), m);
    }
    p.into_multilinear()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(v: &[u32]) -> AssocPoly {
        AssocPoly::word(v)
    }

    #[test]
    fn stabilizer_orders() {
        let t = YoungTable::row_major(2, 2);
        let (r, c) = t.stabilizers();
        assert_eq!((r.count(), c.count()), (4, 4));
        let (_, c) = YoungTable::row_major(1, 4).stabilizers();
        assert_eq!(c.count(), 1);
        let (r, _) = YoungTable::row_major(4, 1).stabilizers();
        assert_eq!(r.count(), 1);
    }

    #[test]
    fn fillings() {
        assert_eq!(YoungTable::column_major(2, 3).to_string(), "1 3 5 / 2 4 6");
        assert_eq!(YoungTable::row_major(2, 3).to_string(), "1 2 3 / 4 5 6");
        let t = YoungTable::from_permutation(2, 2, &[2, 1, 4, 3]).unwrap();
        assert_eq!(t.to_string(), "2 4 / 1 3");
        assert!(YoungTable::from_rows(alloc::vec![alloc::vec![1, 1]]).is_err());
        assert!(YoungTable::from_rows(alloc::vec![alloc::vec![1, 2], alloc::vec![3]]).is_err());
    }

    #[test]
    fn worked_example_phi() {
        let t = YoungTable::from_rows(alloc::vec![alloc::vec![1, 2], alloc::vec![3, 4]]).unwrap();
        let got = phi(&t, &AssocWord::identity(4)).unwrap();
        let c = |a: u32, b: u32| w(&[a]).circ(&w(&[b]));
        let want = c(1, 2).circ(&c(3, 4)).sub(&c(3, 2).circ(&c(1, 4)));
        assert_eq!(got, want);
    }

    #[test]
    fn worked_example_psi() {
        let t = YoungTable::from_rows(alloc::vec![alloc::vec![1, 2], alloc::vec![3, 4]]).unwrap();
        let got = psi(&t, &AssocWord::new(alloc::vec![1, 3, 2, 4]).unwrap()).unwrap();
        let br = |a: u32, b: u32| w(&[a]).commutator(&w(&[b]));
        let want = br(1, 3).circ(&br(2, 4)).add(&br(2, 3).circ(&br(1, 4)));
        assert_eq!(got, want);
    }

    #[test]
    fn one_by_one_is_identity() {
        let t = YoungTable::row_major(1, 1);
        let word = AssocWord::new(alloc::vec![2, 1, 3]).unwrap();
        assert_eq!(phi(&t, &word).unwrap(), w(&[2, 1, 3]));
        assert_eq!(psi(&t, &word).unwrap(), w(&[2, 1, 3]));
        assert!(phi(&YoungTable::row_major(2, 2), &AssocWord::identity(3)).is_err());
    }

    #[test]
    fn superization_of_equal_odd_pair_cancels() {
        let t = YoungTable::row_major(1, 2);
        let p = phi(&t, &AssocWord::identity(2)).unwrap();
        let xi: BTreeMap<u32, SuperGen> = [(1, SuperGen::odd(1)), (2, SuperGen::odd(1))].into();
        assert!(substitute_super(&p, &xi).unwrap().is_empty());
        let xi: BTreeMap<u32, SuperGen> = [(1, SuperGen::even(1)), (2, SuperGen::even(1))].into();
        let s = substitute_super(&p, &xi).unwrap();
        assert_eq!(format_free_super(&s), "2/1*e1e1");
    }

    #[test]
    fn rect_family_small() {
        let f = rect_family(RectKind::PsiCol { s: 1, k: 1 }).unwrap();
        assert_eq!(f.to_string(), "1/1*((x1 x2) x3)");
        let f = rect_family(RectKind::PhiRow { r: 2, k: 2 }).unwrap();
        assert_eq!(f.degree(), 6);
        assert_eq!(f.len(), 16);
    }
}
