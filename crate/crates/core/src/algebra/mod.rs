//! Finite-dimensional `Z_2`-graded algebras given by structure constants.

mod closure;
mod eval;
pub(crate) mod extension;
pub(crate) mod grassmann;

pub use closure::{subalgebra_closure, Closure};
pub use eval::{
    check_on_domains, eval_poly, evaluate, evaluate_graded, is_identity, is_superidentity, Verdict, Witness,
};
pub use extension::{split_null_extension, ActionTable, CompletionRule};
pub use grassmann::{grassmann, grassmann_label, Envelope};

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::poly::Parity;
use crate::scalars::QEps;

/// A sparse vector over a basis: sorted indices, no zero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    coords: Vec<(usize, QEps)>,
}

/// Homogeneity of an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(Parity),
    Mixed,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn basis(i: usize) -> Self {
        Element { coords: alloc::vec![(i, QEps::one())] }
    }

    pub fn term(i: usize, c: QEps) -> Self {
        Self::from_pairs([(i, c)])
    }

    /// Sums repeated indices and drops zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, QEps)>) -> Self {
        let mut v: Vec<(usize, QEps)> = pairs.into_iter().collect();
        normalize(&mut v);
        Element { coords: v }
    }

    pub fn coords(&self) -> &[(usize, QEps)] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, i: usize) -> QEps {
        match self.coords.binary_search_by_key(&i, |(k, _)| *k) {
            Ok(p) => self.coords[p].1.clone(),
            Err(_) => QEps::zero(),
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = Vec::with_capacity(self.coords.len() + other.coords.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.coords, &other.coords);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push(b[j].clone());
                j += 1;
            } else {
                let s = &a[i].1 + &b[j].1;
                if !s.is_zero() {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
        Element { coords: out }
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element { coords: self.coords.iter().map(|(i, c)| (*i, -c)).collect() }
    }

    pub fn scale(&self, c: &QEps) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Element { coords: self.coords.iter().map(|(i, d)| (*i, c * d)).collect() }
    }

    pub fn max_index(&self) -> Option<usize> {
        self.coords.last().map(|(i, _)| *i)
    }

    pub fn homogeneity<A: Algebra + ?Sized>(&self, alg: &A) -> Homogeneity {
        let mut p = None;
        for (i, _) in &self.coords {
            let q = alg.parity(*i);
            match p {
                None => p = Some(q),
                Some(r) if r != q => return Homogeneity::Mixed,
                _ => {}
            }
        }
        match p {
            None => Homogeneity::Zero,
            Some(p) => Homogeneity::Homogeneous(p),
        }
    }

    /// Dense coordinate vector of length `dim`.
    pub fn to_dense(&self, dim: usize) -> Vec<QEps> {
        crate::linalg::densify(dim, &self.coords)
    }

    pub fn from_dense(v: &[QEps]) -> Element {
        Element {
            coords: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    /// Text form over `alg`'s labels, e.g. `2/1*exe` or `1/1*a1 + 1/1*x`.
    pub fn display<'a, A: Algebra + ?Sized>(&'a self, alg: &'a A) -> ElementDisplay<'a, A> {
        ElementDisplay { e: self, alg }
    }
}

fn normalize(v: &mut Vec<(usize, QEps)>) {
    v.sort_by_key(|(i, _)| *i);
    let mut out: Vec<(usize, QEps)> = Vec::with_capacity(v.len());
    for (i, c) in v.drain(..) {
        match out.last_mut() {
            Some((j, d)) if *j == i => *d += &c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    *v = out;
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (i, c)) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*b{i}")?;
        }
        Ok(())
    }
}

pub struct ElementDisplay<'a, A: ?Sized> {
    e: &'a Element,
    alg: &'a A,
}

impl<A: Algebra + ?Sized> fmt::Display for ElementDisplay<'_, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e.is_zero() {
            return f.write_str("0");
        }
        for (k, (i, c)) in self.e.coords.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            write!(f, "{abs}*{}", self.alg.label(*i))?;
        }
        Ok(())
    }
}

/// Anything with a finite homogeneous basis and a bilinear product.
pub trait Algebra {
    fn dim(&self) -> usize;
    fn parity(&self, i: usize) -> Parity;
    fn label(&self, i: usize) -> String;
    /// Calls `f(k, c)` for every nonzero coefficient of `b_i * b_j`.
    fn for_each_product(&self, i: usize, j: usize, f: &mut dyn FnMut(usize, &QEps));

    fn basis_product(&self, i: usize, j: usize) -> Element {
        let mut v = Vec::new();
        self.for_each_product(i, j, &mut |k, c| v.push((k, c.clone())));
        Element::from_pairs(v)
    }

    /// Bilinear extension of the basis products.
    fn mul(&self, u: &Element, v: &Element) -> Element {
        let mut acc = Vec::new();
        for (i, a) in &u.coords {
            for (j, b) in &v.coords {
                let ab = a * b;
                self.for_each_product(*i, *j, &mut |k, c| acc.push((k, &ab * c)));
            }
        }
        Element::from_pairs(acc)
    }

    /// Like [`Algebra::mul`] but rejects coordinates outside the basis.
    fn checked_mul(&self, u: &Element, v: &Element) -> Result<Element> {
        for e in [u, v] {
            if let Some(m) = e.max_index() {
                if m >= self.dim() {
                    return Err(Error::DimensionMismatch { expected: self.dim(), got: m + 1 });
                }
            }
        }
        Ok(self.mul(u, v))
    }

    fn index_of(&self, label: &str) -> Result<usize> {
        (0..self.dim())
            .find(|&i| self.label(i) == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Parses `c*label (+|-) c*label ...`; a bare label has coefficient 1.
    fn parse_element(&self, s: &str) -> Result<Element> {
        parse_element_with(s, &|l| self.index_of(l))
    }
}

pub(crate) fn parse_element_with(
    s: &str,
    lookup: &dyn Fn(&str) -> Result<usize>,
) -> Result<Element> {
    let t = s.trim();
    if t == "0" {
        return Ok(Element::zero());
    }
    let bytes = t.as_bytes();
    let mut pos = 0;
    let mut pairs = Vec::new();
    let mut negate = false;
    let skip = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip(&mut pos);
    if pos < bytes.len() && (bytes[pos] == b'-' || bytes[pos] == b'+') {
        negate = bytes[pos] == b'-';
        pos += 1;
    }
    loop {
        skip(&mut pos);
        if pos >= bytes.len() {
            return Err(Error::parse(pos, "expected a term"));
        }
        let mut c = QEps::one();
        if bytes[pos].is_ascii_digit() {
            let (v, used) = QEps::parse_prefix(&t[pos..], pos)?;
            pos += used;
            skip(&mut pos);
            if pos >= bytes.len() || bytes[pos] != b'*' {
                return Err(Error::parse(pos, "expected `*` after coefficient"));
            }
            pos += 1;
            skip(&mut pos);
            c = v;
        }
        let start = pos;
        while pos < bytes.len()
            && !bytes[pos].is_ascii_whitespace()
            && bytes[pos] != b'+'
            && bytes[pos] != b'-'
        {
            pos += 1;
        }
        if start == pos {
            return Err(Error::parse(pos, "expected a basis label"));
        }
        let idx = lookup(&t[start..pos])?;
        pairs.push((idx, if negate { -c } else { c }));
        skip(&mut pos);
        if pos >= bytes.len() {
            break;
        }
        match bytes[pos] {
            b'+' => negate = false,
            b'-' => negate = true,
            _ => return Err(Error::parse(pos, "expected `+` or `-`")),
        }
        pos += 1;
    }
    Ok(Element::from_pairs(pairs))
}

/// The ground field an algebra is declared over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Q,
    QEps,
}

impl Field {
    pub fn name(self) -> &'static str {
        match self {
            Field::Q => "Q",
            Field::QEps => "Q(eps)",
        }
    }
}

/// A superalgebra stored as a dense table of sparse basis products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperAlgebra {
    name: String,
    field: Field,
    associative: bool,
    labels: Vec<String>,
    parities: Vec<Parity>,
    table: Vec<Element>,
}

impl SuperAlgebra {
    pub fn builder(name: impl Into<String>) -> SuperAlgebraBuilder {
        SuperAlgebraBuilder {
            name: name.into(),
            field: Field::Q,
            associative: false,
            labels: Vec::new(),
            parities: Vec::new(),
            products: BTreeMap::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn associative(&self) -> bool {
        self.associative
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn product(&self, i: usize, j: usize) -> &Element {
        &self.table[i * self.labels.len() + j]
    }

    /// Nonzero basis products `(i, j, b_i b_j)` in row-major order.
    pub fn nonzero_products(&self) -> impl Iterator<Item = (usize, usize, &Element)> {
        let n = self.labels.len();
        self.table
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(move |(k, e)| (k / n, k % n, e))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Indices of the basis elements of one parity.
    pub fn basis_of_parity(&self, p: Parity) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parities[i] == p).collect()
    }

    /// Grading closure, field consistency and (if declared) associativity.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut rep = ValidationReport::default();
        for i in 0..n {
            for j in 0..n {
                let e = self.product(i, j);
                let want = self.parities[i].add(self.parities[j]);
                if e.coords.iter().any(|(k, _)| self.parities[*k] != want) {
                    rep.grading.push((i, j));
                }
                if self.field == Field::Q && e.coords.iter().any(|(_, c)| !c.is_rational()) {
                    rep.field.push((i, j));
                }
            }
        }
        if self.associative {
            for i in 0..n {
                for j in 0..n {
                    let ij = self.product(i, j);
                    for k in 0..n {
                        let jk = self.product(j, k);
                        let l = self.mul(ij, &Element::basis(k));
                        let r = self.mul(&Element::basis(i), jk);
                        if l != r {
                            rep.associativity.push((i, j, k));
                        }
                    }
                }
            }
        }
        rep
    }
}

impl Algebra for SuperAlgebra {
    fn dim(&self) -> usize {
        self.labels.len()
    }

    fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    fn label(&self, i: usize) -> String {
        self.labels[i].clone()
    }

    fn for_each_product(&self, i: usize, j: usize, f: &mut dyn FnMut(usize, &QEps)) {
        for (k, c) in &self.product(i, j).coords {
            f(*k, c);
        }
    }

    fn basis_product(&self, i: usize, j: usize) -> Element {
        self.product(i, j).clone()
    }

    fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }
}

/// Violations found by [`SuperAlgebra::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Pairs whose product leaves the expected graded component.
    pub grading: Vec<(usize, usize)>,
    /// Triples with `(b_i b_j) b_k != b_i (b_j b_k)` (associative algebras only).
    pub associativity: Vec<(usize, usize, usize)>,
    /// Pairs using `eps` in an algebra declared over `Q`.
    pub field: Vec<(usize, usize)>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.grading.is_empty() && self.associativity.is_empty() && self.field.is_empty()
    }
}

pub struct SuperAlgebraBuilder {
    name: String,
    field: Field,
    associative: bool,
    labels: Vec<String>,
    parities: Vec<Parity>,
    products: BTreeMap<(usize, usize), Element>,
}

impl SuperAlgebraBuilder {
    pub fn field(mut self, f: Field) -> Self {
        self.field = f;
        self
    }

    pub fn associative(mut self, a: bool) -> Self {
        self.associative = a;
        self
    }

    /// Appends a basis vector and returns its index.
    pub fn add_basis(&mut self, label: impl Into<String>, p: Parity) -> usize {
        self.labels.push(label.into());
        self.parities.push(p);
        self.labels.len() - 1
    }

    pub fn basis(mut self, label: impl Into<String>, p: Parity) -> Self {
        self.add_basis(label, p);
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn parity_of(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn get_product(&self, i: usize, j: usize) -> Option<&Element> {
        self.products.get(&(i, j))
    }

    /// Sets `b_i * b_j` (replacing any earlier value).
    pub fn set_product(&mut self, i: usize, j: usize, v: Element) {
        if v.is_zero() {
            self.products.remove(&(i, j));
        } else {
            self.products.insert((i, j), v);
        }
    }

    pub fn product(mut self, i: usize, j: usize, v: Element) -> Self {
        self.set_product(i, j, v);
        self
    }

    /// Sets a product by labels with a value like `1/1*a1 + 1/1*x`.
    pub fn product_labels(mut self, l: &str, r: &str, value: &str) -> Result<Self> {
        let i = self.index_of(l)?;
        let j = self.index_of(r)?;
        let v = parse_element_with(value, &|lab| self.index_of(lab))?;
        self.set_product(i, j, v);
        Ok(self)
    }

    pub fn build(self) -> Result<SuperAlgebra> {
        let n = self.labels.len();
        let mut seen = BTreeMap::new();
        for l in &self.labels {
            if l.is_empty() || l.chars().any(|c| c.is_whitespace() || "+-*".contains(c)) {
                return Err(Error::InvalidArgument(format!("bad basis label `{l}`")));
            }
            if seen.insert(l.as_str(), ()).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut table = alloc::vec![Element::zero(); n * n];
        for ((i, j), v) in self.products {
            if i >= n || j >= n {
                return Err(Error::DimensionMismatch { expected: n, got: i.max(j) + 1 });
            }
            if let Some(m) = v.max_index() {
                if m >= n {
                    return Err(Error::DimensionMismatch { expected: n, got: m + 1 });
                }
            }
            table[i * n + j] = v;
        }
        Ok(SuperAlgebra {
            name: self.name,
            field: self.field,
            associative: self.associative,
            labels: self.labels,
            parities: self.parities,
            table,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Parity::{Even, Odd};
    use alloc::string::ToString;

    fn tiny() -> SuperAlgebra {
        SuperAlgebra::builder("t")
            .basis("u", Odd)
            .basis("v", Odd)
            .basis("w", Even)
            .product_labels("u", "v", "1/1*w")
            .unwrap()
            .product_labels("v", "u", "-1/1*w")
            .unwrap()
            .build()
            .unwrap()
    }

    #[test]
    fn grading_violation_is_reported() {
        let bad = SuperAlgebra::builder("bad")
            .basis("u", Odd)
            .product_labels("u", "u", "1/1*u")
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(bad.validate().grading, alloc::vec![(0, 0)]);
        assert!(tiny().validate().is_ok());
    }

    #[test]
    fn eps_needs_the_extension_field() {
        let a = SuperAlgebra::builder("e")
            .basis("u", Even)
            .product_labels("u", "u", "0/1+1/1E*u")
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(a.validate().field, alloc::vec![(0, 0)]);
    }

    #[test]
    fn multiplication_and_text() {
        let a = tiny();
        let u = a.parse_element("2/1*u - v").unwrap();
        let v = a.parse_element("v").unwrap();
        assert_eq!(a.mul(&u, &v).display(&a).to_string(), "2/1*w");
        assert_eq!(a.mul(&Element::zero(), &v), Element::zero());
        assert_eq!(a.mul(&v, &u).display(&a).to_string(), "-2/1*w");
        assert!(matches!(
            a.checked_mul(&Element::basis(7), &v),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(a.parse_element("q"), Err(Error::UnknownLabel(_))));
        assert_eq!(u.homogeneity(&a), Homogeneity::Homogeneous(Odd));
        assert_eq!(a.parse_element("u + w").unwrap().homogeneity(&a), Homogeneity::Mixed);
    }

    #[test]
    fn duplicate_labels_rejected() {
        let r = SuperAlgebra::builder("d").basis("u", Odd).basis("u", Even).build();
        assert_eq!(r, Err(Error::DuplicateLabel("u".into())));
    }
}
