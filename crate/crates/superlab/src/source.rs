//! Parsing of the algebra and polynomial sources accepted on the command
//! line and in suite manifests.
//!
//! Algebras: `catalog:NAME[:P1[:P2]]` or `file:PATH` (algebra JSON).
//! Polynomials: `lib:NAME`, `family:NAME:P1[:P2]`, `file:PATH` (one
//! polynomial per line, `#` comments) or inline polynomial text.

use std::collections::BTreeMap;

use superlab_core::algebra::{Algebra, Element, SuperAlgebra};
use superlab_core::catalog::{self, CatalogEntry};
use superlab_core::poly::{identity_library, MultilinearPoly};

use crate::algebra_json;
use crate::error::{Error, Result};

/// An algebra together with its catalog metadata when it has any.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub algebra: SuperAlgebra,
    pub entry: Option<CatalogEntry>,
}

impl Loaded {
    pub fn element(&self, s: &str) -> Result<Element> {
        Ok(match &self.entry {
            Some(e) => e.element(s)?,
            None => self.algebra.parse_element(s)?,
        })
    }
}

fn params(parts: &[&str]) -> Result<Vec<i64>> {
    parts
        .iter()
        .map(|p| {
            p.trim_start_matches('+')
                .parse::<i64>()
                .map_err(|_| Error::Usage(format!("bad parameter `{p}`")))
        })
        .collect()
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub fn load_algebra(src: &str) -> Result<Loaded> {
    if let Some(rest) = src.strip_prefix("catalog:") {
        let parts: Vec<&str> = rest.split(':').collect();
        let e = catalog::entry(parts[0], &params(&parts[1..])?)?;
        return Ok(Loaded { algebra: e.algebra.clone(), entry: Some(e) });
    }
    if let Some(path) = src.strip_prefix("file:") {
        return Ok(Loaded { algebra: algebra_json::from_json(&read(path)?)?, entry: None });
    }
    Err(Error::Usage(format!("algebra source `{src}` must start with `catalog:` or `file:`")))
}

/// Named polynomials from a source; library sources give several.
pub fn load_polys(src: &str, max_degree: usize) -> Result<Vec<(String, MultilinearPoly)>> {
    if let Some(name) = src.strip_prefix("lib:") {
        let list = identity_library(name)?;
        let n = list.len();
        return Ok(list
            .into_iter()
            .enumerate()
            .map(|(i, f)| (if n == 1 { name.to_string() } else { format!("{name}[{i}]") }, f))
            .collect());
    }
    if let Some(rest) = src.strip_prefix("family:") {
        let parts: Vec<&str> = rest.split(':').collect();
        let f = catalog::family(parts[0], &params(&parts[1..])?, max_degree)?;
        return Ok(vec![(rest.to_string(), f)]);
    }
    if let Some(path) = src.strip_prefix("file:") {
        let text = read(path)?;
        let mut out = Vec::new();
        for (k, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                let f = line.parse().map_err(|e| Error::Usage(format!("{path}:{}: {e}", k + 1)))?;
                out.push((format!("{path}:{}", k + 1), f));
            }
        }
        return Ok(out);
    }
    Ok(vec![(src.to_string(), src.parse()?)])
}

pub fn load_poly(src: &str, max_degree: usize) -> Result<MultilinearPoly> {
    let mut v = load_polys(src, max_degree)?;
    if v.len() != 1 {
        return Err(Error::Usage(format!("`{src}` names {} polynomials, expected one", v.len())));
    }
    Ok(v.remove(0).1)
}

/// Parses `1=e, 2=x, 3=e` into an assignment.
pub fn parse_assignment(alg: &Loaded, s: &str) -> Result<BTreeMap<u32, Element>> {
    let mut out = BTreeMap::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (v, e) = part
            .split_once('=')
            .ok_or_else(|| Error::Usage(format!("assignment `{part}` is not VAR=ELEMENT")))?;
        let v = v.trim().trim_start_matches('x');
        let v: u32 = v.parse().map_err(|_| Error::Usage(format!("bad variable `{v}`")))?;
        out.insert(v, alg.element(e)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sources() {
        let a = load_algebra("catalog:eps_A:+1:4").unwrap();
        assert_eq!(a.algebra.name(), "eps_A(+1,4)");
        assert_eq!(load_algebra("catalog:jord_Bn:2").unwrap().algebra.dim(), 11);
        assert!(load_algebra("catalog:jord_Bn").is_err());
        assert!(load_algebra("jord_A").is_err());
        assert_eq!(load_polys("lib:malcev", 6).unwrap().len(), 3);
        assert_eq!(load_poly("family:malc_fn:3", 6).unwrap().degree(), 3);
        assert!(load_poly("family:malc_fn:7", 6).is_err());
        assert_eq!(load_poly("1/1*(x1 x2)", 6).unwrap().degree(), 2);
        let m = parse_assignment(&a, "1=y1, x2 = w1").unwrap();
        assert_eq!(m.len(), 2);
    }
}
