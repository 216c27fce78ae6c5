//! The algebra file format:
//!
//! ```json
//! { "name": "G2", "field": "Q", "associative": true,
//!   "basis": [{"label": "e1", "parity": 1}, ...],
//!   "products": [{"l": "e1", "r": "e2", "value": [{"b": "e1e2", "c": "1/1"}]}] }
//! ```
//!
//! Omitted products are zero. Output uses sorted keys and row-major
//! product order, so reading and writing a file is byte-stable.

use serde::Deserialize;
use serde_json::{json, Value};
use std::collections::BTreeSet;

use superlab_core::algebra::{Element, Field, SuperAlgebra};
use superlab_core::poly::Parity;
use superlab_core::QEps;

use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct File {
    name: String,
    field: String,
    #[serde(default)]
    associative: bool,
    basis: Vec<Basis>,
    #[serde(default)]
    products: Vec<Product>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Basis {
    label: String,
    parity: u8,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Product {
    l: String,
    r: String,
    value: Vec<Coord>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Coord {
    b: String,
    c: String,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Usage(format!("algebra JSON: {}", msg.into()))
}

pub fn from_json(text: &str) -> Result<SuperAlgebra> {
    let f: File = serde_json::from_str(text)?;
    let field = match f.field.as_str() {
        "Q" => Field::Q,
        "Q(eps)" => Field::QEps,
        other => return Err(bad(format!("unknown field `{other}`"))),
    };
    let mut b = SuperAlgebra::builder(f.name).field(field).associative(f.associative);
    for e in &f.basis {
        let p = match e.parity {
            0 => Parity::Even,
            1 => Parity::Odd,
            n => return Err(bad(format!("parity of `{}` is {n}, expected 0 or 1", e.label))),
        };
        b.add_basis(e.label.clone(), p);
    }
    let mut seen = BTreeSet::new();
    for p in &f.products {
        let (i, j) = (b.index_of(&p.l)?, b.index_of(&p.r)?);
        if !seen.insert((i, j)) {
            return Err(bad(format!("product {} * {} listed twice", p.l, p.r)));
        }
        let mut pairs = Vec::new();
        for c in &p.value {
            let v: QEps = c.c.parse()?;
            if field == Field::Q && !v.is_rational() {
                return Err(bad(format!("coefficient `{}` is not rational but the field is Q", c.c)));
            }
            pairs.push((b.index_of(&c.b)?, v));
        }
        b.set_product(i, j, Element::from_pairs(pairs));
    }
    Ok(b.build()?)
}

pub fn to_value(alg: &SuperAlgebra) -> Value {
    let labels = alg.labels();
    let basis: Vec<Value> = labels
        .iter()
        .zip(alg.parities())
        .map(|(l, p)| json!({"label": l, "parity": p.bit()}))
        .collect();
    let products: Vec<Value> = alg
        .nonzero_products()
        .map(|(i, j, v)| {
            let value: Vec<Value> =
                v.coords().iter().map(|(k, c)| json!({"b": labels[*k], "c": c.to_text()})).collect();
            json!({"l": labels[i], "r": labels[j], "value": value})
        })
        .collect();
    json!({
        "name": alg.name(),
        "field": alg.field().name(),
        "associative": alg.associative(),
        "basis": basis,
        "products": products,
    })
}

pub fn to_json(alg: &SuperAlgebra) -> String {
    let mut s = serde_json::to_string_pretty(&to_value(alg)).expect("JSON values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use superlab_core::algebra::grassmann;

    #[test]
    fn round_trip_is_byte_stable() {
        for alg in [grassmann(2, true), superlab_core::catalog::alt_a().algebra] {
            let text = to_json(&alg);
            let back = from_json(&text).unwrap();
            assert_eq!(back, alg);
            assert_eq!(to_json(&back), text);
        }
    }

    #[test]
    fn rejects_malformed_files() {
        let base = r#"{"name":"t","field":"Q","basis":[{"label":"a","parity":0}],"products":[]}"#;
        assert!(from_json(base).is_ok());
        assert!(from_json(&base.replace("\"Q\"", "\"R\"")).is_err());
        assert!(from_json(&base.replace("\"parity\":0", "\"parity\":2")).is_err());
        let eps = base.replace("[]}", r#"[{"l":"a","r":"a","value":[{"b":"a","c":"1/1E"}]}]}"#);
        assert!(from_json(&eps).is_err());
        assert!(from_json(&eps.replace("\"Q\"", "\"Q(eps)\"")).is_ok());
        let unknown = base.replace("[]}", r#"[{"l":"a","r":"z","value":[]}]}"#);
        assert!(from_json(&unknown).is_err());
    }
}
