//! JSON wire formats for the library's exported artifacts.
//!
//! Laurent polynomials serialize as `{"lo": int, "coeffs": [int, ...]}`,
//! rationals as `"p/q"` strings, torus points as lists of rational strings,
//! and twisted involutions carry 1-based reduced words for w, z, u together
//! with the sign.  Keys of map-shaped exports are the compact index strings
//! produced by [`index_key`], so output bytes are deterministic.

use serde_json::{json, Map, Value};

use crate::barcanon::CanonicalBasisTable;
use crate::coeff::Laurent;
use crate::extweyl::TwistedInvolution;
use crate::heckemod::HeckeModule;
use crate::rootdata::{RootDatum, WeylElt};
use crate::torusquot::{torus_point_strings, TorusPoint};
use crate::Result;

/// `{"lo": ..., "coeffs": [...]}`; the zero polynomial has an empty run.
pub fn laurent_json(p: &Laurent) -> Value {
    if p.is_zero() {
        return json!({"lo": 0, "coeffs": []});
    }
    let lo = p.lowest_exponent();
    let coeffs: Vec<i64> = (lo..=p.highest_exponent()).map(|k| p.coeff(k)).collect();
    json!({"lo": lo, "coeffs": coeffs})
}

pub fn laurent_from_json(v: &Value) -> Option<Laurent> {
    let lo = v.get("lo")?.as_i64()?;
    let coeffs = v.get("coeffs")?.as_array()?;
    let terms: Option<Vec<(i64, i64)>> = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| Some((c.as_i64()?, lo + i as i64)))
        .collect();
    Some(Laurent::from_terms(&terms?))
}

/// A torus point as a list of `"p/q"` strings.
pub fn torus_point_json(lam: &TorusPoint) -> Value {
    Value::Array(
        torus_point_strings(lam)
            .into_iter()
            .map(Value::String)
            .collect(),
    )
}

/// The 1-based reduced word of an element, e.g. `[1, 2, 1]`.
pub fn word_json(d: &RootDatum, w: &WeylElt) -> Value {
    Value::Array(
        d.reduced_word(w)
            .into_iter()
            .map(|i| Value::from(i as u64 + 1))
            .collect(),
    )
}

/// Compact deterministic key for a twisted-involution index: the 1-based
/// reduced word of w joined by dots (`e` when empty), a `|`, then the λ
/// coordinates joined by commas.
pub fn index_key(d: &RootDatum, w: &WeylElt, lam: &TorusPoint) -> String {
    let word = d.reduced_word(w);
    let word_part = if word.is_empty() {
        "e".to_string()
    } else {
        word.iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(".")
    };
    format!("{}|{}", word_part, torus_point_strings(lam).join(","))
}

/// Full record for one twisted involution, decomposition and sign included.
pub fn twisted_involution_json(d: &RootDatum, ti: &TwistedInvolution) -> Value {
    json!({
        "w": word_json(d, &ti.w),
        "lambda": torus_point_json(&ti.lam),
        "z": word_json(d, &ti.z),
        "u": word_json(d, &ti.u),
        "sign": ti.sign,
    })
}

/// The action table of one generator: for every basis index, the image as
/// a list of `[target index, coefficient]` pairs.
pub fn action_table_json(module: &HeckeModule, s: usize) -> Result<Value> {
    let d = module.datum();
    let table = module.action_table(s)?;
    let rows: Vec<Value> = table
        .iter()
        .enumerate()
        .map(|(idx, row)| {
            let ti = module.element(idx);
            let terms: Vec<Value> = row
                .iter()
                .map(|(j, c)| {
                    let tj = module.element(*j);
                    json!([index_key(d, &tj.w, &tj.lam), laurent_json(c)])
                })
                .collect();
            json!({
                "source": index_key(d, &ti.w, &ti.lam),
                "image": terms,
            })
        })
        .collect();
    Ok(Value::Array(rows))
}

/// The canonical basis keyed by serialized index; each value is the list of
/// `[index, coefficient]` pairs of the canonical element.
pub fn canonical_table_json(module: &HeckeModule, table: &CanonicalBasisTable) -> Value {
    let d = module.datum();
    let mut map = Map::new();
    for (&idx, hat) in &table.elements {
        let ti = module.element(idx);
        let terms: Vec<Value> = hat
            .terms()
            .map(|(j, c)| {
                let tj = module.element(j);
                json!([index_key(d, &tj.w, &tj.lam), laurent_json(c)])
            })
            .collect();
        map.insert(index_key(d, &ti.w, &ti.lam), Value::Array(terms));
    }
    Value::Object(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::barcanon::canonical_basis;
    use crate::rootdata::{build_root_datum, CartanType};

    #[test]
    fn laurent_round_trip() {
        let p = Laurent::from_terms(&[(1, 2), (-1, -2), (-1, 0)]);
        let v = laurent_json(&p);
        assert_eq!(v, json!({"lo": -2, "coeffs": [-1, 0, -1, 0, 1]}));
        assert_eq!(laurent_from_json(&v), Some(p));
        assert_eq!(laurent_json(&Laurent::zero()), json!({"lo": 0, "coeffs": []}));
        assert_eq!(laurent_from_json(&json!({"lo": 0, "coeffs": []})), Some(Laurent::zero()));
    }

    #[test]
    fn point_and_index_keys() {
        let d = build_root_datum(&CartanType::parse("A2").unwrap()).unwrap();
        let lam = TorusPoint::from_fracs(&[0, 1], 2);
        assert_eq!(torus_point_json(&lam), json!(["0/1", "1/2"]));
        assert_eq!(index_key(&d, &d.identity(), &lam), "e|0/1,1/2");
        let w = d.word_to_element(&[0, 1]);
        assert_eq!(index_key(&d, &w, &lam), "1.2|0/1,1/2");
    }

    #[test]
    fn canonical_export_contains_anchor() {
        let d = build_root_datum(&CartanType::parse("A1").unwrap()).unwrap();
        let module = HeckeModule::new(&d, 2, 3).unwrap();
        let table = canonical_basis(&module, None, false).unwrap();
        let v = canonical_table_json(&module, &table);
        let hat_s0 = v.get("1|0/1").expect("canonical element at (s, 0)");
        // a_{s,0} + v⁻¹ a_{1,0}; the s-matrix sorts before the identity
        let expected = json!([
            ["1|0/1", {"lo": 0, "coeffs": [1]}],
            ["e|0/1", {"lo": -1, "coeffs": [1]}],
        ]);
        assert_eq!(hat_s0, &expected);
    }

    #[test]
    fn action_table_shape() {
        let d = build_root_datum(&CartanType::parse("A1").unwrap()).unwrap();
        let module = HeckeModule::new(&d, 2, 3).unwrap();
        let v = action_table_json(&module, 0).unwrap();
        let rows = v.as_array().unwrap();
        assert_eq!(rows.len(), 4);
        for row in rows {
            assert!(row.get("source").is_some());
            assert!(row.get("image").unwrap().as_array().is_some());
        }
    }
}
