//! JSON forms of engine objects and morphisms. Integers are written as
//! decimal strings; keys come out sorted.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::{Engine, FinSet, FinSetMap, FinSetObj};
use crate::chain::complex::matrix_json;
use crate::chain::{Chain, ChainComplex, ChainMap};
use crate::error::{invalid, Result};
use crate::sset::text::{parse_document, write_map, write_sset};
use crate::sset::{SSet, SimplicialMap, SimplicialSet};

pub trait Serial: Engine {
    fn obj_json(&self, x: &Self::Obj) -> Value;
    fn mor_json(&self, f: &Self::Mor) -> Value;
    fn mor_from_json(&self, v: &Value) -> Result<Self::Mor>;
}

/// Hex sha256 of the compact serialization.
pub fn digest(v: &Value) -> String {
    hex::encode(Sha256::digest(v.to_string().as_bytes()))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_str()
        .and_then(|s| s.parse().ok())
        .or_else(|| v.as_u64().map(|x| x as usize))
        .ok_or_else(|| invalid(format!("{what} must be a nonnegative integer")))
}

impl Serial for FinSet {
    fn obj_json(&self, x: &FinSetObj) -> Value {
        json!({ "size": x.0.to_string() })
    }

    fn mor_json(&self, f: &FinSetMap) -> Value {
        json!({
            "cod": f.cod.to_string(),
            "table": f.table.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        })
    }

    fn mor_from_json(&self, v: &Value) -> Result<FinSetMap> {
        let cod = as_usize(&v["cod"], "cod")?;
        let table = v["table"]
            .as_array()
            .ok_or_else(|| invalid("table must be a list"))?
            .iter()
            .map(|x| as_usize(x, "table entry"))
            .collect::<Result<Vec<_>>>()?;
        FinSetMap::new(cod, table)
    }
}

impl Serial for SSet {
    fn obj_json(&self, x: &SimplicialSet) -> Value {
        json!({
            "counts": x.counts().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "text": write_sset("X", x),
        })
    }

    fn mor_json(&self, f: &SimplicialMap) -> Value {
        let text = format!("{}{}{}", write_sset("dom", &f.dom), write_sset("cod", &f.cod), write_map("f", "dom", "cod", f));
        json!({ "text": text })
    }

    fn mor_from_json(&self, v: &Value) -> Result<SimplicialMap> {
        let text = v["text"].as_str().ok_or_else(|| invalid("simplicial map needs a `text` field"))?;
        parse_document(text)?.first_map().cloned().ok_or_else(|| invalid("no map in text"))
    }
}

impl Serial for Chain {
    fn obj_json(&self, x: &ChainComplex) -> Value {
        x.to_json()
    }

    fn mor_json(&self, f: &ChainMap) -> Value {
        let mats: Vec<Value> = f
            .dom
            .degrees()
            .map(|k| json!({ "degree": k.to_string(), "matrix": matrix_json(&f.matrix(k)) }))
            .collect();
        json!({ "dom": f.dom.to_json(), "cod": f.cod.to_json(), "matrices": mats })
    }

    fn mor_from_json(&self, _v: &Value) -> Result<ChainMap> {
        Err(invalid("chain maps are written for inspection only and are not read back"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{cell_inclusion, CellKind};

    #[test]
    fn round_trips() {
        let f = FinSetMap::new(3, vec![2, 0]).unwrap();
        assert_eq!(FinSet.mor_from_json(&FinSet.mor_json(&f)).unwrap(), f);
        let g = cell_inclusion(CellKind::Horn, 2, Some(0)).unwrap();
        assert_eq!(SSet.mor_from_json(&SSet.mor_json(&g)).unwrap(), g);
        assert_eq!(digest(&FinSet.mor_json(&f)).len(), 64);
    }
}
