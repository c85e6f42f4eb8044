//! Reference values for the D4 worked examples, embedded from `data/`.

use serde::Deserialize;

use crate::error::Result;

#[derive(Debug, Clone, Deserialize)]
pub struct Ex1 {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub s: usize,
    pub parabolic: Vec<usize>,
    pub words: Ex1Words,
    pub deformed_product: i64,
    pub pair: NamedPair,
    /// per entry, the elements `s_l u_k` passing the cover test
    pub entry_covers: Vec<Vec<String>>,
    pub products: Vec<ProductCheck>,
    pub divisor: String,
    pub divisor_extremal: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Ex1Words {
    pub u: String,
    pub v: String,
    pub w: String,
}

/// A 1-based entry and a word in the names `u`, `v`, `w`.
#[derive(Debug, Clone, Deserialize)]
pub struct NamedPair {
    pub j: usize,
    pub v: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct ProductCheck {
    pub words: Vec<String>,
    pub ordinary: i64,
    #[serde(default)]
    pub deformed: Option<i64>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Subbie {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub s: usize,
    pub parabolic: Vec<usize>,
    pub words: Vec<String>,
    pub type_i: Vec<String>,
    pub type_ii: Vec<String>,
    pub levi_rays: usize,
    /// `(Levi ray, image of its degree-0 shift)`; `"0"` is the zero tuple
    pub induction: Vec<(String, String)>,
    pub q: usize,
    pub c: usize,
    pub total: usize,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Apples {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub s: usize,
    pub parabolic: Vec<usize>,
    pub words: Vec<String>,
    /// 1-based node `k`; the inputs are `w_j omega_k` in entry `j`
    pub node: usize,
    pub actions: Vec<String>,
    /// per entry: `(l, basic class, (w_j omega_k)(alpha_l^vee))`
    pub coefficients: Vec<Vec<(usize, String, i64)>>,
    pub image: String,
    pub inequality_value: i64,
    pub in_cone: bool,
}

#[derive(Debug, Clone, Deserialize)]
pub struct P4Table {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub s: usize,
    pub parabolic: Vec<usize>,
    pub levi_rays: usize,
    pub levi_generators: Vec<String>,
    pub rows: Vec<P4Row>,
    pub exotic_example: ExoticExample,
}

#[derive(Debug, Clone, Deserialize)]
pub struct P4Row {
    pub words: Vec<String>,
    pub q: usize,
    pub c: usize,
    pub exotic: usize,
    pub total: usize,
}

#[derive(Debug, Clone, Deserialize)]
pub struct ExoticExample {
    /// 1-based row of the table
    pub row: usize,
    pub levi: String,
    pub image: String,
    pub summands: Vec<String>,
}

pub const EX1_JSON: &str = include_str!("../data/ex1.json");
pub const SUBBIE_JSON: &str = include_str!("../data/subbie.json");
pub const APPLES_JSON: &str = include_str!("../data/apples.json");
pub const P4_TABLE_JSON: &str = include_str!("../data/p4_table.json");

pub fn ex1() -> Result<Ex1> {
    Ok(serde_json::from_str(EX1_JSON)?)
}

pub fn subbie() -> Result<Subbie> {
    Ok(serde_json::from_str(SUBBIE_JSON)?)
}

pub fn apples() -> Result<Apples> {
    Ok(serde_json::from_str(APPLES_JSON)?)
}

pub fn p4_table() -> Result<P4Table> {
    Ok(serde_json::from_str(P4_TABLE_JSON)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_data_parses() {
        let e = ex1().unwrap();
        assert_eq!(e.products.len(), 3);
        assert!(!e.notes.is_empty());
        assert_eq!(subbie().unwrap().induction.len(), 9);
        assert_eq!(apples().unwrap().coefficients.len(), 3);
        let p4 = p4_table().unwrap();
        assert_eq!(p4.rows.len(), 7);
        for r in &p4.rows {
            assert_eq!(r.total + r.c + r.exotic, r.q + p4.levi_rays);
        }
    }
}
