//! Data files under `fixtures/<type>/`, compiled into the crate.

use serde::Deserialize;

use crate::PresError;

#[derive(Clone, Debug, Deserialize)]
pub struct PresentationData {
    pub tag: String,
    pub variables: Vec<(String, i64)>,
    pub relations: Vec<String>,
    pub constants: ConstantsData,
    pub dictionary: Vec<(String, String)>,
    pub deformations: Vec<DeformationData>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ConstantsData {
    pub r: i64,
    pub k: usize,
    pub a: Vec<i64>,
}

/// `relation ≡ coefficient * q * t_direction (mod t m)`, with the relation
/// rewritten as `sum coeff * left * right` for the
/// four-point invariants `<left, right, direction, [pt]>_1`.
#[derive(Clone, Debug, Deserialize)]
pub struct DeformationData {
    pub relation: usize,
    pub direction: String,
    pub coefficient: String,
    pub route: Vec<(String, String, String)>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ProductData {
    pub products: Vec<ProductEntry>,
    pub lefschetz: Vec<LefschetzEntry>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ProductEntry {
    pub name: String,
    pub lhs: String,
    pub rhs: Vec<(String, String)>,
}

/// A class fixed either by `h * rhs = h_times` or by `rhs = value`.
#[derive(Clone, Debug, Deserialize)]
pub struct LefschetzEntry {
    pub name: String,
    #[serde(default)]
    pub h_times: Option<String>,
    #[serde(default)]
    pub value: Option<String>,
    pub rhs: Vec<(String, String)>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct GwData {
    pub invariants: Vec<GwEntry>,
    pub functionals: Vec<FunctionalEntry>,
}

/// `<[pt], classes...>_1`; the value `unbalanced` means the degrees do not add up.
#[derive(Clone, Debug, Deserialize)]
pub struct GwEntry {
    pub classes: Vec<String>,
    pub value: String,
}

/// `<[pt], fixed..., gamma>_1` as coefficients of `gamma`.
#[derive(Clone, Debug, Deserialize)]
pub struct FunctionalEntry {
    pub fixed: Vec<String>,
    pub expect: Vec<(String, String)>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct FamilyGwData {
    pub families: Vec<FamilyGwEntry>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct FamilyGwEntry {
    pub n: usize,
    pub invariants: Vec<GwEntry>,
    pub functionals: Vec<FunctionalEntry>,
}

fn raw(dir: &str, file: &str) -> Option<&'static str> {
    Some(match (dir, file) {
        ("E6", "presentations") => include_str!("../../../fixtures/E6/presentations.json"),
        ("E6", "products") => include_str!("../../../fixtures/E6/products.json"),
        ("E6", "gw") => include_str!("../../../fixtures/E6/gw.json"),
        ("E7", "presentations") => include_str!("../../../fixtures/E7/presentations.json"),
        ("E7", "products") => include_str!("../../../fixtures/E7/products.json"),
        ("E7", "gw") => include_str!("../../../fixtures/E7/gw.json"),
        ("E8", "presentations") => include_str!("../../../fixtures/E8/presentations.json"),
        ("E8", "products") => include_str!("../../../fixtures/E8/products.json"),
        ("E8", "gw") => include_str!("../../../fixtures/E8/gw.json"),
        ("F4", "presentations") => include_str!("../../../fixtures/F4/presentations.json"),
        ("F4", "products") => include_str!("../../../fixtures/F4/products.json"),
        ("F4", "gw") => include_str!("../../../fixtures/F4/gw.json"),
        ("D", "gw") => include_str!("../../../fixtures/D/gw.json"),
        _ => return None,
    })
}

fn load<T: for<'de> Deserialize<'de>>(dir: &str, file: &str) -> Result<T, PresError> {
    let text = raw(dir, file).ok_or_else(|| PresError::Fixture(format!("no {file}.json for {dir}")))?;
    serde_json::from_str(text).map_err(|e| PresError::Fixture(format!("{dir}/{file}.json: {e}")))
}

pub fn presentation_data(dir: &str) -> Result<PresentationData, PresError> {
    load(dir, "presentations")
}

pub fn product_data(dir: &str) -> Result<ProductData, PresError> {
    load(dir, "products")
}

pub fn gw_data(dir: &str) -> Result<GwData, PresError> {
    load(dir, "gw")
}

pub fn family_gw_data(dir: &str) -> Result<FamilyGwData, PresError> {
    load(dir, "gw")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_parses() {
        for t in ["E6", "E7", "E8", "F4"] {
            let p = presentation_data(t).unwrap();
            assert_eq!(p.tag, t);
            product_data(t).unwrap();
            gw_data(t).unwrap();
        }
        assert_eq!(family_gw_data("D").unwrap().families.len(), 5);
        assert!(presentation_data("G2").is_err());
    }
}
