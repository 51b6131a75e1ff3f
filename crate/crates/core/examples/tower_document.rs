//! Reads a tower from its JSON document and prints the JSON the CLI emits.

use motcalc::cli::decompose_tower;
use motcalc::cli::document::TowerDocument;
use motcalc::cli::render::decomposition_json;
use motcalc::OrbitCap;

const DOCUMENT: &str = r#"{
  "base": {"tate": {"0": 1, "1": 1}},
  "fibres": ["GP B 2 levi=1", "cells 0,1,1,2"]
}"#;

fn main() -> Result<(), motcalc::Error> {
    let tower = TowerDocument::parse(DOCUMENT)?.to_spec()?;
    let result = decompose_tower(tower, None, OrbitCap::DEFAULT)?;
    print!("{}", decomposition_json(&result));
    Ok(())
}
