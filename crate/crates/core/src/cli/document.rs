//! JSON documents read and written by the CLI.
//!
//! Tower document:
//!
//! ```json
//! {
//!   "base": "point",
//!   "fibres": ["Gr 2 4", "P 1", "GP B 3 levi=2,3", "cells 0,1,1,2"]
//! }
//! ```
//!
//! `base` is `"point"`, `{"tate": {"<twist>": <mult>, ...}}`, or
//! `{"chow_ranks": [<rank>, ...], "dim": <n>}`. Multiplicities and ranks may
//! be JSON integers or decimal strings; output always uses strings.
//!
//! Rank table document: `{"entries": [{"p": 0, "q": 0, "rank": 1}, ...]}`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::cellular::FibreSpec;
use crate::error::{Error, Result};
use crate::tate::{TateMotive, Twist};
use crate::tower::{BaseSpec, RankTable, TowerSpec};

/// A nonnegative integer given either as a JSON number or a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum Count {
    Small(u64),
    Text(String),
}

impl Count {
    pub fn to_biguint(&self) -> Result<BigUint> {
        match self {
            Count::Small(n) => Ok(BigUint::from(*n)),
            Count::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("`{s}` is not a nonnegative integer"))),
        }
    }
}

impl Serialize for Count {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Count::Small(n) => s.serialize_str(&n.to_string()),
            Count::Text(t) => s.serialize_str(t),
        }
    }
}

impl From<&BigUint> for Count {
    fn from(n: &BigUint) -> Self {
        Count::Text(n.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BaseDocument {
    Named(String),
    Tate(TateBaseDocument),
    Chow(ChowBaseDocument),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TateBaseDocument {
    pub tate: BTreeMap<String, Count>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChowBaseDocument {
    pub chow_ranks: Vec<Count>,
    pub dim: Twist,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TowerDocument {
    pub base: BaseDocument,
    #[serde(default)]
    pub fibres: Vec<String>,
}

impl TowerDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::InvalidArgument(format!("tower document: {e}")))
    }

    pub fn to_spec(&self) -> Result<TowerSpec> {
        let fibres = self
            .fibres
            .iter()
            .enumerate()
            .map(|(i, f)| {
                f.parse::<FibreSpec>()
                    .map_err(|e| Error::InvalidArgument(format!("fibres[{i}]: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TowerSpec::new(self.base.to_spec()?, fibres))
    }

    /// Canonical document for a tower.
    pub fn from_spec(tower: &TowerSpec) -> Self {
        Self {
            base: BaseDocument::from_spec(&tower.base),
            fibres: tower.fibres.iter().map(|f| f.to_string()).collect(),
        }
    }
}

impl BaseDocument {
    pub fn to_spec(&self) -> Result<BaseSpec> {
        match self {
            BaseDocument::Named(name) if name == "point" => Ok(BaseSpec::Point),
            BaseDocument::Named(other) => Err(Error::InvalidBase(format!(
                "unknown base `{other}` (expected \"point\", {{\"tate\": ...}} or {{\"chow_ranks\": ..., \"dim\": ...}})"
            ))),
            BaseDocument::Tate(doc) => {
                let pairs = doc
                    .tate
                    .iter()
                    .map(|(twist, m)| {
                        let twist: i64 = twist.trim().parse().map_err(|_| {
                            Error::InvalidBase(format!("twist `{twist}` is not an integer"))
                        })?;
                        Ok((twist, m.to_biguint()?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(BaseSpec::TateBase(TateMotive::from_multiplicities(pairs)?))
            }
            BaseDocument::Chow(doc) => {
                let ranks = doc
                    .chow_ranks
                    .iter()
                    .map(Count::to_biguint)
                    .collect::<Result<Vec<_>>>()?;
                BaseSpec::free_chow(ranks, doc.dim)
            }
        }
    }

    pub fn from_spec(base: &BaseSpec) -> Self {
        match base {
            BaseSpec::Point => BaseDocument::Named("point".into()),
            BaseSpec::TateBase(m) => BaseDocument::Tate(TateBaseDocument {
                tate: m.iter().map(|(n, c)| (n.to_string(), c.into())).collect(),
            }),
            BaseSpec::FreeChowBase { ranks, dim } => BaseDocument::Chow(ChowBaseDocument {
                chow_ranks: ranks.iter().map(Count::from).collect(),
                dim: *dim,
            }),
        }
    }

    /// Inline syntax: `point`, `tate 0:1,2:3`, or `chow 1,2,1`.
    pub fn parse_inline(s: &str) -> Result<BaseSpec> {
        let s = s.trim();
        let bad = |reason: &str| Error::InvalidBase(format!("`{s}`: {reason}"));
        let (head, rest) = s.split_once(char::is_whitespace).unwrap_or((s, ""));
        match head {
            "point" if rest.trim().is_empty() => Ok(BaseSpec::Point),
            "tate" => {
                let pairs = rest
                    .split(',')
                    .map(|pair| {
                        let (t, m) = pair
                            .trim()
                            .split_once(':')
                            .ok_or_else(|| bad("expected twist:mult pairs"))?;
                        let t: i64 = t.trim().parse().map_err(|_| bad("bad twist"))?;
                        let m: BigUint = m.trim().parse().map_err(|_| bad("bad multiplicity"))?;
                        Ok((t, m))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(BaseSpec::TateBase(TateMotive::from_multiplicities(pairs)?))
            }
            "chow" => {
                let ranks = rest
                    .split(',')
                    .map(|r| r.trim().parse::<BigUint>().map_err(|_| bad("bad rank")))
                    .collect::<Result<Vec<_>>>()?;
                let dim = ranks.len() as Twist - 1;
                BaseSpec::free_chow(ranks, dim)
            }
            _ => Err(bad("expected `point`, `tate t:m,...` or `chow r0,r1,...`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankEntry {
    pub p: Twist,
    pub q: Twist,
    pub rank: Count,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankTableDocument {
    pub entries: Vec<RankEntry>,
}

impl RankTableDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("rank table: {e}")))
    }

    pub fn to_table(&self) -> Result<RankTable> {
        let mut table = RankTable::new();
        for e in &self.entries {
            table.add(e.p, e.q, e.rank.to_biguint()?);
        }
        Ok(table)
    }

    /// Canonical document: entries row-major by `q`, then `p`.
    pub fn from_table(table: &RankTable) -> Self {
        Self {
            entries: table
                .iter()
                .map(|(p, q, r)| RankEntry {
                    p,
                    q,
                    rank: r.into(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_base_forms() {
        let doc = TowerDocument::parse(r#"{"base": "point", "fibres": ["Gr 2 4"]}"#).unwrap();
        assert_eq!(doc.to_spec().unwrap().base, BaseSpec::Point);

        let doc = TowerDocument::parse(r#"{"base": {"tate": {"0": 1, "2": "3"}}}"#).unwrap();
        assert_eq!(
            doc.to_spec().unwrap().base,
            BaseSpec::TateBase(TateMotive::from_coefficients([1u32, 0, 3]))
        );

        let doc =
            TowerDocument::parse(r#"{"base": {"chow_ranks": [1, 2, 1], "dim": 2}, "fibres": []}"#)
                .unwrap();
        assert!(matches!(
            doc.to_spec().unwrap().base,
            BaseSpec::FreeChowBase { dim: 2, .. }
        ));
    }

    #[test]
    fn rejects_bad_documents() {
        for text in [
            r#"{"base": "point", "extra": 1}"#,
            r#"{"base": {"tate": {"0": 1}, "x": 2}}"#,
            r#"{"fibres": []}"#,
            r#"{"base": "point", "fibres": ["Gr 2 4",]}"#,
        ] {
            assert!(TowerDocument::parse(text).is_err(), "{text}");
        }
        for text in [
            r#"{"base": "line"}"#,
            r#"{"base": {"tate": {"-1": 1}}}"#,
            r#"{"base": {"chow_ranks": [1, 1], "dim": 2}}"#,
            r#"{"base": "point", "fibres": ["Gr 5 2"]}"#,
        ] {
            let doc = TowerDocument::parse(text).unwrap();
            assert!(doc.to_spec().is_err(), "{text}");
        }
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = TowerDocument::parse("{\n  \"base\": point\n}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn canonical_documents_roundtrip() {
        let doc = TowerDocument::parse(
            r#"{"base": {"tate": {"3": 2, "0": 1}}, "fibres": ["GP A 3 levi=3,1", "cells 2,0"]}"#,
        )
        .unwrap();
        let spec = doc.to_spec().unwrap();
        let canon = TowerDocument::from_spec(&spec);
        assert_eq!(canon.fibres, vec!["GP A 3 levi=1,3", "cells 2,0"]);
        let text = serde_json::to_string(&canon).unwrap();
        assert_eq!(
            text,
            r#"{"base":{"tate":{"0":"1","3":"2"}},"fibres":["GP A 3 levi=1,3","cells 2,0"]}"#
        );
        assert_eq!(
            TowerDocument::parse(&text).unwrap().to_spec().unwrap(),
            spec
        );
    }

    #[test]
    fn inline_bases() {
        assert_eq!(
            BaseDocument::parse_inline("point").unwrap(),
            BaseSpec::Point
        );
        assert_eq!(
            BaseDocument::parse_inline("tate 0:1, 1:2").unwrap(),
            BaseSpec::TateBase(TateMotive::from_coefficients([1u32, 2]))
        );
        assert!(matches!(
            BaseDocument::parse_inline("chow 1,4,1").unwrap(),
            BaseSpec::FreeChowBase { dim: 2, .. }
        ));
        assert!(BaseDocument::parse_inline("tate -1:1").is_err());
        assert!(BaseDocument::parse_inline("curve").is_err());
    }

    #[test]
    fn rank_tables() {
        let doc = RankTableDocument::parse(
            r#"{"entries": [{"p": 1, "q": 1, "rank": 2}, {"p": 0, "q": 0, "rank": "1"}]}"#,
        )
        .unwrap();
        let table = doc.to_table().unwrap();
        let canon = RankTableDocument::from_table(&table);
        assert_eq!(canon.entries[0].p, 0);
        assert_eq!(canon.entries[1].q, 1);
        assert!(RankTableDocument::parse(r#"{"entries": [{"p": 0, "q": 0}]}"#).is_err());
    }
}
