//! Table and JSON renderings of command results.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use super::document::{RankTableDocument, TowerDocument};
use crate::tate::{TateMotive, Twist};
use crate::tower::{RankTable, TowerSpec};
use crate::weyl::{CosetLengthProfile, ParabolicSpec, RootSystem};

/// Everything `decompose` reports about one tower.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub tower: TowerSpec,
    pub fibres: Vec<FibreRow>,
    pub dimension: Twist,
    pub motive: Option<TateMotive>,
    pub chow_ranks: Vec<BigUint>,
    pub higher_chow: Option<RankTable>,
}

#[derive(Debug, Clone)]
pub struct FibreRow {
    pub spec: String,
    pub dimension: Twist,
    pub motive: TateMotive,
}

impl FibreRow {
    fn self_dual(&self) -> bool {
        self.motive.is_self_dual(self.dimension)
    }
}

impl Decomposition {
    pub fn total_rank(&self) -> BigUint {
        self.chow_ranks.iter().sum()
    }

    pub fn poincare_polynomial(&self) -> String {
        TateMotive::from_coefficients(self.chow_ranks.iter().cloned()).to_string()
    }
}

fn motive_json(m: &TateMotive) -> Value {
    Value::Object(
        m.iter()
            .map(|(n, c)| (n.to_string(), Value::String(c.to_string())))
            .collect::<Map<_, _>>(),
    )
}

fn counts_json(v: &[BigUint]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(c.to_string())).collect())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn decomposition_json(d: &Decomposition) -> String {
    let tower = serde_json::to_value(TowerDocument::from_spec(&d.tower)).expect("serializable");
    let fibres: Vec<Value> = d
        .fibres
        .iter()
        .map(|f| {
            json!({
                "fibre": f.spec,
                "dimension": f.dimension,
                "rank": f.motive.rank().to_string(),
                "motive": motive_json(&f.motive),
                "polynomial": f.motive.to_string(),
                "self_dual": f.self_dual(),
            })
        })
        .collect();
    let mut doc = json!({
        "tower": tower,
        "fibres": fibres,
        "dimension": d.dimension,
        "motive": d.motive.as_ref().map_or(Value::Null, motive_json),
        "polynomial": d.poincare_polynomial(),
        "chow_ranks": counts_json(&d.chow_ranks),
        "total_rank": d.total_rank().to_string(),
    });
    if let Some(table) = &d.higher_chow {
        doc["higher_chow"] = rank_table_value(table);
    }
    pretty(&doc)
}

fn rank_table_value(table: &RankTable) -> Value {
    serde_json::to_value(RankTableDocument::from_table(table)).expect("serializable")
}

pub fn rank_table_json(table: &RankTable) -> String {
    pretty(&rank_table_value(table))
}

pub fn rank_table_text(table: &RankTable) -> String {
    let mut out = format!("{:>4} {:>4}  {}\n", "q", "p", "rank");
    for (p, q, r) in table.iter() {
        let _ = writeln!(out, "{q:>4} {p:>4}  {r}");
    }
    out
}

pub fn decomposition_table(d: &Decomposition) -> String {
    let mut out = String::new();
    let base = match serde_json::to_value(TowerDocument::from_spec(&d.tower).base) {
        Ok(Value::String(s)) => s,
        Ok(v) => v.to_string(),
        Err(_) => unreachable!("serializable"),
    };
    let _ = writeln!(out, "{:<12}{}", "base", base);
    for (i, f) in d.fibres.iter().enumerate() {
        let flag = if f.self_dual() {
            ""
        } else {
            "  (not self-dual)"
        };
        let _ = writeln!(
            out,
            "{:<12}{:<20}dim {:<4}rank {:<6}{}{}",
            format!("fibre {}", i + 1),
            f.spec,
            f.dimension,
            f.motive.rank(),
            f.motive,
            flag
        );
    }
    let _ = writeln!(out, "{:<12}{}", "dimension", d.dimension);
    let mult = d
        .motive
        .as_ref()
        .map_or_else(|| "-".to_string(), TateMotive::multiplicity_line);
    let _ = writeln!(out, "{:<12}{}", "motive", mult);
    let _ = writeln!(out, "{:<12}{}", "polynomial", d.poincare_polynomial());
    let ranks: Vec<String> = d.chow_ranks.iter().map(|r| r.to_string()).collect();
    let _ = writeln!(out, "{:<12}{}", "chow ranks", ranks.join(" "));
    let _ = writeln!(out, "{:<12}{}", "total rank", d.total_rank());
    if let Some(table) = &d.higher_chow {
        out.push_str("higher chow\n");
        out.push_str(&rank_table_text(table));
    }
    out
}

pub struct GpResult<'a> {
    pub system: &'a RootSystem,
    pub parabolic: &'a ParabolicSpec,
    pub profile: &'a CosetLengthProfile,
    pub dimension: usize,
}

pub fn gp_table(r: &GpResult<'_>) -> String {
    let levi = if r.parabolic.levi().is_empty() {
        "(none)".to_string()
    } else {
        r.parabolic.to_string()
    };
    let lengths: Vec<String> = r
        .profile
        .lengths
        .iter()
        .map(|(l, c)| format!("{l}:{c}"))
        .collect();
    let mut out = String::new();
    let _ = writeln!(out, "{:<12}{}", "group", r.system);
    let _ = writeln!(out, "{:<12}{}", "levi", levi);
    let _ = writeln!(out, "{:<12}{}", "cosets", r.profile.total);
    let _ = writeln!(out, "{:<12}{}", "dimension", r.dimension);
    let _ = writeln!(out, "{:<12}{}", "lengths", lengths.join(" "));
    let _ = writeln!(out, "{:<12}{}", "motive", r.profile.to_motive());
    out
}

pub fn gp_json(r: &GpResult<'_>) -> String {
    let lengths: Map<String, Value> = r
        .profile
        .lengths
        .iter()
        .map(|(l, c)| (l.to_string(), Value::String(c.to_string())))
        .collect();
    pretty(&json!({
        "type": r.system.family().letter().to_string(),
        "rank": r.system.rank(),
        "levi": r.parabolic.levi().iter().collect::<Vec<_>>(),
        "cosets": r.profile.total.to_string(),
        "dimension": r.dimension,
        "lengths": lengths,
        "motive": r.profile.to_motive().to_string(),
        "palindromic": r.profile.is_palindromic(),
    }))
}
