//! Towers of pure Tate fibrations.
//!
//! For a Zariski locally trivial fibration `X → Y` whose fibre `F` is pure
//! Tate and satisfies Poincaré duality, `M(X) ≅ M(Y) ⊗ M(F)`. At the level of
//! ranks this makes the Chow groups of `X` (and, column by column, its higher
//! Chow groups) the convolution of those of `Y` with the multiplicity vector
//! of `F`. An iterated tower applies this once per fibre.
//!
//! Only free ranks are tracked; torsion in the Chow groups of a general base
//! is outside the model.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::cellular::FibreSpec;
use crate::error::{Error, Result};
use crate::tate::{TateMotive, Twist};
use crate::weyl::OrbitCap;

/// The base `Y` of a tower.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseSpec {
    Point,
    /// A pure Tate base given by its motive.
    TateBase(TateMotive),
    /// A base known only through the free ranks of `CH^p(Y)`, `p = 0..=dim`.
    FreeChowBase {
        ranks: Vec<BigUint>,
        dim: Twist,
    },
}

impl BaseSpec {
    pub fn free_chow(ranks: Vec<BigUint>, dim: Twist) -> Result<Self> {
        let base = BaseSpec::FreeChowBase { ranks, dim };
        base.validate()?;
        Ok(base)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            BaseSpec::FreeChowBase { ranks, dim } if ranks.len() != *dim as usize + 1 => {
                Err(Error::InvalidBase(format!(
                    "{} Chow ranks given for a base of dimension {dim} (expected {})",
                    ranks.len(),
                    *dim as usize + 1
                )))
            }
            _ => Ok(()),
        }
    }

    /// The base motive, when the base has one.
    pub fn motive(&self) -> Option<TateMotive> {
        match self {
            BaseSpec::Point => Some(TateMotive::unit()),
            BaseSpec::TateBase(m) => Some(m.clone()),
            BaseSpec::FreeChowBase { .. } => None,
        }
    }

    pub fn dimension(&self) -> Twist {
        match self {
            BaseSpec::Point => 0,
            BaseSpec::TateBase(m) => m.max_twist().unwrap_or(0),
            BaseSpec::FreeChowBase { dim, .. } => *dim,
        }
    }

    /// Dense Chow rank vector of the base, of length `dimension() + 1`.
    pub fn chow_ranks(&self) -> Result<Vec<BigUint>> {
        self.validate()?;
        Ok(match self {
            BaseSpec::FreeChowBase { ranks, .. } => ranks.clone(),
            other => {
                let m = other.motive().expect("motive-valued base");
                (0..=other.dimension()).map(|p| m.chow_rank(p)).collect()
            }
        })
    }
}

/// A base followed by an ordered list of fibres.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerSpec {
    pub base: BaseSpec,
    pub fibres: Vec<FibreSpec>,
}

impl TowerSpec {
    pub fn new(base: BaseSpec, fibres: Vec<FibreSpec>) -> Self {
        Self { base, fibres }
    }

    /// A tower over a point.
    pub fn over_point(fibres: Vec<FibreSpec>) -> Self {
        Self::new(BaseSpec::Point, fibres)
    }

    /// `dim Y + Σ dim F_i`.
    pub fn dimension(&self) -> Result<Twist> {
        self.fibres
            .iter()
            .try_fold(self.base.dimension(), |acc, f| Ok(acc + f.dimension()?))
    }

    /// `M(Y) ⊗ M(F_1) ⊗ ... ⊗ M(F_k)`.
    pub fn motive(&self, cap: OrbitCap) -> Result<TateMotive> {
        self.base.validate()?;
        let base = self.base.motive().ok_or_else(|| {
            Error::Unsupported(
                "a base given by Chow ranks carries no motive; use the Chow rank vector instead"
                    .into(),
            )
        })?;
        self.fibres
            .iter()
            .try_fold(base, |acc, f| Ok(acc.tensor(&f.motive(cap)?)))
    }

    /// Ranks of `CH^p(X)` for `p = 0..=dim X`.
    pub fn chow_ranks(&self, cap: OrbitCap) -> Result<Vec<BigUint>> {
        let mut ranks = self.base.chow_ranks()?;
        for f in &self.fibres {
            ranks = convolve(&ranks, &dense(&f.motive(cap)?, f.dimension()?));
        }
        Ok(ranks)
    }
}

/// Coefficients `[m_0, ..., m_dim]` of a motive, zero padded.
fn dense(m: &TateMotive, dim: Twist) -> Vec<BigUint> {
    (0..=dim).map(|n| m.chow_rank(n)).collect()
}

/// Full linear convolution of two coefficient vectors.
pub fn convolve(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Bigraded ranks `(p, q) ↦ rank CH^p(X, q)`.
///
/// Iteration order is canonical: row-major by `q`, then `p`, ascending.
/// Zero entries are not stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RankTable {
    // keyed by (q, p) so BTreeMap order is the canonical order
    entries: BTreeMap<(Twist, Twist), BigUint>,
}

impl RankTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Column `q = 0` holding the given Chow ranks.
    pub fn from_chow_ranks(ranks: &[BigUint]) -> Self {
        let mut t = Self::new();
        for (p, r) in ranks.iter().enumerate() {
            t.add(p as Twist, 0, r.clone());
        }
        t
    }

    pub fn get(&self, p: Twist, q: Twist) -> BigUint {
        self.entries.get(&(q, p)).cloned().unwrap_or_default()
    }

    /// Adds `rank` to the entry at `(p, q)`.
    pub fn add(&mut self, p: Twist, q: Twist, rank: BigUint) {
        if !rank.is_zero() {
            *self.entries.entry((q, p)).or_default() += rank;
        }
    }

    /// `(p, q, rank)` in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (Twist, Twist, &BigUint)> + '_ {
        self.entries.iter().map(|(&(q, p), r)| (p, q, r))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_p(&self) -> Option<Twist> {
        self.entries.keys().map(|&(_, p)| p).max()
    }

    /// Dense column `p ↦ rank CH^p(X, q)` for `p = 0..=len-1`.
    pub fn slice(&self, q: Twist, len: usize) -> Vec<BigUint> {
        (0..len as Twist).map(|p| self.get(p, q)).collect()
    }

    /// Convolves every `q`-column with a fibre's multiplicity vector.
    pub fn tensor_fibre(&self, fibre: &TateMotive) -> RankTable {
        let mut out = RankTable::new();
        for (p, q, r) in self.iter() {
            for (i, m) in fibre.iter() {
                out.add(p + i, q, r * m);
            }
        }
        out
    }
}

/// Ranks of `CH^p(X, q)` from those of the base, one fibre at a time:
/// `CH^p(X, q) ≅ ⊕_i CH^{p-i}(Y, q) ⊗ CH_i(F)`.
pub fn higher_chow_table(
    base: &RankTable,
    fibres: &[FibreSpec],
    cap: OrbitCap,
) -> Result<RankTable> {
    fibres
        .iter()
        .try_fold(base.clone(), |acc, f| Ok(acc.tensor_fibre(&f.motive(cap)?)))
}

/// One weight-graded piece of a Chow–Künneth decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CKComponent {
    pub label: String,
    pub weight: i64,
    pub chow_ranks: Vec<BigUint>,
}

impl CKComponent {
    pub fn new(label: impl Into<String>, weight: i64, chow_ranks: Vec<BigUint>) -> Self {
        Self {
            label: label.into(),
            weight,
            chow_ranks,
        }
    }

    pub fn total_rank(&self) -> BigUint {
        self.chow_ranks.iter().sum()
    }
}

/// Chow–Künneth pieces of `X` from those of the base: every base piece is
/// tensored with each summand `1(-n)` of the fibre, which raises the weight
/// by `2n` and shifts the Chow ranks by `n`.
///
/// A twist of multiplicity `m > 1` yields `m` pieces labelled `…⊗L^n#1` to
/// `…⊗L^n#m`. Output is sorted by weight, then label.
pub fn ck_assemble(
    base: &[CKComponent],
    fibre: &FibreSpec,
    cap: OrbitCap,
) -> Result<Vec<CKComponent>> {
    let fibre = fibre.motive(cap)?;
    let mut out = Vec::new();
    for comp in base {
        for (n, m) in fibre.iter() {
            let copies: u64 = m
                .try_into()
                .map_err(|_| Error::InvalidArgument("fibre multiplicity too large".into()))?;
            let mut ranks = vec![BigUint::zero(); n as usize];
            ranks.extend(comp.chow_ranks.iter().cloned());
            for copy in 1..=copies {
                let label = if copies == 1 {
                    format!("{}⊗L^{n}", comp.label)
                } else {
                    format!("{}⊗L^{n}#{copy}", comp.label)
                };
                out.push(CKComponent::new(
                    label,
                    comp.weight + 2 * i64::from(n),
                    ranks.clone(),
                ));
            }
        }
    }
    out.sort_by(|a, b| a.weight.cmp(&b.weight).then_with(|| a.label.cmp(&b.label)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u32]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    fn fibre(s: &str) -> FibreSpec {
        s.parse().unwrap()
    }

    fn table(entries: &[(Twist, Twist, u32)]) -> RankTable {
        let mut t = RankTable::new();
        for &(p, q, r) in entries {
            t.add(p, q, r.into());
        }
        t
    }

    const CAP: OrbitCap = OrbitCap::DEFAULT;

    #[test]
    fn tower_motive_examples() {
        let t = TowerSpec::over_point(vec![fibre("P 1"), fibre("P 1")]);
        assert_eq!(
            t.motive(CAP).unwrap(),
            TateMotive::from_coefficients([1u32, 2, 1])
        );
        assert_eq!(
            TowerSpec::over_point(vec![]).motive(CAP).unwrap(),
            TateMotive::unit()
        );
        let gr = TowerSpec::over_point(vec![fibre("Gr 2 4")]);
        assert_eq!(
            gr.motive(CAP).unwrap(),
            TateMotive::from_coefficients([1u32, 1, 2, 1, 1])
        );
    }

    #[test]
    fn free_chow_base_has_no_motive() {
        let base = BaseSpec::free_chow(big(&[1, 2, 1]), 2).unwrap();
        let t = TowerSpec::new(base, vec![fibre("P 1")]);
        assert!(matches!(t.motive(CAP), Err(Error::Unsupported(_))));
        assert_eq!(t.chow_ranks(CAP).unwrap(), big(&[1, 3, 3, 1]));
    }

    #[test]
    fn free_chow_base_length_checked() {
        assert!(matches!(
            BaseSpec::free_chow(big(&[1, 2]), 2),
            Err(Error::InvalidBase(_))
        ));
    }

    #[test]
    fn chow_rank_examples() {
        let p2 = TowerSpec::over_point(vec![fibre("P 2")]);
        assert_eq!(p2.chow_ranks(CAP).unwrap(), big(&[1, 1, 1]));
        assert_eq!(
            TowerSpec::over_point(vec![]).chow_ranks(CAP).unwrap(),
            big(&[1])
        );
        let tate = BaseSpec::TateBase(TateMotive::from_coefficients([1u32, 1]));
        let t = TowerSpec::new(tate, vec![fibre("cells 0,2")]);
        assert_eq!(t.chow_ranks(CAP).unwrap(), big(&[1, 1, 1, 1]));
        assert_eq!(t.dimension().unwrap(), 3);
    }

    #[test]
    fn higher_chow_examples() {
        let p1 = [fibre("P 1")];
        assert_eq!(
            higher_chow_table(&table(&[(0, 0, 1)]), &p1, CAP).unwrap(),
            table(&[(0, 0, 1), (1, 0, 1)])
        );
        assert_eq!(
            higher_chow_table(&table(&[(1, 1, 1)]), &p1, CAP).unwrap(),
            table(&[(1, 1, 1), (2, 1, 1)])
        );
        assert_eq!(
            higher_chow_table(&table(&[(0, 0, 1), (1, 0, 1)]), &p1, CAP).unwrap(),
            table(&[(0, 0, 1), (1, 0, 2), (2, 0, 1)])
        );
    }

    #[test]
    fn rank_table_order_is_q_major() {
        let t = table(&[(3, 0, 1), (0, 1, 2), (1, 0, 4), (0, 0, 0)]);
        let order: Vec<(Twist, Twist)> = t.iter().map(|(p, q, _)| (p, q)).collect();
        assert_eq!(order, vec![(1, 0), (3, 0), (0, 1)]);
    }

    #[test]
    fn ck_examples() {
        let h0 = vec![CKComponent::new("h0", 0, big(&[1]))];
        assert_eq!(
            ck_assemble(&h0, &fibre("P 1"), CAP).unwrap(),
            vec![
                CKComponent::new("h0⊗L^0", 0, big(&[1])),
                CKComponent::new("h0⊗L^1", 2, big(&[0, 1])),
            ]
        );
        assert!(ck_assemble(&[], &fibre("Gr 2 4"), CAP).unwrap().is_empty());
        let gr = ck_assemble(&h0, &fibre("Gr 2 4"), CAP).unwrap();
        let weights: Vec<i64> = gr.iter().map(|c| c.weight).collect();
        assert_eq!(weights, vec![0, 2, 4, 4, 6, 8]);
        assert_eq!(gr[2].label, "h0⊗L^2#1");
        assert_eq!(gr[3].label, "h0⊗L^2#2");
        assert_eq!(gr[3].chow_ranks, big(&[0, 0, 1]));
    }

    #[test]
    fn ck_of_abelian_surface_base() {
        // Weights 0..4 with the Betti numbers of an abelian surface.
        let base: Vec<CKComponent> = [(0, 1u32), (1, 4), (2, 6), (3, 4), (4, 1)]
            .iter()
            .map(|&(w, b)| CKComponent::new(format!("h{w}"), w, big(&[b])))
            .collect();
        let out = ck_assemble(&base, &fibre("P 2"), CAP).unwrap();
        assert_eq!(out.len(), 15);
        let total: BigUint = out.iter().map(CKComponent::total_rank).sum();
        assert_eq!(total, BigUint::from(48u32));
        assert!(out.windows(2).all(|w| w[0].weight <= w[1].weight));
    }

    #[test]
    fn convolution_edge_cases() {
        assert!(convolve(&[], &big(&[1])).is_empty());
        assert_eq!(convolve(&big(&[2]), &big(&[1, 3])), big(&[2, 6]));
    }
}
