//! Pure Tate motives as graded multiplicity vectors.
//!
//! A pure Tate motive `⊕_n 1(-n)^{m_n}` is determined up to isomorphism by its
//! multiplicities, so it is stored as a finitely supported map from the twist
//! index `n` to `m_n`. Writing `L = 1(-1)` for the Lefschetz motive, the same
//! data is the polynomial `Σ m_n L^n`: direct sum adds polynomials, tensor
//! product multiplies them, and `m_n` is the rank of `CH_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Twist index of a summand `1(-n)`.
pub type Twist = u32;

/// An effective pure Tate motive `⊕_n 1(-n)^{m_n}`.
///
/// Zero multiplicities are never stored, so derived equality is equality of
/// isomorphism classes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TateMotive {
    mult: BTreeMap<Twist, BigUint>,
}

impl TateMotive {
    /// The zero motive.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The motive `1` of a point.
    pub fn unit() -> Self {
        Self::lefschetz_power(0)
    }

    /// `L^n = 1(-n)`.
    pub fn lefschetz_power(n: Twist) -> Self {
        let mut mult = BTreeMap::new();
        mult.insert(n, BigUint::one());
        Self { mult }
    }

    /// Builds a motive from `(twist, multiplicity)` pairs. Repeated twists are
    /// summed and zero multiplicities dropped.
    pub fn from_multiplicities<I, M>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, M)>,
        M: Into<BigUint>,
    {
        let mut mult: BTreeMap<Twist, BigUint> = BTreeMap::new();
        for (twist, m) in pairs {
            let twist = Twist::try_from(twist).map_err(|_| Error::NegativeTwist(twist))?;
            let m = m.into();
            if !m.is_zero() {
                *mult.entry(twist).or_default() += m;
            }
        }
        Ok(Self { mult })
    }

    /// Builds a motive from a dense coefficient vector, index = twist.
    pub fn from_coefficients<M: Into<BigUint>>(coeffs: impl IntoIterator<Item = M>) -> Self {
        let mult = coeffs
            .into_iter()
            .enumerate()
            .map(|(n, m)| (n as Twist, m.into()))
            .filter(|(_, m)| !m.is_zero())
            .collect();
        Self { mult }
    }

    /// Motive of a cellular variety with affine cells of the given dimensions.
    pub fn from_cells(cells: &[Twist]) -> Self {
        let mut mult: BTreeMap<Twist, BigUint> = BTreeMap::new();
        for &d in cells {
            *mult.entry(d).or_default() += 1u32;
        }
        Self { mult }
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut mult = self.mult.clone();
        for (&n, m) in &other.mult {
            *mult.entry(n).or_default() += m;
        }
        Self { mult }
    }

    /// Tensor product: twists add, so multiplicity vectors convolve.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut mult: BTreeMap<Twist, BigUint> = BTreeMap::new();
        for (&i, a) in &self.mult {
            for (&j, b) in &other.mult {
                *mult.entry(i + j).or_default() += a * b;
            }
        }
        Self { mult }
    }

    /// `M ⊗ L^k`, i.e. the twist `M(-k)`.
    pub fn twist(&self, k: Twist) -> Self {
        let mult = self.mult.iter().map(|(&n, m)| (n + k, m.clone())).collect();
        Self { mult }
    }

    /// Total rank `Σ_n m_n`; the number of cells for a cellular variety.
    pub fn rank(&self) -> BigUint {
        self.mult.values().sum()
    }

    /// Rank of `CH_p`, i.e. the multiplicity of `1(-p)`.
    pub fn chow_rank(&self, p: Twist) -> BigUint {
        self.mult.get(&p).cloned().unwrap_or_default()
    }

    /// Whether the multiplicities form a palindrome on `[0, d]` and vanish
    /// beyond `d`, as Poincaré duality forces for a `d`-dimensional variety.
    pub fn is_self_dual(&self, d: Twist) -> bool {
        if self.max_twist().is_some_and(|top| top > d) {
            return false;
        }
        self.mult
            .iter()
            .all(|(&n, m)| self.mult.get(&(d - n)) == Some(m))
    }

    /// Largest twist with nonzero multiplicity.
    pub fn max_twist(&self) -> Option<Twist> {
        self.mult.keys().next_back().copied()
    }

    /// Nonzero `(twist, multiplicity)` pairs in ascending twist order.
    pub fn iter(&self) -> impl Iterator<Item = (Twist, &BigUint)> + '_ {
        self.mult.iter().map(|(&n, m)| (n, m))
    }

    /// Dense coefficient vector `[m_0, m_1, ..., m_top]`; empty for zero.
    pub fn coefficients(&self) -> Vec<BigUint> {
        match self.max_twist() {
            None => Vec::new(),
            Some(top) => (0..=top).map(|n| self.chow_rank(n)).collect(),
        }
    }

    /// The `twist:mult` listing used in tabular output, e.g. `0:1 1:2 2:1`.
    pub fn multiplicity_line(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.iter()
            .map(|(n, m)| format!("{n}:{m}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Renders `Σ m_n L^n` in ascending powers, e.g. `1 + 2·L^2 + L^4`.
impl fmt::Display for TateMotive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (n, m)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let power = match n {
                0 => None,
                1 => Some("L".to_string()),
                _ => Some(format!("L^{n}")),
            };
            match power {
                None => write!(f, "{m}")?,
                Some(p) if m.is_one() => f.write_str(&p)?,
                Some(p) => write!(f, "{m}·{p}")?,
            }
        }
        Ok(())
    }
}

impl Add for &TateMotive {
    type Output = TateMotive;

    fn add(self, rhs: Self) -> TateMotive {
        self.direct_sum(rhs)
    }
}

impl Mul for &TateMotive {
    type Output = TateMotive;

    fn mul(self, rhs: Self) -> TateMotive {
        self.tensor(rhs)
    }
}

impl std::iter::Sum for TateMotive {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, m| acc.direct_sum(&m))
    }
}

impl std::iter::Product for TateMotive {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::unit(), |acc, m| acc.tensor(&m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn motive(pairs: &[(i64, u32)]) -> TateMotive {
        TateMotive::from_multiplicities(pairs.iter().copied()).unwrap()
    }

    fn p1() -> TateMotive {
        motive(&[(0, 1), (1, 1)])
    }

    #[test]
    fn unit_is_point() {
        assert_eq!(TateMotive::unit(), motive(&[(0, 1)]));
        assert_eq!(TateMotive::unit().rank(), BigUint::one());
    }

    #[test]
    fn direct_sum_examples() {
        let a = TateMotive::unit().direct_sum(&TateMotive::lefschetz_power(1));
        assert_eq!(a, p1());
        assert_eq!(p1().direct_sum(&TateMotive::zero()), p1());
        assert_eq!(
            motive(&[(0, 1), (2, 3)]).direct_sum(&motive(&[(2, 1)])),
            motive(&[(0, 1), (2, 4)])
        );
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(p1().tensor(&p1()), motive(&[(0, 1), (1, 2), (2, 1)]));
        assert_eq!(p1().tensor(&TateMotive::unit()), p1());
        let p2 = motive(&[(0, 1), (1, 1), (2, 1)]);
        assert_eq!(p2.tensor(&p1()), motive(&[(0, 1), (1, 2), (2, 2), (3, 1)]));
    }

    #[test]
    fn twist_examples() {
        assert_eq!(TateMotive::unit().twist(3), motive(&[(3, 1)]));
        assert_eq!(p1().twist(1), motive(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn rank_and_chow_rank() {
        let p2 = TateMotive::from_coefficients([1u32, 1, 1]);
        assert_eq!(p2.rank(), BigUint::from(3u32));
        assert!(TateMotive::zero().rank().is_zero());
        let gr24 = TateMotive::from_coefficients([1u32, 1, 2, 1, 1]);
        assert_eq!(gr24.rank(), BigUint::from(6u32));
        assert_eq!(gr24.chow_rank(2), BigUint::from(2u32));
        assert!(TateMotive::unit().chow_rank(1).is_zero());
        assert_eq!(p1().chow_rank(1), BigUint::one());
    }

    #[test]
    fn self_duality() {
        let gr24 = TateMotive::from_coefficients([1u32, 1, 2, 1, 1]);
        assert!(gr24.is_self_dual(4));
        assert!(!gr24.is_self_dual(5));
        assert!(!gr24.is_self_dual(3));
        assert!(TateMotive::unit().is_self_dual(0));
        assert!(!motive(&[(0, 1), (1, 2)]).is_self_dual(1));
    }

    #[test]
    fn negative_twist_rejected() {
        assert_eq!(
            TateMotive::from_multiplicities([(-1i64, 1u32)]),
            Err(Error::NegativeTwist(-1))
        );
    }

    #[test]
    fn zero_multiplicities_normalize_away() {
        assert_eq!(motive(&[(0, 1), (3, 0)]), TateMotive::unit());
        assert_eq!(TateMotive::from_coefficients([0u32, 0]), TateMotive::zero());
        assert_eq!(motive(&[(2, 1), (2, 2)]), motive(&[(2, 3)]));
    }

    #[test]
    fn rendering() {
        assert_eq!(TateMotive::unit().to_string(), "1");
        assert_eq!(TateMotive::zero().to_string(), "0");
        assert_eq!(
            motive(&[(0, 1), (2, 2), (4, 1)]).to_string(),
            "1 + 2·L^2 + L^4"
        );
        assert_eq!(
            TateMotive::from_coefficients([1u32, 1, 2, 1, 1]).to_string(),
            "1 + L + 2·L^2 + L^3 + L^4"
        );
        assert_eq!(motive(&[(0, 3), (1, 5)]).to_string(), "3 + 5·L");
        assert_eq!(motive(&[(1, 1), (2, 1)]).multiplicity_line(), "1:1 2:1");
    }

    #[test]
    fn multiplicities_exceed_u64() {
        // (1 + L)^70 has central coefficient C(70,35) > 2^64.
        let big = (0..70).map(|_| p1()).product::<TateMotive>();
        let central = big.chow_rank(35);
        assert!(central > BigUint::from(u64::MAX));
        assert_eq!(central.to_string(), "112186277816662845432");
        assert_eq!(big.rank(), BigUint::one() << 70);
    }

    fn small_motive() -> impl Strategy<Value = TateMotive> {
        proptest::collection::vec(0u32..4, 0..6).prop_map(TateMotive::from_coefficients)
    }

    fn palindrome() -> impl Strategy<Value = (TateMotive, Twist)> {
        proptest::collection::vec(0u32..4, 1..4).prop_map(|half| {
            let mut full = half.clone();
            full.extend(half.iter().rev().skip(1));
            // Keep the top coefficient nonzero so the dimension is exact.
            full[0] += 1;
            let last = full.len() - 1;
            full[last] = full[0];
            let d = last as Twist;
            (TateMotive::from_coefficients(full), d)
        })
    }

    proptest! {
        #[test]
        fn tensor_is_commutative_associative_unital(a in small_motive(), b in small_motive(), c in small_motive()) {
            prop_assert_eq!(a.tensor(&b), b.tensor(&a));
            prop_assert_eq!(a.tensor(&b).tensor(&c), a.tensor(&b.tensor(&c)));
            prop_assert_eq!(a.tensor(&TateMotive::unit()), a.clone());
        }

        #[test]
        fn direct_sum_is_commutative_associative(a in small_motive(), b in small_motive(), c in small_motive()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &TateMotive::zero(), a.clone());
        }

        #[test]
        fn tensor_distributes(a in small_motive(), b in small_motive(), c in small_motive()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn rank_is_additive_and_multiplicative(a in small_motive(), b in small_motive()) {
            prop_assert_eq!((&a + &b).rank(), a.rank() + b.rank());
            prop_assert_eq!((&a * &b).rank(), a.rank() * b.rank());
        }

        #[test]
        fn twist_shifts_chow_ranks(a in small_motive(), k in 0u32..5, j in 0u32..5) {
            prop_assert_eq!(a.twist(k).twist(j), a.twist(k + j));
            prop_assert_eq!(a.twist(k).chow_rank(k + j), a.chow_rank(j));
            for p in 0..k {
                prop_assert!(a.twist(k).chow_rank(p).is_zero());
            }
        }

        #[test]
        fn self_duality_is_tensor_stable((a, da) in palindrome(), (b, db) in palindrome()) {
            prop_assert!(a.is_self_dual(da));
            prop_assert!(b.is_self_dual(db));
            prop_assert!(a.tensor(&b).is_self_dual(da + db));
        }
    }
}
