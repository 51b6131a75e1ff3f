//! Finite root systems and minimal parabolic coset representatives.
//!
//! The cosets `W/W_P` are enumerated as the `W`-orbit of the dominant weight
//! `ρ_P = Σ_{i ∉ Levi} ω_i`, whose stabilizer is exactly `W_P`. Weights are
//! kept in fundamental-weight coordinates with exact integers. Moving from
//! `μ` to `s_j μ` when `⟨μ, α_j^∨⟩ > 0` raises the length of the minimal coset
//! representative by one, so the orbit is swept level by level and each
//! level's size is the number of `w ∈ W^P` of that length.
//!
//! Simple roots are numbered `1..=rank` following Bourbaki:
//!
//! ```text
//! A_n  1 - 2 - ... - n
//! B_n  1 - 2 - ... - (n-1) => n        (α_n short)
//! C_n  1 - 2 - ... - (n-1) <= n        (α_n long)
//! D_n  1 - 2 - ... - (n-2) - (n-1)
//!                       \
//!                        n
//! E_n  1 - 3 - 4 - 5 - ... - n
//!              |
//!              2
//! F_4  1 - 2 => 3 - 4                  (α_1, α_2 long)
//! G_2  1 <= 2                          (α_1 short)
//! ```
//!
//! A [`ParabolicSpec`] lists the simple roots that generate the Levi factor
//! of `P`: the empty set is the Borel subgroup, the full set is `G` itself.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tate::{TateMotive, Twist};

/// Largest rank handled; weights are stored in fixed-size arrays.
pub const MAX_RANK: usize = 8;

type Weight = [i32; MAX_RANK];

/// Upper bound on the number of orbit points an enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitCap(pub usize);

impl OrbitCap {
    pub const DEFAULT: OrbitCap = OrbitCap(10_000_000);
}

impl Default for OrbitCap {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Cartan–Killing family of an irreducible finite root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// Whether `(self, rank)` names a valid finite type, with the usual
    /// low-rank coincidences (`B_1`, `C_2`, `D_3`, ...) excluded.
    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    /// Closed-form number of positive roots.
    pub fn positive_root_count(self, rank: usize) -> usize {
        let n = rank;
        match self {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Closed-form order of the Weyl group.
    pub fn weyl_order(self, rank: usize) -> u128 {
        let n = rank as u128;
        let factorial = |m: u128| (1..=m).product::<u128>();
        match self {
            Family::A => factorial(n + 1),
            Family::B | Family::C => (1u128 << n) * factorial(n),
            Family::D => (1u128 << (n - 1)) * factorial(n),
            Family::E => match rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(Error::InvalidArgument(format!(
                "unknown root system family `{other}` (expected one of A-G)"
            ))),
        }
    }
}

/// Cartan datum of an irreducible finite root system.
///
/// `cartan[i][j] = ⟨α_i^∨, α_j⟩`, 0-indexed, Bourbaki numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    num_positive_roots: usize,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.admits_rank(rank) {
            return Err(Error::InvalidRootSystem {
                letter: family.letter(),
                rank,
                reason: match family {
                    Family::A => "type A needs rank >= 1".into(),
                    Family::B => "type B needs rank >= 2".into(),
                    Family::C => "type C needs rank >= 3".into(),
                    Family::D => "type D needs rank >= 4".into(),
                    Family::E => "type E exists only in ranks 6, 7, 8".into(),
                    Family::F => "type F exists only in rank 4".into(),
                    Family::G => "type G exists only in rank 2".into(),
                },
            });
        }
        Ok(Self {
            family,
            rank,
            cartan: cartan_matrix(family, rank),
            num_positive_roots: family.positive_root_count(rank),
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn num_positive_roots(&self) -> usize {
        self.num_positive_roots
    }

    /// Closed-form `|W|`.
    pub fn weyl_order_closed_form(&self) -> u128 {
        self.family.weyl_order(self.rank)
    }

    /// Positive roots in simple-root coordinates, generated by root strings.
    pub fn positive_roots(&self) -> Vec<Vec<i32>> {
        positive_roots_of(&self.cartan)
    }

    /// Number of positive roots of the Levi subsystem.
    pub fn levi_positive_roots(&self, parabolic: &ParabolicSpec) -> Result<usize> {
        let idx = parabolic.indices(self)?;
        Ok(positive_roots_of(&sub_cartan(&self.cartan, &idx)).len())
    }

    /// `dim G/P = |Φ⁺| - |Φ⁺_Levi|`.
    pub fn flag_dimension(&self, parabolic: &ParabolicSpec) -> Result<usize> {
        Ok(self.num_positive_roots - self.levi_positive_roots(parabolic)?)
    }

    /// Irreducible components of the Levi subsystem, as `(family, rank)`.
    pub fn levi_components(&self, parabolic: &ParabolicSpec) -> Result<Vec<(Family, usize)>> {
        let idx = parabolic.indices(self)?;
        Ok(classify_components(&sub_cartan(&self.cartan, &idx)))
    }

    /// Exact `|W/W_P|` from the closed-form group orders.
    pub fn coset_count_closed_form(&self, parabolic: &ParabolicSpec) -> Result<u128> {
        let levi_order: u128 = self
            .levi_components(parabolic)?
            .into_iter()
            .map(|(family, rank)| family.weyl_order(rank))
            .product();
        Ok(self.weyl_order_closed_form() / levi_order)
    }

    /// `s_j` acting on a weight in fundamental-weight coordinates.
    fn reflect(&self, weight: &Weight, j: usize) -> Weight {
        let mut out = *weight;
        let c = weight[j];
        for (i, row) in self.cartan.iter().enumerate() {
            out[i] -= c * row[j];
        }
        out
    }

    fn rho_parabolic(&self, levi: &BTreeSet<usize>) -> Weight {
        let mut w = [0; MAX_RANK];
        for (i, slot) in w.iter_mut().enumerate().take(self.rank) {
            *slot = i32::from(!levi.contains(&i));
        }
        w
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

fn cartan_matrix(family: Family, n: usize) -> Vec<Vec<i32>> {
    let mut a = vec![vec![0; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    match family {
        Family::A | Family::B | Family::C => (1..n).for_each(|i| link(i, i + 1)),
        Family::D => {
            (1..n - 1).for_each(|i| link(i, i + 1));
            link(n - 2, n);
        }
        Family::E => {
            link(1, 3);
            link(2, 4);
            (3..n).for_each(|i| link(i, i + 1));
        }
        Family::F => (1..4).for_each(|i| link(i, i + 1)),
        Family::G => link(1, 2),
    }
    // a[i][j] = 2(α_i, α_j)/(α_i, α_i): the shorter root carries the larger entry.
    match family {
        Family::B => a[n - 1][n - 2] = -2,
        Family::C => a[n - 2][n - 1] = -2,
        Family::F => a[2][1] = -2,
        Family::G => a[0][1] = -3,
        _ => {}
    }
    a
}

fn sub_cartan(cartan: &[Vec<i32>], idx: &[usize]) -> Vec<Vec<i32>> {
    idx.iter()
        .map(|&i| idx.iter().map(|&j| cartan[i][j]).collect())
        .collect()
}

fn positive_roots_of(cartan: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let k = cartan.len();
    let simple = |j: usize| {
        let mut e = vec![0; k];
        e[j] = 1;
        e
    };
    let mut roots: Vec<Vec<i32>> = (0..k).map(simple).collect();
    let mut known: HashSet<Vec<i32>> = roots.iter().cloned().collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for j in 0..k {
                if *beta == simple(j) {
                    continue;
                }
                let pairing: i32 = (0..k).map(|i| beta[i] * cartan[j][i]).sum();
                let mut down = 0;
                let mut probe = beta.clone();
                loop {
                    probe[j] -= 1;
                    if !known.contains(&probe) {
                        break;
                    }
                    down += 1;
                }
                if down - pairing > 0 {
                    let mut up = beta.clone();
                    up[j] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots
}

/// Identifies each connected component of a finite-type Cartan matrix.
fn classify_components(cartan: &[Vec<i32>]) -> Vec<(Family, usize)> {
    let k = cartan.len();
    let neighbours = |i: usize| (0..k).filter(move |&j| j != i && cartan[i][j] != 0);
    let mut seen = vec![false; k];
    let mut out = Vec::new();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut cursor = 0;
        while cursor < comp.len() {
            let i = comp[cursor];
            cursor += 1;
            for j in neighbours(i) {
                if !seen[j] {
                    seen[j] = true;
                    comp.push(j);
                }
            }
        }
        let size = comp.len();
        let degree = |i: usize| neighbours(i).count();
        let bond = |i: usize, j: usize| cartan[i][j] * cartan[j][i];
        let bonds: Vec<(usize, usize)> = comp
            .iter()
            .flat_map(|&i| neighbours(i).filter(move |&j| i < j).map(move |j| (i, j)))
            .collect();
        let family = if bonds.iter().any(|&(i, j)| bond(i, j) == 3) {
            Family::G
        } else if let Some(&(i, j)) = bonds.iter().find(|&&(i, j)| bond(i, j) == 2) {
            if size == 4 && degree(i) == 2 && degree(j) == 2 {
                Family::F
            } else if size == 2 {
                Family::B
            } else {
                // The leaf at the end of the double bond is short in B, long in C.
                let (leaf, other) = if degree(i) == 1 { (i, j) } else { (j, i) };
                if cartan[leaf][other] == -2 {
                    Family::B
                } else {
                    Family::C
                }
            }
        } else if let Some(&branch) = comp.iter().find(|&&i| degree(i) == 3) {
            let arm_len = |first: usize| {
                let (mut prev, mut cur, mut len) = (branch, first, 1);
                while let Some(next) = neighbours(cur).find(|&x| x != prev) {
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                len
            };
            let short_arms = neighbours(branch).filter(|&x| arm_len(x) == 1).count();
            if short_arms >= 2 {
                Family::D
            } else {
                Family::E
            }
        } else {
            Family::A
        };
        out.push((family, size));
    }
    out.sort();
    out
}

/// The simple roots generating the Levi factor of a parabolic subgroup,
/// numbered from 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ParabolicSpec {
    levi: BTreeSet<usize>,
}

impl ParabolicSpec {
    pub fn new(levi: impl IntoIterator<Item = usize>) -> Self {
        Self {
            levi: levi.into_iter().collect(),
        }
    }

    /// Empty Levi: the Borel subgroup, `G/B` the full flag variety.
    pub fn borel() -> Self {
        Self::default()
    }

    /// Every simple root: `P = G`, so `G/P` is a point.
    pub fn whole(rank: usize) -> Self {
        Self::new(1..=rank)
    }

    /// All simple roots except `α_crossed`: a maximal parabolic.
    pub fn maximal(rank: usize, crossed: usize) -> Self {
        Self::new((1..=rank).filter(|&i| i != crossed))
    }

    /// Every parabolic of a rank-`rank` system, in a fixed order.
    pub fn all(rank: usize) -> impl Iterator<Item = ParabolicSpec> {
        (0u32..1 << rank)
            .map(move |mask| Self::new((1..=rank).filter(|&i| mask & (1 << (i - 1)) != 0)))
    }

    pub fn levi(&self) -> &BTreeSet<usize> {
        &self.levi
    }

    /// 0-based indices, validated against the root system.
    fn indices(&self, rs: &RootSystem) -> Result<Vec<usize>> {
        self.levi
            .iter()
            .map(|&i| {
                if (1..=rs.rank).contains(&i) {
                    Ok(i - 1)
                } else {
                    Err(Error::InvalidSimpleRoot {
                        index: i,
                        rank: rs.rank,
                    })
                }
            })
            .collect()
    }

    /// Parses a comma separated list such as `1,3`; empty means Borel.
    pub fn parse_list(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::borel());
        }
        s.split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidArgument(format!("bad simple root index `{}`", tok.trim()))
                })
            })
            .collect::<Result<BTreeSet<_>>>()
            .map(|levi| Self { levi })
    }
}

impl fmt::Display for ParabolicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.levi.iter().map(|i| i.to_string()).collect();
        f.write_str(&items.join(","))
    }
}

/// Number of minimal coset representatives of each length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetLengthProfile {
    pub lengths: BTreeMap<Twist, u64>,
    pub total: u64,
}

impl CosetLengthProfile {
    pub fn max_length(&self) -> Twist {
        self.lengths.keys().next_back().copied().unwrap_or(0)
    }

    pub fn is_palindromic(&self) -> bool {
        let top = self.max_length();
        self.lengths
            .iter()
            .all(|(&l, c)| self.lengths.get(&(top - l)) == Some(c))
    }

    pub fn to_motive(&self) -> TateMotive {
        TateMotive::from_multiplicities(self.lengths.iter().map(|(&l, &c)| (i64::from(l), c)))
            .expect("lengths are nonnegative")
    }
}

fn check_cap(rs: &RootSystem, parabolic: &ParabolicSpec, cap: OrbitCap) -> Result<()> {
    let estimated = rs.coset_count_closed_form(parabolic)?;
    if estimated > cap.0 as u128 {
        return Err(Error::OrbitCapExceeded {
            estimated,
            cap: cap.0,
        });
    }
    Ok(())
}

/// Length profile of the minimal coset representatives `W^P`.
pub fn coset_lengths(
    rs: &RootSystem,
    parabolic: &ParabolicSpec,
    cap: OrbitCap,
) -> Result<CosetLengthProfile> {
    let idx: BTreeSet<usize> = parabolic.indices(rs)?.into_iter().collect();
    check_cap(rs, parabolic, cap)?;

    let mut lengths = BTreeMap::new();
    let mut level = vec![rs.rho_parabolic(&idx)];
    let mut total: u64 = 0;
    let mut length: Twist = 0;
    while !level.is_empty() {
        total += level.len() as u64;
        if total > cap.0 as u64 {
            return Err(Error::OrbitCapExceeded {
                estimated: rs.coset_count_closed_form(parabolic)?,
                cap: cap.0,
            });
        }
        lengths.insert(length, level.len() as u64);
        // Raising steps only connect consecutive levels, so deduplicating
        // within the next level is enough.
        let mut next: HashSet<Weight> = HashSet::with_capacity(level.len() * 2);
        for mu in &level {
            for j in 0..rs.rank {
                if mu[j] > 0 {
                    next.insert(rs.reflect(mu, j));
                }
            }
        }
        level = next.into_iter().collect();
        length += 1;
    }
    Ok(CosetLengthProfile { lengths, total })
}

/// Every point of the orbit `W·ρ_P` with its distance from `ρ_P` in the
/// orbit graph, found by plain breadth-first search over all simple
/// reflections with one global visited set.
pub fn orbit_points(
    rs: &RootSystem,
    parabolic: &ParabolicSpec,
    cap: OrbitCap,
) -> Result<Vec<(Vec<i32>, Twist)>> {
    let idx: BTreeSet<usize> = parabolic.indices(rs)?.into_iter().collect();
    check_cap(rs, parabolic, cap)?;
    let start = rs.rho_parabolic(&idx);
    let mut depth: HashMap<Weight, Twist> = HashMap::from([(start, 0)]);
    let mut order = vec![start];
    let mut cursor = 0;
    while cursor < order.len() {
        let mu = order[cursor];
        cursor += 1;
        let d = depth[&mu];
        for j in 0..rs.rank {
            let nu = rs.reflect(&mu, j);
            if let std::collections::hash_map::Entry::Vacant(e) = depth.entry(nu) {
                e.insert(d + 1);
                order.push(nu);
            }
        }
    }
    Ok(order
        .into_iter()
        .map(|w| (w[..rs.rank].to_vec(), depth[&w]))
        .collect())
}

/// `|W|`, enumerated as the regular orbit.
pub fn weyl_order(rs: &RootSystem, cap: OrbitCap) -> Result<u64> {
    Ok(coset_lengths(rs, &ParabolicSpec::borel(), cap)?.total)
}

/// Motive of `G/P`: one `1(-ℓ(w))` per `w ∈ W^P`.
pub fn gp_motive(rs: &RootSystem, parabolic: &ParabolicSpec, cap: OrbitCap) -> Result<TateMotive> {
    Ok(coset_lengths(rs, parabolic, cap)?.to_motive())
}
