//! Fibre descriptions and their motives.
//!
//! Every fibre here is cellular, so its motive is `⊕ 1(-d)` over the
//! dimensions `d` of its affine cells.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tate::{TateMotive, Twist};
use crate::weyl::{self, Family, OrbitCap, ParabolicSpec, RootSystem};

/// A declarative fibre.
///
/// Surface syntax (see [`FromStr`]): `P n`, `Gr d n`,
/// `GP <letter> <rank> levi=<list>`, `cells d1,d2,...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FibreSpec {
    /// `P^n`. `P 0` is a point.
    ProjectiveSpace(u32),
    /// `Gr(d, n)`, `d`-planes in `n`-space.
    Grassmannian { d: u32, n: u32 },
    /// `G/P` with `P` given by the simple roots of its Levi factor.
    Homogeneous {
        family: Family,
        rank: usize,
        parabolic: ParabolicSpec,
    },
    /// Formal cellular variety given by the dimensions of its affine cells.
    ExplicitCellular(Vec<Twist>),
}

impl FibreSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            FibreSpec::ProjectiveSpace(_) => Ok(()),
            FibreSpec::Grassmannian { d, n } => {
                if *n == 0 {
                    Err(self.invalid("ambient dimension must be positive"))
                } else if d > n {
                    Err(self.invalid("subspace dimension exceeds ambient dimension"))
                } else {
                    Ok(())
                }
            }
            FibreSpec::Homogeneous {
                family,
                rank,
                parabolic,
            } => {
                let rs = RootSystem::new(*family, *rank)?;
                rs.levi_positive_roots(parabolic).map(|_| ())
            }
            FibreSpec::ExplicitCellular(cells) => {
                if cells.is_empty() {
                    Err(self.invalid("cell list must be nonempty"))
                } else {
                    Ok(())
                }
            }
        }
    }

    fn invalid(&self, reason: &str) -> Error {
        Error::InvalidFibre {
            spec: self.to_string(),
            reason: reason.to_string(),
        }
    }

    pub fn motive(&self, cap: OrbitCap) -> Result<TateMotive> {
        self.validate()?;
        Ok(match self {
            FibreSpec::ProjectiveSpace(n) => projective_space(*n),
            FibreSpec::Grassmannian { d, n } => grassmannian(*d, *n),
            FibreSpec::Homogeneous {
                family,
                rank,
                parabolic,
            } => weyl::gp_motive(&RootSystem::new(*family, *rank)?, parabolic, cap)?,
            FibreSpec::ExplicitCellular(cells) => TateMotive::from_cells(cells),
        })
    }

    pub fn dimension(&self) -> Result<Twist> {
        self.validate()?;
        Ok(match self {
            FibreSpec::ProjectiveSpace(n) => *n,
            FibreSpec::Grassmannian { d, n } => d * (n - d),
            FibreSpec::Homogeneous {
                family,
                rank,
                parabolic,
            } => RootSystem::new(*family, *rank)?.flag_dimension(parabolic)? as Twist,
            FibreSpec::ExplicitCellular(cells) => cells.iter().copied().max().unwrap_or(0),
        })
    }
}

/// `M(P^n) = 1 + L + ... + L^n`.
pub fn projective_space(n: u32) -> TateMotive {
    TateMotive::from_coefficients(std::iter::repeat_n(1u32, n as usize + 1))
}

/// `M(Gr(d, n))` by the Pascal recurrence for Gaussian binomials:
/// `Gr(k, m) = Gr(k-1, m-1) + L^k · Gr(k, m-1)`.
pub fn grassmannian(d: u32, n: u32) -> TateMotive {
    assert!(d <= n, "Gr({d}, {n}) is empty");
    let d = d.min(n - d);
    // row[k] holds Gr(k, m) for the current m; updated in place for m = 1..=n.
    let mut row = vec![TateMotive::zero(); d as usize + 1];
    row[0] = TateMotive::unit();
    for m in 1..=n {
        for k in (1..=d.min(m)).rev() {
            let ku = k as usize;
            row[ku] = row[ku - 1].direct_sum(&row[ku].twist(k));
        }
    }
    row.pop().unwrap_or_default()
}

impl fmt::Display for FibreSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FibreSpec::ProjectiveSpace(n) => write!(f, "P {n}"),
            FibreSpec::Grassmannian { d, n } => write!(f, "Gr {d} {n}"),
            FibreSpec::Homogeneous {
                family,
                rank,
                parabolic,
            } => write!(f, "GP {family} {rank} levi={parabolic}"),
            FibreSpec::ExplicitCellular(cells) => {
                let cells: Vec<String> = cells.iter().map(|c| c.to_string()).collect();
                write!(f, "cells {}", cells.join(","))
            }
        }
    }
}

impl FromStr for FibreSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidFibre {
            spec: s.trim().to_string(),
            reason: reason.to_string(),
        };
        let int = |tok: &str| {
            tok.parse::<u32>()
                .map_err(|_| bad(&format!("`{tok}` is not a nonnegative integer")))
        };
        let mut toks = s.split_whitespace();
        let head = toks.next().ok_or_else(|| bad("empty fibre description"))?;
        let rest: Vec<&str> = toks.collect();
        let spec = match (head, rest.as_slice()) {
            ("P", [n]) => FibreSpec::ProjectiveSpace(int(n)?),
            ("Gr", [d, n]) => FibreSpec::Grassmannian {
                d: int(d)?,
                n: int(n)?,
            },
            ("GP", [letter, rank, levi @ ..]) if levi.len() <= 1 => {
                let family: Family = letter.parse().map_err(|e: Error| bad(&e.to_string()))?;
                let rank = int(rank)? as usize;
                let parabolic = match levi {
                    [] => ParabolicSpec::borel(),
                    [l] => {
                        let list = l
                            .strip_prefix("levi=")
                            .ok_or_else(|| bad("expected `levi=<comma list>`"))?;
                        ParabolicSpec::parse_list(list).map_err(|e| bad(&e.to_string()))?
                    }
                    _ => unreachable!(),
                };
                FibreSpec::Homogeneous {
                    family,
                    rank,
                    parabolic,
                }
            }
            ("cells", [list]) => FibreSpec::ExplicitCellular(
                list.split(',')
                    .map(|c| int(c.trim()))
                    .collect::<Result<Vec<_>>>()?,
            ),
            ("P", _) => return Err(bad("expected `P n`")),
            ("Gr", _) => return Err(bad("expected `Gr d n`")),
            ("GP", _) => return Err(bad("expected `GP <letter> <rank> levi=<list>`")),
            ("cells", _) => return Err(bad("expected `cells d1,d2,...`")),
            _ => return Err(bad("unknown fibre kind (expected P, Gr, GP or cells)")),
        };
        spec.validate()?;
        Ok(spec)
    }
}
