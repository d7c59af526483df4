//! Threshold functions `f(r)`, `g(r)`, extra-connectivity and neighborhood
//! formulas, and a lookup of settled star-(sub)structure connectivity values.
//!
//! All arithmetic is exact; `f(8) = 31/3` and `g(8) = 28/3` are the only
//! non-integral table entries.

mod rational;

use std::fmt;

use thiserror::Error;

use crate::graphs::Family;
use crate::stars::Mode;

pub use rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("r = {r} is out of range (need r >= 2)")]
    ROutOfRange { r: u64 },
    #[error("formula for {family}_{n} is not valid at g = {g}")]
    OutOfValidity { family: Family, n: u32, g: u64 },
}

fn check_r(r: u64) -> Result<i64, BoundsError> {
    if !(2..=1 << 20).contains(&r) {
        return Err(BoundsError::ROutOfRange { r });
    }
    Ok(r as i64)
}

fn max_of(values: &[Rational]) -> Rational {
    *values.iter().max().expect("nonempty")
}

/// `f(r)`, the dimension threshold for `Q_n`.
pub fn f_value(r: u64) -> Result<Rational, BoundsError> {
    let r = check_r(r)?;
    Ok(if r % 2 == 1 {
        max_of(&[Rational::new(r + 7, 2), Rational::new(r * r + 4 * r + 3, 8)])
    } else {
        max_of(&[
            Rational::new(r * r + 2 * r, 8),
            Rational::new(r + 8, 2),
            Rational::new(r * r + 6 * r + 12, 12),
        ])
    })
}

/// `g(r)`, the dimension threshold for `FQ_n`.
pub fn g_value(r: u64) -> Result<Rational, BoundsError> {
    let r = check_r(r)?;
    Ok(if r % 2 == 1 {
        max_of(&[
            Rational::integer(6),
            Rational::new(r + 5, 2),
            Rational::new(r * r + 4 * r - 5, 8),
        ])
    } else {
        max_of(&[
            Rational::integer(6),
            Rational::new(r * r + 2 * r - 8, 8),
            Rational::new(r + 6, 2),
            Rational::new(r * r + 6 * r, 12),
        ])
    })
}

pub fn threshold(family: Family, r: u64) -> Result<Rational, BoundsError> {
    match family {
        Family::Hypercube => f_value(r),
        Family::Folded => g_value(r),
    }
}

/// Smallest integer strictly above `f(r)` (Q) or `g(r)` (FQ). May exceed the
/// largest supported dimension.
pub fn min_guaranteed_dim(family: Family, r: u64) -> Result<u64, BoundsError> {
    Ok((threshold(family, r)?.floor() + 1) as u64)
}

fn choose2(g: i64) -> i64 {
    g * (g - 1) / 2
}

/// Closed form of the `g`-extra connectivity `κ_g`.
///
/// Q: `n >= 4`, `g <= n`. FQ: `n >= 7`, `g <= n + 1`.
pub fn kappa_g_formula(family: Family, n: u32, g: u64) -> Result<u64, BoundsError> {
    let bad = BoundsError::OutOfValidity { family, n, g };
    let (ni, gi) = (i64::from(n), g as i64);
    let value = match family {
        Family::Hypercube => {
            if n < 4 || g > u64::from(n) {
                return Err(bad);
            }
            if gi <= ni - 4 {
                (gi + 1) * ni - 2 * gi - choose2(gi)
            } else {
                ni * (ni - 1) / 2
            }
        }
        Family::Folded => {
            if n < 7 || g > u64::from(n) + 1 {
                return Err(bad);
            }
            if gi <= ni - 3 {
                (gi + 1) * (ni + 1) - 2 * gi - choose2(gi)
            } else {
                ni * (ni + 1) / 2
            }
        }
    };
    Ok(value as u64)
}

/// Lower bound on `|N(C)|` for a connected `C` with `g + 1` vertices.
///
/// Q: `n >= 4`. FQ: `n >= 5`, `1 <= g <= n + 2`.
pub fn neighborhood_bound_formula(family: Family, n: u32, g: u64) -> Result<i64, BoundsError> {
    let (ni, gi) = (i64::from(n), g as i64);
    match family {
        Family::Hypercube if n >= 4 && g < 1 << 20 => Ok((gi + 1) * ni - 2 * gi - choose2(gi)),
        Family::Folded if n >= 5 && (1..=u64::from(n) + 2).contains(&g) => {
            Ok((ni + 1) * (gi + 1) - 2 * gi - choose2(gi))
        }
        _ => Err(BoundsError::OutOfValidity { family, n, g }),
    }
}

/// A settled connectivity value, or the lack of one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Known {
    Exact(u64),
    NoCut,
    Unknown,
}

/// Which published result a [`KnownValue`] rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// `κ(Q_n; K_{1,1}) = n - 1` for `n >= 3`.
    HypercubeEdge,
    /// `⌈n/2⌉` for `2 <= r <= 3`, `n >= 3`.
    HypercubeSmallStar,
    /// `⌈n/2⌉` for `r = 4`, `n >= 6`.
    HypercubeFourStar,
    /// The separately settled cases `4 <= r <= 6`, `r <= n <= r + 1`.
    HypercubeLowDimension,
    /// `⌈n/2⌉` whenever `n > f(r)`.
    HypercubeThreshold,
    /// `Q_2` has no `K_{1,2}`-structure cut.
    HypercubeNoCut,
    /// `κ(FQ_n; K_{1,1}) = n` for `n >= 7`.
    FoldedEdge,
    /// `⌈(n+1)/2⌉` for `2 <= r <= 3`, `n >= 7`.
    FoldedSmallStar,
    /// `⌈(n+1)/2⌉` whenever `n > g(r)`.
    FoldedThreshold,
    /// No settled value applies.
    Open,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::HypercubeEdge => "hypercube edge result (r = 1, n >= 3)",
            Source::HypercubeSmallStar => "hypercube small stars (2 <= r <= 3, n >= 3)",
            Source::HypercubeFourStar => "hypercube K_(1,4) (n >= 6)",
            Source::HypercubeLowDimension => {
                "hypercube low dimensions (4 <= r <= 6, r <= n <= r + 1)"
            }
            Source::HypercubeThreshold => "hypercube threshold (n > f(r))",
            Source::HypercubeNoCut => "Q_2 has no K_(1,2)-structure cut",
            Source::FoldedEdge => "folded hypercube edge result (r = 1, n >= 7)",
            Source::FoldedSmallStar => "folded hypercube small stars (2 <= r <= 3, n >= 7)",
            Source::FoldedThreshold => "folded hypercube threshold (n > g(r))",
            Source::Open => "open",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnownValue {
    pub value: Known,
    pub source: Source,
}

impl KnownValue {
    fn exact(value: u64, source: Source) -> Self {
        KnownValue {
            value: Known::Exact(value),
            source,
        }
    }

    const UNKNOWN: KnownValue = KnownValue {
        value: Known::Unknown,
        source: Source::Open,
    };
}

/// The settled value of `κ(G; K_{1,r})` (structure) or `κ^s(G; K_{1,r})`
/// (substructure), if any.
pub fn known_value(family: Family, n: u32, r: u64, mode: Mode) -> KnownValue {
    let n64 = u64::from(n);
    let above = |t: Result<Rational, BoundsError>| t.is_ok_and(|t| t.exceeded_by(n64 as i64));
    match family {
        Family::Hypercube => {
            let half = n64.div_ceil(2);
            if r == 1 {
                return if n >= 3 {
                    KnownValue::exact(n64 - 1, Source::HypercubeEdge)
                } else {
                    KnownValue::UNKNOWN
                };
            }
            if (n, r, mode) == (2, 2, Mode::Structure) {
                return KnownValue {
                    value: Known::NoCut,
                    source: Source::HypercubeNoCut,
                };
            }
            if (2..=3).contains(&r) && n >= 3 {
                KnownValue::exact(half, Source::HypercubeSmallStar)
            } else if r == 4 && n >= 6 {
                KnownValue::exact(half, Source::HypercubeFourStar)
            } else if (4..=6).contains(&r) && (r..=r + 1).contains(&n64) {
                KnownValue::exact(half, Source::HypercubeLowDimension)
            } else if r >= 2 && above(f_value(r)) {
                KnownValue::exact(half, Source::HypercubeThreshold)
            } else {
                KnownValue::UNKNOWN
            }
        }
        Family::Folded => {
            let half = (n64 + 1).div_ceil(2);
            if r == 1 {
                if n >= 7 {
                    KnownValue::exact(n64, Source::FoldedEdge)
                } else {
                    KnownValue::UNKNOWN
                }
            } else if (2..=3).contains(&r) && n >= 7 {
                KnownValue::exact(half, Source::FoldedSmallStar)
            } else if above(g_value(r)) {
                KnownValue::exact(half, Source::FoldedThreshold)
            } else {
                KnownValue::UNKNOWN
            }
        }
    }
}

/// Tab-separated table of `r`, `f(r)`, `g(r)` and both dimension thresholds
/// for `2 <= r <= max_r`, with a header line.
pub fn threshold_table(max_r: u64) -> Result<String, BoundsError> {
    check_r(max_r)?;
    let mut out = String::from("r\tf(r)\tg(r)\tmin_dim_Q\tmin_dim_FQ\n");
    for r in 2..=max_r {
        out.push_str(&format!(
            "{r}\t{}\t{}\t{}\t{}\n",
            f_value(r)?,
            g_value(r)?,
            min_guaranteed_dim(Family::Hypercube, r)?,
            min_guaranteed_dim(Family::Folded, r)?,
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_and_g_examples() {
        assert_eq!(f_value(2), Ok(Rational::integer(5)));
        assert_eq!(f_value(8), Ok(Rational::new(31, 3)));
        assert_eq!(f_value(15), Ok(Rational::integer(36)));
        assert_eq!(g_value(2), Ok(Rational::integer(6)));
        assert_eq!(g_value(8), Ok(Rational::new(28, 3)));
        assert_eq!(g_value(19), Ok(Rational::integer(54)));
        assert_eq!(f_value(1), Err(BoundsError::ROutOfRange { r: 1 }));
        assert!(g_value(0).is_err());
    }

    #[test]
    fn dimension_thresholds() {
        assert_eq!(min_guaranteed_dim(Family::Hypercube, 8), Ok(11));
        assert_eq!(min_guaranteed_dim(Family::Hypercube, 9), Ok(16));
        assert_eq!(min_guaranteed_dim(Family::Folded, 9), Ok(15));
    }

    #[test]
    fn kappa_g_examples() {
        assert_eq!(kappa_g_formula(Family::Hypercube, 6, 3), Ok(15));
        assert_eq!(kappa_g_formula(Family::Hypercube, 6, 6), Ok(15));
        assert_eq!(kappa_g_formula(Family::Folded, 7, 0), Ok(8));
        assert!(kappa_g_formula(Family::Hypercube, 3, 0).is_err());
        assert!(kappa_g_formula(Family::Hypercube, 5, 6).is_err());
        assert!(kappa_g_formula(Family::Folded, 6, 0).is_err());
        assert!(kappa_g_formula(Family::Folded, 7, 9).is_err());
    }

    #[test]
    fn neighborhood_examples() {
        assert_eq!(neighborhood_bound_formula(Family::Hypercube, 4, 1), Ok(6));
        assert_eq!(neighborhood_bound_formula(Family::Hypercube, 5, 3), Ok(11));
        assert_eq!(neighborhood_bound_formula(Family::Folded, 5, 1), Ok(10));
        assert!(neighborhood_bound_formula(Family::Folded, 5, 0).is_err());
        assert!(neighborhood_bound_formula(Family::Folded, 5, 8).is_err());
        assert!(neighborhood_bound_formula(Family::Hypercube, 3, 1).is_err());
    }

    #[test]
    fn known_value_examples() {
        let q = Family::Hypercube;
        let exact = |v| Known::Exact(v);
        assert_eq!(known_value(q, 3, 2, Mode::Structure).value, exact(2));
        assert_eq!(known_value(q, 6, 4, Mode::Substructure).value, exact(3));
        assert_eq!(known_value(q, 8, 7, Mode::Structure).value, Known::Unknown);
        assert_eq!(
            known_value(Family::Folded, 7, 3, Mode::Structure).value,
            exact(4)
        );
        assert_eq!(known_value(q, 2, 2, Mode::Structure).value, Known::NoCut);
        assert_eq!(known_value(q, 2, 1, Mode::Structure).value, Known::Unknown);
        assert_eq!(known_value(q, 7, 6, Mode::Structure).value, exact(4));
        assert_eq!(
            known_value(q, 5, 4, Mode::Structure).source,
            Source::HypercubeLowDimension
        );
        assert_eq!(
            known_value(q, 11, 8, Mode::Structure).source,
            Source::HypercubeThreshold
        );
        assert_eq!(known_value(q, 10, 8, Mode::Structure).value, Known::Unknown);
    }

    #[test]
    fn table_rows() {
        let t = threshold_table(8).unwrap();
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines[0], "r\tf(r)\tg(r)\tmin_dim_Q\tmin_dim_FQ");
        assert_eq!(lines[1], "2\t5\t6\t6\t7");
        assert_eq!(lines[7], "8\t31/3\t28/3\t11\t10");
        assert!(threshold_table(1).is_err());
    }
}
