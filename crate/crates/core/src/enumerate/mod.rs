//! Budgeted exhaustive generators for every partition family.
//!
//! Results are returned in canonical order: by number of parts, then by the
//! sequence of part sizes, then by the sequence of part colors.

pub mod classical;
mod flat;
mod regular;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::energy::{ColorWord, Energy};
use crate::error::{usage, Error, Result};
use crate::part::Part;
use crate::partition::{sort_canonical, ColoredPartition};
use crate::qseries::Substitution;
use crate::relation::Relation;

/// Which side of ρ the parts of an O or E partition lie on.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum HalfLine {
    /// Parts at least ρ.
    Plus,
    /// Parts at most ρ.
    Minus,
}

/// A family of partitions.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// Grounded flat partitions into primary parts.
    F1,
    /// Grounded regular partitions into primary parts.
    R1,
    /// Grounded flat partitions into secondary parts.
    F2,
    /// Grounded regular partitions into secondary parts.
    R2,
    /// Primary parts over C′ under ≻_ε.
    O(HalfLine),
    /// Primary and secondary parts over C′ under ≫_ε.
    E(HalfLine),
    /// Grounded flat partitions into parts of degree k.
    Fk(usize),
}

impl Family {
    pub fn is_grounded(self) -> bool {
        !matches!(self, Family::O(_) | Family::E(_))
    }

    pub fn relation(self) -> Relation {
        match self {
            Family::F1 | Family::F2 | Family::Fk(_) => Relation::Flat,
            Family::R1 | Family::O(_) => Relation::MinDiff,
            Family::E(_) => Relation::Mixed,
            Family::R2 => Relation::SecondaryRegular,
        }
    }

    /// Degree of the parts, when uniform.
    pub fn degree(self) -> Option<usize> {
        match self {
            Family::F1 | Family::R1 | Family::O(_) => Some(1),
            Family::F2 | Family::R2 => Some(2),
            Family::Fk(k) => Some(k),
            Family::E(_) => None,
        }
    }

    /// Checks that `pi` is a member of this family.
    pub fn check_member(self, pi: &ColoredPartition, energy: &Energy) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidInput(format!("not in {self}: {msg}")));
        if pi.relation != self.relation() || pi.grounded != self.is_grounded() {
            return fail(format!("expected the {:?} relation", self.relation()));
        }
        if let Some(k) = self.degree() {
            if pi.parts.iter().any(|p| p.degree() != k) {
                return fail(format!("all parts must have degree {k}"));
            }
        } else if pi.parts.iter().any(|p| p.degree() > 2) {
            return fail("parts must be primary or secondary".into());
        }
        match pi.validate(energy) {
            Err(Error::InvalidInput(msg)) => return fail(msg),
            Err(e) => return fail(e.to_string()),
            Ok(()) => {}
        }
        let g = energy.ground();
        match self {
            Family::R1 | Family::R2 => {
                if pi.body().iter().any(|p| p.is_ground_zero(energy) || p.colors().iter().all(|&c| c == g)) {
                    return fail("a non-terminal part carries only the ground color".into());
                }
            }
            Family::O(side) | Family::E(side) => {
                if pi.parts.iter().any(|p| p.colors().contains(&g)) {
                    return fail("parts must avoid the ground color".into());
                }
                let rho = energy.rho()?;
                let ok = |p: &Part| match (side, p) {
                    (HalfLine::Plus, _) => p.base() >= rho,
                    (HalfLine::Minus, Part::Secondary(s)) => s.gamma(energy).size <= rho,
                    (HalfLine::Minus, _) => p.base() <= rho,
                };
                if !pi.parts.iter().all(ok) {
                    return fail(format!("parts must lie on the {side:?} side of rho = {rho}"));
                }
            }
            _ => {}
        }
        Ok(())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |h: &HalfLine| if *h == HalfLine::Plus { "+" } else { "-" };
        match self {
            Family::F1 => write!(f, "F1"),
            Family::R1 => write!(f, "R1"),
            Family::F2 => write!(f, "F2"),
            Family::R2 => write!(f, "R2"),
            Family::O(h) => write!(f, "O{}", sign(h)),
            Family::E(h) => write!(f, "E{}", sign(h)),
            Family::Fk(k) => write!(f, "F{k}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts `F1`, `R1`, `F2`, `R2`, `O+`, `O-`, `E+`, `E-` and `F<k>`.
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "F1" => Family::F1,
            "R1" => Family::R1,
            "F2" => Family::F2,
            "R2" => Family::R2,
            "O+" | "O" => Family::O(HalfLine::Plus),
            "O-" => Family::O(HalfLine::Minus),
            "E+" | "E" => Family::E(HalfLine::Plus),
            "E-" => Family::E(HalfLine::Minus),
            _ => match s.strip_prefix('F').and_then(|k| k.parse::<usize>().ok()) {
                Some(k) if k >= 1 => Family::Fk(k),
                _ => return usage(format!("unknown family {s:?}")),
            },
        })
    }
}

/// Bounds that make an enumeration finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumBudget {
    /// Bound on the total size (after `measure`, when set). For lower
    /// half-line families it bounds the absolute value of the total.
    pub max_size: i64,
    /// Bound on the number of non-terminal parts.
    pub max_parts: usize,
    /// Keep only partitions with this non-ground color word.
    pub word: Option<ColorWord>,
    /// Measure sizes through a substitution instead of plain sizes.
    pub measure: Option<Substitution>,
}

impl EnumBudget {
    pub fn new(max_size: i64, max_parts: usize) -> Self {
        EnumBudget { max_size, max_parts, word: None, measure: None }
    }

    pub fn with_word(mut self, word: ColorWord) -> Self {
        self.word = Some(word);
        self
    }

    pub fn with_measure(mut self, measure: Substitution) -> Self {
        self.measure = Some(measure);
        self
    }
}

fn shapes(energy: &Energy, family: Family) -> Vec<Vec<crate::energy::Color>> {
    let cs = energy.colors();
    let ng: Vec<_> = cs.non_ground().collect();
    match family {
        Family::R1 | Family::O(_) => ng.iter().map(|&c| vec![c]).collect(),
        Family::E(_) => {
            let mut v: Vec<_> = ng.iter().map(|&c| vec![c]).collect();
            for &c in &ng {
                for &d in &ng {
                    v.push(vec![c, d]);
                }
            }
            v
        }
        Family::R2 => {
            let g = energy.ground();
            let mut v = Vec::new();
            for c in cs.colors() {
                for d in cs.colors() {
                    if (c, d) != (g, g) {
                        v.push(vec![c, d]);
                    }
                }
            }
            v
        }
        _ => unreachable!("flat families have no shapes"),
    }
}

/// Every member of `family` within `budget`, in canonical order.
pub fn enumerate(family: Family, energy: &Energy, budget: &EnumBudget) -> Result<Vec<ColoredPartition>> {
    if budget.max_size < 0 {
        return usage("max_size must be non-negative");
    }
    let mut out = match family {
        Family::F1 => flat::enumerate_flat(energy, 1, budget)?,
        Family::F2 => flat::enumerate_flat(energy, 2, budget)?,
        Family::Fk(k) => flat::enumerate_flat(energy, k, budget)?,
        _ => {
            energy.require_ground_compatible()?;
            let rho = energy.rho()?;
            let (terminal, half_line) = match family {
                Family::R1 => (Some(Part::ground_zero(energy, 1)), None),
                Family::R2 => (Some(Part::ground_zero(energy, 2)), None),
                Family::O(h) | Family::E(h) => (None, Some((h, rho))),
                _ => unreachable!(),
            };
            let spec = regular::Spec {
                shapes: shapes(energy, family),
                relation: family.relation(),
                terminal,
                half_line,
            };
            regular::enumerate_regular(energy, spec, budget)?
        }
    };
    sort_canonical(&mut out, energy);
    Ok(out)
}

/// A part cap sufficient for all members with color word `word` and size
/// at most `max_n`.
pub fn sufficient_parts(family: Family, word: &ColorWord, max_n: i64) -> usize {
    match family {
        Family::F1 | Family::F2 | Family::Fk(_) => word.len() + max_n.max(0) as usize + 1,
        _ => word.len(),
    }
}

/// Number of members with color word `word` and size exactly `n`.
pub fn count_by_word(family: Family, energy: &Energy, word: &ColorWord, n: i64) -> Result<u64> {
    let budget = EnumBudget::new(n.abs(), sufficient_parts(family, word, n.abs())).with_word(word.clone());
    Ok(enumerate(family, energy, &budget)?
        .iter()
        .filter(|p| p.size(energy) == n)
        .count() as u64)
}

/// Counts of members with color word `word` for every size `0..=max_n`.
pub fn counts_by_word(family: Family, energy: &Energy, word: &ColorWord, max_n: i64) -> Result<Vec<u64>> {
    let budget = EnumBudget::new(max_n, sufficient_parts(family, word, max_n)).with_word(word.clone());
    let mut counts = vec![0u64; max_n as usize + 1];
    for p in enumerate(family, energy, &budget)? {
        let s = p.size(energy);
        if (0..=max_n).contains(&s) {
            counts[s as usize] += 1;
        }
    }
    Ok(counts)
}
