//! Colored partitions, their text form and flat sizes.
//!
//! A partition is written as whitespace-separated tokens `<size><labels>`,
//! e.g. `10a 8a 8b 0c`. A part of degree k carries k concatenated labels and
//! its total size, e.g. `5ab` is the secondary part of size 5 colored `ab`.
//! The empty partition is written `()`.

use std::cmp::Ordering;

use serde::Serialize;

use crate::energy::{Color, ColorSystem, ColorWord, Energy};
use crate::error::{invalid, Error, Result};
use crate::part::{internal_energy, Part};
use crate::relation::{relate, Relation};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ColoredPartition {
    pub parts: Vec<Part>,
    pub relation: Relation,
    /// The last part is the zero part of the ground color (of the parts' degree).
    pub grounded: bool,
}

impl ColoredPartition {
    pub fn new(parts: Vec<Part>, relation: Relation, grounded: bool) -> Self {
        ColoredPartition { parts, relation, grounded }
    }

    /// The trivial grounded partition `(0_{c_g^k})`.
    pub fn trivial(energy: &Energy, degree: usize, relation: Relation) -> Self {
        ColoredPartition::new(vec![Part::ground_zero(energy, degree)], relation, true)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Parts before the terminal ground part (all parts when not grounded).
    pub fn body(&self) -> &[Part] {
        if self.grounded {
            &self.parts[..self.parts.len().saturating_sub(1)]
        } else {
            &self.parts
        }
    }

    pub fn size(&self, energy: &Energy) -> i64 {
        self.parts.iter().map(|p| p.size(energy)).sum()
    }

    pub fn sizes(&self, energy: &Energy) -> Vec<i64> {
        self.parts.iter().map(|p| p.size(energy)).collect()
    }

    /// All primary colors, read left to right.
    pub fn colors(&self) -> Vec<Color> {
        self.parts.iter().flat_map(Part::colors).collect()
    }

    /// The non-ground colors, read left to right.
    pub fn color_word(&self, energy: &Energy) -> ColorWord {
        let g = energy.ground();
        let word = self.colors().into_iter().filter(|&c| c != g).collect();
        ColorWord::new(word, energy.colors()).expect("ground removed")
    }

    /// Checks that consecutive parts are related and the grounding condition.
    pub fn validate(&self, energy: &Energy) -> Result<()> {
        for (i, w) in self.parts.windows(2).enumerate() {
            if !relate(&w[0], &w[1], energy, self.relation)? {
                let cs = energy.colors();
                return invalid(format!(
                    "parts {} and {} ({} and {}) violate the {:?} relation",
                    i,
                    i + 1,
                    part_token(&w[0], energy, cs),
                    part_token(&w[1], energy, cs),
                    self.relation
                ));
            }
        }
        if self.grounded {
            let Some(last) = self.parts.last() else {
                return invalid("a grounded partition needs a terminal part");
            };
            if !last.is_ground_zero(energy) {
                return invalid(format!(
                    "terminal part {} is not the zero ground part",
                    part_token(last, energy, energy.colors())
                ));
            }
            if self.parts.iter().any(|p| p.degree() != last.degree()) {
                return invalid("parts of a grounded partition share one degree");
            }
            if self.parts.len() >= 2 && self.parts[self.parts.len() - 2].is_ground_zero(energy) {
                return invalid("the part before the terminal part is itself the zero ground part");
            }
        }
        Ok(())
    }

    pub fn to_text(&self, energy: &Energy) -> String {
        if self.parts.is_empty() {
            return "()".into();
        }
        let tokens: Vec<String> = self.parts.iter().map(|p| part_token(p, energy, energy.colors())).collect();
        tokens.join(" ")
    }

    /// Parses the text form. Part degrees follow from the number of labels.
    pub fn parse(text: &str, energy: &Energy, relation: Relation, grounded: bool) -> Result<Self> {
        let text = text.trim();
        let mut parts = Vec::new();
        if text != "()" {
            for tok in text.split_whitespace() {
                parts.push(parse_part(tok, energy)?);
            }
        }
        Ok(ColoredPartition::new(parts, relation, grounded))
    }

    /// Key of the canonical order: (length, sizes, colors).
    pub fn canonical_key(&self, energy: &Energy) -> (usize, Vec<i64>, Vec<Vec<Color>>) {
        (self.parts.len(), self.sizes(energy), self.parts.iter().map(Part::colors).collect())
    }
}

/// Sorts partitions by (length, size sequence, color sequence).
pub fn sort_canonical(list: &mut [ColoredPartition], energy: &Energy) {
    list.sort_by_cached_key(|p| p.canonical_key(energy));
}

pub fn compare_canonical(a: &ColoredPartition, b: &ColoredPartition, energy: &Energy) -> Ordering {
    a.canonical_key(energy).cmp(&b.canonical_key(energy))
}

pub fn part_token(p: &Part, energy: &Energy, colors: &ColorSystem) -> String {
    format!("{}{}", p.size(energy), colors.format_colors(&p.colors()))
}

pub fn parse_part(tok: &str, energy: &Energy) -> Result<Part> {
    let split = tok
        .char_indices()
        .find(|&(i, c)| !(c.is_ascii_digit() || (i == 0 && c == '-')))
        .map(|(i, _)| i)
        .ok_or_else(|| Error::Parse(format!("part {tok:?} has no color")))?;
    let size: i64 = tok[..split]
        .parse()
        .map_err(|_| Error::Parse(format!("part {tok:?} has no size")))?;
    let colors = energy.colors().segment(&tok[split..])?;
    let k = colors.len() as i64;
    let rest = size - internal_energy(&colors, energy);
    if rest.rem_euclid(k) != 0 {
        return Err(Error::Parse(format!(
            "no part of degree {k} colored {} has size {size}",
            &tok[split..]
        )));
    }
    Ok(Part::with_base(rest.div_euclid(k), &colors))
}

/// Sizes of the flat partition with full color sequence `colors`, whose last
/// entry is the ground color: |π_k| = Σ_{l≥k} ε(c_l, c_{l+1}).
pub fn flat_sizes(colors: &[Color], energy: &Energy) -> Vec<i64> {
    let mut sizes = vec![0; colors.len()];
    for k in (0..colors.len().saturating_sub(1)).rev() {
        sizes[k] = sizes[k + 1] + energy.eps(colors[k], colors[k + 1]);
    }
    sizes
}

/// The grounded flat partition with the given colors before the terminal part.
pub fn flat_from_colors(body: &[Color], energy: &Energy) -> ColoredPartition {
    let mut full = body.to_vec();
    full.push(energy.ground());
    let sizes = flat_sizes(&full, energy);
    let parts = full.iter().zip(sizes).map(|(&c, s)| Part::primary(s, c)).collect();
    ColoredPartition::new(parts, Relation::Flat, true)
}
