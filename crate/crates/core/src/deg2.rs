//! Degree two: splitting secondary flat partitions into primary ones, the
//! parity embedding of E-partitions into secondary regular partitions, and
//! the count-level chain F₂ → F₁ → R₁ → O → E → R₂.
//!
//! Every link of the chain is a verified bijection except O ↔ E, whose
//! equinumerosity is checked by counting.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::deg1::omega;
use crate::energy::{ColorWord, Energy};
use crate::enumerate::{enumerate, sufficient_parts, EnumBudget, Family, HalfLine};
use crate::error::{invalid, Result};
use crate::part::{Part, PrimaryPart, SecondaryPart};
use crate::partition::ColoredPartition;
use crate::relation::Relation;

/// F: secondary flat → primary flat.
pub fn split_flat2(pi: &ColoredPartition, energy: &Energy) -> Result<ColoredPartition> {
    Family::F2.check_member(pi, energy)?;
    let g = energy.ground();
    let body = pi.body();
    let mut parts = Vec::with_capacity(2 * body.len() + 1);
    for (i, p) in body.iter().enumerate() {
        let s = p.as_secondary().expect("checked degree");
        parts.push(Part::Primary(s.gamma(energy)));
        if i + 1 < body.len() || s.right != g {
            parts.push(Part::Primary(s.mu()));
        }
    }
    parts.push(Part::primary(0, g));
    Ok(ColoredPartition::new(parts, Relation::Flat, true))
}

/// F⁻¹: primary flat → secondary flat.
pub fn merge_flat1(pi: &ColoredPartition, energy: &Energy) -> Result<ColoredPartition> {
    Family::F1.check_member(pi, energy)?;
    let g = energy.ground();
    let mut body: Vec<PrimaryPart> = pi.body().iter().map(|p| p.as_primary().expect("checked degree")).collect();
    if body.len() % 2 == 1 {
        body.push(PrimaryPart::new(0, g));
    }
    let mut parts: Vec<Part> = body
        .chunks(2)
        .map(|w| Part::secondary(w[1].size, w[0].color, w[1].color))
        .collect();
    parts.push(Part::ground_zero(energy, 2));
    Ok(ColoredPartition::new(parts, Relation::Flat, true))
}

/// R on a single part of P(C′) ⊔ S(C′).
pub fn rmap_part(part: &Part, energy: &Energy) -> Result<SecondaryPart> {
    let rho = energy.rho()?;
    let g = energy.ground();
    match part {
        Part::Primary(p) if p.color != g => {
            // ε(c, c_g) = ρ and ε(c_g, c) = 1 − ρ
            if (p.size - rho).rem_euclid(2) == 0 {
                Ok(SecondaryPart::new((p.size - rho).div_euclid(2), p.color, g))
            } else {
                Ok(SecondaryPart::new((p.size - 1 + rho).div_euclid(2), g, p.color))
            }
        }
        Part::Secondary(s) if s.left != g && s.right != g => Ok(*s),
        _ => invalid("R is defined on parts colored in C′ only"),
    }
}

/// R⁻¹ on a single non-terminal part of a secondary regular partition.
pub fn rmap_inv_part(part: &SecondaryPart, energy: &Energy) -> Result<Part> {
    let g = energy.ground();
    let size = part.size(energy);
    match (part.left == g, part.right == g) {
        (true, true) => invalid("a part colored c_g² cannot precede the terminal part"),
        (false, true) => Ok(Part::primary(size, part.left)),
        (true, false) => Ok(Part::primary(size, part.right)),
        (false, false) => Ok(Part::Secondary(*part)),
    }
}

/// R: E^{ρ+} → R₂.
pub fn rmap(pi: &ColoredPartition, energy: &Energy) -> Result<ColoredPartition> {
    Family::E(HalfLine::Plus).check_member(pi, energy)?;
    let mut parts = pi
        .parts
        .iter()
        .map(|p| rmap_part(p, energy).map(Part::Secondary))
        .collect::<Result<Vec<_>>>()?;
    parts.push(Part::ground_zero(energy, 2));
    Ok(ColoredPartition::new(parts, Relation::SecondaryRegular, true))
}

/// R⁻¹: R₂ → E^{ρ+}.
pub fn rmap_inv(pi: &ColoredPartition, energy: &Energy) -> Result<ColoredPartition> {
    Family::R2.check_member(pi, energy)?;
    let parts = pi
        .body()
        .iter()
        .map(|p| rmap_inv_part(&p.as_secondary().expect("checked degree"), energy))
        .collect::<Result<Vec<_>>>()?;
    Ok(ColoredPartition::new(parts, Relation::Mixed, false))
}

/// R₁ → O^{ρ+}: drops the terminal part.
pub fn strip_ground(pi: &ColoredPartition, energy: &Energy) -> Result<ColoredPartition> {
    Family::R1.check_member(pi, energy)?;
    let out = ColoredPartition::new(pi.body().to_vec(), Relation::MinDiff, false);
    Family::O(HalfLine::Plus).check_member(&out, energy)?;
    Ok(out)
}

/// O^{ρ+} → R₁: appends the terminal part.
pub fn add_ground(pi: &ColoredPartition, energy: &Energy) -> Result<ColoredPartition> {
    Family::O(HalfLine::Plus).check_member(pi, energy)?;
    let mut parts = pi.parts.clone();
    parts.push(Part::ground_zero(energy, 1));
    let out = ColoredPartition::new(parts, Relation::MinDiff, true);
    Family::R1.check_member(&out, energy)?;
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flatreg2Counts {
    pub f2: u64,
    pub f1: u64,
    pub r1: u64,
    pub o: u64,
    pub e: u64,
    pub r2: u64,
}

impl Flatreg2Counts {
    pub fn as_array(&self) -> [u64; 6] {
        [self.f2, self.f1, self.r1, self.o, self.e, self.r2]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flatreg2Report {
    pub n: i64,
    pub counts: Flatreg2Counts,
    pub all_equal: bool,
    /// Images under split, Ω, strip and R coincide with the enumerated targets.
    pub links_ok: bool,
}

fn members_of_size(family: Family, energy: &Energy, word: &ColorWord, max_n: i64) -> Result<Vec<Vec<ColoredPartition>>> {
    let budget = EnumBudget::new(max_n, sufficient_parts(family, word, max_n)).with_word(word.clone());
    let mut by_size = vec![Vec::new(); max_n as usize + 1];
    for p in enumerate(family, energy, &budget)? {
        let s = p.size(energy);
        if (0..=max_n).contains(&s) {
            by_size[s as usize].push(p);
        }
    }
    Ok(by_size)
}

fn same_set(
    source: &[ColoredPartition],
    target: &[ColoredPartition],
    map: impl Fn(&ColoredPartition) -> Result<ColoredPartition>,
) -> bool {
    let image: Result<BTreeSet<String>> = source.iter().map(|p| map(p).map(|q| format!("{q:?}"))).collect();
    let target: BTreeSet<String> = target.iter().map(|q| format!("{q:?}")).collect();
    match image {
        Ok(image) => image.len() == source.len() && image == target,
        Err(_) => false,
    }
}

/// Verifies the degree-two chain for `word` at every size `0..=max_n`.
pub fn verify_flatreg2_range(energy: &Energy, word: &ColorWord, max_n: i64) -> Result<Vec<Flatreg2Report>> {
    energy.require_ground_compatible()?;
    let plus = HalfLine::Plus;
    let f2 = members_of_size(Family::F2, energy, word, max_n)?;
    let f1 = members_of_size(Family::F1, energy, word, max_n)?;
    let r1 = members_of_size(Family::R1, energy, word, max_n)?;
    let o = members_of_size(Family::O(plus), energy, word, max_n)?;
    let e = members_of_size(Family::E(plus), energy, word, max_n)?;
    let r2 = members_of_size(Family::R2, energy, word, max_n)?;
    let mut out = Vec::new();
    for n in 0..=max_n as usize {
        let counts = Flatreg2Counts {
            f2: f2[n].len() as u64,
            f1: f1[n].len() as u64,
            r1: r1[n].len() as u64,
            o: o[n].len() as u64,
            e: e[n].len() as u64,
            r2: r2[n].len() as u64,
        };
        let arr = counts.as_array();
        let links_ok = same_set(&f2[n], &f1[n], |p| split_flat2(p, energy))
            && same_set(&f1[n], &r1[n], |p| omega(p, energy))
            && same_set(&r1[n], &o[n], |p| strip_ground(p, energy))
            && same_set(&e[n], &r2[n], |p| rmap(p, energy));
        out.push(Flatreg2Report {
            n: n as i64,
            all_equal: arr.iter().all(|&c| c == arr[0]),
            counts,
            links_ok,
        });
    }
    Ok(out)
}

/// Verifies the degree-two chain for `word` at size `n`.
pub fn verify_flatreg2(energy: &Energy, word: &ColorWord, n: i64) -> Result<Flatreg2Report> {
    if n < 0 {
        return invalid("size must be non-negative");
    }
    Ok(verify_flatreg2_range(energy, word, n)?.pop().expect("n + 1 reports"))
}

/// [`verify_flatreg2_range`] for every word in `words`, in parallel. Results
/// follow the order of `words`.
pub fn verify_flatreg2_words(
    energy: &Energy,
    words: &[ColorWord],
    max_n: i64,
) -> Result<Vec<(ColorWord, Vec<Flatreg2Report>)>> {
    use rayon::prelude::*;
    words
        .par_iter()
        .map(|w| verify_flatreg2_range(energy, w, max_n).map(|r| (w.clone(), r)))
        .collect()
}
