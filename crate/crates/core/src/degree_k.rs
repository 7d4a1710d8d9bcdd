//! Flat partitions into parts of degree k and their bijection with flat
//! partitions into primary parts.

use crate::energy::Energy;
use crate::enumerate::Family;
use crate::error::{usage, Result};
use crate::part::{DegreeKPart, Part};
use crate::partition::ColoredPartition;
use crate::relation::Relation;

pub use crate::relation::epsilon_k;

/// F_k: emits γ_1, …, γ_k for each part, cutting the last non-terminal part
/// after its last half that is not 0_{c_g}.
pub fn flatten_k(pi: &ColoredPartition, energy: &Energy, k: usize) -> Result<ColoredPartition> {
    if k == 0 {
        return usage("degree must be at least 1");
    }
    Family::Fk(k).check_member(pi, energy)?;
    let g = energy.ground();
    let body = pi.body();
    let mut parts = Vec::with_capacity(k * body.len() + 1);
    for (i, p) in body.iter().enumerate() {
        let gammas = p.to_degree_k().gammas(energy);
        let keep = if i + 1 == body.len() {
            gammas.iter().rposition(|h| h.size != 0 || h.color != g).map_or(0, |j| j + 1)
        } else {
            k
        };
        parts.extend(gammas[..keep].iter().map(|&h| Part::Primary(h)));
    }
    parts.push(Part::primary(0, g));
    Ok(ColoredPartition::new(parts, Relation::Flat, true))
}

/// F_k⁻¹: groups consecutive primary parts k at a time, padding the last
/// group with zero ground parts.
pub fn unflatten_k(pi: &ColoredPartition, energy: &Energy, k: usize) -> Result<ColoredPartition> {
    if k == 0 {
        return usage("degree must be at least 1");
    }
    Family::F1.check_member(pi, energy)?;
    let g = energy.ground();
    let mut body: Vec<Part> = pi.body().to_vec();
    while !body.len().is_multiple_of(k) {
        body.push(Part::primary(0, g));
    }
    let mut parts: Vec<Part> = body
        .chunks(k)
        .map(|chunk| {
            let colors = chunk.iter().map(Part::first_color).collect::<Vec<_>>();
            Part::with_base(chunk[k - 1].base(), &colors)
        })
        .collect();
    parts.push(Part::ground_zero(energy, k));
    Ok(ColoredPartition::new(parts, Relation::Flat, true))
}

/// Σ γ_i reconstitutes the part, and the halves form a flat chain.
pub fn halves_consistent(part: &DegreeKPart, energy: &Energy) -> bool {
    let gammas = part.gammas(energy);
    let total: i64 = gammas.iter().map(|h| h.size).sum();
    total == part.size(energy)
        && gammas
            .windows(2)
            .all(|w| w[0].size - w[1].size == energy.eps(w[0].color, w[1].color))
}
