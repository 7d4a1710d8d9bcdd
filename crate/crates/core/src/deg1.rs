//! The bijection Ω between grounded flat and grounded regular partitions
//! into primary parts.
//!
//! A regular partition π with non-ground colors c_0, …, c_{s−1} splits as
//! μ + ν, where μ is the flat partition with the same colors (and no ground
//! parts) and ν is a classical partition with s parts, zeros included.
//! Ω keeps μ and builds ν from the positions of the ground parts of the flat
//! partition; Ω⁻¹ redistributes the conjugate of ν into ground parts.

use serde::Serialize;

use crate::energy::{Color, Energy};
use crate::enumerate::Family;
use crate::error::{Error, Result};
use crate::part::Part;
use crate::partition::{flat_from_colors, ColoredPartition};
use crate::relation::Relation;

/// Weakly decreasing positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct ClassicalPartition(Vec<u64>);

impl ClassicalPartition {
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(ClassicalPartition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        ClassicalPartition(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

/// ν′_j = |{i : ν_i > j}|.
pub fn conjugate(lambda: &ClassicalPartition) -> ClassicalPartition {
    let largest = lambda.0.first().copied().unwrap_or(0);
    ClassicalPartition((0..largest).map(|j| lambda.0.iter().filter(|&&p| p > j).count() as u64).collect())
}

/// A regular partition written as μ + ν.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularDecomposition {
    /// Flat partition with the same color word and no ground parts.
    pub mu: ColoredPartition,
    /// s non-negative entries, weakly decreasing.
    pub nu: Vec<u64>,
}

/// Positions and descents of a flat partition's color sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentData {
    /// Positions u_0 < … < u_{s−1} of the non-ground parts.
    pub positions: Vec<usize>,
    /// k in 1..s with ε(c_{k−1}, c_k) = 0.
    pub descents: Vec<usize>,
    /// {0..s} minus the descents.
    pub non_descents: Vec<usize>,
    /// k with u_k − u_{k−1} > 1 (u_{−1} = −1): ground parts sit before part k.
    pub gaps: Vec<usize>,
    pub descents_in_gaps: Vec<usize>,
    pub descents_outside_gaps: Vec<usize>,
}

fn gap_before(positions: &[usize], k: usize) -> usize {
    let prev = if k == 0 { -1 } else { positions[k - 1] as i64 };
    (positions[k] as i64 - prev - 1) as usize
}

/// Descent data of a grounded flat partition.
pub fn descent_data(pi: &ColoredPartition, energy: &Energy) -> DescentData {
    let g = energy.ground();
    let body = pi.body();
    let positions: Vec<usize> = (0..body.len()).filter(|&i| body[i].first_color() != g).collect();
    let colors: Vec<Color> = positions.iter().map(|&i| body[i].first_color()).collect();
    let s = positions.len();
    let descents: Vec<usize> = (1..s).filter(|&k| energy.eps(colors[k - 1], colors[k]) == 0).collect();
    let non_descents = (0..s).filter(|k| !descents.contains(k)).collect();
    let gaps: Vec<usize> = (0..s).filter(|&k| gap_before(&positions, k) > 0).collect();
    let descents_in_gaps = descents.iter().copied().filter(|k| gaps.contains(k)).collect();
    let descents_outside_gaps = descents.iter().copied().filter(|k| !gaps.contains(k)).collect();
    DescentData { positions, descents, non_descents, gaps, descents_in_gaps, descents_outside_gaps }
}

/// Splits a regular partition into μ and ν.
pub fn decompose(pi: &ColoredPartition, energy: &Energy) -> Result<RegularDecomposition> {
    Family::R1.check_member(pi, energy)?;
    let word: Vec<Color> = pi.body().iter().map(Part::first_color).collect();
    let mu = flat_from_colors(&word, energy);
    let nu = pi
        .body()
        .iter()
        .zip(&mu.parts)
        .map(|(p, m)| (p.base() - m.base()) as u64)
        .collect();
    Ok(RegularDecomposition { mu: ColoredPartition::new(mu.parts, Relation::MinDiff, true), nu })
}

/// Adds ν back onto μ.
pub fn recompose(dec: &RegularDecomposition) -> ColoredPartition {
    let mut parts = dec.mu.parts.clone();
    for (p, &v) in parts.iter_mut().zip(&dec.nu) {
        *p = Part::primary(p.base() + v as i64, p.first_color());
    }
    ColoredPartition::new(parts, Relation::MinDiff, true)
}

/// Ω: grounded flat → grounded regular.
pub fn omega(pi: &ColoredPartition, energy: &Energy) -> Result<ColoredPartition> {
    energy.require_ground_compatible()?;
    Family::F1.check_member(pi, energy)?;
    let data = descent_data(pi, energy);
    let s = data.positions.len();
    let counted = |k: usize| data.non_descents.contains(&k) || data.descents_in_gaps.contains(&k);
    // value[k] = |{k..s−1} ∩ (D̄ ⊔ D_W)|
    let mut value = vec![0u64; s + 1];
    for k in (0..s).rev() {
        value[k] = value[k + 1] + counted(k) as u64;
    }
    let mut nu_conj = Vec::new();
    for (k, &v) in value.iter().enumerate().take(s) {
        let gap = gap_before(&data.positions, k);
        if !data.descents.contains(&k) {
            nu_conj.extend(std::iter::repeat_n(v, gap));
        } else if data.descents_in_gaps.contains(&k) {
            nu_conj.extend(std::iter::repeat_n(v, gap - 1));
            nu_conj.push(v + k as u64);
        }
    }
    let nu_conj = ClassicalPartition::from_unsorted(nu_conj);
    let mut nu = conjugate(&nu_conj).0;
    if nu.len() > s {
        return Err(Error::InvalidInput("ground parts do not fit the color word".into()));
    }
    nu.resize(s, 0);
    let word: Vec<Color> = data.positions.iter().map(|&i| pi.parts[i].first_color()).collect();
    let mu = flat_from_colors(&word, energy);
    let dec = RegularDecomposition { mu: ColoredPartition::new(mu.parts, Relation::MinDiff, true), nu };
    Ok(recompose(&dec))
}

/// Ω⁻¹: grounded regular → grounded flat.
pub fn omega_inv(pi: &ColoredPartition, energy: &Energy) -> Result<ColoredPartition> {
    let delta_g = energy.delta_g()?;
    let dec = decompose(pi, energy)?;
    let s = dec.nu.len();
    let nu_conj = conjugate(&ClassicalPartition::from_unsorted(dec.nu.clone())).0;
    let mu: Vec<i64> = dec.mu.parts[..s].iter().map(Part::base).collect();
    // a_k = δ_g + |μ_k| + k, weakly increasing in k
    let a: Vec<i64> = (0..s).map(|k| delta_g + mu[k] + k as i64).collect();
    let mut mu_new = mu.clone();
    let mut ground_sizes = Vec::with_capacity(nu_conj.len());
    for (u, &v) in nu_conj.iter().enumerate() {
        let t = v as i64 - u as i64 - 1;
        let below = a.iter().filter(|&&x| x <= t).count();
        for m in mu_new.iter_mut().take(below) {
            *m += 1;
        }
        ground_sizes.push(v as i64 - below as i64);
    }
    // a ground part of size x sits right before the first μ′_k with δ_g + |μ′_k| = x
    let g = energy.ground();
    let mut slots: Vec<Vec<i64>> = vec![Vec::new(); s + 1];
    for &x in &ground_sizes {
        let k = (0..s).find(|&k| delta_g + mu_new[k] == x).unwrap_or(s);
        slots[k].push(x);
    }
    let mut parts = Vec::new();
    for k in 0..s {
        parts.extend(slots[k].iter().map(|&x| Part::primary(x, g)));
        parts.push(Part::primary(mu_new[k], dec.mu.parts[k].first_color()));
    }
    parts.extend(slots[s].iter().map(|&x| Part::primary(x, g)));
    parts.push(Part::primary(0, g));
    let out = ColoredPartition::new(parts, Relation::Flat, true);
    Family::F1.check_member(&out, energy).map_err(|e| {
        Error::InvalidInput(format!("inverse construction left the flat family: {e}"))
    })?;
    Ok(out)
}
