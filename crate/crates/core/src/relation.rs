//! Binary relations between parts and the derived energies ε₂, ε′₂, εᵏ.

use serde::Serialize;

use crate::energy::{Color, Energy};
use crate::error::{usage, Result};
use crate::part::{internal_energy, Part, PrimaryPart, SecondaryPart};

/// The relation that consecutive parts of a partition satisfy.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    /// ⋗: size difference equals the energy (εᵏ for parts of degree k).
    Flat,
    /// ≻_ε on primary parts: k − l ≥ ε(c, d).
    MinDiff,
    /// ≫_ε on primary and secondary parts.
    Mixed,
    /// ≫^ε on secondary parts: minimal difference ε′₂.
    SecondaryRegular,
}

/// ε₂(cc′, dd′) = ε(c,c′) + 2ε(c′,d) + ε(d,d′).
pub fn epsilon2(energy: &Energy, left: [Color; 2], right: [Color; 2]) -> i64 {
    let [c, c1] = left;
    let [d, d1] = right;
    energy.eps(c, c1) + 2 * energy.eps(c1, d) + energy.eps(d, d1)
}

/// The exception term δ^ε(cc′, dd′).
pub fn delta_exception(energy: &Energy, left: [Color; 2], right: [Color; 2]) -> Result<i64> {
    let delta_g = energy.delta_g()?;
    let g = energy.ground();
    let [c, c1] = left;
    let [d, d1] = right;
    let ng = |x: Color| x != g;
    if c1 == g && d == g && ng(c) && ng(d1) {
        return Ok(energy.eps(c, d1));
    }
    if delta_g == 1 {
        if c == g && ng(c1) && ng(d) && ng(d1) && energy.eps(c1, d) == 1 {
            return Ok(-1);
        }
        if c1 == g && ng(c) && ng(d) && ng(d1) && energy.eps(c, d) == 0 {
            return Ok(-1);
        }
        // c ∈ C′ is required too: for c = c_g, d′ = c_g the lemma on relations forces 0
        if d1 == g && ng(c) && ng(c1) && ng(d) && energy.eps(c1, d) == 0 {
            return Ok(1);
        }
        if d == g && ng(c) && ng(c1) && ng(d1) && energy.eps(c1, d1) == 1 {
            return Ok(1);
        }
    }
    Ok(0)
}

/// ε′₂ = ε₂ + 2δ^ε.
pub fn epsilon2_prime(energy: &Energy, left: [Color; 2], right: [Color; 2]) -> Result<i64> {
    for &c in left.iter().chain(right.iter()) {
        energy.check_color(c)?;
    }
    Ok(epsilon2(energy, left, right) + 2 * delta_exception(energy, left, right)?)
}

/// εᵏ(c_1…c_k, d_1…d_k): the flat energy between parts of degree k.
pub fn epsilon_k(energy: &Energy, left: &[Color], right: &[Color]) -> Result<i64> {
    let k = left.len();
    if k == 0 || right.len() != k {
        return usage(format!("epsilon_k needs two words of equal positive length, got {} and {}", k, right.len()));
    }
    let tail: i64 = right
        .windows(2)
        .enumerate()
        .map(|(u, w)| (k as i64 - 1 - u as i64) * energy.eps(w[0], w[1]))
        .sum();
    Ok(internal_energy(left, energy) + k as i64 * energy.eps(left[k - 1], right[0]) + tail)
}

fn min_diff(x: PrimaryPart, y: PrimaryPart, energy: &Energy) -> bool {
    x.size - y.size >= energy.eps(x.color, y.color)
}

fn mixed(x: &Part, y: &Part, energy: &Energy) -> Result<bool> {
    let e = |a, b| energy.eps(a, b);
    Ok(match (x, y) {
        (Part::Primary(p), Part::Primary(q)) => p.size - q.size > e(p.color, q.color),
        (Part::Primary(p), Part::Secondary(s)) => {
            p.size - s.size(energy) >= e(p.color, s.left) + e(s.left, s.right)
        }
        (Part::Secondary(s), Part::Primary(q)) => {
            s.size(energy) - q.size > e(s.left, s.right) + e(s.right, q.color)
        }
        (Part::Secondary(s), Part::Secondary(t)) => s.half - t.half >= e(s.right, t.left) + e(t.left, t.right),
        _ => return usage("the mixed relation is defined on primary and secondary parts only"),
    })
}

fn secondary_regular(x: SecondaryPart, y: SecondaryPart, energy: &Energy) -> Result<bool> {
    let threshold = delta_exception(energy, [x.left, x.right], [y.left, y.right])?;
    Ok(x.half - y.half - energy.eps(x.right, y.left) - energy.eps(y.left, y.right) >= threshold)
}

/// Whether `x` stands in relation `rel` to `y` (x to the left of y).
pub fn relate(x: &Part, y: &Part, energy: &Energy, rel: Relation) -> Result<bool> {
    match rel {
        Relation::Flat => {
            if x.degree() != y.degree() {
                return usage("the flat relation compares parts of equal degree");
            }
            let e = epsilon_k(energy, &x.colors(), &y.colors())?;
            Ok(x.size(energy) - y.size(energy) == e)
        }
        Relation::MinDiff => match (x, y) {
            (Part::Primary(p), Part::Primary(q)) => Ok(min_diff(*p, *q, energy)),
            _ => usage("the min-difference relation compares primary parts"),
        },
        Relation::Mixed => mixed(x, y, energy),
        Relation::SecondaryRegular => match (x, y) {
            (Part::Secondary(s), Part::Secondary(t)) => secondary_regular(*s, *t, energy),
            _ => usage("the secondary-regular relation compares secondary parts"),
        },
    }
}
