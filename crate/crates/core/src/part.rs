//! Parts of degree one, two and k.

use serde::Serialize;

use crate::energy::{Color, Energy};

/// A primary part `k_c`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimaryPart {
    pub size: i64,
    pub color: Color,
}

impl PrimaryPart {
    pub fn new(size: i64, color: Color) -> Self {
        PrimaryPart { size, color }
    }
}

/// A secondary part `(k, c, c′)` of size `2k + ε(c, c′)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SecondaryPart {
    pub half: i64,
    pub left: Color,
    pub right: Color,
}

impl SecondaryPart {
    pub fn new(half: i64, left: Color, right: Color) -> Self {
        SecondaryPart { half, left, right }
    }

    pub fn size(&self, energy: &Energy) -> i64 {
        2 * self.half + energy.eps(self.left, self.right)
    }

    /// Upper half γ = (k + ε(c, c′))_c.
    pub fn gamma(&self, energy: &Energy) -> PrimaryPart {
        PrimaryPart::new(self.half + energy.eps(self.left, self.right), self.left)
    }

    /// Lower half μ = k_{c′}.
    pub fn mu(&self) -> PrimaryPart {
        PrimaryPart::new(self.half, self.right)
    }
}

/// A part of degree k: base `p` and colors `c_1 … c_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DegreeKPart {
    pub base: i64,
    pub colors: Vec<Color>,
}

impl DegreeKPart {
    pub fn new(base: i64, colors: Vec<Color>) -> Self {
        DegreeKPart { base, colors }
    }

    pub fn degree(&self) -> usize {
        self.colors.len()
    }

    /// Σ u·ε(c_u, c_{u+1}) over u = 1..k−1.
    pub fn internal_energy(&self, energy: &Energy) -> i64 {
        internal_energy(&self.colors, energy)
    }

    /// k·p + Σ u·ε(c_u, c_{u+1}).
    pub fn size(&self, energy: &Energy) -> i64 {
        self.degree() as i64 * self.base + self.internal_energy(energy)
    }

    /// The halves γ_1, …, γ_k, where γ_i = (p + Σ_{u≥i} ε(c_u, c_{u+1}))_{c_i}.
    pub fn gammas(&self, energy: &Energy) -> Vec<PrimaryPart> {
        let k = self.degree();
        let mut out = vec![PrimaryPart::new(0, self.colors[0]); k];
        let mut acc = self.base;
        for i in (0..k).rev() {
            if i + 1 < k {
                acc += energy.eps(self.colors[i], self.colors[i + 1]);
            }
            out[i] = PrimaryPart::new(acc, self.colors[i]);
        }
        out
    }
}

pub(crate) fn internal_energy(colors: &[Color], energy: &Energy) -> i64 {
    colors
        .windows(2)
        .enumerate()
        .map(|(u, w)| (u as i64 + 1) * energy.eps(w[0], w[1]))
        .sum()
}

/// Any part that may appear in a colored partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Part {
    Primary(PrimaryPart),
    Secondary(SecondaryPart),
    /// Degree three or more.
    Higher(DegreeKPart),
}

impl Part {
    pub fn primary(size: i64, color: Color) -> Self {
        Part::Primary(PrimaryPart::new(size, color))
    }

    pub fn secondary(half: i64, left: Color, right: Color) -> Self {
        Part::Secondary(SecondaryPart::new(half, left, right))
    }

    /// Builds the part of degree `colors.len()` with the given base, using
    /// the primary or secondary variant when the degree allows.
    pub fn with_base(base: i64, colors: &[Color]) -> Self {
        match *colors {
            [c] => Part::primary(base, c),
            [c, d] => Part::secondary(base, c, d),
            _ => Part::Higher(DegreeKPart::new(base, colors.to_vec())),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Part::Primary(_) => 1,
            Part::Secondary(_) => 2,
            Part::Higher(p) => p.degree(),
        }
    }

    /// The base: size for primary parts, half for secondary parts.
    pub fn base(&self) -> i64 {
        match self {
            Part::Primary(p) => p.size,
            Part::Secondary(s) => s.half,
            Part::Higher(p) => p.base,
        }
    }

    pub fn colors(&self) -> Vec<Color> {
        match self {
            Part::Primary(p) => vec![p.color],
            Part::Secondary(s) => vec![s.left, s.right],
            Part::Higher(p) => p.colors.clone(),
        }
    }

    pub fn first_color(&self) -> Color {
        match self {
            Part::Primary(p) => p.color,
            Part::Secondary(s) => s.left,
            Part::Higher(p) => p.colors[0],
        }
    }

    pub fn last_color(&self) -> Color {
        match self {
            Part::Primary(p) => p.color,
            Part::Secondary(s) => s.right,
            Part::Higher(p) => *p.colors.last().expect("non-empty"),
        }
    }

    pub fn size(&self, energy: &Energy) -> i64 {
        match self {
            Part::Primary(p) => p.size,
            Part::Secondary(s) => s.size(energy),
            Part::Higher(p) => p.size(energy),
        }
    }

    pub fn to_degree_k(&self) -> DegreeKPart {
        DegreeKPart::new(self.base(), self.colors())
    }

    /// The zero part colored by k copies of the ground color.
    pub fn ground_zero(energy: &Energy, degree: usize) -> Self {
        Part::with_base(0, &vec![energy.ground(); degree])
    }

    pub fn is_ground_zero(&self, energy: &Energy) -> bool {
        self.base() == 0 && self.colors().iter().all(|&c| c == energy.ground())
    }

    pub fn as_primary(&self) -> Option<PrimaryPart> {
        match self {
            Part::Primary(p) => Some(*p),
            _ => None,
        }
    }

    pub fn as_secondary(&self) -> Option<SecondaryPart> {
        match self {
            Part::Secondary(s) => Some(*s),
            _ => None,
        }
    }
}

impl From<PrimaryPart> for Part {
    fn from(p: PrimaryPart) -> Self {
        Part::Primary(p)
    }
}

impl From<SecondaryPart> for Part {
    fn from(s: SecondaryPart) -> Self {
        Part::Secondary(s)
    }
}
