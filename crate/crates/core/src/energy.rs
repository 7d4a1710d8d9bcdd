//! Colors, energy matrices and ground compatibility.
//!
//! Energy files are plain text:
//!
//! ```text
//! # comments and blank lines are ignored
//! a b c        labels, in matrix order
//! c            ground label
//! 1 0 1        one row per color
//! 0 0 1
//! 0 0 0
//! ```
//!
//! Entry `(i, j)` is `ε(c_i, c_j)`. Labels start with an ASCII letter or `_`
//! and continue with letters, digits or `_`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Interned color index.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Color(pub usize);

impl Color {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Ordered color labels with a distinguished ground color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorSystem {
    names: Vec<String>,
    ground: Color,
}

fn valid_label(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl ColorSystem {
    pub fn new<S: AsRef<str>>(names: &[S], ground: &str) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if !valid_label(n) {
                return Err(Error::Structural(format!("invalid color label {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(Error::Structural(format!("duplicate color label {n:?}")));
            }
        }
        let ground = names
            .iter()
            .position(|n| n == ground)
            .map(Color)
            .ok_or_else(|| Error::Structural(format!("ground label {ground:?} is not a color")))?;
        Ok(ColorSystem { names, ground })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn ground(&self) -> Color {
        self.ground
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn label(&self, c: Color) -> &str {
        &self.names[c.0]
    }

    pub fn lookup(&self, label: &str) -> Option<Color> {
        self.names.iter().position(|n| n == label).map(Color)
    }

    pub fn colors(&self) -> impl Iterator<Item = Color> {
        (0..self.names.len()).map(Color)
    }

    /// The colors of C′, in matrix order.
    pub fn non_ground(&self) -> impl Iterator<Item = Color> + '_ {
        self.colors().filter(move |&c| c != self.ground)
    }

    /// Splits a run of concatenated labels into colors.
    ///
    /// The segmentation must be unique.
    pub fn segment(&self, s: &str) -> Result<Vec<Color>> {
        if !s.is_ascii() {
            return Err(Error::Parse(format!("color labels are ASCII: {s:?}")));
        }
        let bytes = s.as_bytes();
        let n = bytes.len();
        // ways[i] = number of segmentations of s[i..], capped at 2
        let mut ways = vec![0u8; n + 1];
        ways[n] = 1;
        for i in (0..n).rev() {
            let mut w = 0u8;
            for name in &self.names {
                if s[i..].starts_with(name.as_str()) {
                    w = w.saturating_add(ways[i + name.len()]).min(2);
                }
            }
            ways[i] = w;
        }
        match ways[0] {
            0 => return Err(Error::Parse(format!("cannot split {s:?} into color labels"))),
            1 => {}
            _ => return Err(Error::Parse(format!("ambiguous color labels in {s:?}"))),
        }
        let mut out = Vec::new();
        let mut i = 0;
        while i < n {
            let (c, name) = self
                .names
                .iter()
                .enumerate()
                .find(|(_, name)| s[i..].starts_with(name.as_str()) && ways[i + name.len()] > 0)
                .expect("segmentation exists");
            out.push(Color(c));
            i += name.len();
        }
        Ok(out)
    }

    /// Parses a color word: labels of non-ground colors, concatenated or
    /// separated by whitespace.
    pub fn parse_word(&self, s: &str) -> Result<ColorWord> {
        let mut colors = Vec::new();
        for chunk in s.split_whitespace() {
            colors.extend(self.segment(chunk)?);
        }
        ColorWord::new(colors, self)
    }

    pub fn format_colors(&self, colors: &[Color]) -> String {
        colors.iter().map(|&c| self.label(c)).collect()
    }
}

/// A sequence of non-ground colors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct ColorWord(Vec<Color>);

impl ColorWord {
    pub fn new(colors: Vec<Color>, system: &ColorSystem) -> Result<Self> {
        if let Some(&c) = colors.iter().find(|&&c| c == system.ground() || c.0 >= system.len()) {
            return Err(Error::Usage(format!("color index {} cannot appear in a color word", c.0)));
        }
        Ok(ColorWord(colors))
    }

    pub fn empty() -> Self {
        ColorWord(Vec::new())
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every word over `alphabet` of length at most `max_len`, shortest first.
    pub fn all_up_to(alphabet: &[Color], max_len: usize) -> Vec<ColorWord> {
        let mut out = vec![ColorWord::empty()];
        let mut layer = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for &c in alphabet {
                    let mut v: Vec<Color> = w.clone();
                    v.push(c);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned().map(ColorWord));
            layer = next;
        }
        out
    }
}

/// Dense integer energy table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnergyMatrix {
    dim: usize,
    values: Vec<i64>,
    minimal: bool,
}

impl EnergyMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::Structural(format!(
                "energy matrix is not square: row of length {} in a {dim}-row table",
                r.len()
            )));
        }
        let values: Vec<i64> = rows.iter().flatten().copied().collect();
        let minimal = values.iter().all(|&v| v == 0 || v == 1);
        Ok(EnergyMatrix { dim, values, minimal })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn get(&self, c: Color, d: Color) -> i64 {
        self.values[c.0 * self.dim + d.0]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.values.chunks(self.dim.max(1)).take(self.dim).map(<[i64]>::to_vec).collect()
    }
}

/// Why a pair of colors breaks ground compatibility.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    /// ε(c_g, c_g) ≠ 0.
    GroundDiagonal,
    /// ε(c_g, c) is not 0 or 1.
    NotBinary,
    /// ε(c_g, c) differs from the value on the first non-ground color.
    Inconsistent,
    /// ε(c, c_g) ≠ 1 − ε(c_g, c).
    NotComplementary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub left: Color,
    pub right: Color,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub minimal: bool,
    pub ground_ok: bool,
    /// Common value of ε(c_g, c); 0 when there is no non-ground color.
    pub delta_g: Option<u8>,
    pub violations: Vec<Violation>,
}

/// Checks minimality and ground compatibility of `matrix` over `colors`.
pub fn validate_energy(matrix: &EnergyMatrix, colors: &ColorSystem) -> Result<ValidationReport> {
    if matrix.dim() != colors.len() {
        return Err(Error::Structural(format!(
            "energy matrix has dimension {} but there are {} colors",
            matrix.dim(),
            colors.len()
        )));
    }
    let g = colors.ground();
    let mut violations = Vec::new();
    if matrix.get(g, g) != 0 {
        violations.push(Violation { left: g, right: g, kind: ViolationKind::GroundDiagonal });
    }
    let reference = colors.non_ground().map(|c| matrix.get(g, c)).next().unwrap_or(0);
    for c in colors.non_ground() {
        let up = matrix.get(g, c);
        if up != 0 && up != 1 {
            violations.push(Violation { left: g, right: c, kind: ViolationKind::NotBinary });
        } else if up != reference {
            violations.push(Violation { left: g, right: c, kind: ViolationKind::Inconsistent });
        }
        if matrix.get(c, g) != 1 - up {
            violations.push(Violation { left: c, right: g, kind: ViolationKind::NotComplementary });
        }
    }
    let ground_ok = violations.is_empty();
    Ok(ValidationReport {
        minimal: matrix.is_minimal(),
        ground_ok,
        delta_g: ground_ok.then_some(reference as u8),
        violations,
    })
}

/// A color system together with its energy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Energy {
    colors: ColorSystem,
    matrix: EnergyMatrix,
    delta_g: Option<u8>,
}

impl Energy {
    pub fn new(colors: ColorSystem, matrix: EnergyMatrix) -> Result<Self> {
        let report = validate_energy(&matrix, &colors)?;
        Ok(Energy { colors, matrix, delta_g: report.delta_g })
    }

    /// Builds an energy from labels, ground label and rows.
    pub fn from_table<S: AsRef<str>>(labels: &[S], ground: &str, rows: &[Vec<i64>]) -> Result<Self> {
        Energy::new(ColorSystem::new(labels, ground)?, EnergyMatrix::from_rows(rows)?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let labels: Vec<&str> = lines
            .next()
            .ok_or_else(|| Error::Parse("energy file is empty".into()))?
            .split_whitespace()
            .collect();
        let ground = lines.next().ok_or_else(|| Error::Parse("missing ground label line".into()))?;
        let mut rows = Vec::new();
        for line in lines {
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad matrix entry {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.len() != labels.len() {
            return Err(Error::Structural(format!(
                "expected {} matrix rows, found {}",
                labels.len(),
                rows.len()
            )));
        }
        Energy::from_table(&labels, ground, &rows)
    }

    /// Renders the energy in the file format accepted by [`Energy::parse`].
    pub fn to_text(&self) -> String {
        let mut out = self.colors.names().join(" ");
        out.push('\n');
        out.push_str(self.colors.label(self.colors.ground()));
        out.push('\n');
        for row in self.matrix.rows() {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn colors(&self) -> &ColorSystem {
        &self.colors
    }

    pub fn matrix(&self) -> &EnergyMatrix {
        &self.matrix
    }

    pub fn ground(&self) -> Color {
        self.colors.ground()
    }

    pub fn eps(&self, c: Color, d: Color) -> i64 {
        self.matrix.get(c, d)
    }

    pub fn report(&self) -> ValidationReport {
        validate_energy(&self.matrix, &self.colors).expect("dimensions checked at construction")
    }

    /// δ_g, or a usage error if the energy is not ground compatible.
    pub fn delta_g(&self) -> Result<i64> {
        self.delta_g
            .map(i64::from)
            .ok_or_else(|| Error::Usage("energy is not ground compatible".into()))
    }

    /// ρ = 1 − δ_g.
    pub fn rho(&self) -> Result<i64> {
        Ok(1 - self.delta_g()?)
    }

    pub fn is_ground_compatible(&self) -> bool {
        self.delta_g.is_some()
    }

    pub(crate) fn require_ground_compatible(&self) -> Result<()> {
        self.delta_g().map(|_| ())
    }

    pub(crate) fn check_color(&self, c: Color) -> Result<()> {
        if c.0 < self.colors.len() {
            Ok(())
        } else {
            Err(Error::Usage(format!("color index {} out of range", c.0)))
        }
    }
}

impl fmt::Display for Energy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The energy with colors a, b and ground c used for the worked bijection
/// example: rows a:(1,0,1), b:(0,0,1), c:(0,0,0).
pub fn descent_example() -> Energy {
    Energy::from_table(&["a", "b", "c"], "c", &[vec![1, 0, 1], vec![0, 0, 1], vec![0, 0, 0]])
        .expect("valid table")
}

/// The energy with colors a, b and ground c behind the degree-two example:
/// rows a:(1,1,1), b:(0,1,1), c:(0,0,0).
pub fn siladic_example() -> Energy {
    Energy::from_table(&["a", "b", "c"], "c", &[vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 0]])
        .expect("valid table")
}

/// Every minimal ground-compatible energy on `n` colors with the ground
/// color last, labelled `a`, `b`, ... .
#[allow(clippy::needless_range_loop)]
pub fn all_minimal_ground_compatible(n: usize) -> Vec<Energy> {
    assert!((1..=4).contains(&n), "supported for 1 to 4 colors");
    let labels: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let ground = labels[n - 1].clone();
    let inner = n - 1;
    let mut out = Vec::new();
    for delta in 0..=1i64 {
        if inner == 0 && delta == 1 {
            continue;
        }
        for mask in 0u32..(1 << (inner * inner)) {
            let mut rows = vec![vec![0i64; n]; n];
            for i in 0..inner {
                for j in 0..inner {
                    rows[i][j] = ((mask >> (i * inner + j)) & 1) as i64;
                }
                rows[i][n - 1] = 1 - delta;
                rows[n - 1][i] = delta;
            }
            out.push(Energy::from_table(&labels, &ground, &rows).expect("valid table"));
        }
    }
    out
}
