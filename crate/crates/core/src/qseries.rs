//! Truncated power series in q with commuting color variables.
//!
//! A series stores exact integer coefficients indexed by a q-degree
//! `0..=order` and an exponent vector over named color variables.
//!
//! ```
//! use partition_forge::qseries::{pochhammer_expand, ProductFactor};
//!
//! // (-q; q)_inf up to q^5
//! let s = pochhammer_expand(&[ProductFactor::neg(vec![], 1, 1)], &[], 5).unwrap();
//! let c: Vec<i64> = s.q_coefficients().iter().map(|c| c.try_into().unwrap()).collect();
//! assert_eq!(c, vec![1, 1, 1, 2, 2, 3]);
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::energy::{Color, ColorSystem, Energy};
use crate::error::{usage, Result};
use crate::part::Part;
use crate::partition::ColoredPartition;

type Key = (u32, Vec<i32>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: u32,
    vars: Vec<String>,
    terms: BTreeMap<Key, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: u32, vars: &[String]) -> Self {
        TruncatedSeries { order, vars: vars.to_vec(), terms: BTreeMap::new() }
    }

    pub fn one(order: u32, vars: &[String]) -> Self {
        let mut s = Self::zero(order, vars);
        s.add_term(0, vec![0; vars.len()], BigInt::one());
        s
    }

    /// The single term `coeff · q^degree · Π vars^exps` (zero above the order).
    pub fn monomial(order: u32, vars: &[String], degree: u32, exps: Vec<i32>, coeff: BigInt) -> Result<Self> {
        if exps.len() != vars.len() {
            return usage("exponent vector does not match the variables");
        }
        let mut s = Self::zero(order, vars);
        s.add_term(degree, exps, coeff);
        Ok(s)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &[i32], &BigInt)> {
        self.terms.iter().map(|((d, e), c)| (*d, e.as_slice(), c))
    }

    fn add_term(&mut self, degree: u32, exps: Vec<i32>, coeff: BigInt) {
        if degree > self.order || coeff.is_zero() {
            return;
        }
        let key = (degree, exps);
        let entry = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return usage(format!("series orders differ: {} and {}", self.order, other.order));
        }
        if self.vars != other.vars {
            return usage("series use different color variables");
        }
        Ok(())
    }

    pub fn coeff(&self, degree: u32, exps: &[i32]) -> BigInt {
        self.terms.get(&(degree, exps.to_vec())).cloned().unwrap_or_default()
    }

    /// Coefficients of q^0..q^order with every color variable set to 1.
    pub fn q_coefficients(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.order as usize + 1];
        for ((d, _), c) in &self.terms {
            v[*d as usize] += c;
        }
        v
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for ((d, e), c) in &other.terms {
            out.add_term(*d, e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.order, &self.vars);
        for ((d1, e1), c1) in &self.terms {
            for ((d2, e2), c2) in &other.terms {
                if d1 + d2 > self.order {
                    continue;
                }
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(d1 + d2, e, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Multiplies by `1 + coeff · m · q^degree`.
    fn mul_binomial(&mut self, coeff: &BigInt, m: &[i32], degree: u32) {
        if degree > self.order {
            return;
        }
        let shifted: Vec<(Key, BigInt)> = self
            .terms
            .iter()
            .filter(|((d, _), _)| d + degree <= self.order)
            .map(|((d, e), c)| ((d + degree, e.iter().zip(m).map(|(a, b)| a + b).collect()), c * coeff))
            .collect();
        for ((d, e), c) in shifted {
            self.add_term(d, e, c);
        }
    }

    /// Multiplies by `1 / (1 − coeff · m · q^degree)`, `degree ≥ 1`.
    fn mul_geometric(&mut self, coeff: &BigInt, m: &[i32], degree: u32) {
        // row d is final once every row below it has been pushed up
        let mut acc = self.clone();
        let mut d = 0;
        while d + degree <= self.order {
            let row: Vec<(Key, BigInt)> = acc
                .terms
                .range((d, Vec::new())..(d + 1, Vec::new()))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect();
            for ((dd, e), c) in row {
                let e2: Vec<i32> = e.iter().zip(m).map(|(a, b)| a + b).collect();
                acc.add_term(dd + degree, e2, c * coeff);
            }
            d += 1;
        }
        *self = acc;
    }

    /// Substitutes 1 for every color variable.
    pub fn forget_colors(&self) -> Self {
        let mut out = Self::zero(self.order, &[]);
        for ((d, _), c) in &self.terms {
            out.add_term(*d, Vec::new(), c.clone());
        }
        out
    }

    /// Canonical text form: one term per line, `coeff * q^d * var^e ...`,
    /// sorted by degree then exponent vector.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut lines = Vec::new();
        for ((d, e), c) in &self.terms {
            let mut line = format!("{c} * q^{d}");
            for (name, &x) in self.vars.iter().zip(e) {
                if x != 0 {
                    line.push_str(&format!(" * {name}^{x}"));
                }
            }
            lines.push(line);
        }
        lines.join("\n")
    }

    pub fn dump(&self) -> SeriesDump {
        SeriesDump {
            order: self.order,
            variables: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|((d, e), c)| TermDump { q: *d, exponents: e.clone(), coeff: c.to_string() })
                .collect(),
        }
    }

    /// Terms on which two series differ, as (degree, exponents, left, right).
    pub fn diff(&self, other: &Self) -> Vec<(u32, Vec<i32>, BigInt, BigInt)> {
        let mut keys: Vec<&Key> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|k| {
                let a = self.coeff(k.0, &k.1);
                let b = other.coeff(k.0, &k.1);
                (a != b).then(|| (k.0, k.1.clone(), a, b))
            })
            .collect()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Machine-readable form of a series. Coefficients are decimal strings.
#[derive(Clone, Debug, Serialize)]
pub struct SeriesDump {
    pub order: u32,
    pub variables: Vec<String>,
    pub terms: Vec<TermDump>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TermDump {
    pub q: u32,
    pub exponents: Vec<i32>,
    pub coeff: String,
}

/// The product Π_j (1 + sign · m · q^{a + j·b})^{±1} over j = 0, 1, ….
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductFactor {
    /// +1 for factors `1 + m q^e`, −1 for factors `1 − m q^e`.
    pub sign: i8,
    pub monomial: Vec<i32>,
    pub offset: i64,
    pub modulus: i64,
    pub reciprocal: bool,
    /// Number of factors; `None` for an infinite product.
    pub length: Option<u32>,
}

impl ProductFactor {
    /// (m q^a; q^b)_∞.
    pub fn pos(monomial: Vec<i32>, offset: i64, modulus: i64) -> Self {
        ProductFactor { sign: -1, monomial, offset, modulus, reciprocal: false, length: None }
    }

    /// (−m q^a; q^b)_∞.
    pub fn neg(monomial: Vec<i32>, offset: i64, modulus: i64) -> Self {
        ProductFactor { sign: 1, monomial, offset, modulus, reciprocal: false, length: None }
    }

    pub fn inverse(mut self) -> Self {
        self.reciprocal = !self.reciprocal;
        self
    }

    pub fn truncated(mut self, length: u32) -> Self {
        self.length = Some(length);
        self
    }
}

/// Expands a product of factors to order `order`.
pub fn pochhammer_expand(factors: &[ProductFactor], vars: &[String], order: u32) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::one(order, vars);
    for f in factors {
        if f.monomial.len() != vars.len() {
            return usage("factor monomial does not match the variables");
        }
        if f.modulus < 1 {
            return usage(format!("factor modulus must be at least 1, got {}", f.modulus));
        }
        if f.sign != 1 && f.sign != -1 {
            return usage("factor sign must be 1 or -1");
        }
        if f.reciprocal && f.offset < 1 {
            return usage(format!(
                "reciprocal factor with offset {} does not terminate at any order",
                f.offset
            ));
        }
        if f.offset < 0 {
            return usage(format!("factor offset {} gives negative q-degrees", f.offset));
        }
        let coeff = BigInt::from(f.sign);
        let mut j = 0u32;
        loop {
            if f.length.is_some_and(|l| j >= l) {
                break;
            }
            let e = f.offset + f.modulus * j as i64;
            if e > order as i64 {
                break;
            }
            if f.reciprocal {
                s.mul_geometric(&-&coeff, &f.monomial, e as u32);
            } else {
                s.mul_binomial(&coeff, &f.monomial, e as u32);
            }
            j += 1;
        }
    }
    Ok(s)
}

/// Image of one color under a substitution: q^{q_shift} times an optional
/// color variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorImage {
    pub q_shift: i64,
    pub variable: Option<usize>,
}

/// Maps a part `k_c` to `q^{q_scale·k + q_shift(c)}` times the variable of c;
/// higher-degree parts take the product over their primary colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Substitution {
    pub q_scale: i64,
    pub images: Vec<ColorImage>,
    pub variables: Vec<String>,
}

impl Substitution {
    /// Plain sizes; each non-ground color becomes the variable of its label.
    pub fn sizes(colors: &ColorSystem) -> Self {
        Self::affine(colors, 1, &vec![0; colors.len()], true)
    }

    /// `k_c ↦ q^{scale·k + shifts[c]}`, keeping non-ground colors as variables
    /// when `keep_colors` is set.
    pub fn affine(colors: &ColorSystem, scale: i64, shifts: &[i64], keep_colors: bool) -> Self {
        let mut variables = Vec::new();
        let images = colors
            .colors()
            .map(|c| {
                let variable = (keep_colors && c != colors.ground()).then(|| {
                    variables.push(colors.label(c).to_string());
                    variables.len() - 1
                });
                ColorImage { q_shift: shifts[c.0], variable }
            })
            .collect();
        Substitution { q_scale: scale, images, variables }
    }

    pub fn shift(&self, c: Color) -> i64 {
        self.images[c.0].q_shift
    }

    /// q-degree and color exponents of one part.
    pub fn part_term(&self, part: &Part, energy: &Energy) -> (i64, Vec<i32>) {
        let mut exps = vec![0; self.variables.len()];
        let mut degree = self.q_scale * part.size(energy);
        for c in part.colors() {
            let img = &self.images[c.0];
            degree += img.q_shift;
            if let Some(v) = img.variable {
                exps[v] += 1;
            }
        }
        (degree, exps)
    }

    pub fn partition_term(&self, pi: &ColoredPartition, energy: &Energy) -> (i64, Vec<i32>) {
        let mut exps = vec![0; self.variables.len()];
        let mut degree = 0;
        for p in &pi.parts {
            let (d, e) = self.part_term(p, energy);
            degree += d;
            for (a, b) in exps.iter_mut().zip(e) {
                *a += b;
            }
        }
        (degree, exps)
    }
}

/// Σ C(π) q^{|π|} over the listed partitions, after `subst`.
pub fn gf_from_partitions(
    partitions: &[ColoredPartition],
    energy: &Energy,
    subst: &Substitution,
    order: u32,
) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::zero(order, &subst.variables);
    for pi in partitions {
        let (d, e) = subst.partition_term(pi, energy);
        if d < 0 {
            return usage(format!(
                "partition {} has negative degree {d} after substitution",
                pi.to_text(energy)
            ));
        }
        if d <= order as i64 {
            s.add_term(d as u32, e, BigInt::one());
        }
    }
    Ok(s)
}

/// Converts a coefficient known to be a small non-negative count.
pub fn as_count(c: &BigInt) -> u64 {
    if c.is_negative() {
        panic!("negative coefficient {c} where a count was expected");
    }
    u64::try_from(c).expect("coefficient fits in u64")
}
