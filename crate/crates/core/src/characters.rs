//! Level-one character identities as flat-partition generating functions.
//!
//! Each configuration carries a minimal energy ε, the crystal energy ε′
//! obtained from it by an affine change of sizes `k_c ↦ scale·k + shift_c`,
//! and the product side, all in (q, color) variables. Both energies share
//! one color order, so a single substitution serves both paths.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::energy::{ColorSystem, Energy, EnergyMatrix};
use crate::enumerate::{enumerate, EnumBudget, Family};
use crate::error::{usage, Error, Result};
use crate::qseries::{gf_from_partitions, pochhammer_expand, ProductFactor, Substitution, TruncatedSeries};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CrystalFamily {
    /// A_{2n}^{(2)}, weight Λ₀.
    A2n2,
    /// D_{n+1}^{(2)}, weight Λ₀.
    DLambda0,
    /// D_{n+1}^{(2)}, weight Λ_n.
    DLambdaN,
    /// B_n^{(1)}, weight Λ_n.
    BLambdaN,
}

impl CrystalFamily {
    pub const ALL: [CrystalFamily; 4] =
        [CrystalFamily::A2n2, CrystalFamily::DLambda0, CrystalFamily::DLambdaN, CrystalFamily::BLambdaN];

    pub fn min_rank(self) -> usize {
        match self {
            CrystalFamily::BLambdaN => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CrystalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrystalFamily::A2n2 => "A2n2",
            CrystalFamily::DLambda0 => "D-L0",
            CrystalFamily::DLambdaN => "D-Ln",
            CrystalFamily::BLambdaN => "B-Ln",
        })
    }
}

impl FromStr for CrystalFamily {
    type Err = Error;

    /// Accepts `A2n2`, `D-L0`, `D-Ln` and `B-Ln`, case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a2n2" | "a" => Ok(CrystalFamily::A2n2),
            "d-l0" | "dl0" | "d-lambda0" => Ok(CrystalFamily::DLambda0),
            "d-ln" | "dln" | "d-lambdan" => Ok(CrystalFamily::DLambdaN),
            "b-ln" | "bln" | "b-lambdan" | "b" => Ok(CrystalFamily::BLambdaN),
            _ => usage(format!("unknown crystal family {s:?}; expected A2n2, D-L0, D-Ln or B-Ln")),
        }
    }
}

/// `k_c ↦ q_scale·k + shifts[c]`; the ground color has shift 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transformation {
    pub q_scale: i64,
    pub shifts: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrystalConfig {
    pub family: CrystalFamily,
    pub rank: usize,
    pub epsilon: Energy,
    pub epsilon_prime: Energy,
    pub transform: Transformation,
    /// Product side; monomials over the non-ground colors in order.
    pub product: Vec<ProductFactor>,
}

/// Largest supported rank; keeps color labels single-digit.
pub const MAX_RANK: usize = 9;

fn unbarred(i: usize) -> String {
    format!("c{i}")
}

fn barred(i: usize) -> String {
    format!("c{i}b")
}

/// Matrix from a rule on label pairs, in the order of `labels`.
fn table(labels: &[String], rule: impl Fn(&str, &str) -> i64) -> Vec<Vec<i64>> {
    labels.iter().map(|x| labels.iter().map(|y| rule(x, y)).collect()).collect()
}

fn position(order: &[String], x: &str) -> usize {
    order.iter().position(|l| l == x).expect("label in order")
}

/// 1 when x comes no later than y in `order`.
fn weakly_before(order: &[String], x: &str, y: &str) -> i64 {
    (position(order, x) <= position(order, y)) as i64
}

fn energy(labels: &[String], ground: &str, rows: Vec<Vec<i64>>) -> Energy {
    Energy::new(
        ColorSystem::new(labels, ground).expect("distinct labels"),
        EnergyMatrix::from_rows(&rows).expect("square table"),
    )
    .expect("dimensions agree")
}

impl CrystalConfig {
    pub fn colors(&self) -> &ColorSystem {
        self.epsilon.colors()
    }

    /// The non-ground color labels, which are the series variables.
    pub fn variables(&self) -> Vec<String> {
        let cs = self.colors();
        cs.non_ground().map(|c| cs.label(c).to_string()).collect()
    }

    /// T as a substitution on parts colored for ε.
    pub fn substitution(&self) -> Substitution {
        Substitution::affine(self.colors(), self.transform.q_scale, &self.transform.shifts, true)
    }

    /// ε′(c,d) = scale·ε(c,d) + shift_c − shift_d for every pair, which is
    /// what makes T carry ε-flat partitions onto ε′-flat ones.
    pub fn transform_consistent(&self) -> bool {
        let t = &self.transform;
        let cs = self.colors();
        cs.colors().all(|c| {
            cs.colors().all(|d| {
                self.epsilon_prime.eps(c, d) == t.q_scale * self.epsilon.eps(c, d) + t.shifts[c.0] - t.shifts[d.0]
            })
        })
    }

    /// A part cap large enough for every flat partition of weight at most
    /// `order`: at most `order` parts have positive weight and the zero-weight
    /// runs are bounded by the number of colors.
    pub fn part_cap(&self, order: u32) -> usize {
        3 * order as usize + 2 * self.colors().len() + 2
    }

    fn unit(&self, labels: &[&str]) -> Vec<i32> {
        let vars = self.variables();
        let mut v = vec![0; vars.len()];
        for l in labels {
            v[vars.iter().position(|x| x == l).expect("variable")] += 1;
        }
        v
    }
}

/// Builds the configuration for `family` at rank `rank`.
pub fn build_config(family: CrystalFamily, rank: usize) -> Result<CrystalConfig> {
    if rank < family.min_rank() || rank > MAX_RANK {
        return usage(format!(
            "{family} needs rank between {} and {MAX_RANK}, got {rank}",
            family.min_rank()
        ));
    }
    let n = rank;
    let up: Vec<String> = (1..=n).map(unbarred).collect();
    let down: Vec<String> = (1..=n).rev().map(barred).collect();
    let c0 = unbarred(0);
    let c0b = barred(0);

    let mut cfg = match family {
        CrystalFamily::A2n2 => {
            // c1 … cn, cnb … c1b, c0
            let labels: Vec<String> = up.iter().chain(&down).cloned().chain([c0.clone()]).collect();
            let eps = table(&labels, |x, y| if x == c0 && y == c0 { 0 } else { weakly_before(&labels, x, y) });
            let eps_prime = table(&labels, |x, y| match (x == c0, y == c0) {
                (true, true) => 0,
                (true, false) | (false, true) => 1,
                _ => 2 * weakly_before(&labels, x, y),
            });
            let shifts = labels.iter().map(|l| if *l == c0 { 0 } else { -1 }).collect();
            CrystalConfig {
                family,
                rank,
                epsilon: energy(&labels, &c0, eps),
                epsilon_prime: energy(&labels, &c0, eps_prime),
                transform: Transformation { q_scale: 2, shifts },
                product: Vec::new(),
            }
        }
        CrystalFamily::DLambda0 | CrystalFamily::DLambdaN => {
            // c1 … cn, c0b, cnb … c1b, c0 for both weights
            let labels: Vec<String> =
                up.iter().cloned().chain([c0b.clone()]).chain(down.iter().cloned()).chain([c0.clone()]).collect();
            let eps_prime = table(&labels, |x, y| match (x == c0, y == c0) {
                (true, true) => 0,
                (true, false) | (false, true) => 1,
                _ if x == c0b && y == c0b => 0,
                _ => 2 * weakly_before(&labels, x, y),
            });
            if family == CrystalFamily::DLambda0 {
                let eps = table(&labels, |x, y| {
                    if x == y && (*x == c0 || *x == c0b) {
                        0
                    } else {
                        weakly_before(&labels, x, y)
                    }
                });
                let shifts = labels.iter().map(|l| if *l == c0 { 0 } else { -1 }).collect();
                CrystalConfig {
                    family,
                    rank,
                    epsilon: energy(&labels, &c0, eps),
                    epsilon_prime: energy(&labels, &c0, eps_prime),
                    transform: Transformation { q_scale: 2, shifts },
                    product: Vec::new(),
                }
            } else {
                // the minimal energy follows cnb … c1b, c0, c1 … cn, c0b
                let chain: Vec<String> =
                    down.iter().cloned().chain([c0.clone()]).chain(up.iter().cloned()).chain([c0b.clone()]).collect();
                let eps = table(&labels, |x, y| {
                    if x == y && (*x == c0 || *x == c0b) {
                        0
                    } else {
                        weakly_before(&chain, x, y)
                    }
                });
                let shifts = labels
                    .iter()
                    .map(|l| {
                        if *l == c0 {
                            -1
                        } else if down.contains(l) {
                            -2
                        } else {
                            0
                        }
                    })
                    .collect();
                CrystalConfig {
                    family,
                    rank,
                    epsilon: energy(&labels, &c0b, eps),
                    epsilon_prime: energy(&labels, &c0b, eps_prime),
                    transform: Transformation { q_scale: 2, shifts },
                    product: Vec::new(),
                }
            }
        }
        CrystalFamily::BLambdaN => {
            // cnb … c1b, c1 … cn, c0b
            let labels: Vec<String> = down.iter().chain(&up).cloned().chain([c0b.clone()]).collect();
            let c1 = unbarred(1);
            let c1b = barred(1);
            let eps = table(&labels, |x, y| {
                if (x == c0b && y == c0b) || (*x == c1b && *y == c1) {
                    0
                } else {
                    weakly_before(&labels, x, y)
                }
            });
            let eps_prime = table(&labels, |x, y| {
                let xb = down.iter().any(|l| l == x);
                let yb = down.iter().any(|l| l == y);
                if x == c0b {
                    return yb as i64;
                }
                if y == c0b {
                    return (!xb) as i64;
                }
                match (xb, yb) {
                    (true, true) | (false, false) => weakly_before(&labels, x, y),
                    (true, false) => -((*x == c1b && *y == c1) as i64),
                    (false, true) => 1,
                }
            });
            let shifts = labels.iter().map(|l| if down.contains(l) { -1 } else { 0 }).collect();
            CrystalConfig {
                family,
                rank,
                epsilon: energy(&labels, &c0b, eps),
                epsilon_prime: energy(&labels, &c0b, eps_prime),
                transform: Transformation { q_scale: 1, shifts },
                product: Vec::new(),
            }
        }
    };
    cfg.product = product_side(&cfg, &up, &down);
    Ok(cfg)
}

fn product_side(cfg: &CrystalConfig, up: &[String], down: &[String]) -> Vec<ProductFactor> {
    let mut f = Vec::new();
    match cfg.family {
        CrystalFamily::A2n2 => {
            for l in up.iter().chain(down) {
                f.push(ProductFactor::neg(cfg.unit(&[l]), 1, 2));
            }
        }
        CrystalFamily::DLambda0 => {
            for l in up.iter().chain(down) {
                f.push(ProductFactor::neg(cfg.unit(&[l]), 1, 2));
            }
            f.push(ProductFactor::pos(cfg.unit(&["c0b"]), 1, 2).inverse());
        }
        CrystalFamily::DLambdaN => {
            for l in up {
                f.push(ProductFactor::neg(cfg.unit(&[l]), 2, 2));
            }
            for l in down {
                f.push(ProductFactor::neg(cfg.unit(&[l]), 0, 2));
            }
            f.push(ProductFactor::pos(cfg.unit(&["c0"]), 1, 2).inverse());
        }
        CrystalFamily::BLambdaN => {
            for l in up {
                f.push(ProductFactor::neg(cfg.unit(&[l]), 1, 1));
            }
            for l in down {
                f.push(ProductFactor::neg(cfg.unit(&[l]), 0, 1));
            }
            f.push(ProductFactor::pos(cfg.unit(&["c1", "c1b"]), 1, 2).inverse());
        }
    }
    f
}

/// Σ C(π) q^{|π|} over flat partitions for ε′, enumerated directly.
pub fn character_lhs(config: &CrystalConfig, order: u32) -> Result<TruncatedSeries> {
    let e = &config.epsilon_prime;
    let budget = EnumBudget::new(order as i64, config.part_cap(order));
    let list = enumerate(Family::F1, e, &budget)?;
    gf_from_partitions(&list, e, &Substitution::sizes(e.colors()), order)
}

/// The same series through flat partitions for ε, measured after T.
pub fn character_lhs_transformed(config: &CrystalConfig, order: u32) -> Result<TruncatedSeries> {
    let e = &config.epsilon;
    let subst = config.substitution();
    let budget = EnumBudget::new(order as i64, config.part_cap(order)).with_measure(subst.clone());
    let list = enumerate(Family::F1, e, &budget)?;
    gf_from_partitions(&list, e, &subst, order)
}

pub fn character_rhs(config: &CrystalConfig, order: u32) -> Result<TruncatedSeries> {
    pochhammer_expand(&config.product, &config.variables(), order)
}

/// One coefficient on which two series disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientDiff {
    pub q: u32,
    pub exponents: Vec<i32>,
    pub left: String,
    pub right: String,
}

pub fn coefficient_diffs(a: &TruncatedSeries, b: &TruncatedSeries) -> Vec<CoefficientDiff> {
    a.diff(b)
        .into_iter()
        .map(|(q, exponents, l, r)| CoefficientDiff { q, exponents, left: l.to_string(), right: r.to_string() })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterReport {
    pub family: CrystalFamily,
    pub rank: usize,
    pub order: u32,
    pub variables: Vec<String>,
    pub transform_consistent: bool,
    pub lhs_equals_rhs: bool,
    pub paths_agree: bool,
    /// lhs against rhs.
    pub diffs: Vec<CoefficientDiff>,
    /// direct ε′ path against the ε-then-T path.
    pub path_diffs: Vec<CoefficientDiff>,
    pub terms: usize,
}

impl CharacterReport {
    pub fn pass(&self) -> bool {
        self.transform_consistent && self.lhs_equals_rhs && self.paths_agree
    }
}

/// Compares both sides and both enumeration paths up to q^order.
pub fn verify_character(config: &CrystalConfig, order: u32) -> Result<CharacterReport> {
    let ((direct, via), rhs) = rayon::join(
        || rayon::join(|| character_lhs(config, order), || character_lhs_transformed(config, order)),
        || character_rhs(config, order),
    );
    let (direct, via, rhs) = (direct?, via?, rhs?);
    let diffs = coefficient_diffs(&direct, &rhs);
    let path_diffs = coefficient_diffs(&direct, &via);
    Ok(CharacterReport {
        family: config.family,
        rank: config.rank,
        order,
        variables: config.variables(),
        transform_consistent: config.transform_consistent(),
        lhs_equals_rhs: diffs.is_empty(),
        paths_agree: path_diffs.is_empty(),
        diffs,
        path_diffs,
        terms: direct.terms().count(),
    })
}

