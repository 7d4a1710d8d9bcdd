//! Named partition identities, each checked by counting every side.
//!
//! Colored sides are enumerated as flat or regular partitions and pushed
//! through their size substitution; classical sides are filtered from all
//! partitions of n; product sides are expanded as truncated series.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::energy::{siladic_example, Energy};
use crate::enumerate::classical::{
    all_odd, count_where, is_distinct, is_glaisher_analogue_flat, is_m_flat, is_m_regular, is_siladic_regular,
    occurrences_below, partitions_of, residue_profile,
};
use crate::enumerate::{enumerate, EnumBudget, Family};
use crate::error::{usage, Result};
use crate::qseries::{as_count, pochhammer_expand, ProductFactor, Substitution};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NamedIdentity {
    Euler,
    Glaisher(u32),
    KeithXiong(u32),
    GlaisherAnalogue(u32),
    SiladicCompanion,
}

pub const MAX_M: u32 = 9;

impl NamedIdentity {
    /// Parses a name, taking `m` for the identities that need it.
    pub fn parse(name: &str, m: Option<u32>) -> Result<Self> {
        let need_m = |build: fn(u32) -> NamedIdentity| match m {
            Some(m) if (2..=MAX_M).contains(&m) => Ok(build(m)),
            Some(m) => usage(format!("{name} needs 2 <= m <= {MAX_M}, got {m}")),
            None => usage(format!("{name} needs --m")),
        };
        match name {
            "euler" => Ok(NamedIdentity::Euler),
            "glaisher" => need_m(NamedIdentity::Glaisher),
            "keith_xiong" => need_m(NamedIdentity::KeithXiong),
            "glaisher_analogue" => need_m(NamedIdentity::GlaisherAnalogue),
            "siladic_companion" => Ok(NamedIdentity::SiladicCompanion),
            _ => usage(format!(
                "unknown identity {name:?}; expected euler, glaisher, keith_xiong, glaisher_analogue or siladic_companion"
            )),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NamedIdentity::Euler => "euler",
            NamedIdentity::Glaisher(_) => "glaisher",
            NamedIdentity::KeithXiong(_) => "keith_xiong",
            NamedIdentity::GlaisherAnalogue(_) => "glaisher_analogue",
            NamedIdentity::SiladicCompanion => "siladic_companion",
        }
    }

    pub fn m(self) -> Option<u32> {
        match self {
            NamedIdentity::Glaisher(m) | NamedIdentity::KeithXiong(m) | NamedIdentity::GlaisherAnalogue(m) => Some(m),
            _ => None,
        }
    }
}

impl fmt::Display for NamedIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m() {
            Some(m) => write!(f, "{}(m={m})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

/// Counts of every side at one size, optionally refined by the number of
/// parts in each nonzero residue class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityRow {
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<Vec<u32>>,
    pub counts: Vec<u64>,
}

impl IdentityRow {
    pub fn agrees(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] == w[1])
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub order: u32,
    pub sides: Vec<String>,
    pub rows: Vec<IdentityRow>,
    pub pass: bool,
}

impl IdentityReport {
    fn new(id: NamedIdentity, order: u32, sides: &[&str], rows: Vec<IdentityRow>) -> Self {
        IdentityReport {
            identity: id.name().to_string(),
            m: id.m(),
            order,
            sides: sides.iter().map(|s| s.to_string()).collect(),
            pass: rows.iter().all(IdentityRow::agrees),
            rows,
        }
    }

    /// The unrefined row at size n.
    pub fn row(&self, n: u32) -> Option<&IdentityRow> {
        self.rows.iter().find(|r| r.n == n && r.profile.is_none())
    }

    /// Counts of side `side` for n = 0..=order, summed over profiles.
    pub fn side_counts(&self, side: usize) -> Vec<u64> {
        let mut v = vec![0; self.order as usize + 1];
        for r in &self.rows {
            v[r.n as usize] += r.counts[side];
        }
        v
    }

    pub fn failures(&self) -> Vec<&IdentityRow> {
        self.rows.iter().filter(|r| !r.agrees()).collect()
    }

    /// One line per row: `n=16: 10 = 10`, with the profile when refined.
    pub fn to_text(&self) -> String {
        let mut out = format!("identity {}", self.identity);
        if let Some(m) = self.m {
            out.push_str(&format!(" m={m}"));
        }
        out.push_str(&format!(" order={}\nsides: {}\n", self.order, self.sides.join(", ")));
        for r in &self.rows {
            let counts: Vec<String> = r.counts.iter().map(u64::to_string).collect();
            let relation = if r.agrees() { " = " } else { " != " };
            match &r.profile {
                Some(p) => {
                    let p: Vec<String> = p.iter().map(u32::to_string).collect();
                    out.push_str(&format!("n={} profile=({}): {}\n", r.n, p.join(","), counts.join(relation)));
                }
                None => out.push_str(&format!("n={}: {}\n", r.n, counts.join(relation))),
            }
        }
        out.push_str(if self.pass { "PASS\n" } else { "FAIL\n" });
        out
    }
}

/// Colors c0 … c_{m−1} with ground c0 and ε(c_i,c_j) = χ(i<j).
pub fn keith_xiong_energy(m: u32) -> Energy {
    residue_energy(m, |i, j| (i < j) as i64)
}

/// Colors c0 … c_{m−1} with ground c0, ε(c_i,c_j) = χ(i<j) off the diagonal,
/// ε(c0,c0) = 0 and ε(c_i,c_i) = 1 otherwise.
pub fn glaisher_analogue_energy(m: u32) -> Energy {
    residue_energy(m, |i, j| if i == j { (i != 0) as i64 } else { (i < j) as i64 })
}

fn residue_energy(m: u32, rule: impl Fn(u32, u32) -> i64) -> Energy {
    let labels: Vec<String> = (0..m).map(|i| format!("c{i}")).collect();
    let rows: Vec<Vec<i64>> = (0..m).map(|i| (0..m).map(|j| rule(i, j)).collect()).collect();
    Energy::from_table(&labels, "c0", &rows).expect("valid table")
}

/// k_{c_i} ↦ mk + i, keeping the non-ground colors as variables.
pub fn residue_substitution(energy: &Energy, m: u32) -> Substitution {
    let shifts: Vec<i64> = (0..m as i64).collect();
    Substitution::affine(energy.colors(), m as i64, &shifts, true)
}

/// (q, a, b, c) ↦ (q⁴, q⁻³, q⁻¹, 1) for the degree-two example energy.
pub fn siladic_substitution(energy: &Energy) -> Substitution {
    Substitution::affine(energy.colors(), 4, &[-3, -1, 0], false)
}

/// Counts of a colored family by (weight, color exponents) up to `order`.
fn colored_counts(
    family: Family,
    energy: &Energy,
    subst: &Substitution,
    order: u32,
    max_parts: usize,
) -> Result<BTreeMap<(u32, Vec<i32>), u64>> {
    let budget = EnumBudget::new(order as i64, max_parts).with_measure(subst.clone());
    let mut out = BTreeMap::new();
    for pi in enumerate(family, energy, &budget)? {
        let (d, e) = subst.partition_term(&pi, energy);
        if (0..=order as i64).contains(&d) {
            *out.entry((d as u32, e)).or_insert(0) += 1;
        }
    }
    Ok(out)
}

fn by_size(map: &BTreeMap<(u32, Vec<i32>), u64>, order: u32) -> Vec<u64> {
    let mut v = vec![0; order as usize + 1];
    for ((d, _), c) in map {
        v[*d as usize] += c;
    }
    v
}

fn product_counts(factors: &[ProductFactor], order: u32) -> Result<Vec<u64>> {
    Ok(pochhammer_expand(factors, &[], order)?.q_coefficients().iter().map(as_count).collect())
}

fn plain_rows(order: u32, sides: Vec<Vec<u64>>) -> Vec<IdentityRow> {
    (0..=order)
        .map(|n| IdentityRow { n, profile: None, counts: sides.iter().map(|s| s[n as usize]).collect() })
        .collect()
}

fn classical_counts(order: u32, pred: impl Fn(&[u32]) -> bool) -> Vec<u64> {
    (0..=order).map(|n| count_where(n, &pred)).collect()
}

/// Builds the energies and substitutions behind `id` and counts every side
/// for n = 0..=order.
pub fn verify_named_identity(id: NamedIdentity, order: u32) -> Result<IdentityReport> {
    let cap = order as usize + 2;
    match id {
        NamedIdentity::Euler => {
            let sides = vec![
                classical_counts(order, is_distinct),
                classical_counts(order, all_odd),
                product_counts(&[ProductFactor::neg(vec![], 1, 1)], order)?,
                product_counts(&[ProductFactor::pos(vec![], 2, 2), ProductFactor::pos(vec![], 1, 1).inverse()], order)?,
            ];
            let names = ["distinct parts", "odd parts", "(-q;q)", "(q^2;q^2)/(q;q)"];
            Ok(IdentityReport::new(id, order, &names, plain_rows(order, sides)))
        }
        NamedIdentity::Glaisher(m) => {
            let sides = vec![
                classical_counts(order, |p| is_m_regular(p, m)),
                classical_counts(order, |p| occurrences_below(p, m)),
                classical_counts(order, |p| is_m_flat(p, m)),
                product_counts(
                    &[
                        ProductFactor::pos(vec![], m as i64, m as i64),
                        ProductFactor::pos(vec![], 1, 1).inverse(),
                    ],
                    order,
                )?,
            ];
            let names = ["m-regular", "fewer than m occurrences", "m-flat", "(q^m;q^m)/(q;q)"];
            Ok(IdentityReport::new(id, order, &names, plain_rows(order, sides)))
        }
        NamedIdentity::KeithXiong(m) => {
            let energy = keith_xiong_energy(m);
            let subst = residue_substitution(&energy, m);
            let flat = colored_counts(Family::F1, &energy, &subst, order, cap)?;
            let regular = colored_counts(Family::R1, &energy, &subst, order, cap)?;
            let mut m_flat: BTreeMap<(u32, Vec<i32>), u64> = BTreeMap::new();
            let mut m_regular: BTreeMap<(u32, Vec<i32>), u64> = BTreeMap::new();
            for n in 0..=order {
                for p in partitions_of(n) {
                    let key = (n, residue_profile(&p, m).iter().map(|&x| x as i32).collect());
                    if is_m_flat(&p, m) {
                        *m_flat.entry(key.clone()).or_insert(0) += 1;
                    }
                    if is_m_regular(&p, m) {
                        *m_regular.entry(key).or_insert(0) += 1;
                    }
                }
            }
            let keys: BTreeSet<&(u32, Vec<i32>)> =
                flat.keys().chain(regular.keys()).chain(m_flat.keys()).chain(m_regular.keys()).collect();
            let get = |map: &BTreeMap<(u32, Vec<i32>), u64>, k: &(u32, Vec<i32>)| map.get(k).copied().unwrap_or(0);
            let rows = keys
                .into_iter()
                .map(|k| IdentityRow {
                    n: k.0,
                    profile: Some(k.1.iter().map(|&x| x as u32).collect()),
                    counts: vec![get(&flat, k), get(&regular, k), get(&m_flat, k), get(&m_regular, k)],
                })
                .collect();
            let names = ["flat (colored)", "regular (colored)", "m-flat", "m-regular"];
            Ok(IdentityReport::new(id, order, &names, rows))
        }
        NamedIdentity::GlaisherAnalogue(m) => {
            let energy = glaisher_analogue_energy(m);
            let subst = residue_substitution(&energy, m);
            let flat = by_size(&colored_counts(Family::F1, &energy, &subst, order, cap)?, order);
            let regular = by_size(&colored_counts(Family::R1, &energy, &subst, order, cap)?, order);
            let sides = vec![
                regular,
                flat,
                classical_counts(order, |p| is_distinct(p) && is_m_regular(p, m)),
                classical_counts(order, |p| is_glaisher_analogue_flat(p, m)),
            ];
            let names = ["regular (colored)", "flat (colored)", "distinct m-regular", "(m+1)-flat of the second kind"];
            Ok(IdentityReport::new(id, order, &names, plain_rows(order, sides)))
        }
        NamedIdentity::SiladicCompanion => {
            let energy = siladic_example();
            let subst = siladic_substitution(&energy);
            let a = by_size(&colored_counts(Family::R2, &energy, &subst, order, cap)?, order);
            let b = by_size(&colored_counts(Family::F2, &energy, &subst, order, cap)?, order);
            let sides = vec![
                a,
                b,
                product_counts(&[ProductFactor::neg(vec![], 1, 2)], order)?,
                classical_counts(order, |p| is_distinct(p) && all_odd(p)),
                classical_counts(order, is_siladic_regular),
            ];
            let names = ["A (regular)", "B (flat)", "(-q;q^2)", "distinct odd parts", "A (classical)"];
            Ok(IdentityReport::new(id, order, &names, plain_rows(order, sides)))
        }
    }
}

/// Classical partitions, each non-increasing.
pub type Parts = Vec<Vec<u32>>;

/// The glaisher analogue's two sides at size n as classical partitions,
/// for comparison with listed examples.
pub fn glaisher_analogue_members(m: u32, n: u32) -> Result<(Parts, Parts)> {
    let energy = glaisher_analogue_energy(m);
    let subst = residue_substitution(&energy, m);
    let collect = |family: Family| -> Result<Vec<Vec<u32>>> {
        let budget = EnumBudget::new(n as i64, n as usize + 2).with_measure(subst.clone());
        let mut out: Vec<Vec<u32>> = enumerate(family, &energy, &budget)?
            .iter()
            .filter(|pi| subst.partition_term(pi, &energy).0 == n as i64)
            .map(|pi| {
                pi.parts
                    .iter()
                    .map(|p| subst.part_term(p, &energy).0 as u32)
                    .filter(|&x| x > 0)
                    .collect()
            })
            .collect();
        out.sort();
        Ok(out)
    };
    Ok((collect(Family::R1)?, collect(Family::F1)?))
}
