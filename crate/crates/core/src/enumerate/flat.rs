//! Flat partitions of degree k, generated right to left over color words.

use crate::energy::{Color, Energy};
use crate::error::{usage, Result};
use crate::part::{internal_energy, Part};
use crate::partition::ColoredPartition;
use crate::qseries::Substitution;
use crate::relation::{epsilon_k, Relation};

use super::EnumBudget;

struct Walk<'a> {
    energy: &'a Energy,
    degree: usize,
    letters: Vec<Vec<Color>>,
    ground: usize,
    /// eps[p][q] = εᵏ(p, q).
    eps: Vec<Vec<i64>>,
    internal: Vec<i64>,
    shift: Vec<i64>,
    scale: i64,
    min_shift: i64,
    /// Smallest cumulative size change along any walk to the left of p,
    /// or None when unbounded below.
    reach: Vec<Option<i64>>,
    word_letters: Vec<Vec<Color>>,
    word: Option<Vec<Color>>,
    max_size: i64,
    max_parts: usize,
}

struct Frame {
    letter: usize,
    size: i64,
}

impl Walk<'_> {
    fn run(&self, out: &mut Vec<ColoredPartition>) {
        let mut stack = Vec::new();
        let word_left = self.word.as_ref().map(Vec::len);
        self.descend(&mut stack, self.ground, 0, 0, word_left, out);
    }

    fn emit(&self, stack: &[Frame]) -> ColoredPartition {
        let mut parts: Vec<Part> = stack
            .iter()
            .rev()
            .map(|f| {
                let base = (f.size - self.internal[f.letter]) / self.degree as i64;
                Part::with_base(base, &self.letters[f.letter])
            })
            .collect();
        parts.push(Part::ground_zero(self.energy, self.degree));
        ColoredPartition::new(parts, Relation::Flat, true)
    }

    fn descend(
        &self,
        stack: &mut Vec<Frame>,
        front: usize,
        front_size: i64,
        weight: i64,
        word_left: Option<usize>,
        out: &mut Vec<ColoredPartition>,
    ) {
        if word_left.is_none_or(|w| w == 0) && weight <= self.max_size {
            out.push(self.emit(stack));
        }
        if stack.len() >= self.max_parts {
            return;
        }
        for p in 0..self.letters.len() {
            let size = front_size + self.eps[p][front];
            if stack.is_empty() && p == self.ground && size == 0 {
                continue;
            }
            let letters = &self.word_letters[p];
            let next_left = match (word_left, &self.word) {
                (Some(left), Some(word)) => {
                    if letters.len() > left || word[left - letters.len()..left] != letters[..] {
                        continue;
                    }
                    Some(left - letters.len())
                }
                _ => None,
            };
            let w = weight + self.scale * size + self.shift[p];
            let floor = self.reach[p].map(|m| self.scale * (size + m) + self.min_shift);
            if w > self.max_size && floor.is_some_and(|f| f >= 0) {
                continue;
            }
            stack.push(Frame { letter: p, size });
            self.descend(stack, p, size, w, next_left, out);
            stack.pop();
        }
    }
}

fn all_letters(n: usize, k: usize) -> Vec<Vec<Color>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..n).map(move |c| {
                    let mut v = w.clone();
                    v.push(Color(c));
                    v
                })
            })
            .collect();
    }
    out
}

fn lowest_reach(eps: &[Vec<i64>]) -> Vec<Option<i64>> {
    let n = eps.len();
    let mut m = vec![0i64; n];
    let mut unbounded = vec![false; n];
    for round in 0..=n {
        let mut changed = false;
        for p in 0..n {
            for r in 0..n {
                let cand = eps[r][p] + m[r];
                if cand < m[p] {
                    m[p] = cand;
                    changed = true;
                    if round == n {
                        unbounded[p] = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    for _ in 0..n {
        for p in 0..n {
            for r in 0..n {
                if unbounded[r] {
                    unbounded[p] = true;
                }
            }
        }
    }
    m.into_iter().zip(unbounded).map(|(v, u)| (!u).then_some(v)).collect()
}

pub(super) fn enumerate_flat(
    energy: &Energy,
    degree: usize,
    budget: &EnumBudget,
) -> Result<Vec<ColoredPartition>> {
    if degree == 0 {
        return usage("degree must be at least 1");
    }
    let g = energy.ground();
    if energy.eps(g, g) != 0 {
        return usage("flat partitions need ε(c_g, c_g) = 0");
    }
    let n = energy.colors().len();
    let letters = all_letters(n, degree);
    let ground = letters.iter().position(|w| w.iter().all(|&c| c == g)).expect("ground letter");
    let eps: Vec<Vec<i64>> = letters
        .iter()
        .map(|p| letters.iter().map(|q| epsilon_k(energy, p, q).expect("equal lengths")).collect())
        .collect();
    let identity = Substitution::sizes(energy.colors());
    let subst = budget.measure.as_ref().unwrap_or(&identity);
    if subst.q_scale < 0 {
        return usage("the size measure needs a non-negative q scale");
    }
    let shift: Vec<i64> = letters.iter().map(|w| w.iter().map(|&c| subst.shift(c)).sum()).collect();
    let walk = Walk {
        energy,
        degree,
        ground,
        internal: letters.iter().map(|w| internal_energy(w, energy)).collect(),
        word_letters: letters.iter().map(|w| w.iter().copied().filter(|&c| c != g).collect()).collect(),
        min_shift: shift.iter().copied().min().unwrap_or(0),
        shift,
        scale: subst.q_scale,
        reach: lowest_reach(&eps),
        eps,
        letters,
        word: budget.word.as_ref().map(|w| w.as_slice().to_vec()),
        max_size: budget.max_size,
        max_parts: budget.max_parts,
    };
    let mut out = Vec::new();
    walk.run(&mut out);
    Ok(out)
}
