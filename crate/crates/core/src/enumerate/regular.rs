//! Families defined by a minimal-difference relation, generated right to left.
//!
//! Each candidate part is a shape (a color sequence of degree one or two)
//! together with a base. For a fixed shape the relation to the part on the
//! right is monotone in the base, so the smallest admissible base is found by
//! search and larger bases are taken until the size budget is exhausted.

use crate::energy::{Color, Energy};
use crate::error::{usage, Result};
use crate::part::Part;
use crate::partition::ColoredPartition;
use crate::qseries::Substitution;
use crate::relation::{relate, Relation};

use super::{EnumBudget, HalfLine};

pub(super) struct Spec {
    pub shapes: Vec<Vec<Color>>,
    pub relation: Relation,
    pub terminal: Option<Part>,
    pub half_line: Option<(HalfLine, i64)>,
}

struct Descent<'a> {
    energy: &'a Energy,
    spec: Spec,
    word_letters: Vec<Vec<Color>>,
    shift: Vec<i64>,
    scale: i64,
    min_shift: i64,
    word: Option<Vec<Color>>,
    max_size: i64,
    max_parts: usize,
}

/// Smallest integer h with `pred(h)`, for a predicate that is false below
/// some threshold and true from it on.
fn threshold(start: i64, pred: impl Fn(i64) -> bool) -> i64 {
    let mut hi = start;
    let mut step = 1;
    while !pred(hi) {
        hi += step;
        step *= 2;
    }
    let mut lo = hi - 1;
    step = 1;
    while pred(lo) {
        lo -= step;
        step *= 2;
    }
    // pred(lo) false, pred(hi) true
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

impl Descent<'_> {
    fn part(&self, shape: usize, base: i64) -> Part {
        Part::with_base(base, &self.spec.shapes[shape])
    }

    fn in_half_line(&self, part: &Part) -> bool {
        let Some((side, rho)) = self.spec.half_line else {
            return true;
        };
        match (side, part) {
            (HalfLine::Plus, _) => part.base() >= rho,
            (HalfLine::Minus, Part::Secondary(s)) => s.gamma(self.energy).size <= rho,
            (HalfLine::Minus, _) => part.base() <= rho,
        }
    }

    fn minus(&self) -> bool {
        matches!(self.spec.half_line, Some((HalfLine::Minus, _)))
    }

    fn emit(&self, stack: &[Part]) -> ColoredPartition {
        let mut parts: Vec<Part> = stack.iter().rev().cloned().collect();
        if let Some(t) = &self.spec.terminal {
            parts.push(t.clone());
        }
        ColoredPartition::new(parts, self.spec.relation, self.spec.terminal.is_some())
    }

    fn lowest_base(&self, shape: usize, front: Option<&Part>) -> i64 {
        let k = self.spec.shapes[shape].len() as i64;
        match front {
            Some(f) => {
                let start = f.size(self.energy).div_euclid(k) - 2;
                let h = threshold(start, |h| {
                    relate(&self.part(shape, h), f, self.energy, self.spec.relation).expect("kinds checked")
                });
                match self.spec.half_line {
                    Some((HalfLine::Plus, rho)) => h.max(rho),
                    _ => h,
                }
            }
            None => match self.spec.half_line {
                Some((HalfLine::Plus, rho)) => rho,
                // every other part is at most 2, so the rightmost one is at least this
                _ => (-self.max_size - 2 * self.max_parts as i64).div_euclid(k) - 1,
            },
        }
    }

    fn floor(&self, part: &Part) -> i64 {
        self.scale * part.size(self.energy) + self.min_shift
    }

    fn descend(&self, stack: &mut Vec<Part>, weight: i64, word_left: Option<usize>, out: &mut Vec<ColoredPartition>) {
        let front = stack.last().or(self.spec.terminal.as_ref()).cloned();
        if self.minus() {
            if let Some(f) = &front {
                if f.size(self.energy) >= 0 && weight > self.max_size {
                    return;
                }
            }
            if weight + 2 * (self.max_parts - stack.len()) as i64 + 2 < -self.max_size {
                return;
            }
            if word_left.is_none_or(|w| w == 0) && weight.abs() <= self.max_size {
                out.push(self.emit(stack));
            }
        } else {
            if let Some(f) = &front {
                if weight > self.max_size && self.floor(f) >= 0 {
                    return;
                }
            }
            if word_left.is_none_or(|w| w == 0) && weight <= self.max_size {
                out.push(self.emit(stack));
            }
        }
        if stack.len() >= self.max_parts {
            return;
        }
        for shape in 0..self.spec.shapes.len() {
            let letters = &self.word_letters[shape];
            let next_left = match (word_left, &self.word) {
                (Some(left), Some(word)) => {
                    if letters.len() > left || word[left - letters.len()..left] != letters[..] {
                        continue;
                    }
                    Some(left - letters.len())
                }
                _ => None,
            };
            let mut h = self.lowest_base(shape, front.as_ref());
            loop {
                let x = self.part(shape, h);
                let w = weight + self.scale * x.size(self.energy) + self.shift[shape];
                if self.minus() {
                    if !self.in_half_line(&x) {
                        break;
                    }
                } else if w > self.max_size && self.floor(&x) >= 0 {
                    break;
                }
                if self.in_half_line(&x) {
                    stack.push(x);
                    self.descend(stack, w, next_left, out);
                    stack.pop();
                }
                h += 1;
            }
        }
    }
}

pub(super) fn enumerate_regular(energy: &Energy, spec: Spec, budget: &EnumBudget) -> Result<Vec<ColoredPartition>> {
    let g = energy.ground();
    let identity = Substitution::sizes(energy.colors());
    let subst = budget.measure.as_ref().unwrap_or(&identity);
    if subst.q_scale < 1 {
        return usage("the size measure needs a positive q scale");
    }
    let minus = matches!(spec.half_line, Some((HalfLine::Minus, _)));
    if minus && budget.measure.is_some() {
        return usage("lower half-line families are enumerated by plain size only");
    }
    let shift: Vec<i64> = spec.shapes.iter().map(|s| s.iter().map(|&c| subst.shift(c)).sum()).collect();
    let descent = Descent {
        energy,
        word_letters: spec.shapes.iter().map(|s| s.iter().copied().filter(|&c| c != g).collect()).collect(),
        min_shift: shift.iter().copied().min().unwrap_or(0),
        shift,
        scale: subst.q_scale,
        spec,
        word: budget.word.as_ref().map(|w| w.as_slice().to_vec()),
        max_size: budget.max_size,
        max_parts: budget.max_parts,
    };
    let mut out = Vec::new();
    let word_left = descent.word.as_ref().map(Vec::len);
    descent.descend(&mut Vec::new(), 0, word_left, &mut out);
    Ok(out)
}
