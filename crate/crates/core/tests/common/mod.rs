//! Brute-force oracles written directly from the family definitions. They
//! only read ε through `Energy::eps` and never call the library's
//! generators or relation predicates.

#![allow(dead_code)]

use std::collections::BTreeSet;

use partition_forge::energy::{Color, Energy};
use partition_forge::enumerate::{enumerate, EnumBudget, Family};

pub fn label(e: &Energy, c: Color) -> String {
    e.colors().label(c).to_string()
}

fn colors(e: &Energy) -> Vec<Color> {
    e.colors().colors().collect()
}

fn non_ground(e: &Energy) -> Vec<Color> {
    e.colors().non_ground().collect()
}

fn rho(e: &Energy) -> i64 {
    1 - (0..e.colors().len())
        .map(Color)
        .find(|&c| c != e.ground())
        .map_or(0, |c| e.eps(e.ground(), c))
}

/// Library output as a set of text forms.
pub fn listed(family: Family, e: &Energy, max_size: i64, max_parts: usize) -> BTreeSet<String> {
    enumerate(family, e, &EnumBudget::new(max_size, max_parts))
        .unwrap()
        .iter()
        .map(|p| p.to_text(e))
        .collect()
}

/// Grounded flat partitions into primary parts: every color sequence ending
/// at the ground, sizes by suffix sums.
pub fn brute_f1(e: &Energy, max_size: i64, max_parts: usize) -> BTreeSet<String> {
    let g = e.ground();
    let cs = colors(e);
    let mut out = BTreeSet::new();
    let mut seqs: Vec<Vec<Color>> = vec![vec![]];
    for _ in 0..=max_parts {
        let mut next = Vec::new();
        for body in &seqs {
            let mut full = body.clone();
            full.push(g);
            let mut sizes = vec![0i64; full.len()];
            for k in (0..full.len() - 1).rev() {
                sizes[k] = sizes[k + 1] + e.eps(full[k], full[k + 1]);
            }
            let zero_before_end = full.len() >= 2 && full[full.len() - 2] == g && sizes[full.len() - 2] == 0;
            if !zero_before_end && sizes.iter().sum::<i64>() <= max_size {
                let toks: Vec<String> = full.iter().zip(&sizes).map(|(&c, s)| format!("{s}{}", label(e, c))).collect();
                out.insert(toks.join(" "));
            }
            if body.len() < max_parts {
                for &c in &cs {
                    let mut b = vec![c];
                    b.extend(body);
                    next.push(b);
                }
            }
        }
        seqs = next;
    }
    out
}

/// Generic right-to-left search: `parts` lists candidate (size, text,
/// payload) items, `rel(left, right)` is the relation, `last_ok` constrains
/// the rightmost non-terminal item.
fn search<T: Clone>(
    items: &[(i64, String, T)],
    rel: &dyn Fn(&T, &T) -> bool,
    last_ok: &dyn Fn(&T) -> bool,
    max_size: i64,
    max_parts: usize,
    suffix: &str,
) -> BTreeSet<String> {
    #[allow(clippy::too_many_arguments)]
    fn go<T: Clone>(
        items: &[(i64, String, T)],
        rel: &dyn Fn(&T, &T) -> bool,
        last_ok: &dyn Fn(&T) -> bool,
        stack: &mut Vec<usize>,
        total: i64,
        max_size: i64,
        max_parts: usize,
        suffix: &str,
        out: &mut BTreeSet<String>,
    ) {
        let mut toks: Vec<String> = stack.iter().rev().map(|&i| items[i].1.clone()).collect();
        if !suffix.is_empty() {
            toks.push(suffix.to_string());
        }
        out.insert(if toks.is_empty() { "()".into() } else { toks.join(" ") });
        if stack.len() == max_parts {
            return;
        }
        for (i, (s, _, t)) in items.iter().enumerate() {
            if total + s > max_size {
                continue;
            }
            let ok = match stack.last() {
                Some(&j) => rel(t, &items[j].2),
                None => last_ok(t),
            };
            if ok {
                stack.push(i);
                go(items, rel, last_ok, stack, total + s, max_size, max_parts, suffix, out);
                stack.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    go(items, rel, last_ok, &mut Vec::new(), 0, max_size, max_parts, suffix, &mut out);
    out
}

/// Grounded regular partitions into primary parts.
pub fn brute_r1(e: &Energy, max_size: i64, max_parts: usize) -> BTreeSet<String> {
    let g = e.ground();
    let items: Vec<(i64, String, (i64, Color))> = (0..=max_size)
        .flat_map(|k| non_ground(e).into_iter().map(move |c| (k, c)))
        .map(|(k, c)| (k, format!("{k}{}", label(e, c)), (k, c)))
        .collect();
    let rel = |x: &(i64, Color), y: &(i64, Color)| x.0 - y.0 >= e.eps(x.1, y.1);
    let last = |x: &(i64, Color)| x.0 >= e.eps(x.1, g);
    search(&items, &rel, &last, max_size, max_parts, &format!("0{}", label(e, g)))
}

/// O^{ρ+}: primary parts over C′ of size at least ρ under ≻.
pub fn brute_o_plus(e: &Energy, max_size: i64, max_parts: usize) -> BTreeSet<String> {
    let r = rho(e);
    let items: Vec<(i64, String, (i64, Color))> = (r..=max_size)
        .flat_map(|k| non_ground(e).into_iter().map(move |c| (k, c)))
        .map(|(k, c)| (k, format!("{k}{}", label(e, c)), (k, c)))
        .collect();
    let rel = |x: &(i64, Color), y: &(i64, Color)| x.0 - y.0 >= e.eps(x.1, y.1);
    search(&items, &rel, &|_| true, max_size, max_parts, "")
}

#[derive(Clone, Copy)]
pub enum Mixed {
    P(i64, Color),
    S(i64, Color, Color),
}

/// The mixed relation, case by case.
pub fn mixed(e: &Energy, x: &Mixed, y: &Mixed) -> bool {
    let ep = |a, b| e.eps(a, b);
    match (*x, *y) {
        (Mixed::P(k, c), Mixed::P(l, d)) => k - l > ep(c, d),
        (Mixed::P(k, c), Mixed::S(l, d, d1)) => k - (2 * l + ep(d, d1)) >= ep(c, d) + ep(d, d1),
        (Mixed::S(k, c, c1), Mixed::P(l, d)) => (2 * k + ep(c, c1)) - l > ep(c, c1) + ep(c1, d),
        (Mixed::S(k, _, c1), Mixed::S(l, d, d1)) => k - l >= ep(c1, d) + ep(d, d1),
    }
}

/// E^{ρ+}: primary and secondary parts over C′ with half at least ρ.
pub fn brute_e_plus(e: &Energy, max_size: i64, max_parts: usize) -> BTreeSet<String> {
    let r = rho(e);
    let ng = non_ground(e);
    let mut items = Vec::new();
    for k in r..=max_size {
        for &c in &ng {
            items.push((k, format!("{k}{}", label(e, c)), Mixed::P(k, c)));
            for &d in &ng {
                let s = 2 * k + e.eps(c, d);
                if s <= max_size {
                    items.push((s, format!("{s}{}{}", label(e, c), label(e, d)), Mixed::S(k, c, d)));
                }
            }
        }
    }
    let rel = |x: &Mixed, y: &Mixed| mixed(e, x, y);
    search(&items, &rel, &|_| true, max_size, max_parts, "")
}

/// δ^ε written out from its case list, with the first +1 case restricted
/// to c ∈ C′.
pub fn delta(e: &Energy, c: Color, c1: Color, d: Color, d1: Color) -> i64 {
    let g = e.ground();
    let dg = 1 - rho(e);
    let ng = |x: Color| x != g;
    if c1 == g && d == g && ng(c) && ng(d1) {
        return e.eps(c, d1);
    }
    if dg == 1 {
        if c == g && ng(c1) && ng(d) && ng(d1) && e.eps(c1, d) == 1 {
            return -1;
        }
        if c1 == g && ng(c) && ng(d) && ng(d1) && e.eps(c, d) == 0 {
            return -1;
        }
        if d1 == g && ng(c) && ng(c1) && ng(d) && e.eps(c1, d) == 0 {
            return 1;
        }
        if d == g && ng(c) && ng(c1) && ng(d1) && e.eps(c1, d1) == 1 {
            return 1;
        }
    }
    0
}

/// Grounded regular partitions into secondary parts (non-negative sizes).
pub fn brute_r2(e: &Energy, max_size: i64, max_parts: usize) -> BTreeSet<String> {
    let g = e.ground();
    let cs = colors(e);
    let mut items = Vec::new();
    for k in 0..=max_size {
        for &c in &cs {
            for &d in &cs {
                if (c, d) == (g, g) {
                    continue;
                }
                let s = 2 * k + e.eps(c, d);
                if s <= max_size {
                    items.push((s, format!("{s}{}{}", label(e, c), label(e, d)), (k, c, d)));
                }
            }
        }
    }
    let rel = |x: &(i64, Color, Color), y: &(i64, Color, Color)| {
        x.0 - y.0 - e.eps(x.2, y.1) - e.eps(y.1, y.2) >= delta(e, x.1, x.2, y.1, y.2)
    };
    let last = |x: &(i64, Color, Color)| rel(x, &(0, g, g));
    let gl = label(e, g);
    search(&items, &rel, &last, max_size, max_parts, &format!("0{gl}{gl}"))
}

/// Grounded flat partitions into secondary parts via ε₂ suffix sums.
pub fn brute_f2(e: &Energy, max_size: i64, max_parts: usize) -> BTreeSet<String> {
    let g = e.ground();
    let cs = colors(e);
    let eps2 = |x: (Color, Color), y: (Color, Color)| e.eps(x.0, x.1) + 2 * e.eps(x.1, y.0) + e.eps(y.0, y.1);
    let mut out = BTreeSet::new();
    let mut seqs: Vec<Vec<(Color, Color)>> = vec![vec![]];
    for _ in 0..=max_parts {
        let mut next = Vec::new();
        for body in &seqs {
            let mut full = body.clone();
            full.push((g, g));
            let mut sizes = vec![0i64; full.len()];
            for k in (0..full.len() - 1).rev() {
                sizes[k] = sizes[k + 1] + eps2(full[k], full[k + 1]);
            }
            let n = full.len();
            let zero_before_end = n >= 2 && full[n - 2] == (g, g) && sizes[n - 2] == 0;
            let total: i64 = sizes.iter().sum();
            if !zero_before_end && total <= max_size {
                let toks: Vec<String> = full
                    .iter()
                    .zip(&sizes)
                    .map(|(&(c, d), s)| format!("{s}{}{}", label(e, c), label(e, d)))
                    .collect();
                out.insert(toks.join(" "));
            }
            if body.len() < max_parts {
                for &c in &cs {
                    for &d in &cs {
                        let mut b = vec![(c, d)];
                        b.extend(body);
                        next.push(b);
                    }
                }
            }
        }
        seqs = next;
    }
    out
}
