//! Uncolored partitions, used as independent oracles.

/// All partitions of `n` into positive parts, each non-increasing.
pub fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `n` satisfying `pred`.
pub fn count_where(n: u32, pred: impl Fn(&[u32]) -> bool) -> u64 {
    partitions_of(n).iter().filter(|p| pred(p)).count() as u64
}

pub fn is_distinct(p: &[u32]) -> bool {
    p.windows(2).all(|w| w[0] > w[1])
}

pub fn all_odd(p: &[u32]) -> bool {
    p.iter().all(|x| x % 2 == 1)
}

/// No part divisible by m.
pub fn is_m_regular(p: &[u32], m: u32) -> bool {
    p.iter().all(|x| x % m != 0)
}

/// No part occurs m or more times.
pub fn occurrences_below(p: &[u32], m: u32) -> bool {
    let mut i = 0;
    while i < p.len() {
        let j = p[i..].iter().take_while(|&&x| x == p[i]).count();
        if j as u32 >= m {
            return false;
        }
        i += j;
    }
    true
}

/// Consecutive differences and the smallest part are all less than m.
pub fn is_m_flat(p: &[u32], m: u32) -> bool {
    p.windows(2).all(|w| w[0] - w[1] < m) && p.last().is_none_or(|&x| x < m)
}

/// The flat side of the distinct m-regular analogue: differences at most m,
/// smallest part below m, consecutive multiples of m equal, and parts with
/// the same nonzero residue mod m at distance exactly m.
pub fn is_glaisher_analogue_flat(p: &[u32], m: u32) -> bool {
    p.last().is_none_or(|&x| x < m)
        && p.windows(2).all(|w| {
            let (a, b) = (w[0], w[1]);
            let d = a - b;
            if d > m {
                return false;
            }
            match (a % m, b % m) {
                (0, 0) => d == 0,
                (r, s) if r == s => d == m,
                _ => true,
            }
        })
}

/// Number of parts congruent to i mod m, for i = 1..m−1.
pub fn residue_profile(p: &[u32], m: u32) -> Vec<u32> {
    let mut v = vec![0; m as usize - 1];
    for &x in p {
        if x % m != 0 {
            v[(x % m) as usize - 1] += 1;
        }
    }
    v
}

/// The regular side of the Siladić companion: parts other than 2, gaps at
/// least 5, and for gaps 5 to 8 a restriction on the sum modulo 16.
pub fn is_siladic_regular(p: &[u32]) -> bool {
    !p.contains(&2)
        && p.windows(2).all(|w| {
            let d = w[0] as i64 - w[1] as i64;
            let s = (w[0] + w[1]) % 16;
            match d {
                5 => matches!(s, 3 | 13),
                6 => matches!(s, 0 | 4 | 12 | 8),
                7 => matches!(s, 1 | 15 | 5 | 11 | 7 | 9),
                8 => matches!(s, 0 | 2 | 14 | 6 | 10 | 8),
                d => d > 8,
            }
        })
}
