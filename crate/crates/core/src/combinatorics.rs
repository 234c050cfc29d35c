//! Enumeration of strict index sets and weighted monomials.

/// Every strictly decreasing list drawn from `parts` (given in increasing
/// order, all weights positive) whose total weight is at most `budget`,
/// paired with that weight.
pub fn strict_sets(parts: &[(u32, i64)], budget: i64) -> Vec<(Vec<u32>, i64)> {
    let mut out = Vec::new();
    if budget < 0 {
        return out;
    }
    let mut current = Vec::new();
    strict_rec(parts, parts.len(), budget, 0, &mut current, &mut out);
    out
}

fn strict_rec(
    parts: &[(u32, i64)],
    below: usize,
    budget: i64,
    used: i64,
    current: &mut Vec<u32>,
    out: &mut Vec<(Vec<u32>, i64)>,
) {
    out.push((current.clone(), used));
    for k in (0..below).rev() {
        let (idx, w) = parts[k];
        if used + w <= budget {
            current.push(idx);
            strict_rec(parts, k, budget, used + w, current, out);
            current.pop();
        }
    }
}

/// Every multiset over `parts` (index, positive weight) with total weight at
/// most `budget`, as exponent lists aligned with `parts`, paired with the
/// weight.
pub fn multisets(parts: &[(u32, i64)], budget: i64) -> Vec<(Vec<u32>, i64)> {
    let mut out = Vec::new();
    if budget < 0 {
        return out;
    }
    let mut current = vec![0u32; parts.len()];
    multi_rec(parts, 0, budget, 0, &mut current, &mut out);
    out
}

fn multi_rec(
    parts: &[(u32, i64)],
    k: usize,
    budget: i64,
    used: i64,
    current: &mut Vec<u32>,
    out: &mut Vec<(Vec<u32>, i64)>,
) {
    if k == parts.len() {
        out.push((current.clone(), used));
        return;
    }
    let w = parts[k].1;
    let mut e = 0;
    while used + e as i64 * w <= budget {
        current[k] = e;
        multi_rec(parts, k + 1, budget, used + e as i64 * w, current, out);
        e += 1;
    }
    current[k] = 0;
}

/// Coefficients `[q^0 … q^max]` of `Π_{k ∈ parts} 1/(1 - q^k)`, or of
/// `Π (1 + q^k)` when `distinct`.
pub fn partition_counts(max: usize, distinct: bool, part: impl Fn(usize) -> bool) -> Vec<u64> {
    let mut c = vec![0u64; max + 1];
    c[0] = 1;
    for k in (1..=max).filter(|&k| part(k)) {
        if distinct {
            for d in (k..=max).rev() {
                c[d] += c[d - k];
            }
        } else {
            for d in k..=max {
                c[d] += c[d - k];
            }
        }
    }
    c
}
