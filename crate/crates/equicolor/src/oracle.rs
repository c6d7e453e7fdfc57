//! Exact brute-force equitable-colorability oracle for small instances.
//!
//! Backtracking over vertices in descending degree order, pruning by
//! remaining class capacities, with symmetry breaking: the first branching
//! vertex is pinned to class 0, and an empty class may only be opened if it
//! is the lowest-indexed empty class of its capacity type.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap: the search is exponential.
pub const ORACLE_CAP: usize = 24;

/// Decides whether `g` admits a proper coloring with exactly `k` classes of
/// sizes in {floor(n/k), ceil(n/k)} with the exact equitable size multiset.
/// Returns a witness coloring, or `None` for definitive absence.
pub fn brute_force_equitable(g: &Graph, k: usize) -> Result<Option<Coloring>> {
    let n = g.n();
    if n > ORACLE_CAP {
        return Err(Error::OracleCapExceeded(n, ORACLE_CAP));
    }
    if k == 0 {
        return Ok(if n == 0 {
            Some(Coloring::empty(0, 0))
        } else {
            None
        });
    }
    // exact equitable multiset: (n mod k) classes of size ceil, rest floor
    let floor = n / k;
    let ceil_count = n % k;
    let capacity: Vec<usize> = (0..k)
        .map(|i| if i < ceil_count { floor + 1 } else { floor })
        .collect();

    let mut order: Vec<u32> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut assignment: Vec<Option<usize>> = vec![None; n];
    let mut used: Vec<usize> = vec![0; k];
    if search(g, &order, 0, &mut assignment, &mut used, &capacity) {
        let total: Vec<usize> = assignment.into_iter().map(Option::unwrap).collect();
        Ok(Some(Coloring::from_assignment(&total, k)?))
    } else {
        Ok(None)
    }
}

fn search(
    g: &Graph,
    order: &[u32],
    depth: usize,
    assignment: &mut Vec<Option<usize>>,
    used: &mut Vec<usize>,
    capacity: &[usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let mut forbidden = 0u32;
    for &u in g.neighbors(v) {
        if let Some(c) = assignment[u as usize] {
            forbidden |= 1 << c;
        }
    }
    // lowest-indexed empty class per capacity value: opening any other empty
    // class of the same capacity is a symmetric duplicate. At depth 0 this
    // pins the first vertex to class 0 (plus the first floor-size class when
    // the multiset is mixed).
    let mut first_empty: Vec<usize> = Vec::new();
    let mut seen_caps: Vec<usize> = Vec::new();
    for (c, &cap) in capacity.iter().enumerate() {
        if used[c] == 0 && !seen_caps.contains(&cap) {
            seen_caps.push(cap);
            first_empty.push(c);
        }
    }
    for c in 0..capacity.len() {
        if used[c] >= capacity[c] || forbidden & (1 << c) != 0 {
            continue;
        }
        if used[c] == 0 && !first_empty.contains(&c) {
            continue;
        }
        assignment[v as usize] = Some(c);
        used[c] += 1;
        if search(g, order, depth + 1, assignment, used, capacity) {
            return true;
        }
        used[c] -= 1;
        assignment[v as usize] = None;
    }
    false
}

/// Exact feasibility set: all k <= k_max admitting an equitable k-coloring.
pub fn chi_e_profile(g: &Graph, k_max: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for k in 1..=k_max {
        if brute_force_equitable(g, k)?.is_some() {
            out.push(k);
        }
    }
    Ok(out)
}
