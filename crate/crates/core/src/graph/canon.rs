//! Canonical labelling by individualisation and colour refinement.
//!
//! The canonical form is the labelled graph whose adjacency rows are
//! lexicographically smallest among all leaves of the refinement search
//! tree. Refinement and cell selection never look at vertex labels, so the
//! set of leaf graphs is an isomorphism invariant. Branches on twin vertices
//! (whose transposition is an automorphism fixing the current partition) are
//! skipped since they reproduce the same leaves.

use super::Graph;

/// Splits colour classes by neighbour-colour counts until stable.
/// Colours stay dense `0..k` and the relative order of old classes is kept.
fn refine(g: &Graph, colors: &mut [u32]) {
    let n = g.order();
    let mut classes = count_classes(colors);
    let mut keys: Vec<(u32, Vec<u32>, usize)> = Vec::with_capacity(n);
    loop {
        keys.clear();
        for v in 0..n {
            let mut sig = vec![0u32; classes];
            for w in g.neighbors(v) {
                sig[colors[w] as usize] += 1;
            }
            keys.push((colors[v], sig, v));
        }
        keys.sort_unstable();
        let mut next = 0u32;
        for i in 0..n {
            if i > 0 && (keys[i].0 != keys[i - 1].0 || keys[i].1 != keys[i - 1].1) {
                next += 1;
            }
            colors[keys[i].2] = next;
        }
        let now = if n == 0 { 0 } else { next as usize + 1 };
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    colors.iter().max().map_or(0, |&m| m as usize + 1)
}

/// Gives `v` a singleton class placed just before the rest of its class.
fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let cv = colors[v];
    colors
        .iter()
        .enumerate()
        .map(|(u, &c)| {
            if c > cv || (c == cv && u != v) {
                c + 1
            } else {
                c
            }
        })
        .collect()
}

fn are_twins(g: &Graph, v: usize, w: usize) -> bool {
    let (rv, rw) = (g.row(v), g.row(w));
    rv.iter().zip(rw).enumerate().all(|(i, (a, b))| {
        let mut diff = a ^ b;
        for x in [v, w] {
            if x / 64 == i {
                diff &= !(1u64 << (x % 64));
            }
        }
        diff == 0
    })
}

struct Best {
    rows: Vec<u64>,
    perm: Vec<usize>,
}

fn permuted_rows(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let words = g.words();
    let mut rows = vec![0u64; g.order() * words];
    for u in 0..g.order() {
        let base = perm[u] * words;
        for w in g.neighbors(u) {
            let t = perm[w];
            rows[base + t / 64] |= 1 << (t % 64);
        }
    }
    rows
}

fn search(g: &Graph, mut colors: Vec<u32>, best: &mut Option<Best>) {
    refine(g, &mut colors);
    let n = g.order();
    let classes = count_classes(&colors);
    if classes == n {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let rows = permuted_rows(g, &perm);
        if best.as_ref().is_none_or(|b| rows < b.rows) {
            *best = Some(Best { rows, perm });
        }
        return;
    }
    let mut size = vec![0usize; classes];
    for &c in &colors {
        size[c as usize] += 1;
    }
    let target = size.iter().position(|&s| s > 1).expect("non-discrete partition") as u32;
    let mut tried: Vec<usize> = Vec::new();
    for v in (0..n).filter(|&v| colors[v] == target) {
        if tried.iter().any(|&w| are_twins(g, v, w)) {
            continue;
        }
        tried.push(v);
        search(g, individualize(&colors, v), best);
    }
}

/// A canonical relabelling: vertex `v` of `g` maps to `perm[v]` in the
/// canonical form.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let mut best = None;
    search(g, vec![0; g.order()], &mut best);
    best.map_or_else(Vec::new, |b| b.perm)
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonicalize(g: &Graph) -> Graph {
    g.permuted(&canonical_labeling(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.edge_count() == b.edge_count() && canonicalize(a) == canonicalize(b)
}
