//! Brute-force oracles shared by the integration tests. Everything here is
//! deliberately naive: labelled enumeration and full permutation scans.
#![allow(dead_code)]

use std::collections::BTreeSet;

use vat_core::Graph;

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap(n, &mut cur, &mut out);
    out
}

fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, cur, out);
        if k.is_multiple_of(2) {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
    heap(k - 1, cur, out);
}

pub fn edge_set(g: &Graph, perm: &[usize]) -> BTreeSet<(usize, usize)> {
    g.edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        })
        .collect()
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let target = edge_set(b, &(0..b.order()).collect::<Vec<_>>());
    permutations(a.order()).iter().any(|p| edge_set(a, p) == target)
}

/// Smallest sorted edge list over all relabellings.
pub fn brute_certificate(g: &Graph) -> Vec<(usize, usize)> {
    permutations(g.order())
        .iter()
        .map(|p| edge_set(g, p).into_iter().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

/// Every labelled graph on `n` vertices.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = all_pairs(n);
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// Injective maps `pattern → host` sending edges to edges.
pub fn brute_injective_homs(pattern: &Graph, host: &Graph) -> u64 {
    let (k, n) = (pattern.order(), host.order());
    let mut count = 0;
    let mut map = vec![0; k];
    let mut used = vec![false; n];
    fn go(i: usize, p: &Graph, h: &Graph, map: &mut [usize], used: &mut [bool], count: &mut u64) {
        if i == p.order() {
            let ok = p.edges().iter().all(|&(a, b)| h.has_edge(map[a], map[b]));
            *count += ok as u64;
            return;
        }
        for v in 0..h.order() {
            if !used[v] {
                used[v] = true;
                map[i] = v;
                go(i + 1, p, h, map, used, count);
                used[v] = false;
            }
        }
    }
    if k <= n {
        go(0, pattern, host, &mut map, &mut used, &mut count);
    }
    count
}

/// Any map `f → b` sending edges to edges.
pub fn brute_hom_exists(f: &Graph, b: &Graph) -> bool {
    let (k, n) = (f.order(), b.order());
    if k == 0 {
        return true;
    }
    if n == 0 {
        return false;
    }
    let total = (n as u64).pow(k as u32);
    (0..total).any(|mut code| {
        let mut map = vec![0; k];
        for slot in map.iter_mut() {
            *slot = (code % n as u64) as usize;
            code /= n as u64;
        }
        f.edges().iter().all(|&(u, v)| b.has_edge(map[u], map[v]))
    })
}

/// Proper edge colourings of `g` with colours `0..q`, labelled.
pub fn labelled_colorings(g: &Graph, q: u32) -> Vec<Vec<u32>> {
    let edges = g.edges();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(edges: &[(usize, usize)], q: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let i = cur.len();
        if i == edges.len() {
            out.push(cur.clone());
            return;
        }
        let (u, v) = edges[i];
        for c in 0..q {
            let clash = edges[..i]
                .iter()
                .zip(cur.iter())
                .any(|(&(a, b), &d)| d == c && (a == u || a == v || b == u || b == v));
            if !clash {
                cur.push(c);
                go(edges, q, cur, out);
                cur.pop();
            }
        }
    }
    go(&edges, q, &mut cur, &mut out);
    out
}

/// Colour classes as a set of edge-index sets: the colouring up to renaming.
pub fn colour_partition(colors: &[u32]) -> BTreeSet<BTreeSet<usize>> {
    let mut classes = std::collections::BTreeMap::<u32, BTreeSet<usize>>::new();
    for (i, &c) in colors.iter().enumerate() {
        classes.entry(c).or_default().insert(i);
    }
    classes.into_values().collect()
}

/// Does the labelled colouring contain a rainbow copy of `f`? Checks every
/// injective map.
pub fn brute_has_rainbow(g: &Graph, colors: &[u32], f: &Graph) -> bool {
    let edges = g.edges();
    let colour_of = |u: usize, v: usize| {
        let e = (u.min(v), u.max(v));
        colors[edges.iter().position(|&x| x == e).unwrap()]
    };
    let k = f.order();
    let n = g.order();
    if k > n {
        return false;
    }
    let mut map = vec![0; k];
    let mut used = vec![false; n];
    fn go(
        i: usize,
        f: &Graph,
        g: &Graph,
        map: &mut [usize],
        used: &mut [bool],
        check: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        if i == f.order() {
            return check(map);
        }
        for v in 0..g.order() {
            if !used[v] {
                used[v] = true;
                map[i] = v;
                if go(i + 1, f, g, map, used, check) {
                    return true;
                }
                used[v] = false;
            }
        }
        false
    }
    let check = |map: &[usize]| {
        let mut seen = BTreeSet::new();
        f.edges().iter().all(|&(a, b)| {
            g.has_edge(map[a], map[b]) && seen.insert(colour_of(map[a], map[b]))
        })
    };
    go(0, f, g, &mut map, &mut used, &check)
}

/// Proper colourings up to renaming: restricted growth strings over the
/// edge list (edge `i` gets a colour at most one above the largest so far),
/// filtered for properness at the end.
pub fn set_partition_colorings(g: &Graph) -> Vec<Vec<u32>> {
    let edges = g.edges();
    let m = edges.len();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(m: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        let next = cur.iter().max().map_or(0, |&c| c + 1);
        for c in 0..=next {
            cur.push(c);
            go(m, cur, out);
            cur.pop();
        }
    }
    go(m, &mut cur, &mut out);
    out.retain(|c| {
        (0..m).all(|i| {
            (0..i).all(|j| {
                let (a, b) = edges[i];
                let (x, y) = edges[j];
                c[i] != c[j] || !(a == x || a == y || b == x || b == y)
            })
        })
    });
    out
}

/// Rainbow-`f` membership by checking every colouring up to renaming.
pub fn brute_rainbow_allowed(g: &Graph, f: &Graph) -> bool {
    set_partition_colorings(g)
        .iter()
        .any(|c| !brute_has_rainbow(g, c, f))
}
