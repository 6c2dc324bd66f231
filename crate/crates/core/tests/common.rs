#![allow(dead_code)]

use swk_core::Graph;

/// Floyd–Warshall hop distances; `u32::MAX` for unreachable pairs.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v as usize] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Vertices on any walk from `u` to `v` of exactly `d(u, v)` steps, found by
/// enumerating those walks (which are the shortest paths).
pub fn interval_by_paths(g: &Graph, d: &[Vec<u32>], u: usize, v: usize) -> Vec<usize> {
    let target = d[u][v] as usize;
    let mut on_path = vec![false; g.n()];
    let mut path = vec![u];
    fn walk(g: &Graph, v: usize, target: usize, path: &mut Vec<usize>, on_path: &mut [bool]) {
        let cur = *path.last().unwrap();
        if path.len() - 1 == target {
            if cur == v {
                for &x in path.iter() {
                    on_path[x] = true;
                }
            }
            return;
        }
        for &w in g.neighbors(cur) {
            path.push(w as usize);
            walk(g, v, target, path, on_path);
            path.pop();
        }
    }
    walk(g, v, target, &mut path, &mut on_path);
    (0..g.n()).filter(|&x| on_path[x]).collect()
}

/// Steiner distance of a terminal set: smallest `|E(T)|` over vertex sets
/// `T ⊇ S` inducing a connected subgraph, searched by growing size. Written
/// independently of the library oracle.
pub fn steiner_brute(g: &Graph, terminals: &[usize]) -> u32 {
    let n = g.n();
    let req: u32 = terminals.iter().fold(0, |m, &v| m | 1 << v);
    if req.count_ones() <= 1 {
        return 0;
    }
    let connected = |set: u32| {
        let start = set.trailing_zeros() as usize;
        let mut seen = 1u32 << start;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                let bit = 1u32 << y;
                if set & bit != 0 && seen & bit == 0 {
                    seen |= bit;
                    stack.push(y as usize);
                }
            }
        }
        seen == set
    };
    let mut best = u32::MAX;
    for t in 0u32..(1 << n) {
        if t & req == req && t.count_ones() - 1 < best && connected(t) {
            best = t.count_ones() - 1;
        }
    }
    best
}

/// All graphs on `n` labeled vertices, as edge masks over the upper triangle.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}
