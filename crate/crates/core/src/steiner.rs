//! Exact Steiner distances and the Steiner k-Wiener index.
//!
//! Three independent routes compute `d(S)`:
//!
//! * [`steiner_distance_3`] for three terminals: a Steiner tree on three
//!   terminals has at most one branch vertex, so `d(S) = min_v Σ d(s, v)`.
//! * [`steiner_distance_dw`], the Dreyfus–Wagner dynamic program over
//!   (terminal subset, root vertex) states, run directly on the graph.
//! * [`steiner_distance_oracle`], an exhaustive scan over connected vertex
//!   supersets of `S`, used only as a test reference.

use std::fmt;

use rayon::prelude::*;

use crate::count::{binomial, BigCount, ExactRatio};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::{all_pairs_distances, bfs_row, wiener_from_distances, DistMatrix};
use crate::subset::VertexSubset;

/// Default limit on the number of terminals handed to Dreyfus–Wagner.
pub const DEFAULT_K_MAX: usize = 12;

/// Largest graph the exhaustive oracle accepts.
pub const ORACLE_MAX_N: usize = 20;

const INF: u32 = u32::MAX / 4;

/// Steiner distance of `{a, b, c}`; repeated ids degrade to the pairwise
/// distance (or 0).
pub fn steiner_distance_3(d: &DistMatrix, a: usize, b: usize, c: usize) -> u32 {
    let (ra, rb, rc) = (d.row(a), d.row(b), d.row(c));
    ra.iter()
        .zip(rb)
        .zip(rc)
        .map(|((x, y), z)| x + y + z)
        .min()
        .unwrap_or(0)
}

/// `SW_3` over strict 3-subsets, partitioned by the smallest vertex.
pub(crate) fn sw3_from_distances(d: &DistMatrix) -> u128 {
    let n = d.n();
    (0..n)
        .into_par_iter()
        .map(|a| {
            let ra = d.row(a);
            let mut pair = vec![0u32; n];
            let mut total = 0u128;
            for b in a + 1..n {
                for ((p, x), y) in pair.iter_mut().zip(ra).zip(d.row(b)) {
                    *p = x + y;
                }
                for c in b + 1..n {
                    let best = pair
                        .iter()
                        .zip(d.row(c))
                        .map(|(p, z)| p + z)
                        .min()
                        .unwrap_or(0);
                    total += best as u128;
                }
            }
            total
        })
        .sum()
}

/// Dreyfus–Wagner with the default terminal limit.
pub fn steiner_distance_dw(g: &Graph, s: &VertexSubset) -> Result<u32> {
    steiner_distance_dw_with(g, &s.to_vec(), DEFAULT_K_MAX)
}

/// Dreyfus–Wagner over an explicit terminal list (duplicates ignored).
pub fn steiner_distance_dw_with(g: &Graph, terminals: &[usize], k_max: usize) -> Result<u32> {
    let mut terms = terminals.to_vec();
    terms.sort_unstable();
    terms.dedup();
    if terms.len() > k_max {
        return Err(Error::TerminalSetTooLarge {
            size: terms.len(),
            max: k_max,
        });
    }
    if let Some(&bad) = terms.iter().find(|&&t| t >= g.n()) {
        return Err(Error::range(format!("terminal {bad} out of range")));
    }
    if terms.len() <= 1 {
        return Ok(0);
    }
    let cost = DreyfusWagner::new(g, None).solve(&terms);
    if cost >= INF {
        Err(Error::Disconnected)
    } else {
        Ok(cost)
    }
}

/// Reusable scratch space for repeated Dreyfus–Wagner runs on one graph.
struct DreyfusWagner<'g> {
    g: &'g Graph,
    dist: Option<&'g DistMatrix>,
    table: Vec<u32>,
    root_row: Vec<u32>,
    seeds: Vec<u64>,
    queue: Vec<(u32, u32)>,
}

impl<'g> DreyfusWagner<'g> {
    fn new(g: &'g Graph, dist: Option<&'g DistMatrix>) -> Self {
        DreyfusWagner {
            g,
            dist,
            table: Vec::new(),
            root_row: Vec::new(),
            seeds: Vec::new(),
            queue: Vec::new(),
        }
    }

    fn fill_distances(g: &Graph, dist: Option<&DistMatrix>, src: usize, row: &mut [u32]) {
        match dist {
            Some(d) => row.copy_from_slice(d.row(src)),
            None => {
                bfs_row(g, src, row);
                for x in row.iter_mut() {
                    if *x == u32::MAX {
                        *x = INF;
                    }
                }
            }
        }
    }

    /// The last terminal is the root; states range over subsets of the rest.
    fn solve(&mut self, terms: &[usize]) -> u32 {
        let n = self.g.n();
        let (&root, rest) = terms.split_last().expect("at least two terminals");
        let q = rest.len();
        let states = 1usize << q;
        self.table.clear();
        self.table.resize(states * n, INF);
        self.root_row.resize(n, INF);
        Self::fill_distances(self.g, self.dist, root, &mut self.root_row);
        if q == 1 {
            return self.root_row[rest[0]];
        }
        for (i, &t) in rest.iter().enumerate() {
            let row = &mut self.table[(1 << i) * n..((1 << i) + 1) * n];
            Self::fill_distances(self.g, self.dist, t, row);
        }

        for mask in 1..states {
            if mask.count_ones() < 2 {
                continue;
            }
            let low = mask & mask.wrapping_neg();
            let (done, tail) = self.table.split_at_mut(mask * n);
            let row = &mut tail[..n];
            // Proper submasks containing the lowest bit, each split seen once.
            let mut sub = (mask - 1) & mask;
            while sub > 0 {
                if sub & low != 0 {
                    let other = mask ^ sub;
                    let a = &done[sub * n..(sub + 1) * n];
                    let b = &done[other * n..(other + 1) * n];
                    for ((r, x), y) in row.iter_mut().zip(a).zip(b) {
                        *r = (*r).min(x + y);
                    }
                }
                sub = (sub - 1) & mask;
            }
            if mask + 1 < states {
                relax(self.g, row, &mut self.seeds, &mut self.queue);
            }
        }
        let full = &self.table[(states - 1) * n..];
        full.iter()
            .zip(&self.root_row)
            .map(|(a, b)| a + b)
            .min()
            .unwrap_or(INF)
            .min(INF)
    }
}

/// Shortest paths with unit edge weights from arbitrary initial labels:
/// the sorted seeds and a FIFO of expanded vertices are merged in order.
fn relax(g: &Graph, row: &mut [u32], seeds: &mut Vec<u64>, queue: &mut Vec<(u32, u32)>) {
    seeds.clear();
    seeds.extend(
        row.iter()
            .enumerate()
            .filter(|(_, &x)| x < INF)
            .map(|(v, &x)| (x as u64) << 32 | v as u64),
    );
    seeds.sort_unstable();
    queue.clear();
    let (mut i, mut head) = (0, 0);
    loop {
        let seed = seeds.get(i).map(|&p| ((p >> 32) as u32, p as u32));
        let queued = queue.get(head).copied();
        let (dist, v) = match (seed, queued) {
            (Some(s), Some(f)) if s.0 <= f.0 => {
                i += 1;
                s
            }
            (_, Some(f)) => {
                head += 1;
                f
            }
            (Some(s), None) => {
                i += 1;
                s
            }
            (None, None) => break,
        };
        if dist > row[v as usize] {
            continue;
        }
        for &w in g.neighbors(v as usize) {
            if dist + 1 < row[w as usize] {
                row[w as usize] = dist + 1;
                queue.push((dist + 1, w));
            }
        }
    }
}

/// Exhaustive reference: the fewest vertices `T ⊇ S` with `G[T]` connected,
/// minus one. Exponential; limited to [`ORACLE_MAX_N`] vertices.
pub fn steiner_distance_oracle(g: &Graph, s: &VertexSubset) -> Result<u32> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(Error::range(format!(
            "oracle limited to {ORACLE_MAX_N} vertices, graph has {n}"
        )));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let required: u32 = s.iter().fold(0, |m, v| m | 1 << v);
    if required.count_ones() <= 1 {
        return Ok(0);
    }
    let free = !required & ((1u64 << n) - 1) as u32;

    let connected = |set: u32| {
        let mut reach = set & set.wrapping_neg();
        loop {
            let mut grown = reach;
            let mut bits = reach;
            while bits != 0 {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                grown |= adj[v as usize];
            }
            grown &= set;
            if grown == reach {
                return reach == set;
            }
            reach = grown;
        }
    };

    let mut best = u32::MAX;
    let mut extra = free;
    loop {
        let t = required | extra;
        let size = t.count_ones() - 1;
        if size < best && connected(t) {
            best = size;
        }
        if extra == 0 {
            break;
        }
        extra = (extra - 1) & free;
    }
    if best == u32::MAX {
        Err(Error::Disconnected)
    } else {
        Ok(best)
    }
}

/// Steiner k-Wiener index with the default terminal limit.
pub fn steiner_wiener(g: &Graph, k: usize) -> Result<BigCount> {
    steiner_wiener_with(g, k, DEFAULT_K_MAX)
}

/// `SW_k(G)`: sum of `d(S)` over all `k`-subsets.
pub fn steiner_wiener_with(g: &Graph, k: usize, k_max: usize) -> Result<BigCount> {
    check_k(g, k, 2, k_max)?;
    let d = all_pairs_distances(g)?;
    Ok(sw_k(g, &d, k))
}

fn check_k(g: &Graph, k: usize, min_k: usize, k_max: usize) -> Result<()> {
    let hi = g.n().min(k_max);
    if k < min_k || k > hi {
        return Err(Error::range(format!(
            "k={k} outside {min_k}..={hi} (n={}, k_max={k_max})",
            g.n()
        )));
    }
    Ok(())
}

/// Assumes `2 <= k <= n` and `d` belongs to the connected graph `g`.
fn sw_k(g: &Graph, d: &DistMatrix, k: usize) -> BigCount {
    match k {
        2 => wiener_from_distances(d),
        3 => BigCount::from(sw3_from_distances(d)),
        _ => {
            let n = g.n();
            let total: u128 = (0..=n - k)
                .into_par_iter()
                .map(|first| {
                    let mut dw = DreyfusWagner::new(g, Some(d));
                    let mut set: Vec<usize> = std::iter::once(first)
                        .chain(first + 1..first + k)
                        .collect();
                    let mut sum = 0u128;
                    loop {
                        sum += dw.solve(&set) as u128;
                        if !next_combination(&mut set[1..], n) {
                            break;
                        }
                    }
                    sum
                })
                .sum();
            BigCount::from(total)
        }
    }
}

/// Advances `set` (strictly increasing, values below `n`) to the next
/// combination in lexicographic order. Returns false after the last one.
fn next_combination(set: &mut [usize], n: usize) -> bool {
    let k = set.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if set[i] < n - k + i {
            set[i] += 1;
            for j in i + 1..k {
                set[j] = set[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// `μ_k(G) = SW_k(G) / C(n, k)`.
pub fn mean_steiner(g: &Graph, k: usize) -> Result<ExactRatio> {
    let sw = steiner_wiener(g, k)?;
    ExactRatio::new(sw, binomial(g.n() as u64, k as u64))
}

/// Lower reference value `f(m)` for `inf μ_m/μ`: `2 − 2/m` for even `m`,
/// `2 − 2/(m+1)` for odd `m`.
pub fn ratio_floor(m: usize) -> Result<ExactRatio> {
    if m < 2 {
        return Err(Error::range("f(m) is defined for m >= 2"));
    }
    let even = if m % 2 == 0 { m } else { m + 1 } as u64;
    ExactRatio::new(2 * even - 2, even)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
        })
    }
}

/// Whether a row is a theorem (must hold), an open/disproved statement
/// (recorded only), or a reference comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Standing {
    Proved,
    Conjectural,
    Reference,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: String,
    pub left: ExactRatio,
    pub relation: Relation,
    pub right: ExactRatio,
    pub holds: bool,
    pub equality: bool,
    pub standing: Standing,
}

impl BoundCheck {
    fn new(name: String, left: ExactRatio, relation: Relation, right: ExactRatio, standing: Standing) -> Self {
        let holds = match relation {
            Relation::Le => left <= right,
            Relation::Ge => left >= right,
        };
        let equality = left == right;
        BoundCheck {
            name,
            left,
            relation,
            right,
            holds,
            equality,
            standing,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub k: usize,
    pub mu_k: ExactRatio,
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    /// Every row marked [`Standing::Proved`] holds.
    pub fn proved_rows_hold(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| c.standing == Standing::Proved)
            .all(|c| c.holds)
    }

    pub fn get(&self, name: &str) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Evaluates the average-Steiner-distance relations for `k` in exact arithmetic.
///
/// Rows:
/// * `split r=R`: `μ_k <= μ_R + μ_{k+1−R}` for `2 <= R <= k−1`
/// * `(k-1)mu`: `μ_k <= (k−1)·μ`
/// * `ratio-prev`: `μ_k <= (k+1)/(k−1)·μ_{k−1}`
/// * `lower`: `μ_k >= 3(k−1)/(k+1)·μ`; proved only for `k = 3` and `k = n`,
///   otherwise conjectural (false in general)
/// * `ratio-floor`: `μ_k/μ` against [`ratio_floor`]
pub fn check_bounds(g: &Graph, k: usize) -> Result<BoundsReport> {
    check_bounds_with(g, k, DEFAULT_K_MAX)
}

pub fn check_bounds_with(g: &Graph, k: usize, k_max: usize) -> Result<BoundsReport> {
    check_k(g, k, 3, k_max)?;
    let d = all_pairs_distances(g)?;
    let n = g.n() as u64;
    // mu[j] for j in 2..=k
    let mut mu = vec![ExactRatio::integer(0u32); k + 1];
    for j in 2..=k {
        mu[j] = ExactRatio::new(sw_k(g, &d, j), binomial(n, j as u64))?;
    }
    let frac = |a: u64, b: u64| ExactRatio::new(a, b).expect("nonzero denominator");
    let mut checks = Vec::new();
    for r in 2..k {
        checks.push(BoundCheck::new(
            format!("split r={r}"),
            mu[k].clone(),
            Relation::Le,
            mu[r].add(&mu[k + 1 - r]),
            Standing::Proved,
        ));
    }
    let ku = k as u64;
    checks.push(BoundCheck::new(
        "(k-1)mu".into(),
        mu[k].clone(),
        Relation::Le,
        frac(ku - 1, 1).mul(&mu[2]),
        Standing::Proved,
    ));
    checks.push(BoundCheck::new(
        "ratio-prev".into(),
        mu[k].clone(),
        Relation::Le,
        frac(ku + 1, ku - 1).mul(&mu[k - 1]),
        Standing::Proved,
    ));
    let lower_standing = if k == 3 || ku == n {
        Standing::Proved
    } else {
        Standing::Conjectural
    };
    checks.push(BoundCheck::new(
        "lower".into(),
        mu[k].clone(),
        Relation::Ge,
        frac(3 * (ku - 1), ku + 1).mul(&mu[2]),
        lower_standing,
    ));
    checks.push(BoundCheck::new(
        "ratio-floor".into(),
        mu[k].div(&mu[2]).expect("mu > 0 on connected graphs with n >= 2"),
        Relation::Ge,
        ratio_floor(k)?,
        Standing::Reference,
    ));
    Ok(BoundsReport {
        k,
        mu_k: mu[k].clone(),
        checks,
    })
}

/// `2·SW_3` and `(n−2)·W`, which are equal exactly on modular graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sw3ModularBound {
    pub sw3_doubled: BigCount,
    pub bound_doubled: BigCount,
    pub equality: bool,
}

pub fn check_sw3_modular_bound(g: &Graph) -> Result<Sw3ModularBound> {
    if g.n() < 3 {
        return Err(Error::range("SW_3 bound needs at least three vertices"));
    }
    let d = all_pairs_distances(g)?;
    let sw3_doubled = BigCount::from(sw3_from_distances(&d)) * 2u32;
    let bound_doubled = wiener_from_distances(&d) * (g.n() as u64 - 2);
    let equality = sw3_doubled == bound_doubled;
    debug_assert!(sw3_doubled >= bound_doubled);
    Ok(Sw3ModularBound {
        sw3_doubled,
        bound_doubled,
        equality,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_family, Family, FamilySpec};

    fn fam(f: Family, n: usize) -> Graph {
        make_family(FamilySpec::new(f, n)).unwrap()
    }

    fn set(n: usize, ids: &[usize]) -> VertexSubset {
        VertexSubset::from_ids(n, ids.iter().copied())
    }

    #[test]
    fn three_terminal_examples() {
        let star = all_pairs_distances(&fam(Family::Star, 4)).unwrap();
        assert_eq!(steiner_distance_3(&star, 1, 2, 3), 3);
        let k3 = all_pairs_distances(&fam(Family::Complete, 3)).unwrap();
        assert_eq!(steiner_distance_3(&k3, 0, 1, 2), 2);
        let c5 = all_pairs_distances(&fam(Family::Cycle, 5)).unwrap();
        assert_eq!(steiner_distance_3(&c5, 0, 2, 4), 3);
        // degenerate triples
        assert_eq!(steiner_distance_3(&c5, 0, 0, 2), 2);
        assert_eq!(steiner_distance_3(&c5, 3, 3, 3), 0);
    }

    #[test]
    fn dw_examples() {
        let q3 = fam(Family::Hypercube, 3);
        // Even-weight strings 000, 011, 101, 110: pairwise at distance 2, yet
        // 000-001-011, 001-101, 000-010-110 spans them with 5 edges.
        let even = set(8, &[0, 3, 5, 6]);
        assert_eq!(steiner_distance_oracle(&q3, &even).unwrap(), 5);
        assert_eq!(steiner_distance_dw(&q3, &even).unwrap(), 5);
        assert_eq!(steiner_distance_dw(&q3, &set(8, &[5])).unwrap(), 0);
        assert_eq!(steiner_distance_dw(&q3, &set(8, &[0, 7])).unwrap(), 3);
        assert_eq!(steiner_distance_dw(&q3, &VertexSubset::new(8)).unwrap(), 0);
    }

    #[test]
    fn dw_terminal_limit() {
        let g = fam(Family::Path, 20);
        let s = VertexSubset::from_ids(20, 0..13);
        assert_eq!(
            steiner_distance_dw(&g, &s).unwrap_err(),
            Error::TerminalSetTooLarge { size: 13, max: 12 }
        );
        assert_eq!(steiner_distance_dw_with(&g, &(0..13).collect::<Vec<_>>(), 13).unwrap(), 12);
    }

    #[test]
    fn dw_disconnected_terminals() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(steiner_distance_dw(&g, &set(4, &[0, 3])).unwrap_err(), Error::Disconnected);
        assert_eq!(steiner_distance_oracle(&g, &set(4, &[0, 3])).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn oracle_examples() {
        let p4 = fam(Family::Path, 4);
        assert_eq!(steiner_distance_oracle(&p4, &set(4, &[0, 3])).unwrap(), 3);
        assert_eq!(steiner_distance_oracle(&p4, &set(4, &[1, 2])).unwrap(), 1);
        let c6 = fam(Family::Cycle, 6);
        assert_eq!(steiner_distance_oracle(&c6, &set(6, &[0, 2, 4])).unwrap(), 4);
        assert!(steiner_distance_oracle(&fam(Family::Path, 21), &set(21, &[0])).is_err());
    }

    #[test]
    fn sw_values() {
        assert_eq!(steiner_wiener(&fam(Family::LucasCube, 3), 3).unwrap(), 9u32.into());
        assert_eq!(steiner_wiener(&fam(Family::FibonacciCube, 5), 3).unwrap(), 968u32.into());
        let c5 = fam(Family::Cycle, 5);
        assert_eq!(steiner_wiener(&c5, 2).unwrap(), 15u32.into());
        assert_eq!(steiner_wiener(&c5, 3).unwrap(), 25u32.into());
        // every 4-subset of C5 spans a path on 4 vertices
        assert_eq!(steiner_wiener(&c5, 4).unwrap(), 15u32.into());
        assert_eq!(steiner_wiener(&c5, 5).unwrap(), 4u32.into());
        assert!(steiner_wiener(&c5, 1).is_err());
        assert!(steiner_wiener(&c5, 6).is_err());
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(steiner_wiener(&g, 3).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn means() {
        let c4 = fam(Family::Cycle, 4);
        assert_eq!(mean_steiner(&c4, 3).unwrap(), ExactRatio::integer(2u32));
        assert_eq!(mean_steiner(&c4, 2).unwrap(), crate::average_distance(&c4).unwrap());
        let tree = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(mean_steiner(&tree, 6).unwrap(), ExactRatio::integer(5u32));
    }

    #[test]
    fn ratio_floor_values() {
        assert_eq!(ratio_floor(4).unwrap(), ExactRatio::new(3u32, 2u32).unwrap());
        assert_eq!(ratio_floor(5).unwrap(), ExactRatio::new(5u32, 3u32).unwrap());
        assert_eq!(ratio_floor(2).unwrap(), ExactRatio::integer(1u32));
        assert!(ratio_floor(1).is_err());
    }

    #[test]
    fn bounds_on_modular_graph() {
        for g in [fam(Family::Cycle, 4), fam(Family::Path, 6), fam(Family::Hypercube, 3)] {
            let rep = check_bounds(&g, 3).unwrap();
            let lower = rep.get("lower").unwrap();
            assert!(lower.holds && lower.equality);
            assert!(rep.proved_rows_hold());
        }
    }

    #[test]
    fn bounds_on_complete_graph() {
        let rep = check_bounds(&fam(Family::Complete, 5), 3).unwrap();
        assert_eq!(rep.mu_k, ExactRatio::integer(2u32));
        let r2 = rep.get("split r=2").unwrap();
        assert!(r2.holds && r2.equality);
        assert_eq!(r2.right, ExactRatio::integer(2u32));
        assert!(rep.proved_rows_hold());
    }

    #[test]
    fn bounds_standing() {
        let g = fam(Family::Path, 6);
        let rep = check_bounds(&g, 4).unwrap();
        assert_eq!(rep.get("lower").unwrap().standing, Standing::Conjectural);
        let rep = check_bounds(&g, 6).unwrap();
        assert_eq!(rep.get("lower").unwrap().standing, Standing::Proved);
        assert!(check_bounds(&g, 2).is_err());
        assert!(check_bounds(&g, 7).is_err());
    }

    #[test]
    fn modular_bound_examples() {
        let c5 = check_sw3_modular_bound(&fam(Family::Cycle, 5)).unwrap();
        assert_eq!((c5.sw3_doubled, c5.bound_doubled, c5.equality), (50u32.into(), 45u32.into(), false));
        let c4 = check_sw3_modular_bound(&fam(Family::Cycle, 4)).unwrap();
        assert_eq!((c4.sw3_doubled, c4.bound_doubled, c4.equality), (16u32.into(), 16u32.into(), true));
        let tree = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        assert!(check_sw3_modular_bound(&tree).unwrap().equality);
        assert!(check_sw3_modular_bound(&fam(Family::Path, 2)).is_err());
    }

    #[test]
    fn combinations_enumerated_in_order() {
        let mut set = vec![0, 1];
        let mut seen = vec![set.clone()];
        while next_combination(&mut set, 4) {
            seen.push(set.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen.last().unwrap(), &vec![2, 3]);
    }
}
