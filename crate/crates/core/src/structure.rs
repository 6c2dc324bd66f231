//! Modular triples, modular and median graph recognition, and 2-intersection
//! intervals.

use rayon::prelude::*;

use crate::count::{binomial, BigCount};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::{all_pairs_distances, DistMatrix};
use crate::subset::VertexSubset;

/// Interval bitsets for all pairs are precomputed up to this many vertices.
pub const INTERVAL_TABLE_LIMIT: usize = 1024;

/// `I(a,b) ∩ I(a,c) ∩ I(b,c)`.
pub fn median_set(d: &DistMatrix, a: usize, b: usize, c: usize) -> VertexSubset {
    VertexSubset::from_ids(d.n(), medians(d, a, b, c))
}

fn medians(d: &DistMatrix, a: usize, b: usize, c: usize) -> impl Iterator<Item = usize> + '_ {
    let (ra, rb, rc) = (d.row(a), d.row(b), d.row(c));
    let (ab, ac, bc) = (ra[b], ra[c], rb[c]);
    (0..d.n()).filter(move |&w| {
        ra[w] + rb[w] == ab && ra[w] + rc[w] == ac && rb[w] + rc[w] == bc
    })
}

pub fn is_modular_triple(d: &DistMatrix, a: usize, b: usize, c: usize) -> bool {
    medians(d, a, b, c).next().is_some()
}

/// Upper-triangle table of interval bitsets, stored as flat words.
struct IntervalTable {
    n: usize,
    words: usize,
    data: Vec<u64>,
}

impl IntervalTable {
    fn build(d: &DistMatrix) -> Self {
        let n = d.n();
        let words = n.div_ceil(64);
        let pairs = n * n.saturating_sub(1) / 2;
        let mut data = vec![0u64; pairs * words];
        data.par_chunks_mut(words.max(1))
            .enumerate()
            .for_each(|(idx, chunk)| {
                let (u, v) = unrank_pair(idx, n);
                let (ru, rv, duv) = (d.row(u), d.row(v), d.get(u, v));
                for w in 0..n {
                    if ru[w] + rv[w] == duv {
                        chunk[w / 64] |= 1 << (w % 64);
                    }
                }
            });
        IntervalTable { n, words, data }
    }

    #[inline]
    fn get(&self, u: usize, v: usize) -> &[u64] {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        let idx = rank_pair(u, v, self.n);
        &self.data[idx * self.words..(idx + 1) * self.words]
    }

    /// `|I(a,b) ∩ I(a,c) ∩ I(b,c)|`, saturating at 2.
    #[inline]
    fn median_count(&self, a: usize, b: usize, c: usize) -> u32 {
        let (x, y, z) = (self.get(a, b), self.get(a, c), self.get(b, c));
        let mut count = 0;
        for i in 0..self.words {
            count += (x[i] & y[i] & z[i]).count_ones();
            if count >= 2 {
                return 2;
            }
        }
        count
    }
}

/// Index of pair `(u, v)`, `u < v`, in row-major upper-triangle order.
#[inline]
fn rank_pair(u: usize, v: usize, n: usize) -> usize {
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

fn unrank_pair(mut idx: usize, n: usize) -> (usize, usize) {
    let mut u = 0;
    while idx >= n - u - 1 {
        idx -= n - u - 1;
        u += 1;
    }
    (u, u + 1 + idx)
}

/// Counts medians of strict triples, either from the table or by direct scan.
enum MedianCounter<'a> {
    Table(IntervalTable),
    Direct(&'a DistMatrix),
}

impl<'a> MedianCounter<'a> {
    fn new(d: &'a DistMatrix) -> Self {
        if d.n() <= INTERVAL_TABLE_LIMIT {
            MedianCounter::Table(IntervalTable::build(d))
        } else {
            MedianCounter::Direct(d)
        }
    }

    #[inline]
    fn count(&self, a: usize, b: usize, c: usize) -> u32 {
        match self {
            MedianCounter::Table(t) => t.median_count(a, b, c),
            MedianCounter::Direct(d) => medians(d, a, b, c).take(2).count() as u32,
        }
    }
}

/// Counts of modular and non-modular strict triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleClassification {
    pub total_triples: BigCount,
    pub modular: BigCount,
    pub nonmodular: BigCount,
    /// Every modular triple has exactly one median.
    pub median_unique: bool,
}

/// Exhaustive scan over all `C(n, 3)` triples.
pub fn classify_triples(g: &Graph) -> Result<TripleClassification> {
    if g.n() < 3 {
        return Err(Error::range("triple classification needs at least three vertices"));
    }
    let d = all_pairs_distances(g)?;
    Ok(classify_with(&d))
}

pub fn classify_with(d: &DistMatrix) -> TripleClassification {
    let n = d.n();
    let counter = MedianCounter::new(d);
    let (nonmodular, multi) = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut nonmodular = 0u64;
            let mut multi = false;
            for b in a + 1..n {
                for c in b + 1..n {
                    match counter.count(a, b, c) {
                        0 => nonmodular += 1,
                        1 => {}
                        _ => multi = true,
                    }
                }
            }
            (nonmodular, multi)
        })
        .reduce(|| (0, false), |x, y| (x.0 + y.0, x.1 || y.1));
    let total = binomial(n as u64, 3);
    let nonmodular = BigCount::from(nonmodular);
    TripleClassification {
        modular: &total - &nonmodular,
        total_triples: total,
        nonmodular,
        median_unique: !multi,
    }
}

/// Every triple has a median. Stops at the first non-modular triple.
pub fn is_modular(g: &Graph) -> Result<bool> {
    let d = all_pairs_distances(g)?;
    Ok(scan_triples(&d, |m| m == 0))
}

/// Every triple has exactly one median.
pub fn is_median(g: &Graph) -> Result<bool> {
    let d = all_pairs_distances(g)?;
    Ok(scan_triples(&d, |m| m != 1))
}

pub fn is_modular_with(d: &DistMatrix) -> bool {
    scan_triples(d, |m| m == 0)
}

/// True if no strict triple's median count satisfies `bad`.
fn scan_triples(d: &DistMatrix, bad: impl Fn(u32) -> bool + Sync) -> bool {
    let n = d.n();
    let counter = MedianCounter::new(d);
    !(0..n).into_par_iter().any(|a| {
        (a + 1..n).any(|b| (b + 1..n).any(|c| bad(counter.count(a, b, c))))
    })
}

/// The 2-intersection interval `I₂(S)`: intersection of `I(a,b)` over
/// distinct pairs of `S`.
pub fn two_intersection(d: &DistMatrix, s: &VertexSubset) -> VertexSubset {
    let ids = s.to_vec();
    let mut acc = VertexSubset::full(d.n());
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i + 1..] {
            acc &= &d.interval(a, b);
        }
    }
    acc
}

/// `d(S)` as `Σ_{u∈S} d(u, x)` for `x ∈ I₂(S)`; `None` when `I₂(S)` is empty
/// or `|S| < 2`.
///
/// # Panics
///
/// If two members of `I₂(S)` give different sums.
pub fn steiner_via_2intersection(d: &DistMatrix, s: &VertexSubset) -> Option<u32> {
    if s.len() < 2 {
        return None;
    }
    let i2 = two_intersection(d, s);
    let mut sums = i2
        .iter()
        .map(|x| s.iter().map(|u| d.get(u, x)).sum::<u32>());
    let first = sums.next()?;
    for other in sums {
        assert_eq!(first, other, "2-intersection sums disagree");
    }
    Some(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_family, Family, FamilySpec};
    use crate::steiner::steiner_distance_3;

    fn fam(f: Family, n: usize) -> Graph {
        make_family(FamilySpec::new(f, n)).unwrap()
    }

    fn dist(g: &Graph) -> DistMatrix {
        all_pairs_distances(g).unwrap()
    }

    #[test]
    fn pair_ranking_round_trips() {
        let n = 7;
        let mut idx = 0;
        for u in 0..n {
            for v in u + 1..n {
                assert_eq!(rank_pair(u, v, n), idx);
                assert_eq!(unrank_pair(idx, n), (u, v));
                idx += 1;
            }
        }
    }

    #[test]
    fn median_sets() {
        let tree = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let d = dist(&tree);
        assert_eq!(median_set(&d, 0, 2, 4).to_vec(), vec![1]);
        assert_eq!(median_set(&d, 0, 4, 5).to_vec(), vec![3]);
        assert!(median_set(&dist(&fam(Family::Complete, 3)), 0, 1, 2).is_empty());
        // K2,3: side {0,1} has degree 3, side {2,3,4} degree 2.
        let k23 = make_family(FamilySpec::bipartite(2, 3)).unwrap();
        assert_eq!(median_set(&dist(&k23), 2, 3, 4).to_vec(), vec![0, 1]);
    }

    #[test]
    fn modular_triples() {
        let c5 = dist(&fam(Family::Cycle, 5));
        assert!(is_modular_triple(&c5, 0, 1, 2));
        assert!(!is_modular_triple(&c5, 0, 1, 3));
        assert!(is_modular_triple(&c5, 0, 0, 3));
    }

    #[test]
    fn classifications() {
        let k3 = classify_triples(&fam(Family::Complete, 3)).unwrap();
        assert_eq!(k3.nonmodular, 1u32.into());
        let c5 = classify_triples(&fam(Family::Cycle, 5)).unwrap();
        assert_eq!((c5.nonmodular.clone(), c5.modular.clone()), (5u32.into(), 5u32.into()));
        let tree = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        let t = classify_triples(&tree).unwrap();
        assert_eq!(t.nonmodular, 0u32.into());
        assert!(t.median_unique);
        assert!(classify_triples(&fam(Family::Path, 2)).is_err());
    }

    #[test]
    fn recognition() {
        let q3 = fam(Family::Hypercube, 3);
        assert!(is_modular(&q3).unwrap() && is_median(&q3).unwrap());
        let k23 = make_family(FamilySpec::bipartite(2, 3)).unwrap();
        assert!(is_modular(&k23).unwrap() && !is_median(&k23).unwrap());
        assert!(!is_modular(&fam(Family::Cycle, 5)).unwrap());
        assert!(is_modular(&fam(Family::Cycle, 4)).unwrap());
        assert!(!is_modular(&fam(Family::Cycle, 6)).unwrap());
        assert!(!is_modular(&fam(Family::Complete, 4)).unwrap());
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(is_modular(&g).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn two_intersection_formula() {
        let tree = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let d = dist(&tree);
        for (a, b, c) in [(0, 2, 4), (2, 4, 5), (0, 1, 5)] {
            let s = VertexSubset::from_ids(6, [a, b, c]);
            assert_eq!(steiner_via_2intersection(&d, &s), Some(steiner_distance_3(&d, a, b, c)));
        }
        let k23 = dist(&make_family(FamilySpec::bipartite(2, 3)).unwrap());
        let s = VertexSubset::from_ids(5, [2, 3, 4]);
        assert_eq!(steiner_via_2intersection(&k23, &s), Some(3));
        let k3 = dist(&fam(Family::Complete, 3));
        assert_eq!(steiner_via_2intersection(&k3, &VertexSubset::from_ids(3, [0, 1, 2])), None);
        assert_eq!(steiner_via_2intersection(&k3, &VertexSubset::from_ids(3, [0])), None);
    }

    #[test]
    fn direct_counter_matches_table() {
        let g = fam(Family::FibonacciCube, 5);
        let d = dist(&g);
        let table = IntervalTable::build(&d);
        for a in 0..d.n() {
            for b in a + 1..d.n() {
                for c in b + 1..d.n() {
                    let direct = medians(&d, a, b, c).take(2).count() as u32;
                    assert_eq!(table.median_count(a, b, c), direct);
                }
            }
        }
    }
}
