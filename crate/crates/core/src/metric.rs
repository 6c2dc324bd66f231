//! Shortest-path distances, the Wiener index and geodesic intervals.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::count::{binomial, BigCount, ExactRatio};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subset::VertexSubset;

const UNREACHED: u32 = u32::MAX;

/// All-pairs hop distances of a connected graph, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistMatrix {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// The geodesic interval `I(u, v)`: vertices on some shortest u–v path.
    pub fn interval(&self, u: usize, v: usize) -> VertexSubset {
        let duv = self.get(u, v);
        let (ru, rv) = (self.row(u), self.row(v));
        VertexSubset::from_ids(
            self.n,
            (0..self.n).filter(|&w| ru[w] + rv[w] == duv),
        )
    }
}

/// Hop distances from `source`; unreachable vertices get `u32::MAX`.
pub(crate) fn bfs_row(g: &Graph, source: usize, row: &mut [u32]) {
    row.fill(UNREACHED);
    row[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = row[u] + 1;
        for &v in g.neighbors(u) {
            let v = v as usize;
            if row[v] == UNREACHED {
                row[v] = next;
                queue.push_back(v);
            }
        }
    }
}

/// One BFS per source, rows computed in parallel.
pub fn all_pairs_distances(g: &Graph) -> Result<DistMatrix> {
    let n = g.n();
    let mut dist = vec![0u32; n * n];
    if n > 0 {
        dist.par_chunks_mut(n)
            .enumerate()
            .for_each(|(s, row)| bfs_row(g, s, row));
    }
    if dist.contains(&UNREACHED) {
        return Err(Error::Disconnected);
    }
    Ok(DistMatrix { n, dist })
}

/// Sum of `d(u, v)` over unordered pairs.
pub fn wiener_from_distances(d: &DistMatrix) -> BigCount {
    let total: u128 = (0..d.n())
        .into_par_iter()
        .map(|u| d.row(u)[u + 1..].iter().map(|&x| x as u128).sum::<u128>())
        .sum();
    BigCount::from(total)
}

pub fn wiener_index(g: &Graph) -> Result<BigCount> {
    Ok(wiener_from_distances(&all_pairs_distances(g)?))
}

/// `W(G) / C(n, 2)`.
pub fn average_distance(g: &Graph) -> Result<ExactRatio> {
    if g.n() < 2 {
        return Err(Error::range("average distance needs at least two vertices"));
    }
    let w = wiener_index(g)?;
    ExactRatio::new(w, binomial(g.n() as u64, 2))
}

/// Free-function form of [`DistMatrix::interval`].
pub fn interval(d: &DistMatrix, u: usize, v: usize) -> VertexSubset {
    d.interval(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_family, Family, FamilySpec};

    fn fam(f: Family, n: usize) -> Graph {
        make_family(FamilySpec::new(f, n)).unwrap()
    }

    #[test]
    fn path_and_complete() {
        let d = all_pairs_distances(&fam(Family::Path, 3)).unwrap();
        assert_eq!(d.get(0, 2), 2);
        let k4 = all_pairs_distances(&fam(Family::Complete, 4)).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(k4.get(u, v), (u != v) as u32);
            }
        }
    }

    #[test]
    fn disconnected_is_error() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(all_pairs_distances(&g).unwrap_err(), Error::Disconnected);
        assert_eq!(wiener_index(&g).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn fibonacci_4_antipodal_pair() {
        // ids follow integer order of the strings: 0101 = 5, 1010 = 10.
        let labels = crate::generators::cube_labels(Family::FibonacciCube, 4).unwrap();
        let a = labels.iter().position(|l| l == "0101").unwrap();
        let b = labels.iter().position(|l| l == "1010").unwrap();
        let d = all_pairs_distances(&fam(Family::FibonacciCube, 4)).unwrap();
        assert_eq!(d.get(a, b), 4);
    }

    #[test]
    fn wiener_values() {
        assert_eq!(wiener_index(&fam(Family::FibonacciCube, 3)).unwrap(), 16u32.into());
        assert_eq!(wiener_index(&fam(Family::FibonacciCube, 4)).unwrap(), 54u32.into());
        assert_eq!(wiener_index(&fam(Family::Complete, 7)).unwrap(), 21u32.into());
        assert_eq!(wiener_index(&fam(Family::Cycle, 5)).unwrap(), 15u32.into());
        assert_eq!(wiener_index(&Graph::empty(1)).unwrap(), 0u32.into());
    }

    #[test]
    fn averages() {
        assert_eq!(average_distance(&fam(Family::Path, 2)).unwrap().to_string(), "1/1");
        assert_eq!(average_distance(&fam(Family::Path, 3)).unwrap().to_string(), "4/3");
        assert_eq!(average_distance(&fam(Family::Cycle, 4)).unwrap().to_string(), "4/3");
        assert!(average_distance(&Graph::empty(1)).is_err());
    }

    #[test]
    fn intervals() {
        let c4 = all_pairs_distances(&fam(Family::Cycle, 4)).unwrap();
        assert_eq!(c4.interval(0, 2).to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(c4.interval(1, 1).to_vec(), vec![1]);
        let c5 = all_pairs_distances(&fam(Family::Cycle, 5)).unwrap();
        assert_eq!(interval(&c5, 0, 2).to_vec(), vec![0, 1, 2]);
    }
}
