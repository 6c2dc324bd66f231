//! Simple undirected graphs with dense vertex ids.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::subset::VertexSubset;

/// Largest vertex count any constructor accepts by default.
pub const DEFAULT_VERTEX_CAP: usize = 1 << 20;

/// Neighbor bitsets are only materialized up to this many vertices (n²/8 bytes).
pub const ADJ_BITS_LIMIT: usize = 1 << 13;

/// A simple, finite, undirected graph on vertices `0..n`.
///
/// Neighbor lists are sorted. For graphs with at most [`ADJ_BITS_LIMIT`]
/// vertices each vertex also carries its neighborhood as a bitset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<u32>>,
    adj_bits: Option<Vec<VertexSubset>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_adjacency(vec![Vec::new(); n])
    }

    /// Builds a graph from an edge list. Duplicate edges (in either orientation)
    /// are collapsed; self-loops and out-of-range ids are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > u32::MAX as usize {
            return Err(Error::range(format!("{n} vertices exceeds u32 ids")));
        }
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(Error::range(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::range(format!("edge {u}-{v} out of range for n={n}")));
            }
            adjacency[u].push(v as u32);
            adjacency[v].push(u as u32);
        }
        for list in adjacency.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_adjacency(adjacency))
    }

    fn from_adjacency(adjacency: Vec<Vec<u32>>) -> Self {
        let n = adjacency.len();
        let m = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        let adj_bits = (n <= ADJ_BITS_LIMIT).then(|| {
            adjacency
                .iter()
                .map(|nb| VertexSubset::from_ids(n, nb.iter().map(|&v| v as usize)))
                .collect()
        });
        Graph {
            adjacency,
            adj_bits,
            m,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Neighborhood bitset, if the graph is small enough to carry them.
    pub fn neighbor_bits(&self, v: usize) -> Option<&VertexSubset> {
        self.adj_bits.as_ref().map(|b| &b[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.adj_bits {
            Some(bits) => bits[u].contains(v),
            None => self.adjacency[u].binary_search(&(v as u32)).is_ok(),
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nb)| {
            nb.iter()
                .map(|&v| v as usize)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// One BFS from vertex 0. Graphs on zero or one vertex are connected.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                let v = v as usize;
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// True if every pair of vertices in `set` is adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Two-coloring by BFS over every component.
    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbors(u) {
                    let v = v as usize;
                    if color[v] == u8::MAX {
                        color[v] = color[u] ^ 1;
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Cartesian product with the default vertex cap.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    cartesian_product_capped(g, h, DEFAULT_VERTEX_CAP)
}

/// `G □ H`: vertex `(a, x)` gets id `a·|V(H)| + x`; `(a,x) ~ (b,y)` iff
/// `ab ∈ E(G), x = y` or `a = b, xy ∈ E(H)`.
pub fn cartesian_product_capped(g: &Graph, h: &Graph, cap: usize) -> Result<Graph> {
    let (ng, nh) = (g.n(), h.n());
    if ng == 0 || nh == 0 {
        return Err(Error::range("cartesian product needs nonempty factors"));
    }
    let n = ng
        .checked_mul(nh)
        .filter(|&n| n <= cap)
        .ok_or_else(|| Error::range(format!("product of {ng}x{nh} vertices exceeds cap {cap}")))?;
    let mut adjacency = vec![Vec::new(); n];
    for a in 0..ng {
        for x in 0..nh {
            let list = &mut adjacency[a * nh + x];
            // Sorted merge: G-neighbors b < a, then H-neighbors, then b > a.
            let (lo, hi): (Vec<u32>, Vec<u32>) =
                g.neighbors(a).iter().partition(|&&b| (b as usize) < a);
            list.extend(lo.iter().map(|&b| (b as usize * nh + x) as u32));
            list.extend(h.neighbors(x).iter().map(|&y| (a * nh + y as usize) as u32));
            list.extend(hi.iter().map(|&b| (b as usize * nh + x) as u32));
        }
    }
    Ok(Graph::from_adjacency(adjacency))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn rejects_self_loop_and_range() {
        assert!(Graph::from_edges(2, [(1, 1)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(path(3).is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
    }

    #[test]
    fn product_of_paths() {
        let c4 = cartesian_product(&path(2), &path(2)).unwrap();
        assert_eq!((c4.n(), c4.m()), (4, 4));
        for v in 0..4 {
            assert_eq!(c4.degree(v), 2);
        }
        let grid = cartesian_product(&path(2), &path(3)).unwrap();
        assert_eq!((grid.n(), grid.m()), (6, 7));
        assert!(grid.has_edge(0, 3) && grid.has_edge(4, 5) && !grid.has_edge(0, 4));
    }

    #[test]
    fn product_with_k1_is_identity() {
        let h = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let p = cartesian_product(&Graph::empty(1), &h).unwrap();
        assert_eq!(p, h);
        let q = cartesian_product(&h, &Graph::empty(1)).unwrap();
        assert_eq!(q, h);
    }

    #[test]
    fn product_cap() {
        assert!(cartesian_product_capped(&path(10), &path(10), 99).is_err());
        assert!(cartesian_product(&Graph::empty(0), &path(2)).is_err());
    }

    #[test]
    fn product_lists_sorted() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let p = cartesian_product(&g, &path(3)).unwrap();
        for v in 0..p.n() {
            assert!(p.neighbors(v).windows(2).all(|w| w[0] < w[1]));
        }
    }
}
