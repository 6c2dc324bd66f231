//! Block decomposition, block graphs and the non-modular triple count of a
//! block graph.

use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::{all_pairs_distances, wiener_from_distances, DistMatrix};
use crate::subset::VertexSubset;

/// Blocks (maximal 2-connected subgraphs or bridges) of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted by their ascending vertex lists.
    pub blocks: Vec<VertexSubset>,
    pub cut_vertices: VertexSubset,
    edge_block: HashMap<(u32, u32), usize>,
    block_edges: Vec<usize>,
}

impl BlockDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block containing edge `uv`, if it is an edge.
    pub fn block_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v) as u32, u.max(v) as u32);
        self.edge_block.get(&key).copied()
    }

    /// Number of edges in block `i`.
    pub fn edge_count(&self, i: usize) -> usize {
        self.block_edges[i]
    }

    /// Every block induces a clique.
    pub fn all_blocks_cliques(&self) -> bool {
        self.blocks.iter().zip(&self.block_edges).all(|(b, &m)| {
            let s = b.len();
            m == s * (s - 1) / 2
        })
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(VertexSubset::len).collect()
    }
}

/// Lowpoint DFS over a connected graph.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    g.require_connected()?;
    Ok(decompose(g))
}

/// Works on any graph; isolated vertices belong to no block.
fn decompose(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    const UNSEEN: u32 = u32::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut parent = vec![usize::MAX; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<(u32, u32)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(u32, u32)>> = Vec::new();
    let mut time = 0u32;

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, next neighbor index)
        let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            if let Some(&w) = g.neighbors(v).get(frame.1) {
                frame.1 += 1;
                let w = w as usize;
                if disc[w] == UNSEEN {
                    parent[w] = v;
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((v as u32, w as u32));
                    if v == root {
                        root_children += 1;
                    }
                    frames.push((w, 0));
                } else if w != parent[v] && disc[w] < disc[v] {
                    edge_stack.push((v as u32, w as u32));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            let w = v;
            let Some(&(v, _)) = frames.last() else { break };
            low[v] = low[v].min(low[w]);
            if low[w] >= disc[v] {
                if v != root {
                    is_cut[v] = true;
                }
                let mut block = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    block.push(e);
                    if e == (v as u32, w as u32) {
                        break;
                    }
                }
                raw_blocks.push(block);
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    let mut keyed: Vec<(Vec<usize>, Vec<(u32, u32)>)> = raw_blocks
        .into_iter()
        .map(|edges| {
            let mut verts: Vec<usize> = edges
                .iter()
                .flat_map(|&(a, b)| [a as usize, b as usize])
                .collect();
            verts.sort_unstable();
            verts.dedup();
            (verts, edges)
        })
        .collect();
    keyed.sort();

    let mut edge_block = HashMap::with_capacity(g.m());
    let mut blocks = Vec::with_capacity(keyed.len());
    let mut block_edges = Vec::with_capacity(keyed.len());
    for (i, (verts, edges)) in keyed.into_iter().enumerate() {
        for (a, b) in &edges {
            edge_block.insert(((*a).min(*b), (*a).max(*b)), i);
        }
        blocks.push(VertexSubset::from_ids(n, verts));
        block_edges.push(edges.len());
    }
    BlockDecomposition {
        blocks,
        cut_vertices: VertexSubset::from_ids(n, (0..n).filter(|&v| is_cut[v])),
        edge_block,
        block_edges,
    }
}

/// Every block is a clique.
pub fn is_block_graph(g: &Graph) -> bool {
    decompose(g).all_blocks_cliques()
}

/// `Σ_{i<j<k} n_i n_j n_k`, i.e. the number of vertex triples spread over
/// three distinct components. Zero for fewer than three components.
pub fn n3_of_components(sizes: &[u64]) -> BigCount {
    // Running elementary symmetric sums e1, e2, e3.
    let (mut e1, mut e2, mut e3) = (BigCount::zero(), BigCount::zero(), BigCount::zero());
    for &s in sizes {
        e3 += &e2 * s;
        e2 += &e1 * s;
        e1 += s;
    }
    e3
}

/// Component sizes of `G` with the edges of block `skip` removed.
fn component_sizes_without(g: &Graph, decomp: &BlockDecomposition, skip: usize) -> Vec<u64> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (u, v) in g.edges() {
        if decomp.block_of_edge(u, v) == Some(skip) {
            continue;
        }
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
        }
    }
    let mut sizes = vec![0u64; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        sizes[r] += 1;
    }
    sizes.retain(|&s| s > 0);
    sizes
}

/// Non-modular triple count of a block graph: `Σ_i N₃(G ∖ B_i)`.
pub fn nm_block_graph(g: &Graph, decomp: &BlockDecomposition) -> Result<BigCount> {
    if !decomp.all_blocks_cliques() {
        return Err(Error::NotBlockGraph);
    }
    Ok((0..decomp.len())
        .into_par_iter()
        .map(|i| n3_of_components(&component_sizes_without(g, decomp, i)))
        .reduce(BigCount::zero, |a, b| a + b))
}

/// `2·SW₃(G) = (n−2)·W(G) + Σ_i N₃(G ∖ B_i)` for a connected block graph.
pub fn sw3_block_formula(g: &Graph) -> Result<BigCount> {
    if g.n() < 3 {
        return Err(Error::range("SW_3 needs at least three vertices"));
    }
    let decomp = block_decomposition(g)?;
    let nm = nm_block_graph(g, &decomp)?;
    let d = all_pairs_distances(g)?;
    Ok(wiener_from_distances(&d) * (g.n() as u64 - 2) + nm)
}

/// Triangles `(x, y, z)` with `x` on the `a` side, `y` on the `b` side and
/// `z` on the `c` side such that each triangle edge lies on a geodesic
/// between the corresponding pair of terminals.
pub fn median_triangles(g: &Graph, d: &DistMatrix, a: usize, b: usize, c: usize) -> Vec<[usize; 3]> {
    let (ab, ac, bc) = (d.get(a, b), d.get(a, c), d.get(b, c));
    let mut out = Vec::new();
    for x in 0..g.n() {
        for &y in g.neighbors(x) {
            let y = y as usize;
            if d.get(a, x) + 1 + d.get(y, b) != ab {
                continue;
            }
            for &z in g.neighbors(x) {
                let z = z as usize;
                if z == y || !g.has_edge(y, z) {
                    continue;
                }
                if d.get(a, x) + 1 + d.get(z, c) == ac && d.get(b, y) + 1 + d.get(z, c) == bc {
                    out.push([x, y, z]);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_family, Family, FamilySpec};

    fn paw() -> Graph {
        // triangle 0-1-2 with pendant 3 at 0
        Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn tree_blocks_are_edges() {
        let t = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let dec = block_decomposition(&t).unwrap();
        assert_eq!(dec.len(), 5);
        assert_eq!(dec.cut_vertices.to_vec(), vec![1, 3]);
        assert!(dec.blocks.iter().all(|b| b.len() == 2));
    }

    #[test]
    fn complete_graph_one_block() {
        let k4 = make_family(FamilySpec::new(Family::Complete, 4)).unwrap();
        let dec = block_decomposition(&k4).unwrap();
        assert_eq!(dec.len(), 1);
        assert!(dec.cut_vertices.is_empty());
        assert_eq!(dec.edge_count(0), 6);
    }

    #[test]
    fn paw_blocks() {
        let dec = block_decomposition(&paw()).unwrap();
        assert_eq!(dec.blocks[0].to_vec(), vec![0, 1, 2]);
        assert_eq!(dec.blocks[1].to_vec(), vec![0, 3]);
        assert_eq!(dec.cut_vertices.to_vec(), vec![0]);
        assert_eq!(dec.block_of_edge(3, 0), Some(1));
        assert_eq!(dec.block_of_edge(2, 1), Some(0));
        assert_eq!(dec.block_of_edge(1, 3), None);
    }

    #[test]
    fn root_cut_vertex_and_cycle_blocks() {
        // two triangles sharing vertex 0, plus a 4-cycle hanging off 4
        let g = Graph::from_edges(
            8,
            [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4), (4, 5), (5, 6), (6, 7), (7, 4)],
        )
        .unwrap();
        let dec = block_decomposition(&g).unwrap();
        assert_eq!(dec.block_sizes(), vec![3, 3, 4]);
        assert_eq!(dec.cut_vertices.to_vec(), vec![0, 4]);
        assert!(!dec.all_blocks_cliques());
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(block_decomposition(&g).unwrap_err(), Error::Disconnected);
        assert!(is_block_graph(&g));
        assert!(block_decomposition(&Graph::empty(1)).unwrap().is_empty());
    }

    #[test]
    fn block_graph_recognition() {
        let tree = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(is_block_graph(&tree));
        assert!(!is_block_graph(&make_family(FamilySpec::new(Family::Cycle, 4)).unwrap()));
        assert!(is_block_graph(&paw()));
    }

    #[test]
    fn n3_values() {
        assert_eq!(n3_of_components(&[2, 1, 1]), 2u32.into());
        assert_eq!(n3_of_components(&[5]), 0u32.into());
        assert_eq!(n3_of_components(&[3, 2]), 0u32.into());
        assert_eq!(n3_of_components(&[3, 2, 2]), 12u32.into());
        // 1·2·3 + 1·2·4 + 1·3·4 + 2·3·4
        assert_eq!(n3_of_components(&[1, 2, 3, 4]), 50u32.into());
        assert_eq!(n3_of_components(&[]), 0u32.into());
    }

    #[test]
    fn nm_counts() {
        let k3 = make_family(FamilySpec::new(Family::Complete, 3)).unwrap();
        assert_eq!(nm_block_graph(&k3, &block_decomposition(&k3).unwrap()).unwrap(), 1u32.into());
        let p = paw();
        assert_eq!(nm_block_graph(&p, &block_decomposition(&p).unwrap()).unwrap(), 2u32.into());
        let tree = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(nm_block_graph(&tree, &block_decomposition(&tree).unwrap()).unwrap(), 0u32.into());
        let c4 = make_family(FamilySpec::new(Family::Cycle, 4)).unwrap();
        assert_eq!(
            nm_block_graph(&c4, &block_decomposition(&c4).unwrap()).unwrap_err(),
            Error::NotBlockGraph
        );
    }

    #[test]
    fn sw3_formula_examples() {
        let k3 = make_family(FamilySpec::new(Family::Complete, 3)).unwrap();
        assert_eq!(sw3_block_formula(&k3).unwrap(), 4u32.into());
        assert_eq!(sw3_block_formula(&paw()).unwrap(), 18u32.into());
        let tree = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        // P5: W = 20, SW3 = 3/2 · 20 = 30
        assert_eq!(sw3_block_formula(&tree).unwrap(), 60u32.into());
        assert!(sw3_block_formula(&make_family(FamilySpec::new(Family::Cycle, 5)).unwrap()).is_err());
    }

    #[test]
    fn triangle_witness_in_k3() {
        let k3 = make_family(FamilySpec::new(Family::Complete, 3)).unwrap();
        let d = all_pairs_distances(&k3).unwrap();
        assert_eq!(median_triangles(&k3, &d, 0, 1, 2), vec![[0, 1, 2]]);
    }
}
