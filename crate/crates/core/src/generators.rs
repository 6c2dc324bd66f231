//! Standard graph families.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, DEFAULT_VERTEX_CAP};

/// Upper bound on the dimension parameter of the cube families.
pub const MAX_CUBE_DIMENSION: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Hypercube,
    FibonacciCube,
    LucasCube,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Star,
        Family::Hypercube,
        Family::FibonacciCube,
        Family::LucasCube,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Star => "star",
            Family::Hypercube => "hypercube",
            Family::FibonacciCube => "fibonacci",
            Family::LucasCube => "lucas",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('-', "_");
        let fam = match norm.as_str() {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "complete_bipartite" | "bipartite" => Family::CompleteBipartite,
            "star" => Family::Star,
            "hypercube" | "cube" => Family::Hypercube,
            "fibonacci" | "fibonacci_cube" => Family::FibonacciCube,
            "lucas" | "lucas_cube" => Family::LucasCube,
            _ => return Err(Error::range(format!("unknown family {s:?}"))),
        };
        Ok(fam)
    }
}

/// A family plus its parameters. `m` is only used by `complete_bipartite`.
///
/// Vertex counts: `path(n)`, `cycle(n)`, `complete(n)` and `star(n)` have `n`
/// vertices; `complete_bipartite(n, m)` has `n + m`; the cube families take the
/// string length `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub m: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec { family, n, m: 0 }
    }

    pub fn bipartite(n: usize, m: usize) -> Self {
        FamilySpec {
            family: Family::CompleteBipartite,
            n,
            m,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::range(format!("{}: {msg}", self.family)));
        match self.family {
            Family::Path | Family::Complete | Family::Star if self.n == 0 => {
                bad("needs at least one vertex")
            }
            Family::Cycle if self.n < 3 => bad("needs at least three vertices"),
            Family::CompleteBipartite if self.n == 0 || self.m == 0 => {
                bad("both sides must be nonempty")
            }
            Family::Hypercube | Family::FibonacciCube | Family::LucasCube
                if self.n > MAX_CUBE_DIMENSION =>
            {
                bad(&format!("dimension {} exceeds {MAX_CUBE_DIMENSION}", self.n))
            }
            _ => Ok(()),
        }
    }
}

/// Builds the graph described by `spec`.
///
/// Cube vertices are the admissible binary strings ordered by integer value;
/// bit `n-1-i` of the id holds the string's `i`-th character.
pub fn make_family(spec: FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.n;
    match spec.family {
        Family::Path => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
        Family::Cycle => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))),
        Family::Complete => {
            check_cap(n)?;
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::Star => Graph::from_edges(n, (1..n).map(|i| (0, i))),
        Family::CompleteBipartite => {
            let (a, b) = (spec.n, spec.m);
            check_cap(a + b)?;
            Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        Family::Hypercube | Family::FibonacciCube | Family::LucasCube => {
            cube(n, &cube_strings(spec.family, n)?)
        }
    }
}

fn check_cap(n: usize) -> Result<()> {
    if n > DEFAULT_VERTEX_CAP {
        Err(Error::range(format!("{n} vertices exceeds cap {DEFAULT_VERTEX_CAP}")))
    } else {
        Ok(())
    }
}

fn admissible(family: Family, dim: usize, s: u64) -> bool {
    let fib = s & (s >> 1) == 0;
    match family {
        Family::Hypercube => true,
        Family::FibonacciCube => fib,
        Family::LucasCube => fib && !(dim >= 1 && s & 1 == 1 && s >> (dim - 1) & 1 == 1),
        _ => false,
    }
}

/// Admissible strings of a cube family, ascending. Dimension 0 gives `[0]` (K1).
fn cube_strings(family: Family, dim: usize) -> Result<Vec<u64>> {
    if !matches!(
        family,
        Family::Hypercube | Family::FibonacciCube | Family::LucasCube
    ) {
        return Err(Error::range(format!("{family} is not a cube family")));
    }
    if dim > MAX_CUBE_DIMENSION {
        return Err(Error::range(format!("dimension {dim} exceeds {MAX_CUBE_DIMENSION}")));
    }
    let mut out = Vec::new();
    for s in 0..1u64 << dim {
        if admissible(family, dim, s) {
            out.push(s);
            check_cap(out.len())?;
        }
    }
    Ok(out)
}

/// Subgraph of the `dim`-cube induced by `strings` (sorted).
fn cube(dim: usize, strings: &[u64]) -> Result<Graph> {
    let mut edges = Vec::new();
    for (i, &s) in strings.iter().enumerate() {
        for bit in 0..dim {
            let t = s | 1 << bit;
            if t != s {
                if let Ok(j) = strings.binary_search(&t) {
                    edges.push((i, j));
                }
            }
        }
    }
    Graph::from_edges(strings.len(), edges)
}

/// Binary labels of a cube family's vertices, in vertex-id order.
pub fn cube_labels(family: Family, dim: usize) -> Result<Vec<String>> {
    Ok(cube_strings(family, dim)?
        .into_iter()
        .map(|s| format!("{:0width$b}", s, width = dim))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(f: Family, n: usize) -> Graph {
        make_family(FamilySpec::new(f, n)).unwrap()
    }

    #[test]
    fn fibonacci_cube_sizes() {
        let sizes: Vec<usize> = (0..=6).map(|n| fam(Family::FibonacciCube, n).n()).collect();
        assert_eq!(sizes, vec![1, 2, 3, 5, 8, 13, 21]);
    }

    #[test]
    fn lucas_cube_sizes() {
        let sizes: Vec<usize> = (0..=6).map(|n| fam(Family::LucasCube, n).n()).collect();
        assert_eq!(sizes, vec![1, 1, 3, 4, 7, 11, 18]);
    }

    #[test]
    fn lucas_3_is_star() {
        let g = fam(Family::LucasCube, 3);
        let mut degs: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 1, 3]);
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn fibonacci_3_is_banner() {
        // 000 001 010 100 101: the 4-cycle 000-001-101-100 with pendant 010.
        let g = fam(Family::FibonacciCube, 3);
        assert_eq!((g.n(), g.m()), (5, 5));
        let mut degs: Vec<usize> = (0..5).map(|v| g.degree(v)).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 2, 2, 2, 3]);
        assert_eq!(
            cube_labels(Family::FibonacciCube, 3).unwrap(),
            vec!["000", "001", "010", "100", "101"]
        );
    }

    #[test]
    fn lucas_4_two_squares() {
        let g = fam(Family::LucasCube, 4);
        assert_eq!((g.n(), g.m()), (7, 8));
    }

    #[test]
    fn small_families() {
        assert_eq!(fam(Family::Hypercube, 3).m(), 12);
        assert_eq!(fam(Family::Cycle, 5).m(), 5);
        assert_eq!(fam(Family::Complete, 5).m(), 10);
        assert_eq!(fam(Family::Star, 4).m(), 3);
        assert_eq!(make_family(FamilySpec::bipartite(2, 3)).unwrap().m(), 6);
        assert_eq!(fam(Family::Path, 1).n(), 1);
        assert_eq!(fam(Family::Hypercube, 0).n(), 1);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(make_family(FamilySpec::new(Family::Cycle, 2)).is_err());
        assert!(make_family(FamilySpec::new(Family::Hypercube, 31)).is_err());
        // 2^21 vertices is over the vertex cap.
        assert!(make_family(FamilySpec::new(Family::Hypercube, 21)).is_err());
        assert!(make_family(FamilySpec::bipartite(0, 3)).is_err());
        assert!("octahedron".parse::<Family>().is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
    }
}
