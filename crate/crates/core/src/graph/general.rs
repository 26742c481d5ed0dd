use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Rational, Result};

/// A simple undirected graph on nodes `0..n_nodes`.
///
/// Edges are stored as `(min, max)` pairs in insertion order; that order is
/// what [`crate::graph::edge_vertex_incidence`] uses to number check nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralGraph {
    n_nodes: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl GeneralGraph {
    /// Builds a graph, rejecting self-loops, parallel edges and bad indices.
    pub fn new<I>(n_nodes: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = GeneralGraph { n_nodes, edges: Vec::new(), adj: vec![Vec::new(); n_nodes] };
        for (u, v) in edges {
            g.insert(u, v)?;
        }
        Ok(g)
    }

    /// Like [`GeneralGraph::new`] but silently drops repeated edges; returns
    /// the graph and the number of dropped duplicates.
    pub fn new_collapsing<I>(n_nodes: usize, edges: I) -> Result<(Self, usize)>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = GeneralGraph { n_nodes, edges: Vec::new(), adj: vec![Vec::new(); n_nodes] };
        let mut dropped = 0;
        for (u, v) in edges {
            match g.insert(u, v) {
                Ok(()) => {}
                Err(Error::DuplicateEdge(..)) => dropped += 1,
                Err(e) => return Err(e),
            }
        }
        Ok((g, dropped))
    }

    fn insert(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n_nodes {
                return Err(Error::IndexOutOfRange { index: x, len: self.n_nodes });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adj[u].contains(&v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.edges.push((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// `2|E| / |U|` as an exact rational; `None` for the empty graph.
    pub fn average_degree(&self) -> Option<Rational> {
        if self.n_nodes == 0 {
            return None;
        }
        Some(Rational::new(2 * self.edges.len() as i128, self.n_nodes as i128))
    }

    /// The common degree if every node has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    /// Edge list sorted lexicographically; two labelled graphs are equal iff
    /// their node counts and sorted edge lists are.
    pub fn sorted_edges(&self) -> Vec<(usize, usize)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    /// Shortest cycle length, `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        super::girth::girth_of(&self.adj)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain("a cycle needs at least 3 nodes"));
        }
        GeneralGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        GeneralGraph::new(n, edges).expect("complete graph is simple")
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        GeneralGraph::new(a + b, edges).expect("complete bipartite graph is simple")
    }

    /// Hamiltonian graph from LCF notation `[jumps]^repeat`.
    pub fn from_lcf(jumps: &[isize], repeat: usize) -> Result<Self> {
        let n = jumps.len() * repeat;
        if n < 3 {
            return Err(Error::Domain("LCF graph needs at least 3 nodes"));
        }
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        for i in 0..n {
            let j = (i as isize + jumps[i % jumps.len()]).rem_euclid(n as isize) as usize;
            if i < j {
                edges.push((i, j));
            }
        }
        GeneralGraph::new(n, edges)
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        GeneralGraph::new(10, outer.chain(spokes).chain(inner)).expect("Petersen graph is simple")
    }

    /// The Heawood graph, LCF `[5, -5]^7`.
    pub fn heawood() -> Self {
        GeneralGraph::from_lcf(&[5, -5], 7).expect("Heawood graph is simple")
    }

    /// The Tutte–Coxeter graph, LCF `[-13, -9, 7, -7, 9, 13]^5`.
    pub fn tutte_coxeter() -> Self {
        GeneralGraph::from_lcf(&[-13, -9, 7, -7, 9, 13], 5).expect("Tutte-Coxeter graph is simple")
    }

    /// The Hoffman–Singleton graph from five pentagons and five pentagrams:
    /// vertex `j` of pentagon `h` joins vertex `h·i + j (mod 5)` of pentagram `i`.
    pub fn hoffman_singleton() -> Self {
        let p = |h: usize, j: usize| 5 * h + j;
        let q = |i: usize, j: usize| 25 + 5 * i + j;
        let mut edges = Vec::new();
        for h in 0..5 {
            for j in 0..5 {
                edges.push((p(h, j), p(h, (j + 1) % 5)));
                edges.push((q(h, j), q(h, (j + 2) % 5)));
            }
        }
        for h in 0..5 {
            for j in 0..5 {
                for i in 0..5 {
                    edges.push((p(h, j), q(i, (h * i + j) % 5)));
                }
            }
        }
        GeneralGraph::new(50, edges).expect("Hoffman-Singleton graph is simple")
    }

    /// Point-line incidence graph of the projective plane PG(2, q), q prime.
    /// Points are `0..N`, lines `N..2N` with `N = q² + q + 1`.
    pub fn projective_plane_incidence(q: usize) -> Result<Self> {
        if q < 2 || !(2..q).take_while(|d| d * d <= q).all(|d| q % d != 0) {
            return Err(Error::Domain("projective plane order must be prime"));
        }
        // Normalised representatives: first non-zero coordinate equals 1.
        let mut reps: Vec<[usize; 3]> = Vec::new();
        for a in 0..q {
            for b in 0..q {
                reps.push([1, a, b]);
            }
        }
        for b in 0..q {
            reps.push([0, 1, b]);
        }
        reps.push([0, 0, 1]);
        let n = reps.len();
        let mut edges = Vec::new();
        for (i, p) in reps.iter().enumerate() {
            for (j, l) in reps.iter().enumerate() {
                if (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0 {
                    edges.push((i, n + j));
                }
            }
        }
        GeneralGraph::new(2 * n, edges)
    }
}
