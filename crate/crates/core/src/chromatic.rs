//! Exact k-colourability, chromatic numbers and edge criticality for
//! desk-scale graphs. The solver is plain backtracking with
//! saturation-first vertex selection and colour symmetry breaking seeded by
//! a greedily found clique; no external solver is involved, so every answer
//! is an exhaustive proof.

use serde::Serialize;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<std::collections::BTreeSet<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Default::default(); n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Self {
        Graph::from_edges(n, (0..n).map(|u| (u, (u + 1) % n)))
    }

    /// Adds an undirected edge; loops are rejected, parallel edges collapse.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter().copied()
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u].remove(&v);
        g.adj[v].remove(&u);
        g
    }

    /// Strips every edge at `v`, keeping the vertex (isolated vertices do
    /// not affect k-colourability for k >= 1).
    pub fn without_vertex_edges(&self, v: usize) -> Graph {
        let mut g = self.clone();
        for u in self.adj[v].iter() {
            g.adj[*u].remove(&v);
        }
        g.adj[v].clear();
        g
    }

    /// The graph with vertex `i` renamed to `perm[i]`.
    pub fn relabelled(&self, perm: &[usize]) -> Graph {
        Graph::from_edges(
            self.n,
            self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])),
        )
    }
}

/// A proper colouring; `colours[v]` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Colouring {
    pub colours: Vec<usize>,
}

impl Colouring {
    pub fn colour_count(&self) -> usize {
        self.colours.iter().copied().max().unwrap_or(0)
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colours.len() == g.vertex_count()
            && g.edges()
                .iter()
                .all(|&(u, v)| self.colours[u] != self.colours[v])
    }
}

/// Greedy clique used to seed symmetry breaking: repeatedly add the
/// highest-degree vertex adjacent to all current members.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut clique: Vec<usize> = Vec::new();
    for &v in &order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique
}

/// Exhaustive backtracking search for a proper k-colouring. Vertices are
/// chosen saturation-first (most distinct neighbouring colours, then
/// highest degree, then lowest index); a branch may introduce at most one
/// colour index beyond those already used, and a greedy clique is
/// pre-coloured, which breaks colour permutation symmetry without losing
/// completeness. Returns a verified colouring or an exhaustive `None`.
pub fn is_k_colourable(g: &Graph, k: usize) -> Option<Colouring> {
    assert!(k >= 1, "k must be at least 1");
    let n = g.vertex_count();
    if n == 0 {
        return Some(Colouring { colours: vec![] });
    }
    if k >= n {
        let colouring = Colouring {
            colours: (1..=n).collect(),
        };
        debug_assert!(colouring.is_proper(g));
        return Some(colouring);
    }
    // Colour masks live in a u64; graphs beyond ~60 vertices are out of
    // scope for the exact solver.
    assert!(k < 64, "colour count beyond the supported range");
    let clique = greedy_clique(g);
    if clique.len() > k {
        return None;
    }

    struct Search<'g> {
        g: &'g Graph,
        colours: Vec<usize>, // 0 = unassigned
        neighbour_mask: Vec<u64>,
        k: usize,
        max_used: usize,
        assigned: usize,
    }

    impl Search<'_> {
        fn assign(&mut self, v: usize, c: usize) {
            self.colours[v] = c;
            self.assigned += 1;
            for u in self.g.neighbours(v) {
                self.neighbour_mask[u] |= 1 << c;
            }
        }

        fn unassign(&mut self, v: usize, c: usize) {
            self.colours[v] = 0;
            self.assigned -= 1;
            for u in self.g.neighbours(v) {
                if self.g.neighbours(u).all(|w| w == v || self.colours[w] != c) {
                    self.neighbour_mask[u] &= !(1 << c);
                }
            }
        }

        fn pick(&self) -> usize {
            (0..self.g.vertex_count())
                .filter(|&v| self.colours[v] == 0)
                .max_by_key(|&v| {
                    (
                        self.neighbour_mask[v].count_ones(),
                        self.g.degree(v),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("an unassigned vertex exists")
        }

        fn run(&mut self) -> bool {
            if self.assigned == self.g.vertex_count() {
                return true;
            }
            let v = self.pick();
            let limit = self.k.min(self.max_used + 1);
            for c in 1..=limit {
                if self.neighbour_mask[v] >> c & 1 == 1 {
                    continue;
                }
                let prev_max = self.max_used;
                self.max_used = self.max_used.max(c);
                self.assign(v, c);
                if self.run() {
                    return true;
                }
                self.unassign(v, c);
                self.max_used = prev_max;
            }
            false
        }
    }

    let mut search = Search {
        g,
        colours: vec![0; n],
        neighbour_mask: vec![0; n],
        k,
        max_used: 0,
        assigned: 0,
    };
    for (i, &v) in clique.iter().enumerate() {
        search.max_used = i + 1;
        search.assign(v, i + 1);
    }
    if search.run() {
        let colouring = Colouring {
            colours: search.colours,
        };
        debug_assert!(colouring.is_proper(g));
        Some(colouring)
    } else {
        None
    }
}

/// Exact chromatic number by incrementing k from the clique lower bound.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.vertex_count() == 0 {
        return 0;
    }
    let mut k = greedy_clique(g).len().max(1);
    loop {
        if is_k_colourable(g, k).is_some() {
            return k;
        }
        k += 1;
    }
}

/// Outcome of the edge-criticality scan.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CriticalityReport {
    pub k: usize,
    pub is_chromatic_k: bool,
    /// Edges whose deletion leaves the graph k-chromatic.
    pub non_critical_edges: Vec<(usize, usize)>,
    pub critical: bool,
}

/// Recomputes the chromatic number (erroring if it differs from `k`), then
/// decides `chi(G - e) <= k - 1` for every edge by exhaustive search.
pub fn criticality_report(g: &Graph, k: usize) -> Result<CriticalityReport> {
    let actual = chromatic_number(g);
    if actual != k {
        return Err(Error::ChiMismatch {
            expected: k,
            actual,
        });
    }
    let mut non_critical = Vec::new();
    for (u, v) in g.edges() {
        if is_k_colourable(&g.without_edge(u, v), k - 1).is_none() {
            non_critical.push((u, v));
        }
    }
    Ok(CriticalityReport {
        k,
        is_chromatic_k: true,
        critical: non_critical.is_empty(),
        non_critical_edges: non_critical,
    })
}

/// Certificate of two-colourability or its obstruction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Parity {
    /// Vertices of an odd cycle, in order.
    OddCycle(Vec<usize>),
    /// A two-sided partition; `sides[v]` is 0 or 1.
    Bipartition(Vec<u8>),
}

/// BFS two-colouring: returns a bipartition, or an explicit odd cycle when
/// some edge closes one.
pub fn odd_cycle_or_bipartition(g: &Graph) -> Parity {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbours(u) {
                if side[v] == u8::MAX {
                    side[v] = 1 - side[u];
                    parent[v] = u;
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return Parity::OddCycle(close_cycle(u, v, &parent));
                }
            }
        }
    }
    Parity::Bipartition(side)
}

/// Joins the BFS-tree paths from `u` and `v` to their lowest common
/// ancestor into the cycle closed by the edge `uv`.
fn close_cycle(u: usize, v: usize, parent: &[usize]) -> Vec<usize> {
    let path_to_root = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let pu = path_to_root(u);
    let pv = path_to_root(v);
    let mut i = pu.len();
    let mut j = pv.len();
    while i > 0 && j > 0 && pu[i - 1] == pv[j - 1] {
        i -= 1;
        j -= 1;
    }
    // pu[..=i] runs u -> lca, pv[..j] runs v -> just below lca.
    let mut cycle: Vec<usize> = pu[..=i].to_vec();
    cycle.extend(pv[..j].iter().rev());
    cycle
}
