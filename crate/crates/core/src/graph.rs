//! Plain simple graphs, for chromatic and subgraph computations.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a simple graph; loops and repeated pairs are dropped.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut list: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            assert!(v < n, "edge {u}-{v} out of range");
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { adj, edges: list }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Join: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Self {
        let n = self.vertex_count();
        let m = other.vertex_count();
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + n, v + n)))
            .chain((0..n).flat_map(|u| (0..m).map(move |v| (u, v + n))));
        Self::from_edges(n + m, edges)
    }

    /// Vertices `i` and `j` adjacent when their cyclic distance is at most `k`.
    pub fn cycle_power(n: usize, k: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|i| (1..=k).map(move |d| (i, (i + d) % n))))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let key = (u.min(v), u.max(v));
        Self::from_edges(self.vertex_count(), self.edges.iter().copied().filter(|&e| e != key))
    }

    /// Induced subgraph on `keep`, relabeled in the given order.
    pub fn induced(&self, keep: &[usize]) -> Self {
        let mut id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| id[u] != usize::MAX && id[v] != usize::MAX)
            .map(|&(u, v)| (id[u], id[v]));
        Self::from_edges(keep.len(), edges)
    }
}
