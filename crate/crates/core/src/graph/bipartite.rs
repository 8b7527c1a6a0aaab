use super::{Edge, GraphError, OrientedGraph};

/// Undirected bipartite graph between a left side `0..left` and a right side
/// `0..right`, in side-local coordinates.
///
/// When carved from an oriented graph, `left_labels` / `right_labels` map back to
/// the parent and every edge `(a, b)` stands for the directed edge
/// `left_labels[a] -> right_labels[b]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    adj: Vec<Vec<usize>>,
    radj: Vec<Vec<usize>>,
    edge_count: usize,
    pub left_labels: Vec<usize>,
    pub right_labels: Vec<usize>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); left];
        for (a, b) in edges {
            if a >= left {
                return Err(GraphError::VertexOutOfRange { vertex: a, n: left });
            }
            if b >= right {
                return Err(GraphError::VertexOutOfRange { vertex: b, n: right });
            }
            adj[a].push(b);
        }
        for (a, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(a, w[0]));
            }
        }
        Ok(Self::from_adjacency(adj, right, (0..left).collect(), (0..right).collect()))
    }

    /// Balanced constructor, `m` vertices per side.
    pub fn balanced(m: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        Self::new(m, m, edges)
    }

    pub fn complete(m: usize) -> Self {
        let adj = (0..m).map(|_| (0..m).collect()).collect();
        Self::from_adjacency(adj, m, (0..m).collect(), (0..m).collect())
    }

    fn from_adjacency(adj: Vec<Vec<usize>>, right: usize, left_labels: Vec<usize>, right_labels: Vec<usize>) -> Self {
        let mut radj = vec![Vec::new(); right];
        let mut edge_count = 0;
        for (a, list) in adj.iter().enumerate() {
            for &b in list {
                radj[b].push(a);
                edge_count += 1;
            }
        }
        BipartiteGraph { adj, radj, edge_count, left_labels, right_labels }
    }

    /// Same labels, different edge set (edges must be in range and distinct).
    pub(crate) fn with_edges(&self, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut adj = vec![Vec::new(); self.left()];
        for (a, b) in edges {
            adj[a].push(b);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Self::from_adjacency(adj, self.right(), self.left_labels.clone(), self.right_labels.clone())
    }

    pub fn left(&self) -> usize {
        self.adj.len()
    }

    pub fn right(&self) -> usize {
        self.radj.len()
    }

    pub fn is_balanced(&self) -> bool {
        self.left() == self.right()
    }

    /// Side size of a balanced graph.
    pub fn m(&self) -> usize {
        debug_assert!(self.is_balanced());
        self.left()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors_of_left(&self, a: usize) -> &[usize] {
        &self.adj[a]
    }

    pub fn neighbors_of_right(&self, b: usize) -> &[usize] {
        &self.radj[b]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.left() && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().map(move |&b| (a, b)))
    }

    /// Degrees over both sides: `(min, max)`; `(0, 0)` for an empty side set.
    pub fn degree_range(&self) -> (usize, usize) {
        let degs = self.adj.iter().chain(self.radj.iter()).map(Vec::len);
        (degs.clone().min().unwrap_or(0), degs.max().unwrap_or(0))
    }

    pub fn min_degree(&self) -> usize {
        self.degree_range().0
    }

    pub fn max_degree(&self) -> usize {
        self.degree_range().1
    }

    pub fn left_degree(&self, a: usize) -> usize {
        self.adj[a].len()
    }

    pub fn right_degree(&self, b: usize) -> usize {
        self.radj[b].len()
    }

    /// `Some(d)` when every vertex on both sides has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let (lo, hi) = self.degree_range();
        (lo == hi).then_some(lo)
    }

    /// Bipartite complement on the same sides.
    pub fn complement(&self) -> Self {
        let right = self.right();
        let edges = (0..self.left())
            .flat_map(|a| (0..right).filter(move |&b| !self.has_edge(a, b)).map(move |b| (a, b)))
            .collect::<Vec<_>>();
        self.with_edges(edges)
    }

    /// Edges lifted to parent labels, oriented left -> right.
    pub fn directed_edges(&self) -> Vec<Edge> {
        self.edges()
            .map(|(a, b)| (self.left_labels[a], self.right_labels[b]))
            .collect()
    }
}

/// The edges of `g` directed from `x` to `y`, viewed as a bipartite graph with
/// `x` on the left and `y` on the right. Requires disjoint, equal-sized sides.
pub fn bipartite_between(g: &OrientedGraph, x: &[usize], y: &[usize]) -> Result<BipartiteGraph, GraphError> {
    if x.len() != y.len() {
        return Err(GraphError::UnequalSides { left: x.len(), right: y.len() });
    }
    bipartite_between_unbalanced(g, x, y)
}

/// As [`bipartite_between`] but allows sides of different sizes.
pub fn bipartite_between_unbalanced(
    g: &OrientedGraph,
    x: &[usize],
    y: &[usize],
) -> Result<BipartiteGraph, GraphError> {
    let n = g.n();
    let mut right_pos = vec![usize::MAX; n];
    for (j, &v) in y.iter().enumerate() {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n });
        }
        right_pos[v] = j;
    }
    let mut adj = Vec::with_capacity(x.len());
    for &u in x {
        if u >= n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n });
        }
        if right_pos[u] != usize::MAX {
            return Err(GraphError::OverlappingSides(u));
        }
        let mut list: Vec<usize> = g
            .out_neighbors(u)
            .iter()
            .filter_map(|&v| (right_pos[v] != usize::MAX).then_some(right_pos[v]))
            .collect();
        list.sort_unstable();
        adj.push(list);
    }
    Ok(BipartiteGraph::from_adjacency(adj, y.len(), x.to_vec(), y.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::rotational_tournament;

    #[test]
    fn between_recovers_generator_edges() {
        let g = rotational_tournament(5).unwrap();
        let b = bipartite_between(&g, &[0, 1], &[2, 3]).unwrap();
        let mut d = b.directed_edges();
        d.sort();
        assert_eq!(d, vec![(0, 2), (1, 2), (1, 3)]);
    }

    #[test]
    fn between_with_no_forward_edges_is_empty() {
        // 0 -> 2 is a generator edge, so 2 -> 0 is absent.
        let g = rotational_tournament(5).unwrap();
        let b = bipartite_between(&g, &[2], &[0]).unwrap();
        assert_eq!(b.edge_count(), 0);
    }

    #[test]
    fn between_rejects_bad_sides() {
        let g = rotational_tournament(5).unwrap();
        assert!(matches!(bipartite_between(&g, &[0, 1], &[1, 2]), Err(GraphError::OverlappingSides(1))));
        assert!(matches!(
            bipartite_between(&g, &[0, 1], &[2]),
            Err(GraphError::UnequalSides { left: 2, right: 1 })
        ));
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k = BipartiteGraph::complete(3);
        assert_eq!(k.regular_degree(), Some(3));
        assert_eq!(k.complement().edge_count(), 0);
        assert_eq!(k.complement().complement(), k);
    }

    #[test]
    fn constructor_validates() {
        assert!(matches!(BipartiteGraph::new(2, 2, [(0, 2)]), Err(GraphError::VertexOutOfRange { .. })));
        assert!(matches!(BipartiteGraph::new(2, 2, [(0, 1), (0, 1)]), Err(GraphError::DuplicateEdge(0, 1))));
    }
}
