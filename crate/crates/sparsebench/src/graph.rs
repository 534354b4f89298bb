//! Simple undirected graphs with dense vertex indices, degeneracy orderings,
//! bounded-radius BFS, and the edge-list interchange format.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Immutable simple undirected graph. Neighbor lists are sorted, adjacency is
/// symmetric, and there are no loops or parallel edges.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
            labels: None,
        }
    }

    /// Builds a graph from an edge list over vertices `0..n`. Duplicate edges
    /// collapse silently; self-loops and out-of-range endpoints panic.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({u},{v}) out of range for n={n}");
            assert_ne!(u, v, "self-loop at {u}");
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edge_count = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Graph {
            adj,
            edge_count: edge_count / 2,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Each edge once, with u < v.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// External name of a vertex; falls back to its index.
    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn has_labels(&self) -> bool {
        self.labels.is_some()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    // Small builders used by tests, fixtures and the pattern table.

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Star with `leaves` leaves; vertex 0 is the center.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, &(1..=leaves).map(|i| (0, i)).collect::<Vec<_>>())
    }

    pub fn grid(rows: usize, cols: usize) -> Graph {
        let idx = |r: usize, c: usize| r * cols + c;
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if c + 1 < cols {
                    edges.push((idx(r, c), idx(r, c + 1)));
                }
                if r + 1 < rows {
                    edges.push((idx(r, c), idx(r + 1, c)));
                }
            }
        }
        Graph::from_edges(rows * cols, &edges)
    }

    /// Induced subgraph on `verts` (deduplicated, order-insensitive).
    /// Returns the subgraph plus the original id of each new vertex. Labels
    /// carry over.
    pub fn induced_subgraph(&self, verts: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut old_ids: Vec<Vertex> = verts.to_vec();
        old_ids.sort_unstable();
        old_ids.dedup();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let mut edges = Vec::new();
        for &v in &old_ids {
            for &w in self.neighbors(v) {
                if v < w && new_id[w] != usize::MAX {
                    edges.push((new_id[v], new_id[w]));
                }
            }
        }
        let mut sub = Graph::from_edges(old_ids.len(), &edges);
        if self.labels.is_some() {
            sub = sub.with_labels(old_ids.iter().map(|&v| self.label(v)).collect());
        }
        (sub, old_ids)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Largest connected component (ties broken by smallest member), as an
    /// induced subgraph plus the original vertex ids.
    pub fn giant_component(&self) -> (Graph, Vec<Vertex>) {
        let comps = self.connected_components();
        let giant = comps
            .iter()
            .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
            .cloned()
            .unwrap_or_default();
        self.induced_subgraph(&giant)
    }

    /// Exact diameter via all-sources BFS; `None` for a disconnected or empty
    /// graph.
    pub fn diameter(&self) -> Option<usize> {
        if self.n() == 0 || self.connected_components().len() != 1 {
            return None;
        }
        let ecc = crate::par::map_range(self.n(), |s| {
            let dm = bfs_within(self, s, u32::MAX).expect("source in range");
            dm.iter().map(|(_, d)| d).max().unwrap_or(0)
        });
        Some(ecc.into_iter().max().unwrap_or(0) as usize)
    }

    /// Writes the graph in the edge-list interchange format.
    pub fn to_edge_list<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for (u, v) in self.edges() {
            writeln!(out, "{} {}", self.label(u), self.label(v))?;
        }
        Ok(())
    }
}

/// Result of [`parse_edge_list`]: the graph plus ingestion tallies.
#[derive(Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub self_loops_dropped: usize,
    pub duplicate_edges_collapsed: usize,
}

/// Parses the edge-list interchange format: one `u v` pair per line,
/// whitespace-separated, `#` starts a comment line, blank lines are skipped.
/// Tokens map to dense indices in first-appearance order; duplicate edges
/// collapse and self-loops are dropped (tallied, not errors).
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<ParsedGraph> {
    let mut index: HashMap<String, Vertex> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut self_loops = 0usize;

    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: lineno + 1,
                message: format!("expected 2 vertex tokens, found {}", tokens.len()),
            });
        }
        let mut id = |tok: &str| -> Vertex {
            if let Some(&i) = index.get(tok) {
                return i;
            }
            let i = labels.len();
            index.insert(tok.to_string(), i);
            labels.push(tok.to_string());
            i
        };
        let (u, v) = (id(tokens[0]), id(tokens[1]));
        if u == v {
            self_loops += 1;
        } else {
            edges.push((u, v));
        }
    }

    let graph = Graph::from_edges(labels.len(), &edges).with_labels(labels);
    let duplicates = edges.len() - graph.edge_count();
    Ok(ParsedGraph {
        graph,
        self_loops_dropped: self_loops,
        duplicate_edges_collapsed: duplicates,
    })
}

/// Removal order produced by repeatedly deleting a minimum-degree vertex.
#[derive(Clone, Debug)]
pub struct DegeneracyOrder {
    /// Permutation of the vertices in removal order.
    pub order: Vec<Vertex>,
    /// Maximum degree seen at removal time.
    pub degeneracy: usize,
    position: Vec<usize>,
}

impl DegeneracyOrder {
    /// Index of `v` in the removal order.
    pub fn position(&self, v: Vertex) -> usize {
        self.position[v]
    }
}

/// Computes a degeneracy order. Ties among minimum-degree vertices go to the
/// smallest index, which keeps downstream orientations and colorings
/// deterministic.
pub fn degeneracy_order(g: &Graph) -> DegeneracyOrder {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut heap: BinaryHeap<Reverse<(usize, Vertex)>> =
        (0..n).map(|v| Reverse((deg[v], v))).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;

    while let Some(Reverse((d, v))) = heap.pop() {
        if removed[v] || d != deg[v] {
            continue; // stale heap entry
        }
        removed[v] = true;
        degeneracy = degeneracy.max(d);
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                heap.push(Reverse((deg[w], w)));
            }
        }
    }

    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    DegeneracyOrder {
        order,
        degeneracy,
        position,
    }
}

/// Exact distances from `source` out to `radius`, omitting anything farther.
#[derive(Clone, Debug)]
pub struct DistanceMap {
    pub source: Vertex,
    pub radius: u32,
    dist: HashMap<Vertex, u32>,
}

impl DistanceMap {
    pub fn get(&self, v: Vertex) -> Option<u32> {
        self.dist.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, u32)> + '_ {
        self.dist.iter().map(|(&v, &d)| (v, d))
    }
}

/// BFS truncated at `radius`.
pub fn bfs_within(g: &Graph, source: Vertex, radius: u32) -> Result<DistanceMap> {
    if source >= g.n() {
        return Err(Error::Argument(format!(
            "bfs source {source} out of range for n={}",
            g.n()
        )));
    }
    let mut dist = HashMap::new();
    dist.insert(source, 0u32);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        if d == radius {
            continue;
        }
        for &w in g.neighbors(v) {
            dist.entry(w).or_insert_with(|| {
                queue.push_back(w);
                d + 1
            });
        }
    }
    Ok(DistanceMap {
        source,
        radius,
        dist,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic() {
        let parsed = parse_edge_list("a b\nb c".as_bytes()).unwrap();
        assert_eq!(parsed.graph.n(), 3);
        assert_eq!(parsed.graph.edge_count(), 2);
        assert_eq!(parsed.self_loops_dropped, 0);
        assert_eq!(parsed.graph.label(0), "a");
    }

    #[test]
    fn parse_duplicates_and_comments() {
        let parsed = parse_edge_list("a b\na b\n# x".as_bytes()).unwrap();
        assert_eq!(parsed.graph.n(), 2);
        assert_eq!(parsed.graph.edge_count(), 1);
        assert_eq!(parsed.duplicate_edges_collapsed, 1);
    }

    #[test]
    fn parse_self_loop() {
        let parsed = parse_edge_list("a a".as_bytes()).unwrap();
        assert_eq!(parsed.graph.n(), 1);
        assert_eq!(parsed.graph.edge_count(), 0);
        assert_eq!(parsed.self_loops_dropped, 1);
    }

    #[test]
    fn parse_malformed_line_reports_number() {
        let err = parse_edge_list("a b\nc d e".as_bytes()).unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]);
        let total: usize = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy_order(&Graph::complete(4)).degeneracy, 3);
        assert_eq!(degeneracy_order(&Graph::star(5)).degeneracy, 1);
        assert_eq!(degeneracy_order(&Graph::cycle(5)).degeneracy, 2);
    }

    #[test]
    fn degeneracy_order_invariant_holds() {
        // Every vertex has at most `degeneracy` neighbors later in the order.
        for g in [
            Graph::complete(6),
            Graph::cycle(9),
            Graph::star(7),
            Graph::grid(4, 5),
            Graph::path(10),
        ] {
            let ord = degeneracy_order(&g);
            for v in g.vertices() {
                let later = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| ord.position(w) > ord.position(v))
                    .count();
                assert!(later <= ord.degeneracy);
            }
        }
    }

    #[test]
    fn bfs_path_example() {
        // P5 with vertices 0..4, source = middle.
        let g = Graph::path(5);
        let dm = bfs_within(&g, 2, 2).unwrap();
        let got: Vec<_> = {
            let mut v: Vec<_> = dm.iter().collect();
            v.sort();
            v
        };
        assert_eq!(got, vec![(0, 2), (1, 1), (2, 0), (3, 1), (4, 2)]);
    }

    #[test]
    fn bfs_radius_zero_and_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        let dm = bfs_within(&g, 0, 0).unwrap();
        assert_eq!(dm.len(), 1);
        assert_eq!(dm.get(0), Some(0));

        let dm = bfs_within(&g, 0, 9).unwrap();
        assert_eq!(dm.len(), 2);
        assert_eq!(dm.get(2), None);

        assert!(bfs_within(&g, 9, 1).is_err());
    }

    #[test]
    fn components_and_giant() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4)]);
        let comps = g.connected_components();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
        let (giant, ids) = g.giant_component();
        assert_eq!(giant.n(), 3);
        assert_eq!(ids, vec![0, 1, 2]);
    }

    #[test]
    fn diameter_cases() {
        assert_eq!(Graph::path(6).diameter(), Some(5));
        assert_eq!(Graph::complete(4).diameter(), Some(1));
        assert_eq!(Graph::from_edges(3, &[(0, 1)]).diameter(), None);
    }

    /// Floyd–Warshall oracle used to validate truncated BFS.
    fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
        const INF: u32 = u32::MAX / 4;
        let n = g.n();
        let mut d = vec![vec![INF; n]; n];
        for v in 0..n {
            d[v][v] = 0;
            for &w in g.neighbors(v) {
                d[v][w] = 1;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                }
            }
        }
        d
    }

    #[test]
    fn bfs_matches_floyd_warshall_on_random_graphs() {
        use rand::Rng;
        let mut rng = crate::rng::stream_rng(13, 99);
        const INF: u32 = u32::MAX / 4;
        for trial in 0..40 {
            let n = 2 + (trial % 7) * 7;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random::<f64>() < 2.5 / n as f64 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges);
            let fw = floyd_warshall(&g);
            for s in 0..n {
                for radius in [0u32, 1, 3, u32::MAX] {
                    let dm = bfs_within(&g, s, radius).unwrap();
                    for v in 0..n {
                        let expected = if fw[s][v] <= radius.min(INF) {
                            Some(fw[s][v])
                        } else {
                            None
                        };
                        assert_eq!(dm.get(v), expected, "s={s} v={v} radius={radius}");
                    }
                }
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn parse_serialize_parse_roundtrip(edge_bits in proptest::collection::vec(0usize..15usize, 0..30)) {
            // Interpret pairs of values as edges over up to 15 named vertices.
            let edges: Vec<(usize, usize)> = edge_bits.chunks(2)
                .filter(|c| c.len() == 2 && c[0] != c[1])
                .map(|c| (c[0], c[1]))
                .collect();
            let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
            let g = Graph::from_edges(n, &edges)
                .with_labels((0..n).map(|i| format!("v{i}")).collect());
            let mut buf = Vec::new();
            g.to_edge_list(&mut buf).unwrap();
            let reparsed = parse_edge_list(&buf[..]).unwrap().graph;
            // Vertices with no incident edge are not represented in the format,
            // so compare edge sets through labels.
            let mut a: Vec<(String, String)> = g.edges().map(|(u, v)| (g.label(u), g.label(v))).collect();
            let mut b: Vec<(String, String)> = reparsed.edges().map(|(u, v)| (reparsed.label(u), reparsed.label(v))).collect();
            a.iter_mut().for_each(|e| if e.0 > e.1 { std::mem::swap(&mut e.0, &mut e.1) });
            b.iter_mut().for_each(|e| if e.0 > e.1 { std::mem::swap(&mut e.0, &mut e.1) });
            a.sort();
            b.sort();
            proptest::prop_assert_eq!(a, b);
        }
    }
}
