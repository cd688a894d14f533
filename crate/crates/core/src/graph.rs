//! Bruhat graphs and the simple undirected graphs derived from them.
//!
//! [`BruhatGraph`] is a vertex-labeled DAG: the vertices of `B(sigma)` are
//! the permutations of the lower interval `[id, sigma]`, and there is an edge
//! `u -> t.u` labeled by the transposition `t` whenever both endpoints lie in
//! the interval and the length strictly increases (the jump need not be 1).
//! Vertex ids are assigned deterministically by sorting labels on
//! (length, word), so built graphs are byte-stable.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::order::{self, leq_by_dominance};
use crate::perm::{all_transpositions, subsequence_pattern, Embedding, Permutation, Transposition};
use crate::{Error, Result};

/// A directed edge `from -> to` labeled by the transposition carrying one
/// label to the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruhatEdge {
    pub from: u32,
    pub to: u32,
    pub transposition: Transposition,
}

/// A Bruhat graph (or an induced subgraph of one), immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruhatGraph {
    vertices: Vec<Permutation>,
    lengths: Vec<u32>,
    edges: Vec<BruhatEdge>,
}

impl BruhatGraph {
    /// Builds `B(sigma)` on the lower interval of `sigma`.
    pub fn build(sigma: &Permutation) -> Self {
        Self::build_capped(sigma, usize::MAX).expect("uncapped")
    }

    /// Like [`BruhatGraph::build`] but fails once the interval exceeds `cap`
    /// vertices.
    pub fn build_capped(sigma: &Permutation, cap: usize) -> Result<Self> {
        let interval = order::lower_interval_capped(sigma, cap)?;
        Ok(Self::from_vertex_set(interval, sigma.size()))
    }

    /// The induced subgraph of the full Bruhat graph of `S_n` on the given
    /// vertex set. `B(sigma)` itself is the special case where the set is a
    /// lower interval.
    fn from_vertex_set(mut vertices: Vec<Permutation>, n: usize) -> Self {
        vertices.sort_by_cached_key(|p| (p.coxeter_length(), p.word().to_vec()));
        let lengths: Vec<u32> = vertices.iter().map(|p| p.coxeter_length() as u32).collect();
        let index: HashMap<&[u8], u32> = vertices
            .iter()
            .enumerate()
            .map(|(i, p)| (p.word(), i as u32))
            .collect();
        let mut edges = Vec::new();
        for (uid, u) in vertices.iter().enumerate() {
            for t in all_transpositions(n) {
                let v = u.apply_unchecked(t);
                if v.coxeter_length() as u32 <= lengths[uid] {
                    continue;
                }
                if let Some(&vid) = index.get(v.word()) {
                    edges.push(BruhatEdge {
                        from: uid as u32,
                        to: vid,
                        transposition: t,
                    });
                }
            }
        }
        edges.sort_by_key(|e| (e.from, e.to));
        Self {
            vertices,
            lengths,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    pub fn edges(&self) -> &[BruhatEdge] {
        &self.edges
    }

    pub fn label(&self, id: u32) -> &Permutation {
        &self.vertices[id as usize]
    }

    /// Coxeter length of the vertex label (the length rank of the vertex).
    pub fn length(&self, id: u32) -> usize {
        self.lengths[id as usize] as usize
    }

    /// The unique vertex with in-degree 0, if it is unique.
    pub fn source(&self) -> Option<u32> {
        let mut indeg = vec![0usize; self.vertices.len()];
        for e in &self.edges {
            indeg[e.to as usize] += 1;
        }
        unique_zero(&indeg)
    }

    /// The unique vertex with out-degree 0, if it is unique.
    pub fn sink(&self) -> Option<u32> {
        let mut outdeg = vec![0usize; self.vertices.len()];
        for e in &self.edges {
            outdeg[e.from as usize] += 1;
        }
        unique_zero(&outdeg)
    }

    /// Out-neighbor lists indexed by vertex id.
    pub fn out_adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.from as usize].push(e.to);
        }
        adj
    }

    /// Number of edges on a longest directed path. Vertex ids ascend with
    /// length, so id order is topological.
    pub fn longest_directed_path(&self) -> usize {
        let mut best = vec![0usize; self.vertices.len()];
        for e in &self.edges {
            let candidate = best[e.from as usize] + 1;
            if candidate > best[e.to as usize] {
                best[e.to as usize] = candidate;
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    /// Number of edges on a shortest directed path from the unique source to
    /// the unique sink. None when either is missing or the sink is
    /// unreachable.
    pub fn shortest_source_to_sink(&self) -> Option<usize> {
        let source = self.source()?;
        let sink = self.sink()?;
        if source == sink {
            return Some(0);
        }
        let adj = self.out_adjacency();
        let mut dist = vec![usize::MAX; self.vertices.len()];
        dist[source as usize] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u as usize] {
                if dist[v as usize] == usize::MAX {
                    dist[v as usize] = dist[u as usize] + 1;
                    if v == sink {
                        return Some(dist[v as usize]);
                    }
                    queue.push_back(v);
                }
            }
        }
        None
    }

    /// Forgets directions and labels. The result is simple: antiparallel
    /// edge pairs cannot occur because every edge strictly increases length.
    pub fn underlying_undirected(&self) -> UndirectedGraph {
        let mut g = UndirectedGraph::new(self.vertices.len());
        for e in &self.edges {
            g.add_edge(e.from, e.to);
        }
        g
    }
}

fn unique_zero(degrees: &[usize]) -> Option<u32> {
    let mut found = None;
    for (i, &d) in degrees.iter().enumerate() {
        if d == 0 {
            if found.is_some() {
                return None;
            }
            found = Some(i as u32);
        }
    }
    found
}

/// Constructive hypercube recognition for graphs with a unique source.
///
/// The out-neighbors of the source are taken as coordinates; every vertex is
/// mapped to the set of coordinate vertices below it in Bruhat order (on
/// labels). The graph is the `dim`-cube iff that map is a bijection onto the
/// subsets of the coordinates and underlying adjacency corresponds exactly
/// to single-element symmetric difference.
pub fn is_hypercube(g: &BruhatGraph, dim: usize) -> bool {
    if dim >= 32 || g.vertex_count() != 1usize << dim {
        return false;
    }
    let Some(source) = g.source() else {
        return false;
    };
    let adj = g.out_adjacency();
    let atoms = &adj[source as usize];
    if atoms.len() != dim {
        return false;
    }
    let coords: Vec<u32> = g
        .vertices()
        .iter()
        .map(|w| {
            let mut mask = 0u32;
            for (bit, &a) in atoms.iter().enumerate() {
                if leq_by_dominance(g.label(a), w) {
                    mask |= 1 << bit;
                }
            }
            mask
        })
        .collect();
    let mut sorted = coords.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != g.vertex_count() {
        return false;
    }
    let adjacent: BTreeSet<(u32, u32)> = g
        .edges()
        .iter()
        .map(|e| (e.from.min(e.to), e.from.max(e.to)))
        .collect();
    for i in 0..g.vertex_count() {
        for j in i + 1..g.vertex_count() {
            let one_flip = (coords[i] ^ coords[j]).count_ones() == 1;
            if one_flip != adjacent.contains(&(i as u32, j as u32)) {
                return false;
            }
        }
    }
    true
}

/// The induced subgraph of `B(target)` on the vertices that agree with
/// `target` at every position outside the embedding. By the pattern-subgraph
/// proposition this is isomorphic to `B(pattern)`, with the sink mapped to
/// `target`.
pub fn induced_pattern_subgraph(
    pattern: &Permutation,
    target: &Permutation,
    e: &Embedding,
) -> Result<BruhatGraph> {
    validate_embedding(pattern, target, e)?;
    let n = target.size();
    let mut inside = vec![false; n + 1];
    for &i in e.indices() {
        inside[i] = true;
    }
    let b_target = BruhatGraph::build(target);
    let kept: Vec<Permutation> = b_target
        .vertices()
        .iter()
        .filter(|v| (1..=n).all(|j| inside[j] || v.at(j) == target.at(j)))
        .cloned()
        .collect();
    Ok(BruhatGraph::from_vertex_set(kept, n))
}

/// The canonical vertex relabeling behind [`induced_pattern_subgraph`]: a
/// vertex `w` of `B(pattern)` maps to the permutation that agrees with
/// `target` outside the embedding and arranges the embedded values in `w`'s
/// relative order.
pub fn embed_vertex(w: &Permutation, target: &Permutation, e: &Embedding) -> Permutation {
    debug_assert_eq!(w.size(), e.len());
    let mut values: Vec<u8> = e.indices().iter().map(|&i| target.word()[i - 1]).collect();
    values.sort_unstable();
    let mut word = target.word().to_vec();
    for (a, &i) in e.indices().iter().enumerate() {
        word[i - 1] = values[w.at(a + 1) - 1];
    }
    Permutation::new(word).expect("relabeling preserves the word property")
}

/// Full check of the pattern-subgraph correspondence for one embedding:
/// relabeling the vertices of `B(pattern)` through [`embed_vertex`] must hit
/// exactly the vertex set of the induced subgraph, carry edges to edges
/// bijectively, and send the sink to `target`.
pub fn induced_subgraph_matches(
    pattern: &Permutation,
    target: &Permutation,
    e: &Embedding,
) -> Result<bool> {
    let induced = induced_pattern_subgraph(pattern, target, e)?;
    let b_pattern = BruhatGraph::build(pattern);
    if b_pattern.vertex_count() != induced.vertex_count()
        || b_pattern.edge_count() != induced.edge_count()
    {
        return Ok(false);
    }
    let mut image: Vec<Permutation> = b_pattern
        .vertices()
        .iter()
        .map(|w| embed_vertex(w, target, e))
        .collect();
    image.sort_by_cached_key(|q| (q.coxeter_length(), q.word().to_vec()));
    if image != induced.vertices() {
        return Ok(false);
    }
    let sink = b_pattern.sink().expect("Bruhat graphs have a unique sink");
    if embed_vertex(b_pattern.label(sink), target, e) != *target {
        return Ok(false);
    }
    let into_pairs = |g: &BruhatGraph, map: &dyn Fn(&Permutation) -> Permutation| {
        let mut pairs: Vec<(Permutation, Permutation)> = g
            .edges()
            .iter()
            .map(|ed| (map(g.label(ed.from)), map(g.label(ed.to))))
            .collect();
        pairs.sort();
        pairs
    };
    let mapped = into_pairs(&b_pattern, &|w| embed_vertex(w, target, e));
    let direct = into_pairs(&induced, &|w| w.clone());
    Ok(mapped == direct)
}

fn validate_embedding(pattern: &Permutation, target: &Permutation, e: &Embedding) -> Result<()> {
    if e.len() != pattern.size() {
        return Err(Error::InvalidEmbedding(format!(
            "{} indices for a pattern of size {}",
            e.len(),
            pattern.size()
        )));
    }
    let last = *e.indices().last().expect("embeddings are nonempty");
    if last > target.size() {
        return Err(Error::InvalidEmbedding(format!(
            "index {last} exceeds target size {}",
            target.size()
        )));
    }
    if subsequence_pattern(target, e.indices()) != *pattern {
        return Err(Error::InvalidEmbedding(format!(
            "indices {e} do not realize pattern {pattern} in {target}"
        )));
    }
    Ok(())
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    adj: Vec<BTreeSet<u32>>,
}

impl UndirectedGraph {
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adds an edge, ignoring duplicates. Self-loops are rejected.
    pub fn add_edge(&mut self, u: u32, v: u32) {
        assert!(u != v, "self-loops are not allowed in a simple graph");
        assert!((u as usize) < self.adj.len() && (v as usize) < self.adj.len());
        self.adj[u as usize].insert(v);
        self.adj[v as usize].insert(u);
    }

    pub fn remove_edge(&mut self, u: u32, v: u32) {
        self.adj[u as usize].remove(&v);
        self.adj[v as usize].remove(&u);
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].contains(&v)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn neighbors(&self, v: u32) -> impl Iterator<Item = u32> + '_ {
        self.adj[v as usize].iter().copied()
    }

    /// All edges as ordered pairs `u < v`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs.iter() {
                if (u as u32) < v {
                    out.push((u as u32, v));
                }
            }
        }
        out
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::new(a + b);
        for u in 0..a as u32 {
            for v in 0..b as u32 {
                g.add_edge(u, a as u32 + v);
            }
        }
        g
    }

    /// The edge graph of the `dim`-cube: vertices are bitmasks, edges join
    /// masks differing in one bit.
    pub fn hypercube(dim: usize) -> Self {
        assert!(dim < 20);
        let n = 1usize << dim;
        let mut g = Self::new(n);
        for u in 0..n {
            for bit in 0..dim {
                let v = u ^ (1 << bit);
                if u < v {
                    g.add_edge(u as u32, v as u32);
                }
            }
        }
        g
    }
}
