//! Exact planarity decision for simple undirected graphs.
//!
//! [`is_planar`] runs a deterministic polynomial-time test of the
//! left-right (edge-addition) family after two cheap screens: graphs with
//! fewer than 5 vertices or fewer than 9 edges are always planar, and
//! [`euler_edge_reject`] certifies non-planarity when `E > 3V - 6`.
//!
//! [`kuratowski_oracle`] is an independent exponential cross-check: it
//! exhaustively searches for a subdivision of `K_5` or `K_{3,3}` (branch
//! vertices plus internally disjoint paths) and, when one exists, returns it
//! as a checkable witness. It exists precisely because the main algorithm is
//! nontrivial to trust; the two must agree on every graph small enough for
//! the search.

use crate::graph::UndirectedGraph;
use crate::{Error, Result};

/// Certain non-planarity by edge count: true iff `V >= 3` and `E > 3V - 6`.
/// A false result carries no verdict.
pub fn euler_edge_reject(g: &UndirectedGraph) -> bool {
    let v = g.vertex_count();
    v >= 3 && g.edge_count() > 3 * v - 6
}

/// Exact planarity of a simple undirected graph. Components are handled in
/// one pass (the test roots a search in every component).
pub fn is_planar(g: &UndirectedGraph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    // no subdivision of K_5 (10 edges) or K_{3,3} (9 edges) can fit
    if n < 5 || m < 9 {
        return true;
    }
    if euler_edge_reject(g) {
        return false;
    }
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbors(v as u32).map(|w| w as usize).collect())
        .collect();
    left_right::planar(&adj)
}

/// Which forbidden shape a witness subdivides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObstructionKind {
    K5,
    K33,
}

/// A subdivision certificate: branch vertices plus internally disjoint
/// paths, one per branch pair. For `K33` the branch vertices are listed as
/// one side followed by the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: ObstructionKind,
    pub branch_vertices: Vec<u32>,
    pub paths: Vec<Vec<u32>>,
}

/// Outcome of the subdivision oracle. A witness is attached exactly when
/// `planar` is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarityVerdict {
    pub planar: bool,
    pub witness: Option<KuratowskiWitness>,
}

/// Default step budget for the subdivision search.
pub const DEFAULT_ORACLE_BUDGET: u64 = 200_000_000;

/// Exhaustive Kuratowski-subdivision search with the default budget.
///
/// Searches `K_5` before `K_{3,3}`, branch-vertex sets in lexicographic
/// order, and returns the first witness found. Exponential; intended for
/// small test graphs (at most 64 vertices, and a step budget caps the path
/// search).
pub fn kuratowski_oracle(g: &UndirectedGraph) -> Result<PlanarityVerdict> {
    kuratowski_oracle_with_budget(g, DEFAULT_ORACLE_BUDGET)
}

/// [`kuratowski_oracle`] with an explicit step budget.
pub fn kuratowski_oracle_with_budget(g: &UndirectedGraph, budget: u64) -> Result<PlanarityVerdict> {
    let n = g.vertex_count();
    if n > 64 {
        return Err(Error::OracleTooLarge { vertices: n });
    }
    let adj: Vec<u64> = (0..n as u32)
        .map(|v| g.neighbors(v).fold(0u64, |m, w| m | (1 << w)))
        .collect();
    let mut steps = 0u64;
    if let Some(w) = subdivision::search_k5(&adj, budget, &mut steps)? {
        return Ok(PlanarityVerdict {
            planar: false,
            witness: Some(w),
        });
    }
    if let Some(w) = subdivision::search_k33(&adj, budget, &mut steps)? {
        return Ok(PlanarityVerdict {
            planar: false,
            witness: Some(w),
        });
    }
    Ok(PlanarityVerdict {
        planar: true,
        witness: None,
    })
}

/// Checks a witness against the graph it came from: path endpoints must pair
/// every branch pair of the claimed shape, consecutive path vertices must be
/// adjacent, and internal vertices must be disjoint from each other and from
/// the branch set.
pub fn validate_witness(g: &UndirectedGraph, w: &KuratowskiWitness) -> bool {
    let pairs: Vec<(usize, usize)> = match w.kind {
        ObstructionKind::K5 => {
            if w.branch_vertices.len() != 5 {
                return false;
            }
            subdivision::k5_pairs()
        }
        ObstructionKind::K33 => {
            if w.branch_vertices.len() != 6 {
                return false;
            }
            subdivision::k33_pairs()
        }
    };
    if w.paths.len() != pairs.len() {
        return false;
    }
    let mut branch_seen = w.branch_vertices.clone();
    branch_seen.sort_unstable();
    branch_seen.dedup();
    if branch_seen.len() != w.branch_vertices.len() {
        return false;
    }
    let mut internal_used = std::collections::BTreeSet::new();
    for (path, &(a, b)) in w.paths.iter().zip(&pairs) {
        if path.len() < 2
            || path[0] != w.branch_vertices[a]
            || *path.last().unwrap() != w.branch_vertices[b]
        {
            return false;
        }
        for pair in path.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return false;
            }
        }
        for &v in &path[1..path.len() - 1] {
            if w.branch_vertices.contains(&v) || !internal_used.insert(v) {
                return false;
            }
        }
    }
    true
}

/// Fifty deterministic simple graphs on at most `max_vertices` vertices,
/// regenerated identically on every call. Used as the random slice of the
/// planarity cross-check corpus.
pub fn random_graph_corpus(count: usize, max_vertices: usize) -> Vec<UndirectedGraph> {
    let mut state = 0x9d8a_7f63_1c24_55b1u64;
    (0..count)
        .map(|_| {
            let n = 3 + (splitmix64(&mut state) as usize) % (max_vertices - 2);
            let mut g = UndirectedGraph::new(n);
            // edge density varies across the corpus
            let density = 1 + splitmix64(&mut state) % 3;
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if splitmix64(&mut state) % 4 < density {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
        .collect()
}

pub(crate) fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Left-right planarity criterion: orient the graph by depth-first search,
/// order each adjacency list by nesting depth, then check that the back
/// edges can be two-colored consistently with a stack of conflict pairs.
mod left_right {
    use std::collections::HashSet;

    type EdgeId = usize;

    #[derive(Clone, Copy, Default, PartialEq, Eq)]
    struct Interval {
        low: Option<EdgeId>,
        high: Option<EdgeId>,
    }

    impl Interval {
        fn is_empty(&self) -> bool {
            self.low.is_none() && self.high.is_none()
        }
    }

    #[derive(Clone, Copy, Default)]
    struct ConflictPair {
        left: Interval,
        right: Interval,
    }

    impl ConflictPair {
        fn swap(&mut self) {
            std::mem::swap(&mut self.left, &mut self.right);
        }
    }

    struct Tester<'a> {
        adj: &'a [Vec<usize>],
        height: Vec<i64>,
        parent_edge: Vec<Option<EdgeId>>,
        edge_from: Vec<usize>,
        edge_to: Vec<usize>,
        out_edges: Vec<Vec<EdgeId>>,
        ordered_out: Vec<Vec<EdgeId>>,
        lowpt: Vec<i64>,
        lowpt2: Vec<i64>,
        nesting: Vec<i64>,
        refs: Vec<Option<EdgeId>>,
        lowpt_edge: Vec<Option<EdgeId>>,
        stack_bottom: Vec<usize>,
        stack: Vec<ConflictPair>,
    }

    pub(super) fn planar(adj: &[Vec<usize>]) -> bool {
        let n = adj.len();
        let mut t = Tester {
            adj,
            height: vec![-1; n],
            parent_edge: vec![None; n],
            edge_from: Vec::new(),
            edge_to: Vec::new(),
            out_edges: vec![Vec::new(); n],
            ordered_out: Vec::new(),
            lowpt: Vec::new(),
            lowpt2: Vec::new(),
            nesting: Vec::new(),
            refs: Vec::new(),
            lowpt_edge: Vec::new(),
            stack_bottom: Vec::new(),
            stack: Vec::new(),
        };
        t.run()
    }

    impl Tester<'_> {
        fn run(&mut self) -> bool {
            let n = self.adj.len();
            let mut roots = Vec::new();
            let mut oriented: HashSet<(usize, usize)> = HashSet::new();
            for v in 0..n {
                if self.height[v] < 0 {
                    self.height[v] = 0;
                    roots.push(v);
                    self.dfs_orientation(v, &mut oriented);
                }
            }
            self.ordered_out = self
                .out_edges
                .iter()
                .map(|list| {
                    let mut list = list.clone();
                    list.sort_by_key(|&e| self.nesting[e]);
                    list
                })
                .collect();
            roots.into_iter().all(|r| self.dfs_testing(r))
        }

        /// Phase 1: orient every edge, computing heights, lowpoints, and
        /// nesting depths.
        fn dfs_orientation(&mut self, v: usize, oriented: &mut HashSet<(usize, usize)>) {
            let parent = self.parent_edge[v];
            for idx in 0..self.adj[v].len() {
                let w = self.adj[v][idx];
                if !oriented.insert((v.min(w), v.max(w))) {
                    continue;
                }
                let e = self.edge_from.len();
                self.edge_from.push(v);
                self.edge_to.push(w);
                self.lowpt.push(self.height[v]);
                self.lowpt2.push(self.height[v]);
                self.nesting.push(0);
                self.refs.push(None);
                self.lowpt_edge.push(None);
                self.stack_bottom.push(0);
                self.out_edges[v].push(e);
                if self.height[w] < 0 {
                    // tree edge
                    self.parent_edge[w] = Some(e);
                    self.height[w] = self.height[v] + 1;
                    self.dfs_orientation(w, oriented);
                } else {
                    // back edge
                    self.lowpt[e] = self.height[w];
                }
                self.nesting[e] = 2 * self.lowpt[e];
                if self.lowpt2[e] < self.height[v] {
                    // chordal: tie-break after edges with one return point
                    self.nesting[e] += 1;
                }
                if let Some(pe) = parent {
                    if self.lowpt[e] < self.lowpt[pe] {
                        self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
                        self.lowpt[pe] = self.lowpt[e];
                    } else if self.lowpt[e] > self.lowpt[pe] {
                        self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
                    } else {
                        self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
                    }
                }
            }
        }

        /// Phase 2: process edges in nesting order, maintaining the stack of
        /// conflict pairs; false as soon as constraints become unsatisfiable.
        fn dfs_testing(&mut self, v: usize) -> bool {
            let parent = self.parent_edge[v];
            for i in 0..self.ordered_out[v].len() {
                let e = self.ordered_out[v][i];
                self.stack_bottom[e] = self.stack.len();
                let w = self.edge_to[e];
                if self.parent_edge[w] == Some(e) {
                    // tree edge
                    if !self.dfs_testing(w) {
                        return false;
                    }
                } else {
                    // back edge
                    self.lowpt_edge[e] = Some(e);
                    self.stack.push(ConflictPair {
                        left: Interval::default(),
                        right: Interval {
                            low: Some(e),
                            high: Some(e),
                        },
                    });
                }
                if self.lowpt[e] < self.height[v] {
                    // e has a return edge strictly below v
                    let pe = parent.expect("a return edge below v implies v is not a root");
                    if i == 0 {
                        self.lowpt_edge[pe] = self.lowpt_edge[e];
                    } else if !self.add_constraints(e, pe) {
                        return false;
                    }
                }
            }
            if let Some(pe) = parent {
                self.remove_back_edges(pe);
            }
            true
        }

        fn conflicting(&self, interval: Interval, b: EdgeId) -> bool {
            match interval.high {
                Some(h) => self.lowpt[h] > self.lowpt[b],
                None => false,
            }
        }

        fn add_constraints(&mut self, e_i: EdgeId, pe: EdgeId) -> bool {
            let mut p = ConflictPair::default();
            // merge the return edges of e_i into p.right
            loop {
                let mut q = self
                    .stack
                    .pop()
                    .expect("e_i contributed at least one conflict pair");
                if !q.left.is_empty() {
                    q.swap();
                }
                if !q.left.is_empty() {
                    return false; // not planar
                }
                let q_low = q.right.low.expect("pairs on the stack are one-sided here");
                if self.lowpt[q_low] > self.lowpt[pe] {
                    // merge
                    if p.right.is_empty() {
                        p.right.high = q.right.high;
                    } else {
                        let p_low = p.right.low.expect("nonempty interval has a low edge");
                        self.refs[p_low] = q.right.high;
                    }
                    p.right.low = q.right.low;
                } else {
                    // align to the lowest return edge of the parent
                    self.refs[q_low] = self.lowpt_edge[pe];
                }
                if self.stack.len() == self.stack_bottom[e_i] {
                    break;
                }
            }
            // merge conflicting return edges of earlier siblings into p.left
            while let Some(&top) = self.stack.last() {
                if !self.conflicting(top.left, e_i) && !self.conflicting(top.right, e_i) {
                    break;
                }
                let mut q = self.stack.pop().unwrap();
                if self.conflicting(q.right, e_i) {
                    q.swap();
                }
                if self.conflicting(q.right, e_i) {
                    return false; // both sides conflict: not planar
                }
                // interval below lowpt(e_i) joins p.right
                if let Some(p_low) = p.right.low {
                    self.refs[p_low] = q.right.high;
                }
                if q.right.low.is_some() {
                    p.right.low = q.right.low;
                }
                if p.left.is_empty() {
                    p.left.high = q.left.high;
                } else {
                    let p_low = p.left.low.expect("nonempty interval has a low edge");
                    self.refs[p_low] = q.left.high;
                }
                p.left.low = q.left.low;
            }
            if !(p.left.is_empty() && p.right.is_empty()) {
                self.stack.push(p);
            }
            true
        }

        fn lowest(&self, pair: &ConflictPair) -> i64 {
            match (pair.left.low, pair.right.low) {
                (None, Some(r)) => self.lowpt[r],
                (Some(l), None) => self.lowpt[l],
                (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
                (None, None) => unreachable!("empty conflict pairs are never stacked"),
            }
        }

        /// Drop or trim back edges that return exactly to the parent of the
        /// finished subtree.
        fn remove_back_edges(&mut self, pe: EdgeId) {
            let u = self.edge_from[pe];
            let hu = self.height[u];
            while let Some(top) = self.stack.last() {
                if self.lowest(top) == hu {
                    self.stack.pop();
                } else {
                    break;
                }
            }
            if let Some(mut pair) = self.stack.pop() {
                while let Some(h) = pair.left.high {
                    if self.edge_to[h] == u {
                        pair.left.high = self.refs[h];
                    } else {
                        break;
                    }
                }
                if pair.left.high.is_none() && pair.left.low.is_some() {
                    // left interval just emptied
                    let low = pair.left.low.take().unwrap();
                    self.refs[low] = pair.right.low;
                }
                while let Some(h) = pair.right.high {
                    if self.edge_to[h] == u {
                        pair.right.high = self.refs[h];
                    } else {
                        break;
                    }
                }
                if pair.right.high.is_none() && pair.right.low.is_some() {
                    // right interval just emptied
                    let low = pair.right.low.take().unwrap();
                    self.refs[low] = pair.left.low;
                }
                self.stack.push(pair);
            }
        }
    }
}

/// Exhaustive search for subdivisions: pick branch vertices, then try to
/// route internally disjoint paths between every required pair.
mod subdivision {
    use super::{KuratowskiWitness, ObstructionKind};
    use crate::{Error, Result};

    pub(super) fn k5_pairs() -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                pairs.push((a, b));
            }
        }
        pairs
    }

    pub(super) fn k33_pairs() -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                pairs.push((a, b));
            }
        }
        pairs
    }

    pub(super) fn search_k5(
        adj: &[u64],
        budget: u64,
        steps: &mut u64,
    ) -> Result<Option<KuratowskiWitness>> {
        let candidates: Vec<u32> = (0..adj.len() as u32)
            .filter(|&v| (adj[v as usize].count_ones() as usize) >= 4)
            .collect();
        let pairs = k5_pairs();
        for branch in Combinations::new(&candidates, 5) {
            if let Some(paths) = route_paths(adj, &branch, &pairs, budget, steps)? {
                return Ok(Some(KuratowskiWitness {
                    kind: ObstructionKind::K5,
                    branch_vertices: branch,
                    paths,
                }));
            }
        }
        Ok(None)
    }

    pub(super) fn search_k33(
        adj: &[u64],
        budget: u64,
        steps: &mut u64,
    ) -> Result<Option<KuratowskiWitness>> {
        let candidates: Vec<u32> = (0..adj.len() as u32)
            .filter(|&v| (adj[v as usize].count_ones() as usize) >= 3)
            .collect();
        let pairs = k33_pairs();
        for six in Combinations::new(&candidates, 6) {
            // partitions into sides; the smallest vertex stays on side one
            for i in 1..5 {
                for j in i + 1..6 {
                    let mut branch = vec![six[0], six[i], six[j]];
                    for (k, &v) in six.iter().enumerate() {
                        if k != 0 && k != i && k != j {
                            branch.push(v);
                        }
                    }
                    if let Some(paths) = route_paths(adj, &branch, &pairs, budget, steps)? {
                        return Ok(Some(KuratowskiWitness {
                            kind: ObstructionKind::K33,
                            branch_vertices: branch,
                            paths,
                        }));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Backtracking router: assign paths to pairs in order, pruning whenever
    /// some unrouted pair can no longer be connected through free vertices.
    fn route_paths(
        adj: &[u64],
        branch: &[u32],
        pairs: &[(usize, usize)],
        budget: u64,
        steps: &mut u64,
    ) -> Result<Option<Vec<Vec<u32>>>> {
        let branch_mask = branch.iter().fold(0u64, |m, &v| m | (1 << v));
        let mut router = Router {
            adj,
            branch,
            pairs,
            branch_mask,
            used: 0,
            paths: Vec::with_capacity(pairs.len()),
            budget,
            steps,
        };
        if router.route(0)? {
            Ok(Some(router.paths))
        } else {
            Ok(None)
        }
    }

    struct Router<'a> {
        adj: &'a [u64],
        branch: &'a [u32],
        pairs: &'a [(usize, usize)],
        branch_mask: u64,
        used: u64,
        paths: Vec<Vec<u32>>,
        budget: u64,
        steps: &'a mut u64,
    }

    impl Router<'_> {
        fn step(&mut self) -> Result<()> {
            *self.steps += 1;
            if *self.steps > self.budget {
                return Err(Error::OracleBudgetExceeded { steps: *self.steps });
            }
            Ok(())
        }

        fn free_mask(&self) -> u64 {
            !(self.branch_mask | self.used) & low_bits(self.adj.len())
        }

        fn route(&mut self, k: usize) -> Result<bool> {
            self.step()?;
            if k == self.pairs.len() {
                return Ok(true);
            }
            // feasibility screen for every unrouted pair
            let free = self.free_mask();
            for &(a, b) in &self.pairs[k..] {
                let x = self.branch[a];
                let y = self.branch[b];
                if !reachable(self.adj, x, y, free) {
                    return Ok(false);
                }
            }
            let (a, b) = self.pairs[k];
            let x = self.branch[a];
            let y = self.branch[b];
            let mut path = vec![x];
            self.extend_path(k, &mut path, 0, y)
        }

        /// Depth-first extension of the current path toward `target`,
        /// recursing into the next pair on completion.
        fn extend_path(
            &mut self,
            k: usize,
            path: &mut Vec<u32>,
            path_mask: u64,
            target: u32,
        ) -> Result<bool> {
            self.step()?;
            let current = *path.last().unwrap();
            let free = self.free_mask() & !path_mask;
            let mut options = self.adj[current as usize] & (free | (1 << target));
            while options != 0 {
                let w = options.trailing_zeros();
                options &= options - 1;
                if w == target {
                    self.used |= path_mask;
                    path.push(w);
                    self.paths.push(path.clone());
                    if self.route(k + 1)? {
                        return Ok(true);
                    }
                    self.paths.pop();
                    path.pop();
                    self.used &= !path_mask;
                    continue;
                }
                // only step to vertices that can still reach the target
                if !reachable(self.adj, w, target, free & !(1 << w)) {
                    continue;
                }
                path.push(w);
                if self.extend_path(k, path, path_mask | (1 << w), target)? {
                    return Ok(true);
                }
                path.pop();
            }
            Ok(false)
        }
    }

    fn low_bits(n: usize) -> u64 {
        if n >= 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    /// True iff `to` is reachable from `from` stepping through `allowed`
    /// vertices (the endpoints themselves need not be allowed).
    fn reachable(adj: &[u64], from: u32, to: u32, allowed: u64) -> bool {
        let target = 1u64 << to;
        if adj[from as usize] & target != 0 {
            return true;
        }
        let mut reached = 1u64 << from;
        loop {
            let mut frontier = 0u64;
            let mut scan = reached;
            while scan != 0 {
                let v = scan.trailing_zeros();
                scan &= scan - 1;
                frontier |= adj[v as usize];
            }
            if frontier & target != 0 {
                return true;
            }
            let next = reached | (frontier & allowed);
            if next == reached {
                return false;
            }
            reached = next;
        }
    }

    /// Lexicographic k-subsets of a sorted slice.
    struct Combinations<'a> {
        items: &'a [u32],
        indices: Vec<usize>,
        done: bool,
    }

    impl<'a> Combinations<'a> {
        fn new(items: &'a [u32], k: usize) -> Self {
            Self {
                items,
                indices: (0..k).collect(),
                done: k > items.len(),
            }
        }
    }

    impl Iterator for Combinations<'_> {
        type Item = Vec<u32>;

        fn next(&mut self) -> Option<Vec<u32>> {
            if self.done {
                return None;
            }
            let out: Vec<u32> = self.indices.iter().map(|&i| self.items[i]).collect();
            let k = self.indices.len();
            let n = self.items.len();
            let mut i = k;
            loop {
                if i == 0 {
                    self.done = true;
                    break;
                }
                i -= 1;
                if self.indices[i] != i + n - k {
                    self.indices[i] += 1;
                    for j in i + 1..k {
                        self.indices[j] = self.indices[j - 1] + 1;
                    }
                    break;
                }
            }
            Some(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BruhatGraph;
    use crate::perm::Permutation;
    use proptest::prelude::*;

    fn petersen() -> UndirectedGraph {
        let mut g = UndirectedGraph::new(10);
        for i in 0..5u32 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(i + 5, (i + 2) % 5 + 5);
        }
        g
    }

    fn goldner_harary() -> UndirectedGraph {
        // a maximal planar graph: 11 vertices, 27 = 3*11 - 6 edges
        UndirectedGraph::from_edges(
            11,
            [
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 6),
                (0, 7),
                (0, 9),
                (0, 10),
                (1, 2),
                (1, 3),
                (1, 5),
                (1, 6),
                (1, 8),
                (1, 9),
                (1, 10),
                (2, 3),
                (3, 4),
                (3, 5),
                (3, 6),
                (4, 6),
                (5, 6),
                (6, 7),
                (6, 8),
                (6, 9),
                (7, 9),
                (8, 9),
                (9, 10),
            ],
        )
    }

    #[test]
    fn known_planar_graphs() {
        assert!(is_planar(&UndirectedGraph::new(1)));
        assert!(is_planar(&UndirectedGraph::hypercube(3)));
        assert!(is_planar(&UndirectedGraph::complete(4)));
        assert!(is_planar(&goldner_harary()));
        // 3x3 grid
        let mut grid = UndirectedGraph::new(9);
        for r in 0..3u32 {
            for c in 0..3u32 {
                if c < 2 {
                    grid.add_edge(3 * r + c, 3 * r + c + 1);
                }
                if r < 2 {
                    grid.add_edge(3 * r + c, 3 * (r + 1) + c);
                }
            }
        }
        assert!(is_planar(&grid));
    }

    #[test]
    fn known_non_planar_graphs() {
        assert!(!is_planar(&UndirectedGraph::complete(5)));
        assert!(!is_planar(&UndirectedGraph::complete_bipartite(3, 3)));
        assert!(!is_planar(&UndirectedGraph::hypercube(4)));
        assert!(!is_planar(&petersen()));
        // subdivision-only obstruction: no K_5 or K_{3,3} subgraph directly
        let g = UndirectedGraph::from_edges(
            8,
            [
                (1, 5),
                (1, 6),
                (1, 7),
                (2, 6),
                (2, 3),
                (3, 5),
                (3, 7),
                (4, 5),
                (4, 6),
                (4, 7),
            ],
        );
        assert!(!is_planar(&g));
    }

    #[test]
    fn hypercubes_planar_iff_dim_at_most_3() {
        for dim in 0..=4 {
            assert_eq!(is_planar(&UndirectedGraph::hypercube(dim)), dim <= 3);
        }
    }

    #[test]
    fn disconnected_graphs() {
        // two triangles
        let g = UndirectedGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(is_planar(&g));
        // K_5 plus a triangle
        let mut h = UndirectedGraph::new(8);
        for u in 0..5u32 {
            for v in u + 1..5 {
                h.add_edge(u, v);
            }
        }
        h.add_edge(5, 6);
        h.add_edge(6, 7);
        h.add_edge(7, 5);
        assert!(!is_planar(&h));
    }

    #[test]
    fn euler_filter() {
        assert!(euler_edge_reject(&UndirectedGraph::complete(5)));
        assert!(!euler_edge_reject(&UndirectedGraph::complete_bipartite(
            3, 3
        )));
        assert!(!euler_edge_reject(&UndirectedGraph::hypercube(3)));
        assert!(!euler_edge_reject(&UndirectedGraph::new(2)));
    }

    #[test]
    fn euler_filter_is_sound_on_corpus() {
        for g in test_corpus() {
            if euler_edge_reject(&g) {
                assert!(!is_planar(&g));
            }
        }
    }

    #[test]
    fn oracle_on_k33() {
        let verdict = kuratowski_oracle(&UndirectedGraph::complete_bipartite(3, 3)).unwrap();
        assert!(!verdict.planar);
        let w = verdict.witness.unwrap();
        assert_eq!(w.kind, ObstructionKind::K33);
        let mut branch = w.branch_vertices.clone();
        branch.sort_unstable();
        assert_eq!(branch, vec![0, 1, 2, 3, 4, 5]);
        assert!(validate_witness(
            &UndirectedGraph::complete_bipartite(3, 3),
            &w
        ));
    }

    #[test]
    fn oracle_on_k5_and_cycle() {
        let verdict = kuratowski_oracle(&UndirectedGraph::complete(5)).unwrap();
        assert!(!verdict.planar);
        let w = verdict.witness.unwrap();
        assert_eq!(w.kind, ObstructionKind::K5);
        assert!(validate_witness(&UndirectedGraph::complete(5), &w));

        let square = UndirectedGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        let verdict = kuratowski_oracle(&square).unwrap();
        assert!(verdict.planar);
        assert!(verdict.witness.is_none());
    }

    #[test]
    fn oracle_on_q4() {
        let verdict = kuratowski_oracle(&UndirectedGraph::hypercube(4)).unwrap();
        assert!(!verdict.planar);
        assert!(validate_witness(
            &UndirectedGraph::hypercube(4),
            &verdict.witness.unwrap()
        ));
    }

    #[test]
    fn oracle_limits() {
        assert!(matches!(
            kuratowski_oracle(&UndirectedGraph::new(65)),
            Err(Error::OracleTooLarge { vertices: 65 })
        ));
        assert!(matches!(
            kuratowski_oracle_with_budget(&UndirectedGraph::hypercube(4), 10),
            Err(Error::OracleBudgetExceeded { .. })
        ));
    }

    fn test_corpus() -> Vec<UndirectedGraph> {
        let mut corpus = Vec::new();
        for n in 1..=5 {
            corpus.push(UndirectedGraph::complete(n));
        }
        for a in 1..=3 {
            for b in a..=3 {
                corpus.push(UndirectedGraph::complete_bipartite(a, b));
            }
        }
        for dim in 0..=3 {
            corpus.push(UndirectedGraph::hypercube(dim));
        }
        for sigma in Permutation::all(3) {
            corpus.push(BruhatGraph::build(&sigma).underlying_undirected());
        }
        corpus.extend(random_graph_corpus(20, 7));
        corpus.push(petersen());
        corpus.push(goldner_harary());
        corpus
    }

    #[test]
    fn oracle_agrees_with_left_right_on_corpus() {
        for (i, g) in test_corpus().iter().enumerate() {
            let fast = is_planar(g);
            let verdict = kuratowski_oracle(g).unwrap();
            assert_eq!(fast, verdict.planar, "corpus graph {i}");
            if let Some(w) = &verdict.witness {
                assert!(validate_witness(g, w), "corpus graph {i}");
            }
        }
    }

    #[test]
    fn planarity_is_monotone_under_edge_deletion() {
        let mut state = 7u64;
        for g in test_corpus() {
            if !is_planar(&g) {
                continue;
            }
            for (u, v) in g.edges() {
                let mut smaller = g.clone();
                smaller.remove_edge(u, v);
                assert!(is_planar(&smaller));
            }
            // a random multi-edge deletion
            let mut shrunk = g.clone();
            for (u, v) in g.edges() {
                if splitmix64(&mut state) & 1 == 0 {
                    shrunk.remove_edge(u, v);
                }
            }
            assert!(is_planar(&shrunk));
        }
    }

    #[test]
    fn random_corpus_is_deterministic() {
        let a = random_graph_corpus(50, 8);
        let b = random_graph_corpus(50, 8);
        assert_eq!(a.len(), 50);
        assert!(a.iter().all(|g| g.vertex_count() <= 8));
        assert_eq!(a, b);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn prop_left_right_matches_oracle(
            n in 4usize..=8,
            edge_bits in any::<u64>(),
        ) {
            let mut g = UndirectedGraph::new(n);
            let mut bit = 0;
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if edge_bits >> (bit % 64) & 1 == 1 {
                        g.add_edge(u, v);
                    }
                    bit += 1;
                }
            }
            let verdict = kuratowski_oracle(&g).unwrap();
            prop_assert_eq!(is_planar(&g), verdict.planar);
            // isolated vertices never change the verdict
            let mut padded = UndirectedGraph::new(n + 2);
            for (u, v) in g.edges() {
                padded.add_edge(u, v);
            }
            prop_assert_eq!(is_planar(&padded), verdict.planar);
        }
    }
}
