//! Hopcroft–Karp maximum bipartite matching.

use std::collections::VecDeque;

const NIL: usize = usize::MAX;
const INF: usize = usize::MAX;

/// Bipartite graph with `left` vertices holding adjacency lists into `0..right`.
pub(crate) struct Bipartite {
    adj: Vec<Vec<usize>>,
    right: usize,
}

impl Bipartite {
    pub(crate) fn new(left: usize, right: usize) -> Self {
        Bipartite { adj: vec![Vec::new(); left], right }
    }

    pub(crate) fn add_edge(&mut self, l: usize, r: usize) {
        debug_assert!(r < self.right);
        self.adj[l].push(r);
    }

    /// Size of a maximum matching.
    pub(crate) fn max_matching(&self) -> usize {
        let n = self.adj.len();
        let mut match_l = vec![NIL; n];
        let mut match_r = vec![NIL; self.right];
        let mut dist = vec![0usize; n];
        let mut size = 0;
        while self.bfs(&match_l, &match_r, &mut dist) {
            for l in 0..n {
                if match_l[l] == NIL && self.dfs(l, &mut match_l, &mut match_r, &mut dist) {
                    size += 1;
                }
            }
        }
        size
    }

    fn bfs(&self, match_l: &[usize], match_r: &[usize], dist: &mut [usize]) -> bool {
        let mut queue = VecDeque::new();
        for (l, d) in dist.iter_mut().enumerate() {
            if match_l[l] == NIL {
                *d = 0;
                queue.push_back(l);
            } else {
                *d = INF;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &self.adj[l] {
                let next = match_r[r];
                if next == NIL {
                    found = true;
                } else if dist[next] == INF {
                    dist[next] = dist[l] + 1;
                    queue.push_back(next);
                }
            }
        }
        found
    }

    fn dfs(&self, l: usize, match_l: &mut [usize], match_r: &mut [usize], dist: &mut [usize]) -> bool {
        for i in 0..self.adj[l].len() {
            let r = self.adj[l][i];
            let next = match_r[r];
            if next == NIL || (dist[next] == dist[l] + 1 && self.dfs(next, match_l, match_r, dist)) {
                match_l[l] = r;
                match_r[r] = l;
                return true;
            }
        }
        dist[l] = INF;
        false
    }
}
