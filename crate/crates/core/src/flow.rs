//! Dinic max-flow on integer capacities. Used for every factor feasibility and
//! extraction question in [`crate::matching`].

use std::collections::VecDeque;

#[derive(Clone, Copy, Debug)]
struct Arc {
    to: u32,
    rev: u32,
    cap: i64,
}

#[derive(Clone, Debug)]
pub struct Dinic {
    graph: Vec<Vec<Arc>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

/// Handle to an arc added with [`Dinic::add_edge`], for reading its flow back.
#[derive(Clone, Copy, Debug)]
pub struct ArcId {
    from: usize,
    index: usize,
}

impl Dinic {
    pub fn new(nodes: usize) -> Self {
        Dinic { graph: vec![Vec::new(); nodes], level: vec![0; nodes], iter: vec![0; nodes] }
    }

    pub fn add_edge(&mut self, from: usize, to: usize, cap: i64) -> ArcId {
        let index = self.graph[from].len();
        let rev_index = self.graph[to].len() + usize::from(from == to);
        self.graph[from].push(Arc { to: to as u32, rev: rev_index as u32, cap });
        self.graph[to].push(Arc { to: from as u32, rev: index as u32, cap: 0 });
        ArcId { from, index }
    }

    /// Flow currently routed through `id` (original capacity minus residual).
    pub fn flow(&self, id: ArcId) -> i64 {
        let arc = &self.graph[id.from][id.index];
        self.graph[arc.to as usize][arc.rev as usize].cap
    }

    fn bfs(&mut self, s: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for arc in &self.graph[v] {
                let to = arc.to as usize;
                if arc.cap > 0 && self.level[to] < 0 {
                    self.level[to] = self.level[v] + 1;
                    queue.push_back(to);
                }
            }
        }
    }

    fn dfs(&mut self, v: usize, t: usize, limit: i64) -> i64 {
        if v == t {
            return limit;
        }
        while self.iter[v] < self.graph[v].len() {
            let i = self.iter[v];
            let Arc { to, rev, cap } = self.graph[v][i];
            let (to, rev) = (to as usize, rev as usize);
            if cap > 0 && self.level[v] < self.level[to] {
                let d = self.dfs(to, t, limit.min(cap));
                if d > 0 {
                    self.graph[v][i].cap -= d;
                    self.graph[to][rev].cap += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            self.bfs(s);
            if self.level[t] < 0 {
                return total;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
    }
}
