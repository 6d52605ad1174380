use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use group_engine::par;
use serde::Serialize;

use crate::Graph;

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Bits {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn first(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn and_not(&mut self, o: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a &= !b;
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CocliqueOptions {
    /// Restrict to cocliques containing this vertex (valid for vertex-transitive graphs).
    pub through_vertex: Option<usize>,
    /// Collect every maximum coclique rather than one.
    pub enumerate_all: bool,
    pub node_budget: u64,
}

impl Default for CocliqueOptions {
    fn default() -> Self {
        CocliqueOptions { through_vertex: None, enumerate_all: false, node_budget: 500_000_000 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CocliqueSearch {
    pub alpha: usize,
    /// Maximum cocliques found, each sorted, in lexicographic order.
    pub maximum: Vec<Vec<usize>>,
    /// False when the node budget ran out; `alpha` is then only a lower bound.
    pub complete: bool,
    pub nodes: u64,
}

struct Search {
    /// Non-neighbours of each vertex: the clique graph of the complement.
    free: Vec<Bits>,
    best: AtomicUsize,
    found: Mutex<Vec<Vec<usize>>>,
    nodes: AtomicU64,
    aborted: AtomicBool,
    all: bool,
    budget: u64,
}

impl Search {
    fn record(&self, r: &[usize]) {
        let mut f = self.found.lock().expect("search lock");
        let best = self.best.load(Ordering::SeqCst);
        if r.len() > best {
            self.best.store(r.len(), Ordering::SeqCst);
            f.clear();
            f.push(r.to_vec());
        } else if r.len() == best && (self.all || f.is_empty()) {
            f.push(r.to_vec());
        }
    }

    /// Greedy colouring of `p` in the complement: colour classes are cliques of the graph.
    fn colour(&self, p: &Bits) -> (Vec<usize>, Vec<usize>) {
        let (mut order, mut colours) = (Vec::new(), Vec::new());
        let mut uncoloured = p.clone();
        let mut c = 0;
        while !uncoloured.is_empty() {
            c += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                q.clear(v);
                q.and_not(&self.free[v]);
                uncoloured.clear(v);
                order.push(v);
                colours.push(c);
            }
        }
        (order, colours)
    }

    fn expand(&self, r: &mut Vec<usize>, mut p: Bits) {
        if self.aborted.load(Ordering::Relaxed) {
            return;
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            self.aborted.store(true, Ordering::Relaxed);
            return;
        }
        if p.is_empty() {
            self.record(r);
            return;
        }
        let (order, colours) = self.colour(&p);
        for idx in (0..order.len()).rev() {
            let bound = r.len() + colours[idx];
            let best = self.best.load(Ordering::SeqCst);
            if bound < best || (!self.all && bound == best) {
                return;
            }
            let v = order[idx];
            r.push(v);
            self.expand(r, p.and(&self.free[v]));
            r.pop();
            p.clear(v);
        }
    }
}

/// Exact maximum cocliques by branch and bound with colouring bounds,
/// split over first-level branches.
pub fn max_cocliques(g: &Graph, opts: &CocliqueOptions) -> CocliqueSearch {
    let n = g.len();
    let free: Vec<Bits> = (0..n)
        .map(|x| {
            let mut b = Bits::empty(n);
            for y in (0..n).filter(|&y| y != x && !g.has_edge(x, y)) {
                b.set(y);
            }
            b
        })
        .collect();
    let s = Search {
        free,
        best: AtomicUsize::new(0),
        found: Mutex::new(Vec::new()),
        nodes: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
        all: opts.enumerate_all,
        budget: opts.node_budget,
    };
    let (root, mut cand) = match opts.through_vertex {
        Some(v) => (vec![v], s.free[v].clone()),
        None => {
            let mut all = Bits::empty(n);
            (0..n).for_each(|x| all.set(x));
            (Vec::new(), all)
        }
    };
    if n > 0 && cand.is_empty() {
        s.record(&root);
    }
    let firsts: Vec<usize> = (0..n).filter(|&u| cand.get(u)).collect();
    let tasks: Vec<(usize, Bits)> = firsts
        .iter()
        .map(|&u| {
            let t = (u, cand.and(&s.free[u]));
            cand.clear(u);
            t
        })
        .collect();
    par::map(&tasks, |(u, p)| {
        let mut r = root.clone();
        r.push(*u);
        s.expand(&mut r, p.clone());
    });
    let mut maximum: Vec<Vec<usize>> = s.found.into_inner().expect("search lock");
    for m in maximum.iter_mut() {
        m.sort_unstable();
    }
    maximum.sort();
    maximum.dedup();
    if !opts.enumerate_all {
        maximum.truncate(1);
    }
    CocliqueSearch {
        alpha: s.best.into_inner(),
        maximum,
        complete: !s.aborted.into_inner(),
        nodes: s.nodes.into_inner(),
    }
}
