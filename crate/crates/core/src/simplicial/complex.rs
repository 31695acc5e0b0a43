use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use super::ComplexError;

/// Highest simplex dimension handled by this crate.
pub const MAX_DIM: usize = 3;

/// Strictly increasing vertex tuple.
pub type Simplex = Vec<u32>;

/// A finite simplicial complex on vertices `0..n`, with the vertex order used
/// as the global order for cup products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedComplex {
    vertex_count: usize,
    simplices: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl OrderedComplex {
    /// Closes `facets` under faces. Every vertex `0..vertex_count` is included.
    pub fn from_facets<I>(vertex_count: usize, facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = Simplex>,
    {
        let mut by_dim: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); MAX_DIM + 1];
        for v in 0..vertex_count {
            by_dim[0].insert(vec![v as u32]);
        }
        for mut f in facets {
            f.sort_unstable();
            if f.is_empty() {
                continue;
            }
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(ComplexError::RepeatedVertex(f));
            }
            if *f.last().unwrap() as usize >= vertex_count {
                return Err(ComplexError::VertexOutOfRange(f));
            }
            let dim = f.len() - 1;
            if dim > MAX_DIM {
                return Err(ComplexError::DimensionTooHigh(dim));
            }
            if by_dim[dim].contains(&f) {
                continue;
            }
            // all nonempty subsets
            let k = f.len();
            for mask in 1u32..(1 << k) {
                let face: Simplex = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                by_dim[face.len() - 1].insert(face);
            }
        }
        while by_dim.len() > 1 && by_dim.last().is_some_and(BTreeSet::is_empty) {
            by_dim.pop();
        }
        if vertex_count == 0 {
            by_dim.clear();
        }
        let simplices: Vec<Vec<Simplex>> = by_dim.into_iter().map(|s| s.into_iter().collect()).collect();
        let index =
            simplices.iter().map(|level| level.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()).collect();
        Ok(Self { vertex_count, simplices, index })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.simplices.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(k, s)| if k % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    pub fn index_of(&self, s: &[u32]) -> Option<usize> {
        let k = s.len().checked_sub(1)?;
        self.index.get(k)?.get(s).copied()
    }

    pub fn contains(&self, s: &[u32]) -> bool {
        self.index_of(s).is_some()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        a != b && self.contains(&[a.min(b), a.max(b)])
    }

    /// Simplices that are not a face of any other simplex.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut faces: BTreeSet<Simplex> = BTreeSet::new();
        for level in self.simplices.iter().skip(1) {
            for s in level {
                for skip in 0..s.len() {
                    let mut f = s.clone();
                    f.remove(skip);
                    faces.insert(f);
                }
            }
        }
        self.simplices.iter().flatten().filter(|s| !faces.contains(*s)).cloned().collect()
    }

    /// Sorted neighbour lists of the 1-skeleton.
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in self.simplices(1) {
            adj[e[0] as usize].push(e[1]);
            adj[e[1] as usize].push(e[0]);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0u32];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Breadth-first shortest edge path, neighbours visited in increasing order.
    pub fn shortest_path(&self, from: u32, to: u32) -> Option<Vec<u32>> {
        let adj = self.adjacency();
        let mut prev = vec![u32::MAX; self.vertex_count];
        let mut queue = std::collections::VecDeque::from([from]);
        prev[from as usize] = from;
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur as usize];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &w in &adj[v as usize] {
                if prev[w as usize] == u32::MAX {
                    prev[w as usize] = v;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Checks face closure and strict ordering of every stored simplex.
    pub fn check_invariants(&self) -> Result<(), ComplexError> {
        for (k, level) in self.simplices.iter().enumerate() {
            for s in level {
                if s.len() != k + 1 || s.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(ComplexError::Invariant(format!("simplex {s:?} not strictly increasing")));
                }
                if s.iter().any(|&v| v as usize >= self.vertex_count) {
                    return Err(ComplexError::VertexOutOfRange(s.clone()));
                }
                if k > 0 {
                    for skip in 0..s.len() {
                        let mut f = s.clone();
                        f.remove(skip);
                        if !self.contains(&f) {
                            return Err(ComplexError::Invariant(format!("face {f:?} of {s:?} missing")));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// One simplex per line, grouped by dimension, vertices space-separated.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (k, level) in self.simplices.iter().enumerate() {
            writeln!(out, "# dim {k}: {}", level.len()).unwrap();
            for s in level {
                let parts: Vec<String> = s.iter().map(u32::to_string).collect();
                writeln!(out, "{}", parts.join(" ")).unwrap();
            }
        }
        out
    }
}

/// A closed edge path, stored as its vertex cycle `v0 v1 ... v(k-1)` with the
/// edge `v(k-1) v0` implied.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeLoop {
    vertices: Vec<u32>,
}

impl EdgeLoop {
    pub fn new(vertices: Vec<u32>, complex: &OrderedComplex) -> Result<Self, ComplexError> {
        let l = Self { vertices };
        l.check(complex)?;
        Ok(l)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Oriented edges `(from, to)`.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn check(&self, complex: &OrderedComplex) -> Result<(), ComplexError> {
        if self.vertices.len() < 2 {
            return Err(ComplexError::BadLoop("loop needs at least two vertices".into()));
        }
        for (a, b) in self.edges() {
            if !complex.has_edge(a, b) {
                return Err(ComplexError::BadLoop(format!("edge {a}-{b} not in complex")));
            }
        }
        Ok(())
    }

    pub fn map_vertices(&self, f: impl Fn(u32) -> u32) -> EdgeLoop {
        EdgeLoop { vertices: self.vertices.iter().map(|&v| f(v)).collect() }
    }
}

/// A vertex permutation of order at most two that maps simplices to simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialInvolution {
    vertex_map: Vec<u32>,
}

impl SimplicialInvolution {
    pub fn new(vertex_map: Vec<u32>, complex: &OrderedComplex) -> Result<Self, ComplexError> {
        if vertex_map.len() != complex.vertex_count() {
            return Err(ComplexError::BadInvolution("vertex map has wrong length".into()));
        }
        for (v, &w) in vertex_map.iter().enumerate() {
            if w as usize >= vertex_map.len() || vertex_map[w as usize] as usize != v {
                return Err(ComplexError::BadInvolution(format!("vertex {v} is not mapped back")));
            }
        }
        let inv = Self { vertex_map };
        for k in 0..=complex.dim().unwrap_or(0) {
            for s in complex.simplices(k) {
                if !complex.contains(&inv.apply(s)) {
                    return Err(ComplexError::BadInvolution(format!("image of {s:?} is not a simplex")));
                }
            }
        }
        Ok(inv)
    }

    pub fn image(&self, v: u32) -> u32 {
        self.vertex_map[v as usize]
    }

    pub fn vertex_map(&self) -> &[u32] {
        &self.vertex_map
    }

    /// Sorted image of a simplex.
    pub fn apply(&self, s: &[u32]) -> Simplex {
        let mut out: Simplex = s.iter().map(|&v| self.image(v)).collect();
        out.sort_unstable();
        out
    }

    pub fn is_free_on_vertices(&self) -> bool {
        self.vertex_map.iter().enumerate().all(|(v, &w)| v as u32 != w)
    }
}

/// A complex together with named marked loops and an optional free involution.
#[derive(Clone, Debug)]
pub struct MarkedComplex {
    pub complex: OrderedComplex,
    pub loops: BTreeMap<String, EdgeLoop>,
    pub involution: Option<SimplicialInvolution>,
}

impl MarkedComplex {
    pub fn plain(complex: OrderedComplex) -> Self {
        Self { complex, loops: BTreeMap::new(), involution: None }
    }

    pub fn loop_named(&self, name: &str) -> Option<&EdgeLoop> {
        self.loops.get(name)
    }
}
