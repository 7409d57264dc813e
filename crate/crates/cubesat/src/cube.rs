//! The hypercube `Q_n`, its vertices, edges, subcubes and subgraphs.
//!
//! Vertices of `Q_n` are the integers `0..2^n`; bit `i-1` of a vertex is its
//! coordinate `i`. Two vertices are adjacent when they differ in exactly one
//! bit, so an edge is identified by its lower endpoint (the one with the
//! toggled bit clear) plus a direction in `1..=n`. Subcubes are words over
//! `{0,1,*}`: a mask of free (starred) coordinates and the values of the
//! fixed ones.

use crate::bits::BitVec;
use crate::Error;

/// A vertex of `Q_n`, `0 <= v < 2^n`.
pub type Vertex = u32;

/// Bit for coordinate `dir` (1-based).
#[inline]
pub fn coord_bit(dir: u32) -> u32 {
    1 << (dir - 1)
}

/// Number of 1-coordinates of a vertex.
#[inline]
pub fn vertex_weight(v: Vertex) -> u32 {
    v.count_ones()
}

/// A validated cube dimension, `1 <= n <= n_max()`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Dim(u32);

impl Dim {
    pub fn new(n: u32) -> Result<Dim, Error> {
        let max = crate::n_max();
        if n == 0 || n > max {
            return Err(Error::DimensionOutOfRange { n, max });
        }
        Ok(Dim(n))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// `2^n`.
    #[inline]
    pub fn vertex_count(self) -> usize {
        1usize << self.0
    }

    /// `n * 2^(n-1)`, the number of edges of the full cube.
    #[inline]
    pub fn total_edges(self) -> u64 {
        (self.0 as u64) << (self.0 - 1)
    }

    /// Mask with the low `n` bits set.
    #[inline]
    pub fn vertex_mask(self) -> u32 {
        ((1u64 << self.0) - 1) as u32
    }
}

/// An edge of `Q_n` in canonical form: `base` has bit `dir - 1` clear and the
/// other endpoint is `base ^ coord_bit(dir)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    pub base: Vertex,
    pub dir: u32,
}

impl Edge {
    /// Canonical edge through `v` along `dir`.
    #[inline]
    pub fn new(v: Vertex, dir: u32) -> Edge {
        Edge {
            base: v & !coord_bit(dir),
            dir,
        }
    }

    /// Canonical edge between two adjacent vertices.
    ///
    /// Panics if `u` and `v` do not differ in exactly one coordinate.
    pub fn between(u: Vertex, v: Vertex) -> Edge {
        let diff = u ^ v;
        assert_eq!(diff.count_ones(), 1, "vertices are not adjacent");
        Edge::new(u, diff.trailing_zeros() + 1)
    }

    #[inline]
    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.base, self.base ^ coord_bit(self.dir))
    }

    /// The edge as a subcube pattern with a single star.
    pub fn to_subcube(self) -> Subcube {
        Subcube {
            free_mask: coord_bit(self.dir),
            values: self.base,
        }
    }
}

/// A subcube of `Q_n` as an element of `{0,1,*}^n`: `free_mask` marks the
/// starred coordinates, `values` holds the fixed coordinates (and is zero on
/// the free ones).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Subcube {
    pub free_mask: u32,
    pub values: u32,
}

impl Subcube {
    pub fn new(free_mask: u32, values: u32) -> Subcube {
        debug_assert_eq!(values & free_mask, 0);
        Subcube {
            free_mask,
            values: values & !free_mask,
        }
    }

    /// Dimension of the subcube (number of stars).
    #[inline]
    pub fn dim(self) -> u32 {
        self.free_mask.count_ones()
    }

    pub fn contains_vertex(self, v: Vertex) -> bool {
        v & !self.free_mask == self.values
    }

    /// Vertices of the subcube, ascending.
    pub fn vertices(self) -> impl Iterator<Item = Vertex> {
        submasks(self.free_mask).map(move |s| self.values | s)
    }

    /// The `m * 2^(m-1)` edges of the subcube, in canonical form.
    pub fn edges(self) -> Vec<Edge> {
        let m = self.dim();
        let mut out = Vec::with_capacity((m as usize) << m.saturating_sub(1));
        let mut dirs = self.free_mask;
        while dirs != 0 {
            let bit = dirs & dirs.wrapping_neg();
            let dir = bit.trailing_zeros() + 1;
            for s in submasks(self.free_mask & !bit) {
                out.push(Edge {
                    base: self.values | s,
                    dir,
                });
            }
            dirs &= dirs - 1;
        }
        out
    }

    /// Rendering with coordinate 1 leftmost, e.g. `(*,*,0)` in `Q_3` is `**0`.
    pub fn pattern_string(self, n: u32) -> String {
        (1..=n)
            .map(|d| {
                if self.free_mask & coord_bit(d) != 0 {
                    '*'
                } else if self.values & coord_bit(d) != 0 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }
}

/// All submasks of `mask`, ascending, starting with 0.
pub fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut cur = Some(0u32);
    std::iter::from_fn(move || {
        let s = cur?;
        let next = s.wrapping_sub(mask) & mask;
        cur = if next == 0 { None } else { Some(next) };
        Some(s)
    })
}

/// Streams every `m`-dimensional subcube of `Q_n` exactly once;
/// `C(n,m) * 2^(n-m)` patterns in total.
pub fn subcubes(n: Dim, m: u32) -> Result<impl Iterator<Item = Subcube>, Error> {
    if m > n.get() {
        return Err(Error::SubcubeDimension { m, n: n.get() });
    }
    let full = n.vertex_mask();
    Ok(masks_of_weight(n.get(), m).flat_map(move |free| {
        submasks(full & !free).map(move |values| Subcube { free_mask: free, values })
    }))
}

/// All `n`-bit words with exactly `m` bits set, ascending (Gosper's hack).
pub fn masks_of_weight(n: u32, m: u32) -> impl Iterator<Item = u32> {
    let limit = 1u64 << n;
    let mut cur = if m == 0 { None } else { Some((1u32 << m) - 1) };
    let mut emitted_zero = m != 0;
    std::iter::from_fn(move || {
        if !emitted_zero {
            emitted_zero = true;
            return Some(0);
        }
        let v = cur?;
        if (v as u64) >= limit {
            return None;
        }
        // Gosper: next word with the same popcount.
        let c = v & v.wrapping_neg();
        let r = v + c;
        cur = ((r ^ v) >> 2).checked_div(c).map(|q| q | r);
        Some(v)
    })
}

/// `n choose k`.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k as u64 {
        acc = acc * (n as u64 - i) / (i + 1);
    }
    acc
}

/// A spanning subgraph of `Q_n`, stored as one bitvector per direction with a
/// bit at each base vertex of a present edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubeGraph {
    dim: Dim,
    dirs: Vec<BitVec>,
    edge_count: u64,
}

impl CubeGraph {
    pub fn empty(dim: Dim) -> CubeGraph {
        let n = dim.get() as usize;
        CubeGraph {
            dim,
            dirs: (0..n).map(|_| BitVec::zeros(dim.vertex_count())).collect(),
            edge_count: 0,
        }
    }

    pub fn full(dim: Dim) -> CubeGraph {
        let mut g = CubeGraph::empty(dim);
        for dir in 1..=dim.get() {
            for v in 0..dim.vertex_count() as u32 {
                if v & coord_bit(dir) == 0 {
                    g.insert(Edge { base: v, dir });
                }
            }
        }
        g
    }

    pub fn from_edges(dim: Dim, edges: impl IntoIterator<Item = Edge>) -> CubeGraph {
        let mut g = CubeGraph::empty(dim);
        for e in edges {
            g.insert(e);
        }
        g
    }

    #[inline]
    pub fn dim(&self) -> Dim {
        self.dim
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.dim.get()
    }

    #[inline]
    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    /// `e(G) / e(Q_n)`.
    pub fn density(&self) -> f64 {
        self.edge_count as f64 / self.dim.total_edges() as f64
    }

    #[inline]
    pub fn has_edge(&self, e: Edge) -> bool {
        debug_assert!(e.dir >= 1 && e.dir <= self.n());
        debug_assert_eq!(e.base & coord_bit(e.dir), 0);
        self.dirs[(e.dir - 1) as usize].get(e.base as usize)
    }

    /// Inserts an edge; returns whether it was new.
    pub fn insert(&mut self, e: Edge) -> bool {
        debug_assert!(e.dir >= 1 && e.dir <= self.n());
        let bv = &mut self.dirs[(e.dir - 1) as usize];
        debug_assert_eq!(e.base & coord_bit(e.dir), 0);
        if bv.get(e.base as usize) {
            return false;
        }
        bv.set(e.base as usize);
        self.edge_count += 1;
        true
    }

    /// Removes an edge; returns whether it was present.
    pub fn remove(&mut self, e: Edge) -> bool {
        let bv = &mut self.dirs[(e.dir - 1) as usize];
        if !bv.get(e.base as usize) {
            return false;
        }
        bv.clear(e.base as usize);
        self.edge_count -= 1;
        true
    }

    /// Present edges sorted by `(base, dir)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count as usize);
        for dir in 1..=self.n() {
            for base in self.dirs[(dir - 1) as usize].iter_ones() {
                out.push(Edge {
                    base: base as Vertex,
                    dir,
                });
            }
        }
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: Vertex) -> u32 {
        (1..=self.n())
            .filter(|&d| self.has_edge(Edge::new(v, d)))
            .count() as u32
    }

    /// Number of edges lying along direction `dir`.
    pub fn edges_in_dir(&self, dir: u32) -> u64 {
        self.dirs[(dir - 1) as usize].count_ones()
    }

    /// Whether every edge of the subcube is present.
    pub fn contains_subcube(&self, p: Subcube) -> bool {
        let mut dirs = p.free_mask;
        while dirs != 0 {
            let bit = dirs & dirs.wrapping_neg();
            let dir = bit.trailing_zeros() + 1;
            for s in submasks(p.free_mask & !bit) {
                if !self.has_edge(Edge {
                    base: p.values | s,
                    dir,
                }) {
                    return false;
                }
            }
            dirs &= dirs - 1;
        }
        true
    }
}

/// An automorphism of `Q_n`: a coordinate permutation followed by an XOR
/// translation. These generate the full automorphism group of the cube.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Automorphism {
    /// `perm[i]` is the image of direction `i + 1` (values in `1..=n`).
    perm: Vec<u32>,
    shift: Vertex,
}

impl Automorphism {
    pub fn new(perm: Vec<u32>, shift: Vertex) -> Result<Automorphism, Error> {
        let n = perm.len() as u32;
        let mut seen = vec![false; n as usize + 1];
        for &p in &perm {
            if p == 0 || p > n || seen[p as usize] {
                return Err(Error::InvalidPermutation);
            }
            seen[p as usize] = true;
        }
        Ok(Automorphism { perm, shift })
    }

    pub fn identity(dim: Dim) -> Automorphism {
        Automorphism {
            perm: (1..=dim.get()).collect(),
            shift: 0,
        }
    }

    pub fn random<R: rand::Rng>(dim: Dim, rng: &mut R) -> Automorphism {
        use rand::seq::SliceRandom;
        let mut perm: Vec<u32> = (1..=dim.get()).collect();
        perm.shuffle(rng);
        let shift = rng.random_range(0..dim.vertex_count() as u64) as Vertex;
        Automorphism { perm, shift }
    }

    pub fn shift(&self) -> Vertex {
        self.shift
    }

    pub fn apply_vertex(&self, v: Vertex) -> Vertex {
        let mut w = 0;
        for (i, &p) in self.perm.iter().enumerate() {
            if v & (1 << i) != 0 {
                w |= coord_bit(p);
            }
        }
        w ^ self.shift
    }

    pub fn apply_edge(&self, e: Edge) -> Edge {
        let (u, _) = e.endpoints();
        Edge::new(self.apply_vertex(u), self.perm[(e.dir - 1) as usize])
    }
}

/// Image of a graph under an automorphism. Preserves the edge count and the
/// number of fully-present subcubes of every dimension.
pub fn apply_automorphism(g: &CubeGraph, a: &Automorphism) -> CubeGraph {
    let mut out = CubeGraph::empty(g.dim());
    for e in g.edges() {
        out.insert(a.apply_edge(e));
    }
    out
}

/// Assembles a graph on `Q_{n+k}` from the product view `Q_n □ Q_k`.
///
/// `inner[u]` is the graph placed in the principle `Q_n` at outer vertex `u`
/// (`None` leaves it empty); each `(outer_edge, inner_vertex)` pair in
/// `external` becomes the edge joining the copies of that vertex in the two
/// adjacent principle cubes. Internal edges keep directions `1..=n`, external
/// edges get directions `n+1..=n+k`.
pub fn compose_product(
    inner_dim: Dim,
    outer_dim: Dim,
    inner: &[Option<&CubeGraph>],
    external: &[(Edge, Vertex)],
) -> Result<CubeGraph, Error> {
    let n = inner_dim.get();
    let k = outer_dim.get();
    if inner.len() != outer_dim.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: outer_dim.vertex_count() as u32,
            got: inner.len() as u32,
        });
    }
    let dim = Dim::new(n + k)?;
    let mut out = CubeGraph::empty(dim);
    for (u, g) in inner.iter().enumerate() {
        let Some(g) = g else { continue };
        if g.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: g.n(),
            });
        }
        let offset = (u as u32) << n;
        for e in g.edges() {
            out.insert(Edge {
                base: e.base | offset,
                dir: e.dir,
            });
        }
    }
    for &(outer_edge, v) in external {
        if v >= inner_dim.vertex_count() as u32 || outer_edge.dir > k {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v.max(outer_edge.dir),
            });
        }
        out.insert(Edge {
            base: v | (outer_edge.base << n),
            dir: n + outer_edge.dir,
        });
    }
    Ok(out)
}

/// Splits vertices of `Q_n` into consecutive coordinate blocks
/// `(v_1 | v_2 | ... | v_t)` with declared lengths.
#[derive(Clone, Debug)]
pub struct Partition {
    lens: Vec<u32>,
    offsets: Vec<u32>,
}

impl Partition {
    pub fn new(lens: Vec<u32>) -> Partition {
        let mut offsets = Vec::with_capacity(lens.len());
        let mut acc = 0;
        for &l in &lens {
            offsets.push(acc);
            acc += l;
        }
        Partition { lens, offsets }
    }

    pub fn total(&self) -> u32 {
        self.offsets.last().copied().unwrap_or(0) + self.lens.last().copied().unwrap_or(0)
    }

    pub fn parts(&self) -> usize {
        self.lens.len()
    }

    /// Extracts part `i` (0-based).
    #[inline]
    pub fn part(&self, v: Vertex, i: usize) -> u32 {
        (v >> self.offsets[i]) & (((1u64 << self.lens[i]) - 1) as u32)
    }

    /// Part index containing direction `dir` (1-based direction, 0-based part).
    pub fn part_of_dir(&self, dir: u32) -> usize {
        let c = dir - 1;
        for (i, (&off, &len)) in self.offsets.iter().zip(&self.lens).enumerate() {
            if c < off + len {
                debug_assert!(c >= off);
                return i;
            }
        }
        panic!("direction {dir} outside partition of length {}", self.total());
    }

    pub fn assemble(&self, parts: &[u32]) -> Vertex {
        debug_assert_eq!(parts.len(), self.lens.len());
        parts
            .iter()
            .zip(&self.offsets)
            .fold(0, |acc, (&p, &off)| acc | (p << off))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(n: u32) -> Dim {
        Dim::new(n).unwrap()
    }

    #[test]
    fn edge_endpoints_toggle_one_coordinate() {
        let e = Edge::new(0b000, 1);
        assert_eq!(e.endpoints(), (0b000, 0b001));
        let e = Edge::new(0b010, 3);
        assert_eq!(e.endpoints(), (0b010, 0b110));
        // canonical base regardless of which endpoint is given
        assert_eq!(Edge::new(0b110, 3), Edge::new(0b010, 3));
    }

    #[test]
    fn endpoint_weights_differ_by_one() {
        for v in 0..16u32 {
            for d in 1..=4 {
                let (a, b) = Edge::new(v, d).endpoints();
                assert_eq!(
                    (vertex_weight(a) as i32 - vertex_weight(b) as i32).abs(),
                    1
                );
            }
        }
    }

    #[test]
    fn weight_examples() {
        assert_eq!(vertex_weight(0), 0);
        assert_eq!(vertex_weight(0b1111), 4);
        assert_eq!(vertex_weight(0b0101), 2);
    }

    #[test]
    fn subcube_counts_match_binomial_formula() {
        for n in 1..=6u32 {
            for m in 0..=n {
                let count = subcubes(dim(n), m).unwrap().count() as u64;
                assert_eq!(count, binomial(n, m) << (n - m), "n={n} m={m}");
            }
        }
        assert_eq!(subcubes(dim(3), 2).unwrap().count(), 6);
        assert_eq!(subcubes(dim(4), 2).unwrap().count(), 24);
        assert_eq!(subcubes(dim(4), 0).unwrap().count(), 16);
    }

    #[test]
    fn subcube_enumeration_is_unique() {
        let all: Vec<Subcube> = subcubes(dim(5), 2).unwrap().collect();
        let set: std::collections::HashSet<_> = all.iter().copied().collect();
        assert_eq!(all.len(), set.len());
    }

    #[test]
    fn subcube_edges_have_expected_count_and_form() {
        let p = Subcube::new(0b011, 0b100); // (*,*,1) in Q_3
        let edges = p.edges();
        assert_eq!(edges.len(), 4);
        for e in &edges {
            assert_eq!(e.base & coord_bit(e.dir), 0);
            assert!(p.contains_vertex(e.base));
        }
        let single = Subcube::new(0b100, 0b001);
        assert_eq!(single.edges().len(), 1);
        let full = Subcube::new(0b1111, 0);
        assert_eq!(full.edges().len(), 4 << 3); // m * 2^(m-1)
    }

    #[test]
    fn full_graph_has_all_edges() {
        let g = CubeGraph::full(dim(4));
        assert_eq!(g.edge_count(), 32);
        assert_eq!(g.density(), 1.0);
        for v in 0..16u32 {
            assert_eq!(g.degree(v), 4);
        }
    }

    #[test]
    fn identity_automorphism_fixes_graph() {
        let g = CubeGraph::full(dim(3));
        let a = Automorphism::identity(dim(3));
        assert_eq!(apply_automorphism(&g, &a), g);
    }

    #[test]
    fn shift_translates_edges() {
        let a = Automorphism::new(vec![1, 2, 3], 0b001).unwrap();
        let e = Edge::new(0b000, 2);
        assert_eq!(a.apply_edge(e), Edge::new(0b001, 2));
    }

    #[test]
    fn automorphism_preserves_edge_count() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut g = CubeGraph::empty(dim(4));
        for v in 0..16u32 {
            for d in 1..=4 {
                if (v.wrapping_mul(2654435761).rotate_left(d)) & 4 == 0 {
                    g.insert(Edge::new(v, d));
                }
            }
        }
        for _ in 0..20 {
            let a = Automorphism::random(dim(4), &mut rng);
            let h = apply_automorphism(&g, &a);
            assert_eq!(h.edge_count(), g.edge_count());
        }
    }

    #[test]
    fn product_of_two_full_q1_is_q2() {
        let d1 = dim(1);
        let inner = CubeGraph::full(d1);
        let outer_edge = Edge::new(0, 1);
        let g = compose_product(
            d1,
            d1,
            &[Some(&inner), Some(&inner)],
            &[(outer_edge, 0), (outer_edge, 1)],
        )
        .unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g, CubeGraph::full(dim(2)));
    }

    #[test]
    fn product_with_empty_parts_is_empty() {
        let g = compose_product(dim(2), dim(2), &[None, None, None, None], &[]).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.n(), 4);
    }

    #[test]
    fn product_edge_count_is_sum_of_parts() {
        let d2 = dim(2);
        let mut a = CubeGraph::empty(d2);
        a.insert(Edge::new(0, 1));
        a.insert(Edge::new(0, 2));
        let b = CubeGraph::full(d2);
        let ext = vec![(Edge::new(0, 1), 0), (Edge::new(0, 1), 3)];
        let g = compose_product(d2, dim(1), &[Some(&a), Some(&b)], &ext).unwrap();
        assert_eq!(
            g.edge_count(),
            a.edge_count() + b.edge_count() + ext.len() as u64
        );
        // projection recovers each inner graph
        for e in a.edges() {
            assert!(g.has_edge(e));
        }
        for e in b.edges() {
            assert!(g.has_edge(Edge {
                base: e.base | (1 << 2),
                dir: e.dir
            }));
        }
    }

    #[test]
    fn partition_splits_and_reassembles() {
        let p = Partition::new(vec![3, 3, 2]);
        assert_eq!(p.total(), 8);
        let v = 0b10_110_101;
        assert_eq!(p.part(v, 0), 0b101);
        assert_eq!(p.part(v, 1), 0b110);
        assert_eq!(p.part(v, 2), 0b10);
        assert_eq!(p.assemble(&[0b101, 0b110, 0b10]), v);
        assert_eq!(p.part_of_dir(1), 0);
        assert_eq!(p.part_of_dir(3), 0);
        assert_eq!(p.part_of_dir(4), 1);
        assert_eq!(p.part_of_dir(7), 2);
    }
}
