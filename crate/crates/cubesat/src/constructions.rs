//! The explicit graph families: the residue-class base family, the coloured
//! density-increment step and its iteration, bounded-average-degree
//! semi-saturated graphs, `Q_2`-saturated graphs built around the claim
//! graph `H`, and weakly saturated spanning trees.

use crate::codes::{LinearCode, ParityCheckMatrix};
use crate::cube::{
    compose_product, coord_bit, subcubes, Automorphism, CubeGraph, Dim, Edge, Partition, Vertex,
};
use crate::verify::{creates_copy_within, greedy_extend, verdict};
use crate::{rng, Error};
use rand::seq::SliceRandom;

/// Order in which greedy completion considers its edge set. The lemma allows
/// any order; `Lex` is the reproducible default and `Shuffled` permutes each
/// batch with the seeded stream.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum GreedyOrder {
    #[default]
    Lex,
    Shuffled {
        seed: u64,
    },
}

impl GreedyOrder {
    fn arrange(self, mut edges: Vec<Edge>) -> Vec<Edge> {
        edges.sort_unstable();
        if let GreedyOrder::Shuffled { seed } = self {
            edges.shuffle(&mut rng::stream(seed, 0xF00D));
        }
        edges
    }
}

/// A family `A_1..A_k` of `Q_m`-saturated graphs on `Q_n` that jointly
/// contain every `Q_{m-1}` lying along the first `n0` directions.
#[derive(Clone, Debug)]
pub struct CoveredFamily {
    pub dim: Dim,
    pub m: u32,
    pub n0: u32,
    pub graphs: Vec<CubeGraph>,
}

impl CoveredFamily {
    pub fn k(&self) -> u32 {
        self.graphs.len() as u32
    }

    /// Whether every `Q_{m-1}` along directions `1..=n0` lies in some member.
    pub fn covers_prefix(&self) -> bool {
        let prefix: u32 = ((1u64 << self.n0) - 1) as u32;
        subcubes(self.dim, self.m - 1)
            .expect("m - 1 <= n")
            .filter(|p| p.free_mask & !prefix == 0)
            .all(|p| self.graphs.iter().any(|g| g.contains_subcube(p)))
    }
}

/// The base family `A_1..A_{m+1}` on `Q_{n0}`: `A_i` starts from all edges
/// whose lower endpoint has weight in `{i, ..., i+m-2} mod (m+1)` (which is
/// `Q_m`-free and contains every `Q_{m-1}` whose bottom vertex has weight
/// `i mod (m+1)`), then is completed greedily to a saturated graph.
pub fn base_family(n0: Dim, m: u32, order: GreedyOrder) -> Result<CoveredFamily, Error> {
    if m < 2 || n0.get() < m {
        return Err(Error::Unsupported(format!(
            "base family needs m >= 2 and n0 >= m, got m={m}, n0={}",
            n0.get()
        )));
    }
    let all = order.arrange(CubeGraph::full(n0).edges());
    let modulus = m + 1;
    let mut graphs = Vec::with_capacity(modulus as usize);
    for i in 1..=modulus {
        let residues: Vec<u32> = (0..m - 1).map(|j| (i + j) % modulus).collect();
        let initial = CubeGraph::from_edges(
            n0,
            all.iter()
                .copied()
                .filter(|e| residues.contains(&(e.base.count_ones() % modulus))),
        );
        graphs.push(greedy_extend(&initial, m, &all)?);
    }
    Ok(CoveredFamily {
        dim: n0,
        m,
        n0: n0.get(),
        graphs,
    })
}

/// A `(k+1)`-colouring of `Q_k` with colours `0..=k`. Colour 0 is a coset of
/// an approximate Hamming code (so it has minimum distance 3) and each
/// neighbour `x + e_j` of a colour-0 vertex `x` has colour `j`.
#[derive(Clone, Debug)]
pub struct CubeColouring {
    pub k: u32,
    pub shift_index: u32,
    colours: Vec<u8>,
}

impl CubeColouring {
    #[inline]
    pub fn colour(&self, v: Vertex) -> u32 {
        self.colours[v as usize] as u32
    }

    /// Vertices of colour 0.
    pub fn zero_class(&self) -> Vec<Vertex> {
        (0..self.colours.len() as u32)
            .filter(|&v| self.colour(v) == 0)
            .collect()
    }
}

/// The colouring built from the code coset `C_0 + e_shift_index`
/// (`shift_index` 0 means the unshifted code).
///
/// Vertices not dominated by the coset get a colour as follows: in the
/// colouring of shift `i >= 1` they get colour `i`, and in the unshifted
/// colouring the smallest colour they would otherwise never receive (falling
/// back to `((v + shift) mod k) + 1` when no colour is missing). Under this
/// rule, across the `k+1` colourings every vertex receives every non-zero
/// colour at least once, which is what lets the shifted families keep the
/// coverage property.
pub fn increment_colouring(k: u32, shift_index: u32) -> Result<CubeColouring, Error> {
    if k < 2 || shift_index > k {
        return Err(Error::Unsupported(format!(
            "colouring needs k >= 2 and shift <= k, got k={k}, shift={shift_index}"
        )));
    }
    let code = if k >= 3 {
        LinearCode::approximate(k)?
    } else {
        LinearCode::from_matrix(ParityCheckMatrix::new(2, vec![1, 2])?)
    };
    let r = code.redundancy();
    // column value -> colour; columns are the binary representations of 1..=k
    let mut colour_of_syndrome = vec![0u8; 1 << r];
    let mut is_column = vec![false; 1 << r];
    for j in 1..=k {
        let col = code.matrix().column(j) as usize;
        colour_of_syndrome[col] = j as u8;
        is_column[col] = true;
    }
    let shift_col = if shift_index == 0 {
        0
    } else {
        code.matrix().column(shift_index)
    };

    let colours = (0..1u32 << k)
        .map(|v| {
            let s = code.syndrome(v) ^ shift_col;
            if s == 0 {
                0
            } else if is_column[s as usize] {
                colour_of_syndrome[s as usize]
            } else if shift_index >= 1 {
                shift_index as u8
            } else {
                // shift 0 and undominated: the smallest colour this vertex
                // misses across all dominated slots
                let base = code.syndrome(v);
                (1..=k)
                    .find(|&j| {
                        let t = (base ^ code.matrix().column(j)) as usize;
                        t != 0 && !is_column[t]
                    })
                    .unwrap_or(((v as u64 + shift_index as u64) % k as u64 + 1) as u32)
                    as u8
            }
        })
        .collect();
    Ok(CubeColouring {
        k,
        shift_index,
        colours,
    })
}

/// An absent edge of a colour-0 cube is bad when no `Q_{m-1}` created by
/// adding it lies entirely along the first `n0` directions.
pub fn bad_edges(g: &CubeGraph, m: u32, n0: u32) -> Vec<Edge> {
    let prefix: u32 = ((1u64 << n0) - 1) as u32;
    let mut out = Vec::new();
    for dir in 1..=g.n() {
        let dbit = coord_bit(dir);
        for base in 0..g.dim().vertex_count() as u32 {
            if base & dbit != 0 {
                continue;
            }
            let e = Edge { base, dir };
            if !g.has_edge(e) && !creates_copy_within(g, e, m - 1, prefix) {
                out.push(e);
            }
        }
    }
    out
}

/// Best-of-`trials` random automorphism image of `g`, minimising the number
/// of bad edges. `trials == 0` requests an exhaustive sweep over coordinate
/// permutations (only for `n <= 6`).
fn best_image(
    g: &CubeGraph,
    m: u32,
    n0: u32,
    trials: u32,
    seed: u64,
) -> Result<(CubeGraph, usize), Error> {
    let dim = g.dim();
    let mut best: Option<(usize, CubeGraph)> = None;
    let mut consider = |img: CubeGraph| {
        let bad = bad_edges(&img, m, n0).len();
        if best.as_ref().is_none_or(|(b, _)| bad < *b) {
            best = Some((bad, img));
        }
    };
    if trials == 0 {
        if dim.get() > 6 {
            return Err(Error::Unsupported(
                "exhaustive automorphism sweep is capped at n = 6".into(),
            ));
        }
        let mut perm: Vec<u32> = (1..=dim.get()).collect();
        permutations(&mut perm, 0, &mut |p| {
            let a = Automorphism::new(p.to_vec(), 0).expect("permutation is valid");
            consider(crate::cube::apply_automorphism(g, &a));
        });
    } else {
        let mut rng = rng::stream(seed, 0xA070);
        for _ in 0..trials {
            let a = Automorphism::random(dim, &mut rng);
            consider(crate::cube::apply_automorphism(g, &a));
        }
    }
    let (bad, img) = best.expect("at least one image considered");
    Ok((img, bad))
}

fn permutations(items: &mut Vec<u32>, at: usize, f: &mut impl FnMut(&[u32])) {
    if at == items.len() {
        f(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permutations(items, at + 1, f);
        items.swap(at, i);
    }
}

/// One density-increment step: from a covered family of `k` saturated graphs
/// on `Q_n` and a `Q_{m-1}`-saturated graph for the colour-0 cubes, produce a
/// covered family of `k+1` saturated graphs on `Q_{n+k}`.
///
/// For each shift index `i` in `0..=k`: principle cubes coloured `j != 0`
/// hold `A_j`, colour-0 cubes hold the best automorphism image of `g_lower`,
/// every external edge leaving a colour-0 cube is added, and greedy
/// completion runs over all external edges followed by the bad edges inside
/// colour-0 cubes.
pub fn increment_step(
    fam: &CoveredFamily,
    g_lower: &CubeGraph,
    trials: u32,
    seed: u64,
    order: GreedyOrder,
) -> Result<CoveredFamily, Error> {
    let k = fam.k();
    let n = fam.dim.get();
    if g_lower.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: g_lower.n(),
        });
    }
    if !fam.covers_prefix() {
        return Err(Error::NotCovering(fam.m - 1, fam.n0));
    }
    if !verdict(g_lower, fam.m - 1).is_saturated {
        return Err(Error::NotSaturated(fam.m - 1));
    }

    let outer = Dim::new(k)?;
    let new_dim = Dim::new(n + k)?;
    let (image, _) = best_image(g_lower, fam.m, fam.n0, trials, seed)?;
    let image_bad = bad_edges(&image, fam.m, fam.n0);
    let outer_edges = CubeGraph::full(outer).edges();

    // greedy set (i): every external edge of Q_{n+k}
    let mut externals = Vec::new();
    for oe in &outer_edges {
        for v in 0..fam.dim.vertex_count() as u32 {
            externals.push(Edge {
                base: v | (oe.base << n),
                dir: n + oe.dir,
            });
        }
    }
    let externals = order.arrange(externals);

    let mut graphs = Vec::with_capacity(k as usize + 1);
    for shift in 0..=k {
        let colouring = increment_colouring(k, shift)?;
        let inner: Vec<Option<&CubeGraph>> = (0..outer.vertex_count() as u32)
            .map(|u| match colouring.colour(u) {
                0 => Some(&image),
                j => Some(&fam.graphs[(j - 1) as usize]),
            })
            .collect();
        let ext_pairs: Vec<(Edge, Vertex)> = outer_edges
            .iter()
            .flat_map(|&oe| {
                let (a, b) = oe.endpoints();
                let touches_zero = colouring.colour(a) == 0 || colouring.colour(b) == 0;
                (0..fam.dim.vertex_count() as u32)
                    .filter(move |_| touches_zero)
                    .map(move |v| (oe, v))
            })
            .collect();
        let b = compose_product(fam.dim, outer, &inner, &ext_pairs)?;

        // greedy set (ii): bad edges inside every colour-0 cube
        let mut bads = Vec::new();
        for u in colouring.zero_class() {
            for e in &image_bad {
                bads.push(Edge {
                    base: e.base | (u << n),
                    dir: e.dir,
                });
            }
        }
        let bads = order.arrange(bads);

        let mut s_edges = externals.clone();
        s_edges.extend(bads);
        graphs.push(greedy_extend(&b, fam.m, &s_edges)?);
    }

    Ok(CoveredFamily {
        dim: new_dim,
        m: fam.m,
        n0: fam.n0,
        graphs,
    })
}

/// The iterated construction: a base family on `Q_{n0}` followed by `t`
/// increment steps, returning the sparsest saturated graph produced. For
/// `m = 1` the empty graph is already saturated.
pub fn iterate_construction(
    m: u32,
    n0: Dim,
    t: u32,
    trials: u32,
    seed: u64,
    order: GreedyOrder,
) -> Result<CubeGraph, Error> {
    if m == 0 {
        return Err(Error::Unsupported("m must be at least 1".into()));
    }
    if m == 1 {
        return Ok(CubeGraph::empty(n0));
    }
    let mut fam = base_family(n0, m, order)?;
    for step in 0..t {
        let g_lower = lower_saturated(m - 1, fam.dim, order)?;
        fam = increment_step(
            &fam,
            &g_lower,
            trials,
            seed.wrapping_add(step as u64),
            order,
        )?;
    }
    Ok(fam
        .graphs
        .into_iter()
        .min_by_key(CubeGraph::edge_count)
        .expect("family is non-empty"))
}

/// A `Q_m`-saturated graph on `Q_n` to fill colour-0 cubes with: empty for
/// `m = 1`, otherwise the sparsest member of a base family at the exact
/// dimension needed.
fn lower_saturated(m: u32, dim: Dim, order: GreedyOrder) -> Result<CubeGraph, Error> {
    iterate_construction(m, dim, 0, 0, 0, order)
}

/// The semi-saturation construction: with `n = m(2^t - 1) + r`,
/// `n0 = 2^t - 1` and `C` a Hamming code on `Q_{n0}`, take every edge with an
/// endpoint in `A = { v : some of the first m blocks of v is a codeword }`.
/// Vertices outside `A` keep degree exactly `m`.
pub fn semi_saturated(n: Dim, m: u32) -> Result<CubeGraph, Error> {
    if m < 2 || n.get() < 3 * m {
        return Err(Error::Unsupported(format!(
            "semi-saturated construction needs m >= 2 and n >= 3m, got n={}, m={m}",
            n.get()
        )));
    }
    let (t, n0, r) = split_dimension(n.get(), m);
    let code = LinearCode::hamming(t)?;
    debug_assert_eq!(code.len(), n0);

    let mut lens = vec![n0; m as usize];
    if r > 0 {
        lens.push(r);
    }
    let partition = Partition::new(lens);

    let vertex_count = n.vertex_count() as u32;
    let mut in_a = crate::bits::BitVec::zeros(vertex_count as usize);
    for v in 0..vertex_count {
        if (0..m as usize).any(|i| code.contains(partition.part(v, i))) {
            in_a.set(v as usize);
        }
    }

    let mut g = CubeGraph::empty(n);
    for dir in 1..=n.get() {
        let dbit = coord_bit(dir);
        for base in 0..vertex_count {
            if base & dbit != 0 {
                continue;
            }
            if in_a.get(base as usize) || in_a.get((base ^ dbit) as usize) {
                g.insert(Edge { base, dir });
            }
        }
    }
    Ok(g)
}

/// Largest `t` with `m (2^t - 1) <= n`; returns `(t, n0, r)` where
/// `n0 = 2^t - 1` and `r = n - m n0 < m 2^t`.
fn split_dimension(n: u32, m: u32) -> (u32, u32, u32) {
    let mut t = 1;
    while m * ((1 << (t + 1)) - 1) <= n {
        t += 1;
    }
    let n0 = (1 << t) - 1;
    (t, n0, n - m * n0)
}

/// The claim graph: a `Q_2`-free spanning subgraph `H` of `Q_{n0}` whose
/// edges all meet `C ∪ D`, where `C` is the Hamming code and
/// `D = C_1 ∪ C_2 ∪ C_3` its first three coset translates.
#[derive(Clone, Debug)]
pub struct ClaimGraph {
    pub h: CubeGraph,
    pub code: LinearCode,
    pub d_set: Vec<Vertex>,
}

/// Per-invariant outcome of the exhaustive claim-graph certification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClaimCertificate {
    pub q2_free: bool,
    pub c_independent: bool,
    pub d_independent: bool,
    pub c_dominating: bool,
    pub d_dominating: bool,
    pub disjoint: bool,
    pub edges_meet_c_union_d: bool,
    pub edge_bound: bool,
    pub d_size: bool,
}

impl ClaimCertificate {
    pub fn all(&self) -> bool {
        self.q2_free
            && self.c_independent
            && self.d_independent
            && self.c_dominating
            && self.d_dominating
            && self.disjoint
            && self.edges_meet_c_union_d
            && self.edge_bound
            && self.d_size
    }
}

impl ClaimGraph {
    pub fn c_set(&self) -> Vec<Vertex> {
        self.code.codewords()
    }

    pub fn certify(&self) -> ClaimCertificate {
        let n0 = self.h.n();
        let in_c = |v: Vertex| self.code.contains(v);
        let in_d = |v: Vertex| {
            let s = self.code.syndrome(v);
            (1..=3).contains(&s)
        };
        let count = self.h.dim().vertex_count() as u32;

        let edges = self.h.edges();
        let mut c_independent = true;
        let mut d_independent = true;
        let mut edges_meet = true;
        for e in &edges {
            let (a, b) = e.endpoints();
            if in_c(a) && in_c(b) {
                c_independent = false;
            }
            if in_d(a) && in_d(b) {
                d_independent = false;
            }
            if !(in_c(a) || in_d(a) || in_c(b) || in_d(b)) {
                edges_meet = false;
            }
        }
        let dominated = |member: &dyn Fn(Vertex) -> bool| {
            (0..count).all(|v| {
                member(v)
                    || (1..=n0).any(|d| {
                        self.h.has_edge(Edge::new(v, d)) && member(v ^ coord_bit(d))
                    })
            })
        };
        ClaimCertificate {
            q2_free: crate::verify::count_copies(&self.h, 2) == 0,
            c_independent,
            d_independent,
            c_dominating: dominated(&in_c),
            d_dominating: dominated(&in_d),
            disjoint: (0..count).all(|v| !(in_c(v) && in_d(v))),
            edges_meet_c_union_d: edges_meet,
            edge_bound: self.h.edge_count() <= 1 << (n0 + 1),
            d_size: self.d_set.len() as u64 == 3 * (1u64 << n0) / (n0 as u64 + 1),
        }
    }
}

/// Builds the claim graph on `Q_{n0}` (`n0 = 2^t - 1`) in the four stages:
/// all edges at `C`; edges `{c+e_1+e_k, c+e_1}` for columns `v_k` with first
/// coordinate 0; edges `{c+e_1+e_k, c'+e_2}` for `v_k` starting `(1,0,..)`;
/// and edges `{c+e_1+e_k, c'+e_3}` for `v_k` starting `(1,1,..)`, with
/// `k` ranging over `[4, n0]`. Every invariant is certified exhaustively
/// before returning.
pub fn claim_graph(n0: Dim) -> Result<ClaimGraph, Error> {
    let n = n0.get();
    if n < 3 || (n & (n + 1)) != 0 {
        return Err(Error::Unsupported(format!(
            "claim graph needs n0 = 2^t - 1 >= 3, got {n}"
        )));
    }
    let t = n.trailing_ones();
    let code = LinearCode::hamming(t)?;
    let codewords = code.codewords();
    let mut h = CubeGraph::empty(n0);

    // stage 1: every edge at a codeword
    for &c in &codewords {
        for dir in 1..=n {
            h.insert(Edge::new(c, dir));
        }
    }
    // stages 2-4: one edge per vertex c + e_1 + e_k, matched by the first
    // two coordinates of the column v_k
    for &c in &codewords {
        for k in 4..=n {
            let vk = code.matrix().column(k);
            let y = c ^ 1 ^ coord_bit(k);
            if vk & 1 == 0 {
                // v_k = (0, ...): attach to c + e_1 in C_1
                h.insert(Edge::between(y, c ^ 1));
            } else {
                // v_k = (1, 0, ...) attaches to C_2, v_k = (1, 1, ...) to C_3
                let target = if vk & 2 == 0 { 2 } else { 3 };
                let l = code.syndrome(y) ^ target;
                debug_assert!((1..=n).contains(&l));
                debug_assert_eq!(code.syndrome(y ^ coord_bit(l)), target);
                h.insert(Edge::between(y, y ^ coord_bit(l)));
            }
        }
    }

    let d_set: Vec<Vertex> = (0..n0.vertex_count() as u32)
        .filter(|&v| {
            let s = code.syndrome(v);
            (1..=3).contains(&s)
        })
        .collect();
    let cg = ClaimGraph { h, code, d_set };
    let cert = cg.certify();
    if !cert.all() {
        return Err(Error::Unsupported(format!(
            "claim graph certification failed: {cert:?}"
        )));
    }
    Ok(cg)
}

/// The `Q_2`-saturated construction. With `n = 2(2^t - 1) + r` and the claim
/// graph on `Q_{n0}`: Type 1 edges fix a codeword in one of the first two
/// blocks and have an even number of ones on the fixed coordinates of the
/// remainder; Type 2 edges do the same with `D` and odd parity; Type 3 edges
/// run an `H`-edge in one of the first two blocks. Edges with an endpoint
/// whose first two blocks both meet `C ∪ D` are deleted and re-added
/// greedily.
pub fn q2_saturated(n: Dim, order: GreedyOrder) -> Result<CubeGraph, Error> {
    if n.get() < 6 {
        return Err(Error::Unsupported(format!(
            "q2-saturated construction needs n >= 6, got {}",
            n.get()
        )));
    }
    let (_, n0, _) = split_dimension(n.get(), 2);
    let cg = claim_graph(Dim::new(n0)?)?;
    let code = &cg.code;
    let h = &cg.h;
    let part_mask: u32 = ((1u64 << n0) - 1) as u32;

    // syndromes of the two n0-blocks; values 0..=3 mean C ∪ D
    let p1 = |v: Vertex| v & part_mask;
    let p2 = |v: Vertex| (v >> n0) & part_mask;
    let in_c = |p: u32| code.syndrome(p) == 0;
    let in_d = |p: u32| (1..=3).contains(&code.syndrome(p));
    let in_cd = |p: u32| code.syndrome(p) <= 3;
    let both_cd = |v: Vertex| in_cd(p1(v)) && in_cd(p2(v));

    let mut g = CubeGraph::empty(n);
    let mut greedy_set = Vec::new();
    for dir in 1..=n.get() {
        let dbit = coord_bit(dir);
        let in_part1 = dir <= n0;
        let in_part2 = dir > n0 && dir <= 2 * n0;
        for base in 0..n.vertex_count() as u32 {
            if base & dbit != 0 {
                continue;
            }
            let e = Edge { base, dir };
            let other = base ^ dbit;
            if both_cd(base) || both_cd(other) {
                greedy_set.push(e);
                continue;
            }
            // an edge whose block projection meets C ∪ D without being an
            // H-edge is in no Type class and no square of G can absorb it;
            // hand it to the greedy pass as well
            let stray = if in_part1 {
                let pe = Edge {
                    base: p1(base),
                    dir,
                };
                let (a, b) = pe.endpoints();
                (in_cd(a) || in_cd(b)) && !h.has_edge(pe)
            } else if in_part2 {
                let pe = Edge {
                    base: p2(base),
                    dir: dir - n0,
                };
                let (a, b) = pe.endpoints();
                (in_cd(a) || in_cd(b)) && !h.has_edge(pe)
            } else {
                false
            };
            if stray {
                greedy_set.push(e);
                continue;
            }
            // parity of the fixed coordinates outside the codeword block;
            // the starred coordinate contributes nothing since the base is
            // canonical
            let rem1_even = (base >> n0).count_ones() % 2 == 0;
            let rem2_even = (p1(base).count_ones() + (base >> (2 * n0)).count_ones()) % 2 == 0;
            let type1 = (!in_part1 && in_c(p1(base)) && rem1_even)
                || (!in_part2 && in_c(p2(base)) && rem2_even);
            let type2 = (!in_part1 && in_d(p1(base)) && !rem1_even)
                || (!in_part2 && in_d(p2(base)) && !rem2_even);
            let type3 = (in_part1 && h.has_edge(Edge { base: p1(base), dir }))
                || (in_part2
                    && h.has_edge(Edge {
                        base: p2(base),
                        dir: dir - n0,
                    }));
            if type1 || type2 || type3 {
                g.insert(e);
            }
        }
    }
    greedy_extend(&g, 2, &order.arrange(greedy_set))
}

/// A weakly `Q_2`-saturated spanning tree with `2^n - 1` edges: two copies of
/// the `(n-1)`-tree in complementary halves, joined at vertex 0.
pub fn weak_sat_tree(n: Dim) -> CubeGraph {
    let mut edges = vec![Edge::new(0, 1)];
    for d in 2..=n.get() {
        let upper: Vec<Edge> = edges
            .iter()
            .map(|e| Edge {
                base: e.base | coord_bit(d),
                dir: e.dir,
            })
            .collect();
        edges.extend(upper);
        edges.push(Edge::new(0, d));
    }
    CubeGraph::from_edges(n, edges)
}
