//! Evaluation of the density-bound formulas in exact rational arithmetic,
//! and lower-bound certificates (spanning tree, minimum degree, good-pair
//! counting) for concrete graphs.

use crate::cube::{coord_bit, CubeGraph, Edge};
use crate::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn big(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn ratio(p: u64, q: u64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// `n^(-a)` for rational `a >= 0`, exactly when `a` is an integer. For a
/// fractional exponent `p/q` the value is irrational; the returned rational
/// `1 / floor((n^p)^(1/q))` is an upper bound, which keeps the evaluated
/// density bounds valid.
pub fn neg_power(n: u64, a: &BigRational) -> Result<BigRational, Error> {
    if n == 0 {
        return Err(Error::Unsupported("n^(-a) needs n >= 1".into()));
    }
    if a.is_negative() {
        return Err(Error::Unsupported("exponent must be non-negative".into()));
    }
    if a.is_zero() {
        return Ok(BigRational::one());
    }
    let p = a.numer().to_u32().ok_or_else(|| {
        Error::Unsupported("exponent numerator too large".into())
    })?;
    let q = a.denom().to_u32().ok_or_else(|| {
        Error::Unsupported("exponent denominator too large".into())
    })?;
    let n_to_p = BigInt::from(n).pow(p);
    if q == 1 {
        return Ok(BigRational::new(BigInt::one(), n_to_p));
    }
    let root = n_to_p.nth_root(q);
    Ok(BigRational::new(BigInt::one(), root.max(BigInt::one())))
}

/// One step of the density recurrence:
///
/// `(1 - 1/(2k)) rho + k/n + (1/k) (c_prev n^(-a_prev)
///     + (n^(m-1) - (n0-m)^(m-1)) / n^(m-1))`
pub fn claim1_bound(
    rho: &BigRational,
    k: u64,
    n: u64,
    n0: u64,
    m: u32,
    c_prev: &BigRational,
    a_prev: &BigRational,
) -> Result<BigRational, Error> {
    if n == 0 || k == 0 {
        return Err(Error::Unsupported("claim bound needs n, k >= 1".into()));
    }
    if n < n0 || n0 < m as u64 {
        return Err(Error::Unsupported(format!(
            "claim bound needs n >= n0 >= m, got n={n}, n0={n0}, m={m}"
        )));
    }
    let shrink = (BigRational::one() - ratio(1, 2 * k)) * rho;
    let external = ratio(k, n);
    let lower_term = c_prev * neg_power(n, a_prev)?;
    let e = m - 1;
    let n_pow = BigRational::from_integer(BigInt::from(n).pow(e));
    let base_pow = BigRational::from_integer(BigInt::from(n0 - m as u64).pow(e));
    let bad_term = (&n_pow - base_pow) / n_pow;
    Ok(shrink + external + (lower_term + bad_term) / big(k))
}

/// The exponent `a_m` of the quantitative theorem: `a_1 = 1`,
/// `a_m = 1 / (7 * 3^(m-2))` for `m >= 2`.
pub fn theorem_exponent(m: u32) -> BigRational {
    if m <= 1 {
        BigRational::one()
    } else {
        BigRational::new(BigInt::one(), BigInt::from(7u32) * BigInt::from(3u32).pow(m - 2))
    }
}

/// The density recurrence iterated `t` times from `rho_0 = 1`, with the
/// parameter schedule `k_0 = m+1`, `k_{i+1} = k_i + 1`, `n_0 = n0`,
/// `n_{i+1} = n_i + k_i`.
#[derive(Clone, Debug)]
pub struct DensitySchedule {
    pub m: u32,
    pub n0: u64,
    pub t: u32,
    /// `k_0 .. k_{t-1}`
    pub ks: Vec<u64>,
    /// `n_0 .. n_t`
    pub ns: Vec<u64>,
    /// `rho_0 .. rho_t`, exact
    pub rhos: Vec<BigRational>,
    pub c_prev: BigRational,
    pub a_prev: BigRational,
    /// exponent of the closed-form target `c_m / n^(a_m)`
    pub a_m: BigRational,
    /// `n0^(2/7)` for `m = 2`, `n0^(2 a_{m-1} / 3)` otherwise
    pub recommended_t: f64,
}

pub fn schedule(m: u32, n0: u64, t: u32, c_prev: &BigRational) -> Result<DensitySchedule, Error> {
    if m < 2 {
        return Err(Error::Unsupported("schedule needs m >= 2".into()));
    }
    let a_prev = theorem_exponent(m - 1);
    let mut ks = Vec::with_capacity(t as usize);
    let mut ns = vec![n0];
    let mut rhos = vec![BigRational::one()];
    let mut n = n0;
    for k in (m as u64 + 1..).take(t as usize) {
        let next = claim1_bound(rhos.last().unwrap(), k, n, n0, m, c_prev, &a_prev)?;
        rhos.push(next);
        ks.push(k);
        n += k;
        ns.push(n);
    }
    let a_prev_f = a_prev.to_f64().unwrap_or(1.0);
    let recommended_t = if m == 2 {
        (n0 as f64).powf(2.0 / 7.0)
    } else {
        (n0 as f64).powf(2.0 * a_prev_f / 3.0)
    };
    Ok(DensitySchedule {
        m,
        n0,
        t,
        ks,
        ns,
        rhos,
        c_prev: c_prev.clone(),
        a_prev,
        a_m: theorem_exponent(m),
        recommended_t,
    })
}

/// For every absent edge, the number of vertices lying on the interior of a
/// length-3 path in `g` between its endpoints. Keys ascend by `(base, dir)`.
pub fn good_pairs(g: &CubeGraph) -> Vec<(Edge, u64)> {
    let n = g.n();
    let mut out = Vec::new();
    let mut internal: Vec<u32> = Vec::new();
    for dir in 1..=n {
        let dbit = coord_bit(dir);
        for base in 0..g.dim().vertex_count() as u32 {
            if base & dbit != 0 {
                continue;
            }
            let e = Edge { base, dir };
            if g.has_edge(e) {
                continue;
            }
            let (x, y) = e.endpoints();
            internal.clear();
            for i in 1..=n {
                let a = x ^ coord_bit(i);
                if a == y || !g.has_edge(Edge::new(x, i)) {
                    continue;
                }
                for j in 1..=n {
                    let b = y ^ coord_bit(j);
                    if b == x || (a ^ b).count_ones() != 1 {
                        continue;
                    }
                    if g.has_edge(Edge::new(y, j)) && g.has_edge(Edge::between(a, b)) {
                        internal.push(a);
                        internal.push(b);
                    }
                }
            }
            internal.sort_unstable();
            internal.dedup();
            out.push((e, internal.len() as u64));
        }
    }
    out.sort_unstable_by_key(|&(e, _)| e);
    out
}

/// Whether every vertex of the cube is reachable from vertex 0 in `g`.
pub fn is_connected(g: &CubeGraph) -> bool {
    let count = g.dim().vertex_count();
    let mut seen = vec![false; count];
    let mut stack = vec![0u32];
    seen[0] = true;
    let mut visited = 1usize;
    while let Some(v) = stack.pop() {
        for d in 1..=g.n() {
            if g.has_edge(Edge::new(v, d)) {
                let w = v ^ coord_bit(d);
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    visited += 1;
                    stack.push(w);
                }
            }
        }
    }
    visited == count
}

/// Lower-bound certificate for a graph claiming semi-saturation: spanning
/// connectivity, minimum degree `m - 1`, and the good-pair count inequality
/// `sum_v C(d(v), 2) >= 2 (e(Q_n) - e(G))`. Failures are reported, not
/// thrown.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: u32,
    pub m: u32,
    pub edges: u64,
    pub connected: bool,
    pub spanning_tree_ok: bool,
    pub min_degree: u32,
    pub min_degree_ok: bool,
    pub good_pair_lhs: u64,
    pub good_pair_rhs: u64,
    pub good_pair_ok: bool,
}

impl BoundReport {
    pub fn all(&self) -> bool {
        self.spanning_tree_ok && self.min_degree_ok && self.good_pair_ok
    }
}

pub fn lower_bound_certificate(g: &CubeGraph, m: u32) -> BoundReport {
    let n = g.n();
    let connected = is_connected(g);
    let edges = g.edge_count();
    let vertex_count = g.dim().vertex_count() as u64;
    let min_degree = (0..vertex_count as u32)
        .map(|v| g.degree(v))
        .min()
        .unwrap_or(0);
    let lhs: u64 = (0..vertex_count as u32)
        .map(|v| {
            let d = g.degree(v) as u64;
            d * d.saturating_sub(1) / 2
        })
        .sum();
    let rhs = 2 * (g.dim().total_edges() - edges);
    BoundReport {
        n,
        m,
        edges,
        connected,
        spanning_tree_ok: connected && edges >= vertex_count - 1,
        min_degree,
        min_degree_ok: min_degree >= m.saturating_sub(1),
        good_pair_lhs: lhs,
        good_pair_rhs: rhs,
        good_pair_ok: lhs >= rhs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::Dim;
    use num_traits::FromPrimitive;

    fn dim(n: u32) -> Dim {
        Dim::new(n).unwrap()
    }

    #[test]
    fn claim_bound_spot_value() {
        // rho=1, k=3, n=n0=10, m=2, c=0: 5/6 + 3/10 + (1/3)(2/10) = 6/5
        let v = claim1_bound(
            &BigRational::one(),
            3,
            10,
            10,
            2,
            &BigRational::zero(),
            &BigRational::one(),
        )
        .unwrap();
        assert_eq!(v, ratio(6, 5));
    }

    #[test]
    fn claim_bound_zero_rho_drops_the_shrink_term() {
        let v = claim1_bound(
            &BigRational::zero(),
            3,
            10,
            10,
            2,
            &BigRational::zero(),
            &BigRational::one(),
        )
        .unwrap();
        assert_eq!(v, ratio(3, 10) + ratio(2, 30));
    }

    #[test]
    fn claim_bound_is_monotone_in_rho() {
        let lo = claim1_bound(
            &ratio(1, 2),
            4,
            20,
            18,
            2,
            &BigRational::zero(),
            &BigRational::one(),
        )
        .unwrap();
        let hi = claim1_bound(
            &BigRational::one(),
            4,
            20,
            18,
            2,
            &BigRational::zero(),
            &BigRational::one(),
        )
        .unwrap();
        assert!(lo < hi);
    }

    #[test]
    fn claim_bound_matches_float_recomputation() {
        for (rho_num, rho_den, k, n, n0) in
            [(1u64, 1u64, 3u64, 30u64, 28u64), (2, 3, 5, 100, 97), (1, 4, 7, 1000, 990)]
        {
            let rho = ratio(rho_num, rho_den);
            let c = ratio(1, 2);
            let exact = claim1_bound(&rho, k, n, n0, 2, &c, &BigRational::one())
                .unwrap()
                .to_f64()
                .unwrap();
            let rho_f = rho_num as f64 / rho_den as f64;
            let float = (1.0 - 1.0 / (2.0 * k as f64)) * rho_f
                + k as f64 / n as f64
                + (0.5 / n as f64 + (n as f64 - (n0 as f64 - 2.0)) / n as f64) / k as f64;
            assert!(
                ((exact - float) / float).abs() < 1e-12,
                "exact={exact} float={float}"
            );
        }
    }

    #[test]
    fn neg_power_exact_and_bounding() {
        assert_eq!(neg_power(10, &BigRational::one()).unwrap(), ratio(1, 10));
        assert_eq!(
            neg_power(10, &BigRational::from_u64(2).unwrap()).unwrap(),
            ratio(1, 100)
        );
        // fractional exponent: 128^(1/7) = 2 exactly
        let a = BigRational::new(BigInt::from(1), BigInt::from(7));
        assert_eq!(neg_power(128, &a).unwrap(), ratio(1, 2));
        // otherwise an upper bound on n^(-a)
        let ub = neg_power(100, &a).unwrap().to_f64().unwrap();
        assert!(ub >= 100f64.powf(-1.0 / 7.0));
    }

    #[test]
    fn schedule_recurrences_are_consistent() {
        let s = schedule(2, 1000, 5, &BigRational::zero()).unwrap();
        assert_eq!(s.ks, vec![3, 4, 5, 6, 7]);
        assert_eq!(s.ns.first(), Some(&1000));
        for i in 0..s.ks.len() {
            assert_eq!(s.ns[i + 1], s.ns[i] + s.ks[i]);
        }
        // n_t - n0 = sum k_i = t*m + t(t+1)/2 + ... recomputed directly
        let t = s.t as u64;
        let m = 2u64;
        assert_eq!(
            s.ns[s.t as usize] - s.n0,
            t * (m + 1) + t * (t - 1) / 2
        );
        assert!(s.rhos[s.t as usize] < s.rhos[0]);
        assert_eq!(theorem_exponent(2), BigRational::new(1.into(), 7.into()));
        assert_eq!(theorem_exponent(3), BigRational::new(1.into(), 21.into()));
    }

    #[test]
    fn good_pairs_on_the_broken_square() {
        let mut g = CubeGraph::full(dim(2));
        let missing = Edge::new(0b10, 1);
        g.remove(missing);
        let gp = good_pairs(&g);
        assert_eq!(gp, vec![(missing, 2)]);
    }

    #[test]
    fn good_pairs_on_empty_graph_are_zero() {
        let g = CubeGraph::empty(dim(3));
        let gp = good_pairs(&g);
        assert_eq!(gp.len(), 12);
        assert!(gp.iter().all(|&(_, c)| c == 0));
    }

    #[test]
    fn certificate_on_full_cube() {
        let g = CubeGraph::full(dim(4));
        let rep = lower_bound_certificate(&g, 2);
        assert!(rep.all());
        assert_eq!(rep.good_pair_rhs, 0);
        assert_eq!(rep.min_degree, 4);
    }

    #[test]
    fn certificate_flags_disconnection() {
        let g = CubeGraph::empty(dim(3));
        let rep = lower_bound_certificate(&g, 2);
        assert!(!rep.connected);
        assert!(!rep.spanning_tree_ok);
    }
}
