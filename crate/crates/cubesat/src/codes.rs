//! Hamming and approximate Hamming codes given by parity-check matrices over
//! GF(2), with exhaustive certification of the code properties.
//!
//! A code of length `n` is the kernel of an `r x n` matrix whose columns are
//! stored as `r`-bit words. Membership is decided by syndrome, so codes in
//! large cubes cost no memory; codeword enumeration is available for
//! `n <= 20`.

use crate::cube::{vertex_weight, Vertex};
use crate::Error;
use serde::Serialize;

/// An `r x n` parity-check matrix with distinct non-zero columns of full
/// rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParityCheckMatrix {
    r: u32,
    n: u32,
    columns: Vec<u32>,
}

impl ParityCheckMatrix {
    pub fn new(r: u32, columns: Vec<u32>) -> Result<ParityCheckMatrix, Error> {
        let n = columns.len() as u32;
        let mut seen = std::collections::HashSet::new();
        for &c in &columns {
            if c == 0 || c >= (1 << r) {
                return Err(Error::Unsupported(format!(
                    "parity-check column {c} out of range for r={r}"
                )));
            }
            if !seen.insert(c) {
                return Err(Error::Unsupported(format!(
                    "duplicate parity-check column {c}"
                )));
            }
        }
        if gf2_rank(&columns) != r {
            return Err(Error::Unsupported(format!(
                "parity-check matrix does not have rank {r}"
            )));
        }
        Ok(ParityCheckMatrix { r, n, columns })
    }

    pub fn rows(&self) -> u32 {
        self.r
    }

    pub fn cols(&self) -> u32 {
        self.n
    }

    /// Column `i` (1-based), the image of the basis vector `e_i`.
    pub fn column(&self, i: u32) -> u32 {
        self.columns[(i - 1) as usize]
    }
}

/// Rank over GF(2) of a set of bit-words.
fn gf2_rank(vectors: &[u32]) -> u32 {
    let mut basis = [0u32; 32];
    let mut rank = 0;
    for &v in vectors {
        let mut v = v;
        while v != 0 {
            let lead = (31 - v.leading_zeros()) as usize;
            if basis[lead] == 0 {
                basis[lead] = v;
                rank += 1;
                break;
            }
            v ^= basis[lead];
        }
    }
    rank
}

/// A binary linear code, the kernel of its parity-check matrix. Contains 0,
/// is closed under XOR, and has `2^(n-r)` words.
#[derive(Clone, PartialEq, Eq, Debug)]
#[allow(clippy::len_without_is_empty)]
pub struct LinearCode {
    matrix: ParityCheckMatrix,
}

impl LinearCode {
    /// The Hamming code of redundancy `r`, length `n = 2^r - 1`. Column `i`
    /// is the binary representation of `i`, so the first three columns are
    /// `(1,0,...,0)`, `(0,1,0,...,0)` and `(1,1,0,...,0)`.
    pub fn hamming(r: u32) -> Result<LinearCode, Error> {
        if r < 2 {
            return Err(Error::Unsupported(format!(
                "hamming code needs r >= 2, got {r}"
            )));
        }
        let n = (1u32 << r) - 1;
        let matrix = ParityCheckMatrix::new(r, (1..=n).collect())?;
        Ok(LinearCode { matrix })
    }

    /// An approximate Hamming code of length `n >= 3`: redundancy
    /// `r = ceil(log2(n+1))` and columns `1..=n`. The columns are distinct,
    /// non-zero and include all powers of two below `2^r`, so the code has
    /// minimum distance 3 and full rank. For `n = 2^r - 1` this is the
    /// genuine Hamming code.
    pub fn approximate(n: u32) -> Result<LinearCode, Error> {
        if n < 3 {
            return Err(Error::Unsupported(format!(
                "approximate hamming code needs n >= 3, got {n}"
            )));
        }
        let r = u32::BITS - n.leading_zeros(); // ceil(log2(n+1)) for n >= 1
        let matrix = ParityCheckMatrix::new(r, (1..=n).collect())?;
        Ok(LinearCode { matrix })
    }

    /// The code with the given parity-check matrix.
    pub fn from_matrix(matrix: ParityCheckMatrix) -> LinearCode {
        LinearCode { matrix }
    }

    pub fn matrix(&self) -> &ParityCheckMatrix {
        &self.matrix
    }

    pub fn len(&self) -> u32 {
        self.matrix.n
    }

    pub fn redundancy(&self) -> u32 {
        self.matrix.r
    }

    /// `|C| = 2^(n-r)`.
    pub fn size(&self) -> u64 {
        1u64 << (self.matrix.n - self.matrix.r)
    }

    /// `H v` over GF(2); zero exactly on codewords.
    pub fn syndrome(&self, v: Vertex) -> u32 {
        let mut s = 0;
        let mut rem = v;
        while rem != 0 {
            let i = rem.trailing_zeros();
            s ^= self.matrix.columns[i as usize];
            rem &= rem - 1;
        }
        s
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.syndrome(v) == 0
    }

    /// All codewords, ascending. Only for `n <= 20`.
    pub fn codewords(&self) -> Vec<Vertex> {
        assert!(self.len() <= 20, "codeword enumeration is capped at n = 20");
        let mut words = Vec::with_capacity(self.size() as usize);
        self.scan(|v, s| {
            if s == 0 {
                words.push(v);
            }
        });
        words.sort_unstable();
        words
    }

    /// Exhaustively certifies the code properties over all of `Q_n`.
    pub fn certify(&self) -> CodeCertificate {
        let col_set: std::collections::HashSet<u32> =
            self.matrix.columns.iter().copied().collect();
        let mut count = 0u64;
        let mut min_nonzero_weight = u32::MAX;
        let mut dominating = true;
        self.scan(|v, s| {
            if s == 0 {
                count += 1;
                if v != 0 {
                    min_nonzero_weight = min_nonzero_weight.min(vertex_weight(v));
                }
            } else if !col_set.contains(&s) {
                dominating = false;
            }
        });
        CodeCertificate {
            size_ok: count == self.size(),
            min_dist_3: min_nonzero_weight >= 3,
            dominating,
        }
    }

    /// Visits every vertex of `Q_n` with its syndrome, walking in Gray-code
    /// order so each step updates the syndrome with a single column XOR.
    fn scan(&self, mut f: impl FnMut(Vertex, u32)) {
        let n = self.len();
        let total = 1u64 << n;
        let mut v: Vertex = 0;
        let mut s: u32 = 0;
        for i in 0..total {
            f(v, s);
            if i + 1 < total {
                let flip = (i + 1).trailing_zeros();
                v ^= 1 << flip;
                s ^= self.matrix.columns[flip as usize];
            }
        }
    }
}

/// Outcome of [`LinearCode::certify`]. `dominating` is reported for every
/// code but only genuine Hamming codes are expected to satisfy it.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CodeCertificate {
    pub size_ok: bool,
    pub min_dist_3: bool,
    pub dominating: bool,
}

impl CodeCertificate {
    pub fn all(&self) -> bool {
        self.size_ok && self.min_dist_3 && self.dominating
    }
}

/// The coset `C + shift`.
#[derive(Clone, Debug)]
pub struct Coset {
    pub code: LinearCode,
    pub shift: Vertex,
}

impl Coset {
    pub fn new(code: LinearCode, shift: Vertex) -> Coset {
        Coset { code, shift }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.code.contains(v ^ self.shift)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamming_r2_is_the_repetition_code() {
        let c = LinearCode::hamming(2).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.size(), 2);
        assert_eq!(c.codewords(), vec![0b000, 0b111]);
        assert_eq!(c.syndrome(0b111), 0);
    }

    #[test]
    fn hamming_r3_properties() {
        let c = LinearCode::hamming(3).unwrap();
        assert_eq!(c.len(), 7);
        assert_eq!(c.size(), 16);
        let words = c.codewords();
        assert_eq!(words.len(), 16);
        // minimum pairwise distance exactly 3, checked pairwise
        let mut min_dist = u32::MAX;
        for (i, &x) in words.iter().enumerate() {
            for &y in &words[i + 1..] {
                min_dist = min_dist.min((x ^ y).count_ones());
            }
        }
        assert_eq!(min_dist, 3);
        // every vertex of Q_7 is within distance 1 of exactly one codeword
        for v in 0..128u32 {
            let close = words
                .iter()
                .filter(|&&c| (v ^ c).count_ones() <= 1)
                .count();
            assert_eq!(close, 1, "v={v}");
        }
        assert!(c.certify().all());
    }

    #[test]
    fn approximate_n5() {
        let c = LinearCode::approximate(5).unwrap();
        assert_eq!(c.redundancy(), 3);
        assert_eq!(c.size(), 4);
        let words = c.codewords();
        let mut min_dist = u32::MAX;
        for (i, &x) in words.iter().enumerate() {
            for &y in &words[i + 1..] {
                min_dist = min_dist.min((x ^ y).count_ones());
            }
        }
        assert_eq!(min_dist, 3);
        let cert = c.certify();
        assert!(cert.size_ok && cert.min_dist_3);
        assert!(!cert.dominating);
    }

    #[test]
    fn approximate_n7_equals_hamming_r3() {
        let a = LinearCode::approximate(7).unwrap();
        let h = LinearCode::hamming(3).unwrap();
        assert_eq!(a.codewords(), h.codewords());
    }

    #[test]
    fn syndrome_is_linear() {
        let c = LinearCode::approximate(6).unwrap();
        assert_eq!(c.syndrome(0), 0);
        for x in 0..64u32 {
            for y in [0u32, 1, 5, 63] {
                assert_eq!(c.syndrome(x ^ y), c.syndrome(x) ^ c.syndrome(y));
            }
        }
    }

    #[test]
    fn trivial_full_rank_code_is_vacuously_distance_3() {
        // r = n = 3 with identity-like columns: the code is {0}.
        let m = ParityCheckMatrix::new(3, vec![1, 2, 4]).unwrap();
        let c = LinearCode { matrix: m };
        assert_eq!(c.codewords(), vec![0]);
        let cert = c.certify();
        assert!(cert.size_ok && cert.min_dist_3);
    }

    #[test]
    fn cosets_partition_membership() {
        let c = LinearCode::hamming(2).unwrap();
        let coset = Coset::new(c.clone(), 0b001);
        assert!(coset.contains(0b001));
        assert!(coset.contains(0b110));
        assert!(!coset.contains(0b000));
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(ParityCheckMatrix::new(2, vec![1, 2, 3, 0]).is_err());
        assert!(ParityCheckMatrix::new(2, vec![1, 2, 2]).is_err());
        assert!(ParityCheckMatrix::new(3, vec![1, 2, 3]).is_err()); // rank 2
        assert!(LinearCode::hamming(1).is_err());
        assert!(LinearCode::approximate(2).is_err());
    }
}
