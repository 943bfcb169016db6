//! Exact matrix-level oracle for the symmetric space GL_N / O_N.
//!
//! Everything here is plain linear algebra over the rationals: the
//! invariant bilinear form, self-adjoint nilpotent representatives of
//! every orbit, Jordan types read off rank sequences, centralizer
//! dimensions from commutant equations, and normal bases produced by
//! orthogonal splitting.  It shares no code with the combinatorial
//! modules, so agreement between the two is evidence rather than
//! tautology.
//!
//! Basis convention: for `N = 2n` the ambient space has basis
//! `e_1, .., e_n, f_1, .., f_n` with `<e_i, f_j> = delta_ij` and all
//! other pairings zero; for `N = 2n + 1` a leading unit vector `e_0`
//! with `<e_0, e_0> = 1` precedes the hyperbolic pairs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::orbit::{requires_split, Split};
use crate::partition::Partition;

/// Errors from matrix-level computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    /// The matrix has a nonzero power beyond its size.
    #[error("matrix is not nilpotent")]
    NotNilpotent,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Dense matrix with exact rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    /// Zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Builds a matrix from integer rows; all rows must share a length.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        RationalMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().map(|&v| rat(v)).collect(),
        }
    }

    /// Builds a matrix whose columns are the given coordinate vectors.
    pub fn from_columns(columns: &[Vec<BigRational>]) -> Self {
        let rows = columns.first().map_or(0, Vec::len);
        assert!(columns.iter().all(|c| c.len() == rows), "ragged columns");
        let mut m = RationalMatrix::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// Row count.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Column count.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    /// Overwrites the entry at `(i, j)`.
    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.cols + j] = value;
    }

    /// Column `j` as a coordinate vector.
    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        let mut m = RationalMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    /// Matrix sum.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        RationalMatrix { rows: self.rows, cols: self.cols, entries }
    }

    /// Matrix difference.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        RationalMatrix { rows: self.rows, cols: self.cols, entries }
    }

    /// Matrix product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut m = RationalMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = m.get(i, j) + a * b;
                        m.set(i, j, v);
                    }
                }
            }
        }
        m
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len(), "shape mismatch in apply");
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * &v[j])
                    .fold(BigRational::zero(), |acc, t| acc + t)
            })
            .collect()
    }

    /// `k`-th power of a square matrix.
    pub fn pow(&self, k: usize) -> Self {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut acc = RationalMatrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Row-reduces in place, returning the pivot column indices.
    fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    self.entries.swap(row * self.cols + j, p * self.cols + j);
                }
            }
            let inv = self.get(row, col).recip();
            for j in col..self.cols {
                let v = self.get(row, j) * &inv;
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for j in col..self.cols {
                        let v = self.get(r, j) - &factor * self.get(row, j);
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    /// Basis of the right nullspace, as coordinate vectors.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let mut reduced = self.clone();
        let pivots = reduced.row_reduce();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[fc] = BigRational::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -reduced.get(r, fc).clone();
                }
                v
            })
            .collect()
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = RationalMatrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, BigRational::one());
        }
        let pivots = aug.row_reduce();
        if pivots.len() < n || pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut inv = RationalMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Determinant of a square matrix.
    pub fn determinant(&self) -> BigRational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut work = self.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !work.get(r, col).is_zero()) else {
                return BigRational::zero();
            };
            if p != col {
                for j in 0..n {
                    work.entries.swap(col * n + j, p * n + j);
                }
                det = -det;
            }
            let pivot = work.get(col, col).clone();
            det *= &pivot;
            let inv = pivot.recip();
            for r in col + 1..n {
                if work.get(r, col).is_zero() {
                    continue;
                }
                let factor = work.get(r, col) * &inv;
                for j in col..n {
                    let v = work.get(r, j) - &factor * work.get(col, j);
                    work.set(r, j, v);
                }
            }
        }
        det
    }
}

/// Ambient size together with the matrix of the invariant symmetric
/// form in the standard basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormContext {
    n_ambient: usize,
    j: RationalMatrix,
}

impl FormContext {
    /// Ambient size `N`.
    pub fn n_ambient(&self) -> usize {
        self.n_ambient
    }

    /// The Gram matrix of the form; symmetric and an involution.
    pub fn j(&self) -> &RationalMatrix {
        &self.j
    }

    /// Pairing `<v, w>` of two coordinate vectors.
    pub fn pairing(&self, v: &[BigRational], w: &[BigRational]) -> BigRational {
        let jw = self.j.apply(w);
        v.iter()
            .zip(&jw)
            .map(|(a, b)| a * b)
            .fold(BigRational::zero(), |acc, t| acc + t)
    }
}

/// Index of `e_i` in the standard basis (`i = 0` only for odd `N`).
fn e_index(n_ambient: usize, i: usize) -> usize {
    if n_ambient % 2 == 0 { i - 1 } else { i }
}

/// Index of `f_i` in the standard basis; `1 <= i <= floor(N/2)`.
fn f_index(n_ambient: usize, i: usize) -> usize {
    let n = n_ambient / 2;
    if n_ambient % 2 == 0 { n + i - 1 } else { n + i }
}

/// Builds the invariant form for ambient size `n_ambient`: hyperbolic
/// pairs `<e_i, f_i> = 1`, plus a leading unit vector when `N` is odd.
pub fn form_matrix(n_ambient: usize) -> FormContext {
    let n = n_ambient / 2;
    let mut j = RationalMatrix::zero(n_ambient, n_ambient);
    if n_ambient % 2 == 1 {
        j.set(0, 0, BigRational::one());
    }
    for i in 1..=n {
        let e = e_index(n_ambient, i);
        let f = f_index(n_ambient, i);
        j.set(e, f, BigRational::one());
        j.set(f, e, BigRational::one());
    }
    FormContext { n_ambient, j }
}

/// Adjoint of `x` with respect to the form: the unique `x*` with
/// `<x v, w> = <v, x* w>`.
pub fn adjoint(x: &RationalMatrix, ctx: &FormContext) -> RationalMatrix {
    ctx.j.mul(&x.transpose()).mul(&ctx.j)
}

/// True when `x` equals its own adjoint.
pub fn is_self_adjoint(x: &RationalMatrix, ctx: &FormContext) -> bool {
    adjoint(x, ctx) == *x
}

/// Involution swapping `e_n` and `f_n` and fixing the rest of the
/// basis.  It preserves the form with determinant `-1`, and conjugates
/// the two representatives of a split orbit pair into each other.
pub fn split_exchange_matrix(n_ambient: usize) -> RationalMatrix {
    let n = n_ambient / 2;
    assert!(n >= 1, "no hyperbolic pair to exchange");
    let mut t = RationalMatrix::identity(n_ambient);
    let e = e_index(n_ambient, n);
    let f = f_index(n_ambient, n);
    t.set(e, e, BigRational::zero());
    t.set(f, f, BigRational::zero());
    t.set(e, f, BigRational::one());
    t.set(f, e, BigRational::one());
    t
}

/// Per-row Gram constants of the built-in representatives: rows of
/// even length pair `e` against `f` vectors (constant `+1`), while
/// rows of odd length alternate `+1, -1, ..` so that the diagonal
/// middles assemble into hyperbolic planes.
pub fn canonical_gram_constants(lambda: &Partition) -> Vec<i64> {
    let mut odd_seen = 0;
    lambda
        .parts()
        .iter()
        .map(|&p| {
            if p % 2 == 0 {
                1
            } else {
                odd_seen += 1;
                if odd_seen % 2 == 1 { 1 } else { -1 }
            }
        })
        .collect()
}

/// Self-adjoint nilpotent representative of the orbit labelled by
/// `lambda`, with the split tag exactly when the partition is even.
///
/// Each row becomes one Jordan chain assembled from hyperbolic pairs:
/// an even row `2m` uses `m` fresh pairs as
/// `f_{s+1} -> .. -> f_{s+m} -> e_{s+m} -> .. -> e_{s+1} -> 0`; an odd
/// row threads a middle vector of square norm `+-1` between its wings,
/// drawn from the leading unit vector or from a hyperbolic pair shared
/// by two consecutive odd rows.  The minus representative is the
/// conjugate of the plus one by the exchange of the last pair.
pub fn nilpotent_representative(
    n_ambient: usize,
    lambda: &Partition,
    split: Option<Split>,
) -> RationalMatrix {
    assert_eq!(lambda.size(), n_ambient, "partition size must match ambient size");
    assert_eq!(
        requires_split(lambda),
        split.is_some(),
        "split tag given iff the partition is even"
    );
    let constants = canonical_gram_constants(lambda);
    let n = n_ambient / 2;
    let mut next_pair = 1;
    let mut alloc_pair = || {
        let p = next_pair;
        next_pair += 1;
        assert!(p <= n, "ran out of hyperbolic pairs");
        p
    };
    let unit = |idx: usize| {
        let mut v = vec![BigRational::zero(); n_ambient];
        v[idx] = BigRational::one();
        v
    };

    let mut columns: Vec<Vec<BigRational>> = Vec::with_capacity(n_ambient);
    let mut chain_bounds = Vec::new();
    let mut odd_seen = 0;
    let mut pending_pair: Option<usize> = None;
    for (row, &len) in lambda.parts().iter().enumerate() {
        let start = columns.len();
        let c = constants[row];
        let wings = len / 2;
        let pairs: Vec<usize> = (0..wings).map(|_| alloc_pair()).collect();
        for &p in &pairs {
            columns.push(unit(e_index(n_ambient, p)));
        }
        if len % 2 == 1 {
            odd_seen += 1;
            if n_ambient % 2 == 1 && odd_seen == 1 {
                columns.push(unit(0));
            } else {
                let q = match pending_pair.take() {
                    Some(q) => q,
                    None => {
                        let q = alloc_pair();
                        pending_pair = Some(q);
                        q
                    }
                };
                let mut v = unit(e_index(n_ambient, q));
                v[f_index(n_ambient, q)] = BigRational::new(BigInt::from(c), BigInt::from(2));
                columns.push(v);
            }
        }
        for &p in pairs.iter().rev() {
            let mut v = unit(f_index(n_ambient, p));
            if c < 0 {
                v[f_index(n_ambient, p)] = rat(-1);
            }
            columns.push(v);
        }
        chain_bounds.push((start, columns.len()));
    }

    let basis = RationalMatrix::from_columns(&columns);
    let mut shift = RationalMatrix::zero(n_ambient, n_ambient);
    for &(start, end) in &chain_bounds {
        for col in start + 1..end {
            shift.set(col - 1, col, BigRational::one());
        }
    }
    let inv = basis.inverse().expect("chain vectors form a basis");
    let x = basis.mul(&shift).mul(&inv);
    match split {
        Some(Split::Minus) if n_ambient >= 2 => {
            let t = split_exchange_matrix(n_ambient);
            t.mul(&x).mul(&t)
        }
        _ => x,
    }
}

/// Jordan type of a nilpotent matrix, from the rank sequence of its
/// powers: the conjugate partition has parts
/// `rank(x^(k-1)) - rank(x^k)`.
pub fn jordan_type(x: &RationalMatrix) -> Result<Partition, MatrixError> {
    assert_eq!(x.rows(), x.cols(), "Jordan type of a non-square matrix");
    let n = x.rows();
    let mut ranks = vec![n];
    let mut power = RationalMatrix::identity(n);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > n {
            return Err(MatrixError::NotNilpotent);
        }
        power = power.mul(x);
        ranks.push(power.rank());
    }
    let conjugate: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Ok(Partition::new(conjugate).conjugate())
}

/// Dimensions of the commutant of `x` intersected with the two
/// eigenspaces of the involution `y -> -y*`: first the fixed
/// subalgebra, then the self-adjoint complement.
pub fn centralizer_dims(x: &RationalMatrix, ctx: &FormContext) -> (usize, usize) {
    let n = ctx.n_ambient;
    assert_eq!((x.rows(), x.cols()), (n, n), "shape mismatch with the form");
    let dim = n * n;
    let idx = |i: usize, j: usize| i * n + j;
    let commutant = |system: &mut RationalMatrix, row0: &mut usize| {
        for i in 0..n {
            for j in 0..n {
                let r = *row0 + idx(i, j);
                for k in 0..n {
                    let mut v = system.get(r, idx(k, j)) + x.get(i, k);
                    system.set(r, idx(k, j), v);
                    v = system.get(r, idx(i, k)) - x.get(k, j);
                    system.set(r, idx(i, k), v);
                }
            }
        }
        *row0 += dim;
    };
    let mut dims = [0usize; 2];
    for (slot, minus_part) in [false, true].into_iter().enumerate() {
        let mut system = RationalMatrix::zero(2 * dim, dim);
        let mut row0 = 0;
        commutant(&mut system, &mut row0);
        // Parity rows: y -+ y* = 0, with (y*)_{ij} expanded through J.
        for i in 0..n {
            for j in 0..n {
                let r = row0 + idx(i, j);
                let mut v = system.get(r, idx(i, j)) + BigRational::one();
                system.set(r, idx(i, j), v);
                for k in 0..n {
                    for l in 0..n {
                        let coeff = ctx.j.get(i, k) * ctx.j.get(l, j);
                        if coeff.is_zero() {
                            continue;
                        }
                        let sign = if minus_part { -coeff } else { coeff };
                        v = system.get(r, idx(l, k)) + sign;
                        system.set(r, idx(l, k), v);
                    }
                }
            }
        }
        dims[slot] = dim - system.rank();
    }
    (dims[0], dims[1])
}

/// Jordan basis adapted to the form: within each chain the pairings
/// are anti-diagonal with a single per-chain constant, and distinct
/// chains pair to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalBasis {
    basis: RationalMatrix,
    chain_lengths: Vec<usize>,
    constants: Vec<BigRational>,
}

impl NormalBasis {
    /// Basis matrix; column blocks are chains, each listed from the
    /// vector killed by `x` up to the chain generator.
    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    /// Chain lengths in non-increasing order; these recover the
    /// Jordan type.
    pub fn chain_lengths(&self) -> &[usize] {
        &self.chain_lengths
    }

    /// Per-chain Gram constants on the anti-diagonal positions.
    pub fn constants(&self) -> &[BigRational] {
        &self.constants
    }

    /// True when every chain constant is `+1` or `-1`.
    pub fn has_unit_constants(&self) -> bool {
        self.constants.iter().all(|c| c.abs() == BigRational::one())
    }

    /// True when every chain constant is exactly `+1`.
    pub fn has_unit_form(&self) -> bool {
        self.constants.iter().all(One::is_one)
    }

    /// Gram matrix of the basis under the form.
    pub fn gram(&self, ctx: &FormContext) -> RationalMatrix {
        self.basis.transpose().mul(ctx.j()).mul(&self.basis)
    }

    /// The Gram matrix this basis is required to have: per-chain
    /// anti-diagonal blocks of the chain constant, zeros elsewhere.
    pub fn expected_gram(&self) -> RationalMatrix {
        let n: usize = self.chain_lengths.iter().sum();
        let mut g = RationalMatrix::zero(n, n);
        let mut offset = 0;
        for (len, c) in self.chain_lengths.iter().zip(&self.constants) {
            for j in 0..*len {
                g.set(offset + j, offset + len - 1 - j, c.clone());
            }
            offset += len;
        }
        g
    }

    /// Chain generators (top vectors) of the chains of the given
    /// length, as coordinate vectors.
    pub fn generators_of_length(&self, length: usize) -> Vec<Vec<BigRational>> {
        let mut out = Vec::new();
        let mut offset = 0;
        for &len in &self.chain_lengths {
            if len == length {
                out.push(self.basis.column(offset + len - 1));
            }
            offset += len;
        }
        out
    }

    /// Gram matrix of `(v, w) -> <v, x^(length-1) w>` on the chain
    /// generators of the given length; non-degenerate for every part
    /// of the Jordan type.
    pub fn generator_form(
        &self,
        x: &RationalMatrix,
        ctx: &FormContext,
        length: usize,
    ) -> RationalMatrix {
        let gens = self.generators_of_length(length);
        let power = x.pow(length - 1);
        let mut g = RationalMatrix::zero(gens.len(), gens.len());
        for (a, v) in gens.iter().enumerate() {
            for (b, w) in gens.iter().enumerate() {
                g.set(a, b, ctx.pairing(v, &power.apply(w)));
            }
        }
        g
    }
}

/// Candidate vectors spanning combinations of the given basis: the
/// basis itself, pairwise sums and differences, then seeded random
/// small-integer combinations.
fn candidate_vectors(basis: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let mut out = basis.to_vec();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let sum: Vec<BigRational> =
                basis[i].iter().zip(&basis[j]).map(|(a, b)| a + b).collect();
            let diff: Vec<BigRational> =
                basis[i].iter().zip(&basis[j]).map(|(a, b)| a - b).collect();
            out.push(sum);
            out.push(diff);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e6f726d);
    for _ in 0..200 {
        let mut v = vec![BigRational::zero(); basis.first().map_or(0, Vec::len)];
        for b in basis {
            let c = rng.gen_range(-3i64..=3);
            if c != 0 {
                for (t, e) in v.iter_mut().zip(b) {
                    *t += rat(c) * e;
                }
            }
        }
        out.push(v);
    }
    out
}

/// Exact rational square root, when one exists.
fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let num = q.numer().sqrt();
    let den = q.denom().sqrt();
    if &(&num * &num) == q.numer() && &(&den * &den) == q.denom() {
        Some(BigRational::new(num, den))
    } else {
        None
    }
}

/// Computes a normal basis for a self-adjoint nilpotent `x` by
/// orthogonal splitting: pick a top generator whose self-pairing under
/// the highest power is nonzero, steer that constant toward the
/// canonical `+-1` for its row by an exact rational solve along
/// candidate directions, flatten the remaining in-chain pairings,
/// split off the chain, and recurse on its orthogonal complement.
///
/// Over the rationals the chain constants are square-class invariants,
/// so they cannot always be scaled to `+-1`; the built-in
/// representatives and the forced one-dimensional leftovers always
/// normalize exactly, and anything else keeps its reduced constant.
pub fn normal_basis(x: &RationalMatrix, ctx: &FormContext) -> NormalBasis {
    assert!(is_self_adjoint(x, ctx), "operator must be self-adjoint");
    let lambda = jordan_type(x).expect("operator must be nilpotent");
    let targets: Vec<BigRational> = canonical_gram_constants(&lambda)
        .into_iter()
        .map(rat)
        .collect();
    let n = ctx.n_ambient;
    let mut subspace: Vec<Vec<BigRational>> =
        (0..n).map(|i| RationalMatrix::identity(n).column(i)).collect();
    let mut chains: Vec<(Vec<Vec<BigRational>>, BigRational)> = Vec::new();
    while !subspace.is_empty() {
        // Nilpotency index of x restricted to the current subspace.
        let mut len = 0;
        let mut images = subspace.clone();
        while images.iter().any(|v| v.iter().any(|e| !e.is_zero())) {
            len += 1;
            images = images.iter().map(|v| x.apply(v)).collect();
        }
        let power = x.pow(len - 1);
        let pairing = |v: &[BigRational], w: &[BigRational]| ctx.pairing(v, &power.apply(w));
        let candidates = candidate_vectors(&subspace);
        let mut v = candidates
            .iter()
            .find(|v| !pairing(v, v).is_zero())
            .expect("a generator with nonzero self-pairing exists")
            .clone();
        let mut constant = pairing(&v, &v);
        let target = targets[chains.len()].clone();
        if constant != target {
            // Solve <v + s u, x^(len-1) (v + s u)> = target exactly
            // along some candidate direction u; the discriminant must
            // be a rational square.
            let mut solved = false;
            for u in &candidates {
                let b = pairing(&v, u);
                let qu = pairing(u, u);
                let s = if qu.is_zero() {
                    if b.is_zero() {
                        continue;
                    }
                    (&target - &constant) / (rat(2) * &b)
                } else {
                    let disc = &b * &b - &qu * (&constant - &target);
                    match rational_sqrt(&disc) {
                        Some(r) => (r - &b) / &qu,
                        None => continue,
                    }
                };
                for (a, e) in v.iter_mut().zip(u) {
                    *a += &s * e;
                }
                constant = target.clone();
                solved = true;
                break;
            }
            if !solved {
                if let Some(r) = rational_sqrt(&(&constant / &target)) {
                    for a in v.iter_mut() {
                        *a /= &r;
                    }
                    constant = target.clone();
                } else if let Some(r) = rational_sqrt(&(-&constant / &target)) {
                    for a in v.iter_mut() {
                        *a /= &r;
                    }
                    constant = -target.clone();
                }
            }
        }
        // Flatten in-chain pairings below the anti-diagonal.
        for k in 1..len {
            let target = ctx.pairing(&v, &x.pow(len - 1 - k).apply(&v));
            if !target.is_zero() {
                let alpha = -target / (rat(2) * &constant);
                let shifted = x.pow(k).apply(&v);
                for (a, b) in v.iter_mut().zip(&shifted) {
                    *a += &alpha * b;
                }
            }
        }
        let mut chain = Vec::with_capacity(len);
        for j in 0..len {
            chain.push(x.pow(len - 1 - j).apply(&v));
        }
        // Orthogonal complement of the chain inside the subspace.
        let mut constraints = RationalMatrix::zero(len, subspace.len());
        for (r, w) in chain.iter().enumerate() {
            for (c, b) in subspace.iter().enumerate() {
                constraints.set(r, c, ctx.pairing(b, w));
            }
        }
        let next: Vec<Vec<BigRational>> = constraints
            .nullspace()
            .into_iter()
            .map(|coeffs| {
                let mut w = vec![BigRational::zero(); n];
                for (c, b) in coeffs.iter().zip(&subspace) {
                    if !c.is_zero() {
                        for (t, e) in w.iter_mut().zip(b) {
                            *t += c * e;
                        }
                    }
                }
                w
            })
            .collect();
        assert_eq!(next.len(), subspace.len() - len, "chain splits off cleanly");
        chains.push((chain, constant));
        subspace = next;
    }
    let chain_lengths: Vec<usize> = chains.iter().map(|(c, _)| c.len()).collect();
    let constants: Vec<BigRational> = chains.iter().map(|(_, k)| k.clone()).collect();
    let columns: Vec<Vec<BigRational>> =
        chains.into_iter().flat_map(|(c, _)| c).collect();
    NormalBasis {
        basis: RationalMatrix::from_columns(&columns),
        chain_lengths,
        constants,
    }
}

/// Seeded random special isometry of the form, via the Cayley
/// transform `g = (1 - A)^(-1) (1 + A)` of a random `A` with
/// `A* = -A`; such `g` satisfies `tg J g = J` and `det g = 1` exactly.
pub fn random_h_element(n_ambient: usize, seed: u64) -> RationalMatrix {
    let ctx = form_matrix(n_ambient);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut b = RationalMatrix::zero(n_ambient, n_ambient);
        for i in 0..n_ambient {
            for j in 0..n_ambient {
                b.set(i, j, rat(rng.gen_range(-2i64..=2)));
            }
        }
        let a = b.sub(&adjoint(&b, &ctx));
        let one = RationalMatrix::identity(n_ambient);
        if let Some(inv) = one.sub(&a).inverse() {
            return inv.mul(&one.add(&a));
        }
    }
}
