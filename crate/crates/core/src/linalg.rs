//! Exact rational vectors, square matrices and subspaces.
//!
//! Everything here works over `Ratio<i64>`. The entries that show up in root
//! systems of rank at most eight are tiny, so overflow is not a practical
//! concern; arithmetic still panics on overflow in debug builds.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

/// Exact rational scalar.
pub type Q = Ratio<i64>;

/// A vector with exact rational entries.
pub type Vector = Vec<Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn half(n: i64) -> Q {
    Q::new(n, 2)
}

pub fn vector_from_ints(v: &[i64]) -> Vector {
    v.iter().map(|&x| q(x)).collect()
}

pub fn dot(u: &[Q], v: &[Q]) -> Q {
    debug_assert_eq!(u.len(), v.len());
    u.iter().zip(v).fold(Q::zero(), |acc, (a, b)| acc + a * b)
}

pub fn is_zero(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add(u: &[Q], v: &[Q]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub(u: &[Q], v: &[Q]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn scale(c: Q, v: &[Q]) -> Vector {
    v.iter().map(|a| c * a).collect()
}

pub fn neg(v: &[Q]) -> Vector {
    v.iter().map(|a| -a).collect()
}

/// Smallest positive integer multiple of `v` with integer entries, with the
/// gcd of the entries divided out.
pub fn primitive_integer_vector(v: &[Q]) -> Vec<i64> {
    let den = v
        .iter()
        .fold(1i64, |acc, x| num_integer::lcm(acc, *x.denom()));
    let ints: Vec<i64> = v.iter().map(|x| (x * den).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
    if g == 0 {
        ints
    } else {
        ints.into_iter().map(|x| x / g).collect()
    }
}

/// Reduced row echelon form, in place. Returns the pivot columns.
pub fn rref(rows: &mut Vec<Vector>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(vectors: &[Vector]) -> usize {
    let mut rows = vectors.to_vec();
    rref(&mut rows).len()
}

/// Basis of the null space `{x : M x = 0}` for a matrix given by rows.
pub fn kernel(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Q::zero(); ncols];
            x[f] = Q::one();
            for (row, &p) in m.iter().zip(&pivots) {
                x[p] = -row[f];
            }
            x
        })
        .collect()
}

/// Solves `sum_i c_i basis[i] = target` exactly. Returns `None` when the
/// target is outside the span. The basis must be linearly independent.
pub fn solve_in_basis(basis: &[Vector], target: &[Q]) -> Option<Vector> {
    let k = basis.len();
    let d = target.len();
    // Augmented system with one row per ambient coordinate.
    let mut rows: Vec<Vector> = (0..d)
        .map(|i| {
            let mut row: Vector = basis.iter().map(|b| b[i]).collect();
            row.push(target[i]);
            row
        })
        .collect();
    let pivots = rref(&mut rows);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![Q::zero(); k];
    for (row, &p) in rows.iter().zip(&pivots) {
        x[p] = row[k];
    }
    Some(x)
}

/// Square matrix with exact rational entries, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    n: usize,
    data: Vec<Q>,
}

impl RationalMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![Q::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Q::one();
        }
        Self { n, data }
    }

    pub fn from_rows(rows: &[Vector]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self {
            n,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    /// The matrix whose `j`th column is `cols[j]`.
    pub fn from_columns(cols: &[Vector]) -> Self {
        let n = cols.len();
        let mut m = Self::identity(n);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), n, "matrix must be square");
            for (i, x) in col.iter().enumerate() {
                m.data[i * n + j] = *x;
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn apply(&self, v: &[Q]) -> Vector {
        (0..self.n).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut data = vec![Q::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Self { n, data }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut data = vec![Q::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.data[i * n + j];
            }
        }
        Self { n, data }
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut rows: Vec<Vector> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
                r
            })
            .collect();
        let pivots = rref(&mut rows);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        Some(Self::from_rows(
            &rows.iter().map(|r| r[n..].to_vec()).collect::<Vec<_>>(),
        ))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.n).map(|i| {
                self.row(i)
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            }))
            .finish()
    }
}

/// A linear subspace, stored as the nonzero rows of the reduced row echelon
/// form of any spanning set. The stored basis is canonical, so two
/// subspaces are equal exactly when their bases are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        let mut rows: Vec<Vector> = vectors.to_vec();
        assert!(rows.iter().all(|r| r.len() == ambient));
        rref(&mut rows);
        Self {
            ambient,
            basis: rows,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains_vector(&self, v: &[Q]) -> bool {
        if is_zero(v) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rank(&rows) == self.dim()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    /// Image under a linear map.
    pub fn map(&self, m: &RationalMatrix) -> Self {
        let imgs: Vec<Vector> = self.basis.iter().map(|v| m.apply(v)).collect();
        Self::span(self.ambient, &imgs)
    }
}
