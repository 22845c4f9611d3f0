//! Root systems of the simple types A through G in exact rational
//! coordinates.
//!
//! Classical types use the usual ambient coordinates: `A_n` lives in the
//! sum-zero hyperplane of `Q^{n+1}`, and `B_n`, `C_n`, `D_n` in `Q^n`. `E6`
//! uses the eight-dimensional coordinates in which its simple roots are
//! `½(1,1,1,1,1;1,1,1)`, `-(1,1,0,0,0;0,0,0)`, `(1,-1,0,...)`,
//! `(0,1,-1,0,...)`, `(0,0,1,-1,...)`, `(0,0,0,1,-1;...)`. `E7`, `E8`, `F4`
//! and `G2` use Bourbaki's planches.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::linalg::{self, dot, half, q, vector_from_ints, RationalMatrix, Vector, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => input(format!("unknown family `{other}` (expected one of A–G)")),
        }
    }
}

/// A Killing–Cartan label such as `A3` or `E6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawType", into = "RawType")]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

#[derive(Serialize, Deserialize)]
struct RawType {
    family: Family,
    rank: usize,
}

impl TryFrom<RawType> for SimpleType {
    type Error = Error;
    fn try_from(r: RawType) -> Result<Self> {
        SimpleType::new(r.family, r.rank)
    }
}

impl From<SimpleType> for RawType {
    fn from(t: SimpleType) -> Self {
        RawType {
            family: t.family,
            rank: t.rank,
        }
    }
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 2,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return input(format!(
                "{}{rank} is not an admissible simple type",
                family.letter()
            ));
        }
        Ok(Self { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Number of integer exponents describing a circle in this factor:
    /// `n + 1` for `A_n`, otherwise the rank.
    pub fn exponent_len(self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    /// Dimension of the ambient coordinate space.
    pub fn ambient_dim(self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::B | Family::C | Family::D | Family::F => self.rank,
            Family::G => 3,
            Family::E => 8,
        }
    }

    /// Number of roots, from the classical formulas.
    pub fn root_count(self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1),
            (Family::B | Family::C, _) => 2 * n * n,
            (Family::D, _) => 2 * n * (n - 1),
            (Family::E, 6) => 72,
            (Family::E, 7) => 126,
            (Family::E, _) => 240,
            (Family::F, _) => 48,
            (Family::G, _) => 12,
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    /// Parses labels like `A3`, `e6`, `D 5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let Some(letter) = chars.next() else {
            return input("empty type label");
        };
        let family: Family = letter.to_string().parse()?;
        let rank: usize = chars
            .as_str()
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("bad rank in type label `{s}`")))?;
        SimpleType::new(family, rank)
    }
}

/// A finite crystallographic root system with a chosen set of simple roots
/// and a chosen positive system.
#[derive(Clone)]
pub struct RootSystem {
    ty: SimpleType,
    dim: usize,
    simple: Vec<Vector>,
    roots: Vec<Vector>,
    positive: Vec<bool>,
    index: HashMap<Vector, usize>,
    /// Integer coordinates of every root in the basis of simple roots.
    coords: Vec<Vec<i64>>,
    simple_index: Vec<usize>,
    negation: Vec<usize>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("type", &self.ty)
            .field("roots", &self.roots.len())
            .finish()
    }
}

fn unit(d: usize, i: usize, c: i64) -> Vector {
    let mut v = vec![Q::zero(); d];
    v[i] = q(c);
    v
}

fn e_minus_e(d: usize, i: usize, j: usize) -> Vector {
    let mut v = vec![Q::zero(); d];
    v[i] = Q::one();
    v[j] = -Q::one();
    v
}

fn halves(v: &[i64]) -> Vector {
    v.iter().map(|&x| half(x)).collect()
}

/// The simple roots used for each type, in ambient coordinates.
pub fn standard_simple_roots(t: SimpleType) -> Vec<Vector> {
    let n = t.rank;
    let d = t.ambient_dim();
    match t.family {
        Family::A => (0..n).map(|i| e_minus_e(d, i, i + 1)).collect(),
        Family::B | Family::C | Family::D => {
            let mut s: Vec<Vector> = (0..n.saturating_sub(1))
                .map(|i| e_minus_e(d, i, i + 1))
                .collect();
            s.push(match t.family {
                Family::B => unit(d, n - 1, 1),
                Family::C => unit(d, n - 1, 2),
                _ => {
                    let mut v = unit(d, n - 1, 1);
                    v[n - 2] = Q::one();
                    v
                }
            });
            s
        }
        Family::G => vec![vector_from_ints(&[1, -1, 0]), vector_from_ints(&[-2, 1, 1])],
        Family::F => vec![
            vector_from_ints(&[0, 1, -1, 0]),
            vector_from_ints(&[0, 0, 1, -1]),
            vector_from_ints(&[0, 0, 0, 1]),
            halves(&[1, -1, -1, -1]),
        ],
        Family::E if n == 6 => vec![
            halves(&[1, 1, 1, 1, 1, 1, 1, 1]),
            vector_from_ints(&[-1, -1, 0, 0, 0, 0, 0, 0]),
            vector_from_ints(&[1, -1, 0, 0, 0, 0, 0, 0]),
            vector_from_ints(&[0, 1, -1, 0, 0, 0, 0, 0]),
            vector_from_ints(&[0, 0, 1, -1, 0, 0, 0, 0]),
            vector_from_ints(&[0, 0, 0, 1, -1, 0, 0, 0]),
        ],
        Family::E => {
            let mut s = vec![
                halves(&[1, -1, -1, -1, -1, -1, -1, 1]),
                vector_from_ints(&[1, 1, 0, 0, 0, 0, 0, 0]),
            ];
            s.extend((0..n - 2).map(|i| e_minus_e(d, i + 1, i)));
            s
        }
    }
}

/// Linear functional cutting out the positive roots of `E6`:
/// `γ_ab`, `δ_ab` (a < b), `η_ab`, `ε_a` and `ζ`.
fn e6_positivity(v: &[Q]) -> Q {
    let tail = v[5] + v[6] + v[7];
    tail * q(100) + v[0] * q(5) + v[1] * q(4) + v[2] * q(3) + v[3] * q(2) + v[4]
}

impl RootSystem {
    pub fn new(t: SimpleType) -> Self {
        Self::from_simple_roots(t, standard_simple_roots(t))
    }

    fn from_simple_roots(t: SimpleType, simple: Vec<Vector>) -> Self {
        let dim = t.ambient_dim();
        let mut roots: Vec<Vector> = Vec::new();
        let mut index: HashMap<Vector, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        for a in &simple {
            if !index.contains_key(a) {
                index.insert(a.clone(), roots.len());
                roots.push(a.clone());
                queue.push_back(roots.len() - 1);
            }
        }
        while let Some(i) = queue.pop_front() {
            for a in &simple {
                let img = reflect(a, &roots[i]);
                if !index.contains_key(&img) {
                    index.insert(img.clone(), roots.len());
                    roots.push(img);
                    queue.push_back(roots.len() - 1);
                }
            }
        }

        let gram = RationalMatrix::from_rows(
            &simple
                .iter()
                .map(|a| simple.iter().map(|b| dot(a, b)).collect())
                .collect::<Vec<Vector>>(),
        );
        let gram_inv = gram.inverse().expect("simple roots are independent");
        let coords: Vec<Vec<i64>> = roots
            .iter()
            .map(|r| {
                let pairings: Vector = simple.iter().map(|a| dot(a, r)).collect();
                gram_inv
                    .apply(&pairings)
                    .iter()
                    .map(|c| {
                        assert!(c.is_integer(), "root is not an integer combination");
                        c.to_integer()
                    })
                    .collect()
            })
            .collect();

        let positive = roots
            .iter()
            .zip(&coords)
            .map(|(r, c)| {
                if t.family == Family::E && t.rank == 6 {
                    e6_positivity(r).is_positive()
                } else {
                    c.iter().all(|&x| x >= 0)
                }
            })
            .collect();
        let simple_index = simple.iter().map(|a| index[a]).collect();
        let negation = roots.iter().map(|r| index[&linalg::neg(r)]).collect();

        Self {
            ty: t,
            dim,
            simple,
            roots,
            positive,
            index,
            coords,
            simple_index,
            negation,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple
    }

    /// Root indices of the simple roots, in order.
    pub fn simple_root_indices(&self) -> &[usize] {
        &self.simple_index
    }

    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &[Q] {
        &self.roots[i]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn index_of(&self, v: &[Q]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.positive[i]
    }

    pub fn negation_of(&self, i: usize) -> usize {
        self.negation[i]
    }

    pub fn positive_root_indices(&self) -> Vec<usize> {
        (0..self.roots.len())
            .filter(|&i| self.positive[i])
            .collect()
    }

    pub fn positive_roots(&self) -> Vec<Vector> {
        self.positive_root_indices()
            .into_iter()
            .map(|i| self.roots[i].clone())
            .collect()
    }

    /// Integer coordinates of root `i` in the basis of simple roots.
    pub fn root_coords(&self, i: usize) -> &[i64] {
        &self.coords[i]
    }

    /// Exact coordinates of `v` in the basis of simple roots, or `None` if
    /// `v` is outside their span.
    pub fn coords_in_simple_basis(&self, v: &[Q]) -> Option<Vector> {
        if v.len() != self.dim {
            return None;
        }
        linalg::solve_in_basis(&self.simple, v)
    }

    /// The base of the positive system: positive roots that are not a sum
    /// of two positive roots.
    pub fn base(&self) -> Vec<usize> {
        let pos = self.positive_root_indices();
        pos.iter()
            .copied()
            .filter(|&i| {
                !pos.iter().any(|&j| {
                    let rest = linalg::sub(&self.roots[i], &self.roots[j]);
                    self.index_of(&rest).is_some_and(|k| self.positive[k])
                })
            })
            .collect()
    }

    /// The coroot `2α/(α·α)` of root `i`.
    pub fn coroot(&self, i: usize) -> Vector {
        let a = &self.roots[i];
        linalg::scale(q(2) / dot(a, a), a)
    }

    /// Reflection matrix of a root in ambient coordinates.
    pub fn reflection_matrix(&self, alpha: &[Q]) -> Result<RationalMatrix> {
        if self.index_of(alpha).is_none() {
            return input(format!("{alpha:?} is not a root of {}", self.ty));
        }
        let d = self.dim;
        let cols: Vec<Vector> = (0..d).map(|j| reflect(alpha, &unit(d, j, 1))).collect();
        Ok(RationalMatrix::from_columns(&cols))
    }

    /// Permutation of root indices induced by the reflection in root `i`.
    pub fn reflection_permutation(&self, i: usize) -> Vec<usize> {
        let a = &self.roots[i];
        self.roots
            .iter()
            .map(|r| self.index[&reflect(a, r)])
            .collect()
    }
}

/// `s_α(v) = v − 2(v·α)/(α·α)·α`.
pub fn reflect(alpha: &[Q], v: &[Q]) -> Vector {
    let c = q(2) * dot(v, alpha) / dot(alpha, alpha);
    v.iter().zip(alpha).map(|(x, a)| x - c * a).collect()
}

pub fn mutually_orthogonal(roots: &[Vector]) -> bool {
    roots
        .iter()
        .enumerate()
        .all(|(i, a)| roots[i + 1..].iter().all(|b| dot(a, b).is_zero()))
}
