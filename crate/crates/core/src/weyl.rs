//! Exact enumeration of finite Weyl groups.
//!
//! Elements are stored as permutations of the root indices of a
//! [`RootSystem`]. An element is determined by where it sends the simple
//! roots, so those `rank` images serve as the dedup key during the
//! breadth-first closure.

use std::collections::HashMap;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohomo::weyl_order_from_exponents;
use crate::error::{input, Error, Result};
use crate::linalg::{self, primitive_integer_vector, RationalMatrix, Subspace, Vector, Q};
use crate::rootsys::RootSystem;

/// Largest group enumerated unless the caller raises the budget. Admits
/// `E7` (2,903,040 elements) and refuses `E8`.
pub const DEFAULT_BUDGET: u64 = 5_000_000;

/// A Weyl group element as a permutation of root indices: root `i` is sent
/// to root `perm[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylElement {
    perm: Vec<u8>,
}

impl WeylElement {
    pub fn identity(n_roots: usize) -> Self {
        Self {
            perm: (0..n_roots).map(|i| i as u8).collect(),
        }
    }

    pub fn from_permutation(perm: Vec<u8>) -> Self {
        Self { perm }
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.perm
    }

    pub fn image(&self, root: usize) -> usize {
        self.perm[root] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            perm: other.perm.iter().map(|&i| self.perm[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut perm = vec![0u8; self.perm.len()];
        for (i, &j) in self.perm.iter().enumerate() {
            perm[j as usize] = i as u8;
        }
        Self { perm }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut out = Self::identity(self.perm.len());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        out
    }

    /// Order as the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut order = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.perm[i] as usize;
                len += 1;
            }
            order = order.lcm(&len);
        }
        order
    }

    /// Matrix of the element in the ambient coordinates of `rs`, acting as
    /// the identity on the orthogonal complement of the span of the roots.
    pub fn matrix(&self, rs: &RootSystem) -> RationalMatrix {
        let d = rs.ambient_dim();
        let simple = rs.simple_roots();
        let mut src: Vec<Vector> = simple.to_vec();
        let mut dst: Vec<Vector> = rs
            .simple_root_indices()
            .iter()
            .map(|&i| rs.root(self.image(i)).to_vec())
            .collect();
        let rows: Vec<Vector> = simple.to_vec();
        for v in linalg::kernel(&rows, d) {
            src.push(v.clone());
            dst.push(v);
        }
        let a = RationalMatrix::from_columns(&dst);
        let b = RationalMatrix::from_columns(&src);
        a.mul(
            &b.inverse()
                .expect("simple roots plus complement form a basis"),
        )
    }

    /// Matrix of the element in the basis of simple roots. Column `j` holds
    /// the coordinates of the image of the `j`th simple root.
    pub fn simple_basis_matrix(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        let r = rs.rank();
        let idx = rs.simple_root_indices();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| rs.root_coords(self.image(idx[j]))[i])
                    .collect()
            })
            .collect()
    }
}

/// An enumerated Weyl group. Immutable once built.
pub struct WeylGroup {
    rs: Arc<RootSystem>,
    n_roots: usize,
    /// Flat permutation table, `order × n_roots`.
    perms: Vec<u8>,
    lookup: HashMap<u64, u32>,
    generators: Vec<WeylElement>,
}

impl std::fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WeylGroup")
            .field("type", &self.rs.simple_type())
            .field("order", &self.order())
            .finish()
    }
}

fn key_of(perm: &[u8], simple: &[usize]) -> u64 {
    simple
        .iter()
        .fold(0u64, |acc, &s| (acc << 8) | u64::from(perm[s]))
}

fn check_budget(rs: &RootSystem, budget: u64) -> Result<u128> {
    let required = weyl_order_from_exponents(rs.simple_type());
    if required > u128::from(budget) {
        return Err(Error::Capacity { required, budget });
    }
    if rs.len() > 256 || rs.rank() > 8 {
        return Err(Error::Capacity { required, budget });
    }
    Ok(required)
}

/// Enumerates `W` by breadth-first closure under right multiplication by
/// the simple reflections.
pub fn generate_weyl(rs: Arc<RootSystem>, budget: u64) -> Result<WeylGroup> {
    let expected = check_budget(&rs, budget)?;
    let n = rs.len();
    let simple: Vec<usize> = rs.simple_root_indices().to_vec();
    let generators: Vec<WeylElement> = simple
        .iter()
        .map(|&i| {
            WeylElement::from_permutation(
                rs.reflection_permutation(i)
                    .into_iter()
                    .map(|j| j as u8)
                    .collect(),
            )
        })
        .collect();

    let mut perms: Vec<u8> = Vec::with_capacity(expected as usize * n);
    let mut lookup: HashMap<u64, u32> = HashMap::with_capacity(expected as usize);
    let id = WeylElement::identity(n);
    lookup.insert(key_of(&id.perm, &simple), 0);
    perms.extend_from_slice(&id.perm);

    let mut head = 0usize;
    let mut key_buf = vec![0u8; n];
    while head * n < perms.len() {
        for g in &generators {
            // x ∘ g, keyed by the images of the simple roots only.
            let x = &perms[head * n..(head + 1) * n];
            for &s in &simple {
                key_buf[s] = x[g.perm[s] as usize];
            }
            let key = key_of(&key_buf, &simple);
            if lookup.contains_key(&key) {
                continue;
            }
            let next: Vec<u8> = g.perm.iter().map(|&i| x[i as usize]).collect();
            let idx = (perms.len() / n) as u32;
            lookup.insert(key, idx);
            perms.extend_from_slice(&next);
        }
        head += 1;
    }

    let group = WeylGroup {
        rs,
        n_roots: n,
        perms,
        lookup,
        generators,
    };
    if group.order() as u128 != expected {
        return Err(Error::Internal(format!(
            "enumerated {} elements of W({}), expected {expected}",
            group.order(),
            group.rs.simple_type()
        )));
    }
    Ok(group)
}

impl WeylGroup {
    /// Rebuilds a group from a stored permutation table. Every element is
    /// checked to be a permutation, the table is checked for duplicates, for
    /// the identity, and for closure under the generators.
    pub fn from_table(rs: Arc<RootSystem>, perms: Vec<u8>, budget: u64) -> Result<Self> {
        let expected = check_budget(&rs, budget)?;
        let n = rs.len();
        if n == 0 || perms.len() != expected as usize * n {
            return Err(Error::Internal(
                "permutation table has the wrong size".into(),
            ));
        }
        let simple: Vec<usize> = rs.simple_root_indices().to_vec();
        let mut lookup = HashMap::with_capacity(expected as usize);
        let mut seen = vec![false; n];
        for (i, p) in perms.chunks_exact(n).enumerate() {
            seen.iter_mut().for_each(|s| *s = false);
            for &j in p {
                let j = j as usize;
                if j >= n || seen[j] {
                    return Err(Error::Internal(format!("entry {i} is not a permutation")));
                }
                seen[j] = true;
            }
            if lookup.insert(key_of(p, &simple), i as u32).is_some() {
                return Err(Error::Internal(format!("entry {i} is a duplicate")));
            }
        }
        let generators: Vec<WeylElement> = simple
            .iter()
            .map(|&i| {
                WeylElement::from_permutation(
                    rs.reflection_permutation(i)
                        .into_iter()
                        .map(|j| j as u8)
                        .collect(),
                )
            })
            .collect();
        let group = Self {
            rs,
            n_roots: n,
            perms,
            lookup,
            generators,
        };
        if !group.element(0).is_identity() {
            return Err(Error::Internal(
                "table does not start with the identity".into(),
            ));
        }
        for i in 0..group.order() {
            let x = group.element(i);
            for g in &group.generators {
                let y = x.compose(g);
                match group.index_of(&y) {
                    Some(k) if group.perm(k) == y.as_slice() => {}
                    _ => return Err(Error::Internal("table is not closed".into())),
                }
            }
        }
        Ok(group)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> Arc<RootSystem> {
        Arc::clone(&self.rs)
    }

    pub fn order(&self) -> usize {
        self.perms.len() / self.n_roots
    }

    pub fn table(&self) -> &[u8] {
        &self.perms
    }

    pub fn generators(&self) -> &[WeylElement] {
        &self.generators
    }

    pub fn perm(&self, i: usize) -> &[u8] {
        &self.perms[i * self.n_roots..(i + 1) * self.n_roots]
    }

    pub fn element(&self, i: usize) -> WeylElement {
        WeylElement::from_permutation(self.perm(i).to_vec())
    }

    pub fn elements(&self) -> impl Iterator<Item = WeylElement> + '_ {
        self.perms
            .chunks_exact(self.n_roots)
            .map(|p| WeylElement::from_permutation(p.to_vec()))
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        let key = key_of(&w.perm, self.rs.simple_root_indices());
        self.lookup.get(&key).map(|&i| i as usize)
    }

    fn index_of_key_buf(&self, buf: &[u8]) -> usize {
        self.lookup[&key_of(buf, self.rs.simple_root_indices())] as usize
    }

    /// Partition into conjugacy classes by orbits under conjugation by the
    /// generators. Classes are listed by their smallest element index.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let n = self.order();
        let simple = self.rs.simple_root_indices();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        let mut buf = vec![0u8; self.n_roots];
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let cid = classes.len() as u32;
            class_of[start] = cid;
            let mut members = vec![start as u32];
            let mut head = 0;
            while head < members.len() {
                let x = self.perm(members[head] as usize);
                for g in &self.generators {
                    // g x g, since each generator is an involution.
                    for &s in simple {
                        let gs = g.perm[s] as usize;
                        buf[s] = g.perm[x[gs] as usize];
                    }
                    let y = self.index_of_key_buf(&buf);
                    if class_of[y] == u32::MAX {
                        class_of[y] = cid;
                        members.push(y as u32);
                    }
                }
                head += 1;
            }
            members.sort_unstable();
            let order = self.element(start).order();
            classes.push(ConjugacyClass {
                representative: start,
                size: members.len(),
                order,
                members,
            });
        }
        classes
    }

    /// Applies element `i` to the vector with integer coordinates `x` in the
    /// basis of simple roots.
    fn apply_in_simple_coords(&self, i: usize, x: &[i64], out: &mut [i64]) {
        out.iter_mut().for_each(|o| *o = 0);
        let p = self.perm(i);
        for (k, &s) in self.rs.simple_root_indices().iter().enumerate() {
            if x[k] == 0 {
                continue;
            }
            let img = self.rs.root_coords(p[s] as usize);
            for (o, &c) in out.iter_mut().zip(img) {
                *o += x[k] * c;
            }
        }
    }

    /// Searches the whole group for `w` with `w·v = −v`. The first witness
    /// in enumeration order is returned, independent of scheduling.
    pub fn exists_reflecting_element(&self, v: &[Q]) -> Result<Option<WeylElement>> {
        if linalg::is_zero(v) {
            return input("cannot reflect the zero vector");
        }
        let Some(coords) = self.rs.coords_in_simple_basis(v) else {
            return input(format!(
                "vector is not in the span of the roots of {}",
                self.rs.simple_type()
            ));
        };
        let x = primitive_integer_vector(&coords);
        let target: Vec<i64> = x.iter().map(|c| -c).collect();
        let r = x.len();
        let found = (0..self.order()).into_par_iter().find_first(|&i| {
            let mut out = vec![0i64; r];
            self.apply_in_simple_coords(i, &x, &mut out);
            out == target
        });
        Ok(found.map(|i| self.element(i)))
    }

    /// Indices of elements fixing every listed root.
    pub fn pointwise_stabilizer(&self, roots: &[usize]) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| {
                let p = self.perm(i);
                roots.iter().all(|&r| p[r] as usize == r)
            })
            .collect()
    }
}

/// A conjugacy class of an enumerated group.
#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    /// Index of the representative in the group's element table.
    pub representative: usize,
    pub size: usize,
    /// Common element order of the class.
    pub order: u64,
    /// Sorted element indices.
    pub members: Vec<u32>,
}

pub fn conjugacy_classes(w: &WeylGroup) -> Vec<ConjugacyClass> {
    w.conjugacy_classes()
}

/// The `(−1)`-eigenspace of `w` inside the span of the roots, in ambient
/// coordinates.
pub fn minus_one_eigenspace(rs: &RootSystem, w: &WeylElement) -> Subspace {
    let m = w.simple_basis_matrix(rs);
    let r = rs.rank();
    // Rows of (M + I).
    let rows: Vec<Vector> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| Q::from_integer(m[i][j] + i64::from(i == j)))
                .collect()
        })
        .collect();
    let ker = linalg::kernel(&rows, r);
    let simple = rs.simple_roots();
    let ambient: Vec<Vector> = ker
        .iter()
        .map(|c| {
            let mut v = vec![Q::zero(); rs.ambient_dim()];
            for (ci, a) in c.iter().zip(simple) {
                for (vj, aj) in v.iter_mut().zip(a) {
                    *vj += ci * aj;
                }
            }
            v
        })
        .collect();
    Subspace::span(rs.ambient_dim(), &ambient)
}

/// For `w` of order `2^k·m` with `m` odd, returns `w^m`. Its order is a
/// power of two and its `(−1)`-eigenspace contains that of `w`.
pub fn odd_power_reduction(w: &WeylElement) -> WeylElement {
    let mut m = w.order();
    while m.is_multiple_of(2) {
        m /= 2;
    }
    w.pow(m)
}

/// Order and class census of an enumerated group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylSummary {
    pub group: crate::rootsys::SimpleType,
    pub order: u64,
    /// `∏(e_i + 1)` over the exponents.
    pub expected_order: u64,
    pub order_matches: bool,
    pub class_count: usize,
    pub class_sizes: Vec<usize>,
    pub class_orders: Vec<u64>,
}

impl WeylGroup {
    pub fn summary(&self) -> WeylSummary {
        let classes = self.conjugacy_classes();
        let expected_order = weyl_order_from_exponents(self.rs.simple_type()) as u64;
        WeylSummary {
            group: self.rs.simple_type(),
            order: self.order() as u64,
            expected_order,
            order_matches: self.order() as u64 == expected_order,
            class_count: classes.len(),
            class_sizes: classes.iter().map(|c| c.size).collect(),
            class_orders: classes.iter().map(|c| c.order).collect(),
        }
    }
}

impl WeylSummary {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }
}

impl std::fmt::Display for WeylSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "|W({})| = {}", self.group, self.order)?;
        writeln!(
            f,
            "product of (e_i + 1) = {} ({})",
            self.expected_order,
            if self.order_matches {
                "agrees"
            } else {
                "DISAGREES"
            }
        )?;
        writeln!(f, "conjugacy classes: {}", self.class_count)?;
        let sizes: Vec<String> = self
            .class_sizes
            .iter()
            .zip(&self.class_orders)
            .map(|(s, o)| format!("{s}(order {o})"))
            .collect();
        write!(f, "class sizes: {}", sizes.join(", "))
    }
}
