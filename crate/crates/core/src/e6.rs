//! The `E6` computation: orthogonal quadruples of roots, the 45
//! four-dimensional spaces they span, the `(−1)`-eigenspace containment
//! check over the conjugacy classes of `W(E6)`, and the circle test built on
//! top of it.
//!
//! Positive roots of `E6` in the eight-dimensional coordinates come in five
//! families (indices range over `1..=5`, `a < b`):
//!
//! - `γ_ab = e_a + e_b`, `δ_ab = e_a − e_b`;
//! - `ε_a = ½(−1,…,+1 at a,…,−1; 1,1,1)`;
//! - `η_ab = ½(+1,…,−1 at a and b,…; 1,1,1)`;
//! - `ζ = ½(1,1,1,1,1; 1,1,1)`.
//!
//! A circle is reflected in `E6` exactly when its line lies in one of the
//! spans of four mutually orthogonal roots.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::linalg::{dot, q, Subspace, Vector, Q};
use crate::reflect::{Criterion, ReflectionVerdict};
use crate::rootsys::{Family, RootSystem, SimpleType};
use crate::weyl::{minus_one_eigenspace, WeylGroup};

/// The five families of positive roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootFamily {
    Gamma,
    Delta,
    Epsilon,
    Zeta,
    Eta,
}

/// A root of `E6` named by family and indices, with a sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootLabel {
    pub negative: bool,
    pub family: RootFamily,
    pub a: usize,
    pub b: usize,
}

impl RootLabel {
    pub fn of(v: &[Q]) -> Option<Self> {
        if v.len() != 8 {
            return None;
        }
        if v.iter().all(|x| x.is_integer()) {
            let nz: Vec<usize> = (0..5).filter(|&i| !v[i].is_zero()).collect();
            if nz.len() != 2 || v[5..].iter().any(|x| !x.is_zero()) {
                return None;
            }
            let (i, j) = (nz[0], nz[1]);
            let (x, y) = (v[i].to_integer(), v[j].to_integer());
            return match (x, y) {
                (1, 1) | (-1, -1) => Some(Self {
                    negative: x < 0,
                    family: RootFamily::Gamma,
                    a: i + 1,
                    b: j + 1,
                }),
                (1, -1) | (-1, 1) => Some(Self {
                    negative: x < 0,
                    family: RootFamily::Delta,
                    a: i + 1,
                    b: j + 1,
                }),
                _ => None,
            };
        }
        let negative = v[5].is_negative();
        let s = if negative { q(-1) } else { q(1) };
        let w: Vec<Q> = v.iter().map(|x| x * s).collect();
        let minus: Vec<usize> = (0..5).filter(|&i| w[i].is_negative()).collect();
        let plus: Vec<usize> = (0..5).filter(|&i| w[i].is_positive()).collect();
        match minus.len() {
            0 => Some(Self {
                negative,
                family: RootFamily::Zeta,
                a: 0,
                b: 0,
            }),
            2 => Some(Self {
                negative,
                family: RootFamily::Eta,
                a: minus[0] + 1,
                b: minus[1] + 1,
            }),
            4 => Some(Self {
                negative,
                family: RootFamily::Epsilon,
                a: plus[0] + 1,
                b: 0,
            }),
            _ => None,
        }
    }
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        match self.family {
            RootFamily::Gamma => write!(f, "γ{}{}", self.a, self.b),
            RootFamily::Delta => write!(f, "δ{}{}", self.a, self.b),
            RootFamily::Eta => write!(f, "η{}{}", self.a, self.b),
            RootFamily::Epsilon => write!(f, "ε{}", self.a),
            RootFamily::Zeta => f.write_str("ζ"),
        }
    }
}

/// A named root as a vector: `gamma(1,2)`, `delta(2,3)`, and so on.
pub fn gamma(a: usize, b: usize) -> Vector {
    let mut v = vec![Q::zero(); 8];
    v[a - 1] = q(1);
    v[b - 1] = q(1);
    v
}

pub fn delta(a: usize, b: usize) -> Vector {
    let mut v = vec![Q::zero(); 8];
    v[a - 1] = q(1);
    v[b - 1] = q(-1);
    v
}

pub fn epsilon(a: usize) -> Vector {
    let mut v = vec![Q::new(-1, 2); 8];
    v[a - 1] = Q::new(1, 2);
    for x in &mut v[5..] {
        *x = Q::new(1, 2);
    }
    v
}

pub fn eta(a: usize, b: usize) -> Vector {
    let mut v = vec![Q::new(1, 2); 8];
    v[a - 1] = Q::new(-1, 2);
    v[b - 1] = Q::new(-1, 2);
    v
}

pub fn zeta() -> Vector {
    vec![Q::new(1, 2); 8]
}

/// Four mutually orthogonal positive roots, by root index, sorted.
pub type Quadruple = [usize; 4];

/// A span of four mutually orthogonal roots together with its three
/// positive bases.
#[derive(Debug, Clone)]
pub struct QuadSpace {
    pub bases: Vec<Quadruple>,
    pub subspace: Subspace,
    /// Indices of all roots lying in the span (24 of them: a `D4`).
    pub roots: Vec<usize>,
}

/// Precomputed `E6` data shared by every caller.
pub struct E6Structure {
    rs: RootSystem,
    quadruples: Vec<Quadruple>,
    spaces: Vec<QuadSpace>,
}

impl E6Structure {
    fn build() -> Self {
        let rs = RootSystem::new(SimpleType::new(Family::E, 6).expect("E6 is admissible"));
        let quadruples = enumerate_orthogonal_quadruple_sets(&rs);
        let spaces = group_into_spaces(&rs, &quadruples);
        Self {
            rs,
            quadruples,
            spaces,
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn quadruples(&self) -> &[Quadruple] {
        &self.quadruples
    }

    pub fn spaces(&self) -> &[QuadSpace] {
        &self.spaces
    }

    pub fn label(&self, i: usize) -> RootLabel {
        RootLabel::of(self.rs.root(i)).expect("every E6 root has a label")
    }

    pub fn index(&self, v: &[Q]) -> usize {
        self.rs.index_of(v).expect("vector is an E6 root")
    }
}

pub fn structure() -> &'static E6Structure {
    static CELL: OnceLock<E6Structure> = OnceLock::new();
    CELL.get_or_init(E6Structure::build)
}

fn orthogonality(rs: &RootSystem, idx: &[usize]) -> Vec<Vec<bool>> {
    idx.iter()
        .map(|&i| {
            idx.iter()
                .map(|&j| dot(rs.root(i), rs.root(j)).is_zero())
                .collect()
        })
        .collect()
}

/// All sets of mutually orthogonal positive roots of the given size.
pub fn orthogonal_positive_sets(rs: &RootSystem, size: usize) -> Vec<Vec<usize>> {
    let pos = rs.positive_root_indices();
    let orth = orthogonality(rs, &pos);
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn grow(
        start: usize,
        size: usize,
        orth: &[Vec<bool>],
        pos: &[usize],
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if stack.len() == size {
            let mut s: Vec<usize> = stack.iter().map(|&k| pos[k]).collect();
            s.sort_unstable();
            out.push(s);
            return;
        }
        for k in start..pos.len() {
            if stack.iter().all(|&m| orth[m][k]) {
                stack.push(k);
                grow(k + 1, size, orth, pos, stack, out);
                stack.pop();
            }
        }
    }
    grow(0, size, &orth, &pos, &mut stack, &mut out);
    out.sort();
    out
}

pub fn enumerate_orthogonal_quadruple_sets(rs: &RootSystem) -> Vec<Quadruple> {
    orthogonal_positive_sets(rs, 4)
        .into_iter()
        .map(|s| [s[0], s[1], s[2], s[3]])
        .collect()
}

fn group_into_spaces(rs: &RootSystem, quads: &[Quadruple]) -> Vec<QuadSpace> {
    let mut by_span: BTreeMap<Vec<usize>, (Subspace, Vec<Quadruple>)> = BTreeMap::new();
    for q in quads {
        let basis: Vec<Vector> = q.iter().map(|&i| rs.root(i).to_vec()).collect();
        let sub = Subspace::span(rs.ambient_dim(), &basis);
        let roots: Vec<usize> = (0..rs.len())
            .filter(|&i| sub.contains_vector(rs.root(i)))
            .collect();
        by_span
            .entry(roots)
            .or_insert_with(|| (sub, Vec::new()))
            .1
            .push(*q);
    }
    by_span
        .into_iter()
        .map(|(roots, (subspace, bases))| QuadSpace {
            bases,
            subspace,
            roots,
        })
        .collect()
}

/// The 45 spaces, each with its bases.
pub fn enumerate_d4_spaces() -> Result<&'static [QuadSpace]> {
    let s = structure();
    if s.spaces.len() * 3 != s.quadruples.len() || s.spaces.iter().any(|sp| sp.bases.len() != 3) {
        return Err(Error::Internal(format!(
            "{} quadruple sets grouped into {} spaces",
            s.quadruples.len(),
            s.spaces.len()
        )));
    }
    Ok(&s.spaces)
}

/// Counts of quadruple sets by family signature, in the order
/// `{ε,η,γ,δ}`, `{η,η,γ,γ}`, `{η,η,δ,δ}`, `{γ,γ,δ,δ}`, `{ζ,ε,δ,δ}`, plus
/// anything else.
pub fn quadruple_census() -> ([usize; 5], usize) {
    use RootFamily::*;
    let s = structure();
    let patterns: [Vec<RootFamily>; 5] = [
        vec![Epsilon, Eta, Gamma, Delta],
        vec![Eta, Eta, Gamma, Gamma],
        vec![Eta, Eta, Delta, Delta],
        vec![Gamma, Gamma, Delta, Delta],
        vec![Zeta, Epsilon, Delta, Delta],
    ];
    let sorted: Vec<Vec<RootFamily>> = patterns
        .iter()
        .map(|p| {
            let mut p = p.clone();
            p.sort();
            p
        })
        .collect();
    let mut counts = [0usize; 5];
    let mut other = 0;
    for q in &s.quadruples {
        let mut sig: Vec<RootFamily> = q.iter().map(|&i| s.label(i).family).collect();
        sig.sort();
        match sorted.iter().position(|p| *p == sig) {
            Some(k) => counts[k] += 1,
            None => other += 1,
        }
    }
    (counts, other)
}

/// Containment check for one conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCheck {
    pub class: usize,
    pub order: u64,
    pub size: usize,
    pub eigenspace_dim: usize,
    pub contained: bool,
}

/// Everything the `E6` verification establishes, as plain counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct E6Report {
    pub roots: usize,
    pub positive_roots: usize,
    pub weyl_order: usize,
    pub conjugacy_classes: usize,
    pub quadruple_sets: usize,
    pub census: [usize; 5],
    pub census_other: usize,
    pub largest_orthogonal_set: usize,
    pub spaces: usize,
    pub bases_per_space: Vec<usize>,
    pub transitive_orbit: usize,
    pub order_16_classes: usize,
    pub involution_max_dim: usize,
    pub involution_spaces: usize,
    pub involution_spaces_match: bool,
    pub class_checks: Vec<ClassCheck>,
    pub stabilizer_chain: [usize; 4],
    pub ordered_quadruple_orbit: usize,
    pub ordered_quadruples: usize,
}

impl E6Report {
    /// Names of the checks that did not come out as expected.
    pub fn failures(&self) -> Vec<String> {
        let mut f = Vec::new();
        let mut expect = |name: &str, ok: bool| {
            if !ok {
                f.push(name.to_string());
            }
        };
        expect("72 roots", self.roots == 72);
        expect("36 positive roots", self.positive_roots == 36);
        expect("|W(E6)| = 51840", self.weyl_order == 51_840);
        expect("135 quadruple sets", self.quadruple_sets == 135);
        expect(
            "census (60,30,15,15,15)",
            self.census == [60, 30, 15, 15, 15] && self.census_other == 0,
        );
        expect(
            "no 5 mutually orthogonal roots",
            self.largest_orthogonal_set == 4,
        );
        expect("45 spaces", self.spaces == 45);
        expect(
            "3 bases per space",
            self.bases_per_space.iter().all(|&b| b == 3),
        );
        expect("W transitive on the 45 spaces", self.transitive_orbit == 45);
        expect("no elements of order 16", self.order_16_classes == 0);
        expect(
            "largest involution eigenspace has dim 4",
            self.involution_max_dim == 4,
        );
        expect(
            "45 involution eigenspaces of dim 4",
            self.involution_spaces == 45,
        );
        expect(
            "involution eigenspaces are the 45 spans",
            self.involution_spaces_match,
        );
        expect(
            "stabilizer chain (720,24,2,1)",
            self.stabilizer_chain == [720, 24, 2, 1],
        );
        expect(
            "ordered quadruple orbit 51840",
            self.ordered_quadruple_orbit == 51_840,
        );
        expect(
            "51840 ordered quadruples",
            self.ordered_quadruples == 51_840,
        );
        for c in &self.class_checks {
            if !c.contained {
                f.push(format!(
                    "class {} (order {}) eigenspace not contained",
                    c.class, c.order
                ));
            }
        }
        f
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for E6Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "roots: {} ({} positive)",
            self.roots, self.positive_roots
        )?;
        writeln!(f, "|W(E6)| = {}", self.weyl_order)?;
        writeln!(f, "conjugacy classes: {}", self.conjugacy_classes)?;
        writeln!(
            f,
            "orthogonal quadruple sets: {} (census {:?}, other {})",
            self.quadruple_sets, self.census, self.census_other
        )?;
        writeln!(f, "largest orthogonal set: {}", self.largest_orthogonal_set)?;
        writeln!(
            f,
            "D4 spaces: {} (W-orbit of one space: {})",
            self.spaces, self.transitive_orbit
        )?;
        writeln!(f, "classes of order 16: {}", self.order_16_classes)?;
        writeln!(
            f,
            "involution eigenspaces: max dim {}, {} of that dim, equal to the spans: {}",
            self.involution_max_dim,
            self.involution_spaces,
            if self.involution_spaces_match {
                "yes"
            } else {
                "no"
            }
        )?;
        for c in &self.class_checks {
            writeln!(
                f,
                "class {:>2}: order {}, size {:>5}, dim V(-1) = {}: {}",
                c.class,
                c.order,
                c.size,
                c.eigenspace_dim,
                if c.contained { "Yes." } else { "No." }
            )?;
        }
        writeln!(f, "stabilizer chain: {:?}", self.stabilizer_chain)?;
        write!(
            f,
            "ordered quadruples: {} total, orbit of (ζ,-ε1,δ23,δ45): {}",
            self.ordered_quadruples, self.ordered_quadruple_orbit
        )
    }
}

fn check_is_e6(w: &WeylGroup) -> Result<()> {
    let t = w.root_system().simple_type();
    if t.family() != Family::E || t.rank() != 6 {
        return input(format!("expected W(E6), got W({t})"));
    }
    Ok(())
}

/// Orbit of one space under the generators, acting on root-index sets.
fn space_orbit_size(w: &WeylGroup, spaces: &[QuadSpace]) -> usize {
    let start: BTreeSet<usize> = spaces[0].roots.iter().copied().collect();
    let mut seen: HashSet<BTreeSet<usize>> = HashSet::new();
    seen.insert(start.clone());
    let mut queue = vec![start];
    while let Some(s) = queue.pop() {
        for g in w.generators() {
            let img: BTreeSet<usize> = s.iter().map(|&i| g.image(i)).collect();
            if seen.insert(img.clone()) {
                queue.push(img);
            }
        }
    }
    seen.len()
}

/// Every `(−1)`-eigenspace of an element of order 2, 4 or 8 lies in one of
/// the 45 spans; the largest involution eigenspaces are exactly those spans.
pub fn verify_minus_one_union(w: &WeylGroup) -> Result<E6Report> {
    check_is_e6(w)?;
    let s = structure();
    let rs = w.root_system();
    let spaces = enumerate_d4_spaces()?;
    let classes = w.conjugacy_classes();

    let class_checks: Vec<ClassCheck> = classes
        .par_iter()
        .enumerate()
        .filter(|(_, c)| matches!(c.order, 2 | 4 | 8))
        .map(|(k, c)| {
            let v = minus_one_eigenspace(rs, &w.element(c.representative));
            ClassCheck {
                class: k,
                order: c.order,
                size: c.size,
                eigenspace_dim: v.dim(),
                contained: spaces.iter().any(|sp| sp.subspace.contains(&v)),
            }
        })
        .collect();

    let involution_max_dim = class_checks
        .iter()
        .filter(|c| c.order == 2)
        .map(|c| c.eigenspace_dim)
        .max()
        .unwrap_or(0);
    let top: Vec<usize> = class_checks
        .iter()
        .filter(|c| c.order == 2 && c.eigenspace_dim == involution_max_dim)
        .map(|c| c.class)
        .collect();
    let mut inv_spaces: Vec<Subspace> = top
        .iter()
        .flat_map(|&k| classes[k].members.iter())
        .map(|&m| minus_one_eigenspace(rs, &w.element(m as usize)))
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    inv_spaces.sort_by(|a, b| format!("{:?}", a.basis()).cmp(&format!("{:?}", b.basis())));
    let span_set: HashSet<&Subspace> = spaces.iter().map(|sp| &sp.subspace).collect();
    let inv_set: HashSet<&Subspace> = inv_spaces.iter().collect();

    let (census, census_other) = quadruple_census();
    let chain = verify_simple_transitivity(w)?;
    Ok(E6Report {
        roots: rs.len(),
        positive_roots: rs.positive_root_indices().len(),
        weyl_order: w.order(),
        conjugacy_classes: classes.len(),
        quadruple_sets: s.quadruples.len(),
        census,
        census_other,
        largest_orthogonal_set: largest_orthogonal_set(rs),
        spaces: spaces.len(),
        bases_per_space: spaces.iter().map(|sp| sp.bases.len()).collect(),
        transitive_orbit: space_orbit_size(w, spaces),
        order_16_classes: classes.iter().filter(|c| c.order == 16).count(),
        involution_max_dim,
        involution_spaces: inv_spaces.len(),
        involution_spaces_match: span_set == inv_set,
        class_checks,
        stabilizer_chain: chain.chain,
        ordered_quadruple_orbit: chain.orbit,
        ordered_quadruples: chain.total_ordered,
    })
}

fn largest_orthogonal_set(rs: &RootSystem) -> usize {
    (1..=rs.rank())
        .take_while(|&k| !orthogonal_positive_sets(rs, k).is_empty())
        .last()
        .unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerChain {
    /// Orders of the pointwise stabilizers of `ζ`, `(ζ,−ε1)`,
    /// `(ζ,−ε1,δ23)`, `(ζ,−ε1,δ23,δ45)`.
    pub chain: [usize; 4],
    /// Size of the orbit of the ordered quadruple `(ζ,−ε1,δ23,δ45)`.
    pub orbit: usize,
    /// Number of ordered quadruples of mutually orthogonal roots.
    pub total_ordered: usize,
}

pub fn verify_simple_transitivity(w: &WeylGroup) -> Result<StabilizerChain> {
    check_is_e6(w)?;
    let rs = w.root_system();
    let quad = [
        rs.index_of(&zeta()).expect("ζ is a root"),
        rs.index_of(&crate::linalg::neg(&epsilon(1)))
            .expect("−ε1 is a root"),
        rs.index_of(&delta(2, 3)).expect("δ23 is a root"),
        rs.index_of(&delta(4, 5)).expect("δ45 is a root"),
    ];
    let mut chain = [0usize; 4];
    for k in 0..4 {
        chain[k] = w.pointwise_stabilizer(&quad[..=k]).len();
    }
    let orbit: HashSet<[u8; 4]> = (0..w.order())
        .map(|i| {
            let p = w.perm(i);
            [p[quad[0]], p[quad[1]], p[quad[2]], p[quad[3]]]
        })
        .collect();

    let n = rs.len();
    let orth: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| dot(rs.root(i), rs.root(j)).is_zero())
                .collect()
        })
        .collect();
    let mut total = 0usize;
    for a in 0..n {
        for b in (0..n).filter(|&b| orth[a][b]) {
            for c in (0..n).filter(|&c| orth[a][c] && orth[b][c]) {
                total += (0..n)
                    .filter(|&d| orth[a][d] && orth[b][d] && orth[c][d])
                    .count();
            }
        }
    }
    Ok(StabilizerChain {
        chain,
        orbit: orbit.len(),
        total_ordered: total,
    })
}

/// The line `Σ c_i α_i^∨` (coroots equal roots here, all of squared length
/// two) in the eight-dimensional coordinates.
pub fn coroot_line(c: &[i64]) -> Result<Vector> {
    if c.len() != 6 {
        return input(format!("E6 takes 6 coroot coefficients, got {}", c.len()));
    }
    let rs = structure().root_system();
    let mut v = vec![Q::zero(); 8];
    for (&ci, a) in c.iter().zip(rs.simple_roots()) {
        for (vj, aj) in v.iter_mut().zip(a) {
            *vj += q(ci) * aj;
        }
    }
    Ok(v)
}

pub fn circle_reflected_in_e6(c: &[i64]) -> Result<ReflectionVerdict> {
    let v = coroot_line(c)?;
    if c.iter().all(|&x| x == 0) {
        return input("E6 coroot coefficients are all zero");
    }
    let spaces = enumerate_d4_spaces()?;
    let reflected = spaces.iter().any(|sp| sp.subspace.contains_vector(&v));
    Ok(ReflectionVerdict {
        reflected,
        criterion: Criterion::E6QuadSpace,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{neg, solve_in_basis};

    #[test]
    fn labels_round_trip() {
        let s = structure();
        let mut names: Vec<String> = (0..72).map(|i| s.label(i).to_string()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), 72);
        assert_eq!(RootLabel::of(&eta(4, 3)).unwrap().to_string(), "η34");
        assert_eq!(RootLabel::of(&epsilon(5)).unwrap().to_string(), "ε5");
        assert_eq!(
            RootLabel::of(&neg(&delta(2, 4))).unwrap().to_string(),
            "-δ24"
        );
    }

    #[test]
    fn positive_roots_are_the_five_families() {
        let s = structure();
        for i in s.root_system().positive_root_indices() {
            let l = s.label(i);
            assert!(!l.negative, "{l}");
            if matches!(
                l.family,
                RootFamily::Gamma | RootFamily::Delta | RootFamily::Eta
            ) {
                assert!(l.a < l.b);
            }
        }
    }

    #[test]
    fn quadruple_counts_and_census() {
        assert_eq!(structure().quadruples().len(), 135);
        assert_eq!(quadruple_census(), ([60, 30, 15, 15, 15], 0));
    }

    #[test]
    fn zeta_epsilon_delta_delta_is_present() {
        let s = structure();
        let mut q = [
            s.index(&zeta()),
            s.index(&epsilon(5)),
            s.index(&delta(1, 2)),
            s.index(&delta(3, 4)),
        ];
        q.sort();
        assert!(s.quadruples().contains(&q));
    }

    #[test]
    fn spaces_and_bases() {
        let spaces = enumerate_d4_spaces().unwrap();
        assert_eq!(spaces.len(), 45);
        for sp in spaces {
            assert_eq!(sp.bases.len(), 3);
            assert_eq!(sp.subspace.dim(), 4);
            assert_eq!(sp.roots.len(), 24);
            for b in &sp.bases {
                for &i in b {
                    assert!(sp
                        .subspace
                        .contains_vector(structure().root_system().root(i)));
                }
            }
        }
    }

    #[test]
    fn d4_span_from_a_second_spanning_set() {
        let xi = Subspace::span(8, &[gamma(1, 2), delta(1, 2), gamma(3, 4), delta(3, 4)]);
        let other = Subspace::span(
            8,
            &[gamma(1, 2), gamma(3, 4), delta(3, 4), neg(&gamma(2, 3))],
        );
        assert_eq!(xi, other);
        assert!(enumerate_d4_spaces()
            .unwrap()
            .iter()
            .any(|sp| sp.subspace == xi));
    }

    #[test]
    fn no_five_orthogonal_roots() {
        let rs = structure().root_system();
        assert!(orthogonal_positive_sets(rs, 5).is_empty());
        assert_eq!(largest_orthogonal_set(rs), 4);
    }

    #[test]
    fn circle_examples() {
        assert!(
            circle_reflected_in_e6(&[1, 0, 0, 0, 0, 0])
                .unwrap()
                .reflected
        );
        // γ12 = −α2 in the simple-root basis.
        let s = structure();
        let c = solve_in_basis(s.root_system().simple_roots(), &gamma(1, 2)).unwrap();
        let c: Vec<i64> = c.iter().map(|x| x.to_integer()).collect();
        assert_eq!(c, vec![0, -1, 0, 0, 0, 0]);
        assert!(circle_reflected_in_e6(&c).unwrap().reflected);
        assert!(circle_reflected_in_e6(&[0; 6]).is_err());
        assert!(circle_reflected_in_e6(&[1, 2, 3]).is_err());
    }

    #[test]
    fn a_regular_line_is_not_reflected() {
        // A generic line cannot sit in a 4-dimensional subspace.
        assert!(
            !circle_reflected_in_e6(&[1, 2, 3, 4, 5, 7])
                .unwrap()
                .reflected
        );
    }

    #[test]
    fn full_verification_passes() {
        let w = crate::weyl::generate_weyl(
            std::sync::Arc::new(structure().root_system().clone()),
            crate::weyl::DEFAULT_BUDGET,
        )
        .unwrap();
        let r = verify_minus_one_union(&w).unwrap();
        assert!(r.passed(), "{:?}", r.failures());
        assert_eq!(r.conjugacy_classes, 25);
        let json = r.to_json();
        let back: E6Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn rejects_other_groups() {
        let rs = RootSystem::new("A2".parse().unwrap());
        let w = crate::weyl::generate_weyl(std::sync::Arc::new(rs), 100).unwrap();
        assert!(verify_minus_one_union(&w).is_err());
    }

    #[test]
    fn element_counts_by_order_match_a_matrix_enumeration() {
        // Counted separately by closing the six simple reflections as
        // integer matrices on the root lattice.
        let w = crate::weyl::generate_weyl(
            std::sync::Arc::new(structure().root_system().clone()),
            crate::weyl::DEFAULT_BUDGET,
        )
        .unwrap();
        let mut by_order = BTreeMap::new();
        for c in w.conjugacy_classes() {
            *by_order.entry(c.order).or_insert(0usize) += c.size;
        }
        let want = [
            (1, 1),
            (2, 891),
            (3, 800),
            (4, 5940),
            (5, 5184),
            (6, 12960),
            (8, 6480),
            (9, 5760),
            (10, 5184),
            (12, 8640),
        ];
        assert_eq!(by_order.into_iter().collect::<Vec<_>>(), want);
    }
}
