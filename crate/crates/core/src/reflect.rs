//! Whether a circle in a simple factor is reflected, i.e. inverted by
//! conjugation with some element of its normalizer.
//!
//! At the Lie algebra level this asks for a Weyl group element acting as
//! `−1` on the line of the circle. The closed-form criteria per type:
//!
//! | type            | reflected when                                   |
//! |-----------------|--------------------------------------------------|
//! | `A_n`           | the exponent multiset satisfies `J = −J`         |
//! | `B_n`, `C_n`    | always                                           |
//! | `D_n`, `n` even | always                                           |
//! | `D_n`, `n` odd  | some standard coordinate exponent is zero        |
//! | `G2`, `F4`, `E7`, `E8` | always                                    |
//! | `E6`            | the line lies in one of the 45 `D4` spaces       |
//!
//! [`oracle_witness`] answers the same question by exhausting the Weyl
//! group, independently of the table.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::e6;
use crate::error::{input, Result};
use crate::linalg::{q, Vector, Q};
use crate::rootsys::{Family, RootSystem, SimpleType};
use crate::weyl::{generate_weyl, WeylElement, WeylGroup, DEFAULT_BUDGET};

/// Which closed-form rule decided a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// All-zero exponents: the image is the trivial group.
    TrivialImage,
    /// `A_n`: compare `J` with `−J`.
    AntipodalMultiset,
    /// The longest element acts as `−1`, so every circle is reflected.
    LongestElementIsMinusOne,
    /// `D_n`, `n` odd: look for a zero coordinate.
    ZeroCoordinate,
    /// `E6`: membership in one of the 45 four-dimensional spaces.
    E6QuadSpace,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::TrivialImage => "trivial image",
            Criterion::AntipodalMultiset => "J = -J test",
            Criterion::LongestElementIsMinusOne => "-1 in the Weyl group",
            Criterion::ZeroCoordinate => "zero coordinate test",
            Criterion::E6QuadSpace => "D4 subspace membership",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflectionVerdict {
    pub reflected: bool,
    pub criterion: Criterion,
    /// A Weyl element negating the line, present only when the exhaustive
    /// search was run.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WeylElement>,
}

impl ReflectionVerdict {
    fn new(reflected: bool, criterion: Criterion) -> Self {
        Self {
            reflected,
            criterion,
            witness: None,
        }
    }
}

pub(crate) fn check_exponent_shape(t: SimpleType, e: &[i64]) -> Result<()> {
    if e.len() != t.exponent_len() {
        return input(format!(
            "{t} takes {} exponents, got {}",
            t.exponent_len(),
            e.len()
        ));
    }
    if t.family() == Family::A {
        let s: i64 = e.iter().sum();
        if s != 0 {
            return input(format!("{t} exponents must sum to zero, got sum {s}"));
        }
    }
    Ok(())
}

/// The multiset `J` of an `A`-factor embedding, sorted ascending.
pub fn exponent_multiset(e: &[i64]) -> Result<Vec<i64>> {
    let s: i64 = e.iter().sum();
    if s != 0 {
        return input(format!("exponents must sum to zero, got sum {s}"));
    }
    let mut j = e.to_vec();
    j.sort_unstable();
    Ok(j)
}

pub fn is_reflected_factor(t: SimpleType, e: &[i64]) -> Result<ReflectionVerdict> {
    check_exponent_shape(t, e)?;
    if e.iter().all(|&x| x == 0) {
        return Ok(ReflectionVerdict::new(true, Criterion::TrivialImage));
    }
    let verdict = match t.family() {
        Family::A => {
            let j = exponent_multiset(e)?;
            let mut minus: Vec<i64> = j.iter().map(|x| -x).collect();
            minus.sort_unstable();
            ReflectionVerdict::new(j == minus, Criterion::AntipodalMultiset)
        }
        Family::D if t.rank() % 2 == 1 => {
            ReflectionVerdict::new(e.contains(&0), Criterion::ZeroCoordinate)
        }
        Family::E if t.rank() == 6 => return e6::circle_reflected_in_e6(e),
        _ => ReflectionVerdict::new(true, Criterion::LongestElementIsMinusOne),
    };
    Ok(verdict)
}

/// The line of the circle in the ambient coordinates of the factor's root
/// system, after identifying the torus Lie algebra with its dual by the dot
/// product. Classical types read the exponents as coordinates; `E`, `F`,
/// `G` read them as coefficients on the simple coroots.
pub fn factor_direction(rs: &RootSystem, e: &[i64]) -> Result<Vector> {
    let t = rs.simple_type();
    check_exponent_shape(t, e)?;
    match t.family() {
        Family::A | Family::B | Family::C | Family::D => Ok(e.iter().map(|&x| q(x)).collect()),
        Family::E | Family::F | Family::G => {
            let mut v = vec![Q::from_integer(0); rs.ambient_dim()];
            for (&c, &i) in e.iter().zip(rs.simple_root_indices()) {
                let co = rs.coroot(i);
                for (vj, cj) in v.iter_mut().zip(&co) {
                    *vj += q(c) * cj;
                }
            }
            Ok(v)
        }
    }
}

/// Exhaustive search for a Weyl element negating the circle's line.
pub fn oracle_witness(w: &WeylGroup, e: &[i64]) -> Result<Option<WeylElement>> {
    if e.iter().all(|&x| x == 0) {
        return Ok(Some(WeylElement::identity(w.root_system().len())));
    }
    let v = factor_direction(w.root_system(), e)?;
    w.exists_reflecting_element(&v)
}

/// Whether the closed-form verdict agrees with the exhaustive search.
pub fn oracle_cross_check(w: &WeylGroup, e: &[i64]) -> Result<bool> {
    let t = w.root_system().simple_type();
    let criterion = is_reflected_factor(t, e)?;
    let oracle = oracle_witness(w, e)?;
    Ok(criterion.reflected == oracle.is_some())
}

/// Supplies enumerated Weyl groups, typically memoized.
pub trait WeylSource: Sync {
    fn weyl(&self, t: SimpleType) -> Result<Arc<WeylGroup>>;
}

/// In-memory memo of enumerated groups under a size budget.
pub struct WeylRegistry {
    budget: u64,
    groups: Mutex<HashMap<SimpleType, Arc<WeylGroup>>>,
}

impl WeylRegistry {
    pub fn with_budget(budget: u64) -> Self {
        Self {
            budget,
            groups: Mutex::new(HashMap::new()),
        }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }
}

impl Default for WeylRegistry {
    fn default() -> Self {
        Self::with_budget(DEFAULT_BUDGET)
    }
}

impl WeylSource for WeylRegistry {
    fn weyl(&self, t: SimpleType) -> Result<Arc<WeylGroup>> {
        if let Some(w) = self.groups.lock().unwrap().get(&t) {
            return Ok(Arc::clone(w));
        }
        let w = Arc::new(generate_weyl(Arc::new(RootSystem::new(t)), self.budget)?);
        self.groups.lock().unwrap().insert(t, Arc::clone(&w));
        Ok(w)
    }
}
