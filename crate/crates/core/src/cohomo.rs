//! Poincaré polynomials and total Betti numbers of compact connected groups
//! and of their quotients by circles.
//!
//! A compact connected group has the rational cohomology of an exterior
//! algebra on odd generators. For a simple factor the generator degrees are
//! `2e + 1` over its exponents `e`; a torus of rank `r` contributes `r`
//! generators of degree one.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::{CircleEmbedding, GroupSpec};
use crate::error::{Error, Result};
use crate::rootsys::{Family, SimpleType};

/// Standard exponents of a simple type.
pub fn exponents(t: SimpleType) -> Vec<u32> {
    let n = t.rank() as u32;
    match t.family() {
        Family::A => (1..=n).collect(),
        Family::B | Family::C => (1..=n).map(|i| 2 * i - 1).collect(),
        Family::D => {
            let mut e: Vec<u32> = (1..n).map(|i| 2 * i - 1).collect();
            e.push(n - 1);
            e.sort_unstable();
            e
        }
        Family::G => vec![1, 5],
        Family::F => vec![1, 5, 7, 11],
        Family::E => match n {
            6 => vec![1, 4, 5, 7, 8, 11],
            7 => vec![1, 5, 7, 9, 11, 13, 17],
            _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
        },
    }
}

/// `∏(e_i + 1)`, the order of the Weyl group.
pub fn weyl_order_from_exponents(t: SimpleType) -> u128 {
    exponents(t).iter().map(|&e| u128::from(e) + 1).product()
}

/// Polynomial in `t` with nonnegative integer coefficients, lowest degree
/// first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PoincarePolynomial {
    coeffs: Vec<u64>,
}

impl PoincarePolynomial {
    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        Self { coeffs }
    }

    /// `1 + t^d`.
    pub fn one_plus_t_pow(d: usize) -> Self {
        let mut c = vec![0; d + 1];
        c[0] += 1;
        c[d] += 1;
        Self::from_coeffs(c)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_coeffs(c)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Exact quotient by `divisor`, or `None` if the division leaves a
    /// remainder or a negative coefficient.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree();
        let lead = i128::from(*divisor.coeffs.last()?);
        if lead == 0 {
            return None;
        }
        if self.coeffs.iter().all(|&c| c == 0) {
            return Some(self.clone());
        }
        if self.degree() < dd {
            return None;
        }
        let mut rem: Vec<i128> = self.coeffs.iter().map(|&x| i128::from(x)).collect();
        let mut quot = vec![0i128; self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd];
            if c % lead != 0 {
                return None;
            }
            let f = c / lead;
            quot[k] = f;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= f * i128::from(b);
            }
        }
        if rem.iter().any(|&x| x != 0) || quot.iter().any(|&x| x < 0) {
            return None;
        }
        Some(Self::from_coeffs(
            quot.into_iter().map(|x| x as u64).collect(),
        ))
    }

    /// Value at `t = 1`.
    pub fn total_betti(&self) -> u64 {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (d, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (1, c) => write!(f, "{c}t")?,
                (d, 1) => write!(f, "t^{d}")?,
                (d, c) => write!(f, "{c}t^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn poincare_simple(t: SimpleType) -> PoincarePolynomial {
    exponents(t)
        .iter()
        .fold(PoincarePolynomial::one(), |acc, &e| {
            acc.mul(&PoincarePolynomial::one_plus_t_pow(2 * e as usize + 1))
        })
}

/// `p(G) = (1+t)^r · ∏_j p(K_j)`.
pub fn poincare_group(spec: &GroupSpec) -> PoincarePolynomial {
    let torus = PoincarePolynomial::one_plus_t_pow(1).pow(spec.central_torus_rank());
    spec.factors()
        .iter()
        .fold(torus, |acc, &t| acc.mul(&poincare_simple(t)))
}

/// Poincaré polynomial of `G/S`.
///
/// If the circle leaves the commutator subgroup, one degree-one generator of
/// the central torus is killed. Otherwise `p(G/S) = p(G)(1+t²)/(1+t³)`.
pub fn poincare_circle_quotient(
    spec: &GroupSpec,
    circle: &CircleEmbedding,
) -> Result<PoincarePolynomial> {
    spec.validate_embedding(circle)?;
    let semisimple = spec
        .factors()
        .iter()
        .fold(PoincarePolynomial::one(), |acc, &t| {
            acc.mul(&poincare_simple(t))
        });
    let r = spec.central_torus_rank();
    let circle_torus = PoincarePolynomial::one_plus_t_pow(1);
    if !circle.lies_in_commutator() {
        return Ok(circle_torus.pow(r - 1).mul(&semisimple));
    }
    let numerator = circle_torus
        .pow(r)
        .mul(&semisimple)
        .mul(&PoincarePolynomial::one_plus_t_pow(2));
    numerator
        .div_exact(&PoincarePolynomial::one_plus_t_pow(3))
        .ok_or_else(|| {
            Error::Internal(format!(
                "p(G)(1+t^2) = {numerator} is not divisible by 1+t^3"
            ))
        })
}

pub fn total_betti(p: &PoincarePolynomial) -> u64 {
    p.total_betti()
}

/// Equivariant formality through fixed-point dimensions: the action is
/// formal exactly when `h(G/S) = 2^(rk G − 1) · |π₀N|`.
pub fn dimension_criterion(
    spec: &GroupSpec,
    circle: &CircleEmbedding,
    pi0_normalizer: u32,
) -> Result<bool> {
    if !(1..=2).contains(&pi0_normalizer) {
        return Err(Error::Input(format!(
            "|π₀N| must be 1 or 2 for a circle, got {pi0_normalizer}"
        )));
    }
    let h = poincare_circle_quotient(spec, circle)?.total_betti();
    let fixed = (1u64 << (spec.rank() - 1)) * u64::from(pi0_normalizer);
    Ok(h == fixed)
}

/// `p(G)` and `p(G/S)` side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincareReport {
    pub group: GroupSpec,
    pub poincare_group: PoincarePolynomial,
    pub poincare_quotient: PoincarePolynomial,
    pub betti_group: u64,
    pub betti_quotient: u64,
}

impl PoincareReport {
    pub fn new(spec: &GroupSpec, circle: &CircleEmbedding) -> Result<Self> {
        let poincare_group = poincare_group(spec);
        let poincare_quotient = poincare_circle_quotient(spec, circle)?;
        Ok(Self {
            group: spec.clone(),
            betti_group: poincare_group.total_betti(),
            betti_quotient: poincare_quotient.total_betti(),
            poincare_group,
            poincare_quotient,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for PoincareReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group: {}", self.group)?;
        writeln!(f, "p(G) = {}", self.poincare_group)?;
        writeln!(f, "p(G/S) = {}", self.poincare_quotient)?;
        write!(
            f,
            "Betti(G) = {}, Betti(G/S) = {}",
            self.betti_group, self.betti_quotient
        )
    }
}
