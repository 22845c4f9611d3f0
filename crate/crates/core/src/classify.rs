//! The circle classification end to end.
//!
//! Groups are taken in universal-compact-cover form `A × K_1 × … × K_m`
//! with `A` a torus and each `K_j` simply connected and simple. A finite
//! central quotient has the same answer as its cover, so callers working
//! with, say, `SO(n)` or `U(n)` describe the cover instead.
//!
//! For a circle `S`:
//!
//! 1. if `S` is not inside the commutator subgroup `K` (some central torus
//!    exponent is nonzero), the pair is isotropy-formal (case `1`);
//! 2. otherwise project `S` to every simple factor;
//! 3. if every image is reflected the pair is formal (case `2a`), and if
//!    some image is not, it is not formal (case `2b`).
//!
//! Note on `U(n)`: the pair `(U(n), S)` with `S ≤ SU(n)` is formal exactly
//! when the exponent multiset satisfies `J = −J`, i.e. when `S` is
//! reflected. A commonly reproduced table of this classification lists the
//! two `SU(n)` rows the other way round; the case analysis above is the one
//! implemented here.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cohomo::{self, PoincarePolynomial};
use crate::error::{input, Error, Result};
use crate::reflect::{self, ReflectionVerdict, WeylSource};
use crate::rootsys::{Family, SimpleType};

/// A compact connected group in universal-compact-cover normal form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    central_torus_rank: usize,
    factors: Vec<SimpleType>,
}

impl GroupSpec {
    pub fn new(central_torus_rank: usize, factors: Vec<SimpleType>) -> Result<Self> {
        if central_torus_rank == 0 && factors.is_empty() {
            return input("group has neither a central torus nor a simple factor");
        }
        Ok(Self {
            central_torus_rank,
            factors,
        })
    }

    pub fn central_torus_rank(&self) -> usize {
        self.central_torus_rank
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    /// Rank of a maximal torus.
    pub fn rank(&self) -> usize {
        self.central_torus_rank + self.factors.iter().map(|t| t.rank()).sum::<usize>()
    }

    /// Checks the shape and normalization invariants of an embedding.
    pub fn validate_embedding(&self, c: &CircleEmbedding) -> Result<()> {
        if c.torus_exponents.len() != self.central_torus_rank {
            return input(format!(
                "torus_exponents has {} entries, expected central_torus_rank = {}",
                c.torus_exponents.len(),
                self.central_torus_rank
            ));
        }
        if c.factor_exponents.len() != self.factors.len() {
            return input(format!(
                "factor_exponents has {} entries, expected one per factor ({})",
                c.factor_exponents.len(),
                self.factors.len()
            ));
        }
        for (j, (t, e)) in self.factors.iter().zip(&c.factor_exponents).enumerate() {
            reflect::check_exponent_shape(*t, e)
                .map_err(|err| Error::Input(format!("factor {j} ({t}): {}", strip(err))))?;
        }
        let all = c.all_entries();
        if all.iter().all(|&x| x == 0) {
            return input("circle exponents are all zero");
        }
        let g = all.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return input(format!(
                "gcd of the circle exponents is {g}, expected 1 (divide through by {g})"
            ));
        }
        Ok(())
    }
}

fn strip(e: Error) -> String {
    match e {
        Error::Input(m) | Error::Internal(m) => m,
        other => other.to_string(),
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.central_torus_rank > 0 {
            parts.push(format!("T^{}", self.central_torus_rank));
        }
        parts.extend(self.factors.iter().map(ToString::to_string));
        f.write_str(&parts.join(" × "))
    }
}

/// Integer exponents of a circle inside the standard maximal torus of a
/// [`GroupSpec`].
///
/// Per factor: `A_n` takes `n + 1` integers summing to zero (diagonal
/// torus of `SU(n+1)`), `B_n`, `C_n`, `D_n` take `n` integers in the
/// standard coordinates, and `E`, `F`, `G` take one integer per simple
/// coroot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircleEmbedding {
    pub torus_exponents: Vec<i64>,
    pub factor_exponents: Vec<Vec<i64>>,
}

impl CircleEmbedding {
    pub fn new(torus_exponents: Vec<i64>, factor_exponents: Vec<Vec<i64>>) -> Self {
        Self {
            torus_exponents,
            factor_exponents,
        }
    }

    pub fn lies_in_commutator(&self) -> bool {
        self.torus_exponents.iter().all(|&x| x == 0)
    }

    fn all_entries(&self) -> Vec<i64> {
        self.torus_exponents
            .iter()
            .chain(self.factor_exponents.iter().flatten())
            .copied()
            .collect()
    }

    pub fn negated(&self) -> Self {
        Self {
            torus_exponents: self.torus_exponents.iter().map(|x| -x).collect(),
            factor_exponents: self
                .factor_exponents
                .iter()
                .map(|e| e.iter().map(|x| -x).collect())
                .collect(),
        }
    }
}

/// Which of the three mutually exclusive cases a pair falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Case {
    /// Circle not in the commutator subgroup.
    #[serde(rename = "1")]
    NotInCommutator,
    /// In the commutator subgroup and reflected.
    #[serde(rename = "2a")]
    Reflected,
    /// In the commutator subgroup and not reflected.
    #[serde(rename = "2b")]
    NotReflected,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::NotInCommutator => "1",
            Case::Reflected => "2a",
            Case::NotReflected => "2b",
        })
    }
}

/// Verdict on a single simple factor, with the image exponents used.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    pub factor: SimpleType,
    pub image_exponents: Vec<i64>,
    pub verdict: ReflectionVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub group: GroupSpec,
    pub circle: CircleEmbedding,
    pub isotropy_formal: bool,
    pub case_label: Case,
    pub pi0_normalizer: u32,
    pub per_factor: Vec<FactorReport>,
    pub poincare_group: PoincarePolynomial,
    pub poincare_quotient: PoincarePolynomial,
    pub betti_group: u64,
    pub betti_quotient: u64,
    pub dimension_check: bool,
    /// Whether the brute-force cross-checks were run.
    pub verified: bool,
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group: {}", self.group)?;
        writeln!(
            f,
            "verdict: {}, case {}",
            if self.isotropy_formal {
                "isotropy-formal"
            } else {
                "NOT isotropy-formal"
            },
            self.case_label
        )?;
        writeln!(f, "|pi0 N_G(S)| = {}", self.pi0_normalizer)?;
        for fr in &self.per_factor {
            writeln!(
                f,
                "  {}: image {:?} -> {} ({})",
                fr.factor,
                fr.image_exponents,
                if fr.verdict.reflected {
                    "reflected"
                } else {
                    "not reflected"
                },
                fr.verdict.criterion
            )?;
        }
        writeln!(
            f,
            "p(G)   = {}  (total Betti {})",
            self.poincare_group, self.betti_group
        )?;
        writeln!(
            f,
            "p(G/S) = {}  (total Betti {})",
            self.poincare_quotient, self.betti_quotient
        )?;
        write!(
            f,
            "h(G/S) = h(N/S): {}{}",
            if self.dimension_check { "yes" } else { "no" },
            if self.dimension_check == self.isotropy_formal {
                ""
            } else {
                " (DISAGREES with the case analysis)"
            }
        )?;
        if self.verified {
            write!(f, "\nbrute-force cross-checks: passed")?;
        }
        Ok(())
    }
}

/// Image exponents of the circle in factor `j`: the factor slice divided by
/// its gcd. An all-zero slice stays all zero (trivial image).
pub fn factor_image(slice: &[i64]) -> Vec<i64> {
    let g = slice.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g == 0 {
        slice.to_vec()
    } else {
        slice.iter().map(|x| x / g).collect()
    }
}

fn assemble(
    spec: &GroupSpec,
    c: &CircleEmbedding,
    per_factor: Vec<FactorReport>,
    verified: bool,
) -> Result<ClassificationReport> {
    let case_label = if !c.lies_in_commutator() {
        Case::NotInCommutator
    } else if per_factor.iter().all(|f| f.verdict.reflected) {
        Case::Reflected
    } else {
        Case::NotReflected
    };
    let pi0_normalizer = if case_label == Case::Reflected { 2 } else { 1 };
    let poincare_group = cohomo::poincare_group(spec);
    let poincare_quotient = cohomo::poincare_circle_quotient(spec, c)?;
    let dimension_check = cohomo::dimension_criterion(spec, c, pi0_normalizer)?;
    Ok(ClassificationReport {
        group: spec.clone(),
        circle: c.clone(),
        isotropy_formal: case_label != Case::NotReflected,
        case_label,
        pi0_normalizer,
        per_factor,
        betti_group: poincare_group.total_betti(),
        betti_quotient: poincare_quotient.total_betti(),
        poincare_group,
        poincare_quotient,
        dimension_check,
        verified,
    })
}

pub fn classify(spec: &GroupSpec, c: &CircleEmbedding) -> Result<ClassificationReport> {
    spec.validate_embedding(c)?;
    let per_factor = spec
        .factors()
        .iter()
        .zip(&c.factor_exponents)
        .map(|(&t, e)| {
            let image = factor_image(e);
            Ok(FactorReport {
                factor: t,
                verdict: reflect::is_reflected_factor(t, &image)?,
                image_exponents: image,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    assemble(spec, c, per_factor, false)
}

/// Runs [`classify`] and then checks every factor verdict against an
/// exhaustive search of the factor's Weyl group, and the case against the
/// fixed-point dimension count. Any disagreement is an internal error.
pub fn classify_with_verification(
    spec: &GroupSpec,
    c: &CircleEmbedding,
    groups: &dyn WeylSource,
) -> Result<ClassificationReport> {
    let plain = classify(spec, c)?;
    let mut per_factor = plain.per_factor.clone();
    for fr in &mut per_factor {
        if fr.image_exponents.iter().all(|&x| x == 0) {
            continue;
        }
        let w = groups.weyl(fr.factor)?;
        let witness = reflect::oracle_witness(&w, &fr.image_exponents)?;
        if witness.is_some() != fr.verdict.reflected {
            return Err(Error::Internal(format!(
                "{}: criterion says {}, exhaustive search says {} for exponents {:?}",
                fr.factor,
                fr.verdict.reflected,
                witness.is_some(),
                fr.image_exponents
            )));
        }
        fr.verdict.witness = witness;
    }
    let report = assemble(spec, c, per_factor, true)?;
    if report.dimension_check != report.isotropy_formal {
        return Err(Error::Internal(format!(
            "fixed-point dimension count disagrees with case {}",
            report.case_label
        )));
    }
    let rank = spec.rank() as u32;
    let expected_betti = match report.case_label {
        Case::NotInCommutator => 1u64 << (rank - 1),
        _ => 1u64 << rank,
    };
    if report.betti_quotient != expected_betti {
        return Err(Error::Internal(format!(
            "h(G/S) = {}, expected {expected_betti} in case {}",
            report.betti_quotient, report.case_label
        )));
    }
    Ok(report)
}

/// Shorthand used in docs and tests: `SU(n)` as `A_{n-1}`.
pub fn special_unitary(n: usize) -> Result<GroupSpec> {
    GroupSpec::new(0, vec![SimpleType::new(Family::A, n - 1)?])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reflect::{Criterion, WeylRegistry};

    fn t(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn u2_with_central_exponent_is_case_one() {
        let g = GroupSpec::new(1, vec![t("A1")]).unwrap();
        let c = CircleEmbedding::new(vec![1], vec![vec![1, -1]]);
        let r = classify(&g, &c).unwrap();
        assert_eq!(r.case_label, Case::NotInCommutator);
        assert!(r.isotropy_formal);
        assert_eq!(r.pi0_normalizer, 1);
        assert_eq!(r.betti_quotient, 2);
        assert!(r.dimension_check);
    }

    #[test]
    fn su3_reflected_and_not() {
        let g = special_unitary(3).unwrap();
        let r = classify(&g, &CircleEmbedding::new(vec![], vec![vec![1, 0, -1]])).unwrap();
        assert_eq!(r.case_label, Case::Reflected);
        assert!(r.isotropy_formal);
        assert_eq!(r.pi0_normalizer, 2);

        let r = classify(&g, &CircleEmbedding::new(vec![], vec![vec![1, 1, -2]])).unwrap();
        assert_eq!(r.case_label, Case::NotReflected);
        assert!(!r.isotropy_formal);
        assert_eq!(r.pi0_normalizer, 1);
        assert!(!r.dimension_check);
    }

    #[test]
    fn sp2_is_always_reflected() {
        let g = GroupSpec::new(0, vec![t("C2")]).unwrap();
        for e in [vec![1, 0], vec![2, 1], vec![3, -7]] {
            let r = classify(&g, &CircleEmbedding::new(vec![], vec![e])).unwrap();
            assert_eq!(r.case_label, Case::Reflected);
            assert_eq!(
                r.per_factor[0].verdict.criterion,
                Criterion::LongestElementIsMinusOne
            );
        }
    }

    #[test]
    fn trivial_projection_counts_as_reflected() {
        let g = GroupSpec::new(0, vec![t("A2"), t("A1")]).unwrap();
        let c = CircleEmbedding::new(vec![], vec![vec![0, 0, 0], vec![1, -1]]);
        let r = classify(&g, &c).unwrap();
        assert_eq!(r.per_factor[0].verdict.criterion, Criterion::TrivialImage);
        assert_eq!(r.case_label, Case::Reflected);
    }

    #[test]
    fn image_is_normalized_per_factor() {
        let g = GroupSpec::new(0, vec![t("A2"), t("A1")]).unwrap();
        let c = CircleEmbedding::new(vec![], vec![vec![2, 2, -4], vec![3, -3]]);
        let r = classify(&g, &c).unwrap();
        assert_eq!(r.per_factor[0].image_exponents, vec![1, 1, -2]);
        assert_eq!(r.per_factor[1].image_exponents, vec![1, -1]);
        assert_eq!(r.case_label, Case::NotReflected);
    }

    #[test]
    fn malformed_embeddings_are_rejected() {
        let g = special_unitary(3).unwrap();
        let cases = [
            CircleEmbedding::new(vec![], vec![vec![2, 0, -2]]),
            CircleEmbedding::new(vec![], vec![vec![0, 0, 0]]),
            CircleEmbedding::new(vec![], vec![vec![1, 1, 1]]),
            CircleEmbedding::new(vec![], vec![vec![1, -1]]),
            CircleEmbedding::new(vec![1], vec![vec![1, 0, -1]]),
            CircleEmbedding::new(vec![], vec![]),
        ];
        for c in cases {
            assert!(matches!(classify(&g, &c), Err(Error::Input(_))), "{c:?}");
        }
        assert!(GroupSpec::new(0, vec![]).is_err());
    }

    #[test]
    fn verification_passes_on_small_groups() {
        let reg = WeylRegistry::default();
        let g = GroupSpec::new(1, vec![t("A3"), t("D5"), t("G2")]).unwrap();
        let cases = [
            CircleEmbedding::new(
                vec![0],
                vec![vec![1, 0, 0, -1], vec![0, 1, 2, 3, 4], vec![1, 2]],
            ),
            CircleEmbedding::new(
                vec![0],
                vec![vec![1, 1, 0, -2], vec![1, 1, 1, 1, 1], vec![0, 0]],
            ),
            CircleEmbedding::new(
                vec![3],
                vec![vec![1, 1, 0, -2], vec![0, 0, 0, 0, 0], vec![0, 0]],
            ),
        ];
        for c in cases {
            let plain = classify(&g, &c).unwrap();
            let checked = classify_with_verification(&g, &c, &reg).unwrap();
            assert_eq!(plain.case_label, checked.case_label);
            assert!(checked.verified);
        }
    }

    #[test]
    fn json_round_trip() {
        let g = GroupSpec::new(1, vec![t("A2")]).unwrap();
        let c = CircleEmbedding::new(vec![0], vec![vec![1, 1, -2]]);
        let r = classify(&g, &c).unwrap();
        let s = r.to_json();
        let back: ClassificationReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), s);
    }
}
