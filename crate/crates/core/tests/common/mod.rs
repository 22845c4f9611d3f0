#![allow(dead_code)]

use isoformal::e6;
use isoformal::linalg::solve_in_basis;
use isoformal::{CircleEmbedding, Family, GroupSpec, SimpleType};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn t(s: &str) -> SimpleType {
    s.parse().unwrap()
}

fn nonzero(mut v: Vec<i64>, rng: &mut impl Rng) -> Vec<i64> {
    while v.iter().all(|&x| x == 0) {
        let i = rng.gen_range(0..v.len());
        v[i] = if rng.gen() { 1 } else { -1 };
    }
    v
}

/// Exponents for one factor. About half the samples are drawn from the
/// special locus where the answer flips (antipodal multisets, a zero
/// coordinate, a vector inside one of the E6 spaces) so both verdicts show
/// up for the types where the criterion is not constant.
pub fn random_exponents(ty: SimpleType, rng: &mut impl Rng) -> Vec<i64> {
    let n = ty.rank();
    let special = rng.gen_bool(0.5);
    match ty.family() {
        Family::A => {
            let len = n + 1;
            if special {
                let mut j = Vec::with_capacity(len);
                for _ in 0..len / 2 {
                    let x = rng.gen_range(1..=6);
                    j.push(x);
                    j.push(-x);
                }
                if len % 2 == 1 {
                    j.push(0);
                }
                j.shuffle(rng);
                j
            } else {
                loop {
                    let mut e: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
                    e.push(-e.iter().sum::<i64>());
                    if e.iter().any(|&x| x != 0) {
                        return e;
                    }
                }
            }
        }
        Family::E if n == 6 && special => {
            let s = e6::structure();
            let sp = s.spaces().choose(rng).unwrap();
            let basis = sp.bases[rng.gen_range(0..3)];
            loop {
                let mut v = vec![isoformal::linalg::q(0); 8];
                for &i in &basis {
                    let k = isoformal::linalg::q(rng.gen_range(-3..=3));
                    for (vj, rj) in v.iter_mut().zip(s.root_system().root(i)) {
                        *vj += k * rj;
                    }
                }
                if v.iter().all(|x| *x == isoformal::linalg::q(0)) {
                    continue;
                }
                let c = solve_in_basis(s.root_system().simple_roots(), &v).unwrap();
                return c.iter().map(|x| x.to_integer()).collect();
            }
        }
        _ => {
            let mut e: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
            if ty.family() == Family::D && n % 2 == 1 && special {
                e[rng.gen_range(0..n)] = 0;
            }
            nonzero(e, rng)
        }
    }
}

pub const SMALL_TYPES: [&str; 9] = ["A1", "A2", "A3", "B2", "C3", "D4", "D5", "G2", "F4"];

/// A random group with a random circle in it, the exponents normalized to
/// gcd one.
pub fn random_pair(rng: &mut impl Rng) -> (GroupSpec, CircleEmbedding) {
    loop {
        let torus = rng.gen_range(0..=2);
        let k = rng.gen_range(if torus == 0 { 1 } else { 0 }..=3);
        let mut factors: Vec<SimpleType> = (0..k)
            .map(|_| t(SMALL_TYPES.choose(rng).unwrap()))
            .collect();
        if rng.gen_bool(0.2) {
            factors.push(t("E6"));
        }
        let spec = GroupSpec::new(torus, factors.clone()).unwrap();
        let torus_exp: Vec<i64> = if rng.gen_bool(0.5) {
            vec![0; torus]
        } else {
            (0..torus).map(|_| rng.gen_range(-3..=3)).collect()
        };
        let fac: Vec<Vec<i64>> = factors
            .iter()
            .map(|&ty| {
                if rng.gen_bool(0.15) {
                    vec![0; ty.exponent_len()]
                } else {
                    random_exponents(ty, rng)
                }
            })
            .collect();
        let all: Vec<i64> = torus_exp
            .iter()
            .chain(fac.iter().flatten())
            .copied()
            .collect();
        let g = all.iter().fold(0i64, |a, &x| num_integer::gcd(a, x));
        if g == 0 {
            continue;
        }
        let c = CircleEmbedding::new(
            torus_exp.iter().map(|x| x / g).collect(),
            fac.iter()
                .map(|e| e.iter().map(|x| x / g).collect())
                .collect(),
        );
        return (spec, c);
    }
}
