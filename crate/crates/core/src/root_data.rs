//! Exact data for the finite root system of a supported Cartan type.
//!
//! Everything is derived from the Cartan matrix by closure under simple
//! reflections. The inner product is normalized so short roots have squared
//! length 2; on the simple-root basis it is the integer matrix
//! `(alpha_i, alpha_j) = d_j * <alpha_i, alpha_j^vee>`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::weight::Weight;

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Family letter plus rank; only the tabulated instances are supported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: char,
    pub rank: usize,
}

const SUPPORTED: [(char, usize); 9] = [
    ('A', 1),
    ('A', 2),
    ('A', 3),
    ('A', 4),
    ('B', 2),
    ('B', 3),
    ('C', 3),
    ('D', 4),
    ('G', 2),
];

impl CartanType {
    pub fn new(family: char, rank: usize) -> Result<Self> {
        let family = family.to_ascii_uppercase();
        if SUPPORTED.contains(&(family, rank)) {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::UnsupportedType(format!("{family}{rank}")))
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .ok_or_else(|| Error::UnsupportedType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnsupportedType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

/// A root, tabulated in three coordinate systems at once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Coordinates on the simple roots.
    pub simple_coords: Vec<i64>,
    /// Coordinates of the coroot on the simple coroots.
    pub coroot_coords: Vec<i64>,
    /// Coordinates on the fundamental weights.
    pub weight_coords: Vec<i64>,
    /// Half the squared length; 1 for short roots, the lacing number for long.
    pub half_norm: i64,
}

impl Root {
    pub fn is_short(&self) -> bool {
        self.half_norm == 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Dominant,
    Antidominant,
    /// The zero weight: dominant and antidominant at once.
    Both,
    Neither,
}

/// Immutable tables for one finite root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    pub cartan: Vec<Vec<i64>>,
    /// `d[i] = (alpha_i, alpha_i) / 2`.
    pub d: Vec<i64>,
    /// Maximal number of laces in the Dynkin diagram.
    pub lacing: i64,
    pub positive_roots: Vec<Root>,
    /// Highest short root.
    pub theta: Root,
    /// Sum of the positive coroots, on the simple-coroot basis.
    /// `2<lambda, rho> = dot(two_rho_coroot, lambda)`.
    pub two_rho_coroot: Vec<i64>,
    /// Lowest common denominator of the pairings among fundamental weights.
    pub denom_m: i64,
    /// `m * (w_i, w_j)` as exact integers.
    pub weight_gram_m: Vec<Vec<i64>>,
    /// Inverse of the Cartan matrix; column j gives w_j on the simple roots.
    pub inv_cartan: Vec<Vec<Rat>>,
}

fn cartan_matrix(ct: CartanType) -> (Vec<Vec<i64>>, Vec<i64>) {
    let n = ct.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>| {
        for i in 0..n - 1 {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    let d;
    match ct.family {
        'A' => {
            chain(&mut a);
            d = vec![1; n];
        }
        'B' => {
            // Last simple root short, the rest long.
            chain(&mut a);
            a[n - 1][n - 2] = -2;
            d = {
                let mut d = vec![2; n];
                d[n - 1] = 1;
                d
            };
        }
        'C' => {
            // Last simple root long, the rest short.
            chain(&mut a);
            a[n - 2][n - 1] = -2;
            d = {
                let mut d = vec![1; n];
                d[n - 1] = 2;
                d
            };
        }
        'D' => {
            // Branch node at index 1: connected to 0, 2, 3.
            a[0][1] = -1;
            a[1][0] = -1;
            a[1][2] = -1;
            a[2][1] = -1;
            a[1][3] = -1;
            a[3][1] = -1;
            d = vec![1; n];
        }
        'G' => {
            // alpha_1 short, alpha_2 long.
            a[0][1] = -3;
            a[1][0] = -1;
            d = vec![1, 3];
        }
        _ => unreachable!("CartanType::new vets the family"),
    }
    (a, d)
}

/// Invert a square rational matrix by Gauss-Jordan elimination.
pub fn invert_rat_matrix(mat: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = mat.len();
    let mut aug: Vec<Vec<Rat>> = mat.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        inv.swap(col, pivot);
        let p = aug[col][col].clone();
        for j in 0..n {
            aug[col][j] = &aug[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for j in 0..n {
                    let x = &aug[col][j] * &f;
                    aug[r][j] = &aug[r][j] - &x;
                    let y = &inv[col][j] * &f;
                    inv[r][j] = &inv[r][j] - &y;
                }
            }
        }
    }
    Some(inv)
}

impl RootSystem {
    pub fn build(ct: CartanType) -> Result<RootSystem> {
        let n = ct.rank;
        let (cartan, d) = cartan_matrix(ct);
        let lacing = *d.iter().max().unwrap();

        // Root gram on the simple-root basis: (alpha_i, alpha_j).
        let gram = |i: usize, j: usize| d[j] * cartan[j][i];
        let half_norm = |b: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += b[i] * b[j] * gram(i, j);
                }
            }
            debug_assert_eq!(s % 2, 0);
            s / 2
        };

        // Close the simple roots under simple reflections.
        let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            all.insert(e.clone());
            queue.push(e);
        }
        while let Some(b) = queue.pop() {
            for i in 0..n {
                let c: i64 = (0..n).map(|j| cartan[i][j] * b[j]).sum();
                let mut img = b.clone();
                img[i] -= c;
                if all.insert(img.clone()) {
                    queue.push(img);
                }
            }
        }

        let make_root = |b: Vec<i64>| -> Root {
            let hn = half_norm(&b);
            let coroot: Vec<i64> = (0..n)
                .map(|i| {
                    debug_assert_eq!((b[i] * d[i]) % hn, 0);
                    b[i] * d[i] / hn
                })
                .collect();
            let wc: Vec<i64> = (0..n)
                .map(|i| (0..n).map(|j| cartan[i][j] * b[j]).sum())
                .collect();
            Root {
                simple_coords: b,
                coroot_coords: coroot,
                weight_coords: wc,
                half_norm: hn,
            }
        };

        let positive_roots: Vec<Root> = all
            .into_iter()
            .filter(|b| b.iter().all(|&c| c >= 0))
            .map(make_root)
            .collect();

        // Highest short root: the unique short root dominant as a weight.
        let theta = positive_roots
            .iter()
            .filter(|r| r.is_short())
            .find(|r| r.weight_coords.iter().all(|&c| c >= 0))
            .cloned()
            .ok_or_else(|| Error::Internal("no dominant short root".into()))?;

        let mut two_rho_coroot = vec![0i64; n];
        for r in &positive_roots {
            for i in 0..n {
                two_rho_coroot[i] += r.coroot_coords[i];
            }
        }

        let cartan_rat: Vec<Vec<Rat>> = cartan
            .iter()
            .map(|row| row.iter().map(|&x| rat(x)).collect())
            .collect();
        let inv_cartan = invert_rat_matrix(&cartan_rat)
            .ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;

        // (w_i, w_j) = d_i * (A^{-1})_{ij}; m is the lcd over all pairs.
        let mut m_big = BigInt::one();
        let mut gram_rat = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let g = &inv_cartan[i][j] * rat(d[i]);
                m_big = num::integer::lcm(m_big.clone(), g.denom().abs());
                gram_rat[i][j] = g;
            }
        }
        let denom_m: i64 = m_big
            .to_i64()
            .ok_or_else(|| Error::Internal("weight gram denominator overflows i64".into()))?;
        let weight_gram_m: Vec<Vec<i64>> = gram_rat
            .iter()
            .map(|row| {
                row.iter()
                    .map(|g| {
                        let v = g * rat(denom_m);
                        debug_assert!(v.is_integer());
                        v.to_integer().to_i64().unwrap()
                    })
                    .collect()
            })
            .collect();

        Ok(RootSystem {
            cartan_type: ct,
            rank: n,
            cartan,
            d,
            lacing,
            positive_roots,
            theta,
            two_rho_coroot,
            denom_m,
            weight_gram_m,
            inv_cartan,
        })
    }

    /// `<x, beta^vee>` for a weight and a root of this system.
    pub fn pairing(&self, x: &Weight, beta: &Root) -> i64 {
        beta.coroot_coords
            .iter()
            .zip(&x.0)
            .map(|(c, a)| c * a)
            .sum()
    }

    /// `2 <lambda, rho>` with `rho` half the sum of the positive coroots.
    pub fn two_rho_pairing(&self, lambda: &Weight) -> i64 {
        self.two_rho_coroot
            .iter()
            .zip(&lambda.0)
            .map(|(c, a)| c * a)
            .sum()
    }

    pub fn dominance(&self, lambda: &Weight) -> Dominance {
        let any_pos = lambda.0.iter().any(|&c| c > 0);
        let any_neg = lambda.0.iter().any(|&c| c < 0);
        match (any_pos, any_neg) {
            (false, false) => Dominance::Both,
            (true, false) => Dominance::Dominant,
            (false, true) => Dominance::Antidominant,
            (true, true) => Dominance::Neither,
        }
    }

    /// Simple reflection `s_i` acting linearly on fundamental-weight coords.
    pub fn simple_reflect(&self, i: usize, lambda: &Weight) -> Weight {
        let c = lambda.0[i];
        Weight(
            (0..self.rank)
                .map(|k| lambda.0[k] - self.cartan[k][i] * c)
                .collect(),
        )
    }

    /// Reflection in the highest short root.
    pub fn theta_reflect(&self, lambda: &Weight) -> Weight {
        let c = self.pairing(lambda, &self.theta);
        Weight(
            (0..self.rank)
                .map(|k| lambda.0[k] - self.theta.weight_coords[k] * c)
                .collect(),
        )
    }

    /// `theta` as a weight.
    pub fn theta_weight(&self) -> Weight {
        Weight(self.theta.weight_coords.clone())
    }

    /// `alpha_i` as a weight (column i of the Cartan matrix).
    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight((0..self.rank).map(|k| self.cartan[k][i]).collect())
    }

    /// Express a vector given in weight coordinates on the simple-root basis.
    pub fn to_root_coords(&self, x: &Weight) -> Vec<Rat> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank).fold(Rat::zero(), |acc, j| {
                    acc + &self.inv_cartan[i][j] * rat(x.0[j])
                })
            })
            .collect()
    }

    /// Whether `x` lies in the root lattice.
    pub fn in_root_lattice(&self, x: &Weight) -> bool {
        self.to_root_coords(x).iter().all(|c| c.is_integer())
    }

    /// `m * (x, y)` for two weights, exact.
    pub fn weight_pairing_m(&self, x: &Weight, y: &Weight) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += x.0[i] * y.0[j] * self.weight_gram_m[i][j];
            }
        }
        s
    }

    /// `(x, y)` for two weights as an exact rational.
    pub fn weight_pairing(&self, x: &Weight, y: &Weight) -> Rat {
        rat_frac(self.weight_pairing_m(x, y), self.denom_m)
    }

    /// `ell(tau_lambda)` by the positive-root sum formula.
    pub fn translation_length(&self, lambda: &Weight) -> i64 {
        self.positive_roots
            .iter()
            .map(|r| self.pairing(lambda, r).abs())
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::build(name.parse().unwrap()).unwrap()
    }

    #[test]
    fn rejects_unsupported() {
        assert!("E8".parse::<CartanType>().is_err());
        assert!("F4".parse::<CartanType>().is_err());
        assert!("A5".parse::<CartanType>().is_err());
        assert!("b2".parse::<CartanType>().is_ok());
    }

    #[test]
    fn positive_root_counts() {
        for (name, count) in [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("A4", 10),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("G2", 6),
        ] {
            assert_eq!(rs(name).positive_roots.len(), count, "{name}");
        }
    }

    #[test]
    fn a1_basics() {
        let r = rs("A1");
        assert_eq!(r.lacing, 1);
        assert_eq!(r.theta.simple_coords, vec![1]);
        // rho = alpha^vee / 2, so 2<w, rho> = 1.
        assert_eq!(r.two_rho_pairing(&Weight(vec![1])), 1);
    }

    #[test]
    fn a2_positive_roots() {
        let r = rs("A2");
        let coords: Vec<Vec<i64>> = r
            .positive_roots
            .iter()
            .map(|p| p.simple_coords.clone())
            .collect();
        assert!(coords.contains(&vec![1, 0]));
        assert!(coords.contains(&vec![0, 1]));
        assert!(coords.contains(&vec![1, 1]));
    }

    #[test]
    fn g2_theta_is_highest_short_root() {
        let r = rs("G2");
        assert_eq!(r.lacing, 3);
        // The highest root 3a1+2a2 is long; theta is the short 2a1+a2.
        assert_eq!(r.theta.simple_coords, vec![2, 1]);
        assert!(r.theta.is_short());
        let highest = r
            .positive_roots
            .iter()
            .max_by_key(|p| p.simple_coords.iter().sum::<i64>())
            .unwrap();
        assert_eq!(highest.simple_coords, vec![3, 2]);
        assert!(!highest.is_short());
    }

    #[test]
    fn pairing_examples() {
        let a1 = rs("A1");
        let alpha = &a1.positive_roots[0];
        assert_eq!(a1.pairing(&Weight(vec![1]), alpha), 1);
        assert_eq!(a1.pairing(&Weight(vec![0]), alpha), 0);

        let a2 = rs("A2");
        let highest = a2
            .positive_roots
            .iter()
            .find(|p| p.simple_coords == vec![1, 1])
            .unwrap();
        assert_eq!(a2.pairing(&Weight(vec![1, 1]), highest), 2);
    }

    #[test]
    fn dominance_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.dominance(&Weight(vec![1])), Dominance::Dominant);
        assert_eq!(a1.dominance(&Weight(vec![-1])), Dominance::Antidominant);
        assert_eq!(a1.dominance(&Weight(vec![0])), Dominance::Both);
        let a2 = rs("A2");
        assert_eq!(a2.dominance(&Weight(vec![1, -1])), Dominance::Neither);
    }

    #[test]
    fn denom_m_values() {
        assert_eq!(rs("A1").denom_m, 2);
        assert_eq!(rs("A2").denom_m, 3);
        assert_eq!(rs("A3").denom_m, 4);
        assert_eq!(rs("G2").denom_m, 1);
        // All B2 fundamental-weight pairings are integral.
        assert_eq!(rs("B2").denom_m, 1);
    }

    #[test]
    fn fundamental_weight_pairing_is_kronecker() {
        for name in ["A2", "B2", "B3", "C3", "D4", "G2"] {
            let r = rs(name);
            for i in 0..r.rank {
                let mut e = vec![0; r.rank];
                e[i] = 1;
                let w = Weight(e);
                for root in r
                    .positive_roots
                    .iter()
                    .filter(|p| p.simple_coords.iter().sum::<i64>() == 1)
                {
                    let k = root.simple_coords.iter().position(|&c| c == 1).unwrap();
                    assert_eq!(r.pairing(&w, root), i64::from(k == i));
                }
            }
        }
    }

    #[test]
    fn simple_reflection_permutes_other_positive_roots() {
        for name in ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"] {
            let r = rs(name);
            for i in 0..r.rank {
                for root in &r.positive_roots {
                    if root.simple_coords.iter().sum::<i64>() == 1 && root.simple_coords[i] == 1 {
                        continue; // alpha_i itself
                    }
                    let c: i64 = (0..r.rank)
                        .map(|j| r.cartan[i][j] * root.simple_coords[j])
                        .sum();
                    let mut img = root.simple_coords.clone();
                    img[i] -= c;
                    assert!(
                        r.positive_roots.iter().any(|p| p.simple_coords == img),
                        "{name}: s_{i} does not permute positives"
                    );
                }
            }
        }
    }

    #[test]
    fn two_rho_integer_and_matches_sum() {
        for name in ["A2", "B2", "G2", "C3"] {
            let r = rs(name);
            // 2<l_+, rho> = sum over positive roots of <l_+, a^vee> for
            // dominant l_+; spot check a few dominant weights.
            for coords in [vec![1; r.rank], vec![2; r.rank]] {
                let w = Weight(coords);
                let direct: i64 = r.positive_roots.iter().map(|p| r.pairing(&w, p)).sum();
                assert_eq!(r.two_rho_pairing(&w), direct);
            }
        }
    }

    #[test]
    fn weight_gram_symmetric() {
        for name in ["A2", "B2", "B3", "C3", "D4", "G2"] {
            let r = rs(name);
            for i in 0..r.rank {
                for j in 0..r.rank {
                    assert_eq!(r.weight_gram_m[i][j], r.weight_gram_m[j][i]);
                }
            }
        }
    }
}
