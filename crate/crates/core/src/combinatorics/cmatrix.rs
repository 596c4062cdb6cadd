use rayon::prelude::*;
use rug::ops::Pow;
use rug::{Integer, Rational};

use super::omega::omega_eval;

/// Closed-form entry `c_kj` of the inverse interpolation matrix, `1 <= j <= k`.
///
/// The Pochhammer symbols `(1/j - k)_{k-j}` and `(-1/j)_j` both carry
/// powers of `j` that cancel the `j^-k` factor, leaving
/// `C(k,j) k! (k+1)² (j+1)^(2k-2) / (Π_{t<k-j} (1 - jk + jt) · Π_{t<j} (jt - 1))`.
pub fn c_coeff(k: usize, j: usize) -> Rational {
    assert!(1 <= j && j <= k, "c_coeff needs 1 <= j <= k, got ({k}, {j})");
    let (k_i, j_i) = (k as i64, j as i64);
    let mut num = Integer::from(Integer::binomial_u(k as u32, j as u32));
    num *= Integer::from(Integer::factorial(k as u32));
    num *= (k_i + 1) * (k_i + 1);
    num *= Integer::from(j_i + 1).pow(2 * k as u32 - 2);

    let mut den = Integer::from(1);
    for t in 0..k_i - j_i {
        den *= 1 - j_i * k_i + j_i * t;
    }
    for t in 0..j_i {
        den *= j_i * t - 1;
    }
    Rational::from((num, den))
}

/// Lower-triangular matrix `c_kj` mapping node values to `α_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMatrix {
    rows: Vec<Vec<Rational>>,
}

impl CMatrix {
    pub fn new(k_max: usize) -> Self {
        let rows = (1..=k_max)
            .into_par_iter()
            .map(|k| (1..=k).map(|j| c_coeff(k, j)).collect())
            .collect();
        Self { rows }
    }

    pub fn k_max(&self) -> usize {
        self.rows.len()
    }

    /// `c_kj`, both indices 1-based.
    pub fn get(&self, k: usize, j: usize) -> &Rational {
        &self.rows[k - 1][j - 1]
    }

    /// Row `k` as `c_k1..c_kk`.
    pub fn row(&self, k: usize) -> &[Rational] {
        &self.rows[k - 1]
    }

    /// Checks every entry against the exact inverse of the `ω` node system.
    pub fn matches_triangular_solve(&self) -> bool {
        omega_system_inverse(self.k_max()) == self.rows
    }
}

/// Exact inverse of the lower-triangular system whose row `m` reads
/// `Σ_{k<=m} (-1)^k ω_k(m/(m+1)) α_k = f(m/(m+1))`.
///
/// Returned as rows `k = 1..=k_max`, each holding columns `1..=k`.
pub fn omega_system_inverse(k_max: usize) -> Vec<Vec<Rational>> {
    let system: Vec<Vec<Rational>> = (1..=k_max as u64)
        .map(|m| {
            let node = Rational::from((m, m + 1));
            (1..=m as usize)
                .map(|k| {
                    let w = omega_eval(k, &node);
                    if k % 2 == 1 {
                        -w
                    } else {
                        w
                    }
                })
                .collect()
        })
        .collect();

    // Forward substitution against each unit vector e_j.
    let mut inverse: Vec<Vec<Rational>> = (1..=k_max).map(|k| vec![Rational::new(); k]).collect();
    for j in 0..k_max {
        let mut x = vec![Rational::new(); k_max];
        for m in j..k_max {
            let mut rhs = if m == j { Rational::from(1) } else { Rational::new() };
            for k in j..m {
                rhs -= Rational::from(&system[m][k] * &x[k]);
            }
            x[m] = rhs / &system[m][m];
        }
        for k in j..k_max {
            inverse[k][j] = x[k].clone();
        }
    }
    inverse
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn printed_entries() {
        let printed: [&[Rational]; 5] = [
            &[q(-4, 1)],
            &[q(144, 1), q(-162, 1)],
            &[q(-2304, 1), q(23328, 5), q(-12288, 5)],
            &[q(25600, 1), q(-524880, 7), q(983040, 11), q(-3125000, 77)],
            &[
                q(-230400, 1),
                // printed as 23328/7; the exact inverse of the node system
                // gives 270 times that
                q(6298560, 7),
                q(-141557760, 77),
                q(2812500000, 1463),
                q(-100776960, 133),
            ],
        ];
        let c = CMatrix::new(5);
        for (k, row) in printed.iter().enumerate() {
            assert_eq!(c.row(k + 1), *row, "row {}", k + 1);
        }
    }

    /// Literal Pochhammer products over the rationals.
    fn c_coeff_pochhammer(k: usize, j: usize) -> Rational {
        let rising = |x: Rational, n: usize| {
            (0..n).fold(Rational::from(1), |acc, t| acc * (x.clone() + t as u64))
        };
        let jq = Rational::from(j as u64);
        let mut v = Rational::from(Integer::from(Integer::binomial_u(k as u32, j as u32)));
        v *= Integer::from(Integer::factorial(k as u32));
        v *= ((k + 1) * (k + 1)) as u64;
        v /= jq.clone().pow(k as i32);
        v *= Rational::from(j as u64 + 1).pow(2 * k as i32 - 2);
        v /= rising(Rational::from((1, j as u64)) - k as u64, k - j);
        v /= rising(-Rational::from((1, j as u64)), j);
        v
    }

    #[test]
    fn integer_form_equals_pochhammer_form() {
        for k in 1..=14 {
            for j in 1..=k {
                assert_eq!(c_coeff(k, j), c_coeff_pochhammer(k, j), "({k}, {j})");
            }
        }
    }

    #[test]
    fn closed_form_inverts_node_system() {
        assert!(CMatrix::new(16).matches_triangular_solve());
    }

    #[test]
    fn diagonal_nonzero() {
        let c = CMatrix::new(40);
        for k in 1..=40 {
            assert_ne!(*c.get(k, k), 0);
        }
    }
}
