use rayon::prelude::*;
use rug::ops::Pow;
use rug::{Integer, Rational};

use super::stirling::StirlingTriangle;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Odd-index coefficients `χ_{k,1}, χ_{k,3}, …, χ_{k,2k-1}`.
///
/// Even-index coefficients vanish identically and are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiRow {
    k: usize,
    odd: Vec<Integer>,
}

impl ChiRow {
    pub fn k(&self) -> usize {
        self.k
    }

    /// `χ_{k,q}` for any `q`; zero for even `q` and `q > 2k-1`.
    pub fn get(&self, q: usize) -> Integer {
        if q.is_multiple_of(2) || q > 2 * self.k - 1 {
            return Integer::new();
        }
        self.odd[q / 2].clone()
    }

    /// `(q, χ_{k,q})` over odd `q`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &Integer)> {
        self.odd.iter().enumerate().map(|(i, c)| (2 * i + 1, c))
    }
}

/// `W(d) = Σ_{i-j=d} |S_k^(i) S_k^(j)|` for `d = -(k-1)..=k-1`, stored at `d + k - 1`.
///
/// Both sums in the derivation run over `i, j >= 1`; starting from 0 gives
/// the same result since `S_k^(0) = 0` for `k >= 1`.
fn difference_weights(k: usize, triangle: &StirlingTriangle) -> Vec<Integer> {
    let row: Vec<Integer> = triangle.row(k).iter().map(|s| Integer::from(s.abs_ref())).collect();
    let mut w = vec![Integer::new(); 2 * k - 1];
    for i in 1..=k {
        for j in 1..=k {
            w[i + k - 1 - j] += Integer::from(&row[i] * &row[j]);
        }
    }
    w
}

fn check_triangle(k: usize, triangle: &StirlingTriangle) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if triangle.k_max() < 2 * k - 1 {
        return Err(Error::InvalidArgument(format!(
            "Stirling triangle up to {} does not cover 2k-1 = {}",
            triangle.k_max(),
            2 * k - 1
        )));
    }
    Ok(())
}

fn into_row(k: usize, full: Vec<Integer>) -> Result<ChiRow> {
    // full[q] for q = 0..=2k-1
    if let Some(q) = (0..full.len()).step_by(2).find(|&q| full[q] != 0) {
        return Err(Error::Structure(format!("χ_({k},{q}) = {} is not zero", full[q])));
    }
    let odd = full.into_iter().skip(1).step_by(2).collect();
    Ok(ChiRow { k, odd })
}

/// `χ_{k,q}` from the quadruple sum
/// `Σ_{i,j} Σ_{p>=q} |S_k^(i) S_k^(j)| S_{2k-1}^(p) C(p,q) (k+i-j-1)^(p-q)`,
/// grouped over `d = i - j`.
///
/// Fails with [`Error::Structure`] if an even-index coefficient comes out
/// nonzero. The cost is cubic in `k`; [`chi_coeffs_fast`] is quadratic.
pub fn chi_coeffs(k: usize, triangle: &StirlingTriangle) -> Result<ChiRow> {
    check_triangle(k, triangle)?;
    let m = 2 * k - 1;
    let w = difference_weights(k, triangle);
    let s_m = triangle.row(m);
    let mut full = vec![Integer::new(); m + 1];
    for (idx, weight) in w.iter().enumerate() {
        // base = k + d - 1 with d = idx - (k - 1)
        let base = Integer::from(idx);
        let powers: Vec<Integer> = (0..=m as u32).map(|e| base.clone().pow(e)).collect();
        for (q, slot) in full.iter_mut().enumerate() {
            let mut inner = Integer::new();
            for p in q..=m {
                let binom = Integer::from(Integer::binomial_u(p as u32, q as u32));
                inner += Integer::from(&s_m[p] * &binom) * &powers[p - q];
            }
            *slot += inner * weight;
        }
    }
    into_row(k, full)
}

/// `χ_{k,q}` through the Vandermonde expansion of the falling factorial
/// `(x + a)_m = Σ_r (m!/r!) C(a, m-r) (x)_r`, `m = 2k-1`, `a = k-1+d`:
/// with `G_r = Σ_d W(d) C(k-1+d, m-r)`, `χ_{k,q} = Σ_{r>=q} G_r (m!/r!) S_r^(q)`.
pub fn chi_coeffs_fast(k: usize, triangle: &StirlingTriangle) -> Result<ChiRow> {
    check_triangle(k, triangle)?;
    let m = 2 * k - 1;
    let w = difference_weights(k, triangle);
    let g: Vec<Integer> = (0..=m)
        .map(|r| {
            let mut acc = Integer::new();
            for (a, weight) in w.iter().enumerate() {
                if a >= m - r {
                    acc += Integer::from(Integer::binomial_u(a as u32, (m - r) as u32)) * weight;
                }
            }
            acc
        })
        .collect();
    // m!/r! for r = 0..=m
    let mut ratio = vec![Integer::from(1); m + 1];
    for r in (0..m).rev() {
        ratio[r] = Integer::from(&ratio[r + 1] * (r as u64 + 1));
    }
    let weighted: Vec<Integer> = g.iter().zip(&ratio).map(|(a, b)| Integer::from(a * b)).collect();
    let full = (0..=m)
        .map(|q| {
            let mut acc = Integer::new();
            for (r, gr) in weighted.iter().enumerate().skip(q) {
                acc += Integer::from(gr * triangle.get(r, q));
            }
            acc
        })
        .collect();
    into_row(k, full)
}

/// Rows `k = 1..=k_max`, built in parallel by the quadratic route.
pub fn chi_rows(k_max: usize, triangle: &StirlingTriangle) -> Result<Vec<ChiRow>> {
    (1..=k_max).into_par_iter().map(|k| chi_coeffs_fast(k, triangle)).collect()
}

/// `β_k(n)` as the even polynomial `Σ_{q odd} χ_{k,q} n^(q+1) / ((k!)² (2k-1)!)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaPolynomial {
    k: usize,
    /// Coefficient of `n^(2i+2)` at index `i`.
    coeffs: Vec<Rational>,
}

impl BetaPolynomial {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn degree(&self) -> usize {
        2 * self.coeffs.len()
    }

    /// Coefficients of `n², n⁴, …, n^(2k)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `n^e`; zero for odd `e`.
    pub fn coeff(&self, e: usize) -> Rational {
        if e == 0 || e % 2 == 1 || e > self.degree() {
            return Rational::new();
        }
        self.coeffs[e / 2 - 1].clone()
    }

    /// Horner evaluation in `n²`.
    pub fn eval<F: Field>(&self, n: &F) -> F {
        let n_sq = n.clone() * n;
        let mut acc = n.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = (acc + &F::from_rational_like(c, n)) * &n_sq;
        }
        acc
    }

    /// `(β_k(n), β_k'(n))`.
    pub fn eval_with_derivative<F: Field>(&self, n: &F) -> (F, F) {
        let n_sq = n.clone() * n;
        let mut p = n.zero_like();
        let mut dp = n.zero_like();
        // β(n) = n²·P(n²), β'(n) = 2n·(P(n²) + n² P'(n²))
        for c in self.coeffs.iter().rev() {
            dp = dp * &n_sq + &p;
            p = p * &n_sq + &F::from_rational_like(c, n);
        }
        let value = p.clone() * &n_sq;
        let two_n = n.clone() + n;
        let derivative = (p + &(dp * &n_sq)) * &two_n;
        (value, derivative)
    }
}

pub fn beta_poly(k: usize, chi: &ChiRow) -> BetaPolynomial {
    assert_eq!(k, chi.k(), "χ row is for k = {}, not {k}", chi.k());
    let k_fact = Integer::from(Integer::factorial(k as u32));
    let denom = Integer::from(&k_fact * &k_fact) * Integer::from(Integer::factorial(2 * k as u32 - 1));
    let coeffs = chi
        .entries()
        .map(|(_, c)| Rational::from((c.clone(), denom.clone())))
        .collect();
    BetaPolynomial { k, coeffs }
}

/// `C(x, m) = (1/m!) Σ_p S_m^(p) x^p`, valid for any rational `x`.
pub fn binomial_poly(x: &Rational, m: usize, triangle: &StirlingTriangle) -> Rational {
    let mut acc = Rational::new();
    for s in triangle.row(m).iter().rev() {
        acc = acc * x + s;
    }
    acc / Integer::from(Integer::factorial(m as u32))
}

/// `β_{nk} = n/(k!)² Σ_{i,j=1..k} |S_k^(i) S_k^(j)| C(n+k+i-j-1, 2k-1)`.
pub fn beta_direct(n: i64, k: usize, triangle: &StirlingTriangle) -> Result<Rational> {
    check_triangle(k, triangle)?;
    let w = difference_weights(k, triangle);
    let mut acc = Rational::new();
    for (idx, weight) in w.iter().enumerate() {
        // upper argument n + k + d - 1 with d = idx - (k - 1)
        let x = Rational::from(n + idx as i64);
        acc += binomial_poly(&x, 2 * k - 1, triangle) * weight;
    }
    let k_fact = Integer::from(Integer::factorial(k as u32));
    Ok(acc * n / Integer::from(&k_fact * &k_fact))
}
