use rug::{Integer, Rational};

/// Even-index Bernoulli numbers `B_0, B_2, …, B_{2·count}`.
///
/// Element `m` holds `B_{2m}`. Built from the integer tangent-number
/// recurrence, `B_{2m} = (-1)^(m-1) · 2m · T_m / (4^m (4^m - 1))`, so no
/// rational arithmetic is needed until the final division.
pub fn bernoulli_numbers(count: usize) -> Vec<Rational> {
    let tangent = tangent_numbers(count);
    let mut out = Vec::with_capacity(count + 1);
    out.push(Rational::from(1));
    for m in 1..=count {
        let four_m = Integer::from(1) << (2 * m as u32);
        let den = &four_m * (four_m.clone() - 1u32);
        let mut b = Rational::from((Integer::from(&tangent[m - 1] * (2 * m as u64)), den));
        if m % 2 == 0 {
            b = -b;
        }
        out.push(b);
    }
    out
}

/// Tangent numbers `T_1..T_n` (coefficients of `tan x`, scaled by factorials).
fn tangent_numbers(n: usize) -> Vec<Integer> {
    if n == 0 {
        return Vec::new();
    }
    let mut t = vec![Integer::new(); n];
    t[0] = Integer::from(1);
    for k in 1..n {
        t[k] = Integer::from(&t[k - 1] * k as u64);
    }
    for k in 1..n {
        for j in k..n {
            let prev = Integer::from(&t[j - 1] * (j - k) as u64);
            t[j] *= (j - k + 2) as u64;
            t[j] += prev;
        }
    }
    t
}

/// Same numbers from the defining recurrence `sum_{k<=n} C(n+1,k) B_k = 0`.
///
/// Quadratic in rational operations; kept as an independent check.
pub fn bernoulli_numbers_by_recurrence(count: usize) -> Vec<Rational> {
    let n_max = 2 * count;
    let mut all: Vec<Rational> = Vec::with_capacity(n_max + 1);
    all.push(Rational::from(1));
    for n in 1..=n_max {
        let mut acc = Rational::new();
        let mut binom = Integer::from(1);
        for (k, b) in all.iter().enumerate() {
            acc += Rational::from(&binom * b.numer()) / b.denom();
            binom = binom * (n + 1 - k) as u64 / (k + 1) as u64;
        }
        all.push(-acc / (n as u64 + 1));
    }
    all.into_iter().step_by(2).collect()
}
