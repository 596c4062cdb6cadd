use rug::Integer;

/// Signed Stirling numbers of the first kind `S_k^(i)`, `0 <= i <= k <= k_max`.
///
/// Row `k` holds the coefficients of the falling factorial
/// `x(x-1)…(x-k+1) = Σ_i S_k^(i) x^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingTriangle {
    rows: Vec<Vec<Integer>>,
}

/// Builds rows `0..=k_max` with `S_{k+1}^(i) = S_k^(i-1) - k·S_k^(i)`.
pub fn stirling_triangle(k_max: usize) -> StirlingTriangle {
    let mut t = StirlingTriangle {
        rows: vec![vec![Integer::from(1)]],
    };
    t.extend_to(k_max);
    t
}

fn next_row(prev: &[Integer]) -> Vec<Integer> {
    let k = prev.len() - 1;
    let mut next = vec![Integer::new(); k + 2];
    for (i, slot) in next.iter_mut().enumerate() {
        if i >= 1 {
            *slot += &prev[i - 1];
        }
        if i <= k {
            *slot -= Integer::from(&prev[i] * k as u64);
        }
    }
    next
}

impl StirlingTriangle {
    pub fn k_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, k: usize) -> &[Integer] {
        &self.rows[k]
    }

    pub fn get(&self, k: usize, i: usize) -> &Integer {
        &self.rows[k][i]
    }

    /// Extends the triangle in place to cover `k_max`.
    pub fn extend_to(&mut self, k_max: usize) {
        while self.k_max() < k_max {
            let next = next_row(self.rows.last().expect("row 0 always present"));
            self.rows.push(next);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn factorial(n: u32) -> Integer {
        Integer::from(Integer::factorial(n))
    }

    #[test]
    fn small_rows() {
        let t = stirling_triangle(4);
        assert_eq!(t.row(1), [0, 1]);
        assert_eq!(t.row(3), [0, 2, -3, 1]);
        let abs: Integer = t.row(4).iter().map(|x| x.clone().abs()).sum();
        assert_eq!(abs, 24);
    }

    #[test]
    fn row_sums() {
        let t = stirling_triangle(200);
        for k in 0..=200usize {
            let abs: Integer = t.row(k).iter().map(|x| x.clone().abs()).sum();
            assert_eq!(abs, factorial(k as u32), "k = {k}");
            if k >= 2 {
                let plain: Integer = t.row(k).iter().sum();
                assert_eq!(plain, 0, "k = {k}");
            }
        }
    }

    #[test]
    fn extension_matches_direct_build() {
        let mut t = stirling_triangle(5);
        t.extend_to(30);
        assert_eq!(t, stirling_triangle(30));
    }

    proptest! {
        #[test]
        fn rows_are_falling_factorials(k in 0usize..40, x in -50i64..50) {
            let t = stirling_triangle(k);
            let mut poly = Integer::new();
            for c in t.row(k).iter().rev() {
                poly = poly * x + c;
            }
            let mut direct = Integer::from(1);
            for i in 0..k as i64 {
                direct *= x - i;
            }
            prop_assert_eq!(poly, direct);
        }
    }
}
