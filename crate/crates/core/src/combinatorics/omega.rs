use rug::Rational;

use crate::scalar::Field;

/// `η_k(s) = Π_{i=1..k} (s - 1/i)`.
pub fn eta_eval<F: Field>(k: usize, s: &F) -> F {
    let mut acc = s.one_like();
    for i in 1..=k {
        let inv = F::from_rational_like(&Rational::from((1, i as u64)), s);
        acc = acc * &(s.clone() - &inv);
    }
    acc
}

/// `ω_k(s) = η_k(s)·η_k(1-s)`, symmetric under `s ↦ 1-s`.
///
/// Vanishes at `0, 1, 1/2, 1/3, 2/3, …`: the first `k` node pairs.
pub fn omega_eval<F: Field>(k: usize, s: &F) -> F {
    let mirrored = s.one_like() - s;
    eta_eval(k, s) * &eta_eval(k, &mirrored)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Float;

    #[test]
    fn first_values() {
        assert_eq!(omega_eval(1, &Rational::from((1, 2))), Rational::from((1, 4)));
        for k in 3..12 {
            assert_eq!(omega_eval(k, &Rational::from((1, 3))), 0);
        }
    }

    #[test]
    fn symmetric() {
        let s = Float::with_val(128, 0.3);
        let a = omega_eval(2, &s);
        let b = omega_eval(2, &(Float::with_val(128, 1) - &s));
        assert!((a - b).abs() < 1e-35);
        for k in 1..10 {
            let s = Rational::from((2, 7));
            assert_eq!(omega_eval(k, &s), omega_eval(k, &(Rational::from(1) - &s)));
        }
    }

    #[test]
    fn vanishes_on_first_node_pairs() {
        for k in 1..15u64 {
            for i in 1..=k {
                assert_eq!(omega_eval(k as usize, &Rational::from((1, i))), 0);
                assert_eq!(omega_eval(k as usize, &Rational::from((i - 1, i))), 0);
            }
            assert_ne!(omega_eval(k as usize, &Rational::from((k, k + 1))), 0);
        }
    }
}
