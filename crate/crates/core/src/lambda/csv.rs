use rug::Float;

use super::alpha::AlphaSeries;
use super::evaluator::LambdaValue;
use super::nu::NuSeries;
use crate::mp::format_real;
use crate::table::Table;

/// `k, alpha_k, significance`.
pub fn alpha_table(alphas: &AlphaSeries) -> Table {
    let mut t = Table::new(["k", "alpha", "significance"]);
    for (i, v) in alphas.values().iter().enumerate() {
        t.push(vec![(i + 1).to_string(), format_real(v), format!("{:.1}", alphas.significance(i + 1))]);
    }
    t
}

/// `q, nu_q` over even `q`.
pub fn nu_table(nus: &NuSeries) -> Table {
    let mut t = Table::new(["q", "nu_q"]);
    for (q, v) in nus.entries() {
        t.push(vec![q.to_string(), format_real(v)]);
    }
    t
}

/// `n, lambda_n, significance`.
pub fn lambda_table(values: &[(u64, LambdaValue<Float>)]) -> Table {
    let mut t = Table::new(["n", "lambda_n", "significance"]);
    for (n, v) in values {
        t.push(vec![n.to_string(), format_real(&v.value), format!("{:.1}", v.significance)]);
    }
    t
}
