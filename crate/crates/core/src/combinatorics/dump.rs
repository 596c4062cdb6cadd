use serde_json::{json, Value};

use super::{beta_poly, chi_rows, stirling_triangle, CMatrix};
use crate::error::Result;

/// Stirling rows, c-matrix, χ rows and β coefficients up to `k_max` as JSON.
///
/// Every exact number is a decimal string, `"p"` or `"p/q"`.
pub fn dump_json(k_max: usize) -> Result<Value> {
    let triangle = stirling_triangle(2 * k_max.max(1) - 1);
    let chis = chi_rows(k_max, &triangle)?;
    let cmat = CMatrix::new(k_max);

    let stirling: Vec<Value> = (0..=k_max)
        .map(|k| json!(triangle.row(k).iter().map(|s| s.to_string()).collect::<Vec<_>>()))
        .collect();
    let c: Vec<Value> = (1..=k_max)
        .map(|k| json!(cmat.row(k).iter().map(|x| x.to_string()).collect::<Vec<_>>()))
        .collect();
    let chi: Vec<Value> = chis
        .iter()
        .map(|row| {
            let entries: serde_json::Map<String, Value> =
                row.entries().map(|(q, v)| (q.to_string(), json!(v.to_string()))).collect();
            json!({ "k": row.k(), "q": entries })
        })
        .collect();
    let beta: Vec<Value> = chis
        .iter()
        .map(|row| {
            let p = beta_poly(row.k(), row);
            json!({
                "k": row.k(),
                "even_powers": p.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();

    Ok(json!({
        "k_max": k_max,
        "stirling": stirling,
        "c": c,
        "chi": chi,
        "beta": beta,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings() {
        let v = dump_json(5).unwrap();
        assert_eq!(v["c"][4][3], "2812500000/1463");
        assert_eq!(v["c"][0][0], "-4");
        assert_eq!(v["stirling"][3], json!(["0", "2", "-3", "1"]));
        assert_eq!(v["chi"][1]["q"]["3"], "4");
        assert_eq!(v["beta"][2]["even_powers"][0], "11/1080");
    }
}
