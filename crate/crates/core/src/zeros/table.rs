use std::fs;
use std::path::Path;

use rug::{Complex, Float};

use crate::error::{Error, Result};
use crate::mp::{format_real, parse_real};
use crate::table::Table;

/// The tabulated zeros `σ_1..σ_3520` shipped with the crate (`k,re,im`, 14 digits).
pub const REFERENCE_ZEROS_CSV: &str = include_str!("../../data/reference_zeros.csv");

/// One zero in the canonical quadrant.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexZero {
    pub index: usize,
    pub re: Float,
    pub im: Float,
    /// `|λ(σ)|` at the reported point; zero for tabulated values.
    pub residual: Float,
    pub newton_steps: usize,
    /// `log|Δ_last| / log|Δ_prev|` of the final Newton steps, about 2 when quadratic.
    pub convergence_order: Option<f64>,
    /// Set when `λ'` vanished along with `λ`, as at the double zero at the origin.
    pub derivative_underflow: bool,
}

impl ComplexZero {
    pub fn tabulated(index: usize, re: Float, im: Float) -> Self {
        let prec = re.prec();
        Self {
            index,
            re,
            im,
            residual: Float::new(prec),
            newton_steps: 0,
            convergence_order: None,
            derivative_underflow: false,
        }
    }

    pub fn value(&self) -> Complex {
        Complex::with_val(self.re.prec().max(self.im.prec()), (&self.re, &self.im))
    }

    pub fn modulus(&self) -> Float {
        Float::with_val(self.re.prec(), self.re.hypot_ref(&self.im))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Computed,
    Fixture,
}

/// Zeros ordered by strictly increasing real part.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroTable {
    zeros: Vec<ComplexZero>,
    provenance: Provenance,
}

impl ZeroTable {
    pub fn new(zeros: Vec<ComplexZero>, provenance: Provenance) -> Result<Self> {
        for pair in zeros.windows(2) {
            if pair[1].re <= pair[0].re {
                return Err(Error::InvalidArgument(format!(
                    "zero {} does not lie to the right of zero {}",
                    pair[1].index, pair[0].index
                )));
            }
        }
        if let Some(z) = zeros.iter().find(|z| z.re.is_sign_negative() || z.im.is_sign_negative()) {
            return Err(Error::InvalidArgument(format!("zero {} is outside the canonical quadrant", z.index)));
        }
        Ok(Self { zeros, provenance })
    }

    pub fn empty(provenance: Provenance) -> Self {
        Self {
            zeros: Vec::new(),
            provenance,
        }
    }

    pub fn zeros(&self) -> &[ComplexZero] {
        &self.zeros
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// The zero carrying index `k`.
    pub fn by_index(&self, k: usize) -> Option<&ComplexZero> {
        match self.zeros.get(k.wrapping_sub(1)) {
            Some(z) if z.index == k => Some(z),
            _ => self.zeros.iter().find(|z| z.index == k),
        }
    }

    /// The first `n` zeros.
    pub fn truncated(&self, n: usize) -> Self {
        Self {
            zeros: self.zeros[..n.min(self.len())].to_vec(),
            provenance: self.provenance,
        }
    }

    /// Parses `k,re,im[,residual]` rows; `#` lines and the header are skipped.
    pub fn from_csv(text: &str, bits: u32, provenance: Provenance) -> Result<Self> {
        let mut zeros = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with("k,") {
                continue;
            }
            let cells: Vec<&str> = line.split(',').map(str::trim).collect();
            if cells.len() < 3 {
                return Err(Error::parse(line_no, "expected `k,re,im`"));
            }
            let index: usize = cells[0]
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad index `{}`", cells[0])))?;
            let field = |c: &str| {
                parse_real(c, bits).map_err(|_| Error::parse(line_no, format!("bad number `{c}`")))
            };
            let mut z = ComplexZero::tabulated(index, field(cells[1])?, field(cells[2])?);
            if let Some(r) = cells.get(3) {
                z.residual = field(r)?;
            }
            zeros.push(z);
        }
        Self::new(zeros, provenance)
    }

    pub fn load(path: &Path, bits: u32) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_csv(&text, bits, Provenance::Fixture)
    }

    /// The shipped reference table.
    pub fn reference(bits: u32) -> Self {
        Self::from_csv(REFERENCE_ZEROS_CSV, bits, Provenance::Fixture).expect("shipped table parses")
    }

    /// `k,re,im,residual`, or `k,re,im` for fixtures.
    pub fn to_table(&self) -> Table {
        let with_residual = self.provenance == Provenance::Computed;
        let mut t = if with_residual {
            Table::new(["k", "re", "im", "residual"])
        } else {
            Table::new(["k", "re", "im"])
        };
        for z in &self.zeros {
            let mut row = vec![z.index.to_string(), format_real(&z.re), format_real(&z.im)];
            if with_residual {
                row.push(format_real(&z.residual));
            }
            t.push(row);
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_table_shape() {
        let t = ZeroTable::reference(64);
        assert_eq!(t.len(), 3520);
        let z1 = t.by_index(1).unwrap();
        assert!((z1.re.to_f64() - 76.010927161420).abs() < 1e-12);
        assert!((z1.modulus().to_f64() - 104.7027678).abs() < 1e-7);
        let z10 = t.by_index(10).unwrap();
        assert_eq!((z10.re.to_f64(), z10.im.to_f64()), (888.11455089448, 108.307075737171));
        assert_eq!(t.zeros().last().unwrap().index, 3520);
    }

    #[test]
    fn csv_round_trip() {
        let t = ZeroTable::reference(64).truncated(5);
        let text = t.to_table().to_csv(&["test".into()]);
        assert_eq!(ZeroTable::from_csv(&text, 64, Provenance::Fixture).unwrap(), t);
    }

    #[test]
    fn rejects_unordered_rows() {
        let text = "k,re,im\n1,5.0,1.0\n2,4.0,1.0\n";
        assert!(ZeroTable::from_csv(text, 64, Provenance::Fixture).is_err());
        assert!(matches!(
            ZeroTable::from_csv("k,re,im\n1,x,2\n", 64, Provenance::Fixture),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
