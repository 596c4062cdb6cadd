use std::fs;
use std::path::Path;

use rug::Float;

use crate::error::{Error, Result};
use crate::mp::parse_real;

/// First 100 zeta-zero ordinates at 30 digits, in `gamma.txt` format.
pub const GAMMA_TXT: &str = include_str!("../../data/gamma.txt");

/// Ascending ordinates `γ_j` of zeta zeros `1/2 + iγ_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaZeroList {
    ordinates: Vec<Float>,
}

impl ZetaZeroList {
    /// Checks that the ordinates increase strictly and that `γ_1 > 14`.
    pub fn new(ordinates: Vec<Float>) -> Result<Self> {
        if let Some(first) = ordinates.first() {
            if *first <= 14 {
                return Err(Error::InvalidArgument(format!(
                    "first ordinate {} is not above 14",
                    first.to_f64()
                )));
            }
        }
        if let Some(i) = ordinates.windows(2).position(|w| w[1] <= w[0]) {
            return Err(Error::InvalidArgument(format!("ordinate {} does not increase", i + 2)));
        }
        Ok(Self { ordinates })
    }

    /// One decimal ordinate per line; blank lines and `#` comments ignored.
    pub fn parse(text: &str, bits: u32) -> Result<Self> {
        let mut ordinates = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let v = parse_real(line, bits).map_err(|_| Error::parse(i + 1, format!("bad ordinate `{line}`")))?;
            ordinates.push(v);
        }
        Self::new(ordinates)
    }

    pub fn load(path: &Path, bits: u32) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, bits)
    }

    /// The shipped starter list.
    pub fn bundled(bits: u32) -> Self {
        Self::parse(GAMMA_TXT, bits).expect("shipped ordinates parse")
    }

    pub fn ordinates(&self) -> &[Float] {
        &self.ordinates
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// The first `m` ordinates.
    pub fn truncated(&self, m: usize) -> Self {
        Self {
            ordinates: self.ordinates[..m.min(self.len())].to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_list() {
        let z = ZetaZeroList::bundled(128);
        assert_eq!(z.len(), 100);
        let g1 = parse_real("14.1347251417346937904572519836", 128).unwrap();
        assert_eq!(z.ordinates()[0], g1);
        assert!(z.ordinates()[99] > 236);
    }

    #[test]
    fn sanity_gates() {
        assert!(ZetaZeroList::parse("# c\n13.9\n", 64).is_err());
        assert!(ZetaZeroList::parse("21.0\n14.1\n", 64).is_err());
        assert!(matches!(ZetaZeroList::parse("14.2\nabc\n", 64), Err(Error::Parse { line: 2, .. })));
        assert!(ZetaZeroList::parse("", 64).unwrap().is_empty());
    }
}
