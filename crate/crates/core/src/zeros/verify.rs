use rug::Float;

use super::table::{ComplexZero, ZeroTable};
use crate::scalar::Field;

/// Relative deviation accepted against 14 printed digits.
pub const FIXTURE_TOLERANCE: f64 = 5e-14;

#[derive(Clone, Debug, PartialEq)]
pub struct ZeroComparison {
    pub index: usize,
    /// Index of the fixture row it was compared with.
    pub fixture_index: usize,
    pub rel_re: f64,
    pub rel_im: f64,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportStatus {
    Pass,
    Fail,
    NoOverlap,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FixtureReport {
    pub comparisons: Vec<ZeroComparison>,
    /// Computed indices whose fixture row was found by nearest real part.
    pub misaligned: Vec<usize>,
    pub status: ReportStatus,
}

fn relative(a: &Float, b: &Float) -> f64 {
    let prec = a.prec().max(b.prec());
    let d = Float::with_val(prec, a - b);
    if d.is_zero() {
        return 0.0;
    }
    10f64.powf(d.log10_abs() - b.log10_abs())
}

fn nearest<'a>(fixture: &'a ZeroTable, z: &ComplexZero) -> Option<&'a ComplexZero> {
    fixture.zeros().iter().min_by(|a, b| {
        let da = relative(&z.re, &a.re);
        let db = relative(&z.re, &b.re);
        da.total_cmp(&db)
    })
}

/// Compares each computed zero with the fixture row of the same index,
/// falling back to the row with the nearest real part when the indexed row
/// is more than 1% away.
pub fn verify_against_fixture(computed: &ZeroTable, fixture: &ZeroTable) -> FixtureReport {
    let mut comparisons = Vec::new();
    let mut misaligned = Vec::new();
    for z in computed.zeros() {
        let matched = match fixture.by_index(z.index) {
            Some(f) if relative(&z.re, &f.re) < 0.01 => Some(f),
            _ => {
                let f = nearest(fixture, z);
                if f.is_some() {
                    misaligned.push(z.index);
                }
                f
            }
        };
        if let Some(f) = matched {
            let rel_re = relative(&z.re, &f.re);
            let rel_im = relative(&z.im, &f.im);
            comparisons.push(ZeroComparison {
                index: z.index,
                fixture_index: f.index,
                rel_re,
                rel_im,
                pass: rel_re <= FIXTURE_TOLERANCE && rel_im <= FIXTURE_TOLERANCE,
            });
        }
    }
    let status = if comparisons.is_empty() {
        ReportStatus::NoOverlap
    } else if comparisons.iter().all(|c| c.pass) && misaligned.is_empty() {
        ReportStatus::Pass
    } else {
        ReportStatus::Fail
    };
    FixtureReport {
        comparisons,
        misaligned,
        status,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeros::Provenance;

    #[test]
    fn fixture_against_itself() {
        let f = ZeroTable::reference(64);
        let r = verify_against_fixture(&f.truncated(10), &f);
        assert_eq!(r.status, ReportStatus::Pass);
        assert_eq!(r.comparisons.len(), 10);
    }

    #[test]
    fn empty_overlap() {
        let f = ZeroTable::reference(64);
        let r = verify_against_fixture(&ZeroTable::empty(Provenance::Computed), &f);
        assert_eq!(r.status, ReportStatus::NoOverlap);
        let r = verify_against_fixture(&f.truncated(2), &ZeroTable::empty(Provenance::Fixture));
        assert_eq!(r.status, ReportStatus::NoOverlap);
    }

    #[test]
    fn misaligned_index_is_matched_by_real_part() {
        let f = ZeroTable::reference(64);
        let mut z = f.by_index(3).unwrap().clone();
        z.index = 7;
        let computed = ZeroTable::new(vec![z], Provenance::Computed).unwrap();
        let r = verify_against_fixture(&computed, &f);
        assert_eq!(r.misaligned, [7]);
        assert_eq!(r.comparisons[0].fixture_index, 3);
        assert_eq!(r.status, ReportStatus::Fail);
    }

    #[test]
    fn detects_deviation() {
        let f = ZeroTable::reference(64);
        let mut z = f.by_index(1).unwrap().clone();
        z.im += 1e-9;
        let computed = ZeroTable::new(vec![z], Provenance::Computed).unwrap();
        let r = verify_against_fixture(&computed, &f);
        assert_eq!(r.status, ReportStatus::Fail);
        assert!(r.comparisons[0].rel_im > 1e-12);
    }
}
