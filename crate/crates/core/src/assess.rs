//! Least-squares comparison of homework and course grades.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct GradeRecord {
    pub student_id: String,
    pub hw_pct: f64,
    pub course_pct: f64,
}

impl GradeRecord {
    /// Both percentages must be finite and within `[0, 100]`.
    pub fn new(student_id: impl Into<String>, hw_pct: f64, course_pct: f64) -> Result<Self> {
        for (name, v) in [("hw_pct", hw_pct), ("course_pct", course_pct)] {
            if !(0.0..=100.0).contains(&v) {
                return Err(Error::invalid(format!("{name} {v} is outside [0, 100]")));
            }
        }
        Ok(GradeRecord {
            student_id: student_id.into(),
            hw_pct,
            course_pct,
        })
    }
}

/// Fit of `course_pct = slope * hw_pct + intercept`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegressionFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub n: usize,
}

impl RegressionFit {
    pub fn predict(&self, hw_pct: f64) -> f64 {
        self.slope * hw_pct + self.intercept
    }
}

/// Ordinary least squares with centred sums. R² is `1 - SSres/SStot`,
/// taken as 0 when the course grades are constant, and clamped to `[0, 1]`.
pub fn ols_fit(records: &[GradeRecord]) -> Result<RegressionFit> {
    let n = records.len();
    if n < 2 {
        return Err(Error::DegenerateSample("regression needs at least two records"));
    }
    let nf = n as f64;
    let mean_x = records.iter().map(|r| r.hw_pct).sum::<f64>() / nf;
    let mean_y = records.iter().map(|r| r.course_pct).sum::<f64>() / nf;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for r in records {
        let dx = r.hw_pct - mean_x;
        let dy = r.course_pct - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if sxx == 0.0 {
        return Err(Error::DegenerateSample("homework grades have zero variance"));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let r_squared = if syy == 0.0 {
        0.0
    } else {
        let ss_res: f64 = records
            .iter()
            .map(|r| {
                let e = r.course_pct - (slope * r.hw_pct + intercept);
                e * e
            })
            .sum();
        (1.0 - ss_res / syy).clamp(0.0, 1.0)
    };
    Ok(RegressionFit {
        slope,
        intercept,
        r_squared,
        n,
    })
}

/// `(fit on all records, fit without the listed students)`. Every listed id
/// must be present.
pub fn refit_excluding(
    records: &[GradeRecord],
    excluded_ids: &[&str],
) -> Result<(RegressionFit, RegressionFit)> {
    for id in excluded_ids {
        if !records.iter().any(|r| r.student_id == *id) {
            return Err(Error::invalid(format!("no record for student `{id}`")));
        }
    }
    let full = ols_fit(records)?;
    let kept: Vec<GradeRecord> = records
        .iter()
        .filter(|r| !excluded_ids.contains(&r.student_id.as_str()))
        .cloned()
        .collect();
    Ok((full, ols_fit(&kept)?))
}

/// Records strictly below `course = slope * hw + intercept`.
pub fn floor_violations(records: &[GradeRecord], slope: f64, intercept: f64) -> Vec<GradeRecord> {
    records
        .iter()
        .filter(|r| r.course_pct < slope * r.hw_pct + intercept)
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn recs(points: &[(f64, f64)]) -> Vec<GradeRecord> {
        points
            .iter()
            .enumerate()
            .map(|(i, &(x, y))| GradeRecord::new(format!("s{i}"), x, y).unwrap())
            .collect()
    }

    #[test]
    fn fit_examples() {
        let f = ols_fit(&recs(&[(0.0, 1.0), (1.0, 3.0), (2.0, 5.0), (3.0, 7.0), (4.0, 9.0)])).unwrap();
        assert!((f.slope - 2.0).abs() < 1e-12 && (f.intercept - 1.0).abs() < 1e-12);
        assert_eq!(f.r_squared, 1.0);
        let f = ols_fit(&recs(&[(1.0, 5.0), (2.0, 5.0), (3.0, 5.0)])).unwrap();
        assert_eq!((f.slope, f.r_squared), (0.0, 0.0));
        let f = ols_fit(&recs(&[(0.0, 0.0), (1.0, 1.0), (2.0, 1.0)])).unwrap();
        assert!((f.slope - 0.5).abs() < 1e-12);
        assert!((f.r_squared - 0.75).abs() < 1e-12);
        assert!(ols_fit(&recs(&[(1.0, 2.0)])).is_err());
        assert!(ols_fit(&recs(&[(1.0, 2.0), (1.0, 3.0)])).is_err());
    }

    #[test]
    fn record_ranges() {
        assert!(GradeRecord::new("a", 105.0, 50.0).is_err());
        assert!(GradeRecord::new("a", 50.0, -1.0).is_err());
        assert!(GradeRecord::new("a", f64::NAN, 50.0).is_err());
        assert!(GradeRecord::new("a", 0.0, 100.0).is_ok());
    }

    #[test]
    fn exclusions() {
        let r = recs(&[(10.0, 20.0), (20.0, 30.0), (30.0, 40.0), (40.0, 10.0)]);
        let (full, none) = refit_excluding(&r, &[]).unwrap();
        assert_eq!(full, none);
        let (full, excl) = refit_excluding(&r, &["s3"]).unwrap();
        assert_eq!(excl.r_squared, 1.0);
        assert!(full.r_squared < 1.0);
        assert_eq!(excl.n, 3);
        assert!(refit_excluding(&r, &["s0", "s1", "s2"]).is_err());
        assert!(refit_excluding(&r, &["nobody"]).is_err());
    }

    #[test]
    fn violations() {
        let r = recs(&[(50.0, 60.0), (60.0, 59.0), (70.0, 70.0)]);
        // line y = x: (60, 59) is one below, (70, 70) is on the line
        let v = floor_violations(&r, 1.0, 0.0);
        assert_eq!(v, vec![r[1].clone()]);
        assert!(floor_violations(&r, 0.0, f64::NEG_INFINITY).is_empty());
        assert_eq!(floor_violations(&r, 0.0, f64::INFINITY).len(), 3);
    }
}
