//! Grade CSV ingestion.

use qbank_core::assess::GradeRecord;

pub const HEADER: [&str; 3] = ["student_id", "hw_pct", "course_pct"];

/// A CSV problem at a 1-based file line (the header is line 1).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("row {row}: {message}")]
pub struct GradesError {
    pub row: u64,
    pub message: String,
}

fn err(row: u64, message: impl Into<String>) -> GradesError {
    GradesError {
        row,
        message: message.into(),
    }
}

/// Parses `student_id,hw_pct,course_pct` rows. An empty data section gives
/// an empty list.
pub fn load_grades(text: &str) -> Result<Vec<GradeRecord>, GradesError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| err(1, e.to_string()))?;
    if header.iter().ne(HEADER) {
        return Err(err(1, format!("expected header `{}`", HEADER.join(","))));
    }
    let mut out = Vec::new();
    for result in reader.records() {
        let record = result.map_err(|e| {
            let row = e.position().map_or(0, |p| p.line());
            err(row, e.to_string())
        })?;
        let row = record.position().map_or(0, |p| p.line());
        let id = &record[0];
        if id.is_empty() {
            return Err(err(row, "empty student_id"));
        }
        let number = |i: usize| {
            record[i]
                .parse::<f64>()
                .map_err(|_| err(row, format!("{} `{}` is not a number", HEADER[i], &record[i])))
        };
        let rec = GradeRecord::new(id, number(1)?, number(2)?)
            .map_err(|e| err(row, e.to_string()))?;
        out.push(rec);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valid_file() {
        let g = load_grades("student_id,hw_pct,course_pct\na,90,85\nb,70.5,60\nc, 0 ,100\n").unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g[1].hw_pct, 70.5);
        assert_eq!(g[2].course_pct, 100.0);
        assert!(load_grades("student_id,hw_pct,course_pct\n").unwrap().is_empty());
    }

    #[test]
    fn row_numbered_errors() {
        let e = load_grades("student_id,hw_pct,course_pct\na,90,85\nb,105,60\n").unwrap_err();
        assert_eq!(e.row, 3);
        let e = load_grades("student_id,hw_pct,course_pct\na,ninety,85\n").unwrap_err();
        assert_eq!(e.row, 2);
        let e = load_grades("id,hw,course\na,1,2\n").unwrap_err();
        assert_eq!(e.row, 1);
        let e = load_grades("student_id,hw_pct,course_pct\na,1\n").unwrap_err();
        assert_eq!(e.row, 2);
    }
}
