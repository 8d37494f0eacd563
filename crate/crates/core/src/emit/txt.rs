use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{emit_error, PoolDocument};
use crate::templates::{Answer, Question};
use crate::{Error, ParseError, Result};

const TYPE_LINE: &str = "Type: FMB";
const TITLE_PREFIX: &str = "Title: ";
const ANSWER_OPEN: &str = " = [";

fn printable(s: &str) -> bool {
    s.bytes().all(|b| (0x20..0x7f).contains(&b))
}

/// Splits `label = [a, b, c]`; `None` if the line is not an answer line.
fn split_answer_line(line: &str) -> Option<(&str, Vec<&str>)> {
    let inner = line.strip_suffix(']')?;
    let at = inner.find(ANSWER_OPEN)?;
    let label = &inner[..at];
    let list = &inner[at + ANSWER_OPEN.len()..];
    if label.is_empty() || list.is_empty() {
        return None;
    }
    Some((label, list.split(", ").collect()))
}

fn validate(q: &Question) -> Result<(&str, &[String])> {
    let fail = |why: &str| Err(emit_error(q, why));
    let Answer::FillIn { label, accepted } = &q.answer else {
        return fail("multiple-choice questions cannot be written as FMB text");
    };
    if q.asset.is_some() {
        return fail("FMB text cannot carry a figure");
    }
    if !printable(&q.title) || q.title.is_empty() {
        return fail("title must be nonempty printable ASCII");
    }
    if q.stem.is_empty() || q.stem.split('\n').any(|l| l.is_empty() || !printable(l)) {
        return fail("stem lines must be nonempty printable ASCII");
    }
    if let Some(d) = &q.display {
        if d.is_empty() || !printable(d) {
            return fail("display line must be nonempty printable ASCII");
        }
        if split_answer_line(d).is_some() {
            return fail("display line would read as an answer line");
        }
    }
    if !printable(label) || label.contains(ANSWER_OPEN) {
        return fail("answer label must be printable ASCII without ` = [`");
    }
    for a in accepted {
        if a.is_empty() || !printable(a) || a.contains(',') || a.contains(']') {
            return fail("accepted answers must be nonempty printable ASCII without `,` or `]`");
        }
    }
    Ok((label, accepted))
}

/// FMB text: one block per question, blocks separated by a blank line.
/// Only fill-in-the-blank questions without figures can be written.
pub fn emit_txt(pool: &PoolDocument) -> Result<String> {
    let mut titles = alloc::collections::BTreeSet::new();
    let mut out = String::new();
    for (i, q) in pool.questions.iter().enumerate() {
        q.check()?;
        let (label, accepted) = validate(q)?;
        if !titles.insert(q.title.as_str()) {
            return Err(emit_error(q, "duplicate title in pool"));
        }
        if i > 0 {
            out.push('\n');
        }
        out.push_str(TYPE_LINE);
        out.push('\n');
        out.push_str(TITLE_PREFIX);
        out.push_str(&q.title);
        out.push('\n');
        out.push_str(&format!("{}. {}\n\n", i + 1, q.stem));
        if let Some(d) = &q.display {
            out.push_str(d);
            out.push_str("\n\n");
        }
        out.push_str(&format!("{label}{ANSWER_OPEN}{}]\n", accepted.join(", ")));
    }
    Ok(out)
}

struct Lines<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn error(&self, expected: &str) -> Error {
        let found = self
            .lines
            .get(self.pos)
            .map_or_else(|| "end of input".to_string(), |l| l.to_string());
        ParseError {
            line: self.pos + 1,
            expected: expected.into(),
            found,
        }
        .into()
    }

    fn peek(&self) -> Option<&'a str> {
        self.lines.get(self.pos).copied()
    }

    fn next(&mut self, expected: &str) -> Result<&'a str> {
        let l = self.peek().ok_or_else(|| self.error(expected))?;
        self.pos += 1;
        Ok(l)
    }

    fn blank(&mut self) -> Result<()> {
        match self.peek() {
            Some("") => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error("blank line")),
        }
    }
}

/// Strict parser for the dialect written by [`emit_txt`]. The result has an
/// empty pool name and clock and no assets.
pub fn parse_txt(text: &str) -> Result<PoolDocument> {
    let mut pool = PoolDocument::default();
    if text.is_empty() {
        return Ok(pool);
    }
    let Some(body) = text.strip_suffix('\n') else {
        let line = text.split('\n').count();
        return Err(ParseError {
            line,
            expected: "newline at end of input".into(),
            found: text.rsplit('\n').next().unwrap_or_default().into(),
        }
        .into());
    };
    let mut it = Lines {
        lines: body.split('\n').collect(),
        pos: 0,
    };
    loop {
        let n = pool.questions.len() + 1;
        if it.peek() != Some(TYPE_LINE) {
            return Err(it.error("`Type: FMB`"));
        }
        it.pos += 1;
        let title = it
            .next("`Title: `")?
            .strip_prefix(TITLE_PREFIX)
            .filter(|t| !t.is_empty())
            .ok_or_else(|| {
                it.pos -= 1;
                it.error("`Title: <title>`")
            })?;
        let number = format!("{n}. ");
        let first = it
            .next("numbered stem")?
            .strip_prefix(number.as_str())
            .filter(|s| !s.is_empty())
            .ok_or_else(|| {
                it.pos -= 1;
                it.error(&format!("stem starting with `{number}`"))
            })?;
        let mut stem = String::from(first);
        loop {
            match it.peek() {
                Some("") => break,
                Some(l) => {
                    stem.push('\n');
                    stem.push_str(l);
                    it.pos += 1;
                }
                None => return Err(it.error("blank line after stem")),
            }
        }
        it.blank()?;
        let mut display = None;
        let line = it.next("answer line `label = [...]`")?;
        let answer = match split_answer_line(line) {
            Some(a) => a,
            None => {
                display = Some(String::from(line));
                it.blank()?;
                let line = it.next("answer line `label = [...]`")?;
                split_answer_line(line).ok_or_else(|| {
                    it.pos -= 1;
                    it.error("answer line `label = [...]`")
                })?
            }
        };
        let (label, accepted) = answer;
        pool.questions.push(Question {
            title: title.into(),
            stem,
            display,
            answer: Answer::FillIn {
                label: label.into(),
                accepted: accepted.into_iter().map(String::from).collect(),
            },
            asset: None,
        });
        if it.peek().is_none() {
            return Ok(pool);
        }
        it.blank()?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::templates::McOption;
    use alloc::vec;

    fn fitb(title: &str, stem: &str, display: Option<&str>, label: &str, acc: &[&str]) -> Question {
        Question {
            title: title.into(),
            stem: stem.into(),
            display: display.map(Into::into),
            answer: Answer::FillIn {
                label: label.into(),
                accepted: acc.iter().map(|s| s.to_string()).collect(),
            },
            asset: None,
        }
    }

    fn pool(questions: Vec<Question>) -> PoolDocument {
        PoolDocument {
            questions,
            ..PoolDocument::default()
        }
    }

    const TWO: &str = "Type: FMB\nTitle: A-0001\n1. Solve.\nSecond line.\n\n2x/3 = 3/4\n\nx = [9/8]\n\nType: FMB\nTitle: A-0002\n2. No display.\n\ny = [1, 1.]\n";

    #[test]
    fn emits_and_parses() {
        let p = pool(vec![
            fitb("A-0001", "Solve.\nSecond line.", Some("2x/3 = 3/4"), "x", &["9/8"]),
            fitb("A-0002", "No display.", None, "y", &["1", "1."]),
        ]);
        let t = emit_txt(&p).unwrap();
        assert_eq!(t, TWO);
        assert_eq!(parse_txt(&t).unwrap(), p);
        assert_eq!(emit_txt(&pool(vec![])).unwrap(), "");
        assert_eq!(parse_txt("").unwrap(), pool(vec![]));
    }

    #[test]
    fn rejects_unrepresentable() {
        let mc = Question {
            answer: Answer::MultipleChoice(vec![McOption::new("1", true), McOption::new("2", false)]),
            ..fitb("M", "s", None, "x", &["1"])
        };
        assert!(emit_txt(&pool(vec![mc])).is_err());
        for q in [
            fitb("A", "s", None, "x", &["1,5"]),
            fitb("A", "s", None, "x", &["a]"]),
            fitb("A", "s", None, "x = [", &["1"]),
            fitb("A", "s", Some("y = [2]"), "x", &["1"]),
            fitb("A", "s\n\nt", None, "x", &["1"]),
            fitb("A", "caf\u{e9}", None, "x", &["1"]),
            fitb("A", "s", None, "x", &[""]),
        ] {
            assert!(emit_txt(&pool(vec![q])).is_err());
        }
        let dup = pool(vec![fitb("A", "s", None, "x", &["1"]), fitb("A", "t", None, "x", &["1"])]);
        assert!(emit_txt(&dup).is_err());
    }

    #[test]
    fn positional_errors() {
        let err = |t: &str| match parse_txt(t) {
            Err(Error::Parse(p)) => p,
            other => panic!("{other:?}"),
        };
        assert_eq!(err("Title: A\n1. s\n\nx = [1]\n").line, 1);
        assert_eq!(err("Type: FMB\nTitle: A\n2. s\n\nx = [1]\n").line, 3);
        assert_eq!(err("Type: FMB\nTitle: A\n1. s\n\nx = [1]\nType: FMB\n").line, 6);
        assert_eq!(err("Type: FMB\nTitle: A\n1. s\n\n3x = 4\nx = [1]\n").line, 6);
        assert_eq!(err("Type: FMB\nTitle: A\n1. s\n\n3x = 4\n\nnot an answer\n").line, 7);
        assert_eq!(err("Type: FMB\nTitle: A\n1. s\n\nx = [1]").line, 5);
        assert_eq!(err("Type: FMB\nTitle: A\n1. s\n").line, 4);
        assert_eq!(err("Type: FMB\n").line, 2);
    }
}
