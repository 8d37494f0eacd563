use alloc::format;
use alloc::string::String;

use super::PoolDocument;
use crate::templates::{option_letter, Answer};
use crate::Result;

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            c if c.is_ascii() => out.push(c),
            c => out.push_str(&format!("&#{};", c as u32)),
        }
    }
    out.replace("^2", "&sup2;")
}

/// Multi-line text joined with `<BR>` line breaks.
fn lines(text: &str) -> String {
    text.split('\n').map(escape).collect::<alloc::vec::Vec<_>>().join("<BR>\n")
}

/// HTML pool document: the clock as page title, the pool name as a centred
/// heading, then each question with its figure and options. The correct
/// option is marked with `*`; image options are written as `<img>` tags.
pub fn emit_html(pool: &PoolDocument) -> Result<String> {
    pool.check()?;
    let mut out = format!(
        "<HTML>\n<HEAD><TITLE>{}</TITLE></HEAD>\n\n<BODY>\n\n\
         <B><SPAN style=\"font-size:16pt; font-family:arial\">\n\
         <P align=center>{}</P>\n</SPAN></B>\n\n\
         <SPAN style=\"font-size:14pt; font-family:arial\">",
        escape(&pool.clock),
        escape(&pool.pool_name)
    );
    for (i, q) in pool.questions.iter().enumerate() {
        out.push_str(&format!(
            "Title: {}<BR>\n{}. {}\n<BR><BR>\n",
            escape(&q.title),
            i + 1,
            lines(&q.stem)
        ));
        if let Some(a) = &q.asset {
            out.push_str(&format!("<img src=\"{}\">\n<BR><BR>\n", escape(a)));
        }
        if let Some(d) = &q.display {
            out.push_str(&format!("{}<BR><BR>\n", escape(d)));
        }
        match &q.answer {
            Answer::MultipleChoice(options) => {
                for (k, o) in options.iter().enumerate() {
                    let star = if o.correct { "*" } else { "" };
                    let body = match &o.image {
                        Some(img) => format!("<img src=\"{}\">", escape(img)),
                        None => escape(&o.text),
                    };
                    out.push_str(&format!("{star}{}. {body}<BR><BR>\n", option_letter(k)));
                }
            }
            Answer::FillIn { label, accepted } => {
                out.push_str(&format!(
                    "{} = [{}]<BR><BR>\n",
                    escape(label),
                    escape(&accepted.join(", "))
                ));
            }
        }
        out.push_str("<BR><BR><BR>\n\n");
    }
    out.push_str("</SPAN></BODY>\n</HTML>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::templates::{McOption, Question};
    use alloc::vec;

    fn mc(title: &str, asset: Option<&str>) -> Question {
        Question {
            title: title.into(),
            stem: "Pick one.".into(),
            display: None,
            answer: Answer::MultipleChoice(vec![McOption::new("1 < 2", false), McOption::new("x^2", true)]),
            asset: asset.map(Into::into),
        }
    }

    #[test]
    fn escapes_and_stars() {
        let p = PoolDocument {
            pool_name: "P".into(),
            questions: vec![mc("P-0001", None)],
            assets: vec![],
            clock: "now".into(),
        };
        let h = emit_html(&p).unwrap();
        assert!(h.contains("a. 1 &lt; 2<BR><BR>\n*b. x&sup2;<BR><BR>\n"));
        assert!(h.starts_with("<HTML>\n<HEAD><TITLE>now</TITLE></HEAD>\n"));
        assert!(h.ends_with("<BR><BR><BR>\n\n</SPAN></BODY>\n</HTML>\n"));
        assert_eq!(h.matches('*').count(), 1);
    }

    #[test]
    fn dangling_figure_rejected() {
        let p = PoolDocument {
            pool_name: "P".into(),
            questions: vec![mc("P-0001", Some("missing.svg"))],
            ..PoolDocument::default()
        };
        assert!(emit_html(&p).is_err());
    }
}
