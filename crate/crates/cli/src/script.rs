//! Epistemic inputs as text: `believe A`, `disbelieve A -> B strength 2`,
//! `suspend {AB ab}`.

use rankrev::{Attitude, Proposition};

use crate::error::Diagnostic;
use crate::expr::{parse_expression_at, Pos, Scope};
use crate::model::ModelFile;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Directive {
    pub attitude: Attitude,
    /// The proposition as written.
    pub text: String,
    pub proposition: Proposition,
    pub strength: Option<u64>,
}

/// Parses one directive. A proposition that is exactly the name of a
/// declared proposition denotes it; anything else is an expression.
pub fn parse_directive(
    text: &str,
    origin: Pos,
    model: &ModelFile,
) -> Result<Directive, Diagnostic> {
    let trimmed = text.trim_start();
    let lead = text.len() - trimmed.len();
    let at = |byte: usize| Pos {
        line: origin.line,
        column: origin.column + text[..byte].chars().count(),
    };
    let keyword = trimmed.split_whitespace().next().unwrap_or("");
    let attitude = match keyword {
        "believe" => Attitude::Believe,
        "disbelieve" => Attitude::Disbelieve,
        "suspend" => Attitude::Suspend,
        "" => {
            return Err(Diagnostic::at(
                at(lead),
                "expected believe, disbelieve or suspend",
            ))
        }
        other => {
            return Err(Diagnostic::at(
                at(lead),
                format!("expected believe, disbelieve or suspend, found `{other}`"),
            ))
        }
    };
    let body_start = lead + keyword.len();
    let mut body = &text[body_start..];
    let mut strength = None;
    let words: Vec<&str> = body.split_whitespace().collect();
    if words.len() >= 2 && words[words.len() - 2] == "strength" {
        let value = words[words.len() - 1];
        let cut = body.rfind("strength").expect("present");
        let n: u64 = value.parse().map_err(|_| {
            Diagnostic::at(
                at(body_start + body.rfind(value).expect("present")),
                format!("strength must be a natural number, found `{value}`"),
            )
        })?;
        if attitude == Attitude::Suspend {
            return Err(Diagnostic::at(
                at(body_start + cut),
                "suspend takes no strength",
            ));
        }
        strength = Some(n);
        body = &body[..cut];
    }
    let expr_text = body.trim();
    if expr_text.is_empty() {
        return Err(Diagnostic::at(
            at(body_start + body.len()),
            "expected a proposition",
        ));
    }
    let expr_at = at(body_start + (body.len() - body.trim_start().len()));
    let proposition = match model.prop(expr_text) {
        Some(p) => p,
        None => {
            let props = model.prop_map();
            let scope = Scope {
                universe: &model.universe,
                props: &props,
            };
            parse_expression_at(expr_text, expr_at)?.denote(&scope)?
        }
    };
    if !proposition.is_contingent() {
        return Err(Diagnostic::at(
            expr_at,
            format!("`{expr_text}` is not contingent; inputs must be neither contradictory nor tautological"),
        ));
    }
    Ok(Directive {
        attitude,
        text: expr_text.to_string(),
        proposition,
        strength,
    })
}

/// One directive per non-blank line; `#` starts a comment.
pub fn parse_script(text: &str, model: &ModelFile) -> Result<Vec<Directive>, Diagnostic> {
    let mut steps = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let code = raw.split('#').next().unwrap_or("");
        if code.trim().is_empty() {
            continue;
        }
        steps.push(parse_directive(
            code,
            Pos {
                line: i + 1,
                column: 1,
            },
            model,
        )?);
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::parse_model;

    fn fixture() -> ModelFile {
        parse_model("atoms A B\nworlds auto\nprop A = A & (B | ~B)\nprop X = {aB}\n").unwrap()
    }

    fn at1() -> Pos {
        Pos { line: 1, column: 1 }
    }

    #[test]
    fn directives() {
        let m = fixture();
        let d = parse_directive("believe A", at1(), &m).unwrap();
        assert_eq!((d.attitude, d.strength), (Attitude::Believe, None));
        assert_eq!(m.universe.format_prop(&d.proposition), "{AB Ab}");
        let d = parse_directive("  disbelieve A | B strength 2", at1(), &m).unwrap();
        assert_eq!(d.text, "A | B");
        assert_eq!(d.strength, Some(2));
        let d = parse_directive("suspend X", at1(), &m).unwrap();
        assert_eq!(m.universe.format_prop(&d.proposition), "{aB}");
    }

    #[test]
    fn bad_directives() {
        let m = fixture();
        let e = parse_directive("accept A", at1(), &m).unwrap_err();
        assert_eq!(e.column, 1);
        let e = parse_directive("believe A | ~A", at1(), &m).unwrap_err();
        assert_eq!(e.column, 9);
        assert!(e.message.contains("not contingent"));
        let e = parse_directive("suspend A strength 1", at1(), &m).unwrap_err();
        assert!(e.message.contains("no strength"));
        let e = parse_directive("believe A strength x", at1(), &m).unwrap_err();
        assert_eq!(e.column, 20);
        let e = parse_directive("believe", at1(), &m).unwrap_err();
        assert!(e.message.contains("expected a proposition"));
    }

    #[test]
    fn scripts_skip_comments_and_report_lines() {
        let m = fixture();
        let steps = parse_script("# start\nbelieve A\n\ndisbelieve B # why not\n", &m).unwrap();
        assert_eq!(steps.len(), 2);
        let e = parse_script("believe A\nbelieve Q\n", &m).unwrap_err();
        assert_eq!((e.line, e.column), (2, 9));
    }
}
