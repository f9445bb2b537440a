//! Model files: a universe, named propositions and named states.
//!
//! ```text
//! # two atoms, all four valuations
//! atoms A B
//! worlds auto
//! prop A = A & (B | ~B)
//! rpm r1 = [aB] [AB Ab ab]
//! ocf k1 = { AB:1 Ab:1 aB:0 ab:2 }
//! ```
//!
//! Instead of `worlds auto`, worlds can be listed one per line, either with
//! a valuation (`world AB { A=true B=true }`) or, without atoms, as bare
//! labels (`world w1`). World declarations come first. A proposition may
//! refer to atoms and to propositions declared above it.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rankrev::{Ocf, Proposition, RankedModel, Universe};

use crate::error::Diagnostic;
use crate::expr::{is_ident_char, parse_expression_at, Pos, Scope};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum State {
    Ranked(RankedModel),
    Ocf(Ocf),
}

impl State {
    /// The ranking itself, or the one an OCF induces.
    pub fn ranking(&self) -> RankedModel {
        match self {
            State::Ranked(m) => m.clone(),
            State::Ocf(k) => rankrev::rpm_from_ocf(k),
        }
    }

    pub fn format(&self, universe: &Universe) -> String {
        match self {
            State::Ranked(m) => m.format(universe),
            State::Ocf(k) => k.format(universe),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelFile {
    pub universe: Universe,
    /// Worlds were generated from the atoms rather than listed.
    pub auto: bool,
    pub props: Vec<(String, Proposition)>,
    pub states: Vec<(String, State)>,
}

impl ModelFile {
    pub fn prop(&self, name: &str) -> Option<Proposition> {
        self.props.iter().find(|(n, _)| n == name).map(|(_, p)| *p)
    }

    pub fn state(&self, name: &str) -> Option<&State> {
        self.states.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    pub fn prop_map(&self) -> BTreeMap<String, Proposition> {
        self.props.iter().cloned().collect()
    }
}

impl fmt::Display for ModelFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u = &self.universe;
        if !u.atoms().is_empty() {
            writeln!(f, "atoms {}", u.atoms().join(" "))?;
        }
        if self.auto {
            writeln!(f, "worlds auto")?;
        } else {
            for w in 0..u.len() {
                match u.valuation(w) {
                    Some(values) => {
                        let assignments: Vec<String> = u
                            .atoms()
                            .iter()
                            .zip(values)
                            .map(|(a, v)| format!("{a}={v}"))
                            .collect();
                        writeln!(f, "world {} {{ {} }}", u.label(w), assignments.join(" "))?;
                    }
                    None => writeln!(f, "world {}", u.label(w))?,
                }
            }
        }
        for (name, prop) in &self.props {
            writeln!(f, "prop {name} = {}", u.format_prop(prop))?;
        }
        for (name, state) in &self.states {
            let keyword = match state {
                State::Ranked(_) => "rpm",
                State::Ocf(_) => "ocf",
            };
            writeln!(f, "{keyword} {name} = {}", state.format(u))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Tok {
    text: String,
    pos: Pos,
}

fn lex(text: &str, origin: Pos) -> Result<Vec<Tok>, Diagnostic> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let pos = Pos {
            line: origin.line,
            column: origin.column + i,
        };
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if is_ident_char(c) {
            let start = i;
            while i < chars.len() && is_ident_char(chars[i]) {
                i += 1;
            }
            toks.push(Tok {
                text: chars[start..i].iter().collect(),
                pos,
            });
        } else if "[]{}=:".contains(c) {
            toks.push(Tok {
                text: c.to_string(),
                pos,
            });
            i += 1;
        } else {
            return Err(Diagnostic::at(pos, format!("unexpected character `{c}`")));
        }
    }
    Ok(toks)
}

struct Cursor {
    toks: Vec<Tok>,
    next: usize,
    end: Pos,
}

impl Cursor {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.next)
    }

    fn here(&self) -> Pos {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn take(&mut self, what: &str) -> Result<Tok, Diagnostic> {
        let tok = self.toks.get(self.next).cloned().ok_or_else(|| {
            Diagnostic::at(self.end, format!("expected {what}, found end of line"))
        })?;
        self.next += 1;
        Ok(tok)
    }

    fn ident(&mut self, what: &str) -> Result<Tok, Diagnostic> {
        let tok = self.take(what)?;
        if !tok.text.chars().all(is_ident_char) {
            return Err(Diagnostic::at(
                tok.pos,
                format!("expected {what}, found `{}`", tok.text),
            ));
        }
        Ok(tok)
    }

    fn punct(&mut self, p: &str) -> Result<Tok, Diagnostic> {
        let tok = self.take(&format!("`{p}`"))?;
        if tok.text != p {
            return Err(Diagnostic::at(
                tok.pos,
                format!("expected `{p}`, found `{}`", tok.text),
            ));
        }
        Ok(tok)
    }

    fn at_punct(&self, p: &str) -> bool {
        self.peek().is_some_and(|t| t.text == p)
    }

    fn finish(&self) -> Result<(), Diagnostic> {
        match self.peek() {
            Some(t) => Err(Diagnostic::at(t.pos, format!("unexpected `{}`", t.text))),
            None => Ok(()),
        }
    }
}

struct DeclaredWorld {
    label: String,
    valuation: Option<Vec<bool>>,
    pos: Pos,
}

#[derive(Default)]
struct Loader {
    atoms: Option<(Vec<String>, Pos)>,
    auto: Option<Pos>,
    worlds: Vec<DeclaredWorld>,
    universe: Option<Universe>,
    props: Vec<(String, Proposition)>,
    states: Vec<(String, State)>,
}

/// Parses a model file's text.
pub fn parse_model(text: &str) -> Result<ModelFile, Diagnostic> {
    let mut loader = Loader::default();
    let mut last = Pos { line: 1, column: 1 };
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let code = raw.split('#').next().unwrap_or("");
        let indent = code.len() - code.trim_start().len();
        let body = code.trim();
        last = Pos {
            line,
            column: code.trim_end().chars().count() + 1,
        };
        if body.is_empty() {
            continue;
        }
        let origin = Pos {
            line,
            column: code[..indent].chars().count() + 1,
        };
        loader.line(body, origin)?;
    }
    let universe = loader.universe(last)?;
    Ok(ModelFile {
        universe,
        auto: loader.auto.is_some(),
        props: loader.props,
        states: loader.states,
    })
}

fn shift(origin: Pos, text: &str, byte: usize) -> Pos {
    Pos {
        line: origin.line,
        column: origin.column + text[..byte].chars().count(),
    }
}

impl Loader {
    fn line(&mut self, body: &str, origin: Pos) -> Result<(), Diagnostic> {
        let keyword = body.split_whitespace().next().expect("non-empty");
        let rest_at = keyword.len();
        match keyword {
            "atoms" | "worlds" | "world" => {
                if self.universe.is_some() {
                    return Err(Diagnostic::at(
                        origin,
                        "worlds must be declared before propositions and states",
                    ));
                }
                let mut cur = Cursor {
                    toks: lex(&body[rest_at..], shift(origin, body, rest_at))?,
                    next: 0,
                    end: shift(origin, body, body.len()),
                };
                match keyword {
                    "atoms" => self.atoms_line(&mut cur, origin),
                    "worlds" => self.worlds_line(&mut cur, origin),
                    _ => self.world_line(&mut cur, origin),
                }
            }
            "prop" => self.prop_line(body, origin),
            "rpm" | "ocf" => self.state_line(keyword, body, origin),
            other => Err(Diagnostic::at(
                origin,
                format!("unknown declaration `{other}`"),
            )),
        }
    }

    fn atoms_line(&mut self, cur: &mut Cursor, origin: Pos) -> Result<(), Diagnostic> {
        if self.atoms.is_some() {
            return Err(Diagnostic::at(origin, "atoms are already declared"));
        }
        if !self.worlds.is_empty() {
            return Err(Diagnostic::at(
                origin,
                "atoms must be declared before worlds",
            ));
        }
        let mut atoms: Vec<String> = Vec::new();
        while cur.peek().is_some() {
            let tok = cur.ident("an atom name")?;
            if atoms.contains(&tok.text) {
                return Err(Diagnostic::at(
                    tok.pos,
                    format!("duplicate atom `{}`", tok.text),
                ));
            }
            if tok.text == "true"
                || tok.text == "false"
                || !tok.text.starts_with(|c: char| c.is_ascii_alphabetic())
            {
                return Err(Diagnostic::at(
                    tok.pos,
                    format!("invalid atom name `{}`", tok.text),
                ));
            }
            atoms.push(tok.text);
        }
        if atoms.is_empty() {
            return Err(Diagnostic::at(cur.end, "expected at least one atom"));
        }
        self.atoms = Some((atoms, origin));
        Ok(())
    }

    fn worlds_line(&mut self, cur: &mut Cursor, origin: Pos) -> Result<(), Diagnostic> {
        let tok = cur.ident("`auto`")?;
        if tok.text != "auto" {
            return Err(Diagnostic::at(
                tok.pos,
                format!("expected `auto`, found `{}`", tok.text),
            ));
        }
        cur.finish()?;
        if self.atoms.is_none() {
            return Err(Diagnostic::at(origin, "`worlds auto` needs atoms"));
        }
        if self.auto.is_some() || !self.worlds.is_empty() {
            return Err(Diagnostic::at(origin, "worlds are already declared"));
        }
        self.auto = Some(origin);
        Ok(())
    }

    fn world_line(&mut self, cur: &mut Cursor, origin: Pos) -> Result<(), Diagnostic> {
        if self.auto.is_some() {
            return Err(Diagnostic::at(
                origin,
                "worlds are already generated by `worlds auto`",
            ));
        }
        let label = cur.ident("a world label")?;
        if self.worlds.iter().any(|w| w.label == label.text) {
            return Err(Diagnostic::at(
                label.pos,
                format!("duplicate world label `{}`", label.text),
            ));
        }
        let valuation = match &self.atoms {
            None => {
                if cur.at_punct("{") {
                    return Err(Diagnostic::at(cur.here(), "valuations need atoms"));
                }
                None
            }
            Some((atoms, _)) => {
                let open = cur.punct("{")?;
                let mut values: Vec<Option<bool>> = vec![None; atoms.len()];
                while !cur.at_punct("}") {
                    let atom = cur.ident("an atom name")?;
                    let Some(a) = atoms.iter().position(|x| *x == atom.text) else {
                        return Err(Diagnostic::at(
                            atom.pos,
                            format!("unknown atom `{}`", atom.text),
                        ));
                    };
                    cur.punct("=")?;
                    let value = cur.ident("`true` or `false`")?;
                    let v = match value.text.as_str() {
                        "true" => true,
                        "false" => false,
                        other => {
                            return Err(Diagnostic::at(
                                value.pos,
                                format!("expected `true` or `false`, found `{other}`"),
                            ))
                        }
                    };
                    if values[a].replace(v).is_some() {
                        return Err(Diagnostic::at(
                            atom.pos,
                            format!("atom `{}` is assigned twice", atom.text),
                        ));
                    }
                }
                cur.punct("}")?;
                if let Some(a) = values.iter().position(Option::is_none) {
                    return Err(Diagnostic::at(
                        open.pos,
                        format!(
                            "world `{}` gives no value to atom `{}`",
                            label.text, atoms[a]
                        ),
                    ));
                }
                let valuation: Vec<bool> =
                    values.into_iter().map(|v| v.expect("checked")).collect();
                if let Some(other) = self
                    .worlds
                    .iter()
                    .find(|w| w.valuation.as_ref() == Some(&valuation))
                {
                    return Err(Diagnostic::at(
                        label.pos,
                        format!(
                            "worlds `{}` and `{}` share the same valuation",
                            other.label, label.text
                        ),
                    ));
                }
                Some(valuation)
            }
        };
        cur.finish()?;
        self.worlds.push(DeclaredWorld {
            label: label.text,
            valuation,
            pos: label.pos,
        });
        Ok(())
    }

    fn universe(&mut self, pos: Pos) -> Result<Universe, Diagnostic> {
        if let Some(u) = &self.universe {
            return Ok(u.clone());
        }
        let built = match (&self.atoms, self.auto) {
            (Some((atoms, at)), Some(_)) => {
                Universe::from_atoms(atoms.clone()).map_err(|e| Diagnostic::at(*at, e.to_string()))
            }
            (_, _) if self.worlds.is_empty() => Err(Diagnostic::at(pos, "no worlds declared")),
            (atoms, _) => {
                let first = self.worlds[0].pos;
                let result = match atoms {
                    Some((atoms, _)) => Universe::with_valuations(
                        atoms.clone(),
                        self.worlds
                            .iter()
                            .map(|w| (w.label.clone(), w.valuation.clone().expect("valued"))),
                    ),
                    None => Universe::new(self.worlds.iter().map(|w| w.label.clone())),
                };
                result.map_err(|e| Diagnostic::at(first, e.to_string()))
            }
        }?;
        self.universe = Some(built.clone());
        Ok(built)
    }

    /// Splits `NAME = rest`, returning the name token and where `rest` starts.
    fn header<'a>(
        &self,
        keyword: &str,
        body: &'a str,
        origin: Pos,
    ) -> Result<(Tok, &'a str, Pos), Diagnostic> {
        let Some(eq) = body.find('=') else {
            return Err(Diagnostic::at(
                shift(origin, body, body.len()),
                format!("expected `{keyword} NAME = ...`"),
            ));
        };
        let start = keyword.len();
        let mut cur = Cursor {
            toks: lex(&body[start..eq], shift(origin, body, start))?,
            next: 0,
            end: shift(origin, body, eq),
        };
        let name = cur.ident("a name")?;
        cur.finish()?;
        Ok((name, &body[eq + 1..], shift(origin, body, eq + 1)))
    }

    fn prop_line(&mut self, body: &str, origin: Pos) -> Result<(), Diagnostic> {
        let universe = self.universe(origin)?;
        let (name, rest, at) = self.header("prop", body, origin)?;
        if name.text == "true" || name.text == "false" {
            return Err(Diagnostic::at(
                name.pos,
                format!("`{}` is reserved", name.text),
            ));
        }
        if self.props.iter().any(|(n, _)| *n == name.text) {
            return Err(Diagnostic::at(
                name.pos,
                format!("proposition `{}` is already declared", name.text),
            ));
        }
        let props: BTreeMap<String, Proposition> = self.props.iter().cloned().collect();
        let scope = Scope {
            universe: &universe,
            props: &props,
        };
        let prop = parse_expression_at(rest, at)?.denote(&scope)?;
        self.props.push((name.text, prop));
        Ok(())
    }

    fn state_line(&mut self, keyword: &str, body: &str, origin: Pos) -> Result<(), Diagnostic> {
        let universe = self.universe(origin)?;
        let (name, rest, at) = self.header(keyword, body, origin)?;
        if self.states.iter().any(|(n, _)| *n == name.text) {
            return Err(Diagnostic::at(
                name.pos,
                format!("state `{}` is already declared", name.text),
            ));
        }
        let mut cur = Cursor {
            toks: lex(rest, at)?,
            next: 0,
            end: shift(at, rest, rest.len()),
        };
        let state = if keyword == "rpm" {
            State::Ranked(parse_rpm(&mut cur, &universe)?)
        } else {
            State::Ocf(parse_ocf(&mut cur, &universe)?)
        };
        self.states.push((name.text, state));
        Ok(())
    }
}

fn world_index(universe: &Universe, tok: &Tok) -> Result<usize, Diagnostic> {
    universe
        .index_of(&tok.text)
        .map_err(|_| Diagnostic::at(tok.pos, format!("unknown world `{}`", tok.text)))
}

fn parse_rpm(cur: &mut Cursor, universe: &Universe) -> Result<RankedModel, Diagnostic> {
    let start = cur.here();
    let width = universe.len();
    let mut seen = HashSet::new();
    let mut blocks = Vec::new();
    while cur.peek().is_some() {
        let open = cur.punct("[")?;
        let mut members = Vec::new();
        while !cur.at_punct("]") {
            let tok = cur.ident("a world label or `]`")?;
            let w = world_index(universe, &tok)?;
            if !seen.insert(w) {
                return Err(Diagnostic::at(
                    tok.pos,
                    format!("not a partition: world `{}` appears twice", tok.text),
                ));
            }
            members.push(w);
        }
        cur.punct("]")?;
        if members.is_empty() {
            return Err(Diagnostic::at(open.pos, "not a partition: empty block"));
        }
        blocks.push(Proposition::from_indices(width, members).expect("in range"));
    }
    if let Some(missing) = (0..width).find(|w| !seen.contains(w)) {
        return Err(Diagnostic::at(
            start,
            format!(
                "not a partition: world `{}` is in no block",
                universe.label(missing)
            ),
        ));
    }
    RankedModel::new(blocks).map_err(|e| Diagnostic::at(start, e.to_string()))
}

fn parse_ocf(cur: &mut Cursor, universe: &Universe) -> Result<Ocf, Diagnostic> {
    let open = cur.punct("{")?;
    let mut values: Vec<Option<u64>> = vec![None; universe.len()];
    while !cur.at_punct("}") {
        let tok = cur.ident("a world label or `}`")?;
        let w = world_index(universe, &tok)?;
        cur.punct(":")?;
        let num = cur.ident("a rank")?;
        let k: u64 = num.text.parse().map_err(|_| {
            Diagnostic::at(num.pos, format!("expected a rank, found `{}`", num.text))
        })?;
        if values[w].replace(k).is_some() {
            return Err(Diagnostic::at(
                tok.pos,
                format!("world `{}` has two ranks", tok.text),
            ));
        }
    }
    cur.punct("}")?;
    cur.finish()?;
    if let Some(w) = values.iter().position(Option::is_none) {
        return Err(Diagnostic::at(
            open.pos,
            format!("world `{}` has no rank", universe.label(w)),
        ));
    }
    Ocf::new(values.into_iter().map(|v| v.expect("checked")).collect())
        .map_err(|e| Diagnostic::at(open.pos, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIXTURE: &str = "\
# the standard fixture
atoms A B
worlds auto
prop A = A & (B | ~B)
rpm r1 = [aB] [AB Ab ab]
ocf k1 = { AB:1 Ab:1 aB:0 ab:2 }
";

    fn err(text: &str) -> Diagnostic {
        parse_model(text).unwrap_err()
    }

    #[test]
    fn loads_the_fixture() {
        let m = parse_model(FIXTURE).unwrap();
        assert_eq!(m.universe.labels(), ["AB", "Ab", "aB", "ab"]);
        assert_eq!(m.universe.format_prop(&m.prop("A").unwrap()), "{AB Ab}");
        assert_eq!(
            m.state("r1").unwrap().format(&m.universe),
            "[aB] [AB Ab ab]"
        );
        assert_eq!(
            m.state("k1").unwrap().format(&m.universe),
            "{AB:1 Ab:1 aB:0 ab:2}"
        );
    }

    #[test]
    fn printing_round_trips() {
        let m = parse_model(FIXTURE).unwrap();
        assert_eq!(parse_model(&m.to_string()).unwrap(), m);
        let explicit = "atoms p\nworld yes { p=true }\nworld no { p=false }\nprop P = {yes}\nrpm r = [no] [yes]\n";
        let m = parse_model(explicit).unwrap();
        assert_eq!(m.to_string(), explicit);
        assert_eq!(parse_model(&explicit.replace("{yes}", "p")).unwrap(), m);
        let bare = "world w1\nworld w2\nworld w3\nprop X = {w1 w3}\nrpm r = [w2] [w1 w3]\n";
        assert_eq!(parse_model(bare).unwrap().to_string(), bare);
    }

    #[test]
    fn props_see_earlier_props() {
        let m = parse_model("atoms A B\nworlds auto\nprop X = A & B\nprop Y = ~X\n").unwrap();
        assert_eq!(m.universe.format_prop(&m.prop("Y").unwrap()), "{Ab aB ab}");
    }

    #[test]
    fn located_diagnostics() {
        let e = err("atoms A B\nworlds auto\nrpm r = [AB Ab] [aB]\n");
        assert_eq!((e.line, e.column), (3, 9));
        assert!(e.message.starts_with("not a partition"), "{e}");
        let e = err("atoms A B\nworlds auto\nrpm r = [AB Ab] [aB AB ab]\n");
        assert_eq!((e.line, e.column), (3, 21));
        assert!(e.message.contains("appears twice"));
        let e = err("atoms A B\nworlds auto\nocf k = { AB:1 Ab:1 aB:2 ab:1 }\n");
        assert_eq!((e.line, e.column), (3, 9));
        assert!(e.message.starts_with("not normalized"), "{e}");
        let e = err("atoms A B\nworlds auto\nprop X = A & C\n");
        assert_eq!((e.line, e.column), (3, 14));
        let e = err("atoms A B\n  worlds auto\nbogus\n");
        assert_eq!((e.line, e.column), (3, 1));
        let e = err("atoms A\nworlds auto\nprop X = A\nworld w\n");
        assert!(e.message.contains("before propositions"));
        let e = err("atoms A\nworld x { A=true }\nworld y { A=true }\n");
        assert!(e.message.contains("same valuation"));
        let e = err("atoms A\nworld x { }\n");
        assert!(e.message.contains("no value to atom `A`"));
        let e = err("prop X = true\n");
        assert!(e.message.contains("no worlds"));
        let e = err("atoms A\nworlds auto\nprop X = A\nprop X = ~A\n");
        assert!(e.message.contains("already declared"));
    }
}
