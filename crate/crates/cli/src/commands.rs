use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use rankrev::verify::{
    check_agm, check_degree_conditions, check_iteration_axiom, check_ocf_reversibility,
    check_order_preservation, check_reversibility, counterexample_verify, enumerate_ranked_models,
    representation_check, Axiom, AxiomReport, CounterexampleFixture, Limits, RevisionTable,
    MAX_ENUMERATION_BOUND,
};
use rankrev::{
    apply_rule, apply_strength, spohn_conditionalize, Attitude, EpistemicInput, FlipRule,
    Lexicographic, Natural, Ocf, Proposition, RankedModel, RevisionRule, SpohnRule, TotalContent,
    Universe,
};

use crate::error::{CliError, Diagnostic};
use crate::expr::{parse_expression_at, Pos, Scope};
use crate::model::{parse_model, ModelFile, State};
use crate::render;
use crate::script::{parse_directive, parse_script, Directive};

/// Exit status: everything checked holds.
pub const EXIT_OK: i32 = 0;
/// Exit status: a check found a violation.
pub const EXIT_VIOLATION: i32 = 1;
/// Exit status: bad input or usage.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rankrev",
    version,
    about = "Belief revision over ranked possible worlds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum RuleSpec {
    Lex,
    Natural,
    Flip,
    Spohn(u64),
}

impl FromStr for RuleSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lex" => Ok(RuleSpec::Lex),
            "natural" => Ok(RuleSpec::Natural),
            "flip" => Ok(RuleSpec::Flip),
            _ => match s.strip_prefix("spohn:").map(str::parse::<u64>) {
                Some(Ok(n)) if n >= 1 => Ok(RuleSpec::Spohn(n)),
                Some(_) => Err("spohn strength must be a whole number of at least 1".into()),
                None => Err("expected lex, natural, flip or spohn:N".into()),
            },
        }
    }
}

impl RuleSpec {
    fn build(&self) -> Box<dyn RevisionRule> {
        match self {
            RuleSpec::Lex => Box::new(Lexicographic),
            RuleSpec::Natural => Box::new(Natural),
            RuleSpec::Flip => Box::new(FlipRule),
            RuleSpec::Spohn(n) => Box::new(SpohnRule::new(*n).expect("at least 1")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Check {
    Agm,
    Degrees,
    B9,
    B10,
    Order,
    R,
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "agm" => Check::Agm,
            "degrees" => Check::Degrees,
            "b9" => Check::B9,
            "b10" => Check::B10,
            "order" => Check::Order,
            "r" => Check::R,
            other => {
                return Err(format!(
                    "unknown check `{other}`; expected agm, degrees, b9, b10, order or r"
                ))
            }
        })
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply one input to a state.
    Revise {
        #[arg(long)]
        model: String,
        #[arg(long)]
        state: String,
        /// lex, natural, flip or spohn:N
        #[arg(long)]
        rule: Option<RuleSpec>,
        /// e.g. "believe A" or "disbelieve A | B strength 2"
        input: String,
    },
    /// Apply a sequence of inputs to a state.
    Iterate {
        #[arg(long)]
        model: String,
        #[arg(long)]
        state: String,
        #[arg(long)]
        rule: Option<RuleSpec>,
        /// File with one input per line.
        #[arg(long)]
        script: Option<String>,
        /// Inputs given directly, applied after the script.
        inputs: Vec<String>,
    },
    /// Check axioms exhaustively on the states of a model file.
    Check {
        #[arg(long)]
        model: String,
        /// Only this state; all states by default.
        #[arg(long)]
        state: Option<String>,
        #[arg(long, default_value = "lex")]
        rule: RuleSpec,
        /// Comma-separated subset of agm,degrees,b9,b10,order,r.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "agm,degrees,b9,b10,order,r"
        )]
        axioms: Vec<Check>,
        /// Largest absolute strength tried when looking for a reversing input.
        #[arg(long, default_value_t = 3)]
        max_strength: u64,
        /// Largest universe checked exhaustively.
        #[arg(long, default_value_t = rankrev::verify::DEFAULT_CHECK_BOUND)]
        bound: usize,
    },
    /// Machine-check the irreversibility counterexample.
    Counterexample {
        #[arg(long, default_value_t = 3)]
        max_strength: u64,
        /// Sizes of the four parts, e.g. 2,1,1,1; two atoms by default.
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<usize>>,
    },
    /// Count (or list) the ranked models of a universe of N worlds.
    Enumerate {
        #[arg(long)]
        worlds: usize,
        #[arg(long)]
        list: bool,
    },
    /// Recover the ranked model behind a revision table.
    Represent {
        #[arg(long)]
        model: String,
        /// Build the table from this state.
        #[arg(long, conflicts_with = "table", required_unless_present = "table")]
        state: Option<String>,
        /// Lines of the form `<input> => <content>`.
        #[arg(long)]
        table: Option<String>,
    },
    /// Ranks and degrees of disbelief of a state.
    Degrees {
        #[arg(long)]
        model: String,
        #[arg(long)]
        state: String,
    },
}

/// What a command run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `args` (program name first) without touching the
/// process's own streams.
pub fn execute<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut out = String::new();
    match run(cli.command, &mut out) {
        Ok(code) => Output {
            code,
            stdout: out,
            stderr: String::new(),
        },
        Err(e) => Output {
            code: EXIT_INPUT,
            stdout: out,
            stderr: format!("error: {e}\n"),
        },
    }
}

fn run(command: Command, out: &mut String) -> Result<i32, CliError> {
    match command {
        Command::Revise {
            model,
            state,
            rule,
            input,
        } => {
            let file = load(&model)?;
            let start = lookup(&file, &state)?;
            let step = parse_directive(&input, Pos { line: 1, column: 1 }, &file)
                .map_err(|d| CliError::parse("input", d))?;
            walk(&file, &state, start, rule, &[step], out)
        }
        Command::Iterate {
            model,
            state,
            rule,
            script,
            inputs,
        } => {
            let file = load(&model)?;
            let start = lookup(&file, &state)?;
            let mut steps = Vec::new();
            if let Some(path) = script {
                let text = read(&path)?;
                steps = parse_script(&text, &file).map_err(|d| CliError::parse(&path, d))?;
            }
            for (i, text) in inputs.iter().enumerate() {
                let step = parse_directive(text, Pos { line: 1, column: 1 }, &file)
                    .map_err(|d| CliError::parse(&format!("input {}", i + 1), d))?;
                steps.push(step);
            }
            if steps.is_empty() {
                return Err(CliError::Usage("no inputs given".into()));
            }
            walk(&file, &state, start, rule, &steps, out)
        }
        Command::Check {
            model,
            state,
            rule,
            axioms,
            max_strength,
            bound,
        } => {
            let file = load(&model)?;
            let limits = Limits {
                max_worlds: bound,
                max_strength,
            };
            check(&file, state.as_deref(), &rule, &axioms, &limits, out)
        }
        Command::Counterexample {
            max_strength,
            parts,
        } => counterexample(parts, max_strength, out),
        Command::Enumerate { worlds, list } => enumerate(worlds, list, out),
        Command::Represent {
            model,
            state,
            table,
        } => {
            let file = load(&model)?;
            represent(&file, state.as_deref(), table.as_deref(), out)
        }
        Command::Degrees { model, state } => {
            let file = load(&model)?;
            let start = lookup(&file, &state)?;
            degrees(&file, &state, start, out)
        }
    }
}

fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}

fn load(path: &str) -> Result<ModelFile, CliError> {
    parse_model(&read(path)?).map_err(|d| CliError::parse(path, d))
}

fn lookup<'a>(file: &'a ModelFile, name: &str) -> Result<&'a State, CliError> {
    file.state(name)
        .ok_or_else(|| CliError::Usage(format!("no state named `{name}` in the model file")))
}

fn walk(
    file: &ModelFile,
    name: &str,
    start: &State,
    rule: Option<RuleSpec>,
    steps: &[Directive],
    out: &mut String,
) -> Result<i32, CliError> {
    let u = &file.universe;
    writeln!(out, "state: {name} = {}", start.format(u)).unwrap();
    let mut current = start.clone();
    match start {
        State::Ranked(_) => {
            let spec = rule.unwrap_or(RuleSpec::Lex);
            let rule = spec.build();
            writeln!(out, "rule: {}", rule.name()).unwrap();
            for (i, step) in steps.iter().enumerate() {
                let State::Ranked(model) = &current else {
                    unreachable!()
                };
                let next = match step.strength {
                    None => apply_rule(
                        rule.as_ref(),
                        model,
                        &EpistemicInput::new(step.proposition, step.attitude),
                    )?,
                    Some(n) => apply_strength(
                        rule.as_ref(),
                        model,
                        &step.proposition,
                        step.attitude.signed(n),
                    )?
                    .ok_or_else(|| {
                        CliError::Usage(format!("rule `{}` takes no strengths", rule.name()))
                    })?,
                };
                writeln!(out, "{}. {}: {}", i + 1, describe(u, step), next.format(u)).unwrap();
                current = State::Ranked(next);
            }
        }
        State::Ocf(_) => {
            let default = match rule {
                None => 1,
                Some(RuleSpec::Spohn(n)) => n,
                Some(_) => {
                    return Err(CliError::Usage(
                        "OCF states are revised by conditionalization; use --rule spohn:N".into(),
                    ))
                }
            };
            writeln!(out, "rule: conditionalization").unwrap();
            for (i, step) in steps.iter().enumerate() {
                let State::Ocf(ocf) = &current else {
                    unreachable!()
                };
                let strength = match step.attitude {
                    Attitude::Suspend => 0,
                    a => a.signed(step.strength.unwrap_or(default)),
                };
                let next = spohn_conditionalize(ocf, &step.proposition, strength)?;
                writeln!(
                    out,
                    "{}. {} (strength {strength}): {}",
                    i + 1,
                    describe(u, step),
                    next.format(u)
                )
                .unwrap();
                current = State::Ocf(next);
            }
            writeln!(out, "ranking: {}", current.ranking().format(u)).unwrap();
        }
    }
    let beliefs = current.ranking().most_believable();
    writeln!(out, "beliefs: {}", u.format_prop(&beliefs)).unwrap();
    Ok(EXIT_OK)
}

fn describe(u: &Universe, step: &Directive) -> String {
    let set = u.format_prop(&step.proposition);
    if step.text == set {
        format!("{} {}", step.attitude, step.text)
    } else {
        format!("{} {} = {}", step.attitude, step.text, set)
    }
}

/// Inputs to try: the file's contingent named propositions in declaration
/// order, or every contingent proposition when none are named.
fn candidate_inputs(file: &ModelFile) -> Vec<Proposition> {
    let named: Vec<Proposition> = file
        .props
        .iter()
        .map(|(_, p)| *p)
        .filter(Proposition::is_contingent)
        .collect();
    if named.is_empty() {
        Proposition::all(file.universe.len())
            .filter(Proposition::is_contingent)
            .collect()
    } else {
        named
    }
}

fn check(
    file: &ModelFile,
    only: Option<&str>,
    spec: &RuleSpec,
    checks: &[Check],
    limits: &Limits,
    out: &mut String,
) -> Result<i32, CliError> {
    let u = &file.universe;
    let states: Vec<(&str, &State)> = match only {
        Some(name) => vec![(name, lookup(file, name)?)],
        None => file.states.iter().map(|(n, s)| (n.as_str(), s)).collect(),
    };
    if states.is_empty() {
        return Err(CliError::Usage("the model file declares no states".into()));
    }
    limits.check_width(u.len())?;
    let rule = spec.build();
    let inputs = candidate_inputs(file);
    let mut failed = false;
    for (name, state) in states {
        writeln!(out, "{name} = {}", state.format(u)).unwrap();
        let model = state.ranking();
        for check in checks {
            let (label, report) = match check {
                Check::Agm => ("AGM".to_string(), check_agm(&model, limits)?),
                Check::Degrees => (
                    "degrees".to_string(),
                    check_degree_conditions(&model, limits)?,
                ),
                Check::B9 => (
                    format!("B9 [{}]", rule.name()),
                    check_iteration_axiom(rule.as_ref(), Axiom::B9, &model, limits)?,
                ),
                Check::B10 => (
                    format!("B10 [{}]", rule.name()),
                    check_iteration_axiom(rule.as_ref(), Axiom::B10, &model, limits)?,
                ),
                Check::Order => {
                    let mut report = AxiomReport::new(Axiom::OrderPreservation);
                    for prop in &inputs {
                        let input = EpistemicInput::believe(*prop);
                        report =
                            report.merge(check_order_preservation(rule.as_ref(), &model, &input)?);
                    }
                    (format!("order [{}]", rule.name()), report)
                }
                Check::R => match state {
                    State::Ranked(_) => {
                        let mut report = AxiomReport::new(Axiom::Reversibility);
                        for prop in &inputs {
                            for attitude in Attitude::ALL {
                                let input = EpistemicInput::new(*prop, attitude);
                                let r = check_reversibility(rule.as_ref(), &model, &input, limits)?;
                                report = report.merge(r.report);
                            }
                        }
                        (format!("R [{}]", rule.name()), report)
                    }
                    State::Ocf(ocf) => (
                        "R [conditionalization]".to_string(),
                        ocf_reversibility(ocf, &inputs, limits.max_strength)?,
                    ),
                },
            };
            failed |= !report.passed();
            writeln!(out, "  {label}: {}", render::verdict(u, &report)).unwrap();
        }
    }
    writeln!(out, "result: {}", if failed { "violation" } else { "pass" }).unwrap();
    Ok(if failed { EXIT_VIOLATION } else { EXIT_OK })
}

fn ocf_reversibility(
    ocf: &Ocf,
    inputs: &[Proposition],
    max_alpha: u64,
) -> Result<AxiomReport, CliError> {
    let mut report = AxiomReport::new(Axiom::Reversibility);
    let max = max_alpha as i64;
    for prop in inputs {
        for alpha in -max..=max {
            report = report.merge(check_ocf_reversibility(ocf, prop, alpha, None)?.report);
        }
    }
    Ok(report)
}

fn counterexample(
    parts: Option<Vec<usize>>,
    max_strength: u64,
    out: &mut String,
) -> Result<i32, CliError> {
    let fixture = match parts {
        None => CounterexampleFixture::standard(),
        Some(sizes) => {
            let sizes: [usize; 4] = sizes
                .try_into()
                .map_err(|_| CliError::Usage("--parts takes exactly four sizes".into()))?;
            if sizes.iter().sum::<usize>() > MAX_ENUMERATION_BOUND {
                return Err(CliError::Usage(format!(
                    "the parts add up to more than {MAX_ENUMERATION_BOUND} worlds"
                )));
            }
            CounterexampleFixture::generalized(sizes)?
        }
    };
    let report = counterexample_verify(&fixture, max_strength)?;
    let u = &fixture.universe;
    let names = [
        ("r1", &fixture.r1),
        ("r2", &fixture.r2),
        ("r3", &fixture.r3),
    ];
    writeln!(out, "worlds: {}", u.labels().join(" ")).unwrap();
    writeln!(out, "A = {}", u.format_prop(&fixture.a)).unwrap();
    for (name, model) in names {
        writeln!(out, "{name} = {}", model.format(u)).unwrap();
    }
    let groups: [(&str, &str, &[RankedModel]); 5] = [
        ("r1", "believe", &report.believe_from_r1),
        ("r2", "believe", &report.believe_from_r2),
        ("r3", "believe", &report.believe_from_r3),
        ("r3", "suspend", &report.suspend_from_r3),
        ("r3", "disbelieve", &report.disbelieve_from_r3),
    ];
    for (from, attitude, successors) in groups {
        writeln!(
            out,
            "successors of {from} under {attitude} A obeying B9 and B10 ({}):",
            successors.len()
        )
        .unwrap();
        for m in successors {
            writeln!(out, "  {}", render::tagged(u, m, &names)).unwrap();
        }
    }
    for (name, (da, dna)) in ["r1", "r2"].iter().zip(report.degrees) {
        writeln!(out, "degrees in {name}: d(A) = {da}, d(~A) = {dna}").unwrap();
    }
    writeln!(out, "conditionalizing r3 on A:").unwrap();
    for (beta, m) in &report.spohn_from_r3 {
        writeln!(
            out,
            "  strength {beta:>2}: {}",
            render::tagged(u, m, &names)
        )
        .unwrap();
    }
    let failed = report
        .report
        .witness
        .as_ref()
        .map(|w| render::witness(u, w));
    for (i, step) in STEPS.iter().enumerate() {
        let holds = failed.as_deref() != Some(&format!("step failed: {step}"));
        writeln!(
            out,
            "step {}: {step}: {}",
            i + 1,
            if holds { "holds" } else { "FAILS" }
        )
        .unwrap();
    }
    if report.report.passed() {
        writeln!(
            out,
            "result: a rule obeying B9 and B10 cannot return r3 to both r1 and r2, so it is not reversible"
        )
        .unwrap();
        Ok(EXIT_OK)
    } else {
        writeln!(out, "result: the argument does not go through").unwrap();
        Ok(EXIT_VIOLATION)
    }
}

const STEPS: [&str; 5] = [
    "believing A forces both r1 and r2 to r3",
    "believing or suspending on A cannot return r3 to r1 or r2",
    "disbelieving A can return r3 to r1 and to r2",
    "r1 and r2 give A degree 1 and not-A degree 0",
    "no strength returns r3 to both r1 and r2",
];

fn enumerate(worlds: usize, list: bool, out: &mut String) -> Result<i32, CliError> {
    if worlds == 0 || worlds > MAX_ENUMERATION_BOUND {
        return Err(CliError::Usage(format!(
            "--worlds must be between 1 and {MAX_ENUMERATION_BOUND}"
        )));
    }
    let models = enumerate_ranked_models(worlds, MAX_ENUMERATION_BOUND)?;
    if list {
        let u = Universe::new((1..=worlds).map(|i| format!("w{i}")))?;
        for m in &models {
            writeln!(out, "{}", m.format(&u)).unwrap();
        }
    }
    writeln!(out, "{}", models.len()).unwrap();
    Ok(EXIT_OK)
}

fn represent(
    file: &ModelFile,
    state: Option<&str>,
    table: Option<&str>,
    out: &mut String,
) -> Result<i32, CliError> {
    let u = &file.universe;
    let limits = Limits::default();
    let table = match (state, table) {
        (Some(name), _) => {
            let model = lookup(file, name)?.ranking();
            writeln!(out, "state: {name} = {}", lookup(file, name)?.format(u)).unwrap();
            RevisionTable::from_model(&model, &limits)?
        }
        (None, Some(path)) => read_table(file, path)?,
        (None, None) => return Err(CliError::Usage("give --state or --table".into())),
    };
    writeln!(
        out,
        "table: {} entries over {} worlds",
        (1u64 << u.len()) - 1,
        u.len()
    )
    .unwrap();
    match representation_check(&table)? {
        Some(model) => {
            writeln!(out, "model: {}", model.format(u)).unwrap();
            Ok(EXIT_OK)
        }
        None => {
            writeln!(out, "model: none; no ranked model reproduces this table").unwrap();
            Ok(EXIT_VIOLATION)
        }
    }
}

fn read_table(file: &ModelFile, path: &str) -> Result<RevisionTable, CliError> {
    let text = read(path)?;
    let u = &file.universe;
    let props = file.prop_map();
    let scope = Scope {
        universe: u,
        props: &props,
    };
    let mut table = RevisionTable::new(u.len(), &Limits::default())?;
    let mut seen = vec![false; 1 << u.len()];
    let fail = |d: Diagnostic| CliError::parse(path, d);
    let mut last_line = 1;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let code = raw.split('#').next().unwrap_or("");
        if code.trim().is_empty() {
            continue;
        }
        let Some(arrow) = code.find("=>") else {
            return Err(fail(Diagnostic::at(
                Pos { line, column: 1 },
                "expected `<input> => <content>`",
            )));
        };
        let column = |byte: usize| code[..byte].chars().count() + 1;
        let input = parse_expression_at(&code[..arrow], Pos { line, column: 1 })
            .and_then(|e| e.denote(&scope))
            .map_err(fail)?;
        let content = parse_expression_at(
            &code[arrow + 2..],
            Pos {
                line,
                column: column(arrow + 2),
            },
        )
        .and_then(|e| e.denote(&scope))
        .map_err(fail)?;
        let at = Pos { line, column: 1 };
        if input.is_empty() {
            return Err(fail(Diagnostic::at(
                at,
                "the input of an entry must not be empty",
            )));
        }
        if std::mem::replace(&mut seen[input.bits() as usize], true) {
            return Err(fail(Diagnostic::at(
                at,
                format!("second entry for {}", u.format_prop(&input)),
            )));
        }
        table.insert(input, TotalContent::new(content))?;
    }
    if let Some(missing) = Proposition::all(u.len())
        .skip(1)
        .find(|p| !seen[p.bits() as usize])
    {
        return Err(fail(Diagnostic::at(
            Pos {
                line: last_line,
                column: 1,
            },
            format!("no entry for {}", u.format_prop(&missing)),
        )));
    }
    Ok(table)
}

fn degrees(file: &ModelFile, name: &str, state: &State, out: &mut String) -> Result<i32, CliError> {
    let u = &file.universe;
    writeln!(out, "state: {name} = {}", state.format(u)).unwrap();
    let model = state.ranking();
    for w in 0..u.len() {
        match state {
            State::Ranked(m) => writeln!(out, "rank {} = {}", u.label(w), m.rank_of(w)?).unwrap(),
            State::Ocf(k) => writeln!(out, "kappa {} = {}", u.label(w), k.kappa(w)).unwrap(),
        }
    }
    for (pname, prop) in &file.props {
        if prop.is_empty() || prop.is_full() {
            continue;
        }
        let neg = prop.complement();
        match state {
            State::Ranked(m) => writeln!(
                out,
                "d({pname}) = {}, d(~{pname}) = {}",
                m.disbelief_degree(prop)?,
                m.disbelief_degree(&neg)?
            )
            .unwrap(),
            State::Ocf(k) => writeln!(
                out,
                "kappa({pname}) = {}, kappa(~{pname}) = {}",
                k.kappa_degree(prop)?,
                k.kappa_degree(&neg)?
            )
            .unwrap(),
        }
    }
    let report = check_degree_conditions(&model, &Limits::default())?;
    writeln!(out, "degree conditions: {}", render::verdict(u, &report)).unwrap();
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_specs() {
        assert_eq!("lex".parse::<RuleSpec>(), Ok(RuleSpec::Lex));
        assert_eq!("spohn:2".parse::<RuleSpec>(), Ok(RuleSpec::Spohn(2)));
        assert!("spohn:0".parse::<RuleSpec>().is_err());
        assert!("spohn".parse::<RuleSpec>().is_err());
        assert_eq!(RuleSpec::Spohn(3).build().name(), "spohn:3");
    }

    #[test]
    fn usage_errors_exit_with_two() {
        assert_eq!(execute(["rankrev", "frobnicate"]).code, EXIT_INPUT);
        assert_eq!(
            execute(["rankrev", "enumerate", "--worlds", "9"]).code,
            EXIT_INPUT
        );
        assert_eq!(
            execute(["rankrev", "check", "--model", "/nonexistent"]).code,
            EXIT_INPUT
        );
        assert_eq!(execute(["rankrev", "--help"]).code, EXIT_OK);
    }

    #[test]
    fn enumerate_counts() {
        let out = execute(["rankrev", "enumerate", "--worlds", "4"]);
        assert_eq!((out.code, out.stdout.as_str()), (EXIT_OK, "75\n"));
        let out = execute(["rankrev", "enumerate", "--worlds", "2", "--list"]);
        assert_eq!(out.stdout, "[w1 w2]\n[w1] [w2]\n[w2] [w1]\n3\n");
    }
}
