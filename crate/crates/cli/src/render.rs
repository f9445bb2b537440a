//! Deterministic plain-text rendering of results.

use rankrev::verify::{AxiomReport, Witness};
use rankrev::{EpistemicInput, Preference, Proposition, RankedModel, Universe};

pub fn prop(u: &Universe, p: &Proposition) -> String {
    u.format_prop(p)
}

pub fn input(u: &Universe, input: &EpistemicInput) -> String {
    format!("{} {}", input.attitude, u.format_prop(&input.proposition))
}

fn order(u: &Universe, (w1, w2): (usize, usize), p: Preference) -> String {
    let (a, b) = (u.label(w1), u.label(w2));
    match p {
        Preference::First => format!("{a} before {b}"),
        Preference::Second => format!("{b} before {a}"),
        Preference::Tie => format!("{a} tied with {b}"),
    }
}

pub fn witness(u: &Universe, w: &Witness) -> String {
    match w {
        Witness::Agm { axiom, model, a, b } => {
            let mut s = format!("{axiom} fails for {} at A = {}", model.format(u), prop(u, a));
            if let Some(b) = b {
                s.push_str(&format!(", B = {}", prop(u, b)));
            }
            s
        }
        Witness::Iteration { model, a, b, rule, .. } => {
            let direct = rankrev::revise(model, b).content();
            format!(
                "after believing {} with {rule}, revising {} by {} no longer gives {}",
                prop(u, a),
                model.format(u),
                prop(u, b),
                prop(u, &direct)
            )
        }
        Witness::Order {
            rule,
            model,
            input: i,
            worlds,
            before,
            after,
        } => format!(
            "{rule} on {} with {} turns {} into {}",
            model.format(u),
            input(u, i),
            order(u, *worlds, *before),
            order(u, *worlds, *after)
        ),
        Witness::Degree { model, a, b } => match b {
            None => format!("degree of {} in {} is not its rank", prop(u, a), model.format(u)),
            Some(b) => format!(
                "degrees of {} and {} in {} disagree with revision by their union",
                prop(u, a),
                prop(u, b),
                model.format(u)
            ),
        },
        Witness::Irreversible {
            rule,
            model,
            input: i,
            successor,
            max_strength,
        } => format!(
            "{rule} takes {} to {} on {}; no input on {} up to strength {max_strength} leads back",
            model.format(u),
            successor.format(u),
            input(u, i),
            prop(u, &i.proposition)
        ),
        Witness::OcfIrreversible {
            ocf,
            prop: p,
            alpha,
            successor,
            ..
        } => format!(
            "conditionalizing {} on {} with strength {alpha} gives {}, which no strength on {} undoes",
            ocf.format(u),
            prop(u, p),
            successor.format(u),
            prop(u, p)
        ),
        Witness::Counterexample { step } => format!("step failed: {step}"),
    }
}

/// `pass (N cases)` or `FAIL (N cases): ...`.
pub fn verdict(u: &Universe, report: &AxiomReport) -> String {
    let cases = if report.cases == 1 {
        "1 case".to_string()
    } else {
        format!("{} cases", report.cases)
    };
    match &report.witness {
        None => format!("pass ({cases})"),
        Some(w) => format!("FAIL ({cases}): {}", witness(u, w)),
    }
}

/// A ranking, tagged with the first matching name.
pub fn tagged(u: &Universe, model: &RankedModel, names: &[(&str, &RankedModel)]) -> String {
    let text = model.format(u);
    match names.iter().find(|(_, m)| *m == model) {
        Some((name, _)) => format!("{text}  = {name}"),
        None => text,
    }
}
