//! One function per subcommand, each turning a parsed document into a
//! [`Report`].

use qlattice::lattice::close_family;
use qlattice::{
    check_closure, check_distributive, check_modular, check_modular_identity, check_orthomodular,
    context_lattice, hasse_dot, intersect_lattices, is_irreducible, Axiom, AxiomReport, Error,
    MaximalContext, Subspace, SubspaceLattice,
};
use serde_json::{json, Value};

use crate::document::OperatorSetDocument;
use crate::report::{axiom_json, axiom_line, element_line, elements_json, subspace_json, Report};
use crate::CliError;

/// Largest family `axioms` will build by closing column spaces.
pub const FAMILY_LIMIT: usize = 256;

fn contexts(doc: &OperatorSetDocument) -> Result<Vec<MaximalContext>, CliError> {
    doc.contexts()
        .map_err(|(label, e)| CliError::Invalid(format!("context {label}: {e}")))
}

fn named_subspaces(doc: &OperatorSetDocument) -> Result<Option<Vec<(String, Subspace)>>, CliError> {
    doc.subspaces()
        .map_err(|(name, e)| CliError::Invalid(format!("subspace {name}: {e}")))
}

fn push_axiom(r: &mut Report, axioms: &mut Vec<Value>, a: &AxiomReport) {
    r.line(axiom_line(a));
    r.passed &= a.holds;
    axioms.push(axiom_json(a));
}

pub fn validate(doc: &OperatorSetDocument) -> Report {
    let mut r = Report::new("validate");
    let mut verdicts = Vec::new();
    for entry in &doc.contexts {
        match doc.context(entry) {
            Ok(ctx) => {
                r.line(format!(
                    "context {}: valid, {} projectors",
                    entry.label,
                    ctx.len()
                ));
                verdicts.push(json!({
                    "label": entry.label,
                    "valid": true,
                    "projectors": ctx.len(),
                    "error": null,
                }));
            }
            Err(e) => {
                r.passed = false;
                r.line(format!("context {}: invalid: {e}", entry.label));
                verdicts.push(json!({
                    "label": entry.label,
                    "valid": false,
                    "projectors": entry.projectors.len(),
                    "error": e.to_string(),
                }));
            }
        }
    }
    r.field("ambient_dim", json!(doc.ambient_dim));
    r.field("contexts", Value::Array(verdicts));
    match doc.subspaces() {
        Ok(Some(ss)) => {
            for (name, u) in &ss {
                r.line(format!(
                    "subspace {name}: dim {} {}",
                    u.dim(),
                    u.basis_string()
                ));
            }
            let list: Vec<Value> = ss
                .iter()
                .map(|(name, u)| json!({ "name": name, "subspace": subspace_json(u) }))
                .collect();
            r.field("subspaces", Value::Array(list));
        }
        Ok(None) => {}
        Err((name, e)) => {
            r.passed = false;
            r.line(format!("subspace {name}: invalid: {e}"));
            r.field(
                "subspaces",
                json!({ "error": format!("subspace {name}: {e}") }),
            );
        }
    }
    r
}

pub fn context_lattice_report(doc: &OperatorSetDocument, label: &str) -> Result<Report, CliError> {
    let ctxs = contexts(doc)?;
    let ctx = ctxs
        .iter()
        .find(|c| c.label() == label)
        .ok_or_else(|| CliError::Usage(format!("no context labelled {label:?} in the document")))?;
    let l = context_lattice(ctx);
    let mut r = Report::new("context-lattice");
    r.line(format!("context {label}: {} elements", l.len()));
    for (k, u) in l.elements().iter().enumerate() {
        r.line(element_line(k, u));
    }
    let (meet, join) = l.closure_reports()?;
    let mut axioms = Vec::new();
    for a in [meet, join, check_distributive(&l)?, check_orthomodular(&l)?] {
        push_axiom(&mut r, &mut axioms, &a);
    }
    r.field("context", json!(label));
    r.field("elements", elements_json(l.elements()));
    r.field("axioms", Value::Array(axioms));
    r.dot = Some(hasse_dot(&l));
    Ok(r)
}

pub fn intersect(doc: &OperatorSetDocument) -> Result<Report, CliError> {
    let ctxs = contexts(doc)?;
    let lattices: Vec<SubspaceLattice> = ctxs.iter().map(context_lattice).collect();
    let l = intersect_lattices(&lattices)?;
    let labels: Vec<&str> = ctxs.iter().map(MaximalContext::label).collect();
    let trivial = l.len() == 2;
    let mut r = Report::new("intersect");
    r.line(format!(
        "intersection over contexts {}: {} elements",
        labels.join(", "),
        l.len()
    ));
    for (k, u) in l.elements().iter().enumerate() {
        r.line(element_line(k, u));
    }
    r.line(format!(
        "irreducible: {}",
        if trivial { "yes" } else { "no" }
    ));
    r.field("contexts", json!(labels));
    r.field("elements", elements_json(l.elements()));
    r.field("irreducible", json!(trivial));
    r.dot = Some(hasse_dot(&l));
    Ok(r)
}

pub fn burnside(doc: &OperatorSetDocument) -> Result<Report, CliError> {
    let ctxs = contexts(doc)?;
    let generators: Vec<_> = ctxs.iter().flat_map(MaximalContext::matrices).collect();
    let mut candidates: Vec<Subspace> = ctxs
        .iter()
        .flat_map(|c| context_lattice(c).into_elements())
        .collect();
    if let Some(ss) = named_subspaces(doc)? {
        candidates.extend(ss.into_iter().map(|(_, u)| u));
    }
    let n = doc.ambient_dim;
    let verdict = is_irreducible(n, &generators, &candidates)?;
    let span = &verdict.span;
    let rounds: Vec<String> = span.rounds().iter().map(ToString::to_string).collect();

    let mut r = Report::new("burnside");
    r.line(format!("generators: {}", generators.len()));
    r.line(format!(
        "algebra dimension: {} of {}",
        span.dimension(),
        n * n
    ));
    r.line(format!("span size by round: {}", rounds.join(", ")));
    r.line(format!(
        "irreducible: {}",
        if verdict.irreducible { "yes" } else { "no" }
    ));
    if let Some(u) = &verdict.invariant_subspace {
        r.line(format!("common invariant subspace: {}", u.basis_string()));
    }
    r.field("generators", json!(generators.len()));
    r.field("dimension", json!(span.dimension()));
    r.field("full_dimension", json!(n * n));
    r.field("rounds", json!(span.rounds()));
    r.field("irreducible", json!(verdict.irreducible));
    r.field(
        "invariant_subspace",
        verdict
            .invariant_subspace
            .as_ref()
            .map_or(Value::Null, subspace_json),
    );
    Ok(r)
}

/// `U = V` over every triple, read off the tables; the first failing triple
/// is recomputed directly.
fn modular_identity_spot_checks(l: &SubspaceLattice) -> Result<AxiomReport, Error> {
    let t = l.tables()?;
    let e = l.elements();
    let n = t.size();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let left = t.join(t.meet(i, k), t.meet(j, k));
                let right = t.meet(t.join(t.meet(i, k), j), k);
                if left != right {
                    return check_modular_identity(l, &e[i], &e[j], &e[k]);
                }
            }
        }
    }
    check_modular_identity(l, &e[0], &e[0], &e[0])
}

pub fn axioms(doc: &OperatorSetDocument) -> Result<Report, CliError> {
    let n = doc.ambient_dim;
    let (source, named) = match named_subspaces(doc)? {
        Some(ss) => ("document subspaces", ss),
        None => {
            let ctxs = contexts(doc)?;
            let mut gens = vec![Subspace::zero(n), Subspace::full(n)];
            gens.extend(
                ctxs.iter()
                    .flat_map(|c| c.projectors().iter().map(|p| p.ran())),
            );
            let family = close_family(gens, FAMILY_LIMIT)?;
            let named = family.into_iter().map(|u| (String::new(), u)).collect();
            ("closure of all column spaces", named)
        }
    };
    let mut names: Vec<String> = Vec::new();
    let mut family: Vec<Subspace> = Vec::new();
    for (name, u) in named {
        if !family.contains(&u) {
            names.push(name);
            family.push(u);
        }
    }

    let mut r = Report::new("axioms");
    r.line(format!("family: {} subspaces ({source})", family.len()));
    let listed: Vec<Value> = names
        .iter()
        .zip(&family)
        .enumerate()
        .map(|(k, (name, u))| {
            let label = if name.is_empty() {
                String::new()
            } else {
                format!(" {name}")
            };
            r.line(format!(
                "  [{k}]{label} dim {} {}",
                u.dim(),
                u.basis_string()
            ));
            json!({ "name": name, "subspace": subspace_json(u) })
        })
        .collect();
    r.field("family", Value::Array(listed));

    let mut axioms = Vec::new();
    let mut skipped = Vec::new();
    let (meet, join) = check_closure(&family)?;
    let closed = meet.holds && join.holds;
    push_axiom(&mut r, &mut axioms, &meet);
    push_axiom(&mut r, &mut axioms, &join);

    let lattice = if closed {
        match SubspaceLattice::new(n, family.clone()) {
            Ok(l) => Some(l),
            Err(e @ Error::MissingBound(_)) => {
                r.passed = false;
                r.line(format!("axiom checks skipped: {e}"));
                None
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        r.line("axiom checks skipped: family is not closed under meet and join");
        None
    };

    match &lattice {
        Some(l) => {
            for a in [
                check_distributive(l)?,
                check_modular(l)?,
                modular_identity_spot_checks(l)?,
            ] {
                push_axiom(&mut r, &mut axioms, &a);
            }
            if l.complement_map().is_some() {
                push_axiom(&mut r, &mut axioms, &check_orthomodular(l)?);
            } else {
                r.line("orthomodular: skipped, family is not closed under orthocomplement");
                skipped.push(Axiom::Orthomodular.name());
            }
            r.dot = Some(hasse_dot(l));
        }
        None => {
            skipped.extend(
                [
                    Axiom::Distributive,
                    Axiom::ModularLaw,
                    Axiom::ModularIdentity,
                    Axiom::Orthomodular,
                ]
                .map(Axiom::name),
            );
        }
    }
    r.field("axioms", Value::Array(axioms));
    r.field("skipped", json!(skipped));
    Ok(r)
}
