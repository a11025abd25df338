//! Built-in, self-checking walk through the spin-1/2 example: the six
//! projectors, their column-space family, the failing distributive law, the
//! per-axis context lattices and their trivial intersection.

use qlattice::lattice::evaluate_triple;
use qlattice::spin_half::{self, Axis};
use qlattice::{
    algebra_closure, check_distributive, check_orthomodular, context_lattice, intersect_lattices,
    is_irreducible, validate_context, validate_projector, Axiom, Error, ExactVector,
    GaussianRational, Projector, Subspace, SubspaceLattice,
};
use serde_json::{json, Value};

use crate::report::{axiom_line, Report};

/// How each member of the column-space family is written with a free
/// parameter `a`, in the family's order.
const FAMILY_NAMES: [&str; 8] = [
    "{0}",
    "{[a; 0]}",
    "{[0; a]}",
    "{[a; a]}",
    "{[a; -a]}",
    "{[ia; a]}",
    "{[a; ia]}",
    "C^2",
];

enum Stop {
    Failed(String),
    Library(Error),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        Stop::Library(e)
    }
}

struct Demo {
    report: Report,
    checks: Vec<Value>,
}

impl Demo {
    fn line(&mut self, s: impl AsRef<str>) {
        self.report.line(s);
    }

    fn check(&mut self, name: &str, ok: bool) -> Result<(), Stop> {
        self.line(format!(
            "  check {name}: {}",
            if ok { "ok" } else { "FAILED" }
        ));
        self.checks.push(json!({ "check": name, "passed": ok }));
        if ok {
            Ok(())
        } else {
            Err(Stop::Failed(name.to_string()))
        }
    }
}

fn name(axis: Axis, k: u8) -> String {
    format!("P{k}({axis})")
}

fn set(es: &[Subspace]) -> String {
    let parts: Vec<String> = es.iter().map(Subspace::basis_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn line(a: (i64, i64), b: (i64, i64)) -> Subspace {
    let z = |(re, im): (i64, i64)| GaussianRational::complex(re, 1, im, 1);
    Subspace::line(&ExactVector::new(vec![z(a), z(b)]))
}

fn steps(d: &mut Demo) -> Result<(), Stop> {
    let p = |axis, k| spin_half::projector(axis, k);
    let ran = |axis, k| spin_half::projector(axis, k).ran();

    d.line("Spin-1/2 projectors");
    for axis in Axis::ALL {
        for k in [1, 2] {
            d.line(format!("  {} = {}", name(axis, k), p(axis, k).matrix()));
        }
    }
    let all_valid = spin_half::all_projectors()
        .iter()
        .all(|q| validate_projector(q.matrix().clone()).is_ok());
    d.check("all six are self-adjoint idempotents", all_valid)?;
    let maximal = Axis::ALL.into_iter().all(|axis| {
        validate_context(
            axis.label(),
            vec![spin_half::matrix(axis, 1), spin_half::matrix(axis, 2)],
        )
        .is_ok()
    });
    d.check("each axis pair is a maximal context", maximal)?;

    d.line("");
    d.line("Column spaces L(C^2)");
    let expected = spin_half::column_space_family();
    for (label, u) in FAMILY_NAMES.iter().zip(&expected) {
        d.line(format!("  {label:<10} {}", u.basis_string()));
    }
    let mut ranges = vec![Subspace::zero(2), Subspace::full(2)];
    ranges.extend(spin_half::all_projectors().iter().map(Projector::ran));
    let computed = SubspaceLattice::new(2, ranges)?;
    let family = SubspaceLattice::new(2, expected.clone())?;
    d.check(
        "{0}, C^2 and the six ranges are exactly these 8 subspaces",
        computed.same_elements(&family),
    )?;
    let (meet, join) = family.closure_reports()?;
    d.check(
        "the family is closed under meet and join",
        meet.holds && join.holds,
    )?;

    d.line("");
    d.line("Meets");
    let m1 = ran(Axis::Z, 1).meet(&ran(Axis::X, 1))?;
    let m2 = ran(Axis::Z, 2).meet(&ran(Axis::X, 1))?;
    d.line(format!("  ran P1(z) ∧ ran P1(x) = {}", m1.basis_string()));
    d.line(format!("  ran P2(z) ∧ ran P1(x) = {}", m2.basis_string()));
    d.check("both meets are {0}", m1.is_zero() && m2.is_zero())?;

    d.line("");
    d.line("Join through orthocomplements");
    let c1 = ran(Axis::Z, 1).orthocomplement();
    let c2 = ran(Axis::Z, 2).orthocomplement();
    let inner = c1.meet(&c2)?;
    let via = inner.orthocomplement();
    d.line(format!("  (ran P1(z))^⊥ = {}", c1.basis_string()));
    d.line(format!("  (ran P2(z))^⊥ = {}", c2.basis_string()));
    d.line(format!(
        "  (ran P1(z))^⊥ ∧ (ran P2(z))^⊥ = {}",
        inner.basis_string()
    ));
    d.line(format!(
        "  ({})^⊥ = {}",
        inner.basis_string(),
        via.basis_string()
    ));
    let span = ran(Axis::Z, 1).join(&ran(Axis::Z, 2))?;
    d.check(
        "ran P1(z) ∨ ran P2(z) = C^2 by complements and by span",
        c1 == ran(Axis::Z, 2)
            && c2 == ran(Axis::Z, 1)
            && inner.is_zero()
            && via.is_full()
            && span == via,
    )?;

    d.line("");
    d.line("Distributivity");
    let left = ran(Axis::Z, 1)
        .join(&ran(Axis::Z, 2))?
        .meet(&ran(Axis::X, 1))?;
    let right = m1.join(&m2)?;
    d.line(format!(
        "  (ran P1(z) ∨ ran P2(z)) ∧ ran P1(x) = {}",
        left.basis_string()
    ));
    d.line(format!(
        "  (ran P1(z) ∧ ran P1(x)) ∨ (ran P2(z) ∧ ran P1(x)) = {}",
        right.basis_string()
    ));
    d.check(
        "left side is {[a; a]} and right side is {0}",
        left == line((1, 0), (1, 0)) && right.is_zero(),
    )?;
    let sides = evaluate_triple(
        Axiom::Distributive,
        &ran(Axis::X, 1),
        &ran(Axis::Z, 1),
        &ran(Axis::Z, 2),
    )?;
    d.check(
        "the generic evaluator gives the same two sides",
        sides == (left, right),
    )?;
    let dist = check_distributive(&family)?;
    d.line(format!("  over L(C^2): {}", axiom_line(&dist)));
    d.check(
        "the lattice check finds a violation that replays",
        !dist.holds && dist.replay(family.elements())?,
    )?;

    d.line("");
    d.line("Modular identity");
    let u = m1.join(&m2)?;
    let v = m1.join(&ran(Axis::Z, 2))?.meet(&ran(Axis::X, 1))?;
    d.line(format!(
        "  U = (ran P1(z) ∧ ran P1(x)) ∨ (ran P2(z) ∧ ran P1(x)) = {}",
        u.basis_string()
    ));
    d.line(format!(
        "  V = ((ran P1(z) ∧ ran P1(x)) ∨ ran P2(z)) ∧ ran P1(x) = {}",
        v.basis_string()
    ));
    d.check("U = V = {0}", u.is_zero() && v.is_zero())?;
    let om = check_orthomodular(&family)?;
    d.line(format!("  over L(C^2): {}", axiom_line(&om)));
    d.check("L(C^2) is orthomodular", om.holds)?;

    d.line("");
    d.line("Context lattices");
    let per_axis = [
        (Axis::Z, [line((1, 0), (0, 0)), line((0, 0), (1, 0))]),
        (Axis::X, [line((1, 0), (1, 0)), line((1, 0), (-1, 0))]),
        (Axis::Y, [line((0, 1), (1, 0)), line((1, 0), (0, 1))]),
    ];
    let mut lattices = Vec::new();
    let mut all_match = true;
    for (axis, lines) in per_axis {
        let l = context_lattice(&spin_half::context(axis));
        let mut listed = vec![Subspace::zero(2)];
        listed.extend(lines);
        listed.push(Subspace::full(2));
        let want = SubspaceLattice::new(2, listed)?;
        let dist = check_distributive(&l)?;
        let om = check_orthomodular(&l)?;
        d.line(format!(
            "  L({axis}) = {}; distributive: {}, orthomodular: {}",
            set(l.elements()),
            if dist.holds { "yes" } else { "no" },
            if om.holds { "yes" } else { "no" },
        ));
        all_match &= l.same_elements(&want) && dist.holds && om.holds;
        lattices.push(l);
    }
    d.check(
        "each has the 4 listed elements and is distributive and orthomodular",
        all_match,
    )?;

    d.line("");
    d.line("Intersection");
    let sigma = intersect_lattices(&lattices)?;
    d.line(format!(
        "  L(Σ) = L(z) ∩ L(x) ∩ L(y) = {}",
        set(sigma.elements())
    ));
    let trivial = SubspaceLattice::new(2, vec![Subspace::zero(2), Subspace::full(2)])?;
    d.check("L(Σ) = {{0}, C^2}", sigma.same_elements(&trivial))?;

    d.line("");
    d.line("Burnside");
    let generators: Vec<_> = spin_half::all_projectors()
        .into_iter()
        .map(Projector::into_matrix)
        .collect();
    let alg = algebra_closure(2, &generators)?;
    let rounds: Vec<String> = alg.rounds().iter().map(ToString::to_string).collect();
    d.line(format!(
        "  algebra generated by the six projectors: dimension {} of 4 (span size by round: {})",
        alg.dimension(),
        rounds.join(", ")
    ));
    let verdict = is_irreducible(2, &generators, &expected)?;
    d.check(
        "the algebra is all of M_2 and the family is irreducible",
        alg.dimension() == 4 && verdict.irreducible && verdict.invariant_subspace.is_none(),
    )?;

    d.line("");
    d.line("Meet of incommutable projectors");
    let (a, b) = (ran(Axis::Z, 1), ran(Axis::X, 1));
    d.line(format!(
        "  ran P1(z) = {} in L(Σ): {}",
        a.basis_string(),
        if sigma.contains(&a) { "yes" } else { "no" }
    ));
    d.line(format!(
        "  ran P1(x) = {} in L(Σ): {}",
        b.basis_string(),
        if sigma.contains(&b) { "yes" } else { "no" }
    ));
    d.check(
        "neither operand of ran P1(z) ∧ ran P1(x) lies in L(Σ)",
        !sigma.contains(&a) && !sigma.contains(&b) && !p(Axis::Z, 1).commutes(&p(Axis::X, 1))?,
    )?;
    Ok(())
}

/// Runs every step; stops at the first failing check.
pub fn spin_half() -> Report {
    let mut d = Demo {
        report: Report::new("demo spin-half"),
        checks: Vec::new(),
    };
    let outcome = steps(&mut d);
    d.line("");
    match outcome {
        Ok(()) => d.line(format!("all {} checks passed", d.checks.len())),
        Err(Stop::Failed(name)) => {
            d.report.passed = false;
            d.line(format!("stopped at failing check: {name}"));
        }
        Err(Stop::Library(e)) => {
            d.report.passed = false;
            d.line(format!("stopped on error: {e}"));
        }
    }
    let checks = std::mem::take(&mut d.checks);
    d.report.field("checks", Value::Array(checks));
    d.report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes() {
        let r = spin_half();
        assert!(r.passed, "{}", r.text);
        assert!(r.text.ends_with("checks passed\n"));
    }

    #[test]
    fn family_names_match_the_family() {
        let fam = spin_half::column_space_family();
        assert_eq!(fam.len(), FAMILY_NAMES.len());
        assert_eq!(fam[5], line((0, 1), (1, 0)));
        assert_eq!(fam[6], line((1, 0), (0, 1)));
    }
}
