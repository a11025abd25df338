//! Finite families of subspaces ordered by inclusion: closure verdicts,
//! distributivity, modularity and orthomodularity checks with replayable
//! counterexamples, and Hasse diagram export.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::error::Error;
use crate::subspace::Subspace;

/// A duplicate-free family of subspaces of `C^n` containing `{0}` and `C^n`.
///
/// When the family is closed under orthocomplement the lattice carries the
/// complement map, `complement_map[i]` being the index of `elements[i]^⊥`.
#[derive(Clone, Debug)]
pub struct SubspaceLattice {
    ambient_dim: usize,
    elements: Vec<Subspace>,
    complement_map: Option<Vec<usize>>,
    tables: OnceLock<Result<(PartialTables, Option<LatticeTables>), Error>>,
}

impl PartialEq for SubspaceLattice {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.elements == other.elements
            && self.complement_map == other.complement_map
    }
}

impl Eq for SubspaceLattice {}

impl SubspaceLattice {
    /// Deduplicates `elements` (first occurrence wins) and attaches the
    /// orthocomplement map if every complement is present.
    pub fn new(ambient_dim: usize, elements: Vec<Subspace>) -> Result<Self, Error> {
        let mut unique: Vec<Subspace> = Vec::with_capacity(elements.len());
        for e in elements {
            if e.ambient_dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    op: "lattice construction",
                    expected: ambient_dim,
                    found: e.ambient_dim(),
                });
            }
            if !unique.contains(&e) {
                unique.push(e);
            }
        }
        if !unique.iter().any(Subspace::is_zero) {
            return Err(Error::MissingBound("zero"));
        }
        if !unique.iter().any(Subspace::is_full) {
            return Err(Error::MissingBound("full"));
        }
        let index = index_map(&unique);
        let complement_map = unique
            .iter()
            .map(|e| index.get(&e.orthocomplement()).copied())
            .collect::<Option<Vec<usize>>>();
        Ok(SubspaceLattice {
            ambient_dim,
            elements: unique,
            complement_map,
            tables: OnceLock::new(),
        })
    }

    pub fn without_complement_map(mut self) -> Self {
        self.complement_map = None;
        self
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn elements(&self) -> &[Subspace] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Subspace> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false; a lattice holds at least `{0}` and `C^n`.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn complement_map(&self) -> Option<&[usize]> {
        self.complement_map.as_deref()
    }

    pub fn index_of(&self, u: &Subspace) -> Option<usize> {
        self.elements.iter().position(|e| e == u)
    }

    pub fn contains(&self, u: &Subspace) -> bool {
        self.index_of(u).is_some()
    }

    /// Equality as sets, ignoring element order.
    pub fn same_elements(&self, other: &SubspaceLattice) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.len() == other.len()
            && self.elements.iter().all(|e| other.contains(e))
    }

    fn partial_tables(&self) -> Result<&(PartialTables, Option<LatticeTables>), Error> {
        self.tables
            .get_or_init(|| {
                let partial = PartialTables::build(&self.elements)?;
                let closed = (partial.first_meet_escape.is_none()
                    && partial.first_join_escape.is_none())
                .then(|| LatticeTables {
                    size: self.len(),
                    meet: partial.meet.iter().map(|x| x.expect("closed")).collect(),
                    join: partial.join.iter().map(|x| x.expect("closed")).collect(),
                });
                Ok((partial, closed))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Meet and join tables, or the first operation the family is not closed
    /// under. Computed once and cached.
    pub fn tables(&self) -> Result<&LatticeTables, Error> {
        let (partial, closed) = self.partial_tables()?;
        if partial.first_meet_escape.is_some() {
            return Err(Error::NotClosed("meet"));
        }
        if partial.first_join_escape.is_some() {
            return Err(Error::NotClosed("join"));
        }
        Ok(closed.as_ref().expect("no escapes"))
    }

    /// [`check_closure`] on the elements, sharing the cached tables.
    pub fn closure_reports(&self) -> Result<(AxiomReport, AxiomReport), Error> {
        Ok(self.partial_tables()?.0.reports())
    }
}

/// Index-level meet and join of a closed family.
#[derive(Clone, Debug)]
pub struct LatticeTables {
    size: usize,
    meet: Vec<usize>,
    join: Vec<usize>,
}

impl LatticeTables {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.size + j]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.size + j]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.meet(i, j) == i
    }
}

fn index_map(elements: &[Subspace]) -> HashMap<&Subspace, usize> {
    elements.iter().enumerate().map(|(k, e)| (e, k)).collect()
}

#[derive(Clone, Debug)]
struct PartialTables {
    meet: Vec<Option<usize>>,
    join: Vec<Option<usize>>,
    first_meet_escape: Option<(usize, usize, Subspace)>,
    first_join_escape: Option<(usize, usize, Subspace)>,
}

impl PartialTables {
    fn build(elements: &[Subspace]) -> Result<Self, Error> {
        let n = elements.len();
        let index = index_map(elements);
        let complements: Vec<Subspace> = elements.iter().map(Subspace::orthocomplement).collect();
        let mut t = PartialTables {
            meet: vec![None; n * n],
            join: vec![None; n * n],
            first_meet_escape: None,
            first_join_escape: None,
        };
        for i in 0..n {
            for j in i..n {
                let m = complements[i].join(&complements[j])?.orthocomplement();
                let jn = elements[i].join(&elements[j])?;
                let mi = index.get(&m).copied();
                let ji = index.get(&jn).copied();
                t.meet[i * n + j] = mi;
                t.meet[j * n + i] = mi;
                t.join[i * n + j] = ji;
                t.join[j * n + i] = ji;
                if mi.is_none() && t.first_meet_escape.is_none() {
                    t.first_meet_escape = Some((i, j, m));
                }
                if ji.is_none() && t.first_join_escape.is_none() {
                    t.first_join_escape = Some((i, j, jn));
                }
            }
        }
        Ok(t)
    }

    fn reports(&self) -> (AxiomReport, AxiomReport) {
        let report = |axiom, escape: &Option<(usize, usize, Subspace)>| match escape {
            None => AxiomReport::pass(axiom),
            Some((i, j, result)) => AxiomReport::fail(
                axiom,
                vec![*i, *j],
                Witness::Escapes {
                    result: result.clone(),
                },
            ),
        };
        (
            report(Axiom::ClosureMeet, &self.first_meet_escape),
            report(Axiom::ClosureJoin, &self.first_join_escape),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    ClosureMeet,
    ClosureJoin,
    Distributive,
    /// `(u∧w)∨(v∧w) = ((u∧w)∨v)∧w` for one given triple.
    ModularIdentity,
    /// `v ≤ w ⇒ v∨(u∧w) = (v∨u)∧w` over every triple. Extends the single
    /// triple identity to the whole lattice.
    ModularLaw,
    Orthomodular,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::ClosureMeet => "closure-meet",
            Axiom::ClosureJoin => "closure-join",
            Axiom::Distributive => "distributive",
            Axiom::ModularIdentity => "modular-identity",
            Axiom::ModularLaw => "modular-law",
            Axiom::Orthomodular => "orthomodular",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The two sides of an identity, which differ.
    Unequal { left: Subspace, right: Subspace },
    /// A meet or join that falls outside the family.
    Escapes { result: Subspace },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Element indices: a pair for closure and orthomodularity, a triple
    /// otherwise.
    pub indices: Vec<usize>,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl AxiomReport {
    fn pass(axiom: Axiom) -> Self {
        AxiomReport {
            axiom,
            holds: true,
            counterexample: None,
        }
    }

    fn fail(axiom: Axiom, indices: Vec<usize>, witness: Witness) -> Self {
        AxiomReport {
            axiom,
            holds: false,
            counterexample: Some(Counterexample { indices, witness }),
        }
    }

    fn from_sides(axiom: Axiom, indices: Vec<usize>, left: Subspace, right: Subspace) -> Self {
        if left == right {
            Self::pass(axiom)
        } else {
            Self::fail(axiom, indices, Witness::Unequal { left, right })
        }
    }

    /// Recomputes the counterexample from `elements` with plain subspace
    /// operations. Returns true iff the recomputed witness matches the stored
    /// one and still violates the axiom. A passing report replays to false.
    pub fn replay(&self, elements: &[Subspace]) -> Result<bool, Error> {
        let Some(cx) = &self.counterexample else {
            return Ok(false);
        };
        let pick = |k: usize| -> Result<&Subspace, Error> {
            cx.indices
                .get(k)
                .and_then(|&i| elements.get(i))
                .ok_or(Error::NotAnElement)
        };
        match (&cx.witness, self.axiom) {
            (Witness::Escapes { result }, Axiom::ClosureMeet | Axiom::ClosureJoin) => {
                let (u, v) = (pick(0)?, pick(1)?);
                let r = if self.axiom == Axiom::ClosureMeet {
                    u.meet(v)?
                } else {
                    u.join(v)?
                };
                Ok(&r == result && !elements.contains(&r))
            }
            (Witness::Unequal { left, right }, axiom) => {
                let (l, r) = match axiom {
                    Axiom::Orthomodular => orthomodular_sides(pick(0)?, pick(1)?)?,
                    _ => evaluate_triple(axiom, pick(0)?, pick(1)?, pick(2)?)?,
                };
                Ok(&l == left && &r == right && l != r)
            }
            _ => Ok(false),
        }
    }
}

/// Both sides of a three-variable identity, evaluated directly.
pub fn evaluate_triple(
    axiom: Axiom,
    u: &Subspace,
    v: &Subspace,
    w: &Subspace,
) -> Result<(Subspace, Subspace), Error> {
    match axiom {
        Axiom::Distributive => Ok((u.meet(&v.join(w)?)?, u.meet(v)?.join(&u.meet(w)?)?)),
        Axiom::ModularIdentity => {
            let uw = u.meet(w)?;
            Ok((uw.join(&v.meet(w)?)?, uw.join(v)?.meet(w)?))
        }
        Axiom::ModularLaw => Ok((v.join(&u.meet(w)?)?, v.join(u)?.meet(w)?)),
        _ => Err(Error::NotAnElement),
    }
}

/// `(v, u ∨ (v ∧ u^⊥))`.
fn orthomodular_sides(u: &Subspace, v: &Subspace) -> Result<(Subspace, Subspace), Error> {
    Ok((v.clone(), u.join(&v.meet(&u.orthocomplement())?)?))
}

/// Whether every pairwise meet and join stays inside `elements`.
pub fn check_closure(elements: &[Subspace]) -> Result<(AxiomReport, AxiomReport), Error> {
    let Some(first) = elements.first() else {
        return Err(Error::EmptyFamily);
    };
    if let Some(bad) = elements
        .iter()
        .find(|e| e.ambient_dim() != first.ambient_dim())
    {
        return Err(Error::DimensionMismatch {
            op: "closure check",
            expected: first.ambient_dim(),
            found: bad.ambient_dim(),
        });
    }
    Ok(PartialTables::build(elements)?.reports())
}

fn witness_triple(
    l: &SubspaceLattice,
    axiom: Axiom,
    i: usize,
    j: usize,
    k: usize,
) -> Result<AxiomReport, Error> {
    let e = l.elements();
    let (left, right) = evaluate_triple(axiom, &e[i], &e[j], &e[k])?;
    Ok(AxiomReport::from_sides(axiom, vec![i, j, k], left, right))
}

/// `u∧(v∨w) = (u∧v)∨(u∧w)` over all ordered triples; the first violation in
/// index order is reported.
pub fn check_distributive(l: &SubspaceLattice) -> Result<AxiomReport, Error> {
    let t = l.tables()?;
    let n = t.size();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let left = t.meet(i, t.join(j, k));
                let right = t.join(t.meet(i, j), t.meet(i, k));
                if left != right {
                    return witness_triple(l, Axiom::Distributive, i, j, k);
                }
            }
        }
    }
    Ok(AxiomReport::pass(Axiom::Distributive))
}

/// Evaluates `U = (u∧w)∨(v∧w)` against `V = ((u∧w)∨v)∧w` for one triple of
/// lattice elements.
pub fn check_modular_identity(
    l: &SubspaceLattice,
    u: &Subspace,
    v: &Subspace,
    w: &Subspace,
) -> Result<AxiomReport, Error> {
    let idx = |s: &Subspace| l.index_of(s).ok_or(Error::NotAnElement);
    let indices = vec![idx(u)?, idx(v)?, idx(w)?];
    let (left, right) = evaluate_triple(Axiom::ModularIdentity, u, v, w)?;
    Ok(AxiomReport::from_sides(
        Axiom::ModularIdentity,
        indices,
        left,
        right,
    ))
}

/// The modular law over every triple `(u, v, w)` with `v ≤ w`.
pub fn check_modular(l: &SubspaceLattice) -> Result<AxiomReport, Error> {
    let t = l.tables()?;
    let n = t.size();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !t.leq(j, k) {
                    continue;
                }
                let left = t.join(j, t.meet(i, k));
                let right = t.meet(t.join(j, i), k);
                if left != right {
                    return witness_triple(l, Axiom::ModularLaw, i, j, k);
                }
            }
        }
    }
    Ok(AxiomReport::pass(Axiom::ModularLaw))
}

/// For every pair `u ≤ v`: `v = u ∨ (v ∧ u^⊥)`.
pub fn check_orthomodular(l: &SubspaceLattice) -> Result<AxiomReport, Error> {
    let comp = l.complement_map().ok_or(Error::MissingComplementMap)?;
    let t = l.tables()?;
    let n = t.size();
    for i in 0..n {
        for j in 0..n {
            if !t.leq(i, j) {
                continue;
            }
            if t.join(i, t.meet(j, comp[i])) != j {
                let e = l.elements();
                let (left, right) = orthomodular_sides(&e[i], &e[j])?;
                return Ok(AxiomReport::from_sides(
                    Axiom::Orthomodular,
                    vec![i, j],
                    left,
                    right,
                ));
            }
        }
    }
    Ok(AxiomReport::pass(Axiom::Orthomodular))
}

/// Closes `generators` under pairwise meet and join. Fails once the family
/// grows past `limit` elements.
pub fn close_family(generators: Vec<Subspace>, limit: usize) -> Result<Vec<Subspace>, Error> {
    let mut family: Vec<Subspace> = Vec::new();
    let mut complements: Vec<Subspace> = Vec::new();
    let mut seen: HashSet<Subspace> = HashSet::new();
    let mut push = |s: Subspace, family: &mut Vec<Subspace>, complements: &mut Vec<Subspace>| {
        if seen.insert(s.clone()) {
            complements.push(s.orthocomplement());
            family.push(s);
        }
    };
    for g in generators {
        push(g, &mut family, &mut complements);
    }
    let mut checked = 0;
    while checked < family.len() {
        let end = family.len();
        for i in checked..end {
            for j in 0..=i {
                let meet = complements[i].join(&complements[j])?.orthocomplement();
                let join = family[i].join(&family[j])?;
                push(meet, &mut family, &mut complements);
                push(join, &mut family, &mut complements);
                if family.len() > limit {
                    return Err(Error::ClosureTooLarge(limit));
                }
            }
        }
        checked = end;
    }
    Ok(family)
}

/// Covering pairs `(lower, upper)` by element index: `lower < upper` with
/// nothing strictly between.
pub fn covering_pairs(elements: &[Subspace]) -> Result<Vec<(usize, usize)>, Error> {
    let n = elements.len();
    let mut below = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            below[i * n + j] = i != j && elements[i].leq(&elements[j])?;
        }
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if below[i * n + j] && !(0..n).any(|k| below[i * n + k] && below[k * n + j]) {
                pairs.push((i, j));
            }
        }
    }
    Ok(pairs)
}

/// Graphviz digraph of the covering relation, bottom to top. Nodes are
/// numbered `s0..` in lexicographic order of their canonical basis strings;
/// an edge `u -> v` means `v` covers `u`.
pub fn hasse_dot(l: &SubspaceLattice) -> String {
    let mut order: Vec<(String, &Subspace)> =
        l.elements().iter().map(|e| (e.basis_string(), e)).collect();
    order.sort_by(|a, b| a.0.cmp(&b.0));
    let sorted: Vec<Subspace> = order.iter().map(|(_, e)| (*e).clone()).collect();
    let edges = covering_pairs(&sorted).expect("elements share an ambient dimension");

    let mut out = String::from("digraph {\n  rankdir=BT;\n");
    for (k, (basis, e)) in order.iter().enumerate() {
        writeln!(out, "  s{k} [label=\"dim {}\\n{}\"];", e.dim(), basis).unwrap();
    }
    for (a, b) in edges {
        writeln!(out, "  s{a} -> s{b};").unwrap();
    }
    out.push_str("}\n");
    out
}
