//! The named identity checks.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::closed::{closed_form, ClosedFormKind};
use super::report::{Difference, IdentityReport, ReportParams, Witness};
use super::vev::{vev_boson, vev_fermion, Model, Side, VevSpec};
use crate::algebra::{
    determinant, expand, pfaffian, product_cutoff, Alphabet, LaurentSeries, MultiPoly, PoleFactor, Rat, RationalFn,
};
use crate::boson::{boson_character_a, boson_character_b, BosonStateA, BosonStateB, Sign};
use crate::combinatorics::partition_counts;
use crate::error::{Error, Result};
use crate::fields::{
    act_hopf, heisenberg_a, heisenberg_b, identity_field, mode_commutator, phi_a, phi_b, psi_a, vertex_field_a,
    vertex_field_b, Field, HopfAction, HopfGenerator,
};
use crate::fock::{character_a, character_b, BasisState, FermionStateA, FermionStateB, FockVector};

/// Inputs shared by every check. `n` falls back to the check's default.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckParams {
    pub n: Option<u32>,
    pub cutoff: u32,
    pub seed: u64,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams {
            n: None,
            cutoff: 10,
            seed: 0,
        }
    }
}

const NAMES: [&str; 18] = [
    "cauchy",
    "character-A",
    "character-B",
    "det-formula-A",
    "heisenberg-from-fermions-A",
    "hopf-relations",
    "kernel-properties",
    "ope-residues",
    "pf-formula-B",
    "product-formula-A",
    "product-formula-B",
    "schur-pfaffian",
    "supercommutativity-A",
    "supercommutativity-B",
    "twisted-heisenberg-from-fermions-B",
    "vacuum-creation",
    "vev-match-A",
    "vev-match-B",
];

/// Every check name, sorted.
pub fn check_names() -> &'static [&'static str] {
    &NAMES
}

/// The model a check is about, if it is about one.
fn model_of(name: &str) -> Option<Model> {
    match name {
        "cauchy" => Some(Model::A),
        "schur-pfaffian" => Some(Model::B),
        _ if name.ends_with("-A") => Some(Model::A),
        _ if name.ends_with("-B") => Some(Model::B),
        _ => None,
    }
}

/// The size a check uses when none is given, or `None` if it has no size.
pub fn default_n(name: &str) -> Option<u32> {
    match name {
        "cauchy" | "det-formula-A" => Some(3),
        // The lattice vertex operators make three pairs too slow at D = 10.
        "product-formula-A" | "vev-match-A" => Some(2),
        "schur-pfaffian" | "pf-formula-B" | "product-formula-B" | "vev-match-B" => Some(2),
        "supercommutativity-A" | "supercommutativity-B" => Some(1),
        _ => None,
    }
}

/// Runs one named check. `elapsed_ms` is left at zero.
pub fn check_identity(name: &str, params: &CheckParams) -> Result<IdentityReport> {
    if !NAMES.contains(&name) {
        return Err(Error::UnknownCheck(name.to_string()));
    }
    if params.cutoff == 0 {
        return Err(Error::Invalid("cutoff must be at least 1".into()));
    }
    if params.n == Some(0) {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let n = default_n(name).map(|d| params.n.unwrap_or(d));
    let size = n.unwrap_or(0) as usize;
    let d = params.cutoff;
    let witnesses = match name {
        "cauchy" => closed_forms(Model::A, ClosedFormKind::Determinant, size)?,
        "schur-pfaffian" => closed_forms(Model::B, ClosedFormKind::Pfaffian, size)?,
        "vev-match-A" => vev_match(Model::A, size, d)?,
        "vev-match-B" => vev_match(Model::B, size, d)?,
        "det-formula-A" => formula(Model::A, Side::Fermion, ClosedFormKind::Determinant, size, d)?,
        "pf-formula-B" => formula(Model::B, Side::Fermion, ClosedFormKind::Pfaffian, size, d)?,
        "product-formula-A" => formula(Model::A, Side::Boson, ClosedFormKind::Product, size, d)?,
        "product-formula-B" => formula(Model::B, Side::Boson, ClosedFormKind::Product, size, d)?,
        "supercommutativity-A" => supercommutativity(Model::A, size, d)?,
        "supercommutativity-B" => supercommutativity(Model::B, size, d)?,
        "heisenberg-from-fermions-A" => heisenberg_charged(),
        "twisted-heisenberg-from-fermions-B" => heisenberg_neutral(),
        "character-A" => characters_charged(),
        "character-B" => characters_neutral(),
        "ope-residues" => ope_residues(d)?,
        "hopf-relations" => hopf_relations(d),
        "vacuum-creation" => vacuum_creation(),
        "kernel-properties" => kernel_properties(params.seed)?,
        _ => unreachable!("name checked above"),
    };
    let report_params = ReportParams {
        model: model_of(name),
        n,
        cutoff: d,
        seed: params.seed,
    };
    Ok(IdentityReport::new(name, report_params, witnesses))
}

fn monomial_text(vars: &[String], exps: &[i32]) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e != 0)
        .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn series_witness(label: impl Into<String>, a: &LaurentSeries, b: &LaurentSeries) -> Result<Witness> {
    let diff = a.first_difference(b)?.map(|(e, x, y)| Difference {
        monomial: monomial_text(a.vars(), &e),
        left: x.to_string(),
        right: y.to_string(),
    });
    Ok(Witness::new(label, a, b, diff))
}

fn continuation_witness(label: impl Into<String>, s: &LaurentSeries, f: &RationalFn) -> Result<Witness> {
    series_witness(label, s, &expand(f, s.vars(), s.cutoff())?)
}

fn poly_witness(label: impl Into<String>, a: &MultiPoly, b: &MultiPoly) -> Witness {
    let names = a.alphabet().names();
    let diff = a
        .terms()
        .keys()
        .chain(b.terms().keys())
        .filter(|e| a.coeff(e) != b.coeff(e))
        .min()
        .map(|e| {
            let signed: Vec<i32> = e.iter().map(|&x| x as i32).collect();
            Difference {
                monomial: monomial_text(names, &signed),
                left: a.coeff(e).to_string(),
                right: b.coeff(e).to_string(),
            }
        });
    Witness::new(label, a, b, diff)
}

fn closed_forms(model: Model, kind: ClosedFormKind, n: usize) -> Result<Vec<Witness>> {
    let f = closed_form(model, kind, n)?;
    let g = closed_form(model, ClosedFormKind::Product, n)?;
    let (l, r) = f.cross_multiplied(&g)?;
    let label = format!("{kind:?} vs Product, cross-multiplied").to_lowercase();
    Ok(vec![poly_witness(label, &l, &r)])
}

fn vev_match(model: Model, n: usize, d: u32) -> Result<Vec<Witness>> {
    let a = vev_fermion(&VevSpec::standard(model, Side::Fermion, n, d))?;
    let b = vev_boson(&VevSpec::standard(model, Side::Boson, n, d))?;
    Ok(vec![series_witness("fermion vs boson", &a, &b)?])
}

fn formula(model: Model, side: Side, kind: ClosedFormKind, n: usize, d: u32) -> Result<Vec<Witness>> {
    let s = match side {
        Side::Fermion => vev_fermion(&VevSpec::standard(model, side, n, d))?,
        Side::Boson => vev_boson(&VevSpec::standard(model, side, n, d))?,
    };
    let f = closed_form(model, kind, n)?;
    let label = format!("{side:?} vev vs {kind:?}").to_lowercase();
    Ok(vec![continuation_witness(label, &s, &f)?])
}

/// Permutations of `0..len` with their signs: all of them for at most four
/// points, adjacent transpositions beyond that.
fn orderings(len: usize) -> Vec<(Vec<usize>, i64)> {
    let id: Vec<usize> = (0..len).collect();
    if len > 4 {
        let mut out = vec![(id.clone(), 1)];
        for i in 0..len - 1 {
            let mut p = id.clone();
            p.swap(i, i + 1);
            out.push((p, -1));
        }
        return out;
    }
    let mut out = Vec::new();
    permute(&mut id.clone(), 0, 1, &mut out);
    out.sort();
    out
}

fn permute(p: &mut Vec<usize>, k: usize, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
    if k == p.len() {
        out.push((p.clone(), sign));
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, if i == k { sign } else { -sign }, out);
        p.swap(k, i);
    }
}

/// Every reordering of the standard word is an expansion, in its own
/// region, of the same rational function times the sign `(-1)^{ab}`
/// accumulated over the odd fields it moves past each other.
fn supercommutativity(model: Model, n: usize, d: u32) -> Result<Vec<Witness>> {
    let f = closed_form(model, ClosedFormKind::Product, n)?;
    let mut out = Vec::new();
    for side in [Side::Fermion, Side::Boson] {
        let base = VevSpec::standard(model, side, n, d);
        for (perm, sign) in orderings(base.word.len()) {
            let spec = VevSpec {
                word: perm.iter().map(|&i| base.word[i].clone()).collect(),
                ..base.clone()
            };
            let s = match side {
                Side::Fermion => vev_fermion(&spec)?,
                Side::Boson => vev_boson(&spec)?,
            };
            let label = format!("{side:?} ordering {}", spec.variables().join(",")).to_lowercase();
            out.push(continuation_witness(label, &s, &f.scale(&Rat::integer(sign)))?);
        }
    }
    Ok(out)
}

fn bracket_witness<S: BasisState>(label: String, a: &Field<S>, m: i64, n: i64, grade: i64, expected: Rat) -> Witness {
    let r = mode_commutator(a, a, m, n, grade);
    let diff = if let Some((s, v)) = r.residual.first() {
        Some(Difference {
            monomial: s.to_string(),
            left: v.to_string(),
            right: "0".into(),
        })
    } else if r.scalar != expected {
        Some(Difference {
            monomial: "|0>".into(),
            left: r.scalar.to_string(),
            right: expected.to_string(),
        })
    } else {
        None
    };
    let left = if r.is_scalar() {
        format!("{} Id", r.scalar)
    } else {
        "not scalar".into()
    };
    Witness::new(label, left, format!("{expected} Id"), diff)
}

fn heisenberg_charged() -> Vec<Witness> {
    let h = heisenberg_a();
    let mut out = Vec::new();
    for m in -5..=5 {
        for n in -5..=5 {
            let expected = if m + n == 0 { Rat::integer(m) } else { Rat::zero() };
            out.push(bracket_witness(format!("[h_{m}, h_{n}] on energy2 <= 12"), &h, m, n, 12, expected));
        }
    }
    out
}

fn heisenberg_neutral() -> Vec<Witness> {
    let h = heisenberg_b();
    let mut out = Vec::new();
    let odd: Vec<i64> = (-7..=7).filter(|k: &i64| k.rem_euclid(2) == 1).collect();
    for &m in &odd {
        for &n in &odd {
            let expected = if m + n == 0 { Rat::new(m, 2) } else { Rat::zero() };
            out.push(bracket_witness(format!("[h_{m}, h_{n}] on degree <= 10"), &h, m, n, 10, expected));
        }
    }
    for n in (-8..=8).step_by(2) {
        let nonzero = FermionStateB::basis_up_to(10).into_iter().find_map(|s| {
            let v = h.mode(n, &FockVector::basis(s.clone()));
            (!v.is_zero()).then(|| Difference {
                monomial: s.to_string(),
                left: v.to_string(),
                right: "0".into(),
            })
        });
        out.push(Witness::new(format!("h_{n} on degree <= 10"), if nonzero.is_some() { "non-zero" } else { "0" }, "0", nonzero));
    }
    out
}

fn counts_text<I: IntoIterator<Item = u64>>(c: I) -> String {
    let v: Vec<String> = c.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", v.join(", "))
}

fn characters_charged() -> Vec<Witness> {
    const LEVELS: i64 = 12;
    let p = partition_counts(LEVELS as usize, false, |_| true);
    let mut out = Vec::new();
    for charge in -2i64..=2 {
        let base = charge * charge;
        let top = base + 2 * LEVELS;
        let pick = |levels: Vec<(i64, usize)>| -> Vec<u64> {
            let map: BTreeMap<i64, usize> = levels.into_iter().collect();
            (0..=LEVELS).map(|d| *map.get(&(base + 2 * d)).unwrap_or(&0) as u64).collect()
        };
        let fermion = pick(character_a(charge, top));
        let boson = pick(boson_character_a(charge, top));
        out.push(Witness::compare(format!("fermion charge {charge}, d <= {LEVELS}, vs p(d)"), counts_text(fermion), counts_text(p.clone())));
        out.push(Witness::compare(format!("boson charge {charge}, d <= {LEVELS}, vs p(d)"), counts_text(boson), counts_text(p.clone())));
    }
    out
}

fn characters_neutral() -> Vec<Witness> {
    const LEVELS: i64 = 20;
    let twice = |c: Vec<u64>| c.into_iter().map(|x| 2 * x).collect::<Vec<_>>();
    let odd = twice(partition_counts(LEVELS as usize, false, |k| k % 2 == 1));
    let distinct = twice(partition_counts(LEVELS as usize, true, |_| true));
    let fermion: Vec<u64> = character_b(LEVELS).into_iter().map(|(_, c)| c as u64).collect();
    let boson: Vec<u64> = boson_character_b(LEVELS).into_iter().map(|(_, c)| c as u64).collect();
    vec![
        Witness::compare("fermion vs 2 * odd-part partitions", counts_text(fermion.clone()), counts_text(odd.clone())),
        Witness::compare("boson vs 2 * odd-part partitions", counts_text(boson), counts_text(odd)),
        Witness::compare("fermion vs 2 * distinct-part partitions", counts_text(fermion), counts_text(distinct)),
    ]
}

/// `Σ_n [a_{-1}, b_n] w^n` read off mode brackets on low grades, as a
/// series in `w`, or the first basis state where a bracket is not scalar.
fn residue_series<S: BasisState>(a: &Field<S>, b: &Field<S>, grade: i64, d: u32) -> Result<std::result::Result<LaurentSeries, Difference>> {
    let mut terms = Vec::new();
    let ia = a.convention().index(-1);
    for p in -(d as i64)..=d as i64 {
        let r = mode_commutator(a, b, ia, b.convention().index(p), grade);
        if let Some((s, v)) = r.residual.first() {
            return Ok(Err(Difference {
                monomial: format!("w^{p} on {s}"),
                left: v.to_string(),
                right: "scalar".into(),
            }));
        }
        terms.push((vec![p as i32], r.scalar));
    }
    Ok(Ok(LaurentSeries::from_terms(&["w"], d, terms)?))
}

fn ope_residues(d: u32) -> Result<Vec<Witness>> {
    let mut out = Vec::new();
    let abc = Alphabet::new(&["z", "w"])?;
    let (z, w) = (0, 1);
    let one = RationalFn::one(&abc);

    // Charged: phi(z) psi(w) ~ 1/(z - w).
    let fa = RationalFn::inverse_difference(&abc, z, w);
    let spec = VevSpec {
        model: Model::A,
        side: Side::Fermion,
        word: vec![(super::Symbol::Phi, "z".into()), (super::Symbol::Psi, "w".into())],
        cutoff: d,
    };
    out.push(continuation_witness("A: <phi(z) psi(w)> vs 1/(z-w)", &vev_fermion(&spec)?, &fa)?);
    out.push(Witness::compare("A: Res_{z=w} 1/(z-w)", fa.residue_at(z, 1, w, 0)?, &one));

    // Neutral: phi(z) phi(w) ~ (z - w)/(z + w).
    let fb = RationalFn::pole(&abc, PoleFactor::sum(z, w), 1).mul_poly(&MultiPoly::linear(&abc, z, -1, w));
    let spec = VevSpec {
        model: Model::B,
        side: Side::Fermion,
        word: vec![(super::Symbol::Phi, "z".into()), (super::Symbol::Phi, "w".into())],
        cutoff: d,
    };
    out.push(continuation_witness("B: <phi(z) phi(w)> vs (z-w)/(z+w)", &vev_fermion(&spec)?, &fb)?);
    let res = fb.residue_at(z, -1, w, 0)?;
    let minus_two = Rat::integer(-2);
    out.push(Witness::compare("B: Res_{z=-w} (z-w)/(z+w)", &res, RationalFn::var(&abc, w).scale(&minus_two)));
    let shifted = res.mul(&RationalFn::pole(&abc, PoleFactor::Var(w), 1));
    out.push(Witness::compare("B: w^-1 Res_{z=-w} (z-w)/(z+w)", &shifted, RationalFn::constant(&abc, minus_two.clone())));

    // The same residues as operators, from mode brackets.
    let expected = LaurentSeries::from_terms(&["w"], d, [(vec![0], Rat::one())])?;
    out.push(match residue_series(&phi_a(), &psi_a(), 8, d)? {
        Ok(s) => series_witness("A: Res_z [phi(z), psi(w)] on energy2 <= 8", &s, &expected)?,
        Err(diff) => Witness::new("A: Res_z [phi(z), psi(w)] on energy2 <= 8", "not scalar", &expected, Some(diff)),
    });
    let expected = LaurentSeries::from_terms(&["w"], d, [(vec![1], minus_two.clone())])?;
    match residue_series(&phi_b(), &phi_b(), 8, d)? {
        Ok(s) => {
            out.push(series_witness("B: Res_z [phi(z), phi(w)] on degree <= 8", &s, &expected)?);
            // Shifted by w^-1 the bracket is the field of -2|0>, i.e. -2 Id.
            let shifted = LaurentSeries::from_terms(&["w"], d, s.terms().iter().map(|(e, c)| (vec![e[0] - 1], c.clone())))?;
            let id = identity_field::<FermionStateB>();
            let vac = FockVector::vacuum();
            let field = LaurentSeries::from_terms(
                &["w"],
                d,
                (-(d as i64)..=d as i64).map(|p| (vec![p as i32], id.coefficient(p, &vac).vacuum_component() * &minus_two)),
            )?;
            out.push(series_witness("B: w^-1 Res_z [phi(z), phi(w)] vs Y(-2|0>, w)", &shifted, &field)?);
        }
        Err(diff) => out.push(Witness::new("B: Res_z [phi(z), phi(w)] on degree <= 8", "not scalar", &expected, Some(diff))),
    }
    Ok(out)
}

/// The first `(p, state)` where the two fields' `z^p` coefficients differ.
fn field_difference<S: BasisState>(f: &Field<S>, g: &Field<S>, grade: i64, d: i64) -> Option<Difference> {
    for s in S::basis_up_to(grade) {
        let v = FockVector::basis(s.clone());
        for p in -d..=d {
            let (a, b) = (f.coefficient(p, &v), g.coefficient(p, &v));
            if !a.sub(&b).is_zero() {
                return Some(Difference {
                    monomial: format!("z^{p} on {s}"),
                    left: a.to_string(),
                    right: b.to_string(),
                });
            }
        }
    }
    None
}

fn hopf_witnesses<S: BasisState>(f: &Field<S>, grade: i64, d: i64, out: &mut Vec<Witness>) {
    use HopfGenerator::{D, T};
    let name = f.name().to_string();
    let dt = act_hopf(&[D, T], f);
    let td = HopfAction::identity().negated().apply(&act_hopf(&[T, D], f));
    out.push(Witness::new(format!("D T vs -T D on {name}"), "DT", "-TD", field_difference(&dt, &td, grade, d)));
    let tt = act_hopf(&[T, T], f);
    out.push(Witness::new(format!("T T vs 1 on {name}"), "TT", "1", field_difference(&tt, f, grade, d)));
    for word in [vec![D, T, D], vec![T, D, D, T], vec![D, D, T, D, T]] {
        let literal = act_hopf(&word, f);
        let reduced = HopfAction::from_word(&word);
        let label = format!("{word:?} literal vs {reduced} on {name}");
        out.push(Witness::new(label, "literal", reduced.to_string(), field_difference(&literal, &reduced.apply(f), grade, d)));
    }
}

fn hopf_relations(d: u32) -> Vec<Witness> {
    let d = (d as i64).min(6);
    let mut out = Vec::new();
    hopf_witnesses(&phi_a(), 6, d, &mut out);
    hopf_witnesses(&psi_a(), 6, d, &mut out);
    hopf_witnesses(&phi_b(), 6, d, &mut out);
    hopf_witnesses(&vertex_field_a(Sign::Plus), 6, d, &mut out);
    hopf_witnesses(&vertex_field_a(Sign::Minus), 6, d, &mut out);
    hopf_witnesses(&vertex_field_b(), 6, d, &mut out);
    out
}

/// `Y(a, z)|0>` has no negative powers and its constant term is the state.
fn creation_witness<S: BasisState>(label: &str, f: &Field<S>, state: &FockVector<S>) -> Witness {
    let vac = FockVector::vacuum();
    let negative = (f.p_min(0)..0).find_map(|p| {
        let v = f.coefficient(p, &vac);
        (!v.is_zero()).then(|| Difference {
            monomial: format!("z^{p}"),
            left: v.to_string(),
            right: "0".into(),
        })
    });
    let at_zero = f.coefficient(0, &vac);
    let diff = negative.or_else(|| {
        (!at_zero.sub(state).is_zero()).then(|| Difference {
            monomial: "z^0".into(),
            left: at_zero.to_string(),
            right: state.to_string(),
        })
    });
    Witness::new(format!("{label} |0> at z = 0"), &at_zero, state, diff)
}

fn vacuum_creation() -> Vec<Witness> {
    use HopfGenerator::T;
    let mut out = Vec::new();
    let id_a = identity_field::<FermionStateA>();
    out.push(Witness::new("Id on energy2 <= 8", "Id", "Id", field_difference(&id_a, &id_a.with_convention(id_a.convention()), 8, 8)));
    for (label, f) in [("phi(z)", phi_a()), ("psi(z)", psi_a())] {
        let state = f.state().cloned().unwrap_or_default();
        out.push(creation_witness(&format!("A: {label}"), &f, &state));
    }
    let phi = phi_b();
    let state = phi.state().cloned().unwrap_or_default();
    out.push(creation_witness("B: phi(z)", &phi, &state));
    out.push(creation_witness("B: phi(-z)", &act_hopf(&[T], &phi), &state));
    for sign in [Sign::Plus, Sign::Minus] {
        let f = vertex_field_a(sign);
        let state = FockVector::basis(BosonStateA::new(sign.value(), Default::default()));
        out.push(creation_witness(&format!("A: {}", f.name()), &f, &state));
    }
    let e = vertex_field_b();
    let state = FockVector::basis(BosonStateB::new(true, Default::default()).expect("no variables"));
    out.push(creation_witness("B: e^{a}(z)", &e, &state));
    out.push(creation_witness("B: e^{a}(-z)", &act_hopf(&[T], &e), &state));
    out
}

/// Builds `c · Π atom^{e}` with exponents in `[-2, 2]` over `z, w, u`.
fn random_atom_product(rng: &mut ChaCha8Rng, abc: &Alphabet) -> RationalFn {
    let atoms = [
        PoleFactor::Var(0),
        PoleFactor::Var(1),
        PoleFactor::Var(2),
        PoleFactor::Diff(0, 1),
        PoleFactor::Diff(0, 2),
        PoleFactor::Diff(1, 2),
        PoleFactor::Sum(0, 1),
        PoleFactor::Sum(0, 2),
        PoleFactor::Sum(1, 2),
    ];
    let mut f = RationalFn::constant(abc, Rat::new(rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(1..=3)));
    for _ in 0..rng.gen_range(1..=3) {
        let atom = atoms[rng.gen_range(0..atoms.len())];
        let e: i32 = rng.gen_range(-2..=2);
        f = if e >= 0 {
            f.mul(&RationalFn::pole(abc, atom, e as u32))
        } else {
            f.mul_poly(&atom.as_poly(abc).pow((-e) as u32))
        };
    }
    f
}

fn random_antisymmetric(rng: &mut ChaCha8Rng, size: usize) -> Vec<Vec<Rat>> {
    let mut m = vec![vec![Rat::zero(); size]; size];
    for i in 0..size {
        for j in i + 1..size {
            let x = Rat::new(rng.gen_range(-6..=6), rng.gen_range(1..=3));
            m[j][i] = -x.clone();
            m[i][j] = x;
        }
    }
    m
}

/// Seeded sweeps of the kernel: `Pf^2 = det`, multiplicativity of `expand`,
/// inverses, and the text round trip.
fn kernel_properties(seed: u64) -> Result<Vec<Witness>> {
    const INSTANCES: usize = 100;
    const D: u32 = 4;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let abc = Alphabet::new(&["z", "w", "u"])?;
    let order = ["z", "w", "u"];
    let mut pf = None;
    let mut mult = None;
    let mut inverse = None;
    let mut text = None;
    for i in 0..INSTANCES {
        let m = random_antisymmetric(&mut rng, 2 + 2 * (i % 3));
        let p = pfaffian(&m, &Rat::one())?;
        let det = determinant(&m, &Rat::one())?;
        if pf.is_none() && &p * &p != det {
            pf = Some(Difference {
                monomial: format!("instance {i}"),
                left: (&p * &p).to_string(),
                right: det.to_string(),
            });
        }

        let f = random_atom_product(&mut rng, &abc);
        let g = random_atom_product(&mut rng, &abc);
        if mult.is_none() {
            let dd = product_cutoff(&f, &g, &order, D)?;
            let lhs = expand(&f, &order, dd)?.mul(&expand(&g, &order, dd)?, D)?;
            let rhs = expand(&f.mul(&g), &order, D)?;
            mult = lhs.first_difference(&rhs)?.map(|(e, a, b)| Difference {
                monomial: format!("instance {i}: {}", monomial_text(lhs.vars(), &e)),
                left: a.to_string(),
                right: b.to_string(),
            });
        }
        if inverse.is_none() {
            let inv = f.recip()?;
            let dd = product_cutoff(&f, &inv, &order, D)?;
            let lhs = expand(&f, &order, dd)?.mul(&expand(&inv, &order, dd)?, D)?;
            let one = LaurentSeries::from_terms(&order, D, [(vec![0, 0, 0], Rat::one())])?;
            inverse = lhs.first_difference(&one)?.map(|(e, a, b)| Difference {
                monomial: format!("instance {i}: {}", monomial_text(lhs.vars(), &e)),
                left: a.to_string(),
                right: b.to_string(),
            });
        }
        if text.is_none() {
            let printed = f.to_string();
            let parsed = RationalFn::parse(&printed, &abc)?;
            if parsed != f {
                text = Some(Difference {
                    monomial: format!("instance {i}"),
                    left: parsed.to_string(),
                    right: printed,
                });
            }
        }
    }
    let label = |s: &str| format!("{s}, {INSTANCES} instances");
    Ok(vec![
        Witness::new(label("Pf^2 vs det"), "Pf^2", "det", pf),
        Witness::new(label(&format!("expand(f) expand(g) vs expand(fg) at D = {D}")), "expand(f) expand(g)", "expand(fg)", mult),
        Witness::new(label(&format!("expand(f) expand(1/f) vs 1 at D = {D}")), "expand(f) expand(1/f)", "1", inverse),
        Witness::new(label("parse(print(f)) vs f"), "parse(print(f))", "f", text),
    ])
}
