//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints one PASS/FAIL line.

use std::collections::BTreeMap;
use std::error::Error;
use std::panic;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bfcorr::algebra::{determinant, expand, pfaffian, product_cutoff, Alphabet, LaurentSeries, MultiPoly, PoleFactor, Rat, RationalFn};
use bfcorr::boson::{boson_character_a, boson_character_b, BosonStateA, BosonStateB, Sign, XMonomial};
use bfcorr::correspondence::{analytic_continuation_check, closed_form, vev_boson, vev_fermion, ClosedFormKind, Model, Side, Symbol, VevSpec};
use bfcorr::fields::{apply_generator, identity_field, phi_a, phi_b, psi_a, vertex_field_a, vertex_field_b, Field, HopfGenerator};
use bfcorr::fock::{apply_mode_a, apply_mode_b, character_a, character_b, states_a, states_b, BasisState, FermionKind, FermionStateA, FermionStateB, FockVector};

type Outcome = Result<(), Box<dyn Error>>;
type Terms = BTreeMap<Vec<i32>, Rat>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+).into());
        }
    };
}

// ---------------------------------------------------------------------------
// Oracles

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<(Vec<usize>, i64)>) {
        if prefix.len() == n {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| prefix[i] > prefix[j]).count();
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for k in 0..n {
            if !prefix.contains(&k) {
                prefix.push(k);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

fn leibniz(m: &[Vec<Rat>]) -> Rat {
    permutations(m.len())
        .into_iter()
        .map(|(p, s)| p.iter().enumerate().fold(Rat::integer(s), |acc, (i, &j)| acc * &m[i][j]))
        .sum()
}

/// Perfect matchings of `items` with their Pfaffian signs.
fn matchings(items: &[usize]) -> Vec<(Vec<(usize, usize)>, i64)> {
    if items.is_empty() {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for t in 1..items.len() {
        let rest: Vec<usize> = items[1..].iter().copied().filter(|&x| x != items[t]).collect();
        let sign = if t % 2 == 1 { 1 } else { -1 };
        for (mut pairs, s) in matchings(&rest) {
            pairs.insert(0, (items[0], items[t]));
            out.push((pairs, sign * s));
        }
    }
    out
}

fn pf_by_matchings(m: &[Vec<Rat>]) -> Rat {
    let idx: Vec<usize> = (0..m.len()).collect();
    matchings(&idx)
        .into_iter()
        .map(|(pairs, s)| pairs.iter().fold(Rat::integer(s), |acc, &(i, j)| acc * &m[i][j]))
        .sum()
}

fn in_window(e: &[i32], d: i32) -> bool {
    let total: i32 = e.iter().sum();
    e.iter().all(|&x| x >= -d) && (-d..=d).contains(&total)
}

fn add_term(t: &mut Terms, e: Vec<i32>, c: Rat) {
    let slot = t.entry(e.clone()).or_insert_with(Rat::zero);
    *slot += &c;
    if slot.is_zero() {
        t.remove(&e);
    }
}

fn multiply(a: &Terms, b: &Terms, keep: impl Fn(&[i32]) -> bool) -> Terms {
    let mut out = Terms::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            if keep(&e) {
                add_term(&mut out, e, ca * cb);
            }
        }
    }
    out
}

fn unit(vars: usize) -> Terms {
    Terms::from([(vec![0; vars], Rat::one())])
}

/// `Σ_{k=0}^{top} c(k) x_a^{-k-shift} x_b^k`.
fn two_point(vars: usize, a: usize, b: usize, shift: i32, top: i32, c: impl Fn(i32) -> Rat) -> Terms {
    let mut t = Terms::new();
    for k in 0..=top {
        let mut e = vec![0; vars];
        e[a] = -k - shift;
        e[b] = k;
        add_term(&mut t, e, c(k));
    }
    t
}

fn compare(label: &str, left: &Terms, right: &LaurentSeries) -> Outcome {
    let right: Terms = right.terms().iter().filter(|(_, c)| !c.is_zero()).map(|(e, c)| (e.clone(), c.clone())).collect();
    if left == &right {
        return Ok(());
    }
    let e = left.keys().chain(right.keys()).find(|e| left.get(*e) != right.get(*e)).cloned().unwrap_or_default();
    let show = |t: &Terms| t.get(&e).map_or("0".to_string(), |c| c.to_string());
    Err(format!("{label}: first difference at {e:?}: {} vs {}", show(left), show(&right)).into())
}

fn partitions(d: u32, largest: u32, allowed: &dyn Fn(u32) -> bool) -> u64 {
    if d == 0 {
        return 1;
    }
    (1..=largest.min(d)).filter(|&k| allowed(k)).map(|k| partitions(d - k, k, allowed)).sum()
}

fn points(n: usize, offset: i64) -> Vec<Rat> {
    (0..n).map(|i| Rat::new(3 * i as i64 + offset, i as i64 + 2)).collect()
}

// ---------------------------------------------------------------------------
// Criteria

fn cauchy() -> Outcome {
    for n in 1..=4 {
        let det = closed_form(Model::A, ClosedFormKind::Determinant, n)?;
        let prod = closed_form(Model::A, ClosedFormKind::Product, n)?;
        ensure!(det.equals_cross(&prod)?, "n = {n}: {det} != {prod}");
        ensure!(det.clone().reduce() == prod.clone().reduce(), "n = {n}: reduced forms differ");
        for offset in [1, 5, 11] {
            let z = points(n, offset);
            let w: Vec<Rat> = points(n, offset + 1).into_iter().map(|x| -x).collect();
            let m: Vec<Vec<Rat>> = z.iter().map(|zi| w.iter().map(|wj| (zi - wj).recip()).collect()).collect();
            let oracle = leibniz(&m) * Rat::sign_power((n * (n - 1) / 2) as i64);
            let mut product = Rat::one();
            for i in 0..n {
                for j in 0..n {
                    if i < j {
                        product = product * (&z[i] - &z[j]) * (&w[i] - &w[j]);
                    }
                    product = product / (&z[i] - &w[j]);
                }
            }
            let at: Vec<Rat> = z.iter().chain(&w).cloned().collect();
            ensure!(oracle == product, "n = {n}: permutation sum {oracle} vs product {product}");
            ensure!(det.eval(&at)? == oracle, "n = {n}: determinant form disagrees with permutation sum");
            ensure!(prod.eval(&at)? == oracle, "n = {n}: product form disagrees with permutation sum");
        }
    }
    Ok(())
}

fn schur_pfaffian() -> Outcome {
    for n in 1..=3 {
        let pf = closed_form(Model::B, ClosedFormKind::Pfaffian, n)?;
        let prod = closed_form(Model::B, ClosedFormKind::Product, n)?;
        ensure!(pf.equals_cross(&prod)?, "2n = {}: {pf} != {prod}", 2 * n);
        ensure!(pf.clone().reduce() == prod.clone().reduce(), "2n = {}: reduced forms differ", 2 * n);
        for offset in [1, 4, 9] {
            let z = points(2 * n, offset);
            let m: Vec<Vec<Rat>> = z.iter().map(|a| z.iter().map(|b| (a - b) / (a + b)).collect()).collect();
            let oracle = pf_by_matchings(&m);
            let mut product = Rat::one();
            for i in 0..2 * n {
                for j in i + 1..2 * n {
                    product = product * &m[i][j];
                }
            }
            ensure!(oracle == product, "2n = {}: matching sum {oracle} vs product {product}", 2 * n);
            ensure!(pf.eval(&z)? == oracle, "2n = {}: Pfaffian form disagrees with matching sum", 2 * n);
        }
    }
    Ok(())
}

/// Wick: `(-1)^{n(n-1)/2} Σ_σ sgn σ Π_i <phi(z_i) psi(w_σi)>` with
/// `<phi_{-1-k} psi_k> = 1`.
fn charged_wick(n: usize, d: i32) -> Terms {
    let vars = 2 * n;
    let mut out = Terms::new();
    for (sigma, sign) in permutations(n) {
        let mut t = unit(vars);
        for (i, &j) in sigma.iter().enumerate() {
            t = multiply(&t, &two_point(vars, i, n + j, 1, d - 1, |_| Rat::one()), |e| e[i] >= -d);
        }
        let c = Rat::integer(sign) * Rat::sign_power((n * (n - 1) / 2) as i64);
        for (e, x) in t {
            add_term(&mut out, e, x * &c);
        }
    }
    out.retain(|e, _| in_window(e, d));
    out
}

fn determinant_vev() -> Outcome {
    const D: u32 = 8;
    for n in 1..=3 {
        let series = vev_fermion(&VevSpec::standard(Model::A, Side::Fermion, n, D))?;
        let expanded = expand(&closed_form(Model::A, ClosedFormKind::Determinant, n)?, series.vars(), D)?;
        let oracle = charged_wick(n, D as i32);
        compare(&format!("n = {n}, mode series vs Wick"), &oracle, &series)?;
        compare(&format!("n = {n}, expansion vs Wick"), &oracle, &expanded)?;
    }
    Ok(())
}

/// The product formula expanded factor by factor: a polynomial times
/// geometric series in `w_j / z_i`.
fn product_expansion(n: usize, d: i32) -> Terms {
    let vars = 2 * n;
    let floor = -(d + n as i32 - 1);
    let mut poly = unit(vars);
    for i in 0..n {
        for j in i + 1..n {
            for (a, b) in [(i, j), (n + i, n + j)] {
                let mut f = Terms::new();
                let mut ea = vec![0; vars];
                ea[a] = 1;
                let mut eb = vec![0; vars];
                eb[b] = 1;
                add_term(&mut f, ea, Rat::one());
                add_term(&mut f, eb, Rat::integer(-1));
                poly = multiply(&poly, &f, |_| true);
            }
        }
    }
    let mut series = unit(vars);
    for i in 0..n {
        for j in 0..n {
            series = multiply(&series, &two_point(vars, i, n + j, 1, -floor, |_| Rat::one()), |e| e[..n].iter().all(|&x| x >= floor));
        }
    }
    let mut out = multiply(&series, &poly, |e| in_window(e, d));
    out.retain(|_, c| !c.is_zero());
    out
}

fn product_vev() -> Outcome {
    const D: u32 = 8;
    for n in 1..=2 {
        let series = vev_boson(&VevSpec::standard(Model::A, Side::Boson, n, D))?;
        let expanded = expand(&closed_form(Model::A, ClosedFormKind::Product, n)?, series.vars(), D)?;
        let oracle = product_expansion(n, D as i32);
        compare(&format!("n = {n}, vertex operators vs direct expansion"), &oracle, &series)?;
        compare(&format!("n = {n}, expand vs direct expansion"), &oracle, &expanded)?;
    }
    Ok(())
}

/// Wick for the neutral fermion with `<phi_{-k} phi_k> = 2(-1)^k`, `k > 0`,
/// and `<phi_0 phi_0> = 1`.
fn neutral_wick(points: usize, d: i32) -> Terms {
    let idx: Vec<usize> = (0..points).collect();
    let mut out = Terms::new();
    for (pairs, sign) in matchings(&idx) {
        let mut t = unit(points);
        for &(a, b) in &pairs {
            let g = two_point(points, a, b, 0, d, |k| if k == 0 { Rat::one() } else { Rat::integer(2) * Rat::sign_power(k as i64) });
            t = multiply(&t, &g, |e| e[a] >= -d);
        }
        for (e, x) in t {
            add_term(&mut out, e, x * Rat::integer(sign));
        }
    }
    out.retain(|e, _| in_window(e, d));
    out
}

fn neutral_vev() -> Outcome {
    const D: u32 = 8;
    for n in 1..=2 {
        let fermion = vev_fermion(&VevSpec::standard(Model::B, Side::Fermion, n, D))?;
        let boson = vev_boson(&VevSpec::standard(Model::B, Side::Boson, n, D))?;
        let expanded = expand(&closed_form(Model::B, ClosedFormKind::Pfaffian, n)?, fermion.vars(), D)?;
        let oracle = neutral_wick(2 * n, D as i32);
        compare(&format!("2n = {}, fermion vs Wick", 2 * n), &oracle, &fermion)?;
        compare(&format!("2n = {}, boson vs Wick", 2 * n), &oracle, &boson)?;
        compare(&format!("2n = {}, expand(Pf) vs Wick", 2 * n), &oracle, &expanded)?;
    }
    Ok(())
}

fn top_index_a(v: &FockVector<FermionStateA>) -> i64 {
    v.terms().keys().flat_map(|s| s.phi().iter().chain(s.psi()).copied()).max().map_or(0, |m| m as i64)
}

/// `h_n = Σ_{i+j=-n-1} :phi_i psi_j:`, normal ordering by vacuum subtraction.
/// Terms with `|i|` beyond the largest occupied index plus `|n| + 1` vanish.
fn h_charged(n: i64, v: &FockVector<FermionStateA>) -> FockVector<FermionStateA> {
    let reach = top_index_a(v) + n.abs() + 2;
    let vacuum = FockVector::vacuum();
    let mut out = FockVector::zero();
    for i in -reach..=reach {
        let j = -n - 1 - i;
        out.add_assign(&apply_mode_a(FermionKind::Phi, i, &apply_mode_a(FermionKind::Psi, j, v)));
        let c = apply_mode_a(FermionKind::Phi, i, &apply_mode_a(FermionKind::Psi, j, &vacuum)).vacuum_component();
        if !c.is_zero() {
            out.add_scaled(v, &-c);
        }
    }
    out
}

/// `h_n = 1/4 Σ_{i+j=-n} (-1)^j :phi_i phi_j:`.
fn h_neutral(n: i64, v: &FockVector<FermionStateB>) -> FockVector<FermionStateB> {
    let top = v.terms().keys().flat_map(|s| s.indices().iter().copied()).max().map_or(0, |m| m as i64);
    let reach = top + n.abs() + 2;
    let vacuum = FockVector::vacuum();
    let mut out = FockVector::zero();
    for i in -reach..=reach {
        let j = -n - i;
        let sign = Rat::sign_power(j);
        out.add_scaled(&apply_mode_b(i, &apply_mode_b(j, v)), &sign);
        let c = apply_mode_b(i, &apply_mode_b(j, &vacuum)).vacuum_component();
        if !c.is_zero() {
            out.add_scaled(v, &-(c * sign));
        }
    }
    out.scale(&Rat::new(1, 4))
}

fn heisenberg() -> Outcome {
    let charged: Vec<FermionStateA> = (-3..=3).flat_map(|c| states_a(c, 12)).collect();
    for s in &charged {
        let v = FockVector::basis(s.clone());
        let h: Vec<FockVector<FermionStateA>> = (-5..=5).map(|n| h_charged(n, &v)).collect();
        for m in -5..=5i64 {
            for n in -5..=5i64 {
                let bracket = h_charged(m, &h[(n + 5) as usize]).sub(&h_charged(n, &h[(m + 5) as usize]));
                let expected = if m + n == 0 { v.scale(&Rat::integer(m)) } else { FockVector::zero() };
                ensure!(bracket.sub(&expected).is_zero(), "A: [h_{m}, h_{n}] on {s} is {bracket}");
            }
        }
    }
    let odd: Vec<i64> = (-7..=7).filter(|n: &i64| n.rem_euclid(2) == 1).collect();
    for s in states_b(10) {
        let v = FockVector::basis(s.clone());
        for n in (-8..=8).filter(|n: &i64| n.rem_euclid(2) == 0) {
            let h = h_neutral(n, &v);
            ensure!(h.is_zero(), "B: h_{n} on {s} is {h}");
        }
        for &m in &odd {
            for &n in &odd {
                let bracket = h_neutral(m, &h_neutral(n, &v)).sub(&h_neutral(n, &h_neutral(m, &v)));
                let expected = if m + n == 0 { v.scale(&Rat::new(m, 2)) } else { FockVector::zero() };
                ensure!(bracket.sub(&expected).is_zero(), "B: [h_{m}, h_{n}] on {s} is {bracket}");
            }
        }
    }
    Ok(())
}

fn ope_residues() -> Outcome {
    const D: u32 = 8;
    let abc = Alphabet::new(&["z", "w"])?;
    let (z, w) = (0, 1);
    let at = |wv: i64| vec![Rat::integer(7), Rat::integer(wv)];

    let fa = RationalFn::inverse_difference(&abc, z, w);
    let spec = VevSpec { model: Model::A, side: Side::Fermion, word: vec![(Symbol::Phi, "z".into()), (Symbol::Psi, "w".into())], cutoff: D };
    ensure!(analytic_continuation_check(&vev_fermion(&spec)?, &fa)?, "A: 2-point series is not 1/(z-w)");
    let res = fa.residue_at(z, 1, w, 0)?;
    for wv in [1, 2, 5] {
        ensure!(res.eval(&at(wv))? == Rat::one(), "A: Res_(z=w) is {res}");
    }

    let fb = RationalFn::pole(&abc, PoleFactor::sum(z, w), 1).mul_poly(&MultiPoly::linear(&abc, z, -1, w));
    let spec = VevSpec { model: Model::B, side: Side::Fermion, word: vec![(Symbol::Phi, "z".into()), (Symbol::Phi, "w".into())], cutoff: D };
    ensure!(analytic_continuation_check(&vev_fermion(&spec)?, &fb)?, "B: 2-point series is not (z-w)/(z+w)");
    let res = fb.residue_at(z, -1, w, 0)?;
    let shifted = res.mul(&RationalFn::pole(&abc, PoleFactor::Var(w), 1));
    for wv in [1, 2, 5] {
        // (z - w) at z = -w.
        ensure!(res.eval(&at(wv))? == Rat::integer(-2 * wv), "B: Res_(z=-w) is {res}");
        ensure!(shifted.eval(&at(wv))? == Rat::integer(-2), "B: w^-1 Res_(z=-w) is {shifted}");
    }
    ensure!(shifted.used_vars().is_empty(), "B: shifted residue {shifted} is not constant");

    // Res_z [phi(z), phi(w)] = Σ_n {phi_{-1}, phi_n} w^n = -2w.
    for s in states_b(8) {
        let v = FockVector::basis(s.clone());
        for n in -(D as i64)..=D as i64 {
            let anti = apply_mode_b(-1, &apply_mode_b(n, &v)).add(&apply_mode_b(n, &apply_mode_b(-1, &v)));
            let expected = if n == 1 { v.scale(&Rat::integer(-2)) } else { FockVector::zero() };
            ensure!(anti.sub(&expected).is_zero(), "B: {{phi_-1, phi_{n}}} on {s} is {anti}");
        }
    }
    Ok(())
}

fn characters() -> Outcome {
    let fermion = character_a(0, 24);
    let boson = boson_character_a(0, 24);
    for d in 0..=12u32 {
        let p = partitions(d, d, &|_| true) as usize;
        let at = |c: &[(i64, usize)]| c.iter().find(|(e, _)| *e == 2 * d as i64).map(|x| x.1);
        ensure!(at(&fermion) == Some(p), "A fermion level {d}: {:?} vs p = {p}", at(&fermion));
        ensure!(at(&boson) == Some(p), "A boson level {d}: {:?} vs p = {p}", at(&boson));
    }
    let fermion = character_b(20);
    let boson = boson_character_b(20);
    for d in 0..=20u32 {
        let q = 2 * partitions(d, d, &|k| k % 2 == 1) as usize;
        ensure!(fermion.get(d as usize) == Some(&(d as i64, q)), "B fermion degree {d}: {:?} vs {q}", fermion.get(d as usize));
        ensure!(boson.get(d as usize) == Some(&(d as i64, q)), "B boson degree {d}: {:?} vs {q}", boson.get(d as usize));
    }
    Ok(())
}

/// `(D T a)_p = -(T D a)_p`, `(T T a)_p = a_p`, and both generators
/// against their mode formulas.
fn hopf<S: BasisState>(a: &Field<S>, grade: i64, reach: i64) -> Outcome {
    use HopfGenerator::{D, T};
    let (d, t) = (apply_generator(D, a), apply_generator(T, a));
    let (dt, td, tt) = (apply_generator(D, &t), apply_generator(T, &d), apply_generator(T, &t));
    for s in S::basis_up_to(grade) {
        let v = FockVector::basis(s.clone());
        for p in -reach..=reach {
            let ap = a.coefficient(p, &v);
            ensure!(t.coefficient(p, &v) == ap.scale(&Rat::sign_power(p)), "{}: T at z^{p} on {s}", a.name());
            ensure!(d.coefficient(p, &v) == a.coefficient(p + 1, &v).scale(&Rat::integer(p + 1)), "{}: D at z^{p} on {s}", a.name());
            ensure!(dt.coefficient(p, &v) == td.coefficient(p, &v).scale(&Rat::integer(-1)), "{}: DT != -TD at z^{p} on {s}", a.name());
            ensure!(tt.coefficient(p, &v) == ap, "{}: TT != 1 at z^{p} on {s}", a.name());
        }
    }
    Ok(())
}

fn dual_orderings(model: Model, side: Side, second: Symbol, f: &RationalFn) -> Outcome {
    const D: u32 = 8;
    let forward = VevSpec { model, side, word: vec![(Symbol::Phi, "z".into()), (second, "w".into())], cutoff: D };
    let backward = VevSpec { word: vec![(second, "w".into()), (Symbol::Phi, "z".into())], ..forward.clone() };
    let run = |s: &VevSpec| match side {
        Side::Fermion => vev_fermion(s),
        Side::Boson => vev_boson(s),
    };
    ensure!(analytic_continuation_check(&run(&forward)?, f)?, "{model} {side:?}: z,w ordering is not {f}");
    ensure!(analytic_continuation_check(&run(&backward)?, &f.neg())?, "{model} {side:?}: w,z ordering is not -({f})");
    Ok(())
}

fn creation<S: BasisState>(a: &Field<S>, state: S) -> Outcome {
    let vacuum = FockVector::vacuum();
    for p in -8..0 {
        let c = a.coefficient(p, &vacuum);
        ensure!(c.is_zero(), "{}: z^{p} on |0> is {c}", a.name());
    }
    let c = a.coefficient(0, &vacuum);
    ensure!(c == FockVector::basis(state), "{}: z^0 on |0> is {c}", a.name());
    Ok(())
}

fn axioms() -> Outcome {
    use HopfGenerator::T;
    hopf(&phi_a(), 6, 6)?;
    hopf(&psi_a(), 6, 6)?;
    hopf(&phi_b(), 6, 6)?;
    hopf(&vertex_field_a(Sign::Plus), 6, 6)?;
    hopf(&vertex_field_a(Sign::Minus), 6, 6)?;
    hopf(&vertex_field_b(), 6, 6)?;

    let abc = Alphabet::new(&["z", "w"])?;
    let fa = RationalFn::inverse_difference(&abc, 0, 1);
    let fb = RationalFn::pole(&abc, PoleFactor::sum(0, 1), 1).mul_poly(&MultiPoly::linear(&abc, 0, -1, 1));
    for side in [Side::Fermion, Side::Boson] {
        dual_orderings(Model::A, side, Symbol::Psi, &fa)?;
        dual_orderings(Model::B, side, Symbol::Phi, &fb)?;
    }

    let id = identity_field::<FermionStateA>();
    for s in FermionStateA::basis_up_to(8) {
        let v = FockVector::basis(s.clone());
        for p in -8..=8 {
            let expected = if p == 0 { v.clone() } else { FockVector::zero() };
            ensure!(id.coefficient(p, &v) == expected, "Id at z^{p} on {s}");
        }
    }
    let one = XMonomial::one();
    creation(&phi_a(), FermionStateA::new(vec![0], vec![]).unwrap())?;
    creation(&psi_a(), FermionStateA::new(vec![], vec![0]).unwrap())?;
    creation(&phi_b(), FermionStateB::new(vec![0]).unwrap())?;
    creation(&apply_generator(T, &phi_b()), FermionStateB::new(vec![0]).unwrap())?;
    creation(&vertex_field_a(Sign::Plus), BosonStateA::new(1, one.clone()))?;
    creation(&vertex_field_a(Sign::Minus), BosonStateA::new(-1, one.clone()))?;
    creation(&vertex_field_b(), BosonStateB::new(true, one.clone()).unwrap())?;
    creation(&apply_generator(T, &vertex_field_b()), BosonStateB::new(true, one).unwrap())?;
    Ok(())
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    Rat::new(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

fn random_rational(rng: &mut ChaCha8Rng, abc: &Alphabet) -> RationalFn {
    let atoms = [
        PoleFactor::Var(0),
        PoleFactor::Var(1),
        PoleFactor::Var(2),
        PoleFactor::Diff(0, 1),
        PoleFactor::Diff(1, 2),
        PoleFactor::Diff(0, 2),
        PoleFactor::Sum(0, 1),
        PoleFactor::Sum(0, 2),
    ];
    let mut f = RationalFn::constant(abc, Rat::new(rng.gen_range(1..=6), rng.gen_range(1..=3)));
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

fn kernels() -> Outcome {
    const INSTANCES: usize = 100;
    const D: u32 = 4;
    let mut rng = ChaCha8Rng::seed_from_u64(20_250_101);
    let abc = Alphabet::new(&["z", "w", "u"])?;
    let order = ["z", "w", "u"];
    for i in 0..INSTANCES {
        let size = 2 + 2 * (i % 3);
        let mut m = vec![vec![Rat::zero(); size]; size];
        for r in 0..size {
            for c in r + 1..size {
                m[r][c] = random_rat(&mut rng);
                m[c][r] = -&m[r][c];
            }
        }
        let pf = pfaffian(&m, &Rat::one())?;
        ensure!(&pf * &pf == determinant(&m, &Rat::one())?, "instance {i}: Pf^2 != det");
        ensure!(pf == pf_by_matchings(&m), "instance {i}: Pfaffian vs matching sum");

        let n = 1 + i % 3;
        let sq: Vec<Vec<Rat>> = (0..n).map(|_| (0..n).map(|_| random_rat(&mut rng)).collect()).collect();
        ensure!(determinant(&sq, &Rat::one())? == leibniz(&sq), "instance {i}: det vs permutation sum");

        let f = random_rational(&mut rng, &abc);
        let g = random_rational(&mut rng, &abc);
        let dd = product_cutoff(&f, &g, &order, D)?;
        let lhs = expand(&f, &order, dd)?.mul(&expand(&g, &order, dd)?, D)?;
        let rhs = expand(&f.mul(&g), &order, D)?;
        ensure!(lhs.first_difference(&rhs)?.is_none(), "instance {i}: expand({f}) expand({g}) != expand(fg)");
    }
    Ok(())
}

// ---------------------------------------------------------------------------

type Criterion = (&'static str, f64, fn() -> Outcome);

const CRITERIA: [Criterion; 10] = [
    ("Cauchy determinant = product, n = 1..4", 5.0, cauchy),
    ("Schur Pfaffian = product, 2n = 2, 4, 6", 5.0, schur_pfaffian),
    ("charged fermion VEV = expand(det), n = 1..3, D = 8", 30.0, determinant_vev),
    ("lattice vertex VEV = expand(product), n = 1, 2, D = 8", 30.0, product_vev),
    ("neutral fermion = twisted boson = expand(Pf), 2n = 2, 4, D = 8", 60.0, neutral_vev),
    ("Heisenberg brackets from fermion bilinears", 60.0, heisenberg),
    ("OPE residues and the w^-1 shift", 1.0, ope_residues),
    ("graded dimensions vs partition counts", 5.0, characters),
    ("Hopf relations, supercommutativity, vacuum and creation", 10.0, axioms),
    ("Pf^2 = det, det = permutation sum, expand multiplicative", 10.0, kernels),
];

fn main() {
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, budget, run)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()).into())
        });
        let secs = start.elapsed().as_secs_f64();
        let outcome = outcome.and_then(|()| {
            if secs > *budget {
                Err(format!("took {secs:.2} s, limit {budget} s").into())
            } else {
                Ok(())
            }
        });
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({secs:.2} s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
