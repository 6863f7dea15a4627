//! The bundled verification suite.
//!
//! Each check returns a [`CheckResult`]. `sv verify` and the `acceptance`
//! test target both run [`run_verify`]; individual checks are public so tests
//! can drive them one at a time.

use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::lie::{bracket_with, Family, Generator, HalfInteger, LieElement, StructureConstants, Sv};
use crate::module::{act, act_gen, act_lie, dot_act, z_element, BasisIndex, ModuleSpec, ModuleVector, WhittakerHom};
use crate::partition::{self, Pseudopartition};
use crate::pbw::{multiply, normal_form, normal_form_in, PbwOrder, PbwWord, UeaElement};
use crate::rational::{frac, int, Rational};
use crate::solver::{
    generators_up_to, in_span, nilpotency_index, singular_vectors, span_touches_cyclic, submodule_closure,
    typed_whittaker_vectors, whittaker_vectors, Truncation, SV_PLUS_GENERATORS,
};

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    /// The mathematical statement being checked.
    pub claim: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub truncation: Truncation,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// One line per check. Timings are appended only when asked for, so the
    /// default output is byte-identical across runs.
    pub fn render_text(&self, timings: bool) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = write!(s, "[{status}] {:<32} {}", c.name, c.detail);
            if timings {
                let _ = write!(s, " ({} ms)", c.elapsed_ms);
            }
            let _ = writeln!(s);
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(s, "{passed}/{} checks passed", self.checks.len());
        s
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub truncation: Truncation,
    pub seed: u64,
    /// Negative control: run the Lie-axiom check against a broken table.
    pub corrupt_relations: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { truncation: Truncation::uniform(3, 3, 3), seed: 0, corrupt_relations: false }
    }
}

/// The sv relations with the `[L, Y]` coefficient perturbed.
#[derive(Debug, Clone, Copy, Default)]
pub struct CorruptedSv;

impl StructureConstants for CorruptedSv {
    fn bracket_gen(&self, a: Generator, b: Generator) -> LieElement {
        match (a.family, b.family) {
            (Family::L, Family::Y) => {
                LieElement::term(Generator::y(a.index + b.index), frac(2 * b.index + 1 + a.index, 2))
            }
            (Family::Y, Family::L) => {
                LieElement::term(Generator::y(a.index + b.index), frac(-(2 * a.index + 1 + b.index), 2))
            }
            _ => Sv.bracket_gen(a, b),
        }
    }
}

fn timed(name: &str, claim: &str, f: impl FnOnce() -> Result<String, String>) -> CheckResult {
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckResult { name: name.into(), claim: claim.into(), passed, detail, elapsed_ms: start.elapsed().as_millis() }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// The nine nonsingular homomorphisms: `m1 ∈ {1, 2, -3/5}` crossed with
/// `(η1, η2, η3) ∈ {(0,0,0), (1,0,0), (1,2,3)}`.
pub fn nonsingular_family() -> Vec<WhittakerHom> {
    let mut out = Vec::new();
    for m1 in [int(1), int(2), frac(-3, 5)] {
        for (a, b, c) in [(0, 0, 0), (1, 0, 0), (1, 2, 3)] {
            out.push(WhittakerHom::new(int(a), int(b), m1.clone(), int(c)));
        }
    }
    out
}

/// The four singular cases used for z-elements: `(η1, η2, η3)` with `m1 = 0`.
pub fn singular_family() -> Vec<WhittakerHom> {
    [(0, 0, 0), (0, 1, 0), (0, 0, 1), (2, 0, 0)]
        .into_iter()
        .map(|(a, b, c)| WhittakerHom::new(int(a), int(b), int(0), int(c)))
        .collect()
}

fn all_generators(bound: i64) -> Vec<Generator> {
    let mut v = Vec::new();
    for f in [Family::L, Family::M, Family::Y] {
        for n in -bound..=bound {
            v.push(Generator::new(f, n));
        }
    }
    v
}

fn psi_label(psi: &WhittakerHom) -> String {
    format!("({psi})")
}

// ---------------------------------------------------------------------------
// 1. Lie axioms

pub fn check_lie_axioms(table: &dyn StructureConstants) -> CheckResult {
    timed("lie-axioms", "antisymmetry and Jacobi identity on all triples with |index| <= 4", || {
        let gens = all_generators(4);
        let elems: Vec<LieElement> = gens.iter().map(|g| LieElement::from(*g)).collect();
        for (a, ea) in gens.iter().zip(&elems) {
            for (b, eb) in gens.iter().zip(&elems) {
                let s = &bracket_with(table, ea, eb) + &bracket_with(table, eb, ea);
                ensure(s.is_zero(), || format!("antisymmetry fails at ({a}, {b})"))?;
            }
        }
        let mut triples = 0;
        for (a, ea) in gens.iter().zip(&elems) {
            for (b, eb) in gens.iter().zip(&elems) {
                let ab = bracket_with(table, ea, eb);
                for (c, ec) in gens.iter().zip(&elems) {
                    let j = &(&bracket_with(table, ea, &bracket_with(table, eb, ec))
                        + &bracket_with(table, eb, &bracket_with(table, ec, ea)))
                        + &bracket_with(table, ec, &ab);
                    ensure(j.is_zero(), || format!("Jacobi fails at ({a}, {b}, {c}): {j}"))?;
                    triples += 1;
                }
            }
        }
        Ok(format!("{triples} triples"))
    })
}

// ---------------------------------------------------------------------------
// 2. Closed form for M_m L_{-k}^a

/// `Σ_i (-1)^i (Π_{j<i} (m - jk)) C(a, i) L_{-k}^{a-i} M_{m-ik}`, built term
/// by term from the formula and normalized word by word.
pub fn m_past_l_power_closed_form(m: i64, k: i64, a: u32) -> UeaElement {
    let mut out = UeaElement::zero();
    let mut binom = BigInt::one();
    let mut prod = BigInt::one();
    for i in 0..=a {
        if i > 0 {
            binom = binom * BigInt::from(a - i + 1) / BigInt::from(i);
            prod *= BigInt::from(m - (i as i64 - 1) * k);
        }
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let c = Rational::from_integer(BigInt::from(sign) * &prod * &binom);
        if c.is_zero() {
            continue;
        }
        let mut word = vec![Generator::l(-k); (a - i) as usize];
        word.push(Generator::m(m - i as i64 * k));
        out.add_scaled(&normal_form(&word, &int(1)), &c);
    }
    out
}

pub fn check_m_past_l_closed_form() -> CheckResult {
    timed("closed-form-M-L-power", "M_m L_{-k}^a closed form, 1<=m<=4, 0<=k<=3, 1<=a<=4", || {
        let mut n = 0;
        for m in 1..=4 {
            for k in 0..=3 {
                for a in 1..=4u32 {
                    let lhs =
                        multiply(&UeaElement::generator(Generator::m(m)), &UeaElement::power(Generator::l(-k), a));
                    let rhs = m_past_l_power_closed_form(m, k, a);
                    ensure(lhs == rhs, || format!("mismatch at m={m}, k={k}, a={a}: {lhs} vs {rhs}"))?;
                    n += 1;
                }
            }
        }
        Ok(format!("{n} instances"))
    })
}

// ---------------------------------------------------------------------------
// 3. Commutation shapes

/// A triangular-order word split into its `U(b-)` and raising parts.
struct Split {
    lower: Vec<Generator>,
    raise: Vec<Generator>,
}

fn split(word: &PbwWord) -> Split {
    let all = word.expand();
    let cut = all.iter().position(|g| g.is_raising()).unwrap_or(all.len());
    Split { lower: all[..cut].to_vec(), raise: all[cut..].to_vec() }
}

fn only(gens: &[Generator], fams: &[Family]) -> bool {
    gens.iter().all(|g| fams.contains(&g.family))
}

fn count_family(gens: &[Generator], f: Family) -> usize {
    gens.iter().filter(|g| g.family == f).count()
}

fn zero_modes(gens: &[Generator]) -> usize {
    gens.iter().filter(|g| **g == Generator::l(0)).count()
}

/// Which commutation identity an instance belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeIdentity {
    /// `M_m L_{-λ̃}`
    MPastL,
    /// `Y_{1/2+n} L_{-λ̃}`
    YPastL,
    /// `Y_{1/2+n} Y_{-1/2-ν̃}`
    YPastY,
    /// `L_n L_{-λ̃}`
    LPastL,
    /// `L_n M_{-μ}`
    LPastM,
    /// `L_n Y_{-1/2-ν̃}`
    LPastY,
}

/// Checks the expansion of `raising · lowering` against the term shapes of
/// its commutation identity. Returns a description of the first violation.
pub fn check_shape(id: ShapeIdentity, raising: Generator, lowering: &[Generator]) -> Result<(), String> {
    let mut word = vec![raising];
    word.extend_from_slice(lowering);
    let lhs_weight: HalfInteger = word.iter().map(|g| g.weight()).sum();
    let nf = normal_form_in(PbwOrder::Triangular, &word, &int(1));
    // leading term: the lowering word followed by the raising generator
    let mut lead = normal_form_in(PbwOrder::Triangular, lowering, &int(1));
    ensure(lead.len() == 1, || "lowering word is not a single PBW word".into())?;
    let (lead_word, _) = lead.iter().next().map(|(w, c)| (w.clone(), c.clone())).expect("one term");
    let mut lead_factors = lead_word.expand();
    lead_factors.push(raising);
    lead = normal_form_in(PbwOrder::Triangular, &lead_factors, &int(1));
    ensure(lead.len() == 1 && nf.coeff(lead.iter().next().unwrap().0).is_one(), || {
        format!("leading term missing in {raising}·{lowering:?}")
    })?;
    let rest = &nf - &lead;
    let l0 = zero_modes(lowering);
    for (w, _) in rest.iter() {
        ensure(w.weight() == lhs_weight, || format!("weight mismatch in term {w}"))?;
        let s = split(w);
        let ok = match id {
            ShapeIdentity::MPastL => {
                let m = raising.index;
                match s.raise.as_slice() {
                    [] => count_family(&s.lower, Family::M) == 1 && only(&s.lower, &[Family::M, Family::L]),
                    [g] => {
                        g.family == Family::M
                            && (1..=m).contains(&g.index)
                            && only(&s.lower, &[Family::L])
                            && (g.index < m || zero_modes(&s.lower) < l0)
                    }
                    _ => false,
                }
            }
            ShapeIdentity::YPastL => {
                let n = raising.index;
                match s.raise.as_slice() {
                    [] => count_family(&s.lower, Family::Y) == 1 && only(&s.lower, &[Family::Y, Family::L]),
                    [g] => {
                        g.family == Family::Y
                            && (0..=n).contains(&g.index)
                            && only(&s.lower, &[Family::L])
                            && (g.index < n || zero_modes(&s.lower) < l0)
                    }
                    _ => false,
                }
            }
            ShapeIdentity::YPastY => {
                let n = raising.index;
                let all: Vec<Generator> = s.lower.iter().chain(&s.raise).copied().collect();
                let ms: Vec<&Generator> = all.iter().filter(|g| g.family == Family::M).collect();
                only(&all, &[Family::M, Family::Y])
                    && ms.len() == 1
                    && ms[0].index <= n
                    && count_family(&all, Family::Y) + 1 == lowering.len()
                    && s.raise.iter().all(|g| g.family == Family::M)
            }
            ShapeIdentity::LPastL => {
                let n = raising.index;
                only(&s.lower, &[Family::L])
                    && match s.raise.as_slice() {
                        [] => true,
                        [g] => g.family == Family::L && g.index <= n && (g.index < n || zero_modes(&s.lower) < l0),
                        _ => false,
                    }
            }
            ShapeIdentity::LPastM => {
                let n = raising.index;
                only(&s.lower, &[Family::M])
                    && match s.raise.as_slice() {
                        [] => true,
                        [g] => g.family == Family::M && g.index < n,
                        _ => false,
                    }
            }
            ShapeIdentity::LPastY => {
                let n = raising.index;
                let all: Vec<Generator> = s.lower.iter().chain(&s.raise).copied().collect();
                let ms: Vec<&Generator> = all.iter().filter(|g| g.family == Family::M).collect();
                only(&all, &[Family::M, Family::Y])
                    && ms.len() <= 1
                    && ms.iter().all(|g| g.index < n)
                    && match s.raise.as_slice() {
                        [] => true,
                        [g] if g.family == Family::Y => g.index < n && ms.is_empty(),
                        [g] if g.family == Family::M => true,
                        _ => false,
                    }
            }
        };
        ensure(ok, || format!("{id:?}: term {w} of {raising}·{lowering:?} has the wrong shape"))?;
    }
    Ok(())
}

fn lowering_l(p: &Pseudopartition) -> Vec<Generator> {
    p.exponents().rev().flat_map(|(k, e)| std::iter::repeat_n(Generator::l(-(k as i64)), e as usize)).collect()
}

fn lowering_m(p: &Pseudopartition) -> Vec<Generator> {
    p.exponents().rev().flat_map(|(k, e)| std::iter::repeat_n(Generator::m(-(k as i64)), e as usize)).collect()
}

fn lowering_y(p: &Pseudopartition) -> Vec<Generator> {
    p.exponents().rev().flat_map(|(k, e)| std::iter::repeat_n(Generator::y(-(k as i64) - 1), e as usize)).collect()
}

/// Pseudopartitions with `|λ̃| + λ(0) <= budget` (each `L_0` counts one).
fn pseudo_with_zero_cost(budget: u64) -> Vec<Pseudopartition> {
    let mut out = Vec::new();
    for p in partition::enumerate(1, budget, budget, |k| k) {
        for z in 0..=(budget - p.size()) {
            let mut q = p.clone();
            q.push(0, z as u32);
            out.push(q);
        }
    }
    out
}

/// All instances of the six identities with total degree at most `max_degree`.
pub fn shape_instances(max_degree: u64) -> Vec<(ShapeIdentity, Generator, Vec<Generator>)> {
    let d = max_degree;
    let mut out = Vec::new();
    for m in 1..=d {
        for lam in pseudo_with_zero_cost(d - m) {
            out.push((ShapeIdentity::MPastL, Generator::m(m as i64), lowering_l(&lam)));
            out.push((ShapeIdentity::LPastL, Generator::l(m as i64), lowering_l(&lam)));
        }
        for mu in partition::enumerate(1, d - m, d - m, |k| k) {
            out.push((ShapeIdentity::LPastM, Generator::l(m as i64), lowering_m(&mu)));
        }
    }
    // Y_{1/2+n} has weight n + 1/2; count it as n + 1 toward the degree.
    for n in 0..d {
        for lam in pseudo_with_zero_cost(d - n - 1) {
            out.push((ShapeIdentity::YPastL, Generator::y(n as i64), lowering_l(&lam)));
        }
    }
    // doubled budgets for the Y-strings: |1/2 + ν̃| <= d - weight(raising)
    for n in 0..d {
        let budget = 2 * d - (2 * n + 1);
        for nu in partition::enumerate(0, budget / 2, budget, |k| 2 * k + 1) {
            out.push((ShapeIdentity::YPastY, Generator::y(n as i64), lowering_y(&nu)));
        }
    }
    for n in 1..=d {
        let budget = 2 * (d - n);
        for nu in partition::enumerate(0, budget / 2, budget, |k| 2 * k + 1) {
            out.push((ShapeIdentity::LPastY, Generator::l(n as i64), lowering_y(&nu)));
        }
    }
    out
}

pub fn check_commutation_shapes(max_degree: u64) -> CheckResult {
    timed("commutation-shapes", "term shapes of raising-past-lowering expansions, total degree <= 5", || {
        let inst = shape_instances(max_degree);
        for (id, g, low) in &inst {
            check_shape(*id, *g, low)?;
        }
        Ok(format!("{} instances", inst.len()))
    })
}

// ---------------------------------------------------------------------------
// 4-7. Whittaker vector classification at window level

fn basis_vec(k: u32, l0: u32) -> ModuleVector {
    let mut b = BasisIndex::cyclic();
    b.k = k;
    b.lambda.push(0, l0);
    ModuleVector::basis(b)
}

/// The solver's span equals the span of `expected` (given as independent vectors).
fn same_span(found: &[ModuleVector], expected: &[ModuleVector]) -> bool {
    found.len() == expected.len() && expected.iter().all(|v| in_span(found, v))
}

pub fn check_nonsingular_universal(t: &Truncation) -> CheckResult {
    timed("whittaker-universal-nonsingular", "Whittaker vectors of W_psi, psi nonsingular, are C[M_0]w", || {
        let expected: Vec<ModuleVector> = (0..=t.m0).map(|k| basis_vec(k, 0)).collect();
        for psi in nonsingular_family() {
            let r = whittaker_vectors(&ModuleSpec::universal(psi.clone()), t).map_err(|e| e.to_string())?;
            ensure(same_span(&r.basis, &expected), || {
                format!("psi {}: dim {} (expected {})", psi_label(&psi), r.dimension, expected.len())
            })?;
        }
        Ok(format!("9 homomorphisms, dim {} each", expected.len()))
    })
}

pub fn check_nonsingular_quotient(t: &Truncation) -> CheckResult {
    timed("whittaker-quotient-nonsingular", "Whittaker vectors of L_{psi,xi}, psi nonsingular, are C w-bar", || {
        let expected = vec![ModuleVector::cyclic()];
        let mut n = 0;
        for psi in nonsingular_family() {
            for xi in [int(0), int(1), int(-2)] {
                let r =
                    whittaker_vectors(&ModuleSpec::quotient(psi.clone(), xi.clone()), t).map_err(|e| e.to_string())?;
                ensure(same_span(&r.basis, &expected), || {
                    format!("psi {} xi {xi}: dim {}", psi_label(&psi), r.dimension)
                })?;
                n += 1;
            }
        }
        Ok(format!("{n} modules, dim 1 each"))
    })
}

pub fn check_type_rigidity(t: &Truncation) -> CheckResult {
    timed("type-rigidity", "W_psi, psi nonsingular, has no Whittaker vectors of another type", || {
        let mut n = 0;
        for psi in nonsingular_family() {
            let spec = ModuleSpec::universal(psi.clone());
            for g in [Generator::l(1), Generator::l(2), Generator::m(1), Generator::y(0)] {
                let other = psi.with_value(g, psi.value(g) + int(1)).expect("generator of sv+");
                let r = typed_whittaker_vectors(&spec, &other, t).map_err(|e| e.to_string())?;
                ensure(r.dimension == 0, || format!("psi {} perturbed at {g}: dim {}", psi_label(&psi), r.dimension))?;
                n += 1;
            }
        }
        Ok(format!("{n} perturbations, all dim 0"))
    })
}

pub fn check_trivial_psi(t: &Truncation) -> CheckResult {
    timed(
        "whittaker-trivial-psi",
        "psi = 0: Whittaker vectors are C[L_0,M_0]w in W_psi and C[L_0]w-bar in L_{psi,xi}",
        || {
            let expected: Vec<ModuleVector> =
                (0..=t.m0).flat_map(|k| (0..=t.l0).map(move |a| basis_vec(k, a))).collect();
            let r = whittaker_vectors(&ModuleSpec::universal(WhittakerHom::zero()), t).map_err(|e| e.to_string())?;
            ensure(same_span(&r.basis, &expected), || {
                format!("W_0: dim {} (expected {})", r.dimension, expected.len())
            })?;
            let expected_q: Vec<ModuleVector> = (0..=t.l0).map(|a| basis_vec(0, a)).collect();
            for xi in [int(1), int(-2)] {
                let r = whittaker_vectors(&ModuleSpec::quotient(WhittakerHom::zero(), xi.clone()), t)
                    .map_err(|e| e.to_string())?;
                ensure(same_span(&r.basis, &expected_q), || {
                    format!("L_(0,{xi}): dim {} (expected {})", r.dimension, expected_q.len())
                })?;
            }
            Ok(format!("W_0 dim {}, L_(0,xi) dim {}", expected.len(), expected_q.len()))
        },
    )
}

// ---------------------------------------------------------------------------
// 8. z-elements give Whittaker vectors

pub fn check_z_elements() -> CheckResult {
    timed("z-element-whittaker", "z w and z w-bar are Whittaker vectors for singular psi", || {
        let mut n = 0;
        for psi in singular_family() {
            let spec = ModuleSpec::universal(psi.clone());
            let z = z_element(&psi, None).map_err(|e| e.to_string())?;
            let v = act(&z, &ModuleVector::cyclic(), &spec);
            for g in SV_PLUS_GENERATORS {
                let out = dot_act(g, &v, &spec).map_err(|e| e.to_string())?;
                ensure(out.is_zero(), || format!("psi {}: {g}·(z w) = {out}", psi_label(&psi)))?;
                n += 1;
            }
            for xi in [int(1), int(3)] {
                let spec = ModuleSpec::quotient(psi.clone(), xi.clone());
                let z = z_element(&psi, Some(&xi)).map_err(|e| e.to_string())?;
                let v = act(&z, &ModuleVector::cyclic(), &spec);
                for g in SV_PLUS_GENERATORS {
                    let out = dot_act(g, &v, &spec).map_err(|e| e.to_string())?;
                    ensure(out.is_zero(), || format!("psi {} xi {xi}: {g}·(z w-bar) = {out}", psi_label(&psi)))?;
                    n += 1;
                }
            }
        }
        Ok(format!("{n} annihilations"))
    })
}

// ---------------------------------------------------------------------------
// 9. Proper submodules

pub fn check_proper_submodules(t: &Truncation, weight_bound: u32) -> CheckResult {
    timed(
        "proper-submodules",
        "U(sv) z w-bar (singular psi) and U(sv) L_{-2} w-bar (psi = 0, xi = 0) miss w-bar",
        || {
            let mut details = Vec::new();
            let xi = int(1);
            for psi in singular_family() {
                let spec = ModuleSpec::quotient(psi.clone(), xi.clone());
                let z = z_element(&psi, Some(&xi)).map_err(|e| e.to_string())?;
                let gen = act(&z, &ModuleVector::cyclic(), &spec);
                let span = submodule_closure(&[gen], &spec, t, weight_bound);
                ensure(!span_touches_cyclic(&span), || format!("psi {}: w-bar reached", psi_label(&psi)))?;
                details.push(span.len().to_string());
            }
            let spec = ModuleSpec::quotient(WhittakerHom::zero(), int(0));
            let gen = act(&UeaElement::generator(Generator::l(-2)), &ModuleVector::cyclic(), &spec);
            let span = submodule_closure(&[gen], &spec, t, weight_bound);
            ensure(!span_touches_cyclic(&span), || "L_{-2} w-bar closure reaches w-bar".into())?;
            Ok(format!("z closures dims [{}], L_(-2) closure dim {}", details.join(", "), span.len()))
        },
    )
}

// ---------------------------------------------------------------------------
// 10. Local nilpotency

pub fn check_nilpotency(t: &Truncation, bound: u32) -> CheckResult {
    timed("dot-nilpotency", "sv+ acts locally nilpotently under the dot action", || {
        let trunc = Truncation::new(t.deg, t.l0, 0).map_err(|e| e.to_string())?;
        let gens: Vec<Generator> = generators_up_to(4).into_iter().filter(|g| g.is_raising()).collect();
        let mut worst = 0;
        let mut n = 0;
        for psi in nonsingular_family() {
            let spec = ModuleSpec::universal(psi.clone());
            for b in trunc.window(&spec) {
                let v = ModuleVector::basis(b.clone());
                for g in &gens {
                    let m = nilpotency_index(*g, &v, &spec, bound)
                        .map_err(|e| format!("psi {} on {b}: {e}", psi_label(&psi)))?;
                    worst = worst.max(m);
                    n += 1;
                }
            }
        }
        Ok(format!("{n} instances, max index {worst}"))
    })
}

// ---------------------------------------------------------------------------
// 11. L_{ψ,ξ} ≅ U(sv)(L_0 - ζ)^i w-bar

/// `u w-bar -> u (L_0 - ζ)^i w-bar` on basis vectors of `L_{0,ξ}`.
pub fn filtration_map(v: &ModuleVector, zeta: &Rational, i: u32) -> ModuleVector {
    let mut out = ModuleVector::zero();
    // (L_0 - ζ)^i = Σ_t C(i,t) (-ζ)^{i-t} L_0^t
    let mut binom = BigInt::one();
    for t in 0..=i {
        if t > 0 {
            binom = binom * BigInt::from(i - t + 1) / BigInt::from(t);
        }
        let c = Rational::from_integer(binom.clone()) * num_traits::pow(-zeta.clone(), (i - t) as usize);
        for (b, x) in v.iter() {
            let mut shifted = b.clone();
            shifted.lambda.push(0, t);
            out.add_term(shifted, x * &c);
        }
    }
    out
}

pub fn check_filtration_isomorphism() -> CheckResult {
    timed("filtration-isomorphism", "u w-bar -> u (L_0 - zeta)^i w-bar is a module map, psi = 0, xi != 0", || {
        let spec = ModuleSpec::quotient(WhittakerHom::zero(), int(1));
        let window = Truncation::uniform(2, 2, 0).window(&spec);
        let gens: Vec<Generator> = generators_up_to(3);
        let mut n = 0;
        for zeta in [int(0), int(2)] {
            for i in [1, 2] {
                for b in &window {
                    let v = ModuleVector::basis(b.clone());
                    let fv = filtration_map(&v, &zeta, i);
                    for g in &gens {
                        let lhs = filtration_map(&act_gen(*g, &v, &spec), &zeta, i);
                        let rhs = act_gen(*g, &fv, &spec);
                        ensure(lhs == rhs, || format!("zeta {zeta}, i {i}, {g} on {b}"))?;
                        n += 1;
                    }
                }
            }
        }
        Ok(format!("{n} intertwining checks"))
    })
}

// ---------------------------------------------------------------------------
// 12. Verma singular vectors

pub fn check_verma_singular(t: &Truncation) -> CheckResult {
    timed("verma-singular-vectors", "V(xi,zeta) has singular vectors beyond the cyclic one iff xi = 0", || {
        let mut dims = Vec::new();
        for zeta in [int(0), int(1)] {
            let r = singular_vectors(&ModuleSpec::verma(int(1), zeta.clone()), t).map_err(|e| e.to_string())?;
            ensure(r.dimension == 1 && in_span(&r.basis, &ModuleVector::cyclic()), || {
                format!("V(1,{zeta}): dim {}", r.dimension)
            })?;
            dims.push(format!("V(1,{zeta})={}", r.dimension));
        }
        for zeta in [int(0), int(1)] {
            let r = singular_vectors(&ModuleSpec::verma(int(0), zeta.clone()), t).map_err(|e| e.to_string())?;
            ensure(r.dimension > 1, || format!("V(0,{zeta}): dim {}", r.dimension))?;
            dims.push(format!("V(0,{zeta})={}", r.dimension));
        }
        Ok(dims.join(", "))
    })
}

// ---------------------------------------------------------------------------
// 13. Module axiom

/// The module variants exercised by the commutator check.
pub fn sample_specs() -> Vec<ModuleSpec> {
    vec![
        ModuleSpec::universal(WhittakerHom::new(int(1), int(2), int(1), int(3))),
        ModuleSpec::universal(WhittakerHom::zero()),
        ModuleSpec::quotient(WhittakerHom::new(int(0), int(0), int(0), int(1)), int(2)),
        ModuleSpec::quotient(WhittakerHom::new(frac(1, 2), int(0), int(-1), int(0)), frac(-1, 3)),
        ModuleSpec::verma(int(1), int(2)),
        ModuleSpec::verma(int(0), frac(1, 2)),
    ]
}

/// `x(yv) - y(xv) = [x,y]v`.
pub fn commutator_defect(x: Generator, y: Generator, v: &ModuleVector, spec: &ModuleSpec) -> ModuleVector {
    let xy = act_gen(x, &act_gen(y, v, spec), spec);
    let yx = act_gen(y, &act_gen(x, v, spec), spec);
    let br = act_lie(&crate::lie::bracket_gen(x, y), v, spec);
    &(&xy - &yx) - &br
}

/// Exhaustive over generator pairs with `|index| <= 3` on basis vectors of
/// degree <= min(D, 3) with `λ(0), k <= 1`, plus `samples` seeded random triples per
/// module drawn from the full window.
pub fn check_module_axiom(t: &Truncation, seed: u64, samples: usize) -> CheckResult {
    timed("module-axiom", "generator commutators act as brackets in every module variant", || {
        let gens = all_generators(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let deg = t.deg.min(HalfInteger::from_int(3));
        let grid = Truncation::new(deg, t.l0.min(1), t.m0.min(1)).map_err(|e| e.to_string())?;
        let mut n = 0;
        for spec in sample_specs() {
            for b in grid.window(&spec) {
                let v = ModuleVector::basis(b.clone());
                for x in &gens {
                    for y in &gens {
                        let d = commutator_defect(*x, *y, &v, &spec);
                        ensure(d.is_zero(), || format!("{spec}: [{x},{y}] on {b}"))?;
                        n += 1;
                    }
                }
            }
            let window = t.window(&spec);
            for _ in 0..samples {
                let b = window.choose(&mut rng).expect("non-empty window");
                let x = gens.choose(&mut rng).expect("generators");
                let y = gens.choose(&mut rng).expect("generators");
                let d = commutator_defect(*x, *y, &ModuleVector::basis(b.clone()), &spec);
                ensure(d.is_zero(), || format!("{spec}: [{x},{y}] on {b}"))?;
                n += 1;
            }
        }
        Ok(format!("{n} triples"))
    })
}

/// Runs every check.
pub fn run_verify(opts: &VerifyOptions) -> VerifyReport {
    let t = &opts.truncation;
    let lie = if opts.corrupt_relations { check_lie_axioms(&CorruptedSv) } else { check_lie_axioms(&Sv) };
    let checks = vec![
        lie,
        check_m_past_l_closed_form(),
        check_commutation_shapes(5),
        check_nonsingular_universal(t),
        check_nonsingular_quotient(t),
        check_type_rigidity(t),
        check_trivial_psi(t),
        check_z_elements(),
        check_proper_submodules(t, 4),
        check_nilpotency(t, 12),
        check_filtration_isomorphism(),
        check_verma_singular(t),
        check_module_axiom(t, opts.seed, 200),
    ];
    VerifyReport { truncation: *t, seed: opts.seed, checks }
}
