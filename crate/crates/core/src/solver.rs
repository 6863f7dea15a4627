//! Exact searches over truncated windows of a module.
//!
//! A [`Truncation`] bounds the candidate vectors only. Operator images are
//! always computed in full, so every kernel reported here is the true kernel
//! intersected with the window.

use std::collections::VecDeque;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SvError};
use crate::lie::{Generator, HalfInteger};
use crate::linalg::{kernel, Echelon, SparseVec};
use crate::module::{act_gen, dot_act, BasisIndex, ModuleSpec, ModuleVector, WhittakerHom};
use crate::partition::{self, Partition};
use crate::rational::Rational;

/// Generators of sv+ as a Lie algebra.
///
/// `Y_{3/2}` is listed because `[L_1, Y_{1/2}] = 0`, so it is not reached by
/// brackets of `L_1`, `L_2`, `M_1`, `Y_{1/2}`.
pub const SV_PLUS_GENERATORS: [Generator; 5] =
    [Generator::l(1), Generator::l(2), Generator::m(1), Generator::y(0), Generator::y(1)];

/// Search window: `deg <= D`, `λ(0) <= D0`, `k <= K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    #[serde(rename = "D", with = "half_int_text")]
    pub deg: HalfInteger,
    #[serde(rename = "D0")]
    pub l0: u32,
    #[serde(rename = "K")]
    pub m0: u32,
}

mod half_int_text {
    use super::HalfInteger;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(h: &HalfInteger, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(h)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<HalfInteger, D::Error> {
        let s = String::deserialize(d)?;
        HalfInteger::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl Truncation {
    pub fn new(deg: HalfInteger, l0: u32, m0: u32) -> Result<Self> {
        if deg.doubled < 0 {
            return Err(SvError::InvalidTruncation(format!("degree bound {deg} is negative")));
        }
        Ok(Self { deg, l0, m0 })
    }

    /// Integer degree bound shorthand.
    pub fn uniform(deg: i64, l0: u32, m0: u32) -> Self {
        Self::new(HalfInteger::from_int(deg), l0, m0).expect("non-negative bound")
    }

    pub fn contains(&self, b: &BasisIndex) -> bool {
        b.degree() <= self.deg && b.l0() <= self.l0 && b.k <= self.m0
    }

    /// Every basis vector of `spec` inside the window, sorted.
    pub fn window(&self, spec: &ModuleSpec) -> Vec<BasisIndex> {
        let budget = self.deg.doubled as u64;
        let mus = partition::enumerate(1, budget / 2, budget, |p| 2 * p);
        let nus = partition::enumerate(0, budget / 2, budget, |p| 2 * p + 1);
        let lambdas = partition::enumerate(1, budget / 2, budget, |p| 2 * p);
        let mut out = Vec::new();
        for mu in &mus {
            let dm = 2 * mu.size();
            for nu in &nus {
                let dn = dm + 2 * nu.size() + nu.count();
                if dn > budget {
                    continue;
                }
                for lam in &lambdas {
                    if dn + 2 * lam.size() > budget {
                        continue;
                    }
                    for j in 0..=self.l0 {
                        for k in 0..=self.m0 {
                            let mut lambda = lam.clone();
                            lambda.push(0, j);
                            let b = BasisIndex::new(
                                k,
                                Partition::new(mu.clone()).expect("positive parts"),
                                nu.clone(),
                                lambda,
                            );
                            if spec.admits(&b) {
                                out.push(b);
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Outcome of a kernel search.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub dimension: usize,
    pub basis: Vec<ModuleVector>,
    pub conditions: Vec<Generator>,
    pub truncation: Truncation,
}

/// One linear condition `(g - value) v = 0`.
#[derive(Debug, Clone)]
pub struct Condition {
    pub generator: Generator,
    pub value: Rational,
}

fn to_sparse(v: &ModuleVector) -> SparseVec<BasisIndex> {
    v.iter().map(|(b, c)| (b.clone(), c.clone())).collect()
}

fn eigen_image(cond: &Condition, v: &ModuleVector, spec: &ModuleSpec) -> ModuleVector {
    let mut out = act_gen(cond.generator, v, spec);
    out.add_scaled(v, &-cond.value.clone());
    out
}

/// Solves `(g - value) v = 0` for every condition, over the window.
pub fn eigen_vectors(spec: &ModuleSpec, trunc: &Truncation, conditions: &[Condition]) -> Result<SolveReport> {
    let window = trunc.window(spec);
    let columns: Vec<SparseVec<(usize, BasisIndex)>> = window
        .iter()
        .map(|b| {
            let v = ModuleVector::basis(b.clone());
            let mut col = SparseVec::new();
            for (i, cond) in conditions.iter().enumerate() {
                for (idx, c) in eigen_image(cond, &v, spec).iter() {
                    col.insert((i, idx.clone()), c.clone());
                }
            }
            col
        })
        .collect();
    let null = kernel(&columns);
    let basis: Vec<ModuleVector> =
        null.iter().map(|x| x.iter().map(|(j, c)| (window[*j].clone(), c.clone())).collect()).collect();
    for v in &basis {
        for cond in conditions {
            if !eigen_image(cond, v, spec).is_zero() {
                return Err(SvError::Resubstitution(format!("{v} under {}", cond.generator)));
            }
        }
    }
    Ok(SolveReport {
        dimension: basis.len(),
        basis,
        conditions: conditions.iter().map(|c| c.generator).collect(),
        truncation: *trunc,
    })
}

/// Conditions `g v = ψ(g) v` for the generators of sv+.
pub fn whittaker_conditions(psi: &WhittakerHom) -> Vec<Condition> {
    SV_PLUS_GENERATORS.iter().map(|g| Condition { generator: *g, value: psi.value(*g) }).collect()
}

/// Whittaker vectors of type `ψ` (the module's own `ψ`) inside the window.
pub fn whittaker_vectors(spec: &ModuleSpec, trunc: &Truncation) -> Result<SolveReport> {
    eigen_vectors(spec, trunc, &whittaker_conditions(&spec.psi()))
}

/// Whittaker vectors of a foreign type `ψ'` inside the window of `spec`.
pub fn typed_whittaker_vectors(spec: &ModuleSpec, psi: &WhittakerHom, trunc: &Truncation) -> Result<SolveReport> {
    eigen_vectors(spec, trunc, &whittaker_conditions(psi))
}

/// Vectors annihilated by all of sv+.
pub fn singular_vectors(spec: &ModuleSpec, trunc: &Truncation) -> Result<SolveReport> {
    eigen_vectors(spec, trunc, &whittaker_conditions(&WhittakerHom::zero()))
}

/// Least `m <= bound` with `(g·)^m v = 0` under the dot action.
pub fn nilpotency_index(g: Generator, v: &ModuleVector, spec: &ModuleSpec, bound: u32) -> Result<u32> {
    if v.is_zero() {
        return Ok(0);
    }
    let mut cur = v.clone();
    for m in 1..=bound {
        cur = dot_act(g, &cur, spec)?;
        if cur.is_zero() {
            return Ok(m);
        }
    }
    Err(SvError::BoundExceeded { generator: g, bound })
}

/// Generators with `|weight| <= bound`.
pub fn generators_up_to(bound: u32) -> Vec<Generator> {
    let b = i64::from(bound);
    let mut out = Vec::new();
    for n in -b..=b {
        out.push(Generator::l(n));
        out.push(Generator::m(n));
    }
    for n in -b..b {
        out.push(Generator::y(n));
    }
    out.sort();
    out
}

/// Span of `gens` closed under the generators of `|weight| <= weight_bound`,
/// keeping only images that lie in the window. The result is a subspace of
/// the true submodule; images leaving the window are dropped even if a later
/// action would bring them back.
pub fn submodule_closure(
    gens: &[ModuleVector],
    spec: &ModuleSpec,
    trunc: &Truncation,
    weight_bound: u32,
) -> Vec<ModuleVector> {
    let actors = generators_up_to(weight_bound);
    let inside = |v: &ModuleVector| v.indices().all(|b| trunc.contains(b));
    let mut span = Echelon::<BasisIndex>::new();
    let mut queue: VecDeque<ModuleVector> = VecDeque::new();
    for v in gens {
        if inside(v) && span.insert(to_sparse(v)) {
            queue.push_back(v.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        for g in &actors {
            let image = act_gen(*g, &v, spec);
            if !image.is_zero() && inside(&image) && span.insert(to_sparse(&image)) {
                queue.push_back(image);
            }
        }
    }
    span.reduced_basis().into_iter().map(|row| row.into_iter().collect()).collect()
}

/// True if `v` lies in the span of `basis`.
pub fn in_span(basis: &[ModuleVector], v: &ModuleVector) -> bool {
    let mut e = Echelon::new();
    for b in basis {
        e.insert(to_sparse(b));
    }
    e.contains(&to_sparse(v))
}

/// The coefficient of the cyclic vector in `v`.
pub fn cyclic_coefficient(v: &ModuleVector) -> Rational {
    v.coeff(&BasisIndex::cyclic())
}

/// Whether some vector of the span has a nonzero cyclic coefficient.
pub fn span_touches_cyclic(basis: &[ModuleVector]) -> bool {
    basis.iter().any(|v| !cyclic_coefficient(v).is_zero())
}
