//! Reduction of an element to the representative element of its
//! automorphism class.
//!
//! The pipeline, per prime component:
//!
//! 1. every layer block `Z_{p^r}^k` is unit-scaled so each coordinate is a
//!    power of `p`, then cleared down to a single `p^l` in the first slot of
//!    the layer (the smallest valuation survives);
//! 2. basic reductions are applied until none is non-trivial;
//! 3. the free part collapses to `d = gcd` in its first coordinate;
//! 4. when `d ≠ 0`, torsion entries `p^l` with `l ≥ v_p(d)` are absorbed by
//!    adding multiples of `d`, and step 2 is re-run.
//!
//! Every rewrite is an automorphism, so the output lies in the orbit of the
//! input. Each rewrite is recorded in a [`ReductionTrace`].

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{self, big_pow};
use crate::error::{Error, Result};
use crate::group::{Element, PrimaryComponent, PrimarySchema};

/// One entry per layer of a prime component: zero or `p^l` with `l < r`.
///
/// Entries are stored by exponent; `None` is the zero entry. The order of
/// entry `p^l` in `Z_{p^r}` is `p^{r-l}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepeatFreeVector {
    p: u64,
    exponents: Vec<u32>,
    entries: Vec<Option<u32>>,
}

impl RepeatFreeVector {
    pub fn new(p: u64, exponents: Vec<u32>, entries: Vec<Option<u32>>) -> Result<Self> {
        let valid = exponents.len() == entries.len()
            && exponents.windows(2).all(|w| w[0] < w[1])
            && exponents.first().map_or(true, |&r| r >= 1)
            && entries
                .iter()
                .zip(&exponents)
                .all(|(l, &r)| l.map_or(true, |l| l < r));
        if !valid {
            return Err(Error::ShapeMismatch);
        }
        Ok(RepeatFreeVector {
            p,
            exponents,
            entries,
        })
    }

    pub fn zero(component: &PrimaryComponent) -> Self {
        let exponents = component.repeat_free_exponents();
        RepeatFreeVector {
            p: component.p,
            entries: vec![None; exponents.len()],
            exponents,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// `Some(l)` for an entry `p^l`, `None` for zero.
    pub fn entries(&self) -> &[Option<u32>] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn value(&self, i: usize) -> BigUint {
        self.entries[i].map_or_else(BigUint::zero, |l| big_pow(self.p, l))
    }

    pub fn values(&self) -> Vec<BigUint> {
        (0..self.len()).map(|i| self.value(i)).collect()
    }

    /// `log_p` of the order of entry `i` in `Z_{p^{r_i}}`.
    pub fn order_exponent(&self, i: usize) -> u32 {
        self.entries[i].map_or(0, |l| self.exponents[i] - l)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.entries[i].is_some())
            .collect()
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| e.is_some()).count()
    }

    /// Positions a basic reduction about `i` would zero.
    pub fn reduction_targets(&self, i: usize) -> Result<Vec<usize>> {
        if i >= self.len() {
            return Err(Error::PositionOutOfRange {
                position: i,
                valid: format!("0..{}", self.len()),
            });
        }
        let li = self.entries[i].ok_or(Error::ZeroPivot { position: i })?;
        let oi = self.order_exponent(i);
        Ok((0..self.len())
            .filter(|&j| j != i)
            .filter(|&j| match self.entries[j] {
                Some(lj) => lj >= li && self.order_exponent(j) <= oi,
                None => false,
            })
            .collect())
    }

    /// Basic reduction about position `i`: every other entry with value at
    /// least that of `i` and order at most that of `i` becomes zero.
    /// Returns the zeroed positions; empty means the reduction was trivial.
    pub fn reduce_about(&mut self, i: usize) -> Result<Vec<usize>> {
        let targets = self.reduction_targets(i)?;
        for &j in &targets {
            self.entries[j] = None;
        }
        Ok(targets)
    }

    /// Positions about which a non-trivial basic reduction exists.
    pub fn nontrivial_pivots(&self) -> Vec<usize> {
        self.support()
            .into_iter()
            .filter(|&i| !self.reduction_targets(i).unwrap_or_default().is_empty())
            .collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.nontrivial_pivots().is_empty()
    }

    /// Apply non-trivial basic reductions, scanning positions in ascending
    /// order, until none applies. Returns `(pivot, zeroed)` per step.
    pub fn reduce_fully(&mut self) -> Vec<(usize, Vec<usize>)> {
        let mut steps = Vec::new();
        loop {
            let mut fired = false;
            for i in 0..self.len() {
                if self.entries[i].is_none() {
                    continue;
                }
                let cleared = self.reduce_about(i).expect("pivot is nonzero");
                if !cleared.is_empty() {
                    steps.push((i, cleared));
                    fired = true;
                }
            }
            if !fired {
                return steps;
            }
        }
    }

    /// Nonzero pairs `i < j` have strictly increasing values and orders.
    fn is_chain(&self) -> bool {
        let support = self.support();
        support.windows(2).all(|w| {
            let (i, j) = (w[0], w[1]);
            self.entries[i] < self.entries[j] && self.order_exponent(i) < self.order_exponent(j)
        })
    }

    fn read(component: &PrimaryComponent, slots: &[BigUint]) -> Option<Self> {
        let mut v = RepeatFreeVector::zero(component);
        let starts = component.layer_starts();
        for (slot, x) in slots.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let layer = component.layer_of_slot(slot)?;
            if slot != starts[layer] {
                return None;
            }
            let l = arith::valuation(x, component.p);
            if *x != big_pow(component.p, l) {
                return None;
            }
            v.entries[layer] = Some(l);
        }
        Some(v)
    }

    /// Embed into the slots of `component`, one entry per layer in the
    /// layer's first slot.
    pub fn to_slots(&self, component: &PrimaryComponent) -> Vec<BigUint> {
        let mut slots = vec![BigUint::zero(); component.slot_count()];
        for (layer, start) in component.layer_starts().into_iter().enumerate() {
            slots[start] = self.value(layer);
        }
        slots
    }
}

impl fmt::Display for RepeatFreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.len() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.value(i))?;
        }
        write!(f, ")")
    }
}

/// Result of reducing one layer block `Z_{p^r}^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockReduction {
    /// Exponent `l` of the surviving entry `p^l`; `None` for a zero block.
    pub entry: Option<u32>,
    /// Per-coordinate multipliers (inverses of the unit parts mod `p^r`).
    pub multipliers: Vec<BigUint>,
    /// Block after unit scaling: each coordinate `0` or `p^{l_i}`.
    pub scaled: Vec<BigUint>,
    /// Coordinate holding the minimal valuation.
    pub pivot: Option<usize>,
    /// `(p^l, 0, …, 0)`.
    pub reduced: Vec<BigUint>,
}

/// Reduce a block of residues in `Z_{p^r}^k` to `(p^l, 0, …, 0)` where
/// `p^{r-l}` is the order of the block.
pub fn block_reduce(block: &[BigUint], p: u64, r: u32) -> BlockReduction {
    let modulus = big_pow(p, r);
    let mut multipliers = Vec::with_capacity(block.len());
    let mut scaled = Vec::with_capacity(block.len());
    let mut pivot: Option<(usize, u32)> = None;
    for (i, x) in block.iter().enumerate() {
        let x = x % &modulus;
        if x.is_zero() {
            multipliers.push(BigUint::one());
            scaled.push(BigUint::zero());
            continue;
        }
        let l = arith::valuation(&x, p);
        let power = big_pow(p, l);
        let unit = &x / &power;
        let inverse = arith::mod_inverse(&unit, &modulus).expect("unit part is prime to p");
        debug_assert_eq!((&inverse * &x) % &modulus, power);
        multipliers.push(inverse);
        scaled.push(power);
        if pivot.map_or(true, |(_, best)| l < best) {
            pivot = Some((i, l));
        }
    }
    let mut reduced = vec![BigUint::zero(); block.len()];
    if let Some((_, l)) = pivot {
        reduced[0] = big_pow(p, l);
    }
    BlockReduction {
        entry: pivot.map(|(_, l)| l),
        multipliers,
        scaled,
        pivot: pivot.map(|(i, _)| i),
        reduced,
    }
}

/// Collapse a free vector to the nonnegative gcd of its entries.
pub fn free_reduce(v: &[BigInt]) -> BigUint {
    arith::gcd_signed(v)
}

/// Basic reduction about position `i` (0-based layer index).
pub fn basic_reduction(v: &RepeatFreeVector, i: usize) -> Result<RepeatFreeVector> {
    let mut out = v.clone();
    out.reduce_about(i)?;
    Ok(out)
}

/// Whether the per-prime vectors, together with the free value `d`, form a
/// representative element.
///
/// Conditions are checked over nonzero entries only: values and orders
/// strictly increase along the support, and when `d ≠ 0` every nonzero
/// entry is coprime to `d`.
pub fn is_representative(components: &[RepeatFreeVector], d: &BigUint) -> bool {
    components.iter().all(|v| {
        v.is_chain()
            && (d.is_zero()
                || v.entries
                    .iter()
                    .flatten()
                    .all(|&l| l == 0 || !(d % v.p).is_zero()))
    })
}

/// The representative element of an automorphism class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalElement {
    pub components: Vec<RepeatFreeVector>,
    /// Free part `(d, 0, …, 0)`; zero when the free rank is zero.
    pub d: BigUint,
    /// False when an entry `p^l` with `1 ≤ l < v_p(d)` survives; such an
    /// entry is not coprime to `d` but no automorphism can remove it.
    pub conforming: bool,
}

impl CanonicalElement {
    /// The zero element's representative.
    pub fn zero(schema: &PrimarySchema) -> Self {
        CanonicalElement {
            components: schema
                .components
                .iter()
                .map(RepeatFreeVector::zero)
                .collect(),
            d: BigUint::zero(),
            conforming: true,
        }
    }

    /// Embed into primary coordinates.
    pub fn to_element(&self, schema: &PrimarySchema) -> Element {
        let mut free = vec![BigInt::zero(); schema.free_rank];
        if let Some(first) = free.first_mut() {
            *first = BigInt::from(self.d.clone());
        }
        Element {
            torsion: self
                .components
                .iter()
                .zip(&schema.components)
                .map(|(v, c)| v.to_slots(c))
                .collect(),
            free,
        }
    }

    pub fn nonzero_count(&self) -> usize {
        self.components
            .iter()
            .map(RepeatFreeVector::nonzero_count)
            .sum()
    }
}

impl fmt::Display for CanonicalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "p={}:{}", v.p, v)?;
        }
        if !self.d.is_zero() {
            if !self.components.is_empty() {
                write!(f, " ")?;
            }
            write!(f, "d={}", self.d)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    UnitScale,
    BlockClear,
    BasicReduction,
    FreeGcd,
    CoprimeClear,
}

/// One rewrite. Positions are slot indices within the prime component (or
/// the free vector for `free_gcd`); `before`/`after` hold that whole vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub kind: StepKind,
    pub prime: Option<u64>,
    pub position: Option<usize>,
    pub cleared_positions: Vec<usize>,
    #[serde(serialize_with = "crate::json::ints")]
    pub before: Vec<BigInt>,
    #[serde(serialize_with = "crate::json::ints")]
    pub after: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonicalization {
    pub canonical: CanonicalElement,
    pub trace: ReductionTrace,
}

fn signed(xs: &[BigUint]) -> Vec<BigInt> {
    xs.iter().cloned().map(BigInt::from).collect()
}

fn collapse_free(free: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); free.len()];
    if let Some(first) = out.first_mut() {
        *first = BigInt::from(free_reduce(free));
    }
    out
}

fn clear_layer_block(
    component: &PrimaryComponent,
    slots: &[BigUint],
    layer: usize,
) -> (BlockReduction, usize, usize) {
    let start = component.layer_starts()[layer];
    let k = component.layers[layer].multiplicity as usize;
    let r = component.layers[layer].exponent;
    (
        block_reduce(&slots[start..start + k], component.p, r),
        start,
        k,
    )
}

/// Zeroing positions for the coprime step: entries `p^l` with `l ≥ v_p(d)`.
fn coprime_targets(v: &RepeatFreeVector, d: &BigUint) -> Vec<usize> {
    if d.is_zero() {
        return Vec::new();
    }
    let vd = arith::valuation(d, v.p);
    v.support()
        .into_iter()
        .filter(|&i| v.entries[i].is_some_and(|l| l >= vd))
        .collect()
}

struct Reducer<'a> {
    schema: &'a PrimarySchema,
    state: Element,
    trace: Vec<TraceStep>,
}

impl Reducer<'_> {
    fn record(
        &mut self,
        kind: StepKind,
        c: Option<usize>,
        position: Option<usize>,
        cleared_positions: Vec<usize>,
        before: Vec<BigInt>,
    ) {
        let after = match c {
            Some(c) => signed(&self.state.torsion[c]),
            None => self.state.free.clone(),
        };
        self.trace.push(TraceStep {
            kind,
            prime: c.map(|c| self.schema.components[c].p),
            position,
            cleared_positions,
            before,
            after,
        });
    }

    fn collapse_layers(&mut self, c: usize) {
        let component = &self.schema.components[c];
        for layer in 0..component.layers.len() {
            let (block, start, k) = clear_layer_block(component, &self.state.torsion[c], layer);
            let Some(pivot) = block.pivot else { continue };

            if block.scaled[..] != self.state.torsion[c][start..start + k] {
                let before = signed(&self.state.torsion[c]);
                self.state.torsion[c][start..start + k].clone_from_slice(&block.scaled);
                self.record(StepKind::UnitScale, Some(c), Some(start), vec![], before);
            }
            if block.reduced[..] != self.state.torsion[c][start..start + k] {
                let before = signed(&self.state.torsion[c]);
                let cleared = (0..k)
                    .filter(|&i| !block.scaled[i].is_zero() && block.reduced[i].is_zero())
                    .map(|i| start + i)
                    .collect();
                self.state.torsion[c][start..start + k].clone_from_slice(&block.reduced);
                self.record(
                    StepKind::BlockClear,
                    Some(c),
                    Some(start + pivot),
                    cleared,
                    before,
                );
            }
        }
    }

    fn view(&self, c: usize) -> RepeatFreeVector {
        RepeatFreeVector::read(&self.schema.components[c], &self.state.torsion[c])
            .expect("layers are collapsed")
    }

    fn store(&mut self, c: usize, v: &RepeatFreeVector) {
        self.state.torsion[c] = v.to_slots(&self.schema.components[c]);
    }

    fn basic_reductions(&mut self, c: usize) -> bool {
        let mut v = self.view(c);
        let starts = self.schema.components[c].layer_starts();
        let steps = v.clone().reduce_fully();
        for (pivot, cleared) in &steps {
            let before = signed(&self.state.torsion[c]);
            v.reduce_about(*pivot).expect("pivot is nonzero");
            self.store(c, &v);
            let cleared = cleared.iter().map(|&j| starts[j]).collect();
            self.record(
                StepKind::BasicReduction,
                Some(c),
                Some(starts[*pivot]),
                cleared,
                before,
            );
        }
        !steps.is_empty()
    }

    fn reduce_free(&mut self) -> BigUint {
        let collapsed = collapse_free(&self.state.free);
        if collapsed != self.state.free {
            let before = self.state.free.clone();
            let cleared = (1..before.len())
                .filter(|&i| !before[i].is_zero())
                .collect();
            self.state.free = collapsed;
            self.record(StepKind::FreeGcd, None, None, cleared, before);
        }
        free_reduce(&self.state.free)
    }

    fn coprime_clear(&mut self, c: usize, d: &BigUint) -> bool {
        let mut v = self.view(c);
        let targets = coprime_targets(&v, d);
        if targets.is_empty() {
            return false;
        }
        let before = signed(&self.state.torsion[c]);
        for &i in &targets {
            v.entries[i] = None;
        }
        self.store(c, &v);
        let starts = self.schema.components[c].layer_starts();
        let cleared = targets.iter().map(|&i| starts[i]).collect();
        self.record(StepKind::CoprimeClear, Some(c), None, cleared, before);
        true
    }
}

/// Reduce `e` to the representative element of its automorphism class.
///
/// Panics if `e` does not conform to `schema`.
pub fn canonicalize(e: &Element, schema: &PrimarySchema) -> Canonicalization {
    assert!(e.conforms(schema), "element does not conform to schema");
    let mut r = Reducer {
        schema,
        state: e.clone(),
        trace: Vec::new(),
    };
    for c in 0..schema.components.len() {
        r.collapse_layers(c);
        r.basic_reductions(c);
    }
    let d = r.reduce_free();
    if !d.is_zero() {
        for c in 0..schema.components.len() {
            while r.coprime_clear(c, &d) {
                r.basic_reductions(c);
            }
        }
    }
    let components: Vec<RepeatFreeVector> =
        (0..schema.components.len()).map(|c| r.view(c)).collect();
    let conforming = is_representative(&components, &d);
    Canonicalization {
        canonical: CanonicalElement {
            components,
            d,
            conforming,
        },
        trace: ReductionTrace { steps: r.trace },
    }
}

/// Outcome of an equivalence query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Equivalence {
    pub equivalent: bool,
    /// Set when the answer rests on a non-conforming canonical form of a
    /// group with a free part.
    pub caveat: bool,
}

pub fn are_equivalent(e1: &Element, e2: &Element, schema: &PrimarySchema) -> Equivalence {
    let c1 = canonicalize(e1, schema).canonical;
    let c2 = canonicalize(e2, schema).canonical;
    let equivalent = c1 == c2;
    Equivalence {
        equivalent,
        caveat: equivalent && schema.free_rank > 0 && !(c1.conforming && c2.conforming),
    }
}

impl ReductionTrace {
    /// Re-execute every recorded step on `e`, checking that each step's
    /// `before` matches the current state and that the rewrite it names
    /// produces its `after`. Returns the final state.
    pub fn replay(&self, e: &Element, schema: &PrimarySchema) -> Result<Element> {
        let mut state = e.clone();
        for (n, step) in self.steps.iter().enumerate() {
            let fail = |message: String| Error::Replay { step: n, message };
            if step.kind == StepKind::FreeGcd {
                if step.before != state.free {
                    return Err(fail("free part does not match `before`".into()));
                }
                state.free = collapse_free(&state.free);
                if state.free != step.after {
                    return Err(fail("gcd collapse does not match `after`".into()));
                }
                continue;
            }

            let prime = step.prime.ok_or_else(|| fail("missing prime".into()))?;
            let c = schema
                .components
                .iter()
                .position(|c| c.p == prime)
                .ok_or_else(|| fail(format!("no component for p={prime}")))?;
            let component = &schema.components[c];
            if signed(&state.torsion[c]) != step.before {
                return Err(fail("component does not match `before`".into()));
            }
            let layer_at = |position: Option<usize>| {
                position
                    .and_then(|s| component.layer_of_slot(s))
                    .ok_or_else(|| fail("bad position".into()))
            };
            let slots = &mut state.torsion[c];
            match step.kind {
                StepKind::UnitScale => {
                    let (block, start, k) =
                        clear_layer_block(component, slots, layer_at(step.position)?);
                    slots[start..start + k].clone_from_slice(&block.scaled);
                }
                StepKind::BlockClear => {
                    let (block, start, k) =
                        clear_layer_block(component, slots, layer_at(step.position)?);
                    if block.scaled[..] != slots[start..start + k] {
                        return Err(fail("block is not unit-scaled".into()));
                    }
                    if block.pivot.map(|i| start + i) != step.position {
                        return Err(fail("pivot mismatch".into()));
                    }
                    slots[start..start + k].clone_from_slice(&block.reduced);
                }
                StepKind::BasicReduction => {
                    let layer = layer_at(step.position)?;
                    let mut v = RepeatFreeVector::read(component, slots)
                        .ok_or_else(|| fail("layers not collapsed".into()))?;
                    v.reduce_about(layer).map_err(|e| fail(e.to_string()))?;
                    *slots = v.to_slots(component);
                }
                StepKind::CoprimeClear => {
                    let d = free_reduce(&state.free);
                    let mut v = RepeatFreeVector::read(component, slots)
                        .ok_or_else(|| fail("layers not collapsed".into()))?;
                    for i in coprime_targets(&v.clone(), &d) {
                        v.entries[i] = None;
                    }
                    *slots = v.to_slots(component);
                }
                StepKind::FreeGcd => unreachable!(),
            }
            if signed(&state.torsion[c]) != step.after {
                return Err(fail("rewrite does not match `after`".into()));
            }
        }
        Ok(state)
    }
}
