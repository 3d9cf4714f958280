//! Brute-force ground truth on small groups.
//!
//! Endomorphisms of `Z_{p^{r_1}} ⊕ … ⊕ Z_{p^{r_m}}` are integer matrices
//! whose entry `(i, j)` is a multiple of `p^{max(0, r_i - r_j)}`; such a
//! matrix is an automorphism exactly when it is invertible modulo `p`. The
//! oracle enumerates these matrices, partitions groups into automorphism
//! orbits, closes orbits of `T ⊕ Z` under mixed automorphisms, and checks the
//! canonical-form machinery and class counts against all of it.
//!
//! Nothing here calls into the reduction engine except [`verify_schema`],
//! which is the cross-check.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::counting::{count_classes, enumerate_representatives};
use crate::error::{Error, Result};
use crate::group::{Element, PrimaryComponent, PrimarySchema};
use crate::reduction::{canonicalize, is_representative, CanonicalElement};

/// Search-size caps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group (or torsion part) the oracle will walk.
    pub max_order: u64,
    /// Largest number of constrained endomorphism matrices to enumerate.
    pub max_matrices: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 4096,
            max_matrices: 1 << 24,
        }
    }
}

impl Limits {
    pub fn with_max_order(max_order: u64) -> Self {
        Limits {
            max_order,
            ..Limits::default()
        }
    }
}

fn cap_exceeded(what: &'static str, count: impl ToString, cap: u64) -> Error {
    Error::CapExceeded {
        what,
        count: count.to_string(),
        cap,
    }
}

fn pow(p: u64, e: u32) -> u64 {
    p.checked_pow(e).expect("prime power fits in u64")
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Matrix of an endomorphism of one prime component, acting on column
/// vectors of slot coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomMatrix {
    p: u64,
    exponents: Vec<u32>,
    entries: Vec<Vec<u64>>,
}

impl HomMatrix {
    /// Validates shape, residue ranges, and the divisibility constraint
    /// `p^{max(0, r_i - r_j)} | a_ij`.
    pub fn new(p: u64, exponents: Vec<u32>, entries: Vec<Vec<u64>>) -> Result<Self> {
        let m = exponents.len();
        if entries.len() != m || entries.iter().any(|row| row.len() != m) {
            return Err(Error::MalformedMatrix(format!("expected a {m}x{m} matrix")));
        }
        if exponents.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::MalformedMatrix("exponents must ascend".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                if a >= pow(p, exponents[i]) {
                    return Err(Error::MalformedMatrix(format!(
                        "entry ({i},{j}) = {a} is not reduced mod {p}^{}",
                        exponents[i]
                    )));
                }
                let step = pow(p, exponents[i].saturating_sub(exponents[j]));
                if a % step != 0 {
                    return Err(Error::MalformedMatrix(format!(
                        "entry ({i},{j}) = {a} is not a multiple of {step}"
                    )));
                }
            }
        }
        Ok(HomMatrix {
            p,
            exponents,
            entries,
        })
    }

    pub fn identity(p: u64, exponents: Vec<u32>) -> Self {
        let m = exponents.len();
        let entries = (0..m)
            .map(|i| (0..m).map(|j| u64::from(i == j)).collect())
            .collect();
        HomMatrix {
            p,
            exponents,
            entries,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.exponents.len()
    }
}

/// Automorphism test: the matrix is invertible modulo `p`.
pub fn is_automorphism(m: &HomMatrix) -> bool {
    let p = m.p;
    let n = m.size();
    let mut a: Vec<Vec<u64>> = m
        .entries
        .iter()
        .map(|row| row.iter().map(|x| x % p).collect())
        .collect();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| a[r][col] != 0) else {
            return false;
        };
        a.swap(col, pivot);
        let inv = inverse_mod_prime(a[col][col], p);
        for r in col + 1..n {
            let factor = mul_mod(a[r][col], inv, p);
            if factor == 0 {
                continue;
            }
            for c in col..n {
                let sub = mul_mod(factor, a[col][c], p);
                a[r][c] = (a[r][c] + p - sub) % p;
            }
        }
    }
    true
}

fn inverse_mod_prime(a: u64, p: u64) -> u64 {
    // Fermat
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    result
}

/// `M · t`, row `i` reduced mod `p^{r_i}`.
pub fn apply(m: &HomMatrix, t: &[u64]) -> Result<Vec<u64>> {
    if t.len() != m.size() {
        return Err(Error::ShapeMismatch);
    }
    Ok(apply_unchecked(m, t))
}

fn apply_unchecked(m: &HomMatrix, t: &[u64]) -> Vec<u64> {
    m.entries
        .iter()
        .zip(&m.exponents)
        .map(|(row, &r)| {
            let modulus = pow(m.p, r);
            row.iter().zip(t).fold(0u64, |acc, (&a, &x)| {
                (acc + mul_mod(a, x, modulus)) % modulus
            })
        })
        .collect()
}

/// Coordinates of a prime component packed into one integer, first slot
/// most significant, so numeric order is lexicographic order.
#[derive(Debug, Clone)]
pub struct ComponentSpace {
    pub p: u64,
    pub exponents: Vec<u32>,
    moduli: Vec<u64>,
    size: u64,
}

impl ComponentSpace {
    pub fn new(component: &PrimaryComponent, limits: &Limits) -> Result<Self> {
        let exponents = component.slot_exponents();
        let log = component.order_exponent();
        let too_big = || {
            cap_exceeded(
                "group order",
                BigUint::from(component.p).pow(log as u32),
                limits.max_order,
            )
        };
        let mut size = 1u64;
        let mut moduli = Vec::with_capacity(exponents.len());
        for &r in &exponents {
            let m = component.p.checked_pow(r).ok_or_else(too_big)?;
            size = size.checked_mul(m).ok_or_else(too_big)?;
            moduli.push(m);
        }
        if size > limits.max_order {
            return Err(too_big());
        }
        Ok(ComponentSpace {
            p: component.p,
            exponents,
            moduli,
            size,
        })
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn encode(&self, t: &[u64]) -> u64 {
        t.iter()
            .zip(&self.moduli)
            .fold(0, |acc, (&x, &m)| acc * m + x)
    }

    pub fn decode(&self, mut index: u64) -> Vec<u64> {
        let mut t = vec![0; self.moduli.len()];
        for (x, &m) in t.iter_mut().zip(&self.moduli).rev() {
            *x = index % m;
            index /= m;
        }
        t
    }
}

/// Number of constrained endomorphism matrices, `p^{Σ min(r_i, r_j)}`.
pub fn endomorphism_count(component: &PrimaryComponent) -> BigUint {
    let r = component.slot_exponents();
    let log: u64 = r
        .iter()
        .flat_map(|&ri| r.iter().map(move |&rj| ri.min(rj) as u64))
        .sum();
    BigUint::from(component.p).pow(log as u32)
}

/// Every constrained endomorphism matrix of `component`.
pub fn endomorphisms(component: &PrimaryComponent, limits: &Limits) -> Result<Endomorphisms> {
    let count = endomorphism_count(component);
    if count > BigUint::from(limits.max_matrices) {
        return Err(cap_exceeded(
            "constrained endomorphism count",
            count,
            limits.max_matrices,
        ));
    }
    let p = component.p;
    let exponents = component.slot_exponents();
    let m = exponents.len();
    // entry (i,j) = step_ij · digit, digit in [0, p^{min(r_i, r_j)})
    let mut steps = Vec::with_capacity(m * m);
    let mut radices = Vec::with_capacity(m * m);
    for &ri in &exponents {
        for &rj in &exponents {
            steps.push(pow(p, ri.saturating_sub(rj)));
            radices.push(pow(p, ri.min(rj)));
        }
    }
    Ok(Endomorphisms {
        p,
        exponents,
        steps,
        radices,
        digits: vec![0; m * m],
        done: false,
    })
}

/// Odometer over constrained endomorphisms; see [`endomorphisms`].
pub struct Endomorphisms {
    p: u64,
    exponents: Vec<u32>,
    steps: Vec<u64>,
    radices: Vec<u64>,
    digits: Vec<u64>,
    done: bool,
}

impl Iterator for Endomorphisms {
    type Item = HomMatrix;

    fn next(&mut self) -> Option<HomMatrix> {
        if self.done {
            return None;
        }
        let m = self.exponents.len();
        let entries = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| self.steps[i * m + j] * self.digits[i * m + j])
                    .collect()
            })
            .collect();
        let out = HomMatrix {
            p: self.p,
            exponents: self.exponents.clone(),
            entries,
        };
        self.done = true;
        for (d, &radix) in self.digits.iter_mut().zip(&self.radices).rev() {
            *d += 1;
            if *d < radix {
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(out)
    }
}

/// All automorphisms of `component`, selected from the constrained
/// endomorphisms by the mod-`p` test.
pub fn enumerate_automorphisms(component: &PrimaryComponent, cap: u64) -> Result<Vec<HomMatrix>> {
    let limits = Limits {
        max_matrices: cap,
        ..Limits::default()
    };
    Ok(endomorphisms(component, &limits)?
        .filter(is_automorphism)
        .collect())
}

/// Bijectivity decided by applying the matrix to every element: the map is
/// injective, hence bijective, iff no nonzero element lands on zero.
pub fn is_bijective(m: &HomMatrix, space: &ComponentSpace) -> bool {
    let n = m.size();
    let moduli = &space.moduli;
    let mut x = vec![0u64; n];
    let mut image = vec![0u64; n];
    // walk elements in odometer order; stepping slot j (including a wrap
    // from p^{r_j} - 1 to 0) adds column j to the image, since
    // p^{r_j} · column j = 0 in the target
    for _ in 1..space.size() {
        for j in (0..n).rev() {
            for (i, y) in image.iter_mut().enumerate() {
                *y = (*y + m.entries[i][j]) % moduli[i];
            }
            x[j] += 1;
            if x[j] < moduli[j] {
                break;
            }
            x[j] = 0;
        }
        if image.iter().all(|&y| y == 0) {
            return false;
        }
    }
    true
}

fn unit_group_generators(p: u64, r: u32) -> Vec<u64> {
    let m = pow(p, r);
    let mut reached = vec![false; m as usize];
    reached[1 % m as usize] = true;
    let mut members = vec![1 % m];
    let mut gens = Vec::new();
    for u in 1..m {
        if u % p == 0 || reached[u as usize] {
            continue;
        }
        gens.push(u);
        // close the subgroup under the generators found so far
        let mut queue: VecDeque<u64> = members.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = mul_mod(x, g, m);
                if !reached[y as usize] {
                    reached[y as usize] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
    }
    gens
}

/// A generating set of the automorphism group: unit scalings of single
/// slots and elementary transvections `slot_i += p^{max(0, r_i - r_j)} · slot_j`.
pub fn elementary_generators(component: &PrimaryComponent) -> Vec<HomMatrix> {
    let p = component.p;
    let r = component.slot_exponents();
    let m = r.len();
    let mut gens = Vec::new();
    for i in 0..m {
        for u in unit_group_generators(p, r[i]) {
            if u == 1 {
                continue;
            }
            let mut g = HomMatrix::identity(p, r.clone());
            g.entries[i][i] = u;
            gens.push(g);
        }
        for j in 0..m {
            if i == j {
                continue;
            }
            let mut g = HomMatrix::identity(p, r.clone());
            g.entries[i][j] = pow(p, r[i].saturating_sub(r[j])) % pow(p, r[i]);
            if g.entries[i][j] != 0 {
                gens.push(g);
            }
        }
    }
    gens
}

struct DisjointSets(Vec<u32>);

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets((0..n as u32).collect())
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            let parent = self.0[x as usize];
            self.0[x as usize] = self.0[parent as usize];
            x = parent;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (a, b) = (self.find(a), self.find(b));
        // keep the smaller index as root so roots are orbit minima
        if a < b {
            self.0[b as usize] = a;
        } else if b < a {
            self.0[a as usize] = b;
        }
    }
}

/// Automorphism orbits of one prime component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentOrbits {
    pub space_size: u64,
    /// Orbit id of every packed element.
    pub orbit_of: Vec<u32>,
    /// Packed lexicographically minimal member of each orbit, ascending.
    pub representatives: Vec<u64>,
    pub sizes: Vec<u64>,
}

impl ComponentOrbits {
    fn from_roots(roots: Vec<u32>) -> Self {
        let mut ids = HashMap::new();
        let mut representatives = Vec::new();
        let mut sizes = Vec::new();
        let orbit_of = roots
            .iter()
            .map(|&root| {
                let id = *ids.entry(root).or_insert_with(|| {
                    representatives.push(root as u64);
                    sizes.push(0);
                    representatives.len() as u32 - 1
                });
                sizes[id as usize] += 1;
                id
            })
            .collect();
        ComponentOrbits {
            space_size: roots.len() as u64,
            orbit_of,
            representatives,
            sizes,
        }
    }

    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

/// Orbits under the closure of [`elementary_generators`].
pub fn component_orbits(component: &PrimaryComponent, limits: &Limits) -> Result<ComponentOrbits> {
    let space = ComponentSpace::new(component, limits)?;
    let mut sets = DisjointSets::new(space.size() as usize);
    let gens = elementary_generators(component);
    for index in 0..space.size() {
        let t = space.decode(index);
        for g in &gens {
            sets.union(index as u32, space.encode(&apply_unchecked(g, &t)) as u32);
        }
    }
    let roots = (0..space.size() as u32).map(|x| sets.find(x)).collect();
    Ok(ComponentOrbits::from_roots(roots))
}

/// Orbits computed by applying every enumerated automorphism.
pub fn component_orbits_by_enumeration(
    component: &PrimaryComponent,
    limits: &Limits,
) -> Result<ComponentOrbits> {
    let space = ComponentSpace::new(component, limits)?;
    let autos = enumerate_automorphisms(component, limits.max_matrices)?;
    let mut roots = vec![u32::MAX; space.size() as usize];
    for index in 0..space.size() {
        if roots[index as usize] != u32::MAX {
            continue;
        }
        let t = space.decode(index);
        for a in &autos {
            roots[space.encode(&apply_unchecked(a, &t)) as usize] = index as u32;
        }
    }
    Ok(ComponentOrbits::from_roots(roots))
}

/// Partition of a finite group into automorphism orbits, held per prime.
#[derive(Debug, Clone)]
pub struct OrbitPartition {
    spaces: Vec<ComponentSpace>,
    pub per_prime: Vec<ComponentOrbits>,
}

impl OrbitPartition {
    pub fn orbit_count(&self) -> BigUint {
        self.per_prime
            .iter()
            .map(|o| BigUint::from(o.count()))
            .product()
    }

    pub fn group_order(&self) -> u64 {
        self.spaces.iter().map(ComponentSpace::size).product()
    }

    /// Element with packed index `index` (mixed radix over components).
    pub fn element(&self, mut index: u64) -> Element {
        let mut torsion = vec![Vec::new(); self.spaces.len()];
        for (c, space) in self.spaces.iter().enumerate().rev() {
            torsion[c] = space.decode(index % space.size());
            index /= space.size();
        }
        Element::from_parts(torsion, vec![])
    }

    fn component_indices(&self, mut index: u64) -> Vec<u64> {
        let mut out = vec![0; self.spaces.len()];
        for (c, space) in self.spaces.iter().enumerate().rev() {
            out[c] = index % space.size();
            index /= space.size();
        }
        out
    }

    /// Orbit id of the element with packed index `index`.
    pub fn orbit_id(&self, index: u64) -> u64 {
        self.component_indices(index)
            .iter()
            .zip(&self.per_prime)
            .fold(0, |acc, (&x, o)| {
                acc * o.count() as u64 + o.orbit_of[x as usize] as u64
            })
    }

    /// Orbit id of a finite element.
    pub fn orbit_of(&self, e: &Element) -> Result<u64> {
        if e.torsion.len() != self.spaces.len() || !e.free.is_empty() {
            return Err(Error::ShapeMismatch);
        }
        let mut index = 0u64;
        for (t, space) in e.torsion.iter().zip(&self.spaces) {
            let t: Vec<u64> = t
                .iter()
                .map(|x| x.to_u64().ok_or(Error::ShapeMismatch))
                .collect::<Result<_>>()?;
            index = index * space.size() + space.encode(&t);
        }
        Ok(self.orbit_id(index))
    }

    /// `(representative, size)` per orbit in orbit-id order; the
    /// representative is the lexicographically smallest member.
    pub fn orbits(&self) -> Vec<(Element, BigUint)> {
        let mut out = vec![(Vec::<Vec<u64>>::new(), BigUint::from(1u32))];
        for (space, o) in self.spaces.iter().zip(&self.per_prime) {
            out = out
                .into_iter()
                .flat_map(|(prefix, size)| {
                    o.representatives
                        .iter()
                        .zip(&o.sizes)
                        .map(move |(&rep, &n)| {
                            let mut t = prefix.clone();
                            t.push(space.decode(rep));
                            (t, &size * n)
                        })
                })
                .collect();
        }
        out.into_iter()
            .map(|(t, n)| (Element::from_parts(t, vec![]), n))
            .collect()
    }
}

/// Automorphism orbits of a finite group, computed per prime and combined.
pub fn all_orbits(schema: &PrimarySchema, limits: &Limits) -> Result<OrbitPartition> {
    if !schema.is_finite() {
        return Err(Error::InfiniteGroup {
            free_rank: schema.free_rank,
        });
    }
    let order = schema.order().expect("finite");
    if order > BigUint::from(limits.max_order) {
        return Err(cap_exceeded("group order", order, limits.max_order));
    }
    let spaces = schema
        .components
        .iter()
        .map(|c| ComponentSpace::new(c, limits))
        .collect::<Result<Vec<_>>>()?;
    let per_prime = schema
        .components
        .iter()
        .map(|c| component_orbits(c, limits))
        .collect::<Result<Vec<_>>>()?;
    Ok(OrbitPartition { spaces, per_prime })
}

/// A state `(t, z)` of `T ⊕ Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedState {
    pub torsion: Vec<Vec<u64>>,
    pub z: i64,
}

impl MixedState {
    pub fn to_element(&self) -> Element {
        Element::from_parts(self.torsion.clone(), vec![self.z])
    }
}

/// Orbit of `(t, z)` in `T ⊕ Z` under `(t, z) ↦ (A·t + z·c, ±z)`, closed
/// breadth-first from torsion automorphism generators, the translations
/// `t ↦ t + z·e_k`, and the sign flip. The free rank of `schema` is ignored.
pub fn mixed_orbit(
    torsion: &[Vec<u64>],
    z: i64,
    schema: &PrimarySchema,
    limits: &Limits,
) -> Result<BTreeSet<MixedState>> {
    let spaces = schema
        .components
        .iter()
        .map(|c| ComponentSpace::new(c, limits))
        .collect::<Result<Vec<_>>>()?;
    let order: u64 = spaces.iter().map(ComponentSpace::size).product();
    if order > limits.max_order {
        return Err(cap_exceeded("torsion order", order, limits.max_order));
    }
    if torsion.len() != spaces.len()
        || torsion
            .iter()
            .zip(&spaces)
            .any(|(t, s)| t.len() != s.moduli.len() || t.iter().zip(&s.moduli).any(|(x, m)| x >= m))
    {
        return Err(Error::ShapeMismatch);
    }
    let gens: Vec<Vec<HomMatrix>> = schema
        .components
        .iter()
        .map(elementary_generators)
        .collect();

    let start = MixedState {
        torsion: torsion.to_vec(),
        z,
    };
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        let mut next = Vec::new();
        for (c, component_gens) in gens.iter().enumerate() {
            for g in component_gens {
                let mut s = state.clone();
                s.torsion[c] = apply_unchecked(g, &state.torsion[c]);
                next.push(s);
            }
            for (k, &m) in spaces[c].moduli.iter().enumerate() {
                let mut s = state.clone();
                let shift = state.z.rem_euclid(m as i64) as u64;
                s.torsion[c][k] = (s.torsion[c][k] + shift) % m;
                next.push(s);
            }
        }
        next.push(MixedState {
            torsion: state.torsion.clone(),
            z: -state.z,
        });
        for s in next {
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    Ok(seen)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    /// Offending elements, as primary torsion coordinates.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<Vec<u64>>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema: PrimarySchema,
    pub checks: Vec<Check>,
    #[serde(serialize_with = "crate::json::uint")]
    pub orbit_count: BigUint,
    #[serde(serialize_with = "crate::json::uint")]
    pub class_count: BigUint,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn coordinates(e: &Element) -> Vec<Vec<u64>> {
    e.torsion
        .iter()
        .map(|t| {
            t.iter()
                .map(|x| x.to_u64().expect("small residue"))
                .collect()
        })
        .collect()
}

/// Run every oracle cross-check on a finite schema:
///
/// * `orbit_constant`: canonical form is constant on each orbit;
/// * `orbit_injective`: distinct orbits have distinct canonical forms;
/// * `representative`: every canonical form is a representative element;
/// * `count_matches`: orbit count equals the closed-form class count;
/// * `enumeration_matches`: enumerated representatives are exactly the
///   canonical forms of the orbits.
pub fn verify_schema(schema: &PrimarySchema, limits: &Limits) -> Result<VerificationReport> {
    let partition = all_orbits(schema, limits)?;
    let class_count = count_classes(schema)?.total;
    let orbit_count = partition.orbit_count();

    let mut canon_of_orbit: HashMap<u64, (CanonicalElement, Element)> = HashMap::new();
    let mut orbit_of_canon: HashMap<CanonicalElement, (u64, Element)> = HashMap::new();
    let mut constant = None;
    let mut injective = None;
    let mut representative = None;
    for index in 0..partition.group_order() {
        let e = partition.element(index);
        let orbit = partition.orbit_id(index);
        let canon = canonicalize(&e, schema).canonical;
        match canon_of_orbit.get(&orbit) {
            Some((c, first)) => {
                if *c != canon && constant.is_none() {
                    constant = Some(vec![coordinates(first), coordinates(&e)]);
                }
            }
            None => {
                if !(canon.conforming && is_representative(&canon.components, &canon.d))
                    && representative.is_none()
                {
                    representative = Some(vec![coordinates(&e)]);
                }
                canon_of_orbit.insert(orbit, (canon.clone(), e.clone()));
            }
        }
        match orbit_of_canon.get(&canon) {
            Some((o, first)) => {
                if *o != orbit && injective.is_none() {
                    injective = Some(vec![coordinates(first), coordinates(&e)]);
                }
            }
            None => {
                orbit_of_canon.insert(canon, (orbit, e));
            }
        }
    }

    let enumerated: BTreeSet<CanonicalElement> =
        enumerate_representatives(schema)?.into_iter().collect();
    let produced: BTreeSet<CanonicalElement> =
        canon_of_orbit.values().map(|(c, _)| c.clone()).collect();
    let enumeration_witness = enumerated
        .symmetric_difference(&produced)
        .next()
        .map(|c| vec![coordinates(&c.to_element(schema))]);

    let check = |name, witness: Option<Vec<Vec<Vec<u64>>>>| Check {
        name,
        pass: witness.is_none(),
        witness,
    };
    Ok(VerificationReport {
        schema: schema.clone(),
        checks: vec![
            check("orbit_constant", constant),
            check("orbit_injective", injective),
            check("representative", representative),
            Check {
                name: "count_matches",
                pass: orbit_count == class_count,
                witness: None,
            },
            check("enumeration_matches", enumeration_witness),
        ],
        orbit_count,
        class_count,
    })
}

/// Mixed orbits of `T ⊕ Z` for every torsion element and every `z` with
/// `|z| ≤ z_bound`, each listed once.
pub fn all_mixed_orbits(
    schema: &PrimarySchema,
    z_bound: i64,
    limits: &Limits,
) -> Result<Vec<BTreeSet<MixedState>>> {
    let torsion_only = schema.with_free_rank(0);
    let spaces = torsion_only
        .components
        .iter()
        .map(|c| ComponentSpace::new(c, limits))
        .collect::<Result<Vec<_>>>()?;
    let order: u64 = spaces.iter().map(ComponentSpace::size).product();
    let mut covered: BTreeSet<MixedState> = BTreeSet::new();
    let mut orbits = Vec::new();
    for z in -z_bound..=z_bound {
        for mut index in 0..order {
            let mut torsion = vec![Vec::new(); spaces.len()];
            for (c, space) in spaces.iter().enumerate().rev() {
                torsion[c] = space.decode(index % space.size());
                index /= space.size();
            }
            let state = MixedState { torsion, z };
            if covered.contains(&state) {
                continue;
            }
            let orbit = mixed_orbit(&state.torsion, z, &torsion_only, limits)?;
            covered.extend(orbit.iter().cloned());
            orbits.push(orbit);
        }
    }
    Ok(orbits)
}
