//! Group descriptions, their primary decomposition, and element coordinates.
//!
//! Users write groups as products of cyclic factors, e.g. `Z12 x Z4^2 x Z`.
//! Internally every group is held as a [`PrimarySchema`]: for each prime an
//! ascending list of layers `(exponent r, multiplicity k)` standing for
//! `Z_{p^r}^k`, plus a free rank. Element coordinates follow that layout:
//! within a prime, slots are ordered by layer and, inside a layer, by the
//! order in which the user factors appeared.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{self, big_pow};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    Finite { modulus: u64, multiplicity: u32 },
    Free { multiplicity: u32 },
}

impl Factor {
    pub fn multiplicity(&self) -> u32 {
        match *self {
            Factor::Finite { multiplicity, .. } | Factor::Free { multiplicity } => multiplicity,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Factor::Finite {
                modulus,
                multiplicity,
            } => {
                write!(f, "Z{modulus}")?;
                if multiplicity != 1 {
                    write!(f, "^{multiplicity}")?;
                }
            }
            Factor::Free { multiplicity } => {
                write!(f, "Z")?;
                if multiplicity != 1 {
                    write!(f, "^{multiplicity}")?;
                }
            }
        }
        Ok(())
    }
}

/// A group exactly as the user wrote it (minus `Z1` factors).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupSpec {
    pub factors: Vec<Factor>,
}

impl GroupSpec {
    /// Number of user coordinates an element literal must supply.
    pub fn slot_count(&self) -> usize {
        self.factors.iter().map(|f| f.multiplicity() as usize).sum()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "Z1");
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Layer {
    pub exponent: u32,
    pub multiplicity: u32,
}

/// The `p`-primary part `Z_{p^{r_1}}^{k_1} ⊕ … ⊕ Z_{p^{r_n}}^{k_n}` with
/// `r_1 < … < r_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PrimaryComponent {
    pub p: u64,
    pub layers: Vec<Layer>,
}

impl PrimaryComponent {
    pub fn new(p: u64, mut layers: Vec<Layer>) -> Self {
        layers.sort();
        let mut merged: Vec<Layer> = Vec::with_capacity(layers.len());
        for layer in layers {
            match merged.last_mut() {
                Some(last) if last.exponent == layer.exponent => {
                    last.multiplicity += layer.multiplicity
                }
                _ => merged.push(layer),
            }
        }
        PrimaryComponent { p, layers: merged }
    }

    /// Repeat-free exponents `r_1 < … < r_n`, one per layer.
    pub fn repeat_free_exponents(&self) -> Vec<u32> {
        self.layers.iter().map(|l| l.exponent).collect()
    }

    /// Exponents of the remainder subgroup, `k_i - 1` copies of each `r_i`.
    pub fn remainder_exponents(&self) -> Vec<u32> {
        self.layers
            .iter()
            .flat_map(|l| std::iter::repeat(l.exponent).take(l.multiplicity as usize - 1))
            .collect()
    }

    /// Exponent of every slot, layers expanded by multiplicity.
    pub fn slot_exponents(&self) -> Vec<u32> {
        self.layers
            .iter()
            .flat_map(|l| std::iter::repeat(l.exponent).take(l.multiplicity as usize))
            .collect()
    }

    pub fn slot_count(&self) -> usize {
        self.layers.iter().map(|l| l.multiplicity as usize).sum()
    }

    /// Index of the first slot of each layer.
    pub fn layer_starts(&self) -> Vec<usize> {
        let mut starts = Vec::with_capacity(self.layers.len());
        let mut at = 0;
        for l in &self.layers {
            starts.push(at);
            at += l.multiplicity as usize;
        }
        starts
    }

    /// Layer containing `slot`.
    pub fn layer_of_slot(&self, slot: usize) -> Option<usize> {
        let mut at = 0;
        for (i, l) in self.layers.iter().enumerate() {
            at += l.multiplicity as usize;
            if slot < at {
                return Some(i);
            }
        }
        None
    }

    pub fn modulus(&self, exponent: u32) -> BigUint {
        big_pow(self.p, exponent)
    }

    /// `log_p` of the component order.
    pub fn order_exponent(&self) -> u64 {
        self.layers
            .iter()
            .map(|l| l.exponent as u64 * l.multiplicity as u64)
            .sum()
    }
}

/// Canonical internal form: primes ascending, exponents ascending within
/// each prime, plus the free rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct PrimarySchema {
    #[serde(rename = "primes")]
    pub components: Vec<PrimaryComponent>,
    pub free_rank: usize,
}

impl PrimarySchema {
    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, or `None` when the free rank is positive.
    pub fn order(&self) -> Option<BigUint> {
        if !self.is_finite() {
            return None;
        }
        Some(
            self.components
                .iter()
                .map(|c| big_pow(c.p, c.order_exponent() as u32))
                .product(),
        )
    }

    /// Same torsion with the given free rank.
    pub fn with_free_rank(&self, free_rank: usize) -> PrimarySchema {
        PrimarySchema {
            components: self.components.clone(),
            free_rank,
        }
    }

    pub fn component(&self, p: u64) -> Option<&PrimaryComponent> {
        self.components.iter().find(|c| c.p == p)
    }
}

/// Where a user coordinate lives in the primary layout.
#[derive(Debug, Clone, PartialEq, Eq)]
enum UserSlot {
    /// `(component, slot, exponent)` for each prime power dividing the modulus.
    Finite {
        modulus: u64,
        parts: Vec<(usize, usize, u32)>,
    },
    Free {
        index: usize,
    },
}

/// A parsed group together with the map between user coordinates and
/// primary slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    spec: GroupSpec,
    schema: PrimarySchema,
    slots: Vec<UserSlot>,
}

impl Group {
    pub fn parse(text: &str) -> Result<Group> {
        Ok(Group::new(parse_group_spec(text)?))
    }

    pub fn new(spec: GroupSpec) -> Group {
        let (schema, slots) = decompose(&spec);
        Group {
            spec,
            schema,
            slots,
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn schema(&self) -> &PrimarySchema {
        &self.schema
    }

    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let tokens: Vec<&str> = if text.trim().is_empty() {
            Vec::new()
        } else {
            text.split(',').map(str::trim).collect()
        };
        if tokens.len() != self.slots.len() {
            return Err(Error::CoordinateCount {
                expected: self.slots.len(),
                found: tokens.len(),
            });
        }
        let values = tokens
            .iter()
            .enumerate()
            .map(|(index, token)| {
                parse_signed(token).ok_or_else(|| Error::BadCoordinate {
                    index,
                    token: token.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.element_from_user(&values))
    }

    /// Project user coordinates into the primary layout.
    pub fn element_from_user(&self, values: &[BigInt]) -> Element {
        assert_eq!(values.len(), self.slots.len(), "user coordinate count");
        let mut e = Element::zero(&self.schema);
        for (slot, value) in self.slots.iter().zip(values) {
            match slot {
                UserSlot::Finite { parts, .. } => {
                    for &(c, s, r) in parts {
                        let m = self.schema.components[c].modulus(r);
                        e.torsion[c][s] = arith::reduce_signed(value, &m);
                    }
                }
                UserSlot::Free { index } => e.free[*index] = value.clone(),
            }
        }
        e
    }

    /// Reassemble user coordinates from primary slots by CRT.
    pub fn user_coordinates(&self, e: &Element) -> Vec<BigInt> {
        self.slots
            .iter()
            .map(|slot| match slot {
                UserSlot::Finite { parts, .. } => {
                    let residues: Vec<(BigUint, BigUint)> = parts
                        .iter()
                        .map(|&(c, s, r)| {
                            (
                                e.torsion[c][s].clone(),
                                self.schema.components[c].modulus(r),
                            )
                        })
                        .collect();
                    BigInt::from(arith::crt(&residues))
                }
                UserSlot::Free { index } => e.free[*index].clone(),
            })
            .collect()
    }

    /// Modulus of each user coordinate, `None` for free coordinates.
    pub fn user_moduli(&self) -> Vec<Option<u64>> {
        self.slots
            .iter()
            .map(|s| match s {
                UserSlot::Finite { modulus, .. } => Some(*modulus),
                UserSlot::Free { .. } => None,
            })
            .collect()
    }
}

fn decompose(spec: &GroupSpec) -> (PrimarySchema, Vec<UserSlot>) {
    // per prime: (exponent, user slot index, part index) in order of appearance
    let mut by_prime: BTreeMap<u64, Vec<(u32, usize, usize)>> = BTreeMap::new();
    let mut slots = Vec::new();
    let mut free_rank = 0;
    for factor in &spec.factors {
        match *factor {
            Factor::Finite {
                modulus,
                multiplicity,
            } => {
                let primes = arith::factorize(modulus);
                for _ in 0..multiplicity {
                    let user = slots.len();
                    for (part, &(p, r)) in primes.iter().enumerate() {
                        by_prime.entry(p).or_default().push((r, user, part));
                    }
                    slots.push(UserSlot::Finite {
                        modulus,
                        parts: vec![(0, 0, 0); primes.len()],
                    });
                }
            }
            Factor::Free { multiplicity } => {
                for _ in 0..multiplicity {
                    slots.push(UserSlot::Free { index: free_rank });
                    free_rank += 1;
                }
            }
        }
    }
    let mut components = Vec::with_capacity(by_prime.len());
    for (c, (p, mut entries)) in by_prime.into_iter().enumerate() {
        // stable: equal exponents keep their order of appearance
        entries.sort_by_key(|&(r, _, _)| r);
        for (s, &(r, user, part)) in entries.iter().enumerate() {
            if let UserSlot::Finite { parts, .. } = &mut slots[user] {
                parts[part] = (c, s, r);
            }
        }
        let layers = entries
            .iter()
            .map(|&(exponent, _, _)| Layer {
                exponent,
                multiplicity: 1,
            })
            .collect();
        components.push(PrimaryComponent::new(p, layers));
    }
    (
        PrimarySchema {
            components,
            free_rank,
        },
        slots,
    )
}

fn parse_signed(token: &str) -> Option<BigInt> {
    let digits = token.strip_prefix(['+', '-']).unwrap_or(token);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    token.parse().ok()
}

/// Parse a group description such as `"Z8 x Z4^2 x Z"`.
///
/// Whitespace is ignored and letters are case-insensitive; factors are
/// separated by `x` or `*`. `Z1` factors are accepted and dropped.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let chars: Vec<(usize, char)> = text
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (i, c.to_ascii_lowercase()))
        .collect();
    let end = text.chars().count();
    let mut at = 0;
    let mut factors = Vec::new();

    let syntax = |position: usize, message: &str| Error::Syntax {
        position,
        message: message.to_string(),
    };
    let digits = |at: &mut usize| -> Option<(usize, String)> {
        let start = chars.get(*at).map(|&(i, _)| i)?;
        let mut s = String::new();
        while let Some(&(_, c)) = chars.get(*at) {
            if !c.is_ascii_digit() {
                break;
            }
            s.push(c);
            *at += 1;
        }
        (!s.is_empty()).then_some((start, s))
    };

    loop {
        let pos = chars.get(at).map_or(end, |&(i, _)| i);
        match chars.get(at) {
            Some(&(_, 'z')) => at += 1,
            Some(_) => return Err(syntax(pos, "expected 'Z'")),
            None => return Err(syntax(pos, "expected a factor")),
        }
        let modulus = match digits(&mut at) {
            Some((position, s)) => {
                let m: u64 = s.parse().map_err(|_| Error::NumberTooLarge { position })?;
                if m == 0 {
                    return Err(Error::ZeroModulus { position });
                }
                Some(m)
            }
            None => None,
        };
        let mut multiplicity = 1u32;
        if let Some(&(caret, '^')) = chars.get(at) {
            at += 1;
            let (position, s) =
                digits(&mut at).ok_or_else(|| syntax(caret + 1, "expected digits after '^'"))?;
            multiplicity = s.parse().map_err(|_| Error::NumberTooLarge { position })?;
            if multiplicity == 0 {
                return Err(Error::ZeroMultiplicity { position });
            }
        }
        match modulus {
            Some(1) => {}
            Some(modulus) => factors.push(Factor::Finite {
                modulus,
                multiplicity,
            }),
            None => factors.push(Factor::Free { multiplicity }),
        }
        match chars.get(at) {
            None => break,
            Some(&(_, 'x' | '*')) => at += 1,
            Some(&(i, _)) => return Err(syntax(i, "expected 'x' or '*'")),
        }
    }
    Ok(GroupSpec { factors })
}

pub fn to_primary(spec: &GroupSpec) -> PrimarySchema {
    decompose(spec).0
}

/// Parse a comma-separated element literal against `spec`.
pub fn parse_element(text: &str, spec: &GroupSpec) -> Result<Element> {
    Group::new(spec.clone()).parse_element(text)
}

/// Coordinates of an element in the primary layout: residues per prime
/// component slot, plus signed free coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    pub torsion: Vec<Vec<BigUint>>,
    pub free: Vec<BigInt>,
}

impl Element {
    pub fn zero(schema: &PrimarySchema) -> Element {
        Element {
            torsion: schema
                .components
                .iter()
                .map(|c| vec![BigUint::zero(); c.slot_count()])
                .collect(),
            free: vec![BigInt::zero(); schema.free_rank],
        }
    }

    pub fn from_parts(torsion: Vec<Vec<u64>>, free: Vec<i64>) -> Element {
        Element {
            torsion: torsion
                .into_iter()
                .map(|c| c.into_iter().map(BigUint::from).collect())
                .collect(),
            free: free.into_iter().map(BigInt::from).collect(),
        }
    }

    /// Shape matches and every residue is reduced.
    pub fn conforms(&self, schema: &PrimarySchema) -> bool {
        self.free.len() == schema.free_rank
            && self.torsion.len() == schema.components.len()
            && self.torsion.iter().zip(&schema.components).all(|(t, c)| {
                t.len() == c.slot_count()
                    && t.iter()
                        .zip(c.slot_exponents())
                        .all(|(x, r)| *x < c.modulus(r))
            })
    }

    pub fn is_zero(&self) -> bool {
        self.torsion.iter().flatten().all(Zero::is_zero) && self.free.iter().all(Zero::is_zero)
    }

    /// `n · self`.
    pub fn scale(&self, n: &BigInt, schema: &PrimarySchema) -> Element {
        Element {
            torsion: self
                .torsion
                .iter()
                .zip(&schema.components)
                .map(|(t, c)| {
                    t.iter()
                        .zip(c.slot_exponents())
                        .map(|(x, r)| {
                            arith::reduce_signed(&(n * BigInt::from(x.clone())), &c.modulus(r))
                        })
                        .collect()
                })
                .collect(),
            free: self.free.iter().map(|z| n * z).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ElementOrder {
    Finite(BigUint),
    Infinite,
}

impl fmt::Display for ElementOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementOrder::Finite(n) => write!(f, "{n}"),
            ElementOrder::Infinite => write!(f, "infinite"),
        }
    }
}

/// Least `n ≥ 1` with `n·e = 0`, or `Infinite` when the free part is nonzero.
pub fn element_order(e: &Element, schema: &PrimarySchema) -> ElementOrder {
    if e.free.iter().any(|z| !z.is_zero()) {
        return ElementOrder::Infinite;
    }
    let mut order = BigUint::one();
    for (t, c) in e.torsion.iter().zip(&schema.components) {
        let exponent = t
            .iter()
            .zip(c.slot_exponents())
            .filter(|(x, _)| !x.is_zero())
            .map(|(x, r)| r - arith::valuation(x, c.p))
            .max()
            .unwrap_or(0);
        order *= big_pow(c.p, exponent);
    }
    ElementOrder::Finite(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn finite(modulus: u64, multiplicity: u32) -> Factor {
        Factor::Finite {
            modulus,
            multiplicity,
        }
    }

    fn layers(pairs: &[(u32, u32)]) -> Vec<Layer> {
        pairs
            .iter()
            .map(|&(exponent, multiplicity)| Layer {
                exponent,
                multiplicity,
            })
            .collect()
    }

    #[test]
    fn parses_worked_specs() {
        assert_eq!(
            parse_group_spec("Z8 x Z4^2 x Z").unwrap().factors,
            vec![finite(8, 1), finite(4, 2), Factor::Free { multiplicity: 1 }]
        );
        assert_eq!(
            parse_group_spec("Z").unwrap().factors,
            vec![Factor::Free { multiplicity: 1 }]
        );
        assert_eq!(
            parse_group_spec("Z12").unwrap().factors,
            vec![finite(12, 1)]
        );
        assert_eq!(
            parse_group_spec(" z2*Z8 X z^3 ").unwrap().factors,
            vec![finite(2, 1), finite(8, 1), Factor::Free { multiplicity: 3 }]
        );
    }

    #[test]
    fn drops_trivial_factor() {
        let spec = parse_group_spec("Z1 x Z4 x Z1^3").unwrap();
        assert_eq!(spec.factors, vec![finite(4, 1)]);
        assert!(parse_group_spec("Z1").unwrap().factors.is_empty());
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(
            parse_group_spec("Z0"),
            Err(Error::ZeroModulus { position: 1 })
        ));
        assert!(matches!(
            parse_group_spec("Z4^0"),
            Err(Error::ZeroMultiplicity { position: 3 })
        ));
        assert!(matches!(
            parse_group_spec(""),
            Err(Error::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            parse_group_spec("Z4 x"),
            Err(Error::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            parse_group_spec("Z4 + Z2"),
            Err(Error::Syntax { position: 3, .. })
        ));
        assert!(matches!(
            parse_group_spec("Q4"),
            Err(Error::Syntax { position: 0, .. })
        ));
        assert!(matches!(parse_group_spec("Z4^"), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_group_spec("Z99999999999999999999999"),
            Err(Error::NumberTooLarge { position: 1 })
        ));
    }

    #[test]
    fn primary_decomposition() {
        let s = to_primary(&parse_group_spec("Z12").unwrap());
        assert_eq!(s.components.len(), 2);
        assert_eq!(
            (s.components[0].p, s.components[0].layers.clone()),
            (2, layers(&[(2, 1)]))
        );
        assert_eq!(
            (s.components[1].p, s.components[1].layers.clone()),
            (3, layers(&[(1, 1)]))
        );
        assert_eq!(s.free_rank, 0);

        let s = to_primary(&parse_group_spec("Z8 x Z4^2 x Z").unwrap());
        assert_eq!(s.components.len(), 1);
        assert_eq!(s.components[0].layers, layers(&[(2, 2), (3, 1)]));
        assert_eq!(s.free_rank, 1);

        let s = to_primary(&parse_group_spec("Z6 x Z6").unwrap());
        assert_eq!(s.components[0].layers, layers(&[(1, 2)]));
        assert_eq!(s.components[1].layers, layers(&[(1, 2)]));
    }

    #[test]
    fn repeat_free_split() {
        let s = to_primary(&parse_group_spec("Z2^3 x Z8 x Z16^2").unwrap());
        let c = &s.components[0];
        assert_eq!(c.repeat_free_exponents(), vec![1, 3, 4]);
        assert_eq!(c.remainder_exponents(), vec![1, 1, 4]);
        assert_eq!(c.slot_exponents(), vec![1, 1, 1, 3, 4, 4]);
        assert_eq!(c.layer_starts(), vec![0, 3, 4]);
        assert_eq!(c.layer_of_slot(5), Some(2));
        assert_eq!(c.layer_of_slot(6), None);
    }

    #[test]
    fn element_projection() {
        let g = Group::parse("Z12").unwrap();
        let e = g.parse_element("6").unwrap();
        assert_eq!(e, Element::from_parts(vec![vec![2], vec![0]], vec![]));

        let g = Group::parse("Z4 x Z4 x Z").unwrap();
        let e = g.parse_element("1, 2, 6").unwrap();
        assert_eq!(e, Element::from_parts(vec![vec![1, 2]], vec![6]));

        let g = Group::parse("Z8").unwrap();
        assert_eq!(
            g.parse_element("-1").unwrap(),
            Element::from_parts(vec![vec![7]], vec![])
        );
    }

    #[test]
    fn slots_follow_exponent_then_appearance() {
        let g = Group::parse("Z8 x Z2 x Z6").unwrap();
        // p=2 slots: Z2 (from Z2), Z2 (from Z6), Z8
        let e = g.parse_element("3,1,5").unwrap();
        assert_eq!(e, Element::from_parts(vec![vec![1, 1, 3], vec![2]], vec![]));
        assert_eq!(g.user_coordinates(&e), vec![3.into(), 1.into(), 5.into()]);
    }

    #[test]
    fn element_errors() {
        let g = Group::parse("Z4 x Z4 x Z").unwrap();
        assert_eq!(
            g.parse_element("1,2"),
            Err(Error::CoordinateCount {
                expected: 3,
                found: 2
            })
        );
        assert_eq!(
            g.parse_element("1,x,3"),
            Err(Error::BadCoordinate {
                index: 1,
                token: "x".into()
            })
        );
        assert!(matches!(
            g.parse_element("1,,3"),
            Err(Error::BadCoordinate { index: 1, .. })
        ));
        let trivial = Group::parse("Z1").unwrap();
        assert!(trivial.parse_element("").unwrap().is_zero());
    }

    #[test]
    fn orders() {
        let g = Group::parse("Z8^2").unwrap();
        let s = g.schema();
        let e = g.parse_element("6,4").unwrap();
        assert_eq!(element_order(&e, s), ElementOrder::Finite(4u32.into()));
        assert_eq!(
            element_order(&Element::zero(s), s),
            ElementOrder::Finite(1u32.into())
        );

        let g = Group::parse("Z4 x Z").unwrap();
        let e = g.parse_element("0,3").unwrap();
        assert_eq!(element_order(&e, g.schema()), ElementOrder::Infinite);

        let g = Group::parse("Z12 x Z10").unwrap();
        let e = g.parse_element("2,5").unwrap();
        assert_eq!(
            element_order(&e, g.schema()),
            ElementOrder::Finite(6u32.into())
        );
    }

    #[test]
    fn group_order() {
        let s = to_primary(&parse_group_spec("Z12 x Z4^2").unwrap());
        assert_eq!(s.order(), Some(BigUint::from(192u32)));
        assert_eq!(
            to_primary(&parse_group_spec("Z2 x Z").unwrap()).order(),
            None
        );
        assert_eq!(
            to_primary(&GroupSpec::default()).order(),
            Some(BigUint::one())
        );
    }
}
