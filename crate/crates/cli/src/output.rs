use abelcanon::{CanonicalElement, ElementOrder, Group};
use num_bigint::{BigInt, BigUint};
use serde::{Serialize, Serializer};

pub use abelcanon::json::JsonInt;

pub fn opt_uints<S: Serializer>(xs: &Option<Vec<BigUint>>, s: S) -> Result<S::Ok, S::Error> {
    match xs {
        Some(xs) => abelcanon::json::uints(xs, s),
        None => s.serialize_none(),
    }
}

pub struct OrderJson(pub ElementOrder);

impl Serialize for OrderJson {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match &self.0 {
            ElementOrder::Finite(n) => abelcanon::json::uint(n, s),
            ElementOrder::Infinite => s.serialize_str("infinite"),
        }
    }
}

#[derive(Serialize)]
pub struct PrimarySlots {
    p: u64,
    exponents: Vec<u32>,
    #[serde(serialize_with = "abelcanon::json::uints")]
    slots: Vec<BigUint>,
}

#[derive(Serialize)]
pub struct RepeatFreeJson {
    p: u64,
    exponents: Vec<u32>,
    #[serde(serialize_with = "abelcanon::json::uints")]
    entries: Vec<BigUint>,
}

/// A canonical element in user coordinates and in primary coordinates.
#[derive(Serialize)]
pub struct CanonicalJson {
    user: Vec<JsonInt>,
    primary: Vec<PrimarySlots>,
    #[serde(serialize_with = "abelcanon::json::ints")]
    free: Vec<BigInt>,
    representative: Vec<RepeatFreeJson>,
    #[serde(serialize_with = "abelcanon::json::uint")]
    d: BigUint,
    conforming: bool,
}

impl CanonicalJson {
    pub fn new(group: &Group, c: &CanonicalElement) -> Self {
        let e = c.to_element(group.schema());
        CanonicalJson {
            user: group
                .user_coordinates(&e)
                .into_iter()
                .map(JsonInt)
                .collect(),
            primary: group
                .schema()
                .components
                .iter()
                .zip(&e.torsion)
                .map(|(comp, slots)| PrimarySlots {
                    p: comp.p,
                    exponents: comp.slot_exponents(),
                    slots: slots.clone(),
                })
                .collect(),
            free: e.free.clone(),
            representative: c
                .components
                .iter()
                .map(|v| RepeatFreeJson {
                    p: v.p(),
                    exponents: v.exponents().to_vec(),
                    entries: v.values(),
                })
                .collect(),
            d: c.d.clone(),
            conforming: c.conforming,
        }
    }
}

#[derive(Serialize)]
struct LayerJson {
    exponent: u32,
    multiplicity: u32,
}

#[derive(Serialize)]
struct PrimeInfo {
    p: u64,
    layers: Vec<LayerJson>,
    repeat_free: Vec<u32>,
    remainder: Vec<u32>,
    r1: u32,
    gaps: Vec<u32>,
}

#[derive(Serialize)]
pub struct InfoJson {
    group: String,
    order: OrderJson,
    free_rank: usize,
    primes: Vec<PrimeInfo>,
}

impl InfoJson {
    pub fn new(group: &Group) -> Self {
        let schema = group.schema();
        InfoJson {
            group: group.spec().to_string(),
            order: OrderJson(match schema.order() {
                Some(n) => ElementOrder::Finite(n),
                None => ElementOrder::Infinite,
            }),
            free_rank: schema.free_rank,
            primes: schema
                .components
                .iter()
                .map(|c| {
                    let g = abelcanon::gaps(c);
                    PrimeInfo {
                        p: c.p,
                        layers: c
                            .layers
                            .iter()
                            .map(|l| LayerJson {
                                exponent: l.exponent,
                                multiplicity: l.multiplicity,
                            })
                            .collect(),
                        repeat_free: c.repeat_free_exponents(),
                        remainder: c.remainder_exponents(),
                        r1: g.r1,
                        gaps: g.gaps,
                    }
                })
                .collect(),
        }
    }

    pub fn render_text(&self) -> String {
        let cyclic = |p: u64, exps: &[u32]| -> String {
            if exps.is_empty() {
                return "0".into();
            }
            exps.iter()
                .map(|r| format!("Z{}", BigUint::from(p).pow(*r)))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        let order = match &self.order.0 {
            ElementOrder::Finite(n) => n.to_string(),
            ElementOrder::Infinite => "infinite".into(),
        };
        let mut lines = vec![
            format!("group:     {}", self.group),
            format!("order:     {order}"),
            format!("free rank: {}", self.free_rank),
        ];
        for p in &self.primes {
            lines.push(format!("p = {}", p.p));
            let layers: Vec<String> = p
                .layers
                .iter()
                .map(|l| format!("{}^{}", cyclic(p.p, &[l.exponent]), l.multiplicity))
                .collect();
            lines.push(format!("  layers:      {}", layers.join(" + ")));
            lines.push(format!("  repeat-free: {}", cyclic(p.p, &p.repeat_free)));
            lines.push(format!("  remainder:   {}", cyclic(p.p, &p.remainder)));
            lines.push(format!("  r1 = {}  gaps = {:?}", p.r1, p.gaps));
        }
        lines.join("\n")
    }
}
