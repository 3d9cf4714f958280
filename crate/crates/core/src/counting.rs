//! Closed-form counts of automorphism classes in finite abelian groups, and
//! exhaustive enumeration of their representative elements.
//!
//! Classes of a `p`-component depend only on its repeat-free exponents
//! `r_1 < … < r_n`. Writing `n_i = r_{i+1} - r_i` for the gaps, the count is
//! `(r_1 + 1)(n_1 + 1)⋯(n_{n-1} + 1)`, and a finite group has the product of
//! its components' counts.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{PrimaryComponent, PrimarySchema};
use crate::reduction::{CanonicalElement, RepeatFreeVector};

/// First repeat-free exponent and the successive gaps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GapVector {
    pub r1: u32,
    pub gaps: Vec<u32>,
}

impl GapVector {
    /// Gap vector of the ascending exponents `r_1 < … < r_n` (`n ≥ 1`).
    pub fn from_exponents(exponents: &[u32]) -> Self {
        assert!(!exponents.is_empty(), "at least one layer");
        GapVector {
            r1: exponents[0],
            gaps: exponents.windows(2).map(|w| w[1] - w[0]).collect(),
        }
    }

    pub fn exponents(&self) -> Vec<u32> {
        let mut r = self.r1;
        std::iter::once(r)
            .chain(self.gaps.iter().map(|n| {
                r += n;
                r
            }))
            .collect()
    }

    pub fn layers(&self) -> usize {
        self.gaps.len() + 1
    }
}

pub fn gaps(component: &PrimaryComponent) -> GapVector {
    GapVector::from_exponents(&component.repeat_free_exponents())
}

/// `(r_1 + 1) · Π (n_i + 1)`.
pub fn count_classes_rf(g: &GapVector) -> BigUint {
    g.gaps.iter().fold(BigUint::from(g.r1) + 1u32, |acc, &n| {
        acc * (BigUint::from(n) + 1u32)
    })
}

/// Number of representatives whose last nonzero entry sits at layer `j`
/// (0-based, `1 ≤ j < layers`): `(r_1 + 1)(n_1 + 1)⋯(n_{j-1} + 1) · n_j`
/// with gaps indexed from 1.
pub fn count_last_nonzero(g: &GapVector, j: usize) -> Result<BigUint> {
    if j == 0 || j >= g.layers() {
        return Err(Error::PositionOutOfRange {
            position: j,
            valid: format!("1..{}", g.layers()),
        });
    }
    let prefix = GapVector {
        r1: g.r1,
        gaps: g.gaps[..j - 1].to_vec(),
    };
    Ok(count_classes_rf(&prefix) * g.gaps[j - 1])
}

/// Number of representatives with exactly `m` nonzero entries, indexed by
/// `m`.
pub fn count_by_support_size(g: &GapVector) -> Vec<BigUint> {
    let r = g.exponents();
    let n = r.len();
    // chains[i][l][m]: chains of m+1 entries ending at layer i with exponent l
    let mut chains: Vec<Vec<Vec<BigUint>>> = r
        .iter()
        .map(|&ri| vec![vec![BigUint::zero(); n]; ri as usize])
        .collect();
    for i in 0..n {
        for l in 0..r[i] as usize {
            chains[i][l][0] = BigUint::one();
        }
        for j in i + 1..n {
            let gap = (r[j] - r[i]) as usize;
            for li in 0..r[i] as usize {
                for lj in li + 1..li + gap {
                    for m in 0..n - 1 {
                        let add = chains[i][li][m].clone();
                        if !add.is_zero() {
                            chains[j][lj][m + 1] += add;
                        }
                    }
                }
            }
        }
    }
    let mut histogram = vec![BigUint::zero(); n + 1];
    histogram[0] = BigUint::one();
    for per_layer in &chains {
        for per_exponent in per_layer {
            for (m, count) in per_exponent.iter().enumerate() {
                histogram[m + 1] += count;
            }
        }
    }
    histogram
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeCount {
    pub p: u64,
    pub gaps: GapVector,
    pub count: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCount {
    pub total: BigUint,
    /// One entry per prime, ascending.
    pub per_prime: Vec<PrimeCount>,
}

pub fn count_classes(schema: &PrimarySchema) -> Result<ClassCount> {
    if !schema.is_finite() {
        return Err(Error::InfiniteClasses {
            free_rank: schema.free_rank,
        });
    }
    let per_prime: Vec<PrimeCount> = schema
        .components
        .iter()
        .map(|c| {
            let g = gaps(c);
            PrimeCount {
                p: c.p,
                count: count_classes_rf(&g),
                gaps: g,
            }
        })
        .collect();
    Ok(ClassCount {
        total: per_prime.iter().map(|c| c.count.clone()).product(),
        per_prime,
    })
}

/// All representative vectors of one prime component, ordered by support
/// set and then by exponent tuple.
pub fn enumerate_component(component: &PrimaryComponent) -> Vec<RepeatFreeVector> {
    let r = component.repeat_free_exponents();
    let mut found: Vec<(Vec<usize>, Vec<u32>)> = vec![(Vec::new(), Vec::new())];
    let mut stack: Vec<(Vec<usize>, Vec<u32>)> = (0..r.len())
        .flat_map(|i| (0..r[i]).map(move |l| (vec![i], vec![l])))
        .collect();
    while let Some((support, ls)) = stack.pop() {
        let (i, li) = (*support.last().unwrap(), *ls.last().unwrap());
        for j in i + 1..r.len() {
            // li < lj < li + (r_j - r_i)
            for lj in li + 1..li + (r[j] - r[i]) {
                let mut s = support.clone();
                s.push(j);
                let mut e = ls.clone();
                e.push(lj);
                stack.push((s, e));
            }
        }
        found.push((support, ls));
    }
    found.sort();
    found
        .into_iter()
        .map(|(support, ls)| {
            let mut entries = vec![None; r.len()];
            for (i, l) in support.into_iter().zip(ls) {
                entries[i] = Some(l);
            }
            RepeatFreeVector::new(component.p, r.clone(), entries).expect("valid chain")
        })
        .collect()
}

/// Every representative element of a finite group, in lexicographic order
/// by prime, then support set, then exponent tuple.
pub fn enumerate_representatives(schema: &PrimarySchema) -> Result<Vec<CanonicalElement>> {
    if !schema.is_finite() {
        return Err(Error::InfiniteClasses {
            free_rank: schema.free_rank,
        });
    }
    let per_prime: Vec<Vec<RepeatFreeVector>> =
        schema.components.iter().map(enumerate_component).collect();
    let mut out: Vec<Vec<RepeatFreeVector>> = vec![Vec::new()];
    for options in &per_prime {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v.clone());
                    next
                })
            })
            .collect();
    }
    Ok(out
        .into_iter()
        .map(|components| CanonicalElement {
            components,
            d: BigUint::zero(),
            conforming: true,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{parse_group_spec, to_primary, Layer};

    fn component(p: u64, layers: &[(u32, u32)]) -> PrimaryComponent {
        PrimaryComponent::new(
            p,
            layers
                .iter()
                .map(|&(exponent, multiplicity)| Layer {
                    exponent,
                    multiplicity,
                })
                .collect(),
        )
    }

    fn schema(text: &str) -> PrimarySchema {
        to_primary(&parse_group_spec(text).unwrap())
    }

    fn gv(r1: u32, gaps: &[u32]) -> GapVector {
        GapVector {
            r1,
            gaps: gaps.to_vec(),
        }
    }

    #[test]
    fn gap_vectors() {
        assert_eq!(gaps(&component(2, &[(1, 1), (3, 1)])), gv(1, &[2]));
        assert_eq!(
            gaps(&component(2, &[(1, 1), (2, 1), (4, 1)])),
            gv(1, &[1, 2])
        );
        assert_eq!(gaps(&component(2, &[(2, 5)])), gv(2, &[]));
        assert_eq!(gv(1, &[1, 2]).exponents(), vec![1, 2, 4]);
    }

    #[test]
    fn closed_form_counts() {
        assert_eq!(count_classes_rf(&gv(1, &[])), 2u32.into());
        assert_eq!(count_classes_rf(&gv(1, &[2])), 6u32.into());
        assert_eq!(count_classes_rf(&gv(1, &[1, 2])), 12u32.into());
    }

    #[test]
    fn group_counts() {
        let c = count_classes(&schema("Z12")).unwrap();
        assert_eq!(c.total, 6u32.into());
        assert_eq!(
            c.per_prime
                .iter()
                .map(|pc| (pc.p, pc.count.clone()))
                .collect::<Vec<_>>(),
            vec![(2, 3u32.into()), (3, 2u32.into())]
        );
        assert_eq!(count_classes(&schema("Z8^3")).unwrap().total, 4u32.into());
        assert_eq!(count_classes(&schema("Z1")).unwrap().total, 1u32.into());
        assert_eq!(
            count_classes(&schema("Z4 x Z")),
            Err(Error::InfiniteClasses { free_rank: 1 })
        );
    }

    #[test]
    fn last_nonzero_counts() {
        assert_eq!(count_last_nonzero(&gv(1, &[2]), 1).unwrap(), 4u32.into());
        assert_eq!(count_last_nonzero(&gv(1, &[1, 2]), 2).unwrap(), 8u32.into());
        assert_eq!(count_last_nonzero(&gv(1, &[1]), 1).unwrap(), 2u32.into());
        assert!(count_last_nonzero(&gv(1, &[1]), 0).is_err());
        assert!(count_last_nonzero(&gv(1, &[1]), 2).is_err());
    }

    #[test]
    fn enumerates_z2_z8() {
        let reps = enumerate_representatives(&schema("Z2 x Z8")).unwrap();
        let values: Vec<Vec<BigUint>> = reps.iter().map(|c| c.components[0].values()).collect();
        let expect: Vec<Vec<BigUint>> = [[0u32, 0], [1, 0], [1, 2], [0, 1], [0, 2], [0, 4]]
            .iter()
            .map(|v| v.iter().map(|&x| BigUint::from(x)).collect())
            .collect();
        assert_eq!(values, expect);
    }

    #[test]
    fn enumerates_cyclic_and_trivial() {
        let reps = enumerate_representatives(&schema("Z9")).unwrap();
        let values: Vec<BigUint> = reps.iter().map(|c| c.components[0].value(0)).collect();
        assert_eq!(values, vec![0u32.into(), 1u32.into(), 3u32.into()]);

        let reps = enumerate_representatives(&schema("Z1")).unwrap();
        assert_eq!(reps.len(), 1);
        assert!(reps[0].components.is_empty());

        assert!(enumerate_representatives(&schema("Z2 x Z")).is_err());
    }

    #[test]
    fn product_across_primes_is_lexicographic() {
        let reps = enumerate_representatives(&schema("Z4 x Z3")).unwrap();
        let shown: Vec<String> = reps.iter().map(|c| c.to_string()).collect();
        assert_eq!(
            shown,
            [
                "p=2:(0) p=3:(0)",
                "p=2:(0) p=3:(1)",
                "p=2:(1) p=3:(0)",
                "p=2:(1) p=3:(1)",
                "p=2:(2) p=3:(0)",
                "p=2:(2) p=3:(1)",
            ]
        );
    }

    #[test]
    fn support_histogram_matches_enumeration() {
        for exps in [vec![3], vec![1, 3], vec![1, 2, 4], vec![2, 5, 6, 9]] {
            let c = component(2, &exps.iter().map(|&r| (r, 1)).collect::<Vec<_>>());
            let mut hist = vec![BigUint::zero(); exps.len() + 1];
            for v in enumerate_component(&c) {
                hist[v.nonzero_count()] += 1u32;
            }
            assert_eq!(count_by_support_size(&gaps(&c)), hist, "{exps:?}");
        }
    }

    #[test]
    fn huge_counts_do_not_overflow() {
        let g = gv(60, &[60; 20]);
        assert_eq!(
            count_classes_rf(&g),
            num_traits::pow(BigUint::from(61u32), 21)
        );
    }
}
