//! Truncated formal characters, the p/q partition series and conversions.
//!
//! A [`FormalCharacter`] is a finitely supported integer function on the
//! weights below an anchor, truncated at a certificate height (`depth`).
//! Support points are stored by their order certificate relative to the
//! anchor, which makes the representation exact and canonical.
//!
//! The coefficient of a Verma character at `lam - nu` counts multisets of
//! positive affine roots summing to `nu`, where the imaginary root `l*delta`
//! contributes `rank` distinguishable colors; the restricted Verma character
//! counts multisets of positive *real* roots only. The two are related by
//! convolution with the colored-partition series `p` and its inverse `q`,
//! the coefficient series of `prod_{l>=1} (1 - x^l)^{-rank}` and
//! `prod_{l>=1} (1 - x^l)^{rank}`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::rootsys::{AffineWeight, RootSystemData};
use crate::weights::{
    decompose_difference, is_critical, simplex_certificates, DepthCap, OrderCertificate,
};
use crate::Error;

/// Integer coefficients of a series, indexed 0..=N.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffSeries {
    pub values: Vec<i64>,
}

impl CoeffSeries {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Coefficients of `prod_{l>=1} (1 - x^l)^{-rank}` up to `x^N`: the number
/// of partitions of `n` into parts of `rank` colors. `p(0) = 1`.
pub fn p_series(rank: usize, n: usize) -> CoeffSeries {
    let mut values = vec![0i64; n + 1];
    values[0] = 1;
    for part in 1..=n {
        for _color in 0..rank {
            for i in part..=n {
                values[i] += values[i - part];
            }
        }
    }
    CoeffSeries { values }
}

/// Coefficients of `prod_{l>=1} (1 - x^l)^{rank}` up to `x^N`, the inverse
/// series of [`p_series`]. `q(0) = 1`.
pub fn q_series(rank: usize, n: usize) -> CoeffSeries {
    let mut values = vec![0i64; n + 1];
    values[0] = 1;
    for part in 1..=n {
        for _color in 0..rank {
            for i in (part..=n).rev() {
                values[i] -= values[i - part];
            }
        }
    }
    CoeffSeries { values }
}

/// A finitely supported integer function on the weights `mu <= anchor` with
/// certificate height at most `depth`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalCharacter {
    anchor: AffineWeight,
    depth: u32,
    support: BTreeMap<OrderCertificate, i64>,
}

impl FormalCharacter {
    pub(crate) fn from_support(
        anchor: AffineWeight,
        depth: u32,
        support: BTreeMap<OrderCertificate, i64>,
    ) -> Self {
        debug_assert!(support
            .iter()
            .all(|(c, v)| c.height() <= depth as i64 && *v != 0));
        FormalCharacter {
            anchor,
            depth,
            support,
        }
    }

    pub fn anchor(&self) -> &AffineWeight {
        &self.anchor
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Coefficient at `anchor - (certificate combination)`; zero off support.
    pub fn coefficient_at(&self, cert: &OrderCertificate) -> i64 {
        self.support.get(cert).copied().unwrap_or(0)
    }

    /// Coefficient at an arbitrary weight (zero for weights outside the cone).
    pub fn coefficient(&self, rs: &RootSystemData, mu: &AffineWeight) -> i64 {
        match crate::weights::leq(rs, mu, &self.anchor) {
            Some(cert) => self.coefficient_at(&cert),
            None => 0,
        }
    }

    pub fn support(&self) -> impl Iterator<Item = (&OrderCertificate, i64)> {
        self.support.iter().map(|(c, &v)| (c, v))
    }

    pub fn support_len(&self) -> usize {
        self.support.len()
    }

    /// Support as weights with heights and coefficients, sorted by
    /// (height, lexicographic weight).
    pub fn support_weights(&self, rs: &RootSystemData) -> Vec<(AffineWeight, i64, i64)> {
        let mut rows: Vec<(AffineWeight, i64, i64)> = self
            .support
            .iter()
            .map(|(c, &v)| {
                (
                    crate::weights::weight_from_certificate(rs, &self.anchor, c),
                    c.height(),
                    v,
                )
            })
            .collect();
        rows.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.lex_cmp(&b.0)));
        rows
    }

    /// One line per support weight: weight JSON, height, coefficient.
    pub fn to_tsv(&self, rs: &RootSystemData) -> String {
        let mut out = String::new();
        for (w, h, v) in self.support_weights(rs) {
            let wj = serde_json::to_string(&w).expect("weight serializes");
            out.push_str(&format!("{wj}\t{h}\t{v}\n"));
        }
        out
    }

    pub fn to_json(&self, rs: &RootSystemData) -> CharacterJson {
        CharacterJson {
            anchor: self.anchor.clone(),
            depth: self.depth,
            support: self
                .support_weights(rs)
                .into_iter()
                .map(|(weight, height, coefficient)| CharacterRow {
                    weight,
                    height,
                    coefficient,
                })
                .collect(),
        }
    }

    /// Restriction to a smaller depth.
    pub fn truncated(&self, depth: u32) -> FormalCharacter {
        FormalCharacter {
            anchor: self.anchor.clone(),
            depth: depth.min(self.depth),
            support: self
                .support
                .iter()
                .filter(|(c, _)| c.height() <= depth as i64)
                .map(|(c, &v)| (c.clone(), v))
                .collect(),
        }
    }

    /// Adds `sign` times `other` into `self`, re-anchoring the support of
    /// `other` below the anchor of `self`. Requires `other.anchor <= anchor`.
    pub(crate) fn accumulate(
        &mut self,
        rs: &RootSystemData,
        other: &FormalCharacter,
        sign: i64,
    ) -> Result<(), Error> {
        let offset = crate::weights::leq(rs, &other.anchor, &self.anchor)
            .ok_or_else(|| Error::Internal("accumulate: anchors are incomparable".into()))?;
        for (cert, &v) in &other.support {
            let key = cert.add(&offset);
            if key.height() > self.depth as i64 {
                continue;
            }
            let entry = self.support.entry(key.clone()).or_insert(0);
            *entry += sign * v;
            if *entry == 0 {
                self.support.remove(&key);
            }
        }
        Ok(())
    }
}

/// JSON view of a character: anchor, depth and sorted support rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterJson {
    pub anchor: AffineWeight,
    pub depth: u32,
    pub support: Vec<CharacterRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRow {
    pub weight: AffineWeight,
    pub height: i64,
    pub coefficient: i64,
}

/// Positive real affine roots with certificate height at most `depth`, as
/// certificates: `alpha` positive for the shift 0, any finite root plus
/// `n*delta` for shifts `n >= 1`.
fn real_root_items(rs: &RootSystemData, depth: u32) -> Vec<OrderCertificate> {
    let mut items = Vec::new();
    let theta = &rs.theta().coords;
    for alpha in rs.positive_roots() {
        let cert = OrderCertificate {
            c0: 0,
            c_fin: alpha.coords.clone(),
        };
        if cert.height() <= depth as i64 {
            items.push(cert);
        }
    }
    for n in 1..=depth as i64 {
        for alpha in rs.all_roots() {
            let c_fin: Vec<i64> = alpha
                .coords
                .iter()
                .zip(theta)
                .map(|(a, t)| a + n * t)
                .collect();
            let cert = OrderCertificate { c0: n, c_fin };
            if cert.height() <= depth as i64 {
                items.push(cert);
            }
        }
    }
    items
}

/// Imaginary items `l*delta`, one per color, heights bounded by `depth`.
fn imaginary_root_items(rs: &RootSystemData, depth: u32) -> Vec<OrderCertificate> {
    let mut items = Vec::new();
    let theta = &rs.theta().coords;
    for l in 1..=depth as i64 {
        let cert = OrderCertificate {
            c0: l,
            c_fin: theta.iter().map(|t| l * t).collect(),
        };
        if cert.height() <= depth as i64 {
            for _color in 0..rs.rank() {
                items.push(cert.clone());
            }
        }
    }
    items
}

/// Expands `e^anchor * prod_items (1 + e^{-item} + e^{-2 item} + ...)` up to
/// the given height by an unbounded-knapsack pass per item.
fn product_character(
    rs: &RootSystemData,
    anchor: &AffineWeight,
    depth: u32,
    items: &[OrderCertificate],
) -> FormalCharacter {
    let cells = simplex_certificates(rs.rank(), depth);
    let index: HashMap<&OrderCertificate, usize> =
        cells.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut coeff = vec![0i64; cells.len()];
    coeff[0] = 1;
    for item in items {
        // Ascending height order makes a single pass count unbounded powers.
        for (i, cell) in cells.iter().enumerate() {
            if let Some(prev) = cell.checked_sub(item) {
                coeff[i] += coeff[index[&prev]];
            }
        }
    }
    let support: BTreeMap<OrderCertificate, i64> = cells
        .into_iter()
        .zip(coeff)
        .filter(|(_, v)| *v != 0)
        .collect();
    FormalCharacter::from_support(anchor.clone(), depth, support)
}

/// Character of the Verma module with highest weight `lam`, truncated at
/// `depth`. The coefficient at `lam - nu` is the number of multisets of
/// positive affine roots summing to `nu`, imaginary roots carrying `rank`
/// colors; the leading coefficient is 1.
pub fn verma_character(
    rs: &RootSystemData,
    lam: &AffineWeight,
    depth: u32,
    cap: DepthCap,
) -> Result<FormalCharacter, Error> {
    cap.check(depth)?;
    let mut items = real_root_items(rs, depth);
    items.extend(imaginary_root_items(rs, depth));
    Ok(product_character(rs, lam, depth, &items))
}

/// Character of the restricted Verma module with critical highest weight
/// `lam`: the product over positive *real* roots only.
pub fn restricted_verma_character(
    rs: &RootSystemData,
    lam: &AffineWeight,
    depth: u32,
    cap: DepthCap,
) -> Result<FormalCharacter, Error> {
    cap.check(depth)?;
    if !is_critical(rs, lam) {
        return Err(Error::NotCritical {
            op: "restricted_verma_character",
            expected: format!("{}", -rs.dual_coxeter()),
        });
    }
    let items = real_root_items(rs, depth);
    Ok(product_character(rs, lam, depth, &items))
}

/// `sum_n series[n] * (ch shifted by -n*delta)`, truncated to the depth of
/// `ch` below its anchor.
pub fn convolve_delta(
    rs: &RootSystemData,
    series: &CoeffSeries,
    ch: &FormalCharacter,
) -> Result<FormalCharacter, Error> {
    if series.len() < ch.depth() as usize || series.is_empty() {
        return Err(Error::SeriesTooShort {
            len: series.len(),
            depth: ch.depth(),
        });
    }
    let delta_cert = OrderCertificate {
        c0: 1,
        c_fin: rs.theta().coords.clone(),
    };
    let depth = ch.depth() as i64;
    let mut support: BTreeMap<OrderCertificate, i64> = BTreeMap::new();
    let max_shift = depth / delta_cert.height();
    for n in 0..=max_shift {
        let coeff = series.values[n as usize];
        if coeff == 0 {
            continue;
        }
        let shift = delta_cert.scaled(n);
        for (cert, v) in ch.support() {
            let shifted = cert.add(&shift);
            if shifted.height() > depth {
                continue;
            }
            let entry = support.entry(shifted).or_insert(0);
            *entry += coeff * v;
        }
    }
    support.retain(|_, v| *v != 0);
    Ok(FormalCharacter::from_support(
        ch.anchor().clone(),
        ch.depth(),
        support,
    ))
}

/// Exhaustive count of multisets of positive affine roots summing to `nu`
/// (a weight difference), by bounded depth-first enumeration. Imaginary
/// roots carry `rank` colors unless `real_only` is set.
///
/// This is the independent oracle for the two character operations: it
/// shares no code with the knapsack pass above.
pub fn brute_force_root_partitions(
    rs: &RootSystemData,
    nu: &AffineWeight,
    real_only: bool,
    depth: u32,
) -> Result<u64, Error> {
    let target = decompose_difference(rs, nu).ok_or(Error::NotDecomposable)?;
    if target.height() > depth as i64 {
        return Err(Error::HeightExceedsDepth {
            height: target.height(),
            depth,
        });
    }
    // Item list enumerated from scratch: positive finite roots, real roots
    // alpha + n*delta (n >= 1), and rank colored copies of each l*delta.
    let theta = &rs.theta().coords;
    let mut items: Vec<OrderCertificate> = Vec::new();
    for alpha in rs.positive_roots() {
        items.push(OrderCertificate {
            c0: 0,
            c_fin: alpha.coords.clone(),
        });
    }
    let max_shift = target.c0;
    for n in 1..=max_shift {
        for alpha in rs.all_roots() {
            items.push(OrderCertificate {
                c0: n,
                c_fin: alpha
                    .coords
                    .iter()
                    .zip(theta)
                    .map(|(a, t)| a + n * t)
                    .collect(),
            });
        }
        if !real_only {
            for _color in 0..rs.rank() {
                items.push(OrderCertificate {
                    c0: n,
                    c_fin: theta.iter().map(|t| n * t).collect(),
                });
            }
        }
    }

    fn count(items: &[OrderCertificate], remaining: &OrderCertificate) -> u64 {
        if remaining.is_zero() {
            return 1;
        }
        let Some((first, rest)) = items.split_first() else {
            return 0;
        };
        let mut total = 0u64;
        let mut left = remaining.clone();
        loop {
            total += count(rest, &left);
            match left.checked_sub(first) {
                Some(next) => left = next,
                None => break,
            }
        }
        total
    }
    Ok(count(&items, &target))
}
