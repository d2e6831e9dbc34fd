//! Dominance order with certificates, finite windows, criticality, bar map.
//!
//! `mu <= lam` holds when `lam - mu` is a nonnegative integer combination of
//! the simple affine roots (the finite simples plus `-theta + delta`). The
//! combination is unique and is returned as an [`OrderCertificate`]. A
//! [`Window`] is the computable truncation of an open bounded subset of the
//! weight space: a set of ceilings plus a bound on the certificate height.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::rootsys::{is_nonneg_integer, rat_to_i64, AffineWeight, RootSystemData};
use crate::{rat, Error, Rat};

/// Default bound on window depths; callers opt in to larger values.
pub const DEFAULT_DEPTH_CAP: u32 = 12;

/// Safety cap for depth-controlled enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DepthCap(pub u32);

impl Default for DepthCap {
    fn default() -> Self {
        DepthCap(DEFAULT_DEPTH_CAP)
    }
}

impl DepthCap {
    pub fn unlimited() -> Self {
        DepthCap(u32::MAX)
    }

    pub fn check(self, depth: u32) -> Result<(), Error> {
        if depth > self.0 {
            Err(Error::DepthExceedsCap { depth, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

/// Witness for `mu <= lam`:
/// `mu + c0 * (-theta + delta) + sum_i c_fin[i] * alpha_i = lam`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderCertificate {
    pub c0: i64,
    pub c_fin: Vec<i64>,
}

impl OrderCertificate {
    pub fn zero(rank: usize) -> Self {
        OrderCertificate {
            c0: 0,
            c_fin: vec![0; rank],
        }
    }

    /// Affine height `c0 + sum c_fin`.
    pub fn height(&self) -> i64 {
        self.c0 + self.c_fin.iter().sum::<i64>()
    }

    pub fn is_zero(&self) -> bool {
        self.c0 == 0 && self.c_fin.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &OrderCertificate) -> OrderCertificate {
        OrderCertificate {
            c0: self.c0 + other.c0,
            c_fin: self
                .c_fin
                .iter()
                .zip(&other.c_fin)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Componentwise difference, `None` if any component would go negative.
    pub fn checked_sub(&self, other: &OrderCertificate) -> Option<OrderCertificate> {
        if self.c0 < other.c0 {
            return None;
        }
        let mut c_fin = Vec::with_capacity(self.c_fin.len());
        for (a, b) in self.c_fin.iter().zip(&other.c_fin) {
            if a < b {
                return None;
            }
            c_fin.push(a - b);
        }
        Some(OrderCertificate {
            c0: self.c0 - other.c0,
            c_fin,
        })
    }

    pub fn scaled(&self, k: i64) -> OrderCertificate {
        OrderCertificate {
            c0: self.c0 * k,
            c_fin: self.c_fin.iter().map(|c| c * k).collect(),
        }
    }
}

impl PartialOrd for OrderCertificate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrderCertificate {
    /// Height-major order with lexicographic tie-break; used to keep
    /// character supports and enumerations deterministic.
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.c0.cmp(&other.c0))
            .then_with(|| self.c_fin.cmp(&other.c_fin))
    }
}

/// Height of a certificate (same as [`OrderCertificate::height`]).
pub fn height(cert: &OrderCertificate) -> i64 {
    cert.height()
}

/// Decomposes a weight difference as a nonnegative integer combination of
/// simple affine roots, if possible.
pub fn decompose_difference(rs: &RootSystemData, diff: &AffineWeight) -> Option<OrderCertificate> {
    use num_traits::Zero;
    if !diff.level.is_zero() {
        return None;
    }
    if !is_nonneg_integer(&diff.delta) {
        return None;
    }
    let c0 = rat_to_i64(&diff.delta)?;
    // finite part + c0 * theta must lie in the nonnegative integer span of
    // the finite simple roots.
    let theta_w = rs.root_weight_coords(rs.theta());
    let fin: Vec<Rat> = diff
        .finite
        .iter()
        .zip(&theta_w)
        .map(|(f, t)| f + t * rat(c0))
        .collect();
    let root_coords = rs.weight_root_coords(&fin);
    let mut c_fin = Vec::with_capacity(rs.rank());
    for c in &root_coords {
        if !is_nonneg_integer(c) {
            return None;
        }
        c_fin.push(rat_to_i64(c)?);
    }
    Some(OrderCertificate { c0, c_fin })
}

/// Returns the unique certificate for `mu <= lam`, or `None` when the two
/// weights are incomparable. Weights of different levels never compare.
pub fn leq(rs: &RootSystemData, mu: &AffineWeight, lam: &AffineWeight) -> Option<OrderCertificate> {
    decompose_difference(rs, &lam.sub(mu))
}

/// Reconstructs `anchor - c0*(-theta+delta) - sum c_i alpha_i`.
pub fn weight_from_certificate(
    rs: &RootSystemData,
    anchor: &AffineWeight,
    cert: &OrderCertificate,
) -> AffineWeight {
    let mut fin = anchor.finite.clone();
    let theta_w = rs.root_weight_coords(rs.theta());
    for (f, t) in fin.iter_mut().zip(&theta_w) {
        *f += t * rat(cert.c0);
    }
    for (i, &c) in cert.c_fin.iter().enumerate() {
        if c != 0 {
            let alpha_w = rs.root_weight_coords(&crate::rootsys::FiniteRoot::simple(rs.rank(), i));
            for (f, a) in fin.iter_mut().zip(&alpha_w) {
                *f -= a * rat(c);
            }
        }
    }
    AffineWeight::new(fin, anchor.level.clone(), &anchor.delta - rat(cert.c0))
}

/// All certificates `(c0, c_fin)` with nonnegative entries and height at most
/// `depth`, sorted height-major.
pub(crate) fn simplex_certificates(rank: usize, depth: u32) -> Vec<OrderCertificate> {
    let mut out = Vec::new();
    let mut current = OrderCertificate::zero(rank);
    fn rec(
        out: &mut Vec<OrderCertificate>,
        current: &mut OrderCertificate,
        pos: usize,
        remaining: i64,
        rank: usize,
    ) {
        if pos == rank + 1 {
            out.push(current.clone());
            return;
        }
        for v in 0..=remaining {
            if pos == 0 {
                current.c0 = v;
            } else {
                current.c_fin[pos - 1] = v;
            }
            rec(out, current, pos + 1, remaining - v, rank);
        }
        if pos == 0 {
            current.c0 = 0;
        } else {
            current.c_fin[pos - 1] = 0;
        }
    }
    rec(&mut out, &mut current, 0, depth as i64, rank);
    out.sort();
    out
}

/// Lists exactly the weights `mu <= lam` whose certificate height is at most
/// `depth`, anchor first, in height-major order.
///
/// The list size is the number of lattice points of the simplex
/// `{c >= 0, sum c <= depth}` in `rank + 1` variables.
pub fn enumerate_below(
    rs: &RootSystemData,
    lam: &AffineWeight,
    depth: u32,
    cap: DepthCap,
) -> Result<Vec<AffineWeight>, Error> {
    cap.check(depth)?;
    Ok(simplex_certificates(rs.rank(), depth)
        .iter()
        .map(|c| weight_from_certificate(rs, lam, c))
        .collect())
}

/// True iff `(lam + rho, delta) = 0`, i.e. the level is `-h_vee`.
pub fn is_critical(rs: &RootSystemData, lam: &AffineWeight) -> bool {
    lam.level == rat(-rs.dual_coxeter())
}

/// Projection to the finite part; kills both kappa and delta.
pub fn bar(lam: &AffineWeight) -> Vec<Rat> {
    lam.finite.clone()
}

/// Finite truncation of an open bounded subset: the union over the ceilings
/// `nu` of `{mu <= nu with certificate height <= depth}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    ceilings: Vec<AffineWeight>,
    depth: u32,
}

impl Window {
    /// Requires at least one ceiling; all ceilings must share one level
    /// (weights of different levels are incomparable anyway).
    pub fn new(ceilings: Vec<AffineWeight>, depth: u32) -> Result<Self, Error> {
        let first = ceilings.first().ok_or(Error::EmptyWindow)?;
        if ceilings.iter().any(|c| c.level != first.level) {
            return Err(Error::MixedCeilingLevels);
        }
        Ok(Window { ceilings, depth })
    }

    /// Single-ceiling window.
    pub fn below(ceiling: AffineWeight, depth: u32) -> Self {
        Window {
            ceilings: vec![ceiling],
            depth,
        }
    }

    pub fn ceilings(&self) -> &[AffineWeight] {
        &self.ceilings
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn contains(&self, rs: &RootSystemData, mu: &AffineWeight) -> bool {
        self.ceilings
            .iter()
            .any(|c| leq(rs, mu, c).is_some_and(|cert| cert.height() <= self.depth as i64))
    }

    /// Delta-shift bound sufficient for reflections moving between window
    /// members: the depth plus the delta spread of the ceilings. For a
    /// single ceiling this is just the depth.
    pub fn shift_bound(&self) -> u32 {
        use num_traits::Signed;
        let spread = self
            .ceilings
            .iter()
            .flat_map(|a| {
                self.ceilings
                    .iter()
                    .map(move |b| (&a.delta - &b.delta).abs().ceil())
            })
            .max()
            .unwrap_or_else(|| rat(0));
        self.depth + rat_to_i64(&spread).unwrap_or(0).max(0) as u32
    }

    /// Materializes the member set, deduplicated and sorted lexicographically.
    pub fn members(&self, rs: &RootSystemData, cap: DepthCap) -> Result<Vec<AffineWeight>, Error> {
        let mut all = Vec::new();
        for c in &self.ceilings {
            all.extend(enumerate_below(rs, c, self.depth, cap)?);
        }
        all.sort_by(AffineWeight::lex_cmp);
        all.dedup();
        Ok(all)
    }
}
