//! Kac--Kazhdan moves, linkage classes, deformations and classification.
//!
//! A Kac--Kazhdan move out of `lam` is a pair `(beta, n)` with
//! `2(lam + rho, beta) = n (beta, beta)` and target `lam - n*beta`. For a
//! real root the integer `n` is forced; for an imaginary root the condition
//! holds exactly at the critical level and `n` is arbitrary. The moves
//! generate the classical linkage equivalence; the restricted classes are
//! dot orbits of the integral Weyl group and refine it by delta shifts.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::rootsys::{rat_to_i64, AffineRoot, AffineWeight, FiniteRoot, RootSystemData};
use crate::weights::{bar, is_critical, Window};
use crate::weyl::{
    finite_dot_reflect, finite_integral_roots, integral_generators, integral_roots, orbit_dot,
    IntegralRootDescription, OrbitResult,
};
use crate::{rat, Error, Rat};

/// Safety cap for finite Weyl orbit enumeration in [`classify_class`].
const FINITE_ORBIT_CAP: usize = 2_000_000;

/// A single Kac--Kazhdan move: `target = lam - n * beta` with
/// `2(lam + rho, beta) = n (beta, beta)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KKMove {
    pub beta: AffineRoot,
    pub n: i64,
    pub target: AffineWeight,
}

/// The three deformation regimes used for deformed integral roots: the
/// residue field (full conditions), the quotient field (generic) and the
/// height-one localization at a coroot (subgeneric).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeformationSpec {
    Closed,
    Generic,
    Subgeneric(FiniteRoot),
}

/// Classification of a critical restricted class by its bar image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassKind {
    Generic,
    Subgeneric(FiniteRoot),
    Higher(usize),
}

/// The finite dot orbit of the bar image together with its classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub kind: ClassKind,
    pub finite_orbit: Vec<Vec<Rat>>,
    pub integral_finite: Vec<FiniteRoot>,
}

impl ClassReport {
    pub fn orbit_size(&self) -> usize {
        self.finite_orbit.len()
    }
}

/// All Kac--Kazhdan moves out of `lam` with target inside the window.
///
/// Real roots range over `alpha + m*delta` with `|m| <= depth`; the solving
/// `n` is unique per root and included whenever it is an integer (both signs
/// occur because both root signs are enumerated). Imaginary moves exist only
/// at the critical level: `beta = l*delta` with `l >= 1` and any nonzero `n`
/// whose target stays in the window.
pub fn kk_moves(rs: &RootSystemData, lam: &AffineWeight, w: &Window) -> Result<Vec<KKMove>, Error> {
    Ok(kk_moves_with_clip(rs, lam, w)?.0)
}

/// Same as [`kk_moves`], also reporting whether some in-range candidate move
/// had to be discarded because its target lies outside the window.
pub fn kk_moves_with_clip(
    rs: &RootSystemData,
    lam: &AffineWeight,
    w: &Window,
) -> Result<(Vec<KKMove>, bool), Error> {
    if !w.contains(rs, lam) {
        return Err(Error::WeightNotInWindow);
    }
    let depth = w.depth() as i64;
    let rho = rs.rho();
    let shifted = lam.add(&rho);
    let mut moves = Vec::new();
    let mut clipped = false;

    for alpha in rs.all_roots() {
        for m in -depth..=depth {
            let beta = AffineRoot::real(alpha.clone(), m);
            let b = rs.embed_root(&beta);
            let ratio = rat(2) * rs.pairing(&shifted, &b) / rs.pairing(&b, &b);
            let Some(n) = rat_to_i64(&ratio) else {
                continue;
            };
            let target = lam.sub(&b.scaled(&rat(n)));
            if w.contains(rs, &target) {
                moves.push(KKMove { beta, n, target });
            } else {
                clipped = true;
            }
        }
    }

    if is_critical(rs, lam) {
        // Delta-shift amplitudes that can possibly stay inside the window.
        use num_traits::Signed;
        let mut amplitude = depth;
        for c in w.ceilings() {
            let offset = (&c.delta - &lam.delta).abs().ceil();
            amplitude = amplitude.max(depth + rat_to_i64(&offset).unwrap_or(0));
        }
        for l in 1..=amplitude {
            let mut n = -amplitude;
            while n <= amplitude {
                if n != 0 && (n * l).abs() <= amplitude {
                    let target = lam.shifted_delta(-n * l);
                    if w.contains(rs, &target) {
                        moves.push(KKMove {
                            beta: AffineRoot::imaginary(l),
                            n,
                            target,
                        });
                    }
                }
                n += 1;
            }
        }
        // The full imaginary family is infinite, so a window always clips it.
        clipped = true;
    }

    moves.sort_by(|a, b| (&a.beta, a.n).cmp(&(&b.beta, b.n)));
    Ok((moves, clipped))
}

/// Closure of `{lam}` under Kac--Kazhdan moves inside the window.
///
/// At the critical level this is the window part of the dot orbit of the
/// integral Weyl group together with all its delta shifts.
pub fn classical_class(
    rs: &RootSystemData,
    lam: &AffineWeight,
    w: &Window,
) -> Result<OrbitResult, Error> {
    if !w.contains(rs, lam) {
        return Err(Error::WeightNotInWindow);
    }
    let mut seen: BTreeSet<Vec<Rat>> = BTreeSet::new();
    seen.insert(lam.coord_key());
    let mut members = vec![lam.clone()];
    let mut queue = VecDeque::from([lam.clone()]);
    let mut truncated = false;
    while let Some(current) = queue.pop_front() {
        let (moves, clipped) = kk_moves_with_clip(rs, &current, w)?;
        truncated |= clipped;
        for mv in moves {
            if seen.insert(mv.target.coord_key()) {
                members.push(mv.target.clone());
                queue.push_back(mv.target);
            }
        }
    }
    members.sort_by(AffineWeight::lex_cmp);
    Ok(OrbitResult {
        members,
        generators_used: Vec::new(),
        truncated,
    })
}

/// The restricted linkage class of a critical weight inside the window: the
/// dot orbit under `{s_{alpha + n delta} : alpha integral}` with `|n|`
/// bounded by the window's shift bound.
pub fn restricted_class(
    rs: &RootSystemData,
    lam: &AffineWeight,
    w: &Window,
) -> Result<OrbitResult, Error> {
    if !is_critical(rs, lam) {
        return Err(Error::NotCritical {
            op: "restricted_class",
            expected: format!("{}", -rs.dual_coxeter()),
        });
    }
    let desc = integral_roots(rs, lam);
    let gens = integral_generators(&desc, w.shift_bound());
    orbit_dot(rs, lam, &gens, w)
}

/// Integral roots in the three deformation regimes.
///
/// Over the quotient field no finite root pairs to zero with the deformation
/// parameter, so no real family survives; over a height-one localization at
/// `alpha_vee` only `{alpha, -alpha}` can. The imaginary flag is unaffected.
pub fn deformed_integral_roots(
    rs: &RootSystemData,
    lam: &AffineWeight,
    d: &DeformationSpec,
) -> Result<IntegralRootDescription, Error> {
    let full = integral_roots(rs, lam);
    match d {
        DeformationSpec::Closed => Ok(full),
        DeformationSpec::Generic => Ok(IntegralRootDescription {
            critical: full.critical,
            entries: Vec::new(),
            imaginary_integral: full.imaginary_integral,
        }),
        DeformationSpec::Subgeneric(alpha) => {
            if !rs.is_positive_root(&alpha.coords) {
                return Err(Error::NotAPositiveRoot {
                    coords: alpha.coords.clone(),
                });
            }
            let neg = alpha.negated();
            Ok(IntegralRootDescription {
                critical: full.critical,
                entries: full
                    .entries
                    .into_iter()
                    .filter(|(r, _)| *r == *alpha || *r == neg)
                    .collect(),
                imaginary_integral: full.imaginary_integral,
            })
        }
    }
}

/// Classifies the restricted class of a critical weight by the finite dot
/// orbit of its bar image under the finite integral Weyl group.
///
/// Window-independent and exact: orbit size 1 is generic, 2 is subgeneric
/// (with the unique moving positive root), anything larger is reported as a
/// higher class without further structure.
pub fn classify_class(rs: &RootSystemData, lam: &AffineWeight) -> Result<ClassReport, Error> {
    if !is_critical(rs, lam) {
        return Err(Error::NotCritical {
            op: "classify_class",
            expected: format!("{}", -rs.dual_coxeter()),
        });
    }
    let lam_bar = bar(lam);
    let integral_finite = finite_integral_roots(rs, &lam_bar);
    let positive: Vec<&FiniteRoot> = integral_finite.iter().filter(|r| r.is_positive()).collect();

    let mut orbit: BTreeSet<Vec<Rat>> = BTreeSet::new();
    orbit.insert(lam_bar.clone());
    let mut queue = VecDeque::from([lam_bar.clone()]);
    while let Some(current) = queue.pop_front() {
        for alpha in &positive {
            let img = finite_dot_reflect(rs, alpha, &current);
            if orbit.insert(img.clone()) {
                if orbit.len() > FINITE_ORBIT_CAP {
                    return Err(Error::OrbitTooLarge {
                        cap: FINITE_ORBIT_CAP,
                    });
                }
                queue.push_back(img);
            }
        }
    }
    let finite_orbit: Vec<Vec<Rat>> = orbit.into_iter().collect();

    let kind = match finite_orbit.len() {
        1 => ClassKind::Generic,
        2 => {
            let mover = positive
                .iter()
                .find(|alpha| finite_dot_reflect(rs, alpha, &lam_bar) != lam_bar)
                .ok_or_else(|| Error::Internal("two-element orbit without a mover".into()))?;
            ClassKind::Subgeneric((*mover).clone())
        }
        n => ClassKind::Higher(n),
    };
    Ok(ClassReport {
        kind,
        finite_orbit,
        integral_finite,
    })
}

/// Checks that the restricted class is recovered as the common refinement of
/// the rank-one orbit relations: the closure of `{lam}` under the dot orbits
/// of each `W_alpha` (alpha ranging over the positive integral finite roots)
/// must equal `restricted_class(lam, w)` inside the window.
pub fn refinement_check(
    rs: &RootSystemData,
    lam: &AffineWeight,
    w: &Window,
) -> Result<bool, Error> {
    if !is_critical(rs, lam) {
        return Err(Error::NotCritical {
            op: "refinement_check",
            expected: format!("{}", -rs.dual_coxeter()),
        });
    }
    let desc = integral_roots(rs, lam);
    let families: Vec<FiniteRoot> = desc.positive_entries().map(|(r, _)| r.clone()).collect();
    let bound = w.shift_bound() as i64;

    let mut seen: BTreeSet<Vec<Rat>> = BTreeSet::new();
    seen.insert(lam.coord_key());
    let mut members = vec![lam.clone()];
    let mut queue = VecDeque::from([lam.clone()]);
    while let Some(current) = queue.pop_front() {
        for alpha in &families {
            let gens: Vec<AffineRoot> = (-bound..=bound)
                .map(|n| AffineRoot::real(alpha.clone(), n))
                .collect();
            let rank_one = orbit_dot(rs, &current, &gens, w)?;
            for m in rank_one.members {
                if seen.insert(m.coord_key()) {
                    members.push(m.clone());
                    queue.push_back(m);
                }
            }
        }
    }
    members.sort_by(AffineWeight::lex_cmp);

    let restricted = restricted_class(rs, lam, w)?;
    Ok(members == restricted.members)
}

/// Serializable view of a [`ClassReport`] matching the documented schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReportJson {
    pub kind: String,
    pub alpha: Option<Vec<i64>>,
    pub orbit_size: usize,
    pub finite_orbit: Vec<FiniteWeightJson>,
}

/// A finite weight as an array of `"p/q"` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FiniteWeightJson(#[serde(with = "crate::serde_rat_vec")] pub Vec<Rat>);

impl From<&ClassReport> for ClassReportJson {
    fn from(report: &ClassReport) -> Self {
        let (kind, alpha) = match &report.kind {
            ClassKind::Generic => ("generic".to_string(), None),
            ClassKind::Subgeneric(a) => ("subgeneric".to_string(), Some(a.coords.clone())),
            ClassKind::Higher(_) => ("higher".to_string(), None),
        };
        ClassReportJson {
            kind,
            alpha,
            orbit_size: report.orbit_size(),
            finite_orbit: report
                .finite_orbit
                .iter()
                .map(|w| FiniteWeightJson(w.clone()))
                .collect(),
        }
    }
}
