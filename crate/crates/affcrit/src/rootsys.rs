//! Finite simple root systems and the derived affine weight arithmetic.
//!
//! A [`RootSystemData`] packages the Cartan matrix of a simple type, its
//! minimal integer symmetrizers, the full set of positive roots (obtained by
//! reflection closure of the simple roots), the highest root, the dual
//! Coxeter number and the finite Weyl vector. On top of that it provides the
//! invariant bilinear form on the affine dual Cartan space
//! `h* ⊕ C·kappa ⊕ C·delta`, normalized so that the highest root has square
//! length 2 (which makes all integrality conditions integer-friendly; they
//! are ratios and therefore independent of the normalization).
//!
//! Coordinate conventions, used everywhere in this crate:
//! * weights carry fundamental-weight coordinates (exact rationals),
//! * roots carry simple-root coordinates (integers),
//! * `cartan[i][j] = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)`, so the
//!   fundamental-weight coordinates of `alpha_j` are the j-th column of the
//!   Cartan matrix.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::{rat, ratio, Error, Rat};

/// Simple Lie type family letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simple type `X_r`, validated against the standard rank ranges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let t = CartanType { family, rank };
        t.validate()?;
        Ok(t)
    }

    /// Rank ranges: A >= 1, B/C >= 2, D >= 4 (D2 is not simple, D3 = A3),
    /// E in 6..=8, F = 4, G = 2.
    pub fn validate(&self) -> Result<(), Error> {
        let err = |reason: &str| Error::InvalidRank {
            family: self.family.letter(),
            rank: self.rank,
            reason: reason.to_string(),
        };
        match self.family {
            Family::A if self.rank >= 1 => Ok(()),
            Family::A => Err(err("type A needs rank >= 1")),
            Family::B | Family::C if self.rank >= 2 => Ok(()),
            Family::B | Family::C => Err(err("types B and C need rank >= 2")),
            Family::D if self.rank >= 4 => Ok(()),
            Family::D if self.rank == 3 => Err(err("D3 is isomorphic to A3; request A3 instead")),
            Family::D => Err(err("D2 is not simple; type D needs rank >= 4")),
            Family::E if (6..=8).contains(&self.rank) => Ok(()),
            Family::E => Err(err("type E exists only for ranks 6, 7, 8")),
            Family::F if self.rank == 4 => Ok(()),
            Family::F => Err(err("type F exists only for rank 4")),
            Family::G if self.rank == 2 => Ok(()),
            Family::G => Err(err("type G exists only for rank 2")),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidRank {
            family: '?',
            rank: 0,
            reason: format!("cannot parse Cartan type from {s:?} (expected e.g. A1, D4, E8)"),
        };
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(family, rank)
    }
}

/// A root of the finite system, in simple-root coordinates.
///
/// Actual roots have all coordinates >= 0 or all <= 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FiniteRoot {
    pub coords: Vec<i64>,
}

impl FiniteRoot {
    pub fn new(coords: Vec<i64>) -> Self {
        FiniteRoot { coords }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        FiniteRoot { coords }
    }

    pub fn negated(&self) -> Self {
        FiniteRoot {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    /// Sum of simple-root coordinates.
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }
}

/// A root of the affine system: real `alpha + n*delta` or imaginary `n*delta`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AffineRoot {
    Real { finite: FiniteRoot, n: i64 },
    Imaginary { n: i64 },
}

impl AffineRoot {
    pub fn real(finite: FiniteRoot, n: i64) -> Self {
        AffineRoot::Real { finite, n }
    }

    pub fn imaginary(n: i64) -> Self {
        assert!(n != 0, "imaginary roots have nonzero delta coefficient");
        AffineRoot::Imaginary { n }
    }

    pub fn is_real(&self) -> bool {
        matches!(self, AffineRoot::Real { .. })
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineRoot::Real { finite, n } => write!(f, "{:?}+{}d", finite.coords, n),
            AffineRoot::Imaginary { n } => write!(f, "{n}d"),
        }
    }
}

/// An element of the affine dual Cartan space in coordinates
/// `(finite part in fundamental weights, level, delta coefficient)`.
///
/// The level is the coordinate along kappa (the functional dual to the
/// central element), the delta coefficient the coordinate along delta. All
/// components are exact rationals and equality is componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineWeight {
    #[serde(with = "crate::serde_rat_vec")]
    pub finite: Vec<Rat>,
    #[serde(with = "crate::serde_rat")]
    pub level: Rat,
    #[serde(with = "crate::serde_rat")]
    pub delta: Rat,
}

impl AffineWeight {
    pub fn new(finite: Vec<Rat>, level: Rat, delta: Rat) -> Self {
        AffineWeight {
            finite,
            level,
            delta,
        }
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_ints(finite: &[i64], level: i64, delta: i64) -> Self {
        AffineWeight {
            finite: finite.iter().map(|&c| rat(c)).collect(),
            level: rat(level),
            delta: rat(delta),
        }
    }

    pub fn zero(rank: usize) -> Self {
        AffineWeight::from_ints(&vec![0; rank], 0, 0)
    }

    /// The weight `delta` itself, i.e. `(0, 0, 1)`.
    pub fn unit_delta(rank: usize) -> Self {
        AffineWeight::from_ints(&vec![0; rank], 0, 1)
    }

    /// The weight `kappa`, i.e. `(0, 1, 0)`.
    pub fn unit_kappa(rank: usize) -> Self {
        AffineWeight::from_ints(&vec![0; rank], 1, 0)
    }

    pub fn rank(&self) -> usize {
        self.finite.len()
    }

    pub fn add(&self, other: &AffineWeight) -> AffineWeight {
        assert_eq!(self.rank(), other.rank(), "weights over different systems");
        AffineWeight {
            finite: self
                .finite
                .iter()
                .zip(&other.finite)
                .map(|(a, b)| a + b)
                .collect(),
            level: &self.level + &other.level,
            delta: &self.delta + &other.delta,
        }
    }

    pub fn sub(&self, other: &AffineWeight) -> AffineWeight {
        assert_eq!(self.rank(), other.rank(), "weights over different systems");
        AffineWeight {
            finite: self
                .finite
                .iter()
                .zip(&other.finite)
                .map(|(a, b)| a - b)
                .collect(),
            level: &self.level - &other.level,
            delta: &self.delta - &other.delta,
        }
    }

    pub fn scaled(&self, c: &Rat) -> AffineWeight {
        AffineWeight {
            finite: self.finite.iter().map(|a| a * c).collect(),
            level: &self.level * c,
            delta: &self.delta * c,
        }
    }

    /// Adds `n*delta` to the weight.
    pub fn shifted_delta(&self, n: i64) -> AffineWeight {
        let mut w = self.clone();
        w.delta += rat(n);
        w
    }

    /// Total order on coordinate tuples, used only to make enumerations
    /// deterministic (it is unrelated to the dominance order).
    pub fn lex_cmp(&self, other: &AffineWeight) -> std::cmp::Ordering {
        self.finite
            .cmp(&other.finite)
            .then_with(|| self.level.cmp(&other.level))
            .then_with(|| self.delta.cmp(&other.delta))
    }

    /// Coordinate tuple usable as an ordered set key.
    pub fn coord_key(&self) -> Vec<Rat> {
        let mut k = self.finite.clone();
        k.push(self.level.clone());
        k.push(self.delta.clone());
        k
    }
}

impl fmt::Display for AffineWeight {
    /// Comma-separated coordinates `f1,...,fr,level,delta`, matching the CLI
    /// input syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.finite {
            write!(f, "{c},")?;
        }
        write!(f, "{},{}", self.level, self.delta)
    }
}

/// All derived data of a finite simple root system.
#[derive(Debug, Clone)]
pub struct RootSystemData {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Rat>>,
    d_values: Vec<i64>,
    positive_roots: Vec<FiniteRoot>,
    positive_set: BTreeSet<Vec<i64>>,
    theta: FiniteRoot,
    dual_coxeter: i64,
    /// Gram matrix of the fundamental weights under the normalized form.
    gram: Vec<Vec<Rat>>,
}

/// Builds the full root system data for a valid Cartan type.
///
/// The positive roots are generated by closing the simple roots under all
/// simple reflections; the highest root is the unique one of maximal height.
pub fn build_root_system(t: CartanType) -> Result<RootSystemData, Error> {
    RootSystemData::build(t)
}

impl RootSystemData {
    pub fn build(t: CartanType) -> Result<Self, Error> {
        t.validate()?;
        let rank = t.rank;
        let cartan = cartan_matrix_for(t);
        let d_values = symmetrizers(&cartan);
        let cartan_inv = invert_rational(&cartan);

        // Reflection closure of the simple roots; the positive roots are the
        // members with nonnegative coordinates.
        let mut roots: BTreeSet<Vec<i64>> = (0..rank)
            .map(|i| FiniteRoot::simple(rank, i).coords)
            .collect();
        loop {
            let snapshot: Vec<Vec<i64>> = roots.iter().cloned().collect();
            let before = roots.len();
            for r in &snapshot {
                for i in 0..rank {
                    // s_i(b) = b - (A b)_i e_i in simple-root coordinates.
                    let pairing: i64 = (0..rank).map(|j| cartan[i][j] * r[j]).sum();
                    let mut img = r.clone();
                    img[i] -= pairing;
                    roots.insert(img);
                }
            }
            if roots.len() == before {
                break;
            }
        }
        let mut positive_roots: Vec<FiniteRoot> = roots
            .into_iter()
            .filter(|c| c.iter().all(|&x| x >= 0) && c.iter().any(|&x| x > 0))
            .map(FiniteRoot::new)
            .collect();
        positive_roots.sort_by_key(|r| (r.height(), r.coords.clone()));
        let positive_set: BTreeSet<Vec<i64>> =
            positive_roots.iter().map(|r| r.coords.clone()).collect();

        let max_height = positive_roots.iter().map(|r| r.height()).max().unwrap();
        let highest: Vec<&FiniteRoot> = positive_roots
            .iter()
            .filter(|r| r.height() == max_height)
            .collect();
        if highest.len() != 1 {
            return Err(Error::Internal(format!(
                "expected a unique highest root, found {}",
                highest.len()
            )));
        }
        let theta = highest[0].clone();

        let d_max = *d_values.iter().max().unwrap();
        let gram: Vec<Vec<Rat>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| &cartan_inv[i][j] * ratio(d_values[i], d_max))
                    .collect()
            })
            .collect();

        let mut rs = RootSystemData {
            cartan_type: t,
            cartan,
            cartan_inv,
            d_values,
            positive_roots,
            positive_set,
            theta,
            dual_coxeter: 0,
            gram,
        };

        // h_vee = 1 + <rho_bar, theta_vee>; exact integrality is forced.
        let ones: Vec<Rat> = vec![rat(1); rank];
        let hv = rat(1) + rs.coroot_pairing(&ones, &rs.theta.clone());
        rs.dual_coxeter = hv
            .to_integer()
            .to_i64()
            .filter(|_| hv.is_integer())
            .ok_or_else(|| Error::Internal("dual Coxeter number is not an integer".into()))?;
        Ok(rs)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Minimal positive integer symmetrizers: `d_i * a_ij = d_j * a_ji`.
    pub fn d_values(&self) -> &[i64] {
        &self.d_values
    }

    /// Positive roots sorted by (height, coordinates).
    pub fn positive_roots(&self) -> &[FiniteRoot] {
        &self.positive_roots
    }

    /// All roots: positives followed by their negatives, in matching order.
    pub fn all_roots(&self) -> Vec<FiniteRoot> {
        let mut out = self.positive_roots.clone();
        out.extend(self.positive_roots.iter().map(|r| r.negated()));
        out
    }

    /// The highest root.
    pub fn theta(&self) -> &FiniteRoot {
        &self.theta
    }

    pub fn dual_coxeter(&self) -> i64 {
        self.dual_coxeter
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        if self.positive_set.contains(coords) {
            return true;
        }
        let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
        self.positive_set.contains(&neg)
    }

    pub fn is_positive_root(&self, coords: &[i64]) -> bool {
        self.positive_set.contains(coords)
    }

    /// Finite Weyl vector: all fundamental-weight coordinates equal to 1.
    pub fn rho_finite(&self) -> Vec<Rat> {
        vec![rat(1); self.rank()]
    }

    /// The affine Weyl vector `(rho_bar, h_vee, 0)`.
    ///
    /// It pairs to 1 with every affine simple coroot, including the one of
    /// `-theta + delta`; consequently the critical level is `-h_vee`.
    pub fn rho(&self) -> AffineWeight {
        AffineWeight::new(self.rho_finite(), rat(self.dual_coxeter), rat(0))
    }

    /// The invariant form:
    /// `(x, y) = (x_fin, y_fin) + x.level * y.delta + x.delta * y.level`.
    ///
    /// In particular `(delta, delta) = 0` and `(kappa, delta) = 1`.
    pub fn pairing(&self, x: &AffineWeight, y: &AffineWeight) -> Rat {
        assert_eq!(x.rank(), self.rank(), "weight over a different system");
        assert_eq!(y.rank(), self.rank(), "weight over a different system");
        self.finite_pairing(&x.finite, &y.finite) + &x.level * &y.delta + &x.delta * &y.level
    }

    /// The normalized form on finite parts (fundamental-weight coordinates).
    pub fn finite_pairing(&self, a: &[Rat], b: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                acc += ai * &self.gram[i][j] * bj;
            }
        }
        acc
    }

    /// Fundamental-weight coordinates of a root: the Cartan matrix applied to
    /// its simple-root coordinates.
    pub fn root_weight_coords(&self, r: &FiniteRoot) -> Vec<Rat> {
        (0..self.rank())
            .map(|i| {
                rat((0..self.rank())
                    .map(|j| self.cartan[i][j] * r.coords[j])
                    .sum())
            })
            .collect()
    }

    /// Simple-root coordinates of a finite part (inverse Cartan matrix).
    pub fn weight_root_coords(&self, fin: &[Rat]) -> Vec<Rat> {
        self.cartan_inv
            .iter()
            .map(|row| {
                row.iter()
                    .zip(fin)
                    .fold(Rat::zero(), |acc, (c, f)| acc + c * f)
            })
            .collect()
    }

    /// Views an affine root inside the affine dual Cartan space.
    ///
    /// `alpha + n*delta` maps to `(alpha in fundamental-weight coordinates,
    /// 0, n)`; the imaginary `n*delta` maps to `(0, 0, n)`. Two embedded real
    /// roots `alpha + m*delta`, `alpha + n*delta` pair to `(alpha, alpha)`.
    pub fn embed_root(&self, beta: &AffineRoot) -> AffineWeight {
        match beta {
            AffineRoot::Real { finite, n } => {
                AffineWeight::new(self.root_weight_coords(finite), rat(0), rat(*n))
            }
            AffineRoot::Imaginary { n } => AffineWeight::unit_delta(self.rank()).scaled(&rat(*n)),
        }
    }

    /// `<x, beta_vee> = 2 (x, beta) / (beta, beta)` for a finite root.
    pub fn coroot_pairing(&self, fin: &[Rat], root: &FiniteRoot) -> Rat {
        let rw = self.root_weight_coords(root);
        let num = self.finite_pairing(fin, &rw);
        let den = self.finite_pairing(&rw, &rw);
        rat(2) * num / den
    }

    /// Square length `(beta, beta)` of a finite root.
    pub fn root_norm(&self, root: &FiniteRoot) -> Rat {
        let rw = self.root_weight_coords(root);
        self.finite_pairing(&rw, &rw)
    }

    /// Height of `delta` as a sum of simple affine roots: `1 + height(theta)`.
    pub fn delta_height(&self) -> i64 {
        1 + self.theta.height()
    }

    pub fn to_json(&self) -> RootSystemJson {
        RootSystemJson {
            family: self.cartan_type.family.to_string(),
            rank: self.rank(),
            cartan_matrix: self.cartan.clone(),
            d_values: self.d_values.clone(),
            positive_roots: self
                .positive_roots
                .iter()
                .map(|r| r.coords.clone())
                .collect(),
            theta: self.theta.coords.clone(),
            dual_coxeter: self.dual_coxeter,
            rho_finite: self.rho_finite(),
        }
    }
}

/// Serializable view of the root system data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemJson {
    pub family: String,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub d_values: Vec<i64>,
    pub positive_roots: Vec<Vec<i64>>,
    pub theta: Vec<i64>,
    pub dual_coxeter: i64,
    #[serde(with = "crate::serde_rat_vec")]
    pub rho_finite: Vec<Rat>,
}

/// Cartan matrix in Bourbaki node ordering, `a[i][j] = <alpha_j, alpha_i_vee>`.
fn cartan_matrix_for(t: CartanType) -> Vec<Vec<i64>> {
    let r = t.rank;
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let single = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.family {
        Family::A => {
            for i in 0..r - 1 {
                single(&mut a, i, i + 1);
            }
        }
        Family::B => {
            // alpha_r is the short root.
            for i in 0..r - 1 {
                single(&mut a, i, i + 1);
            }
            a[r - 1][r - 2] = -2;
        }
        Family::C => {
            // alpha_r is the long root.
            for i in 0..r - 1 {
                single(&mut a, i, i + 1);
            }
            a[r - 2][r - 1] = -2;
        }
        Family::D => {
            for i in 0..r - 2 {
                single(&mut a, i, i + 1);
            }
            single(&mut a, r - 3, r - 1);
        }
        Family::E => {
            // Chain 1-3-4-5-... with node 2 attached to node 4 (Bourbaki),
            // all zero-based here.
            single(&mut a, 0, 2);
            for i in 2..r - 1 {
                single(&mut a, i, i + 1);
            }
            single(&mut a, 1, 3);
        }
        Family::F => {
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
            single(&mut a, 0, 1);
            single(&mut a, 1, 2);
            single(&mut a, 2, 3);
            a[2][1] = -2;
        }
        Family::G => {
            // alpha_1 short, alpha_2 long.
            a[0][1] = -3;
            a[1][0] = -1;
        }
    }
    a
}

/// Minimal positive integers with `d_i * a_ij = d_j * a_ji`.
fn symmetrizers(cartan: &[Vec<i64>]) -> Vec<i64> {
    let r = cartan.len();
    let mut d: Vec<Option<Rat>> = vec![None; r];
    d[0] = Some(rat(1));
    // The Dynkin diagram is connected, so a BFS assigns every ratio.
    let mut queue = vec![0usize];
    while let Some(i) = queue.pop() {
        for j in 0..r {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                let di = d[i].clone().unwrap();
                d[j] = Some(di * ratio(cartan[i][j], cartan[j][i]));
                queue.push(j);
            }
        }
    }
    let vals: Vec<Rat> = d.into_iter().map(Option::unwrap).collect();
    let lcm_denom = vals.iter().fold(num_bigint::BigInt::one(), |acc, v| {
        num_integer::lcm(acc, v.denom().clone())
    });
    let scaled: Vec<num_bigint::BigInt> = vals
        .iter()
        .map(|v| (v * Rat::from_integer(lcm_denom.clone())).to_integer())
        .collect();
    let gcd = scaled.iter().fold(num_bigint::BigInt::zero(), |acc, v| {
        num_integer::gcd(acc, v.clone())
    });
    scaled
        .into_iter()
        .map(|v| (v / &gcd).to_i64().expect("small symmetrizer"))
        .collect()
}

/// Exact inverse of an integer matrix by Gauss-Jordan elimination.
fn invert_rational(m: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .map(|row| row.iter().map(|&x| rat(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| rat((i == j) as i64)).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&row| !a[row][col].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for row in 0..n {
            if row != col && !a[row][col].is_zero() {
                let f = a[row][col].clone();
                for j in 0..n {
                    let t = &a[col][j] * &f;
                    a[row][j] -= t;
                    let t = &inv[col][j] * &f;
                    inv[row][j] -= t;
                }
            }
        }
    }
    inv
}

/// Converts a rational to `i64` if it is an exact small integer.
pub(crate) fn rat_to_i64(r: &Rat) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

pub(crate) fn is_nonneg_integer(r: &Rat) -> bool {
    r.is_integer() && !r.is_negative()
}
