//! Explicit root data for the irreducible Hermitian symmetric pairs.
//!
//! Every family is realized inside an ambient `R^N` with the standard inner
//! product. The real Cartan subspace is cut out by explicit linear equations
//! (`constraints`); roots live in the same subspace, so evaluation of a root on
//! a point is the ambient dot product. Simple roots follow the Bourbaki
//! labeling; indices in this module are 0-based, so Bourbaki's `psi_1` is
//! index 0.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::rational::{int, orthogonalize, solve_square, RatVec, Rational};

/// The seven families of irreducible Hermitian symmetric pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    AIII,
    BdiEven,
    BdiOdd,
    CI,
    DIII,
    EIII,
    EVII,
}

impl CartanType {
    pub const ALL: [CartanType; 7] = [
        CartanType::AIII,
        CartanType::BdiEven,
        CartanType::BdiOdd,
        CartanType::CI,
        CartanType::DIII,
        CartanType::EIII,
        CartanType::EVII,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CartanType::AIII => "AIII",
            CartanType::BdiEven => "BDI-even",
            CartanType::BdiOdd => "BDI-odd",
            CartanType::CI => "CI",
            CartanType::DIII => "DIII",
            CartanType::EIII => "EIII",
            CartanType::EVII => "EVII",
        }
    }

    pub fn is_exceptional(self) -> bool {
        matches!(self, CartanType::EIII | CartanType::EVII)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Accepts the display names case-insensitively, with `_` or `-` (or
    /// nothing) between `BDI` and the parity.
    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| !matches!(c, '-' | '_' | ' '))
            .collect::<String>()
            .to_ascii_uppercase();
        match key.as_str() {
            "AIII" => Ok(CartanType::AIII),
            "BDIEVEN" => Ok(CartanType::BdiEven),
            "BDIODD" => Ok(CartanType::BdiOdd),
            "CI" => Ok(CartanType::CI),
            "DIII" => Ok(CartanType::DIII),
            "EIII" => Ok(CartanType::EIII),
            "EVII" => Ok(CartanType::EVII),
            _ => Err(Error::ParameterOutOfRange(format!("unknown Cartan type {s:?}"))),
        }
    }
}

/// One irreducible Hermitian symmetric pair `(G, K)` with its parameters.
///
/// * `AIII { m, n }` is `SU(m, n)` with `1 <= m <= n`, `(m, n) != (1, 1)`.
/// * `BdiEven { m }` is `SO_0(2, 2m-2)`, `m >= 3`.
/// * `BdiOdd { m }` is `SO_0(2, 2m-1)`, `m >= 2`.
/// * `CI { n }` is `Sp(n, R)`, `n >= 2`.
/// * `DIII { n }` is `SO*(2n)`, `n >= 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairDescriptor {
    AIII { m: usize, n: usize },
    BdiEven { m: usize },
    BdiOdd { m: usize },
    CI { n: usize },
    DIII { n: usize },
    EIII,
    EVII,
}

impl PairDescriptor {
    pub fn cartan_type(&self) -> CartanType {
        match self {
            PairDescriptor::AIII { .. } => CartanType::AIII,
            PairDescriptor::BdiEven { .. } => CartanType::BdiEven,
            PairDescriptor::BdiOdd { .. } => CartanType::BdiOdd,
            PairDescriptor::CI { .. } => CartanType::CI,
            PairDescriptor::DIII { .. } => CartanType::DIII,
            PairDescriptor::EIII => CartanType::EIII,
            PairDescriptor::EVII => CartanType::EVII,
        }
    }

    /// Builds a descriptor from a type and optional `m` / `n`, reporting
    /// missing or superfluous parameters as [`Error::ParameterOutOfRange`].
    pub fn from_parts(ty: CartanType, m: Option<usize>, n: Option<usize>) -> Result<Self> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| Error::ParameterOutOfRange(format!("{ty} requires --{name}")))
        };
        let reject = |v: Option<usize>, name: &str| match v {
            Some(_) => Err(Error::ParameterOutOfRange(format!("{ty} does not take --{name}"))),
            None => Ok(()),
        };
        let desc = match ty {
            CartanType::AIII => PairDescriptor::AIII {
                m: need(m, "m")?,
                n: need(n, "n")?,
            },
            CartanType::BdiEven => {
                reject(n, "n")?;
                PairDescriptor::BdiEven { m: need(m, "m")? }
            }
            CartanType::BdiOdd => {
                reject(n, "n")?;
                PairDescriptor::BdiOdd { m: need(m, "m")? }
            }
            CartanType::CI => {
                reject(m, "m")?;
                PairDescriptor::CI { n: need(n, "n")? }
            }
            CartanType::DIII => {
                reject(m, "m")?;
                PairDescriptor::DIII { n: need(n, "n")? }
            }
            CartanType::EIII => {
                reject(m, "m")?;
                reject(n, "n")?;
                PairDescriptor::EIII
            }
            CartanType::EVII => {
                reject(m, "m")?;
                reject(n, "n")?;
                PairDescriptor::EVII
            }
        };
        desc.validate()?;
        Ok(desc)
    }

    /// Checks the family's parameter guards.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::ParameterOutOfRange(msg));
        match *self {
            PairDescriptor::AIII { m, n } => {
                if m < 1 || n < m {
                    return bad(format!("AIII requires 1 <= m <= n, got m={m}, n={n}"));
                }
                if (m, n) == (1, 1) {
                    return bad("AIII excludes (m, n) = (1, 1)".into());
                }
            }
            PairDescriptor::BdiEven { m } if m < 3 => return bad(format!("BDI-even requires m >= 3, got {m}")),
            PairDescriptor::BdiOdd { m } if m < 2 => return bad(format!("BDI-odd requires m >= 2, got {m}")),
            PairDescriptor::CI { n } if n < 2 => return bad(format!("CI requires n >= 2, got {n}")),
            PairDescriptor::DIII { n } if n < 4 => return bad(format!("DIII requires n >= 4, got {n}")),
            _ => {}
        }
        Ok(())
    }

    /// Checks the guards plus the configured size bound.
    pub fn validate_with(&self, limits: &Limits) -> Result<()> {
        self.validate()?;
        if !self.cartan_type().is_exceptional() && self.ambient_dim() > limits.max_ambient {
            return Err(Error::ParameterOutOfRange(format!(
                "{self} has ambient dimension {} above the configured limit {}",
                self.ambient_dim(),
                limits.max_ambient
            )));
        }
        Ok(())
    }

    pub fn ambient_dim(&self) -> usize {
        match *self {
            PairDescriptor::AIII { m, n } => m + n,
            PairDescriptor::BdiEven { m } | PairDescriptor::BdiOdd { m } => m,
            PairDescriptor::CI { n } | PairDescriptor::DIII { n } => n,
            PairDescriptor::EIII | PairDescriptor::EVII => 8,
        }
    }

    /// Complex dimension of `X = G/K`, i.e. the number of positive noncompact
    /// roots.
    pub fn complex_dim(&self) -> usize {
        match *self {
            PairDescriptor::AIII { m, n } => m * n,
            PairDescriptor::BdiEven { m } => 2 * m - 2,
            PairDescriptor::BdiOdd { m } => 2 * m - 1,
            PairDescriptor::CI { n } => n * (n + 1) / 2,
            PairDescriptor::DIII { n } => n * (n - 1) / 2,
            PairDescriptor::EIII => 16,
            PairDescriptor::EVII => 27,
        }
    }

    /// Real rank of `G`.
    pub fn real_rank(&self) -> usize {
        match *self {
            PairDescriptor::AIII { m, n } => m.min(n),
            PairDescriptor::BdiEven { .. } | PairDescriptor::BdiOdd { .. } => 2,
            PairDescriptor::CI { n } => n,
            PairDescriptor::DIII { n } => n / 2,
            PairDescriptor::EIII => 2,
            PairDescriptor::EVII => 3,
        }
    }

    /// Name of the real group, e.g. `SU(2,3)` or `SO*(8)`.
    pub fn group_name(&self) -> String {
        match *self {
            PairDescriptor::AIII { m, n } => format!("SU({m},{n})"),
            PairDescriptor::BdiEven { m } => format!("SO_0(2,{})", 2 * m - 2),
            PairDescriptor::BdiOdd { m } => format!("SO_0(2,{})", 2 * m - 1),
            PairDescriptor::CI { n } => format!("Sp({n},R)"),
            PairDescriptor::DIII { n } => format!("SO*({})", 2 * n),
            PairDescriptor::EIII => "E6(-14)".into(),
            PairDescriptor::EVII => "E7(-25)".into(),
        }
    }

    /// Name of the maximal compact subgroup `K`.
    pub fn compact_name(&self) -> String {
        match *self {
            PairDescriptor::AIII { m, n } => format!("S(U({m})xU({n}))"),
            PairDescriptor::BdiEven { m } => format!("SO(2)xSO({})", 2 * m - 2),
            PairDescriptor::BdiOdd { m } => format!("SO(2)xSO({})", 2 * m - 1),
            PairDescriptor::CI { n } | PairDescriptor::DIII { n } => format!("U({n})"),
            PairDescriptor::EIII => "Spin(10).U(1)".into(),
            PairDescriptor::EVII => "E6.U(1)".into(),
        }
    }

    /// `(m, n)` as reported in tables; absent parameters are `None`.
    pub fn params(&self) -> (Option<usize>, Option<usize>) {
        match *self {
            PairDescriptor::AIII { m, n } => (Some(m), Some(n)),
            PairDescriptor::BdiEven { m } | PairDescriptor::BdiOdd { m } => (Some(m), None),
            PairDescriptor::CI { n } | PairDescriptor::DIII { n } => (None, Some(n)),
            PairDescriptor::EIII | PairDescriptor::EVII => (None, None),
        }
    }
}

impl fmt::Display for PairDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PairDescriptor::AIII { m, n } => write!(f, "AIII(m={m},n={n})"),
            PairDescriptor::BdiEven { m } => write!(f, "BDI-even(m={m})"),
            PairDescriptor::BdiOdd { m } => write!(f, "BDI-odd(m={m})"),
            PairDescriptor::CI { n } => write!(f, "CI(n={n})"),
            PairDescriptor::DIII { n } => write!(f, "DIII(n={n})"),
            PairDescriptor::EIII => f.write_str("EIII"),
            PairDescriptor::EVII => f.write_str("EVII"),
        }
    }
}

/// Fully realized root data of a Hermitian pair.
#[derive(Debug, Clone)]
pub struct RootDatum {
    descriptor: PairDescriptor,
    ambient_dim: usize,
    constraints: Vec<RatVec>,
    constraint_basis: Vec<RatVec>,
    simple_roots: Vec<RatVec>,
    noncompact_simple: usize,
    compact_simple: Vec<usize>,
    pos_compact: Vec<RatVec>,
    pos_noncompact: Vec<RatVec>,
    coweights: Vec<RatVec>,
}

impl RootDatum {
    pub fn descriptor(&self) -> PairDescriptor {
        self.descriptor
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Normals `c` of the equations `c . x = 0` cutting out the real Cartan
    /// subspace inside the ambient space.
    pub fn constraints(&self) -> &[RatVec] {
        &self.constraints
    }

    pub fn simple_roots(&self) -> &[RatVec] {
        &self.simple_roots
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    /// Index of the unique noncompact simple root.
    pub fn noncompact_simple_index(&self) -> usize {
        self.noncompact_simple
    }

    /// Indices of the compact simple roots, ascending.
    pub fn compact_simple_indices(&self) -> &[usize] {
        &self.compact_simple
    }

    pub fn pos_compact(&self) -> &[RatVec] {
        &self.pos_compact
    }

    pub fn pos_noncompact(&self) -> &[RatVec] {
        &self.pos_noncompact
    }

    /// Fundamental coweights `omega_j`, with `psi_i(omega_j) = delta_ij`.
    pub fn fundamental_coweights(&self) -> &[RatVec] {
        &self.coweights
    }

    /// All positive roots, compact first.
    pub fn positive_roots(&self) -> impl Iterator<Item = &RatVec> {
        self.pos_compact.iter().chain(&self.pos_noncompact)
    }

    /// The full root system, positive roots followed by their negatives.
    pub fn all_roots(&self) -> Vec<RatVec> {
        let pos: Vec<RatVec> = self.positive_roots().cloned().collect();
        let neg: Vec<RatVec> = pos.iter().map(|r| -r).collect();
        pos.into_iter().chain(neg).collect()
    }

    pub fn check_dim(&self, x: &RatVec) -> Result<()> {
        if x.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: x.len(),
            });
        }
        Ok(())
    }

    pub fn in_cartan(&self, x: &RatVec) -> bool {
        x.len() == self.ambient_dim && self.constraints.iter().all(|c| c.dot_unchecked(x).is_zero())
    }

    /// Validates that `x` has the right length and satisfies every constraint.
    pub fn check_in_cartan(&self, x: &RatVec) -> Result<()> {
        self.check_dim(x)?;
        if !self.in_cartan(x) {
            return Err(Error::ConstraintViolation(x.to_string()));
        }
        Ok(())
    }

    /// Orthogonal projection of an ambient vector onto the real Cartan
    /// subspace.
    pub fn project_to_cartan(&self, x: &RatVec) -> Result<RatVec> {
        self.check_dim(x)?;
        let mut y = x.clone();
        for b in &self.constraint_basis {
            let coeff = y.dot_unchecked(b) / b.dot_unchecked(b);
            y = y.add_scaled(-coeff, b);
        }
        Ok(y)
    }

    /// Coefficient of simple root `i` when `alpha` is expanded in the simple
    /// roots.
    pub fn simple_coefficient(&self, alpha: &RatVec, i: usize) -> Rational {
        alpha.dot_unchecked(&self.coweights[i])
    }
}

/// Evaluates the root `alpha` on `x` (exact dot product).
pub fn eval_root(alpha: &RatVec, x: &RatVec) -> Result<Rational> {
    alpha.dot(x)
}

/// Reflection `s_alpha(x) = x - 2 (alpha, x) / (alpha, alpha) alpha`.
pub fn reflect(alpha: &RatVec, x: &RatVec) -> Result<RatVec> {
    if alpha.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let ax = alpha.dot(x)?;
    let aa = alpha.dot_unchecked(alpha);
    Ok(x.add_scaled(-(int(2) * ax / aa), alpha))
}

/// Builds the root datum with the default size limits.
pub fn build_root_datum(desc: PairDescriptor) -> Result<RootDatum> {
    build_root_datum_with(desc, &Limits::default())
}

pub fn build_root_datum_with(desc: PairDescriptor, limits: &Limits) -> Result<RootDatum> {
    desc.validate_with(limits)?;
    let raw = match desc {
        PairDescriptor::AIII { m, n } => aiii(m, n),
        PairDescriptor::BdiEven { m } => bdi_even(m),
        PairDescriptor::BdiOdd { m } => bdi_odd(m),
        PairDescriptor::CI { n } => ci(n),
        PairDescriptor::DIII { n } => diii(n),
        PairDescriptor::EIII => eiii(),
        PairDescriptor::EVII => evii(),
    };
    let coweights = solve_coweights_raw(&raw.simple, &raw.constraints)?;
    let compact_simple = (0..raw.simple.len()).filter(|&i| i != raw.noncompact_simple).collect();
    Ok(RootDatum {
        descriptor: desc,
        ambient_dim: desc.ambient_dim(),
        constraint_basis: orthogonalize(&raw.constraints),
        constraints: raw.constraints,
        simple_roots: raw.simple,
        noncompact_simple: raw.noncompact_simple,
        compact_simple,
        pos_compact: raw.pos_compact,
        pos_noncompact: raw.pos_noncompact,
        coweights,
    })
}

/// Solves for the fundamental coweights inside the real Cartan subspace.
pub fn solve_coweights(datum: &RootDatum) -> Result<Vec<RatVec>> {
    solve_coweights_raw(&datum.simple_roots, &datum.constraints)
}

fn solve_coweights_raw(simple: &[RatVec], constraints: &[RatVec]) -> Result<Vec<RatVec>> {
    let n = simple.len();
    let dim = simple.first().map_or(0, RatVec::len);
    let rows: Vec<RatVec> = simple.iter().chain(constraints).cloned().collect();
    if rows.len() != dim {
        return Err(Error::SingularSystem);
    }
    let rhs: Vec<RatVec> = (0..n).map(|j| RatVec::unit(dim, j)).collect();
    solve_square(&rows, &rhs)
}

/// Positive system defined by an ordered basis: `alpha` is positive when its
/// first non-zero value on `H_1, H_2, ...` is positive.
///
/// Returns one root from each pair `{alpha, -alpha}`, in the order of
/// [`RootDatum::positive_roots`].
pub fn positive_system_from_basis(datum: &RootDatum, basis: &[RatVec]) -> Result<Vec<RatVec>> {
    for h in basis {
        datum.check_in_cartan(h)?;
    }
    datum
        .positive_roots()
        .map(|alpha| {
            for h in basis {
                let v = alpha.dot_unchecked(h);
                if !v.is_zero() {
                    return Ok(if v > Rational::zero() { alpha.clone() } else { -alpha });
                }
            }
            Err(Error::DegenerateBasis(alpha.to_string()))
        })
        .collect()
}

struct RawDatum {
    constraints: Vec<RatVec>,
    simple: Vec<RatVec>,
    noncompact_simple: usize,
    pos_compact: Vec<RatVec>,
    pos_noncompact: Vec<RatVec>,
}

/// `c_i e_i + c_j e_j` in `R^dim`.
fn pair(dim: usize, i: usize, ci: i64, j: usize, cj: i64) -> RatVec {
    let mut v = vec![0i64; dim];
    v[i] += ci;
    v[j] += cj;
    RatVec::from_ints(&v)
}

fn scaled_unit(dim: usize, i: usize, c: i64) -> RatVec {
    RatVec::unit(dim, i).scale(int(c))
}

/// `e_0 - e_1, ..., e_{dim-2} - e_{dim-1}` truncated to `count` roots.
fn a_chain(dim: usize, count: usize) -> Vec<RatVec> {
    (0..count).map(|i| pair(dim, i, 1, i + 1, -1)).collect()
}

fn aiii(m: usize, n: usize) -> RawDatum {
    let dim = m + n;
    let mut pos_compact = Vec::new();
    let mut pos_noncompact = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let root = pair(dim, i, 1, j, -1);
            if (i < m) == (j < m) {
                pos_compact.push(root);
            } else {
                pos_noncompact.push(root);
            }
        }
    }
    RawDatum {
        constraints: vec![RatVec::from_ints(&vec![1; dim])],
        simple: a_chain(dim, dim - 1),
        noncompact_simple: m - 1,
        pos_compact,
        pos_noncompact,
    }
}

/// `e_i +- e_j` for `lo <= i < j < dim`.
fn d_pairs(dim: usize, lo: usize) -> Vec<RatVec> {
    let mut out = Vec::new();
    for i in lo..dim {
        for j in i + 1..dim {
            out.push(pair(dim, i, 1, j, -1));
            out.push(pair(dim, i, 1, j, 1));
        }
    }
    out
}

fn bdi_even(m: usize) -> RawDatum {
    let mut simple = a_chain(m, m - 1);
    simple.push(pair(m, m - 2, 1, m - 1, 1));
    let mut pos_noncompact = Vec::new();
    for j in 1..m {
        pos_noncompact.push(pair(m, 0, 1, j, -1));
        pos_noncompact.push(pair(m, 0, 1, j, 1));
    }
    RawDatum {
        constraints: vec![],
        simple,
        noncompact_simple: 0,
        pos_compact: d_pairs(m, 1),
        pos_noncompact,
    }
}

fn bdi_odd(m: usize) -> RawDatum {
    let mut simple = a_chain(m, m - 1);
    simple.push(RatVec::unit(m, m - 1));
    let mut pos_compact = d_pairs(m, 1);
    pos_compact.extend((1..m).map(|j| RatVec::unit(m, j)));
    let mut pos_noncompact = Vec::new();
    for j in 1..m {
        pos_noncompact.push(pair(m, 0, 1, j, -1));
        pos_noncompact.push(pair(m, 0, 1, j, 1));
    }
    pos_noncompact.push(RatVec::unit(m, 0));
    RawDatum {
        constraints: vec![],
        simple,
        noncompact_simple: 0,
        pos_compact,
        pos_noncompact,
    }
}

fn type_a_compact(n: usize) -> Vec<RatVec> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(pair(n, i, 1, j, -1));
        }
    }
    out
}

fn ci(n: usize) -> RawDatum {
    let mut simple = a_chain(n, n - 1);
    simple.push(scaled_unit(n, n - 1, 2));
    let mut pos_noncompact = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pos_noncompact.push(pair(n, i, 1, j, 1));
        }
    }
    pos_noncompact.extend((0..n).map(|i| scaled_unit(n, i, 2)));
    RawDatum {
        constraints: vec![],
        simple,
        noncompact_simple: n - 1,
        pos_compact: type_a_compact(n),
        pos_noncompact,
    }
}

fn diii(n: usize) -> RawDatum {
    let mut simple = a_chain(n, n - 1);
    simple.push(pair(n, n - 2, 1, n - 1, 1));
    let mut pos_noncompact = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pos_noncompact.push(pair(n, i, 1, j, 1));
        }
    }
    RawDatum {
        constraints: vec![],
        simple,
        noncompact_simple: n - 1,
        pos_compact: type_a_compact(n),
        pos_noncompact,
    }
}

/// Even-weight sign patterns `a in {0,1}^5` in lexicographic order.
pub(crate) fn even_patterns() -> Vec<[u8; 5]> {
    (0u8..32)
        .map(|bits| {
            let mut a = [0u8; 5];
            for (j, slot) in a.iter_mut().enumerate() {
                *slot = (bits >> (4 - j)) & 1;
            }
            a
        })
        .filter(|a| a.iter().map(|&b| b as u32).sum::<u32>() % 2 == 0)
        .collect()
}

/// Half-integral root `(1/2)(c6 e6 + c7 e7 + c8 e8 + sign * sum (-1)^{a_j} e_j)`.
fn half_root(a: &[u8; 5], sign: i64, tail: [i64; 3]) -> RatVec {
    let mut doubled = [0i64; 8];
    for j in 0..5 {
        doubled[j] = sign * if a[j] == 0 { 1 } else { -1 };
    }
    doubled[5..].copy_from_slice(&tail);
    RatVec::from_halves(&doubled)
}

/// `e_j +- e_i` for `0 <= i < j < 5` inside `R^8`.
fn d5_positive() -> Vec<RatVec> {
    let mut out = Vec::new();
    for j in 0..5 {
        for i in 0..j {
            out.push(pair(8, j, 1, i, -1));
            out.push(pair(8, j, 1, i, 1));
        }
    }
    out
}

fn e_simple_common() -> Vec<RatVec> {
    vec![
        RatVec::from_halves(&[1, -1, -1, -1, -1, -1, -1, 1]),
        pair(8, 0, 1, 1, 1),
        pair(8, 1, 1, 0, -1),
        pair(8, 2, 1, 1, -1),
        pair(8, 3, 1, 2, -1),
        pair(8, 4, 1, 3, -1),
    ]
}

fn eiii() -> RawDatum {
    let pos_noncompact = even_patterns().iter().map(|a| half_root(a, 1, [-1, -1, 1])).collect();
    RawDatum {
        constraints: vec![pair(8, 5, 1, 6, -1), pair(8, 6, 1, 7, 1)],
        simple: e_simple_common(),
        noncompact_simple: 0,
        pos_compact: d5_positive(),
        pos_noncompact,
    }
}

fn evii() -> RawDatum {
    let mut simple = e_simple_common();
    simple.push(pair(8, 5, 1, 4, -1));
    let patterns = even_patterns();
    let mut pos_compact = d5_positive();
    pos_compact.extend(patterns.iter().map(|a| half_root(a, 1, [-1, -1, 1])));
    let mut pos_noncompact: Vec<RatVec> = patterns.iter().map(|c| half_root(c, -1, [1, -1, 1])).collect();
    for j in 0..5 {
        pos_noncompact.push(pair(8, 5, 1, j, 1));
        pos_noncompact.push(pair(8, 5, 1, j, -1));
    }
    pos_noncompact.push(pair(8, 7, 1, 6, -1));
    RawDatum {
        constraints: vec![pair(8, 6, 1, 7, 1)],
        simple,
        noncompact_simple: 6,
        pos_compact,
        pos_noncompact,
    }
}

/// Closure of the simple roots under the simple reflections. Used to check
/// that the hand-written root lists are complete.
pub fn generate_root_system(datum: &RootDatum) -> Result<HashSet<RatVec>> {
    let mut seen: HashSet<RatVec> = datum.simple_roots().iter().cloned().collect();
    let mut frontier: Vec<RatVec> = seen.iter().cloned().collect();
    while let Some(root) = frontier.pop() {
        for s in datum.simple_roots() {
            let image = reflect(s, &root)?;
            if seen.insert(image.clone()) {
                frontier.push(image);
            }
        }
    }
    Ok(seen)
}

/// Sum of all fundamental coweights; every positive root is positive on it.
pub fn rho_check(datum: &RootDatum) -> RatVec {
    RatVec::sum(datum.ambient_dim(), datum.fundamental_coweights())
}

impl RootDatum {
    /// True when `alpha` is (up to sign) one of the listed roots.
    pub fn is_root(&self, alpha: &RatVec) -> bool {
        let neg = -alpha;
        self.positive_roots().any(|r| r == alpha || *r == neg)
    }

    /// Height of a root with respect to the simple roots.
    pub fn height(&self, alpha: &RatVec) -> Rational {
        (0..self.rank())
            .map(|i| self.simple_coefficient(alpha, i))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// True when `x` pairs to exactly `delta_ij` with the simple roots.
    pub fn is_coweight(&self, x: &RatVec, j: usize) -> bool {
        self.simple_roots.iter().enumerate().all(|(i, s)| {
            let v = s.dot_unchecked(x);
            if i == j {
                v.is_one()
            } else {
                v.is_zero()
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn datum(desc: PairDescriptor) -> RootDatum {
        build_root_datum(desc).unwrap()
    }

    #[test]
    fn aiii_2_3_layout() {
        let d = datum(PairDescriptor::AIII { m: 2, n: 3 });
        assert_eq!(d.pos_noncompact().len(), 6);
        assert_eq!(d.rank(), 4);
        for (i, s) in d.simple_roots().iter().enumerate() {
            assert_eq!(*s, pair(5, i, 1, i + 1, -1));
        }
        assert_eq!(d.noncompact_simple_index(), 1);
        assert_eq!(d.simple_roots()[1], RatVec::from_ints(&[0, 1, -1, 0, 0]));
    }

    #[test]
    fn eiii_counts() {
        let d = datum(PairDescriptor::EIII);
        assert_eq!(d.pos_noncompact().len(), 16);
        assert_eq!(d.pos_compact().len(), 20);
    }

    #[test]
    fn ci2_root_lists() {
        let d = datum(PairDescriptor::CI { n: 2 });
        let nc: HashSet<_> = d.pos_noncompact().iter().cloned().collect();
        let expected: HashSet<_> = [[1, 1], [2, 0], [0, 2]].iter().map(|v| RatVec::from_ints(v)).collect();
        assert_eq!(nc, expected);
        assert_eq!(d.pos_compact(), &[RatVec::from_ints(&[1, -1])]);
    }

    #[test]
    fn eval_root_examples() {
        let a = RatVec::from_ints(&[1, -1, 0, 0, 0]);
        let x = RatVec::from_ints(&[3, 1, -4, 0, 0]);
        assert_eq!(eval_root(&a, &x).unwrap(), int(2));

        let e3 = datum(PairDescriptor::EIII);
        assert_eq!(eval_root(&e3.pos_noncompact()[0], &RatVec::zeros(8)).unwrap(), int(0));

        // beta_c for c = (1,1,1,1,0) of EVII at x = (2,2,1,1,1,-1,1,-1)
        let beta = half_root(&[1, 1, 1, 1, 0], -1, [1, -1, 1]);
        let x = RatVec::from_ints(&[2, 2, 1, 1, 1, -1, 1, -1]);
        assert_eq!(eval_root(&beta, &x).unwrap(), int(1));
        assert!(evii_has(&beta));
    }

    fn evii_has(alpha: &RatVec) -> bool {
        datum(PairDescriptor::EVII).pos_noncompact().iter().any(|r| r == alpha)
    }

    #[test]
    fn reflect_examples() {
        let a = RatVec::from_ints(&[1, -1, 0]);
        let x = RatVec::from_ints(&[5, 3, 0]);
        assert_eq!(reflect(&a, &x).unwrap(), RatVec::from_ints(&[3, 5, 0]));
        assert_eq!(reflect(&a, &reflect(&a, &x).unwrap()).unwrap(), x);
        assert_eq!(
            reflect(&RatVec::from_ints(&[2, 0]), &RatVec::from_ints(&[1, 2])).unwrap(),
            RatVec::from_ints(&[-1, 2])
        );
        assert_eq!(
            reflect(&RatVec::zeros(2), &RatVec::from_ints(&[1, 2])),
            Err(Error::ZeroRoot)
        );
    }

    #[test]
    fn ci2_coweights() {
        let d = datum(PairDescriptor::CI { n: 2 });
        let w = solve_coweights(&d).unwrap();
        // psi_1 = e1 - e2, psi_2 = 2 e2
        assert_eq!(w[0], RatVec::from_ints(&[1, 0]));
        assert_eq!(w[1], RatVec::new(vec![frac(1, 2), frac(1, 2)]));
        assert!(d.is_coweight(&w[0], 0) && d.is_coweight(&w[1], 1));
    }

    #[test]
    fn aiii_1_2_coweights_sum_to_zero() {
        let d = datum(PairDescriptor::AIII { m: 1, n: 2 });
        for w in d.fundamental_coweights() {
            assert!(w.coords().iter().sum::<Rational>().is_zero());
        }
    }

    #[test]
    fn positive_system_ci2() {
        let d = datum(PairDescriptor::CI { n: 2 });
        let basis = [RatVec::from_ints(&[-1, 0]), RatVec::from_ints(&[0, -1])];
        let pos = positive_system_from_basis(&d, &basis).unwrap();
        let expected: HashSet<_> = [[-1, 1], [-1, -1], [-2, 0], [0, -2]]
            .iter()
            .map(|v| RatVec::from_ints(v))
            .collect();
        assert_eq!(pos.into_iter().collect::<HashSet<_>>(), expected);
    }

    #[test]
    fn positive_system_aiii_1_2() {
        let d = datum(PairDescriptor::AIII { m: 1, n: 2 });
        let basis = [RatVec::from_ints(&[2, -1, -1]), RatVec::from_ints(&[0, 1, -1])];
        let pos: HashSet<_> = positive_system_from_basis(&d, &basis).unwrap().into_iter().collect();
        let expected: HashSet<_> = [[1, -1, 0], [1, 0, -1], [0, 1, -1]]
            .iter()
            .map(|v| RatVec::from_ints(v))
            .collect();
        assert_eq!(pos, expected);
    }

    #[test]
    fn positive_system_degenerate() {
        let d = datum(PairDescriptor::CI { n: 2 });
        let basis = [RatVec::from_ints(&[1, 0])];
        assert!(matches!(
            positive_system_from_basis(&d, &basis),
            Err(Error::DegenerateBasis(_))
        ));
    }

    #[test]
    fn guards() {
        for bad in [
            PairDescriptor::AIII { m: 1, n: 1 },
            PairDescriptor::AIII { m: 3, n: 2 },
            PairDescriptor::AIII { m: 0, n: 4 },
            PairDescriptor::BdiEven { m: 2 },
            PairDescriptor::BdiOdd { m: 1 },
            PairDescriptor::CI { n: 1 },
            PairDescriptor::DIII { n: 3 },
            PairDescriptor::CI { n: 13 },
        ] {
            assert!(
                matches!(build_root_datum(bad), Err(Error::ParameterOutOfRange(_))),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn type_parsing() {
        assert_eq!("bdi_even".parse::<CartanType>().unwrap(), CartanType::BdiEven);
        assert_eq!("BDI-odd".parse::<CartanType>().unwrap(), CartanType::BdiOdd);
        assert_eq!("evii".parse::<CartanType>().unwrap(), CartanType::EVII);
        assert!("G2".parse::<CartanType>().is_err());
        assert!(PairDescriptor::from_parts(CartanType::CI, Some(2), Some(3)).is_err());
        assert!(PairDescriptor::from_parts(CartanType::AIII, Some(2), None).is_err());
    }

    #[test]
    fn exceptional_cartan_constraints() {
        let e6 = datum(PairDescriptor::EIII);
        let e7 = datum(PairDescriptor::EVII);
        for w in e6.fundamental_coweights() {
            let c = w.coords();
            assert_eq!(c[5], c[6]);
            assert_eq!(c[6], -c[7]);
        }
        for w in e7.fundamental_coweights() {
            assert_eq!(w.coords()[6], -w.coords()[7]);
        }
    }
}
