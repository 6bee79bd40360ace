//! Hodge-theoretic consequences of the signature sets: vanishing of
//! `H^{0,q}` and `H^{1,q}`, the structure of `H^{1,1}`, Picard ranks, and the
//! Leray–Hirsch decomposition for the flag bundle `Y -> X`.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::rootsys::{build_root_datum, PairDescriptor, RootDatum};
use crate::signatures::attainable_signatures;
use crate::weyl::{fiber_picard_rank, flag_poincare, validate_parabolic};

/// A Hodge number that may not be known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HodgeValue {
    Known(u64),
    Unknown,
}

impl HodgeValue {
    pub fn known(self) -> Option<u64> {
        match self {
            HodgeValue::Known(v) => Some(v),
            HodgeValue::Unknown => None,
        }
    }
}

impl fmt::Display for HodgeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HodgeValue::Known(v) => write!(f, "{v}"),
            HodgeValue::Unknown => f.write_str("unknown"),
        }
    }
}

impl Serialize for HodgeValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            HodgeValue::Known(v) => s.serialize_u64(*v),
            HodgeValue::Unknown => s.serialize_str("unknown"),
        }
    }
}

/// Hodge numbers `h^{p,q}` for `0 <= p, q <= dim`; zero outside the square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeDiamond {
    dim: usize,
    cells: Vec<HodgeValue>,
}

impl HodgeDiamond {
    /// All entries inside the square unknown.
    pub fn unknown(dim: usize) -> Self {
        HodgeDiamond {
            dim,
            cells: vec![HodgeValue::Unknown; (dim + 1) * (dim + 1)],
        }
    }

    pub fn zeros(dim: usize) -> Self {
        HodgeDiamond {
            dim,
            cells: vec![HodgeValue::Known(0); (dim + 1) * (dim + 1)],
        }
    }

    /// Builds a fully known diamond from rows `h[p][q]`.
    pub fn from_rows(rows: &[Vec<u64>]) -> Result<Self> {
        if rows.is_empty() || rows.iter().any(|r| r.len() != rows.len()) {
            return Err(Error::Schema("rows must form a nonempty square".into()));
        }
        let dim = rows.len() - 1;
        let mut d = HodgeDiamond::zeros(dim);
        for (p, row) in rows.iter().enumerate() {
            for (q, &v) in row.iter().enumerate() {
                d.set(p, q, HodgeValue::Known(v));
            }
        }
        Ok(d)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn index(&self, p: usize, q: usize) -> usize {
        p * (self.dim + 1) + q
    }

    pub fn get(&self, p: i64, q: i64) -> HodgeValue {
        let d = self.dim as i64;
        if p < 0 || q < 0 || p > d || q > d {
            return HodgeValue::Known(0);
        }
        self.cells[self.index(p as usize, q as usize)]
    }

    /// Panics if `(p, q)` lies outside the square.
    pub fn set(&mut self, p: usize, q: usize, v: HodgeValue) {
        assert!(
            p <= self.dim && q <= self.dim,
            "({p}, {q}) outside diamond of dim {}",
            self.dim
        );
        let i = self.index(p, q);
        self.cells[i] = v;
    }

    pub fn is_fully_known(&self) -> bool {
        self.cells.iter().all(|c| matches!(c, HodgeValue::Known(_)))
    }

    /// `sum (-1)^{p+q} h^{p,q}`, if every entry is known.
    pub fn euler_characteristic(&self) -> Option<i64> {
        let mut chi = 0i64;
        for p in 0..=self.dim {
            for q in 0..=self.dim {
                let v = self.cells[self.index(p, q)].known()? as i64;
                chi += if (p + q) % 2 == 0 { v } else { -v };
            }
        }
        Some(chi)
    }

    /// `h^{p,q} = h^{q,p}` wherever both are known.
    pub fn is_hodge_symmetric(&self) -> bool {
        (0..=self.dim).all(|p| {
            (0..p).all(|q| match (self.cells[self.index(p, q)], self.cells[self.index(q, p)]) {
                (HodgeValue::Known(a), HodgeValue::Known(b)) => a == b,
                _ => true,
            })
        })
    }

    /// Parses `{"dim": d, "entries": [{"p", "q", "value"}]}`. Unlisted
    /// entries inside the square are unknown; listed entries must lie inside
    /// it and appear once.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        Self::from_value(&v)
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Schema("top level must be an object".into()))?;
        for key in obj.keys() {
            if key != "dim" && key != "entries" {
                return Err(Error::Schema(format!("unexpected key {key:?}")));
            }
        }
        let dim = obj
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Schema("\"dim\" must be a non-negative integer".into()))? as usize;
        let entries = obj
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Schema("\"entries\" must be an array".into()))?;
        let mut d = HodgeDiamond::unknown(dim);
        let mut seen = BTreeSet::new();
        for (k, e) in entries.iter().enumerate() {
            let e = e
                .as_object()
                .ok_or_else(|| Error::Schema(format!("entry {k} is not an object")))?;
            let coord = |name: &str| {
                e.get(name)
                    .and_then(Value::as_u64)
                    .map(|x| x as usize)
                    .ok_or_else(|| Error::Schema(format!("entry {k}: {name:?} must be a non-negative integer")))
            };
            let (p, q) = (coord("p")?, coord("q")?);
            if p > dim || q > dim {
                return Err(Error::Schema(format!("entry {k}: ({p}, {q}) lies outside 0..={dim}")));
            }
            if !seen.insert((p, q)) {
                return Err(Error::Schema(format!("entry {k}: ({p}, {q}) listed twice")));
            }
            let value = match e.get("value") {
                Some(Value::String(s)) if s == "unknown" => HodgeValue::Unknown,
                Some(x) => HodgeValue::Known(x.as_u64().ok_or_else(|| {
                    Error::Schema(format!(
                        "entry {k}: value must be a non-negative integer or \"unknown\""
                    ))
                })?),
                None => return Err(Error::Schema(format!("entry {k}: missing \"value\""))),
            };
            d.set(p, q, value);
        }
        Ok(d)
    }

    /// JSON value listing every entry of the square, ordered by `(p, q)`.
    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("diamond serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("diamond serializes")
    }
}

#[derive(Serialize)]
struct Entry {
    p: usize,
    q: usize,
    value: HodgeValue,
}

impl Serialize for HodgeDiamond {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = (0..=self.dim)
            .flat_map(|p| (0..=self.dim).map(move |q| (p, q)))
            .map(|(p, q)| Entry {
                p,
                q,
                value: self.cells[self.index(p, q)],
            })
            .collect();
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("dim", &self.dim)?;
        map.serialize_entry("entries", &entries)?;
        map.end()
    }
}

/// `out(p,q) = sum_r x(p-r, q-r) * b_{2r}`. An unknown term makes the sum
/// unknown unless its Betti factor is zero.
pub fn leray_hirsch(x: &HodgeDiamond, fiber_betti: &[u64]) -> Result<HodgeDiamond> {
    if fiber_betti.is_empty() {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    }
    let dim = x.dim + fiber_betti.len() - 1;
    let mut out = HodgeDiamond::zeros(dim);
    for p in 0..=dim {
        for q in 0..=dim {
            let mut acc = Some(0u64);
            for (r, &b) in fiber_betti.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let (pp, qq) = (p as i64 - r as i64, q as i64 - r as i64);
                acc = match (acc, x.get(pp, qq)) {
                    (Some(a), HodgeValue::Known(v)) => Some(a + v * b),
                    _ => None,
                };
            }
            out.set(p, q, acc.map_or(HodgeValue::Unknown, HodgeValue::Known));
        }
    }
    Ok(out)
}

/// Hodge diamond of `Y` together with the fiber data it was built from.
#[derive(Debug, Clone, Serialize)]
pub struct FlagBundleHodge {
    pub fiber_betti: Vec<u64>,
    pub diamond: HodgeDiamond,
}

/// Leray–Hirsch for `Y -> X` with fiber `K/H`, `H` given by a 0-based
/// compact-simple-root subset. `x.dim` must equal `dim_C X`.
pub fn hodge_y(datum: &RootDatum, x: &HodgeDiamond, parabolic_subset: &[usize]) -> Result<FlagBundleHodge> {
    let expected = datum.descriptor().complex_dim();
    if x.dim() != expected {
        return Err(Error::DimensionMismatch { expected, got: x.dim() });
    }
    let fiber_betti = flag_poincare(datum, parabolic_subset)?;
    let diamond = leray_hirsch(x, &fiber_betti)?;
    Ok(FlagBundleHodge { fiber_betti, diamond })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Zero,
    IsomorphicToC,
    Unconstrained,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Zero => "0",
            Verdict::IsomorphicToC => "C",
            Verdict::Unconstrained => "unconstrained",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VanishingVerdict {
    pub value: Verdict,
    pub reason: String,
}

fn fmt_set(s: &BTreeSet<usize>) -> String {
    let v: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

/// Vanishing predicates for one pair, with the `R+ = 0` and `R+ = 1` sets
/// enumerated once.
#[derive(Debug, Clone)]
pub struct VanishingAnalyzer {
    desc: PairDescriptor,
    r0: BTreeSet<usize>,
    r1: BTreeSet<usize>,
}

impl VanishingAnalyzer {
    pub fn new(desc: PairDescriptor) -> Result<Self> {
        let datum = build_root_datum(desc)?;
        Self::from_datum(&datum)
    }

    pub fn from_datum(datum: &RootDatum) -> Result<Self> {
        let set = attainable_signatures(datum, Some(&[0, 1]))?;
        Ok(VanishingAnalyzer {
            desc: datum.descriptor(),
            r0: set.row(0),
            r1: set.row(1),
        })
    }

    pub fn descriptor(&self) -> PairDescriptor {
        self.desc
    }

    /// Attained `R-` values with `R+ = 0`.
    pub fn rplus_zero(&self) -> &BTreeSet<usize> {
        &self.r0
    }

    /// Attained `R-` values with `R+ = 1`.
    pub fn rplus_one(&self) -> &BTreeSet<usize> {
        &self.r1
    }

    /// `H^{0,q}(X) = 0` unless some `q_x` has signature `(0, q)`.
    pub fn h0q(&self, q: usize) -> Result<VanishingVerdict> {
        if q < 1 {
            return Err(Error::ParameterOutOfRange("H^{0,q} needs q >= 1".into()));
        }
        Ok(if self.r0.contains(&q) {
            VanishingVerdict {
                value: Verdict::Unconstrained,
                reason: format!("signature (0, {q}) is attained"),
            }
        } else {
            VanishingVerdict {
                value: Verdict::Zero,
                reason: format!("{q} not in R+=0 set {}", fmt_set(&self.r0)),
            }
        })
    }

    /// `H^{1,q}(X) = 0` unless `(0, q-1)` or `(1, q)` is attained.
    pub fn h1q(&self, q: usize) -> Result<VanishingVerdict> {
        if q < 2 {
            return Err(Error::ParameterOutOfRange("H^{1,q} needs q >= 2".into()));
        }
        let a = self.r0.contains(&(q - 1));
        let b = self.r1.contains(&q);
        Ok(match (a, b) {
            (false, false) => VanishingVerdict {
                value: Verdict::Zero,
                reason: format!(
                    "{} not in R+=0 set {} and {q} not in R+=1 set {}",
                    q - 1,
                    fmt_set(&self.r0),
                    fmt_set(&self.r1)
                ),
            },
            _ => {
                let mut hits = Vec::new();
                if a {
                    hits.push(format!("(0, {})", q - 1));
                }
                if b {
                    hits.push(format!("(1, {q})"));
                }
                VanishingVerdict {
                    value: Verdict::Unconstrained,
                    reason: format!("signature {} is attained", hits.join(" and ")),
                }
            }
        })
    }

    /// `H^{1,1}(X) = C` unless `(1, 1)` is attained.
    pub fn h11(&self) -> VanishingVerdict {
        if self.r1.contains(&1) {
            VanishingVerdict {
                value: Verdict::Unconstrained,
                reason: "signature (1, 1) is attained".into(),
            }
        } else {
            VanishingVerdict {
                value: Verdict::IsomorphicToC,
                reason: format!("1 not in R+=1 set {}", fmt_set(&self.r1)),
            }
        }
    }
}

pub fn vanish_h0q(desc: PairDescriptor, q: usize) -> Result<VanishingVerdict> {
    if q < 1 {
        return Err(Error::ParameterOutOfRange("H^{0,q} needs q >= 1".into()));
    }
    VanishingAnalyzer::new(desc)?.h0q(q)
}

pub fn vanish_h1q(desc: PairDescriptor, q: usize) -> Result<VanishingVerdict> {
    if q < 2 {
        return Err(Error::ParameterOutOfRange("H^{1,q} needs q >= 2".into()));
    }
    VanishingAnalyzer::new(desc)?.h1q(q)
}

pub fn h11_structure(desc: PairDescriptor) -> Result<VanishingVerdict> {
    Ok(VanishingAnalyzer::new(desc)?.h11())
}

/// `H^{p,q}(X) = 0` for `p != q` and `p + q < r_R(G)`.
pub fn low_degree_zero(desc: PairDescriptor, p: usize, q: usize) -> bool {
    p != q && p + q < desc.real_rank()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PicardReport {
    /// Rank of `Pic(X)` modulo torsion, when known.
    pub rank_free_part: Option<u64>,
    /// Symbolic torsion of `H^2(X, Z)`.
    pub torsion: Option<String>,
    pub c1_isomorphism: bool,
    /// `r` in `Pic(Y) = Pic(X) + Z^r`.
    pub y_gamma_extra_rank: usize,
    /// The split, when its hypothesis `H^{0,2}(X) = 0` is available.
    pub y_gamma_split: Option<String>,
    pub reason: String,
}

/// `(rank 1, c1 isomorphism)` per type; `None` rank when not covered.
fn picard_cases(desc: PairDescriptor) -> (Option<u64>, bool) {
    use PairDescriptor::*;
    match desc {
        AIII { m, n } if m >= 2 && (m, n) != (2, 2) => (Some(1), m >= 3 && n >= m),
        CI { n } => (if n >= 3 { Some(1) } else { None }, n >= 4),
        DIII { n } => (if n >= 5 { Some(1) } else { None }, n >= 4),
        EIII | EVII => (Some(1), true),
        _ => (None, false),
    }
}

pub fn picard_reports(desc: PairDescriptor, parabolic_subset: &[usize], assume_h02_zero: bool) -> Result<PicardReport> {
    let datum = build_root_datum(desc)?;
    validate_parabolic(&datum, parabolic_subset)?;
    let extra = fiber_picard_rank(&datum, parabolic_subset)?;
    let (rank, c1) = picard_cases(desc);
    let torsion = (desc.real_rank() >= 3).then(|| "Γ/[Γ,Γ]".to_string());
    let (split, why) = if assume_h02_zero {
        (true, "H^{0,2}(X)=0 assumed".to_string())
    } else {
        let v = VanishingAnalyzer::from_datum(&datum)?.h0q(2)?;
        match v.value {
            Verdict::Zero => (true, format!("H^{{0,2}}(X)=0 derived: {}", v.reason)),
            _ => (false, format!("H^{{0,2}}(X) not known to vanish: {}", v.reason)),
        }
    };
    let y_gamma_split = split.then(|| format!("Pic(Y) = Pic(X) + Z^{extra}"));
    Ok(PicardReport {
        rank_free_part: rank,
        torsion,
        c1_isomorphism: c1,
        y_gamma_extra_rank: extra,
        y_gamma_split,
        reason: why,
    })
}
