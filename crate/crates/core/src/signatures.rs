//! Signatures `(R+, R-)` of the theta-stable parabolics `q_x` and their
//! exhaustive enumeration.
//!
//! `R+(x)` counts positive noncompact roots with `alpha(x) > 0`, `R-(x)` those
//! with `alpha(x) < 0`. Both are constant on faces of the Coxeter arrangement
//! and invariant under `W_K`, so every attainable value already appears at one
//! generic point `w . x_B` per nonempty subset `B` of simple roots
//! (`x_B = sum_{i in B} omega_i`) and per right coset `W_K w` of `W`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::Limits;
use crate::error::Result;
use crate::rational::{sign, RatVec};
use crate::rootsys::RootDatum;
use crate::weyl::{apply_word_with, orbit_bfs_with_limit, simple_reflections, Reflection, WeylWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Signature {
    pub r_plus: usize,
    pub r_minus: usize,
}

impl Signature {
    pub fn new(r_plus: usize, r_minus: usize) -> Self {
        Signature { r_plus, r_minus }
    }

    /// `(R-, R+)`, the signature of `-x`.
    pub fn swapped(self) -> Self {
        Signature::new(self.r_minus, self.r_plus)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.r_plus, self.r_minus)
    }
}

/// Attainable `R-` values grouped by `R+`, each list sorted and deduplicated.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SignatureSet {
    rows: BTreeMap<usize, BTreeSet<usize>>,
}

impl SignatureSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_signatures<I: IntoIterator<Item = Signature>>(sigs: I) -> Self {
        let mut set = SignatureSet::new();
        for s in sigs {
            set.insert(s);
        }
        set
    }

    /// A set holding a single row.
    pub fn single_row(r_plus: usize, r_minus: BTreeSet<usize>) -> Self {
        let mut rows = BTreeMap::new();
        rows.insert(r_plus, r_minus);
        SignatureSet { rows }
    }

    pub fn insert(&mut self, s: Signature) {
        self.rows.entry(s.r_plus).or_default().insert(s.r_minus);
    }

    /// Ensures a (possibly empty) row exists for `r_plus`.
    pub fn touch(&mut self, r_plus: usize) {
        self.rows.entry(r_plus).or_default();
    }

    pub fn contains(&self, s: Signature) -> bool {
        self.rows.get(&s.r_plus).is_some_and(|r| r.contains(&s.r_minus))
    }

    /// Attainable `R-` values for `r_plus`, ascending.
    pub fn r_minus(&self, r_plus: usize) -> Vec<usize> {
        self.rows
            .get(&r_plus)
            .map(|r| r.iter().copied().collect())
            .unwrap_or_default()
    }

    pub fn row(&self, r_plus: usize) -> BTreeSet<usize> {
        self.rows.get(&r_plus).cloned().unwrap_or_default()
    }

    pub fn r_plus_values(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = Signature> + '_ {
        self.rows
            .iter()
            .flat_map(|(&p, ms)| ms.iter().map(move |&m| Signature::new(p, m)))
    }

    pub fn len(&self) -> usize {
        self.rows.values().map(BTreeSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset(&self, other: &SignatureSet) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    /// Keeps only the rows whose `R+` is in `keep`.
    pub fn filtered(&self, keep: &[usize]) -> SignatureSet {
        let mut out = SignatureSet::new();
        for &p in keep {
            out.rows.insert(p, self.row(p));
        }
        out
    }
}

fn signature_unchecked(noncompact: &[RatVec], x: &RatVec) -> Signature {
    let mut s = Signature::new(0, 0);
    for alpha in noncompact {
        match sign(&alpha.dot_unchecked(x)) {
            1 => s.r_plus += 1,
            -1 => s.r_minus += 1,
            _ => {}
        }
    }
    s
}

/// `(R+, R-)` of `q_x`; `x` must lie in the real Cartan subspace.
pub fn r_signature(datum: &RootDatum, x: &RatVec) -> Result<Signature> {
    datum.check_in_cartan(x)?;
    Ok(signature_unchecked(datum.pos_noncompact(), x))
}

/// A generic point of one face, tagged with where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacePoint {
    /// Support `B` of the dominant face, as 0-based simple-root indices.
    pub subset: Vec<usize>,
    /// Index of the coset representative in [`FaceEnumeration::coset_words`].
    pub coset: usize,
    pub point: RatVec,
}

/// The face-point stream of a root datum: `(2^rank - 1) * |W_K \ W|` points.
#[derive(Debug, Clone)]
pub struct FaceEnumeration {
    reflections: Vec<Reflection>,
    coweights: Vec<RatVec>,
    ambient_dim: usize,
    coset_words: Vec<WeylWord>,
}

impl FaceEnumeration {
    pub fn new(datum: &RootDatum) -> Result<Self> {
        Self::with_limit(datum, Limits::default().orbit_limit)
    }

    pub fn with_limit(datum: &RootDatum, orbit_limit: usize) -> Result<Self> {
        let all: Vec<usize> = (0..datum.rank()).collect();
        let seed = datum.fundamental_coweights()[datum.noncompact_simple_index()].clone();
        // The stabilizer of this coweight in W is exactly W_K, so orbit words
        // w represent the left cosets w W_K; their inverses represent W_K \ W.
        let orbit = orbit_bfs_with_limit(datum, &all, &seed, orbit_limit)?;
        let coset_words = orbit.iter().map(|e| e.word.inverse()).collect();
        Ok(FaceEnumeration {
            reflections: simple_reflections(datum),
            coweights: datum.fundamental_coweights().to_vec(),
            ambient_dim: datum.ambient_dim(),
            coset_words,
        })
    }

    pub fn rank(&self) -> usize {
        self.coweights.len()
    }

    /// Representatives `w` of the right cosets `W_K w`.
    pub fn coset_words(&self) -> &[WeylWord] {
        &self.coset_words
    }

    pub fn subset_count(&self) -> usize {
        (1usize << self.rank()) - 1
    }

    pub fn len(&self) -> usize {
        self.subset_count() * self.coset_words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn subset_of(&self, mask: usize) -> Vec<usize> {
        (0..self.rank()).filter(|i| mask >> i & 1 == 1).collect()
    }

    /// `x_B` for the subset encoded by the bit mask.
    fn dominant_point(&self, mask: usize) -> RatVec {
        RatVec::sum(
            self.ambient_dim,
            (0..self.rank())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| &self.coweights[i]),
        )
    }

    /// All face points of one subset, in coset order.
    fn points_for_mask(&self, mask: usize) -> impl Iterator<Item = (usize, RatVec)> + '_ {
        let base = self.dominant_point(mask);
        self.coset_words
            .iter()
            .enumerate()
            .map(move |(c, w)| (c, apply_word_with(&self.reflections, w, &base)))
    }

    /// Streams every face point, subsets in increasing bit-mask order.
    pub fn iter(&self) -> impl Iterator<Item = FacePoint> + '_ {
        (1..=self.subset_count()).flat_map(move |mask| {
            let subset = self.subset_of(mask);
            self.points_for_mask(mask).map(move |(coset, point)| FacePoint {
                subset: subset.clone(),
                coset,
                point,
            })
        })
    }
}

pub fn enumerate_face_points(datum: &RootDatum) -> Result<FaceEnumeration> {
    FaceEnumeration::new(datum)
}

/// Every signature attained by some `x != 0`, optionally restricted to the
/// given `R+` values (rows for requested values are present even if empty).
pub fn attainable_signatures(datum: &RootDatum, r_plus_filter: Option<&[usize]>) -> Result<SignatureSet> {
    let faces = FaceEnumeration::new(datum)?;
    Ok(attainable_from(datum, &faces, r_plus_filter))
}

pub fn attainable_from(datum: &RootDatum, faces: &FaceEnumeration, r_plus_filter: Option<&[usize]>) -> SignatureSet {
    let noncompact = datum.pos_noncompact();
    let all: BTreeSet<Signature> = (1..=faces.subset_count())
        .into_par_iter()
        .map(|mask| {
            faces
                .points_for_mask(mask)
                .map(|(_, p)| signature_unchecked(noncompact, &p))
                .collect::<BTreeSet<_>>()
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let set = SignatureSet::from_signatures(all);
    match r_plus_filter {
        Some(keep) => set.filtered(keep),
        None => set,
    }
}

/// First face point (in stream order) attaining each signature.
pub fn attainable_with_provenance(datum: &RootDatum) -> Result<BTreeMap<Signature, FacePoint>> {
    let faces = FaceEnumeration::new(datum)?;
    let noncompact = datum.pos_noncompact();
    let per_mask: Vec<BTreeMap<Signature, (usize, RatVec)>> = (1..=faces.subset_count())
        .into_par_iter()
        .map(|mask| {
            let mut first = BTreeMap::new();
            for (c, p) in faces.points_for_mask(mask) {
                first.entry(signature_unchecked(noncompact, &p)).or_insert((c, p));
            }
            first
        })
        .collect();
    let mut out = BTreeMap::new();
    for (i, found) in per_mask.into_iter().enumerate() {
        let mask = i + 1;
        for (sig, (coset, point)) in found {
            out.entry(sig).or_insert_with(|| FacePoint {
                subset: faces.subset_of(mask),
                coset,
                point,
            });
        }
    }
    Ok(out)
}

/// Signatures of `count` pseudo-random nonzero points of the real Cartan
/// subspace. Coordinates are drawn from `[-10, 10]` and projected
/// orthogonally onto the subspace; zero points are redrawn.
pub fn sample_signatures(datum: &RootDatum, count: usize, seed: u64) -> BTreeSet<Signature> {
    sample_points(datum, count, seed)
        .iter()
        .map(|x| signature_unchecked(datum.pos_noncompact(), x))
        .collect()
}

/// The random points behind [`sample_signatures`].
pub fn sample_points(datum: &RootDatum, count: usize, seed: u64) -> Vec<RatVec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = datum.ambient_dim();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let raw: Vec<i64> = (0..dim).map(|_| rng.random_range(-10..=10)).collect();
        let x = datum
            .project_to_cartan(&RatVec::from_ints(&raw))
            .expect("sample has ambient length");
        if x.is_zero() || !datum.in_cartan(&x) {
            continue;
        }
        out.push(x);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::rootsys::{build_root_datum, PairDescriptor};

    #[test]
    fn aiii_block_vector() {
        let d = build_root_datum(PairDescriptor::AIII { m: 2, n: 3 }).unwrap();
        let x = RatVec::from_ints(&[-1, 0, 0, 0, 1]);
        assert_eq!(r_signature(&d, &x).unwrap(), Signature::new(0, 4));
    }

    #[test]
    fn zero_point_has_trivial_signature() {
        let d = build_root_datum(PairDescriptor::EVII).unwrap();
        assert_eq!(r_signature(&d, &RatVec::zeros(8)).unwrap(), Signature::new(0, 0));
    }

    #[test]
    fn ci2_all_negative() {
        let d = build_root_datum(PairDescriptor::CI { n: 2 }).unwrap();
        assert_eq!(
            r_signature(&d, &RatVec::from_ints(&[-1, -1])).unwrap(),
            Signature::new(0, 3)
        );
    }

    #[test]
    fn signature_requires_cartan_point() {
        let d = build_root_datum(PairDescriptor::EIII).unwrap();
        let x = RatVec::from_ints(&[0, 0, 0, 0, 0, 1, 0, 0]);
        assert!(r_signature(&d, &x).is_err());
    }

    #[test]
    fn ci2_face_count() {
        let d = build_root_datum(PairDescriptor::CI { n: 2 }).unwrap();
        let faces = enumerate_face_points(&d).unwrap();
        assert_eq!(faces.coset_words().len(), 4);
        assert_eq!(faces.iter().count(), 12);
        assert!(faces.iter().all(|f| !f.point.is_zero()));
    }

    #[test]
    fn aiii_1_3_rplus_zero() {
        let d = build_root_datum(PairDescriptor::AIII { m: 1, n: 3 }).unwrap();
        let set = attainable_signatures(&d, Some(&[0])).unwrap();
        assert_eq!(set.r_minus(0), vec![1, 2, 3]);
    }

    #[test]
    fn provenance_points_reproduce_their_signature() {
        let d = build_root_datum(PairDescriptor::CI { n: 3 }).unwrap();
        let prov = attainable_with_provenance(&d).unwrap();
        let all = attainable_signatures(&d, None).unwrap();
        assert_eq!(prov.len(), all.len());
        for (sig, face) in prov {
            assert_eq!(r_signature(&d, &face.point).unwrap(), sig);
        }
    }

    #[test]
    fn sampler_is_deterministic_and_sound() {
        let d = build_root_datum(PairDescriptor::DIII { n: 4 }).unwrap();
        let a = sample_signatures(&d, 500, 7);
        let b = sample_signatures(&d, 500, 7);
        assert_eq!(a, b);
        let all = attainable_signatures(&d, None).unwrap();
        assert!(a.iter().all(|&s| all.contains(s)));
    }

    #[test]
    fn projection_lands_in_cartan() {
        let d = build_root_datum(PairDescriptor::EIII).unwrap();
        for x in sample_points(&d, 50, 3) {
            assert!(d.in_cartan(&x));
            assert_eq!(x.coords()[5], x.coords()[6]);
            assert_eq!(x.coords()[6] + x.coords()[7], int(0));
        }
    }
}
