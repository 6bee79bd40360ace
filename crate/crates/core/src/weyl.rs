//! Weyl group words, orbit enumeration and Poincaré polynomials of the
//! fibers `K/H`.
//!
//! Cosets are never represented as abstract group elements. A coset space
//! `W'/W''` is realized as the orbit of a point whose stabilizer in `W'` is
//! exactly `W''`; the breadth-first depth of an orbit point is the length of
//! the minimal coset representative reaching it.

use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;
use rayon::prelude::*;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::rational::{int, RatVec, Rational};
use crate::rootsys::RootDatum;

/// A word in the simple reflections, as indices into
/// [`RootDatum::simple_roots`].
///
/// The word `[i_1, ..., i_k]` denotes `s_{i_1} s_{i_2} ... s_{i_k}`: applied to
/// a point, the last letter acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// The inverse element: the reversed word.
    pub fn inverse(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    /// `s_letter * self`.
    fn prepend(&self, letter: usize) -> WeylWord {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(letter);
        v.extend_from_slice(&self.0);
        WeylWord(v)
    }
}

/// Simple reflection with its scalar `2 / (alpha, alpha)` precomputed.
#[derive(Debug, Clone)]
pub(crate) struct Reflection {
    root: RatVec,
    factor: Rational,
}

impl Reflection {
    pub(crate) fn new(root: &RatVec) -> Self {
        Reflection {
            factor: int(2) / root.dot_unchecked(root),
            root: root.clone(),
        }
    }

    pub(crate) fn apply(&self, x: &RatVec) -> RatVec {
        let ax = self.root.dot_unchecked(x);
        if ax.is_zero() {
            x.clone()
        } else {
            x.add_scaled(-(ax * self.factor), &self.root)
        }
    }
}

pub(crate) fn simple_reflections(datum: &RootDatum) -> Vec<Reflection> {
    datum.simple_roots().iter().map(Reflection::new).collect()
}

fn check_letter(datum: &RootDatum, letter: usize) -> Result<()> {
    if letter >= datum.rank() {
        return Err(Error::BadGeneratorIndex {
            index: letter,
            available: datum.rank(),
        });
    }
    Ok(())
}

/// Applies `w` to `x`; the last letter of the word acts first.
pub fn apply_word(datum: &RootDatum, w: &WeylWord, x: &RatVec) -> Result<RatVec> {
    datum.check_dim(x)?;
    for &l in w.letters() {
        check_letter(datum, l)?;
    }
    let refl = simple_reflections(datum);
    Ok(apply_word_with(&refl, w, x))
}

pub(crate) fn apply_word_with(refl: &[Reflection], w: &WeylWord, x: &RatVec) -> RatVec {
    w.letters().iter().rev().fold(x.clone(), |acc, &l| refl[l].apply(&acc))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitEntry {
    pub point: RatVec,
    /// Breadth-first level, i.e. the minimal word length from the seed.
    pub depth: usize,
    /// A minimal word carrying the seed to `point`.
    pub word: WeylWord,
}

/// Complete orbit of a seed point, grouped by depth; within each depth the
/// points are sorted lexicographically.
#[derive(Debug, Clone)]
pub struct OrbitTable {
    pub seed: RatVec,
    pub generators: Vec<usize>,
    pub entries: Vec<OrbitEntry>,
}

impl OrbitTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_depth(&self) -> usize {
        self.entries.last().map_or(0, |e| e.depth)
    }

    /// Number of orbit points at each depth `0..=max_depth`.
    pub fn depth_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.max_depth() + 1];
        for e in &self.entries {
            counts[e.depth] += 1;
        }
        counts
    }

    pub fn iter(&self) -> impl Iterator<Item = &OrbitEntry> {
        self.entries.iter()
    }
}

/// Orbit of `seed` under the reflections `generator_indices`, with the
/// default orbit limit.
pub fn orbit_bfs(datum: &RootDatum, generator_indices: &[usize], seed: &RatVec) -> Result<OrbitTable> {
    orbit_bfs_with_limit(datum, generator_indices, seed, Limits::default().orbit_limit)
}

pub fn orbit_bfs_with_limit(
    datum: &RootDatum,
    generator_indices: &[usize],
    seed: &RatVec,
    limit: usize,
) -> Result<OrbitTable> {
    datum.check_in_cartan(seed)?;
    for &g in generator_indices {
        check_letter(datum, g)?;
    }
    let mut gens: Vec<usize> = generator_indices.to_vec();
    gens.sort_unstable();
    gens.dedup();
    let refl = simple_reflections(datum);

    let mut seen: HashSet<RatVec> = HashSet::new();
    seen.insert(seed.clone());
    let mut entries = vec![OrbitEntry {
        point: seed.clone(),
        depth: 0,
        word: WeylWord::identity(),
    }];
    let mut level_start = 0;
    let mut depth = 0;
    loop {
        let frontier = &entries[level_start..];
        // Images are computed in parallel; the merge below walks them in
        // frontier order and generator order, so the first word found for a
        // point does not depend on scheduling.
        let images: Vec<Vec<(usize, RatVec)>> = frontier
            .par_iter()
            .map(|e| {
                gens.iter()
                    .filter_map(|&g| {
                        let p = refl[g].apply(&e.point);
                        (p != e.point).then_some((g, p))
                    })
                    .collect()
            })
            .collect();
        let mut next: BTreeMap<RatVec, WeylWord> = BTreeMap::new();
        for (e, imgs) in frontier.iter().zip(images) {
            for (g, p) in imgs {
                if !seen.contains(&p) {
                    next.entry(p).or_insert_with(|| e.word.prepend(g));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        depth += 1;
        level_start = entries.len();
        if entries.len() + next.len() > limit {
            return Err(Error::OrbitLimitExceeded(limit));
        }
        for (point, word) in next {
            seen.insert(point.clone());
            entries.push(OrbitEntry { point, depth, word });
        }
    }
    Ok(OrbitTable {
        seed: seed.clone(),
        generators: gens,
        entries,
    })
}

/// Checks that the subset consists of distinct compact simple-root indices.
pub fn validate_parabolic(datum: &RootDatum, parabolic_subset: &[usize]) -> Result<()> {
    let mut seen = HashSet::new();
    for &i in parabolic_subset {
        if !datum.compact_simple_indices().contains(&i) {
            return Err(Error::InvalidParabolicSubset(format!(
                "index {i} is not a compact simple root"
            )));
        }
        if !seen.insert(i) {
            return Err(Error::InvalidParabolicSubset(format!("index {i} repeated")));
        }
    }
    Ok(())
}

/// Number of compact simple roots outside the parabolic subset; this is
/// `dim S/Z(K)`, the rank of `Pic(K/H)`.
pub fn fiber_picard_rank(datum: &RootDatum, parabolic_subset: &[usize]) -> Result<usize> {
    validate_parabolic(datum, parabolic_subset)?;
    Ok(datum.compact_simple_indices().len() - parabolic_subset.len())
}

/// A point of the real Cartan subspace stabilized in `W_K` exactly by the
/// reflections in `parabolic_subset`.
pub fn fiber_seed(datum: &RootDatum, parabolic_subset: &[usize]) -> Result<RatVec> {
    validate_parabolic(datum, parabolic_subset)?;
    let w = datum.fundamental_coweights();
    Ok(RatVec::sum(
        datum.ambient_dim(),
        datum
            .compact_simple_indices()
            .iter()
            .filter(|i| !parabolic_subset.contains(i))
            .map(|&i| &w[i]),
    ))
}

/// Even Betti numbers `(b_0, b_2, ...)` of the flag manifold `K/H`, where the
/// simple roots of `H` are `parabolic_subset` (0-based compact simple
/// indices).
pub fn flag_poincare(datum: &RootDatum, parabolic_subset: &[usize]) -> Result<Vec<u64>> {
    flag_poincare_with_limit(datum, parabolic_subset, Limits::default().orbit_limit)
}

pub fn flag_poincare_with_limit(datum: &RootDatum, parabolic_subset: &[usize], limit: usize) -> Result<Vec<u64>> {
    let seed = fiber_seed(datum, parabolic_subset)?;
    let orbit = orbit_bfs_with_limit(datum, datum.compact_simple_indices(), &seed, limit)?;
    Ok(orbit.depth_counts())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_datum, PairDescriptor};

    #[test]
    fn empty_word_and_involution() {
        let d = build_root_datum(PairDescriptor::CI { n: 2 }).unwrap();
        let x = RatVec::from_ints(&[3, -1]);
        assert_eq!(apply_word(&d, &WeylWord::identity(), &x).unwrap(), x);
        assert_eq!(apply_word(&d, &WeylWord(vec![1, 1]), &x).unwrap(), x);
        assert_eq!(
            apply_word(&d, &WeylWord(vec![0]), &RatVec::from_ints(&[1, 0])).unwrap(),
            RatVec::from_ints(&[0, 1])
        );
    }

    #[test]
    fn word_convention_last_letter_first() {
        let d = build_root_datum(PairDescriptor::CI { n: 2 }).unwrap();
        // s_0 s_1 (1, 2): s_1 negates the second coordinate first, then swap.
        let x = RatVec::from_ints(&[1, 2]);
        assert_eq!(
            apply_word(&d, &WeylWord(vec![0, 1]), &x).unwrap(),
            RatVec::from_ints(&[-2, 1])
        );
    }

    #[test]
    fn bad_letter() {
        let d = build_root_datum(PairDescriptor::CI { n: 2 }).unwrap();
        assert_eq!(
            apply_word(&d, &WeylWord(vec![2]), &RatVec::from_ints(&[0, 0])),
            Err(Error::BadGeneratorIndex { index: 2, available: 2 })
        );
    }

    #[test]
    fn fixed_seed_orbit_is_trivial() {
        let d = build_root_datum(PairDescriptor::CI { n: 3 }).unwrap();
        let seed = RatVec::from_ints(&[1, 1, 1]);
        let orbit = orbit_bfs(&d, &[0, 1], &seed).unwrap();
        assert_eq!(orbit.len(), 1);
        assert_eq!(orbit.entries[0].depth, 0);
    }

    #[test]
    fn orbit_limit_is_enforced() {
        let d = build_root_datum(PairDescriptor::EIII).unwrap();
        let seed = d.fundamental_coweights()[0].clone();
        assert_eq!(
            orbit_bfs_with_limit(&d, &[0, 1, 2, 3, 4, 5], &seed, 10).unwrap_err(),
            Error::OrbitLimitExceeded(10)
        );
    }

    #[test]
    fn seed_outside_cartan_rejected() {
        let d = build_root_datum(PairDescriptor::AIII { m: 1, n: 2 }).unwrap();
        assert!(matches!(
            orbit_bfs(&d, &[0], &RatVec::from_ints(&[1, 0, 0])),
            Err(Error::ConstraintViolation(_))
        ));
    }

    #[test]
    fn poincare_small_cases() {
        let ci3 = build_root_datum(PairDescriptor::CI { n: 3 }).unwrap();
        assert_eq!(flag_poincare(&ci3, &[]).unwrap(), vec![1, 2, 2, 1]);
        assert_eq!(flag_poincare(&ci3, &[0, 1]).unwrap(), vec![1]);
        let a22 = build_root_datum(PairDescriptor::AIII { m: 2, n: 2 }).unwrap();
        assert_eq!(flag_poincare(&a22, &[]).unwrap(), vec![1, 2, 1]);
    }

    #[test]
    fn invalid_parabolic_subsets() {
        let ci3 = build_root_datum(PairDescriptor::CI { n: 3 }).unwrap();
        assert!(matches!(
            flag_poincare(&ci3, &[2]),
            Err(Error::InvalidParabolicSubset(_))
        ));
        assert!(matches!(
            flag_poincare(&ci3, &[0, 0]),
            Err(Error::InvalidParabolicSubset(_))
        ));
    }
}
