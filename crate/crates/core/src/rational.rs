//! Exact rational scalars, coordinate vectors and a small Gaussian
//! elimination routine.
//!
//! All coordinates that occur for the seven Hermitian families are integers or
//! half-integers, and every derived point (coweights, reflected face points)
//! keeps numerators and denominators small, so `i64` ratios are ample.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::Ratio<i64>;

/// Shorthand for an integer-valued [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// Shorthand for `num / den`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

/// A vector of exact rational coordinates in the ambient Euclidean space.
///
/// Ordering is lexicographic on the coordinates, which is what the orbit
/// enumeration uses to keep its output deterministic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RatVec(Vec<Rational>);

impl RatVec {
    pub fn new(coords: Vec<Rational>) -> Self {
        RatVec(coords)
    }

    pub fn zeros(len: usize) -> Self {
        RatVec(vec![Rational::zero(); len])
    }

    /// Standard basis vector `e_index` (0-based).
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[index] = Rational::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RatVec(coords.iter().map(|&c| int(c)).collect())
    }

    /// Builds a vector from doubled coordinates, i.e. `from_halves(&[1, -1])`
    /// is `(1/2, -1/2)`.
    pub fn from_halves(doubled: &[i64]) -> Self {
        RatVec(doubled.iter().map(|&c| frac(c, 2)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn check_len(&self, other: &RatVec) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(())
    }

    /// Exact Euclidean inner product.
    pub fn dot(&self, other: &RatVec) -> Result<Rational> {
        self.check_len(other)?;
        Ok(self.dot_unchecked(other))
    }

    /// Inner product for vectors already known to have equal length.
    pub(crate) fn dot_unchecked(&self, other: &RatVec) -> Rational {
        debug_assert_eq!(self.len(), other.len());
        let mut acc = Rational::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }

    pub fn scale(&self, factor: Rational) -> RatVec {
        RatVec(self.0.iter().map(|c| c * factor).collect())
    }

    /// `self + factor * other`, lengths assumed equal.
    pub(crate) fn add_scaled(&self, factor: Rational, other: &RatVec) -> RatVec {
        debug_assert_eq!(self.len(), other.len());
        RatVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| if b.is_zero() { *a } else { a + factor * b })
                .collect(),
        )
    }

    /// Sum of a non-empty collection of equal-length vectors.
    pub fn sum<'a, I: IntoIterator<Item = &'a RatVec>>(len: usize, items: I) -> RatVec {
        let mut acc = RatVec::zeros(len);
        for v in items {
            acc = &acc + v;
        }
        acc
    }

    /// True when every coordinate, doubled, is an integer.
    pub fn is_half_integral(&self) -> bool {
        self.0.iter().all(|c| (c * int(2)).is_integer())
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator_lcm(&self) -> i64 {
        self.0.iter().fold(1, |acc, c| lcm(acc, *c.denom()))
    }
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

impl Add for &RatVec {
    type Output = RatVec;
    fn add(self, rhs: &RatVec) -> RatVec {
        assert_eq!(self.len(), rhs.len(), "RatVec length mismatch");
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatVec {
    type Output = RatVec;
    fn sub(self, rhs: &RatVec) -> RatVec {
        assert_eq!(self.len(), rhs.len(), "RatVec length mismatch");
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RatVec {
    type Output = RatVec;
    fn neg(self) -> RatVec {
        RatVec(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for RatVec {
    type Output = RatVec;
    fn neg(self) -> RatVec {
        -&self
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Vec<Rational>> for RatVec {
    fn from(coords: Vec<Rational>) -> Self {
        RatVec(coords)
    }
}

/// Solves `A X = B` exactly, where `A` is square (given by rows) and `B` is a
/// list of right-hand-side columns. Returns one solution vector per column.
pub fn solve_square(rows: &[RatVec], rhs: &[RatVec]) -> Result<Vec<RatVec>> {
    let n = rows.len();
    for row in rows {
        if row.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: row.len(),
            });
        }
    }
    for col in rhs {
        if col.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: col.len(),
            });
        }
    }
    let k = rhs.len();
    // Augmented matrix [A | B].
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut r = rows[i].coords().to_vec();
            r.extend(rhs.iter().map(|c| c.coords()[i]));
            r
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).ok_or(Error::SingularSystem)?;
        m.swap(col, pivot);
        let p = m[col][col];
        for entry in m[col].iter_mut() {
            *entry /= p;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col];
                for (entry, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *entry -= f * p;
                }
            }
        }
    }
    Ok((0..k).map(|j| RatVec((0..n).map(|i| m[i][n + j]).collect())).collect())
}

/// Rank of a list of row vectors.
pub fn rank(rows: &[RatVec]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let width = rows[0].len();
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if !row[col].is_zero() {
                let f = row[col] / pivot_row[col];
                for (entry, p) in row.iter_mut().zip(&pivot_row).take(width).skip(col) {
                    *entry -= f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Gram–Schmidt over the rationals. Zero vectors (dependent inputs) are
/// dropped.
pub fn orthogonalize(vectors: &[RatVec]) -> Vec<RatVec> {
    let mut basis: Vec<RatVec> = Vec::with_capacity(vectors.len());
    for v in vectors {
        let mut w = v.clone();
        for b in &basis {
            let coeff = w.dot_unchecked(b) / b.dot_unchecked(b);
            w = w.add_scaled(-coeff, b);
        }
        if !w.is_zero() {
            basis.push(w);
        }
    }
    basis
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_normalized() {
        let r = frac(4, -6);
        assert_eq!(*r.numer(), -2);
        assert_eq!(*r.denom(), 3);
    }

    #[test]
    fn dot_rejects_mismatched_lengths() {
        let a = RatVec::from_ints(&[1, 2]);
        let b = RatVec::from_ints(&[1, 2, 3]);
        assert_eq!(a.dot(&b), Err(Error::DimensionMismatch { expected: 2, got: 3 }));
    }

    #[test]
    fn solve_two_by_two() {
        // x + y = 3, x - y = 1
        let rows = [RatVec::from_ints(&[1, 1]), RatVec::from_ints(&[1, -1])];
        let sol = solve_square(&rows, &[RatVec::from_ints(&[3, 1])]).unwrap();
        assert_eq!(sol[0], RatVec::from_ints(&[2, 1]));
    }

    #[test]
    fn solve_detects_singular() {
        let rows = [RatVec::from_ints(&[1, 2]), RatVec::from_ints(&[2, 4])];
        assert_eq!(
            solve_square(&rows, &[RatVec::from_ints(&[1, 0])]),
            Err(Error::SingularSystem)
        );
    }

    #[test]
    fn gram_schmidt_drops_dependent_vectors() {
        let vs = [
            RatVec::from_ints(&[1, 1, 0]),
            RatVec::from_ints(&[2, 2, 0]),
            RatVec::from_ints(&[0, 1, 1]),
        ];
        let b = orthogonalize(&vs);
        assert_eq!(b.len(), 2);
        assert!(b[0].dot_unchecked(&b[1]).is_zero());
        assert_eq!(rank(&vs), 2);
    }

    #[test]
    fn half_integrality() {
        assert!(RatVec::from_halves(&[1, -3, 4]).is_half_integral());
        assert!(!RatVec::new(vec![frac(1, 3)]).is_half_integral());
        assert_eq!(RatVec::new(vec![frac(1, 2), frac(1, 3)]).denominator_lcm(), 6);
    }
}
