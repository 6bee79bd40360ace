//! Integer polynomials in `q` and the standard q-analogs.
//!
//! These are computed from recurrences only, with no reference to root data,
//! and serve as an independent check on the Weyl-orbit Poincaré polynomials
//! of type-A flag manifolds.

/// Dense polynomial with non-negative integer coefficients, lowest degree
/// first. Trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly(Vec<u64>);

impl QPoly {
    pub fn one() -> Self {
        QPoly(vec![1])
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        QPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn eval_at_one(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        let mut out = vec![0u64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let len = self.0.len().max(other.0.len());
        let out = (0..len)
            .map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0))
            .collect();
        QPoly::from_coeffs(out)
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> QPoly {
        let mut out = vec![0u64; k];
        out.extend_from_slice(&self.0);
        QPoly::from_coeffs(out)
    }

    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_integer(n: usize) -> QPoly {
    if n == 0 {
        return QPoly::from_coeffs(vec![0]);
    }
    QPoly::from_coeffs(vec![1; n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, k| acc.mul(&q_integer(k)))
}

/// Gaussian binomial via the q-Pascal rule
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
pub fn gaussian_binomial(n: usize, k: usize) -> QPoly {
    if k > n {
        return QPoly::from_coeffs(vec![0]);
    }
    // row[k] holds [i, k] for the current i.
    let mut row = vec![QPoly::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i + 1);
        for j in 0..=i {
            let poly = if j == 0 || j == i {
                QPoly::one()
            } else {
                row[j - 1].add(&row[j].shift(j))
            };
            next.push(poly);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// q-multinomial `[k_1 + ... + k_r; k_1, ..., k_r]_q` as a product of
/// Gaussian binomials.
pub fn q_multinomial(parts: &[usize]) -> QPoly {
    let mut total = 0;
    let mut acc = QPoly::one();
    for &k in parts {
        total += k;
        acc = acc.mul(&gaussian_binomial(total, k));
    }
    acc
}
