//! Parameter grids for table reproduction.

use crate::rootsys::PairDescriptor;

/// Default grid bound; see [`ParamGrid::new`].
pub const DEFAULT_MAX_PARAMS: usize = 8;

/// Classical descriptors bounded by a single size parameter `P`:
///
/// * AIII with `2 <= m <= n`, `m + n <= P`, and AIII(1, n) with `2 <= n <= P - 2`
/// * BDI-even with `3 <= m <= P - 2`, BDI-odd with `2 <= m <= P - 3`
/// * CI with `2 <= n <= P - 3`, DIII with `4 <= n <= P - 2`
///
/// `P = 8` gives the acceptance grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamGrid {
    pub max_params: usize,
}

impl Default for ParamGrid {
    fn default() -> Self {
        ParamGrid::new(DEFAULT_MAX_PARAMS)
    }
}

impl ParamGrid {
    pub fn new(max_params: usize) -> Self {
        ParamGrid { max_params }
    }

    /// Classical descriptors in table order.
    pub fn classical(&self) -> Vec<PairDescriptor> {
        let p = self.max_params;
        let mut out = Vec::new();
        for n in 2..=p.saturating_sub(2) {
            out.push(PairDescriptor::AIII { m: 1, n });
        }
        for m in 2..=p / 2 {
            for n in m..=p - m {
                out.push(PairDescriptor::AIII { m, n });
            }
        }
        for m in 3..=p.saturating_sub(2) {
            out.push(PairDescriptor::BdiEven { m });
        }
        for m in 2..=p.saturating_sub(3) {
            out.push(PairDescriptor::BdiOdd { m });
        }
        for n in 2..=p.saturating_sub(3) {
            out.push(PairDescriptor::CI { n });
        }
        for n in 4..=p.saturating_sub(2) {
            out.push(PairDescriptor::DIII { n });
        }
        out
    }

    /// Classical descriptors followed by EIII and EVII.
    pub fn all(&self) -> Vec<PairDescriptor> {
        let mut v = self.classical();
        v.push(PairDescriptor::EIII);
        v.push(PairDescriptor::EVII);
        v
    }

    /// Rows of the `R+ = 0` table.
    pub fn rplus_zero_rows(&self) -> Vec<PairDescriptor> {
        self.classical()
    }

    /// Rows of the `R+ = 1` table: CI needs `n >= 3`, BDI-even `m >= 4`.
    pub fn rplus_one_rows(&self) -> Vec<PairDescriptor> {
        self.classical()
            .into_iter()
            .filter(|d| !matches!(d, PairDescriptor::CI { n: 2 } | PairDescriptor::BdiEven { m: 3 }))
            .collect()
    }
}

pub fn exceptional() -> Vec<PairDescriptor> {
    vec![PairDescriptor::EIII, PairDescriptor::EVII]
}
