//! The ring of integer constructible functions on a complex: pointwise
//! arithmetic, the Euler integral, closed-indicator presentations via face
//! poset inversion, the canonical closed decomposition of a set, and the
//! two-adic divisibility ideal.

use crate::complex::{same_ambient, Complex, SimplexSet};
use crate::error::{Error, Result};

/// An integer value per open simplex, constant on each open simplex.
/// Arithmetic is checked; overflow is a hard error, never wraparound.
#[derive(Clone, PartialEq, Eq)]
pub struct ConstructibleFunction {
    ambient: Complex,
    values: Vec<i64>,
}

impl std::fmt::Debug for ConstructibleFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let entries: Vec<String> = self
            .ambient
            .ids()
            .filter(|id| self.values[*id] != 0)
            .map(|id| format!("{}:{}", self.ambient.simplex_name(id), self.values[id]))
            .collect();
        write!(f, "CF[{}]", entries.join(" "))
    }
}

fn checked(v: Option<i64>, context: &'static str) -> Result<i64> {
    v.ok_or(Error::IntegerOverflow { context })
}

impl ConstructibleFunction {
    pub fn zero(ambient: &Complex) -> Self {
        ConstructibleFunction {
            ambient: ambient.clone(),
            values: vec![0; ambient.len()],
        }
    }

    /// The characteristic function of a set of open simplices.
    pub fn indicator(set: &SimplexSet) -> Self {
        let mut f = Self::zero(set.ambient());
        for id in set.ids() {
            f.values[id] = 1;
        }
        f
    }

    pub fn from_values(ambient: &Complex, values: Vec<i64>) -> Self {
        assert_eq!(values.len(), ambient.len());
        ConstructibleFunction {
            ambient: ambient.clone(),
            values,
        }
    }

    pub fn ambient(&self) -> &Complex {
        &self.ambient
    }

    pub fn get(&self, id: usize) -> i64 {
        self.values[id]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| *v == 0)
    }

    /// The nonzero locus.
    pub fn support(&self) -> SimplexSet {
        SimplexSet::from_ids(
            &self.ambient,
            self.ambient.ids().filter(|id| self.values[*id] != 0),
        )
    }

    fn zip_with(
        &self,
        other: &Self,
        op: impl Fn(i64, i64) -> Option<i64>,
    ) -> Result<Self> {
        if !same_ambient(&self.ambient, &other.ambient) {
            return Err(Error::AmbientMismatch);
        }
        let mut values = Vec::with_capacity(self.values.len());
        for (a, b) in self.values.iter().zip(&other.values) {
            values.push(checked(op(*a, *b), "combining functions")?);
        }
        Ok(ConstructibleFunction {
            ambient: self.ambient.clone(),
            values,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, i64::checked_add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, i64::checked_sub)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, i64::checked_mul)
    }

    pub fn scale(&self, k: i64) -> Result<Self> {
        let mut values = Vec::with_capacity(self.values.len());
        for v in &self.values {
            values.push(checked(v.checked_mul(k), "scaling a function")?);
        }
        Ok(ConstructibleFunction {
            ambient: self.ambient.clone(),
            values,
        })
    }

    /// The Euler integral: the alternating sum of values over open simplices.
    pub fn integral(&self) -> Result<i64> {
        let mut total = 0i64;
        for id in self.ambient.ids() {
            let signed = if self.ambient.simplex_dim(id) % 2 == 0 {
                self.values[id]
            } else {
                checked(self.values[id].checked_neg(), "integrating")?
            };
            total = checked(total.checked_add(signed), "integrating")?;
        }
        Ok(total)
    }

    /// Integral of the restriction to a set.
    pub fn integral_over(&self, set: &SimplexSet) -> Result<i64> {
        self.restrict(set).integral()
    }

    /// Pointwise product with the indicator of a set.
    pub fn restrict(&self, set: &SimplexSet) -> Self {
        let mut f = self.clone();
        for id in self.ambient.ids() {
            if !set.contains(id) {
                f.values[id] = 0;
            }
        }
        f
    }

    /// Coefficients `c` with `phi = sum_sigma c[sigma] * 1_{closure(sigma)}`,
    /// by inversion on the face poset:
    /// `c[sigma] = sum_{rho >= sigma} (-1)^(dim rho - dim sigma) phi(rho)`.
    pub fn closed_presentation_coeffs(&self) -> Result<Vec<i64>> {
        let mut coeffs = vec![0i64; self.values.len()];
        for sigma in self.ambient.ids() {
            let ds = self.ambient.simplex_dim(sigma);
            let mut c = self.values[sigma];
            for rho in self.ambient.cofaces_of(sigma) {
                let term = if (self.ambient.simplex_dim(*rho) - ds) % 2 == 0 {
                    self.values[*rho]
                } else {
                    checked(self.values[*rho].checked_neg(), "inverting on the face poset")?
                };
                c = checked(c.checked_add(term), "inverting on the face poset")?;
            }
            coeffs[sigma] = c;
        }
        Ok(coeffs)
    }

    /// Rebuilds a function from closed-indicator coefficients; the inverse of
    /// [`closed_presentation_coeffs`](Self::closed_presentation_coeffs).
    pub fn from_closed_coeffs(ambient: &Complex, coeffs: &[i64]) -> Result<Self> {
        assert_eq!(coeffs.len(), ambient.len());
        let mut values = vec![0i64; ambient.len()];
        for (tau, value) in values.iter_mut().enumerate() {
            let mut v = coeffs[tau];
            for sigma in ambient.cofaces_of(tau) {
                v = checked(v.checked_add(coeffs[*sigma]), "summing closed indicators")?;
            }
            *value = v;
        }
        Ok(ConstructibleFunction {
            ambient: ambient.clone(),
            values,
        })
    }

    /// Membership in the ideal of functions divisible by `2^k` outside a set
    /// of dimension `< k`, for every positive `k`. On 64-bit values it
    /// suffices to check `k` up to the larger of `dim(X)+1` and the bit
    /// length of the largest absolute value plus one.
    pub fn in_divisibility_ideal(&self) -> bool {
        let dim = self.ambient.dim().map(|d| d as u32).unwrap_or(0);
        let bits = self
            .values
            .iter()
            .map(|v| 64 - v.unsigned_abs().leading_zeros())
            .max()
            .unwrap_or(0);
        let top = (dim + 1).max(bits + 1);
        for k in 1..=top {
            let bad_dim = self
                .ambient
                .ids()
                .filter(|id| !divisible_by_pow2(self.values[*id], k))
                .map(|id| self.ambient.simplex_dim(id) as u32)
                .max();
            if let Some(d) = bad_dim {
                if d >= k {
                    return false;
                }
            }
        }
        true
    }

    /// Least two-adic valuation over the support; `None` for the zero
    /// function.
    pub fn min_two_adic_valuation(&self) -> Option<u32> {
        self.values
            .iter()
            .filter(|v| **v != 0)
            .map(|v| v.trailing_zeros())
            .min()
    }
}

pub fn divisible_by_pow2(v: i64, k: u32) -> bool {
    v == 0 || v.trailing_zeros() >= k
}

/// The canonical decomposition of a set into a descending chain of closed
/// sets `F1 >= F2 >= ...` with `1_S = 1_F1 - 1_F2 + 1_F3 - ...`:
/// recursively, `F_i` is the closure of `Y_{i-1}` and `Y_i = F_i - Y_{i-1}`.
pub fn canonical_closed_decomposition(set: &SimplexSet) -> Vec<SimplexSet> {
    let mut out = Vec::new();
    let mut y = set.clone();
    while !y.is_empty() {
        let f = y.closure();
        out.push(f.clone());
        y = f.difference(&y);
    }
    out
}
