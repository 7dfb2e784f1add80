use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// L²-Betti numbers `(b_0, b_1, ..., b_d)`; all higher entries are zero.
///
/// Trailing zeros are trimmed, so a vanishing vector is `(0)`.
#[derive(Debug, Clone)]
pub struct BettiVector<S>(Vec<S>);

impl<S: Scalar> BettiVector<S> {
    pub fn new(entries: Vec<S>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|b| b.is_negative_value()) {
            return Err(Error::InvalidInput(format!("negative Betti number {bad:?}")));
        }
        Ok(Self::normalized(entries))
    }

    fn normalized(mut entries: Vec<S>) -> Self {
        while entries.len() > 1 && entries.last().is_some_and(|b| b.is_zero()) {
            entries.pop();
        }
        if entries.is_empty() {
            entries.push(S::zero());
        }
        BettiVector(entries)
    }

    pub fn zero() -> Self {
        BettiVector(vec![S::zero()])
    }

    /// `(c)` in degree zero.
    pub fn point(c: S) -> Self {
        Self::normalized(vec![c])
    }

    pub fn entries(&self) -> &[S] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|b| b.is_zero())
    }

    /// `sum (-1)^i b_i`.
    pub fn alternating_sum(&self) -> S {
        self.0.iter().enumerate().fold(S::zero(), |acc, (i, b)| {
            if i % 2 == 0 {
                acc + b.clone()
            } else {
                acc - b.clone()
            }
        })
    }

    /// Künneth: `b_n(H x K) = sum_{i+j=n} b_i(H) b_j(K)`.
    pub fn convolve(&self, other: &Self) -> Self {
        let mut out = vec![S::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::normalized(out)
    }
}

impl<S: Scalar> PartialEq for BettiVector<S> {
    fn eq(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a.same(b))
    }
}
