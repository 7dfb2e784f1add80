use std::collections::BTreeMap;
use std::sync::Arc;

use super::element::{accumulate, convolve_into, Coeffs, GroupRingElement};
use super::same_group;
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::scalar::Scalar;

/// A square matrix over `QG`. A projective module is represented as the row
/// space `(QG)^n * M` of an idempotent `M`.
#[derive(Debug, Clone)]
pub struct GroupRingMatrix<S> {
    group: Arc<FiniteGroup>,
    size: usize,
    entries: Vec<Coeffs<S>>,
}

impl<S: Scalar> GroupRingMatrix<S> {
    /// Builds from rows of entries; every entry must live over `group`.
    pub fn new(group: Arc<FiniteGroup>, rows: Vec<Vec<GroupRingElement<S>>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != size {
                return Err(Error::SizeMismatch(format!(
                    "row {i} has {} entries in a {size}x{size} matrix",
                    row.len()
                )));
            }
            for e in row {
                if !same_group(e.group(), &group) {
                    return Err(Error::GroupMismatch);
                }
                entries.push(e.coeffs().clone());
            }
        }
        Ok(GroupRingMatrix {
            group,
            size,
            entries,
        })
    }

    pub(crate) fn from_raw(group: Arc<FiniteGroup>, size: usize, entries: Vec<Coeffs<S>>) -> Self {
        debug_assert_eq!(entries.len(), size * size);
        GroupRingMatrix {
            group,
            size,
            entries,
        }
    }

    pub fn zero(group: Arc<FiniteGroup>, size: usize) -> Self {
        Self::from_raw(group, size, vec![BTreeMap::new(); size * size])
    }

    pub fn identity(group: Arc<FiniteGroup>, size: usize) -> Self {
        let mut m = Self::zero(group, size);
        for i in 0..size {
            m.entries[i * size + i].insert(0, S::one());
        }
        m
    }

    /// A `1 x 1` matrix.
    pub fn scalar(e: GroupRingElement<S>) -> Self {
        let group = e.group().clone();
        Self::from_raw(group, 1, vec![e.coeffs().clone()])
    }

    /// `I + x * E_ij` for `i != j`; its inverse is `I - x * E_ij`.
    pub fn elementary(size: usize, i: usize, j: usize, x: &GroupRingElement<S>) -> Result<Self> {
        if i == j || i >= size || j >= size {
            return Err(Error::SizeMismatch(format!(
                "elementary position ({i},{j}) in size {size}"
            )));
        }
        let mut m = Self::identity(x.group().clone(), size);
        m.entries[i * size + j] = x.coeffs().clone();
        Ok(m)
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(diag: &[GroupRingElement<S>]) -> Result<Self> {
        let group = diag
            .first()
            .ok_or_else(|| Error::SizeMismatch("empty diagonal".into()))?
            .group()
            .clone();
        let n = diag.len();
        let mut m = Self::zero(group.clone(), n);
        for (i, d) in diag.iter().enumerate() {
            if !same_group(d.group(), &group) {
                return Err(Error::GroupMismatch);
            }
            m.entries[i * n + i] = d.coeffs().clone();
        }
        Ok(m)
    }

    /// Block-diagonal sum `M_1 + M_2 + ...`.
    pub fn block_diag(blocks: &[&Self]) -> Result<Self> {
        let group = blocks
            .first()
            .ok_or_else(|| Error::SizeMismatch("no blocks".into()))?
            .group
            .clone();
        if blocks.iter().any(|b| !same_group(&b.group, &group)) {
            return Err(Error::GroupMismatch);
        }
        let n: usize = blocks.iter().map(|b| b.size).sum();
        let mut m = Self::zero(group, n);
        let mut offset = 0;
        for b in blocks {
            for i in 0..b.size {
                for j in 0..b.size {
                    m.entries[(offset + i) * n + offset + j] = b.entries[i * b.size + j].clone();
                }
            }
            offset += b.size;
        }
        Ok(m)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, i: usize, j: usize) -> GroupRingElement<S> {
        GroupRingElement::from_coeffs(self.group.clone(), self.entries[i * self.size + j].clone())
    }

    pub(crate) fn raw(&self, i: usize, j: usize) -> &Coeffs<S> {
        &self.entries[i * self.size + j]
    }

    /// Coefficient of `g` in entry `(i, j)`.
    pub fn coeff(&self, i: usize, j: usize, g: Element) -> S {
        self.raw(i, j).get(&g).cloned().unwrap_or_else(S::zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if !same_group(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        if self.size != other.size {
            return Err(Error::SizeMismatch(format!("{} vs {}", self.size, other.size)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| {
                let mut out = a.clone();
                for (&g, c) in b {
                    accumulate(&mut out, g, c.clone());
                }
                out
            })
            .collect();
        Ok(Self::from_raw(self.group.clone(), self.size, entries))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let mut out = BTreeMap::new();
                for (&g, x) in e {
                    accumulate(&mut out, g, x.clone() * c.clone());
                }
                out
            })
            .collect();
        Self::from_raw(self.group.clone(), self.size, entries)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.size;
        let mut entries = vec![BTreeMap::new(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_empty() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_empty() {
                        convolve_into(&self.group, a, b, &mut entries[i * n + j]);
                    }
                }
            }
        }
        Ok(Self::from_raw(self.group.clone(), n, entries))
    }

    /// `M * M == M`, exactly for exact scalars.
    pub fn is_idempotent(&self) -> bool {
        let square = self.mul(self).expect("same group and size");
        square == *self
    }
}

impl<S: Scalar> PartialEq for GroupRingMatrix<S> {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group)
            && self.size == other.size
            && self.entries.iter().zip(&other.entries).all(|(a, b)| {
                a.len() == b.len() && a.iter().zip(b).all(|((g, x), (h, y))| g == h && x.same(y))
            })
    }
}
