use std::collections::BTreeMap;
use std::sync::Arc;

use super::same_group;
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::scalar::Scalar;

pub(crate) type Coeffs<S> = BTreeMap<Element, S>;

/// A finitely supported `S`-combination of group elements. Zero
/// coefficients are never stored, so equality is structural.
#[derive(Debug, Clone)]
pub struct GroupRingElement<S> {
    group: Arc<FiniteGroup>,
    coeffs: Coeffs<S>,
}

pub(crate) fn accumulate<S: Scalar>(out: &mut Coeffs<S>, g: Element, c: S) {
    if c.is_zero() {
        return;
    }
    match out.get_mut(&g) {
        Some(v) => {
            *v = v.clone() + c;
            if v.is_zero() {
                out.remove(&g);
            }
        }
        None => {
            out.insert(g, c);
        }
    }
}

/// `out += a * b` in the group ring.
pub(crate) fn convolve_into<S: Scalar>(
    group: &FiniteGroup,
    a: &Coeffs<S>,
    b: &Coeffs<S>,
    out: &mut Coeffs<S>,
) {
    for (&g, x) in a {
        for (&h, y) in b {
            accumulate(out, group.mul(g, h), x.clone() * y.clone());
        }
    }
}

impl<S: Scalar> GroupRingElement<S> {
    pub fn zero(group: Arc<FiniteGroup>) -> Self {
        GroupRingElement {
            group,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(group: Arc<FiniteGroup>) -> Self {
        Self::basis(group, 0)
    }

    /// The group element `g` itself.
    pub fn basis(group: Arc<FiniteGroup>, g: Element) -> Self {
        Self::from_terms(group, [(g, S::one())]).expect("basis element in range")
    }

    pub fn from_terms(
        group: Arc<FiniteGroup>,
        terms: impl IntoIterator<Item = (Element, S)>,
    ) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (g, c) in terms {
            if g >= group.order() {
                return Err(Error::InvalidInput(format!(
                    "element {g} outside a group of order {}",
                    group.order()
                )));
            }
            accumulate(&mut coeffs, g, c);
        }
        Ok(GroupRingElement { group, coeffs })
    }

    pub(crate) fn from_coeffs(group: Arc<FiniteGroup>, coeffs: Coeffs<S>) -> Self {
        debug_assert!(coeffs.values().all(|c| !c.is_zero()));
        GroupRingElement { group, coeffs }
    }

    /// `(1/|K|) * sum_{k in K} k` for a subgroup `K` given by its elements.
    pub fn averaging(group: Arc<FiniteGroup>, subgroup: &[Element]) -> Self {
        let w = S::recip(subgroup.len());
        Self::from_terms(group, subgroup.iter().map(|&k| (k, w.clone())))
            .expect("subgroup elements in range")
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coeff(&self, g: Element) -> S {
        self.coeffs.get(&g).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Element, &S)> {
        self.coeffs.iter().map(|(&g, c)| (g, c))
    }

    pub(crate) fn coeffs(&self) -> &Coeffs<S> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut coeffs = self.coeffs.clone();
        for (&g, c) in &other.coeffs {
            accumulate(&mut coeffs, g, c.clone());
        }
        Ok(GroupRingElement::from_coeffs(self.group.clone(), coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// The convolution product `sum a(g) b(h) [gh]`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut coeffs = BTreeMap::new();
        convolve_into(&self.group, &self.coeffs, &other.coeffs, &mut coeffs);
        Ok(GroupRingElement::from_coeffs(self.group.clone(), coeffs))
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn scale(&self, c: &S) -> Self {
        let coeffs = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.coeffs
                .iter()
                .map(|(&g, x)| (g, x.clone() * c.clone()))
                .filter(|(_, x)| !x.is_zero())
                .collect()
        };
        GroupRingElement::from_coeffs(self.group.clone(), coeffs)
    }

    /// Sum of the coefficients.
    pub fn augmentation(&self) -> S {
        self.coeffs.values().cloned().fold(S::zero(), |a, b| a + b)
    }

    /// `sum a(g) [g] -> sum a(g) [g^-1]`.
    pub fn involution(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&g, c)| (self.group.inv(g), c.clone()))
            .collect();
        GroupRingElement::from_coeffs(self.group.clone(), coeffs)
    }
}

impl<S: Scalar> PartialEq for GroupRingElement<S> {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group)
            && self.coeffs.len() == other.coeffs.len()
            && self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .all(|((g, a), (h, b))| g == h && a.same(b))
    }
}
