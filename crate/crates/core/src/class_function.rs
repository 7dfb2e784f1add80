use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A scalar per conjugacy class (of a group, or of fusion classes of a graph
/// of groups). Indexing follows the producer's class order.
#[derive(Debug, Clone)]
pub struct ClassFunction<S> {
    values: Vec<S>,
}

impl<S: Scalar> ClassFunction<S> {
    pub fn new(values: Vec<S>) -> Self {
        ClassFunction { values }
    }

    pub fn zeros(classes: usize) -> Self {
        ClassFunction {
            values: vec![S::zero(); classes],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, class: usize) -> &S {
        &self.values[class]
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn into_values(self) -> Vec<S> {
        self.values
    }

    pub(crate) fn add_at(&mut self, class: usize, v: &S) {
        self.values[class] = self.values[class].clone() + v.clone();
    }

    pub fn sum(&self) -> S {
        self.values.iter().cloned().fold(S::zero(), |a, b| a + b)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch(format!(
                "class functions on {} and {} classes",
                self.len(),
                other.len()
            )));
        }
        Ok(ClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    /// Value-by-value comparison with [`Scalar::same`].
    pub fn same(&self, other: &Self) -> bool {
        self.len() == other.len() && self.values.iter().zip(&other.values).all(|(a, b)| a.same(b))
    }
}

impl<S: Scalar> PartialEq for ClassFunction<S> {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

/// The Hattori-Stallings trace of an idempotent is a class function.
pub type HsTrace<S> = ClassFunction<S>;
