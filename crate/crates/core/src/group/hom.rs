use super::{Element, FiniteGroup};
use crate::error::{Error, Result};

/// A verified homomorphism between two finite groups, stored as its table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    map: Vec<Element>,
    target_order: usize,
    injective: bool,
}

impl GroupHom {
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, map: Vec<Element>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::NotHomomorphism(format!(
                "map has {} entries for a source of order {}",
                map.len(),
                source.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.order()) {
            return Err(Error::NotHomomorphism(format!("image {bad} outside the target")));
        }
        if map[0] != 0 {
            return Err(Error::NotHomomorphism("identity not preserved".into()));
        }
        for x in source.elements() {
            for y in source.elements() {
                if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                    return Err(Error::NotHomomorphism(format!(
                        "f({}*{}) != f({})*f({})",
                        source.label(x),
                        source.label(y),
                        source.label(x),
                        source.label(y)
                    )));
                }
            }
        }
        let mut hit = vec![false; target.order()];
        let injective = map.iter().all(|&y| !std::mem::replace(&mut hit[y], true));
        Ok(GroupHom {
            map,
            target_order: target.order(),
            injective,
        })
    }

    /// Inclusion of a subgroup given by its (sorted) parent elements.
    pub fn inclusion(sub: &super::Subgroup, parent: &FiniteGroup) -> Self {
        debug_assert!(sub.elements().iter().all(|&x| x < parent.order()));
        GroupHom {
            map: sub.elements().to_vec(),
            target_order: parent.order(),
            injective: true,
        }
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.map[x]
    }

    pub fn map(&self) -> &[Element] {
        &self.map
    }

    pub fn is_injective(&self) -> bool {
        self.injective
    }

    pub fn source_order(&self) -> usize {
        self.map.len()
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }
}

#[cfg(test)]
mod tests {
    use super::super::zoo;
    use super::*;

    #[test]
    fn doubling_into_z4() {
        let z2 = zoo::cyclic(2);
        let z4 = zoo::cyclic(4);
        let h = GroupHom::new(&z2, &z4, vec![0, 2]).unwrap();
        assert!(h.is_injective());
        assert_eq!(h.apply(1), 2);
        let trivial = GroupHom::new(&z2, &z4, vec![0, 0]).unwrap();
        assert!(!trivial.is_injective());
    }

    #[test]
    fn rejects_non_homomorphisms() {
        let z2 = zoo::cyclic(2);
        let z4 = zoo::cyclic(4);
        assert!(matches!(
            GroupHom::new(&z2, &z4, vec![0, 1]),
            Err(Error::NotHomomorphism(_))
        ));
        assert!(GroupHom::new(&z2, &z4, vec![1, 0]).is_err());
        assert!(GroupHom::new(&z2, &z4, vec![0]).is_err());
    }
}
