//! Hattori-Stallings trace and the identities it satisfies.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::element::{accumulate, GroupRingElement};
use super::matrix::GroupRingMatrix;
use crate::class_function::{ClassFunction, HsTrace};
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup, Subgroup};
use crate::scalar::Scalar;

/// `[s] -> sum_i sum_{t in [s]} m_ii(t)` without checking idempotency.
pub fn hs_trace_raw<S: Scalar>(m: &GroupRingMatrix<S>) -> ClassFunction<S> {
    let group = m.group();
    let mut out = ClassFunction::zeros(group.num_classes());
    for i in 0..m.size() {
        for (&t, c) in m.raw(i, i) {
            out.add_at(group.class_of(t), c);
        }
    }
    out
}

/// Ordinary trace of the augmented matrix, without checking idempotency.
fn augmentation_trace_raw<S: Scalar>(m: &GroupRingMatrix<S>) -> S {
    (0..m.size())
        .flat_map(|i| m.raw(i, i).values())
        .cloned()
        .fold(S::zero(), |a, b| a + b)
}

/// The Hattori-Stallings trace of the projective module `(QG)^n * M`.
pub fn hs_trace<S: Scalar>(m: &GroupRingMatrix<S>) -> Result<HsTrace<S>> {
    if !m.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let hs = hs_trace_raw(m);
    assert!(
        hs.sum().same(&augmentation_trace_raw(m)),
        "class sum of the trace differs from the augmentation rank"
    );
    Ok(hs)
}

/// Value of the trace at the identity class.
pub fn kaplansky_trace<S: Scalar>(m: &GroupRingMatrix<S>) -> Result<S> {
    Ok(hs_trace(m)?.get(0).clone())
}

/// `dim C (x)_{CG} P`: the trace of `M` with every entry replaced by its
/// augmentation.
pub fn augmentation_dim<S: Scalar>(m: &GroupRingMatrix<S>) -> Result<S> {
    if !m.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    Ok(augmentation_trace_raw(m))
}

/// A matrix over `QG` rewritten over `QH` for a subgroup `H`.
#[derive(Debug, Clone)]
pub struct Restriction<S> {
    pub matrix: GroupRingMatrix<S>,
    pub subgroup: Subgroup,
    /// Least element of each right coset `Hg`, in increasing order.
    pub coset_reps: Vec<Element>,
}

impl<S: Scalar> Restriction<S> {
    /// `[C_G(s) : C_H(s)]` for a subgroup element given in local indices.
    pub fn centralizer_index(&self, parent: &FiniteGroup, local: Element) -> usize {
        let s = self.subgroup.to_parent(local);
        parent.centralizer_order(s) / self.subgroup.group().centralizer_order(local)
    }
}

/// Restricts scalars from `QG` to `QH`, viewing `QG` as the free left
/// `QH`-module on the right coset representatives. An `n x n` matrix becomes
/// `nk x nk` with `k = [G:H]`; entry `x` contributes, in block `(i, j)`, the
/// terms `x(g) [r_i g r_j^-1]` with `r_i g` in `H r_j`.
pub fn restrict_matrix<S: Scalar>(
    m: &GroupRingMatrix<S>,
    subgroup_elements: &[Element],
) -> Result<Restriction<S>> {
    let group = m.group();
    let sub = group.subgroup(subgroup_elements)?;
    let h_group = Arc::new(sub.group().clone());

    let mut coset_of = vec![usize::MAX; group.order()];
    let mut coset_reps = Vec::new();
    for g in group.elements() {
        if coset_of[g] != usize::MAX {
            continue;
        }
        // g is the least element of its coset since we scan in order
        let id = coset_reps.len();
        coset_reps.push(g);
        for &h in sub.elements() {
            coset_of[group.mul(h, g)] = id;
        }
    }
    let k = coset_reps.len();
    let n = m.size();
    let size = n * k;
    let mut entries = vec![BTreeMap::new(); size * size];
    for a in 0..n {
        for b in 0..n {
            let x = m.raw(a, b);
            for (i, &r) in coset_reps.iter().enumerate() {
                for (&g, c) in x {
                    let y = group.mul(r, g);
                    let j = coset_of[y];
                    let h = group.mul(y, group.inv(coset_reps[j]));
                    let local = sub.to_local(h).expect("coset decomposition");
                    accumulate(&mut entries[(a * k + i) * size + b * k + j], local, c.clone());
                }
            }
        }
    }
    let restriction = Restriction {
        matrix: GroupRingMatrix::from_raw(h_group, size, entries),
        subgroup: sub,
        coset_reps,
    };

    // The trace identity is linear in M, so it holds for the raw formula.
    let hs_g = hs_trace_raw(m);
    let hs_h = hs_trace_raw(&restriction.matrix);
    for (c, class) in restriction.subgroup.group().classes().iter().enumerate() {
        let index = restriction.centralizer_index(group, class.representative);
        let parent_class = group.class_of(restriction.subgroup.to_parent(class.representative));
        let expected = S::from_i64(index as i64) * hs_g.get(parent_class).clone();
        assert!(hs_h.get(c).same(&expected), "restriction trace identity failed");
    }
    Ok(restriction)
}

/// `M (x) N` over `A x B`, together with the product group.
#[derive(Debug, Clone)]
pub struct TensorProduct<S> {
    pub matrix: GroupRingMatrix<S>,
    pub group: Arc<FiniteGroup>,
}

/// Kronecker product; row `(i, k)` is `i * size(N) + k` and the coefficient
/// of `(a, b)` is `m_ij(a) * n_kl(b)`.
pub fn tensor_matrix<S: Scalar>(
    m: &GroupRingMatrix<S>,
    n: &GroupRingMatrix<S>,
) -> TensorProduct<S> {
    let group = Arc::new(m.group().direct_product(n.group()));
    let b_order = n.group().order();
    let (p, q) = (m.size(), n.size());
    let size = p * q;
    let mut entries = vec![BTreeMap::new(); size * size];
    for i in 0..p {
        for j in 0..p {
            let x = m.raw(i, j);
            if x.is_empty() {
                continue;
            }
            for k in 0..q {
                for l in 0..q {
                    let out = &mut entries[(i * q + k) * size + j * q + l];
                    for (&a, ca) in x {
                        for (&b, cb) in n.raw(k, l) {
                            let ab = FiniteGroup::pair_index(b_order, a, b);
                            accumulate(out, ab, ca.clone() * cb.clone());
                        }
                    }
                }
            }
        }
    }
    TensorProduct {
        matrix: GroupRingMatrix::from_raw(group.clone(), size, entries),
        group,
    }
}

/// Class of `(a, b)` in `A x B`, for class representatives of the factors.
pub fn product_class(product: &FiniteGroup, b_order: usize, a: Element, b: Element) -> usize {
    product.class_of(FiniteGroup::pair_index(b_order, a, b))
}

/// The complete Euler characteristic of a finite group: the trace of the
/// trivial module `QG * e_G`, `e_G = (1/|G|) sum g`.
pub fn wall_element_finite<S: Scalar>(group: &Arc<FiniteGroup>) -> HsTrace<S> {
    let all: Vec<Element> = group.elements().collect();
    let e = GroupRingMatrix::<S>::scalar(GroupRingElement::averaging(group.clone(), &all));
    let hs = hs_trace(&e).expect("e_G is idempotent");
    for (c, class) in group.classes().iter().enumerate() {
        assert!(
            hs.get(c).same(&S::recip(group.centralizer_order(class.representative))),
            "finite-group wall element differs from 1/|C_G(s)|"
        );
    }
    hs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::zoo;
    use crate::Rational;

    type M = GroupRingMatrix<Rational>;
    type E = GroupRingElement<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn e_g(g: &Arc<FiniteGroup>) -> M {
        let all: Vec<_> = g.elements().collect();
        M::scalar(E::averaging(g.clone(), &all))
    }

    /// Class sizes over |G|, computed directly: the trace of e_G at [s] is
    /// |[s]| / |G| because every coefficient of e_G is 1/|G|.
    fn class_sizes_over_order(g: &FiniteGroup) -> Vec<Rational> {
        g.classes()
            .iter()
            .map(|c| q(c.len() as i64, g.order() as i64))
            .collect()
    }

    #[test]
    fn e_s3_trace() {
        let s3 = Arc::new(zoo::symmetric(3));
        let hs = hs_trace(&e_g(&s3)).unwrap();
        assert_eq!(hs.values(), &[q(1, 6), q(1, 2), q(1, 3)]);
        assert_eq!(hs.values(), class_sizes_over_order(&s3).as_slice());
        assert_eq!(kaplansky_trace(&e_g(&s3)).unwrap(), q(1, 6));
        assert_eq!(augmentation_dim(&e_g(&s3)).unwrap(), q(1, 1));
    }

    #[test]
    fn identity_trace() {
        let s3 = Arc::new(zoo::symmetric(3));
        let hs = hs_trace(&M::identity(s3.clone(), 3)).unwrap();
        assert_eq!(hs.values(), &[q(3, 1), q(0, 1), q(0, 1)]);
        assert_eq!(kaplansky_trace(&M::identity(s3.clone(), 3)).unwrap(), q(3, 1));
        assert_eq!(augmentation_dim(&M::identity(s3, 4)).unwrap(), q(4, 1));
    }

    #[test]
    fn kaplansky_of_cyclic_average() {
        for l in 1..8 {
            let g = Arc::new(zoo::cyclic(l));
            assert_eq!(kaplansky_trace(&e_g(&g)).unwrap(), q(1, l as i64));
        }
    }

    #[test]
    fn block_diagonal_adds() {
        let s3 = Arc::new(zoo::symmetric(3));
        let m = e_g(&s3);
        let i1 = M::identity(s3.clone(), 1);
        let b = M::block_diag(&[&m, &i1]).unwrap();
        let expected = hs_trace(&m).unwrap().add(&hs_trace(&i1).unwrap()).unwrap();
        assert_eq!(hs_trace(&b).unwrap(), expected);
        assert_eq!(augmentation_dim(&b).unwrap(), q(2, 1));
    }

    #[test]
    fn non_idempotent_refused() {
        let z2 = Arc::new(zoo::cyclic(2));
        let x = E::one(z2.clone()).add(&E::basis(z2, 1)).unwrap();
        let m = M::scalar(x);
        assert_eq!(hs_trace(&m), Err(Error::NotIdempotent));
        assert_eq!(kaplansky_trace(&m), Err(Error::NotIdempotent));
        assert_eq!(augmentation_dim(&m), Err(Error::NotIdempotent));
        assert_eq!(hs_trace_raw(&m).values(), &[q(1, 1), q(1, 1)]);
    }

    #[test]
    fn restriction_to_whole_group_is_identity() {
        let s3 = Arc::new(zoo::symmetric(3));
        let m = e_g(&s3);
        let all: Vec<_> = s3.elements().collect();
        let r = restrict_matrix(&m, &all).unwrap();
        assert_eq!(r.coset_reps, vec![0]);
        assert_eq!(r.matrix.size(), 1);
        assert_eq!(hs_trace(&r.matrix).unwrap(), hs_trace(&m).unwrap());
    }

    #[test]
    fn restriction_z4_to_z2() {
        let z4 = Arc::new(zoo::cyclic(4));
        let m = e_g(&z4);
        assert_eq!(hs_trace(&m).unwrap().get(2), &q(1, 4));
        let r = restrict_matrix(&m, &[0, 2]).unwrap();
        assert_eq!(r.coset_reps, vec![0, 1]);
        assert!(r.matrix.is_idempotent());
        let hs = hs_trace(&r.matrix).unwrap();
        // local element 1 of H is 2 in Z/4
        assert_eq!(hs.get(r.subgroup.group().class_of(1)), &q(1, 2));
    }

    #[test]
    fn restriction_s3_to_rotations() {
        let s3 = Arc::new(zoo::symmetric(3));
        let r3 = s3.element_of_permutation(&[1, 2, 0]).unwrap();
        let h = s3.generated(&[r3]);
        let m = e_g(&s3);
        let res = restrict_matrix(&m, &h).unwrap();
        let local = res.subgroup.to_local(r3).unwrap();
        assert_eq!(res.centralizer_index(&s3, local), 1);
        let hs = hs_trace(&res.matrix).unwrap();
        assert_eq!(hs.get(res.subgroup.group().class_of(local)), &q(1, 3));
    }

    #[test]
    fn restriction_rejects_non_subgroups() {
        let z4 = Arc::new(zoo::cyclic(4));
        assert!(matches!(
            restrict_matrix(&e_g(&z4), &[0, 1]),
            Err(Error::NotASubgroup(_))
        ));
    }

    #[test]
    fn tensor_of_averages() {
        let a = Arc::new(zoo::symmetric(3));
        let b = Arc::new(zoo::cyclic(4));
        let t = tensor_matrix(&e_g(&a), &e_g(&b));
        assert_eq!(t.matrix, e_g(&t.group));
        let hs = hs_trace(&t.matrix).unwrap();
        let transposition = a.element_of_permutation(&[1, 0, 2]).unwrap();
        let c = product_class(&t.group, 4, transposition, 0);
        assert_eq!(hs.get(c), &q(1, 8));
    }

    #[test]
    fn tensor_identities() {
        let a = Arc::new(zoo::symmetric(3));
        let b = Arc::new(zoo::cyclic(4));
        let t = tensor_matrix(&M::identity(a.clone(), 2), &M::identity(b.clone(), 3));
        let hs = hs_trace(&t.matrix).unwrap();
        assert_eq!(hs.get(0), &q(6, 1));
        assert_eq!(hs.sum(), q(6, 1));

        let m = e_g(&a);
        let t = tensor_matrix(&m, &M::identity(b.clone(), 1));
        let hs = hs_trace(&t.matrix).unwrap();
        let hm = hs_trace(&m).unwrap();
        for (c, class) in a.classes().iter().enumerate() {
            assert_eq!(hs.get(product_class(&t.group, 4, class.representative, 0)), hm.get(c));
        }
    }

    #[test]
    fn wall_elements() {
        let s3 = Arc::new(zoo::symmetric(3));
        assert_eq!(
            wall_element_finite::<Rational>(&s3).values(),
            &[q(1, 6), q(1, 2), q(1, 3)]
        );
        let t = Arc::new(FiniteGroup::trivial());
        assert_eq!(wall_element_finite::<Rational>(&t).values(), &[q(1, 1)]);
        let z12 = Arc::new(zoo::cyclic(12));
        assert!(wall_element_finite::<Rational>(&z12)
            .values()
            .iter()
            .all(|v| *v == q(1, 12)));
    }

    #[test]
    fn generic_over_scalars() {
        let s4 = Arc::new(zoo::symmetric(4));
        let small = wall_element_finite::<num_rational::Ratio<i64>>(&s4);
        let float = wall_element_finite::<f64>(&s4);
        let big = wall_element_finite::<Rational>(&s4);
        for c in 0..s4.num_classes() {
            let b = big.get(c);
            assert_eq!(
                small.get(c),
                &num_rational::Ratio::new(
                    b.numer().try_into().unwrap(),
                    b.denom().try_into().unwrap()
                )
            );
            let f: f64 = i64::try_from(b.numer()).unwrap() as f64
                / i64::try_from(b.denom()).unwrap() as f64;
            assert!(float.get(c).same(&f));
        }
    }
}
