//! Finite groups as multiplication tables.
//!
//! Elements are dense indices `0..order` with `0` the identity. Conjugacy
//! classes and inverses are computed once at construction; a [`FiniteGroup`]
//! is immutable afterwards.

mod build;
mod hom;
pub mod zoo;

use std::fmt;

use crate::error::{Error, Result};

pub use build::{BuildOptions, DEFAULT_MAX_ORDER, FULL_ASSOCIATIVITY_LIMIT, MAX_ORDER_ENV};
pub use hom::GroupHom;

/// Index of a group element; `0` is always the identity.
pub type Element = usize;

/// One conjugacy class, identified by its least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: Element,
    pub members: Vec<Element>,
}

impl ConjugacyClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    mult: Vec<Element>,
    inv: Vec<Element>,
    labels: Option<Vec<String>>,
    perms: Option<Vec<Vec<u32>>>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    fully_verified: bool,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("classes", &self.classes.len())
            .finish()
    }
}

/// Two groups are equal when their tables agree; labels are cosmetic.
impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mult == other.mult
    }
}

impl Eq for FiniteGroup {}

/// Outcome of the power-conjugacy search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerConjugacy {
    pub holds: bool,
    pub witness_n: Option<u32>,
    /// The primes `p <= prime_bound` with `p` not dividing the order.
    pub primes: Vec<u64>,
}

impl FiniteGroup {
    /// Assembles a group from an already validated table.
    fn assemble(
        order: usize,
        mult: Vec<Element>,
        inv: Vec<Element>,
        labels: Option<Vec<String>>,
        perms: Option<Vec<Vec<u32>>>,
        fully_verified: bool,
    ) -> Self {
        let mut group = FiniteGroup {
            order,
            mult,
            inv,
            labels,
            perms,
            classes: Vec::new(),
            class_of: vec![usize::MAX; order],
            fully_verified,
        };
        group.compute_classes();
        group
    }

    fn compute_classes(&mut self) {
        let n = self.order;
        for x in 0..n {
            if self.class_of[x] != usize::MAX {
                continue;
            }
            let id = self.classes.len();
            let mut members: Vec<Element> = (0..n).map(|g| self.conjugate(g, x)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                self.class_of[m] = id;
            }
            assert_eq!(n % members.len(), 0, "class size must divide the order");
            self.classes.push(ConjugacyClass {
                representative: members[0],
                members,
            });
        }
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        Self::assemble(1, vec![0], vec![0], None, None, true)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        0
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.mult[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inv[a]
    }

    /// `g x g^{-1}`.
    #[inline]
    pub fn conjugate(&self, g: Element, x: Element) -> Element {
        self.mul(self.mul(g, x), self.inv[g])
    }

    pub fn pow(&self, x: Element, mut k: u64) -> Element {
        let mut base = x;
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: Element) -> u64 {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Whether the table was checked for associativity on every triple.
    pub fn fully_verified(&self) -> bool {
        self.fully_verified
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order
    }

    pub fn table(&self) -> Vec<Vec<Element>> {
        self.mult.chunks(self.order).map(<[Element]>::to_vec).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: Element) -> String {
        match &self.labels {
            Some(labels) => labels[x].clone(),
            None if x == 0 => "e".to_string(),
            None => format!("g{x}"),
        }
    }

    /// The permutation an element stands for, when built from generators.
    pub fn permutation(&self, x: Element) -> Option<&[u32]> {
        self.perms.as_ref().map(|p| p[x].as_slice())
    }

    pub fn element_of_permutation(&self, perm: &[u32]) -> Option<Element> {
        self.perms.as_ref()?.iter().position(|p| p == perm)
    }

    /// Classes sorted by least member; the identity class is first.
    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, x: Element) -> usize {
        self.class_of[x]
    }

    pub fn is_conjugate(&self, x: Element, y: Element) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn centralizer(&self, s: Element) -> Vec<Element> {
        self.elements()
            .filter(|&g| self.mul(g, s) == self.mul(s, g))
            .collect()
    }

    /// `|C_G(s)|` by direct count.
    pub fn centralizer_order(&self, s: Element) -> usize {
        let count = self
            .elements()
            .filter(|&g| self.mul(g, s) == self.mul(s, g))
            .count();
        assert_eq!(
            count * self.classes[self.class_of[s]].len(),
            self.order,
            "orbit-stabilizer violated"
        );
        count
    }

    /// Least `N` such that `s^(p^N)` is conjugate to `s` for every prime
    /// `p <= prime_bound` not dividing the order.
    pub fn power_conjugacy_check(&self, s: Element, prime_bound: u64) -> PowerConjugacy {
        assert!(prime_bound >= 2, "prime_bound must be at least 2");
        let primes: Vec<u64> = primes_up_to(prime_bound)
            .into_iter()
            .filter(|p| !(self.order as u64).is_multiple_of(*p))
            .collect();
        let ord = self.element_order(s);
        let target = self.class_of[s];
        let witness = (1..=self.order as u32).find(|&n| {
            primes.iter().all(|&p| {
                let e = mod_pow(p, n as u64, ord);
                self.class_of[self.pow(s, e)] == target
            })
        });
        PowerConjugacy {
            holds: witness.is_some(),
            witness_n: witness,
            primes,
        }
    }

    /// Closure of `gens` under multiplication, sorted.
    pub fn generated(&self, gens: &[Element]) -> Vec<Element> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    frontier.push(y);
                }
            }
        }
        (0..self.order).filter(|&x| seen[x]).collect()
    }

    /// The subgroup on `elements`, verified closed.
    pub fn subgroup(&self, elements: &[Element]) -> Result<Subgroup> {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if let Some(&bad) = elems.iter().find(|&&x| x >= self.order) {
            return Err(Error::NotASubgroup(format!("element {bad} out of range")));
        }
        if elems.first() != Some(&0) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        let n = elems.len();
        let mut local_of = vec![None; self.order];
        for (i, &x) in elems.iter().enumerate() {
            local_of[x] = Some(i);
        }
        let mut mult = Vec::with_capacity(n * n);
        for &a in &elems {
            for &b in &elems {
                match local_of[self.mul(a, b)] {
                    Some(c) => mult.push(c),
                    None => {
                        return Err(Error::NotASubgroup(format!(
                            "{} * {} leaves the subset",
                            self.label(a),
                            self.label(b)
                        )))
                    }
                }
            }
        }
        // closed and finite, so inverses are inside
        let inv = elems
            .iter()
            .map(|&x| local_of[self.inv[x]].expect("finite closed subset"))
            .collect();
        let labels = Some(elems.iter().map(|&x| self.label(x)).collect());
        let perms = self
            .perms
            .as_ref()
            .map(|p| elems.iter().map(|&x| p[x].clone()).collect());
        let group = FiniteGroup::assemble(n, mult, inv, labels, perms, true);
        Ok(Subgroup {
            group,
            elements: elems,
            local_of,
        })
    }

    /// `self x other`; the pair `(a, b)` is element `a * |other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order, other.order);
        let order = n * m;
        let mut mult = Vec::with_capacity(order * order);
        for x in 0..order {
            let (a1, b1) = (x / m, x % m);
            for y in 0..order {
                let (a2, b2) = (y / m, y % m);
                mult.push(self.mul(a1, a2) * m + other.mul(b1, b2));
            }
        }
        let inv = (0..order)
            .map(|x| self.inv(x / m) * m + other.inv(x % m))
            .collect();
        let labels = (self.labels.is_some() || other.labels.is_some()).then(|| {
            (0..order)
                .map(|x| format!("({},{})", self.label(x / m), other.label(x % m)))
                .collect()
        });
        FiniteGroup::assemble(order, mult, inv, labels, None, true)
    }

    /// The pair `(a, b)` as an element of [`FiniteGroup::direct_product`].
    pub fn pair_index(other_order: usize, a: Element, b: Element) -> Element {
        a * other_order + b
    }

    /// The same group with element `x` renamed to `perm[x]`.
    ///
    /// `perm` must be a bijection fixing `0`.
    pub fn relabel(&self, perm: &[Element]) -> Result<FiniteGroup> {
        let n = self.order;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.first() != Some(&0) {
            return Err(Error::InvalidInput("relabeling must fix the identity".into()));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidInput("relabeling is not a bijection".into()));
            }
        }
        let mut mult = vec![0; n * n];
        let mut inv = vec![0; n];
        for x in 0..n {
            inv[perm[x]] = perm[self.inv[x]];
            for y in 0..n {
                mult[perm[x] * n + perm[y]] = perm[self.mul(x, y)];
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for x in 0..n {
                out[perm[x]] = l[x].clone();
            }
            out
        });
        Ok(FiniteGroup::assemble(n, mult, inv, labels, None, true))
    }

    /// Element lookup by label.
    pub fn element_by_label(&self, label: &str) -> Option<Element> {
        self.elements().find(|&x| self.label(x) == label)
    }
}

/// A subgroup together with its own table and the index translation.
#[derive(Debug, Clone)]
pub struct Subgroup {
    group: FiniteGroup,
    elements: Vec<Element>,
    local_of: Vec<Option<usize>>,
}

impl Subgroup {
    /// The subgroup as a group in its own right; local element `i` is
    /// `elements()[i]` of the parent.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn to_parent(&self, local: Element) -> Element {
        self.elements[local]
    }

    pub fn to_local(&self, parent: Element) -> Option<Element> {
        self.local_of.get(parent).copied().flatten()
    }

    pub fn contains(&self, parent: Element) -> bool {
        self.to_local(parent).is_some()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

pub(crate) fn primes_up_to(bound: u64) -> Vec<u64> {
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if sieve[p] {
            primes.push(p as u64);
            let mut q = p * p;
            while q <= n {
                sieve[q] = false;
                q += p;
            }
        }
    }
    primes
}

/// `base^exp mod modulus`.
fn mod_pow(base: u64, exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut result: u128 = 1;
    let mut b = base as u128 % m;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    result as u64
}

#[cfg(test)]
mod tests {
    use super::zoo;
    use super::*;

    /// Orbit enumeration independent of the stored class table.
    fn brute_class_sizes(g: &FiniteGroup) -> Vec<usize> {
        let mut done = vec![false; g.order()];
        let mut sizes = Vec::new();
        for x in g.elements() {
            if done[x] {
                continue;
            }
            let mut orbit = Vec::new();
            for h in g.elements() {
                let y = g.mul(g.mul(h, x), g.inv(h));
                if !orbit.contains(&y) {
                    orbit.push(y);
                }
            }
            for &y in &orbit {
                done[y] = true;
            }
            sizes.push(orbit.len());
        }
        sizes
    }

    fn sizes(g: &FiniteGroup) -> Vec<usize> {
        g.classes().iter().map(ConjugacyClass::len).collect()
    }

    #[test]
    fn s3_classes() {
        let s3 = zoo::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert_eq!(brute_class_sizes(&s3), vec![1, 3, 2]);
        assert_eq!(sizes(&s3), vec![1, 3, 2]);
        assert_eq!(s3.classes()[0].members, vec![0]);
    }

    #[test]
    fn q8_classes() {
        let q8 = zoo::quaternion();
        let mut s = sizes(&q8);
        assert_eq!(brute_class_sizes(&q8), s);
        s.sort_unstable();
        assert_eq!(s, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn abelian_classes_are_singletons() {
        for n in [1, 2, 5, 12] {
            let g = zoo::cyclic(n);
            assert_eq!(g.num_classes(), n);
            assert!(g.is_abelian());
        }
    }

    #[test]
    fn classes_sorted_by_least_member() {
        let s4 = zoo::symmetric(4);
        let reps: Vec<_> = s4.classes().iter().map(|c| c.representative).collect();
        let mut sorted = reps.clone();
        sorted.sort_unstable();
        assert_eq!(reps, sorted);
        assert_eq!(reps[0], 0);
    }

    #[test]
    fn centralizer_orders() {
        let s3 = zoo::symmetric(3);
        let t = s3.element_of_permutation(&[1, 0, 2]).unwrap();
        assert_eq!(s3.centralizer_order(t), 2);
        assert_eq!(s3.centralizer_order(0), 6);
        let q8 = zoo::quaternion();
        let i = q8.element_by_label("i").unwrap();
        assert_eq!(q8.element_order(i), 4);
        assert_eq!(q8.centralizer_order(i), 4);
    }

    #[test]
    fn power_conjugacy_examples() {
        let z5 = zoo::cyclic(5);
        let r = z5.power_conjugacy_check(1, 100);
        assert!(r.holds);
        assert_eq!(r.witness_n, Some(4));
        assert!(!r.primes.contains(&5));

        let s3 = zoo::symmetric(3);
        let t = s3.element_of_permutation(&[1, 0, 2]).unwrap();
        assert_eq!(s3.power_conjugacy_check(t, 100).witness_n, Some(1));
        assert_eq!(s3.power_conjugacy_check(0, 7).witness_n, Some(1));
    }

    #[test]
    fn power_conjugacy_always_holds() {
        for g in zoo::standard() {
            for s in g.1.elements() {
                assert!(g.1.power_conjugacy_check(s, 60).holds, "{} fails at {s}", g.0);
            }
        }
    }

    #[test]
    fn mod_pow_small() {
        assert_eq!(mod_pow(3, 4, 5), 1);
        assert_eq!(mod_pow(7, 0, 1), 0);
        assert_eq!(mod_pow(2, 10, 1000), 24);
    }

    #[test]
    fn subgroup_checks() {
        let z4 = zoo::cyclic(4);
        let h = z4.subgroup(&[0, 2]).unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(h.to_local(2), Some(1));
        assert!(matches!(z4.subgroup(&[0, 1]), Err(Error::NotASubgroup(_))));
        assert!(matches!(z4.subgroup(&[2]), Err(Error::NotASubgroup(_))));
        assert_eq!(z4.generated(&[1]).len(), 4);
    }

    #[test]
    fn direct_product_classes_multiply() {
        let s3 = zoo::symmetric(3);
        let z4 = zoo::cyclic(4);
        let p = s3.direct_product(&z4);
        assert_eq!(p.order(), 24);
        assert_eq!(p.num_classes(), 3 * 4);
    }
}
