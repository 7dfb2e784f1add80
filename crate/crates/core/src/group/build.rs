//! Validated construction from tables and from permutation generators.

use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{Element, FiniteGroup};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_ORDER: usize = 2000;
/// Tables up to this order are checked on every triple.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 512;
pub const MAX_ORDER_ENV: &str = "EULER_TRACE_MAX_ORDER";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    pub max_order: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

impl BuildOptions {
    /// Defaults, with the order cap taken from `EULER_TRACE_MAX_ORDER` if set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_ORDER_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(|max_order| BuildOptions { max_order })
                .map_err(|_| Error::InvalidInput(format!("{MAX_ORDER_ENV}={v} is not a count"))),
            Err(_) => Ok(Self::default()),
        }
    }
}

impl FiniteGroup {
    /// Validates a Cayley table: square, identity at `0`, Latin, associative.
    pub fn from_table(
        table: &[Vec<Element>],
        labels: Option<Vec<String>>,
        opts: &BuildOptions,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if n > opts.max_order {
            return Err(Error::TooLarge {
                order: n,
                cap: opts.max_order,
            });
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::InvalidInput(format!(
                    "{} labels for {n} elements",
                    l.len()
                )));
            }
        }
        let mut mult = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInput(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidInput(format!("row {i} names element {bad}")));
            }
            mult.extend_from_slice(row);
        }
        let at = |a: usize, b: usize| mult[a * n + b];

        for x in 0..n {
            if at(0, x) != x || at(x, 0) != x {
                return Err(Error::NotAGroup(format!("element 0 is not an identity at {x}")));
            }
        }
        let mut seen = vec![usize::MAX; n];
        for i in 0..n {
            for j in 0..n {
                let v = at(i, j);
                if seen[v] == i {
                    return Err(Error::NotAGroup(format!("row {i} repeats {v}")));
                }
                seen[v] = i;
            }
        }
        let mut seen = vec![usize::MAX; n];
        for j in 0..n {
            for i in 0..n {
                let v = at(i, j);
                if seen[v] == j {
                    return Err(Error::NotAGroup(format!("column {j} repeats {v}")));
                }
                seen[v] = j;
            }
        }
        let mut inv = vec![0; n];
        for (x, slot) in inv.iter_mut().enumerate() {
            // Latin rows give exactly one right inverse
            let y = (0..n).find(|&y| at(x, y) == 0).expect("Latin row");
            if at(y, x) != 0 {
                return Err(Error::NotAGroup(format!("{x} has no two-sided inverse")));
            }
            *slot = y;
        }

        let fully_verified = n <= FULL_ASSOCIATIVITY_LIMIT;
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if at(at(a, b), c) != at(a, at(b, c)) {
                return Err(Error::NotAGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
            }
            Ok(())
        };
        if fully_verified {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(n as u64);
            for _ in 0..64 * n {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(FiniteGroup::assemble(n, mult, inv, labels, None, fully_verified))
    }

    /// Closes permutation generators (one-line image notation on `degree`
    /// points) and tabulates the result. Products compose right to left:
    /// `(x * y)(i) = x(y(i))`.
    ///
    /// `generator_labels`, when given, name the generators; other elements are
    /// labelled in cycle notation.
    pub fn from_permutations(
        degree: usize,
        generators: &[Vec<u32>],
        generator_labels: Option<&[String]>,
        opts: &BuildOptions,
    ) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return Err(Error::InvalidInput(format!(
                    "generator {i} has length {}, expected degree {degree}",
                    g.len()
                )));
            }
            let mut hit = vec![false; degree];
            for &p in g {
                if p as usize >= degree || std::mem::replace(&mut hit[p as usize], true) {
                    return Err(Error::InvalidInput(format!("generator {i} is not a permutation")));
                }
            }
        }
        if let Some(l) = generator_labels {
            if l.len() != generators.len() {
                return Err(Error::InvalidInput("one label per generator expected".into()));
            }
        }
        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut perms = vec![identity.clone()];
        let mut index: HashMap<Vec<u32>, Element> = HashMap::from([(identity, 0)]);
        let mut next = 0;
        while next < perms.len() {
            for g in generators {
                let p = compose(&perms[next], g);
                if !index.contains_key(&p) {
                    if perms.len() == opts.max_order {
                        return Err(Error::TooLarge {
                            order: perms.len() + 1,
                            cap: opts.max_order,
                        });
                    }
                    index.insert(p.clone(), perms.len());
                    perms.push(p);
                }
            }
            next += 1;
        }
        let n = perms.len();
        let mut mult = Vec::with_capacity(n * n);
        for x in &perms {
            for y in &perms {
                mult.push(index[&compose(x, y)]);
            }
        }
        let inv = perms.iter().map(|p| index[&invert(p)]).collect();
        let mut labels: Vec<String> = perms.iter().map(|p| cycle_notation(p)).collect();
        if let Some(names) = generator_labels {
            for (g, name) in generators.iter().zip(names) {
                if g.iter().enumerate().any(|(i, &p)| p as usize != i) {
                    labels[index[g]] = name.clone();
                }
            }
        }
        Ok(FiniteGroup::assemble(n, mult, inv, Some(labels), Some(perms), true))
    }
}

fn compose(x: &[u32], y: &[u32]) -> Vec<u32> {
    y.iter().map(|&i| x[i as usize]).collect()
}

fn invert(p: &[u32]) -> Vec<u32> {
    let mut out = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        out[v as usize] = i as u32;
    }
    out
}

pub(crate) fn cycle_notation(p: &[u32]) -> String {
    let mut done = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if done[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !done[i] {
            done[i] = true;
            cycle.push(i.to_string());
            i = p[i] as usize;
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}
