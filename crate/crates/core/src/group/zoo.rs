//! Small groups used throughout the tests and the self-test.

use super::{BuildOptions, FiniteGroup};

fn perm_group(degree: usize, gens: &[Vec<u32>]) -> FiniteGroup {
    FiniteGroup::from_permutations(degree, gens, None, &BuildOptions::default())
        .expect("zoo group")
}

/// `Z/n` with labels `e, a, a^2, ...`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let labels = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a^{k}"),
        })
        .collect();
    FiniteGroup::from_table(&table, Some(labels), &BuildOptions::default()).expect("cyclic table")
}

/// Symmetries of the regular `m`-gon, order `2m`, as permutations of its vertices.
pub fn dihedral(m: usize) -> FiniteGroup {
    assert!(m >= 3);
    let rotation = (0..m as u32).map(|i| (i + 1) % m as u32).collect();
    let flip = (0..m as u32).map(|i| (m as u32 - i) % m as u32).collect();
    perm_group(m, &[rotation, flip])
}

pub fn symmetric(n: usize) -> FiniteGroup {
    if n <= 1 {
        return FiniteGroup::trivial();
    }
    let mut swap: Vec<u32> = (0..n as u32).collect();
    swap.swap(0, 1);
    let cycle = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    perm_group(n, &[swap, cycle])
}

pub fn alternating(n: usize) -> FiniteGroup {
    if n <= 2 {
        return FiniteGroup::trivial();
    }
    let gens: Vec<Vec<u32>> = (2..n)
        .map(|k| {
            let mut p: Vec<u32> = (0..n as u32).collect();
            // the 3-cycle (0 1 k)
            p[0] = 1;
            p[1] = k as u32;
            p[k] = 0;
            p
        })
        .collect();
    perm_group(n, &gens)
}

/// The quaternion group; elements `1, -1, i, -i, j, -j, k, -k` in that order.
pub fn quaternion() -> FiniteGroup {
    // unit index 0..4 = 1, i, j, k; unit_mul gives (sign flip, unit)
    fn unit_mul(a: usize, b: usize) -> (bool, usize) {
        match (a, b) {
            (0, x) | (x, 0) => (false, x),
            (x, y) if x == y => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    }
    let table: Vec<Vec<usize>> = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (flip, u) = unit_mul(x / 2, y / 2);
                    let negative = (x % 2 == 1) ^ (y % 2 == 1) ^ flip;
                    2 * u + negative as usize
                })
                .collect()
        })
        .collect();
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteGroup::from_table(&table, Some(labels), &BuildOptions::default()).expect("Q8 table")
}

/// The groups every property sweep runs over: `Z/12, S3, D4, Q8, A4, S4`.
pub fn standard() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("Z/12", cyclic(12)),
        ("S3", symmetric(3)),
        ("D4", dihedral(4)),
        ("Q8", quaternion()),
        ("A4", alternating(4)),
        ("S4", symmetric(4)),
    ]
}

/// Looks up `Z/n`, `Dn`, `Sn`, `An`, `Q8` or `1`.
pub fn by_name(name: &str) -> Option<FiniteGroup> {
    let name = name.trim();
    let num = |rest: &str| rest.parse::<usize>().ok();
    match name {
        "1" => Some(FiniteGroup::trivial()),
        "Q8" => Some(quaternion()),
        _ => {
            if let Some(n) = name.strip_prefix("Z/").and_then(num) {
                (n >= 1).then(|| cyclic(n))
            } else if let Some(m) = name.strip_prefix('D').and_then(num) {
                (m >= 3).then(|| dihedral(m))
            } else if let Some(n) = name.strip_prefix('S').and_then(num) {
                (1..=7).contains(&n).then(|| symmetric(n))
            } else if let Some(n) = name.strip_prefix('A').and_then(num) {
                (1..=7).contains(&n).then(|| alternating(n))
            } else {
                None
            }
        }
    }
}

/// Every zoo group of order at most `max_order`, for random graph sampling.
pub fn small(max_order: usize) -> Vec<FiniteGroup> {
    let mut out = vec![FiniteGroup::trivial()];
    out.extend((2..=max_order.min(12)).map(cyclic));
    out.extend((3..=max_order / 2).map(dihedral));
    for g in [quaternion(), symmetric(3), alternating(4), symmetric(4)] {
        if g.order() <= max_order {
            out.push(g);
        }
    }
    out.sort_by_key(FiniteGroup::order);
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(4).order(), 12);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(quaternion().order(), 8);
        assert_eq!(dihedral(4).num_classes(), 5);
        assert_eq!(alternating(4).num_classes(), 4);
        assert_eq!(symmetric(4).num_classes(), 5);
    }

    #[test]
    fn small_respects_bound() {
        assert!(small(24).iter().all(|g| g.order() <= 24));
        assert!(small(24).len() > 15);
    }
}
