//! Independent oracles shared by the integration tests. Nothing here calls
//! into the code under test except for plain data accessors.

#![allow(dead_code)]

use std::collections::BTreeSet;

use liefoliate::Family;
use nalgebra::DMatrix;

/// Root sets straight from the set definitions, coordinates doubled.
pub fn roots(family: Family, r: usize) -> BTreeSet<Vec<i32>> {
    let mut out = BTreeSet::new();
    let unit = |d: usize, i: usize, c: i32| {
        let mut v = vec![0; d];
        v[i] = c;
        v
    };
    let pm_pairs = |d: usize, upto: usize, out: &mut BTreeSet<Vec<i32>>| {
        for i in 0..upto {
            for j in i + 1..upto {
                for si in [-2, 2] {
                    for sj in [-2, 2] {
                        let mut v = vec![0; d];
                        v[i] = si;
                        v[j] = sj;
                        out.insert(v);
                    }
                }
            }
        }
    };
    // all sign vectors (+-1)^8 with an even number of minus signs
    let halves = |keep: &dyn Fn(&[i32]) -> bool, out: &mut BTreeSet<Vec<i32>>| {
        for mask in 0u32..256 {
            if mask.count_ones() % 2 == 1 {
                continue;
            }
            let v: Vec<i32> = (0..8)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect();
            if keep(&v) {
                out.insert(v);
            }
        }
    };
    match family {
        Family::A => {
            for i in 0..=r {
                for j in 0..=r {
                    if i != j {
                        let mut v = vec![0; r + 1];
                        v[i] = 2;
                        v[j] = -2;
                        out.insert(v);
                    }
                }
            }
        }
        Family::B | Family::C | Family::D | Family::BC => {
            pm_pairs(r, r, &mut out);
            for i in 0..r {
                for s in [-1, 1] {
                    if matches!(family, Family::B | Family::BC) {
                        out.insert(unit(r, i, 2 * s));
                    }
                    if matches!(family, Family::C | Family::BC) {
                        out.insert(unit(r, i, 4 * s));
                    }
                }
            }
        }
        Family::E6 => {
            pm_pairs(8, 5, &mut out);
            halves(&|v| v[5] == v[6] && v[6] == -v[7], &mut out);
        }
        Family::E7 => {
            pm_pairs(8, 6, &mut out);
            let mut v = vec![0; 8];
            v[6] = 2;
            v[7] = -2;
            out.insert(v.clone());
            out.insert(v.iter().map(|x| -x).collect());
            halves(&|v| v[6] == -v[7], &mut out);
        }
        Family::E8 => {
            pm_pairs(8, 8, &mut out);
            halves(&|_| true, &mut out);
        }
        Family::F4 => {
            pm_pairs(4, 4, &mut out);
            for i in 0..4 {
                out.insert(unit(4, i, 2));
                out.insert(unit(4, i, -2));
            }
            for mask in 0u32..16 {
                out.insert(
                    (0..4)
                        .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                        .collect(),
                );
            }
        }
        Family::G2 => {
            for i in 0..3 {
                for j in 0..3 {
                    if i == j {
                        continue;
                    }
                    let mut v = vec![0; 3];
                    v[i] = 2;
                    v[j] = -2;
                    out.insert(v);
                    let k = 3 - i - j;
                    let mut w = vec![-2; 3];
                    w[i] = 4;
                    if j < k {
                        out.insert(w.clone());
                        out.insert(w.iter().map(|x| -x).collect());
                    }
                }
            }
        }
    }
    out
}

/// Positive roots of the E series from their explicit lists, doubled.
pub fn e_positive(family: Family) -> BTreeSet<Vec<i32>> {
    let (upto, extra): (usize, &dyn Fn(&mut BTreeSet<Vec<i32>>)) = match family {
        Family::E6 => (5, &|out| {
            // 1/2 (e8 - e7 - e6 + sum_{i<=5} +-e_i), even number of minus signs among the five
            for mask in 0u32..32 {
                if mask.count_ones() % 2 == 0 {
                    let mut v: Vec<i32> = (0..5)
                        .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                        .collect();
                    v.extend([-1, -1, 1]);
                    out.insert(v);
                }
            }
        }),
        Family::E7 => (6, &|out| {
            let mut v = vec![0; 8];
            v[7] = 2;
            v[6] = -2;
            out.insert(v);
            for mask in 0u32..64 {
                if mask.count_ones() % 2 == 1 {
                    let mut v: Vec<i32> = (0..6)
                        .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                        .collect();
                    v.extend([-1, 1]);
                    out.insert(v);
                }
            }
        }),
        Family::E8 => (8, &|out| {
            for mask in 0u32..128 {
                if mask.count_ones() % 2 == 0 {
                    let mut v: Vec<i32> = (0..7)
                        .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                        .collect();
                    v.push(1);
                    out.insert(v);
                }
            }
        }),
        _ => panic!("not an E family"),
    };
    let mut out = BTreeSet::new();
    // e_i +- e_j with i > j
    for i in 0..upto {
        for j in 0..i {
            for s in [-2, 2] {
                let mut v = vec![0; 8];
                v[i] = 2;
                v[j] = s;
                out.insert(v);
            }
        }
    }
    extra(&mut out);
    out
}

/// Expected diagram edges `(i, j, lines, arrow)`, 1-based, `i < j`, with the
/// arrow given as `(from, to)`.
pub type EdgeTuple = (usize, usize, u8, Option<(usize, usize)>);

pub fn edges(family: Family, r: usize) -> Vec<EdgeTuple> {
    let path = |k: usize| -> Vec<EdgeTuple> { (1..k).map(|i| (i, i + 1, 1, None)).collect() };
    let mut e = match family {
        Family::A => path(r),
        Family::B | Family::BC => {
            let mut e = path(r - 1);
            e.push((r - 1, r, 2, Some((r - 1, r))));
            e
        }
        Family::C => {
            let mut e = path(r - 1);
            e.push((r - 1, r, 2, Some((r, r - 1))));
            e
        }
        Family::D => {
            let mut e = path(r - 1);
            e.push((r - 2, r, 1, None));
            e
        }
        Family::E6 | Family::E7 | Family::E8 => {
            let mut e = vec![(1, 3, 1, None), (2, 4, 1, None)];
            e.extend((3..r).map(|i| (i, i + 1, 1, None)));
            e
        }
        Family::F4 => vec![(1, 2, 1, None), (2, 3, 2, Some((2, 3))), (3, 4, 1, None)],
        Family::G2 => vec![(1, 2, 3, Some((2, 1)))],
    };
    if family == Family::BC && r == 1 {
        e.clear();
    }
    e.sort();
    e
}

pub fn fibonacci(k: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}

/// Independent vertex sets of the path on `r` vertices, as bitmasks.
pub fn path_independent_sets(r: usize) -> Vec<u32> {
    (0u32..1 << r).filter(|m| m & (m >> 1) == 0).collect()
}

/// Entry count of traceless block upper triangular matrices for the blocks
/// cut out of `{0..=r}` by the simple roots outside `phi`.
pub fn block_upper_count(r: usize, phi: &[usize]) -> usize {
    let mut sizes = vec![1usize];
    for i in 1..=r {
        if phi.contains(&i) {
            *sizes.last_mut().unwrap() += 1;
        } else {
            sizes.push(1);
        }
    }
    let mut total = 0;
    for (k, a) in sizes.iter().enumerate() {
        for b in &sizes[k..] {
            total += a * b;
        }
    }
    total - 1
}

/// Orbits of the independent sets of the `A_r` path under reversal and the
/// number of nontrivial (orbit, dim V) pairs.
pub fn sl_foliation_count(r: usize) -> (usize, usize) {
    let rev = |m: u32| {
        (0..r)
            .filter(|i| m >> i & 1 == 1)
            .map(|i| 1u32 << (r - 1 - i))
            .sum::<u32>()
    };
    let mut seen = BTreeSet::new();
    let mut orbits = 0;
    let mut classes = 0;
    for m in path_independent_sets(r) {
        if seen.contains(&m) {
            continue;
        }
        seen.insert(m);
        seen.insert(rev(m));
        orbits += 1;
        classes += r - m.count_ones() as usize + 1;
    }
    (orbits, classes - 1)
}

/// `g = k a n` from a Householder QR with the signs moved into `k`.
pub fn iwasawa_qr(g: &DMatrix<f64>) -> (DMatrix<f64>, DMatrix<f64>, DMatrix<f64>) {
    let qr = g.clone().qr();
    let (q, r) = (qr.q(), qr.r());
    let m = g.nrows();
    let d = DMatrix::from_fn(m, m, |i, j| if i == j { r[(i, i)].signum() } else { 0.0 });
    let k = &q * &d;
    let rr = &d * &r;
    let a = DMatrix::from_fn(m, m, |i, j| if i == j { rr[(i, i)] } else { 0.0 });
    let n = DMatrix::from_fn(m, m, |i, j| rr[(i, j)] / rr[(i, i)]);
    (k, a, n)
}

/// `dim G - dim K` for every series of the catalog.
pub fn group_dimension(entry: &str, r: usize, n: usize) -> usize {
    match entry {
        "sl-real" => (r) * (r + 3) / 2,
        "sl-complex" => (r + 1) * (r + 1) - 1,
        "sl-quaternionic" => r * (2 * r + 3),
        "e6-minus26" => 26,
        "real-hyperbolic" => n + 1,
        "so-odd-complex" => (2 * r + 1) * r,
        "so-indefinite" => (r + n) * r,
        "sp-real" => r * (r + 1),
        "sp-complex" => r * (2 * r + 1),
        "sp-split-quaternionic" => 4 * r * r,
        "su-split" => 2 * r * r,
        "so-even-quaternionic" => 2 * r * (2 * r - 1),
        "e7-minus25" => 54,
        "so-split" => r * r,
        "so-even-complex" => r * (2 * r - 1),
        "e6-split" => 42,
        "e6-complex" => 78,
        "e7-split" => 70,
        "e7-complex" => 133,
        "e8-split" => 128,
        "e8-complex" => 248,
        "f4-split" => 28,
        "f4-complex" => 52,
        "e6-2" => 40,
        "e7-minus5" => 64,
        "e8-minus24" => 112,
        "g2-split" => 8,
        "g2-complex" => 14,
        "su-indefinite" => 2 * (r + n) * r,
        "so-odd-quaternionic" => (2 * r + 1) * 2 * r,
        "sp-indefinite" => 4 * (r + n) * r,
        "e6-minus14" => 32,
        "f4-minus20" => 16,
        other => panic!("no dimension formula for {other}"),
    }
}

/// Families at every rank the acceptance runs exhaustively.
pub fn constructible(max_classical: usize) -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for f in Family::ALL {
        match f.fixed_rank() {
            Some(r) => out.push((f, r)),
            None => {
                let (lo, _) = f.rank_range();
                out.extend((lo..=max_classical).map(|r| (f, r)));
            }
        }
    }
    out
}
