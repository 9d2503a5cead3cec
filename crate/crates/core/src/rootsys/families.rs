//! Explicit root lists of the ten families. Every vector is written in
//! scaled coordinates (actual coordinate times two).

use super::{Family, Root};

pub(super) struct FamilyData {
    pub roots: Vec<Root>,
    pub positive: Vec<Root>,
    pub simple: Vec<Root>,
}

fn root(v: Vec<i32>) -> Root {
    Root::from_scaled(v).expect("family tables never contain the zero vector")
}

/// `a * e_i + b * e_j` (0-based indices, integer coefficients).
fn pair(dim: usize, i: usize, a: i32, j: usize, b: i32) -> Root {
    let mut v = vec![0; dim];
    v[i] += 2 * a;
    v[j] += 2 * b;
    root(v)
}

fn unit(dim: usize, i: usize, a: i32) -> Root {
    let mut v = vec![0; dim];
    v[i] = 2 * a;
    root(v)
}

/// Half-integer vector `1/2 * sum signs[i] e_i`.
fn half(signs: &[i32]) -> Root {
    root(signs.to_vec())
}

/// All sign vectors of length `n`, in binary counting order with bit set = minus.
fn sign_vectors(n: usize) -> impl Iterator<Item = Vec<i32>> {
    (0u32..(1 << n)).map(move |mask| {
        (0..n)
            .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
            .collect()
    })
}

fn minus_count(signs: &[i32]) -> usize {
    signs.iter().filter(|&&s| s < 0).count()
}

/// `{±e_i ± e_j | i < j < bound}`
fn d_type_all(dim: usize, bound: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 0..bound {
        for j in (i + 1)..bound {
            for a in [1, -1] {
                for b in [1, -1] {
                    out.push(pair(dim, i, a, j, b));
                }
            }
        }
    }
    out
}

/// `{e_i ± e_j | i < j < bound}`
fn d_type_positive(dim: usize, bound: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 0..bound {
        for j in (i + 1)..bound {
            out.push(pair(dim, i, 1, j, -1));
            out.push(pair(dim, i, 1, j, 1));
        }
    }
    out
}

/// `{e_i ± e_j | i > j}` over the first `bound` coordinates (E-series convention).
fn e_type_positive(dim: usize, bound: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 0..bound {
        for j in 0..i {
            out.push(pair(dim, i, 1, j, -1));
            out.push(pair(dim, i, 1, j, 1));
        }
    }
    out
}

/// `alpha_1 .. alpha_{r-1} = e_i - e_{i+1}`
fn chain(dim: usize, count: usize) -> Vec<Root> {
    (0..count).map(|i| pair(dim, i, 1, i + 1, -1)).collect()
}

/// Simple roots shared by E6, E7, E8.
fn e_simple(rank: usize) -> Vec<Root> {
    let mut s = vec![half(&[1, -1, -1, -1, -1, -1, -1, 1]), pair(8, 0, 1, 1, 1)];
    for i in 3..=rank {
        // alpha_i = e_{i-1} - e_{i-2}
        s.push(pair(8, i - 2, 1, i - 3, -1));
    }
    s
}

pub(super) fn construct(family: Family, r: usize) -> FamilyData {
    match family {
        Family::A => {
            let dim = r + 1;
            let mut roots = Vec::new();
            let mut positive = Vec::new();
            for i in 0..dim {
                for j in 0..dim {
                    if i != j {
                        roots.push(pair(dim, i, 1, j, -1));
                    }
                    if i < j {
                        positive.push(pair(dim, i, 1, j, -1));
                    }
                }
            }
            FamilyData {
                roots,
                positive,
                simple: chain(dim, r),
            }
        }
        Family::B | Family::C | Family::BC => {
            let short = matches!(family, Family::B | Family::BC);
            let long = matches!(family, Family::C | Family::BC);
            let mut roots = d_type_all(r, r);
            let mut positive = d_type_positive(r, r);
            for i in 0..r {
                if short {
                    roots.push(unit(r, i, 1));
                    roots.push(unit(r, i, -1));
                    positive.push(unit(r, i, 1));
                }
                if long {
                    roots.push(unit(r, i, 2));
                    roots.push(unit(r, i, -2));
                    positive.push(unit(r, i, 2));
                }
            }
            let mut simple = chain(r, r - 1);
            simple.push(unit(r, r - 1, if family == Family::C { 2 } else { 1 }));
            FamilyData {
                roots,
                positive,
                simple,
            }
        }
        Family::D => {
            let mut simple = chain(r, r - 1);
            simple.push(pair(r, r - 2, 1, r - 1, 1));
            FamilyData {
                roots: d_type_all(r, r),
                positive: d_type_positive(r, r),
                simple,
            }
        }
        Family::E8 => {
            let mut roots = d_type_all(8, 8);
            roots.extend(
                sign_vectors(8)
                    .filter(|s| minus_count(s).is_multiple_of(2))
                    .map(|s| half(&s)),
            );
            let mut positive = e_type_positive(8, 8);
            for s in sign_vectors(7).filter(|s| minus_count(s).is_multiple_of(2)) {
                let mut v = s.clone();
                v.push(1);
                positive.push(half(&v));
            }
            FamilyData {
                roots,
                positive,
                simple: e_simple(8),
            }
        }
        Family::E7 => {
            // V = { v | <v, e7 + e8> = 0 }
            let mut roots = d_type_all(8, 6);
            roots.push(pair(8, 6, 1, 7, -1));
            roots.push(pair(8, 6, -1, 7, 1));
            roots.extend(
                sign_vectors(8)
                    .filter(|s| minus_count(s).is_multiple_of(2) && s[6] == -s[7])
                    .map(|s| half(&s)),
            );
            let mut positive = e_type_positive(8, 6);
            positive.push(pair(8, 7, 1, 6, -1));
            for s in sign_vectors(6).filter(|s| minus_count(s) % 2 == 1) {
                let mut v = s.clone();
                v.extend([-1, 1]);
                positive.push(half(&v));
            }
            FamilyData {
                roots,
                positive,
                simple: e_simple(7),
            }
        }
        Family::E6 => {
            // V = { v | <v, e6 - e7> = <v, e7 + e8> = 0 }
            let mut roots = d_type_all(8, 5);
            roots.extend(
                sign_vectors(8)
                    .filter(|s| minus_count(s).is_multiple_of(2) && s[5] == s[6] && s[6] == -s[7])
                    .map(|s| half(&s)),
            );
            let mut positive = e_type_positive(8, 5);
            for s in sign_vectors(5).filter(|s| minus_count(s).is_multiple_of(2)) {
                let mut v = s.clone();
                v.extend([-1, -1, 1]);
                positive.push(half(&v));
            }
            FamilyData {
                roots,
                positive,
                simple: e_simple(6),
            }
        }
        Family::F4 => {
            let mut roots = d_type_all(4, 4);
            let mut positive = d_type_positive(4, 4);
            for i in 0..4 {
                roots.push(unit(4, i, 1));
                roots.push(unit(4, i, -1));
                positive.push(unit(4, i, 1));
            }
            roots.extend(sign_vectors(4).map(|s| half(&s)));
            for s in sign_vectors(3) {
                let mut v = vec![1];
                v.extend(s);
                positive.push(half(&v));
            }
            let simple = vec![
                pair(4, 1, 1, 2, -1),
                pair(4, 2, 1, 3, -1),
                unit(4, 3, 1),
                half(&[1, -1, -1, -1]),
            ];
            FamilyData {
                roots,
                positive,
                simple,
            }
        }
        Family::G2 => {
            let g = |v: [i32; 3]| root(v.iter().map(|x| 2 * x).collect());
            let mut roots = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        roots.push(pair(3, i, 1, j, -1));
                    }
                }
                // ±(2e_i - e_j - e_k)
                let mut v = [-1, -1, -1];
                v[i] = 2;
                roots.push(g(v));
                roots.push(g(v.map(|x| -x)));
            }
            let positive = vec![
                g([1, -1, 0]),
                g([-2, 1, 1]),
                g([-1, 0, 1]),
                g([0, -1, 1]),
                g([1, -2, 1]),
                g([-1, -1, 2]),
            ];
            FamilyData {
                roots,
                positive,
                simple: vec![g([1, -1, 0]), g([-2, 1, 1])],
            }
        }
    }
}
