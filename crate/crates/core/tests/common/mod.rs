#![allow(dead_code)]

use platlink::{BraidWord, Letter};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const PLAT_EXAMPLE: &str = "s4^-1 s2 s3^-1 s2^-1 s3 s4^-2 s3^-1 s2 s3^-1 s2^-1 s5^-1 s4";
pub const PA_BRAID: &str = "s2^2 s4 s1 s3 s5 s2";
pub const TWISTED_PLAT: &str = "s2^3 s4^3 s1^-3 s3^-3 s5^-3 s2^3 s4^3";
pub const FIGURE_EIGHT: &str = "s2 s1^-1 s2^2 s3";

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every word of exactly `len` letters in `B_strands`, as signed generators.
pub fn words_of_length(strands: usize, len: usize) -> Vec<Vec<i64>> {
    let alphabet: Vec<i64> = (1..strands as i64).flat_map(|g| [g, -g]).collect();
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn words_up_to(strands: usize, max_len: usize) -> Vec<Vec<i64>> {
    (0..=max_len).flat_map(|l| words_of_length(strands, l)).collect()
}

pub fn word(strands: usize, signed: &[i64]) -> BraidWord {
    BraidWord::new(strands, signed.iter().map(|&s| Letter::from_signed(s).unwrap()).collect()).unwrap()
}

pub fn random_word(r: &mut ChaCha8Rng, strands: usize, len: usize) -> BraidWord {
    let signed: Vec<i64> = (0..len)
        .map(|_| {
            let g = r.gen_range(1..strands as i64);
            if r.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    word(strands, &signed)
}

/// Final position of each puncture, tracked one letter at a time with
/// punctures numbered right to left: `σ_i` exchanges `k−i` and `k−i+1`.
pub fn puncture_images(strands: usize, signed: &[i64]) -> Vec<usize> {
    let mut at: Vec<usize> = (1..=strands).collect();
    for &s in signed {
        let g = s.unsigned_abs() as usize;
        let (a, b) = (strands - g, strands - g + 1);
        for p in at.iter_mut() {
            if *p == a {
                *p = b;
            } else if *p == b {
                *p = a;
            }
        }
    }
    at
}

/// Components and sorted bridge counts by union-find over strands.
pub fn union_find_components(strands: usize, signed: &[i64]) -> (usize, Vec<usize>) {
    let mut parent: Vec<usize> = (0..strands).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    // strand s starts at top position s and ends at bottom position bottom[s]
    let mut pos: Vec<usize> = (0..strands).collect();
    for &s in signed {
        let g = s.unsigned_abs() as usize;
        for p in pos.iter_mut() {
            if *p == g - 1 {
                *p = g;
            } else if *p == g {
                *p = g - 1;
            }
        }
    }
    let mut ending_at = vec![0; strands];
    for (s, &p) in pos.iter().enumerate() {
        ending_at[p] = s;
    }
    for i in (0..strands).step_by(2) {
        let (a, b) = (find(&mut parent, i), find(&mut parent, i + 1));
        parent[a] = b;
        let (a, b) = (find(&mut parent, ending_at[i]), find(&mut parent, ending_at[i + 1]));
        parent[a] = b;
    }
    let mut caps = std::collections::BTreeMap::new();
    for i in (0..strands).step_by(2) {
        *caps.entry(find(&mut parent, i)).or_insert(0usize) += 1;
    }
    let mut bridges: Vec<usize> = caps.into_values().collect();
    bridges.sort_unstable_by(|a, b| b.cmp(a));
    (bridges.len(), bridges)
}

/// Knot determinant from a PD code through the Fox colouring matrix:
/// one row per crossing, `2·over − under_in − under_out`, any first minor.
pub fn fox_determinant(pd: &[[usize; 4]]) -> num_bigint::BigInt {
    use platlink::linalg::{determinant, IntMatrix};
    let edges = pd.iter().flatten().copied().max().unwrap_or(0);
    let mut arc: Vec<usize> = (0..=edges).collect();
    fn root(a: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while a[r] != r {
            r = a[r];
        }
        a[x] = r;
        r
    }
    for x in pd {
        let (u, v) = (root(&mut arc, x[1]), root(&mut arc, x[3]));
        arc[u] = v;
    }
    let mut ids = std::collections::BTreeMap::new();
    for e in 1..=edges {
        let r = root(&mut arc, e);
        let next = ids.len();
        ids.entry(r).or_insert(next);
    }
    let n = ids.len();
    let mut m = IntMatrix::zeros(pd.len(), n);
    for (i, x) in pd.iter().enumerate() {
        m[(i, ids[&root(&mut arc, x[1])])] += 2;
        m[(i, ids[&root(&mut arc, x[0])])] -= 1;
        m[(i, ids[&root(&mut arc, x[2])])] -= 1;
    }
    let keep: Vec<usize> = (0..n - 1).collect();
    let rows: Vec<usize> = (0..pd.len() - 1).collect();
    use num_traits::Signed;
    determinant(&m.submatrix(&rows, &keep)).abs()
}
