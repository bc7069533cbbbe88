//! Counting oracles: zigzag (Euler) numbers and fixed-point-free alternating
//! involutions.
//!
//! "Alternating" means down-up throughout: `w(1) > w(2) < w(3) > ...`.

use rug::Integer;
use thiserror::Error;

/// Largest `n` for which involutions of `S_2n` are enumerated by default.
pub const DEFAULT_ENUMERATION_BOUND: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatoricsError {
    #[error("n = {n} exceeds the enumeration bound {bound}")]
    AboveBound { n: usize, bound: usize },
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
}

/// One-line notation over `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, CombinatoricsError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(CombinatoricsError::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_involution(&self) -> bool {
        (1..=self.len()).all(|i| self.apply(self.apply(i)) == i)
    }

    pub fn is_fixed_point_free(&self) -> bool {
        (1..=self.len()).all(|i| self.apply(i) != i)
    }

    pub fn is_alternating(&self) -> bool {
        is_down_up(&self.images)
    }
}

fn is_down_up(w: &[usize]) -> bool {
    w.windows(2)
        .enumerate()
        .all(|(i, p)| if i % 2 == 0 { p[0] > p[1] } else { p[0] < p[1] })
}

/// Zigzag number `E_n` by the boustrophedon (Seidel) triangle.
pub fn zigzag(n: usize) -> Integer {
    zigzag_table(n).pop().expect("table is non-empty")
}

/// `E_0..E_n` from one boustrophedon triangle.
pub fn zigzag_table(n: usize) -> Vec<Integer> {
    let mut out = vec![Integer::from(1)];
    let mut row = vec![Integer::from(1)];
    for _ in 1..=n {
        // each row starts at 0 and accumulates the previous row read backwards
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(Integer::new());
        for v in row.iter().rev() {
            let s = Integer::from(next.last().expect("non-empty") + v);
            next.push(s);
        }
        out.push(next.last().expect("non-empty").clone());
        row = next;
    }
    out
}

/// Counts alternating permutations of `1..=n` by visiting all `n!` of them.
pub fn zigzag_brute_force(n: usize) -> u64 {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], n: usize) -> u64 {
        let k = prefix.len();
        if k == n {
            return 1;
        }
        let mut count = 0;
        for v in 1..=n {
            if used[v] {
                continue;
            }
            if k > 0 {
                let prev = prefix[k - 1];
                // position k (0-based) must descend from k-1 when k-1 is even
                let ok = if (k - 1) % 2 == 0 { prev > v } else { prev < v };
                if !ok {
                    continue;
                }
            }
            used[v] = true;
            prefix.push(v);
            count += rec(prefix, used, n);
            prefix.pop();
            used[v] = false;
        }
        count
    }
    rec(&mut Vec::with_capacity(n), &mut vec![false; n + 1], n)
}

/// Calls `visit` once per fixed-point-free involution of `S_2n`, generated
/// as perfect matchings of `1..=2n`.
pub fn for_each_fpf_involution(n: usize, mut visit: impl FnMut(&Permutation)) {
    fn rec(w: &mut Vec<usize>, visit: &mut impl FnMut(&Permutation)) {
        let Some(i) = w.iter().position(|&v| v == 0) else {
            visit(&Permutation { images: w.clone() });
            return;
        };
        for j in i + 1..w.len() {
            if w[j] != 0 {
                continue;
            }
            w[i] = j + 1;
            w[j] = i + 1;
            rec(w, visit);
            w[i] = 0;
            w[j] = 0;
        }
    }
    rec(&mut vec![0; 2 * n], &mut visit);
}

/// Number of fixed-point-free involutions of `S_2n`, i.e. `(2n-1)!!`, by enumeration.
pub fn count_fpf_involutions(n: usize) -> u64 {
    let mut count = 0;
    for_each_fpf_involution(n, |_| count += 1);
    count
}

pub fn fpf_alternating_involutions(n: usize) -> Result<u64, CombinatoricsError> {
    fpf_alternating_involutions_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn fpf_alternating_involutions_bounded(n: usize, bound: usize) -> Result<u64, CombinatoricsError> {
    if n > bound {
        return Err(CombinatoricsError::AboveBound { n, bound });
    }
    let mut count = 0;
    for_each_fpf_involution(n, |w| {
        if w.is_alternating() {
            count += 1;
        }
    });
    Ok(count)
}

pub fn double_factorial_odd(n: usize) -> u64 {
    (1..2 * n as u64).step_by(2).product()
}
