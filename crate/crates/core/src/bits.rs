//! Bitmask helpers shared by every module.

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Vertices strictly greater than `v`.
#[inline]
pub(crate) const fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        u64::MAX << (v + 1)
    }
}

pub(crate) fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | bit(v))
}

/// Iterates the set bits of `mask` in increasing order.
pub(crate) fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Sort key putting equal-size vertex masks in lexicographic tuple order:
/// the smallest differing vertex decides, and the set holding it comes first.
#[inline]
pub(crate) fn lex_key(mask: u64) -> u64 {
    !mask.reverse_bits()
}

/// Binomial coefficient; saturates instead of overflowing.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// `k`-subsets of `0..n` as sorted index vectors, in lexicographic order.
pub(crate) struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// All `k`-subsets of the set bits of `mask`, as masks.
pub(crate) fn submasks_of_size(mask: u64, k: usize) -> impl Iterator<Item = u64> {
    let elems: Vec<usize> = iter_bits(mask).collect();
    Combinations::new(elems.len(), k).map(move |c| c.iter().fold(0u64, |m, &i| m | bit(elems[i])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_count_and_order() {
        let all: Vec<Vec<usize>> = Combinations::new(5, 3).collect();
        assert_eq!(all.len(), 10);
        assert_eq!(all[0], vec![0, 1, 2]);
        assert_eq!(all[9], vec![2, 3, 4]);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn lex_key_matches_tuple_order() {
        let sets: Vec<Vec<usize>> = Combinations::new(7, 3).collect();
        let mut by_key = sets.clone();
        by_key.sort_by_key(|s| lex_key(mask_of(s)));
        assert_eq!(by_key, sets);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(64, 32), 1832624140942590534);
    }
}
