//! Permutations: lexicographic enumeration, signs and lazily iterated
//! products of symmetric groups on disjoint blocks.

use alloc::vec::Vec;

/// Advances `p` to the next permutation in lexicographic order.
/// Returns `false` (leaving `p` sorted ascending) after the last one.
pub fn next_permutation<T: Ord>(p: &mut [T]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        p.reverse();
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// `+1` for even, `-1` for odd permutations of `0..n` (given as images).
pub fn sign(p: &[usize]) -> i64 {
    let mut seen = alloc::vec![false; p.len()];
    let mut s = 1;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len % 2 == 0 {
            s = -s;
        }
    }
    s
}

/// Sign of the permutation sorting `seq` (distinct keys) ascending.
pub fn inversion_sign<T: Ord>(seq: &[T]) -> i64 {
    let mut inv = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All permutations of `0..n` in lexicographic order.
pub struct Permutations {
    cur: Vec<usize>,
    done: bool,
}

pub fn permutations(n: usize) -> Permutations {
    Permutations { cur: (0..n).collect(), done: false }
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        self.done = !next_permutation(&mut self.cur);
        Some(out)
    }
}

/// The subgroup of `Sym(0..n)` preserving each block setwise, enumerated
/// as an odometer over per-block permutations. Items are
/// `(images, sign)` with `images[i]` the image of point `i`.
pub struct BlockPermutations {
    n: usize,
    blocks: Vec<Vec<usize>>,
    /// Current arrangement of each block's points.
    states: Vec<Vec<usize>>,
    done: bool,
}

impl BlockPermutations {
    /// `blocks` must be disjoint; points not in any block are fixed.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        let states = blocks
            .iter()
            .map(|b| {
                let mut s = b.clone();
                s.sort_unstable();
                s
            })
            .collect();
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        BlockPermutations { n, blocks, states, done: false }
    }

    /// Number of group elements.
    pub fn order(&self) -> u128 {
        self.blocks.iter().map(|b| (1..=b.len() as u128).product::<u128>()).product()
    }

    fn current(&self) -> (Vec<usize>, i64) {
        let mut images: Vec<usize> = (0..self.n).collect();
        let mut s = 1;
        for (b, st) in self.blocks.iter().zip(&self.states) {
            for (from, to) in b.iter().zip(st) {
                images[*from] = *to;
            }
            s *= inversion_sign(st);
        }
        (images, s)
    }
}

impl Iterator for BlockPermutations {
    type Item = (Vec<usize>, i64);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = self.current();
        let mut k = 0;
        loop {
            if k == self.states.len() {
                self.done = true;
                break;
            }
            if next_permutation(&mut self.states[k]) {
                break;
            }
            k += 1;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_signs() {
        let all: Vec<_> = permutations(4).collect();
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().map(|p| sign(p)).sum::<i64>(), 0);
        assert_eq!(sign(&[1, 0, 2]), -1);
        assert_eq!(sign(&[1, 2, 0]), 1);
        assert_eq!(inversion_sign(&[3, 1, 2]), 1);
        assert_eq!(inversion_sign(&[2, 1]), -1);
    }

    #[test]
    fn block_group() {
        let g = BlockPermutations::new(5, alloc::vec![alloc::vec![0, 2], alloc::vec![1, 3, 4]]);
        assert_eq!(g.order(), 12);
        let els: Vec<_> = g.collect();
        assert_eq!(els.len(), 12);
        for (p, s) in &els {
            assert_eq!(*s, sign(p));
            assert!(p[0] == 0 || p[0] == 2);
        }
        assert_eq!(els.iter().filter(|(_, s)| *s < 0).count(), 6);
        assert_eq!(BlockPermutations::new(3, alloc::vec![]).count(), 1);
    }
}
