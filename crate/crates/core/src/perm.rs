use std::fmt;

/// A permutation of `{1..n}` in one-line notation.
///
/// Products follow functional composition, `(v * w)(k) = v(w(k))`, so
/// right multiplication by the simple transposition `s_i` swaps the entries
/// at positions `i` and `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize, "permutation too large");
        Permutation((1..=n as u8).collect())
    }

    /// From 1-based one-line notation; `None` if not a bijection of `{1..n}`.
    pub fn from_one_line(values: &[usize]) -> Option<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in values {
            if v == 0 || v > n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Permutation(values.iter().map(|&v| v as u8).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of the 1-based point `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.0[k - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// `self * s_i`.
    pub fn mul_simple(&self, i: usize) -> Self {
        let mut out = self.0.clone();
        out.swap(i - 1, i);
        Permutation(out)
    }

    pub(crate) fn swap_in_place(&mut self, i: usize) {
        self.0.swap(i - 1, i);
    }

    /// `length(self * s_i) > length(self)`.
    pub fn is_ascent(&self, i: usize) -> bool {
        self.0[i - 1] < self.0[i]
    }

    /// Coxeter length (inversion count).
    pub fn length(&self) -> usize {
        let mut inv = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        Permutation(other.0.iter().map(|&k| self.0[k as usize - 1]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut out = vec![0u8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            out[v as usize - 1] = (i + 1) as u8;
        }
        Permutation(out)
    }

    /// Largest point not fixed, or 0 for the identity.
    pub fn largest_moved_point(&self) -> usize {
        (1..=self.0.len())
            .rev()
            .find(|&k| self.apply(k) != k)
            .unwrap_or(0)
    }

    /// Reduced word `[i_1, ..., i_l]` with `self = s_{i_1} ... s_{i_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        'outer: loop {
            for i in 1..w.0.len() {
                if !w.is_ascent(i) {
                    w.swap_in_place(i);
                    rev.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        rev.reverse();
        rev
    }

    /// Block sum: `self` on the first strands, `other` shifted above it.
    pub fn block_sum(&self, other: &Self) -> Self {
        let n = self.0.len() as u8;
        let mut out = self.0.clone();
        out.extend(other.0.iter().map(|&v| v + n));
        Permutation(out)
    }

    /// Same permutation on `n + extra` points.
    pub fn extend(&self, extra: usize) -> Self {
        let n = self.0.len();
        let mut out = self.0.clone();
        out.extend((n + 1..=n + extra).map(|v| v as u8));
        Permutation(out)
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.0[k] as usize - 1;
            }
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// All permutations of `{1..n}` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation::from_one_line(&current).unwrap());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_word_round_trips() {
        for w in all_permutations(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let mut p = Permutation::identity(4);
            for i in word {
                p = p.mul_simple(i);
            }
            assert_eq!(p, w);
        }
    }

    #[test]
    fn counts() {
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(Permutation::identity(3).cycle_count(), 3);
        assert_eq!(Permutation::identity(3).mul_simple(1).cycle_count(), 2);
        let w = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        assert_eq!(w.length(), 2);
        assert_eq!(w.largest_moved_point(), 3);
        assert_eq!(w.compose(&w.inverse()), Permutation::identity(3));
    }
}
