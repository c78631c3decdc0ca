//! Dense GF(2) linear algebra on `u64`-word bitsets.

/// A fixed-length bit vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        let m = 1u64 << (i % 64);
        if b {
            self.words[i / 64] |= m;
        } else {
            self.words[i / 64] &= !m;
        }
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// Low 64 bits; exact when `len <= 64`.
    pub fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }
}

/// Solution set `particular + span(kernel)` of a consistent system.
#[derive(Debug, Clone)]
pub struct AffineSpace {
    pub particular: BitVec,
    pub kernel: Vec<BitVec>,
}

impl AffineSpace {
    pub fn dimension(&self) -> usize {
        self.kernel.len()
    }

    /// Visits every point of the space in Gray-code order. Stops early when
    /// `visit` returns `false`; returns whether the walk completed.
    pub fn for_each_point(&self, mut visit: impl FnMut(&BitVec) -> bool) -> bool {
        let mut x = self.particular.clone();
        if !visit(&x) {
            return false;
        }
        let dim = self.kernel.len();
        for step in 1u64..(1u64 << dim) {
            let flip = step.trailing_zeros() as usize;
            x.xor_assign(&self.kernel[flip]);
            if !visit(&x) {
                return false;
            }
        }
        true
    }
}

/// Solves `rows · x = rhs` over GF(2); each row has `cols` coefficients.
/// `None` when the system is inconsistent.
pub fn solve(rows: &[BitVec], rhs: &[bool], cols: usize) -> Option<AffineSpace> {
    assert_eq!(rows.len(), rhs.len());
    // augmented column `cols` holds the right-hand side
    let mut m: Vec<BitVec> = rows
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            let mut a = BitVec::zeros(cols + 1);
            for c in 0..cols {
                a.set(c, r.get(c));
            }
            a.set(cols, b);
            a
        })
        .collect();

    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| m[r].get(col)) else {
            continue;
        };
        m.swap(row, p);
        let pivot = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r != row && other.get(col) {
                other.xor_assign(&pivot);
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    if m[row..].iter().any(|r| r.get(cols)) {
        return None;
    }

    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut particular = BitVec::zeros(cols);
    for (r, &c) in pivots.iter().enumerate() {
        particular.set(c, m[r].get(cols));
    }
    let kernel = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut k = BitVec::zeros(cols);
            k.set(f, true);
            for (r, &c) in pivots.iter().enumerate() {
                k.set(c, m[r].get(f));
            }
            k
        })
        .collect();
    Some(AffineSpace { particular, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(spec: &[&[bool]]) -> Vec<BitVec> {
        spec.iter().map(|r| BitVec::from_bools(r)).collect()
    }

    fn mul(rows: &[BitVec], x: &BitVec) -> Vec<bool> {
        rows.iter()
            .map(|r| (0..x.len()).filter(|&c| r.get(c) && x.get(c)).count() % 2 == 1)
            .collect()
    }

    #[test]
    fn solves_small_system_and_spans_kernel() {
        // x0 + x1 = 1, x1 + x2 = 0
        let a = rows(&[&[true, true, false], &[false, true, true]]);
        let rhs = [true, false];
        let space = solve(&a, &rhs, 3).unwrap();
        assert_eq!(space.dimension(), 1);
        let mut points = Vec::new();
        space.for_each_point(|x| {
            assert_eq!(mul(&a, x), rhs);
            points.push(x.to_bools());
            true
        });
        points.sort();
        assert_eq!(points, vec![vec![false, true, true], vec![true, false, false]]);
    }

    #[test]
    fn detects_inconsistency() {
        let a = rows(&[&[true, true], &[true, true]]);
        assert!(solve(&a, &[true, false], 2).is_none());
    }

    #[test]
    fn brute_force_agreement_on_random_systems() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let cols = (next() % 9 + 1) as usize;
            let nrows = (next() % 9 + 1) as usize;
            let a: Vec<BitVec> = (0..nrows)
                .map(|_| {
                    let w = next();
                    BitVec::from_bools(&(0..cols).map(|c| w >> c & 1 == 1).collect::<Vec<_>>())
                })
                .collect();
            let rhs: Vec<bool> = (0..nrows).map(|_| next() & 1 == 1).collect();
            let mut brute = Vec::new();
            for bits in 0u64..(1 << cols) {
                let x = BitVec::from_bools(&(0..cols).map(|c| bits >> c & 1 == 1).collect::<Vec<_>>());
                if mul(&a, &x) == rhs {
                    brute.push(x.to_bools());
                }
            }
            let mut found = Vec::new();
            if let Some(space) = solve(&a, &rhs, cols) {
                space.for_each_point(|x| {
                    found.push(x.to_bools());
                    true
                });
            }
            brute.sort();
            found.sort();
            assert_eq!(found, brute);
        }
    }
}
