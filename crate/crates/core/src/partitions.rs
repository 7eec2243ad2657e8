//! Set partitions of `0..n` as restricted growth strings.
//!
//! A restricted growth string `a` has `a[0] = 0` and
//! `a[i] <= 1 + max(a[0..i])`; it names the partition in which `i` lies in
//! block `a[i]`. Strings are produced in lexicographic order.

/// Iterator over all restricted growth strings of length `n`.
#[derive(Debug, Clone)]
pub struct RestrictedGrowth {
    current: Vec<usize>,
    // prefix maxima: max[i] = max(current[0..=i])
    max: Vec<usize>,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        RestrictedGrowth {
            current: vec![0; n],
            max: vec![0; n],
            done: false,
        }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let n = self.current.len();
        // Find the rightmost position that can still grow.
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] <= self.max[i - 1] {
                self.current[i] += 1;
                self.max[i] = self.max[i - 1].max(self.current[i]);
                for j in i + 1..n {
                    self.current[j] = 0;
                    self.max[j] = self.max[i];
                }
                break;
            }
        }
        Some(out)
    }
}

/// Number of blocks named by a restricted growth string.
pub fn block_count(rgs: &[usize]) -> usize {
    rgs.iter().max().map_or(0, |m| m + 1)
}

/// Bell numbers `B(0..=n)` via the Bell triangle.
pub fn bell_numbers(n: usize) -> Vec<u128> {
    let mut out = vec![1u128];
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        out.push(next[0]);
        row = next;
    }
    out.truncate(n + 1);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_in_order() {
        let all: Vec<_> = RestrictedGrowth::new(3).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![0, 1, 2]
            ]
        );
        assert_eq!(
            RestrictedGrowth::new(0).collect::<Vec<_>>(),
            vec![Vec::<usize>::new()]
        );
        assert_eq!(RestrictedGrowth::new(1).count(), 1);
    }

    #[test]
    fn counts_are_bell_numbers() {
        let bell = bell_numbers(9);
        assert_eq!(&bell[..6], &[1, 1, 2, 5, 15, 52]);
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(RestrictedGrowth::new(n).count() as u128, b);
        }
    }

    #[test]
    fn strings_are_valid_and_sorted() {
        let all: Vec<_> = RestrictedGrowth::new(6).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for s in &all {
            let mut max = 0;
            for (i, &a) in s.iter().enumerate() {
                assert!(if i == 0 { a == 0 } else { a <= max + 1 });
                max = max.max(a);
            }
        }
        // Stirling numbers of the second kind for n = 6.
        let mut by_blocks = [0usize; 7];
        for s in &all {
            by_blocks[block_count(s)] += 1;
        }
        assert_eq!(by_blocks, [0, 1, 31, 90, 65, 15, 1]);
    }
}
