//! Set partitions of `0..n` as restricted growth strings.
//!
//! A restricted growth string `a` has `a[0] = 0` and
//! `a[i] ≤ 1 + max(a[..i])`; block `b` of the partition is `{i : a[i] = b}`.

/// Iterator over every set partition of `0..n`, in lexicographic RGS order.
#[derive(Debug, Clone)]
pub struct RestrictedGrowth {
    rgs: Vec<usize>,
    // prefix_max[i] = max(rgs[..=i])
    prefix_max: Vec<usize>,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        RestrictedGrowth {
            rgs: vec![0; n],
            prefix_max: vec![0; n],
            started: false,
            done: false,
        }
    }

    fn advance(&mut self) -> bool {
        let n = self.rgs.len();
        for i in (1..n).rev() {
            if self.rgs[i] <= self.prefix_max[i - 1] {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(self.rgs.clone())
    }
}

/// Turns a restricted growth string into its blocks.
pub fn blocks(rgs: &[usize]) -> Vec<Vec<usize>> {
    let k = rgs.iter().max().map_or(0, |m| m + 1);
    let mut out = vec![Vec::new(); k];
    for (i, &b) in rgs.iter().enumerate() {
        out[b].push(i);
    }
    out
}
