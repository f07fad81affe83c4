use crate::error::{Error, Result};

/// Largest pattern order whose partition lattice is enumerated.
pub const MAX_PARTITION_ORDER: usize = 12;

/// A set partition of `0..n`, stored as its restricted growth string:
/// `rgs[v]` is the block of `v`, and blocks are numbered by first occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    rgs: Vec<usize>,
    blocks: usize,
}

impl Partition {
    pub fn from_rgs(rgs: Vec<usize>) -> Result<Partition> {
        let mut next = 0;
        for &b in &rgs {
            if b > next {
                return Err(Error::Invalid(format!("{rgs:?} is not a restricted growth string")));
            }
            if b == next {
                next += 1;
            }
        }
        Ok(Partition { rgs, blocks: next })
    }

    /// Canonical partition with the given blocks (in any order).
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Partition> {
        let mut label = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Invalid("empty block".into()));
            }
            for &v in block {
                if v >= n || label[v] != usize::MAX {
                    return Err(Error::PartitionMismatch(n));
                }
                label[v] = i;
            }
        }
        if label.contains(&usize::MAX) {
            return Err(Error::PartitionMismatch(n));
        }
        let mut renumber = vec![usize::MAX; blocks.len()];
        let mut next = 0;
        let rgs = label
            .iter()
            .map(|&b| {
                if renumber[b] == usize::MAX {
                    renumber[b] = next;
                    next += 1;
                }
                renumber[b]
            })
            .collect();
        Ok(Partition { rgs, blocks: next })
    }

    pub fn discrete(n: usize) -> Partition {
        Partition {
            rgs: (0..n).collect(),
            blocks: n,
        }
    }

    pub fn rgs(&self) -> &[usize] {
        &self.rgs
    }

    /// Number of elements partitioned.
    pub fn len(&self) -> usize {
        self.rgs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rgs.is_empty()
    }

    pub fn block_count(&self) -> usize {
        self.blocks
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks == self.rgs.len()
    }

    /// Blocks in order of their smallest element, each sorted.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (v, &b) in self.rgs.iter().enumerate() {
            out[b].push(v);
        }
        out
    }
}

/// Restartable iterator over all partitions of `0..n` in lexicographic RGS
/// order.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

pub fn enumerate_partitions(n: usize) -> Result<Partitions> {
    if n == 0 || n > MAX_PARTITION_ORDER {
        return Err(Error::PartitionSize {
            n,
            limit: MAX_PARTITION_ORDER,
        });
    }
    Ok(Partitions {
        current: Some(vec![0; n]),
    })
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let rgs = self.current.take()?;
        let n = rgs.len();
        // prefix_max[i] = max(rgs[..i])
        let mut prefix_max = vec![0; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(rgs[i - 1]);
        }
        if let Some(i) = (1..n).rev().find(|&i| rgs[i] <= prefix_max[i]) {
            let mut succ = rgs.clone();
            succ[i] += 1;
            succ[i + 1..].fill(0);
            self.current = Some(succ);
        }
        let blocks = rgs.iter().max().map_or(0, |m| m + 1);
        Some(Partition { rgs, blocks })
    }
}
