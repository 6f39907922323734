//! Solutions of the Diophantine partition relations `Σ k n_k = n` and
//! `Σ j (k_j + ℓ_j) + ℓ = k`.

use std::collections::BTreeMap;
use std::fmt;

/// A partition stored as multiplicities `k → n_k` (all `n_k ≥ 1`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PartitionSolution {
    pub parts: BTreeMap<u32, u32>,
}

impl PartitionSolution {
    pub fn from_parts<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut map = BTreeMap::new();
        for p in parts {
            *map.entry(p).or_insert(0) += 1;
        }
        PartitionSolution { parts: map }
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().map(|(k, n)| k * n).sum()
    }

    pub fn multiplicity(&self, k: u32) -> u32 {
        self.parts.get(&k).copied().unwrap_or(0)
    }

    /// Parts in non-increasing order, e.g. `[3, 1, 1]`.
    pub fn descending(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .parts
            .iter()
            .flat_map(|(k, n)| std::iter::repeat_n(*k, *n as usize))
            .collect();
        v.reverse();
        v
    }
}

impl fmt::Display for PartitionSolution {
    /// `n₁ = 3, n₂ = 1` style; the empty partition prints as `∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        let items: Vec<String> = self
            .parts
            .iter()
            .map(|(k, n)| format!("n{k} = {n}"))
            .collect();
        f.write_str(&items.join(", "))
    }
}

fn partitions_rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for p in (1..=max.min(n)).rev() {
        prefix.push(p);
        partitions_rec(n - p, p, prefix, out);
        prefix.pop();
    }
}

/// All partitions of `n`, largest first part first (so `5` precedes
/// `4+1`, and `1+1+1+1+1` comes last).
pub fn partitions_of(n: u32) -> Vec<PartitionSolution> {
    let mut out = Vec::new();
    partitions_rec(n, n, &mut Vec::new(), &mut out);
    out.into_iter().map(PartitionSolution::from_parts).collect()
}

/// One solution `(ℓ, {k_j}, {ℓ_j})` of `Σ j (k_j + ℓ_j) + ℓ = k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaguerrePartitionSolution {
    pub ell: u32,
    pub kparts: BTreeMap<u32, u32>,
    pub ellparts: BTreeMap<u32, u32>,
}

impl LaguerrePartitionSolution {
    pub fn total(&self) -> u32 {
        self.ell
            + self.kparts.iter().map(|(j, k)| j * k).sum::<u32>()
            + self.ellparts.iter().map(|(j, l)| j * l).sum::<u32>()
    }

    pub fn k_at(&self, j: u32) -> u32 {
        self.kparts.get(&j).copied().unwrap_or(0)
    }

    pub fn ell_at(&self, j: u32) -> u32 {
        self.ellparts.get(&j).copied().unwrap_or(0)
    }

    /// Nonzero entries as `(name, value)` pairs: `("k1", 2)`, `("l", 1)`, …
    pub fn entries(&self) -> Vec<(String, u32)> {
        let mut v: Vec<(String, u32)> = Vec::new();
        let js: std::collections::BTreeSet<u32> = self
            .kparts
            .keys()
            .chain(self.ellparts.keys())
            .copied()
            .collect();
        for j in js {
            if self.k_at(j) > 0 {
                v.push((format!("k{j}"), self.k_at(j)));
            }
            if self.ell_at(j) > 0 {
                v.push((format!("l{j}"), self.ell_at(j)));
            }
        }
        if self.ell > 0 {
            v.push(("l".into(), self.ell));
        }
        v
    }
}

impl fmt::Display for LaguerrePartitionSolution {
    /// `k₁ = 1, ℓ = 1` style, written with ASCII names (`k1 = 1, l = 1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.entries();
        if e.is_empty() {
            return f.write_str("∅");
        }
        let items: Vec<String> = e.into_iter().map(|(k, v)| format!("{k} = {v}")).collect();
        f.write_str(&items.join(", "))
    }
}

/// Two-coloured partitions of `r` with parts `≤ max`, as `(j, k_j, ℓ_j)` lists.
fn bicolored(r: u32, max: u32) -> Vec<Vec<(u32, u32, u32)>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    if max == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for total in (0..=r / max).rev() {
        for kj in (0..=total).rev() {
            for mut rest in bicolored(r - total * max, max - 1) {
                if total > 0 {
                    rest.insert(0, (max, kj, total - kj));
                }
                out.push(rest);
            }
        }
    }
    out
}

/// All solutions with `0 ≤ ℓ ≤ n`, ordered by `ℓ` and then by the
/// two-coloured partition with the largest part first.
pub fn laguerre_partitions(n: u32, k: u32) -> Vec<LaguerrePartitionSolution> {
    let mut out = Vec::new();
    for ell in 0..=n.min(k) {
        for parts in bicolored(k - ell, k - ell) {
            let mut sol = LaguerrePartitionSolution {
                ell,
                ..Default::default()
            };
            for (j, kj, lj) in parts {
                if kj > 0 {
                    sol.kparts.insert(j, kj);
                }
                if lj > 0 {
                    sol.ellparts.insert(j, lj);
                }
            }
            out.push(sol);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(0), vec![PartitionSolution::default()]);
        let p5: Vec<Vec<u32>> = partitions_of(5).iter().map(|p| p.descending()).collect();
        assert_eq!(
            p5,
            vec![
                vec![5],
                vec![4, 1],
                vec![3, 2],
                vec![3, 1, 1],
                vec![2, 2, 1],
                vec![2, 1, 1, 1],
                vec![1, 1, 1, 1, 1]
            ]
        );
        assert_eq!(partitions_of(10).len(), 42);
    }

    #[test]
    fn every_partition_sums_to_target() {
        for n in 0..=12 {
            for p in partitions_of(n) {
                assert_eq!(p.total(), n);
            }
        }
    }

    #[test]
    fn laguerre_counts() {
        let sols = laguerre_partitions(3, 3);
        assert_eq!(sols.len(), 18);
        assert!(sols.iter().all(|s| s.total() == 3));
        let distinct: BTreeSet<_> = sols.iter().collect();
        assert_eq!(distinct.len(), 18);
        assert_eq!(
            laguerre_partitions(4, 0),
            vec![LaguerrePartitionSolution::default()]
        );
        let zero_n = laguerre_partitions(0, 2);
        assert!(zero_n.iter().all(|s| s.ell == 0));
        assert_eq!(zero_n.len(), 5);
    }

    #[test]
    fn rendering() {
        let p = PartitionSolution::from_parts([1, 1, 1, 2]);
        assert_eq!(p.to_string(), "n1 = 3, n2 = 1");
        let s = LaguerrePartitionSolution {
            ell: 1,
            kparts: BTreeMap::from([(1, 1)]),
            ellparts: BTreeMap::from([(1, 1)]),
        };
        assert_eq!(s.to_string(), "k1 = 1, l1 = 1, l = 1");
    }
}
