//! Schreier–Sims order computation for permutation groups given by generators.

use std::collections::HashMap;

/// A permutation of `0..n`; `p[x]` is the image of x.
pub type Perm = Vec<u16>;

fn identity(n: usize) -> Perm {
    (0..n as u16).collect()
}

fn is_identity(p: &[u16]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x as usize)
}

/// p ∘ q: apply q, then p.
pub fn compose(p: &[u16], q: &[u16]) -> Perm {
    q.iter().map(|&x| p[x as usize]).collect()
}

pub fn inverse(p: &[u16]) -> Perm {
    let mut inv = vec![0u16; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize] = i as u16;
    }
    inv
}

struct Level {
    point: usize,
    /// orbit point ↦ element mapping the base point to it
    transversal: HashMap<usize, Perm>,
    orbit: Vec<usize>,
}

/// A base and strong generating set.
pub struct StabilizerChain {
    n: usize,
    base: Vec<usize>,
    strong: Vec<Perm>,
    levels: Vec<Option<Level>>,
}

impl StabilizerChain {
    pub fn new(n: usize, generators: &[Perm]) -> Self {
        let strong: Vec<Perm> = generators.iter().filter(|g| !is_identity(g)).cloned().collect();
        let mut chain = StabilizerChain { n, base: Vec::new(), strong, levels: Vec::new() };
        for g in chain.strong.clone() {
            if chain.base.iter().all(|&b| g[b] as usize == b) {
                let moved = (0..n).find(|&x| g[x] as usize != x).expect("non-identity");
                chain.base.push(moved);
            }
        }
        chain.levels = (0..chain.base.len()).map(|_| None).collect();
        chain.complete();
        chain
    }

    fn level_gens(&self, level: usize) -> Vec<&Perm> {
        self.strong.iter().filter(|g| self.base[..level].iter().all(|&b| g[b] as usize == b)).collect()
    }

    fn level(&mut self, level: usize) -> &Level {
        if self.levels[level].is_none() {
            let point = self.base[level];
            let gens: Vec<Perm> = self.level_gens(level).into_iter().cloned().collect();
            let mut transversal = HashMap::new();
            transversal.insert(point, identity(self.n));
            let mut orbit = vec![point];
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for g in &gens {
                    let y = g[x] as usize;
                    if !transversal.contains_key(&y) {
                        let u = compose(g, &transversal[&x]);
                        transversal.insert(y, u);
                        orbit.push(y);
                    }
                }
            }
            self.levels[level] = Some(Level { point, transversal, orbit });
        }
        self.levels[level].as_ref().expect("just filled")
    }

    /// Sifts g through levels `from..`; returns the residue and the level where it stopped.
    fn sift(&mut self, mut g: Perm, from: usize) -> (Perm, usize) {
        for level in from..self.base.len() {
            let lv = self.level(level);
            let beta = g[lv.point] as usize;
            match lv.transversal.get(&beta) {
                Some(u) => g = compose(&inverse(u), &g),
                None => return (g, level),
            }
        }
        let depth = self.base.len();
        (g, depth)
    }

    fn complete(&mut self) {
        let mut i = self.base.len();
        while i > 0 {
            let level = i - 1;
            let gens: Vec<Perm> = self.level_gens(level).into_iter().cloned().collect();
            let lv = self.level(level);
            let orbit = lv.orbit.clone();
            let trans: HashMap<usize, Perm> = lv.transversal.clone();
            let mut extended = None;
            'search: for &beta in &orbit {
                for s in &gens {
                    let image = s[beta] as usize;
                    let schreier = compose(&inverse(&trans[&image]), &compose(s, &trans[&beta]));
                    if is_identity(&schreier) {
                        continue;
                    }
                    let (h, j) = self.sift(schreier, level + 1);
                    if !is_identity(&h) {
                        extended = Some((h, j));
                        break 'search;
                    }
                }
            }
            match extended {
                Some((h, j)) => {
                    if j == self.base.len() {
                        let moved = (0..self.n).find(|&x| h[x] as usize != x).expect("non-identity");
                        self.base.push(moved);
                        self.levels.push(None);
                    }
                    self.strong.push(h);
                    for l in 0..=j {
                        self.levels[l] = None;
                    }
                    i = j + 1;
                }
                None => i -= 1,
            }
        }
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// Product of the basic orbit lengths.
    pub fn order(&mut self) -> u128 {
        (0..self.base.len()).map(|l| self.level(l).orbit.len() as u128).product()
    }

    pub fn contains(&mut self, g: &[u16]) -> bool {
        let (h, j) = self.sift(g.to_vec(), 0);
        j == self.base.len() && is_identity(&h)
    }
}

/// Order of the group generated by `generators`, acting on `0..n`.
pub fn group_order(n: usize, generators: &[Perm]) -> u128 {
    StabilizerChain::new(n, generators).order()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Perm {
        (0..n).map(|i| ((i + 1) % n) as u16).collect()
    }

    fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut p = identity(n);
        p.swap(a, b);
        p
    }

    #[test]
    fn symmetric_and_alternating() {
        for n in 2..=7 {
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(group_order(n, &[cycle(n), transposition(n, 0, 1)]), fact);
        }
        // A7 from 3-cycles (0 1 i)
        let gens: Vec<Perm> = (2..7)
            .map(|i| {
                let mut p = identity(7);
                p[0] = 1;
                p[1] = i as u16;
                p[i] = 0;
                p
            })
            .collect();
        assert_eq!(group_order(7, &gens), 2520);
    }

    #[test]
    fn cyclic_and_trivial() {
        assert_eq!(group_order(5, &[cycle(5)]), 5);
        assert_eq!(group_order(4, &[identity(4)]), 1);
        let mut chain = StabilizerChain::new(6, &[cycle(6)]);
        assert!(chain.contains(&compose(&cycle(6), &cycle(6))));
        assert!(!chain.contains(&transposition(6, 0, 1)));
    }

    #[test]
    fn direct_product() {
        // ⟨(0 1 2), (3 4)⟩ ≅ Z6 on 5 points
        let a: Perm = vec![1, 2, 0, 3, 4];
        let b: Perm = vec![0, 1, 2, 4, 3];
        assert_eq!(group_order(5, &[a, b]), 6);
    }
}
