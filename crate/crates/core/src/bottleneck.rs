//! Exact bottleneck distance between barcodes.
//!
//! Bars of either barcode may be matched to each other (sup-norm cost on
//! `(birth, death)`) or to the diagonal (half their length). The optimum is
//! always one of these candidate costs, so it is found by binary search over
//! the sorted candidates with a perfect-matching test on each threshold graph.

use crate::matching::Bipartite;
use crate::rat::Rat;
use crate::restriction::Bar;

pub fn bar_cost(a: &Bar, b: &Bar) -> Rat {
    Rat::max_of(&(&a.birth - &b.birth).abs(), &(&a.death - &b.death).abs())
}

pub fn diagonal_cost(a: &Bar) -> Rat {
    a.length() / Rat::from_int(2)
}

/// Left vertices: bars of `a`, then one diagonal slot per bar of `b`.
/// Right vertices: bars of `b`, then one diagonal slot per bar of `a`.
struct Instance {
    pair: Vec<Vec<Rat>>,
    diag_a: Vec<Rat>,
    diag_b: Vec<Rat>,
}

impl Instance {
    fn new(a: &[Bar], b: &[Bar]) -> Self {
        Instance {
            pair: a.iter().map(|x| b.iter().map(|y| bar_cost(x, y)).collect()).collect(),
            diag_a: a.iter().map(diagonal_cost).collect(),
            diag_b: b.iter().map(diagonal_cost).collect(),
        }
    }

    fn candidates(&self) -> Vec<Rat> {
        let mut c: Vec<Rat> = self.pair.iter().flatten().cloned().collect();
        c.extend(self.diag_a.iter().cloned());
        c.extend(self.diag_b.iter().cloned());
        c.push(Rat::zero());
        c.sort();
        c.dedup();
        c
    }

    fn feasible(&self, threshold: &Rat) -> bool {
        let (na, nb) = (self.diag_a.len(), self.diag_b.len());
        let n = na + nb;
        let mut g = Bipartite::new(n, n);
        for i in 0..na {
            for j in 0..nb {
                if self.pair[i][j] <= *threshold {
                    g.add_edge(i, j);
                }
            }
            if self.diag_a[i] <= *threshold {
                g.add_edge(i, nb + i);
            }
        }
        for j in 0..nb {
            if self.diag_b[j] <= *threshold {
                g.add_edge(na + j, j);
            }
            // diagonal to diagonal is free
            for i in 0..na {
                g.add_edge(na + j, nb + i);
            }
        }
        g.max_matching() == n
    }
}

pub fn bottleneck_distance(a: &[Bar], b: &[Bar]) -> Rat {
    if a.is_empty() && b.is_empty() {
        return Rat::zero();
    }
    let inst = Instance::new(a, b);
    let candidates = inst.candidates();
    // the largest candidate is always feasible: everything to the diagonal
    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if inst.feasible(&candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    candidates[lo].clone()
}
