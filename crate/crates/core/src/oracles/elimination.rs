use super::{bits, check_mask_cap, full_mask, masks};
use crate::digraph::Digraph;
use crate::error::Result;

/// An elimination order with the support size of each vertex when it was
/// eliminated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrdering {
    pub order: Vec<usize>,
    pub supports: Vec<usize>,
}

impl EliminationOrdering {
    pub fn width(&self) -> usize {
        self.supports.iter().copied().max().unwrap_or(0)
    }
}

/// Out-neighbours of `v` among the remaining vertices once `eliminated` are
/// gone: eliminating `x` joins each remaining in-neighbour of `x` to each
/// remaining out-neighbour, so these are the vertices reachable from `v`
/// through eliminated vertices only.
fn support(out: &[u64], v: usize, eliminated: u64) -> u64 {
    let mut seen = 1u64 << v;
    let mut frontier = 1u64 << v;
    let mut found = 0;
    while frontier != 0 {
        let mut next = 0;
        for u in bits(frontier) {
            next |= out[u];
        }
        next &= !seen;
        seen |= next;
        found |= next & !eliminated;
        frontier = next & eliminated;
    }
    found
}

/// Kelly-width as one plus the least, over elimination orders, of the
/// largest support.
pub fn kellywidth_by_elimination(g: &Digraph, n_cap: usize) -> Result<(usize, EliminationOrdering)> {
    let n = g.vertex_count();
    check_mask_cap("elimination search", n, n_cap.min(24))?;
    if n == 0 {
        let empty = EliminationOrdering { order: vec![], supports: vec![] };
        return Ok((0, empty));
    }
    let (out, _) = masks(g);
    let size = 1usize << n;
    // best[E]: least possible largest support when E is eliminated first
    let mut best = vec![u8::MAX; size];
    best[0] = 0;
    for e in 1..size as u64 {
        best[e as usize] = bits(e)
            .map(|v| {
                let before = e & !(1 << v);
                best[before as usize].max(support(&out, v, before).count_ones() as u8)
            })
            .min()
            .expect("nonempty");
    }
    let mut order = Vec::with_capacity(n);
    let mut supports = Vec::with_capacity(n);
    let mut e = full_mask(n);
    while e != 0 {
        let target = best[e as usize];
        let v = bits(e)
            .find(|&v| {
                let before = e & !(1 << v);
                best[before as usize].max(support(&out, v, before).count_ones() as u8) == target
            })
            .expect("some vertex attains the optimum");
        e &= !(1 << v);
        order.push(v);
        supports.push(support(&out, v, e).count_ones() as usize);
    }
    order.reverse();
    supports.reverse();
    let ordering = EliminationOrdering { order, supports };
    Ok((ordering.width() + 1, ordering))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::fixtures::*;

    #[test]
    fn examples() {
        let (w, ord) = kellywidth_by_elimination(&c3(), 9).unwrap();
        assert_eq!(w, 2);
        assert_eq!(ord.order.len(), 3);
        assert_eq!(kellywidth_by_elimination(&Digraph::new(4), 9).unwrap().0, 1);
        assert_eq!(kellywidth_by_elimination(&bi_clique(3), 9).unwrap().0, 3);
        assert!(kellywidth_by_elimination(&Digraph::new(10), 9).is_err());
    }

    #[test]
    fn supports_follow_fill_in() {
        // eliminating a first leaves c → b as a fill arc
        let (_, ord) = kellywidth_by_elimination(&c3(), 9).unwrap();
        let mut eliminated = 0u64;
        let (out, _) = masks(&c3());
        for (&v, &s) in ord.order.iter().zip(&ord.supports) {
            assert_eq!(support(&out, v, eliminated).count_ones() as usize, s);
            eliminated |= 1 << v;
        }
    }
}
