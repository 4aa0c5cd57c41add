use fixedbitset::FixedBitSet;
use std::ops::ControlFlow;

use super::Graph;

/// Visits every chordless (induced) cycle with at least `min_len` nodes,
/// `min_len >= 3`.
///
/// Each cycle is visited once, as the node sequence that starts at its
/// smallest node and whose second node is smaller than its last. Cycles
/// come in ascending order of start node, then in DFS order over
/// ascending neighbours.
pub fn for_each_induced_cycle<F>(g: &Graph, min_len: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let min_len = min_len.max(3);
    let n = g.n();
    let mut path = Vec::with_capacity(n);
    for start in 0..n {
        path.clear();
        path.push(start);
        let mut on_path = FixedBitSet::with_capacity(n);
        on_path.insert(start);
        // Nothing is interior yet, so nothing is forbidden.
        let forbidden = FixedBitSet::with_capacity(n);
        for first in g.neighbours(start).ones().filter(|&u| u > start) {
            path.push(first);
            on_path.insert(first);
            extend(g, min_len, &mut path, &mut on_path, &forbidden, &mut visit)?;
            on_path.set(first, false);
            path.pop();
        }
    }
    ControlFlow::Continue(())
}

fn extend<F>(
    g: &Graph,
    min_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut FixedBitSet,
    forbidden: &FixedBitSet,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let start = path[0];
    let last = *path.last().expect("path nonempty");
    let candidates: Vec<usize> = g
        .neighbours(last)
        .ones()
        .filter(|&u| u > start && !on_path.contains(u) && !forbidden.contains(u))
        .collect();
    // `last` becomes interior once we move past it; its neighbours are
    // then chords for anything further along.
    let mut next_forbidden = forbidden.clone();
    if path.len() >= 2 {
        next_forbidden.union_with(g.neighbours(last));
    }
    for u in candidates {
        path.push(u);
        if g.has_edge(u, start) {
            if path.len() >= min_len && path[1] < u {
                visit(path)?;
            }
        } else {
            on_path.insert(u);
            extend(g, min_len, path, on_path, &next_forbidden, visit)?;
            on_path.set(u, false);
        }
        path.pop();
    }
    ControlFlow::Continue(())
}

/// The first induced cycle (in [`for_each_induced_cycle`] order) with at
/// least `min_len` nodes satisfying `accept`.
pub fn find_induced_cycle(
    g: &Graph,
    min_len: usize,
    mut accept: impl FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    let mut found = None;
    let _ = for_each_induced_cycle(g, min_len, |c| {
        if accept(c) {
            found = Some(c.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}
