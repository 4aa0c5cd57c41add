use fixedbitset::FixedBitSet;

use super::Graph;

/// All inclusion-maximal cliques, each as an ascending node list, sorted
/// lexicographically.
///
/// Bron–Kerbosch with Tomita pivoting: the pivot is the vertex of
/// `P ∪ X` with the most neighbours in `P`.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut candidates = FixedBitSet::with_capacity(n);
    candidates.insert_range(..);
    let excluded = FixedBitSet::with_capacity(n);
    let mut current = Vec::new();
    expand(g, &mut current, candidates, excluded, &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn expand(
    g: &Graph,
    current: &mut Vec<usize>,
    mut candidates: FixedBitSet,
    mut excluded: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_clear() {
        if excluded.is_clear() {
            out.push(current.clone());
        }
        return;
    }
    let pivot = candidates
        .ones()
        .chain(excluded.ones())
        .max_by_key(|&u| g.neighbours(u).intersection_count(&candidates))
        .expect("candidates nonempty");
    let mut branch = candidates.clone();
    branch.difference_with(g.neighbours(pivot));
    for v in branch.ones() {
        let nv = g.neighbours(v);
        let mut next_candidates = candidates.clone();
        next_candidates.intersect_with(nv);
        let mut next_excluded = excluded.clone();
        next_excluded.intersect_with(nv);
        current.push(v);
        expand(g, current, next_candidates, next_excluded, out);
        current.pop();
        candidates.set(v, false);
        excluded.insert(v);
    }
}
