use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

/// Exact girth by breadth-first search from every node.
///
/// A non-tree edge `(u, w)` met while searching from `s` closes a walk of
/// length `dist[u] + dist[w] + 1` through `s`, which contains a cycle no
/// longer than that; searching from a node on a shortest cycle finds it
/// exactly. Each search stops once it cannot beat the best cycle so far.
pub(crate) fn girth_of(adj: &[Vec<usize>]) -> Option<usize> {
    let n = adj.len();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        for &t in &touched {
            dist[t] = usize::MAX;
            parent[t] = usize::MAX;
        }
        touched.clear();
        queue.clear();
        dist[s] = 0;
        touched.push(s);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best {
                break;
            }
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

#[cfg(test)]
mod tests {
    use super::super::GeneralGraph;

    #[test]
    fn small_girths() {
        assert_eq!(GeneralGraph::cycle(6).unwrap().girth(), Some(6));
        assert_eq!(GeneralGraph::complete(4).girth(), Some(3));
        assert_eq!(GeneralGraph::complete_bipartite(3, 3).girth(), Some(4));
        assert_eq!(GeneralGraph::petersen().girth(), Some(5));
        assert_eq!(GeneralGraph::heawood().girth(), Some(6));
        assert_eq!(GeneralGraph::tutte_coxeter().girth(), Some(8));
        assert_eq!(GeneralGraph::hoffman_singleton().girth(), Some(5));
        assert_eq!(GeneralGraph::projective_plane_incidence(3).unwrap().girth(), Some(6));
    }

    #[test]
    fn forests_have_no_girth() {
        let path = GeneralGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.girth(), None);
        assert_eq!(GeneralGraph::new(0, []).unwrap().girth(), None);
    }
}
