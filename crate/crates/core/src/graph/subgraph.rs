use super::{Graph, Pattern};

/// Does `host` contain a (not necessarily induced) subgraph isomorphic to
/// `pattern`? Backtracking search for an injective homomorphism, with
/// degree pruning.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    let order = search_order(pattern);
    let mut image = vec![usize::MAX; pattern.vertex_count()];
    let mut used = vec![false; host.vertex_count()];
    place(host, pattern, &order, 0, &mut image, &mut used)
}

pub fn contains_pattern(host: &Graph, pattern: Pattern) -> bool {
    contains_subgraph(host, &pattern.graph())
}

/// Highest-degree vertex first, then repeatedly the unplaced vertex with
/// the most already-placed neighbors.
fn search_order(p: &Graph) -> Vec<usize> {
    let n = p.vertex_count();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = p.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (back, p.neighbors(v).len(), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

fn place(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&p) = order.get(depth) else {
        return true;
    };
    let need = pattern.neighbors(p).len();
    let anchor = pattern
        .neighbors(p)
        .iter()
        .find(|&&q| image[q] != usize::MAX)
        .map(|&q| image[q]);
    let candidates: Vec<usize> = match anchor {
        Some(a) => host.neighbors(a).to_vec(),
        None => (0..host.vertex_count()).collect(),
    };
    for h in candidates {
        if used[h] || host.neighbors(h).len() < need {
            continue;
        }
        let consistent = pattern
            .neighbors(p)
            .iter()
            .all(|&q| image[q] == usize::MAX || host.has_edge(image[q], h));
        if !consistent {
            continue;
        }
        image[p] = h;
        used[h] = true;
        if place(host, pattern, order, depth + 1, image, used) {
            return true;
        }
        used[h] = false;
        image[p] = usize::MAX;
    }
    false
}
