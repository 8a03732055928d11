//! Induced-subgraph containment by backtracking over vertex images.

use graph_core::Graph;

/// An injective vertex map from a pattern into a host that preserves
/// edges and non-edges alike: `map[p]` is the image of pattern vertex p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and the induced condition pair by pair.
    pub fn respects(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.n() {
            return false;
        }
        let mut seen = 0u64;
        for &h in &self.map {
            if h >= host.n() || seen >> h & 1 == 1 {
                return false;
            }
            seen |= 1 << h;
        }
        for i in 0..pattern.n() {
            for j in (i + 1)..pattern.n() {
                if pattern.has_edge(i, j) != host.has_edge(self.map[i], self.map[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// First induced embedding of `pattern` into `host`, if any.
///
/// Pattern vertices are matched in descending-degree order, ties by
/// index, and host candidates ascending, so searching a graph for
/// itself returns the identity map.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    if pattern.n() > host.n() {
        return None;
    }
    let mut order: Vec<usize> = (0..pattern.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
    let mut map = vec![usize::MAX; pattern.n()];
    if assign(host, pattern, &order, 0, 0, &mut map) {
        Some(Embedding { map })
    } else {
        None
    }
}

fn assign(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    i: usize,
    used: u32,
    map: &mut [usize],
) -> bool {
    if i == order.len() {
        return true;
    }
    let p = order[i];
    let mut cand = host.vertices().bits() & !used;
    for &q in &order[..i] {
        cand &= if pattern.has_edge(p, q) {
            host.row(map[q])
        } else {
            !host.row(map[q])
        };
    }
    while cand != 0 {
        let h = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if host.degree(h) < pattern.degree(p) {
            continue;
        }
        map[p] = h;
        if assign(host, pattern, order, i + 1, used | 1 << h, map) {
            return true;
        }
    }
    map[p] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::catalog;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn star_inside_the_bridged_clique_star_graph() {
        let host = catalog::j_graph(4).unwrap();
        let pattern = catalog::complete_bipartite(1, 4).unwrap();
        let embedding = contains_induced(&host, &pattern).unwrap();
        assert!(embedding.respects(&host, &pattern));
    }

    #[test]
    fn wheel_inside_extended_five_cycles_with_a_hub() {
        let w5 = catalog::wheel(5).unwrap();
        for t in [3, 4] {
            let host = catalog::c5_ext(t).unwrap().add_dominating_vertex().unwrap();
            let embedding = contains_induced(&host, &w5).unwrap();
            assert!(embedding.respects(&host, &w5));
        }
    }

    #[test]
    fn complete_graph_has_no_induced_four_cycle() {
        let k4 = catalog::complete(4).unwrap();
        let c4 = catalog::cycle(4).unwrap();
        assert_eq!(contains_induced(&k4, &c4), None);
    }

    #[test]
    fn every_graph_contains_itself_identically() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(1..=9);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.gen_bool(0.5) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let embedding = contains_induced(&g, &g).unwrap();
            assert_eq!(embedding.map, (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn found_embeddings_always_respect_the_induced_condition() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let mut found = 0;
        for _ in 0..400 {
            let n_host = rng.gen_range(4..=9);
            let n_pat = rng.gen_range(2..=n_host);
            let build = |rng: &mut ChaCha8Rng, n: usize, p: f64| {
                let mut edges = Vec::new();
                for i in 0..n {
                    for j in (i + 1)..n {
                        if rng.gen_bool(p) {
                            edges.push((i, j));
                        }
                    }
                }
                Graph::new(n, &edges).unwrap()
            };
            let host = build(&mut rng, n_host, 0.5);
            let pattern = build(&mut rng, n_pat, 0.5);
            if let Some(embedding) = contains_induced(&host, &pattern) {
                assert!(embedding.respects(&host, &pattern));
                found += 1;
            }
        }
        assert!(found > 0, "sampling never produced an embedding");
    }

    #[test]
    fn oversized_patterns_never_embed() {
        let p3 = catalog::path(3).unwrap();
        let k4 = catalog::complete(4).unwrap();
        assert_eq!(contains_induced(&p3, &k4), None);
    }
}
