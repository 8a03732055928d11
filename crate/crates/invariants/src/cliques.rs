//! Maximum cliques by branch and bound over bitset candidate sets.

use graph_core::Graph;

use crate::InvariantError;

/// True iff some clique has at least `q` vertices.
pub fn has_clique_of_size(g: &Graph, q: usize) -> bool {
    if q == 0 {
        return true;
    }
    extend(g, g.vertices().bits(), q)
}

fn extend(g: &Graph, mut cand: u32, need: usize) -> bool {
    loop {
        if (cand.count_ones() as usize) < need {
            return false;
        }
        if need == 1 {
            return true;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if extend(g, cand & g.row(v), need - 1) {
            return true;
        }
    }
}

/// Size of a maximum clique.
pub fn clique_number(g: &Graph) -> Result<usize, InvariantError> {
    if g.n() == 0 {
        return Err(InvariantError::EmptyGraph);
    }
    let mut best = 0;
    grow(g, g.vertices().bits(), 0, &mut best);
    Ok(best)
}

fn grow(g: &Graph, mut cand: u32, size: usize, best: &mut usize) {
    while cand != 0 {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if size + 1 > *best {
            *best = size + 1;
        }
        grow(g, cand & g.row(v), size + 1, best);
    }
}

/// True iff vertex `v` is in every maximum clique and no other vertex is.
///
/// A vertex lies in every maximum clique exactly when deleting it drops
/// the clique number.
pub fn clique_intersection_exactly(g: &Graph, v: usize) -> Result<bool, InvariantError> {
    if v >= g.n() {
        return Err(InvariantError::VertexOutOfRange { n: g.n(), vertex: v });
    }
    let omega = clique_number(g)?;
    for x in 0..g.n() {
        let in_every_maximum_clique = !has_clique_of_size(&g.delete_vertex(x), omega);
        if in_every_maximum_clique != (x == v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff no vertex lies in every maximum clique.
pub fn empty_clique_intersection(g: &Graph) -> Result<bool, InvariantError> {
    if g.n() == 0 {
        return Err(InvariantError::EmptyGraph);
    }
    let omega = clique_number(g)?;
    for x in 0..g.n() {
        if !has_clique_of_size(&g.delete_vertex(x), omega) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::catalog;

    fn two_triangles() -> Graph {
        Graph::new(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap()
    }

    #[test]
    fn clique_number_examples() {
        assert_eq!(clique_number(&catalog::cycle(5).unwrap()), Ok(2));
        assert_eq!(clique_number(&catalog::k6_minus_matching().unwrap()), Ok(3));
        assert_eq!(clique_number(&catalog::k4_c5_hub().unwrap()), Ok(5));
        assert_eq!(clique_number(&catalog::butterfly().unwrap()), Ok(3));
        assert_eq!(clique_number(&catalog::edgeless(4).unwrap()), Ok(1));
        assert_eq!(
            clique_number(&Graph::edgeless(0).unwrap()),
            Err(InvariantError::EmptyGraph)
        );
    }

    #[test]
    fn clique_decision_boundaries() {
        let k4 = catalog::complete(4).unwrap();
        assert!(has_clique_of_size(&k4, 0));
        assert!(has_clique_of_size(&k4, 4));
        assert!(!has_clique_of_size(&k4, 5));
        assert!(!has_clique_of_size(&catalog::cycle(6).unwrap(), 3));
    }

    #[test]
    fn hub_vertices_meet_every_maximum_clique() {
        // Both wheels and the butterfly put their center in every triangle.
        let w4 = catalog::wheel(4).unwrap();
        assert_eq!(clique_intersection_exactly(&w4, 4), Ok(true));
        for rim in 0..4 {
            assert_eq!(clique_intersection_exactly(&w4, rim), Ok(false));
        }
        assert_eq!(clique_intersection_exactly(&catalog::butterfly().unwrap(), 4), Ok(true));
    }

    #[test]
    fn complete_graph_has_no_single_vertex_intersection() {
        let k4 = catalog::complete(4).unwrap();
        for v in 0..4 {
            assert_eq!(clique_intersection_exactly(&k4, v), Ok(false));
        }
        assert_eq!(
            clique_intersection_exactly(&k4, 4),
            Err(InvariantError::VertexOutOfRange { n: 4, vertex: 4 })
        );
    }

    #[test]
    fn empty_intersection_examples() {
        assert_eq!(empty_clique_intersection(&catalog::cycle(4).unwrap()), Ok(true));
        assert_eq!(empty_clique_intersection(&two_triangles()), Ok(true));
        // Both maximum cliques of P3 share the middle vertex.
        assert_eq!(empty_clique_intersection(&catalog::path(3).unwrap()), Ok(false));
        assert_eq!(empty_clique_intersection(&Graph::edgeless(1).unwrap()), Ok(false));
        assert_eq!(
            empty_clique_intersection(&Graph::edgeless(0).unwrap()),
            Err(InvariantError::EmptyGraph)
        );
    }

    #[test]
    fn lone_vertex_is_the_whole_intersection() {
        assert_eq!(clique_intersection_exactly(&Graph::edgeless(1).unwrap(), 0), Ok(true));
    }
}
