//! Structured facet enumeration: pivot, x-path, and a vertex-disjoint
//! y-path pair, plus decomposition of arbitrary vertex sets back into
//! that shape.

use std::collections::BTreeSet;

use crate::error::{Error, FacetDefect, Result};
use crate::grid::{
    enumerate_nonintersecting_pairs, enumerate_paths, Cell, GridShape, LatticePath, Layer, Vertex,
};
use crate::ideal;

/// A facet in its path decomposition: pivot mu = (i, j), an X-layer path
/// (i,j) -> (m,n), and vertex-disjoint Y-layer paths (1,1) -> (i,n) and
/// (2,1) -> (m,j).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FacetProfile {
    shape: GridShape,
    mu: Cell,
    x_path: LatticePath,
    y_upper: LatticePath,
    y_lower: LatticePath,
}

impl FacetProfile {
    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn mu(&self) -> Cell {
        self.mu
    }

    pub fn x_path(&self) -> &LatticePath {
        &self.x_path
    }

    pub fn y_upper(&self) -> &LatticePath {
        &self.y_upper
    }

    pub fn y_lower(&self) -> &LatticePath {
        &self.y_lower
    }

    /// Union of the three paths' vertices; always 2(m+n)-2 of them.
    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        let mut out = BTreeSet::new();
        out.extend(self.x_path.vertices());
        out.extend(self.y_upper.vertices());
        out.extend(self.y_lower.vertices());
        out
    }
}

/// Convenience alias matching the operation name used elsewhere.
pub fn facet_vertex_set(profile: &FacetProfile) -> BTreeSet<Vertex> {
    profile.vertex_set()
}

/// Pivots in enumeration order: row descending, then column descending,
/// skipping (m, n).
pub fn pivots(shape: GridShape) -> Vec<Cell> {
    let mut out = Vec::new();
    for row in (1..=shape.rows()).rev() {
        for col in (1..=shape.cols()).rev() {
            if (row, col) != (shape.rows(), shape.cols()) {
                out.push(Cell::new(row, col));
            }
        }
    }
    out
}

fn ascending_by_entry_cols(paths: &mut [LatticePath]) {
    paths.sort_by_key(|a| a.entry_cols());
}

/// All facets with the given pivot, ordered by (x-path, upper, lower)
/// entry-column vectors ascending.
fn facets_for_pivot(shape: GridShape, pivot: Cell) -> Vec<FacetProfile> {
    let corner = Cell::new(shape.rows(), shape.cols());
    let mut x_paths = enumerate_paths(shape, Layer::X, pivot, corner).expect("pivot is in grid");
    ascending_by_entry_cols(&mut x_paths);
    let upper_end = Cell::new(pivot.row, shape.cols());
    let lower_end = Cell::new(shape.rows(), pivot.col);
    let mut pairs = enumerate_nonintersecting_pairs(shape, upper_end, lower_end)
        .expect("pair endpoints are in grid");
    pairs.sort_by(|(ua, la), (ub, lb)| {
        ua.entry_cols()
            .cmp(&ub.entry_cols())
            .then_with(|| la.entry_cols().cmp(&lb.entry_cols()))
    });
    let mut out = Vec::with_capacity(x_paths.len() * pairs.len());
    for x_path in &x_paths {
        for (y_upper, y_lower) in &pairs {
            out.push(FacetProfile {
                shape,
                mu: pivot,
                x_path: x_path.clone(),
                y_upper: y_upper.clone(),
                y_lower: y_lower.clone(),
            });
        }
    }
    out
}

/// Every facet, streamed pivot by pivot in the canonical total order
/// (pivot row descending, pivot column descending, then entry-column
/// vectors ascending).
pub fn enumerate_facets(shape: GridShape) -> impl Iterator<Item = FacetProfile> {
    pivots(shape)
        .into_iter()
        .flat_map(move |pivot| facets_for_pivot(shape, pivot))
}

/// Recover the path decomposition of a facet vertex set.
pub fn decompose(shape: GridShape, facet: &BTreeSet<Vertex>) -> Result<FacetProfile> {
    let expected = (2 * (shape.rows() + shape.cols()) - 2) as usize;
    if facet.len() != expected {
        return Err(Error::NotAFacet(FacetDefect::WrongCardinality {
            expected,
            actual: facet.len(),
        }));
    }
    let corner = Cell::new(shape.rows(), shape.cols());
    if !facet.contains(&Vertex::new(Layer::X, corner.row, corner.col)) {
        return Err(Error::NotAFacet(FacetDefect::MissingCornerX));
    }

    let x_cells: Vec<Cell> = facet
        .iter()
        .filter(|v| v.layer == Layer::X)
        .map(|v| v.cell())
        .collect();
    let x_path = LatticePath::from_cells(Layer::X, &x_cells)
        .ok_or(Error::NotAFacet(FacetDefect::XVerticesNotAPath))?;
    if x_path.end() != corner {
        return Err(Error::NotAFacet(FacetDefect::XVerticesNotAPath));
    }
    let mu = x_path.start();
    if mu == corner {
        return Err(Error::NotAFacet(FacetDefect::PivotIsCorner));
    }

    let y_cells: BTreeSet<Cell> = facet
        .iter()
        .filter(|v| v.layer == Layer::Y)
        .map(|v| v.cell())
        .collect();
    let upper_end = Cell::new(mu.row, shape.cols());
    let lower_end = Cell::new(shape.rows(), mu.col);
    let (y_upper, y_lower) = split_y_paths(&y_cells, upper_end, lower_end)
        .ok_or(Error::NotAFacet(FacetDefect::YVerticesNotDecomposable))?;

    let profile = FacetProfile {
        shape,
        mu,
        x_path,
        y_upper,
        y_lower,
    };
    if !ideal::is_face(&ideal::generators(shape), facet) {
        return Err(Error::NotAFacet(FacetDefect::NotAFace));
    }
    Ok(profile)
}

/// Split a union of two vertex-disjoint monotone paths into (upper, lower).
///
/// The upper path is traced greedily from (1,1), preferring Right, and
/// stops at its known endpoint; for genuine disjoint non-crossing pairs
/// the lower path's cells in any row sit strictly left of the upper's, so
/// the greedy trace cannot stray onto the lower path.
fn split_y_paths(
    cells: &BTreeSet<Cell>,
    upper_end: Cell,
    lower_end: Cell,
) -> Option<(LatticePath, LatticePath)> {
    let mut remaining = cells.clone();
    let start = Cell::new(1, 1);
    if !remaining.remove(&start) {
        return None;
    }
    let mut upper_cells = vec![start];
    let mut cur = start;
    while cur != upper_end {
        let right = Cell::new(cur.row, cur.col + 1);
        let down = Cell::new(cur.row + 1, cur.col);
        if remaining.remove(&right) {
            cur = right;
        } else if remaining.remove(&down) {
            cur = down;
        } else {
            return None;
        }
        upper_cells.push(cur);
    }
    let upper = LatticePath::from_cells(Layer::Y, &upper_cells)?;
    let lower_cells: Vec<Cell> = remaining.into_iter().collect();
    let lower = LatticePath::from_cells(Layer::Y, &lower_cells)?;
    if lower.start() != Cell::new(2, 1) || lower.end() != lower_end {
        return None;
    }
    Some((upper, lower))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{classify_region, Region};
    use crate::oracle;

    fn shape(m: u32, n: u32) -> GridShape {
        GridShape::new(m, n).unwrap()
    }

    #[test]
    fn facet_counts_small() {
        assert_eq!(enumerate_facets(shape(2, 2)).count(), 4);
        assert_eq!(enumerate_facets(shape(3, 3)).count(), 36);
    }

    #[test]
    fn pivot_multiset_2x2() {
        let pivots: Vec<Cell> = enumerate_facets(shape(2, 2)).map(|f| f.mu()).collect();
        assert_eq!(
            pivots,
            vec![
                Cell::new(2, 1),
                Cell::new(1, 2),
                Cell::new(1, 1),
                Cell::new(1, 1)
            ]
        );
    }

    #[test]
    fn every_facet_contains_the_corner() {
        for f in enumerate_facets(shape(3, 4)) {
            assert!(f.vertex_set().contains(&Vertex::x(3, 4)));
        }
    }

    #[test]
    fn profiles_have_distinct_vertex_sets() {
        let sets: BTreeSet<BTreeSet<Vertex>> = enumerate_facets(shape(3, 3))
            .map(|f| f.vertex_set())
            .collect();
        assert_eq!(sets.len(), 36);
    }

    #[test]
    fn forced_facet_2x2_pivot_21() {
        let f: Vec<FacetProfile> = enumerate_facets(shape(2, 2))
            .filter(|f| f.mu() == Cell::new(2, 1))
            .collect();
        assert_eq!(f.len(), 1);
        let expected: BTreeSet<Vertex> = [
            Vertex::x(2, 1),
            Vertex::x(2, 2),
            Vertex::y(1, 1),
            Vertex::y(1, 2),
            Vertex::y(2, 2),
            Vertex::y(2, 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(f[0].vertex_set(), expected);
    }

    #[test]
    fn cardinalities_are_pure() {
        for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
            let expected = (2 * (m + n) - 2) as usize;
            for f in enumerate_facets(shape(m, n)) {
                assert_eq!(f.vertex_set().len(), expected);
            }
        }
    }

    #[test]
    fn forced_vertices_and_r4_exclusion() {
        for f in enumerate_facets(shape(2, 3)) {
            let set = f.vertex_set();
            let mu = f.mu();
            assert!(set.contains(&Vertex::y(mu.row, 3)));
            assert!(set.contains(&Vertex::y(2, mu.col)));
            for v in &set {
                if v.layer == Layer::Y {
                    assert_ne!(classify_region(mu, v.cell()), Region::R4);
                }
            }
        }
    }

    #[test]
    fn matches_oracle_facet_sets() {
        for (m, n) in [(2, 2), (2, 3), (3, 3)] {
            let structured: BTreeSet<BTreeSet<Vertex>> = enumerate_facets(shape(m, n))
                .map(|f| f.vertex_set())
                .collect();
            let brute = oracle::enumerate_facets_bruteforce(shape(m, n)).unwrap();
            assert_eq!(structured, brute, "({m},{n})");
        }
    }

    #[test]
    fn decompose_round_trips() {
        for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
            for f in enumerate_facets(shape(m, n)) {
                let set = f.vertex_set();
                let d = decompose(shape(m, n), &set).unwrap();
                assert_eq!(d.vertex_set(), set);
                assert_eq!(d.mu(), f.mu());
                assert_eq!(d.x_path(), f.x_path());
                assert_eq!(d.y_upper(), f.y_upper());
                assert_eq!(d.y_lower(), f.y_lower());
            }
        }
    }

    #[test]
    fn decompose_special_case_facet() {
        let set: BTreeSet<Vertex> = [
            Vertex::x(2, 1),
            Vertex::x(2, 2),
            Vertex::y(1, 1),
            Vertex::y(1, 2),
            Vertex::y(2, 2),
            Vertex::y(2, 1),
        ]
        .into_iter()
        .collect();
        let d = decompose(shape(2, 2), &set).unwrap();
        assert_eq!(d.mu(), Cell::new(2, 1));
        assert_eq!(
            d.y_upper().cells(),
            vec![Cell::new(1, 1), Cell::new(1, 2), Cell::new(2, 2)]
        );
        assert_eq!(d.y_lower().cells(), vec![Cell::new(2, 1)]);
    }

    #[test]
    fn decompose_rejects_non_facets() {
        let s = shape(2, 2);
        let f = enumerate_facets(s).next().unwrap();
        let mut short = f.vertex_set();
        let v = *short.iter().next().unwrap();
        short.remove(&v);
        assert!(matches!(
            decompose(s, &short),
            Err(Error::NotAFacet(FacetDefect::WrongCardinality { .. }))
        ));

        let mut no_corner = f.vertex_set();
        no_corner.remove(&Vertex::x(2, 2));
        no_corner.insert(Vertex::y(2, 2));
        let err = decompose(s, &no_corner);
        assert!(err.is_err());
    }

    #[test]
    fn y_decomposition_is_unique() {
        // exhaustive search over all (upper, lower) pairs per facet
        for (m, n) in [(2, 2), (2, 3), (3, 3)] {
            let s = shape(m, n);
            for f in enumerate_facets(s) {
                let y_set: BTreeSet<Cell> = f
                    .vertex_set()
                    .iter()
                    .filter(|v| v.layer == Layer::Y)
                    .map(|v| v.cell())
                    .collect();
                let upper_end = Cell::new(f.mu().row, n);
                let lower_end = Cell::new(m, f.mu().col);
                let pairs = enumerate_nonintersecting_pairs(s, upper_end, lower_end).unwrap();
                let matching = pairs
                    .iter()
                    .filter(|(u, l)| {
                        let mut union: BTreeSet<Cell> = u.cells().into_iter().collect();
                        union.extend(l.cells());
                        union == y_set
                    })
                    .count();
                assert_eq!(matching, 1);
            }
        }
    }
}
