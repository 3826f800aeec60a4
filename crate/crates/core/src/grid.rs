//! Grid coordinates, vertices, and monotone lattice paths.
//!
//! Everything is 1-based, matching the usual matrix indexing of the
//! variables x_{i,j} and y_{i,j}.

use crate::error::{Error, Result};

/// The pair (m, n) with 2 <= m <= n fixing the 2mn-vertex variable grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridShape {
    m: u32,
    n: u32,
}

impl GridShape {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m < 2 || n < m {
            return Err(Error::BadShape { m, n });
        }
        Ok(GridShape { m, n })
    }

    pub fn rows(&self) -> u32 {
        self.m
    }

    pub fn cols(&self) -> u32 {
        self.n
    }

    pub fn vertex_count(&self) -> u32 {
        2 * self.m * self.n
    }

    pub fn contains(&self, cell: Cell) -> bool {
        (1..=self.m).contains(&cell.row) && (1..=self.n).contains(&cell.col)
    }

    pub fn check_cell(&self, cell: Cell) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            Err(Error::OutOfGrid { cell })
        }
    }

    /// Dense 0-based index of a vertex, X layer first, row-major.
    pub fn vertex_index(&self, v: Vertex) -> usize {
        let layer = match v.layer {
            Layer::X => 0,
            Layer::Y => 1,
        };
        (layer * self.m * self.n + (v.row - 1) * self.n + (v.col - 1)) as usize
    }

    pub fn vertex_at(&self, index: usize) -> Vertex {
        let mn = (self.m * self.n) as usize;
        let layer = if index < mn { Layer::X } else { Layer::Y };
        let rem = (index % mn) as u32;
        Vertex {
            layer,
            row: rem / self.n + 1,
            col: rem % self.n + 1,
        }
    }

    /// All 2mn vertices in canonical (layer, row, col) order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        let shape = *self;
        (0..self.vertex_count() as usize).map(move |i| shape.vertex_at(i))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    X,
    Y,
}

impl Layer {
    pub fn letter(&self) -> char {
        match self {
            Layer::X => 'x',
            Layer::Y => 'y',
        }
    }
}

/// A grid position without a layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }
}

/// One of the 2mn variables, ordered by (layer, row, col).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub layer: Layer,
    pub row: u32,
    pub col: u32,
}

impl Vertex {
    pub fn new(layer: Layer, row: u32, col: u32) -> Self {
        Vertex { layer, row, col }
    }

    pub fn x(row: u32, col: u32) -> Self {
        Vertex::new(Layer::X, row, col)
    }

    pub fn y(row: u32, col: u32) -> Self {
        Vertex::new(Layer::Y, row, col)
    }

    pub fn cell(&self) -> Cell {
        Cell::new(self.row, self.col)
    }
}

impl std::fmt::Display for Vertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}[{},{}]", self.layer.letter(), self.row, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Right,
    Down,
}

impl Step {
    pub fn letter(&self) -> char {
        match self {
            Step::Right => 'R',
            Step::Down => 'D',
        }
    }
}

/// A monotone right/down path between two cells within one layer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    layer: Layer,
    start: Cell,
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(layer: Layer, start: Cell, steps: Vec<Step>) -> Self {
        LatticePath {
            layer,
            start,
            steps,
        }
    }

    /// Rebuild a path from its cell set. Fails when the cells do not form a
    /// single monotone path.
    pub fn from_cells(layer: Layer, cells: &[Cell]) -> Option<Self> {
        let mut sorted = cells.to_vec();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != cells.len() || sorted.is_empty() {
            return None;
        }
        let mut steps = Vec::with_capacity(sorted.len() - 1);
        for pair in sorted.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            if b.row == a.row && b.col == a.col + 1 {
                steps.push(Step::Right);
            } else if b.row == a.row + 1 && b.col == a.col {
                steps.push(Step::Down);
            } else {
                return None;
            }
        }
        Some(LatticePath::new(layer, sorted[0], steps))
    }

    pub fn layer(&self) -> Layer {
        self.layer
    }

    pub fn start(&self) -> Cell {
        self.start
    }

    pub fn end(&self) -> Cell {
        let down = self.steps.iter().filter(|s| **s == Step::Down).count() as u32;
        let right = self.steps.len() as u32 - down;
        Cell::new(self.start.row + down, self.start.col + right)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn step_string(&self) -> String {
        self.steps.iter().map(Step::letter).collect()
    }

    /// Cells visited, in path order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut cur = self.start;
        out.push(cur);
        for step in &self.steps {
            match step {
                Step::Right => cur.col += 1,
                Step::Down => cur.row += 1,
            }
            out.push(cur);
        }
        out
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.cells()
            .into_iter()
            .map(|c| Vertex::new(self.layer, c.row, c.col))
            .collect()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.cells().contains(&cell)
    }

    /// For each row the path touches, the column at which it first occupies
    /// that row. This vector determines the path uniquely.
    pub fn entry_cols(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut cur_row = 0;
        for cell in self.cells() {
            if cell.row != cur_row {
                out.push(cell.col);
                cur_row = cell.row;
            }
        }
        out
    }

    /// Interior cells whose incoming step is Right and outgoing step is Down.
    pub fn right_turns(&self) -> Vec<Cell> {
        let cells = self.cells();
        let mut out = Vec::new();
        for i in 0..self.steps.len().saturating_sub(1) {
            if self.steps[i] == Step::Right && self.steps[i + 1] == Step::Down {
                out.push(cells[i + 1]);
            }
        }
        out
    }
}

/// Quadrant of a y-vertex relative to a pivot (i, j).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    R1,
    R2,
    R3,
    R4,
}

/// R1 = {s <= i, t > j}, R2 = {s <= i, t <= j}, R3 = {s > i, t <= j},
/// R4 = {s > i, t > j}.
pub fn classify_region(pivot: Cell, cell: Cell) -> Region {
    match (cell.row <= pivot.row, cell.col <= pivot.col) {
        (true, false) => Region::R1,
        (true, true) => Region::R2,
        (false, true) => Region::R3,
        (false, false) => Region::R4,
    }
}

/// All monotone paths from `start` to `end`, in lexicographic order on step
/// strings with Right < Down.
pub fn enumerate_paths(
    shape: GridShape,
    layer: Layer,
    start: Cell,
    end: Cell,
) -> Result<Vec<LatticePath>> {
    shape.check_cell(start)?;
    shape.check_cell(end)?;
    if start.row > end.row || start.col > end.col {
        return Err(Error::InvertedEndpoints { start, end });
    }
    let mut out = Vec::new();
    let mut steps = Vec::new();
    extend_paths(layer, start, start, end, &mut steps, &mut out);
    Ok(out)
}

fn extend_paths(
    layer: Layer,
    start: Cell,
    cur: Cell,
    end: Cell,
    steps: &mut Vec<Step>,
    out: &mut Vec<LatticePath>,
) {
    if cur == end {
        out.push(LatticePath::new(layer, start, steps.clone()));
        return;
    }
    if cur.col < end.col {
        steps.push(Step::Right);
        extend_paths(
            layer,
            start,
            Cell::new(cur.row, cur.col + 1),
            end,
            steps,
            out,
        );
        steps.pop();
    }
    if cur.row < end.row {
        steps.push(Step::Down);
        extend_paths(
            layer,
            start,
            Cell::new(cur.row + 1, cur.col),
            end,
            steps,
            out,
        );
        steps.pop();
    }
}

/// All vertex-disjoint pairs (upper: (1,1) -> upper_end, lower: (2,1) ->
/// lower_end) of monotone Y-layer paths, in the product order induced by
/// `enumerate_paths`.
pub fn enumerate_nonintersecting_pairs(
    shape: GridShape,
    upper_end: Cell,
    lower_end: Cell,
) -> Result<Vec<(LatticePath, LatticePath)>> {
    shape.check_cell(upper_end)?;
    shape.check_cell(lower_end)?;
    if upper_end.col != shape.cols() {
        return Err(Error::BadEndpoint {
            cell: upper_end,
            reason: "upper path must end in the last column",
        });
    }
    if lower_end.row != shape.rows() {
        return Err(Error::BadEndpoint {
            cell: lower_end,
            reason: "lower path must end in the last row",
        });
    }
    let uppers = enumerate_paths(shape, Layer::Y, Cell::new(1, 1), upper_end)?;
    let lowers = enumerate_paths(shape, Layer::Y, Cell::new(2, 1), lower_end)?;
    let mut out = Vec::new();
    for upper in &uppers {
        let upper_cells: std::collections::BTreeSet<Cell> = upper.cells().into_iter().collect();
        for lower in &lowers {
            if lower.cells().iter().all(|c| !upper_cells.contains(c)) {
                out.push((upper.clone(), lower.clone()));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::binomial;
    use num_bigint::BigUint;

    #[test]
    fn shape_rejects_bad_dimensions() {
        assert!(GridShape::new(1, 5).is_err());
        assert!(GridShape::new(3, 2).is_err());
        assert!(GridShape::new(2, 2).is_ok());
    }

    #[test]
    fn two_step_paths_in_canonical_order() {
        let shape = GridShape::new(2, 2).unwrap();
        let paths = enumerate_paths(shape, Layer::X, Cell::new(1, 1), Cell::new(2, 2)).unwrap();
        assert_eq!(paths.len(), 2);
        assert_eq!(paths[0].step_string(), "RD");
        assert_eq!(paths[1].step_string(), "DR");
    }

    #[test]
    fn degenerate_path_is_a_single_vertex() {
        let shape = GridShape::new(3, 4).unwrap();
        let paths = enumerate_paths(shape, Layer::Y, Cell::new(2, 3), Cell::new(2, 3)).unwrap();
        assert_eq!(paths.len(), 1);
        assert!(paths[0].steps().is_empty());
        assert_eq!(paths[0].cells(), vec![Cell::new(2, 3)]);
    }

    #[test]
    fn path_count_3x4() {
        let shape = GridShape::new(3, 4).unwrap();
        let paths = enumerate_paths(shape, Layer::X, Cell::new(1, 2), Cell::new(3, 4)).unwrap();
        assert_eq!(paths.len(), 6);
    }

    #[test]
    fn path_counts_match_binomials_and_have_no_duplicates() {
        let shape = GridShape::new(4, 4).unwrap();
        for sr in 1..=4 {
            for sc in 1..=4 {
                for er in sr..=4 {
                    for ec in sc..=4 {
                        let paths =
                            enumerate_paths(shape, Layer::X, Cell::new(sr, sc), Cell::new(er, ec))
                                .unwrap();
                        let expected = binomial((er - sr + ec - sc) as i64, (er - sr) as i64);
                        assert_eq!(BigUint::from(paths.len()), expected);
                        let distinct: std::collections::BTreeSet<String> =
                            paths.iter().map(|p| p.step_string()).collect();
                        assert_eq!(distinct.len(), paths.len());
                        for p in &paths {
                            assert_eq!(p.end(), Cell::new(er, ec));
                            assert_eq!(p.cells().len(), (er - sr + ec - sc + 1) as usize);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn entry_cols_determine_the_path() {
        let shape = GridShape::new(3, 4).unwrap();
        let paths = enumerate_paths(shape, Layer::X, Cell::new(1, 1), Cell::new(3, 4)).unwrap();
        let vecs: std::collections::BTreeSet<Vec<u32>> =
            paths.iter().map(|p| p.entry_cols()).collect();
        assert_eq!(vecs.len(), paths.len());
    }

    #[test]
    fn right_turns_exclude_endpoints() {
        let path = LatticePath::new(
            Layer::X,
            Cell::new(1, 1),
            vec![Step::Right, Step::Down, Step::Right],
        );
        assert_eq!(path.right_turns(), vec![Cell::new(1, 2)]);
    }

    #[test]
    fn forced_pairs_2x2() {
        let shape = GridShape::new(2, 2).unwrap();
        // pivot (1,1)
        let pairs =
            enumerate_nonintersecting_pairs(shape, Cell::new(1, 2), Cell::new(2, 1)).unwrap();
        assert_eq!(pairs.len(), 1);
        // pivot (1,2)
        let pairs =
            enumerate_nonintersecting_pairs(shape, Cell::new(1, 2), Cell::new(2, 2)).unwrap();
        assert_eq!(pairs.len(), 1);
    }

    #[test]
    fn pair_count_3x3_center_pivot() {
        let shape = GridShape::new(3, 3).unwrap();
        let pairs =
            enumerate_nonintersecting_pairs(shape, Cell::new(2, 3), Cell::new(3, 2)).unwrap();
        assert_eq!(pairs.len(), 3);
        for (upper, lower) in &pairs {
            let uc: std::collections::BTreeSet<Cell> = upper.cells().into_iter().collect();
            assert!(lower.cells().iter().all(|c| !uc.contains(c)));
        }
    }

    #[test]
    fn region_classification_is_a_partition() {
        for (pivot, cell, want) in [
            (Cell::new(2, 2), Cell::new(1, 3), Region::R1),
            (Cell::new(2, 2), Cell::new(2, 2), Region::R2),
            (Cell::new(2, 2), Cell::new(3, 3), Region::R4),
            (Cell::new(2, 2), Cell::new(3, 1), Region::R3),
        ] {
            assert_eq!(classify_region(pivot, cell), want);
        }
        for pr in 1..=3 {
            for pc in 1..=4 {
                let mut counts = [0u32; 4];
                for r in 1..=3 {
                    for c in 1..=4 {
                        let idx = match classify_region(Cell::new(pr, pc), Cell::new(r, c)) {
                            Region::R1 => 0,
                            Region::R2 => 1,
                            Region::R3 => 2,
                            Region::R4 => 3,
                        };
                        counts[idx] += 1;
                    }
                }
                assert_eq!(counts.iter().sum::<u32>(), 12);
            }
        }
    }

    #[test]
    fn out_of_grid_is_rejected() {
        let shape = GridShape::new(2, 2).unwrap();
        assert!(enumerate_paths(shape, Layer::X, Cell::new(1, 1), Cell::new(3, 2)).is_err());
        assert!(enumerate_paths(shape, Layer::X, Cell::new(2, 2), Cell::new(1, 1)).is_err());
    }

    #[test]
    fn vertex_index_round_trips() {
        let shape = GridShape::new(3, 4).unwrap();
        for (i, v) in shape.vertices().enumerate() {
            assert_eq!(shape.vertex_index(v), i);
            assert_eq!(shape.vertex_at(i), v);
        }
    }
}
