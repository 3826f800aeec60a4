//! Facet ordering, definition-based shelling verification, constructive
//! witnesses, restriction faces, and the h-vector.
//!
//! The facet order refines a partial order built from five rules: pivot in
//! a lower row first; same row, pivot further right first; then, for equal
//! pivots, path comparisons. "Path A right of path B" means A sits on the
//! south-west side: its entry-column vector is componentwise <= B's. The
//! refinement pins the arbitrary linear extension to lexicographic
//! comparison of those vectors, which extends the componentwise order by
//! construction.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::count::binomial;
use crate::error::{Error, Result};
use crate::facet::{decompose, enumerate_facets, FacetProfile};
use crate::grid::{Cell, GridShape, Step, Vertex};

/// Bitmask ceiling for the pairwise verifier.
pub const SHELLING_VERTEX_LIMIT: u32 = 128;

type Key = (
    std::cmp::Reverse<u32>,
    std::cmp::Reverse<u32>,
    Vec<u32>,
    Vec<u32>,
    Vec<u32>,
);

fn sort_key(f: &FacetProfile) -> Key {
    (
        std::cmp::Reverse(f.mu().row),
        std::cmp::Reverse(f.mu().col),
        f.x_path().entry_cols(),
        f.y_upper().entry_cols(),
        f.y_lower().entry_cols(),
    )
}

/// Strict total order on same-shape facets; Equal only for identical
/// vertex sets.
pub fn compare(p: &FacetProfile, q: &FacetProfile) -> Result<Ordering> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    Ok(sort_key(p).cmp(&sort_key(q)))
}

/// Componentwise dominance: `a` weakly south-west of `b`, and different.
fn right_of(a: &crate::grid::LatticePath, b: &crate::grid::LatticePath) -> bool {
    let (ea, eb) = (a.entry_cols(), b.entry_cols());
    ea != eb && ea.iter().zip(&eb).all(|(x, y)| x <= y)
}

/// Which of the five partial-order rules, if any, forces P < Q. Exposed
/// so tests can check the linear extension rule by rule.
pub fn partial_order_rule(p: &FacetProfile, q: &FacetProfile) -> Option<u8> {
    if p.mu().row > q.mu().row {
        return Some(1);
    }
    if p.mu().row != q.mu().row {
        return None;
    }
    if p.mu().col > q.mu().col {
        return Some(2);
    }
    if p.mu() != q.mu() {
        return None;
    }
    if right_of(p.x_path(), q.x_path()) {
        return Some(3);
    }
    if p.x_path() != q.x_path() {
        return None;
    }
    if right_of(p.y_upper(), q.y_upper()) {
        return Some(4);
    }
    if p.y_upper() != q.y_upper() {
        return None;
    }
    if right_of(p.y_lower(), q.y_lower()) {
        return Some(5);
    }
    None
}

/// All facets in the canonical total order, with cached vertex sets and
/// bitmasks.
#[derive(Debug, Clone)]
pub struct ShellingOrder {
    shape: GridShape,
    facets: Vec<FacetProfile>,
    sets: Vec<BTreeSet<Vertex>>,
    masks: Vec<u128>,
}

impl ShellingOrder {
    pub fn from_facets(shape: GridShape, facets: Vec<FacetProfile>) -> Result<Self> {
        if shape.vertex_count() > SHELLING_VERTEX_LIMIT {
            return Err(Error::Capacity {
                vertices: shape.vertex_count(),
                limit: SHELLING_VERTEX_LIMIT,
            });
        }
        let sets: Vec<BTreeSet<Vertex>> = facets.iter().map(|f| f.vertex_set()).collect();
        let masks = sets
            .iter()
            .map(|s| {
                s.iter()
                    .fold(0u128, |acc, v| acc | 1 << shape.vertex_index(*v))
            })
            .collect();
        Ok(ShellingOrder {
            shape,
            facets,
            sets,
            masks,
        })
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn facets(&self) -> &[FacetProfile] {
        &self.facets
    }

    pub fn vertex_sets(&self) -> &[BTreeSet<Vertex>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    fn vertex_of_bit(&self, bit: u32) -> Vertex {
        self.shape.vertex_at(bit as usize)
    }
}

/// All facets sorted by `compare`.
pub fn shelling_sequence(shape: GridShape) -> Result<ShellingOrder> {
    let mut facets: Vec<FacetProfile> = enumerate_facets(shape).collect();
    facets.sort_by_key(sort_key);
    ShellingOrder::from_facets(shape, facets)
}

/// One verified pair (earlier, later): the vertex v and the index k with
/// F_later \ F_k = {v}. Indices are 0-based positions in the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairCertificate {
    pub later: usize,
    pub earlier: usize,
    pub vertex: Vertex,
    pub via: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FailingPair {
    pub later: usize,
    pub earlier: usize,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub facet_count: usize,
    pub pairs_checked: u64,
    pub certificates: Vec<PairCertificate>,
    pub failure: Option<FailingPair>,
}

impl VerifyReport {
    pub fn is_shelling(&self) -> bool {
        self.failure.is_none()
    }
}

/// Literal check of the shelling definition: for every j < i there must be
/// v in F_i \ F_j and k < i with F_i \ F_k = {v}. Stops at the first
/// failing pair.
pub fn verify_shelling(order: &ShellingOrder) -> VerifyReport {
    let e = order.len();
    let mut certificates = Vec::new();
    let mut pairs_checked = 0u64;
    for i in 0..e {
        // vertices v admitting some k < i with F_i \ F_k = {v}
        let mut via = [usize::MAX; 128];
        let mut covered = 0u128;
        for k in 0..i {
            let diff = order.masks[i] & !order.masks[k];
            if diff.count_ones() == 1 {
                let bit = diff.trailing_zeros() as usize;
                if via[bit] == usize::MAX {
                    via[bit] = k;
                    covered |= diff;
                }
            }
        }
        for j in 0..i {
            pairs_checked += 1;
            let diff = order.masks[i] & !order.masks[j];
            let usable = diff & covered;
            if usable == 0 {
                return VerifyReport {
                    facet_count: e,
                    pairs_checked,
                    certificates,
                    failure: Some(FailingPair {
                        later: i,
                        earlier: j,
                    }),
                };
            }
            let bit = usable.trailing_zeros();
            certificates.push(PairCertificate {
                later: i,
                earlier: j,
                vertex: order.vertex_of_bit(bit),
                via: via[bit as usize],
            });
        }
    }
    VerifyReport {
        facet_count: e,
        pairs_checked,
        certificates,
        failure: None,
    }
}

/// Which branch of the constructive case analysis produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessCase {
    /// mu(P) != mu(Q): drop mu(Q), extend a y-path (or, for
    /// mu(Q) = x_{m-1,n}, swap the x-path to the last row).
    PivotStep { special: bool },
    /// Same mu, different x-paths: flip a right turn of Q_x down-left.
    XCornerFlip,
    /// Same x-path, different upper y-paths: flip a right turn of the
    /// upper path; cascades over the lower path when the flip target is
    /// occupied.
    UpperCornerFlip { cascade: bool },
    /// Only the lower y-paths differ: flip a right turn of the lower path.
    LowerCornerFlip,
}

#[derive(Debug, Clone)]
pub struct ShellingWitness {
    pub later: FacetProfile,
    pub earlier: FacetProfile,
    pub pivot_vertex: Vertex,
    pub intermediate: FacetProfile,
    pub case: WitnessCase,
}

fn internal(msg: impl Into<String>) -> Error {
    Error::WitnessInternal(msg.into())
}

/// First index where `q` exceeds `p` componentwise; the paths share
/// endpoints, so equal-length vectors are guaranteed.
fn first_excess(p: &[u32], q: &[u32]) -> Option<usize> {
    p.iter().zip(q).position(|(a, b)| b > a)
}

/// Build the intermediate facet R for a pair P < Q, returning the
/// removed vertex v, the added vertex w, and the case tag.
fn plan_witness(p: &FacetProfile, q: &FacetProfile) -> Result<(Vertex, Vertex, WitnessCase)> {
    let shape = p.shape();
    let (m, n) = (shape.rows(), shape.cols());
    let q_set = q.vertex_set();

    if p.mu() != q.mu() {
        let Cell { row: i, col: j } = q.mu();
        let v = Vertex::x(i, j);
        if q.mu() == Cell::new(m - 1, n) {
            return Ok((
                v,
                Vertex::x(m, n - 1),
                WitnessCase::PivotStep { special: true },
            ));
        }
        let w = match q.x_path().steps()[0] {
            Step::Right => {
                // new pivot x_{i,j+1}; the lower path grows to (m, j+1)
                let cand = Vertex::y(m, j + 1);
                if q_set.contains(&cand) {
                    // only possible when i = m and the upper path enters
                    // row m at column j+1; reroute that corner instead
                    Vertex::y(m - 1, j + 2)
                } else {
                    cand
                }
            }
            Step::Down => {
                let cand = Vertex::y(i + 1, n);
                if q_set.contains(&cand) {
                    Vertex::y(i + 2, n - 1)
                } else {
                    cand
                }
            }
        };
        return Ok((v, w, WitnessCase::PivotStep { special: false }));
    }

    if p.x_path() != q.x_path() {
        let p_cells = p.x_path().cells();
        let corner = q
            .x_path()
            .right_turns()
            .into_iter()
            .find(|c| !p_cells.contains(c))
            .ok_or_else(|| internal("no x right turn outside P; order violated"))?;
        return Ok((
            Vertex::x(corner.row, corner.col),
            Vertex::x(corner.row + 1, corner.col - 1),
            WitnessCase::XCornerFlip,
        ));
    }

    if p.y_upper() != q.y_upper() {
        let idx = first_excess(&p.y_upper().entry_cols(), &q.y_upper().entry_cols())
            .ok_or_else(|| internal("upper paths differ but Q never exceeds P"))?;
        // entry index idx is row idx+1; Q turns right at (idx, col) above it
        let row = idx as u32 + 1;
        let col = q.y_upper().entry_cols()[idx];
        let v = Vertex::y(row - 1, col);
        let target = Cell::new(row, col - 1);
        if q.y_lower().contains_cell(target) {
            return Ok((
                v,
                Vertex::y(row + 1, col - 2),
                WitnessCase::UpperCornerFlip { cascade: true },
            ));
        }
        return Ok((
            v,
            Vertex::y(row, col - 1),
            WitnessCase::UpperCornerFlip { cascade: false },
        ));
    }

    if p.y_lower() != q.y_lower() {
        let idx = first_excess(&p.y_lower().entry_cols(), &q.y_lower().entry_cols())
            .ok_or_else(|| internal("lower paths differ but Q never exceeds P"))?;
        // lower paths start in row 2: entry index idx is row idx+2
        let row = idx as u32 + 2;
        let col = q.y_lower().entry_cols()[idx];
        if q.y_upper().contains_cell(Cell::new(row, col - 1)) {
            return Err(internal("lower flip target occupied by the upper path"));
        }
        return Ok((
            Vertex::y(row - 1, col),
            Vertex::y(row, col - 1),
            WitnessCase::LowerCornerFlip,
        ));
    }

    Err(Error::WitnessPrecondition)
}

/// Constructive witness for a pair P < Q: a vertex v in Q \ P and a facet
/// R < Q with Q \ R = {v}, built by the four-case analysis and
/// re-canonicalized through `decompose`.
pub fn construct_witness(
    order: &ShellingOrder,
    p: &FacetProfile,
    q: &FacetProfile,
) -> Result<ShellingWitness> {
    if compare(p, q)? != Ordering::Less {
        return Err(Error::WitnessPrecondition);
    }
    let (v, w, case) = plan_witness(p, q)?;
    let q_set = q.vertex_set();
    let p_set = p.vertex_set();
    if !q_set.contains(&v) || p_set.contains(&v) {
        return Err(internal(format!("{v} is not in Q \\ P ({case:?})")));
    }
    if q_set.contains(&w) {
        return Err(internal(format!("replacement {w} already in Q ({case:?})")));
    }
    let mut r_set = q_set.clone();
    r_set.remove(&v);
    r_set.insert(w);
    let r = decompose(order.shape(), &r_set)
        .map_err(|e| internal(format!("intermediate is not a facet ({case:?}): {e}")))?;
    if compare(&r, q)? != Ordering::Less {
        return Err(internal(format!(
            "intermediate not earlier than Q ({case:?})"
        )));
    }
    let removed: Vec<&Vertex> = q_set.difference(&r_set).collect();
    if removed != vec![&v] {
        return Err(internal(format!(
            "Q \\ R is not exactly {{{v}}} ({case:?})"
        )));
    }
    Ok(ShellingWitness {
        later: q.clone(),
        earlier: p.clone(),
        pivot_vertex: v,
        intermediate: r,
        case,
    })
}

/// The unique minimal new face of F_i (1-based): vertices v such that
/// F_i minus v is contained in some earlier facet. Empty for i = 1.
pub fn restriction_face(order: &ShellingOrder, index: usize) -> Result<BTreeSet<Vertex>> {
    if index < 1 || index > order.len() {
        return Err(Error::IndexOutOfRange {
            index,
            count: order.len(),
        });
    }
    let i = index - 1;
    let mut out = BTreeSet::new();
    for k in 0..i {
        let diff = order.masks[i] & !order.masks[k];
        if diff.count_ones() == 1 {
            out.insert(order.vertex_of_bit(diff.trailing_zeros()));
        }
    }
    Ok(out)
}

/// h_j = number of facets whose restriction face has j vertices, for
/// j in 0..=2(m+n)-2.
pub fn h_vector(order: &ShellingOrder) -> Vec<BigUint> {
    let d = crate::count::krull_dimension(order.shape()) as usize;
    let mut h = vec![BigUint::from(0u32); d + 1];
    for i in 1..=order.len() {
        let r = restriction_face(order, i).expect("index in range");
        h[r.len()] += 1u32;
    }
    h
}

/// f-vector (indexed by face cardinality 0..=d) from an h-vector via
/// f_c = sum_j C(d-j, c-j) h_j.
pub fn h_to_f(h: &[BigUint]) -> Vec<BigUint> {
    let d = h.len() - 1;
    (0..=d)
        .map(|c| {
            h.iter()
                .enumerate()
                .map(|(j, hj)| binomial((d - j) as i64, c as i64 - j as i64) * hj)
                .sum()
        })
        .collect()
}
