//! Brute-force ground truth: every face and every maximal face, straight
//! from the non-divisibility definition, for small grids.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::grid::{GridShape, Vertex};
use crate::ideal::{self, Generators};

/// Hard ceiling on 2mn for subset enumeration.
pub const ORACLE_VERTEX_LIMIT: u32 = 24;

/// Face counts per dimension plus the maximal faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceCensus {
    pub shape: GridShape,
    /// Keyed by dimension; the empty face sits at -1.
    pub faces_by_dim: BTreeMap<i64, u64>,
    pub facets: BTreeSet<BTreeSet<Vertex>>,
}

impl FaceCensus {
    pub fn face_count(&self) -> u64 {
        self.faces_by_dim.values().sum()
    }

    /// f-vector indexed by face cardinality 0..=max.
    pub fn f_vector(&self) -> Vec<u64> {
        let max_dim = *self.faces_by_dim.keys().max().unwrap_or(&-1);
        (-1..=max_dim)
            .map(|d| *self.faces_by_dim.get(&d).unwrap_or(&0))
            .collect()
    }
}

fn check_guard(shape: GridShape) -> Result<()> {
    if shape.vertex_count() > ORACLE_VERTEX_LIMIT {
        return Err(Error::Capacity {
            vertices: shape.vertex_count(),
            limit: ORACLE_VERTEX_LIMIT,
        });
    }
    Ok(())
}

fn generator_masks(shape: GridShape, gens: &Generators) -> Vec<u32> {
    gens.iter_all()
        .map(|(_, g)| {
            g.vertices()
                .iter()
                .fold(0u32, |acc, v| acc | 1 << shape.vertex_index(*v))
        })
        .collect()
}

fn mask_to_set(shape: GridShape, mask: u32) -> BTreeSet<Vertex> {
    (0..shape.vertex_count() as usize)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| shape.vertex_at(i))
        .collect()
}

// `ext & g == g` tests divisibility by the generator, not membership.
#[allow(clippy::manual_contains)]
fn census_from_faces(shape: GridShape, faces: &[u32], gen_masks: &[u32]) -> FaceCensus {
    let mut faces_by_dim: BTreeMap<i64, u64> = BTreeMap::new();
    for &f in faces {
        *faces_by_dim.entry(f.count_ones() as i64 - 1).or_insert(0) += 1;
    }
    // A face is maximal iff no single-vertex extension stays a face.
    let facets = faces
        .iter()
        .copied()
        .filter(|&f| {
            (0..shape.vertex_count() as usize).all(|i| {
                let bit = 1u32 << i;
                f & bit != 0 || {
                    let ext = f | bit;
                    gen_masks.iter().any(|&g| ext & g == g)
                }
            })
        })
        .map(|f| mask_to_set(shape, f))
        .collect();
    FaceCensus {
        shape,
        faces_by_dim,
        facets,
    }
}

/// DFS over the face poset: a subset is extended only while it stays a
/// face, so violating subsets are never visited.
pub fn enumerate_faces_bruteforce(shape: GridShape) -> Result<FaceCensus> {
    check_guard(shape)?;
    let gens = ideal::generators(shape);
    let gen_masks = generator_masks(shape, &gens);
    let nv = shape.vertex_count() as usize;
    // per-vertex list of generators containing it
    let mut by_vertex: Vec<Vec<u32>> = vec![Vec::new(); nv];
    for &g in &gen_masks {
        for (i, slot) in by_vertex.iter_mut().enumerate() {
            if g & (1 << i) != 0 {
                slot.push(g);
            }
        }
    }
    let mut faces = Vec::new();
    let mut stack = vec![(0u32, 0usize)];
    while let Some((face, next)) = stack.pop() {
        if next == 0 {
            faces.push(face);
        }
        for (i, gens_here) in by_vertex.iter().enumerate().take(nv).skip(next) {
            let ext = face | 1 << i;
            if gens_here.iter().all(|&g| ext & g != g) {
                faces.push(ext);
                stack.push((ext, i + 1));
            }
        }
    }
    Ok(census_from_faces(shape, &faces, &gen_masks))
}

/// Pruning-free reference: scan all 2^(2mn) subsets and test each one
/// against every generator.
pub fn enumerate_faces_reference(shape: GridShape) -> Result<FaceCensus> {
    check_guard(shape)?;
    let gens = ideal::generators(shape);
    let gen_masks = generator_masks(shape, &gens);
    let mut faces = Vec::new();
    for subset in 0u32..1 << shape.vertex_count() {
        if gen_masks.iter().all(|&g| subset & g != g) {
            faces.push(subset);
        }
    }
    Ok(census_from_faces(shape, &faces, &gen_masks))
}

/// The maximal faces alone.
pub fn enumerate_facets_bruteforce(shape: GridShape) -> Result<BTreeSet<BTreeSet<Vertex>>> {
    Ok(enumerate_faces_bruteforce(shape)?.facets)
}
