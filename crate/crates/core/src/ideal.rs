//! The five squarefree generator families of the leading-term ideal, and
//! face membership for vertex sets.

use std::collections::BTreeSet;

use crate::grid::{GridShape, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyTag {
    A,
    B,
    C,
    D,
    E,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 5] = [
        FamilyTag::A,
        FamilyTag::B,
        FamilyTag::C,
        FamilyTag::D,
        FamilyTag::E,
    ];

    pub fn letter(&self) -> char {
        match self {
            FamilyTag::A => 'A',
            FamilyTag::B => 'B',
            FamilyTag::C => 'C',
            FamilyTag::D => 'D',
            FamilyTag::E => 'E',
        }
    }
}

/// A squarefree monomial, stored as its sorted vertex set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    vertices: BTreeSet<Vertex>,
}

impl Monomial {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        Monomial {
            vertices: vertices.into_iter().collect(),
        }
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn divides(&self, candidate: &BTreeSet<Vertex>) -> bool {
        self.vertices.is_subset(candidate)
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for v in &self.vertices {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct GeneratorFamily {
    pub tag: FamilyTag,
    pub members: Vec<Monomial>,
}

/// The generating set, split by family and merged.
#[derive(Debug, Clone)]
pub struct Generators {
    shape: GridShape,
    families: Vec<GeneratorFamily>,
}

impl Generators {
    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn families(&self) -> &[GeneratorFamily] {
        &self.families
    }

    pub fn family(&self, tag: FamilyTag) -> &GeneratorFamily {
        &self.families[tag as usize]
    }

    pub fn iter_all(&self) -> impl Iterator<Item = (FamilyTag, &Monomial)> {
        self.families
            .iter()
            .flat_map(|f| f.members.iter().map(move |m| (f.tag, m)))
    }

    /// Merged, deduplicated generator set.
    pub fn merged(&self) -> BTreeSet<Monomial> {
        self.iter_all().map(|(_, m)| m.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.families.iter().map(|f| f.members.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Generate the families A-E for the given shape, in deterministic order.
///
///   A: x_{i,l} x_{j,k}          1 <= i < j <= m, 1 <= k < l <= n
///   B: x_{i,k} y_{j,l}          1 <= i < j <= m, 1 <= k < l <= n
///   C: x_{k,p} y_{j,q} y_{i,r}  1 <= i < j <= k <= m, 1 <= p < q < r <= n
///   D: x_{i,r} y_{j,q} y_{k,p}  1 <= i < j < k <= m, 1 <= p < q <= r <= n
///   E: y_{i,r} y_{j,q} y_{k,p}  1 <= i < j < k <= m, 1 <= p < q < r <= n
pub fn generators(shape: GridShape) -> Generators {
    let (m, n) = (shape.rows(), shape.cols());
    let mut a = Vec::new();
    let mut b = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            for k in 1..=n {
                for l in k + 1..=n {
                    a.push(Monomial::new([Vertex::x(i, l), Vertex::x(j, k)]));
                    b.push(Monomial::new([Vertex::x(i, k), Vertex::y(j, l)]));
                }
            }
        }
    }
    let mut c = Vec::new();
    let mut d = Vec::new();
    let mut e = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            for k in j..=m {
                for p in 1..=n {
                    for q in p + 1..=n {
                        for r in q + 1..=n {
                            c.push(Monomial::new([
                                Vertex::x(k, p),
                                Vertex::y(j, q),
                                Vertex::y(i, r),
                            ]));
                        }
                    }
                }
            }
        }
    }
    for i in 1..=m {
        for j in i + 1..=m {
            for k in j + 1..=m {
                for p in 1..=n {
                    for q in p + 1..=n {
                        for r in q..=n {
                            d.push(Monomial::new([
                                Vertex::x(i, r),
                                Vertex::y(j, q),
                                Vertex::y(k, p),
                            ]));
                        }
                        for r in q + 1..=n {
                            e.push(Monomial::new([
                                Vertex::y(i, r),
                                Vertex::y(j, q),
                                Vertex::y(k, p),
                            ]));
                        }
                    }
                }
            }
        }
    }
    Generators {
        shape,
        families: vec![
            GeneratorFamily {
                tag: FamilyTag::A,
                members: a,
            },
            GeneratorFamily {
                tag: FamilyTag::B,
                members: b,
            },
            GeneratorFamily {
                tag: FamilyTag::C,
                members: c,
            },
            GeneratorFamily {
                tag: FamilyTag::D,
                members: d,
            },
            GeneratorFamily {
                tag: FamilyTag::E,
                members: e,
            },
        ],
    }
}

/// True iff no generator divides the candidate set.
pub fn is_face(gens: &Generators, candidate: &BTreeSet<Vertex>) -> bool {
    gens.iter_all().all(|(_, g)| !g.divides(candidate))
}

/// All generators contained in the candidate; empty exactly when it is a face.
pub fn violating_generators(
    gens: &Generators,
    candidate: &BTreeSet<Vertex>,
) -> Vec<(FamilyTag, Monomial)> {
    gens.iter_all()
        .filter(|(_, g)| g.divides(candidate))
        .map(|(t, g)| (t, g.clone()))
        .collect()
}
