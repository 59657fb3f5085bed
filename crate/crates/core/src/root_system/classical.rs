//! Closed-form positive-root lists of the classical types in orthonormal coordinates.

use serde::{Deserialize, Serialize};

/// Length class used to assign multiplicities.
///
/// For `BC_r` the classes are `e_i` (short), `e_i ± e_j` (long) and `2e_i` (double).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    Short,
    Long,
    Double,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
    BC,
}

impl RootType {
    pub fn parse(label: &str) -> Option<Self> {
        match label {
            "A" => Some(Self::A),
            "B" => Some(Self::B),
            "C" => Some(Self::C),
            "D" => Some(Self::D),
            "BC" => Some(Self::BC),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::A => "A",
            Self::B => "B",
            Self::C => "C",
            Self::D => "D",
            Self::BC => "BC",
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            Self::D => 2,
            _ => 1,
        }
    }

    /// Number of positive roots of the rank-`r` system of this type.
    pub fn positive_root_count(self, r: usize) -> usize {
        match self {
            Self::A => r * (r + 1) / 2,
            Self::B | Self::C => r * r,
            Self::D => r * (r - 1),
            Self::BC => r * r + r,
        }
    }

    pub fn ambient_dim(self, r: usize) -> usize {
        match self {
            Self::A => r + 1,
            _ => r,
        }
    }

    /// Whether the type has a root length of its own besides `Short`.
    pub fn classes(self, r: usize) -> Vec<LengthClass> {
        use LengthClass::*;
        match self {
            Self::A | Self::D => vec![Short],
            Self::B if r == 1 => vec![Short],
            Self::C if r == 1 => vec![Long],
            Self::B | Self::C => vec![Short, Long],
            Self::BC if r == 1 => vec![Short, Double],
            Self::BC => vec![Short, Long, Double],
        }
    }
}

pub struct ClassicalData {
    pub ambient_dim: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub positive_roots: Vec<(Vec<i64>, LengthClass)>,
}

fn unit(dim: usize, i: usize, scale: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = scale;
    v
}

fn comb(dim: usize, i: usize, j: usize, sign: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v[j] = sign;
    v
}

pub fn classical(ty: RootType, r: usize) -> ClassicalData {
    use LengthClass::*;
    let dim = ty.ambient_dim(r);
    let mut simple = Vec::with_capacity(r);
    let mut roots = Vec::new();
    match ty {
        RootType::A => {
            for i in 0..r {
                simple.push(comb(dim, i, i + 1, -1));
            }
            for i in 0..dim {
                for j in i + 1..dim {
                    roots.push((comb(dim, i, j, -1), Short));
                }
            }
        }
        RootType::B | RootType::C | RootType::BC | RootType::D => {
            for i in 0..r.saturating_sub(1) {
                simple.push(comb(dim, i, i + 1, -1));
            }
            let pair_class = match ty {
                RootType::C => Short,
                RootType::D => Short,
                _ => Long,
            };
            for i in 0..r {
                for j in i + 1..r {
                    roots.push((comb(dim, i, j, -1), pair_class));
                    roots.push((comb(dim, i, j, 1), pair_class));
                }
            }
            match ty {
                RootType::B => {
                    simple.push(unit(dim, r - 1, 1));
                    roots.extend((0..r).map(|i| (unit(dim, i, 1), Short)));
                }
                RootType::C => {
                    simple.push(unit(dim, r - 1, 2));
                    roots.extend((0..r).map(|i| (unit(dim, i, 2), Long)));
                }
                RootType::BC => {
                    simple.push(unit(dim, r - 1, 1));
                    roots.extend((0..r).map(|i| (unit(dim, i, 1), Short)));
                    roots.extend((0..r).map(|i| (unit(dim, i, 2), Double)));
                }
                RootType::D => simple.push(comb(dim, r - 2, r - 1, 1)),
                RootType::A => unreachable!(),
            }
        }
    }
    ClassicalData {
        ambient_dim: dim,
        simple_roots: simple,
        positive_roots: roots,
    }
}
