//! Finite dimensional representations of the linearly oriented quiver
//! `1 -> 2 -> ... -> e`, with Hom, Ext and decompositions computed by brute
//! force linear algebra.

use std::fmt;

use serde::Serialize;

use super::linalg::Matrix;

/// The indecomposable representation supported on vertices `start..=end`
/// (1-based) with identity maps along the support.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntervalModule {
    pub start: u32,
    pub end: u32,
}

impl IntervalModule {
    pub fn new(start: u32, end: u32) -> Self {
        assert!(1 <= start && start <= end, "bad interval [{start},{end}]");
        IntervalModule { start, end }
    }

    /// Projectives are `P_i = [1, i]`.
    pub fn is_projective(&self) -> bool {
        self.start == 1
    }

    /// Injectives are `I_i = [i, e]`.
    pub fn is_injective(&self, rank: u32) -> bool {
        self.end == rank
    }

    pub fn dimension_vector(&self, rank: u32) -> Vec<i64> {
        (1..=rank)
            .map(|v| i64::from(self.start <= v && v <= self.end))
            .collect()
    }

    /// All indecomposables for rank `e`, ordered by `(start, end)`.
    pub fn all(rank: u32) -> Vec<IntervalModule> {
        (1..=rank)
            .flat_map(|a| (a..=rank).map(move |b| IntervalModule::new(a, b)))
            .collect()
    }
}

impl fmt::Display for IntervalModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.start, self.end)
    }
}

#[derive(Debug, Clone)]
pub struct Representation {
    dims: Vec<usize>,
    /// `maps[i]` is the structure map from vertex `i + 1` down to vertex `i`
    /// (0-based), a `dims[i] x dims[i + 1]` matrix.
    maps: Vec<Matrix>,
}

/// A morphism of representations: one linear map per vertex.
#[derive(Debug, Clone)]
pub struct Morphism {
    pub components: Vec<Matrix>,
}

/// Arrows of the quiver as `(source, target)` pairs, 0-based. The arrow
/// `1 -> 2` of the path algebra acts on modules from vertex 2 to vertex 1,
/// so that `[1,1]` is the socle of `[1,2]`.
fn arrows(verts: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..verts.saturating_sub(1)).map(|i| (i, i + 1, i))
}

impl Representation {
    pub fn interval(rank: u32, m: IntervalModule) -> Self {
        assert!(m.end <= rank);
        let dims: Vec<usize> = (1..=rank)
            .map(|v| usize::from(m.start <= v && v <= m.end))
            .collect();
        let maps = (0..rank as usize - 1)
            .map(|i| {
                if dims[i] == 1 && dims[i + 1] == 1 {
                    Matrix::identity(1)
                } else {
                    Matrix::zeros(dims[i], dims[i + 1])
                }
            })
            .collect();
        Representation { dims, maps }
    }

    pub fn vertex_count(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Composite structure map from vertex `hi` down to vertex `lo` (0-based).
    pub fn composite(&self, lo: usize, hi: usize) -> Matrix {
        let mut m = Matrix::identity(self.dims[hi]);
        for i in (lo..hi).rev() {
            m = self.maps[i].mul(&m);
        }
        m
    }

    /// Indecomposable summands, read off from the ranks of composite maps.
    pub fn decompose(&self) -> Vec<IntervalModule> {
        barcode(self.vertex_count(), |a, b| self.composite(a, b).rank())
    }
}

/// Recovers interval multiplicities from a rank function `r(lo, hi)`
/// (0-based vertices, `lo <= hi`).
fn barcode(n: usize, rank: impl Fn(usize, usize) -> usize) -> Vec<IntervalModule> {
    let r = |a: isize, b: isize| -> i64 {
        if a < 0 || b >= n as isize || a > b {
            0
        } else {
            rank(a as usize, b as usize) as i64
        }
    };
    let mut out = Vec::new();
    for a in 0..n as isize {
        for b in a..n as isize {
            let mult = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1);
            assert!(mult >= 0, "rank function is not a barcode");
            for _ in 0..mult {
                out.push(IntervalModule::new(a as u32 + 1, b as u32 + 1));
            }
        }
    }
    out
}

fn offsets(sizes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut acc = 0;
    let mut out = vec![0];
    for s in sizes {
        acc += s;
        out.push(acc);
    }
    out
}

/// The linear map `h -> n_α h_src - h_tgt m_α` from vertexwise maps
/// `h_v : m_v -> n_v` to per-arrow maps `m_src -> n_tgt`. Its kernel is
/// `Hom(m, n)` and its cokernel is `Ext^1(m, n)`.
fn commutator_system(m: &Representation, n: &Representation) -> (Matrix, Vec<usize>, Vec<usize>) {
    let verts = m.vertex_count();
    assert_eq!(verts, n.vertex_count());
    let h_off = offsets((0..verts).map(|v| n.dims[v] * m.dims[v]));
    let arrow_list: Vec<_> = arrows(verts).collect();
    let c_off = offsets(arrow_list.iter().map(|&(_, s, t)| n.dims[t] * m.dims[s]));
    let mut system = Matrix::zeros(c_off[arrow_list.len()], h_off[verts]);
    for (a, &(idx, s, t)) in arrow_list.iter().enumerate() {
        let (na, ma) = (&n.maps[idx], &m.maps[idx]);
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let row = c_off[a] + r * m.dims[s] + c;
                for k in 0..n.dims[s] {
                    let col = h_off[s] + k * m.dims[s] + c;
                    let v = system.get(row, col) as i64 + na.get(r, k) as i64;
                    system.set_signed(row, col, v);
                }
                for k in 0..m.dims[t] {
                    let col = h_off[t] + r * m.dims[t] + k;
                    let v = system.get(row, col) as i64 - ma.get(k, c) as i64;
                    system.set_signed(row, col, v);
                }
            }
        }
    }
    (system, h_off, c_off)
}

/// Basis of `Hom(m, n)`, found as the solution space of the commuting-square
/// equations.
pub fn hom_basis(m: &Representation, n: &Representation) -> Vec<Morphism> {
    let verts = m.vertex_count();
    let (system, h_off, _) = commutator_system(m, n);
    let unknowns = h_off[verts];
    let basis = if system.rows() == 0 {
        Matrix::identity(unknowns)
    } else {
        system.nullspace()
    };
    (0..basis.cols())
        .map(|k| {
            let components = (0..verts)
                .map(|v| {
                    let mut f = Matrix::zeros(n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for c in 0..m.dims[v] {
                            f.set(r, c, basis.get(h_off[v] + r * m.dims[v] + c, k));
                        }
                    }
                    f
                })
                .collect();
            Morphism { components }
        })
        .collect()
}

/// Euler form `<dim m, dim n>` of the quiver.
pub fn euler_form(m: &Representation, n: &Representation) -> i64 {
    let d = |r: &Representation, i: usize| r.dims[i] as i64;
    let verts = m.vertex_count();
    let diag: i64 = (0..verts).map(|i| d(m, i) * d(n, i)).sum();
    let arrow_terms: i64 = arrows(verts).map(|(_, s, t)| d(m, s) * d(n, t)).sum();
    diag - arrow_terms
}

pub fn hom_dim(m: &Representation, n: &Representation) -> usize {
    hom_basis(m, n).len()
}

/// `dim Ext^1(m, n)`; the path algebra is hereditary, so this is
/// `dim Hom(m, n) - <dim m, dim n>`.
pub fn ext1_dim(m: &Representation, n: &Representation) -> usize {
    let v = hom_dim(m, n) as i64 - euler_form(m, n);
    assert!(v >= 0);
    v as usize
}

pub fn hom_mod(rank: u32, m: IntervalModule, n: IntervalModule) -> usize {
    hom_dim(
        &Representation::interval(rank, m),
        &Representation::interval(rank, n),
    )
}

pub fn ext1_mod(rank: u32, m: IntervalModule, n: IntervalModule) -> usize {
    ext1_dim(
        &Representation::interval(rank, m),
        &Representation::interval(rank, n),
    )
}

/// A non-split extension `0 -> n -> E -> m -> 0`, built from a cocycle that is
/// not a coboundary. Returns `None` when `Ext^1(m, n) = 0`.
pub fn nonsplit_extension(m: &Representation, n: &Representation) -> Option<Representation> {
    let verts = m.vertex_count();
    let (delta, _, c_off) = commutator_system(m, n);
    let cocycles = delta.rows();
    let base_rank = delta.rank();
    let pick = (0..cocycles).find(|&k| {
        let mut e = Matrix::zeros(cocycles, 1);
        e.set(k, 0, 1);
        delta.hstack(&e).rank() > base_rank
    })?;
    let dims: Vec<usize> = (0..verts).map(|i| n.dims[i] + m.dims[i]).collect();
    let maps = arrows(verts)
        .enumerate()
        .map(|(a, (idx, s, t))| {
            // [[n_α, c], [0, m_α]] with respect to E_v = n_v + m_v
            let mut e = Matrix::zeros(dims[t], dims[s]);
            for r in 0..n.dims[t] {
                for c in 0..n.dims[s] {
                    e.set(r, c, n.maps[idx].get(r, c));
                }
                for c in 0..m.dims[s] {
                    e.set(
                        r,
                        n.dims[s] + c,
                        u64::from(c_off[a] + r * m.dims[s] + c == pick),
                    );
                }
            }
            for r in 0..m.dims[t] {
                for c in 0..m.dims[s] {
                    e.set(n.dims[t] + r, n.dims[s] + c, m.maps[idx].get(r, c));
                }
            }
            e
        })
        .collect();
    Some(Representation { dims, maps })
}

/// Summands of the kernel of `f : m -> n`.
pub fn kernel_summands(f: &Morphism, m: &Representation) -> Vec<IntervalModule> {
    let bases: Vec<Matrix> = f.components.iter().map(|c| c.nullspace()).collect();
    barcode(m.vertex_count(), |lo, hi| {
        if bases[hi].cols() == 0 {
            0
        } else {
            m.composite(lo, hi).mul(&bases[hi]).rank()
        }
    })
}

/// Summands of the cokernel of `f : m -> n`.
pub fn cokernel_summands(f: &Morphism, n: &Representation) -> Vec<IntervalModule> {
    barcode(n.vertex_count(), |lo, hi| {
        let image = &f.components[lo];
        n.composite(lo, hi).hstack(image).rank() - image.rank()
    })
}
