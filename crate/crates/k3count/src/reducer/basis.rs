//! An explicit model of the cohomology of the elliptic K3 surface E(2).
//!
//! The basis has 24 elements: the unit (degree 0) at index 0, twenty-two
//! degree-2 classes at indices 1..=22, and the point class (degree 4) at
//! index 23. The pairing matrix is the intersection form: unit and point
//! pair to 1, the degree-2 block is U + U + U + E8(-1) + E8(-1), and all
//! pairings of wrong total degree vanish. The dual basis comes from the
//! inverse of the pairing matrix.

use num_traits::{One, Zero};

use crate::series::{rat, Rat};

pub const BASIS_SIZE: usize = 24;
pub const DEG2_RANK: usize = 22;
pub const UNIT_INDEX: usize = 0;
pub const POINT_INDEX: usize = 23;

/// A homogeneous cohomology class in coordinates over the fixed 24-element
/// basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohClass {
    coords: Vec<Rat>,
}

impl CohClass {
    pub fn new(coords: Vec<Rat>) -> Self {
        assert_eq!(coords.len(), BASIS_SIZE);
        CohClass { coords }
    }

    pub fn basis_element(i: usize) -> Self {
        assert!(i < BASIS_SIZE);
        let mut coords = vec![Rat::zero(); BASIS_SIZE];
        coords[i] = Rat::one();
        CohClass { coords }
    }

    pub fn unit() -> Self {
        Self::basis_element(UNIT_INDEX)
    }

    pub fn point() -> Self {
        Self::basis_element(POINT_INDEX)
    }

    /// A degree-2 class from its 22 block coordinates.
    pub fn from_deg2(block: &[i64]) -> Self {
        assert_eq!(block.len(), DEG2_RANK);
        let mut coords = vec![Rat::zero(); BASIS_SIZE];
        for (k, &v) in block.iter().enumerate() {
            coords[1 + k] = rat(v);
        }
        CohClass { coords }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    /// Real degree (0, 2, or 4). Panics on mixed-degree or zero classes:
    /// every class the reduction handles is homogeneous and nonzero.
    pub fn degree(&self) -> usize {
        let mut deg = None;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = index_degree(i);
            match deg {
                None => deg = Some(d),
                Some(existing) => assert_eq!(existing, d, "mixed-degree class"),
            }
        }
        deg.expect("the zero class has no degree")
    }

    pub fn scaled(&self, c: i64) -> CohClass {
        CohClass {
            coords: self.coords.iter().map(|x| x * rat(c)).collect(),
        }
    }

    pub fn minus(&self, other: &CohClass) -> CohClass {
        CohClass {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Degree of basis element i.
pub fn index_degree(i: usize) -> usize {
    match i {
        UNIT_INDEX => 0,
        POINT_INDEX => 4,
        _ => 2,
    }
}

/// The 24-element basis with its intersection pairing, dual basis, and the
/// section/fiber classes.
pub struct CohBasis {
    gram: Vec<Vec<Rat>>,
    dual: Vec<CohClass>,
    s: CohClass,
    f: CohClass,
}

/// The hyperbolic plane.
const U_BLOCK: [[i64; 2]; 2] = [[0, 1], [1, 0]];

/// E8 Cartan matrix (nodes 1..8; node 2 hangs off node 4).
const E8_BLOCK: [[i64; 8]; 8] = [
    [2, 0, -1, 0, 0, 0, 0, 0],
    [0, 2, 0, -1, 0, 0, 0, 0],
    [-1, 0, 2, -1, 0, 0, 0, 0],
    [0, -1, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, 0, 0, -1, 2],
];

/// The degree-2 Gram matrix U + U + U + E8(-1) + E8(-1).
pub fn k3_deg2_gram() -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; DEG2_RANK]; DEG2_RANK];
    let mut off = 0;
    for _ in 0..3 {
        for i in 0..2 {
            for j in 0..2 {
                m[off + i][off + j] = U_BLOCK[i][j];
            }
        }
        off += 2;
    }
    for _ in 0..2 {
        for i in 0..8 {
            for j in 0..8 {
                m[off + i][off + j] = -E8_BLOCK[i][j];
            }
        }
        off += 8;
    }
    m
}

/// An alternative nondegenerate unimodular degree-2 form, the odd lattice
/// diag(+1, +1, +1, -1 x 19), with its own section/fiber pair. Exercises
/// basis independence of the reduction.
pub fn odd_deg2_gram() -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; DEG2_RANK]; DEG2_RANK];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = if i < 3 { 1 } else { -1 };
    }
    m
}

impl CohBasis {
    /// The standard model: degree-2 block U^3 + E8(-1)^2 with s = e1 - f1
    /// and f = f1 in the first hyperbolic block.
    pub fn build() -> CohBasis {
        let mut s22 = [0i64; DEG2_RANK];
        s22[0] = 1;
        s22[1] = -1;
        let mut f22 = [0i64; DEG2_RANK];
        f22[1] = 1;
        let basis = Self::build_with_deg2_gram(&k3_deg2_gram(), &s22, &f22);
        // evenness of the K3 intersection form
        for i in 0..DEG2_RANK {
            let diag = &basis.gram[1 + i][1 + i];
            assert!(
                (diag / rat(2)).is_integer(),
                "degree-2 block must be even"
            );
        }
        basis
    }

    /// Build from any symmetric nondegenerate degree-2 Gram matrix and a
    /// section/fiber pair with s.s = -2, f.f = 0, s.f = 1.
    pub fn build_with_deg2_gram(deg2: &[Vec<i64>], s22: &[i64], f22: &[i64]) -> CohBasis {
        assert_eq!(deg2.len(), DEG2_RANK);
        let mut gram = vec![vec![Rat::zero(); BASIS_SIZE]; BASIS_SIZE];
        gram[UNIT_INDEX][POINT_INDEX] = Rat::one();
        gram[POINT_INDEX][UNIT_INDEX] = Rat::one();
        for i in 0..DEG2_RANK {
            assert_eq!(deg2[i].len(), DEG2_RANK);
            for j in 0..DEG2_RANK {
                assert_eq!(deg2[i][j], deg2[j][i], "pairing must be symmetric");
                gram[1 + i][1 + j] = rat(deg2[i][j]);
            }
        }

        let inverse = invert_matrix(&gram).expect("intersection pairing must be nondegenerate");
        let dual = (0..BASIS_SIZE)
            .map(|a| CohClass::new(inverse[a].clone()))
            .collect();

        let basis = CohBasis {
            gram,
            dual,
            s: CohClass::from_deg2(s22),
            f: CohClass::from_deg2(f22),
        };
        assert_eq!(basis.pair(&basis.s, &basis.s), rat(-2), "s.s must be -2");
        assert_eq!(basis.pair(&basis.f, &basis.f), rat(0), "f.f must be 0");
        assert_eq!(basis.pair(&basis.s, &basis.f), rat(1), "s.f must be 1");
        basis
    }

    /// Intersection pairing of two classes.
    pub fn pair(&self, x: &CohClass, y: &CohClass) -> Rat {
        let mut sum = Rat::zero();
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() || self.gram[i][j].is_zero() {
                    continue;
                }
                sum += xi * &self.gram[i][j] * yj;
            }
        }
        sum
    }

    /// H^a: the class dual to basis element a under the pairing.
    pub fn dual_class(&self, a: usize) -> &CohClass {
        &self.dual[a]
    }

    /// Section class s (degree 2, s.s = -2).
    pub fn section(&self) -> &CohClass {
        &self.s
    }

    /// Fiber class f (degree 2, f.f = 0, s.f = 1).
    pub fn fiber(&self) -> &CohClass {
        &self.f
    }

    /// Sum over the basis of the pairing of each element with its dual;
    /// equals the Euler characteristic 24 of a K3 surface.
    pub fn euler_trace(&self) -> Rat {
        (0..BASIS_SIZE)
            .map(|a| self.pair(&CohClass::basis_element(a), &self.dual[a]))
            .sum()
    }
}

/// Exact Gauss-Jordan inverse; None when the matrix is singular.
fn invert_matrix(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut ext = row.clone();
            ext.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            ext
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let pv = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &pv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}
