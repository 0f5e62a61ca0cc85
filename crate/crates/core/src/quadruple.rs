//! Four-dimensional algebras on the basis `(1, a, b, c)` with `ab = c`.
//!
//! Given only the squares of `a` and `b`, [`derive_tables`] finds every
//! multiplication table whose unknown entries (`ba, ac, ca, bc, cb, c²`) are
//! signed basis units and which is associative on all 64 basis triples. The
//! four classical systems sit among the results:
//!
//! | system       | a² | b² | c² | commutative |
//! |--------------|----|----|----|-------------|
//! | quaternion   | −1 | −1 | −1 | no          |
//! | tessarine    | −1 | +1 | −1 | yes         |
//! | coquaternion | −1 | +1 | +1 | no          |
//! | cotessarine  | +1 | +1 | +1 | yes         |

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::Zero;
use thiserror::Error;

use crate::scalar::Scalar;

pub const BASIS_NAMES: [&str; 4] = ["1", "a", "b", "c"];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuadError {
    #[error("elements belong to different multiplication tables")]
    TableMismatch,
    #[error("unknown system {0:?}; expected quaternion, tessarine, coquaternion or cotessarine")]
    UnknownSystem(String),
    #[error("generator square must be +1 or -1, got {0}")]
    InvalidSquare(i8),
}

/// `±e_index`; index 0 is the scalar unit, so squares are `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedUnit {
    pub negative: bool,
    pub index: u8,
}

impl SignedUnit {
    pub const fn pos(index: u8) -> Self {
        SignedUnit { negative: false, index }
    }

    pub const fn neg(index: u8) -> Self {
        SignedUnit { negative: true, index }
    }

    pub const fn scalar(sign: i8) -> Self {
        SignedUnit { negative: sign < 0, index: 0 }
    }

    fn flip(self, negative: bool) -> Self {
        SignedUnit { negative: self.negative ^ negative, index: self.index }
    }
}

impl fmt::Display for SignedUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        f.write_str(BASIS_NAMES[self.index as usize])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadSignature {
    pub sq_a: i8,
    pub sq_b: i8,
}

impl QuadSignature {
    pub fn new(sq_a: i8, sq_b: i8) -> Result<Self, QuadError> {
        for s in [sq_a, sq_b] {
            if s != 1 && s != -1 {
                return Err(QuadError::InvalidSquare(s));
            }
        }
        Ok(QuadSignature { sq_a, sq_b })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    /// `products[r][c]` is `e_r · e_c`.
    pub products: [[SignedUnit; 4]; 4],
}

impl CayleyTable {
    pub fn product(&self, r: usize, c: usize) -> SignedUnit {
        self.products[r][c]
    }

    fn mul_units(&self, x: SignedUnit, y: SignedUnit) -> SignedUnit {
        self.products[x.index as usize][y.index as usize].flip(x.negative ^ y.negative)
    }

    pub fn is_associative(&self) -> bool {
        (0..4).all(|x| {
            (0..4).all(|y| {
                (0..4).all(|z| {
                    let (x, y, z) = (SignedUnit::pos(x), SignedUnit::pos(y), SignedUnit::pos(z));
                    self.mul_units(self.mul_units(x, y), z) == self.mul_units(x, self.mul_units(y, z))
                })
            })
        })
    }

    pub fn has_identity(&self) -> bool {
        (0..4u8).all(|k| {
            self.products[0][k as usize] == SignedUnit::pos(k) && self.products[k as usize][0] == SignedUnit::pos(k)
        })
    }

    /// Normal: multiplication is commutative.
    pub fn is_normal(&self) -> bool {
        (0..4).all(|r| (0..4).all(|c| self.products[r][c] == self.products[c][r]))
    }

    /// Squares of `(a, b, c)` as `±1`.
    pub fn squares(&self) -> [i8; 3] {
        [1, 2, 3].map(|k| {
            let p = self.products[k][k];
            debug_assert_eq!(p.index, 0);
            if p.negative {
                -1
            } else {
                1
            }
        })
    }

    /// Which of the four systems this table is, up to renaming the
    /// generators: commutativity plus the number of units squaring to `+1`.
    pub fn classify(&self) -> QuadSystem {
        let positive = self.squares().iter().filter(|&&s| s > 0).count();
        match (self.is_normal(), positive) {
            (false, 0) => QuadSystem::Quaternion,
            (true, 1) => QuadSystem::Tessarine,
            (false, 2) => QuadSystem::Coquaternion,
            (true, 3) => QuadSystem::Cotessarine,
            (normal, positive) => unreachable!("associative table with normal={normal}, {positive} positive squares"),
        }
    }

    /// `true` for the canonical table of its system; `false` marks a mirror,
    /// the same system under a renaming of `a, b, c`.
    pub fn is_canonical(&self) -> bool {
        self.classify().table() == *self
    }

    /// Rows as strings such as `"-c"`, row `r` holding `e_r · e_*`.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.products.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect()
    }
}

/// Aligned text rendering with a header row and column.
impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>3}", "·")?;
        for name in BASIS_NAMES {
            write!(f, " {:>3}", name)?;
        }
        for (r, row) in self.products.iter().enumerate() {
            writeln!(f)?;
            write!(f, "{:>3}", BASIS_NAMES[r])?;
            for p in row {
                write!(f, " {:>3}", p.to_string())?;
            }
        }
        Ok(())
    }
}

/// Every associative unital table with the given generator squares and
/// `ab = +c`, in a deterministic order (lexicographic in the unknowns
/// `ba, ac, ca, bc, cb, c²`).
pub fn derive_tables(sig: QuadSignature) -> Vec<CayleyTable> {
    let candidates: Vec<SignedUnit> = (0..4u8).flat_map(|i| [SignedUnit::pos(i), SignedUnit::neg(i)]).collect();
    let mut base = [[SignedUnit::pos(0); 4]; 4];
    for k in 0..4u8 {
        base[0][k as usize] = SignedUnit::pos(k);
        base[k as usize][0] = SignedUnit::pos(k);
    }
    base[1][1] = SignedUnit::scalar(sig.sq_a);
    base[2][2] = SignedUnit::scalar(sig.sq_b);
    base[1][2] = SignedUnit::pos(3);

    const UNKNOWN: [(usize, usize); 6] = [(2, 1), (1, 3), (3, 1), (2, 3), (3, 2), (3, 3)];
    let n = candidates.len();
    let mut found = Vec::new();
    for code in 0..n.pow(UNKNOWN.len() as u32) {
        let mut table = CayleyTable { products: base };
        let mut rest = code;
        for &(r, c) in UNKNOWN.iter().rev() {
            table.products[r][c] = candidates[rest % n];
            rest /= n;
        }
        if table.is_associative() {
            found.push(table);
        }
    }
    found
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadSystem {
    Quaternion,
    Tessarine,
    Coquaternion,
    Cotessarine,
}

impl QuadSystem {
    pub const ALL: [QuadSystem; 4] =
        [QuadSystem::Quaternion, QuadSystem::Tessarine, QuadSystem::Coquaternion, QuadSystem::Cotessarine];

    pub fn name(self) -> &'static str {
        match self {
            QuadSystem::Quaternion => "quaternion",
            QuadSystem::Tessarine => "tessarine",
            QuadSystem::Coquaternion => "coquaternion",
            QuadSystem::Cotessarine => "cotessarine",
        }
    }

    pub fn signature(self) -> QuadSignature {
        let (sq_a, sq_b) = match self {
            QuadSystem::Quaternion => (-1, -1),
            QuadSystem::Tessarine | QuadSystem::Coquaternion => (-1, 1),
            QuadSystem::Cotessarine => (1, 1),
        };
        QuadSignature { sq_a, sq_b }
    }

    pub fn c_square(self) -> i8 {
        match self {
            QuadSystem::Quaternion | QuadSystem::Tessarine => -1,
            QuadSystem::Coquaternion | QuadSystem::Cotessarine => 1,
        }
    }

    /// The table derived from the signature whose `c²` matches the system.
    /// Derived once per process.
    pub fn table(self) -> CayleyTable {
        static TABLES: OnceLock<[CayleyTable; 4]> = OnceLock::new();
        let tables = TABLES.get_or_init(|| QuadSystem::ALL.map(QuadSystem::derive));
        tables[self as usize]
    }

    fn derive(self) -> CayleyTable {
        let want = SignedUnit::scalar(self.c_square());
        let matching: Vec<CayleyTable> =
            derive_tables(self.signature()).into_iter().filter(|t| t.products[3][3] == want).collect();
        assert_eq!(matching.len(), 1, "{} must have exactly one table", self.name());
        matching[0]
    }
}

impl FromStr for QuadSystem {
    type Err = QuadError;
    fn from_str(s: &str) -> Result<Self, QuadError> {
        QuadSystem::ALL
            .into_iter()
            .find(|sys| sys.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| QuadError::UnknownSystem(s.to_string()))
    }
}

impl fmt::Display for QuadSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadElement<T> {
    pub coeffs: [T; 4],
    pub table: CayleyTable,
}

impl<T: Scalar> QuadElement<T> {
    pub fn new(coeffs: [T; 4], table: CayleyTable) -> Self {
        QuadElement { coeffs, table }
    }

    pub fn basis(table: CayleyTable, index: usize) -> Self {
        let mut coeffs = [T::zero(), T::zero(), T::zero(), T::zero()];
        coeffs[index] = T::one();
        QuadElement { coeffs, table }
    }

    pub fn one(table: CayleyTable) -> Self {
        Self::basis(table, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, QuadError> {
        if self.table != rhs.table {
            return Err(QuadError::TableMismatch);
        }
        let coeffs = std::array::from_fn(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone());
        Ok(QuadElement { coeffs, table: self.table })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, QuadError> {
        if self.table != rhs.table {
            return Err(QuadError::TableMismatch);
        }
        let mut out: [T; 4] = std::array::from_fn(|_| T::zero());
        for (r, u) in self.coeffs.iter().enumerate() {
            for (c, v) in rhs.coeffs.iter().enumerate() {
                let p = self.table.products[r][c];
                let term = u.clone() * v.clone();
                let slot = &mut out[p.index as usize];
                *slot = if p.negative { slot.clone() - term } else { slot.clone() + term };
            }
        }
        Ok(QuadElement { coeffs: out, table: self.table })
    }

    /// Matrix of `v ↦ self·v` in the basis; column `j` is `self·e_j`.
    pub fn left_multiplication_matrix(&self) -> [[T; 4]; 4] {
        let mut m: [[T; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| T::zero()));
        for (r, u) in self.coeffs.iter().enumerate() {
            for (j, &p) in self.table.products[r].iter().enumerate() {
                let slot = &mut m[p.index as usize][j];
                *slot = if p.negative { slot.clone() - u.clone() } else { slot.clone() + u.clone() };
            }
        }
        m
    }

    /// `det(L_u)`; multiplicative because `L_{uv} = L_u L_v`.
    pub fn norm_form(&self) -> T {
        determinant(self.left_multiplication_matrix())
    }
}

/// Gaussian elimination with largest-magnitude pivoting.
pub(crate) fn determinant<T: Scalar, const N: usize>(mut m: [[T; N]; N]) -> T {
    let mag = |x: &T| if x.is_negative() { -x.clone() } else { x.clone() };
    let mut det = T::one();
    for col in 0..N {
        let pivot = (col..N).fold(col, |best, r| if mag(&m[r][col]) > mag(&m[best][col]) { r } else { best });
        if m[pivot][col].is_zero() {
            return T::zero();
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = det * p.clone();
        for r in col + 1..N {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() / p.clone();
            let pivot_row = m[col].clone();
            for (dst, v) in m[r].iter_mut().zip(pivot_row).skip(col) {
                *dst = dst.clone() - v * factor.clone();
            }
        }
    }
    det
}
