use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Complex, LinalgError};

/// Dense complex matrix stored row-major.
///
/// Columns double as kets, rows as bras, squares as operators. A `0×0`
/// matrix is allowed and acts as the neutral element of [`direct_sum`].
///
/// [`direct_sum`]: ComplexMatrix::direct_sum
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix { rows, cols, data: vec![Complex::ZERO; rows * cols] }
    }

    pub fn empty() -> Self {
        Self::zeros(0, 0)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Complex::ONE;
        }
        m
    }

    pub fn from_data(rows: usize, cols: usize, data: Vec<Complex>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape {
                op: "from_data",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(ComplexMatrix { rows, cols, data })
    }

    /// Build from real row-major entries.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Result<Self, LinalgError> {
        Self::from_data(rows, cols, entries.iter().map(|&x| Complex::real(x)).collect())
    }

    /// Build from nested rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Complex>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(LinalgError::Shape { op: "from_rows", left: (r, c), right: (1, row.len()) });
            }
            data.extend(row);
        }
        Ok(ComplexMatrix { rows: r, cols: c, data })
    }

    pub fn diagonal(entries: &[Complex]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in entries.iter().enumerate() {
            m.data[i * n + i] = v;
        }
        m
    }

    pub fn column(entries: Vec<Complex>) -> Self {
        ComplexMatrix { rows: entries.len(), cols: 1, data: entries }
    }

    pub fn row(entries: Vec<Complex>) -> Self {
        ComplexMatrix { rows: 1, cols: entries.len(), data: entries }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex) {
        self.data[i * self.cols + j] = v;
    }

    pub fn as_slice(&self) -> &[Complex] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Complex> {
        self.data
    }

    pub fn map(&self, f: impl Fn(Complex) -> Complex) -> Self {
        ComplexMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&c| f(c)).collect() }
    }

    fn same_shape(&self, other: &Self, op: &'static str) -> Result<(), LinalgError> {
        if self.shape() != other.shape() {
            return Err(LinalgError::Shape { op, left: self.shape(), right: other.shape() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_shape(other, "add")?;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect();
        Ok(ComplexMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_shape(other, "sub")?;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a - b).collect();
        Ok(ComplexMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, k: Complex) -> Self {
        self.map(|c| c * k)
    }

    pub fn scale_real(&self, k: f64) -> Self {
        self.map(|c| c.scale(k))
    }

    /// `c_{i,j} = Σ_l a_{i,l} b_{l,j}`.
    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape { op: "mul", left: self.shape(), right: other.shape() });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.data[i * self.cols + l];
                if a == Complex::ZERO {
                    continue;
                }
                let brow = &other.data[l * other.cols..(l + 1) * other.cols];
                let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        self.map(Complex::conj)
    }

    /// Conjugate transpose `A†`.
    pub fn dagger(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j].conj();
            }
        }
        out
    }

    /// Kronecker product: block `(i,j)` of the result is `a_{i,j}·B`.
    pub fn tensor(&self, other: &Self) -> Self {
        let (n, m) = self.shape();
        let (k, p) = other.shape();
        let mut out = Self::zeros(n * k, m * p);
        let oc = m * p;
        for i in 0..n {
            for j in 0..m {
                let a = self.data[i * m + j];
                for r in 0..k {
                    for c in 0..p {
                        out.data[(i * k + r) * oc + j * p + c] = a * other.data[r * p + c];
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal `[[A, 0], [0, B]]`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n, m) = self.shape();
        let (p, q) = other.shape();
        let mut out = Self::zeros(n + p, m + q);
        let oc = m + q;
        for i in 0..n {
            out.data[i * oc..i * oc + m].copy_from_slice(&self.data[i * m..(i + 1) * m]);
        }
        for i in 0..p {
            let r = n + i;
            out.data[r * oc + m..r * oc + m + q].copy_from_slice(&other.data[i * q..(i + 1) * q]);
        }
        out
    }

    pub fn trace(&self) -> Result<Complex, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Shape { op: "trace", left: self.shape(), right: self.shape() });
        }
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise deviation `|a_{i,j} − conj(a_{j,i})|`, or `None` if not square.
    pub fn hermitian_defect(&self) -> Option<f64> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let d = (self.get(i, j) - self.get(j, i).conj()).modulus();
                worst = worst.max(d);
            }
        }
        Some(worst)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_defect().is_some_and(|d| d <= tol)
    }

    /// Entrywise closeness under the componentwise absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.shape() == other.shape() && self.data.iter().zip(&other.data).all(|(a, b)| a.approx_eq(*b, tol))
    }

    /// Diagonal entries of a square matrix.
    pub fn diag(&self) -> Vec<Complex> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    /// Whether every off-diagonal entry is exactly zero.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j) == Complex::ZERO))
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    rows: usize,
    cols: usize,
    re: Vec<f64>,
    im: Vec<f64>,
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixDoc {
            rows: self.rows,
            cols: self.cols,
            re: self.data.iter().map(|c| c.re).collect(),
            im: self.data.iter().map(|c| c.im).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let doc = MatrixDoc::deserialize(d)?;
        if doc.re.len() != doc.rows * doc.cols || doc.im.len() != doc.re.len() {
            return Err(D::Error::custom("re/im length must equal rows*cols"));
        }
        let data = doc.re.into_iter().zip(doc.im).map(|(re, im)| Complex::new(re, im)).collect();
        Ok(ComplexMatrix { rows: doc.rows, cols: doc.cols, data })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(rows: usize, cols: usize, e: &[f64]) -> ComplexMatrix {
        ComplexMatrix::from_real(rows, cols, e).unwrap()
    }

    fn not_gate() -> ComplexMatrix {
        real(2, 2, &[0.0, 1.0, 1.0, 0.0])
    }

    #[test]
    fn add_identity_and_not() {
        let s = ComplexMatrix::identity(2).add(&not_gate()).unwrap();
        assert_eq!(s, real(2, 2, &[1.0; 4]));
        let a = real(2, 2, &[1.0, -2.0, 3.5, 0.25]);
        assert_eq!(a.add(&ComplexMatrix::zeros(2, 2)).unwrap(), a);
    }

    #[test]
    fn add_shape_mismatch() {
        let err = ComplexMatrix::zeros(2, 3).add(&ComplexMatrix::zeros(3, 2)).unwrap_err();
        assert!(matches!(err, LinalgError::Shape { op: "add", .. }));
    }

    #[test]
    fn mul_eigenvector_example() {
        let op = real(2, 2, &[0.0, 3.0, 3.0, 0.0]);
        let v = real(2, 1, &[2.0, 2.0]);
        assert_eq!(op.mul(&v).unwrap(), real(2, 1, &[6.0, 6.0]));
    }

    #[test]
    fn mul_identity_and_not_squared() {
        let a = real(2, 3, &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        assert_eq!(ComplexMatrix::identity(2).mul(&a).unwrap(), a);
        assert_eq!(not_gate().mul(&not_gate()).unwrap(), ComplexMatrix::identity(2));
        assert!(a.mul(&a).is_err());
    }

    #[test]
    fn dagger_of_scalar() {
        let m = ComplexMatrix::column(vec![Complex::I]);
        assert_eq!(m.dagger(), ComplexMatrix::column(vec![Complex::new(0.0, -1.0)]));
    }

    #[test]
    fn hermitian_example_is_self_adjoint() {
        let c = Complex::new;
        let h = ComplexMatrix::from_rows(vec![
            vec![c(1.0, 0.0), c(2.0, 1.0), c(0.0, -1.0)],
            vec![c(2.0, -1.0), c(5.0, 0.0), c(1.0, 0.0)],
            vec![c(0.0, 1.0), c(1.0, 0.0), c(7.0, 0.0)],
        ])
        .unwrap();
        assert_eq!(h.dagger(), h);
        assert!(h.is_hermitian(0.0));
    }

    #[test]
    fn tensor_not_not_is_antidiagonal() {
        let t = not_gate().tensor(&not_gate());
        let mut expect = ComplexMatrix::zeros(4, 4);
        for i in 0..4 {
            expect.set(i, 3 - i, Complex::ONE);
        }
        assert_eq!(t, expect);
        assert_eq!(ComplexMatrix::identity(2).tensor(&ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
    }

    #[test]
    fn tensor_dims_multiply() {
        let t = ComplexMatrix::zeros(2, 3).tensor(&ComplexMatrix::zeros(4, 5));
        assert_eq!(t.shape(), (8, 15));
    }

    #[test]
    fn direct_sum_scalars_and_empty() {
        let s = real(1, 1, &[1.0]).direct_sum(&real(1, 1, &[2.0]));
        assert_eq!(s, real(2, 2, &[1.0, 0.0, 0.0, 2.0]));
        let a = real(2, 3, &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        assert_eq!(a.direct_sum(&ComplexMatrix::empty()), a);
        assert_eq!(ComplexMatrix::empty().direct_sum(&a), a);
    }

    #[test]
    fn json_schema() {
        let m = ComplexMatrix::from_data(1, 2, vec![Complex::new(1.0, -1.0), Complex::new(0.5, 2.0)]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"rows":1,"cols":2,"re":[1.0,0.5],"im":[-1.0,2.0]}"#);
        let back: ComplexMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<ComplexMatrix>(r#"{"rows":2,"cols":2,"re":[1],"im":[1]}"#).is_err());
    }
}
