use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    PSegment,
    PExterior,
    QExterior,
    PImag,
    QImag,
}

/// Values and first derivatives of `X_n^m` for `0 <= n <= n_max`.
///
/// Rows also hold the order `m = n + 1`, which vanishes for the first kind
/// but not for the second; it feeds the derivative formula.
#[derive(Debug, Clone)]
pub struct LegendreTable<T> {
    pub kind: TableKind,
    pub argument: Complex64,
    pub n_max: usize,
    /// `sqrt(z^2 - 1)` on the branch used by the table (zero on the segment).
    pub w: Complex64,
    values: Vec<T>,
    derivs: Vec<T>,
}

#[inline]
fn idx(n: usize, m: usize) -> usize {
    n * (n + 3) / 2 + m
}

impl<T: Copy + Default> LegendreTable<T> {
    pub(crate) fn zeros(kind: TableKind, argument: Complex64, n_max: usize) -> Self {
        let len = idx(n_max + 1, 0);
        LegendreTable {
            kind,
            argument,
            n_max,
            w: Complex64::new(0.0, 0.0),
            values: vec![T::default(); len],
            derivs: vec![T::default(); len],
        }
    }

    #[inline]
    pub(crate) fn set(&mut self, n: usize, m: usize, v: T) {
        self.values[idx(n, m)] = v;
    }

    #[inline]
    pub(crate) fn set_deriv(&mut self, n: usize, m: usize, v: T) {
        self.derivs[idx(n, m)] = v;
    }

    /// `X_n^m`; zero for `m > n + 1`.
    #[inline]
    pub fn value(&self, n: usize, m: usize) -> T {
        assert!(n <= self.n_max, "degree {n} beyond table order {}", self.n_max);
        if m > n + 1 {
            T::default()
        } else {
            self.values[idx(n, m)]
        }
    }

    /// `dX_n^m/dz` for `m <= n`.
    #[inline]
    pub fn deriv(&self, n: usize, m: usize) -> T {
        assert!(n <= self.n_max, "degree {n} beyond table order {}", self.n_max);
        if m > n {
            T::default()
        } else {
            self.derivs[idx(n, m)]
        }
    }
}

impl LegendreTable<Complex64> {
    pub(crate) fn map_real(self, kind: TableKind) -> LegendreTable<f64> {
        LegendreTable {
            kind,
            argument: self.argument,
            n_max: self.n_max,
            w: self.w,
            values: self.values.iter().map(|v| v.re).collect(),
            derivs: self.derivs.iter().map(|v| v.re).collect(),
        }
    }

    /// Derivative through the lowering relation
    /// `[(n+m)(n-m+1) w X^{m-1} - m z X^m] / w^2`, valid for `m >= 1`.
    pub fn deriv_lowering(&self, n: usize, m: usize) -> Complex64 {
        assert!(m >= 1 && m <= n);
        let z = self.argument;
        let w = self.w;
        (((n + m) * (n + 1 - m)) as f64 * w * self.value(n, m - 1) - m as f64 * z * self.value(n, m)) / (w * w)
    }
}

impl LegendreTable<f64> {
    /// Real-argument version of [`LegendreTable::<Complex64>::deriv_lowering`].
    pub fn deriv_lowering(&self, n: usize, m: usize) -> f64 {
        assert!(m >= 1 && m <= n);
        let z = self.argument.re;
        let w = self.w.re;
        (((n + m) * (n + 1 - m)) as f64 * w * self.value(n, m - 1) - m as f64 * z * self.value(n, m)) / (w * w)
    }
}
