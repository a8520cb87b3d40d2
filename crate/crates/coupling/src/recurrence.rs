//! Recurrences for the coupling integrals.
//!
//! The scheme only depends on the weight through the two seeds and the
//! companion ladder for `H^0_{n,1}`:
//!
//! * axis ladder: `H_{n+1,0} = (2n+1)/(n+1) H_{n,1} - n/(n+1) H_{n-1,0}`,
//! * fill: `H_{n,n'} = (2n'-1)/((2n+1)(n'-m)) [(n+1-m) H_{n+1,n'-1} + (n+m) H_{n-1,n'-1}]
//!   - (n'-1+m)/(n'-m) H_{n,n'-2}`,
//! * order raising from `m - 1` to `m` for the columns `n' = m` and `n' = m + 1`.
//!
//! The fill step consumes row `n + 1`, so every order needs deeper rows than
//! it reports. Slice `m` is carried to depth `axis_depth(n_max) - 2m`.

use crate::kind::{seeds_dd, Kind};
use crate::{CouplingError, Result};
use num_complex::Complex;
use std::ops::{Add, Div, Mul, Neg, Sub};
use steklov_numerics::Dd;

/// Field operations needed by the recurrences.
pub trait Scalar:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
    fn from_f64(x: f64) -> Self;

    /// `num / den` rounded in the working precision, not in f64.
    fn ratio(num: f64, den: f64) -> Self {
        Self::from_f64(num) / Self::from_f64(den)
    }
}

impl Scalar for Dd {
    fn from_f64(x: f64) -> Self {
        Dd::new(x)
    }
}

impl Scalar for Complex<Dd> {
    fn from_f64(x: f64) -> Self {
        Complex::new(Dd::new(x), Dd::ZERO)
    }
}

impl Scalar for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }
}

/// Row depth of the `m = 0` slice needed for a table of order `n_max`.
pub fn axis_depth(n_max: usize) -> usize {
    4 * n_max + 6
}

/// `H^0_{n,0}` and `H^0_{n,1}` for `n = 0..=depth`.
#[derive(Debug, Clone)]
pub struct AxisColumns<T> {
    pub kind: Kind,
    pub depth: usize,
    pub z2: T,
    pub col0: Vec<T>,
    pub col1: Vec<T>,
}

pub(crate) fn axis_generic<T: Scalar>(
    kind: Kind,
    z2: T,
    h00: T,
    h11: T,
    depth: usize,
) -> AxisColumns<T> {
    let zero = T::from_f64(0.0);
    let mut col0 = vec![zero; depth + 2];
    let mut col1 = vec![zero; depth + 2];
    col0[0] = h00;
    col1[1] = h11;
    let (a, b, sign) = kind.companion();
    for n in 1..=depth {
        let nf = n as f64;
        if n % 2 == 1 {
            col0[n + 1] = T::ratio(2.0 * nf + 1.0, nf + 1.0) * col1[n]
                - T::ratio(nf, nf + 1.0) * col0[n - 1];
        } else {
            col1[n + 1] = -T::ratio(nf - a, nf + b) * col1[n - 1]
                + T::ratio(sign * (2.0 * nf + 1.0), nf + b) * z2 * col0[n];
        }
    }
    col0.truncate(depth + 1);
    col1.truncate(depth + 1);
    AxisColumns {
        kind,
        depth,
        z2,
        col0,
        col1,
    }
}

/// Axis columns in double-double, deep enough for a table of order `n_max`.
pub fn fill_axis(kind: Kind, z: f64, n_max: usize) -> Result<AxisColumns<Dd>> {
    let (h00, h11) = seeds_dd(kind, z)?;
    let zd = Dd::new(z);
    Ok(axis_generic(kind, zd * zd, h00, h11, axis_depth(n_max)))
}

/// One order of the recurrence table, rows and columns `0..=depth`.
#[derive(Debug, Clone)]
pub(crate) struct RawSlice<T> {
    pub m: usize,
    pub depth: usize,
    pub data: Vec<T>,
}

impl<T: Scalar> RawSlice<T> {
    fn new(m: usize, depth: usize) -> Self {
        RawSlice {
            m,
            depth,
            data: vec![T::from_f64(0.0); (depth + 1) * (depth + 1)],
        }
    }

    #[inline]
    pub fn get(&self, n: usize, np: usize) -> T {
        if n > self.depth || np > self.depth {
            return T::from_f64(0.0);
        }
        self.data[n * (self.depth + 1) + np]
    }

    #[inline]
    fn set(&mut self, n: usize, np: usize, v: T) {
        self.data[n * (self.depth + 1) + np] = v;
    }

    /// Columns `n' >= m + 2` from the two lowest columns.
    fn fill_columns(&mut self) {
        let m = self.m;
        let mf = m as f64;
        for np in m + 2..=self.depth {
            let rows = self.depth - (np - m);
            let npf = np as f64;
            for n in m..=rows {
                if (n + np) % 2 == 1 {
                    continue;
                }
                let nf = n as f64;
                let up = self.get(n + 1, np - 1);
                let down = if n > m { self.get(n - 1, np - 1) } else { T::from_f64(0.0) };
                let v = T::ratio(2.0 * npf - 1.0, (2.0 * nf + 1.0) * (npf - mf))
                    * (T::from_f64(nf + 1.0 - mf) * up + T::from_f64(nf + mf) * down)
                    - T::ratio(npf - 1.0 + mf, npf - mf) * self.get(n, np - 2);
                self.set(n, np, v);
            }
        }
    }
}

pub(crate) fn slices_generic<T: Scalar>(axis: &AxisColumns<T>, n_max: usize) -> Result<Vec<RawSlice<T>>> {
    let needed = axis_depth(n_max);
    if axis.depth < needed {
        return Err(CouplingError::InsufficientSeeds {
            n_max,
            needed,
            available: axis.depth,
        });
    }
    let depth0 = needed;
    let mut slices: Vec<RawSlice<T>> = Vec::with_capacity(n_max + 1);
    let mut s0 = RawSlice::new(0, depth0);
    for n in 0..=depth0 {
        s0.set(n, 0, axis.col0[n]);
        s0.set(n, 1, axis.col1[n]);
    }
    s0.fill_columns();
    slices.push(s0);
    for m in 1..=n_max {
        let prev = &slices[m - 1];
        let depth = depth0 - 2 * m;
        let mut s = RawSlice::new(m, depth);
        let mf = m as f64;
        for n in m..=depth {
            let nf = n as f64;
            let lower = (nf + mf - 1.0) * (nf + mf);
            let upper = (nf - mf + 1.0) * (nf - mf + 2.0);
            if (n + m) % 2 == 0 {
                let v = T::ratio(2.0 * mf - 1.0, 2.0 * nf + 1.0)
                    * (T::from_f64(lower) * prev.get(n - 1, m - 1) - T::from_f64(upper) * prev.get(n + 1, m - 1));
                s.set(n, m, v);
            } else {
                let v = T::ratio(2.0 * mf + 1.0, 2.0 * nf + 1.0)
                    * (T::from_f64(lower) * prev.get(n - 1, m) - T::from_f64(upper) * prev.get(n + 1, m));
                s.set(n, m + 1, v);
            }
        }
        s.fill_columns();
        slices.push(s);
    }
    Ok(slices)
}

/// Full recurrence table in double-double; entry `[m][(n - m) * size + (n' - m)]`
/// with `size = n_max + 1 - m`.
///
/// Entries are taken from rows `n <= n'`: the axis ladders lose accuracy
/// with depth while the fill recovers it, so the upper triangle is the
/// accurate one.
pub fn fill_table(axis: &AxisColumns<Dd>, n_max: usize) -> Result<Vec<Vec<Dd>>> {
    Ok(pack(&slices_generic(axis, n_max)?, n_max))
}

pub(crate) fn pack<T: Scalar>(slices: &[RawSlice<T>], n_max: usize) -> Vec<Vec<T>> {
    slices
        .iter()
        .map(|s| {
            let m = s.m;
            let size = n_max + 1 - m;
            let mut out = vec![T::from_f64(0.0); size * size];
            for n in m..=n_max {
                for np in n..=n_max {
                    if (n + np) % 2 == 0 {
                        let v = s.get(n, np);
                        out[(n - m) * size + (np - m)] = v;
                        out[(np - m) * size + (n - m)] = v;
                    }
                }
            }
            out
        })
        .collect()
}
