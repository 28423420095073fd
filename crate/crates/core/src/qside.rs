//! Polynomials in `q` and the `GL_n(F_q)` counting formulas: group and
//! parabolic orders, partial flag varieties, and the dimensions of the
//! spherical principal series irreducibles `ρ_D`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::pieri::KostkaTable;
use crate::{Error, Partition, Result};

/// Default upper bound on `n` for [`gl_order`] and [`flag_variety_size`].
pub const DEFAULT_GL_BOUND: usize = 64;

/// A polynomial in `q` with integer coefficients. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: BTreeMap<usize, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`
    pub fn monomial(c: BigInt, exp: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// `q^exp`
    pub fn q_pow(exp: usize) -> Self {
        Self::monomial(BigInt::one(), exp)
    }

    pub fn from_coeffs<I: IntoIterator<Item = (usize, BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (exp, c) in terms {
            p.add_term(exp, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    pub fn coefficient(&self, exp: usize) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Non-zero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn evaluate(&self, q: &BigInt) -> BigInt {
        // Horner over the dense exponent range
        let Some(top) = self.degree() else {
            return BigInt::zero();
        };
        let mut acc = BigInt::zero();
        for exp in (0..=top).rev() {
            acc *= q;
            if let Some(c) = self.coeffs.get(&exp) {
                acc += c;
            }
        }
        acc
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * k)).collect() }
    }

    fn add_term(&mut self, exp: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Quotient and remainder by a divisor whose leading coefficient divides
    /// every leading coefficient met during long division; otherwise `None`.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let div_deg = divisor.degree()?;
        let div_lead = divisor.leading_coefficient()?.clone();
        let mut quotient = Self::zero();
        let mut rest = self.clone();
        while let Some(deg) = rest.degree() {
            if deg < div_deg {
                break;
            }
            let (q, r) = rest.coeffs[&deg].div_rem(&div_lead);
            if !r.is_zero() {
                return None;
            }
            let step = Self::monomial(q, deg - div_deg);
            rest -= &(&step * divisor);
            quotient += &step;
        }
        Some((quotient, rest))
    }

    /// Exact division; errors when a remainder is left.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        match self.div_rem(divisor) {
            Some((quotient, rest)) if rest.is_zero() => Ok(quotient),
            _ => Err(Error::Internal("polynomial division left a remainder")),
        }
    }
}

impl fmt::Display for QPoly {
    /// Descending exponents, e.g. `q^3 + 2q + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (exp, c)) in self.terms().rev().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if exp == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            match exp {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{exp}")?,
            }
        }
        Ok(())
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, &-c);
        }
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (&a, x) in &self.coeffs {
            for (&b, y) in &rhs.coeffs {
                out.add_term(a + b, &(x * y));
            }
        }
        out
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        self.scaled(&-BigInt::one())
    }
}

fn check_gl_bound(n: usize) -> Result<()> {
    if n > DEFAULT_GL_BOUND {
        return Err(Error::BoundExceeded { what: "matrix size", value: n, bound: DEFAULT_GL_BOUND });
    }
    Ok(())
}

/// `Π_{i=1..n} (q^i − 1)`
fn falling_product(n: usize) -> QPoly {
    let mut acc = QPoly::one();
    for i in 1..=n {
        let factor = QPoly::from_coeffs([(i, BigInt::one()), (0, -BigInt::one())]);
        acc = &acc * &factor;
    }
    acc
}

/// `|GL_n(F_q)| = q^{n(n−1)/2} Π_{i=1..n} (q^i − 1)`.
pub fn gl_order(n: usize) -> Result<QPoly> {
    check_gl_bound(n)?;
    Ok(&QPoly::q_pow(n * n.saturating_sub(1) / 2) * &falling_product(n))
}

/// `|P_D|`: block upper-triangular matrices with diagonal blocks of sizes `d_i`.
pub fn parabolic_order(d: &Partition) -> Result<QPoly> {
    let mut acc = QPoly::q_pow(d.pair_product_sum());
    for &block in d.parts() {
        acc = &acc * &gl_order(block)?;
    }
    Ok(acc)
}

/// `|GL_n / P_D|`, the number of `F_q`-points of the partial flag variety of
/// type `D`: the q-multinomial `[n; d_1, …, d_r]_q`. This is `dim I_D`.
pub fn flag_variety_size(d: &Partition) -> Result<QPoly> {
    gl_order(d.size())?.div_exact(&parabolic_order(d)?)
}

/// Algebraic dimension of `GL_n / P_D`: `Σ_{i<j} d_i d_j`.
pub fn parabolic_codimension(d: &Partition) -> usize {
    d.pair_product_sum()
}

/// `dim ρ_E` for every `E ⊢ table.n()`, in the table's canonical order, from
/// `dim I_D = Σ_E K(E,D) dim ρ_E`.
pub fn sps_dimensions(table: &KostkaTable) -> Result<Vec<QPoly>> {
    let flags = table
        .partitions()
        .iter()
        .map(flag_variety_size)
        .collect::<Result<Vec<_>>>()?;
    Ok(table.solve_columns(&flags))
}

/// `dim ρ_D` as a polynomial in `q`.
pub fn sps_dimension(d: &Partition) -> Result<QPoly> {
    let table = KostkaTable::build(d.size())?;
    let index = table.index_of(d).ok_or(Error::Internal("partition missing from its own table"))?;
    Ok(sps_dimensions(&table)?.swap_remove(index))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(terms: &[(usize, i64)]) -> QPoly {
        QPoly::from_coeffs(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn display_format() {
        assert_eq!(poly(&[(3, 1), (1, 2), (0, 1)]).to_string(), "q^3 + 2q + 1");
        assert_eq!(poly(&[(1, 1)]).to_string(), "q");
        assert_eq!(poly(&[(2, -1), (0, -3)]).to_string(), "-q^2 - 3");
        assert_eq!(QPoly::one().to_string(), "1");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(QPoly::zero().degree(), None);
        let x = poly(&[(2, 1), (0, 1)]);
        assert!((&x - &x).is_zero());
        assert_eq!((&x - &x).degree(), None);
    }

    #[test]
    fn division() {
        let a = poly(&[(1, 1), (0, 1)]);
        let b = poly(&[(1, 1), (0, -1)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        let (quot, rest) = poly(&[(2, 1), (0, 1)]).div_rem(&a).unwrap();
        assert_eq!(quot, poly(&[(1, 1), (0, -1)]));
        assert_eq!(rest, poly(&[(0, 2)]));
        assert!(poly(&[(2, 1), (0, 1)]).div_exact(&a).is_err());
        assert!(poly(&[(1, 1)]).div_rem(&QPoly::zero()).is_none());
    }

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(1).unwrap(), poly(&[(1, 1), (0, -1)]));
        assert_eq!(gl_order(2).unwrap().evaluate(&2.into()), 6.into());
        assert_eq!(gl_order(3).unwrap().evaluate(&2.into()), 168.into());
        assert_eq!(gl_order(0).unwrap(), QPoly::one());
        assert!(gl_order(65).is_err());
    }

    #[test]
    fn flag_sizes() {
        assert_eq!(flag_variety_size(&p(&[1, 1])).unwrap(), poly(&[(1, 1), (0, 1)]));
        assert_eq!(flag_variety_size(&Partition::row(5)).unwrap(), QPoly::one());
        assert_eq!(
            flag_variety_size(&p(&[3, 1])).unwrap(),
            poly(&[(3, 1), (2, 1), (1, 1), (0, 1)])
        );
        assert_eq!(flag_variety_size(&p(&[3, 1])).unwrap().evaluate(&2.into()), 15.into());
    }

    #[test]
    fn codimensions() {
        assert_eq!(parabolic_codimension(&p(&[3, 1])), 3);
        assert_eq!(parabolic_codimension(&Partition::row(4)), 0);
        assert_eq!(parabolic_codimension(&Partition::column(4)), 6);
    }

    #[test]
    fn steinberg_at_n2() {
        assert_eq!(sps_dimension(&p(&[1, 1])).unwrap(), poly(&[(1, 1)]));
        assert_eq!(sps_dimension(&Partition::row(4)).unwrap(), QPoly::one());
    }
}
