//! Grothendieck groups `K(S_n)` and `K_B(GL_n)`.
//!
//! Both are free abelian groups on `𝒴_n`. `K(S_n)` has the irreducible basis
//! `σ_D` and the Young-module basis `Y_D`; `K_B(GL_n)` has the spherical
//! principal series basis `ρ_D` and the flag-module basis `I_D`. The two are
//! identified by the isometry `ι` with `ι(Y_D) = I_D` and `ι(σ_D) = ρ_D`, so
//! the GL side is carried entirely by relabeling.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::pieri::{pieri_expand_sn, KostkaTable};
use crate::{Error, Partition, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    SymmetricGroup,
    FiniteGeneralLinear,
}

/// `Irreducible` is `σ_D` / `ρ_D`; `YoungOrInduced` is `Y_D` / `I_D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Irreducible,
    YoungOrInduced,
}

impl Group {
    pub fn label(self) -> &'static str {
        match self {
            Group::SymmetricGroup => "S_n",
            Group::FiniteGeneralLinear => "GL_n(F_q)",
        }
    }
}

/// An integer combination of basis elements labelled by partitions of `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualRep {
    n: usize,
    group: Group,
    basis: Basis,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl VirtualRep {
    pub fn zero(n: usize, group: Group, basis: Basis) -> Self {
        Self { n, group, basis, coeffs: BTreeMap::new() }
    }

    /// A single basis element with coefficient one.
    pub fn basis_element(d: Partition, group: Group, basis: Basis) -> Self {
        let mut v = Self::zero(d.size(), group, basis);
        v.coeffs.insert(d, BigInt::one());
        v
    }

    /// `σ_D`
    pub fn sigma(d: Partition) -> Self {
        Self::basis_element(d, Group::SymmetricGroup, Basis::Irreducible)
    }

    /// `Y_D`
    pub fn young(d: Partition) -> Self {
        Self::basis_element(d, Group::SymmetricGroup, Basis::YoungOrInduced)
    }

    /// `ρ_D`
    pub fn rho(d: Partition) -> Self {
        Self::basis_element(d, Group::FiniteGeneralLinear, Basis::Irreducible)
    }

    /// `I_D`
    pub fn induced(d: Partition) -> Self {
        Self::basis_element(d, Group::FiniteGeneralLinear, Basis::YoungOrInduced)
    }

    pub fn from_terms<I>(n: usize, group: Group, basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut v = Self::zero(n, group, basis);
        for (d, c) in terms {
            v.add_term(d, c)?;
        }
        Ok(v)
    }

    pub fn add_term(&mut self, d: Partition, c: BigInt) -> Result<()> {
        if d.size() != self.n {
            return Err(Error::SizeMismatch { left: self.n, right: d.size() });
        }
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.coeffs.entry(d.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&d);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coefficient(&self, d: &Partition) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    /// Non-zero terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when no coefficient is negative.
    pub fn is_genuine(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Coefficientwise comparison `self ≤ other` (same group, n and basis).
    pub fn le(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        if self.basis != other.basis {
            return Err(Error::WrongBasis);
        }
        let keys = self.coeffs.keys().chain(other.coeffs.keys());
        Ok(keys.into_iter().all(|d| self.coefficient(d) <= other.coefficient(d)))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    fn with_coeffs(&self, basis: Basis, values: &[BigInt], order: &[Partition]) -> Self {
        let coeffs = order
            .iter()
            .zip(values)
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| (d.clone(), c.clone()))
            .collect();
        Self { n: self.n, group: self.group, basis, coeffs }
    }
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbol = match (self.group, self.basis) {
            (Group::SymmetricGroup, Basis::Irreducible) => "σ",
            (Group::SymmetricGroup, Basis::YoungOrInduced) => "Y",
            (Group::FiniteGeneralLinear, Basis::Irreducible) => "ρ",
            (Group::FiniteGeneralLinear, Basis::YoungOrInduced) => "I",
        };
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.coeffs.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            write!(f, "{symbol}_({d})")?;
        }
        Ok(())
    }
}

/// The Grothendieck group of `S_n` (and, through [`iota`], of the spherical
/// principal series of `GL_n`) for one fixed `n`, backed by its Kostka table.
#[derive(Clone, Debug)]
pub struct RepRing {
    table: KostkaTable,
}

impl RepRing {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self { table: KostkaTable::build(n)? })
    }

    pub fn from_table(table: KostkaTable) -> Self {
        Self { table }
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn table(&self) -> &KostkaTable {
        &self.table
    }

    fn check_n(&self, v: &VirtualRep) -> Result<()> {
        if v.n != self.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: v.n });
        }
        Ok(())
    }

    fn dense(&self, v: &VirtualRep) -> Vec<BigInt> {
        self.table.partitions().iter().map(|d| v.coefficient(d)).collect()
    }

    /// Expands every `Y_D` (or `I_D`) as `Σ_E K(E,D) σ_E` (or `ρ_E`).
    /// Already-irreducible input is returned unchanged.
    pub fn to_irreducible_basis(&self, v: &VirtualRep) -> Result<VirtualRep> {
        self.check_n(v)?;
        if v.basis == Basis::Irreducible {
            return Ok(v.clone());
        }
        let order = self.table.partitions();
        let mut out = alloc::vec![BigInt::zero(); order.len()];
        for (d, c) in &v.coeffs {
            let j = self.table.index_of(d).ok_or(Error::Internal("partition missing from table"))?;
            for (i, slot) in out.iter_mut().enumerate() {
                let k = self.table.entry(i, j);
                if !k.is_zero() {
                    *slot += BigInt::from(k.clone()) * c;
                }
            }
        }
        Ok(v.with_coeffs(Basis::Irreducible, &out, order))
    }

    /// Writes an element of the irreducible basis in the Young/induced basis
    /// by back-substitution; the result has integer coefficients because the
    /// Kostka matrix is unitriangular.
    pub fn from_irreducible_basis(&self, v: &VirtualRep) -> Result<VirtualRep> {
        self.check_n(v)?;
        if v.basis == Basis::YoungOrInduced {
            return Ok(v.clone());
        }
        let solved = self.table.solve_rows(&self.dense(v));
        Ok(v.with_coeffs(Basis::YoungOrInduced, &solved, self.table.partitions()))
    }

    /// `⟨v, w⟩ = dim Hom(v, w)`, extended bilinearly; the irreducibles are
    /// orthonormal.
    pub fn intertwining_number(&self, v: &VirtualRep, w: &VirtualRep) -> Result<BigInt> {
        v.check_compatible(w)?;
        let (v, w) = (self.to_irreducible_basis(v)?, self.to_irreducible_basis(w)?);
        Ok(v.coeffs.iter().map(|(d, c)| c * w.coefficient(d)).sum())
    }

    /// `I_D = Ind_{P_D}^{GL_n}(1)` decomposed as `Σ_E K(E,D) ρ_E`.
    pub fn decompose_flag_module(&self, d: &Partition) -> Result<VirtualRep> {
        let young = self.to_irreducible_basis(&VirtualRep::young(d.clone()))?;
        Ok(iota(&young))
    }

    /// `Y_D` decomposed as `Σ_E K(E,D) σ_E`.
    pub fn decompose_young_module(&self, d: &Partition) -> Result<VirtualRep> {
        self.to_irreducible_basis(&VirtualRep::young(d.clone()))
    }
}

/// The isometry `K(S_n) → K_B(GL_n)`: `Y_D ↦ I_D`, `σ_D ↦ ρ_D`.
/// Elements already on the GL side are returned unchanged.
pub fn iota(v: &VirtualRep) -> VirtualRep {
    VirtualRep { group: Group::FiniteGeneralLinear, ..v.clone() }
}

/// Decomposition of `I_{ρ_D} = Ind_{P_{k,n−k}}^{GL_n}(ρ_D ⊗ 1)`: one copy of
/// `ρ_E` for each horizontal-strip extension `E ⊢ n` of `D`.
pub fn decompose_induced_sps(d: &Partition, n: usize) -> Result<VirtualRep> {
    let mut v = VirtualRep::zero(n, Group::FiniteGeneralLinear, Basis::Irreducible);
    for e in pieri_expand_sn(d, n)? {
        v.add_term(e, BigInt::one())?;
    }
    Ok(v)
}
