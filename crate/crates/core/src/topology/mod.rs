//! Invariants of the join manifolds `M^5_{k1,k2}` and of the ruled surfaces
//! `T^2 x S^2` they fiber over.

mod heisenberg;

pub use heisenberg::HeisenbergMod;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{rat, Scalar};
use crate::Rational;

/// Join parameters: relatively prime positive integers `(k1, k2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct JoinData {
    k1: u64,
    k2: u64,
}

impl JoinData {
    pub fn new(k1: u64, k2: u64) -> Result<Self> {
        if k1 == 0 || k2 == 0 {
            return Err(Error::Precondition(format!(
                "k1, k2 must be positive, got ({k1}, {k2})"
            )));
        }
        if k1.gcd(&k2) != 1 {
            return Err(Error::NotCoprime(k1, k2));
        }
        Ok(Self { k1, k2 })
    }

    pub fn k1(&self) -> u64 {
        self.k1
    }

    pub fn k2(&self) -> u64 {
        self.k2
    }
}

/// The ray `a xi + b H_2` of the two-dimensional Sasaki cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReebSelection {
    pub a: i64,
    pub b: i64,
}

pub fn sasaki_cone_member(sel: ReebSelection, join: JoinData) -> bool {
    sel.a > 0 && sel.a + sel.b * join.k2 as i64 > 0
}

/// Branch divisor `(1 - 1/p) E_n + (1 - 1/q) E_inf`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchDivisor {
    pub zero_section: Rational,
    pub infinity_section: Rational,
}

impl BranchDivisor {
    pub fn is_trivial(&self) -> bool {
        self.zero_section == rat(0, 1) && self.infinity_section == rat(0, 1)
    }
}

/// Orbifold data of the quotient of a quasi-regular Reeb ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientData {
    pub p: u64,
    pub q: u64,
    pub branch: BranchDivisor,
    /// Downstream profile constructions require `gcd(p, q) = 1`; a
    /// non-coprime pair is reported here rather than rejected.
    pub coprime: bool,
}

impl QuotientData {
    /// `p = q = 1`: a regular quotient with no branch divisor.
    pub fn is_regular(&self) -> bool {
        self.p == 1 && self.q == 1
    }
}

/// `p = a`, `q = a + k2 b` for a ray inside the Sasaki cone.
pub fn quotient_params(sel: ReebSelection, join: JoinData) -> Result<QuotientData> {
    if !sasaki_cone_member(sel, join) {
        return Err(Error::NotInSasakiCone {
            a: sel.a,
            b: sel.b,
            k2: join.k2,
        });
    }
    let p = sel.a as u64;
    let q = (sel.a + sel.b * join.k2 as i64) as u64;
    let ramification = |m: u64| rat(1, 1) - rat(1, m as i64);
    Ok(QuotientData {
        p,
        q,
        branch: BranchDivisor {
            zero_section: ramification(p),
            infinity_section: ramification(q),
        },
        coprime: p.gcd(&q) == 1,
    })
}

/// Label of a Sasaki cone in a bouquet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConeLabel {
    /// Split complex structure of degree `2m`.
    Degree(u64),
    NonSplit,
}

impl Serialize for ConeLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ConeLabel::Degree(m) => s.serialize_u64(*m),
            ConeLabel::NonSplit => s.serialize_str("nonsplit"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConeRecord {
    pub m: ConeLabel,
    pub dimension: u8,
    pub extremal_exists: bool,
    pub csc_regular_ray: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BouquetDescriptor {
    pub cones: Vec<ConeRecord>,
}

impl BouquetDescriptor {
    pub fn two_dimensional(&self) -> usize {
        self.cones.iter().filter(|c| c.dimension == 2).count()
    }

    pub fn one_dimensional(&self) -> usize {
        self.cones.iter().filter(|c| c.dimension == 1).count()
    }
}

/// `ceil(k1 / k2)` for positive integers.
pub fn ceil_div(k1: u64, k2: u64) -> u64 {
    k1.div_ceil(k2)
}

/// The Sasaki bouquet on `D_{k1,k2}`: one two-dimensional cone per split
/// complex structure of degree `2m`, `m = 0, ..., ceil(k1/k2) - 1`, all
/// extremal, the `m = 0` one carrying the regular CSC ray, plus the
/// one-dimensional cone of the non-split structure, which has no extremal
/// representative.
pub fn bouquet(join: JoinData) -> BouquetDescriptor {
    let mut cones: Vec<ConeRecord> = (0..ceil_div(join.k1, join.k2))
        .map(|m| ConeRecord {
            m: ConeLabel::Degree(m),
            dimension: 2,
            extremal_exists: true,
            csc_regular_ray: m == 0,
        })
        .collect();
    cones.push(ConeRecord {
        m: ConeLabel::NonSplit,
        dimension: 1,
        extremal_exists: false,
        csc_regular_ray: false,
    });
    BouquetDescriptor { cones }
}

/// Coefficient of the generator in `c_1(D_{k1,k2}) = 2 k1 gamma`.
pub fn chern_class(join: JoinData) -> u64 {
    2 * join.k1
}

/// Complex structures on `T^2 x S^2`, as far as Kähler classes see them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComplexStructure {
    /// `P(O + L)` with `deg L = n`, `n` even; `n = 0` lies in the `S_0` family.
    Split(i64),
    S0Family,
    NonSplit,
}

impl ComplexStructure {
    fn validated_degree(self) -> Result<Option<i64>> {
        match self {
            ComplexStructure::Split(n) if n < 0 || n % 2 != 0 => Err(Error::InvalidDegree(n)),
            ComplexStructure::Split(n) if n > 0 => Ok(Some(n)),
            _ => Ok(None),
        }
    }
}

/// Whether `k1 omega_1 + k2 omega_2` is a Kähler class for the structure.
pub fn kahler_cone_member(k1: i64, k2: i64, structure: ComplexStructure) -> Result<bool> {
    Ok(match structure.validated_degree()? {
        None => k1 > 0 && k2 > 0,
        Some(n) => k2 > 0 && rat(k1, k2) > rat(n, 2),
    })
}

/// The fiber parameter `r = n k2 / (2 k1)` of the admissible metrics in the
/// class `k1 omega_1 + k2 omega_2` on the split structure of degree `n > 0`.
pub fn class_to_fiber_param(k1: i64, k2: i64, n: i64) -> Result<Rational> {
    if n <= 0 || n % 2 != 0 {
        return Err(Error::InvalidDegree(n));
    }
    if !kahler_cone_member(k1, k2, ComplexStructure::Split(n))? {
        return Err(Error::NotKahler(format!(
            "k1/k2 = {k1}/{k2} must exceed n/2 = {}",
            n / 2
        )));
    }
    Ok(rat(n * k2, 2 * k1))
}

/// Fundamental group data of `M^5_{k1,k2}`, a central extension of `Z^2`
/// by `Z_{k2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pi1Structure {
    pub k2: u64,
    /// Rank of `H_1 = Z^2`.
    pub abelianization_rank: u32,
    /// Order of the torsion subgroup of `H_1`.
    pub torsion: u64,
    /// Order of the commutator subgroup.
    pub commutator_order: u64,
    pub abelian: bool,
}

impl Pi1Structure {
    pub fn summary(&self) -> String {
        if self.abelian {
            "Z^2".to_string()
        } else {
            format!("central extension of Z^2 by Z_{}", self.k2)
        }
    }
}

/// Computes the commutator structure in the finite quotient
/// `{(alpha, beta, gamma) mod k2}` of the Heisenberg-type model and checks
/// that the abelianization is `Z_{k2}^2`, i.e. the image of a torsion-free
/// `Z^2`.
pub fn pi1_structure(join: JoinData) -> Pi1Structure {
    let model = HeisenbergMod::new(join.k2);
    let commutator_order = model.commutator_subgroup().len() as u64;
    let abel = model.abelianization_order();
    assert_eq!(
        abel,
        join.k2 * join.k2,
        "abelianization of the mod-k2 model must be Z_k2^2"
    );
    assert!(model.commutators_are_central());
    Pi1Structure {
        k2: join.k2,
        abelianization_rank: 2,
        torsion: 1,
        commutator_order,
        abelian: model.is_abelian(),
    }
}

/// Complex structures distinguished by the dimensions of their holomorphic
/// vector field and deformation spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeformationStructure {
    NonSplit,
    S0Product,
    S0FamilyNonProduct,
    /// Split of positive even degree `n`.
    Split(u64),
}

impl FromStr for DeformationStructure {
    type Err = Error;

    /// Accepts `nonsplit`, `s0-product`, `s0-family`, `split-deg-N`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nonsplit" => Ok(Self::NonSplit),
            "s0-product" => Ok(Self::S0Product),
            "s0-family" | "s0-family-nonproduct" => Ok(Self::S0FamilyNonProduct),
            _ => s
                .strip_prefix("split-deg-")
                .and_then(|n| n.parse::<u64>().ok())
                .map(Self::Split)
                .ok_or_else(|| Error::InvalidStructure(s.to_string())),
        }
    }
}

impl fmt::Display for DeformationStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonSplit => f.write_str("nonsplit"),
            Self::S0Product => f.write_str("s0-product"),
            Self::S0FamilyNonProduct => f.write_str("s0-family"),
            Self::Split(n) => write!(f, "split-deg-{n}"),
        }
    }
}

/// `(dim H^0(Theta), dim H^1(Theta))` for the sheaf of holomorphic vector
/// fields.
pub fn deformation_dims(structure: DeformationStructure) -> Result<(u64, u64)> {
    match structure {
        DeformationStructure::NonSplit => Ok((2, 2)),
        DeformationStructure::S0Product => Ok((4, 4)),
        DeformationStructure::S0FamilyNonProduct => Ok((2, 2)),
        DeformationStructure::Split(n) if n > 0 && n % 2 == 0 => Ok((n + 1, n + 1)),
        DeformationStructure::Split(n) => Err(Error::InvalidDegree(n as i64)),
    }
}

/// Scalar curvature after the transverse homothety `xi -> xi/a`,
/// `eta -> a eta`: `(s + 2n)/a - 2n`, with `n` the complex dimension of the
/// transverse Kähler structure (`n = 2` for the five-manifolds here).
pub fn transverse_homothety_scalar<T: Scalar + PartialOrd>(s: T, a: T, n: T) -> Result<T> {
    if a <= T::zero() {
        return Err(Error::Precondition(format!(
            "homothety factor must be positive, got {}",
            a.describe()
        )));
    }
    let two_n = T::from_i64(2) * n;
    Ok((s + two_n.clone()) / a - two_n)
}
