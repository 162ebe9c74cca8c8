use std::collections::BTreeMap;
use std::fmt;

use minabc_core::{weight, Fixed, NeumaierSum};
use thiserror::Error;

pub const Z_MIN: u32 = 15;
pub const Z_MAX: u32 = 131;
pub const N4_MAX: u32 = 4;
pub const N3_N4_MAX: u32 = 919;

/// One member of the candidate family.
///
/// `k1`/`k2` must be zero unless `b1`/`b2` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FamilyParams {
    pub z: u32,
    pub n_z: u64,
    pub n_zp1: u64,
    pub n3: u32,
    pub n4: u32,
    pub b_star: bool,
    pub b1: bool,
    pub b2: bool,
    pub b3: bool,
    pub b4: bool,
    pub k1: u32,
    pub k2: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("z = {0} is outside [{Z_MIN}, {Z_MAX}]")]
    ZRange(u32),
    #[error("k1 = {k1} is outside [z-5, z] for z = {z}")]
    K1Range { z: u32, k1: u32 },
    #[error("k2 = {k2} is outside [z-9, z] for z = {z}")]
    K2Range { z: u32, k2: u32 },
    #[error("k{0} must be 0 when its flag is off")]
    StrayK(u8),
    #[error("n4 = {0} exceeds {N4_MAX}")]
    N4Range(u32),
    #[error("n3 + n4 = {0} exceeds {N3_N4_MAX}")]
    N3N4Sum(u32),
    #[error("b{0} disagrees with its branch count")]
    FlagMismatch(u8),
    #[error("at most one of b_star, b1, b2, b4 may be set")]
    Exclusive,
    #[error("at least one D_z or D_(z+1) branch is required")]
    NoDBranch,
    #[error("order {0} is too large to build explicitly")]
    TooLarge(u64),
}

impl FamilyParams {
    /// Root with `n_z` copies of `D_z` and `n_zp1` copies of `D_{z+1}`.
    pub fn d_only(z: u32, n_z: u64, n_zp1: u64) -> Self {
        FamilyParams { z, n_z, n_zp1, ..Default::default() }
    }

    pub fn with_b3(mut self, n3: u32) -> Self {
        self.n3 = n3;
        self.b3 = n3 > 0;
        self
    }

    pub fn with_b4(mut self, n4: u32) -> Self {
        self.n4 = n4;
        self.b4 = n4 > 0;
        self
    }

    pub fn with_star(mut self) -> Self {
        self.b_star = true;
        self
    }

    pub fn with_d21(mut self, k1: u32) -> Self {
        self.b1 = true;
        self.k1 = k1;
        self
    }

    pub fn with_d22(mut self, k2: u32) -> Self {
        self.b2 = true;
        self.k2 = k2;
        self
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        let z = self.z;
        if !(Z_MIN..=Z_MAX).contains(&z) {
            return Err(ParamError::ZRange(z));
        }
        if self.b1 {
            if self.k1 + 5 < z || self.k1 > z {
                return Err(ParamError::K1Range { z, k1: self.k1 });
            }
        } else if self.k1 != 0 {
            return Err(ParamError::StrayK(1));
        }
        if self.b2 {
            if self.k2 + 9 < z || self.k2 > z {
                return Err(ParamError::K2Range { z, k2: self.k2 });
            }
        } else if self.k2 != 0 {
            return Err(ParamError::StrayK(2));
        }
        if self.n4 > N4_MAX {
            return Err(ParamError::N4Range(self.n4));
        }
        if self.b4 != (self.n4 > 0) {
            return Err(ParamError::FlagMismatch(4));
        }
        if self.b3 != (self.n3 > 0) {
            return Err(ParamError::FlagMismatch(3));
        }
        let n34 = self.n3.saturating_add(self.n4);
        if n34 > N3_N4_MAX {
            return Err(ParamError::N3N4Sum(n34));
        }
        let exclusive = [self.b_star, self.b1, self.b2, self.b4];
        if exclusive.iter().filter(|&&b| b).count() > 1 {
            return Err(ParamError::Exclusive);
        }
        if self.n_z + self.n_zp1 == 0 {
            return Err(ParamError::NoDBranch);
        }
        Ok(())
    }

    /// Lexicographic key `(z, n_zp1, n_z, n3, n4, b_star, b1, b2, k1, k2)`.
    pub fn tie_key(&self) -> (u32, u64, u64, u32, u32, bool, bool, bool, u32, u32) {
        (
            self.z, self.n_zp1, self.n_z, self.n3, self.n4, self.b_star, self.b1, self.b2,
            self.k1, self.k2,
        )
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "z={} n_z={} n_zp1={} n3={} n4={}",
            self.z, self.n_z, self.n_zp1, self.n3, self.n4
        )?;
        if self.b_star {
            write!(f, " b_star=1")?;
        }
        if self.b1 {
            write!(f, " b1=1 k1={}", self.k1)?;
        }
        if self.b2 {
            write!(f, " b2=1 k2={}", self.k2)?;
        }
        Ok(())
    }
}

pub fn root_degree(p: &FamilyParams) -> u64 {
    p.n_z
        + p.n_zp1
        + p.b_star as u64
        + p.b1 as u64
        + p.b2 as u64
        + if p.b3 { p.n3 as u64 } else { 0 }
        + if p.b4 { p.n4 as u64 } else { 0 }
}

pub fn order_of(p: &FamilyParams) -> u64 {
    let z = p.z as u64;
    let mut n = 1 + p.n_z * (7 * z + 1) + p.n_zp1 * (7 * z + 8);
    if p.b1 {
        n += 7 * (p.k1 as u64 - 1) + 6;
    }
    if p.b2 {
        n += 7 * (p.k2 as u64 - 2) + 11;
    }
    if p.b3 {
        n += 7 * p.n3 as u64;
    }
    if p.b4 {
        n += 9 * p.n4 as u64;
    }
    if p.b_star {
        n += 7 * z + 4;
    }
    n
}

/// The objective as `(coefficient, x, y)` triples standing for
/// `coefficient * f(x, y)`. Pendant-path edges all weigh `f(2, 1)`.
pub fn closed_form_terms(p: &FamilyParams) -> Vec<(u64, u64, u64)> {
    let dv = root_degree(p);
    let z = p.z as u64;
    let mut t = vec![
        (p.n_z, dv, z + 1),
        (p.n_zp1, dv, z + 2),
        (p.n_z * z, z + 1, 4),
        (p.n_zp1 * (z + 1), z + 2, 4),
        (6 * p.n_z * z + 6 * p.n_zp1 * (z + 1), 2, 1),
    ];
    if p.b3 {
        let n3 = p.n3 as u64;
        t.push((n3, dv, 4));
        t.push((6 * n3, 2, 1));
    }
    if p.b4 {
        let n4 = p.n4 as u64;
        t.push((n4, dv, 5));
        t.push((8 * n4, 2, 1));
    }
    if p.b1 {
        let k = p.k1 as u64;
        t.push((1, dv, k + 1));
        t.push((k - 1, k + 1, 4));
        t.push((1, k + 1, 3));
        t.push((6 * (k - 1) + 4, 2, 1));
    }
    if p.b2 {
        let k = p.k2 as u64;
        t.push((1, dv, k + 1));
        t.push((k - 2, k + 1, 4));
        t.push((2, k + 1, 3));
        t.push((6 * (k - 2) + 8, 2, 1));
    }
    if p.b_star {
        t.push((1, dv, z + 1));
        t.push((z, z + 1, 4));
        t.push((6 * z + 2, 2, 1));
        t.push((1, 4, 3));
    }
    t.retain(|&(c, _, _)| c > 0);
    t
}

pub fn closed_form_abc(p: &FamilyParams) -> f64 {
    let mut acc = NeumaierSum::new();
    for (c, x, y) in closed_form_terms(p) {
        acc.add(c as f64 * weight(x as f64, y as f64));
    }
    acc.total()
}

pub fn closed_form_abc_hp(p: &FamilyParams) -> Fixed {
    closed_form_terms(p)
        .into_iter()
        .map(|(c, x, y)| Fixed::weight(x, y).mul_int(c as i128))
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureSummary {
    pub order: u64,
    pub root_degree: u64,
    pub degrees: BTreeMap<u64, u64>,
}

impl StructureSummary {
    pub fn handshake_ok(&self) -> bool {
        let sum: u128 = self.degrees.iter().map(|(&d, &c)| d as u128 * c as u128).sum();
        let count: u64 = self.degrees.values().sum();
        count == self.order && sum == 2 * (self.order as u128 - 1)
    }
}

/// Order, root degree and degree multiset without building the tree.
pub fn summarize(p: &FamilyParams) -> StructureSummary {
    let z = p.z as u64;
    let dv = root_degree(p);
    let mut deg = BTreeMap::new();
    let mut add = |d: u64, c: u64| {
        if c > 0 {
            *deg.entry(d).or_insert(0) += c;
        }
    };
    add(dv, 1);
    add(z + 1, p.n_z + p.b_star as u64);
    add(z + 2, p.n_zp1);

    let mut b3 = p.n_z * z + p.n_zp1 * (z + 1);
    let mut b2 = 0u64;
    let mut paths = 0u64;
    if p.b3 {
        b3 += p.n3 as u64;
    }
    if p.b4 {
        add(5, p.n4 as u64);
        paths += 4 * p.n4 as u64;
    }
    if p.b1 {
        add(p.k1 as u64 + 1, 1);
        b3 += p.k1 as u64 - 1;
        b2 += 1;
    }
    if p.b2 {
        add(p.k2 as u64 + 1, 1);
        b3 += p.k2 as u64 - 2;
        b2 += 2;
    }
    if p.b_star {
        // z - 1 plain B3 plus the B3** centre, whose extra child has degree 3
        b3 += z;
        add(3, 1);
        paths += 4 - 3;
    }
    add(4, b3);
    add(3, b2);
    paths += 3 * b3 + 2 * b2;
    add(2, paths);
    add(1, paths);
    StructureSummary { order: order_of(p), root_degree: dv, degrees: deg }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5047() -> FamilyParams {
        FamilyParams::d_only(50, 7, 4).with_b3(164).with_b4(1)
    }

    #[test]
    fn bookkeeping_examples() {
        assert_eq!(root_degree(&p5047()), 176);
        assert_eq!(order_of(&p5047()), 5047);
        let p = FamilyParams::d_only(15, 1, 0);
        assert_eq!((root_degree(&p), order_of(&p)), (1, 107));
        let p = FamilyParams::d_only(49, 0, 41).with_b3(293);
        assert_eq!((root_degree(&p), order_of(&p)), (334, 16443));
        let p = FamilyParams::d_only(20, 1, 0).with_d22(15);
        assert_eq!(order_of(&p), 244);
    }

    #[test]
    fn validation() {
        assert!(p5047().validate().is_ok());
        assert_eq!(FamilyParams::d_only(14, 1, 0).validate(), Err(ParamError::ZRange(14)));
        assert_eq!(FamilyParams::d_only(20, 0, 0).validate(), Err(ParamError::NoDBranch));
        let mut p = FamilyParams::d_only(20, 1, 0).with_d21(14);
        assert!(matches!(p.validate(), Err(ParamError::K1Range { .. })));
        p.k1 = 15;
        assert!(p.validate().is_ok());
        assert_eq!(p.with_star().validate(), Err(ParamError::Exclusive));
        let mut q = FamilyParams::d_only(20, 1, 0);
        q.k2 = 3;
        assert_eq!(q.validate(), Err(ParamError::StrayK(2)));
        q.k2 = 0;
        q.n3 = 2;
        assert_eq!(q.validate(), Err(ParamError::FlagMismatch(3)));
        assert_eq!(
            FamilyParams::d_only(20, 1, 0).with_b3(916).with_b4(4).validate(),
            Err(ParamError::N3N4Sum(920))
        );
        assert_eq!(FamilyParams::d_only(20, 1, 0).with_b4(5).validate(), Err(ParamError::N4Range(5)));
    }

    #[test]
    fn summary_of_smallest_member() {
        let s = summarize(&FamilyParams::d_only(15, 1, 0));
        let want: BTreeMap<u64, u64> = [(1, 46), (2, 45), (4, 15), (16, 1)].into_iter().collect();
        assert_eq!(s.order, 107);
        assert_eq!(s.root_degree, 1);
        assert_eq!(s.degrees, want);
        assert!(s.handshake_ok());
    }

    #[test]
    fn hp_matches_f64() {
        let p = p5047();
        let a = closed_form_abc(&p);
        let b = closed_form_abc_hp(&p).to_f64();
        assert!((a - b).abs() / a < 1e-15);
    }

    #[test]
    fn adding_a_branch_changes_root_terms_only() {
        let one = FamilyParams::d_only(15, 1, 0);
        let two = FamilyParams::d_only(15, 2, 0);
        let branch_internal = 15.0 * weight(16.0, 4.0) + 90.0 * weight(2.0, 1.0);
        let expected = 2.0 * weight(2.0, 16.0) - weight(1.0, 16.0) + branch_internal;
        assert!((closed_form_abc(&two) - closed_form_abc(&one) - expected).abs() < 1e-12);
    }
}
