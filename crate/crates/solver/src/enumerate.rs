use minabc_family::{FamilyParams, N3_N4_MAX, Z_MAX, Z_MIN};
use num_integer::Integer;

/// Root degree from which only D-branches of size 50..=52, root B3s and at
/// most one `D_{t,1}^2` branch remain.
pub const DEG_SHAPE: u64 = 1228;
/// Root degree from which the `D_{t,1}^2` branch is gone too.
pub const DEG_NO_D21: u64 = 1441;
/// Root degree from which root B3 branches are gone.
pub const DEG_NO_B3: u64 = 2956;
/// Root degree from which the `D_51`/`D_53` counts are capped.
pub const DEG_CAPPED: u64 = 3249;
pub const MAX_D51: u64 = 364;
pub const MAX_D53: u64 = 178;

/// The modified branch (if any) of a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extra {
    Plain,
    Star,
    D21(u32),
    D22(u32),
    B4(u32),
}

/// A shape: D-branch size plus the modified branch. Root B3 counts and the
/// D-branch counts vary inside a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub z: u32,
    pub extra: Extra,
}

impl Cell {
    pub fn all() -> Vec<Cell> {
        let mut out = Vec::new();
        for z in Z_MIN..=Z_MAX {
            out.push(Cell { z, extra: Extra::Plain });
            out.push(Cell { z, extra: Extra::Star });
            out.extend((z - 5..=z).map(|k| Cell { z, extra: Extra::D21(k) }));
            out.extend((z - 9..=z).map(|k| Cell { z, extra: Extra::D22(k) }));
            out.extend((1..=4).map(|n4| Cell { z, extra: Extra::B4(n4) }));
        }
        out
    }

    fn template(&self) -> FamilyParams {
        let p = FamilyParams::d_only(self.z, 0, 0);
        match self.extra {
            Extra::Plain => p,
            Extra::Star => p.with_star(),
            Extra::D21(k) => p.with_d21(k),
            Extra::D22(k) => p.with_d22(k),
            Extra::B4(n4) => p.with_b4(n4),
        }
    }

    fn n4(&self) -> u32 {
        match self.extra {
            Extra::B4(n4) => n4,
            _ => 0,
        }
    }

    /// Solution set of the order equation for a fixed root B3 count.
    pub fn progression(&self, n: u64, n3: u32) -> Option<Progression> {
        let base = self.template().with_b3(n3);
        let z = self.z as u64;
        let (a, b) = (7 * z + 1, 7 * z + 8);
        // order of the template with no D-branches, minus nothing else
        let fixed = minabc_family::order_of(&base);
        let r = n.checked_sub(fixed)?;
        if r < a {
            return None;
        }
        let inv = mod_inverse(a, b);
        let nz0 = ((r % b) as u128 * inv as u128 % b as u128) as u64;
        if nz0 * a > r {
            return None;
        }
        let m0 = (r - nz0 * a) / b;
        let d0 = minabc_family::root_degree(&base) + nz0 + m0;
        Some(Progression { base, nz0, m0, a, b, t_max: m0 / a, d0 })
    }

    /// All progressions of this cell, one per feasible root B3 count.
    pub fn progressions(self, n: u64) -> impl Iterator<Item = Progression> {
        let n3_max = N3_N4_MAX - self.n4();
        let fixed0 = minabc_family::order_of(&self.template());
        let a = 7 * self.z as u64 + 1;
        (0..=n3_max)
            .take_while(move |&n3| fixed0 + 7 * n3 as u64 + a <= n)
            .filter_map(move |n3| self.progression(n, n3))
    }
}

fn cdiv(a: i128, b: i128) -> i128 {
    Integer::div_ceil(&a, &b)
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let g = (a as i64).extended_gcd(&(m as i64));
    debug_assert_eq!(g.gcd, 1);
    g.x.rem_euclid(m as i64) as u64
}

/// `n_z = nz0 + t b`, `n_zp1 = m0 - t a` for `0 <= t <= t_max`; the root
/// degree is `d0 + 7 t`.
#[derive(Debug, Clone, Copy)]
pub struct Progression {
    pub base: FamilyParams,
    pub nz0: u64,
    pub m0: u64,
    pub a: u64,
    pub b: u64,
    pub t_max: u64,
    pub d0: u64,
}

impl Progression {
    pub fn at(&self, t: u64) -> FamilyParams {
        let mut p = self.base;
        p.n_z = self.nz0 + t * self.b;
        p.n_zp1 = self.m0 - t * self.a;
        p
    }

    pub fn root_degree_at(&self, t: u64) -> u64 {
        self.d0 + 7 * t
    }

    /// Inclusive `t` ranges that survive the degree-threshold restrictions.
    pub fn allowed_ranges(&self) -> Vec<(u64, u64)> {
        let p = &self.base;
        let shape_ok = (50..=52).contains(&p.z) && !p.b4 && !p.b_star && !p.b2;
        let regions = [
            (0, DEG_SHAPE, true),
            (DEG_SHAPE, DEG_NO_D21, shape_ok),
            (DEG_NO_D21, DEG_NO_B3, shape_ok && !p.b1),
            (DEG_NO_B3, DEG_CAPPED, shape_ok && !p.b1 && !p.b3),
            (DEG_CAPPED, u64::MAX, shape_ok && !p.b1 && !p.b3),
        ];
        let mut out = Vec::new();
        for (lo, hi, ok) in regions {
            if !ok {
                continue;
            }
            let mut tl: i128 = 0;
            let mut th: i128 = self.t_max as i128;
            let d0 = self.d0 as i128;
            if lo as i128 > d0 {
                tl = tl.max(cdiv(lo as i128 - d0, 7));
            }
            if hi != u64::MAX {
                th = th.min(Integer::div_floor(&(hi as i128 - 1 - d0), &7));
            }
            if lo == DEG_CAPPED {
                let (nz0, m0) = (self.nz0 as i128, self.m0 as i128);
                let (a, b) = (self.a as i128, self.b as i128);
                match p.z {
                    51 => th = th.min(Integer::div_floor(&(MAX_D51 as i128 - nz0), &b)),
                    50 => tl = tl.max(cdiv(m0 - MAX_D51 as i128, a)),
                    52 => tl = tl.max(cdiv(m0 - MAX_D53 as i128, a)),
                    _ => {}
                }
            }
            if tl <= th {
                out.push((tl as u64, th as u64));
            }
        }
        out
    }
}

/// Every family member of order `n`, each exactly once.
pub fn enumerate_feasible(n: u64) -> impl Iterator<Item = FamilyParams> {
    Cell::all()
        .into_iter()
        .flat_map(move |c| c.progressions(n))
        .flat_map(|pr| (0..=pr.t_max).map(move |t| pr.at(t)))
}

/// Calls `visit` for each member of order `n` in `cell`, skipping members
/// excluded by the degree thresholds when `prune` is set.
pub fn for_each_candidate(cell: Cell, n: u64, prune: bool, mut visit: impl FnMut(FamilyParams)) {
    for pr in cell.progressions(n) {
        if prune {
            for (lo, hi) in pr.allowed_ranges() {
                for t in lo..=hi {
                    visit(pr.at(t));
                }
            }
        } else {
            for t in 0..=pr.t_max {
                visit(pr.at(t));
            }
        }
    }
}
