use minabc_core::weight;

use crate::params::{Form, TransformId, TransformParams, VerifyError};

type R = Result<f64, VerifyError>;

#[inline]
fn f(x: f64, y: f64) -> f64 {
    weight(x, y)
}

#[inline]
fn rs(x: f64) -> f64 {
    1.0 / x.sqrt()
}

struct Get<'a> {
    id: TransformId,
    p: &'a TransformParams,
}

macro_rules! field {
    ($g:expr, $name:ident) => {
        $g.p.$name.map(|v| v as f64).ok_or(VerifyError::MissingField {
            id: $g.id,
            field: stringify!($name),
        })?
    };
}

impl Get<'_> {
    fn nb(&self) -> R {
        self.p
            .neighbor_degree_bound
            .map(|v| v as f64)
            .ok_or(VerifyError::MissingField { id: self.id, field: "neighbor_degree_bound" })
    }

    fn unavailable(&self, form: Form) -> VerifyError {
        VerifyError::FormUnavailable { id: self.id, form }
    }
}

fn opt0(v: Option<i64>) -> f64 {
    v.unwrap_or(0) as f64
}

/// Forms implemented for `id`, exact first.
pub fn forms_of(id: TransformId) -> &'static [Form] {
    use Form::*;
    use TransformId::*;
    match id {
        T2 | T10 | T14 => &[Exact, SurrogateA],
        T6 => &[Exact, SurrogateA, SurrogateB],
        T7 | T8 => &[Exact, SurrogateB],
        _ => &[Exact, SurrogateA, SurrogateB],
    }
}

/// Evaluates the change `ABC(G') - ABC(G)` of transformation `id` in the
/// requested form.
pub fn delta_abc(id: TransformId, form: Form, p: &TransformParams) -> R {
    let g = Get { id, p };
    if !forms_of(id).contains(&form) {
        return Err(g.unavailable(form));
    }
    use TransformId::*;
    match id {
        T2 => t2(&g, form),
        T3 => t3(&g, form),
        T4 => t4(&g, form),
        T5 => t5(&g, form),
        T6 => t6(&g, form),
        T7 => t7(&g, form),
        T8 => t8(&g, form),
        T9 => t9(&g, form),
        T10 => t10(&g, form),
        T11 => t11(&g, form),
        T12 => t12(&g, form),
        T13 => t13(&g, form),
        T14 => t14(&g, form),
        T15 => t15(&g, form),
    }
}

fn t2(g: &Get, form: Form) -> R {
    let z = field!(g, z);
    let x = field!(g, x);
    let w = field!(g, dw);
    let common = x * (-f(z + 1.0, 5.0) + f(z, 5.0))
        + f(w + 1.0, 4.0)
        + (w - 1.0) * (-f(w, 4.0) + f(w + 1.0, 4.0));
    Ok(match form {
        Form::Exact => {
            let d = field!(g, dv);
            -f(d, z + 1.0) + f(d, z) + (-f(d, w) + f(d, w + 1.0)) + common
                - (z - x) * f(z + 1.0, 4.0)
                + (z - x - 1.0) * f(z, 4.0)
        }
        _ => -rs(z + 1.0) + rs(z) + (-f(z + 1.0, w) + f(z + 1.0, w + 1.0)) + common - 0.5,
    })
}

fn t3(g: &Get, form: Form) -> R {
    let d = field!(g, dv);
    let z = field!(g, z);
    let x = field!(g, x);
    if form == Form::SurrogateB {
        return Ok(-(d + x - 5.0) * f(d, 16.0)
            + (d + 2.0 * x - 5.0) * f(d + x, 16.0)
            + x * (-0.25 + rs(5.0))
            + (z - x) * (-f(z + 1.0, 4.0) + f(z + 1.0 - x, 4.0))
            + (-rs(z + 1.0) + rs(z - x + 1.0))
            - x * f(z + 1.0, 5.0));
    }
    let (n4, nb) = match form {
        Form::Exact => (field!(g, n4), g.nb()?),
        _ => (4.0 - x, 16.0),
    };
    let gu = |u: f64| -f(d, u) + f(d + x, u);
    Ok(-f(d, z + 1.0) + f(d + x, z - x + 1.0) - x * f(z + 1.0, 5.0) - (z - x) * f(z + 1.0, 4.0)
        + (z - x) * f(z - x + 1.0, 4.0)
        + x * f(d + x, 5.0)
        + n4 * gu(5.0)
        + (d - 1.0 - n4) * gu(nb))
}

fn t4(g: &Get, form: Form) -> R {
    let d = field!(g, dv);
    let z = field!(g, z);
    let x = field!(g, x);
    let k = field!(g, k);
    let nk = field!(g, n_k);
    let nkm1 = field!(g, n_km1);
    let fixed = -x * z * f(z + 1.0, 4.0) - 3.0 * f(4.0, 2.0) - 3.0 * f(2.0, 1.0)
        + k * nk * f(k + 1.0, 4.0)
        + (k - 1.0) * nkm1 * f(k, 4.0);
    let gu = |u: f64| -f(d, u) + f(d + 7.0, u);
    Ok(match form {
        Form::Exact => {
            let n3 = opt0(g.p.n3);
            let nb = g.nb()?;
            let mut s = -x * f(d, z + 1.0) + nk * f(d + 7.0, k + 1.0) + nkm1 * f(d + 7.0, k) + fixed;
            let mut rest = d - x - n3;
            if let Some(t) = g.p.t {
                s += gu(t as f64 + 1.0);
                rest -= 1.0;
            }
            s + n3 * gu(4.0) + rest * gu(nb)
        }
        Form::SurrogateA => {
            -x * f(d, z + 1.0) + nk * f(d + 7.0, k + 1.0) + nkm1 * f(d + 7.0, k) + fixed + (d - x) * gu(4.0)
        }
        Form::SurrogateB => {
            (d - x + 7.0) * f(d + 7.0, 4.0) - (d - x) * f(d, 4.0)
                + nk * (-f(d + 7.0, k) + f(d + 7.0, k + 1.0))
                + (x + 7.0) * (-f(d + 7.0, 4.0) + f(d + 7.0, k))
                + x * (-rs(z + 1.0) + 0.5)
                + fixed
        }
    })
}

fn t5(g: &Get, form: Form) -> R {
    let d = field!(g, dv);
    let z = field!(g, z);
    let x = field!(g, x);
    let k = field!(g, k);
    let nk = field!(g, n_k);
    let nkm1 = field!(g, n_km1);
    let fixed = -x * z * f(z + 1.0, 4.0) + 3.0 * f(4.0, 2.0) + 3.0 * f(2.0, 1.0)
        + k * nk * f(k + 1.0, 4.0)
        + (k - 1.0) * nkm1 * f(k, 4.0);
    let hu = |u: f64| -f(d, u) + f(d - 7.0, u);
    let head = -x * f(d, z + 1.0) + nk * f(d - 7.0, k + 1.0) + nkm1 * f(d - 7.0, k) + fixed;
    Ok(match form {
        Form::Exact => {
            let n3 = opt0(g.p.n3);
            let n4 = opt0(g.p.n4);
            let nb = g.nb()?;
            head + (d - x - n3 - n4) * hu(nb) + n3 * hu(4.0) + n4 * hu(5.0)
        }
        Form::SurrogateA => head + (d - x) * hu(z + 2.0),
        Form::SurrogateB => {
            let tail = if z + 2.0 > k {
                7.0 * (-f(d - 7.0, k) + f(d - 7.0, z + 2.0))
            } else {
                7.0 * (-rs(k) + rs(z + 2.0))
            };
            -7.0 * rs(z + 2.0)
                + nk * (-f(d - 7.0, k) + f(d - 7.0, k + 1.0))
                + x * (-f(d, z + 1.0) + f(d - 7.0, k))
                + tail
                + fixed
        }
    })
}

/// Degree drop of the root under T6.
pub const T6_SHIFT: f64 = 358.0;

fn t6(g: &Get, form: Form) -> R {
    let d = field!(g, dv);
    let x = field!(g, x);
    let k = field!(g, k);
    let dp = d - T6_SHIFT;
    let c = |y: f64| -f(d, y) + f(dp, y);
    let tail = -6.0 * f(2.0, 1.0) + 364.0 * f(53.0, 4.0);
    Ok(match form {
        Form::Exact | Form::SurrogateA => {
            let (profile, n4) = if form == Form::Exact {
                let nk = field!(g, n_k);
                let nkm1 = field!(g, n_km1);
                let n4 = field!(g, n4);
                let nb = g.nb()?;
                let mut s = nk * c(k + 1.0) + nkm1 * c(k);
                let mut rest = d - x - nk - nkm1;
                if let Some(t) = g.p.t {
                    s += c(t as f64 + 1.0);
                    rest -= 1.0;
                }
                (s + rest * c(nb), n4)
            } else {
                ((d - x) * c(k + 1.0), 4.0)
            };
            profile - f(d, 4.0) + f(dp, 53.0) + 6.0 * (-f(2.0, 1.0) + f(dp, 53.0))
                + 364.0 * (-f(d, 4.0) + f(53.0, 4.0))
                + (x - 365.0 - n4) * c(4.0)
                + n4 * c(5.0)
        }
        Form::SurrogateB => {
            let common = 365.0 * (-f(d, 4.0) + f(dp, 53.0)) + (x - 369.0) * c(4.0) + 4.0 * c(5.0) + tail;
            if k >= 52.0 {
                -T6_SHIFT * rs(k + 1.0) + T6_SHIFT * (-f(dp, 53.0) + f(dp, k + 1.0)) + common
            } else {
                -T6_SHIFT * rs(53.0) + common
            }
        }
    })
}

fn t7(g: &Get, form: Form) -> R {
    let d = field!(g, dv);
    let z = field!(g, z);
    let n3 = field!(g, n3);
    let n4 = field!(g, n4);
    let a = |y: f64| -f(d, y) + f(d + 1.0, y);
    let fixed = -(2.0 * z - 3.0) * z * f(z + 1.0, 4.0) - f(4.0, 2.0) - f(2.0, 1.0)
        + (2.0 * z - 1.0) * (z - 1.0) * f(z, 4.0);
    Ok(match form {
        Form::Exact => {
            let nb = g.nb()?;
            -(2.0 * z - 3.0) * f(d, z + 1.0) - f(d, 5.0) + (2.0 * z - 1.0) * f(d + 1.0, z) + fixed
                + n3 * a(4.0)
                + (n4 - 1.0) * a(5.0)
                + (d - 2.0 * z + 3.0 - n3 - n4) * a(nb)
        }
        _ => {
            let l = 2.0 * z - 3.0 + n3 + n4;
            let mut v = (2.0 * z - 2.0) * (-rs(z + 1.0) + rs(z)) + (d - l) * f(d + 1.0, z + 1.0)
                - (d - l - 1.0) * f(d, z + 1.0)
                + f(d + 1.0, z)
                - f(d, 5.0)
                + fixed;
            if g.p.neighbor_degree_bound.is_some_and(|nb| nb as f64 <= z) {
                v += (d - l) * (a(z) - a(z + 1.0));
            }
            v
        }
    })
}

fn t8(g: &Get, form: Form) -> R {
    let d = field!(g, dv);
    let z = field!(g, z);
    let x = field!(g, x);
    let c = field!(g, n_k);
    let e = |u: f64| -f(d, u) + f(d - x, u);
    let shared = x * (-f(d, z + 1.0) + f(d - x, z + 2.0)) + x * z * (-f(z + 1.0, 4.0) + f(z + 2.0, 4.0));
    Ok(match form {
        Form::Exact => {
            let nb = g.nb()?;
            shared + x * (-f(d, 4.0) + f(z + 2.0, 4.0)) + c * e(z + 2.0) + (d - 2.0 * x - c) * e(nb)
        }
        _ => {
            shared + c * e(z + 2.0) + x * (-f(d, 4.0) + f(d, z + 1.0)) - x * rs(z + 1.0)
                + x * f(z + 2.0, 4.0)
        }
    })
}

fn t9(g: &Get, form: Form) -> R {
    let d = field!(g, dv);
    let z = field!(g, z);
    let h = (z - 1.0) / 2.0;
    let fixed = -f(z + 1.0, 3.0) - (z - 1.0) * f(z + 1.0, 4.0) + (z - 3.0) * f(h, 4.0);
    Ok(match form {
        Form::SurrogateB => {
            -(d - 1.0) * f(d, 4.0) + (d + 2.0) * f(d + 3.0, 4.0)
                + 2.0 * (-f(d + 3.0, 4.0) + f(d + 3.0, 5.0))
                - f(d + 3.0, 4.0)
                + f(d + 3.0, h)
                - rs(z + 1.0)
                + (2.0 / (z - 1.0)).sqrt()
                + fixed
        }
        _ => {
            let nb = if form == Form::Exact { g.nb()? } else { 4.0 };
            (d - 1.0) * (-f(d, nb) + f(d + 3.0, nb)) - f(d, z + 1.0) + 2.0 * f(d + 3.0, h)
                + 2.0 * f(d + 3.0, 5.0)
                + fixed
        }
    })
}

fn t10(g: &Get, form: Form) -> R {
    let dx = field!(g, dx);
    let dy = field!(g, dy);
    let dz = field!(g, dz_parent);
    let first = match form {
        Form::Exact => -f(dz, dx) + f(dz, dx - 1.0),
        _ => -rs(dx) + rs(dx - 1.0),
    };
    Ok(first - f(dz, dy) + f(dz, dy + 1.0) + (dx - 2.0) * (-f(dx, 4.0) + f(dx - 1.0, 4.0)) - f(dx, 4.0)
        + f(dy + 1.0, 4.0)
        + (dy - 2.0) * (-f(dy, 4.0) + f(dy + 1.0, 4.0))
        - f(dy, 3.0)
        + f(dy + 1.0, 3.0))
}

fn t11(g: &Get, form: Form) -> R {
    let d = field!(g, dv);
    let z = field!(g, z);
    let k = field!(g, k);
    let x = 2.0 * z - k;
    let fixed = -x * z * f(z + 1.0, 4.0) - (k - 2.0) * f(k + 1.0, 4.0) - 2.0 * f(k + 1.0, 3.0)
        + (x + 2.0) * (z - 1.0) * f(z, 4.0);
    Ok(match form {
        Form::SurrogateB => {
            -(d - x - 1.0) * f(d, 4.0) + (d - x + 1.0) * f(d + 2.0, 4.0)
                + 2.0 * (-f(d + 2.0, 4.0) + f(d, z + 1.0))
                - rs(k + 1.0)
                + rs(5.0)
                + (x + 2.0) * (-rs(z + 1.0) + rs(z))
                + fixed
        }
        _ => {
            let nb = if form == Form::Exact { g.nb()? } else { 4.0 };
            (d - x - 1.0) * (-f(d, nb) + f(d + 2.0, nb)) - x * f(d, z + 1.0) - f(d, k + 1.0)
                + (x + 2.0) * f(d + 2.0, z)
                + f(d + 2.0, 5.0)
                + fixed
        }
    })
}

fn t12(g: &Get, form: Form) -> R {
    let d = field!(g, dv);
    let z = field!(g, z);
    let k = field!(g, k);
    let x = 6.0 * z - k - 5.0;
    let fixed = -x * z * f(z + 1.0, 4.0) - (k - 1.0) * f(k + 1.0, 4.0) - f(k + 1.0, 3.0) - 2.0 * f(3.0, 2.0)
        - 2.0 * f(2.0, 1.0)
        + (x + 6.0) * (z - 1.0) * f(z, 4.0);
    Ok(match form {
        Form::SurrogateB => {
            -(d - x - 1.0) * f(d, 4.0) + (d - x + 4.0) * f(d + 5.0, 4.0)
                + 5.0 * (-f(d + 5.0, 4.0) + f(d, k + 1.0))
                + 6.0 * (-f(d, k + 1.0) + f(d, z + 1.0))
                + (x + 6.0) * (-rs(z + 1.0) + rs(z))
                + fixed
        }
        _ => {
            let nb = if form == Form::Exact { g.nb()? } else { 4.0 };
            (d - x - 1.0) * (-f(d, nb) + f(d + 5.0, nb)) - x * f(d, z + 1.0) - f(d, k + 1.0)
                + (x + 6.0) * f(d + 5.0, z)
                + fixed
        }
    })
}

fn t13(g: &Get, form: Form) -> R {
    let d = field!(g, dv);
    let z = field!(g, z);
    let h = (z + 1.0) / 2.0;
    let fixed = -z * f(z + 1.0, 4.0) + (z - 1.0) * f(h, 4.0) - f(4.0, 3.0);
    Ok(match form {
        Form::SurrogateB => {
            -(d - 1.0) * f(d, 4.0) + (d + 1.0) * f(d + 2.0, 4.0)
                + 2.0 * (-f(d + 2.0, 4.0) + f(d + 2.0, h))
                - rs(z + 1.0)
                + rs(5.0)
                + fixed
        }
        _ => {
            let nb = if form == Form::Exact { g.nb()? } else { 4.0 };
            (d - 1.0) * (-f(d, nb) + f(d + 2.0, nb)) - f(d, z + 1.0) + 2.0 * f(d + 2.0, h)
                + f(d + 2.0, 5.0)
                + fixed
        }
    })
}

fn t14(g: &Get, form: Form) -> R {
    let z = field!(g, z);
    let d = match form {
        Form::Exact => field!(g, dv),
        _ => z + 1.0,
    };
    Ok(-f(d, z + 1.0) + f(d, z + 2.0) + (z - 1.0) * (-f(z + 1.0, 4.0) + f(z + 2.0, 4.0)) - f(z + 1.0, 4.0)
        - f(4.0, 3.0)
        + 2.0 * f(z + 2.0, 3.0))
}

fn t15(g: &Get, form: Form) -> R {
    let d = field!(g, dv);
    let z = field!(g, z);
    let k = field!(g, k);
    let x = z - 1.0;
    let fixed = -x * z * f(z + 1.0, 4.0) - k * f(k + 1.0, 4.0) - f(4.0, 3.0)
        + (x + 1.0) * (z - 1.0) * f(z, 4.0)
        + (k - 1.0) * f(k, 4.0);
    Ok(match form {
        Form::SurrogateB => {
            -(d - x - 1.0) * f(d, 4.0) + (d - x + 1.0) * f(d + 2.0, 4.0)
                + (-f(d + 2.0, 4.0) + f(d, z + 1.0))
                + (-f(d + 2.0, 4.0) + f(d + 2.0, k))
                + (-rs(k + 1.0) + rs(5.0))
                + (x + 1.0) * (-rs(z + 1.0) + rs(z))
                + fixed
        }
        _ => {
            let nb = if form == Form::Exact { g.nb()? } else { 4.0 };
            (d - x - 1.0) * (-f(d, nb) + f(d + 2.0, nb)) - x * f(d, z + 1.0) - f(d, k + 1.0)
                + (x + 1.0) * f(d + 2.0, z)
                + f(d + 2.0, k)
                + f(d + 2.0, 5.0)
                + fixed
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn missing_field_is_reported() {
        let p = TransformParams::new().z(52);
        assert_eq!(
            delta_abc(TransformId::T14, Form::Exact, &p),
            Err(VerifyError::MissingField { id: TransformId::T14, field: "dv" })
        );
    }

    #[test]
    fn unavailable_form_is_reported() {
        let p = TransformParams::new().z(52);
        assert!(matches!(
            delta_abc(TransformId::T14, Form::SurrogateB, &p),
            Err(VerifyError::FormUnavailable { .. })
        ));
    }

    #[test]
    fn t7_anchor() {
        let p = TransformParams::new().dv(1228).z(52).n3(918).n4(1);
        let v = delta_abc(TransformId::T7, Form::SurrogateB, &p).unwrap();
        assert!((v + 0.00201013).abs() < 1e-6, "{v}");
    }
}
