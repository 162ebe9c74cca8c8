//! Fixed-point arithmetic with 256 fractional bits.
//!
//! Every edge weight is a square root of a rational number, so a weight can
//! be computed to within one unit in the last place with integer square
//! roots. Sums and integer multiples are then exact, which makes comparisons
//! between nearly equal objective values reliable far beyond binary64.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

pub const FRAC_BITS: u32 = 256;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fixed(BigInt);

impl Fixed {
    pub fn zero() -> Self {
        Fixed(BigInt::zero())
    }

    pub fn from_int(v: i128) -> Self {
        Fixed(BigInt::from(v) << FRAC_BITS)
    }

    /// `floor(2^256 * sqrt((x + y - 2) / (x y)))` for integer degrees.
    pub fn weight(x: u64, y: u64) -> Self {
        assert!(x >= 1 && y >= 1, "degrees must be positive");
        let num = BigUint::from(x + y - 2) << (2 * FRAC_BITS);
        let den = BigUint::from(x) * BigUint::from(y);
        Fixed(BigInt::from_biguint(Sign::Plus, (num / den).sqrt()))
    }

    /// `floor(2^256 * sqrt(p / q))`.
    pub fn sqrt_ratio(p: u64, q: u64) -> Self {
        assert!(q > 0);
        let num = BigUint::from(p) << (2 * FRAC_BITS);
        Fixed(BigInt::from_biguint(Sign::Plus, (num / BigUint::from(q)).sqrt()))
    }

    pub fn mul_int(&self, k: i128) -> Self {
        Fixed(&self.0 * BigInt::from(k))
    }

    pub fn abs(&self) -> Self {
        Fixed(self.0.abs())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn to_f64(&self) -> f64 {
        let shift = FRAC_BITS - 64;
        let top = &self.0 >> shift;
        top.to_f64().unwrap_or(f64::NAN) / 2f64.powi(64)
    }

    /// `|self - other| <= 10^-digits * max(|self|, |other|)`.
    pub fn rel_close(&self, other: &Fixed, digits: u32) -> bool {
        let diff = (&self.0 - &other.0).abs() * BigInt::from(10u8).pow(digits);
        let scale = std::cmp::max(self.0.abs(), other.0.abs());
        diff <= scale
    }

    /// Decimal rendering rounded to `sig` significant digits.
    pub fn to_decimal(&self, sig: usize) -> String {
        assert!(sig > 0);
        if self.0.is_zero() {
            return "0".to_string();
        }
        let neg = self.0.is_negative();
        let mag = self.0.abs();
        let int_part: BigInt = &mag >> FRAC_BITS;
        let mut frac_digits: i64 = if int_part.is_zero() {
            // leading zeros after the point plus the requested digits
            let mut lead = 0i64;
            let mut probe = mag.clone() * 10u8;
            while (&probe >> FRAC_BITS).is_zero() {
                probe *= 10u8;
                lead += 1;
            }
            lead + sig as i64
        } else {
            sig as i64 - int_part.to_string().len() as i64
        };
        loop {
            let scaled = round_scaled(&mag, frac_digits);
            let text = scaled.to_string();
            let significant = text.trim_start_matches('0').len() as i64;
            if significant > sig as i64 && frac_digits > 0 {
                frac_digits -= 1;
                continue;
            }
            return render(&text, frac_digits, neg);
        }
    }
}

fn round_scaled(mag: &BigInt, frac_digits: i64) -> BigInt {
    let half = BigInt::from(1u8) << (FRAC_BITS - 1);
    if frac_digits >= 0 {
        let p = BigInt::from(10u8).pow(frac_digits as u32);
        (mag * p + half) >> FRAC_BITS
    } else {
        let p = BigInt::from(10u8).pow((-frac_digits) as u32);
        let q = (mag + half) >> FRAC_BITS;
        // round half up at the requested power of ten
        ((q + &p / 2u8) / &p) * p
    }
}

fn render(digits: &str, frac_digits: i64, neg: bool) -> String {
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if frac_digits <= 0 {
        out.push_str(digits);
        return out;
    }
    let fd = frac_digits as usize;
    if digits.len() <= fd {
        out.push_str("0.");
        out.push_str(&"0".repeat(fd - digits.len()));
        out.push_str(digits);
    } else {
        let (i, f) = digits.split_at(digits.len() - fd);
        out.push_str(i);
        out.push('.');
        out.push_str(f);
    }
    out
}

impl fmt::Debug for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fixed({})", self.to_decimal(40))
    }
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(32))
    }
}

impl Add for Fixed {
    type Output = Fixed;
    fn add(self, rhs: Fixed) -> Fixed {
        Fixed(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Fixed> for Fixed {
    type Output = Fixed;
    fn add(self, rhs: &'a Fixed) -> Fixed {
        Fixed(self.0 + &rhs.0)
    }
}

impl AddAssign<&Fixed> for Fixed {
    fn add_assign(&mut self, rhs: &Fixed) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Fixed {
    fn add_assign(&mut self, rhs: Fixed) {
        self.0 += rhs.0;
    }
}

impl Sub for Fixed {
    type Output = Fixed;
    fn sub(self, rhs: Fixed) -> Fixed {
        Fixed(self.0 - rhs.0)
    }
}

impl<'a> Sub<&'a Fixed> for &'a Fixed {
    type Output = Fixed;
    fn sub(self, rhs: &'a Fixed) -> Fixed {
        Fixed(&self.0 - &rhs.0)
    }
}

impl Neg for Fixed {
    type Output = Fixed;
    fn neg(self) -> Fixed {
        Fixed(-self.0)
    }
}

impl std::iter::Sum for Fixed {
    fn sum<I: Iterator<Item = Fixed>>(iter: I) -> Fixed {
        iter.fold(Fixed::zero(), |a, b| a + b)
    }
}
