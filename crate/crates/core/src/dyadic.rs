//! Exact dyadic rationals.
//!
//! Averages over the 2^c resolutions of a c-crossing projection, and sums of
//! such averages, always have a power-of-two denominator. Storing `num / 2^pow`
//! keeps every computation exact and every comparison trivial, with none of
//! the generality (or allocation) of a full big-rational type.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// `num / 2^pow` in lowest terms: `num` is odd, or zero with `pow == 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: i64,
    pow: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, pow: 0 };

    /// Reduce `num / 2^pow` to lowest terms.
    pub fn new(mut num: i64, mut pow: u32) -> Dyadic {
        if num == 0 {
            return Dyadic::ZERO;
        }
        while num % 2 == 0 && pow > 0 {
            num /= 2;
            pow -= 1;
        }
        Dyadic { num, pow }
    }

    pub fn from_int(n: i64) -> Dyadic {
        Dyadic { num: n, pow: 0 }
    }

    pub fn numerator(self) -> i64 {
        self.num
    }

    /// 2^pow. Panics if the denominator overflows u64 (pow > 62), which no
    /// capped computation can reach.
    pub fn denominator(self) -> u64 {
        assert!(self.pow <= 62, "dyadic denominator overflow");
        1u64 << self.pow
    }

    pub fn pow(self) -> u32 {
        self.pow
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_integer(self) -> bool {
        self.pow == 0
    }

    pub fn as_integer(self) -> Option<i64> {
        (self.pow == 0).then_some(self.num)
    }

    /// Exact decimal rendering; dyadic denominators always terminate.
    /// `1/4` renders as `0.25`, `-9/8` as `-1.125`, integers without a point.
    pub fn to_decimal_string(self) -> String {
        if self.pow == 0 {
            return self.num.to_string();
        }
        // num / 2^k == num * 5^k / 10^k
        let scaled = (self.num as i128) * 5i128.pow(self.pow);
        let sign = if scaled < 0 { "-" } else { "" };
        let mag = scaled.unsigned_abs();
        let base = 10u128.pow(self.pow);
        let int = mag / base;
        let frac = mag % base;
        let frac = format!("{frac:0width$}", width = self.pow as usize);
        let frac = frac.trim_end_matches('0');
        format!("{sign}{int}.{frac}")
    }

    /// Value of `4x` when it is an integer (used for mod-2 congruence checks).
    pub fn four_times_as_integer(self) -> Option<i64> {
        (Dyadic::from_int(4) * self).as_integer()
    }

    fn widened(self, pow: u32) -> i128 {
        debug_assert!(pow >= self.pow);
        (self.num as i128) << (pow - self.pow)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        let pow = self.pow.max(rhs.pow);
        let sum = self.widened(pow) + rhs.widened(pow);
        Dyadic::new(i64::try_from(sum).expect("dyadic overflow"), pow)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + (-rhs)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            num: -self.num,
            pow: self.pow,
        }
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: Dyadic) -> Dyadic {
        let prod = (self.num as i128) * (rhs.num as i128);
        Dyadic::new(
            i64::try_from(prod).expect("dyadic overflow"),
            self.pow + rhs.pow,
        )
    }
}

impl Mul<i64> for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: i64) -> Dyadic {
        self * Dyadic::from_int(rhs)
    }
}

impl AddAssign for Dyadic {
    fn add_assign(&mut self, rhs: Dyadic) {
        *self = *self + rhs;
    }
}

impl SubAssign for Dyadic {
    fn sub_assign(&mut self, rhs: Dyadic) {
        *self = *self - rhs;
    }
}

impl Sum for Dyadic {
    fn sum<I: Iterator<Item = Dyadic>>(iter: I) -> Dyadic {
        iter.fold(Dyadic::ZERO, Add::add)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Dyadic) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Dyadic) -> std::cmp::Ordering {
        let pow = self.pow.max(other.pow);
        self.widened(pow).cmp(&other.widened(pow))
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pow == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.denominator())
        }
    }
}

/// Serialized as `{"num": N, "den": D}` with `D` a power of two.
impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Dyadic", 2)?;
        s.serialize_field("num", &self.num)?;
        s.serialize_field("den", &self.denominator())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Dyadic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Dyadic, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: i64,
            den: u64,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.den == 0 || !raw.den.is_power_of_two() {
            return Err(D::Error::custom(format!(
                "denominator {} is not a power of two",
                raw.den
            )));
        }
        Ok(Dyadic::new(raw.num, raw.den.trailing_zeros()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        assert_eq!(Dyadic::new(4, 3), Dyadic::new(1, 1));
        assert_eq!(Dyadic::new(-6, 2), Dyadic::new(-3, 1));
        assert_eq!(Dyadic::new(0, 7), Dyadic::ZERO);
        assert_eq!(Dyadic::new(5, 0).denominator(), 1);
    }

    #[test]
    fn arithmetic_is_exact() {
        let q = Dyadic::new(1, 2); // 1/4
        assert_eq!(q + q, Dyadic::new(1, 1));
        assert_eq!(q + q + q + q, Dyadic::from_int(1));
        assert_eq!(q - Dyadic::new(3, 2), -Dyadic::new(1, 1));
        assert_eq!(q * 8, Dyadic::from_int(2));
        assert_eq!(q * Dyadic::new(1, 1), Dyadic::new(1, 3));
        let xs = [q, -q, Dyadic::new(3, 3), Dyadic::from_int(2)];
        assert_eq!(xs.into_iter().sum::<Dyadic>(), Dyadic::new(19, 3));
    }

    #[test]
    fn ordering_agrees_with_values() {
        let mut xs = [
            Dyadic::new(1, 1), // 1/2
            Dyadic::from_int(-1),
            Dyadic::new(3, 2), // 3/4
            Dyadic::ZERO,
            Dyadic::new(-1, 2), // -1/4
        ];
        xs.sort();
        let shown: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["-1", "-1/4", "0", "1/2", "3/4"]);
    }

    #[test]
    fn decimal_rendering_terminates() {
        assert_eq!(Dyadic::new(1, 2).to_decimal_string(), "0.25");
        assert_eq!(Dyadic::new(-9, 3).to_decimal_string(), "-1.125");
        assert_eq!(Dyadic::from_int(7).to_decimal_string(), "7");
        assert_eq!(Dyadic::new(25, 2).to_decimal_string(), "6.25");
        assert_eq!(
            Dyadic::new(1, 20).to_decimal_string(),
            "0.00000095367431640625"
        );
    }

    #[test]
    fn serde_round_trip() {
        let x = Dyadic::new(-3, 2);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"{"num":-3,"den":4}"#);
        let back: Dyadic = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<Dyadic>(r#"{"num":1,"den":3}"#).is_err());
        // Unreduced input is accepted and normalized.
        let y: Dyadic = serde_json::from_str(r#"{"num":2,"den":8}"#).unwrap();
        assert_eq!(y, Dyadic::new(1, 2));
    }

    #[test]
    fn congruence_helper() {
        assert_eq!(Dyadic::new(25, 2).four_times_as_integer(), Some(25));
        assert_eq!(Dyadic::new(1, 3).four_times_as_integer(), None);
        assert_eq!(Dyadic::from_int(3).four_times_as_integer(), Some(12));
    }
}
