//! Exact rationals for w-tree attachment positions. Only what positions
//! need: ordering, mediants/midpoints, parsing and printing in lowest terms.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A rational number `num/den` in lowest terms with `den > 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Self::from_bigints(BigInt::from(num), BigInt::from(den))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Rational { num, den }
    }

    pub fn zero() -> Self {
        Rational {
            num: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Rational {
            num: BigInt::one(),
            den: BigInt::one(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    /// Midpoint of `self` and `other`.
    pub fn midpoint(&self, other: &Rational) -> Rational {
        Rational::from_bigints(
            &self.num * &other.den + &other.num * &self.den,
            BigInt::from(2) * &self.den * &other.den,
        )
    }

    /// `(self + k*other_unit)`-style affine map used to embed a position into
    /// the `w`-th of `total` stacking windows: `(w + self) / total`.
    pub fn in_window(&self, window: u64, total: u64) -> Rational {
        Rational::from_bigints(
            &self.num + BigInt::from(window) * &self.den,
            &self.den * BigInt::from(total),
        )
    }

    pub fn is_strictly_inside_unit(&self) -> bool {
        self.num.is_positive() && self.num < self.den
    }

    /// `1 - self`.
    pub fn reflected(&self) -> Rational {
        Rational::from_bigints(&self.den - &self.num, self.den.clone())
    }

    /// `lo + (hi - lo) * k / m`, exact. Requires `m > 0`.
    pub fn affine_between(lo: &Rational, hi: &Rational, k: u64, m: u64) -> Rational {
        assert!(m > 0);
        // lo + (hi - lo) * k/m  =  (lo*m*(den_h*den_l) ... ) computed via bigints
        let k = BigInt::from(k);
        let m = BigInt::from(m);
        let num = &lo.num * &hi.den * &m + (&hi.num * &lo.den - &lo.num * &hi.den) * &k;
        let den = &lo.den * &hi.den * &m;
        Rational::from_bigints(num, den)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl core::str::FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> core::result::Result<Self, String> {
        let (p, q) = s
            .split_once('/')
            .ok_or_else(|| alloc::format!("bad rational `{s}`"))?;
        let num: BigInt = p
            .parse()
            .map_err(|_| alloc::format!("bad numerator `{p}`"))?;
        let den: BigInt = q
            .parse()
            .map_err(|_| alloc::format!("bad denominator `{q}`"))?;
        if den.is_zero() {
            return Err(alloc::format!("zero denominator in `{s}`"));
        }
        Ok(Rational::from_bigints(num, den))
    }
}
