//! Minimal double-double ("two-float") arithmetic.
//!
//! The far-user average-BLER series alternates with terms up to ~1e10 times
//! larger than its sum, so a plain `f64` evaluation keeps only 6-7 correct
//! digits. Every quantity derived from the shared coefficient tables is
//! therefore accumulated in an unevaluated sum of two `f64`s (~31 significant
//! digits) and rounded once on output. This keeps the closed form and the
//! quadrature of the term-by-term CDF consistent to full `f64` precision,
//! which the equivalence checks rely on.
//!
//! Only the operations the series kernel needs are implemented: arithmetic,
//! `exp`, `ln`, and the exponential integral E1. Algorithms follow the
//! standard error-free transformations (Dekker/Knuth two-sum, FMA two-prod).

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// Requires `|a| >= |b|` (or either zero).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Natural log of 2 to double-double precision.
pub const LN2: Dd = Dd {
    hi: 0.693_147_180_559_945_3,
    lo: 2.319_046_813_846_299_6e-17,
};

/// Euler-Mascheroni constant to double-double precision.
pub const EULER: Dd = Dd {
    hi: 0.577_215_664_901_532_9,
    lo: -4.942_915_152_430_645e-18,
};

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact value of the 128-bit integer, split across the two limbs.
    pub fn from_i128(n: i128) -> Dd {
        let hi = n as f64;
        // hi rounds to <= 2^53-scale relative error; the remainder fits f64
        // exactly for |n| < 2^106.
        let lo = (n - hi as i128) as f64;
        let (s, e) = two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            self.neg()
        } else {
            self
        }
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (s1, s2) = quick_two_sum(s1, s2 + t2);
        Dd { hi: s1, lo: s2 }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    #[inline]
    pub fn add_f64(self, o: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, o);
        let (s1, s2) = quick_two_sum(s1, s2 + self.lo);
        Dd { hi: s1, lo: s2 }
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, o.hi);
        let p2 = p2 + (self.hi * o.lo + self.lo * o.hi);
        let (p1, p2) = quick_two_sum(p1, p2);
        Dd { hi: p1, lo: p2 }
    }

    #[inline]
    pub fn mul_f64(self, o: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, o);
        let (p1, p2) = quick_two_sum(p1, p2 + self.lo * o);
        Dd { hi: p1, lo: p2 }
    }

    /// Two-division quotient (the classic "sloppy" scheme): q1 captures all
    /// but ~1 ulp, the exact two_prod remainder feeds one correction. Error
    /// stays within a few units of 2^-106, which every caller tolerates.
    #[inline]
    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let (p1, p2) = two_prod(q1, o.hi);
        // self.hi - p1 is exact (the operands agree to within one ulp).
        let r = ((self.hi - p1) - p2) + self.lo - q1 * o.lo;
        let q2 = r / o.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn div_f64(self, o: f64) -> Dd {
        let q1 = self.hi / o;
        let (p1, p2) = two_prod(q1, o);
        let r = ((self.hi - p1) - p2) + self.lo;
        let q2 = r / o;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e }
    }

    /// Exact scaling by 2^k.
    #[inline]
    fn ldexp(self, k: i32) -> Dd {
        let f = (2.0f64).powi(k);
        Dd {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }

    /// Exponential by argument reduction against ln 2 plus a Taylor tail.
    pub fn exp(self) -> Dd {
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        if self.hi > 709.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        let m = (self.hi / LN2.hi).round();
        let r = self.sub(LN2.mul_f64(m));
        // |r| <= ln2/2; 30 terms push the truncation far below 1e-32.
        let mut term = r;
        let mut sum = r.add_f64(1.0);
        for n in 2..=30 {
            term = term.mul(r).div_f64(n as f64);
            sum = sum.add(term);
            if term.hi.abs() < 1.0e-35 {
                break;
            }
        }
        sum.ldexp(m as i32)
    }

    /// Natural logarithm via one Newton correction of the f64 estimate.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0, "dd ln of non-positive value");
        let y0 = self.hi.ln();
        // self * e^{-y0} = 1 + d with |d| ~ 1e-16; ln(1+d) ~ d - d^2/2.
        let d = self.mul(Dd::from_f64(-y0).exp()).add_f64(-1.0);
        let corr = d.sub(d.mul(d).div_f64(2.0));
        corr.add_f64(y0)
    }

    /// Exponential integral E1 for positive arguments.
    ///
    /// Power series below the crossover (cancellation there costs at most
    /// ~e^4, i.e. two digits of the 31 carried); Lentz continued fraction
    /// above it, seeded with the externally supplied `exp(-x)` so callers
    /// evaluating a ladder of arguments can reuse their running power.
    pub fn e1_with_exp(x: Dd, exp_neg_x: Dd) -> Dd {
        debug_assert!(x.hi > 0.0, "E1 of non-positive argument");
        if x.hi <= E1_SERIES_MAX {
            e1_series(x)
        } else {
            e1_cf(x, exp_neg_x)
        }
    }

    /// Exponential integral E1 (standalone; computes its own exponential).
    pub fn e1(x: Dd) -> Dd {
        if x.hi <= E1_SERIES_MAX {
            e1_series(x)
        } else {
            Dd::e1_with_exp(x, x.neg().exp())
        }
    }
}

/// Crossover between the E1 power series and continued fraction.
pub const E1_SERIES_MAX: f64 = 4.0;

/// E1(x) = -EULER - ln x + sum_{n>=1} (-1)^{n+1} x^n / (n n!).
fn e1_series(x: Dd) -> Dd {
    let mut v = Dd::ONE;
    let mut sum = Dd::ZERO;
    for n in 1..=80 {
        let nf = n as f64;
        v = v.mul(x).div_f64(nf);
        let c = v.div_f64(nf);
        sum = if n % 2 == 1 { sum.add(c) } else { sum.sub(c) };
        if v.hi < 1.0e-35 {
            break;
        }
    }
    sum.sub(EULER).sub(x.ln())
}

/// E1(x) = e^{-x} / (x + 1 - 1^2/(x + 3 - 2^2/(x + 5 - ...))), modified
/// Lentz iteration.
fn e1_cf(x: Dd, exp_neg_x: Dd) -> Dd {
    if exp_neg_x.hi == 0.0 {
        return Dd::ZERO;
    }
    let mut b = x.add_f64(1.0);
    let mut c = Dd::from_f64(1.0e300);
    let mut d = Dd::ONE.div(b);
    let mut h = d;
    for i in 1..=400 {
        let a = -((i * i) as f64);
        b = b.add_f64(2.0);
        d = Dd::ONE.div(d.mul_f64(a).add(b));
        c = b.add(Dd::from_f64(a).div(c));
        let del = c.mul(d);
        h = h.mul(del);
        if (del.hi - 1.0).abs() + del.lo.abs() < 1.0e-32 {
            break;
        }
    }
    h.mul(exp_neg_x)
}
