use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::UniPoly;
use super::rational::{format_rational, to_f64, Rational, Sign};
use crate::error::{Error, Result};

/// Upper bound on interval bisections performed by any single refinement.
pub const REFINEMENT_CAP: usize = 1_000_000;

/// A real number that is either rational or a root of a square-free
/// rational polynomial isolated by a rational interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraicPoint {
    Rational(Rational),
    /// `defining` has exactly one real root in `[lo, hi]`, no rational roots
    /// at all, and `lo < hi`.
    Algebraic {
        defining: UniPoly,
        lo: Rational,
        hi: Rational,
    },
}

impl AlgebraicPoint {
    pub fn rational(r: Rational) -> Self {
        AlgebraicPoint::Rational(r)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            AlgebraicPoint::Rational(r) => Some(r),
            AlgebraicPoint::Algebraic { .. } => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, AlgebraicPoint::Rational(_))
    }

    /// Rational bounds `lo <= self <= hi` (equal for rational points).
    pub fn bounds(&self) -> (Rational, Rational) {
        match self {
            AlgebraicPoint::Rational(r) => (r.clone(), r.clone()),
            AlgebraicPoint::Algebraic { lo, hi, .. } => (lo.clone(), hi.clone()),
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            AlgebraicPoint::Rational(r) => to_f64(r),
            AlgebraicPoint::Algebraic { .. } => {
                let mut p = self.clone();
                // Width 2^-60 is far below f64 resolution for the magnitudes here.
                let _ = p.refine_to_width(&Rational::new(BigInt::one(), BigInt::one() << 60));
                let (lo, hi) = p.bounds();
                to_f64(&((lo + hi) / Rational::from_integer(2.into())))
            }
        }
    }

    /// Halves the isolating interval. No-op for rational points.
    pub fn bisect(&mut self) {
        if let AlgebraicPoint::Algebraic { defining, lo, hi } = self {
            let mid = (&*lo + &*hi) / Rational::from_integer(2.into());
            let s_lo = Sign::of(&defining.eval(lo));
            let s_mid = Sign::of(&defining.eval(&mid));
            debug_assert_ne!(s_mid, Sign::Zero, "defining polynomial has no rational roots");
            if s_lo == s_mid {
                *lo = mid;
            } else {
                *hi = mid;
            }
        }
    }

    pub fn refine_to_width(&mut self, width: &Rational) -> Result<()> {
        let mut steps = 0;
        while let AlgebraicPoint::Algebraic { lo, hi, .. } = self {
            if &(&*hi - &*lo) <= width {
                break;
            }
            steps += 1;
            if steps > REFINEMENT_CAP {
                return Err(Error::RefinementCap(REFINEMENT_CAP));
            }
            self.bisect();
        }
        Ok(())
    }

    /// Exact comparison of two real points.
    pub fn cmp_exact(&self, other: &AlgebraicPoint) -> Result<Ordering> {
        match (self, other) {
            (AlgebraicPoint::Rational(a), AlgebraicPoint::Rational(b)) => Ok(a.cmp(b)),
            (AlgebraicPoint::Rational(a), b @ AlgebraicPoint::Algebraic { .. }) => {
                Ok(cmp_rational(b, a)?.reverse())
            }
            (a @ AlgebraicPoint::Algebraic { .. }, AlgebraicPoint::Rational(b)) => cmp_rational(a, b),
            (
                a @ AlgebraicPoint::Algebraic { defining: pa, .. },
                b @ AlgebraicPoint::Algebraic { defining: pb, .. },
            ) => {
                let g = pa.gcd(pb);
                if g.degree().unwrap_or(0) > 0 && sign_at(&g, a)? == Sign::Zero {
                    // `a` is a root of `pb`; equal iff it lies in b's interval.
                    let (blo, bhi) = b.bounds();
                    if cmp_rational(a, &blo)? == Ordering::Greater
                        && cmp_rational(a, &bhi)? == Ordering::Less
                    {
                        return Ok(Ordering::Equal);
                    }
                }
                let (mut a, mut b) = (a.clone(), b.clone());
                for _ in 0..REFINEMENT_CAP {
                    let (alo, ahi) = a.bounds();
                    let (blo, bhi) = b.bounds();
                    if ahi < blo {
                        return Ok(Ordering::Less);
                    }
                    if bhi < alo {
                        return Ok(Ordering::Greater);
                    }
                    a.bisect();
                    b.bisect();
                }
                Err(Error::RefinementCap(REFINEMENT_CAP))
            }
        }
    }

    /// A rational strictly between `self` and `other`, which must satisfy
    /// `self < other`.
    pub fn rational_between(&self, other: &AlgebraicPoint) -> Result<Rational> {
        let (mut a, mut b) = (self.clone(), other.clone());
        for _ in 0..REFINEMENT_CAP {
            let (_, ahi) = a.bounds();
            let (blo, _) = b.bounds();
            if ahi < blo {
                return Ok((ahi + blo) / Rational::from_integer(2.into()));
            }
            if ahi == blo && !a.is_rational() && !b.is_rational() {
                // Interval endpoints are never roots, so a shared endpoint
                // lies strictly between the two points.
                return Ok(ahi);
            }
            a.bisect();
            b.bisect();
        }
        Err(Error::RefinementCap(REFINEMENT_CAP))
    }
}

impl fmt::Display for AlgebraicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraicPoint::Rational(r) => write!(f, "{}", format_rational(r)),
            AlgebraicPoint::Algebraic { defining, lo, hi } => write!(
                f,
                "root of {} in [{}, {}] (~{:.6})",
                defining,
                format_rational(lo),
                format_rational(hi),
                self.approx()
            ),
        }
    }
}

fn cmp_rational(a: &AlgebraicPoint, r: &Rational) -> Result<Ordering> {
    let s = sign_at(&UniPoly::linear_root(r), a)?;
    Ok(match s {
        Sign::Negative => Ordering::Less,
        Sign::Zero => Ordering::Equal,
        Sign::Positive => Ordering::Greater,
    })
}

/// Upper bound on the number of roots of `p` in the open interval `(lo, hi)`
/// (Descartes' rule after mapping the interval to `(0, inf)`). Exact when
/// the result is 0 or 1.
pub fn descartes_bound(p: &UniPoly, lo: &Rational, hi: &Rational) -> usize {
    // q(x) = p(lo + (hi - lo) x) maps (0, 1) onto (lo, hi); then
    // (1 + t)^d q(1 / (1 + t)) maps (0, 1) onto (0, inf).
    let q = p.shift(lo).scale_arg(&(hi - lo));
    q.reversed().shift(&Rational::one()).sign_variations()
}

/// Rational roots of `p` via the rational root theorem on its integer
/// form, in ascending order without repetition.
pub fn rational_roots(p: &UniPoly) -> Vec<Rational> {
    if p.is_zero() {
        return Vec::new();
    }
    let mut ints = p.integer_coeffs();
    let mut roots = Vec::new();
    let lead_zeros = ints.iter().take_while(|c| c.is_zero()).count();
    if lead_zeros > 0 {
        roots.push(Rational::zero());
        ints.drain(..lead_zeros);
    }
    if ints.len() > 1 {
        let constant = ints[0].abs();
        let leading = ints.last().unwrap().abs();
        let reduced = UniPoly::new(ints.iter().cloned().map(Rational::from_integer).collect());
        for num in divisors(&constant) {
            for den in divisors(&leading) {
                if !num.gcd(&den).is_one() {
                    continue;
                }
                for cand in [
                    Rational::new(num.clone(), den.clone()),
                    Rational::new(-num.clone(), den.clone()),
                ] {
                    if reduced.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            let other = n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Cauchy bound on the absolute value of all roots, rounded up to a power
/// of two.
fn root_bound(p: &UniPoly) -> Rational {
    let lc = p.leading().expect("nonzero").abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    let bound = max + Rational::one();
    let mut pow = Rational::one();
    while pow < bound {
        pow *= Rational::from_integer(2.into());
    }
    pow
}

/// Every distinct real root of `p` in `[lower, inf)`, ascending. Rational
/// roots come back exact; the others carry the square-free, rational-root
/// free part of `p` and an isolating interval of width at most 1/2.
pub fn isolate_real_roots(p: &UniPoly, lower: &Rational) -> Result<Vec<AlgebraicPoint>> {
    if p.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    let sqf = p.square_free();
    let mut rest = sqf.clone();
    let mut points: Vec<AlgebraicPoint> = Vec::new();
    for r in rational_roots(&sqf) {
        rest = rest.div_rem(&UniPoly::linear_root(&r)).0;
        if &r >= lower {
            points.push(AlgebraicPoint::Rational(r));
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        let rest = rest.monic();
        let upper = {
            let b = root_bound(&rest);
            if &b > lower {
                b
            } else {
                lower + Rational::one()
            }
        };
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let mut stack = vec![(lower.clone(), upper)];
        let mut steps = 0usize;
        while let Some((lo, hi)) = stack.pop() {
            steps += 1;
            if steps > REFINEMENT_CAP {
                return Err(Error::RefinementCap(REFINEMENT_CAP));
            }
            match descartes_bound(&rest, &lo, &hi) {
                0 => {}
                1 => {
                    let mut pt = AlgebraicPoint::Algebraic {
                        defining: rest.clone(),
                        lo,
                        hi,
                    };
                    pt.refine_to_width(&half)?;
                    points.push(pt);
                }
                _ => {
                    let mid = (&lo + &hi) / Rational::from_integer(2.into());
                    stack.push((mid.clone(), hi));
                    stack.push((lo, mid));
                }
            }
        }
    }
    sort_points(&mut points)?;
    Ok(points)
}

/// Sorts ascending and removes duplicates (equal reals with different
/// representations collapse to the first, preferring rational ones).
pub fn sort_points(points: &mut Vec<AlgebraicPoint>) -> Result<()> {
    // Insertion sort: the comparison is fallible and lists are short.
    let mut sorted: Vec<AlgebraicPoint> = Vec::with_capacity(points.len());
    for p in points.drain(..) {
        let mut idx = sorted.len();
        let mut duplicate = false;
        for (i, q) in sorted.iter().enumerate() {
            match p.cmp_exact(q)? {
                Ordering::Less => {
                    idx = i;
                    break;
                }
                Ordering::Equal => {
                    duplicate = true;
                    if p.is_rational() && !q.is_rational() {
                        idx = i;
                    }
                    break;
                }
                Ordering::Greater => {}
            }
        }
        if duplicate {
            if idx < sorted.len() {
                sorted[idx] = p;
            }
        } else {
            sorted.insert(idx, p);
        }
    }
    *points = sorted;
    Ok(())
}

/// Exact sign of `p` at the real number `pt`.
pub fn sign_at(p: &UniPoly, pt: &AlgebraicPoint) -> Result<Sign> {
    match pt {
        AlgebraicPoint::Rational(r) => Ok(Sign::of(&p.eval(r))),
        AlgebraicPoint::Algebraic { defining, .. } => {
            if p.is_zero() {
                return Ok(Sign::Zero);
            }
            let g = p.gcd(defining);
            if g.degree().unwrap_or(0) > 0 {
                // g divides the square-free defining polynomial, so its roots
                // are simple and the endpoints are never roots.
                let (lo, hi) = pt.bounds();
                if Sign::of(&g.eval(&lo)) != Sign::of(&g.eval(&hi)) {
                    return Ok(Sign::Zero);
                }
            }
            let mut cur = pt.clone();
            for _ in 0..REFINEMENT_CAP {
                let (lo, hi) = cur.bounds();
                if descartes_bound(p, &lo, &hi) == 0 {
                    let mid = (lo + hi) / Rational::from_integer(2.into());
                    return Ok(Sign::of(&p.eval(&mid)));
                }
                cur.bisect();
            }
            Err(Error::RefinementCap(REFINEMENT_CAP))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{frac, int};

    fn sqrt2() -> AlgebraicPoint {
        AlgebraicPoint::Algebraic {
            defining: UniPoly::from_i64(&[-2, 0, 1]),
            lo: int(1),
            hi: frac(3, 2),
        }
    }

    #[test]
    fn isolation_examples() {
        let roots = isolate_real_roots(&UniPoly::from_i64(&[-1, 0, 1]), &int(0)).unwrap();
        assert_eq!(roots, vec![AlgebraicPoint::Rational(int(1))]);

        let roots = isolate_real_roots(&UniPoly::from_i64(&[0, 1, 1]), &int(0)).unwrap();
        assert_eq!(roots, vec![AlgebraicPoint::Rational(int(0))]);

        let roots = isolate_real_roots(&UniPoly::from_i64(&[-2, 0, 1]), &int(0)).unwrap();
        assert_eq!(roots, vec![sqrt2()]);
    }

    #[test]
    fn sqrt2_interval_by_bisection_oracle() {
        // Independent check: exactly one sign change of x^2 - 2 on a fine
        // grid over [1, 3/2], and none elsewhere in [0, 4].
        let p = UniPoly::from_i64(&[-2, 0, 1]);
        let mut changes_inside = 0;
        let mut changes_outside = 0;
        for k in 0..4000 {
            let a = frac(k, 1000);
            let b = frac(k + 1, 1000);
            if Sign::of(&p.eval(&a)) != Sign::of(&p.eval(&b)) {
                if a >= int(1) && b <= frac(3, 2) {
                    changes_inside += 1;
                } else {
                    changes_outside += 1;
                }
            }
        }
        assert_eq!((changes_inside, changes_outside), (1, 0));
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert_eq!(
            isolate_real_roots(&UniPoly::zero(), &int(0)),
            Err(Error::IdenticallyZero)
        );
    }

    #[test]
    fn repeated_and_mixed_roots() {
        // (x - 1/2)^2 (x^2 - 3) (x + 4)
        let p = &(&(&UniPoly::from_i64(&[-1, 2]) * &UniPoly::from_i64(&[-1, 2]))
            * &UniPoly::from_i64(&[-3, 0, 1]))
            * &UniPoly::from_i64(&[4, 1]);
        let roots = isolate_real_roots(&p, &int(-10)).unwrap();
        assert_eq!(roots.len(), 4);
        assert_eq!(roots[0], AlgebraicPoint::Rational(int(-4)));
        assert!((roots[1].approx() + 3f64.sqrt()).abs() < 1e-9);
        assert_eq!(roots[2], AlgebraicPoint::Rational(frac(1, 2)));
        assert!((roots[3].approx() - 3f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn sign_examples() {
        let x_minus_1 = UniPoly::from_i64(&[-1, 1]);
        assert_eq!(sign_at(&x_minus_1, &AlgebraicPoint::Rational(int(1))).unwrap(), Sign::Zero);
        assert_eq!(sign_at(&x_minus_1, &sqrt2()).unwrap(), Sign::Positive);
        assert_eq!(sign_at(&UniPoly::from_i64(&[-2, 0, 1]), &sqrt2()).unwrap(), Sign::Zero);
        // x^2 - 2x - 1 = 0 at 1 - sqrt2 and 1 + sqrt2; at sqrt2 it is 1 - 2 sqrt2 < 0.
        assert_eq!(
            sign_at(&UniPoly::from_i64(&[-1, -2, 1]), &sqrt2()).unwrap(),
            Sign::Negative
        );
        // Shares a factor but not this root: (x + sqrt2)(x - 3).
        let p = &UniPoly::from_i64(&[-2, 0, 1]) * &UniPoly::from_i64(&[-3, 1]);
        assert_eq!(sign_at(&p, &sqrt2()).unwrap(), Sign::Zero);
        let q = &UniPoly::from_i64(&[-1, 0, 1]) * &UniPoly::from_i64(&[-3, 1]);
        assert_eq!(sign_at(&q, &sqrt2()).unwrap(), Sign::Negative);
    }

    #[test]
    fn comparisons() {
        let s2 = sqrt2();
        let s3 = isolate_real_roots(&UniPoly::from_i64(&[-3, 0, 1]), &int(0)).unwrap()[0].clone();
        assert_eq!(s2.cmp_exact(&s3).unwrap(), Ordering::Less);
        assert_eq!(s3.cmp_exact(&s2).unwrap(), Ordering::Greater);
        // Same number, different defining polynomials.
        let other = isolate_real_roots(
            &(&UniPoly::from_i64(&[-2, 0, 1]) * &UniPoly::from_i64(&[-5, 0, 1])),
            &int(0),
        )
        .unwrap()[0]
            .clone();
        assert_eq!(s2.cmp_exact(&other).unwrap(), Ordering::Equal);
        let r = s2.rational_between(&s3).unwrap();
        assert!(r.clone() * r.clone() > int(2) && r.clone() * r < int(3));
    }
}
