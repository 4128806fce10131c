use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::mat::Mat;
use super::scalar::{Field, Scalar};

/// Coefficients `c_0..c_n` (constant first) of `det(x I - m)`, by
/// Faddeev–LeVerrier. Characteristic zero only.
pub fn char_poly_rational(m: &Mat) -> Vec<BigRational> {
    assert!(m.is_square());
    assert_eq!(m.field(), Field::Rational);
    let n = m.rows();
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = BigRational::one();
    let mut mk = Mat::zeros(Field::Rational, n, n);
    for k in 1..=n {
        let mut next = m.mul(&mk);
        let id = Mat::identity(Field::Rational, n).scale(&Scalar::Q(c[n - k + 1].clone()));
        next = next.add(&id);
        mk = next;
        let tr = m.mul(&mk).trace();
        let tr = tr.as_rational().unwrap().clone();
        c[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }
    c
}

fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn small_divisors(n: &BigInt, limit: u64) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u128()?;
    if n == 0 {
        return None;
    }
    let mut out = Vec::new();
    let mut d: u128 = 1;
    let mut steps = 0u64;
    while d * d <= n {
        steps += 1;
        if steps > limit {
            return None;
        }
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Distinct rational roots of a polynomial with rational coefficients
/// (constant term first), via the rational root theorem. Returns `None` when
/// the integer coefficients are too large to factor cheaply.
pub fn rational_roots(p: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut p: Vec<BigRational> = p.to_vec();
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let mut roots = Vec::new();
    if p.len() <= 1 {
        return Some(roots);
    }
    if p[0].is_zero() {
        roots.push(BigRational::zero());
        while p.first().is_some_and(Zero::is_zero) {
            p.remove(0);
        }
        if p.len() <= 1 {
            return Some(roots);
        }
    }
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let a0 = ints.first().unwrap();
    let an = ints.last().unwrap();
    let ps = small_divisors(a0, 2_000_000)?;
    let qs = small_divisors(an, 2_000_000)?;
    let mut cands: Vec<BigRational> = Vec::new();
    for num in &ps {
        for den in &qs {
            for sign in [1, -1] {
                let r = BigRational::new(num * sign, den.clone());
                if !cands.contains(&r) {
                    cands.push(r);
                }
            }
        }
    }
    cands.sort();
    for r in cands {
        if eval(&p, &r).is_zero() {
            roots.push(r);
        }
    }
    Some(roots)
}

/// Eigenvalues of a square matrix lying in its field; `None` if they
/// cannot be determined cheaply.
pub fn eigenvalues_in_field(m: &Mat) -> Option<Vec<Scalar>> {
    match m.field() {
        Field::Rational => Some(rational_roots(&char_poly_rational(m))?.into_iter().map(Scalar::Q).collect()),
        Field::Prime(_) => {
            let n = m.rows();
            let id = Mat::identity(m.field(), n);
            Some(
                m.field()
                    .elements()
                    .unwrap()
                    .into_iter()
                    .filter(|c| !m.sub(&id.scale(c)).is_invertible())
                    .collect(),
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_of_companion() {
        // x^2 - 3x + 2 = (x-1)(x-2)
        let m = Mat::from_i64(Field::Rational, &[&[0, -2], &[1, 3]]);
        let p = char_poly_rational(&m);
        let want: Vec<BigRational> = [2, -3, 1].iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect();
        assert_eq!(p, want);
        let roots = rational_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn eigenvalues_mod_p() {
        let m = Mat::from_i64(Field::Prime(5), &[&[2, 0], &[0, 3]]);
        let ev = eigenvalues_in_field(&m).unwrap();
        assert_eq!(ev, vec![Field::Prime(5).from_i64(2), Field::Prime(5).from_i64(3)]);
    }

    #[test]
    fn zero_and_half_roots() {
        // x (2x - 1)
        let m = Mat::from_rows(
            Field::Rational,
            2,
            vec![vec![Field::Rational.zero(), Field::Rational.zero()], vec![Field::Rational.zero(), Scalar::Q(BigRational::new(1.into(), 2.into()))]],
        );
        let ev = eigenvalues_in_field(&m).unwrap();
        assert_eq!(ev.len(), 2);
    }
}
