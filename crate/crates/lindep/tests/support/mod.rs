//! Test-only numeric machinery, independent of the library's spectrum path.
//!
//! The energy checks need a second opinion that does not trust the factored
//! spectrum descriptions: a real-root finder that takes the raw
//! characteristic polynomial, splits off multiplicities with Yun's
//! square-free decomposition, isolates the roots of each square-free part
//! with Sturm sequences, and refines every root by exact-sign bisection to
//! 50 decimal digits. Nothing here shares code with
//! `spectra::spectrum_from_factored_form` or the energy functions.

use lindep::poly::ExactPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type RatPoly = Vec<BigRational>;

fn trim(mut p: RatPoly) -> RatPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn degree(p: &RatPoly) -> usize {
    p.len().saturating_sub(1)
}

pub fn from_exact(p: &ExactPoly) -> RatPoly {
    trim(
        p.coeffs()
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect(),
    )
}

fn derivative(p: &RatPoly) -> RatPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
            .collect(),
    )
}

fn monic(p: &RatPoly) -> RatPoly {
    let lead = p.last().expect("nonzero polynomial").clone();
    p.iter().map(|c| c / &lead).collect()
}

fn sub(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let len = a.len().max(b.len());
    trim(
        (0..len)
            .map(|i| {
                a.get(i).cloned().unwrap_or_else(BigRational::zero)
                    - b.get(i).cloned().unwrap_or_else(BigRational::zero)
            })
            .collect(),
    )
}

fn divmod(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let db = degree(b);
    let lead = b.last().expect("division by zero polynomial");
    let mut rem = trim(a.clone());
    if rem.is_empty() || degree(&rem) < db {
        return (vec![], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while !rem.is_empty() && degree(&rem) >= db {
        let shift = degree(&rem) - db;
        let c = rem.last().unwrap() / lead;
        quot[shift] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let term = &c * bc;
            rem[shift + i] = &rem[shift + i] - term;
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

fn exact_div(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let (q, r) = divmod(a, b);
    assert!(r.is_empty(), "division expected to be exact");
    q
}

fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let (mut x, mut y) = (trim(a.clone()), trim(b.clone()));
    while !y.is_empty() {
        let (_, r) = divmod(&x, &y);
        x = y;
        y = trim(r);
        if !y.is_empty() {
            y = monic(&y);
        }
    }
    if x.is_empty() {
        x
    } else {
        monic(&x)
    }
}

/// Yun's algorithm: f = Π aᵢ^i with the aᵢ square-free and pairwise coprime.
/// Returns the nonconstant (aᵢ, i) pairs.
pub fn squarefree_decomposition(f: &RatPoly) -> Vec<(RatPoly, u64)> {
    let f = monic(&trim(f.clone()));
    assert!(degree(&f) >= 1, "need a nonconstant polynomial");
    let fp = derivative(&f);
    let g = gcd(&f, &fp);
    let mut b = exact_div(&f, &g);
    let c = exact_div(&fp, &g);
    let mut d = sub(&c, &derivative(&b));
    let mut out = Vec::new();
    let mut i = 1u64;
    while degree(&b) > 0 {
        let a = gcd(&b, &d);
        if degree(&a) > 0 {
            out.push((a.clone(), i));
        }
        b = exact_div(&b, &a);
        let c_next = exact_div(&d, &a);
        d = sub(&c_next, &derivative(&b));
        i += 1;
    }
    out
}

/// Clear denominators to an integer polynomial with the same roots.
fn to_integer(p: &RatPoly) -> Vec<BigInt> {
    let mut scale = BigInt::one();
    for c in p {
        let den = c.denom();
        let g = num_integer::Integer::gcd(&scale, den);
        scale = scale / g * den;
    }
    p.iter().map(|c| c.numer() * &scale / c.denom()).collect()
}

/// Exact sign of p at a rational point: the sign of Σ cᵢ·numⁱ·denᵈ⁻ⁱ.
fn sign_at(p: &[BigInt], x: &BigRational) -> i32 {
    let num = x.numer();
    let den = x.denom(); // positive by BigRational normalisation
    let d = p.len() - 1;
    let mut total = BigInt::zero();
    let mut num_pow = BigInt::one();
    for (i, c) in p.iter().enumerate() {
        total += c * &num_pow * den.pow((d - i) as u32);
        num_pow *= num;
    }
    match total.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Scale so the leading coefficient has magnitude one; a positive scaling,
/// so signs are preserved everywhere (required inside Sturm chains).
fn positive_scale(p: &RatPoly) -> RatPoly {
    let lead = p.last().expect("nonzero polynomial").abs();
    p.iter().map(|c| c / &lead).collect()
}

/// Sturm chain of a square-free integer polynomial.
fn sturm_chain(p: &[BigInt]) -> Vec<Vec<BigInt>> {
    let rp: RatPoly = p.iter().map(|c| BigRational::from(c.clone())).collect();
    let mut chain = vec![trim(rp.clone()), derivative(&rp)];
    while !chain.last().unwrap().is_empty() && degree(chain.last().unwrap()) >= 1 {
        let n = chain.len();
        let (_, r) = divmod(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        let neg: RatPoly = positive_scale(&r).iter().map(|c| -c).collect();
        chain.push(neg);
    }
    chain
        .into_iter()
        .filter(|c| !c.is_empty())
        .map(|c| to_integer(&c))
        .collect()
}

fn sign_variations(chain: &[Vec<BigInt>], x: &BigRational) -> usize {
    let signs: Vec<i32> = chain
        .iter()
        .map(|p| sign_at(p, x))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// All real roots of a square-free polynomial, as exact-or-50-digit
/// rationals, ascending.
fn roots_of_squarefree(p: &RatPoly) -> Vec<BigRational> {
    let ip = to_integer(&monic(p));
    let d = ip.len() - 1;
    if d == 0 {
        return vec![];
    }
    // Cauchy bound: 1 + max |c_i| / |c_d|
    let lead = ip.last().unwrap().magnitude().clone();
    let maxc = ip[..d]
        .iter()
        .map(|c| c.magnitude().clone())
        .max()
        .unwrap_or_default();
    let bound = BigRational::from(BigInt::from(1) + BigInt::from(maxc) / BigInt::from(lead) + 1);

    let chain = sturm_chain(&ip);
    let mut exact_roots: Vec<BigRational> = Vec::new();
    let mut isolated: Vec<(BigRational, BigRational)> = Vec::new();
    // count roots in (lo, hi]
    let count = |lo: &BigRational, hi: &BigRational| {
        sign_variations(&chain, lo) - sign_variations(&chain, hi)
    };
    let mut stack = vec![(-bound.clone(), bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let c = count(&lo, &hi);
        if c == 0 {
            continue;
        }
        if c == 1 {
            // single root in (lo, hi]
            if sign_at(&ip, &hi) == 0 {
                exact_roots.push(hi);
            } else {
                isolated.push((lo, hi));
            }
            continue;
        }
        let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }

    // refine each isolated root by exact-sign bisection to 10^-50
    let eps = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(50));
    let two = BigRational::from(BigInt::from(2));
    let mut roots = exact_roots;
    for (mut lo, mut hi) in isolated {
        // the interval (lo, hi] holds one simple root and p(hi) != 0,
        // so the signs at the endpoints differ
        let sign_hi = sign_at(&ip, &hi);
        debug_assert_ne!(sign_hi, 0);
        loop {
            if &hi - &lo < eps {
                roots.push((&lo + &hi) / &two);
                break;
            }
            let mid = (&lo + &hi) / &two;
            let s = sign_at(&ip, &mid);
            if s == 0 {
                roots.push(mid);
                break;
            }
            if s == sign_hi {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
    roots.sort();
    roots
}

/// All real roots of `p` with multiplicities, ascending. Panics if the root
/// count (with multiplicity) does not reach the degree — callers pass
/// characteristic polynomials of symmetric matrices, whose roots are all
/// real.
pub fn real_roots(p: &ExactPoly) -> Vec<(BigRational, u64)> {
    let rp = from_exact(p);
    let mut out: Vec<(BigRational, u64)> = Vec::new();
    for (factor, mult) in squarefree_decomposition(&rp) {
        for root in roots_of_squarefree(&factor) {
            out.push((root, mult));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    let total: u64 = out.iter().map(|(_, m)| m).sum();
    assert_eq!(
        total as usize,
        degree(&rp),
        "all roots of a symmetric-matrix charpoly are real"
    );
    out
}

/// Σ multiplicity·|root|.
pub fn abs_root_sum(roots: &[(BigRational, u64)]) -> BigRational {
    roots
        .iter()
        .map(|(r, m)| r.abs() * BigRational::from(BigInt::from(*m)))
        .sum()
}

/// Σ multiplicity·|root - shift|.
pub fn abs_deviation_sum(roots: &[(BigRational, u64)], shift: &BigRational) -> BigRational {
    roots
        .iter()
        .map(|(r, m)| (r - shift).abs() * BigRational::from(BigInt::from(*m)))
        .sum()
}
