use smallvec::SmallVec;

use crate::algebra::{Algebra, Shape};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::filters::{self, Filter};

/// A counit together with its defining partner: `u < 1`, `v < 1`, `u∨v = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CounitWitness {
    pub u: Element,
    pub v: Element,
}

/// Decides whether `x` is a counit, returning the partner element when it is.
///
/// Finite algebras search exhaustively. Symbolic algebras use closed forms:
/// a co-infinitesimal `(1,v)` is a counit iff `v ≠ 0` and some coordinate of
/// `v` is zero (partner: the complementary indicator co-vector);
/// infinitesimals never are; a product element is a counit iff it is below 1
/// and some coordinate is that component's 1 or a counit there.
pub fn is_counit(a: &Algebra, x: &Element, _window: u64) -> Result<Option<CounitWitness>> {
    a.validate(x)?;
    let one = a.one();
    if *x == one {
        return Ok(None);
    }
    if a.is_finite() {
        for v in a.enumerate_window(0) {
            if v != one && a.join(x, &v)? == one {
                return Ok(Some(CounitWitness { u: x.clone(), v }));
            }
        }
        return Ok(None);
    }
    match (a.shape(), x) {
        (Shape::Lex(_), Element::Lex { top: false, .. }) => Ok(None),
        (Shape::Lex(_), Element::Lex { top: true, vec }) => {
            let nonzero = vec.iter().any(|&c| c != 0);
            let has_zero = vec.iter().any(|&c| c == 0);
            if nonzero && has_zero {
                let w: SmallVec<[u64; 4]> =
                    vec.iter().map(|&c| if c == 0 { 1 } else { 0 }).collect();
                let v = Element::Lex { top: true, vec: w };
                debug_assert_eq!(a.join(x, &v)?, one);
                Ok(Some(CounitWitness { u: x.clone(), v }))
            } else {
                Ok(None)
            }
        }
        (Shape::Product(children), Element::Tuple(parts)) => {
            for i in 0..children.len() {
                let comp = a.component(i)?;
                let comp_one = comp.one();
                let partner_i = if parts[i] == comp_one {
                    Some(comp.zero())
                } else {
                    is_counit(&comp, &parts[i], _window)?.map(|w| w.v)
                };
                if let Some(vi) = partner_i {
                    let v = Element::Tuple(
                        (0..children.len())
                            .map(|j| {
                                if j == i {
                                    vi.clone()
                                } else {
                                    Algebra::from_shape(children[j].clone()).one()
                                }
                            })
                            .collect(),
                    );
                    debug_assert_eq!(a.join(x, &v)?, one);
                    return Ok(Some(CounitWitness { u: x.clone(), v }));
                }
            }
            Ok(None)
        }
        _ => Err(Error::ShapeMismatch(format!(
            "element {x} does not belong to {a}"
        ))),
    }
}

/// All counits in scope, in canonical order.
pub fn counits(a: &Algebra, window: u64) -> Result<Vec<Element>> {
    let mut out = Vec::new();
    for x in a.enumerate_window(window) {
        if is_counit(a, &x, window)?.is_some() {
            out.push(x);
        }
    }
    Ok(out)
}

/// The Conrad filter N: the implication filter generated by all counits.
pub fn conrad_filter(a: &Algebra) -> Result<Filter> {
    if a.is_finite() {
        let cs = counits(a, 0)?;
        return filters::generate_filter(a, &cs);
    }
    match a.shape() {
        Shape::Lex(1) => Ok(Filter::one(a)),
        Shape::Lex(_) => Filter::rad(a),
        Shape::Product(children) => {
            if children.len() >= 2 {
                // counits with disjoint top-coordinates meet down to 0
                Ok(Filter::whole(a))
            } else {
                let comp = a.component(0)?;
                let inner = conrad_filter(&comp)?;
                Filter::pullback(a, 1, inner.body().clone())
            }
        }
        Shape::Chain(_) => unreachable!("chains are finite"),
    }
}

/// True iff every in-scope member of P dominates every in-scope non-member.
/// Asserted equal to "P contains every in-scope counit".
pub fn dominates_complement(a: &Algebra, p: &Filter, window: u64) -> Result<bool> {
    if !filters::is_prime(a, p)? {
        return Err(Error::NotPrime(format!("{p} is not prime")));
    }
    let scope = a.enumerate_window(window);
    let mut dominates = true;
    'outer: for m in &scope {
        if !p.contains(m)? {
            continue;
        }
        for x in &scope {
            if !p.contains(x)? && !a.leq(x, m)? {
                dominates = false;
                break 'outer;
            }
        }
    }
    let mut contains_counits = true;
    for c in counits(a, window)? {
        if !p.contains(&c)? {
            contains_counits = false;
            break;
        }
    }
    if dominates != contains_counits {
        return Err(Error::Internal(format!(
            "domination and counit-containment disagree for {p}"
        )));
    }
    Ok(dominates)
}

/// Produces a counit in Q∖P for incomparable implication filters P, Q:
/// pick the first `x ∈ Q∖P` and `y ∈ P∖Q` in scope and return `y→x`.
pub fn counit_separator(a: &Algebra, p: &Filter, q: &Filter, window: u64) -> Result<Element> {
    if p.comparable(q)? {
        return Err(Error::Comparable(format!("{p} and {q}")));
    }
    let scope = a.enumerate_window(window);
    let x = scope
        .iter()
        .find(|e| q.contains(e).unwrap_or(false) && !p.contains(e).unwrap_or(true))
        .ok_or_else(|| Error::Hypothesis("no element of Q∖P in scope".into()))?;
    let y = scope
        .iter()
        .find(|e| p.contains(e).unwrap_or(false) && !q.contains(e).unwrap_or(true))
        .ok_or_else(|| Error::Hypothesis("no element of P∖Q in scope".into()))?;
    let c = a.implies(y, x)?;
    if is_counit(a, &c, window)?.is_none() {
        return Err(Error::Internal(format!("{c} is not a counit")));
    }
    if !q.contains(&c)? || p.contains(&c)? {
        return Err(Error::Internal(format!("{c} is not in Q∖P")));
    }
    Ok(c)
}

/// Builds a prime incomparable to P, for a prime P missing some counit:
/// pick the first in-scope counit `g ∉ P` and the first `p ∈ P` with
/// `p ≱ g`, then take a maximal filter avoiding `g→p` (finite) or the first
/// catalog prime containing `p→g` that is incomparable to P (symbolic).
pub fn incomparable_prime(a: &Algebra, p: &Filter, window: u64) -> Result<Filter> {
    if !filters::is_prime(a, p)? {
        return Err(Error::NotPrime(format!("{p} is not prime")));
    }
    let g = counits(a, window)?
        .into_iter()
        .find(|c| !p.contains(c).unwrap_or(true))
        .ok_or_else(|| {
            Error::Hypothesis(format!("{p} contains every counit in scope"))
        })?;
    let scope = a.enumerate_window(window);
    let pe = scope
        .iter()
        .find(|e| p.contains(e).unwrap_or(false) && !a.leq(&g, e).unwrap_or(true))
        .ok_or_else(|| Error::Hypothesis("no p ∈ P with p ≱ g in scope".into()))?;
    let q = if a.is_finite() {
        filters::maximal_filter_avoiding(a, &a.implies(&g, pe)?)?
    } else {
        let arrow = a.implies(pe, &g)?;
        let mut found = None;
        for cand in filters::primes(a)? {
            if cand.contains(&arrow)? && !cand.comparable(p)? {
                found = Some(cand);
                break;
            }
        }
        found.ok_or_else(|| {
            Error::Internal("no catalog prime contains the separating arrow".into())
        })?
    };
    if q.comparable(p)? {
        return Err(Error::Internal(format!("{q} is comparable to {p}")));
    }
    Ok(q)
}

/// The filter `F_b = { x | x∨b = 1 }` for `b < 1`.
pub fn join_complement_filter(a: &Algebra, b: &Element) -> Result<Filter> {
    a.validate(b)?;
    let one = a.one();
    if *b == one {
        return Err(Error::Hypothesis("F_1 is the whole algebra".into()));
    }
    let f = if a.is_finite() {
        let mut set = Vec::new();
        for x in a.enumerate_window(0) {
            if a.join(&x, b)? == one {
                set.push(x);
            }
        }
        Filter::explicit(a, set)?
    } else {
        match (a.shape(), b) {
            (Shape::Lex(_), Element::Lex { top: false, .. }) => Filter::one(a),
            (Shape::Lex(_), Element::Lex { top: true, vec }) => {
                // (1,w)∨(1,v) = (1, w∧v) = 1 forces w = 0 on the support of v
                let support = vec
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, _)| i + 1);
                Filter::zero_set(a, support)?
            }
            (Shape::Product(children), Element::Tuple(parts)) => {
                let below: Vec<usize> = (0..children.len())
                    .filter(|&i| parts[i] != Algebra::from_shape(children[i].clone()).one())
                    .collect();
                match below.as_slice() {
                    [i] => {
                        let comp = a.component(*i)?;
                        let inner = join_complement_filter(&comp, &parts[*i])?;
                        Filter::pullback(a, i + 1, inner.body().clone())?
                    }
                    _ => {
                        return Err(Error::UnsupportedFilter(format!(
                            "F_b on {a} needs b below 1 in exactly one component, got {b}"
                        )))
                    }
                }
            }
            _ => {
                return Err(Error::ShapeMismatch(format!(
                    "element {b} does not belong to {a}"
                )))
            }
        }
    };
    if !filters::is_implication_filter(a, &f, 2)? {
        return Err(Error::Internal(format!("F_{b} = {f} is not a filter")));
    }
    Ok(f)
}
