use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{Algebra, Shape};
use crate::element::Element;
use crate::error::{Error, Result};

/// Body of an implication filter.
///
/// Finite algebras always carry `Explicit` bodies; symbolic algebras use the
/// closed descriptor catalog. Descriptors are normalized on construction:
/// `ZeroSet` over the full index set collapses to `One`, and a pullback of
/// `Whole` collapses to `Whole`, so structural equality is semantic equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum FilterBody {
    /// Explicit element set; finite algebras only.
    Explicit(BTreeSet<Element>),
    /// The trivial filter `{1}`.
    One,
    /// All co-infinitesimals of a lexicographic algebra.
    Rad,
    /// Co-infinitesimals whose coordinates at the given (1-based) indices
    /// are zero.
    ZeroSet(BTreeSet<usize>),
    /// The whole carrier (improper).
    Whole,
    /// Preimage of a component filter under a product projection
    /// (1-based component index).
    Pullback(usize, Box<FilterBody>),
}

/// An implication filter together with its owning algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Filter {
    algebra: Algebra,
    body: FilterBody,
}

impl Filter {
    /// Builds a filter from a descriptor, normalizing it and materializing
    /// descriptors over finite algebras into explicit sets.
    pub fn new(algebra: Algebra, body: FilterBody) -> Result<Filter> {
        let body = normalize(algebra.shape(), body)?;
        Ok(Filter { algebra, body })
    }

    pub fn one(algebra: &Algebra) -> Filter {
        Filter::new(algebra.clone(), FilterBody::One).expect("one is always valid")
    }

    pub fn whole(algebra: &Algebra) -> Filter {
        Filter::new(algebra.clone(), FilterBody::Whole).expect("whole is always valid")
    }

    pub fn rad(algebra: &Algebra) -> Result<Filter> {
        Filter::new(algebra.clone(), FilterBody::Rad)
    }

    pub fn zero_set(algebra: &Algebra, indices: impl IntoIterator<Item = usize>) -> Result<Filter> {
        Filter::new(
            algebra.clone(),
            FilterBody::ZeroSet(indices.into_iter().collect()),
        )
    }

    pub fn pullback(algebra: &Algebra, index: usize, inner: FilterBody) -> Result<Filter> {
        Filter::new(algebra.clone(), FilterBody::Pullback(index, Box::new(inner)))
    }

    pub fn explicit(algebra: &Algebra, set: impl IntoIterator<Item = Element>) -> Result<Filter> {
        Filter::new(algebra.clone(), FilterBody::Explicit(set.into_iter().collect()))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn body(&self) -> &FilterBody {
        &self.body
    }

    /// Exact membership; no window is involved, symbolic predicates are
    /// closed-form.
    pub fn contains(&self, x: &Element) -> Result<bool> {
        self.algebra.validate(x)?;
        Ok(body_contains(self.algebra.shape(), &self.body, x))
    }

    pub fn is_whole(&self) -> bool {
        match &self.body {
            FilterBody::Whole => true,
            FilterBody::Explicit(set) => {
                Some(set.len() as u64) == self.algebra.carrier_size()
            }
            _ => false,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.body {
            FilterBody::One => true,
            FilterBody::Explicit(set) => set.len() == 1 && set.contains(&self.algebra.one()),
            _ => false,
        }
    }

    pub fn is_proper(&self) -> bool {
        !self.is_whole()
    }

    /// Set inclusion, exact on the closed catalog.
    pub fn leq(&self, other: &Filter) -> Result<bool> {
        if self.algebra != other.algebra {
            return Err(Error::ShapeMismatch(
                "filters belong to different algebras".into(),
            ));
        }
        body_leq(self.algebra.shape(), &self.body, &other.body)
    }

    pub fn comparable(&self, other: &Filter) -> Result<bool> {
        Ok(self.leq(other)? || other.leq(self)?)
    }

    /// Generating idempotent of an explicit filter (its least element).
    pub fn idempotent(&self) -> Option<&Element> {
        match &self.body {
            FilterBody::Explicit(set) => set.iter().next(),
            _ => None,
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "one");
        }
        if self.is_whole() {
            return write!(f, "whole");
        }
        fmt_body(&self.body, f)
    }
}

fn fmt_body(body: &FilterBody, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match body {
        FilterBody::One => write!(f, "one"),
        FilterBody::Whole => write!(f, "whole"),
        FilterBody::Rad => write!(f, "rad"),
        FilterBody::ZeroSet(s) => {
            write!(f, "m{{")?;
            for (i, idx) in s.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{idx}")?;
            }
            write!(f, "}}")
        }
        FilterBody::Pullback(i, inner) => {
            write!(f, "pull{{{i};")?;
            fmt_body(inner, f)?;
            write!(f, "}}")
        }
        FilterBody::Explicit(set) => match set.iter().next() {
            Some(e) => write!(f, "gen{{{e}}}"),
            None => write!(f, "gen{{}}"),
        },
    }
}

fn lex_width(shape: &Shape) -> Option<usize> {
    match shape {
        Shape::Lex(k) => Some(*k),
        _ => None,
    }
}

fn normalize(shape: &Shape, body: FilterBody) -> Result<FilterBody> {
    match body {
        FilterBody::Explicit(set) => {
            if !shape.is_finite() {
                return Err(Error::UnsupportedFilter(
                    "explicit filters require a finite algebra".into(),
                ));
            }
            let a = Algebra::from_shape(shape.clone());
            for e in &set {
                a.validate(e)?;
            }
            Ok(FilterBody::Explicit(set))
        }
        FilterBody::One => {
            if shape.is_finite() {
                let a = Algebra::from_shape(shape.clone());
                Ok(FilterBody::Explicit([a.one()].into_iter().collect()))
            } else {
                Ok(FilterBody::One)
            }
        }
        FilterBody::Whole => {
            if shape.is_finite() {
                let a = Algebra::from_shape(shape.clone());
                Ok(FilterBody::Explicit(a.enumerate_window(0).into_iter().collect()))
            } else {
                Ok(FilterBody::Whole)
            }
        }
        FilterBody::Rad => match lex_width(shape) {
            Some(_) => Ok(FilterBody::Rad),
            None => Err(Error::Semantic(format!(
                "'rad' only applies to chang/lex algebras, not {shape}"
            ))),
        },
        FilterBody::ZeroSet(s) => {
            let k = lex_width(shape).ok_or_else(|| {
                Error::Semantic(format!(
                    "'m{{..}}' only applies to chang/lex algebras, not {shape}"
                ))
            })?;
            if s.is_empty() {
                return Err(Error::Semantic("empty zero set".into()));
            }
            if let Some(&bad) = s.iter().find(|&&i| i < 1 || i > k) {
                return Err(Error::Semantic(format!(
                    "zero-set index {bad} out of range 1..={k}"
                )));
            }
            if s.len() == k {
                // all coordinates pinned to zero: only the top element remains
                Ok(FilterBody::One)
            } else {
                Ok(FilterBody::ZeroSet(s))
            }
        }
        FilterBody::Pullback(i, inner) => {
            let children = match shape {
                Shape::Product(children) => children,
                _ => {
                    return Err(Error::Semantic(format!(
                        "'pull' only applies to products, not {shape}"
                    )))
                }
            };
            if i < 1 || i > children.len() {
                return Err(Error::Semantic(format!(
                    "pull component {i} out of range 1..={}",
                    children.len()
                )));
            }
            let inner = normalize(&children[i - 1], *inner)?;
            if inner == FilterBody::Whole {
                return normalize(shape, FilterBody::Whole);
            }
            if shape.is_finite() {
                // materialize over the finite carrier
                let a = Algebra::from_shape(shape.clone());
                let set = a
                    .enumerate_window(0)
                    .into_iter()
                    .filter(|x| body_contains(shape, &FilterBody::Pullback(i, Box::new(inner.clone())), x))
                    .collect();
                Ok(FilterBody::Explicit(set))
            } else {
                Ok(FilterBody::Pullback(i, Box::new(inner)))
            }
        }
    }
}

fn body_contains(shape: &Shape, body: &FilterBody, x: &Element) -> bool {
    match body {
        FilterBody::Explicit(set) => set.contains(x),
        FilterBody::One => x == &shape.clone_one(),
        FilterBody::Whole => true,
        FilterBody::Rad => matches!(x, Element::Lex { top: true, .. }),
        FilterBody::ZeroSet(s) => match x {
            Element::Lex { top: true, vec } => s.iter().all(|&i| vec[i - 1] == 0),
            _ => false,
        },
        FilterBody::Pullback(i, inner) => match (shape, x) {
            (Shape::Product(children), Element::Tuple(parts)) => {
                body_contains(&children[i - 1], inner, &parts[i - 1])
            }
            _ => false,
        },
    }
}

impl Shape {
    fn clone_one(&self) -> Element {
        Algebra::from_shape(self.clone()).one()
    }
}

fn body_leq(shape: &Shape, f: &FilterBody, g: &FilterBody) -> Result<bool> {
    use FilterBody::*;
    Ok(match (f, g) {
        (Explicit(a), Explicit(b)) => a.is_subset(b),
        (One, _) => true,
        (_, Whole) => true,
        (Whole, _) => matches!(g, Whole),
        (_, One) => f == &One,
        (Rad, Rad) => true,
        (Rad, ZeroSet(_)) => false,
        (ZeroSet(_), Rad) => true,
        (ZeroSet(s), ZeroSet(t)) => t.is_subset(s),
        (Pullback(i, fi), Pullback(j, gj)) => {
            if i != j {
                false
            } else {
                let children = match shape {
                    Shape::Product(children) => children,
                    _ => return Err(Error::Internal("pullback on non-product".into())),
                };
                body_leq(&children[i - 1], fi, gj)?
            }
        }
        _ => {
            return Err(Error::Internal(format!(
                "incomparable filter bodies {f:?} and {g:?} on {shape}"
            )))
        }
    })
}

/// All ⊗-idempotents of a finite algebra, in canonical order.
pub fn idempotents(a: &Algebra) -> Result<Vec<Element>> {
    if !a.is_finite() {
        return Err(Error::UnsupportedSymbolic(
            "idempotent enumeration requires a finite algebra".into(),
        ));
    }
    let mut out = Vec::new();
    for x in a.enumerate_window(0) {
        if a.otimes(&x, &x)? == x {
            out.push(x);
        }
    }
    Ok(out)
}

fn upset(a: &Algebra, e: &Element) -> Result<Filter> {
    let mut set = BTreeSet::new();
    for x in a.enumerate_window(0) {
        if a.leq(e, &x)? {
            set.insert(x);
        }
    }
    Filter::explicit(a, set)
}

/// Smallest implication filter containing `gens`: the up-set of the
/// stabilized ⊗-power of the meet of the generators. Finite algebras only.
pub fn generate_filter(a: &Algebra, gens: &[Element]) -> Result<Filter> {
    if !a.is_finite() {
        return Err(Error::UnsupportedSymbolic(
            "filter generation requires a finite algebra".into(),
        ));
    }
    let mut d = a.one();
    for g in gens {
        a.validate(g)?;
        d = a.meet(&d, g)?;
    }
    loop {
        let next = a.otimes(&d, &d)?;
        if next == d {
            break;
        }
        d = next;
    }
    upset(a, &d)
}

/// Independent fixpoint-closure route for `generate_filter`: saturate under
/// upward closure, meets, and ⊗-powers until stable.
pub fn generate_filter_closure(a: &Algebra, gens: &[Element]) -> Result<Filter> {
    if !a.is_finite() {
        return Err(Error::UnsupportedSymbolic(
            "filter generation requires a finite algebra".into(),
        ));
    }
    let carrier = a.enumerate_window(0);
    let mut set: BTreeSet<Element> = gens.iter().cloned().collect();
    set.insert(a.one());
    loop {
        let mut grew = false;
        let members: Vec<Element> = set.iter().cloned().collect();
        for x in &members {
            let sq = a.otimes(x, x)?;
            grew |= set.insert(sq);
            for y in &members {
                let m = a.meet(x, y)?;
                grew |= set.insert(m);
            }
        }
        for y in &carrier {
            if !set.contains(y) && members.iter().any(|x| a.leq(x, y).unwrap_or(false)) {
                set.insert(y.clone());
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    Filter::explicit(a, set)
}

/// Checks the implication-filter conditions (`1 ∈ F`, upward closure,
/// ∧-closure, ⊗-power closure) over the window, and cross-checks the
/// equivalent modus-ponens form. The two verdicts must agree.
pub fn is_implication_filter(a: &Algebra, f: &Filter, window: u64) -> Result<bool> {
    let scope = a.enumerate_window(window);
    let members: Vec<&Element> = scope
        .iter()
        .filter(|x| f.contains(x).unwrap_or(false))
        .collect();

    let mut closure = f.contains(&a.one())?;
    'outer: for x in &members {
        if !f.contains(&a.otimes(x, x)?)? {
            closure = false;
            break;
        }
        for y in &scope {
            if a.leq(x, y)? && !f.contains(y)? {
                closure = false;
                break 'outer;
            }
        }
        for y in &members {
            if !f.contains(&a.meet(x, y)?)? {
                closure = false;
                break 'outer;
            }
        }
    }

    let mut modus_ponens = f.contains(&a.one())?;
    'mp: for x in &members {
        if !f.contains(&a.otimes(x, x)?)? {
            modus_ponens = false;
            break;
        }
        for y in &scope {
            if f.contains(&a.implies(x, y)?)? && !f.contains(y)? {
                modus_ponens = false;
                break 'mp;
            }
        }
    }

    if closure != modus_ponens {
        return Err(Error::Internal(format!(
            "closure and modus-ponens criteria disagree on {f} (window {window})"
        )));
    }
    Ok(closure)
}

/// All implication filters of a finite algebra: up-sets of ⊗-idempotents,
/// in canonical idempotent order. Includes `one` and `whole`.
pub fn all_filters(a: &Algebra) -> Result<Vec<Filter>> {
    let mut out = Vec::new();
    for e in idempotents(a)? {
        out.push(upset(a, &e)?);
    }
    Ok(out)
}

/// Primality. Finite filters are scanned exhaustively with the join
/// criterion; symbolic descriptors are decided by the catalog rule.
pub fn is_prime(a: &Algebra, f: &Filter) -> Result<bool> {
    if f.is_whole() {
        return Ok(false);
    }
    match f.body() {
        FilterBody::Explicit(_) => {
            let carrier = a.enumerate_window(0);
            for x in &carrier {
                for y in &carrier {
                    if f.contains(&a.join(x, y)?)? && !f.contains(x)? && !f.contains(y)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        FilterBody::Rad => Ok(true),
        FilterBody::ZeroSet(s) => Ok(s.len() == 1),
        FilterBody::One => match a.shape() {
            Shape::Lex(1) => Ok(true),
            Shape::Lex(_) => Ok(false),
            Shape::Product(children) => {
                if children.len() == 1 {
                    let comp = a.component(0)?;
                    is_prime(&comp, &Filter::one(&comp))
                } else {
                    Ok(false)
                }
            }
            Shape::Chain(_) => unreachable!("finite filters are explicit"),
        },
        FilterBody::Pullback(i, inner) => {
            let comp = a.component(i - 1)?;
            let inner = Filter::new(comp.clone(), (**inner).clone())?;
            is_prime(&comp, &inner)
        }
        FilterBody::Whole => Ok(false),
    }
}

/// The arrow criterion for primality: `x→y ∈ F` or `y→x ∈ F` for all pairs
/// in the window. Used to validate the catalog rule.
pub fn is_prime_arrow_criterion(a: &Algebra, f: &Filter, window: u64) -> Result<bool> {
    if f.is_whole() {
        return Ok(false);
    }
    let scope = a.enumerate_window(window);
    for x in &scope {
        for y in &scope {
            if !f.contains(&a.implies(x, y)?)? && !f.contains(&a.implies(y, x)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All prime implication filters, in deterministic order.
pub fn primes(a: &Algebra) -> Result<Vec<Filter>> {
    if a.is_finite() {
        let mut out = Vec::new();
        for f in all_filters(a)? {
            if is_prime(a, &f)? {
                out.push(f);
            }
        }
        return Ok(out);
    }
    match a.shape() {
        Shape::Lex(1) => Ok(vec![Filter::one(a), Filter::rad(a)?]),
        Shape::Lex(k) => {
            let mut out = Vec::new();
            for i in 1..=*k {
                out.push(Filter::zero_set(a, [i])?);
            }
            out.push(Filter::rad(a)?);
            Ok(out)
        }
        Shape::Product(children) => {
            let mut out = Vec::new();
            for i in 0..children.len() {
                let comp = a.component(i)?;
                for p in primes(&comp)? {
                    out.push(Filter::pullback(a, i + 1, p.body().clone())?);
                }
            }
            Ok(out)
        }
        Shape::Chain(_) => unreachable!("chains are finite"),
    }
}

/// All minimal prime implication filters.
pub fn minimal_primes(a: &Algebra) -> Result<Vec<Filter>> {
    let ps = primes(a)?;
    let mut out = Vec::new();
    for (i, m) in ps.iter().enumerate() {
        let mut minimal = true;
        for (j, q) in ps.iter().enumerate() {
            if i != j && q.leq(m)? && !m.leq(q)? {
                minimal = false;
                break;
            }
        }
        if minimal {
            out.push(m.clone());
        }
    }
    Ok(out)
}

/// All minimal primes `m ⊆ P`.
pub fn minimal_primes_below(a: &Algebra, p: &Filter) -> Result<Vec<Filter>> {
    if !is_prime(a, p)? {
        return Err(Error::NotPrime(format!("{p} is not prime")));
    }
    let mut out = Vec::new();
    for m in minimal_primes(a)? {
        if m.leq(p)? {
            out.push(m);
        }
    }
    Ok(out)
}

/// An implication filter maximal among those avoiding `x`, with the earliest
/// generating idempotent as tie-break. Always prime. Finite algebras only.
pub fn maximal_filter_avoiding(a: &Algebra, x: &Element) -> Result<Filter> {
    a.validate(x)?;
    if x == &a.one() {
        return Err(Error::Hypothesis("every filter contains 1".into()));
    }
    let candidates: Vec<Filter> = all_filters(a)?
        .into_iter()
        .filter(|f| !f.contains(x).unwrap_or(true))
        .collect();
    let mut best: Option<&Filter> = None;
    for f in &candidates {
        let dominated = candidates.iter().any(|g| f.leq(g).unwrap() && !g.leq(f).unwrap());
        if !dominated {
            best = Some(f);
            break; // candidates are in canonical idempotent order
        }
    }
    let best = best
        .ok_or_else(|| Error::Internal("no maximal filter avoiding element".into()))?
        .clone();
    if !is_prime(a, &best)? {
        return Err(Error::Internal(format!(
            "maximal filter avoiding {x} is not prime"
        )));
    }
    Ok(best)
}

/// Intersection of a nonempty family of filters over the same algebra.
pub fn intersect_all(filters: &[Filter]) -> Result<Filter> {
    let first = filters
        .first()
        .ok_or_else(|| Error::Internal("empty intersection".into()))?;
    let a = first.algebra().clone();
    if a.is_finite() {
        let mut set: BTreeSet<Element> = match first.body() {
            FilterBody::Explicit(s) => s.clone(),
            _ => unreachable!("finite filters are explicit"),
        };
        for f in &filters[1..] {
            match f.body() {
                FilterBody::Explicit(s) => set.retain(|e| s.contains(e)),
                _ => unreachable!(),
            }
        }
        return Filter::explicit(&a, set);
    }
    match a.shape() {
        Shape::Lex(k) => {
            // every proper descriptor is a zero set (One = all coordinates,
            // Rad = no coordinates); intersection pins the union
            let mut indices: BTreeSet<usize> = BTreeSet::new();
            let mut all_whole = true;
            for f in filters {
                match f.body() {
                    FilterBody::Whole => continue,
                    FilterBody::One => {
                        indices.extend(1..=*k);
                        all_whole = false;
                    }
                    FilterBody::Rad => {
                        all_whole = false;
                    }
                    FilterBody::ZeroSet(s) => {
                        indices.extend(s.iter().copied());
                        all_whole = false;
                    }
                    other => {
                        return Err(Error::UnsupportedFilter(format!(
                            "cannot intersect {other:?} on {a}"
                        )))
                    }
                }
            }
            if all_whole {
                Ok(Filter::whole(&a))
            } else if indices.is_empty() {
                Filter::rad(&a)
            } else {
                Filter::zero_set(&a, indices)
            }
        }
        Shape::Product(_) => {
            if filters.iter().any(|f| f.is_one()) {
                return Ok(Filter::one(&a));
            }
            let non_whole: Vec<&Filter> = filters.iter().filter(|f| !f.is_whole()).collect();
            if non_whole.is_empty() {
                return Ok(Filter::whole(&a));
            }
            let mut component = None;
            let mut inners = Vec::new();
            for f in &non_whole {
                match f.body() {
                    FilterBody::Pullback(i, inner) => {
                        if component.get_or_insert(*i) != i {
                            return Err(Error::UnsupportedFilter(
                                "intersection of pullbacks on different components".into(),
                            ));
                        }
                        inners.push((**inner).clone());
                    }
                    other => {
                        return Err(Error::UnsupportedFilter(format!(
                            "cannot intersect {other:?} on {a}"
                        )))
                    }
                }
            }
            let i = component.unwrap();
            let comp = a.component(i - 1)?;
            let inner_filters: Result<Vec<Filter>> = inners
                .into_iter()
                .map(|b| Filter::new(comp.clone(), b))
                .collect();
            let inner = intersect_all(&inner_filters?)?;
            Filter::pullback(&a, i, inner.body().clone())
        }
        Shape::Chain(_) => unreachable!("chains are finite"),
    }
}

/// Every implication filter available on `a`: all filters when finite, the
/// descriptor catalog when symbolic. Deterministic order.
pub fn catalog_filters(a: &Algebra) -> Result<Vec<Filter>> {
    if a.is_finite() {
        return all_filters(a);
    }
    match a.shape() {
        Shape::Lex(k) => {
            let mut out = vec![Filter::one(a)];
            for mask in 1u32..(1 << *k) {
                if mask == (1 << *k) - 1 {
                    continue; // full set normalizes to one
                }
                let indices: Vec<usize> =
                    (0..*k).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
                out.push(Filter::zero_set(a, indices)?);
            }
            out.push(Filter::rad(a)?);
            out.push(Filter::whole(a));
            Ok(out)
        }
        Shape::Product(children) => {
            let mut out = vec![Filter::one(a)];
            for i in 0..children.len() {
                let comp = a.component(i)?;
                for f in catalog_filters(&comp)? {
                    if f.is_whole() {
                        continue;
                    }
                    out.push(Filter::pullback(a, i + 1, f.body().clone())?);
                }
            }
            out.push(Filter::whole(a));
            Ok(out)
        }
        Shape::Chain(_) => unreachable!("chains are finite"),
    }
}
