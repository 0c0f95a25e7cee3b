use std::fmt;

use smallvec::SmallVec;

/// Coordinate vector of a lexicographic element. Inline storage covers the
/// widths used in practice; wider vectors spill to the heap.
pub type Coords = SmallVec<[u64; 4]>;

/// An exact element of a catalog algebra.
///
/// The derived `Ord` is the canonical enumeration order: chain indices
/// ascending, tuples lexicographic by component, lex elements by
/// `(top, vec)` lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Element {
    /// Index into a finite chain `{0..n}`.
    Chain(u64),
    /// Componentwise element of a product algebra.
    Tuple(Vec<Element>),
    /// Element of a lexicographic perfect algebra. `top == false` is the
    /// infinitesimal `(0, vec)`; `top == true` encodes `1 - (0, vec)`.
    Lex { top: bool, vec: Coords },
}

impl Element {
    pub fn lex(top: bool, vec: impl IntoIterator<Item = u64>) -> Element {
        Element::Lex {
            top,
            vec: vec.into_iter().collect(),
        }
    }

    pub fn tuple(parts: impl IntoIterator<Item = Element>) -> Element {
        Element::Tuple(parts.into_iter().collect())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Chain(i) => write!(f, "{i}"),
            Element::Tuple(parts) => {
                write!(f, "(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            Element::Lex { top, vec } => {
                write!(f, "{}[", if *top { "coinf" } else { "inf" })?;
                for (i, c) in vec.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(Element::Chain(3).to_string(), "3");
        assert_eq!(
            Element::tuple([Element::Chain(1), Element::Chain(0)]).to_string(),
            "(1,0)"
        );
        assert_eq!(Element::lex(false, [0, 2]).to_string(), "inf[0,2]");
        assert_eq!(Element::lex(true, [7]).to_string(), "coinf[7]");
    }

    #[test]
    fn canonical_order() {
        // infinitesimals sort below co-infinitesimals, vectors lexicographic
        assert!(Element::lex(false, [5, 5]) < Element::lex(true, [0, 0]));
        assert!(Element::lex(true, [0, 1]) < Element::lex(true, [1, 0]));
        assert!(Element::Chain(0) < Element::Chain(2));
    }
}
