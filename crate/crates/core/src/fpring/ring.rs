use std::fmt::Debug;

/// Element of a commutative ring whose parameters (modulus, truncation, arity)
/// travel with the value.
///
/// The arithmetic methods assume both operands belong to the same ring and
/// panic otherwise; callers validate compatibility up front with
/// [`RingElement::compatible`].
pub trait RingElement: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn compatible(&self, other: &Self) -> bool;
}
