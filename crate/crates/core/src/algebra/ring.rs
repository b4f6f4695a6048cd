use std::fmt::Debug;

/// A commutative ring given as a context object; elements carry no ring data.
pub trait Ring: Clone + Debug + PartialEq {
    type Elem: Clone + Debug + PartialEq + Eq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Literal form accepted back by the element parser.
    fn render(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, n: u32) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

/// Euclidean structure used by Smith reduction.
pub trait EuclideanRing: Ring {
    type Size: Ord + Clone + Debug;

    /// False when the ring is a valid coefficient ring but division is unavailable
    /// (for instance `Z[t, 1/t]`).
    fn snf_capable(&self) -> bool {
        true
    }

    /// Euclidean size of a nonzero element; smaller sizes are preferred pivots.
    fn size(&self, a: &Self::Elem) -> Self::Size;

    /// `a = q*b + r` with `r = 0` or `size(r) < size(b)`. `b` must be nonzero.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);

    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Unit `u` such that `u * a` is the canonical associate of `a`.
    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem;

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.unit_inverse(a).is_some()
    }

    fn normalize(&self, a: &Self::Elem) -> Self::Elem {
        if self.is_zero(a) {
            return a.clone();
        }
        self.mul(&self.normalizing_unit(a), a)
    }

    fn divides(&self, b: &Self::Elem, a: &Self::Elem) -> bool {
        if self.is_zero(b) {
            return self.is_zero(a);
        }
        self.is_zero(&self.div_rem(a, b).1)
    }

    /// Exact quotient `a / b`; `None` when `b` does not divide `a`.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(b) {
            return if self.is_zero(a) { Some(self.zero()) } else { None };
        }
        let (q, r) = self.div_rem(a, b);
        self.is_zero(&r).then_some(q)
    }

    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !self.is_zero(&y) {
            let r = self.div_rem(&x, &y).1;
            x = y;
            y = r;
        }
        self.normalize(&x)
    }
}
