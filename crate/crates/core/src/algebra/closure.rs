use alloc::vec::Vec;

use super::{Algebra, Element};
use crate::linalg::Span;

/// The subalgebra generated by a set of elements.
#[derive(Clone, Debug)]
pub struct Closure {
    /// Spanning elements, in the order they were found (generators first,
    /// then products); linearly independent.
    pub basis: Vec<Element>,
}

impl Closure {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Least subspace containing `gens` and closed under the product,
/// computed by iterated span growth.
pub fn subalgebra_closure<A: Algebra + ?Sized>(alg: &A, gens: &[Element]) -> Closure {
    let n = alg.dim();
    let mut span = Span::new(n);
    let mut basis: Vec<Element> = Vec::new();
    for g in gens {
        if span.insert(g.to_dense(n)) {
            basis.push(g.clone());
        }
    }
    // every pair (i, j) with max(i, j) >= done has not been multiplied yet
    let mut done = 0;
    while done < basis.len() && !span.is_full() {
        let k = done;
        done += 1;
        let mut i = 0;
        while i <= k && !span.is_full() {
            let prods = [alg.mul(&basis[i], &basis[k]), alg.mul(&basis[k], &basis[i])];
            for p in prods {
                if !p.is_zero() && span.insert(p.to_dense(n)) {
                    basis.push(p);
                }
            }
            i += 1;
        }
    }
    Closure { basis }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::grassmann;

    #[test]
    fn nonunital_grassmann_on_two_generators() {
        let g = grassmann(2, false);
        let gens = [Element::basis(g.index_of("e1").unwrap()), Element::basis(g.index_of("e2").unwrap())];
        assert_eq!(subalgebra_closure(&g, &gens).dim(), 3);
        assert_eq!(subalgebra_closure(&g, &gens[..1]).dim(), 1);
        assert_eq!(subalgebra_closure(&g, &[]).dim(), 0);
    }
}
