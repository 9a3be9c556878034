use super::{Fe, Field};

impl Field {
    /// Whether `a` is a square (zero counts as a square).
    pub fn is_square(&self, a: Fe) -> bool {
        if a.is_zero() || self.characteristic() == 2 {
            return true;
        }
        self.pow(a, (self.order() - 1) / 2) == Fe::ONE
    }

    /// A square root of `a`, if one exists.
    ///
    /// Of the two roots `x` and `-x` the one with the lexicographically smaller digit
    /// array is returned.
    pub fn sqrt(&self, a: Fe) -> Option<Fe> {
        if a.is_zero() {
            return Some(Fe::ZERO);
        }
        let q = self.order();
        if self.characteristic() == 2 {
            // Frobenius is a bijection, so sqrt(a) = a^(2^(m-1))
            let mut x = a;
            for _ in 0..self.degree() - 1 {
                x = self.mul(x, x);
            }
            return Some(x);
        }
        if !self.is_square(a) {
            return None;
        }
        let x = if q % 4 == 3 {
            self.pow(a, (q + 1) / 4)
        } else {
            self.tonelli_shanks(a)
        };
        debug_assert_eq!(self.mul(x, x), a);
        let y = self.neg(x);
        Some(if self.cmp_digits(y, x).is_lt() { y } else { x })
    }

    fn tonelli_shanks(&self, a: Fe) -> Fe {
        let q = self.order();
        let mut s = 0u32;
        let mut odd = q - 1;
        while odd.is_multiple_of(2) {
            odd /= 2;
            s += 1;
        }
        let z = self
            .nonzero_elements()
            .find(|&z| !self.is_square(z))
            .expect("odd-order fields contain non-squares");
        let mut m = s;
        let mut c = self.pow(z, odd);
        let mut t = self.pow(a, odd);
        let mut r = self.pow(a, odd.div_ceil(2));
        while t != Fe::ONE {
            let mut i = 0;
            let mut tt = t;
            while tt != Fe::ONE {
                tt = self.mul(tt, tt);
                i += 1;
            }
            let mut b = c;
            for _ in 0..m - i - 1 {
                b = self.mul(b, b);
            }
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf7_roots() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.sqrt(Fe(4)), Some(Fe(2)));
        assert_eq!(f.sqrt(Fe(3)), None);
        // squares of GF(7) by exhaustive squaring
        let mut squares: Vec<u64> = f.elements().map(|x| f.mul(x, x).value()).collect();
        squares.sort();
        squares.dedup();
        assert_eq!(squares, vec![0, 1, 2, 4]);
        for a in f.elements() {
            assert_eq!(f.sqrt(a).is_some(), squares.contains(&a.value()));
        }
    }

    #[test]
    fn char2_root_is_frobenius_inverse() {
        let f = Field::new(2, 4, None).unwrap();
        for a in f.elements() {
            assert_eq!(f.sqrt(a), Some(f.pow(a, 8)));
        }
    }

    #[test]
    fn square_counts() {
        // q ≡ 1 mod 4 exercises Tonelli-Shanks, q ≡ 3 mod 4 the direct exponent
        for (p, m) in [
            (5, 1),
            (13, 1),
            (3, 2),
            (5, 2),
            (7, 2),
            (3, 3),
            (7, 3),
            (17, 1),
        ] {
            let f = Field::new(p, m, None).unwrap();
            let mut count = 0;
            for a in f.elements() {
                if let Some(x) = f.sqrt(a) {
                    assert_eq!(f.mul(x, x), a);
                    assert!(!f.cmp_digits(f.neg(x), x).is_lt());
                    count += 1;
                }
            }
            assert_eq!(count, f.order().div_ceil(2), "GF({p}^{m})");
        }
    }
}
