//! Finite fields of order at most 9, as addition and multiplication tables.
//!
//! Elements are encoded as integers whose base-`p` digits are polynomial
//! coefficients (lowest degree first). Non-prime fields use the fixed
//! irreducibles x^2+x+1 (GF(4)), x^3+x+1 (GF(8)) and x^2+1 (GF(9)).

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SmallField {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

impl SmallField {
    pub fn new(q: usize) -> Result<Self> {
        // (characteristic, degree, modulus coefficients below the leading term)
        let (p, k, modulus): (usize, usize, &[usize]) = match q {
            2 | 3 | 5 | 7 => (q, 1, &[]),
            4 => (2, 2, &[1, 1]),
            8 => (2, 3, &[1, 1, 0]),
            9 => (3, 2, &[1, 0]),
            _ => {
                return Err(Error::InvalidRecipe(format!(
                    "unsupported field size {q} (supported: 2, 3, 4, 5, 7, 8, 9)"
                )))
            }
        };
        let digits = |x: usize| -> Vec<usize> { (0..k).map(|i| (x / p.pow(i as u32)) % p).collect() };
        let encode = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum) as u8;

                let mut prod = vec![0usize; 2 * k];
                for i in 0..k {
                    for j in 0..k {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                // x^k = -(modulus) reduction, from the top degree down
                for deg in (k..2 * k).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (i, &m) in modulus.iter().enumerate() {
                        let t = deg - k + i;
                        prod[t] = (prod[t] + (p - (c * m) % p)) % p;
                    }
                }
                mul[a * q + b] = encode(&prod[..k]) as u8;
            }
        }
        Ok(SmallField { q, add, mul })
    }

    pub fn size(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "zero has no inverse");
        (1..self.q).find(|&b| self.mul(a, b) == 1).expect("field inverse")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = SmallField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!((0..q).filter(|&b| f.add(a, b) == 0).count(), 1);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
            // multiplicative group is cyclic of order q-1
            let has_generator = (1..q).any(|g| {
                let mut x = g;
                let mut n = 1;
                while x != 1 {
                    x = f.mul(x, g);
                    n += 1;
                }
                n == q - 1
            });
            assert!(has_generator, "GF({q})");
        }
    }

    #[test]
    fn unsupported_sizes() {
        assert!(SmallField::new(6).is_err());
        assert!(SmallField::new(11).is_err());
    }
}
