//! GF(p^m) with elements encoded as base-p coefficient integers.

use crate::arith::{is_prime, prime_factors};

#[derive(Clone, Debug)]
pub struct Gf {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, low degree first, length m + 1.
    h: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
}

const TABLE_LIMIT: u32 = 1 << 16;

impl Gf {
    /// Builds GF(p^m) from a monic modulus h of degree m; h must be irreducible.
    pub fn new(p: u32, h: Vec<u32>) -> Gf {
        let m = (h.len() - 1) as u32;
        let q = p.pow(m);
        let mut gf = Gf { p, m, q, h, exp: Vec::new(), log: Vec::new(), add_table: None };
        if q <= 256 {
            let mut t = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = gf.add_slow(a, b);
                }
            }
            gf.add_table = Some(t);
        }
        if q <= TABLE_LIMIT {
            let g = gf.find_generator();
            let mut exp = vec![0; (q - 1) as usize];
            let mut log = vec![0; q as usize];
            let mut x = 1;
            for (i, e) in exp.iter_mut().enumerate() {
                *e = x;
                log[x as usize] = i as u32;
                x = gf.mul_slow(x, g);
            }
            gf.exp = exp;
            gf.log = log;
        }
        gf
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.h
    }

    pub fn coeffs(&self, a: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.m as usize);
        let mut a = a;
        for _ in 0..self.m {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    pub fn from_coeffs(&self, c: &[u32]) -> u32 {
        c.iter().rev().fold(0, |acc, &x| acc * self.p + x % self.p)
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let c: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.p).collect();
        self.from_coeffs(&c)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let m = self.m as usize;
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let mut prod = vec![0u64; 2 * m];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for k in (m..2 * m).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &hi) in self.h[..m].iter().enumerate() {
                let t = prod[k - m + i] + (p - c) * hi as u64 % p;
                prod[k - m + i] = t % p;
            }
        }
        let c: Vec<u32> = prod[..m].iter().map(|&x| x as u32).collect();
        self.from_coeffs(&c)
    }

    fn find_generator(&self) -> u32 {
        let ord = (self.q - 1) as u128;
        let primes = prime_factors(ord);
        (1..self.q)
            .find(|&g| {
                primes
                    .iter()
                    .all(|&r| self.pow_slow(g, (ord / r) as u64) != 1)
            })
            .expect("multiplicative group is cyclic")
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, b);
            }
            b = self.mul_slow(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.add_table {
            Some(t) => t[(a * self.q + b) as usize],
            None => self.add_slow(a, b),
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let c: Vec<u32> = self.coeffs(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.from_coeffs(&c)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.exp.is_empty() {
            return self.mul_slow(a, b);
        }
        let n = self.q - 1;
        let e = (self.log[a as usize] + self.log[b as usize]) % n;
        self.exp[e as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if self.exp.is_empty() {
            return Some(self.pow_slow(a, (self.q - 2) as u64));
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if self.exp.is_empty() {
            return self.pow_slow(a, e);
        }
        let n = (self.q - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// Image of an integer.
    pub fn from_int(&self, k: i64) -> u32 {
        k.rem_euclid(self.p as i64) as u32
    }

    /// Formats as a polynomial in `w`, constant term first.
    pub fn format(&self, a: u32) -> String {
        if self.m == 1 || a < self.p {
            return a.to_string();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs(a).into_iter().enumerate() {
            if c == 0 {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{i}"),
            };
            terms.push(match (i, c) {
                (0, _) => c.to_string(),
                (_, 1) => var,
                _ => format!("{c}*{var}"),
            });
        }
        terms.join("+")
    }
}

/// Arithmetic on integer polynomials mod a prime, used to pick defining polynomials.
fn polymulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let d = f.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (d..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for i in 0..d {
            prod[k - d + i] = (prod[k - d + i] + (p - c) * f[i]) % p;
        }
    }
    prod.truncate(d);
    prod.resize(d, 0);
    prod
}

fn x_pow_mod(e: u128, f: &[u64], p: u64) -> Vec<u64> {
    let d = f.len() - 1;
    let mut acc = vec![0u64; d];
    acc[0] = 1;
    let mut base = polymulmod(&[0, 1], &[1], f, p);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = polymulmod(&acc, &base, f, p);
        }
        base = polymulmod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

fn is_one(v: &[u64]) -> bool {
    v[0] == 1 && v[1..].iter().all(|&c| c == 0)
}

/// True when x generates (F_p[x]/f)^* with |·| = p^m − 1, which forces f irreducible.
pub fn is_primitive_mod_p(f: &[u64], p: u64) -> bool {
    let m = (f.len() - 1) as u32;
    if f[0].is_multiple_of(p) {
        return false;
    }
    let ord = (p as u128).pow(m) - 1;
    if !is_one(&x_pow_mod(ord, f, p)) {
        return false;
    }
    prime_factors(ord).into_iter().all(|r| !is_one(&x_pow_mod(ord / r, f, p)))
}

/// Rabin's irreducibility test over F_p.
pub fn is_irreducible_mod_p(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    if m == 0 || f[m] % p != 1 {
        return false;
    }
    if m == 1 {
        return true;
    }
    let xq = |k: usize| -> Vec<u64> { x_pow_mod((p as u128).pow(k as u32), f, p) };
    let mut x = vec![0u64; m];
    x[1] = 1;
    if xq(m) != x {
        return false;
    }
    for r in prime_factors(m as u128) {
        let mut g = xq(m / r as usize);
        g[1] = (g[1] + p - 1) % p;
        if gcd_degree_mod_p(&g, f, p) > 0 {
            return false;
        }
    }
    true
}

fn trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

fn gcd_degree_mod_p(a: &[u64], b: &[u64], p: u64) -> usize {
    let inv = |x: u64| -> u64 {
        let mut acc = 1u64;
        let mut base = x % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        let lc = inv(*b.last().unwrap());
        while a.len() >= b.len() && !(a.len() == 1 && a[0] == 0) {
            let c = a.last().unwrap() * lc % p;
            let shift = a.len() - b.len();
            for (i, &bi) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] + (p - c) * bi % p) % p;
            }
            a.pop();
            if a.is_empty() {
                a.push(0);
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() - 1
}

/// Lexicographically smallest primitive polynomial of degree m over F_p,
/// comparing coefficient vectors as base-p integers with the top coefficient most significant.
pub fn smallest_primitive_mod_p(p: u64, m: u32) -> Vec<u64> {
    assert!(is_prime(p) && m >= 1);
    let count = p.pow(m);
    for v in 0..count {
        let mut f: Vec<u64> = (0..m).map(|i| v / p.pow(i) % p).collect();
        f.push(1);
        if is_primitive_mod_p(&f, p) {
            return f;
        }
    }
    unreachable!("primitive polynomials exist for every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_defaults() {
        assert_eq!(smallest_primitive_mod_p(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(smallest_primitive_mod_p(2, 2), vec![1, 1, 1]);
        assert_eq!(smallest_primitive_mod_p(5, 2), vec![2, 1, 1]);
    }

    #[test]
    fn rabin_matches_primitivity_on_f2() {
        assert!(is_irreducible_mod_p(&[1, 1, 0, 1], 2));
        assert!(is_irreducible_mod_p(&[1, 0, 1, 1], 2));
        assert!(!is_irreducible_mod_p(&[1, 0, 0, 1], 2));
        // x^4+x^3+x^2+x+1 is irreducible but not primitive
        assert!(is_irreducible_mod_p(&[1, 1, 1, 1, 1], 2));
        assert!(!is_primitive_mod_p(&[1, 1, 1, 1, 1], 2));
    }

    #[test]
    fn field_axioms_gf9() {
        let h = smallest_primitive_mod_p(3, 2).into_iter().map(|c| c as u32).collect();
        let f = Gf::new(3, h);
        for a in 0..9 {
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for b in 0..9 {
                assert_eq!(f.mul(a, b), f.mul_slow(a, b));
                assert_eq!(f.sub(f.add(a, b), b), a);
            }
        }
    }
}
