use std::fmt;

/// A monomial `Π x_n^{e_n}` in the bosonic variables, stored as
/// `(n, e_n)` pairs with increasing `n` and positive `e_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct XMonomial(Vec<(u32, u32)>);

impl XMonomial {
    pub fn one() -> Self {
        XMonomial(Vec::new())
    }

    pub fn var(n: u32) -> Self {
        Self::from_pairs([(n, 1)])
    }

    /// Builds a monomial from `(index, exponent)` pairs; zero exponents are
    /// dropped and repeated indices add up.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut m = XMonomial::one();
        for (n, e) in pairs {
            assert!(n >= 1, "bosonic variables start at x1");
            m.raise(n, e);
        }
        m
    }

    fn raise(&mut self, n: u32, e: u32) {
        if e == 0 {
            return;
        }
        match self.0.binary_search_by_key(&n, |&(k, _)| k) {
            Ok(i) => self.0[i].1 += e,
            Err(i) => self.0.insert(i, (n, e)),
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, n: u32) -> u32 {
        self.0
            .binary_search_by_key(&n, |&(k, _)| k)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().copied()
    }

    /// `Σ n e_n`.
    pub fn weight(&self) -> i64 {
        self.0.iter().map(|&(n, e)| n as i64 * e as i64).sum()
    }

    pub fn mul(&self, other: &XMonomial) -> XMonomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        XMonomial(out)
    }

    pub fn times_var(&self, n: u32) -> XMonomial {
        let mut out = self.clone();
        out.raise(n, 1);
        out
    }

    /// `∂/∂x_n`, as the multiplicity and the lowered monomial.
    pub fn derivative(&self, n: u32) -> Option<(u32, XMonomial)> {
        let i = self.0.binary_search_by_key(&n, |&(k, _)| k).ok()?;
        let e = self.0[i].1;
        let mut out = self.clone();
        if e == 1 {
            out.0.remove(i);
        } else {
            out.0[i].1 -= 1;
        }
        Some((e, out))
    }
}

impl fmt::Display for XMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|(n, e)| format!("x{n}^{e}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for XMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
