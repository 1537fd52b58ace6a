use std::cmp::Ordering;
use std::fmt;

use super::Monomial;

/// A local monomial ordering (`1 > x_i` for every variable).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderSpec {
    /// `ds`: lower total degree is larger; ties broken reverse lexicographically.
    NegDegRevLex,
    /// `Ds`: lower total degree is larger; ties broken lexicographically.
    NegDegLex,
    /// `ws(w)`: lower weighted degree is larger; ties as for `ds`.
    NegWeightedRevLex(Vec<u32>),
}

impl OrderSpec {
    /// Parses `ds`, `Ds` or `ws(w1,...,wn)`.
    pub fn parse(s: &str) -> Option<OrderSpec> {
        let s = s.trim();
        match s {
            "ds" => return Some(OrderSpec::NegDegRevLex),
            "Ds" => return Some(OrderSpec::NegDegLex),
            _ => {}
        }
        let inner = s.strip_prefix("ws")?.trim().strip_prefix('(')?.strip_suffix(')')?;
        let weights: Option<Vec<u32>> = inner.split(',').map(|w| w.trim().parse().ok()).collect();
        let weights = weights?;
        if weights.is_empty() || weights.contains(&0) {
            return None;
        }
        Some(OrderSpec::NegWeightedRevLex(weights))
    }

    /// The degree the ordering is graded by: weighted for `ws`, total otherwise.
    pub fn degree(&self, m: &Monomial) -> u64 {
        match self {
            OrderSpec::NegWeightedRevLex(w) => m
                .exponents()
                .iter()
                .zip(w)
                .map(|(&e, &w)| e as u64 * w as u64)
                .sum(),
            _ => m.degree() as u64,
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let by_degree = match self {
            OrderSpec::NegWeightedRevLex(_) => self.degree(b).cmp(&self.degree(a)),
            _ => b.degree().cmp(&a.degree()),
        };
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            OrderSpec::NegDegLex => {
                for (x, y) in ea.iter().zip(eb) {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
            _ => {
                for (x, y) in ea.iter().zip(eb).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Index of the order-smallest variable.
    pub fn smallest_var(&self, nvars: usize) -> usize {
        (0..nvars)
            .min_by(|&i, &j| self.compare(&Monomial::var(nvars, i), &Monomial::var(nvars, j)))
            .expect("at least one variable")
    }

    pub fn weights(&self) -> Option<&[u32]> {
        match self {
            OrderSpec::NegWeightedRevLex(w) => Some(w),
            _ => None,
        }
    }
}

impl fmt::Display for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderSpec::NegDegRevLex => write!(f, "ds"),
            OrderSpec::NegDegLex => write!(f, "Ds"),
            OrderSpec::NegWeightedRevLex(w) => {
                let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                write!(f, "ws({})", ws.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn ds_examples() {
        let ds = OrderSpec::NegDegRevLex;
        assert_eq!(ds.compare(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(ds.compare(&m(&[2, 1]), &m(&[1, 2])), Ordering::Greater);
        assert_eq!(ds.compare(&m(&[0, 0]), &m(&[1, 0])), Ordering::Greater);
        assert_eq!(ds.smallest_var(3), 2);
    }

    #[test]
    fn ds_and_lex_tie_breaks_differ() {
        // x*z vs y^2: revlex looks at z first (x*z has more z => smaller)
        let a = m(&[1, 0, 1]);
        let b = m(&[0, 2, 0]);
        assert_eq!(OrderSpec::NegDegRevLex.compare(&a, &b), Ordering::Less);
        assert_eq!(OrderSpec::NegDegLex.compare(&a, &b), Ordering::Greater);
    }

    #[test]
    fn weighted() {
        let ws = OrderSpec::parse("ws(3,1)").unwrap();
        // x has weight 3, y^2 has weight 2 => y^2 larger
        assert_eq!(ws.compare(&m(&[1, 0]), &m(&[0, 2])), Ordering::Less);
        assert_eq!(ws.degree(&m(&[2, 1])), 7);
        assert_eq!(ws.to_string(), "ws(3,1)");
    }

    #[test]
    fn parse_rejects_unknown() {
        assert!(OrderSpec::parse("qq").is_none());
        assert!(OrderSpec::parse("dp").is_none());
        assert!(OrderSpec::parse("ws(1,0)").is_none());
        assert_eq!(OrderSpec::parse("Ds"), Some(OrderSpec::NegDegLex));
    }
}
