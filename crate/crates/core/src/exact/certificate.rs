use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::color::{ColorSet, Coloring, SignedSet, MAX_P};
use crate::error::{parse_err, Error, Result};
use crate::graph::{parse_usize, BalancedWitness, Sign, SignedGraph, MAX_PARSE_VERTICES};

/// Fractional cover of the vertices by balanced sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Sorted vertex sets with their weights.
    pub entries: Vec<(Vec<usize>, BigRational)>,
}

impl Certificate {
    pub fn value(&self) -> BigRational {
        self.entries.iter().fold(BigRational::zero(), |acc, (_, w)| acc + w)
    }

    /// Checks every set is balanced in `g`, weights are nonnegative and each
    /// vertex is covered with total weight at least 1. Returns the value.
    pub fn check(&self, g: &SignedGraph) -> Result<BigRational> {
        let mut cover = vec![BigRational::zero(); g.n()];
        for (set, w) in &self.entries {
            if w.is_negative() {
                return Err(Error::BadCertificate(format!("negative weight {w}")));
            }
            if let Some(&v) = set.iter().find(|&&v| v >= g.n()) {
                return Err(Error::BadCertificate(format!("vertex {v} not in graph")));
            }
            if set.windows(2).any(|p| p[0] >= p[1]) {
                return Err(Error::BadCertificate("set not strictly increasing".into()));
            }
            if !g.is_balanced_subset(set) {
                return Err(Error::BadCertificate(format!("set {set:?} is not balanced")));
            }
            for &v in set {
                cover[v] += w;
            }
        }
        if let Some(v) = cover.iter().position(|c| *c < BigRational::one()) {
            return Err(Error::BadCertificate(format!(
                "vertex {v} covered with weight {}",
                cover[v]
            )));
        }
        Ok(self.value())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (set, w) in &self.entries {
            let vs: Vec<String> = set.iter().map(usize::to_string).collect();
            out.push_str(&format!("set {} : {}/{}\n", vs.join(","), w.numer(), w.denom()));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Certificate> {
        let mut entries = Vec::new();
        for (i, raw) in text.split('\n').enumerate() {
            let line_no = i + 1;
            let line = raw.strip_suffix('\r').unwrap_or(raw).trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let rest = line
                .strip_prefix("set ")
                .ok_or_else(|| parse_err(line_no, "expected `set v1,v2,... : num/den`"))?;
            let (vs, w) = rest.split_once(':').ok_or_else(|| parse_err(line_no, "missing `:`"))?;
            let vs = vs.trim();
            let mut set = Vec::new();
            if !vs.is_empty() {
                for t in vs.split(',') {
                    let v = parse_usize(t.trim(), line_no)?;
                    if v >= MAX_PARSE_VERTICES {
                        return Err(parse_err(line_no, format!("vertex {v} too large")));
                    }
                    set.push(v);
                }
            }
            if set.windows(2).any(|p| p[0] >= p[1]) {
                return Err(parse_err(line_no, "vertices must be strictly increasing"));
            }
            let (num, den) = w
                .trim()
                .split_once('/')
                .ok_or_else(|| parse_err(line_no, "weight must be `num/den`"))?;
            let num: BigInt = num
                .trim()
                .parse()
                .map_err(|_| parse_err(line_no, format!("bad numerator `{num}`")))?;
            let den: BigInt = den
                .trim()
                .parse()
                .map_err(|_| parse_err(line_no, format!("bad denominator `{den}`")))?;
            if num.bits() > 256 || den.bits() > 256 {
                return Err(parse_err(line_no, "weight too large"));
            }
            if !den.is_positive() {
                return Err(parse_err(line_no, "denominator must be positive"));
            }
            entries.push((set, BigRational::new(num, den)));
        }
        Ok(Certificate { entries })
    }
}

/// Turns a fractional cover into a `(p, q)`-coloring with `p/q` equal to the
/// cover value: `q` is the common denominator, set `B` receives `q·x_B`
/// fresh colors signed by a switching that balances `B`, and every vertex
/// keeps its first `q` colors.
pub fn realize_pq(g: &SignedGraph, cert: &Certificate) -> Result<(usize, usize, Coloring)> {
    let value = cert.check(g)?;
    let q = cert
        .entries
        .iter()
        .fold(BigInt::one(), |acc, (_, w)| acc.lcm(w.denom()));
    let p_big = (&value * BigRational::from_integer(q.clone())).to_integer();
    let (Some(p), Some(q)) = (p_big.to_usize(), q.to_usize()) else {
        return Err(Error::BadCertificate("palette too large".into()));
    };
    if p > MAX_P {
        return Err(Error::BadCertificate(format!(
            "needs {p} colors, at most {MAX_P} supported"
        )));
    }
    if g.n() == 0 {
        return Ok((p, q, Coloring::new(p.max(1), Vec::new())?));
    }
    let mut bits = vec![0u32; g.n()];
    let mut next = 1usize;
    for (set, w) in &cert.entries {
        let count = (w * BigRational::from_integer(q.into()))
            .to_integer()
            .to_usize()
            .expect("bounded by p");
        let (h, back) = g.induced(set);
        let BalancedWitness::Switching(s) = h.balance_check() else {
            return Err(Error::BadCertificate(format!("set {set:?} is not balanced")));
        };
        for color in next..next + count {
            for (j, &v) in back.iter().enumerate() {
                let c = if s[j] == Sign::Plus {
                    color as i8
                } else {
                    -(color as i8)
                };
                bits[v] |= crate::color::bit(c);
            }
        }
        next += count;
    }
    let sets = bits
        .into_iter()
        .map(|b| ColorSet::from_signed(p, SignedSet(b)).map(|s| s.take(q)))
        .collect::<Result<Vec<_>>>()?;
    Ok((p, q, Coloring::new(p, sets)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::{verify, DemandMap};
    use crate::exact::chi_fb_exact;
    use crate::generate;

    #[test]
    fn text_round_trip() {
        let c = Certificate {
            entries: vec![
                (vec![0, 1], BigRational::new(1.into(), 3.into())),
                (vec![2], BigRational::new(2.into(), 1.into())),
            ],
        };
        let text = c.to_text();
        assert_eq!(text, "set 0,1 : 1/3\nset 2 : 2/1\n");
        assert_eq!(Certificate::parse(&text).unwrap(), c);
        assert!(Certificate::parse("set 1,0 : 1/2").is_err());
        assert!(Certificate::parse("set 0 : 1/0").is_err());
        assert!(Certificate::parse("set 0 : 1").is_err());
    }

    #[test]
    fn realize_examples() {
        let (p, q, f) = realize_pq(
            &generate::cycle(5, false).unwrap(),
            &chi_fb_exact(&generate::cycle(5, false).unwrap()).unwrap().certificate,
        )
        .unwrap();
        assert_eq!((p, q), (1, 1));
        assert!(f.sets().iter().all(|s| *s == ColorSet::first(1, 1)));

        let g = generate::k4_bullet();
        let res = chi_fb_exact(&g).unwrap();
        let (p, q, f) = realize_pq(&g, &res.certificate).unwrap();
        assert_eq!(BigRational::new(p.into(), q.into()), res.value);
        assert_eq!(verify(&g, &f, &DemandMap::constant(g.n(), q)), Ok(()));

        let g = generate::neg_cube();
        let res = chi_fb_exact(&g).unwrap();
        assert_eq!(res.value, BigRational::new(8.into(), 5.into()));
        let (p, q, f) = realize_pq(&g, &res.certificate).unwrap();
        assert_eq!(p * 5, q * 8);
        assert_eq!(verify(&g, &f, &DemandMap::constant(g.n(), q)), Ok(()));
    }

    #[test]
    fn check_rejects_bad_certificates() {
        let g = generate::k4_minus();
        let half = BigRational::new(1.into(), 2.into());
        let bad = Certificate {
            entries: vec![(vec![0, 1, 2], half.clone())],
        };
        assert!(bad.check(&g).is_err());
        let thin = Certificate {
            entries: vec![(vec![0, 1], half.clone()), (vec![2, 3], half)],
        };
        assert!(thin.check(&g).is_err());
    }
}
