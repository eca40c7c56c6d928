use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NakayamaError {
    #[error("Kupisch condition fails at index {0}")]
    KupischViolation(usize),
    #[error("empty Kupisch series")]
    Empty,
    #[error("cannot parse Kupisch series: {0}")]
    Parse(String),
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("module ({0}, {1}) does not exist")]
    NoSuchModule(usize, usize),
    #[error("module ({0}, {1}) is not a quotient of an indecomposable injective")]
    NotInjectiveQuotient(usize, usize),
}

/// Lengths `c_0, ..., c_{n-1}` of the indecomposable projectives `e_i A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KupischSeries {
    c: Vec<usize>,
    cyclic: bool,
}

impl KupischSeries {
    pub fn new(c: Vec<usize>, cyclic: bool) -> Result<Self, NakayamaError> {
        let n = c.len();
        if n == 0 {
            return Err(NakayamaError::Empty);
        }
        if cyclic {
            for i in 0..n {
                if c[i] < 2 {
                    return Err(NakayamaError::KupischViolation(i));
                }
                if c[(i + 1) % n] + 1 < c[i] {
                    return Err(NakayamaError::KupischViolation(i));
                }
            }
        } else {
            for i in 0..n - 1 {
                if c[i] == 0 || c[i + 1] + 1 < c[i] {
                    return Err(NakayamaError::KupischViolation(i));
                }
            }
            if c[n - 1] != 1 {
                return Err(NakayamaError::KupischViolation(n - 1));
            }
        }
        Ok(KupischSeries { c, cyclic })
    }

    pub fn cyclic(c: Vec<usize>) -> Result<Self, NakayamaError> {
        Self::new(c, true)
    }

    pub fn linear(c: Vec<usize>) -> Result<Self, NakayamaError> {
        Self::new(c, false)
    }

    /// Parses `"4,5,5"`.
    pub fn parse(s: &str, cyclic: bool) -> Result<Self, NakayamaError> {
        let c = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| NakayamaError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(c, cyclic)
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn lengths(&self) -> &[usize] {
        &self.c
    }

    /// `c_i` with the index taken modulo `n`.
    pub fn c(&self, i: usize) -> usize {
        self.c[i % self.c.len()]
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn dim(&self) -> usize {
        self.c.iter().sum()
    }

    pub fn is_selfinjective(&self) -> bool {
        self.cyclic && self.c.iter().all(|&x| x == self.c[0])
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_selfinjective() && self.c[0] % self.n() == 1 % self.n()
    }

    /// All cyclic series with `n` simples and entries in `2..=c_max`.
    pub fn enumerate_cyclic(n: usize, c_max: usize) -> Vec<KupischSeries> {
        let mut out = Vec::new();
        let mut cur = vec![2; n];
        loop {
            if let Ok(k) = Self::cyclic(cur.clone()) {
                out.push(k);
            }
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                cur[i] += 1;
                if cur[i] <= c_max {
                    break;
                }
                cur[i] = 2;
                i += 1;
            }
        }
    }

    pub fn label(&self) -> String {
        let body = self.c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        if self.cyclic {
            format!("({body})")
        } else {
            format!("({body})lin")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_examples() {
        let k = KupischSeries::cyclic(vec![4, 5, 5]).unwrap();
        assert!(!k.is_selfinjective());
        assert_eq!(k.dim(), 14);
        assert!(KupischSeries::cyclic(vec![5, 6]).is_ok());
        let k = KupischSeries::cyclic(vec![3, 3]).unwrap();
        assert!(k.is_selfinjective() && k.is_symmetric());
        assert!(KupischSeries::cyclic(vec![7, 7, 7]).unwrap().is_symmetric());
        assert_eq!(KupischSeries::cyclic(vec![5, 3]).unwrap_err(), NakayamaError::KupischViolation(0));
        assert!(KupischSeries::linear(vec![2, 1]).is_ok());
        assert_eq!(KupischSeries::linear(vec![2, 2]).unwrap_err(), NakayamaError::KupischViolation(1));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=3 {
            let listed = KupischSeries::enumerate_cyclic(n, 7);
            let mut count = 0;
            for code in 0..6usize.pow(n as u32) {
                let c: Vec<usize> = (0..n).map(|i| 2 + code / 6usize.pow(i as u32) % 6).collect();
                if (0..n).all(|i| c[(i + 1) % n] + 1 >= c[i]) {
                    count += 1;
                }
            }
            assert_eq!(listed.len(), count);
        }
    }
}
