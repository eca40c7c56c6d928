//! Small finite fields.
//!
//! Elements are encoded as integers `0..order`. For prime fields the encoding
//! is the usual residue; table fields carry explicit addition and
//! multiplication tables in which `0` and `1` must be the additive and
//! multiplicative identities.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::linalg::LinalgError;

/// A field element, encoded as an integer in `0..order`.
pub type Elem = u32;

/// Largest admissible prime for [`Field::prime`].
pub const MAX_PRIME: u32 = 1 << 16;

/// Largest admissible order of a table field.
pub const MAX_TABLE_ORDER: u32 = 256;

#[derive(Debug)]
enum Kind {
    Prime,
    Table {
        add: Vec<Elem>,
        mul: Vec<Elem>,
        neg: Vec<Elem>,
        inv: Vec<Elem>,
    },
}

#[derive(Debug)]
struct Inner {
    kind: Kind,
    order: u32,
    characteristic: u32,
}

/// A finite field, cheap to clone.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return true;
        }
        match (&self.inner.kind, &other.inner.kind) {
            (Kind::Prime, Kind::Prime) => self.inner.order == other.inner.order,
            (Kind::Table { add: a1, mul: m1, .. }, Kind::Table { add: a2, mul: m2, .. }) => {
                a1 == a2 && m1 == m2
            }
            _ => false,
        }
    }
}

impl Eq for Field {}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Self, LinalgError> {
        if !is_prime(p) || p > MAX_PRIME {
            return Err(LinalgError::BadField(format!("{p} is not a prime <= 2^16")));
        }
        Ok(Field {
            inner: Arc::new(Inner {
                kind: Kind::Prime,
                order: p,
                characteristic: p,
            }),
        })
    }

    /// `GF(4) = F_2[w]/(w^2 + w + 1)` with encoding `0, 1, w = 2, w^2 = w + 1 = 3`.
    pub fn gf4() -> Self {
        // Addition is XOR of the coefficient bits.
        let add: Vec<Elem> = (0..16u32).map(|i| (i / 4) ^ (i % 4)).collect();
        // Multiplication via discrete logs: w^0 = 1, w^1 = 2, w^2 = 3.
        let log = [0u32, 0, 1, 2];
        let exp = [1u32, 2, 3];
        let mul: Vec<Elem> = (0..16u32)
            .map(|i| {
                let (a, b) = ((i / 4) as usize, (i % 4) as usize);
                if a == 0 || b == 0 {
                    0
                } else {
                    exp[((log[a] + log[b]) % 3) as usize]
                }
            })
            .collect();
        Self::table(4, add, mul).expect("GF(4) tables are a field")
    }

    /// A field given by explicit tables (row-major `order x order`).
    ///
    /// The field axioms are checked exhaustively.
    pub fn table(order: u32, add: Vec<Elem>, mul: Vec<Elem>) -> Result<Self, LinalgError> {
        let q = order as usize;
        if !(2..=MAX_TABLE_ORDER).contains(&order) {
            return Err(LinalgError::BadField(format!("table order {order} out of range")));
        }
        if add.len() != q * q || mul.len() != q * q {
            return Err(LinalgError::BadField("table size does not match order".into()));
        }
        if add.iter().chain(mul.iter()).any(|&x| x >= order) {
            return Err(LinalgError::BadField("table entry out of range".into()));
        }
        let a = |x: usize, y: usize| add[x * q + y] as usize;
        let m = |x: usize, y: usize| mul[x * q + y] as usize;
        let mut neg = vec![u32::MAX; q];
        let mut inv = vec![0u32; q];
        for x in 0..q {
            if a(0, x) != x || a(x, 0) != x {
                return Err(LinalgError::BadField("0 is not the additive identity".into()));
            }
            if m(1, x) != x || m(x, 1) != x {
                return Err(LinalgError::BadField("1 is not the multiplicative identity".into()));
            }
            for y in 0..q {
                if a(x, y) != a(y, x) || m(x, y) != m(y, x) {
                    return Err(LinalgError::BadField(format!("not commutative at ({x},{y})")));
                }
                if a(x, y) == 0 {
                    neg[x] = y as u32;
                }
                if m(x, y) == 1 {
                    inv[x] = y as u32;
                }
                for z in 0..q {
                    if a(a(x, y), z) != a(x, a(y, z)) || m(m(x, y), z) != m(x, m(y, z)) {
                        return Err(LinalgError::BadField(format!(
                            "not associative at ({x},{y},{z})"
                        )));
                    }
                    if m(x, a(y, z)) != a(m(x, y), m(x, z)) {
                        return Err(LinalgError::BadField(format!(
                            "not distributive at ({x},{y},{z})"
                        )));
                    }
                }
            }
            if neg[x] == u32::MAX {
                return Err(LinalgError::BadField(format!("{x} has no additive inverse")));
            }
            if x != 0 && inv[x] == 0 {
                return Err(LinalgError::BadField(format!("{x} has no multiplicative inverse")));
            }
        }
        // Characteristic: additive order of 1.
        let mut characteristic = 1u32;
        let mut acc = 1usize;
        while acc != 0 {
            acc = a(acc, 1);
            characteristic += 1;
        }
        Ok(Field {
            inner: Arc::new(Inner {
                kind: Kind::Table { add, mul, neg, inv },
                order,
                characteristic,
            }),
        })
    }

    pub fn order(&self) -> u32 {
        self.inner.order
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.characteristic
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self.inner.kind, Kind::Prime)
    }

    pub fn name(&self) -> String {
        match self.inner.kind {
            Kind::Prime => format!("F_{}", self.inner.order),
            Kind::Table { .. } => format!("GF({})", self.inner.order),
        }
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.inner.order
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        x < self.inner.order
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        match &self.inner.kind {
            Kind::Prime => {
                let s = x + y;
                if s >= self.inner.order {
                    s - self.inner.order
                } else {
                    s
                }
            }
            Kind::Table { add, .. } => add[(x * self.inner.order + y) as usize],
        }
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        match &self.inner.kind {
            Kind::Prime => {
                if x == 0 {
                    0
                } else {
                    self.inner.order - x
                }
            }
            Kind::Table { neg, .. } => neg[x as usize],
        }
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        match &self.inner.kind {
            Kind::Prime => ((x as u64 * y as u64) % self.inner.order as u64) as Elem,
            Kind::Table { mul, .. } => mul[(x * self.inner.order + y) as usize],
        }
    }

    /// `x + a * y`, the elimination kernel.
    #[inline]
    pub fn mul_add(&self, x: Elem, a: Elem, y: Elem) -> Elem {
        match &self.inner.kind {
            Kind::Prime => {
                ((x as u64 + a as u64 * y as u64) % self.inner.order as u64) as Elem
            }
            Kind::Table { add, mul, .. } => {
                let q = self.inner.order;
                add[(x * q + mul[(a * q + y) as usize]) as usize]
            }
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, x: Elem) -> Elem {
        assert!(x != 0, "inverse of zero");
        match &self.inner.kind {
            Kind::Prime => self.pow(x, (self.inner.order - 2) as u64),
            Kind::Table { inv, .. } => inv[x as usize],
        }
    }

    pub fn pow(&self, x: Elem, mut e: u64) -> Elem {
        let mut base = x;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Embeds an integer via repeated addition of `1`.
    pub fn from_int(&self, n: i64) -> Elem {
        match &self.inner.kind {
            Kind::Prime => n.rem_euclid(self.inner.order as i64) as Elem,
            Kind::Table { .. } => {
                let c = self.inner.characteristic as i64;
                let r = n.rem_euclid(c);
                (0..r).fold(0, |acc, _| self.add(acc, 1))
            }
        }
    }

    /// Serializable description of this field.
    pub fn spec(&self) -> FieldSpec {
        match &self.inner.kind {
            Kind::Prime => FieldSpec::Prime { p: self.inner.order },
            Kind::Table { add, mul, .. } => {
                if *self == Field::gf4() {
                    FieldSpec::Gf4
                } else {
                    FieldSpec::Table {
                        order: self.inner.order,
                        add: add.clone(),
                        mul: mul.clone(),
                    }
                }
            }
        }
    }
}

/// Interchange form of a field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldSpec {
    Prime { p: u32 },
    Gf4,
    Table { order: u32, add: Vec<Elem>, mul: Vec<Elem> },
}

impl FieldSpec {
    pub fn build(&self) -> Result<Field, LinalgError> {
        match self {
            FieldSpec::Prime { p } => Field::prime(*p),
            FieldSpec::Gf4 => Ok(Field::gf4()),
            FieldSpec::Table { order, add, mul } => Field::table(*order, add.clone(), mul.clone()),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = LinalgError;

    /// Accepts `F2`, `F_5`, `GF(4)`, `GF4`, or a bare prime.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_uppercase();
        if t == "GF(4)" || t == "GF4" || t == "F4" {
            return Ok(FieldSpec::Gf4);
        }
        let digits = t
            .trim_start_matches("GF")
            .trim_start_matches('F')
            .trim_start_matches('_')
            .trim_start_matches('(')
            .trim_end_matches(')');
        let p: u32 = digits
            .parse()
            .map_err(|_| LinalgError::BadField(format!("cannot parse field '{s}'")))?;
        Field::prime(p)?;
        Ok(FieldSpec::Prime { p })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &Field) {
        let els: Vec<Elem> = f.elements().collect();
        for &x in &els {
            assert_eq!(f.add(x, 0), x);
            assert_eq!(f.mul(x, 1), x);
            assert_eq!(f.add(x, f.neg(x)), 0);
            if x != 0 {
                assert_eq!(f.mul(x, f.inv(x)), 1);
            }
            for &y in &els {
                assert_eq!(f.add(x, y), f.add(y, x));
                assert_eq!(f.mul(x, y), f.mul(y, x));
                for &z in &els {
                    assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
                    assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                    assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                    assert_eq!(f.mul_add(x, y, z), f.add(x, f.mul(y, z)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for p in [2, 3, 5, 7, 11, 101] {
            check_axioms(&Field::prime(p).unwrap());
        }
        check_axioms(&Field::gf4());
    }

    #[test]
    fn gf4_has_characteristic_two() {
        let f = Field::gf4();
        assert_eq!(f.characteristic(), 2);
        assert_eq!(f.order(), 4);
        // w^2 = w + 1
        assert_eq!(f.mul(2, 2), f.add(2, 1));
        assert_eq!(f.pow(2, 3), 1);
    }

    #[test]
    fn rejects_non_prime_and_bad_tables() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        // Z/4 is not a field.
        let add: Vec<u32> = (0..16).map(|i| (i / 4 + i % 4) % 4).collect();
        let mul: Vec<u32> = (0..16).map(|i| (i / 4 * (i % 4)) % 4).collect();
        assert!(Field::table(4, add, mul).is_err());
    }

    #[test]
    fn parses_field_names() {
        assert_eq!("F2".parse::<FieldSpec>().unwrap(), FieldSpec::Prime { p: 2 });
        assert_eq!("F_5".parse::<FieldSpec>().unwrap(), FieldSpec::Prime { p: 5 });
        assert_eq!("GF(4)".parse::<FieldSpec>().unwrap(), FieldSpec::Gf4);
        assert_eq!("7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime { p: 7 });
        assert!("F6".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn from_int_wraps() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.from_int(-1), 4);
        assert_eq!(Field::gf4().from_int(3), 1);
    }
}
