use std::cmp::Ordering;

/// Dense exponent vector. `Ord` is graded reverse lexicographic with x0 > x1 > ... .
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn one(n: usize) -> Mono {
        Mono(vec![0; n])
    }

    pub fn var(n: usize, i: usize, e: u32) -> Mono {
        let mut v = vec![0; n];
        v[i] = e;
        Mono(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming divisibility.
    pub fn quotient_of(&self, o: &Mono) -> Mono {
        Mono(o.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd_is_one(&self, o: &Mono) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn weight(&self, row: &[i64]) -> i64 {
        self.0.iter().zip(row).map(|(&e, &w)| e as i64 * w).sum()
    }

    pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
        let da: u32 = a.iter().sum();
        let db: u32 = b.iter().sum();
        match da.cmp(&db) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        Mono::grevlex_cmp(&self.0, &other.0)
    }
}
