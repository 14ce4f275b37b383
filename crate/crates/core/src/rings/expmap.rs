use std::collections::BTreeMap;

/// A finitely supported map `K → ℤ` with zero values dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpMap<K: Ord>(BTreeMap<K, i64>);

impl<K: Ord> Default for ExpMap<K> {
    fn default() -> Self {
        ExpMap(BTreeMap::new())
    }
}

impl<K: Ord + Clone> ExpMap<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(k: K, e: i64) -> Self {
        let mut m = Self::new();
        m.add(k, e);
        m
    }

    pub fn get(&self, k: &K) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn add(&mut self, k: K, e: i64) {
        if e == 0 {
            return;
        }
        let entry = self.0.entry(k.clone()).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.0.remove(&k);
        }
    }

    pub fn merged(&self, other: &Self, sign: i64) -> Self {
        let mut out = self.clone();
        for (k, &e) in &other.0 {
            out.add(k.clone(), sign * e);
        }
        out
    }

    pub fn negated(&self) -> Self {
        ExpMap(self.0.iter().map(|(k, &e)| (k.clone(), -e)).collect())
    }

    pub fn scaled(&self, n: i64) -> Self {
        if n == 0 {
            return Self::new();
        }
        ExpMap(self.0.iter().map(|(k, &e)| (k.clone(), n * e)).collect())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, i64)> + '_ {
        self.0.iter().map(|(k, &e)| (k, e))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> + '_ {
        self.0.keys()
    }
}

impl<K: Ord + Clone> FromIterator<(K, i64)> for ExpMap<K> {
    fn from_iter<T: IntoIterator<Item = (K, i64)>>(iter: T) -> Self {
        let mut m = ExpMap::new();
        for (k, e) in iter {
            m.add(k, e);
        }
        m
    }
}

impl ExpMap<usize> {
    /// Dense vector of length `rank`.
    pub fn to_dense(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0; rank];
        for (&k, e) in self.iter() {
            v[k] += e;
        }
        v
    }

    pub fn from_dense(v: &[i64]) -> Self {
        v.iter().enumerate().map(|(k, &e)| (k, e)).collect()
    }

    /// Smallest dense length holding every key.
    pub fn min_len(&self) -> usize {
        self.0.keys().next_back().map_or(0, |&k| k + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_exponents_are_dropped() {
        let mut m = ExpMap::single(3usize, 2);
        m.add(3, -2);
        assert!(m.is_empty());
        assert_eq!(m, ExpMap::new());
    }

    #[test]
    fn dense_round_trip() {
        let m = ExpMap::from_dense(&[0, -1, 2]);
        assert_eq!(m.len(), 2);
        assert_eq!(m.to_dense(4), vec![0, -1, 2, 0]);
        assert_eq!(m.min_len(), 3);
    }
}
