use std::fmt;

/// A word in the free group, stored as syllables `(generator, exponent)`.
/// Always freely reduced: no zero exponents, no adjacent equal generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<(usize, i64)>);

impl Word {
    pub fn new<I: IntoIterator<Item = (usize, i64)>>(syllables: I) -> Self {
        let mut w = Word(Vec::new());
        for (g, e) in syllables {
            w.push(g, e);
        }
        w
    }

    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(g: usize) -> Self {
        Word(vec![(g, 1)])
    }

    pub fn power(g: usize, e: i64) -> Self {
        Word::new([(g, e)])
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// `a b a^-1`.
    pub fn conjugate(a: &Word, b: &Word) -> Word {
        a.concat(b).concat(&a.inverse())
    }

    fn push(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.0.last_mut() {
            if last.0 == g {
                last.1 += e;
                if last.1 == 0 {
                    self.0.pop();
                }
                return;
            }
        }
        self.0.push((g, e));
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of letters, `sum |e|`.
    pub fn len(&self) -> usize {
        self.0.iter().map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letters as `(generator, +1 | -1)`.
    pub fn letters(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.0
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.0 {
            w.push(g, e);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..k.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// Letter count of generator `g`.
    pub fn occurrences(&self, g: usize) -> usize {
        self.0.iter().filter(|(h, _)| *h == g).map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.0.iter().filter(|(h, _)| *h == g).map(|(_, e)| e).sum()
    }

    pub fn exponent_vector(&self, generators: usize) -> Vec<i64> {
        let mut v = vec![0; generators];
        for &(g, e) in &self.0 {
            v[g] += e;
        }
        v
    }

    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|(g, _)| *g)
    }

    /// Replaces every occurrence of `g` by `replacement`.
    pub fn substitute(&self, g: usize, replacement: &Word) -> Word {
        let mut w = Word::identity();
        for &(h, e) in &self.0 {
            if h == g {
                w = w.concat(&replacement.pow(e));
            } else {
                w.push(h, e);
            }
        }
        w
    }

    /// Renumbers generators through `map`; generators mapped to `None` must not occur.
    pub fn renumber(&self, map: &[Option<usize>]) -> Word {
        Word::new(self.0.iter().map(|&(g, e)| (map[g].expect("generator removed while still in use"), e)))
    }

    /// Removes matching syllables from both ends (conjugation).
    pub fn cyclically_reduced(&self) -> Word {
        let mut s = self.0.clone();
        loop {
            if s.len() >= 2 && s[0].0 == s[s.len() - 1].0 {
                let (g, first) = s[0];
                let last = s[s.len() - 1].1;
                s.pop();
                s.remove(0);
                // moving the tail syllable to the front merges it with the head
                let merged = first + last;
                if merged != 0 {
                    s.insert(0, (g, merged));
                }
                continue;
            }
            break;
        }
        Word(s)
    }

    /// Equality up to cyclic permutation of the letters (after cyclic reduction).
    pub fn cyclically_equal(&self, other: &Word) -> bool {
        let a: Vec<(usize, i64)> = self.cyclically_reduced().letters().collect();
        let b: Vec<(usize, i64)> = other.cyclically_reduced().letters().collect();
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        (0..a.len()).any(|shift| (0..a.len()).all(|i| a[(i + shift) % a.len()] == b[i]))
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return write!(f, "1");
        }
        for (i, &(g, e)) in self.word.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let name = &self.names[g];
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let w = Word::new([(0, 1), (1, 2), (1, -2), (0, -1)]);
        assert!(w.is_identity());
        let w = Word::new([(0, 2), (0, 1), (1, 0)]);
        assert_eq!(w.syllables(), &[(0, 3)]);
    }

    #[test]
    fn commutator_and_inverse() {
        let a = Word::generator(0);
        let b = Word::generator(1);
        let c = Word::commutator(&a, &b);
        assert_eq!(c.syllables(), &[(0, 1), (1, 1), (0, -1), (1, -1)]);
        assert!(c.concat(&c.inverse()).is_identity());
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn substitution() {
        // x y x^-1 with x := y^2  ->  y^2 y y^-2 = y
        let w = Word::new([(0, 1), (1, 1), (0, -1)]);
        let r = w.substitute(0, &Word::power(1, 2));
        assert_eq!(r.syllables(), &[(1, 1)]);
    }

    #[test]
    fn cyclic_equality() {
        let a = Word::new([(0, 2), (1, -2), (0, -2), (1, 2)]);
        let comm = Word::commutator(&Word::power(0, 2), &Word::power(1, 2));
        assert!(a.cyclically_equal(&comm.inverse()));
        assert!(!a.cyclically_equal(&comm));
        let conj = Word::new([(2, 1), (0, 1), (2, -1)]);
        assert!(conj.cyclically_equal(&Word::generator(0)));
        assert_eq!(Word::new([(0, 1), (1, 1), (0, 2)]).cyclically_reduced().syllables(), &[(0, 3), (1, 1)]);
    }
}
