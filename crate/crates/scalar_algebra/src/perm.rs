use itertools::Itertools;

/// A signed permutation acting on coordinate vectors by
/// `(s.y)_j = signs[j] * y_{perm[j]}` (indices 0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Option<Self> {
        let l = perm.len();
        if signs.len() != l || signs.iter().any(|s| s.abs() != 1) {
            return None;
        }
        let mut seen = vec![false; l];
        for &p in &perm {
            if p >= l || seen[p] {
                return None;
            }
            seen[p] = true;
        }
        Some(SignedPermutation { perm, signs })
    }

    pub fn unsigned(perm: Vec<usize>) -> Option<Self> {
        let l = perm.len();
        Self::new(perm, vec![1; l])
    }

    pub fn identity(l: usize) -> Self {
        SignedPermutation { perm: (0..l).collect(), signs: vec![1; l] }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn apply<T: Clone + std::ops::Neg<Output = T>>(&self, y: &[T]) -> Vec<T> {
        self.perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| if s < 0 { -y[p].clone() } else { y[p].clone() })
            .collect()
    }

    /// `self ∘ other`, i.e. `(self ∘ other).y = self.(other.y)`.
    pub fn compose(&self, other: &Self) -> Self {
        let perm = self.perm.iter().map(|&p| other.perm[p]).collect();
        let signs = self
            .perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| s * other.signs[p])
            .collect();
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let l = self.len();
        let mut perm = vec![0; l];
        let mut signs = vec![1; l];
        for j in 0..l {
            perm[self.perm[j]] = j;
            signs[self.perm[j]] = self.signs[j];
        }
        SignedPermutation { perm, signs }
    }

    /// Parity of the underlying permutation, as ±1.
    pub fn perm_sign(&self) -> i32 {
        let mut visited = vec![false; self.len()];
        let mut sign = 1;
        for start in 0..self.len() {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !visited[j] {
                visited[j] = true;
                j = self.perm[j];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    pub fn sign_product(&self) -> i32 {
        self.signs.iter().map(|&s| s as i32).product()
    }

    pub fn negations(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }
}

/// All of Σ_l.
pub fn symmetric_group(l: usize) -> Vec<SignedPermutation> {
    (0..l)
        .permutations(l)
        .map(|p| SignedPermutation::unsigned(p).unwrap())
        .collect()
}

/// Σ_l ⋉ {±1}^l.
pub fn hyperoctahedral_group(l: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    for p in (0..l).permutations(l) {
        for mask in 0..(1u32 << l) {
            let signs = (0..l).map(|j| if mask >> j & 1 == 1 { -1 } else { 1 }).collect();
            out.push(SignedPermutation::new(p.clone(), signs).unwrap());
        }
    }
    out
}

/// Signed permutations with an even number of sign changes.
pub fn signed_even_group(l: usize) -> Vec<SignedPermutation> {
    hyperoctahedral_group(l)
        .into_iter()
        .filter(|s| s.negations() % 2 == 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(symmetric_group(3).len(), 6);
        assert_eq!(hyperoctahedral_group(2).len(), 8);
        assert_eq!(signed_even_group(3).len(), 24);
        assert_eq!(symmetric_group(0).len(), 1);
    }

    #[test]
    fn compose_matches_sequential_action() {
        let g = hyperoctahedral_group(3);
        let y = [1i64, 2, 3];
        for s in &g {
            for t in &g {
                assert_eq!(s.compose(t).apply(&y), s.apply(&t.apply(&y)));
                assert_eq!(s.compose(t).perm_sign(), s.perm_sign() * t.perm_sign());
            }
            assert_eq!(s.compose(&s.inverse()), SignedPermutation::identity(3));
        }
    }
}
