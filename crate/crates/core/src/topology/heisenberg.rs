use std::collections::{BTreeSet, VecDeque};

/// The group `{(alpha, beta, gamma) mod k}` with
/// `(a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b')`, the mod-`k`
/// reduction of the integer Heisenberg group, generated by `x = (1, 0, 0)`
/// and `y = (0, 1, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeisenbergMod {
    k: u64,
}

pub type Element = (u64, u64, u64);

impl HeisenbergMod {
    pub fn new(k: u64) -> Self {
        assert!(k > 0, "modulus must be positive");
        Self { k }
    }

    pub fn modulus(&self) -> u64 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.k.pow(3)
    }

    pub fn identity(&self) -> Element {
        (0, 0, 0)
    }

    pub fn generators(&self) -> [Element; 2] {
        let one = 1 % self.k;
        [(one, 0, 0), (0, one, 0)]
    }

    pub fn mul(&self, g: Element, h: Element) -> Element {
        let k = self.k;
        (
            (g.0 + h.0) % k,
            (g.1 + h.1) % k,
            (g.2 + h.2 + g.0 * h.1 % k) % k,
        )
    }

    pub fn inv(&self, g: Element) -> Element {
        let k = self.k;
        let neg = |x: u64| (k - x % k) % k;
        // (a, b, c)^-1 = (-a, -b, ab - c)
        (neg(g.0), neg(g.1), (g.0 * g.1 % k + neg(g.2)) % k)
    }

    pub fn commutator(&self, g: Element, h: Element) -> Element {
        self.mul(self.mul(g, h), self.mul(self.inv(g), self.inv(h)))
    }

    /// All `k^3` elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        let k = self.k;
        (0..k).flat_map(move |a| (0..k).flat_map(move |b| (0..k).map(move |c| (a, b, c))))
    }

    /// The commutator subgroup, computed as the normal closure of the
    /// generator commutator `[x, y]`: the smallest set containing it that is
    /// closed under products and under conjugation by `x^{+-1}`, `y^{+-1}`.
    pub fn commutator_subgroup(&self) -> BTreeSet<Element> {
        let [x, y] = self.generators();
        let conjugators = [x, y, self.inv(x), self.inv(y)];
        let mut found = BTreeSet::from([self.identity()]);
        let mut queue = VecDeque::from([self.commutator(x, y)]);
        while let Some(g) = queue.pop_front() {
            if !found.insert(g) {
                continue;
            }
            let products = found.iter().flat_map(|&h| [self.mul(g, h), self.mul(h, g)]);
            let conjugates = conjugators
                .iter()
                .map(|&c| self.mul(self.mul(c, g), self.inv(c)));
            let fresh: Vec<Element> = products
                .chain(conjugates)
                .filter(|e| !found.contains(e))
                .collect();
            queue.extend(fresh);
        }
        found
    }

    pub fn is_abelian(&self) -> bool {
        let [x, y] = self.generators();
        self.mul(x, y) == self.mul(y, x)
    }

    /// `|G / [G, G]|`.
    pub fn abelianization_order(&self) -> u64 {
        self.order() / self.commutator_subgroup().len() as u64
    }

    /// Every commutator commutes with both generators, hence with all of `G`.
    pub fn commutators_are_central(&self) -> bool {
        let gens = self.generators();
        self.commutator_subgroup()
            .into_iter()
            .all(|c| gens.iter().all(|&g| self.mul(c, g) == self.mul(g, c)))
    }
}
