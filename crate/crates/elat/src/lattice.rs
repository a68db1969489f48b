//! Finite lattices with explicit operation tables, and isomorphism /
//! automorphism enumeration by backtracking.

use crate::error::ELatticeError;

/// A finite lattice on `{0, …, n−1}` with order relation and meet/join tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    n: usize,
    leq: Vec<bool>,
    meet: Vec<u16>,
    join: Vec<u16>,
}

impl Lattice {
    /// Builds a lattice from a partial order, computing meets and joins and
    /// failing if some pair lacks a unique greatest lower / least upper bound.
    pub fn from_leq(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Lattice, ELatticeError> {
        let mut rel = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                rel[a * n + b] = leq(a, b);
            }
        }
        for a in 0..n {
            if !rel[a * n + a] {
                return Err(ELatticeError::MalformedTable {
                    msg: format!("order not reflexive at {a}"),
                });
            }
            for b in 0..n {
                if a != b && rel[a * n + b] && rel[b * n + a] {
                    return Err(ELatticeError::MalformedTable {
                        msg: format!("order not antisymmetric at ({a}, {b})"),
                    });
                }
            }
        }
        let mut meet = vec![0u16; n * n];
        let mut join = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let glb: Vec<usize> = (0..n)
                    .filter(|&x| rel[x * n + a] && rel[x * n + b])
                    .filter(|&x| {
                        (0..n)
                            .filter(|&y| rel[y * n + a] && rel[y * n + b])
                            .all(|y| rel[y * n + x])
                    })
                    .collect();
                let lub: Vec<usize> = (0..n)
                    .filter(|&x| rel[a * n + x] && rel[b * n + x])
                    .filter(|&x| {
                        (0..n)
                            .filter(|&y| rel[a * n + y] && rel[b * n + y])
                            .all(|y| rel[x * n + y])
                    })
                    .collect();
                if glb.len() != 1 || lub.len() != 1 {
                    return Err(ELatticeError::MalformedTable {
                        msg: format!("pair ({a}, {b}) has no unique meet or join"),
                    });
                }
                meet[a * n + b] = glb[0] as u16;
                join[a * n + b] = lub[0] as u16;
            }
        }
        Ok(Lattice { n, leq: rel, meet, join })
    }

    /// Builds a lattice directly from operation tables, verifying the lattice
    /// laws exhaustively.
    pub fn from_tables(
        n: usize,
        meet: impl Fn(usize, usize) -> usize,
        join: impl Fn(usize, usize) -> usize,
    ) -> Result<Lattice, ELatticeError> {
        let mut m = vec![0u16; n * n];
        let mut j = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let (x, y) = (meet(a, b), join(a, b));
                if x >= n || y >= n {
                    return Err(ELatticeError::MalformedTable {
                        msg: format!("entry out of range at ({a}, {b})"),
                    });
                }
                m[a * n + b] = x as u16;
                j[a * n + b] = y as u16;
            }
        }
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = m[a * n + b] as usize == a;
            }
        }
        let lat = Lattice { n, leq, meet: m, join: j };
        lat.validate()?;
        Ok(lat)
    }

    fn validate(&self) -> Result<(), ELatticeError> {
        let n = self.n;
        for a in 0..n {
            if self.meet(a, a) != a || self.join(a, a) != a {
                return Err(ELatticeError::MalformedTable {
                    msg: format!("idempotence fails at {a}"),
                });
            }
            for b in 0..n {
                if self.meet(a, b) != self.meet(b, a) || self.join(a, b) != self.join(b, a) {
                    return Err(ELatticeError::MalformedTable {
                        msg: format!("commutativity fails at ({a}, {b})"),
                    });
                }
                if self.meet(a, self.join(a, b)) != a || self.join(a, self.meet(a, b)) != a {
                    return Err(ELatticeError::MalformedTable {
                        msg: format!("absorption fails at ({a}, {b})"),
                    });
                }
                for c in 0..n {
                    if self.meet(a, self.meet(b, c)) != self.meet(self.meet(a, b), c)
                        || self.join(a, self.join(b, c)) != self.join(self.join(a, b), c)
                    {
                        return Err(ELatticeError::MalformedTable {
                            msg: format!("associativity fails at ({a}, {b}, {c})"),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b] as usize
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b] as usize
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    /// Per-element invariants used to prune the isomorphism search:
    /// (|down-set|, |up-set|, lower covers, upper covers).
    fn profiles(&self) -> Vec<(usize, usize, usize, usize)> {
        let n = self.n;
        (0..n)
            .map(|a| {
                let down = (0..n).filter(|&x| self.leq(x, a)).count();
                let up = (0..n).filter(|&x| self.leq(a, x)).count();
                let covers_down = (0..n)
                    .filter(|&x| {
                        x != a
                            && self.leq(x, a)
                            && !(0..n).any(|y| y != x && y != a && self.leq(x, y) && self.leq(y, a))
                    })
                    .count();
                let covers_up = (0..n)
                    .filter(|&x| {
                        x != a
                            && self.leq(a, x)
                            && !(0..n).any(|y| y != x && y != a && self.leq(a, y) && self.leq(y, x))
                    })
                    .count();
                (down, up, covers_down, covers_up)
            })
            .collect()
    }

    /// All order isomorphisms onto `other`, as image vectors in lexicographic
    /// order. Order isomorphisms of finite lattices are exactly the lattice
    /// isomorphisms.
    pub fn isomorphisms(&self, other: &Lattice) -> Vec<Vec<usize>> {
        self.isomorphisms_bounded(other, usize::MAX)
    }

    pub fn first_isomorphism(&self, other: &Lattice) -> Option<Vec<usize>> {
        self.isomorphisms_bounded(other, 1).into_iter().next()
    }

    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        self.isomorphisms(self)
    }

    fn isomorphisms_bounded(&self, other: &Lattice, limit: usize) -> Vec<Vec<usize>> {
        if self.n != other.n || limit == 0 {
            return Vec::new();
        }
        let pa = self.profiles();
        let pb = other.profiles();
        {
            let mut sa = pa.clone();
            let mut sb = pb.clone();
            sa.sort_unstable();
            sb.sort_unstable();
            if sa != sb {
                return Vec::new();
            }
        }
        let mut out = Vec::new();
        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        self.extend_iso(other, &pa, &pb, 0, &mut map, &mut used, limit, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_iso(
        &self,
        other: &Lattice,
        pa: &[(usize, usize, usize, usize)],
        pb: &[(usize, usize, usize, usize)],
        next: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        limit: usize,
        out: &mut Vec<Vec<usize>>,
    ) -> bool {
        if next == self.n {
            debug_assert!((0..self.n).all(|a| (0..self.n).all(|b| {
                other.meet(map[a], map[b]) == map[self.meet(a, b)]
                    && other.join(map[a], map[b]) == map[self.join(a, b)]
            })));
            out.push(map.clone());
            return out.len() >= limit;
        }
        for cand in 0..self.n {
            if used[cand] || pb[cand] != pa[next] {
                continue;
            }
            let consistent = (0..next).all(|prev| {
                self.leq(prev, next) == other.leq(map[prev], cand)
                    && self.leq(next, prev) == other.leq(cand, map[prev])
            });
            if !consistent {
                continue;
            }
            map[next] = cand;
            used[cand] = true;
            let stop = self.extend_iso(other, pa, pb, next + 1, map, used, limit, out);
            map[next] = usize::MAX;
            used[cand] = false;
            if stop {
                return true;
            }
        }
        false
    }
}

/// Convenience constructors for the standard shapes used in tests and the
/// inflation examples.
pub fn chain(n: usize) -> Lattice {
    Lattice::from_leq(n, |a, b| a <= b).unwrap()
}

/// Bottom, `k` pairwise incomparable atoms, top.
pub fn diamond(k: usize) -> Lattice {
    let n = k + 2;
    let top = n - 1;
    Lattice::from_leq(n, |a, b| a == b || a == 0 || b == top).unwrap()
}
