use std::cmp::Ordering;

use crate::poly::Mono;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Variables in `elim` dominate; ties broken by `inner` on the remaining variables.
    /// `inner` is also used inside the `elim` block.
    Block { elim: Vec<usize>, inner: Box<MonomialOrder> },
}

/// Comparator with the block partition precomputed for a fixed number of variables.
#[derive(Clone, Debug)]
pub struct Cmp {
    blocks: Vec<Vec<usize>>,
    lex: bool,
}

fn grevlex_on(a: &[u32], b: &[u32], idx: &[usize]) -> Ordering {
    let (mut da, mut db) = (0u32, 0u32);
    for &i in idx {
        da += a[i];
        db += b[i];
    }
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for &i in idx.iter().rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

fn lex_on(a: &[u32], b: &[u32], idx: &[usize]) -> Ordering {
    for &i in idx {
        if a[i] != b[i] {
            return a[i].cmp(&b[i]);
        }
    }
    Ordering::Equal
}

impl Cmp {
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        for blk in &self.blocks {
            let o = if self.lex {
                lex_on(&a.0, &b.0, blk)
            } else {
                grevlex_on(&a.0, &b.0, blk)
            };
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    }
}

impl MonomialOrder {
    pub fn block(elim: Vec<usize>) -> MonomialOrder {
        MonomialOrder::Block {
            elim,
            inner: Box::new(MonomialOrder::Grevlex),
        }
    }

    pub fn comparator(&self, n: usize) -> Cmp {
        let all: Vec<usize> = (0..n).collect();
        match self {
            MonomialOrder::Grevlex => Cmp {
                blocks: vec![all],
                lex: false,
            },
            MonomialOrder::Lex => Cmp {
                blocks: vec![all],
                lex: true,
            },
            MonomialOrder::Block { elim, inner } => {
                let mut e = elim.clone();
                e.sort_unstable();
                e.dedup();
                let rest: Vec<usize> = all.into_iter().filter(|i| !e.contains(i)).collect();
                Cmp {
                    blocks: vec![e, rest],
                    lex: matches!(inner.as_ref(), MonomialOrder::Lex),
                }
            }
        }
    }

    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        self.comparator(a.len()).cmp(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_prefers_eliminated() {
        let o = MonomialOrder::block(vec![0]);
        assert_eq!(o.cmp(&Mono(vec![1, 0]), &Mono(vec![0, 5])), Ordering::Greater);
        assert_eq!(
            MonomialOrder::Grevlex.cmp(&Mono(vec![1, 0]), &Mono(vec![0, 5])),
            Ordering::Less
        );
        assert_eq!(MonomialOrder::Lex.cmp(&Mono(vec![1, 0]), &Mono(vec![0, 5])), Ordering::Greater);
        let m = [Mono(vec![2, 1, 0]), Mono(vec![0, 0, 3]), Mono(vec![1, 1, 1])];
        for a in &m {
            for b in &m {
                assert_eq!(MonomialOrder::Grevlex.cmp(a, b), a.cmp(b));
            }
        }
    }
}
