//! Classical Robinson-Schensted insertion and the odd-letter embedding of a
//! permutation as a reduced word.

use crate::error::{Error, Result};
use crate::perm::{Permutation, Word};
use crate::tableau::Tableau;

/// `(2σ_n - 1) ... (2σ_1 - 1)`. Its letters are distinct and pairwise at
/// least 2 apart, so it is reduced.
pub fn rs_embedding_word(perm: &Permutation) -> Word {
    let letters = perm.as_slice().iter().rev().map(|&v| 2 * v - 1).collect();
    Word::new(letters).expect("odd letters are positive")
}

/// Schensted row insertion of `σ_1, ..., σ_n`, returning `(P', Q')`.
pub fn rs(perm: &Permutation) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (t, &value) in perm.as_slice().iter().enumerate() {
        let mut x = value;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![t as u32 + 1]);
                break;
            }
            match p[r].iter().position(|&v| v > x) {
                Some(j) => {
                    x = std::mem::replace(&mut p[r][j], x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push(t as u32 + 1);
                    break;
                }
            }
        }
    }
    (
        Tableau::new(p).expect("RS output is a tableau"),
        Tableau::new(q).expect("RS output is a tableau"),
    )
}

/// Applies `k -> (k + 1) / 2` to every entry; all entries must be odd.
pub fn halve_odd_entries(t: &Tableau) -> Result<Tableau> {
    let rows = t
        .rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|&k| {
                    if k % 2 == 1 {
                        Ok(k.div_ceil(2))
                    } else {
                        Err(Error::Domain(format!("entry {k} is even")))
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Tableau::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn embedding_words() {
        assert_eq!(rs_embedding_word(&Permutation::identity(1)).letters(), &[1]);
        assert_eq!(rs_embedding_word(&perm("2 3 1")).letters(), &[1, 5, 3]);
        assert_eq!(
            rs_embedding_word(&perm("3 5 2 4 1")).letters(),
            &[1, 7, 3, 9, 5]
        );
        assert!(rs_embedding_word(&perm("3 5 2 4 1")).is_reduced());
    }

    #[test]
    fn schensted() {
        let (p, q) = rs(&Permutation::identity(3));
        assert_eq!(p, tab(&[&[1, 2, 3]]));
        assert_eq!(q, tab(&[&[1, 2, 3]]));
        let (p, q) = rs(&perm("2 3 1"));
        assert_eq!(p, tab(&[&[1, 3], &[2]]));
        assert_eq!(q, tab(&[&[1, 2], &[3]]));
        for s in Permutation::all(4) {
            let (p, q) = rs(&s);
            assert_eq!(p.shape(), q.shape());
            assert!(p.is_standard() && q.is_standard());
        }
    }

    #[test]
    fn halving() {
        assert_eq!(
            halve_odd_entries(&tab(&[&[1, 5], &[3]])).unwrap(),
            tab(&[&[1, 3], &[2]])
        );
        assert!(halve_odd_entries(&tab(&[&[2]])).is_err());
    }
}
