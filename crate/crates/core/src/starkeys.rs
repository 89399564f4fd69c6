//! The star action on integer sets and right keys of tableaux.
//!
//! `S ⋆ m` replaces the largest element of `S` that is at most `m` by `m`,
//! or inserts `m` when no such element exists. Folding a tableau's column
//! word from column `j` onward into the empty set yields column `j` of its
//! right key; for set-valued tableaux this is the entrywise maximum of the
//! right keys over all semistandard selections.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::tableaux::{key_of, Composition, KeyTableau, SetValuedTableau};

/// Expansion limit for [`right_key_oracle`].
pub const ORACLE_LIMIT: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KeyError {
    #[error("keys have different shapes")]
    ShapeMismatch,
    #[error("tableau expands to {0} selections, above the oracle limit of {ORACLE_LIMIT}")]
    OracleGuard(u64),
}

pub type IntegerSet = BTreeSet<i64>;

pub fn star_step(set: &IntegerSet, m: i64) -> IntegerSet {
    let mut out = set.clone();
    star_step_in_place(&mut out, m);
    out
}

fn star_step_in_place(set: &mut IntegerSet, m: i64) {
    if let Some(&bumped) = set.range(..=m).next_back() {
        set.remove(&bumped);
    }
    set.insert(m);
}

pub fn star_word<I>(set: &IntegerSet, word: I) -> IntegerSet
where
    I: IntoIterator<Item = i64>,
{
    let mut out = set.clone();
    for m in word {
        star_step_in_place(&mut out, m);
    }
    out
}

/// Column `col` of the right key: `∅ ⋆ word(T_{>=col})`, ascending.
pub fn key_column(t: &SetValuedTableau, col: usize) -> Vec<u32> {
    let word = t.column_word_from(col).into_iter().map(i64::from);
    star_word(&IntegerSet::new(), word)
        .into_iter()
        .map(|v| v as u32)
        .collect()
}

/// Right key of a semistandard tableau.
pub fn right_key_ssyt(t: &SetValuedTableau) -> KeyTableau {
    debug_assert!(t.is_semistandard());
    right_key_svt(t)
}

/// Right key of a set-valued tableau, computed column by column.
pub fn right_key_svt(t: &SetValuedTableau) -> KeyTableau {
    let columns: Vec<Vec<u32>> = (1..=t.num_cols()).map(|c| key_column(t, c)).collect();
    KeyTableau::from_columns(&columns).expect("star columns nest into a key")
}

/// Entrywise maximum of the right keys of every selection in `𝒮(T)`.
///
/// Exponential in the cell sizes; intended as a cross-check for
/// [`right_key_svt`].
pub fn right_key_oracle(t: &SetValuedTableau) -> Result<KeyTableau, KeyError> {
    let count = t.expansion_count();
    if count > ORACLE_LIMIT {
        return Err(KeyError::OracleGuard(count));
    }
    let mut best: Option<Vec<Vec<u32>>> = None;
    for p in t.expand() {
        let rows = right_key_ssyt(&p).rows();
        best = Some(match best {
            None => rows,
            Some(acc) => acc
                .iter()
                .zip(&rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| *x.max(y)).collect())
                .collect(),
        });
    }
    let rows = best.unwrap_or_default();
    let t = SetValuedTableau::from_ssyt_rows(&rows).expect("maximum of keys is semistandard");
    Ok(KeyTableau::try_from_tableau(t).expect("maximum of keys is a key"))
}

/// Entrywise comparison of two keys of the same shape.
pub fn key_leq(lhs: &KeyTableau, rhs: &KeyTableau) -> Result<bool, KeyError> {
    if lhs.shape() != rhs.shape() {
        return Err(KeyError::ShapeMismatch);
    }
    Ok(lhs
        .rows()
        .iter()
        .flatten()
        .zip(rhs.rows().iter().flatten())
        .all(|(a, b)| a <= b))
}

/// Membership in `SVT(α)`: same shape as `key(α)` and right key below it.
pub fn in_svt(t: &SetValuedTableau, alpha: &Composition) -> bool {
    let key = key_of(alpha);
    t.shape() == key.shape() && key_leq(&right_key_svt(t), &key).unwrap_or(false)
}

/// Membership in the atom set: right key equal to `key(α)`.
pub fn in_atom(t: &SetValuedTableau, alpha: &Composition) -> bool {
    right_key_svt(t) == key_of(alpha)
}

/// Membership in `SSYT(α)`.
pub fn in_ssyt(t: &SetValuedTableau, alpha: &Composition) -> bool {
    t.is_semistandard() && in_svt(t, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::Partition;

    fn set(v: &[i64]) -> IntegerSet {
        v.iter().copied().collect()
    }

    fn svt(rows: &[Vec<Vec<u32>>]) -> SetValuedTableau {
        SetValuedTableau::from_values(rows).unwrap()
    }

    fn comp(v: &[u32]) -> Composition {
        Composition::from(v)
    }

    #[test]
    fn star_step_examples() {
        // 2 is the largest element <= 3, so it is bumped
        assert_eq!(star_step(&set(&[2, 4, 5, 7]), 3), set(&[3, 4, 5, 7]));
        let chain = [4, 6, 2]
            .iter()
            .fold(set(&[3, 4, 5, 7]), |s, &m| star_step(&s, m));
        assert_eq!(chain, set(&[2, 3, 4, 6, 7]));
        assert_eq!(star_step(&set(&[]), 7), set(&[7]));
        assert_eq!(star_step(&set(&[5]), 3), set(&[3, 5]));
        assert_eq!(star_step(&set(&[5]), 5), set(&[5]));
    }

    #[test]
    fn star_word_examples() {
        assert_eq!(
            star_word(&set(&[2, 4, 5, 7]), [3, 4, 6, 2]),
            set(&[2, 3, 4, 6, 7])
        );
        assert_eq!(
            star_word(&set(&[2, 4, 5, 7]), [1, 2, 8, 4]),
            set(&[1, 2, 4, 5, 8])
        );
        assert_eq!(star_word(&set(&[1, 9]), []), set(&[1, 9]));
    }

    #[test]
    fn right_key_of_four_column_ssyt() {
        let t = SetValuedTableau::from_ssyt_rows(&[
            vec![1, 2, 4, 7],
            vec![3, 5, 6],
            vec![4, 8],
            vec![6],
        ])
        .unwrap();
        assert_eq!(t.column_word(), vec![6, 4, 3, 1, 8, 5, 2, 6, 4, 7]);
        let key = right_key_ssyt(&t);
        assert_eq!(
            key.columns(),
            vec![vec![2, 4, 7, 8], vec![4, 7, 8], vec![4, 7], vec![7]]
        );
        assert_eq!(
            key.rows(),
            vec![vec![2, 4, 4, 7], vec![4, 7, 7], vec![7, 8], vec![8]]
        );
    }

    #[test]
    fn right_key_of_highest_weight_is_itself() {
        let shape = Partition::new(vec![3, 2, 2, 1]).unwrap();
        let u = SetValuedTableau::highest_weight(&shape);
        assert_eq!(right_key_ssyt(&u).as_tableau(), &u);
        let one = SetValuedTableau::from_ssyt_rows(&[vec![5]]).unwrap();
        assert_eq!(right_key_ssyt(&one).rows(), vec![vec![5]]);
    }

    #[test]
    fn right_key_svt_examples() {
        let t = svt(&[
            vec![vec![1], vec![1, 3], vec![3, 6]],
            vec![vec![2, 3], vec![4, 7]],
            vec![vec![5, 6, 7]],
        ]);
        let key = right_key_svt(&t);
        assert_eq!(key.columns(), vec![vec![3, 6, 7], vec![6, 7], vec![6]]);
        assert_eq!(key.rows(), vec![vec![3, 6, 6], vec![6, 7], vec![7]]);
        assert_eq!(right_key_oracle(&t).unwrap(), key);

        let small = svt(&[vec![vec![1], vec![2, 3]], vec![vec![3]]]);
        assert_eq!(right_key_svt(&small).rows(), vec![vec![2, 3], vec![3]]);
    }

    #[test]
    fn oracle_on_two_selections() {
        let t = svt(&[vec![vec![1], vec![2, 3]], vec![vec![3]]]);
        let keys: Vec<_> = t
            .expand()
            .iter()
            .map(|p| right_key_ssyt(p).rows())
            .collect();
        assert_eq!(
            keys,
            vec![vec![vec![2, 2], vec![3]], vec![vec![1, 3], vec![3]]]
        );
        assert_eq!(
            right_key_oracle(&t).unwrap().rows(),
            vec![vec![2, 3], vec![3]]
        );
    }

    #[test]
    fn oracle_guard() {
        // one row of eleven disjoint 4-element cells
        let row: Vec<Vec<u32>> = (0..11u32)
            .map(|c| (4 * c + 1..=4 * c + 4).collect())
            .collect();
        let t = svt(&[row]);
        assert_eq!(
            right_key_oracle(&t),
            Err(KeyError::OracleGuard(4u64.pow(11)))
        );
    }

    #[test]
    fn key_leq_examples() {
        let k = key_of(&comp(&[1, 0, 2]));
        assert_eq!(key_leq(&k, &k), Ok(true));
        let hi = key_of(&comp(&[2, 1]));
        assert_eq!(k.rows(), vec![vec![1, 3], vec![3]]);
        assert_eq!(key_leq(&k, &hi), Ok(false));
        assert_eq!(key_leq(&hi, &k), Ok(true));
        assert_eq!(
            key_leq(&k, &key_of(&comp(&[1, 1]))),
            Err(KeyError::ShapeMismatch)
        );
    }

    #[test]
    fn membership_examples() {
        let alpha = comp(&[1, 0, 2]);
        let bad = svt(&[vec![vec![2], vec![2]], vec![vec![3]]]);
        assert!(!in_svt(&bad, &alpha));
        let lambda = Partition::new(vec![2, 1]).unwrap();
        let u = SetValuedTableau::highest_weight(&lambda);
        assert!(in_svt(&u, &lambda.as_composition()));
        assert!(in_atom(&u, &lambda.as_composition()));

        let low = svt(&[vec![vec![1], vec![1]], vec![vec![2]]]);
        assert!(!in_atom(&low, &alpha));
        assert_eq!(right_key_svt(&low), key_of(&comp(&[2, 1])));
        let top = svt(&[vec![vec![1], vec![3]], vec![vec![3]]]);
        assert!(in_atom(&top, &alpha));
        // wrong shape is never a member
        let row = svt(&[vec![vec![1], vec![1], vec![3]]]);
        assert!(!in_svt(&row, &alpha));
    }
}
