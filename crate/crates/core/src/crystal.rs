//! Crystal operators on set-valued tableaux.
//!
//! For a fixed `i`, each cell meeting `{i, i+1}` contributes one token to the
//! i-word: `)` for `i` alone, `(` for `i+1` alone and `)-(` for both. After
//! matching parentheses (the `-` is ignored), the word splits into contiguous
//! classes, each of which is a null, left, right or combined form. The
//! square-root operators `f′`/`e′` rewrite one class at a time:
//!
//! ```text
//!   right            combined           left
//!   )        <->     )-(        <->     (
//!   )-(u)    <->     )-(u)-(    <->     (u)-(
//! ```
//!
//! and `f = f′∘f′`, `e = e′∘e′`. A missing result (the crystal's zero) is
//! `None`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::starkeys::{in_atom, in_svt};
use crate::tableaux::{sort_to_partition, Composition, EntrySet, Partition, SetValuedTableau};

/// Default cap on the number of tableaux [`generate_bn`] may produce.
pub const DEFAULT_BN_LIMIT: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrystalError {
    #[error("shape with {rows} rows has no filling with entries in 1..={n}")]
    InfeasibleShape { rows: usize, n: usize },
    #[error("enumeration exceeded the limit of {0} tableaux")]
    SizeGuardExceeded(usize),
    #[error("invalid i-word character {0:?}")]
    BadWord(char),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Token {
    /// `)`: the cell holds `i` but not `i+1`.
    Right,
    /// `(`: the cell holds `i+1` but not `i`.
    Left,
    /// `)-(`: the cell holds both.
    Both,
}

impl Token {
    fn opens(self) -> bool {
        matches!(self, Token::Left | Token::Both)
    }

    fn closes(self) -> bool {
        matches!(self, Token::Right | Token::Both)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IWord {
    tokens: Vec<Token>,
    /// Cell `(row, col)` each token was read from; empty for parsed words.
    origin: Vec<(usize, usize)>,
}

impl IWord {
    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn origin(&self) -> &[(usize, usize)] {
        &self.origin
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }
}

impl fmt::Display for IWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tokens {
            f.write_str(match t {
                Token::Right => ")",
                Token::Left => "(",
                Token::Both => ")-(",
            })?;
        }
        Ok(())
    }
}

impl FromStr for IWord {
    type Err = CrystalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        let mut tokens = Vec::new();
        let mut k = 0;
        while k < bytes.len() {
            match bytes[k] {
                b'(' => {
                    tokens.push(Token::Left);
                    k += 1;
                }
                b')' if bytes.get(k + 1) == Some(&b'-') => {
                    if bytes.get(k + 2) != Some(&b'(') {
                        return Err(CrystalError::BadWord('-'));
                    }
                    tokens.push(Token::Both);
                    k += 3;
                }
                b')' => {
                    tokens.push(Token::Right);
                    k += 1;
                }
                _ => {
                    let c = s[k..].chars().next().unwrap_or('?');
                    return Err(CrystalError::BadWord(c));
                }
            }
        }
        Ok(IWord {
            tokens,
            origin: Vec::new(),
        })
    }
}

/// The i-word of `t`, read in column order.
pub fn i_word(t: &SetValuedTableau, i: usize) -> IWord {
    let (lo, hi) = (i as u32, i as u32 + 1);
    let mut tokens = Vec::new();
    let mut origin = Vec::new();
    for (pos, cell) in t.column_order() {
        let token = match (cell.contains(lo), cell.contains(hi)) {
            (true, true) => Token::Both,
            (true, false) => Token::Right,
            (false, true) => Token::Left,
            (false, false) => continue,
        };
        tokens.push(token);
        origin.push(pos);
    }
    IWord { tokens, origin }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    Null,
    Left,
    Right,
    Combined,
}

/// A class of tokens `start..end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormClass {
    pub start: usize,
    pub end: usize,
    pub form: Form,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormDecomposition {
    classes: Vec<FormClass>,
}

impl FormDecomposition {
    pub fn classes(&self) -> &[FormClass] {
        &self.classes
    }

    pub fn count(&self, form: Form) -> usize {
        self.classes.iter().filter(|c| c.form == form).count()
    }

    pub fn combined(&self) -> Option<FormClass> {
        self.classes
            .iter()
            .copied()
            .find(|c| c.form == Form::Combined)
    }

    pub fn last_right(&self) -> Option<FormClass> {
        self.classes
            .iter()
            .copied()
            .rev()
            .find(|c| c.form == Form::Right)
    }

    pub fn first_left(&self) -> Option<FormClass> {
        self.classes.iter().copied().find(|c| c.form == Form::Left)
    }

    /// The forms in order, null classes skipped.
    pub fn pattern(&self) -> Vec<Form> {
        self.classes
            .iter()
            .map(|c| c.form)
            .filter(|&f| f != Form::Null)
            .collect()
    }
}

/// Splits an i-word into its classes.
///
/// A matched pair and everything between it share a class, as do the three
/// characters of a `)-(`. Since matched pairs nest, each class is the union
/// of overlapping token intervals.
pub fn decompose_forms(word: &IWord) -> FormDecomposition {
    let tokens = &word.tokens;
    let n = tokens.len();
    // furthest token reached by a pair opened at each token
    let mut reach: Vec<usize> = (0..n).collect();
    let mut close_unpaired = vec![false; n];
    let mut open_unpaired = vec![false; n];
    let mut open_stack: Vec<usize> = Vec::new();
    for (k, &tok) in tokens.iter().enumerate() {
        if tok.closes() {
            match open_stack.pop() {
                Some(j) => reach[j] = reach[j].max(k),
                None => close_unpaired[k] = true,
            }
        }
        if tok.opens() {
            open_stack.push(k);
        }
    }
    for j in open_stack {
        open_unpaired[j] = true;
    }

    let mut classes = Vec::new();
    let mut start = 0;
    while start < n {
        let mut end = start;
        let mut k = start;
        while k <= end {
            end = end.max(reach[k]);
            k += 1;
        }
        let first = start;
        let last = end;
        let starts_open = tokens[first].closes() && close_unpaired[first];
        let ends_open = tokens[last].opens() && open_unpaired[last];
        let form = match (starts_open, ends_open) {
            (false, false) => Form::Null,
            (false, true) => Form::Left,
            (true, false) => Form::Right,
            (true, true) => Form::Combined,
        };
        classes.push(FormClass {
            start,
            end: end + 1,
            form,
        });
        start = end + 1;
    }
    FormDecomposition { classes }
}

/// Number of left forms in the i-word.
pub fn epsilon(t: &SetValuedTableau, i: usize) -> usize {
    decompose_forms(&i_word(t, i)).count(Form::Left)
}

/// Number of right forms in the i-word.
pub fn phi(t: &SetValuedTableau, i: usize) -> usize {
    decompose_forms(&i_word(t, i)).count(Form::Right)
}

/// Where a square-root operator edits the tableau, if anywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Edit {
    Add { cell: (usize, usize), value: u32 },
    Remove { cell: (usize, usize), value: u32 },
}

fn apply_edits(t: &SetValuedTableau, edits: &[Edit]) -> SetValuedTableau {
    let mut rows = t.rows().to_vec();
    for &edit in edits {
        match edit {
            Edit::Add {
                cell: (r, c),
                value,
            } => rows[r - 1][c - 1] = rows[r - 1][c - 1].insert(value),
            Edit::Remove {
                cell: (r, c),
                value,
            } => rows[r - 1][c - 1] = rows[r - 1][c - 1].remove(value),
        }
    }
    SetValuedTableau::from_rows_unchecked(rows)
}

/// The edit `f′_i` performs on `t`.
///
/// With a combined form, its leading `)-(` loses `i`. Otherwise the final
/// `)` of the last right form gains `i+1`.
pub fn f_prime_edit(t: &SetValuedTableau, i: usize) -> Option<Edit> {
    let word = i_word(t, i);
    let forms = decompose_forms(&word);
    if let Some(c) = forms.combined() {
        return Some(Edit::Remove {
            cell: word.origin[c.start],
            value: i as u32,
        });
    }
    forms.last_right().map(|c| Edit::Add {
        cell: word.origin[c.end - 1],
        value: i as u32 + 1,
    })
}

/// The edit `e′_i` performs on `t`.
///
/// With a combined form, its trailing `)-(` loses `i+1`. Otherwise the
/// leading `(` of the first left form gains `i`.
pub fn e_prime_edit(t: &SetValuedTableau, i: usize) -> Option<Edit> {
    let word = i_word(t, i);
    let forms = decompose_forms(&word);
    if let Some(c) = forms.combined() {
        return Some(Edit::Remove {
            cell: word.origin[c.end - 1],
            value: i as u32 + 1,
        });
    }
    forms.first_left().map(|c| Edit::Add {
        cell: word.origin[c.start],
        value: i as u32,
    })
}

pub fn f_prime(t: &SetValuedTableau, i: usize) -> Option<SetValuedTableau> {
    f_prime_edit(t, i).map(|e| apply_edits(t, &[e]))
}

pub fn e_prime(t: &SetValuedTableau, i: usize) -> Option<SetValuedTableau> {
    e_prime_edit(t, i).map(|e| apply_edits(t, &[e]))
}

/// `f_i`, applied directly from the word rule.
///
/// Without a combined form the last right form becomes a left form; with
/// one, the combined form becomes left and the last right form combined.
/// Either way `i` leaves the first token of one class and `i+1` joins the
/// last token of the last right form. Agrees with `f′_i ∘ f′_i`.
pub fn f(t: &SetValuedTableau, i: usize) -> Option<SetValuedTableau> {
    let word = i_word(t, i);
    let forms = decompose_forms(&word);
    let right = forms.last_right()?;
    let from = forms.combined().unwrap_or(right);
    Some(apply_edits(
        t,
        &[
            Edit::Add {
                cell: word.origin[right.end - 1],
                value: i as u32 + 1,
            },
            Edit::Remove {
                cell: word.origin[from.start],
                value: i as u32,
            },
        ],
    ))
}

/// `e_i`, applied directly from the word rule; agrees with `e′_i ∘ e′_i`.
pub fn e(t: &SetValuedTableau, i: usize) -> Option<SetValuedTableau> {
    let word = i_word(t, i);
    let forms = decompose_forms(&word);
    let left = forms.first_left()?;
    let from = forms.combined().unwrap_or(left);
    Some(apply_edits(
        t,
        &[
            Edit::Add {
                cell: word.origin[left.start],
                value: i as u32,
            },
            Edit::Remove {
                cell: word.origin[from.end - 1],
                value: i as u32 + 1,
            },
        ],
    ))
}

fn walk<F>(t: &SetValuedTableau, op: F) -> Vec<SetValuedTableau>
where
    F: Fn(&SetValuedTableau) -> Option<SetValuedTableau>,
{
    let mut out = vec![t.clone()];
    while let Some(next) = op(out.last().unwrap()) {
        out.push(next);
    }
    out
}

/// The double i-string through `t`, from its source to its end.
pub fn double_string(t: &SetValuedTableau, i: usize) -> Vec<SetValuedTableau> {
    let source = walk(t, |x| e_prime(x, i)).pop().unwrap();
    walk(&source, |x| f_prime(x, i))
}

/// The i-string through `t` under `f_i`/`e_i`.
pub fn i_string(t: &SetValuedTableau, i: usize) -> Vec<SetValuedTableau> {
    let source = walk(t, |x| e(x, i)).pop().unwrap();
    walk(&source, |x| f(x, i))
}

/// Closes `seeds` under repeated application of `op`.
pub fn close_under<F>(seeds: BTreeSet<SetValuedTableau>, op: F) -> BTreeSet<SetValuedTableau>
where
    F: Fn(&SetValuedTableau) -> Option<SetValuedTableau>,
{
    let mut seen = seeds.clone();
    let mut queue: VecDeque<SetValuedTableau> = seeds.into_iter().collect();
    while let Some(t) = queue.pop_front() {
        if let Some(next) = op(&t) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Starts at `u_λ` and closes under `op(·, i)` for `i = i_k, ..., i_1`,
/// where `α = s_{i_1} ... s_{i_k} λ` is the minimal sorting word.
pub fn generate_with<F>(alpha: &Composition, op: F) -> BTreeSet<SetValuedTableau>
where
    F: Fn(&SetValuedTableau, usize) -> Option<SetValuedTableau>,
{
    let (lambda, word) = sort_to_partition(alpha);
    let mut set = BTreeSet::from([SetValuedTableau::highest_weight(&lambda)]);
    for &i in word.iter().rev() {
        set = close_under(set, |t| op(t, i));
    }
    set
}

/// `SSYT(α)` generated by the lowering operators `f_i`.
pub fn generate_ssyt(alpha: &Composition) -> BTreeSet<SetValuedTableau> {
    generate_with(alpha, f)
}

/// `SVT(α)` generated by the square roots `f′_i`.
pub fn generate_svt(alpha: &Composition) -> BTreeSet<SetValuedTableau> {
    generate_with(alpha, f_prime)
}

/// Every set-valued tableau of shape `λ` with entries in `1..=n`.
pub fn generate_bn(lambda: &Partition, n: usize) -> Result<Vec<SetValuedTableau>, CrystalError> {
    generate_bn_limited(lambda, n, DEFAULT_BN_LIMIT)
}

/// [`generate_bn`] with an explicit cap on the number of results.
pub fn generate_bn_limited(
    lambda: &Partition,
    n: usize,
    limit: usize,
) -> Result<Vec<SetValuedTableau>, CrystalError> {
    if lambda.rows() > n {
        return Err(CrystalError::InfeasibleShape {
            rows: lambda.rows(),
            n,
        });
    }
    if n > crate::tableaux::MAX_ENTRY as usize {
        return Err(CrystalError::SizeGuardExceeded(limit));
    }
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<EntrySet>> = lambda
        .parts()
        .iter()
        .map(|&len| vec![EntrySet::EMPTY; len as usize])
        .collect();
    let mut out = Vec::new();
    fill_cells(&cells, 0, n as u32, &mut rows, &mut out, limit)?;
    Ok(out)
}

fn fill_cells(
    cells: &[(usize, usize)],
    k: usize,
    n: u32,
    rows: &mut Vec<Vec<EntrySet>>,
    out: &mut Vec<SetValuedTableau>,
    limit: usize,
) -> Result<(), CrystalError> {
    let Some(&(r, c)) = cells.get(k) else {
        if out.len() >= limit {
            return Err(CrystalError::SizeGuardExceeded(limit));
        }
        out.push(SetValuedTableau::from_rows(rows.clone()).expect("backtracking keeps validity"));
        return Ok(());
    };
    let left = if c > 0 {
        rows[r][c - 1].largest().unwrap()
    } else {
        1
    };
    let above = if r > 0 {
        rows[r - 1][c].largest().unwrap() + 1
    } else {
        1
    };
    let lo = left.max(above);
    if lo > n {
        return Ok(());
    }
    let width = n - lo + 1;
    for bits in 1u64..(1u64 << width) {
        let set = EntrySet::from_values((0..width).filter(|b| bits >> b & 1 == 1).map(|b| lo + b));
        rows[r][c] = set;
        fill_cells(cells, k + 1, n, rows, out, limit)?;
    }
    rows[r][c] = EntrySet::EMPTY;
    Ok(())
}

/// `SVT(α)` by filtering all tableaux of shape `α⁺` with entries at most
/// `support(α)`.
pub fn enumerate_svt(alpha: &Composition) -> Result<BTreeSet<SetValuedTableau>, CrystalError> {
    let all = generate_bn(&alpha.to_partition(), alpha.support())?;
    Ok(all.into_iter().filter(|t| in_svt(t, alpha)).collect())
}

/// Tableaux whose right key equals `key(α)`.
pub fn enumerate_atom(alpha: &Composition) -> Result<BTreeSet<SetValuedTableau>, CrystalError> {
    let all = generate_bn(&alpha.to_partition(), alpha.support())?;
    Ok(all.into_iter().filter(|t| in_atom(t, alpha)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeKind {
    /// `f_i`, drawn solid.
    Lower,
    /// `f′_i`, drawn dashed.
    HalfLower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: usize,
    pub kind: EdgeKind,
}

/// The crystal graph induced on a set of tableaux.
#[derive(Debug, Clone)]
pub struct CrystalGraph {
    pub nodes: Vec<SetValuedTableau>,
    pub edges: Vec<Edge>,
}

impl CrystalGraph {
    /// Nodes keep the given order; edges leaving the set are dropped.
    pub fn build(nodes: Vec<SetValuedTableau>, labels: &[usize]) -> Self {
        let index: BTreeMap<&SetValuedTableau, usize> =
            nodes.iter().enumerate().map(|(k, t)| (t, k)).collect();
        let mut edges = Vec::new();
        for (from, t) in nodes.iter().enumerate() {
            for &i in labels {
                for (kind, target) in [
                    (EdgeKind::Lower, f(t, i)),
                    (EdgeKind::HalfLower, f_prime(t, i)),
                ] {
                    if let Some(&to) = target.as_ref().and_then(|y| index.get(y)) {
                        edges.push(Edge {
                            from,
                            to,
                            label: i,
                            kind,
                        });
                    }
                }
            }
        }
        CrystalGraph { nodes, edges }
    }

    /// Sizes of the weakly connected components, largest first.
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.nodes.len()).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = (root(&mut parent, e.from), root(&mut parent, e.to));
            parent[a] = b;
        }
        let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
        for x in 0..self.nodes.len() {
            *sizes.entry(root(&mut parent, x)).or_default() += 1;
        }
        let mut out: Vec<usize> = sizes.into_values().collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n  node [shape=box];\n");
        for (k, t) in self.nodes.iter().enumerate() {
            let label = t.to_json().replace('"', "\\\"");
            s.push_str(&format!("  n{k} [label=\"{label}\"];\n"));
        }
        for e in &self.edges {
            let style = match e.kind {
                EdgeKind::Lower => "",
                EdgeKind::HalfLower => ", style=dashed",
            };
            s.push_str(&format!(
                "  n{} -> n{} [label=\"{}\"{style}];\n",
                e.from, e.to, e.label
            ));
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn svt(rows: &[Vec<Vec<u32>>]) -> SetValuedTableau {
        SetValuedTableau::from_values(rows).unwrap()
    }

    fn word(s: &str) -> IWord {
        s.parse().unwrap()
    }

    /// The tableau with rows `1 1 2 {2,3} / 2 {2,3} / {3,4}`.
    fn sample() -> SetValuedTableau {
        svt(&[
            vec![vec![1], vec![1], vec![2], vec![2, 3]],
            vec![vec![2], vec![2, 3]],
            vec![vec![3, 4]],
        ])
    }

    #[test]
    fn i_words_of_sample() {
        let t = sample();
        assert_eq!(i_word(&t, 1).to_string(), "()()((");
        assert_eq!(i_word(&t, 2).to_string(), "())-())-(");
        // both {2,3} cells hold 3 without 4
        assert_eq!(i_word(&t, 3).to_string(), ")-())");
        assert_eq!(i_word(&t, 2).origin()[0], (3, 1));
    }

    #[test]
    fn word_parsing() {
        assert_eq!(word("))-(").tokens(), &[Token::Right, Token::Both]);
        assert_eq!(word(")-()").to_string(), ")-()");
        assert!("x".parse::<IWord>().is_err());
        assert!(")-)".parse::<IWord>().is_err());
    }

    fn spans(w: &str) -> Vec<(String, Form)> {
        let w = word(w);
        decompose_forms(&w)
            .classes()
            .iter()
            .map(|c| {
                let sub = IWord {
                    tokens: w.tokens()[c.start..c.end].to_vec(),
                    origin: Vec::new(),
                };
                (sub.to_string(), c.form)
            })
            .collect()
    }

    #[test]
    fn four_class_example() {
        assert_eq!(
            spans("))-(())-())-(()-("),
            vec![
                (")".into(), Form::Right),
                (")-(())-()".into(), Form::Right),
                (")-(".into(), Form::Combined),
                ("()-(".into(), Form::Left),
            ]
        );
        let d = decompose_forms(&word("))-(())-())-(()-("));
        assert_eq!(d.count(Form::Left), 1);
        assert_eq!(d.count(Form::Right), 2);
    }

    #[test]
    fn form_shapes() {
        assert!(spans("").is_empty());
        assert_eq!(spans("()"), vec![("()".into(), Form::Null)]);
        assert_eq!(spans("(()-())-()"), vec![("(()-())-()".into(), Form::Null)]);
        assert_eq!(spans("(())-("), vec![("(())-(".into(), Form::Left)]);
        assert_eq!(spans(")-()-()"), vec![(")-()-()".into(), Form::Right)]);
        assert_eq!(
            spans(")-()-(())-("),
            vec![(")-()-(())-(".into(), Form::Combined)]
        );
        let d = decompose_forms(&word(")-("));
        assert_eq!(d.count(Form::Left) + d.count(Form::Right), 0);
    }

    #[test]
    fn f_prime_on_sample() {
        let t = sample();
        let t1 = f_prime(&t, 2).unwrap();
        assert_eq!(
            t1,
            svt(&[
                vec![vec![1], vec![1], vec![2], vec![3]],
                vec![vec![2], vec![2, 3]],
                vec![vec![3, 4]],
            ])
        );
        assert_eq!(i_word(&t1, 2).to_string(), "())-()(");
        let t2 = f_prime(&t1, 2).unwrap();
        let expected = svt(&[
            vec![vec![1], vec![1], vec![2, 3], vec![3]],
            vec![vec![2], vec![2, 3]],
            vec![vec![3, 4]],
        ]);
        assert_eq!(t2, expected);
        assert_eq!(f(&t, 2).unwrap(), expected);
        assert_eq!(e_prime(&t2, 2).unwrap(), t1);
        assert_eq!(e_prime(&t1, 2).unwrap(), t);
        assert_eq!(e(&expected, 2).unwrap(), t);
    }

    #[test]
    fn bottom_cases() {
        let u = SetValuedTableau::highest_weight(&Partition::new(vec![2, 1]).unwrap());
        // 1-word "())" and 2-word ")" each end in a right form
        assert!(f_prime(&u, 1).is_some());
        assert!(f_prime(&u, 2).is_some());
        assert!(f_prime(&u, 3).is_none());
        assert!(e_prime(&u, 1).is_none());
        assert!(f_prime(&u, 5).is_none());
    }

    #[test]
    fn e_prime_removes_from_combined() {
        let t = svt(&[vec![vec![1], vec![2, 3]], vec![vec![2]]]);
        assert_eq!(i_word(&t, 2).to_string(), "))-(");
        assert_eq!(
            e_prime(&t, 2).unwrap(),
            svt(&[vec![vec![1], vec![2]], vec![vec![2]]])
        );
    }

    #[test]
    fn two_string() {
        let t = svt(&[vec![vec![1], vec![2]], vec![vec![2]]]);
        let s = i_string(&t, 2);
        assert_eq!(
            s,
            vec![
                t.clone(),
                svt(&[vec![vec![1], vec![3]], vec![vec![2]]]),
                svt(&[vec![vec![1], vec![3]], vec![vec![3]]]),
            ]
        );
        assert!(f(&s[2], 2).is_none());
    }

    #[test]
    fn double_two_strings() {
        let t = svt(&[vec![vec![1], vec![2]], vec![vec![2]]]);
        let s = double_string(&t, 2);
        assert_eq!(
            s,
            vec![
                t.clone(),
                svt(&[vec![vec![1], vec![2, 3]], vec![vec![2]]]),
                svt(&[vec![vec![1], vec![3]], vec![vec![2]]]),
                svt(&[vec![vec![1], vec![3]], vec![vec![2, 3]]]),
                svt(&[vec![vec![1], vec![3]], vec![vec![3]]]),
            ]
        );
        let t = svt(&[vec![vec![1], vec![1]], vec![vec![2]]]);
        assert_eq!(
            double_string(&t, 2),
            vec![
                t.clone(),
                svt(&[vec![vec![1], vec![1]], vec![vec![2, 3]]]),
                svt(&[vec![vec![1], vec![1]], vec![vec![3]]]),
            ]
        );
        let lone = svt(&[vec![vec![1]]]);
        assert_eq!(double_string(&lone, 3), vec![lone.clone()]);
    }

    #[test]
    fn generate_small() {
        let one = |v: u32| svt(&[vec![vec![v]]]);
        assert_eq!(
            generate_ssyt(&Composition::from(vec![0, 1])),
            BTreeSet::from([one(1), one(2)])
        );
        let lambda = Composition::from(vec![3, 1]);
        assert_eq!(generate_svt(&lambda).len(), 1);
        assert_eq!(generate_ssyt(&Composition::from(vec![1, 0, 2])).len(), 5);
        assert_eq!(generate_svt(&Composition::from(vec![1, 0, 2])).len(), 13);
    }

    #[test]
    fn bn_enumeration() {
        let p = |v: Vec<u32>| Partition::new(v).unwrap();
        assert_eq!(generate_bn(&p(vec![1]), 2).unwrap().len(), 3);
        assert_eq!(
            generate_bn(&p(vec![1, 1]), 2).unwrap(),
            vec![svt(&[vec![vec![1]], vec![vec![2]]])]
        );
        assert_eq!(
            generate_bn(&p(vec![1, 1, 1]), 2),
            Err(CrystalError::InfeasibleShape { rows: 3, n: 2 })
        );
        assert_eq!(
            generate_bn_limited(&p(vec![2, 1]), 3, 5),
            Err(CrystalError::SizeGuardExceeded(5))
        );
        assert_eq!(generate_bn(&Partition::default(), 0).unwrap().len(), 1);
        let b3 = generate_bn(&p(vec![2, 1]), 3).unwrap();
        let svt102 = generate_svt(&Composition::from(vec![1, 0, 2]));
        assert!(svt102.iter().all(|t| b3.contains(t)));
        assert!(b3.len() > svt102.len());
    }

    #[test]
    fn graph_components() {
        let nodes: Vec<_> = generate_svt(&Composition::from(vec![1, 0, 2]))
            .into_iter()
            .collect();
        let g = CrystalGraph::build(nodes, &[2]);
        assert_eq!(g.component_sizes(), vec![5, 5, 3]);
        let dot = g.to_dot();
        assert!(dot.starts_with("digraph crystal {"));
        assert!(dot.contains("style=dashed"));

        let u = SetValuedTableau::highest_weight(&Partition::new(vec![2]).unwrap());
        let g = CrystalGraph::build(vec![u], &[2]);
        assert_eq!((g.nodes.len(), g.edges.len()), (1, 0));
    }
}
