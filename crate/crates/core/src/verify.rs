//! Bounded exhaustive cross-checks between the independent routes.
//!
//! Each suite enumerates every instance within [`Bounds`] and records the
//! instances where two routes disagree. [`Fault::FirstRightForm`] swaps in a
//! deliberately wrong `f′` so the suites can be shown to catch a bad edit.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::crystal::{
    decompose_forms, double_string, e, e_prime, enumerate_atom, enumerate_svt, epsilon, f, f_prime,
    generate_bn, generate_with, i_string, i_word, phi, Form,
};
use crate::poly::{
    atom, generating_function, grothendieck, key_poly, lascoux, pi, pi_beta, PolyError, Polynomial,
};
use crate::starkeys::{key_leq, right_key_oracle, right_key_svt, ORACLE_LIMIT};
use crate::tableaux::{key_of, Composition, Partition, SetValuedTableau};

type Op = fn(&SetValuedTableau, usize) -> Option<SetValuedTableau>;

#[derive(Debug, Clone)]
pub struct Bounds {
    /// Compositions range over length `max_support` vectors ...
    pub max_support: usize,
    /// ... with entries in `0..=max_entry`.
    pub max_entry: u32,
    /// Crystal and right-key suites use entries up to `max_n` ...
    pub max_n: usize,
    /// ... and every shape contained in `shape`.
    pub shape: Partition,
    pub random_samples: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_support: 3,
            max_entry: 3,
            max_n: 4,
            shape: Partition::new(vec![3, 2, 1]).unwrap(),
            random_samples: 100,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fault {
    #[default]
    None,
    /// `f′` edits the first right form instead of the last.
    FirstRightForm,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: usize,
    /// Up to [`SuiteReport::SAMPLE`] failure descriptions.
    pub samples: Vec<String>,
}

impl SuiteReport {
    const SAMPLE: usize = 5;

    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            checks: 0,
            failures: 0,
            samples: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.samples.len() < Self::SAMPLE {
                self.samples.push(describe());
            }
        }
    }

    fn error(&mut self, context: &str, err: impl std::fmt::Display) {
        self.check(false, || format!("{context}: {err}"));
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn faulty_f_prime(t: &SetValuedTableau, i: usize) -> Option<SetValuedTableau> {
    let word = i_word(t, i);
    let forms = decompose_forms(&word);
    if forms.combined().is_some() {
        return f_prime(t, i);
    }
    let first = forms.classes().iter().find(|c| c.form == Form::Right)?;
    let (r, c) = word.origin()[first.end - 1];
    let set = t.cell(r, c)?.insert(i as u32 + 1);
    t.with_cell(r, c, set).ok()
}

fn f_prime_for(fault: Fault) -> Op {
    match fault {
        Fault::None => f_prime,
        Fault::FirstRightForm => faulty_f_prime,
    }
}

/// All weak compositions of length `len` with entries at most `max`.
pub fn compositions(len: usize, max: u32) -> Vec<Composition> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=max).map(move |a| {
                    let mut v = v.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Composition::new).collect()
}

/// Rearrangements `γ` of `α` (within its support) with `key(γ) <= key(α)`.
pub fn bruhat_interval(alpha: &Composition) -> Vec<Composition> {
    let key = key_of(alpha);
    let lambda = alpha.to_partition();
    compositions(
        alpha.support(),
        alpha.entries().iter().copied().max().unwrap_or(0),
    )
    .into_iter()
    .filter(|g| g.to_partition() == lambda)
    .collect::<BTreeSet<_>>()
    .into_iter()
    .filter(|g| key_leq(&key_of(g), &key) == Ok(true))
    .collect()
}

pub fn run_all(bounds: &Bounds, fault: Fault) -> Vec<SuiteReport> {
    vec![
        svt_generation(bounds, fault),
        atoms(bounds),
        specializations(bounds),
        right_key_agreement(bounds),
        crystal_axioms(bounds, fault),
        double_strings(bounds, fault),
        operator_algebra(bounds),
    ]
}

/// Operator recursion vs. crystal generation vs. filtered enumeration.
pub fn svt_generation(bounds: &Bounds, fault: Fault) -> SuiteReport {
    let mut report = SuiteReport::new("svt-generation");
    let op = f_prime_for(fault);
    for alpha in compositions(bounds.max_support, bounds.max_entry) {
        let n = alpha.support();
        let generated = generate_with(&alpha, op);
        let filtered = match enumerate_svt(&alpha) {
            Ok(s) => s,
            Err(err) => {
                report.error(&format!("enumerate {alpha}"), err);
                continue;
            }
        };
        report.check(generated == filtered, || {
            format!(
                "{alpha}: crystal gives {} tableaux, filter gives {}",
                generated.len(),
                filtered.len()
            )
        });
        match (lascoux(&alpha, n), generating_function(&generated, n)) {
            (Ok(lhs), Ok(rhs)) => report.check(lhs == rhs, || {
                format!("{alpha}: operator {lhs} != tableau sum {rhs}")
            }),
            (Err(err), _) | (_, Err(err)) => report.error(&alpha.to_string(), err),
        }
    }
    report
}

/// Atom recursion vs. atom tableaux, and atoms summing to the polynomial.
pub fn atoms(bounds: &Bounds) -> SuiteReport {
    let mut report = SuiteReport::new("atoms");
    for alpha in compositions(bounds.max_support, bounds.max_entry) {
        let n = alpha.support();
        let result: Result<(), PolyError> = (|| {
            let a = atom(&alpha, n)?;
            let set = enumerate_atom(&alpha)?;
            let rhs = generating_function(&set, n)?;
            report.check(a == rhs, || {
                format!("{alpha}: atom {a} != tableau sum {rhs}")
            });
            let sum = bruhat_interval(&alpha)
                .iter()
                .map(|g| atom(g, n))
                .try_fold(Polynomial::zero(n), |acc, p| p.map(|p| &acc + &p))?;
            let l = lascoux(&alpha, n)?;
            report.check(sum == l, || format!("{alpha}: atom sum {sum} != {l}"));
            let svt = enumerate_svt(&alpha)?;
            let union: BTreeSet<SetValuedTableau> = bruhat_interval(&alpha)
                .iter()
                .map(enumerate_atom)
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .flatten()
                .collect();
            report.check(union == svt, || {
                format!("{alpha}: atom sets do not partition SVT")
            });
            Ok(())
        })();
        if let Err(err) = result {
            report.error(&alpha.to_string(), err);
        }
    }
    report
}

/// β = 0 collapses to key polynomials; increasing α gives Grothendieck.
pub fn specializations(bounds: &Bounds) -> SuiteReport {
    let mut report = SuiteReport::new("specializations");
    for alpha in compositions(bounds.max_support, bounds.max_entry) {
        let n = alpha.support();
        let result: Result<(), PolyError> = (|| {
            let l = lascoux(&alpha, n)?;
            let k = key_poly(&alpha, n)?;
            report.check(l.at_beta_zero() == k, || {
                format!("{alpha}: β=0 of {l} != {k}")
            });
            let ssyt = generate_with(&alpha, f);
            let s = generating_function(&ssyt, n)?;
            report.check(s == k, || format!("{alpha}: SSYT sum {s} != {k}"));
            if alpha.entries().windows(2).all(|w| w[0] <= w[1]) {
                let g = grothendieck(&alpha.to_partition(), n)?;
                report.check(g == l, || format!("{alpha}: G = {g} != {l}"));
                for i in 1..n {
                    report.check(g.is_symmetric_in(i)?, || {
                        format!("{alpha}: G not s_{i}-symmetric")
                    });
                }
            }
            Ok(())
        })();
        if let Err(err) = result {
            report.error(&alpha.to_string(), err);
        }
    }
    report
}

fn shapes_and_tableaux(bounds: &Bounds, n: usize) -> Vec<SetValuedTableau> {
    bounds
        .shape
        .subpartitions()
        .into_iter()
        .filter(|l| l.rows() <= n)
        .flat_map(|l| generate_bn(&l, n).unwrap_or_default())
        .collect()
}

/// Column-star right key vs. the maximum over all selections.
pub fn right_key_agreement(bounds: &Bounds) -> SuiteReport {
    let mut report = SuiteReport::new("right-key-oracle");
    for t in shapes_and_tableaux(bounds, bounds.max_n) {
        if t.expansion_count() > ORACLE_LIMIT {
            continue;
        }
        match right_key_oracle(&t) {
            Ok(oracle) => {
                let fast = right_key_svt(&t);
                report.check(fast == oracle, || {
                    format!("{}: star {:?} != oracle {:?}", t.to_json(), fast, oracle)
                });
            }
            Err(err) => report.error(&t.to_json(), err),
        }
    }
    report
}

fn weight_vec(t: &SetValuedTableau, n: usize) -> Vec<i64> {
    t.weight().padded(n).into_iter().map(i64::from).collect()
}

/// Crystal axioms, seminormality and the square-root identities.
pub fn crystal_axioms(bounds: &Bounds, fault: Fault) -> SuiteReport {
    let mut report = SuiteReport::new("crystal-axioms");
    let fp = f_prime_for(fault);
    for n in 1..=bounds.max_n {
        for t in shapes_and_tableaux(bounds, n) {
            let wt = weight_vec(&t, n);
            for i in 1..n {
                let tag = || format!("{} i={i}", t.to_json());
                let half = fp(&t, i);
                if let Some(y) = &half {
                    report.check(
                        SetValuedTableau::from_rows(y.rows().to_vec()).is_ok(),
                        || format!("{}: f′ output invalid", tag()),
                    );
                    report.check(e_prime(y, i).as_ref() == Some(&t), || {
                        format!("{}: e′ does not undo f′", tag())
                    });
                }
                if let Some(x) = e_prime(&t, i) {
                    report.check(fp(&x, i).as_ref() == Some(&t), || {
                        format!("{}: f′ does not undo e′", tag())
                    });
                }
                let lowered = f(&t, i);
                let twice = half.and_then(|y| fp(&y, i));
                report.check(lowered == twice, || format!("{}: f != f′∘f′", tag()));
                let raised = e(&t, i);
                let twice = e_prime(&t, i).and_then(|y| e_prime(&y, i));
                report.check(raised == twice, || format!("{}: e != e′∘e′", tag()));

                let (eps, ph) = (epsilon(&t, i) as i64, phi(&t, i) as i64);
                report.check(ph - eps == wt[i - 1] - wt[i], || {
                    format!("{}: K2 fails", tag())
                });
                if let Some(y) = &raised {
                    let wy = weight_vec(y, n);
                    let mut expect = wt.clone();
                    expect[i - 1] += 1;
                    expect[i] -= 1;
                    report.check(
                        f(y, i).as_ref() == Some(&t)
                            && phi(y, i) as i64 == ph + 1
                            && epsilon(y, i) as i64 == eps - 1
                            && wy == expect,
                        || format!("{}: K1 fails for e", tag()),
                    );
                }
                if let Some(x) = &lowered {
                    report.check(e(x, i).as_ref() == Some(&t), || {
                        format!("{}: e does not undo f", tag())
                    });
                    let mut expect = wt.clone();
                    expect[i - 1] -= 1;
                    expect[i] += 1;
                    report.check(weight_vec(x, n) == expect, || {
                        format!("{}: f shifts weight wrongly", tag())
                    });
                }
                let up = std::iter::successors(Some(t.clone()), |x| e(x, i)).count() as i64 - 1;
                let down = std::iter::successors(Some(t.clone()), |x| f(x, i)).count() as i64 - 1;
                report.check(up == eps && down == ph, || {
                    format!(
                        "{}: not seminormal (ε={eps}, up={up}, φ={ph}, down={down})",
                        tag()
                    )
                });
            }
        }
    }
    report
}

/// Parity, weights, right keys and generating functions of double strings.
pub fn double_strings(bounds: &Bounds, fault: Fault) -> SuiteReport {
    let mut report = SuiteReport::new("double-strings");
    let fp = f_prime_for(fault);
    for n in 1..=bounds.max_n {
        for t in shapes_and_tableaux(bounds, n) {
            for i in 1..n {
                if e_prime(&t, i).is_some() {
                    continue;
                }
                let tag = || format!("{} i={i}", t.to_json());
                let string: Vec<SetValuedTableau> =
                    std::iter::successors(Some(t.clone()), |x| fp(x, i))
                        .take(4 * t.num_cells() + 2)
                        .collect();
                report.check(string.len() % 2 == 1, || format!("{}: even length", tag()));
                for (j, x) in string.iter().enumerate() {
                    let combined = decompose_forms(&i_word(x, i)).combined().is_some();
                    report.check(combined == (j % 2 == 1), || {
                        format!("{}: member {j} has wrong parity", tag())
                    });
                    if j > 0 {
                        let mut expect = weight_vec(&string[j - 1], n);
                        if j % 2 == 1 {
                            expect[i] += 1;
                        } else {
                            expect[i - 1] -= 1;
                        }
                        report.check(weight_vec(x, n) == expect, || {
                            format!("{}: member {j} weight", tag())
                        });
                    }
                }
                let k0 = right_key_svt(&string[0]);
                let alpha = k0.weight();
                report.check(alpha.get(i) >= alpha.get(i + 1), || {
                    format!("{}: source key not i-dominant", tag())
                });
                if string.len() > 1 {
                    let k1 = right_key_svt(&string[1]);
                    let same = string[1..].iter().all(|x| right_key_svt(x) == k1);
                    let allowed = k1 == k0 || k1 == key_of(&alpha.swap(i));
                    report.check(same && allowed, || {
                        format!("{}: right keys along string", tag())
                    });
                }
                for x in &string {
                    if let Some(y) = f(x, i) {
                        if right_key_svt(x) != right_key_svt(&y) {
                            report.check(e_prime(x, i).is_none(), || {
                                format!("{}: key changes away from the source", tag())
                            });
                        }
                    }
                }
                let source = generating_function([&string[0]], n);
                let total = generating_function(&string, n);
                if let (Ok(source), Ok(total)) = (source, total) {
                    let image = pi_beta(&source, i);
                    report.check(image.as_ref() == Ok(&total), || {
                        format!("{}: π^β(source) != string sum", tag())
                    });
                    report.check(pi_beta(&total, i).as_ref() == Ok(&total), || {
                        format!("{}: string sum not π^β-fixed", tag())
                    });
                }
            }
            for i in 1..n {
                if e(&t, i).is_some() {
                    continue;
                }
                let string = i_string(&t, i);
                let k = string.len() - 1;
                for (j, x) in string.iter().enumerate() {
                    let mut mirrored = weight_vec(&string[k - j], n);
                    mirrored.swap(i - 1, i);
                    report.check(weight_vec(x, n) == mirrored, || {
                        format!("{} i={i}: i-string weights not mirrored", t.to_json())
                    });
                }
                let strip = |x: &SetValuedTableau| Polynomial::monomial(n, 1, 0, &t_weight(x, n));
                let sum = string
                    .iter()
                    .map(strip)
                    .fold(Polynomial::zero(n), |acc, p| &acc + &p);
                report.check(pi(&strip(&t), i).as_ref() == Ok(&sum), || {
                    format!("{} i={i}: π(source) != i-string sum", t.to_json())
                });
            }
        }
    }
    for alpha in compositions(bounds.max_support, bounds.max_entry) {
        let n = alpha.support();
        let Ok(members) = enumerate_svt(&alpha) else {
            continue;
        };
        let lambda = alpha.to_partition();
        for t in generate_bn(&lambda, n).unwrap_or_default() {
            for i in 1..n {
                if e_prime(&t, i).is_some() {
                    continue;
                }
                let string = double_string(&t, i);
                let hits = string.iter().filter(|x| members.contains(*x)).count();
                let ok = hits == 0
                    || hits == string.len()
                    || (hits == 1 && members.contains(&string[0]));
                report.check(ok, || format!("{alpha} i={i}: partial double string"));
            }
        }
    }
    report
}

fn t_weight(t: &SetValuedTableau, n: usize) -> Vec<u32> {
    t.weight().padded(n)
}

/// A random polynomial with at most `terms` terms of x-degree at most 5.
pub fn random_polynomial(rng: &mut ChaCha8Rng, n: usize, terms: usize) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for _ in 0..rng.gen_range(1..=terms) {
        let mut exps = vec![0u32; n];
        let degree = rng.gen_range(0..=5);
        for _ in 0..degree {
            exps[rng.gen_range(0..n)] += 1;
        }
        let coeff: i64 = rng.gen_range(-5..=5);
        let beta = rng.gen_range(0..=2);
        p = &p + &Polynomial::monomial(n, coeff, beta, &exps);
    }
    p
}

/// Braid relations, far commutation, idempotence and symmetric fixedness.
pub fn operator_algebra(bounds: &Bounds) -> SuiteReport {
    let mut report = SuiteReport::new("operator-algebra");
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for sample in 0..bounds.random_samples {
        let n = 3 + sample % 2;
        let p = random_polynomial(&mut rng, n, 4);
        let result: Result<(), PolyError> = (|| {
            let op = |q: &Polynomial, word: &[usize]| {
                word.iter()
                    .rev()
                    .try_fold(q.clone(), |acc, &i| pi_beta(&acc, i))
            };
            for i in 1..n - 1 {
                let lhs = op(&p, &[i, i + 1, i])?;
                let rhs = op(&p, &[i + 1, i, i + 1])?;
                report.check(lhs == rhs, || format!("braid {i} fails on {p}"));
            }
            for i in 1..n {
                for j in i + 2..n {
                    report.check(op(&p, &[i, j])? == op(&p, &[j, i])?, || {
                        format!("π_{i}, π_{j} do not commute on {p}")
                    });
                }
                let once = pi_beta(&p, i)?;
                report.check(pi_beta(&once, i)? == once, || {
                    format!("π_{i} not idempotent on {p}")
                });
                let sym = &p + &p.swap_vars(i)?;
                report.check(pi_beta(&sym, i)? == sym, || {
                    format!("π_{i} moves symmetric {sym}")
                });
            }
            Ok(())
        })();
        if let Err(err) = result {
            report.error(&p.to_string(), err);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_range() {
        let all = compositions(3, 3);
        assert_eq!(all.len(), 64);
        assert_eq!(all.iter().collect::<BTreeSet<_>>().len(), 64);
    }

    #[test]
    fn bruhat_interval_of_102() {
        let got: Vec<Vec<u32>> = bruhat_interval(&Composition::from(vec![1, 0, 2]))
            .iter()
            .map(|g| g.padded(3))
            .collect();
        let want: BTreeSet<Vec<u32>> = [[2, 1, 0], [1, 2, 0], [2, 0, 1], [1, 0, 2]]
            .iter()
            .map(|v| v.to_vec())
            .collect();
        assert_eq!(got.into_iter().collect::<BTreeSet<_>>(), want);
    }

    #[test]
    fn small_bounds_pass() {
        let bounds = Bounds {
            max_support: 2,
            max_entry: 2,
            max_n: 3,
            shape: Partition::new(vec![2, 1]).unwrap(),
            random_samples: 4,
            seed: 1,
        };
        for report in run_all(&bounds, Fault::None) {
            assert!(report.passed(), "{}: {:?}", report.name, report.samples);
            assert!(report.checks > 0, "{} ran nothing", report.name);
        }
    }

    #[test]
    fn injected_fault_is_caught() {
        let bounds = Bounds {
            max_support: 3,
            max_entry: 2,
            max_n: 3,
            shape: Partition::new(vec![2, 1]).unwrap(),
            random_samples: 1,
            seed: 1,
        };
        let main = svt_generation(&bounds, Fault::FirstRightForm);
        let axioms = crystal_axioms(&bounds, Fault::FirstRightForm);
        assert!(!main.passed() || !axioms.passed());
        assert!(!axioms.passed());
    }
}
