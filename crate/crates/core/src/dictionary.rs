//! Abstract realizations of the catalog algebras: each row gives an abstract
//! Lie algebra and the images of T (or N), X1..X5 in an adapted basis v₀..v₅.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::field::{rat, Field, Rational, Ring};
use crate::lie::{Combo, LieTable};
use crate::linalg;
use crate::models::{build_model, printed_table, ModelLabel};
use crate::report::{Check, Report};
use crate::scalar::Scalar;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DictionaryRow {
    /// sl(2) ⋉ heis(3)
    N6,
    /// sl(2) × sl(2) with the parameter λ
    D6Generic,
    /// sl(2) × sl(2) at λ = −1
    D6LambdaMinusOne,
    /// sl(2) × e(2), a² = 4
    D6Degenerate,
    /// e(3), a² = −9/4
    E3,
}

impl DictionaryRow {
    pub const ALL: [DictionaryRow; 5] = [
        DictionaryRow::N6,
        DictionaryRow::D6Generic,
        DictionaryRow::D6LambdaMinusOne,
        DictionaryRow::D6Degenerate,
        DictionaryRow::E3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DictionaryRow::N6 => "N.6",
            DictionaryRow::D6Generic => "D.6",
            DictionaryRow::D6LambdaMinusOne => "D.6,lambda=-1",
            DictionaryRow::D6Degenerate => "D.6,a2=4",
            DictionaryRow::E3 => "e3",
        }
    }
}

impl FromStr for DictionaryRow {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        DictionaryRow::ALL.into_iter().find(|r| r.name() == s).ok_or_else(|| format!("unknown dictionary row {:?}", s))
    }
}

impl fmt::Display for DictionaryRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// a² as a function of the sl(2)×sl(2) parameter λ.
pub fn a_squared_of_lambda(lambda: &Rational) -> Option<Rational> {
    let one = rat(1, 1);
    let den = (lambda - rat(9, 1)) * (lambda - rat(1, 9));
    if den.is_zero() {
        return None;
    }
    let l1 = lambda + &one;
    Some(rat(4, 1) * &l1 * &l1 / den)
}

fn int_table(names: &[&str], entries: &[(usize, usize, &[(i64, usize)])]) -> LieTable<Scalar> {
    LieTable::from_entries(
        names,
        entries
            .iter()
            .map(|(i, j, c)| (*i, *j, c.iter().map(|&(n, k)| (Scalar::from_int(n), k)).collect::<Combo<Scalar>>()))
            .collect(),
    )
}

fn sl2_pair() -> LieTable<Scalar> {
    int_table(
        &["H", "X", "Y", "H'", "X'", "Y'"],
        &[
            (0, 1, &[(2, 1)]),
            (0, 2, &[(-2, 2)]),
            (1, 2, &[(1, 0)]),
            (3, 4, &[(2, 4)]),
            (3, 5, &[(-2, 5)]),
            (4, 5, &[(1, 3)]),
        ],
    )
}

/// The abstract algebra and its adapted basis v₀..v₅ (coordinates in the abstract basis).
fn abstract_side(row: DictionaryRow, lambda: &Scalar) -> (LieTable<Scalar>, Vec<Vec<Scalar>>) {
    let v = |terms: &[(Scalar, usize)]| {
        let mut out = vec![Scalar::from_int(0); 6];
        for (c, k) in terms {
            out[*k] = out[*k].clone() + c.clone();
        }
        out
    };
    let n = |k: i64| Scalar::from_int(k);
    match row {
        DictionaryRow::N6 => {
            let t = int_table(
                &["H", "X", "Y", "S", "T", "U"],
                &[
                    (0, 1, &[(2, 1)]),
                    (0, 2, &[(-2, 2)]),
                    (1, 2, &[(1, 0)]),
                    (0, 3, &[(1, 3)]),
                    (0, 4, &[(-1, 4)]),
                    (1, 4, &[(1, 3)]),
                    (2, 3, &[(1, 4)]),
                    (3, 4, &[(1, 5)]),
                ],
            );
            let vs = vec![
                v(&[(n(1), 1)]),
                v(&[(n(1), 2), (n(-1), 3), (n(-1), 5)]),
                v(&[(n(1), 0)]),
                v(&[(n(3), 3), (n(2), 5)]),
                v(&[(n(1), 4)]),
                v(&[(n(1), 5)]),
            ];
            (t, vs)
        }
        DictionaryRow::D6Generic | DictionaryRow::D6LambdaMinusOne => {
            let l = lambda.clone();
            let vs = vec![
                v(&[(n(1), 0), (n(1), 3)]),
                v(&[(n(1), 1), (-l.clone(), 4)]),
                v(&[(n(1), 2), (n(-1), 5)]),
                v(&[(n(1), 0), (l.clone(), 3)]),
                v(&[(n(1), 1), (-(l.clone() * l.clone()), 4)]),
                v(&[(n(1), 2), (-l, 5)]),
            ];
            (sl2_pair(), vs)
        }
        DictionaryRow::D6Degenerate => {
            let t = int_table(
                &["H", "X", "Y", "Z", "V1", "V2"],
                &[(0, 1, &[(2, 1)]), (0, 2, &[(-2, 2)]), (1, 2, &[(1, 0)]), (3, 4, &[(1, 4)]), (3, 5, &[(-1, 5)])],
            );
            let vs = vec![
                v(&[(Scalar::from(rat(1, 2)), 0), (n(1), 3)]),
                v(&[(n(1), 1), (n(1), 4)]),
                v(&[(n(1), 2), (n(1), 5)]),
                v(&[(n(1), 0)]),
                v(&[(n(1), 1)]),
                v(&[(n(1), 2)]),
            ];
            (t, vs)
        }
        DictionaryRow::E3 => {
            // R1 R2 R3 V1 V2 V3; [R1,V3] = −V2 so that ad R1 rotates (V2, V3)
            let t = int_table(
                &["R1", "R2", "R3", "V1", "V2", "V3"],
                &[
                    (0, 1, &[(1, 2)]),
                    (1, 2, &[(1, 0)]),
                    (2, 0, &[(1, 1)]),
                    (0, 4, &[(1, 5)]),
                    (0, 5, &[(-1, 4)]),
                    (1, 5, &[(1, 3)]),
                    (1, 3, &[(-1, 5)]),
                    (2, 3, &[(1, 4)]),
                    (2, 4, &[(-1, 3)]),
                ],
            );
            let vs = vec![
                v(&[(n(1), 0)]),
                v(&[(n(1), 1), (n(1), 4)]),
                v(&[(n(1), 2), (n(1), 5)]),
                v(&[(n(1), 3)]),
                v(&[(n(1), 4)]),
                v(&[(n(1), 5)]),
            ];
            (t, vs)
        }
    }
}

/// Images of the model basis as combinations of v₀..v₅.
fn images_in_v(row: DictionaryRow, a: &Scalar, lambda: &Scalar) -> Vec<Vec<(Scalar, usize)>> {
    let q = |n: i64, d: i64| Scalar::from(rat(n, d));
    let i = Scalar::i();
    match row {
        DictionaryRow::N6 => {
            let r = i * Scalar::sqrt_of(&rat(2, 1));
            vec![
                vec![(q(1, 4) * r.clone(), 0)],
                vec![(q(-2, 1) * r.clone(), 1), (q(3, 1) * r.clone(), 0)],
                vec![(q(1, 1), 2)],
                vec![(r.clone(), 3), (q(15, 4) * r.clone(), 0)],
                vec![(q(4, 1), 4), (q(-1, 1), 2)],
                vec![(q(2, 3) * r.clone(), 5), (q(-1, 3) * r.clone(), 3), (q(-1, 4) * r, 0)],
            ]
        }
        DictionaryRow::D6Generic => {
            let l1 = (lambda.clone() + q(1, 1)).inv();
            let a2 = a.clone() * a.clone();
            vec![
                vec![(q(1, 2), 0)],
                vec![(q(1, 1), 1)],
                vec![(q(5, 1) * a.clone() * l1.clone(), 2)],
                // (3a/2)·T with T = v₀/2
                vec![(q(-5, 2) * a.clone() * l1.clone(), 3), (q(3, 4) * a.clone(), 0)],
                vec![(q(5, 3) * a.clone() * l1.clone(), 4), (q(-7, 6) * a.clone(), 1)],
                vec![(q(25, 3) * a2.clone() * l1.clone() * l1.clone(), 5), (q(-35, 6) * a2 * l1, 2)],
            ]
        }
        DictionaryRow::D6LambdaMinusOne => vec![
            vec![(q(1, 2), 0)],
            vec![(q(1, 1), 1)],
            vec![(q(3, 1), 2)],
            vec![(q(-3, 2), 3)],
            vec![(q(1, 1), 4)],
            vec![(q(3, 1), 5)],
        ],
        DictionaryRow::D6Degenerate => vec![
            vec![(q(1, 1), 0)],
            vec![(q(1, 1), 1)],
            vec![(q(5, 1) * a.clone(), 2)],
            vec![(q(-5, 2) * a.clone(), 3), (q(3, 2) * a.clone(), 0)],
            vec![(q(5, 3) * a.clone(), 4), (q(-7, 6) * a.clone(), 1)],
            vec![(q(100, 3), 5), (q(-70, 3), 2)],
        ],
        DictionaryRow::E3 => vec![
            vec![(i.clone(), 0)],
            vec![(q(3, 2), 1), (q(3, 2) * i.clone(), 2)],
            vec![(q(5, 2) * i.clone(), 1), (q(5, 2), 2)],
            vec![(q(-15, 2), 3), (q(-3, 2), 0)],
            vec![(q(-15, 4) * i.clone(), 4), (q(15, 4), 5), (q(3, 4) * i.clone(), 1), (q(-3, 4), 2)],
            vec![(q(25, 4), 4), (q(-25, 4) * i.clone(), 5), (q(-5, 4), 1), (q(5, 4) * i, 2)],
        ],
    }
}

#[derive(Clone, Debug)]
pub struct DictionaryOutcome {
    pub row: DictionaryRow,
    pub a_squared: Option<Rational>,
    /// the root of a² for which the images satisfy the table, if any
    pub a: Option<Scalar>,
    pub report: Report,
}

fn model_label(row: DictionaryRow) -> ModelLabel {
    match row {
        DictionaryRow::N6 => ModelLabel::N6,
        _ => ModelLabel::D6,
    }
}

/// `lambda` is required for the generic sl(2)×sl(2) row and ignored otherwise.
pub fn verify_dictionary(row: DictionaryRow, lambda: Option<&Rational>) -> Result<DictionaryOutcome, String> {
    let lam = match row {
        DictionaryRow::D6Generic => {
            let l = lambda.ok_or("the generic row needs λ")?;
            if *l == rat(-1, 1) {
                return Err("λ = −1 has its own row".into());
            }
            l.clone()
        }
        DictionaryRow::D6LambdaMinusOne => rat(-1, 1),
        _ => rat(0, 1),
    };
    let a_squared = match row {
        DictionaryRow::N6 => None,
        DictionaryRow::D6Generic | DictionaryRow::D6LambdaMinusOne => {
            Some(a_squared_of_lambda(&lam).ok_or("λ is a pole of a²")?)
        }
        DictionaryRow::D6Degenerate => Some(rat(4, 1)),
        DictionaryRow::E3 => Some(rat(-9, 4)),
    };
    let lam_s = Scalar::from(lam);
    let (abs, vs) = abstract_side(row, &lam_s);
    let mut report = Report::new(format!("dictionary {}", row));
    report.push(Check::from_failure(
        "abstract Jacobi",
        abs.jacobi_failures()
            .first()
            .map(|&(i, j, k)| format!("({}, {}, {})", abs.names[i], abs.names[j], abs.names[k])),
    ));
    let roots: Vec<Scalar> = match &a_squared {
        None => vec![Scalar::from_int(0)],
        Some(q) => {
            let r = Scalar::sqrt_of(q);
            if r.is_zero() {
                vec![r]
            } else {
                vec![r.clone(), -r]
            }
        }
    };
    let mut chosen = None;
    let mut last_fail = None;
    for a in &roots {
        let imgs: Vec<Vec<Scalar>> = images_in_v(row, a, &lam_s)
            .into_iter()
            .map(|combo| {
                let mut out = vec![Scalar::from_int(0); abs.dim()];
                for (c, k) in combo {
                    linalg::axpy(&mut out, &c, &vs[k]);
                }
                out
            })
            .collect();
        let param = a_squared.as_ref().map(|_| a.clone());
        let table = printed_table(model_label(row), param.as_ref()).expect("catalog table");
        match table.is_homomorphism_into(&abs, &imgs) {
            None if linalg::rank(&imgs) == 6 => {
                chosen = Some((a.clone(), table));
                break;
            }
            None => last_fail = Some("images are dependent".to_string()),
            Some((i, j)) => last_fail = Some(format!("a = {}: [{}, {}]", a, table.names[i], table.names[j])),
        }
    }
    report.push(Check::from_failure(
        "images satisfy the model table",
        chosen.is_none().then(|| last_fail.unwrap_or_default()),
    ));
    if let Some((a, table)) = &chosen {
        let param = a_squared.as_ref().map(|_| a.clone());
        let m = build_model(model_label(row), param).expect("parameter supplied");
        let same = m.structure().map(|s| s == *table).unwrap_or(false);
        report.push(Check::from_failure(
            "table realized inside g",
            (!same).then(|| "catalog subalgebra has a different table".into()),
        ));
    }
    let a = chosen.map(|(a, _)| a).filter(|_| a_squared.is_some());
    Ok(DictionaryOutcome { row, a_squared, a, report })
}
