//! Gram matrices, self-orthogonality, LCD, and power sums over multiplicative subgroups.

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Fe, Field, GroupKind, Subgroup};
use crate::linalg::Matrix;

/// `G G^T`.
pub fn gram(code: &LinearCode) -> Matrix {
    let g = code.generator();
    g.matmul(&g.transpose())
        .expect("a matrix times its transpose is well formed")
}

/// `None` when `G G^T = 0`, otherwise the first nonzero Gram entry `(i, j)`.
pub fn is_self_orthogonal(code: &LinearCode) -> Option<(usize, usize)> {
    let gm = gram(code);
    (0..gm.rows())
        .flat_map(|i| (0..gm.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| !gm[(i, j)].is_zero())
}

/// `None` when `G G^T` is nonsingular, otherwise a nonzero codeword of `C ∩ C^⊥`
/// obtained from a left null vector of the Gram matrix.
pub fn is_lcd(code: &LinearCode) -> Option<Vec<Fe>> {
    let gm = gram(code);
    if gm.rows() == 0 || !gm.det().expect("Gram matrices are square").is_zero() {
        return None;
    }
    let x = gm.transpose().kernel_basis();
    let coeffs = x.row(0).to_vec();
    Some(code.encode(&coeffs).expect("kernel vectors have length k"))
}

/// Definitional check `C ⊆ C^⊥`: every generator row lies in the dual.
pub fn self_orthogonal_by_dual(code: &LinearCode) -> bool {
    let dual = code.dual();
    if dual.k() == 0 {
        return code.generator().is_zero();
    }
    (0..code.k()).all(|i| {
        dual.generator()
            .row_space_contains(code.generator().row(i))
            .expect("rows have length n")
    })
}

/// Definitional check `C ∩ C^⊥ = {0}`: the stacked generators have full rank `n`.
pub fn lcd_by_dual(code: &LinearCode) -> bool {
    let dual = code.dual();
    let stacked = code
        .generator()
        .vstack(dual.generator())
        .expect("same field and length");
    stacked.rank() == code.n()
}

/// `sum_{x in G} x^t` for a multiplicative subgroup `G`, checked against the closed form.
pub fn power_sum(field: &Field, group: &Subgroup, t: u64) -> Result<Fe> {
    if group.kind() != GroupKind::Multiplicative {
        return Err(Error::NotASubgroup);
    }
    let direct = field.sum(group.elements().iter().map(|&x| field.pow(x, t)));
    let closed = power_sum_closed_form(field, group.order() as u64, t);
    if direct != closed {
        return Err(Error::OracleDisagreement {
            check: "power_sum".into(),
            detail: format!(
                "order {} exponent {t}: direct {direct}, closed form {closed}",
                group.order()
            ),
        });
    }
    Ok(direct)
}

/// `n` (as a field element) when `n | t`, else 0.
pub fn power_sum_closed_form(field: &Field, n: u64, t: u64) -> Fe {
    if t.is_multiple_of(n) {
        field.from_int((n % field.characteristic()) as i64)
    } else {
        Fe::ZERO
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(f: &Field, rows: &[&[u64]]) -> LinearCode {
        LinearCode::new(Matrix::from_u64(f, rows).unwrap()).unwrap()
    }

    #[test]
    fn identity_code() {
        let f = Field::prime(5).unwrap();
        let c = code(&f, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(gram(&c), Matrix::identity(&f, 2));
        assert_eq!(is_lcd(&c), None);
        assert!(lcd_by_dual(&c));
        assert_eq!(is_self_orthogonal(&c), Some((0, 0)));
        assert!(!self_orthogonal_by_dual(&c));
    }

    #[test]
    fn binary_self_dual() {
        let f = Field::prime(2).unwrap();
        let c = code(&f, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert!(gram(&c).is_zero());
        assert_eq!(is_self_orthogonal(&c), None);
        assert!(self_orthogonal_by_dual(&c));
        let w = is_lcd(&c).unwrap();
        assert!(w.iter().any(|x| !x.is_zero()));
        assert!(!lcd_by_dual(&c));
    }

    #[test]
    fn power_sums_gf7() {
        let f = Field::prime(7).unwrap();
        let g = Subgroup::multiplicative(&f, 3).unwrap();
        assert_eq!(g.elements(), &[Fe(1), Fe(2), Fe(4)]);
        assert_eq!(power_sum(&f, &g, 1).unwrap(), Fe(0));
        assert_eq!(power_sum(&f, &g, 3).unwrap(), Fe(3));
        assert_eq!(power_sum(&f, &g, 0).unwrap(), Fe(3));
        let v = Subgroup::additive(&f, &[Fe(1)]).unwrap();
        assert_eq!(power_sum(&f, &v, 1).unwrap_err(), Error::NotASubgroup);
    }
}
