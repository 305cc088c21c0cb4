//! Exact scalars over ℚ and GF(p), and row reduction.

use parsigma::linalg::Subspace;
use parsigma::{Field, FieldScalar};

fn main() -> parsigma::Result<()> {
    let q = Field::Rational;
    let a = FieldScalar::rational(3, 4)?;
    let b = FieldScalar::parse_literal(q, "-5/6")?;
    println!("{a} + {b} = {}", &a + &b);
    println!("({a})⁻¹ = {}", a.inv()?);

    let gf7 = Field::prime(7)?;
    let x = FieldScalar::from_int(gf7, 3);
    println!("in {gf7}: 3⁻¹ = {}", x.inv()?);

    let rows: Vec<Vec<FieldScalar>> = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
        .iter()
        .map(|r| r.iter().map(|&v| FieldScalar::from_int(q, v)).collect())
        .collect();
    let s = Subspace::row_reduce(q, 3, &rows)?;
    println!("rank {} with pivots {:?}", s.rank(), s.pivots());
    Ok(())
}
