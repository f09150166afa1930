#![allow(dead_code)]

use leibniz_core::algebra::{
    abelian, diamond_e, diamond_x, g54, gl, heisenberg, sl2, sl2_plus_abelian,
};
use leibniz_core::{AlgebraSpec, Cochain, CochainScheme, Coefficients, Scalar};

pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::from_ratio(n, d)
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// Catalog instances exercised by the structural suites.
pub fn suite() -> Vec<(String, AlgebraSpec)> {
    let mut v = vec![
        ("abelian(2)".to_string(), abelian(2)),
        ("abelian(3)".to_string(), abelian(3)),
    ];
    for n in 1..=3 {
        v.push((format!("heisenberg({n})"), heisenberg(n)));
    }
    v.push(("diamond_x".into(), diamond_x()));
    v.push(("diamond_e".into(), diamond_e()));
    v.push(("g54".into(), g54()));
    v.push(("gl(2)".into(), gl(2)));
    v.push(("gl(3)".into(), gl(3)));
    v.push(("sl2".into(), sl2()));
    for k in 0..=2 {
        v.push((format!("sl2_plus_abelian({k})"), sl2_plus_abelian(k)));
    }
    v
}

fn adj2(entries: &[(usize, [usize; 2], Scalar)]) -> Cochain {
    let sc = CochainScheme::new(2, Coefficients::Adjoint, 4);
    let mut c = Cochain::zero(sc);
    for (k, [i, j], v) in entries {
        c = c.add(&Cochain::from_entries(sc, &[(k - 1, &[i - 1, j - 1], v.clone())]));
    }
    c
}

/// The four diamond cocycles in the e-basis, 1-based as written.
pub fn phi3() -> Cochain {
    adj2(&[
        (1, [1, 4], int(1)),
        (1, [4, 1], int(-1)),
        (3, [3, 4], int(1)),
        (3, [4, 3], int(-1)),
    ])
}

pub fn phi7() -> Cochain {
    adj2(&[(4, [2, 3], int(1)), (4, [3, 2], int(-1))])
}

pub fn phi11() -> Cochain {
    adj2(&[
        (1, [3, 2], int(1)),
        (1, [3, 3], q(1, 2)),
        (1, [4, 1], int(-1)),
    ])
}

pub fn phi14() -> Cochain {
    adj2(&[(1, [4, 4], int(1))])
}

pub fn diamond_phis() -> Vec<Cochain> {
    vec![phi3(), phi7(), phi11(), phi14()]
}

/// Trivial-coefficient 2-cochain from 1-based `(i, j, value)` entries.
pub fn triv2(d: usize, entries: &[(usize, usize, Scalar)]) -> Cochain {
    let sc = CochainScheme::new(2, Coefficients::Trivial, d);
    let mut c = Cochain::zero(sc);
    for (i, j, v) in entries {
        let one = Cochain::from_entries(sc, &[(0, &[i - 1, j - 1], v.clone())]);
        c = c.add(&one);
    }
    c
}

/// `z ⊗ t` for a basis vector `z` (0-based) and a trivial cochain `t`.
pub fn lift(z: usize, t: &Cochain, d: usize) -> Cochain {
    let sc = CochainScheme::new(t.degree(), Coefficients::Adjoint, d);
    let mut out = Cochain::zero(sc);
    for (idx, v) in t.to_sparse() {
        let (_, inputs) = t.scheme().decode(idx);
        out = out.add(&Cochain::from_entries(sc, &[(z, &inputs, v)]));
    }
    out
}

/// Plain dense Gaussian elimination, kept separate from the library's
/// sparse reducer.
pub fn dense_rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    use num_traits::Zero;
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().unwrap();
        let pivot: Vec<Scalar> = rows[rank].iter().map(|x| x * &inv).collect();
        for r in rows.iter_mut().skip(rank + 1) {
            if r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for (x, y) in r.iter_mut().zip(&pivot) {
                *x -= &(&f * y);
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Rank of a linear map given column by column as its images.
pub fn rank_of_images(images: &[Vec<Scalar>]) -> usize {
    dense_rank(images.to_vec())
}

/// Coefficient of `m` in the symbolic Leibniz defect of `pa`, as a cochain.
pub fn symbolic_defect_coefficient(
    pa: &leibniz_core::ParamAlgebra,
    m: &leibniz_core::Monomial,
) -> Cochain {
    let sc = CochainScheme::new(3, Coefficients::Adjoint, pa.dim());
    let mut out = Cochain::zero(sc);
    for e in pa.leibniz_defect_sym() {
        let c = e.poly.coeff(m);
        out = out.add(&Cochain::from_entries(sc, &[(e.output, &e.inputs, c)]));
    }
    out
}

/// Random 2-cochain with small Gaussian-rational entries, mostly zero.
pub fn random_cochain<R: rand::Rng>(rng: &mut R, sc: CochainScheme, density: f64) -> Cochain {
    let coords = (0..sc.total_dim())
        .map(|_| {
            if rng.gen_bool(density) {
                let re = rng.gen_range(-3..=3);
                let im = if rng.gen_bool(0.2) { rng.gen_range(-2..=2) } else { 0 };
                let den = rng.gen_range(1..=3);
                &Scalar::gaussian(re, im) * &Scalar::from_ratio(1, den)
            } else {
                Scalar::from_int(0)
            }
        })
        .collect();
    Cochain::from_coords(sc, coords).unwrap()
}

/// Leibniz defect `[[x,y],z] − [[x,z],y] − [x,[y,z]]` of a bracket given by
/// its structure cochain, evaluated directly from the table.
pub fn table_defect(mu: &Cochain) -> Cochain {
    use num_traits::Zero;
    let d = mu.scheme().algebra_dim;
    let mut table: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); d * d];
    for x in 0..d {
        for y in 0..d {
            for (k, v) in mu.eval(&[x, y]).into_iter().enumerate() {
                if !v.is_zero() {
                    table[x * d + y].push((k, v));
                }
            }
        }
    }
    let nested = |a: usize, b: usize, c: usize, left: bool, out: &mut Vec<Scalar>, sign: &Scalar| {
        let (first, second) = if left { ((a, b), c) } else { ((b, c), a) };
        for (m, p) in &table[first.0 * d + first.1] {
            let idx = if left { m * d + second } else { second * d + m };
            for (k, q) in &table[idx] {
                out[*k] += &(&(p * q) * sign);
            }
        }
    };
    let sc = mu.scheme().next();
    let one = Scalar::from_int(1);
    let minus = Scalar::from_int(-1);
    let mut entries = Vec::new();
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let mut v = vec![Scalar::zero(); d];
                nested(x, y, z, true, &mut v, &one);
                nested(x, z, y, true, &mut v, &minus);
                nested(x, y, z, false, &mut v, &minus);
                for (k, s) in v.into_iter().enumerate() {
                    if !s.is_zero() {
                        entries.push((sc.index(k, &[x, y, z]), s));
                    }
                }
            }
        }
    }
    entries.sort_by_key(|e| e.0);
    Cochain::from_sparse(sc, &entries)
}
