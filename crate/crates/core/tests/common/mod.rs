//! A standard-basis oracle by plain linear algebra, independent of the
//! normal-form machinery.
//!
//! For a zero-dimensional ideal `I` with `m^N` inside `I`, the local algebra
//! is `K[x]/(I + m^N)`, a finite-dimensional quotient. Row-reducing the
//! truncated multiples `x^b * f_i` with columns sorted by the local ordering
//! puts the leading ideal on the pivot columns, and the fully reduced pivot
//! row of each minimal generator is the reduced standard basis element.

#![allow(dead_code)]

use std::collections::HashMap;

use hcstd::coeff::Scalar;
use hcstd::corpus::monomials_of_degree;
use hcstd::ring::{IdealPresentation, Monomial, Polynomial};
use num_rational::BigRational;
use num_traits::{One, Zero};

type Row = Vec<(usize, BigRational)>;

fn axpy(row: &Row, c: &BigRational, pivot: &Row) -> Row {
    // row - c * pivot, both sorted by column.
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_piv {
            out.push((pivot[j].0, -(c * &pivot[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - c * &pivot[j].1;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub struct LinearOracle {
    /// Minimal generators of the leading ideal, largest first.
    pub staircase: Vec<Monomial>,
    pub vdim: u64,
    /// Reduced standard basis, largest leading monomial first.
    pub basis: Vec<Polynomial<Scalar>>,
}

/// Runs the oracle for an ideal over `Q`; `None` when no `N <= max_n`
/// certifies `m^N` inside the ideal.
pub fn linear_oracle(ideal: &IdealPresentation, max_n: u32) -> Option<LinearOracle> {
    let ring = ideal.ring();
    let order = ring.order();
    let n = ring.nvars();
    let gens: Vec<Vec<(Monomial, BigRational)>> = ideal
        .generators()
        .iter()
        .map(|g| {
            g.terms()
                .map(|(m, c)| match c {
                    Scalar::Rational(q) => (*m, q.clone()),
                    other => panic!("oracle works over Q, got {other}"),
                })
                .collect()
        })
        .collect();
    let low = gens.iter().map(|g| g.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)).max()?;
    let mut top = low + 2;
    while top <= max_n {
        // Columns: monomials of degree < top, largest first.
        let mut cols: Vec<Monomial> = (0..top).flat_map(|d| monomials_of_degree(n, d)).collect();
        cols.sort_by(|a, b| order.compare(b, a));
        let index: HashMap<Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut pivots: HashMap<usize, Row> = HashMap::new();
        for g in &gens {
            let ord = g.iter().map(|(m, _)| m.degree()).min().unwrap_or(0);
            for d in 0..top.saturating_sub(ord) {
                for shift in monomials_of_degree(n, d) {
                    let mut row: Row = g
                        .iter()
                        .filter_map(|(m, c)| {
                            let k = m.mul(&shift);
                            (k.degree() < top).then(|| (index[&k], c.clone()))
                        })
                        .collect();
                    row.sort_by_key(|(i, _)| *i);
                    while let Some((lead, c)) = row.first().cloned() {
                        match pivots.get(&lead) {
                            Some(p) => row = axpy(&row, &c, p),
                            None => {
                                let inv = BigRational::one() / c;
                                let row: Row = row.into_iter().map(|(i, v)| (i, v * &inv)).collect();
                                pivots.insert(lead, row);
                                break;
                            }
                        }
                    }
                }
            }
        }
        let edge = monomials_of_degree(n, top - 1);
        if !edge.iter().all(|m| pivots.contains_key(&index[m])) {
            top += 2;
            continue;
        }
        let lead: Vec<Monomial> = cols.iter().enumerate().filter(|(i, _)| pivots.contains_key(i)).map(|(_, m)| *m).collect();
        let mut staircase: Vec<Monomial> = lead
            .iter()
            .filter(|m| !lead.iter().any(|o| o != *m && o.divides(m)))
            .copied()
            .collect();
        staircase.sort_by(|a, b| order.compare(b, a));
        let vdim = (cols.len() - pivots.len()) as u64;
        let basis = staircase
            .iter()
            .map(|m| {
                let mut row = pivots[&index[m]].clone();
                let mut k = 1;
                while k < row.len() {
                    let (col, c) = row[k].clone();
                    match pivots.get(&col) {
                        Some(p) => row = axpy(&row, &c, p),
                        None => k += 1,
                    }
                }
                let terms = row.into_iter().map(|(i, v)| (cols[i], Scalar::Rational(v))).collect();
                Polynomial::from_terms(ring, terms)
            })
            .collect();
        return Some(LinearOracle { staircase, vdim, basis });
    }
    None
}
