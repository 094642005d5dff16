//! Exact closed forms for vertex distances and Wiener indices of the named
//! families.
//!
//! Everything is evaluated in `i128` over a common denominator. Each division
//! is asserted to be exact: a remainder means a parity branch was transcribed
//! wrongly, and that must never round silently.

use super::FamilyError;

fn exact_div(num: i128, den: i128) -> i128 {
    assert!(num % den == 0, "closed form not integral: {num} / {den}");
    num / den
}

fn out(v: i128) -> u64 {
    u64::try_from(v).expect("closed forms are non-negative and fit in u64")
}

fn even(x: i128) -> bool {
    x % 2 == 0
}

/// `D(v_i)` in the path `v_1 ... v_n` (1-based `i`).
pub fn path_vertex_distance(n: u64, i: u64) -> Result<u64, FamilyError> {
    if i < 1 || i > n {
        return Err(FamilyError::Constraint("path vertex distance requires 1 <= i <= n"));
    }
    let (n, i) = (n as i128, i as i128);
    Ok(out(exact_div((i - 1) * i + (n - i) * (n - i + 1), 2)))
}

/// `W(P_n) = C(n+1, 3)`.
pub fn path_wiener(n: u64) -> Result<u64, FamilyError> {
    if n < 1 {
        return Err(FamilyError::Constraint("path requires n >= 1"));
    }
    let n = n as i128;
    Ok(out(exact_div((n + 1) * n * (n - 1), 6)))
}

/// `D(v)` for any vertex of `C_n`.
pub fn cycle_vertex_distance(n: u64) -> Result<u64, FamilyError> {
    if n < 3 {
        return Err(FamilyError::Constraint("cycle requires n >= 3"));
    }
    let n = n as i128;
    let num = if even(n) { n * n } else { n * n - 1 };
    Ok(out(exact_div(num, 4)))
}

/// `W(C_n)`.
pub fn cycle_wiener(n: u64) -> Result<u64, FamilyError> {
    if n < 3 {
        return Err(FamilyError::Constraint("cycle requires n >= 3"));
    }
    let n = n as i128;
    let num = if even(n) { n * n * n } else { n * (n * n - 1) };
    Ok(out(exact_div(num, 8)))
}

/// `W(L_{n,g})`: cycle of length `g` with a pendant path, `n` vertices.
pub fn lollipop_wiener(n: u64, g: u64) -> Result<u64, FamilyError> {
    if g < 3 || g > n {
        return Err(FamilyError::Constraint("lollipop requires 3 <= g <= n"));
    }
    let (n, g) = (n as i128, g as i128);
    // over 24: g^3/8 -> 3 g^3, (n^2+ng+3g-1)/6 -> 4(...), g^2/12 -> 2 g^2, 1/4 -> 6
    let tail = 4 * (n * n + n * g + 3 * g - 1) - 2 * g * g;
    let num = if even(g) { 3 * g * g * g + (n - g) * tail } else { 3 * g * (g * g - 1) + (n - g) * (tail - 6) };
    Ok(out(exact_div(num, 24)))
}

/// `D` of the pendant vertex of `L_{n,g}`, `g < n`.
pub fn lollipop_pendant_distance(n: u64, g: u64) -> Result<u64, FamilyError> {
    if g < 3 || g >= n {
        return Err(FamilyError::Constraint("pendant distance requires 3 <= g < n"));
    }
    let (n, g) = (n as i128, g as i128);
    let cyc = if even(g) { g * g } else { g * g - 1 };
    Ok(out(exact_div(cyc + 2 * (n - g) * (n + g - 1), 4)))
}

/// `W(C^n_{m1,m2})` for all four parities of `(m1, m2)`, with
/// `k = n + 2 - m1 - m2` cut vertices.
pub fn dumbbell_wiener(m1: u64, m2: u64, n: u64) -> Result<u64, FamilyError> {
    if m1 < 3 || m2 < 3 {
        return Err(FamilyError::Constraint("dumbbell requires m1 >= 3 and m2 >= 3"));
    }
    if n + 1 < m1 + m2 {
        return Err(FamilyError::Constraint("dumbbell requires n >= m1 + m2 - 1"));
    }
    let (a, b, n) = (m1 as i128, m2 as i128, n as i128);
    let k = n + 2 - a - b;
    let base = a * a * a
        + b * b * b
        + 2 * a * a * b
        + 2 * a * b * b
        + 2 * a * a * k
        + 2 * b * b * k
        + 4 * a * k * k
        + 4 * b * k * k
        + 8 * a * b * k
        - 4 * a * a
        - 4 * b * b
        - 8 * a * b
        - 12 * a * k
        - 12 * b * k
        - 8 * k * k;
    // over 24: 1/8 -> 3, 1/6 -> 4, 1/12 -> 2
    let num = match (even(a), even(b)) {
        (true, true) => 3 * (base + 8 * a + 8 * b - 8) + 4 * (k * k * k + 11 * k),
        (true, false) => 3 * (base + 6 * a + 7 * b - 4) + 2 * (2 * k * k * k + 19 * k),
        (false, true) => 3 * (base + 7 * a + 6 * b - 4) + 2 * (2 * k * k * k + 19 * k),
        (false, false) => 3 * (base + 5 * a + 5 * b) + 4 * (k * k * k + 8 * k),
    };
    Ok(out(exact_div(num, 24)))
}

/// `W(L_{n,n-k})` for `k` in `{1, 2, 3}` from the cubic specialisations.
/// Agrees with [`lollipop_wiener`]`(n, n - k)`.
pub fn lollipop_wiener_by_cuts(n: u64, k: u64) -> Result<u64, FamilyError> {
    if !(1..=3).contains(&k) {
        return Err(FamilyError::Constraint("specialised form exists only for k in 1..=3"));
    }
    if n < k + 3 {
        return Err(FamilyError::Constraint("requires n >= k + 3"));
    }
    let n = n as i128;
    let (a, b, c) = match (k, even(n)) {
        (1, true) => (1, 6, -8),
        (1, false) => (1, 7, -7),
        (2, true) => (2, 20, -32),
        (2, false) => (2, 19, -34),
        (3, true) => (3, 38, -88),
        (3, false) => (3, 39, -85),
        _ => unreachable!(),
    };
    Ok(out(exact_div(n * n * n - a * n * n + b * n + c, 8)))
}

/// Wiener index of `L_{n-2,n-4}` with two pendant edges added at its pendant
/// vertex (three cut vertices, `n >= 7`).
pub fn forked_lollipop_wiener(n: u64) -> Result<u64, FamilyError> {
    if n < 7 {
        return Err(FamilyError::Constraint("requires n >= 7"));
    }
    let n = n as i128;
    let num = if even(n) { n * n * n - 4 * n * n + 56 * n - 152 } else { n * n * n - 4 * n * n + 55 * n - 156 };
    Ok(out(exact_div(num, 8)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_forms() {
        assert_eq!(path_vertex_distance(5, 1).unwrap(), 10);
        assert_eq!(path_vertex_distance(5, 3).unwrap(), 6);
        assert_eq!(path_vertex_distance(1, 1).unwrap(), 0);
        assert!(path_vertex_distance(5, 0).is_err());
        assert!(path_vertex_distance(5, 6).is_err());
        assert_eq!(path_wiener(4).unwrap(), 10);
        assert_eq!(path_wiener(1).unwrap(), 0);
        assert_eq!(path_wiener(7).unwrap(), 56);
    }

    #[test]
    fn cycle_forms() {
        assert_eq!(cycle_vertex_distance(6).unwrap(), 9);
        assert_eq!(cycle_vertex_distance(7).unwrap(), 12);
        assert_eq!(cycle_vertex_distance(3).unwrap(), 2);
        assert_eq!(cycle_wiener(8).unwrap(), 64);
        assert_eq!(cycle_wiener(5).unwrap(), 15);
        assert_eq!(cycle_wiener(3).unwrap(), 3);
        assert_eq!(cycle_wiener(7).unwrap(), 42);
    }

    #[test]
    fn lollipop_forms() {
        assert_eq!(lollipop_wiener(8, 6).unwrap(), 64);
        assert_eq!(lollipop_wiener(6, 5).unwrap(), 26);
        assert_eq!(lollipop_wiener(9, 9).unwrap(), cycle_wiener(9).unwrap());
        assert_eq!(lollipop_wiener(9, 9).unwrap(), 90);
        assert!(lollipop_wiener(5, 2).is_err());
        assert_eq!(lollipop_pendant_distance(5, 4).unwrap(), 8);
        assert_eq!(lollipop_pendant_distance(8, 6).unwrap(), 22);
        assert_eq!(lollipop_pendant_distance(4, 3).unwrap(), 5);
        assert!(lollipop_pendant_distance(6, 6).is_err());
    }

    #[test]
    fn dumbbell_forms() {
        assert_eq!(dumbbell_wiener(4, 4, 8).unwrap(), 64);
        assert_eq!(dumbbell_wiener(4, 4, 9).unwrap(), 96);
        assert_eq!(dumbbell_wiener(4, 5, 10).unwrap(), 126);
        assert_eq!(dumbbell_wiener(4, 6, 11).unwrap(), 166);
        assert_eq!(dumbbell_wiener(4, 7, 12).unwrap(), 209);
        assert_eq!(dumbbell_wiener(6, 6, 13).unwrap(), 264);
        assert!(dumbbell_wiener(4, 4, 6).is_err());
        assert!(dumbbell_wiener(2, 4, 9).is_err());
    }

    #[test]
    fn specialised_lollipops() {
        assert_eq!(lollipop_wiener_by_cuts(6, 1).unwrap(), 26);
        assert_eq!(lollipop_wiener_by_cuts(8, 2).unwrap(), 64);
        assert_eq!(lollipop_wiener_by_cuts(13, 3).unwrap(), 264);
        assert!(lollipop_wiener_by_cuts(5, 3).is_err());
        assert!(lollipop_wiener_by_cuts(9, 4).is_err());
        for k in 1..=3 {
            for n in k + 3..=200 {
                assert_eq!(lollipop_wiener_by_cuts(n, k).unwrap(), lollipop_wiener(n, n - k).unwrap());
            }
        }
    }

    #[test]
    fn forked_lollipop() {
        assert_eq!(forked_lollipop_wiener(14).unwrap(), 324);
        assert!(forked_lollipop_wiener(6).is_err());
    }
}
