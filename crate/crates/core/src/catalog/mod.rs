//! Constructors for the concrete groups under study, plus `.grp` file I/O.

mod field;
mod grp;

use std::fmt;
use std::path::PathBuf;

pub use field::SmallField;
pub use grp::{load_group_file, parse_group_text, write_group_text};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{gcd, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixKind {
    SL,
    GL,
    PSL,
    PGL,
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixKind::SL => "SL",
            MatrixKind::GL => "GL",
            MatrixKind::PSL => "PSL",
            MatrixKind::PGL => "PGL",
        })
    }
}

/// How to build a group. Orders and parameters follow the usual conventions:
/// `Dihedral { order }` has `order` elements, `Dicyclic(n)` has `4n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecipeKind {
    Cyclic(u32),
    Dihedral { order: u32 },
    Dicyclic(u32),
    Symmetric(u32),
    Alternating(u32),
    ElementaryAbelian { p: u32, k: u32 },
    SemidirectCyclic { p: u32, m: u32, q: u32, n: u32, action_order: u32 },
    Matrix { kind: MatrixKind, q: u32 },
    DirectProduct(Box<GroupRecipe>, Box<GroupRecipe>),
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRecipe {
    pub kind: RecipeKind,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Builtin,
    File(PathBuf),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub recipe: GroupRecipe,
    pub group: PermGroup,
    pub provenance: Provenance,
}

impl CatalogEntry {
    pub fn label(&self) -> &str {
        &self.recipe.label
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

impl GroupRecipe {
    pub fn new(kind: RecipeKind) -> Self {
        let label = default_label(&kind);
        GroupRecipe { kind, label }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn cyclic(n: u32) -> Self {
        Self::new(RecipeKind::Cyclic(n))
    }
    pub fn dihedral(order: u32) -> Self {
        Self::new(RecipeKind::Dihedral { order })
    }
    pub fn dicyclic(n: u32) -> Self {
        Self::new(RecipeKind::Dicyclic(n))
    }
    pub fn symmetric(n: u32) -> Self {
        Self::new(RecipeKind::Symmetric(n))
    }
    pub fn alternating(n: u32) -> Self {
        Self::new(RecipeKind::Alternating(n))
    }
    pub fn elementary_abelian(p: u32, k: u32) -> Self {
        Self::new(RecipeKind::ElementaryAbelian { p, k })
    }
    pub fn semidirect(p: u32, m: u32, q: u32, n: u32, action_order: u32) -> Self {
        Self::new(RecipeKind::SemidirectCyclic { p, m, q, n, action_order })
    }
    pub fn matrix(kind: MatrixKind, q: u32) -> Self {
        Self::new(RecipeKind::Matrix { kind, q })
    }
    pub fn product(a: GroupRecipe, b: GroupRecipe) -> Self {
        Self::new(RecipeKind::DirectProduct(Box::new(a), Box::new(b)))
    }

    /// Closed-form order, where one exists.
    pub fn expected_order(&self) -> Option<u128> {
        use RecipeKind::*;
        Some(match &self.kind {
            Cyclic(n) => *n as u128,
            Dihedral { order } => *order as u128,
            Dicyclic(n) => 4 * *n as u128,
            Symmetric(n) => factorial(*n),
            Alternating(n) => (factorial(*n) / 2).max(1),
            ElementaryAbelian { p, k } => (*p as u128).pow(*k),
            SemidirectCyclic { p, m, q, n, .. } => {
                (*p as u128).pow(*m) * (*q as u128).pow(*n)
            }
            Matrix { kind, q } => {
                let q = *q as u128;
                match kind {
                    MatrixKind::SL | MatrixKind::PGL => q * (q * q - 1),
                    MatrixKind::GL => (q * q - 1) * (q * q - q),
                    MatrixKind::PSL => q * (q * q - 1) / gcd(2, q as u64 - 1) as u128,
                }
            }
            DirectProduct(a, b) => a.expected_order()? * b.expected_order()?,
            File(_) => return None,
        })
    }
}

fn default_label(kind: &RecipeKind) -> String {
    use RecipeKind::*;
    match kind {
        Cyclic(n) => format!("C{n}"),
        Dihedral { order } => format!("D{order}"),
        Dicyclic(n) => format!("Q{}", 4 * n),
        Symmetric(n) => format!("S{n}"),
        Alternating(n) => format!("A{n}"),
        ElementaryAbelian { p, k } => format!("C{p}^{k}"),
        SemidirectCyclic { p, m, q, n, action_order } => {
            let (a, b) = (p.pow(*m), q.pow(*n));
            if *action_order == 1 {
                format!("C{a}xC{b}")
            } else {
                format!("C{a}:C{b}[{action_order}]")
            }
        }
        Matrix { kind, q } => format!("{kind}(2,{q})"),
        DirectProduct(a, b) => format!("{}x{}", a.label, b.label),
        File(path) => path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "file".into()),
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidRecipe(msg.into())
}

fn cycle_perm(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let cycle: Vec<usize> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[cycle]).expect("valid cycle")
}

/// Builds a permutation group from a recipe and checks it against the
/// closed-form order.
pub fn build(recipe: &GroupRecipe) -> Result<CatalogEntry> {
    use RecipeKind::*;
    let (group, provenance) = match &recipe.kind {
        Cyclic(n) => (cyclic(*n)?, Provenance::Builtin),
        Dihedral { order } => (dihedral(*order)?, Provenance::Builtin),
        Dicyclic(n) => (dicyclic(*n)?, Provenance::Builtin),
        Symmetric(n) => (symmetric(*n)?, Provenance::Builtin),
        Alternating(n) => (alternating(*n)?, Provenance::Builtin),
        ElementaryAbelian { p, k } => (elementary_abelian(*p, *k)?, Provenance::Builtin),
        SemidirectCyclic { p, m, q, n, action_order } => (
            semidirect_cyclic(*p, *m, *q, *n, *action_order)?,
            Provenance::Builtin,
        ),
        Matrix { kind, q } => (matrix_group(*kind, *q)?, Provenance::Builtin),
        DirectProduct(a, b) => {
            let (a, b) = (build(a)?, build(b)?);
            (direct_product(&a.group, &b.group)?, Provenance::Builtin)
        }
        File(path) => return load_group_file(path),
    };
    if let Some(expected) = recipe.expected_order() {
        if group.order() != expected {
            return Err(invalid(format!(
                "{}: built order {} differs from expected {expected}",
                recipe.label,
                group.order()
            )));
        }
    }
    Ok(CatalogEntry {
        recipe: recipe.clone(),
        group,
        provenance,
    })
}

pub fn build_builtin(kind: RecipeKind) -> Result<CatalogEntry> {
    build(&GroupRecipe::new(kind))
}

fn cyclic(n: u32) -> Result<PermGroup> {
    if n == 0 {
        return Err(invalid("cyclic order must be at least 1"));
    }
    let n = n as usize;
    let gens = if n == 1 { vec![] } else { vec![cycle_perm(n, 0..n)] };
    PermGroup::from_generators(n, gens)
}

fn dihedral(order: u32) -> Result<PermGroup> {
    if order < 4 || !order.is_multiple_of(2) {
        return Err(invalid(format!(
            "dihedral order must be even and at least 4, got {order}"
        )));
    }
    if order == 4 {
        return elementary_abelian(2, 2);
    }
    let n = (order / 2) as usize;
    let rotation = cycle_perm(n, 0..n);
    let reflection = Permutation::from_images_unchecked(
        (0..n).map(|i| ((n - i) % n) as u32).collect(),
    );
    PermGroup::from_generators(n, vec![rotation, reflection])
}

/// Q_{4n} = <a, x | a^{2n}, x^2 = a^n, x^-1 a x = a^-1>, acting regularly
/// on its elements a^i x^j (point index 2i + j).
fn dicyclic(n: u32) -> Result<PermGroup> {
    if n < 2 {
        return Err(invalid("dicyclic parameter must be at least 2"));
    }
    let two_n = 2 * n as usize;
    let degree = 2 * two_n;
    let point = |i: usize, j: usize| 2 * i + j;
    // right multiplication of a^i x^j by a^k x^l
    let times = |i: usize, j: usize, k: usize, l: usize| -> (usize, usize) {
        let k = if j == 1 { (two_n - k) % two_n } else { k };
        let mut e = (i + k) % two_n;
        let mut t = j + l;
        if t == 2 {
            e = (e + two_n / 2) % two_n;
            t = 0;
        }
        (e, t)
    };
    let right_mult = |k: usize, l: usize| {
        let mut images = vec![0u32; degree];
        for i in 0..two_n {
            for j in 0..2 {
                let (e, t) = times(i, j, k, l);
                images[point(i, j)] = point(e, t) as u32;
            }
        }
        Permutation::from_images_unchecked(images)
    };
    PermGroup::from_generators(degree, vec![right_mult(1, 0), right_mult(0, 1)])
}

fn symmetric(n: u32) -> Result<PermGroup> {
    if n == 0 {
        return Err(invalid("symmetric degree must be at least 1"));
    }
    let n = n as usize;
    let gens = if n == 1 {
        vec![]
    } else {
        vec![cycle_perm(n, [0, 1]), cycle_perm(n, 0..n)]
    };
    PermGroup::from_generators(n, gens)
}

fn alternating(n: u32) -> Result<PermGroup> {
    if n == 0 {
        return Err(invalid("alternating degree must be at least 1"));
    }
    let n = n as usize;
    let gens = (2..n).map(|i| cycle_perm(n, [0, 1, i])).collect();
    PermGroup::from_generators(n, gens)
}

fn elementary_abelian(p: u32, k: u32) -> Result<PermGroup> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if k == 0 {
        return Err(invalid("elementary abelian rank must be at least 1"));
    }
    let (p, k) = (p as usize, k as usize);
    let degree = p * k;
    let gens = (0..k).map(|b| cycle_perm(degree, b * p..(b + 1) * p)).collect();
    PermGroup::from_generators(degree, gens)
}

/// Smallest r in [1, modulus) coprime to `p` whose multiplicative order
/// modulo `modulus` is exactly `order`.
fn unit_of_order(modulus: u64, p: u64, order: u64) -> Option<u64> {
    (1..modulus.max(2)).find(|&r| {
        if r % p == 0 {
            return false;
        }
        let mut x = r % modulus;
        let mut k = 1;
        while x != 1 % modulus {
            x = x * r % modulus;
            k += 1;
        }
        k == order
    })
}

/// Z_{p^m} ⋊ Z_{q^n}, the generator of the second factor acting by
/// t -> r t where r is the canonical unit of multiplicative order
/// `action_order`.
///
/// Realized on p^m + q^n points: x translates the first block, y scales it
/// and cycles the second block.
pub fn semidirect_cyclic(p: u32, m: u32, q: u32, n: u32, action_order: u32) -> Result<PermGroup> {
    let (p64, q64) = (p as u64, q as u64);
    if !is_prime(p64) {
        return Err(Error::NotPrime(p64));
    }
    if !is_prime(q64) {
        return Err(Error::NotPrime(q64));
    }
    if p == q {
        return Err(invalid("semidirect factors need distinct primes"));
    }
    if m == 0 || n == 0 {
        return Err(invalid("semidirect exponents must be at least 1"));
    }
    let a = p64.pow(m);
    let b = q64.pow(n);
    let aut_order = p64.pow(m - 1) * (p64 - 1);
    let k = action_order as u64;
    if k == 0 || b % k != 0 || aut_order % k != 0 {
        return Err(invalid(format!(
            "no automorphism of order {action_order} of C{a} induced by C{b}"
        )));
    }
    let r = unit_of_order(a, p64, k)
        .ok_or_else(|| invalid(format!("no unit of order {k} modulo {a}")))?;
    let (a, b, r) = (a as usize, b as usize, r as usize);
    let degree = a + b;
    let x = {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (t, img) in images.iter_mut().enumerate().take(a) {
            *img = ((t + 1) % a) as u32;
        }
        Permutation::from_images_unchecked(images)
    };
    let y = {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (t, img) in images.iter_mut().enumerate().take(a) {
            *img = ((t * r) % a) as u32;
        }
        for t in 0..b {
            images[a + t] = (a + (t + 1) % b) as u32;
        }
        Permutation::from_images_unchecked(images)
    };
    let gens = [x, y].into_iter().filter(|g| !g.is_identity()).collect();
    PermGroup::from_generators(degree, gens)
}

pub fn build_semidirect_cyclic(p: u32, m: u32, q: u32, n: u32, action_order: u32) -> Result<CatalogEntry> {
    build(&GroupRecipe::semidirect(p, m, q, n, action_order))
}

/// 2-dimensional matrix groups: SL/GL on nonzero row vectors, PSL/PGL on the
/// projective line.
pub fn matrix_group(kind: MatrixKind, q: u32) -> Result<PermGroup> {
    let field = SmallField::new(q as usize)?;
    let q = q as usize;
    let mut mats: Vec<[usize; 4]> = Vec::new();
    for a in 1..q {
        mats.push([1, a, 0, 1]);
        mats.push([1, 0, a, 1]);
    }
    if matches!(kind, MatrixKind::GL | MatrixKind::PGL) {
        for a in 2..q {
            mats.push([a, 0, 0, 1]);
        }
    }
    let act = |v: (usize, usize), m: &[usize; 4]| {
        (
            field.add(field.mul(v.0, m[0]), field.mul(v.1, m[2])),
            field.add(field.mul(v.0, m[1]), field.mul(v.1, m[3])),
        )
    };
    let projective = matches!(kind, MatrixKind::PSL | MatrixKind::PGL);
    let (degree, gens): (usize, Vec<Permutation>) = if projective {
        // (1, t) -> t, (0, 1) -> q
        let index = |v: (usize, usize)| {
            if v.0 != 0 {
                field.mul(v.1, field.inv(v.0))
            } else {
                q
            }
        };
        let points: Vec<(usize, usize)> = (0..q).map(|t| (1, t)).chain([(0, 1)]).collect();
        let gens = mats
            .iter()
            .map(|m| {
                Permutation::from_images_unchecked(
                    points.iter().map(|&v| index(act(v, m)) as u32).collect(),
                )
            })
            .collect();
        (q + 1, gens)
    } else {
        let index = |v: (usize, usize)| v.0 * q + v.1 - 1;
        let points: Vec<(usize, usize)> = (0..q * q).skip(1).map(|i| (i / q, i % q)).collect();
        let gens = mats
            .iter()
            .map(|m| {
                Permutation::from_images_unchecked(
                    points.iter().map(|&v| index(act(v, m)) as u32).collect(),
                )
            })
            .collect();
        (q * q - 1, gens)
    };
    let mut gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
    gens.dedup();
    PermGroup::from_generators(degree, gens)
}

pub fn build_matrix_group(kind: MatrixKind, dim: u32, q: u32) -> Result<CatalogEntry> {
    if dim != 2 {
        return Err(invalid(format!("only dimension 2 is supported, got {dim}")));
    }
    build(&GroupRecipe::matrix(kind, q))
}

/// Direct product acting on the disjoint union of both point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let (da, db) = (a.degree(), b.degree());
    let degree = da + db;
    let left = a.generators().iter().map(|g| {
        let mut images: Vec<u32> = g.images().to_vec();
        images.extend((da..degree).map(|i| i as u32));
        Permutation::from_images_unchecked(images)
    });
    let right = b.generators().iter().map(|g| {
        let mut images: Vec<u32> = (0..da as u32).collect();
        images.extend(g.images().iter().map(|&x| x + da as u32));
        Permutation::from_images_unchecked(images)
    });
    PermGroup::from_generators(degree, left.chain(right).collect())
}

/// Recipes of the default verification scope: every builtin of order at
/// most 30 listed here, followed by the larger named groups and negative
/// controls.
pub fn default_recipes() -> Vec<GroupRecipe> {
    use GroupRecipe as R;
    let mut out = Vec::new();
    for n in 1..=30 {
        out.push(R::cyclic(n));
    }
    for (p, k) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)] {
        out.push(R::elementary_abelian(p, k));
    }
    for order in (6..=30).step_by(2) {
        out.push(R::dihedral(order));
    }
    for n in 2..=7 {
        out.push(R::dicyclic(n));
    }
    out.push(R::symmetric(3));
    out.push(R::alternating(4));
    out.push(R::symmetric(4));
    out.push(R::matrix(MatrixKind::SL, 3).with_label("SL(2,3)"));
    out.push(R::semidirect(7, 1, 3, 1, 3).with_label("C7:C3"));
    out.push(R::semidirect(5, 1, 2, 2, 4).with_label("C5:C4"));
    out.push(R::semidirect(3, 1, 2, 3, 2).with_label("C3:C8"));
    out.push(R::semidirect(3, 2, 2, 1, 2).with_label("C9:C2"));
    let c = R::cyclic;
    let products = [
        (c(2), c(4)),
        (c(2), c(6)),
        (c(2), c(8)),
        (c(4), c(4)),
        (c(2), c(10)),
        (c(2), c(12)),
        (c(3), c(9)),
        (c(2), R::dicyclic(2)),
        (c(2), R::dihedral(8)),
        (c(2), R::symmetric(3)),
        (c(2), R::dihedral(10)),
        (c(2), R::alternating(4)),
        (c(3), R::dicyclic(2)),
        (c(2), R::dicyclic(3)),
        (c(4), R::symmetric(3)),
        (R::elementary_abelian(2, 2), R::symmetric(3)),
        (c(2), R::dihedral(12)),
        (R::symmetric(3), c(3)),
    ];
    for (a, b) in products {
        out.push(R::product(a, b));
    }
    out.push(R::alternating(5));
    out.push(R::semidirect(5, 2, 2, 2, 2).with_label("C25:C4"));
    out.push(R::semidirect(5, 2, 2, 2, 4).with_label("C25:C4[4]"));
    out.push(R::symmetric(5));
    out.push(R::matrix(MatrixKind::SL, 5).with_label("SL(2,5)"));
    out.push(R::product(c(2), R::alternating(5)));
    out.push(R::matrix(MatrixKind::PSL, 7).with_label("PSL(2,7)"));
    out
}

/// Builds every recipe of [`default_recipes`].
pub fn default_catalog() -> Result<Vec<CatalogEntry>> {
    default_recipes().iter().map(build).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn builtin_orders() {
        assert_eq!(build_builtin(RecipeKind::Alternating(5)).unwrap().order(), 60);
        assert_eq!(build_builtin(RecipeKind::Dihedral { order: 10 }).unwrap().order(), 10);
        assert_eq!(build_builtin(RecipeKind::Dicyclic(3)).unwrap().order(), 12);
        assert_eq!(build_builtin(RecipeKind::Dihedral { order: 4 }).unwrap().order(), 4);
        assert_eq!(build_builtin(RecipeKind::Cyclic(1)).unwrap().order(), 1);
        assert_eq!(build_builtin(RecipeKind::Alternating(2)).unwrap().order(), 1);
        assert_eq!(build_builtin(RecipeKind::ElementaryAbelian { p: 3, k: 2 }).unwrap().order(), 9);
    }

    #[test]
    fn invalid_parameters() {
        assert!(build_builtin(RecipeKind::Cyclic(0)).is_err());
        assert!(build_builtin(RecipeKind::Dihedral { order: 7 }).is_err());
        assert!(build_builtin(RecipeKind::Dihedral { order: 2 }).is_err());
        assert!(build_builtin(RecipeKind::Dicyclic(1)).is_err());
        assert!(matches!(
            build_builtin(RecipeKind::ElementaryAbelian { p: 4, k: 2 }),
            Err(Error::NotPrime(4))
        ));
    }

    #[test]
    fn semidirect_examples() {
        assert_eq!(build_semidirect_cyclic(3, 2, 2, 1, 2).unwrap().order(), 18);
        assert_eq!(build_semidirect_cyclic(5, 2, 2, 2, 4).unwrap().order(), 100);
        assert_eq!(build_semidirect_cyclic(3, 1, 2, 1, 1).unwrap().order(), 6);
    }

    #[test]
    fn semidirect_errors() {
        assert!(matches!(build_semidirect_cyclic(4, 1, 3, 1, 1), Err(Error::NotPrime(4))));
        assert!(matches!(build_semidirect_cyclic(3, 1, 9, 1, 1), Err(Error::NotPrime(9))));
        // Aut(C3) has order 2, so no action of order 4
        assert!(build_semidirect_cyclic(3, 1, 2, 2, 4).is_err());
        // action must divide 3 = |C3|
        assert!(build_semidirect_cyclic(7, 1, 3, 1, 2).is_err());
        assert!(build_semidirect_cyclic(3, 1, 3, 1, 1).is_err());
    }

    #[test]
    fn canonical_unit_choice() {
        assert_eq!(unit_of_order(25, 5, 4), Some(7));
        assert_eq!(unit_of_order(25, 5, 2), Some(24));
        assert_eq!(unit_of_order(9, 3, 2), Some(8));
        assert_eq!(unit_of_order(7, 7, 3), Some(2));
        assert_eq!(unit_of_order(5, 5, 1), Some(1));
    }

    #[test]
    fn matrix_group_orders() {
        for (kind, q, order) in [
            (MatrixKind::PSL, 4, 60),
            (MatrixKind::PSL, 5, 60),
            (MatrixKind::PSL, 7, 168),
            (MatrixKind::SL, 5, 120),
            (MatrixKind::SL, 3, 24),
            (MatrixKind::GL, 3, 48),
            (MatrixKind::PGL, 5, 120),
            (MatrixKind::PSL, 8, 504),
            (MatrixKind::PSL, 9, 360),
            (MatrixKind::PGL, 4, 60),
            (MatrixKind::SL, 2, 6),
        ] {
            let e = build_matrix_group(kind, 2, q).unwrap();
            assert_eq!(e.order(), order, "{kind}(2,{q})");
        }
        assert!(build_matrix_group(MatrixKind::SL, 2, 11).is_err());
        assert!(build_matrix_group(MatrixKind::SL, 3, 5).is_err());
    }

    #[test]
    fn direct_products() {
        let z2 = build(&GroupRecipe::cyclic(2)).unwrap().group;
        let a5 = build(&GroupRecipe::alternating(5)).unwrap().group;
        assert_eq!(direct_product(&z2, &a5).unwrap().order(), 120);
        let s3 = build(&GroupRecipe::symmetric(3)).unwrap().group;
        let z3 = build(&GroupRecipe::cyclic(3)).unwrap().group;
        assert_eq!(direct_product(&s3, &z3).unwrap().order(), 18);
        let trivial = build(&GroupRecipe::cyclic(1)).unwrap().group;
        assert_eq!(direct_product(&a5, &trivial).unwrap().order(), 60);
    }

    #[test]
    fn default_catalog_matches_closed_forms() {
        let cat = default_catalog().unwrap();
        let labels: HashSet<&str> = cat.iter().map(|e| e.label()).collect();
        assert_eq!(labels.len(), cat.len(), "labels are unique");
        for name in [
            "S4", "SL(2,3)", "A5", "S5", "SL(2,5)", "C2xA5", "PSL(2,7)", "Q12", "Q20", "D18",
            "C25:C4", "S3xC3", "C1",
        ] {
            assert!(labels.contains(name), "{name} missing");
        }
        for e in &cat {
            assert_eq!(Some(e.order()), e.recipe.expected_order(), "{}", e.label());
        }
    }
}
