//! Weyl group elements, minimal coset representatives and Bruhat covers.
//!
//! An element is encoded by the images `(w(omega_1), ..., w(omega_r))` of the
//! fundamental weights; this is faithful and hashable. Words are read as
//! products: `s4 s3 s1 s2` is `s_4 s_3 s_1 s_2`, so on weights the rightmost
//! letter acts first. Covers are left multiplications: `v -> w` by `beta`
//! means `w = s_beta v` and `l(w) = l(v) + 1`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::rootdata::{ParabolicSpec, RootSystem, Weight};
use crate::scalar::Field;

/// Largest group we are willing to enumerate element by element.
pub const MAX_ENUMERATION: usize = 200_000;

#[derive(Debug, Clone)]
pub struct WeylElem {
    /// `images[j]` = fundamental-weight coordinates of `w(omega_j)`
    images: Vec<Vec<i64>>,
    length: usize,
}

impl PartialEq for WeylElem {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for WeylElem {}

impl std::hash::Hash for WeylElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.images.hash(state)
    }
}

/// Length first, then the canonical form.
impl Ord for WeylElem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| self.images.cmp(&other.images))
    }
}

impl PartialOrd for WeylElem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl WeylElem {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn images(&self) -> &[Vec<i64>] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    fn from_images(rs: &RootSystem, images: Vec<Vec<i64>>) -> Self {
        let mut w = WeylElem { images, length: 0 };
        w.length = (0..rs.num_positive_roots())
            .filter(|&b| !act_root(rs, &w, b).1)
            .count();
        w
    }
}

/// A Bruhat cover `lower -> upper` with `upper = s_beta lower`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverDatum {
    pub lower: WeylElem,
    pub upper: WeylElem,
    /// index of the positive root `beta`
    pub beta: usize,
    pub simple: bool,
}

pub fn identity(rs: &RootSystem) -> WeylElem {
    let r = rs.rank();
    WeylElem {
        images: (0..r)
            .map(|j| (0..r).map(|i| i64::from(i == j)).collect())
            .collect(),
        length: 0,
    }
}

/// Reflection in the positive root with index `idx`:
/// `s_beta(lambda) = lambda - <lambda, beta^vee> beta`.
pub fn reflection(rs: &RootSystem, idx: usize) -> WeylElem {
    let r = rs.rank();
    let beta = rs.root_weight(idx);
    let coroot = rs.coroot(idx);
    let images = (0..r)
        .map(|j| {
            // <omega_j, beta^vee> is the alpha_j^vee coefficient of beta^vee
            (0..r).map(|i| i64::from(i == j) - coroot[j] * beta[i]).collect()
        })
        .collect();
    WeylElem::from_images(rs, images)
}

pub fn simple_reflection(rs: &RootSystem, i: usize) -> WeylElem {
    reflection(rs, rs.simple_root_index(i))
}

fn apply_int(w: &WeylElem, v: &[i64]) -> Vec<i64> {
    let r = v.len();
    let mut out = vec![0i64; r];
    for (j, &c) in v.iter().enumerate() {
        if c != 0 {
            for (o, &x) in out.iter_mut().zip(&w.images[j]) {
                *o += c * x;
            }
        }
    }
    out
}

/// `a * b` (apply `b` first).
pub fn compose(rs: &RootSystem, a: &WeylElem, b: &WeylElem) -> WeylElem {
    let images = b.images.iter().map(|img| apply_int(a, img)).collect();
    WeylElem::from_images(rs, images)
}

pub fn act<T: Field>(rs: &RootSystem, w: &WeylElem, lambda: &Weight<T>) -> Weight<T> {
    let r = rs.rank();
    let mut out = vec![T::zero(); r];
    for (j, c) in lambda.coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(&w.images[j]) {
            if x != 0 {
                *o = o.clone() + c.clone() * T::from_int(x);
            }
        }
    }
    Weight { coords: out }
}

/// Image of the positive root `idx` under `w`: `(index, is_positive)`.
pub fn act_root(rs: &RootSystem, w: &WeylElem, idx: usize) -> (usize, bool) {
    let img = apply_int(w, rs.root_weight(idx));
    rs.lookup_root(&img).expect("Weyl group permutes roots")
}

pub fn inverse(rs: &RootSystem, w: &WeylElem) -> WeylElem {
    let word = reduced_word(rs, w);
    word.iter()
        .rev()
        .fold(identity(rs), |acc, &i| compose(rs, &acc, &simple_reflection(rs, i)))
}

/// `w^{-1}(beta)` for a positive root.
pub fn act_root_inverse(rs: &RootSystem, w: &WeylElem, idx: usize) -> (usize, bool) {
    act_root(rs, &inverse(rs, w), idx)
}

/// Is `s_i` a left descent of `w`, i.e. `w^{-1} alpha_i < 0`?
pub fn is_left_descent(rs: &RootSystem, w: &WeylElem, i: usize) -> bool {
    // l(s_i w) < l(w)
    let si = simple_reflection(rs, i);
    compose(rs, &si, w).length < w.length
}

/// Is `s_i` a right descent of `w`, i.e. `w(alpha_i) < 0`?
pub fn is_right_descent(rs: &RootSystem, w: &WeylElem, i: usize) -> bool {
    !act_root(rs, w, rs.simple_root_index(i)).1
}

/// Lexicographically minimal reduced word (0-based letters).
pub fn reduced_word(rs: &RootSystem, w: &WeylElem) -> Vec<usize> {
    let mut word = Vec::with_capacity(w.length);
    let mut cur = w.clone();
    while cur.length > 0 {
        let i = (0..rs.rank())
            .find(|&i| is_left_descent(rs, &cur, i))
            .expect("nontrivial element has a left descent");
        word.push(i);
        cur = compose(rs, &simple_reflection(rs, i), &cur);
    }
    word
}

pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<WeylElem> {
    let mut w = identity(rs);
    for &i in word {
        rs.check_node(i)?;
        w = compose(rs, &w, &simple_reflection(rs, i));
    }
    Ok(w)
}

/// Formats a word the way it is parsed: `s1 s3 s4 s2`, or `e`.
pub fn word_string(rs: &RootSystem, w: &WeylElem) -> String {
    let word = reduced_word(rs, w);
    if word.is_empty() {
        return "e".into();
    }
    word.iter()
        .map(|i| format!("s{}", i + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Displays an element by its reduced word.
pub struct Word<'a>(pub &'a RootSystem, pub &'a WeylElem);

impl fmt::Display for Word<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", word_string(self.0, self.1))
    }
}

/// Parses a Weyl word such as `s4 s3 s1 s2`, `s4s3s1s2`, `e` or `1`.
pub fn parse_word(rs: &RootSystem, s: &str) -> Result<WeylElem> {
    parse_word_with(rs, s, &[])
}

/// Like [`parse_word`], additionally resolving named elements (e.g. `v` or
/// `w2`) that may appear as factors: `s3 v` is `s_3 * v`.
pub fn parse_word_with(rs: &RootSystem, s: &str, names: &[(String, WeylElem)]) -> Result<WeylElem> {
    let chars: Vec<char> = s.chars().collect();
    let mut factors: Vec<WeylElem> = Vec::new();
    let mut i = 0;
    let bad = |msg: String| Error::Parse(format!("Weyl word `{s}`: {msg}"));
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() || matches!(c, '*' | '·' | '.' | ',') {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let tok: String = chars[start..i].iter().collect();
            if tok != "1" {
                return Err(bad(format!("unexpected number `{tok}`")));
            }
            continue;
        }
        if !c.is_alphabetic() {
            return Err(bad(format!("unexpected character `{c}`")));
        }
        let start = i;
        i += 1;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let tok: String = chars[start..i].iter().collect::<String>().to_lowercase();
        if tok == "e" {
            continue;
        }
        if let Some((_, w)) = names.iter().find(|(n, _)| *n == tok) {
            factors.push(w.clone());
            continue;
        }
        if let Some(num) = tok.strip_prefix('s') {
            let n: usize = num.parse().map_err(|_| bad(format!("bad letter `{tok}`")))?;
            if n == 0 || n > rs.rank() {
                return Err(Error::NodeOutOfRange { node: n, rank: rs.rank() });
            }
            factors.push(simple_reflection(rs, n - 1));
            continue;
        }
        return Err(bad(format!("unknown token `{tok}`")));
    }
    Ok(factors
        .iter()
        .fold(identity(rs), |acc, f| compose(rs, &acc, f)))
}

pub fn longest_element(rs: &RootSystem) -> WeylElem {
    let mut w = identity(rs);
    loop {
        match (0..rs.rank()).find(|&i| !is_right_descent(rs, &w, i)) {
            Some(i) => w = compose(rs, &w, &simple_reflection(rs, i)),
            None => return w,
        }
    }
}

/// Longest element of `W_P`.
pub fn longest_in_levi(rs: &RootSystem, p: &ParabolicSpec) -> WeylElem {
    let mut w = identity(rs);
    loop {
        match p.levi_nodes().iter().find(|&&i| !is_right_descent(rs, &w, i)) {
            Some(&i) => w = compose(rs, &w, &simple_reflection(rs, i)),
            None => return w,
        }
    }
}

/// `w in W^P` iff `w(alpha) > 0` for every `alpha in Delta(P)`.
pub fn is_minimal(rs: &RootSystem, w: &WeylElem, p: &ParabolicSpec) -> bool {
    p.levi_nodes().iter().all(|&i| !is_right_descent(rs, w, i))
}

/// All of `W`, ordered by length and then canonical form.
pub fn elements(rs: &RootSystem) -> Result<Vec<WeylElem>> {
    minimal_reps(rs, &ParabolicSpec::borel())
}

/// `W^P`, ordered by length and then canonical form.
pub fn minimal_reps(rs: &RootSystem, p: &ParabolicSpec) -> Result<Vec<WeylElem>> {
    let gens: Vec<WeylElem> = (0..rs.rank()).map(|i| simple_reflection(rs, i)).collect();
    let mut seen: HashSet<WeylElem> = HashSet::new();
    let start = identity(rs);
    seen.insert(start.clone());
    let mut layer = vec![start];
    let mut out = Vec::new();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for w in &layer {
            for g in &gens {
                let x = compose(rs, g, w);
                if x.length == w.length + 1 && is_minimal(rs, &x, p) && !seen.contains(&x) {
                    seen.insert(x.clone());
                    next.push(x);
                }
            }
        }
        out.extend(layer);
        if out.len() + next.len() > MAX_ENUMERATION {
            return Err(Error::ResourceLimit(format!(
                "more than {MAX_ENUMERATION} coset representatives"
            )));
        }
        layer = next;
    }
    out.sort();
    Ok(out)
}

/// Codimension one Schubert cells of `X_w` in `G/P`: all `(v, beta)` with `v
/// in W^P`, `w = s_beta v`, `l(w) = l(v) + 1`.
pub fn covers(rs: &RootSystem, w: &WeylElem, p: &ParabolicSpec) -> Result<Vec<CoverDatum>> {
    if !is_minimal(rs, w, p) {
        return Err(Error::NotMinimal(word_string(rs, w)));
    }
    let mut out = Vec::new();
    for beta in 0..rs.num_positive_roots() {
        let v = compose(rs, &reflection(rs, beta), w);
        if v.length + 1 == w.length && is_minimal(rs, &v, p) {
            out.push(CoverDatum {
                lower: v,
                upper: w.clone(),
                beta,
                simple: rs.height(beta) == 1,
            });
        }
    }
    out.sort_by(|a, b| a.lower.cmp(&b.lower).then(a.beta.cmp(&b.beta)));
    Ok(out)
}

/// Whether `s_l u` covers `u` inside `W^P`.
///
/// Two criteria are computed and must agree: `u^{-1} alpha_l` is a positive
/// root outside the Levi, and `s_l u in W^P` with `l(s_l u) = l(u) + 1`.
pub fn cover_test(rs: &RootSystem, u: &WeylElem, l: usize, p: &ParabolicSpec) -> bool {
    let by_roots = cover_test_roots(rs, u, l, p);
    let by_length = cover_test_length(rs, u, l, p);
    assert_eq!(by_roots, by_length, "cover criteria disagree");
    by_roots
}

pub fn cover_test_roots(rs: &RootSystem, u: &WeylElem, l: usize, p: &ParabolicSpec) -> bool {
    let (idx, pos) = act_root_inverse(rs, u, rs.simple_root_index(l));
    pos && !p.is_levi_root(rs, idx)
}

pub fn cover_test_length(rs: &RootSystem, u: &WeylElem, l: usize, p: &ParabolicSpec) -> bool {
    let up = compose(rs, &simple_reflection(rs, l), u);
    up.length == u.length + 1 && is_minimal(rs, &up, p)
}

/// `Phi_v = { alpha > 0 : v^{-1} alpha < 0 }`, as sorted root indices.
pub fn inversion_set(rs: &RootSystem, v: &WeylElem) -> Vec<usize> {
    let vinv = inverse(rs, v);
    (0..rs.num_positive_roots())
        .filter(|&b| !act_root(rs, &vinv, b).1)
        .collect()
}

/// `(Delta_w, Delta'_w)` as sorted 0-based node lists:
/// `Delta_w = Delta ∩ w(R^+_l ⊔ R^-)` and `Delta'_w = Delta ∩ w R^-`.
pub fn delta_sets(rs: &RootSystem, w: &WeylElem, p: &ParabolicSpec) -> Result<(Vec<usize>, Vec<usize>)> {
    if !is_minimal(rs, w, p) {
        return Err(Error::NotMinimal(word_string(rs, w)));
    }
    let winv = inverse(rs, w);
    let mut delta = Vec::new();
    let mut delta_prime = Vec::new();
    for i in 0..rs.rank() {
        let (idx, pos) = act_root(rs, &winv, rs.simple_root_index(i));
        if !pos {
            delta.push(i);
            delta_prime.push(i);
        } else if p.is_levi_root(rs, idx) {
            delta.push(i);
        }
    }
    Ok((delta, delta_prime))
}

/// Id lookup for a fixed enumeration.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub elements: Vec<WeylElem>,
    index: HashMap<WeylElem, usize>,
}

impl Enumeration {
    pub fn new(elements: Vec<WeylElem>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        Enumeration { elements, index }
    }

    pub fn id(&self, w: &WeylElem) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn d4() -> RootSystem {
        RootSystem::parse("D4").unwrap()
    }

    fn w(coords: &[i64]) -> Weight<Q> {
        Weight::from_ints(coords)
    }

    #[test]
    fn orientation_pinned_by_d4_fixtures() {
        let rs = d4();
        let u = parse_word(&rs, "s4 s3 s1 s2").unwrap();
        let v = parse_word(&rs, "s3 s1 s2 s4 s3 s1 s2").unwrap();
        let ww = parse_word(&rs, "s1 s2 s4 s2 s3 s1 s2").unwrap();
        let om2 = Weight::<Q>::fundamental(4, 1);
        assert_eq!(act(&rs, &u, &om2), w(&[-1, 2, -1, -1]));
        assert_eq!(act(&rs, &v, &om2), w(&[-1, 0, -1, 1]));
        assert_eq!(act(&rs, &ww, &om2), w(&[-1, 0, 1, -1]));
        assert_eq!((u.length(), v.length(), ww.length()), (4, 7, 7));
    }

    #[test]
    fn simple_reflection_fixes_other_fundamentals() {
        let rs = d4();
        for i in 0..4 {
            let s = simple_reflection(&rs, i);
            for j in 0..4 {
                let om = Weight::<Q>::fundamental(4, j);
                let img = act(&rs, &s, &om);
                if i == j {
                    assert_eq!(img, &om - &rs.simple_root(i));
                } else {
                    assert_eq!(img, om);
                }
            }
        }
    }

    #[test]
    fn group_orders_and_coset_counts() {
        let rs = d4();
        assert_eq!(elements(&rs).unwrap().len(), 192);
        let p2 = ParabolicSpec::maximal(&rs, 1).unwrap();
        assert_eq!(minimal_reps(&rs, &p2).unwrap().len(), 24);
        let a1 = RootSystem::parse("A1").unwrap();
        let reps = minimal_reps(&a1, &ParabolicSpec::borel()).unwrap();
        assert_eq!(reps.len(), 2);
        assert!(reps[0].is_identity() && reps[1].length() == 1);
        assert_eq!(elements(&RootSystem::parse("B3").unwrap()).unwrap().len(), 48);
        assert_eq!(elements(&RootSystem::parse("G2").unwrap()).unwrap().len(), 12);
    }

    #[test]
    fn coset_count_times_levi_order() {
        for (label, nodes) in [("D4", vec![0, 2, 3]), ("A3", vec![0, 2]), ("B3", vec![1]), ("D4", vec![0, 1, 2])] {
            let rs = RootSystem::parse(label).unwrap();
            let p = ParabolicSpec::new(&rs, nodes).unwrap();
            let levi = p.levi_root_system(&rs).unwrap();
            let wl = elements(&levi).unwrap().len();
            assert_eq!(minimal_reps(&rs, &p).unwrap().len() * wl, elements(&rs).unwrap().len());
        }
    }

    #[test]
    fn ex1_elements_are_minimal() {
        let rs = d4();
        let p2 = ParabolicSpec::maximal(&rs, 1).unwrap();
        for word in ["s4 s3 s1 s2", "s3 s1 s2 s4 s3 s1 s2", "s1 s2 s4 s2 s3 s1 s2"] {
            assert!(is_minimal(&rs, &parse_word(&rs, word).unwrap(), &p2), "{word}");
        }
    }

    #[test]
    fn covers_examples() {
        let rs = d4();
        let p2 = ParabolicSpec::maximal(&rs, 1).unwrap();
        let v = parse_word(&rs, "s3 s1 s2 s4 s3 s1 s2").unwrap();
        let s3v = parse_word(&rs, "s3 s3 s1 s2 s4 s3 s1 s2").unwrap();
        let cov = covers(&rs, &v, &p2).unwrap();
        assert!(cov
            .iter()
            .any(|c| c.lower == s3v && c.simple && c.beta == rs.simple_root_index(2)));

        let a1 = RootSystem::parse("A1").unwrap();
        let s = simple_reflection(&a1, 0);
        let cov = covers(&a1, &s, &ParabolicSpec::borel()).unwrap();
        assert_eq!(cov.len(), 1);
        assert!(cov[0].lower.is_identity() && cov[0].simple && cov[0].beta == 0);

        let not_min = parse_word(&rs, "s1").unwrap();
        assert!(matches!(covers(&rs, &not_min, &p2), Err(Error::NotMinimal(_))));
    }

    #[test]
    fn cover_test_examples() {
        let rs = d4();
        let p2 = ParabolicSpec::maximal(&rs, 1).unwrap();
        let u = parse_word(&rs, "s4 s3 s1 s2").unwrap();
        assert!(cover_test(&rs, &u, 1, &p2));
        let (idx, pos) = act_root_inverse(&rs, &u, rs.simple_root_index(1));
        assert!(pos);
        assert_eq!(rs.positive_roots()[idx], vec![1, 2, 1, 1]);
        assert!(!cover_test(&rs, &u, 0, &p2));
        assert!(!cover_test(&rs, &u, 2, &p2));
        assert!(!cover_test(&rs, &u, 3, &p2));
        let a1 = RootSystem::parse("A1").unwrap();
        assert!(cover_test(&a1, &identity(&a1), 0, &ParabolicSpec::borel()));
    }

    #[test]
    fn cover_criteria_agree_exhaustively() {
        for label in ["D4", "A3"] {
            let rs = RootSystem::parse(label).unwrap();
            let r = rs.rank();
            for mask in 0..(1u32 << r) {
                let nodes: Vec<usize> = (0..r).filter(|i| mask & (1 << i) != 0).collect();
                let p = ParabolicSpec::new(&rs, nodes).unwrap();
                for u in minimal_reps(&rs, &p).unwrap() {
                    for l in 0..r {
                        assert_eq!(cover_test_roots(&rs, &u, l, &p), cover_test_length(&rs, &u, l, &p));
                    }
                }
            }
        }
    }

    #[test]
    fn inversion_sets() {
        let rs = d4();
        assert!(inversion_set(&rs, &identity(&rs)).is_empty());
        for i in 0..4 {
            assert_eq!(inversion_set(&rs, &simple_reflection(&rs, i)), vec![rs.simple_root_index(i)]);
        }
        let v = parse_word(&rs, "s3 s1 s2 s4 s3 s1 s2").unwrap();
        assert_eq!(inversion_set(&rs, &v).len(), 7);
        for x in elements(&rs).unwrap() {
            assert_eq!(inversion_set(&rs, &x).len(), x.length());
        }
    }

    #[test]
    fn inversion_sets_along_simple_covers() {
        let rs = d4();
        let all = elements(&rs).unwrap();
        let borel = ParabolicSpec::borel();
        for p in [borel, ParabolicSpec::maximal(&rs, 1).unwrap()] {
            for x in minimal_reps(&rs, &p).unwrap() {
                for c in covers(&rs, &x, &p).unwrap().into_iter().filter(|c| c.simple) {
                    let sb = reflection(&rs, c.beta);
                    let phi_w: HashSet<usize> = inversion_set(&rs, &c.upper).into_iter().collect();
                    let moved: HashSet<usize> = inversion_set(&rs, &c.lower)
                        .into_iter()
                        .map(|b| {
                            let (i, pos) = act_root(&rs, &sb, b);
                            assert!(pos);
                            i
                        })
                        .collect();
                    assert!(moved.is_subset(&phi_w));
                    let diff: Vec<usize> = phi_w.difference(&moved).copied().collect();
                    assert_eq!(diff, vec![c.beta]);
                }
            }
        }
        assert_eq!(all.len(), 192);
    }

    #[test]
    fn simple_covers_match_left_descents() {
        let rs = d4();
        for p in (0..4).map(|k| ParabolicSpec::maximal(&rs, k).unwrap()) {
            for x in minimal_reps(&rs, &p).unwrap() {
                let simple: Vec<usize> = covers(&rs, &x, &p)
                    .unwrap()
                    .into_iter()
                    .filter(|c| c.simple)
                    .map(|c| rs.positive_roots()[c.beta].iter().position(|&n| n == 1).unwrap())
                    .collect();
                let mut simple = simple;
                simple.sort_unstable();
                let descents: Vec<usize> = (0..4).filter(|&l| is_left_descent(&rs, &x, l)).collect();
                assert_eq!(simple, descents);
            }
        }
    }

    #[test]
    fn delta_set_examples() {
        let rs = d4();
        let borel = ParabolicSpec::borel();
        assert_eq!(delta_sets(&rs, &identity(&rs), &borel).unwrap().1, Vec::<usize>::new());
        let w0 = longest_element(&rs);
        assert_eq!(w0.length(), 12);
        assert_eq!(delta_sets(&rs, &w0, &borel).unwrap().1, vec![0, 1, 2, 3]);
        let p2 = ParabolicSpec::maximal(&rs, 1).unwrap();
        let v = parse_word(&rs, "s3 s1 s2 s4 s3 s1 s2").unwrap();
        let (d, dp) = delta_sets(&rs, &v, &p2).unwrap();
        assert!(dp.contains(&2));
        assert!(dp.iter().all(|x| d.contains(x)));
    }

    #[test]
    fn words_round_trip_and_inverse() {
        let rs = d4();
        for x in elements(&rs).unwrap() {
            let back = parse_word(&rs, &word_string(&rs, &x)).unwrap();
            assert_eq!(back, x);
            let inv = inverse(&rs, &x);
            assert!(compose(&rs, &x, &inv).is_identity());
            assert_eq!(inverse(&rs, &inv), x);
        }
        assert_eq!(word_string(&rs, &parse_word(&rs, "s4s3s1s2").unwrap()), "s1 s3 s4 s2");
        assert!(parse_word(&rs, "1").unwrap().is_identity());
        assert!(parse_word(&rs, "s5").is_err());
        assert!(parse_word(&rs, "t2").is_err());
    }

    #[test]
    fn named_factors() {
        let rs = d4();
        let v = parse_word(&rs, "s3 s1 s2 s4 s3 s1 s2").unwrap();
        let names = vec![("v".to_string(), v.clone())];
        let s3v = parse_word_with(&rs, "s3v", &names).unwrap();
        assert_eq!(s3v, compose(&rs, &simple_reflection(&rs, 2), &v));
    }
}
