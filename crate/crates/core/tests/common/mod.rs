//! Independent oracles for the integration tests: a named-cell CW model
//! with joins and gluing, rational homology by elimination, and brute-force
//! coset enumeration for orbifold Picard quotients.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use swf_core::seifert::{
    enumerate_torsion_spinc, picard_quotient_order, reducibility_check, GroupOrder, OrbLineBundle, SeifertData,
    TorsionSpinC,
};

/// Augmented cellular chain complex with named cells. The empty cell `""`
/// sits in degree −1 so homology comes out reduced.
#[derive(Clone, Debug, Default)]
pub struct Cw {
    cells: BTreeMap<String, (i64, Vec<(String, i64)>)>,
}

const EMPTY: &str = "";

impl Cw {
    pub fn empty() -> Cw {
        let mut cells = BTreeMap::new();
        cells.insert(EMPTY.to_string(), (-1, Vec::new()));
        Cw { cells }
    }

    pub fn add(&mut self, name: &str, dim: i64, boundary: &[(&str, i64)]) {
        let b = if dim == 0 {
            vec![(EMPTY.to_string(), 1)]
        } else {
            boundary.iter().map(|(c, x)| (c.to_string(), *x)).collect()
        };
        for (c, _) in &b {
            assert!(self.cells.contains_key(c), "boundary cell {c} missing");
        }
        self.cells.insert(name.to_string(), (dim, b));
    }

    pub fn points(names: &[&str]) -> Cw {
        let mut x = Cw::empty();
        for n in names {
            x.add(n, 0, &[]);
        }
        x
    }

    /// A circle with one vertex and one edge.
    pub fn circle(tag: &str) -> Cw {
        let mut x = Cw::empty();
        let v = format!("{tag}.v");
        x.add(&v, 0, &[]);
        x.add(&format!("{tag}.e"), 1, &[]);
        x
    }

    pub fn disjoint_circles(k: usize, tag: &str) -> Cw {
        (0..k).fold(Cw::empty(), |acc, i| acc.union(&Cw::circle(&format!("{tag}{i}"))))
    }

    /// Union along shared cell names.
    pub fn union(&self, other: &Cw) -> Cw {
        let mut out = self.clone();
        for (k, v) in &other.cells {
            if let Some(old) = out.cells.get(k) {
                assert_eq!(old, v, "cell {k} glued inconsistently");
            }
            out.cells.insert(k.clone(), v.clone());
        }
        out
    }

    fn join_name(a: &str, b: &str) -> String {
        match (a.is_empty(), b.is_empty()) {
            (true, _) => b.to_string(),
            (_, true) => a.to_string(),
            _ => format!("({a}*{b})"),
        }
    }

    /// ∂(σ*τ) = ∂σ*τ + (−1)^{|σ|+1} σ*∂τ on augmented complexes.
    pub fn join(&self, other: &Cw) -> Cw {
        for k in self.cells.keys() {
            assert!(k.is_empty() || !other.cells.contains_key(k), "join factors share cell {k}");
        }
        let mut out = Cw::empty();
        let mut order: Vec<(i64, String, String)> = Vec::new();
        for (s, (ds, _)) in &self.cells {
            for (t, (dt, _)) in &other.cells {
                if s.is_empty() && t.is_empty() {
                    continue;
                }
                order.push((ds + dt + 1, s.clone(), t.clone()));
            }
        }
        order.sort();
        for (dim, s, t) in order {
            let (ds, bs) = &self.cells[&s];
            let (_, bt) = &other.cells[&t];
            let mut b: BTreeMap<String, i64> = BTreeMap::new();
            if !s.is_empty() {
                for (c, x) in bs {
                    if c.is_empty() && t.is_empty() {
                        continue;
                    }
                    *b.entry(Cw::join_name(c, &t)).or_default() += x;
                }
            }
            if !t.is_empty() {
                let sign = if (ds + 1) % 2 == 0 { 1 } else { -1 };
                for (c, x) in bt {
                    if c.is_empty() && s.is_empty() {
                        continue;
                    }
                    *b.entry(Cw::join_name(&s, c)).or_default() += sign * x;
                }
            }
            let name = Cw::join_name(&s, &t);
            let bv: Vec<(String, i64)> = b.into_iter().filter(|(_, x)| *x != 0).collect();
            if dim == 0 {
                out.cells.insert(name, (0, vec![(EMPTY.to_string(), 1)]));
            } else {
                out.cells.insert(name, (dim, bv));
            }
        }
        out
    }

    pub fn suspension(&self) -> Cw {
        let tag = self.cells.len();
        self.join(&Cw::points(&[&format!("n{tag}"), &format!("s{tag}")]))
    }

    fn top(&self) -> i64 {
        self.cells.values().map(|(d, _)| *d).max().unwrap_or(-1)
    }

    fn basis(&self, dim: i64) -> Vec<&String> {
        self.cells.iter().filter(|(_, (d, _))| *d == dim).map(|(k, _)| k).collect()
    }

    /// Matrix of ∂: C_dim → C_{dim−1}, rows indexed by the target.
    fn boundary(&self, dim: i64) -> Vec<Vec<i64>> {
        let src = self.basis(dim);
        let tgt = self.basis(dim - 1);
        let index: BTreeMap<&String, usize> = tgt.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut m = vec![vec![0; src.len()]; tgt.len()];
        for (j, s) in src.iter().enumerate() {
            for (c, x) in &self.cells[*s].1 {
                m[index[c]][j] += x;
            }
        }
        m
    }

    pub fn check_square_zero(&self) {
        for d in 1..=self.top() {
            let a = self.boundary(d);
            let b = self.boundary(d + 1);
            if a.is_empty() || b.is_empty() || b[0].is_empty() {
                continue;
            }
            for row in &a {
                for j in 0..b[0].len() {
                    let s: i64 = row.iter().zip(&b).map(|(x, r)| x * r[j]).sum();
                    assert_eq!(s, 0, "∂∂ ≠ 0 in degree {d}");
                }
            }
        }
    }

    /// Reduced rational Betti numbers b̃_0..b̃_top.
    pub fn reduced_betti(&self) -> Vec<usize> {
        (0..=self.top().max(0))
            .map(|d| {
                let n = self.basis(d).len();
                n - rank(&self.boundary(d)) - rank(&self.boundary(d + 1))
            })
            .collect()
    }

    /// Reduced rational cohomology ranks, from the transposed complex.
    pub fn reduced_cobetti(&self) -> Vec<usize> {
        (0..=self.top().max(0))
            .map(|d| {
                let n = self.basis(d).len();
                let delta_out = transpose(&self.boundary(d + 1));
                let delta_in = transpose(&self.boundary(d));
                n - rank(&delta_out) - rank(&delta_in)
            })
            .collect()
    }

    pub fn euler(&self) -> i64 {
        (0..=self.top()).map(|d| (-1i64).pow(d as u32) * self.basis(d).len() as i64).sum::<i64>() - 1
    }
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

/// Rank over ℚ by fraction-free elimination.
pub fn rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let (f, g) = (a[i][c], a[r][c]);
                for j in 0..cols {
                    a[i][j] = a[i][j] * g - a[r][j] * f;
                }
                let h = a[i].iter().fold(0i128, |acc, &x| num_integer::gcd(acc, x));
                if h > 1 {
                    a[i].iter_mut().for_each(|x| *x /= h);
                }
            }
        }
        r += 1;
    }
    r
}

/// k copies of S² glued along their two poles: per sphere arcs a_i, b_i
/// from S to N and discs D_i^± with ∂D_i^± = a_i − b_i.
pub fn wedge_over_s0(k: usize) -> Cw {
    let mut x = Cw::points(&["N", "S"]);
    for i in 0..k {
        let (a, b) = (format!("a{i}"), format!("b{i}"));
        x.add(&a, 1, &[("N", 1), ("S", -1)]);
        x.add(&b, 1, &[("N", 1), ("S", -1)]);
        x.add(&format!("D{i}+"), 2, &[(&a, 1), (&b, -1)]);
        x.add(&format!("D{i}-"), 2, &[(&a, 1), (&b, -1)]);
    }
    x
}

/// Σ of k Pin(2)-orbits, each a pair of circles.
pub fn suspended_pin_orbits(k: usize) -> Cw {
    Cw::disjoint_circles(2 * k, "o").suspension()
}

/// S(ℍ) = C₁*C₂ with k pairs of extra 3-spheres C₁*Cᵢ′ and C₂*Cᵢ″, glued
/// along the two circles of Pin(2).
pub fn pin_torus(k: usize) -> Cw {
    let c1 = Cw::circle("c1");
    let c2 = Cw::circle("c2");
    let mut x = c1.join(&c2);
    for i in 0..k {
        x = x.union(&c1.join(&Cw::circle(&format!("p{i}"))));
        x = x.union(&c2.join(&Cw::circle(&format!("q{i}"))));
    }
    x
}

/// Reduced homology of S^n ∖ E from reduced cohomology of E.
pub fn alexander_dual(e: &Cw, sphere_dim: usize) -> Vec<usize> {
    let co = e.reduced_cobetti();
    let mut out = vec![0; sphere_dim + 1];
    for (j, &c) in co.iter().enumerate() {
        if j + 1 <= sphere_dim {
            out[sphere_dim - 1 - j] += c;
        }
    }
    out
}

pub fn trim(mut v: Vec<usize>) -> Vec<usize> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Elements of an orbifold Picard group as (scaled degree, β) with the
/// degree multiplied by the product of the α's; the group law is addition of
/// degrees and of β modulo α, independent of any carrying rule.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coset {
    pub scaled_degree: i64,
    pub beta: Vec<i64>,
}

pub struct CosetOracle {
    pub alphas: Vec<i64>,
    pub scale: i64,
}

impl CosetOracle {
    pub fn new(alphas: &[i64]) -> Self {
        CosetOracle { alphas: alphas.to_vec(), scale: alphas.iter().product() }
    }

    pub fn element(&self, b: i64, beta: &[i64]) -> Coset {
        let frac: i64 = beta.iter().zip(&self.alphas).map(|(x, a)| x * (self.scale / a)).sum();
        Coset { scaled_degree: b * self.scale + frac, beta: beta.to_vec() }
    }

    pub fn b_of(&self, c: &Coset) -> i64 {
        let frac: i64 = c.beta.iter().zip(&self.alphas).map(|(x, a)| x * (self.scale / a)).sum();
        assert_eq!((c.scaled_degree - frac) % self.scale, 0);
        (c.scaled_degree - frac) / self.scale
    }

    pub fn plus(&self, x: &Coset, y: &Coset) -> Coset {
        Coset {
            scaled_degree: x.scaled_degree + y.scaled_degree,
            beta: x.beta.iter().zip(&y.beta).zip(&self.alphas).map(|((a, b), m)| (a + b).rem_euclid(*m)).collect(),
        }
    }

    pub fn all_betas(&self) -> Vec<Vec<i64>> {
        self.alphas.iter().fold(vec![Vec::new()], |acc, &a| {
            acc.into_iter()
                .flat_map(|p| {
                    (0..a).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect()
        })
    }

    /// Every element with scaled degree in `[lo, hi)`.
    pub fn window(&self, lo: i64, hi: i64) -> Vec<Coset> {
        let mut out = Vec::new();
        for beta in self.all_betas() {
            let frac = self.element(0, &beta).scaled_degree;
            let first = (lo - frac).div_euclid(self.scale) - 1;
            let mut b = first;
            loop {
                let d = b * self.scale + frac;
                if d >= hi {
                    break;
                }
                if d >= lo {
                    out.push(Coset { scaled_degree: d, beta: beta.clone() });
                }
                b += 1;
            }
        }
        out
    }

    /// Classes modulo ℤ·n inside a degree window at least |deg n| wide:
    /// components of the graph x ~ x + n restricted to the window.
    pub fn classes(&self, window: &[Coset], n: &Coset) -> Vec<BTreeSet<Coset>> {
        let members: BTreeSet<Coset> = window.iter().cloned().collect();
        let mut seen: BTreeSet<Coset> = BTreeSet::new();
        let neg = Coset {
            scaled_degree: -n.scaled_degree,
            beta: n.beta.iter().zip(&self.alphas).map(|(b, a)| (-b).rem_euclid(*a)).collect(),
        };
        let mut out = Vec::new();
        for x in window {
            if seen.contains(x) {
                continue;
            }
            let mut class = BTreeSet::new();
            let mut stack = vec![x.clone()];
            while let Some(y) = stack.pop() {
                if !members.contains(&y) || !class.insert(y.clone()) {
                    continue;
                }
                stack.push(self.plus(&y, n));
                stack.push(self.plus(&y, &neg));
            }
            seen.extend(class.iter().cloned());
            out.push(class);
        }
        out
    }
}

/// Multisets of cone multiplicities with product at most `cap`.
pub fn alpha_lists(cap: i64) -> Vec<Vec<i64>> {
    fn go(prefix: &mut Vec<i64>, min: i64, product: i64, cap: i64, out: &mut Vec<Vec<i64>>) {
        out.push(prefix.clone());
        for a in min..=cap / product {
            prefix.push(a);
            go(prefix, a, product * a, cap, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 2, 1, cap, &mut out);
    out
}

/// Compare enumeration, quotient order and canonical representatives with
/// brute-force classes over a degree window.
pub fn check_against_cosets(genus: i64, alphas: &[i64], max_degree: i64, full: bool) -> Result<usize, String> {
    let base = SeifertData::new(genus, alphas.iter().map(|&a| (a, 1)).collect()).map_err(|e| e.to_string())?;
    let oracle = CosetOracle::new(alphas);
    let scale = oracle.scale;
    let mut checked = 0;
    for beta in oracle.all_betas() {
        let frac = oracle.element(0, &beta).scaled_degree;
        let lo = (-max_degree * scale - frac).div_euclid(scale);
        for b in lo..=lo + 2 * max_degree + 2 {
            let n = oracle.element(b, &beta);
            if n.scaled_degree == 0 || n.scaled_degree.abs() > max_degree * scale {
                continue;
            }
            let nb = OrbLineBundle::new(b, beta.clone());
            let width = n.scaled_degree.abs();
            let window = oracle.window(-width, width);
            let classes = oracle.classes(&window, &n);
            let order = picard_quotient_order(&base, &nb).map_err(|e| e.to_string())?;
            if order != GroupOrder::Finite(classes.len() as u64) {
                return Err(format!("alphas {alphas:?}, N = {nb:?}: order {order:?}, oracle {}", classes.len()));
            }
            let listed = enumerate_torsion_spinc(&base, &nb).map_err(|e| e.to_string())?;
            if listed.len() != classes.len() {
                return Err(format!("alphas {alphas:?}, N = {nb:?}: {} listed, {} classes", listed.len(), classes.len()));
            }
            let listed: BTreeSet<Coset> =
                listed.iter().map(|c| oracle.element(c.representative().b, &c.representative().beta)).collect();
            let mut hit = vec![0usize; classes.len()];
            for rep in &listed {
                match classes.iter().position(|c| c.contains(rep)) {
                    Some(i) => hit[i] += 1,
                    None => return Err(format!("alphas {alphas:?}, N = {nb:?}: {rep:?} outside the window")),
                }
                if rep.scaled_degree < 0 || rep.scaled_degree >= width {
                    return Err(format!("alphas {alphas:?}, N = {nb:?}: {rep:?} has degree out of [0, |deg N|)"));
                }
            }
            if hit.iter().any(|&h| h != 1) {
                return Err(format!("alphas {alphas:?}, N = {nb:?}: listed classes hit cosets {hit:?}"));
            }
            checked += 1;
            if !full {
                continue;
            }
            for class in &classes {
                let mut reps = BTreeSet::new();
                // both ends of the run of class members in the window
                let ends = [class.iter().next().unwrap(), class.iter().next_back().unwrap()];
                for x in ends {
                    let e = OrbLineBundle::new(oracle.b_of(x), x.beta.clone());
                    let c = TorsionSpinC::from_bundle(&base, &nb, &e).map_err(|e| e.to_string())?;
                    let r = c.representative();
                    reps.insert(oracle.element(r.b, &r.beta));
                }
                let rep = match reps.len() {
                    1 => reps.into_iter().next().unwrap(),
                    _ => return Err(format!("alphas {alphas:?}, N = {nb:?}: class split into {reps:?}")),
                };
                if !class.contains(&rep) || !listed.contains(&rep) {
                    return Err(format!("alphas {alphas:?}, N = {nb:?}: representative {rep:?} outside its class"));
                }
            }
        }
    }
    Ok(checked)
}

/// Exhaustive smooth-base reducibility against the progression q + dℤ.
pub fn check_reducibility(max_genus: i64, max_d: i64) -> Result<usize, String> {
    let mut n = 0;
    for g in 0..=max_genus {
        let base = SeifertData::smooth(g).unwrap();
        for d in 1..=max_d {
            for q in 0..d {
                let bundle = OrbLineBundle::smooth(d);
                let c = TorsionSpinC::from_bundle(&base, &bundle, &OrbLineBundle::smooth(q)).unwrap();
                let r = reducibility_check(&base, &bundle, &c).unwrap();
                let hits = (-2..=g + 2).any(|k| (0..g - 1).contains(&(q + k * d)));
                let on_wall = (q - (g - 1)).rem_euclid(d) == 0;
                if r.all_reducible == hits || r.kernel_free == on_wall {
                    return Err(format!("g={g}, d={d}, q={q}: got {r:?}"));
                }
                n += 1;
            }
        }
    }
    Ok(n)
}

