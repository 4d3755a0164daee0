//! Human-readable rendering of elements as words in the generators.

use std::collections::{HashMap, VecDeque};

use super::AlgebraElement;
use crate::arith::{DeltaPoly, DeltaScalar};
use crate::diagram::{Generator, Shape, WalledDiagram};

/// Shortest loop-free generator word for every diagram of the shape, e.g.
/// `d.s1.s3.d`; the identity is `1`.
pub fn generator_words(shape: Shape) -> HashMap<WalledDiagram, String> {
    let (r, n) = (shape.r, shape.n());
    let mut gens: Vec<(String, WalledDiagram)> = Vec::new();
    for i in (1..r).chain(r + 1..n) {
        gens.push((
            format!("s{i}"),
            WalledDiagram::generator(shape, Generator::S(i)).expect("valid"),
        ));
    }
    if r > 0 && shape.s > 0 {
        gens.push((
            "d".to_string(),
            WalledDiagram::generator(shape, Generator::D).expect("valid"),
        ));
    }
    let id = WalledDiagram::identity(shape);
    let mut words: HashMap<WalledDiagram, String> = HashMap::new();
    words.insert(id.clone(), "1".to_string());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        let w = words[&x].clone();
        for (name, g) in &gens {
            let res = x.compose_unchecked(g);
            if res.loops == 0 && !words.contains_key(&res.diagram) {
                let word = if w == "1" {
                    name.clone()
                } else {
                    format!("{w}.{name}")
                };
                words.insert(res.diagram.clone(), word);
                queue.push_back(res.diagram);
            }
        }
    }
    words
}

fn word_or_img(words: &HashMap<WalledDiagram, String>, d: &WalledDiagram) -> String {
    words
        .get(d)
        .cloned()
        .unwrap_or_else(|| format!("{:?}", d.img_one_based()))
}

fn signed_term(first: bool, c: &DeltaScalar, word: &str) -> String {
    let text = c.to_string();
    let (neg, abs) = match text.strip_prefix('-') {
        Some(rest) if c.numer().term_count() == 1 => (true, rest.to_string()),
        _ => (false, text),
    };
    let body = if abs == "1" {
        word.to_string()
    } else if word == "1" && !abs.contains('d') {
        // a bare numeric multiple of the identity; δ-dependent ones keep
        // `* 1` so they cannot be mistaken for the generator `d`
        if abs.contains(['+', '-']) {
            format!("({abs})")
        } else {
            abs
        }
    } else if abs.contains(['+', '-']) && !abs.starts_with('(') {
        format!("({abs}) * {word}")
    } else {
        format!("{abs} * {word}")
    };
    match (first, neg) {
        (true, false) => body,
        (true, true) => format!("-{body}"),
        (false, false) => format!(" + {body}"),
        (false, true) => format!(" - {body}"),
    }
}

/// Display form such as `1/(2*d^2-2*d) * (d.s1.s3.d - s1.d.s1.s3.d + …)`.
/// Intended for reading only; it is not parsed back.
pub fn pretty(x: &AlgebraElement) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let words = generator_words(x.shape());
    let den = x.den();
    let mut body = String::new();
    for (k, (rank, v)) in x.numer().iter().enumerate() {
        let d = crate::diagram::DiagramBasis::get(x.shape()).diagram(rank);
        let c = DeltaScalar::from_poly(v.to_delta_poly());
        body.push_str(&signed_term(k == 0, &c, &word_or_img(&words, &d)));
    }
    if den.is_one() {
        return body;
    }
    let prefactor = DeltaScalar::new(DeltaPoly::one(), den.to_delta_poly()).expect("nonzero den");
    if x.len() == 1 {
        format!("{prefactor} * {body}")
    } else {
        format!("{prefactor} * ({body})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_diagram_gets_a_word() {
        for shape in [Shape::new(2, 2), Shape::new(1, 3), Shape::new(3, 2)] {
            let words = generator_words(shape);
            assert_eq!(words.len() as u64, shape.diagram_count());
        }
    }

    #[test]
    fn renders_small_elements() {
        let s11 = Shape::new(1, 1);
        let d = AlgebraElement::generator(s11, Generator::D).unwrap();
        let one = AlgebraElement::one(s11);
        assert_eq!(pretty(&(&one - &d)), "1 - d");
        assert_eq!(pretty(&d.scale(&"1/d".parse().unwrap())), "1/d * d");
        assert_eq!(pretty(&AlgebraElement::zero(s11)), "0");
        let x2 = &AlgebraElement::scalar(s11, &DeltaScalar::delta()) - &d;
        assert_eq!(pretty(&x2), "d * 1 - d");
    }
}
