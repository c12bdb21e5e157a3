use catmon_bench::{long_chain, raw_word};
use catmon_core::{catalog, interval::cat_of_poset, Side, UniversalMonoid};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn reduce(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduce");
    for n in [4, 8, 16] {
        let cat = cat_of_poset(&long_chain(n));
        let m = UniversalMonoid::new(&cat);
        let word = raw_word(&cat, 1000, 7);
        group.bench_with_input(BenchmarkId::from_parameter(n), &word, |b, w| {
            b.iter(|| m.reduce(black_box(w)))
        });
    }
    group.finish();
}

fn multiply_and_gcd(c: &mut Criterion) {
    let cat = catalog::c6_category();
    let m = UniversalMonoid::new(&cat);
    let xs = m.elements_up_to(3);
    c.bench_function("multiply_c6_len3", |b| {
        b.iter(|| {
            let mut acc = 0usize;
            for y in xs.iter().take(200) {
                acc += m.multiply(black_box(&xs[xs.len() - 1]), y).len();
            }
            acc
        })
    });
    c.bench_function("gcd_c6_len3", |b| {
        b.iter(|| {
            let mut found = 0usize;
            for y in xs.iter().skip(1).take(200) {
                let fam = [xs[xs.len() / 2].clone(), y.clone()];
                found += m.gcd_family(Side::Left, black_box(&fam)).unwrap().is_some() as usize;
            }
            found
        })
    });
}

fn congruence(c: &mut Criterion) {
    let p = catalog::c6_presentation();
    let (a, b, cc) = (vec![0], vec![1], vec![2]);
    c.bench_function("c6_three_ore_len6", |bch| {
        bch.iter(|| p.common_right_multiple(black_box(&[a.clone(), b.clone(), cc.clone()]), 6))
    });
}

criterion_group!(benches, reduce, multiply_and_gcd, congruence);
criterion_main!(benches);
