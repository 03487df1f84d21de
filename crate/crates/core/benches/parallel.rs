use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use solvlie::config::Config;
use solvlie::exec::Exec;
use solvlie::field::{FieldSpec, FiniteField};
use solvlie::generators;
use solvlie::oracle::{self, PairStrategy};
use solvlie::report::{self, CorpusKind};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn pair_search(c: &mut Criterion) {
    let l = generators::cyclic_shift_algebra(FiniteField::prime(5).unwrap()).unwrap();
    let mut group = c.benchmark_group("pair_search_cyclic_shift_gf5");
    group.sample_size(10);
    for (name, exec) in MODES {
        let cfg = Config { exec, ..Config::default() };
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| oracle::pair_search(&l, &cfg, PairStrategy::Heisenberg).unwrap())
        });
    }
    group.finish();
}

fn corpus(c: &mut Criterion) {
    let spec: FieldSpec = "gf2".parse().unwrap();
    let items = report::generate_corpus(CorpusKind::Random, &spec, 4, 40, 0).unwrap();
    let mut group = c.benchmark_group("verify_corpus_gf2_40");
    group.sample_size(10);
    for (name, exec) in MODES {
        let cfg = Config { exec, ..Config::default() };
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| report::verify_corpus(&items, &cfg))
        });
    }
    group.finish();
}

criterion_group!(benches, pair_search, corpus);
criterion_main!(benches);
