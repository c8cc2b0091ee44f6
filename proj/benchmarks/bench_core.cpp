// Microbenchmarks for the hot paths: exact rational solves, class
// materialization, certificate verification, and full table regeneration.

#include <benchmark/benchmark.h>

#include "fanobig/certify.hpp"
#include "fanobig/report.hpp"

namespace {

using namespace fanobig;

void BM_RationalArithmetic(benchmark::State& state) {
    Rational a(355, 113);
    Rational b(-377, 120);
    for (auto _ : state) {
        Rational c = a * b + a - b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_RationalArithmetic);

void BM_SecantClass(benchmark::State& state) {
    for (auto _ : state) {
        DaggerClass cls = secant_lines_class(CurveDG{7, 5}, true);
        benchmark::DoNotOptimize(cls);
    }
}
BENCHMARK(BM_SecantClass);

void BM_PushforwardSolve(benchmark::State& state) {
    const FanoModel& model = get("2-8");
    FamilyData fd;
    fd.k = 12;
    fd.r = 56;
    fd.polarization = "H";
    fd.s = {{"H", 1}, {"D", 0}};
    for (auto _ : state) {
        DivisorClass cls = universal_family_pushforward(model, fd);
        benchmark::DoNotOptimize(cls);
    }
}
BENCHMARK(BM_PushforwardSolve);

void BM_VerifyNotBig(benchmark::State& state) {
    const FanoModel& model = get("2-13");
    for (auto _ : state) {
        Verdict verdict = evaluate_model(model);
        benchmark::DoNotOptimize(verdict);
    }
}
BENCHMARK(BM_VerifyNotBig);

void BM_VerifyBig(benchmark::State& state) {
    const FanoModel& model = get("2-27");
    for (auto _ : state) {
        Verdict verdict = evaluate_model(model);
        benchmark::DoNotOptimize(verdict);
    }
}
BENCHMARK(BM_VerifyBig);

void BM_FullTable(benchmark::State& state) {
    for (auto _ : state) {
        std::vector<TableRow> rows = build_table();
        benchmark::DoNotOptimize(rows);
    }
}
BENCHMARK(BM_FullTable);

}  // namespace

BENCHMARK_MAIN();
