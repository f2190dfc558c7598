#include <benchmark/benchmark.h>

#include <random>

#include "sopq/certify.hpp"
#include "sopq/json_io.hpp"

using namespace sopq;

namespace {

SOpqKType trivial(int p, int q) {
  return make_sopq_ktype(SOpqKType::Shape::Extended, SOWeight::zero(p), SOWeight::zero(q), Sign::Plus);
}

std::vector<ArthurInput> family(int p, int q, int k) {
  const Flavor f = (p + q) % 2 == 0 ? Flavor::Orthogonal : Flavor::Symplectic;
  std::vector<ArthurInput> out;
  for (const auto& d : enumerate_diagrams(2 * k, f)) out.push_back(make_arthur_input(p, q, k, d, trivial(p - k, q - k), true));
  return out;
}

}  // namespace

static void BM_WeylCanonical(benchmark::State& state) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> entry(-9, 9);
  HalfIntVec v(state.range(0));
  for (auto& x : v) x = HalfInt::from_doubled(entry(rng));
  for (auto _ : state) benchmark::DoNotOptimize(weyl_canonical(v, WeylType::D));
}
BENCHMARK(BM_WeylCanonical)->Arg(5)->Arg(20)->Arg(100);

static void BM_VD(benchmark::State& state) {
  const auto diagrams = enumerate_diagrams(static_cast<int>(state.range(0)), Flavor::Orthogonal);
  for (auto _ : state)
    for (const auto& d : diagrams) benchmark::DoNotOptimize(v_D(d));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(diagrams.size()));
}
BENCHMARK(BM_VD)->Arg(8)->Arg(16);

static void BM_Certify(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto inputs = family(k + 2, k + 3, k);
  for (auto _ : state)
    for (const auto& in : inputs) benchmark::DoNotOptimize(certify(in));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(inputs.size()));
}
BENCHMARK(BM_Certify)->Arg(2)->Arg(4)->Arg(6);

static void BM_Verify(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::vector<Certificate> certs;
  for (const auto& in : family(k + 2, k + 3, k)) certs.push_back(certify(in));
  for (auto _ : state)
    for (const auto& c : certs) benchmark::DoNotOptimize(verify(c));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(certs.size()));
}
BENCHMARK(BM_Verify)->Arg(2)->Arg(4)->Arg(6);

static void BM_CertificateJsonRoundTrip(benchmark::State& state) {
  const auto cert = certify(family(6, 7, 4).back());
  for (auto _ : state) {
    const auto text = json::encode(cert).dump();
    benchmark::DoNotOptimize(json::certificate_from_json(json::parse(text)));
  }
}
BENCHMARK(BM_CertificateJsonRoundTrip);

BENCHMARK_MAIN();
