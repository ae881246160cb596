#include "retract/classifier.hpp"
#include "retract/counting.hpp"
#include "retract/families.hpp"
#include "retract/gadgets.hpp"
#include "retract/hbis.hpp"
#include "retract/htypes.hpp"

#include <benchmark/benchmark.h>

using namespace retract;

namespace {

auto bm_count_homs_cycle(benchmark::State & state)
{
    auto g = make_cycle(static_cast<std::size_t>(state.range(0)), Loops::None);
    auto h = make_hbis({3, 3, 2, 2}, {4, 2, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(count_homs(g, h));
}
BENCHMARK(bm_count_homs_cycle)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

auto bm_naive_count(benchmark::State & state)
{
    auto g = make_path(static_cast<std::size_t>(state.range(0)), Loops::None);
    auto h = make_x_graph(1, 0, 1);
    ListAssignment lists(g.vertex_count(), all_vertices(h));
    for (auto _ : state)
        benchmark::DoNotOptimize(naive_count(g, lists, h));
}
BENCHMARK(bm_naive_count)->Arg(4)->Arg(6)->Arg(8);

auto bm_hbis_verify(benchmark::State & state)
{
    std::vector<std::size_t> sizes(static_cast<std::size_t>(state.range(0)) + 1, 3);
    std::vector<std::size_t> bristles(sizes.size() - 1, 2);
    auto h = make_hbis(sizes, bristles);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_hbis_encoding(h));
}
BENCHMARK(bm_hbis_verify)->Arg(1)->Arg(2)->Arg(4)->Arg(6);

auto bm_classify(benchmark::State & state)
{
    auto h = make_x_graph(static_cast<unsigned>(state.range(0)), 1, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(h));
}
BENCHMARK(bm_classify)->Arg(1)->Arg(4)->Arg(8);

auto bm_maximal_types(benchmark::State & state)
{
    auto h = make_x_graph(static_cast<unsigned>(state.range(0)), 1, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_maximal_types(h));
}
BENCHMARK(bm_maximal_types)->Arg(3)->Arg(6);

auto bm_kelk(benchmark::State & state)
{
    auto h = make_x_graph(static_cast<unsigned>(state.range(0)), 0, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_kelk_condition(h));
}
BENCHMARK(bm_kelk)->Arg(3)->Arg(7);

auto bm_wr3_k0(benchmark::State & state)
{
    CutInstance tri{make_complete(3, Loops::None), {0, 1, 2}, 3};
    auto hb = make_x_graph(0, 0, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_wr3_zphi(tri, hb, 0, 3, 1));
}
BENCHMARK(bm_wr3_k0);

} // namespace

BENCHMARK_MAIN();
