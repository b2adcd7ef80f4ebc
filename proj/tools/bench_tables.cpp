// Times the serial reference against the OpenMP kernels on the largest
// oracle-enumerable shape: the 649 characters of the Sylow 5-subgroup of
// S_25 evaluated over its 649 conjugacy classes, plus a Gram block.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sylow/oracle.hpp"

using namespace sylow;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both paths run serially\n");
#endif

    const auto G = enumerate_group(generators_P(25, 5).g_list());
    std::printf("group order %zu, classes %zu\n", G.order(), G.class_count());

    std::vector<CharPtr> chars;
    for (const auto& t : enumerate_admissible(5, 2)) chars.push_back(psi(t));

    std::vector<ValueTable> serial_tables, parallel_tables;
    const double t_serial = time_ms([&] { serial_tables = value_tables_serial(chars, G); });
    const double t_parallel = time_ms([&] { parallel_tables = value_tables(chars, G, true); });
    const bool same = serial_tables == parallel_tables;
    std::printf("value tables  (%zu chars x %zu classes): serial %8.1f ms | parallel %8.1f ms | x%.2f | %s\n",
                chars.size(), G.class_count(), t_serial, t_parallel, t_serial / t_parallel,
                same ? "match" : "MISMATCH");

    const std::vector<ValueTable> block(serial_tables.begin(), serial_tables.begin() + 128);
    std::vector<std::vector<BigInt>> gs, gp;
    const double g_serial = time_ms([&] { gs = gram_matrix_serial(block, G); });
    const double g_parallel = time_ms([&] { gp = gram_matrix(block, G, true); });
    std::printf("gram matrix   (%zu x %zu inner products): serial %8.1f ms | parallel %8.1f ms | x%.2f | %s\n",
                block.size(), block.size(), g_serial, g_parallel, g_serial / g_parallel,
                gs == gp ? "match" : "MISMATCH");

    return (same && gs == gp) ? 0 : 1;
}
