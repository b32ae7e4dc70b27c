#include <benchmark/benchmark.h>

// libbenchmark_main.a on this distro ships LTO bytecode from another gcc
BENCHMARK_MAIN();
