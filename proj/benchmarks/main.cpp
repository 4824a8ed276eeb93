// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavshrink Authors

#include <benchmark/benchmark.h>

BENCHMARK_MAIN();
