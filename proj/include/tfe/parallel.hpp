#pragma once

#include <cstdlib>
#include <functional>
#include <vector>
#ifdef _OPENMP
#include <omp.h>
#endif

namespace tfe {

/** runtime switch: TFE_SERIAL=1 forces the serial reference path everywhere */
inline bool parallel_enabled()
{
	static bool on = [] {
		char const *e = std::getenv("TFE_SERIAL");
		return !(e && e[0] == '1');
	}();
	return on;
}

/**
 * Deterministic parallel sweep: body(i) fills out[i] independently.
 * The OpenMP and serial paths produce identical vectors; tests compare them.
 */
template <class T, class F> std::vector<T> parallel_map(size_t n, F &&body)
{
	std::vector<T> out(n);
	if (parallel_enabled()) {
#pragma omp parallel for schedule(dynamic, 16)
		for (long long i = 0; i < (long long)n; ++i)
			out[(size_t)i] = body((size_t)i);
	} else {
		for (size_t i = 0; i < n; ++i)
			out[i] = body(i);
	}
	return out;
}

template <class T, class F> std::vector<T> serial_map(size_t n, F &&body)
{
	std::vector<T> out(n);
	for (size_t i = 0; i < n; ++i)
		out[i] = body(i);
	return out;
}

} // namespace tfe
