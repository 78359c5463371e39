#pragma once

#include "tfe/matrixrep.hpp"

namespace tfe {

using Root = std::vector<int>;

/**
 * Cartan–Weyl data for the classical families: Cartan generators H_i and root
 * vectors X_alpha with explicit matrices satisfying [H_i, X_alpha] = alpha_i X_alpha.
 * family: 'A'/'u' = u(n), 'B' = so(2n+1), 'C' = sp(2n), 'D' = so(2n).
 */
struct CartanWeyl {
	char family = 'A';
	int rank = 0;
	int matdim = 0;
	std::vector<GMat> cartan;
	std::vector<std::pair<Root, GMat>> roots; // positive and negative

	std::vector<Root> positive_roots() const
	{
		std::vector<Root> r;
		for (auto &[a, m] : roots)
			if (is_positive(a))
				r.push_back(a);
		return r;
	}
	static bool is_positive(Root const &a)
	{
		for (int x : a) {
			if (x > 0)
				return true;
			if (x < 0)
				return false;
		}
		return false;
	}
	GMat const *root_matrix(Root const &a) const
	{
		for (auto &[r, m] : roots)
			if (r == a)
				return &m;
		return nullptr;
	}
};

inline CartanWeyl cartan_weyl_basis(char family, int n)
{
	if (n < 1)
		fail(errc::unsupported_dimension, "rank must be >= 1");
	CartanWeyl cw;
	cw.family = family == 'u' ? 'A' : family;
	cw.rank = n;
	auto E = [](int dim, int i, int j) {
		GMat m(dim);
		m(i, j) = GRat(1);
		return m;
	};
	auto root = [&](std::initializer_list<std::pair<int, int>> comps) {
		Root r((size_t)n, 0);
		for (auto &[i, v] : comps)
			r[(size_t)i] = v;
		return r;
	};
	switch (cw.family) {
	case 'A': { // u(n)
		cw.matdim = n;
		for (int i = 0; i < n; ++i)
			cw.cartan.push_back(E(n, i, i));
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				if (i != j)
					cw.roots.push_back({root({{i, 1}, {j, -1}}), E(n, i, j)});
		break;
	}
	case 'B': { // so(2n+1), with the extra dimension as the last index
		int d = 2 * n + 1;
		cw.matdim = d;
		for (int i = 0; i < n; ++i)
			cw.cartan.push_back(E(d, i, i) - E(d, n + i, n + i));
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				if (i != j)
					cw.roots.push_back({root({{i, 1}, {j, -1}}), E(d, i, j) - E(d, n + j, n + i)});
		for (int i = 0; i < n; ++i)
			for (int j = i + 1; j < n; ++j) {
				cw.roots.push_back({root({{i, 1}, {j, 1}}), E(d, i, n + j) - E(d, j, n + i)});
				cw.roots.push_back({root({{i, -1}, {j, -1}}), E(d, n + j, i) - E(d, n + i, j)});
			}
		for (int i = 0; i < n; ++i) {
			cw.roots.push_back({root({{i, 1}}), E(d, i, 2 * n) - E(d, 2 * n, n + i)});
			cw.roots.push_back({root({{i, -1}}), E(d, 2 * n, i) - E(d, n + i, 2 * n)});
		}
		break;
	}
	case 'C': { // sp(2n)
		int d = 2 * n;
		cw.matdim = d;
		for (int i = 0; i < n; ++i)
			cw.cartan.push_back(E(d, i, i) - E(d, n + i, n + i));
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				if (i != j)
					cw.roots.push_back({root({{i, 1}, {j, -1}}), E(d, i, j) - E(d, n + j, n + i)});
		for (int i = 0; i < n; ++i)
			for (int j = i + 1; j < n; ++j) {
				cw.roots.push_back({root({{i, 1}, {j, 1}}), E(d, i, n + j) + E(d, j, n + i)});
				cw.roots.push_back({root({{i, -1}, {j, -1}}), E(d, n + j, i) + E(d, n + i, j)});
			}
		for (int i = 0; i < n; ++i) {
			cw.roots.push_back({root({{i, 2}}), E(d, i, n + i)});
			cw.roots.push_back({root({{i, -2}}), E(d, n + i, i)});
		}
		break;
	}
	case 'D': { // so(2n)
		int d = 2 * n;
		cw.matdim = d;
		for (int i = 0; i < n; ++i)
			cw.cartan.push_back(E(d, i, i) - E(d, n + i, n + i));
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				if (i != j)
					cw.roots.push_back({root({{i, 1}, {j, -1}}), E(d, i, j) - E(d, n + j, n + i)});
		for (int i = 0; i < n; ++i)
			for (int j = i + 1; j < n; ++j) {
				cw.roots.push_back({root({{i, 1}, {j, 1}}), E(d, i, n + j) - E(d, j, n + i)});
				cw.roots.push_back({root({{i, -1}, {j, -1}}), E(d, n + j, i) - E(d, n + i, j)});
			}
		break;
	}
	default:
		fail(errc::unsupported_family, std::string("unknown family ") + family);
	}
	return cw;
}

/** the Cartan–Weyl data as an algebra+rep pair (structure constants by exact solve) */
inline std::pair<LieSuperAlgebra, MatrixRep> cartan_weyl_algebra(char family, int n)
{
	auto cw = cartan_weyl_basis(family, n);
	std::vector<Generator> basis;
	MatrixRep rep(cw.matdim);
	for (int i = 0; i < cw.rank; ++i) {
		basis.push_back({"H", {i}, 0});
		rep.add(cw.cartan[(size_t)i]);
	}
	for (auto &[r, m] : cw.roots) {
		basis.push_back({"X", r, 0});
		rep.add(m);
	}
	std::string nm = std::string(1, family) + std::to_string(n);
	return {brackets_from_rep(std::move(basis), rep, nm), std::move(rep)};
}

} // namespace tfe
