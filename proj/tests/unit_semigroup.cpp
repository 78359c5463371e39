#include "doctest.h"
#include "tfe/catalog.hpp"
#include "tfe/semigroup.hpp"

using namespace tfe;

TEST_CASE("SE2 semigroup")
{
	auto s = AbelianSemigroup::SE2();
	CHECK(s.mul(1, 2) == 3);
	CHECK(s.mul(2, 3) == 3); // overflow caps at the zero element
	CHECK(s.zero() == 3);
	auto tr = AbelianSemigroup::trivial();
	CHECK(tr.mul(0, 0) == 0);
	CHECK(!tr.zero());
}

TEST_CASE("bad semigroup tables are rejected")
{
	CHECK_THROWS_AS(AbelianSemigroup({"a", "b"}, {{0, 1}, {0, 0}}), Error); // not commutative
	// commutative but not associative: (0*1)*1 = 1*1 = 0, 0*(1*1) = 0*0 = 1
	CHECK_THROWS_AS(AbelianSemigroup({"a", "b"}, {{1, 1}, {1, 0}}), Error);
	// wrong zero declaration
	CHECK_THROWS_AS(AbelianSemigroup({"a", "b"}, {{0, 1}, {1, 0}}, 1), Error);
}

TEST_CASE("selectors")
{
	auto s = AbelianSemigroup::SE2();
	Selector k2(s, 2);
	CHECK(k2.value({1, 2}, 3) == 1);
	for (int g = 0; g < 3; ++g)
		CHECK(k2.value({1, 2}, g) == 0);
	CHECK(k2.value({0, 2}, 2) == 1); // identity element
	Selector k3(s, 3);
	CHECK(k3.value({1, 1, 1}, 3) == 1);
	// single-valuedness: sum_gamma K = 1 for every tuple
	for (int a = 0; a < 4; ++a)
		for (int b = 0; b < 4; ++b) {
			int sum = 0;
			for (int g = 0; g < 4; ++g)
				sum += k2.value({a, b}, g);
			CHECK(sum == 1);
		}
	CHECK_THROWS_AS(Selector(s, 1), Error);
}

TEST_CASE("s-expansion of ads3 by SE2")
{
	auto ads = make_ads(3);
	auto s = AbelianSemigroup::SE2();
	auto ex = s_expand(s, ads);
	CHECK(ex.algebra.dim() == 24);
	CHECK(ex.algebra.check_jacobi().empty());

	// trivial semigroup: isomorphic to the original
	auto ex0 = s_expand(AbelianSemigroup::trivial(), ads);
	CHECK(ex0.algebra.dim() == ads.dim());
	for (auto &[key, img] : ads.table()) {
		auto &img2 = ex0.algebra.bracket(key.first, key.second);
		REQUIRE(img2.size() == img.size());
		for (size_t i = 0; i < img.size(); ++i)
			CHECK(img2[i].second == img[i].second);
	}

	// abelian input stays abelian
	LieSuperAlgebra ab("ab2");
	ab.add_generator({"X", {0}, 0});
	ab.add_generator({"X", {1}, 0});
	ab.set_bracket(0, 1, {});
	auto exab = s_expand(s, ab);
	for (int a = 0; a < exab.algebra.dim(); ++a)
		for (int b = 0; b < exab.algebra.dim(); ++b)
			CHECK(exab.algebra.bracket(a, b).empty());
}

TEST_CASE("resonant subalgebra and 0_S reduction give maxwell3")
{
	auto ads = make_ads(3);
	auto s = AbelianSemigroup::SE2();
	auto ex = s_expand(s, ads);
	// V0 = {J}, V1 = {P}
	std::vector<int> sub((size_t)ads.dim());
	for (int i = 0; i < ads.dim(); ++i)
		sub[(size_t)i] = ads.gen(i).label == "J" ? 0 : 1;
	auto res = resonant_subalgebra(ex, ads, sub, {{0, 2, 3}, {1, 3}});
	CHECK(res.algebra.dim() == 15); // 3 J x |S0|=3 plus 3 P x |S1|=2
	CHECK(res.algebra.check_jacobi().empty());

	auto red = zero_reduce(res);
	CHECK(red.algebra.dim() == 9);
	CHECK(red.algebra.check_jacobi().empty());

	// bracket-for-bracket match with catalog maxwell3 under J=(J,0), Z=(J,2), P=(P,1)
	auto mx = make_maxwell(3);
	auto map_gen = [&](int i) {
		auto [orig, alpha] = red.origin[(size_t)i];
		auto g = ads.gen(orig);
		if (g.label == "J" && alpha == 0)
			return mx.find("J", g.indices);
		if (g.label == "J" && alpha == 2)
			return mx.find("Z", g.indices);
		REQUIRE((g.label == "P" && alpha == 1));
		return mx.find("P", g.indices);
	};
	int checked = 0;
	for (int a = 0; a < red.algebra.dim(); ++a)
		for (int b = a; b < red.algebra.dim(); ++b) {
			BracketImage expect;
			for (auto &[c, v] : mx.bracket(map_gen(a), map_gen(b))) {
				int back = -1;
				for (int k = 0; k < red.algebra.dim(); ++k)
					if (map_gen(k) == c)
						back = k;
				REQUIRE(back >= 0);
				image_add(expect, back, v);
			}
			image_sort(expect);
			CHECK(red.algebra.bracket(a, b) == expect);
			++checked;
		}
	CHECK(checked == 45);

	// [J_{ab,2}, J_{cd,2}] = 0 after reduction
	int z01 = *red.find(ads.find("J", {0, 1}), 2);
	int z02 = *red.find(ads.find("J", {0, 2}), 2);
	CHECK(red.algebra.bracket(z01, z02).empty());

	// failed resonance is a diagnostic
	CHECK_THROWS_AS(resonant_subalgebra(ex, ads, sub, {{1}, {0}}), Error);
	// whole-S partition restricts to everything
	auto full = resonant_subalgebra(ex, ads, sub, {{0, 1, 2, 3}, {0, 1, 2, 3}});
	CHECK(full.algebra.dim() == 24);
	// no zero element -> reduction refuses
	auto ex0 = s_expand(AbelianSemigroup::trivial(), ads);
	CHECK_THROWS_AS(zero_reduce(ex0), Error);
}

TEST_CASE("expanded invariant tensors")
{
	auto ads = make_ads(3);
	auto base = catalog_tensor("ads3", ads);
	CHECK(base.check_invariance().empty());

	auto s = AbelianSemigroup::SE2();
	auto ex = s_expand(s, ads);
	std::vector<int> sub((size_t)ads.dim());
	for (int i = 0; i < ads.dim(); ++i)
		sub[(size_t)i] = ads.gen(i).label == "J" ? 0 : 1;
	auto red = zero_reduce(resonant_subalgebra(ex, ads, sub, {{0, 2, 3}, {1, 3}}));

	std::vector<Scalar> w = {Scalar::param("at0"), Scalar::param("at1"), Scalar::param("at2"),
	                         Scalar::param("at3")};
	auto T = expand_tensor(red, base, w);
	CHECK(T.check_invariance().empty());
	CHECK(T.check_graded_symmetry());

	// expected maxwell tensors with alpha_i = at_i * mu_j redefinitions
	auto find = [&](std::string const &lbl, std::vector<int> idx, int alpha) {
		return *red.find(ads.find(lbl, idx), alpha);
	};
	Scalar a1 = Scalar::param("at1") * Scalar::param("mu1");
	Scalar a2 = Scalar::param("at2") * Scalar::param("mu0");
	// <J_ab P_c> = at1 mu1 eps_abc
	CHECK(T.value({find("J", {0, 1}, 0), find("P", {2}, 1)}) == a1);
	// <P_a P_b> = at2 mu0 eta_ab
	CHECK(T.value({find("P", {0}, 1), find("P", {0}, 1)}) == -a2);
	CHECK(T.value({find("P", {1}, 1), find("P", {1}, 1)}) == a2);
	// <J Z> = at2 mu0 (eta_ad eta_bc - eta_ac eta_bd); at (01),(01) this is -eta_00 eta_11 = +1
	CHECK(T.value({find("J", {0, 1}, 0), find("J", {0, 1}, 2)}) == a2);
	// <Z Z> = 0 (lands on the deleted zero sector)
	CHECK(T.value({find("J", {0, 1}, 2), find("J", {0, 1}, 2)}).is_zero());

	// trivial semigroup: tensor gets one weight factor
	auto ex0 = s_expand(AbelianSemigroup::trivial(), ads);
	auto T0 = expand_tensor(ex0, base, {Scalar::param("w")});
	CHECK(T0.value({0, 1}) == base.value({0, 1}) * Scalar::param("w"));

	CHECK_THROWS_AS(expand_tensor(red, base, {Scalar(1)}), Error);
}
