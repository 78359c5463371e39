#include "tfe/catalog.hpp"

namespace tfe {

std::vector<GMat> pauli()
{
	GMat s1(2), s2(2), s3(2);
	s1(0, 1) = GRat(1);
	s1(1, 0) = GRat(1);
	s2(0, 1) = -GRat::i();
	s2(1, 0) = GRat::i();
	s3(0, 0) = GRat(1);
	s3(1, 1) = GRat(-1);
	return {s1, s2, s3};
}

std::vector<GMat> gamma5()
{
	auto s = pauli();
	GMat one = GMat::id(2);
	return {GRat::i() * GMat::kron(s[0], one), GMat::kron(s[1], one), GMat::kron(s[2], s[0]),
	        GMat::kron(s[2], s[1]), GMat::kron(s[2], s[2])};
}

GMat gamma5_pair(int a, int b)
{
	auto g = gamma5();
	return GRat(Rational(1, 2)) * (g[(size_t)a] * g[(size_t)b] - g[(size_t)b] * g[(size_t)a]);
}

std::vector<GMat> gamma3()
{
	auto s = pauli();
	return {GRat::i() * s[1], s[0], s[2]};
}

GMat gamma3_pair(int a, int b)
{
	auto g = gamma3();
	return g[(size_t)a] * g[(size_t)b] - g[(size_t)b] * g[(size_t)a];
}

GMat charge_conjugation3()
{
	return -GRat::i() * gamma3()[0];
}

namespace {

// canonical a<b pair generator lookup with antisymmetry sign
struct PairBasis {
	std::string label;
	std::map<std::pair<int, int>, int> id;
	std::pair<int, int> find(int a, int b, int &sign) const
	{
		sign = a < b ? 1 : -1;
		auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
		return {id.at(key), sign};
	}
};

// [J_ab, J_cd] = s*(eta_bc J_ad + eta_ad J_bc - eta_ac J_bd - eta_bd J_ac), as Scalar factor s
void set_jj(LieSuperAlgebra &alg, PairBasis const &out, int Jab, int Jcd, int a, int b, int c,
            int d, Scalar const &s)
{
	BracketImage img;
	auto put = [&](int x, int y, Rational coef) {
		if (coef.is_zero() || x == y)
			return;
		int sign;
		auto [g, sg] = out.find(x, y, sign);
		image_add(img, g, s * Scalar(coef * Rational(sg)));
	};
	put(a, d, b == c ? eta(b) : Rational(0));
	put(b, c, a == d ? eta(a) : Rational(0));
	put(b, d, a == c ? -eta(a) : Rational(0));
	put(a, c, b == d ? -eta(b) : Rational(0));
	alg.set_bracket(Jab, Jcd, std::move(img));
}

} // namespace

LieSuperAlgebra make_poincare_like(int d, bool pp_to_j, bool maxwell, std::string name)
{
	if (d < 2)
		fail(errc::unsupported_dimension, "need d >= 2");
	LieSuperAlgebra alg(std::move(name));
	PairBasis J{"J", {}}, Z{"Z", {}};
	std::vector<int> P((size_t)d);
	for (int a = 0; a < d; ++a)
		for (int b = a + 1; b < d; ++b)
			J.id[{a, b}] = alg.add_generator({"J", {a, b}, 0});
	for (int a = 0; a < d; ++a)
		P[(size_t)a] = alg.add_generator({"P", {a}, 0});
	if (maxwell)
		for (int a = 0; a < d; ++a)
			for (int b = a + 1; b < d; ++b)
				Z.id[{a, b}] = alg.add_generator({"Z", {a, b}, 0});
	Scalar one(1);
	for (auto &[ab, Jab] : J.id)
		for (auto &[cd, Jcd] : J.id)
			if (Jab <= Jcd)
				set_jj(alg, J, Jab, Jcd, ab.first, ab.second, cd.first, cd.second, one);
	for (auto &[ab, Jab] : J.id)
		for (int c = 0; c < d; ++c) {
			BracketImage img;
			if (ab.second == c)
				image_add(img, P[(size_t)ab.first], Scalar(eta(ab.second)));
			if (ab.first == c)
				image_add(img, P[(size_t)ab.second], Scalar(-eta(ab.first)));
			alg.set_bracket(Jab, P[(size_t)c], std::move(img));
		}
	for (int a = 0; a < d; ++a)
		for (int b = a + 1; b < d; ++b) {
			BracketImage img;
			if (pp_to_j)
				image_add(img, J.id.at({a, b}), Scalar(1));
			if (maxwell)
				image_add(img, Z.id.at({a, b}), Scalar(1));
			alg.set_bracket(P[(size_t)a], P[(size_t)b], std::move(img));
		}
	if (maxwell) {
		for (auto &[ab, Jab] : J.id)
			for (auto &[cd, Zcd] : Z.id)
				set_jj(alg, Z, Jab, Zcd, ab.first, ab.second, cd.first, cd.second, one);
		for (auto &[ab, Zab] : Z.id) {
			for (int c = 0; c < d; ++c)
				alg.set_bracket(Zab, P[(size_t)c], {});
			for (auto &[cd, Zcd] : Z.id)
				if (Zab <= Zcd)
					alg.set_bracket(Zab, Zcd, {});
		}
	}
	return alg;
}

LieSuperAlgebra make_poincare(int d) { return make_poincare_like(d, false, false, "poincare" + std::to_string(d)); }
LieSuperAlgebra make_ads(int d) { return make_poincare_like(d, true, false, "ads" + std::to_string(d)); }
LieSuperAlgebra make_maxwell(int d) { return make_poincare_like(d, false, true, "maxwell" + std::to_string(d)); }

LieSuperAlgebra make_superpoincare3()
{
	int const d = 3;
	LieSuperAlgebra alg("superpoincare3");
	PairBasis J{"J", {}};
	std::vector<int> P(3);
	std::vector<int> Q(2);
	for (int a = 0; a < d; ++a)
		for (int b = a + 1; b < d; ++b)
			J.id[{a, b}] = alg.add_generator({"J", {a, b}, 0});
	for (int a = 0; a < d; ++a)
		P[(size_t)a] = alg.add_generator({"P", {a}, 0});
	for (int al = 0; al < 2; ++al)
		Q[(size_t)al] = alg.add_generator({"Q", {al}, 1});
	Scalar mi = -Scalar::i();
	for (auto &[ab, Jab] : J.id)
		for (auto &[cd, Jcd] : J.id)
			if (Jab <= Jcd)
				set_jj(alg, J, Jab, Jcd, ab.first, ab.second, cd.first, cd.second, mi);
	for (auto &[ab, Jab] : J.id)
		for (int c = 0; c < d; ++c) {
			BracketImage img;
			if (ab.second == c)
				image_add(img, P[(size_t)ab.first], mi * Scalar(eta(ab.second)));
			if (ab.first == c)
				image_add(img, P[(size_t)ab.second], -(mi * Scalar(eta(ab.first))));
			alg.set_bracket(Jab, P[(size_t)c], std::move(img));
		}
	for (int a = 0; a < d; ++a)
		for (int b = a + 1; b < d; ++b)
			alg.set_bracket(P[(size_t)a], P[(size_t)b], {});
	for (int al = 0; al < 2; ++al)
		for (int a = 0; a < d; ++a)
			alg.set_bracket(Q[(size_t)al], P[(size_t)a], {});
	// [J_ab, Q_al] = (i/4) ([G_a,G_b])_al^be Q_be   (Jacobi-consistent normalization)
	auto g3 = gamma3();
	for (auto &[ab, Jab] : J.id)
		for (int al = 0; al < 2; ++al) {
			GMat gg = gamma3_pair(ab.first, ab.second);
			BracketImage img;
			for (int be = 0; be < 2; ++be) {
				GRat v = GRat(Rational(1, 4)) * GRat::i() * gg(al, be);
				if (!v.is_zero())
					image_add(img, Q[(size_t)be], Scalar(v));
			}
			alg.set_bracket(Jab, Q[(size_t)al], std::move(img));
		}
	// {Q_al, Q_be} = 1/2 (G^a C)_{al be} P_a
	GMat C = charge_conjugation3();
	for (int al = 0; al < 2; ++al)
		for (int be = al; be < 2; ++be) {
			BracketImage img;
			for (int a = 0; a < d; ++a) {
				GMat GC = (GRat(eta(a)) * g3[(size_t)a]) * C;
				GRat v = GRat(Rational(1, 2)) * GC(al, be);
				if (!v.is_zero())
					image_add(img, P[(size_t)a], Scalar(v));
			}
			alg.set_bracket(Q[(size_t)al], Q[(size_t)be], std::move(img));
		}
	return alg;
}

CatalogAlgebra make_su22_1()
{
	auto g = gamma5();
	auto embed = [&](GMat const &m4) {
		GMat m(5);
		for (int i = 0; i < 4; ++i)
			for (int j = 0; j < 4; ++j)
				m(i, j) = m4(i, j);
		return m;
	};
	std::vector<Generator> basis;
	MatrixRep rep(5, 4);
	for (int a = 0; a < 5; ++a)
		for (int b = a + 1; b < 5; ++b) {
			basis.push_back({"J", {a, b}, 0});
			rep.add(embed(GRat(Rational(1, 2)) * gamma5_pair(a, b)));
		}
	for (int a = 0; a < 5; ++a) {
		basis.push_back({"P", {a}, 0});
		rep.add(embed(GRat(Rational(1, 2)) * g[(size_t)a]), ParamMono(Params::id("l"), -1));
	}
	{
		GMat K(5);
		for (int i = 0; i < 4; ++i)
			K(i, i) = GRat(Rational(0), Rational(1, 4));
		K(4, 4) = GRat::i();
		basis.push_back({"K", {}, 0});
		rep.add(K);
	}
	for (int gq = 0; gq < 4; ++gq) {
		GMat Q(5);
		Q(4, gq) = GRat(-2);
		basis.push_back({"Q", {gq}, 1});
		rep.add(Q);
	}
	for (int gq = 0; gq < 4; ++gq) {
		GMat Qb(5);
		Qb(gq, 4) = GRat(-2);
		basis.push_back({"Qb", {gq}, 1});
		rep.add(Qb);
	}
	CatalogAlgebra cat;
	cat.rep = rep;
	cat.algebra = brackets_from_rep(std::move(basis), rep, "su22_1");
	return cat;
}

CatalogAlgebra make_su2()
{
	auto s = pauli();
	std::vector<Generator> basis;
	MatrixRep rep(2);
	for (int a = 0; a < 3; ++a) {
		basis.push_back({"T", {a}, 0});
		rep.add(GRat(Rational(0), Rational(-1, 2)) * s[(size_t)a]);
	}
	CatalogAlgebra cat;
	cat.rep = rep;
	cat.algebra = brackets_from_rep(std::move(basis), rep, "su2");
	return cat;
}

CatalogAlgebra catalog_algebra(std::string const &name)
{
	auto split = [&](std::string const &prefix) -> std::optional<int> {
		if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
			return std::nullopt;
		std::string rest = name.substr(prefix.size());
		for (char c : rest)
			if (!isdigit((unsigned char)c))
				return std::nullopt;
		return std::stoi(rest);
	};
	if (name == "su22_1")
		return make_su22_1();
	if (name == "su2")
		return make_su2();
	if (name == "superpoincare3")
		return {make_superpoincare3(), std::nullopt};
	if (auto d = split("poincare"))
		return {make_poincare(*d), std::nullopt};
	if (auto d = split("ads"))
		return {make_ads(*d), std::nullopt};
	if (auto d = split("maxwell"))
		return {make_maxwell(*d), std::nullopt};
	if (auto n = split("u")) {
		auto [alg, rep] = cartan_weyl_algebra('A', *n);
		return {std::move(alg), std::move(rep)};
	}
	if (auto n = split("sp")) {
		if (*n % 2)
			fail(errc::unsupported_dimension, "sp needs even matrix dimension");
		auto [alg, rep] = cartan_weyl_algebra('C', *n / 2);
		return {std::move(alg), std::move(rep)};
	}
	if (auto m = split("so")) {
		if (*m < 3)
			fail(errc::unsupported_dimension, "so needs m >= 3");
		auto [alg, rep] = *m % 2 ? cartan_weyl_algebra('B', (*m - 1) / 2)
		                         : cartan_weyl_algebra('D', *m / 2);
		return {std::move(alg), std::move(rep)};
	}
	fail(errc::unknown_name, "unknown catalog algebra " + name);
}

InvariantTensor cs_gravity_tensor(LieSuperAlgebra const &alg, int d)
{
	if (d % 2 == 0)
		fail(errc::unsupported_dimension, "CS gravity tensor needs odd d");
	int n = (d - 1) / 2;
	InvariantTensor T(&alg, n + 1);
	Scalar norm(Rational(1 << n, n + 1));
	std::vector<int> idx((size_t)d);
	for (int i = 0; i < d; ++i)
		idx[(size_t)i] = i;
	// slots: n J-pairs (a<b within each pair) and one trailing P; set() fills slot orders
	do {
		bool canon = true;
		for (int k = 0; k < n; ++k)
			if (idx[(size_t)(2 * k)] > idx[(size_t)(2 * k + 1)])
				canon = false;
		// avoid double counting equal J-pair multisets: require pairs sorted by first index
		for (int k = 0; k + 1 < n; ++k)
			if (idx[(size_t)(2 * k)] > idx[(size_t)(2 * k + 2)])
				canon = false;
		if (!canon)
			continue;
		int s = levi_civita(idx);
		if (!s)
			continue;
		std::vector<int> slots;
		for (int k = 0; k < n; ++k)
			slots.push_back(alg.find("J", {idx[(size_t)(2 * k)], idx[(size_t)(2 * k + 1)]}));
		slots.push_back(alg.find("P", {idx[(size_t)(d - 1)]}));
		T.set(slots, norm * Scalar(Rational(s)));
	} while (std::next_permutation(idx.begin(), idx.end()));
	return T;
}

InvariantTensor catalog_tensor(std::string const &name, LieSuperAlgebra const &alg)
{
	auto etaeta = [&](int a, int b, int c, int d) {
		Rational v;
		if (a == d && b == c)
			v += eta(a) * eta(b);
		if (a == c && b == d)
			v -= eta(a) * eta(b);
		return v;
	};
	if (name == "ads_cs3")
		return cs_gravity_tensor(alg, 3);
	if (name == "ads_cs5")
		return cs_gravity_tensor(alg, 5);
	if (name == "ads3" || name == "maxwell3") {
		bool mx = name == "maxwell3";
		InvariantTensor T(&alg, 2);
		Scalar m0 = Scalar::param(mx ? "alpha0" : "mu0");
		Scalar m1 = Scalar::param(mx ? "alpha1" : "mu1");
		Scalar m2 = mx ? Scalar::param("alpha2") : Scalar::param("mu0");
		for (int a = 0; a < 3; ++a)
			for (int b = a + 1; b < 3; ++b)
				for (int c = 0; c < 3; ++c)
					for (int d = c + 1; d < 3; ++d) {
						Rational v = etaeta(a, b, c, d);
						if (!v.is_zero()) {
							T.set_raw({alg.find("J", {a, b}), alg.find("J", {c, d})}, m0 * Scalar(v));
							if (mx) {
								T.set_raw({alg.find("J", {a, b}), alg.find("Z", {c, d})},
								          m2 * Scalar(v));
								T.set_raw({alg.find("Z", {c, d}), alg.find("J", {a, b})},
								          m2 * Scalar(v));
							}
						}
					}
		for (int a = 0; a < 3; ++a)
			for (int b = a + 1; b < 3; ++b)
				for (int c = 0; c < 3; ++c) {
					int s = levi_civita({a, b, c});
					if (s)
						T.set({alg.find("J", {a, b}), alg.find("P", {c})}, m1 * Scalar(Rational(s)));
				}
		for (int a = 0; a < 3; ++a)
			T.set({alg.find("P", {a}), alg.find("P", {a})},
			      (mx ? m2 : m0) * Scalar(eta(a)));
		return T;
	}
	if (name == "superpoincare3") {
		InvariantTensor T(&alg, 2);
		for (int a = 0; a < 3; ++a)
			for (int b = a + 1; b < 3; ++b)
				for (int c = 0; c < 3; ++c) {
					int s = levi_civita({a, b, c});
					if (s)
						T.set({alg.find("J", {a, b}), alg.find("P", {c})}, Scalar(Rational(s)));
				}
		GMat C = charge_conjugation3();
		for (int al = 0; al < 2; ++al)
			for (int be = 0; be < 2; ++be) {
				GRat v = -GRat::i() * C(al, be);
				if (!v.is_zero())
					T.set_raw({alg.find("Q", {al}), alg.find("Q", {be})}, Scalar(v));
			}
		return T;
	}
	if (name == "su22_1_rank3") {
		auto cat = make_su22_1();
		// normalization i fixed by <KKK> = -15/16; components live on the passed algebra
		auto raw = symmetrized_trace(alg, *cat.rep, 3);
		InvariantTensor T(&alg, 3);
		for (auto &[slots, v] : raw.components())
			T.set_raw(slots, Scalar::i() * v);
		return T;
	}
	fail(errc::unknown_name, "unknown catalog tensor " + name);
}

} // namespace tfe
