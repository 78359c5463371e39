#include "doctest.h"
#include "tfe/matform.hpp"
#include "tfe/transgression.hpp"
#include <random>

using namespace tfe;

TEST_CASE("wedge sign rules")
{
	FormWorkspace ws;
	int e0 = ws.add_with_partner("e0", 1, 0);
	int e1 = ws.add_with_partner("e1", 1, 0);
	int ps1 = ws.add("psi1", 1, 1);
	int ps2 = ws.add("psi2", 1, 1);
	// e0 ^ e1 = -(e1 ^ e0)
	CHECK(ws.wedge(ws.generator(e0), ws.generator(e1)) ==
	      -ws.wedge(ws.generator(e1), ws.generator(e0)));
	// psi1 ^ psi2 = +(psi2 ^ psi1): odd parity, degree 1
	CHECK(ws.wedge(ws.generator(ps1), ws.generator(ps2)) ==
	      ws.wedge(ws.generator(ps2), ws.generator(ps1)));
	// e^e = 0, psi^psi != 0
	CHECK(ws.wedge(ws.generator(e0), ws.generator(e0)).is_zero());
	CHECK(!ws.wedge(ws.generator(ps1), ws.generator(ps1)).is_zero());
	// scalar bilinearity: (t e0)^(s e1) carries t*s
	FormExpr te = ws.generator(e0) * Coeff::t();
	FormExpr se = ws.generator(e1) * Coeff::s();
	FormExpr prod = ws.wedge(te, se);
	REQUIRE(prod.terms().size() == 1);
	CHECK(prod.terms().begin()->second == Coeff::t() * Coeff::s());
}

TEST_CASE("d2 = 0 and graded Leibniz on random expressions")
{
	FormWorkspace ws;
	std::vector<int> gens;
	gens.push_back(ws.add_with_partner("a", 1, 0));
	gens.push_back(ws.add_with_partner("b", 1, 0));
	gens.push_back(ws.add_with_partner("f", 0, 0));
	gens.push_back(ws.add_with_partner("psi", 1, 1));
	gens.push_back(ws.add_with_partner("chi", 0, 1));
	// include the partners as raw generators too
	std::vector<int> all = gens;
	for (int g : gens)
		all.push_back(ws.partner(g));

	std::mt19937 rng(12345);
	auto rand_expr = [&]() {
		FormExpr e;
		int terms = 1 + (int)(rng() % 3);
		for (int t = 0; t < terms; ++t) {
			FormExpr m = ws.one();
			int len = 1 + (int)(rng() % 3);
			for (int k = 0; k < len; ++k)
				m = ws.wedge(m, ws.generator(all[rng() % all.size()]));
			int c = 1 + (int)(rng() % 5);
			if (rng() & 1)
				c = -c;
			e += m * Scalar(c);
		}
		return e;
	};
	for (int trial = 0; trial < 1000; ++trial) {
		FormExpr x = rand_expr();
		CHECK(ws.d(ws.d(x)).is_zero());
	}
	for (int trial = 0; trial < 300; ++trial) {
		FormExpr x = rand_expr(), y = rand_expr();
		// homogeneous-degree slices of x obey d(x^y) = dx^y + (-1)^deg x^dy;
		// split x by degree to apply the sign
		std::map<int, FormExpr> slices;
		for (auto &[m, c] : x.terms()) {
			FormExpr e;
			e.add(m, c);
			slices[ws.degree(m)] += e;
		}
		FormExpr lhs = ws.d(ws.wedge(x, y));
		FormExpr rhs;
		for (auto &[deg, xs] : slices) {
			rhs += ws.wedge(ws.d(xs), y);
			FormExpr t = ws.wedge(xs, ws.d(y));
			rhs += (deg & 1) ? -t : t;
		}
		CHECK((lhs - rhs).is_zero());
	}
}

TEST_CASE("maurer-cartan and bianchi in matrix mode")
{
	MatWorkspace ws;
	int th = ws.add("theta", 1, 0);
	MatForm theta = ws.generator(th);
	ws.set_drule(th, -ws.mul(theta, theta));
	// d(d theta) = 0 by expansion
	CHECK(ws.d(ws.d(theta)).is_zero());

	MatWorkspace ws2;
	int om = ws2.add_with_partner("w", 1, 0);
	MatForm w = ws2.generator(om);
	MatForm F = ws2.d(w) + ws2.mul(w, w);
	// dF - F^w + w^F = 0
	CHECK((ws2.d(F) - ws2.mul(F, w) + ws2.mul(w, F)).is_zero());
}

TEST_CASE("sphere calculus")
{
	FormWorkspace ws;
	// d(1/(1+y yb)) = -(yb dy + y dyb)/(1+y yb)^2
	FormExpr f = ws.constant(Coeff::inv_onepyyb(1));
	FormExpr df = ws.d(f);
	FormExpr expect;
	expect.add({(uint16_t)ws.dy()}, -(Coeff::ybar() * Coeff::inv_onepyyb(2)));
	expect.add({(uint16_t)ws.dybar()}, -(Coeff::y() * Coeff::inv_onepyyb(2)));
	CHECK(df == expect);

	// monopole potential a_l = -alpha_l (yb dy - y dyb)/(1+y yb): d a_l = 2 alpha_l beta^betabar
	Scalar al = Scalar::param("alpha_l");
	FormExpr a;
	a.add({(uint16_t)ws.dy()}, Coeff::ybar() * Coeff::inv_onepyyb(1) * -al);
	a.add({(uint16_t)ws.dybar()}, Coeff::y() * Coeff::inv_onepyyb(1) * al);
	FormExpr da = ws.d(a);
	FormExpr expect2;
	{
		Mono m = {(uint16_t)ws.dy(), (uint16_t)ws.dybar()};
		int sign;
		REQUIRE(ws.normalize(m, sign));
		expect2.add(m, Coeff::inv_onepyyb(2) * (al * Scalar(2 * sign)));
	}
	CHECK(da == expect2);

	// two routes: d(beta ^ betabar) = d(beta)^betabar - beta^d(betabar)
	FormExpr beta, betabar;
	beta.add({(uint16_t)ws.dy()}, Coeff::inv_onepyyb(1));
	betabar.add({(uint16_t)ws.dybar()}, Coeff::inv_onepyyb(1));
	FormExpr lhs = ws.d(ws.wedge(beta, betabar));
	FormExpr rhs = ws.wedge(ws.d(beta), betabar) - ws.wedge(beta, ws.d(betabar));
	CHECK((lhs - rhs).is_zero());

	// fibre integration replaces the beta^betabar coefficient by V_S2
	FormExpr vol = ws.fibre_integrate(ws.wedge(beta, betabar));
	REQUIRE(vol.terms().size() == 1);
	CHECK(vol.terms().begin()->second == Coeff(Scalar::param("V_S2")));
	// da_l integrates to 2 alpha_l V_S2
	CHECK(ws.fibre_integrate(da) ==
	      ws.constant(Coeff(Scalar(2) * al * Scalar::param("V_S2"))));
	// residual y dependence is an error
	FormExpr badterm = ws.wedge(ws.constant(Coeff::y()), ws.wedge(beta, betabar));
	CHECK_THROWS_AS(ws.fibre_integrate(badterm), Error);
	// a term without the area element integrates to zero
	CHECK(ws.fibre_integrate(beta).is_zero());
}

TEST_CASE("matrix rewrite rules: lambda normal ordering")
{
	MatWorkspace ws;
	int L = ws.add("Lam", 0, 0);
	int Ph = ws.add_with_partner("Phi", 0, 0);
	int Phd = ws.add_with_partner("Phid", 0, 0);
	int A = ws.add_with_partner("A", 1, 0);
	// [Lam, Phi] = -i Phi ; [Lam, Phid] = +i Phid ; [Lam, A] = 0
	ws.add_rewrite(L, Ph, {{Ph, Coeff(-Scalar::i())}});
	ws.add_rewrite(L, Phd, {{Phd, Coeff(Scalar::i())}});
	ws.add_rewrite(L, A, {});
	ws.add_rewrite(L, ws.partner(Ph), {{ws.partner(Ph), Coeff(-Scalar::i())}});
	ws.add_rewrite(L, ws.partner(Phd), {{ws.partner(Phd), Coeff(Scalar::i())}});
	ws.add_rewrite(L, ws.partner(A), {});
	ws.add_rewrite(L, L, {});

	MatForm lam = ws.generator(L), phi = ws.generator(Ph), a = ws.generator(A);
	// Phi Lam = Lam Phi + i Phi
	MatForm lhs = ws.mul(phi, lam);
	MatForm rhs = ws.mul(lam, phi) + phi * Scalar::i();
	CHECK(lhs == rhs);
	// A Lam = Lam A
	CHECK(ws.mul(a, lam) == ws.mul(lam, a));
	// missing rule is an error
	int B = ws.add("B", 1, 0);
	CHECK_THROWS_AS(ws.mul(ws.generator(B), lam), Error);
}

TEST_CASE("trace cyclic canonicalization")
{
	MatWorkspace ws;
	int a = ws.add_with_partner("A", 1, 0);
	MatForm A = ws.generator(a);
	// tr(A A) = 0 for an odd 1-form
	CHECK(ws.trace(ws.mul(A, A)).is_zero());
	// tr(A dA) = tr(dA A) under graded cyclicity (odd*even: plus sign)
	MatForm dA = ws.generator(ws.partner(a));
	CHECK(ws.trace(ws.mul(A, dA)) == ws.trace(ws.mul(dA, A)));
	// tr(A A A) nonzero and cyclic
	CHECK(!ws.trace(ws.mul(A, ws.mul(A, A))).is_zero());
}
