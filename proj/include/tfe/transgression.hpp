#pragma once

#include "tfe/lieform.hpp"
#include "tfe/matform.hpp"
#include "tfe/report.hpp"

namespace tfe {

inline FormExpr integrate_t(FormExpr const &x)
{
	FormExpr r;
	for (auto &[m, c] : x.terms())
		r.add(m, c.integrate_t());
	return r;
}
inline FormExpr integrate_st(FormExpr const &x)
{
	FormExpr r;
	for (auto &[m, c] : x.terms())
		r.add(m, c.integrate_st());
	return r;
}
inline MatForm integrate_t(MatForm const &x)
{
	MatForm r;
	for (auto &[m, c] : x.terms())
		r.add(m, c.integrate_t());
	return r;
}
inline TraceExpr integrate_t(TraceExpr const &x)
{
	TraceExpr r;
	for (auto &[m, c] : x.terms())
		r.add(m, c.integrate_t());
	return r;
}
inline TraceExpr integrate_st(TraceExpr const &x)
{
	TraceExpr r;
	for (auto &[m, c] : x.terms())
		r.add(m, c.integrate_st());
	return r;
}

// ---------------------------------------------------------------------------
// component (Lie-algebra) mode
// ---------------------------------------------------------------------------

/** T_{A<-Abar} = (n+1) kappa int_0^1 dt <Theta ^ F_t^n>,  rank(T) = n+1 */
inline FormExpr transgression(LieFormOps const &ops, InvariantTensor const &T, LieForm const &A,
                              LieForm const &Abar, Scalar const &kappa = Scalar(1))
{
	int n = T.rank() - 1;
	LieForm Th = lf_sub(A, Abar);
	LieForm At = lf_add(Abar, lf_scale(Th, Coeff::t()));
	LieForm Ft = ops.curvature(At);
	std::vector<LieForm> slots;
	slots.push_back(Th);
	for (int i = 0; i < n; ++i)
		slots.push_back(Ft);
	FormExpr expr = ops.pair(T, slots);
	return integrate_t(expr) * (kappa * Scalar(Rational(n + 1)));
}

inline FormExpr chern_simons(LieFormOps const &ops, InvariantTensor const &T, LieForm const &A,
                             Scalar const &kappa = Scalar(1))
{
	return transgression(ops, T, A, {}, kappa);
}

/** Q_{A2<-A1<-A0} = n(n+1) int_0^1 dt int_0^t ds <(A2-A1)^(A1-A0)^F_st^{n-1}> */
inline FormExpr triangle_q(LieFormOps const &ops, InvariantTensor const &T, LieForm const &A2,
                           LieForm const &A1, LieForm const &A0, Scalar const &kappa = Scalar(1))
{
	int n = T.rank() - 1;
	if (n < 1)
		fail(errc::rank_mismatch, "triangle needs rank >= 2");
	LieForm d21 = lf_sub(A2, A1), d10 = lf_sub(A1, A0);
	LieForm Ast = lf_add(A0, lf_add(lf_scale(d10, Coeff::t()), lf_scale(d21, Coeff::s())));
	LieForm Fst = ops.curvature(Ast);
	std::vector<LieForm> slots;
	slots.push_back(d21);
	slots.push_back(d10);
	for (int i = 0; i + 1 < n; ++i)
		slots.push_back(Fst);
	FormExpr expr = ops.pair(T, slots);
	return integrate_st(expr) * (kappa * Scalar(Rational(n * (n + 1))));
}

/** d T_{A<-Abar} - <F^{n+1}> + <Fbar^{n+1}>  (identically zero) */
inline FormExpr verify_chern_weil(LieFormOps const &ops, InvariantTensor const &T, LieForm const &A,
                                  LieForm const &Abar)
{
	int n = T.rank() - 1;
	FormExpr t = transgression(ops, T, A, Abar);
	LieForm F = ops.curvature(A), Fb = ops.curvature(Abar);
	std::vector<LieForm> sF((size_t)n + 1, F), sFb((size_t)n + 1, Fb);
	return ops.ws().d(t) - ops.pair(T, sF) + ops.pair(T, sFb);
}

/** T_{A2<-A0} - T_{A2<-A1} - T_{A1<-A0} - d Q_{A2<-A1<-A0}  (identically zero) */
inline FormExpr verify_triangle(LieFormOps const &ops, InvariantTensor const &T, LieForm const &A2,
                                LieForm const &A1, LieForm const &A0)
{
	FormExpr q = triangle_q(ops, T, A2, A1, A0);
	return transgression(ops, T, A2, A0) - transgression(ops, T, A2, A1) -
	       transgression(ops, T, A1, A0) - ops.ws().d(q);
}

/** ECHF closed identities: p=0 is Chern-Weil, p=1 is the triangle equation */
inline FormExpr verify_echf_p0(LieFormOps const &ops, InvariantTensor const &T, LieForm const &A0,
                               LieForm const &A1)
{
	return verify_chern_weil(ops, T, A1, A0);
}
inline FormExpr verify_echf_p1(LieFormOps const &ops, InvariantTensor const &T, LieForm const &A2,
                               LieForm const &A1, LieForm const &A0)
{
	return verify_triangle(ops, T, A2, A1, A0);
}

struct SeparationPiece {
	std::string label;
	TermClass cls;
	FormExpr expr;
	std::optional<FormExpr> potential; // boundary pieces: expr = d(potential)
};

struct Separation {
	std::vector<SeparationPiece> pieces;
	FormExpr total; // transgression(A, Abar), for the re-assembly check

	FormExpr reassembly_residual(FormWorkspace &ws) const
	{
		FormExpr s;
		for (auto &p : pieces)
			s += p.expr;
		return s - total;
	}
};

/**
 * Subspace separation: recursive triangle equation along a chain
 * A_0 = Abar, A_1, ..., A_{p+1} = A. Pieces are the transgressions
 * T_{A_{k+1} <- A_k} plus the accumulated boundary terms d Q.
 * When `subspace` is given (generator -> subspace index), each chain step is
 * checked to add exactly one subspace.
 */
inline Separation subspace_separation(LieFormOps const &ops, InvariantTensor const &T,
                                      std::vector<LieForm> const &chain,
                                      Scalar const &kappa = Scalar(1),
                                      std::map<int, int> const *subspace = nullptr)
{
	if (chain.size() < 2)
		fail(errc::chain_not_nested, "chain needs at least two connections");
	if (subspace) {
		for (size_t k = 0; k + 1 < chain.size(); ++k) {
			LieForm diff = lf_sub(chain[k + 1], chain[k]);
			int sub = -1;
			for (auto &[g, e] : diff) {
				auto it = subspace->find(g);
				int s = it == subspace->end() ? -1 : it->second;
				if (sub == -1)
					sub = s;
				else if (sub != s)
					fail(errc::chain_not_nested,
					     "chain step " + std::to_string(k) + " mixes subspaces");
			}
		}
	}
	Separation sep;
	// T_{A<-Abar} = sum_k T_{A_{k+1}<-A_k} + sum_k d Q_{A_{p+1}<-A_{k+1}<-A_k}  (k descending)
	size_t m = chain.size() - 1;
	for (size_t k = 0; k < m; ++k) {
		FormExpr t = transgression(ops, T, chain[k + 1], chain[k], kappa);
		sep.pieces.push_back({"T[" + std::to_string(k + 1) + "<-" + std::to_string(k) + "]",
		                      TermClass::bulk, std::move(t), std::nullopt});
	}
	for (size_t k = 0; k + 1 < m; ++k) {
		FormExpr q = triangle_q(ops, T, chain[m], chain[k + 1], chain[k], kappa);
		if (q.is_zero())
			continue;
		sep.pieces.push_back({"dQ[" + std::to_string(m) + "<-" + std::to_string(k + 1) + "<-" +
		                          std::to_string(k) + "]",
		                      TermClass::boundary, ops.ws().d(q), q});
	}
	sep.total = transgression(ops, T, chain[m], chain[0], kappa);
	return sep;
}

// ---------------------------------------------------------------------------
// matrix mode
// ---------------------------------------------------------------------------

/** T_{A<-Abar} = (n+1) kappa int dt <Theta, F_t, ..., F_t> with F = dA + A^2 */
inline TraceExpr transgression_mat(MatWorkspace &ws, int n, MatForm const &A, MatForm const &Abar,
                                   Scalar const &kappa = Scalar(1))
{
	MatForm Th = A - Abar;
	MatForm At = Abar + Th * Coeff::t();
	MatForm Ft = ws.d(At) + ws.mul(At, At);
	std::vector<MatForm> slots;
	slots.push_back(Th);
	for (int i = 0; i < n; ++i)
		slots.push_back(Ft);
	return integrate_t(ws.trace_pair(slots)) * Coeff(kappa * Scalar(Rational(n + 1)));
}

inline TraceExpr chern_simons_mat(MatWorkspace &ws, int n, MatForm const &A,
                                  Scalar const &kappa = Scalar(1))
{
	return transgression_mat(ws, n, A, {}, kappa);
}

inline TraceExpr triangle_q_mat(MatWorkspace &ws, int n, MatForm const &A2, MatForm const &A1,
                                MatForm const &A0, Scalar const &kappa = Scalar(1))
{
	if (n < 1)
		fail(errc::rank_mismatch, "triangle needs n >= 1");
	MatForm d21 = A2 - A1, d10 = A1 - A0;
	MatForm Ast = A0 + d10 * Coeff::t() + d21 * Coeff::s();
	MatForm Fst = ws.d(Ast) + ws.mul(Ast, Ast);
	std::vector<MatForm> slots;
	slots.push_back(d21);
	slots.push_back(d10);
	for (int i = 0; i + 1 < n; ++i)
		slots.push_back(Fst);
	return integrate_st(ws.trace_pair(slots)) * Coeff(kappa * Scalar(Rational(n * (n + 1))));
}

inline TraceExpr verify_triangle_mat(MatWorkspace &ws, int n, MatForm const &A2, MatForm const &A1,
                                     MatForm const &A0)
{
	TraceExpr q = triangle_q_mat(ws, n, A2, A1, A0);
	return transgression_mat(ws, n, A2, A0) - transgression_mat(ws, n, A2, A1) -
	       transgression_mat(ws, n, A1, A0) - ws.trace_d(q);
}

inline TraceExpr verify_chern_weil_mat(MatWorkspace &ws, int n, MatForm const &A,
                                       MatForm const &Abar)
{
	TraceExpr t = transgression_mat(ws, n, A, Abar);
	MatForm F = ws.d(A) + ws.mul(A, A);
	MatForm Fb = ws.d(Abar) + ws.mul(Abar, Abar);
	std::vector<MatForm> sF((size_t)n + 1, F), sFb((size_t)n + 1, Fb);
	return ws.trace_d(t) - ws.trace_pair(sF) + ws.trace_pair(sFb);
}

/** Wess-Zumino term T_{theta<-0} over a Maurer-Cartan generator */
inline TraceExpr wess_zumino(MatWorkspace &ws, int n, int theta, Scalar const &kappa = Scalar(1))
{
	return chern_simons_mat(ws, n, ws.generator(theta), kappa);
}

/** generators + rewrite rules of the conjugation-stripped gauged WZW setup */
struct GaugedWzwSetup {
	MatWorkspace ws;
	int theta = -1, B = -1, C = -1;

	GaugedWzwSetup()
	{
		theta = ws.add("theta", 1, 0);
		B = ws.add("B", 1, 0);
		C = ws.add("C", 2, 0);
		// d theta = -theta^2 ; dB = -[theta,B] + C ; dC = -[theta,C]
		MatForm th = ws.generator(theta), b = ws.generator(B), c = ws.generator(C);
		ws.set_drule(theta, -ws.mul(th, th));
		ws.set_drule(B, -(ws.mul(th, b) + ws.mul(b, th)) + c);
		ws.set_drule(C, -(ws.mul(th, c) - ws.mul(c, th)));
	}
};

struct GaugedWzwReport {
	TraceExpr bulk;        // T_{A^g <- theta}, maps to CS(A) under B->A, C->dA
	TraceExpr wz;          // T_{theta <- 0}
	TraceExpr boundary_q;  // Q_{A^g <- theta <- 0}
	TraceExpr reassembly;  // bulk + wz + d(boundary_q) - T_{A^g<-0}  (zero)
	MatForm f_st;          // curvature of A_st = t theta + s B (recorded ground truth)
};

inline GaugedWzwReport gauged_wzw(GaugedWzwSetup &setup, int n, Scalar const &kappa = Scalar(1))
{
	auto &ws = setup.ws;
	MatForm th = ws.generator(setup.theta), b = ws.generator(setup.B);
	MatForm Ag = th + b;
	GaugedWzwReport rep;
	rep.bulk = transgression_mat(ws, n, Ag, th, kappa);
	rep.wz = wess_zumino(ws, n, setup.theta, kappa);
	rep.boundary_q = triangle_q_mat(ws, n, Ag, th, MatForm{}, kappa);
	rep.reassembly = rep.bulk + rep.wz + ws.trace_d(rep.boundary_q) -
	                 transgression_mat(ws, n, Ag, MatForm{}, kappa);
	MatForm Ast = th * Coeff::t() + b * Coeff::s();
	rep.f_st = ws.d(Ast) + ws.mul(Ast, Ast);
	return rep;
}

} // namespace tfe
