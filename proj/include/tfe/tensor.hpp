#pragma once

#include "tfe/algebra.hpp"
#include "tfe/matrixrep.hpp"
#include "tfe/parallel.hpp"

namespace tfe {

struct InvarianceViolation {
	int b;                  // acting generator
	std::vector<int> slots; // tuple where the residual is nonzero
	Scalar residual;
};

/**
 * Graded-symmetric invariant tensor: sparse multilinear form on a fixed
 * algebra. Components are stored on every slot ordering (the canonicalizer
 * fills the graded-symmetric orbit), so lookups are plain.
 */
class InvariantTensor
{
  public:
	InvariantTensor() = default;
	InvariantTensor(LieSuperAlgebra const *alg, int rank) : alg_(alg), rank_(rank) {}

	LieSuperAlgebra const *algebra() const { return alg_; }
	int rank() const { return rank_; }
	auto const &components() const { return comp_; }
	bool is_zero() const { return comp_.empty(); }

	Scalar value(std::vector<int> const &slots) const
	{
		auto it = comp_.find(slots);
		return it == comp_.end() ? Scalar() : it->second;
	}

	/**
	 * Set one component and its full graded-symmetric orbit.
	 * Conflicting assignments (violating graded symmetry) throw.
	 */
	void set(std::vector<int> slots, Scalar const &v)
	{
		if ((int)slots.size() != rank_)
			fail(errc::rank_mismatch, "tensor component of wrong rank");
		if (v.is_zero())
			return;
		// enumerate permutations with Koszul signs
		std::vector<int> perm((size_t)rank_);
		for (int i = 0; i < rank_; ++i)
			perm[(size_t)i] = i;
		do {
			int sign = 1;
			// Koszul sign: for each inverted pair of odd slots, -1
			for (int i = 0; i < rank_; ++i)
				for (int j = i + 1; j < rank_; ++j)
					if (perm[(size_t)i] > perm[(size_t)j] && alg_->parity(slots[(size_t)perm[(size_t)i]]) &&
					    alg_->parity(slots[(size_t)perm[(size_t)j]]))
						sign = -sign;
			std::vector<int> key((size_t)rank_);
			for (int i = 0; i < rank_; ++i)
				key[(size_t)i] = slots[(size_t)perm[(size_t)i]];
			Scalar sv = sign < 0 ? -v : v;
			auto it = comp_.find(key);
			if (it != comp_.end()) {
				if (it->second != sv)
					fail(errc::malformed_coefficient, "tensor component conflicts with graded symmetry");
			} else
				comp_[key] = sv;
		} while (std::next_permutation(perm.begin(), perm.end()));
	}

	/** insert exactly one component (caller supplies the full orbit itself) */
	void set_raw(std::vector<int> const &slots, Scalar const &v)
	{
		if ((int)slots.size() != rank_)
			fail(errc::rank_mismatch, "tensor component of wrong rank");
		if (v.is_zero())
			return;
		auto it = comp_.find(slots);
		if (it != comp_.end()) {
			if (it->second != v)
				fail(errc::malformed_coefficient, "conflicting tensor component");
		} else
			comp_[slots] = v;
	}

	/** componentwise graded-symmetry self test (swap of adjacent slots) */
	bool check_graded_symmetry() const
	{
		for (auto &[slots, v] : comp_)
			for (int i = 0; i + 1 < rank_; ++i) {
				auto sw = slots;
				std::swap(sw[(size_t)i], sw[(size_t)i + 1]);
				int sign = alg_->parity(slots[(size_t)i]) && alg_->parity(slots[(size_t)i + 1]) ? -1 : 1;
				if (value(sw) != (sign < 0 ? -v : v))
					return false;
			}
		return true;
	}

	/**
	 * Ad-invariance sweep: for every acting generator B and every slot tuple,
	 * sum_i (Koszul sign) <A_1 .. [B,A_i] .. A_r> must vanish. The tuple space
	 * is the support closure; the sweep is an OpenMP kernel with a serial
	 * reference used by the tests.
	 */
	std::vector<InvarianceViolation> check_invariance(bool force_serial = false) const
	{
		int n = alg_->dim();
		size_t tuples = 1;
		for (int i = 0; i < rank_; ++i)
			tuples *= (size_t)n;
		size_t total = tuples * (size_t)n;
		auto body = [&](size_t t) -> std::optional<InvarianceViolation> {
			int b = (int)(t / tuples);
			size_t rest = t % tuples;
			std::vector<int> slots((size_t)rank_);
			for (int i = rank_ - 1; i >= 0; --i) {
				slots[(size_t)i] = (int)(rest % (size_t)n);
				rest /= (size_t)n;
			}
			Scalar acc = invariance_residual(b, slots);
			if (acc.is_zero())
				return std::nullopt;
			return InvarianceViolation{b, slots, acc};
		};
		auto results = force_serial ? serial_map<std::optional<InvarianceViolation>>(total, body)
		                            : parallel_map<std::optional<InvarianceViolation>>(total, body);
		std::vector<InvarianceViolation> bad;
		for (auto &r : results)
			if (r)
				bad.push_back(std::move(*r));
		return bad;
	}

	Scalar invariance_residual(int b, std::vector<int> const &slots) const
	{
		Scalar acc;
		int pb = alg_->parity(b);
		int ppre = 0;
		for (int i = 0; i < rank_; ++i) {
			int sign = (pb && (ppre & 1)) ? -1 : 1;
			for (auto &[e, c] : alg_->bracket(b, slots[(size_t)i])) {
				auto key = slots;
				key[(size_t)i] = e;
				Scalar v = value(key);
				if (!v.is_zero())
					acc += sign < 0 ? -(c * v) : c * v;
			}
			ppre += alg_->parity(slots[(size_t)i]);
		}
		return acc;
	}

  private:
	LieSuperAlgebra const *alg_ = nullptr;
	int rank_ = 0;
	std::map<std::vector<int>, Scalar> comp_;
};

/**
 * Graded-symmetrized (super)trace of rank-r products of representation
 * matrices: (1/r!) sum_sigma Koszul(sigma) sTr(M_{sigma(1)}...M_{sigma(r)}).
 */
inline InvariantTensor symmetrized_trace(LieSuperAlgebra const &alg, MatrixRep const &rep, int rank)
{
	InvariantTensor T(&alg, rank);
	int n = alg.dim();
	std::vector<int> slots((size_t)rank, 0);
	// iterate over non-decreasing tuples; set() fills the orbit
	auto advance = [&]() {
		int i = rank - 1;
		while (i >= 0 && slots[(size_t)i] == n - 1)
			--i;
		if (i < 0)
			return false;
		int v = ++slots[(size_t)i];
		for (int j = i + 1; j < rank; ++j)
			slots[(size_t)j] = v;
		return true;
	};
	Rational rfact = Rational(1) / Rational::factorial(rank);
	do {
		std::vector<int> perm((size_t)rank);
		for (int i = 0; i < rank; ++i)
			perm[(size_t)i] = i;
		GRat acc;
		ParamMono scale = ParamMono::one();
		for (int i = 0; i < rank; ++i)
			scale = scale * rep.scale(slots[(size_t)i]);
		bool any = false;
		do {
			int sign = 1;
			for (int i = 0; i < rank; ++i)
				for (int j = i + 1; j < rank; ++j)
					if (perm[(size_t)i] > perm[(size_t)j] &&
					    alg.parity(slots[(size_t)perm[(size_t)i]]) &&
					    alg.parity(slots[(size_t)perm[(size_t)j]]))
						sign = -sign;
			GMat m = rep.mat(slots[(size_t)perm[0]]);
			for (int i = 1; i < rank; ++i)
				m = m * rep.mat(slots[(size_t)perm[(size_t)i]]);
			GRat tr = rep.supertrace(m);
			if (!tr.is_zero()) {
				acc += sign < 0 ? -tr : tr;
				any = true;
			}
		} while (std::next_permutation(perm.begin(), perm.end()));
		if (any && !acc.is_zero())
			T.set(slots, Scalar(GRat(rfact) * acc, scale));
	} while (advance());
	return T;
}

} // namespace tfe
