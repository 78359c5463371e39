#pragma once

#include "tfe/cartan.hpp"
#include "tfe/tensor.hpp"

namespace tfe {

/** eta = diag(-1,+1,...,+1) */
inline Rational eta(int a) { return a == 0 ? Rational(-1) : Rational(1); }

/** Levi-Civita symbol with eps_{01...d-1} = +1 */
inline int levi_civita(std::vector<int> idx)
{
	int s = 1;
	for (size_t i = 0; i < idx.size(); ++i)
		for (size_t j = i + 1; j < idx.size(); ++j) {
			if (idx[i] == idx[j])
				return 0;
			if (idx[i] > idx[j]) {
				s = -s;
				std::swap(idx[i], idx[j]);
			}
		}
	return s;
}

struct CatalogAlgebra {
	LieSuperAlgebra algebra;
	std::optional<MatrixRep> rep;
};

std::vector<GMat> pauli();
std::vector<GMat> gamma5();           // 4x4 Clifford set for d=4+1
std::vector<GMat> gamma3();           // 2x2 Clifford set for d=2+1
GMat charge_conjugation3();           // C = -i*Gamma_0
GMat gamma5_pair(int a, int b);       // Gamma_ab = [Gamma_a,Gamma_b]/2
GMat gamma3_pair(int a, int b);       // [Gamma_a,Gamma_b] (not halved)

LieSuperAlgebra make_poincare(int d);
LieSuperAlgebra make_ads(int d);
LieSuperAlgebra make_maxwell(int d);
LieSuperAlgebra make_superpoincare3();
CatalogAlgebra make_su22_1();
CatalogAlgebra make_su2();

/** named algebra lookup: poincare3, ads5, maxwell3, superpoincare3, su22_1, su2, u3, so5, sp4, ... */
CatalogAlgebra catalog_algebra(std::string const &name);

/** CS gravity tensor <J...J P> = 2^n/(n+1) eps on a poincare/ads-type algebra */
InvariantTensor cs_gravity_tensor(LieSuperAlgebra const &alg, int d);

/** named tensor lookup: ads_cs3, ads_cs5, ads3, maxwell3, superpoincare3, su22_1_rank3 */
InvariantTensor catalog_tensor(std::string const &name, LieSuperAlgebra const &alg);

} // namespace tfe
