#pragma once

#include <vector>

#include "rla/algebra.hpp"
#include "rla/subspace.hpp"

namespace rla {

Subspace center(const RestrictedLieAlgebra& L);
/// Elements commuting with every element of S.
Subspace centralizer(const RestrictedLieAlgebra& L, const Subspace& S);
/// Elements x with [x, S] contained in S.
Subspace normalizer(const RestrictedLieAlgebra& L, const Subspace& S);
/// [L, L], spanned by the brackets of basis pairs.
Subspace derived(const RestrictedLieAlgebra& L);
/// span{[a, b] : a in S, b in T}.
Subspace bracket_space(const RestrictedLieAlgebra& L, const Subspace& S, const Subspace& T);

/// L = C^0 > C^1 = [L, L] > ... until two consecutive terms agree.
std::vector<Subspace> lower_central_series(const RestrictedLieAlgebra& L);
bool is_nilpotent(const RestrictedLieAlgebra& L);
/// Number of nonzero terms after L in the lower central series plus one; 0 for L = 0.
/// Only meaningful for nilpotent L.
std::size_t nilpotency_class(const RestrictedLieAlgebra& L);

/// The smallest p-subalgebra containing S.
Subspace p_closure(const RestrictedLieAlgebra& L, const Subspace& S);
bool is_subalgebra(const RestrictedLieAlgebra& L, const Subspace& S);
bool is_ideal(const RestrictedLieAlgebra& L, const Subspace& S);
bool is_p_closed(const RestrictedLieAlgebra& L, const Subspace& S);
bool is_p_subalgebra(const RestrictedLieAlgebra& L, const Subspace& S);
bool is_p_ideal(const RestrictedLieAlgebra& L, const Subspace& S);
bool is_abelian_subspace(const RestrictedLieAlgebra& L, const Subspace& S);

/// The p-map restricted to the center, as a matrix in the center's RREF basis.
/// It is GF(p)-linear there because brackets vanish and lambda^p = lambda.
FieldMatrix center_pmap_matrix(const RestrictedLieAlgebra& L);

/// The unique maximal torus of a nilpotent L: the stable image of the p-map on
/// the center. Throws PreconditionError for non-nilpotent L.
Subspace maximal_torus(const RestrictedLieAlgebra& L);
bool is_torus(const RestrictedLieAlgebra& L);
/// True iff the maximal torus vanishes. Nilpotent L only.
bool is_p_unipotent(const RestrictedLieAlgebra& L);

/// Greedy maximal abelian p-ideal, grown from the center. Nilpotent L only.
Subspace maximal_abelian_p_ideal(const RestrictedLieAlgebra& L);

/// derived(L) + maximal_torus(L) + span of basis p-powers: the subspace
/// contained in every maximal p-ideal that contains the torus.
Subspace max_p_ideal_floor(const RestrictedLieAlgebra& L);

/// Every maximal p-ideal containing the maximal torus, i.e. every hyperplane
/// containing max_p_ideal_floor(L), in the order of their normalized
/// defining functionals. Requires nilpotent, non-toral L.
std::vector<Subspace> codim1_max_p_ideals(const RestrictedLieAlgebra& L);

}  // namespace rla
