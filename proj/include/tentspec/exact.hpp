#pragma once

/**
 * @file exact.hpp
 * @brief Determinant-free exact linear algebra for the paired tent family.
 *
 * Everything here runs on big integers or rationals; identity checks are
 * exact equalities. Minimal polynomials come from linear dependence of Krylov
 * iterates, kernels from fraction-free elimination.
 */

#include "tentspec/matrix.hpp"
#include "tentspec/polynomial.hpp"

#include <vector>

namespace tentspec {

/// Anti-diagonal permutation J with J e_i = e_{size+1-i}.
ExactMatrix flip_matrix(std::size_t size);

/// sum_k p_k M^k by Horner's scheme.
ExactMatrix mat_poly_apply(const IntPolynomial& p, const ExactMatrix& m);

/// True iff A J = J A and A (A^{n+1} - 2 A^n - 2 J) = 0 exactly.
bool verify_pair_identity(const ExactMatrix& a, const ExactMatrix& j, unsigned n);

/// Minimal polynomial as the lcm of the local annihilators of the standard
/// basis vectors. Primitive integer coefficients, positive leading term.
IntPolynomial krylov_min_poly(const ExactMatrix& m);

/// Minimal polynomial of a single vector v under M (primitive, positive lead).
IntPolynomial local_min_poly(const ExactMatrix& m, const std::vector<BigInt>& v);

/// Basis of the right null space.
std::vector<RationalVector> kernel_basis(const ExactMatrix& m);

std::size_t rank(const RationalMatrix& m);
std::size_t rank(const ExactMatrix& m);
std::size_t rank(const std::vector<RationalVector>& vectors);

/// True iff v lies in the span of basis.
bool in_span(const std::vector<RationalVector>& basis, const RationalVector& v);

/// True iff both families span the same subspace.
bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b);

/// Columns of a matrix as rational vectors.
std::vector<RationalVector> column_vectors(const ExactMatrix& m);

/// Basis vector s_i = (e_{n+3-i} + e_{n+2+i}) / 2 of the symmetric subspace,
/// i in 1..n+2.
RationalVector symmetric_basis_vector(unsigned n, unsigned i);

/// C_n: the action of A (size 2n+4, commuting with the flip) on the basis
/// {s_i}. Throws NonIntegralRestriction if A s_i is not an integer
/// combination of the s_k.
ExactMatrix symmetric_restriction(const ExactMatrix& a, unsigned n);

/// The (n+3)-by-(n+2) inclusion of the symmetric subspace into the folded
/// coordinates: the s-vector whose interval is refined maps to the sum of the
/// two refined pieces, every other s_k to a single d_j.
ExactMatrix inclusion_iota(unsigned n);

/// v_1 + J v_1 and v_1 - J v_1 with v_1 = e_1 + ... + e_n - (e_{n+1} + e_{n+2}).
std::vector<RationalVector> full_kernel_reference(unsigned n);

/// Expected kernel of B_n: the difference of the two intervals meeting at 1/2,
/// and the intervals left of that pair minus those right of it. For n >= 2
/// this is {d_3 - d_4, d_1 + d_2 - (d_5 + ... + d_{n+3})}.
std::vector<RationalVector> folded_kernel_reference(unsigned n);

/// iota C == B iota.
bool verify_intertwine(const ExactMatrix& b, const ExactMatrix& c, const ExactMatrix& iota);

} // namespace tentspec
