#pragma once

#include <utility>
#include <vector>

#include "enriques/algebra/poly.hpp"

namespace enriques::constructions::detail {

/// Rank of a matrix over GF(2^k).
int rank(std::vector<std::vector<algebra::Raw>> m, const algebra::FiniteField& f);
/// One nonzero kernel vector, or empty when the kernel is trivial.
std::vector<algebra::Raw> kernel_vector(std::vector<std::vector<algebra::Raw>> m, const algebra::FiniteField& f);
/// Value of p at a point; every variable of p must be assigned.
algebra::Raw evaluate(const algebra::Poly& p, const algebra::FiniteField& f,
                      const std::vector<std::pair<algebra::Var, algebra::Raw>>& point);

}  // namespace enriques::constructions::detail
