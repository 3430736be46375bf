#pragma once

// Fusion rings of the two N0-graded families.
//
// SU2: u(k) x u(1) = u(k-1) + u(k+1)
// SO3: u(k) x u(1) = u(k-1) + u(k) + u(k+1)
//
// General products are obtained only by folding the generator rule: in the
// representation ring u(l+1) = u(l) x u(1) - u(l-1) (SU2) or
// u(l) x u(1) - u(l) - u(l-1) (SO3).

#include "qk/numeric.hpp"

#include <cstdint>
#include <map>
#include <span>

namespace qk {

enum class FusionRule { SU2, SO3 };

/// Label -> multiplicity; zero multiplicities are never stored.
using FusionMultiset = std::map<std::int64_t, Integer>;

FusionMultiset tensor_with_generator(FusionRule rule, std::int64_t k);
FusionMultiset tensor_decompose(FusionRule rule, std::int64_t k, std::int64_t l);
/// (sum of m_j u(j)) x u(l).
FusionMultiset tensor_multiset(FusionRule rule, const FusionMultiset& left, std::int64_t l);
/// Multiplicity of u(0) in the ordered product of the labels; 1 for an empty list.
Integer trivial_multiplicity(FusionRule rule, std::span<const std::int64_t> labels);

}  // namespace qk
