#include "qk/fusion.hpp"

#include "qk/error.hpp"

#include <vector>

namespace qk {

namespace {

void require_label(std::int64_t k) {
  if (k < 0) throw Error(ErrorCode::InvalidLabel, "fusion labels are nonnegative, got " + std::to_string(k));
}

void accumulate(FusionMultiset& into, const FusionMultiset& from, const Integer& scale, int sign) {
  for (const auto& [j, m] : from) {
    Integer& slot = into[j];
    if (sign > 0) {
      slot += scale * m;
    } else {
      slot -= scale * m;
    }
    if (slot < 0) throw Error(ErrorCode::InvalidArgument, "negative fusion multiplicity (internal error)");
    if (slot == 0) into.erase(j);
  }
}

FusionMultiset times_generator(FusionRule rule, const FusionMultiset& left) {
  FusionMultiset out;
  for (const auto& [j, m] : left) accumulate(out, tensor_with_generator(rule, j), m, +1);
  return out;
}

}  // namespace

FusionMultiset tensor_with_generator(FusionRule rule, std::int64_t k) {
  require_label(k);
  if (k == 0) return {{1, 1}};
  if (rule == FusionRule::SU2) return {{k - 1, 1}, {k + 1, 1}};
  return {{k - 1, 1}, {k, 1}, {k + 1, 1}};
}

FusionMultiset tensor_decompose(FusionRule rule, std::int64_t k, std::int64_t l) {
  require_label(k);
  require_label(l);
  // rows[m] = u(k) x u(m), built up from m = 0.
  FusionMultiset previous;  // m - 1
  FusionMultiset current{{k, 1}};
  for (std::int64_t m = 0; m < l; ++m) {
    FusionMultiset next = times_generator(rule, current);
    if (m >= 1) accumulate(next, previous, 1, -1);
    if (rule == FusionRule::SO3 && m >= 1) accumulate(next, current, 1, -1);
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

FusionMultiset tensor_multiset(FusionRule rule, const FusionMultiset& left, std::int64_t l) {
  FusionMultiset out;
  for (const auto& [j, m] : left) accumulate(out, tensor_decompose(rule, j, l), m, +1);
  return out;
}

Integer trivial_multiplicity(FusionRule rule, std::span<const std::int64_t> labels) {
  FusionMultiset acc{{0, 1}};
  for (std::int64_t l : labels) acc = tensor_multiset(rule, acc, l);
  auto it = acc.find(0);
  return it == acc.end() ? Integer(0) : it->second;
}

}  // namespace qk
