#include "mg/regular_sequence.hpp"

#include "mg/errors.hpp"
#include "mg/groebner.hpp"

namespace mg {

bool regular_sequence_test(const Ideal& ideal, const std::vector<Polynomial>& forms, bool allow_unit) {
  Ideal current = ideal;
  for (const auto& f : forms) {
    if (f.is_zero()) throw PreconditionError("regular sequence elements must be nonzero");
    if (!same_ideal(colon(current, f), current)) return false;
    current = sum(current, {f});
  }
  return allow_unit || !current.groebner_basis()->is_unit();
}

std::vector<Polynomial> gamma_sequence(const BlockRing& ring) {
  const auto p = ring.characteristic();
  std::vector<Polynomial> gamma;
  for (std::size_t i = 0; i < ring.num_blocks(); ++i) {
    const auto first = Polynomial::variable(p, ring.var(i, 0));
    for (int j = 1; j < ring.block_size(i); ++j) {
      gamma.push_back(Polynomial::variable(p, ring.var(i, static_cast<std::size_t>(j))) - first);
    }
  }
  return gamma;
}

}  // namespace mg
