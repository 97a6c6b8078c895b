#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "relkit/error.hpp"
#include "relkit/finset.hpp"
#include "relkit/powerset.hpp"
#include "relkit/relation.hpp"

namespace relkit {

// Subset-image construction: the image of A is the image of A without its
// lowest member, joined with that member's row.
inline Relation existential_image(const Relation& r) {
  const Universe px = Universe::power(r.src());
  const Universe py = Universe::power(r.tgt());
  std::vector<std::uint64_t> row_bits(r.rows(), 0);
  for (std::size_t x = 0; x < r.rows(); ++x)
    for (auto y : r.successors(x)) row_bits[x] |= std::uint64_t{1} << y;
  std::vector<std::uint64_t> img(px.size(), 0);
  RelBuilder b(px, py);
  b.set(0, 0);
  for (std::size_t a = 1; a < px.size(); ++a) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(a));
    img[a] = img[a & (a - 1)] | row_bits[low];
    b.set(a, img[a]);
  }
  return std::move(b).freeze();
}

inline Relation inverse_image(const Relation& r) { return existential_image(converse(r)); }

// The same mappings through the symmetric quotient.
inline Relation existential_image_syq(const Relation& r) {
  const Relation e = membership_relation(r.src());
  const Relation e2 = membership_relation(r.tgt());
  return syq(compose(converse(r), e), e2);
}

inline Relation inverse_image_syq(const Relation& r) {
  const Relation e = membership_relation(r.src());
  const Relation e2 = membership_relation(r.tgt());
  return syq(compose(r, e2), e);
}

inline Relation power_relator(const Relation& r) {
  const Relation e = membership_relation(r.src());
  const Relation e2 = membership_relation(r.tgt());
  const Relation et = converse(e);
  return intersect(negate(compose(et, negate(compose(r, e2)))), negate(compose(negate(compose(et, r)), e2)));
}

struct ImageBundle {
  Relation R;
  Relation theta;
  Relation theta_conv;
  Relation zeta;
};

inline ImageBundle images(const Relation& r) {
  return {r, existential_image(r), inverse_image(r), power_relator(r)};
}

}  // namespace relkit
