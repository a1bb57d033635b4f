#pragma once

#include "cgt/group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cgt::detail {

std::vector<std::uint64_t> as_list(const Subgroup& s);
std::vector<std::uint64_t> as_list(const ElementSet& m);
std::string set_text(const std::vector<std::uint64_t>& xs);

/// G/K with the projection and the centralizer order of every coset.
struct QuotientInfo {
  QuotientInfo(const Group& g, const Subgroup& k);
  Group q;
  std::vector<Elem> proj;
  std::vector<std::uint32_t> cent;
};

/// {t : [x,t] in H} as a mask.
ElementSet centralizer_mod_mask(const Group& g, const Subgroup& h, Elem x);

}  // namespace cgt::detail
