#pragma once

#include "chainlat/poset.hpp"

#include <vector>

namespace chainlat {

/// All posets with 1..max_size elements, one representative per isomorphism
/// class, in a fixed deterministic order (by size, then canonical key).
/// Representatives are naturally labelled: u < v implies id(u) < id(v).
std::vector<Poset> poset_corpus(int max_size);

} // namespace chainlat
