#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>

#include "mtcheck/term.hpp"
#include "mtcheck/trace.hpp"

namespace mtc::testing {

using Traces = std::set<GlobalTrace>;

/// Compositional trace semantics, written independently of the small-step
/// machinery: union for alt, concatenation for strict, shuffle for par,
/// weak-sequencing merge for seq and bounded unfolding for loops, where
/// each iteration begins before the next one does. Only traces of length
/// <= max_length are kept. Loops carrying a budget unfold at most that many
/// times; unbudgeted loops use `default_unrollings`.
Traces denote(const Term& term, std::uint32_t default_unrollings,
              std::size_t max_length);

/// Traces with no action on `lifeline`.
Traces without_lifeline(const Traces& traces, const std::string& lifeline);

/// Traces no longer than `max_length`.
Traces truncate(const Traces& traces, std::size_t max_length);

}  // namespace mtc::testing
