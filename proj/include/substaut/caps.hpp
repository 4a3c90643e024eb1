#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace substaut {

// Search strategy for the block-map searches.
//   Enumerate: plain table enumeration (data-parallel, OpenMP); refuses to run
//              when the table space exceeds kernel_cap.
//   Propagate: backtracking with image-window forcing; handles spaces far
//              beyond what enumeration can touch.
//   Auto:      Enumerate when the space fits under kernel_cap, else Propagate.
enum class SearchStrategy { Auto, Enumerate, Propagate };

struct Caps {
  std::int64_t word_cap = 1'000'000;     // max length of any materialized word
  int radius_cap = 16;                   // max radius in inverse-code searches
  std::int64_t kernel_cap = 10'000'000;  // max candidate tables / search nodes
  int p_max = 64;                        // max period in the fingerprint prune
  int jobs = 0;                          // OpenMP threads, 0 = runtime default
  SearchStrategy strategy = SearchStrategy::Auto;
};

// A configured cap was hit.  Callers surface this as "inconclusive at cap",
// never as a decision.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

// A structural assumption failed; indicates a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace substaut
