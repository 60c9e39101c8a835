#ifndef FLATLAND_CENSUS_HPP_
#define FLATLAND_CENSUS_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flatland/triangulation.hpp"

namespace flatland {

/// Raised when an enumeration exceeds its time or node budget. No partial
/// result is returned in that case.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CensusOptions {
  /// Worker threads for the search; the result does not depend on it.
  int jobs = 1;
  /// Wall-clock budget; nullopt means unlimited.
  std::optional<double> time_budget_seconds;
  /// Search-node budget; nullopt means unlimited.
  std::optional<std::uint64_t> node_budget;
};

/// Default wall-clock budget: unlimited up to 12 vertices, two hours above.
std::optional<double> default_time_budget(int n);

struct CensusStats {
  std::uint64_t nodes = 0;
  std::uint64_t completions = 0;
};

/// Every triangulation on n vertices with all vertex degrees 6 (equivalently
/// every degree-regular triangulation with Euler characteristic 0), one per
/// isomorphism class, in canonical labelling and sorted by canonical code.
/// Supports n <= 32.
std::vector<Triangulation> enumerate_degree_regular(int n,
                                                    const CensusOptions& options = {},
                                                    CensusStats* stats = nullptr);

struct CensusItem {
  Triangulation complex;
  SurfaceType surface;
  bool weakly_regular = false;
  bool combinatorially_regular = false;
  int automorphism_order = 0;
  /// Names of every catalog family member isomorphic to this item.
  std::vector<std::string> matched_family_names;
};

struct CensusReport {
  int n = 0;
  std::vector<CensusItem> items;
  int total = 0;
  int torus = 0;
  int klein_bottle = 0;
  int weakly_regular = 0;
};

CensusReport classify_census(int n, const CensusOptions& options = {});

/// Classification step on an already enumerated list (canonical, sorted).
CensusReport classify_items(int n, std::vector<Triangulation> items);

}  // namespace flatland

#endif  // FLATLAND_CENSUS_HPP_
