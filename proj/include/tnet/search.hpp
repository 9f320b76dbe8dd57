#pragma once

// Depth-first search for dual 3-nets of small order in PG(2,q).

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tnet/nets.hpp"

namespace tnet {

struct SearchTask {
  FieldPtr field;
  std::size_t n = 0;
  /// Pin A: the coordinate triangle when A is not collinear, otherwise
  /// (1:0:0), (0:1:0), (1:1:0) on Z = 0.
  bool pin_frame = true;
  /// Per component: true requires it collinear, false forbids it.
  std::array<std::optional<bool>, 3> collinear;
  bool arcs = false;        // A u B, B u C, C u A have no three collinear points
  bool hyperovals = false;  // arcs of size q + 2
  std::uint64_t budget = 50'000'000;  // search-tree nodes
  unsigned jobs = 1;
  std::size_t max_results = 0;  // 0 for no limit
};

struct SearchSummary {
  std::vector<DualThreeNet> nets;  // filled when no emitter is given
  std::size_t emitted = 0;
  std::size_t rejected = 0;  // pruning produced a non-net (never expected)
  std::uint64_t nodes = 0;
  std::size_t branches = 0, branches_done = 0;
  bool budget_exceeded = false;
  std::map<std::string, std::size_t> by_class;  // regularity class -> count
};

using NetEmitter = std::function<void(const DualThreeNet&)>;

/// Nets in a deterministic order independent of `jobs`, without duplicates.
/// Throws BadParameters for n < 2, n > 8 or inconsistent constraints.
SearchSummary enumerate_nets(const SearchTask& task, const NetEmitter& emit = {});

struct HuntReport {
  SearchSummary summary;
  std::vector<std::size_t> cubic_nullity;  // per emitted net
};

/// All three pairwise unions hyperovals. Needs q even and 2n = q + 2.
HuntReport hunt_hyperoval_net(int q, std::size_t n, std::uint64_t budget, unsigned jobs = 1,
                              const NetEmitter& emit = {});

}  // namespace tnet
