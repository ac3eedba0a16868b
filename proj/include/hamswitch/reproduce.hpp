#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamswitch/io.hpp"

namespace hamswitch {

struct ReproduceOptions {
  std::uint64_t seed = 20240917;
  /// Smaller instance counts; used for determinism re-runs.
  bool quick = false;
};

struct ReproduceReport {
  std::string id;
  bool pass = false;
  Json details;
};

struct ReproduceEntry {
  std::string id;
  std::string summary;
};

const std::vector<ReproduceEntry>& reproduce_registry();

/// Throws PreconditionError listing the ids when `id` is unknown.
ReproduceReport reproduce(const std::string& id, const ReproduceOptions& opt = {});

/// Graphs on n vertices with minimum degree >= ceil(n/2), one per
/// isomorphism class. Brute force; n <= 7.
std::vector<Graph> small_dense_graphs(int n);

/// Banded monotone graph r_i = max(1, i-h+1), t_i = min(n, i+h-1): the
/// sparsest interval pattern with every degree >= ceil(n/2).
MonotoneGraph band_monotone(int n);

}  // namespace hamswitch
