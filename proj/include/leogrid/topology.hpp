#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leogrid/orbital.hpp"

namespace leogrid {

/// Phase-bias set selecting which slot offsets in the next plane get side
/// links. One bias is a +Grid pattern (degree 4), two is *Grid (degree 6).
class BiasSet {
 public:
  static BiasSet make(std::vector<int> biases);

  const std::vector<int>& biases() const { return biases_; }
  int size() const { return static_cast<int>(biases_.size()); }
  bool is_plus_grid() const { return biases_.size() == 1; }

 private:
  std::vector<int> biases_;  // sorted descending, e.g. {1, -1}
};

/// The ten legal pattern names: b1 b0 bm1 bm2 b10 b0m1 bm1m2 b1m1 b1m2 b0m2.
BiasSet pattern_from_name(std::string_view name);
std::string pattern_name(const BiasSet& biases);
const std::vector<std::string>& all_pattern_names();

enum class LinkKind { intra, side };

struct Edge {
  SatId a, b;        // a < b canonically
  LinkKind kind = LinkKind::intra;
  double length_km = 0.0;
};

/// Immutable network graph at one timestamp.
struct Snapshot {
  double time_s = 0.0;
  WalkerShell shell;
  std::vector<Position3D> positions;  // indexed by shell.index_of
  std::vector<Edge> edges;

  struct Neighbor {
    int node;
    double length_km;
  };
  std::vector<std::vector<Neighbor>> adjacency;  // built on construction

  const Position3D& position(SatId sat) const {
    return positions[shell.index_of(sat)];
  }
};

Snapshot build_snapshot(const WalkerShell& shell, const BiasSet& biases,
                        double t_s, bool seam = true);

/// Expected (iISL, sISL) counts for a shell/pattern combination.
std::pair<long, long> edge_count(const WalkerShell& shell, const BiasSet& biases,
                                 bool seam = true);

/// Edge-list dump: header `# T P F i alt t`, then `n1,f1,n2,f2,kind,length_km`.
std::string export_edge_list(const Snapshot& snapshot);

bool is_connected(const Snapshot& snapshot);

}  // namespace leogrid
