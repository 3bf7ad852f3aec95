#pragma once

// Bounded bidirectional breadth-first search for rail equivalence. States are
// canonical codes, so relabelings collapse for free. CONNECTED comes with a
// move path that replays from the source; NOT_FOUND only means the bounds
// were exhausted.

#include <string>
#include <unordered_map>
#include <vector>

#include "railknot/moves.hpp"
#include "railknot/rail_diagram.hpp"

namespace railknot {

struct ConnectBounds {
  int max_crossings = 8;
  int max_depth = 6;
  std::size_t max_states = 200000;
};

struct ConnectOutcome {
  bool connected = false;
  std::vector<MoveSite> path;  // replayable from the first diagram
  std::size_t explored = 0;
  bool hit_state_cap = false;
  ConnectBounds bounds;
};

namespace search_detail {

struct Node {
  RailDiagram diag;
  int parent = -1;
  MoveSite via;  // move applied to parent to reach this node
};

struct Side {
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> index;
  std::vector<int> frontier;
  int depth = 0;
};

inline std::vector<MoveSite> all_sites(const RailDiagram& d, int max_crossings) {
  std::vector<MoveSite> sites = enumerate_reductions(d);
  auto cre = enumerate_creations(d, max_crossings);
  sites.insert(sites.end(), cre.begin(), cre.end());
  return sites;
}

}  // namespace search_detail

inline ConnectOutcome connect(const RailDiagram& d1, const RailDiagram& d2,
                              const ConnectBounds& bounds) {
  using namespace search_detail;
  ConnectOutcome out;
  out.bounds = bounds;
  std::string c1 = canonical_code(d1), c2 = canonical_code(d2);
  if (c1 == c2) {
    out.connected = true;
    return out;
  }
  Side fwd, bwd;
  fwd.nodes.push_back({d1, -1, {}});
  fwd.index[c1] = 0;
  fwd.frontier = {0};
  bwd.nodes.push_back({d2, -1, {}});
  bwd.index[c2] = 0;
  bwd.frontier = {0};

  int meet_f = -1, meet_b = -1;

  auto expand = [&](Side& self, Side& other) -> bool {
    std::vector<int> next;
    for (int ni : self.frontier) {
      RailDiagram diag = self.nodes[ni].diag;  // copy: nodes may reallocate
      auto sites = all_sites(diag, bounds.max_crossings);
      for (const auto& m : sites) {
        if (self.nodes.size() + other.nodes.size() >= bounds.max_states) {
          out.hit_state_cap = true;
          return false;
        }
        auto applied = apply_move(diag, m);
        if (!applied.ok()) continue;
        std::string code = canonical_code(applied.diagram);
        if (self.index.count(code)) continue;
        int idx = static_cast<int>(self.nodes.size());
        self.nodes.push_back({std::move(applied.diagram), ni, m});
        self.index[code] = idx;
        next.push_back(idx);
        ++out.explored;
        auto hit = other.index.find(code);
        if (hit != other.index.end()) {
          meet_f = (&self == &fwd) ? idx : hit->second;
          meet_b = (&self == &fwd) ? hit->second : idx;
          return true;
        }
      }
    }
    self.frontier = std::move(next);
    ++self.depth;
    return false;
  };

  bool found = false;
  while (!found && fwd.depth + bwd.depth < bounds.max_depth && !out.hit_state_cap) {
    Side& smaller = fwd.frontier.size() <= bwd.frontier.size() ? fwd : bwd;
    Side& larger = (&smaller == &fwd) ? bwd : fwd;
    if (smaller.frontier.empty() && larger.frontier.empty()) break;
    Side& chosen = smaller.frontier.empty() ? larger : smaller;
    Side& opposite = (&chosen == &fwd) ? bwd : fwd;
    found = expand(chosen, opposite);
  }
  if (!found) return out;

  // forward half: d1 .. meet
  std::vector<MoveSite> fpath;
  for (int i = meet_f; i > 0; i = fwd.nodes[i].parent) fpath.push_back(fwd.nodes[i].via);
  std::reverse(fpath.begin(), fpath.end());
  // backward half: meet .. d2, inverting the backward tree edges
  std::vector<MoveSite> bpath;
  for (int i = meet_b; i > 0; i = bwd.nodes[i].parent) {
    const Node& child = bwd.nodes[i];
    bpath.push_back(apply_move(bwd.nodes[child.parent].diag, child.via).inverse);
  }
  out.path = std::move(fpath);
  out.path.insert(out.path.end(), bpath.begin(), bpath.end());

  // replay check: the path must carry d1 to d2 exactly
  RailDiagram cur = d1;
  for (const auto& m : out.path) {
    auto applied = apply_move(cur, m);
    if (!applied.ok()) {
      out.connected = false;
      out.path.clear();
      return out;
    }
    cur = std::move(applied.diagram);
  }
  out.connected = canonical_code(cur) == c2;
  if (!out.connected) out.path.clear();
  return out;
}

// replay a recorded path, returning the final diagram (or nothing on failure)
inline std::optional<RailDiagram> replay_path(const RailDiagram& start,
                                              const std::vector<MoveSite>& path) {
  RailDiagram cur = start;
  for (const auto& m : path) {
    auto applied = apply_move(cur, m);
    if (!applied.ok()) return std::nullopt;
    cur = std::move(applied.diagram);
  }
  return cur;
}

// invert a replayable path: the result carries the path's endpoint back to
// its start
inline std::optional<std::vector<MoveSite>> invert_path(const RailDiagram& start,
                                                        const std::vector<MoveSite>& path) {
  std::vector<RailDiagram> states{start};
  std::vector<MoveSite> inverses;
  for (const auto& m : path) {
    auto applied = apply_move(states.back(), m);
    if (!applied.ok()) return std::nullopt;
    inverses.push_back(applied.inverse);
    states.push_back(std::move(applied.diagram));
  }
  std::reverse(inverses.begin(), inverses.end());
  return inverses;
}

}  // namespace railknot
