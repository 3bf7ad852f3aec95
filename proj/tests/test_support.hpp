#pragma once

// Shared helpers for the test suites: fixture loading, random diagram
// generation via creation moves, and hand-built diagram surgery.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "railknot/geometry.hpp"
#include "railknot/io.hpp"
#include "railknot/moves.hpp"
#include "railknot/rng.hpp"

namespace rktest {

using namespace railknot;

inline std::string fixture_dir() {
  const char* env = std::getenv("RAILKNOT_FIXTURES");
  if (env) return env;
  return "tests/fixtures";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline RailArc3D load_arc(const std::string& name) {
  auto parsed = parse_arc(read_file(fixture_dir() + "/" + name));
  if (!parsed.ok()) throw std::runtime_error("bad fixture " + name + ": " + parsed.error.message);
  return *parsed.value;
}

inline RailDiagram must_project(const RailArc3D& a) {
  auto res = project_railplane(a);
  if (!res.ok()) throw std::runtime_error("projection failed: " + res.report.joined());
  return *res.diagram;
}

// random diagram via a seeded sequence of creation (and occasional reduction)
// moves from the trivial diagram
inline RailDiagram random_diagram(std::uint64_t seed, int steps, int max_crossings) {
  Rng rng(seed);
  RailDiagram d = trivial_diagram();
  for (int s = 0; s < steps; ++s) {
    std::vector<MoveSite> sites = enumerate_creations(d, max_crossings);
    if (rng.below(4) == 0) {
      auto reds = enumerate_reductions(d);
      sites.insert(sites.end(), reds.begin(), reds.end());
    }
    if (sites.empty()) continue;
    const MoveSite& m = sites[rng.below(sites.size())];
    auto applied = apply_move(d, m);
    if (!applied.ok()) throw std::runtime_error("random move failed: " + applied.error);
    d = std::move(applied.diagram);
  }
  return d;
}

}  // namespace rktest
