#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "relkit/fileio.hpp"
#include "relkit/relation.hpp"

#ifndef RELKIT_SOURCE_DIR
#error "RELKIT_SOURCE_DIR must point at the source tree"
#endif

namespace testing {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string source_path(const std::string& rel) { return std::string(RELKIT_SOURCE_DIR) + "/" + rel; }

inline relkit::Document sample(const std::string& name) { return relkit::parse_document(slurp(source_path("samples/" + name))); }

inline relkit::Relation random_relation(const relkit::Universe& s, const relkit::Universe& t, std::mt19937_64& rng) {
  std::bernoulli_distribution bit(0.5);
  return relkit::tabulate(s, t, [&](std::size_t, std::size_t) { return bit(rng); });
}

inline relkit::Relation members(const relkit::Universe& u, std::initializer_list<const char*> labels) {
  relkit::RelBuilder b(u, relkit::Universe::unit());
  for (const char* l : labels) b.set(*u.index_of(l), 0);
  return std::move(b).freeze();
}

}  // namespace testing
