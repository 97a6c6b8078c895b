#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "relkit/error.hpp"

namespace relkit {

// Largest universe any constructor will build.
inline std::size_t& size_cap() {
  static std::size_t cap = std::size_t{1} << 20;
  return cap;
}

class Universe {
 public:
  enum class Kind { Atomic, Pair, Sum, Power, Unit };

  Universe() : Universe(unit()) {}

  static Universe atomic(std::string name, std::vector<std::string> labels) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Atomic;
    n->name = std::move(name);
    n->size = labels.size();
    if (n->size > size_cap()) throw Error(Errc::CapExceeded, "universe " + n->name + " has " + std::to_string(n->size) + " elements");
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i].empty()) throw Error(Errc::DuplicateLabel, "empty label in universe " + n->name);
      if (!n->index.emplace(labels[i], i).second)
        throw Error(Errc::DuplicateLabel, "label '" + labels[i] + "' repeated in universe " + n->name);
    }
    n->labels = std::move(labels);
    return Universe(std::move(n));
  }

  static Universe pair(const Universe& l, const Universe& r) {
    return compound(Kind::Pair, l, r, checked_mul(l.size(), r.size()));
  }

  static Universe sum(const Universe& l, const Universe& r) {
    return compound(Kind::Sum, l, r, checked_add(l.size(), r.size()));
  }

  static Universe power(const Universe& base) {
    if (base.size() >= 63 || (std::size_t{1} << base.size()) > size_cap())
      throw Error(Errc::CapExceeded, "power of " + base.name() + " exceeds the size cap");
    return compound(Kind::Power, base, base, std::size_t{1} << base.size());
  }

  static Universe unit() {
    static const Universe u = [] {
      auto n = std::make_shared<Node>();
      n->kind = Kind::Unit;
      n->name = "1";
      n->size = 1;
      return Universe(std::move(n));
    }();
    return u;
  }

  Kind kind() const { return node_->kind; }
  std::size_t size() const { return node_->size; }
  const std::string& name() const { return node_->name; }

  const Universe& left() const { return *node_->left; }
  const Universe& right() const { return *node_->right; }
  const Universe& base() const { return *node_->left; }

  bool is_pair() const { return kind() == Kind::Pair; }
  bool is_sum() const { return kind() == Kind::Sum; }
  bool is_power() const { return kind() == Kind::Power; }

  // Atomic universes compare by identity, constructed ones by structure.
  bool operator==(const Universe& o) const {
    if (node_ == o.node_) return true;
    if (kind() != o.kind()) return false;
    switch (kind()) {
      case Kind::Atomic: return false;
      case Kind::Unit: return true;
      case Kind::Power: return base() == o.base();
      case Kind::Pair:
      case Kind::Sum: return left() == o.left() && right() == o.right();
    }
    return false;
  }
  bool operator!=(const Universe& o) const { return !(*this == o); }

  std::string label(std::size_t i) const {
    if (i >= size()) throw Error(Errc::IndexOutOfRange, "index " + std::to_string(i) + " in " + name());
    switch (kind()) {
      case Kind::Atomic: return node_->labels[i];
      case Kind::Unit: return "*";
      case Kind::Pair: {
        auto [l, r] = pair_split(i);
        return "(" + left().label(l) + "," + right().label(r) + ")";
      }
      case Kind::Sum:
        if (i < left().size()) return left().label(i) + "<";
        return ">" + right().label(i - left().size());
      case Kind::Power: {
        std::string s = "{";
        bool first = true;
        for (std::size_t b = 0; b < base().size(); ++b) {
          if (!((i >> b) & 1U)) continue;
          if (!first) s += ",";
          s += base().label(b);
          first = false;
        }
        return s + "}";
      }
    }
    return {};
  }

  std::optional<std::size_t> index_of(std::string_view label) const {
    if (kind() != Kind::Atomic) {
      std::call_once(node_->index_once, [this] {
        for (std::size_t i = 0; i < size(); ++i) node_->index.emplace(this->label(i), i);
      });
    }
    auto it = node_->index.find(std::string(label));
    if (it == node_->index.end()) return std::nullopt;
    return it->second;
  }

  std::size_t pair_index(std::size_t l, std::size_t r) const { return l * right().size() + r; }
  std::pair<std::size_t, std::size_t> pair_split(std::size_t i) const {
    return {i / right().size(), i % right().size()};
  }

  const void* identity() const { return node_.get(); }

 private:
  struct Node {
    Kind kind = Kind::Unit;
    std::string name;
    std::size_t size = 0;
    std::vector<std::string> labels;
    std::shared_ptr<const Universe> left, right;
    mutable std::once_flag index_once;
    mutable std::unordered_map<std::string, std::size_t> index;
  };

  explicit Universe(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::string wrap(const Universe& u) {
    if (u.kind() == Kind::Pair || u.kind() == Kind::Sum) return "(" + u.name() + ")";
    return u.name();
  }

  static Universe compound(Kind k, const Universe& l, const Universe& r, std::size_t size) {
    if (size > size_cap()) throw Error(Errc::CapExceeded, "universe of " + std::to_string(size) + " elements exceeds the size cap");
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->size = size;
    n->left = std::make_shared<const Universe>(l);
    n->right = std::make_shared<const Universe>(r);
    switch (k) {
      case Kind::Pair: n->name = wrap(l) + "*" + wrap(r); break;
      case Kind::Sum: n->name = wrap(l) + "+" + wrap(r); break;
      case Kind::Power: n->name = "pow(" + l.name() + ")"; break;
      default: break;
    }
    return Universe(std::move(n));
  }

  static std::size_t checked_mul(std::size_t a, std::size_t b) {
    if (a != 0 && b > size_cap() / a) throw Error(Errc::CapExceeded, "product universe exceeds the size cap");
    return a * b;
  }
  static std::size_t checked_add(std::size_t a, std::size_t b) {
    if (a + b > size_cap()) throw Error(Errc::CapExceeded, "sum universe exceeds the size cap");
    return a + b;
  }

  std::shared_ptr<const Node> node_;
};

inline Universe atomic(std::string name, std::vector<std::string> labels) {
  return Universe::atomic(std::move(name), std::move(labels));
}

// Universe with labels prefix0, prefix1, ...
inline Universe numbered(const std::string& name, std::size_t n, const std::string& prefix = "x") {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return Universe::atomic(name, std::move(labels));
}

inline std::string element_label(const Universe& u, std::size_t i) { return u.label(i); }

// Binary counting: member i contributes 2^i.
inline std::size_t power_index(std::span<const std::size_t> members) {
  std::size_t idx = 0;
  for (auto m : members) idx |= std::size_t{1} << m;
  return idx;
}

inline std::size_t power_index(std::initializer_list<std::size_t> members) {
  return power_index(std::span<const std::size_t>(members.begin(), members.size()));
}

inline std::vector<std::size_t> power_members(std::size_t idx) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; idx >> b; ++b)
    if ((idx >> b) & 1U) out.push_back(b);
  return out;
}

}  // namespace relkit
