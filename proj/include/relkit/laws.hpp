#pragma once

// Named algebraic laws checked on exhaustive tiny instances and on seeded
// random instances.

#include <any>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "relkit/binop.hpp"
#include "relkit/finset.hpp"
#include "relkit/relation.hpp"

namespace relkit::laws {

// Maximum universe sizes for random instances; exhaustive runs use 0..2.
enum class SizeClass {
  Small,      // plain relations, up to 5
  Power,      // bases of powersets, up to 4
  PowerPair,  // factors X, Y of pow(X*Y), up to 2
  Lifted,     // bases of the lifted Boolean algebra, up to 3
};

std::size_t class_limit(SizeClass c);

struct Options {
  std::uint64_t seed = 1;
  std::size_t max_size = 5;
  std::size_t random_instances = 500;
  std::size_t exhaustive_limit = 1200000;
  std::size_t exhaustive_max_size = 2;
};

std::uint64_t default_seed();  // RELKIT_SEED, or 1

struct LawReport {
  std::string name;
  std::string anchor;
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t exhaustive = 0;
  bool exhaustive_complete = true;
  std::size_t random = 0;
  std::size_t discarded = 0;
  bool pass = true;
  std::string failure;         // which claim broke, and where
  std::string counterexample;  // serialized inputs, empty when passing
};

std::string to_json(const LawReport& r);
std::string to_json(const std::vector<LawReport>& rs);

// Shared across all laws of one run: universes are pooled by name and size,
// and expensive derived objects are cached by key.
class Pool {
 public:
  Universe universe(const std::string& name, std::size_t size);

  template <class T, class Make>
  const T& memo(const std::string& key, Make&& make) {
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(key, std::make_shared<std::any>(T(make()))).first;
    return std::any_cast<const T&>(*it->second);
  }

 private:
  std::map<std::pair<std::string, std::size_t>, Universe> universes_;
  std::map<std::string, std::shared_ptr<std::any>> memo_;
};

struct Discard {};

struct Violation {
  std::string claim;
  std::vector<std::pair<std::string, Relation>> sides;
};

class Ctx {
 public:
  enum class Mode { Exhaustive, Random };

  Ctx(Mode mode, Pool& pool, const Options& opt, std::uint64_t stream);

  Mode mode() const { return mode_; }
  Pool& pool() { return pool_; }

  std::size_t choose(std::size_t n);
  bool coin() { return choose(2) == 1; }
  [[noreturn]] void discard() { throw Discard{}; }

  // Generators. Every generated relation is recorded under its name.
  Universe set(const std::string& name, SizeClass c = SizeClass::Small);
  Universe nonempty(const std::string& name, SizeClass c = SizeClass::Small);
  Relation rel(const std::string& name, const Universe& src, const Universe& tgt);
  Relation univalent(const std::string& name, const Universe& src, const Universe& tgt);
  Relation total(const std::string& name, const Universe& src, const Universe& tgt);
  Relation injective(const std::string& name, const Universe& src, const Universe& tgt);
  Relation surjective(const std::string& name, const Universe& src, const Universe& tgt);
  Relation mapping(const std::string& name, const Universe& src, const Universe& tgt);
  Relation surjective_mapping(const std::string& name, const Universe& src, const Universe& tgt);
  Relation permutation(const std::string& name, const Universe& u);
  Relation equivalence(const std::string& name, const Universe& u);
  Relation vector(const std::string& name, const Universe& u);
  Relation point(const std::string& name, const Universe& u);
  BinOp binop(const std::string& name, const Universe& u);
  const Relation& input(const std::string& name, const Relation& r);

  // Checks. A failing check ends the instance with a Violation.
  void eq(const std::string& claim, const Relation& lhs, const Relation& rhs);
  void le(const std::string& claim, const Relation& lhs, const Relation& rhs);
  void holds(const std::string& claim, bool ok, const std::vector<std::pair<std::string, Relation>>& witnesses = {});

  const std::vector<std::pair<std::string, Relation>>& inputs() const { return inputs_; }

  // Exhaustive bookkeeping.
  void begin_instance();
  bool advance();

 private:
  std::size_t size_for(SizeClass c);

  Mode mode_;
  Pool& pool_;
  const Options& opt_;
  std::mt19937_64 rng_;
  struct Choice {
    std::size_t value, bound;
  };
  std::vector<Choice> trail_;
  std::size_t depth_ = 0;
  std::vector<std::pair<std::string, Relation>> inputs_;
};

struct Law {
  std::string name;
  std::string anchor;  // the formula being checked
  std::string suite;
  std::function<void(Ctx&)> body;
};

const std::vector<std::string>& suite_names();  // without "all"
const std::vector<Law>& catalog();
std::vector<Law> suite(const std::string& name);  // "all" selects everything

LawReport run_law(const Law& law, Pool& pool, const Options& opt);
std::vector<LawReport> run_laws(const std::vector<Law>& laws, const Options& opt);
std::vector<LawReport> run_suite(const std::string& name, const Options& opt);

using ComposeFn = std::function<Relation(const Relation&, const Relation&)>;

// The compose-versus-oracle law over an arbitrary compose implementation.
Law compose_oracle_law(ComposeFn compose_impl);

// Catalog parts, one per suite.
void add_core_laws(std::vector<Law>& out);
void add_syq_laws(std::vector<Law>& out);
void add_powerset_laws(std::vector<Law>& out);
void add_images_laws(std::vector<Law>& out);
void add_prodsum_laws(std::vector<Law>& out);
void add_binop_laws(std::vector<Law>& out);
void add_boolalg_laws(std::vector<Law>& out);

}  // namespace relkit::laws
