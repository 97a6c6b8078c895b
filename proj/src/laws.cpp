#include "relkit/laws.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include <json.hpp>

#include "relkit/fileio.hpp"

namespace relkit::laws {

std::size_t class_limit(SizeClass c) {
  switch (c) {
    case SizeClass::Small: return 5;
    case SizeClass::Power: return 4;
    case SizeClass::PowerPair: return 2;
    case SizeClass::Lifted: return 3;
  }
  return 0;
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("RELKIT_SEED")) {
    char* end = nullptr;
    auto v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0') return v;
  }
  return 1;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

Universe Pool::universe(const std::string& name, std::size_t size) {
  auto key = std::make_pair(name, size);
  auto it = universes_.find(key);
  if (it == universes_.end()) it = universes_.emplace(key, numbered(name, size, lower(name))).first;
  return it->second;
}

Ctx::Ctx(Mode mode, Pool& pool, const Options& opt, std::uint64_t stream)
    : mode_(mode), pool_(pool), opt_(opt), rng_(stream) {}

std::size_t Ctx::choose(std::size_t n) {
  if (n == 0) discard();
  if (mode_ == Mode::Random) return n == 1 ? 0 : std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  if (depth_ < trail_.size()) return trail_[depth_++].value;
  trail_.push_back({0, n});
  ++depth_;
  return 0;
}

void Ctx::begin_instance() {
  depth_ = 0;
  inputs_.clear();
}

bool Ctx::advance() {
  trail_.resize(depth_);
  while (!trail_.empty() && trail_.back().value + 1 == trail_.back().bound) trail_.pop_back();
  if (trail_.empty()) return false;
  ++trail_.back().value;
  return true;
}

std::size_t Ctx::size_for(SizeClass c) {
  std::size_t limit = std::min(class_limit(c), opt_.max_size);
  if (mode_ == Mode::Exhaustive) limit = std::min(limit, opt_.exhaustive_max_size);
  return limit;
}

Universe Ctx::set(const std::string& name, SizeClass c) { return pool_.universe(name, choose(size_for(c) + 1)); }

Universe Ctx::nonempty(const std::string& name, SizeClass c) {
  const std::size_t limit = size_for(c);
  if (limit == 0) discard();
  return pool_.universe(name, 1 + choose(limit));
}

const Relation& Ctx::input(const std::string& name, const Relation& r) {
  inputs_.emplace_back(name, r);
  return r;
}

Relation Ctx::rel(const std::string& name, const Universe& src, const Universe& tgt) {
  RelBuilder b(src, tgt);
  // Random relations vary their density between a quarter and three quarters.
  const std::size_t density = mode_ == Mode::Random ? 1 + choose(3) : 0;
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < tgt.size(); ++j)
      if (mode_ == Mode::Random ? choose(4) < density : coin()) b.set(i, j);
  return input(name, std::move(b).freeze());
}

Relation Ctx::univalent(const std::string& name, const Universe& src, const Universe& tgt) {
  RelBuilder b(src, tgt);
  for (std::size_t i = 0; i < src.size(); ++i) {
    const std::size_t j = choose(tgt.size() + 1);
    if (j < tgt.size()) b.set(i, j);
  }
  return input(name, std::move(b).freeze());
}

Relation Ctx::mapping(const std::string& name, const Universe& src, const Universe& tgt) {
  RelBuilder b(src, tgt);
  for (std::size_t i = 0; i < src.size(); ++i) b.set(i, choose(tgt.size()));
  return input(name, std::move(b).freeze());
}

Relation Ctx::total(const std::string& name, const Universe& src, const Universe& tgt) {
  RelBuilder b(src, tgt);
  const std::size_t n = tgt.size();
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (n == 0) discard();
    if (mode_ == Mode::Exhaustive && n < 16) {
      const std::size_t mask = 1 + choose((std::size_t{1} << n) - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (mask >> j & 1) b.set(i, j);
    } else {
      bool any = false;
      for (std::size_t j = 0; j < n; ++j)
        if (coin()) b.set(i, j), any = true;
      if (!any) b.set(i, choose(n));
    }
  }
  return input(name, std::move(b).freeze());
}

Relation Ctx::injective(const std::string& name, const Universe& src, const Universe& tgt) {
  Relation r = converse(univalent(name, tgt, src));
  inputs_.back().second = r;
  return r;
}

Relation Ctx::surjective(const std::string& name, const Universe& src, const Universe& tgt) {
  Relation r = converse(total(name, tgt, src));
  inputs_.back().second = r;
  return r;
}

Relation Ctx::surjective_mapping(const std::string& name, const Universe& src, const Universe& tgt) {
  if (tgt.size() > src.size()) discard();
  if (mode_ == Mode::Exhaustive) {
    Relation f = mapping(name, src, tgt);
    if (!is_surjective(f)) discard();
    return f;
  }
  // Shuffle the sources; the first |tgt| of them cover the target.
  std::vector<std::size_t> order(src.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[choose(i)]);
  RelBuilder b(src, tgt);
  for (std::size_t k = 0; k < order.size(); ++k) b.set(order[k], k < tgt.size() ? k : choose(tgt.size()));
  return input(name, std::move(b).freeze());
}

Relation Ctx::permutation(const std::string& name, const Universe& u) {
  std::vector<std::size_t> p(u.size());
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = p.size(); i > 1; --i) std::swap(p[i - 1], p[choose(i)]);
  RelBuilder b(u, u);
  for (std::size_t i = 0; i < p.size(); ++i) b.set(i, p[i]);
  return input(name, std::move(b).freeze());
}

// Restricted growth strings enumerate every partition exactly once.
Relation Ctx::equivalence(const std::string& name, const Universe& u) {
  std::vector<std::size_t> cls(u.size());
  std::size_t classes = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    cls[i] = choose(classes + 1);
    if (cls[i] == classes) ++classes;
  }
  return input(name, tabulate(u, u, [&](std::size_t i, std::size_t j) { return cls[i] == cls[j]; }));
}

Relation Ctx::vector(const std::string& name, const Universe& u) { return rel(name, u, Universe::unit()); }

Relation Ctx::point(const std::string& name, const Universe& u) { return input(name, relkit::point(u, choose(u.size()))); }

BinOp Ctx::binop(const std::string& name, const Universe& u) {
  const std::size_t n = u.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  const std::size_t shape = mode_ == Mode::Random ? choose(5) : 0;
  std::vector<std::size_t> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  if (shape >= 2)
    for (std::size_t i = n; i > 1; --i) std::swap(relabel[i - 1], relabel[choose(i)]);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t r = 0; r < n; ++r) {
      switch (shape) {
        case 2: t[relabel[l]][relabel[r]] = relabel[(l + r) % n]; break;  // cyclic group
        case 3:
          if (n == 4) t[relabel[l]][relabel[r]] = relabel[l ^ r];  // Klein four-group
          else t[relabel[l]][relabel[r]] = relabel[std::max(l, r)];  // a semilattice
          break;
        case 4:
          if (r >= l) t[l][r] = t[r][l] = choose(n);  // commutative
          break;
        default: t[l][r] = choose(n); break;
      }
    }
  if (shape == 1 && n > 0) {
    const std::size_t e = choose(n);
    for (std::size_t x = 0; x < n; ++x) t[e][x] = t[x][e] = x;
  }
  BinOp op = BinOp::from_table(u, t);
  input(name, op.table());
  return op;
}

void Ctx::eq(const std::string& claim, const Relation& lhs, const Relation& rhs) {
  if (lhs != rhs) throw Violation{claim, {{"lhs", lhs}, {"rhs", rhs}}};
}

void Ctx::le(const std::string& claim, const Relation& lhs, const Relation& rhs) {
  if (!includes(lhs, rhs)) throw Violation{claim, {{"lhs", lhs}, {"rhs", rhs}}};
}

void Ctx::holds(const std::string& claim, bool ok, const std::vector<std::pair<std::string, Relation>>& witnesses) {
  if (!ok) throw Violation{claim, witnesses};
}

namespace {

std::string serialize(const Ctx& ctx, const Violation& v) {
  Writer w;
  for (const auto& [n, r] : ctx.inputs()) w.add_relation(n, r);
  for (const auto& [n, r] : v.sides) w.add_relation(n, r);
  return w.str();
}

// Returns false once the law has failed.
bool run_instance(const Law& law, Ctx& ctx, LawReport& rep, std::size_t& accepted) {
  ctx.begin_instance();
  try {
    law.body(ctx);
    ++accepted;
  } catch (const Discard&) {
    ++rep.discarded;
  } catch (const Violation& v) {
    ++accepted;
    rep.pass = false;
    rep.failure = v.claim;
    rep.counterexample = serialize(ctx, v);
    return false;
  } catch (const std::exception& e) {
    ++accepted;
    rep.pass = false;
    rep.failure = std::string("exception: ") + e.what();
    Violation v{rep.failure, {}};
    rep.counterexample = serialize(ctx, v);
    return false;
  }
  return true;
}

}  // namespace

LawReport run_law(const Law& law, Pool& pool, const Options& opt) {
  LawReport rep;
  rep.name = law.name;
  rep.anchor = law.anchor;
  rep.suite = law.suite;
  rep.seed = opt.seed;

  Ctx ex(Ctx::Mode::Exhaustive, pool, opt, 0);
  std::size_t accepted = 0;
  bool more = true;
  while (more) {
    if (!run_instance(law, ex, rep, accepted)) {
      rep.exhaustive = accepted;
      return rep;
    }
    more = ex.advance();
    if (more && accepted + rep.discarded >= opt.exhaustive_limit) {
      rep.exhaustive_complete = false;
      break;
    }
  }
  rep.exhaustive = accepted;
  const std::size_t ex_discarded = rep.discarded;

  Ctx rnd(Ctx::Mode::Random, pool, opt, opt.seed ^ fnv1a(law.name));
  accepted = 0;
  const std::size_t budget = opt.random_instances * 50;
  for (std::size_t attempt = 0; accepted < opt.random_instances && attempt < budget; ++attempt)
    if (!run_instance(law, rnd, rep, accepted)) break;
  rep.random = accepted;
  rep.discarded -= ex_discarded;
  return rep;
}

std::vector<LawReport> run_laws(const std::vector<Law>& laws, const Options& opt) {
  Pool pool;
  std::vector<LawReport> out;
  out.reserve(laws.size());
  for (const auto& l : laws) out.push_back(run_law(l, pool, opt));
  return out;
}

std::vector<LawReport> run_suite(const std::string& name, const Options& opt) { return run_laws(suite(name), opt); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "syq", "powerset", "images", "prodsum", "binop", "boolalg"};
  return names;
}

const std::vector<Law>& catalog() {
  static const std::vector<Law> all = [] {
    std::vector<Law> v;
    add_core_laws(v);
    add_syq_laws(v);
    add_powerset_laws(v);
    add_images_laws(v);
    add_prodsum_laws(v);
    add_binop_laws(v);
    add_boolalg_laws(v);
    return v;
  }();
  return all;
}

std::vector<Law> suite(const std::string& name) {
  if (name == "all") return catalog();
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + name + "'");
  std::vector<Law> out;
  for (const auto& l : catalog())
    if (l.suite == name) out.push_back(l);
  return out;
}

namespace {

nlohmann::ordered_json json_of(const LawReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["anchor"] = r.anchor;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["exhaustive"] = {{"instances", r.exhaustive}, {"complete", r.exhaustive_complete}};
  j["random"] = {{"instances", r.random}, {"discarded", r.discarded}};
  j["pass"] = r.pass;
  if (r.pass) {
    j["counterexample"] = nullptr;
  } else {
    j["failure"] = r.failure;
    j["counterexample"] = r.counterexample;
  }
  return j;
}

}  // namespace

std::string to_json(const LawReport& r) { return json_of(r).dump(); }

std::string to_json(const std::vector<LawReport>& rs) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& r : rs) a.push_back(json_of(r));
  return a.dump(2);
}

}  // namespace relkit::laws
