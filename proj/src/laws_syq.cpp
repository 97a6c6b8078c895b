#include "law_util.hpp"

namespace relkit::laws {

using namespace util;

namespace {

// Either a random relation or one whose columns are copied from A's, so
// that syq(A, result) is surjective (and total when every column is used).
Relation column_copy(Ctx& c, const std::string& name, const Relation& a, const Universe& tgt) {
  if (c.coin()) return c.rel(name, a.src(), tgt);
  const bool all = c.coin();
  Relation h = all ? c.surjective_mapping(name + "_cols", tgt, a.tgt()) : c.mapping(name + "_cols", tgt, a.tgt());
  return c.input(name, a * cv(h));
}

}  // namespace

void add_syq_laws(std::vector<Law>& out) {
  Adder add(out, "syq");

  add("syq-matches-oracle", "syq(A, B) = column equality", [](Ctx& c) {
    auto v = c.set("V"), x = c.set("X"), y = c.set("Y");
    auto a = c.rel("A", v, x);
    auto b = c.rel("B", v, y);
    c.eq("syq", syq(a, b), oracle::syq(a, b));
    c.eq("syq(A,B)^ = syq(B,A)", cv(syq(a, b)), syq(b, a));
  });

  add("syq-and-or", "syq(A,C) & syq(B,C) <= syq(A & B, C) & syq(A | B, C)", [](Ctx& c) {
    auto v = c.set("V"), x = c.set("X"), z = c.set("Z");
    auto a = c.rel("A", v, x);
    auto b = c.rel("B", v, x);
    auto cc = c.rel("C", v, z);
    c.le("meet and join", syq(a, cc) & syq(b, cc), syq(a & b, cc) & syq(a | b, cc));
  });

  add("syq-cancel", "A * syq(A,B) = B & TOP * syq(A,B)", [](Ctx& c) {
    auto v = c.set("V"), x = c.set("X"), y = c.set("Y");
    auto a = c.rel("A", v, x);
    auto b = column_copy(c, "B", a, y);
    auto s = syq(a, b);
    c.eq("cancellation", a * s, b & (T(v, x) * s));
  });

  add("syq-cancel-surjective", "syq(A,B) surjective => A * syq(A,B) = B", [](Ctx& c) {
    auto v = c.set("V"), x = c.set("X"), y = c.set("Y");
    auto a = c.rel("A", v, x);
    auto b = column_copy(c, "B", a, y);
    auto s = syq(a, b);
    if (!is_surjective(s)) c.discard();
    c.eq("cancellation", a * s, b);
  });

  add("syq-chain", "syq(A,B) * syq(B,C) = syq(A,C) & syq(A,B) * TOP = syq(A,C) & TOP * syq(B,C)", [](Ctx& c) {
    auto v = c.set("V"), x = c.set("X"), y = c.set("Y"), z = c.set("Z");
    auto a = c.rel("A", v, x);
    auto b = column_copy(c, "B", a, y);
    auto cc = column_copy(c, "C", b, z);
    auto ab = syq(a, b), bc = syq(b, cc), ac = syq(a, cc);
    c.eq("left form", ab * bc, ac & (ab * T(y, z)));
    c.eq("right form", ab * bc, ac & (T(x, y) * bc));
  });

  add("syq-chain-exact", "syq(A,B) total or syq(B,C) surjective => syq(A,B) * syq(B,C) = syq(A,C)", [](Ctx& c) {
    auto v = c.set("V"), x = c.set("X"), y = c.set("Y"), z = c.set("Z");
    auto a = c.rel("A", v, x);
    auto b = column_copy(c, "B", a, y);
    auto cc = column_copy(c, "C", b, z);
    auto ab = syq(a, b), bc = syq(b, cc);
    if (!is_total(ab) && !is_surjective(bc)) c.discard();
    c.eq("chain", ab * bc, syq(a, cc));
  });

  add("syq-quotient-residual", "syq(X,Y) \\ syq(X,Z) >= syq(Y,Z)", [](Ctx& c) {
    auto v = c.set("V"), a = c.set("A"), b = c.set("B"), cu = c.set("C");
    auto x = c.rel("X", v, a);
    auto y = column_copy(c, "Y", x, b);
    auto z = column_copy(c, "Z", x, cu);
    c.le("residual bound", syq(y, z), under(syq(x, y), syq(x, z)));
  });

  add("syq-quotient-syq", "syq(syq(X,Y), syq(X,Z)) >= syq(Y,Z)", [](Ctx& c) {
    auto v = c.set("V"), a = c.set("A"), b = c.set("B"), cu = c.set("C");
    auto x = c.rel("X", v, a);
    auto y = column_copy(c, "Y", x, b);
    auto z = column_copy(c, "Z", x, cu);
    c.le("syq bound", syq(y, z), syq(syq(x, y), syq(x, z)));
  });

  add("syq-quotient-exact", "syq(X,Y), syq(X,Z) surjective => syq(syq(X,Y), syq(X,Z)) = syq(Y,Z)", [](Ctx& c) {
    auto v = c.set("V"), a = c.set("A"), b = c.set("B"), cu = c.set("C");
    auto x = c.rel("X", v, a);
    auto y = column_copy(c, "Y", x, b);
    auto z = column_copy(c, "Z", x, cu);
    auto xy = syq(x, y), xz = syq(x, z);
    if (!is_surjective(xy) || !is_surjective(xz)) c.discard();
    c.eq("syq of quotients", syq(xy, xz), syq(y, z));
  });

  add("syq-surjective-mapping", "f surjective mapping: syq(X, f * Y) <= syq(f^ * X, Y)", [](Ctx& c) {
    auto v = c.set("V"), w = c.set("W"), a = c.set("A"), b = c.set("B");
    auto f = c.surjective_mapping("f", v, w);
    auto x = c.rel("X", v, a);
    auto y = c.rel("Y", w, b);
    c.le("transfer across f", syq(x, f * y), syq(cv(f) * x, y));
  });
}

}  // namespace relkit::laws
