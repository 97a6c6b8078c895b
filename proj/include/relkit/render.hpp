#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "relkit/finset.hpp"
#include "relkit/relation.hpp"

namespace relkit {

enum class RenderStyle { Matrix, Sets };

struct RenderOptions {
  RenderStyle style = RenderStyle::Matrix;
  bool dense = false;  // 1/0 instead of 1/.
};

namespace render_detail {

inline std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

inline std::string trim_right(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

// Grid with a header row; column width is the widest of header and cells.
inline std::string grid(const std::vector<std::string>& row_labels, const std::vector<std::string>& col_labels,
                        const std::vector<std::vector<std::string>>& cells) {
  std::size_t lw = 0;
  for (const auto& l : row_labels) lw = std::max(lw, l.size());
  std::vector<std::size_t> cw(col_labels.size());
  for (std::size_t j = 0; j < col_labels.size(); ++j) {
    cw[j] = col_labels[j].size();
    for (const auto& row : cells) cw[j] = std::max(cw[j], row[j].size());
  }
  std::string out = pad("", lw);
  for (std::size_t j = 0; j < col_labels.size(); ++j) out += " " + pad(col_labels[j], cw[j]);
  out = trim_right(out) + "\n";
  for (std::size_t i = 0; i < row_labels.size(); ++i) {
    std::string line = pad(row_labels[i], lw);
    for (std::size_t j = 0; j < col_labels.size(); ++j) line += " " + pad(cells[i][j], cw[j]);
    out += trim_right(line) + "\n";
  }
  return out;
}

inline std::vector<std::string> labels(const Universe& u) {
  std::vector<std::string> out;
  out.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out.push_back(u.label(i));
  return out;
}

}  // namespace render_detail

inline std::string render_matrix(const Relation& r, bool dense = false) {
  std::vector<std::vector<std::string>> cells(r.rows(), std::vector<std::string>(r.cols()));
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) cells[i][j] = r(i, j) ? "1" : (dense ? "0" : ".");
  return render_detail::grid(render_detail::labels(r.src()), render_detail::labels(r.tgt()), cells);
}

// A mapping out of a product prints as an operation table; anything else as adjacency sets.
inline std::string render_sets(const Relation& r) {
  if (r.src().is_pair() && is_mapping(r)) {
    const Universe& s = r.src();
    std::vector<std::vector<std::string>> cells(s.left().size(), std::vector<std::string>(s.right().size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto [l, rr] = s.pair_split(i);
      cells[l][rr] = r.tgt().label(r.successors(i).front());
    }
    return render_detail::grid(render_detail::labels(s.left()), render_detail::labels(s.right()), cells);
  }
  std::size_t lw = 0;
  for (std::size_t i = 0; i < r.rows(); ++i) lw = std::max(lw, r.src().label(i).size());
  std::string out;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::string line = render_detail::pad(r.src().label(i) + ":", lw + 1) + " {";
    bool first = true;
    for (auto j : r.successors(i)) {
      line += (first ? "" : ", ") + r.tgt().label(j);
      first = false;
    }
    out += line + "}\n";
  }
  return out;
}

inline std::string render(const Relation& r, const RenderOptions& opt = {}) {
  return opt.style == RenderStyle::Sets ? render_sets(r) : render_matrix(r, opt.dense);
}

}  // namespace relkit
