#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ppart/errors.hpp"

namespace ppart {

/// Rooted plane tree in which every vertex has `arity` children or none,
/// stored as its preorder code over {I, L}. Vertices are addressed by
/// their preorder position.
class KAryTree {
 public:
  KAryTree(int arity, std::string preorder) : arity_(arity), code_(std::move(preorder)) {
    if (arity_ < 2) throw ParameterError("tree arity must be >= 2");
    long need = 1;
    for (std::size_t p = 0; p < code_.size(); ++p) {
      if (need == 0) throw ParameterError("tree code has trailing symbols: " + code_);
      if (code_[p] == 'I') {
        need += arity_ - 1;
        ++internal_;
      } else if (code_[p] == 'L') {
        need -= 1;
      } else {
        throw ParameterError("tree code may only contain I and L");
      }
    }
    if (need != 0) throw ParameterError("tree code is incomplete: " + code_);
  }

  static KAryTree leaf(int arity) { return KAryTree(arity, "L"); }

  /// Internal root over the given children (exactly `arity` of them).
  static KAryTree node(int arity, const std::vector<KAryTree>& children) {
    if (static_cast<int>(children.size()) != arity)
      throw ParameterError("node needs exactly arity children");
    std::string code = "I";
    for (const auto& c : children) code += c.preorder();
    return KAryTree(arity, std::move(code));
  }

  /// The tree whose left path has length n.
  static KAryTree left_comb(int arity, int n) {
    std::string code;
    for (int i = 0; i < n; ++i) code += 'I';
    code += 'L';
    for (int i = 0; i < n; ++i) code.append(static_cast<std::size_t>(arity - 1), 'L');
    return KAryTree(arity, std::move(code));
  }

  int arity() const { return arity_; }
  const std::string& preorder() const { return code_; }
  std::size_t size() const { return code_.size(); }
  int internal_count() const { return internal_; }
  int leaf_count() const { return (arity_ - 1) * internal_ + 1; }
  /// m(T): number of edges.
  int edge_count() const { return static_cast<int>(code_.size()) - 1; }

  bool is_leaf(std::size_t pos) const { return code_.at(pos) == 'L'; }

  /// One past the last preorder position of the subtree at `pos`.
  std::size_t subtree_end(std::size_t pos) const {
    long need = 1;
    std::size_t p = pos;
    while (need > 0) {
      need += code_.at(p) == 'I' ? arity_ - 1 : -1;
      ++p;
    }
    return p;
  }

  std::vector<std::size_t> children(std::size_t pos) const {
    std::vector<std::size_t> out;
    if (is_leaf(pos)) return out;
    std::size_t c = pos + 1;
    for (int i = 0; i < arity_; ++i) {
      out.push_back(c);
      c = subtree_end(c);
    }
    return out;
  }

  std::string subtree_code(std::size_t pos) const {
    return code_.substr(pos, subtree_end(pos) - pos);
  }
  KAryTree subtree(std::size_t pos) const { return KAryTree(arity_, subtree_code(pos)); }

  /// m(T_v) for the subtree at `pos`.
  int subtree_edges(std::size_t pos) const {
    return static_cast<int>(subtree_end(pos) - pos) - 1;
  }

  friend bool operator==(const KAryTree&, const KAryTree&) = default;
  friend auto operator<=>(const KAryTree& a, const KAryTree& b) {
    if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
    return a.code_ <=> b.code_;
  }

 private:
  int arity_;
  std::string code_;
  int internal_ = 0;
};

}  // namespace ppart

template <>
struct std::hash<ppart::KAryTree> {
  std::size_t operator()(const ppart::KAryTree& t) const noexcept {
    return std::hash<std::string>{}(t.preorder()) ^ static_cast<std::size_t>(t.arity());
  }
};
