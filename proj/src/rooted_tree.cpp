#include "ust/rooted_tree.hpp"

#include <algorithm>

#include "ust/error.hpp"

namespace ust {

std::size_t RootedTree::size() const {
  std::size_t n = 1;
  for (const RootedTree& c : children) n += c.size();
  return n;
}

std::size_t RootedTree::height() const {
  std::size_t h = 0;
  for (const RootedTree& c : children) h = std::max(h, c.height() + 1);
  return h;
}

RootedTree RootedTree::truncated(std::size_t depth) const {
  RootedTree out;
  if (depth == 0) return out;
  out.children.reserve(children.size());
  for (const RootedTree& c : children) out.children.push_back(c.truncated(depth - 1));
  return out;
}

std::string RootedTree::encode() const {
  std::string out;
  for (const RootedTree& c : children) {
    out += '(';
    out += c.encode();
    out += ')';
  }
  return out;
}

namespace {

constexpr std::size_t kMaxParseDepth = 10000;

RootedTree parse_children(std::string_view text, std::size_t& pos, std::size_t depth) {
  if (depth > kMaxParseDepth) throw Error(ErrorCode::too_large, "tree nested deeper than 10000 levels");
  RootedTree node;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      node.children.push_back(parse_children(text, pos, depth + 1));
      if (pos >= text.size() || text[pos] != ')') {
        throw Error(ErrorCode::parse_error, "unbalanced '(' in tree '" + std::string(text) + "'");
      }
      ++pos;
    } else if (c == ')') {
      return node;
    } else {
      throw Error(ErrorCode::parse_error,
                  "unexpected character '" + std::string(1, c) + "' in tree '" + std::string(text) + "'");
    }
  }
  return node;
}

}  // namespace

RootedTree RootedTree::parse(std::string_view text) {
  std::size_t pos = 0;
  RootedTree t = parse_children(text, pos, 0);
  if (pos != text.size()) {
    throw Error(ErrorCode::parse_error, "unbalanced ')' in tree '" + std::string(text) + "'");
  }
  return t;
}

RootedTree RootedTree::star(std::size_t leaves) {
  RootedTree t;
  t.children.resize(leaves);
  return t;
}

RootedTree RootedTree::path(std::size_t edges) {
  RootedTree t;
  for (std::size_t i = 0; i < edges; ++i) {
    RootedTree parent;
    parent.children.push_back(std::move(t));
    t = std::move(parent);
  }
  return t;
}

}  // namespace ust
