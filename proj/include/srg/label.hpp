#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "srg/errors.hpp"

namespace srg {

/// Opaque non-empty string token. The tag keeps vertex, edge and parameter
/// labels from being mixed up; ordering is plain lexicographic on the text,
/// which is also the canonical ordering used everywhere in the library.
template <class Tag>
class Label {
 public:
  Label(std::string text) : text_(std::move(text)) {
    if (text_.empty()) throw PreconditionError(std::string(Tag::kind) + " label must be non-empty");
  }
  Label(std::string_view text) : Label(std::string(text)) {}
  Label(const char* text) : Label(std::string(text)) {}

  const std::string& str() const noexcept { return text_; }

  friend auto operator<=>(const Label&, const Label&) = default;
  friend bool operator==(const Label&, const Label&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Label& l) { return os << l.text_; }

 private:
  std::string text_;
};

struct VertexTag {
  static constexpr const char* kind = "vertex";
};
struct EdgeTag {
  static constexpr const char* kind = "edge";
};
struct ParameterTag {
  static constexpr const char* kind = "parameter";
};

using VertexId = Label<VertexTag>;
using EdgeId = Label<EdgeTag>;
using ParameterId = Label<ParameterTag>;

using VertexSet = std::set<VertexId>;
using EdgeSet = std::set<EdgeId>;
using ParameterSet = std::set<ParameterId>;

// Small set algebra over ordered label sets.

template <class T>
bool is_subset(const std::set<T>& a, const std::set<T>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

template <class T>
std::set<T> set_union(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

template <class T>
std::set<T> set_intersection(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out;
  for (const auto& x : a)
    if (b.contains(x)) out.insert(x);
  return out;
}

template <class T>
bool intersects(const std::set<T>& a, const std::set<T>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else
      return true;
  }
  return false;
}

/// Renders `{a, b, c}` in canonical order.
template <class T>
std::string to_string(const std::set<T>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : s) {
    if (!first) out += ", ";
    out += x.str();
    first = false;
  }
  return out + "}";
}

}  // namespace srg

template <class Tag>
struct std::hash<srg::Label<Tag>> {
  std::size_t operator()(const srg::Label<Tag>& l) const noexcept { return std::hash<std::string>{}(l.str()); }
};
