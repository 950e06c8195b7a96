#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vexmult {

// Integer partition used for both ordinary shapes (weakly decreasing) and
// strict shapes (strictly decreasing, possibly with a trailing 0 part in
// type D).  Equality ignores trailing zeros; the stored parts keep them so
// shapes print the way they were produced, e.g. (5,4,1,0).
struct Shape {
  std::vector<int> parts;

  Shape() = default;
  explicit Shape(std::vector<int> p) : parts(std::move(p)) {}
  Shape(std::initializer_list<int> p) : parts(p) {}

  static Shape parse(std::string_view text);  // "3,1" or "3 1"; "" = empty shape

  int rows() const { return static_cast<int>(parts.size()); }
  // 1-based part access; parts beyond the stored length are 0.
  int part(int k) const {
    return (k >= 1 && k <= rows()) ? parts[static_cast<size_t>(k - 1)] : 0;
  }
  long long total() const;  // number of boxes
  bool empty() const { return total() == 0; }

  bool weakly_decreasing() const;
  // strictly decreasing positive parts; at most one trailing zero when
  // allow_trailing_zero is set
  bool strict(bool allow_trailing_zero) const;

  Shape normalized() const;  // trailing zeros removed
  // componentwise containment: other fits inside this
  bool contains(const Shape& other) const;

  bool operator==(const Shape& o) const;
  bool operator!=(const Shape& o) const { return !(*this == o); }

  std::string str() const;  // "3,1"; empty shape prints "-"
};

}  // namespace vexmult
