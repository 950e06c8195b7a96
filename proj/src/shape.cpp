#include "vexmult/shape.hpp"

#include <algorithm>
#include <sstream>

#include "vexmult/errors.hpp"

namespace vexmult {

Shape Shape::parse(std::string_view text) {
  std::vector<int> parts;
  std::string tok;
  std::string s(text);
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  int v;
  while (in >> v) parts.push_back(v);
  if (!in.eof()) throw_domain("shape-parse", "cannot parse shape: " + std::string(text));
  return Shape(std::move(parts));
}

long long Shape::total() const {
  long long t = 0;
  for (int p : parts) t += p;
  return t;
}

bool Shape::weakly_decreasing() const {
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1]) return false;
  return parts.empty() || parts.back() >= 0;
}

bool Shape::strict(bool allow_trailing_zero) const {
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    if (parts[i] <= parts[i + 1]) return false;
  }
  if (parts.empty()) return true;
  if (parts.back() < 0) return false;
  if (parts.back() == 0 && !allow_trailing_zero) return false;
  return true;
}

Shape Shape::normalized() const {
  Shape s(*this);
  while (!s.parts.empty() && s.parts.back() == 0) s.parts.pop_back();
  return s;
}

bool Shape::contains(const Shape& other) const {
  int n = std::max(rows(), other.rows());
  for (int k = 1; k <= n; ++k)
    if (part(k) < other.part(k)) return false;
  return true;
}

bool Shape::operator==(const Shape& o) const {
  return normalized().parts == o.normalized().parts;
}

std::string Shape::str() const {
  if (parts.empty()) return "-";
  std::ostringstream out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ',';
    out << parts[i];
  }
  return out.str();
}

}  // namespace vexmult
