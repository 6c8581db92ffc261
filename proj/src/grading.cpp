#include "fipkit/grading.hpp"

#include <algorithm>

#include "fipkit/errors.hpp"

namespace fipkit {

namespace {

void require_same_length(const Degree& a, const Degree& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("degree length mismatch: " + to_string(a) + " vs " + to_string(b));
  }
}

template <typename Op>
Degree zip(const Degree& a, const Degree& b, Op op) {
  require_same_length(a, b);
  std::vector<std::int64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return Degree(std::move(out));
}

}  // namespace

Degree Degree::unit(std::size_t n, std::size_t axis) {
  if (axis >= n) throw DimensionMismatch("axis out of range");
  std::vector<std::int64_t> c(n, 0);
  c[axis] = 1;
  return Degree(std::move(c));
}

bool Degree::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c >= 0; });
}

bool leq(const Degree& a, const Degree& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Degree negate(const Degree& a) {
  std::vector<std::int64_t> out(a.coords().begin(), a.coords().end());
  for (auto& c : out) c = -c;
  return Degree(std::move(out));
}

Degree add(const Degree& a, const Degree& b) {
  return zip(a, b, [](std::int64_t x, std::int64_t y) { return x + y; });
}

Degree sub(const Degree& a, const Degree& b) {
  return zip(a, b, [](std::int64_t x, std::int64_t y) { return x - y; });
}

Degree meet(const Degree& a, const Degree& b) {
  return zip(a, b, [](std::int64_t x, std::int64_t y) { return std::min(x, y); });
}

Degree join(const Degree& a, const Degree& b) {
  return zip(a, b, [](std::int64_t x, std::int64_t y) { return std::max(x, y); });
}

std::string to_string(const Degree& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s + ")";
}

void Box::for_each(const std::function<void(const Degree&)>& visit) const {
  require_same_length(lo, hi);
  if (empty()) return;
  const std::size_t n = lo.size();
  std::vector<std::int64_t> cur(lo.coords().begin(), lo.coords().end());
  while (true) {
    visit(Degree(cur));
    // Odometer with the last coordinate fastest, which gives lex order.
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (cur[k] < hi[k]) {
        ++cur[k];
        break;
      }
      cur[k] = lo[k];
      if (k == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace fipkit
