#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fipkit {

/// A point of Z^n. Labels graded components, cogenerators and generators.
///
/// The built-in ordering is lexicographic on the coordinates. It is only
/// used to sort labels deterministically; the algebra uses `leq`.
class Degree {
 public:
  Degree() = default;
  explicit Degree(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  Degree(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static Degree zero(std::size_t n) { return Degree(std::vector<std::int64_t>(n, 0)); }
  /// The unit vector e_axis (0-based axis).
  static Degree unit(std::size_t n, std::size_t axis);

  std::size_t size() const noexcept { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::span<const std::int64_t> coords() const noexcept { return coords_; }

  bool is_nonnegative() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::vector<std::int64_t> coords_;
};

/// Componentwise partial order: a <= b iff a_i <= b_i for all i.
bool leq(const Degree& a, const Degree& b);
Degree negate(const Degree& a);
Degree add(const Degree& a, const Degree& b);
Degree sub(const Degree& a, const Degree& b);
/// Componentwise minimum / maximum.
Degree meet(const Degree& a, const Degree& b);
Degree join(const Degree& a, const Degree& b);

/// "(1,0)" style rendering for diagnostics.
std::string to_string(const Degree& a);

/// Closed interval [lo, hi] of Z^n.
struct Box {
  Degree lo;
  Degree hi;

  bool contains(const Degree& g) const { return leq(lo, g) && leq(g, hi); }
  bool empty() const { return !leq(lo, hi); }
  std::size_t dimension() const { return lo.size(); }

  /// Visits every lattice point of the box in lexicographic order.
  void for_each(const std::function<void(const Degree&)>& visit) const;
};

}  // namespace fipkit
