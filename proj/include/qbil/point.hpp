#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbil/numerics.hpp"

namespace qbil {

// Integer shape knobs of an identity instance. Which fields are meaningful
// depends on the identity (series rank r, number s of integer-shifted pairs
// with offsets m, terminating order n, free integer N).
struct Shape {
  int r = 0;
  int s = 0;
  int N = 0;
  int n = 0;
  std::vector<int> m;

  long m_total() const {
    long t = 0;
    for (int v : m) t += v;
    return t;
  }
  bool operator==(const Shape&) const = default;
};

// Named parameter bindings. Kept as an ordered flat list: points are tiny and
// the order is part of the deterministic serialization.
template <class T>
class Point {
 public:
  void set(std::string name, T value) {
    for (auto& kv : kv_)
      if (kv.first == name) {
        kv.second = std::move(value);
        return;
      }
    kv_.emplace_back(std::move(name), std::move(value));
  }
  bool has(std::string_view name) const {
    for (auto& kv : kv_)
      if (kv.first == name) return true;
    return false;
  }
  const T& operator[](std::string_view name) const {
    for (auto& kv : kv_)
      if (kv.first == name) return kv.second;
    fail(errc::symbol_missing, "parameter '" + std::string(name) + "' not bound");
  }
  // Interchanges the values of two symbols; both must be present.
  Point with_swapped(std::string_view x, std::string_view y) const {
    if (!has(x)) fail(errc::symbol_missing, "swap symbol '" + std::string(x) + "' not bound");
    if (!has(y)) fail(errc::symbol_missing, "swap symbol '" + std::string(y) + "' not bound");
    Point out = *this;
    T* px = nullptr;
    T* py = nullptr;
    for (auto& kv : out.kv_) {
      if (kv.first == x) px = &kv.second;
      if (kv.first == y) py = &kv.second;
    }
    std::swap(*px, *py);
    return out;
  }
  const std::vector<std::pair<std::string, T>>& items() const { return kv_; }

 private:
  std::vector<std::pair<std::string, T>> kv_;
};

using PointD = Point<CDouble>;
using PointX = Point<Rational>;

// A sampled or user-supplied evaluation point. Float parameters are stored
// at double precision (they embed exactly into the big tower); exact points
// carry rationals. Derived parameters are not stored: each tower recomputes
// them in its own arithmetic so equality constraints hold to full precision.
struct PointRecord {
  Shape shape;
  PointD fp;
  std::optional<PointX> xp;
};

template <class T>
Point<T> promote_point(const PointRecord& pr) {
  Point<T> out;
  if constexpr (field_traits<T>::exact) {
    if (!pr.xp) fail(errc::illegal_demotion, "exact tower requires an exact-rational point");
    for (auto& kv : pr.xp->items()) out.set(kv.first, kv.second);
  } else if (pr.xp) {
    for (auto& kv : pr.xp->items()) out.set(kv.first, field_traits<T>::from_rational(kv.second));
  } else {
    for (auto& kv : pr.fp.items())
      out.set(kv.first, field_traits<T>::from_parts(kv.second.re, kv.second.im));
  }
  return out;
}

// Sears' idem notation: the expansion of a template under interchanging the
// head symbol with each member of the tail.
struct IdemGroup {
  std::string head;
  std::vector<std::string> tail;
};

template <class T>
std::vector<Point<T>> expand_idem(const Point<T>& tmpl, const IdemGroup& g) {
  if (!tmpl.has(g.head)) fail(errc::symbol_missing, "idem head '" + g.head + "' not bound");
  std::vector<Point<T>> out;
  out.push_back(tmpl);
  for (const auto& t : g.tail) out.push_back(tmpl.with_swapped(g.head, t));
  return out;
}

}  // namespace qbil
