#pragma once

namespace ord {

/// Three-valued outcome of a total order comparison.
enum class Ordering { Less, Equal, Greater };

inline Ordering flip(Ordering o) {
  switch (o) {
    case Ordering::Less: return Ordering::Greater;
    case Ordering::Greater: return Ordering::Less;
    default: return Ordering::Equal;
  }
}

template <typename T>
Ordering ordering_of(const T& x, const T& y) {
  if (x < y) return Ordering::Less;
  if (y < x) return Ordering::Greater;
  return Ordering::Equal;
}

inline const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "LT";
    case Ordering::Equal: return "EQ";
    default: return "GT";
  }
}

}  // namespace ord
