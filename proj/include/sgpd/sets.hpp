#ifndef SGPD_SETS_HPP_
#define SGPD_SETS_HPP_

#include <algorithm>
#include <vector>

// Finite subsets of an indexed universe, kept as sorted unique int vectors.
namespace sgpd::sets {

using Set = std::vector<int>;

inline Set make(Set v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool contains(const Set& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline Set unite(const Set& a, const Set& b) {
  Set out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Set intersect(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Set difference(const Set& a, const Set& b) {
  Set out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool is_subset(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace sgpd::sets

#endif  // SGPD_SETS_HPP_
