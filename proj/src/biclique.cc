#include "dynbc/biclique.h"

#include <algorithm>

namespace dynbc {
namespace {

void SortUnique(std::vector<uint32_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void AppendIds(std::string& out, const std::vector<uint32_t>& ids) {
  out += '{';
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(ids[i]);
  }
  out += '}';
}

}  // namespace

Biclique Biclique::Make(std::vector<uint32_t> left, std::vector<uint32_t> right) {
  SortUnique(left);
  SortUnique(right);
  return Biclique{std::move(left), std::move(right)};
}

bool Biclique::ContainsLeft(uint32_t id) const {
  return std::binary_search(left.begin(), left.end(), id);
}

bool Biclique::ContainsRight(uint32_t id) const {
  return std::binary_search(right.begin(), right.end(), id);
}

bool Biclique::Contains(const Biclique& other) const {
  return std::includes(left.begin(), left.end(), other.left.begin(), other.left.end()) &&
         std::includes(right.begin(), right.end(), other.right.begin(), other.right.end());
}

std::string ToString(const Biclique& b) {
  std::string out = "(";
  AppendIds(out, b.left);
  out += ',';
  AppendIds(out, b.right);
  out += ')';
  return out;
}

}  // namespace dynbc
