#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "dynbc/biclique.h"

namespace dynbc {

// Byte layout: left ids as 4-byte big-endian words, one 0xFF separator byte,
// right ids as 4-byte big-endian words. Ids never exceed kMaxVertexId, so no
// left id word starts with 0xFF and the separator is found by stepping through
// the left words.
std::string CanonicalForm(const Biclique& b);

// Inverse of CanonicalForm. Throws std::invalid_argument on malformed input.
Biclique DecodeCanonicalForm(std::string_view bytes);

// MurmurHash64A.
uint64_t MurmurHash64A(const void* data, std::size_t len, uint64_t seed);

inline constexpr uint64_t kSignatureSeed = 0x5bd1e9955bd1e995ULL;

struct Signature {
  uint64_t value = 0;
  auto operator<=>(const Signature&) const = default;
};

Signature ComputeSignature(const Biclique& b);

enum class SignatureMode { kHash64, kExact };

class StoreConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Set of maximal bicliques, held either as 64-bit signatures or as full
// canonical forms.
class SignatureStore {
 public:
  explicit SignatureStore(SignatureMode mode = SignatureMode::kHash64) : mode_(mode) {}

  SignatureMode mode() const { return mode_; }
  std::size_t size() const { return mode_ == SignatureMode::kHash64 ? hashes_.size() : exact_.size(); }

  bool Contains(const Biclique& b) const;
  // Throws StoreConsistencyError on a double insert or a missing member.
  void Insert(const Biclique& b);
  void Remove(const Biclique& b);

  // Removes every member of `removed`, then inserts every member of
  // `created`. Validated up front; on error the store is unchanged.
  void ApplyChangeset(std::span<const Biclique> removed, std::span<const Biclique> created);

  // One hex-encoded canonical form per line, sorted. Exact mode only.
  void Dump(std::ostream& out) const;
  static SignatureStore Load(std::istream& in);

  friend bool operator==(const SignatureStore& a, const SignatureStore& b);

 private:
  SignatureMode mode_;
  std::unordered_set<uint64_t> hashes_;
  std::unordered_set<std::string> exact_;
};

}  // namespace dynbc
