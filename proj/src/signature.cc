#include "dynbc/signature.h"

#include <algorithm>
#include <istream>
#include <ostream>

namespace dynbc {
namespace {

constexpr unsigned char kSeparator = 0xFF;

void PutWord(std::string& out, uint32_t v) {
  out.push_back(static_cast<char>((v >> 24) & 0xFF));
  out.push_back(static_cast<char>((v >> 16) & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
  out.push_back(static_cast<char>(v & 0xFF));
}

uint32_t GetWord(std::string_view s, std::size_t pos) {
  auto byte = [&](std::size_t k) { return static_cast<uint32_t>(static_cast<unsigned char>(s[pos + k])); };
  return (byte(0) << 24) | (byte(1) << 16) | (byte(2) << 8) | byte(3);
}

constexpr char kHexDigits[] = "0123456789abcdef";

std::string ToHex(std::string_view bytes) {
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kHexDigits[c >> 4]);
    out.push_back(kHexDigits[c & 0xF]);
  }
  return out;
}

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string CanonicalForm(const Biclique& b) {
  std::string out;
  out.reserve(4 * (b.left.size() + b.right.size()) + 1);
  for (uint32_t id : b.left) PutWord(out, id);
  out.push_back(static_cast<char>(kSeparator));
  for (uint32_t id : b.right) PutWord(out, id);
  return out;
}

Biclique DecodeCanonicalForm(std::string_view bytes) {
  Biclique b;
  std::size_t pos = 0;
  while (true) {
    if (pos >= bytes.size()) throw std::invalid_argument("canonical form: missing side separator");
    if (static_cast<unsigned char>(bytes[pos]) == kSeparator) break;
    if (pos + 4 > bytes.size()) throw std::invalid_argument("canonical form: truncated left id");
    b.left.push_back(GetWord(bytes, pos));
    pos += 4;
  }
  ++pos;
  if ((bytes.size() - pos) % 4 != 0) throw std::invalid_argument("canonical form: truncated right id");
  for (; pos < bytes.size(); pos += 4) b.right.push_back(GetWord(bytes, pos));
  auto strictly_increasing = [](const std::vector<uint32_t>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
  };
  if (!strictly_increasing(b.left) || !strictly_increasing(b.right)) {
    throw std::invalid_argument("canonical form: ids not strictly increasing");
  }
  return b;
}

uint64_t MurmurHash64A(const void* data, std::size_t len, uint64_t seed) {
  constexpr uint64_t m = 0xc6a4a7935bd1e995ULL;
  constexpr int r = 47;
  uint64_t h = seed ^ (len * m);

  const auto* p = static_cast<const unsigned char*>(data);
  const std::size_t nblocks = len / 8;
  for (std::size_t i = 0; i < nblocks; ++i) {
    uint64_t k = 0;
    for (int b = 7; b >= 0; --b) k = (k << 8) | p[8 * i + b];  // little-endian read on any host
    k *= m;
    k ^= k >> r;
    k *= m;
    h ^= k;
    h *= m;
  }

  const unsigned char* tail = p + 8 * nblocks;
  switch (len & 7) {
    case 7: h ^= uint64_t(tail[6]) << 48; [[fallthrough]];
    case 6: h ^= uint64_t(tail[5]) << 40; [[fallthrough]];
    case 5: h ^= uint64_t(tail[4]) << 32; [[fallthrough]];
    case 4: h ^= uint64_t(tail[3]) << 24; [[fallthrough]];
    case 3: h ^= uint64_t(tail[2]) << 16; [[fallthrough]];
    case 2: h ^= uint64_t(tail[1]) << 8; [[fallthrough]];
    case 1:
      h ^= uint64_t(tail[0]);
      h *= m;
  }

  h ^= h >> r;
  h *= m;
  h ^= h >> r;
  return h;
}

Signature ComputeSignature(const Biclique& b) {
  const std::string bytes = CanonicalForm(b);
  return {MurmurHash64A(bytes.data(), bytes.size(), kSignatureSeed)};
}

bool SignatureStore::Contains(const Biclique& b) const {
  if (mode_ == SignatureMode::kHash64) return hashes_.contains(ComputeSignature(b).value);
  return exact_.contains(CanonicalForm(b));
}

void SignatureStore::Insert(const Biclique& b) {
  const bool inserted = mode_ == SignatureMode::kHash64 ? hashes_.insert(ComputeSignature(b).value).second
                                                        : exact_.insert(CanonicalForm(b)).second;
  if (!inserted) throw StoreConsistencyError("store: double insert of " + ToString(b));
}

void SignatureStore::Remove(const Biclique& b) {
  const std::size_t erased =
      mode_ == SignatureMode::kHash64 ? hashes_.erase(ComputeSignature(b).value) : exact_.erase(CanonicalForm(b));
  if (erased == 0) throw StoreConsistencyError("store: removing absent " + ToString(b));
}

void SignatureStore::ApplyChangeset(std::span<const Biclique> removed, std::span<const Biclique> created) {
  std::unordered_set<std::string> seen;
  for (const Biclique& b : removed) {
    if (!seen.insert(CanonicalForm(b)).second) throw StoreConsistencyError("store: repeated removal " + ToString(b));
    if (!Contains(b)) throw StoreConsistencyError("store: removing absent " + ToString(b));
  }
  seen.clear();
  for (const Biclique& b : created) {
    if (!seen.insert(CanonicalForm(b)).second) throw StoreConsistencyError("store: repeated insert " + ToString(b));
    if (Contains(b)) throw StoreConsistencyError("store: double insert of " + ToString(b));
  }
  for (const Biclique& b : removed) Remove(b);
  for (const Biclique& b : created) Insert(b);
}

void SignatureStore::Dump(std::ostream& out) const {
  if (mode_ != SignatureMode::kExact) throw StoreConsistencyError("store dump requires exact mode");
  std::vector<std::string> lines;
  lines.reserve(exact_.size());
  for (const std::string& bytes : exact_) lines.push_back(ToHex(bytes));
  std::sort(lines.begin(), lines.end());
  for (const std::string& line : lines) out << line << '\n';
}

SignatureStore SignatureStore::Load(std::istream& in) {
  SignatureStore store(SignatureMode::kExact);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.size() % 2 != 0) throw std::invalid_argument("store load: odd hex length on line " + std::to_string(line_no));
    std::string bytes;
    bytes.reserve(line.size() / 2);
    for (std::size_t i = 0; i < line.size(); i += 2) {
      const int hi = HexValue(line[i]);
      const int lo = HexValue(line[i + 1]);
      if (hi < 0 || lo < 0) throw std::invalid_argument("store load: bad hex on line " + std::to_string(line_no));
      bytes.push_back(static_cast<char>(hi * 16 + lo));
    }
    store.Insert(DecodeCanonicalForm(bytes));
  }
  return store;
}

bool operator==(const SignatureStore& a, const SignatureStore& b) {
  return a.mode_ == b.mode_ && a.hashes_ == b.hashes_ && a.exact_ == b.exact_;
}

}  // namespace dynbc
