#include "isingcn/basis_state.hpp"

#include <bit>

#include <fmt/format.h>

#include "isingcn/errors.hpp"

namespace isingcn {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

BasisState::BasisState(std::size_t n) : n_(n), words_(word_count(n), 0) {
  if (n == 0) throw InvalidInput("BasisState: chain length must be positive");
}

BasisState BasisState::from_ones(std::size_t n, const std::vector<std::size_t>& ones) {
  BasisState s(n);
  for (auto k : ones) s.set(k, true);
  return s;
}

BasisState BasisState::from_hex(std::size_t n, std::string_view hex) {
  BasisState s(n);
  const std::size_t digits = (n + 3) / 4;
  if (hex.size() != digits) {
    throw InvalidInput(fmt::format("BasisState: expected {} hex digits for N={}, got {}", digits,
                                   n, hex.size()));
  }
  for (std::size_t i = 0; i < digits; ++i) {
    const int v = hex_value(hex[digits - 1 - i]);
    if (v < 0) throw InvalidInput(fmt::format("BasisState: bad hex digit '{}'", hex[digits - 1 - i]));
    for (std::size_t b = 0; b < 4; ++b) {
      if (((v >> b) & 1) == 0) continue;
      const std::size_t k = 4 * i + b;
      if (k >= n) throw InvalidInput("BasisState: hex string sets bits beyond N");
      s.set(k, true);
    }
  }
  return s;
}

void BasisState::check_index(std::size_t k) const {
  if (k >= n_) throw InvalidInput(fmt::format("spin index {} out of range for N={}", k, n_));
}

bool BasisState::test(std::size_t k) const {
  check_index(k);
  return (words_[k / kWordBits] >> (k % kWordBits)) & 1U;
}

void BasisState::set(std::size_t k, bool value) {
  check_index(k);
  const std::uint64_t mask = std::uint64_t{1} << (k % kWordBits);
  if (value)
    words_[k / kWordBits] |= mask;
  else
    words_[k / kWordBits] &= ~mask;
}

void BasisState::flip_in_place(std::size_t k) {
  check_index(k);
  words_[k / kWordBits] ^= std::uint64_t{1} << (k % kWordBits);
}

std::size_t BasisState::popcount() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BasisState::none() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

std::vector<std::size_t> BasisState::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t k = n_; k-- > 0;)
    if (test(k)) out.push_back(k);
  return out;
}

std::string BasisState::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = (n_ + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t i = 0; i < digits; ++i) {
    const std::size_t bit = 4 * i;
    const auto nibble = (words_[bit / kWordBits] >> (bit % kWordBits)) & 0xFU;
    out[digits - 1 - i] = kDigits[nibble];
  }
  return out;
}

std::string BasisState::to_readable() const {
  return fmt::format("N={}; ones=[{}]", n_, fmt::join(ones(), ","));
}

std::size_t BasisState::hash() const noexcept {
  // splitmix64-style mixing per word
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n_;
  for (auto w : words_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const BasisState& a, const BasisState& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

BasisState flip(const BasisState& state, std::size_t k) {
  BasisState out = state;
  out.flip_in_place(k);
  return out;
}

}  // namespace isingcn
