#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace isingcn {

/// Computational basis state |q_{N-1} ... q_1 q_0> of an N-spin chain.
///
/// Bit k holds q_k; index 0 is the target (right) end of the chain and
/// index N-1 the control (left) end. Bits are packed little-endian into
/// 64-bit words, and bits above N in the last word are always zero.
class BasisState {
 public:
  BasisState() = default;

  /// All spins in |0>, the ground state of the chain.
  explicit BasisState(std::size_t n);

  static BasisState from_ones(std::size_t n, const std::vector<std::size_t>& ones);

  /// Parses the lowercase hex form written by to_hex(). Accepts exactly
  /// ceil(n/4) digits and rejects bits above n.
  static BasisState from_hex(std::size_t n, std::string_view hex);

  std::size_t size() const noexcept { return n_; }

  bool test(std::size_t k) const;
  void set(std::size_t k, bool value);
  void flip_in_place(std::size_t k);

  std::size_t popcount() const noexcept;
  std::vector<std::size_t> ones() const;
  bool none() const noexcept;

  /// ceil(N/4) lowercase hex digits, most significant digit first.
  std::string to_hex() const;
  /// Human-readable form, e.g. "N=200; ones=[199,0]" (descending positions).
  std::string to_readable() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  std::size_t hash() const noexcept;

  friend bool operator==(const BasisState&, const BasisState&) = default;
  /// Orders states as their hex strings would compare (numeric order).
  friend std::strong_ordering operator<=>(const BasisState& a, const BasisState& b);

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;

  void check_index(std::size_t k) const;
};

/// Copy of `state` with spin k toggled.
BasisState flip(const BasisState& state, std::size_t k);

struct BasisStateHash {
  std::size_t operator()(const BasisState& s) const noexcept { return s.hash(); }
};

}  // namespace isingcn
