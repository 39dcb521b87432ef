// Fixed-width bitstrings for oracle inputs/outputs and classical program data.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace caromlab {

// A bitstring of declared width (0..64 bits). Value semantics, total order,
// canonical lowercase-hex serialization with one nibble per 4 bits of width.
class Bits {
 public:
  Bits() = default;

  Bits(std::uint64_t value, int width) : value_(value), width_(width) {
    if (width < 0 || width > 64) {
      throw std::invalid_argument("Bits: width must be in [0,64]");
    }
    if (width < 64 && (value >> width) != 0) {
      throw std::invalid_argument("Bits: value does not fit declared width");
    }
  }

  std::uint64_t value() const { return value_; }
  int width() const { return width_; }

  // High bits of `hi` become the most significant bits of the result.
  static Bits concat(const Bits& hi, const Bits& lo) {
    if (hi.width_ + lo.width_ > 64) {
      throw std::invalid_argument("Bits::concat: combined width exceeds 64");
    }
    return Bits((hi.value_ << lo.width_) | lo.value_, hi.width_ + lo.width_);
  }

  // `offset` counts from the most significant bit.
  Bits slice(int offset, int count) const {
    if (offset < 0 || count < 0 || offset + count > width_) {
      throw std::out_of_range("Bits::slice: range outside width");
    }
    int shift = width_ - offset - count;
    std::uint64_t mask = count == 64 ? ~0ULL : ((1ULL << count) - 1);
    return Bits((value_ >> shift) & mask, count);
  }

  Bits operator^(const Bits& other) const {
    if (width_ != other.width_) {
      throw std::invalid_argument("Bits: XOR width mismatch");
    }
    return Bits(value_ ^ other.value_, width_);
  }

  bool operator==(const Bits& o) const {
    return width_ == o.width_ && value_ == o.value_;
  }
  bool operator!=(const Bits& o) const { return !(*this == o); }
  bool operator<(const Bits& o) const {
    if (width_ != o.width_) return width_ < o.width_;
    return value_ < o.value_;
  }

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    int nibbles = (width_ + 3) / 4;
    std::string out(static_cast<std::size_t>(nibbles), '0');
    for (int i = 0; i < nibbles; ++i) {
      out[static_cast<std::size_t>(nibbles - 1 - i)] =
          digits[(value_ >> (4 * i)) & 0xF];
    }
    return out;
  }

  static Bits from_hex(std::string_view text, int width) {
    int nibbles = (width + 3) / 4;
    if (static_cast<int>(text.size()) != nibbles) {
      throw std::invalid_argument("Bits::from_hex: wrong digit count");
    }
    std::uint64_t v = 0;
    for (char c : text) {
      int d;
      if (c >= '0' && c <= '9') d = c - '0';
      else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
      else throw std::invalid_argument("Bits::from_hex: bad digit");
      v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    return Bits(v, width);
  }

  std::string to_string() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(width_));
    for (int i = width_ - 1; i >= 0; --i) {
      out.push_back(((value_ >> i) & 1) ? '1' : '0');
    }
    return out;
  }

 private:
  std::uint64_t value_ = 0;
  int width_ = 0;
};

// SplitMix64 finalizer; used as the project-wide integer mixing function
// (ground-truth toy functions, seed derivation).
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ mix64(b));
}

}  // namespace caromlab
